//! The worked examples, the Table 1 families, and seeded random coframes.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exalg::{Matrix, Scalar};
use crate::liealg::{parse_params, parse_records, LieAlgebra, Params};
use crate::pstruct::Structure;
use crate::Error;

/// Default seed for randomized suites; `PARATORSION_SEED` overrides it.
pub const DEFAULT_SEED: u64 = 20_240_611;

pub fn seed_from_env() -> u64 {
    std::env::var("PARATORSION_SEED").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SEED)
}

/// The Table 1 data file, transcribed once.
pub const TABLE1_ALG: &str = include_str!("../data/table1.alg");

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    /// An algebra printed among the worked examples.
    Example,
    /// A small algebra added to widen the mix of torsion classes.
    Auxiliary,
    Table1 { family: usize },
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub algebra: LieAlgebra,
    pub origin: Origin,
}

fn entry(name: &str, salamon: &str, origin: Origin) -> CorpusEntry {
    let algebra = LieAlgebra::parse_salamon(salamon).expect("corpus entry parses").with_name(name);
    CorpusEntry { name: name.to_string(), algebra, origin }
}

/// `(14,25,36,t14,t25,t36)`.
pub fn einstein_family(t: i64) -> LieAlgebra {
    LieAlgebra::parse_salamon(&format!("14,25,36,{t}*14,{t}*25,{t}*36"))
        .expect("family parses")
        .with_name(format!("einstein-t{t}"))
}

/// `de^1 = de^4 = e^{14}`, `de^2 = de^5 = e^{25}`, `de^3 = de^6 = e^{36}`.
pub fn aff_cubed() -> LieAlgebra {
    LieAlgebra::parse_salamon("14,25,36,14,25,36").expect("parses").with_name("aff3")
}

const W1_MODIFICATION: &str = "-2*l3*12-2*23+2*l2*13,\
-2*l3*l2*12-2*l2*23+2*l2*l2*13,\
-2*l3*23+2*l3*l2*13-2*l3*l3*12,\
l3*l2*36-l3*l2*25-l3*24-1/3*23+l2*34-l3*l3*26+l2*l2*35,\
1/3*13-34+l3*l2*15-l2*35+l3*l3*16-l3*36+l3*14,\
l3*26-1/3*12+24-l3*l2*16+l2*25-l2*14-l2*l2*15";

/// The deformation of the flat nearly parakähler example with parameters
/// `λ2`, `λ3`.
pub fn w1_modification(l2: &Scalar, l3: &Scalar) -> LieAlgebra {
    let mut p = Params::new();
    p.insert("l2".into(), l2.clone());
    p.insert("l3".into(), l3.clone());
    LieAlgebra::parse_with(W1_MODIFICATION, &p).expect("parses").with_name(format!("w1mod({l2},{l3})"))
}

/// The change of basis exhibiting `w1_modification` as `(0,0,0,12,14,24)`.
pub fn w1_modification_basis(l2: &Scalar, l3: &Scalar) -> Matrix {
    let z = Scalar::zero;
    let o = Scalar::one;
    let m = |x: i64| Scalar::int(x);
    Matrix::from_rows(vec![
        vec![l2.clone(), m(-1), z(), z(), z(), z()],
        vec![-l3, z(), o(), z(), z(), z()],
        vec![Scalar::frac(-1, 6), z(), z(), o(), l2.clone(), l3.clone()],
        vec![Scalar::frac(1, 3), z(), z(), o(), l2.clone(), l3.clone()],
        vec![z(), z(), z(), z(), z(), m(-1)],
        vec![z(), z(), z(), z(), m(-1), z()],
    ])
}

/// Every algebra printed as a worked example.
pub fn worked_examples() -> Vec<CorpusEntry> {
    let ex = || Origin::Example;
    let mut v = vec![
        entry("heis3xR", "0,0,0,12", ex()),
        entry("pk-ricciflat", "24,0,0,0,0,35", ex()),
        entry("w2w6", "0,0,46,0,12,0", ex()),
        entry("w3-flat", "0,0,0,0,0,45", ex()),
        entry("w3-8", "0,0,0,0,0,0,56,57", ex()),
        entry("nk-flat", "0,0,0,-1/3*23,-1/3*31,-1/3*12", ex()),
        entry("w3-ric", "0,0,0,0,45,46", ex()),
        entry("w4-ric", "-14,0,0,0,45,46", ex()),
    ];
    for t in [-1, 0, 1, 2] {
        v.push(CorpusEntry { name: format!("einstein-t{t}"), algebra: einstein_family(t), origin: ex() });
    }
    v.push(CorpusEntry { name: "aff3".into(), algebra: aff_cubed(), origin: ex() });
    for (a, b) in [(0, 0), (1, 0), (0, 1), (1, -2)] {
        let (a, b) = (Scalar::int(a), Scalar::int(b));
        let l = w1_modification(&a, &b);
        v.push(CorpusEntry { name: l.name().unwrap_or_default().to_string(), algebra: l, origin: ex() });
    }
    v
}

/// Small extra algebras, including non-nilpotent and non-unimodular ones.
pub fn auxiliary() -> Vec<CorpusEntry> {
    let aux = || Origin::Auxiliary;
    vec![
        entry("abelian4", "0,0,0,0", aux()),
        entry("abelian6", "0,0,0,0,0,0", aux()),
        entry("so3xR3", "23,31,12,0,0,0", aux()),
        entry("aff-x-R2", "12,0,0,0", aux()),
        entry("filiform4", "0,0,12,13", aux()),
        entry("heis-mixed", "0,0,0,0,0,14+25", aux()),
    ]
}

/// The five Table 1 families.
#[derive(Clone, Debug)]
pub struct Table1Family {
    pub family: usize,
    pub h: String,
    pub template: String,
}

impl Table1Family {
    /// `g` at the given parameters; `λ` and `μ` must be nonzero.
    pub fn algebra(&self, params: &Params) -> Result<LieAlgebra, Error> {
        for p in ["lambda", "mu"] {
            match params.get(p) {
                Some(v) if v.is_zero() => return Err(Error::ParamZero(p.into())),
                None => return Err(Error::Precondition(format!("parameter {p} missing"))),
                _ => {}
            }
        }
        let mut p = params.clone();
        p.entry("k".into()).or_insert_with(Scalar::zero);
        let l = LieAlgebra::parse_with(&self.template, &p)?;
        Ok(l.with_name(format!("table1-row{}", self.family)))
    }

    pub fn h_algebra(&self) -> Result<LieAlgebra, Error> {
        LieAlgebra::parse_salamon(&self.h)
    }
}

pub fn table1() -> Vec<Table1Family> {
    parse_records(TABLE1_ALG)
        .expect("table1.alg parses")
        .into_iter()
        .map(|r| Table1Family {
            family: r.family.expect("family number"),
            h: r.h.expect("h column"),
            template: r.salamon.expect("salamon line").trim().to_string(),
        })
        .collect()
}

/// The parameter samples `(λ, μ, k)` used throughout the suites.
pub fn table1_samples() -> Vec<Params> {
    ["lambda=1,mu=1,k=0", "lambda=2,mu=-3,k=1", "lambda=1/2,mu=1,k=-1"]
        .iter()
        .map(|s| parse_params(s).expect("sample parses"))
        .collect()
}

/// Table 1 algebras at the first sample.
pub fn table1_entries() -> Vec<CorpusEntry> {
    let p = &table1_samples()[0];
    table1()
        .into_iter()
        .map(|f| CorpusEntry {
            name: format!("table1-row{}", f.family),
            algebra: f.algebra(p).expect("row builds"),
            origin: Origin::Table1 { family: f.family },
        })
        .collect()
}

/// Examples, auxiliary algebras and Table 1 rows.
pub fn full_corpus() -> Vec<CorpusEntry> {
    let mut v = worked_examples();
    v.extend(auxiliary());
    v.extend(table1_entries());
    v
}

/// A random unipotent-ish coframe: unit diagonal, off-diagonal entries drawn
/// from `{0,0,0,1,-1,2}`, redrawn until invertible.
pub fn random_coframe(rng: &mut ChaCha8Rng, dim: usize) -> Matrix {
    const CHOICES: [i64; 6] = [0, 0, 0, 1, -1, 2];
    loop {
        let mut m = Matrix::identity(dim);
        for i in 0..dim {
            for j in 0..dim {
                if i != j {
                    m[(i, j)] = Scalar::int(*CHOICES.choose(rng).expect("nonempty"));
                }
            }
        }
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// `count` structures: corpus algebras of dimension at most `max_dim` under
/// random coframes, cycling through the algebras in order.
pub fn perturbations(seed: u64, count: usize, max_dim: usize) -> Vec<(String, Structure)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base: Vec<CorpusEntry> = worked_examples()
        .into_iter()
        .chain(auxiliary())
        .filter(|e| e.algebra.dim() <= max_dim)
        .collect();
    (0..count)
        .map(|k| {
            let e = &base[k % base.len()];
            let m = random_coframe(&mut rng, e.algebra.dim());
            let s = Structure::with_coframe(&e.algebra, &m).expect("valid perturbation");
            (format!("{}#{k}", e.name), s)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_satisfies_jacobi() {
        for e in full_corpus() {
            assert!(e.algebra.check_jacobi().ok, "{}", e.name);
        }
        for f in table1() {
            assert!(f.h_algebra().unwrap().check_jacobi().ok);
        }
    }

    #[test]
    fn table1_rejects_zero_parameters() {
        let f = &table1()[0];
        let p = parse_params("lambda=1,mu=0,k=0").unwrap();
        assert_eq!(f.algebra(&p), Err(Error::ParamZero("mu".into())));
    }

    #[test]
    fn w1_modification_is_0001214_24() {
        for (a, b) in [(0, 0), (1, 0), (0, 1), (1, -2), (3, 5)] {
            let (a, b) = (Scalar::int(a), Scalar::int(b));
            let l = w1_modification(&a, &b);
            assert!(l.check_jacobi().ok);
            let m = l.change_coframe(&w1_modification_basis(&a, &b)).unwrap();
            assert_eq!(m.to_salamon(), "0,0,0,12,14,24");
        }
    }
}
