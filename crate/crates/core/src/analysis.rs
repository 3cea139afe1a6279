//! The full pipeline on one structure: torsion, oracle curvature, the
//! torsion formulas, and whether the two agree.

use crate::curvature::{ricci_oracle, torsion_from_connection, CurvatureData, Predicates};
use crate::exalg::{KForm, Matrix, Scalar, VectorValued};
use crate::liealg::AlgebraFlags;
use crate::pstruct::Structure;
use crate::ricforms::{partial, ricci_prime_formula, ricci_second_formula, scalar_formula};
use crate::torsion::{classify, intrinsic_torsion, nijenhuis, round_trip, TorsionClass, TorsionComponents};
use crate::Error;

/// Formula-versus-oracle checks. Every field is expected to be `true`; a
/// `false` is a bug.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Agreement {
    pub ric_prime: bool,
    pub ric_s2v: bool,
    pub ric_s2v_star: bool,
    pub scalar: bool,
    /// The forward equations rebuild `dF`, `dα`, `dβ`.
    pub round_trip: bool,
    /// `N^H = 4∂(τ1+τ2)`.
    pub nijenhuis_h: bool,
    /// `N^V = 4∂(τ5+τ6)`.
    pub nijenhuis_v: bool,
    /// The torsion read off `∇^{LC}` matches the one read off `d`.
    pub connection: bool,
}

impl Agreement {
    pub fn all(&self) -> bool {
        self.ric_prime
            && self.ric_s2v
            && self.ric_s2v_star
            && self.scalar
            && self.round_trip
            && self.nijenhuis_h
            && self.nijenhuis_v
            && self.connection
    }

    /// Names of the failing checks.
    pub fn failures(&self) -> Vec<&'static str> {
        [
            ("ric_prime", self.ric_prime),
            ("ric_s2v", self.ric_s2v),
            ("ric_s2v_star", self.ric_s2v_star),
            ("scalar", self.scalar),
            ("round_trip", self.round_trip),
            ("nijenhuis_h", self.nijenhuis_h),
            ("nijenhuis_v", self.nijenhuis_v),
            ("connection", self.connection),
        ]
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| n)
        .collect()
    }
}

/// Curvature computed from the torsion alone.
#[derive(Clone, Debug)]
pub struct FormulaValues {
    pub ric_prime: KForm,
    pub ric_s2v: Matrix,
    pub ric_s2v_star: Matrix,
    pub s: Scalar,
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub flags: AlgebraFlags,
    pub torsion: TorsionComponents,
    pub class: TorsionClass,
    pub nh: VectorValued,
    pub nv: VectorValued,
    pub curvature: CurvatureData,
    pub predicates: Predicates,
    pub formulas: FormulaValues,
    pub agreement: Agreement,
}

impl Analysis {
    /// `N = 0`.
    pub fn paracomplex(&self) -> bool {
        self.nh.is_zero() && self.nv.is_zero()
    }

    pub fn parakahler(&self) -> bool {
        self.class.is_parakahler()
    }
}

fn four_partial(s: &Structure, t: &TorsionComponents, a: usize, b: usize) -> VectorValued {
    partial(s, &t.sum(a, b)).scale(&Scalar::int(4))
}

/// Run everything on `s`.
pub fn analyze(s: &Structure) -> Result<Analysis, Error> {
    let n = s.n();
    let flags = s.algebra().flags();
    let torsion = intrinsic_torsion(s);
    let class = classify(&torsion, n);
    let (nh, nv) = nijenhuis(s);
    let curvature = ricci_oracle(s);
    let predicates = curvature.predicates(s);
    let (s2v, s2vs) = ricci_second_formula(s, &torsion)?;
    let formulas = FormulaValues {
        ric_prime: ricci_prime_formula(s, &torsion)?,
        ric_s2v: s2v,
        ric_s2v_star: s2vs,
        s: scalar_formula(s, &torsion)?,
    };
    let (tau_lc, lambda_lc) = torsion_from_connection(s, &curvature.connection);
    let agreement = Agreement {
        ric_prime: formulas.ric_prime == curvature.ric_prime,
        ric_s2v: formulas.ric_s2v == curvature.ric_s2v,
        ric_s2v_star: formulas.ric_s2v_star == curvature.ric_s2v_star,
        scalar: formulas.s == curvature.s,
        round_trip: round_trip(s, &torsion).ok(),
        nijenhuis_h: nh == four_partial(s, &torsion, 1, 2),
        nijenhuis_v: nv == four_partial(s, &torsion, 5, 6),
        connection: tau_lc == torsion.total() && lambda_lc == torsion.lambda,
    };
    Ok(Analysis { flags, torsion, class, nh, nv, curvature, predicates, formulas, agreement })
}
