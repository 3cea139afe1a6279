//! Shared population and checks for the integration suites and the
//! acceptance runner.
#![allow(dead_code)]

use paratorsion::analysis::{analyze, Analysis};
use paratorsion::corpus::{self, CorpusEntry};
use paratorsion::exalg::{bit, FormTensor, KForm, Scalar};
use paratorsion::liealg::LieAlgebra;
use paratorsion::pstruct::Structure;
use paratorsion::torsion::{classify, compose_classes, intrinsic_torsion, product, sigma_swap, TorsionClass};

pub type Check = Result<String, String>;

pub fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn st(salamon: &str) -> Structure {
    Structure::standard(&LieAlgebra::parse_salamon(salamon).unwrap()).unwrap()
}

pub fn analyzed(salamon: &str) -> Analysis {
    analyze(&st(salamon)).unwrap()
}

pub fn class(ws: &[usize]) -> TorsionClass {
    TorsionClass::from_flags(ws)
}

/// Corpus algebras in their printed coframes plus `count` seeded perturbations.
pub fn population(count: usize) -> Vec<(String, Structure)> {
    let seed = corpus::seed_from_env();
    let mut v: Vec<(String, Structure)> =
        corpus::full_corpus().into_iter().map(|e| (e.name.clone(), Structure::standard(&e.algebra).unwrap())).collect();
    v.extend(corpus::perturbations(seed, count, 8));
    v
}

pub fn analyzed_population(count: usize) -> Vec<(String, Structure, Analysis)> {
    population(count)
        .into_iter()
        .map(|(n, s)| {
            let a = analyze(&s).unwrap_or_else(|e| panic!("{n}: {e}"));
            (n, s, a)
        })
        .collect()
}

/// Components of `τ` and `λ` in the coframe with `e^1..e^n` negated.
pub fn flipped_tau(t: &FormTensor, n: usize) -> FormTensor {
    let low = (1u64 << n) - 1;
    let mut out = FormTensor::zero(t.dim());
    for (i, om) in t.iter() {
        let mut f = KForm::zero(t.dim());
        for (m, c) in om.terms() {
            let neg = (m & low).count_ones() as usize + usize::from(i > n);
            f.add_term(m, Scalar::sign_pow(neg) * c);
        }
        out.add_form(i, &f, &Scalar::one());
    }
    out
}

pub fn flipped_lambda(l: &KForm, n: usize) -> KForm {
    let mut out = KForm::zero(l.dim());
    for (m, c) in l.terms() {
        out.add_term(m, if m < bit(n + 1) { -c } else { c.clone() });
    }
    out
}

// ---- criteria ---------------------------------------------------------------

pub fn printed_examples() -> Check {
    let a = analyzed("0,0,0,12");
    ensure(a.class == class(&[2]), || format!("(0,0,0,12) class {}", a.class))?;
    ensure(a.predicates.ricci_flat && a.predicates.flat && !a.paracomplex(), || "(0,0,0,12) facts".into())?;

    let a = analyzed("24,0,0,0,0,35");
    ensure(a.parakahler() && a.predicates.ricci_flat, || format!("(24,0,0,0,0,35) class {}", a.class))?;
    let r = a.curvature.riemann.form.to_string();
    ensure(r == "-34|34", || format!("(24,0,0,0,0,35) curvature {r}"))?;

    let a = analyzed("0,0,46,0,12,0");
    ensure(a.torsion.tau(2).to_string() == "2|12" && a.torsion.tau(6).to_string() == "6|46", || {
        format!("(0,0,46,0,12,0) τ2 {} τ6 {}", a.torsion.tau(2), a.torsion.tau(6))
    })?;
    ensure(a.class == class(&[2, 6]) && a.predicates.ricci_flat, || "(0,0,46,0,12,0) class".into())?;
    let r = a.curvature.riemann.form.to_string();
    ensure(r == "26|26", || format!("(0,0,46,0,12,0) curvature {r}"))?;

    let a = analyzed("0,0,0,0,0,45");
    ensure(a.class == class(&[3]) && a.predicates.flat, || format!("(0,0,0,0,0,45) class {}", a.class))?;

    let a = analyzed("0,0,0,0,0,0,56,57");
    ensure(a.class == class(&[3]) && a.predicates.ricci_flat, || format!("8-dim class {}", a.class))?;
    let r = a.curvature.riemann.form.to_string();
    ensure(r == "-1/4*45|56-1/4*56|45", || format!("8-dim curvature {r}"))?;

    let a = analyzed("0,0,0,0,45,46");
    ensure(a.curvature.ric_text() == "-4|4", || format!("(0,0,0,0,45,46) ric {}", a.curvature.ric_text()))?;

    let a = analyzed("-14,0,0,0,45,46");
    ensure(a.curvature.ric_text() == "4|4", || format!("(-14,0,0,0,45,46) ric {}", a.curvature.ric_text()))?;
    ensure(a.curvature.ric_s2v.bilinear_text(3, 6) == "4|4" && a.curvature.ric_s2v_star.is_zero(), || {
        "(-14,0,0,0,45,46) ric not in the S²V block".into()
    })?;

    let a = analyzed("0,0,0,-1/3*23,-1/3*31,-1/3*12");
    ensure(a.predicates.flat && a.class == class(&[1]), || format!("flat NK class {}", a.class))?;
    Ok("8 printed examples reproduced".into())
}

/// Frozen oracle values of `s` for `t = -1, 0, 1, 2`.
pub const EINSTEIN_S: [(i64, i64); 4] = [(-1, -2), (0, 0), (1, 2), (2, 4)];

pub fn einstein_examples() -> Check {
    for (t, sv) in EINSTEIN_S {
        let s = Structure::standard(&corpus::einstein_family(t)).unwrap();
        let a = analyze(&s).unwrap();
        let want = Scalar::int(sv);
        ensure(a.predicates.einstein.as_ref() == Some(&want), || format!("t={t}: einstein {:?}", a.predicates.einstein))?;
        ensure(a.formulas.s == want, || format!("t={t}: formula s {}", a.formulas.s))?;
        ensure(a.predicates.ricci_flat == (t == 0), || format!("t={t}: ricci_flat {}", a.predicates.ricci_flat))?;
        if t == 1 {
            ensure(a.parakahler() && !want.is_zero(), || format!("t=1 class {}", a.class))?;
        }
    }
    Ok("t=-1,0,1,2 Einstein with s=-2,0,2,4; t=1 parakähler".into())
}

pub fn table1_reproduction() -> Check {
    let mut count = 0;
    for p in corpus::table1_samples() {
        for row in 1..=5 {
            let r = paratorsion::search::verify_family(row, &p).map_err(|e| format!("row {row}: {e}"))?;
            ensure(r.checks.all(), || format!("row {row} at {p:?}: {:?}", r.checks))?;
            ensure(r.analysis.agreement.all(), || format!("row {row}: {:?}", r.analysis.agreement.failures()))?;
            count += 1;
        }
    }
    Ok(format!("{count} family/sample pairs: nilpotent, class W1, τ1≠0, Ricci-flat both ways, R≠0"))
}

pub fn oracle_equivalence(pop: &[(String, Structure, Analysis)]) -> Check {
    for (name, _, a) in pop {
        let g = &a.agreement;
        ensure(g.ric_prime && g.ric_s2v && g.ric_s2v_star && g.scalar, || format!("{name}: {:?}", g.failures()))?;
    }
    Ok(format!("{} structures: ric′, ric″, s agree with the oracle", pop.len()))
}

pub fn structural_invariants(pop: &[(String, Structure, Analysis)]) -> Check {
    let mut paracomplex_nil = 0;
    let mut pk_unimodular = 0;
    for (name, s, a) in pop {
        let n = s.n();
        ensure(a.agreement.round_trip, || format!("{name}: round trip"))?;
        ensure(a.agreement.nijenhuis_h && a.agreement.nijenhuis_v, || format!("{name}: Nijenhuis"))?;
        if a.flags.nilpotent && a.paracomplex() {
            let mut want = a.torsion.f8.clone();
            want.add_scaled(&a.torsion.f4, &Scalar::int(-1));
            let want = want.scale(&Scalar::frac(n as i64 - 1, n as i64));
            ensure(a.torsion.lambda == want, || format!("{name}: λ = {} but (n-1)/n(f8-f4) = {want}", a.torsion.lambda))?;
            paracomplex_nil += 1;
        }
        if a.flags.unimodular && a.parakahler() {
            ensure(a.curvature.s.is_zero(), || format!("{name}: unimodular parakähler with s = {}", a.curvature.s))?;
            pk_unimodular += 1;
        }
        let sw = sigma_swap(s).map_err(|e| e.to_string())?;
        let c = classify(&intrinsic_torsion(&sw), n);
        ensure(c == a.class.swapped(), || format!("{name}: swap gives {c}, expected {}", a.class.swapped()))?;
    }
    let mut flips = 0;
    for e in corpus::full_corpus() {
        let s = Structure::standard(&e.algebra).unwrap();
        let f = Structure::with_coframe(&e.algebra, &Structure::neg_v_coframe(e.algebra.dim())).unwrap();
        let (a, b) = (analyze(&s).unwrap(), analyze(&f).unwrap());
        let n = s.n();
        ensure(b.curvature.s == -&a.curvature.s && b.formulas.s == -&a.formulas.s, || format!("{}: s not negated", e.name))?;
        ensure(b.torsion.total() == flipped_tau(&a.torsion.total(), n), || format!("{}: flipped τ", e.name))?;
        ensure(b.torsion.lambda == flipped_lambda(&a.torsion.lambda, n), || format!("{}: flipped λ", e.name))?;
        ensure(b.class == a.class, || format!("{}: flipped class", e.name))?;
        flips += 1;
    }
    let pairs = product_pairs()?;
    Ok(format!(
        "{} structures; λ relation on {paracomplex_nil}, s=0 on {pk_unimodular}, {flips} sign flips, {pairs} products",
        pop.len()
    ))
}

pub fn small_entries() -> Vec<CorpusEntry> {
    corpus::worked_examples().into_iter().chain(corpus::auxiliary()).filter(|e| e.algebra.dim() <= 6).collect()
}

/// `classify(A × B) = compose_classes(classify A, classify B)`.
pub fn product_pairs() -> Result<usize, String> {
    let entries = small_entries();
    let structs: Vec<(String, Structure, TorsionClass)> = entries
        .iter()
        .map(|e| {
            let s = Structure::standard(&e.algebra).unwrap();
            let c = classify(&intrinsic_torsion(&s), s.n());
            (e.name.clone(), s, c)
        })
        .collect();
    let mut count = 0;
    for (i, (na, sa, ca)) in structs.iter().enumerate() {
        for (nb, sb, cb) in &structs[i..] {
            let p = product(sa, sb).map_err(|e| e.to_string())?;
            let c = classify(&intrinsic_torsion(&p), p.n());
            let want = compose_classes(ca, cb);
            ensure(c == want, || format!("{na} x {nb}: {c} vs {want}"))?;
            count += 1;
        }
    }
    Ok(count)
}

/// `w1..w3, v1..v3` from the Ricci-contraction calibration, as pair tensors.
pub fn generators(n: usize) -> Vec<(&'static str, paratorsion::exalg::PairTensor)> {
    use paratorsion::exalg::PairTensor;
    let d = 2 * n;
    let e = |i: usize, j: usize| KForm::basis(d, &[i, j]);
    let one = Scalar::one();
    let mut w1 = PairTensor::zero(d);
    let mut w2 = PairTensor::zero(d);
    let mut w3 = PairTensor::zero(d);
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                w1.add_product(&e(n + i, n + j), &e(i, j), &one);
                w1.add_product(&e(i, j), &e(n + i, n + j), &one);
            }
            w2.add_product(&e(i, n + i), &e(j, n + j), &one);
            w3.add_product(&e(j, n + i), &e(i, n + j), &one);
        }
    }
    let sym = |p: &mut PairTensor, a: &KForm, b: &KForm| {
        p.add_product(a, b, &one);
        p.add_product(b, a, &one);
    };
    let (mut v1, mut v2, mut v3) = (PairTensor::zero(d), PairTensor::zero(d), PairTensor::zero(d));
    for k in 1..=n {
        sym(&mut v1, &e(n, k + n), &e(k, n + 1));
        sym(&mut v2, &e(n, n + 1), &e(k, n + k));
        if k != n {
            sym(&mut v3, &e(n + 1, k + n), &e(k, n));
        }
    }
    vec![("w1", w1), ("w2", w2), ("w3", w3), ("v1", v1), ("v2", v2), ("v3", v3)]
}

/// Expected values as `(multiple of g, multiple of e^n ⊙ e^{n+1})`.
pub fn generator_value(name: &str, n: i64) -> (i64, i64) {
    match name {
        "w1" => (-2 * (n - 1), 0),
        "w2" => (1, 0),
        "w3" => (n, 0),
        "v1" => (0, n),
        "v2" => (0, 2),
        "v3" => (0, n - 2),
        _ => unreachable!(),
    }
}

pub fn random_form(rng: &mut rand_chacha::ChaCha8Rng, dim: usize, degree: usize) -> KForm {
    use rand::Rng;
    let mut f = KForm::zero(dim);
    for _ in 0..6 {
        let mut idx: Vec<usize> = (1..=dim).collect();
        rand::seq::SliceRandom::shuffle(&mut idx[..], rng);
        let m = idx[..degree].iter().fold(0u64, |m, &i| m | bit(i));
        f.add_term(m, Scalar::frac(rng.gen_range(-5..=5), rng.gen_range(1..=3)));
    }
    f
}

pub fn calibration() -> Check {
    use paratorsion::pstruct::bidegree_basis;
    use paratorsion::ricforms::{hook, lambda_tilde, partial, ricci_contraction};
    use rand::SeedableRng;
    for n in 2..=4usize {
        let s = Structure::standard(&LieAlgebra::abelian(2 * n)).unwrap();
        for (name, t) in generators(n) {
            let (a, b) = generator_value(name, n as i64);
            let got = ricci_contraction(&s, &t);
            for i in 1..=2 * n {
                for j in 1..=2 * n {
                    let mut want = Scalar::int(a) * s.g(i, j);
                    if (i, j) == (n, n + 1) || (i, j) == (n + 1, n) {
                        want += Scalar::int(b);
                    }
                    ensure(got[(i - 1, j - 1)] == want, || format!("n={n} ric({name}) = {}", got.bilinear_text(0, 2 * n)))?;
                }
            }
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(corpus::seed_from_env());
    let mut random = 0;
    for n in 2..=4usize {
        let s = Structure::standard(&LieAlgebra::abelian(2 * n)).unwrap();
        for _ in 0..10 {
            let lambda = random_form(&mut rng, 2 * n, 1);
            let sigma = random_form(&mut rng, 2 * n, 2 + random % 2);
            let lhs = hook(&partial(&s, &lambda_tilde(&s, &lambda)), &sigma);
            let mut rhs = KForm::zero(2 * n);
            for ((p, q), part) in s.type_decompose(&sigma) {
                rhs.add_scaled(&lambda.wedge(&part), &Scalar::int(p as i64 - q as i64));
            }
            ensure(lhs == rhs, || format!("∂(λ̃)⌟σ mismatch for λ={lambda}, σ={sigma}"))?;
            random += 1;
        }
    }
    let mut basis_forms = 0;
    for n in 3..=4usize {
        let s = Structure::standard(&LieAlgebra::abelian(2 * n)).unwrap();
        for (p, q) in [(2, 1), (1, 2)] {
            for m in bidegree_basis(n, p, q) {
                let f = KForm::from_mask(2 * n, m, Scalar::one());
                let solved = s.lambda_op(&f).map_err(|e| e.to_string())?;
                ensure(solved == s.lambda_closed_21(&f), || format!("Λ({f}): {solved} vs {}", s.lambda_closed_21(&f)))?;
                basis_forms += 1;
            }
        }
    }
    Ok(format!("6 generators for n=2,3,4; {random} random ∂(λ̃) checks; Λ on {basis_forms} basis forms"))
}

pub fn search_pipeline() -> Check {
    use paratorsion::liealg::parse_params;
    use paratorsion::search::*;
    let l = corpus::table1()[0].algebra(&parse_params("lambda=1,mu=1,k=0").unwrap()).map_err(|e| e.to_string())?;
    let c = SplittingCandidate::coords(&l).map_err(|e| e.to_string())?;
    let cond = nh_conditions(&l, &c).map_err(|e| e.to_string())?;
    ensure(cond.all(), || format!("conditions {cond:?}"))?;
    let m = adapt_coframe(&l, &c).map_err(|e| e.to_string())?;
    let s = Structure::with_coframe(&l, &m).unwrap();
    let t = intrinsic_torsion(&s);
    ensure(t.tau(2).is_zero() && t.tau(5).is_zero() && t.tau(6).is_zero(), || "τ2, τ5, τ6 not zero".into())?;
    let space = solve_f_space(&l, &m).map_err(|e| e.to_string())?;
    ensure(in_span(&space, s.f()), || "standard F not in the solution space".into())?;
    let printed = solve_f_space(&l, &paratorsion::exalg::Matrix::identity(8)).map_err(|e| e.to_string())?;
    ensure(in_span(&printed, s.f()), || "standard F not in the space of the printed coframe".into())?;
    let rep = search(&l, &c, &SearchConfig::default()).map_err(|e| e.to_string())?;
    let w = rep.verification.len();
    ensure(w == 20, || format!("{w} witnesses, expected 20"))?;
    for v in &rep.verification {
        let a = &v.analysis;
        ensure(a.class.within(&[1]) && a.torsion.lambda.is_zero(), || format!("F={}: class {}", v.f, a.class))?;
        ensure(a.predicates.ricci_flat && a.formulas.s.is_zero(), || format!("F={}: not Ricci-flat", v.f))?;
    }
    Ok(format!("conditions hold, τ2=τ5=τ6=0, dim F-space {}, 20 witnesses in W1 and Ricci-flat", space.len()))
}

pub fn in_span(basis: &[KForm], f: &KForm) -> bool {
    use paratorsion::exalg::Matrix;
    let dim = f.dim();
    let masks: Vec<u64> = (1..=dim).flat_map(|i| (i + 1..=dim).map(move |j| bit(i) | bit(j))).collect();
    let row = |g: &KForm| masks.iter().map(|&m| g.coeff_mask(m)).collect::<Vec<_>>();
    let mut rows: Vec<Vec<Scalar>> = basis.iter().map(row).collect();
    let r0 = if rows.is_empty() { 0 } else { Matrix::from_rows(rows.clone()).rank() };
    rows.push(row(f));
    Matrix::from_rows(rows).rank() == r0
}
