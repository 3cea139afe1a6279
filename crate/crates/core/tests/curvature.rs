//! The Levi-Civita oracle and the torsion formulas for the Ricci tensor.

mod common;

use common::{analyzed, st};
use paratorsion::analysis::analyze;
use paratorsion::corpus;
use paratorsion::curvature::{levi_civita, ricci_oracle, riemann};
use paratorsion::exalg::{pair_tensors, FormTensor, KForm, Scalar};
use paratorsion::liealg::LieAlgebra;
use paratorsion::pstruct::Structure;
use paratorsion::ricforms::*;
use paratorsion::torsion::intrinsic_torsion;

#[test]
fn connection_is_metric_and_torsion_free() {
    for e in corpus::full_corpus() {
        let s = Structure::standard(&e.algebra).unwrap();
        let c = levi_civita(&s);
        assert_eq!(c.check(&s), (true, true), "{}", e.name);
        assert_eq!(riemann(&c, &s).check_symmetries(&s), (true, true), "{}", e.name);
    }
    assert!(levi_civita(&st("0,0,0,0,0,0")).is_zero());
}

#[test]
fn printed_curvatures() {
    let r = |s: &str| ricci_oracle(&st(s)).riemann.form.to_string();
    assert_eq!(r("24,0,0,0,0,35"), "-34|34");
    assert_eq!(r("0,0,46,0,12,0"), "26|26");
    assert_eq!(r("0,0,0,0,0,0,56,57"), "-1/4*45|56-1/4*56|45");
    assert_eq!(r("0,0,0,-1/3*23,-1/3*31,-1/3*12"), "0");
}

#[test]
fn printed_ricci() {
    // e^4 is an H-covector for n = 3, so both live in the S²V block
    let d = ricci_oracle(&st("0,0,0,0,45,46"));
    assert_eq!(d.ric_text(), "-4|4");
    assert_eq!(d.ric_s2v.bilinear_text(3, 6), "-4|4");
    let d = ricci_oracle(&st("-14,0,0,0,45,46"));
    assert_eq!(d.ric_text(), "4|4");
    assert!(d.ric_s2v_star.is_zero() && d.ric_prime.is_zero());
    assert!(ricci_oracle(&st("0,0,0,0")).ric.is_zero());
}

#[test]
fn predicates() {
    let p = analyzed("24,0,0,0,0,35").predicates;
    assert!(p.ricci_flat && !p.flat);
    let s = Structure::standard(&corpus::aff_cubed()).unwrap();
    let a = analyze(&s).unwrap();
    assert!(a.parakahler());
    assert_eq!(a.predicates.einstein, Some(Scalar::int(2)));
    assert_eq!(a.formulas.ric_prime, s.f().scale(&Scalar::int(2)));
}

#[test]
fn formula_examples() {
    let s = st("0,0,0,12");
    let t = intrinsic_torsion(&s);
    assert!(ricci_prime_formula(&s, &t).unwrap().is_zero());
    let s = st("0,0,0,0");
    let t = intrinsic_torsion(&s);
    assert!(ricci_prime_formula(&s, &t).unwrap().is_zero());
    let (x, y) = ricci_second_formula(&s, &t).unwrap();
    assert!(x.is_zero() && y.is_zero());
    assert_eq!(scalar_formula(&s, &t).unwrap(), Scalar::zero());

    for salamon in ["0,0,0,0,45,46", "-14,0,0,0,45,46"] {
        let s = st(salamon);
        let t = intrinsic_torsion(&s);
        let (x, y) = ricci_second_formula(&s, &t).unwrap();
        let o = ricci_oracle(&s);
        assert_eq!((x, y), (o.ric_s2v, o.ric_s2v_star), "{salamon}");
    }
}

#[test]
fn einstein_family_constants() {
    for (t, sv) in common::EINSTEIN_S {
        let s = Structure::standard(&corpus::einstein_family(t)).unwrap();
        let tor = intrinsic_torsion(&s);
        assert_eq!(scalar_formula(&s, &tor).unwrap(), Scalar::int(sv), "t={t}");
    }
}

#[test]
fn oracle_equivalence() {
    let pop = common::analyzed_population(100);
    common::oracle_equivalence(&pop).unwrap();
    common::structural_invariants(&pop).unwrap();
}

#[test]
fn pure_classes_and_corollaries() {
    let pop = common::analyzed_population(60);
    let mut seen = (0, 0, 0);
    for (name, s, a) in &pop {
        let no_lambda = a.torsion.lambda.is_zero();
        if no_lambda && (a.class.within(&[1]) || a.class.within(&[2])) {
            assert!(a.predicates.ricci_flat, "{name}: class {}", a.class);
            seen.0 += 1;
        }
        if s.dim() == 6 && no_lambda && a.class.within(&[1, 5]) && a.class.has(1) {
            assert!(a.predicates.einstein.is_some(), "{name}: nearly parakähler but not Einstein");
            seen.1 += 1;
        }
        let n = s.n();
        let fn1 = (1..n).fold(KForm::constant(s.dim(), Scalar::one()), |acc, _| acc.wedge(s.f()));
        if a.flags.unimodular && s.d(&fn1).is_zero() {
            let t = &a.torsion;
            let ni = n as i64;
            let p = |x, y| pair_tensors(n, t.tau(x), t.tau(y));
            let want = Scalar::frac(10, ni) * p(1, 5) - Scalar::frac(2, ni) * p(2, 6) - Scalar::frac(2, ni) * p(3, 7);
            assert_eq!(a.curvature.s, want, "{name}: balanced scalar curvature");
            seen.2 += 1;
        }
        if a.flags.nilpotent && a.class.within(&[4, 8]) && !a.torsion.is_zero() {
            assert!(a.predicates.einstein.is_none(), "{name}: nilpotent W4+W8 Einstein");
        }
    }
    assert!(seen.0 > 0 && seen.1 > 0 && seen.2 > 0, "{seen:?}");
}

#[test]
fn calibration() {
    common::calibration().unwrap();
}

#[test]
fn bracket_generator() {
    // F(e^i⊗e_{jk}, e^{n+h}⊗e_{n+j,n+k}) = e^i∧e^{n+h}, vectors turned into covectors by g
    let n = 3;
    let s = Structure::standard(&LieAlgebra::abelian(2 * n)).unwrap();
    for (i, h, j, k) in [(1, 2, 1, 2), (2, 3, 1, 3), (3, 1, 2, 3)] {
        let t = FormTensor::simple(i, KForm::basis(6, &[n + j, n + k]));
        let u = FormTensor::simple(n + h, KForm::basis(6, &[j, k]));
        assert_eq!(bracket_f(&s, &t, &u), KForm::basis(6, &[i, n + h]));
    }
    let s0 = st("0,0,0,0,0,45");
    let t = intrinsic_torsion(&s0);
    assert!(bracket_f(&s0, t.tau(1), &FormTensor::zero(6)).is_zero());
    assert!(partial(&s0, &FormTensor::zero(6)).is_zero());
}
