//! Intrinsic torsion: printed components, classes, σ-swap, products.

mod common;

use common::{class, st};
use paratorsion::corpus;
use paratorsion::exalg::{pair_forms, KForm, Scalar};
use paratorsion::liealg::LieAlgebra;
use paratorsion::pstruct::Structure;
use paratorsion::ricforms::{bracket_f, hook, partial};
use paratorsion::torsion::*;

fn torsion_of(s: &str) -> (Structure, TorsionComponents) {
    let s = st(s);
    let t = intrinsic_torsion(&s);
    (s, t)
}

#[test]
fn nijenhuis_examples() {
    let (nh, nv) = nijenhuis(&st("0,0,0,0"));
    assert!(nh.is_zero() && nv.is_zero());
    let (nh, nv) = nijenhuis(&st("0,0,0,12"));
    assert!(!nh.is_zero() && nv.is_zero());
    let l = corpus::table1()[0].algebra(&corpus::table1_samples()[0]).unwrap();
    assert_eq!(nh_map_matrix(&Structure::standard(&l).unwrap()).rank(), 3);
}

#[test]
fn printed_components() {
    let (_, t) = torsion_of("0,0,0,12");
    assert!((1..=8).all(|i| (i == 2) != t.tau(i).is_zero()));
    assert!(t.lambda.is_zero());

    let (_, t) = torsion_of("0,0,46,0,12,0");
    assert_eq!(t.tau(2).to_string(), "2|12");
    assert_eq!(t.tau(6).to_string(), "6|46");
    assert!([1, 3, 4, 5, 7, 8].iter().all(|&i| t.tau(i).is_zero()) && t.lambda.is_zero());

    let (_, t) = torsion_of("0,0,0,0,0,45");
    assert_eq!(t.sum(3, 4).to_string(), "1/2*3|45");
    assert_eq!(classify(&t, 3), class(&[3]));

    let (_, t) = torsion_of("24,0,0,0,0,35");
    assert!(t.is_zero());
}

#[test]
fn classes() {
    assert_eq!(classify(&torsion_of("0,0,0,12").1, 2), class(&[2]));
    assert_eq!(classify(&torsion_of("0,0,0,0,0,0,56,57").1, 4), class(&[3]));
    assert!(classify(&torsion_of("0,0,0,0").1, 2).is_empty());
    assert_eq!(classify(&torsion_of("0,0,0,-1/3*23,-1/3*31,-1/3*12").1, 3), class(&[1]));
}

#[test]
fn sigma_swap_examples() {
    let s = st("0,0,0,12");
    let w = sigma_swap(&s).unwrap();
    assert_eq!(classify(&intrinsic_torsion(&w), 2), class(&[6]));
    let back = sigma_swap(&w).unwrap();
    assert_eq!(back.algebra().d1_all(), s.algebra().d1_all());

    let s = Structure::standard(&corpus::aff_cubed()).unwrap();
    let l0 = intrinsic_torsion(&s).lambda;
    let l1 = intrinsic_torsion(&sigma_swap(&s).unwrap()).lambda;
    assert!(!l0.is_zero());
    let mut want = KForm::zero(6);
    for i in 1..=6 {
        want.add_scaled(&KForm::basis(6, &[i]), &-l0.coeff(&[(i + 2) % 6 + 1]));
    }
    assert_eq!(l1, want);
}

#[test]
fn products() {
    let heis = st("0,0,0,12");
    let a4 = Structure::standard(&LieAlgebra::abelian(4)).unwrap();
    let c = |s: &Structure| classify(&intrinsic_torsion(s), s.n());
    assert_eq!(c(&product(&heis, &a4).unwrap()), class(&[2]));
    let p = product(&heis, &st("0,0,0,0,0,45")).unwrap();
    assert_eq!(c(&p), class(&[2, 3]));
    assert!(paratorsion::analysis::analyze(&p).unwrap().predicates.ricci_flat);
    assert!(c(&product(&a4, &a4).unwrap()).is_empty());
}

#[test]
fn composition_map() {
    let g = |a: &[usize], b: &[usize]| compose_classes(&class(a), &class(b));
    assert_eq!(g(&[4], &[]), class(&[3, 4]));
    assert_eq!(g(&[1], &[2]), class(&[1, 2]));
    assert_eq!(g(&[8], &[5]), class(&[5, 7, 8]));
    assert!(g(&[], &[]).is_empty());
}

#[test]
fn product_pairs_compose() {
    assert!(common::product_pairs().unwrap() > 100);
}

#[test]
fn round_trip_and_block_identities() {
    for (name, s) in common::population(40) {
        let t = intrinsic_torsion(&s);
        assert!(round_trip(&s, &t).ok(), "{name}");
        let n = s.n() as i64;
        // ∂(τ4)⌟α = (n-1) f4∧α and its mirror
        let lhs = hook(&partial(&s, t.tau(4)), s.alpha());
        assert_eq!(lhs, t.f4.wedge(s.alpha()).scale(&Scalar::int(n - 1)), "{name}");
        let lhs = hook(&partial(&s, t.tau(8)), s.beta());
        assert_eq!(lhs, t.f8.wedge(s.beta()).scale(&Scalar::int(n - 1)), "{name}");
        // F(τ8, τ4) = ⟨f4, f8⟩ F + f4∧f8
        let mut want = s.f().scale(&pair_forms(s.n(), &t.f4, &t.f8));
        want.add_scaled(&t.f4.wedge(&t.f8), &Scalar::one());
        assert_eq!(bracket_f(&s, t.tau(8), t.tau(4)), want, "{name}");
    }
}

#[test]
fn nearly_parakahler_flag() {
    let (_, t) = torsion_of("0,0,0,-1/3*23,-1/3*31,-1/3*12");
    assert!(strictly_nearly_parakahler(&classify(&t, 3)));
    assert!(!strictly_nearly_parakahler(&class(&[1, 2])));
}
