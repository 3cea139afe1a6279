//! Ricci curvature from the torsion alone: the alternation map `∂`, the
//! brackets `F(·,·)` and `F̄(·,·)`, the Ricci contraction, and the formulas
//! for `ric′`, `ric″` and `s`.

use crate::exalg::{bit, pair_forms, pair_tensors, FormTensor, KForm, Matrix, PairTensor, Scalar, VectorValued};
use crate::pstruct::{Side, Structure};
use crate::torsion::TorsionComponents;
use crate::Error;

/// `M_ω(v) = (v ⌟ ω)^♯`: the endomorphism of a 2-form under `Λ²T* ≅ 𝔤𝔩`.
fn m_omega(s: &Structure, omega: &KForm, y: usize) -> Vec<(usize, Scalar)> {
    omega.contract(y).terms().map(|(m, c)| (s.partner(m.trailing_zeros() as usize + 1), c.clone())).collect()
}

/// `∂(Σ_I e^I ⊗ ω_I) = Σ_{I,J} e^{IJ} ⊗ (e_J ⌟ ω_I)^♯`.
pub fn partial(s: &Structure, t: &FormTensor) -> VectorValued {
    let dim = s.dim();
    let mut out = VectorValued::zero(dim);
    for (i, om) in t.iter() {
        for j in 1..=dim {
            if i == j {
                continue;
            }
            let e = KForm::basis(dim, &[i, j]);
            for (k, c) in m_omega(s, om, j) {
                out.add_form(k, &e, &c);
            }
        }
    }
    out
}

/// `P ⌟ σ = Σ_K η_K ∧ (e_K ⌟ σ)` for `P = Σ_K η_K ⊗ e_K`.
pub fn hook(p: &VectorValued, sigma: &KForm) -> KForm {
    let mut out = KForm::zero(sigma.dim());
    for (k, eta) in p.iter() {
        let c = sigma.contract(k);
        if !c.is_zero() {
            out.add_scaled(&eta.wedge(&c), &Scalar::one());
        }
    }
    out
}

/// `P ⌟ t = Σ_K η_K ⊗ t_K` for a `T* ⊗ Λ²T*` tensor `t`.
pub fn hook_tt(p: &VectorValued, t: &FormTensor) -> PairTensor {
    let mut out = PairTensor::zero(t.dim());
    for (k, eta) in p.iter() {
        if let Some(om) = t.get(k) {
            out.add_product(eta, om, &Scalar::one());
        }
    }
    out
}

/// `λ̃ = Σ λ_I e^I ⊗ F`.
pub fn lambda_tilde(s: &Structure, lambda: &KForm) -> FormTensor {
    let mut t = FormTensor::zero(s.dim());
    for (m, c) in lambda.terms() {
        t.add_form(m.trailing_zeros() as usize + 1, s.f(), c);
    }
    t
}

/// `F̃(x, y) = ⟨x^{0,2}, y^{2,0}⟩ - ⟨x^{2,0}, y^{0,2}⟩` on 2-forms.
pub fn f_tilde(s: &Structure, x: &KForm, y: &KForm) -> Scalar {
    let n = s.n();
    pair_forms(n, &s.proj(x, 0, 2), &s.proj(y, 2, 0)) - pair_forms(n, &s.proj(x, 2, 0), &s.proj(y, 0, 2))
}

/// `F(t, u) = Σ_{I,H} F̃(t_I, u_H) e^{IH}`.
pub fn bracket_f(s: &Structure, t: &FormTensor, u: &FormTensor) -> KForm {
    let mut out = KForm::zero(s.dim());
    for (i, x) in t.iter() {
        for (h, y) in u.iter() {
            let c = f_tilde(s, x, y);
            out.add_scaled(&KForm::basis(s.dim(), &[i, h]), &c);
        }
    }
    out
}

/// `F(e^A, e^B) = F(e_{σA}, e_{σB})`.
fn f_cov(s: &Structure, a: usize, b: usize) -> Scalar {
    let n = s.n();
    if a > n && b + n == a {
        Scalar::one()
    } else if a <= n && b == a + n {
        Scalar::int(-1)
    } else {
        Scalar::zero()
    }
}

/// `F̄(e^I⊗e^J⊗e^K, e^H⊗e^L⊗e^M) = -F(e^I,e^H) F(e^J,e^L) e^K∧e^M`, with each
/// 2-form expanded as `e^J⊗e^K - e^K⊗e^J`.
pub fn bracket_fbar(s: &Structure, t: &FormTensor, u: &FormTensor) -> KForm {
    let dim = s.dim();
    let mut out = KForm::zero(dim);
    for (i, x) in t.iter() {
        for (h, y) in u.iter() {
            let fih = f_cov(s, i, h);
            if fih.is_zero() {
                continue;
            }
            for (xi, c1) in x.monomials() {
                for (yi, c2) in y.monomials() {
                    let (j0, k0) = (xi[0], xi[1]);
                    let (l0, m0) = (yi[0], yi[1]);
                    for (j, k, s1) in [(j0, k0, 1), (k0, j0, -1)] {
                        for (l, m, s2) in [(l0, m0, 1), (m0, l0, -1)] {
                            let fjl = f_cov(s, j, l);
                            if fjl.is_zero() {
                                continue;
                            }
                            let c = -(&fih * &fjl) * &c1 * &c2 * Scalar::int(s1 * s2);
                            out.add_scaled(&KForm::basis(dim, &[k, m]), &c);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Ricci contraction of `Σ_{I<J} e^{IJ} ⊗ ω_{IJ}`, 2-form values read as
/// endomorphisms: `ric(X,Y) = Σ_K (R(e_K, e_X) e_Y)^K`.
pub fn ricci_contraction(s: &Structure, r: &PairTensor) -> Matrix {
    let dim = s.dim();
    let mut out = Matrix::zeros(dim, dim);
    for (m, om) in r.iter() {
        let (i, j) = (m.trailing_zeros() as usize + 1, 64 - m.leading_zeros() as usize);
        for y in 1..=dim {
            let v = om.contract(y);
            // (M_ω e_Y)^K = ω(e_Y, e_{σK})
            let c_i = v.coeff_mask(bit(s.partner(i)));
            if !c_i.is_zero() {
                out[(j - 1, y - 1)] += c_i;
            }
            let c_j = v.coeff_mask(bit(s.partner(j)));
            if !c_j.is_zero() {
                out[(i - 1, y - 1)] -= c_j;
            }
        }
    }
    out
}

/// `X + Xᵀ`: the map `ε` applied to `[X] = ½(X + Xᵀ)`.
fn eps(x: &Matrix) -> Matrix {
    x.add(&x.transpose())
}

/// Named summands of the `ric′` formula, before their coefficients.
#[derive(Clone, Debug)]
pub struct RicPrimeTerms {
    pub terms: Vec<(&'static str, Scalar, KForm)>,
}

impl RicPrimeTerms {
    pub fn total(&self, dim: usize) -> KForm {
        let mut out = KForm::zero(dim);
        for (_, c, f) in &self.terms {
            out.add_scaled(f, c);
        }
        out
    }
}

pub fn ricci_prime_terms(s: &Structure, t: &TorsionComponents) -> Result<RicPrimeTerms, Error> {
    let n = s.n();
    let ni = n as i64;
    let dim = s.dim();
    let mut terms = Vec::new();
    if n >= 3 {
        let mut x = s.d(&t.f3);
        x.add_scaled(&hook(&partial(s, &t.sum(7, 8)), &t.f3), &Scalar::one());
        let lam = s.lambda_op(&s.proj(&x, 2, 2))?;
        let (tf, _) = s.split_f_trace(&lam)?;
        terms.push(("A", Scalar::int(2 - ni), tf));
    }
    let df4 = s.proj(&s.d(&t.f4), 1, 1);
    let lam_df4 = s.lambda_scalar(&df4)?;
    terms.push(("df4", Scalar::int(2 * (ni - 2)), df4));
    terms.push(("f4^f8", Scalar::int(-2 * (ni - 1)), t.f4.wedge(&t.f8)));
    let mut coef = Scalar::int(2 * ni) * &lam_df4;
    coef -= Scalar::int(4 * (ni - 1)) * pair_forms(n, &t.f4, &t.f8);
    terms.push(("F", coef, s.f().clone()));
    let br = |a: &FormTensor, b: &FormTensor| bracket_f(s, a, b);
    terms.push(("F(t1,t5)", Scalar::int(-10), br(t.tau(1), t.tau(5))));
    terms.push(("F(t1,t6)", Scalar::int(2), br(t.tau(1), t.tau(6))));
    terms.push(("F(t2,t5)", Scalar::int(-4), br(t.tau(2), t.tau(5))));
    terms.push(("F(t2,t6)", Scalar::int(-2), br(t.tau(2), t.tau(6))));
    terms.push(("Fbar(t2,t6)", Scalar::int(2), bracket_fbar(s, t.tau(2), t.tau(6))));
    terms.push(("F(t3,t7+t8)", Scalar::int(-2), br(t.tau(3), &t.sum(7, 8))));
    terms.push(("F(t4,t7)", Scalar::int(-2 * (ni - 1)), br(t.tau(4), t.tau(7))));
    terms.push(("dlambda", Scalar::int(ni), s.proj(&s.d(&t.lambda), 1, 1)));
    debug_assert!(terms.iter().all(|(_, _, f)| f.dim() == dim));
    Ok(RicPrimeTerms { terms })
}

/// `ric′` as a `(1,1)`-form, from the torsion.
pub fn ricci_prime_formula(s: &Structure, t: &TorsionComponents) -> Result<KForm, Error> {
    Ok(ricci_prime_terms(s, t)?.total(s.dim()))
}

fn outer(u: &[Scalar], v: &[Scalar]) -> Matrix {
    Matrix::from_rows(u.iter().map(|a| v.iter().map(|b| a * b).collect()).collect())
}

/// The two blocks of `ric″`: the `S²V` block `ric(e_{n+i}, e_{n+j})` and the
/// `S²V*` block `ric(e_i, e_j)`, each as an `n×n` matrix.
pub fn ricci_second_formula(s: &Structure, t: &TorsionComponents) -> Result<(Matrix, Matrix), Error> {
    let n = s.n();
    let ni = n as i64;
    let dim = s.dim();
    let a: Vec<Scalar> = (1..=n).map(|i| t.f4.coeff_mask(bit(n + i))).collect();
    let b: Vec<Scalar> = (1..=n).map(|i| t.f8.coeff_mask(bit(i))).collect();
    let l01: Vec<Scalar> = (1..=n).map(|i| t.lambda.coeff_mask(bit(n + i))).collect();
    let l10: Vec<Scalar> = (1..=n).map(|i| t.lambda.coeff_mask(bit(i))).collect();
    let sign = Scalar::sign_pow(n - 1) * Scalar::int(ni - 1);
    let half_nn1 = Scalar::frac(ni * (ni - 1), 2);
    let n1n2 = Scalar::int((ni - 1) * (ni - 2));
    let nn = Scalar::int(ni);

    // S²V
    let mut f4a = KForm::zero(dim);
    for (i, c) in a.iter().enumerate() {
        f4a.add_scaled(&s.alpha().contract(i + 1), c);
    }
    let mut x = eps(&s.identify_s2(&s.proj(&s.d(&f4a), n - 1, 1), Side::V)?).scale(&sign);
    x = x.add(&eps(&outer(&l01, &a).add(&outer(&a, &l01))).scale(&half_nn1));
    x = x.add(&eps(&outer(&a, &a)).scale(&n1n2));
    let mut g6 = s.d(&t.f6);
    g6.add_scaled(&t.lambda10(n).wedge(&t.f6), &nn);
    x = x.add(&eps(&s.identify_s2(&s.proj(&g6, n - 1, 1), Side::V)?));
    let mut rt = hook_tt(&partial(s, t.tau(7)), t.tau(5));
    rt.add_scaled(&hook_tt(&partial(s, t.tau(3)), t.tau(3)), &Scalar::one());
    let rc = ricci_contraction(s, &rt).scale(&Scalar::int(-1));
    x = x.add(&eps(&block(&rc, n, n)));

    // S²V*
    let mut f8b = KForm::zero(dim);
    for (i, c) in b.iter().enumerate() {
        f8b.add_scaled(&s.beta().contract(n + i + 1), c);
    }
    let mut y = eps(&s.identify_s2(&s.proj(&s.d(&f8b), 1, n - 1), Side::VStar)?).scale(&sign);
    y = y.sub(&eps(&outer(&l10, &b).add(&outer(&b, &l10))).scale(&half_nn1));
    y = y.add(&eps(&outer(&b, &b)).scale(&n1n2));
    let mut g2 = s.d(&t.f2);
    g2.add_scaled(&t.lambda01(n).wedge(&t.f2), &-&nn);
    y = y.add(&eps(&s.identify_s2(&s.proj(&g2, 1, n - 1), Side::VStar)?));
    let mut rt = hook_tt(&partial(s, t.tau(3)), t.tau(1));
    rt.add_scaled(&hook_tt(&partial(s, t.tau(7)), t.tau(7)), &Scalar::one());
    let rc = ricci_contraction(s, &rt).scale(&Scalar::int(-1));
    y = y.add(&eps(&block(&rc, 0, n)));
    Ok((x, y))
}

/// The `n×n` block of `m` starting at `(off, off)`.
fn block(m: &Matrix, off: usize, n: usize) -> Matrix {
    let mut out = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = m[(off + i, off + j)].clone();
        }
    }
    out
}

/// Scalar curvature from the torsion.
pub fn scalar_formula(s: &Structure, t: &TorsionComponents) -> Result<Scalar, Error> {
    let n = s.n();
    let ni = n as i64;
    let p = |a: usize, b: usize| pair_tensors(n, t.tau(a), t.tau(b));
    let mut v = Scalar::frac(10, ni) * p(1, 5);
    v -= Scalar::frac(2, ni) * p(2, 6);
    v -= Scalar::frac(2, ni) * p(3, 7);
    v += Scalar::int(4 * (ni - 1)) * s.lambda_scalar(&s.proj(&s.d(&t.f4), 1, 1))?;
    v -= Scalar::frac(2 * (ni - 1) * (2 * ni - 1), ni) * pair_forms(n, &t.f4, &t.f8);
    v += Scalar::int(ni) * s.lambda_scalar(&s.proj(&s.d(&t.lambda), 1, 1))?;
    Ok(v)
}
