//! Intrinsic torsion `τ1..τ8`, `λ` from `dF`, `dα`, `dβ`; the torsion class;
//! the Nijenhuis tensor; the `V ↔ H` swap and products.

use std::fmt;

use crate::exalg::{bit, pair_forms, FormTensor, KForm, Matrix, Scalar, VectorValued};
use crate::liealg::LieAlgebra;
use crate::pstruct::Structure;
use crate::ricforms::{hook, partial};
use crate::Error;

/// The ten torsion pieces together with the auxiliary forms.
///
/// `τ1, τ2 ∈ V*⊗Λ²V*`, `τ3, τ4 ∈ V*⊗Λ²V`, `τ5, τ6 ∈ V⊗Λ²V`, `τ7, τ8 ∈ V⊗Λ²V*`,
/// each stored as `Σ_I e^I ⊗ ω_I` with `Λ²V ≅ Λ²H*` through the metric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionComponents {
    taus: [FormTensor; 8],
    pub f4: KForm,
    pub f8: KForm,
    pub lambda: KForm,
    pub f2: KForm,
    pub f3: KForm,
    pub f6: KForm,
    pub f7: KForm,
}

impl TorsionComponents {
    /// `τ_i` for `i` in `1..=8`.
    pub fn tau(&self, i: usize) -> &FormTensor {
        &self.taus[i - 1]
    }

    pub fn taus(&self) -> &[FormTensor; 8] {
        &self.taus
    }

    /// `τ_a + τ_b`.
    pub fn sum(&self, a: usize, b: usize) -> FormTensor {
        self.tau(a).plus(self.tau(b))
    }

    /// `Σ τ_i`.
    pub fn total(&self) -> FormTensor {
        let mut t = FormTensor::zero(self.f4.dim());
        for x in &self.taus {
            t.add_scaled(x, &Scalar::one());
        }
        t
    }

    pub fn lambda10(&self, n: usize) -> KForm {
        self.lambda.filter(|m| m & ((1u64 << n) - 1) != 0)
    }

    pub fn lambda01(&self, n: usize) -> KForm {
        self.lambda.filter(|m| m & ((1u64 << n) - 1) == 0)
    }

    pub fn is_zero(&self) -> bool {
        self.taus.iter().all(FormTensor::is_zero) && self.lambda.is_zero()
    }
}

/// A subset of `{W1..W8}` plus the two `λ` flags.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct TorsionClass {
    pub w: [bool; 8],
    pub lambda10: bool,
    pub lambda01: bool,
}

impl TorsionClass {
    pub fn from_flags(ws: &[usize]) -> Self {
        let mut c = TorsionClass::default();
        for &i in ws {
            c.w[i - 1] = true;
        }
        c
    }

    pub fn has(&self, i: usize) -> bool {
        self.w[i - 1]
    }

    /// Indices `i` with `W_i` set.
    pub fn flags(&self) -> Vec<usize> {
        (1..=8).filter(|&i| self.w[i - 1]).collect()
    }

    /// No `W` component: the `GL(n,R)` torsion vanishes.
    pub fn is_parakahler(&self) -> bool {
        !self.w.iter().any(|&x| x)
    }

    pub fn is_empty(&self) -> bool {
        self.is_parakahler() && !self.lambda10 && !self.lambda01
    }

    /// `W` flags contained in `allowed`.
    pub fn within(&self, allowed: &[usize]) -> bool {
        self.flags().iter().all(|i| allowed.contains(i))
    }

    /// Labels such as `["W1", "W5", "lambda10"]`.
    pub fn labels(&self) -> Vec<String> {
        let mut v: Vec<String> = self.flags().iter().map(|i| format!("W{i}")).collect();
        if self.lambda10 {
            v.push("lambda10".into());
        }
        if self.lambda01 {
            v.push("lambda01".into());
        }
        v
    }

    /// The relabelling `W_i ↔ W_{i+4}` with the `λ` flags exchanged.
    pub fn swapped(&self) -> Self {
        let mut w = [false; 8];
        for i in 0..8 {
            w[(i + 4) % 8] = self.w[i];
        }
        TorsionClass { w, lambda10: self.lambda01, lambda01: self.lambda10 }
    }
}

impl fmt::Display for TorsionClass {
    /// Formal sum, e.g. `W1+W5`; `0` when parakähler with `λ = 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.labels();
        if l.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", l.join("+"))
        }
    }
}

pub fn classify(t: &TorsionComponents, n: usize) -> TorsionClass {
    let mut c = TorsionClass::default();
    for i in 0..8 {
        c.w[i] = !t.taus[i].is_zero();
    }
    c.lambda10 = !t.lambda10(n).is_zero();
    c.lambda01 = !t.lambda01(n).is_zero();
    c
}

/// `g(W(N) + W(M))`: union, then `W4 ↦ W3+W4` and `W8 ↦ W7+W8`.
pub fn compose_classes(a: &TorsionClass, b: &TorsionClass) -> TorsionClass {
    let mut c = TorsionClass::default();
    for i in 0..8 {
        c.w[i] = a.w[i] || b.w[i];
    }
    if c.w[3] {
        c.w[2] = true;
    }
    if c.w[7] {
        c.w[6] = true;
    }
    c.lambda10 = a.lambda10 || b.lambda10;
    c.lambda01 = a.lambda01 || b.lambda01;
    c
}

/// Extract the intrinsic torsion of `s`.
pub fn intrinsic_torsion(s: &Structure) -> TorsionComponents {
    let n = s.n();
    let dim = s.dim();
    let df = s.d(s.f());
    let da = s.d(s.alpha());
    let db = s.d(s.beta());
    let df30 = s.proj(&df, 3, 0);
    let df21 = s.proj(&df, 2, 1);
    let df12 = s.proj(&df, 1, 2);
    let df03 = s.proj(&df, 0, 3);
    let lam = |x: &KForm| s.lambda_op(x).expect("Λ on (2,1)/(1,2)");
    let f4 = lam(&df12).scale(&Scalar::frac(-1, 2));
    let f8 = lam(&df21).scale(&Scalar::frac(-1, 2));

    let mut t = std::array::from_fn::<_, 8, _>(|_| FormTensor::zero(dim));
    for i in 1..=n {
        t[0].add_form(i, &df30.contract(i), &Scalar::frac(1, 6));
        t[4].add_form(n + i, &df03.contract(n + i), &Scalar::frac(-1, 6));
    }
    for k in 1..=n {
        for i in 1..=n {
            let a = f4.coeff_mask(bit(n + i));
            let b = f8.coeff_mask(bit(i));
            t[3].add_form(k, &KForm::basis(dim, &[n + k, n + i]), &a);
            t[7].add_form(n + k, &KForm::basis(dim, &[k, i]), &b);
        }
    }
    let mut t34 = FormTensor::zero(dim);
    let mut t78 = FormTensor::zero(dim);
    for i in 1..=n {
        t34.add_form(i, &df12.contract(i), &Scalar::frac(-1, 2));
        t78.add_form(n + i, &df21.contract(n + i), &Scalar::frac(1, 2));
    }
    t[2] = t34.minus(&t[3]);
    t[6] = t78.minus(&t[7]);

    let half = Scalar::frac(1, 2);
    let mut db2 = s.proj(&db, 2, n - 1);
    db2.add_scaled(&hook(&partial(s, &t[0]), s.beta()), &Scalar::one());
    let mut da2 = s.proj(&da, n - 1, 2);
    da2.add_scaled(&hook(&partial(s, &t[4]), s.alpha()), &Scalar::one());
    for i in 1..=n {
        let ia = s.alpha().contract(i);
        let ib = s.beta().contract(n + i);
        for j in 1..=n {
            for k in 1..=n {
                if j == k {
                    continue;
                }
                let c2 = pair_forms(n, &db2, &KForm::basis(dim, &[n + j, n + k]).wedge(&ia));
                t[1].add_form(i, &KForm::basis(dim, &[j, k]), &(&half * &c2));
                let c6 = pair_forms(n, &da2, &KForm::basis(dim, &[j, k]).wedge(&ib));
                t[5].add_form(n + i, &KForm::basis(dim, &[n + j, n + k]), &(&half * &c6));
            }
        }
    }

    // λ from the pure-trace parts of dα and dβ
    let v_all: Vec<usize> = (1..=n).collect();
    let h_all: Vec<usize> = (n + 1..=dim).collect();
    let dan1 = s.proj(&da, n, 1);
    let db1n = s.proj(&db, 1, n);
    let mut lambda = KForm::zero(dim);
    let nn = n as i64;
    for j in 1..=n {
        let mut idx = v_all.clone();
        idx.push(n + j);
        let pi01 = Scalar::sign_pow(n) * dan1.coeff(&idx);
        let mut idx = vec![j];
        idx.extend(&h_all);
        let pi10 = db1n.coeff(&idx);
        let l01 = &pi01 * &Scalar::frac(-1, nn) - &f4.coeff_mask(bit(n + j)) * &Scalar::frac(nn - 1, nn);
        let l10 = &pi10 * &Scalar::frac(1, nn) + &f8.coeff_mask(bit(j)) * &Scalar::frac(nn - 1, nn);
        lambda.add_term(bit(n + j), l01);
        lambda.add_term(bit(j), l10);
    }

    let f3 = -hook(&partial(s, &t[2]), s.f());
    let f7 = -hook(&partial(s, &t[6]), s.f());
    let (f2, f6) = f2_f6(s, &t[1], &t[5]);
    TorsionComponents { taus: t, f4, f8, lambda, f2, f3, f6, f7 }
}

/// `f2 = Σ c (e_{n+k} ⌟ e_{n+j} ⌟ β) ∧ e^i` over `c e^i⊗e^{jk}` in `τ2`, and
/// `f6 = Σ c (e_{jk} ⌟ α) ∧ e^{n+i}` over `c e^{n+i}⊗e^{n+j,n+k}` in `τ6`.
fn f2_f6(s: &Structure, t2: &FormTensor, t6: &FormTensor) -> (KForm, KForm) {
    let n = s.n();
    let dim = s.dim();
    let mut f2 = KForm::zero(dim);
    for (i, om) in t2.iter() {
        for (idx, c) in om.monomials() {
            let (j, k) = (idx[0], idx[1]);
            let w = s.beta().contract(n + j).contract(n + k).wedge(&KForm::basis(dim, &[i]));
            f2.add_scaled(&w, &c);
        }
    }
    let mut f6 = KForm::zero(dim);
    for (i, om) in t6.iter() {
        for (idx, c) in om.monomials() {
            let (j, k) = (idx[0] - n, idx[1] - n);
            let w = s.alpha().contract_bivector(j, k).wedge(&KForm::basis(dim, &[i]));
            f6.add_scaled(&w, &c);
        }
    }
    (f2, f6)
}

/// Which forward equation failed, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundTrip {
    pub df: bool,
    pub dalpha: bool,
    pub dbeta: bool,
}

impl RoundTrip {
    pub fn ok(&self) -> bool {
        self.df && self.dalpha && self.dbeta
    }
}

/// Rebuild `dF`, `dα`, `dβ` from the torsion and compare.
pub fn round_trip(s: &Structure, t: &TorsionComponents) -> RoundTrip {
    let (df, da, db) = forward(s, t);
    RoundTrip { df: df == s.d(s.f()), dalpha: da == s.d(s.alpha()), dbeta: db == s.d(s.beta()) }
}

/// The forward equations: `dF`, `dα`, `dβ` in terms of the torsion.
pub fn forward(s: &Structure, t: &TorsionComponents) -> (KForm, KForm, KForm) {
    let n = s.n();
    let nn = Scalar::from(n);
    let n1 = Scalar::from(n - 1);
    let two = Scalar::int(2);
    let h = |x: &FormTensor, form: &KForm| hook(&partial(s, x), form);
    let mut df = KForm::zero(s.dim());
    for i in [1, 7, 5, 3] {
        df.add_scaled(&h(t.tau(i), s.f()), &Scalar::int(-1));
    }
    df.add_scaled(&t.f8.wedge(s.f()), &-&two);
    df.add_scaled(&t.f4.wedge(s.f()), &-&two);

    let mut a = t.lambda01(n).scale(&nn);
    a.add_scaled(&t.f4, &n1);
    let mut da = -a.wedge(s.alpha());
    da.add_scaled(&h(&t.sum(5, 6), s.alpha()), &Scalar::int(-1));

    let mut b = t.lambda10(n).scale(&nn);
    b.add_scaled(&t.f8, &-&n1);
    let mut db = b.wedge(s.beta());
    db.add_scaled(&h(&t.sum(1, 2), s.beta()), &Scalar::int(-1));
    (df, da, db)
}

/// `N(X,Y) = [X,Y] + [KX,KY] - K[KX,Y] - K[X,KY]` split into
/// `N^H ∈ Λ²V*⊗H` and `N^V ∈ Λ²H*⊗V`.
pub fn nijenhuis(s: &Structure) -> (VectorValued, VectorValued) {
    let n = s.n();
    let dim = s.dim();
    let l = s.algebra();
    let k = |i: usize| if i <= n { Scalar::one() } else { Scalar::int(-1) };
    let mut nh = VectorValued::zero(dim);
    let mut nv = VectorValued::zero(dim);
    for i in 1..=dim {
        for j in i + 1..=dim {
            let (ki, kj) = (k(i), k(j));
            let e = KForm::basis(dim, &[i, j]);
            for out in 1..=dim {
                let c = l.c(i, j, out);
                if c.is_zero() {
                    continue;
                }
                let ko = k(out);
                let v = c * &(Scalar::one() + &ki * &kj - &ko * &ki - &ko * &kj);
                if v.is_zero() {
                    continue;
                }
                if i <= n && j <= n {
                    nh.add_form(out, &e, &v);
                } else if i > n && j > n {
                    nv.add_form(out, &e, &v);
                } else {
                    unreachable!("N vanishes on mixed pairs");
                }
            }
        }
    }
    (nh, nv)
}

/// `Ñ^H : V° → Λ²V*`, `σ ↦ -4 (dσ)^{2,0}`, as a matrix whose column `K` is
/// the image of `e^{n+K}` in the basis `e^{ij}`, `i<j≤n`.
pub fn nh_map_matrix(s: &Structure) -> Matrix {
    let n = s.n();
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let mut m = Matrix::zeros(pairs.len(), n);
    for k in 1..=n {
        let d = s.proj(s.algebra().d1(n + k), 2, 0);
        for (r, (i, j)) in pairs.iter().enumerate() {
            m[(r, k - 1)] = Scalar::int(-4) * d.coeff(&[*i, *j]);
        }
    }
    m
}

/// The same algebra with `V` and `H` exchanged: coframe
/// `(e^{n+1}..e^{2n}, e^1..e^n)`.
pub fn sigma_swap(s: &Structure) -> Result<Structure, Error> {
    let n = s.n();
    let dim = s.dim();
    let mut p = Matrix::zeros(dim, dim);
    for a in 0..dim {
        p[(a, (a + n) % dim)] = Scalar::one();
    }
    Structure::with_coframe(s.original(), &p.mul(s.coframe()))
}

/// `A × B` with interleaved coframe `V_A, V_B, H_A, H_B`.
pub fn product(a: &Structure, b: &Structure) -> Result<Structure, Error> {
    let (n, m) = (a.n(), b.n());
    let dim = 2 * (n + m);
    let ia = |i: usize| if i <= n { i } else { n + m + (i - n) };
    let ib = |j: usize| if j <= m { n + j } else { 2 * n + m + (j - m) };
    let mut d1 = vec![KForm::zero(dim); dim];
    let embed = |f: &KForm, map: &dyn Fn(usize) -> usize| {
        let mut out = KForm::zero(dim);
        for (idx, c) in f.monomials() {
            let mapped: Vec<usize> = idx.iter().map(|&i| map(i)).collect();
            out.add_scaled(&KForm::basis(dim, &mapped), &c);
        }
        out
    };
    for k in 1..=2 * n {
        d1[ia(k) - 1] = embed(a.algebra().d1(k), &ia);
    }
    for k in 1..=2 * m {
        d1[ib(k) - 1] = embed(b.algebra().d1(k), &ib);
    }
    let mut l = LieAlgebra::from_d1(d1)?;
    if let (Some(x), Some(y)) = (a.original().name(), b.original().name()) {
        l = l.with_name(format!("{x} x {y}"));
    }
    Structure::standard(&l)
}

/// Strictly nearly parakähler: class within `{W1, W5}`, no `λ`, `τ1 ≠ 0`.
pub fn strictly_nearly_parakahler(c: &TorsionClass) -> bool {
    c.within(&[1, 5]) && c.has(1) && !c.lambda10 && !c.lambda01
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(s: &str) -> Structure {
        Structure::standard(&LieAlgebra::parse_salamon(s).unwrap()).unwrap()
    }

    #[test]
    fn goldberg_example_is_w2() {
        let s = st("0,0,0,12");
        let t = intrinsic_torsion(&s);
        assert_eq!(classify(&t, 2), TorsionClass::from_flags(&[2]));
        assert!(t.lambda.is_zero());
        assert!(round_trip(&s, &t).ok());
        let (nh, nv) = nijenhuis(&s);
        assert!(!nh.is_zero() && nv.is_zero());
    }

    #[test]
    fn printed_components() {
        let s = st("0,0,46,0,12,0");
        let t = intrinsic_torsion(&s);
        assert_eq!(t.tau(2).to_string(), "2|12");
        assert_eq!(t.tau(6).to_string(), "6|46");
        assert_eq!(classify(&t, 3), TorsionClass::from_flags(&[2, 6]));
        assert!(classify(&intrinsic_torsion(&st("24,0,0,0,0,35")), 3).is_empty());
    }

    #[test]
    fn compose_examples() {
        let g = |a: &[usize]| compose_classes(&TorsionClass::from_flags(a), &TorsionClass::default());
        assert_eq!(g(&[4]), TorsionClass::from_flags(&[3, 4]));
        assert_eq!(g(&[8]), TorsionClass::from_flags(&[7, 8]));
        assert_eq!(g(&[1, 2]), TorsionClass::from_flags(&[1, 2]));
        assert!(g(&[]).is_empty());
    }

    #[test]
    fn class_display() {
        assert_eq!(TorsionClass::from_flags(&[1, 5]).to_string(), "W1+W5");
        assert_eq!(TorsionClass::default().to_string(), "0");
        assert_eq!(TorsionClass::from_flags(&[2]).swapped(), TorsionClass::from_flags(&[6]));
    }
}
