use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::Scalar;
use crate::Error;

/// Set of basis indices `1..=64`, bit `I-1` standing for `e^I`.
pub type Mask = u64;

/// Largest supported dimension.
pub const MAX_DIM: usize = 64;

#[inline]
pub fn bit(i: usize) -> Mask {
    debug_assert!((1..=MAX_DIM).contains(&i));
    1u64 << (i - 1)
}

/// Increasing indices of a mask.
pub fn mask_indices(mut m: Mask) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        let t = m.trailing_zeros() as usize;
        out.push(t + 1);
        m &= m - 1;
    }
    out
}

/// Sort an index tuple; returns the permutation sign and the mask, or `None`
/// on a repeated index.
pub fn sort_sign(idx: &[usize]) -> Option<(bool, Mask)> {
    let mut m: Mask = 0;
    let mut inversions = 0u32;
    for &i in idx {
        let b = bit(i);
        if m & b != 0 {
            return None;
        }
        inversions += (m >> i).count_ones();
        m |= b;
    }
    Some((inversions % 2 == 1, m))
}

/// True when `e^A ∧ e^B = -e^{A∪B}` (disjoint masks assumed).
#[inline]
pub fn wedge_negative(a: Mask, b: Mask) -> bool {
    let mut n = 0u32;
    let mut m = b;
    while m != 0 {
        let j = m.trailing_zeros();
        n += (a >> (j + 1)).count_ones();
        m &= m - 1;
    }
    n % 2 == 1
}

/// Index group text: juxtaposed digits below dimension 10, dot separated above.
pub fn fmt_indices(idx: &[usize], dim: usize) -> String {
    let parts: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
    if dim >= 10 {
        parts.join(".")
    } else {
        parts.concat()
    }
}

/// Sparse alternating form on a fixed coframe `e^1..e^dim`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KForm {
    dim: usize,
    terms: BTreeMap<Mask, Scalar>,
}

impl KForm {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "dimension {dim} exceeds {MAX_DIM}");
        KForm { dim, terms: BTreeMap::new() }
    }

    pub fn constant(dim: usize, c: Scalar) -> Self {
        let mut f = KForm::zero(dim);
        f.add_term(0, c);
        f
    }

    /// `e^{i1 i2 ...}` with sign normalisation; zero on a repeated index.
    pub fn basis(dim: usize, idx: &[usize]) -> Self {
        KForm::monomial(dim, idx, Scalar::one())
    }

    pub fn monomial(dim: usize, idx: &[usize], c: Scalar) -> Self {
        assert!(idx.iter().all(|&i| (1..=dim).contains(&i)), "index out of range in {idx:?}");
        let mut f = KForm::zero(dim);
        if let Some((neg, m)) = sort_sign(idx) {
            f.add_term(m, if neg { -c } else { c });
        }
        f
    }

    pub fn from_mask(dim: usize, m: Mask, c: Scalar) -> Self {
        let mut f = KForm::zero(dim);
        f.add_term(m, c);
        f
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mask, &Scalar)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    /// Terms as index tuples, in lexicographic order.
    pub fn monomials(&self) -> Vec<(Vec<usize>, Scalar)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (mask_indices(*m), c.clone())).collect();
        v.sort();
        v
    }

    /// Common degree of all terms; `None` for the zero form or mixed degrees.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.count_ones() as usize);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn coeff_mask(&self, m: Mask) -> Scalar {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// Coefficient of `e^{idx}` for an arbitrary index order.
    pub fn coeff(&self, idx: &[usize]) -> Scalar {
        match sort_sign(idx) {
            None => Scalar::zero(),
            Some((neg, m)) => {
                let c = self.coeff_mask(m);
                if neg {
                    -c
                } else {
                    c
                }
            }
        }
    }

    /// Degree-0 part.
    pub fn scalar_part(&self) -> Scalar {
        self.coeff_mask(0)
    }

    pub fn add_term(&mut self, m: Mask, c: Scalar) {
        if c.is_zero() {
            return;
        }
        debug_assert!(m >> self.dim == 0 || self.dim == MAX_DIM);
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &KForm, c: &Scalar) {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(*m, v * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> KForm {
        if c.is_zero() {
            return KForm::zero(self.dim);
        }
        KForm { dim: self.dim, terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    /// Exterior product. Panics on a dimension mismatch; see [`KForm::checked_wedge`].
    pub fn wedge(&self, other: &KForm) -> KForm {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = KForm::zero(self.dim);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if a & b != 0 {
                    continue;
                }
                let p = x * y;
                out.add_term(a | b, if wedge_negative(*a, *b) { -p } else { p });
            }
        }
        out
    }

    pub fn checked_wedge(&self, other: &KForm) -> Result<KForm, Error> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(self.wedge(other))
    }

    /// Interior product `e_I ⌟ self`, inserting into the first slot.
    pub fn contract(&self, i: usize) -> KForm {
        let b = bit(i);
        let below = b - 1;
        let mut out = KForm::zero(self.dim);
        for (m, c) in &self.terms {
            if m & b == 0 {
                continue;
            }
            let neg = (m & below).count_ones() % 2 == 1;
            out.add_term(m & !b, if neg { -c } else { c.clone() });
        }
        out
    }

    /// `e_{jk} ⌟ σ = e_k ⌟ (e_j ⌟ σ)`, i.e. `σ(e_j, e_k, ...)`.
    pub fn contract_bivector(&self, j: usize, k: usize) -> KForm {
        self.contract(j).contract(k)
    }

    /// Contraction with a vector given by its components.
    pub fn contract_vector(&self, v: &[Scalar]) -> KForm {
        let mut out = KForm::zero(self.dim);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(&self.contract(i + 1), c);
            }
        }
        out
    }

    /// Keep only the terms whose mask satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(Mask) -> bool) -> KForm {
        KForm {
            dim: self.dim,
            terms: self.terms.iter().filter(|(m, _)| keep(**m)).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    /// Components of a 1-form as a vector of length `dim`.
    pub fn one_form_components(&self) -> Vec<Scalar> {
        (1..=self.dim).map(|i| self.coeff_mask(bit(i))).collect()
    }

    pub fn from_one_form_components(dim: usize, v: &[Scalar]) -> KForm {
        let mut f = KForm::zero(dim);
        for (i, c) in v.iter().enumerate() {
            f.add_term(bit(i + 1), c.clone());
        }
        f
    }
}

impl fmt::Display for KForm {
    /// Canonical text: lexicographic terms, `p/q` coefficients, `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (idx, c)) in self.monomials().into_iter().enumerate() {
            let g = fmt_indices(&idx, self.dim);
            write_term(f, k == 0, &c, &g)?;
        }
        Ok(())
    }
}

impl fmt::Debug for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KForm[{}]({})", self.dim, self)
    }
}

/// One signed term `c*body`, with `1*` elided; an empty body prints the coefficient.
pub(crate) fn write_term(f: &mut impl fmt::Write, first: bool, c: &Scalar, body: &str) -> fmt::Result {
    let neg = c.is_negative();
    let a = c.abs();
    if neg {
        f.write_str("-")?;
    } else if !first {
        f.write_str("+")?;
    }
    if body.is_empty() {
        write!(f, "{a}")
    } else if a.is_one() {
        f.write_str(body)
    } else {
        write!(f, "{a}*{body}")
    }
}

impl Add for &KForm {
    type Output = KForm;
    fn add(self, rhs: &KForm) -> KForm {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl Add for KForm {
    type Output = KForm;
    fn add(self, rhs: KForm) -> KForm {
        &self + &rhs
    }
}

impl Sub for &KForm {
    type Output = KForm;
    fn sub(self, rhs: &KForm) -> KForm {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::int(-1));
        out
    }
}

impl Sub for KForm {
    type Output = KForm;
    fn sub(self, rhs: KForm) -> KForm {
        &self - &rhs
    }
}

impl Neg for &KForm {
    type Output = KForm;
    fn neg(self) -> KForm {
        self.scale(&Scalar::int(-1))
    }
}

impl Neg for KForm {
    type Output = KForm;
    fn neg(self) -> KForm {
        -&self
    }
}
