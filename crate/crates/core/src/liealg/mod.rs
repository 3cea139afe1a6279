//! Lie algebras given by `de^K`, the exterior derivative, structural flags.

pub mod parse;

use std::fmt;

use crate::exalg::{mask_indices, KForm, Matrix, Scalar};
use crate::Error;

pub use parse::{parse_matrix, parse_params, parse_records, AlgRecord, Params};

/// A Lie algebra encoded by the differentials of its dual basis.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    d1: Vec<KForm>,
    name: Option<String>,
    /// `c[(I-1)*dim*dim + (J-1)*dim + (K-1)] = c^K_{IJ}`, `[e_I, e_J] = c^K_{IJ} e_K`.
    consts: Vec<Scalar>,
}

/// Outcome of [`LieAlgebra::check_jacobi`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiReport {
    pub ok: bool,
    pub witness: Option<(usize, KForm)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlgebraFlags {
    pub nilpotent: bool,
    pub unimodular: bool,
}

impl LieAlgebra {
    /// Build from `de^1..de^dim`. Jacobi is not checked here.
    pub fn from_d1(d1: Vec<KForm>) -> Result<Self, Error> {
        let dim = d1.len();
        for f in &d1 {
            if f.dim() != dim {
                return Err(Error::DimensionMismatch(f.dim(), dim));
            }
            if f.terms().any(|(m, _)| m.count_ones() != 2) {
                return Err(Error::Precondition("structure constants must be 2-forms".into()));
            }
        }
        let mut consts = vec![Scalar::zero(); dim * dim * dim];
        for (k, f) in d1.iter().enumerate() {
            for (m, c) in f.terms() {
                let ij = mask_indices(m);
                let (i, j) = (ij[0] - 1, ij[1] - 1);
                // de^K(e_I, e_J) = -e^K([e_I, e_J])
                consts[i * dim * dim + j * dim + k] = -c;
                consts[j * dim * dim + i * dim + k] = c.clone();
            }
        }
        Ok(LieAlgebra { dim, d1, name: None, consts })
    }

    pub fn parse_salamon(text: &str) -> Result<Self, Error> {
        Self::from_d1(parse::parse_tuple(text, None)?)
    }

    pub fn parse_with(text: &str, params: &Params) -> Result<Self, Error> {
        Self::from_d1(parse::parse_tuple(text, Some(params))?)
    }

    pub fn abelian(dim: usize) -> Self {
        Self::from_d1(vec![KForm::zero(dim); dim]).expect("zero forms")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `de^K`, 1-based.
    pub fn d1(&self, k: usize) -> &KForm {
        &self.d1[k - 1]
    }

    pub fn d1_all(&self) -> &[KForm] {
        &self.d1
    }

    /// `c^K_{IJ}`, all indices 1-based.
    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let d = self.dim;
        &self.consts[(i - 1) * d * d + (j - 1) * d + (k - 1)]
    }

    /// Components of `[e_I, e_J]`.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<Scalar> {
        (1..=self.dim).map(|k| self.c(i, j, k).clone()).collect()
    }

    /// Bracket of two vectors given by components.
    pub fn bracket_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.c(i + 1, j + 1, k + 1);
                    if !c.is_zero() {
                        *o += &ab * c;
                    }
                }
            }
        }
        out
    }

    /// Exterior derivative extended as an antiderivation.
    pub fn d(&self, a: &KForm) -> KForm {
        assert_eq!(a.dim(), self.dim, "dimension mismatch");
        let mut out = KForm::zero(self.dim);
        for (m, c) in a.terms() {
            // d(e^{k1..kp}) = Σ_p (-1)^p e^{..k_{p-1}} ∧ de^{k_p} ∧ e^{k_{p+1}..}
            //              = Σ_p (-1)^p e^{m \ k_p} ∧ de^{k_p}   (de^k is even)
            for (p, k) in mask_indices(m).into_iter().enumerate() {
                let dk = &self.d1[k - 1];
                if dk.is_zero() {
                    continue;
                }
                let rest = KForm::from_mask(self.dim, m & !crate::exalg::bit(k), Scalar::one());
                let coef = if p % 2 == 0 { c.clone() } else { -c };
                out.add_scaled(&rest.wedge(dk), &coef);
            }
        }
        out
    }

    pub fn checked_d(&self, a: &KForm) -> Result<KForm, Error> {
        if a.dim() != self.dim {
            return Err(Error::DimensionMismatch(a.dim(), self.dim));
        }
        Ok(self.d(a))
    }

    pub fn check_jacobi(&self) -> JacobiReport {
        for (k, f) in self.d1.iter().enumerate() {
            let dd = self.d(f);
            if !dd.is_zero() {
                return JacobiReport { ok: false, witness: Some((k + 1, dd)) };
            }
        }
        JacobiReport { ok: true, witness: None }
    }

    /// `Err(Error::Jacobi)` carrying the first failure.
    pub fn require_jacobi(&self) -> Result<(), Error> {
        match self.check_jacobi().witness {
            None => Ok(()),
            Some((index, w)) => Err(Error::Jacobi { index, witness: w.to_string() }),
        }
    }

    pub fn flags(&self) -> AlgebraFlags {
        AlgebraFlags { nilpotent: self.is_nilpotent(), unimodular: self.is_unimodular() }
    }

    /// Lower central series `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ...`, capped at `dim` steps.
    pub fn is_nilpotent(&self) -> bool {
        let n = self.dim;
        let mut span: Vec<Vec<Scalar>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
            .collect();
        for _ in 0..=n {
            if span.is_empty() {
                return true;
            }
            let mut gens = Vec::new();
            for i in 1..=n {
                let mut ei = vec![Scalar::zero(); n];
                ei[i - 1] = Scalar::one();
                for v in &span {
                    gens.push(self.bracket_vec(&ei, v));
                }
            }
            let next = row_basis(gens, n);
            if next.len() == span.len() {
                return false;
            }
            span = next;
        }
        span.is_empty()
    }

    /// `tr ad(e_K) = Σ_I c^I_{KI} = 0` for every `K`.
    pub fn is_unimodular(&self) -> bool {
        (1..=self.dim).all(|k| (1..=self.dim).map(|i| self.c(k, i, i)).sum::<Scalar>().is_zero())
    }

    /// Re-express the algebra in the coframe `ẽ^A = Σ_K M[A][K] e^K`.
    pub fn change_coframe(&self, m: &Matrix) -> Result<LieAlgebra, Error> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::DimensionMismatch(m.rows(), self.dim));
        }
        let inv = m.inverse()?;
        let mut d1 = Vec::with_capacity(self.dim);
        for a in 0..self.dim {
            let mut f = KForm::zero(self.dim);
            for k in 0..self.dim {
                f.add_scaled(&self.d1[k], &m[(a, k)]);
            }
            d1.push(substitute(&f, &inv));
        }
        let mut out = LieAlgebra::from_d1(d1)?;
        out.name = self.name.clone();
        Ok(out)
    }

    /// Salamon text, e.g. `0,0,0,12`.
    pub fn to_salamon(&self) -> String {
        self.d1.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Rewrite `a` in a new coframe given `e^K = Σ_B s[K][B] ẽ^B`.
pub fn substitute(a: &KForm, s: &Matrix) -> KForm {
    let dim = a.dim();
    let images: Vec<KForm> = (0..dim)
        .map(|k| KForm::from_one_form_components(dim, s.row(k)))
        .collect();
    let mut out = KForm::zero(dim);
    for (m, c) in a.terms() {
        let mut t = KForm::constant(dim, c.clone());
        for k in mask_indices(m) {
            t = t.wedge(&images[k - 1]);
            if t.is_zero() {
                break;
            }
        }
        out.add_scaled(&t, &Scalar::one());
    }
    out
}

/// Row-reduced basis of the span of `rows` (length-`n` vectors).
pub(crate) fn row_basis(rows: Vec<Vec<Scalar>>, n: usize) -> Vec<Vec<Scalar>> {
    if rows.is_empty() {
        return rows;
    }
    let (r, piv) = Matrix::from_rows(rows).rref();
    (0..piv.len()).map(|i| r.row(i).to_vec()).filter(|v| v.len() == n).collect()
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_salamon())
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(n) => write!(f, "LieAlgebra {n} ({})", self.to_salamon()),
            None => write!(f, "LieAlgebra ({})", self.to_salamon()),
        }
    }
}
