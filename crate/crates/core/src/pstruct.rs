//! The `SL(n,R)`-structure of an adapted coframe: `F`, `α`, `β`, the neutral
//! metric, bidegrees and the `Λ` operator.
//!
//! `V = span(e_1..e_n)`, `H = span(e_{n+1}..e_{2n})`; a monomial has bidegree
//! `(p,q)` when `p` of its indices are at most `n`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::exalg::{bit, partner, KForm, Mask, Matrix, Scalar};
use crate::liealg::LieAlgebra;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Structure {
    original: LieAlgebra,
    coframe: Matrix,
    algebra: LieAlgebra,
    n: usize,
    f: KForm,
    alpha: KForm,
    beta: KForm,
}

/// Which symmetric square [`Structure::identify_s2`] targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `S²V`, read off `Λ^{n-1,1}` through `v ⊗ w ↦ (v⌟α) ∧ w`.
    V,
    /// `S²V*`, read off `Λ^{1,n-1}` through `v ⊗ w ↦ (v⌟β) ∧ w`.
    VStar,
}

impl Structure {
    /// The standard structure of the algebra's own coframe.
    pub fn standard(l: &LieAlgebra) -> Result<Self, Error> {
        Self::with_coframe(l, &Matrix::identity(l.dim()))
    }

    /// The structure whose adapted coframe is `ẽ^A = Σ_K M[A][K] e^K`.
    pub fn with_coframe(l: &LieAlgebra, m: &Matrix) -> Result<Self, Error> {
        let dim = l.dim();
        if dim % 2 == 1 || dim == 0 {
            return Err(Error::OddDimension(dim));
        }
        l.require_jacobi()?;
        let algebra = if *m == Matrix::identity(dim) { l.clone() } else { l.change_coframe(m)? };
        let n = dim / 2;
        let mut f = KForm::zero(dim);
        for i in 1..=n {
            f.add_term(bit(i) | bit(n + i), Scalar::one());
        }
        let alpha = KForm::basis(dim, &(1..=n).collect::<Vec<_>>());
        let beta = KForm::basis(dim, &(n + 1..=dim).collect::<Vec<_>>());
        Ok(Structure { original: l.clone(), coframe: m.clone(), algebra, n, f, alpha, beta })
    }

    /// Coframe negating `e^1..e^n` and keeping `e^{n+1}..e^{2n}`.
    pub fn neg_v_coframe(dim: usize) -> Matrix {
        let mut m = Matrix::identity(dim);
        for i in 0..dim / 2 {
            m[(i, i)] = Scalar::int(-1);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// The algebra written in the adapted coframe.
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn original(&self) -> &LieAlgebra {
        &self.original
    }

    pub fn coframe(&self) -> &Matrix {
        &self.coframe
    }

    pub fn f(&self) -> &KForm {
        &self.f
    }

    pub fn alpha(&self) -> &KForm {
        &self.alpha
    }

    pub fn beta(&self) -> &KForm {
        &self.beta
    }

    pub fn d(&self, a: &KForm) -> KForm {
        self.algebra.d(a)
    }

    /// `σ(K) = K ± n`.
    #[inline]
    pub fn partner(&self, k: usize) -> usize {
        partner(self.n, k)
    }

    /// `g(e_I, e_J)`: 1 on partner pairs, else 0.
    pub fn g(&self, i: usize, j: usize) -> Scalar {
        if self.partner(i) == j {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }

    /// `g(u, v)` for component vectors.
    pub fn g_vec(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        u.iter().enumerate().map(|(k, x)| x * &v[self.partner(k + 1) - 1]).sum()
    }

    /// The vector metrically dual to a 1-form: `Σ θ_L e_{σ(L)}`.
    pub fn sharp(&self, theta: &[Scalar]) -> Vec<Scalar> {
        (1..=self.dim()).map(|k| theta[self.partner(k) - 1].clone()).collect()
    }

    pub fn bidegree_of(&self, m: Mask) -> (usize, usize) {
        let low = m & ((1u64 << self.n) - 1);
        (low.count_ones() as usize, (m.count_ones() - low.count_ones()) as usize)
    }

    /// The `(p,q)` component of `a`.
    pub fn proj(&self, a: &KForm, p: usize, q: usize) -> KForm {
        a.filter(|m| self.bidegree_of(m) == (p, q))
    }

    pub fn type_decompose(&self, a: &KForm) -> BTreeMap<(usize, usize), KForm> {
        let mut out: BTreeMap<(usize, usize), KForm> = BTreeMap::new();
        for (m, c) in a.terms() {
            out.entry(self.bidegree_of(m)).or_insert_with(|| KForm::zero(a.dim())).add_term(m, c.clone());
        }
        out
    }

    /// `C(σ) = Σ_i e_i ⌟ (e_{n+i} ⌟ σ)`.
    pub fn trace_c(&self, a: &KForm) -> KForm {
        let mut out = KForm::zero(a.dim());
        for i in 1..=self.n {
            out.add_scaled(&a.contract(self.n + i).contract(i), &Scalar::one());
        }
        out
    }

    /// `Λ(σ)`: the unique `γ` with `σ - F∧γ` primitive, componentwise on the
    /// supported bidegrees `(1,1)`, `(2,1)`, `(1,2)`, `(2,2)`.
    pub fn lambda_op(&self, a: &KForm) -> Result<KForm, Error> {
        let mut out = KForm::zero(a.dim());
        for ((r, s), part) in self.type_decompose(a) {
            if !matches!((r, s), (1, 1) | (2, 1) | (1, 2) | (2, 2)) {
                return Err(Error::UnsupportedBidegree(r, s));
            }
            let table = lambda_table(self.n, r, s)?;
            for (m, c) in part.terms() {
                out.add_scaled(&table[&m], c);
            }
        }
        Ok(out)
    }

    /// `Λ` of a `(1,1)`-form as a scalar.
    pub fn lambda_scalar(&self, a: &KForm) -> Result<Scalar, Error> {
        Ok(self.lambda_op(a)?.scalar_part())
    }

    /// `Λ(γ) = -1/(n-1) Σ e_i ⌟ e_{n+i} ⌟ γ` on `(2,1)` and `(1,2)`.
    pub fn lambda_closed_21(&self, a: &KForm) -> KForm {
        assert!(self.n >= 2);
        self.trace_c(a).scale(&Scalar::frac(-1, self.n as i64 - 1))
    }

    /// `a = trace_free + scale·F` with `Λ(trace_free) = 0`, for `a ∈ Λ^{1,1}`.
    pub fn split_f_trace(&self, a: &KForm) -> Result<(KForm, Scalar), Error> {
        if let Some((&(r, s), _)) = self.type_decompose(a).iter().find(|(k, _)| **k != (1, 1)) {
            return Err(Error::UnsupportedBidegree(r, s));
        }
        let c = self.lambda_scalar(a)?;
        let mut tf = a.clone();
        tf.add_scaled(&self.f, &-&c);
        Ok((tf, c))
    }

    /// The symmetric tensor of `a ∈ Λ^{n-1,1}` (side `V`) or `Λ^{1,n-1}`
    /// (side `V*`): invert the identification, then take `½(X + Xᵀ)`.
    pub fn identify_s2(&self, a: &KForm, side: Side) -> Result<Matrix, Error> {
        let x = self.identify_raw(a, side)?;
        Ok(x.add(&x.transpose()).scale(&Scalar::frac(1, 2)))
    }

    /// The preimage in `V ⊗ V` (resp. `V* ⊗ V*`) before symmetrizing.
    pub fn identify_raw(&self, a: &KForm, side: Side) -> Result<Matrix, Error> {
        let n = self.n;
        let want = match side {
            Side::V => (n - 1, 1),
            Side::VStar => (1, n - 1),
        };
        for (m, _) in a.terms() {
            let b = self.bidegree_of(m);
            if b != want {
                return Err(Error::UnsupportedBidegree(b.0, b.1));
            }
        }
        let mut x = Matrix::zeros(n, n);
        for i in 1..=n {
            for j in 1..=n {
                let img = match side {
                    Side::V => self.alpha.contract(i).wedge(&KForm::basis(self.dim(), &[n + j])),
                    Side::VStar => self.beta.contract(n + i).wedge(&KForm::basis(self.dim(), &[j])),
                };
                let (m, v) = img.terms().next().map(|(m, v)| (m, v.clone())).expect("nonzero image");
                let c = a.coeff_mask(m);
                if !c.is_zero() {
                    x[(i - 1, j - 1)] = c / v;
                }
            }
        }
        Ok(x)
    }

    /// The structure in `.alg` record form, with a `coframe:` line.
    pub fn to_record_text(&self) -> String {
        let mut s = String::new();
        if let Some(name) = self.original.name() {
            s.push_str(&format!("name: {name}\n"));
        }
        s.push_str(&format!("dim: {}\n", self.dim()));
        s.push_str(&format!("salamon: {}\n", self.original.to_salamon()));
        let rows: Vec<String> = self
            .coframe
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        s.push_str(&format!("coframe: {}\n", rows.join("; ")));
        s
    }
}

type LambdaTable = HashMap<Mask, KForm>;
/// Keyed by `(n, r, s)`.
type LambdaCache = Mutex<HashMap<(usize, usize, usize), Arc<Result<LambdaTable, Error>>>>;

fn lambda_cache() -> &'static LambdaCache {
    static CACHE: OnceLock<LambdaCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Monomials of bidegree `(p,q)` for a given `n`, in increasing mask order.
pub fn bidegree_basis(n: usize, p: usize, q: usize) -> Vec<Mask> {
    let v: Vec<Mask> = subsets(n, p).into_iter().collect();
    let h: Vec<Mask> = subsets(n, q).into_iter().map(|m| m << n).collect();
    let mut out: Vec<Mask> = v.iter().flat_map(|a| h.iter().map(move |b| a | b)).collect();
    out.sort_unstable();
    out
}

fn subsets(n: usize, k: usize) -> Vec<Mask> {
    (0u64..(1u64 << n)).filter(|m| m.count_ones() as usize == k).collect()
}

/// `Λ` on every basis monomial of `Λ^{r,s}`, solved from `C(F∧γ) = C(σ)`.
fn lambda_table(n: usize, r: usize, s: usize) -> Result<Arc<LambdaTable>, Error> {
    let key = (n, r, s);
    let cached = lambda_cache().lock().expect("lambda cache").get(&key).cloned();
    let res = match cached {
        Some(r) => r,
        None => {
            let built = Arc::new(build_lambda_table(n, r, s));
            lambda_cache().lock().expect("lambda cache").insert(key, built.clone());
            built
        }
    };
    match &*res {
        Ok(t) => Ok(Arc::new(t.clone())),
        Err(e) => Err(e.clone()),
    }
}

fn build_lambda_table(n: usize, r: usize, s: usize) -> Result<LambdaTable, Error> {
    let dim = 2 * n;
    let not_direct = Error::NotDirect { n, r, s };
    if r == 0 || s == 0 || r > n || s > n {
        return Err(not_direct);
    }
    let mut fform = KForm::zero(dim);
    for i in 1..=n {
        fform.add_term(bit(i) | bit(n + i), Scalar::one());
    }
    let c = |a: &KForm| {
        let mut out = KForm::zero(dim);
        for i in 1..=n {
            out.add_scaled(&a.contract(n + i).contract(i), &Scalar::one());
        }
        out
    };
    let unknowns = bidegree_basis(n, r - 1, s - 1);
    let targets = bidegree_basis(n, r, s);
    let rows_of = bidegree_basis(n, r - 1, s - 1);
    let row_index: HashMap<Mask, usize> = rows_of.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let to_col = |f: &KForm| {
        let mut v = vec![Scalar::zero(); rows_of.len()];
        for (m, x) in f.terms() {
            v[row_index[&m]] = x.clone();
        }
        v
    };
    let mut a = Matrix::zeros(rows_of.len(), unknowns.len());
    for (j, g) in unknowns.iter().enumerate() {
        let col = to_col(&c(&fform.wedge(&KForm::from_mask(dim, *g, Scalar::one()))));
        for (i, x) in col.into_iter().enumerate() {
            a[(i, j)] = x;
        }
    }
    // Direct iff γ ↦ C(F∧γ) is injective and C has the same rank on Λ^{r,s}.
    if a.rank() != unknowns.len() {
        return Err(not_direct);
    }
    let mut cm = Matrix::zeros(rows_of.len(), targets.len());
    for (j, t) in targets.iter().enumerate() {
        for (i, x) in to_col(&c(&KForm::from_mask(dim, *t, Scalar::one()))).into_iter().enumerate() {
            cm[(i, j)] = x;
        }
    }
    if cm.rank() != unknowns.len() {
        return Err(not_direct);
    }
    let mut table = LambdaTable::new();
    for (j, t) in targets.iter().enumerate() {
        let rhs: Vec<Scalar> = (0..rows_of.len()).map(|i| cm[(i, j)].clone()).collect();
        let x = a.solve_unique(&rhs)?;
        let mut g = KForm::zero(dim);
        for (k, m) in unknowns.iter().enumerate() {
            g.add_term(*m, x[k].clone());
        }
        table.insert(*t, g);
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(s: &str) -> Structure {
        Structure::standard(&LieAlgebra::parse_salamon(s).unwrap()).unwrap()
    }

    #[test]
    fn standard_forms() {
        let s = st("0,0,0,12");
        assert_eq!(s.f().to_string(), "13+24");
        assert_eq!(s.alpha().to_string(), "12");
        assert_eq!(s.beta().to_string(), "34");
        assert_eq!(st("0,0,0,0,0,0").f().to_string(), "14+25+36");
        assert!(matches!(Structure::standard(&LieAlgebra::abelian(5)), Err(Error::OddDimension(5))));
    }

    #[test]
    fn lambda_examples() {
        let s = st("0,0,0,0,0,0");
        assert_eq!(s.lambda_op(s.f()).unwrap().to_string(), "1");
        assert_eq!(s.lambda_op(&KForm::basis(6, &[1, 4, 5])).unwrap().to_string(), "1/2*5");
        assert!(s.lambda_op(&KForm::basis(6, &[1, 5])).unwrap().is_zero());
        assert!(matches!(s.lambda_op(&KForm::basis(6, &[1, 2])), Err(Error::UnsupportedBidegree(2, 0))));
    }

    #[test]
    fn split_trace_n2() {
        let s = st("0,0,0,0");
        let (tf, c) = s.split_f_trace(&KForm::basis(4, &[1, 3])).unwrap();
        assert_eq!(c, Scalar::frac(1, 2));
        assert_eq!(tf.to_string(), "1/2*13-1/2*24");
    }

    #[test]
    fn identify_n2() {
        let s = st("0,0,0,0");
        let x = s.identify_s2(&KForm::basis(4, &[2, 3]), Side::V).unwrap();
        assert_eq!(x[(0, 0)], Scalar::one());
        assert!(s.identify_s2(&KForm::basis(4, &[1, 2]), Side::V).is_err());
    }
}
