//! Search for Ricci-flat structures with torsion in `W1`: pick a splitting
//! `g = V ⊕ H` with `H` a subalgebra, test the conditions on `Ñ^H`, adapt
//! the coframe so that `τ2 = τ5 = τ6 = 0`, then solve the linear conditions
//! on `F ∈ Λ^{1,1}` and look for nondegenerate solutions.

use std::collections::BTreeMap;

use crate::analysis::{analyze, Analysis};
use crate::corpus::table1;
use crate::exalg::{bit, KForm, Matrix, PairTensor, Scalar, VectorValued};
use crate::liealg::{parse_matrix, LieAlgebra, Params};
use crate::pstruct::Structure;
use crate::torsion::{nh_map_matrix, nijenhuis};
use crate::Error;

/// `g = V ⊕ H`, each side given by `n` vectors in the algebra's frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingCandidate {
    v: Vec<Vec<Scalar>>,
    h: Vec<Vec<Scalar>>,
}

impl SplittingCandidate {
    /// Checks that `V ⊕ H = g` and `[H, H] ⊆ H`.
    pub fn new(l: &LieAlgebra, v: Vec<Vec<Scalar>>, h: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let dim = l.dim();
        if dim % 2 == 1 || dim == 0 {
            return Err(Error::OddDimension(dim));
        }
        let n = dim / 2;
        if v.len() != n || h.len() != n {
            return Err(Error::DimensionMismatch(n, v.len().min(h.len())));
        }
        if let Some(bad) = v.iter().chain(&h).find(|x| x.len() != dim) {
            return Err(Error::DimensionMismatch(dim, bad.len()));
        }
        let c = SplittingCandidate { v, h };
        if c.frame().det().is_zero() {
            return Err(Error::Precondition("V and H are not complementary".into()));
        }
        let a = l.change_coframe(&c.coframe())?;
        if (1..=n).any(|k| a.d1(k).terms().any(|(m, _)| m & low_mask(n) == 0)) {
            return Err(Error::Precondition("H is not a subalgebra".into()));
        }
        Ok(c)
    }

    /// `V = ⟨e_1..e_n⟩`, `H = ⟨e_{n+1}..e_{2n}⟩`.
    pub fn coords(l: &LieAlgebra) -> Result<Self, Error> {
        let dim = l.dim();
        let unit = |i: usize| (0..dim).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect();
        let n = dim / 2;
        Self::new(l, (0..n).map(unit).collect(), (n..dim).map(unit).collect())
    }

    /// Rows `1..n` span `V`, rows `n+1..2n` span `H`.
    pub fn from_rows(l: &LieAlgebra, m: &Matrix) -> Result<Self, Error> {
        let rows = m.to_rows();
        let n = rows.len() / 2;
        Self::new(l, rows[..n].to_vec(), rows[n..].to_vec())
    }

    pub fn v_basis(&self) -> &[Vec<Scalar>] {
        &self.v
    }

    pub fn h_basis(&self) -> &[Vec<Scalar>] {
        &self.h
    }

    /// Columns are the frame `v_1..v_n, h_1..h_n`.
    fn frame(&self) -> Matrix {
        Matrix::from_rows(self.v.iter().chain(&self.h).cloned().collect()).transpose()
    }

    /// The coframe dual to `v_1..v_n, h_1..h_n`.
    pub fn coframe(&self) -> Matrix {
        self.frame().inverse().expect("checked in new")
    }
}

fn low_mask(n: usize) -> u64 {
    (1u64 << n) - 1
}

/// The conditions on `Ñ^H`, plus `d(Λ^{0,n}) ⊆ Λ^{2,n-1}`.
///
/// Witness forms are written in the coframe dual to the candidate's basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NhConditions {
    pub rank: usize,
    pub rank3: bool,
    pub simple_image: bool,
    /// Some `η ∈ W` with `η ∧ η ≠ 0`.
    pub non_simple_witness: Option<KForm>,
    pub no_common_factor: bool,
    /// Some `σ ∈ V* ∖ 0` with `σ ∧ W = 0`.
    pub common_factor: Option<KForm>,
    pub dbeta_type_ok: bool,
}

impl NhConditions {
    /// The three hypotheses needed by [`adapt_coframe`].
    pub fn adaptable(&self) -> bool {
        self.rank3 && self.simple_image && self.no_common_factor
    }

    pub fn all(&self) -> bool {
        self.adaptable() && self.dbeta_type_ok
    }
}

/// Basis of the column space of `m`, each column read as a 2-form on `V`.
fn image_forms(m: &Matrix, n: usize, dim: usize) -> Vec<KForm> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let (r, piv) = m.transpose().rref();
    (0..piv.len())
        .map(|row| {
            let mut f = KForm::zero(dim);
            for (k, (i, j)) in pairs.iter().enumerate() {
                f.add_term(bit(*i) | bit(*j), r[(row, k)].clone());
            }
            f
        })
        .collect()
}

/// Kernel of `σ ↦ (σ ∧ η_b)_b` on `V*`.
fn common_factors(w: &[KForm], n: usize, dim: usize) -> Vec<Vec<Scalar>> {
    let mut eqs: BTreeMap<(usize, u64), Vec<Scalar>> = BTreeMap::new();
    for a in 1..=n {
        let sigma = KForm::basis(dim, &[a]);
        for (b, eta) in w.iter().enumerate() {
            for (m, c) in sigma.wedge(eta).terms() {
                eqs.entry((b, m)).or_insert_with(|| vec![Scalar::zero(); n])[a - 1] += c;
            }
        }
    }
    if eqs.is_empty() {
        return Matrix::identity(n).to_rows();
    }
    Matrix::from_rows(eqs.into_values().collect()).kernel()
}

fn split_structure(l: &LieAlgebra, c: &SplittingCandidate) -> Result<Structure, Error> {
    Structure::with_coframe(l, &c.coframe())
}

pub fn nh_conditions(l: &LieAlgebra, c: &SplittingCandidate) -> Result<NhConditions, Error> {
    let s = split_structure(l, c)?;
    let (n, dim) = (s.n(), s.dim());
    let m = nh_map_matrix(&s);
    let w = image_forms(&m, n, dim);
    let mut non_simple_witness = None;
    'outer: for (a, x) in w.iter().enumerate() {
        for y in &w[a..] {
            if !x.wedge(y).is_zero() {
                // (x + y)² = 2 x∧y when x² = y² = 0
                non_simple_witness = Some(if x == y || !x.wedge(x).is_zero() { x.clone() } else if !y.wedge(y).is_zero() { y.clone() } else { x + y });
                break 'outer;
            }
        }
    }
    let common_factor = common_factors(&w, n, dim).into_iter().next().map(|v| {
        let mut f = KForm::zero(dim);
        for (a, x) in v.into_iter().enumerate() {
            f.add_term(bit(a + 1), x);
        }
        f
    });
    let db = s.d(s.beta());
    Ok(NhConditions {
        rank: w.len(),
        rank3: w.len() == 3,
        simple_image: non_simple_witness.is_none(),
        non_simple_witness,
        no_common_factor: common_factor.is_none(),
        common_factor,
        dbeta_type_ok: db == s.proj(&db, 2, n - 1),
    })
}

/// Extend the rows of `rows` (independent, length `n`) to a basis of `Q^n`.
fn extend_basis(mut rows: Vec<Vec<Scalar>>, n: usize) -> Vec<Vec<Scalar>> {
    for i in 0..n {
        if rows.len() == n {
            break;
        }
        let mut e = vec![Scalar::zero(); n];
        e[i] = Scalar::one();
        rows.push(e);
        if Matrix::from_rows(rows.clone()).rank() < rows.len() {
            rows.pop();
        }
    }
    rows
}

fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
    let (p, q) = (a.rows(), b.rows());
    let mut m = Matrix::zeros(p + q, p + q);
    for i in 0..p {
        for j in 0..p {
            m[(i, j)] = a[(i, j)].clone();
        }
    }
    for i in 0..q {
        for j in 0..q {
            m[(p + i, p + j)] = b[(i, j)].clone();
        }
    }
    m
}

/// A coframe, relative to the algebra's own, in which
/// `N^H = e^{23}⊗e_{n+1} + e^{31}⊗e_{n+2} + e^{12}⊗e_{n+3}`.
pub fn adapt_coframe(l: &LieAlgebra, c: &SplittingCandidate) -> Result<Matrix, Error> {
    let cond = nh_conditions(l, c)?;
    if !cond.adaptable() {
        return Err(Error::Precondition(format!(
            "splitting not adaptable (rank {}, simple {}, no common factor {})",
            cond.rank, cond.simple_image, cond.no_common_factor
        )));
    }
    let s = split_structure(l, c)?;
    let (n, dim) = (s.n(), s.dim());
    let w = image_forms(&nh_map_matrix(&s), n, dim);

    // W = Λ²U; U is spanned by the factors of the image forms.
    let mut factors = Vec::new();
    for eta in &w {
        factors.extend(common_factors(std::slice::from_ref(eta), n, dim));
    }
    let (r, piv) = Matrix::from_rows(factors).rref();
    if piv.len() != 3 {
        return Err(Error::Precondition("image of N^H is not Λ² of a 3-space".into()));
    }
    let u: Vec<Vec<Scalar>> = (0..3).map(|i| r.row(i).to_vec()).collect();
    let a = Matrix::from_rows(extend_basis(u, n));
    let step = block_diag(&a, &Matrix::identity(n)).mul(&c.coframe());
    let alg = l.change_coframe(&step)?;

    // Column a of C: coefficient of u^{23}, u^{31}, u^{12} in (de^{n+K})^{2,0}.
    let slots = [(2, 3, 1), (1, 3, -1), (1, 2, 1)];
    let mut q = Matrix::zeros(n, n);
    for k in 1..=n {
        let d = alg.d1(n + k);
        for (col, (i, j, sg)) in slots.iter().enumerate() {
            q[(k - 1, col)] = Scalar::int(-4 * sg) * d.coeff(&[*i, *j]);
        }
    }
    let cols: Vec<Vec<Scalar>> = q.transpose().to_rows().into_iter().take(3).collect();
    let full = Matrix::from_rows(extend_basis(cols, n)).transpose();
    let b = full.inverse()?;
    Ok(block_diag(&Matrix::identity(n), &b).mul(&step))
}

/// `c(N^H, F) = Σ_K η_K ⊗ (e_K ⌟ F)` for `N^H = Σ_K η_K ⊗ e_K`.
pub fn c_contraction(nh: &VectorValued, f: &KForm) -> Result<PairTensor, Error> {
    if nh.dim() != f.dim() {
        return Err(Error::DimensionMismatch(nh.dim(), f.dim()));
    }
    if f.degree().is_some_and(|d| d != 2) {
        return Err(Error::Precondition("F must be a 2-form".into()));
    }
    let mut out = PairTensor::zero(f.dim());
    for (k, eta) in nh.iter() {
        out.add_product(eta, &f.contract(k), &Scalar::one());
    }
    Ok(out)
}

/// `T(a,b,c)` for `T = Σ e^{ab} ⊗ ω_{ab}`, signed in `a, b`.
fn three_tensor(t: &PairTensor, a: usize, b: usize, c: usize) -> Scalar {
    t.at_pair(a, b).coeff(&[c])
}

/// Basis of `{F ∈ Λ^{1,1} : dF ∈ Λ^{3,0}, c(N^H, F) ∈ Λ^{3,0}}`, with forms
/// written in `coframe`.
pub fn solve_f_space(l: &LieAlgebra, coframe: &Matrix) -> Result<Vec<KForm>, Error> {
    let s = Structure::with_coframe(l, coframe)?;
    let (n, dim) = (s.n(), s.dim());
    let nh = nijenhuis(&s).0;
    let unknowns: Vec<u64> = (1..=n).flat_map(|i| (1..=n).map(move |j| bit(i) | bit(n + j))).collect();
    let mut eqs: BTreeMap<(u64, usize, usize, usize), Vec<Scalar>> = BTreeMap::new();
    let mut put = |key: (u64, usize, usize, usize), col: usize, c: Scalar| {
        if !c.is_zero() {
            eqs.entry(key).or_insert_with(|| vec![Scalar::zero(); unknowns.len()])[col] += &c;
        }
    };
    for (col, &m) in unknowns.iter().enumerate() {
        let f = KForm::from_mask(dim, m, Scalar::one());
        for (mm, c) in s.d(&f).terms() {
            if s.bidegree_of(mm) != (3, 0) {
                put((mm, 0, 0, 0), col, c.clone());
            }
        }
        let t = c_contraction(&nh, &f)?;
        for a in 1..=n {
            for b in 1..=n {
                for cc in b..=n {
                    let v = three_tensor(&t, a, b, cc) + three_tensor(&t, a, cc, b);
                    put((0, a, b, cc), col, v);
                }
            }
        }
    }
    let kernel = if eqs.is_empty() {
        Matrix::identity(unknowns.len()).to_rows()
    } else {
        Matrix::from_rows(eqs.into_values().collect()).kernel()
    };
    Ok(kernel
        .into_iter()
        .map(|v| {
            let mut f = KForm::zero(dim);
            for (x, &m) in v.into_iter().zip(&unknowns) {
                f.add_term(m, x);
            }
            f
        })
        .collect())
}

/// `X` with `F = Σ X_{ij} e^i ∧ e^{n+j}`.
pub fn f_matrix(f: &KForm, n: usize) -> Matrix {
    let mut x = Matrix::zeros(n, n);
    for i in 1..=n {
        for j in 1..=n {
            x[(i - 1, j - 1)] = f.coeff(&[i, n + j]);
        }
    }
    x
}

/// `Fⁿ ≠ 0` for `F ∈ Λ^{1,1}`.
pub fn is_nondegenerate(f: &KForm, n: usize) -> bool {
    !f_matrix(f, n).det().is_zero()
}

/// The coframe, relative to the algebra's own, in which `F` (written in
/// `coframe`) becomes the standard form.
pub fn coframe_for(f: &KForm, n: usize, coframe: &Matrix) -> Result<Matrix, Error> {
    let x = f_matrix(f, n);
    if x.det().is_zero() {
        return Err(Error::Singular);
    }
    Ok(block_diag(&Matrix::identity(n), &x).mul(coframe))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_witnesses: usize,
    pub max_norm: i64,
    /// Coefficient vectors tried before giving up.
    pub max_candidates: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_witnesses: 20, max_norm: 3, max_candidates: 200_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessOutcome {
    /// Nondegenerate forms in enumeration order.
    Found(Vec<KForm>),
    /// No nondegenerate form among the first `examined` candidates.
    Inconclusive { examined: usize },
    /// The space is `{0}`.
    Empty,
}

impl WitnessOutcome {
    pub fn witnesses(&self) -> &[KForm] {
        match self {
            WitnessOutcome::Found(v) => v,
            _ => &[],
        }
    }
}

/// Integer combinations of `basis` in increasing max-norm; within a shell,
/// coefficients run through `0, 1, -1, 2, -2, ..` with the last varying fastest.
pub fn nondegenerate_witnesses(basis: &[KForm], n: usize, cfg: &SearchConfig) -> WitnessOutcome {
    if basis.is_empty() {
        return WitnessOutcome::Empty;
    }
    let k = basis.len();
    let mut found = Vec::new();
    let mut examined = 0usize;
    for norm in 1..=cfg.max_norm {
        let digits: Vec<i64> = std::iter::once(0).chain((1..=norm).flat_map(|d| [d, -d])).collect();
        let mut idx = vec![0usize; k];
        loop {
            let coeffs: Vec<i64> = idx.iter().map(|&i| digits[i]).collect();
            if coeffs.iter().any(|c| c.abs() == norm) {
                examined += 1;
                let mut f = KForm::zero(basis[0].dim());
                for (b, &c) in basis.iter().zip(&coeffs) {
                    f.add_scaled(b, &Scalar::int(c));
                }
                if is_nondegenerate(&f, n) {
                    found.push(f);
                    if found.len() == cfg.max_witnesses {
                        return WitnessOutcome::Found(found);
                    }
                }
                if examined >= cfg.max_candidates {
                    return finish(found, examined);
                }
            }
            let mut p = k;
            loop {
                if p == 0 {
                    break;
                }
                p -= 1;
                idx[p] += 1;
                if idx[p] < digits.len() {
                    break;
                }
                idx[p] = 0;
                if p == 0 {
                    p = usize::MAX;
                    break;
                }
            }
            if p == usize::MAX {
                break;
            }
        }
    }
    finish(found, examined)
}

fn finish(found: Vec<KForm>, examined: usize) -> WitnessOutcome {
    if found.is_empty() {
        WitnessOutcome::Inconclusive { examined }
    } else {
        WitnessOutcome::Found(found)
    }
}

/// One nondegenerate solution and the full analysis of its structure.
#[derive(Clone, Debug)]
pub struct WitnessCheck {
    pub f: KForm,
    pub coframe: Matrix,
    pub analysis: Analysis,
}

impl WitnessCheck {
    /// Class within `{W1}`, no `λ`, Ricci-flat by oracle and formulas.
    pub fn ok(&self) -> bool {
        let a = &self.analysis;
        a.class.within(&[1])
            && a.torsion.lambda.is_zero()
            && a.predicates.ricci_flat
            && a.agreement.all()
            && a.formulas.s.is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub candidate: SplittingCandidate,
    pub conditions: NhConditions,
    pub adapted_coframe: Option<Matrix>,
    pub f_space: Vec<KForm>,
    pub witnesses: WitnessOutcome,
    pub verification: Vec<WitnessCheck>,
}

impl SearchReport {
    /// Some witness exists and every checked witness passed.
    pub fn success(&self) -> bool {
        !self.verification.is_empty() && self.verification.iter().all(WitnessCheck::ok)
    }
}

/// The whole recipe on one splitting.
pub fn search(l: &LieAlgebra, c: &SplittingCandidate, cfg: &SearchConfig) -> Result<SearchReport, Error> {
    let conditions = nh_conditions(l, c)?;
    let mut report = SearchReport {
        candidate: c.clone(),
        conditions,
        adapted_coframe: None,
        f_space: Vec::new(),
        witnesses: WitnessOutcome::Empty,
        verification: Vec::new(),
    };
    if !report.conditions.adaptable() {
        return Ok(report);
    }
    let n = l.dim() / 2;
    let m = adapt_coframe(l, c)?;
    report.f_space = solve_f_space(l, &m)?;
    report.witnesses = nondegenerate_witnesses(&report.f_space, n, cfg);
    for f in report.witnesses.witnesses() {
        let cf = coframe_for(f, n, &m)?;
        let s = Structure::with_coframe(l, &cf)?;
        report.verification.push(WitnessCheck { f: f.clone(), coframe: cf, analysis: analyze(&s)? });
    }
    report.adapted_coframe = Some(m);
    Ok(report)
}

/// Splittings with `H = ⟨e_{n+1}..e_{2n}⟩` and `V` the graph
/// `v_i = e_i + Σ_j A_{ji} e_{n+j}`, `A` ranging over `{-b..b}^{n×n}` in
/// lexicographic order. Stops after `cap` candidates; the flag reports truncation.
pub fn graph_splittings(l: &LieAlgebra, b: i64, cap: usize) -> Result<(Vec<SplittingCandidate>, bool), Error> {
    let dim = l.dim();
    if dim % 2 == 1 || dim == 0 {
        return Err(Error::OddDimension(dim));
    }
    let n = dim / 2;
    let unit = |i: usize| -> Vec<Scalar> { (0..dim).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect() };
    let h: Vec<Vec<Scalar>> = (n..dim).map(unit).collect();
    let base = (2 * b + 1) as usize;
    let mut out = Vec::new();
    let mut idx = vec![0usize; n * n];
    loop {
        if out.len() == cap {
            return Ok((out, true));
        }
        let v: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut x = unit(i);
                for j in 0..n {
                    x[n + j] = Scalar::int(idx[j * n + i] as i64 - b);
                }
                x
            })
            .collect();
        match SplittingCandidate::new(l, v, h.clone()) {
            Ok(c) => out.push(c),
            Err(Error::Precondition(_)) => return Ok((out, false)),
            Err(e) => return Err(e),
        }
        let mut p = idx.len();
        loop {
            if p == 0 {
                return Ok((out, false));
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < base {
                break;
            }
            idx[p] = 0;
        }
    }
}

/// A splitting file: `2n` rows, `V` first then `H`, separated by `;` or
/// newlines; `#` starts a comment.
pub fn parse_splitting(l: &LieAlgebra, text: &str) -> Result<SplittingCandidate, Error> {
    let body: String = text.lines().map(|x| x.split('#').next().unwrap_or("")).collect::<Vec<_>>().join(";");
    SplittingCandidate::from_rows(l, &parse_matrix(&body, 0)?)
}

/// The assertions made on each Table 1 family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyChecks {
    pub jacobi: bool,
    pub nilpotent: bool,
    /// Class exactly `{W1}`, no `λ`.
    pub class_w1: bool,
    pub tau1_nonzero: bool,
    pub ricci_flat_oracle: bool,
    pub ricci_flat_formula: bool,
    pub riemann_nonzero: bool,
}

impl FamilyChecks {
    pub fn all(&self) -> bool {
        self.jacobi
            && self.nilpotent
            && self.class_w1
            && self.tau1_nonzero
            && self.ricci_flat_oracle
            && self.ricci_flat_formula
            && self.riemann_nonzero
    }
}

#[derive(Clone, Debug)]
pub struct FamilyReport {
    pub family: usize,
    pub algebra: LieAlgebra,
    pub analysis: Analysis,
    pub checks: FamilyChecks,
}

/// Build Table 1 row `row` at `params` and run the pipeline on its printed coframe.
pub fn verify_family(row: usize, params: &Params) -> Result<FamilyReport, Error> {
    let fam = table1()
        .into_iter()
        .find(|f| f.family == row)
        .ok_or_else(|| Error::Precondition(format!("Table 1 has rows 1..5, not {row}")))?;
    let l = fam.algebra(params)?;
    let (analysis, checks) = family_checks(&l)?;
    Ok(FamilyReport { family: row, algebra: l, analysis, checks })
}

/// The Table 1 claims for `l` in its own coframe.
pub fn family_checks(l: &LieAlgebra) -> Result<(Analysis, FamilyChecks), Error> {
    l.require_jacobi()?;
    let s = Structure::standard(l)?;
    let a = analyze(&s)?;
    let f = &a.formulas;
    let checks = FamilyChecks {
        jacobi: true,
        nilpotent: a.flags.nilpotent,
        class_w1: a.class == crate::torsion::TorsionClass::from_flags(&[1]),
        tau1_nonzero: !a.torsion.tau(1).is_zero(),
        ricci_flat_oracle: a.predicates.ricci_flat,
        ricci_flat_formula: f.ric_prime.is_zero() && f.ric_s2v.is_zero() && f.ric_s2v_star.is_zero() && f.s.is_zero(),
        riemann_nonzero: !a.predicates.flat,
    };
    Ok((a, checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::parse_params;

    fn row(r: usize, p: &str) -> LieAlgebra {
        table1()[r - 1].algebra(&parse_params(p).unwrap()).unwrap()
    }

    #[test]
    fn contraction_example() {
        let mut nh = VectorValued::zero(6);
        nh.add_form(4, &KForm::basis(6, &[2, 3]), &Scalar::one());
        let s = Structure::standard(&LieAlgebra::abelian(6)).unwrap();
        assert_eq!(c_contraction(&nh, s.f()).unwrap().to_string(), "-23|1");
    }

    #[test]
    fn row1_coordinate_splitting() {
        let l = row(1, "lambda=1,mu=1,k=0");
        let c = SplittingCandidate::coords(&l).unwrap();
        let cond = nh_conditions(&l, &c).unwrap();
        assert!(cond.all(), "{cond:?}");
        let m = adapt_coframe(&l, &c).unwrap();
        let s = Structure::with_coframe(&l, &m).unwrap();
        assert_eq!(nijenhuis(&s).0.to_string(), "12|7-13|6+23|5");
        let t = crate::torsion::intrinsic_torsion(&s);
        assert!(t.tau(2).is_zero() && t.tau(5).is_zero() && t.tau(6).is_zero());
    }

    #[test]
    fn abelian_fails_rank() {
        let l = LieAlgebra::abelian(6);
        let c = SplittingCandidate::coords(&l).unwrap();
        let cond = nh_conditions(&l, &c).unwrap();
        assert!(!cond.rank3 && cond.rank == 0);
        assert_eq!(solve_f_space(&l, &Matrix::identity(6)).unwrap().len(), 9);
    }
}
