//! Exact scalars, sparse forms and form-valued tensors, dense linear algebra.

pub mod form;
pub mod linalg;
pub mod scalar;
pub mod tensor;

pub use form::{bit, mask_indices, sort_sign, KForm, Mask, MAX_DIM};
pub use linalg::Matrix;
pub use scalar::{ParseScalarError, Scalar};
pub use tensor::{FormTensor, PairTensor, VectorValued};

/// The index paired with `k` by the neutral metric: `k ± n`.
#[inline]
pub fn partner(n: usize, k: usize) -> usize {
    if k <= n {
        k + n
    } else {
        k - n
    }
}

/// Metric pairing of two forms: `⟨e^A, e^B⟩` is the sign sorting `σ(A)` when
/// the sorted `σ(A)` equals `B`, where `σ` swaps `i` and `n+i`.
pub fn pair_forms(n: usize, a: &KForm, b: &KForm) -> Scalar {
    assert_eq!(a.dim(), b.dim(), "dimension mismatch");
    let mut tot = Scalar::zero();
    for (m, x) in a.terms() {
        let img: Vec<usize> = mask_indices(m).into_iter().map(|k| partner(n, k)).collect();
        let (neg, mm) = sort_sign(&img).expect("distinct indices");
        let y = b.coeff_mask(mm);
        if y.is_zero() {
            continue;
        }
        let p = x * &y;
        if neg {
            tot -= p;
        } else {
            tot += p;
        }
    }
    tot
}

/// `⟨t, u⟩ = Σ_I ⟨t_I, u_{σ(I)}⟩` for tensors in `T* ⊗ Λ^k T*`.
pub fn pair_tensors(n: usize, t: &FormTensor, u: &FormTensor) -> Scalar {
    t.iter().map(|(i, x)| pair_forms(n, x, &u.at(partner(n, i)))).sum()
}
