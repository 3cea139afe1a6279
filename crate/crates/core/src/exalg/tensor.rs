//! Tensors whose factors are forms, stored as sparse maps from a key to a form.
//!
//! * [`FormTensor`]: `Σ_I e^I ⊗ ω_I` in `T* ⊗ Λ^k T*` (τ-blocks, λ̃).
//! * [`VectorValued`]: `Σ_K η_K ⊗ e_K` in `Λ^k T* ⊗ T` (images of ∂, Nijenhuis).
//! * [`PairTensor`]: `Σ_{I<J} e^{IJ} ⊗ ω_{IJ}` in `Λ²T* ⊗ Λ^k T*` (curvature).

use std::collections::BTreeMap;
use std::fmt;

use super::form::{fmt_indices, mask_indices, write_term, KForm, Mask};
use super::Scalar;

macro_rules! slotted {
    ($(#[$doc:meta])* $name:ident, $key:ty) => {
        $(#[$doc])*
        #[derive(Clone, PartialEq, Eq, Hash)]
        pub struct $name {
            dim: usize,
            slots: BTreeMap<$key, KForm>,
        }

        impl $name {
            pub fn zero(dim: usize) -> Self {
                $name { dim, slots: BTreeMap::new() }
            }

            pub fn dim(&self) -> usize {
                self.dim
            }

            pub fn is_zero(&self) -> bool {
                self.slots.is_empty()
            }

            pub fn get(&self, k: $key) -> Option<&KForm> {
                self.slots.get(&k)
            }

            /// The form at `k`, zero when absent.
            pub fn at(&self, k: $key) -> KForm {
                self.slots.get(&k).cloned().unwrap_or_else(|| KForm::zero(self.dim))
            }

            pub fn iter(&self) -> impl Iterator<Item = ($key, &KForm)> {
                self.slots.iter().map(|(k, f)| (*k, f))
            }

            /// `self[k] += c * form`.
            pub fn add_form(&mut self, k: $key, form: &KForm, c: &Scalar) {
                assert_eq!(form.dim(), self.dim, "dimension mismatch");
                if form.is_zero() || c.is_zero() {
                    return;
                }
                let slot = self.slots.entry(k).or_insert_with(|| KForm::zero(form.dim()));
                slot.add_scaled(form, c);
                if slot.is_zero() {
                    self.slots.remove(&k);
                }
            }

            pub fn add_scaled(&mut self, other: &Self, c: &Scalar) {
                for (k, f) in &other.slots {
                    self.add_form(*k, f, c);
                }
            }

            pub fn plus(&self, other: &Self) -> Self {
                let mut out = self.clone();
                out.add_scaled(other, &Scalar::one());
                out
            }

            pub fn minus(&self, other: &Self) -> Self {
                let mut out = self.clone();
                out.add_scaled(other, &Scalar::int(-1));
                out
            }

            pub fn scale(&self, c: &Scalar) -> Self {
                let mut out = Self::zero(self.dim);
                out.add_scaled(self, c);
                out
            }

            /// Apply `f` to every stored form, dropping zeros.
            pub fn map_forms(&self, f: impl Fn(&KForm) -> KForm) -> Self {
                let mut out = Self::zero(self.dim);
                for (k, v) in &self.slots {
                    out.add_form(*k, &f(v), &Scalar::one());
                }
                out
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}[{}]({})", stringify!($name), self.dim, self)
            }
        }
    };
}

slotted!(
    /// `Σ_I e^I ⊗ ω_I`: a covector factor followed by a form factor.
    FormTensor,
    usize
);
slotted!(
    /// `Σ_K η_K ⊗ e_K`: a form factor followed by a vector factor.
    VectorValued,
    usize
);
slotted!(
    /// `Σ_{I<J} e^{IJ} ⊗ ω_{IJ}`, keyed by the mask of `{I, J}`.
    PairTensor,
    Mask
);

impl FormTensor {
    /// `e^i ⊗ ω`.
    pub fn simple(i: usize, form: KForm) -> Self {
        let mut t = FormTensor::zero(form.dim());
        t.add_form(i, &form, &Scalar::one());
        t
    }
}

impl PairTensor {
    /// Add `c · η ⊗ ω` for an arbitrary 2-form `η`.
    pub fn add_product(&mut self, eta: &KForm, omega: &KForm, c: &Scalar) {
        for (m, x) in eta.terms() {
            debug_assert_eq!(m.count_ones(), 2);
            self.add_form(m, omega, &(x * c));
        }
    }

    /// `ω_{IJ}` with sign for an arbitrary order of `I, J`.
    pub fn at_pair(&self, i: usize, j: usize) -> KForm {
        use super::form::sort_sign;
        match sort_sign(&[i, j]) {
            None => KForm::zero(self.dim),
            Some((neg, m)) => {
                let f = self.at(m);
                if neg {
                    -f
                } else {
                    f
                }
            }
        }
    }
}

fn fmt_slotted<'a>(
    f: &mut fmt::Formatter<'_>,
    dim: usize,
    entries: impl Iterator<Item = (Vec<usize>, &'a KForm)>,
    key_first: bool,
) -> fmt::Result {
    let mut terms: Vec<(Vec<usize>, Vec<usize>, Scalar)> = Vec::new();
    for (kidx, form) in entries {
        for (idx, c) in form.monomials() {
            if key_first {
                terms.push((kidx.clone(), idx, c));
            } else {
                terms.push((idx, kidx.clone(), c));
            }
        }
    }
    if terms.is_empty() {
        return write!(f, "0");
    }
    terms.sort();
    for (k, (a, b, c)) in terms.iter().enumerate() {
        let body = format!("{}|{}", fmt_indices(a, dim), fmt_indices(b, dim));
        write_term(f, k == 0, c, &body)?;
    }
    Ok(())
}

impl fmt::Display for FormTensor {
    /// `c*I|JK` for `c e^I ⊗ e^{JK}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_slotted(f, self.dim, self.slots.iter().map(|(k, v)| (vec![*k], v)), true)
    }
}

impl fmt::Display for VectorValued {
    /// `c*IJ|K` for `c e^{IJ} ⊗ e_K`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_slotted(f, self.dim, self.slots.iter().map(|(k, v)| (vec![*k], v)), false)
    }
}

impl fmt::Display for PairTensor {
    /// `c*IJ|KL` for `c e^{IJ} ⊗ e^{KL}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_slotted(f, self.dim, self.slots.iter().map(|(m, v)| (mask_indices(*m), v)), true)
    }
}
