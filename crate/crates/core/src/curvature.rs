//! The Levi-Civita oracle: Koszul formula, Riemann and Ricci tensors, and
//! the split `ric = ric′ + ric″`.
//!
//! `R(X,Y)Z = ∇_X∇_Y Z - ∇_Y∇_X Z - ∇_{[X,Y]}Z`, `ric(X,Y) = tr(Z ↦ R(Z,X)Y)`;
//! curvature is presented as `Σ_{I<J} e^{IJ} ⊗ ρ_{IJ}` with
//! `ρ_{IJ}(Z,W) = g(R(e_I,e_J)Z, W)`.

use crate::exalg::{bit, FormTensor, KForm, Matrix, PairTensor, Scalar};
use crate::pstruct::Structure;

/// `∇_{e_I} e_J = Γ^K_{IJ} e_K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    dim: usize,
    /// `a[I-1]` is the matrix of `∇_{e_I}`: entry `(K-1, J-1) = Γ^K_{IJ}`.
    a: Vec<Matrix>,
}

impl Connection {
    pub fn gamma(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.a[i - 1][(k - 1, j - 1)]
    }

    /// Matrix of `∇_{e_I}`.
    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.a[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(Matrix::is_zero)
    }

    /// `∇g = 0` and `Γ^K_{IJ} - Γ^K_{JI} = c^K_{IJ}`.
    pub fn check(&self, s: &Structure) -> (bool, bool) {
        let d = self.dim;
        let l = s.algebra();
        let mut metric = true;
        let mut torsion_free = true;
        for i in 1..=d {
            for j in 1..=d {
                for k in 1..=d {
                    // g(∇_I e_J, e_K) + g(e_J, ∇_I e_K)
                    let m = self.gamma(i, j, s.partner(k)) + self.gamma(i, k, s.partner(j));
                    metric &= m.is_zero();
                    torsion_free &= &(self.gamma(i, j, k) - self.gamma(j, i, k)) == l.c(i, j, k);
                }
            }
        }
        (metric, torsion_free)
    }
}

/// Koszul: `2g(∇_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y)`.
pub fn levi_civita(s: &Structure) -> Connection {
    let d = s.dim();
    let l = s.algebra();
    let half = Scalar::frac(1, 2);
    let mut a = vec![Matrix::zeros(d, d); d];
    for i in 1..=d {
        for j in 1..=d {
            for z in 1..=d {
                // g([X,Y], e_Z) = c^{σZ}_{XY}
                let v = l.c(i, j, s.partner(z)) - l.c(j, z, s.partner(i)) + l.c(z, i, s.partner(j));
                if !v.is_zero() {
                    a[i - 1][(s.partner(z) - 1, j - 1)] = &v * &half;
                }
            }
        }
    }
    Connection { dim: d, a }
}

/// `R(e_I, e_J)` as matrices, `I < J`, plus the `S²(Λ²)` presentation.
#[derive(Clone, Debug)]
pub struct Riemann {
    dim: usize,
    ops: Vec<Matrix>,
    pub form: PairTensor,
}

impl Riemann {
    /// Matrix of `R(e_I, e_J)` for any `I, J`.
    pub fn op(&self, i: usize, j: usize) -> Matrix {
        if i == j {
            return Matrix::zeros(self.dim, self.dim);
        }
        let (lo, hi, sgn) = if i < j { (i, j, 1) } else { (j, i, -1) };
        let m = &self.ops[(lo - 1) * self.dim + (hi - 1)];
        if sgn == 1 {
            m.clone()
        } else {
            m.scale(&Scalar::int(-1))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.form.is_zero()
    }

    /// First Bianchi identity and pair symmetry on all basis tuples.
    pub fn check_symmetries(&self, s: &Structure) -> (bool, bool) {
        let d = self.dim;
        let mut bianchi = true;
        let mut pair = true;
        let ops: Vec<Vec<Matrix>> = (1..=d).map(|i| (1..=d).map(|j| self.op(i, j)).collect()).collect();
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    for k in 0..d {
                        let v = &ops[x][y][(k, z)] + &ops[y][z][(k, x)] + &ops[z][x][(k, y)];
                        bianchi &= v.is_zero();
                    }
                    for w in 0..d {
                        // g(R(X,Y)Z, W) = g(R(Z,W)X, Y)
                        let lhs = &ops[x][y][(s.partner(w + 1) - 1, z)];
                        let rhs = &ops[z][w][(s.partner(y + 1) - 1, x)];
                        pair &= lhs == rhs;
                    }
                }
            }
        }
        (bianchi, pair)
    }
}

pub fn riemann(c: &Connection, s: &Structure) -> Riemann {
    let d = s.dim();
    let l = s.algebra();
    let mut ops = vec![Matrix::zeros(d, d); d * d];
    let mut form = PairTensor::zero(d);
    for i in 1..=d {
        for j in i + 1..=d {
            let mut r = c.matrix(i).mul(c.matrix(j)).sub(&c.matrix(j).mul(c.matrix(i)));
            for k in 1..=d {
                let ck = l.c(i, j, k);
                if !ck.is_zero() {
                    r = r.sub(&c.matrix(k).scale(ck));
                }
            }
            let mut rho = KForm::zero(d);
            for z in 1..=d {
                for w in z + 1..=d {
                    rho.add_term(bit(z) | bit(w), r[(s.partner(w) - 1, z - 1)].clone());
                }
            }
            form.add_form(bit(i) | bit(j), &rho, &Scalar::one());
            ops[(i - 1) * d + (j - 1)] = r;
        }
    }
    Riemann { dim: d, ops, form }
}

/// Oracle curvature and its decomposition.
#[derive(Clone, Debug)]
pub struct CurvatureData {
    pub connection: Connection,
    pub riemann: Riemann,
    /// `ric(e_I, e_J)`.
    pub ric: Matrix,
    /// `Σ ric(e_i, e_{n+j}) e^{i,n+j}`.
    pub ric_prime: KForm,
    /// `ric(e_{n+i}, e_{n+j})`: the `S²V` block.
    pub ric_s2v: Matrix,
    /// `ric(e_i, e_j)`: the `S²V*` block.
    pub ric_s2v_star: Matrix,
    /// `(1/n) Σ ric(e_i, e_{n+i})`.
    pub s: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Predicates {
    pub flat: bool,
    pub ricci_flat: bool,
    /// `Some(s)` when `ric = s·g`.
    pub einstein: Option<Scalar>,
}

pub fn ricci_oracle(s: &Structure) -> CurvatureData {
    let c = levi_civita(s);
    let r = riemann(&c, s);
    let d = s.dim();
    let n = s.n();
    let mut ric = Matrix::zeros(d, d);
    for y in 1..=d {
        for z in 1..=d {
            let v: Scalar = (1..=d).map(|k| r.op(k, y)[(k - 1, z - 1)].clone()).sum();
            ric[(y - 1, z - 1)] = v;
        }
    }
    let mut ric_prime = KForm::zero(d);
    let mut s2v = Matrix::zeros(n, n);
    let mut s2vs = Matrix::zeros(n, n);
    for i in 1..=n {
        for j in 1..=n {
            ric_prime.add_term(bit(i) | bit(n + j), ric[(i - 1, n + j - 1)].clone());
            s2v[(i - 1, j - 1)] = ric[(n + i - 1, n + j - 1)].clone();
            s2vs[(i - 1, j - 1)] = ric[(i - 1, j - 1)].clone();
        }
    }
    let sc = (1..=n).map(|i| ric[(i - 1, n + i - 1)].clone()).sum::<Scalar>() / Scalar::from(n);
    CurvatureData { connection: c, riemann: r, ric, ric_prime, ric_s2v: s2v, ric_s2v_star: s2vs, s: sc }
}

impl CurvatureData {
    pub fn predicates(&self, s: &Structure) -> Predicates {
        let d = s.dim();
        let einstein = (1..=d).all(|i| (1..=d).all(|j| self.ric[(i - 1, j - 1)] == &self.s * &s.g(i, j)));
        Predicates { flat: self.riemann.is_zero(), ricci_flat: self.ric.is_zero(), einstein: einstein.then(|| self.s.clone()) }
    }

    /// `ric` as text `c*I|J` over all entries.
    pub fn ric_text(&self) -> String {
        self.ric.bilinear_text(0, self.ric.rows())
    }
}

/// Intrinsic torsion read off the Levi-Civita connection: for each `I`, the
/// `(2,0)+(0,2)` part of `ω_I = g(∇_{e_I} ·, ·)` and `λ_I = Λ(ω_I^{1,1})`.
pub fn torsion_from_connection(s: &Structure, c: &Connection) -> (FormTensor, KForm) {
    let d = s.dim();
    let mut tau = FormTensor::zero(d);
    let mut lambda = KForm::zero(d);
    for i in 1..=d {
        let mut om = KForm::zero(d);
        for z in 1..=d {
            for w in z + 1..=d {
                om.add_term(bit(z) | bit(w), c.gamma(i, z, s.partner(w)).clone());
            }
        }
        tau.add_form(i, &s.proj(&om, 2, 0), &Scalar::one());
        tau.add_form(i, &s.proj(&om, 0, 2), &Scalar::one());
        let l = s.lambda_scalar(&s.proj(&om, 1, 1)).expect("Λ on (1,1)");
        lambda.add_term(bit(i), l);
    }
    (tau, lambda)
}
