//! Linear equations in an unknown linear map `F: V → W`.
//!
//! Each equation is `Σ_t A_t · (I_p ⊗ F ⊗ I_q) · B_t = C`. Intertwiner
//! spaces, antipodes and dual pairings are all kernels or solutions of
//! such systems.

use alloc::vec::Vec;

use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

/// One summand `coeff · left · (I_p ⊗ F ⊗ I_q) · right`.
#[derive(Clone, Debug)]
pub struct Term {
    pub coeff: Scalar,
    pub left: Matrix,
    pub p: usize,
    pub q: usize,
    pub right: Matrix,
}

impl Term {
    pub fn new(left: Matrix, p: usize, q: usize, right: Matrix) -> Self {
        Term { coeff: left.field().one(), left, p, q, right }
    }

    /// `F` composed with `right` only.
    pub fn after(right: Matrix, w: usize) -> Self {
        let f = right.field();
        Term::new(Matrix::identity(f, w), 1, 1, right)
    }

    pub fn negated(mut self) -> Self {
        self.coeff = -self.coeff;
        self
    }
}

#[derive(Clone, Debug)]
pub struct LinearSystem {
    field: Field,
    w: usize,
    v: usize,
    blocks: Vec<(Matrix, Matrix)>,
}

impl LinearSystem {
    /// Unknown map of shape `w × v`.
    pub fn new(field: Field, w: usize, v: usize) -> Self {
        LinearSystem { field, w, v, blocks: Vec::new() }
    }

    /// Adds `Σ terms = rhs` (homogeneous when `rhs` is `None`).
    pub fn equation(&mut self, terms: &[Term], rhs: Option<&Matrix>) -> &mut Self {
        let (w, v) = (self.w, self.v);
        let shape = terms
            .first()
            .map(|t| (t.left.rows(), t.right.cols()))
            .or_else(|| rhs.map(|r| r.shape()))
            .expect("equation needs a term or a right-hand side");
        let out_cols = shape.1;
        let mut entries = Vec::new();
        for t in terms {
            assert_eq!((t.left.rows(), t.right.cols()), shape, "terms of one equation must share a shape");
            assert_eq!(t.left.cols(), t.p * w * t.q, "left factor has wrong width");
            assert_eq!(t.right.rows(), t.p * v * t.q, "right factor has wrong height");
            let lt = t.left.transpose();
            for r in 0..w {
                for s in 0..v {
                    let unknown = r * v + s;
                    for a in 0..t.p {
                        for b in 0..t.q {
                            let lcol = lt.row_entries(a * w * t.q + r * t.q + b);
                            let rrow = t.right.row_entries(a * v * t.q + s * t.q + b);
                            if lcol.is_empty() || rrow.is_empty() {
                                continue;
                            }
                            for (i, x) in lcol {
                                let xc = &t.coeff * x;
                                for (j, y) in rrow {
                                    entries.push((i * out_cols + j, unknown, &xc * y));
                                }
                            }
                        }
                    }
                }
            }
        }
        let rows = shape.0 * shape.1;
        let a = Matrix::from_entries(self.field, rows, w * v, entries);
        let b = match rhs {
            Some(c) => {
                assert_eq!(c.shape(), shape, "right-hand side shape");
                c.flatten()
            }
            None => Matrix::zeros(self.field, rows, 1),
        };
        self.blocks.push((a, b));
        self
    }

    fn assembled(&self) -> (Matrix, Matrix) {
        let n = self.w * self.v;
        let a = Matrix::vcat(self.field, n, &self.blocks.iter().map(|b| b.0.clone()).collect::<Vec<_>>());
        let b = Matrix::vcat(self.field, 1, &self.blocks.iter().map(|b| b.1.clone()).collect::<Vec<_>>());
        (a, b)
    }

    /// Coefficient matrix over the row-major unknowns of `F`.
    pub fn coefficient_matrix(&self) -> Matrix {
        self.assembled().0
    }

    /// Basis of all homogeneous solutions, each reshaped to `w × v`.
    pub fn kernel(&self) -> Vec<Matrix> {
        let (a, _) = self.assembled();
        a.kernel_basis().iter().map(|k| Matrix::unflatten(k, self.w, self.v)).collect()
    }

    /// The deterministic solution of the inhomogeneous system, if any.
    pub fn solve(&self) -> Option<Matrix> {
        let (a, b) = self.assembled();
        a.solve(&b).expect("system assembled over one field").map(|x| Matrix::unflatten(&x, self.w, self.v))
    }

    pub fn unknowns(&self) -> (usize, usize) {
        (self.w, self.v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::swap;

    #[test]
    fn commutant_of_a_diagonal_matrix() {
        let f = Field::Rationals;
        let d = Matrix::from_i64(f, &[&[1, 0], &[0, 2]]);
        // F D = D F
        let mut sys = LinearSystem::new(f, 2, 2);
        sys.equation(&[Term::after(d.clone(), 2), Term::new(d, 1, 1, Matrix::identity(f, 2)).negated()], None);
        assert_eq!(sys.kernel().len(), 2);
    }

    #[test]
    fn padded_unknown_matches_direct_evaluation() {
        let f = Field::Prime(5);
        let x = Matrix::from_i64(f, &[&[1, 2], &[3, 4]]);
        let a = Matrix::from_i64(f, &[&[1, 0, 2, 1], &[0, 1, 1, 3]]);
        let b = swap(f, 2, 2);
        // a (I_2 ⊗ F) b = c has F = x among its solutions
        let c = a.mul(&x.pad(2, 1)).mul(&b);
        let mut sys = LinearSystem::new(f, 2, 2);
        sys.equation(&[Term::new(a.clone(), 2, 1, b.clone())], Some(&c));
        let sol = sys.solve().unwrap();
        assert_eq!(a.mul(&sol.pad(2, 1)).mul(&b), c);
    }
}
