//! Subspaces and quotients in a fixed ambient basis.

use alloc::vec::Vec;

use crate::field::Field;
use crate::matrix::Matrix;

/// A subspace with an echelon basis: column `k` has a one at `pivots[k]`
/// and zeros at every other pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of the columns of `spanning` (an `n × k` matrix).
    pub fn span(spanning: &Matrix) -> Self {
        let n = spanning.rows();
        let (r, pivots) = spanning.transpose().rref();
        let basis = r.select_rows(&(0..pivots.len()).collect::<Vec<_>>()).transpose();
        debug_assert_eq!(basis.rows(), n);
        Subspace { basis, pivots }
    }

    pub fn from_columns(field: Field, n: usize, cols: &[Matrix]) -> Self {
        Subspace::span(&Matrix::hcat(field, n, cols))
    }

    pub fn zero(field: Field, n: usize) -> Self {
        Subspace { basis: Matrix::zeros(field, n, 0), pivots: Vec::new() }
    }

    pub fn whole(field: Field, n: usize) -> Self {
        Subspace { basis: Matrix::identity(field, n), pivots: (0..n).collect() }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.basis.rows()
    }

    /// Inclusion map `k → n`.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of vectors assumed to lie in the subspace.
    pub fn coordinates(&self, v: &Matrix) -> Matrix {
        v.select_rows(&self.pivots)
    }

    /// Left inverse of the inclusion, exact on the subspace.
    pub fn retraction(&self) -> Matrix {
        let f = self.basis.field();
        Matrix::identity(f, self.ambient()).select_rows(&self.pivots)
    }

    pub fn contains(&self, v: &Matrix) -> bool {
        self.basis.mul(&self.coordinates(v)) == *v
    }

    /// Corestricts `map` (with image inside the subspace) to subspace coordinates.
    pub fn corestrict(&self, map: &Matrix) -> Option<Matrix> {
        let c = self.coordinates(map);
        (self.basis.mul(&c) == *map).then_some(c)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // x = A a = B b  ⇔  [A | -B] (a, b) = 0
        let stacked = self.basis.hstack(&other.basis.neg());
        let k = stacked.kernel();
        let a = k.select_rows(&(0..self.dim()).collect::<Vec<_>>());
        Subspace::span(&self.basis.mul(&a))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(&self.basis.hstack(&other.basis))
    }
}

/// `V / U` realised on the complement spanned by the non-pivot basis vectors of `U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    /// `q × n` projection.
    pub proj: Matrix,
    /// `n × q` section picking standard basis representatives.
    pub section: Matrix,
}

impl Quotient {
    pub fn new(sub: &Subspace) -> Self {
        let n = sub.ambient();
        let f = sub.basis().field();
        let mut is_pivot = alloc::vec![usize::MAX; n];
        for (k, &p) in sub.pivots().iter().enumerate() {
            is_pivot[p] = k;
        }
        let free: Vec<usize> = (0..n).filter(|&j| is_pivot[j] == usize::MAX).collect();
        let mut pos = alloc::vec![usize::MAX; n];
        for (k, &j) in free.iter().enumerate() {
            pos[j] = k;
        }
        let bt = sub.basis().transpose();
        let mut entries = Vec::new();
        for i in 0..n {
            if is_pivot[i] == usize::MAX {
                entries.push((pos[i], i, f.one()));
            } else {
                // e_i ≡ e_i - u_k modulo U
                for (j, c) in bt.row_entries(is_pivot[i]) {
                    if *j != i {
                        entries.push((pos[*j], i, -c));
                    }
                }
            }
        }
        let proj = Matrix::from_entries(f, free.len(), n, entries);
        let section = Matrix::identity(f, n).select_cols(&free);
        Quotient { proj, section }
    }

    /// Cokernel of `map`.
    pub fn cokernel(map: &Matrix) -> Self {
        Quotient::new(&Subspace::span(map))
    }

    pub fn dim(&self) -> usize {
        self.proj.rows()
    }

    /// Induced map `V/U → W` of a map `V → W` that vanishes on `U` (unchecked).
    pub fn descend(&self, map: &Matrix) -> Matrix {
        map.mul(&self.section)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_kills_the_subspace() {
        let f = Field::Rationals;
        let u = Matrix::from_i64(f, &[&[1], &[1], &[0]]);
        let sub = Subspace::span(&u);
        let q = Quotient::new(&sub);
        assert_eq!(q.dim(), 2);
        assert!(q.proj.mul(&u).is_zero());
        assert!(q.proj.mul(&q.section).is_identity());
    }

    #[test]
    fn intersection_of_planes() {
        let f = Field::Rationals;
        let a = Subspace::span(&Matrix::from_i64(f, &[&[1, 0], &[0, 1], &[0, 0]]));
        let b = Subspace::span(&Matrix::from_i64(f, &[&[0, 0], &[1, 0], &[0, 1]]));
        let c = a.intersect(&b);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&Matrix::unit_vector(f, 3, 1)));
    }
}
