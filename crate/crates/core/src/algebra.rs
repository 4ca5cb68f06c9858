//! Algebras and coalgebras given by structure constants.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{swap, Matrix};
use crate::report::{Report, Witness};
use crate::subspace::{Quotient, Subspace};

/// Sparse structure constant `(i, j, k, c)`.
pub type Entry = (usize, usize, usize, Scalar);

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

fn check_index(what: &'static str, index: usize, bound: usize) -> Result<()> {
    if index >= bound {
        return Err(Error::IndexOutOfRange { what, index, bound });
    }
    Ok(())
}

/// Triple index of column `c` in an `n³`-dimensional tensor cube.
fn triple(c: usize, n: usize) -> [usize; 3] {
    [c / (n * n), (c / n) % n, c % n]
}

/// A finite-dimensional unital algebra; `mul` is `n × n²`, `unit` is `n × 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub labels: Vec<String>,
    pub mul: Matrix,
    pub unit: Matrix,
}

impl Algebra {
    pub fn from_table(
        field: Field,
        labels: Option<Vec<String>>,
        dim: usize,
        mul: &[Entry],
        unit: &[(usize, Scalar)],
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(mul.len());
        for (i, j, k, c) in mul {
            for x in [i, j, k] {
                check_index("mul", *x, dim)?;
            }
            entries.push((*k, i * dim + j, c.clone()));
        }
        let mut u = Vec::new();
        for (i, c) in unit {
            check_index("unit", *i, dim)?;
            u.push((*i, 0, c.clone()));
        }
        let labels = labels.unwrap_or_else(|| default_labels(dim));
        Algebra::from_matrices(
            labels,
            Matrix::from_entries(field, dim, dim * dim, entries),
            Matrix::from_entries(field, dim, 1, u),
        )
    }

    pub fn from_matrices(labels: Vec<String>, mul: Matrix, unit: Matrix) -> Result<Self> {
        let n = mul.rows();
        if mul.cols() != n * n || unit.shape() != (n, 1) || labels.len() != n {
            return Err(Error::Shape { op: "algebra", left: mul.shape(), right: unit.shape() });
        }
        if mul.field() != unit.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(Algebra { labels, mul, unit })
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: Field) -> Self {
        Algebra::from_table(field, Some(vec!["1".into()]), 1, &[(0, 0, 0, field.one())], &[(0, field.one())])
            .expect("valid table")
    }

    pub fn field(&self) -> Field {
        self.mul.field()
    }

    pub fn dim(&self) -> usize {
        self.mul.rows()
    }

    pub fn basis(&self, i: usize) -> Matrix {
        Matrix::unit_vector(self.field(), self.dim(), i)
    }

    /// Canonically sorted `(i, j, k, c)` table.
    pub fn table(&self) -> Vec<Entry> {
        let n = self.dim();
        let mut t: Vec<Entry> = self.mul.entries().map(|(k, ij, c)| (ij / n, ij % n, k, c.clone())).collect();
        t.sort_by_key(|a| (a.0, a.1, a.2));
        t
    }

    pub fn product(&self, a: &Matrix, b: &Matrix) -> Matrix {
        self.mul.mul(&a.kron(b))
    }

    /// Matrix of `x ↦ a x`.
    pub fn left_mult(&self, a: &Matrix) -> Matrix {
        self.mul.mul(&a.kron(&Matrix::identity(self.field(), self.dim())))
    }

    /// Matrix of `x ↦ x a`.
    pub fn right_mult(&self, a: &Matrix) -> Matrix {
        self.mul.mul(&Matrix::identity(self.field(), self.dim()).kron(a))
    }

    /// Inverse element, if `a` is a unit.
    pub fn inverse_element(&self, a: &Matrix) -> Option<Matrix> {
        let l = self.left_mult(a);
        let x = l.solve(&self.unit).ok()??;
        (self.product(&x, a) == self.unit).then_some(x)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        self.mul == self.mul.mul(&swap(self.field(), n, n))
    }

    pub fn opposite(&self) -> Algebra {
        let n = self.dim();
        Algebra { labels: self.labels.clone(), mul: self.mul.mul(&swap(self.field(), n, n)), unit: self.unit.clone() }
    }

    pub fn dual(&self) -> Coalgebra {
        Coalgebra {
            labels: self.labels.iter().map(|l| format!("{l}*")).collect(),
            comul: self.mul.transpose(),
            counit: self.unit.transpose(),
        }
    }

    /// `A ⊗ B` with componentwise product.
    pub fn tensor(&self, other: &Algebra) -> Algebra {
        let f = self.field();
        let (n, m) = (self.dim(), other.dim());
        let shuffle = crate::matrix::tensor_permutation(f, &[n, m, n, m], &[0, 2, 1, 3]);
        let labels = self.labels.iter().flat_map(|a| other.labels.iter().map(move |b| format!("{a}⊗{b}"))).collect();
        Algebra { labels, mul: self.mul.kron(&other.mul).mul(&shuffle), unit: self.unit.kron(&other.unit) }
    }

    pub fn validate(&self) -> Report {
        let mut r = Report::new("algebra");
        let f = self.field();
        let n = self.dim();
        let id = Matrix::identity(f, n);
        let lhs = self.mul.mul(&self.mul.kron(&id));
        let rhs = self.mul.mul(&id.kron(&self.mul));
        r.record("associativity", lhs.first_difference(&rhs).map_or(Ok(()), |(_, c)| Err(Witness::at(&triple(c, n)))));
        let left = self.mul.mul(&self.unit.kron(&id));
        r.record("left-unit", left.first_difference(&id).map_or(Ok(()), |(_, c)| Err(Witness::at(&[c]))));
        let right = self.mul.mul(&id.kron(&self.unit));
        r.record("right-unit", right.first_difference(&id).map_or(Ok(()), |(_, c)| Err(Witness::at(&[c]))));
        r
    }

    pub fn is_ideal(&self, sub: &Subspace) -> bool {
        (0..self.dim()).all(|i| {
            let e = self.basis(i);
            sub.contains(&self.left_mult(&e).mul(sub.basis())) && sub.contains(&self.right_mult(&e).mul(sub.basis()))
        })
    }

    /// Span of all products `x y` with `x ∈ a`, `y ∈ b`.
    pub fn product_space(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let f = self.field();
        let n = self.dim();
        let cols: Vec<Matrix> = a
            .basis()
            .columns()
            .iter()
            .flat_map(|x| b.basis().columns().into_iter().map(move |y| (x.clone(), y)))
            .map(|(x, y)| self.product(&x, &y))
            .collect();
        Subspace::from_columns(f, n, &cols)
    }

    /// Smallest `k` with `I^k = 0`, if it is at most `dim + 1`.
    pub fn nilpotency_index(&self, ideal: &Subspace) -> Option<usize> {
        let mut power = ideal.clone();
        let mut k = 1;
        while power.dim() > 0 {
            if k > self.dim() {
                return None;
            }
            power = self.product_space(&power, ideal);
            k += 1;
        }
        Some(k)
    }

    pub fn quotient(&self, ideal: &Subspace) -> Result<(Algebra, Matrix)> {
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let q = Quotient::new(ideal);
        let free: Vec<usize> = (0..self.dim()).filter(|i| !ideal.pivots().contains(i)).collect();
        let labels = free.iter().map(|&i| self.labels[i].clone()).collect();
        let mul = q.proj.mul(&self.mul).mul(&q.section.kron(&q.section));
        let unit = q.proj.mul(&self.unit);
        Ok((Algebra::from_matrices(labels, mul, unit)?, q.proj))
    }

    /// Largest nilpotent ideal.
    pub fn jacobson_radical(&self) -> Subspace {
        match self.field() {
            Field::Rationals => self.trace_radical(),
            Field::Prime(p) => self.modular_radical(p),
        }
    }

    pub fn is_semisimple(&self) -> bool {
        self.jacobson_radical().dim() == 0
    }

    /// Kernel of the trace form `(x, y) ↦ tr L_{xy}`.
    fn trace_radical(&self) -> Subspace {
        let f = self.field();
        let n = self.dim();
        let regs: Vec<Matrix> = (0..n).map(|i| self.left_mult(&self.basis(i))).collect();
        let mut form = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                row.push(regs[i].mul(&regs[j]).trace());
            }
            form.push(row);
        }
        Subspace::span(&Matrix::from_rows(f, &form).kernel())
    }

    /// Generalized-trace filtration `I_0 ⊇ I_1 ⊇ …` over `F_p`, ending at the radical.
    fn modular_radical(&self, p: u64) -> Subspace {
        let f = self.field();
        let n = self.dim();
        let mut levels = 0;
        let mut pk = p as u128;
        while pk <= n as u128 {
            levels += 1;
            pk *= p as u128;
        }
        let regs: Vec<Vec<Vec<u64>>> = (0..n)
            .map(|i| {
                let m = self.left_mult(&self.basis(i));
                (0..n).map(|r| (0..n).map(|c| m.get(r, c).residue().unwrap_or(0)).collect()).collect()
            })
            .collect();
        let mut current = Subspace::whole(f, n);
        for i in 0..=levels {
            let modulus = (p as u128).pow(i as u32 + 1);
            let exponent = (p as u128).pow(i as u32);
            let mut rows = Vec::with_capacity(n);
            let products: Vec<Vec<Matrix>> = current
                .basis()
                .columns()
                .iter()
                .map(|c| (0..n).map(|j| self.product(c, &self.basis(j))).collect())
                .collect();
            for j in 0..n {
                let row: Vec<Scalar> = products
                    .iter()
                    .map(|pr| {
                        let lifted = lift_regular(&regs, &pr[j], n, modulus);
                        let t = trace_of_power(&lifted, exponent, modulus);
                        f.from_i64((t / exponent) as i64)
                    })
                    .collect();
                rows.push(row);
            }
            let g = Matrix::from_rows(f, &rows);
            let g = if current.dim() == 0 { Matrix::zeros(f, n, 0) } else { g };
            let k = g.kernel();
            current = Subspace::span(&current.basis().mul(&k));
        }
        current
    }
}

fn lift_regular(regs: &[Vec<Vec<u64>>], x: &Matrix, n: usize, modulus: u128) -> Vec<Vec<u128>> {
    let mut out = vec![vec![0u128; n]; n];
    for (k, _, c) in x.entries() {
        let c = c.residue().unwrap_or(0) as u128;
        for r in 0..n {
            for s in 0..n {
                out[r][s] = (out[r][s] + c * regs[k][r][s] as u128) % modulus;
            }
        }
    }
    out
}

fn mat_mul_mod(a: &[Vec<u128>], b: &[Vec<u128>], modulus: u128) -> Vec<Vec<u128>> {
    let n = a.len();
    let mut out = vec![vec![0u128; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] = (out[i][j] + a[i][k] * b[k][j]) % modulus;
            }
        }
    }
    out
}

fn trace_of_power(a: &[Vec<u128>], mut e: u128, modulus: u128) -> u128 {
    let n = a.len();
    let mut acc: Vec<Vec<u128>> = (0..n).map(|i| (0..n).map(|j| u128::from(i == j) % modulus).collect()).collect();
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul_mod(&acc, &base, modulus);
        }
        e >>= 1;
        if e > 0 {
            base = mat_mul_mod(&base, &base, modulus);
        }
    }
    (0..n).map(|i| acc[i][i]).fold(0, |s, x| (s + x) % modulus)
}

/// A finite-dimensional counital coalgebra; `comul` is `n² × n`, `counit` is `1 × n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    pub labels: Vec<String>,
    pub comul: Matrix,
    pub counit: Matrix,
}

impl Coalgebra {
    pub fn from_table(
        field: Field,
        labels: Option<Vec<String>>,
        dim: usize,
        comul: &[Entry],
        counit: &[(usize, Scalar)],
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(comul.len());
        for (i, j, k, c) in comul {
            for x in [i, j, k] {
                check_index("comul", *x, dim)?;
            }
            entries.push((j * dim + k, *i, c.clone()));
        }
        let mut e = Vec::new();
        for (i, c) in counit {
            check_index("counit", *i, dim)?;
            e.push((0, *i, c.clone()));
        }
        let labels = labels.unwrap_or_else(|| default_labels(dim));
        Coalgebra::from_matrices(
            labels,
            Matrix::from_entries(field, dim * dim, dim, entries),
            Matrix::from_entries(field, 1, dim, e),
        )
    }

    pub fn from_matrices(labels: Vec<String>, comul: Matrix, counit: Matrix) -> Result<Self> {
        let n = comul.cols();
        if comul.rows() != n * n || counit.shape() != (1, n) || labels.len() != n {
            return Err(Error::Shape { op: "coalgebra", left: comul.shape(), right: counit.shape() });
        }
        if comul.field() != counit.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(Coalgebra { labels, comul, counit })
    }

    pub fn field(&self) -> Field {
        self.comul.field()
    }

    pub fn dim(&self) -> usize {
        self.comul.cols()
    }

    /// Canonically sorted `(i, j, k, c)` table: `Δ(e_i) ∋ c e_j ⊗ e_k`.
    pub fn table(&self) -> Vec<Entry> {
        let n = self.dim();
        let mut t: Vec<Entry> = self.comul.entries().map(|(jk, i, c)| (i, jk / n, jk % n, c.clone())).collect();
        t.sort_by_key(|a| (a.0, a.1, a.2));
        t
    }

    /// `(Δ ⊗ id) Δ`, the map into the triple tensor.
    pub fn double_comul(&self) -> Matrix {
        let id = Matrix::identity(self.field(), self.dim());
        self.comul.kron(&id).mul(&self.comul)
    }

    pub fn coopposite(&self) -> Coalgebra {
        let n = self.dim();
        Coalgebra {
            labels: self.labels.clone(),
            comul: swap(self.field(), n, n).mul(&self.comul),
            counit: self.counit.clone(),
        }
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        self.comul == swap(self.field(), n, n).mul(&self.comul)
    }

    pub fn dual(&self) -> Algebra {
        Algebra {
            labels: self
                .labels
                .iter()
                .map(|l| l.strip_suffix('*').map_or_else(|| format!("{l}*"), ToString::to_string))
                .collect(),
            mul: self.comul.transpose(),
            unit: self.counit.transpose(),
        }
    }

    pub fn validate(&self) -> Report {
        let mut r = Report::new("coalgebra");
        let f = self.field();
        let n = self.dim();
        let id = Matrix::identity(f, n);
        let lhs = self.comul.kron(&id).mul(&self.comul);
        let rhs = id.kron(&self.comul).mul(&self.comul);
        r.record("coassociativity", lhs.first_difference(&rhs).map_or(Ok(()), |(_, c)| Err(Witness::at(&[c]))));
        let left = self.counit.kron(&id).mul(&self.comul);
        r.record("left-counit", left.first_difference(&id).map_or(Ok(()), |(_, c)| Err(Witness::at(&[c]))));
        let right = id.kron(&self.counit).mul(&self.comul);
        r.record("right-counit", right.first_difference(&id).map_or(Ok(()), |(_, c)| Err(Witness::at(&[c]))));
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group_c2(f: Field) -> Algebra {
        let one = f.one();
        Algebra::from_table(
            f,
            Some(vec!["1".into(), "g".into()]),
            2,
            &[(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 0, 1, one.clone()), (1, 1, 0, one.clone())],
            &[(0, one)],
        )
        .unwrap()
    }

    fn dual_numbers(f: Field) -> Algebra {
        let one = f.one();
        Algebra::from_table(
            f,
            None,
            2,
            &[(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 0, 1, one.clone())],
            &[(0, one)],
        )
        .unwrap()
    }

    #[test]
    fn field_algebra_validates() {
        assert!(Algebra::ground(Field::Rationals).validate().passed());
    }

    #[test]
    fn non_unital_table_fails() {
        let f = Field::Rationals;
        let a = Algebra::from_table(f, None, 2, &[(0, 0, 1, f.one())], &[(0, f.one())]).unwrap();
        let r = a.validate();
        assert!(!r.passed());
        assert!(r.status_of("left-unit") == Some(&crate::report::Status::Fail));
    }

    #[test]
    fn out_of_range_index_is_an_error() {
        let f = Field::Rationals;
        assert!(Algebra::from_table(f, None, 2, &[(0, 5, 0, f.one())], &[(0, f.one())]).is_err());
    }

    #[test]
    fn counit_violation_detected() {
        let f = Field::Rationals;
        let c = Coalgebra::from_table(f, None, 2, &[(0, 0, 1, f.one())], &[(0, f.one())]).unwrap();
        assert!(!c.validate().passed());
    }

    #[test]
    fn dualize_is_an_involution() {
        let a = group_c2(Field::Rationals);
        let c = a.dual();
        assert!(c.validate().passed());
        assert_eq!(c.dual().mul, a.mul);
        assert_eq!(c.dual().labels, a.labels);
    }

    #[test]
    fn radicals() {
        assert_eq!(group_c2(Field::Rationals).jacobson_radical().dim(), 0);
        let f2 = Field::Prime(2);
        let j = group_c2(f2).jacobson_radical();
        assert_eq!(j.dim(), 1);
        assert!(j.contains(&Matrix::from_i64(f2, &[&[1], &[1]])));
        let d = dual_numbers(Field::Rationals);
        let jd = d.jacobson_radical();
        assert_eq!(jd.dim(), 1);
        assert!(jd.contains(&d.basis(1)));
    }

    #[test]
    fn quotient_by_radical_is_the_field() {
        let d = dual_numbers(Field::Rationals);
        let (q, proj) = d.quotient(&d.jacobson_radical()).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(q.validate().passed());
        assert!(proj.mul(&d.unit) == q.unit);
        let (same, _) = d.quotient(&Subspace::zero(d.field(), 2)).unwrap();
        assert_eq!(same.mul, d.mul);
    }

    #[test]
    fn non_ideal_rejected() {
        let a = group_c2(Field::Rationals);
        let s = Subspace::span(&a.basis(1));
        assert_eq!(a.quotient(&s).unwrap_err(), Error::NotAnIdeal);
    }

    #[test]
    fn commutative_algebra_is_its_own_opposite() {
        let a = group_c2(Field::Rationals);
        assert_eq!(a.opposite(), a);
    }
}
