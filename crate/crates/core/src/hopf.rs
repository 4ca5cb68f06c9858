//! Bialgebras, antipodes, Galois maps, group-likes and characters.

use alloc::format;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Coalgebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linsys::{LinearSystem, Term};
use crate::matrix::{swap, tensor_permutation, Matrix};
use crate::report::{Report, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    pub algebra: Algebra,
    pub coalgebra: Coalgebra,
}

/// Which coproduct the antipode equations are taken against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Orientation {
    Plain,
    Flipped,
}

impl Bialgebra {
    pub fn new(algebra: Algebra, coalgebra: Coalgebra) -> Result<Self> {
        if algebra.field() != coalgebra.field() {
            return Err(Error::FieldMismatch);
        }
        if algebra.dim() != coalgebra.dim() {
            return Err(Error::Invalid(format!(
                "algebra has dimension {} but coalgebra has dimension {}",
                algebra.dim(),
                coalgebra.dim()
            )));
        }
        Ok(Bialgebra { algebra, coalgebra })
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn mul(&self) -> &Matrix {
        &self.algebra.mul
    }

    pub fn unit(&self) -> &Matrix {
        &self.algebra.unit
    }

    pub fn comul(&self) -> &Matrix {
        &self.coalgebra.comul
    }

    pub fn counit(&self) -> &Matrix {
        &self.coalgebra.counit
    }

    pub fn id(&self) -> Matrix {
        Matrix::identity(self.field(), self.dim())
    }

    pub fn flip(&self) -> Matrix {
        swap(self.field(), self.dim(), self.dim())
    }

    /// `(Δ ⊗ id) Δ`.
    pub fn comul2(&self) -> Matrix {
        self.coalgebra.double_comul()
    }

    /// `(Δ ⊗ id ⊗ id)(Δ ⊗ id) Δ`.
    pub fn comul3(&self) -> Matrix {
        let id = self.id();
        Matrix::chain(&[&self.comul().kron(&id).kron(&id), &self.comul().kron(&id), self.comul()])
    }

    /// Multiplication of `B ⊗ B`.
    pub fn mul2(&self) -> Matrix {
        let n = self.dim();
        self.mul().kron(self.mul()).mul(&tensor_permutation(self.field(), &[n, n, n, n], &[0, 2, 1, 3]))
    }

    /// Multiplication of `B ⊗ B ⊗ B`.
    pub fn mul3(&self) -> Matrix {
        let n = self.dim();
        let m = self.mul();
        m.kron(m).kron(m).mul(&tensor_permutation(self.field(), &[n; 6], &[0, 3, 1, 4, 2, 5]))
    }

    /// Convolution `m (f ⊗ g) Δ` of two endomorphisms.
    pub fn convolve(&self, f: &Matrix, g: &Matrix) -> Matrix {
        Matrix::chain(&[self.mul(), &f.kron(g), self.comul()])
    }

    pub fn is_cocommutative(&self) -> bool {
        self.coalgebra.is_cocommutative()
    }

    pub fn coopposite(&self) -> Bialgebra {
        Bialgebra { algebra: self.algebra.clone(), coalgebra: self.coalgebra.coopposite() }
    }

    pub fn validate(&self) -> Report {
        let mut r = Report::new("bialgebra");
        r.absorb("algebra", self.algebra.validate());
        r.absorb("coalgebra", self.coalgebra.validate());
        let n = self.dim();
        let pair = |c: usize| Witness::at(&[c / n, c % n]);
        let lhs = self.comul().mul(self.mul());
        let rhs = self.mul2().mul(&self.comul().kron(self.comul()));
        r.record("comul-multiplicative", lhs.first_difference(&rhs).map_or(Ok(()), |(_, c)| Err(pair(c))));
        let lhs = self.counit().mul(self.mul());
        let rhs = self.counit().kron(self.counit());
        r.record("counit-multiplicative", lhs.first_difference(&rhs).map_or(Ok(()), |(_, c)| Err(pair(c))));
        let ok = self.comul().mul(self.unit()) == self.unit().kron(self.unit());
        r.expect("comul-unital", ok, "Δ(1) = 1⊗1");
        let ok = self.counit().mul(self.unit()).is_identity();
        r.expect("counit-unital", ok, "ε(1) = 1");
        r
    }

    fn antipode_system(&self, o: Orientation) -> LinearSystem {
        let f = self.field();
        let n = self.dim();
        let delta = match o {
            Orientation::Plain => self.comul().clone(),
            Orientation::Flipped => self.flip().mul(self.comul()),
        };
        let ue = self.unit().mul(self.counit());
        let mut sys = LinearSystem::new(f, n, n);
        sys.equation(&[Term::new(self.mul().clone(), 1, n, delta.clone())], Some(&ue));
        sys.equation(&[Term::new(self.mul().clone(), n, 1, delta)], Some(&ue));
        sys
    }

    /// Convolution inverse of the identity, if it exists.
    pub fn solve_antipode(&self) -> Option<Matrix> {
        self.antipode_system(Orientation::Plain).solve()
    }

    /// Antipode of the co-opposite bialgebra, if it exists.
    pub fn solve_twisted_antipode(&self) -> Option<Matrix> {
        self.antipode_system(Orientation::Flipped).solve()
    }

    /// `b ⊗ b′ ↦ b₁ ⊗ b₂b′`.
    pub fn left_galois(&self) -> Matrix {
        let id = self.id();
        id.kron(self.mul()).mul(&self.comul().kron(&id))
    }

    /// `b ⊗ b′ ↦ b₁b′ ⊗ b₂`.
    pub fn right_galois(&self) -> Matrix {
        let id = self.id();
        Matrix::chain(&[&self.mul().kron(&id), &id.kron(&self.flip()), &self.comul().kron(&id)])
    }

    pub fn is_grouplike(&self, g: &Matrix) -> bool {
        self.comul().mul(g) == g.kron(g) && self.counit().mul(g).is_identity()
    }

    pub fn is_character(&self, beta: &Matrix) -> bool {
        beta.mul(self.mul()) == beta.kron(beta) && beta.mul(self.unit()).is_identity()
    }

    /// Every vector over a finite field in lexicographic order, produced lazily.
    fn enumerate(&self, budget: u128) -> Result<impl Iterator<Item = Vec<crate::field::Scalar>>> {
        let f = self.field();
        let Some(q) = f.order() else {
            return Err(Error::OutOfScope("brute force needs a finite field".into()));
        };
        let n = self.dim();
        let needed = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        let elems = f.elements().expect("finite field");
        Ok((0..needed).map(move |idx| {
            let mut rest = idx;
            let mut v = alloc::vec![f.zero(); n];
            for k in (0..n).rev() {
                v[k] = elems[(rest % q as u128) as usize].clone();
                rest /= q as u128;
            }
            v
        }))
    }

    /// All group-likes by exhaustion over a finite field (lexicographic order).
    pub fn grouplikes_brute_force(&self, budget: u128) -> Result<Vec<Matrix>> {
        let f = self.field();
        let eps = self.counit();
        let one = f.one();
        Ok(self
            .enumerate(budget)?
            .map(|v| Matrix::column(f, &v))
            .filter(|g| eps.mul(g).get(0, 0) == one && self.is_grouplike(g))
            .collect())
    }

    /// All characters by exhaustion over a finite field (lexicographic order).
    pub fn characters_brute_force(&self, budget: u128) -> Result<Vec<Matrix>> {
        let f = self.field();
        let unit = self.unit();
        let one = f.one();
        Ok(self
            .enumerate(budget)?
            .map(|v| Matrix::row_vector(f, &v))
            .filter(|b| b.mul(unit).get(0, 0) == one && self.is_character(b))
            .collect())
    }

    /// Keeps only the candidates that really are group-likes.
    pub fn verify_grouplikes(&self, candidates: &[Matrix]) -> Vec<Matrix> {
        candidates.iter().filter(|g| g.shape() == (self.dim(), 1) && self.is_grouplike(g)).cloned().collect()
    }

    pub fn verify_characters(&self, candidates: &[Matrix]) -> Vec<Matrix> {
        candidates.iter().filter(|b| b.shape() == (1, self.dim()) && self.is_character(b)).cloned().collect()
    }
}

/// A bialgebra with its (bijective) antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hopf {
    pub bialgebra: Bialgebra,
    pub antipode: Matrix,
    pub antipode_inv: Matrix,
    pub twisted_antipode: Matrix,
}

impl Hopf {
    pub fn new(bialgebra: Bialgebra) -> Result<Self> {
        let antipode = bialgebra.solve_antipode().ok_or(Error::NoAntipode)?;
        let antipode_inv = antipode.inverse()?.ok_or(Error::Singular("antipode"))?;
        let twisted_antipode = bialgebra.solve_twisted_antipode().ok_or(Error::NoTwistedAntipode)?;
        Ok(Hopf { bialgebra, antipode, antipode_inv, twisted_antipode })
    }

    pub fn field(&self) -> Field {
        self.bialgebra.field()
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.bialgebra.algebra
    }

    pub fn s2(&self) -> Matrix {
        self.antipode.mul(&self.antipode)
    }

    /// Antipode equations plus the derived identities they imply.
    pub fn validate(&self) -> Report {
        let b = &self.bialgebra;
        let mut r = b.validate();
        let ue = b.unit().mul(b.counit());
        let id = b.id();
        r.expect("antipode-left", b.convolve(&self.antipode, &id) == ue, "m(S⊗id)Δ = uε");
        r.expect("antipode-right", b.convolve(&id, &self.antipode) == ue, "m(id⊗S)Δ = uε");
        let anti =
            self.antipode.mul(b.mul()) == Matrix::chain(&[b.mul(), &b.flip(), &self.antipode.kron(&self.antipode)]);
        r.expect("antipode-antimultiplicative", anti, "S(ab) = S(b)S(a)");
        let anti_co = b.comul().mul(&self.antipode)
            == Matrix::chain(&[&self.antipode.kron(&self.antipode), &b.flip(), b.comul()]);
        r.expect("antipode-anticomultiplicative", anti_co, "ΔS = (S⊗S)Δcop");
        r.expect("antipode-bijective", self.antipode.mul(&self.antipode_inv).is_identity(), "S S⁻¹ = id");
        let flipped = b.flip().mul(b.comul());
        let tw_left = Matrix::chain(&[b.mul(), &self.twisted_antipode.kron(&id), &flipped]) == ue;
        let tw_right = Matrix::chain(&[b.mul(), &id.kron(&self.twisted_antipode), &flipped]) == ue;
        r.expect("twisted-antipode", tw_left && tw_right, "m(S̄⊗id)Δcop = uε = m(id⊗S̄)Δcop");
        r
    }

    /// Checks A (one-dimensional anti-Yetter–Drinfeld condition) and B (`Ad_g = Ad_β ∘ S²`).
    pub fn pair_in_involution(&self, g: &Matrix, beta: &Matrix) -> Result<Report> {
        let b = &self.bialgebra;
        let a = &b.algebra;
        let g_inv = a.inverse_element(g).ok_or(Error::Singular("group-like"))?;
        let beta_s = beta.mul(&self.antipode);
        if beta.kron(&beta_s).mul(b.comul()) != *b.counit() {
            return Err(Error::Singular("character"));
        }
        let d2 = b.comul2();
        let mut r = Report::new("pair-in-involution");

        // A: β(h) g = β(h₂) h₁ g S⁻¹(h₃)
        let lhs = g.mul(beta);
        let rg = a.right_mult(g);
        let rhs = Matrix::chain(&[b.mul(), &rg.kron(beta).kron(&self.antipode_inv), &d2]);
        r.record("A", lhs.first_difference(&rhs).map_or(Ok(()), |(_, h)| Err(Witness::at(&[h]))));

        // B: g h g⁻¹ = β(h₁) S²(h₂) β(S(h₃))
        let lhs = a.left_mult(g).mul(&a.right_mult(&g_inv));
        let rhs = beta.kron(&self.s2()).kron(&beta_s).mul(&d2);
        r.record("B", lhs.first_difference(&rhs).map_or(Ok(()), |(_, h)| Err(Witness::at(&[h]))));
        Ok(r)
    }

    /// Whether `S²(h) = g h g⁻¹` for all `h`.
    pub fn implements_square(&self, g: &Matrix) -> bool {
        let a = self.algebra();
        match a.inverse_element(g) {
            Some(gi) => a.left_mult(g).mul(&a.right_mult(&gi)) == self.s2(),
            None => false,
        }
    }

    /// First group-like implementing `S²` by conjugation.
    pub fn pivotal_element(&self, grouplikes: &[Matrix]) -> Option<Matrix> {
        grouplikes.iter().find(|g| self.bialgebra.is_grouplike(g) && self.implements_square(g)).cloned()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Scalar;

    fn c2(f: Field, grouplike: bool) -> Bialgebra {
        let one = f.one();
        let a = Algebra::from_table(
            f,
            None,
            2,
            &[(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 0, 1, one.clone()), (1, 1, 0, one.clone())],
            &[(0, one.clone())],
        )
        .unwrap();
        let comul: Vec<(usize, usize, usize, Scalar)> = if grouplike {
            alloc::vec![(0, 0, 0, one.clone()), (1, 1, 1, one.clone())]
        } else {
            alloc::vec![(0, 0, 0, one.clone()), (1, 1, 0, one.clone())]
        };
        let c = Coalgebra::from_table(f, None, 2, &comul, &[(0, one.clone()), (1, one)]).unwrap();
        Bialgebra::new(a, c).unwrap()
    }

    #[test]
    fn c2_is_hopf() {
        let b = c2(Field::Rationals, true);
        assert!(b.validate().passed());
        let h = Hopf::new(b).unwrap();
        assert!(h.antipode.is_identity());
        assert!(h.validate().passed());
        assert!(h.bialgebra.left_galois().is_invertible());
        assert!(h.bialgebra.right_galois().is_invertible());
    }

    #[test]
    fn broken_comultiplication_fails() {
        assert!(!c2(Field::Rationals, false).validate().passed());
    }

    #[test]
    fn grouplikes_over_f3() {
        let b = c2(Field::Prime(3), true);
        let g = b.grouplikes_brute_force(1 << 20).unwrap();
        assert_eq!(g, alloc::vec![b.algebra.basis(1), b.algebra.basis(0)]);
        assert!(matches!(b.grouplikes_brute_force(4), Err(Error::BudgetExceeded { .. })));
        assert!(c2(Field::Rationals, true).grouplikes_brute_force(1 << 20).is_err());
    }

    #[test]
    fn checks_a_and_b_differ_by_antipode_twist() {
        let ex =
            crate::catalog::build_example(crate::catalog::ExampleName::Taft { n: 3, q: 2 }, Field::prime(7).unwrap())
                .unwrap();
        let h = Hopf::new(ex.bialgebra).unwrap();
        let pass = |r: &Report, id: &str| r.status_of(id) == Some(&crate::Status::Pass);
        let mut differ = false;
        for g in &ex.grouplikes {
            for beta in &ex.characters {
                let direct = h.pair_in_involution(g, beta).unwrap();
                let twisted = h.pair_in_involution(g, &beta.mul(&h.antipode)).unwrap();
                assert_eq!(pass(&direct, "A"), pass(&twisted, "B"));
                differ |= pass(&direct, "A") != pass(&direct, "B");
            }
        }
        assert!(differ);
    }
}
