//! Path algebras of finite Boolean lattices and their duality.
//!
//! The lattice is read as a poset and the algebra has one basis path `[e, f]`
//! per comparable pair `e ≤ f`, multiplied by concatenation
//! `[e, f][f, g] = [e, g]`. Right modules are modules over the opposite
//! algebra.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Entry};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::rep::{is_morphism, Module, Rep};
use crate::report::{Report, Witness};
use crate::subspace::Subspace;

/// A finite bounded lattice with complements, given by tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSpec {
    pub names: Vec<String>,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub complement: Vec<usize>,
    pub bottom: usize,
    pub top: usize,
}

impl LatticeSpec {
    /// Subsets of a `k`-element set, encoded as bitmasks.
    pub fn boolean(k: u32) -> Result<Self> {
        if k > 4 {
            return Err(Error::OutOfScope(format!("Boolean lattice on {k} atoms")));
        }
        let n = 1usize << k;
        let full = n - 1;
        let names = (0..n)
            .map(|a| match a {
                0 => String::from("0"),
                a if a == full => String::from("1"),
                a => format!("{a:0w$b}", w = k as usize),
            })
            .collect();
        let l = LatticeSpec {
            names,
            meet: (0..n).map(|a| (0..n).map(|b| a & b).collect()).collect(),
            join: (0..n).map(|a| (0..n).map(|b| a | b).collect()).collect(),
            complement: (0..n).map(|a| full & !a).collect(),
            bottom: 0,
            top: full,
        };
        l.validate()?;
        Ok(l)
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.meet[a][b] == a
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.size();
        let bad = |m: &str| Err(Error::InvalidLattice(String::from(m)));
        let square = |t: &Vec<Vec<usize>>| t.len() == n && t.iter().all(|r| r.len() == n && r.iter().all(|&x| x < n));
        if n == 0 || !square(&self.meet) || !square(&self.join) || self.complement.len() != n {
            return bad("malformed tables");
        }
        if self.bottom >= n || self.top >= n || self.complement.iter().any(|&c| c >= n) {
            return bad("element out of range");
        }
        let (m, j) = (&self.meet, &self.join);
        for a in 0..n {
            if m[a][a] != a || j[a][a] != a {
                return bad("idempotence");
            }
            if m[a][self.bottom] != self.bottom || j[a][self.top] != self.top {
                return bad("bounds");
            }
            let c = self.complement[a];
            if m[a][c] != self.bottom || j[a][c] != self.top {
                return bad("complement");
            }
            for b in 0..n {
                if m[a][b] != m[b][a] || j[a][b] != j[b][a] {
                    return bad("commutativity");
                }
                if m[a][j[a][b]] != a || j[a][m[a][b]] != a {
                    return bad("absorption");
                }
                for c in 0..n {
                    if m[m[a][b]][c] != m[a][m[b][c]] || j[j[a][b]][c] != j[a][j[b][c]] {
                        return bad("associativity");
                    }
                    if m[a][j[b][c]] != j[m[a][b]][m[a][c]] {
                        return bad("distributivity");
                    }
                }
            }
        }
        Ok(())
    }
}

/// The path algebra of a lattice with its basis paths.
#[derive(Clone, Debug)]
pub struct PathAlgebra {
    pub lattice: LatticeSpec,
    pub algebra: Algebra,
    /// Basis paths `(e, f)` with `e ≤ f`, in lexicographic order.
    pub paths: Vec<(usize, usize)>,
}

impl PathAlgebra {
    pub fn new(lattice: &LatticeSpec, field: Field) -> Result<Self> {
        lattice.validate()?;
        let n = lattice.size();
        let paths: Vec<(usize, usize)> =
            (0..n).flat_map(|e| (0..n).map(move |f| (e, f))).filter(|&(e, f)| lattice.leq(e, f)).collect();
        let index = |e: usize, f: usize| paths.iter().position(|&p| p == (e, f));
        let mut table: Vec<Entry> = Vec::new();
        for (i, &(e, f)) in paths.iter().enumerate() {
            for (j, &(f2, g)) in paths.iter().enumerate() {
                if f == f2 {
                    table.push((i, j, index(e, g).expect("order is transitive"), field.one()));
                }
            }
        }
        let unit: Vec<_> = (0..n).map(|e| (index(e, e).expect("reflexive"), field.one())).collect();
        let labels = paths.iter().map(|&(e, f)| format!("[{},{}]", lattice.names[e], lattice.names[f])).collect();
        let algebra = Algebra::from_table(field, Some(labels), paths.len(), &table, &unit)?;
        let report = algebra.validate();
        if !report.passed() {
            return Err(Error::Invalid(String::from("path algebra fails validation")));
        }
        Ok(PathAlgebra { lattice: lattice.clone(), algebra, paths })
    }

    pub fn index(&self, e: usize, f: usize) -> Option<usize> {
        self.paths.iter().position(|&p| p == (e, f))
    }

    fn field(&self) -> Field {
        self.algebra.field()
    }

    /// The complement anti-automorphism `[e, f] ↦ [f^⊥, e^⊥]`.
    pub fn complement_map(&self) -> Matrix {
        let c = &self.lattice.complement;
        let entries =
            self.paths.iter().enumerate().map(|(i, &(e, f))| {
                (self.index(c[f], c[e]).expect("complement reverses order"), i, self.field().one())
            });
        Matrix::from_entries(self.field(), self.paths.len(), self.paths.len(), entries.collect::<Vec<_>>())
    }

    fn span_of(&self, keep: impl Fn(usize, usize) -> bool) -> Subspace {
        let n = self.paths.len();
        let cols: Vec<Matrix> = (0..n)
            .filter(|&i| keep(self.paths[i].0, self.paths[i].1))
            .map(|i| Matrix::unit_vector(self.field(), n, i))
            .collect();
        Subspace::from_columns(self.field(), n, &cols)
    }

    /// Right regular module, as a module over the opposite algebra.
    pub fn right_regular(&self) -> Module {
        Module::regular(&self.algebra.opposite())
    }

    /// The indecomposable projective right module `eA`.
    pub fn right_projective(&self, e: usize) -> Module {
        let sub = self.span_of(|x, _| x == e);
        self.right_regular().restrict(&sub).expect("eA is a right ideal")
    }

    /// The indecomposable projective left module `Ae`.
    pub fn left_projective(&self, e: usize) -> Module {
        let sub = self.span_of(|_, y| y == e);
        Module::regular(&self.algebra).restrict(&sub).expect("Ae is a left ideal")
    }

    /// The simple right module at `e`.
    pub fn right_simple(&self, e: usize) -> Module {
        let n = self.paths.len();
        let chi =
            Matrix::from_entries(self.field(), 1, n, [(0, self.index(e, e).expect("reflexive"), self.field().one())]);
        Module::from_character(&self.algebra.opposite(), &chi)
    }

    /// `M ↦ (M_φ)*` on right modules: twist by the complement map, then dualise.
    pub fn duality(&self, m: &Module) -> Module {
        let twisted = Module {
            algebra: self.algebra.clone(),
            action: m.action.mul(&self.complement_map().kron(&Matrix::identity(self.field(), m.dim()))),
        };
        twisted.transpose_dual()
    }
}

fn first_bad_triple(l: &LatticeSpec) -> Option<[usize; 3]> {
    let n = l.size();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = l.leq(l.meet[b][a], c);
                let rhs = l.leq(b, l.join[c][l.complement[a]]);
                if lhs != rhs {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// Adjunction, duality, QF-2 and the quasi-Frobenius criterion for the path algebra of `l`.
pub fn boolean_suite(l: &LatticeSpec, field: Field) -> Result<Report> {
    let pa = PathAlgebra::new(l, field)?;
    let a = &pa.algebra;
    let n = l.size();
    let mut r = Report::new(format!("boolean lattice of size {n}"));
    r.finding(format!("path algebra dimension {}", a.dim()));
    r.record("adjunction", first_bad_triple(l).map_or(Ok(()), |t| Err(Witness::at(&t))));

    let phi = pa.complement_map();
    let anti = (0..a.dim()).flat_map(|i| (0..a.dim()).map(move |j| (i, j))).find(|&(i, j)| {
        let (x, y) = (a.basis(i), a.basis(j));
        phi.mul(&a.product(&x, &y)) != a.product(&phi.mul(&y), &phi.mul(&x))
    });
    r.record("anti-isomorphism", anti.map_or(Ok(()), |(i, j)| Err(Witness::at(&[i, j]))));
    r.expect("involution", phi.mul(&phi).is_identity(), "complementing twice is the identity");

    let top = l.top;
    let bottom = l.bottom;
    let mut right_ok = Ok(());
    let mut left_ok = Ok(());
    for e in 0..n {
        let p = pa.right_projective(e);
        let soc = p.socle();
        // eA has basis [e, y] for y ≥ e in path order; locate [e, 1] inside it
        let pos = pa.paths.iter().filter(|&&(x, _)| x == e).position(|&(_, y)| y == top).expect("top is above e");
        if soc.dim() != 1 || !soc.contains(&Matrix::unit_vector(field, p.dim(), pos)) {
            right_ok = right_ok.and(Err(Witness::at(&[e])));
        }
        let q = pa.left_projective(e);
        let soc = q.socle();
        let pos = pa.paths.iter().filter(|&&(_, y)| y == e).position(|&(x, _)| x == bottom).expect("bottom is below e");
        if soc.dim() != 1 || !soc.contains(&Matrix::unit_vector(field, q.dim(), pos)) {
            left_ok = left_ok.and(Err(Witness::at(&[e])));
        }
    }
    r.record("qf2-right", right_ok);
    r.record("qf2-left", left_ok);

    let qf = pa.right_regular().is_injective()? && Module::regular(a).is_injective()?;
    r.finding(format!("quasi-Frobenius: {qf}"));
    r.expect("quasi-frobenius-iff-trivial", qf == (n == 1), "self-injective exactly for the one-point lattice");

    let mut stored = Vec::new();
    for e in 0..n {
        stored.push(pa.right_projective(e));
        stored.push(pa.right_simple(e));
    }
    let duals: Vec<Module> = stored.iter().map(|m| pa.duality(m)).collect();
    stored.extend(duals);
    let mut swap = Ok(());
    let mut involutive = Ok(());
    for (i, m) in stored.iter().enumerate() {
        let d = pa.duality(m);
        if m.is_projective()? != d.is_injective()? || m.is_injective()? != d.is_projective()? {
            swap = swap.and(Err(Witness::at(&[i])));
        }
        let dd = pa.duality(&d);
        if !is_morphism(m, &dd, &Matrix::identity(field, m.dim())) {
            involutive = involutive.and(Err(Witness::at(&[i])));
        }
    }
    r.record("duality-swap", swap);
    r.record("duality-involutive", involutive);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_element_lattice_has_nine_paths() {
        let l = LatticeSpec::boolean(2).unwrap();
        let pa = PathAlgebra::new(&l, Field::Rationals).unwrap();
        assert_eq!(pa.algebra.dim(), 9);
        assert!(!pa.algebra.is_semisimple());
    }

    #[test]
    fn invalid_lattice_rejected() {
        let mut l = LatticeSpec::boolean(1).unwrap();
        l.complement = alloc::vec![0, 1];
        assert!(matches!(l.validate(), Err(Error::InvalidLattice(_))));
        assert!(PathAlgebra::new(&l, Field::Rationals).is_err());
    }

    #[test]
    fn suites_over_small_lattices() {
        for k in 0..3 {
            let l = LatticeSpec::boolean(k).unwrap();
            let r = boolean_suite(&l, Field::Rationals).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn chain_is_qf2_but_not_qf() {
        let l = LatticeSpec::boolean(1).unwrap();
        let pa = PathAlgebra::new(&l, Field::prime(2).unwrap()).unwrap();
        assert_eq!(pa.algebra.dim(), 3);
        assert!(!pa.right_regular().is_injective().unwrap());
        assert_eq!(pa.right_projective(0).socle().dim(), 1);
    }

    #[test]
    fn duality_sends_projectives_to_injectives() {
        let l = LatticeSpec::boolean(2).unwrap();
        let pa = PathAlgebra::new(&l, Field::Rationals).unwrap();
        let p = pa.right_projective(0);
        let d = pa.duality(&p);
        assert!(d.validate().passed());
        assert!(d.is_injective().unwrap());
    }
}
