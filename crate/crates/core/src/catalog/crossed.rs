//! Graded representations of the kernel of a finite crossed module.
//!
//! Objects are kL-modules placed in a degree of `Q = G / im t`. The tensor
//! product is `M ⊗_{kL} N^{ᾱ(p⁻¹)}` in degree `pq` and the duality is
//! `(M^{ᾱ(p)})*` in degree `p⁻¹`, where `ᾱ(q)` acts on `L` through the least
//! element of the coset `q`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{group_algebra, GroupSpec};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{tensor_permutation, Matrix};
use crate::rep::{hom_to_regular, is_morphism, Module, Rep};
use crate::report::{Report, Witness};
use crate::subspace::Quotient;

/// A crossed module `(G, H, t, α)` with `α[g][h] = α(g)h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    pub g: GroupSpec,
    pub h: GroupSpec,
    pub t: Vec<usize>,
    pub alpha: Vec<Vec<usize>>,
}

impl CrossedModule {
    pub fn new(g: GroupSpec, h: GroupSpec, t: Vec<usize>, alpha: Vec<Vec<usize>>) -> Result<Self> {
        let c = CrossedModule { g, h, t, alpha };
        c.validate()?;
        Ok(c)
    }

    /// `G = H = C₂`, `t` trivial, `α` trivial.
    pub fn trivial_c2() -> Self {
        let c2 = GroupSpec::cyclic(2);
        CrossedModule::new(c2.clone(), c2, alloc::vec![0, 0], alloc::vec![alloc::vec![0, 1], alloc::vec![0, 1]])
            .expect("valid crossed module")
    }

    pub fn validate(&self) -> Result<()> {
        let (g, h) = (&self.g, &self.h);
        let bad = |m: &str| Err(Error::Invalid(format!("crossed module: {m}")));
        if self.t.len() != h.order() || self.t.iter().any(|&x| x >= g.order()) {
            return bad("t out of range");
        }
        if self.alpha.len() != g.order()
            || self.alpha.iter().any(|r| r.len() != h.order() || r.iter().any(|&x| x >= h.order()))
        {
            return bad("α out of range");
        }
        for a in h.elements() {
            for b in h.elements() {
                if self.t[h.mul(a, b)] != g.mul(self.t[a], self.t[b]) {
                    return bad("t is not a homomorphism");
                }
            }
        }
        for x in g.elements() {
            let mut image = self.alpha[x].clone();
            image.sort_unstable();
            image.dedup();
            if image.len() != h.order() {
                return bad("α(g) is not bijective");
            }
            for a in h.elements() {
                for b in h.elements() {
                    if self.alpha[x][h.mul(a, b)] != h.mul(self.alpha[x][a], self.alpha[x][b]) {
                        return bad("α(g) is not a homomorphism");
                    }
                }
                for y in g.elements() {
                    if self.alpha[g.mul(x, y)][a] != self.alpha[x][self.alpha[y][a]] {
                        return bad("α is not a homomorphism");
                    }
                }
                // t(α(g)h) = g t(h) g⁻¹
                if self.t[self.alpha[x][a]] != g.mul(g.mul(x, self.t[a]), g.inv(x)) {
                    return bad("equivariance of t");
                }
            }
        }
        for l in h.elements() {
            for a in h.elements() {
                // α(t(l))h = l h l⁻¹
                if self.alpha[self.t[l]][a] != h.mul(h.mul(l, a), h.inv(l)) {
                    return bad("Peiffer identity");
                }
            }
        }
        Ok(())
    }
}

/// A kL-module in a fixed degree of `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graded {
    pub degree: usize,
    pub module: Module,
}

/// Evaluator for the tensor product and duality on graded kL-modules.
#[derive(Clone, Debug)]
pub struct CrossedCategory {
    pub crossed: CrossedModule,
    /// Elements of `L = ker t`, sorted, as elements of `H`.
    pub kernel: Vec<usize>,
    pub l_group: GroupSpec,
    pub kl: Algebra,
    /// Least element of each coset of `im t`; index = degree.
    pub section: Vec<usize>,
    image: Vec<usize>,
}

impl CrossedCategory {
    pub fn new(crossed: &CrossedModule, field: Field) -> Result<Self> {
        crossed.validate()?;
        let (g, h) = (&crossed.g, &crossed.h);
        let kernel: Vec<usize> = h.elements().filter(|&x| crossed.t[x] == g.identity).collect();
        let pos = |x: usize| kernel.iter().position(|&y| y == x).expect("kernel is a subgroup");
        let table = kernel.iter().map(|&a| kernel.iter().map(|&b| pos(h.mul(a, b))).collect()).collect();
        let l_group = GroupSpec::new(format!("ker t in {}", h.name), table, pos(h.identity))?;
        let kl = group_algebra(&l_group, field);
        let mut image: Vec<usize> = h.elements().map(|x| crossed.t[x]).collect();
        image.sort_unstable();
        image.dedup();
        let mut section: Vec<usize> =
            g.elements().map(|x| image.iter().map(|&k| g.mul(x, k)).min().expect("nonempty")).collect();
        section.sort_unstable();
        section.dedup();
        Ok(CrossedCategory { crossed: crossed.clone(), kernel, l_group, kl, section, image })
    }

    fn field(&self) -> Field {
        self.kl.field()
    }

    pub fn degrees(&self) -> usize {
        self.section.len()
    }

    fn degree_of(&self, x: usize) -> usize {
        let g = &self.crossed.g;
        let rep = self.image.iter().map(|&k| g.mul(x, k)).min().expect("nonempty");
        self.section.iter().position(|&s| s == rep).expect("every coset has a representative")
    }

    pub fn degree_mul(&self, p: usize, q: usize) -> usize {
        self.degree_of(self.crossed.g.mul(self.section[p], self.section[q]))
    }

    pub fn degree_inv(&self, p: usize) -> usize {
        self.degree_of(self.crossed.g.inv(self.section[p]))
    }

    /// Permutation of the basis of kL by `ᾱ(p)`.
    fn alpha_bar(&self, p: usize) -> Matrix {
        let a = &self.crossed.alpha[self.section[p]];
        let n = self.kernel.len();
        let entries = self.kernel.iter().enumerate().map(|(i, &l)| {
            let j = self.kernel.iter().position(|&y| y == a[l]).expect("α preserves ker t");
            (j, i, self.field().one())
        });
        Matrix::from_entries(self.field(), n, n, entries.collect::<Vec<_>>())
    }

    /// `M^{ᾱ(p)}`: `l` acts as `ᾱ(p)l`.
    pub fn twist(&self, m: &Module, p: usize) -> Module {
        let action = m.action.mul(&self.alpha_bar(p).kron(&Matrix::identity(self.field(), m.dim())));
        Module { algebra: self.kl.clone(), action }
    }

    pub fn object(&self, degree: usize, module: Module) -> Result<Graded> {
        if module.algebra != self.kl || degree >= self.degrees() {
            return Err(Error::Invalid(String::from("not a graded kL-module")));
        }
        Ok(Graded { degree, module })
    }

    pub fn unit(&self) -> Graded {
        Graded { degree: self.degree_of(self.crossed.g.identity), module: Module::regular(&self.kl) }
    }

    pub fn tensor(&self, m: &Graded, n: &Graded) -> Graded {
        let f = self.field();
        let nt = self.twist(&n.module, self.degree_inv(m.degree));
        let (a, dm, dn) = (self.kl.dim(), m.module.dim(), nt.dim());
        let id_n = Matrix::identity(f, dn);
        // (l m) ⊗ n − m ⊗ (l n)
        let left = m.module.action.kron(&id_n);
        let right = Matrix::identity(f, dm).kron(&nt.action).mul(&tensor_permutation(f, &[a, dm, dn], &[1, 0, 2]));
        let q = Quotient::cokernel(&left.sub(&right));
        let action = Matrix::chain(&[&q.proj, &left, &q.section.pad(a, 1)]);
        Graded { degree: self.degree_mul(m.degree, n.degree), module: Module { algebra: self.kl.clone(), action } }
    }

    pub fn dual(&self, m: &Graded) -> Graded {
        let mut module = self.twist(&m.module, m.degree).transpose_dual();
        // kL is commutative, so its opposite has the same table
        module.algebra = self.kl.clone();
        Graded { degree: self.degree_inv(m.degree), module }
    }

    /// Objects the suite sweeps: regular and trivial modules in every degree.
    pub fn stored_objects(&self) -> Vec<Graded> {
        let trivial = Module::from_character(
            &self.kl,
            &Matrix::from_entries(
                self.field(),
                1,
                self.kl.dim(),
                (0..self.kl.dim()).map(|i| (0, i, self.field().one())).collect::<Vec<_>>(),
            ),
        );
        (0..self.degrees())
            .flat_map(|p| {
                [Graded { degree: p, module: Module::regular(&self.kl) }, Graded { degree: p, module: trivial.clone() }]
            })
            .collect()
    }
}

/// A dual pair for `M` under `⊗_{kL}`: `Y = Hom(M, kL)`, `ev(f ⊗ v) = f(v)` and
/// `coev(1) = Σ c_{x,s} x ⊗ f_s`.
///
/// Twisting by `ᾱ` is an autoequivalence, so solving the pair in degree one
/// decides rigidity in every degree.
#[derive(Clone, Debug)]
pub struct RigidDual {
    pub dual: Module,
    pub ev: Matrix,
    pub coev: Matrix,
}

/// Solves the snake identities for `coev`; `None` when they are inconsistent.
pub fn rigid_dual(m: &Module) -> Result<Option<RigidDual>> {
    if !m.algebra.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let f = m.field();
    let d = m.dim();
    let (y, fs, _) = hom_to_regular(m)?;
    let r = fs.len();
    let mut snake_m = Vec::with_capacity(d * r);
    let mut snake_y = Vec::with_capacity(d * r);
    for x in 0..d {
        let ex = Matrix::unit_vector(f, d, x);
        for (s, fsel) in fs.iter().enumerate() {
            // v ↦ f_s(v)·x
            snake_m.push(m.action.mul(&fsel.kron(&ex)).flatten());
            // f_j ↦ f_j(x)·f_s
            let es = Matrix::unit_vector(f, r, s);
            let cols: Vec<Matrix> = fs.iter().map(|fj| y.action.mul(&fj.mul(&ex).kron(&es))).collect();
            snake_y.push(Matrix::hcat(f, r, &cols).flatten());
        }
    }
    let system = Matrix::hcat(f, d * d, &snake_m).vstack(&Matrix::hcat(f, r * r, &snake_y));
    let target = Matrix::identity(f, d).flatten().vstack(&Matrix::identity(f, r).flatten());
    let Some(c) = system.solve(&target)? else {
        return Ok(None);
    };
    let ev_cols: Vec<Matrix> = fs.iter().flat_map(|g| (0..d).map(|v| g.mul(&Matrix::unit_vector(f, d, v)))).collect();
    let ev = Matrix::hcat(f, m.algebra.dim(), &ev_cols);
    Ok(Some(RigidDual { dual: y, ev, coev: c }))
}

/// Axioms, degree bookkeeping, involutivity of the duality and rigidity against `char ∤ |L|`.
pub fn crossed_suite(crossed: &CrossedModule, field: Field) -> Result<Report> {
    let cat = CrossedCategory::new(crossed, field)?;
    let f = field;
    let mut r = Report::new("crossed module representations");
    r.pass("axioms", "crossed-module identities hold on all pairs");
    r.finding(format!("|L| = {}, |Q| = {}, section {:?}", cat.kernel.len(), cat.degrees(), cat.section));
    let stored = cat.stored_objects();

    let mut degrees = Ok(());
    let mut involutive = Ok(());
    for (i, m) in stored.iter().enumerate() {
        let d = cat.dual(m);
        for n in &stored {
            if cat.tensor(m, n).degree != cat.degree_mul(m.degree, n.degree) {
                degrees = degrees.and(Err(Witness::at(&[i])));
            }
        }
        if d.degree != cat.degree_inv(m.degree) || !d.module.validate().passed() {
            degrees = degrees.and(Err(Witness::at(&[i])));
        }
        let dd = cat.dual(&d);
        if dd.degree != m.degree || !is_morphism(&m.module, &dd.module, &Matrix::identity(f, m.module.dim())) {
            involutive = involutive.and(Err(Witness::at(&[i])));
        }
    }
    r.record("degree-bookkeeping", degrees);
    r.record("double-dual", involutive);

    let unit = cat.unit();
    let du = cat.dual(&unit);
    let lg = &cat.l_group;
    // e_l ↦ δ_{l⁻¹}
    let iso = Matrix::from_entries(
        f,
        lg.order(),
        lg.order(),
        lg.elements().map(|l| (lg.inv(l), l, f.one())).collect::<Vec<_>>(),
    );
    r.expect(
        "dual-of-unit",
        du.degree == unit.degree && is_morphism(&unit.module, &du.module, &iso),
        "the dualising object kL* is isomorphic to the unit",
    );

    let unit_tensor = stored.iter().all(|m| {
        let t = cat.tensor(&unit, m);
        t.degree == m.degree && t.module.dim() == m.module.dim()
    });
    r.expect("unit-tensor", unit_tensor, "kL ⊗ M has the dimension and degree of M");

    let mut all_rigid = true;
    for (i, m) in stored.iter().enumerate() {
        let rigid = rigid_dual(&m.module)?.is_some();
        if !rigid {
            r.finding(format!("object {i} (dim {}, degree {}) has no rigid dual", m.module.dim(), m.degree));
        }
        all_rigid &= rigid;
    }
    let p = f.characteristic();
    let coprime = p == 0 || !(cat.kernel.len() as u64).is_multiple_of(p);
    r.expect(
        "rigid-iff-coprime",
        all_rigid == coprime,
        "every stored object is rigid exactly when char does not divide |L|",
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_and_quotient() {
        let cat = CrossedCategory::new(&CrossedModule::trivial_c2(), Field::Rationals).unwrap();
        assert_eq!(cat.kernel.len(), 2);
        assert_eq!(cat.degrees(), 2);
        assert_eq!(cat.degree_inv(1), 1);
    }

    #[test]
    fn rational_objects_are_rigid() {
        let r = crossed_suite(&CrossedModule::trivial_c2(), Field::Rationals).unwrap();
        assert!(r.passed(), "{r:?}");
        let cat = CrossedCategory::new(&CrossedModule::trivial_c2(), Field::Rationals).unwrap();
        for m in cat.stored_objects() {
            assert!(rigid_dual(&m.module).unwrap().is_some());
        }
    }

    #[test]
    fn char_two_trivial_module_is_not_rigid() {
        let f = Field::prime(2).unwrap();
        let r = crossed_suite(&CrossedModule::trivial_c2(), f).unwrap();
        assert!(r.passed(), "{r:?}");
        let cat = CrossedCategory::new(&CrossedModule::trivial_c2(), f).unwrap();
        let stored = cat.stored_objects();
        assert!(rigid_dual(&stored[0].module).unwrap().is_some());
        assert!(rigid_dual(&stored[1].module).unwrap().is_none());
    }

    #[test]
    fn dual_degree_is_inverse() {
        // G = C₃, H trivial: L trivial, Q = C₃
        let cm = CrossedModule::new(
            GroupSpec::cyclic(3),
            GroupSpec::cyclic(1),
            alloc::vec![0],
            alloc::vec![alloc::vec![0]; 3],
        )
        .unwrap();
        let cat = CrossedCategory::new(&cm, Field::prime(3).unwrap()).unwrap();
        let m = cat.object(1, Module::regular(&cat.kl)).unwrap();
        assert_eq!(cat.dual(&m).degree, 2);
        assert_eq!(cat.tensor(&m, &m).degree, 2);
        assert!(crossed_suite(&cm, Field::prime(3).unwrap()).unwrap().passed());
    }

    #[test]
    fn axioms_rejected() {
        let c2 = GroupSpec::cyclic(2);
        // α(1) does not fix the identity
        let bad =
            CrossedModule::new(c2.clone(), c2, alloc::vec![0, 1], alloc::vec![alloc::vec![0, 1], alloc::vec![1, 0]]);
        assert!(bad.is_err());
    }
}
