//! Module algebras over a bialgebra, their smash products, and internal
//! endomorphism algebras of modules over a Hopf algebra.

use alloc::format;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Entry};
use crate::error::{Error, Result};
use crate::hopf::{Bialgebra, Hopf};
use crate::matrix::{tensor_permutation, Matrix};
use crate::rep::{hom_space, Module, Rep};
use crate::report::{Report, Witness};
use crate::subspace::Subspace;

fn witness(lhs: &Matrix, rhs: &Matrix) -> core::result::Result<(), Witness> {
    lhs.first_difference(rhs).map_or(Ok(()), |(r, c)| Err(Witness::at(&[r, c])))
}

/// `action: H ⊗ A → A` makes `A` an `H`-module algebra.
pub fn module_algebra_check(b: &Bialgebra, a: &Algebra, action: &Matrix) -> Report {
    let mut r = Report::new("module algebra");
    let f = b.field();
    let (n, m) = (b.dim(), a.dim());
    if action.shape() != (m, n * m) || a.field() != f {
        r.fail("shape", format!("action is {:?}, expected ({m}, {})", action.shape(), n * m), None);
        return r;
    }
    let module = Module { algebra: b.algebra.clone(), action: action.clone() };
    r.absorb("action", module.validate());
    let lhs = action.mul(&a.mul.pad(n, 1));
    let rhs = Matrix::chain(&[
        &a.mul,
        &action.kron(action),
        &tensor_permutation(f, &[n, n, m, m], &[0, 2, 1, 3]),
        &b.comul().kron(&Matrix::identity(f, m * m)),
    ]);
    r.record("multiplicative", witness(&lhs, &rhs));
    r.record("unital", witness(&action.mul(&a.unit.pad(n, 1)), &a.unit.mul(b.counit())));
    r
}

/// `A # H` on `A ⊗ H` with `(a#h)(a′#h′) = a(h₁·a′) # h₂h′`.
pub fn smash_product(b: &Bialgebra, a: &Algebra, action: &Matrix) -> Result<Algebra> {
    let check = module_algebra_check(b, a, action);
    if !check.passed() {
        let id = check.failures().next().map(|c| c.id.clone()).unwrap_or_default();
        return Err(Error::Invalid(format!("not a module algebra: {id}")));
    }
    let f = b.field();
    let (n, m) = (b.dim(), a.dim());
    let mul = Matrix::chain(&[
        &a.mul.kron(b.mul()),
        &action.pad(m, n * n),
        &tensor_permutation(f, &[m, n, n, m, n], &[0, 1, 3, 2, 4]),
        &b.comul().pad(m, m * n),
    ]);
    let unit = a.unit.kron(b.unit());
    let labels = a.labels.iter().flat_map(|x| b.algebra.labels.iter().map(move |y| format!("{x}#{y}"))).collect();
    let smash = Algebra::from_matrices(labels, mul, unit)?;
    if !smash.validate().passed() {
        return Err(Error::Invalid("smash product fails validation".into()));
    }
    Ok(smash)
}

/// `End(ℓ)` as an `H`-module algebra under `(h·φ)(v) = h₁·φ(S(h₂)·v)`.
#[derive(Clone, Debug)]
pub struct InternalEnd {
    pub algebra: Algebra,
    /// `H ⊗ End(ℓ) → End(ℓ)`; matrix unit `E_ij` sits at `i·d + j`.
    pub action: Matrix,
}

pub fn internal_end(h: &Hopf, l: &Module) -> Result<InternalEnd> {
    let b = &h.bialgebra;
    if l.algebra != b.algebra {
        return Err(Error::Invalid("module over a different algebra".into()));
    }
    let f = h.field();
    let (n, d) = (h.dim(), l.dim());
    let mut table: Vec<Entry> = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                table.push((i * d + j, j * d + k, i * d + k, f.one()));
            }
        }
    }
    let unit: Vec<_> = (0..d).map(|i| (i * d + i, f.one())).collect();
    let labels = (0..d * d).map(|t| format!("E{}{}", t / d, t % d)).collect();
    let algebra = Algebra::from_table(f, Some(labels), d * d, &table, &unit)?;
    let mut cols = Vec::with_capacity(n * d * d);
    for x in 0..n {
        let dx = b.comul().col(x);
        for e in 0..d * d {
            let unit_e = Matrix::unflatten(&Matrix::unit_vector(f, d * d, e), d, d);
            let mut acc = Matrix::zeros(f, d, d);
            for (pair, _, c) in dx.entries() {
                let (x1, x2) = (pair / n, pair % n);
                let term = Matrix::chain(&[&l.acting(&b.algebra.basis(x1)), &unit_e, &l.acting(&h.antipode.col(x2))]);
                acc = acc.axpy(c, &term);
            }
            cols.push(acc.flatten());
        }
    }
    let action = Matrix::hcat(f, d * d, &cols);
    let check = module_algebra_check(b, &algebra, &action);
    if !check.passed() {
        return Err(Error::Invalid("internal End is not a module algebra".into()));
    }
    Ok(InternalEnd { algebra, action })
}

/// An `H`-module `M` with an `H`-linear action `mu: A ⊗ M → M` of a module algebra `A`.
#[derive(Clone, Debug)]
pub struct ModuleObject {
    pub h_module: Module,
    pub mu: Matrix,
}

impl ModuleObject {
    pub fn a_module(&self, a: &Algebra) -> Module {
        Module { algebra: a.clone(), action: self.mu.clone() }
    }

    /// The same data as a module over `A # H`: `(a#h)·m = a·(h·m)`.
    pub fn smash_module(&self, smash: &Algebra, a: &Algebra) -> Result<Module> {
        let action = self.mu.mul(&self.h_module.action.pad(a.dim(), 1));
        let m = Module::new(smash, action)?;
        if !m.validate().passed() || !self.a_module(a).validate().passed() {
            return Err(Error::Invalid("not a module object".into()));
        }
        Ok(m)
    }
}

/// `ℓ` as a module object over its internal End, acting by evaluation.
pub fn evaluation_object(l: &Module) -> ModuleObject {
    let f = l.field();
    let d = l.dim();
    let entries: Vec<_> = (0..d).flat_map(|i| (0..d).map(move |j| (i, (i * d + j) * d + j))).collect();
    let mu =
        Matrix::from_entries(f, d, d * d * d, entries.into_iter().map(|(r, c)| (r, c, f.one())).collect::<Vec<_>>());
    ModuleObject { h_module: l.clone(), mu }
}

/// Maps that are both `H`-linear and `A`-linear, by intersecting the two hom spaces.
pub fn module_object_hom_dim(a: &Algebra, x: &ModuleObject, y: &ModuleObject) -> Result<usize> {
    let f = a.field();
    let n = x.h_module.dim() * y.h_module.dim();
    let flat = |ms: Vec<Matrix>| Subspace::from_columns(f, n, &ms.iter().map(Matrix::flatten).collect::<Vec<_>>());
    let hh = flat(hom_space(&x.h_module, &y.h_module)?);
    let aa = flat(hom_space(&x.a_module(a), &y.a_module(a))?);
    Ok(hh.intersect(&aa).dim())
}

/// Hom dimensions between module objects agree with those between the matching `A # H`-modules.
pub fn module_object_bookkeeping(h: &Hopf, ls: &[Module]) -> Result<Report> {
    let b = &h.bialgebra;
    let mut r = Report::new("module objects over internal End");
    for (i, l) in ls.iter().enumerate() {
        let end = internal_end(h, l)?;
        let smash = smash_product(b, &end.algebra, &end.action)?;
        let one = evaluation_object(l);
        let two = ModuleObject {
            h_module: l.direct_sum(l),
            mu: one.a_module(&end.algebra).direct_sum(&one.a_module(&end.algebra)).action,
        };
        let objs = [one, two];
        let mut ok = Ok(());
        for (p, x) in objs.iter().enumerate() {
            for (q, y) in objs.iter().enumerate() {
                let sx = x.smash_module(&smash, &end.algebra)?;
                let sy = y.smash_module(&smash, &end.algebra)?;
                if hom_space(&sx, &sy)?.len() != module_object_hom_dim(&end.algebra, x, y)? {
                    ok = ok.and(Err(Witness::at(&[i, p, q])));
                }
            }
        }
        r.record(format!("hom-dimensions-{i}"), ok);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_example, group_algebra, split_pair, ExampleName, GroupSpec};
    use crate::field::Field;

    fn kc2(f: Field) -> Hopf {
        Hopf::new(build_example(ExampleName::Cyclic(2), f).unwrap().bialgebra).unwrap()
    }

    fn sweedler() -> Hopf {
        Hopf::new(build_example(ExampleName::Sweedler, Field::Rationals).unwrap().bialgebra).unwrap()
    }

    fn trivial_action(b: &Bialgebra, a: &Algebra) -> Matrix {
        b.counit().kron(&Matrix::identity(b.field(), a.dim()))
    }

    #[test]
    fn ground_smash_is_h() {
        let h = kc2(Field::Rationals);
        let k = Algebra::ground(Field::Rationals);
        let s = smash_product(&h.bialgebra, &k, &trivial_action(&h.bialgebra, &k)).unwrap();
        assert_eq!(s.mul, h.bialgebra.algebra.mul);
        assert_eq!(s.unit, h.bialgebra.algebra.unit);
    }

    #[test]
    fn trivial_action_gives_klein_four() {
        let f = Field::Rationals;
        let h = kc2(f);
        let a = h.bialgebra.algebra.clone();
        let s = smash_product(&h.bialgebra, &a, &trivial_action(&h.bialgebra, &a)).unwrap();
        let c2 = GroupSpec::cyclic(2);
        let v4 = group_algebra(&GroupSpec::product(&c2, &c2), f);
        assert_eq!(s.mul, v4.mul);
    }

    #[test]
    fn sweedler_swapping_idempotents() {
        let f = Field::Rationals;
        let h = sweedler();
        let a = split_pair(f);
        // g swaps e1 and e2, x acts by zero
        let entries = alloc::vec![(0, 0, f.one()), (1, 1, f.one()), (1, 2, f.one()), (0, 3, f.one())];
        let action = Matrix::from_entries(f, 2, 8, entries);
        assert!(module_algebra_check(&h.bialgebra, &a, &action).passed());
        let s = smash_product(&h.bialgebra, &a, &action).unwrap();
        assert_eq!(s.dim(), 8);
        assert!(s.validate().passed());
        // x acting as a swap is not a module algebra
        let bad = Matrix::from_entries(
            f,
            2,
            8,
            alloc::vec![
                (0, 0, f.one()),
                (1, 1, f.one()),
                (1, 2, f.one()),
                (0, 3, f.one()),
                (1, 4, f.one()),
                (0, 5, f.one())
            ],
        );
        assert!(!module_algebra_check(&h.bialgebra, &a, &bad).passed());
    }

    #[test]
    fn internal_end_examples() {
        let f = Field::Rationals;
        let h = kc2(f);
        let triv = Module::trivial(&h.bialgebra);
        assert_eq!(internal_end(&h, &triv).unwrap().algebra.dim(), 1);
        let reg = Module::regular(&h.bialgebra.algebra);
        let end = internal_end(&h, &reg).unwrap();
        assert_eq!(end.algebra.dim(), 4);
        let s = smash_product(&h.bialgebra, &end.algebra, &end.action).unwrap();
        assert_eq!(s.dim(), 8);
        assert!(s.is_semisimple());
    }

    #[test]
    fn internal_end_of_sweedler_module() {
        let f = Field::Rationals;
        let h = sweedler();
        // g = diag(1, -1), x sends v0 to v1
        let table = [
            (0, 0, 0, f.one()),
            (0, 1, 1, f.one()),
            (1, 0, 0, f.one()),
            (1, 1, 1, f.from_i64(-1)),
            (2, 0, 1, f.one()),
            (3, 0, 1, f.from_i64(-1)),
        ];
        let l = Module::from_table(&h.bialgebra.algebra, 2, &table).unwrap();
        assert!(l.validate().passed());
        let end = internal_end(&h, &l).unwrap();
        assert_eq!(end.algebra.dim(), 4);
        assert!(module_object_bookkeeping(&h, &[l]).unwrap().passed());
    }

    #[test]
    fn bookkeeping_over_kc2() {
        for f in [Field::Rationals, Field::prime(2).unwrap()] {
            let h = kc2(f);
            let alg = &h.bialgebra.algebra;
            let triv = Module::trivial(&h.bialgebra);
            let sign = Module::from_character(alg, &Matrix::from_i64(f, &[&[1, -1]]));
            let ls = [triv.clone(), sign.clone(), Module::regular(alg), triv.direct_sum(&sign), triv.direct_sum(&triv)];
            let r = module_object_bookkeeping(&h, &ls).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}
