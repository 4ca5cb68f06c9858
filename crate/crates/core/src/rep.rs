//! Modules, comodules and bicomodules; morphism spaces, tensor and
//! cotensor products, duals, projectivity and injectivity tests.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Coalgebra, Entry};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::{Bialgebra, Hopf};
use crate::linsys::{LinearSystem, Term};
use crate::matrix::{identity_element, tensor_permutation, Matrix};
use crate::report::{Report, Witness};
use crate::subspace::{Quotient, Subspace};

/// Whether a structure map consumes (`Action`) or produces (`Coaction`) the extra legs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Law {
    Action,
    Coaction,
}

/// One structure map of a representation, with `p` legs before and `q` after the carrier.
#[derive(Clone, Copy, Debug)]
pub struct Structure<'a> {
    pub law: Law,
    pub p: usize,
    pub q: usize,
    pub map: &'a Matrix,
}

/// Anything whose morphisms are linear maps commuting with a list of structure maps.
pub trait Rep {
    fn field(&self) -> Field;
    fn dim(&self) -> usize;
    fn structures(&self) -> Vec<Structure<'_>>;
    /// Whether `other` lives over the same (co)algebra.
    fn same_base(&self, other: &Self) -> bool;
}

/// Basis of all morphisms `x → y`, each a `dim y × dim x` matrix.
pub fn hom_space<R: Rep>(x: &R, y: &R) -> Result<Vec<Matrix>> {
    if !x.same_base(y) {
        return Err(Error::Invalid("representations over different bases".into()));
    }
    let f = x.field();
    let (dx, dy) = (x.dim(), y.dim());
    let mut sys = LinearSystem::new(f, dy, dx);
    for (sx, sy) in x.structures().iter().zip(y.structures()) {
        let (p, q) = (sx.p, sx.q);
        match sx.law {
            Law::Action => {
                let lhs = Term::new(Matrix::identity(f, dy), 1, 1, sx.map.clone());
                let rhs = Term::new(sy.map.clone(), p, q, Matrix::identity(f, p * dx * q)).negated();
                sys.equation(&[lhs, rhs], None);
            }
            Law::Coaction => {
                let lhs = Term::new(sy.map.clone(), 1, 1, Matrix::identity(f, dx));
                let rhs = Term::new(Matrix::identity(f, p * dy * q), p, q, sx.map.clone()).negated();
                sys.equation(&[lhs, rhs], None);
            }
        }
    }
    if x.structures().is_empty() {
        return Ok(Matrix::identity(f, dy * dx).columns().iter().map(|c| Matrix::unflatten(c, dy, dx)).collect());
    }
    Ok(sys.kernel())
}

/// Whether `map: x → y` commutes with every structure map.
pub fn is_morphism<R: Rep>(x: &R, y: &R, map: &Matrix) -> bool {
    if map.shape() != (y.dim(), x.dim()) {
        return false;
    }
    x.structures().iter().zip(y.structures()).all(|(sx, sy)| match sx.law {
        Law::Action => map.mul(sx.map) == sy.map.mul(&map.pad(sx.p, sx.q)),
        Law::Coaction => sy.map.mul(map) == map.pad(sx.p, sx.q).mul(sx.map),
    })
}

/// An invertible morphism `x → y`, searched deterministically inside the hom space.
///
/// Coefficient vectors are drawn from a grid large enough that a nonvanishing
/// determinant is always hit when an isomorphism exists.
pub fn find_isomorphism<R: Rep>(x: &R, y: &R, budget: u128) -> Result<Option<Matrix>> {
    if x.dim() != y.dim() {
        return Ok(None);
    }
    let f = x.field();
    let basis = hom_space(x, y)?;
    if x.dim() == 0 {
        return Ok(Some(Matrix::zeros(f, 0, 0)));
    }
    for b in &basis {
        if b.is_invertible() {
            return Ok(Some(b.clone()));
        }
    }
    let side = match f.order() {
        Some(q) => (q as usize).min(x.dim() + 1),
        None => x.dim() + 1,
    };
    let r = basis.len();
    let needed = (side as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let values: Vec<_> = match f.elements() {
        Some(all) => all.into_iter().take(side).collect(),
        None => (0..side as i64).map(|v| f.from_i64(v)).collect(),
    };
    for idx in 0..needed {
        let mut rest = idx;
        let mut acc = Matrix::zeros(f, y.dim(), x.dim());
        for b in &basis {
            acc = acc.axpy(&values[(rest % side as u128) as usize], b);
            rest /= side as u128;
        }
        if acc.is_invertible() {
            return Ok(Some(acc));
        }
    }
    Ok(None)
}

/// A left module; `action` is `d × (n·d)` with `e_i ⊗ m_j` at column `i·d + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    pub algebra: Algebra,
    pub action: Matrix,
}

impl Module {
    pub fn new(algebra: &Algebra, action: Matrix) -> Result<Self> {
        let d = action.rows();
        if action.cols() != algebra.dim() * d {
            return Err(Error::Shape { op: "module action", left: action.shape(), right: (d, algebra.dim() * d) });
        }
        Ok(Module { algebra: algebra.clone(), action })
    }

    /// `(i, j, k, c)` means `e_i · m_j ∋ c m_k`.
    pub fn from_table(algebra: &Algebra, dim: usize, table: &[Entry]) -> Result<Self> {
        let n = algebra.dim();
        let mut entries = Vec::with_capacity(table.len());
        for (i, j, k, c) in table {
            if *i >= n {
                return Err(Error::IndexOutOfRange { what: "act", index: *i, bound: n });
            }
            for x in [j, k] {
                if *x >= dim {
                    return Err(Error::IndexOutOfRange { what: "act", index: *x, bound: dim });
                }
            }
            entries.push((*k, i * dim + j, c.clone()));
        }
        Module::new(algebra, Matrix::from_entries(algebra.field(), dim, n * dim, entries))
    }

    pub fn table(&self) -> Vec<Entry> {
        let d = self.dim();
        let mut t: Vec<Entry> = self.action.entries().map(|(k, ij, c)| (ij / d, ij % d, k, c.clone())).collect();
        t.sort_by_key(|a| (a.0, a.1, a.2));
        t
    }

    pub fn regular(algebra: &Algebra) -> Self {
        Module { algebra: algebra.clone(), action: algebra.mul.clone() }
    }

    /// The one-dimensional module on which `a` acts by `chi(a)`.
    pub fn from_character(algebra: &Algebra, chi: &Matrix) -> Self {
        Module { algebra: algebra.clone(), action: chi.clone() }
    }

    /// Module through a bialgebra's counit.
    pub fn trivial(b: &Bialgebra) -> Self {
        Module::from_character(&b.algebra, b.counit())
    }

    pub fn zero(algebra: &Algebra) -> Self {
        Module { algebra: algebra.clone(), action: Matrix::zeros(algebra.field(), 0, 0) }
    }

    /// Matrix by which `a` acts.
    pub fn acting(&self, a: &Matrix) -> Matrix {
        self.action.mul(&a.kron(&Matrix::identity(self.field(), self.dim())))
    }

    pub fn direct_sum(&self, other: &Module) -> Module {
        let f = self.field();
        let (d, e) = (self.dim(), other.dim());
        let n = self.algebra.dim();
        let mut entries = Vec::new();
        for (k, c, x) in self.action.entries() {
            entries.push((k, (c / d) * (d + e) + c % d, x.clone()));
        }
        for (k, c, x) in other.action.entries() {
            entries.push((d + k, (c / e) * (d + e) + d + c % e, x.clone()));
        }
        Module { algebra: self.algebra.clone(), action: Matrix::from_entries(f, d + e, n * (d + e), entries) }
    }

    pub fn direct_sum_all(algebra: &Algebra, parts: &[&Module]) -> Module {
        parts.iter().fold(Module::zero(algebra), |acc, m| acc.direct_sum(m))
    }

    /// Restriction to an invariant subspace, if it is one.
    pub fn restrict(&self, sub: &Subspace) -> Option<Module> {
        let n = self.algebra.dim();
        let image = self.action.mul(&sub.basis().pad(n, 1));
        let action = sub.corestrict(&image)?;
        Some(Module { algebra: self.algebra.clone(), action })
    }

    /// Quotient by an invariant subspace, with the projection.
    pub fn quotient(&self, sub: &Subspace) -> Option<(Module, Matrix)> {
        let n = self.algebra.dim();
        self.restrict(sub)?;
        let q = Quotient::new(sub);
        let action = Matrix::chain(&[&q.proj, &self.action, &q.section.pad(n, 1)]);
        Some((Module { algebra: self.algebra.clone(), action }, q.proj))
    }

    /// Linear dual as a module over the opposite algebra: `(a·f)(v) = f(a v)`.
    pub fn transpose_dual(&self) -> Module {
        let d = self.dim();
        let n = self.algebra.dim();
        let entries = self.action.entries().map(|(j, c, x)| {
            let (a, k) = (c / d, c % d);
            (k, a * d + j, x.clone())
        });
        let action = Matrix::from_entries(self.field(), d, n * d, entries.collect::<Vec<_>>());
        Module { algebra: self.algebra.opposite(), action }
    }

    pub fn validate(&self) -> Report {
        let mut r = Report::new("module");
        let f = self.field();
        let (n, d) = (self.algebra.dim(), self.dim());
        let id = Matrix::identity(f, d);
        let lhs = self.action.mul(&self.action.pad(n, 1));
        let rhs = self.action.mul(&self.algebra.mul.kron(&id));
        r.record(
            "associativity",
            lhs.first_difference(&rhs).map_or(Ok(()), |(_, c)| Err(Witness::at(&[c / (n * d), (c / d) % n, c % d]))),
        );
        let unit = self.action.mul(&self.algebra.unit.kron(&id));
        r.record("unit", unit.first_difference(&id).map_or(Ok(()), |(_, c)| Err(Witness::at(&[c]))));
        r
    }

    /// Diagonal tensor product over a bialgebra.
    pub fn tensor(&self, other: &Module, b: &Bialgebra) -> Result<Module> {
        if self.algebra != b.algebra || other.algebra != b.algebra {
            return Err(Error::Invalid("modules over a different algebra".into()));
        }
        let f = self.field();
        let (n, d, e) = (b.dim(), self.dim(), other.dim());
        let shuffle = tensor_permutation(f, &[n, n, d, e], &[0, 2, 1, 3]);
        let action =
            Matrix::chain(&[&self.action.kron(&other.action), &shuffle, &b.comul().kron(&Matrix::identity(f, d * e))]);
        Ok(Module { algebra: b.algebra.clone(), action })
    }

    /// Socle: vectors killed by the Jacobson radical.
    pub fn socle(&self) -> Subspace {
        let f = self.field();
        let d = self.dim();
        let rad = self.algebra.jacobson_radical();
        if rad.dim() == 0 {
            return Subspace::whole(f, d);
        }
        let stacked = Matrix::vcat(f, d, &rad.basis().columns().iter().map(|r| self.acting(r)).collect::<Vec<_>>());
        Subspace::span(&stacked.kernel())
    }

    /// Dual-basis criterion: `id` is a sum of maps `v ↦ f(v)·x` with `f ∈ Hom(M, A)`.
    pub fn is_projective(&self) -> Result<bool> {
        let f = self.field();
        let d = self.dim();
        if d == 0 {
            return Ok(true);
        }
        let reg = Module::regular(&self.algebra);
        let homs = hom_space(self, &reg)?;
        let mut cols = Vec::new();
        for h in &homs {
            for x in 0..d {
                let xv = Matrix::unit_vector(f, d, x);
                cols.push(self.action.mul(&h.kron(&xv)).flatten());
            }
        }
        let span = Subspace::from_columns(f, d * d, &cols);
        Ok(span.contains(&Matrix::identity(f, d).flatten()))
    }

    /// Injective iff the linear dual is projective over the opposite algebra.
    pub fn is_injective(&self) -> Result<bool> {
        self.transpose_dual().is_projective()
    }

    /// Socle basis and injectivity verdict.
    pub fn socle_injectivity(&self) -> Result<(Subspace, bool)> {
        Ok((self.socle(), self.is_injective()?))
    }
}

impl Rep for Module {
    fn field(&self) -> Field {
        self.action.field()
    }

    fn dim(&self) -> usize {
        self.action.rows()
    }

    fn structures(&self) -> Vec<Structure<'_>> {
        vec![Structure { law: Law::Action, p: self.algebra.dim(), q: 1, map: &self.action }]
    }

    fn same_base(&self, other: &Self) -> bool {
        self.algebra == other.algebra
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A comodule; a left coaction is `(n·d) × d`, a right one `(d·n) × d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    pub coalgebra: Coalgebra,
    pub side: Side,
    pub coaction: Matrix,
}

impl Comodule {
    pub fn new(coalgebra: &Coalgebra, side: Side, coaction: Matrix) -> Result<Self> {
        let d = coaction.cols();
        if coaction.rows() != coalgebra.dim() * d {
            return Err(Error::Shape { op: "coaction", left: coaction.shape(), right: (coalgebra.dim() * d, d) });
        }
        Ok(Comodule { coalgebra: coalgebra.clone(), side, coaction })
    }

    /// Left: `(i, j, k, c)` means `m_i ↦ c e_j ⊗ m_k`; right: `m_i ↦ c m_j ⊗ e_k`.
    pub fn from_table(coalgebra: &Coalgebra, side: Side, dim: usize, table: &[Entry]) -> Result<Self> {
        let n = coalgebra.dim();
        let mut entries = Vec::with_capacity(table.len());
        for (i, j, k, c) in table {
            let (mj, ck) = match side {
                Side::Left => (*k, *j),
                Side::Right => (*j, *k),
            };
            for (x, bound) in [(*i, dim), (mj, dim), (ck, n)] {
                if x >= bound {
                    return Err(Error::IndexOutOfRange { what: "coact", index: x, bound });
                }
            }
            let row = match side {
                Side::Left => ck * dim + mj,
                Side::Right => mj * n + ck,
            };
            entries.push((row, *i, c.clone()));
        }
        Comodule::new(coalgebra, side, Matrix::from_entries(coalgebra.field(), n * dim, dim, entries))
    }

    pub fn table(&self) -> Vec<Entry> {
        let (n, d) = (self.coalgebra.dim(), self.dim());
        let mut t: Vec<Entry> = self
            .coaction
            .entries()
            .map(|(row, i, c)| match self.side {
                Side::Left => (i, row / d, row % d, c.clone()),
                Side::Right => (i, row / n, row % n, c.clone()),
            })
            .collect();
        t.sort_by_key(|a| (a.0, a.1, a.2));
        t
    }

    pub fn regular(c: &Coalgebra, side: Side) -> Self {
        Comodule { coalgebra: c.clone(), side, coaction: c.comul.clone() }
    }

    /// One-dimensional comodule `m ↦ g ⊗ m` (or `m ⊗ g`) for a group-like `g`.
    pub fn grouplike(c: &Coalgebra, side: Side, g: &Matrix) -> Self {
        Comodule { coalgebra: c.clone(), side, coaction: g.clone() }
    }

    /// `m ↦ 1 ⊗ m` through a bialgebra's unit.
    pub fn trivial(b: &Bialgebra, side: Side) -> Self {
        Comodule::grouplike(&b.coalgebra, side, b.unit())
    }

    pub fn zero(c: &Coalgebra, side: Side) -> Self {
        Comodule { coalgebra: c.clone(), side, coaction: Matrix::zeros(c.field(), 0, 0) }
    }

    pub fn direct_sum(&self, other: &Comodule) -> Comodule {
        assert_eq!(self.side, other.side, "comodules on different sides");
        let f = self.field();
        let n = self.coalgebra.dim();
        let (d, e) = (self.dim(), other.dim());
        let place = |row: usize, dim: usize, offset: usize| match self.side {
            Side::Left => (row / dim) * (d + e) + offset + row % dim,
            Side::Right => (offset + row / n) * n + row % n,
        };
        let mut entries = Vec::new();
        for (row, c, x) in self.coaction.entries() {
            entries.push((place(row, d, 0), c, x.clone()));
        }
        for (row, c, x) in other.coaction.entries() {
            entries.push((place(row, e, d), d + c, x.clone()));
        }
        Comodule {
            coalgebra: self.coalgebra.clone(),
            side: self.side,
            coaction: Matrix::from_entries(f, n * (d + e), d + e, entries),
        }
    }

    pub fn validate(&self) -> Report {
        let mut r = Report::new(match self.side {
            Side::Left => "left comodule",
            Side::Right => "right comodule",
        });
        let f = self.field();
        let (n, d) = (self.coalgebra.dim(), self.dim());
        let id = Matrix::identity(f, d);
        let idn = Matrix::identity(f, n);
        let c = &self.coalgebra;
        let (lhs, rhs, counit) = match self.side {
            Side::Left => (
                c.comul.kron(&id).mul(&self.coaction),
                idn.kron(&self.coaction).mul(&self.coaction),
                c.counit.kron(&id).mul(&self.coaction),
            ),
            Side::Right => (
                self.coaction.kron(&idn).mul(&self.coaction),
                id.kron(&c.comul).mul(&self.coaction),
                id.kron(&c.counit).mul(&self.coaction),
            ),
        };
        r.record("coassociativity", lhs.first_difference(&rhs).map_or(Ok(()), |(_, col)| Err(Witness::at(&[col]))));
        r.record("counit", counit.first_difference(&id).map_or(Ok(()), |(_, col)| Err(Witness::at(&[col]))));
        r
    }

    /// Codiagonal tensor product over a bialgebra: `m ⊗ m′ ↦ m₋₁m′₋₁ ⊗ m₀ ⊗ m′₀`.
    pub fn tensor(&self, other: &Comodule, b: &Bialgebra) -> Result<Comodule> {
        if self.coalgebra != b.coalgebra || other.coalgebra != b.coalgebra || self.side != other.side {
            return Err(Error::Invalid("comodules over a different coalgebra or side".into()));
        }
        let f = self.field();
        let (n, d, e) = (b.dim(), self.dim(), other.dim());
        let both = self.coaction.kron(&other.coaction);
        let coaction = match self.side {
            Side::Left => {
                let shuffle = tensor_permutation(f, &[n, d, n, e], &[0, 2, 1, 3]);
                Matrix::chain(&[&b.mul().kron(&Matrix::identity(f, d * e)), &shuffle, &both])
            }
            Side::Right => {
                let shuffle = tensor_permutation(f, &[d, n, e, n], &[0, 2, 1, 3]);
                Matrix::chain(&[&Matrix::identity(f, d * e).kron(b.mul()), &shuffle, &both])
            }
        };
        Ok(Comodule { coalgebra: b.coalgebra.clone(), side: self.side, coaction })
    }
}

impl Rep for Comodule {
    fn field(&self) -> Field {
        self.coaction.field()
    }

    fn dim(&self) -> usize {
        self.coaction.cols()
    }

    fn structures(&self) -> Vec<Structure<'_>> {
        let n = self.coalgebra.dim();
        let (p, q) = match self.side {
            Side::Left => (n, 1),
            Side::Right => (1, n),
        };
        vec![Structure { law: Law::Coaction, p, q, map: &self.coaction }]
    }

    fn same_base(&self, other: &Self) -> bool {
        self.coalgebra == other.coalgebra && self.side == other.side
    }
}

/// Left and right coactions on one carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicomodule {
    pub left: Comodule,
    pub right: Comodule,
}

impl Bicomodule {
    pub fn new(left: Comodule, right: Comodule) -> Result<Self> {
        if left.side != Side::Left || right.side != Side::Right || left.dim() != right.dim() {
            return Err(Error::Invalid("bicomodule needs a left and a right coaction on one carrier".into()));
        }
        Ok(Bicomodule { left, right })
    }

    pub fn regular(c: &Coalgebra) -> Self {
        Bicomodule { left: Comodule::regular(c, Side::Left), right: Comodule::regular(c, Side::Right) }
    }

    pub fn validate(&self) -> Report {
        let mut r = Report::new("bicomodule");
        r.absorb("left", self.left.validate());
        r.absorb("right", self.right.validate());
        let f = self.field();
        let n = self.left.coalgebra.dim();
        let idn = Matrix::identity(f, n);
        let lhs = idn.kron(&self.right.coaction).mul(&self.left.coaction);
        let rhs = self.left.coaction.kron(&idn).mul(&self.right.coaction);
        r.record("compatibility", lhs.first_difference(&rhs).map_or(Ok(()), |(_, c)| Err(Witness::at(&[c]))));
        r
    }
}

impl Rep for Bicomodule {
    fn field(&self) -> Field {
        self.left.field()
    }

    fn dim(&self) -> usize {
        self.left.dim()
    }

    fn structures(&self) -> Vec<Structure<'_>> {
        let mut s = self.left.structures();
        s.extend(self.right.structures());
        s
    }

    fn same_base(&self, other: &Self) -> bool {
        self.left.same_base(&other.left) && self.right.same_base(&other.right)
    }
}

/// Cotensor carrier inside `X ⊗ Y`, with outer coactions when they exist.
#[derive(Clone, Debug)]
pub struct Cotensor {
    pub space: Subspace,
    /// Rank of `ρ⊗id − id⊗λ`.
    pub rank: usize,
    pub left: Option<Matrix>,
    pub right: Option<Matrix>,
}

impl Cotensor {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn inclusion(&self) -> &Matrix {
        self.space.basis()
    }
}

/// Equaliser of `ρ ⊗ id` and `id ⊗ λ` on `X ⊗ Y`.
pub fn cotensor(x: &Comodule, y: &Comodule) -> Result<Cotensor> {
    if x.side != Side::Right || y.side != Side::Left || x.coalgebra != y.coalgebra {
        return Err(Error::Invalid("cotensor needs a right and a left comodule over one coalgebra".into()));
    }
    let f = x.field();
    let (dx, dy) = (x.dim(), y.dim());
    let diff = x.coaction.kron(&Matrix::identity(f, dy)).sub(&Matrix::identity(f, dx).kron(&y.coaction));
    let kernel = diff.kernel();
    let space = Subspace::span(&kernel);
    Ok(Cotensor { rank: diff.rank(), space, left: None, right: None })
}

/// Cotensor of bicomodules with the outer coactions restricted to the kernel.
pub fn cotensor_bicomodules(x: &Bicomodule, y: &Bicomodule) -> Result<(Bicomodule, Cotensor)> {
    let mut ct = cotensor(&x.right, &y.left)?;
    let f = x.field();
    let (dx, dy) = (x.dim(), y.dim());
    let n = x.left.coalgebra.dim();
    let m = y.right.coalgebra.dim();
    let inc = ct.space.basis().clone();
    let ret = ct.space.retraction();
    let outer_left = x.left.coaction.kron(&Matrix::identity(f, dy)).mul(&inc);
    let left = Matrix::identity(f, n).kron(&ret).mul(&outer_left);
    if Matrix::identity(f, n).kron(&inc).mul(&left) != outer_left {
        return Err(Error::Invalid("left coaction leaves the cotensor".into()));
    }
    let outer_right = Matrix::identity(f, dx).kron(&y.right.coaction).mul(&inc);
    let right = ret.kron(&Matrix::identity(f, m)).mul(&outer_right);
    if inc.kron(&Matrix::identity(f, m)).mul(&right) != outer_right {
        return Err(Error::Invalid("right coaction leaves the cotensor".into()));
    }
    ct.left = Some(left.clone());
    ct.right = Some(right.clone());
    let bi = Bicomodule {
        left: Comodule { coalgebra: x.left.coalgebra.clone(), side: Side::Left, coaction: left },
        right: Comodule { coalgebra: y.right.coalgebra.clone(), side: Side::Right, coaction: right },
    };
    Ok((bi, ct))
}

/// Left dual of a module over a Hopf algebra with its evaluation, coevaluation and snake checks.
#[derive(Clone, Debug)]
pub struct DualPair {
    pub dual: Module,
    /// `M* ⊗ M → k`.
    pub ev: Matrix,
    /// `k → M ⊗ M*`.
    pub coev: Matrix,
    pub report: Report,
}

pub fn dual_module_snakes(h: &Hopf, m: &Module) -> Result<DualPair> {
    let b = &h.bialgebra;
    if m.algebra != b.algebra {
        return Err(Error::Invalid("module over a different algebra".into()));
    }
    let f = h.field();
    let (n, d) = (h.dim(), m.dim());
    // (h·f)(v) = f(S(h) v)
    let mut entries = Vec::new();
    for (j, c, x) in m.action.entries() {
        let (hp, k) = (c / d, c % d);
        for (hh, s) in h.antipode.row_entries(hp) {
            entries.push((k, hh * d + j, x * s));
        }
    }
    let dual = Module { algebra: b.algebra.clone(), action: Matrix::from_entries(f, d, n * d, entries) };
    let ev = identity_element(f, d).transpose();
    let coev = identity_element(f, d);
    let id = Matrix::identity(f, d);
    let mut report = Report::new("dual");
    report.absorb("dual", dual.validate());
    let snake_m = id.kron(&ev).mul(&coev.kron(&id));
    report.expect("snake-left", snake_m.is_identity(), "(id⊗ev)(coev⊗id) = id");
    let snake_d = ev.kron(&id).mul(&id.kron(&coev));
    report.expect("snake-right", snake_d.is_identity(), "(ev⊗id)(id⊗coev) = id");
    let dm = dual.tensor(m, b)?;
    report.expect("ev-linear", ev.mul(&dm.action) == b.counit().kron(&ev), "ev is a module map");
    let md = m.tensor(&dual, b)?;
    report.expect("coev-linear", md.action.mul(&coev.pad(n, 1)) == coev.mul(b.counit()), "coev is a module map");
    Ok(DualPair { dual, ev, coev, report })
}

/// `Hom_A(M, A)` as a module over a commutative `A`, with the basis maps it is built from.
pub(crate) fn hom_to_regular(m: &Module) -> Result<(Module, Vec<Matrix>, Subspace)> {
    let a = &m.algebra;
    let f = m.field();
    let (n, d) = (a.dim(), m.dim());
    let basis = hom_space(m, &Module::regular(a))?;
    let flat = Subspace::from_columns(f, n * d, &basis.iter().map(Matrix::flatten).collect::<Vec<_>>());
    let echelon: Vec<Matrix> = flat.basis().columns().iter().map(|c| Matrix::unflatten(c, n, d)).collect();
    let r = echelon.len();
    let mut entries = Vec::new();
    for i in 0..n {
        let li = a.left_mult(&a.basis(i));
        for (s, g) in echelon.iter().enumerate() {
            let coords = flat.coordinates(&li.mul(g).flatten());
            for (k, _, c) in coords.entries() {
                entries.push((k, i * r + s, c.clone()));
            }
        }
    }
    let module = Module { algebra: a.clone(), action: Matrix::from_entries(f, r, n * r, entries) };
    Ok((module, echelon, flat))
}

/// The map `Hom_A(M, A) ⊗_A N → Hom_A(M, N)`, `f ⊗ x ↦ (v ↦ f(v)·x)`, and whether it is invertible.
#[derive(Clone, Debug)]
pub struct PhiMap {
    pub phi: Matrix,
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub invertible: bool,
}

pub fn phi_projectivity(m: &Module, n: &Module) -> Result<PhiMap> {
    let a = &m.algebra;
    if !a.is_commutative() {
        return Err(Error::NotCommutative);
    }
    if n.algebra != *a {
        return Err(Error::Invalid("modules over different algebras".into()));
    }
    let f = m.field();
    let (na, dm, dn) = (a.dim(), m.dim(), n.dim());
    let (hom_ma, fs, _) = hom_to_regular(m)?;
    let r = fs.len();
    // relations (b·f)⊗x − f⊗(b·x) in the r·dn tensor carrier
    let rel = hom_ma
        .action
        .kron(&Matrix::identity(f, dn))
        .sub(&Matrix::identity(f, r).kron(&n.action).mul(&tensor_permutation(f, &[na, r, dn], &[1, 0, 2])));
    let q = Quotient::cokernel(&rel);
    let target = Subspace::from_columns(f, dn * dm, &hom_space(m, n)?.iter().map(Matrix::flatten).collect::<Vec<_>>());
    let mut cols = Vec::with_capacity(r * dn);
    for g in &fs {
        for t in 0..dn {
            let x = Matrix::unit_vector(f, dn, t);
            cols.push(n.action.mul(&g.kron(&x)).flatten());
        }
    }
    let raw = Matrix::hcat(f, dn * dm, &cols);
    if !raw.mul(&rel).is_zero() {
        return Err(Error::Invalid("φ does not descend to the balanced tensor".into()));
    }
    let phi = target.corestrict(&raw.mul(&q.section)).ok_or(Error::Invalid("φ leaves Hom_A(M, N)".into()))?;
    let invertible = phi.rows() == phi.cols() && phi.is_invertible();
    Ok(PhiMap { domain_dim: q.dim(), codomain_dim: target.dim(), phi, invertible })
}

/// Whether `M → Hom_A(Hom_A(M, A), A)`, `v ↦ (f ↦ f(v))`, is bijective.
pub fn is_reflexive(m: &Module) -> Result<bool> {
    let a = &m.algebra;
    if !a.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let f = m.field();
    let (na, dm) = (a.dim(), m.dim());
    let (dual, fs, _) = hom_to_regular(m)?;
    let r = fs.len();
    let (_, _, double_flat) = hom_to_regular(&dual)?;
    if double_flat.dim() != dm {
        return Ok(false);
    }
    let mut cols = Vec::with_capacity(dm);
    for v in 0..dm {
        let e = Matrix::unit_vector(f, dm, v);
        let evals: Vec<Matrix> = fs.iter().map(|g| g.mul(&e)).collect();
        cols.push(Matrix::hcat(f, na, &evals).flatten());
    }
    let can = Matrix::hcat(f, na * r, &cols);
    Ok(double_flat.corestrict(&can).is_some_and(|c| c.is_invertible()))
}

/// Projective-cover oracle for a split basic algebra: `M` is projective iff
/// `dim M = Σ dim Hom(M, S_i) · dim(A e_i)` over the paired simples and idempotents.
pub fn projective_by_cover(m: &Module, simples: &[(Matrix, Matrix)]) -> Result<bool> {
    let a = &m.algebra;
    let mut cover = 0;
    for (chi, e) in simples {
        let s = Module::from_character(a, chi);
        cover += hom_space(m, &s)?.len() * a.right_mult(e).rank();
    }
    Ok(cover == m.dim())
}

/// An algebra with a right coaction of a bialgebra that is an algebra map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebra {
    pub algebra: Algebra,
    pub bialgebra: Bialgebra,
    pub coaction: Matrix,
}

impl ComoduleAlgebra {
    pub fn new(algebra: Algebra, bialgebra: Bialgebra, coaction: Matrix) -> Result<Self> {
        let d = algebra.dim();
        if coaction.shape() != (d * bialgebra.dim(), d) {
            return Err(Error::Shape {
                op: "comodule algebra",
                left: coaction.shape(),
                right: (d * bialgebra.dim(), d),
            });
        }
        Ok(ComoduleAlgebra { algebra, bialgebra, coaction })
    }

    pub fn comodule(&self) -> Comodule {
        Comodule { coalgebra: self.bialgebra.coalgebra.clone(), side: Side::Right, coaction: self.coaction.clone() }
    }

    pub fn validate(&self) -> Report {
        let mut r = Report::new("comodule algebra");
        r.absorb("algebra", self.algebra.validate());
        r.absorb("comodule", self.comodule().validate());
        let ab = self.algebra.tensor(&self.bialgebra.algebra);
        let lhs = self.coaction.mul(&self.algebra.mul);
        let rhs = ab.mul.mul(&self.coaction.kron(&self.coaction));
        let d = self.algebra.dim();
        r.record(
            "multiplicative",
            lhs.first_difference(&rhs).map_or(Ok(()), |(_, c)| Err(Witness::at(&[c / d, c % d]))),
        );
        r.expect("unital", self.coaction.mul(&self.algebra.unit) == ab.unit, "ρ(1) = 1⊗1");
        r
    }

    /// `{a : ρ(a) = a ⊗ 1}`, checked to be a subalgebra.
    pub fn coinvariants(&self) -> Result<Subspace> {
        let f = self.algebra.field();
        let d = self.algebra.dim();
        let insert = Matrix::identity(f, d).kron(self.bialgebra.unit());
        let sub = Subspace::span(&self.coaction.sub(&insert).kernel());
        if !sub.contains(&self.algebra.unit)
            || !self.algebra.product_space(&sub, &sub).basis().columns().iter().all(|c| sub.contains(c))
        {
            return Err(Error::Invalid(format!("coinvariants of dimension {} are not a subalgebra", sub.dim())));
        }
        Ok(sub)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, ExampleName};
    use crate::hopf::Hopf;

    fn q() -> Field {
        Field::Rationals
    }

    fn kc2(f: Field) -> Bialgebra {
        catalog::build_example(ExampleName::Cyclic(2), f).unwrap().bialgebra
    }

    fn ks() -> Bialgebra {
        catalog::monoid_s(q()).unwrap().bialgebra
    }

    #[test]
    fn regular_module_validates() {
        let b = catalog::build_example(ExampleName::Sweedler, q()).unwrap().bialgebra;
        assert!(Module::regular(&b.algebra).validate().passed());
    }

    #[test]
    fn non_unital_action_fails() {
        let a = catalog::dual_numbers(q());
        let m = Module::from_table(&a, 1, &[(0, 0, 0, q().from_i64(2))]).unwrap();
        let r = m.validate();
        assert!(!r.passed());
        assert!(r.failures().any(|c| c.id == "unit"));
    }

    #[test]
    fn hom_spaces() {
        let f = q();
        let k = Algebra::ground(f);
        assert_eq!(hom_space(&Module::regular(&k), &Module::regular(&k)).unwrap().len(), 1);
        let b = kc2(f);
        assert_eq!(hom_space(&Module::regular(&b.algebra), &Module::regular(&b.algebra)).unwrap().len(), 2);
        let s = ks();
        let de = Comodule::grouplike(&s.coalgebra, Side::Left, &s.algebra.basis(0));
        let ds = Comodule::grouplike(&s.coalgebra, Side::Left, &s.algebra.basis(1));
        assert!(de.validate().passed() && ds.validate().passed());
        assert!(hom_space(&de, &ds).unwrap().is_empty());
    }

    #[test]
    fn tensor_of_signs_is_trivial() {
        let f = q();
        let b = kc2(f);
        let sign = Module::from_character(&b.algebra, &Matrix::from_i64(f, &[&[1, -1]]));
        let ss = sign.tensor(&sign, &b).unwrap();
        assert_eq!(ss, Module::trivial(&b));
        let reg = Module::regular(&b.algebra);
        let three = reg.direct_sum(&sign);
        assert_eq!(reg.tensor(&three, &b).unwrap().dim(), 6);
        assert!(reg.tensor(&three, &b).unwrap().validate().passed());
    }

    #[test]
    fn cotensor_examples() {
        let s = ks();
        let de = Comodule::grouplike(&s.coalgebra, Side::Left, &s.algebra.basis(0));
        let ds = Comodule::grouplike(&s.coalgebra, Side::Left, &s.algebra.basis(1));
        let ds_r = Comodule::grouplike(&s.coalgebra, Side::Right, &s.algebra.basis(1));
        let de_r = Comodule::grouplike(&s.coalgebra, Side::Right, &s.algebra.basis(0));
        assert_eq!(cotensor(&de_r, &ds).unwrap().dim(), 0);
        assert_eq!(cotensor(&ds_r, &ds).unwrap().dim(), 1);
        let reg = Comodule::regular(&s.coalgebra, Side::Right);
        for m in [&de, &ds, &de.direct_sum(&ds)] {
            let ct = cotensor(&reg, m).unwrap();
            assert_eq!(ct.dim() + ct.rank, s.dim() * m.dim());
            let collapse = s.counit().kron(&Matrix::identity(q(), m.dim())).mul(ct.inclusion());
            assert!(collapse.is_invertible());
        }
    }

    #[test]
    fn snakes() {
        let f = q();
        let h = Hopf::new(kc2(f)).unwrap();
        for m in [Module::trivial(&h.bialgebra), Module::regular(h.algebra())] {
            let d = dual_module_snakes(&h, &m).unwrap();
            assert!(d.report.passed(), "{:?}", d.report);
        }
        let sw = Hopf::new(catalog::build_example(ExampleName::Sweedler, f).unwrap().bialgebra).unwrap();
        let d = dual_module_snakes(&sw, &Module::regular(sw.algebra())).unwrap();
        assert!(d.report.passed(), "{:?}", d.report.failures().collect::<Vec<_>>());
        assert_eq!(Hopf::new(ks()).unwrap_err(), Error::NoAntipode);
    }

    #[test]
    fn phi_examples() {
        let f = q();
        let a = catalog::dual_numbers(f);
        let k = Module::from_character(&a, &Matrix::from_i64(f, &[&[1, 0]]));
        let reg = Module::regular(&a);
        assert!(phi_projectivity(&reg, &k).unwrap().invertible);
        let p = phi_projectivity(&k, &k).unwrap();
        assert!(p.phi.is_zero());
        assert_eq!(p.codomain_dim, 1);
        assert!(!p.invertible);
        let kk = catalog::split_pair(f);
        let first = Module::from_character(&kk, &Matrix::from_i64(f, &[&[1, 0]]));
        assert!(phi_projectivity(&first, &first).unwrap().invertible);
        assert!(is_reflexive(&k).unwrap() && is_reflexive(&reg).unwrap());
    }

    #[test]
    fn projectivity_and_injectivity() {
        let f = q();
        let a = catalog::dual_numbers(f);
        let k = Module::from_character(&a, &Matrix::from_i64(f, &[&[1, 0]]));
        let reg = Module::regular(&a);
        assert!(reg.is_projective().unwrap() && reg.is_injective().unwrap());
        assert!(!k.is_projective().unwrap() && !k.is_injective().unwrap());
        let (soc, _) = reg.socle_injectivity().unwrap();
        assert_eq!(soc.dim(), 1);
        assert!(soc.contains(&a.basis(1)));
        let pairs = [(Matrix::from_i64(f, &[&[1, 0]]), a.unit.clone())];
        assert!(projective_by_cover(&reg, &pairs).unwrap());
        assert!(!projective_by_cover(&k, &pairs).unwrap());
    }

    #[test]
    fn coinvariants_examples() {
        let f = q();
        for b in [kc2(f), ks()] {
            let ca = ComoduleAlgebra::new(b.algebra.clone(), b.clone(), b.comul().clone()).unwrap();
            assert!(ca.validate().passed());
            let co = ca.coinvariants().unwrap();
            assert_eq!(co.dim(), 1);
            assert!(co.contains(b.unit()));
            let triv = Matrix::identity(f, b.dim()).kron(b.unit());
            let ca = ComoduleAlgebra::new(b.algebra.clone(), b.clone(), triv).unwrap();
            assert_eq!(ca.coinvariants().unwrap().dim(), b.dim());
        }
    }

    #[test]
    fn isomorphism_search() {
        let f = Field::Prime(3);
        let b = kc2(f);
        let reg = Module::regular(&b.algebra);
        let sum =
            Module::trivial(&b).direct_sum(&Module::from_character(&b.algebra, &Matrix::from_i64(f, &[&[1, -1]])));
        assert!(find_isomorphism(&reg, &sum, 1 << 16).unwrap().is_some());
        let two = Module::trivial(&b).direct_sum(&Module::trivial(&b));
        assert!(find_isomorphism(&reg, &two, 1 << 16).unwrap().is_none());
    }
}
