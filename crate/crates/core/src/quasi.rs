//! R-matrices and their braidings, the cocommutativity criterion for
//! `B ⊗ −` to be double opmonoidal, and the duoidal category of bimodules
//! over a commutative algebra.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::Bialgebra;
use crate::matrix::{swap, tensor_permutation, Matrix};
use crate::rep::{hom_space, Module, Rep};
use crate::report::{Report, Witness};
use crate::subspace::Quotient;

/// An element `R ∈ B ⊗ B` (a column of length `n²`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    pub r: Matrix,
    pub r_inv: Option<Matrix>,
}

impl RMatrix {
    pub fn trivial(b: &Bialgebra) -> Self {
        RMatrix { r: b.unit().kron(b.unit()), r_inv: None }
    }

    /// `½(1⊗1 + 1⊗g + g⊗1 − g⊗g)` on `kC₂` with basis `1, g`.
    pub fn c2_nontrivial(field: Field) -> Result<Self> {
        let half = field.from_ratio(1, 2).ok_or(Error::Invalid("needs characteristic other than 2".into()))?;
        let r = Matrix::from_i64(field, &[&[1], &[1], &[1], &[-1]]).scale(&half);
        Ok(RMatrix { r, r_inv: None })
    }

    /// Left multiplication by `R` on `B ⊗ B`.
    fn left_mult(&self, b: &Bialgebra) -> Matrix {
        let n = b.dim();
        b.mul2().mul(&self.r.kron(&Matrix::identity(b.field(), n * n)))
    }

    fn right_mult(&self, b: &Bialgebra) -> Matrix {
        let n = b.dim();
        b.mul2().mul(&Matrix::identity(b.field(), n * n).kron(&self.r))
    }
}

/// `R₁₂`, `R₁₃`, `R₂₃` inside `B ⊗ B ⊗ B`.
fn legs(b: &Bialgebra, r: &Matrix) -> [Matrix; 3] {
    let f = b.field();
    let n = b.dim();
    let id = Matrix::identity(f, n);
    let r12 = r.kron(b.unit());
    let r13 = Matrix::kron_all(f, &[&id, b.unit(), &id]).mul(r);
    let r23 = b.unit().kron(r);
    [r12, r13, r23]
}

pub fn check_rmatrix(b: &Bialgebra, rm: &RMatrix) -> Report {
    let mut rep = Report::new("r-matrix");
    let f = b.field();
    let n = b.dim();
    if rm.r.shape() != (n * n, 1) {
        rep.fail("shape", format!("R must be a column of length {}", n * n), None);
        return rep;
    }
    let id = Matrix::identity(f, n);
    let lhs = rm.right_mult(b).mul(&b.flip().mul(b.comul()));
    let rhs = rm.left_mult(b).mul(b.comul());
    rep.record("intertwines", lhs.first_difference(&rhs).map_or(Ok(()), |(_, c)| Err(Witness::at(&[c]))));
    let [r12, r13, r23] = legs(b, &rm.r);
    let m3 = b.mul3();
    let lhs = b.comul().kron(&id).mul(&rm.r);
    let rhs = m3.mul(&r13.kron(&r23));
    rep.expect("coproduct-first-leg", lhs == rhs, "(Δ⊗id)R = R₁₃R₂₃");
    let lhs = id.kron(b.comul()).mul(&rm.r);
    let rhs = m3.mul(&r13.kron(&r12));
    rep.expect("coproduct-second-leg", lhs == rhs, "(id⊗Δ)R = R₁₃R₁₂");
    let one = b.unit().kron(b.unit());
    match &rm.r_inv {
        Some(inv) => {
            let m2 = b.mul2();
            let ok = m2.mul(&rm.r.kron(inv)) == one && m2.mul(&inv.kron(&rm.r)) == one;
            rep.expect("invertible", ok, "R R⁻¹ = 1⊗1 = R⁻¹ R");
        }
        None => rep.expect("invertible", rm.left_mult(b).is_invertible(), "left multiplication by R is invertible"),
    }
    rep
}

/// The inverse of `R`, if it exists.
pub fn r_inverse(b: &Bialgebra, rm: &RMatrix) -> Option<Matrix> {
    let one = b.unit().kron(b.unit());
    rm.left_mult(b).solve(&one).ok().flatten()
}

/// `c_{M,N} = τ ∘ (R·−)` from `M ⊗ N` to `N ⊗ M`.
pub fn braiding_from_r(b: &Bialgebra, rm: &RMatrix, m: &Module, n: &Module) -> Matrix {
    let f = b.field();
    let (k, dm, dn) = (b.dim(), m.dim(), n.dim());
    Matrix::chain(&[
        &swap(f, dm, dn),
        &m.action.kron(&n.action),
        &tensor_permutation(f, &[k, k, dm, dn], &[0, 2, 1, 3]),
        &rm.r.kron(&Matrix::identity(f, dm * dn)),
    ])
}

/// Both hexagons and the Yang–Baxter equation on one triple.
pub fn braiding_axioms(b: &Bialgebra, rm: &RMatrix, x: &Module, y: &Module, z: &Module) -> Result<Report> {
    let f = b.field();
    let i = |d: usize| Matrix::identity(f, d);
    let (dx, dy, dz) = (x.dim(), y.dim(), z.dim());
    let c = |p: &Module, q: &Module| braiding_from_r(b, rm, p, q);
    let mut rep = Report::new("braiding");
    let xy = x.tensor(y, b)?;
    let lhs = c(&xy, z);
    let rhs = c(x, z).kron(&i(dy)).mul(&i(dx).kron(&c(y, z)));
    rep.expect("hexagon-left", lhs == rhs, "c_{X⊗Y,Z} = (c_{X,Z}⊗id)(id⊗c_{Y,Z})");
    let yz = y.tensor(z, b)?;
    let lhs = c(x, &yz);
    let rhs = i(dy).kron(&c(x, z)).mul(&c(x, y).kron(&i(dz)));
    rep.expect("hexagon-right", lhs == rhs, "c_{X,Y⊗Z} = (id⊗c_{X,Z})(c_{X,Y}⊗id)");
    let lhs = Matrix::chain(&[&c(y, z).kron(&i(dx)), &i(dy).kron(&c(x, z)), &c(x, y).kron(&i(dz))]);
    let rhs = Matrix::chain(&[&i(dz).kron(&c(x, y)), &c(x, z).kron(&i(dy)), &i(dx).kron(&c(y, z))]);
    rep.expect("yang-baxter", lhs == rhs, "braid relation on X⊗Y⊗Z");
    Ok(rep)
}

/// Naturality of `c` against every basis intertwiner `x → x2`, in both legs, with `y` fixed.
pub fn braiding_natural(b: &Bialgebra, rm: &RMatrix, x: &Module, x2: &Module, y: &Module) -> Result<bool> {
    let f = b.field();
    let iy = Matrix::identity(f, y.dim());
    for g in hom_space(x, x2)? {
        if iy.kron(&g).mul(&braiding_from_r(b, rm, x, y)) != braiding_from_r(b, rm, x2, y).mul(&g.kron(&iy)) {
            return Ok(false);
        }
        if g.kron(&iy).mul(&braiding_from_r(b, rm, y, x)) != braiding_from_r(b, rm, y, x2).mul(&iy.kron(&g)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Element test (`Δ = Δcop`) against the interchange-lift test for `B ⊗ −`
/// on all carrier quadruples of dimension at most `max_dim`.
pub fn double_opmonoidal_check(b: &Bialgebra, max_dim: usize) -> Report {
    let f = b.field();
    let n = b.dim();
    let mut rep = Report::new("double opmonoidal");
    let flipped = b.flip().mul(b.comul());
    let element = b.comul().first_difference(&flipped);
    rep.record("cocommutative", element.map_or(Ok(()), |(_, c)| Err(Witness::at(&[c]))));
    let d3 = b.comul3();
    let mut diagram_ok = true;
    let mut witness = None;
    let dims: Vec<usize> = (1..=max_dim).collect();
    'outer: for &du in &dims {
        for &dv in &dims {
            for &dw in &dims {
                for &dx in &dims {
                    let base = d3.kron(&Matrix::identity(f, du * dv * dw * dx));
                    let all = [n, n, n, n, du, dv, dw, dx];
                    let crossed = tensor_permutation(f, &all, &[0, 4, 2, 6, 1, 5, 3, 7]).mul(&base);
                    let straight = tensor_permutation(f, &all, &[0, 4, 1, 6, 2, 5, 3, 7]).mul(&base);
                    if let Some((_, c)) = crossed.first_difference(&straight) {
                        diagram_ok = false;
                        witness = Some(Witness::at(&[c / (du * dv * dw * dx), du, dv, dw, dx]));
                        break 'outer;
                    }
                }
            }
        }
    }
    match witness {
        None => rep.pass("interchange-lift", ""),
        Some(w) => rep.fail("interchange-lift", "", Some(w)),
    }
    rep.expect("tests-agree", element.is_none() == diagram_ok, "element and diagram tests agree");
    rep
}

/// A bimodule over a commutative algebra: left `d × (n·d)`, right `d × (d·n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    pub name: String,
    pub left: Matrix,
    pub right: Matrix,
}

impl Bimodule {
    pub fn dim(&self) -> usize {
        self.left.rows()
    }

    /// `A` acting on itself from both sides.
    pub fn regular(a: &Algebra) -> Self {
        Bimodule { name: "A".into(), left: a.mul.clone(), right: a.mul.clone() }
    }

    /// `A ⊗ A` with `A` acting on the outer legs.
    pub fn outer(a: &Algebra) -> Self {
        let id = Matrix::identity(a.field(), a.dim());
        Bimodule { name: "A⊗A".into(), left: a.mul.kron(&id), right: id.kron(&a.mul) }
    }

    /// `k^d` with `a` acting by `left(a)` on the left and `right(a)` on the right.
    pub fn from_characters(name: &str, left: &Matrix, right: &Matrix, d: usize) -> Self {
        let id = Matrix::identity(left.field(), d);
        Bimodule { name: name.into(), left: left.kron(&id), right: id.kron(right) }
    }

    pub fn validate(&self, a: &Algebra) -> Report {
        let f = a.field();
        let (n, d) = (a.dim(), self.dim());
        let mut r = Report::new(format!("bimodule {}", self.name));
        r.absorb("left", Module { algebra: a.clone(), action: self.left.clone() }.validate());
        let right_as_left = self.right.mul(&swap(f, n, d));
        r.absorb("right", Module { algebra: a.opposite(), action: right_as_left }.validate());
        let lhs = self.right.mul(&self.left.kron(&Matrix::identity(f, n)));
        let rhs = self.left.mul(&Matrix::identity(f, n).kron(&self.right));
        r.expect("commute", lhs == rhs, "(a·m)·b = a·(m·b)");
        r
    }
}

/// An object built from stored bimodules by `•` and `∘`, kept as a quotient of its ambient tensor carrier.
#[derive(Clone, Debug)]
pub struct Composite {
    pub name: String,
    pub bimodule: Bimodule,
    /// `dim × ambient`.
    pub proj: Matrix,
    /// `ambient × dim`.
    pub section: Matrix,
    /// Basis of the kernel of `proj`.
    pub relations: Matrix,
}

impl Composite {
    pub fn base(m: &Bimodule) -> Self {
        let f = m.left.field();
        let d = m.dim();
        Composite {
            name: m.name.clone(),
            bimodule: m.clone(),
            proj: Matrix::identity(f, d),
            section: Matrix::identity(f, d),
            relations: Matrix::zeros(f, d, 0),
        }
    }

    pub fn dim(&self) -> usize {
        self.bimodule.dim()
    }

    pub fn ambient(&self) -> usize {
        self.proj.cols()
    }
}

/// Ambient lift `section_t · m · proj_s` of a map between composites.
fn lift(m: &Matrix, src: &Composite, tgt: &Composite) -> Matrix {
    Matrix::chain(&[&tgt.section, m, &src.proj])
}

fn inverse(m: &Matrix, what: &'static str) -> Result<Matrix> {
    m.inverse()?.ok_or(Error::Singular(what))
}

/// The duoidal structure on bimodules over a commutative algebra `A`:
/// `•` is `⊗_A`, `∘` is `⊗_{A⊗A}`, with units `A` and `A ⊗ A`.
#[derive(Clone, Debug)]
pub struct Duoidal {
    pub algebra: Algebra,
    pub objects: Vec<Bimodule>,
}

type Zeta = (Matrix, Composite, Composite);

impl Duoidal {
    pub fn new(algebra: &Algebra, objects: Vec<Bimodule>) -> Result<Self> {
        if !algebra.is_commutative() {
            return Err(Error::NotCommutative);
        }
        Ok(Duoidal { algebra: algebra.clone(), objects })
    }

    fn field(&self) -> Field {
        self.algebra.field()
    }

    fn id(&self, d: usize) -> Matrix {
        Matrix::identity(self.field(), d)
    }

    fn quotient(
        &self,
        name: String,
        x: &Composite,
        y: &Composite,
        relations: &Matrix,
        left: &Matrix,
        right: &Matrix,
    ) -> Composite {
        let n = self.algebra.dim();
        let q = Quotient::cokernel(relations);
        let left = Matrix::chain(&[&q.proj, left, &q.section.pad(n, 1)]);
        let right = Matrix::chain(&[&q.proj, right, &q.section.pad(1, n)]);
        let proj = q.proj.mul(&x.proj.kron(&y.proj));
        let section = x.section.kron(&y.section).mul(&q.section);
        let relations = proj.kernel();
        Composite { name: name.clone(), bimodule: Bimodule { name, left, right }, proj, section, relations }
    }

    /// `X ⊗_A Y`: left action from `X`, right action from `Y`.
    pub fn bullet(&self, x: &Composite, y: &Composite) -> Composite {
        let (dx, dy) = (x.dim(), y.dim());
        let (mx, my) = (&x.bimodule, &y.bimodule);
        let rel = mx.right.kron(&self.id(dy)).sub(&self.id(dx).kron(&my.left));
        let left = mx.left.kron(&self.id(dy));
        let right = self.id(dx).kron(&my.right);
        self.quotient(format!("({}•{})", x.name, y.name), x, y, &rel, &left, &right)
    }

    /// `X ⊗_{A⊗A} Y`: `a` acts on `X` from the left, `b` on `Y` from the right.
    pub fn circ(&self, x: &Composite, y: &Composite) -> Composite {
        let f = self.field();
        let n = self.algebra.dim();
        let (dx, dy) = (x.dim(), y.dim());
        let (mx, my) = (&x.bimodule, &y.bimodule);
        // a⊗x⊗y: ax⊗y − x⊗ay
        let left_rel =
            mx.left.kron(&self.id(dy)).sub(&self.id(dx).kron(&my.left).mul(&swap(f, n, dx).kron(&self.id(dy))));
        // x⊗y⊗b: xb⊗y − x⊗yb
        let right_rel =
            mx.right.kron(&self.id(dy)).mul(&self.id(dx).kron(&swap(f, dy, n))).sub(&self.id(dx).kron(&my.right));
        let rel = left_rel.hstack(&right_rel);
        let left = mx.left.kron(&self.id(dy));
        let right = self.id(dx).kron(&my.right);
        self.quotient(format!("({}∘{})", x.name, y.name), x, y, &rel, &left, &right)
    }

    /// The `•`-unit `A`.
    pub fn one(&self) -> Composite {
        Composite::base(&Bimodule::regular(&self.algebra))
    }

    /// The `∘`-unit `A ⊗ A`.
    pub fn bot(&self) -> Composite {
        Composite::base(&Bimodule::outer(&self.algebra))
    }

    /// Map between composites induced by an ambient map; errors unless it respects the relations.
    pub fn induced(&self, src: &Composite, tgt: &Composite, ambient: &Matrix) -> Result<Matrix> {
        if ambient.shape() != (tgt.ambient(), src.ambient()) {
            return Err(Error::Shape {
                op: "induced map",
                left: ambient.shape(),
                right: (tgt.ambient(), src.ambient()),
            });
        }
        if !tgt.proj.mul(ambient).mul(&src.relations).is_zero() {
            return Err(Error::Invalid(format!("map {} → {} is not well defined", src.name, tgt.name)));
        }
        Ok(Matrix::chain(&[&tgt.proj, ambient, &src.section]))
    }

    /// The identity on equal ambients, between two presentations of the same object.
    fn reassociate(&self, src: &Composite, tgt: &Composite) -> Result<Matrix> {
        self.induced(src, tgt, &self.id(src.ambient()))
    }

    /// `ζ: (X•Y)∘(Z•W) → (X∘Z)•(Y∘W)`, the middle swap, with its domain and codomain.
    pub fn zeta(&self, x: &Composite, y: &Composite, z: &Composite, w: &Composite) -> Result<Zeta> {
        let src = self.circ(&self.bullet(x, y), &self.bullet(z, w));
        let tgt = self.bullet(&self.circ(x, z), &self.circ(y, w));
        let dims = [x.ambient(), y.ambient(), z.ambient(), w.ambient()];
        let perm = tensor_permutation(self.field(), &dims, &[0, 2, 1, 3]);
        Ok((self.induced(&src, &tgt, &perm)?, src, tgt))
    }

    /// `λ∘: ⊥∘M → M`, `a⊗b⊗m ↦ a·m·b`.
    pub fn circ_left_unitor(&self, m: &Composite) -> Result<(Matrix, Composite)> {
        let f = self.field();
        let n = self.algebra.dim();
        let bot = self.bot();
        let src = self.circ(&bot, m);
        let bm = &m.bimodule;
        let act = Matrix::chain(&[&bm.left, &self.id(n).kron(&bm.right), &self.id(n).kron(&swap(f, n, m.dim()))]);
        let amb = Matrix::chain(&[&m.section, &act, &bot.proj.kron(&m.proj)]);
        Ok((self.induced(&src, m, &amb)?, src))
    }

    /// `ρ∘: M∘⊥ → M`, `m⊗a⊗b ↦ a·m·b`.
    pub fn circ_right_unitor(&self, m: &Composite) -> Result<(Matrix, Composite)> {
        let f = self.field();
        let n = self.algebra.dim();
        let bot = self.bot();
        let src = self.circ(m, &bot);
        let bm = &m.bimodule;
        let act = Matrix::chain(&[&bm.left, &self.id(n).kron(&bm.right), &swap(f, m.dim(), n).kron(&self.id(n))]);
        let amb = Matrix::chain(&[&m.section, &act, &m.proj.kron(&bot.proj)]);
        Ok((self.induced(&src, m, &amb)?, src))
    }

    /// `λ•: 1•M → M`, `a⊗m ↦ a·m`.
    pub fn bullet_left_unitor(&self, m: &Composite) -> Result<(Matrix, Composite)> {
        let one = self.one();
        let src = self.bullet(&one, m);
        let amb = Matrix::chain(&[&m.section, &m.bimodule.left, &one.proj.kron(&m.proj)]);
        Ok((self.induced(&src, m, &amb)?, src))
    }

    /// `ρ•: M•1 → M`, `m⊗a ↦ m·a`.
    pub fn bullet_right_unitor(&self, m: &Composite) -> Result<(Matrix, Composite)> {
        let one = self.one();
        let src = self.bullet(m, &one);
        let amb = Matrix::chain(&[&m.section, &m.bimodule.right, &m.proj.kron(&one.proj)]);
        Ok((self.induced(&src, m, &amb)?, src))
    }

    /// `ν: ⊥ → ⊥•⊥`, `a⊗b ↦ (a⊗1)⊗(1⊗b)`.
    pub fn nu(&self) -> Result<Matrix> {
        let a = &self.algebra;
        let id = self.id(a.dim());
        let bot = self.bot();
        let tgt = self.bullet(&bot, &bot);
        self.induced(&bot, &tgt, &Matrix::kron_all(self.field(), &[&id, &a.unit, &a.unit, &id]))
    }

    /// `ω: 1∘1 → 1`, the multiplication.
    pub fn omega(&self) -> Result<Matrix> {
        let one = self.one();
        self.induced(&self.circ(&one, &one), &one, &self.algebra.mul)
    }

    /// `ι: ⊥ → 1`, the multiplication.
    pub fn iota(&self) -> Result<Matrix> {
        self.induced(&self.bot(), &self.one(), &self.algebra.mul)
    }

    /// `ι` rebuilt as `λ• · (ρ∘ • λ∘) · ζ · (λ•⁻¹ ∘ ρ•⁻¹) · λ∘⁻¹`.
    pub fn derived_iota(&self) -> Result<Matrix> {
        let one = self.one();
        let bot = self.bot();
        let (lc, bot_bot) = self.circ_left_unitor(&bot)?;
        let (lb, one_bot) = self.bullet_left_unitor(&bot)?;
        let (rb, bot_one) = self.bullet_right_unitor(&bot)?;
        let (z, zs, zt) = self.zeta(&one, &bot, &bot, &one)?;
        let split = lift(&inverse(&lb, "λ•")?, &bot, &one_bot).kron(&lift(&inverse(&rb, "ρ•")?, &bot, &bot_one));
        let split = self.induced(&bot_bot, &zs, &split)?;
        let (rc, one_circ_bot) = self.circ_right_unitor(&one)?;
        let (lc1, bot_circ_one) = self.circ_left_unitor(&one)?;
        let one_one = self.bullet(&one, &one);
        let collapse = lift(&rc, &one_circ_bot, &one).kron(&lift(&lc1, &bot_circ_one, &one));
        let collapse = self.induced(&zt, &one_one, &collapse)?;
        let (l1, _) = self.bullet_left_unitor(&one)?;
        Ok(Matrix::chain(&[&l1, &collapse, &z, &split, &inverse(&lc, "λ∘")?]))
    }

    /// The `∘`-associativity square on `((x•y)∘(a•b))∘(c•d)`.
    pub fn associativity_circ(&self, o: [&Composite; 6]) -> Result<bool> {
        let [x, y, a, b, c, d] = o;
        let xy = self.bullet(x, y);
        let cd = self.bullet(c, d);
        let src = self.circ(&self.circ(&xy, &self.bullet(a, b)), &cd);
        let end = self.bullet(&self.circ(x, &self.circ(a, c)), &self.circ(y, &self.circ(b, d)));
        // (ζ∘id) then ζ
        let (z1, z1s, z1t) = self.zeta(x, y, a, b)?;
        let (z2, z2s, z2t) = self.zeta(&self.circ(x, a), &self.circ(y, b), c, d)?;
        let s1 = self.induced(&src, &z2s, &lift(&z1, &z1s, &z1t).kron(&self.id(cd.ambient())))?;
        let left = Matrix::chain(&[&self.reassociate(&z2t, &end)?, &z2, &s1]);
        // α, then id∘ζ, then ζ
        let (z3, z3s, z3t) = self.zeta(a, b, c, d)?;
        let mid = self.circ(&xy, &z3t);
        let s1 = self.induced(&src, &mid, &self.id(xy.ambient()).kron(&lift(&z3, &z3s, &z3t)))?;
        let (z4, z4s, z4t) = self.zeta(x, y, &self.circ(a, c), &self.circ(b, d))?;
        let right = Matrix::chain(&[&self.reassociate(&z4t, &end)?, &z4, &self.reassociate(&mid, &z4s)?, &s1]);
        Ok(left == right)
    }

    /// The `•`-associativity square on `((x•a)•c)∘((y•b)•d)`.
    pub fn associativity_bullet(&self, o: [&Composite; 6]) -> Result<bool> {
        let [x, a, c, y, b, d] = o;
        let src = self.circ(&self.bullet(&self.bullet(x, a), c), &self.bullet(&self.bullet(y, b), d));
        let xy = self.circ(x, y);
        let cd = self.circ(c, d);
        let end = self.bullet(&self.bullet(&xy, &self.circ(a, b)), &cd);
        // ζ then ζ•id
        let (z1, z1s, z1t) = self.zeta(&self.bullet(x, a), c, &self.bullet(y, b), d)?;
        let (z2, z2s, z2t) = self.zeta(x, a, y, b)?;
        let s2 = self.induced(&z1t, &end, &lift(&z2, &z2s, &z2t).kron(&self.id(cd.ambient())))?;
        let left = Matrix::chain(&[&s2, &z1, &self.reassociate(&src, &z1s)?]);
        // α, then ζ, then id•ζ
        let (z3, z3s, z3t) = self.zeta(x, &self.bullet(a, c), y, &self.bullet(b, d))?;
        let (z4, z4s, z4t) = self.zeta(a, c, b, d)?;
        let s4 = self.induced(&z3t, &end, &self.id(xy.ambient()).kron(&lift(&z4, &z4s, &z4t)))?;
        let right = Matrix::chain(&[&s4, &z3, &self.reassociate(&src, &z3s)?]);
        Ok(left == right)
    }

    /// The four unitality squares for the pair `a, b`.
    pub fn unitality(&self, a: &Composite, b: &Composite) -> Result<[bool; 4]> {
        let one = self.one();
        let bot = self.bot();
        let ab = self.bullet(a, b);
        let aob = self.circ(a, b);
        let nu = self.nu()?;
        let bot2 = self.bullet(&bot, &bot);
        let nu_amb = lift(&nu, &bot, &bot2);
        // ⊥∘(a•b) → (⊥•⊥)∘(a•b) → (⊥∘a)•(⊥∘b) → a•b
        let (lam, src) = self.circ_left_unitor(&ab)?;
        let (z, zs, zt) = self.zeta(&bot, &bot, a, b)?;
        let into = self.induced(&src, &zs, &nu_amb.kron(&self.id(ab.ambient())))?;
        let (la, la_src) = self.circ_left_unitor(a)?;
        let (lb, lb_src) = self.circ_left_unitor(b)?;
        let out = self.induced(&zt, &ab, &lift(&la, &la_src, a).kron(&lift(&lb, &lb_src, b)))?;
        let first = Matrix::chain(&[&out, &z, &into]) == lam;
        // (a•b)∘⊥ → (a•b)∘(⊥•⊥) → (a∘⊥)•(b∘⊥) → a•b
        let (rho, src) = self.circ_right_unitor(&ab)?;
        let (z, zs, zt) = self.zeta(a, b, &bot, &bot)?;
        let into = self.induced(&src, &zs, &self.id(ab.ambient()).kron(&nu_amb))?;
        let (ra, ra_src) = self.circ_right_unitor(a)?;
        let (rb, rb_src) = self.circ_right_unitor(b)?;
        let out = self.induced(&zt, &ab, &lift(&ra, &ra_src, a).kron(&lift(&rb, &rb_src, b)))?;
        let second = Matrix::chain(&[&out, &z, &into]) == rho;
        let omega = self.omega()?;
        let oo = self.circ(&one, &one);
        let omega_amb = lift(&omega, &oo, &one);
        // (1•a)∘(1•b) → (1∘1)•(a∘b) → 1•(a∘b) → a∘b
        let (z, zs, zt) = self.zeta(&one, a, &one, b)?;
        let (l, l_src) = self.bullet_left_unitor(&aob)?;
        let mid = self.induced(&zt, &l_src, &omega_amb.kron(&self.id(aob.ambient())))?;
        let (l1a, l1a_src) = self.bullet_left_unitor(a)?;
        let (l1b, l1b_src) = self.bullet_left_unitor(b)?;
        let direct = self.induced(&zs, &aob, &lift(&l1a, &l1a_src, a).kron(&lift(&l1b, &l1b_src, b)))?;
        let third = Matrix::chain(&[&l, &mid, &z]) == direct;
        // (a•1)∘(b•1) → (a∘b)•(1∘1) → (a∘b)•1 → a∘b
        let (z, zs, zt) = self.zeta(a, &one, b, &one)?;
        let (r, r_src) = self.bullet_right_unitor(&aob)?;
        let mid = self.induced(&zt, &r_src, &self.id(aob.ambient()).kron(&omega_amb))?;
        let (r1a, r1a_src) = self.bullet_right_unitor(a)?;
        let (r1b, r1b_src) = self.bullet_right_unitor(b)?;
        let direct = self.induced(&zs, &aob, &lift(&r1a, &r1a_src, a).kron(&lift(&r1b, &r1b_src, b)))?;
        let fourth = Matrix::chain(&[&r, &mid, &z]) == direct;
        Ok([first, second, third, fourth])
    }

    /// `(1, ω, ι)` is a monoid for `∘`.
    pub fn monoid_laws(&self) -> Result<bool> {
        let one = self.one();
        let bot = self.bot();
        let omega = self.omega()?;
        let oo = self.circ(&one, &one);
        let omega_amb = lift(&omega, &oo, &one);
        let ooo_l = self.circ(&oo, &one);
        let ooo_r = self.circ(&one, &oo);
        let left = self.induced(&ooo_l, &oo, &omega_amb.kron(&self.id(one.ambient())))?;
        let right = self.induced(&ooo_r, &oo, &self.id(one.ambient()).kron(&omega_amb))?;
        let assoc = omega.mul(&left) == Matrix::chain(&[&omega, &right, &self.reassociate(&ooo_l, &ooo_r)?]);
        let iota_amb = lift(&self.iota()?, &bot, &one);
        let (lu, lsrc) = self.circ_left_unitor(&one)?;
        let unit_l = self.induced(&lsrc, &oo, &iota_amb.kron(&self.id(one.ambient())))?;
        let (ru, rsrc) = self.circ_right_unitor(&one)?;
        let unit_r = self.induced(&rsrc, &oo, &self.id(one.ambient()).kron(&iota_amb))?;
        Ok(assoc && omega.mul(&unit_l) == lu && omega.mul(&unit_r) == ru)
    }

    /// `(⊥, ν, ι)` is a comonoid for `•`.
    pub fn comonoid_laws(&self) -> Result<bool> {
        let one = self.one();
        let bot = self.bot();
        let nu = self.nu()?;
        let bb = self.bullet(&bot, &bot);
        let nu_amb = lift(&nu, &bot, &bb);
        let bbb_l = self.bullet(&bb, &bot);
        let bbb_r = self.bullet(&bot, &bb);
        let left = self.induced(&bb, &bbb_l, &nu_amb.kron(&self.id(bot.ambient())))?;
        let right = self.induced(&bb, &bbb_r, &self.id(bot.ambient()).kron(&nu_amb))?;
        let coassoc = Matrix::chain(&[&self.reassociate(&bbb_l, &bbb_r)?, &left, &nu]) == right.mul(&nu);
        let iota_amb = lift(&self.iota()?, &bot, &one);
        let (lu, lsrc) = self.bullet_left_unitor(&bot)?;
        let counit_l = self.induced(&bb, &lsrc, &iota_amb.kron(&self.id(bot.ambient())))?;
        let (ru, rsrc) = self.bullet_right_unitor(&bot)?;
        let counit_r = self.induced(&bb, &rsrc, &self.id(bot.ambient()).kron(&iota_amb))?;
        Ok(coassoc
            && Matrix::chain(&[&lu, &counit_l, &nu]).is_identity()
            && Matrix::chain(&[&ru, &counit_r, &nu]).is_identity())
    }

    /// `b∘c → (1•b)∘(c•1) → (1∘c)•(b∘1) → c•b`. Over `A = k` this is the symmetry.
    pub fn braiding(&self, b: &Composite, c: &Composite) -> Result<Matrix> {
        let one = self.one();
        let (z, zs, zt) = self.zeta(&one, b, c, &one)?;
        let (lb, lb_src) = self.bullet_left_unitor(b)?;
        let (rc, rc_src) = self.bullet_right_unitor(c)?;
        let split = lift(&inverse(&lb, "λ•")?, b, &lb_src).kron(&lift(&inverse(&rc, "ρ•")?, c, &rc_src));
        let into = self.induced(&self.circ(b, c), &zs, &split)?;
        let (lc, lc_src) = self.circ_left_unitor(c)?;
        let (rb, rb_src) = self.circ_right_unitor(b)?;
        let out = self.induced(&zt, &self.bullet(c, b), &lift(&lc, &lc_src, c).kron(&lift(&rb, &rb_src, b)))?;
        Ok(Matrix::chain(&[&out, &z, &into]))
    }

    /// Every duoidal axiom on the given index tuples into `objects`.
    pub fn verify(&self, quadruples: &[[usize; 4]], sextuples: &[[usize; 6]]) -> Report {
        let mut rep = Report::new("duoidal");
        for (i, m) in self.objects.iter().enumerate() {
            if !m.validate(&self.algebra).passed() {
                rep.fail("objects", format!("{} is not a bimodule", m.name), Some(Witness::at(&[i])));
                return rep;
            }
        }
        rep.pass("objects", format!("{} stored bimodules", self.objects.len()));
        let base: Vec<Composite> = self.objects.iter().map(Composite::base).collect();
        let zeta_ok = |t: &[usize]| self.zeta(&base[t[0]], &base[t[1]], &base[t[2]], &base[t[3]]).is_ok();
        rep.record("zeta-well-defined", first_bad(zeta_ok, quadruples.iter().map(|q| &q[..])));
        let six = |t: &[usize]| [&base[t[0]], &base[t[1]], &base[t[2]], &base[t[3]], &base[t[4]], &base[t[5]]];
        let circ_ok = |t: &[usize]| matches!(self.associativity_circ(six(t)), Ok(true));
        rep.record("associativity-circ", first_bad(circ_ok, sextuples.iter().map(|s| &s[..])));
        let bullet_ok = |t: &[usize]| matches!(self.associativity_bullet(six(t)), Ok(true));
        rep.record("associativity-bullet", first_bad(bullet_ok, sextuples.iter().map(|s| &s[..])));
        let pairs: Vec<[usize; 2]> = tuples::<2>(&vec![1; base.len()], 1);
        let unit_ok = |t: &[usize]| matches!(self.unitality(&base[t[0]], &base[t[1]]), Ok([true, true, true, true]));
        rep.record("unitality", first_bad(unit_ok, pairs.iter().map(|p| &p[..])));
        rep.expect("monoid", matches!(self.monoid_laws(), Ok(true)), "(1, ω, ι) is a ∘-monoid");
        rep.expect("comonoid", matches!(self.comonoid_laws(), Ok(true)), "(⊥, ν, ι) is a •-comonoid");
        let circ_unit = base.iter().all(|m| {
            let l = self.circ_left_unitor(m).map(|(u, _)| u.is_invertible());
            let r = self.circ_right_unitor(m).map(|(u, _)| u.is_invertible());
            matches!((l, r), (Ok(true), Ok(true)))
        });
        rep.expect("circ-unit", circ_unit, "A⊗A is a two-sided ∘-unit on the stored objects");
        let derived = matches!((self.iota(), self.derived_iota()), (Ok(a), Ok(b)) if a == b);
        rep.expect("iota-derived", derived, "ι agrees with its derivation from ζ and the unitors");
        rep
    }
}

fn first_bad<'a>(
    ok: impl Fn(&[usize]) -> bool,
    mut tuples: impl Iterator<Item = &'a [usize]>,
) -> core::result::Result<(), Witness> {
    tuples.find(|t| !ok(t)).map_or(Ok(()), |t| Err(Witness::at(t)))
}

/// Index tuples over `dims` whose product of dimensions is at most `cap`.
pub fn tuples<const K: usize>(dims: &[usize], cap: usize) -> Vec<[usize; K]> {
    let count = dims.len();
    let mut out = Vec::new();
    for idx in 0..count.pow(K as u32) {
        let mut t = [0usize; K];
        let mut rest = idx;
        for k in (0..K).rev() {
            t[k] = rest % count;
            rest /= count;
        }
        if t.iter().map(|&i| dims[i]).product::<usize>() <= cap {
            out.push(t);
        }
    }
    out
}

/// `k` and `k²` over the ground field.
pub fn family_ground(field: Field) -> Duoidal {
    let a = Algebra::ground(field);
    let one = Matrix::identity(field, 1);
    let objects = vec![Bimodule::from_characters("k", &one, &one, 1), Bimodule::from_characters("k²", &one, &one, 2)];
    Duoidal { algebra: a, objects }
}

/// `e_i k e_j` over `k × k`.
pub fn family_split(field: Field) -> Duoidal {
    let a = crate::catalog::split_pair(field);
    let chars = [Matrix::from_i64(field, &[&[1, 0]]), Matrix::from_i64(field, &[&[0, 1]])];
    let mut objects = Vec::new();
    for (i, x) in chars.iter().enumerate() {
        for (j, y) in chars.iter().enumerate() {
            objects.push(Bimodule::from_characters(&format!("e{}ke{}", i + 1, j + 1), x, y, 1));
        }
    }
    Duoidal { algebra: a, objects }
}

/// `A`, `k` and `A ⊗ A` over `A = k[x]/(x²)`.
pub fn family_dual_numbers(field: Field) -> Duoidal {
    let a = crate::catalog::dual_numbers(field);
    let aug = Matrix::from_i64(field, &[&[1, 0]]);
    let objects = vec![Bimodule::regular(&a), Bimodule::from_characters("k", &aug, &aug, 1), Bimodule::outer(&a)];
    Duoidal { algebra: a, objects }
}
