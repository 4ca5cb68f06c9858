//! Yetter–Drinfeld and anti-Yetter–Drinfeld modules, the braiding on YD
//! modules, and the Drinfeld double.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Coalgebra};
use crate::error::{Error, Result};
use crate::hopf::{Bialgebra, Hopf};
use crate::matrix::{swap, tensor_permutation, Matrix};
use crate::rep::{hom_space, is_morphism, Comodule, Module, Rep, Side, Structure};
use crate::report::{Report, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Yd,
    AntiYd,
}

/// A module and a left comodule over the same Hopf algebra on one carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdObject {
    pub module: Module,
    pub comodule: Comodule,
    pub flavor: Flavor,
}

impl YdObject {
    pub fn new(module: Module, comodule: Comodule, flavor: Flavor) -> Result<Self> {
        if comodule.side != Side::Left || module.dim() != comodule.dim() {
            return Err(Error::Invalid("YD object needs a left coaction on the module carrier".into()));
        }
        Ok(YdObject { module, comodule, flavor })
    }

    /// Trivial action and coaction `m ↦ 1 ⊗ m`.
    pub fn trivial(h: &Hopf) -> Self {
        let b = &h.bialgebra;
        YdObject { module: Module::trivial(b), comodule: Comodule::trivial(b, Side::Left), flavor: Flavor::Yd }
    }

    /// One-dimensional object with action `beta` and coaction `m ↦ g ⊗ m`.
    pub fn one_dim(h: &Hopf, g: &Matrix, beta: &Matrix, flavor: Flavor) -> Self {
        let b = &h.bialgebra;
        YdObject {
            module: Module::from_character(&b.algebra, beta),
            comodule: Comodule::grouplike(&b.coalgebra, Side::Left, g),
            flavor,
        }
    }

    pub fn direct_sum(&self, other: &YdObject) -> YdObject {
        YdObject {
            module: self.module.direct_sum(&other.module),
            comodule: self.comodule.direct_sum(&other.comodule),
            flavor: self.flavor,
        }
    }

    /// Tensor product with diagonal action and codiagonal coaction.
    pub fn tensor(&self, other: &YdObject, h: &Hopf) -> Result<YdObject> {
        Ok(YdObject {
            module: self.module.tensor(&other.module, &h.bialgebra)?,
            comodule: self.comodule.tensor(&other.comodule, &h.bialgebra)?,
            flavor: self.flavor,
        })
    }
}

impl Rep for YdObject {
    fn field(&self) -> crate::Field {
        self.module.field()
    }

    fn dim(&self) -> usize {
        self.module.dim()
    }

    fn structures(&self) -> Vec<Structure<'_>> {
        let mut s = self.module.structures();
        s.extend(self.comodule.structures());
        s
    }

    fn same_base(&self, other: &Self) -> bool {
        self.module.same_base(&other.module) && self.comodule.same_base(&other.comodule)
    }
}

fn pair_witness(c: usize, d: usize) -> Witness {
    Witness::at(&[c / d, c % d])
}

/// `h₁y₋₁ ⊗ h₂y₀` and `(h₁y)₋₁h₂ ⊗ (h₁y)₀` as maps `H ⊗ Y → H ⊗ Y`.
fn yd_sides(h: &Hopf, x: &YdObject) -> (Matrix, Matrix) {
    let b = &h.bialgebra;
    let f = h.field();
    let (n, d) = (h.dim(), x.dim());
    let act = &x.module.action;
    let lam = &x.comodule.coaction;
    let idn = Matrix::identity(f, n);
    let idd = Matrix::identity(f, d);
    let lhs = Matrix::chain(&[
        &b.mul().kron(act),
        &tensor_permutation(f, &[n, n, n, d], &[0, 2, 1, 3]),
        &b.comul().kron(lam),
    ]);
    let rhs = Matrix::chain(&[
        &b.mul().kron(&idd),
        &tensor_permutation(f, &[n, d, n], &[0, 2, 1]),
        &lam.kron(&idn),
        &act.kron(&idn),
        &tensor_permutation(f, &[n, n, d], &[0, 2, 1]),
        &b.comul().kron(&idd),
    ]);
    (lhs, rhs)
}

/// `λ(h·y)` against `h₁y₋₁T(h₃) ⊗ h₂y₀` for `T = S` or `S⁻¹`.
fn conjugation_sides(h: &Hopf, x: &YdObject, t: &Matrix) -> (Matrix, Matrix) {
    let b = &h.bialgebra;
    let f = h.field();
    let (n, d) = (h.dim(), x.dim());
    let act = &x.module.action;
    let lam = &x.comodule.coaction;
    let idn = Matrix::identity(f, n);
    let lhs = lam.mul(act);
    let m3 = b.mul().mul(&b.mul().kron(&idn));
    let rhs = Matrix::chain(&[
        &m3.kron(act),
        &Matrix::kron_all(f, &[&idn, &idn, t, &idn, &Matrix::identity(f, d)]),
        &tensor_permutation(f, &[n, n, n, n, d], &[0, 3, 2, 1, 4]),
        &b.comul2().kron(lam),
    ]);
    (lhs, rhs)
}

pub fn check_yd(h: &Hopf, x: &YdObject) -> Report {
    let mut r = Report::new(match x.flavor {
        Flavor::Yd => "yd",
        Flavor::AntiYd => "anti-yd",
    });
    r.absorb("module", x.module.validate());
    r.absorb("comodule", x.comodule.validate());
    let d = x.dim();
    match x.flavor {
        Flavor::Yd => {
            let (lhs, rhs) = yd_sides(h, x);
            let first = lhs.first_difference(&rhs);
            r.record("compatibility", first.map_or(Ok(()), |(_, c)| Err(pair_witness(c, d))));
            let (lhs, rhs) = conjugation_sides(h, x, &h.antipode);
            let second = lhs.first_difference(&rhs);
            r.record("conjugation-form", second.map_or(Ok(()), |(_, c)| Err(pair_witness(c, d))));
            r.expect("forms-agree", first.is_none() == second.is_none(), "both forms give the same verdict");
        }
        Flavor::AntiYd => {
            let (lhs, rhs) = conjugation_sides(h, x, &h.antipode_inv);
            let first = lhs.first_difference(&rhs);
            r.record("anti-compatibility", first.map_or(Ok(()), |(_, c)| Err(pair_witness(c, d))));
        }
    }
    r
}

/// `σ(y ⊗ z) = y₋₁·z ⊗ y₀`.
pub fn braiding(h: &Hopf, y: &YdObject, z: &YdObject) -> Matrix {
    let f = h.field();
    let (n, dy, dz) = (h.dim(), y.dim(), z.dim());
    Matrix::chain(&[
        &z.module.action.kron(&Matrix::identity(f, dy)),
        &tensor_permutation(f, &[n, dy, dz], &[0, 2, 1]),
        &y.comodule.coaction.kron(&Matrix::identity(f, dz)),
    ])
}

/// `σ⁻¹(z ⊗ y) = y₀ ⊗ S⁻¹(y₋₁)·z`.
pub fn braiding_inverse(h: &Hopf, y: &YdObject, z: &YdObject) -> Matrix {
    let f = h.field();
    let (n, dy, dz) = (h.dim(), y.dim(), z.dim());
    Matrix::chain(&[
        &swap(f, dz, dy),
        &z.module.action.kron(&Matrix::identity(f, dy)),
        &Matrix::kron_all(f, &[&h.antipode_inv, &Matrix::identity(f, dz), &Matrix::identity(f, dy)]),
        &tensor_permutation(f, &[dz, n, dy], &[1, 0, 2]),
        &Matrix::identity(f, dz).kron(&y.comodule.coaction),
    ])
}

#[derive(Clone, Debug)]
pub struct Braiding {
    pub sigma: Matrix,
    pub sigma_inv: Matrix,
    pub report: Report,
}

pub fn yd_braiding(h: &Hopf, y: &YdObject, z: &YdObject) -> Result<Braiding> {
    let sigma = braiding(h, y, z);
    let sigma_inv = braiding_inverse(h, y, z);
    let mut report = Report::new("yd braiding");
    report.expect(
        "inverse",
        sigma.mul(&sigma_inv).is_identity() && sigma_inv.mul(&sigma).is_identity(),
        "σσ⁻¹ = id = σ⁻¹σ",
    );
    let yz = y.tensor(z, h)?;
    let zy = z.tensor(y, h)?;
    report.expect("morphism", is_morphism(&yz, &zy, &sigma), "σ is a YD morphism");
    Ok(Braiding { sigma, sigma_inv, report })
}

/// `(σ_{Y,Z}⊗id)(id⊗σ_{X,Z})(σ_{X,Y}⊗id) = (id⊗σ_{X,Y})(σ_{X,Z}⊗id)(id⊗σ_{Y,Z})` on `X⊗Y⊗Z`.
pub fn braid_relation(h: &Hopf, x: &YdObject, y: &YdObject, z: &YdObject) -> bool {
    let f = h.field();
    let i = |d: usize| Matrix::identity(f, d);
    let (dx, dy, dz) = (x.dim(), y.dim(), z.dim());
    let lhs = Matrix::chain(&[
        &braiding(h, y, z).kron(&i(dx)),
        &i(dy).kron(&braiding(h, x, z)),
        &braiding(h, x, y).kron(&i(dz)),
    ]);
    let rhs = Matrix::chain(&[
        &i(dz).kron(&braiding(h, x, y)),
        &braiding(h, x, z).kron(&i(dy)),
        &i(dx).kron(&braiding(h, y, z)),
    ]);
    lhs == rhs
}

/// Naturality of `σ` against every basis morphism `y → y′` in both legs.
pub fn braiding_natural(h: &Hopf, y: &YdObject, y2: &YdObject, z: &YdObject) -> Result<bool> {
    let f = h.field();
    let i = |d: usize| Matrix::identity(f, d);
    for m in hom_space(y, y2)? {
        let left = i(z.dim()).kron(&m).mul(&braiding(h, y, z));
        let right = braiding(h, y2, z).mul(&m.kron(&i(z.dim())));
        if left != right {
            return Ok(false);
        }
        let left = m.kron(&i(z.dim())).mul(&braiding(h, z, y));
        let right = braiding(h, z, y2).mul(&i(z.dim()).kron(&m));
        if left != right {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `D(H)` on `H* ⊗ H`; `f_i ⊗ a_j` sits at `i·n + j`.
///
/// Product `(f⊗a)(f′⊗a′) = f·f′(S⁻¹(a₃) − a₁) ⊗ a₂a′`, coproduct
/// `f⊗a ↦ (f₂⊗a₁) ⊗ (f₁⊗a₂)` where `f(xy) = f₁(x)f₂(y)`.
pub fn drinfeld_double(h: &Hopf) -> Result<Hopf> {
    let b = &h.bialgebra;
    let f = h.field();
    let n = h.dim();
    let nn = n * n;
    let dual_mul = b.comul().transpose();
    let d2 = b.comul2();
    // g_{k,r,p}(x) = f_k(S⁻¹(e_r) x e_p)
    let a = &b.algebra;
    let conj: Vec<Matrix> = (0..n)
        .flat_map(|r| (0..n).map(move |p| (r, p)))
        .map(|(r, p)| a.left_mult(&h.antipode_inv.col(r)).mul(&a.right_mult(&a.basis(p))))
        .collect();
    let mut entries = Vec::new();
    for j in 0..n {
        let terms: Vec<(usize, usize, usize, crate::Scalar)> = d2
            .transpose()
            .row_entries(j)
            .iter()
            .map(|(idx, c)| (idx / nn, (idx / n) % n, idx % n, c.clone()))
            .collect();
        for (p, q, r, c) in &terms {
            let m = &conj[r * n + p];
            for k in 0..n {
                let g = m.select_rows(&[k]);
                for i in 0..n {
                    let fg = dual_mul.mul(&Matrix::unit_vector(f, n, i).kron(&g.transpose()));
                    for l in 0..n {
                        let aa = a.product(&a.basis(*q), &a.basis(l));
                        let col = (i * n + j) * nn + (k * n + l);
                        for (s, _, x) in fg.entries() {
                            for (t, _, y) in aa.entries() {
                                entries.push((s * n + t, col, c * &(x * y)));
                            }
                        }
                    }
                }
            }
        }
    }
    let mul = Matrix::from_entries(f, nn, nn * nn, entries);
    let unit = b.counit().transpose().kron(b.unit());
    let labels: Vec<_> =
        b.algebra.labels.iter().flat_map(|x| b.algebra.labels.iter().map(move |y| format!("{x}*⊗{y}"))).collect();
    let algebra = Algebra::from_matrices(labels.clone(), mul, unit)?;
    let hmul = b.mul();
    let mut centries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (xy, c1) in hmul.row_entries(i) {
                let (x, y) = (xy / n, xy % n);
                for (pq, c2) in b.comul().transpose().row_entries(j) {
                    let (p, q) = (pq / n, pq % n);
                    centries.push(((y * n + p) * nn + (x * n + q), i * n + j, c1 * c2));
                }
            }
        }
    }
    let comul = Matrix::from_entries(f, nn * nn, nn, centries);
    let counit = b.unit().transpose().kron(b.counit());
    let coalgebra = Coalgebra::from_matrices(labels, comul, counit)?;
    let double = Hopf::new(Bialgebra::new(algebra, coalgebra)?)?;
    let report = double.validate();
    if let Some(c) = report.failures().next() {
        return Err(Error::Invalid(format!("double convention fails {}", c.id)));
    }
    Ok(double)
}

/// `(f⊗a)·m = f(S⁻¹((a·m)₋₁)) (a·m)₀`.
pub fn yd_to_double_module(h: &Hopf, double: &Hopf, x: &YdObject) -> Result<Module> {
    let f = h.field();
    let (n, d) = (h.dim(), x.dim());
    if double.dim() != n * n {
        return Err(Error::Invalid("double of a different algebra".into()));
    }
    let t = x.comodule.coaction.mul(&x.module.action);
    let parts: Vec<Matrix> =
        (0..n).map(|i| h.antipode_inv.select_rows(&[i]).kron(&Matrix::identity(f, d)).mul(&t)).collect();
    let action = Matrix::hcat(f, d, &parts);
    let m = Module::new(double.algebra(), action)?;
    if !m.validate().passed() {
        return Err(Error::Invalid("induced double action is not a module".into()));
    }
    Ok(m)
}

/// Every `(g, β)` among the candidates whose one-dimensional object is anti-YD.
pub fn one_dim_ayd(h: &Hopf, grouplikes: &[Matrix], characters: &[Matrix]) -> Result<Vec<(Matrix, Matrix)>> {
    let mut out = Vec::new();
    for g in grouplikes {
        for beta in characters {
            let x = YdObject::one_dim(h, g, beta, Flavor::AntiYd);
            if check_yd(h, &x).passed() {
                let pair = h.pair_in_involution(g, beta)?;
                if pair.status_of("A") != Some(&crate::Status::Pass) {
                    return Err(Error::Invalid("anti-YD pair fails the involution check".to_string()));
                }
                out.push((g.clone(), beta.clone()));
            }
        }
    }
    Ok(out)
}

/// All YD objects over `kC₂` of dimension at most two: sums of the four one-dimensional ones.
pub fn small_yd_objects(h: &Hopf, grouplikes: &[Matrix], characters: &[Matrix]) -> Vec<YdObject> {
    let mut ones = Vec::new();
    for g in grouplikes {
        for beta in characters {
            let x = YdObject::one_dim(h, g, beta, Flavor::Yd);
            if check_yd(h, &x).passed() {
                ones.push(x);
            }
        }
    }
    let mut all = ones.clone();
    for i in 0..ones.len() {
        for j in i..ones.len() {
            all.push(ones[i].direct_sum(&ones[j]));
        }
    }
    all
}
