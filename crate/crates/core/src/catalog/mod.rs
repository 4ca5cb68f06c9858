//! Worked examples: group and monoid algebras, Taft algebras, small
//! commutative algebras, and the larger reconstruction instances.

pub mod boolean;
pub mod crossed;
pub mod groups;
pub mod mackey;
pub mod reconstruction;
pub mod smash;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Coalgebra, Entry};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::Bialgebra;
use crate::matrix::Matrix;
use crate::report::Report;

pub use groups::GroupSpec;

/// A catalog bialgebra with the group-likes and characters it ships with.
#[derive(Clone, Debug)]
pub struct Example {
    pub name: String,
    pub bialgebra: Bialgebra,
    pub grouplikes: Vec<Matrix>,
    pub characters: Vec<Matrix>,
}

impl Example {
    fn new(
        name: impl Into<String>,
        bialgebra: Bialgebra,
        grouplikes: Vec<Matrix>,
        characters: Vec<Matrix>,
    ) -> Result<Self> {
        let name = name.into();
        let report = bialgebra.validate();
        if !report.passed() {
            let id = report.failures().next().map(|c| c.id.clone()).unwrap_or_default();
            return Err(Error::Invalid(format!("catalog entry {name} fails {id}")));
        }
        // supplied candidates are re-verified, never trusted
        let grouplikes = bialgebra.verify_grouplikes(&grouplikes);
        let characters = bialgebra.verify_characters(&characters);
        Ok(Example { name, bialgebra, grouplikes, characters })
    }
}

/// Names accepted by [`build_example`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExampleName {
    Ground,
    Cyclic(usize),
    KleinFour,
    MonoidS,
    Sweedler,
    Taft { n: u64, q: i64 },
}

impl ExampleName {
    /// `k`, `c<n>`, `c2xc2`, `monoid_s`, `sweedler`, `taft:<n>:<q>`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("unknown catalog entry `{s}`"));
        Ok(match s {
            "k" | "field" => ExampleName::Ground,
            "c2xc2" | "klein" => ExampleName::KleinFour,
            "monoid_s" | "ks" => ExampleName::MonoidS,
            "sweedler" | "h4" => ExampleName::Sweedler,
            _ if s.starts_with("taft:") => {
                let mut it = s[5..].split(':');
                let n = it.next().and_then(|x| x.parse().ok()).ok_or_else(bad)?;
                let q = it.next().and_then(|x| x.parse().ok()).ok_or_else(bad)?;
                ExampleName::Taft { n, q }
            }
            _ if s.starts_with('c') => ExampleName::Cyclic(s[1..].parse().map_err(|_| bad())?),
            _ => return Err(bad()),
        })
    }
}

impl core::fmt::Display for ExampleName {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ExampleName::Ground => write!(f, "k"),
            ExampleName::Cyclic(n) => write!(f, "c{n}"),
            ExampleName::KleinFour => write!(f, "c2xc2"),
            ExampleName::MonoidS => write!(f, "monoid_s"),
            ExampleName::Sweedler => write!(f, "sweedler"),
            ExampleName::Taft { n, q } => write!(f, "taft:{n}:{q}"),
        }
    }
}

pub fn build_example(name: ExampleName, field: Field) -> Result<Example> {
    match name {
        ExampleName::Ground => group_example(&GroupSpec::cyclic(1), field, "k"),
        ExampleName::Cyclic(n) => group_example(&GroupSpec::cyclic(n), field, &format!("kC{n}")),
        ExampleName::KleinFour => {
            let g = GroupSpec::product(&GroupSpec::cyclic(2), &GroupSpec::cyclic(2));
            group_example(&g, field, "kC2xC2")
        }
        ExampleName::MonoidS => monoid_s(field),
        ExampleName::Sweedler => taft(2, field.from_i64(-1), "sweedler"),
        ExampleName::Taft { n, q } => taft(n as usize, field.from_i64(q), &format!("taft({n},{q})")),
    }
}

/// The acceptance catalog, in a fixed order.
pub fn standard_catalog() -> Result<Vec<Example>> {
    let q = Field::Rationals;
    Ok(vec![
        build_example(ExampleName::Ground, q)?,
        build_example(ExampleName::Cyclic(2), q)?,
        build_example(ExampleName::Cyclic(3), q)?,
        build_example(ExampleName::KleinFour, q)?,
        build_example(ExampleName::MonoidS, q)?,
        build_example(ExampleName::Sweedler, q)?,
        build_example(ExampleName::Taft { n: 3, q: 2 }, Field::Prime(7))?,
    ])
}

fn one_hot_entries(f: Field, pairs: &[(usize, usize, usize)]) -> Vec<Entry> {
    pairs.iter().map(|&(i, j, k)| (i, j, k, f.one())).collect()
}

pub fn group_algebra(g: &GroupSpec, field: Field) -> Algebra {
    let n = g.order();
    let labels = element_labels(g);
    let mul: Vec<(usize, usize, usize)> =
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| (a, b, g.mul(a, b))).collect();
    Algebra::from_table(field, Some(labels), n, &one_hot_entries(field, &mul), &[(g.identity, field.one())])
        .expect("group table in range")
}

fn element_labels(g: &GroupSpec) -> Vec<String> {
    if g.name.starts_with('C')
        && g.identity == 0
        && g.elements().all(|a| g.mul(1 % g.order(), a) == (a + 1) % g.order())
    {
        g.elements()
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g{i}"),
            })
            .collect()
    } else {
        g.elements().map(|i| format!("g{i}")).collect()
    }
}

pub fn group_bialgebra(g: &GroupSpec, field: Field) -> Bialgebra {
    let n = g.order();
    let a = group_algebra(g, field);
    let comul: Vec<(usize, usize, usize)> = (0..n).map(|x| (x, x, x)).collect();
    let counit: Vec<(usize, Scalar)> = (0..n).map(|x| (x, field.one())).collect();
    let c = Coalgebra::from_table(field, Some(a.labels.clone()), n, &one_hot_entries(field, &comul), &counit)
        .expect("in range");
    Bialgebra::new(a, c).expect("same field and dimension")
}

/// Group homomorphisms `G → k^×` with values among the roots of unity found in the field.
pub fn group_characters(g: &GroupSpec, field: Field) -> Vec<Matrix> {
    let n = g.order();
    let roots: Vec<Scalar> = match field {
        Field::Rationals => vec![field.one(), field.from_i64(-1)],
        Field::Prime(p) => (1..p as i64).map(|v| field.from_i64(v)).filter(|x| x.pow(n as u64).is_one()).collect(),
    };
    let mut out = Vec::new();
    let total = roots.len().pow(n as u32);
    for idx in 0..total {
        let mut rest = idx;
        let vals: Vec<Scalar> = (0..n)
            .map(|_| {
                let v = roots[rest % roots.len()].clone();
                rest /= roots.len();
                v
            })
            .collect();
        let hom = g.elements().all(|a| g.elements().all(|b| vals[g.mul(a, b)] == &vals[a] * &vals[b]));
        if hom {
            out.push(Matrix::row_vector(field, &vals));
        }
    }
    out
}

fn group_example(g: &GroupSpec, field: Field, name: &str) -> Result<Example> {
    let b = group_bialgebra(g, field);
    let gl = (0..g.order()).map(|i| b.algebra.basis(i)).collect();
    let chars = group_characters(g, field);
    Example::new(name, b, gl, chars)
}

/// `k[S]` for the two-element monoid `{e, s}` with `s² = s`, both group-like.
pub fn monoid_s(field: Field) -> Result<Example> {
    let labels = vec!["e".to_string(), "s".to_string()];
    let a = Algebra::from_table(
        field,
        Some(labels.clone()),
        2,
        &one_hot_entries(field, &[(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)]),
        &[(0, field.one())],
    )?;
    let c = Coalgebra::from_table(
        field,
        Some(labels),
        2,
        &one_hot_entries(field, &[(0, 0, 0), (1, 1, 1)]),
        &[(0, field.one()), (1, field.one())],
    )?;
    let b = Bialgebra::new(a, c)?;
    let gl = vec![b.algebra.basis(0), b.algebra.basis(1)];
    let chars = vec![
        Matrix::row_vector(field, &[field.one(), field.one()]),
        Matrix::row_vector(field, &[field.one(), field.zero()]),
    ];
    Example::new("monoid_s", b, gl, chars)
}

/// Taft algebra `T_{n²}(q)`: `gⁿ = 1`, `xⁿ = 0`, `xg = q gx`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`.
/// Basis `gⁱxʲ` sits at index `j·n + i`.
pub fn taft(n: usize, q: Scalar, name: &str) -> Result<Example> {
    let field = q.field();
    if q.multiplicative_order() != Some(n as u64) {
        return Err(Error::NoRootOfUnity { order: n as u64 });
    }
    let dim = n * n;
    let idx = |i: usize, j: usize| j * n + i;
    let labels: Vec<String> = (0..dim)
        .map(|t| {
            let (i, j) = (t % n, t / n);
            let g = match i {
                0 => String::new(),
                1 => "g".to_string(),
                _ => format!("g{i}"),
            };
            let x = match j {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x{j}"),
            };
            if g.is_empty() && x.is_empty() {
                "1".to_string()
            } else {
                format!("{g}{x}")
            }
        })
        .collect();
    let mut mul = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if b + d < n {
                        let coeff = q.pow((b * c) as u64);
                        mul.push((idx(a, b), idx(c, d), idx((a + c) % n, b + d), coeff));
                    }
                }
            }
        }
    }
    let algebra = Algebra::from_table(field, Some(labels.clone()), dim, &mul, &[(0, field.one())])?;
    // Δ(gⁱxʲ) = Δ(g)ⁱ Δ(x)ʲ computed inside B⊗B
    let e = |t: usize| Matrix::unit_vector(field, dim, t);
    let dg = e(idx(1 % n, 0)).kron(&e(idx(1 % n, 0)));
    let dx = e(idx(0, 1)).kron(&e(0)).add(&e(idx(1 % n, 0)).kron(&e(idx(0, 1))));
    let one2 = e(0).kron(&e(0));
    let bb = Bialgebra::new(
        algebra.clone(),
        Coalgebra::from_matrices(labels.clone(), Matrix::zeros(field, dim * dim, dim), Matrix::zeros(field, 1, dim))?,
    )?;
    let m2 = bb.mul2();
    let times = |u: &Matrix, v: &Matrix| m2.mul(&u.kron(v));
    let mut cols = Vec::with_capacity(dim);
    for t in 0..dim {
        let (i, j) = (t % n, t / n);
        let mut acc = one2.clone();
        for _ in 0..i {
            acc = times(&acc, &dg);
        }
        for _ in 0..j {
            acc = times(&acc, &dx);
        }
        cols.push(acc);
    }
    let comul = Matrix::hcat(field, dim * dim, &cols);
    let counit = Matrix::row_vector(
        field,
        &(0..dim).map(|t| if t < n { field.one() } else { field.zero() }).collect::<Vec<_>>(),
    );
    let b = Bialgebra::new(algebra, Coalgebra::from_matrices(labels, comul, counit)?)?;
    let grouplikes: Vec<Matrix> = (0..n).map(|i| e(idx(i, 0))).collect();
    // characters send x to 0 and g to an n-th root of unity
    let characters = (0..n as u64)
        .map(|k| {
            let z = q.pow(k);
            let vals: Vec<Scalar> = (0..dim).map(|t| if t < n { z.pow(t as u64) } else { field.zero() }).collect();
            Matrix::row_vector(field, &vals)
        })
        .collect();
    Example::new(name, b, grouplikes, characters)
}

/// `k × k` with idempotent basis.
pub fn split_pair(field: Field) -> Algebra {
    Algebra::from_table(
        field,
        Some(vec!["e1".into(), "e2".into()]),
        2,
        &one_hot_entries(field, &[(0, 0, 0), (1, 1, 1)]),
        &[(0, field.one()), (1, field.one())],
    )
    .expect("in range")
}

/// `k[x]/(x²)` on the basis `1, x`.
pub fn dual_numbers(field: Field) -> Algebra {
    Algebra::from_table(
        field,
        Some(vec!["1".into(), "x".into()]),
        2,
        &one_hot_entries(field, &[(0, 0, 0), (0, 1, 1), (1, 0, 1)]),
        &[(0, field.one())],
    )
    .expect("in range")
}

/// Runs every applicable validator on a catalog entry.
pub fn validate_example(ex: &Example) -> Report {
    let mut r = ex.bialgebra.validate();
    r.subject = ex.name.clone();
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::Hopf;

    #[test]
    fn sweedler_antipode() {
        let ex = build_example(ExampleName::Sweedler, Field::Rationals).unwrap();
        let h = Hopf::new(ex.bialgebra.clone()).unwrap();
        assert!(h.validate().passed());
        let f = Field::Rationals;
        let s = &h.antipode;
        // S(g) = g, S(x) = -gx, S²(x) = -x
        assert_eq!(s.col(1), Matrix::unit_vector(f, 4, 1));
        assert_eq!(s.col(2), Matrix::unit_vector(f, 4, 3).neg());
        assert_eq!(h.s2().col(2), Matrix::unit_vector(f, 4, 2).neg());
        assert_eq!(h.pivotal_element(&ex.grouplikes), Some(Matrix::unit_vector(f, 4, 1)));
    }

    #[test]
    fn monoid_s_has_no_antipode() {
        let ex = monoid_s(Field::Rationals).unwrap();
        assert!(ex.bialgebra.solve_antipode().is_none());
        assert!(ex.bialgebra.solve_twisted_antipode().is_none());
        assert_eq!(ex.bialgebra.right_galois().rank(), 3);
        assert_eq!(Hopf::new(ex.bialgebra).unwrap_err(), Error::NoAntipode);
    }

    #[test]
    fn taft_over_f7() {
        let ex = build_example(ExampleName::Taft { n: 3, q: 2 }, Field::Prime(7)).unwrap();
        assert_eq!(ex.bialgebra.dim(), 9);
        assert_eq!(ex.grouplikes.len(), 3);
        assert_eq!(ex.characters.len(), 3);
        let h = Hopf::new(ex.bialgebra.clone()).unwrap();
        assert!(h.validate().passed());
        assert!(h.pivotal_element(&ex.grouplikes).is_some());
    }

    #[test]
    fn taft_needs_root_of_unity() {
        assert!(build_example(ExampleName::Taft { n: 3, q: 2 }, Field::Rationals).is_err());
        assert!(build_example(ExampleName::Taft { n: 4, q: 2 }, Field::Prime(7)).is_err());
    }

    #[test]
    fn names_round_trip() {
        for s in ["k", "c3", "c2xc2", "monoid_s", "sweedler", "taft:3:2"] {
            assert_eq!(ExampleName::parse(s).unwrap().to_string(), s);
        }
        assert!(ExampleName::parse("nope").is_err());
    }

    #[test]
    fn grouplikes_brute_force_over_f2() {
        let ex = monoid_s(Field::Prime(2)).unwrap();
        let g = ex.bialgebra.grouplikes_brute_force(1 << 20).unwrap();
        assert_eq!(g.len(), 2);
    }
}
