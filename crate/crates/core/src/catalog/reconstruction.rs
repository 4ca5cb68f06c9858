//! The two-element monoid `S = {e, s}` with `s² = s`: reconstruction of a
//! module category over `corep(S)` from the algebra `k[S]/k{s}` and from the
//! rigid-style candidate `δ_e`, whose module categories differ.

use alloc::format;
use alloc::vec::Vec;

use super::monoid_s;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::Bialgebra;
use crate::matrix::Matrix;
use crate::rep::{find_isomorphism, hom_space, Comodule, Rep, Side};
use crate::report::Report;
use crate::trimodule::{
    left_cotensor, not_free_by_dimension, one_dim, structure_map_gamma, trimodule_cotensor, validate_trimodule_algebra,
    TrimoduleAlgebra,
};

/// The one-dimensional trimodule algebra `k[S]/k{s}` in degree `(e, e)`.
pub fn quotient_algebra(ks: &Bialgebra) -> Result<TrimoduleAlgebra> {
    let f = ks.field();
    let e = Matrix::unit_vector(f, 2, 0);
    let through_e = Matrix::from_i64(f, &[&[1, 0]]);
    let t = one_dim(ks, &e, &through_e)?;
    let (aa, _) = trimodule_cotensor(&t, &t)?;
    Ok(TrimoduleAlgebra { trimodule: t, mul: Matrix::identity(f, aa.dim()), unit: through_e })
}

fn isomorphic(x: &Comodule, y: &Comodule) -> Result<bool> {
    Ok(find_isomorphism(x, y, 1 << 12)?.is_some())
}

pub fn reconstruction_suite(field: Field) -> Result<Report> {
    if field.characteristic() == 2 {
        return Err(Error::Invalid("the suite needs characteristic different from 2".into()));
    }
    let ks = monoid_s(field)?.bialgebra;
    let c = &ks.coalgebra;
    let mut r = Report::new("two-element monoid");
    let de = Comodule::grouplike(c, Side::Left, &Matrix::unit_vector(field, 2, 0));
    let ds = Comodule::grouplike(c, Side::Left, &Matrix::unit_vector(field, 2, 1));
    r.expect(
        "simples",
        de.validate().passed() && ds.validate().passed() && hom_space(&de, &ds)?.is_empty(),
        "δ_e and δ_s are non-isomorphic simple comodules",
    );
    r.expect("idempotent-simple", isomorphic(&ds.tensor(&ds, &ks)?, &ds)?, "δ_s ⊗ δ_s ≅ δ_s");

    let a = quotient_algebra(&ks)?;
    r.absorb("algebra", validate_trimodule_algebra(&a)?);
    let bi = &a.trimodule.bicomodule;
    let (a_s, _) = left_cotensor(bi, &ds)?;
    r.expect("annihilates-s", a_s.dim() == 0, "A □ δ_s = 0");
    let (a_e, _) = left_cotensor(bi, &de)?;
    r.expect("fixes-e", isomorphic(&a_e, &bi.left)?, "A □ δ_e ≅ A");
    let (a_b, _) = left_cotensor(bi, &Comodule::regular(c, Side::Left))?;
    r.expect("rank-one", a_b.dim() == 1, format!("A □ k[S] has dimension {}", a_b.dim()));
    r.expect("not-free", not_free_by_dimension(&a.trimodule), "dim A is not a multiple of dim k[S]");
    match structure_map_gamma(&a.trimodule) {
        Err(Error::NoTwistedAntipode) => r.finding("Γ is unavailable: k[S] has no twisted antipode"),
        Err(e) => return Err(e),
        Ok(g) => r.finding(format!("Γ computed, iso: {}", g.is_iso)),
    }

    // δ_e is the monoidal unit; algebra structures are pairs (c, 1/c), all
    // isomorphic by rescaling, so one-dimensional hom spaces give uniqueness
    let ee = de.tensor(&de, &ks)?;
    let unique = hom_space(&ee, &de)?.len() == 1 && hom_space(&de, &de)?.len() == 1;
    r.expect("unique-algebra-structure", unique, "δ_e carries one algebra structure up to isomorphism");

    let simples = [&de, &ds];
    let mut free: Vec<Comodule> = Vec::new();
    for s in simples {
        free.push(de.tensor(s, &ks)?);
    }
    let delta_profile: Vec<usize> = free.iter().map(Rep::dim).collect();
    let distinct = !isomorphic(&free[0], &free[1])?;
    let mut a_profile = Vec::new();
    for s in simples {
        a_profile.push(left_cotensor(bi, s)?.0.dim());
    }
    r.finding(format!("free module profile over δ_e {delta_profile:?}, over A {a_profile:?}"));
    r.expect(
        "profiles-differ",
        delta_profile == [1, 1] && distinct && a_profile == [1, 0],
        "Mod(δ_e) has the rank of corep(S), Mod(A) has rank one",
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes() {
        for f in [Field::Rationals, Field::prime(3).unwrap(), Field::prime(5).unwrap()] {
            let r = reconstruction_suite(f).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn char_two_rejected() {
        assert!(reconstruction_suite(Field::prime(2).unwrap()).is_err());
    }

    #[test]
    fn quotient_is_one_dimensional() {
        let ks = monoid_s(Field::Rationals).unwrap().bialgebra;
        let a = quotient_algebra(&ks).unwrap();
        assert_eq!(a.dim(), 1);
        assert!(validate_trimodule_algebra(&a).unwrap().passed());
    }
}
