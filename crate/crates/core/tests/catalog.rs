use hopfkit_core::catalog::boolean::{boolean_suite, LatticeSpec, PathAlgebra};
use hopfkit_core::catalog::mackey::Mackey;
use hopfkit_core::catalog::{build_example, standard_catalog, validate_example, ExampleName, GroupSpec};
use hopfkit_core::hopf::Hopf;
use hopfkit_core::yd::{drinfeld_double, one_dim_ayd};
use hopfkit_core::{Error, Field};

#[test]
fn catalog_validates_and_ships_correct_grouplikes() {
    for ex in standard_catalog().unwrap() {
        assert!(validate_example(&ex).passed(), "{}", ex.name);
        let b = &ex.bialgebra;
        assert_eq!(b.verify_grouplikes(&ex.grouplikes), ex.grouplikes, "{}", ex.name);
        assert_eq!(b.verify_characters(&ex.characters), ex.characters, "{}", ex.name);
    }
}

#[test]
fn brute_force_finds_sweedler_grouplikes_and_characters() {
    for p in [3, 5] {
        let f = Field::prime(p).unwrap();
        let ex = build_example(ExampleName::Sweedler, f).unwrap();
        let b = &ex.bialgebra;
        let found = b.grouplikes_brute_force(1 << 12).unwrap();
        assert_eq!(found.len(), ex.grouplikes.len());
        assert!(ex.grouplikes.iter().all(|g| found.contains(g)));
        assert_eq!(b.characters_brute_force(1 << 12).unwrap().len(), 2);
    }
}

#[test]
fn taft_is_pivotal_with_anti_yd_pairs() {
    let f = Field::prime(7).unwrap();
    let ex = build_example(ExampleName::Taft { n: 3, q: 2 }, f).unwrap();
    assert!(ex.bialgebra.grouplikes_brute_force(1 << 20).is_err());
    let h = Hopf::new(ex.bialgebra.clone()).unwrap();
    let pivot = h.pivotal_element(&ex.grouplikes).expect("Taft algebras are pivotal");
    assert!(h.implements_square(&pivot));
    assert!(!one_dim_ayd(&h, &ex.grouplikes, &ex.characters).unwrap().is_empty());
}

#[test]
fn brute_force_is_gated_over_the_rationals() {
    let b = build_example(ExampleName::Sweedler, Field::Rationals).unwrap().bialgebra;
    assert!(b.grouplikes_brute_force(u128::MAX).is_err());
}

#[test]
fn klein_four_double_is_sixteen_dimensional() {
    let h = Hopf::new(build_example(ExampleName::KleinFour, Field::Rationals).unwrap().bialgebra).unwrap();
    let d = drinfeld_double(&h).unwrap();
    assert_eq!(d.dim(), 16);
    assert!(d.validate().passed());
}

#[test]
fn boolean_path_algebras_grow_as_powers_of_three() {
    for k in 0..=3 {
        let l = LatticeSpec::boolean(k).unwrap();
        let p = PathAlgebra::new(&l, Field::Rationals).unwrap();
        assert_eq!(p.algebra.dim(), 3usize.pow(k));
    }
    let r = boolean_suite(&LatticeSpec::boolean(3).unwrap(), Field::prime(2).unwrap()).unwrap();
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
}

#[test]
fn mackey_gate() {
    let big = GroupSpec::cyclic(4);
    assert!(matches!(Mackey::new(&big, Field::Rationals), Err(Error::OutOfScope(_))));
    let m = Mackey::new(&GroupSpec::cyclic(2), Field::prime(2).unwrap()).unwrap();
    assert!(!m.algebra.is_semisimple());
}
