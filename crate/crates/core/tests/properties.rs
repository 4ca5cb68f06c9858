use hopfkit_core::catalog::{build_example, ExampleName};
use hopfkit_core::hopf::Hopf;
use hopfkit_core::matrix::tensor_permutation;
use hopfkit_core::subspace::{Quotient, Subspace};
use hopfkit_core::{Field, Matrix};
use proptest::prelude::*;

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rationals), Just(Field::prime(2).unwrap()), Just(Field::prime(7).unwrap())]
}

fn matrix(f: Field, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| {
        let rows: Vec<Vec<_>> = v.chunks(cols).map(|r| r.iter().map(|&c| f.from_i64(c)).collect()).collect();
        Matrix::from_rows(f, &rows)
    })
}

fn with_field<S: Strategy>(make: impl Fn(Field) -> S + Clone + 'static) -> impl Strategy<Value = (Field, S::Value)>
where
    S::Value: Clone + std::fmt::Debug,
{
    field().prop_flat_map(move |f| (Just(f), make(f)))
}

fn element(n: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-4i64..=4, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalars_round_trip_through_text(f in field(), num in -50i64..50, den in 1i64..20) {
        if let Some(s) = f.from_ratio(num, den) {
            prop_assert_eq!(f.parse(&s.to_string()).unwrap(), s);
        }
    }

    #[test]
    fn scalar_field_laws(f in field(), a in -20i64..20, b in -20i64..20, c in -20i64..20) {
        let (a, b, c) = (f.from_i64(a), f.from_i64(b), f.from_i64(c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn rank_plus_nullity((_f, m) in with_field(|f| matrix(f, 4, 5))) {
        prop_assert_eq!(m.rank() + m.kernel_basis().len(), 5);
        prop_assert!(m.mul(&m.kernel()).is_zero());
    }

    #[test]
    fn multiplication_associates((_f, (a, b, c)) in with_field(|f| (matrix(f, 3, 4), matrix(f, 4, 2), matrix(f, 2, 3)))) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn kronecker_mixed_product((_f, (a, b, c, d)) in with_field(|f| (matrix(f, 2, 3), matrix(f, 2, 2), matrix(f, 3, 2), matrix(f, 2, 1)))) {
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn tensor_permutations_compose(perm in Just(vec![0usize, 1, 2]).prop_shuffle()) {
        let f = Field::Rationals;
        let dims = [2, 3, 2];
        let p = tensor_permutation(f, &dims, &perm);
        let mut inverse = vec![0; 3];
        for (k, &src) in perm.iter().enumerate() {
            inverse[src] = k;
        }
        let permuted: Vec<usize> = perm.iter().map(|&k| dims[k]).collect();
        let back = tensor_permutation(f, &permuted, &inverse);
        prop_assert!(back.mul(&p).is_identity());
    }

    #[test]
    fn solve_returns_a_solution((_f, (a, x)) in with_field(|f| (matrix(f, 3, 4), matrix(f, 4, 1)))) {
        let b = a.mul(&x);
        let y = a.solve(&b).unwrap().expect("consistent by construction");
        prop_assert_eq!(a.mul(&y), b);
    }

    #[test]
    fn inverse_is_two_sided((_f, a) in with_field(|f| matrix(f, 3, 3))) {
        match a.inverse().unwrap() {
            Some(inv) => {
                prop_assert!(a.mul(&inv).is_identity() && inv.mul(&a).is_identity());
            }
            None => prop_assert!(a.rank() < 3),
        }
    }

    #[test]
    fn subspace_dimension_formula((_f, (u, w)) in with_field(|f| (matrix(f, 5, 2), matrix(f, 5, 3)))) {
        let (u, w) = (Subspace::span(&u), Subspace::span(&w));
        prop_assert_eq!(u.sum(&w).dim() + u.intersect(&w).dim(), u.dim() + w.dim());
        let q = Quotient::new(&u);
        prop_assert_eq!(q.dim() + u.dim(), 5);
        prop_assert!(q.proj.mul(u.basis()).is_zero());
    }

    #[test]
    fn sweedler_antipode_reverses_products(x in element(4), y in element(4)) {
        let f = Field::Rationals;
        let h = Hopf::new(build_example(ExampleName::Sweedler, f).unwrap().bialgebra).unwrap();
        let a = h.algebra();
        let col = |v: &[i64]| Matrix::column(f, &v.iter().map(|&c| f.from_i64(c)).collect::<Vec<_>>());
        let (x, y) = (col(&x), col(&y));
        let s = &h.antipode;
        prop_assert_eq!(s.mul(&a.product(&x, &y)), a.product(&s.mul(&y), &s.mul(&x)));
        let b = &h.bialgebra;
        prop_assert_eq!(b.counit().mul(&a.product(&x, &y)), b.counit().mul(&x).mul(&b.counit().mul(&y)));
    }

    #[test]
    fn taft_comultiplication_is_multiplicative(x in element(9), y in element(9)) {
        let f = Field::prime(7).unwrap();
        let b = build_example(ExampleName::Taft { n: 3, q: 2 }, f).unwrap().bialgebra;
        let col = |v: &[i64]| Matrix::column(f, &v.iter().map(|&c| f.from_i64(c)).collect::<Vec<_>>());
        let (x, y) = (col(&x), col(&y));
        let middle = tensor_permutation(f, &[9, 9, 9, 9], &[0, 2, 1, 3]);
        let lhs = b.comul().mul(&b.algebra.product(&x, &y));
        let rhs = Matrix::chain(&[&b.mul().kron(b.mul()), &middle, &b.comul().mul(&x).kron(&b.comul().mul(&y))]);
        prop_assert_eq!(lhs, rhs);
    }
}
