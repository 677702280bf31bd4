use cotilt_core::field::{Field, Rational, F1009, F2};
use cotilt_core::linalg::{random_consistency, Mat};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Mat<Rational>> {
    proptest::collection::vec(-3i64..=3, rows * cols)
        .prop_map(move |v| Mat::new(rows, cols, v.into_iter().map(Rational::from_i64).collect()))
}

fn any_matrix() -> impl Strategy<Value = Mat<Rational>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| matrix(r, c))
}

proptest! {
    #[test]
    fn rank_nullity(a in any_matrix()) {
        let k = a.kernel_basis();
        prop_assert_eq!(a.rank() + k.cols(), a.cols());
        if k.cols() > 0 {
            prop_assert!((&a * &k).is_zero());
        }
    }

    #[test]
    fn transpose_preserves_rank(a in any_matrix()) {
        prop_assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn complement_fills_the_space(a in any_matrix()) {
        let cs = a.column_space();
        let both = cs.hstack(&a.complement_basis());
        prop_assert_eq!(both.rank(), a.rows());
        prop_assert_eq!(both.cols(), a.rows());
    }
}

#[test]
fn thousand_random_matrices_over_q() {
    let r = random_consistency::<Rational>(1000, 6, 11);
    assert!(r.pass(), "{:?}", r.failures);
}

#[test]
fn thousand_random_matrices_over_f1009() {
    let r = random_consistency::<F1009>(1000, 8, 12);
    assert!(r.pass(), "{:?}", r.failures);
}

#[test]
fn random_matrices_over_f2() {
    let r = random_consistency::<F2>(500, 8, 13);
    assert!(r.pass(), "{:?}", r.failures);
}
