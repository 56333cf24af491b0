//! Kleisli composition against independent matrix and relation routines.

mod common;

use common::{check_matrix_oracle, check_relation_oracle};
use relmon::Semiring;

#[test]
fn kleisli_vecspace_over_bool_is_matrix_product() {
    // sum over n, m, k <= 3 of 2^(nm) * 2^(mk)
    let expected: usize = (0..=3)
        .map(|m| {
            let s: usize = (0..=3).map(|n| 1usize << (n * m)).sum();
            s * s
        })
        .sum();
    assert_eq!(check_matrix_oracle(Semiring::boolean(), 3), expected);
}

#[test]
fn kleisli_vecspace_over_z2_and_z3_is_matrix_product() {
    check_matrix_oracle(Semiring::zmod(2), 2);
    check_matrix_oracle(Semiring::zmod(3), 2);
}

#[test]
fn kleisli_powerset_is_relation_composition() {
    assert_eq!(
        check_relation_oracle(2),
        (0..=2)
            .map(|m| {
                let s: usize = (0..=2).map(|n| 1usize << (n * m)).sum();
                s * s
            })
            .sum::<usize>()
    );
    check_relation_oracle(3);
}
