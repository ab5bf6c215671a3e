mod common;

use bosonic::demazure::{omega, partial_word_apply, r_polynomial, tau};
use bosonic::verify::weights_in_box;
use bosonic::{LaurentPoly, Permutation};

#[test]
fn omega_matches_alternant() {
    for r in 1..=3 {
        for mu in weights_in_box(r, -1, 2) {
            let f = LaurentPoly::z_pow(&mu);
            assert_eq!(omega(&f).unwrap(), common::omega_oracle(&f), "{mu:?}");
        }
    }
}

#[test]
fn longest_word_operator_is_omega() {
    let w0 = Permutation::longest(3);
    let f = LaurentPoly::parse(3, "z1^2*z3^-1 - t*z2 + 3").unwrap();
    assert_eq!(
        partial_word_apply(&w0, &f).unwrap(),
        common::omega_oracle(&f)
    );
}

#[test]
fn bruhat_order_matches_tableau_criterion() {
    for r in 1..=4 {
        let all = Permutation::all(r);
        for y in &all {
            for w in &all {
                assert_eq!(
                    y.bruhat_leq(w),
                    common::bruhat_by_tableaux(y, w),
                    "{y} <= {w}"
                );
            }
        }
    }
}

#[test]
fn tau_sum_is_r_for_dominant_weights() {
    for lambda in [[1, 0, 0], [2, 1, 0], [1, 1, 0]] {
        let id = Permutation::identity(3);
        let mut sum = LaurentPoly::zero(3);
        for w in Permutation::all(3) {
            sum += tau(&lambda, &w, &id).unwrap();
        }
        assert_eq!(sum, r_polynomial(&lambda).unwrap());
        assert_eq!(sum, common::r_oracle(&lambda));
    }
}
