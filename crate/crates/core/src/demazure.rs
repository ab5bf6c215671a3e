//! Demazure and Demazure-Lusztig operators, Hall-Littlewood polynomials and
//! the functions `τ^λ_{w,y}`.
//!
//! The Hecke parameter `q` is the variable `t` of [`LaurentPoly`]. The simple
//! root `α_i` gives the monomial `z^{α_i} = z_i / z_{i+1}`. Every division
//! goes through [`LaurentPoly::exact_div`], so a wrong numerator surfaces as
//! [`Error::NotDivisible`] instead of a silently wrong answer.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::weyl::{is_dominant, Permutation};

fn check_index(i: usize, rank: usize) -> Result<()> {
    if i == 0 || i >= rank {
        return Err(Error::ReflectionIndex { index: i, rank });
    }
    Ok(())
}

/// `z^{α_i}`, or its inverse when `sign` is negative.
fn root_monomial(rank: usize, i: usize, sign: i32) -> LaurentPoly {
    let mut e = vec![0; rank];
    e[i - 1] = sign;
    e[i] = -sign;
    LaurentPoly::z_pow(&e)
}

/// The Demazure operator `∂_i f = (f - z^{-α_i} s_i f) / (1 - z^{-α_i})`.
pub fn partial_op(i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
    let r = f.rank();
    check_index(i, r)?;
    let neg = root_monomial(r, i, -1);
    let num = f - &(&neg * &f.swap_z(i));
    num.exact_div(&(LaurentPoly::one(r) - neg))
}

/// `∂°_i f = (f - s_i f) / (z^{α_i} - 1)`.
pub fn partial_circ_op(i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
    let r = f.rank();
    check_index(i, r)?;
    let num = f - &f.swap_z(i);
    num.exact_div(&(root_monomial(r, i, 1) - LaurentPoly::one(r)))
}

/// The Demazure-Lusztig operator `L_i`, computed as
/// `(z^{α} f - s_i f - q f + q z^{α} s_i f) / (z^{α} - 1) - f`.
pub fn dl_apply(i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
    let r = f.rank();
    check_index(i, r)?;
    let za = root_monomial(r, i, 1);
    let q = LaurentPoly::t(r);
    let sf = f.swap_z(i);
    let num = &za * f - &sf - &q * f + &(&q * &za) * &sf;
    let plus_one = num.exact_div(&(za - LaurentPoly::one(r)))?;
    Ok(plus_one - f)
}

/// The inverse operator `L_i^{-1}`, computed as
/// `((f - s_i f) - q^{-1} (f - z^{-α} s_i f)) / (z^{-α} - 1)`.
pub fn dl_inv_apply(i: usize, f: &LaurentPoly) -> Result<LaurentPoly> {
    let r = f.rank();
    check_index(i, r)?;
    let zna = root_monomial(r, i, -1);
    let q_inv = LaurentPoly::t_pow(r, -1);
    let sf = f.swap_z(i);
    let num = (f - &sf) - &q_inv * &(f - &(&zna * &sf));
    num.exact_div(&(zna - LaurentPoly::one(r)))
}

/// Applies `D_{i_1} ... D_{i_k}` to `f`, rightmost operator first.
fn apply_word(
    word: &[usize],
    f: &LaurentPoly,
    op: impl Fn(usize, &LaurentPoly) -> Result<LaurentPoly>,
) -> Result<LaurentPoly> {
    word.iter().rev().try_fold(f.clone(), |acc, &i| op(i, &acc))
}

fn check_rank(w: &Permutation, f: &LaurentPoly) -> Result<()> {
    if w.rank() != f.rank() {
        return Err(Error::RankMismatch {
            left: f.rank(),
            right: w.rank(),
        });
    }
    Ok(())
}

/// `L_w = L_{i_1} ... L_{i_k}` along the smallest reduced word of `w`.
pub fn dl_word_apply(w: &Permutation, f: &LaurentPoly) -> Result<LaurentPoly> {
    check_rank(w, f)?;
    apply_word(&w.reduced_word(), f, dl_apply)
}

/// `L_w` along an explicit word.
pub fn dl_word_apply_along(word: &[usize], f: &LaurentPoly) -> Result<LaurentPoly> {
    apply_word(word, f, dl_apply)
}

/// `L_w^{-1} = L_{i_k}^{-1} ... L_{i_1}^{-1}`.
pub fn dl_word_inv_apply(w: &Permutation, f: &LaurentPoly) -> Result<LaurentPoly> {
    check_rank(w, f)?;
    w.reduced_word()
        .iter()
        .try_fold(f.clone(), |acc, &i| dl_inv_apply(i, &acc))
}

/// `∂_w` along the smallest reduced word of `w`.
pub fn partial_word_apply(w: &Permutation, f: &LaurentPoly) -> Result<LaurentPoly> {
    check_rank(w, f)?;
    apply_word(&w.reduced_word(), f, partial_op)
}

/// `∂°_w` along the smallest reduced word of `w`.
pub fn partial_circ_word_apply(w: &Permutation, f: &LaurentPoly) -> Result<LaurentPoly> {
    check_rank(w, f)?;
    apply_word(&w.reduced_word(), f, partial_circ_op)
}

/// `Ω = ∂_{w_0}`.
pub fn omega(f: &LaurentPoly) -> Result<LaurentPoly> {
    partial_word_apply(&Permutation::longest(f.rank()), f)
}

/// `Π_{i<j} (1 - q z_j / z_i)`.
pub fn positive_root_product(rank: usize) -> LaurentPoly {
    let mut out = LaurentPoly::one(rank);
    for i in 0..rank {
        for j in i + 1..rank {
            let mut e = vec![0; rank];
            e[i] = -1;
            e[j] = 1;
            out = out * (LaurentPoly::one(rank) - LaurentPoly::t(rank) * LaurentPoly::z_pow(&e));
        }
    }
    out
}

/// `Ω(Π_{α>0}(1 - q z^{-α}) f)`. For dominant `λ` and `f = z^λ` this is
/// the Hall-Littlewood polynomial `R_λ`.
pub fn omega_of_product(f: &LaurentPoly) -> Result<LaurentPoly> {
    omega(&(positive_root_product(f.rank()) * f))
}

/// The Hall-Littlewood polynomial `R_λ(z; t)`.
pub fn r_polynomial(lambda: &[i32]) -> Result<LaurentPoly> {
    if !is_dominant(lambda) {
        return Err(Error::NonDominant(lambda.to_vec()));
    }
    omega_of_product(&LaurentPoly::z_pow(lambda))
}

/// `v_m(t) = Π_{i=1}^{m} (1 - t^i)/(1 - t)`.
pub fn v_m(m: u32, rank: usize) -> LaurentPoly {
    let mut out = LaurentPoly::one(rank);
    for i in 1..=m {
        let qint = (0..i as i32).fold(LaurentPoly::zero(rank), |acc, k| {
            acc + LaurentPoly::t_pow(rank, k)
        });
        out = out * qint;
    }
    out
}

/// `v_λ(t) = Π_j v_{m_j}(t)` where `m_j` counts the parts equal to `j`.
pub fn v_lambda(lambda: &[i32]) -> LaurentPoly {
    let r = lambda.len();
    let mut sorted = lambda.to_vec();
    sorted.sort_unstable();
    sorted
        .chunk_by(|a, b| a == b)
        .fold(LaurentPoly::one(r), |acc, run| {
            acc * v_m(run.len() as u32, r)
        })
}

/// The Hall-Littlewood polynomial `P_λ = R_λ / v_λ`.
pub fn p_polynomial(lambda: &[i32]) -> Result<LaurentPoly> {
    r_polynomial(lambda)?.exact_div(&v_lambda(lambda))
}

/// `τ^λ_{w,y} = q^{l(y)} L_w L_y^{-1} z^λ` for any `λ` in `Z^r`.
pub fn tau(lambda: &[i32], w: &Permutation, y: &Permutation) -> Result<LaurentPoly> {
    let r = lambda.len();
    if w.rank() != r || y.rank() != r {
        return Err(Error::RankMismatch {
            left: r,
            right: w.rank().max(y.rank()),
        });
    }
    let f = dl_word_inv_apply(y, &LaurentPoly::z_pow(lambda))?;
    Ok(dl_word_apply(w, &f)?.mul_t_pow(y.length() as i32))
}

/// `Θ f = Σ_{w ∈ S_r} L_w f`.
pub fn theta_sum(f: &LaurentPoly) -> Result<LaurentPoly> {
    let r = f.rank();
    Permutation::all(r)
        .par_iter()
        .map(|w| dl_word_apply(w, f))
        .try_reduce(|| LaurentPoly::zero(r), |a, b| Ok(a + b))
}

/// The operators exposed by the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Operator {
    Partial,
    PartialCirc,
    Dl,
    DlInv,
    DlWord,
    Omega,
    Theta,
}

impl FromStr for Operator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "partial" => Operator::Partial,
            "partial-circ" => Operator::PartialCirc,
            "dl" => Operator::Dl,
            "dl-inv" => Operator::DlInv,
            "dl-word" => Operator::DlWord,
            "omega" => Operator::Omega,
            "theta" => Operator::Theta,
            _ => {
                return Err(Error::Parse(format!(
                    "unknown operator {s:?}; expected partial, partial-circ, dl, dl-inv, dl-word, omega or theta"
                )))
            }
        })
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Operator::Partial => "partial",
            Operator::PartialCirc => "partial-circ",
            Operator::Dl => "dl",
            Operator::DlInv => "dl-inv",
            Operator::DlWord => "dl-word",
            Operator::Omega => "omega",
            Operator::Theta => "theta",
        };
        f.write_str(s)
    }
}

/// An operator application together with its inputs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OperatorReport {
    pub name: String,
    pub inputs: serde_json::Value,
    pub output: LaurentPoly,
}

/// Applies `op` to `f`. `index` is needed by the simple operators and `w`
/// by `dl-word`.
pub fn apply_operator(
    op: Operator,
    f: &LaurentPoly,
    index: Option<usize>,
    w: Option<&Permutation>,
) -> Result<OperatorReport> {
    let need_index =
        || index.ok_or_else(|| Error::InvalidSpec(format!("{op} needs a simple reflection index")));
    let output = match op {
        Operator::Partial => partial_op(need_index()?, f)?,
        Operator::PartialCirc => partial_circ_op(need_index()?, f)?,
        Operator::Dl => dl_apply(need_index()?, f)?,
        Operator::DlInv => dl_inv_apply(need_index()?, f)?,
        Operator::DlWord => {
            let w = w.ok_or_else(|| Error::InvalidSpec("dl-word needs a permutation".into()))?;
            dl_word_apply(w, f)?
        }
        Operator::Omega => omega(f)?,
        Operator::Theta => theta_sum(f)?,
    };
    let inputs = serde_json::json!({
        "index": index,
        "w": w.map(|w| w.one_line().to_vec()),
        "f": f,
    });
    Ok(OperatorReport {
        name: op.to_string(),
        inputs,
        output,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::Monomial;
    use proptest::prelude::*;

    fn p(rank: usize, s: &str) -> LaurentPoly {
        LaurentPoly::parse(rank, s).unwrap()
    }

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v.to_vec()).unwrap()
    }

    #[test]
    fn simple_operators_on_small_inputs() {
        assert_eq!(partial_op(1, &p(2, "1")).unwrap(), p(2, "1"));
        assert_eq!(partial_op(1, &p(2, "z1")).unwrap(), p(2, "z1 + z2"));
        assert!(partial_circ_op(1, &p(2, "1")).unwrap().is_zero());
        assert_eq!(partial_circ_op(1, &p(2, "z1")).unwrap(), p(2, "z2"));
        assert_eq!(dl_apply(1, &p(2, "1")).unwrap(), p(2, "t"));
        assert_eq!(dl_apply(1, &p(2, "z1")).unwrap(), p(2, "z2"));
        assert_eq!(dl_inv_apply(1, &p(2, "1")).unwrap(), p(2, "t^-1"));
        assert!(dl_apply(2, &p(2, "1")).is_err());
    }

    #[test]
    fn words_and_omega() {
        assert_eq!(
            dl_word_apply(&Permutation::identity(3), &p(3, "z1*z3")).unwrap(),
            p(3, "z1*z3")
        );
        assert_eq!(
            dl_word_apply(&Permutation::longest(2), &p(2, "z1")).unwrap(),
            p(2, "z2")
        );
        assert_eq!(omega(&p(2, "z1")).unwrap(), p(2, "z1 + z2"));
        assert_eq!(omega(&p(3, "1")).unwrap(), p(3, "1"));
        assert_eq!(omega(&p(3, "z1")).unwrap(), p(3, "z1 + z2 + z3"));
    }

    #[test]
    fn hall_littlewood_examples() {
        assert_eq!(r_polynomial(&[1, 0]).unwrap(), p(2, "z1 + z2"));
        assert_eq!(r_polynomial(&[0, 0]).unwrap(), p(2, "1 + t"));
        assert_eq!(
            r_polynomial(&[2, 0]).unwrap(),
            p(2, "z1^2 + z1*z2 + z2^2 - t*z1*z2")
        );
        assert_eq!(p_polynomial(&[1, 1]).unwrap(), p(2, "z1*z2"));
        assert_eq!(p_polynomial(&[0, 0, 0]).unwrap(), p(3, "1"));
        assert_eq!(p_polynomial(&[1, 0]).unwrap(), p(2, "z1 + z2"));
        assert!(matches!(r_polynomial(&[0, 1]), Err(Error::NonDominant(_))));
    }

    #[test]
    fn v_values() {
        assert_eq!(v_m(2, 1), p(1, "1 + t"));
        assert_eq!(v_lambda(&[3, 2, 1]), p(3, "1"));
        assert_eq!(v_lambda(&[1, 1]), p(2, "1 + t"));
        assert_eq!(
            v_lambda(&[2, 2, 0, 0, 0]),
            p(5, "(1 + t)*(1 + t)*(1 + t + t^2)")
        );
    }

    #[test]
    fn tau_examples() {
        let e = Permutation::identity(2);
        let s1 = perm(&[2, 1]);
        assert_eq!(tau(&[1, 0], &s1, &e).unwrap(), p(2, "z2"));
        assert_eq!(
            tau(&[1, 0], &e, &e).unwrap() + tau(&[1, 0], &s1, &e).unwrap(),
            p(2, "z1 + z2")
        );
        let y = perm(&[3, 1, 2]);
        assert_eq!(tau(&[2, -1, 0], &y, &y).unwrap(), p(3, "t^2*z1^2*z2^-1"));
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta_sum(&p(2, "1")).unwrap(), p(2, "1 + t"));
        assert_eq!(
            theta_sum(&p(3, "z1^2*z2")).unwrap(),
            r_polynomial(&[2, 1, 0]).unwrap()
        );
    }

    #[test]
    fn operator_dispatch() {
        let f = p(2, "z1");
        let rep = apply_operator(Operator::Dl, &f, Some(1), None).unwrap();
        assert_eq!(rep.output, p(2, "z2"));
        assert_eq!(rep.name, "dl");
        assert!(apply_operator(Operator::Partial, &f, None, None).is_err());
        assert_eq!(
            "partial-circ".parse::<Operator>().unwrap(),
            Operator::PartialCirc
        );
    }

    fn arb_poly(rank: usize) -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(
            (prop::collection::vec(-2i32..3, rank), -1i32..2, -3i64..4),
            0..5,
        )
        .prop_map(move |ts| {
            LaurentPoly::from_terms(
                rank,
                ts.into_iter().map(|(z, t, c)| (Monomial::new(z, t), c)),
            )
            .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn demazure_identities(f in arb_poly(3), i in 1usize..3) {
            let d = partial_op(i, &f).unwrap();
            prop_assert_eq!(partial_op(i, &d).unwrap(), d.clone());
            prop_assert_eq!(&d - &partial_circ_op(i, &f).unwrap(), f.clone());
            prop_assert_eq!(d.swap_z(i), d);
        }

        #[test]
        fn hecke_relations(f in arb_poly(3), i in 1usize..3) {
            let r = f.rank();
            let q = LaurentPoly::t(r);
            let lf = dl_apply(i, &f).unwrap();
            let llf = dl_apply(i, &lf).unwrap();
            prop_assert_eq!(llf, &(&q - &LaurentPoly::one(r)) * &lf + &q * &f);
            prop_assert_eq!(dl_inv_apply(i, &lf).unwrap(), f.clone());
            prop_assert_eq!(dl_apply(i, &dl_inv_apply(i, &f).unwrap()).unwrap(), f.clone());
            // L + 1 = q (L^{-1} + 1) = ∂_i (1 - q z^{-α_i}).
            let lhs = &lf + &f;
            prop_assert_eq!(&lhs, &(&q * &(dl_inv_apply(i, &f).unwrap() + &f)));
            let g = (LaurentPoly::one(r) - &q * &root_monomial(r, i, -1)) * &f;
            prop_assert_eq!(lhs, partial_op(i, &g).unwrap());
        }

        #[test]
        fn theta_is_symmetric(f in arb_poly(3)) {
            let th = theta_sum(&f).unwrap();
            for w in Permutation::all(3) {
                prop_assert_eq!(th.permute_z(&w), th.clone());
            }
            prop_assert_eq!(th, omega_of_product(&f).unwrap());
        }
    }
}
