//! Iwahori-spherical functions `σ_w(ϖ^λ)` of `GL_r` over a p-adic field,
//! evaluated by closed formulas: once through `τ` and once through a
//! colored partition function.
//!
//! In this module the polynomial variable `t` stands for the residue field
//! cardinality `q`. Half-integral powers of `q` are carried separately by
//! [`HalfPowerValue`].
//!
//! ```
//! use bosonic::spherical::{macdonald_spherical, sigma_via_lattice, sigma_via_tau};
//! use bosonic::Permutation;
//!
//! let w = Permutation::from_one_line(vec![2, 1, 3]).unwrap();
//! let lambda = [1, 0, -1];
//! assert_eq!(sigma_via_tau(&lambda, &w).unwrap(), sigma_via_lattice(&lambda, &w).unwrap());
//!
//! let m = macdonald_spherical(&[1, 0]).unwrap();
//! assert_eq!(m.half_q_exponent, 1);
//! assert_eq!(m.poly.to_string(), "z1 + z2");
//! ```

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::demazure::{dl_apply, r_polynomial, tau};
use crate::error::{Error, Result};
use crate::lattice::{partition_function, SystemSpec};
use crate::laurent::LaurentPoly;
use crate::verify::{flag_of, partitions, weights_in_box, VerificationReport};
use crate::weights::Family;
use crate::weyl::{
    dominant_rearrangement, is_dominant, minimal_sorter, num_positive_roots, pairing_2rho,
    Permutation,
};

/// The value `q^{h/2} · poly`.
///
/// Equality compares values, so `(h, f)` equals `(h - 2, q f)`.
#[derive(Clone, Debug, Serialize)]
pub struct HalfPowerValue {
    pub half_q_exponent: i64,
    pub poly: LaurentPoly,
}

impl HalfPowerValue {
    pub fn new(half_q_exponent: i64, poly: LaurentPoly) -> Self {
        HalfPowerValue {
            half_q_exponent,
            poly,
        }
    }

    /// Rewrites the value with prefactor `q^{h/2}`, if `h` has the right
    /// parity (or the value is zero).
    pub fn with_half_exponent(&self, h: i64) -> Option<Self> {
        let diff = self.half_q_exponent - h;
        if self.poly.is_zero() {
            return Some(HalfPowerValue::new(h, self.poly.clone()));
        }
        if diff % 2 != 0 {
            return None;
        }
        Some(HalfPowerValue::new(
            h,
            self.poly.mul_t_pow((diff / 2) as i32),
        ))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serialisation cannot fail")
    }
}

impl PartialEq for HalfPowerValue {
    fn eq(&self, other: &Self) -> bool {
        let h = self.half_q_exponent.min(other.half_q_exponent);
        match (self.with_half_exponent(h), other.with_half_exponent(h)) {
            (Some(a), Some(b)) => a.poly == b.poly,
            _ => false,
        }
    }
}

impl Eq for HalfPowerValue {}

impl fmt::Display for HalfPowerValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = self.half_q_exponent;
        match h {
            0 => write!(f, "{}", self.poly),
            _ if h % 2 == 0 => write!(f, "q^{} * ({})", h / 2, self.poly),
            _ => write!(f, "q^({h}/2) * ({})", self.poly),
        }
    }
}

/// The prefactor exponent `-⟨λ⁺, 2ρ⟩`, with `λ⁺` the dominant
/// rearrangement of `λ`.
fn sigma_half_exponent(lambda: &[i32]) -> i64 {
    -pairing_2rho(&dominant_rearrangement(lambda))
}

/// `σ_w(ϖ^λ) = q^{-⟨λ⁺, ρ⟩} τ^{y(λ)}_{w,y}(z; q)`, where `y` is the
/// shortest permutation making `y(λ)` antidominant.
pub fn sigma_via_tau(lambda: &[i32], w: &Permutation) -> Result<HalfPowerValue> {
    check_rank(lambda, w)?;
    let y = minimal_sorter(lambda);
    let mu = y.act(lambda);
    Ok(HalfPowerValue::new(
        sigma_half_exponent(lambda),
        tau(&mu, w, &y)?,
    ))
}

/// `σ_w(ϖ^λ) = q^{-⟨λ⁺, ρ⟩} q^N Z(S_{-y(λ), y w_0 c_0, w w_0 c_0})` with
/// `z ↦ z^{-1}` and `t ↦ q^{-1}` substituted in the partition function
/// (colored R-model).
pub fn sigma_via_lattice(lambda: &[i32], w: &Permutation) -> Result<HalfPowerValue> {
    check_rank(lambda, w)?;
    let r = lambda.len();
    let y = minimal_sorter(lambda);
    let w0 = Permutation::longest(r);
    let mu: Vec<i32> = y.act(lambda).iter().map(|x| -x).collect();
    let spec = SystemSpec::colored(
        Family::R,
        &mu,
        flag_of(&y.compose(&w0)),
        flag_of(&w.compose(&w0)),
    )?;
    let z = partition_function(&spec)
        .invert_z()
        .invert_t()
        .mul_t_pow(num_positive_roots(r) as i32);
    Ok(HalfPowerValue::new(sigma_half_exponent(lambda), z))
}

/// The spherical function `σ_∘(ϖ^λ) = q^N q^{-⟨λ, ρ⟩} R_λ(z; q^{-1})` for
/// dominant `λ`.
pub fn macdonald_spherical(lambda: &[i32]) -> Result<HalfPowerValue> {
    if !is_dominant(lambda) {
        return Err(Error::NonDominant(lambda.to_vec()));
    }
    let n = num_positive_roots(lambda.len()) as i64;
    Ok(HalfPowerValue::new(
        -pairing_2rho(lambda) + 2 * n,
        r_polynomial(lambda)?.invert_t(),
    ))
}

/// `Σ_w σ_w(ϖ^λ)`, which is `σ_∘(ϖ^λ)`.
pub fn sigma_sum(lambda: &[i32]) -> Result<HalfPowerValue> {
    let r = lambda.len();
    let mut total = LaurentPoly::zero(r);
    let mut h = 0;
    for w in Permutation::all(r) {
        let s = sigma_via_tau(lambda, &w)?;
        h = s.half_q_exponent;
        total += s.poly;
    }
    Ok(HalfPowerValue::new(h, total))
}

fn check_rank(lambda: &[i32], w: &Permutation) -> Result<()> {
    if lambda.len() != w.rank() {
        return Err(Error::RankMismatch {
            left: lambda.len(),
            right: w.rank(),
        });
    }
    Ok(())
}

fn record_values(
    rep: &mut VerificationReport,
    cfg: serde_json::Value,
    a: &HalfPowerValue,
    b: &HalfPowerValue,
) {
    let h = a.half_q_exponent.min(b.half_q_exponent);
    match (a.with_half_exponent(h), b.with_half_exponent(h)) {
        (Some(x), Some(y)) => rep.record(cfg, x.poly, y.poly),
        _ => rep.record_mismatch(
            json!({"config": cfg, "half_q_exponents": [a.half_q_exponent, b.half_q_exponent]}),
            a.poly.clone(),
            b.poly.clone(),
        ),
    }
}

/// `σ_∘(ϖ^λ) = σ_∘(ϖ^{w_0 λ})` for dominant `λ`.
pub fn check_k_biinvariance(lambda: &[i32]) -> Result<VerificationReport> {
    if !is_dominant(lambda) {
        return Err(Error::NonDominant(lambda.to_vec()));
    }
    let mut rep = VerificationReport::new("k-biinvariance", json!({"lambda": lambda}));
    let rev: Vec<i32> = lambda.iter().rev().copied().collect();
    record_values(
        &mut rep,
        json!({"lambda": lambda}),
        &sigma_sum(lambda)?,
        &sigma_sum(&rev)?,
    );
    Ok(rep)
}

/// `sigma_via_tau = sigma_via_lattice` for every `w` and every `λ` with
/// `|λ_i| <= bound`.
pub fn check_sigma_methods(rank: usize, bound: i32) -> Result<VerificationReport> {
    let lambdas = weights_in_box(rank, -bound, bound);
    let parts = lambdas
        .par_iter()
        .map(|lambda| -> Result<VerificationReport> {
            let mut rep = VerificationReport::new("sigma", json!(null));
            for w in Permutation::all(rank) {
                record_values(
                    &mut rep,
                    json!({"lambda": lambda, "w": w.one_line()}),
                    &sigma_via_tau(lambda, &w)?,
                    &sigma_via_lattice(lambda, &w)?,
                );
            }
            Ok(rep)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = VerificationReport::new("sigma", json!({"rank": rank, "bound": bound}));
    parts.into_iter().for_each(|p| out.absorb(p));
    Ok(out)
}

/// `σ_{s_i w} = L_i σ_w` whenever `s_i w > w`, for every `λ` with
/// `|λ_i| <= bound`.
pub fn check_sigma_recursion(rank: usize, bound: i32) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("sigma-recursion", json!({"rank": rank, "bound": bound}));
    for lambda in weights_in_box(rank, -bound, bound) {
        for w in Permutation::all(rank) {
            let s = sigma_via_tau(&lambda, &w)?;
            for i in 1..rank {
                if w.is_left_descent(i) {
                    continue;
                }
                let siw = Permutation::simple(rank, i)?.compose(&w);
                let next = sigma_via_tau(&lambda, &siw)?;
                let moved = HalfPowerValue::new(s.half_q_exponent, dl_apply(i, &s.poly)?);
                record_values(
                    &mut rep,
                    json!({"lambda": lambda, "w": w.one_line(), "i": i}),
                    &next,
                    &moved,
                );
            }
        }
    }
    Ok(rep)
}

/// The Macdonald formula `Σ_w σ_w(ϖ^λ) = σ_∘(ϖ^λ)`, the symmetry of the
/// sum, and K-bi-invariance, for every partition with `λ_1 <= part_max`.
pub fn check_macdonald(rank: usize, part_max: i32) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("macdonald", json!({"rank": rank, "part_max": part_max}));
    for lambda in partitions(rank, part_max) {
        let sum = sigma_sum(&lambda)?;
        record_values(
            &mut rep,
            json!({"lambda": lambda}),
            &sum,
            &macdonald_spherical(&lambda)?,
        );
        for w in Permutation::all(rank) {
            rep.record(
                json!({"lambda": lambda, "w": w.one_line(), "identity": "symmetric"}),
                sum.poly.permute_z(&w),
                sum.poly.clone(),
            );
        }
        rep.absorb(check_k_biinvariance(&lambda)?);
    }
    Ok(rep)
}
