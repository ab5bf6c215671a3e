//! Exact Laurent polynomials in `z_1, ..., z_r` and `t`.
//!
//! The deformation parameter is written `t` throughout; `q` is accepted as an
//! alias when parsing. Coefficients are arbitrary precision integers.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::weyl::Permutation;

/// A monomial `z^a t^k`.
///
/// Monomials are ordered lexicographically on the `z` exponents and then on
/// the exponent of `t`. This is a total order compatible with multiplication,
/// which is what polynomial division relies on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub z: Vec<i32>,
    pub t: i32,
}

impl Monomial {
    pub fn one(rank: usize) -> Self {
        Monomial {
            z: vec![0; rank],
            t: 0,
        }
    }

    pub fn new(z: Vec<i32>, t: i32) -> Self {
        Monomial { z, t }
    }

    pub fn rank(&self) -> usize {
        self.z.len()
    }

    pub fn is_one(&self) -> bool {
        self.t == 0 && self.z.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            z: self.z.iter().zip(&other.z).map(|(a, b)| a + b).collect(),
            t: self.t + other.t,
        }
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial {
            z: self.z.iter().zip(&other.z).map(|(a, b)| a - b).collect(),
            t: self.t - other.t,
        }
    }

    fn exponents(&self) -> impl Iterator<Item = i32> + '_ {
        self.z.iter().copied().chain(std::iter::once(self.t))
    }
}

/// A Laurent polynomial with integer coefficients in `rank` spectral
/// variables and `t`.
///
/// The representation is canonical: no stored coefficient is zero, so
/// structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, 1)
    }

    pub fn constant(rank: usize, c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::one(rank), c)
    }

    /// A single term `c * m`.
    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let rank = m.rank();
        let mut p = Self::zero(rank);
        p.add_term(m, c.into());
        p
    }

    /// The variable `z_i`, with `i` counted from 1.
    pub fn z(rank: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= rank, "z_{i} out of range for rank {rank}");
        let mut z = vec![0; rank];
        z[i - 1] = 1;
        Self::term(Monomial::new(z, 0), 1)
    }

    /// The monomial `z^exps`.
    pub fn z_pow(exps: &[i32]) -> Self {
        Self::term(Monomial::new(exps.to_vec(), 0), 1)
    }

    pub fn t(rank: usize) -> Self {
        Self::t_pow(rank, 1)
    }

    pub fn t_pow(rank: usize, k: i32) -> Self {
        Self::term(Monomial::new(vec![0; rank], k), 1)
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, combining
    /// repeated monomials.
    pub fn from_terms<I, C>(rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(rank);
        for (m, c) in terms {
            if m.rank() != rank {
                return Err(Error::RankMismatch {
                    left: rank,
                    right: m.rank(),
                });
            }
            p.add_term(m, c.into());
        }
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The largest monomial and its coefficient.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// If the polynomial is a single term, returns it.
    pub fn as_term(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        debug_assert_eq!(m.rank(), self.rank);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn mul_t_pow(&self, k: i32) -> Self {
        self.mul_monomial(&Monomial::new(vec![0; self.rank], k))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.rank);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Exact division. Fails with [`Error::NotDivisible`] when `other` does
    /// not divide `self` in the Laurent polynomial ring.
    pub fn exact_div(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let (gm, gc) = other.leading_term().ok_or(Error::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Self::zero(self.rank));
        }
        // Every quotient exponent lies in [min f - min g, max f - max g],
        // coordinate by coordinate. Leaving that box means no exact quotient.
        let (f_lo, f_hi) = self.exponent_box();
        let (g_lo, g_hi) = other.exponent_box();
        let lo: Vec<i32> = f_lo.iter().zip(&g_lo).map(|(a, b)| a - b).collect();
        let hi: Vec<i32> = f_hi.iter().zip(&g_hi).map(|(a, b)| a - b).collect();

        let mut rem = self.clone();
        let mut quot = Self::zero(self.rank);
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.div(gm);
            let inside = qm
                .exponents()
                .zip(lo.iter().zip(&hi))
                .all(|(e, (l, h))| *l <= e && e <= *h);
            if !inside {
                return Err(Error::NotDivisible);
            }
            let (qc, r) = rc.div_rem(gc);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (m, c) in &other.terms {
                rem.add_term(m.mul(&qm), -(c * &qc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Coordinatewise minimum and maximum exponents over the support,
    /// with the `t` exponent last.
    fn exponent_box(&self) -> (Vec<i32>, Vec<i32>) {
        let n = self.rank + 1;
        let mut lo = vec![i32::MAX; n];
        let mut hi = vec![i32::MIN; n];
        for m in self.terms.keys() {
            for (k, e) in m.exponents().enumerate() {
                lo[k] = lo[k].min(e);
                hi[k] = hi[k].max(e);
            }
        }
        (lo, hi)
    }

    /// Evaluates at rational values of `z_1..z_r` and `t`.
    pub fn eval(&self, z: &[BigRational], t: &BigRational) -> Result<BigRational> {
        if z.len() != self.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: z.len(),
            });
        }
        let pow = |x: &BigRational, e: i32| -> Result<BigRational> {
            if e < 0 && x.is_zero() {
                return Err(Error::ZeroSubstitution);
            }
            Ok(num_traits::pow::Pow::pow(x, e))
        };
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = BigRational::from_integer(c.clone());
            for (x, &e) in z.iter().zip(&m.z) {
                v *= pow(x, e)?;
            }
            v *= pow(t, m.t)?;
            acc += v;
        }
        Ok(acc)
    }

    /// Substitutes `z_i -> z_{w(i)}`, so that `z^a` becomes `z^{w a}`.
    pub fn permute_z(&self, w: &Permutation) -> Self {
        assert_eq!(w.rank(), self.rank, "permutation rank mismatch");
        let map = |m: &Monomial| {
            let mut z = vec![0; self.rank];
            for (i, &e) in m.z.iter().enumerate() {
                z[w.apply(i + 1) - 1] = e;
            }
            Monomial::new(z, m.t)
        };
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (map(m), c.clone()))
                .collect(),
        }
    }

    /// Exchanges `z_i` and `z_{i+1}`.
    pub fn swap_z(&self, i: usize) -> Self {
        assert!(
            i >= 1 && i < self.rank,
            "s_{i} out of range for rank {}",
            self.rank
        );
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.z.swap(i - 1, i);
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// Substitutes `z_i -> z_i^{-1}` for every `i`.
    pub fn invert_z(&self) -> Self {
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    (
                        Monomial::new(m.z.iter().map(|e| -e).collect(), m.t),
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    /// Substitutes `t -> t^{-1}`.
    pub fn invert_t(&self) -> Self {
        LaurentPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.z.clone(), -m.t), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `t -> 0`. Fails if a negative power of `t` occurs.
    pub fn at_t_zero(&self) -> Result<Self> {
        let mut out = Self::zero(self.rank);
        for (m, c) in &self.terms {
            match m.t.cmp(&0) {
                Ordering::Less => return Err(Error::ZeroSubstitution),
                Ordering::Equal => out.add_term(m.clone(), c.clone()),
                Ordering::Greater => {}
            }
        }
        Ok(out)
    }

    /// Parses an expression such as `z1^2*z2 - 3*t*z1^-1 + (1-t)*z2`.
    ///
    /// Variables are `z1..zr` and `t` (or `q`). Exponents may be negative;
    /// parenthesised groups accept non-negative exponents.
    pub fn parse(rank: usize, s: &str) -> Result<Self> {
        let mut p = Parser {
            rank,
            src: s.as_bytes(),
            pos: 0,
        };
        let out = p.sum()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialisation cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $checked:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            /// Panics if the ranks differ.
            fn $f(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$f(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$f(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.check_rank(rhs).unwrap_or_else(|e| panic!("{e}"));
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        self.check_rank(&rhs).unwrap_or_else(|e| panic!("{e}"));
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.check_rank(rhs).unwrap_or_else(|e| panic!("{e}"));
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms are written from the largest monomial down.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            for (i, &e) in m.z.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("z{}", i + 1)),
                    _ => factors.push(format!("z{}^{}", i + 1, e)),
                }
            }
            match m.t {
                0 => {}
                1 => factors.push("t".to_string()),
                e => factors.push(format!("t^{e}")),
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    z: Vec<i32>,
    t: i32,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    rank: usize,
    terms: Vec<TermJson>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    z: m.z.clone(),
                    t: m.t,
                    c: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolyJson::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let c: BigInt = t.c.parse().map_err(D::Error::custom)?;
            terms.push((Monomial::new(t.z, t.t), c));
        }
        LaurentPoly::from_terms(raw.rank, terms).map_err(D::Error::custom)
    }
}

struct Parser<'a> {
    rank: usize,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero(self.rank);
        let mut sign = if self.eat(b'-') {
            -1
        } else {
            self.eat(b'+');
            1
        };
        loop {
            let t = self.product()?;
            if sign < 0 {
                acc -= &t;
            } else {
                acc += t;
            }
            if self.eat(b'+') {
                sign = 1;
            } else if self.eat(b'-') {
                sign = -1;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn exponent(&mut self) -> Result<i32> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let paren = self.eat(b'(');
        let neg = self.eat(b'-');
        let e: i32 = self
            .digits()?
            .parse()
            .map_err(|_| self.err("exponent too large"))?;
        if paren && !self.eat(b')') {
            return Err(self.err("expected ')'"));
        }
        Ok(if neg { -e } else { e })
    }

    fn factor(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                let e = self.exponent()?;
                if e < 0 {
                    return Err(self.err("negative power of a group"));
                }
                Ok(inner.pow(e as u32))
            }
            Some(b'z') => {
                self.pos += 1;
                let i: usize = self.digits()?.parse().map_err(|_| self.err("bad index"))?;
                if i == 0 || i > self.rank {
                    return Err(self.err(&format!("z{i} out of range for rank {}", self.rank)));
                }
                let e = self.exponent()?;
                let mut z = vec![0; self.rank];
                z[i - 1] = e;
                Ok(LaurentPoly::z_pow(&z))
            }
            Some(b't') | Some(b'q') => {
                self.pos += 1;
                let e = self.exponent()?;
                Ok(LaurentPoly::t_pow(self.rank, e))
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self
                    .digits()?
                    .parse()
                    .map_err(|_| self.err("bad integer"))?;
                Ok(LaurentPoly::constant(self.rank, n))
            }
            _ => Err(self.err("expected a term")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(2, s).unwrap()
    }

    #[test]
    fn parse_and_display() {
        let f = p("z1^2*z2 - 3*t*z1^-1 + (1-t)*z2");
        assert_eq!(f.to_string(), "z1^2*z2 - z2*t + z2 - 3*z1^-1*t");
        assert_eq!(LaurentPoly::parse(2, &f.to_string()).unwrap(), f);
        assert_eq!(p("q^2"), p("t*t"));
        assert!(LaurentPoly::parse(2, "z3").is_err());
        assert!(LaurentPoly::parse(2, "z1 +").is_err());
    }

    #[test]
    fn cancellation_is_canonical() {
        let f = p("z1 + z2") - p("z2 + z1");
        assert!(f.is_zero());
        assert_eq!(f.num_terms(), 0);
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        let a = LaurentPoly::one(2);
        let b = LaurentPoly::one(3);
        assert_eq!(
            a.checked_add(&b),
            Err(Error::RankMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn exact_division() {
        let num = p("z1^3 - z2^3");
        let den = p("z1 - z2");
        assert_eq!(num.exact_div(&den).unwrap(), p("z1^2 + z1*z2 + z2^2"));
        assert_eq!(
            p("z1 + 1").exact_div(&p("z1 - 1")),
            Err(Error::NotDivisible)
        );
        assert_eq!(p("z1").exact_div(&p("2")), Err(Error::NotDivisible));
        assert_eq!(
            p("z1").exact_div(&LaurentPoly::zero(2)),
            Err(Error::DivisionByZero)
        );
        // Laurent quotients.
        let q = p("z1^-1*z2 - z1*z2^-1")
            .exact_div(&p("z2*z1^-1 - 1"))
            .unwrap();
        assert_eq!(q, p("1 + z1*z2^-1"));
    }

    #[test]
    fn json_round_trip() {
        let f = p("z1 + z2 - 2*t");
        let s = f.to_json();
        assert_eq!(
            s,
            r#"{"rank":2,"terms":[{"z":[0,0],"t":1,"c":"-2"},{"z":[0,1],"t":0,"c":"1"},{"z":[1,0],"t":0,"c":"1"}]}"#
        );
        assert_eq!(LaurentPoly::from_json(&s).unwrap(), f);
    }

    #[test]
    fn evaluation() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let f = p("z1^-1 + t*z2");
        assert_eq!(f.eval(&[r(2, 1), r(3, 1)], &r(1, 3)).unwrap(), r(3, 2));
        assert_eq!(
            f.eval(&[r(0, 1), r(1, 1)], &r(1, 1)),
            Err(Error::ZeroSubstitution)
        );
    }

    #[test]
    fn permutation_action() {
        let w = Permutation::from_one_line(vec![2, 3, 1]).unwrap();
        let f = LaurentPoly::z_pow(&[5, 7, 9]);
        // z_i -> z_{w(i)}: exponent of z_{w(i)} becomes a_i.
        assert_eq!(f.permute_z(&w), LaurentPoly::z_pow(&[9, 5, 7]));
        assert_eq!(f.swap_z(2), LaurentPoly::z_pow(&[5, 9, 7]));
    }

    #[test]
    fn substitutions() {
        let f = p("z1*t^2 + z2^-1");
        assert_eq!(f.invert_z(), p("z1^-1*t^2 + z2"));
        assert_eq!(f.invert_t(), p("z1*t^-2 + z2^-1"));
        assert_eq!(f.at_t_zero().unwrap(), p("z2^-1"));
        assert!(p("t^-1").at_t_zero().is_err());
    }

    fn arb_poly(rank: usize) -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(
            (prop::collection::vec(-2i32..3, rank), -2i32..3, -4i64..5),
            0..6,
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
        #[test]
        fn ring_axioms(a in arb_poly(2), b in arb_poly(2), c in arb_poly(2)) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(2), b in arb_poly(2)) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        }

        #[test]
        fn division_detects_remainders(a in arb_poly(2), b in arb_poly(2)) {
            prop_assume!(!b.is_zero());
            if let Ok(q) = a.exact_div(&b) {
                prop_assert_eq!(&q * &b, a);
            }
        }

        #[test]
        fn display_round_trips(a in arb_poly(3)) {
            prop_assert_eq!(LaurentPoly::parse(3, &a.to_string()).unwrap(), a);
        }

        #[test]
        fn json_round_trips(a in arb_poly(3)) {
            prop_assert_eq!(LaurentPoly::from_json(&a.to_json()).unwrap(), a);
        }

        #[test]
        fn inversions_are_involutions(a in arb_poly(2)) {
            prop_assert_eq!(a.invert_z().invert_z(), a.clone());
            prop_assert_eq!(a.invert_t().invert_t(), a);
        }
    }
}
