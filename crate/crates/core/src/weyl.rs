//! The symmetric group `S_r` as the Weyl group of `GL_r`.
//!
//! Permutations are stored in one-line notation with values in `1..=r`.
//! The simple reflection `s_i` swaps `i` and `i + 1`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Largest rank for which all reduced words are enumerated.
pub const MAX_REDUCED_WORD_RANK: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    w: Vec<usize>,
}

impl Permutation {
    pub fn identity(rank: usize) -> Self {
        Permutation {
            w: (1..=rank).collect(),
        }
    }

    pub fn from_one_line(w: Vec<usize>) -> Result<Self> {
        let r = w.len();
        let mut seen = vec![false; r + 1];
        for &x in &w {
            if x == 0 || x > r || seen[x] {
                return Err(Error::InvalidPermutation(w));
            }
            seen[x] = true;
        }
        Ok(Permutation { w })
    }

    /// The simple reflection `s_i`, `1 <= i < rank`.
    pub fn simple(rank: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= rank {
            return Err(Error::ReflectionIndex { index: i, rank });
        }
        let mut w = Self::identity(rank);
        w.w.swap(i - 1, i);
        Ok(w)
    }

    /// The product `s_{i_1} s_{i_2} ... s_{i_k}`.
    pub fn from_word(rank: usize, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(rank);
        for &i in word {
            w = w.compose(&Self::simple(rank, i)?);
        }
        Ok(w)
    }

    /// The longest element `w_0`, which reverses `1..=rank`.
    pub fn longest(rank: usize) -> Self {
        Permutation {
            w: (1..=rank).rev().collect(),
        }
    }

    /// All elements of `S_rank` in lexicographic order of their one-line
    /// notation.
    pub fn all(rank: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(rank);
        let mut used = vec![false; rank + 1];
        fn rec(rank: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == rank {
                out.push(Permutation { w: cur.clone() });
                return;
            }
            for x in 1..=rank {
                if !used[x] {
                    used[x] = true;
                    cur.push(x);
                    rec(rank, cur, used, out);
                    cur.pop();
                    used[x] = false;
                }
            }
        }
        rec(rank, &mut cur, &mut used, &mut out);
        out
    }

    pub fn rank(&self) -> usize {
        self.w.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.w
    }

    /// `w(i)` for `i` in `1..=rank`.
    pub fn apply(&self, i: usize) -> usize {
        self.w[i - 1]
    }

    /// The composite `self ∘ other`, i.e. `i -> self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "permutation rank mismatch");
        Permutation {
            w: other.w.iter().map(|&i| self.w[i - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.rank()];
        for (i, &x) in self.w.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation { w: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.w.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let mut n = 0;
        for i in 0..self.w.len() {
            for j in i + 1..self.w.len() {
                if self.w[i] > self.w[j] {
                    n += 1;
                }
            }
        }
        n
    }

    /// Whether `l(s_i w) < l(w)`.
    pub fn is_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.apply(i) > inv.apply(i + 1)
    }

    /// Whether `l(w s_i) < l(w)`.
    pub fn is_right_descent(&self, i: usize) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    /// `s_i w`.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let w = self
            .w
            .iter()
            .map(|&x| {
                if x == i {
                    i + 1
                } else if x == i + 1 {
                    i
                } else {
                    x
                }
            })
            .collect();
        Permutation { w }
    }

    /// The lexicographically smallest reduced word `[i_1, ..., i_k]` with
    /// `w = s_{i_1} ... s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(i) = (1..w.rank()).find(|&i| w.is_left_descent(i)) {
            word.push(i);
            w = w.left_mul_simple(i);
        }
        word
    }

    /// Every reduced word, in lexicographic order.
    pub fn all_reduced_words(&self) -> Result<Vec<Vec<usize>>> {
        if self.rank() > MAX_REDUCED_WORD_RANK {
            return Err(Error::RankTooLarge {
                rank: self.rank(),
                max: MAX_REDUCED_WORD_RANK,
            });
        }
        fn rec(w: &Permutation, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if w.is_identity() {
                out.push(prefix.clone());
                return;
            }
            for i in 1..w.rank() {
                if w.is_left_descent(i) {
                    prefix.push(i);
                    rec(&w.left_mul_simple(i), prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(self, &mut Vec::new(), &mut out);
        Ok(out)
    }

    /// Bruhat order: `self <= other` iff `self` is the product of a subword
    /// of a reduced word for `other`.
    pub fn bruhat_leq(&self, other: &Self) -> bool {
        assert_eq!(self.rank(), other.rank(), "permutation rank mismatch");
        let r = self.rank();
        let mut reachable: BTreeSet<Permutation> = BTreeSet::new();
        reachable.insert(Self::identity(r));
        for i in other.reduced_word() {
            let s = Self::simple(r, i).expect("letters of a reduced word are valid");
            let extended: Vec<_> = reachable.iter().map(|x| x.compose(&s)).collect();
            reachable.extend(extended);
        }
        reachable.contains(self)
    }

    /// Acts on a vector indexed by `1..=rank`: entry `i` moves to `w(i)`.
    pub fn act<T: Clone>(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.rank(), "vector length differs from rank");
        let mut out = v.to_vec();
        for (i, x) in v.iter().enumerate() {
            out[self.w[i] - 1] = x.clone();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.w.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `<lambda, 2 rho>` with `2 rho = (r-1, r-3, ..., 1-r)`.
pub fn pairing_2rho(lambda: &[i32]) -> i64 {
    let r = lambda.len() as i64;
    lambda
        .iter()
        .enumerate()
        .map(|(i, &l)| l as i64 * (r - 1 - 2 * i as i64))
        .sum()
}

pub fn is_dominant(lambda: &[i32]) -> bool {
    lambda.windows(2).all(|p| p[0] >= p[1])
}

pub fn is_antidominant(lambda: &[i32]) -> bool {
    lambda.windows(2).all(|p| p[0] <= p[1])
}

pub fn num_positive_roots(rank: usize) -> usize {
    rank * rank.saturating_sub(1) / 2
}

/// The shortest `y` with `y(lambda)` antidominant: `y(i)` is the position of
/// `lambda_i` in a stable ascending sort.
pub fn minimal_sorter(lambda: &[i32]) -> Permutation {
    let mut idx: Vec<usize> = (0..lambda.len()).collect();
    idx.sort_by_key(|&i| (lambda[i], i));
    let mut y = vec![0; lambda.len()];
    for (pos, &i) in idx.iter().enumerate() {
        y[i] = pos + 1;
    }
    Permutation { w: y }
}

/// Sorts into weakly decreasing order.
pub fn dominant_rearrangement(lambda: &[i32]) -> Vec<i32> {
    let mut v = lambda.to_vec();
    v.sort_by(|a, b| b.cmp(a));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v.to_vec()).unwrap()
    }

    #[test]
    fn construction() {
        assert!(Permutation::from_one_line(vec![1, 1]).is_err());
        assert!(Permutation::from_one_line(vec![0, 1]).is_err());
        assert!(Permutation::simple(3, 3).is_err());
        assert_eq!(Permutation::simple(3, 1).unwrap(), perm(&[2, 1, 3]));
        assert_eq!(Permutation::all(3).len(), 6);
        assert_eq!(Permutation::all(0).len(), 1);
    }

    #[test]
    fn lengths_and_words() {
        let w0 = Permutation::longest(3);
        assert_eq!(w0.length(), 3);
        assert_eq!(w0.reduced_word(), vec![1, 2, 1]);
        assert_eq!(
            w0.all_reduced_words().unwrap(),
            vec![vec![1, 2, 1], vec![2, 1, 2]]
        );
        assert_eq!(
            Permutation::longest(4).all_reduced_words().unwrap().len(),
            16
        );
        assert!(Permutation::identity(5).all_reduced_words().is_err());
        let w = perm(&[3, 1, 2]);
        assert_eq!(Permutation::from_word(3, &w.reduced_word()).unwrap(), w);
    }

    #[test]
    fn sorter_example() {
        assert_eq!(minimal_sorter(&[1, 1, 0]), perm(&[2, 3, 1]));
        assert_eq!(perm(&[2, 3, 1]).act(&[1, 1, 0]), vec![0, 1, 1]);
    }

    #[test]
    fn rho_pairing() {
        assert_eq!(pairing_2rho(&[1, 0]), 1);
        assert_eq!(pairing_2rho(&[2, 1, 0]), 4);
        assert_eq!(pairing_2rho(&[0, 1, 2]), -4);
    }

    #[test]
    fn bruhat_small() {
        let e = Permutation::identity(3);
        let w0 = Permutation::longest(3);
        let s1 = perm(&[2, 1, 3]);
        let s2 = perm(&[1, 3, 2]);
        assert!(e.bruhat_leq(&s1));
        assert!(s1.bruhat_leq(&w0));
        assert!(!s1.bruhat_leq(&s2));
        assert!(!w0.bruhat_leq(&s1));
    }

    fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
        (1..=max)
            .prop_flat_map(|r| Just((1..=r).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Permutation::from_one_line(v).unwrap())
    }

    proptest! {
        #[test]
        fn reduced_word_has_length_many_letters(w in arb_perm(6)) {
            let word = w.reduced_word();
            prop_assert_eq!(word.len(), w.length());
            prop_assert_eq!(Permutation::from_word(w.rank(), &word).unwrap(), w);
        }

        #[test]
        fn inverse_and_composition(w in arb_perm(6)) {
            let id = Permutation::identity(w.rank());
            prop_assert_eq!(w.compose(&w.inverse()), id.clone());
            prop_assert_eq!(w.inverse().length(), w.length());
            let w0 = Permutation::longest(w.rank());
            prop_assert_eq!(w.compose(&w0).length() + w.length(), w0.length());
        }

        #[test]
        fn action_is_a_left_action(v in prop::collection::vec(-3i32..4, 4), seed in 0usize..24, seed2 in 0usize..24) {
            let all = Permutation::all(4);
            let (u, w) = (&all[seed], &all[seed2]);
            prop_assert_eq!(u.act(&w.act(&v)), u.compose(w).act(&v));
        }

        #[test]
        fn sorter_sorts_minimally(v in prop::collection::vec(-3i32..4, 1..6)) {
            let y = minimal_sorter(&v);
            prop_assert!(is_antidominant(&y.act(&v)));
            // Only inversions between unequal entries are needed.
            let needed = (0..v.len())
                .flat_map(|i| (i + 1..v.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| v[i] > v[j])
                .count();
            prop_assert_eq!(y.length(), needed);
        }
    }
}
