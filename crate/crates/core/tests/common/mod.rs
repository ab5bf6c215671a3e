//! Independent reference computations for integration tests.
//!
//! Nothing here calls the lattice code or the Demazure-type operators;
//! only ring arithmetic and variable permutation from the library are used.
#![allow(dead_code)]

use std::collections::BTreeMap;

use bosonic::{LaurentPoly, Permutation};

fn sign(w: &Permutation) -> i64 {
    if w.length().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `Π_{i<j} (z_i - z_j)`.
pub fn vandermonde(rank: usize) -> LaurentPoly {
    let mut out = LaurentPoly::one(rank);
    for i in 1..=rank {
        for j in i + 1..=rank {
            out = out * (LaurentPoly::z(rank, i) - LaurentPoly::z(rank, j));
        }
    }
    out
}

/// `Σ_w sign(w) w(f)`.
pub fn antisymmetrize(f: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero(f.rank());
    for w in Permutation::all(f.rank()) {
        out += f.permute_z(&w).scale(&sign(&w).into());
    }
    out
}

/// `R_λ = Σ_w w(z^λ Π_{i<j} (z_i - t z_j)/(z_i - z_j))`, computed as an
/// alternant divided by the Vandermonde determinant.
pub fn r_oracle(lambda: &[i32]) -> LaurentPoly {
    let r = lambda.len();
    let t = LaurentPoly::t(r);
    let mut num = LaurentPoly::z_pow(lambda);
    for i in 1..=r {
        for j in i + 1..=r {
            num = num * (LaurentPoly::z(r, i) - &t * &LaurentPoly::z(r, j));
        }
    }
    antisymmetrize(&num)
        .exact_div(&vandermonde(r))
        .expect("alternant is divisible")
}

/// `v_λ(t) = Π_i [m_i]_t!` over the multiplicities `m_i` of the parts
/// (zeros included).
pub fn v_oracle(lambda: &[i32]) -> LaurentPoly {
    let r = lambda.len();
    let mut mult: BTreeMap<i32, u32> = BTreeMap::new();
    for &x in lambda {
        *mult.entry(x).or_default() += 1;
    }
    let mut out = LaurentPoly::one(r);
    for &m in mult.values() {
        for k in 1..=m {
            let mut qint = LaurentPoly::zero(r);
            for e in 0..k {
                qint += LaurentPoly::t_pow(r, e as i32);
            }
            out = out * qint;
        }
    }
    out
}

pub fn p_oracle(lambda: &[i32]) -> LaurentPoly {
    r_oracle(lambda)
        .exact_div(&v_oracle(lambda))
        .expect("v_λ divides R_λ")
}

/// `∂_{w_0} f = Δ^{-1} Σ_w sign(w) w(z^δ f)` with `δ = (r-1, ..., 0)`.
pub fn omega_oracle(f: &LaurentPoly) -> LaurentPoly {
    let r = f.rank();
    let delta: Vec<i32> = (0..r).map(|i| (r - 1 - i) as i32).collect();
    antisymmetrize(&(f * &LaurentPoly::z_pow(&delta)))
        .exact_div(&vandermonde(r))
        .expect("alternant is divisible")
}

/// The Schur polynomial `s_λ(z_1..z_r)` as a sum over semistandard
/// tableaux with entries `1..=r`.
pub fn schur_by_tableaux(lambda: &[i32]) -> LaurentPoly {
    let r = lambda.len();
    let shape: Vec<usize> = lambda
        .iter()
        .map(|&x| x as usize)
        .filter(|&x| x > 0)
        .collect();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(row, &len)| (0..len).map(move |col| (row, col)))
        .collect();
    let mut filling: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut out = LaurentPoly::zero(r);
    fill(&cells, 0, &mut filling, r, &mut out);
    out
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    t: &mut Vec<Vec<usize>>,
    r: usize,
    out: &mut LaurentPoly,
) {
    if k == cells.len() {
        let mut content = vec![0i32; r];
        for row in t.iter() {
            for &e in row {
                content[e - 1] += 1;
            }
        }
        *out += LaurentPoly::z_pow(&content);
        return;
    }
    let (row, col) = cells[k];
    let lo_row = if col > 0 { t[row][col - 1] } else { 1 };
    let lo_col = if row > 0 { t[row - 1][col] + 1 } else { 1 };
    for e in lo_row.max(lo_col)..=r {
        t[row][col] = e;
        fill(cells, k + 1, t, r, out);
    }
    t[row][col] = 0;
}

/// The elementary symmetric polynomial `e_k(z_1..z_r)`.
pub fn elementary(rank: usize, k: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero(rank);
    for mask in 0u32..(1 << rank) {
        if mask.count_ones() as usize == k {
            let exps: Vec<i32> = (0..rank).map(|i| ((mask >> i) & 1) as i32).collect();
            out += LaurentPoly::z_pow(&exps);
        }
    }
    out
}

/// Bruhat order by the tableau criterion: `y <= w` iff for every `i` the
/// sorted prefix `y(1..=i)` is entrywise at most the sorted prefix of `w`.
pub fn bruhat_by_tableaux(y: &Permutation, w: &Permutation) -> bool {
    let (a, b) = (y.one_line(), w.one_line());
    (1..=a.len()).all(|i| {
        let mut p = a[..i].to_vec();
        let mut q = b[..i].to_vec();
        p.sort_unstable();
        q.sort_unstable();
        p.iter().zip(&q).all(|(x, z)| x <= z)
    })
}

/// All partitions with at most `rank` parts (padded with zeros) and
/// largest part at most `max`.
pub fn partitions(rank: usize, max: i32) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rank);
    fn go(rank: usize, max: i32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if cur.len() == rank {
            out.push(cur.clone());
            return;
        }
        let top = cur.last().copied().unwrap_or(max);
        for x in (0..=top).rev() {
            cur.push(x);
            go(rank, max, cur, out);
            cur.pop();
        }
    }
    go(rank, max, &mut cur, &mut out);
    out
}
