//! Exhaustive checks of the identities satisfied by the models and
//! operators, each producing a [`VerificationReport`].
//!
//! Every check enumerates a finite, documented set of cases and compares
//! two exactly computed Laurent polynomials per case. Failures keep enough
//! of the input configuration to be replayed.

use std::collections::HashMap;
use std::hash::Hash;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::demazure::{
    dl_apply, dl_inv_apply, dl_word_apply_along, omega, omega_of_product, p_polynomial,
    partial_circ_op, partial_circ_word_apply, partial_op, partial_word_apply, r_polynomial, tau,
    theta_sum, v_lambda,
};
use crate::error::{Error, Result};
use crate::lattice::{
    enumerate_states, partition_function, partition_function_transfer, SystemSpec,
};
use crate::laurent::LaurentPoly;
use crate::weights::{
    fused_successors, monochrome_weight, rmatrix_aux, rmatrix_colored, rmatrix_uncolored,
    uncolored_successors, uncolored_weight, Color, Family, HSpin, Spectral, USpin, VSpinC,
};
use crate::weyl::{is_antidominant, is_dominant, num_positive_roots, Permutation};

/// One mismatch between the two sides of an identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub configuration: serde_json::Value,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
}

/// The outcome of one check: how many cases were compared and which of
/// them failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub parameter_summary: serde_json::Value,
    pub cases_checked: u64,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn new(check_name: &str, parameter_summary: serde_json::Value) -> Self {
        VerificationReport {
            check_name: check_name.to_string(),
            parameter_summary,
            cases_checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Compares one case.
    pub fn record(&mut self, configuration: serde_json::Value, lhs: LaurentPoly, rhs: LaurentPoly) {
        self.cases_checked += 1;
        if lhs != rhs {
            self.failures.push(Failure {
                configuration,
                lhs,
                rhs,
            });
        }
    }

    /// Records a case already known to fail, for values that are not
    /// compared as plain polynomials.
    pub fn record_mismatch(
        &mut self,
        configuration: serde_json::Value,
        lhs: LaurentPoly,
        rhs: LaurentPoly,
    ) {
        self.cases_checked += 1;
        self.failures.push(Failure {
            configuration,
            lhs,
            rhs,
        });
    }

    /// Counts a case whose two sides are known to agree without computing
    /// them.
    pub fn record_trivial(&mut self) {
        self.cases_checked += 1;
    }

    pub fn absorb(&mut self, other: VerificationReport) {
        self.cases_checked += other.cases_checked;
        self.failures.extend(other.failures);
    }

    /// `PASS`/`FAIL`, the check name and the counts, on one line.
    pub fn summary_line(&self) -> String {
        format!(
            "{} {}: {} cases, {} failures",
            if self.passed() { "PASS" } else { "FAIL" },
            self.check_name,
            self.cases_checked,
            self.failures.len()
        )
    }

    fn merged(name: &str, params: serde_json::Value, parts: Vec<VerificationReport>) -> Self {
        let mut out = Self::new(name, params);
        for p in parts {
            out.absorb(p);
        }
        out
    }
}

/// Deliberate corruption of the vertex weights, used to confirm that a
/// check can fail.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    #[default]
    None,
    /// Negates the weight of every vertex in which a horizontal path turns
    /// down into a column.
    FlipCSign,
}

impl FromStr for Fault {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Fault::None),
            "flip-c-sign" => Ok(Fault::FlipCSign),
            _ => Err(Error::Parse(format!(
                "unknown fault {s:?}; expected none or flip-c-sign"
            ))),
        }
    }
}

impl Fault {
    fn apply(self, absorbs: bool, w: LaurentPoly) -> LaurentPoly {
        match self {
            Fault::FlipCSign if absorbs => -w,
            _ => w,
        }
    }
}

const ZI: Spectral = Spectral { rank: 2, index: 1 };
const ZJ: Spectral = Spectral { rank: 2, index: 2 };

type Succ<'a, H, V> = dyn Fn(H, &V, Spectral) -> Vec<(H, V, LaurentPoly)> + Sync + 'a;
type RMat<'a, H> = dyn Fn(H, H, H, H) -> LaurentPoly + Sync + 'a;

/// The two sides of the Yang-Baxter equation for a pair of rows crossed by
/// an R-matrix.
///
/// Left side: the R-matrix, with south-west edge `a` and north-west edge
/// `b`, feeds a column whose upper vertex (parameter `z_i`) has top `c`
/// and right `d` and whose lower vertex (`z_j`) has right `e` and bottom
/// `f`. Right side: `b` enters the upper vertex (`z_j`) and `a` the lower
/// vertex (`z_i`) of the column directly, and the R-matrix sits on the
/// right with north-east edge `d` and south-east edge `e`. R-matrices are
/// indexed `(sw, nw, ne, se)`.
struct YbeHarness<'a, H, V> {
    spins: Vec<H>,
    verticals: Vec<V>,
    r_left: &'a RMat<'a, H>,
    r_right: &'a RMat<'a, H>,
    succ: &'a Succ<'a, H, V>,
}

impl<H, V> YbeHarness<'_, H, V>
where
    H: Copy + Eq + Hash + Serialize + Send + Sync,
    V: Clone + Eq + Hash + Serialize + Send + Sync,
{
    fn lhs(&self, a: H, b: H, c: &V) -> HashMap<(H, H, V), LaurentPoly> {
        let mut out: HashMap<(H, H, V), LaurentPoly> = HashMap::new();
        for &x in &self.spins {
            for &y in &self.spins {
                let rw = (self.r_left)(a, b, x, y);
                if rw.is_zero() {
                    continue;
                }
                for (d, m, w1) in (self.succ)(x, c, ZI) {
                    let rw1 = &rw * &w1;
                    for (e, f, w2) in (self.succ)(y, &m, ZJ) {
                        *out.entry((d, e, f)).or_insert_with(|| LaurentPoly::zero(2)) += &rw1 * &w2;
                    }
                }
            }
        }
        out
    }

    fn rhs(&self, a: H, b: H, c: &V) -> HashMap<(H, H, V), LaurentPoly> {
        let mut out: HashMap<(H, H, V), LaurentPoly> = HashMap::new();
        for (xp, mp, w1) in (self.succ)(b, c, ZJ) {
            for (yp, f, w2) in (self.succ)(a, &mp, ZI) {
                let w12 = &w1 * &w2;
                for &d in &self.spins {
                    for &e in &self.spins {
                        let rw = (self.r_right)(yp, xp, d, e);
                        if !rw.is_zero() {
                            *out.entry((d, e, f.clone()))
                                .or_insert_with(|| LaurentPoly::zero(2)) += &w12 * &rw;
                        }
                    }
                }
            }
        }
        out
    }

    /// Compares both sides on every boundary `(a, b, c, d, e, f)` with
    /// `a, b, d, e` in `spins` and `c, f` in `verticals`.
    fn run(&self, name: &str, params: serde_json::Value) -> VerificationReport {
        let tops: Vec<(H, H, V)> = self
            .spins
            .iter()
            .flat_map(|&a| {
                self.spins
                    .iter()
                    .flat_map(move |&b| self.verticals.iter().map(move |c| (a, b, c.clone())))
            })
            .collect();
        let parts: Vec<VerificationReport> = tops
            .par_iter()
            .map(|(a, b, c)| {
                let mut rep = VerificationReport::new(name, json!(null));
                let l = self.lhs(*a, *b, c);
                let r = self.rhs(*a, *b, c);
                let zero = LaurentPoly::zero(2);
                for &d in &self.spins {
                    for &e in &self.spins {
                        for f in &self.verticals {
                            let key = (d, e, f.clone());
                            let (lv, rv) =
                                (l.get(&key).unwrap_or(&zero), r.get(&key).unwrap_or(&zero));
                            if lv.is_zero() && rv.is_zero() {
                                rep.record_trivial();
                            } else {
                                rep.record(
                                    json!({"a": a, "b": b, "c": c, "d": d, "e": e, "f": f}),
                                    lv.clone(),
                                    rv.clone(),
                                );
                            }
                        }
                    }
                }
                rep
            })
            .collect();
        VerificationReport::merged(name, params, parts)
    }
}

/// Yang-Baxter equation for the uncolored model, with vertical occupancies
/// `c, f` up to `n_max` on the boundary.
pub fn check_ybe_uncolored(family: Family, n_max: u32) -> VerificationReport {
    check_ybe_uncolored_with(family, n_max, Fault::None)
}

pub fn check_ybe_uncolored_with(family: Family, n_max: u32, fault: Fault) -> VerificationReport {
    let succ = move |a: USpin, b: &u32, z: Spectral| {
        uncolored_successors(family, a, *b, z)
            .into_iter()
            .map(|(c, d, w)| (c, d, fault.apply(d > *b, w)))
            .collect()
    };
    let r = |a, b, c, d| rmatrix_uncolored(a, b, c, d, ZI, ZJ);
    YbeHarness {
        spins: USpin::ALL.to_vec(),
        verticals: (0..=n_max).collect(),
        r_left: &r,
        r_right: &r,
        succ: &succ,
    }
    .run(
        "ybe-uncolored",
        json!({"family": family, "n_max": n_max, "fault": fault}),
    )
}

/// Yang-Baxter equation for the fused colored model with `colors` colors
/// and vertical edges carrying at most `m_max` paths.
pub fn check_ybe_colored(family: Family, colors: usize, m_max: u32) -> VerificationReport {
    check_ybe_colored_with(family, colors, m_max, Fault::None)
}

pub fn check_ybe_colored_with(
    family: Family,
    colors: usize,
    m_max: u32,
    fault: Fault,
) -> VerificationReport {
    let succ = move |a: HSpin, b: &VSpinC, z: Spectral| {
        fused_successors(family, a, b, z)
            .into_iter()
            .map(|(c, d, w)| {
                let absorbs = d.0.iter().zip(&b.0).any(|(x, y)| *x == y + 1);
                (c, d, fault.apply(absorbs, w))
            })
            .collect()
    };
    let r = |a, b, c, d| rmatrix_colored(a, b, c, d, ZI, ZJ);
    YbeHarness {
        spins: HSpin::all(colors),
        verticals: VSpinC::all_up_to(colors, m_max),
        r_left: &r,
        r_right: &r,
        succ: &succ,
    }
    .run(
        "ybe-colored",
        json!({"family": family, "colors": colors, "m_max": m_max, "fault": fault}),
    )
}

/// Auxiliary Yang-Baxter equation for a monochrome column of color `γ_k`:
/// the R-matrix labelled `γ_k` on the left, `γ_{k-1}` on the right, with
/// `γ_0 = γ_r`.
pub fn check_ybe_aux(
    family: Family,
    colors: usize,
    k: usize,
    m_max: u32,
) -> Result<VerificationReport> {
    check_ybe_aux_with(family, colors, k, m_max, Fault::None)
}

pub fn check_ybe_aux_with(
    family: Family,
    colors: usize,
    k: usize,
    m_max: u32,
    fault: Fault,
) -> Result<VerificationReport> {
    if k == 0 || k > colors {
        return Err(Error::InvalidSpec(format!(
            "color index {k} outside 1..={colors}"
        )));
    }
    let col = Color::new(k);
    let prev = Color::new(if k == 1 { colors } else { k - 1 });
    let spins = HSpin::all(colors);
    let succ_spins = spins.clone();
    let succ = move |a: HSpin, b: &u32, z: Spectral| {
        let mut out = Vec::new();
        for &c in &succ_spins {
            for d in [Some(*b), b.checked_sub(1), Some(b + 1)]
                .into_iter()
                .flatten()
            {
                let w = monochrome_weight(family, col, a, *b, c, d, z);
                if !w.is_zero() {
                    out.push((c, d, fault.apply(d > *b, w)));
                }
            }
        }
        out
    };
    let r_left = |a, b, c, d| rmatrix_aux(col, a, b, c, d, ZI, ZJ);
    let r_right = |a, b, c, d| rmatrix_aux(prev, a, b, c, d, ZI, ZJ);
    Ok(YbeHarness {
        spins,
        verticals: (0..=m_max).collect(),
        r_left: &r_left,
        r_right: &r_right,
        succ: &succ,
    }
    .run(
        "ybe-aux",
        json!({"family": family, "colors": colors, "k": k, "m_max": m_max, "fault": fault}),
    ))
}

/// The colored terms `(c, d, weight)` summed on the right-hand side of the
/// local lifting identity for the lift `(a, b)` of an uncolored vertex
/// with right edge `c_unc` and bottom occupancy `d_unc`.
pub fn local_lifting_terms(
    a: HSpin,
    b: &VSpinC,
    c_unc: USpin,
    d_unc: u32,
) -> Vec<(HSpin, VSpinC, LaurentPoly)> {
    fused_successors(Family::R, a, b, Spectral::new(1, 1))
        .into_iter()
        .filter(|(c, d, _)| c.uncolored() == c_unc && d.total() == d_unc)
        .collect()
}

/// Local lifting for the R-weights: forgetting colors commutes with
/// summing over the colored completions of a vertex.
pub fn check_local_lifting(colors: usize, n_max: u32) -> VerificationReport {
    let z = Spectral::new(1, 1);
    let mut rep =
        VerificationReport::new("local-lifting", json!({"colors": colors, "n_max": n_max}));
    for a in HSpin::all(colors) {
        for b in VSpinC::all_up_to(colors, n_max) {
            let succ = fused_successors(Family::R, a, &b, z);
            for c_unc in USpin::ALL {
                for d_unc in 0..=n_max {
                    let lhs =
                        uncolored_weight(Family::R, a.uncolored(), b.total(), c_unc, d_unc, z);
                    let rhs = succ
                        .iter()
                        .filter(|(c, d, _)| c.uncolored() == c_unc && d.total() == d_unc)
                        .fold(LaurentPoly::zero(1), |acc, (_, _, w)| acc + w);
                    rep.record(json!({"a": a, "b": b, "c": c_unc, "d": d_unc}), lhs, rhs);
                }
            }
        }
    }
    rep
}

fn merge_h(i: usize, s: HSpin) -> HSpin {
    match s {
        HSpin::Color(c) if c.index() == i + 1 => HSpin::color(i),
        _ => s,
    }
}

fn merge_v(i: usize, v: &VSpinC) -> VSpinC {
    let mut out = v.clone();
    out.0[i - 1] += out.0[i];
    out.0[i] = 0;
    out
}

/// The terms summed on the right-hand side of the color-merging identity:
/// colored completions `(c, d)` of `(a, b)` that become `(c_img, d_img)`
/// once `γ_{i+1}` is recolored `γ_i`.
pub fn merge_lifting_terms(
    i: usize,
    a: HSpin,
    b: &VSpinC,
    c_img: HSpin,
    d_img: &VSpinC,
) -> Vec<(HSpin, VSpinC, LaurentPoly)> {
    fused_successors(Family::R, a, b, Spectral::new(1, 1))
        .into_iter()
        .filter(|(c, d, _)| merge_h(i, *c) == c_img && merge_v(i, d) == *d_img)
        .collect()
}

/// Recoloring `γ_{i+1}` as `γ_i` commutes with summing over colored
/// completions of a vertex (R-weights).
pub fn check_color_merge(colors: usize, i: usize, n_max: u32) -> Result<VerificationReport> {
    if i == 0 || i >= colors {
        return Err(Error::InvalidSpec(format!(
            "merge index {i} needs 1 <= i < {colors}"
        )));
    }
    let z = Spectral::new(1, 1);
    let mut rep = VerificationReport::new(
        "color-merge",
        json!({"colors": colors, "i": i, "n_max": n_max}),
    );
    for a in HSpin::all(colors) {
        for b in VSpinC::all_up_to(colors, n_max) {
            let (a_img, b_img) = (merge_h(i, a), merge_v(i, &b));
            let image = fused_successors(Family::R, a_img, &b_img, z);
            let succ = fused_successors(Family::R, a, &b, z);
            let mut rhs: HashMap<(HSpin, VSpinC), LaurentPoly> = HashMap::new();
            for (c, d, w) in succ {
                *rhs.entry((merge_h(i, c), merge_v(i, &d)))
                    .or_insert_with(|| LaurentPoly::zero(1)) += w;
            }
            for c in HSpin::all(colors)
                .into_iter()
                .filter(|c| merge_h(i, *c) == *c)
            {
                for d in VSpinC::all_up_to(colors, n_max + 1)
                    .into_iter()
                    .filter(|d| d.0[i] == 0)
                {
                    let lhs = image
                        .iter()
                        .find(|(c2, d2, _)| *c2 == c && *d2 == d)
                        .map(|(_, _, w)| w.clone())
                        .unwrap_or_else(|| LaurentPoly::zero(1));
                    let r = rhs
                        .remove(&(c, d.clone()))
                        .unwrap_or_else(|| LaurentPoly::zero(1));
                    rep.record(json!({"a": a, "b": b, "c": c, "d": d}), lhs, r);
                }
            }
        }
    }
    Ok(rep)
}

/// The flag `w c_0`: position `w(j)` carries `γ_j`.
pub fn flag_of(w: &Permutation) -> Vec<Color> {
    let c0: Vec<Color> = (1..=w.rank()).map(Color::new).collect();
    w.act(&c0)
}

/// The permutation `w` with `flag = w c_0`, if the flag uses each color
/// once.
pub fn flag_permutation(flag: &[Color]) -> Result<Permutation> {
    let r = flag.len();
    let mut w = vec![0; r];
    for (pos, c) in flag.iter().enumerate() {
        let k = c.index();
        if k > r || w[k - 1] != 0 {
            return Err(Error::InvalidFlag(format!(
                "{:?} is not a rearrangement of the {r} colors",
                flag.iter().map(|c| c.index()).collect::<Vec<_>>()
            )));
        }
        w[k - 1] = pos + 1;
    }
    Permutation::from_one_line(w)
}

/// All distinct rearrangements of a flag, in lexicographic order of
/// color indices.
pub fn distinct_rearrangements(flag: &[Color]) -> Vec<Vec<Color>> {
    let mut idx: Vec<usize> = flag.iter().map(|c| c.index()).collect();
    idx.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(idx.iter().map(|&k| Color::new(k)).collect());
        // Next lexicographic permutation.
        let Some(i) = (1..idx.len()).rev().find(|&i| idx[i - 1] < idx[i]) else {
            return out;
        };
        let j = (i..idx.len())
            .rev()
            .find(|&j| idx[j] > idx[i - 1])
            .expect("pivot exists");
        idx.swap(i - 1, j);
        idx[i..].reverse();
    }
}

/// Global lifting: the uncolored partition function equals the sum of the
/// colored ones over every right flag compatible with the top flag `top`.
/// This holds for the R-weights; for the P-weights it fails in general.
pub fn check_global_lifting(
    family: Family,
    lambda: &[i32],
    top: &[Color],
) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(
        "global-lifting",
        json!({"family": family, "lambda": lambda, "top_flag": colors_json(top)}),
    );
    let lhs = partition_function(&SystemSpec::uncolored(family, lambda)?);
    let r = lambda.len();
    let mut rhs = LaurentPoly::zero(r);
    for d in distinct_rearrangements(top) {
        rhs += partition_function(&SystemSpec::colored(family, lambda, top.to_vec(), d)?);
    }
    rep.record(
        json!({"lambda": lambda, "top_flag": colors_json(top)}),
        lhs,
        rhs,
    );
    Ok(rep)
}

/// Global lifting for every partition with `lambda_1 <= part_max` and
/// every arrangement of the top flag.
pub fn check_global_lifting_sweep(
    family: Family,
    rank: usize,
    part_max: i32,
) -> Result<VerificationReport> {
    let c0: Vec<Color> = (1..=rank).map(Color::new).collect();
    let cases: Vec<(Vec<i32>, Vec<Color>)> = partitions(rank, part_max)
        .into_iter()
        .flat_map(|l| {
            distinct_rearrangements(&c0)
                .into_iter()
                .map(move |c| (l.clone(), c))
        })
        .collect();
    let parts = cases
        .par_iter()
        .map(|(l, c)| check_global_lifting(family, l, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::merged(
        "global-lifting",
        json!({"family": family, "rank": rank, "part_max": part_max}),
        parts,
    ))
}

fn colors_json(flag: &[Color]) -> Vec<usize> {
    flag.iter().map(|c| c.index()).collect()
}

/// The colored system `S_{λ, y c_0, w c_0}`.
pub fn colored_system(
    family: Family,
    lambda: &[i32],
    y: &Permutation,
    w: &Permutation,
) -> Result<SystemSpec> {
    SystemSpec::colored(family, lambda, flag_of(y), flag_of(w))
}

/// `Z(S_{λ, y c_0, w c_0}) = τ^λ_{w,y}` for every pair `(w, y)`.
pub fn check_demeval(lambda: &[i32]) -> Result<VerificationReport> {
    let r = lambda.len();
    let pairs: Vec<(Permutation, Permutation)> = Permutation::all(r)
        .into_iter()
        .flat_map(|w| Permutation::all(r).into_iter().map(move |y| (w.clone(), y)))
        .collect();
    let parts = pairs
        .par_iter()
        .map(|(w, y)| -> Result<VerificationReport> {
            let mut rep = VerificationReport::new("demeval", json!(null));
            for family in [Family::R, Family::P] {
                let z = partition_function(&colored_system(family, lambda, y, w)?);
                rep.record(
                    json!({"lambda": lambda, "w": w.one_line(), "y": y.one_line(), "family": family}),
                    z,
                    tau(lambda, w, y)?,
                );
            }
            Ok(rep)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::merged(
        "demeval",
        json!({"lambda": lambda}),
        parts,
    ))
}

/// Uncolored partition functions against the Hall-Littlewood polynomials:
/// `Z_P = P_λ`, `Z_R = R_λ`, `Z_R = v_λ Z_P`, and agreement with the
/// column transfer matrices.
pub fn check_uncolored_pf(lambda: &[i32]) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new("uncolored-pf", json!({"lambda": lambda}));
    let zp_spec = SystemSpec::uncolored(Family::P, lambda)?;
    let zr_spec = SystemSpec::uncolored(Family::R, lambda)?;
    let zp = partition_function(&zp_spec);
    let zr = partition_function(&zr_spec);
    let cfg = |what: &str| json!({"lambda": lambda, "identity": what});
    rep.record(cfg("Z_P = P"), zp.clone(), p_polynomial(lambda)?);
    rep.record(cfg("Z_R = R"), zr.clone(), r_polynomial(lambda)?);
    rep.record(cfg("Z_R = v Z_P"), zr.clone(), &v_lambda(lambda) * &zp);
    rep.record(
        cfg("transfer P"),
        partition_function_transfer(&zp_spec)?,
        zp,
    );
    rep.record(
        cfg("transfer R"),
        partition_function_transfer(&zr_spec)?,
        zr,
    );
    Ok(rep)
}

/// `Z(S_{λ, c, s_i d}) = L_i^{±1} Z(S_{λ, c, d})` with `c = y c_0`,
/// `d = w c_0`; the sign is `+` when `s_i w > w`.
pub fn check_demtrain(
    lambda: &[i32],
    y: &Permutation,
    i: usize,
    w: &Permutation,
) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(
        "demtrain",
        json!({"lambda": lambda, "y": y.one_line(), "i": i, "w": w.one_line()}),
    );
    let r = lambda.len();
    let siw = Permutation::simple(r, i)?.compose(w);
    for family in [Family::R, Family::P] {
        let before = partition_function(&colored_system(family, lambda, y, w)?);
        let after = partition_function(&colored_system(family, lambda, y, &siw)?);
        let moved = if w.is_left_descent(i) {
            dl_inv_apply(i, &before)?
        } else {
            dl_apply(i, &before)?
        };
        rep.record(
            json!({"lambda": lambda, "y": y.one_line(), "i": i, "w": w.one_line(), "family": family}),
            after,
            moved,
        );
    }
    Ok(rep)
}

/// [`check_demtrain`] for every `y`, `w` and `i`.
pub fn check_demtrain_sweep(lambda: &[i32]) -> Result<VerificationReport> {
    let r = lambda.len();
    let mut cases = Vec::new();
    for y in Permutation::all(r) {
        for w in Permutation::all(r) {
            for i in 1..r {
                cases.push((y.clone(), i, w.clone()));
            }
        }
    }
    let parts = cases
        .par_iter()
        .map(|(y, i, w)| check_demtrain(lambda, y, *i, w))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::merged(
        "demtrain",
        json!({"lambda": lambda}),
        parts,
    ))
}

/// `S_{λ, c, c}` with `c = w c_0` has a single state, of weight
/// `t^{l(w)} z^λ`, in both families.
pub fn check_monostatic(lambda: &[i32], flag: &[Color]) -> Result<VerificationReport> {
    let w = flag_permutation(flag)?;
    let mut rep = VerificationReport::new(
        "monostatic",
        json!({"lambda": lambda, "flag": colors_json(flag)}),
    );
    let expected = LaurentPoly::z_pow(lambda).mul_t_pow(w.length() as i32);
    for family in [Family::R, Family::P] {
        let spec = SystemSpec::colored(family, lambda, flag.to_vec(), flag.to_vec())?;
        let n = enumerate_states(&spec).take(2).count() as i64;
        let cfg = json!({"lambda": lambda, "flag": colors_json(flag), "family": family});
        let r = lambda.len();
        rep.record(
            json!({"config": cfg, "identity": "number of states"}),
            LaurentPoly::constant(r, n),
            LaurentPoly::one(r),
        );
        rep.record(cfg, partition_function(&spec), expected.clone());
    }
    Ok(rep)
}

/// Invariance of `f` under every permutation of the spectral parameters.
pub fn check_symmetric(label: serde_json::Value, f: &LaurentPoly) -> VerificationReport {
    let mut rep = VerificationReport::new("symmetry", label.clone());
    for w in Permutation::all(f.rank()) {
        rep.record(
            json!({"of": label, "w": w.one_line()}),
            f.permute_z(&w),
            f.clone(),
        );
    }
    rep
}

/// Symmetry of the uncolored partition functions for every partition with
/// `lambda_1 <= part_max`, and of the colored sums over right flags.
pub fn check_symmetry_sweep(rank: usize, part_max: i32) -> Result<VerificationReport> {
    let mut out = VerificationReport::new("symmetry", json!({"rank": rank, "part_max": part_max}));
    let c0: Vec<Color> = (1..=rank).map(Color::new).collect();
    for lambda in partitions(rank, part_max) {
        for family in [Family::P, Family::R] {
            let z = partition_function(&SystemSpec::uncolored(family, &lambda)?);
            out.absorb(check_symmetric(
                json!({"lambda": lambda, "family": family, "model": "uncolored"}),
                &z,
            ));
            let mut total = LaurentPoly::zero(rank);
            for d in distinct_rearrangements(&c0) {
                total += partition_function(&SystemSpec::colored(family, &lambda, c0.clone(), d)?);
            }
            out.absorb(check_symmetric(
                json!({"lambda": lambda, "family": family, "model": "colored, summed over right flags"}),
                &total,
            ));
        }
    }
    Ok(out)
}

/// Dominant weights with parts in `0..=part_max`.
pub fn partitions(rank: usize, part_max: i32) -> Vec<Vec<i32>> {
    weights_in_box(rank, 0, part_max)
        .into_iter()
        .filter(|l| is_dominant(l))
        .collect()
}

/// All weights with parts in `lo..=hi`, in lexicographic order.
pub fn weights_in_box(rank: usize, lo: i32, hi: i32) -> Vec<Vec<i32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// `w • μ = w(μ + δ) - δ` with `δ = (r-1, ..., 1, 0)`.
pub fn dot_action(w: &Permutation, mu: &[i32]) -> Vec<i32> {
    let r = mu.len() as i32;
    let shifted: Vec<i32> = mu
        .iter()
        .enumerate()
        .map(|(i, m)| m + r - 1 - i as i32)
        .collect();
    w.act(&shifted)
        .iter()
        .enumerate()
        .map(|(i, m)| m - (r - 1 - i as i32))
        .collect()
}

/// Identities among the operators on every monomial `z^μ` with
/// `|μ_i| <= bound` in rank 3, plus commutation in rank 4.
///
/// Covers the quadratic relation, `∂_i = ∂°_i + 1`,
/// `L_i + 1 = q(L_i^{-1} + 1) = ∂_i(1 - q z^{-α_i})`, braid relations
/// along every reduced word, `∂_w = Σ_{y <= w} ∂°_y`, the dot-action sign
/// rule for `Ω`, and `Ω(Π(1 - q z^{-α}) z^{w_0 λ}) = q^N R_λ(z; q^{-1})`.
pub fn check_operator_algebra(bound: i32) -> Result<VerificationReport> {
    let r = 3;
    let q = LaurentPoly::t(r);
    let one = LaurentPoly::one(r);
    let monomials = weights_in_box(r, -bound, bound);
    let parts = monomials
        .par_iter()
        .map(|mu| -> Result<VerificationReport> {
            let mut rep = VerificationReport::new("operators", json!(null));
            let f = LaurentPoly::z_pow(mu);
            for i in 1..r {
                let cfg = |what: &str| json!({"mu": mu, "i": i, "identity": what});
                let lf = dl_apply(i, &f)?;
                let llf = dl_apply(i, &lf)?;
                rep.record(cfg("L^2 = (q-1)L + q"), llf, &(&q - &one) * &lf + &q * &f);
                rep.record(
                    cfg("d = d° + 1"),
                    partial_op(i, &f)?,
                    partial_circ_op(i, &f)? + &f,
                );
                let linv = dl_inv_apply(i, &f)?;
                rep.record(cfg("L^-1 L = 1"), dl_inv_apply(i, &lf)?, f.clone());
                rep.record(cfg("L + 1 = q(L^-1 + 1)"), &lf + &f, &q * &(&linv + &f));
                let mut neg = vec![0; r];
                neg[i - 1] = -1;
                neg[i] = 1;
                let g = (&one - &(&q * &LaurentPoly::z_pow(&neg))) * &f;
                rep.record(cfg("L + 1 = d(1 - q z^-a)"), &lf + &f, partial_op(i, &g)?);
            }
            for w in Permutation::all(r) {
                let words = w.all_reduced_words()?;
                let cfg = |what: &str| json!({"mu": mu, "w": w.one_line(), "identity": what});
                let first_l = dl_word_apply_along(&words[0], &f)?;
                let first_d = partial_word_apply(&w, &f)?;
                let first_dc = partial_circ_word_apply(&w, &f)?;
                for word in &words[1..] {
                    let along = |op: fn(usize, &LaurentPoly) -> Result<LaurentPoly>| {
                        word.iter().rev().try_fold(f.clone(), |acc, &i| op(i, &acc))
                    };
                    rep.record(cfg("braid L"), along(dl_apply)?, first_l.clone());
                    rep.record(cfg("braid d"), along(partial_op)?, first_d.clone());
                    rep.record(cfg("braid d°"), along(partial_circ_op)?, first_dc.clone());
                }
                let mut sum = LaurentPoly::zero(r);
                for y in Permutation::all(r) {
                    if y.bruhat_leq(&w) {
                        sum += partial_circ_word_apply(&y, &f)?;
                    }
                }
                rep.record(cfg("d_w = sum of d°_y, y <= w"), first_d, sum);
                let sign = if w.length() % 2 == 0 { 1 } else { -1 };
                rep.record(
                    cfg("Omega dot action"),
                    omega(&LaurentPoly::z_pow(&dot_action(&w, mu)))?,
                    omega(&f)?.scale(&sign.into()),
                );
            }
            Ok(rep)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut rep = VerificationReport::merged("operators", json!({"bound": bound}), parts);

    // Far-apart simple operators commute in rank 4.
    for mu in weights_in_box(4, -bound, bound) {
        let f = LaurentPoly::z_pow(&mu);
        let cfg = |what: &str| json!({"mu": mu, "identity": what});
        rep.record(
            cfg("L1 L3 = L3 L1"),
            dl_apply(1, &dl_apply(3, &f)?)?,
            dl_apply(3, &dl_apply(1, &f)?)?,
        );
        rep.record(
            cfg("d1 d3 = d3 d1"),
            partial_op(1, &partial_op(3, &f)?)?,
            partial_op(3, &partial_op(1, &f)?)?,
        );
        rep.record(
            cfg("d°1 d°3 = d°3 d°1"),
            partial_circ_op(1, &partial_circ_op(3, &f)?)?,
            partial_circ_op(3, &partial_circ_op(1, &f)?)?,
        );
    }

    // R-polynomials at antidominant arguments.
    for rank in 1..=3 {
        let n = num_positive_roots(rank) as i32;
        for lambda in partitions(rank, 3) {
            let w0l: Vec<i32> = lambda.iter().rev().copied().collect();
            rep.record(
                json!({"lambda": lambda, "identity": "Omega at w0 lambda"}),
                omega_of_product(&LaurentPoly::z_pow(&w0l))?,
                r_polynomial(&lambda)?.invert_t().mul_t_pow(n),
            );
        }
    }
    Ok(rep)
}

/// Properties of `τ^λ_{w,y}` for every `λ` with `|λ_i| <= bound`:
/// `Σ_w τ^λ_{w,y}` does not depend on `y`, equals `R_λ` for dominant `λ`
/// and `q^N R_{w_0 λ}(z; q^{-1})` for antidominant `λ`; and
/// `τ^λ_{w,y}(z; q) = q^N τ^{-λ}_{w w_0, y w_0}(z^{-1}; q^{-1})`.
pub fn check_tau_properties(rank: usize, bound: i32) -> Result<VerificationReport> {
    let n = num_positive_roots(rank) as i32;
    let perms = Permutation::all(rank);
    let w0 = Permutation::longest(rank);
    let lambdas = weights_in_box(rank, -bound, bound);
    let parts = lambdas
        .par_iter()
        .map(|lambda| -> Result<VerificationReport> {
            let mut rep = VerificationReport::new("tau", json!(null));
            let neg: Vec<i32> = lambda.iter().map(|x| -x).collect();
            let mut sums = Vec::with_capacity(perms.len());
            for y in &perms {
                let mut sum = LaurentPoly::zero(rank);
                for w in &perms {
                    let t = tau(lambda, w, y)?;
                    let inv = tau(&neg, &w.compose(&w0), &y.compose(&w0))?;
                    rep.record(
                        json!({"lambda": lambda, "w": w.one_line(), "y": y.one_line(), "identity": "involution"}),
                        t.clone(),
                        inv.invert_z().invert_t().mul_t_pow(n),
                    );
                    sum += t;
                }
                sums.push(sum);
            }
            for (y, s) in perms.iter().zip(&sums).skip(1) {
                rep.record(
                    json!({"lambda": lambda, "y": y.one_line(), "identity": "sum independent of y"}),
                    s.clone(),
                    sums[0].clone(),
                );
            }
            if is_dominant(lambda) {
                rep.record(json!({"lambda": lambda, "identity": "sum = R"}), sums[0].clone(), r_polynomial(lambda)?);
            }
            if is_antidominant(lambda) {
                let dom: Vec<i32> = lambda.iter().rev().copied().collect();
                rep.record(
                    json!({"lambda": lambda, "identity": "sum = q^N R(z; 1/q)"}),
                    sums[0].clone(),
                    r_polynomial(&dom)?.invert_t().mul_t_pow(n),
                );
            }
            Ok(rep)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::merged(
        "tau",
        json!({"rank": rank, "bound": bound}),
        parts,
    ))
}

/// A random Laurent polynomial in `rank` variables: up to `max_terms`
/// terms with `z`-exponents in `-2..=2`, `t`-exponents in `0..=2` and
/// coefficients in `-3..=3`.
pub fn random_poly<R: Rng>(rng: &mut R, rank: usize, max_terms: usize) -> LaurentPoly {
    let mut f = LaurentPoly::zero(rank);
    for _ in 0..rng.gen_range(1..=max_terms) {
        let z: Vec<i32> = (0..rank).map(|_| rng.gen_range(-2..=2)).collect();
        let c: i64 = rng.gen_range(-3..=3);
        f += LaurentPoly::z_pow(&z)
            .mul_t_pow(rng.gen_range(0..=2))
            .scale(&c.into());
    }
    f
}

/// Operator identities on `samples` random polynomials of rank 3 drawn
/// from a generator seeded with `seed`: idempotence of `∂_i`, the
/// quadratic relation, `L_i^{-1} L_i = 1`, the braid relation and the
/// symmetry of `Θ f`.
pub fn check_operator_random(seed: u64, samples: usize) -> Result<VerificationReport> {
    let r = 3;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let polys: Vec<LaurentPoly> = (0..samples).map(|_| random_poly(&mut rng, r, 4)).collect();
    let q = LaurentPoly::t(r);
    let one = LaurentPoly::one(r);
    let mut rep = VerificationReport::new(
        "operators-random",
        json!({"seed": seed, "samples": samples}),
    );
    for (n, f) in polys.iter().enumerate() {
        for i in 1..r {
            let cfg = |what: &str| json!({"seed": seed, "sample": n, "i": i, "identity": what});
            let d = partial_op(i, f)?;
            rep.record(cfg("d d = d"), partial_op(i, &d)?, d);
            let lf = dl_apply(i, f)?;
            rep.record(
                cfg("L^2 = (q-1)L + q"),
                dl_apply(i, &lf)?,
                &(&q - &one) * &lf + &q * f,
            );
            rep.record(cfg("L^-1 L = 1"), dl_inv_apply(i, &lf)?, f.clone());
        }
        let cfg = |what: &str| json!({"seed": seed, "sample": n, "identity": what});
        rep.record(
            cfg("L1 L2 L1 = L2 L1 L2"),
            dl_word_apply_along(&[1, 2, 1], f)?,
            dl_word_apply_along(&[2, 1, 2], f)?,
        );
        let th = theta_sum(f)?;
        rep.absorb(check_symmetric(cfg("Theta f symmetric"), &th));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rank: usize, s: &str) -> LaurentPoly {
        LaurentPoly::parse(rank, s).unwrap()
    }

    fn flag(v: &[usize]) -> Vec<Color> {
        v.iter().map(|&k| Color::new(k)).collect()
    }

    #[test]
    fn flags_and_permutations() {
        let w = Permutation::from_one_line(vec![1, 3, 2]).unwrap();
        assert_eq!(flag_of(&w), flag(&[1, 3, 2]));
        let w = Permutation::from_one_line(vec![2, 3, 1]).unwrap();
        assert_eq!(flag_of(&w), flag(&[3, 1, 2]));
        assert_eq!(flag_permutation(&flag(&[3, 1, 2])).unwrap(), w);
        assert!(flag_permutation(&flag(&[1, 1, 2])).is_err());
        assert_eq!(distinct_rearrangements(&flag(&[2, 1, 1])).len(), 3);
        assert_eq!(distinct_rearrangements(&flag(&[3, 1, 2])).len(), 6);
    }

    #[test]
    fn ybe_uncolored_small() {
        for family in [Family::P, Family::R] {
            let rep = check_ybe_uncolored(family, 2);
            assert!(rep.passed(), "{:?}", rep.failures.first());
            assert_eq!(rep.cases_checked, 16 * 9);
        }
    }

    #[test]
    fn ybe_fault_is_detected() {
        let rep = check_ybe_uncolored_with(Family::R, 2, Fault::FlipCSign);
        assert!(!rep.passed());
    }

    #[test]
    fn ybe_colored_small() {
        let rep = check_ybe_colored(Family::R, 2, 2);
        assert!(rep.passed(), "{:?}", rep.failures.first());
        assert!(!check_ybe_colored_with(Family::R, 2, 2, Fault::FlipCSign).passed());
    }

    #[test]
    fn ybe_aux_small() {
        for k in 1..=2 {
            let rep = check_ybe_aux(Family::P, 2, k, 2).unwrap();
            assert!(rep.passed(), "k={k} {:?}", rep.failures.first());
        }
        assert!(check_ybe_aux(Family::P, 2, 3, 2).is_err());
    }

    #[test]
    fn local_lifting_row() {
        // γ_2 enters a vertex whose top carries γ_1^m γ_2^n and leaves
        // horizontally colored.
        let (m, n) = (2u32, 1u32);
        let b = VSpinC(vec![m, n]);
        let terms = local_lifting_terms(HSpin::color(2), &b, USpin::Minus, m + n);
        let w: HashMap<_, _> = terms.into_iter().map(|(c, d, w)| ((c, d), w)).collect();
        assert_eq!(w[&(HSpin::color(2), b.clone())], p(1, "z1*t^2"));
        assert_eq!(
            w[&(HSpin::color(1), VSpinC(vec![m - 1, n + 1]))],
            p(1, "z1 - z1*t^2")
        );
        assert!(check_local_lifting(2, 2).passed());
    }

    #[test]
    fn merge_row() {
        let (m, n) = (2u32, 3u32);
        let b = VSpinC(vec![m, n]);
        let terms = merge_lifting_terms(
            1,
            HSpin::Plus,
            &b,
            HSpin::color(1),
            &VSpinC(vec![m + n - 1, 0]),
        );
        let total = terms
            .iter()
            .fold(LaurentPoly::zero(1), |a, (_, _, w)| a + w);
        assert_eq!(total, p(1, "1 + t + t^2 + t^3 + t^4"));
        assert!(check_color_merge(3, 1, 2).unwrap().passed());
        assert!(check_color_merge(3, 2, 2).unwrap().passed());
    }

    #[test]
    fn global_lifting_small() {
        let c0 = flag(&[1, 2]);
        assert!(check_global_lifting(Family::R, &[1, 0], &c0)
            .unwrap()
            .passed());
        let rep = check_global_lifting(Family::P, &[0, 0], &c0).unwrap();
        assert!(!rep.passed());
        assert_eq!(rep.failures[0].lhs, p(2, "1"));
        assert_eq!(rep.failures[0].rhs, p(2, "1 + t"));
    }

    #[test]
    fn demeval_rank_two() {
        let rep = check_demeval(&[1, 0]).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures.first());
        assert_eq!(rep.cases_checked, 8);
    }

    #[test]
    fn demtrain_and_monostatic_rank_two() {
        assert!(check_demtrain_sweep(&[2, 0]).unwrap().passed());
        assert!(check_monostatic(&[1, -1], &flag(&[2, 1])).unwrap().passed());
    }

    #[test]
    fn uncolored_pf_small() {
        for l in [vec![1, 1], vec![2, 0], vec![0, 0, 0]] {
            assert!(check_uncolored_pf(&l).unwrap().passed());
        }
    }

    #[test]
    fn random_operator_identities() {
        let a = check_operator_random(7, 5).unwrap();
        assert!(a.passed());
        assert_eq!(a, check_operator_random(7, 5).unwrap());
    }

    #[test]
    fn dot_action_fixes_minus_delta() {
        let w = Permutation::from_one_line(vec![2, 1, 3]).unwrap();
        assert_eq!(dot_action(&w, &[-2, -1, 0]), vec![-2, -1, 0]);
        assert_eq!(dot_action(&w, &[0, 0, 0]), vec![-1, 1, 0]);
    }
}
