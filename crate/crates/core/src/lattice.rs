//! Lattice systems, their states, and partition functions.
//!
//! A system has `r` rows, numbered from the top, and columns labelled
//! `N, N-1, ..., M` from left to right. Row `i` carries the spectral
//! parameter `z_i`. Paths enter through the top boundary and leave through
//! the right boundary; the left and bottom boundaries are empty.
//!
//! Both models share one edge representation: the uncolored model is the
//! colored model with a single color, whose occupied horizontal edge plays
//! the role of `-`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial};
use crate::weights::{
    fused_successors, uncolored_successors, uncolored_weight, Color, Family, HSpin, Spectral,
    USpin, VSpinC,
};
use crate::weyl::is_dominant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Model {
    Uncolored,
    Colored,
}

/// A lattice system: model, weight family, boundary data and column range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemSpec {
    model: Model,
    family: Family,
    lambda: Vec<i32>,
    top_flag: Vec<Color>,
    right_flag: Vec<Color>,
    min_col: i32,
    max_col: i32,
}

impl SystemSpec {
    /// The uncolored system for a dominant weight `lambda`.
    pub fn uncolored(family: Family, lambda: &[i32]) -> Result<Self> {
        Self::build(Model::Uncolored, family, lambda, Vec::new(), Vec::new())
    }

    /// The colored system with top flag `top` and right flag `right`.
    ///
    /// Flags whose color multiplicities differ are legal; such systems have
    /// no states.
    pub fn colored(
        family: Family,
        lambda: &[i32],
        top: Vec<Color>,
        right: Vec<Color>,
    ) -> Result<Self> {
        let r = lambda.len();
        for (name, flag) in [("top", &top), ("right", &right)] {
            if flag.len() != r {
                return Err(Error::InvalidFlag(format!(
                    "{name} flag has length {} but the rank is {r}",
                    flag.len()
                )));
            }
            if let Some(c) = flag.iter().find(|c| c.index() > r) {
                return Err(Error::InvalidFlag(format!(
                    "{name} flag uses {c} with only {r} colors"
                )));
            }
        }
        Self::build(Model::Colored, family, lambda, top, right)
    }

    fn build(
        model: Model,
        family: Family,
        lambda: &[i32],
        top: Vec<Color>,
        right: Vec<Color>,
    ) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::InvalidSpec("rank must be at least 1".into()));
        }
        if !is_dominant(lambda) {
            return Err(Error::NonDominant(lambda.to_vec()));
        }
        let r = lambda.len();
        Ok(SystemSpec {
            model,
            family,
            lambda: lambda.to_vec(),
            top_flag: top,
            right_flag: right,
            min_col: lambda[r - 1].min(0),
            max_col: lambda[0].max(0),
        })
    }

    /// Uses columns `max_col, ..., min_col` instead of the smallest grid.
    pub fn with_columns(mut self, min_col: i32, max_col: i32) -> Result<Self> {
        let r = self.rank();
        if min_col > self.lambda[r - 1] || max_col < self.lambda[0] {
            return Err(Error::InvalidSpec(format!(
                "columns {min_col}..={max_col} do not cover lambda = {:?}",
                self.lambda
            )));
        }
        self.min_col = min_col;
        self.max_col = max_col;
        Ok(self)
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn with_family(mut self, family: Family) -> Self {
        self.family = family;
        self
    }

    pub fn lambda(&self) -> &[i32] {
        &self.lambda
    }

    pub fn rank(&self) -> usize {
        self.lambda.len()
    }

    pub fn top_flag(&self) -> &[Color] {
        &self.top_flag
    }

    pub fn right_flag(&self) -> &[Color] {
        &self.right_flag
    }

    pub fn columns(&self) -> (i32, i32) {
        (self.min_col, self.max_col)
    }

    /// Number of colors carried by edges: 1 for the uncolored model.
    pub fn colors(&self) -> usize {
        match self.model {
            Model::Uncolored => 1,
            Model::Colored => self.rank(),
        }
    }

    /// Column labels from left to right.
    pub fn column_labels(&self) -> Vec<i32> {
        (self.min_col..=self.max_col).rev().collect()
    }

    /// The spin on the top edge of each column, from left to right.
    pub fn top_boundary(&self) -> Vec<VSpinC> {
        self.column_labels()
            .into_iter()
            .map(|j| {
                let mut v = VSpinC::empty(self.colors());
                for (i, &l) in self.lambda.iter().enumerate() {
                    if l == j {
                        let k = match self.model {
                            Model::Uncolored => 1,
                            Model::Colored => self.top_flag[i].index(),
                        };
                        v.0[k - 1] += 1;
                    }
                }
                v
            })
            .collect()
    }

    /// The spin on the right edge of each row.
    pub fn right_boundary(&self) -> Vec<HSpin> {
        match self.model {
            Model::Uncolored => vec![HSpin::color(1); self.rank()],
            Model::Colored => self.right_flag.iter().map(|&c| HSpin::Color(c)).collect(),
        }
    }

    /// `(z_1 ... z_r)^M`.
    fn normalisation(&self) -> Monomial {
        Monomial::new(vec![self.min_col; self.rank()], 0)
    }
}

/// One complete assignment of spins to the edges of a system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct State {
    /// `horizontal[i][k]` is the edge left of column position `k` in row
    /// `i`; the last entry is the right boundary.
    pub horizontal: Vec<Vec<HSpin>>,
    /// `vertical[i][k]` is the edge above row `i` in column position `k`;
    /// the last row is the bottom boundary.
    pub vertical: Vec<Vec<VSpinC>>,
}

impl State {
    /// A JSON grid for debugging. Uncolored occupied edges print as `-` and
    /// vertical edges as plain counts.
    pub fn to_json(&self, model: Model) -> serde_json::Value {
        let h: Vec<Vec<String>> = self
            .horizontal
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| match model {
                        Model::Uncolored => s.uncolored().to_string(),
                        Model::Colored => s.to_string(),
                    })
                    .collect()
            })
            .collect();
        let v: Vec<Vec<serde_json::Value>> = self
            .vertical
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| match model {
                        Model::Uncolored => serde_json::json!(s.0[0]),
                        Model::Colored => serde_json::json!(s.0),
                    })
                    .collect()
            })
            .collect();
        serde_json::json!({ "horizontal": h, "vertical": v })
    }
}

type Options = Rc<Vec<(HSpin, VSpinC, LaurentPoly)>>;

/// Boundary data and a cache of vertex transitions for one system.
struct Grid {
    family: Family,
    model: Model,
    rank: usize,
    ncols: usize,
    top: Vec<VSpinC>,
    right: Vec<HSpin>,
    cache: RefCell<HashMap<(usize, HSpin, VSpinC), Options>>,
}

impl Grid {
    fn new(spec: &SystemSpec) -> Self {
        let top = spec.top_boundary();
        Grid {
            family: spec.family,
            model: spec.model,
            rank: spec.rank(),
            ncols: top.len(),
            top,
            right: spec.right_boundary(),
            cache: RefCell::new(HashMap::new()),
        }
    }

    /// Nonzero completions of the vertex in `row` (0-based) with left `a`
    /// and top `b`.
    fn transitions(&self, row: usize, a: HSpin, b: &VSpinC) -> Options {
        let key = (row, a, b.clone());
        if let Some(o) = self.cache.borrow().get(&key) {
            return o.clone();
        }
        let z = Spectral::new(self.rank, row + 1);
        let opts: Vec<_> = match self.model {
            Model::Uncolored => uncolored_successors(self.family, a.uncolored(), b.0[0], z)
                .into_iter()
                .map(|(c, d, w)| {
                    let c = match c {
                        USpin::Plus => HSpin::Plus,
                        USpin::Minus => HSpin::color(1),
                    };
                    (c, VSpinC(vec![d]), w)
                })
                .collect(),
            Model::Colored => fused_successors(self.family, a, b, z),
        };
        for (_, d, _) in &opts {
            assert!(
                d.total() as usize <= self.rank,
                "{}",
                Error::OccupancyExceeded {
                    occupancy: d.total(),
                    rank: self.rank
                }
            );
        }
        let opts = Rc::new(opts);
        self.cache.borrow_mut().insert(key, opts.clone());
        opts
    }

    /// Indices of the transitions allowed at a position, taking the right
    /// and bottom boundaries into account.
    fn allowed(&self, row: usize, col: usize, opts: &[(HSpin, VSpinC, LaurentPoly)]) -> Vec<usize> {
        let last_col = col + 1 == self.ncols;
        let last_row = row + 1 == self.rank;
        (0..opts.len())
            .filter(|&k| {
                let (c, d, _) = &opts[k];
                (!last_col || *c == self.right[row]) && (!last_row || d.total() == 0)
            })
            .collect()
    }
}

/// Enumerates the states of a system with nonzero weight, depth first,
/// row by row and left to right within a row. Each item carries the
/// product of its vertex weights, without the column normalisation.
pub fn enumerate_states(spec: &SystemSpec) -> StateIter {
    StateIter {
        grid: Grid::new(spec),
        stack: Vec::new(),
        path: Vec::new(),
        prefix: vec![LaurentPoly::one(spec.rank())],
        started: false,
    }
}

struct Frame {
    opts: Options,
    allowed: Vec<usize>,
    next: usize,
}

/// Lazy stream of `(State, weight)` pairs; see [`enumerate_states`].
pub struct StateIter {
    grid: Grid,
    stack: Vec<Frame>,
    path: Vec<(HSpin, VSpinC)>,
    prefix: Vec<LaurentPoly>,
    started: bool,
}

impl StateIter {
    fn frame_at(&self, depth: usize) -> Frame {
        let g = &self.grid;
        let (row, col) = (depth / g.ncols, depth % g.ncols);
        let a = if col == 0 {
            HSpin::Plus
        } else {
            self.path[depth - 1].0
        };
        let b = if row == 0 {
            &g.top[col]
        } else {
            &self.path[depth - g.ncols].1
        };
        let opts = g.transitions(row, a, b);
        let allowed = g.allowed(row, col, &opts);
        Frame {
            opts,
            allowed,
            next: 0,
        }
    }

    fn state(&self) -> State {
        let g = &self.grid;
        let mut horizontal = Vec::with_capacity(g.rank);
        let mut vertical = vec![g.top.clone()];
        for row in self.path.chunks(g.ncols) {
            let mut h = vec![HSpin::Plus];
            h.extend(row.iter().map(|(c, _)| *c));
            horizontal.push(h);
            vertical.push(row.iter().map(|(_, d)| d.clone()).collect());
        }
        State {
            horizontal,
            vertical,
        }
    }
}

impl Iterator for StateIter {
    type Item = (State, LaurentPoly);

    fn next(&mut self) -> Option<Self::Item> {
        let total = self.grid.rank * self.grid.ncols;
        if !self.started {
            self.started = true;
            let f = self.frame_at(0);
            self.stack.push(f);
        }
        loop {
            let frame = self.stack.last_mut()?;
            if frame.next < frame.allowed.len() {
                let (c, d, w) = &frame.opts[frame.allowed[frame.next]];
                frame.next += 1;
                let acc = self.prefix.last().expect("prefix is never empty") * w;
                self.path.push((*c, d.clone()));
                self.prefix.push(acc);
                if self.path.len() == total {
                    let item = (self.state(), self.prefix.pop().expect("just pushed"));
                    self.path.pop();
                    return Some(item);
                }
                let f = self.frame_at(self.path.len());
                self.stack.push(f);
            } else {
                self.stack.pop();
                if !self.stack.is_empty() {
                    self.path.pop();
                    self.prefix.pop();
                }
            }
        }
    }
}

/// `Z(S)`: the sum of the weights of all states, times `(z_1 ... z_r)^M`.
///
/// The sum is accumulated row by row, grouping partial states by the spins
/// on the vertical edges below the current row.
pub fn partition_function(spec: &SystemSpec) -> LaurentPoly {
    let grid = Grid::new(spec);
    let r = spec.rank();
    let mut layer: BTreeMap<Vec<VSpinC>, LaurentPoly> = BTreeMap::new();
    layer.insert(grid.top.clone(), LaurentPoly::one(r));
    for row in 0..r {
        let mut next: BTreeMap<Vec<VSpinC>, LaurentPoly> = BTreeMap::new();
        for (above, acc) in &layer {
            for (below, w) in row_completions(&grid, row, above) {
                let term = acc * &w;
                match next.get_mut(&below) {
                    Some(x) => *x += term,
                    None => {
                        next.insert(below, term);
                    }
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        layer = next;
    }
    let raw = layer.into_values().fold(LaurentPoly::zero(r), |a, b| a + b);
    raw.mul_monomial(&spec.normalisation())
}

/// The weighted ways of filling one row given the spins above it, summed
/// by the spins below it.
fn row_completions(
    grid: &Grid,
    row: usize,
    above: &[VSpinC],
) -> BTreeMap<Vec<VSpinC>, LaurentPoly> {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        grid: &Grid,
        row: usize,
        col: usize,
        h: HSpin,
        above: &[VSpinC],
        below: &mut Vec<VSpinC>,
        w: LaurentPoly,
        out: &mut BTreeMap<Vec<VSpinC>, LaurentPoly>,
    ) {
        if col == grid.ncols {
            match out.get_mut(below.as_slice()) {
                Some(x) => *x += w,
                None => {
                    out.insert(below.clone(), w);
                }
            }
            return;
        }
        let opts = grid.transitions(row, h, &above[col]);
        for k in grid.allowed(row, col, &opts) {
            let (c, d, x) = &opts[k];
            below.push(d.clone());
            rec(grid, row, col + 1, *c, above, below, &w * x, out);
            below.pop();
        }
    }
    let mut out = BTreeMap::new();
    rec(
        grid,
        row,
        0,
        HSpin::Plus,
        above,
        &mut Vec::new(),
        LaurentPoly::one(grid.rank),
        &mut out,
    );
    out
}

/// `Z(S)` as a plain sum over [`enumerate_states`].
pub fn partition_function_by_enumeration(spec: &SystemSpec) -> LaurentPoly {
    let r = spec.rank();
    enumerate_states(spec)
        .map(|(_, w)| w)
        .fold(LaurentPoly::zero(r), |a, b| a + b)
        .mul_monomial(&spec.normalisation())
}

/// Column transfer matrix of the uncolored model: rows of the matrix are
/// indexed by the spins on the left of a column, columns by the spins on
/// its right. Spin vectors are encoded as bit masks with bit `i` set when
/// row `i + 1` carries `-`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferMatrix {
    rank: usize,
    entries: Vec<LaurentPoly>,
}

impl TransferMatrix {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn size(&self) -> usize {
        1 << self.rank
    }

    pub fn get(&self, left: usize, right: usize) -> &LaurentPoly {
        &self.entries[left * self.size() + right]
    }

    /// The entry for explicit spin vectors, row 1 first.
    pub fn entry(&self, left: &[USpin], right: &[USpin]) -> &LaurentPoly {
        self.get(mask(left), mask(right))
    }
}

/// Encodes a spin vector as a bit mask.
pub fn mask(spins: &[USpin]) -> usize {
    spins
        .iter()
        .enumerate()
        .filter(|(_, s)| s.is_minus())
        .map(|(i, _)| 1 << i)
        .sum()
}

/// The transfer matrix of a column whose top edge carries `m` paths.
pub fn column_transfer_matrix(family: Family, m: u32, rank: usize) -> TransferMatrix {
    let size = 1usize << rank;
    let spin = |bits: usize, i: usize| {
        if bits >> i & 1 == 1 {
            USpin::Minus
        } else {
            USpin::Plus
        }
    };
    let mut entries = Vec::with_capacity(size * size);
    for left in 0..size {
        for right in 0..size {
            let mut n = m;
            let mut w = LaurentPoly::one(rank);
            for i in 0..rank {
                let (a, c) = (spin(left, i), spin(right, i));
                let below = n as i64 + a.is_minus() as i64 - c.is_minus() as i64;
                if below < 0 {
                    w = LaurentPoly::zero(rank);
                    break;
                }
                w = w * uncolored_weight(family, a, n, c, below as u32, Spectral::new(rank, i + 1));
                if w.is_zero() {
                    break;
                }
                n = below as u32;
            }
            if n != 0 {
                w = LaurentPoly::zero(rank);
            }
            entries.push(w);
        }
    }
    TransferMatrix { rank, entries }
}

/// The uncolored partition function as a product of column transfer
/// matrices between the all-`+` and all-`-` boundary vectors.
pub fn partition_function_transfer(spec: &SystemSpec) -> Result<LaurentPoly> {
    if spec.model != Model::Uncolored {
        return Err(Error::InvalidSpec(
            "transfer matrices need the uncolored model".into(),
        ));
    }
    let r = spec.rank();
    let size = 1usize << r;
    let mut cache: HashMap<u32, TransferMatrix> = HashMap::new();
    let mut v = vec![LaurentPoly::zero(r); size];
    v[0] = LaurentPoly::one(r);
    for top in spec.top_boundary() {
        let m = top.0[0];
        let t = cache
            .entry(m)
            .or_insert_with(|| column_transfer_matrix(spec.family, m, r));
        let mut next = vec![LaurentPoly::zero(r); size];
        for (left, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (right, slot) in next.iter_mut().enumerate() {
                let e = t.get(left, right);
                if !e.is_zero() {
                    *slot += x * e;
                }
            }
        }
        v = next;
    }
    Ok(v[size - 1].mul_monomial(&spec.normalisation()))
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
    fn top_boundary_counts_parts() {
        let spec = SystemSpec::uncolored(Family::P, &[8, 6, 6, 1, 0]).unwrap();
        let counts: Vec<u32> = spec.top_boundary().iter().map(|v| v.0[0]).collect();
        assert_eq!(counts, vec![1, 0, 2, 0, 0, 0, 0, 1, 1]);
        assert_eq!(spec.column_labels(), (0..=8).rev().collect::<Vec<_>>());
    }

    #[test]
    fn top_boundary_colored() {
        let spec =
            SystemSpec::colored(Family::R, &[4, 2, 2], flag(&[1, 2, 3]), flag(&[1, 2, 3])).unwrap();
        let top = spec.top_boundary();
        assert_eq!(top[0], VSpinC(vec![1, 0, 0]));
        assert_eq!(top[2], VSpinC(vec![0, 1, 1]));
        assert_eq!(top.iter().map(VSpinC::total).sum::<u32>(), 3);
    }

    #[test]
    fn spec_validation() {
        assert!(matches!(
            SystemSpec::uncolored(Family::P, &[0, 1]),
            Err(Error::NonDominant(_))
        ));
        assert!(SystemSpec::colored(Family::P, &[1, 0], flag(&[1]), flag(&[1, 2])).is_err());
        assert!(SystemSpec::colored(Family::P, &[1, 0], flag(&[1, 3]), flag(&[1, 2])).is_err());
        let spec = SystemSpec::uncolored(Family::P, &[2, 1]).unwrap();
        assert_eq!(spec.columns(), (0, 2));
        assert!(spec.clone().with_columns(2, 3).is_err());
        assert!(spec.with_columns(-2, 4).is_ok());
    }

    #[test]
    fn small_partition_functions() {
        let u = |f, l: &[i32]| partition_function(&SystemSpec::uncolored(f, l).unwrap());
        assert_eq!(u(Family::P, &[1, 0]), p(2, "z1 + z2"));
        assert_eq!(u(Family::R, &[1, 1]), p(2, "(1 + t)*z1*z2"));
        assert_eq!(u(Family::R, &[0, 0]), p(2, "1 + t"));
        assert_eq!(u(Family::R, &[2, 0]), p(2, "z1^2 + z1*z2 + z2^2 - t*z1*z2"));
        assert_eq!(u(Family::P, &[0, 0, 0]), p(3, "1"));
    }

    #[test]
    fn monostatic_example() {
        let spec =
            SystemSpec::colored(Family::R, &[4, 2, 2], flag(&[1, 3, 2]), flag(&[1, 3, 2])).unwrap();
        let states: Vec<_> = enumerate_states(&spec).collect();
        assert_eq!(states.len(), 1);
        assert_eq!(partition_function(&spec), p(3, "t*z1^4*z2^2*z3^2"));
    }

    #[test]
    fn mismatched_flags_have_no_states() {
        let spec = SystemSpec::colored(Family::R, &[1, 0], flag(&[1, 1]), flag(&[1, 2])).unwrap();
        assert_eq!(enumerate_states(&spec).count(), 0);
        assert!(partition_function(&spec).is_zero());
    }

    #[test]
    fn enumeration_dp_and_transfer_agree() {
        for lambda in [
            vec![2, 1, 0],
            vec![1, 1, -1],
            vec![2, 2, 2],
            vec![0, -1, -2],
        ] {
            for family in [Family::P, Family::R] {
                let spec = SystemSpec::uncolored(family, &lambda).unwrap();
                let z = partition_function(&spec);
                assert_eq!(partition_function_by_enumeration(&spec), z);
                assert_eq!(partition_function_transfer(&spec).unwrap(), z);
            }
        }
    }

    #[test]
    fn enumerated_states_respect_boundaries() {
        let spec =
            SystemSpec::colored(Family::P, &[2, 1, 0], flag(&[2, 1, 3]), flag(&[3, 1, 2])).unwrap();
        let mut n = 0;
        for (s, w) in enumerate_states(&spec) {
            assert!(!w.is_zero());
            for (i, row) in s.horizontal.iter().enumerate() {
                assert_eq!(row[0], HSpin::Plus);
                assert_eq!(*row.last().unwrap(), HSpin::Color(spec.right_flag()[i]));
            }
            assert!(s.vertical.last().unwrap().iter().all(|v| v.total() == 0));
            assert_eq!(s.vertical[0], spec.top_boundary());
            n += 1;
        }
        assert!(n > 0);
    }

    #[test]
    fn padding_does_not_change_z() {
        let spec = SystemSpec::colored(Family::R, &[1, 0, -1], flag(&[3, 1, 2]), flag(&[2, 3, 1]))
            .unwrap();
        let z = partition_function(&spec);
        assert_eq!(
            partition_function(&spec.clone().with_columns(-3, 2).unwrap()),
            z
        );
    }

    #[test]
    fn transfer_ratio_is_v_m() {
        let r = 3;
        let v3 = p(r, "(1 + t)*(1 + t + t^2)");
        let cp = column_transfer_matrix(Family::P, 3, r);
        let cr = column_transfer_matrix(Family::R, 3, r);
        let (plus, minus) = (0, (1 << r) - 1);
        assert_eq!(cr.get(plus, minus), &(&v3 * cp.get(plus, minus)));
        // One path leaves a one-row column through a single D(0) vertex.
        for family in [Family::P, Family::R] {
            let c1 = column_transfer_matrix(family, 1, 1);
            assert_eq!(c1.entry(&[USpin::Plus], &[USpin::Minus]), &p(1, "1"));
            assert!(c1.entry(&[USpin::Minus], &[USpin::Plus]).is_zero());
            assert!(c1.entry(&[USpin::Plus], &[USpin::Plus]).is_zero());
        }
    }
}
