//! Boltzmann weights for the uncolored and colored bosonic vertex models,
//! and the R-matrices that solve their Yang-Baxter equations.
//!
//! Vertices are read with the left and top edges as inputs and the right and
//! bottom edges as outputs; paths travel down and to the right. A vertex in
//! row `i` uses the spectral parameter `z_i`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Which of the two weight families to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    P,
    R,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" | "p" => Ok(Family::P),
            "R" | "r" => Ok(Family::R),
            _ => Err(Error::Parse(format!(
                "unknown family {s:?}, expected P or R"
            ))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::P => write!(f, "P"),
            Family::R => write!(f, "R"),
        }
    }
}

/// The color `γ_k`.
///
/// Colors are ordered `γ_1 > γ_2 > ... > γ_r`, so the `Ord` impl runs
/// opposite to the index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Color(u8);

impl Color {
    pub fn new(k: usize) -> Self {
        assert!(
            k >= 1 && k <= u8::MAX as usize,
            "color index {k} out of range"
        );
        Color(k as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl Ord for Color {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Color {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}", self.0)
    }
}

/// A horizontal edge of the uncolored model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum USpin {
    Plus,
    Minus,
}

impl USpin {
    pub const ALL: [USpin; 2] = [USpin::Plus, USpin::Minus];

    pub fn is_minus(self) -> bool {
        self == USpin::Minus
    }
}

impl fmt::Display for USpin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            USpin::Plus => write!(f, "+"),
            USpin::Minus => write!(f, "-"),
        }
    }
}

impl Serialize for USpin {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A horizontal edge of the colored model: empty or carrying one color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HSpin {
    Plus,
    Color(Color),
}

impl HSpin {
    pub fn color(k: usize) -> Self {
        HSpin::Color(Color::new(k))
    }

    /// `+` followed by `γ_1, ..., γ_r`.
    pub fn all(colors: usize) -> Vec<HSpin> {
        std::iter::once(HSpin::Plus)
            .chain((1..=colors).map(HSpin::color))
            .collect()
    }

    /// Forgets the color.
    pub fn uncolored(self) -> USpin {
        match self {
            HSpin::Plus => USpin::Plus,
            HSpin::Color(_) => USpin::Minus,
        }
    }
}

impl fmt::Display for HSpin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HSpin::Plus => write!(f, "+"),
            HSpin::Color(c) => write!(f, "{c}"),
        }
    }
}

impl Serialize for HSpin {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A vertical edge of the colored model: how many paths of each color it
/// carries. Entry `k - 1` counts `γ_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VSpinC(pub Vec<u32>);

impl VSpinC {
    pub fn empty(colors: usize) -> Self {
        VSpinC(vec![0; colors])
    }

    pub fn colors(&self) -> usize {
        self.0.len()
    }

    pub fn count(&self, c: Color) -> u32 {
        self.0[c.index() - 1]
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn with_added(&self, c: Color) -> Self {
        let mut v = self.clone();
        v.0[c.index() - 1] += 1;
        v
    }

    pub fn with_removed(&self, c: Color) -> Option<Self> {
        let mut v = self.clone();
        let slot = &mut v.0[c.index() - 1];
        *slot = slot.checked_sub(1)?;
        Some(v)
    }

    /// Every multiset over `colors` colors of the given total size, in
    /// lexicographic order of the counts.
    pub fn all_of_total(colors: usize, total: u32) -> Vec<VSpinC> {
        fn rec(k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<VSpinC>) {
            if k == 1 {
                cur.push(left);
                out.push(VSpinC(cur.clone()));
                cur.pop();
                return;
            }
            for n in 0..=left {
                cur.push(n);
                rec(k - 1, left - n, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if colors == 0 {
            if total == 0 {
                out.push(VSpinC(Vec::new()));
            }
            return out;
        }
        rec(colors, total, &mut Vec::new(), &mut out);
        out
    }

    /// Every multiset with total at most `max_total`.
    pub fn all_up_to(colors: usize, max_total: u32) -> Vec<VSpinC> {
        (0..=max_total)
            .flat_map(|n| Self::all_of_total(colors, n))
            .collect()
    }
}

impl fmt::Display for VSpinC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|n| n.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The spectral parameter `z_index` inside a ring of the given rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Spectral {
    pub rank: usize,
    pub index: usize,
}

impl Spectral {
    pub fn new(rank: usize, index: usize) -> Self {
        assert!(
            index >= 1 && index <= rank,
            "z_{index} out of range for rank {rank}"
        );
        Spectral { rank, index }
    }

    fn z(self) -> LaurentPoly {
        LaurentPoly::z(self.rank, self.index)
    }

    fn one(self) -> LaurentPoly {
        LaurentPoly::one(self.rank)
    }

    fn zero(self) -> LaurentPoly {
        LaurentPoly::zero(self.rank)
    }

    fn t_pow(self, k: u32) -> LaurentPoly {
        LaurentPoly::t_pow(self.rank, k as i32)
    }

    /// `1 - t^k`.
    fn one_minus_t_pow(self, k: u32) -> LaurentPoly {
        self.one() - self.t_pow(k)
    }

    /// `1 + t + ... + t^n`.
    fn t_integer(self, n: u32) -> LaurentPoly {
        (0..=n).fold(self.zero(), |acc, k| acc + self.t_pow(k))
    }
}

/// Weight of an uncolored vertex with left `a`, top `b`, right `c` and
/// bottom `d`. Configurations that are not one of the four admissible
/// patterns have weight zero.
pub fn uncolored_weight(
    family: Family,
    a: USpin,
    b: u32,
    c: USpin,
    d: u32,
    z: Spectral,
) -> LaurentPoly {
    use USpin::{Minus, Plus};
    match (a, c) {
        (Plus, Plus) if b == d => z.one(),
        (Minus, Minus) if b == d => z.z(),
        (Minus, Plus) if d == b + 1 => match family {
            Family::P => z.z() * z.one_minus_t_pow(b + 1),
            Family::R => z.z() * z.one_minus_t_pow(1),
        },
        (Plus, Minus) if b == d + 1 => match family {
            Family::P => z.one(),
            Family::R => z.t_integer(d),
        },
        _ => z.zero(),
    }
}

/// The nonzero `(right, bottom, weight)` completions of a vertex with the
/// given left and top edges.
pub fn uncolored_successors(
    family: Family,
    a: USpin,
    b: u32,
    z: Spectral,
) -> Vec<(USpin, u32, LaurentPoly)> {
    let mut out = Vec::with_capacity(2);
    let candidates: [(USpin, Option<u32>); 2] = match a {
        USpin::Plus => [(USpin::Plus, Some(b)), (USpin::Minus, b.checked_sub(1))],
        USpin::Minus => [(USpin::Minus, Some(b)), (USpin::Plus, Some(b + 1))],
    };
    for (c, d) in candidates {
        if let Some(d) = d {
            let w = uncolored_weight(family, a, b, c, d, z);
            if !w.is_zero() {
                out.push((c, d, w));
            }
        }
    }
    out
}

/// Weight of a monochrome vertex of color `color`: the vertical edges carry
/// only that color, counted by `b` (top) and `d` (bottom).
pub fn monochrome_weight(
    family: Family,
    color: Color,
    a: HSpin,
    b: u32,
    c: HSpin,
    d: u32,
    z: Spectral,
) -> LaurentPoly {
    match (a, c) {
        (HSpin::Plus, HSpin::Plus) if b == d => z.one(),
        (HSpin::Color(x), HSpin::Color(y)) if x == y && b == d => match color.cmp(&x) {
            Ordering::Less => z.one(),
            Ordering::Equal => z.z(),
            Ordering::Greater => z.t_pow(b),
        },
        (HSpin::Color(x), HSpin::Plus) if x == color && d == b + 1 => {
            uncolored_weight(family, USpin::Minus, b, USpin::Plus, d, z)
        }
        (HSpin::Plus, HSpin::Color(y)) if y == color && b == d + 1 => {
            uncolored_weight(family, USpin::Plus, b, USpin::Minus, d, z)
        }
        _ => z.zero(),
    }
}

/// Weight of a colored vertex, obtained by fusing one monochrome column per
/// color. The columns are traversed from `γ_r` to `γ_1`.
pub fn fused_weight(
    family: Family,
    a: HSpin,
    b: &VSpinC,
    c: HSpin,
    d: &VSpinC,
    z: Spectral,
) -> LaurentPoly {
    assert_eq!(
        b.colors(),
        d.colors(),
        "vertical edges disagree on the number of colors"
    );
    let mut h = a;
    let mut w = z.one();
    for k in (1..=b.colors()).rev() {
        let color = Color::new(k);
        let (bk, dk) = (b.0[k - 1], d.0[k - 1]);
        let out = if dk == bk + 1 {
            HSpin::Plus
        } else if bk == dk + 1 {
            HSpin::Color(color)
        } else {
            h
        };
        let f = monochrome_weight(family, color, h, bk, out, dk, z);
        if f.is_zero() {
            return f;
        }
        w = w * f;
        h = out;
    }
    if h == c {
        w
    } else {
        z.zero()
    }
}

/// The nonzero `(right, bottom, weight)` completions of a colored vertex.
pub fn fused_successors(
    family: Family,
    a: HSpin,
    b: &VSpinC,
    z: Spectral,
) -> Vec<(HSpin, VSpinC, LaurentPoly)> {
    // Each monochrome column either lets the horizontal path through,
    // absorbs it (it must carry that column's color) or emits that color
    // (it must be empty).
    let mut partial = vec![(a, b.clone())];
    for k in (1..=b.colors()).rev() {
        let color = Color::new(k);
        let mut next = Vec::with_capacity(partial.len() * 2);
        for (h, d) in partial {
            match h {
                HSpin::Plus => {
                    if let Some(e) = d.with_removed(color) {
                        next.push((HSpin::Color(color), e));
                    }
                }
                HSpin::Color(x) if x == color => next.push((HSpin::Plus, d.with_added(color))),
                HSpin::Color(_) => {}
            }
            next.push((h, d));
        }
        partial = next;
    }
    partial
        .into_iter()
        .filter_map(|(c, d)| {
            let w = fused_weight(family, a, b, c, &d, z);
            (!w.is_zero()).then_some((c, d, w))
        })
        .collect()
}

/// The R-matrix of the uncolored model, indexed by its south-west,
/// north-west, north-east and south-east edges.
pub fn rmatrix_uncolored(
    sw: USpin,
    nw: USpin,
    ne: USpin,
    se: USpin,
    zi: Spectral,
    zj: Spectral,
) -> LaurentPoly {
    use USpin::{Minus, Plus};
    let (x, y) = (zi.z(), zj.z());
    let t = LaurentPoly::t(zi.rank);
    match (sw, nw, ne, se) {
        (Plus, Plus, Plus, Plus) | (Minus, Minus, Minus, Minus) => x - t * y,
        (Minus, Plus, Plus, Minus) => zi.one_minus_t_pow(1) * x,
        (Plus, Minus, Minus, Plus) => zi.one_minus_t_pow(1) * y,
        (Plus, Minus, Plus, Minus) => t * (x - y),
        (Minus, Plus, Minus, Plus) => x - y,
        _ => zi.zero(),
    }
}

/// The R-matrix of the colored model.
pub fn rmatrix_colored(
    sw: HSpin,
    nw: HSpin,
    ne: HSpin,
    se: HSpin,
    zi: Spectral,
    zj: Spectral,
) -> LaurentPoly {
    use HSpin::{Color as C, Plus};
    let (x, y) = (zi.z(), zj.z());
    let t = LaurentPoly::t(zi.rank);
    let one_minus_t = zi.one_minus_t_pow(1);
    match (sw, nw, ne, se) {
        (Plus, Plus, Plus, Plus) => x - t * y,
        (C(a), C(b), C(c), C(d)) if a == b && b == c && c == d => x - t * y,
        (C(a), C(b), C(c), C(d)) if a == d && b == c => {
            if a < b {
                one_minus_t * x
            } else {
                one_minus_t * y
            }
        }
        (C(a), C(b), C(c), C(d)) if a == c && b == d => {
            if a > b {
                x - y
            } else {
                t * (x - y)
            }
        }
        (C(a), Plus, Plus, C(d)) if a == d => one_minus_t * x,
        (Plus, C(b), C(c), Plus) if b == c => one_minus_t * y,
        (Plus, C(b), Plus, C(d)) if b == d => t * (x - y),
        (C(a), Plus, C(c), Plus) if a == c => x - y,
        _ => zi.zero(),
    }
}

/// The auxiliary R-matrix carrying the label `label`, used to move a single
/// monochrome column through a fused row.
pub fn rmatrix_aux(
    label: Color,
    sw: HSpin,
    nw: HSpin,
    ne: HSpin,
    se: HSpin,
    zi: Spectral,
    zj: Spectral,
) -> LaurentPoly {
    use HSpin::{Color as C, Plus};
    let (x, y) = (zi.z(), zj.z());
    let t = LaurentPoly::t(zi.rank);
    let one_minus_t = zi.one_minus_t_pow(1);
    let c = label;
    match (sw, nw, ne, se) {
        (Plus, Plus, Plus, Plus) => x - t * y,
        (C(a), C(b), C(e), C(f)) if a == b && b == e && e == f => x - t * y,
        (C(d), C(e), C(d2), C(e2)) if d == d2 && e == e2 => {
            if e > d {
                t * (x - y)
            } else {
                x - y
            }
        }
        (C(d), C(e), C(e2), C(d2)) if d == d2 && e == e2 => {
            let to_j = if e == c {
                true
            } else if d == c {
                false
            } else {
                (e > c && c > d) || (c > d && d > e) || (d > e && e > c)
            };
            if to_j {
                one_minus_t * y
            } else {
                one_minus_t * x
            }
        }
        (Plus, C(d), Plus, C(d2)) if d == d2 => t * (x - y),
        (C(d), Plus, C(d2), Plus) if d == d2 => x - y,
        (C(d), Plus, Plus, C(d2)) if d == d2 => one_minus_t * x,
        (Plus, C(d), C(d2), Plus) if d == d2 => one_minus_t * y,
        _ => zi.zero(),
    }
}
