use std::fmt;

use crate::error::Error;
use crate::point::DiagPoint;
use crate::word::BitWord;
use crate::Result;

/// Canonical identifier `(I, C)` of a line `L(I, C)`.
///
/// `flip_mask` is the indicator word of the flip-index set `I`; `fixed`
/// carries the common assignment `C` on the complement of `I` and is zero on
/// every `I`-position. A line of dimension `t = |I|` holds `2^t` points.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct LineId {
    flip_mask: BitWord,
    fixed: BitWord,
}

impl LineId {
    pub fn new(flip_mask: BitWord, fixed: BitWord) -> Result<Self> {
        flip_mask.check_same_n(&fixed)?;
        if !fixed.and(&flip_mask)?.is_zero() {
            return Err(Error::InvalidInput(
                "fixed assignment overlaps the flip set".into(),
            ));
        }
        Ok(LineId { flip_mask, fixed })
    }

    pub fn flip_mask(&self) -> BitWord {
        self.flip_mask
    }

    pub fn fixed(&self) -> BitWord {
        self.fixed
    }

    pub fn n(&self) -> u8 {
        self.flip_mask.n()
    }

    /// `|I|`; the line has `2^dimension()` points.
    pub fn dimension(&self) -> u32 {
        self.flip_mask.weight()
    }

    /// The full-flip line `L([n])`.
    pub fn full(n: u8) -> Result<Self> {
        let mask = BitWord::new(n, BitWord::full_mask(n))?;
        LineId::new(mask, BitWord::zero(n)?)
    }

    pub fn contains(&self, p: &DiagPoint) -> bool {
        match line_of_allow_degenerate(p) {
            Ok(l) => l == *self,
            Err(_) => false,
        }
    }

    /// The unique point of the line with the given `x`-vertex, if `x` is
    /// compatible with the fixed assignment.
    pub fn point_with_x(&self, x: BitWord) -> Option<DiagPoint> {
        let m = self.flip_mask.value();
        if x.value() & !m != self.fixed.value() {
            return None;
        }
        let y = BitWord::new(self.n(), x.value() ^ m).ok()?;
        DiagPoint::new(x, y).ok()
    }

    /// The unique point of the line with the given `y`-vertex, if compatible.
    pub fn point_with_y(&self, y: BitWord) -> Option<DiagPoint> {
        let m = self.flip_mask.value();
        if y.value() & !m != self.fixed.value() {
            return None;
        }
        let x = BitWord::new(self.n(), y.value() ^ m).ok()?;
        DiagPoint::new(x, y).ok()
    }
}

impl fmt::Display for LineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L(I={},C={})", self.flip_mask, self.fixed)
    }
}

impl fmt::Debug for LineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LineId(I={},C={})", self.flip_mask, self.fixed)
    }
}

/// The unique line through a nondegenerate point: `I = {i : x_i != y_i}`,
/// `c_j = x_j = y_j` elsewhere.
pub fn line_of(p: &DiagPoint) -> Result<LineId> {
    if p.is_degenerate() {
        return Err(Error::DegeneratePoint);
    }
    line_of_allow_degenerate(p)
}

/// Same as [`line_of`] but allows `x = y`, yielding `I = {}`.
pub fn line_of_allow_degenerate(p: &DiagPoint) -> Result<LineId> {
    let flip = p.x().xor(&p.y())?;
    let fixed = BitWord::new(p.n(), p.x().value() & !flip.value())?;
    LineId::new(flip, fixed)
}

/// The `2^|I|` points of a line, in ascending canonical index.
pub fn line_points(line: &LineId) -> Vec<DiagPoint> {
    let n = line.n();
    let m = line.flip_mask.value();
    let c = line.fixed.value();
    let mut out = Vec::with_capacity(1 << line.dimension());
    // subsets of m in increasing numeric order
    let mut s = 0u64;
    loop {
        let x = BitWord::new(n, c | s).expect("x fits");
        let y = BitWord::new(n, c | (m & !s)).expect("y fits");
        out.push(DiagPoint::new(x, y).expect("same n"));
        s = s.wrapping_sub(m) & m;
        if s == 0 {
            break;
        }
    }
    out.sort_by_key(|p| p.canonical_index());
    out
}

/// Supported range for full line enumeration (`3^n - 2^n` lines).
pub const MAX_ENUM_N: u8 = 20;

/// Every line of dimension `>= min_dim` exactly once: dimension descending,
/// then numeric order of `(flip_mask, fixed)`. Lines with `I = {}` are never
/// emitted.
pub fn enumerate_lines(n: u8, min_dim: u32) -> Result<Vec<LineId>> {
    if n == 0 || n > MAX_ENUM_N {
        return Err(Error::ResourceLimit(format!(
            "line enumeration supports 1..={MAX_ENUM_N}, got n={n}"
        )));
    }
    let min_dim = min_dim.max(1);
    let mut out = Vec::new();
    for t in (min_dim..=n as u32).rev() {
        for mask in masks_of_weight(n, t) {
            let comp = !mask & BitWord::full_mask(n);
            // fixed assignments over the complement, increasing numeric order
            let mut c = 0u64;
            loop {
                let flip = BitWord::new(n, mask).expect("mask fits");
                let fixed = BitWord::new(n, c).expect("fixed fits");
                out.push(LineId { flip_mask: flip, fixed });
                c = c.wrapping_sub(comp) & comp;
                if c == 0 {
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// All `n`-bit masks of popcount `t` in increasing numeric order.
fn masks_of_weight(n: u8, t: u32) -> Vec<u64> {
    let full = BitWord::full_mask(n);
    if t == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    // Gosper's hack
    let mut v: u64 = (1 << t) - 1;
    while v <= full {
        out.push(v);
        let c = v & v.wrapping_neg();
        let r = v + c;
        if r > full {
            break;
        }
        v = (((r ^ v) >> 2) / c) | r;
    }
    out
}

/// The grid of a coline set `S`: all `(X, Y')` over pairs of `S` with
/// `X < X'` in the weight-first order. Result size is exactly
/// `|S| * (|S| - 1) / 2`, sorted by canonical index.
pub fn grid_of(points: &[DiagPoint]) -> Result<Vec<DiagPoint>> {
    if let Some(first) = points.first() {
        let line = line_of(first)?;
        for p in &points[1..] {
            if line_of(p)? != line {
                return Err(Error::NotOnCommonLine);
            }
        }
    }
    let mut sorted: Vec<_> = points.to_vec();
    sorted.sort_by(|a, b| a.x().cmp(&b.x()));
    sorted.dedup();
    let mut out = Vec::with_capacity(sorted.len() * (sorted.len().saturating_sub(1)) / 2);
    for (i, p) in sorted.iter().enumerate() {
        for q in &sorted[i + 1..] {
            out.push(DiagPoint::new(p.x(), q.y())?);
        }
    }
    out.sort_by_key(|p| p.canonical_index());
    Ok(out)
}
