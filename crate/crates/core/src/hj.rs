//! The digit codec between `{0,1,2,3}^n` and `D(n)` (each digit splits into
//! an `x`-bit and a `y`-bit), the alphabet reduction `{0,1,2,3} -> {0,1,2}`,
//! and partial Hales-Jewett line predicates for both alphabets.

use std::fmt;
use std::str::FromStr;

use crate::detect::CornerWitness;
use crate::error::Error;
use crate::point::DiagPoint;
use crate::word::BitWord;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    Four,
    Three,
}

impl Alphabet {
    pub fn size(&self) -> u8 {
        match self {
            Alphabet::Four => 4,
            Alphabet::Three => 3,
        }
    }
}

/// A word over `{0..3}` or `{0..2}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HJPoint {
    alphabet: Alphabet,
    digits: Vec<u8>,
}

impl HJPoint {
    pub fn new(alphabet: Alphabet, digits: Vec<u8>) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::InvalidInput("empty digit word".into()));
        }
        if let Some(&bad) = digits.iter().find(|&&d| d >= alphabet.size()) {
            return Err(Error::InvalidInput(format!(
                "digit {bad} outside alphabet of size {}",
                alphabet.size()
            )));
        }
        Ok(HJPoint { alphabet, digits })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Big-endian base-`|alphabet|` value; the canonical index for coloring
    /// files over alphabet domains.
    pub fn index(&self) -> usize {
        let base = self.alphabet.size() as usize;
        self.digits.iter().fold(0, |acc, &d| acc * base + d as usize)
    }

    pub fn from_index(alphabet: Alphabet, n: usize, mut idx: usize) -> Result<Self> {
        let base = alphabet.size() as usize;
        let mut digits = vec![0u8; n];
        for slot in digits.iter_mut().rev() {
            *slot = (idx % base) as u8;
            idx /= base;
        }
        if idx != 0 {
            return Err(Error::InvalidInput("index out of range".into()));
        }
        HJPoint::new(alphabet, digits)
    }

    /// All words of length `n`, ascending by index.
    pub fn all(alphabet: Alphabet, n: usize) -> impl Iterator<Item = HJPoint> {
        let base = alphabet.size() as usize;
        let count = base.pow(n as u32);
        (0..count).map(move |i| HJPoint::from_index(alphabet, n, i).expect("in range"))
    }

    pub fn parse(alphabet: Alphabet, s: &str) -> Result<Self> {
        let digits = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::InvalidInput(format!("bad digit '{c}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        HJPoint::new(alphabet, digits)
    }
}

impl fmt::Display for HJPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for HJPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HJPoint({self})")
    }
}

impl FromStr for HJPoint {
    type Err = Error;

    /// Parses in the 4-letter alphabet; use [`HJPoint::parse`] for `{0,1,2}`.
    fn from_str(s: &str) -> Result<Self> {
        HJPoint::parse(Alphabet::Four, s)
    }
}

/// Digit `d` splits as `(x-bit, y-bit) = (d >> 1, d & 1)`: `0 <-> (0,0)`,
/// `1 <-> (0,1)`, `2 <-> (1,0)`, `3 <-> (1,1)`.
pub fn encode4(p: &HJPoint) -> Result<DiagPoint> {
    if p.alphabet != Alphabet::Four {
        return Err(Error::InvalidInput("encode4 needs the 4-letter alphabet".into()));
    }
    let n = p.len() as u8;
    let mut x = BitWord::zero(n)?;
    let mut y = BitWord::zero(n)?;
    for (k, &d) in p.digits.iter().enumerate() {
        let i = (k + 1) as u8;
        x = x.with_bit(i, d >> 1);
        y = y.with_bit(i, d & 1);
    }
    DiagPoint::new(x, y)
}

/// Inverse of [`encode4`]; total on all of `D(n)`, degenerate points map to
/// `{0,3}`-words.
pub fn decode4(d: &DiagPoint) -> HJPoint {
    let digits = (1..=d.n())
        .map(|i| (d.x().get(i) << 1) | d.y().get(i))
        .collect();
    HJPoint {
        alphabet: Alphabet::Four,
        digits,
    }
}

/// How one column behaves along the three points of a partial line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColumnKind {
    Constant(u8),
    /// `(0,1,2)` in either alphabet.
    Increasing,
    /// `(3,2,1)` in the 4-letter alphabet, `(0,2,1)` in the 3-letter one.
    Decreasing,
}

/// An ordered triple of words forming a partial Hales-Jewett line: every
/// column is constant, increasing or decreasing, with at least one
/// non-constant column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HJLine {
    pub points: [HJPoint; 3],
    pub columns: Vec<ColumnKind>,
}

impl HJLine {
    pub fn alphabet(&self) -> Alphabet {
        self.points[0].alphabet()
    }

    pub fn active_columns(&self) -> Vec<usize> {
        self.columns
            .iter()
            .enumerate()
            .filter(|(_, k)| !matches!(k, ColumnKind::Constant(_)))
            .map(|(i, _)| i + 1)
            .collect()
    }
}

fn column_kind(alphabet: Alphabet, d: [u8; 3]) -> Option<ColumnKind> {
    if d[0] == d[1] && d[1] == d[2] {
        return Some(ColumnKind::Constant(d[0]));
    }
    match (alphabet, d) {
        (_, [0, 1, 2]) => Some(ColumnKind::Increasing),
        (Alphabet::Four, [3, 2, 1]) => Some(ColumnKind::Decreasing),
        (Alphabet::Three, [0, 2, 1]) => Some(ColumnKind::Decreasing),
        _ => None,
    }
}

fn line_in_order(p1: &HJPoint, p2: &HJPoint, p3: &HJPoint) -> Option<HJLine> {
    let alphabet = p1.alphabet();
    let mut columns = Vec::with_capacity(p1.len());
    let mut active = false;
    for k in 0..p1.len() {
        let kind = column_kind(alphabet, [p1.digits[k], p2.digits[k], p3.digits[k]])?;
        if !matches!(kind, ColumnKind::Constant(_)) {
            active = true;
        }
        columns.push(kind);
    }
    active.then(|| HJLine {
        points: [p1.clone(), p2.clone(), p3.clone()],
        columns,
    })
}

fn line_any_order(p1: &HJPoint, p2: &HJPoint, p3: &HJPoint, alphabet: Alphabet) -> Result<Option<HJLine>> {
    if p1.alphabet() != alphabet || p2.alphabet() != alphabet || p3.alphabet() != alphabet {
        return Err(Error::InvalidInput("wrong alphabet".into()));
    }
    if p1.len() != p2.len() || p2.len() != p3.len() {
        return Err(Error::DimensionMismatch(p1.len() as u8, p2.len().max(p3.len()) as u8));
    }
    let pts = [p1, p2, p3];
    for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        if let Some(line) = line_in_order(pts[perm[0]], pts[perm[1]], pts[perm[2]]) {
            return Ok(Some(line));
        }
    }
    Ok(None)
}

/// Partial-line predicate over `{0,1,2,3}`; tries all six orderings.
pub fn is_hj_line4(p1: &HJPoint, p2: &HJPoint, p3: &HJPoint) -> Result<Option<HJLine>> {
    line_any_order(p1, p2, p3, Alphabet::Four)
}

/// Partial-line predicate over `{0,1,2}`; column patterns are constant,
/// `(0,1,2)` and `(0,2,1)`.
pub fn is_hj_line3(p1: &HJPoint, p2: &HJPoint, p3: &HJPoint) -> Result<Option<HJLine>> {
    line_any_order(p1, p2, p3, Alphabet::Three)
}

/// Decodes a corner's three points and orders them into a partial line.
/// The order `(root, child_y, child_x)` always works; failure indicates an
/// implementation bug, not a data condition.
pub fn corner_to_hj_line(c: &CornerWitness) -> Result<HJLine> {
    let root = decode4(&c.root);
    let cy = decode4(&c.child_y);
    let cx = decode4(&c.child_x);
    if let Some(line) = line_in_order(&root, &cy, &cx) {
        return Ok(line);
    }
    is_hj_line4(&root, &cy, &cx)?.ok_or(Error::OrderingImpossible)
}

/// The alphabet reduction: digitwise `0 -> 0`, `3 -> 0`, `1 -> 1`, `2 -> 2`.
pub fn reduce43(p: &HJPoint) -> Result<HJPoint> {
    if p.alphabet() != Alphabet::Four {
        return Err(Error::InvalidInput("reduce43 needs the 4-letter alphabet".into()));
    }
    let digits = p
        .digits
        .iter()
        .map(|&d| match d {
            0 | 3 => 0,
            other => other,
        })
        .collect();
    HJPoint::new(Alphabet::Three, digits)
}
