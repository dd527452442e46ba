use std::fmt;

use crate::error::Error;
use crate::word::BitWord;
use crate::Result;

/// An ordered pair `(X, Y)` of cube vertices: a point of `D(n)`.
///
/// A point is *degenerate* when `x = y`. Degenerate points are representable
/// but rejected by structure predicates unless the caller opts in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagPoint {
    x: BitWord,
    y: BitWord,
}

impl DiagPoint {
    pub fn new(x: BitWord, y: BitWord) -> Result<Self> {
        x.check_same_n(&y)?;
        Ok(DiagPoint { x, y })
    }

    pub fn x(&self) -> BitWord {
        self.x
    }

    pub fn y(&self) -> BitWord {
        self.y
    }

    pub fn n(&self) -> u8 {
        self.x.n()
    }

    pub fn is_degenerate(&self) -> bool {
        self.x == self.y
    }

    /// Canonical index `value(x) * 2^n + value(y)`, unique in `0..4^n`.
    pub fn canonical_index(&self) -> u128 {
        ((self.x.value() as u128) << self.n()) | self.y.value() as u128
    }

    /// Canonical index as `usize`; only valid for `n <= 31`.
    pub fn index(&self) -> usize {
        debug_assert!(self.n() <= 31);
        self.canonical_index() as usize
    }

    pub fn from_index(n: u8, idx: u128) -> Result<Self> {
        if idx >> (2 * n as u32) != 0 {
            return Err(Error::InvalidInput(format!(
                "index {idx} out of range for D({n})"
            )));
        }
        let x = BitWord::new(n, (idx >> n) as u64)?;
        let y = BitWord::new(n, (idx as u64) & BitWord::full_mask(n))?;
        DiagPoint::new(x, y)
    }

    /// All `4^n` points of `D(n)` in canonical index order.
    pub fn all(n: u8) -> impl Iterator<Item = DiagPoint> {
        BitWord::all(n).flat_map(move |x| BitWord::all(n).map(move |y| DiagPoint { x, y }))
    }

    /// The `4^n - 2^n` points with `x != y`, in canonical index order.
    pub fn all_nondegenerate(n: u8) -> impl Iterator<Item = DiagPoint> {
        Self::all(n).filter(|p| !p.is_degenerate())
    }
}

impl fmt::Display for DiagPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl fmt::Debug for DiagPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiagPoint({},{})", self.x, self.y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: &str, y: &str) -> DiagPoint {
        DiagPoint::new(x.parse().unwrap(), y.parse().unwrap()).unwrap()
    }

    #[test]
    fn canonical_index_is_unique_and_invertible() {
        for n in 1..=3u8 {
            let mut seen = std::collections::HashSet::new();
            for q in DiagPoint::all(n) {
                let idx = q.canonical_index();
                assert!(idx < 1 << (2 * n as u32));
                assert!(seen.insert(idx));
                assert_eq!(DiagPoint::from_index(n, idx).unwrap(), q);
            }
            assert_eq!(seen.len(), 1 << (2 * n as u32));
        }
    }

    #[test]
    fn nondegenerate_count() {
        for n in 1..=4u8 {
            let count = DiagPoint::all_nondegenerate(n).count();
            assert_eq!(count, (1 << (2 * n as u32)) - (1 << n as u32));
        }
    }

    #[test]
    fn degenerate_flag() {
        assert!(p("01", "01").is_degenerate());
        assert!(!p("01", "10").is_degenerate());
    }

    #[test]
    fn mixed_dimensions_rejected() {
        let x: BitWord = "01".parse().unwrap();
        let y: BitWord = "011".parse().unwrap();
        assert!(DiagPoint::new(x, y).is_err());
    }
}
