use crate::error::Error;
use crate::point::DiagPoint;
use crate::Result;

/// Largest `n` for which a dense `4^n` color table is kept.
pub const MAX_DENSE_N: u8 = 12;

/// A total `r`-coloring of `D(n)`, stored densely and indexed by the
/// canonical index `value(x) * 2^n + value(y)`.
///
/// Entries at degenerate indices (`x = y`) are carried along so files
/// round-trip, but structure searches never read them unless a caller opts
/// into degenerate points.
#[derive(Clone, PartialEq, Eq)]
pub struct DnColoring {
    n: u8,
    r: u8,
    colors: Vec<u8>,
}

impl DnColoring {
    pub fn new(n: u8, r: u8, colors: Vec<u8>) -> Result<Self> {
        if n == 0 || n > MAX_DENSE_N {
            return Err(Error::InvalidInput(format!(
                "dense colorings support n in 1..={MAX_DENSE_N}, got {n}"
            )));
        }
        if r == 0 {
            return Err(Error::InvalidInput("need at least one color".into()));
        }
        let expect = 1usize << (2 * n as u32);
        if colors.len() != expect {
            return Err(Error::DegenerateColoring(format!(
                "expected {expect} entries for D({n}), got {}",
                colors.len()
            )));
        }
        if let Some(bad) = colors.iter().find(|&&c| c >= r) {
            return Err(Error::DegenerateColoring(format!(
                "color {bad} out of range 0..{r}"
            )));
        }
        Ok(DnColoring { n, r, colors })
    }

    pub fn constant(n: u8, r: u8, color: u8) -> Result<Self> {
        let len = 1usize << (2 * n as u32);
        Self::new(n, r, vec![color; len])
    }

    /// Builds from a function over all points (degenerate ones included).
    pub fn from_fn(n: u8, r: u8, mut f: impl FnMut(&DiagPoint) -> u8) -> Result<Self> {
        let colors: Vec<u8> = DiagPoint::all(n).map(|p| f(&p)).collect();
        Self::new(n, r, colors)
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn r(&self) -> u8 {
        self.r
    }

    pub fn color(&self, p: &DiagPoint) -> u8 {
        debug_assert_eq!(p.n(), self.n);
        self.colors[p.index()]
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn set(&mut self, p: &DiagPoint, c: u8) -> Result<()> {
        if c >= self.r {
            return Err(Error::InvalidInput(format!("color {c} >= r={}", self.r)));
        }
        let idx = p.index();
        self.colors[idx] = c;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_and_lookup() {
        let c = DnColoring::constant(2, 3, 1).unwrap();
        for p in DiagPoint::all(2) {
            assert_eq!(c.color(&p), 1);
        }
    }

    #[test]
    fn rejects_wrong_length_and_range() {
        assert!(DnColoring::new(2, 2, vec![0; 15]).is_err());
        assert!(DnColoring::new(2, 2, vec![2; 16]).is_err());
        assert!(DnColoring::new(2, 0, vec![0; 16]).is_err());
        assert!(DnColoring::constant(0, 2, 0).is_err());
    }

    #[test]
    fn from_fn_indexes_canonically() {
        let c = DnColoring::from_fn(2, 2, |p| (p.index() % 2) as u8).unwrap();
        for p in DiagPoint::all(2) {
            assert_eq!(c.color(&p) as usize, p.index() % 2);
        }
    }
}
