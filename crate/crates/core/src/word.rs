use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::Result;

/// Largest supported cube dimension for dense storage.
pub const MAX_N: u8 = 63;

/// An `n`-position binary word: a vertex of the cube `Q^n`.
///
/// Positions are indexed `1..=n` with position 1 leftmost in display and
/// most significant numerically, so `value()` reads the word as a big-endian
/// integer. Orders by weight first, ties by numeric value.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitWord {
    n: u8,
    v: u64,
}

impl BitWord {
    pub fn new(n: u8, value: u64) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidInput(format!(
                "word length must be in 1..={MAX_N}, got {n}"
            )));
        }
        if value >> n != 0 {
            return Err(Error::InvalidInput(format!(
                "value {value} does not fit in {n} positions"
            )));
        }
        Ok(BitWord { n, v: value })
    }

    pub fn zero(n: u8) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    /// Big-endian numeric value of the word.
    pub fn value(&self) -> u64 {
        self.v
    }

    /// Number of 1-positions.
    pub fn weight(&self) -> u32 {
        self.v.count_ones()
    }

    /// Bit at position `i`, 1-based, position 1 leftmost.
    pub fn get(&self, i: u8) -> u8 {
        debug_assert!(i >= 1 && i <= self.n);
        ((self.v >> (self.n - i)) & 1) as u8
    }

    /// Word with bit `b` at position `i`, 1-based.
    pub fn with_bit(&self, i: u8, b: u8) -> Self {
        debug_assert!(i >= 1 && i <= self.n && b <= 1);
        let mask = 1u64 << (self.n - i);
        let v = if b == 1 { self.v | mask } else { self.v & !mask };
        BitWord { n: self.n, v }
    }

    /// All-positions complement `x̄` with every bit flipped.
    pub fn complement(&self) -> Self {
        BitWord {
            n: self.n,
            v: !self.v & Self::full_mask(self.n),
        }
    }

    /// XOR of two words of equal length.
    pub fn xor(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        Ok(BitWord {
            n: self.n,
            v: self.v ^ other.v,
        })
    }

    pub fn and(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        Ok(BitWord {
            n: self.n,
            v: self.v & other.v,
        })
    }

    pub fn or(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        Ok(BitWord {
            n: self.n,
            v: self.v | other.v,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.v == 0
    }

    /// 1-based positions carrying a 1, ascending.
    pub fn positions(&self) -> Vec<u8> {
        (1..=self.n).filter(|&i| self.get(i) == 1).collect()
    }

    pub fn check_same_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub const fn full_mask(n: u8) -> u64 {
        if n >= 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }

    /// All `2^n` words of length `n` in ascending numeric order.
    pub fn all(n: u8) -> impl Iterator<Item = BitWord> {
        (0..1u64 << n).map(move |v| BitWord { n, v })
    }
}

/// Weight-first total order, ties broken by big-endian numeric value.
impl Ord for BitWord {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.n, other.n, "ordering words of different length");
        self.weight()
            .cmp(&other.weight())
            .then(self.v.cmp(&other.v))
    }
}

impl PartialOrd for BitWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            write!(f, "{}", self.get(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({self})")
    }
}

impl FromStr for BitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let n = s.len();
        if n == 0 || n > MAX_N as usize {
            return Err(Error::InvalidInput(format!("bad word length {n}")));
        }
        let mut v = 0u64;
        for c in s.chars() {
            v <<= 1;
            match c {
                '0' => {}
                '1' => v |= 1,
                _ => return Err(Error::InvalidInput(format!("bad bit character '{c}'"))),
            }
        }
        Ok(BitWord { n: n as u8, v })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BitWord {
        s.parse().unwrap()
    }

    #[test]
    fn display_roundtrip_and_positions() {
        let x = w("0110");
        assert_eq!(x.to_string(), "0110");
        assert_eq!(x.value(), 0b0110);
        assert_eq!(x.weight(), 2);
        assert_eq!(x.positions(), vec![2, 3]);
        assert_eq!(x.get(1), 0);
        assert_eq!(x.get(2), 1);
    }

    #[test]
    fn complement_flips_every_bit() {
        let x = w("0110");
        assert_eq!(x.complement().to_string(), "1001");
        assert_eq!(x.xor(&x.complement()).unwrap().weight(), 4);
    }

    #[test]
    fn order_is_weight_first() {
        // 10 has weight 1, 01 has weight 1: ties by value; 11 beats both.
        assert!(w("01") < w("10"));
        assert!(w("10") < w("11"));
        assert!(w("00") < w("01"));
        // weight dominates numeric value
        assert!(w("100") < w("011"));
    }

    #[test]
    fn order_is_strict_and_total_on_small_n() {
        for n in 1..=4u8 {
            let words: Vec<_> = BitWord::all(n).collect();
            for a in &words {
                for b in &words {
                    let ab = a.cmp(b);
                    let ba = b.cmp(a);
                    assert_eq!(ab, ba.reverse());
                    assert_eq!(ab == Ordering::Equal, a == b);
                    for c in &words {
                        if a < b && b < c {
                            assert!(a < c);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(BitWord::new(0, 0).is_err());
        assert!(BitWord::new(64, 0).is_err());
        assert!(BitWord::new(2, 4).is_err());
        assert!("01x".parse::<BitWord>().is_err());
        assert!(w("01").xor(&w("011")).is_err());
    }
}
