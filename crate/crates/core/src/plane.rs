//! Corners in Cartesian products `A x B` of integer sets, found by
//! iterating popular-color selection on slope `-1` lines, plus sumset
//! arithmetic and Hilbert cube detection.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::Error;
use crate::Result;

/// A finite set of exact integers, strictly increasing. Callers scale any
/// rational data to integers beforehand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberSet {
    elements: Vec<i64>,
}

impl NumberSet {
    pub fn new(mut elements: Vec<i64>) -> Result<Self> {
        elements.sort_unstable();
        let before = elements.len();
        elements.dedup();
        if elements.len() != before {
            return Err(Error::InvalidInput("duplicate elements in number set".into()));
        }
        Ok(NumberSet { elements })
    }

    pub fn from_range(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInput(format!("empty range {lo}..={hi}")));
        }
        Ok(NumberSet {
            elements: (lo..=hi).collect(),
        })
    }

    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, v: i64) -> bool {
        self.elements.binary_search(&v).is_ok()
    }

    pub fn index_of(&self, v: i64) -> Option<usize> {
        self.elements.binary_search(&v).ok()
    }
}

/// Sorted distinct `{a + b : a in A, b in B}`.
pub fn sumset(a: &NumberSet, b: &NumberSet) -> NumberSet {
    let sums: BTreeSet<i64> = a
        .elements
        .iter()
        .flat_map(|&x| b.elements.iter().map(move |&y| x + y))
        .collect();
    NumberSet {
        elements: sums.into_iter().collect(),
    }
}

/// `delta = 1 / 2^(r+1)`.
pub fn delta_for(r: u32) -> BigRational {
    assert!(r >= 1);
    BigRational::new(BigInt::one(), BigInt::from(2u32).pow(r + 1))
}

/// Partition of `A x B` into slope `-1` lines, keyed and ordered by the sum
/// `a + b`. The number of groups equals `|A + B|`.
pub fn antidiagonal_cover(a: &NumberSet, b: &NumberSet) -> BTreeMap<i64, Vec<(i64, i64)>> {
    let mut groups: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
    for &x in &a.elements {
        for &y in &b.elements {
            groups.entry(x + y).or_default().push((x, y));
        }
    }
    for pts in groups.values_mut() {
        pts.sort_unstable();
    }
    groups
}

/// A total `r`-coloring of `A x B`, row-major over sorted `A` then `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridColoring {
    a_set: NumberSet,
    b_set: NumberSet,
    r: u8,
    colors: Vec<u8>,
}

impl GridColoring {
    pub fn new(a_set: NumberSet, b_set: NumberSet, r: u8, colors: Vec<u8>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidInput("need at least one color".into()));
        }
        let expect = a_set.len() * b_set.len();
        if colors.len() != expect {
            return Err(Error::DegenerateColoring(format!(
                "expected {expect} entries, got {}",
                colors.len()
            )));
        }
        if let Some(bad) = colors.iter().find(|&&c| c >= r) {
            return Err(Error::DegenerateColoring(format!(
                "color {bad} out of range 0..{r}"
            )));
        }
        Ok(GridColoring {
            a_set,
            b_set,
            r,
            colors,
        })
    }

    pub fn constant(a_set: NumberSet, b_set: NumberSet, r: u8, color: u8) -> Result<Self> {
        let len = a_set.len() * b_set.len();
        Self::new(a_set, b_set, r, vec![color; len])
    }

    pub fn a_set(&self) -> &NumberSet {
        &self.a_set
    }

    pub fn b_set(&self) -> &NumberSet {
        &self.b_set
    }

    pub fn r(&self) -> u8 {
        self.r
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color(&self, a: i64, b: i64) -> Option<u8> {
        let ia = self.a_set.index_of(a)?;
        let ib = self.b_set.index_of(b)?;
        Some(self.colors[ia * self.b_set.len() + ib])
    }
}

/// Three points `(a,b), (a+d,b), (a,b+d)` with `d > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlaneCorner {
    pub a: i64,
    pub b: i64,
    pub d: i64,
    pub color: Option<u8>,
}

impl PlaneCorner {
    pub fn points(&self) -> [(i64, i64); 3] {
        [
            (self.a, self.b),
            (self.a + self.d, self.b),
            (self.a, self.b + self.d),
        ]
    }

    /// Membership, positivity of `d` and (when colored) monochromaticity.
    pub fn validate(&self, coloring: &GridColoring) -> Result<()> {
        if self.d <= 0 {
            return Err(Error::MalformedWitness("corner needs d > 0".into()));
        }
        let mut seen_color = None;
        for (x, y) in self.points() {
            let Some(c) = coloring.color(x, y) else {
                return Err(Error::MalformedWitness(format!("({x},{y}) outside A x B")));
            };
            match seen_color {
                None => seen_color = Some(c),
                Some(prev) if prev != c => {
                    return Err(Error::MalformedWitness("corner is not monochromatic".into()))
                }
                _ => {}
            }
        }
        if let (Some(expect), Some(actual)) = (self.color, seen_color) {
            if expect != actual {
                return Err(Error::MalformedWitness("recorded color mismatch".into()));
            }
        }
        Ok(())
    }
}

/// One round of the planar loop.
#[derive(Clone, Debug)]
pub struct PlaneRound {
    pub round: usize,
    pub sum: i64,
    pub line_size: usize,
    pub color: u8,
    pub s_size: usize,
    pub next_grid_size: usize,
}

#[derive(Clone, Debug)]
pub struct PlaneTrace {
    pub rounds: Vec<PlaneRound>,
    pub corner: Option<PlaneCorner>,
}

/// Iterative corner extraction: pick the heaviest slope `-1` line, take the
/// most popular color class on it, look for a corner completed by a
/// same-colored root, and otherwise recurse on the grid the class spans.
/// Runs at most `r + 1` rounds.
pub fn extract_corner(coloring: &GridColoring) -> Result<PlaneTrace> {
    let r = coloring.r() as usize;
    let mut points: Vec<(i64, i64)> = coloring
        .a_set
        .elements
        .iter()
        .flat_map(|&a| coloring.b_set.elements.iter().map(move |&b| (a, b)))
        .collect();
    let mut rounds = Vec::new();
    for round in 1..=r + 1 {
        if points.is_empty() {
            break;
        }
        let mut groups: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
        for p in &points {
            groups.entry(p.0 + p.1).or_default().push(*p);
        }
        // heaviest line; ties to the smallest sum
        let (&sum, line) = groups
            .iter()
            .max_by(|(sa, pa), (sb, pb)| pa.len().cmp(&pb.len()).then(sb.cmp(sa)))
            .expect("nonempty");
        let line_size = line.len();
        let mut counts = vec![0usize; r];
        for &(a, b) in line {
            counts[coloring.color(a, b).expect("point in A x B") as usize] += 1;
        }
        let color = counts
            .iter()
            .enumerate()
            .max_by(|(ia, ca), (ib, cb)| ca.cmp(cb).then(ib.cmp(ia)))
            .map(|(i, _)| i as u8)
            .unwrap();
        let mut class: Vec<(i64, i64)> = line
            .iter()
            .filter(|&&(a, b)| coloring.color(a, b) == Some(color))
            .copied()
            .collect();
        class.sort_unstable();
        // corner completion: pairs of the class plus a same-colored root
        for i in 0..class.len() {
            for j in i + 1..class.len() {
                let (p, q) = (class[i], class[j]);
                let d = q.0 - p.0;
                debug_assert!(d > 0);
                let root = (p.0, q.1);
                if coloring.color(root.0, root.1) == Some(color) {
                    let corner = PlaneCorner {
                        a: p.0,
                        b: q.1,
                        d,
                        color: Some(color),
                    };
                    corner.validate(coloring)?;
                    rounds.push(PlaneRound {
                        round,
                        sum,
                        line_size,
                        color,
                        s_size: class.len(),
                        next_grid_size: 0,
                    });
                    return Ok(PlaneTrace {
                        rounds,
                        corner: Some(corner),
                    });
                }
            }
        }
        // grid spanned by the class
        let mut next: BTreeSet<(i64, i64)> = BTreeSet::new();
        for i in 0..class.len() {
            for j in i + 1..class.len() {
                next.insert((class[i].0, class[j].1));
            }
        }
        rounds.push(PlaneRound {
            round,
            sum,
            line_size,
            color,
            s_size: class.len(),
            next_grid_size: next.len(),
        });
        points = next.into_iter().collect();
    }
    Ok(PlaneTrace {
        rounds,
        corner: None,
    })
}

/// Exhaustive scan over all `(a, b, d)`; the independent oracle paired with
/// [`extract_corner`], and the finder behind grid-domain detection.
pub fn find_plane_corner(coloring: &GridColoring) -> Option<PlaneCorner> {
    for &a in coloring.a_set.elements() {
        for &b in coloring.b_set.elements() {
            let c = coloring.color(a, b)?;
            for &a2 in coloring.a_set.elements() {
                let d = a2 - a;
                if d <= 0 {
                    continue;
                }
                if coloring.color(a2, b) == Some(c)
                    && coloring.color(a, b + d) == Some(c)
                {
                    return Some(PlaneCorner {
                        a,
                        b,
                        d,
                        color: Some(c),
                    });
                }
            }
        }
    }
    None
}

/// `c_r * n^e` with a rational exponent `e`, kept symbolic so comparisons
/// against rational targets stay exact.
#[derive(Clone, Debug)]
pub struct RationalPower {
    pub coeff: BigRational,
    pub base: u64,
    pub exponent: BigRational,
}

impl RationalPower {
    /// Exact comparison of `coeff * base^exponent` with `target`, both
    /// positive: raise both sides to the exponent's denominator.
    pub fn cmp_rational(&self, target: &BigRational) -> Ordering {
        use num_traits::Signed;
        assert!(self.coeff.is_positive() && target.is_positive() && self.base >= 1);
        let p = self.exponent.numer().clone();
        let q: u32 = self.exponent.denom().try_into().expect("small denominator");
        let base = BigRational::from(BigInt::from(self.base));
        let base_p = if p.sign() == num_bigint::Sign::Minus {
            let mag: u32 = (-p.clone()).try_into().expect("small exponent");
            BigRational::one() / pow_rat(&base, mag)
        } else {
            let mag: u32 = p.try_into().expect("small exponent");
            pow_rat(&base, mag)
        };
        let lhs = pow_rat(&self.coeff, q) * base_p;
        let rhs = pow_rat(target, q);
        lhs.cmp(&rhs)
    }

    pub fn at_least(&self, target: i64) -> bool {
        self.cmp_rational(&BigRational::from(BigInt::from(target))) != Ordering::Less
    }
}

fn pow_rat(base: &BigRational, exp: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// The class-size lower bound after `r` rounds: `c_r * n^(1 - delta*(2^(r+1) - 1))`.
pub fn sr_lower_bound(n: u64, r: u32, delta: &BigRational, c_r: &BigRational) -> RationalPower {
    let factor = BigRational::from(BigInt::from(2u32).pow(r + 1) - BigInt::one());
    RationalPower {
        coeff: c_r.clone(),
        base: n,
        exponent: BigRational::one() - delta * factor,
    }
}

/// All `2^m` sums `base + sum(eps_i * a_i)` with positive generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertCube {
    pub base: i64,
    pub generators: Vec<i64>,
}

impl HilbertCube {
    pub fn dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn subset_sums(&self) -> Vec<i64> {
        let mut sums = vec![self.base];
        for &g in &self.generators {
            let shifted: Vec<i64> = sums.iter().map(|&s| s + g).collect();
            sums.extend(shifted);
        }
        sums
    }

    pub fn is_contained_in(&self, s: &NumberSet) -> bool {
        self.generators.iter().all(|&g| g > 0)
            && self.subset_sums().iter().all(|&v| s.contains(v))
    }
}

pub const MAX_CUBE_M: usize = 4;
pub const MAX_CUBE_SET: usize = 64;

/// First `m`-dimensional Hilbert cube inside `S` (base ascending, then
/// generators lexicographically), or `None`. Generators are weakly
/// increasing; `strict` demands them pairwise distinct.
pub fn find_hilbert_cube(s: &NumberSet, m: usize, strict: bool) -> Result<Option<HilbertCube>> {
    if m > MAX_CUBE_M || s.len() > MAX_CUBE_SET {
        return Err(Error::ResourceLimit(format!(
            "Hilbert cube scan supports m <= {MAX_CUBE_M}, |S| <= {MAX_CUBE_SET}"
        )));
    }
    if s.is_empty() {
        return Ok(None);
    }
    if m == 0 {
        return Ok(Some(HilbertCube {
            base: s.elements[0],
            generators: vec![],
        }));
    }
    for &base in &s.elements {
        let mut gens = Vec::with_capacity(m);
        if grow_cube(s, m, strict, &mut vec![base], &mut gens) {
            return Ok(Some(HilbertCube {
                base,
                generators: gens,
            }));
        }
    }
    Ok(None)
}

fn grow_cube(
    s: &NumberSet,
    m: usize,
    strict: bool,
    sums: &mut Vec<i64>,
    gens: &mut Vec<i64>,
) -> bool {
    if gens.len() == m {
        return true;
    }
    let min_a = match gens.last() {
        Some(&last) if strict => last + 1,
        Some(&last) => last,
        None => 1,
    };
    // every admissible generator shifts the base into S
    let base = sums[0];
    let candidates: Vec<i64> = s
        .elements
        .iter()
        .filter_map(|&v| {
            let a = v - base;
            (a >= min_a).then_some(a)
        })
        .collect();
    for a in candidates {
        if sums.iter().all(|&v| s.contains(v + a)) {
            let old_len = sums.len();
            let shifted: Vec<i64> = sums.iter().map(|&v| v + a).collect();
            sums.extend(shifted);
            gens.push(a);
            if grow_cube(s, m, strict, sums, gens) {
                return true;
            }
            gens.pop();
            sums.truncate(old_len);
        }
    }
    false
}
