//! Predicates and brute-force finders for the monochromatic structures
//! living in `D(n)`: corners, binary trees, self-crossing paths and
//! coplanar quadruples.

use std::collections::HashSet;

use crate::coloring::DnColoring;
use crate::error::Error;
use crate::line::{enumerate_lines, line_of, line_points, LineId};
use crate::point::DiagPoint;
use crate::word::BitWord;
use crate::Result;

/// Three points `(X,Y), (X',Y), (X,Y')` where the two children lie on a
/// common line. The root is `(X,Y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CornerWitness {
    pub root: DiagPoint,
    /// `(X', Y)` — shares `y` with the root.
    pub child_x: DiagPoint,
    /// `(X, Y')` — shares `x` with the root.
    pub child_y: DiagPoint,
    pub color: Option<u8>,
}

impl CornerWitness {
    /// The common line of the two children.
    pub fn line(&self) -> Result<LineId> {
        line_of(&self.child_x)
    }

    pub fn points(&self) -> [DiagPoint; 3] {
        [self.root, self.child_x, self.child_y]
    }

    /// Checks the defining conditions. `allow_degenerate_root` admits a root
    /// with `x = y`; the children are always nondegenerate.
    pub fn validate(&self, allow_degenerate_root: bool) -> Result<()> {
        let (r, cx, cy) = (&self.root, &self.child_x, &self.child_y);
        r.x().check_same_n(&cx.x())?;
        r.x().check_same_n(&cy.x())?;
        if r.is_degenerate() && !allow_degenerate_root {
            return Err(Error::DegeneratePoint);
        }
        if cx.y() != r.y() || cy.x() != r.x() {
            return Err(Error::MalformedWitness("children do not share the root's coordinates".into()));
        }
        if cx.x() == r.x() || cy.y() == r.y() {
            return Err(Error::MalformedWitness("corner arms have zero length".into()));
        }
        if line_of(cx)? != line_of(cy)? {
            return Err(Error::MalformedWitness("children are not on a common line".into()));
        }
        Ok(())
    }

    pub fn is_monochromatic(&self, coloring: &DnColoring) -> bool {
        let c = coloring.color(&self.root);
        coloring.color(&self.child_x) == c && coloring.color(&self.child_y) == c
    }
}

/// Decides whether `{a, b, c}` form a corner under some role assignment.
/// All three points must be nondegenerate and distinct.
pub fn is_corner(a: &DiagPoint, b: &DiagPoint, c: &DiagPoint) -> Result<Option<CornerWitness>> {
    a.x().check_same_n(&b.x())?;
    a.x().check_same_n(&c.x())?;
    let pts = [*a, *b, *c];
    if pts.iter().any(|p| p.is_degenerate()) {
        return Ok(None);
    }
    if a == b || a == c || b == c {
        return Ok(None);
    }
    for root_idx in 0..3 {
        let root = pts[root_idx];
        let others = [pts[(root_idx + 1) % 3], pts[(root_idx + 2) % 3]];
        for (cx, cy) in [(others[0], others[1]), (others[1], others[0])] {
            let w = CornerWitness {
                root,
                child_x: cx,
                child_y: cy,
                color: None,
            };
            if w.validate(false).is_ok() {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// Scan options for the brute-force finders.
#[derive(Clone, Copy, Debug, Default)]
pub struct ScanOptions {
    /// Accept corners whose root is a degenerate point `x = y`. Needed when
    /// hunting partial Hales-Jewett lines through the codec, where the root
    /// may legitimately decode to a `{0,3}`-word.
    pub allow_degenerate_root: bool,
}

pub const MAX_FIND_N: u8 = 8;

/// First monochromatic corner in scan order (lines by enumeration order,
/// point pairs by canonical index), or `None`.
pub fn find_corner(coloring: &DnColoring) -> Result<Option<CornerWitness>> {
    find_corner_with(coloring, ScanOptions::default())
}

pub fn find_corner_with(
    coloring: &DnColoring,
    opts: ScanOptions,
) -> Result<Option<CornerWitness>> {
    let n = coloring.n();
    if n > MAX_FIND_N {
        return Err(Error::ResourceLimit(format!(
            "corner scan supports n <= {MAX_FIND_N}, got {n}"
        )));
    }
    let mut found = None;
    scan_corners(n, opts, |w| {
        let c = coloring.color(&w.root);
        if coloring.color(&w.child_x) == c && coloring.color(&w.child_y) == c {
            found = Some(CornerWitness { color: Some(c), ..*w });
            true
        } else {
            false
        }
    })?;
    Ok(found)
}

/// Visits every corner of `D(n)` in deterministic scan order until the
/// callback returns `true`.
pub fn scan_corners(
    n: u8,
    opts: ScanOptions,
    mut visit: impl FnMut(&CornerWitness) -> bool,
) -> Result<()> {
    for line in enumerate_lines(n, 1)? {
        let pts = line_points(&line);
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                let (p, q) = (pts[i], pts[j]);
                // two possible roots for the child pair {p, q}
                let roots = [
                    (DiagPoint::new(q.x(), p.y())?, p, q),
                    (DiagPoint::new(p.x(), q.y())?, q, p),
                ];
                for (root, cx, cy) in roots {
                    if root.is_degenerate() && !opts.allow_degenerate_root {
                        continue;
                    }
                    let w = CornerWitness {
                        root,
                        child_x: cx,
                        child_y: cy,
                        color: None,
                    };
                    debug_assert!(w.validate(true).is_ok());
                    if visit(&w) {
                        return Ok(());
                    }
                }
            }
        }
    }
    Ok(())
}

/// All corners of `D(n)` in scan order.
pub fn enumerate_corners(n: u8, opts: ScanOptions) -> Result<Vec<CornerWitness>> {
    let mut out = Vec::new();
    scan_corners(n, opts, |w| {
        out.push(*w);
        false
    })?;
    Ok(out)
}

/// A binary tree witness with `m >= 1` levels below the root.
///
/// `levels[k]` holds the `2^k` points of level `k`; node `j` of level `k`
/// has children `2j` and `2j + 1`. `level_lines[k - 1]` is the common line
/// of level `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeWitness {
    pub levels: Vec<Vec<DiagPoint>>,
    pub level_lines: Vec<LineId>,
    pub color: Option<u8>,
}

impl TreeWitness {
    pub fn m(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    pub fn points(&self) -> impl Iterator<Item = &DiagPoint> {
        self.levels.iter().flatten()
    }
}

/// Checks every tree invariant; with a coloring, additionally checks that
/// all `2^(m+1) - 1` points share one color.
///
/// Shape problems (no levels, wrong level sizes) are errors; a well-shaped
/// witness that fails an invariant yields `Ok(false)`.
pub fn validate_tree(t: &TreeWitness, coloring: Option<&DnColoring>) -> Result<bool> {
    if t.levels.len() < 2 {
        return Err(Error::MalformedWitness("a tree has at least one level".into()));
    }
    let m = t.m();
    if t.level_lines.len() != m {
        return Err(Error::MalformedWitness(format!(
            "expected {m} level lines, got {}",
            t.level_lines.len()
        )));
    }
    for (k, level) in t.levels.iter().enumerate() {
        if level.len() != 1 << k {
            return Err(Error::MalformedWitness(format!(
                "level {k} must have {} points, got {}",
                1 << k,
                level.len()
            )));
        }
    }
    // all points distinct
    let mut seen = HashSet::new();
    for p in t.points() {
        if !seen.insert(*p) {
            return Ok(false);
        }
    }
    // each level k >= 1 lies on its common line
    for k in 1..=m {
        for p in &t.levels[k] {
            if p.is_degenerate() || line_of(p)? != t.level_lines[k - 1] {
                return Ok(false);
            }
        }
    }
    // each parent forms a corner with its two children
    for k in 0..m {
        for (j, parent) in t.levels[k].iter().enumerate() {
            let c0 = t.levels[k + 1][2 * j];
            let c1 = t.levels[k + 1][2 * j + 1];
            match is_corner(parent, &c0, &c1)? {
                Some(w) if w.root == *parent => {}
                _ => return Ok(false),
            }
        }
    }
    if let Some(col) = coloring {
        let c = col.color(&t.levels[0][0]);
        if let Some(expect) = t.color {
            if expect != c {
                return Ok(false);
            }
        }
        if t.points().any(|p| col.color(p) != c) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A weaker tree check that only enforces distinctness, the per-level
/// common-line condition and parent/child coordinate sharing, without
/// requiring each parent-child triple to pass the full corner predicate.
pub fn validate_tree_levels_only(t: &TreeWitness, coloring: Option<&DnColoring>) -> Result<bool> {
    if t.levels.len() < 2 || t.level_lines.len() != t.m() {
        return Err(Error::MalformedWitness("bad tree shape".into()));
    }
    let mut seen = HashSet::new();
    for p in t.points() {
        if !seen.insert(*p) {
            return Ok(false);
        }
    }
    for k in 1..=t.m() {
        if t.levels[k].len() != 1 << k {
            return Err(Error::MalformedWitness("bad level size".into()));
        }
        for p in &t.levels[k] {
            if p.is_degenerate() || line_of(p)? != t.level_lines[k - 1] {
                return Ok(false);
            }
        }
    }
    if let Some(col) = coloring {
        let c = col.color(&t.levels[0][0]);
        if t.points().any(|p| col.color(p) != c) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub const MAX_TREE_N: u8 = 6;
pub const MAX_TREE_M: usize = 3;

/// Brute-force search for a monochromatic `m`-level tree.
///
/// A tree is determined by its root and the sequence of level lines: on a
/// line, the child sharing `x` (resp. `y`) with a parent is unique. Scans
/// roots by canonical index, then line sequences in enumeration order.
pub fn find_tree(coloring: &DnColoring, m: usize) -> Result<Option<TreeWitness>> {
    if m == 0 {
        return Err(Error::MalformedWitness("a tree has at least one level".into()));
    }
    let n = coloring.n();
    if n > MAX_TREE_N || m > MAX_TREE_M {
        return Err(Error::ResourceLimit(format!(
            "tree scan supports n <= {MAX_TREE_N}, m <= {MAX_TREE_M}, got n={n} m={m}"
        )));
    }
    let lines = enumerate_lines(n, 1)?;
    for root in DiagPoint::all_nondegenerate(n) {
        let c = coloring.color(&root);
        let mut levels = vec![vec![root]];
        let mut level_lines = Vec::new();
        if let Some(t) = grow_tree(coloring, c, &lines, &mut levels, &mut level_lines, m)? {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

fn grow_tree(
    coloring: &DnColoring,
    color: u8,
    lines: &[LineId],
    levels: &mut Vec<Vec<DiagPoint>>,
    level_lines: &mut Vec<LineId>,
    m: usize,
) -> Result<Option<TreeWitness>> {
    if levels.len() == m + 1 {
        let t = TreeWitness {
            levels: levels.clone(),
            level_lines: level_lines.clone(),
            color: Some(color),
        };
        if validate_tree(&t, Some(coloring))? {
            return Ok(Some(t));
        }
        return Ok(None);
    }
    'next_line: for line in lines {
        let mut next = Vec::with_capacity(levels.last().unwrap().len() * 2);
        for parent in levels.last().unwrap() {
            let (Some(cx), Some(cy)) = (line.point_with_y(parent.y()), line.point_with_x(parent.x()))
            else {
                continue 'next_line;
            };
            if cx.x() == parent.x() || cy.y() == parent.y() || cx == cy {
                continue 'next_line;
            }
            if coloring.color(&cx) != color || coloring.color(&cy) != color {
                continue 'next_line;
            }
            next.push(cx);
            next.push(cy);
        }
        levels.push(next);
        level_lines.push(*line);
        let found = grow_tree(coloring, color, lines, levels, level_lines, m)?;
        levels.pop();
        level_lines.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// A self-crossing path (`closed = false`) or self-crossing 4-cycle
/// (`closed = true`) on the vertex sequence `x, y, z, w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathWitness {
    pub x: BitWord,
    pub y: BitWord,
    pub z: BitWord,
    pub w: BitWord,
    pub closed: bool,
}

impl PathWitness {
    /// The flip set shared by the two main diagonals.
    pub fn subcube_mask(&self) -> Result<BitWord> {
        self.x.xor(&self.y)
    }

    /// Path segments as unordered pairs, endpoints sorted by the word order.
    pub fn segments(&self) -> Vec<Segment> {
        let mut segs = vec![
            Segment::new(self.x, self.y),
            Segment::new(self.y, self.z),
            Segment::new(self.z, self.w),
        ];
        if self.closed {
            segs.push(Segment::new(self.w, self.x));
        }
        segs
    }
}

/// An unordered pair of distinct cube vertices; endpoints stored in the
/// weight-first order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    pub a: BitWord,
    pub b: BitWord,
}

impl Segment {
    pub fn new(u: BitWord, v: BitWord) -> Self {
        if u <= v {
            Segment { a: u, b: v }
        } else {
            Segment { a: v, b: u }
        }
    }
}

/// Decides whether `{x,y}, {y,z}, {z,w}` form a self-crossing path: the
/// outer segments are main diagonals of the same affine subcube.
pub fn is_self_crossing(
    x: BitWord,
    y: BitWord,
    z: BitWord,
    w: BitWord,
    closed: bool,
) -> Result<Option<PathWitness>> {
    x.check_same_n(&y)?;
    x.check_same_n(&z)?;
    x.check_same_n(&w)?;
    let vs = [x, y, z, w];
    for i in 0..4 {
        for j in i + 1..4 {
            if vs[i] == vs[j] {
                return Ok(None);
            }
        }
    }
    let mask = x.xor(&y)?;
    if mask.is_zero() || mask != z.xor(&w)? {
        return Ok(None);
    }
    // x and z must agree off the flip set
    if x.value() & !mask.value() != z.value() & !mask.value() {
        return Ok(None);
    }
    Ok(Some(PathWitness { x, y, z, w, closed }))
}

/// True iff the four distinct vertices span a plane: the three difference
/// vectors have rank at most 2 over the rationals, decided in exact integer
/// arithmetic.
pub fn is_coplanar(v1: BitWord, v2: BitWord, v3: BitWord, v4: BitWord) -> Result<bool> {
    v1.check_same_n(&v2)?;
    v1.check_same_n(&v3)?;
    v1.check_same_n(&v4)?;
    let vs = [v1, v2, v3, v4];
    for i in 0..4 {
        for j in i + 1..4 {
            if vs[i] == vs[j] {
                return Err(Error::InvalidInput("coplanarity needs four distinct vertices".into()));
            }
        }
    }
    let n = v1.n();
    let mut rows: Vec<Vec<i64>> = [v2, v3, v4]
        .iter()
        .map(|v| {
            (1..=n)
                .map(|i| v.get(i) as i64 - v1.get(i) as i64)
                .collect()
        })
        .collect();
    Ok(integer_rank(&mut rows) <= 2)
}

/// Row-echelon rank by fraction-free (Bareiss-style) elimination.
fn integer_rank(rows: &mut [Vec<i64>]) -> usize {
    let nrows = rows.len();
    let ncols = if nrows == 0 { 0 } else { rows[0].len() };
    let mut rank = 0;
    let mut col = 0;
    while rank < nrows && col < ncols {
        let Some(pivot) = (rank..nrows).find(|&i| rows[i][col] != 0) else {
            col += 1;
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank][col];
        for i in rank + 1..nrows {
            let f = rows[i][col];
            if f != 0 {
                for j in col..ncols {
                    rows[i][j] = rows[i][j] * p - rows[rank][j] * f;
                }
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}
