//! Exact backtracking search for colorings that avoid a monochromatic
//! target structure at small `n`. Structures are pre-enumerated through the
//! detector predicates, indexed by their largest domain point, and checked
//! incrementally as the depth-first assignment advances.

use std::collections::{BTreeSet, HashMap};
use std::time::{Duration, Instant};

use crate::detect::{enumerate_corners, is_coplanar, is_self_crossing, ScanOptions, Segment};
use crate::error::Error;
use crate::hj::{Alphabet, HJPoint};
use crate::line::enumerate_lines;
use crate::point::DiagPoint;
use crate::word::BitWord;
use crate::Result;

/// What gets colored: diagonal-space points, digit words, or cube segments
/// (unordered vertex pairs, ranked by value-ordered endpoints).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    Dn(u8),
    Alphabet4(u8),
    Alphabet3(u8),
    Segments(u8),
}

impl Domain {
    pub fn n(&self) -> u8 {
        match *self {
            Domain::Dn(n)
            | Domain::Alphabet4(n)
            | Domain::Alphabet3(n)
            | Domain::Segments(n) => n,
        }
    }

    pub fn size(&self) -> usize {
        let n = self.n() as u32;
        match self {
            Domain::Dn(_) => 4usize.pow(n) - 2usize.pow(n),
            Domain::Alphabet4(_) => 4usize.pow(n),
            Domain::Alphabet3(_) => 3usize.pow(n),
            Domain::Segments(_) => {
                let v = 2usize.pow(n);
                v * (v - 1) / 2
            }
        }
    }

    fn max_n(&self) -> u8 {
        match self {
            Domain::Dn(_) => 4,
            Domain::Alphabet4(_) => 5,
            Domain::Alphabet3(_) => 6,
            Domain::Segments(_) => 4,
        }
    }
}

/// The structure whose monochromatic copies must be avoided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Corner,
    Tree(usize),
    Scp,
    Sc4,
    Coplanar6,
    HjLine4,
    HjLine3,
}

impl Target {
    /// The domain kind a target is defined over.
    pub fn compatible_with(&self, domain: &Domain) -> bool {
        matches!(
            (self, domain),
            (Target::Corner | Target::Tree(_), Domain::Dn(_))
                | (Target::HjLine4, Domain::Alphabet4(_))
                | (Target::HjLine3, Domain::Alphabet3(_))
                | (Target::Scp | Target::Sc4 | Target::Coplanar6, Domain::Segments(_))
        )
    }

    /// The domain kind a target naturally lives on, at dimension `n`.
    pub fn natural_domain(&self, n: u8) -> Domain {
        match self {
            Target::Corner | Target::Tree(_) => Domain::Dn(n),
            Target::HjLine4 => Domain::Alphabet4(n),
            Target::HjLine3 => Domain::Alphabet3(n),
            Target::Scp | Target::Sc4 | Target::Coplanar6 => Domain::Segments(n),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchProblem {
    pub domain: Domain,
    pub r: u8,
    pub target: Target,
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    /// Fix the first point's color and prune assignments that are not
    /// lexicographically minimal under coordinate permutations.
    pub symmetry: bool,
}

impl SearchProblem {
    pub fn new(domain: Domain, r: u8, target: Target) -> Self {
        SearchProblem {
            domain,
            r,
            target,
            node_budget: None,
            time_budget: None,
            symmetry: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.r == 0 {
            return Err(Error::InvalidInput("need at least one color".into()));
        }
        let n = self.domain.n();
        if n == 0 || n > self.domain.max_n() {
            return Err(Error::ResourceLimit(format!(
                "search domain dimension {n} outside 1..={}",
                self.domain.max_n()
            )));
        }
        if !self.target.compatible_with(&self.domain) {
            return Err(Error::InvalidInput(format!(
                "target {:?} is not defined over domain {:?}",
                self.target, self.domain
            )));
        }
        if let Target::Tree(m) = self.target {
            if m == 0 || m > 3 {
                return Err(Error::InvalidInput(format!(
                    "tree depth {m} outside 1..=3"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    /// A coloring with no monochromatic target; verified structure-free
    /// before being reported.
    AvoidanceFound(Vec<u8>),
    /// The full tree was explored: every coloring contains the target.
    Exhausted,
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub nodes_visited: u64,
}

/// All copies of the target, as sorted domain-index sets.
pub fn target_structures(domain: &Domain, target: &Target) -> Result<Vec<Vec<usize>>> {
    let n = domain.n();
    let mut sets: BTreeSet<Vec<usize>> = BTreeSet::new();
    match (target, domain) {
        (Target::Corner, Domain::Dn(_)) => {
            let index_of = dn_index_map(n);
            for w in enumerate_corners(n, ScanOptions::default())? {
                sets.insert(sorted_indices(
                    w.points().iter().map(|p| index_of[&p.canonical_index()]),
                ));
            }
        }
        (Target::Tree(m), Domain::Dn(_)) => {
            let index_of = dn_index_map(n);
            tree_structures(n, *m, &index_of, &mut sets)?;
        }
        (Target::HjLine4, Domain::Alphabet4(_)) => {
            line_structures(Alphabet::Four, n as usize, &mut sets)?;
        }
        (Target::HjLine3, Domain::Alphabet3(_)) => {
            line_structures(Alphabet::Three, n as usize, &mut sets)?;
        }
        (Target::Scp, Domain::Segments(_)) => {
            path_structures(n, false, &mut sets)?;
        }
        (Target::Sc4, Domain::Segments(_)) => {
            path_structures(n, true, &mut sets)?;
        }
        (Target::Coplanar6, Domain::Segments(_)) => {
            coplanar_structures(n, &mut sets)?;
        }
        _ => {
            return Err(Error::InvalidInput(format!(
                "target {target:?} is not defined over domain {domain:?}"
            )))
        }
    }
    Ok(sets.into_iter().collect())
}

/// How many copies of the target are monochromatic under `colors`. Zero on
/// a valid avoidance certificate.
pub fn count_mono_structures(domain: &Domain, target: &Target, colors: &[u8]) -> Result<usize> {
    if colors.len() != domain.size() {
        return Err(Error::InvalidInput(format!(
            "coloring has {} entries, domain has {}",
            colors.len(),
            domain.size()
        )));
    }
    Ok(target_structures(domain, target)?
        .iter()
        .filter(|s| s.iter().all(|&i| colors[i] == colors[s[0]]))
        .count())
}

pub fn search(problem: &SearchProblem) -> Result<SearchOutcome> {
    problem.validate()?;
    let size = problem.domain.size();
    let structures = target_structures(&problem.domain, &problem.target)?;
    let mut by_max: Vec<Vec<usize>> = vec![Vec::new(); size];
    for (id, s) in structures.iter().enumerate() {
        by_max[*s.last().expect("structures are nonempty")].push(id);
    }
    let perms = if problem.symmetry {
        permutation_index_maps(&problem.domain)?
    } else {
        Vec::new()
    };
    let deadline = problem.time_budget.map(|d| Instant::now() + d);
    let mut ctx = Ctx {
        r: problem.r,
        size,
        structures: &structures,
        by_max: &by_max,
        perms: &perms,
        symmetry: problem.symmetry,
        node_budget: problem.node_budget,
        deadline,
        nodes: 0,
    };
    let mut colors = vec![0u8; size];
    let status = match dfs(&mut ctx, &mut colors, 0) {
        Walk::Found => {
            if count_mono_structures(&problem.domain, &problem.target, &colors)? != 0 {
                return Err(Error::InternalInvariant(
                    "search reported a coloring containing the target".into(),
                ));
            }
            SearchStatus::AvoidanceFound(colors)
        }
        Walk::Done => SearchStatus::Exhausted,
        Walk::Budget => SearchStatus::BudgetExceeded,
    };
    Ok(SearchOutcome {
        status,
        nodes_visited: ctx.nodes,
    })
}

/// Result of scanning dimensions `1..=n_max` for the first forced level.
#[derive(Clone, Debug)]
pub struct RamseyScan {
    pub per_n: Vec<(u8, SearchOutcome)>,
    /// Smallest scanned `n` where every coloring contains the target.
    pub first_exhausted: Option<u8>,
}

/// Runs the search on the target's natural domain for `n = 1, 2, ...`,
/// stopping at the first exhausted level or at `n_max`.
pub fn first_ramsey_n(
    r: u8,
    target: Target,
    n_max: u8,
    node_budget: Option<u64>,
    symmetry: bool,
) -> Result<RamseyScan> {
    let mut per_n = Vec::new();
    let mut first_exhausted = None;
    for n in 1..=n_max {
        let mut problem = SearchProblem::new(target.natural_domain(n), r, target);
        problem.node_budget = node_budget;
        problem.symmetry = symmetry;
        let outcome = search(&problem)?;
        let exhausted = outcome.status == SearchStatus::Exhausted;
        per_n.push((n, outcome));
        if exhausted {
            first_exhausted = Some(n);
            break;
        }
    }
    Ok(RamseyScan {
        per_n,
        first_exhausted,
    })
}

struct Ctx<'a> {
    r: u8,
    size: usize,
    structures: &'a [Vec<usize>],
    by_max: &'a [Vec<usize>],
    perms: &'a [Vec<usize>],
    symmetry: bool,
    node_budget: Option<u64>,
    deadline: Option<Instant>,
    nodes: u64,
}

enum Walk {
    Found,
    Done,
    Budget,
}

fn dfs(ctx: &mut Ctx, colors: &mut [u8], k: usize) -> Walk {
    if k == ctx.size {
        return Walk::Found;
    }
    let top = if ctx.symmetry && k == 0 { 1 } else { ctx.r };
    for c in 0..top {
        ctx.nodes += 1;
        if let Some(budget) = ctx.node_budget {
            if ctx.nodes > budget {
                return Walk::Budget;
            }
        }
        if let Some(deadline) = ctx.deadline {
            if ctx.nodes % 1024 == 0 && Instant::now() > deadline {
                return Walk::Budget;
            }
        }
        colors[k] = c;
        let blocked = ctx.by_max[k]
            .iter()
            .any(|&id| is_mono(&ctx.structures[id], colors));
        if blocked {
            continue;
        }
        if ctx.symmetry && !is_lex_min_prefix(ctx.perms, colors, k) {
            continue;
        }
        match dfs(ctx, colors, k + 1) {
            Walk::Done => {}
            done => return done,
        }
    }
    Walk::Done
}

fn is_mono(structure: &[usize], colors: &[u8]) -> bool {
    let first = colors[structure[0]];
    structure.iter().all(|&i| colors[i] == first)
}

/// True unless some coordinate permutation maps the assigned prefix to a
/// strictly smaller one. Comparison stops where the permuted index is not
/// yet assigned; only a decided strict decrease prunes.
fn is_lex_min_prefix(perms: &[Vec<usize>], colors: &[u8], k: usize) -> bool {
    for perm in perms {
        for i in 0..=k {
            let j = perm[i];
            if j > k {
                break;
            }
            if colors[j] < colors[i] {
                return false;
            }
            if colors[j] > colors[i] {
                break;
            }
        }
    }
    true
}

fn dn_index_map(n: u8) -> HashMap<u128, usize> {
    DiagPoint::all_nondegenerate(n)
        .enumerate()
        .map(|(i, p)| (p.canonical_index(), i))
        .collect()
}

fn sorted_indices(it: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = it.collect();
    v.sort_unstable();
    v.dedup();
    v
}

fn tree_structures(
    n: u8,
    m: usize,
    index_of: &HashMap<u128, usize>,
    sets: &mut BTreeSet<Vec<usize>>,
) -> Result<()> {
    let lines = enumerate_lines(n, 1)?;
    for root in DiagPoint::all_nondegenerate(n) {
        grow(&lines, m, vec![root], vec![root], index_of, sets);
    }
    Ok(())
}

fn grow(
    lines: &[crate::line::LineId],
    depth_left: usize,
    frontier: Vec<DiagPoint>,
    all: Vec<DiagPoint>,
    index_of: &HashMap<u128, usize>,
    sets: &mut BTreeSet<Vec<usize>>,
) {
    if depth_left == 0 {
        sets.insert(sorted_indices(
            all.iter().map(|p| index_of[&p.canonical_index()]),
        ));
        return;
    }
    'lines: for line in lines {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for parent in &frontier {
            let (Some(cy), Some(cx)) = (line.point_with_y(parent.y()), line.point_with_x(parent.x()))
            else {
                continue 'lines;
            };
            if cy.x() == parent.x() || cx.y() == parent.y() {
                continue 'lines;
            }
            next.push(cy);
            next.push(cx);
        }
        let mut grown = all.clone();
        grown.extend(next.iter().copied());
        let distinct: BTreeSet<u128> = grown.iter().map(|p| p.canonical_index()).collect();
        if distinct.len() != grown.len() {
            continue;
        }
        grow(lines, depth_left - 1, next, grown, index_of, sets);
    }
}

fn line_structures(
    alphabet: Alphabet,
    n: usize,
    sets: &mut BTreeSet<Vec<usize>>,
) -> Result<()> {
    let base = alphabet.size() as usize;
    let kinds = base + 2;
    let decreasing: [u8; 3] = match alphabet {
        Alphabet::Four => [3, 2, 1],
        Alphabet::Three => [0, 2, 1],
    };
    let total = kinds.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let mut rows: [Vec<u8>; 3] = [Vec::new(), Vec::new(), Vec::new()];
        let mut active = false;
        for _ in 0..n {
            let kind = c % kinds;
            c /= kinds;
            let col: [u8; 3] = if kind < base {
                [kind as u8; 3]
            } else if kind == base {
                active = true;
                [0, 1, 2]
            } else {
                active = true;
                decreasing
            };
            for (row, &d) in col.iter().enumerate() {
                rows[row].push(d);
            }
        }
        if !active {
            continue;
        }
        let mut idx = [0usize; 3];
        for (slot, digits) in idx.iter_mut().zip(rows.iter()) {
            *slot = HJPoint::new(alphabet, digits.clone())?.index();
        }
        sets.insert(sorted_indices(idx.into_iter()));
    }
    Ok(())
}

/// Segments in canonical rank order: endpoint pairs ascending by value.
pub fn segment_domain(n: u8) -> Vec<Segment> {
    let mut out = Vec::new();
    for u in BitWord::all(n) {
        for v in BitWord::all(n) {
            if v.value() > u.value() {
                out.push(Segment::new(u, v));
            }
        }
    }
    out
}

fn segment_index_map(n: u8) -> HashMap<Segment, usize> {
    segment_domain(n)
        .into_iter()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect()
}

fn path_structures(n: u8, closed: bool, sets: &mut BTreeSet<Vec<usize>>) -> Result<()> {
    let index_of = segment_index_map(n);
    let vertices: Vec<BitWord> = BitWord::all(n).collect();
    for &x in &vertices {
        for &y in &vertices {
            for &z in &vertices {
                for &w in &vertices {
                    if let Some(path) = is_self_crossing(x, y, z, w, closed)? {
                        sets.insert(sorted_indices(
                            path.segments().iter().map(|s| index_of[s]),
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

fn coplanar_structures(n: u8, sets: &mut BTreeSet<Vec<usize>>) -> Result<()> {
    let index_of = segment_index_map(n);
    let vertices: Vec<BitWord> = BitWord::all(n).collect();
    let v = vertices.len();
    for a in 0..v {
        for b in a + 1..v {
            for c in b + 1..v {
                for d in c + 1..v {
                    let quad = [vertices[a], vertices[b], vertices[c], vertices[d]];
                    if is_coplanar(quad[0], quad[1], quad[2], quad[3])? {
                        let mut idx = Vec::with_capacity(6);
                        for i in 0..4 {
                            for j in i + 1..4 {
                                idx.push(index_of[&Segment::new(quad[i], quad[j])]);
                            }
                        }
                        sets.insert(sorted_indices(idx.into_iter()));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Index maps of the coordinate-permutation action on the domain, identity
/// excluded: entry `i` is the index of the permuted image of point `i`.
fn permutation_index_maps(domain: &Domain) -> Result<Vec<Vec<usize>>> {
    let n = domain.n();
    let mut maps = Vec::new();
    for perm in coordinate_permutations(n).into_iter().skip(1) {
        let map = match domain {
            Domain::Dn(_) => {
                let index_of = dn_index_map(n);
                DiagPoint::all_nondegenerate(n)
                    .map(|p| {
                        let q = DiagPoint::new(
                            permute_word(&p.x(), &perm),
                            permute_word(&p.y(), &perm),
                        )
                        .expect("same n");
                        index_of[&q.canonical_index()]
                    })
                    .collect()
            }
            Domain::Alphabet4(_) | Domain::Alphabet3(_) => {
                let alphabet = if matches!(domain, Domain::Alphabet4(_)) {
                    Alphabet::Four
                } else {
                    Alphabet::Three
                };
                HJPoint::all(alphabet, n as usize)
                    .map(|p| {
                        let digits: Vec<u8> =
                            perm.iter().map(|&src| p.digits()[src as usize - 1]).collect();
                        HJPoint::new(alphabet, digits).expect("same length").index()
                    })
                    .collect()
            }
            Domain::Segments(_) => {
                let index_of = segment_index_map(n);
                let mut ordered: Vec<(usize, Segment)> =
                    index_of.iter().map(|(s, &i)| (i, *s)).collect();
                ordered.sort_unstable_by_key(|&(i, _)| i);
                ordered
                    .into_iter()
                    .map(|(_, s)| {
                        let image =
                            Segment::new(permute_word(&s.a, &perm), permute_word(&s.b, &perm));
                        index_of[&image]
                    })
                    .collect()
            }
        };
        maps.push(map);
    }
    Ok(maps)
}

/// Applies a coordinate permutation: position `j` of the image takes the
/// bit at position `perm[j-1]` of the source.
fn permute_word(w: &BitWord, perm: &[u8]) -> BitWord {
    let mut out = BitWord::zero(w.n()).expect("valid n");
    for (j, &src) in perm.iter().enumerate() {
        out = out.with_bit(j as u8 + 1, w.get(src));
    }
    out
}

fn coordinate_permutations(n: u8) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut current: Vec<u8> = (1..=n).collect();
    heap_permute(&mut current, n as usize, &mut out);
    out.sort_unstable();
    out
}

fn heap_permute(v: &mut Vec<u8>, k: usize, out: &mut Vec<Vec<u8>>) {
    if k <= 1 {
        out.push(v.clone());
        return;
    }
    for i in 0..k {
        heap_permute(v, k - 1, out);
        if k % 2 == 0 {
            v.swap(i, k - 1);
        } else {
            v.swap(0, k - 1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::is_corner;

    fn dn_points(n: u8) -> Vec<DiagPoint> {
        DiagPoint::all_nondegenerate(n).collect()
    }

    #[test]
    fn domain_sizes() {
        assert_eq!(Domain::Dn(2).size(), 12);
        assert_eq!(Domain::Alphabet4(2).size(), 16);
        assert_eq!(Domain::Alphabet3(2).size(), 9);
        assert_eq!(Domain::Segments(2).size(), 6);
    }

    #[test]
    fn invalid_problems_are_rejected() {
        let p = SearchProblem::new(Domain::Segments(2), 2, Target::Corner);
        assert!(matches!(p.validate(), Err(Error::InvalidInput(_))));
        let p = SearchProblem::new(Domain::Dn(2), 0, Target::Corner);
        assert!(matches!(p.validate(), Err(Error::InvalidInput(_))));
        let p = SearchProblem::new(Domain::Dn(9), 2, Target::Corner);
        assert!(matches!(p.validate(), Err(Error::ResourceLimit(_))));
        let p = SearchProblem::new(Domain::Dn(2), 2, Target::Tree(0));
        assert!(matches!(p.validate(), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn corner_structures_match_the_detector() {
        for n in 1..=3u8 {
            let structures = target_structures(&Domain::Dn(n), &Target::Corner).unwrap();
            let points = dn_points(n);
            for s in &structures {
                assert_eq!(s.len(), 3);
                let triple = [points[s[0]], points[s[1]], points[s[2]]];
                assert!(is_corner(&triple[0], &triple[1], &triple[2])
                    .unwrap()
                    .is_some());
            }
            if n == 1 {
                assert!(structures.is_empty());
            } else {
                assert!(!structures.is_empty());
            }
        }
    }

    #[test]
    fn depth_one_trees_are_corners() {
        for n in 2..=3u8 {
            let corners = target_structures(&Domain::Dn(n), &Target::Corner).unwrap();
            let trees = target_structures(&Domain::Dn(n), &Target::Tree(1)).unwrap();
            assert_eq!(corners, trees);
        }
    }

    #[test]
    fn dn1_avoidance_is_trivial() {
        let outcome = search(&SearchProblem::new(Domain::Dn(1), 2, Target::Corner)).unwrap();
        match outcome.status {
            SearchStatus::AvoidanceFound(colors) => assert_eq!(colors, vec![0, 0]),
            other => panic!("expected trivial avoidance, got {other:?}"),
        }
    }

    #[test]
    fn certificate_replays_structure_free() {
        let domain = Domain::Alphabet3(2);
        let problem = SearchProblem::new(domain, 3, Target::HjLine3);
        let outcome = search(&problem).unwrap();
        if let SearchStatus::AvoidanceFound(colors) = &outcome.status {
            assert_eq!(
                count_mono_structures(&domain, &Target::HjLine3, colors).unwrap(),
                0
            );
        }
    }

    #[test]
    fn budget_zero_stops_immediately() {
        let mut problem = SearchProblem::new(Domain::Dn(2), 2, Target::Corner);
        problem.node_budget = Some(0);
        let outcome = search(&problem).unwrap();
        assert_eq!(outcome.status, SearchStatus::BudgetExceeded);
    }

    #[test]
    fn symmetry_does_not_change_the_status() {
        let cases = [
            (Domain::Dn(2), 2, Target::Corner),
            (Domain::Alphabet3(2), 2, Target::HjLine3),
            (Domain::Segments(2), 2, Target::Scp),
        ];
        for (domain, r, target) in cases {
            let plain = search(&SearchProblem::new(domain, r, target)).unwrap();
            let mut sym = SearchProblem::new(domain, r, target);
            sym.symmetry = true;
            let reduced = search(&sym).unwrap();
            let same = match (&plain.status, &reduced.status) {
                (SearchStatus::AvoidanceFound(a), SearchStatus::AvoidanceFound(b)) => a == b,
                (a, b) => a == b,
            };
            assert!(same, "{domain:?} {target:?}: {plain:?} vs {reduced:?}");
            assert!(reduced.nodes_visited <= plain.nodes_visited);
        }
    }

    #[test]
    fn dn2_two_color_corner_regression() {
        // frozen: the exhaustive search is its own oracle at this size
        let outcome = search(&SearchProblem::new(Domain::Dn(2), 2, Target::Corner)).unwrap();
        assert_eq!(outcome.nodes_visited, 14);
        assert_eq!(
            outcome.status,
            SearchStatus::AvoidanceFound(vec![0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0])
        );
        let scan = first_ramsey_n(2, Target::Corner, 2, None, false).unwrap();
        assert_eq!(scan.first_exhausted, None);
    }

    #[test]
    fn first_forced_level_for_one_color() {
        // with a single color any structure present is monochromatic, so
        // the first exhausted level is the first level where one exists
        let scan = first_ramsey_n(1, Target::Corner, 3, None, false).unwrap();
        assert_eq!(scan.first_exhausted, Some(2));
        // a self-crossing path needs four distinct vertices, so none at n=1
        let scan = first_ramsey_n(1, Target::Scp, 3, None, false).unwrap();
        assert_eq!(scan.first_exhausted, Some(2));
    }

    #[test]
    fn search_is_deterministic() {
        let problem = SearchProblem::new(Domain::Dn(2), 2, Target::Corner);
        let a = search(&problem).unwrap();
        let b = search(&problem).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn permutations_are_complete() {
        assert_eq!(coordinate_permutations(3).len(), 6);
        assert_eq!(coordinate_permutations(1), vec![vec![1]]);
        let w = BitWord::new(3, 0b110).unwrap();
        let swapped = permute_word(&w, &[3, 2, 1]);
        assert_eq!(swapped.value(), 0b011);
    }
}
