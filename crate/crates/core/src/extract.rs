//! Iterated popular-color selection on lines: start from the full-flip
//! line, take the most popular color class, form its grid, prune small and
//! deficient lines, and repeat. Faithful mode enforces every density
//! inequality along the way and names the first one that fails; greedy mode
//! keeps going while the grid is nonempty and assembles the deepest tree it
//! can from same-colored steps.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::coloring::DnColoring;
use crate::detect::{validate_tree, TreeWitness};
use crate::error::Error;
use crate::line::{grid_of, line_of, line_points, LineId};
use crate::point::DiagPoint;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Enforce the density inequalities; fail with the first violated one.
    Faithful,
    /// Run while the grid is nonempty and assemble whatever is there.
    Greedy,
}

/// Knobs of the extraction loop. The defaults mirror the thresholds used in
/// the density argument: lines are *small* below a third of the ambient
/// dimension and *deficient* below a quarter of the expected density.
#[derive(Clone, Debug)]
pub struct ExtractionParams {
    pub r: u8,
    pub m: usize,
    pub mode: Mode,
    pub dim_fraction: BigRational,
    pub deficiency_factor: BigRational,
    /// Base of the binomial tail bound, `19/10`.
    pub tail_base: BigRational,
    /// Base of the viability threshold `alpha_i >= 2 * (19/20)^n`.
    pub viability_base: BigRational,
    /// Safety cap on greedy steps; faithful mode always runs `r * m` steps.
    pub max_steps: usize,
}

impl ExtractionParams {
    pub fn new(r: u8, m: usize, mode: Mode) -> Result<Self> {
        if r == 0 || m == 0 {
            return Err(Error::InvalidInput("need r >= 1 and m >= 1".into()));
        }
        Ok(ExtractionParams {
            r,
            m,
            mode,
            dim_fraction: ratio(1, 3),
            deficiency_factor: ratio(1, 4),
            tail_base: ratio(19, 10),
            viability_base: ratio(19, 20),
            max_steps: 64,
        })
    }

    fn validate(&self) -> Result<()> {
        let zero = BigRational::zero();
        let one = BigRational::one();
        if self.dim_fraction <= zero || self.dim_fraction >= one {
            return Err(Error::InvalidInput("dim_fraction must be in (0,1)".into()));
        }
        if self.deficiency_factor <= zero || self.deficiency_factor >= one {
            return Err(Error::InvalidInput("deficiency_factor must be in (0,1)".into()));
        }
        if self.r == 0 || self.m == 0 {
            return Err(Error::InvalidInput("need r >= 1 and m >= 1".into()));
        }
        Ok(())
    }
}

fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn pow_rational(base: &BigRational, exp: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// `alpha_k = 1 / (2^(2^(k+2) - 6) * r^(2^(k+1) - 2))`, exact.
pub fn alpha(r: u32, k: u32) -> BigRational {
    assert!(r >= 1 && k >= 1, "alpha needs r >= 1, k >= 1");
    assert!(k <= 24, "alpha exponent out of supported range");
    let two_exp = (1u64 << (k + 2)) - 6;
    let r_exp = (1u64 << (k + 1)) - 2;
    let den = BigInt::from(2u32).pow(two_exp as u32) * BigInt::from(r).pow(r_exp as u32);
    BigRational::new(BigInt::one(), den)
}

/// Same value by iterating `alpha_{i+1} = (alpha_i / 8r)^2` from
/// `alpha_1 = 1 / (4 r^2)`.
pub fn alpha_by_recurrence(r: u32, k: u32) -> BigRational {
    assert!(r >= 1 && k >= 1);
    let mut a = BigRational::new(BigInt::one(), BigInt::from(4u32) * BigInt::from(r) * BigInt::from(r));
    let denom = BigRational::from(BigInt::from(8u32) * BigInt::from(r));
    for _ in 1..k {
        let q = &a / &denom;
        a = &q * &q;
    }
    a
}

/// True iff `sum_{3t < n} C(n, t) < (19/10)^n`, in exact integer arithmetic.
pub fn binomial_tail_ok(n: u32) -> bool {
    assert!(n >= 1);
    let mut sum = BigInt::zero();
    let mut binom = BigInt::one(); // C(n, 0)
    let mut t = 0u32;
    while 3 * t < n {
        sum += &binom;
        binom = binom * BigInt::from(n - t) / BigInt::from(t + 1);
        t += 1;
    }
    // sum < (19/10)^n  <=>  sum * 10^n < 19^n
    sum * BigInt::from(10u32).pow(n) < BigInt::from(19u32).pow(n)
}

/// `ceil(c * 6^(r m))`.
pub fn n0_estimate(r: u32, m: u32, c: &BigRational) -> Result<u64> {
    if r == 0 || m == 0 || !c.is_positive() {
        return Err(Error::InvalidInput("need r, m >= 1 and c > 0".into()));
    }
    let rm = r
        .checked_mul(m)
        .ok_or_else(|| Error::ResourceLimit("r * m overflows".into()))?;
    if rm > 128 {
        return Err(Error::ResourceLimit(format!("6^{rm} out of range")));
    }
    let value = c * BigRational::from(BigInt::from(6u32).pow(rm));
    value
        .ceil()
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::ResourceLimit("estimate exceeds u64".into()))
}

/// One recorded inequality instance, both sides exact.
#[derive(Clone, Debug)]
pub struct InequalityRecord {
    pub step: usize,
    pub name: String,
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub holds: bool,
}

/// One step of the loop: the chosen line, the popular color class on it,
/// and the grid that class generates.
#[derive(Clone, Debug)]
pub struct StepRecord {
    pub step: usize,
    pub line: LineId,
    pub dim: u32,
    pub color: u8,
    pub s_points: Vec<DiagPoint>,
    /// Nondegenerate points of the grid generated by `s_points`.
    pub next_grid_size: usize,
    /// Density guarantee in force when this step's line was chosen
    /// (`None` for the initial full-flip step).
    pub alpha: Option<BigRational>,
}

#[derive(Clone, Debug)]
pub enum ExtractionOutcome {
    Witness(TreeWitness),
    Failed(Error),
}

#[derive(Clone, Debug)]
pub struct ExtractionTrace {
    pub steps: Vec<StepRecord>,
    pub inequalities: Vec<InequalityRecord>,
    pub outcome: ExtractionOutcome,
}

impl ExtractionTrace {
    pub fn witness(&self) -> Option<&TreeWitness> {
        match &self.outcome {
            ExtractionOutcome::Witness(t) => Some(t),
            ExtractionOutcome::Failed(_) => None,
        }
    }
}

/// Line classification over a grid: lines that are neither small nor
/// deficient, plus the surviving points (exactly those on good lines).
///
/// Every point of `grid` must be nondegenerate; each lies on a unique line,
/// so the classification partitions the grid.
pub fn prune_lines(
    grid: &[DiagPoint],
    n_current: u32,
    alpha_current: &BigRational,
    params: &ExtractionParams,
) -> Result<(Vec<LineId>, Vec<DiagPoint>)> {
    use std::collections::HashMap;
    let mut by_line: HashMap<LineId, Vec<DiagPoint>> = HashMap::new();
    for p in grid {
        if p.is_degenerate() {
            return Err(Error::DegeneratePoint);
        }
        by_line.entry(line_of(p)?).or_default().push(*p);
    }
    let small_threshold = &params.dim_fraction * BigRational::from(BigInt::from(n_current));
    let mut good: Vec<(LineId, Vec<DiagPoint>)> = Vec::new();
    for (line, pts) in by_line {
        let t = line.dimension();
        let small = BigRational::from(BigInt::from(t)) < small_threshold;
        let capacity = BigRational::from(BigInt::from(2u64).pow(t));
        let deficient_threshold = &params.deficiency_factor * alpha_current * capacity;
        let deficient = BigRational::from(BigInt::from(pts.len())) <= deficient_threshold;
        if !small && !deficient {
            good.push((line, pts));
        }
    }
    good.sort_by(|(a, _), (b, _)| {
        b.dimension()
            .cmp(&a.dimension())
            .then(a.flip_mask().value().cmp(&b.flip_mask().value()))
            .then(a.fixed().value().cmp(&b.fixed().value()))
    });
    let mut surviving = Vec::new();
    let lines: Vec<LineId> = good
        .into_iter()
        .map(|(line, mut pts)| {
            pts.sort_by_key(|p| p.canonical_index());
            surviving.extend(pts);
            line
        })
        .collect();
    surviving.sort_by_key(|p| p.canonical_index());
    Ok((lines, surviving))
}

/// Runs the extraction loop on a total coloring of `D(n)`.
///
/// Input validation problems are returned as `Err`; everything the loop
/// itself decides (a witness, a violated inequality, an exhausted grid)
/// lands in the trace's `outcome`.
pub fn extract_tree(coloring: &DnColoring, params: &ExtractionParams) -> Result<ExtractionTrace> {
    params.validate()?;
    if params.r != coloring.r() {
        return Err(Error::InvalidInput(format!(
            "params.r = {} but coloring has r = {}",
            params.r,
            coloring.r()
        )));
    }
    let n = coloring.n();
    let r = params.r as u32;
    let mut steps: Vec<StepRecord> = Vec::new();
    let mut log: Vec<InequalityRecord> = Vec::new();

    // step 0: popular color on the full-flip line
    let full = LineId::full(n)?;
    let full_pts = line_points(&full);
    let (c0, s0) = popular_subset(coloring, &full_pts);
    record(
        &mut log,
        0,
        "|S_0| >= 2^n / r",
        BigRational::from(BigInt::from(s0.len())),
        ratio(1, 1) * BigRational::new(BigInt::from(2u64).pow(n as u32), BigInt::from(r)),
    );
    let mut grid = nondegenerate(grid_of(&s0)?);
    steps.push(StepRecord {
        step: 0,
        line: full,
        dim: n as u32,
        color: c0,
        s_points: s0,
        next_grid_size: grid.len(),
        alpha: None,
    });

    let total_steps = match params.mode {
        Mode::Faithful => r as usize * params.m,
        Mode::Greedy => params.max_steps,
    };
    let mut prev_grid = grid.clone();
    let mut n_prev = n as u32;
    let mut failure: Option<Error> = None;

    for i in 1..=total_steps {
        let a = alpha(r, i as u32);
        // viability of the pruning bound at the current ambient dimension
        let viability_rhs = ratio(2, 1) * pow_rational(&params.viability_base, n_prev);
        let viable = record(
            &mut log,
            i,
            "alpha_i >= 2 * (19/20)^n_prev",
            a.clone(),
            viability_rhs,
        );
        // grid density
        let four_pow = BigRational::from(BigInt::from(4u64).pow(n_prev.min(63)));
        let grid_ok = record(
            &mut log,
            i,
            "|G_i| >= alpha_i * 4^n_prev",
            BigRational::from(BigInt::from(grid.len())),
            &a * &four_pow,
        );
        if params.mode == Mode::Faithful {
            if !grid_ok {
                failure = Some(violated(i, "|G_i| >= alpha_i * 4^n_prev", &log));
                break;
            }
            if !viable {
                failure = Some(violated(i, "alpha_i >= 2 * (19/20)^n_prev", &log));
                break;
            }
        }
        let (good_lines, surviving) = prune_lines(&grid, n_prev, &a, params)?;
        let remaining_ok = record(
            &mut log,
            i,
            "|surviving| >= (alpha_i/2) * 4^n_prev",
            BigRational::from(BigInt::from(surviving.len())),
            &a / ratio(2, 1) * &four_pow,
        );
        if params.mode == Mode::Faithful && !remaining_ok {
            failure = Some(violated(i, "|surviving| >= (alpha_i/2) * 4^n_prev", &log));
            break;
        }
        if good_lines.is_empty() {
            if params.mode == Mode::Faithful {
                failure = Some(Error::GuaranteeViolated(format!(
                    "step {i}: no good line survives pruning"
                )));
            }
            break;
        }
        // pick the good line maximizing density |L cap G| / 2^dim;
        // ties: larger dimension, then classification order
        let line = *good_lines
            .iter()
            .max_by(|a, b| {
                let da = density(&grid, a);
                let db = density(&grid, b);
                da.cmp(&db)
                    .then(a.dimension().cmp(&b.dimension()))
                    .then_with(|| {
                        // later in classification order loses ties
                        let ia = good_lines.iter().position(|l| l == *a).unwrap();
                        let ib = good_lines.iter().position(|l| l == *b).unwrap();
                        ib.cmp(&ia)
                    })
            })
            .expect("nonempty");
        let n_i = line.dimension();
        let on_line: Vec<DiagPoint> = surviving
            .iter()
            .filter(|p| line_of(p).map(|l| l == line).unwrap_or(false))
            .copied()
            .collect();
        let (c_i, s_i) = popular_subset(coloring, &on_line);
        let dim_ok = record(
            &mut log,
            i,
            "n_i >= n_prev / 3",
            BigRational::from(BigInt::from(n_i)),
            &params.dim_fraction * BigRational::from(BigInt::from(n_prev)),
        );
        let s_ok = record(
            &mut log,
            i,
            "|S_i| >= (alpha_i / 4r) * 2^n_i",
            BigRational::from(BigInt::from(s_i.len())),
            &a / ratio(4 * r as i64, 1) * BigRational::from(BigInt::from(2u64).pow(n_i)),
        );
        debug_assert!(s_i.len() * (r as usize) >= on_line.len());
        if params.mode == Mode::Faithful {
            if !dim_ok {
                failure = Some(violated(i, "n_i >= n_prev / 3", &log));
                break;
            }
            if !s_ok {
                failure = Some(violated(i, "|S_i| >= (alpha_i / 4r) * 2^n_i", &log));
                break;
            }
        }
        let next_grid = nondegenerate(grid_of(&s_i)?);
        // grid nesting: every new grid point already sat in the previous grid
        if !is_subset(&next_grid, &prev_grid) {
            return Err(Error::InternalInvariant(format!(
                "step {i}: grid nesting G_{} within G_{} failed",
                i + 1,
                i
            )));
        }
        steps.push(StepRecord {
            step: i,
            line,
            dim: n_i,
            color: c_i,
            s_points: s_i,
            next_grid_size: next_grid.len(),
            alpha: Some(a),
        });
        prev_grid = grid;
        grid = next_grid;
        n_prev = n_i;
        if grid.is_empty() && params.mode == Mode::Greedy {
            break;
        }
        if grid.is_empty() && params.mode == Mode::Faithful && i < total_steps {
            failure = Some(Error::GuaranteeViolated(format!(
                "step {}: grid exhausted before r*m steps",
                i + 1
            )));
            break;
        }
    }

    let outcome = match failure {
        Some(e) => ExtractionOutcome::Failed(e),
        None => match assemble(coloring, &steps, params.m)? {
            Some(t) => ExtractionOutcome::Witness(t),
            None => ExtractionOutcome::Failed(Error::NoWitness),
        },
    };
    Ok(ExtractionTrace {
        steps,
        inequalities: log,
        outcome,
    })
}

fn violated(step: usize, name: &str, log: &[InequalityRecord]) -> Error {
    let rec = log
        .iter()
        .rev()
        .find(|r| r.step == step && r.name == name)
        .expect("just recorded");
    Error::GuaranteeViolated(format!(
        "step {step}: {name} fails with lhs = {} and rhs = {}",
        rec.lhs, rec.rhs
    ))
}

fn record(
    log: &mut Vec<InequalityRecord>,
    step: usize,
    name: &str,
    lhs: BigRational,
    rhs: BigRational,
) -> bool {
    let holds = lhs >= rhs;
    log.push(InequalityRecord {
        step,
        name: name.to_string(),
        lhs,
        rhs,
        holds,
    });
    holds
}

fn nondegenerate(points: Vec<DiagPoint>) -> Vec<DiagPoint> {
    points.into_iter().filter(|p| !p.is_degenerate()).collect()
}

fn is_subset(small: &[DiagPoint], big: &[DiagPoint]) -> bool {
    let set: std::collections::HashSet<_> = big.iter().collect();
    small.iter().all(|p| set.contains(p))
}

fn density(grid: &[DiagPoint], line: &LineId) -> BigRational {
    let count = grid
        .iter()
        .filter(|p| line_of(p).map(|l| l == *line).unwrap_or(false))
        .count();
    BigRational::new(
        BigInt::from(count),
        BigInt::from(2u64).pow(line.dimension()),
    )
}

/// Most popular color class; ties go to the lowest color index.
fn popular_subset(coloring: &DnColoring, points: &[DiagPoint]) -> (u8, Vec<DiagPoint>) {
    let mut counts = vec![0usize; coloring.r() as usize];
    for p in points {
        counts[coloring.color(p) as usize] += 1;
    }
    let best = counts
        .iter()
        .enumerate()
        .max_by(|(ia, ca), (ib, cb)| ca.cmp(cb).then(ib.cmp(ia)))
        .map(|(i, _)| i as u8)
        .unwrap_or(0);
    let mut s: Vec<DiagPoint> = points
        .iter()
        .filter(|p| coloring.color(p) == best)
        .copied()
        .collect();
    s.sort_by_key(|p| p.canonical_index());
    (best, s)
}

/// Builds an `m`-level tree from `m + 1` same-colored steps: the latest
/// step supplies the root, earlier ones supply each deeper level. The
/// decomposition of a parent within a step's class is unique (on a line,
/// each coordinate determines the point), so only the choice of steps and
/// root varies. Every candidate is checked with `validate_tree`.
fn assemble(
    coloring: &DnColoring,
    steps: &[StepRecord],
    m: usize,
) -> Result<Option<TreeWitness>> {
    for color in 0..coloring.r() {
        let idx: Vec<usize> = steps
            .iter()
            .enumerate()
            .filter(|(_, s)| s.color == color)
            .map(|(i, _)| i)
            .collect();
        if idx.len() < m + 1 {
            continue;
        }
        for combo in combinations(&idx, m + 1) {
            // combo ascending; level k gets combo[m - k]
            let sources: Vec<&StepRecord> = (0..=m).map(|k| &steps[combo[m - k]]).collect();
            if let Some(t) = try_assemble(coloring, color, &sources, m)? {
                return Ok(Some(t));
            }
        }
    }
    Ok(None)
}

fn try_assemble(
    coloring: &DnColoring,
    color: u8,
    sources: &[&StepRecord],
    m: usize,
) -> Result<Option<TreeWitness>> {
    'root: for root in &sources[0].s_points {
        let mut levels = vec![vec![*root]];
        for k in 1..=m {
            let src = &sources[k].s_points;
            let mut next = Vec::with_capacity(levels[k - 1].len() * 2);
            for parent in &levels[k - 1] {
                let cx = src.iter().find(|q| q.y() == parent.y() && q.x() != parent.x());
                let cy = src.iter().find(|q| q.x() == parent.x() && q.y() != parent.y());
                let (Some(cx), Some(cy)) = (cx, cy) else {
                    continue 'root;
                };
                next.push(*cx);
                next.push(*cy);
            }
            levels.push(next);
        }
        let t = TreeWitness {
            levels,
            level_lines: (1..=m).map(|k| sources[k].line).collect(),
            color: Some(color),
        };
        if validate_tree(&t, Some(coloring))? {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(items: &[usize], k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..items.len() {
            current.push(items[i]);
            rec(items, k, i + 1, current, out);
            current.pop();
        }
    }
    rec(items, k, 0, &mut current, &mut out);
    out
}
