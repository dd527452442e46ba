mod format;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dncube::coloring::DnColoring;
use dncube::detect::{find_corner, find_tree, validate_tree, TreeWitness};
use dncube::extract::{extract_tree, ExtractionOutcome, ExtractionParams, Mode};
use dncube::generate::seeded_colors;
use dncube::gp::{find_mono_gp_interval, find_mono_gp_seeded, verify_gp, GpSearchReport};
use dncube::hj::{Alphabet, HJPoint};
use dncube::plane::{extract_corner as extract_plane_corner, find_plane_corner, GridColoring, NumberSet, PlaneCorner};
use dncube::point::DiagPoint;
use dncube::search::{
    search, segment_domain, target_structures, Domain, SearchProblem, SearchStatus, Target,
};
use dncube::Error;

use format::{ColoringFile, FileDomain};

#[derive(Parser)]
#[command(name = "dncube", about = "Diagonal-space structure toolkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a deterministic coloring file
    Gen(GenArgs),
    /// Brute-force search a coloring file for a monochromatic structure
    Detect(DetectArgs),
    /// Run the density extraction loop on a coloring file
    Extract(ExtractArgs),
    /// Hunt a monochromatic geometric progression in a colored interval
    Gp(GpArgs),
    /// Backtracking search for an avoidance coloring
    Search(SearchArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DomainArg {
    Dn,
    Alph4,
    Alph3,
    Grid,
    Interval,
    Segments,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StructureArg {
    Corner,
    Tree,
    Scp,
    Sc4,
    Coplanar6,
    Hjline4,
    Hjline3,
    Gp,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SchemeArg {
    Constant,
    Random,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Greedy,
    Faithful,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    domain: DomainArg,
    /// Dimension for Dn / alph4 / alph3 / segments domains
    #[arg(long)]
    n: Option<u8>,
    /// Interval upper end for the interval domain
    #[arg(long = "N")]
    n_limit: Option<u64>,
    /// Grid rows, e.g. --a "1 2 3"
    #[arg(long)]
    a: Option<String>,
    /// Grid columns, e.g. --b "1 2 3"
    #[arg(long)]
    b: Option<String>,
    #[arg(long)]
    r: u8,
    #[arg(long, value_enum, default_value = "random")]
    scheme: SchemeArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Color used by the constant scheme
    #[arg(long, default_value_t = 0)]
    color: u8,
    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct DetectArgs {
    #[arg(long)]
    file: std::path::PathBuf,
    #[arg(long, value_enum)]
    structure: StructureArg,
    /// Tree depth for --structure tree
    #[arg(long, default_value_t = 1)]
    m: usize,
}

#[derive(Args)]
struct ExtractArgs {
    #[arg(long)]
    file: std::path::PathBuf,
    /// Tree depth (Dn domain)
    #[arg(long, default_value_t = 1)]
    m: usize,
    #[arg(long, value_enum, default_value = "greedy")]
    mode: ModeArg,
}

#[derive(Args)]
struct GpArgs {
    /// Interval upper end; taken from --file when omitted
    #[arg(long = "N")]
    n_limit: Option<u64>,
    #[arg(long)]
    r: Option<u8>,
    /// Interval coloring file; a seeded coloring is used when omitted
    #[arg(long)]
    file: Option<std::path::PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, value_enum)]
    domain: DomainArg,
    #[arg(long)]
    n: u8,
    #[arg(long)]
    r: u8,
    #[arg(long, value_enum)]
    target: StructureArg,
    /// Tree depth for --target tree
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Node budget; unlimited when omitted
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, default_value_t = false)]
    symmetry: bool,
    /// Path for the avoidance certificate on success
    #[arg(long)]
    certificate: Option<std::path::PathBuf>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Detect(args) => cmd_detect(args),
        Command::Extract(args) => cmd_extract(args),
        Command::Gp(args) => cmd_gp(args),
        Command::Search(args) => cmd_search(args),
    }
}

fn cmd_gen(args: GenArgs) -> Result<u8, String> {
    let domain = match args.domain {
        DomainArg::Dn => FileDomain::Dn(need(args.n, "--n")?),
        DomainArg::Alph4 => FileDomain::Alph4(need(args.n, "--n")?),
        DomainArg::Alph3 => FileDomain::Alph3(need(args.n, "--n")?),
        DomainArg::Segments => FileDomain::Segments(need(args.n, "--n")?),
        DomainArg::Interval => FileDomain::Interval(need(args.n_limit, "--N")?),
        DomainArg::Grid => FileDomain::Grid(
            parse_set(&need(args.a, "--a")?)?,
            parse_set(&need(args.b, "--b")?)?,
        ),
    };
    if args.r == 0 {
        return Err("r must be at least 1".into());
    }
    let size = domain.size();
    if size == 0 {
        return Err("empty domain".into());
    }
    let colors = match args.scheme {
        SchemeArg::Constant => {
            if args.color >= args.r {
                return Err(format!("constant color {} out of range", args.color));
            }
            vec![args.color; size]
        }
        SchemeArg::Random => seeded_colors(args.seed, size, args.r),
    };
    let file = ColoringFile {
        domain,
        r: args.r,
        colors,
    };
    let text = file.render();
    match args.out {
        Some(path) => std::fs::write(&path, text).map_err(|e| e.to_string())?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn cmd_detect(args: DetectArgs) -> Result<u8, String> {
    let start = Instant::now();
    let file = load(&args.file)?;
    println!("command: detect");
    println!("file: {}", args.file.display());
    println!("domain: {}", file.domain.kind());
    println!("r: {}", file.r);
    println!("structure: {:?}", args.structure);

    let found = match (&file.domain, args.structure) {
        (FileDomain::Dn(n), StructureArg::Corner) => {
            let coloring = DnColoring::new(*n, file.r, file.colors.clone()).map_err(stringify)?;
            match find_corner(&coloring).map_err(stringify)? {
                Some(w) => {
                    w.validate(false).map_err(stringify)?;
                    println!(
                        "witness: corner root={} child_x={} child_y={} color={}",
                        w.root,
                        w.child_x,
                        w.child_y,
                        w.color.unwrap_or(0)
                    );
                    true
                }
                None => false,
            }
        }
        (FileDomain::Dn(n), StructureArg::Tree) => {
            let coloring = DnColoring::new(*n, file.r, file.colors.clone()).map_err(stringify)?;
            match find_tree(&coloring, args.m).map_err(stringify)? {
                Some(t) => {
                    if validate_tree(&t, Some(&coloring)) != Ok(true) {
                        return Err("tree witness failed revalidation".into());
                    }
                    print_tree(&t);
                    true
                }
                None => false,
            }
        }
        (FileDomain::Alph4(n), StructureArg::Hjline4) => {
            find_structure(&Domain::Alphabet4(*n), &Target::HjLine4, &file.colors, |idx| {
                HJPoint::from_index(Alphabet::Four, *n as usize, idx)
                    .map(|p| p.to_string())
                    .unwrap_or_default()
            })?
        }
        (FileDomain::Alph3(n), StructureArg::Hjline3) => {
            find_structure(&Domain::Alphabet3(*n), &Target::HjLine3, &file.colors, |idx| {
                HJPoint::from_index(Alphabet::Three, *n as usize, idx)
                    .map(|p| p.to_string())
                    .unwrap_or_default()
            })?
        }
        (FileDomain::Segments(n), StructureArg::Scp | StructureArg::Sc4 | StructureArg::Coplanar6) => {
            let target = match args.structure {
                StructureArg::Scp => Target::Scp,
                StructureArg::Sc4 => Target::Sc4,
                _ => Target::Coplanar6,
            };
            let segments = segment_domain(*n);
            find_structure(&Domain::Segments(*n), &target, &file.colors, |idx| {
                let s = segments[idx];
                format!("{}-{}", s.a, s.b)
            })?
        }
        (FileDomain::Grid(a, b), StructureArg::Corner) => {
            let coloring =
                GridColoring::new(a.clone(), b.clone(), file.r, file.colors.clone())
                    .map_err(stringify)?;
            match find_plane_corner(&coloring) {
                Some(c) => {
                    c.validate(&coloring).map_err(stringify)?;
                    print_plane_corner(&c);
                    true
                }
                None => false,
            }
        }
        (FileDomain::Interval(n_limit), StructureArg::Gp) => {
            let report = find_mono_gp_interval(*n_limit, file.r, &file.colors)
                .map_err(stringify)?;
            report_gp(&report)?
        }
        (domain, structure) => {
            return Err(format!(
                "structure {structure:?} is not defined over domain {}",
                domain.kind()
            ))
        }
    };

    println!("outcome: {}", if found { "found" } else { "none" });
    println!("wall_ms: {}", start.elapsed().as_millis());
    Ok(if found { 0 } else { 1 })
}

fn cmd_extract(args: ExtractArgs) -> Result<u8, String> {
    let start = Instant::now();
    let file = load(&args.file)?;
    println!("command: extract");
    println!("file: {}", args.file.display());
    println!("domain: {}", file.domain.kind());
    println!("r: {}", file.r);

    let found = match &file.domain {
        FileDomain::Dn(n) => {
            let coloring = DnColoring::new(*n, file.r, file.colors.clone()).map_err(stringify)?;
            let mode = match args.mode {
                ModeArg::Greedy => Mode::Greedy,
                ModeArg::Faithful => Mode::Faithful,
            };
            let params = ExtractionParams::new(file.r, args.m, mode).map_err(stringify)?;
            let trace = extract_tree(&coloring, &params).map_err(stringify)?;
            for s in &trace.steps {
                let alpha = s
                    .alpha
                    .as_ref()
                    .map(|a| a.to_string())
                    .unwrap_or_else(|| "-".into());
                println!(
                    "step {}: line flip={} fixed={} dim={} color={} class_size={} next_grid={} alpha={}",
                    s.step,
                    s.line.flip_mask(),
                    s.line.fixed(),
                    s.dim,
                    s.color,
                    s.s_points.len(),
                    s.next_grid_size,
                    alpha
                );
            }
            for q in &trace.inequalities {
                println!(
                    "inequality step={} name=\"{}\" lhs={} rhs={} holds={}",
                    q.step, q.name, q.lhs, q.rhs, q.holds
                );
            }
            match &trace.outcome {
                ExtractionOutcome::Witness(t) => {
                    if validate_tree(t, Some(&coloring)) != Ok(true) {
                        return Err("extracted tree failed revalidation".into());
                    }
                    print_tree(t);
                    true
                }
                ExtractionOutcome::Failed(e) => {
                    println!("failure: {e}");
                    false
                }
            }
        }
        FileDomain::Grid(a, b) => {
            let coloring =
                GridColoring::new(a.clone(), b.clone(), file.r, file.colors.clone())
                    .map_err(stringify)?;
            let trace = extract_plane_corner(&coloring).map_err(stringify)?;
            for round in &trace.rounds {
                println!(
                    "round {}: line_sum={} line_size={} color={} class_size={} next_grid={}",
                    round.round,
                    round.sum,
                    round.line_size,
                    round.color,
                    round.s_size,
                    round.next_grid_size
                );
            }
            match &trace.corner {
                Some(c) => {
                    c.validate(&coloring).map_err(stringify)?;
                    print_plane_corner(c);
                    true
                }
                None => false,
            }
        }
        other => {
            return Err(format!(
                "extract supports Dn and grid domains, not {}",
                other.kind()
            ))
        }
    };

    println!("outcome: {}", if found { "found" } else { "none" });
    println!("wall_ms: {}", start.elapsed().as_millis());
    Ok(if found { 0 } else { 1 })
}

fn cmd_gp(args: GpArgs) -> Result<u8, String> {
    let start = Instant::now();
    println!("command: gp");
    let report = match &args.file {
        Some(path) => {
            let file = load(path)?;
            let FileDomain::Interval(n_limit) = file.domain else {
                return Err("gp needs an interval coloring file".into());
            };
            println!("file: {}", path.display());
            println!("N: {n_limit}");
            println!("r: {}", file.r);
            find_mono_gp_interval(n_limit, file.r, &file.colors).map_err(stringify)?
        }
        None => {
            let n_limit = need(args.n_limit, "--N")?;
            let r = need(args.r, "--r")?;
            println!("N: {n_limit}");
            println!("r: {r}");
            println!("seed: {}", args.seed);
            find_mono_gp_seeded(n_limit, r, args.seed).map_err(stringify)?
        }
    };
    let found = report_gp(&report)?;
    println!("outcome: {}", if found { "found" } else { "none" });
    println!("wall_ms: {}", start.elapsed().as_millis());
    Ok(if found { 0 } else { 1 })
}

fn cmd_search(args: SearchArgs) -> Result<u8, String> {
    let start = Instant::now();
    let domain = match args.domain {
        DomainArg::Dn => Domain::Dn(args.n),
        DomainArg::Alph4 => Domain::Alphabet4(args.n),
        DomainArg::Alph3 => Domain::Alphabet3(args.n),
        DomainArg::Segments => Domain::Segments(args.n),
        other => return Err(format!("search does not run on the {other:?} domain")),
    };
    let target = match args.target {
        StructureArg::Corner => Target::Corner,
        StructureArg::Tree => Target::Tree(args.m),
        StructureArg::Scp => Target::Scp,
        StructureArg::Sc4 => Target::Sc4,
        StructureArg::Coplanar6 => Target::Coplanar6,
        StructureArg::Hjline4 => Target::HjLine4,
        StructureArg::Hjline3 => Target::HjLine3,
        StructureArg::Gp => return Err("gp is not an avoidance-search target".into()),
    };
    let mut problem = SearchProblem::new(domain, args.r, target);
    problem.node_budget = args.budget;
    problem.symmetry = args.symmetry;
    let outcome = search(&problem).map_err(stringify)?;

    println!("command: search");
    println!("domain: {:?}", args.domain);
    println!("n: {}", args.n);
    println!("r: {}", args.r);
    println!("target: {:?}", args.target);
    println!("nodes_visited: {}", outcome.nodes_visited);
    let code = match &outcome.status {
        SearchStatus::AvoidanceFound(cert) => {
            println!("outcome: avoidance-found");
            if let Some(path) = &args.certificate {
                let file = certificate_file(&domain, args.r, cert);
                std::fs::write(path, file.render()).map_err(|e| e.to_string())?;
                println!("certificate: {}", path.display());
            }
            0
        }
        SearchStatus::Exhausted => {
            println!("outcome: exhausted");
            1
        }
        SearchStatus::BudgetExceeded => {
            println!("outcome: budget-exceeded");
            3
        }
    };
    println!("wall_ms: {}", start.elapsed().as_millis());
    Ok(code)
}

/// Certificates over `Dn` cover only nondegenerate points; the file format
/// is dense, so diagonal points get color 0. No corner or tree touches
/// them, so the padding cannot create a monochromatic target.
fn certificate_file(domain: &Domain, r: u8, cert: &[u8]) -> ColoringFile {
    let (file_domain, colors) = match domain {
        Domain::Dn(n) => {
            let mut full = vec![0u8; 1 << (2 * *n as u32)];
            for (i, p) in DiagPoint::all_nondegenerate(*n).enumerate() {
                full[p.index()] = cert[i];
            }
            (FileDomain::Dn(*n), full)
        }
        Domain::Alphabet4(n) => (FileDomain::Alph4(*n), cert.to_vec()),
        Domain::Alphabet3(n) => (FileDomain::Alph3(*n), cert.to_vec()),
        Domain::Segments(n) => (FileDomain::Segments(*n), cert.to_vec()),
    };
    ColoringFile {
        domain: file_domain,
        r,
        colors,
    }
}

fn find_structure(
    domain: &Domain,
    target: &Target,
    colors: &[u8],
    describe: impl Fn(usize) -> String,
) -> Result<bool, String> {
    let structures = target_structures(domain, target).map_err(stringify)?;
    for s in &structures {
        if s.iter().all(|&i| colors[i] == colors[s[0]]) {
            let pieces: Vec<String> = s.iter().map(|&i| describe(i)).collect();
            println!(
                "witness: {:?} [{}] color={}",
                target,
                pieces.join(" "),
                colors[s[0]]
            );
            return Ok(true);
        }
    }
    Ok(false)
}

fn report_gp(report: &GpSearchReport) -> Result<bool, String> {
    println!("n: {}", report.n);
    match &report.triple {
        Some((gp, color)) => {
            if !verify_gp(&gp.terms[0], &gp.terms[1], &gp.terms[2]) {
                return Err("triple failed revalidation".into());
            }
            println!(
                "witness: gp t1={} t2={} t3={} ratio={} color={}",
                gp.terms[0],
                gp.terms[1],
                gp.terms[2],
                gp.ratio(),
                color
            );
            Ok(true)
        }
        None => Ok(false),
    }
}

fn print_tree(t: &TreeWitness) {
    for (k, level) in t.levels.iter().enumerate() {
        let pts: Vec<String> = level.iter().map(|p| p.to_string()).collect();
        println!("witness: tree level {k}: {}", pts.join(" "));
    }
    println!("witness: tree color={}", t.color.unwrap_or(0));
}

fn print_plane_corner(c: &PlaneCorner) {
    println!(
        "witness: corner a={} b={} d={} color={}",
        c.a,
        c.b,
        c.d,
        c.color.map(|v| v.to_string()).unwrap_or_else(|| "-".into())
    );
}

fn load(path: &std::path::Path) -> Result<ColoringFile, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    ColoringFile::parse(&text)
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T, String> {
    value.ok_or_else(|| format!("{flag} is required here"))
}

fn parse_set(text: &str) -> Result<NumberSet, String> {
    let elements: Vec<i64> = text
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| format!("bad element {t:?}")))
        .collect::<Result<_, String>>()?;
    NumberSet::new(elements).map_err(stringify)
}

fn stringify(e: Error) -> String {
    e.to_string()
}
