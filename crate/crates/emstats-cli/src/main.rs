//! Command-line front end: permutation statistics, identity verification,
//! joint distributions, the statistic-transporting bijection, cone
//! inspection, and simplex location, with deterministic machine-readable
//! output.
//!
//! Exit codes: 0 success (and identity match), 1 identity mismatch,
//! 2 usage or runtime error. The `EMSTATS_WORKERS` environment variable
//! bounds the worker-thread count for parallel verification.

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Map, Value};
use std::process::ExitCode;
use std::str::FromStr;

use emstats::colored_perm::{ColoredPermutation, GroupSpec};
use emstats::exec::ExecMode;
use emstats::identities::{
    distribution, verify, IdentityId, IdentityReport, StatPair, ALL_IDENTITIES,
};
use emstats::polyhedral::{cone_over, locate, simplex_for, ShiftMethod};
use emstats::series::{Polynomial, VarId};
use emstats::statistics::{self, OrderFlavor};

#[derive(Parser)]
#[command(name = "emstats", version, about = "Exact statistics and identity verification for colored permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScalingChoice {
    /// All generators kept minimal.
    Unit,
    /// Every generator except the apex multiplied by r.
    Wreath,
    /// Middle generators doubled, first and last minimal.
    TypeD,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodChoice {
    ShiftOffBoundary,
    ShiftWhole,
}

#[derive(Subcommand)]
enum Command {
    /// Print every applicable statistic of one element.
    Stats {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: usize,
        /// Window text, e.g. "[1^3 4^0 2^1 3^0 6^2 5^1]".
        #[arg(long)]
        element: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Expand both sides of an identity and compare coefficients.
    Verify {
        #[arg(long)]
        id: Option<String>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long = "K")]
        k: Option<u32>,
        /// Run the whole desk-scale parameter grid (for one id, or all).
        #[arg(long)]
        grid: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Joint distribution of a statistic pair over a group.
    Distribution {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: usize,
        /// Statistic pair, e.g. "ndes-nmajor" or "fdes-fmajor".
        #[arg(long)]
        pair: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Apply the statistic-transporting bijection to one element.
    Bijection {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        element: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print generators, determinant, and parallelepiped points of the cone
    /// over a triangulation simplex.
    Cone {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1")]
        r: u32,
        /// Indexing permutation, comma-separated letters, e.g. "2,1,3".
        #[arg(long)]
        perm: String,
        #[arg(long, value_enum, default_value = "unit")]
        scaling: ScalingChoice,
        #[arg(long, value_enum, default_value = "shift-whole")]
        method: MethodChoice,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Find the triangulation simplex containing a rational point.
    Locate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1")]
        r: u32,
        /// Comma-separated rationals, e.g. "2/10,1/10,3/10".
        #[arg(long)]
        point: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    configure_workers();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Honor EMSTATS_WORKERS for the rayon pool used by parallel verification.
fn configure_workers() {
    if let Ok(value) = std::env::var("EMSTATS_WORKERS") {
        if let Ok(workers) = value.parse::<usize>() {
            if workers > 0 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(workers)
                    .build_global();
            }
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Stats {
            r,
            n,
            element,
            format,
        } => {
            let g = parse_element(r, n, &element)?;
            let stats = stats_json(&g)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&stats).unwrap()),
                Format::Text | Format::Csv => {
                    for (key, value) in stats.as_object().unwrap() {
                        println!("{key}: {value}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            id,
            r,
            n,
            k,
            grid,
            format,
        } => run_verify(id, r, n, k, grid, format),
        Command::Distribution { r, n, pair, format } => {
            let spec = GroupSpec::new(r, n).map_err(|e| e.to_string())?;
            let pair = StatPair::from_str(&pair).map_err(|e| e.to_string())?;
            let poly = distribution(spec, pair).map_err(|e| e.to_string())?;
            match format {
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "r": r,
                            "n": n,
                            "pair": pair.as_str(),
                            "polynomial": poly.to_string(),
                            "table": distribution_table(&poly),
                        }))
                        .unwrap()
                    )
                }
                Format::Csv => print!("{}", distribution_csv(&poly)),
                Format::Text => println!("{poly}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bijection {
            r,
            n,
            element,
            format,
        } => {
            let g = parse_element(r, n, &element)?;
            let image = emstats::bijections::neg_flag_bijection(&g).map_err(|e| e.to_string())?;
            let payload = json!({
                "input": g.to_string(),
                "image": image.to_string(),
                "inputStats": { "ndes": statistics::ndes(&g), "nmajor": statistics::nmajor(&g) },
                "imageStats": { "fdes": statistics::fdes(&image), "fmajor": statistics::fmajor(&image) },
            });
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&payload).unwrap()),
                Format::Text | Format::Csv => {
                    println!("input: {g}");
                    println!("image: {image}");
                    println!(
                        "ndes={} nmajor={} -> fdes={} fmajor={}",
                        statistics::ndes(&g),
                        statistics::nmajor(&g),
                        statistics::fdes(&image),
                        statistics::fmajor(&image)
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cone {
            n,
            r,
            perm,
            scaling,
            method,
            format,
        } => {
            let perm = parse_perm(&perm, n)?;
            let (simplex, scales) = match scaling {
                ScalingChoice::Unit => (simplex_for(&perm, r), emstats::polyhedral::scaling_all_one(n)),
                ScalingChoice::Wreath => (simplex_for(&perm, 1), emstats::polyhedral::scaling_wreath(n, r)),
                ScalingChoice::TypeD => (simplex_for(&perm, 1), emstats::polyhedral::scaling_type_d(n)),
            };
            let cone = cone_over(&simplex, &scales).map_err(|e| e.to_string())?;
            let shift = match method {
                MethodChoice::ShiftOffBoundary => ShiftMethod::ShiftOffBoundary,
                MethodChoice::ShiftWhole => ShiftMethod::ShiftWhole,
            };
            let points = cone.fpp_points(shift).map_err(|e| e.to_string())?;
            match format {
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "perm": perm,
                            "generators": cone.generators(),
                            "open": cone.open_flags(),
                            "det": cone.det_abs().to_string(),
                            "fppPoints": points,
                        }))
                        .unwrap()
                    )
                }
                Format::Text | Format::Csv => {
                    for g in cone.generators() {
                        println!("generator: {}", tuple_text(&g));
                    }
                    println!("det: {}", cone.det_abs());
                    for p in &points {
                        println!("{}", tuple_text(p));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Locate { n, r, point, format } => {
            let coords = parse_rationals(&point)?;
            let simplex = locate(&coords, n, r).map_err(|e| e.to_string())?;
            match format {
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "perm": simplex.perm,
                            "strict": simplex.strict.iter().collect::<Vec<_>>(),
                            "inequalities": simplex.inequality_text(),
                        }))
                        .unwrap()
                    )
                }
                Format::Text | Format::Csv => {
                    println!(
                        "[{}]",
                        simplex
                            .perm
                            .iter()
                            .map(|p| p.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_verify(
    id: Option<String>,
    r: Option<u32>,
    n: Option<usize>,
    k: Option<u32>,
    grid: bool,
    format: Format,
) -> Result<ExitCode, String> {
    let ids: Vec<IdentityId> = match &id {
        Some(text) => vec![IdentityId::from_str(text).map_err(|e| e.to_string())?],
        None if grid => ALL_IDENTITIES.to_vec(),
        None => return Err("--id is required unless --grid runs every identity".into()),
    };
    let jobs: Vec<(IdentityId, u32, usize, u32)> = if grid {
        ids.iter().flat_map(|&i| grid_points(i)).collect()
    } else {
        let the_id = ids[0];
        let r = r
            .or(the_id.fixed_r())
            .ok_or_else(|| format!("--r is required for {the_id}"))?;
        let n = n.ok_or("--n is required")?;
        let k = k.ok_or("--K is required")?;
        vec![(the_id, r, n, k)]
    };
    // Fan out, then emit in job order from a single writer.
    use rayon::prelude::*;
    let reports: Vec<Result<IdentityReport, String>> = jobs
        .par_iter()
        .map(|&(i, r, n, k)| verify(i, r, n, k, ExecMode::default()).map_err(|e| e.to_string()))
        .collect();
    let mut all_matched = true;
    for report in reports {
        let report = report?;
        all_matched &= report.matched;
        match format {
            Format::Json => println!("{}", serde_json::to_string(&report).unwrap()),
            Format::Text | Format::Csv => {
                println!(
                    "{} r={} n={} K={} match={}{}",
                    report.id,
                    report.r,
                    report.n,
                    report.k,
                    report.matched,
                    report
                        .first_mismatch
                        .as_ref()
                        .map(|m| format!(" first mismatch at {} ({} vs {})", m.monomial, m.lhs, m.rhs))
                        .unwrap_or_default()
                );
            }
        }
    }
    Ok(if all_matched {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// The desk-scale parameter grid used by `--grid` (matches the test suite).
pub fn grid_points(id: IdentityId) -> Vec<(IdentityId, u32, usize, u32)> {
    let wreath_specs: Vec<(u32, usize)> = (1..=4)
        .map(|n| (2u32, n))
        .chain((1..=3).map(|n| (3u32, n)))
        .chain((1..=2).map(|n| (4u32, n)))
        .collect();
    match id {
        IdentityId::EulerianA | IdentityId::Carlitz => {
            (1..=5).map(|n| (id, 1, n, 6)).collect()
        }
        IdentityId::MultivariateA => (1..=4).map(|n| (id, 1, n, 4)).collect(),
        IdentityId::WreathEulerian
        | IdentityId::WreathNeg
        | IdentityId::WreathFlag
        | IdentityId::WreathFlagRk
        | IdentityId::WreathNegMulti
        | IdentityId::WreathFlagMulti
        | IdentityId::WreathFlagRkMulti => wreath_specs
            .iter()
            .map(|&(r, n)| (id, r, n, 3))
            .collect(),
        IdentityId::ChowGessel | IdentityId::ChowGesselFlag => {
            (1..=4).map(|n| (id, 2, n, 5)).collect()
        }
        IdentityId::BNaturalMulti | IdentityId::BFlagMulti => {
            (1..=3).map(|n| (id, 2, n, 3)).collect()
        }
        IdentityId::DEulerian => (2..=5).map(|n| (id, 2, n, 5)).collect(),
        IdentityId::DNeg | IdentityId::DNegMulti => (2..=4).map(|n| (id, 2, n, 3)).collect(),
    }
}

fn parse_element(r: u32, n: usize, text: &str) -> Result<ColoredPermutation, String> {
    let spec = GroupSpec::new(r, n).map_err(|e| e.to_string())?;
    ColoredPermutation::parse_window(text, spec).map_err(|e| e.to_string())
}

fn parse_perm(text: &str, n: usize) -> Result<Vec<usize>, String> {
    let perm: Vec<usize> = text
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let mut seen = vec![false; n + 1];
    if perm.len() != n || perm.iter().any(|&p| p == 0 || p > n || std::mem::replace(&mut seen[p], true)) {
        return Err(format!("--perm must be a permutation of 1..{n}"));
    }
    Ok(perm)
}

fn parse_rationals(text: &str) -> Result<Vec<BigRational>, String> {
    text.split(',')
        .map(|t| BigRational::from_str(t.trim()).map_err(|e| e.to_string()))
        .collect()
}

fn tuple_text(p: &[i64]) -> String {
    format!(
        "({})",
        p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    )
}

/// All statistics applicable to the element, as a sorted-key JSON object.
fn stats_json(g: &ColoredPermutation) -> Result<Value, String> {
    let mut map = Map::new();
    let spec = g.spec();
    map.insert("window".into(), json!(g.to_string()));
    map.insert("r".into(), json!(spec.r));
    map.insert("n".into(), json!(spec.n));
    map.insert(
        "des".into(),
        json!(statistics::des(g, OrderFlavor::Wreath).map_err(|e| e.to_string())?),
    );
    map.insert(
        "stdes".into(),
        json!(statistics::des(g, OrderFlavor::Steingrimsson).map_err(|e| e.to_string())?),
    );
    map.insert(
        "desA".into(),
        json!(statistics::type_a_descents(g, OrderFlavor::Wreath)
            .map_err(|e| e.to_string())?
            .len()),
    );
    map.insert(
        "majorA".into(),
        json!(statistics::type_a_major(g, OrderFlavor::Wreath).map_err(|e| e.to_string())?),
    );
    map.insert("ndes".into(), json!(statistics::ndes(g)));
    map.insert("nmajor".into(), json!(statistics::nmajor(g)));
    map.insert("fdes".into(), json!(statistics::fdes(g)));
    map.insert("fmajor".into(), json!(statistics::fmajor(g)));
    map.insert("col".into(), json!(statistics::col(g)));
    map.insert("neg".into(), json!(statistics::neg(g)));
    map.insert("ch".into(), json!(statistics::ch(g)));
    if spec.r == 2 {
        map.insert(
            "natdes".into(),
            json!(statistics::des(g, OrderFlavor::Natural).map_err(|e| e.to_string())?),
        );
        map.insert(
            "natmaj".into(),
            json!(statistics::descent_set(g, OrderFlavor::Natural)
                .map_err(|e| e.to_string())?
                .iter()
                .sum::<usize>()),
        );
        map.insert(
            "natfmaj".into(),
            json!(statistics::natfmaj(g).map_err(|e| e.to_string())?),
        );
        if spec.n >= 2 && g.is_in_d().map_err(|e| e.to_string())? {
            map.insert(
                "dndes".into(),
                json!(statistics::dndes(g).map_err(|e| e.to_string())?),
            );
            map.insert(
                "dnmajor".into(),
                json!(statistics::dnmajor(g).map_err(|e| e.to_string())?),
            );
            map.insert(
                "dnatdes".into(),
                json!(statistics::des(g, OrderFlavor::NaturalD).map_err(|e| e.to_string())?),
            );
        }
    }
    Ok(Value::Object(map))
}

/// Dense coefficient table of a polynomial in t and q: rows by t-degree,
/// columns by q-degree.
fn distribution_table(poly: &Polynomial) -> Vec<Vec<String>> {
    let (rows, cols) = table_extent(poly);
    let mut table = vec![vec!["0".to_string(); cols + 1]; rows + 1];
    for (m, c) in poly.terms() {
        let t = m.exponent(VarId::T) as usize;
        let q = m.exponent(VarId::Q) as usize;
        table[t][q] = c.to_string();
    }
    table
}

fn table_extent(poly: &Polynomial) -> (usize, usize) {
    let mut rows = 0;
    let mut cols = 0;
    for (m, _) in poly.terms() {
        rows = rows.max(m.exponent(VarId::T) as usize);
        cols = cols.max(m.exponent(VarId::Q) as usize);
    }
    (rows, cols)
}

fn distribution_csv(poly: &Polynomial) -> String {
    let table = distribution_table(poly);
    let cols = table.first().map_or(0, Vec::len);
    let mut out = String::from("t\\q");
    for q in 0..cols {
        out.push_str(&format!(",{q}"));
    }
    out.push('\n');
    for (t, row) in table.iter().enumerate() {
        out.push_str(&t.to_string());
        for cell in row {
            out.push(',');
            out.push_str(cell);
        }
        out.push('\n');
    }
    out
}
