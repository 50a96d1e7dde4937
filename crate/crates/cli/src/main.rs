//! Command-line surface: check tables, construct them from orderings,
//! g-maps, and binary operations, enumerate orderings and uninorms, run the
//! verification suites, render contour plots, and emit gallery fixtures.
//!
//! Exit codes: 0 success, 1 suite-verdict mismatch (verify only),
//! 2 usage or parse error, 3 resource guard.

mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use chainops::constructors::{
    enumerate_single_peaked, from_gmap, iterate_binary, lift_binary, max_wrt, reduce_binary,
};
use chainops::gallery::gallery_get;
use chainops::properties::{check_table, isolated_points, neutral_elements, Guard};
use chainops::verifier::{
    enumerate_uninorms, run_suite, Constraint, SuiteOptions, DEFAULT_ENUMERATION_GUARD,
};
use chainops::{nop, Error, FiniteChain, GMap, LinearOrdering, OpTable, PropertyKind};

#[derive(Parser)]
#[command(name = "chainops", version, about = "n-ary operations on finite chains: check, construct, enumerate, verify, render")]
struct Cli {
    /// Evaluation budget for enumerations and matrix-quantified checks
    #[arg(long, global = true)]
    guard: Option<u64>,

    /// Worker threads for population scans
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check properties of a NOP table
    Check {
        file: PathBuf,
        /// Comma-separated list (default: every table property plus the
        /// neutral and isolated summaries)
        #[arg(long, value_delimiter = ',')]
        properties: Vec<String>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Build a table and emit it as NOP
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// List single-peaked orderings or uninorm tables
    Enumerate {
        #[command(subcommand)]
        kind: EnumerateKind,
    },
    /// Run a verification suite; exits 1 when the verdict does not match
    Verify {
        suite: String,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: usize,
        /// Scan the whole population (the default)
        #[arg(long, conflicts_with = "samples")]
        exhaustive: bool,
        /// Scan a random sample instead; the report is labeled non-exhaustive
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0x5EED)]
        seed: u64,
        /// Population override for the implication scans, e.g. qt+sym or all
        #[arg(long)]
        population: Option<String>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Draw the contour plot of a binary or ternary table
    Render {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
        format: RenderFormat,
    },
    /// Emit a gallery fixture as NOP plus its expected profile
    Gallery { name: String },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Maximum with respect to an ordering: `max --order 3,2,4,1 --n 2`
    Max {
        /// Permutation of 1..=k, smallest element first
        #[arg(long, value_delimiter = ',')]
        order: Vec<u32>,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Uninorm from a g-map: `gmap --k 4 --e 3 --g 4,3,3 --n 2`
    Gmap {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        e: u32,
        #[arg(long, value_delimiter = ',')]
        g: Vec<u32>,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Min/max lift of a binary table to arity n
    Lift {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Binary reduction G(x,y) = F((n-1).x, y)
    Reduce {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// n-fold iterate of an associative binary table
    Derive {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Args)]
struct OutArg {
    /// Write the NOP output here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum EnumerateKind {
    /// All single-peaked orderings, one permutation per line
    Orderings {
        #[arg(long)]
        k: u32,
    },
    /// All idempotent n-ary uninorms as NOP blocks
    Uninorms {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    /// Human-readable report
    Text,
    /// Machine-readable lines only
    Lines,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Ascii,
    Svg,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(match err {
                Error::ResourceGuard { .. } => 3,
                _ => 2,
            })
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    let enumeration_guard = cli.guard.unwrap_or(DEFAULT_ENUMERATION_GUARD);
    let matrix_guard = Guard::new(cli.guard.unwrap_or_else(|| Guard::default().max_evals));
    match cli.command {
        Command::Check {
            file,
            properties,
            format,
        } => cmd_check(&file, &properties, format, &matrix_guard),
        Command::Construct { kind } => cmd_construct(kind),
        Command::Enumerate { kind } => cmd_enumerate(kind, enumeration_guard),
        Command::Verify {
            suite,
            k,
            n,
            exhaustive: _,
            samples,
            seed,
            population,
            format,
        } => {
            let opts = SuiteOptions {
                guard: enumeration_guard,
                matrix_guard,
                samples,
                seed,
                population: population.as_deref().map(Constraint::parse).transpose()?,
                jobs: cli.jobs.max(1),
            };
            cmd_verify(&suite, k, n, &opts, format)
        }
        Command::Render { file, format } => {
            let op = read_table(&file)?;
            let drawing = match format {
                RenderFormat::Ascii => render::ascii(&op)?,
                RenderFormat::Svg => render::svg(&op)?,
            };
            print!("{drawing}");
            Ok(0)
        }
        Command::Gallery { name } => cmd_gallery(&name),
    }
}

fn read_table(path: &Path) -> Result<OpTable, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|err| Error::InvalidParameter(format!("cannot read {}: {err}", path.display())))?;
    nop::parse(&text)
}

fn emit(out: &OutArg, text: &str) -> Result<(), Error> {
    match &out.out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text).map_err(|err| {
            Error::InvalidParameter(format!("cannot write {}: {err}", path.display()))
        }),
    }
}

fn fmt_points(points: &std::collections::BTreeSet<Vec<u32>>) -> String {
    if points.is_empty() {
        return "none".into();
    }
    points
        .iter()
        .map(|p| {
            let inner: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            format!("({})", inner.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn fmt_elements(elements: &std::collections::BTreeSet<u32>) -> String {
    if elements.is_empty() {
        return "none".into();
    }
    elements
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_check(
    file: &Path,
    properties: &[String],
    format: ReportFormat,
    guard: &Guard,
) -> Result<u8, Error> {
    let op = read_table(file)?;
    if matches!(format, ReportFormat::Text) {
        println!(
            "# {}: k={} n={}",
            file.display(),
            op.chain().k(),
            op.arity()
        );
    }
    let default_mode = properties.is_empty();
    let kinds: Vec<PropertyKind> = if default_mode {
        PropertyKind::TABLE_CHECKS.to_vec()
    } else {
        properties
            .iter()
            .map(|name| {
                PropertyKind::parse(name).ok_or_else(|| {
                    Error::InvalidParameter(format!("unknown property `{name}`"))
                })
            })
            .collect::<Result<_, _>>()?
    };
    let mut exit = 0u8;
    for kind in kinds {
        match check_table(&op, kind, guard) {
            Ok(report) => println!("{report}"),
            Err(err) => {
                println!("ERROR {}: {err}", kind.name());
                exit = exit.max(match err {
                    Error::ResourceGuard { .. } => 3,
                    _ => 2,
                });
            }
        }
    }
    if default_mode {
        println!("NEUTRAL {}", fmt_elements(&neutral_elements(&op)));
        println!("ISOLATED {}", fmt_points(&isolated_points(&op)));
    }
    Ok(exit)
}

fn cmd_construct(kind: ConstructKind) -> Result<u8, Error> {
    let (table, out) = match kind {
        ConstructKind::Max { order, n, out } => {
            let chain = FiniteChain::new(order.len() as u32)?;
            let ord = LinearOrdering::new(chain, order)?;
            (max_wrt(&ord, n)?, out)
        }
        ConstructKind::Gmap { k, e, g, n, out } => {
            let gm = GMap::new(FiniteChain::new(k)?, e, g)?;
            (from_gmap(&gm, n)?, out)
        }
        ConstructKind::Lift { input, n, out } => (lift_binary(&read_table(&input)?, n)?, out),
        ConstructKind::Reduce { input, out } => (reduce_binary(&read_table(&input)?)?, out),
        ConstructKind::Derive { input, n, out } => (iterate_binary(&read_table(&input)?, n)?, out),
    };
    emit(&out, &nop::write(&table))?;
    Ok(0)
}

fn cmd_enumerate(kind: EnumerateKind, guard: u64) -> Result<u8, Error> {
    match kind {
        EnumerateKind::Orderings { k } => {
            let chain = FiniteChain::new(k)?;
            let estimate = 1u128 << (k.min(127) - 1);
            if estimate > guard as u128 {
                return Err(Error::ResourceGuard {
                    what: format!("enumeration of single-peaked orderings on L_{k}"),
                    estimate,
                    guard,
                });
            }
            let orderings = enumerate_single_peaked(chain);
            for ord in &orderings {
                println!("{ord}");
            }
            println!("count={}", orderings.len());
        }
        EnumerateKind::Uninorms { k, n } => {
            let uninorms = enumerate_uninorms(FiniteChain::new(k)?, n, guard)?;
            for op in &uninorms {
                println!("{}", nop::write(op));
            }
            println!("count={}", uninorms.len());
        }
    }
    Ok(0)
}

fn cmd_verify(
    suite: &str,
    k: u32,
    n: usize,
    opts: &SuiteOptions,
    format: ReportFormat,
) -> Result<u8, Error> {
    let report = run_suite(suite, FiniteChain::new(k)?, n, opts)?;
    match format {
        ReportFormat::Lines => println!("{report}"),
        ReportFormat::Text => {
            println!("suite: {}", report.suite);
            println!("scale: k={} n={}", report.k, report.n);
            println!(
                "population: {}{}",
                report.population,
                if report.exhaustive { "" } else { " (sampled)" }
            );
            if let Some(note) = &report.note {
                println!("note: {note}");
            }
            println!("verdict: {}", if report.holds { "holds" } else { "fails" });
            if let Some(cex) = &report.counterexample {
                println!("counterexample: {cex}");
            }
            println!("elapsed: {:?}", report.elapsed);
        }
    }
    Ok(if report.holds { 0 } else { 1 })
}

fn cmd_gallery(name: &str) -> Result<u8, Error> {
    let entry = gallery_get(name)?;
    println!("# gallery {}: {}", entry.name, entry.description);
    print!("{}", nop::write(&entry.op));
    println!("# expected");
    for (kind, holds) in &entry.expected {
        println!(
            "# PROP {} {}",
            kind.name(),
            if *holds { "HOLDS" } else { "FAILS" }
        );
    }
    println!("# NEUTRAL {}", fmt_elements(&entry.expected_neutrals));
    println!("# ISOLATED {}", fmt_points(&entry.expected_isolated));
    Ok(0)
}
