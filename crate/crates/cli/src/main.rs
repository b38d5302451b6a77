//! `focal`: classify plane congruences of P4 from chart files.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use focal_core::classify::{classify, ClassReport};
use focal_core::generators::{generate, GenSpec};
use focal_core::report::{conic_snapshot, report_text, report_to_string, snapshot_json, snapshot_text};
use focal_core::sampling::{validate_chart, SamplingConfig};
use focal_core::scalar::parse_scalar;
use focal_core::{parse_chart, ClassLabel, Error, PlaneChart};

const EXIT_ERROR: u8 = 1;
const EXIT_OUT_OF_SCOPE: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(name = "focal", version, about = "Focal loci and classification of plane congruences in P4")]
struct Cli {
    /// Worker threads for corpus and verify (0 = all cores). Never changes the output.
    #[arg(long, short = 'j', global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct RunArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Base points per decision.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    /// Extra base points allowed for non-generic samples.
    #[arg(long, default_value_t = 12)]
    budget: usize,
}

impl RunArgs {
    fn config(&self) -> SamplingConfig {
        SamplingConfig { seed: self.seed, samples: self.samples as usize, budget: self.budget, ..Default::default() }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify a chart.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Print the focal conic and developable directions at one base point.
    Conic {
        file: PathBuf,
        /// Base point as `u0,v0` with exact rationals, e.g. `1,-2/3`.
        #[arg(long)]
        at: String,
        #[arg(long)]
        json: bool,
    },
    /// Write generated charts of one class.
    Corpus {
        #[arg(long)]
        class: ClassLabel,
        #[arg(long, default_value_t = 25)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Re-classify every `.chart` file in a directory against its `expect:` line.
    Verify {
        dir: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Check that a chart parses and spans a nondegenerate congruence.
    Validate { file: PathBuf },
}

fn read_chart(path: &Path) -> Result<PlaneChart, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_chart(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_ERROR)
}

fn label_exit(report: &ClassReport) -> ExitCode {
    if report.in_scope() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_OUT_OF_SCOPE)
    }
}

fn cmd_classify(file: &Path, json: bool, run: &RunArgs) -> ExitCode {
    let chart = match read_chart(file) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    match classify(&chart, &run.config()) {
        Ok(report) => {
            if json {
                println!("{}", report_to_string(&report));
            } else {
                print!("{}", report_text(&report));
            }
            label_exit(&report)
        }
        Err(e) => fail(format!("{}: {e}", file.display())),
    }
}

fn parse_base(at: &str) -> Option<(focal_core::Scalar, focal_core::Scalar)> {
    let (u, v) = at.split_once(',')?;
    Some((parse_scalar(u)?, parse_scalar(v)?))
}

fn cmd_conic(file: &Path, at: &str, json: bool) -> ExitCode {
    let chart = match read_chart(file) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let Some(base) = parse_base(at) else {
        return fail(format!("cannot read base point {at:?}; expected u0,v0 with rationals like 1/2"));
    };
    match conic_snapshot(&chart, base) {
        Ok(snap) => {
            if json {
                println!("{}", snapshot_json(&snap));
            } else {
                print!("{}", snapshot_text(&snap));
            }
            ExitCode::SUCCESS
        }
        Err(e @ Error::DegenerateSpanAtBase) => fail(format!("{e}; choose another base point")),
        Err(e) => fail(e),
    }
}

fn cmd_corpus(class: ClassLabel, count: u64, seed: u64, out: &Path) -> ExitCode {
    if let Err(e) = fs::create_dir_all(out) {
        return fail(format!("{}: {e}", out.display()));
    }
    let results: Vec<Result<PathBuf, String>> = (0..count)
        .into_par_iter()
        .map(|i| {
            let path = out.join(format!("{}_{i:03}.chart", class.slug()));
            let generated = generate(&GenSpec::new(class, seed + i)).map_err(|e| format!("{}: {e}", path.display()))?;
            fs::write(&path, generated.chart.to_text()).map_err(|e| format!("{}: {e}", path.display()))?;
            Ok(path)
        })
        .collect();
    let mut failed = 0;
    for r in &results {
        match r {
            Ok(path) => println!("wrote {}", path.display()),
            Err(e) => {
                failed += 1;
                eprintln!("error: {e}");
            }
        }
    }
    if failed > 0 {
        ExitCode::from(EXIT_ERROR)
    } else {
        ExitCode::SUCCESS
    }
}

enum Outcome {
    Match(ClassLabel),
    Mismatch { expected: Option<ClassLabel>, got: ClassLabel },
    Failed(String),
}

fn verify_one(path: &Path, cfg: &SamplingConfig) -> Outcome {
    let chart = match read_chart(path) {
        Ok(c) => c,
        Err(e) => return Outcome::Failed(e),
    };
    match classify(&chart, cfg) {
        Ok(r) if Some(r.label) == chart.expect => Outcome::Match(r.label),
        Ok(r) => Outcome::Mismatch { expected: chart.expect, got: r.label },
        Err(e) => Outcome::Failed(e.to_string()),
    }
}

fn cmd_verify(dir: &Path, run: &RunArgs) -> ExitCode {
    let entries = match fs::read_dir(dir) {
        Ok(e) => e,
        Err(e) => return fail(format!("{}: {e}", dir.display())),
    };
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "chart"))
        .collect();
    paths.sort();
    let cfg = run.config();
    let outcomes: Vec<Outcome> = paths.par_iter().map(|p| verify_one(p, &cfg)).collect();
    let (mut matched, mut mismatched, mut failed) = (0, 0, 0);
    for (path, outcome) in paths.iter().zip(&outcomes) {
        let name = path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned());
        match outcome {
            Outcome::Match(label) => {
                matched += 1;
                println!("ok        {name}  {label}");
            }
            Outcome::Mismatch { expected, got } => {
                mismatched += 1;
                let expected = expected.map_or_else(|| "(no expect)".to_string(), |l| l.to_string());
                println!("MISMATCH  {name}  expected {expected}, got {got}");
            }
            Outcome::Failed(e) => {
                failed += 1;
                println!("ERROR     {name}  {e}");
            }
        }
    }
    println!("{matched}/{} match", paths.len());
    if mismatched > 0 || failed > 0 {
        ExitCode::from(EXIT_MISMATCH)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_validate(file: &Path) -> ExitCode {
    let chart = match read_chart(file) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    match validate_chart(&chart, &SamplingConfig::default()) {
        Ok(v) if v.ok => {
            println!("ok: planes span P4 (union dimension {})", v.realization_dim);
            ExitCode::SUCCESS
        }
        Ok(v) => {
            println!("degenerate: the planes stay in a space of dimension {}", v.realization_dim);
            ExitCode::from(EXIT_OUT_OF_SCOPE)
        }
        Err(e) => fail(format!("{}: {e}", file.display())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        // Only fails if a global pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global();
    }
    match &cli.command {
        Command::Classify { file, json, run } => cmd_classify(file, *json, run),
        Command::Conic { file, at, json } => cmd_conic(file, at, *json),
        Command::Corpus { class, count, seed, out } => cmd_corpus(*class, *count, *seed, out),
        Command::Verify { dir, run } => cmd_verify(dir, run),
        Command::Validate { file } => cmd_validate(file),
    }
}
