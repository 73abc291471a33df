use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qcdesign::catalog::{read_design_csv, write_design, DesignRecord};
use qcdesign::oracle::{brute_force_ma, verify_theorems};
use qcdesign::regsel::{ma_design, table1};
use qcdesign::wlp::{wlp_direct, wlp_distance};
use qcdesign::z4::{ReferenceKind, ReferenceSet};
use qcdesign::{Error, Result};

#[derive(Parser)]
#[command(name = "qcdesign", version, about = "Quaternary-code two-level designs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Distance,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// List the admissible generator columns.
    Omega {
        #[arg(long)]
        n: usize,
        /// Only columns with an even last digit (half-run designs).
        #[arg(long)]
        last_even: bool,
        #[arg(long)]
        json: bool,
    },
    /// Build a minimum aberration design.
    Ma {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        runs: usize,
        #[arg(long)]
        q: usize,
        /// Directory for the JSON record and CSV matrix.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write factor indices as the first CSV line.
        #[arg(long)]
        header: bool,
        /// Print the full record instead of a summary.
        #[arg(long)]
        json: bool,
    },
    /// Wordlength pattern of a CSV design.
    Wlp {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Exhaustive minimum aberration search (n = 2 or 3).
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        runs: usize,
        #[arg(long)]
        q: usize,
    },
    /// Run the verification suite (n = 2 or 3).
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Optimal B matrices for every deficiency (n = 3, 4 or 5).
    Table1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

fn configure_threads() {
    if let Some(n) = std::env::var("QCDESIGN_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // a second initialization only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Omega { n, last_even, json } => {
            let kind = if last_even { ReferenceKind::LastEven } else { ReferenceKind::Full };
            let set = ReferenceSet::new(n, kind)?;
            if json {
                println!("{}", serde_json::to_string(&set.vectors)?);
            } else {
                for g in &set.vectors {
                    println!("{g}");
                }
            }
        }
        Command::Ma { n, runs, q, out, header, json } => {
            let ma = ma_design(n, runs, q)?;
            let record = match &out {
                Some(dir) => {
                    let (json_path, csv_path, record) = write_design(dir, &ma, header)?;
                    eprintln!("wrote {} and {}", json_path.display(), csv_path.display());
                    record
                }
                None => DesignRecord::from_design(&ma),
            };
            if json {
                print!("{}", record.to_json()?);
            } else {
                println!("n = {n}, runs = {runs}, factors = {q}, deficiency = {}", ma.deficiency);
                if let Some(b) = ma.b() {
                    println!("B = {b}");
                }
                for k in 3..=6.min(q) {
                    println!("A{k} = {}", ma.wlp.term(k));
                }
                println!("resolution = {}", record.resolution);
            }
        }
        Command::Wlp { file, max_k, method } => {
            let d = read_design_csv(&file)?;
            if max_k == 0 || max_k > d.factors() {
                return Err(Error::KOutOfRange { k_max: max_k, factors: d.factors() });
            }
            let direct = matches!(method, Method::Direct | Method::Both).then(|| wlp_direct(&d, max_k)).transpose()?;
            let distance = matches!(method, Method::Distance | Method::Both)
                .then(|| wlp_distance(&d).map(|w| w.truncated(max_k)))
                .transpose()?;
            if let (Some(a), Some(b)) = (&direct, &distance) {
                if a != b {
                    return Err(Error::Inconsistent("direct and distance methods disagree".into()));
                }
            }
            print!("{}", direct.or(distance).expect("one method ran"));
        }
        Command::Search { n, runs, q } => {
            let report = brute_force_ma(n, q, runs)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        Command::Verify { n, json } => {
            let report = verify_theorems(n)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                for c in &report.claims {
                    let mark = if c.passed { "PASS" } else { "FAIL" };
                    println!("{mark} {:<22} {:>9} cases  {}", c.claim, c.cases, c.detail);
                }
            }
            if !report.all_passed() {
                return Err(Error::Inconsistent(format!("verification failed at n = {n}")));
            }
        }
        Command::Table1 { n, json } => {
            let rows = table1(n)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rows)?);
            } else {
                println!("{:>10}  {:<48} key", "deficiency", "B");
                for r in &rows {
                    let key: Vec<String> = r.key.iter().map(u128::to_string).collect();
                    println!("{:>10}  {:<48} ({})", r.deficiency, r.b.to_string(), key.join(", "));
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    configure_threads();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
