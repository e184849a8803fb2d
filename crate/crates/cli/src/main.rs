mod spec;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use topozeta::lab::{self, CheckConfig, Status, Suite};
use topozeta::lattice::DEFAULT_MAX_FLAGS;
use topozeta::matroid::MAX_GROUND;
use topozeta::zeta::{self, UpsilonAlgorithm, ZetaAlgorithm};
use topozeta::{LatticeOfFlats, Matroid, RationalFunction};

use spec::{BuildError, Spec};

const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;
const EXIT_THEOREM: u8 = 4;
const EXIT_COUNTEREXAMPLE: u8 = 5;

#[derive(Parser)]
#[command(
    name = "topozeta",
    version,
    about = "Exact topological zeta functions of matroids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ZetaAlgo {
    Auto,
    Flags,
    Recurrence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum UpsilonAlgo {
    Auto,
    Flags,
    Recurrence,
    Mobius,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Function {
    Zeta,
    Upsilon,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Theorems,
    Conjectures,
    All,
}

#[derive(Args)]
struct Common {
    /// Matroid expression, e.g. 'u:2,3', 'tr(g:k4) + ext(u:1,2)', 'bases:file.txt'.
    spec: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Print the topological zeta function.
    Zeta {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = ZetaAlgo::Auto)]
        algorithm: ZetaAlgo,
        /// Compute with both algorithms and require agreement.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_FLAGS)]
        max_flags: u64,
    },
    /// Print the Möbius inversion Y of the zeta function.
    Upsilon {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = UpsilonAlgo::Auto)]
        algorithm: UpsilonAlgo,
        /// Compute with every algorithm and require agreement.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_FLAGS)]
        max_flags: u64,
    },
    /// Print Taylor coefficients a_0..a_k at s = 0.
    Taylor {
        #[command(flatten)]
        common: Common,
        #[arg(short, long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Function::Zeta)]
        function: Function,
    },
    /// Print the size of a smallest circuit (|E| + 1 if there is none).
    Girth {
        #[command(flatten)]
        common: Common,
    },
    /// Print the flats by rank with their Möbius values μ(F, E).
    Lattice {
        #[command(flatten)]
        common: Common,
    },
    /// Run the theorem and conjecture checks over the built-in catalog.
    Check {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 7)]
        max_ground: usize,
        #[arg(long, default_value_t = 4)]
        kmax: usize,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_MAX_FLAGS)]
        max_flags: u64,
        /// Directory for failure witnesses.
        #[arg(long, default_value = "witnesses")]
        out: PathBuf,
    },
}

/// A message for stderr and the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn domain(e: topozeta::Error) -> Self {
        Self {
            code: EXIT_DOMAIN,
            message: e.to_string(),
        }
    }
}

impl From<BuildError> for Failure {
    fn from(e: BuildError) -> Self {
        match e {
            BuildError::Input(m) => Failure::usage(m),
            BuildError::Domain(e) => Failure::domain(e),
        }
    }
}

type Outcome = Result<(String, u8), Failure>;

fn load(spec: &str) -> Result<Matroid, Failure> {
    let parsed =
        Spec::parse(spec).map_err(|e| Failure::usage(format!("invalid matroid spec: {e}")))?;
    Ok(parsed.build()?)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn render_function(f: &RationalFunction, format: Format) -> String {
    match format {
        Format::Text => format!("{f}\n"),
        Format::Json => json(f),
    }
}

fn cmd_zeta(common: &Common, algorithm: ZetaAlgo, verify: bool, max_flags: u64) -> Outcome {
    let m = load(&common.spec)?;
    if !m.is_loopless() {
        eprintln!("note: the matroid has loops, so its zeta function is 0");
    }
    let by_flags = || zeta::zeta_by_flags_capped(&m, max_flags).map_err(Failure::domain);
    let z = if verify {
        let a = by_flags()?;
        let b = zeta::zeta_by_recurrence(&m);
        if a != b {
            return Err(Failure {
                code: EXIT_THEOREM,
                message: format!(
                    "algorithms disagree: {} gives {a}, {} gives {b}",
                    ZetaAlgorithm::FlagSum,
                    ZetaAlgorithm::Recurrence
                ),
            });
        }
        b
    } else {
        match algorithm {
            ZetaAlgo::Flags => by_flags()?,
            ZetaAlgo::Auto | ZetaAlgo::Recurrence => zeta::zeta_by_recurrence(&m),
        }
    };
    Ok((render_function(&z, common.format), 0))
}

fn cmd_upsilon(common: &Common, algorithm: UpsilonAlgo, verify: bool, max_flags: u64) -> Outcome {
    let m = load(&common.spec)?;
    let mobius = || zeta::upsilon_by_mobius(&m).map_err(Failure::domain);
    let recurrence = || zeta::upsilon_by_recurrence(&m).map_err(Failure::domain);
    let flags = || zeta::upsilon_by_flags_capped(&m, max_flags).map_err(Failure::domain);
    let y = if verify {
        let results = [
            (UpsilonAlgorithm::Recurrence, recurrence()?),
            (UpsilonAlgorithm::MobiusDef, mobius()?),
            (UpsilonAlgorithm::FlagProduct, flags()?),
        ];
        for (alg, y) in &results[1..] {
            if *y != results[0].1 {
                return Err(Failure {
                    code: EXIT_THEOREM,
                    message: format!(
                        "algorithms disagree: {alg} gives {y}, recurrence gives {}",
                        results[0].1
                    ),
                });
            }
        }
        results[0].1.clone()
    } else {
        match algorithm {
            UpsilonAlgo::Auto | UpsilonAlgo::Recurrence => recurrence()?,
            UpsilonAlgo::Mobius => mobius()?,
            UpsilonAlgo::Flags => flags()?,
        }
    };
    Ok((render_function(&y, common.format), 0))
}

fn cmd_taylor(common: &Common, k: usize, function: Function) -> Outcome {
    let m = load(&common.spec)?;
    let f = match function {
        Function::Zeta => zeta::zeta_by_recurrence(&m),
        Function::Upsilon => zeta::upsilon_by_recurrence(&m).map_err(Failure::domain)?,
    };
    let prefix = f.taylor(k).map_err(Failure::domain)?;
    Ok(match common.format {
        Format::Json => (json(&prefix), 0),
        Format::Text => {
            let items: Vec<String> = prefix.coeffs().iter().map(ToString::to_string).collect();
            (format!("{}\n", items.join(" ")), 0)
        }
    })
}

fn cmd_girth(common: &Common) -> Outcome {
    let m = load(&common.spec)?;
    let g = m.girth();
    Ok(match common.format {
        Format::Json => (json(&g), 0),
        Format::Text => (format!("{g}\n"), 0),
    })
}

#[derive(Serialize)]
struct FlatRecord {
    rank: usize,
    elements: Vec<usize>,
    mobius: i64,
}

fn cmd_lattice(common: &Common) -> Outcome {
    let m = load(&common.spec)?;
    let l = LatticeOfFlats::new(&m).map_err(Failure::domain)?;
    let records: Vec<FlatRecord> = l
        .flats()
        .iter()
        .map(|&f| FlatRecord {
            rank: l.rank_of_flat(f).expect("flat of the lattice"),
            elements: f.elements().collect(),
            mobius: l.mobius_to_top(f).expect("flat of the lattice"),
        })
        .collect();
    let out = match common.format {
        Format::Json => json(&records),
        Format::Text => {
            let mut out = String::new();
            for r in 0..=l.rank() {
                writeln!(out, "rank {r}:").unwrap();
                for rec in records.iter().filter(|x| x.rank == r) {
                    let elems: Vec<String> = rec.elements.iter().map(ToString::to_string).collect();
                    writeln!(out, "  {{{}}}  mu = {}", elems.join(","), rec.mobius).unwrap();
                }
            }
            out
        }
    };
    Ok((out, 0))
}

fn write_witnesses(dir: &Path, reports: &[lab::CheckReport]) -> Result<usize, Failure> {
    let failing: Vec<(usize, &lab::CheckReport)> = reports
        .iter()
        .enumerate()
        .filter(|(_, r)| r.status == Status::Fails)
        .collect();
    if failing.is_empty() {
        return Ok(0);
    }
    let io = |e: std::io::Error| Failure {
        code: EXIT_DOMAIN,
        message: format!("cannot write witnesses to {}: {e}", dir.display()),
    };
    std::fs::create_dir_all(dir).map_err(io)?;
    for (i, r) in &failing {
        let path = dir.join(format!("{:05}-{}.json", i, r.check.name()));
        let body = serde_json::to_string_pretty(r).expect("serializable") + "\n";
        std::fs::write(path, body).map_err(io)?;
    }
    Ok(failing.len())
}

#[allow(clippy::too_many_arguments)]
fn cmd_check(
    suite: SuiteArg,
    max_ground: usize,
    kmax: usize,
    jobs: usize,
    format: Format,
    max_flags: u64,
    out: &Path,
) -> Outcome {
    if max_ground > MAX_GROUND {
        return Err(Failure::usage(format!(
            "--max-ground must be at most {MAX_GROUND}"
        )));
    }
    let config = CheckConfig {
        kmax,
        max_flags,
        jobs,
        suite: match suite {
            SuiteArg::Theorems => Suite::Theorems,
            SuiteArg::Conjectures => Suite::Conjectures,
            SuiteArg::All => Suite::All,
        },
        ..CheckConfig::default()
    };
    let catalog = lab::build_catalog(max_ground);
    let reports = lab::run_all_checks(&catalog, &config);
    let summary = lab::summarize(&reports);
    let text = match format {
        Format::Json => lab::to_json_lines(&reports),
        Format::Text => lab::render_text(&reports),
    };
    let written = write_witnesses(out, &reports)?;
    if written > 0 {
        eprintln!("wrote {written} witness file(s) to {}", out.display());
    }
    let code = if summary.theorems.fails > 0 {
        EXIT_THEOREM
    } else if summary.conjectures.fails > 0 {
        EXIT_COUNTEREXAMPLE
    } else {
        0
    };
    Ok((text, code))
}

fn run(cli: Cli) -> Outcome {
    match &cli.command {
        Command::Zeta {
            common,
            algorithm,
            verify,
            max_flags,
        } => cmd_zeta(common, *algorithm, *verify, *max_flags),
        Command::Upsilon {
            common,
            algorithm,
            verify,
            max_flags,
        } => cmd_upsilon(common, *algorithm, *verify, *max_flags),
        Command::Taylor {
            common,
            k,
            function,
        } => cmd_taylor(common, *k, *function),
        Command::Girth { common } => cmd_girth(common),
        Command::Lattice { common } => cmd_lattice(common),
        Command::Check {
            suite,
            max_ground,
            kmax,
            jobs,
            format,
            max_flags,
            out,
        } => cmd_check(*suite, *max_ground, *kmax, *jobs, *format, *max_flags, out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
