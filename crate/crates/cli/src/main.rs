use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use motspec_cli::fixtures;
use motspec_cli::io::{load_class, load_datum, InputError};
use motspec_cli::steenbrink::steenbrink_check;
use motspec_cli::suites;
use motspec_cli::ts::quasihomog_spectrum;
use motspec_core::datum::class_to_json_string;
use motspec_core::resolution::{gamma_threshold, iterated, iterated_vanishing, nearby, vanishing, zeta};
use motspec_core::{convolve, hsp1, hsp2};

#[derive(Parser)]
#[command(name = "motspec", version, about = "Hodge spectra from log-resolution data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum of the nearby cycles, or of the vanishing cycles with --phi.
    Spectrum {
        #[arg(long)]
        datum: PathBuf,
        #[arg(long)]
        phi: bool,
    },
    /// Motivic zeta function, expanded up to T^N.
    Zeta {
        #[arg(long)]
        datum: PathBuf,
        #[arg(long, default_value_t = 10)]
        truncate: usize,
    },
    /// Iterated nearby-cycle class of a joint datum and its two-variable spectrum.
    Iterated {
        #[arg(long)]
        joint: PathBuf,
        /// Use the vanishing cycles of f.
        #[arg(long)]
        phi: bool,
    },
    /// Spectrum of x_1^a_1 + ... + x_d^a_d.
    Ts {
        #[arg(long, value_delimiter = ',', required = true)]
        exponents: Vec<u64>,
    },
    /// Convolution of two one-monodromy class files.
    Convolve {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// Compares Sp(f) - Sp(f + g^N) with the iterated-cycle correction term.
    Steenbrink {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        fg: PathBuf,
        #[arg(long)]
        joint: PathBuf,
        #[arg(long = "N")]
        n: u64,
    },
    /// Runs a randomized property suite.
    Check {
        #[arg(long, value_parser = ["rings", "cones", "psi", "steenbrink", "all"])]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Lists, re-derives or writes the bundled fixtures.
    Fixtures {
        #[arg(long)]
        list: bool,
        /// Re-run the oracles the expected values were derived with.
        #[arg(long)]
        rederive: bool,
        /// Write each fixture datum as NAME.json into DIR.
        #[arg(long, value_name = "DIR")]
        write: Option<PathBuf>,
    },
}

enum Failure {
    Input(InputError),
    Check,
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Failure {
        Failure::Input(e)
    }
}

impl From<motspec_core::CoreError> for Failure {
    fn from(e: motspec_core::CoreError) -> Failure {
        Failure::Input(e.into())
    }
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Spectrum { datum, phi } => {
            let d = load_datum(&datum)?;
            let class = if phi { vanishing(&d)? } else { nearby(&d)? };
            println!("class: {class}");
            println!("Sp: {}", hsp1(&class)?);
        }
        Command::Zeta { datum, truncate } => {
            let d = load_datum(&datum)?;
            let z = zeta(&d)?;
            println!("{}", z.expand(truncate));
        }
        Command::Iterated { joint, phi } => {
            let d = load_datum(&joint)?;
            let class = if phi { iterated_vanishing(&d)? } else { iterated(&d)? };
            println!("class: {class}");
            println!("hsp2: {}", hsp2(&class)?);
        }
        Command::Ts { exponents } => {
            println!("{}", quasihomog_spectrum(&exponents)?);
        }
        Command::Convolve { left, right } => {
            let c = convolve(&load_class(&left)?, &load_class(&right)?)?;
            println!("{}", class_to_json_string(&c));
        }
        Command::Steenbrink { f, fg, joint, n } => {
            let sp_f = hsp1(&vanishing(&load_datum(&f)?)?)?;
            let sp_fgn = hsp1(&vanishing(&load_datum(&fg)?)?)?;
            let j = load_datum(&joint)?;
            let report = steenbrink_check(&sp_f, &sp_fgn, &iterated_vanishing(&j)?, n, &gamma_threshold(&j)?)?;
            println!("{report}");
            if !report.passed() {
                return Err(Failure::Check);
            }
        }
        Command::Check { suite, seed } => {
            let start = Instant::now();
            let results = suites::run(&suite, seed).ok_or_else(|| InputError(format!("unknown suite {suite:?}")))?;
            let failed = results.iter().filter(|r| !r.passed()).count();
            for r in &results {
                println!("{r}");
            }
            println!("{} checks, {failed} failed, {:.2?}", results.len(), start.elapsed());
            if failed > 0 {
                return Err(Failure::Check);
            }
        }
        Command::Fixtures { list, rederive, write } => {
            let all = fixtures::all()?;
            if list || (!rederive && write.is_none()) {
                for f in &all {
                    println!("{f}");
                }
            }
            if let Some(dir) = write {
                fs::create_dir_all(&dir).map_err(|e| InputError(format!("{}: {e}", dir.display())))?;
                for f in &all {
                    let path = dir.join(format!("{}.json", f.name));
                    fs::write(&path, f.datum.to_json_string() + "\n")
                        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
                    println!("wrote {}", path.display());
                }
            }
            if rederive {
                let runs = fixtures::rederive()?;
                for r in &runs {
                    println!("{r}");
                }
                if runs.iter().any(|r| !r.ok) {
                    return Err(Failure::Check);
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
