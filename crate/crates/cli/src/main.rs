//! Command-line front end for `blpack`.
//!
//! Exit codes: 0 success (SAT, accepted), 1 negative answer (UNSAT, packing
//! rejected), 2 UNKNOWN (limit reached), 3 bad input or a certificate that
//! does not check.

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Duration;

use blpack::io::{parse_instance, parse_packing, parse_sequence, render_svg, serialize_packing, serialize_sequence};
use blpack::relations::first_unstable;
use blpack::{
    enumerate_corners, extract_sequence, extraction_order, is_feasible, oracle_lattice, replay, solve_exact, stabilize,
    Dims, Instance, OracleVerdict, Orientation, Outcome, Packing, Scalar, SolveConfig, Support,
};
use clap::{Parser, Subcommand};

const OK: u8 = 0;
const NO: u8 = 1;
const UNKNOWN: u8 = 2;
const BAD_INPUT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "blpack",
    version,
    about = "Exact rectangle packing with bottom-left certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the instance packs; exit 0 SAT, 1 UNSAT, 2 UNKNOWN.
    Solve {
        instance: PathBuf,
        /// Search on one thread, reproducibly.
        #[arg(long)]
        deterministic: bool,
        #[arg(long, value_name = "N")]
        node_limit: Option<u64>,
        /// Seconds; fractions allowed.
        #[arg(long, value_name = "S")]
        time_limit: Option<f64>,
        /// Write the packing here instead of standard output.
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
        /// Write the placement sequence here instead of standard output.
        #[arg(long, value_name = "FILE")]
        seq: Option<PathBuf>,
    },
    /// Check that a packing is feasible (and with --stable, bottom-left stable).
    Verify {
        instance: PathBuf,
        packing: PathBuf,
        #[arg(long)]
        stable: bool,
    },
    /// Check a placement sequence action by action and print the packing it builds.
    Replay { instance: PathBuf, sequence: PathBuf },
    /// Slide a feasible packing down and left into a stable one.
    Stabilize {
        instance: PathBuf,
        packing: PathBuf,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        seq: Option<PathBuf>,
    },
    /// Print the extraction order of a stable packing and its placement sequence.
    Order { instance: PathBuf, packing: PathBuf },
    /// List the bottom-left corners available to a rectangle of the given size.
    Corners {
        instance: PathBuf,
        packing: PathBuf,
        #[arg(long, value_name = "WxH")]
        dims: String,
    },
    /// Draw a packing as SVG.
    Render {
        instance: PathBuf,
        packing: PathBuf,
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Decide an integer instance by brute force over unit cells.
    Oracle { instance: PathBuf },
}

struct Failure(String);

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Exit = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Result<Arc<Instance>, Failure> {
    let text = read(path)?;
    parse_instance(&text)
        .map(Arc::new)
        .map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_packing(path: &Path, instance: &Arc<Instance>) -> Result<Packing, Failure> {
    let text = read(path)?;
    parse_packing(&text, instance).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn emit(text: &str, dest: Option<&Path>) -> Result<(), Failure> {
    match dest {
        Some(path) => fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_dims(text: &str) -> Result<Dims, Failure> {
    let (w, h) = text
        .split_once(['x', 'X'])
        .ok_or_else(|| Failure(format!("--dims: expected WxH, got {text:?}")))?;
    let w: Scalar = w.trim().parse().map_err(|e| Failure(format!("--dims: {e}")))?;
    let h: Scalar = h.trim().parse().map_err(|e| Failure(format!("--dims: {e}")))?;
    Ok(Dims::new(w, h)?)
}

fn support(s: &Support) -> String {
    match s {
        Support::Wall => "wall".to_string(),
        Support::Rect(id) => id.to_string(),
    }
}

fn run(command: Command) -> Exit {
    match command {
        Command::Solve {
            instance,
            deterministic,
            node_limit,
            time_limit,
            output,
            seq,
        } => {
            let inst = load_instance(&instance)?;
            let time_limit = match time_limit {
                Some(s) if s.is_finite() && s >= 0.0 => Some(Duration::from_secs_f64(s)),
                Some(s) => return Err(Failure(format!("--time-limit: {s} is not a duration"))),
                None => None,
            };
            let cfg = SolveConfig {
                node_limit,
                time_limit,
                deterministic,
                ..Default::default()
            };
            let verdict = solve_exact(&inst, &cfg);
            match verdict.outcome {
                Outcome::Sat { packing, sequence } => {
                    eprintln!("SAT ({} nodes)", verdict.stats.nodes);
                    emit(&serialize_packing(&packing), output.as_deref())?;
                    emit(&serialize_sequence(&sequence, &inst), seq.as_deref())?;
                    Ok(OK)
                }
                Outcome::Unsat => {
                    eprintln!("UNSAT ({} nodes)", verdict.stats.nodes);
                    Ok(NO)
                }
                Outcome::Unknown(reason) => {
                    eprintln!("UNKNOWN: {reason} ({} nodes)", verdict.stats.nodes);
                    Ok(UNKNOWN)
                }
            }
        }
        Command::Verify {
            instance,
            packing,
            stable,
        } => {
            let inst = load_instance(&instance)?;
            let p = load_packing(&packing, &inst)?;
            if !p.is_complete() {
                eprintln!("rejected: {} of {} rectangles placed", p.len(), inst.len());
                return Ok(NO);
            }
            if !is_feasible(&p) {
                eprintln!("rejected: rectangles overlap or leave the container");
                return Ok(NO);
            }
            if stable {
                if let Some(id) = first_unstable(&p)? {
                    eprintln!("rejected: rectangle {id} can still slide down or left");
                    return Ok(NO);
                }
            }
            println!("ok");
            Ok(OK)
        }
        Command::Replay { instance, sequence } => {
            let inst = load_instance(&instance)?;
            let text = read(&sequence)?;
            let seq = parse_sequence(&text, &inst).map_err(|e| Failure(format!("{}: {e}", sequence.display())))?;
            let p = replay(&inst, &seq)?;
            if !p.is_complete() {
                return Err(Failure(format!(
                    "sequence places {} of {} rectangles",
                    p.len(),
                    inst.len()
                )));
            }
            print!("{}", serialize_packing(&p));
            Ok(OK)
        }
        Command::Stabilize {
            instance,
            packing,
            output,
            seq,
        } => {
            let inst = load_instance(&instance)?;
            let p = load_packing(&packing, &inst)?;
            let (out, sequence) = stabilize(&p)?;
            emit(&serialize_packing(&out), output.as_deref())?;
            emit(&serialize_sequence(&sequence, &inst), seq.as_deref())?;
            Ok(OK)
        }
        Command::Order { instance, packing } => {
            let inst = load_instance(&instance)?;
            let p = load_packing(&packing, &inst)?;
            let order = extraction_order(&p)?;
            let sequence = extract_sequence(&p)?;
            let ids: Vec<String> = order.iter().map(|id| id.to_string()).collect();
            println!("{}", ids.join(" "));
            print!("{}", serialize_sequence(&sequence, &inst));
            Ok(OK)
        }
        Command::Corners {
            instance,
            packing,
            dims,
        } => {
            let inst = load_instance(&instance)?;
            let p = load_packing(&packing, &inst)?;
            let dims = parse_dims(&dims)?;
            println!("x\ty\tleft\tbottom");
            for c in enumerate_corners(&p, &dims, Orientation::Horizontal) {
                println!(
                    "{}\t{}\t{}\t{}",
                    c.x,
                    c.y,
                    support(&c.left_support),
                    support(&c.bottom_support)
                );
            }
            Ok(OK)
        }
        Command::Render {
            instance,
            packing,
            output,
        } => {
            let inst = load_instance(&instance)?;
            let p = load_packing(&packing, &inst)?;
            emit(&render_svg(&p), output.as_deref())?;
            Ok(OK)
        }
        Command::Oracle { instance } => {
            let inst = load_instance(&instance)?;
            match oracle_lattice(&inst)? {
                OracleVerdict::Sat(p) => {
                    eprintln!("SAT");
                    print!("{}", serialize_packing(&p));
                    Ok(OK)
                }
                OracleVerdict::Unsat => {
                    eprintln!("UNSAT");
                    Ok(NO)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    // clap's own usage errors would otherwise exit with 2, which means UNKNOWN here
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { BAD_INPUT } else { OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(BAD_INPUT)
        }
    }
}
