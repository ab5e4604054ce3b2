//! `palf` — calculator for positive twist factorizations on holed
//! spheres and the homology of the 4-manifolds they bound.

mod parse;
mod report;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use palf_core::curve::Surface;
use palf_core::factor::{
    classify_length3, enumerate_factorizations, equivalence_bfs, hurwitz_move, replay,
    total_monodromy, Budget, Classification, Direction, Verdict,
};
use palf_core::kirby::{filling_verdict, is_homology_sphere};
use palf_core::snf::{cokernel, smith_normal_form};

use report::{emit, SCHEMA};

#[derive(Parser)]
#[command(name = "palf", version, about = "positive factorization and filling calculator")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(clap::Args)]
struct InputArg {
    /// Inline input text (tuple, word, or matrix depending on the command)
    input: Option<String>,
    /// Read the input from a file instead
    #[arg(long)]
    file: Option<PathBuf>,
    /// Emit a machine-readable JSON report
    #[arg(long)]
    json: bool,
}

impl InputArg {
    fn text(&self) -> Result<String, String> {
        match (&self.input, &self.file) {
            (Some(t), None) => Ok(t.clone()),
            (None, Some(p)) => {
                std::fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))
            }
            (Some(_), Some(_)) => Err("give the input inline or via --file, not both".into()),
            (None, None) => Err("missing input (inline argument or --file)".into()),
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether the boundary 3-manifold is an integral homology sphere
    #[command(name = "check-hs")]
    CheckHs {
        #[command(flatten)]
        input: InputArg,
        /// Number of boundary components of the page
        #[arg(long, default_value_t = 4)]
        page: u32,
    },
    /// First homology of the filling and of its boundary
    H1 {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = 4)]
        page: u32,
    },
    /// Filling dichotomy report for a length-3 homology-sphere factorization
    Verdict {
        #[command(flatten)]
        input: InputArg,
    },
    /// Normal form of the total monodromy of a tuple
    Total {
        #[command(flatten)]
        input: InputArg,
    },
    /// Search for a move/conjugation certificate connecting two tuples
    Equiv {
        #[command(flatten)]
        input: InputArg,
        /// Second tuple (or the second line of --file)
        other: Option<String>,
        /// Maximum number of search states
        #[arg(long, default_value_t = 50_000)]
        budget: usize,
        /// Slope height limit for intermediate states
        #[arg(short = 'H', long, default_value_t = 64)]
        height: i64,
    },
    /// Certifying classifier for length-3 factorizations
    Classify {
        #[command(flatten)]
        input: InputArg,
        /// Second tuple (or the second line of --file)
        other: Option<String>,
    },
    /// Enumerate positive factorizations of a twist word within bounds
    Enum {
        #[command(flatten)]
        input: InputArg,
        /// Factorization length
        #[arg(short = 'm', long, default_value_t = 3)]
        length: usize,
        /// Slope height bound for candidate curves
        #[arg(short = 'H', long, default_value_t = 3)]
        height: i64,
        /// Conjugator word length bound for candidate curves
        #[arg(short = 'L', long = "conj-len", default_value_t = 2)]
        conj_len: usize,
    },
    /// Smith normal form of an integer matrix
    Snf {
        #[command(flatten)]
        input: InputArg,
    },
    /// Bounded listing of the Hurwitz-move orbit of a tuple
    Orbit {
        #[command(flatten)]
        input: InputArg,
        /// Maximum number of distinct tuples to list
        #[arg(long, default_value_t = 100)]
        budget: usize,
    },
}

fn s4() -> Surface {
    Surface::new(4).expect("4-holed sphere")
}

/// Resolves the two tuple texts of a binary command: both inline, or both
/// as lines of a `--file` input.
fn two_inputs(input: &InputArg, other: &Option<String>) -> Result<(String, String), String> {
    let first = input.text()?;
    if let Some(o) = other {
        return Ok((first, o.clone()));
    }
    let mut lines = first.lines().map(str::trim).filter(|l| !l.is_empty());
    match (lines.next(), lines.next()) {
        (Some(a), Some(b)) => Ok((a.to_string(), b.to_string())),
        _ => Err("missing second tuple (argument or second line of --file)".into()),
    }
}

/// exit 0: affirmative verdict; exit 1: negative verdict; exit 2: error
fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Cmd::CheckHs { input, page } => {
            let surface = Surface::new(page).map_err(|e| e.to_string())?;
            let text = input.text()?;
            let t = parse::parse_tuple(&text, surface).map_err(|e| e.to_string())?;
            let ev = is_homology_sphere(&t, page).map_err(|e| e.to_string())?;
            let rep = report::CheckHsReport::new(page, t.to_string(), &ev);
            let body = rep.text();
            emit(&rep, input.json, body);
            Ok(if ev.verdict { 0 } else { 1 })
        }
        Cmd::H1 { input, page } => {
            let surface = Surface::new(page).map_err(|e| e.to_string())?;
            let text = input.text()?;
            let t = parse::parse_tuple(&text, surface).map_err(|e| e.to_string())?;
            let ev = is_homology_sphere(&t, page).map_err(|e| e.to_string())?;
            let rep = report::H1Report {
                schema: SCHEMA,
                command: "h1",
                page,
                tuple: t.to_string(),
                h1_total: ev.h1_total.to_string(),
                h1_boundary: ev.h1_boundary.to_string(),
                h1_boundary_order: ev.h1_boundary.order(),
            };
            let body = format!(
                "H1(total space) = {}\nH1(boundary) = {}",
                rep.h1_total, rep.h1_boundary
            );
            emit(&rep, input.json, body);
            Ok(0)
        }
        Cmd::Verdict { input } => {
            let text = input.text()?;
            let t = parse::parse_tuple(&text, s4()).map_err(|e| e.to_string())?;
            let r = filling_verdict(&t).map_err(|e| e.to_string())?;
            let rep = report::VerdictReport::new(t.to_string(), &r);
            let body = format!(
                "homology sphere: true\neuler characteristic: {}\ncase: {}\nhandle cancellations found: {}\n{}",
                rep.euler_char, rep.case_shape, rep.cancellations_found, rep.dichotomy
            );
            emit(&rep, input.json, body);
            Ok(0)
        }
        Cmd::Total { input } => {
            let text = input.text()?;
            let t = parse::parse_tuple(&text, s4()).map_err(|e| e.to_string())?;
            let total = total_monodromy(&t).map_err(|e| e.to_string())?;
            let rep = report::TotalReport {
                schema: SCHEMA,
                command: "total",
                tuple: t.to_string(),
                delta: total.boundary_exp(),
                word: total.word().to_string(),
                display: total.to_string(),
            };
            let body = total.to_string();
            emit(&rep, input.json, body);
            Ok(0)
        }
        Cmd::Equiv { input, other, budget, height } => {
            let (text, other) = two_inputs(&input, &other)?;
            let t1 = parse::parse_tuple(&text, s4()).map_err(|e| e.to_string())?;
            let t2 = parse::parse_tuple(&other, s4()).map_err(|e| e.to_string())?;
            let limits = Budget { max_states: budget, max_height: height };
            let verdict = equivalence_bfs(&t1, &t2, &limits).map_err(|e| e.to_string())?;
            let (name, reason, cert, code) = match &verdict {
                Verdict::Equivalent(cert) => {
                    let replayed = replay(&t1, cert).map_err(|e| e.to_string())?;
                    if replayed != t2 {
                        return Err("internal: certificate failed to replay".into());
                    }
                    ("equivalent", None, Some(report::cert_strings(cert)), 0)
                }
                Verdict::Distinguished(r) => ("distinguished", Some(r.to_string()), None, 1),
                Verdict::Unknown => {
                    ("unknown", Some("search budget exhausted".to_string()), None, 1)
                }
            };
            let rep = report::EquivReport {
                schema: SCHEMA,
                command: "equiv",
                left: t1.to_string(),
                right: t2.to_string(),
                verdict: name,
                reason: reason.clone(),
                certificate: cert.clone(),
            };
            let body = match (&reason, &cert) {
                (_, Some(steps)) if steps.is_empty() => "equivalent (tuples are equal)".to_string(),
                (_, Some(steps)) => format!("equivalent:\n  {}", steps.join("\n  ")),
                (Some(r), None) => format!("{name}: {r}"),
                _ => name.to_string(),
            };
            emit(&rep, input.json, body);
            Ok(code)
        }
        Cmd::Classify { input, other } => {
            let (text, other) = two_inputs(&input, &other)?;
            let t1 = parse::parse_tuple(&text, s4()).map_err(|e| e.to_string())?;
            let t2 = parse::parse_tuple(&other, s4()).map_err(|e| e.to_string())?;
            let result = classify_length3(&t1, &t2).map_err(|e| e.to_string())?;
            let (name, reason, cert, code) = match &result {
                Classification::Equivalent(cert) => {
                    let replayed = replay(&t1, cert).map_err(|e| e.to_string())?;
                    if replayed != t2 {
                        return Err("internal: certificate failed to replay".into());
                    }
                    ("equivalent", None, Some(report::cert_strings(cert)), 0)
                }
                Classification::NotApplicable(r) => ("not-applicable", Some(r.clone()), None, 1),
            };
            let rep = report::EquivReport {
                schema: SCHEMA,
                command: "classify",
                left: t1.to_string(),
                right: t2.to_string(),
                verdict: name,
                reason: reason.clone(),
                certificate: cert.clone(),
            };
            let body = match (&reason, &cert) {
                (_, Some(steps)) if steps.is_empty() => "equivalent (tuples are equal)".to_string(),
                (_, Some(steps)) => format!("equivalent:\n  {}", steps.join("\n  ")),
                (Some(r), None) => format!("{name}: {r}"),
                _ => name.to_string(),
            };
            emit(&rep, input.json, body);
            Ok(code)
        }
        Cmd::Enum { input, length, height, conj_len } => {
            let text = input.text()?;
            let phi = parse::parse_word(&text, s4()).map_err(|e| e.to_string())?;
            let found =
                enumerate_factorizations(&phi, length, height, conj_len).map_err(|e| e.to_string())?;
            let rep = report::EnumReport {
                schema: SCHEMA,
                command: "enum",
                total: phi.to_string(),
                length,
                height_bound: height,
                conjugator_bound: conj_len,
                count: found.len(),
                factorizations: found.iter().map(|t| t.to_string()).collect(),
            };
            let body = if found.is_empty() {
                "no factorizations within bounds".to_string()
            } else {
                rep.factorizations.join("\n")
            };
            emit(&rep, input.json, body);
            Ok(0)
        }
        Cmd::Snf { input } => {
            let text = input.text()?;
            let m = parse::parse_matrix(&text).map_err(|e| e.to_string())?;
            let s = smith_normal_form(&m);
            let rep = report::SnfReport {
                schema: SCHEMA,
                command: "snf",
                matrix: m.to_string(),
                divisors: s.divisors.clone(),
                u: s.u.to_string(),
                v: s.v.to_string(),
                d: s.d.to_string(),
                cokernel: cokernel(&m).to_string(),
            };
            let body = format!(
                "divisors: {:?}\ncokernel: {}",
                rep.divisors, rep.cokernel
            );
            emit(&rep, input.json, body);
            Ok(0)
        }
        Cmd::Orbit { input, budget } => {
            let text = input.text()?;
            let start = parse::parse_tuple(&text, s4()).map_err(|e| e.to_string())?;
            let mut seen = BTreeSet::new();
            let mut frontier = vec![start.clone()];
            seen.insert(start.to_string());
            let mut exhausted = true;
            while let Some(t) = frontier.pop() {
                if seen.len() >= budget {
                    exhausted = false;
                    break;
                }
                for i in 1..t.len() {
                    for dir in [Direction::Forward, Direction::Inverse] {
                        let Ok(next) = hurwitz_move(&t, i, dir) else { continue };
                        if seen.insert(next.to_string()) {
                            frontier.push(next);
                        }
                    }
                }
            }
            let states: Vec<String> = seen.into_iter().collect();
            let rep = report::OrbitReport {
                schema: SCHEMA,
                command: "orbit",
                start: start.to_string(),
                budget,
                exhausted,
                states: states.clone(),
            };
            let body = format!(
                "{} tuple(s){}:\n{}",
                states.len(),
                if exhausted { "" } else { " (budget reached)" },
                states.join("\n")
            );
            emit(&rep, input.json, body);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
