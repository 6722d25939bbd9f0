//! Command-line surface: check, translate, search, trace.
//!
//! Machine output (traces, evidence JSON) goes to standard output;
//! everything meant for a person goes to standard error. Exit codes are
//! part of the contract: 0 certified or success, 1 evidence rejected or
//! nothing found, 2 unusable input (file, JSON, schema, formula, flags),
//! 3 a resource limit or an internal disagreement.
//!
//! Resource limits come from the environment here and nowhere else:
//! `MODALCERT_KERNEL_LIMIT` caps kernel rule applications and
//! `MODALCERT_ORACLE_LIMIT` caps oracle states; unreadable values fall
//! back to the defaults.

use crate::adapters::{ls_to_lmf, ns_to_lmf, os_to_star, pt_to_lmf};
use crate::evidence::{parse_evidence, print_evidence, Evidence, EvidenceFile};
use crate::formula::parse_formula;
use crate::kernel::{check, CheckError, KernelConfig, ProofTrace};
use crate::kripke::{decide_validity, OracleConfig, Validity, WorldId};
use crate::layers::{
    erase_groups, lmf_hooks, lmfm_hooks, singleton_groups, star_hooks, star_to_multifoc,
    synthesize_star, validate_lmf, validate_lmfm, validate_star, LmfCert, LmfmCert, StarCert,
};
use crate::polarized::{tr, PolFormula, WorldTerm};
use crate::search::{search_lmf, SearchBudget};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};

const EXIT_CERTIFIED: i32 = 0;
const EXIT_REJECTED: i32 = 1;
const EXIT_INPUT: i32 = 2;
const EXIT_LIMIT: i32 = 3;

#[derive(Parser)]
#[command(
    name = "modalcert",
    version,
    about = "Certify modal proof evidence through a focused kernel"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check an evidence file; exit 0 exactly when it certifies.
    Check {
        /// Evidence JSON file.
        file: PathBuf,
        /// Print the kernel trace to standard output.
        #[arg(long)]
        trace: bool,
        /// Also decide validity semantically and fail on disagreement.
        #[arg(long)]
        oracle_validate: bool,
    },
    /// Re-express an evidence file as a layer certificate on stdout.
    Translate {
        /// Evidence JSON file.
        file: PathBuf,
        /// Target layer.
        #[arg(long, value_enum)]
        to: Layer,
    },
    /// Search for lmf evidence for a formula; print it on success.
    Search {
        /// Formula text, e.g. "<>(p & ~q) | (<>~p | []q)".
        formula: String,
        /// Limits as D,N: decides per branch, total rule applications.
        #[arg(long, default_value = "16,100000", value_parser = parse_budget)]
        budget: SearchBudget,
    },
    /// Check an evidence file and print the kernel trace.
    Trace {
        /// Evidence JSON file.
        file: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Layer {
    Lmf,
    Lmfm,
    Lmfstar,
}

fn parse_budget(text: &str) -> Result<SearchBudget, String> {
    let Some((d, n)) = text.split_once(',') else {
        return Err("expected D,N (decides, rule applications)".into());
    };
    let max_decides: u32 = d
        .trim()
        .parse()
        .map_err(|_| format!("`{d}` is not a decide limit"))?;
    let max_nodes: u64 = n
        .trim()
        .parse()
        .map_err(|_| format!("`{n}` is not a rule-application limit"))?;
    if max_decides == 0 || max_nodes == 0 {
        return Err("both limits must be at least 1".into());
    }
    Ok(SearchBudget {
        max_decides,
        max_nodes,
    })
}

/// Entry point behind `main`; returns the process exit code.
pub fn run() -> i32 {
    match Cli::parse().cmd {
        Cmd::Check {
            file,
            trace,
            oracle_validate,
        } => cmd_check(&file, trace, oracle_validate),
        Cmd::Translate { file, to } => cmd_translate(&file, to),
        Cmd::Search { formula, budget } => cmd_search(&formula, &budget),
        Cmd::Trace { file } => cmd_check(&file, true, false),
    }
}

/// Why evidence did not certify.
#[derive(Debug)]
pub enum Rejection {
    /// The evidence is structurally unusable for this goal.
    Static(String),
    /// The kernel found no accepting run.
    Kernel,
    /// The kernel hit its rule-application limit.
    Limit(u64),
}

impl Rejection {
    pub fn exit(&self) -> i32 {
        match self {
            Rejection::Static(_) | Rejection::Kernel => EXIT_REJECTED,
            Rejection::Limit(_) => EXIT_LIMIT,
        }
    }

    fn report(&self) {
        match self {
            Rejection::Static(msg) => eprintln!("rejected: {msg}"),
            Rejection::Kernel => eprintln!("rejected: the kernel found no accepting run"),
            Rejection::Limit(n) => eprintln!("limit: kernel exceeded {n} rule applications"),
        }
    }
}

fn kernel_outcome(r: Result<ProofTrace, CheckError>) -> Result<ProofTrace, Rejection> {
    r.map_err(|e| match e {
        CheckError::Rejected => Rejection::Kernel,
        CheckError::Limit { limit } => Rejection::Limit(limit),
    })
}

fn root_world_goal(file: &EvidenceFile) -> PolFormula {
    tr(&file.formula, &WorldTerm::Const(WorldId(0)))
}

/// Elaborates per format and runs the kernel.
pub fn check_evidence(file: &EvidenceFile, cfg: &KernelConfig) -> Result<ProofTrace, Rejection> {
    let refuse = |e: &dyn std::fmt::Display| Rejection::Static(e.to_string());
    let goal = &file.formula;
    match &file.evidence {
        Evidence::Lmf(c) => {
            validate_lmf(goal, c).map_err(|e| refuse(&e))?;
            let (fpc, st) = lmf_hooks(c);
            kernel_outcome(check(&fpc, st, &root_world_goal(file), cfg))
        }
        Evidence::Lmfm(c) => {
            validate_lmfm(goal, c).map_err(|e| refuse(&e))?;
            let (fpc, st) = lmfm_hooks(c);
            kernel_outcome(check(&fpc, st, &root_world_goal(file), cfg))
        }
        Evidence::LmfStar(c) => {
            validate_star(goal, c).map_err(|e| refuse(&e))?;
            let (fpc, st) = star_hooks(c);
            kernel_outcome(check(&fpc, st, &root_world_goal(file), cfg))
        }
        Evidence::Ls(c) => {
            let cert = ls_to_lmf(c, goal).map_err(|e| refuse(&e))?;
            let (fpc, st) = lmf_hooks(&cert);
            kernel_outcome(check(&fpc, st, &root_world_goal(file), cfg))
        }
        Evidence::Pt(c) => {
            let (cert, polarized) = pt_to_lmf(c, goal).map_err(|e| refuse(&e))?;
            let (fpc, st) = lmf_hooks(&cert);
            kernel_outcome(check(&fpc, st, &polarized, cfg))
        }
        Evidence::Os(c) => {
            let star = os_to_star(c, goal).map_err(|e| refuse(&e))?;
            let (fpc, st) = star_hooks(&star);
            kernel_outcome(check(&fpc, st, &root_world_goal(file), cfg))
        }
        Evidence::Ns(c) => {
            let cert = ns_to_lmf(c, goal).map_err(|e| refuse(&e))?;
            validate_lmf(goal, &cert).map_err(|e| refuse(&e))?;
            let (fpc, st) = lmf_hooks(&cert);
            kernel_outcome(check(&fpc, st, &root_world_goal(file), cfg))
        }
    }
}

/// Writes machine output. A consumer that closes the pipe early
/// (`modalcert trace f | head`) ends the conversation, not the process's
/// good standing: the verdict was already reached.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let done = out.write_all(text.as_bytes()).and_then(|()| out.flush());
    if let Err(e) = done {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(EXIT_CERTIFIED);
        }
        eprintln!("output: {e}");
        std::process::exit(EXIT_INPUT);
    }
}

fn load(path: &Path) -> Result<EvidenceFile, i32> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("input: cannot read {}: {e}", path.display());
        EXIT_INPUT
    })?;
    parse_evidence(&text).map_err(|e| {
        eprintln!("input: {}: {e}", path.display());
        EXIT_INPUT
    })
}

fn cmd_check(path: &Path, trace: bool, oracle_validate: bool) -> i32 {
    let file = match load(path) {
        Ok(f) => f,
        Err(code) => return code,
    };
    let cfg = KernelConfig::from_env();
    let outcome = check_evidence(&file, &cfg);
    let proof = match outcome {
        Ok(t) => t,
        Err(r) => {
            r.report();
            return r.exit();
        }
    };
    if oracle_validate {
        match decide_validity(&file.formula, &OracleConfig::from_env()) {
            Ok(Validity::Valid) => eprintln!("oracle: agrees, the formula is valid"),
            Ok(Validity::Countermodel(_, _)) => {
                eprintln!(
                    "internal: evidence certified but the oracle found a countermodel for `{}`",
                    file.formula_text
                );
                return EXIT_LIMIT;
            }
            Err(e) => {
                eprintln!("limit: {e}");
                return EXIT_LIMIT;
            }
        }
    }
    if trace {
        emit(&proof.to_string());
    }
    eprintln!(
        "certified: {} ({} decides)",
        file.formula_text,
        proof.decide_count()
    );
    EXIT_CERTIFIED
}

enum NativeLayer {
    Lmf(LmfCert),
    Lmfm(LmfmCert),
    Star(StarCert),
}

fn cmd_translate(path: &Path, to: Layer) -> i32 {
    let file = match load(path) {
        Ok(f) => f,
        Err(code) => return code,
    };
    let goal = &file.formula;
    let refuse = |e: &dyn std::fmt::Display| -> i32 {
        eprintln!("rejected: {e}");
        EXIT_REJECTED
    };
    // First into the format's own layer, validating on the way in.
    let native = match &file.evidence {
        Evidence::Lmf(c) => match validate_lmf(goal, c) {
            Ok(()) => NativeLayer::Lmf(c.clone()),
            Err(e) => return refuse(&e),
        },
        Evidence::Lmfm(c) => match validate_lmfm(goal, c) {
            Ok(()) => NativeLayer::Lmfm(c.clone()),
            Err(e) => return refuse(&e),
        },
        Evidence::LmfStar(c) => match validate_star(goal, c) {
            Ok(()) => NativeLayer::Star(c.clone()),
            Err(e) => return refuse(&e),
        },
        Evidence::Ls(c) => match ls_to_lmf(c, goal) {
            Ok(cert) => NativeLayer::Lmf(cert),
            Err(e) => return refuse(&e),
        },
        Evidence::Pt(c) => match pt_to_lmf(c, goal) {
            Ok((cert, _)) => NativeLayer::Lmf(cert),
            Err(e) => return refuse(&e),
        },
        Evidence::Os(c) => match os_to_star(c, goal) {
            Ok(star) => NativeLayer::Star(star),
            Err(e) => return refuse(&e),
        },
        Evidence::Ns(c) => match ns_to_lmf(c, goal) {
            Ok(cert) => NativeLayer::Lmf(cert),
            Err(e) => return refuse(&e),
        },
    };
    // Then across layers.
    let out = match (native, to) {
        (NativeLayer::Lmf(c), Layer::Lmf) => Evidence::Lmf(c),
        (NativeLayer::Lmf(c), Layer::Lmfm) => Evidence::Lmfm(singleton_groups(&c)),
        (NativeLayer::Lmf(c), Layer::Lmfstar) => {
            match synthesize_star(&singleton_groups(&c), goal) {
                Ok(star) => Evidence::LmfStar(star),
                Err(e) => return refuse(&e),
            }
        }
        (NativeLayer::Lmfm(c), Layer::Lmf) => Evidence::Lmf(erase_groups(&c)),
        (NativeLayer::Lmfm(c), Layer::Lmfm) => Evidence::Lmfm(c),
        (NativeLayer::Lmfm(c), Layer::Lmfstar) => match synthesize_star(&c, goal) {
            Ok(star) => Evidence::LmfStar(star),
            Err(e) => return refuse(&e),
        },
        (NativeLayer::Star(c), Layer::Lmf) => Evidence::Lmf(erase_groups(&star_to_multifoc(&c).0)),
        (NativeLayer::Star(c), Layer::Lmfm) => Evidence::Lmfm(star_to_multifoc(&c).0),
        (NativeLayer::Star(c), Layer::Lmfstar) => Evidence::LmfStar(c),
    };
    emit(&print_evidence(&file.formula_text, &out));
    EXIT_CERTIFIED
}

fn cmd_search(formula_text: &str, budget: &SearchBudget) -> i32 {
    let goal = match parse_formula(formula_text) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("input: formula: {e}");
            return EXIT_INPUT;
        }
    };
    match search_lmf(&goal, budget) {
        Some(cert) => {
            emit(&print_evidence(formula_text, &Evidence::Lmf(cert)));
            EXIT_CERTIFIED
        }
        None => {
            eprintln!(
                "not found: no certificate within {} decides / {} rule applications",
                budget.max_decides, budget.max_nodes
            );
            EXIT_REJECTED
        }
    }
}
