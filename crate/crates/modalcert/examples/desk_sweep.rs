//! Sweeps every NNF formula over one atom up to a connective budget,
//! comparing the semantic oracle's verdict with bounded proof search.
//!
//! Usage: desk_sweep [max_connectives]

use modalcert::formula::enumerate_nnf;
use modalcert::kripke::{decide_validity, OracleConfig, Validity};
use modalcert::search::{search_lmf, SearchBudget};

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_connectives must be a number"))
        .unwrap_or(4);
    let formulas = enumerate_nnf(&["p"], max);
    let budget = SearchBudget {
        max_decides: 16,
        max_nodes: 100_000,
    };
    let oracle_cfg = OracleConfig::default();

    let start = std::time::Instant::now();
    let mut valid = 0usize;
    let mut disagreements = Vec::new();
    for f in &formulas {
        let semantic = matches!(
            decide_validity(f, &oracle_cfg).expect("oracle within limit"),
            Validity::Valid
        );
        let found = search_lmf(f, &budget).is_some();
        if semantic {
            valid += 1;
        }
        if semantic != found {
            disagreements.push((f.clone(), semantic));
        }
    }
    let dt = start.elapsed();

    println!(
        "{} formulas, {} valid, {} disagreements, {:.1?}",
        formulas.len(),
        valid,
        disagreements.len(),
        dt
    );
    for (f, semantic) in disagreements.iter().take(10) {
        println!(
            "  {f}: oracle says {}, search says {}",
            if *semantic { "valid" } else { "invalid" },
            if *semantic { "not found" } else { "found" }
        );
    }
    if !disagreements.is_empty() {
        std::process::exit(1);
    }
}
