//! Searches for a certificate and shows what was found: the evidence
//! tree with each decide resolved back to the goal subformula it names.
//!
//! Usage: search_proof <formula> [max_decides] [max_nodes]

use modalcert::formula::parse_formula;
use modalcert::index::resolve_index;
use modalcert::layers::{preorder, LmfNode};
use modalcert::search::{search_lmf, SearchBudget};

fn main() {
    let mut args = std::env::args().skip(1);
    let text = args.next().unwrap_or_else(|| {
        eprintln!("usage: search_proof <formula> [max_decides] [max_nodes]");
        std::process::exit(2);
    });
    let goal = parse_formula(&text).unwrap_or_else(|e| {
        eprintln!("formula: {e}");
        std::process::exit(2);
    });
    let budget = SearchBudget {
        max_decides: args.next().map_or(16, |s| s.parse().expect("a number")),
        max_nodes: args
            .next()
            .map_or(100_000, |s| s.parse().expect("a number")),
    };

    let Some(cert) = search_lmf(&goal, &budget) else {
        println!(
            "not found within {} decides / {} rule applications",
            budget.max_decides, budget.max_nodes
        );
        std::process::exit(1);
    };

    fn show(goal: &modalcert::formula::ModalFormula, n: &LmfNode, depth: usize) {
        let pad = "  ".repeat(depth);
        let what = resolve_index(goal, &n.index)
            .map(|f| f.to_string())
            .unwrap_or_default();
        match &n.extra {
            Some(x) => println!("{pad}{} = {what}  (with {x})", n.index),
            None => println!("{pad}{} = {what}", n.index),
        }
        for c in &n.children {
            show(goal, c, depth + 1);
        }
    }
    println!("certificate with {} decides:", preorder(&cert.root).len());
    show(&goal, &cert.root, 1);
}
