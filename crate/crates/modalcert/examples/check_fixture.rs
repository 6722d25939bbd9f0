//! Checks an evidence file through the library API and narrates the
//! proof: every kernel event, then a summary of decides and closures.
//!
//! Usage: check_fixture [path]   (defaults to the lmf running example)

use modalcert::cli::check_evidence;
use modalcert::evidence::parse_evidence;
use modalcert::index::{resolve_index, Index};
use modalcert::kernel::{KernelConfig, TraceEvent};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| format!("{}/fixtures/axiomK.lmf.json", env!("CARGO_MANIFEST_DIR")));
    let text = std::fs::read_to_string(&path).expect("readable evidence file");
    let file = parse_evidence(&text).expect("well-formed evidence");
    println!("formula: {}", file.formula_text);
    println!("format:  {}", file.evidence.format());

    let trace = match check_evidence(&file, &KernelConfig::default()) {
        Ok(t) => t,
        Err(r) => {
            println!("rejected: {r:?}");
            std::process::exit(1);
        }
    };
    print!("{trace}");

    println!("\ndecisions, in order:");
    for e in trace.events() {
        let TraceEvent::Decide(i) = e else { continue };
        match i {
            Index::Rel => println!("  {i} (relational atom)"),
            _ => match resolve_index(&file.formula, i) {
                Ok(sub) => println!("  {i} = {sub}"),
                Err(_) => println!("  {i}"),
            },
        }
    }
    println!("{} decides total", trace.decide_count());
}
