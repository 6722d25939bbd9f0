//! Walks one certificate up and down the decoration ladder, checking it
//! at every rung: plain, grouped, and world-annotated. The kernel run is
//! the same proof each time; only the evidence gets richer or poorer.
//!
//! Usage: layer_ladder [path]   (defaults to the lmf running example)

use modalcert::evidence::{parse_evidence, Evidence};
use modalcert::kernel::{check, KernelConfig, ProofTrace, TraceEvent};
use modalcert::kripke::WorldId;
use modalcert::layers::{
    erase_groups, lmf_hooks, lmfm_hooks, singleton_groups, star_hooks, star_to_multifoc,
    synthesize_star,
};
use modalcert::polarized::{tr, WorldTerm};

fn decides(t: &ProofTrace) -> Vec<String> {
    let mut v: Vec<String> = t
        .events()
        .iter()
        .filter_map(|e| match e {
            TraceEvent::Decide(i) => Some(i.to_string()),
            _ => None,
        })
        .collect();
    v.sort();
    v
}

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| format!("{}/fixtures/axiomK.lmf.json", env!("CARGO_MANIFEST_DIR")));
    let text = std::fs::read_to_string(&path).expect("readable evidence file");
    let file = parse_evidence(&text).expect("well-formed evidence");
    let Evidence::Lmf(core) = file.evidence else {
        eprintln!("this walkthrough starts from lmf evidence");
        std::process::exit(2);
    };
    let goal = tr(&file.formula, &WorldTerm::Const(WorldId(0)));
    let cfg = KernelConfig::default();

    let (fpc, st) = lmf_hooks(&core);
    let plain = check(&fpc, st, &goal, &cfg).expect("plain evidence certifies");
    println!("lmf      certifies, {} decides", plain.decide_count());

    let grouped = singleton_groups(&core);
    let (fpc, st) = lmfm_hooks(&grouped);
    let multi = check(&fpc, st, &goal, &cfg).expect("grouped evidence certifies");
    println!("lmfm     certifies, {} decides", multi.decide_count());

    let star = synthesize_star(&grouped, &file.formula).expect("decorations synthesize");
    let (fpc, st) = star_hooks(&star);
    let starred = check(&fpc, st, &goal, &cfg).expect("decorated evidence certifies");
    println!("lmfstar  certifies, {} decides", starred.decide_count());

    let (down, _) = star_to_multifoc(&star);
    let stripped = erase_groups(&down);
    let (fpc, st) = lmf_hooks(&stripped);
    let back = check(&fpc, st, &goal, &cfg).expect("stripped evidence certifies");

    assert_eq!(
        stripped, core,
        "the ladder returns the evidence it started from"
    );
    assert_eq!(decides(&plain), decides(&multi));
    assert_eq!(decides(&plain), decides(&starred));
    assert_eq!(decides(&plain), decides(&back));
    println!("same decide multiset at every rung, round trip exact");
}
