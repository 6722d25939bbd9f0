//! Shows the three readings of one formula: the modal surface syntax, the
//! polarized form with its delays, and the first-order encoding the
//! kernel actually proves.
//!
//! Usage: polarize_formula <formula>

use modalcert::formula::{negate_nnf, parse_formula};
use modalcert::kripke::WorldId;
use modalcert::polarized::{erase_delays, polos, tr, WorldTerm};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| {
        eprintln!("usage: polarize_formula <formula>");
        std::process::exit(2);
    });
    let a = parse_formula(&text).unwrap_or_else(|e| {
        eprintln!("formula: {e}");
        std::process::exit(2);
    });

    let polarized = polos(&a);
    println!("formula:    {a}");
    println!("negation:   {}", negate_nnf(&a));
    println!("polarized:  {polarized}");
    println!("kernel goal: {}", tr(&a, &WorldTerm::Const(WorldId(0))));

    assert_eq!(erase_delays(&polarized), Some(a));
}
