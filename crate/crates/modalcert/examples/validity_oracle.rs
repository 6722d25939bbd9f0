//! Asks the semantic oracle about a formula and, when it is not valid,
//! prints the countermodel as a world list, an accessibility relation,
//! and a valuation.
//!
//! Usage: validity_oracle <formula>
//!   e.g. validity_oracle '[](p & q) | <>~p | <>~q'

use modalcert::formula::parse_formula;
use modalcert::kripke::{decide_validity, eval, OracleConfig, Validity};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| {
        eprintln!("usage: validity_oracle <formula>");
        std::process::exit(2);
    });
    let a = match parse_formula(&text) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("formula: {e}");
            std::process::exit(2);
        }
    };
    match decide_validity(&a, &OracleConfig::from_env()) {
        Ok(Validity::Valid) => println!("valid: {a}"),
        Ok(Validity::Countermodel(m, w)) => {
            println!("invalid: {a}");
            println!("falsified at {w} in:\n{m}");
            assert_eq!(eval(&m, w, &a), Ok(false));
        }
        Err(e) => {
            eprintln!("oracle: {e}");
            std::process::exit(3);
        }
    }
}
