//! Certification of modal proof evidence through a small trusted kernel.
//!
//! The only component that decides whether a proof is accepted is the
//! focused classical kernel in [`kernel`]; everything else prepares input
//! for it. A modal formula ([`formula`]) is encoded as a polarized
//! first-order goal ([`polarized`]), and proof evidence from four source
//! calculi (labeled sequents, prefixed tableaux, ordinary sequents,
//! nested sequents) is elaborated into certificates over that goal
//! ([`layers`], [`adapters`]). Subformula occurrences are addressed by
//! structural indices ([`index`]), so evidence never mentions formulas,
//! only positions in the goal.
//!
//! The certificate layers form a ladder: plain trees of decide steps,
//! trees with grouping into multi-focused blocks, and trees decorated
//! with world bookkeeping. Conversions move evidence up and down the
//! ladder without changing what the kernel sees. A bounded certificate
//! search ([`search`]) and a semantic countermodel oracle ([`kripke`])
//! close the loop: search produces evidence the kernel replays, and the
//! oracle cross-checks validity independently of any proof. Evidence
//! travels as JSON files ([`evidence`]) handled by the command-line
//! front end ([`cli`]).
//!
//! Runnable walkthroughs live in `examples/`:
//!
//! - `check_fixture`: certify an evidence file and narrate every decide.
//! - `search_proof`: find a certificate and resolve it against the goal.
//! - `validity_oracle`: ask the semantic oracle, print countermodels.
//! - `layer_ladder`: one certificate checked at every decoration layer.
//! - `polarize_formula`: the three readings of one formula.
//! - `desk_sweep`: exhaustive search-versus-oracle agreement sweep.
//! - `emit_evidence`: regenerate the repository fixtures.

pub mod adapters;
pub mod cli;
pub mod evidence;
pub mod formula;
pub mod index;
pub mod kernel;
pub mod kripke;
pub mod layers;
pub mod polarized;
pub mod search;

#[cfg(test)]
pub(crate) mod testgen;
