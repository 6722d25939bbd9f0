//! Proptest strategies shared by the in-crate test modules.

use crate::formula::ModalFormula;
use proptest::prelude::*;

/// Strategy over NNF formulas with modal/connective nesting up to `depth`
/// and atoms drawn from the first `atoms` names of `p, q, r, s`.
pub fn arb_formula(depth: u32, atoms: usize) -> impl Strategy<Value = ModalFormula> {
    let names: Vec<&'static str> = ["p", "q", "r", "s"][..atoms.clamp(1, 4)].to_vec();
    let leaf = proptest::sample::select(names)
        .prop_flat_map(|n| prop_oneof![Just(ModalFormula::atom(n)), Just(ModalFormula::natom(n)),]);
    leaf.prop_recursive(depth, 64, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| ModalFormula::and(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| ModalFormula::or(l, r)),
            inner.clone().prop_map(ModalFormula::boxed),
            inner.prop_map(ModalFormula::dia),
        ]
    })
}
