//! Kripke semantics for K and a bounded validity oracle.
//!
//! The oracle exists for testing and cross-validation only: it searches for a
//! countermodel of a formula among tree-shaped models, iterating depth and
//! per-node branching up to the bounds that make the search complete for K
//! (tree-model property). It never touches the proof kernel, so the two can
//! check each other.

use crate::formula::{negate_nnf, ModalFormula};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Opaque world identifier. Renders as `w0`, `w1`, ...
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WorldId(pub u32);

impl fmt::Display for WorldId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{}", self.0)
    }
}

/// A finite Kripke model: worlds, accessibility edges, and a valuation.
/// Worlds missing from `val` satisfy no atoms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KripkeModel {
    pub worlds: BTreeSet<WorldId>,
    pub rel: BTreeSet<(WorldId, WorldId)>,
    pub val: BTreeMap<WorldId, BTreeSet<String>>,
}

impl KripkeModel {
    /// Checks the internal well-formedness conditions: at least one world,
    /// and every edge endpoint and valuation key is a world.
    pub fn well_formed(&self) -> bool {
        !self.worlds.is_empty()
            && self
                .rel
                .iter()
                .all(|(a, b)| self.worlds.contains(a) && self.worlds.contains(b))
            && self.val.keys().all(|w| self.worlds.contains(w))
    }

    fn successors(&self, w: WorldId) -> impl Iterator<Item = WorldId> + '_ {
        self.rel
            .iter()
            .filter(move |(a, _)| *a == w)
            .map(|(_, b)| *b)
    }

    fn holds_atom(&self, w: WorldId, name: &str) -> bool {
        self.val.get(&w).is_some_and(|s| s.contains(name))
    }
}

impl fmt::Display for KripkeModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "worlds {{")?;
        for (i, w) in self.worlds.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "}}, edges {{")?;
        for (i, (a, b)) in self.rel.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}->{b}")?;
        }
        write!(f, "}}, val {{")?;
        let mut first = true;
        for (w, atoms) in &self.val {
            for a in atoms {
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(f, "{w}:{a}")?;
            }
        }
        write!(f, "}}")
    }
}

/// Error from `eval`: the designated world is not in the model.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("world {world} is not in the model")]
pub struct UnknownWorld {
    pub world: WorldId,
}

/// Truth of `a` at world `w` of `m`, per the usual K clauses.
pub fn eval(m: &KripkeModel, w: WorldId, a: &ModalFormula) -> Result<bool, UnknownWorld> {
    if !m.worlds.contains(&w) {
        return Err(UnknownWorld { world: w });
    }
    Ok(eval_in(m, w, a))
}

fn eval_in(m: &KripkeModel, w: WorldId, a: &ModalFormula) -> bool {
    match a {
        ModalFormula::Atom(n) => m.holds_atom(w, n),
        ModalFormula::NAtom(n) => !m.holds_atom(w, n),
        ModalFormula::And(l, r) => eval_in(m, w, l) && eval_in(m, w, r),
        ModalFormula::Or(l, r) => eval_in(m, w, l) || eval_in(m, w, r),
        ModalFormula::Box_(b) => m.successors(w).all(|v| eval_in(m, v, b)),
        ModalFormula::Dia(b) => m.successors(w).any(|v| eval_in(m, v, b)),
    }
}

/// Outcome of `decide_validity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validity {
    Valid,
    /// A model and world where the formula is false.
    Countermodel(KripkeModel, WorldId),
}

/// Resource configuration for the oracle.
#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    /// Maximum number of search states visited across the whole run.
    pub max_nodes: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_nodes: 1_000_000,
        }
    }
}

impl OracleConfig {
    /// Default limit, overridable through `MODALCERT_ORACLE_LIMIT`.
    pub fn from_env() -> Self {
        let mut cfg = OracleConfig::default();
        if let Ok(v) = std::env::var("MODALCERT_ORACLE_LIMIT") {
            if let Ok(n) = v.trim().parse::<u64>() {
                cfg.max_nodes = n;
            }
        }
        cfg
    }
}

/// The oracle gave up: the search visited more states than allowed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("validity oracle exceeded its search limit of {limit} nodes")]
pub struct OracleLimit {
    pub limit: u64,
}

/// Decides K-validity of `a` by searching for a tree-shaped countermodel of
/// depth at most the modal depth of the dual and branching at most its `<>`
/// count. Those bounds are exhaustive for K, so `Valid` really means valid.
/// The returned countermodel is deterministic: depth is grown before
/// branching and children are explored in a fixed order.
pub fn decide_validity(a: &ModalFormula, cfg: &OracleConfig) -> Result<Validity, OracleLimit> {
    let dual = negate_nnf(a);
    let max_depth = dual.modal_depth();
    let max_branch = dual.dia_count();
    let mut budget = Budget {
        left: cfg.max_nodes,
        limit: cfg.max_nodes,
    };
    for depth in 0..=max_depth {
        for branch in 0..=max_branch {
            let mut goal = BTreeSet::new();
            goal.insert(dual.clone());
            if let Some(tree) = satisfy(&goal, depth, branch, &mut budget)? {
                let (model, root) = tree.into_model();
                debug_assert!(model.well_formed());
                debug_assert_eq!(eval(&model, root, a), Ok(false));
                return Ok(Validity::Countermodel(model, root));
            }
        }
    }
    Ok(Validity::Valid)
}

struct Budget {
    left: u64,
    limit: u64,
}

impl Budget {
    fn spend(&mut self) -> Result<(), OracleLimit> {
        if self.left == 0 {
            Err(OracleLimit { limit: self.limit })
        } else {
            self.left -= 1;
            Ok(())
        }
    }
}

/// One world of a candidate tree model: the atoms asserted there plus its
/// successor subtrees.
struct TreeModel {
    atoms: BTreeSet<String>,
    children: Vec<TreeModel>,
}

impl TreeModel {
    fn into_model(self) -> (KripkeModel, WorldId) {
        let mut m = KripkeModel {
            worlds: BTreeSet::new(),
            rel: BTreeSet::new(),
            val: BTreeMap::new(),
        };
        let mut next = 0u32;
        fn assign(t: TreeModel, m: &mut KripkeModel, next: &mut u32) -> WorldId {
            let w = WorldId(*next);
            *next += 1;
            m.worlds.insert(w);
            if !t.atoms.is_empty() {
                m.val.insert(w, t.atoms);
            }
            for c in t.children {
                let v = assign(c, m, next);
                m.rel.insert((w, v));
            }
            w
        }
        let root = assign(self, &mut m, &mut next);
        (m, root)
    }
}

/// Searches for a tree model of the formula set `goal` with the given depth
/// and branching budget. Conjunctions and disjunctions are decomposed first
/// (in set order, so the search is deterministic); a literal clash fails the
/// branch; every `<>` member then demands a child world that also satisfies
/// all `[]` bodies.
fn satisfy(
    goal: &BTreeSet<ModalFormula>,
    depth: usize,
    branch: usize,
    budget: &mut Budget,
) -> Result<Option<TreeModel>, OracleLimit> {
    budget.spend()?;

    // Decompose the first non-literal, non-modal member.
    for f in goal {
        match f {
            ModalFormula::And(l, r) => {
                let mut g = goal.clone();
                g.remove(f);
                g.insert((**l).clone());
                g.insert((**r).clone());
                return satisfy(&g, depth, branch, budget);
            }
            ModalFormula::Or(l, r) => {
                let mut g1 = goal.clone();
                g1.remove(f);
                g1.insert((**l).clone());
                if let Some(t) = satisfy(&g1, depth, branch, budget)? {
                    return Ok(Some(t));
                }
                let mut g2 = goal.clone();
                g2.remove(f);
                g2.insert((**r).clone());
                return satisfy(&g2, depth, branch, budget);
            }
            _ => {}
        }
    }

    // Only literals and modal formulas remain.
    let mut atoms = BTreeSet::new();
    for f in goal {
        if let ModalFormula::Atom(n) = f {
            if goal.contains(&ModalFormula::NAtom(n.clone())) {
                return Ok(None);
            }
            atoms.insert(n.clone());
        }
    }

    let dias: Vec<&ModalFormula> = goal
        .iter()
        .filter_map(|f| match f {
            ModalFormula::Dia(b) => Some(&**b),
            _ => None,
        })
        .collect();
    let boxes: Vec<&ModalFormula> = goal
        .iter()
        .filter_map(|f| match f {
            ModalFormula::Box_(b) => Some(&**b),
            _ => None,
        })
        .collect();

    if dias.is_empty() {
        return Ok(Some(TreeModel {
            atoms,
            children: Vec::new(),
        }));
    }
    if depth == 0 || dias.len() > branch {
        return Ok(None);
    }

    let mut children = Vec::with_capacity(dias.len());
    for d in dias {
        let mut g = BTreeSet::new();
        g.insert(d.clone());
        for b in &boxes {
            g.insert((**b).clone());
        }
        match satisfy(&g, depth - 1, branch, budget)? {
            Some(t) => children.push(t),
            None => return Ok(None),
        }
    }
    Ok(Some(TreeModel { atoms, children }))
}

/// Enumerates every model over `atoms` with exactly `n` worlds, in a fixed
/// order. Intended for small `n` in tests and cross-validation.
pub fn enumerate_models(atoms: &[String], n: u32) -> Vec<KripkeModel> {
    let worlds: Vec<WorldId> = (0..n).map(WorldId).collect();
    let pairs: Vec<(WorldId, WorldId)> = worlds
        .iter()
        .flat_map(|a| worlds.iter().map(move |b| (*a, *b)))
        .collect();
    let cells: Vec<(WorldId, String)> = worlds
        .iter()
        .flat_map(|w| atoms.iter().map(move |a| (*w, a.clone())))
        .collect();
    let mut out = Vec::new();
    for rel_bits in 0..(1u64 << pairs.len()) {
        let rel: BTreeSet<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| rel_bits >> i & 1 == 1)
            .map(|(_, p)| *p)
            .collect();
        for val_bits in 0..(1u64 << cells.len()) {
            let mut val: BTreeMap<WorldId, BTreeSet<String>> = BTreeMap::new();
            for (i, (w, a)) in cells.iter().enumerate() {
                if val_bits >> i & 1 == 1 {
                    val.entry(*w).or_default().insert(a.clone());
                }
            }
            out.push(KripkeModel {
                worlds: worlds.iter().copied().collect(),
                rel: rel.clone(),
                val,
            });
        }
    }
    out
}
