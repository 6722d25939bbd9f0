//! The trusted checker: a focused classical sequent kernel driven by
//! certificate hooks.
//!
//! The kernel owns all soundness-critical reasoning. Hooks (clerks and
//! experts) only transform an opaque certificate and emit choices: indices
//! to decide on, witness worlds, branch selections. Every choice is
//! re-verified here (the decided formula must be stored and positive, init
//! must find the exact complement, and so on), so a buggy hook set can make
//! checking fail or loop within its step budget, never accept an invalid
//! goal. Expert alternatives are explored depth-first with backtracking.
//!
//! Design notes that matter for reading the code:
//! - The workbench pairs every formula with a pending index: the path the
//!   decomposition took so far. Rules compute children's pending indices;
//!   `store_c` may override the final resting index.
//! - Delays are unit patterns (`t+ &+ A`, `f- |- A`), so the `t+` and `f-`
//!   rules run as part of ordinary bipoles and appear in traces.
//! - Negated relational atoms all live at the reserved index `relidx`;
//!   init on a relational focus matches them by literal content.

use crate::index::{dia_child, Index};
use crate::kripke::WorldId;
use crate::polarized::{PolFormula, Polarity};
use std::fmt;

/// Stored formulas with their indices (the kernel's Theta zone).
/// A multiset: the same index may hold several entries.
#[derive(Clone, Debug, Default)]
pub struct Storage {
    entries: Vec<(Index, PolFormula)>,
}

impl Storage {
    pub fn entries(&self) -> &[(Index, PolFormula)] {
        &self.entries
    }

    pub fn contains(&self, idx: &Index, f: &PolFormula) -> bool {
        self.entries.iter().any(|(i, g)| i == idx && g == f)
    }

    fn with(&self, idx: Index, f: PolFormula) -> Storage {
        let mut next = self.clone();
        next.entries.push((idx, f));
        next
    }
}

/// Branch selection for `|+`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// One certificate discipline: thirteen hooks consulted by the kernel.
///
/// Clerks (`*_c`) run during the asynchronous phase and experts (`*_e`)
/// during the synchronous phase. Each returns the continuation certificates
/// for zero or more alternatives; the kernel tries them in order. The
/// default implementations thread the certificate unchanged, which is the
/// correct behavior for every rule a discipline does not care about.
pub trait Fpc {
    type Cert: Clone;

    fn and_neg_c(&self, c: &Self::Cert) -> Vec<(Self::Cert, Self::Cert)> {
        vec![(c.clone(), c.clone())]
    }

    fn or_neg_c(&self, c: &Self::Cert) -> Vec<Self::Cert> {
        vec![c.clone()]
    }

    fn false_c(&self, c: &Self::Cert) -> Vec<Self::Cert> {
        vec![c.clone()]
    }

    fn all_c(&self, c: &Self::Cert, _w: WorldId) -> Vec<Self::Cert> {
        vec![c.clone()]
    }

    /// Chooses the storage index for a formula leaving the workbench.
    /// `pending` is the index the decomposition path computed.
    fn store_c(
        &self,
        c: &Self::Cert,
        _f: &PolFormula,
        pending: &Index,
    ) -> Vec<(Index, Self::Cert)> {
        vec![(pending.clone(), c.clone())]
    }

    fn and_pos_e(&self, c: &Self::Cert) -> Vec<(Self::Cert, Self::Cert)> {
        vec![(c.clone(), c.clone())]
    }

    fn or_pos_e(&self, c: &Self::Cert, _focus: &PolFormula) -> Vec<(Side, Self::Cert)> {
        vec![(Side::Left, c.clone()), (Side::Right, c.clone())]
    }

    fn true_e(&self, _c: &Self::Cert) -> bool {
        true
    }

    /// Witness alternatives for an `ex` focus: the world, and optionally the
    /// index of the `[]` occurrence whose eigen world it is (which routes the
    /// body's pending index through `diaind`).
    fn some_e(&self, c: &Self::Cert) -> Vec<(WorldId, Option<Index>, Self::Cert)>;

    /// Index alternatives at which the complement of the positive focus
    /// literal should be stored. The kernel verifies the content.
    fn init_e(&self, c: &Self::Cert, focus: &PolFormula, storage: &Storage) -> Vec<Index>;

    fn release_e(&self, c: &Self::Cert) -> Vec<Self::Cert> {
        vec![c.clone()]
    }

    /// Index alternatives to focus on. The kernel only accepts indices
    /// holding a stored positive formula.
    fn decide_e(&self, c: &Self::Cert, storage: &Storage) -> Vec<(Index, Self::Cert)>;

    /// Cut alternatives: the cut formula and the two branch certificates.
    fn cut_e(&self, _c: &Self::Cert) -> Vec<(PolFormula, Self::Cert, Self::Cert)> {
        Vec::new()
    }
}

/// One checking event. A bipole reads as: one `decide`, the synchronous
/// events under it, then the asynchronous events up to (and including) the
/// stores that feed the next decides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceEvent {
    Decide(Index),
    Store(Index),
    Init(Index),
    Release,
    AndNeg,
    OrNeg,
    FalseNeg,
    All(WorldId),
    AndPos,
    OrPos(Side),
    TruePos,
    SomeW(WorldId),
    Cut(PolFormula),
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceEvent::Decide(i) => write!(f, "decide {i}"),
            TraceEvent::Store(i) => write!(f, "store {i}"),
            TraceEvent::Init(i) => write!(f, "init {i}"),
            TraceEvent::Release => f.write_str("release"),
            TraceEvent::AndNeg => f.write_str("andNeg"),
            TraceEvent::OrNeg => f.write_str("orNeg"),
            TraceEvent::FalseNeg => f.write_str("falseNeg"),
            TraceEvent::All(w) => write!(f, "all {w}"),
            TraceEvent::AndPos => f.write_str("andPos"),
            TraceEvent::OrPos(Side::Left) => f.write_str("orPos 1"),
            TraceEvent::OrPos(Side::Right) => f.write_str("orPos 2"),
            TraceEvent::TruePos => f.write_str("truePos"),
            TraceEvent::SomeW(w) => write!(f, "some {w}"),
            TraceEvent::Cut(b) => write!(f, "cut {b}"),
        }
    }
}

/// The audit log of an accepting run, one event per rule application.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofTrace {
    events: Vec<TraceEvent>,
}

impl ProofTrace {
    pub fn events(&self) -> &[TraceEvent] {
        &self.events
    }

    pub fn decide_count(&self) -> usize {
        self.events
            .iter()
            .filter(|e| matches!(e, TraceEvent::Decide(_)))
            .count()
    }
}

impl fmt::Display for ProofTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.events {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Resource configuration for a single `check`.
#[derive(Clone, Copy, Debug)]
pub struct KernelConfig {
    /// Maximum rule applications (async and sync steps both count).
    pub max_steps: u64,
}

impl Default for KernelConfig {
    fn default() -> Self {
        KernelConfig { max_steps: 100_000 }
    }
}

impl KernelConfig {
    /// Default limit, overridable through `MODALCERT_KERNEL_LIMIT`.
    pub fn from_env() -> Self {
        let mut cfg = KernelConfig::default();
        if let Ok(v) = std::env::var("MODALCERT_KERNEL_LIMIT") {
            if let Ok(n) = v.trim().parse::<u64>() {
                cfg.max_steps = n;
            }
        }
        cfg
    }
}

/// Why a check did not accept.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CheckError {
    /// No accepting branch exists under the given certificate.
    #[error("certificate rejected: no accepting branch")]
    Rejected,
    /// The step budget ran out; neither acceptance nor rejection.
    #[error("kernel step limit of {limit} rule applications exceeded")]
    Limit { limit: u64 },
}

/// Fresh world generator: `w0, w1, ...`, strictly increasing.
#[derive(Clone, Copy, Debug, Default)]
pub struct WorldGen {
    next: u32,
}

impl WorldGen {
    pub fn new() -> Self {
        WorldGen::default()
    }

    /// Starts above every world constant of `f`, so fresh worlds never
    /// collide with goal constants.
    pub fn above(f: &PolFormula) -> Self {
        let next = f.world_consts().iter().map(|w| w.0 + 1).max().unwrap_or(0);
        WorldGen { next }
    }

    pub fn fresh_world(&mut self) -> WorldId {
        let w = WorldId(self.next);
        self.next += 1;
        w
    }
}

/// Checks `goal` under the certificate discipline `fpc` starting from
/// certificate `cert`. The goal enters storage at index `root` (wrapped in
/// a positive delay when negative and not a literal), and the run begins
/// with a decide, so evidence nodes correspond to decide events one-to-one.
pub fn check<F: Fpc>(
    fpc: &F,
    cert: F::Cert,
    goal: &PolFormula,
    cfg: &KernelConfig,
) -> Result<ProofTrace, CheckError> {
    let mut engine = Engine {
        fpc,
        limit: cfg.max_steps,
        steps: 0,
        trace: Vec::new(),
        worlds: WorldGen::above(goal),
    };
    let storage = Storage::default().with(Index::Root, goal.clone().delp());
    match engine.run_async(&storage, &[], &cert) {
        Ok(()) => Ok(ProofTrace {
            events: engine.trace,
        }),
        Err(Halt::Reject) => Err(CheckError::Rejected),
        Err(Halt::Limit) => Err(CheckError::Limit {
            limit: cfg.max_steps,
        }),
    }
}

enum Halt {
    /// This branch fails; backtrack to the previous alternative.
    Reject,
    /// Budget exhausted; abort the whole run.
    Limit,
}

type Workbench = [(PolFormula, Index)];

struct Engine<'a, F: Fpc> {
    fpc: &'a F,
    limit: u64,
    steps: u64,
    trace: Vec<TraceEvent>,
    worlds: WorldGen,
}

impl<'a, F: Fpc> Engine<'a, F> {
    fn step(&mut self) -> Result<(), Halt> {
        self.steps += 1;
        if self.steps > self.limit {
            Err(Halt::Limit)
        } else {
            Ok(())
        }
    }

    /// Tries `body` as one alternative: on rejection, rolls the trace back
    /// and reports `false` so the caller can try the next alternative.
    fn attempt(&mut self, body: impl FnOnce(&mut Self) -> Result<(), Halt>) -> Result<bool, Halt> {
        let mark = self.trace.len();
        match body(self) {
            Ok(()) => Ok(true),
            Err(Halt::Reject) => {
                self.trace.truncate(mark);
                Ok(false)
            }
            Err(Halt::Limit) => Err(Halt::Limit),
        }
    }

    fn run_async(&mut self, storage: &Storage, wb: &Workbench, cert: &F::Cert) -> Result<(), Halt> {
        self.step()?;
        let Some(((f, idx), rest)) = wb.split_first() else {
            return self.end_of_async(storage, cert);
        };
        match f {
            PolFormula::AndNeg(a, b) => {
                let ia = idx.clone().left();
                let ib = idx.clone().right();
                for (c1, c2) in self.fpc.and_neg_c(cert) {
                    let done = self.attempt(|eng| {
                        eng.trace.push(TraceEvent::AndNeg);
                        let mut left = vec![((**a).clone(), ia.clone())];
                        left.extend_from_slice(rest);
                        eng.run_async(storage, &left, &c1)?;
                        let mut right = vec![((**b).clone(), ib.clone())];
                        right.extend_from_slice(rest);
                        eng.run_async(storage, &right, &c2)
                    })?;
                    if done {
                        return Ok(());
                    }
                }
                Err(Halt::Reject)
            }
            PolFormula::OrNeg(a, b) => {
                // Delay and box-translation patterns keep their payload at
                // the parent's pending index; the nrel half of a box body
                // goes to the shared relational shelf.
                let (ia, ib) = match &**a {
                    PolFormula::FalseNeg => (idx.clone(), idx.clone()),
                    PolFormula::NRel(_, _) => (Index::Rel, idx.clone()),
                    _ => (idx.clone().left(), idx.clone().right()),
                };
                for c in self.fpc.or_neg_c(cert) {
                    let done = self.attempt(|eng| {
                        eng.trace.push(TraceEvent::OrNeg);
                        let mut next =
                            vec![((**a).clone(), ia.clone()), ((**b).clone(), ib.clone())];
                        next.extend_from_slice(rest);
                        eng.run_async(storage, &next, &c)
                    })?;
                    if done {
                        return Ok(());
                    }
                }
                Err(Halt::Reject)
            }
            PolFormula::FalseNeg => {
                for c in self.fpc.false_c(cert) {
                    let done = self.attempt(|eng| {
                        eng.trace.push(TraceEvent::FalseNeg);
                        eng.run_async(storage, rest, &c)
                    })?;
                    if done {
                        return Ok(());
                    }
                }
                Err(Halt::Reject)
            }
            PolFormula::All(y, body) => {
                let w = self.worlds.fresh_world();
                let opened = body.subst(y, &crate::polarized::WorldTerm::Const(w));
                let ib = idx.clone().left();
                for c in self.fpc.all_c(cert, w) {
                    let done = self.attempt(|eng| {
                        eng.trace.push(TraceEvent::All(w));
                        let mut next = vec![(opened.clone(), ib.clone())];
                        next.extend_from_slice(rest);
                        eng.run_async(storage, &next, &c)
                    })?;
                    if done {
                        return Ok(());
                    }
                }
                Err(Halt::Reject)
            }
            // Everything else is positive or a negative literal: store it.
            stored => {
                for (at, c) in self.fpc.store_c(cert, stored, idx) {
                    let done = self.attempt(|eng| {
                        eng.trace.push(TraceEvent::Store(at.clone()));
                        let next = storage.with(at.clone(), stored.clone());
                        eng.run_async(&next, rest, &c)
                    })?;
                    if done {
                        return Ok(());
                    }
                }
                Err(Halt::Reject)
            }
        }
    }

    /// Empty workbench: decide on a stored positive formula or cut.
    fn end_of_async(&mut self, storage: &Storage, cert: &F::Cert) -> Result<(), Halt> {
        for (idx, c) in self.fpc.decide_e(cert, storage) {
            // The expert names an index; only stored positive formulas
            // at that index are legitimate foci.
            let foci: Vec<PolFormula> = storage
                .entries()
                .iter()
                .filter(|(i, g)| *i == idx && g.polarity() == Polarity::Pos)
                .map(|(_, g)| g.clone())
                .collect();
            for focus in foci {
                let done = self.attempt(|eng| {
                    eng.trace.push(TraceEvent::Decide(idx.clone()));
                    eng.run_sync(storage, &focus, &idx, &c)
                })?;
                if done {
                    return Ok(());
                }
            }
        }
        for (b, c1, c2) in self.fpc.cut_e(cert) {
            let nb = b.negate();
            let done = self.attempt(|eng| {
                eng.trace.push(TraceEvent::Cut(b.clone()));
                eng.run_async(storage, &[(b.clone(), Index::Root)], &c1)?;
                eng.run_async(storage, &[(nb.clone(), Index::Root)], &c2)
            })?;
            if done {
                return Ok(());
            }
        }
        Err(Halt::Reject)
    }

    fn run_sync(
        &mut self,
        storage: &Storage,
        focus: &PolFormula,
        idx: &Index,
        cert: &F::Cert,
    ) -> Result<(), Halt> {
        self.step()?;
        match focus {
            PolFormula::AndPos(a, b) => {
                // Positive delays (t+ left) and dia-translation bodies (rel
                // left) decompose in place; a real conjunction splits paths.
                let (ia, ib) = match &**a {
                    PolFormula::TruePos | PolFormula::Rel(_, _) => (idx.clone(), idx.clone()),
                    _ => (idx.clone().left(), idx.clone().right()),
                };
                for (c1, c2) in self.fpc.and_pos_e(cert) {
                    let done = self.attempt(|eng| {
                        eng.trace.push(TraceEvent::AndPos);
                        eng.run_sync(storage, a, &ia, &c1)?;
                        eng.run_sync(storage, b, &ib, &c2)
                    })?;
                    if done {
                        return Ok(());
                    }
                }
                Err(Halt::Reject)
            }
            PolFormula::OrPos(a, b) => {
                for (side, c) in self.fpc.or_pos_e(cert, focus) {
                    let (child, at) = match side {
                        Side::Left => (&**a, idx.clone().left()),
                        Side::Right => (&**b, idx.clone().right()),
                    };
                    let done = self.attempt(|eng| {
                        eng.trace.push(TraceEvent::OrPos(side));
                        eng.run_sync(storage, child, &at, &c)
                    })?;
                    if done {
                        return Ok(());
                    }
                }
                Err(Halt::Reject)
            }
            PolFormula::Ex(y, body) => {
                for (w, boxidx, c) in self.fpc.some_e(cert) {
                    let opened = body.subst(y, &crate::polarized::WorldTerm::Const(w));
                    let at = match &boxidx {
                        Some(j) => dia_child(idx, j),
                        None => idx.clone().left(),
                    };
                    let done = self.attempt(|eng| {
                        eng.trace.push(TraceEvent::SomeW(w));
                        eng.run_sync(storage, &opened, &at, &c)
                    })?;
                    if done {
                        return Ok(());
                    }
                }
                Err(Halt::Reject)
            }
            PolFormula::TruePos => {
                if self.fpc.true_e(cert) {
                    self.trace.push(TraceEvent::TruePos);
                    Ok(())
                } else {
                    Err(Halt::Reject)
                }
            }
            PolFormula::PAtom(_, _) | PolFormula::Rel(_, _) => {
                let complement = focus.negate();
                for at in self.fpc.init_e(cert, focus, storage) {
                    if storage.contains(&at, &complement) {
                        self.trace.push(TraceEvent::Init(at));
                        return Ok(());
                    }
                }
                Err(Halt::Reject)
            }
            // Negative focus: release back to the asynchronous phase.
            negative => {
                for c in self.fpc.release_e(cert) {
                    let done = self.attempt(|eng| {
                        eng.trace.push(TraceEvent::Release);
                        eng.run_async(storage, &[(negative.clone(), idx.clone())], &c)
                    })?;
                    if done {
                        return Ok(());
                    }
                }
                Err(Halt::Reject)
            }
        }
    }
}
