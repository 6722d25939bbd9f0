//! Bounded certificate search: a decision-recording run of the kernel
//! rules with every expert choice left open.
//!
//! The engine mirrors the kernel's two phases exactly but builds the
//! evidence tree instead of consuming one, backtracking over decide
//! candidates (stored positives, oldest first), `<>` witnesses (recorded
//! eigen worlds), and `|+` branches. Each root-to-leaf path refuses to
//! repeat a decide, which makes the search finite even without a budget:
//! stores are persistent down a path, so a repeated decide re-plays a
//! bipole whose contributions are already present.
//!
//! Anything found is replayed through `lmf_hooks` before being returned,
//! so a caller never sees a certificate the kernel would not accept.

use crate::formula::ModalFormula;
use crate::index::{dia_child, Index};
use crate::kernel::{check, KernelConfig};
use crate::kripke::WorldId;
use crate::layers::{lmf_hooks, LmfCert, LmfNode};
use crate::polarized::{tr, PolFormula, Polarity, WorldTerm};
use std::collections::BTreeSet;

/// Search limits: decides allowed on one branch, and rule applications
/// allowed in total (shared across backtracking).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_decides: u32,
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_decides: 16,
            max_nodes: 100_000,
        }
    }
}

struct Exhausted;

type Found<T> = Result<Option<T>, Exhausted>;

/// Everything that varies along one branch of the search.
#[derive(Clone)]
struct Path {
    storage: Vec<(Index, PolFormula)>,
    eigen: Vec<(Index, WorldId)>,
    used: BTreeSet<(Index, Option<WorldId>)>,
    depth: u32,
    next_world: u32,
}

struct Engine {
    max_decides: u32,
    nodes_left: u64,
}

type Workbench = Vec<(PolFormula, Index)>;

impl Engine {
    fn spend(&mut self) -> Result<(), Exhausted> {
        if self.nodes_left == 0 {
            return Err(Exhausted);
        }
        self.nodes_left -= 1;
        Ok(())
    }

    /// Asynchronous phase. Returns the decide nodes grown on every branch
    /// the workbench splits into, left branches first.
    fn asynch(&mut self, path: &Path, wb: &[(PolFormula, Index)]) -> Found<Vec<LmfNode>> {
        self.spend()?;
        let Some(((f, idx), rest)) = wb.split_first() else {
            return Ok(self.decide(path)?.map(|n| vec![n]));
        };
        match f {
            PolFormula::AndNeg(a, b) => {
                let mut left: Workbench = vec![((**a).clone(), idx.clone().left())];
                left.extend_from_slice(rest);
                let Some(c1) = self.asynch(path, &left)? else {
                    return Ok(None);
                };
                let mut right: Workbench = vec![((**b).clone(), idx.clone().right())];
                right.extend_from_slice(rest);
                let Some(c2) = self.asynch(path, &right)? else {
                    return Ok(None);
                };
                Ok(Some(c1.into_iter().chain(c2).collect()))
            }
            PolFormula::OrNeg(a, b) => {
                let (ia, ib) = match &**a {
                    PolFormula::FalseNeg => (idx.clone(), idx.clone()),
                    PolFormula::NRel(_, _) => (Index::Rel, idx.clone()),
                    _ => (idx.clone().left(), idx.clone().right()),
                };
                let mut next: Workbench = vec![((**a).clone(), ia), ((**b).clone(), ib)];
                next.extend_from_slice(rest);
                self.asynch(path, &next)
            }
            PolFormula::FalseNeg => self.asynch(path, rest),
            PolFormula::All(y, body) => {
                let mut p = path.clone();
                let w = WorldId(p.next_world);
                p.next_world += 1;
                p.eigen.push((idx.clone(), w));
                let opened = body.subst(y, &WorldTerm::Const(w));
                let mut next: Workbench = vec![(opened, idx.clone().left())];
                next.extend_from_slice(rest);
                self.asynch(&p, &next)
            }
            stored => {
                let mut p = path.clone();
                p.storage.push((idx.clone(), stored.clone()));
                self.asynch(&p, rest)
            }
        }
    }

    /// Empty workbench: try every stored positive as the next decide.
    fn decide(&mut self, path: &Path) -> Found<LmfNode> {
        if path.depth >= self.max_decides {
            return Ok(None);
        }
        let candidates = path.storage.clone();
        for (idx, f) in &candidates {
            if f.polarity() != Polarity::Pos {
                continue;
            }
            if let PolFormula::Ex(y, body) = f {
                // One alternative per recorded eigen world.
                let witnesses = path.eigen.clone();
                for (j, w) in witnesses {
                    let key = (idx.clone(), Some(w));
                    if path.used.contains(&key) {
                        continue;
                    }
                    let mut p = path.clone();
                    p.used.insert(key);
                    p.depth += 1;
                    let opened = body.subst(y, &WorldTerm::Const(w));
                    let at = dia_child(idx, &j);
                    if let Some((children, _)) = self.sync(&p, &opened, &at)? {
                        return Ok(Some(LmfNode::new(idx.clone(), Some(j), children)));
                    }
                }
            } else {
                let key = (idx.clone(), None);
                if path.used.contains(&key) {
                    continue;
                }
                let mut p = path.clone();
                p.used.insert(key);
                p.depth += 1;
                if let Some((children, extra)) = self.sync(&p, f, idx)? {
                    return Ok(Some(LmfNode::new(idx.clone(), extra, children)));
                }
            }
        }
        Ok(None)
    }

    /// Synchronous phase under one focus. Returns the decide nodes grown
    /// past this bipole and the complementary-literal index if the focus
    /// closed by init.
    fn sync(
        &mut self,
        path: &Path,
        focus: &PolFormula,
        idx: &Index,
    ) -> Found<(Vec<LmfNode>, Option<Index>)> {
        self.spend()?;
        match focus {
            PolFormula::AndPos(a, b) => {
                let (ia, ib) = match &**a {
                    PolFormula::TruePos | PolFormula::Rel(_, _) => (idx.clone(), idx.clone()),
                    _ => (idx.clone().left(), idx.clone().right()),
                };
                let Some((c1, e1)) = self.sync(path, a, &ia)? else {
                    return Ok(None);
                };
                let Some((c2, e2)) = self.sync(path, b, &ib)? else {
                    return Ok(None);
                };
                Ok(Some((c1.into_iter().chain(c2).collect(), e1.or(e2))))
            }
            PolFormula::OrPos(a, b) => {
                if let Some(found) = self.sync(path, a, &idx.clone().left())? {
                    return Ok(Some(found));
                }
                self.sync(path, b, &idx.clone().right())
            }
            PolFormula::TruePos => Ok(Some((Vec::new(), None))),
            PolFormula::PAtom(_, _) | PolFormula::Rel(_, _) => {
                let complement = focus.negate();
                for (j, g) in &path.storage {
                    if *g == complement {
                        let extra = match focus {
                            PolFormula::PAtom(_, _) => Some(j.clone()),
                            _ => None,
                        };
                        return Ok(Some((Vec::new(), extra)));
                    }
                }
                Ok(None)
            }
            // A nested existential would need a second extra slot on the
            // node; tr never produces one, so there is nothing to search.
            PolFormula::Ex(_, _) => Ok(None),
            negative => {
                let found = self.asynch(path, &[(negative.clone(), idx.clone())])?;
                Ok(found.map(|children| (children, None)))
            }
        }
    }
}

/// Searches for lmf evidence certifying the goal, within budget. Returns
/// the first certificate found (the engine is deterministic) or nothing
/// when the space or the budget is exhausted; exhaustion says nothing
/// about validity.
pub fn search_lmf(goal: &ModalFormula, budget: &SearchBudget) -> Option<LmfCert> {
    let polarized = tr(goal, &WorldTerm::Const(WorldId(0)));
    let mut engine = Engine {
        max_decides: budget.max_decides,
        nodes_left: budget.max_nodes,
    };
    let path = Path {
        storage: vec![(Index::Root, polarized.clone().delp())],
        eigen: Vec::new(),
        used: BTreeSet::new(),
        depth: 0,
        next_world: 1,
    };
    let root = match engine.decide(&path) {
        Ok(Some(root)) => root,
        Ok(None) | Err(Exhausted) => return None,
    };
    let cert = LmfCert { root };
    let (fpc, st) = lmf_hooks(&cert);
    let replay = check(
        &fpc,
        st,
        &polarized,
        &KernelConfig {
            max_steps: u64::MAX,
        },
    );
    assert!(
        replay.is_ok(),
        "search produced evidence the kernel refuses for `{goal}`"
    );
    Some(cert)
}
