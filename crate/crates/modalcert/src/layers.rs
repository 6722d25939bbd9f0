//! The three certificate layers and their hook sets.
//!
//! All three layers share one evidence shape: a tree of nodes, one node per
//! decide, each node naming the index to focus on plus an optional extra
//! index (the complementary literal for init nodes, the `[]` occurrence for
//! `<>` nodes). The layers differ only in decoration: `lmfm` adds a group
//! number per node (decides of one group must run back to back), and the
//! star layer adds a present-set and an optional future per node
//! (controlling which worlds a decide may touch).
//!
//! Hook state is a small cursor into a frozen arena of the evidence tree,
//! so backtracking clones are cheap and the evidence itself is never
//! mutated.

use crate::formula::ModalFormula;
use crate::index::{resolve_index, world_of, Index, ResolveError};
use crate::kernel::{Fpc, Side, Storage};
use crate::kripke::WorldId;
use crate::polarized::{PolFormula, Polarity};
use std::collections::{BTreeMap, BTreeSet};

/// One evidence node: the decide index, the optional extra index, a
/// layer-specific decoration, and the decides spawned by this bipole.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node<D> {
    pub index: Index,
    pub extra: Option<Index>,
    pub decor: D,
    pub children: Vec<Node<D>>,
}

impl<D> Node<D> {
    pub fn count(&self) -> usize {
        1 + self.children.iter().map(Node::count).sum::<usize>()
    }
}

pub type LmfNode = Node<()>;

impl LmfNode {
    pub fn new(index: Index, extra: Option<Index>, children: Vec<LmfNode>) -> Self {
        Node {
            index,
            extra,
            decor: (),
            children,
        }
    }
}

/// Plain single-focus evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmfCert {
    pub root: LmfNode,
}

pub type LmfmNode = Node<u32>;

/// Evidence with multi-focus groups (decides of equal group run adjacently).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmfmCert {
    pub root: LmfmNode,
}

/// Star-layer decoration: group plus the present-set/future discipline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarDecor {
    pub group: u32,
    /// Worlds this decide may act in, named by `[]` indices (`root` for the
    /// root world).
    pub present: BTreeSet<Index>,
    /// The `[]` occurrence whose world the proof moves to next, if any.
    pub future: Option<Index>,
}

pub type StarNode = Node<StarDecor>;

/// Evidence with groups and present/future decorations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarCert {
    pub root: StarNode,
}

/// Walks a node tree in pre-order.
pub fn preorder<D>(root: &Node<D>) -> Vec<&Node<D>> {
    let mut out = Vec::new();
    let mut stack = vec![root];
    while let Some(n) = stack.pop() {
        out.push(n);
        for c in n.children.iter().rev() {
            stack.push(c);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Arena
// ---------------------------------------------------------------------------

struct ArenaNode<D> {
    index: Index,
    extra: Option<Index>,
    decor: D,
    children: Vec<usize>,
}

struct Arena<D> {
    nodes: Vec<ArenaNode<D>>,
}

impl<D: Clone> Arena<D> {
    /// Freezes the tree with pre-order ids; id 0 is the root.
    fn build(root: &Node<D>) -> Self {
        let mut arena = Arena { nodes: Vec::new() };
        fn add<D: Clone>(n: &Node<D>, arena: &mut Arena<D>) -> usize {
            let id = arena.nodes.len();
            arena.nodes.push(ArenaNode {
                index: n.index.clone(),
                extra: n.extra.clone(),
                decor: n.decor.clone(),
                children: Vec::new(),
            });
            for c in &n.children {
                let cid = add(c, arena);
                arena.nodes[id].children.push(cid);
            }
            id
        }
        add(root, &mut arena);
        arena
    }
}

impl<D> Arena<D> {
    /// The node the next decide would consume: the cursor itself before its
    /// bipole ran, or its only child afterwards.
    fn decide_target(&self, at: usize, entered: bool) -> Option<usize> {
        if !entered {
            Some(at)
        } else {
            match self.nodes[at].children.as_slice() {
                [only] => Some(*only),
                _ => None,
            }
        }
    }
}

// ---------------------------------------------------------------------------
// lmf hooks
// ---------------------------------------------------------------------------

/// Cursor state threaded through a check: the node under consumption, and
/// the eigen map pairing `[]` indices with the worlds their bipoles opened.
#[derive(Clone, Debug)]
pub struct LmfState {
    at: usize,
    entered: bool,
    eigen: Vec<(Index, WorldId)>,
}

/// Single-focus hook set over an `LmfCert`.
pub struct LmfFpc {
    arena: Arena<()>,
}

/// Builds the lmf hook set and its initial certificate state.
pub fn lmf_hooks(cert: &LmfCert) -> (LmfFpc, LmfState) {
    (
        LmfFpc {
            arena: Arena::build(&cert.root),
        },
        LmfState {
            at: 0,
            entered: false,
            eigen: Vec::new(),
        },
    )
}

/// The `or_pos_e` side shared by all layers: read the branch off the next
/// node's index (`left(_)` means branch 1, `right(_)` branch 2).
fn side_from_next<D>(arena: &Arena<D>, at: usize, entered: bool) -> Vec<Side> {
    match arena.decide_target(at, entered) {
        Some(next) => match arena.nodes[next].index {
            Index::Left(_) => vec![Side::Left],
            Index::Right(_) => vec![Side::Right],
            _ => vec![Side::Left, Side::Right],
        },
        None => vec![Side::Left, Side::Right],
    }
}

fn eigen_witnesses(
    eigen: &[(Index, WorldId)],
    extra: &Option<Index>,
) -> Vec<(WorldId, Option<Index>)> {
    match extra {
        Some(j) => eigen
            .iter()
            .filter(|(i, _)| i == j)
            .map(|(_, w)| (*w, Some(j.clone())))
            .collect(),
        None => Vec::new(),
    }
}

impl Fpc for LmfFpc {
    type Cert = LmfState;

    fn and_neg_c(&self, c: &LmfState) -> Vec<(LmfState, LmfState)> {
        if !c.entered {
            return Vec::new();
        }
        match self.arena.nodes[c.at].children.as_slice() {
            [l, r] => vec![(
                LmfState {
                    at: *l,
                    entered: false,
                    eigen: c.eigen.clone(),
                },
                LmfState {
                    at: *r,
                    entered: false,
                    eigen: c.eigen.clone(),
                },
            )],
            _ => Vec::new(),
        }
    }

    fn all_c(&self, c: &LmfState, w: WorldId) -> Vec<LmfState> {
        let mut next = c.clone();
        if c.entered {
            next.eigen.push((self.arena.nodes[c.at].index.clone(), w));
        }
        vec![next]
    }

    fn or_pos_e(&self, c: &LmfState, _focus: &PolFormula) -> Vec<(Side, LmfState)> {
        side_from_next(&self.arena, c.at, c.entered)
            .into_iter()
            .map(|s| (s, c.clone()))
            .collect()
    }

    fn some_e(&self, c: &LmfState) -> Vec<(WorldId, Option<Index>, LmfState)> {
        if !c.entered {
            return Vec::new();
        }
        eigen_witnesses(&c.eigen, &self.arena.nodes[c.at].extra)
            .into_iter()
            .map(|(w, j)| (w, j, c.clone()))
            .collect()
    }

    fn init_e(&self, c: &LmfState, focus: &PolFormula, _storage: &Storage) -> Vec<Index> {
        if matches!(focus, PolFormula::Rel(_, _)) {
            return vec![Index::Rel];
        }
        if !c.entered {
            return Vec::new();
        }
        self.arena.nodes[c.at].extra.clone().into_iter().collect()
    }

    fn decide_e(&self, c: &LmfState, _storage: &Storage) -> Vec<(Index, LmfState)> {
        match self.arena.decide_target(c.at, c.entered) {
            Some(id) => vec![(
                self.arena.nodes[id].index.clone(),
                LmfState {
                    at: id,
                    entered: true,
                    eigen: c.eigen.clone(),
                },
            )],
            None => Vec::new(),
        }
    }
}

// ---------------------------------------------------------------------------
// lmfm hooks
// ---------------------------------------------------------------------------

/// `LmfState` plus the group bookkeeping: the group whose block is still
/// open and the groups already closed on this branch.
#[derive(Clone, Debug)]
pub struct LmfmState {
    at: usize,
    entered: bool,
    eigen: Vec<(Index, WorldId)>,
    open_group: Option<u32>,
    closed: BTreeSet<u32>,
}

/// Multi-focus simulation hooks over an `LmfmCert`.
pub struct LmfmFpc {
    arena: Arena<u32>,
}

/// Builds the lmfm hook set and its initial certificate state.
pub fn lmfm_hooks(cert: &LmfmCert) -> (LmfmFpc, LmfmState) {
    (
        LmfmFpc {
            arena: Arena::build(&cert.root),
        },
        LmfmState {
            at: 0,
            entered: false,
            eigen: Vec::new(),
            open_group: None,
            closed: BTreeSet::new(),
        },
    )
}

/// Group admission shared by lmfm and the star layer: staying inside the
/// open group is free; entering a new group closes the previous one, and a
/// closed group can never reopen on this branch.
fn admit_group(open: &mut Option<u32>, closed: &mut BTreeSet<u32>, g: u32) -> bool {
    if *open == Some(g) {
        return true;
    }
    if closed.contains(&g) {
        return false;
    }
    if let Some(prev) = open.take() {
        closed.insert(prev);
    }
    *open = Some(g);
    true
}

impl Fpc for LmfmFpc {
    type Cert = LmfmState;

    fn and_neg_c(&self, c: &LmfmState) -> Vec<(LmfmState, LmfmState)> {
        if !c.entered {
            return Vec::new();
        }
        match self.arena.nodes[c.at].children.as_slice() {
            [l, r] => {
                let branch = |id: usize| LmfmState {
                    at: id,
                    entered: false,
                    eigen: c.eigen.clone(),
                    open_group: c.open_group,
                    closed: c.closed.clone(),
                };
                vec![(branch(*l), branch(*r))]
            }
            _ => Vec::new(),
        }
    }

    fn all_c(&self, c: &LmfmState, w: WorldId) -> Vec<LmfmState> {
        let mut next = c.clone();
        if c.entered {
            next.eigen.push((self.arena.nodes[c.at].index.clone(), w));
        }
        vec![next]
    }

    fn or_pos_e(&self, c: &LmfmState, _focus: &PolFormula) -> Vec<(Side, LmfmState)> {
        side_from_next(&self.arena, c.at, c.entered)
            .into_iter()
            .map(|s| (s, c.clone()))
            .collect()
    }

    fn some_e(&self, c: &LmfmState) -> Vec<(WorldId, Option<Index>, LmfmState)> {
        if !c.entered {
            return Vec::new();
        }
        eigen_witnesses(&c.eigen, &self.arena.nodes[c.at].extra)
            .into_iter()
            .map(|(w, j)| (w, j, c.clone()))
            .collect()
    }

    fn init_e(&self, c: &LmfmState, focus: &PolFormula, _storage: &Storage) -> Vec<Index> {
        if matches!(focus, PolFormula::Rel(_, _)) {
            return vec![Index::Rel];
        }
        if !c.entered {
            return Vec::new();
        }
        self.arena.nodes[c.at].extra.clone().into_iter().collect()
    }

    fn decide_e(&self, c: &LmfmState, _storage: &Storage) -> Vec<(Index, LmfmState)> {
        let Some(id) = self.arena.decide_target(c.at, c.entered) else {
            return Vec::new();
        };
        let mut open_group = c.open_group;
        let mut closed = c.closed.clone();
        if !admit_group(&mut open_group, &mut closed, self.arena.nodes[id].decor) {
            return Vec::new();
        }
        vec![(
            self.arena.nodes[id].index.clone(),
            LmfmState {
                at: id,
                entered: true,
                eigen: c.eigen.clone(),
                open_group,
                closed,
            },
        )]
    }
}

// ---------------------------------------------------------------------------
// star hooks
// ---------------------------------------------------------------------------

/// Same state shape as `LmfmState`; the present/future checks read the
/// decorations straight from the arena.
#[derive(Clone, Debug)]
pub struct StarState {
    at: usize,
    entered: bool,
    eigen: Vec<(Index, WorldId)>,
    open_group: Option<u32>,
    closed: BTreeSet<u32>,
}

/// Present/future hook set over a `StarCert`.
pub struct StarFpc {
    arena: Arena<StarDecor>,
}

/// Builds the star hook set and its initial certificate state.
pub fn star_hooks(cert: &StarCert) -> (StarFpc, StarState) {
    (
        StarFpc {
            arena: Arena::build(&cert.root),
        },
        StarState {
            at: 0,
            entered: false,
            eigen: Vec::new(),
            open_group: None,
            closed: BTreeSet::new(),
        },
    )
}

/// The index naming the world of a stored formula: `root` for the root
/// world's constant, else the `[]` index that introduced the constant.
fn home_index(eigen: &[(Index, WorldId)], f: &PolFormula) -> Option<Index> {
    let consts = f.world_consts();
    if consts.len() != 1 {
        return None;
    }
    let w = *consts.iter().next().expect("nonempty");
    match eigen.iter().find(|(_, ew)| *ew == w) {
        Some((j, _)) => Some(j.clone()),
        None => Some(Index::Root),
    }
}

impl Fpc for StarFpc {
    type Cert = StarState;

    fn and_neg_c(&self, c: &StarState) -> Vec<(StarState, StarState)> {
        if !c.entered {
            return Vec::new();
        }
        match self.arena.nodes[c.at].children.as_slice() {
            [l, r] => {
                let branch = |id: usize| StarState {
                    at: id,
                    entered: false,
                    eigen: c.eigen.clone(),
                    open_group: c.open_group,
                    closed: c.closed.clone(),
                };
                vec![(branch(*l), branch(*r))]
            }
            _ => Vec::new(),
        }
    }

    fn all_c(&self, c: &StarState, w: WorldId) -> Vec<StarState> {
        let mut next = c.clone();
        if c.entered {
            next.eigen.push((self.arena.nodes[c.at].index.clone(), w));
        }
        vec![next]
    }

    fn or_pos_e(&self, c: &StarState, _focus: &PolFormula) -> Vec<(Side, StarState)> {
        side_from_next(&self.arena, c.at, c.entered)
            .into_iter()
            .map(|s| (s, c.clone()))
            .collect()
    }

    fn some_e(&self, c: &StarState) -> Vec<(WorldId, Option<Index>, StarState)> {
        if !c.entered {
            return Vec::new();
        }
        let node = &self.arena.nodes[c.at];
        // The future, when set, commits this bipole to that exact world.
        if let Some(fut) = &node.decor.future {
            if node.extra.as_ref() != Some(fut) {
                return Vec::new();
            }
        }
        eigen_witnesses(&c.eigen, &node.extra)
            .into_iter()
            .map(|(w, j)| (w, j, c.clone()))
            .collect()
    }

    fn init_e(&self, c: &StarState, focus: &PolFormula, _storage: &Storage) -> Vec<Index> {
        if matches!(focus, PolFormula::Rel(_, _)) {
            return vec![Index::Rel];
        }
        if !c.entered {
            return Vec::new();
        }
        self.arena.nodes[c.at].extra.clone().into_iter().collect()
    }

    fn decide_e(&self, c: &StarState, storage: &Storage) -> Vec<(Index, StarState)> {
        let Some(id) = self.arena.decide_target(c.at, c.entered) else {
            return Vec::new();
        };
        let node = &self.arena.nodes[id];

        let mut open_group = c.open_group;
        let mut closed = c.closed.clone();
        if !admit_group(&mut open_group, &mut closed, node.decor.group) {
            return Vec::new();
        }

        // Present-set discipline: a <> decide must target the world of its
        // [] partner; anything else must act in its own home world.
        let Some((_, focus)) = storage
            .entries()
            .iter()
            .find(|(i, g)| *i == node.index && g.polarity() == Polarity::Pos)
        else {
            return Vec::new();
        };
        let allowed = if matches!(focus, PolFormula::Ex(_, _)) {
            match &node.extra {
                Some(j) => node.decor.present.contains(j),
                None => false,
            }
        } else {
            match home_index(&c.eigen, focus) {
                Some(h) => node.decor.present.contains(&h),
                None => false,
            }
        };
        if !allowed {
            return Vec::new();
        }

        vec![(
            node.index.clone(),
            StarState {
                at: id,
                entered: true,
                eigen: c.eigen.clone(),
                open_group,
                closed,
            },
        )]
    }
}

// ---------------------------------------------------------------------------
// Conversions between layers
// ---------------------------------------------------------------------------

fn map_tree<D, E>(n: &Node<D>, f: &impl Fn(&Node<D>) -> E) -> Node<E> {
    Node {
        index: n.index.clone(),
        extra: n.extra.clone(),
        decor: f(n),
        children: n.children.iter().map(|c| map_tree(c, f)).collect(),
    }
}

/// Forgets groups.
pub fn erase_groups(c: &LmfmCert) -> LmfCert {
    LmfCert {
        root: map_tree(&c.root, &|_| ()),
    }
}

/// Decorates every node with its own fresh group (pre-order, from 1):
/// the degenerate grouping under which lmfm behaves exactly like lmf.
pub fn singleton_groups(c: &LmfCert) -> LmfmCert {
    fn go(n: &LmfNode, next: &mut u32) -> LmfmNode {
        let g = *next;
        *next += 1;
        Node {
            index: n.index.clone(),
            extra: n.extra.clone(),
            decor: g,
            children: n.children.iter().map(|c| go(c, next)).collect(),
        }
    }
    let mut next = 1;
    LmfmCert {
        root: go(&c.root, &mut next),
    }
}

/// The present/future decorations of a star certificate, in pre-order.
pub type StarSideState = Vec<(BTreeSet<Index>, Option<Index>)>;

/// Splits a star certificate into its multi-focus core and the present /
/// future decorations. Inverse of `multifoc_to_star`.
pub fn star_to_multifoc(c: &StarCert) -> (LmfmCert, StarSideState) {
    let mut side = Vec::new();
    for n in preorder(&c.root) {
        side.push((n.decor.present.clone(), n.decor.future.clone()));
    }
    (
        LmfmCert {
            root: map_tree(&c.root, &|n| n.decor.group),
        },
        side,
    )
}

/// Reattaches present/future decorations to a multi-focus certificate.
/// Inverse of `star_to_multifoc`.
pub fn multifoc_to_star(c: &LmfmCert, side: &StarSideState) -> Result<StarCert, LayerError> {
    let total = c.root.count();
    if side.len() != total {
        return Err(LayerError::DecorationLength {
            expected: total,
            got: side.len(),
        });
    }
    fn go(n: &LmfmNode, side: &StarSideState, pos: &mut usize) -> StarNode {
        let (present, future) = side[*pos].clone();
        *pos += 1;
        Node {
            index: n.index.clone(),
            extra: n.extra.clone(),
            decor: StarDecor {
                group: n.decor,
                present,
                future,
            },
            children: n.children.iter().map(|c| go(c, side, pos)).collect(),
        }
    }
    let mut pos = 0;
    Ok(StarCert {
        root: go(&c.root, side, &mut pos),
    })
}

/// Derives star decorations from the goal: a `<>` node moves to (and is
/// present in) the world of its `[]` partner; every other node is present
/// in its home world.
pub fn synthesize_star(c: &LmfmCert, goal: &ModalFormula) -> Result<StarCert, LayerError> {
    fn go(n: &LmfmNode, goal: &ModalFormula) -> Result<StarNode, LayerError> {
        let here = resolve_index(goal, &n.index).map_err(|source| LayerError::BadIndex {
            at: n.index.clone(),
            source,
        })?;
        let decor = if matches!(here, ModalFormula::Dia(_)) {
            let j = n.extra.clone().ok_or(LayerError::MissingExtra {
                index: n.index.clone(),
            })?;
            StarDecor {
                group: n.decor,
                present: [j.clone()].into_iter().collect(),
                future: Some(j),
            }
        } else {
            let h = world_of(goal, &n.index).map_err(|source| LayerError::BadIndex {
                at: n.index.clone(),
                source,
            })?;
            StarDecor {
                group: n.decor,
                present: [h].into_iter().collect(),
                future: None,
            }
        };
        Ok(Node {
            index: n.index.clone(),
            extra: n.extra.clone(),
            decor,
            children: n
                .children
                .iter()
                .map(|c| go(c, goal))
                .collect::<Result<_, _>>()?,
        })
    }
    Ok(StarCert {
        root: go(&c.root, goal)?,
    })
}

// ---------------------------------------------------------------------------
// Static validation
// ---------------------------------------------------------------------------

/// Structural defects of a certificate relative to its goal. These reject
/// evidence (they are not schema errors): the tree parses fine but cannot
/// describe a proof of this goal.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LayerError {
    #[error("index {at} does not address the goal: {source}")]
    BadIndex { at: Index, source: ResolveError },
    #[error("node {index} addresses a {found} occurrence, which cannot be decided")]
    WrongRole { index: Index, found: &'static str },
    #[error("node {index} needs an extra index")]
    MissingExtra { index: Index },
    #[error("node {index} must not carry an extra index")]
    UnexpectedExtra { index: Index },
    #[error("node {index} has {got} children, expected {expected}")]
    WrongArity {
        index: Index,
        expected: usize,
        got: usize,
    },
    #[error("init node {index} pairs non-complementary literals")]
    LiteralMismatch { index: Index },
    #[error("extra of node {index} must name a [] occurrence")]
    ExtraNotABox { index: Index },
    #[error("node {index} has group 0; groups start at 1")]
    GroupZero { index: Index },
    #[error("group {group} does not form one contiguous chain of decides")]
    GroupSplit { group: u32 },
    #[error("node {index} has an empty present set")]
    EmptyPresent { index: Index },
    #[error("present entry {entry} of node {index} is not a [] occurrence or root")]
    BadPresent { index: Index, entry: Index },
    #[error("future {future} of node {index} is not a [] occurrence")]
    BadFuture { index: Index, future: Index },
    #[error("decoration list has {got} entries for {expected} nodes")]
    DecorationLength { expected: usize, got: usize },
}

fn check_box_index(
    goal: &ModalFormula,
    at: &Index,
    j: &Index,
    err: LayerError,
) -> Result<(), LayerError> {
    match resolve_index(goal, j) {
        Ok(ModalFormula::Box_(_)) => Ok(()),
        Ok(_) => Err(err),
        Err(source) => Err(LayerError::BadIndex {
            at: at.clone(),
            source,
        }),
    }
}

fn validate_node<D>(goal: &ModalFormula, n: &Node<D>) -> Result<(), LayerError> {
    let here = resolve_index(goal, &n.index).map_err(|source| LayerError::BadIndex {
        at: n.index.clone(),
        source,
    })?;
    let arity_ok = |expected: usize| -> Result<(), LayerError> {
        if n.children.len() == expected {
            Ok(())
        } else {
            Err(LayerError::WrongArity {
                index: n.index.clone(),
                expected,
                got: n.children.len(),
            })
        }
    };
    let no_extra = || -> Result<(), LayerError> {
        if n.extra.is_none() {
            Ok(())
        } else {
            Err(LayerError::UnexpectedExtra {
                index: n.index.clone(),
            })
        }
    };
    match here {
        ModalFormula::And(_, _) => {
            no_extra()?;
            arity_ok(2)?;
        }
        ModalFormula::Or(_, _) | ModalFormula::Box_(_) => {
            no_extra()?;
            arity_ok(1)?;
        }
        ModalFormula::Dia(_) => {
            arity_ok(1)?;
            let j = n.extra.as_ref().ok_or(LayerError::MissingExtra {
                index: n.index.clone(),
            })?;
            check_box_index(
                goal,
                &n.index,
                j,
                LayerError::ExtraNotABox {
                    index: n.index.clone(),
                },
            )?;
        }
        ModalFormula::Atom(name) => {
            arity_ok(0)?;
            let e = n.extra.as_ref().ok_or(LayerError::MissingExtra {
                index: n.index.clone(),
            })?;
            let other = resolve_index(goal, e).map_err(|source| LayerError::BadIndex {
                at: n.index.clone(),
                source,
            })?;
            match other {
                ModalFormula::NAtom(m) if m == name => {}
                _ => {
                    return Err(LayerError::LiteralMismatch {
                        index: n.index.clone(),
                    })
                }
            }
        }
        ModalFormula::NAtom(_) => {
            return Err(LayerError::WrongRole {
                index: n.index.clone(),
                found: "negated literal",
            })
        }
    }
    for c in &n.children {
        validate_node(goal, c)?;
    }
    Ok(())
}

/// Checks that every index addresses the goal and every node plays the role
/// its subformula demands (arity, extras, complementary literals).
pub fn validate_lmf(goal: &ModalFormula, c: &LmfCert) -> Result<(), LayerError> {
    validate_node(goal, &c.root)
}

type GroupMembers<D> = BTreeMap<u32, Vec<(*const Node<D>, Option<*const Node<D>>)>>;

fn validate_groups<D>(root: &Node<D>, group_of: impl Fn(&D) -> u32) -> Result<(), LayerError> {
    // Nodes of one group must form a chain: each the parent of the next in
    // pre-order. Collect (group -> ordered node ptrs with their parents).
    let mut members: GroupMembers<D> = BTreeMap::new();
    fn walk<D>(
        n: &Node<D>,
        parent: Option<*const Node<D>>,
        group_of: &impl Fn(&D) -> u32,
        members: &mut GroupMembers<D>,
    ) {
        members
            .entry(group_of(&n.decor))
            .or_default()
            .push((n as *const _, parent));
        for c in &n.children {
            walk(c, Some(n as *const _), group_of, members);
        }
    }
    walk(root, None, &group_of, &mut members);
    for (group, nodes) in &members {
        for pair in nodes.windows(2) {
            let (prev, _) = pair[0];
            let (_, parent_of_next) = pair[1];
            if parent_of_next != Some(prev) {
                return Err(LayerError::GroupSplit { group: *group });
            }
        }
    }
    Ok(())
}

/// `validate_lmf` plus the group discipline: positive groups, each forming
/// one contiguous parent-child chain.
pub fn validate_lmfm(goal: &ModalFormula, c: &LmfmCert) -> Result<(), LayerError> {
    validate_lmf(goal, &erase_groups(c))?;
    for n in preorder(&c.root) {
        if n.decor == 0 {
            return Err(LayerError::GroupZero {
                index: n.index.clone(),
            });
        }
    }
    validate_groups(&c.root, |g| *g)
}

/// `validate_lmfm` plus the star decorations: nonempty present sets whose
/// entries name worlds, and futures naming `[]` occurrences.
pub fn validate_star(goal: &ModalFormula, c: &StarCert) -> Result<(), LayerError> {
    let (core, _) = star_to_multifoc(c);
    validate_lmfm(goal, &core)?;
    for n in preorder(&c.root) {
        if n.decor.present.is_empty() {
            return Err(LayerError::EmptyPresent {
                index: n.index.clone(),
            });
        }
        for entry in &n.decor.present {
            if *entry != Index::Root {
                check_box_index(
                    goal,
                    &n.index,
                    entry,
                    LayerError::BadPresent {
                        index: n.index.clone(),
                        entry: entry.clone(),
                    },
                )?;
            }
        }
        if let Some(fut) = &n.decor.future {
            check_box_index(
                goal,
                &n.index,
                fut,
                LayerError::BadFuture {
                    index: n.index.clone(),
                    future: fut.clone(),
                },
            )?;
        }
    }
    Ok(())
}
