//! Evidence formats of the four source calculi and their translations
//! into layer certificates.
//!
//! Labeled-sequent evidence (`ls`) is already lmf-shaped, so its adapter is
//! a correspondence walk. Prefixed-tableau evidence (`pt`) describes a
//! refutation of the negated goal; since negation flips each connective in
//! place, tableau indices address the goal positionally and only the roles
//! swap. Ordinary-sequent evidence (`os`) compresses all `<>` uses into the
//! `[]` inference that transports them, so its adapter re-expands them into
//! star-layer nodes. Nested-sequent evidence (`ns`) names occurrences by
//! position inside a sequent tree, so its adapter threads a growing
//! bijection onto goal indices.

use crate::formula::ModalFormula;
use crate::index::{
    dia_child, resolve_index, Index, IndexMap, IndexMapError, NsIndex, ResolveError, Seq,
};
use crate::kripke::WorldId;
use crate::layers::{
    validate_lmf, LayerError, LmfCert, LmfNode, Node, StarCert, StarDecor, StarNode,
};
use crate::polarized::{tr, PolFormula, WorldTerm};
use std::collections::{BTreeMap, BTreeSet};

/// Labeled-sequent evidence: the lmf tree itself.
pub type LsEvidence = LmfCert;

/// Prefixed-tableau evidence: one node per tableau rule application over
/// the negated goal, branches left first, closures carrying the
/// complementary literal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PtEvidence {
    pub root: LmfNode,
}

/// One ordinary-sequent inference: extras list the `<>` occurrences a `[]`
/// inference transports, or the complementary literal at an init.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OsNode {
    pub index: Index,
    pub extras: Vec<Index>,
    pub children: Vec<OsNode>,
}

/// Ordinary-sequent evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OsEvidence {
    pub root: OsNode,
}

/// One nested-sequent inference over occurrence addresses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NsNode {
    pub index: NsIndex,
    pub extra: Option<NsIndex>,
    pub children: Vec<NsNode>,
}

/// Nested-sequent evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NsEvidence {
    pub root: NsNode,
}

/// Why evidence in a source format cannot be translated. These reject the
/// evidence; they are not schema errors.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AdapterError {
    #[error(transparent)]
    Layer(#[from] LayerError),
    #[error("index {at} does not address the goal: {source}")]
    BadIndex { at: Index, source: ResolveError },
    #[error("node {index} addresses a {found} occurrence, unusable in this format")]
    WrongRole { index: Index, found: &'static str },
    #[error("node {index} has {got} children, expected {expected}")]
    WrongArity {
        index: Index,
        expected: usize,
        got: usize,
    },
    #[error("closure at {index} does not pair complementary literals")]
    ClosureMismatch { index: Index },
    #[error("node {index} instantiates prefix of {extra}, which no branch ancestor created")]
    PrefixNotCreated { index: Index, extra: Index },
    #[error("node {index} needs an extra index")]
    MissingExtra { index: Index },
    #[error("node {index} must not carry extras")]
    UnexpectedExtras { index: Index },
    #[error("extra {extra} of [] node {index} is not a <> occurrence")]
    ExtraNotADia { index: Index, extra: Index },
    #[error("init node {index} needs exactly one extra, the complementary literal")]
    InitExtras { index: Index },
    #[error("nested node {index} cannot be placed: {source}")]
    NsMap {
        index: NsIndex,
        source: IndexMapError,
    },
    #[error("node {index} moves into sequent {seq}, which no [] inference created")]
    SequentNeverCreated { index: NsIndex, seq: Seq },
    #[error("extra of node {index} does not name the [] that created its sequent")]
    WrongCreator { index: NsIndex },
    #[error("nested node {index} addresses a {found} occurrence, which cannot be decided")]
    NsWrongRole { index: NsIndex, found: &'static str },
    #[error("nested node {index} has {got} children, expected {expected}")]
    NsWrongArity {
        index: NsIndex,
        expected: usize,
        got: usize,
    },
}

// ---------------------------------------------------------------------------
// ls
// ---------------------------------------------------------------------------

/// Labeled-sequent evidence is used as-is once the correspondence walk
/// (every index addresses the goal in the right role) succeeds.
pub fn ls_to_lmf(e: &LsEvidence, goal: &ModalFormula) -> Result<LmfCert, AdapterError> {
    validate_lmf(goal, e)?;
    Ok(e.clone())
}

// ---------------------------------------------------------------------------
// pt
// ---------------------------------------------------------------------------

/// Translates a closed prefixed tableau for the negated goal into lmf
/// evidence for the goal, returning the polarized goal to check against.
/// Tableau rules land on the dual role: a tableau `[]` instantiation is a
/// `<>` bipole whose extra must name a prefix some branch ancestor created,
/// and closures are normalized to decide the positive literal.
pub fn pt_to_lmf(
    e: &PtEvidence,
    goal: &ModalFormula,
) -> Result<(LmfCert, PolFormula), AdapterError> {
    fn walk(
        n: &LmfNode,
        goal: &ModalFormula,
        prefixes: &BTreeSet<Index>,
    ) -> Result<LmfNode, AdapterError> {
        let here = resolve_index(goal, &n.index).map_err(|source| AdapterError::BadIndex {
            at: n.index.clone(),
            source,
        })?;
        let arity = |expected: usize| -> Result<(), AdapterError> {
            if n.children.len() == expected {
                Ok(())
            } else {
                Err(AdapterError::WrongArity {
                    index: n.index.clone(),
                    expected,
                    got: n.children.len(),
                })
            }
        };
        let no_extra = || -> Result<(), AdapterError> {
            if n.extra.is_none() {
                Ok(())
            } else {
                Err(AdapterError::UnexpectedExtras {
                    index: n.index.clone(),
                })
            }
        };
        let recurse = |prefixes: &BTreeSet<Index>| -> Result<Vec<LmfNode>, AdapterError> {
            n.children.iter().map(|c| walk(c, goal, prefixes)).collect()
        };
        match here {
            // Goal ∨ is a tableau ∧: one premise, both parts kept.
            ModalFormula::Or(_, _) => {
                no_extra()?;
                arity(1)?;
                Ok(LmfNode::new(n.index.clone(), None, recurse(prefixes)?))
            }
            // Goal ∧ is a tableau ∨: the branch splits.
            ModalFormula::And(_, _) => {
                no_extra()?;
                arity(2)?;
                Ok(LmfNode::new(n.index.clone(), None, recurse(prefixes)?))
            }
            // Goal [] is a tableau <>: it creates a fresh prefix, which the
            // rest of this branch may instantiate.
            ModalFormula::Box_(_) => {
                no_extra()?;
                arity(1)?;
                let mut deeper = prefixes.clone();
                deeper.insert(n.index.clone());
                Ok(LmfNode::new(n.index.clone(), None, recurse(&deeper)?))
            }
            // Goal <> is a tableau []: it moves into an existing prefix.
            ModalFormula::Dia(_) => {
                arity(1)?;
                let j = n.extra.clone().ok_or(AdapterError::MissingExtra {
                    index: n.index.clone(),
                })?;
                if !prefixes.contains(&j) {
                    return Err(AdapterError::PrefixNotCreated {
                        index: n.index.clone(),
                        extra: j,
                    });
                }
                Ok(LmfNode::new(n.index.clone(), Some(j), recurse(prefixes)?))
            }
            // Closure: orient so the decided literal is the positive one.
            ModalFormula::Atom(a) | ModalFormula::NAtom(a) => {
                arity(0)?;
                let e = n.extra.clone().ok_or(AdapterError::MissingExtra {
                    index: n.index.clone(),
                })?;
                let other = resolve_index(goal, &e).map_err(|source| AdapterError::BadIndex {
                    at: n.index.clone(),
                    source,
                })?;
                let (pos, neg) = match (here, other) {
                    (ModalFormula::Atom(_), ModalFormula::NAtom(b)) if a == b => {
                        (n.index.clone(), e)
                    }
                    (ModalFormula::NAtom(_), ModalFormula::Atom(b)) if a == b => {
                        (e, n.index.clone())
                    }
                    _ => {
                        return Err(AdapterError::ClosureMismatch {
                            index: n.index.clone(),
                        })
                    }
                };
                Ok(LmfNode::new(pos, Some(neg), vec![]))
            }
        }
    }
    let root = walk(&e.root, goal, &BTreeSet::new())?;
    Ok((LmfCert { root }, tr(goal, &WorldTerm::Const(WorldId(0)))))
}

// ---------------------------------------------------------------------------
// os
// ---------------------------------------------------------------------------

/// Re-expands ordinary-sequent evidence into star evidence: the `[]`
/// inference that transports `<>` occurrences becomes the `[]` decide
/// followed by one `<>` decide per transported occurrence, all sharing one
/// group and committed to the `[]`'s world.
pub fn os_to_star(e: &OsEvidence, goal: &ModalFormula) -> Result<StarCert, AdapterError> {
    fn fresh(next: &mut u32) -> u32 {
        let g = *next;
        *next += 1;
        g
    }
    fn walk(
        n: &OsNode,
        goal: &ModalFormula,
        present: &BTreeSet<Index>,
        next: &mut u32,
    ) -> Result<StarNode, AdapterError> {
        let here = resolve_index(goal, &n.index).map_err(|source| AdapterError::BadIndex {
            at: n.index.clone(),
            source,
        })?;
        let arity = |expected: usize| -> Result<(), AdapterError> {
            if n.children.len() == expected {
                Ok(())
            } else {
                Err(AdapterError::WrongArity {
                    index: n.index.clone(),
                    expected,
                    got: n.children.len(),
                })
            }
        };
        match here {
            ModalFormula::And(_, _) | ModalFormula::Or(_, _) => {
                if !n.extras.is_empty() {
                    return Err(AdapterError::UnexpectedExtras {
                        index: n.index.clone(),
                    });
                }
                arity(if matches!(here, ModalFormula::And(_, _)) {
                    2
                } else {
                    1
                })?;
                let decor = StarDecor {
                    group: fresh(next),
                    present: present.clone(),
                    future: None,
                };
                let children = n
                    .children
                    .iter()
                    .map(|c| walk(c, goal, present, next))
                    .collect::<Result<_, _>>()?;
                Ok(Node {
                    index: n.index.clone(),
                    extra: None,
                    decor,
                    children,
                })
            }
            ModalFormula::Box_(_) => {
                arity(1)?;
                for d in &n.extras {
                    match resolve_index(goal, d) {
                        Ok(ModalFormula::Dia(_)) => {}
                        Ok(_) => {
                            return Err(AdapterError::ExtraNotADia {
                                index: n.index.clone(),
                                extra: d.clone(),
                            })
                        }
                        Err(source) => {
                            return Err(AdapterError::BadIndex {
                                at: n.index.clone(),
                                source,
                            })
                        }
                    }
                }
                let box_group = fresh(next);
                let dia_group = if n.extras.is_empty() {
                    None
                } else {
                    Some(fresh(next))
                };
                let inner: BTreeSet<Index> = [n.index.clone()].into_iter().collect();
                let mut below: Vec<StarNode> = n
                    .children
                    .iter()
                    .map(|c| walk(c, goal, &inner, next))
                    .collect::<Result<_, _>>()?;
                // The <> decides ride between the [] and its premise, last
                // extra innermost, all in one group.
                if let Some(dia_group) = dia_group {
                    for d in n.extras.iter().rev() {
                        below = vec![Node {
                            index: d.clone(),
                            extra: Some(n.index.clone()),
                            decor: StarDecor {
                                group: dia_group,
                                present: inner.clone(),
                                future: Some(n.index.clone()),
                            },
                            children: below,
                        }];
                    }
                }
                Ok(Node {
                    index: n.index.clone(),
                    extra: None,
                    decor: StarDecor {
                        group: box_group,
                        present: present.clone(),
                        future: None,
                    },
                    children: below,
                })
            }
            ModalFormula::Atom(a) => {
                arity(0)?;
                let [extra] = n.extras.as_slice() else {
                    return Err(AdapterError::InitExtras {
                        index: n.index.clone(),
                    });
                };
                match resolve_index(goal, extra) {
                    Ok(ModalFormula::NAtom(b)) if b == a => {}
                    Ok(_) => {
                        return Err(AdapterError::ClosureMismatch {
                            index: n.index.clone(),
                        })
                    }
                    Err(source) => {
                        return Err(AdapterError::BadIndex {
                            at: n.index.clone(),
                            source,
                        })
                    }
                }
                Ok(Node {
                    index: n.index.clone(),
                    extra: Some(extra.clone()),
                    decor: StarDecor {
                        group: fresh(next),
                        present: present.clone(),
                        future: None,
                    },
                    children: vec![],
                })
            }
            ModalFormula::NAtom(_) => Err(AdapterError::WrongRole {
                index: n.index.clone(),
                found: "negated literal",
            }),
            ModalFormula::Dia(_) => Err(AdapterError::WrongRole {
                index: n.index.clone(),
                found: "<>",
            }),
        }
    }
    let mut next = 1;
    let initial: BTreeSet<Index> = [Index::Root].into_iter().collect();
    let root = walk(&e.root, goal, &initial, &mut next)?;
    Ok(StarCert { root })
}

// ---------------------------------------------------------------------------
// ns
// ---------------------------------------------------------------------------

/// Translates nested-sequent evidence by growing a bijection from
/// occurrence addresses to goal indices: `[]` inferences create a child
/// sequent (numbered per parent sequent from 1) and map their body into it;
/// `<>` inferences move their body into a sequent some `[]` created.
pub fn ns_to_lmf(e: &NsEvidence, goal: &ModalFormula) -> Result<LmfCert, AdapterError> {
    struct State {
        map: IndexMap,
        // Child sequent -> (creating [] position, its goal index).
        creators: BTreeMap<Seq, (Index, Index)>,
        // How many child sequents each sequent has spawned so far.
        spawned: BTreeMap<Seq, u32>,
    }
    fn extend(st: &mut State, at: &NsIndex, n: NsIndex, i: Index) -> Result<(), AdapterError> {
        st.map
            .map_extend(n, i)
            .map_err(|source| AdapterError::NsMap {
                index: at.clone(),
                source,
            })
    }
    fn walk(n: &NsNode, goal: &ModalFormula, st: &mut State) -> Result<LmfNode, AdapterError> {
        let here = st
            .map
            .map_lookup(&n.index)
            .map_err(|source| AdapterError::NsMap {
                index: n.index.clone(),
                source,
            })?
            .clone();
        let shape = resolve_index(goal, &here).map_err(|source| AdapterError::BadIndex {
            at: here.clone(),
            source,
        })?;
        let arity = |expected: usize| -> Result<(), AdapterError> {
            if n.children.len() == expected {
                Ok(())
            } else {
                Err(AdapterError::NsWrongArity {
                    index: n.index.clone(),
                    expected,
                    got: n.children.len(),
                })
            }
        };
        let recurse = |st: &mut State, n: &NsNode| -> Result<Vec<LmfNode>, AdapterError> {
            n.children.iter().map(|c| walk(c, goal, st)).collect()
        };
        match shape {
            ModalFormula::And(_, _) | ModalFormula::Or(_, _) => {
                arity(if matches!(shape, ModalFormula::And(_, _)) {
                    2
                } else {
                    1
                })?;
                let l = NsIndex {
                    pos: n.index.pos.clone().left(),
                    seq: n.index.seq.clone(),
                };
                let r = NsIndex {
                    pos: n.index.pos.clone().right(),
                    seq: n.index.seq.clone(),
                };
                extend(st, &n.index, l, here.clone().left())?;
                extend(st, &n.index, r, here.clone().right())?;
                Ok(LmfNode::new(here, None, recurse(st, n)?))
            }
            ModalFormula::Box_(_) => {
                arity(1)?;
                let k = st.spawned.entry(n.index.seq.clone()).or_insert(0);
                *k += 1;
                let child_seq = Seq::Chld(*k, Box::new(n.index.seq.clone()));
                st.creators
                    .insert(child_seq.clone(), (n.index.pos.clone(), here.clone()));
                let body = NsIndex {
                    pos: n.index.pos.clone().left(),
                    seq: child_seq,
                };
                extend(st, &n.index, body, here.clone().left())?;
                Ok(LmfNode::new(here, None, recurse(st, n)?))
            }
            ModalFormula::Dia(_) => {
                arity(1)?;
                let ex = n.extra.clone().ok_or(AdapterError::NsWrongRole {
                    index: n.index.clone(),
                    found: "<> without a target sequent",
                })?;
                let (creator_pos, j) =
                    st.creators
                        .get(&ex.seq)
                        .cloned()
                        .ok_or(AdapterError::SequentNeverCreated {
                            index: n.index.clone(),
                            seq: ex.seq.clone(),
                        })?;
                if ex.pos != creator_pos {
                    return Err(AdapterError::WrongCreator {
                        index: n.index.clone(),
                    });
                }
                let body = NsIndex {
                    pos: n.index.pos.clone().left(),
                    seq: ex.seq,
                };
                extend(st, &n.index, body, dia_child(&here, &j))?;
                Ok(LmfNode::new(here, Some(j), recurse(st, n)?))
            }
            ModalFormula::Atom(_) => {
                arity(0)?;
                let ex = n.extra.clone().ok_or(AdapterError::NsWrongRole {
                    index: n.index.clone(),
                    found: "literal without a partner",
                })?;
                let partner = st
                    .map
                    .map_lookup(&ex)
                    .map_err(|source| AdapterError::NsMap {
                        index: n.index.clone(),
                        source,
                    })?
                    .clone();
                Ok(LmfNode::new(here, Some(partner), vec![]))
            }
            ModalFormula::NAtom(_) => Err(AdapterError::NsWrongRole {
                index: n.index.clone(),
                found: "negated literal",
            }),
        }
    }
    let mut st = State {
        map: IndexMap::new(),
        creators: BTreeMap::new(),
        spawned: BTreeMap::new(),
    };
    let root_ns = NsIndex {
        pos: Index::Root,
        seq: Seq::Zb,
    };
    extend(&mut st, &root_ns, root_ns.clone(), Index::Root)?;
    let root = walk(&e.root, goal, &mut st)?;
    Ok(LmfCert { root })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::formula::{axiom_k_example, parse_formula};
    use crate::kernel::{check, CheckError, KernelConfig};
    use crate::layers::tests::{axiom_k_lmf, axiom_k_star};
    use crate::layers::{lmf_hooks, star_hooks, validate_star};

    fn l() -> Index {
        Index::Root.left()
    }
    fn r() -> Index {
        Index::Root.right()
    }
    fn lr() -> Index {
        Index::Root.right().left()
    }
    fn rr() -> Index {
        Index::Root.right().right()
    }
    fn d1() -> Index {
        dia_child(&l(), &rr())
    }
    fn d2() -> Index {
        dia_child(&lr(), &rr())
    }

    /// The six-node ordinary-sequent evidence for the running example: the
    /// [] inference carries both <> occurrences in its extras.
    pub(crate) fn axiom_k_os() -> OsEvidence {
        fn node(index: Index, extras: Vec<Index>, children: Vec<OsNode>) -> OsNode {
            OsNode {
                index,
                extras,
                children,
            }
        }
        OsEvidence {
            root: node(
                Index::Root,
                vec![],
                vec![node(
                    r(),
                    vec![],
                    vec![node(
                        rr(),
                        vec![l(), lr()],
                        vec![node(
                            d1(),
                            vec![],
                            vec![
                                node(d1().left(), vec![d2()], vec![]),
                                node(rr().left(), vec![d1().right()], vec![]),
                            ],
                        )],
                    )],
                )],
            ),
        }
    }

    /// The eight-node nested-sequent evidence: the [] creates chld(1, zb),
    /// then both <> inferences move their bodies into it.
    pub(crate) fn axiom_k_ns() -> NsEvidence {
        fn at(pos: Index, seq: Seq) -> NsIndex {
            NsIndex { pos, seq }
        }
        fn node(index: NsIndex, extra: Option<NsIndex>, children: Vec<NsNode>) -> NsNode {
            NsNode {
                index,
                extra,
                children,
            }
        }
        let zb = Seq::Zb;
        let c1 = Seq::Chld(1, Box::new(Seq::Zb));
        NsEvidence {
            root: node(
                at(Index::Root, zb.clone()),
                None,
                vec![node(
                    at(r(), zb.clone()),
                    None,
                    vec![node(
                        at(rr(), zb.clone()),
                        None,
                        vec![node(
                            at(lr(), zb.clone()),
                            Some(at(rr(), c1.clone())),
                            vec![node(
                                at(l(), zb),
                                Some(at(rr(), c1.clone())),
                                vec![node(
                                    at(l().left(), c1.clone()),
                                    None,
                                    vec![
                                        node(
                                            at(l().left().left(), c1.clone()),
                                            Some(at(lr().left(), c1.clone())),
                                            vec![],
                                        ),
                                        node(
                                            at(rr().left(), c1.clone()),
                                            Some(at(l().left().right(), c1)),
                                            vec![],
                                        ),
                                    ],
                                )],
                            )],
                        )],
                    )],
                )],
            ),
        }
    }

    /// The eight-node prefixed tableau refuting the negated running
    /// example: two tableau-∧ steps, the <> creating the prefix, two []
    /// moves into it, a branching ∨, and two closures.
    pub(crate) fn axiom_k_pt() -> PtEvidence {
        PtEvidence {
            root: LmfNode::new(
                Index::Root,
                None,
                vec![LmfNode::new(
                    r(),
                    None,
                    vec![LmfNode::new(
                        rr(),
                        None,
                        vec![LmfNode::new(
                            l(),
                            Some(rr()),
                            vec![LmfNode::new(
                                lr(),
                                Some(rr()),
                                vec![LmfNode::new(
                                    d1(),
                                    None,
                                    vec![
                                        LmfNode::new(d1().left(), Some(d2()), vec![]),
                                        LmfNode::new(rr().left(), Some(d1().right()), vec![]),
                                    ],
                                )],
                            )],
                        )],
                    )],
                )],
            ),
        }
    }

    #[test]
    fn ls_is_the_identity_on_valid_evidence() {
        let cert = axiom_k_lmf();
        let got = ls_to_lmf(&cert, &axiom_k_example()).unwrap();
        assert_eq!(got, cert);
    }

    #[test]
    fn ls_rejects_dangling_and_misroled_indices() {
        let goal = axiom_k_example();
        let bad = LmfCert {
            root: LmfNode::new(Index::Root.left().left(), None, vec![]),
        };
        assert!(matches!(
            ls_to_lmf(&bad, &goal),
            Err(AdapterError::Layer(LayerError::BadIndex { .. }))
        ));

        // diaind whose [] component is not a []: the <> extra names an ∨.
        let mut cert = axiom_k_lmf();
        cert.root.children[0].children[0].children[0].extra = Some(r());
        assert!(matches!(
            ls_to_lmf(&cert, &goal),
            Err(AdapterError::Layer(LayerError::ExtraNotABox { .. }))
        ));
    }

    #[test]
    fn os_expands_to_the_reference_star_evidence() {
        let got = os_to_star(&axiom_k_os(), &axiom_k_example()).unwrap();
        assert_eq!(got, axiom_k_star());
    }

    #[test]
    fn os_block_counts_match_inference_counts() {
        let e = axiom_k_os();
        let star = os_to_star(&e, &axiom_k_example()).unwrap();
        fn count_os(n: &OsNode) -> usize {
            1 + n.children.iter().map(count_os).sum::<usize>()
        }
        fn count_transported(n: &OsNode, goal: &ModalFormula) -> usize {
            let here = resolve_index(goal, &n.index);
            let own = match here {
                Ok(ModalFormula::Box_(_)) => n.extras.len(),
                _ => 0,
            };
            own + n
                .children
                .iter()
                .map(|c| count_transported(c, goal))
                .sum::<usize>()
        }
        assert_eq!(
            star.root.count(),
            count_os(&e.root) + count_transported(&e.root, &axiom_k_example())
        );
    }

    #[test]
    fn os_purely_propositional_proof_gets_singleton_groups() {
        let goal = parse_formula("p | ~p").unwrap();
        let e = OsEvidence {
            root: OsNode {
                index: Index::Root,
                extras: vec![],
                children: vec![OsNode {
                    index: l(),
                    extras: vec![r()],
                    children: vec![],
                }],
            },
        };
        let star = os_to_star(&e, &goal).unwrap();
        validate_star(&goal, &star).unwrap();
        assert_eq!(star.root.decor.group, 1);
        assert_eq!(star.root.children[0].decor.group, 2);
        let (fpc, st) = star_hooks(&star);
        let polarized = tr(&goal, &WorldTerm::Const(WorldId(0)));
        check(&fpc, st, &polarized, &KernelConfig::default()).unwrap();
    }

    #[test]
    fn os_rejects_non_dia_extras_and_bad_inits() {
        let goal = axiom_k_example();

        let mut e = axiom_k_os();
        e.root.children[0].children[0].extras = vec![l(), r()];
        assert!(matches!(
            os_to_star(&e, &goal),
            Err(AdapterError::ExtraNotADia { .. })
        ));

        let mut e = axiom_k_os();
        e.root.children[0].children[0].children[0].children[0].extras = vec![];
        assert!(matches!(
            os_to_star(&e, &goal),
            Err(AdapterError::InitExtras { .. })
        ));
    }

    #[test]
    fn os_translation_certifies() {
        let star = os_to_star(&axiom_k_os(), &axiom_k_example()).unwrap();
        validate_star(&axiom_k_example(), &star).unwrap();
        let goal = tr(&axiom_k_example(), &WorldTerm::Const(WorldId(0)));
        let (fpc, st) = star_hooks(&star);
        let t = check(&fpc, st, &goal, &KernelConfig::default()).unwrap();
        assert_eq!(t.decide_count(), 8);
    }

    #[test]
    fn ns_translation_certifies() {
        let cert = ns_to_lmf(&axiom_k_ns(), &axiom_k_example()).unwrap();
        validate_lmf(&axiom_k_example(), &cert).unwrap();
        let goal = tr(&axiom_k_example(), &WorldTerm::Const(WorldId(0)));
        let (fpc, st) = lmf_hooks(&cert);
        let t = check(&fpc, st, &goal, &KernelConfig::default()).unwrap();
        assert_eq!(t.decide_count(), 8);
    }

    #[test]
    fn ns_maps_dia_bodies_to_diaind() {
        let cert = ns_to_lmf(&axiom_k_ns(), &axiom_k_example()).unwrap();
        // Walk: root, right, [] at rr, <>~p at lr, <>(p&~q) at l, then the
        // ∧ body of the second <>, then its two closures.
        let n4 = &cert.root.children[0].children[0].children[0];
        assert_eq!(n4.index, lr());
        assert_eq!(n4.extra, Some(rr()));
        let n5 = &n4.children[0];
        assert_eq!(n5.index, l());
        let n6 = &n5.children[0];
        assert_eq!(n6.index, d1());
        assert_eq!(n6.children[0].extra, Some(d2()));
        assert_eq!(n6.children[1].extra, Some(d1().right()));
    }

    #[test]
    fn ns_two_step_box_creates_child_one() {
        // q ∨ []p: an ∨ step at the root, then the [] creating chld(1, zb).
        let goal = parse_formula("~p | []p").unwrap();
        let zb = Seq::Zb;
        let c1 = Seq::Chld(1, Box::new(Seq::Zb));
        let e = NsEvidence {
            root: NsNode {
                index: NsIndex {
                    pos: Index::Root,
                    seq: zb.clone(),
                },
                extra: None,
                children: vec![NsNode {
                    index: NsIndex { pos: r(), seq: zb },
                    extra: None,
                    children: vec![NsNode {
                        index: NsIndex {
                            pos: r().left(),
                            seq: c1,
                        },
                        extra: Some(NsIndex {
                            pos: l(),
                            seq: Seq::Zb,
                        }),
                        children: vec![],
                    }],
                }],
            },
        };
        // The body of the [] at right(root) lives at (left(right(root)),
        // chld(1, zb)) and maps to left(right(root)).
        let cert = ns_to_lmf(&e, &goal).unwrap();
        let box_node = &cert.root.children[0];
        assert_eq!(box_node.index, r());
        assert_eq!(box_node.children[0].index, r().left());
        assert_eq!(box_node.children[0].extra, Some(l()));
    }

    #[test]
    fn ns_rejects_a_sequent_no_box_created() {
        let mut e = axiom_k_ns();
        let c2 = Seq::Chld(2, Box::new(Seq::Zb));
        let n4 = &mut e.root.children[0].children[0].children[0];
        n4.extra = Some(NsIndex {
            pos: rr(),
            seq: c2.clone(),
        });
        assert!(matches!(
            ns_to_lmf(&e, &axiom_k_example()),
            Err(AdapterError::SequentNeverCreated { seq, .. }) if seq == c2
        ));
    }

    #[test]
    fn ns_rejects_unmapped_occurrences() {
        let mut e = axiom_k_ns();
        // Point one closure's partner at an address never mapped.
        let n6 = &mut e.root.children[0].children[0].children[0].children[0].children[0];
        n6.children[0].extra = Some(NsIndex {
            pos: Index::Root.left().left().left().left(),
            seq: Seq::Zb,
        });
        assert!(matches!(
            ns_to_lmf(&e, &axiom_k_example()),
            Err(AdapterError::NsMap {
                source: IndexMapError::Missing(_),
                ..
            })
        ));
    }

    #[test]
    fn pt_translation_matches_ls_evidence_and_certifies() {
        let (cert, goal) = pt_to_lmf(&axiom_k_pt(), &axiom_k_example()).unwrap();
        assert_eq!(cert, axiom_k_lmf());
        assert_eq!(goal, tr(&axiom_k_example(), &WorldTerm::Const(WorldId(0))));
        let (fpc, st) = lmf_hooks(&cert);
        let t = check(&fpc, st, &goal, &KernelConfig::default()).unwrap();
        assert_eq!(t.decide_count(), 8);
    }

    #[test]
    fn pt_normalizes_closure_orientation() {
        // p ∧ ¬p refutes p ∨ ¬p: one tableau ∧ node, one closure listed
        // negative literal first.
        let goal = parse_formula("p | ~p").unwrap();
        let e = PtEvidence {
            root: LmfNode::new(
                Index::Root,
                None,
                vec![LmfNode::new(r(), Some(l()), vec![])],
            ),
        };
        let (cert, polarized) = pt_to_lmf(&e, &goal).unwrap();
        assert_eq!(cert.root.children[0].index, l());
        assert_eq!(cert.root.children[0].extra, Some(r()));
        let (fpc, st) = lmf_hooks(&cert);
        check(&fpc, st, &polarized, &KernelConfig::default()).unwrap();
    }

    #[test]
    fn pt_rejects_prefix_never_created() {
        // Drop the tableau-<> (goal []) node so the prefix is never made:
        // evidence where the first [] move references rr without its
        // creator on the branch.
        let goal = parse_formula("<>p | <>~p").unwrap();
        let e = PtEvidence {
            root: LmfNode::new(
                Index::Root,
                None,
                vec![LmfNode::new(
                    l(),
                    Some(r()),
                    vec![LmfNode::new(
                        dia_child(&l(), &r()),
                        Some(dia_child(&r(), &r())),
                        vec![],
                    )],
                )],
            ),
        };
        assert!(matches!(
            pt_to_lmf(&e, &goal),
            Err(AdapterError::PrefixNotCreated { .. })
        ));
    }

    #[test]
    fn pt_rejects_non_complementary_closure() {
        let goal = parse_formula("p | ~q").unwrap();
        let e = PtEvidence {
            root: LmfNode::new(
                Index::Root,
                None,
                vec![LmfNode::new(l(), Some(r()), vec![])],
            ),
        };
        assert!(matches!(
            pt_to_lmf(&e, &goal),
            Err(AdapterError::ClosureMismatch { .. })
        ));
    }

    #[test]
    fn pt_unclosed_branch_is_rejected_by_the_kernel() {
        // A tableau that stops after the ∧ expansion: structurally it is an
        // ∨ node wanting one child, so translation already refuses it.
        let goal = parse_formula("p | ~p").unwrap();
        let e = PtEvidence {
            root: LmfNode::new(Index::Root, None, vec![]),
        };
        assert!(matches!(
            pt_to_lmf(&e, &goal),
            Err(AdapterError::WrongArity { .. })
        ));
    }

    #[test]
    fn adapters_are_pure() {
        let goal = axiom_k_example();
        assert_eq!(
            os_to_star(&axiom_k_os(), &goal),
            os_to_star(&axiom_k_os(), &goal)
        );
        assert_eq!(
            ns_to_lmf(&axiom_k_ns(), &goal),
            ns_to_lmf(&axiom_k_ns(), &goal)
        );
        assert_eq!(
            pt_to_lmf(&axiom_k_pt(), &goal),
            pt_to_lmf(&axiom_k_pt(), &goal)
        );
    }

    #[test]
    fn translated_evidence_decides_follow_distinct_orders_but_all_certify() {
        // ns decides the <> at lr before the <> at l; ls does the reverse.
        let goal = axiom_k_example();
        let polarized = tr(&goal, &WorldTerm::Const(WorldId(0)));
        let ns_cert = ns_to_lmf(&axiom_k_ns(), &goal).unwrap();
        assert_ne!(ns_cert, axiom_k_lmf());
        for cert in [ns_cert, axiom_k_lmf()] {
            let (fpc, st) = lmf_hooks(&cert);
            assert!(check(&fpc, st, &polarized, &KernelConfig::default()).is_ok());
        }
    }

    #[test]
    fn corrupted_os_extras_fail_at_the_kernel() {
        // Drop one transported <> from the [] inference: translation still
        // succeeds (shape is fine) but its closure now has no complement.
        let mut e = axiom_k_os();
        e.root.children[0].children[0].extras = vec![l()];
        // The ~p closure's extra (diaind through lr) now dangles at
        // translation time.
        match os_to_star(&e, &axiom_k_example()) {
            Err(_) => {}
            Ok(star) => {
                let goal = tr(&axiom_k_example(), &WorldTerm::Const(WorldId(0)));
                let (fpc, st) = star_hooks(&star);
                assert_eq!(
                    check(&fpc, st, &goal, &KernelConfig::default()),
                    Err(CheckError::Rejected)
                );
            }
        }
    }
}
