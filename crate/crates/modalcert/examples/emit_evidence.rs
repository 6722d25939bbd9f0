//! Builds the running example's evidence in every source format and
//! prints it as an evidence file. The repository fixtures are generated
//! by redirecting this program's output.
//!
//! Usage: emit_evidence <lmf|lmfm|lmfstar|os|ns|pt|os-corrupt>
//!
//! The formula is `<>(p & ~q) | (<>~p | []q)` throughout. `os-corrupt` is
//! the os evidence with one transported `<>` dropped from the `[]`
//! inference, the reference example of evidence that parses cleanly but
//! cannot certify.

use modalcert::adapters::{NsEvidence, NsNode, OsEvidence, OsNode, PtEvidence};
use modalcert::evidence::{print_evidence, Evidence};
use modalcert::index::{dia_child, Index, NsIndex, Seq};
use modalcert::layers::{multifoc_to_star, LmfCert, LmfNode, LmfmCert, Node};

const FORMULA: &str = "<>(p & ~q) | (<>~p | []q)";

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

/// Eight decides: down the three stored disjuncts, the [], both <>s, the
/// conjunction in the new world, and the two closures.
fn lmf() -> LmfCert {
    LmfCert {
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

/// The same tree with groups; the two <> decides share group 4.
fn lmfm() -> LmfmCert {
    fn regroup(n: &LmfNode, groups: &mut std::vec::IntoIter<u32>) -> Node<u32> {
        let g = groups.next().expect("one group per node");
        Node {
            index: n.index.clone(),
            extra: n.extra.clone(),
            decor: g,
            children: n.children.iter().map(|c| regroup(c, groups)).collect(),
        }
    }
    let mut groups = vec![1, 2, 3, 4, 4, 5, 6, 7].into_iter();
    LmfmCert {
        root: regroup(&lmf().root, &mut groups),
    }
}

/// Present/future decorations over the grouped tree: everything before the
/// [] lives in the root world; the <> decides commit to the []'s world.
fn lmfstar() -> Evidence {
    let root_world = std::iter::once(Index::Root).collect();
    let box_world: std::collections::BTreeSet<Index> = std::iter::once(rr()).collect();
    let side = vec![
        (root_world, None),
        (std::iter::once(Index::Root).collect(), None),
        (std::iter::once(Index::Root).collect(), None),
        (box_world.clone(), Some(rr())),
        (box_world.clone(), Some(rr())),
        (box_world.clone(), None),
        (box_world.clone(), None),
        (box_world, None),
    ];
    Evidence::LmfStar(multifoc_to_star(&lmfm(), &side).expect("eight decorations"))
}

/// Six inferences: the [] transports both <> occurrences in its extras.
fn os() -> OsEvidence {
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

/// The os evidence with the second transported <> dropped: still a
/// well-formed file, but the ~p closure loses its complement.
fn os_corrupt() -> OsEvidence {
    let mut e = os();
    e.root.children[0].children[0].extras = vec![l()];
    e
}

/// Eight inferences over occurrence addresses: the [] creates sequent
/// chld(1, zb); both <> inferences move their bodies into it.
fn ns() -> NsEvidence {
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

/// The closed tableau for the negated formula, node for node: the indices
/// coincide with the lmf evidence because negation flips connectives in
/// place.
fn pt() -> PtEvidence {
    PtEvidence { root: lmf().root }
}

fn main() {
    let format = std::env::args().nth(1).unwrap_or_default();
    let evidence = match format.as_str() {
        "lmf" => Evidence::Lmf(lmf()),
        "lmfm" => Evidence::Lmfm(lmfm()),
        "lmfstar" => lmfstar(),
        "os" => Evidence::Os(os()),
        "os-corrupt" => Evidence::Os(os_corrupt()),
        "ns" => Evidence::Ns(ns()),
        "pt" => Evidence::Pt(pt()),
        other => {
            eprintln!("unknown format `{other}`; expected lmf|lmfm|lmfstar|os|ns|pt|os-corrupt");
            std::process::exit(2);
        }
    };
    print!("{}", print_evidence(FORMULA, &evidence));
}
