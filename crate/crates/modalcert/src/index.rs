//! Subformula indices: names for formula occurrences that stay stable
//! across all five proof formalisms.
//!
//! An index is a path into the goal formula (`left`/`right` at connectives,
//! `left` under `[]`) except for two special forms: `diaind(i, j)` names the
//! body of the `<>` at `i` placed in the world created by the `[]` at `j`,
//! and `relidx` is the one shared shelf for stored negated accessibility
//! atoms (the kernel disambiguates those by literal content).

use crate::formula::ModalFormula;
use std::fmt;
use std::rc::Rc;

/// A subformula occurrence name.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Index {
    Root,
    Left(Rc<Index>),
    Right(Rc<Index>),
    /// Body of the `<>` at the first index, under the `[]` at the second.
    DiaInd(Rc<Index>, Rc<Index>),
    /// Shared index of all stored negated relational atoms.
    Rel,
}

impl Index {
    pub fn left(self) -> Index {
        Index::Left(Rc::new(self))
    }

    pub fn right(self) -> Index {
        Index::Right(Rc::new(self))
    }
}

/// `left(i)`/`right(i)` children for a connective occurrence at `i`:
/// two for `&`/`|`, one for `[]`.
pub fn child_indices(i: &Index, shape: ConnectiveKind) -> Vec<Index> {
    match shape {
        ConnectiveKind::And | ConnectiveKind::Or => {
            vec![i.clone().left(), i.clone().right()]
        }
        ConnectiveKind::Box => vec![i.clone().left()],
    }
}

/// Connective kinds that own `left`/`right` child indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConnectiveKind {
    And,
    Or,
    Box,
}

/// The index of the `<>`-body at `i` realized in the world of the `[]` at `j`.
pub fn dia_child(i: &Index, j: &Index) -> Index {
    Index::DiaInd(Rc::new(i.clone()), Rc::new(j.clone()))
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Root => f.write_str("root"),
            Index::Left(i) => write!(f, "left({i})"),
            Index::Right(i) => write!(f, "right({i})"),
            Index::DiaInd(i, j) => write!(f, "diaind({i},{j})"),
            Index::Rel => f.write_str("relidx"),
        }
    }
}

/// Error produced when index text does not parse.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("index syntax error at column {col}: {msg}")]
pub struct IndexParseError {
    pub col: usize,
    pub msg: String,
}

/// Indices are paths into the goal, so legitimate ones never nest anywhere
/// near this deep. The cap keeps the parser, and every walk over what it
/// built, within bounded stack; it is sized so even reaching it stays well
/// inside the default stack of an unoptimized build.
const MAX_NESTING: usize = 4_096;

struct IdxParser<'a> {
    src: &'a [u8],
    pos: usize,
    depth: usize,
}

impl<'a> IdxParser<'a> {
    fn err(&self, msg: impl Into<String>) -> IndexParseError {
        IndexParseError {
            col: self.pos + 1,
            msg: msg.into(),
        }
    }

    fn descend<T>(
        &mut self,
        f: impl FnOnce(&mut Self) -> Result<T, IndexParseError>,
    ) -> Result<T, IndexParseError> {
        if self.depth == MAX_NESTING {
            return Err(self.err(format!("nesting deeper than {MAX_NESTING} levels")));
        }
        self.depth += 1;
        let out = f(self);
        self.depth -= 1;
        out
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn word(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn expect(&mut self, c: u8) -> Result<(), IndexParseError> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", c as char)))
        }
    }

    fn index(&mut self) -> Result<Index, IndexParseError> {
        self.descend(|p| {
            let w = p.word();
            match w.as_str() {
                "root" => Ok(Index::Root),
                "relidx" => Ok(Index::Rel),
                "left" => {
                    p.expect(b'(')?;
                    let i = p.index()?;
                    p.expect(b')')?;
                    Ok(Index::Left(Rc::new(i)))
                }
                "right" => {
                    p.expect(b'(')?;
                    let i = p.index()?;
                    p.expect(b')')?;
                    Ok(Index::Right(Rc::new(i)))
                }
                "diaind" => {
                    p.expect(b'(')?;
                    let i = p.index()?;
                    p.expect(b',')?;
                    let j = p.index()?;
                    p.expect(b')')?;
                    Ok(Index::DiaInd(Rc::new(i), Rc::new(j)))
                }
                "" => Err(p.err("expected an index")),
                other => Err(p.err(format!("unknown index head `{other}`"))),
            }
        })
    }
}

/// Parses the textual index syntax: `root`, `left(I)`, `right(I)`,
/// `diaind(I,J)`, `relidx`. Whitespace between tokens is ignored.
pub fn parse_index(src: &str) -> Result<Index, IndexParseError> {
    let mut p = IdxParser {
        src: src.as_bytes(),
        pos: 0,
        depth: 0,
    };
    let i = p.index()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input after index"));
    }
    Ok(i)
}

// ---------------------------------------------------------------------------
// Resolution against a goal formula
// ---------------------------------------------------------------------------

/// Failure to interpret an index against a concrete goal formula.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ResolveError {
    #[error("index {index} does not name a subformula of the goal")]
    Dangling { index: Index },
    #[error("index {index} must name a [] occurrence")]
    NotABox { index: Index },
    #[error("relidx does not name a goal subformula")]
    RelNotAFormula,
}

/// Walks the goal along `i` and returns the named subformula occurrence.
/// `diaind(i, j)` resolves to the `<>`-body at `i` and checks that `j`
/// names a `[]` occurrence.
pub fn resolve_index<'a>(
    goal: &'a ModalFormula,
    i: &Index,
) -> Result<&'a ModalFormula, ResolveError> {
    match i {
        Index::Root => Ok(goal),
        Index::Rel => Err(ResolveError::RelNotAFormula),
        Index::Left(parent) => match resolve_index(goal, parent)? {
            ModalFormula::And(l, _) | ModalFormula::Or(l, _) => Ok(l),
            ModalFormula::Box_(b) => Ok(b),
            _ => Err(ResolveError::Dangling { index: i.clone() }),
        },
        Index::Right(parent) => match resolve_index(goal, parent)? {
            ModalFormula::And(_, r) | ModalFormula::Or(_, r) => Ok(r),
            _ => Err(ResolveError::Dangling { index: i.clone() }),
        },
        Index::DiaInd(parent, j) => {
            if !matches!(resolve_index(goal, j)?, ModalFormula::Box_(_)) {
                return Err(ResolveError::NotABox {
                    index: (**j).clone(),
                });
            }
            match resolve_index(goal, parent)? {
                ModalFormula::Dia(b) => Ok(b),
                _ => Err(ResolveError::Dangling { index: i.clone() }),
            }
        }
    }
}

/// Names the world in which the occurrence at `i` lives: `root` for the
/// root world, otherwise the index of the `[]`/`diaind` target that created
/// the world. Used to synthesize present-sets.
pub fn world_of(goal: &ModalFormula, i: &Index) -> Result<Index, ResolveError> {
    match i {
        Index::Root => Ok(Index::Root),
        Index::Rel => Err(ResolveError::RelNotAFormula),
        Index::Left(parent) => {
            if matches!(resolve_index(goal, parent)?, ModalFormula::Box_(_)) {
                Ok((**parent).clone())
            } else {
                world_of(goal, parent)
            }
        }
        Index::Right(parent) => world_of(goal, parent),
        Index::DiaInd(_, j) => Ok((**j).clone()),
    }
}

// ---------------------------------------------------------------------------
// Nested-sequent indices
// ---------------------------------------------------------------------------

/// A sequent position inside a nested sequent: the root sequent `zb`, or
/// the `i`-th boxed child (1-based) of a parent sequent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Seq {
    Zb,
    Chld(u32, Box<Seq>),
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Seq::Zb => f.write_str("zb"),
            Seq::Chld(i, parent) => write!(f, "chld({i}, {parent})"),
        }
    }
}

/// A formula occurrence inside a nested sequent: its path index plus the
/// sequent it sits in.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NsIndex {
    pub pos: Index,
    pub seq: Seq,
}

impl fmt::Display for NsIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.pos, self.seq)
    }
}

/// Parses sequent-position syntax: `zb` or `chld(N, S)`.
pub fn parse_seq(src: &str) -> Result<Seq, IndexParseError> {
    let mut p = IdxParser {
        src: src.as_bytes(),
        pos: 0,
        depth: 0,
    };
    let s = seq_in(&mut p)?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input after sequent position"));
    }
    Ok(s)
}

fn seq_in(p: &mut IdxParser) -> Result<Seq, IndexParseError> {
    p.descend(|p| {
        let w = p.word();
        match w.as_str() {
            "zb" => Ok(Seq::Zb),
            "chld" => {
                p.expect(b'(')?;
                let n = p.word();
                let i: u32 = n
                    .parse()
                    .map_err(|_| p.err("expected a positive child position"))?;
                if i == 0 {
                    return Err(p.err("child positions start at 1"));
                }
                p.expect(b',')?;
                let parent = seq_in(p)?;
                p.expect(b')')?;
                Ok(Seq::Chld(i, Box::new(parent)))
            }
            "" => Err(p.err("expected a sequent position")),
            other => Err(p.err(format!("unknown sequent position head `{other}`"))),
        }
    })
}

/// A bijection between nested-sequent occurrences and plain indices,
/// grown one pair at a time.
#[derive(Clone, Debug, Default)]
pub struct IndexMap {
    forward: std::collections::BTreeMap<NsIndex, Index>,
    backward: std::collections::BTreeMap<Index, NsIndex>,
}

/// Violation of the `IndexMap` bijection or a missing key.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IndexMapError {
    #[error("nested index {0} is not mapped")]
    Missing(NsIndex),
    #[error("nested index {0} is already mapped")]
    DuplicateKey(NsIndex),
    #[error("index {0} is already the image of another nested index")]
    DuplicateValue(Index),
}

impl IndexMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn map_lookup(&self, n: &NsIndex) -> Result<&Index, IndexMapError> {
        self.forward
            .get(n)
            .ok_or_else(|| IndexMapError::Missing(n.clone()))
    }

    pub fn map_extend(&mut self, n: NsIndex, i: Index) -> Result<(), IndexMapError> {
        if self.forward.contains_key(&n) {
            return Err(IndexMapError::DuplicateKey(n));
        }
        if self.backward.contains_key(&i) {
            return Err(IndexMapError::DuplicateValue(i));
        }
        self.forward.insert(n.clone(), i.clone());
        self.backward.insert(i, n);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::axiom_k_example;

    #[test]
    fn child_indices_of_connectives() {
        assert_eq!(
            child_indices(&Index::Root, ConnectiveKind::Or),
            vec![Index::Root.left(), Index::Root.right()]
        );
        assert_eq!(
            child_indices(&Index::Root.right(), ConnectiveKind::Or),
            vec![Index::Root.right().left(), Index::Root.right().right()]
        );
        assert_eq!(
            child_indices(&Index::Root, ConnectiveKind::Box),
            vec![Index::Root.left()]
        );
    }

    #[test]
    fn dia_child_builds_diaind() {
        let i = Index::Root.left();
        let j = Index::Root.right().right();
        let d = dia_child(&i, &j);
        assert_eq!(d.to_string(), "diaind(left(root),right(right(root)))");
        assert_eq!(
            child_indices(&d, ConnectiveKind::And),
            vec![d.clone().left(), d.right()]
        );
    }

    #[test]
    fn display_and_parse_round_trip() {
        let samples = [
            Index::Root,
            Index::Rel,
            Index::Root.left(),
            Index::Root.right().right(),
            dia_child(&Index::Root.left(), &Index::Root.right().right()),
            dia_child(&dia_child(&Index::Root, &Index::Root.left()), &Index::Rel),
        ];
        for i in samples {
            assert_eq!(parse_index(&i.to_string()).unwrap(), i);
        }
    }

    #[test]
    fn parse_is_whitespace_lenient() {
        assert_eq!(
            parse_index(" diaind( left(root) , right( right(root) ) ) ").unwrap(),
            dia_child(&Index::Root.left(), &Index::Root.right().right())
        );
    }

    #[test]
    fn parse_rejects_malformed_indices() {
        assert!(parse_index("").is_err());
        assert!(parse_index("middle(root)").is_err());
        assert!(parse_index("left(root").is_err());
        assert!(parse_index("diaind(root)").is_err());
        assert!(parse_index("root extra").is_err());
    }

    #[test]
    fn parse_caps_nesting() {
        // Reaching the cap costs one parser frame per level, more than a
        // default test thread holds in unoptimized builds, so this runs the
        // way the binary does: on a thread with room to hit the limit.
        std::thread::Builder::new()
            .stack_size(32 * 1024 * 1024)
            .spawn(|| {
                let deep = format!(
                    "{}root{}",
                    "left(".repeat(2 * MAX_NESTING),
                    ")".repeat(2 * MAX_NESTING)
                );
                let err = parse_index(&deep).unwrap_err();
                assert!(err.msg.contains("nesting"), "{err}");

                let modest = format!("{}root{}", "left(".repeat(500), ")".repeat(500));
                assert!(parse_index(&modest).is_ok());

                let deep_seq = format!(
                    "{}zb{}",
                    "chld(1, ".repeat(2 * MAX_NESTING),
                    ")".repeat(2 * MAX_NESTING)
                );
                assert!(parse_seq(&deep_seq).is_err());
            })
            .unwrap()
            .join()
            .unwrap();
    }

    #[test]
    fn resolve_walks_the_running_example() {
        let goal = axiom_k_example();
        // left(root) is <>(p & ~q)
        assert_eq!(
            resolve_index(&goal, &Index::Root.left()).unwrap(),
            &ModalFormula::dia(ModalFormula::and(
                ModalFormula::atom("p"),
                ModalFormula::natom("q")
            ))
        );
        // right(right(root)) is []q
        let rr = Index::Root.right().right();
        assert_eq!(
            resolve_index(&goal, &rr).unwrap(),
            &ModalFormula::boxed(ModalFormula::atom("q"))
        );
        // the <>-body placed under that box
        let d = dia_child(&Index::Root.left(), &rr);
        assert_eq!(
            resolve_index(&goal, &d).unwrap(),
            &ModalFormula::and(ModalFormula::atom("p"), ModalFormula::natom("q"))
        );
        // left under [] reaches the box body
        assert_eq!(
            resolve_index(&goal, &rr.left()).unwrap(),
            &ModalFormula::atom("q")
        );
    }

    #[test]
    fn resolve_rejects_dangling_and_mistyped_indices() {
        let goal = axiom_k_example();
        // left(left(root)) would step inside a <> without a diaind
        assert!(matches!(
            resolve_index(&goal, &Index::Root.left().left()),
            Err(ResolveError::Dangling { .. })
        ));
        // diaind whose j names a <> instead of a []
        let bad = dia_child(&Index::Root.left(), &Index::Root.right().left());
        assert!(matches!(
            resolve_index(&goal, &bad),
            Err(ResolveError::NotABox { .. })
        ));
        assert!(resolve_index(&goal, &Index::Rel).is_err());
    }

    #[test]
    fn world_of_tracks_box_crossings() {
        let goal = axiom_k_example();
        let rr = Index::Root.right().right();
        assert_eq!(world_of(&goal, &Index::Root).unwrap(), Index::Root);
        assert_eq!(world_of(&goal, &Index::Root.left()).unwrap(), Index::Root);
        // inside []q
        assert_eq!(world_of(&goal, &rr.clone().left()).unwrap(), rr);
        // the <>-body lives in the world of its diaind target
        let d = dia_child(&Index::Root.left(), &rr);
        assert_eq!(world_of(&goal, &d).unwrap(), rr);
        assert_eq!(world_of(&goal, &d.left()).unwrap(), rr);
    }

    #[test]
    fn seq_display_and_parse() {
        let s = Seq::Chld(1, Box::new(Seq::Zb));
        assert_eq!(s.to_string(), "chld(1, zb)");
        assert_eq!(parse_seq("chld(1, zb)").unwrap(), s);
        assert_eq!(
            parse_seq("chld(2,chld(1,zb))").unwrap().to_string(),
            "chld(2, chld(1, zb))"
        );
        assert!(parse_seq("chld(0, zb)").is_err());
        assert!(parse_seq("zb zb").is_err());
    }

    #[test]
    fn index_map_enforces_the_bijection() {
        let mut m = IndexMap::new();
        let n = NsIndex {
            pos: Index::Root,
            seq: Seq::Zb,
        };
        m.map_extend(n.clone(), Index::Root).unwrap();
        assert_eq!(m.map_lookup(&n).unwrap(), &Index::Root);

        let n2 = NsIndex {
            pos: Index::Root.left(),
            seq: Seq::Zb,
        };
        assert_eq!(
            m.map_extend(n.clone(), Index::Root.left()),
            Err(IndexMapError::DuplicateKey(n))
        );
        assert_eq!(
            m.map_extend(n2.clone(), Index::Root),
            Err(IndexMapError::DuplicateValue(Index::Root))
        );
        assert!(matches!(m.map_lookup(&n2), Err(IndexMapError::Missing(_))));
    }
}
