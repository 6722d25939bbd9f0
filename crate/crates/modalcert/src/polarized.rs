//! Polarized formulas and the two translations out of modal NNF.
//!
//! `polos` stays in the modal language and only inserts polarities and
//! delays; `tr` compiles modalities away into quantifiers over worlds and a
//! relational atom. Delays are not dedicated constructors: a positive delay
//! is literally `t+ &+ A` and a negative delay `f- |- A`, so the kernel
//! processes them with its ordinary unit rules and they show up in traces.

use crate::formula::ModalFormula;
use crate::kripke::WorldId;
use std::collections::BTreeSet;
use std::fmt;
use std::rc::Rc;

/// A world-denoting term: a bound variable or a world constant.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WorldTerm {
    Var(String),
    Const(WorldId),
}

impl fmt::Display for WorldTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WorldTerm::Var(n) => f.write_str(n),
            WorldTerm::Const(w) => write!(f, "{w}"),
        }
    }
}

/// Polarity of a literal or of a formula's main connective.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Polarity {
    Pos,
    Neg,
}

/// Polarized first-order formulas over the world language.
///
/// Propositional atoms are applied to one world term, the accessibility
/// atom to two. Atoms and `rel` are positive; their negations are negative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PolFormula {
    PAtom(String, WorldTerm),
    NAtom(String, WorldTerm),
    Rel(WorldTerm, WorldTerm),
    NRel(WorldTerm, WorldTerm),
    AndPos(Rc<PolFormula>, Rc<PolFormula>),
    AndNeg(Rc<PolFormula>, Rc<PolFormula>),
    OrPos(Rc<PolFormula>, Rc<PolFormula>),
    OrNeg(Rc<PolFormula>, Rc<PolFormula>),
    All(String, Rc<PolFormula>),
    Ex(String, Rc<PolFormula>),
    TruePos,
    FalseNeg,
}

/// Polarized modal formulas: the classical polarized connectives plus
/// `[]`/`<>`, no quantifiers and no relational atoms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PolModalFormula {
    PAtom(String),
    NAtom(String),
    AndPos(Box<PolModalFormula>, Box<PolModalFormula>),
    AndNeg(Box<PolModalFormula>, Box<PolModalFormula>),
    OrPos(Box<PolModalFormula>, Box<PolModalFormula>),
    OrNeg(Box<PolModalFormula>, Box<PolModalFormula>),
    Box_(Box<PolModalFormula>),
    Dia(Box<PolModalFormula>),
    TruePos,
    FalseNeg,
}

impl PolFormula {
    pub fn polarity(&self) -> Polarity {
        match self {
            PolFormula::PAtom(_, _)
            | PolFormula::Rel(_, _)
            | PolFormula::AndPos(_, _)
            | PolFormula::OrPos(_, _)
            | PolFormula::Ex(_, _)
            | PolFormula::TruePos => Polarity::Pos,
            PolFormula::NAtom(_, _)
            | PolFormula::NRel(_, _)
            | PolFormula::AndNeg(_, _)
            | PolFormula::OrNeg(_, _)
            | PolFormula::All(_, _)
            | PolFormula::FalseNeg => Polarity::Neg,
        }
    }

    pub fn is_literal(&self) -> bool {
        matches!(
            self,
            PolFormula::PAtom(_, _)
                | PolFormula::NAtom(_, _)
                | PolFormula::Rel(_, _)
                | PolFormula::NRel(_, _)
        )
    }

    /// `t+ &+ self`.
    pub fn delay_pos(self) -> PolFormula {
        PolFormula::AndPos(Rc::new(PolFormula::TruePos), Rc::new(self))
    }

    /// `f- |- self`.
    pub fn delay_neg(self) -> PolFormula {
        PolFormula::OrNeg(Rc::new(PolFormula::FalseNeg), Rc::new(self))
    }

    /// Identity on literals and positive formulas, `delay_pos` otherwise.
    pub fn delp(self) -> PolFormula {
        if self.is_literal() || self.polarity() == Polarity::Pos {
            self
        } else {
            self.delay_pos()
        }
    }

    /// De Morgan negation; an involution on the polarized language.
    pub fn negate(&self) -> PolFormula {
        match self {
            PolFormula::PAtom(n, x) => PolFormula::NAtom(n.clone(), x.clone()),
            PolFormula::NAtom(n, x) => PolFormula::PAtom(n.clone(), x.clone()),
            PolFormula::Rel(x, y) => PolFormula::NRel(x.clone(), y.clone()),
            PolFormula::NRel(x, y) => PolFormula::Rel(x.clone(), y.clone()),
            PolFormula::AndPos(l, r) => PolFormula::OrNeg(Rc::new(l.negate()), Rc::new(r.negate())),
            PolFormula::OrNeg(l, r) => PolFormula::AndPos(Rc::new(l.negate()), Rc::new(r.negate())),
            PolFormula::AndNeg(l, r) => PolFormula::OrPos(Rc::new(l.negate()), Rc::new(r.negate())),
            PolFormula::OrPos(l, r) => PolFormula::AndNeg(Rc::new(l.negate()), Rc::new(r.negate())),
            PolFormula::All(y, b) => PolFormula::Ex(y.clone(), Rc::new(b.negate())),
            PolFormula::Ex(y, b) => PolFormula::All(y.clone(), Rc::new(b.negate())),
            PolFormula::TruePos => PolFormula::FalseNeg,
            PolFormula::FalseNeg => PolFormula::TruePos,
        }
    }

    /// Replaces free occurrences of the variable `name` by `t`.
    pub fn subst(&self, name: &str, t: &WorldTerm) -> PolFormula {
        let go = |w: &WorldTerm| -> WorldTerm {
            match w {
                WorldTerm::Var(n) if n == name => t.clone(),
                other => other.clone(),
            }
        };
        match self {
            PolFormula::PAtom(n, x) => PolFormula::PAtom(n.clone(), go(x)),
            PolFormula::NAtom(n, x) => PolFormula::NAtom(n.clone(), go(x)),
            PolFormula::Rel(x, y) => PolFormula::Rel(go(x), go(y)),
            PolFormula::NRel(x, y) => PolFormula::NRel(go(x), go(y)),
            PolFormula::AndPos(l, r) => {
                PolFormula::AndPos(Rc::new(l.subst(name, t)), Rc::new(r.subst(name, t)))
            }
            PolFormula::AndNeg(l, r) => {
                PolFormula::AndNeg(Rc::new(l.subst(name, t)), Rc::new(r.subst(name, t)))
            }
            PolFormula::OrPos(l, r) => {
                PolFormula::OrPos(Rc::new(l.subst(name, t)), Rc::new(r.subst(name, t)))
            }
            PolFormula::OrNeg(l, r) => {
                PolFormula::OrNeg(Rc::new(l.subst(name, t)), Rc::new(r.subst(name, t)))
            }
            PolFormula::All(y, b) if y != name => {
                PolFormula::All(y.clone(), Rc::new(b.subst(name, t)))
            }
            PolFormula::Ex(y, b) if y != name => {
                PolFormula::Ex(y.clone(), Rc::new(b.subst(name, t)))
            }
            shadowed => shadowed.clone(),
        }
    }

    /// World constants occurring in the formula.
    pub fn world_consts(&self) -> BTreeSet<WorldId> {
        fn term(w: &WorldTerm, out: &mut BTreeSet<WorldId>) {
            if let WorldTerm::Const(id) = w {
                out.insert(*id);
            }
        }
        fn walk(f: &PolFormula, out: &mut BTreeSet<WorldId>) {
            match f {
                PolFormula::PAtom(_, x) | PolFormula::NAtom(_, x) => term(x, out),
                PolFormula::Rel(x, y) | PolFormula::NRel(x, y) => {
                    term(x, out);
                    term(y, out);
                }
                PolFormula::AndPos(l, r)
                | PolFormula::AndNeg(l, r)
                | PolFormula::OrPos(l, r)
                | PolFormula::OrNeg(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
                PolFormula::All(_, b) | PolFormula::Ex(_, b) => walk(b, out),
                PolFormula::TruePos | PolFormula::FalseNeg => {}
            }
        }
        let mut out = BTreeSet::new();
        walk(self, &mut out);
        out
    }
}

impl PolModalFormula {
    pub fn polarity(&self) -> Polarity {
        match self {
            PolModalFormula::PAtom(_)
            | PolModalFormula::AndPos(_, _)
            | PolModalFormula::OrPos(_, _)
            | PolModalFormula::Dia(_)
            | PolModalFormula::TruePos => Polarity::Pos,
            PolModalFormula::NAtom(_)
            | PolModalFormula::AndNeg(_, _)
            | PolModalFormula::OrNeg(_, _)
            | PolModalFormula::Box_(_)
            | PolModalFormula::FalseNeg => Polarity::Neg,
        }
    }

    pub fn is_literal(&self) -> bool {
        matches!(self, PolModalFormula::PAtom(_) | PolModalFormula::NAtom(_))
    }

    /// `t+ &+ self`.
    pub fn delay_pos(self) -> PolModalFormula {
        PolModalFormula::AndPos(Box::new(PolModalFormula::TruePos), Box::new(self))
    }

    /// `f- |- self`.
    pub fn delay_neg(self) -> PolModalFormula {
        PolModalFormula::OrNeg(Box::new(PolModalFormula::FalseNeg), Box::new(self))
    }

    /// Identity on literals and positive formulas, `delay_pos` otherwise.
    pub fn delp(self) -> PolModalFormula {
        if self.is_literal() || self.polarity() == Polarity::Pos {
            self
        } else {
            self.delay_pos()
        }
    }
}

/// Polarizes a modal NNF formula in place: `&`/`|` become their negative
/// versions with delayed children, `<>` bodies get an extra negative delay
/// so that every modality flips phase exactly once.
pub fn polos(a: &ModalFormula) -> PolModalFormula {
    match a {
        ModalFormula::Atom(n) => PolModalFormula::PAtom(n.clone()),
        ModalFormula::NAtom(n) => PolModalFormula::NAtom(n.clone()),
        ModalFormula::And(l, r) => {
            PolModalFormula::AndNeg(Box::new(polos(l).delp()), Box::new(polos(r).delp()))
        }
        ModalFormula::Or(l, r) => {
            PolModalFormula::OrNeg(Box::new(polos(l).delp()), Box::new(polos(r).delp()))
        }
        ModalFormula::Box_(b) => PolModalFormula::Box_(Box::new(polos(b).delp())),
        ModalFormula::Dia(b) => PolModalFormula::Dia(Box::new(polos(b).delp().delay_neg())),
    }
}

/// Inverse of the delay/polarity decoration: strips `t+ &+ _` and `f- |- _`
/// wrappers and forgets polarities. Returns `None` if a polarity unit occurs
/// outside a delay pattern (no modal NNF formula maps to it).
pub fn erase_delays(a: &PolModalFormula) -> Option<ModalFormula> {
    match a {
        PolModalFormula::PAtom(n) => Some(ModalFormula::Atom(n.clone())),
        PolModalFormula::NAtom(n) => Some(ModalFormula::NAtom(n.clone())),
        PolModalFormula::AndPos(l, r) if **l == PolModalFormula::TruePos => erase_delays(r),
        PolModalFormula::OrNeg(l, r) if **l == PolModalFormula::FalseNeg => erase_delays(r),
        PolModalFormula::AndPos(l, r) | PolModalFormula::AndNeg(l, r) => {
            Some(ModalFormula::and(erase_delays(l)?, erase_delays(r)?))
        }
        PolModalFormula::OrPos(l, r) | PolModalFormula::OrNeg(l, r) => {
            Some(ModalFormula::or(erase_delays(l)?, erase_delays(r)?))
        }
        PolModalFormula::Box_(b) => Some(ModalFormula::boxed(erase_delays(b)?)),
        PolModalFormula::Dia(b) => Some(ModalFormula::dia(erase_delays(b)?)),
        PolModalFormula::TruePos | PolModalFormula::FalseNeg => None,
    }
}

/// Compiles a modal NNF formula into a polarized first-order formula over
/// the world language, rooted at the world term `x`. Each modality becomes
/// one quantifier with a fresh bound name `y0, y1, ...` (numbered in
/// translation order, so results are reproducible).
pub fn tr(a: &ModalFormula, x: &WorldTerm) -> PolFormula {
    let mut counter = 0usize;
    tr_in(a, x, &mut counter)
}

fn tr_in(a: &ModalFormula, x: &WorldTerm, counter: &mut usize) -> PolFormula {
    match a {
        ModalFormula::Atom(n) => PolFormula::PAtom(n.clone(), x.clone()),
        ModalFormula::NAtom(n) => PolFormula::NAtom(n.clone(), x.clone()),
        ModalFormula::And(l, r) => {
            let lt = tr_in(l, x, counter).delp();
            let rt = tr_in(r, x, counter).delp();
            PolFormula::AndNeg(Rc::new(lt), Rc::new(rt))
        }
        ModalFormula::Or(l, r) => {
            let lt = tr_in(l, x, counter).delp();
            let rt = tr_in(r, x, counter).delp();
            PolFormula::OrNeg(Rc::new(lt), Rc::new(rt))
        }
        ModalFormula::Box_(b) => {
            let y = fresh_name(counter);
            let yt = WorldTerm::Var(y.clone());
            let body = tr_in(b, &yt, counter).delp();
            PolFormula::All(
                y,
                Rc::new(PolFormula::OrNeg(
                    Rc::new(PolFormula::NRel(x.clone(), yt)),
                    Rc::new(body),
                )),
            )
        }
        ModalFormula::Dia(b) => {
            let y = fresh_name(counter);
            let yt = WorldTerm::Var(y.clone());
            let body = tr_in(b, &yt, counter).delp().delay_neg();
            PolFormula::Ex(
                y,
                Rc::new(PolFormula::AndPos(
                    Rc::new(PolFormula::Rel(x.clone(), yt)),
                    Rc::new(body),
                )),
            )
        }
    }
}

fn fresh_name(counter: &mut usize) -> String {
    let n = *counter;
    *counter += 1;
    format!("y{n}")
}

// ---------------------------------------------------------------------------
// Printing (diagnostics and the cut trace line)
// ---------------------------------------------------------------------------

impl fmt::Display for PolFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolFormula::PAtom(n, x) => write!(f, "{n}({x})"),
            PolFormula::NAtom(n, x) => write!(f, "~{n}({x})"),
            PolFormula::Rel(x, y) => write!(f, "r({x},{y})"),
            PolFormula::NRel(x, y) => write!(f, "~r({x},{y})"),
            PolFormula::AndPos(l, r) => write!(f, "({l} &+ {r})"),
            PolFormula::AndNeg(l, r) => write!(f, "({l} &- {r})"),
            PolFormula::OrPos(l, r) => write!(f, "({l} |+ {r})"),
            PolFormula::OrNeg(l, r) => write!(f, "({l} |- {r})"),
            PolFormula::All(y, b) => write!(f, "all {y} {b}"),
            PolFormula::Ex(y, b) => write!(f, "ex {y} {b}"),
            PolFormula::TruePos => f.write_str("t+"),
            PolFormula::FalseNeg => f.write_str("f-"),
        }
    }
}

impl fmt::Display for PolModalFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolModalFormula::PAtom(n) => f.write_str(n),
            PolModalFormula::NAtom(n) => write!(f, "~{n}"),
            PolModalFormula::AndPos(l, r) => write!(f, "({l} &+ {r})"),
            PolModalFormula::AndNeg(l, r) => write!(f, "({l} &- {r})"),
            PolModalFormula::OrPos(l, r) => write!(f, "({l} |+ {r})"),
            PolModalFormula::OrNeg(l, r) => write!(f, "({l} |- {r})"),
            PolModalFormula::Box_(b) => write!(f, "[]{b}"),
            PolModalFormula::Dia(b) => write!(f, "<>{b}"),
            PolModalFormula::TruePos => f.write_str("t+"),
            PolModalFormula::FalseNeg => f.write_str("f-"),
        }
    }
}
