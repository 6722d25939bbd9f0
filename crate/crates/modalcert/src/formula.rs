//! Modal formulas in negation normal form.
//!
//! The surface grammar has no implication and no compound negation: `~` is
//! part of a literal. Everything downstream (translations, the kernel, the
//! semantic oracle) assumes NNF, so the datatype makes any other shape
//! unrepresentable.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// A modal formula over atoms, in negation normal form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModalFormula {
    Atom(String),
    NAtom(String),
    And(Box<ModalFormula>, Box<ModalFormula>),
    Or(Box<ModalFormula>, Box<ModalFormula>),
    Box_(Box<ModalFormula>),
    Dia(Box<ModalFormula>),
}

impl ModalFormula {
    pub fn atom(name: &str) -> Self {
        ModalFormula::Atom(name.to_string())
    }

    pub fn natom(name: &str) -> Self {
        ModalFormula::NAtom(name.to_string())
    }

    pub fn and(l: ModalFormula, r: ModalFormula) -> Self {
        ModalFormula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: ModalFormula, r: ModalFormula) -> Self {
        ModalFormula::Or(Box::new(l), Box::new(r))
    }

    pub fn boxed(body: ModalFormula) -> Self {
        ModalFormula::Box_(Box::new(body))
    }

    pub fn dia(body: ModalFormula) -> Self {
        ModalFormula::Dia(Box::new(body))
    }

    /// Maximum nesting depth of modal operators.
    pub fn modal_depth(&self) -> usize {
        match self {
            ModalFormula::Atom(_) | ModalFormula::NAtom(_) => 0,
            ModalFormula::And(l, r) | ModalFormula::Or(l, r) => {
                l.modal_depth().max(r.modal_depth())
            }
            ModalFormula::Box_(b) | ModalFormula::Dia(b) => 1 + b.modal_depth(),
        }
    }

    /// Number of `<>` subformula occurrences.
    pub fn dia_count(&self) -> usize {
        match self {
            ModalFormula::Atom(_) | ModalFormula::NAtom(_) => 0,
            ModalFormula::And(l, r) | ModalFormula::Or(l, r) => l.dia_count() + r.dia_count(),
            ModalFormula::Box_(b) => b.dia_count(),
            ModalFormula::Dia(b) => 1 + b.dia_count(),
        }
    }

    /// Number of connective occurrences (`&`, `|`, `[]`, `<>`).
    /// Literals count as zero; `~` is part of the literal.
    pub fn connective_count(&self) -> usize {
        match self {
            ModalFormula::Atom(_) | ModalFormula::NAtom(_) => 0,
            ModalFormula::And(l, r) | ModalFormula::Or(l, r) => {
                1 + l.connective_count() + r.connective_count()
            }
            ModalFormula::Box_(b) | ModalFormula::Dia(b) => 1 + b.connective_count(),
        }
    }

    /// Atom names occurring in the formula.
    pub fn atoms(&self) -> BTreeSet<String> {
        fn walk(a: &ModalFormula, out: &mut BTreeSet<String>) {
            match a {
                ModalFormula::Atom(n) | ModalFormula::NAtom(n) => {
                    out.insert(n.clone());
                }
                ModalFormula::And(l, r) | ModalFormula::Or(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
                ModalFormula::Box_(b) | ModalFormula::Dia(b) => walk(b, out),
            }
        }
        let mut out = BTreeSet::new();
        walk(self, &mut out);
        out
    }
}

/// De Morgan dual: atoms flip sign, `&`/`|` swap, `[]`/`<>` swap.
/// Total on NNF and an involution.
pub fn negate_nnf(a: &ModalFormula) -> ModalFormula {
    match a {
        ModalFormula::Atom(n) => ModalFormula::NAtom(n.clone()),
        ModalFormula::NAtom(n) => ModalFormula::Atom(n.clone()),
        ModalFormula::And(l, r) => ModalFormula::or(negate_nnf(l), negate_nnf(r)),
        ModalFormula::Or(l, r) => ModalFormula::and(negate_nnf(l), negate_nnf(r)),
        ModalFormula::Box_(b) => ModalFormula::dia(negate_nnf(b)),
        ModalFormula::Dia(b) => ModalFormula::boxed(negate_nnf(b)),
    }
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

// Precedence levels: `|` lowest, then `&`, then the prefix operators.
fn fmt_prec(a: &ModalFormula, prec: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let own = match a {
        ModalFormula::Or(_, _) => 1,
        ModalFormula::And(_, _) => 2,
        _ => 3,
    };
    let parens = own < prec;
    if parens {
        f.write_str("(")?;
    }
    match a {
        ModalFormula::Atom(n) => f.write_str(n)?,
        ModalFormula::NAtom(n) => write!(f, "~{n}")?,
        // Right-associative: the left operand needs the next tighter level,
        // the right operand reuses the operator's own level.
        ModalFormula::Or(l, r) => {
            fmt_prec(l, 2, f)?;
            f.write_str(" | ")?;
            fmt_prec(r, 1, f)?;
        }
        ModalFormula::And(l, r) => {
            fmt_prec(l, 3, f)?;
            f.write_str(" & ")?;
            fmt_prec(r, 2, f)?;
        }
        ModalFormula::Box_(b) => {
            f.write_str("[]")?;
            fmt_prec(b, 3, f)?;
        }
        ModalFormula::Dia(b) => {
            f.write_str("<>")?;
            fmt_prec(b, 3, f)?;
        }
    }
    if parens {
        f.write_str(")")?;
    }
    Ok(())
}

impl fmt::Display for ModalFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_prec(self, 1, f)
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// Error produced when formula text does not parse.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("formula syntax error at column {col}: {msg}")]
pub struct FormulaParseError {
    pub col: usize,
    pub msg: String,
}

/// The parser recurses once per nesting level, and so does everything that
/// later walks the tree, so depth is capped here at the boundary. Real
/// formulas sit orders of magnitude below this.
const MAX_NESTING: usize = 2_048;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src: src.as_bytes(),
            pos: 0,
            depth: 0,
        }
    }

    fn descend<T>(
        &mut self,
        f: impl FnOnce(&mut Self) -> Result<T, FormulaParseError>,
    ) -> Result<T, FormulaParseError> {
        if self.depth == MAX_NESTING {
            return Err(self.err(format!("nesting deeper than {MAX_NESTING} levels")));
        }
        self.depth += 1;
        let out = f(self);
        self.depth -= 1;
        out
    }

    fn err(&self, msg: impl Into<String>) -> FormulaParseError {
        FormulaParseError {
            col: self.pos + 1,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<String, FormulaParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_lowercase()
                || (self.pos > start
                    && (self.src[self.pos].is_ascii_digit() || self.src[self.pos] == b'_')))
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an atom (lowercase identifier)"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .to_string())
    }

    // disjunction := conjunction ('|' disjunction)?
    fn disjunction(&mut self) -> Result<ModalFormula, FormulaParseError> {
        self.descend(|p| {
            let l = p.conjunction()?;
            if p.peek() == Some(b'|') {
                p.pos += 1;
                let r = p.disjunction()?;
                Ok(ModalFormula::or(l, r))
            } else {
                Ok(l)
            }
        })
    }

    // conjunction := prefixed ('&' conjunction)?
    fn conjunction(&mut self) -> Result<ModalFormula, FormulaParseError> {
        self.descend(|p| {
            let l = p.prefixed()?;
            if p.peek() == Some(b'&') {
                p.pos += 1;
                let r = p.conjunction()?;
                Ok(ModalFormula::and(l, r))
            } else {
                Ok(l)
            }
        })
    }

    fn prefixed(&mut self) -> Result<ModalFormula, FormulaParseError> {
        self.descend(|p| match p.peek() {
            Some(b'[') => {
                if !p.eat("[]") {
                    return Err(p.err("expected `[]`"));
                }
                Ok(ModalFormula::boxed(p.prefixed()?))
            }
            Some(b'<') => {
                if !p.eat("<>") {
                    return Err(p.err("expected `<>`"));
                }
                Ok(ModalFormula::dia(p.prefixed()?))
            }
            Some(b'~') => {
                p.pos += 1;
                if matches!(p.peek(), Some(c) if c.is_ascii_lowercase()) {
                    Ok(ModalFormula::NAtom(p.ident()?))
                } else {
                    Err(p.err("`~` applies only to atoms (input must be in NNF)"))
                }
            }
            Some(b'(') => {
                p.pos += 1;
                let inner = p.disjunction()?;
                if p.peek() == Some(b')') {
                    p.pos += 1;
                    Ok(inner)
                } else {
                    Err(p.err("expected `)`"))
                }
            }
            Some(c) if c.is_ascii_lowercase() => Ok(ModalFormula::Atom(p.ident()?)),
            Some(c) => Err(p.err(format!("unexpected character `{}`", c as char))),
            None => Err(p.err("unexpected end of input")),
        })
    }

    fn parse(mut self) -> Result<ModalFormula, FormulaParseError> {
        let a = self.disjunction()?;
        if self.peek().is_some() {
            return Err(self.err("trailing input after formula"));
        }
        Ok(a)
    }
}

/// Parse formula text. Grammar: lowercase atoms, `~p`, infix `&` and `|`
/// (right-associative, `&` binds tighter), prefix `[]` and `<>`, parentheses.
pub fn parse_formula(src: &str) -> Result<ModalFormula, FormulaParseError> {
    Parser::new(src).parse()
}

impl FromStr for ModalFormula {
    type Err = FormulaParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_formula(s)
    }
}

/// Every NNF formula over the given atoms with at most `max_connectives`
/// occurrences of `&`, `|`, `[]`, `<>`. Deterministic order: by connective
/// count, modalities before binary connectives within a count.
pub fn enumerate_nnf(atoms: &[&str], max_connectives: usize) -> Vec<ModalFormula> {
    let mut by_count: Vec<Vec<ModalFormula>> = Vec::with_capacity(max_connectives + 1);
    let mut leaves = Vec::new();
    for a in atoms {
        leaves.push(ModalFormula::atom(a));
        leaves.push(ModalFormula::natom(a));
    }
    by_count.push(leaves);
    for c in 1..=max_connectives {
        let mut level = Vec::new();
        for f in &by_count[c - 1] {
            level.push(ModalFormula::boxed(f.clone()));
            level.push(ModalFormula::dia(f.clone()));
        }
        for i in 0..c {
            let j = c - 1 - i;
            for a in &by_count[i] {
                for b in &by_count[j] {
                    level.push(ModalFormula::and(a.clone(), b.clone()));
                    level.push(ModalFormula::or(a.clone(), b.clone()));
                }
            }
        }
        by_count.push(level);
    }
    by_count.concat()
}

/// The running example used throughout the fixtures:
/// `<>(p & ~q) | (<>~p | []q)`.
pub fn axiom_k_example() -> ModalFormula {
    ModalFormula::or(
        ModalFormula::dia(ModalFormula::and(
            ModalFormula::atom("p"),
            ModalFormula::natom("q"),
        )),
        ModalFormula::or(
            ModalFormula::dia(ModalFormula::natom("p")),
            ModalFormula::boxed(ModalFormula::atom("q")),
        ),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> ModalFormula {
        ModalFormula::atom("p")
    }

    fn q() -> ModalFormula {
        ModalFormula::atom("q")
    }

    #[test]
    fn dual_of_atom_flips_sign() {
        assert_eq!(negate_nnf(&p()), ModalFormula::natom("p"));
        assert_eq!(negate_nnf(&ModalFormula::natom("p")), p());
    }

    #[test]
    fn dual_of_box_is_dia_of_dual() {
        assert_eq!(
            negate_nnf(&ModalFormula::boxed(p())),
            ModalFormula::dia(ModalFormula::natom("p"))
        );
    }

    #[test]
    fn dual_of_running_example() {
        // <>(p & ~q) | (<>~p | []q)  dualizes to  [](~p | q) & ([]p & <>~q)
        let expected = ModalFormula::and(
            ModalFormula::boxed(ModalFormula::or(ModalFormula::natom("p"), q())),
            ModalFormula::and(
                ModalFormula::boxed(p()),
                ModalFormula::dia(ModalFormula::natom("q")),
            ),
        );
        assert_eq!(negate_nnf(&axiom_k_example()), expected);
    }

    #[test]
    fn parse_running_example() {
        let parsed = parse_formula("<>(p & ~q) | (<>~p | []q)").unwrap();
        assert_eq!(parsed, axiom_k_example());
    }

    #[test]
    fn parse_respects_precedence_and_associativity() {
        // & binds tighter than |
        assert_eq!(
            parse_formula("p & q | p").unwrap(),
            ModalFormula::or(ModalFormula::and(p(), q()), p())
        );
        // both operators are right-associative
        assert_eq!(
            parse_formula("p | q | p").unwrap(),
            ModalFormula::or(p(), ModalFormula::or(q(), p()))
        );
        assert_eq!(
            parse_formula("p & q & p").unwrap(),
            ModalFormula::and(p(), ModalFormula::and(q(), p()))
        );
        // prefix operators reach only the next prefixed unit
        assert_eq!(
            parse_formula("[]p & q").unwrap(),
            ModalFormula::and(ModalFormula::boxed(p()), q())
        );
        assert_eq!(
            parse_formula("[] <> p").unwrap(),
            ModalFormula::boxed(ModalFormula::dia(p()))
        );
    }

    #[test]
    fn parse_rejects_non_nnf_negation() {
        assert!(parse_formula("~(p & q)").is_err());
        assert!(parse_formula("~~p").is_err());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_formula("").is_err());
        assert!(parse_formula("p &").is_err());
        assert!(parse_formula("(p").is_err());
        assert!(parse_formula("p q").is_err());
        assert!(parse_formula("P").is_err());
        assert!(parse_formula("[p]").is_err());
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
                    "{}p{}",
                    "(".repeat(3 * MAX_NESTING),
                    ")".repeat(3 * MAX_NESTING)
                );
                let err = parse_formula(&deep).unwrap_err();
                assert!(err.msg.contains("nesting"), "{err}");

                let modest = format!("{}p{}", "(".repeat(500), ")".repeat(500));
                assert_eq!(parse_formula(&modest).unwrap(), p());

                let chain = vec!["p"; 500].join(" & ");
                assert!(parse_formula(&chain).is_ok());
            })
            .unwrap()
            .join()
            .unwrap();
    }

    #[test]
    fn display_is_canonical_and_reparses() {
        let a = axiom_k_example();
        assert_eq!(a.to_string(), "<>(p & ~q) | <>~p | []q");
        assert_eq!(parse_formula(&a.to_string()).unwrap(), a);

        let b = ModalFormula::and(ModalFormula::or(p(), q()), ModalFormula::boxed(p()));
        assert_eq!(b.to_string(), "(p | q) & []p");
        assert_eq!(parse_formula(&b.to_string()).unwrap(), b);
    }

    #[test]
    fn counts_on_running_example() {
        let a = axiom_k_example();
        assert_eq!(a.modal_depth(), 1);
        assert_eq!(a.dia_count(), 2);
        assert_eq!(a.connective_count(), 6);
        assert_eq!(
            a.atoms().into_iter().collect::<Vec<_>>(),
            vec!["p".to_string(), "q".to_string()]
        );
    }

    #[test]
    fn enumeration_is_exhaustive_and_stable() {
        // Counts over one atom, by connective budget: the recurrence is
        // c(0)=2, c(n) = 2 c(n-1) + 2 Σ c(i)c(n-1-i).
        assert_eq!(enumerate_nnf(&["p"], 0).len(), 2);
        assert_eq!(enumerate_nnf(&["p"], 1).len(), 14);
        assert_eq!(enumerate_nnf(&["p"], 2).len(), 134);
        assert_eq!(enumerate_nnf(&["p"], 4).len(), 22_262);

        let all = enumerate_nnf(&["p"], 3);
        let distinct: std::collections::BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), all.len(), "no duplicates");
        assert!(all
            .iter()
            .all(|f| f.connective_count() <= 3 && f.atoms().len() == 1));
        assert_eq!(all, enumerate_nnf(&["p"], 3), "deterministic order");
    }

    proptest::proptest! {
        #[test]
        fn involution(a in crate::testgen::arb_formula(4, 2)) {
            proptest::prop_assert_eq!(negate_nnf(&negate_nnf(&a)), a);
        }

        #[test]
        fn display_roundtrips(a in crate::testgen::arb_formula(5, 3)) {
            let printed = a.to_string();
            let reparsed = parse_formula(&printed).unwrap();
            proptest::prop_assert_eq!(reparsed, a);
        }
    }
}
