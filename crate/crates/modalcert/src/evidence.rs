//! The JSON evidence container: parsing and printing for every format.
//!
//! A file is one object: optional `"schema": 1`, a `"format"`
//! discriminator, the `"formula"` text, and the `"proof"` node tree. Field
//! sets are strict per format (an unknown or missing field is a schema
//! error, reported with its path), so corrupted files fail loudly at the
//! boundary rather than deep inside a check. The original formula text is
//! kept verbatim so translations echo their input untouched.

use crate::adapters::{NsEvidence, NsNode, OsEvidence, OsNode, PtEvidence};
use crate::formula::{parse_formula, ModalFormula};
use crate::index::{parse_index, parse_seq, Index, NsIndex};
use crate::layers::{LmfCert, LmfmCert, LmfmNode, Node, StarCert, StarDecor, StarNode};
use serde::Deserialize;
use serde_json::{json, Map, Value};
use std::collections::BTreeSet;
use std::fmt;

/// The seven evidence formats a file can declare.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Ls,
    Pt,
    Os,
    Ns,
    Lmf,
    Lmfm,
    LmfStar,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Ls => "ls",
            Format::Pt => "pt",
            Format::Os => "os",
            Format::Ns => "ns",
            Format::Lmf => "lmf",
            Format::Lmfm => "lmfm",
            Format::LmfStar => "lmfstar",
        })
    }
}

impl std::str::FromStr for Format {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        Ok(match s {
            "ls" => Format::Ls,
            "pt" => Format::Pt,
            "os" => Format::Os,
            "ns" => Format::Ns,
            "lmf" => Format::Lmf,
            "lmfm" => Format::Lmfm,
            "lmfstar" => Format::LmfStar,
            _ => return Err(()),
        })
    }
}

/// Evidence in whichever shape its format declares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    Ls(LmfCert),
    Pt(PtEvidence),
    Os(OsEvidence),
    Ns(NsEvidence),
    Lmf(LmfCert),
    Lmfm(LmfmCert),
    LmfStar(StarCert),
}

impl Evidence {
    pub fn format(&self) -> Format {
        match self {
            Evidence::Ls(_) => Format::Ls,
            Evidence::Pt(_) => Format::Pt,
            Evidence::Os(_) => Format::Os,
            Evidence::Ns(_) => Format::Ns,
            Evidence::Lmf(_) => Format::Lmf,
            Evidence::Lmfm(_) => Format::Lmfm,
            Evidence::LmfStar(_) => Format::LmfStar,
        }
    }
}

/// A parsed evidence file: the goal both as text (kept verbatim) and as a
/// formula, plus the proof tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvidenceFile {
    pub formula_text: String,
    pub formula: ModalFormula,
    pub evidence: Evidence,
}

/// Input-boundary failures: the text is not JSON, or the JSON does not fit
/// the schema. Both mean the file was never evidence at all.
#[derive(Debug, thiserror::Error)]
pub enum EvidenceError {
    #[error("JSON syntax: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("{path}: {msg}")]
    Schema { path: String, msg: String },
}

fn schema_err<T>(path: &str, msg: impl Into<String>) -> Result<T, EvidenceError> {
    Err(EvidenceError::Schema {
        path: path.to_string(),
        msg: msg.into(),
    })
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, EvidenceError> {
    v.as_object()
        .ok_or(())
        .or_else(|()| schema_err(path, "expected an object"))
}

fn as_string<'a>(v: &'a Value, path: &str) -> Result<&'a str, EvidenceError> {
    v.as_str()
        .ok_or(())
        .or_else(|()| schema_err(path, "expected a string"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a [Value], EvidenceError> {
    v.as_array()
        .map(Vec::as_slice)
        .ok_or(())
        .or_else(|()| schema_err(path, "expected an array"))
}

fn required<'a>(
    m: &'a Map<String, Value>,
    key: &str,
    path: &str,
) -> Result<&'a Value, EvidenceError> {
    m.get(key)
        .ok_or(())
        .or_else(|()| schema_err(path, format!("missing field `{key}`")))
}

fn reject_unknown(
    m: &Map<String, Value>,
    allowed: &[&str],
    path: &str,
) -> Result<(), EvidenceError> {
    for key in m.keys() {
        if !allowed.contains(&key.as_str()) {
            return schema_err(path, format!("unknown field `{key}`"));
        }
    }
    Ok(())
}

fn index_at(v: &Value, path: &str) -> Result<Index, EvidenceError> {
    let s = as_string(v, path)?;
    parse_index(s).or_else(|e| schema_err(path, e.to_string()))
}

fn ns_index_at(v: &Value, path: &str) -> Result<NsIndex, EvidenceError> {
    let m = as_object(v, path)?;
    reject_unknown(m, &["pos", "seq"], path)?;
    let pos = index_at(required(m, "pos", path)?, &format!("{path}.pos"))?;
    let seq_text = as_string(required(m, "seq", path)?, &format!("{path}.seq"))?;
    let seq = parse_seq(seq_text).or_else(|e| schema_err(&format!("{path}.seq"), e.to_string()))?;
    Ok(NsIndex { pos, seq })
}

fn group_at(m: &Map<String, Value>, path: &str) -> Result<u32, EvidenceError> {
    let v = required(m, "group", path)?;
    let path = format!("{path}.group");
    v.as_u64()
        .and_then(|n| u32::try_from(n).ok())
        .ok_or(())
        .or_else(|()| schema_err(&path, "expected a group number"))
}

fn children_at<'a>(m: &'a Map<String, Value>, path: &str) -> Result<&'a [Value], EvidenceError> {
    as_array(required(m, "children", path)?, &format!("{path}.children"))
}

fn plain_node(v: &Value, path: &str) -> Result<Node<()>, EvidenceError> {
    let m = as_object(v, path)?;
    reject_unknown(m, &["index", "extra", "children"], path)?;
    let index = index_at(required(m, "index", path)?, &format!("{path}.index"))?;
    let extra = match m.get("extra") {
        Some(v) => Some(index_at(v, &format!("{path}.extra"))?),
        None => None,
    };
    let children = children_at(m, path)?
        .iter()
        .enumerate()
        .map(|(k, c)| plain_node(c, &format!("{path}.children[{k}]")))
        .collect::<Result<_, _>>()?;
    Ok(Node {
        index,
        extra,
        decor: (),
        children,
    })
}

fn lmfm_node(v: &Value, path: &str) -> Result<LmfmNode, EvidenceError> {
    let m = as_object(v, path)?;
    reject_unknown(m, &["index", "extra", "group", "children"], path)?;
    let index = index_at(required(m, "index", path)?, &format!("{path}.index"))?;
    let extra = match m.get("extra") {
        Some(v) => Some(index_at(v, &format!("{path}.extra"))?),
        None => None,
    };
    let group = group_at(m, path)?;
    let children = children_at(m, path)?
        .iter()
        .enumerate()
        .map(|(k, c)| lmfm_node(c, &format!("{path}.children[{k}]")))
        .collect::<Result<_, _>>()?;
    Ok(Node {
        index,
        extra,
        decor: group,
        children,
    })
}

fn star_node(v: &Value, path: &str) -> Result<StarNode, EvidenceError> {
    let m = as_object(v, path)?;
    reject_unknown(
        m,
        &["index", "extra", "group", "present", "future", "children"],
        path,
    )?;
    let index = index_at(required(m, "index", path)?, &format!("{path}.index"))?;
    let extra = match m.get("extra") {
        Some(v) => Some(index_at(v, &format!("{path}.extra"))?),
        None => None,
    };
    let group = group_at(m, path)?;
    let present_path = format!("{path}.present");
    let mut present = BTreeSet::new();
    for (k, entry) in as_array(required(m, "present", path)?, &present_path)?
        .iter()
        .enumerate()
    {
        present.insert(index_at(entry, &format!("{present_path}[{k}]"))?);
    }
    let future = match m.get("future") {
        Some(v) => Some(index_at(v, &format!("{path}.future"))?),
        None => None,
    };
    let children = children_at(m, path)?
        .iter()
        .enumerate()
        .map(|(k, c)| star_node(c, &format!("{path}.children[{k}]")))
        .collect::<Result<_, _>>()?;
    Ok(Node {
        index,
        extra,
        decor: StarDecor {
            group,
            present,
            future,
        },
        children,
    })
}

fn os_node(v: &Value, path: &str) -> Result<OsNode, EvidenceError> {
    let m = as_object(v, path)?;
    reject_unknown(m, &["index", "extras", "children"], path)?;
    let index = index_at(required(m, "index", path)?, &format!("{path}.index"))?;
    let mut extras = Vec::new();
    if let Some(v) = m.get("extras") {
        let extras_path = format!("{path}.extras");
        for (k, entry) in as_array(v, &extras_path)?.iter().enumerate() {
            extras.push(index_at(entry, &format!("{extras_path}[{k}]"))?);
        }
    }
    let children = children_at(m, path)?
        .iter()
        .enumerate()
        .map(|(k, c)| os_node(c, &format!("{path}.children[{k}]")))
        .collect::<Result<_, _>>()?;
    Ok(OsNode {
        index,
        extras,
        children,
    })
}

fn ns_node(v: &Value, path: &str) -> Result<NsNode, EvidenceError> {
    let m = as_object(v, path)?;
    reject_unknown(m, &["index", "extra", "children"], path)?;
    let index = ns_index_at(required(m, "index", path)?, &format!("{path}.index"))?;
    let extra = match m.get("extra") {
        Some(v) => Some(ns_index_at(v, &format!("{path}.extra"))?),
        None => None,
    };
    let children = children_at(m, path)?
        .iter()
        .enumerate()
        .map(|(k, c)| ns_node(c, &format!("{path}.children[{k}]")))
        .collect::<Result<_, _>>()?;
    Ok(NsNode {
        index,
        extra,
        children,
    })
}

/// Proof trees nest with their formulas, so the parser accepts nesting far
/// past serde_json's default, but still bounded: past this the file is
/// rejected up front, keeping every later traversal's stack use bounded too.
const MAX_JSON_NESTING: usize = 8_192;

fn json_nesting(text: &str) -> usize {
    let (mut depth, mut deepest) = (0usize, 0);
    let (mut in_string, mut escaped) = (false, false);
    for b in text.bytes() {
        if in_string {
            if escaped {
                escaped = false;
            } else if b == b'\\' {
                escaped = true;
            } else if b == b'"' {
                in_string = false;
            }
        } else {
            match b {
                b'"' => in_string = true,
                b'{' | b'[' => {
                    depth += 1;
                    deepest = deepest.max(depth);
                }
                b'}' | b']' => depth = depth.saturating_sub(1),
                _ => {}
            }
        }
    }
    deepest
}

/// Parses evidence file text, validating the schema strictly.
pub fn parse_evidence(text: &str) -> Result<EvidenceFile, EvidenceError> {
    if json_nesting(text) > MAX_JSON_NESTING {
        return schema_err(
            "$",
            format!("nesting deeper than {MAX_JSON_NESTING} levels"),
        );
    }
    let mut de = serde_json::Deserializer::from_str(text);
    de.disable_recursion_limit();
    let v = Value::deserialize(&mut de)?;
    de.end()?;
    let m = as_object(&v, "$")?;
    reject_unknown(m, &["schema", "format", "formula", "proof"], "$")?;

    if let Some(s) = m.get("schema") {
        match s.as_u64() {
            Some(1) => {}
            Some(n) => return schema_err("schema", format!("unsupported schema version {n}")),
            None => return schema_err("schema", "expected an integer version"),
        }
    }

    let format_text = as_string(required(m, "format", "$")?, "format")?;
    let format: Format = format_text
        .parse()
        .or_else(|()| schema_err("format", format!("unknown format `{format_text}`")))?;

    let formula_text = as_string(required(m, "formula", "$")?, "formula")?.to_string();
    let formula = parse_formula(&formula_text).or_else(|e| schema_err("formula", e.to_string()))?;

    let proof = required(m, "proof", "$")?;
    let evidence = match format {
        Format::Ls => Evidence::Ls(LmfCert {
            root: plain_node(proof, "proof")?,
        }),
        Format::Pt => Evidence::Pt(PtEvidence {
            root: plain_node(proof, "proof")?,
        }),
        Format::Os => Evidence::Os(OsEvidence {
            root: os_node(proof, "proof")?,
        }),
        Format::Ns => Evidence::Ns(NsEvidence {
            root: ns_node(proof, "proof")?,
        }),
        Format::Lmf => Evidence::Lmf(LmfCert {
            root: plain_node(proof, "proof")?,
        }),
        Format::Lmfm => Evidence::Lmfm(LmfmCert {
            root: lmfm_node(proof, "proof")?,
        }),
        Format::LmfStar => Evidence::LmfStar(StarCert {
            root: star_node(proof, "proof")?,
        }),
    };

    Ok(EvidenceFile {
        formula_text,
        formula,
        evidence,
    })
}

fn plain_value(n: &Node<()>) -> Value {
    let mut m = Map::new();
    m.insert("index".into(), json!(n.index.to_string()));
    if let Some(e) = &n.extra {
        m.insert("extra".into(), json!(e.to_string()));
    }
    m.insert(
        "children".into(),
        Value::Array(n.children.iter().map(plain_value).collect()),
    );
    Value::Object(m)
}

fn lmfm_value(n: &LmfmNode) -> Value {
    let mut m = Map::new();
    m.insert("index".into(), json!(n.index.to_string()));
    if let Some(e) = &n.extra {
        m.insert("extra".into(), json!(e.to_string()));
    }
    m.insert("group".into(), json!(n.decor));
    m.insert(
        "children".into(),
        Value::Array(n.children.iter().map(lmfm_value).collect()),
    );
    Value::Object(m)
}

fn star_value(n: &StarNode) -> Value {
    let mut m = Map::new();
    m.insert("index".into(), json!(n.index.to_string()));
    if let Some(e) = &n.extra {
        m.insert("extra".into(), json!(e.to_string()));
    }
    m.insert("group".into(), json!(n.decor.group));
    m.insert(
        "present".into(),
        Value::Array(
            n.decor
                .present
                .iter()
                .map(|i| json!(i.to_string()))
                .collect(),
        ),
    );
    if let Some(f) = &n.decor.future {
        m.insert("future".into(), json!(f.to_string()));
    }
    m.insert(
        "children".into(),
        Value::Array(n.children.iter().map(star_value).collect()),
    );
    Value::Object(m)
}

fn os_value(n: &OsNode) -> Value {
    let mut m = Map::new();
    m.insert("index".into(), json!(n.index.to_string()));
    if !n.extras.is_empty() {
        m.insert(
            "extras".into(),
            Value::Array(n.extras.iter().map(|i| json!(i.to_string())).collect()),
        );
    }
    m.insert(
        "children".into(),
        Value::Array(n.children.iter().map(os_value).collect()),
    );
    Value::Object(m)
}

fn ns_index_value(i: &NsIndex) -> Value {
    json!({
        "pos": i.pos.to_string(),
        "seq": i.seq.to_string(),
    })
}

fn ns_value(n: &NsNode) -> Value {
    let mut m = Map::new();
    m.insert("index".into(), ns_index_value(&n.index));
    if let Some(e) = &n.extra {
        m.insert("extra".into(), ns_index_value(e));
    }
    m.insert(
        "children".into(),
        Value::Array(n.children.iter().map(ns_value).collect()),
    );
    Value::Object(m)
}

/// The evidence file as a JSON value (schema 1, formula text verbatim).
pub fn evidence_value(formula_text: &str, e: &Evidence) -> Value {
    let proof = match e {
        Evidence::Ls(c) | Evidence::Lmf(c) => plain_value(&c.root),
        Evidence::Pt(c) => plain_value(&c.root),
        Evidence::Os(c) => os_value(&c.root),
        Evidence::Ns(c) => ns_value(&c.root),
        Evidence::Lmfm(c) => lmfm_value(&c.root),
        Evidence::LmfStar(c) => star_value(&c.root),
    };
    json!({
        "schema": 1,
        "format": e.format().to_string(),
        "formula": formula_text,
        "proof": proof,
    })
}

/// Prints an evidence file; `parse_evidence` inverts this exactly.
pub fn print_evidence(formula_text: &str, e: &Evidence) -> String {
    let mut out = serde_json::to_string_pretty(&evidence_value(formula_text, e))
        .expect("evidence values serialize");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adapters::tests::{axiom_k_ns, axiom_k_os, axiom_k_pt};
    use crate::formula::axiom_k_example;
    use crate::layers::tests::{axiom_k_lmf, axiom_k_lmfm, axiom_k_star};

    fn k_text() -> &'static str {
        "<>(p & ~q) | (<>~p | []q)"
    }

    fn all_running_example_evidence() -> Vec<Evidence> {
        vec![
            Evidence::Ls(axiom_k_lmf()),
            Evidence::Pt(axiom_k_pt()),
            Evidence::Os(axiom_k_os()),
            Evidence::Ns(axiom_k_ns()),
            Evidence::Lmf(axiom_k_lmf()),
            Evidence::Lmfm(axiom_k_lmfm()),
            Evidence::LmfStar(axiom_k_star()),
        ]
    }

    #[test]
    fn round_trips_every_format() {
        for evidence in all_running_example_evidence() {
            let text = print_evidence(k_text(), &evidence);
            let parsed =
                parse_evidence(&text).unwrap_or_else(|e| panic!("{}: {e}", evidence.format()));
            assert_eq!(parsed.formula_text, k_text());
            assert_eq!(parsed.formula, axiom_k_example());
            assert_eq!(parsed.evidence, evidence);
        }
    }

    #[test]
    fn parses_the_minimal_documented_file() {
        let text = r#"{"format":"lmf","formula":"p | ~p","proof":{"index":"root","children":[{"index":"left(root)","extra":"right(root)","children":[]}]}}"#;
        let f = parse_evidence(text).unwrap();
        let Evidence::Lmf(cert) = &f.evidence else {
            panic!("expected lmf");
        };
        assert_eq!(cert.root.count(), 2);
        assert_eq!(cert.root.children[0].extra, Some(Index::Root.right()));
    }

    #[test]
    fn schema_version_rules() {
        let ok = r#"{"schema":1,"format":"lmf","formula":"p | ~p","proof":{"index":"root","children":[]}}"#;
        assert!(parse_evidence(ok).is_ok());
        let bad = r#"{"schema":2,"format":"lmf","formula":"p | ~p","proof":{"index":"root","children":[]}}"#;
        let err = parse_evidence(bad).unwrap_err();
        assert!(err.to_string().contains("unsupported schema version 2"));
    }

    #[test]
    fn rejects_malformed_input_with_paths() {
        let cases: Vec<(&str, &str)> = vec![
            ("not json at all", "JSON syntax"),
            (
                r#"{"format":"xyz","formula":"p","proof":{}}"#,
                "unknown format `xyz`",
            ),
            (r#"{"format":"lmf","proof":{}}"#, "missing field `formula`"),
            (
                r#"{"format":"lmf","formula":"p |","proof":{"index":"root","children":[]}}"#,
                "formula",
            ),
            (
                r#"{"format":"lmf","formula":"p | ~p","proof":{"index":"root","children":[]},"notes":"x"}"#,
                "unknown field `notes`",
            ),
            (
                r#"{"format":"lmf","formula":"p | ~p","proof":{"index":"root","group":1,"children":[]}}"#,
                "unknown field `group`",
            ),
            (
                r#"{"format":"lmfm","formula":"p | ~p","proof":{"index":"root","children":[]}}"#,
                "missing field `group`",
            ),
            (
                r#"{"format":"lmf","formula":"p | ~p","proof":{"index":"root","children":[{"index":"leeft(root)","children":[]}]}}"#,
                "proof.children[0].index",
            ),
            (
                r#"{"format":"lmf","formula":"p | ~p","proof":{"index":"root"}}"#,
                "missing field `children`",
            ),
            (
                r#"{"format":"ns","formula":"p | ~p","proof":{"index":"root","children":[]}}"#,
                "proof.index: expected an object",
            ),
            (
                r#"{"format":"ns","formula":"p | ~p","proof":{"index":{"pos":"root","seq":"zp"},"children":[]}}"#,
                "proof.index.seq",
            ),
            (
                r#"{"format":"lmfstar","formula":"p | ~p","proof":{"index":"root","group":1,"children":[]}}"#,
                "missing field `present`",
            ),
        ];
        for (text, needle) in cases {
            let err = parse_evidence(text).unwrap_err().to_string();
            assert!(
                err.contains(needle),
                "error for `{text}` was `{err}`, expected to mention `{needle}`"
            );
        }
    }

    #[test]
    fn os_extras_default_to_empty() {
        let text = r#"{"format":"os","formula":"p | ~p","proof":{"index":"root","children":[{"index":"left(root)","extras":["right(root)"],"children":[]}]}}"#;
        let f = parse_evidence(text).unwrap();
        let Evidence::Os(e) = &f.evidence else {
            panic!("expected os");
        };
        assert!(e.root.extras.is_empty());
        assert_eq!(e.root.children[0].extras.len(), 1);
    }

    #[test]
    fn nesting_scanner_ignores_brackets_inside_strings() {
        assert_eq!(json_nesting(r#"{"a":"}{[["}"#), 1);
        assert_eq!(json_nesting(r#"{"a":"\"}{"}"#), 1);
        assert_eq!(json_nesting(r#"[[{"a":[]}]]"#), 4);
        assert_eq!(json_nesting("true"), 0);
    }

    #[test]
    fn accepts_trees_past_the_json_default_depth() {
        // serde_json alone stops at 128 levels; proof trees for long
        // conjunctions legitimately nest far past that.
        let text = format!(
            r#"{{"format":"lmf","formula":"p | ~p","proof":{}{}{}}}"#,
            r#"{"index":"root","children":["#.repeat(400),
            r#"{"index":"root","children":[]}"#,
            "]}".repeat(400),
        );
        assert!(parse_evidence(&text).is_ok());
    }

    #[test]
    fn rejects_nesting_past_the_cap() {
        let text = "[".repeat(MAX_JSON_NESTING + 1);
        let err = parse_evidence(&text).unwrap_err().to_string();
        assert!(err.contains("nesting deeper"), "{err}");
    }

    #[test]
    fn printed_star_evidence_lists_all_decorations() {
        let text = print_evidence(k_text(), &Evidence::LmfStar(axiom_k_star()));
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["format"], "lmfstar");
        assert_eq!(v["formula"], k_text());
        let n4 = &v["proof"]["children"][0]["children"][0]["children"][0];
        assert_eq!(n4["index"], "left(root)");
        assert_eq!(n4["group"], 4);
        assert_eq!(n4["present"], json!(["right(right(root))"]));
        assert_eq!(n4["future"], "right(right(root))");
    }

    #[test]
    fn fixture_files_match_the_reference_evidence() {
        let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
        let load = |name: &str| {
            let text = std::fs::read_to_string(format!("{dir}/{name}")).unwrap();
            parse_evidence(&text).unwrap()
        };
        let expected = [
            ("axiomK.lmf.json", Evidence::Lmf(axiom_k_lmf())),
            ("axiomK.lmfm.json", Evidence::Lmfm(axiom_k_lmfm())),
            ("axiomK.lmfstar.json", Evidence::LmfStar(axiom_k_star())),
            ("axiomK.os.json", Evidence::Os(axiom_k_os())),
            ("axiomK.ns.json", Evidence::Ns(axiom_k_ns())),
            ("axiomK.pt.json", Evidence::Pt(axiom_k_pt())),
        ];
        for (name, evidence) in expected {
            let file = load(name);
            assert_eq!(file.formula_text, k_text(), "{name}");
            assert_eq!(file.formula, axiom_k_example(), "{name}");
            assert_eq!(file.evidence, evidence, "{name}");
        }
        let corrupt = load("axiomK.os.corrupt.json");
        let Evidence::Os(e) = &corrupt.evidence else {
            panic!("corrupt fixture should still parse as os evidence");
        };
        assert_eq!(
            e.root.children[0].children[0].extras.len(),
            1,
            "the corrupt fixture drops one transported diamond"
        );
    }
}
