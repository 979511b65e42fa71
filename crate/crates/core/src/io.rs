//! The JSON document format, canonical serialization and check reports.
//!
//! One schema covers every structure. Common keys are `kind`, `n` and the
//! optional `labels`; lattices add `leq`, `ocomp`, `bot`, `top`; QCAs add
//! `dims`, `exists`, `diag`; QIAs add `dot` and optional `zero`; CQIAs add
//! `dot`, `zero`, `diamonds`, `diag`; frames add `perp`, `rels`, `deltas`.
//! Meet and join are never stored.

use crate::error::{Error, Result};
use crate::frames::{CylindricOrthoFrame, Relation};
use crate::lattice::FiniteOrtholattice;
use crate::qca::{QuantifierMap, QuantumCylindricAlgebra};
use crate::qia::{CylindricQia, QiaTable};
use crate::report::CheckReport;
use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::io::Write;
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraDocument {
    /// `kind` is `oml` when `orthomodular` is set, `ol` otherwise.
    Lattice { lattice: FiniteOrtholattice, orthomodular: bool },
    Qca(QuantumCylindricAlgebra),
    Qia(QiaTable),
    Cqia(CylindricQia),
    Frame(CylindricOrthoFrame),
}

impl AlgebraDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            AlgebraDocument::Lattice { orthomodular: false, .. } => "ol",
            AlgebraDocument::Lattice { orthomodular: true, .. } => "oml",
            AlgebraDocument::Qca(_) => "qca",
            AlgebraDocument::Qia(_) => "qia",
            AlgebraDocument::Cqia(_) => "cqia",
            AlgebraDocument::Frame(_) => "frame",
        }
    }

    pub fn len(&self) -> usize {
        match self {
            AlgebraDocument::Lattice { lattice, .. } => lattice.len(),
            AlgebraDocument::Qca(a) => a.len(),
            AlgebraDocument::Qia(q) => q.len(),
            AlgebraDocument::Cqia(c) => c.len(),
            AlgebraDocument::Frame(f) => f.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn labels(&self) -> Option<&[String]> {
        match self {
            AlgebraDocument::Lattice { lattice, .. } => lattice.labels(),
            AlgebraDocument::Qca(a) => a.lattice().labels(),
            AlgebraDocument::Qia(q) => q.labels(),
            AlgebraDocument::Cqia(c) => c.qia().labels(),
            AlgebraDocument::Frame(f) => f.labels(),
        }
    }
}

type Matrix<T> = Vec<Vec<T>>;

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    kind: String,
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    leq: Option<Matrix<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ocomp: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bot: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    top: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dims: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    exists: Option<Matrix<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dot: Option<Matrix<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    zero: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    diamonds: Option<Matrix<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    diag: Option<Matrix<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    perp: Option<Matrix<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rels: Option<Vec<Matrix<u8>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    deltas: Option<Vec<Matrix<usize>>>,
}

fn parse_err(detail: impl Into<String>) -> Error {
    Error::Parse(detail.into())
}

fn invalid(field: &str, detail: impl Into<String>) -> Error {
    Error::Validation { field: field.to_string(), detail: detail.into() }
}

fn required<T>(value: Option<T>, field: &str, kind: &str) -> Result<T> {
    value.ok_or_else(|| parse_err(format!("missing field `{field}` for kind `{kind}`")))
}

fn square<T>(m: &Matrix<T>, n: usize, field: &str) -> Result<()> {
    if m.len() != n || m.iter().any(|r| r.len() != n) {
        return Err(parse_err(format!("field `{field}` must be a {n}x{n} matrix")));
    }
    Ok(())
}

fn bool_matrix(m: Matrix<u8>, n: usize, field: &str) -> Result<Matrix<bool>> {
    square(&m, n, field)?;
    m.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| match v {
                    0 => Ok(false),
                    1 => Ok(true),
                    v => Err(invalid(field, format!("entry {v} is not 0 or 1"))),
                })
                .collect()
        })
        .collect()
}

fn in_range<'a>(values: impl IntoIterator<Item = &'a usize>, n: usize, field: &str) -> Result<()> {
    if let Some(v) = values.into_iter().find(|&&v| v >= n) {
        return Err(invalid(field, format!("index {v} out of range 0..{n}")));
    }
    Ok(())
}

fn labels_ok(labels: &Option<Vec<String>>, n: usize) -> Result<()> {
    match labels {
        Some(l) if l.len() != n => Err(parse_err(format!("field `labels` must have {n} entries"))),
        _ => Ok(()),
    }
}

fn forbid(raw: &RawDocument, allowed: &[&str]) -> Result<()> {
    let present = [
        ("leq", raw.leq.is_some()),
        ("ocomp", raw.ocomp.is_some()),
        ("bot", raw.bot.is_some()),
        ("top", raw.top.is_some()),
        ("dims", raw.dims.is_some()),
        ("exists", raw.exists.is_some()),
        ("dot", raw.dot.is_some()),
        ("zero", raw.zero.is_some()),
        ("diamonds", raw.diamonds.is_some()),
        ("diag", raw.diag.is_some()),
        ("perp", raw.perp.is_some()),
        ("rels", raw.rels.is_some()),
        ("deltas", raw.deltas.is_some()),
    ];
    match present.iter().find(|(k, p)| *p && !allowed.contains(k)) {
        Some((k, _)) => Err(parse_err(format!("field `{k}` is not allowed for kind `{}`", raw.kind))),
        None => Ok(()),
    }
}

fn lattice_from_raw(raw: &mut RawDocument) -> Result<FiniteOrtholattice> {
    let kind = raw.kind.clone();
    let n = raw.n;
    let leq = bool_matrix(required(raw.leq.take(), "leq", &kind)?, n, "leq")?;
    let ocomp = required(raw.ocomp.take(), "ocomp", &kind)?;
    if ocomp.len() != n {
        return Err(parse_err(format!("field `ocomp` must have {n} entries")));
    }
    in_range(&ocomp, n, "ocomp")?;
    let bot = required(raw.bot, "bot", &kind)?;
    let top = required(raw.top, "top", &kind)?;
    in_range(&[bot], n, "bot")?;
    in_range(&[top], n, "top")?;
    labels_ok(&raw.labels, n)?;
    let lattice = FiniteOrtholattice::from_order(leq, ocomp, raw.labels.take()).map_err(|e| match e {
        Error::NotALattice(d) => invalid("leq", d),
        other => other,
    })?;
    if lattice.bot() != bot {
        return Err(invalid("bot", format!("least element is {}", lattice.bot())));
    }
    if lattice.top() != top {
        return Err(invalid("top", format!("greatest element is {}", lattice.top())));
    }
    Ok(lattice)
}

fn diag_from_raw(diag: Matrix<usize>, d: usize, n: usize) -> Result<Matrix<usize>> {
    if diag.len() != d || diag.iter().any(|r| r.len() != d) {
        return Err(parse_err(format!("field `diag` must be a {d}x{d} matrix")));
    }
    in_range(diag.iter().flatten(), n, "diag")?;
    Ok(diag)
}

fn maps_from_raw(maps: Matrix<usize>, n: usize, field: &str) -> Result<Matrix<usize>> {
    if maps.iter().any(|m| m.len() != n) {
        return Err(parse_err(format!("every entry of `{field}` must have {n} values")));
    }
    in_range(maps.iter().flatten(), n, field)?;
    Ok(maps)
}

fn qia_from_raw(raw: &mut RawDocument) -> Result<QiaTable> {
    let n = raw.n;
    if n == 0 {
        return Err(invalid("n", "carrier must be nonempty"));
    }
    let dot = required(raw.dot.take(), "dot", &raw.kind.clone())?;
    square(&dot, n, "dot")?;
    in_range(dot.iter().flatten(), n, "dot")?;
    if let Some(z) = raw.zero {
        in_range(&[z], n, "zero")?;
    }
    labels_ok(&raw.labels, n)?;
    QiaTable::new(dot, raw.zero, raw.labels.take())
}

fn subset(members: &[usize], m: usize) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(m);
    s.extend(members.iter().copied());
    s
}

fn from_raw(mut raw: RawDocument) -> Result<AlgebraDocument> {
    let n = raw.n;
    match raw.kind.as_str() {
        "ol" | "oml" => {
            forbid(&raw, &["leq", "ocomp", "bot", "top"])?;
            let orthomodular = raw.kind == "oml";
            Ok(AlgebraDocument::Lattice { lattice: lattice_from_raw(&mut raw)?, orthomodular })
        }
        "qca" => {
            forbid(&raw, &["leq", "ocomp", "bot", "top", "dims", "exists", "diag"])?;
            let lattice = lattice_from_raw(&mut raw)?;
            let d = required(raw.dims, "dims", "qca")?;
            let exists = maps_from_raw(required(raw.exists.take(), "exists", "qca")?, n, "exists")?;
            if exists.len() != d {
                return Err(parse_err(format!("field `exists` must have {d} entries")));
            }
            let diag = diag_from_raw(required(raw.diag.take(), "diag", "qca")?, d, n)?;
            Ok(AlgebraDocument::Qca(QuantumCylindricAlgebra::new(
                lattice,
                exists.into_iter().map(QuantifierMap::new).collect(),
                diag,
            )?))
        }
        "qia" => {
            forbid(&raw, &["dot", "zero"])?;
            Ok(AlgebraDocument::Qia(qia_from_raw(&mut raw)?))
        }
        "cqia" => {
            forbid(&raw, &["dot", "zero", "diamonds", "diag"])?;
            required(raw.zero, "zero", "cqia")?;
            let qia = qia_from_raw(&mut raw)?;
            let diamonds = maps_from_raw(required(raw.diamonds.take(), "diamonds", "cqia")?, n, "diamonds")?;
            let diag = diag_from_raw(required(raw.diag.take(), "diag", "cqia")?, diamonds.len(), n)?;
            Ok(AlgebraDocument::Cqia(CylindricQia::new(qia, diamonds, diag)?))
        }
        "frame" => {
            forbid(&raw, &["perp", "rels", "deltas"])?;
            let perp = bool_matrix(required(raw.perp.take(), "perp", "frame")?, n, "perp")?;
            let rels = required(raw.rels.take(), "rels", "frame")?
                .into_iter()
                .map(|r| bool_matrix(r, n, "rels").map(|m| Relation::from_matrix(&m)))
                .collect::<Result<Vec<_>>>()?;
            let d = rels.len();
            let deltas = required(raw.deltas.take(), "deltas", "frame")?;
            if deltas.len() != d || deltas.iter().any(|r| r.len() != d) {
                return Err(parse_err(format!("field `deltas` must be a {d}x{d} family of index lists")));
            }
            in_range(deltas.iter().flatten().flatten(), n, "deltas")?;
            let deltas = deltas
                .iter()
                .map(|row| row.iter().map(|s| subset(s, n)).collect())
                .collect();
            labels_ok(&raw.labels, n)?;
            Ok(AlgebraDocument::Frame(CylindricOrthoFrame::new(
                Relation::from_matrix(&perp),
                rels,
                deltas,
                raw.labels.take(),
            )?))
        }
        other => Err(parse_err(format!("unknown kind `{other}`"))),
    }
}

pub fn parse_str(text: &str) -> Result<AlgebraDocument> {
    let raw: RawDocument = serde_json::from_str(text)
        .map_err(|e| parse_err(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    from_raw(raw)
}

pub fn parse(path: impl AsRef<Path>) -> Result<AlgebraDocument> {
    parse_str(&std::fs::read_to_string(path)?)
}

fn bits(m: Matrix<bool>) -> Matrix<u8> {
    m.into_iter().map(|r| r.into_iter().map(u8::from).collect()).collect()
}

fn lattice_raw(kind: &str, l: &FiniteOrtholattice) -> RawDocument {
    RawDocument {
        kind: kind.to_string(),
        n: l.len(),
        leq: Some(bits(l.leq_matrix())),
        ocomp: Some(l.ocomp().to_vec()),
        bot: Some(l.bot()),
        top: Some(l.top()),
        labels: l.labels().map(<[String]>::to_vec),
        ..RawDocument::default()
    }
}

fn to_raw(doc: &AlgebraDocument) -> RawDocument {
    match doc {
        AlgebraDocument::Lattice { lattice, .. } => lattice_raw(doc.kind(), lattice),
        AlgebraDocument::Qca(a) => RawDocument {
            dims: Some(a.dims()),
            exists: Some(a.quantifiers().iter().map(|q| q.exists.clone()).collect()),
            diag: Some(a.diag_matrix().to_vec()),
            ..lattice_raw("qca", a.lattice())
        },
        AlgebraDocument::Qia(q) => RawDocument {
            kind: "qia".into(),
            n: q.len(),
            labels: q.labels().map(<[String]>::to_vec),
            dot: Some(q.dot_matrix()),
            zero: q.zero(),
            ..RawDocument::default()
        },
        AlgebraDocument::Cqia(c) => RawDocument {
            kind: "cqia".into(),
            n: c.len(),
            labels: c.qia().labels().map(<[String]>::to_vec),
            dot: Some(c.qia().dot_matrix()),
            zero: Some(c.zero()),
            diamonds: Some(c.diamonds().to_vec()),
            diag: Some(c.diag_matrix().to_vec()),
            ..RawDocument::default()
        },
        AlgebraDocument::Frame(f) => {
            let d = f.dims();
            RawDocument {
                kind: "frame".into(),
                n: f.len(),
                labels: f.labels().map(<[String]>::to_vec),
                perp: Some(bits(f.perp().matrix())),
                rels: Some(f.rels().iter().map(|r| bits(r.matrix())).collect()),
                deltas: Some(
                    (0..d).map(|i| (0..d).map(|k| f.delta(i, k).ones().collect()).collect()).collect(),
                ),
                ..RawDocument::default()
            }
        }
    }
}

/// Pretty JSON with scalar arrays kept on one line.
fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = |k: usize| "  ".repeat(k);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, val)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, val, indent + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(out, item, indent + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

pub fn to_canonical_json(value: &impl Serialize) -> String {
    let value = serde_json::to_value(value).expect("documents serialize to JSON");
    let mut out = String::new();
    write_value(&mut out, &value, 0);
    out.push('\n');
    out
}

/// Canonical text of a document; `parse_str(to_canonical_string(d)) == d`.
pub fn to_canonical_string(doc: &AlgebraDocument) -> String {
    to_canonical_json(&to_raw(doc))
}

/// Parses and re-serializes.
pub fn canonicalize(text: &str) -> Result<String> {
    Ok(to_canonical_string(&parse_str(text)?))
}

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: impl AsRef<Path>, bytes: &[u8]) -> Result<()> {
    let path = path.as_ref();
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationEntry {
    pub axiom: String,
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
    pub violations: Vec<ViolationEntry>,
}

impl CheckEntry {
    pub fn new(name: impl Into<String>, report: &CheckReport, labels: Option<&[String]>) -> Self {
        CheckEntry {
            name: name.into(),
            passed: report.passed(),
            violations: report
                .violations
                .iter()
                .map(|v| ViolationEntry { axiom: v.axiom.clone(), witness: v.render(labels) })
                .collect(),
        }
    }
}

/// Machine-readable outcome of checking one input file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub input_digest: String,
    pub kind: String,
    pub passed: bool,
    pub checks: Vec<CheckEntry>,
}

impl ReportDocument {
    pub fn new(input: &[u8], kind: &str, checks: Vec<CheckEntry>) -> Self {
        ReportDocument {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            input_digest: digest(input),
            kind: kind.to_string(),
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }
}

/// `sha256:` followed by the lowercase hex digest.
pub fn digest(bytes: &[u8]) -> String {
    let hash = Sha256::digest(bytes);
    let hex: String = hash.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}
