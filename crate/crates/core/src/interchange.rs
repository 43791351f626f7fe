//! Text interchange documents.
//!
//! A document is a JSON object:
//!
//! ```json
//! {
//!   "dim": 2,
//!   "entries": [
//!     [[0, 0], 1],
//!     [[1, 1], 2]
//!   ],
//!   "domain_base": [
//!     {"name": "form", "elements": ["cube", "pyramid"]},
//!     {"name": "colour", "elements": ["black", "white"]}
//!   ]
//! }
//! ```
//!
//! `domain_base` is optional. A document is canonical when its entries are
//! sorted by index and hold no zero multiplicity; readers accept any order,
//! repeated indices (summed) and zeros (dropped). Multiplicities of any size
//! are written as bare integers; readers also accept decimal strings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{Map, Number, Value};

use crate::domain::{Domain, DomainBase};
use crate::error::{Error, Result};
use crate::index::MultiIndex;
use crate::polymset::{Multiplicity, Polymset};

/// A polymset with optional labeling metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub polymset: Polymset,
    pub domain_base: Option<DomainBase>,
}

impl Document {
    pub fn new(polymset: Polymset) -> Self {
        Document {
            polymset,
            domain_base: None,
        }
    }

    /// Attaches a domain base, checking that every index lies inside it.
    pub fn with_domain_base(polymset: Polymset, base: DomainBase) -> Result<Self> {
        if base.dim() != polymset.dim() {
            return Err(Error::DimensionMismatch {
                expected: polymset.dim(),
                found: base.dim(),
            });
        }
        if let Some(bad) = polymset.indices().find(|i| !base.contains(i)) {
            return Err(Error::OutOfDomain {
                index: bad.to_string(),
            });
        }
        Ok(Document {
            polymset,
            domain_base: Some(base),
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        Self::from_json(&value)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| doc_err("document must be an object"))?;
        if let Some(key) = obj
            .keys()
            .find(|k| !matches!(k.as_str(), "dim" | "entries" | "domain_base"))
        {
            return Err(doc_err(format!("unknown field {key:?}")));
        }
        let dim = obj
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| doc_err("\"dim\" must be a positive integer"))?;
        let dim = usize::try_from(dim).map_err(|_| doc_err("\"dim\" too large"))?;
        let entries = obj
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| doc_err("\"entries\" must be a list"))?;
        let comps = entries
            .iter()
            .map(parse_entry)
            .collect::<Result<Vec<_>>>()?;
        let polymset = Polymset::from_components(dim, comps)?;
        match obj.get("domain_base") {
            None | Some(Value::Null) => Ok(Document::new(polymset)),
            Some(v) => Document::with_domain_base(polymset, parse_domain_base(v)?),
        }
    }

    /// Canonical text: entries sorted, one per line, zeros removed.
    pub fn to_canonical_string(&self) -> String {
        let mut out = String::new();
        out.push_str("{\n");
        let _ = writeln!(out, "  \"dim\": {},", self.polymset.dim());
        if self.polymset.is_empty() {
            out.push_str("  \"entries\": []");
        } else {
            out.push_str("  \"entries\": [\n");
            let n = self.polymset.len();
            for (i, (k, m)) in self.polymset.iter().enumerate() {
                let coords: Vec<String> = k.coords().iter().map(u64::to_string).collect();
                let sep = if i + 1 < n { "," } else { "" };
                let _ = writeln!(out, "    [[{}], {}]{}", coords.join(", "), m, sep);
            }
            out.push_str("  ]");
        }
        if let Some(base) = &self.domain_base {
            out.push_str(",\n  \"domain_base\": [\n");
            let n = base.dim();
            for (i, d) in base.domains().iter().enumerate() {
                let elements: Vec<String> = d.elements.iter().map(|e| quote(e)).collect();
                let sep = if i + 1 < n { "," } else { "" };
                let _ = writeln!(
                    out,
                    "    {{\"name\": {}, \"elements\": [{}]}}{}",
                    quote(&d.name),
                    elements.join(", "),
                    sep
                );
            }
            out.push_str("  ]");
        }
        out.push_str("\n}\n");
        out
    }
}

/// Canonicalizes a document's text.
pub fn canonicalize(text: &str) -> Result<String> {
    Ok(Document::parse(text)?.to_canonical_string())
}

/// The polymset as a JSON value in document form, without a domain base.
pub fn to_json(p: &Polymset) -> Value {
    let entries = p
        .iter()
        .map(|(k, m)| {
            Value::Array(vec![
                Value::Array(k.coords().iter().map(|&c| Value::from(c)).collect()),
                Value::Number(big_number(m)),
            ])
        })
        .collect();
    let mut obj = Map::new();
    obj.insert("dim".into(), Value::from(p.dim()));
    obj.insert("entries".into(), Value::Array(entries));
    Value::Object(obj)
}

fn big_number(m: &Multiplicity) -> Number {
    Number::from_str(&m.to_string()).expect("decimal digits form a JSON number")
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn doc_err(msg: impl Into<String>) -> Error {
    Error::Document(msg.into())
}

fn parse_entry(v: &Value) -> Result<(MultiIndex, Multiplicity)> {
    let pair = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| doc_err("each entry must be [index-list, multiplicity]"))?;
    let coords = pair[0]
        .as_array()
        .ok_or_else(|| doc_err("index must be a list of integers"))?
        .iter()
        .map(|c| {
            c.as_u64()
                .ok_or_else(|| doc_err(format!("index coordinate {c} is not a natural number")))
        })
        .collect::<Result<Vec<_>>>()?;
    let idx = MultiIndex::new(coords).map_err(|_| doc_err("index must not be empty"))?;
    Ok((idx, parse_multiplicity(&pair[1])?))
}

fn parse_multiplicity(v: &Value) -> Result<Multiplicity> {
    let digits = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        other => {
            return Err(doc_err(format!(
                "multiplicity {other} is not a natural number"
            )))
        }
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(doc_err(format!(
            "multiplicity {digits} is not a natural number"
        )));
    }
    Multiplicity::from_str(&digits).map_err(|e| doc_err(e.to_string()))
}

fn parse_domain_base(v: &Value) -> Result<DomainBase> {
    let list = v
        .as_array()
        .ok_or_else(|| doc_err("\"domain_base\" must be a list"))?;
    let domains = list
        .iter()
        .map(|d| {
            let name = d
                .get("name")
                .and_then(Value::as_str)
                .ok_or_else(|| doc_err("domain needs a string \"name\""))?;
            let elements = d
                .get("elements")
                .and_then(Value::as_array)
                .ok_or_else(|| doc_err("domain needs an \"elements\" list"))?
                .iter()
                .map(|e| {
                    e.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| doc_err("element labels must be strings"))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Domain {
                name: name.to_string(),
                elements,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    DomainBase::new(domains)
}
