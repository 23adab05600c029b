use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::{IdealHandle, RingPresentation};
use crate::poly::{is_identifier, parse_polynomial, Field, MonomialOrder, Polynomial};

/// Ring description as read from and written to JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingDocument {
    pub field: String,
    pub variables: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default)]
    pub ideals: BTreeMap<String, Vec<String>>,
}

/// A validated document: the ring plus its named ideals.
#[derive(Clone, Debug)]
pub struct LoadedRing {
    pub ring: RingPresentation,
    pub ideals: BTreeMap<String, IdealHandle>,
}

impl LoadedRing {
    pub fn ideal(&self, name: &str) -> Result<&IdealHandle> {
        self.ideals
            .get(name)
            .ok_or_else(|| Error::Input(format!("no ideal named `{name}` in the ring document")))
    }
}

/// String literal of the source text: decoded value and where its content starts.
struct StrToken {
    value: String,
    line: usize,
    column: usize,
}

fn string_tokens(text: &str) -> Vec<StrToken> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        if c == '"' {
            let (l0, c0) = (line, col + 1);
            col += 1;
            let mut value = String::new();
            while let Some(d) = chars.next() {
                col += 1;
                match d {
                    '"' => break,
                    '\\' => {
                        if let Some(e) = chars.next() {
                            col += 1;
                            value.push(match e {
                                'n' => '\n',
                                't' => '\t',
                                other => other,
                            });
                        }
                    }
                    '\n' => {
                        line += 1;
                        col = 1;
                        value.push(d);
                    }
                    _ => value.push(d),
                }
            }
            out.push(StrToken {
                value,
                line: l0,
                column: c0,
            });
        } else if c == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    out
}

/// Maps positions inside expression strings back to the document text.
struct Locator {
    tokens: Vec<StrToken>,
}

impl Locator {
    fn locate(&self, key: &str, expr: &str, inner: Option<(usize, usize)>, message: String) -> Error {
        let start = self.tokens.iter().position(|t| t.value == key).unwrap_or(0);
        let tok = self.tokens[start..]
            .iter()
            .find(|t| t.value == expr)
            .or_else(|| self.tokens.iter().find(|t| t.value == expr));
        match tok {
            Some(t) => {
                let (line, column) = match inner {
                    Some((1, c)) => (t.line, t.column + c - 1),
                    Some((l, c)) => (t.line + l - 1, c),
                    None => (t.line, t.column),
                };
                Error::Parse { line, column, message }
            }
            None => Error::Parse {
                line: 0,
                column: 0,
                message,
            },
        }
    }

    fn parse(&self, key: &str, src: &str, names: &[String], field: Field) -> Result<Polynomial> {
        parse_polynomial(src, names, field, MonomialOrder::GrevLex).map_err(|e| match e {
            Error::Parse { line, column, message } => {
                self.locate(key, src, Some((line, column)), format!("in `{src}`: {message}"))
            }
            Error::NegativeExponent(k) => {
                self.locate(key, src, None, format!("in `{src}`: negative exponent {k} rejected"))
            }
            other => other,
        })
    }
}

impl RingDocument {
    /// Parses and validates a document, reporting positions in `text`.
    pub fn parse(text: &str) -> Result<RingDocument> {
        let doc: RingDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        doc.load_located(&Locator {
            tokens: string_tokens(text),
        })?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("serializable");
        serde_json::to_string_pretty(&v).expect("serializable")
    }

    pub fn load(&self) -> Result<LoadedRing> {
        self.load_located(&Locator {
            tokens: string_tokens(&self.to_json()),
        })
    }

    fn load_located(&self, loc: &Locator) -> Result<LoadedRing> {
        let field = Field::parse(&self.field).map_err(|e| loc.locate("field", &self.field, None, e.to_string()))?;
        let mut seen = HashSet::new();
        for v in &self.variables {
            if !is_identifier(v) {
                return Err(loc.locate("variables", v, None, format!("`{v}` is not a valid identifier")));
            }
            if !seen.insert(v) {
                return Err(loc.locate("variables", v, None, format!("variable `{v}` declared twice")));
            }
        }
        let names = &self.variables;
        let mut rels = Vec::new();
        for r in &self.relations {
            let p = loc.parse("relations", r, names, field)?;
            if !p.constant_term().is_zero() {
                return Err(loc.locate("relations", r, None, "relation has nonzero constant term".into()));
            }
            rels.push(p);
        }
        let ring = RingPresentation::new(field, names.clone(), rels)?;
        let mut ideals = BTreeMap::new();
        for (name, gens) in &self.ideals {
            let gens = gens
                .iter()
                .map(|g| loc.parse(name, g, names, field))
                .collect::<Result<Vec<_>>>()?;
            ideals.insert(name.clone(), ring.ideal(gens));
        }
        Ok(LoadedRing { ring, ideals })
    }

    /// Same document with every expression in canonical form.
    pub fn canonical(&self) -> Result<RingDocument> {
        let loaded = self.load()?;
        let names = loaded.ring.names();
        let fmt = |src: &String| -> Result<String> {
            Ok(parse_polynomial(src, names, loaded.ring.field(), MonomialOrder::GrevLex)?.format(names))
        };
        Ok(RingDocument {
            field: loaded.ring.field().descriptor(),
            variables: self.variables.clone(),
            relations: self.relations.iter().map(fmt).collect::<Result<_>>()?,
            ideals: self
                .ideals
                .iter()
                .map(|(k, v)| Ok((k.clone(), v.iter().map(fmt).collect::<Result<Vec<_>>>()?)))
                .collect::<Result<_>>()?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_document() {
        let text = r#"{"field": "rational", "variables": ["x", "y"], "relations": [], "ideals": {"I": ["x", "y"]}}"#;
        let doc = RingDocument::parse(text).unwrap();
        let loaded = doc.load().unwrap();
        assert_eq!(loaded.ideal("I").unwrap().gens().len(), 2);
        assert!(loaded.ideal("J").is_err());
    }

    #[test]
    fn constant_relation_rejected_with_position() {
        let text = "{\n  \"field\": \"rational\",\n  \"variables\": [\"x\", \"y\"],\n  \"relations\": [\"y^2 + 1\"],\n  \"ideals\": {}\n}";
        match RingDocument::parse(text) {
            Err(Error::Parse { line, column, message }) => {
                assert_eq!(line, 4);
                assert_eq!(column, 18);
                assert_eq!(message, "relation has nonzero constant term");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_variable_located() {
        let text = "{\"field\": \"rational\", \"variables\": [\"x\"], \"relations\": [], \"ideals\": {\"I\": [\"x + q\"]}}";
        match RingDocument::parse(text) {
            Err(Error::Parse { line, column, message }) => {
                assert_eq!(line, 1);
                assert_eq!(&text[column - 1..column], "q");
                assert!(message.contains("unknown variable"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(RingDocument::parse("{"), Err(Error::Parse { .. })));
        let bad_field = r#"{"field": "prime:12", "variables": ["x"]}"#;
        assert!(RingDocument::parse(bad_field).is_err());
        let dup = r#"{"field": "rational", "variables": ["x", "x"]}"#;
        assert!(RingDocument::parse(dup).is_err());
        let implicit = r#"{"field": "rational", "variables": ["x"], "ideals": {"I": ["2x"]}}"#;
        assert!(RingDocument::parse(implicit).is_err());
    }
}
