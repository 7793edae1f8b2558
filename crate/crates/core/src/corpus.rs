//! Corpus files: named groups given by cycle-notation generators.
//!
//! ```toml
//! [[group]]
//! name = "S4"
//! degree = 4
//! generators = ["(1 2)", "(1 2 3 4)"]
//! expected_order = 24
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;

const BUILTIN: &str = include_str!("../data/corpus.toml");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_order: Option<u64>,
}

impl CorpusEntry {
    /// Parses the generators and builds the group, checking `expected_order`.
    pub fn build(&self) -> Result<Group> {
        let gens = self
            .generators
            .iter()
            .enumerate()
            .map(|(k, s)| {
                Perm::parse(s, Some(self.degree)).map_err(|e| {
                    Error::Corpus(format!("{}: generator {} ({s:?}): {e}", self.name, k + 1))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let g = Group::new(self.degree, gens)
            .map_err(|e| Error::Corpus(format!("{}: {e}", self.name)))?;
        if let Some(expected) = self.expected_order {
            if g.order() != expected {
                return Err(Error::Corpus(format!(
                    "{}: order {} but expected_order = {expected}",
                    self.name,
                    g.order()
                )));
            }
        }
        Ok(g)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CorpusFile {
    #[serde(default)]
    group: Vec<CorpusEntry>,
}

#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn parse(text: &str) -> Result<Self> {
        let file: CorpusFile = toml::from_str(text).map_err(|e| {
            let msg = e.message().to_string();
            match e.span() {
                Some(span) => {
                    let (line, column) = line_column(text, span.start);
                    Error::Corpus(format!("line {line}, column {column}: {msg}"))
                }
                None => Error::Corpus(msg),
            }
        })?;
        let mut names = std::collections::HashSet::new();
        for e in &file.group {
            if !names.insert(e.name.as_str()) {
                return Err(Error::Corpus(format!("duplicate entry name {}", e.name)));
            }
        }
        Ok(Corpus {
            entries: file.group,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Corpus(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// The corpus shipped with the crate.
    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("built-in corpus parses")
    }

    pub fn get(&self, name: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Restricts the corpus to the named entries, keeping corpus order.
    pub fn restrict(&self, names: &[&str]) -> Self {
        Corpus {
            entries: self
                .entries
                .iter()
                .filter(|e| names.contains(&e.name.as_str()))
                .cloned()
                .collect(),
        }
    }

    pub fn to_toml(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            group: &'a [CorpusEntry],
        }
        toml::to_string(&Out {
            group: &self.entries,
        })
        .expect("corpus serializes")
    }
}

fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_entries_build_with_their_orders() {
        let corpus = Corpus::builtin();
        for name in ["S4", "A5", "PSL27", "SL23", "Q8", "C12"] {
            assert!(corpus.get(name).is_some(), "{name} missing");
        }
        for e in &corpus.entries {
            let g = e.build().unwrap();
            assert_eq!(Some(g.order()), e.expected_order, "{}", e.name);
        }
    }

    #[test]
    fn wrong_expected_order_is_rejected() {
        let c = Corpus::parse(
            "[[group]]\nname = \"bad\"\ndegree = 3\ngenerators = [\"(1 2 3)\"]\nexpected_order = 6\n",
        )
        .unwrap();
        let err = c.entries[0].build().unwrap_err();
        assert!(err.to_string().contains("bad"));
    }

    #[test]
    fn malformed_generators_name_the_entry() {
        let c = Corpus::parse("[[group]]\nname = \"oops\"\ndegree = 3\ngenerators = [\"(1 2\"]\n")
            .unwrap();
        let err = c.entries[0].build().unwrap_err().to_string();
        assert!(err.contains("oops") && err.contains("column"), "{err}");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = Corpus::parse("[[group]]\nname = \"x\"\ndegree = \n").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
    }

    #[test]
    fn toml_round_trip() {
        let c = Corpus::builtin().restrict(&["A5", "S4"]);
        let again = Corpus::parse(&c.to_toml()).unwrap();
        assert_eq!(again.entries, c.entries);
        assert_eq!(c.entries[0].name, "S4");
    }
}
