//! Corpus files: which rings to load and which maximal subrings to study.

use std::path::Path;
use std::sync::Arc;

use conductor_core::ideal::ExtensionPair;
use conductor_core::substructures::{idealizer, is_ideal, maximal_ideals, maximal_subrings, subring_closure, Scope, Side};
use conductor_core::substructures::is_maximal_subring;
use conductor_core::{Caps, RingTable, Subset};
use serde::Deserialize;
use thiserror::Error;

use crate::context::PairContext;
use crate::dsl::{parse_ring_expr_in, ParseError};

const DEFAULT_CORPUS: &str = include_str!("../data/default_corpus.toml");

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusSpec {
    #[serde(default, rename = "entry")]
    pub entries: Vec<CorpusEntry>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    /// Ring constructor expression.
    pub ring: String,
    /// Enumerate every maximal subring of the ring.
    #[serde(default)]
    pub discover: bool,
    /// Declared maximal subrings, each a `;`-separated list of generator names.
    #[serde(default)]
    pub subrings: Vec<String>,
    #[serde(default)]
    pub caps: CapsOverride,
}

#[derive(Debug, Clone, Copy, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CapsOverride {
    pub construction: Option<usize>,
    pub enumeration: Option<usize>,
    pub isomorphism: Option<usize>,
    pub endomorphism: Option<usize>,
    pub module: Option<usize>,
}

impl CapsOverride {
    pub fn apply(&self, base: &Caps) -> Caps {
        Caps {
            construction: self.construction.unwrap_or(base.construction),
            enumeration: self.enumeration.unwrap_or(base.enumeration),
            isomorphism: self.isomorphism.unwrap_or(base.isomorphism),
            endomorphism: self.endomorphism.unwrap_or(base.endomorphism),
            module: self.module.unwrap_or(base.module),
        }
    }
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read corpus {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed corpus: {0}")]
    Toml(#[from] toml::de::Error),
}

/// Why an entry contributed no pairs (or fewer than declared).
#[derive(Debug, Error)]
pub enum EntryError {
    #[error("ring `{expr}`: {source}")]
    Parse {
        expr: String,
        #[source]
        source: ParseError,
    },
    #[error("ring `{expr}`, subring <{gens}>: {source}")]
    Subring {
        expr: String,
        gens: String,
        #[source]
        source: conductor_core::Error,
    },
    #[error("ring `{expr}`, subring <{gens}> is not maximal")]
    NotMaximal { expr: String, gens: String },
    #[error("ring `{expr}`: discovery failed: {source}")]
    Discovery {
        expr: String,
        #[source]
        source: conductor_core::Error,
    },
    #[error("ring `{expr}`: {side} idealizer of maximal {side} ideal {ideal} is missing from the discovered subrings")]
    MissingIdealizer { expr: String, side: Side, ideal: String },
}

impl CorpusSpec {
    pub fn from_toml(text: &str) -> Result<Self, CorpusError> {
        Ok(toml::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, CorpusError> {
        let text = std::fs::read_to_string(path).map_err(|source| CorpusError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_toml(&text)
    }

    /// The built-in corpus of small rings.
    pub fn builtin() -> Self {
        Self::from_toml(DEFAULT_CORPUS).expect("built-in corpus parses")
    }
}

/// Pairs built from a corpus, plus the entries that failed.
#[derive(Debug, Default)]
pub struct Corpus {
    pub pairs: Vec<PairContext>,
    pub errors: Vec<EntryError>,
}

impl Corpus {
    /// Builds every entry; table paths resolve against `base`.
    pub fn build(spec: &CorpusSpec, caps: &Caps, base: Option<&Path>) -> Corpus {
        let mut corpus = Corpus::default();
        for entry in &spec.entries {
            let caps = entry.caps.apply(caps);
            match build_entry(entry, &caps, base) {
                Ok(pairs) => corpus.pairs.extend(pairs),
                Err(e) => corpus.errors.push(e),
            }
        }
        corpus
    }
}

fn build_entry(entry: &CorpusEntry, caps: &Caps, base: Option<&Path>) -> Result<Vec<PairContext>, EntryError> {
    let expr = entry.ring.clone();
    let t = Arc::new(
        parse_ring_expr_in(&expr, caps, base).map_err(|source| EntryError::Parse { expr: expr.clone(), source })?,
    );
    let mut subrings = Vec::new();
    if entry.discover {
        subrings = discover(&t, caps).map_err(|e| match e {
            Discovered::Core(source) => EntryError::Discovery { expr: expr.clone(), source },
            Discovered::Missing { side, ideal } => EntryError::MissingIdealizer { expr: expr.clone(), side, ideal },
        })?;
    }
    for gens in &entry.subrings {
        let sub = |source| EntryError::Subring { expr: expr.clone(), gens: gens.clone(), source };
        let r = parse_generators(&t, gens).map_err(sub)?;
        if !is_maximal_subring(&t, &r).map_err(sub)? {
            return Err(EntryError::NotMaximal { expr, gens: gens.clone() });
        }
        if !subrings.contains(&r) {
            subrings.push(r);
        }
    }
    subrings
        .into_iter()
        .map(|r| {
            let label = pair_label(&t, &r);
            let pair = ExtensionPair::new(t.clone(), r).map_err(|source| EntryError::Discovery {
                expr: expr.clone(),
                source,
            })?;
            Ok(PairContext::new(label, pair, *caps))
        })
        .collect()
}

enum Discovered {
    Core(conductor_core::Error),
    Missing { side: Side, ideal: String },
}

impl From<conductor_core::Error> for Discovered {
    fn from(e: conductor_core::Error) -> Self {
        Discovered::Core(e)
    }
}

/// Every maximal subring of `t`, cross-checked against the idealizers of
/// maximal one-sided ideals that are not two-sided.
fn discover(t: &RingTable, caps: &Caps) -> Result<Vec<Subset>, Discovered> {
    let found = maximal_subrings(t, caps)?;
    let whole = Scope::whole(t);
    for side in [Side::Left, Side::Right] {
        for a in maximal_ideals(&whole, side, caps)? {
            if is_ideal(&whole, &a, Side::TwoSided) {
                continue;
            }
            if !found.contains(&idealizer(t, &a, side)?) {
                return Err(Discovered::Missing { side, ideal: t.render(&a) });
            }
        }
    }
    Ok(found)
}

/// The subring generated by `;`-separated element names; empty text gives
/// the prime subring.
pub fn parse_generators(t: &RingTable, gens: &str) -> conductor_core::Result<Subset> {
    let names = gens.split(';').map(str::trim).filter(|s| !s.is_empty());
    Ok(subring_closure(t, &t.subset_by_names(names)?))
}

/// Generators of `r`: ascending elements not already in the closure so far.
pub fn generators_of(t: &RingTable, r: &Subset) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut cur = subring_closure(t, &t.empty_set());
    for x in r.iter() {
        if !cur.contains(x) {
            gens.push(x);
            let mut g = cur.clone();
            g.insert(x);
            cur = subring_closure(t, &g);
        }
    }
    gens
}

/// `"{ring} > <g1;g2>"`, using names accepted back by [`parse_generators`].
pub fn pair_label(t: &RingTable, r: &Subset) -> String {
    let names: Vec<&str> = generators_of(t, r).into_iter().map(|x| t.name(x)).collect();
    format!("{} > <{}>", t.label(), names.join(";"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_ring_expr;

    #[test]
    fn builtin_corpus_parses() {
        let spec = CorpusSpec::builtin();
        assert!(spec.entries.len() >= 10);
        assert!(spec.entries.iter().any(|e| e.caps.enumeration.is_some()));
    }

    #[test]
    fn unknown_keys_rejected() {
        assert!(CorpusSpec::from_toml("[[entry]]\nring = \"Z(2)\"\nbogus = 1\n").is_err());
        assert!(CorpusSpec::from_toml("").unwrap().entries.is_empty());
    }

    #[test]
    fn labels_round_trip() {
        let caps = Caps::default();
        let t = parse_ring_expr("Mat(Z(2),2)", &caps).unwrap();
        for r in maximal_subrings(&t, &caps).unwrap() {
            let label = pair_label(&t, &r);
            let gens = label.split_once(" > <").unwrap().1.trim_end_matches('>');
            assert_eq!(parse_generators(&t, gens).unwrap(), r, "{label}");
        }
    }

    #[test]
    fn discovery_of_product() {
        let caps = Caps::default();
        let spec = CorpusSpec::from_toml("[[entry]]\nring = \"Prod(Z(2),Z(2),Z(2))\"\ndiscover = true\n").unwrap();
        let corpus = Corpus::build(&spec, &caps, None);
        assert!(corpus.errors.is_empty());
        // one maximal subring per partition of three coordinates into a pair and a singleton
        assert_eq!(corpus.pairs.len(), 3);
    }

    #[test]
    fn non_maximal_declaration_rejected() {
        let caps = Caps::default();
        let spec = CorpusSpec::from_toml("[[entry]]\nring = \"Prod(Z(2),Z(2),Z(2))\"\nsubrings = [\"\"]\n").unwrap();
        let corpus = Corpus::build(&spec, &caps, None);
        assert!(corpus.pairs.is_empty());
        assert!(matches!(corpus.errors[0], EntryError::NotMaximal { .. }));
    }
}
