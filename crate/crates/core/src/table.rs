//! Knot tables and invariant collision reports.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::{parse_braid, BraidWord};
use crate::error::{Error, Result};
use crate::exactalg::RatFun2;
use crate::homfly::homfly;
use crate::qnum::{parse_rational, Rational};
use crate::xinv::{normalized_invariant, x_invariant, XContext};

/// Small knots with standard braid words.
pub const MINI_TABLE: &str = "\
# name,braid
3_1,\"1 1 1\"
4_1,\"1 -2 1 -2\"
5_1,\"1 1 1 1 1\"
5_2,\"1 1 1 2 -1 2\"
6_1,\"1 1 2 -1 -3 2 -3\"
6_2,\"1 1 1 -2 1 -2\"
6_3,\"1 1 -2 1 -2 -2\"
7_1,\"1 1 1 1 1 1 1\"
";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotTable {
    pub entries: Vec<(String, BraidWord)>,
    pub source: Option<PathBuf>,
}

impl KnotTable {
    /// Parse `name,"braid"` records; `#` starts a comment line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        let mut names = HashSet::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::Parse(format!("line {}: {msg}", lineno + 1));
            let (name, braid) = line.split_once(',').ok_or_else(|| err("expected name,\"braid\"".into()))?;
            let name = name.trim();
            let braid = braid.trim();
            let braid = braid
                .strip_prefix('"')
                .and_then(|b| b.strip_suffix('"'))
                .ok_or_else(|| err("braid must be quoted".into()))?;
            if name.is_empty() {
                return Err(err("empty knot name".into()));
            }
            if !names.insert(name.to_string()) {
                return Err(err(format!("duplicate name {name}")));
            }
            let w = parse_braid(braid, None).map_err(|e| err(e.to_string()))?;
            entries.push((name.to_string(), w));
        }
        Ok(Self { entries, source: None })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        let mut t = Self::parse(&text)?;
        t.source = Some(path.to_path_buf());
        Ok(t)
    }

    pub fn mini() -> Self {
        Self::parse(MINI_TABLE).expect("built-in table parses")
    }

    /// Entries followed by their mirrors, named with a `!` suffix.
    pub fn with_mirrors(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.extend(self.entries.iter().map(|(n, w)| (format!("{n}!"), w.mirror())));
        Self { entries, source: self.source.clone() }
    }

    pub fn get(&self, name: &str) -> Option<&BraidWord> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, w)| w)
    }
}

/// Which invariant a table run computes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    Homfly,
    X(Rational),
    Flat(Rational),
}

impl Mode {
    /// `homfly`, `x:R` or `flat:R`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "homfly" {
            return Ok(Mode::Homfly);
        }
        if let Some(r) = s.strip_prefix("x:") {
            return Ok(Mode::X(parse_rational(r)?));
        }
        if let Some(r) = s.strip_prefix("flat:") {
            return Ok(Mode::Flat(parse_rational(r)?));
        }
        Err(Error::Parse(format!("unknown mode {s:?}; expected homfly, x:R or flat:R")))
    }

    pub fn context(&self) -> Option<XContext> {
        match self {
            Mode::Homfly => None,
            Mode::X(x) => Some(XContext::right(x.clone())),
            Mode::Flat(x) => Some(XContext::flat(x.clone())),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Homfly => f.write_str("homfly"),
            Mode::X(x) => write!(f, "x:{x}"),
            Mode::Flat(x) => write!(f, "flat:{x}"),
        }
    }
}

/// HOMFLY-PT with the framing removed: `homfly(w)·(aq⁻¹)^{writhe}`.
pub fn unframed_homfly(w: &BraidWord) -> RatFun2 {
    let wr = w.writhe();
    &homfly(w) * &RatFun2::monomial(1, wr, -wr)
}

/// Canonical text of the selected invariant of one braid.
pub fn invariant_key(w: &BraidWord, mode: &Mode, normalized: bool) -> Result<String> {
    match (mode, normalized) {
        (Mode::Homfly, true) => Ok(unframed_homfly(w).to_string()),
        (Mode::Homfly, false) => Ok(homfly(w).to_string()),
        (_, true) => Ok(normalized_invariant(w, &mode.context().unwrap())?.to_string()),
        (_, false) => Ok(x_invariant(w, &mode.context().unwrap())?.to_string()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryError {
    pub name: String,
    pub message: String,
}

/// Knots grouped by identical invariant values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollisionReport {
    pub invariant: String,
    pub groups: Vec<Vec<String>>,
    pub errors: Vec<EntryError>,
}

impl CollisionReport {
    /// Only the groups with at least two members.
    pub fn collisions(&self) -> Vec<&Vec<String>> {
        self.groups.iter().filter(|g| g.len() > 1).collect()
    }

    /// The group containing `name`, if it was computed.
    pub fn group_of(&self, name: &str) -> Option<&Vec<String>> {
        self.groups.iter().find(|g| g.iter().any(|n| n == name))
    }

    pub fn same_group(&self, a: &str, b: &str) -> bool {
        self.group_of(a).is_some_and(|g| g.iter().any(|n| n == b))
    }
}

/// Compute the invariant of every entry in parallel and group equal values.
pub fn collision_report(table: &KnotTable, mode: &Mode, normalized: bool) -> CollisionReport {
    let results: Vec<(String, Result<String>)> = table
        .entries
        .par_iter()
        .map(|(name, w)| (name.clone(), invariant_key(w, mode, normalized)))
        .collect();
    let mut by_value: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut errors = Vec::new();
    for (name, r) in results {
        match r {
            Ok(key) => by_value.entry(key).or_default().push(name),
            Err(e) => errors.push(EntryError { name, message: e.to_string() }),
        }
    }
    let mut groups: Vec<Vec<String>> = by_value
        .into_values()
        .map(|mut g| {
            g.sort();
            g
        })
        .collect();
    groups.sort();
    errors.sort_by(|a, b| a.name.cmp(&b.name));
    let tag = if normalized { "normalized" } else { "raw" };
    CollisionReport { invariant: format!("{mode} {tag}"), groups, errors }
}
