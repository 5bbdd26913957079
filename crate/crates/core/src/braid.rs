//! Braid words and the statistics of their closures.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A word in the braid generators: letter `i` is `σ_i`, `-i` is `σ_i⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    letters: Vec<i32>,
    strands: usize,
}

/// Writhe, component count and underlying permutation of a braid closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureStats {
    pub writhe: i64,
    pub components: usize,
    /// `permutation[i]` is the bottom position of the strand starting at `i`.
    pub permutation: Vec<usize>,
}

impl BraidWord {
    pub fn new(letters: Vec<i32>, strands: usize) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Braid("a braid needs at least one strand".into()));
        }
        for &l in &letters {
            if l == 0 {
                return Err(Error::Braid("generator index 0 is not allowed".into()));
            }
            if l.unsigned_abs() as usize >= strands {
                return Err(Error::Braid(format!("generator {l} needs more than {strands} strands")));
            }
        }
        Ok(Self { letters, strands })
    }

    /// Strand count defaults to one more than the largest generator used.
    pub fn from_letters(letters: Vec<i32>) -> Result<Self> {
        let strands = letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0) + 1;
        Self::new(letters, strands)
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Negate every letter.
    pub fn mirror(&self) -> Self {
        Self { letters: self.letters.iter().map(|l| -l).collect(), strands: self.strands }
    }

    /// Concatenation; the strand count is the larger of the two.
    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { letters, strands: self.strands.max(other.strands) }
    }

    /// Same letters viewed on more strands.
    pub fn with_strands(&self, strands: usize) -> Result<Self> {
        Self::new(self.letters.clone(), strands)
    }

    /// Shift every generator index up by `k` (and the strand count with it).
    pub fn shifted(&self, k: usize) -> Self {
        let k = k as i32;
        Self {
            letters: self.letters.iter().map(|&l| l + l.signum() * k).collect(),
            strands: self.strands + k as usize,
        }
    }

    pub fn closure_stats(&self) -> ClosureStats {
        closure_stats(self)
    }
}

/// Parse whitespace- or comma-separated signed generator indices.
pub fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord> {
    let mut letters = Vec::new();
    for tok in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
        let l: i32 = tok.parse().map_err(|_| Error::Braid(format!("not a generator: {tok:?}")))?;
        letters.push(l);
    }
    match strands {
        Some(n) => BraidWord::new(letters, n),
        None => BraidWord::from_letters(letters),
    }
}

pub fn closure_stats(w: &BraidWord) -> ClosureStats {
    // track where the strand at each top position ends up
    let mut pos: Vec<usize> = (0..w.strands).collect();
    for &l in &w.letters {
        let i = l.unsigned_abs() as usize - 1;
        for p in pos.iter_mut() {
            if *p == i {
                *p = i + 1;
            } else if *p == i + 1 {
                *p = i;
            }
        }
    }
    let mut seen = vec![false; w.strands];
    let mut components = 0;
    for s in 0..w.strands {
        if seen[s] {
            continue;
        }
        components += 1;
        let mut t = s;
        while !seen[t] {
            seen[t] = true;
            t = pos[t];
        }
    }
    ClosureStats { writhe: w.writhe(), components, permutation: pos }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for BraidWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_braid(s, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let t = parse_braid("1 1 1", None).unwrap();
        assert_eq!(t.strands(), 2);
        assert_eq!(t.letters(), &[1, 1, 1]);
        let f = parse_braid("1,-2, 1 -2", None).unwrap();
        assert_eq!(f.strands(), 3);
        assert!(parse_braid("0", None).is_err());
        assert!(parse_braid("1 x", None).is_err());
        assert!(parse_braid("3", Some(3)).is_err());
        assert_eq!(parse_braid("", None).unwrap().strands(), 1);
        assert_eq!(parse_braid("", Some(3)).unwrap().strands(), 3);
    }

    #[test]
    fn mirror_examples() {
        let t: BraidWord = "1 1 1".parse().unwrap();
        assert_eq!(t.mirror().letters(), &[-1, -1, -1]);
        let f: BraidWord = "1 -2 1 -2".parse().unwrap();
        assert_eq!(f.mirror().mirror(), f);
    }

    #[test]
    fn closure_examples() {
        let t: BraidWord = "1 1 1".parse().unwrap();
        let s = t.closure_stats();
        assert_eq!((s.writhe, s.components), (3, 1));
        let e = parse_braid("", Some(3)).unwrap().closure_stats();
        assert_eq!((e.writhe, e.components), (0, 3));
        let h = parse_braid("1 1", None).unwrap().closure_stats();
        assert_eq!((h.writhe, h.components), (2, 2));
        let f: BraidWord = "1 -2 1 -2".parse().unwrap();
        assert_eq!(f.closure_stats().components, 1);
    }

    #[test]
    fn display_round_trip() {
        let w = parse_braid("2 -1 3 -3 1", Some(5)).unwrap();
        assert_eq!(parse_braid(&w.to_string(), Some(5)).unwrap(), w);
    }
}
