//! Generator labels and ordered label sets.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest rank for which subsets of labels fit in a `u32` bitmask.
pub const MAX_RANK: usize = 20;

const RESERVED: &[char] = &['(', ')', '#', ':', '=', ','];

/// A generator name such as `a` or `s12`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct GeneratorLabel(String);

impl GeneratorLabel {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty() || name.chars().any(|c| c.is_whitespace() || RESERVED.contains(&c)) {
            return Err(Error::InvalidLabel(name));
        }
        Ok(Self(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The ordered generating set `S`. The order fixes basis and output order;
/// everything else in the crate refers to labels by their index here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelSet {
    names: Vec<GeneratorLabel>,
    index: HashMap<GeneratorLabel, usize>,
}

impl LabelSet {
    pub fn new(names: Vec<GeneratorLabel>) -> Result<Self> {
        if names.len() > MAX_RANK {
            return Err(Error::RankCapExceeded {
                rank: names.len(),
                cap: MAX_RANK,
            });
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(name.to_string()));
            }
        }
        Ok(Self { names, index })
    }

    pub fn from_strs<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let names = names
            .iter()
            .map(|n| GeneratorLabel::new(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(names)
    }

    /// Labels `a`, `b`, ... for ranks up to 26, `s1`, `s2`, ... beyond.
    pub fn alphabetic(rank: usize) -> Result<Self> {
        let names: Vec<String> = if rank <= 26 {
            (0..rank).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
        } else {
            (1..=rank).map(|i| format!("s{i}")).collect()
        };
        Self::from_strs(&names)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &GeneratorLabel {
        &self.names[i]
    }

    pub fn names(&self) -> &[GeneratorLabel] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        GeneratorLabel::new(name)
            .ok()
            .and_then(|l| self.index.get(&l).copied())
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    pub fn check_index(&self, i: usize) -> Result<usize> {
        if i < self.len() {
            Ok(i)
        } else {
            Err(Error::UnknownLabel(format!("#{i}")))
        }
    }

    /// Parses a whitespace separated word such as `"b a c"`.
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        text.split_whitespace().map(|w| self.index_of(w)).collect()
    }

    /// Space separated rendering of a word of label indices.
    pub fn format_word(&self, word: &[usize]) -> String {
        let parts: Vec<&str> = word.iter().map(|&i| self.names[i].as_str()).collect();
        parts.join(" ")
    }

    /// Renders a bitmask subset as `a,c` (label order).
    pub fn format_subset(&self, mask: u32) -> String {
        let parts: Vec<&str> = (0..self.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.names[i].as_str())
            .collect();
        parts.join(",")
    }

    pub fn subset_mask(&self, members: &[usize]) -> Result<u32> {
        members.iter().try_fold(0u32, |m, &i| Ok(m | 1 << self.check_index(i)?))
    }

    /// Sub-label-set consisting of `members` in ambient order.
    pub fn restrict(&self, members: &[usize]) -> Result<LabelSet> {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &i in &sorted {
            self.check_index(i)?;
        }
        Self::new(sorted.iter().map(|&i| self.names[i].clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_labels() {
        assert!(matches!(GeneratorLabel::new(""), Err(Error::InvalidLabel(_))));
        assert!(matches!(GeneratorLabel::new("a b"), Err(Error::InvalidLabel(_))));
        assert!(matches!(GeneratorLabel::new("a(b"), Err(Error::InvalidLabel(_))));
        assert!(GeneratorLabel::new("s_12").is_ok());
    }

    #[test]
    fn duplicate_and_lookup() {
        assert!(matches!(
            LabelSet::from_strs(&["a", "b", "a"]),
            Err(Error::DuplicateLabel(_))
        ));
        let s = LabelSet::from_strs(&["a", "b", "c"]).unwrap();
        assert_eq!(s.parse_word("b a c").unwrap(), vec![1, 0, 2]);
        assert!(matches!(s.index_of("z"), Err(Error::UnknownLabel(_))));
        assert_eq!(s.format_subset(0b101), "a,c");
    }

    #[test]
    fn rank_cap() {
        assert!(LabelSet::alphabetic(MAX_RANK).is_ok());
        assert!(matches!(
            LabelSet::alphabetic(MAX_RANK + 1),
            Err(Error::RankCapExceeded { .. })
        ));
    }
}
