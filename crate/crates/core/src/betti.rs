use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::homology::FieldChoice;

/// Where a Betti table came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BettiSource {
    /// Hochster's formula over the given field.
    Homology(FieldChoice),
    /// Binomial counts from a degree-ordered linear-quotient certificate.
    LinearQuotients,
}

/// Graded Betti numbers `β_{i,j}(R/I)` of a quotient ring, so that `(0, 0)`
/// holds 1 for every proper ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
    pub source: BettiSource,
}

impl BettiTable {
    pub fn new(source: BettiSource) -> Self {
        BettiTable {
            entries: BTreeMap::new(),
            source,
        }
    }

    pub fn add(&mut self, i: usize, j: usize, rank: u64) {
        if rank > 0 {
            *self.entries.entry((i, j)).or_insert(0) += rank;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries as `(i, j, rank)`, ordered by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &r)| (i, j, r))
    }

    /// Total Betti number `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .range((i, 0)..=(i, usize::MAX))
            .map(|(_, &r)| r)
            .sum()
    }

    /// Totals `β_0, …, β_pd`.
    pub fn totals(&self) -> Vec<u64> {
        (0..=self.pd()).map(|i| self.total(i)).collect()
    }

    /// Castelnuovo–Mumford regularity: `max{j − i : β_{i,j} ≠ 0}`.
    pub fn reg(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// Projective dimension: `max{i : β_{i,j} ≠ 0}`.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Same nonzero entries, ignoring the source tag.
    pub fn same_entries(&self, other: &BettiTable) -> bool {
        self.entries == other.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for BettiTable {
    /// Macaulay2-style table: rows are `j − i`, columns are `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pd = self.pd();
        let reg = self.reg();
        write!(f, "      ")?;
        for i in 0..=pd {
            write!(f, "{i:>5}")?;
        }
        writeln!(f)?;
        write!(f, "total:")?;
        for i in 0..=pd {
            write!(f, "{:>5}", self.total(i))?;
        }
        writeln!(f)?;
        for r in 0..=reg {
            write!(f, "{r:>5}:")?;
            for i in 0..=pd {
                match self.get(i, i + r) {
                    0 => write!(f, "{:>5}", ".")?,
                    v => write!(f, "{v:>5}")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reg_and_pd() {
        let mut t = BettiTable::new(BettiSource::LinearQuotients);
        t.add(0, 0, 1);
        t.add(1, 2, 4);
        t.add(2, 3, 4);
        t.add(2, 4, 0);
        t.add(3, 4, 1);
        assert_eq!(t.pd(), 3);
        assert_eq!(t.reg(), 1);
        assert_eq!(t.totals(), vec![1, 4, 4, 1]);
        assert_eq!(t.entries().count(), 4);
        let shown = t.to_string();
        assert!(shown.contains("total:    1    4    4    1"), "{shown}");
    }

    #[test]
    fn trivial_table() {
        let mut t = BettiTable::new(BettiSource::LinearQuotients);
        t.add(0, 0, 1);
        assert_eq!((t.reg(), t.pd()), (0, 0));
    }
}
