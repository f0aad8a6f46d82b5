//! Graded Betti tables.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::tpoly::TPoly;

/// `beta_{i,j}`: the number of degree-`j` generators in homological degree `i`
/// of a minimal free resolution. Only positive counts are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), usize>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, u32), usize)>) -> Self {
        let mut t = Self::new();
        for ((i, j), c) in entries {
            t.add(i, j, c);
        }
        t
    }

    pub fn add(&mut self, i: usize, j: u32, count: usize) {
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    pub fn get(&self, i: usize, j: u32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, u32), usize> {
        &self.entries
    }

    /// Projective dimension: the largest `i` with a nonzero entry.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    /// Regularity: the largest `j - i` with a nonzero entry.
    pub fn reg(&self) -> i64 {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max().unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|(k, _)| k.0 == i).map(|(_, c)| c).sum()
    }

    pub fn totals(&self) -> Vec<usize> {
        (0..=self.pd()).map(|i| self.total(i)).collect()
    }

    /// `sum (-1)^i beta_{i,j} t^j`, the Hilbert series numerator over `(1-t)^n`.
    pub fn hilbert_numerator(&self) -> TPoly {
        let mut k = TPoly::zero();
        for (&(i, j), &c) in &self.entries {
            let c = c as i64;
            k.add_term(j as usize, if i % 2 == 0 { c } else { -c });
        }
        k
    }

    /// True if `beta_{i,j} = 0` for every `j > 2i`.
    pub fn is_subdiagonal(&self) -> bool {
        self.entries.keys().all(|&(i, j)| j as usize <= 2 * i)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<[u64; 3]> = self.entries.iter().map(|(&(i, j), &c)| [i as u64, j as u64, c as u64]).collect();
        json!({ "entries": entries, "pd": self.pd(), "reg": self.reg() })
    }

    pub fn from_json(v: &serde_json::Value) -> Option<Self> {
        let mut t = Self::new();
        for e in v.get("entries")?.as_array()? {
            let e = e.as_array()?;
            if e.len() != 3 {
                return None;
            }
            t.add(e[0].as_u64()? as usize, e[1].as_u64()? as u32, e[2].as_u64()? as usize);
        }
        Some(t)
    }

    /// The rows of [`Self::to_ascii`] on one line, without headers:
    /// `1 - -; - 2 1`.
    pub fn to_compact(&self) -> String {
        let cols = self.pd() + 1;
        (0..=self.reg().max(0) as usize)
            .map(|r| {
                (0..cols)
                    .map(|i| match self.get(i, (i + r) as u32) {
                        0 => "-".to_string(),
                        c => c.to_string(),
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("; ")
    }

    /// The usual layout: row `j - i`, column `i`, with `zero` for empty cells.
    pub fn to_ascii(&self, zero: &str) -> String {
        let cols = self.pd() + 1;
        let rows = self.reg().max(0) as usize + 1;
        let mut cells: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((0..cols).map(|i| i.to_string()));
        cells.push(header);
        for r in 0..rows {
            let mut line = vec![format!("{r}:")];
            for i in 0..cols {
                let c = self.get(i, (i + r) as u32);
                line.push(if c == 0 { zero.to_string() } else { c.to_string() });
            }
            cells.push(line);
        }
        let mut tot = vec!["total:".to_string()];
        tot.extend(self.totals().iter().map(|t| t.to_string()));
        cells.push(tot);
        let width: Vec<usize> = (0..=cols).map(|c| cells.iter().map(|l| l[c].chars().count()).max().unwrap()).collect();
        let mut out = String::new();
        for line in &cells {
            let parts: Vec<String> = line
                .iter()
                .enumerate()
                .map(|(c, s)| format!("{s:>w$}", w = width[c]))
                .collect();
            out.push_str(parts.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii("--"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn filtration_example() -> BettiTable {
        BettiTable::from_entries([((0, 0), 1), ((1, 2), 5), ((2, 3), 4), ((2, 4), 4), ((3, 5), 6), ((4, 6), 2)])
    }

    #[test]
    fn derived_values() {
        let t = filtration_example();
        assert_eq!(t.pd(), 4);
        assert_eq!(t.reg(), 2);
        assert_eq!(t.totals(), vec![1, 5, 8, 6, 2]);
        assert!(t.is_subdiagonal());
        // (1+2t-2t^2-2t^3+2t^4)(1-t)^2
        let h = TPoly::from_coeffs(vec![1, 2, -2, -2, 2]);
        let sq = TPoly::one_minus_t_pow(1).mul(&TPoly::one_minus_t_pow(1));
        assert_eq!(t.hilbert_numerator(), h.mul(&sq));
    }

    #[test]
    fn json_round_trip() {
        let t = filtration_example();
        let v = t.to_json();
        assert_eq!(v["pd"], 4);
        assert_eq!(v["entries"][1], json!([1, 2, 5]));
        assert_eq!(BettiTable::from_json(&v), Some(t));
    }

    #[test]
    fn ascii_layout() {
        let s = filtration_example().to_ascii("--");
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[1].split_whitespace().collect::<Vec<_>>(), ["0:", "1", "--", "--", "--", "--"]);
        assert_eq!(lines[2].split_whitespace().collect::<Vec<_>>(), ["1:", "--", "5", "4", "--", "--"]);
        assert_eq!(lines[3].split_whitespace().collect::<Vec<_>>(), ["2:", "--", "--", "4", "6", "2"]);
    }
}
