//! Graded Betti tables and the coefficient-field descriptor.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Coefficient field for homology: exact rationals (characteristic 0) or the
/// prime field F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    pub fn from_characteristic(c: u32) -> Result<FieldSpec> {
        if c == 0 {
            return Ok(FieldSpec::Rationals);
        }
        if !is_prime(c) {
            return Err(Error::Precondition(format!(
                "field characteristic must be 0 or prime, got {c}"
            )));
        }
        Ok(FieldSpec::Prime(c))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::Prime(p) => write!(f, "ZZ/{p}"),
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    let n = n as u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Graded Betti numbers of an ideal: `(homological index i, internal degree j)
/// -> count`, zero entries absent. The table of the zero ideal is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        BettiTable::default()
    }

    pub fn add(&mut self, i: usize, j: u32, count: u64) {
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    /// Total count in homological index `i` (row sum).
    pub fn row_total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(&(r, _), _)| r == i)
            .map(|(_, &c)| c)
            .sum()
    }

    /// Number of minimal generators recorded in the table.
    pub fn generator_count(&self) -> u64 {
        self.row_total(0)
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `max { j - i }` over nonzero entries; `None` for the empty table.
    pub fn regularity(&self) -> Option<i64> {
        self.entries
            .keys()
            .map(|&(i, j)| j as i64 - i as i64)
            .max()
    }

    /// True when every entry sits on the line `j = i + d`.
    pub fn is_linear(&self, d: u32) -> bool {
        self.entries.keys().all(|&(i, j)| j as i64 == i as i64 + d as i64)
    }

    /// Shift every internal degree by `delta` (used when a common monomial
    /// factor of degree `delta` has been divided out).
    pub fn shift_degrees(&self, delta: u32) -> BettiTable {
        let mut out = BettiTable::new();
        for (i, j, c) in self.entries() {
            out.add(i, j + delta, c);
        }
        out
    }

    /// JSON object keyed `"i,j" -> count`.
    pub fn to_json_map(&self) -> BTreeMap<String, u64> {
        self.entries
            .iter()
            .map(|(&(i, j), &c)| (format!("{i},{j}"), c))
            .collect()
    }

    /// Aligned table in the conventional layout: rows are homological indices,
    /// columns are slopes `j - i`.
    pub fn to_tsv(&self) -> String {
        if self.is_empty() {
            return "(empty)\n".to_string();
        }
        let imax = self.projective_dimension().unwrap();
        let smin = self
            .entries
            .keys()
            .map(|&(i, j)| j as i64 - i as i64)
            .min()
            .unwrap();
        let smax = self.regularity().unwrap();
        let mut out = String::from("i\\(j-i)");
        for s in smin..=smax {
            out.push_str(&format!("\t{s}"));
        }
        out.push('\n');
        for i in 0..=imax {
            out.push_str(&format!("{i}"));
            for s in smin..=smax {
                let j = i as i64 + s;
                let c = if j < 0 { 0 } else { self.get(i, j as u32) };
                if c == 0 {
                    out.push_str("\t.");
                } else {
                    out.push_str(&format!("\t{c}"));
                }
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_tsv())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_spec_validates() {
        assert_eq!(FieldSpec::from_characteristic(0).unwrap(), FieldSpec::Rationals);
        assert_eq!(FieldSpec::from_characteristic(2).unwrap(), FieldSpec::Prime(2));
        assert_eq!(FieldSpec::from_characteristic(32003).unwrap(), FieldSpec::Prime(32003));
        assert!(FieldSpec::from_characteristic(4).is_err());
        assert!(FieldSpec::from_characteristic(1).is_err());
    }

    #[test]
    fn regularity_and_linearity() {
        let mut t = BettiTable::new();
        t.add(0, 2, 2);
        t.add(1, 3, 1);
        assert_eq!(t.regularity(), Some(2));
        assert!(t.is_linear(2));
        t.add(1, 4, 1);
        assert_eq!(t.regularity(), Some(3));
        assert!(!t.is_linear(2));
        assert!(BettiTable::new().regularity().is_none());
    }

    #[test]
    fn json_keys_are_sorted() {
        let mut t = BettiTable::new();
        t.add(1, 3, 4);
        t.add(0, 2, 3);
        let keys: Vec<String> = t.to_json_map().into_keys().collect();
        assert_eq!(keys, vec!["0,2".to_string(), "1,3".to_string()]);
    }
}
