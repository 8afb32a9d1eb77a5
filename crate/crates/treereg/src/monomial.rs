//! Exact monomial and monomial-ideal arithmetic.
//!
//! A [`Monomial`] is an exponent vector over a fixed ambient variable set; a
//! [`MonomialIdeal`] is held as its unique minimal generating set, kept in a
//! canonical order (degree, then lexicographic on exponent vectors) so every
//! downstream report is deterministic.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A monomial, stored as one exponent per ambient variable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The monomial 1 in `ambient` variables.
    pub fn unit(ambient: usize) -> Self {
        Monomial { exps: vec![0; ambient] }
    }

    /// The single variable `x_index`.
    pub fn variable(index: usize, ambient: usize) -> Self {
        assert!(index < ambient, "variable index out of range");
        let mut exps = vec![0; ambient];
        exps[index] = 1;
        Monomial { exps }
    }

    /// Squarefree monomial with support `vars`.
    pub fn squarefree<I: IntoIterator<Item = usize>>(vars: I, ambient: usize) -> Self {
        let mut exps = vec![0; ambient];
        for v in vars {
            assert!(v < ambient, "variable index out of range");
            exps[v] = 1;
        }
        Monomial { exps }
    }

    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.ambient(), other.ambient(), "ambient mismatch in mul");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial { exps: self.exps.iter().map(|e| e * k).collect() }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.ambient() == other.ambient()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.ambient(), other.ambient(), "ambient mismatch in gcd");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.ambient(), other.ambient(), "ambient mismatch in lcm");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// Generator of the colon `(self) : other`, i.e. `self / gcd(self, other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        self.try_div(&self.gcd(other)).expect("gcd divides")
    }
}

impl Ord for Monomial {
    // Canonical order: degree first, then lexicographic on exponent vectors
    // with earlier variables first, so x1*x2 precedes x2*x3.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            // 1-based variable names at the boundary.
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.exps.len()))?;
        for e in &self.exps {
            seq.serialize_element(e)?;
        }
        seq.end()
    }
}

/// A monomial ideal, represented by its minimal generating set.
///
/// The zero ideal has an empty generating set; the unit ideal is generated by
/// the degree-0 monomial alone. Generators are kept sorted by degree then
/// lexicographically on exponent vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ambient: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(ambient: usize) -> Self {
        MonomialIdeal { ambient, gens: Vec::new() }
    }

    pub fn unit_ideal(ambient: usize) -> Self {
        MonomialIdeal { ambient, gens: vec![Monomial::unit(ambient)] }
    }

    pub fn principal(m: Monomial) -> Self {
        let ambient = m.ambient();
        MonomialIdeal { ambient, gens: vec![m] }
    }

    /// Build an ideal from an arbitrary generating set by discarding every
    /// monomial divisible by another. Every input monomial remains divisible
    /// by some surviving generator.
    pub fn minimalize(ambient: usize, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.ambient() != ambient {
                return Err(Error::AmbientMismatch { left: ambient, right: g.ambient() });
            }
        }
        Ok(Self::minimalize_unchecked(ambient, gens))
    }

    fn minimalize_unchecked(ambient: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort();
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        // Sorted by degree, so a divisor always precedes its multiples.
        for g in gens {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        MonomialIdeal { ambient, gens: kept }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Membership test: `m` lies in the ideal iff some generator divides it.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Variables appearing in at least one generator, ascending.
    pub fn used_variables(&self) -> Vec<usize> {
        let mut used = vec![false; self.ambient];
        for g in &self.gens {
            for v in g.support() {
                used[v] = true;
            }
        }
        used.iter()
            .enumerate()
            .filter(|(_, &u)| u)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Self::minimalize_unchecked(self.ambient, gens))
    }

    pub fn product(&self, other: &MonomialIdeal, cap: usize) -> Result<MonomialIdeal> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        let pairs = self.gens.len().saturating_mul(other.gens.len());
        if pairs > cap.saturating_mul(4) {
            return Err(Error::ResourceCap(format!(
                "ideal product would form {pairs} pairwise products (cap {cap})"
            )));
        }
        let mut gens = Vec::with_capacity(pairs);
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        let result = Self::minimalize_unchecked(self.ambient, gens);
        if result.num_generators() > cap {
            return Err(Error::ResourceCap(format!(
                "ideal product has {} minimal generators (cap {cap})",
                result.num_generators()
            )));
        }
        Ok(result)
    }

    /// `self^s` for `s >= 1`, minimalized at every step.
    ///
    /// The generator count of a power grows combinatorially, so the result
    /// (and each intermediate product) is guarded by `cap`; exceeding it is a
    /// clean error, never a truncation.
    pub fn power(&self, s: u32, cap: usize) -> Result<MonomialIdeal> {
        if s == 0 {
            return Err(Error::Precondition("ideal power requires s >= 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..s {
            acc = acc.product(self, cap)?;
        }
        Ok(acc)
    }

    /// Colon by a single monomial: minimalize of `{ g / gcd(g, m) }`.
    pub fn colon_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.ambient() != self.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: m.ambient() });
        }
        let gens = self.gens.iter().map(|g| g.colon(m)).collect();
        Ok(Self::minimalize_unchecked(self.ambient, gens))
    }

    /// The common degree of the minimal generators, or `None` when they mix
    /// degrees. The zero ideal has no generation degree at all.
    pub fn equigenerated_degree(&self) -> Result<Option<u32>> {
        if self.is_zero() {
            return Err(Error::Precondition(
                "equigenerated degree of the zero ideal is undefined".into(),
            ));
        }
        let d = self.gens[0].degree();
        Ok(self.gens.iter().all(|g| g.degree() == d).then_some(d))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.gens.len()))?;
        for g in &self.gens {
            seq.serialize_element(g)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn minimalize_drops_multiples() {
        // {x2, x1*x2} -> {x2}
        let ideal = MonomialIdeal::minimalize(2, vec![m(&[0, 1]), m(&[1, 1])]).unwrap();
        assert_eq!(ideal.generators(), &[m(&[0, 1])]);
        // incomparable pair survives
        let ideal = MonomialIdeal::minimalize(3, vec![m(&[1, 1, 0]), m(&[0, 1, 1])]).unwrap();
        assert_eq!(ideal.num_generators(), 2);
        // the unit absorbs everything
        let ideal = MonomialIdeal::minimalize(1, vec![m(&[0]), m(&[1])]).unwrap();
        assert!(ideal.is_unit());
    }

    #[test]
    fn minimalize_rejects_mixed_ambients() {
        let err = MonomialIdeal::minimalize(2, vec![m(&[1, 0]), m(&[1])]).unwrap_err();
        assert!(matches!(err, Error::AmbientMismatch { .. }));
    }

    #[test]
    fn power_of_two_variables() {
        // (x, y)^2 = (x^2, xy, y^2)
        let ideal = MonomialIdeal::minimalize(2, vec![m(&[1, 0]), m(&[0, 1])]).unwrap();
        let sq = ideal.power(2, 1000).unwrap();
        assert_eq!(sq.generators(), &[m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
    }

    #[test]
    fn power_of_path_edge_ideal() {
        // (x1x2, x2x3)^2: all pairwise products, then minimalize.
        let ideal = MonomialIdeal::minimalize(3, vec![m(&[1, 1, 0]), m(&[0, 1, 1])]).unwrap();
        let sq = ideal.power(2, 1000).unwrap();
        assert_eq!(
            sq.generators(),
            &[m(&[2, 2, 0]), m(&[1, 2, 1]), m(&[0, 2, 2])]
        );
    }

    #[test]
    fn power_one_is_identity() {
        let ideal = MonomialIdeal::minimalize(3, vec![m(&[1, 1, 0]), m(&[0, 1, 1])]).unwrap();
        assert_eq!(ideal.power(1, 1000).unwrap(), ideal);
    }

    #[test]
    fn power_cap_is_a_clean_error() {
        let ideal = MonomialIdeal::minimalize(
            4,
            vec![m(&[1, 0, 0, 0]), m(&[0, 1, 0, 0]), m(&[0, 0, 1, 0]), m(&[0, 0, 0, 1])],
        )
        .unwrap();
        let err = ideal.power(5, 10).unwrap_err();
        assert!(matches!(err, Error::ResourceCap(_)));
    }

    #[test]
    fn colon_examples() {
        // (x1x2, x2x3) : x3 = (x2)
        let ideal = MonomialIdeal::minimalize(3, vec![m(&[1, 1, 0]), m(&[0, 1, 1])]).unwrap();
        let colon = ideal.colon_monomial(&m(&[0, 0, 1])).unwrap();
        assert_eq!(colon.generators(), &[m(&[0, 1, 0])]);
        // I : 1 = I
        assert_eq!(ideal.colon_monomial(&Monomial::unit(3)).unwrap(), ideal);
        // (x1x2, x2x3)^2 : x2x3 = (x1x2, x2x3)
        let sq = ideal.power(2, 1000).unwrap();
        assert_eq!(sq.colon_monomial(&m(&[0, 1, 1])).unwrap(), ideal);
    }

    #[test]
    fn sum_examples() {
        let a = MonomialIdeal::principal(m(&[1, 0]));
        let b = MonomialIdeal::principal(m(&[1, 1]));
        assert_eq!(a.sum(&b).unwrap(), a); // absorption
        let c = MonomialIdeal::principal(m(&[0, 1]));
        assert_eq!(a.sum(&c).unwrap().num_generators(), 2);
        let zero = MonomialIdeal::zero(2);
        assert_eq!(zero.sum(&a).unwrap(), a);
    }

    #[test]
    fn equigenerated_degree_examples() {
        let ideal = MonomialIdeal::minimalize(3, vec![m(&[1, 1, 0]), m(&[0, 1, 1])]).unwrap();
        assert_eq!(ideal.equigenerated_degree().unwrap(), Some(2));
        let mixed = MonomialIdeal::minimalize(3, vec![m(&[1, 0, 0]), m(&[0, 1, 1])]).unwrap();
        assert_eq!(mixed.equigenerated_degree().unwrap(), None);
        let tri = MonomialIdeal::principal(m(&[1, 1, 1]));
        assert_eq!(tri.equigenerated_degree().unwrap(), Some(3));
        assert!(MonomialIdeal::zero(2).equigenerated_degree().is_err());
    }

    #[test]
    fn canonical_order_is_degree_then_lex() {
        let ideal = MonomialIdeal::minimalize(
            2,
            vec![m(&[2, 0]), m(&[0, 1])],
        )
        .unwrap();
        assert_eq!(ideal.generators(), &[m(&[0, 1]), m(&[2, 0])]);
    }

    #[test]
    fn display_is_one_based() {
        assert_eq!(m(&[1, 0, 2]).to_string(), "x1*x3^2");
        assert_eq!(Monomial::unit(3).to_string(), "1");
    }
}
