//! Subsets as vectors: the toy model over Z₂.
//!
//! Treating each subset `S ⊆ U` as a vector (its indicator over Z₂)
//! gives a pedagogical halfway house between sets and Hilbert space:
//! the norm is `‖S‖ = √|S|`, the bracket is the overlap amplitude
//! `‖S∩T‖ = √|S∩T|`, vector addition is symmetric difference, and the
//! classical Born rule `Pr(u_i|S) = 1/|S|` falls out of normalizing the
//! squared overlaps. Point probabilities play no role here: this model
//! is uniform by construction, and weighted events are handled by the
//! density-matrix layer instead.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;
use crate::universe::FiniteUniverse;

/// A subset of the universe read as a vector of Z₂ⁿ. The empty support
/// is allowed: it is the zero vector.
#[derive(Debug, Clone, PartialEq)]
pub struct SetKet {
    universe: Arc<FiniteUniverse>,
    support: Vec<usize>,
}

impl SetKet {
    pub fn new(universe: &Arc<FiniteUniverse>, support: &[usize]) -> Result<Self> {
        let sorted = universe.checked_subset(support)?;
        Ok(Self {
            universe: Arc::clone(universe),
            support: sorted,
        })
    }

    /// The zero vector.
    pub fn empty(universe: &Arc<FiniteUniverse>) -> Self {
        Self {
            universe: Arc::clone(universe),
            support: Vec::new(),
        }
    }

    /// The full universe as a ket.
    pub fn full(universe: &Arc<FiniteUniverse>) -> Self {
        Self {
            universe: Arc::clone(universe),
            support: (0..universe.size()).collect(),
        }
    }

    pub fn universe(&self) -> &Arc<FiniteUniverse> {
        &self.universe
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn cardinality(&self) -> usize {
        self.support.len()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.support.binary_search(&index).is_ok()
    }

    /// `‖S‖ = √|S|`.
    pub fn norm(&self) -> f64 {
        math::sqrt(self.cardinality() as f64)
    }

    /// Overlap amplitude `‖S∩T‖ = √|S∩T|`: the indistinctness of the
    /// two sets. Zero iff the sets are disjoint — then a draw from `S`
    /// can always be told apart from a draw from `T`.
    pub fn overlap(&self, other: &SetKet) -> Result<f64> {
        Ok(math::sqrt(self.intersection_size(other)? as f64))
    }

    fn intersection_size(&self, other: &SetKet) -> Result<usize> {
        if self.universe.as_ref() != other.universe.as_ref() {
            return Err(Error::UniverseMismatch);
        }
        Ok(self.support.iter().filter(|i| other.contains(**i)).count())
    }

    /// Classical Born rule: `Pr(u_i|S) = |{u_i}∩S| / |S|`, i.e. `1/|S|`
    /// for members and `0` otherwise.
    pub fn born(&self, index: usize) -> Result<f64> {
        if index >= self.universe.size() {
            return Err(Error::IndexOutOfRange {
                index,
                size: self.universe.size(),
            });
        }
        if self.support.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(if self.contains(index) {
            1.0 / self.cardinality() as f64
        } else {
            0.0
        })
    }

    /// The whole Born distribution over the universe.
    pub fn born_distribution(&self) -> Result<Vec<f64>> {
        (0..self.universe.size()).map(|i| self.born(i)).collect()
    }

    /// Vector addition over Z₂: indicator addition mod 2, which is the
    /// symmetric difference of the supports. Every ket is its own
    /// inverse (`S + S = 0`).
    pub fn z2_add(&self, other: &SetKet) -> Result<SetKet> {
        if self.universe.as_ref() != other.universe.as_ref() {
            return Err(Error::UniverseMismatch);
        }
        let support: Vec<usize> = (0..self.universe.size())
            .filter(|&i| self.contains(i) != other.contains(i))
            .collect();
        Ok(Self {
            universe: Arc::clone(&self.universe),
            support,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn universe(n: usize) -> Arc<FiniteUniverse> {
        Arc::new(
            FiniteUniverse::equiprobable((0..n).map(|i| alloc::format!("u{}", i + 1))).unwrap(),
        )
    }

    #[test]
    fn norms_are_sqrt_cardinalities() {
        let u = universe(6);
        assert_eq!(SetKet::new(&u, &[0, 1, 2, 3]).unwrap().norm(), 2.0);
        assert_eq!(SetKet::empty(&u).norm(), 0.0);
        assert_eq!(SetKet::new(&u, &[3]).unwrap().norm(), 1.0);
    }

    #[test]
    fn overlap_examples() {
        let u = universe(4);
        let s = SetKet::new(&u, &[0, 1, 2]).unwrap();
        let t = SetKet::new(&u, &[1, 2, 3]).unwrap();
        assert_abs_diff_eq!(s.overlap(&t).unwrap(), 2.0_f64.sqrt(), epsilon = 1e-15);
        assert_eq!(s.overlap(&s).unwrap(), s.norm());

        let disjoint = SetKet::new(&u, &[3]).unwrap();
        assert_eq!(SetKet::new(&u, &[0, 1]).unwrap().overlap(&disjoint).unwrap(), 0.0);

        let v = universe(3);
        assert_eq!(
            s.overlap(&SetKet::full(&v)).unwrap_err(),
            Error::UniverseMismatch
        );
    }

    #[test]
    fn born_rule_examples() {
        let u = universe(6);
        let s = SetKet::new(&u, &[0, 2, 3, 5]).unwrap();
        assert_eq!(s.born(0).unwrap(), 0.25);
        assert_eq!(s.born(1).unwrap(), 0.0);
        let singleton = SetKet::new(&u, &[4]).unwrap();
        assert_eq!(singleton.born(4).unwrap(), 1.0);
        assert_eq!(SetKet::empty(&u).born(0).unwrap_err(), Error::EmptySet);

        let distribution = s.born_distribution().unwrap();
        assert_abs_diff_eq!(distribution.iter().sum::<f64>(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn z2_addition_is_symmetric_difference() {
        let u = universe(4);
        let s = SetKet::new(&u, &[0, 1]).unwrap();
        let t = SetKet::new(&u, &[1, 2]).unwrap();
        assert_eq!(s.z2_add(&t).unwrap().support(), &[0, 2]);
        assert_eq!(s.z2_add(&s).unwrap(), SetKet::empty(&u));
        assert_eq!(s.z2_add(&SetKet::empty(&u)).unwrap(), s);
    }
}
