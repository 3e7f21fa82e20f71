//! Finite sample spaces with labelled points and point probabilities.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;
use crate::policy::NumericPolicy;

/// A finite universe `U = {u_0, …, u_{n−1}}` with point probabilities.
///
/// Labels are pairwise distinct; probabilities are non-negative and sum
/// to one within the policy's trace tolerance. When no probabilities
/// are supplied the points are equiprobable at `1/n`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteUniverse {
    labels: Vec<String>,
    probabilities: Vec<f64>,
}

impl FiniteUniverse {
    /// Builds a universe, defaulting to the equiprobable distribution
    /// when `probabilities` is `None`.
    pub fn new<I, S>(
        labels: I,
        probabilities: Option<Vec<f64>>,
        policy: &NumericPolicy,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = labels.len();
        if n == 0 {
            return Err(Error::EmptyUniverse);
        }
        if n > policy.max_dimension {
            return Err(Error::UniverseTooLarge {
                size: n,
                max: policy.max_dimension,
            });
        }
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel { index: i });
            }
        }
        let probabilities = match probabilities {
            Some(p) => {
                if p.len() != n {
                    return Err(Error::ProbabilityCountMismatch {
                        labels: n,
                        probabilities: p.len(),
                    });
                }
                for (i, &value) in p.iter().enumerate() {
                    if !value.is_finite() {
                        return Err(Error::NonFiniteValue { index: i });
                    }
                    if value < 0.0 {
                        return Err(Error::NegativeProbability { index: i, value });
                    }
                }
                let sum = math::compensated_sum(p.iter().copied());
                if math::abs(sum - 1.0) > policy.trace_tol {
                    return Err(Error::ProbabilitySum { sum });
                }
                p
            }
            None => {
                let p = 1.0 / n as f64;
                core::iter::repeat(p).take(n).collect()
            }
        };
        Ok(Self {
            labels,
            probabilities,
        })
    }

    /// Equiprobable universe over the given labels.
    pub fn equiprobable<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::new(labels, None, &NumericPolicy::DEFAULT)
    }

    /// Universe with explicit point probabilities.
    pub fn with_probabilities<I, S>(labels: I, probabilities: Vec<f64>) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::new(labels, Some(probabilities), &NumericPolicy::DEFAULT)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn probability(&self, index: usize) -> f64 {
        self.probabilities[index]
    }

    /// Checks that `event` is a set of in-range indices (order-free, no
    /// repeats) and returns it sorted.
    pub(crate) fn checked_subset(&self, event: &[usize]) -> Result<Vec<usize>> {
        let mut sorted: Vec<usize> = Vec::with_capacity(event.len());
        for &index in event {
            if index >= self.size() {
                return Err(Error::IndexOutOfRange {
                    index,
                    size: self.size(),
                });
            }
            sorted.push(index);
        }
        sorted.sort_unstable();
        for window in sorted.windows(2) {
            if window[0] == window[1] {
                return Err(Error::DuplicateIndex { index: window[0] });
            }
        }
        Ok(sorted)
    }

    /// Laplace–Boole probability of an event: `Pr(S) = Σ_{i∈S} p_i`.
    ///
    /// The sum is compensated, so e.g. `Pr(U) = 1` holds exactly for
    /// equiprobable universes of any desk-scale size.
    pub fn event_probability(&self, event: &[usize]) -> Result<f64> {
        let sorted = self.checked_subset(event)?;
        if sorted.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(math::compensated_sum(
            sorted.iter().map(|&i| self.probabilities[i]),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::sync::Arc;
    use alloc::vec;

    fn abcd() -> Arc<FiniteUniverse> {
        Arc::new(FiniteUniverse::equiprobable(["a", "b", "c", "d"]).unwrap())
    }

    #[test]
    fn equiprobable_defaults_to_one_over_n() {
        let u = abcd();
        assert_eq!(u.size(), 4);
        assert_eq!(u.probabilities(), &[0.25, 0.25, 0.25, 0.25]);
    }

    #[test]
    fn rejects_duplicate_labels() {
        let err = FiniteUniverse::equiprobable(["a", "b", "a"]).unwrap_err();
        assert_eq!(err, Error::DuplicateLabel { index: 2 });
    }

    #[test]
    fn rejects_empty_universe() {
        let err = FiniteUniverse::equiprobable(Vec::<String>::new()).unwrap_err();
        assert_eq!(err, Error::EmptyUniverse);
    }

    #[test]
    fn rejects_oversized_universe() {
        let labels: Vec<String> = (0..65).map(|i| alloc::format!("u{i}")).collect();
        let err = FiniteUniverse::equiprobable(labels).unwrap_err();
        assert_eq!(err, Error::UniverseTooLarge { size: 65, max: 64 });
    }

    #[test]
    fn rejects_bad_probability_vectors() {
        assert_eq!(
            FiniteUniverse::with_probabilities(["a", "b"], vec![0.5]).unwrap_err(),
            Error::ProbabilityCountMismatch {
                labels: 2,
                probabilities: 1
            }
        );
        assert_eq!(
            FiniteUniverse::with_probabilities(["a", "b"], vec![1.5, -0.5]).unwrap_err(),
            Error::NegativeProbability {
                index: 1,
                value: -0.5
            }
        );
        assert_eq!(
            FiniteUniverse::with_probabilities(["a", "b"], vec![0.7, 0.7]).unwrap_err(),
            Error::ProbabilitySum { sum: 1.4 }
        );
    }

    #[test]
    fn event_probability_is_the_event_mass() {
        let u = abcd();
        assert_eq!(u.event_probability(&[0, 1]).unwrap(), 0.5);
        assert_eq!(u.event_probability(&[0, 1, 2, 3]).unwrap(), 1.0);

        let v = FiniteUniverse::with_probabilities(["u1", "u2", "u3"], vec![0.5, 0.25, 0.25])
            .unwrap();
        assert_eq!(v.event_probability(&[0, 1]).unwrap(), 0.75);
    }

    #[test]
    fn event_probability_error_paths() {
        let u = abcd();
        assert_eq!(u.event_probability(&[]).unwrap_err(), Error::EmptySet);
        assert_eq!(
            u.event_probability(&[4]).unwrap_err(),
            Error::IndexOutOfRange { index: 4, size: 4 }
        );
        assert_eq!(
            u.event_probability(&[1, 1]).unwrap_err(),
            Error::DuplicateIndex { index: 1 }
        );
    }
}
