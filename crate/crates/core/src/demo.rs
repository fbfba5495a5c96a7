//! Ready-made instances: crisp sets over `D*(2)` and the interval
//! partial metric over the Lawvere quantale.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::qcat::QCategory;
use crate::quantale::FiniteQuantale;
use crate::quantale::LawvereValue;
use crate::quantaloid::{build_dstar, Quantaloid};

/// `D*(2)`.
pub fn dstar_boolean() -> Arc<Quantaloid> {
    Arc::new(build_dstar(Arc::new(FiniteQuantale::boolean2())).expect("D*(2) is well formed"))
}

/// The crisp set with `n` elements over `D*(2)`: `α(x, y) = 1` iff `x = y`.
pub fn crisp_set(n: usize) -> Result<QCategory> {
    let k = dstar_boolean();
    let q = k.base().clone();
    let (one, zero) = (q.unit_elem(), q.bottom_elem());
    let labels = (0..n).map(|i| format!("x{i}")).collect();
    let alpha = (0..n * n)
        .map(|i| if i / n == i % n { one } else { zero })
        .collect();
    QCategory::from_qset(k, labels, alpha)
}

/// A closed interval `[lo, hi]` with rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: LawvereValue,
    pub hi: LawvereValue,
}

impl Interval {
    pub fn label(&self) -> String {
        format!("[{}, {}]", self.lo, self.hi)
    }
}

/// `n` seeded intervals with endpoints in `{0, 1/6, 2/6, …, 4}`.
pub fn sample_intervals(n: usize, seed: u64) -> Vec<Interval> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let a: i64 = rng.random_range(0..=24);
            let b: i64 = rng.random_range(a..=24);
            Interval {
                lo: LawvereValue::ratio(a, 6),
                hi: LawvereValue::ratio(b, 6),
            }
        })
        .collect()
}

/// The partial metric `α([a,b], [c,d]) = b∨d − a∧c` (numeric max and min).
pub fn interval_partial_metric(xs: &[Interval]) -> Vec<Vec<LawvereValue>> {
    xs.iter()
        .map(|x| {
            xs.iter()
                .map(|y| {
                    x.hi.numeric_max(&y.hi)
                        .truncated_sub(&x.lo.numeric_min(&y.lo))
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcat::validate_qset;
    use crate::quantale::Lawvere;

    #[test]
    fn crisp_set_is_a_separated_qset() {
        let x = crisp_set(3).unwrap();
        assert!(x.is_valid() && x.is_symmetric() && x.is_separated());
    }

    #[test]
    fn interval_self_distance_is_the_length() {
        let xs = sample_intervals(5, 1);
        let alpha = interval_partial_metric(&xs);
        for (i, x) in xs.iter().enumerate() {
            assert_eq!(alpha[i][i], x.hi.truncated_sub(&x.lo));
        }
        let labels: Vec<String> = xs.iter().map(Interval::label).collect();
        assert!(validate_qset(&Lawvere, &labels, &alpha).passed());
    }

    #[test]
    fn samples_are_reproducible() {
        assert_eq!(sample_intervals(20, 9), sample_intervals(20, 9));
    }
}
