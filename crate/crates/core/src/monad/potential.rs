//! Potential subsets of a quantale-valued set, checked directly in the base
//! quantale.
//!
//! A pair `(μ, q)` with `q` hermitian is a potential subset of `(X, α)` when
//!
//! * (P1) `μ(x) ≤ α(x, x) ∧ q`,
//! * (P2) `(μ(x) / α(x, x)) & α(x, x) = μ(x) = q & (q \ μ(x))`,
//! * (P3) `(μ(y) / α(y, y)) & α(x, y) = μ(y) & (α(y, y) \ α(x, y)) ≤ μ(x)`.
//!
//! The checker is generic over [`Quantale`] so it also runs on the Lawvere
//! backend; enumeration needs a finite quantale.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::quantale::{hermitian_elements, Elem, FiniteQuantale, Quantale};
use crate::report::{CheckBuilder, LawReport, Witness};

/// A candidate pair `(μ, q)`. Equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PotentialSubset<E> {
    pub q: E,
    pub mu: Vec<E>,
}

impl PotentialSubset<Elem> {
    pub fn render(&self, q: &FiniteQuantale, labels: &[String]) -> String {
        let body = self
            .mu
            .iter()
            .zip(labels)
            .map(|(v, l)| format!("{l}:{}", q.name_of(*v)))
            .join(", ");
        format!("([{body}], {})", q.name_of(self.q))
    }

    /// Elements `x` with `μ(x)` different from bottom.
    pub fn support(&self, q: &FiniteQuantale) -> Vec<usize> {
        let bot = q.bottom_elem();
        (0..self.mu.len()).filter(|&i| self.mu[i] != bot).collect()
    }
}

/// Checks (P1)-(P3) elementwise, including both equalities of (P2) and the
/// internal equality of (P3), and that `q` is hermitian.
pub fn check_potential_subset<Q: Quantale>(
    q: &Q,
    labels: &[String],
    alpha: &[Vec<Q::Elem>],
    cand: &PotentialSubset<Q::Elem>,
) -> LawReport {
    let n = labels.len();
    let mut report = LawReport::new("potential_subset");
    let mut shape = CheckBuilder::new("potential.shape");
    shape.case(cand.mu.len() == n && alpha.len() == n, || {
        Witness::new()
            .with("labels", n)
            .with("mu_len", cand.mu.len())
    });
    let shape = shape.finish();
    if !shape.passed() {
        report.push(shape);
        return report;
    }
    report.push(shape);
    let sh = |e: &Q::Elem| q.show(e);
    let qq = &cand.q;

    let mut herm = CheckBuilder::new("potential.q_hermitian");
    let qinv = q.involution(qq);
    herm.case(&qinv == qq, || {
        Witness::new().with("q", sh(qq)).with("q°", sh(&qinv))
    });
    report.push(herm.finish());

    let mut p1 = CheckBuilder::new("potential.p1_bound");
    let mut p2 = CheckBuilder::new("potential.p2_divisibility");
    for x in 0..n {
        let (m, axx) = (&cand.mu[x], &alpha[x][x]);
        let bound = q.meet(axx, qq);
        p1.case(q.le(m, &bound), || {
            Witness::new()
                .with("x", &labels[x])
                .with("mu(x)", sh(m))
                .with("alpha(x,x)∧q", sh(&bound))
        });
        let left = q.mul(&q.left_imp(m, axx), axx);
        let right = q.mul(qq, &q.right_imp(qq, m));
        p2.case(&left == m && &right == m, || {
            Witness::new()
                .with("x", &labels[x])
                .with("mu(x)", sh(m))
                .with("(mu(x)/alpha(x,x))&alpha(x,x)", sh(&left))
                .with("q&(q\\mu(x))", sh(&right))
        });
    }
    report.push(p1.finish());
    report.push(p2.finish());

    let mut p3 = CheckBuilder::new("potential.p3_extent");
    for x in 0..n {
        for y in 0..n {
            let (my, ayy, axy) = (&cand.mu[y], &alpha[y][y], &alpha[x][y]);
            let first = q.mul(&q.left_imp(my, ayy), axy);
            let second = q.mul(my, &q.right_imp(ayy, axy));
            p3.case(first == second && q.le(&first, &cand.mu[x]), || {
                Witness::new()
                    .with("x", &labels[x])
                    .with("y", &labels[y])
                    .with("(mu(y)/alpha(y,y))&alpha(x,y)", sh(&first))
                    .with("mu(y)&(alpha(y,y)\\alpha(x,y))", sh(&second))
                    .with("mu(x)", sh(&cand.mu[x]))
            });
        }
    }
    report.push(p3.finish());
    report
}

/// Whether a candidate passes (P1)-(P3) with hermitian `q`.
pub fn is_potential_subset<Q: Quantale>(
    q: &Q,
    alpha: &[Vec<Q::Elem>],
    cand: &PotentialSubset<Q::Elem>,
) -> bool {
    let labels: Vec<String> = (0..alpha.len()).map(|i| i.to_string()).collect();
    check_potential_subset(q, &labels, alpha, cand).passed()
}

/// All potential subsets of a finite `Q`-set, sorted by `(q, μ)`.
///
/// Candidates are filtered per element by (P1) and (P2), then the product is
/// filtered by (P3). Fails with a capacity error when the product of the
/// per-element candidate counts exceeds `cap`.
pub fn enumerate_potential_subsets(
    q: &FiniteQuantale,
    alpha: &[Vec<Elem>],
    cap: usize,
) -> Result<Vec<PotentialSubset<Elem>>> {
    let n = alpha.len();
    let mut out = Vec::new();
    let mut per_q = Vec::new();
    let mut total: u128 = 0;
    for qh in hermitian_elements(q) {
        let slots: Vec<Vec<Elem>> = (0..n)
            .map(|x| {
                let axx = alpha[x][x];
                q.elems()
                    .filter(|&m| {
                        q.leq(m, q.meet2(axx, qh))
                            && q.mul2(q.limp(m, axx), axx) == m
                            && q.mul2(qh, q.rimp(qh, m)) == m
                    })
                    .collect()
            })
            .collect();
        total += slots.iter().map(|s| s.len() as u128).product::<u128>();
        per_q.push((qh, slots));
    }
    if total > cap as u128 {
        return Err(Error::Capacity {
            what: "potential subsets".into(),
            cap,
            estimate: format!("{total} candidate maps"),
        });
    }
    let p3 = |mu: &[Elem]| {
        (0..n).all(|x| {
            (0..n).all(|y| {
                let (ayy, axy) = (alpha[y][y], alpha[x][y]);
                let first = q.mul2(q.limp(mu[y], ayy), axy);
                first == q.mul2(mu[y], q.rimp(ayy, axy)) && q.leq(first, mu[x])
            })
        })
    };
    for (qh, slots) in per_q {
        for mu in product(slots) {
            if p3(&mu) {
                out.push(PotentialSubset { q: qh, mu });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `multi_cartesian_product` yields nothing for zero factors; the empty
/// product has exactly one element.
fn product(slots: Vec<Vec<Elem>>) -> Box<dyn Iterator<Item = Vec<Elem>>> {
    if slots.is_empty() {
        Box::new(std::iter::once(Vec::new()))
    } else {
        Box::new(slots.into_iter().multi_cartesian_product())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantale::{Lawvere, LawvereValue};
    use crate::report::Status;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("x{i}")).collect()
    }

    #[test]
    fn equivalence_relation_gives_unions_of_classes() {
        let q = FiniteQuantale::boolean2();
        let (o, z) = (q.elem_by_name("1").unwrap(), q.elem_by_name("0").unwrap());
        // classes {x0, x1}, {x2}; x3 does not exist
        let alpha = vec![
            vec![o, o, z, z],
            vec![o, o, z, z],
            vec![z, z, o, z],
            vec![z, z, z, z],
        ];
        let ps = enumerate_potential_subsets(&q, &alpha, 1000).unwrap();
        // (∅, 0) plus (U, 1) for U in {∅, {x0,x1}, {x2}, {x0,x1,x2}}
        assert_eq!(ps.len(), 5);
        assert_eq!(
            ps[0],
            PotentialSubset {
                q: z,
                mu: vec![z; 4]
            }
        );
        for p in &ps[1..] {
            assert_eq!(p.q, o);
            assert_eq!(p.mu[0], p.mu[1]);
            assert_eq!(p.mu[3], z);
        }
    }

    #[test]
    fn separated_global_set_of_three() {
        let q = FiniteQuantale::boolean2();
        let (o, z) = (q.elem_by_name("1").unwrap(), q.elem_by_name("0").unwrap());
        let alpha: Vec<Vec<Elem>> = (0..3)
            .map(|i| (0..3).map(|j| if i == j { o } else { z }).collect())
            .collect();
        assert_eq!(
            enumerate_potential_subsets(&q, &alpha, 1000).unwrap().len(),
            9
        );
        let r = enumerate_potential_subsets(&q, &alpha, 4);
        assert!(matches!(r, Err(Error::Capacity { .. })));
    }

    #[test]
    fn empty_set_has_one_subset_per_hermitian() {
        let q = FiniteQuantale::chain_lukasiewicz(3).unwrap();
        let ps = enumerate_potential_subsets(&q, &[], 10).unwrap();
        assert_eq!(ps.len(), hermitian_elements(&q).len());
    }

    #[test]
    fn rejection_reports_the_failing_condition() {
        let q = FiniteQuantale::chain_lukasiewicz(3).unwrap();
        let h = q.elem_by_name("1/2").unwrap();
        let one = q.elem_by_name("1").unwrap();
        let alpha = vec![vec![h]];
        let bad = PotentialSubset {
            q: one,
            mu: vec![one],
        };
        let r = check_potential_subset(&q, &labels(1), &alpha, &bad);
        assert_eq!(r.status("potential.p1_bound"), Some(Status::Fail));
        let w = &r.get("potential.p1_bound").unwrap().witnesses[0];
        assert_eq!(w.get("alpha(x,x)∧q"), Some("1/2"));
    }

    #[test]
    fn partial_metric_candidate_check() {
        let iv = |a: i64, b: i64| (LawvereValue::int(a), LawvereValue::int(b));
        let xs = [iv(0, 1), iv(1, 3)];
        let alpha: Vec<Vec<LawvereValue>> = xs
            .iter()
            .map(|(a, b)| {
                xs.iter()
                    .map(|(c, d)| b.numeric_max(d).truncated_sub(&a.numeric_min(c)))
                    .collect()
            })
            .collect();
        // the Yoneda-type candidate (α(−, x1), α(x1, x1)) is accepted
        let good = PotentialSubset {
            q: alpha[1][1].clone(),
            mu: vec![alpha[0][1].clone(), alpha[1][1].clone()],
        };
        assert!(check_potential_subset(&Lawvere, &labels(2), &alpha, &good).passed());
        // μ([1,3]) = 1 is below (3 − 1) ∨ q numerically: (P1) fails
        let bad = PotentialSubset {
            q: LawvereValue::int(2),
            mu: vec![LawvereValue::int(3), LawvereValue::int(1)],
        };
        let r = check_potential_subset(&Lawvere, &labels(2), &alpha, &bad);
        assert_eq!(r.status("potential.p1_bound"), Some(Status::Fail));
        let w = &r.get("potential.p1_bound").unwrap().witnesses[0];
        assert_eq!(w.get("x"), Some("x1"));
    }
}
