//! Quantale-valued sets checked directly in the base quantale.
//!
//! These validators only use the [`Quantale`] operations, so they also run
//! on the Lawvere backend where `D*(Q)` cannot be built.

use crate::quantale::Quantale;
use crate::report::{CheckBuilder, LawReport, Witness};

/// Checks strictness, divisibility, transitivity and symmetry of a
/// `Q`-valued equality `alpha` (a square matrix indexed by `labels`).
///
/// Both equalities of the divisibility axiom and the internal equality of
/// the transitivity axiom are checked, not only the inequality.
pub fn validate_qset<Q: Quantale>(q: &Q, labels: &[String], alpha: &[Vec<Q::Elem>]) -> LawReport {
    let n = labels.len();
    let mut report = LawReport::new("qset");
    let mut shape = CheckBuilder::new("qset.shape");
    shape.case(
        alpha.len() == n && alpha.iter().all(|r| r.len() == n),
        || Witness::new().with("labels", n).with("rows", alpha.len()),
    );
    let shape = shape.finish();
    if !shape.passed() {
        report.push(shape);
        return report;
    }
    let a = |x: usize, y: usize| &alpha[x][y];
    let sh = |e: &Q::Elem| q.show(e);

    let mut s1 = CheckBuilder::new("qset.s1_strictness");
    let mut s2 = CheckBuilder::new("qset.s2_divisibility");
    let mut s4 = CheckBuilder::new("qset.s4_symmetry");
    for x in 0..n {
        for y in 0..n {
            let (axy, axx, ayy) = (a(x, y), a(x, x), a(y, y));
            s1.case(q.le(axy, axx) && q.le(axy, ayy), || {
                Witness::new()
                    .with("x", &labels[x])
                    .with("y", &labels[y])
                    .with("alpha(x,y)", sh(axy))
                    .with("alpha(x,x)", sh(axx))
                    .with("alpha(y,y)", sh(ayy))
            });
            let left = q.mul(&q.left_imp(axy, axx), axx);
            let right = q.mul(ayy, &q.right_imp(ayy, axy));
            s2.case(&left == axy && &right == axy, || {
                Witness::new()
                    .with("x", &labels[x])
                    .with("y", &labels[y])
                    .with("alpha(x,y)", sh(axy))
                    .with("(alpha(x,y)/alpha(x,x))&alpha(x,x)", sh(&left))
                    .with("alpha(y,y)&(alpha(y,y)\\alpha(x,y))", sh(&right))
            });
            let back = q.involution(a(y, x));
            s4.case(axy == &back, || {
                Witness::new()
                    .with("x", &labels[x])
                    .with("y", &labels[y])
                    .with("alpha(x,y)", sh(axy))
                    .with("alpha(y,x)°", sh(&back))
            });
        }
    }

    let mut s3 = CheckBuilder::new("qset.s3_transitivity");
    for x in 0..n {
        for y in 0..n {
            let ayy = a(y, y);
            let axy = a(x, y);
            let div = q.right_imp(ayy, axy);
            for z in 0..n {
                let ayz = a(y, z);
                let first = q.mul(&q.left_imp(ayz, ayy), axy);
                let second = q.mul(ayz, &div);
                s3.case(first == second && q.le(&first, a(x, z)), || {
                    Witness::new()
                        .with("x", &labels[x])
                        .with("y", &labels[y])
                        .with("z", &labels[z])
                        .with("(alpha(y,z)/alpha(y,y))&alpha(x,y)", sh(&first))
                        .with("alpha(y,z)&(alpha(y,y)\\alpha(x,y))", sh(&second))
                        .with("alpha(x,z)", sh(a(x, z)))
                });
            }
        }
    }
    report.push(shape);
    report.push(s1.finish());
    report.push(s2.finish());
    report.push(s3.finish());
    report.push(s4.finish());
    report
}

/// Checks that `f: X → Y` between `Q`-sets preserves existence,
/// `α(x, x) = β(fx, fx)`, and equality, `α(x, x') ≤ β(fx, fx')`.
pub fn validate_qset_map<Q: Quantale>(
    q: &Q,
    labels: &[String],
    alpha: &[Vec<Q::Elem>],
    beta: &[Vec<Q::Elem>],
    f: &[usize],
) -> LawReport {
    let mut report = LawReport::new("qset_map");
    let mut wd = CheckBuilder::new("qset_map.well_defined");
    let shape_ok = f.len() == alpha.len() && labels.len() == alpha.len();
    wd.case(shape_ok && f.iter().all(|&v| v < beta.len()), || {
        Witness::new()
            .with("map_len", f.len())
            .with("domain_len", alpha.len())
    });
    let wd = wd.finish();
    let ok = wd.passed();
    report.push(wd);
    if !ok {
        return report;
    }
    let mut ex = CheckBuilder::new("qset_map.existence");
    let mut mono = CheckBuilder::new("qset_map.monotone");
    for x in 0..f.len() {
        ex.case(alpha[x][x] == beta[f[x]][f[x]], || {
            Witness::new()
                .with("x", &labels[x])
                .with("required", "alpha(x,x) = beta(fx,fx)")
                .with("alpha(x,x)", q.show(&alpha[x][x]))
                .with("beta(fx,fx)", q.show(&beta[f[x]][f[x]]))
        });
        for y in 0..f.len() {
            mono.case(q.le(&alpha[x][y], &beta[f[x]][f[y]]), || {
                Witness::new()
                    .with("x", &labels[x])
                    .with("x'", &labels[y])
                    .with("alpha(x,x')", q.show(&alpha[x][y]))
                    .with("beta(fx,fx')", q.show(&beta[f[x]][f[y]]))
            });
        }
    }
    report.push(ex.finish());
    report.push(mono.finish());
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantale::{FiniteQuantale, Lawvere, LawvereValue};
    use crate::report::Status;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("x{i}")).collect()
    }

    #[test]
    fn equivalence_relation_on_subset_is_a_two_set() {
        let q = FiniteQuantale::boolean2();
        let (o, z) = (q.elem_by_name("1").unwrap(), q.elem_by_name("0").unwrap());
        // x0 ~ x1 exist, x2 does not
        let alpha = vec![vec![o, o, z], vec![o, o, z], vec![z, z, z]];
        assert!(validate_qset(&q, &labels(3), &alpha).passed());
        let bad = vec![vec![o, o, z], vec![o, o, z], vec![o, z, z]];
        let r = validate_qset(&q, &labels(3), &bad);
        assert_eq!(r.status("qset.s1_strictness"), Some(Status::Fail));
        assert_eq!(r.status("qset.s4_symmetry"), Some(Status::Fail));
    }

    #[test]
    fn interval_partial_metric_small() {
        let iv = |a: i64, b: i64| (LawvereValue::int(a), LawvereValue::int(b));
        let xs = [iv(0, 1), iv(1, 3), iv(2, 5)];
        let alpha: Vec<Vec<LawvereValue>> = xs
            .iter()
            .map(|(a, b)| {
                xs.iter()
                    .map(|(c, d)| b.numeric_max(d).truncated_sub(&a.numeric_min(c)))
                    .collect()
            })
            .collect();
        assert!(validate_qset(&Lawvere, &labels(3), &alpha).passed());
    }

    #[test]
    fn lawvere_metric_violating_strictness_is_caught() {
        // alpha(x,y) numerically smaller than alpha(x,x)
        let v = LawvereValue::int;
        let alpha = vec![vec![v(2), v(1)], vec![v(1), v(0)]];
        let r = validate_qset(&Lawvere, &labels(2), &alpha);
        assert_eq!(r.status("qset.s1_strictness"), Some(Status::Fail));
    }

    #[test]
    fn map_must_preserve_existence() {
        let q = FiniteQuantale::boolean2();
        let (o, z) = (q.elem_by_name("1").unwrap(), q.elem_by_name("0").unwrap());
        let x = vec![vec![o, z], vec![z, z]];
        let y = vec![vec![o]];
        let r = validate_qset_map(&q, &labels(2), &x, &y, &[0, 0]);
        assert_eq!(r.status("qset_map.existence"), Some(Status::Fail));
        assert_eq!(r.status("qset_map.monotone"), Some(Status::Pass));
    }
}
