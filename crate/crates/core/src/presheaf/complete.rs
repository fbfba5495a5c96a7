//! Suprema, infima, tensors and cotensors in a finite category, with the
//! completeness test, closure operators and the left-adjoint criteria.
//!
//! All of these are defined only up to isomorphism; searches return the
//! least carrier index among the solutions.

use crate::error::{Error, Result};
use crate::qcat::{is_adjunction, is_functor, QCategory};
use crate::quantale::Elem;
use crate::quantaloid::Obj;
use crate::report::{CheckBuilder, LawCheck, LawReport, Witness};

use super::{direct_image, enumerate_presheaves, Presheaf};

/// The first `z` of type `ty` with `α(z, y) = target[y]` for all `y`.
fn find_with_row(x: &QCategory, ty: Obj, target: &[Elem]) -> Option<usize> {
    x.fiber(ty)
        .into_iter()
        .find(|&z| (0..x.len()).all(|y| x.alpha(z, y) == target[y]))
}

/// The first `z` of type `ty` with `α(y, z) = target[y]` for all `y`.
fn find_with_col(x: &QCategory, ty: Obj, target: &[Elem]) -> Option<usize> {
    x.fiber(ty)
        .into_iter()
        .find(|&z| (0..x.len()).all(|y| x.alpha(y, z) == target[y]))
}

/// `(α ↙ μ)(y) = ⋀_z α(z, y) ↙ μ(z)`, the row a supremum of `μ` must have.
pub fn sup_row(x: &QCategory, ty: Obj, values: &[Elem]) -> Result<Vec<Elem>> {
    let k = x.quantaloid();
    (0..x.len())
        .map(|y| {
            let mut acc = k.hom_top(ty, x.ty(y));
            for z in 0..x.len() {
                let v = k.left_imp(x.ty(z), ty, x.ty(y), x.alpha(z, y), values[z])?;
                acc = k.meet(ty, x.ty(y), acc, v);
            }
            Ok(acc)
        })
        .collect()
}

/// `sup_X μ`: an element with `α(sup μ, −) = α ↙ μ`.
///
/// `values` may be any relation `X ⇸ {ty}`; for a non-presheaf this is the
/// supremum of its presheaf closure `μ ∘ α`, which has the same `α ↙ μ`.
pub fn sup_general(x: &QCategory, ty: Obj, values: &[Elem]) -> Result<usize> {
    let row = sup_row(x, ty, values)?;
    find_with_row(x, ty, &row).ok_or_else(|| {
        Error::NotComplete(format!(
            "no supremum of type {} for [{}]",
            x.quantaloid().object_name(ty),
            values
                .iter()
                .map(|&v| x.show(v))
                .collect::<Vec<_>>()
                .join(", ")
        ))
    })
}

/// `inf_X λ`: an element with `α(−, inf λ) = λ ↘ α`, i.e.
/// `α(x, inf λ) = ⋀_z λ(z) ↘ α(x, z)`.
pub fn inf_general(x: &QCategory, ty: Obj, values: &[Elem]) -> Result<usize> {
    let k = x.quantaloid();
    let col: Vec<Elem> = (0..x.len())
        .map(|a| {
            let mut acc = k.hom_top(x.ty(a), ty);
            for z in 0..x.len() {
                let v = k.right_imp(x.ty(a), ty, x.ty(z), values[z], x.alpha(a, z))?;
                acc = k.meet(x.ty(a), ty, acc, v);
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    find_with_col(x, ty, &col).ok_or_else(|| {
        Error::NotComplete(format!(
            "no infimum of type {} for [{}]",
            k.object_name(ty),
            values
                .iter()
                .map(|&v| x.show(v))
                .collect::<Vec<_>>()
                .join(", ")
        ))
    })
}

/// `u ⊗ a` for `u ∈ hom(|a|, p)`: an element of type `p` with
/// `α(u ⊗ a, −) = α(a, −) ↙ u`.
pub fn tensor(x: &QCategory, u: Elem, p: Obj, a: usize) -> Result<usize> {
    let k = x.quantaloid();
    let row: Vec<Elem> = (0..x.len())
        .map(|y| k.left_imp(x.ty(a), p, x.ty(y), x.alpha(a, y), u))
        .collect::<Result<_>>()?;
    find_with_row(x, p, &row).ok_or_else(|| {
        Error::NotTensored(format!(
            "no tensor {} ⊗ {} of type {}",
            k.show(u),
            x.label(a),
            k.object_name(p)
        ))
    })
}

/// The cotensor of `u ∈ hom(p, |a|)` and `a`: an element `c` of type `p`
/// with `α(−, c) = u ↘ α(−, a)`.
pub fn cotensor(x: &QCategory, u: Elem, p: Obj, a: usize) -> Result<usize> {
    let k = x.quantaloid();
    let col: Vec<Elem> = (0..x.len())
        .map(|y| k.right_imp(x.ty(y), p, x.ty(a), u, x.alpha(y, a)))
        .collect::<Result<_>>()?;
    find_with_col(x, p, &col).ok_or_else(|| {
        Error::NotTensored(format!(
            "no cotensor of {} and {} of type {}",
            k.show(u),
            x.label(a),
            k.object_name(p)
        ))
    })
}

/// Join of `elems` (all of type `ty`) in the underlying order of `X_ty`.
/// The empty join is the bottom of `X_ty`.
pub fn order_join(x: &QCategory, ty: Obj, elems: &[usize]) -> Option<usize> {
    let fiber = x.fiber(ty);
    let ubs: Vec<usize> = fiber
        .iter()
        .copied()
        .filter(|&z| elems.iter().all(|&e| x.leq(e, z)))
        .collect();
    ubs.iter()
        .copied()
        .find(|&j| ubs.iter().all(|&z| x.leq(j, z)))
}

/// Meet of `elems` in the underlying order of `X_ty`; the empty meet is the top.
pub fn order_meet(x: &QCategory, ty: Obj, elems: &[usize]) -> Option<usize> {
    let fiber = x.fiber(ty);
    let lbs: Vec<usize> = fiber
        .iter()
        .copied()
        .filter(|&z| elems.iter().all(|&e| x.leq(z, e)))
        .collect();
    lbs.iter()
        .copied()
        .find(|&m| lbs.iter().all(|&z| x.leq(z, m)))
}

/// All arguments `(u, p, a)` of tensors: `u ∈ hom(|a|, p)`.
pub fn tensor_args(x: &QCategory) -> Vec<(Elem, Obj, usize)> {
    let k = x.quantaloid();
    let mut out = Vec::new();
    for a in 0..x.len() {
        for p in k.objects() {
            for &u in k.hom(x.ty(a), p) {
                out.push((u, p, a));
            }
        }
    }
    out
}

fn cotensor_args(x: &QCategory) -> Vec<(Elem, Obj, usize)> {
    let k = x.quantaloid();
    let mut out = Vec::new();
    for a in 0..x.len() {
        for p in k.objects() {
            for &u in k.hom(p, x.ty(a)) {
                out.push((u, p, a));
            }
        }
    }
    out
}

fn check_tensored(x: &QCategory) -> Result<LawCheck> {
    let k = x.quantaloid();
    let mut c = CheckBuilder::new("complete.tensored");
    for (u, p, a) in tensor_args(x) {
        let found = match tensor(x, u, p, a) {
            Ok(_) => true,
            Err(Error::NotTensored(_)) => false,
            Err(e) => return Err(e),
        };
        c.case(found, || {
            Witness::new()
                .with("u", k.show(u))
                .with("type", k.object_name(p))
                .with("x", x.label(a))
        });
    }
    Ok(c.finish())
}

fn check_cotensored(x: &QCategory) -> Result<LawCheck> {
    let k = x.quantaloid();
    let mut c = CheckBuilder::new("complete.cotensored");
    for (u, p, a) in cotensor_args(x) {
        let found = match cotensor(x, u, p, a) {
            Ok(_) => true,
            Err(Error::NotTensored(_)) => false,
            Err(e) => return Err(e),
        };
        c.case(found, || {
            Witness::new()
                .with("u", k.show(u))
                .with("type", k.object_name(p))
                .with("x", x.label(a))
        });
    }
    Ok(c.finish())
}

/// Every `X_q` has a bottom and binary joins (hence all joins).
fn check_order_complete(x: &QCategory) -> LawCheck {
    let k = x.quantaloid();
    let mut c = CheckBuilder::new("complete.order_complete");
    for q in k.objects() {
        c.case(order_join(x, q, &[]).is_some(), || {
            Witness::new()
                .with("type", k.object_name(q))
                .with("missing", "bottom")
        });
        let fiber = x.fiber(q);
        for (i, &a) in fiber.iter().enumerate() {
            for &b in &fiber[i + 1..] {
                c.case(order_join(x, q, &[a, b]).is_some(), || {
                    Witness::new()
                        .with("type", k.object_name(q))
                        .with("missing", "join")
                        .with("a", x.label(a))
                        .with("b", x.label(b))
                });
            }
        }
    }
    c.finish()
}

/// Completeness via the decomposition into tensored, cotensored and
/// order-complete. With `thorough`, also checks directly that every
/// presheaf has a supremum and that both methods agree.
pub fn is_complete(x: &QCategory, thorough: bool, cap: usize) -> Result<LawReport> {
    let mut report = LawReport::new("completeness");
    let t = check_tensored(x)?;
    let ct = check_cotensored(x)?;
    let oc = check_order_complete(x);
    let decomposed = t.passed() && ct.passed() && oc.passed();
    report.push(t);
    report.push(ct);
    report.push(oc);
    if thorough {
        let k = x.quantaloid();
        let mut direct = CheckBuilder::new("complete.direct_sup");
        for mu in enumerate_presheaves(x, cap)? {
            let ok = match sup_general(x, mu.ty, &mu.values) {
                Ok(_) => true,
                Err(Error::NotComplete(_)) => false,
                Err(e) => return Err(e),
            };
            direct.case(ok, || {
                Witness::new().with("presheaf", mu.render(k, x.labels()))
            });
        }
        let direct = direct.finish();
        let mut agree = CheckBuilder::new("complete.methods_agree");
        agree.case(direct.passed() == decomposed, || {
            Witness::new()
                .with("decomposition", decomposed)
                .with("direct", direct.passed())
        });
        report.push(direct);
        report.push(agree.finish());
    }
    Ok(report)
}

/// Completeness by the decomposition only.
pub fn complete(x: &QCategory) -> bool {
    is_complete(x, false, 0)
        .map(|r| r.passed())
        .unwrap_or(false)
}

/// Fixed points of a closure operator with the codomain restriction of `c`.
#[derive(Debug, Clone)]
pub struct FixedPoints {
    /// Fixed points `cx ≅ x`, in carrier order.
    pub points: Vec<usize>,
    /// The full subcategory on `points`.
    pub category: QCategory,
    /// `c` viewed as a map `X → Fix(c)` (indices into `points`).
    pub restriction: Vec<usize>,
    /// Checks: restriction ⊣ inclusion, and completeness when `X` is complete.
    pub report: LawReport,
}

/// `Fix(c) = {x | cx ≅ x}` for a closure operator `c` (`1 ≤ c`, `cc ≅ c`).
pub fn closure_fixpoints(x: &QCategory, c: &[usize]) -> Result<FixedPoints> {
    if !is_functor(x, x, c) {
        return Err(Error::Precondition(
            "closure operator must be a functor X → X".into(),
        ));
    }
    for a in 0..x.len() {
        if !x.leq(a, c[a]) {
            return Err(Error::Precondition(format!(
                "not a closure operator: {} is not below c({}) = {}",
                x.label(a),
                x.label(a),
                x.label(c[a])
            )));
        }
        if !x.iso(c[c[a]], c[a]) {
            return Err(Error::Precondition(format!(
                "not a closure operator: cc({}) is not isomorphic to c({})",
                x.label(a),
                x.label(a)
            )));
        }
    }
    let points: Vec<usize> = (0..x.len()).filter(|&a| x.iso(c[a], a)).collect();
    let category = x.full_subcategory(&points);
    let restriction: Vec<usize> = c
        .iter()
        .map(|&v| {
            points
                .iter()
                .position(|&p| p == v)
                .expect("c x is a fixed point")
        })
        .collect();
    let mut report = LawReport::new("closure_fixpoints");
    let mut adj = CheckBuilder::new("closure.restriction_left_adjoint");
    adj.case(is_adjunction(x, &category, &restriction, &points), || {
        Witness::new().with(
            "problem",
            "codomain restriction is not left adjoint to inclusion",
        )
    });
    report.push(adj.finish());
    if complete(x) {
        let mut fc = CheckBuilder::new("closure.fix_complete");
        fc.case(complete(&category), || {
            Witness::new().with("fixed_points", points.len())
        });
        report.push(fc.finish());
    }
    Ok(FixedPoints {
        points,
        category,
        restriction,
        report,
    })
}

/// Right adjoint of `f` found independently for each `y`: the first `x`
/// of type `|y|` with `α(−, x) = β(f−, y)`.
pub fn find_right_adjoint(x: &QCategory, y: &QCategory, f: &[usize]) -> Option<Vec<usize>> {
    (0..y.len())
        .map(|b| {
            let col: Vec<Elem> = (0..x.len()).map(|a| y.alpha(f[a], b)).collect();
            find_with_col(x, y.ty(b), &col)
        })
        .collect()
}

/// Right adjoint of `f` between underlying orders, fiberwise: for each `y`,
/// an `x` with `x' ≤ x ⟺ fx' ≤ y` for all `x'` of that type.
pub fn find_order_right_adjoint(x: &QCategory, y: &QCategory, f: &[usize]) -> Option<Vec<usize>> {
    (0..y.len())
        .map(|b| {
            let fiber = x.fiber(y.ty(b));
            fiber
                .iter()
                .copied()
                .find(|&g| fiber.iter().all(|&a| x.leq(a, g) == y.leq(f[a], b)))
        })
        .collect()
}

/// Whether `f` commutes with all tensors up to isomorphism, with the first
/// failure if not.
fn preserves_tensors(x: &QCategory, y: &QCategory, f: &[usize]) -> Result<Option<Witness>> {
    let k = x.quantaloid();
    for (u, p, a) in tensor_args(x) {
        let lhs = f[tensor(x, u, p, a)?];
        let rhs = tensor(y, u, p, f[a])?;
        if !y.iso(lhs, rhs) {
            return Ok(Some(
                Witness::new()
                    .with("u", k.show(u))
                    .with("x", x.label(a))
                    .with("f(u⊗x)", y.label(lhs))
                    .with("u⊗fx", y.label(rhs)),
            ));
        }
    }
    Ok(None)
}

/// Tensor criterion for functoriality between tensored categories:
/// `u ⊗ fx ≤ f(u ⊗ x)` for all tensors, and `f` preserves the underlying order.
pub fn tensor_functor_criterion(x: &QCategory, y: &QCategory, f: &[usize]) -> Result<bool> {
    if (0..x.len()).any(|a| x.ty(a) != y.ty(f[a])) {
        return Ok(false);
    }
    for (u, p, a) in tensor_args(x) {
        if !y.leq(tensor(y, u, p, f[a])?, f[tensor(x, u, p, a)?]) {
            return Ok(false);
        }
    }
    Ok((0..x.len()).all(|a| (0..x.len()).all(|b| !x.leq(a, b) || y.leq(f[a], f[b]))))
}

/// Evaluates three equivalent characterizations of left adjoints between
/// complete categories and checks that they agree:
/// a right adjoint exists; `f` is an order left adjoint preserving tensors;
/// `f sup_X = sup_Y f→`.
pub fn check_left_adjoint(
    x: &QCategory,
    y: &QCategory,
    f: &[usize],
    cap: usize,
) -> Result<LawReport> {
    if !complete(x) || !complete(y) {
        return Err(Error::NotComplete(
            "left-adjoint criteria need complete domain and codomain".into(),
        ));
    }
    let mut report = LawReport::new("left_adjoint");
    let mut func = CheckBuilder::new("left_adjoint.functor");
    func.case(is_functor(x, y, f), || {
        Witness::new().with("problem", "f is not a functor")
    });
    let func = func.finish();
    if !func.passed() {
        report.push(func);
        return Ok(report);
    }
    report.push(func);

    let mut c1 = CheckBuilder::new("left_adjoint.right_adjoint");
    let right = find_right_adjoint(x, y, f);
    match &right {
        Some(g) => {
            c1.case(is_adjunction(x, y, f, g), || {
                Witness::new().with("problem", "searched right adjoint fails the hom equality")
            });
        }
        None => {
            let b = (0..y.len())
                .find(|&b| {
                    let col: Vec<Elem> = (0..x.len()).map(|a| y.alpha(f[a], b)).collect();
                    find_with_col(x, y.ty(b), &col).is_none()
                })
                .unwrap_or(0);
            c1.fail_with(Witness::new().with("no_value_at", y.label(b)));
        }
    }
    let c1 = c1.finish();

    let mut c2 = CheckBuilder::new("left_adjoint.order_adjoint_and_tensors");
    c2.case(find_order_right_adjoint(x, y, f).is_some(), || {
        Witness::new().with("problem", "no right adjoint between underlying orders")
    });
    let tensor_failure = preserves_tensors(x, y, f)?;
    let has_tf = tensor_failure.is_some();
    c2.case(!has_tf, || tensor_failure.unwrap_or_default());
    let c2 = c2.finish();

    let mut c3 = CheckBuilder::new("left_adjoint.sup_preserving");
    for mu in enumerate_presheaves(x, cap)? {
        let lhs = f[sup_general(x, mu.ty, &mu.values)?];
        let img: Presheaf = direct_image(x, y, f, &mu);
        let rhs = sup_general(y, img.ty, &img.values)?;
        c3.case(y.iso(lhs, rhs), || {
            Witness::new()
                .with("presheaf", mu.render(x.quantaloid(), x.labels()))
                .with("f(sup)", y.label(lhs))
                .with("sup(f→)", y.label(rhs))
        });
    }
    let c3 = c3.finish();

    let verdicts = [c1.passed(), c2.passed(), c3.passed()];
    let mut agree = CheckBuilder::new("left_adjoint.criteria_agree");
    agree.case(verdicts.iter().all(|&v| v == verdicts[0]), || {
        Witness::new()
            .with("right_adjoint", verdicts[0])
            .with("order_and_tensors", verdicts[1])
            .with("sup_preserving", verdicts[2])
    });
    report.push(c1);
    report.push(c2);
    report.push(c3);
    report.push(agree.finish());
    Ok(report)
}

/// Outcome of [`check_left_adjoint`]: the three criteria and whether they agree.
pub fn left_adjoint_verdicts(report: &LawReport) -> Option<([bool; 3], bool)> {
    let get = |c: &str| report.get(c).map(|c| c.passed());
    Some((
        [
            get("left_adjoint.right_adjoint")?,
            get("left_adjoint.order_adjoint_and_tensors")?,
            get("left_adjoint.sup_preserving")?,
        ],
        get("left_adjoint.criteria_agree")?,
    ))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::presheaf::{yoneda, yoneda_presheaf, PresheafCategory};
    use crate::qcat::{check_adjunction, type_preserving_maps};
    use crate::quantale::FiniteQuantale;
    use crate::quantaloid::{build_dstar, Quantaloid};

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("x{i}")).collect()
    }

    fn bool_one() -> Arc<Quantaloid> {
        Arc::new(Quantaloid::one_object(Arc::new(FiniteQuantale::boolean2())))
    }

    /// The 2-category of the powerset lattice of a `bits`-element set.
    fn powerset_lattice(k: &Arc<Quantaloid>, bits: usize) -> QCategory {
        let n = 1 << bits;
        QCategory::from_fn(k.clone(), labels(n), vec![Obj::new(0); n], |a, b| {
            Elem::new(usize::from(a & !b == 0))
        })
        .unwrap()
    }

    #[test]
    fn presheaf_category_is_complete() {
        let k = Arc::new(build_dstar(Arc::new(FiniteQuantale::boolean2())).unwrap());
        let one = k.object_by_name("1").unwrap();
        let x = QCategory::discrete(k.clone(), labels(2), vec![one, one]).unwrap();
        let px = PresheafCategory::build(&x, 100).unwrap();
        let r = is_complete(px.category(), true, 100_000).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn discrete_crisp_pair_is_not_complete() {
        let k = bool_one();
        let x = QCategory::discrete(k, labels(2), vec![Obj::new(0); 2]).unwrap();
        let r = is_complete(&x, true, 1000).unwrap();
        assert!(!r.get("complete.order_complete").unwrap().passed());
        assert!(!r.get("complete.direct_sup").unwrap().passed());
        assert!(r.get("complete.methods_agree").unwrap().passed());
    }

    #[test]
    fn empty_category_is_not_complete() {
        let k = bool_one();
        let x = QCategory::discrete(k, vec![], vec![]).unwrap();
        let r = is_complete(&x, true, 1000).unwrap();
        assert!(r.get("complete.tensored").unwrap().passed());
        assert!(!r.get("complete.order_complete").unwrap().passed());
        assert!(!r.get("complete.direct_sup").unwrap().passed());
        assert!(r.get("complete.methods_agree").unwrap().passed());
    }

    #[test]
    fn sup_of_yoneda_and_of_downsets() {
        let k = bool_one();
        let x = powerset_lattice(&k, 2);
        assert!(complete(&x));
        for a in 0..4 {
            let y = yoneda_presheaf(&x, a);
            assert_eq!(sup_general(&x, y.ty, &y.values).unwrap(), a);
        }
        // the down-set {0, 1} has maximum 1
        let v = |b: usize| Elem::new(b);
        assert_eq!(
            sup_general(&x, Obj::new(0), &[v(1), v(1), v(0), v(0)]).unwrap(),
            1
        );
        // a non-presheaf relation has the sup of its closure
        assert_eq!(
            sup_general(&x, Obj::new(0), &[v(0), v(1), v(1), v(0)]).unwrap(),
            3
        );
    }

    #[test]
    fn tensor_with_zero_is_bottom_and_with_identity_is_identity() {
        let k = bool_one();
        let x = powerset_lattice(&k, 2);
        let o = Obj::new(0);
        for a in 0..4 {
            assert_eq!(tensor(&x, Elem::new(1), o, a).unwrap(), a);
            assert_eq!(tensor(&x, Elem::new(0), o, a).unwrap(), 0);
            assert_eq!(cotensor(&x, Elem::new(0), o, a).unwrap(), 3);
        }
    }

    #[test]
    fn closure_fixpoints_of_up_closure() {
        // X = powerset of {0,1,2} over 2; c = up-closure for the preorder 0 ≤ 1
        let k = bool_one();
        let x = powerset_lattice(&k, 3);
        let c: Vec<usize> = (0..8).map(|s| if s & 1 != 0 { s | 2 } else { s }).collect();
        let fp = closure_fixpoints(&x, &c).unwrap();
        let expect: Vec<usize> = (0..8).filter(|s| s & 1 == 0 || s & 2 != 0).collect();
        assert_eq!(fp.points, expect);
        assert!(fp.report.passed(), "{}", fp.report);
        assert!(fp.report.get("closure.fix_complete").is_some());
        assert!(
            closure_fixpoints(&x, &(0..8).collect::<Vec<_>>())
                .unwrap()
                .points
                .len()
                == 8
        );
        let bad: Vec<usize> = (0..8).map(|s| s & 1).collect();
        assert!(matches!(
            closure_fixpoints(&x, &bad),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn adjunction_gives_closure_operator() {
        let k = bool_one();
        let x = powerset_lattice(&k, 2);
        let y = powerset_lattice(&k, 1);
        // f = image under the collapse of both points, g its right adjoint
        let f: Vec<usize> = (0..4).map(|s| usize::from(s != 0)).collect();
        let g = find_right_adjoint(&x, &y, &f).unwrap();
        assert!(check_adjunction(&x, &y, &f, &g).passed());
        let gf: Vec<usize> = f.iter().map(|&v| g[v]).collect();
        assert!(closure_fixpoints(&x, &gf).is_ok());
    }

    #[test]
    fn left_adjoint_criteria_on_lattice_maps() {
        let k = bool_one();
        let x = powerset_lattice(&k, 2);
        let id: Vec<usize> = (0..4).collect();
        let r = check_left_adjoint(&x, &x, &id, 1000).unwrap();
        assert!(r.passed(), "{r}");
        // sends {0} and {1} to themselves but the top to {0}: not even monotone
        let broken = [0, 1, 2, 1];
        let r = check_left_adjoint(&x, &x, &broken, 1000).unwrap();
        assert!(!r.passed());
        // monotone but not join-preserving: everything nonempty goes to top except atoms
        let squash = [0, 3, 3, 3];
        assert!(is_functor(&x, &x, &squash));
        let ok_map = check_left_adjoint(&x, &x, &squash, 1000).unwrap();
        let (v, agree) = left_adjoint_verdicts(&ok_map).unwrap();
        assert!(agree);
        assert_eq!(v, [true; 3]);
        let meetish = [0, 0, 0, 3];
        let r = check_left_adjoint(&x, &x, &meetish, 1000).unwrap();
        let (v, agree) = left_adjoint_verdicts(&r).unwrap();
        assert!(agree);
        assert_eq!(v, [false; 3]);
    }

    #[test]
    fn criteria_agree_on_all_maps_between_small_complete_categories() {
        let k = bool_one();
        let x = powerset_lattice(&k, 1);
        let y = powerset_lattice(&k, 2);
        for f in type_preserving_maps(&x, &y, 100).unwrap() {
            if !is_functor(&x, &y, &f) {
                continue;
            }
            let r = check_left_adjoint(&x, &y, &f, 1000).unwrap();
            assert!(
                r.get("left_adjoint.criteria_agree").unwrap().passed(),
                "{f:?}: {r}"
            );
            assert!(tensor_functor_criterion(&x, &y, &f).unwrap());
        }
    }

    #[test]
    fn sup_general_agrees_with_presheaf_sup_on_px() {
        let k = Arc::new(build_dstar(Arc::new(FiniteQuantale::boolean2())).unwrap());
        let one = k.object_by_name("1").unwrap();
        let x = QCategory::discrete(k.clone(), labels(2), vec![one, one]).unwrap();
        let px = PresheafCategory::build(&x, 100).unwrap();
        let ppx = PresheafCategory::build(px.category(), 100_000).unwrap();
        for phi in ppx.elems() {
            let a = sup_general(px.category(), phi.ty, &phi.values).unwrap();
            let b = px
                .index_of(&super::super::sup_presheaf_cat(&x, &px, phi))
                .unwrap();
            assert_eq!(a, b);
        }
        let y = yoneda(&x, &px).unwrap();
        assert_eq!(y.len(), 2);
    }
}
