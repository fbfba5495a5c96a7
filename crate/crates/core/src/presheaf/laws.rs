//! Law checks for the presheaf constructions: Yoneda, the adjunctions
//! `sup ⊣ y` and `f→ ⊣ f←`, hom formulas for joins and meets, tensors
//! distributing over joins, and the tensor criterion for functoriality.

use itertools::Itertools;

use crate::error::Result;
use crate::qcat::{check_adjunction, is_functor, type_preserving_maps, QCategory};
use crate::quantaloid::Obj;
use crate::report::{CheckBuilder, LawReport, Witness};

use super::complete::{order_join, order_meet, sup_general, tensor, tensor_functor_criterion};
use super::{f_backward, f_forward, yoneda, PresheafCategory};

fn render_set(x: &QCategory, s: &[usize]) -> String {
    format!("{{{}}}", s.iter().map(|&a| x.label(a)).join(", "))
}

/// `y x` has type `|x|` and `PX(y x, y x') = α(x, x')`.
pub fn check_yoneda(x: &QCategory, px: &PresheafCategory) -> Result<LawReport> {
    let mut report = LawReport::new("yoneda");
    let y = yoneda(x, px)?;
    let mut typed = CheckBuilder::new("yoneda.type");
    let mut ff = CheckBuilder::new("yoneda.fully_faithful");
    let pxc = px.category();
    for a in 0..x.len() {
        typed.case(pxc.ty(y[a]) == x.ty(a), || {
            Witness::new().with("x", x.label(a))
        });
        for b in 0..x.len() {
            ff.case(pxc.alpha(y[a], y[b]) == x.alpha(a, b), || {
                Witness::new()
                    .with("x", x.label(a))
                    .with("x'", x.label(b))
                    .with("PX(yx,yx')", x.show(pxc.alpha(y[a], y[b])))
                    .with("alpha(x,x')", x.show(x.alpha(a, b)))
            });
        }
    }
    report.push(typed.finish());
    report.push(ff.finish());
    Ok(report)
}

/// `sup_X ⊣ y_X` for a complete `x`, with `sup` computed by search.
pub fn check_sup_yoneda(x: &QCategory, px: &PresheafCategory) -> Result<LawReport> {
    let sup = px
        .elems()
        .iter()
        .map(|mu| sup_general(x, mu.ty, &mu.values))
        .collect::<Result<Vec<_>>>()?;
    let y = yoneda(x, px)?;
    let mut report = LawReport::new("sup_yoneda");
    report.extend_prefixed("sup_yoneda", check_adjunction(px.category(), x, &sup, &y));
    Ok(report)
}

/// `f→ ⊣ f←` between enumerated presheaf categories.
pub fn check_image_adjunction(
    x: &QCategory,
    y: &QCategory,
    f: &[usize],
    px: &PresheafCategory,
    py: &PresheafCategory,
) -> Result<LawReport> {
    let fw = f_forward(x, y, f, px, py)?;
    let bw = f_backward(x, y, f, px, py)?;
    let mut report = LawReport::new("image_adjunction");
    report.extend_prefixed(
        "image_adjunction",
        check_adjunction(px.category(), py.category(), &fw, &bw),
    );
    Ok(report)
}

/// In a complete `x`, for every subset `S` of a fiber and every `z`:
/// `α(⋁S, z) = ⋀_{s∈S} α(s, z)` and `α(z, ⋀S) = ⋀_{s∈S} α(z, s)`, meets
/// taken in the hom lattice.
pub fn check_join_meet_homs(x: &QCategory) -> LawReport {
    let k = x.quantaloid();
    let mut report = LawReport::new("join_meet_homs");
    let mut joins = CheckBuilder::new("join_meet_homs.join");
    let mut meets = CheckBuilder::new("join_meet_homs.meet");
    for q in k.objects() {
        for s in x.fiber(q).into_iter().powerset() {
            let j = order_join(x, q, &s);
            let m = order_meet(x, q, &s);
            for z in 0..x.len() {
                let p = x.ty(z);
                let expect_j = s
                    .iter()
                    .fold(k.hom_top(q, p), |acc, &a| k.meet(q, p, acc, x.alpha(a, z)));
                joins.case(j.is_some_and(|j| x.alpha(j, z) == expect_j), || {
                    Witness::new()
                        .with("S", render_set(x, &s))
                        .with("z", x.label(z))
                        .with("meet", k.show(expect_j))
                        .with("join", j.map_or("none", |j| x.label(j)))
                });
                let expect_m = s
                    .iter()
                    .fold(k.hom_top(p, q), |acc, &a| k.meet(p, q, acc, x.alpha(z, a)));
                meets.case(m.is_some_and(|m| x.alpha(z, m) == expect_m), || {
                    Witness::new()
                        .with("S", render_set(x, &s))
                        .with("z", x.label(z))
                        .with("meet_of_homs", k.show(expect_m))
                        .with("meet", m.map_or("none", |m| x.label(m)))
                });
            }
        }
    }
    report.push(joins.finish());
    report.push(meets.finish());
    report
}

/// In a complete `x`: `u ⊗ (⋁S) ≅ ⋁_{s∈S} (u ⊗ s)` for every subset `S` of
/// a fiber `X_q` and every `u ∈ hom(q, p)`.
pub fn check_tensor_join(x: &QCategory) -> Result<LawReport> {
    let k = x.quantaloid();
    let mut c = CheckBuilder::new("tensor_join");
    let objs: Vec<Obj> = k.objects().collect();
    for &q in &objs {
        let fiber = x.fiber(q);
        for &p in &objs {
            for &u in k.hom(q, p) {
                for s in fiber.iter().copied().powerset() {
                    let Some(j) = order_join(x, q, &s) else {
                        c.fail_with(
                            Witness::new()
                                .with("S", render_set(x, &s))
                                .with("missing", "join"),
                        );
                        continue;
                    };
                    let lhs = tensor(x, u, p, j)?;
                    let parts = s
                        .iter()
                        .map(|&a| tensor(x, u, p, a))
                        .collect::<Result<Vec<_>>>()?;
                    let rhs = order_join(x, p, &parts);
                    c.case(rhs.is_some_and(|r| x.iso(lhs, r)), || {
                        Witness::new()
                            .with("u", k.show(u))
                            .with("S", render_set(x, &s))
                            .with("u⊗join", x.label(lhs))
                            .with("join_of_tensors", rhs.map_or("none", |r| x.label(r)))
                    });
                }
            }
        }
    }
    let mut report = LawReport::new("tensor_join");
    report.push(c.finish());
    Ok(report)
}

/// For tensored `x` and `y`, every type-preserving map is a functor exactly
/// when it preserves the order and satisfies `u ⊗ fx ≤ f(u ⊗ x)`.
pub fn check_tensor_functor_criterion(
    x: &QCategory,
    y: &QCategory,
    cap: usize,
) -> Result<LawReport> {
    let mut c = CheckBuilder::new("tensor_functor_criterion");
    for f in type_preserving_maps(x, y, cap)? {
        let direct = is_functor(x, y, &f);
        let via_tensors = tensor_functor_criterion(x, y, &f)?;
        c.case(direct == via_tensors, || {
            Witness::new()
                .with(
                    "f",
                    format!("[{}]", f.iter().map(|&b| y.label(b)).join(", ")),
                )
                .with("functor", direct)
                .with("tensor_criterion", via_tensors)
        });
    }
    let mut report = LawReport::new("tensor_functor_criterion");
    report.push(c.finish());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::quantale::{Elem, FiniteQuantale};
    use crate::quantaloid::{build_dstar, Quantaloid};

    fn chain(n: usize) -> QCategory {
        let k = Arc::new(Quantaloid::one_object(Arc::new(FiniteQuantale::boolean2())));
        let labels = (0..n).map(|i| format!("c{i}")).collect();
        QCategory::from_fn(k, labels, vec![Obj::new(0); n], |a, b| {
            Elem::new(usize::from(a <= b))
        })
        .unwrap()
    }

    #[test]
    fn yoneda_and_sup_on_a_chain() {
        let x = chain(3);
        let px = PresheafCategory::build(&x, 1000).unwrap();
        // down-sets of a 3-chain, including the empty one
        assert_eq!(px.len(), 4);
        assert!(check_yoneda(&x, &px).unwrap().passed());
        assert!(check_sup_yoneda(&x, &px).unwrap().passed());
        assert!(check_join_meet_homs(&x).passed());
        assert!(check_tensor_join(&x).unwrap().passed());
        assert!(check_tensor_functor_criterion(&x, &x, 1000)
            .unwrap()
            .passed());
    }

    #[test]
    fn image_adjunction_for_a_constant_map() {
        let x = chain(3);
        let px = PresheafCategory::build(&x, 1000).unwrap();
        let r = check_image_adjunction(&x, &x, &[1, 1, 1], &px, &px).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn join_hom_formula_fails_without_joins() {
        // a discrete pair has no join of its two points
        let k = Arc::new(Quantaloid::one_object(Arc::new(FiniteQuantale::boolean2())));
        let x = QCategory::discrete(k, vec!["a".into(), "b".into()], vec![Obj::new(0); 2]).unwrap();
        let r = check_join_meet_homs(&x);
        assert!(!r.passed());
        assert_eq!(
            r.get("join_meet_homs.join").unwrap().witnesses[0].get("join"),
            Some("none")
        );
    }

    #[test]
    fn presheaf_category_over_dstar_satisfies_the_laws() {
        let k =
            Arc::new(build_dstar(Arc::new(FiniteQuantale::chain_lukasiewicz(3).unwrap())).unwrap());
        let top = k.objects().last().unwrap();
        let x = QCategory::discrete(k, vec!["x".into()], vec![top]).unwrap();
        let px = PresheafCategory::build(&x, 1000).unwrap();
        let pxc = px.category().clone();
        assert!(check_join_meet_homs(&pxc).passed());
        assert!(check_tensor_join(&pxc).unwrap().passed());
        assert!(check_yoneda(&x, &px).unwrap().passed());
    }
}
