use std::sync::Arc;

use super::*;
use crate::presheaf::complete::closure_fixpoints;
use crate::quantale::{Elem, FiniteQuantale};
use crate::quantaloid::{Obj, Quantaloid};
use crate::report::Status;

fn bool_one() -> Arc<Quantaloid> {
    Arc::new(Quantaloid::one_object(Arc::new(FiniteQuantale::boolean2())))
}

fn order(k: &Arc<Quantaloid>, n: usize, le: impl Fn(usize, usize) -> bool) -> QCategory {
    let labels = (0..n).map(|i| format!("x{i}")).collect();
    QCategory::from_fn(k.clone(), labels, vec![Obj::new(0); n], |a, b| {
        Elem::new(usize::from(le(a, b)))
    })
    .unwrap()
}

/// Subsets of a 2-element set as bitmasks 0..4.
fn boolean_square(k: &Arc<Quantaloid>) -> QCategory {
    order(k, 4, |a, b| a & !b == 0)
}

fn chain(k: &Arc<Quantaloid>, n: usize) -> QCategory {
    order(k, n, |a, b| a <= b)
}

/// The split instance `f = c`, `g = 1`, `t = 1`, `h = c` restricted to its
/// fixed points, `s` the inclusion.
fn closure_instance(y: &QCategory, c: &[usize]) -> SplitInstance {
    let fp = closure_fixpoints(y, c).unwrap();
    let z = y.full_subcategory(&fp.points).symmetrize().unwrap();
    SplitInstance {
        x: y.clone(),
        y: y.clone(),
        z,
        f: c.to_vec(),
        g: (0..y.len()).collect(),
        h: fp.restriction.clone(),
        s: fp.points.clone(),
        t: (0..y.len()).collect(),
    }
}

fn trivial_instance(y: &QCategory) -> SplitInstance {
    let id: Vec<usize> = (0..y.len()).collect();
    SplitInstance {
        x: y.clone(),
        y: y.clone(),
        z: y.symmetrize().unwrap(),
        f: id.clone(),
        g: id.clone(),
        h: id.clone(),
        s: id.clone(),
        t: id,
    }
}

#[test]
fn section_lift_of_identity_is_identity() {
    let k = bool_one();
    let x = boolean_square(&k);
    let id: Vec<usize> = (0..4).collect();
    let y = TypedSet::new(&k, x.labels().to_vec(), x.types().to_vec()).unwrap();
    let l = section_lift(&x, &y, &id, &id).unwrap();
    assert_eq!(l.section, id);
    assert_eq!(l.category.hom_entries(), x.hom_entries());
    assert!(l.report.passed(), "{}", l.report);
}

#[test]
fn collapsing_only_the_atoms_breaks_join_congruence() {
    let k = bool_one();
    let x = boolean_square(&k);
    // {0} and {1} collapse, while their join (the top) stays apart
    let f = [0, 1, 1, 2];
    let r = check_lift_conditions(&x, &f).unwrap();
    assert_eq!(r.status("lift.join_congruence"), Some(Status::Fail));
    let w = &r.get("lift.join_congruence").unwrap().witnesses[0];
    assert!(w.get("x1∨x2").is_some());
    let y = TypedSet::new(
        &k,
        vec!["b".into(), "a".into(), "t".into()],
        vec![Obj::new(0); 3],
    )
    .unwrap();
    assert!(matches!(
        section_lift(&x, &y, &f, &[0, 1, 3]),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn collapsing_atoms_with_top_lifts_to_fiber_maxima() {
    let k = bool_one();
    let x = boolean_square(&k);
    let f = [0, 1, 1, 1];
    let y = TypedSet::new(&k, vec!["b".into(), "t".into()], vec![Obj::new(0); 2]).unwrap();
    // every section of f satisfies the maximality clause
    for g in [[0, 1], [0, 2], [0, 3]] {
        let l = section_lift(&x, &y, &f, &g).unwrap();
        assert_eq!(l.section, vec![0, 3]);
        assert!(l.report.passed(), "{}", l.report);
    }
}

#[test]
fn trivial_instance_passes_all_steps() {
    let k = bool_one();
    let inst = trivial_instance(&chain(&k, 2));
    let r = verify_split_lift(&inst, &[], SplitOptions::default()).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn closure_instance_matches_fixed_points() {
    let k = bool_one();
    let y = boolean_square(&k);
    // join-preserving closure adding the element 0 to nonempty sets
    let c = [0, 1, 3, 3];
    let inst = closure_instance(&y, &c);
    let r = verify_split_lift(&inst, &[], SplitOptions::default()).unwrap();
    assert!(r.passed(), "{r}");
    let fp = closure_fixpoints(&y, &c).unwrap();
    let z = TypedSet::new(&k, inst.z.labels().to_vec(), inst.z.types().to_vec()).unwrap();
    let lifted = section_lift(&y, &z, &inst.h, &inst.s).unwrap();
    assert_eq!(lifted.category.hom_entries(), fp.category.hom_entries());
    let step2 = r.get("step2.unique_mediator").unwrap();
    assert!(step2.cases > 0);
}

#[test]
fn chain_closure_instance_passes() {
    let k = bool_one();
    let y = chain(&k, 3);
    let inst = closure_instance(&y, &[0, 2, 2]);
    let r = verify_split_lift(&inst, &[], SplitOptions::default()).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn corrupted_section_is_rejected() {
    let k = bool_one();
    let y = boolean_square(&k);
    let mut inst = closure_instance(&y, &[0, 1, 3, 3]);
    inst.s = vec![inst.s[1]; inst.s.len()];
    let r = verify_split_lift(&inst, &[], SplitOptions::default()).unwrap();
    let c = r.get("split.hs_identity").unwrap();
    assert_eq!(c.status, Status::Fail);
    assert_eq!(c.witnesses[0].get("at"), Some(inst.z.label(0)));
    assert_eq!(r.status("step1"), Some(Status::Skipped));
}

#[test]
fn corrupted_gamma_is_detected() {
    let k = bool_one();
    let y = boolean_square(&k);
    let mut inst = closure_instance(&y, &[0, 1, 3, 3]);
    // an indiscrete γ is symmetric, but then s cannot be a functor into the
    // discrete Y_s; over 2 the preconditions already force γ = ξ_s
    let n = inst.z.len();
    inst.z = inst.z.with_hom(vec![Elem::new(1); n * n]).unwrap();
    let r = verify_split_lift(&inst, &[], SplitOptions::default()).unwrap();
    assert_eq!(r.status("split.s.functor.hom_monotone"), Some(Status::Fail));
    assert_eq!(r.status("step1"), Some(Status::Skipped));
}
