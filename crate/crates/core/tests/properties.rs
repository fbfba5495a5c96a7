//! Property tests over randomly chosen quantale elements, relations,
//! Q-sets and intervals.

use std::sync::{Arc, LazyLock};

use proptest::prelude::*;

use qsets::demo::{interval_partial_metric, Interval};
use qsets::monad::{check_monad_laws, ps_object, LawMode, LawOptions};
use qsets::monadicity::generate::categories_up_to_iso;
use qsets::presheaf::laws::check_yoneda;
use qsets::presheaf::{direct_image, yoneda_presheaf, PresheafCategory};
use qsets::qcat::{
    compose_rel, identity_rel, imp_left, imp_right, is_functor, validate_qset, QCategory, QRelation,
};
use qsets::quantale::{Lawvere, LawvereValue, Monoid, Topology};
use qsets::{build_dstar, Elem, FiniteQuantale, Obj, Quantale, Quantaloid};

static BUILTINS: LazyLock<Vec<FiniteQuantale>> = LazyLock::new(|| {
    let mut v = vec![FiniteQuantale::boolean2()];
    for n in 2..=6 {
        v.push(FiniteQuantale::chain_goedel(n).unwrap());
        v.push(FiniteQuantale::chain_lukasiewicz(n).unwrap());
    }
    v.push(FiniteQuantale::finite_frame(&Topology::sierpinski()).unwrap());
    v.push(FiniteQuantale::powerset_of_monoid(&Monoid::cyclic(2)).unwrap());
    v.push(FiniteQuantale::powerset_of_monoid(&Monoid::cyclic(3)).unwrap());
    v
});

static DSTAR_L3: LazyLock<Arc<Quantaloid>> = LazyLock::new(|| {
    Arc::new(build_dstar(Arc::new(FiniteQuantale::chain_lukasiewicz(3).unwrap())).unwrap())
});

static QSETS_L3: LazyLock<Vec<QCategory>> = LazyLock::new(|| {
    categories_up_to_iso(&DSTAR_L3, 2, 1 << 16)
        .unwrap()
        .into_iter()
        .filter(QCategory::is_symmetric)
        .collect()
});

static CATS_G3: LazyLock<Vec<QCategory>> = LazyLock::new(|| {
    let k = Arc::new(build_dstar(Arc::new(FiniteQuantale::chain_goedel(3).unwrap())).unwrap());
    categories_up_to_iso(&k, 3, 1 << 16).unwrap()
});

/// A builtin quantale and three of its elements.
fn quantale_and_triple() -> impl Strategy<Value = (usize, Elem, Elem, Elem)> {
    (0..BUILTINS.len()).prop_flat_map(|i| {
        let n = BUILTINS[i].len();
        (Just(i), 0..n, 0..n, 0..n)
            .prop_map(|(i, a, b, c)| (i, Elem::new(a), Elem::new(b), Elem::new(c)))
    })
}

/// A random relation between typed sets over `D*(Ł3)`, given as choices.
fn relation(src: &[Obj], tgt: &[Obj], picks: &[usize]) -> QRelation {
    let k = &*DSTAR_L3;
    let entries = src
        .iter()
        .flat_map(|&p| tgt.iter().map(move |&q| (p, q)))
        .zip(picks)
        .map(|((p, q), &i)| {
            let hom = k.hom(p, q);
            hom[i % hom.len()]
        })
        .collect();
    QRelation::new(k, src.to_vec(), tgt.to_vec(), entries).unwrap()
}

fn types(choices: &[usize]) -> Vec<Obj> {
    let n = DSTAR_L3.num_objects();
    choices.iter().map(|&c| Obj::new(c % n)).collect()
}

fn lawvere_value() -> impl Strategy<Value = LawvereValue> {
    prop_oneof![
        9 => (0i64..40, 1i64..7).prop_map(|(n, d)| LawvereValue::ratio(n, d)),
        1 => Just(LawvereValue::Infinity),
    ]
}

proptest! {
    #[test]
    fn residuation((i, p, b, r) in quantale_and_triple()) {
        let q = &BUILTINS[i];
        let lhs = q.leq(q.mul2(p, b), r);
        prop_assert_eq!(lhs, q.leq(p, q.limp(r, b)));
        prop_assert_eq!(lhs, q.leq(b, q.rimp(p, r)));
    }

    #[test]
    fn multiplication_is_associative_and_distributes((i, a, b, c) in quantale_and_triple()) {
        let q = &BUILTINS[i];
        prop_assert_eq!(q.mul2(q.mul2(a, b), c), q.mul2(a, q.mul2(b, c)));
        prop_assert_eq!(q.mul2(a, q.join2(b, c)), q.join2(q.mul2(a, b), q.mul2(a, c)));
        prop_assert_eq!(q.mul2(q.join2(a, b), c), q.join2(q.mul2(a, c), q.mul2(b, c)));
    }

    #[test]
    fn involution_is_an_anti_automorphism((i, a, b, _c) in quantale_and_triple()) {
        let q = &BUILTINS[i];
        prop_assert_eq!(q.leq(a, b), q.leq(q.inv(a), q.inv(b)));
        prop_assert_eq!(q.inv(q.inv(a)), a);
        prop_assert_eq!(q.inv(q.mul2(a, b)), q.mul2(q.inv(b), q.inv(a)));
    }

    #[test]
    fn lawvere_residuation(a in lawvere_value(), x in lawvere_value(), r in lawvere_value()) {
        let l = Lawvere;
        let lhs = l.le(&l.mul(&a, &x), &r);
        prop_assert_eq!(lhs, l.le(&x, &l.right_imp(&a, &r)));
        prop_assert_eq!(lhs, l.le(&a, &l.left_imp(&r, &x)));
    }

    #[test]
    fn relation_composition_is_associative_and_unital(
        ts in prop::collection::vec(0usize..3, 1..4),
        us in prop::collection::vec(0usize..3, 1..4),
        vs in prop::collection::vec(0usize..3, 1..4),
        ws in prop::collection::vec(0usize..3, 1..4),
        picks in prop::collection::vec(0usize..6, 48),
    ) {
        let k = &*DSTAR_L3;
        let (x, y, z, w) = (types(&ts), types(&us), types(&vs), types(&ws));
        let phi = relation(&x, &y, &picks[0..]);
        let psi = relation(&y, &z, &picks[16..]);
        let chi = relation(&z, &w, &picks[32..]);
        let left = compose_rel(k, &compose_rel(k, &phi, &psi).unwrap(), &chi).unwrap();
        let right = compose_rel(k, &phi, &compose_rel(k, &psi, &chi).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(compose_rel(k, &identity_rel(k, &x), &phi).unwrap(), phi.clone());
        prop_assert_eq!(compose_rel(k, &phi, &identity_rel(k, &y)).unwrap(), phi);
    }

    #[test]
    fn relation_implications_are_residuals(
        ts in prop::collection::vec(0usize..3, 1..4),
        us in prop::collection::vec(0usize..3, 1..4),
        vs in prop::collection::vec(0usize..3, 1..4),
        picks in prop::collection::vec(0usize..6, 48),
    ) {
        let k = &*DSTAR_L3;
        let (x, y, z) = (types(&ts), types(&us), types(&vs));
        let phi = relation(&x, &y, &picks[0..]);
        let psi = relation(&y, &z, &picks[16..]);
        let eta = relation(&x, &z, &picks[32..]);
        let below = compose_rel(k, &phi, &psi).unwrap().le(k, &eta);
        prop_assert_eq!(below, psi.le(k, &imp_left(k, &eta, &phi).unwrap()));
        prop_assert_eq!(below, phi.le(k, &imp_right(k, &psi, &eta).unwrap()));
    }

    #[test]
    fn yoneda_is_fully_faithful_and_natural(i in 0..CATS_G3.len(), j in 0..CATS_G3.len(), pick in any::<u64>()) {
        let (x, y) = (&CATS_G3[i], &CATS_G3[j]);
        let px = PresheafCategory::build(x, 1 << 16).unwrap();
        prop_assert!(check_yoneda(x, &px).unwrap().passed());
        // f→(y a) = y(f a) for a functor f, when one exists with this pick
        let maps = qsets::qcat::type_preserving_maps(x, y, 1 << 16).unwrap();
        let functors: Vec<_> = maps.into_iter().filter(|f| is_functor(x, y, f)).collect();
        if !functors.is_empty() {
            let f = &functors[(pick % functors.len() as u64) as usize];
            for a in 0..x.len() {
                prop_assert_eq!(direct_image(x, y, f, &yoneda_presheaf(x, a)), yoneda_presheaf(y, f[a]));
            }
        }
    }

    #[test]
    fn interval_partial_metric_is_a_qset(
        raw in prop::collection::vec((0i64..30, 0i64..30, 1i64..5), 1..12),
    ) {
        let xs: Vec<Interval> = raw
            .iter()
            .map(|&(a, len, d)| Interval { lo: LawvereValue::ratio(a, d), hi: LawvereValue::ratio(a + len, d) })
            .collect();
        let labels: Vec<String> = xs.iter().map(Interval::label).collect();
        let r = validate_qset(&Lawvere, &labels, &interval_partial_metric(&xs));
        prop_assert!(r.passed(), "{}", r);
    }
}

// Building Ps²X dominates these; fewer cases keep the suite fast.
proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn monad_laws_on_random_qsets(i in 0..QSETS_L3.len(), seed in any::<u64>()) {
        let x = &QSETS_L3[i];
        let opts = LawOptions { mode: LawMode::Sampled { seed, count: 40 }, cap: 1 << 16 };
        let r = check_monad_laws(x, opts).unwrap();
        prop_assert!(r.passed(), "{}", r);
    }

    #[test]
    fn power_object_is_a_separated_qset(i in 0..QSETS_L3.len()) {
        let ps = ps_object(&QSETS_L3[i], 1 << 16).unwrap();
        let c = ps.category();
        prop_assert!(c.is_valid() && c.is_symmetric());
        prop_assert!(ps.presheaves().category().is_separated());
    }
}
