//! Finite involutive quantaloids whose arrows are elements of a base quantale.
//!
//! Every hom-set `hom(p, q)` is a subset of the base carrier with the
//! inherited order. Composition follows one of two rules: plain
//! multiplication (one-object quantaloids) or the `D*(Q)` rule
//! `e ∘ d = (e / q) & d` for `d: p → q`, `e: q → r`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{structural, Error, Result};
use crate::quantale::{hermitian_elements, Elem, FiniteQuantale};
use crate::report::{CheckBuilder, LawReport, Witness};

/// An object of a quantaloid, by position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Obj(u16);

impl Obj {
    pub fn new(index: usize) -> Self {
        Obj(u16::try_from(index).expect("object index fits in u16"))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompositionRule {
    /// `v ∘ u = v & u`.
    Multiply,
    /// `e ∘ d = (e / q) & d` where `q` is the middle object's element.
    DStar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuantaloidKind {
    OneObject,
    DStar,
    Custom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Hom {
    elems: Vec<Elem>,
    member: Vec<bool>,
    bottom: Elem,
    top: Elem,
}

const NONE: u16 = u16::MAX;

/// A finite involutive quantaloid over a base quantale.
#[derive(Debug)]
pub struct Quantaloid {
    name: String,
    kind: QuantaloidKind,
    base: Arc<FiniteQuantale>,
    object_names: Vec<String>,
    /// Element of the base attached to each object (used by the `D*` rule).
    object_elems: Vec<Elem>,
    homs: Vec<Hom>,
    identities: Vec<Elem>,
    rule: CompositionRule,
    left_imp: Vec<OnceLock<Box<[u16]>>>,
    right_imp: Vec<OnceLock<Box<[u16]>>>,
    hom_meet: Vec<OnceLock<Box<[u16]>>>,
}

impl Quantaloid {
    /// Assembles a quantaloid from explicit hom-sets. Only shape is checked;
    /// use [`validate_quantaloid`] for the axioms.
    ///
    /// `homs[p][q]` lists the arrows `p → q`. Each hom-set must be nonempty
    /// and have a least element.
    pub fn from_parts(
        name: impl Into<String>,
        base: Arc<FiniteQuantale>,
        objects: Vec<(String, Elem)>,
        homs: Vec<Vec<Vec<Elem>>>,
        identities: Vec<Elem>,
        rule: CompositionRule,
    ) -> Result<Self> {
        Self::assemble(
            name.into(),
            QuantaloidKind::Custom,
            base,
            objects,
            homs,
            identities,
            rule,
        )
    }

    fn assemble(
        name: String,
        kind: QuantaloidKind,
        base: Arc<FiniteQuantale>,
        objects: Vec<(String, Elem)>,
        homs: Vec<Vec<Vec<Elem>>>,
        identities: Vec<Elem>,
        rule: CompositionRule,
    ) -> Result<Self> {
        let m = objects.len();
        let n = base.len();
        if m == 0 {
            return Err(structural("a quantaloid needs at least one object"));
        }
        if homs.len() != m || homs.iter().any(|r| r.len() != m) {
            return Err(structural(format!("hom-sets must form a {m}x{m} array")));
        }
        if identities.len() != m {
            return Err(structural(format!("expected {m} identities")));
        }
        for e in identities.iter().chain(objects.iter().map(|(_, e)| e)) {
            base.elem(e.index())?;
        }
        let mut hs = Vec::with_capacity(m * m);
        for (p, row) in homs.iter().enumerate() {
            for (q, list) in row.iter().enumerate() {
                let mut elems = list.clone();
                for e in &elems {
                    base.elem(e.index())?;
                }
                elems.sort();
                elems.dedup();
                let bottom = elems
                    .iter()
                    .copied()
                    .find(|&b| elems.iter().all(|&e| base.leq(b, e)))
                    .ok_or_else(|| {
                        structural(format!(
                            "hom({}, {}) has no least element",
                            objects[p].0, objects[q].0
                        ))
                    })?;
                let top = base.join_all(elems.iter().copied());
                let mut member = vec![false; n];
                for e in &elems {
                    member[e.index()] = true;
                }
                hs.push(Hom {
                    elems,
                    member,
                    bottom,
                    top,
                });
            }
        }
        let (object_names, object_elems) = objects.into_iter().unzip();
        Ok(Quantaloid {
            name,
            kind,
            base,
            object_names,
            object_elems,
            homs: hs,
            identities,
            rule,
            left_imp: (0..m * m * m).map(|_| OnceLock::new()).collect(),
            right_imp: (0..m * m * m).map(|_| OnceLock::new()).collect(),
            hom_meet: (0..m * m).map(|_| OnceLock::new()).collect(),
        })
    }

    /// A quantale as a one-object quantaloid.
    pub fn one_object(base: Arc<FiniteQuantale>) -> Self {
        let all: Vec<Elem> = base.elems().collect();
        let k = base.unit_elem();
        Self::assemble(
            format!("one_object({})", base.name()),
            QuantaloidKind::OneObject,
            base,
            vec![("*".to_string(), k)],
            vec![vec![all]],
            vec![k],
            CompositionRule::Multiply,
        )
        .expect("a quantale is a one-object quantaloid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> QuantaloidKind {
        self.kind
    }

    pub fn base(&self) -> &Arc<FiniteQuantale> {
        &self.base
    }

    pub fn num_objects(&self) -> usize {
        self.object_names.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = Obj> + Clone {
        (0..self.num_objects()).map(Obj::new)
    }

    pub fn object_name(&self, p: Obj) -> &str {
        &self.object_names[p.index()]
    }

    pub fn object_elem(&self, p: Obj) -> Elem {
        self.object_elems[p.index()]
    }

    /// The object whose attached element is `e` (for `D*(Q)`: the hermitian element `e`).
    pub fn object_of_elem(&self, e: Elem) -> Option<Obj> {
        self.object_elems.iter().position(|&x| x == e).map(Obj::new)
    }

    pub fn object_by_name(&self, name: &str) -> Option<Obj> {
        self.object_names
            .iter()
            .position(|s| s == name)
            .map(Obj::new)
    }

    #[inline]
    fn hom_ref(&self, p: Obj, q: Obj) -> &Hom {
        &self.homs[p.index() * self.num_objects() + q.index()]
    }

    /// Arrows `p → q` in carrier order.
    pub fn hom(&self, p: Obj, q: Obj) -> &[Elem] {
        &self.hom_ref(p, q).elems
    }

    #[inline]
    pub fn in_hom(&self, p: Obj, q: Obj, d: Elem) -> bool {
        self.hom_ref(p, q).member[d.index()]
    }

    pub fn hom_bottom(&self, p: Obj, q: Obj) -> Elem {
        self.hom_ref(p, q).bottom
    }

    pub fn hom_top(&self, p: Obj, q: Obj) -> Elem {
        self.hom_ref(p, q).top
    }

    pub fn identity(&self, q: Obj) -> Elem {
        self.identities[q.index()]
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.base.leq(a, b)
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.base.join2(a, b)
    }

    /// Arrow involution `d ↦ d°`, mapping `hom(p, q)` to `hom(q, p)`.
    #[inline]
    pub fn involution(&self, d: Elem) -> Elem {
        self.base.inv(d)
    }

    /// The composite `e ∘ d` of `d: p → q` and `e: q → r`.
    #[inline]
    pub fn compose(&self, q: Obj, d: Elem, e: Elem) -> Elem {
        match self.rule {
            CompositionRule::Multiply => self.base.mul2(e, d),
            CompositionRule::DStar => {
                let qe = self.object_elems[q.index()];
                self.base.mul2(self.base.limp(e, qe), d)
            }
        }
    }

    /// Meet of `a` and `b` in the complete lattice `hom(p, q)`.
    pub fn meet(&self, p: Obj, q: Obj, a: Elem, b: Elem) -> Elem {
        let n = self.base.len();
        let block = self.hom_meet[p.index() * self.num_objects() + q.index()].get_or_init(|| {
            let hom = self.hom_ref(p, q);
            let mut t = vec![NONE; n * n].into_boxed_slice();
            for &x in &hom.elems {
                for &y in &hom.elems {
                    let lower = hom
                        .elems
                        .iter()
                        .copied()
                        .filter(|&z| self.leq(z, x) && self.leq(z, y));
                    t[x.index() * n + y.index()] = self.base.join_all(lower).index() as u16;
                }
            }
            t
        });
        let v = block[a.index() * n + b.index()];
        debug_assert!(v != NONE, "meet of non-members");
        Elem::new(v as usize)
    }

    fn block_index(&self, p: Obj, q: Obj, r: Obj) -> usize {
        let m = self.num_objects();
        (p.index() * m + q.index()) * m + r.index()
    }

    /// Left implication `w ↙ u ∈ hom(q, r)` for `u: p → q`, `w: p → r`:
    /// the largest `v` with `v ∘ u ≤ w`.
    pub fn left_imp(&self, p: Obj, q: Obj, r: Obj, w: Elem, u: Elem) -> Result<Elem> {
        let n = self.base.len();
        let block = self.left_imp[self.block_index(p, q, r)].get_or_init(|| {
            let mut t = vec![NONE; n * n].into_boxed_slice();
            for &u in self.hom(p, q) {
                for &w in self.hom(p, r) {
                    let cands = self
                        .hom(q, r)
                        .iter()
                        .copied()
                        .filter(|&v| self.leq(self.compose(q, u, v), w));
                    let j = self.base.join_all(cands);
                    if self.in_hom(q, r, j) && self.leq(self.compose(q, u, j), w) {
                        t[w.index() * n + u.index()] = j.index() as u16;
                    }
                }
            }
            t
        });
        self.read_imp(block[w.index() * n + u.index()], || {
            format!(
                "no largest v in hom({}, {}) with v∘{} <= {}",
                self.object_name(q),
                self.object_name(r),
                self.base.name_of(u),
                self.base.name_of(w)
            )
        })
    }

    /// Right implication `v ↘ w ∈ hom(p, q)` for `v: q → r`, `w: p → r`:
    /// the largest `u` with `v ∘ u ≤ w`.
    pub fn right_imp(&self, p: Obj, q: Obj, r: Obj, v: Elem, w: Elem) -> Result<Elem> {
        let n = self.base.len();
        let block = self.right_imp[self.block_index(p, q, r)].get_or_init(|| {
            let mut t = vec![NONE; n * n].into_boxed_slice();
            for &v in self.hom(q, r) {
                for &w in self.hom(p, r) {
                    let cands = self
                        .hom(p, q)
                        .iter()
                        .copied()
                        .filter(|&u| self.leq(self.compose(q, u, v), w));
                    let j = self.base.join_all(cands);
                    if self.in_hom(p, q, j) && self.leq(self.compose(q, j, v), w) {
                        t[v.index() * n + w.index()] = j.index() as u16;
                    }
                }
            }
            t
        });
        self.read_imp(block[v.index() * n + w.index()], || {
            format!(
                "no largest u in hom({}, {}) with {}∘u <= {}",
                self.object_name(p),
                self.object_name(q),
                self.base.name_of(v),
                self.base.name_of(w)
            )
        })
    }

    fn read_imp(&self, v: u16, msg: impl FnOnce() -> String) -> Result<Elem> {
        if v == NONE {
            Err(Error::Structural(format!(
                "{} is not residuated (or arguments lie outside their hom-sets): {}",
                self.name,
                msg()
            )))
        } else {
            Ok(Elem::new(v as usize))
        }
    }

    pub fn show(&self, e: Elem) -> &str {
        self.base.name_of(e)
    }
}

/// Builds `D*(Q)`: objects are the hermitian elements of `q`, and
/// `hom(p, q) = { d ≤ p ∧ q | (d / p) & p = d = q & (q \ d) }`.
///
/// Fails if the two composition formulas `(e / q) & d` and `e & (q \ d)`
/// disagree on a composable pair, or if a hom-set is not closed under joins.
pub fn build_dstar(q: Arc<FiniteQuantale>) -> Result<Quantaloid> {
    let objs = hermitian_elements(&q);
    let m = objs.len();
    let mut homs = vec![vec![Vec::new(); m]; m];
    for (i, &p) in objs.iter().enumerate() {
        for (j, &r) in objs.iter().enumerate() {
            homs[i][j] = q
                .elems()
                .filter(|&d| {
                    q.leq(d, q.meet2(p, r))
                        && q.mul2(q.limp(d, p), p) == d
                        && q.mul2(r, q.rimp(r, d)) == d
                })
                .collect();
        }
    }
    for i in 0..m {
        for j in 0..m {
            let h = &homs[i][j];
            for &a in h {
                for &b in h {
                    if !h.contains(&q.join2(a, b)) {
                        return Err(structural(format!(
                            "D*({}) hom({}, {}) is not closed under joins: {} ∨ {}",
                            q.name(),
                            q.name_of(objs[i]),
                            q.name_of(objs[j]),
                            q.name_of(a),
                            q.name_of(b)
                        )));
                    }
                }
            }
            for k in 0..m {
                let mid = objs[j];
                for &d in &homs[i][j] {
                    for &e in &homs[j][k] {
                        let first = q.mul2(q.limp(e, mid), d);
                        let second = q.mul2(e, q.rimp(mid, d));
                        if first != second {
                            return Err(structural(format!(
                                "D*({}) composition formulas disagree at d={}, e={} through {}: {} vs {}",
                                q.name(),
                                q.name_of(d),
                                q.name_of(e),
                                q.name_of(mid),
                                q.name_of(first),
                                q.name_of(second)
                            )));
                        }
                    }
                }
            }
        }
    }
    let objects = objs
        .iter()
        .map(|&e| (q.name_of(e).to_string(), e))
        .collect();
    Quantaloid::assemble(
        format!("D*({})", q.name()),
        QuantaloidKind::DStar,
        q,
        objects,
        homs,
        objs.clone(),
        CompositionRule::DStar,
    )
}

/// Checks the quantaloid axioms exhaustively: hom-sets are complete
/// sublattices, composition is closed, associative, unital and preserves
/// joins, and the involution reverses composition.
pub fn validate_quantaloid(k: &Quantaloid) -> LawReport {
    let mut report = LawReport::new(k.name().to_string());
    let objs: Vec<Obj> = k.objects().collect();
    let on = |p: Obj| k.object_name(p).to_string();
    let en = |e: Elem| k.show(e).to_string();

    let mut jc = CheckBuilder::new("hom.join_closed");
    for &p in &objs {
        for &q in &objs {
            for &a in k.hom(p, q) {
                for &b in k.hom(p, q) {
                    let j = k.join(a, b);
                    jc.case(k.in_hom(p, q, j), || {
                        Witness::new()
                            .with("hom", format!("({}, {})", on(p), on(q)))
                            .with("a", en(a))
                            .with("b", en(b))
                            .with("join", en(j))
                    });
                }
            }
        }
    }
    report.push(jc.finish());

    let mut closed = CheckBuilder::new("composition.closed");
    let mut jp = CheckBuilder::new("composition.join_preservation");
    for &p in &objs {
        for &q in &objs {
            for &r in &objs {
                let bot_pq = k.hom_bottom(p, q);
                let bot_qr = k.hom_bottom(q, r);
                let bot_pr = k.hom_bottom(p, r);
                for &d in k.hom(p, q) {
                    for &e in k.hom(q, r) {
                        let c = k.compose(q, d, e);
                        closed.case(k.in_hom(p, r, c), || {
                            Witness::new()
                                .with("objects", format!("{} -> {} -> {}", on(p), on(q), on(r)))
                                .with("d", en(d))
                                .with("e", en(e))
                                .with("e∘d", en(c))
                        });
                    }
                }
                for &e in k.hom(q, r) {
                    jp.case(k.compose(q, bot_pq, e) == bot_pr, || {
                        Witness::new().with("e", en(e)).with("d", "bottom")
                    });
                    for &d1 in k.hom(p, q) {
                        for &d2 in k.hom(p, q) {
                            let l = k.compose(q, k.join(d1, d2), e);
                            let rr = k.join(k.compose(q, d1, e), k.compose(q, d2, e));
                            jp.case(l == rr, || {
                                Witness::new()
                                    .with("e", en(e))
                                    .with("d1", en(d1))
                                    .with("d2", en(d2))
                            });
                        }
                    }
                }
                for &d in k.hom(p, q) {
                    jp.case(k.compose(q, d, bot_qr) == bot_pr, || {
                        Witness::new().with("d", en(d)).with("e", "bottom")
                    });
                    for &e1 in k.hom(q, r) {
                        for &e2 in k.hom(q, r) {
                            let l = k.compose(q, d, k.join(e1, e2));
                            let rr = k.join(k.compose(q, d, e1), k.compose(q, d, e2));
                            jp.case(l == rr, || {
                                Witness::new()
                                    .with("d", en(d))
                                    .with("e1", en(e1))
                                    .with("e2", en(e2))
                            });
                        }
                    }
                }
            }
        }
    }
    report.push(closed.finish());
    report.push(jp.finish());

    let mut assoc = CheckBuilder::new("composition.associativity");
    for &p in &objs {
        for &q in &objs {
            for &r in &objs {
                for &s in &objs {
                    for &a in k.hom(p, q) {
                        for &b in k.hom(q, r) {
                            let ba = k.compose(q, a, b);
                            for &c in k.hom(r, s) {
                                let l = k.compose(r, ba, c);
                                let rr = k.compose(q, a, k.compose(r, b, c));
                                assoc.case(l == rr, || {
                                    Witness::new()
                                        .with("a", en(a))
                                        .with("b", en(b))
                                        .with("c", en(c))
                                        .with("(c∘b)∘a", en(rr))
                                        .with("c∘(b∘a)", en(l))
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    report.push(assoc.finish());

    let mut id = CheckBuilder::new("identity.neutral");
    for &q in &objs {
        let one = k.identity(q);
        id.case(k.in_hom(q, q, one), || {
            Witness::new()
                .with("object", on(q))
                .with("identity", en(one))
                .with("problem", "identity not in hom(q, q)")
        });
        for &p in &objs {
            for &d in k.hom(p, q) {
                let l = k.compose(q, d, one);
                id.case(l == d, || {
                    Witness::new()
                        .with("d", en(d))
                        .with("1_q∘d", en(l))
                        .with("q", on(q))
                });
            }
            for &d in k.hom(q, p) {
                let r = k.compose(q, one, d);
                id.case(r == d, || {
                    Witness::new()
                        .with("d", en(d))
                        .with("d∘1_q", en(r))
                        .with("q", on(q))
                });
            }
        }
    }
    report.push(id.finish());

    let mut inv = CheckBuilder::new("involution.laws");
    for &p in &objs {
        let one = k.identity(p);
        inv.case(k.involution(one) == one, || {
            Witness::new()
                .with("identity", en(one))
                .with("object", on(p))
        });
        for &q in &objs {
            for &d in k.hom(p, q) {
                let dc = k.involution(d);
                inv.case(k.in_hom(q, p, dc) && k.involution(dc) == d, || {
                    Witness::new().with("d", en(d)).with("d°", en(dc))
                });
                for &d2 in k.hom(p, q) {
                    inv.case(
                        k.involution(k.join(d, d2)) == k.join(dc, k.involution(d2)),
                        || Witness::new().with("d1", en(d)).with("d2", en(d2)),
                    );
                }
                for &r in &objs {
                    for &e in k.hom(q, r) {
                        let l = k.involution(k.compose(q, d, e));
                        let rr = k.compose(q, k.involution(e), dc);
                        inv.case(l == rr, || {
                            Witness::new()
                                .with("d", en(d))
                                .with("e", en(e))
                                .with("(e∘d)°", en(l))
                                .with("d°∘e°", en(rr))
                        });
                    }
                }
            }
        }
    }
    report.push(inv.finish());

    let mut res = CheckBuilder::new("implications.residuation");
    for &p in &objs {
        for &q in &objs {
            for &r in &objs {
                for &u in k.hom(p, q) {
                    for &w in k.hom(p, r) {
                        let li = k.left_imp(p, q, r, w, u);
                        for &v in k.hom(q, r) {
                            let lhs = k.leq(k.compose(q, u, v), w);
                            let ri = k.right_imp(p, q, r, v, w);
                            let ok = match (&li, &ri) {
                                (Ok(li), Ok(ri)) => lhs == k.leq(v, *li) && lhs == k.leq(u, *ri),
                                _ => false,
                            };
                            res.case(ok, || {
                                Witness::new()
                                    .with("u", en(u))
                                    .with("v", en(v))
                                    .with("w", en(w))
                            });
                        }
                    }
                }
            }
        }
    }
    report.push(res.finish());
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantale::Monoid;
    use crate::report::Status;

    fn dstar(q: FiniteQuantale) -> Quantaloid {
        build_dstar(Arc::new(q)).unwrap()
    }

    fn names(k: &Quantaloid, es: &[Elem]) -> Vec<String> {
        es.iter().map(|&e| k.show(e).to_string()).collect()
    }

    #[test]
    fn dstar_boolean_homs() {
        let k = dstar(FiniteQuantale::boolean2());
        assert_eq!(k.num_objects(), 2);
        let (z, o) = (Obj::new(0), Obj::new(1));
        assert_eq!(k.object_name(z), "0");
        assert_eq!(names(&k, k.hom(o, o)), ["0", "1"]);
        assert_eq!(names(&k, k.hom(o, z)), ["0"]);
        assert_eq!(names(&k, k.hom(z, o)), ["0"]);
        assert_eq!(names(&k, k.hom(z, z)), ["0"]);
        assert!(validate_quantaloid(&k).passed());
    }

    #[test]
    fn dstar_lukasiewicz_homs_and_identities() {
        let k = dstar(FiniteQuantale::chain_lukasiewicz(3).unwrap());
        assert_eq!(k.num_objects(), 3);
        let one = k.object_by_name("1").unwrap();
        assert_eq!(names(&k, k.hom(one, one)), ["0", "1/2", "1"]);
        for p in k.objects() {
            for q in k.objects() {
                for &d in k.hom(p, q) {
                    assert_eq!(k.compose(q, d, k.identity(q)), d);
                    assert_eq!(k.compose(p, k.identity(p), d), d);
                }
            }
        }
        assert!(validate_quantaloid(&k).passed());
    }

    #[test]
    fn dstar_implications_match_quantale_residuals_on_top_object() {
        let base = FiniteQuantale::chain_lukasiewicz(3).unwrap();
        let k = dstar(base.clone());
        let one = k.object_by_name("1").unwrap();
        for &u in k.hom(one, one) {
            for &w in k.hom(one, one) {
                assert_eq!(k.left_imp(one, one, one, w, u).unwrap(), base.limp(w, u));
                assert_eq!(k.right_imp(one, one, one, u, w).unwrap(), base.rimp(u, w));
            }
        }
    }

    #[test]
    fn one_object_implications_are_quantale_residuals() {
        let base = Arc::new(FiniteQuantale::boolean2());
        let k = Quantaloid::one_object(base.clone());
        let s = Obj::new(0);
        for u in base.elems() {
            for w in base.elems() {
                assert_eq!(k.left_imp(s, s, s, w, u).unwrap(), base.limp(w, u));
            }
            assert_eq!(k.left_imp(s, s, s, u, k.identity(s)).unwrap(), u);
        }
        assert!(validate_quantaloid(&k).passed());
    }

    #[test]
    fn dropping_identity_breaks_identity_law() {
        let base = Arc::new(FiniteQuantale::boolean2());
        let good = build_dstar(base.clone()).unwrap();
        let mut homs = vec![vec![Vec::new(); 2]; 2];
        for p in good.objects() {
            for q in good.objects() {
                homs[p.index()][q.index()] = good.hom(p, q).to_vec();
            }
        }
        homs[1][1] = vec![Elem::new(0)];
        let bad = Quantaloid::from_parts(
            "corrupted",
            base,
            vec![("0".into(), Elem::new(0)), ("1".into(), Elem::new(1))],
            homs,
            vec![Elem::new(0), Elem::new(1)],
            CompositionRule::DStar,
        )
        .unwrap();
        let r = validate_quantaloid(&bad);
        assert_eq!(r.status("identity.neutral"), Some(Status::Fail));
    }

    #[test]
    fn dstar_of_z3_powerset_with_inversion() {
        let q = FiniteQuantale::powerset_of_monoid(&Monoid::cyclic(3)).unwrap();
        let k = dstar(q);
        assert_eq!(k.num_objects(), 4);
        let r = validate_quantaloid(&k);
        assert!(r.passed(), "{r}");
    }
}
