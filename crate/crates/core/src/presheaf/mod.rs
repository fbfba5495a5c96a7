//! Presheaves and copresheaves on a finite enriched category, the
//! categories they form, Yoneda embeddings, direct and inverse images, and
//! suprema in presheaf categories.
//!
//! Completeness (suprema, tensors, cotensors and their duals in an arbitrary
//! category) lives in [`complete`].

pub mod complete;
pub mod laws;

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::qcat::QCategory;
use crate::quantale::Elem;
use crate::quantaloid::{Obj, Quantaloid};

/// Default cap on the number of presheaves an enumeration may produce.
pub const DEFAULT_PRESHEAF_CAP: usize = 100_000;
/// Default cap on candidate maps searched by map enumerations.
pub const DEFAULT_MAP_CAP: usize = 1_000_000;

/// A presheaf of type `ty`: `values[x] = μ(x) ∈ hom(|x|, ty)` with
/// `μ(y) ∘ α(x, y) ≤ μ(x)`.
///
/// The derived order (type first, then values) is the canonical order of
/// enumerations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Presheaf {
    pub ty: Obj,
    pub values: Vec<Elem>,
}

/// A copresheaf of type `ty`: `values[x] = λ(x) ∈ hom(ty, |x|)` with
/// `α(x, y) ∘ λ(x) ≤ λ(y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Copresheaf {
    pub ty: Obj,
    pub values: Vec<Elem>,
}

fn render(k: &Quantaloid, ty: Obj, values: &[Elem], labels: &[String]) -> String {
    let mut s = format!("(type {}) [", k.object_name(ty));
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "{}:{}", labels[i], k.show(*v));
    }
    s.push(']');
    s
}

impl Presheaf {
    /// Checks hom-set membership and the distributor condition.
    pub fn new(x: &QCategory, ty: Obj, values: Vec<Elem>) -> Result<Self> {
        let p = Presheaf { ty, values };
        if let Some(msg) = presheaf_violation(x, &p) {
            return Err(Error::Structural(msg));
        }
        Ok(p)
    }

    pub fn render(&self, k: &Quantaloid, labels: &[String]) -> String {
        render(k, self.ty, &self.values, labels)
    }
}

impl Copresheaf {
    pub fn new(x: &QCategory, ty: Obj, values: Vec<Elem>) -> Result<Self> {
        let p = Copresheaf { ty, values };
        if let Some(msg) = copresheaf_violation(x, &p) {
            return Err(Error::Structural(msg));
        }
        Ok(p)
    }

    pub fn render(&self, k: &Quantaloid, labels: &[String]) -> String {
        render(k, self.ty, &self.values, labels)
    }
}

/// Why `mu` is not a presheaf on `x`, if it is not.
pub fn presheaf_violation(x: &QCategory, mu: &Presheaf) -> Option<String> {
    let k = x.quantaloid();
    if mu.values.len() != x.len() {
        return Some(format!(
            "presheaf has {} values for {} elements",
            mu.values.len(),
            x.len()
        ));
    }
    for (i, &v) in mu.values.iter().enumerate() {
        if v.index() >= k.base().len() || !k.in_hom(x.ty(i), mu.ty, v) {
            return Some(format!(
                "value at {} is not in hom({}, {})",
                x.label(i),
                k.object_name(x.ty(i)),
                k.object_name(mu.ty)
            ));
        }
    }
    for i in 0..x.len() {
        for j in 0..x.len() {
            let c = k.compose(x.ty(j), x.alpha(i, j), mu.values[j]);
            if !k.leq(c, mu.values[i]) {
                return Some(format!(
                    "mu({})∘alpha({}, {}) = {} is not below mu({}) = {}",
                    x.label(j),
                    x.label(i),
                    x.label(j),
                    k.show(c),
                    x.label(i),
                    k.show(mu.values[i])
                ));
            }
        }
    }
    None
}

pub fn is_presheaf(x: &QCategory, mu: &Presheaf) -> bool {
    presheaf_violation(x, mu).is_none()
}

/// Why `lam` is not a copresheaf on `x`, if it is not.
pub fn copresheaf_violation(x: &QCategory, lam: &Copresheaf) -> Option<String> {
    let k = x.quantaloid();
    if lam.values.len() != x.len() {
        return Some(format!(
            "copresheaf has {} values for {} elements",
            lam.values.len(),
            x.len()
        ));
    }
    for (i, &v) in lam.values.iter().enumerate() {
        if v.index() >= k.base().len() || !k.in_hom(lam.ty, x.ty(i), v) {
            return Some(format!(
                "value at {} is not in hom({}, {})",
                x.label(i),
                k.object_name(lam.ty),
                k.object_name(x.ty(i))
            ));
        }
    }
    for i in 0..x.len() {
        for j in 0..x.len() {
            let c = k.compose(x.ty(i), lam.values[i], x.alpha(i, j));
            if !k.leq(c, lam.values[j]) {
                return Some(format!(
                    "alpha({}, {})∘lambda({}) = {} is not below lambda({}) = {}",
                    x.label(i),
                    x.label(j),
                    x.label(i),
                    k.show(c),
                    x.label(j),
                    k.show(lam.values[j])
                ));
            }
        }
    }
    None
}

fn estimate(x: &QCategory, slot: impl Fn(usize, Obj) -> usize) -> String {
    let k = x.quantaloid();
    let mut total: Option<u128> = Some(0);
    for q in k.objects() {
        let prod = (0..x.len()).try_fold(1u128, |acc, i| acc.checked_mul(slot(i, q) as u128));
        total = total.zip(prod).and_then(|(t, p)| t.checked_add(p));
    }
    total.map_or_else(
        || "more than 2^128 candidates".to_string(),
        |t| format!("{t} candidate maps"),
    )
}

/// Backtracking search over value assignments, one type at a time.
/// `candidates(i, q)` lists admissible values at position `i`;
/// `compatible(i, vi, j, vj)` checks the pair condition in both directions.
fn enumerate_weights(
    x: &QCategory,
    cap: usize,
    what: &str,
    candidates: impl Fn(usize, Obj) -> Vec<Elem>,
    compatible: impl Fn(usize, Elem, usize, Elem) -> bool,
) -> Result<Vec<(Obj, Vec<Elem>)>> {
    let k = x.quantaloid();
    let n = x.len();
    let mut out = Vec::new();
    for q in k.objects() {
        let cands: Vec<Vec<Elem>> = (0..n).map(|i| candidates(i, q)).collect();
        if cands.iter().any(|c| c.is_empty()) {
            continue;
        }
        let mut vals: Vec<Elem> = Vec::with_capacity(n);
        let mut pos = vec![0usize; n];
        let mut i = 0usize;
        // iterative depth-first search; `pos[i]` is the next candidate to try at depth i
        loop {
            if i == n {
                out.push((q, vals.clone()));
                if out.len() > cap {
                    return Err(Error::Capacity {
                        what: what.to_string(),
                        cap,
                        estimate: estimate(x, |i, q| candidates(i, q).len()),
                    });
                }
                if n == 0 {
                    break;
                }
                i -= 1;
                vals.pop();
                continue;
            }
            if pos[i] == cands[i].len() {
                pos[i] = 0;
                if i == 0 {
                    break;
                }
                i -= 1;
                vals.pop();
                continue;
            }
            let v = cands[i][pos[i]];
            pos[i] += 1;
            let ok = compatible(i, v, i, v) && (0..i).all(|j| compatible(i, v, j, vals[j]));
            if ok {
                vals.push(v);
                i += 1;
            }
        }
    }
    Ok(out)
}

/// All presheaves on `x`, for every type, in canonical order.
pub fn enumerate_presheaves(x: &QCategory, cap: usize) -> Result<Vec<Presheaf>> {
    let k = x.quantaloid();
    let ws = enumerate_weights(
        x,
        cap,
        "presheaves",
        |i, q| k.hom(x.ty(i), q).to_vec(),
        |i, vi, j, vj| {
            // μ(j)∘α(i,j) ≤ μ(i) and μ(i)∘α(j,i) ≤ μ(j)
            k.leq(k.compose(x.ty(j), x.alpha(i, j), vj), vi)
                && k.leq(k.compose(x.ty(i), x.alpha(j, i), vi), vj)
        },
    )?;
    Ok(ws
        .into_iter()
        .map(|(ty, values)| Presheaf { ty, values })
        .collect())
}

/// All copresheaves on `x`, for every type, in canonical order.
pub fn enumerate_copresheaves(x: &QCategory, cap: usize) -> Result<Vec<Copresheaf>> {
    let k = x.quantaloid();
    let ws = enumerate_weights(
        x,
        cap,
        "copresheaves",
        |i, q| k.hom(q, x.ty(i)).to_vec(),
        |i, vi, j, vj| {
            // α(i,j)∘λ(i) ≤ λ(j) and α(j,i)∘λ(j) ≤ λ(i)
            k.leq(k.compose(x.ty(i), vi, x.alpha(i, j)), vj)
                && k.leq(k.compose(x.ty(j), vj, x.alpha(j, i)), vi)
        },
    )?;
    Ok(ws
        .into_iter()
        .map(|(ty, values)| Copresheaf { ty, values })
        .collect())
}

/// `PX(μ, μ') = μ' ↙ μ = ⋀_x μ'(x) ↙ μ(x)`.
pub fn presheaf_hom(x: &QCategory, mu: &Presheaf, nu: &Presheaf) -> Result<Elem> {
    let k = x.quantaloid();
    let mut acc = k.hom_top(mu.ty, nu.ty);
    for i in 0..x.len() {
        let v = k.left_imp(x.ty(i), mu.ty, nu.ty, nu.values[i], mu.values[i])?;
        acc = k.meet(mu.ty, nu.ty, acc, v);
    }
    Ok(acc)
}

/// `P†X(λ, λ') = λ' ↘ λ = ⋀_x λ'(x) ↘ λ(x)`.
pub fn copresheaf_hom(x: &QCategory, lam: &Copresheaf, kap: &Copresheaf) -> Result<Elem> {
    let k = x.quantaloid();
    let mut acc = k.hom_top(lam.ty, kap.ty);
    for i in 0..x.len() {
        let v = k.right_imp(lam.ty, kap.ty, x.ty(i), kap.values[i], lam.values[i])?;
        acc = k.meet(lam.ty, kap.ty, acc, v);
    }
    Ok(acc)
}

/// The presheaf category `PX` with its elements enumerated.
#[derive(Debug, Clone)]
pub struct PresheafCategory {
    elems: Vec<Presheaf>,
    index: HashMap<Presheaf, usize>,
    cat: QCategory,
}

impl PresheafCategory {
    pub fn build(x: &QCategory, cap: usize) -> Result<Self> {
        let elems = enumerate_presheaves(x, cap)?;
        Self::from_elems(x, elems)
    }

    fn from_elems(x: &QCategory, elems: Vec<Presheaf>) -> Result<Self> {
        let k = x.quantaloid().clone();
        let m = elems.len();
        let mut hom = Vec::with_capacity(m * m);
        for a in &elems {
            for b in &elems {
                hom.push(presheaf_hom(x, a, b)?);
            }
        }
        let labels = elems.iter().map(|p| p.render(&k, x.labels())).collect();
        let types = elems.iter().map(|p| p.ty).collect();
        let cat = QCategory::new(k, labels, types, hom)?;
        let index = elems
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        Ok(PresheafCategory { elems, index, cat })
    }

    pub fn elems(&self) -> &[Presheaf] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn category(&self) -> &QCategory {
        &self.cat
    }

    pub fn get(&self, i: usize) -> &Presheaf {
        &self.elems[i]
    }

    pub fn index_of(&self, p: &Presheaf) -> Option<usize> {
        self.index.get(p).copied()
    }

    fn locate(&self, p: &Presheaf) -> Result<usize> {
        self.index_of(p).ok_or_else(|| {
            Error::Structural(format!(
                "{:?} is not an element of the presheaf category",
                p
            ))
        })
    }
}

/// The copresheaf category `P†X`.
#[derive(Debug, Clone)]
pub struct CopresheafCategory {
    elems: Vec<Copresheaf>,
    index: HashMap<Copresheaf, usize>,
    cat: QCategory,
}

impl CopresheafCategory {
    pub fn build(x: &QCategory, cap: usize) -> Result<Self> {
        let elems = enumerate_copresheaves(x, cap)?;
        let k = x.quantaloid().clone();
        let m = elems.len();
        let mut hom = Vec::with_capacity(m * m);
        for a in &elems {
            for b in &elems {
                hom.push(copresheaf_hom(x, a, b)?);
            }
        }
        let labels = elems.iter().map(|p| p.render(&k, x.labels())).collect();
        let types = elems.iter().map(|p| p.ty).collect();
        let cat = QCategory::new(k, labels, types, hom)?;
        let index = elems
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        Ok(CopresheafCategory { elems, index, cat })
    }

    pub fn elems(&self) -> &[Copresheaf] {
        &self.elems
    }

    pub fn category(&self) -> &QCategory {
        &self.cat
    }

    pub fn index_of(&self, p: &Copresheaf) -> Option<usize> {
        self.index.get(p).copied()
    }
}

/// `y x = α(−, x)`, a presheaf of type `|x|`.
pub fn yoneda_presheaf(x: &QCategory, a: usize) -> Presheaf {
    Presheaf {
        ty: x.ty(a),
        values: (0..x.len()).map(|b| x.alpha(b, a)).collect(),
    }
}

/// `y† x = α(x, −)`, a copresheaf of type `|x|`.
pub fn coyoneda_copresheaf(x: &QCategory, a: usize) -> Copresheaf {
    Copresheaf {
        ty: x.ty(a),
        values: (0..x.len()).map(|b| x.alpha(a, b)).collect(),
    }
}

/// The Yoneda embedding as a map into the enumerated `PX`.
pub fn yoneda(x: &QCategory, px: &PresheafCategory) -> Result<Vec<usize>> {
    (0..x.len())
        .map(|a| px.locate(&yoneda_presheaf(x, a)))
        .collect()
}

/// The co-Yoneda embedding as a map into the enumerated `P†X`.
pub fn co_yoneda(x: &QCategory, pdx: &CopresheafCategory) -> Result<Vec<usize>> {
    (0..x.len())
        .map(|a| {
            pdx.index_of(&coyoneda_copresheaf(x, a))
                .ok_or_else(|| Error::Structural("co-Yoneda image not enumerated".into()))
        })
        .collect()
}

/// `f→μ = μ ∘ f^♮`: `(f→μ)(y) = ⋁_x μ(x) ∘ β(y, fx)`.
pub fn direct_image(x: &QCategory, y: &QCategory, f: &[usize], mu: &Presheaf) -> Presheaf {
    let k = x.quantaloid();
    let values = (0..y.len())
        .map(|b| {
            (0..x.len()).fold(k.hom_bottom(y.ty(b), mu.ty), |acc, a| {
                k.join(acc, k.compose(x.ty(a), y.alpha(b, f[a]), mu.values[a]))
            })
        })
        .collect();
    Presheaf { ty: mu.ty, values }
}

/// `f←λ = λ ∘ f_♮`: `(f←λ)(x) = ⋁_y λ(y) ∘ β(fx, y)`.
pub fn inverse_image(x: &QCategory, y: &QCategory, f: &[usize], lam: &Presheaf) -> Presheaf {
    let k = x.quantaloid();
    let values = (0..x.len())
        .map(|a| {
            (0..y.len()).fold(k.hom_bottom(x.ty(a), lam.ty), |acc, b| {
                k.join(acc, k.compose(y.ty(b), y.alpha(f[a], b), lam.values[b]))
            })
        })
        .collect();
    Presheaf { ty: lam.ty, values }
}

/// `f→: PX → PY` on enumerated presheaf categories.
pub fn f_forward(
    x: &QCategory,
    y: &QCategory,
    f: &[usize],
    px: &PresheafCategory,
    py: &PresheafCategory,
) -> Result<Vec<usize>> {
    px.elems()
        .iter()
        .map(|mu| py.locate(&direct_image(x, y, f, mu)))
        .collect()
}

/// `f←: PY → PX` on enumerated presheaf categories.
pub fn f_backward(
    x: &QCategory,
    y: &QCategory,
    f: &[usize],
    px: &PresheafCategory,
    py: &PresheafCategory,
) -> Result<Vec<usize>> {
    py.elems()
        .iter()
        .map(|lam| px.locate(&inverse_image(x, y, f, lam)))
        .collect()
}

/// `sup_PX Φ = ⋁_μ Φ(μ) ∘ μ` for `Φ` a presheaf on `PX` or on its
/// symmetrization (both have the carrier of `px`).
pub fn sup_presheaf_cat(x: &QCategory, px: &PresheafCategory, phi: &Presheaf) -> Presheaf {
    let k = x.quantaloid();
    let values = (0..x.len())
        .map(|a| {
            px.elems()
                .iter()
                .zip(&phi.values)
                .fold(k.hom_bottom(x.ty(a), phi.ty), |acc, (mu, &w)| {
                    k.join(acc, k.compose(mu.ty, mu.values[a], w))
                })
        })
        .collect();
    Presheaf { ty: phi.ty, values }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::qcat::{check_adjunction, is_functor, type_preserving_maps};
    use crate::quantale::FiniteQuantale;
    use crate::quantaloid::build_dstar;

    fn dstar(q: FiniteQuantale) -> Arc<Quantaloid> {
        Arc::new(build_dstar(Arc::new(q)).unwrap())
    }

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("x{i}")).collect()
    }

    /// Crisp n-set over D*(2): global and separated.
    fn crisp(k: &Arc<Quantaloid>, n: usize) -> QCategory {
        let one = k.object_by_name("1").unwrap();
        QCategory::discrete(k.clone(), labels(n), vec![one; n]).unwrap()
    }

    /// Brute force over all maps X -> Q with the distributor condition checked
    /// through the quantale operations of the D* composition.
    fn brute_presheaves(x: &QCategory) -> Vec<Presheaf> {
        let k = x.quantaloid();
        let q = k.base();
        let mut out = Vec::new();
        for ty in k.objects() {
            let te = k.object_elem(ty);
            let n = x.len();
            let total = q.len().pow(n as u32);
            for code in 0..total {
                let vals: Vec<Elem> = (0..n)
                    .map(|i| Elem::new(code / q.len().pow((n - 1 - i) as u32) % q.len()))
                    .collect();
                let ok = (0..n).all(|i| {
                    let xi = k.object_elem(x.ty(i));
                    let v = vals[i];
                    q.leq(v, q.meet2(xi, te))
                        && q.mul2(q.limp(v, xi), xi) == v
                        && q.mul2(te, q.rimp(te, v)) == v
                        && (0..n).all(|j| {
                            let yj = k.object_elem(x.ty(j));
                            q.leq(q.mul2(q.limp(vals[j], yj), x.alpha(i, j)), v)
                        })
                });
                if ok {
                    out.push(Presheaf { ty, values: vals });
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn crisp_singleton_has_three_presheaves() {
        let k = dstar(FiniteQuantale::boolean2());
        let x = crisp(&k, 1);
        let ps = enumerate_presheaves(&x, 100).unwrap();
        assert_eq!(ps, brute_presheaves(&x));
        let shown: Vec<String> = ps.iter().map(|p| p.render(&k, x.labels())).collect();
        assert_eq!(
            shown,
            ["(type 0) [x0:0]", "(type 1) [x0:0]", "(type 1) [x0:1]"]
        );
    }

    #[test]
    fn crisp_pair_has_five_presheaves() {
        let k = dstar(FiniteQuantale::boolean2());
        let x = crisp(&k, 2);
        let ps = enumerate_presheaves(&x, 100).unwrap();
        assert_eq!(ps.len(), 5);
        assert_eq!(ps.iter().filter(|p| k.object_name(p.ty) == "1").count(), 4);
        assert_eq!(ps, brute_presheaves(&x));
    }

    #[test]
    fn empty_category_has_one_presheaf_per_object() {
        let k = dstar(FiniteQuantale::chain_lukasiewicz(3).unwrap());
        let x = QCategory::discrete(k.clone(), vec![], vec![]).unwrap();
        let ps = enumerate_presheaves(&x, 100).unwrap();
        assert_eq!(ps.len(), k.num_objects());
        assert!(ps.iter().all(|p| p.values.is_empty()));
    }

    #[test]
    fn enumeration_matches_brute_force_on_l3_qsets() {
        let q = FiniteQuantale::chain_lukasiewicz(3).unwrap();
        let k = dstar(q.clone());
        let e = |s: &str| q.elem_by_name(s).unwrap();
        let x = QCategory::from_qset(
            k.clone(),
            labels(2),
            vec![e("1"), e("1/2"), e("1/2"), e("1")],
        )
        .unwrap();
        assert!(x.is_valid());
        assert_eq!(
            enumerate_presheaves(&x, 1000).unwrap(),
            brute_presheaves(&x)
        );
        let y = QCategory::from_qset(k, labels(2), vec![e("1/2"), e("0"), e("0"), e("1")]).unwrap();
        assert!(y.is_valid());
        assert_eq!(
            enumerate_presheaves(&y, 1000).unwrap(),
            brute_presheaves(&y)
        );
    }

    #[test]
    fn cap_is_enforced_with_estimate() {
        let k = dstar(FiniteQuantale::boolean2());
        let x = crisp(&k, 3);
        match enumerate_presheaves(&x, 4) {
            Err(Error::Capacity { cap, estimate, .. }) => {
                assert_eq!(cap, 4);
                assert_eq!(estimate, "9 candidate maps");
            }
            other => panic!("expected capacity error, got {other:?}"),
        }
    }

    #[test]
    fn yoneda_singletons_and_full_faithfulness() {
        let k = dstar(FiniteQuantale::boolean2());
        let x = crisp(&k, 2);
        let px = PresheafCategory::build(&x, 100).unwrap();
        let y = yoneda(&x, &px).unwrap();
        assert_eq!(px.category().label(y[0]), "(type 1) [x0:1, x1:0]");
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(px.category().alpha(y[a], y[b]), x.alpha(a, b));
            }
        }
        assert!(px.category().is_valid());
        assert!(px.category().is_separated());
    }

    #[test]
    fn yoneda_hom_matrix_over_l3() {
        let q = FiniteQuantale::chain_lukasiewicz(3).unwrap();
        let k = dstar(q.clone());
        let e = |s: &str| q.elem_by_name(s).unwrap();
        let x =
            QCategory::from_qset(k, labels(2), vec![e("1"), e("1/2"), e("1/2"), e("1")]).unwrap();
        let px = PresheafCategory::build(&x, 1000).unwrap();
        let y = yoneda(&x, &px).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                // μ'↙μ evaluated directly with quantale residuals
                let direct = q.meet_all((0..2).map(|i| q.limp(x.alpha(i, b), x.alpha(i, a))));
                assert_eq!(px.category().alpha(y[a], y[b]), direct);
                assert_eq!(direct, x.alpha(a, b));
            }
        }
        let pdx = CopresheafCategory::build(&x, 1000).unwrap();
        let cy = co_yoneda(&x, &pdx).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(pdx.category().alpha(cy[a], cy[b]), x.alpha(a, b));
            }
        }
    }

    #[test]
    fn direct_image_is_image_of_subsets() {
        let k = dstar(FiniteQuantale::boolean2());
        let x = crisp(&k, 3);
        let y = crisp(&k, 2);
        let f = [0, 1, 1];
        let one = k.object_by_name("1").unwrap();
        let px = PresheafCategory::build(&x, 100).unwrap();
        for mu in px.elems().iter().filter(|m| m.ty == one) {
            let img = direct_image(&x, &y, &f, mu);
            for b in 0..2 {
                let expect = (0..3).any(|a| f[a] == b && mu.values[a].index() == 1);
                assert_eq!(img.values[b].index() == 1, expect);
            }
        }
    }

    #[test]
    fn forward_is_left_adjoint_to_backward_over_l3() {
        let q = FiniteQuantale::chain_lukasiewicz(3).unwrap();
        let k = dstar(q.clone());
        let e = |s: &str| q.elem_by_name(s).unwrap();
        let x = QCategory::from_qset(
            k.clone(),
            labels(2),
            vec![e("1"), e("1/2"), e("1/2"), e("1")],
        )
        .unwrap();
        let y = QCategory::from_qset(k.clone(), labels(2), vec![e("1"), e("0"), e("0"), e("1")])
            .unwrap();
        let px = PresheafCategory::build(&x, 1000).unwrap();
        let py = PresheafCategory::build(&y, 1000).unwrap();
        let mut checked = 0;
        for f in type_preserving_maps(&x, &y, 100).unwrap() {
            if !is_functor(&x, &y, &f) {
                continue;
            }
            let fw = f_forward(&x, &y, &f, &px, &py).unwrap();
            let bw = f_backward(&x, &y, &f, &px, &py).unwrap();
            let r = check_adjunction(px.category(), py.category(), &fw, &bw);
            assert!(r.passed(), "{r}");
            checked += 1;
        }
        assert!(checked > 0);
    }

    #[test]
    fn identity_images_are_identities() {
        let k = dstar(FiniteQuantale::boolean2());
        let x = crisp(&k, 2);
        let px = PresheafCategory::build(&x, 100).unwrap();
        let id = [0, 1];
        let ids: Vec<usize> = (0..px.len()).collect();
        assert_eq!(f_forward(&x, &x, &id, &px, &px).unwrap(), ids);
        assert_eq!(f_backward(&x, &x, &id, &px, &px).unwrap(), ids);
    }

    #[test]
    fn sup_of_set_of_subsets_is_union() {
        let k = dstar(FiniteQuantale::boolean2());
        let x = crisp(&k, 2);
        let one = k.object_by_name("1").unwrap();
        let px = PresheafCategory::build(&x, 100).unwrap();
        let ppx = PresheafCategory::build(px.category(), 100_000).unwrap();
        let mut seen = 0;
        for phi in ppx.elems().iter().filter(|p| p.ty == one) {
            let s = sup_presheaf_cat(&x, &px, phi);
            for a in 0..2 {
                let expect = px
                    .elems()
                    .iter()
                    .zip(&phi.values)
                    .any(|(mu, w)| w.index() == 1 && mu.values[a].index() == 1);
                assert_eq!(s.values[a].index() == 1, expect);
            }
            seen += 1;
        }
        assert!(seen > 0);
        // sup of a Yoneda image gives back the presheaf
        let ypx = yoneda(px.category(), &ppx).unwrap();
        for (i, mu) in px.elems().iter().enumerate() {
            assert_eq!(&sup_presheaf_cat(&x, &px, ppx.get(ypx[i])), mu);
        }
    }

    #[test]
    fn sup_over_l3_singleton_matches_double_loop() {
        let q = FiniteQuantale::chain_lukasiewicz(3).unwrap();
        let k = dstar(q.clone());
        let x =
            QCategory::from_qset(k.clone(), labels(1), vec![q.elem_by_name("1").unwrap()]).unwrap();
        let px = PresheafCategory::build(&x, 100).unwrap();
        let ppx = PresheafCategory::build(px.category(), 100_000).unwrap();
        for phi in ppx.elems() {
            let s = sup_presheaf_cat(&x, &px, phi);
            let tq = k.object_elem(phi.ty);
            let mut acc = q.bottom_elem();
            for (mu, &w) in px.elems().iter().zip(&phi.values) {
                let mq = k.object_elem(mu.ty);
                acc = q.join2(acc, q.mul2(q.limp(w, mq), mu.values[0]));
            }
            assert!(q.leq(acc, tq));
            assert_eq!(s.values[0], acc);
        }
    }

    #[test]
    fn presheaf_new_rejects_non_distributors() {
        let q = FiniteQuantale::boolean2();
        let k = dstar(q);
        let one = k.object_by_name("1").unwrap();
        let x = QCategory::from_fn(k.clone(), labels(2), vec![one, one], |a, b| {
            Elem::new(usize::from(a <= b))
        })
        .unwrap();
        // μ(x1) = 1 forces μ(x0) = 1 because x0 ≤ x1
        assert!(Presheaf::new(&x, one, vec![Elem::new(0), Elem::new(1)]).is_err());
        assert!(Presheaf::new(&x, one, vec![Elem::new(1), Elem::new(0)]).is_ok());
    }
}
