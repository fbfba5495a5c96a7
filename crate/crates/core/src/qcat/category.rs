use std::sync::Arc;

use crate::error::{Error, Result};
use crate::quantale::Elem;
use crate::quantaloid::{Obj, Quantaloid};
use crate::report::{CheckBuilder, LawReport, Witness};

use super::relation::{compose_rel, QRelation, TypedSet};

/// A typed set with a hom matrix `α`. Construction checks shape and
/// hom-set membership; [`QCategory::validate`] checks the category axioms.
#[derive(Debug, Clone)]
pub struct QCategory {
    k: Arc<Quantaloid>,
    carrier: TypedSet,
    hom: Vec<Elem>,
}

impl PartialEq for QCategory {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.k, &other.k) && self.carrier == other.carrier && self.hom == other.hom
    }
}

impl QCategory {
    pub fn new(
        k: Arc<Quantaloid>,
        labels: Vec<String>,
        types: Vec<Obj>,
        hom: Vec<Elem>,
    ) -> Result<Self> {
        let carrier = TypedSet::new(&k, labels, types)?;
        let n = carrier.len();
        if hom.len() != n * n {
            return Err(Error::Structural(format!(
                "hom matrix for {n} elements needs {} entries, got {}",
                n * n,
                hom.len()
            )));
        }
        let c = QCategory { k, carrier, hom };
        for x in 0..n {
            for y in 0..n {
                let e = c.hom[x * n + y];
                let (p, q) = (c.ty(x), c.ty(y));
                if e.index() >= c.k.base().len() || !c.k.in_hom(p, q, e) {
                    return Err(Error::Structural(format!(
                        "alpha({}, {}) = {} is not in hom({}, {})",
                        c.label(x),
                        c.label(y),
                        c.k.base()
                            .names()
                            .get(e.index())
                            .map_or("?", |s| s.as_str()),
                        c.k.object_name(p),
                        c.k.object_name(q)
                    )));
                }
            }
        }
        Ok(c)
    }

    /// A category over `D*(Q)` given only by `α`; types are inferred as
    /// `|x| = α(x, x)`, which must be hermitian.
    pub fn from_qset(k: Arc<Quantaloid>, labels: Vec<String>, alpha: Vec<Elem>) -> Result<Self> {
        let n = labels.len();
        if alpha.len() != n * n {
            return Err(Error::Structural(format!(
                "alpha for {n} elements needs {} entries, got {}",
                n * n,
                alpha.len()
            )));
        }
        let mut types = Vec::with_capacity(n);
        for x in 0..n {
            let d = alpha[x * n + x];
            let t = k.object_of_elem(d).ok_or_else(|| {
                Error::Structural(format!(
                    "alpha({0}, {0}) = {1} is not an object of {2}",
                    labels[x],
                    k.base().names().get(d.index()).map_or("?", |s| s.as_str()),
                    k.name()
                ))
            })?;
            types.push(t);
        }
        QCategory::new(k, labels, types, alpha)
    }

    /// The discrete category: `α` is the identity relation.
    pub fn discrete(k: Arc<Quantaloid>, labels: Vec<String>, types: Vec<Obj>) -> Result<Self> {
        let id = super::identity_rel(&k, &types);
        QCategory::new(k, labels, types, id.entries().to_vec())
    }

    /// Builds `α` from a function on index pairs.
    pub fn from_fn(
        k: Arc<Quantaloid>,
        labels: Vec<String>,
        types: Vec<Obj>,
        f: impl FnMut(usize, usize) -> Elem,
    ) -> Result<Self> {
        let rel = QRelation::from_fn(&types, &types, f);
        QCategory::new(k, labels, types, rel.entries().to_vec())
    }

    pub fn quantaloid(&self) -> &Arc<Quantaloid> {
        &self.k
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.carrier.labels()[x]
    }

    pub fn labels(&self) -> &[String] {
        self.carrier.labels()
    }

    pub fn ty(&self, x: usize) -> Obj {
        self.carrier.types()[x]
    }

    pub fn types(&self) -> &[Obj] {
        self.carrier.types()
    }

    #[inline]
    pub fn alpha(&self, x: usize, y: usize) -> Elem {
        self.hom[x * self.len() + y]
    }

    pub fn hom_entries(&self) -> &[Elem] {
        &self.hom
    }

    pub fn as_relation(&self) -> QRelation {
        QRelation::from_fn(self.types(), self.types(), |x, y| self.alpha(x, y))
    }

    /// Elements of type `q`.
    pub fn fiber(&self, q: Obj) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.ty(x) == q).collect()
    }

    /// Reflexivity `1_{|x|} ≤ α(x, x)` and transitivity `α(y, z) ∘ α(x, y) ≤ α(x, z)`.
    pub fn validate(&self) -> LawReport {
        let k = &self.k;
        let mut report = LawReport::new("category");
        let mut refl = CheckBuilder::new("category.reflexivity");
        for x in 0..self.len() {
            let one = k.identity(self.ty(x));
            refl.case(k.leq(one, self.alpha(x, x)), || {
                Witness::new()
                    .with("x", self.label(x))
                    .with("identity", k.show(one))
                    .with("alpha(x,x)", k.show(self.alpha(x, x)))
            });
        }
        report.push(refl.finish());
        let mut tr = CheckBuilder::new("category.transitivity");
        for x in 0..self.len() {
            for y in 0..self.len() {
                for z in 0..self.len() {
                    let c = k.compose(self.ty(y), self.alpha(x, y), self.alpha(y, z));
                    tr.case(k.leq(c, self.alpha(x, z)), || {
                        Witness::new()
                            .with("x", self.label(x))
                            .with("y", self.label(y))
                            .with("z", self.label(z))
                            .with("alpha(y,z)∘alpha(x,y)", k.show(c))
                            .with("alpha(x,z)", k.show(self.alpha(x, z)))
                    });
                }
            }
        }
        report.push(tr.finish());
        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate().passed()
    }

    /// Underlying order: `x ≤ y` iff `|x| = |y|` and `1_{|x|} ≤ α(x, y)`.
    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.ty(x) == self.ty(y) && self.k.leq(self.k.identity(self.ty(x)), self.alpha(x, y))
    }

    pub fn iso(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) && self.leq(y, x)
    }

    pub fn is_separated(&self) -> bool {
        (0..self.len()).all(|x| (0..x).all(|y| !self.iso(x, y)))
    }

    /// `α(x, y) = α(y, x)°` for all pairs.
    pub fn is_symmetric(&self) -> bool {
        (0..self.len()).all(|x| {
            (0..self.len()).all(|y| self.alpha(x, y) == self.k.involution(self.alpha(y, x)))
        })
    }

    /// `α_s(x, y) = α(x, y) ∧ α(y, x)°`, the meet taken in `hom(|x|, |y|)`.
    pub fn symmetrize(&self) -> Result<QCategory> {
        let k = &self.k;
        let n = self.len();
        let mut hom = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let back = k.involution(self.alpha(y, x));
                let (p, q) = (self.ty(x), self.ty(y));
                if !k.in_hom(p, q, back) {
                    return Err(Error::Structural(format!(
                        "alpha({}, {})° = {} is not in hom({}, {})",
                        self.label(y),
                        self.label(x),
                        k.show(back),
                        k.object_name(p),
                        k.object_name(q)
                    )));
                }
                hom.push(k.meet(p, q, self.alpha(x, y), back));
            }
        }
        Ok(QCategory {
            k: self.k.clone(),
            carrier: self.carrier.clone(),
            hom,
        })
    }

    /// Full subcategory on the given elements, in the given order.
    pub fn full_subcategory(&self, elems: &[usize]) -> QCategory {
        let labels = elems.iter().map(|&x| self.label(x).to_string()).collect();
        let types = elems.iter().map(|&x| self.ty(x)).collect();
        let hom = elems
            .iter()
            .flat_map(|&x| elems.iter().map(move |&y| self.alpha(x, y)))
            .collect();
        QCategory {
            k: self.k.clone(),
            carrier: TypedSet::new(&self.k, labels, types).expect("subset of a typed set"),
            hom,
        }
    }

    /// The same carrier with a different hom matrix.
    pub fn with_hom(&self, hom: Vec<Elem>) -> Result<QCategory> {
        QCategory::new(
            self.k.clone(),
            self.labels().to_vec(),
            self.types().to_vec(),
            hom,
        )
    }

    pub fn show(&self, e: Elem) -> &str {
        self.k.show(e)
    }
}

fn same_quantaloid(x: &QCategory, y: &QCategory) -> Result<()> {
    if Arc::ptr_eq(x.quantaloid(), y.quantaloid()) {
        Ok(())
    } else {
        Err(Error::TypeMismatch(format!(
            "categories over different quantaloids ({} and {})",
            x.quantaloid().name(),
            y.quantaloid().name()
        )))
    }
}

/// Checks that `f` is a type-preserving map with `α(x, x') ≤ β(fx, fx')`.
pub fn check_functor(x: &QCategory, y: &QCategory, f: &[usize]) -> LawReport {
    let mut report = LawReport::new("functor");
    let mut wd = CheckBuilder::new("functor.well_defined");
    wd.case(f.len() == x.len() && f.iter().all(|&v| v < y.len()), || {
        Witness::new()
            .with("map_len", f.len())
            .with("domain_len", x.len())
            .with("codomain_len", y.len())
    });
    wd.case(Arc::ptr_eq(x.quantaloid(), y.quantaloid()), || {
        Witness::new().with("problem", "categories over different quantaloids")
    });
    let wd = wd.finish();
    if !wd.passed() {
        report.push(wd);
        return report;
    }
    report.push(wd);
    let k = x.quantaloid();
    let mut tp = CheckBuilder::new("functor.type_preserving");
    for a in 0..x.len() {
        tp.case(x.ty(a) == y.ty(f[a]), || {
            Witness::new()
                .with("x", x.label(a))
                .with("fx", y.label(f[a]))
                .with("|x|", k.object_name(x.ty(a)))
                .with("|fx|", k.object_name(y.ty(f[a])))
        });
    }
    report.push(tp.finish());
    let mut mono = CheckBuilder::new("functor.hom_monotone");
    for a in 0..x.len() {
        for b in 0..x.len() {
            let (l, r) = (x.alpha(a, b), y.alpha(f[a], f[b]));
            mono.case(k.leq(l, r), || {
                Witness::new()
                    .with("x", x.label(a))
                    .with("x'", x.label(b))
                    .with("alpha(x,x')", k.show(l))
                    .with("beta(fx,fx')", k.show(r))
            });
        }
    }
    report.push(mono.finish());
    report
}

pub fn is_functor(x: &QCategory, y: &QCategory, f: &[usize]) -> bool {
    f.len() == x.len()
        && f.iter().all(|&v| v < y.len())
        && Arc::ptr_eq(x.quantaloid(), y.quantaloid())
        && (0..x.len()).all(|a| x.ty(a) == y.ty(f[a]))
        && (0..x.len())
            .all(|a| (0..x.len()).all(|b| x.quantaloid().leq(x.alpha(a, b), y.alpha(f[a], f[b]))))
}

/// Pointwise order of maps into `y`: `f ≤ g` iff `fx ≤ gx` in the underlying order for every `x`.
pub fn functor_leq(y: &QCategory, f: &[usize], g: &[usize]) -> bool {
    f.len() == g.len() && f.iter().zip(g).all(|(&a, &b)| y.leq(a, b))
}

/// Checks `f ⊣ g` via `β(fx, y) = α(x, gy)` and cross-checks the
/// unit/counit form `1_X ≤ gf`, `fg ≤ 1_Y`.
pub fn check_adjunction(x: &QCategory, y: &QCategory, f: &[usize], g: &[usize]) -> LawReport {
    let mut report = LawReport::new("adjunction");
    report.extend_prefixed("left", check_functor(x, y, f));
    report.extend_prefixed("right", check_functor(y, x, g));
    if !report.passed() {
        return report;
    }
    let k = x.quantaloid();
    let mut he = CheckBuilder::new("adjunction.hom_equality");
    for a in 0..x.len() {
        for b in 0..y.len() {
            let (l, r) = (y.alpha(f[a], b), x.alpha(a, g[b]));
            he.case(l == r, || {
                Witness::new()
                    .with("x", x.label(a))
                    .with("y", y.label(b))
                    .with("beta(fx,y)", k.show(l))
                    .with("alpha(x,gy)", k.show(r))
            });
        }
    }
    let he = he.finish();
    let gf: Vec<usize> = f.iter().map(|&v| g[v]).collect();
    let fg: Vec<usize> = g.iter().map(|&v| f[v]).collect();
    let id_x: Vec<usize> = (0..x.len()).collect();
    let id_y: Vec<usize> = (0..y.len()).collect();
    let mut uc = CheckBuilder::new("adjunction.unit_counit");
    for a in 0..x.len() {
        uc.case(x.leq(a, gf[a]), || {
            Witness::new()
                .with("x", x.label(a))
                .with("gfx", x.label(gf[a]))
        });
    }
    for b in 0..y.len() {
        uc.case(y.leq(fg[b], b), || {
            Witness::new()
                .with("y", y.label(b))
                .with("fgy", y.label(fg[b]))
        });
    }
    let uc = uc.finish();
    debug_assert_eq!(
        uc.passed(),
        functor_leq(x, &id_x, &gf) && functor_leq(y, &fg, &id_y)
    );
    let mut agree = CheckBuilder::new("adjunction.forms_agree");
    agree.case(he.passed() == uc.passed(), || {
        Witness::new()
            .with("hom_equality", he.status)
            .with("unit_counit", uc.status)
    });
    report.push(he);
    report.push(uc);
    report.push(agree.finish());
    report
}

pub fn is_adjunction(x: &QCategory, y: &QCategory, f: &[usize], g: &[usize]) -> bool {
    is_functor(x, y, f)
        && is_functor(y, x, g)
        && (0..x.len()).all(|a| (0..y.len()).all(|b| y.alpha(f[a], b) == x.alpha(a, g[b])))
}

/// The graph `f_♮: X ⇸ Y`, `f_♮(x, y) = β(fx, y)`.
pub fn graph(x: &QCategory, y: &QCategory, f: &[usize]) -> QRelation {
    QRelation::from_fn(x.types(), y.types(), |a, b| y.alpha(f[a], b))
}

/// The cograph `f^♮: Y ⇸ X`, `f^♮(y, x) = β(y, fx)`.
pub fn cograph(x: &QCategory, y: &QCategory, f: &[usize]) -> QRelation {
    QRelation::from_fn(y.types(), x.types(), |b, a| y.alpha(b, f[a]))
}

/// Whether `φ: X ⇸ Y` satisfies `β ∘ φ ∘ α ≤ φ`.
pub fn is_distributor(x: &QCategory, y: &QCategory, phi: &QRelation) -> Result<bool> {
    same_quantaloid(x, y)?;
    let k = x.quantaloid();
    let t = compose_rel(k, &x.as_relation(), phi)?;
    let t = compose_rel(k, &t, &y.as_relation())?;
    Ok(t.le(k, phi))
}

/// Checks that the graph and cograph are distributors and that
/// `α ≤ f^♮ ∘ f_♮` and `f_♮ ∘ f^♮ ≤ β`.
pub fn check_graph_cograph(x: &QCategory, y: &QCategory, f: &[usize]) -> Result<LawReport> {
    same_quantaloid(x, y)?;
    let k = x.quantaloid();
    let g = graph(x, y, f);
    let c = cograph(x, y, f);
    let mut report = LawReport::new("graph_cograph");
    let mut dist = CheckBuilder::new("graph.distributor");
    dist.case(is_distributor(x, y, &g)?, || {
        Witness::new().with("relation", "graph")
    });
    dist.case(is_distributor(y, x, &c)?, || {
        Witness::new().with("relation", "cograph")
    });
    report.push(dist.finish());

    let mut unit = CheckBuilder::new("graph.unit");
    let cg = compose_rel(k, &g, &c)?;
    let alpha = x.as_relation();
    unit.case(alpha.le(k, &cg), || {
        let (a, b) = alpha.first_violation(k, &cg).unwrap_or_default();
        Witness::new()
            .with("x", x.label(a))
            .with("x'", x.label(b))
            .with("alpha", k.show(alpha.get(a, b)))
            .with("cograph∘graph", k.show(cg.get(a, b)))
    });
    report.push(unit.finish());

    let mut counit = CheckBuilder::new("graph.counit");
    let gc = compose_rel(k, &c, &g)?;
    let beta = y.as_relation();
    counit.case(gc.le(k, &beta), || {
        let (a, b) = gc.first_violation(k, &beta).unwrap_or_default();
        Witness::new()
            .with("y", y.label(a))
            .with("y'", y.label(b))
            .with("graph∘cograph", k.show(gc.get(a, b)))
            .with("beta", k.show(beta.get(a, b)))
    });
    report.push(counit.finish());
    Ok(report)
}

/// All type-preserving maps `X → Y`, in lexicographic order.
pub fn type_preserving_maps(x: &QCategory, y: &QCategory, cap: usize) -> Result<Vec<Vec<usize>>> {
    let choices: Vec<Vec<usize>> = (0..x.len()).map(|a| y.fiber(x.ty(a))).collect();
    let estimate = choices
        .iter()
        .try_fold(1usize, |acc, c| acc.checked_mul(c.len()));
    match estimate {
        Some(e) if e <= cap => {}
        _ => {
            return Err(Error::Capacity {
                what: "type-preserving maps".into(),
                cap,
                estimate: estimate.map_or_else(|| "overflow".to_string(), |e| e.to_string()),
            })
        }
    }
    Ok(choices
        .iter()
        .map(|c| c.iter().copied())
        .fold(vec![Vec::new()], |acc, col| {
            acc.into_iter()
                .flat_map(|prefix| {
                    col.clone().map(move |v| {
                        let mut p = prefix.clone();
                        p.push(v);
                        p
                    })
                })
                .collect()
        }))
}
