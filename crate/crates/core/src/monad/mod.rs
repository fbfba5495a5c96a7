//! The powerset monad on symmetric categories over `D*(Q)`: the symmetrized
//! presheaf category, direct images, the Yoneda unit and the supremum
//! multiplication, with law and naturality checks.
//!
//! On `Q`-sets the maps are evaluated with the base-quantale formulas
//!
//! * `Ps(f)(μ)(y) = ⋁_x (μ(x) / α(x, x)) & β(y, fx)`,
//! * `unit(x) = (α(−, x), α(x, x))`,
//! * `mult(Φ, p) = (⋁_{(μ, q)} (Φ(μ, q) / q) & μ, p)`,
//!
//! and cross-checked against the quantaloid-level constructions in
//! [`crate::presheaf`].

pub mod potential;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::presheaf::{
    direct_image, enumerate_presheaves, presheaf_violation, sup_presheaf_cat, yoneda_presheaf,
    Presheaf, PresheafCategory,
};
use crate::qcat::QCategory;
use crate::quantale::Elem;
use crate::quantaloid::QuantaloidKind;
use crate::report::{CheckBuilder, LawReport, Method, Witness};

pub use potential::{
    check_potential_subset, enumerate_potential_subsets, is_potential_subset, PotentialSubset,
};

/// `(PX)_s` for a `Q`-set `X`: the enumerated presheaves with the
/// symmetrized presheaf hom.
#[derive(Debug, Clone)]
pub struct PowerObject {
    presheaves: PresheafCategory,
    sym: QCategory,
}

impl PowerObject {
    pub fn elems(&self) -> &[Presheaf] {
        self.presheaves.elems()
    }

    pub fn len(&self) -> usize {
        self.presheaves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.presheaves.is_empty()
    }

    /// The symmetrized category `(PX)_s`, itself a `Q`-set.
    pub fn category(&self) -> &QCategory {
        &self.sym
    }

    /// The unsymmetrized presheaf category `PX`.
    pub fn presheaves(&self) -> &PresheafCategory {
        &self.presheaves
    }

    pub fn index_of(&self, p: &Presheaf) -> Option<usize> {
        self.presheaves.index_of(p)
    }

    fn locate(&self, p: &Presheaf) -> Result<usize> {
        self.index_of(p).ok_or_else(|| {
            Error::Structural(format!(
                "{} is not an element of the powerset",
                p.render(self.sym.quantaloid(), &[])
            ))
        })
    }
}

/// Requires `X` to be a valid symmetric category over a `D*` quantaloid.
pub fn require_qset(x: &QCategory) -> Result<()> {
    if x.quantaloid().kind() != QuantaloidKind::DStar {
        return Err(Error::Capability(format!(
            "the powerset monad needs a D* quantaloid, got {}",
            x.quantaloid().name()
        )));
    }
    if let Some(c) = x.validate().failing().next() {
        return Err(Error::Precondition(format!(
            "not a category: {} fails",
            c.check
        )));
    }
    if !x.is_symmetric() {
        return Err(Error::Precondition(
            "not a Q-set: alpha is not symmetric".into(),
        ));
    }
    Ok(())
}

/// `Ps X = (PX)_s`, enumerating at most `cap` presheaves.
pub fn ps_object(x: &QCategory, cap: usize) -> Result<PowerObject> {
    require_qset(x)?;
    let presheaves = PresheafCategory::build(x, cap)?;
    let sym = presheaves.category().symmetrize()?;
    Ok(PowerObject { presheaves, sym })
}

/// Checks that `f: X → Y` is a morphism of `Q`-sets:
/// `α(x, x) = β(fx, fx)` and `α(x, x') ≤ β(fx, fx')`.
pub fn check_qset_morphism(x: &QCategory, y: &QCategory, f: &[usize]) -> LawReport {
    let k = x.quantaloid();
    let mut report = LawReport::new("qset_morphism");
    let mut wd = CheckBuilder::new("qset_morphism.well_defined");
    wd.case(f.len() == x.len() && f.iter().all(|&v| v < y.len()), || {
        Witness::new()
            .with("map_len", f.len())
            .with("domain_len", x.len())
    });
    let wd = wd.finish();
    let ok = wd.passed();
    report.push(wd);
    if !ok {
        return report;
    }
    let mut ex = CheckBuilder::new("qset_morphism.existence");
    let mut mono = CheckBuilder::new("qset_morphism.monotone");
    for a in 0..x.len() {
        ex.case(x.alpha(a, a) == y.alpha(f[a], f[a]), || {
            Witness::new()
                .with("x", x.label(a))
                .with("alpha(x,x)", k.show(x.alpha(a, a)))
                .with("beta(fx,fx)", k.show(y.alpha(f[a], f[a])))
        });
        for b in 0..x.len() {
            mono.case(k.leq(x.alpha(a, b), y.alpha(f[a], f[b])), || {
                Witness::new()
                    .with("x", x.label(a))
                    .with("x'", x.label(b))
                    .with("alpha(x,x')", k.show(x.alpha(a, b)))
                    .with("beta(fx,fx')", k.show(y.alpha(f[a], f[b])))
            });
        }
    }
    report.push(ex.finish());
    report.push(mono.finish());
    report
}

fn require_morphism(x: &QCategory, y: &QCategory, f: &[usize]) -> Result<()> {
    let r = check_qset_morphism(x, y, f);
    let res = match r.failing().next() {
        None => Ok(()),
        Some(c) => Err(Error::Precondition(format!(
            "not a Q-set morphism ({} fails: {})",
            c.check,
            c.witnesses
                .first()
                .map(|w| w.to_string())
                .unwrap_or_default()
        ))),
    };
    res
}

/// `Ps(f)(μ)(y) = ⋁_x (μ(x) / α(x, x)) & β(y, fx)`, in the base quantale.
pub fn ps_morphism_presheaf(x: &QCategory, y: &QCategory, f: &[usize], mu: &Presheaf) -> Presheaf {
    let q = x.quantaloid().base();
    let values = (0..y.len())
        .map(|b| {
            q.join_all(
                (0..x.len()).map(|a| q.mul2(q.limp(mu.values[a], x.alpha(a, a)), y.alpha(b, f[a]))),
            )
        })
        .collect();
    Presheaf { ty: mu.ty, values }
}

/// `Ps(f): Ps X → Ps Y` as a map between enumerated power objects.
pub fn ps_morphism(
    x: &QCategory,
    y: &QCategory,
    f: &[usize],
    psx: &PowerObject,
    psy: &PowerObject,
) -> Result<Vec<usize>> {
    require_morphism(x, y, f)?;
    psx.elems()
        .iter()
        .map(|mu| psy.locate(&ps_morphism_presheaf(x, y, f, mu)))
        .collect()
}

/// `unit(x) = (α(−, x), α(x, x))`.
pub fn unit_presheaf(x: &QCategory, a: usize) -> Presheaf {
    Presheaf {
        ty: x.ty(a),
        values: (0..x.len()).map(|b| x.alpha(b, a)).collect(),
    }
}

/// The unit `X → Ps X`.
pub fn unit(x: &QCategory, psx: &PowerObject) -> Result<Vec<usize>> {
    (0..x.len())
        .map(|a| psx.locate(&unit_presheaf(x, a)))
        .collect()
}

/// `mult(Φ, p) = (⋁_{(μ, q)} (Φ(μ, q) / q) & μ, p)` for `Φ` a presheaf on
/// `Ps X` whose carrier is `px`.
pub fn multiplication_presheaf(x: &QCategory, px: &[Presheaf], phi: &Presheaf) -> Presheaf {
    let k = x.quantaloid();
    let q = k.base();
    let values = (0..x.len())
        .map(|a| {
            q.join_all(
                px.iter()
                    .zip(&phi.values)
                    .map(|(mu, &w)| q.mul2(q.limp(w, k.object_elem(mu.ty)), mu.values[a])),
            )
        })
        .collect();
    Presheaf { ty: phi.ty, values }
}

/// The multiplication `Ps Ps X → Ps X`.
pub fn multiplication(x: &QCategory, psx: &PowerObject, pspsx: &PowerObject) -> Result<Vec<usize>> {
    pspsx
        .elems()
        .iter()
        .map(|phi| psx.locate(&multiplication_presheaf(x, psx.elems(), phi)))
        .collect()
}

/// How associativity is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LawMode {
    /// Every element of `Ps³X`; fails with a capacity error if too large.
    Exhaustive,
    /// `count` seeded samples of `Ps³X`, drawn as closures of random sparse
    /// relations. When `Ps³X` has at most `count` elements it is checked in
    /// full instead.
    Sampled { seed: u64, count: usize },
}

/// Options for [`check_monad_laws`].
#[derive(Debug, Clone, Copy)]
pub struct LawOptions {
    pub mode: LawMode,
    /// Cap on the number of presheaves enumerated at any level.
    pub cap: usize,
}

impl Default for LawOptions {
    fn default() -> Self {
        LawOptions {
            mode: LawMode::Exhaustive,
            cap: crate::presheaf::DEFAULT_PRESHEAF_CAP,
        }
    }
}

/// `(r ∘ α)(i) = ⋁_j r(j) ∘ α(i, j)` for a sparse `r` given as `(j, r(j))`
/// pairs: the smallest presheaf above `r`.
fn presheaf_closure(y: &QCategory, ty: crate::quantaloid::Obj, r: &[(usize, Elem)]) -> Presheaf {
    let k = y.quantaloid();
    let values = (0..y.len())
        .map(|i| {
            r.iter().fold(k.hom_bottom(y.ty(i), ty), |acc, &(j, v)| {
                k.join(acc, k.compose(y.ty(j), y.alpha(i, j), v))
            })
        })
        .collect();
    Presheaf { ty, values }
}

/// A seeded random presheaf on `y`: the closure of a relation with at most
/// three nonzero entries.
pub fn sample_presheaf(y: &QCategory, rng: &mut impl Rng) -> Presheaf {
    let k = y.quantaloid();
    let objs: Vec<_> = k.objects().collect();
    let ty = objs[rng.random_range(0..objs.len())];
    let mut r = Vec::new();
    if !y.is_empty() {
        for _ in 0..rng.random_range(0..=3usize) {
            let j = rng.random_range(0..y.len());
            let hom = k.hom(y.ty(j), ty);
            r.push((j, hom[rng.random_range(0..hom.len())]));
        }
    }
    presheaf_closure(y, ty, &r)
}

/// Samples re-validated as presheaves; validation is quadratic in `|Ps²X|`.
const VALIDATED_SAMPLES: usize = 32;

/// Checks the unit laws exhaustively over `Ps X` and associativity over
/// `Ps³X` according to `opts.mode`. Also checks that unit and
/// multiplication are `Q`-set morphisms.
pub fn check_monad_laws(x: &QCategory, opts: LawOptions) -> Result<LawReport> {
    let psx = ps_object(x, opts.cap)?;
    let ps2 = ps_object(psx.category(), opts.cap)?;
    let (xs, px, p2) = (x, psx.category(), ps2.category());
    let mut report = LawReport::new("monad_laws");

    let u = unit(xs, &psx)?;
    report.extend_prefixed("monad.unit", check_qset_morphism(xs, px, &u));

    let m = multiplication(xs, &psx, &ps2)?;
    report.extend_prefixed("monad.mult", check_qset_morphism(p2, px, &m));

    let render = |p: &Presheaf, labels: &[String]| p.render(x.quantaloid(), labels);

    // (a) mult ∘ Ps(unit) = 1
    let mut left = CheckBuilder::new("monad.left_unit");
    for mu in psx.elems() {
        let lifted = ps_morphism_presheaf(xs, px, &u, mu);
        let back = multiplication_presheaf(xs, psx.elems(), &lifted);
        left.case(&back == mu, || {
            Witness::new()
                .with("mu", render(mu, xs.labels()))
                .with("mult(Ps(unit)(mu))", render(&back, xs.labels()))
        });
    }
    report.push(left.finish());

    // (b) mult ∘ unit_{Ps X} = 1
    let mut right = CheckBuilder::new("monad.right_unit");
    for (i, mu) in psx.elems().iter().enumerate() {
        let y = unit_presheaf(px, i);
        let back = multiplication_presheaf(xs, psx.elems(), &y);
        right.case(&back == mu, || {
            Witness::new()
                .with("mu", render(mu, xs.labels()))
                .with("mult(unit(mu))", render(&back, xs.labels()))
        });
    }
    report.push(right.finish());

    // (c) mult ∘ Ps(mult) = mult ∘ mult_{Ps X}
    let assoc_case = |psi: &Presheaf, c: &mut CheckBuilder| -> Result<()> {
        let via_map = ps_morphism_presheaf(p2, px, &m, psi);
        let via_sup = multiplication_presheaf(px, ps2.elems(), psi);
        let lhs = multiplication_presheaf(xs, psx.elems(), &via_map);
        let rhs = multiplication_presheaf(xs, psx.elems(), &via_sup);
        c.case(lhs == rhs, || {
            Witness::new()
                .with("psi", render(psi, p2.labels()))
                .with("mult(Ps(mult)(psi))", render(&lhs, xs.labels()))
                .with("mult(mult(psi))", render(&rhs, xs.labels()))
        });
        Ok(())
    };
    let sizes = format!("|PsX| = {}, |Ps²X| = {}", psx.len(), ps2.len());
    let assoc = match opts.mode {
        LawMode::Exhaustive => {
            let ps3 = enumerate_presheaves(p2, opts.cap)?;
            let mut c = CheckBuilder::new("monad.associativity")
                .note(format!("{sizes}, |Ps³X| = {}", ps3.len()));
            for psi in &ps3 {
                assoc_case(psi, &mut c)?;
            }
            c.finish()
        }
        LawMode::Sampled { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            match enumerate_presheaves(p2, opts.cap.min(count)) {
                Ok(ps3) => {
                    // no larger than the sample: check all of it
                    let mut c = CheckBuilder::new("monad.associativity").note(format!(
                        "{sizes}, |Ps³X| = {} does not exceed the {count} requested samples",
                        ps3.len()
                    ));
                    for psi in &ps3 {
                        assoc_case(psi, &mut c)?;
                    }
                    c.finish()
                }
                Err(Error::Capacity { .. }) => {
                    let mut c = CheckBuilder::new("monad.associativity")
                        .method(Method::Sampled { seed, count })
                        .note(format!(
                            "{sizes}, Ps³X has more than {count} elements; closures of random sparse \
                             relations, the first {VALIDATED_SAMPLES} re-validated as presheaves"
                        ));
                    for i in 0..count {
                        let psi = sample_presheaf(p2, &mut rng);
                        if i < VALIDATED_SAMPLES {
                            if let Some(v) = presheaf_violation(p2, &psi) {
                                return Err(Error::Structural(format!(
                                    "sampled presheaf invalid: {v}"
                                )));
                            }
                        }
                        assoc_case(&psi, &mut c)?;
                    }
                    c.finish()
                }
                Err(e) => return Err(e),
            }
        }
    };
    report.push(assoc);
    Ok(report)
}

/// Checks that the base-quantale formulas agree with the quantaloid-level
/// constructions on every enumerated input:
/// the unit is the Yoneda embedding, `Ps(f)` is the direct image `f→`,
/// and the multiplication is `sup_PX` restricted to `Ps Ps X`.
pub fn check_formula_agreement(
    x: &QCategory,
    y: &QCategory,
    f: &[usize],
    cap: usize,
) -> Result<LawReport> {
    require_morphism(x, y, f)?;
    let psx = ps_object(x, cap)?;
    let ps2 = ps_object(psx.category(), cap)?;
    let k = x.quantaloid();
    let mut report = LawReport::new("formula_agreement");

    let mut uy = CheckBuilder::new("agreement.unit_is_yoneda");
    for a in 0..x.len() {
        uy.case(unit_presheaf(x, a) == yoneda_presheaf(x, a), || {
            Witness::new().with("x", x.label(a))
        });
    }
    report.push(uy.finish());

    let mut img = CheckBuilder::new("agreement.ps_morphism_is_direct_image");
    for mu in psx.elems() {
        let formula = ps_morphism_presheaf(x, y, f, mu);
        let generic = direct_image(x, y, f, mu);
        img.case(formula == generic, || {
            Witness::new()
                .with("mu", mu.render(k, x.labels()))
                .with("formula", formula.render(k, y.labels()))
                .with("direct_image", generic.render(k, y.labels()))
        });
    }
    report.push(img.finish());

    let mut mult = CheckBuilder::new("agreement.mult_is_sup");
    for phi in ps2.elems() {
        let formula = multiplication_presheaf(x, psx.elems(), phi);
        let generic = sup_presheaf_cat(x, psx.presheaves(), phi);
        mult.case(formula == generic, || {
            Witness::new()
                .with("phi", phi.render(k, psx.category().labels()))
                .with("formula", formula.render(k, x.labels()))
                .with("sup", generic.render(k, x.labels()))
        });
    }
    report.push(mult.finish());

    let mut closed = CheckBuilder::new("agreement.results_are_presheaves");
    for mu in psx.elems() {
        let p = ps_morphism_presheaf(x, y, f, mu);
        closed.case(presheaf_violation(y, &p).is_none(), || {
            Witness::new().with("ps_morphism", p.render(k, y.labels()))
        });
    }
    for phi in ps2.elems() {
        let p = multiplication_presheaf(x, psx.elems(), phi);
        closed.case(presheaf_violation(x, &p).is_none(), || {
            Witness::new().with("multiplication", p.render(k, x.labels()))
        });
    }
    report.push(closed.finish());
    Ok(report)
}

/// Naturality of unit and multiplication along `f: X → Y`:
/// `unit_Y ∘ f = Ps(f) ∘ unit_X` and
/// `mult_Y ∘ Ps(Ps f) = Ps(f) ∘ mult_X`, the latter over all of `Ps²X`.
pub fn check_naturality(
    x: &QCategory,
    y: &QCategory,
    f: &[usize],
    cap: usize,
) -> Result<LawReport> {
    require_morphism(x, y, f)?;
    let (psx, psy) = (ps_object(x, cap)?, ps_object(y, cap)?);
    let ps2x = ps_object(psx.category(), cap)?;
    let psf = ps_morphism(x, y, f, &psx, &psy)?;
    let k = x.quantaloid();
    let mut report = LawReport::new("naturality");

    let mut un = CheckBuilder::new("naturality.unit");
    for a in 0..x.len() {
        let lhs = unit_presheaf(y, f[a]);
        let rhs = ps_morphism_presheaf(x, y, f, &unit_presheaf(x, a));
        un.case(lhs == rhs, || {
            Witness::new()
                .with("x", x.label(a))
                .with("unit(fx)", lhs.render(k, y.labels()))
                .with("Ps(f)(unit(x))", rhs.render(k, y.labels()))
        });
    }
    report.push(un.finish());

    let mut mn = CheckBuilder::new("naturality.multiplication");
    for phi in ps2x.elems() {
        let pushed = ps_morphism_presheaf(psx.category(), psy.category(), &psf, phi);
        let lhs = multiplication_presheaf(y, psy.elems(), &pushed);
        let rhs = ps_morphism_presheaf(x, y, f, &multiplication_presheaf(x, psx.elems(), phi));
        mn.case(lhs == rhs, || {
            Witness::new()
                .with("phi", phi.render(k, psx.category().labels()))
                .with("mult(Ps(Ps f)(phi))", lhs.render(k, y.labels()))
                .with("Ps(f)(mult(phi))", rhs.render(k, y.labels()))
        });
    }
    report.push(mn.finish());
    Ok(report)
}

/// `Ps(g ∘ f) = Ps(g) ∘ Ps(f)` and `Ps(1_X) = 1`, over all of `Ps X`.
pub fn check_functoriality(
    x: &QCategory,
    y: &QCategory,
    z: &QCategory,
    f: &[usize],
    g: &[usize],
) -> Result<LawReport> {
    require_morphism(x, y, f)?;
    require_morphism(y, z, g)?;
    let psx = ps_object(x, crate::presheaf::DEFAULT_PRESHEAF_CAP)?;
    let k = x.quantaloid();
    let gf: Vec<usize> = f.iter().map(|&v| g[v]).collect();
    let id: Vec<usize> = (0..x.len()).collect();
    let mut report = LawReport::new("functoriality");
    let mut comp = CheckBuilder::new("functor.composition");
    let mut ident = CheckBuilder::new("functor.identity");
    for mu in psx.elems() {
        let lhs = ps_morphism_presheaf(x, z, &gf, mu);
        let rhs = ps_morphism_presheaf(y, z, g, &ps_morphism_presheaf(x, y, f, mu));
        comp.case(lhs == rhs, || {
            Witness::new()
                .with("mu", mu.render(k, x.labels()))
                .with("Ps(gf)(mu)", lhs.render(k, z.labels()))
                .with("Ps(g)(Ps(f)(mu))", rhs.render(k, z.labels()))
        });
        let same = ps_morphism_presheaf(x, x, &id, mu);
        ident.case(&same == mu, || {
            Witness::new()
                .with("mu", mu.render(k, x.labels()))
                .with("Ps(1)(mu)", same.render(k, x.labels()))
        });
    }
    report.push(comp.finish());
    report.push(ident.finish());
    Ok(report)
}

/// The `α` matrix of a category as rows, for the base-quantale checkers.
pub fn alpha_rows(x: &QCategory) -> Vec<Vec<Elem>> {
    (0..x.len())
        .map(|a| (0..x.len()).map(|b| x.alpha(a, b)).collect())
        .collect()
}

/// A presheaf read as a potential subset `(μ, q)`.
pub fn as_potential_subset(x: &QCategory, mu: &Presheaf) -> PotentialSubset<Elem> {
    PotentialSubset {
        q: x.quantaloid().object_elem(mu.ty),
        mu: mu.values.clone(),
    }
}
