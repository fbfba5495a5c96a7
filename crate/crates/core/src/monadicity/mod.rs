//! Instance-level checks for strict creation of coequalizers of split pairs
//! by the forgetful functor from separated complete categories (with left
//! adjoints) to symmetric categories.
//!
//! [`section_lift`] builds the largest section `hy = ⋁{x | fx = y}` of a
//! retraction and the complete structure it induces; [`verify_split_lift`]
//! runs the three steps of the lifting argument on a concrete split
//! coequalizer, quantifying over explicit finite families.

pub mod generate;

use crate::error::{Error, Result};
use crate::presheaf::complete::{
    check_left_adjoint, complete, find_right_adjoint, order_join, tensor, tensor_args,
};
use crate::qcat::{
    check_adjunction, check_functor, is_adjunction, is_functor, type_preserving_maps, QCategory,
    TypedSet,
};
use crate::report::{CheckBuilder, LawCheck, LawReport, Witness};

pub use generate::{all_categories_on, separated_complete_categories};

fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    // g ∘ f
    f.iter().map(|&v| g[v]).collect()
}

/// The result of [`section_lift`].
#[derive(Debug, Clone)]
pub struct LiftedStructure {
    /// The section `h: Y → X`, `hy = ⋁ B_y`.
    pub section: Vec<usize>,
    /// `(Y, β)` with `β(y, y') = α(hy, hy')`.
    pub category: QCategory,
    /// The three clauses of the construction plus `fh = 1`.
    pub report: LawReport,
}

/// Checks that the kernel of `f` is a congruence for binary joins and
/// for tensors in `X`:
///
/// * (a) `f(x1 ∨ x2) = f(x1' ∨ x2')` whenever `f xi = f xi'`,
/// * (b) `f(u ⊗ x) = f(u ⊗ x')` whenever `fx = fx'`.
///
/// Binary joins suffice for (a) since every family in a finite category is
/// finite and the empty join is the same on both sides.
pub fn check_lift_conditions(x: &QCategory, f: &[usize]) -> Result<LawReport> {
    let k = x.quantaloid();
    let mut report = LawReport::new("lift_conditions");
    let mut join = CheckBuilder::new("lift.join_congruence");
    for q in k.objects() {
        let fiber = x.fiber(q);
        let join2 = |a: usize, b: usize| {
            order_join(x, q, &[a, b]).ok_or_else(|| {
                Error::NotComplete(format!("no join of {} and {}", x.label(a), x.label(b)))
            })
        };
        for &a in &fiber {
            for &a2 in fiber.iter().filter(|&&a2| f[a2] == f[a]) {
                for &b in &fiber {
                    for &b2 in fiber.iter().filter(|&&b2| f[b2] == f[b]) {
                        let (l, r) = (join2(a, b)?, join2(a2, b2)?);
                        join.case(f[l] == f[r], || {
                            Witness::new()
                                .with("x1", x.label(a))
                                .with("x1'", x.label(a2))
                                .with("x2", x.label(b))
                                .with("x2'", x.label(b2))
                                .with("x1∨x2", x.label(l))
                                .with("x1'∨x2'", x.label(r))
                        });
                    }
                }
            }
        }
    }
    report.push(join.finish());
    let mut tens = CheckBuilder::new("lift.tensor_congruence");
    for (u, p, a) in tensor_args(x) {
        for b in (0..x.len()).filter(|&b| b != a && f[b] == f[a] && x.ty(b) == x.ty(a)) {
            let (l, r) = (tensor(x, u, p, a)?, tensor(x, u, p, b)?);
            tens.case(f[l] == f[r], || {
                Witness::new()
                    .with("u", k.show(u))
                    .with("x", x.label(a))
                    .with("x'", x.label(b))
                    .with("u⊗x", x.label(l))
                    .with("u⊗x'", x.label(r))
            });
        }
    }
    report.push(tens.finish());
    Ok(report)
}

/// Builds the largest section `h` of the retraction `f: X → Y` (`Y` a typed
/// set) and the structure `β(y, y') = α(hy, hy')` on `Y`.
///
/// Requires `X` separated and complete, `f` type-preserving with section `g`,
/// and the congruence conditions of [`check_lift_conditions`]. The report
/// checks that `(Y, β)` is separated and complete, that `f ⊣ h`, and that
/// `gy ≤ hy` and `α(gy, gy') ≤ α(hy, hy')`.
pub fn section_lift(
    x: &QCategory,
    y: &TypedSet,
    f: &[usize],
    g: &[usize],
) -> Result<LiftedStructure> {
    let k = x.quantaloid();
    if !x.is_separated() {
        return Err(Error::Precondition(
            "section lift needs a separated category".into(),
        ));
    }
    if !complete(x) {
        return Err(Error::NotComplete(
            "section lift needs a complete category".into(),
        ));
    }
    if f.len() != x.len()
        || g.len() != y.len()
        || f.iter().any(|&v| v >= y.len())
        || g.iter().any(|&v| v >= x.len())
    {
        return Err(Error::Precondition("maps do not match the carriers".into()));
    }
    if let Some(a) = (0..x.len()).find(|&a| x.ty(a) != y.types()[f[a]]) {
        return Err(Error::Precondition(format!(
            "f is not type-preserving at {}",
            x.label(a)
        )));
    }
    if let Some(b) = (0..y.len()).find(|&b| f[g[b]] != b) {
        return Err(Error::Precondition(format!(
            "g is not a section of f: f(g({0})) ≠ {0}",
            y.labels()[b]
        )));
    }
    let cond = check_lift_conditions(x, f)?;
    if let Some(c) = cond.failing().next() {
        return Err(Error::Precondition(format!(
            "{} fails: {}",
            c.check,
            c.witnesses
                .first()
                .map(|w| w.to_string())
                .unwrap_or_default()
        )));
    }
    let section: Vec<usize> = (0..y.len())
        .map(|b| {
            let fiber: Vec<usize> = (0..x.len()).filter(|&a| f[a] == b).collect();
            order_join(x, y.types()[b], &fiber).expect("complete categories have all joins")
        })
        .collect();
    let hom = (0..y.len())
        .flat_map(|b| (0..y.len()).map(move |c| (b, c)))
        .map(|(b, c)| x.alpha(section[b], section[c]))
        .collect();
    let category = QCategory::new(k.clone(), y.labels().to_vec(), y.types().to_vec(), hom)?;

    let mut report = LawReport::new("section_lift");
    let mut sec = CheckBuilder::new("lift.section");
    for b in 0..y.len() {
        sec.case(f[section[b]] == b, || {
            Witness::new()
                .with("y", &y.labels()[b])
                .with("hy", x.label(section[b]))
        });
    }
    report.push(sec.finish());
    let mut sc = CheckBuilder::new("lift.separated_complete");
    sc.case(
        category.is_valid() && category.is_separated() && complete(&category),
        || {
            Witness::new()
                .with("valid", category.is_valid())
                .with("separated", category.is_separated())
        },
    );
    report.push(sc.finish());
    let sc_ok = report.passed();
    if sc_ok {
        report.extend_prefixed(
            "lift.f_left_adjoint",
            check_adjunction(x, &category, f, &section),
        );
    } else {
        report.push(LawCheck::skipped(
            "lift.f_left_adjoint",
            "lifted structure is not a category",
        ));
    }
    let mut max = CheckBuilder::new("lift.maximality");
    for b in 0..y.len() {
        max.case(x.leq(g[b], section[b]), || {
            Witness::new()
                .with("y", &y.labels()[b])
                .with("gy", x.label(g[b]))
                .with("hy", x.label(section[b]))
        });
        for c in 0..y.len() {
            let (lo, hi) = (x.alpha(g[b], g[c]), x.alpha(section[b], section[c]));
            max.case(k.leq(lo, hi), || {
                Witness::new()
                    .with("y", &y.labels()[b])
                    .with("y'", &y.labels()[c])
                    .with("alpha(gy,gy')", k.show(lo))
                    .with("alpha(hy,hy')", k.show(hi))
            });
        }
    }
    report.push(max.finish());
    Ok(LiftedStructure {
        section,
        category,
        report,
    })
}

/// A split coequalizer of `f, g: X → Y` at the symmetric level:
/// `hf = hg`, `hs = 1_Z`, `gt = 1_Y`, `ft = sh`, with `(Z, γ)` symmetric.
#[derive(Debug, Clone)]
pub struct SplitInstance {
    pub x: QCategory,
    pub y: QCategory,
    pub z: QCategory,
    pub f: Vec<usize>,
    pub g: Vec<usize>,
    pub h: Vec<usize>,
    pub s: Vec<usize>,
    pub t: Vec<usize>,
}

/// A candidate cocone `h': Y → Z'` for the coequalizer property.
#[derive(Debug, Clone)]
pub struct Cocone {
    pub target: QCategory,
    pub map: Vec<usize>,
}

/// Options for [`verify_split_lift`].
#[derive(Debug, Clone, Copy)]
pub struct SplitOptions {
    /// Auto-generate cocones into all separated complete categories up to
    /// this size (0 disables).
    pub auto_max_size: usize,
    /// Cap on enumerated maps and hom matrices.
    pub cap: usize,
}

impl Default for SplitOptions {
    fn default() -> Self {
        SplitOptions {
            auto_max_size: 3,
            cap: 1 << 16,
        }
    }
}

fn equation(
    name: &str,
    lhs: &[usize],
    rhs: &[usize],
    dom: &QCategory,
    cod: &QCategory,
    lhs_name: &str,
    rhs_name: &str,
) -> LawCheck {
    let mut c = CheckBuilder::new(name);
    c.case(lhs.len() == rhs.len(), || {
        Witness::new().with("problem", "maps have different domains")
    });
    for a in 0..lhs.len().min(rhs.len()) {
        c.case(lhs[a] == rhs[a], || {
            Witness::new()
                .with("at", dom.label(a))
                .with(lhs_name, cod.label(lhs[a]))
                .with(rhs_name, cod.label(rhs[a]))
        });
    }
    c.finish()
}

fn in_range(map: &[usize], dom: usize, cod: usize) -> bool {
    map.len() == dom && map.iter().all(|&v| v < cod)
}

/// Preconditions of a split instance: shapes, the four split equations,
/// separation and completeness of `X` and `Y`, `f` and `g` left adjoints,
/// `h`, `s`, `t` functors at the symmetrized level, `Z` symmetric.
pub fn check_split_instance(inst: &SplitInstance, cap: usize) -> Result<LawReport> {
    let (x, y, z) = (&inst.x, &inst.y, &inst.z);
    let mut report = LawReport::new("split_instance");
    let mut shape = CheckBuilder::new("split.shapes");
    for (name, map, d, c) in [
        ("f", &inst.f, x.len(), y.len()),
        ("g", &inst.g, x.len(), y.len()),
        ("h", &inst.h, y.len(), z.len()),
        ("s", &inst.s, z.len(), y.len()),
        ("t", &inst.t, y.len(), x.len()),
    ] {
        shape.case(in_range(map, d, c), || Witness::new().with("map", name));
    }
    let shape = shape.finish();
    if !shape.passed() {
        report.push(shape);
        return Ok(report);
    }
    report.push(shape);

    let id_y: Vec<usize> = (0..y.len()).collect();
    let id_z: Vec<usize> = (0..z.len()).collect();
    report.push(equation(
        "split.hf_eq_hg",
        &compose(&inst.f, &inst.h),
        &compose(&inst.g, &inst.h),
        x,
        z,
        "hf",
        "hg",
    ));
    report.push(equation(
        "split.hs_identity",
        &compose(&inst.s, &inst.h),
        &id_z,
        z,
        z,
        "hs",
        "z",
    ));
    report.push(equation(
        "split.gt_identity",
        &compose(&inst.t, &inst.g),
        &id_y,
        y,
        y,
        "gt",
        "y",
    ));
    report.push(equation(
        "split.ft_eq_sh",
        &compose(&inst.t, &inst.f),
        &compose(&inst.h, &inst.s),
        y,
        y,
        "ft",
        "sh",
    ));

    let mut cats = CheckBuilder::new("split.categories");
    for (name, c) in [("X", x), ("Y", y)] {
        cats.case(c.is_valid() && c.is_separated() && complete(c), || {
            Witness::new()
                .with("category", name)
                .with("problem", "not separated complete")
        });
    }
    cats.case(z.is_valid() && z.is_symmetric(), || {
        Witness::new()
            .with("category", "Z")
            .with("problem", "not a symmetric category")
    });
    let cats = cats.finish();
    let cats_ok = cats.passed();
    report.push(cats);
    if !cats_ok {
        return Ok(report);
    }
    for (name, map) in [("f", &inst.f), ("g", &inst.g)] {
        let r = check_left_adjoint(x, y, map, cap)?;
        let mut c = CheckBuilder::new(format!("split.{name}_left_adjoint"));
        c.case(r.passed(), || {
            let failing: Vec<&str> = r.failing().map(|c| c.check.as_str()).collect();
            Witness::new().with("failing", failing.join(", "))
        });
        report.push(c.finish());
    }
    let (xs, ys) = (x.symmetrize()?, y.symmetrize()?);
    for (name, dom, cod, map) in [
        ("h", &ys, z, &inst.h),
        ("s", z, &ys, &inst.s),
        ("t", &ys, &xs, &inst.t),
    ] {
        report.extend_prefixed(&format!("split.{name}"), check_functor(dom, cod, map));
    }
    Ok(report)
}

/// Runs the three steps of the lifting argument on a split instance.
///
/// * Step 1: `h` satisfies the lift conditions; the lifted section `s'`
///   gives `(Z, ξ)` separated complete with `h ⊣ s'`, `s ≤ s'` pointwise
///   with `β(sz, sz') ≤ ξ(z, z')`, and `γ = ξ_s`.
/// * Step 2: for every candidate cocone `h'` (left adjoint into a separated
///   complete category with `h'f = h'g`), `h's'h = h'`, `h's'` is the only
///   map `k` with `kh = h'`, and `h's' ⊣ ht'` for the right adjoint `t'` of `h'`.
/// * Step 3: among all structures `η` on the carrier of `Z` for which `h` is
///   a left adjoint, `1_Z: (Z, η) → (Z, ξ)` is a left adjoint only for `η = ξ`.
///
/// Preconditions that fail are reported and the steps are skipped.
pub fn verify_split_lift(
    inst: &SplitInstance,
    extra: &[Cocone],
    opts: SplitOptions,
) -> Result<LawReport> {
    let mut report = check_split_instance(inst, opts.cap)?;
    report.subject = "split_lift".into();
    if !report.passed() {
        for step in ["step1", "step2", "step3"] {
            report.push(LawCheck::skipped(step, "split instance preconditions fail"));
        }
        return Ok(report);
    }
    let (y, z) = (&inst.y, &inst.z);
    let k = y.quantaloid();

    // Step 1
    report.extend_prefixed("step1", check_lift_conditions(y, &inst.h)?);
    let z_carrier = TypedSet::new(k, z.labels().to_vec(), z.types().to_vec())?;
    let lifted = section_lift(y, &z_carrier, &inst.h, &inst.s)?;
    report.extend_prefixed("step1", lifted.report.clone());
    let xi = &lifted.category;
    let s1 = &lifted.section;
    let xi_s = xi.symmetrize()?;
    let mut gam = CheckBuilder::new("step1.gamma_is_xi_s");
    for a in 0..z.len() {
        for b in 0..z.len() {
            gam.case(z.alpha(a, b) == xi_s.alpha(a, b), || {
                Witness::new()
                    .with("z", z.label(a))
                    .with("z'", z.label(b))
                    .with("gamma", k.show(z.alpha(a, b)))
                    .with("xi_s", k.show(xi_s.alpha(a, b)))
            });
        }
    }
    report.push(gam.finish());

    // Step 2
    let mut cocones: Vec<Cocone> = extra.to_vec();
    let mut auto_count = 0usize;
    if opts.auto_max_size > 0 {
        for target in separated_complete_categories(k, opts.auto_max_size, opts.cap)? {
            for map in type_preserving_maps(y, &target, opts.cap)? {
                cocones.push(Cocone {
                    target: target.clone(),
                    map,
                });
                auto_count += 1;
            }
        }
    }
    let mut fact = CheckBuilder::new("step2.factorization").note(format!(
        "{} supplied and {} generated candidate maps",
        extra.len(),
        auto_count
    ));
    let mut uniq = CheckBuilder::new("step2.unique_mediator");
    let mut adj = CheckBuilder::new("step2.mediator_left_adjoint");
    let mut used = 0usize;
    for (ci, c) in cocones.iter().enumerate() {
        let zp = &c.target;
        let hp = &c.map;
        if !in_range(hp, y.len(), zp.len()) || !is_functor(y, zp, hp) {
            continue;
        }
        if compose(&inst.f, hp) != compose(&inst.g, hp) {
            continue;
        }
        let Some(tp) = find_right_adjoint(y, zp, hp) else {
            continue;
        };
        if !is_adjunction(y, zp, hp, &tp) {
            continue;
        }
        used += 1;
        let med = compose(s1, hp);
        let tri = compose(&inst.h, &med);
        fact.case(&tri == hp, || {
            Witness::new()
                .with("cocone", ci)
                .with("h's'h", format!("{tri:?}"))
                .with("h'", format!("{hp:?}"))
        });
        let mediators: Vec<Vec<usize>> = type_preserving_maps(xi, zp, opts.cap)?
            .into_iter()
            .filter(|kk| &compose(&inst.h, kk) == hp)
            .collect();
        uniq.case(mediators == [med.clone()], || {
            Witness::new()
                .with("cocone", ci)
                .with("mediators", format!("{mediators:?}"))
                .with("h's'", format!("{med:?}"))
        });
        let right = compose(&tp, &inst.h);
        adj.case(
            is_functor(xi, zp, &med) && is_adjunction(xi, zp, &med, &right),
            || {
                Witness::new()
                    .with("cocone", ci)
                    .with("h's'", format!("{med:?}"))
                    .with("ht'", format!("{right:?}"))
            },
        );
    }
    let mut fact = fact.finish();
    if let Some(n) = fact.note.as_mut() {
        n.push_str(&format!("; {used} are left-adjoint cocones"));
    }
    report.push(fact);
    report.push(uniq.finish());
    report.push(adj.finish());

    // Step 3
    let candidates = all_categories_on(k, z.labels(), z.types(), opts.cap)?;
    let total = candidates.len();
    let mut uniq3 = CheckBuilder::new("step3.unique_structure");
    let mut coequalizing = 0usize;
    for eta in candidates {
        if !eta.is_separated() || !complete(&eta) || !is_functor(y, &eta, &inst.h) {
            continue;
        }
        let Some(r) = find_right_adjoint(y, &eta, &inst.h) else {
            continue;
        };
        if !is_adjunction(y, &eta, &inst.h, &r) {
            continue;
        }
        // (Z, ξ) with h is a cocone, so a coequalizing η needs a left-adjoint
        // mediator k: (Z, η) → (Z, ξ) with kh = h
        let lifts = type_preserving_maps(&eta, xi, opts.cap)?
            .into_iter()
            .any(|kk| {
                compose(&inst.h, &kk) == inst.h
                    && is_functor(&eta, xi, &kk)
                    && find_right_adjoint(&eta, xi, &kk)
                        .is_some_and(|r| is_adjunction(&eta, xi, &kk, &r))
            });
        if lifts {
            coequalizing += 1;
        }
        let same = eta.hom_entries() == xi.hom_entries();
        uniq3.case(lifts == same, || {
            Witness::new()
                .with(
                    "eta",
                    format!(
                        "{:?}",
                        eta.hom_entries()
                            .iter()
                            .map(|&e| k.show(e))
                            .collect::<Vec<_>>()
                    ),
                )
                .with("mediator_left_adjoint", lifts)
                .with("equals_xi", same)
        });
    }
    let mut uniq3 = uniq3.note(format!(
        "bounded to structures on the carrier of Z: {total} categories enumerated, {coequalizing} admit the mediator"
    ));
    uniq3.case(coequalizing == 1, || {
        Witness::new().with("structures_with_mediator", coequalizing)
    });
    report.push(uniq3.finish());
    Ok(report)
}

#[cfg(test)]
mod tests;
