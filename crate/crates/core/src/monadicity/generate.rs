//! Small separated complete categories, enumerated up to isomorphism.

use std::collections::HashSet;
use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::presheaf::complete::complete;
use crate::qcat::QCategory;
use crate::quantale::Elem;
use crate::quantaloid::{Obj, Quantaloid};

/// All hom matrices on the typed carrier `types` that satisfy reflexivity
/// and transitivity, with membership in the hom-sets. Fails when the
/// number of candidate matrices exceeds `cap`.
pub fn all_categories_on(
    k: &Arc<Quantaloid>,
    labels: &[String],
    types: &[Obj],
    cap: usize,
) -> Result<Vec<QCategory>> {
    let n = types.len();
    let slots: Vec<Vec<Elem>> = (0..n * n)
        .map(|idx| {
            let (i, j) = (idx / n, idx % n);
            k.hom(types[i], types[j])
                .iter()
                .copied()
                .filter(|&d| i != j || k.leq(k.identity(types[i]), d))
                .collect()
        })
        .collect();
    let total: u128 = slots.iter().map(|s| s.len() as u128).product();
    if total > cap as u128 {
        return Err(Error::Capacity {
            what: "hom matrices".into(),
            cap,
            estimate: format!("{total} candidate matrices"),
        });
    }
    let mut out = Vec::new();
    let matrices: Box<dyn Iterator<Item = Vec<Elem>>> = if n == 0 {
        Box::new(std::iter::once(Vec::new()))
    } else {
        Box::new(slots.into_iter().multi_cartesian_product())
    };
    for hom in matrices {
        let c = QCategory::new(k.clone(), labels.to_vec(), types.to_vec(), hom)?;
        if c.is_valid() {
            out.push(c);
        }
    }
    Ok(out)
}

/// The least relabelling of `c` among permutations that keep the (sorted)
/// type sequence fixed.
fn canonical_form(c: &QCategory) -> Vec<Elem> {
    let n = c.len();
    (0..n)
        .permutations(n)
        .filter(|p| (0..n).all(|i| c.ty(p[i]) == c.ty(i)))
        .map(|p| {
            (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| c.alpha(p[i], p[j]))
                .collect::<Vec<_>>()
        })
        .min()
        .unwrap_or_default()
}

/// All categories with at most `max_size` elements, one per isomorphism
/// class, in order of size then type sequence.
pub fn categories_up_to_iso(
    k: &Arc<Quantaloid>,
    max_size: usize,
    cap: usize,
) -> Result<Vec<QCategory>> {
    let objs: Vec<Obj> = k.objects().collect();
    let mut out = Vec::new();
    for n in 0..=max_size {
        let labels: Vec<String> = (0..n).map(|i| format!("z{i}")).collect();
        for types in objs.iter().copied().combinations_with_replacement(n) {
            let mut seen = HashSet::new();
            for c in all_categories_on(k, &labels, &types, cap)? {
                if seen.insert(canonical_form(&c)) {
                    out.push(c);
                }
            }
        }
    }
    Ok(out)
}

/// Separated complete categories with at most `max_size` elements, one per
/// isomorphism class, in order of size then type sequence.
pub fn separated_complete_categories(
    k: &Arc<Quantaloid>,
    max_size: usize,
    cap: usize,
) -> Result<Vec<QCategory>> {
    Ok(categories_up_to_iso(k, max_size, cap)?
        .into_iter()
        .filter(|c| c.is_separated() && complete(c))
        .collect())
}
