use std::fmt;

use crate::error::{Error, Result};
use crate::quantale::Elem;
use crate::quantaloid::{Obj, Quantaloid};

/// A set whose elements carry an object of the ambient quantaloid as type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedSet {
    labels: Vec<String>,
    types: Vec<Obj>,
}

impl TypedSet {
    pub fn new(k: &Quantaloid, labels: Vec<String>, types: Vec<Obj>) -> Result<Self> {
        if labels.len() != types.len() {
            return Err(Error::Structural(format!(
                "{} labels but {} types",
                labels.len(),
                types.len()
            )));
        }
        if let Some(t) = types.iter().find(|t| t.index() >= k.num_objects()) {
            return Err(Error::Structural(format!(
                "type {t} is not an object of {}",
                k.name()
            )));
        }
        Ok(TypedSet { labels, types })
    }

    pub fn empty() -> Self {
        TypedSet {
            labels: Vec::new(),
            types: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn types(&self) -> &[Obj] {
        &self.types
    }
}

/// A relation `φ: X ⇸ Y` with `φ(x, y) ∈ hom(|x|, |y|)`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QRelation {
    src: Vec<Obj>,
    tgt: Vec<Obj>,
    entries: Vec<Elem>,
}

impl QRelation {
    /// Checks every entry against its hom-set.
    pub fn new(k: &Quantaloid, src: Vec<Obj>, tgt: Vec<Obj>, entries: Vec<Elem>) -> Result<Self> {
        if entries.len() != src.len() * tgt.len() {
            return Err(Error::Structural(format!(
                "relation of shape {}x{} has {} entries",
                src.len(),
                tgt.len(),
                entries.len()
            )));
        }
        for (i, &p) in src.iter().enumerate() {
            for (j, &q) in tgt.iter().enumerate() {
                let e = entries[i * tgt.len() + j];
                if e.index() >= k.base().len() || !k.in_hom(p, q, e) {
                    return Err(Error::Structural(format!(
                        "entry ({i}, {j}) = {} is not in hom({}, {})",
                        if e.index() < k.base().len() {
                            k.show(e).to_string()
                        } else {
                            e.to_string()
                        },
                        k.object_name(p),
                        k.object_name(q)
                    )));
                }
            }
        }
        Ok(QRelation { src, tgt, entries })
    }

    pub(crate) fn from_fn(
        src: &[Obj],
        tgt: &[Obj],
        mut f: impl FnMut(usize, usize) -> Elem,
    ) -> Self {
        let mut entries = Vec::with_capacity(src.len() * tgt.len());
        for i in 0..src.len() {
            for j in 0..tgt.len() {
                entries.push(f(i, j));
            }
        }
        QRelation {
            src: src.to_vec(),
            tgt: tgt.to_vec(),
            entries,
        }
    }

    fn try_from_fn(
        src: &[Obj],
        tgt: &[Obj],
        mut f: impl FnMut(usize, usize) -> Result<Elem>,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(src.len() * tgt.len());
        for i in 0..src.len() {
            for j in 0..tgt.len() {
                entries.push(f(i, j)?);
            }
        }
        Ok(QRelation {
            src: src.to_vec(),
            tgt: tgt.to_vec(),
            entries,
        })
    }

    pub fn source(&self) -> &[Obj] {
        &self.src
    }

    pub fn target(&self) -> &[Obj] {
        &self.tgt
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.entries[i * self.tgt.len() + j]
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    /// Entrywise order.
    pub fn le(&self, k: &Quantaloid, other: &QRelation) -> bool {
        self.src == other.src
            && self.tgt == other.tgt
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(&a, &b)| k.leq(a, b))
    }

    /// Some pair `(i, j)` where `self ≤ other` fails.
    pub fn first_violation(&self, k: &Quantaloid, other: &QRelation) -> Option<(usize, usize)> {
        let c = self.tgt.len();
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(&a, &b)| !k.leq(a, b))
            .map(|p| (p / c, p % c))
    }
}

impl fmt::Display for QRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.src.len() {
            let row: Vec<String> = (0..self.tgt.len())
                .map(|j| self.get(i, j).to_string())
                .collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

fn same_types(what: &str, a: &[Obj], b: &[Obj]) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::TypeMismatch(format!(
            "{what}: typed sets differ ({} vs {} elements)",
            a.len(),
            b.len()
        )))
    }
}

/// `(ψ ∘ φ)(x, z) = ⋁_y ψ(y, z) ∘ φ(x, y)`.
pub fn compose_rel(k: &Quantaloid, phi: &QRelation, psi: &QRelation) -> Result<QRelation> {
    same_types("compose_rel", &phi.tgt, &psi.src)?;
    Ok(QRelation::from_fn(&phi.src, &psi.tgt, |x, z| {
        let (px, pz) = (phi.src[x], psi.tgt[z]);
        phi.tgt
            .iter()
            .enumerate()
            .fold(k.hom_bottom(px, pz), |acc, (y, &py)| {
                k.join(acc, k.compose(py, phi.get(x, y), psi.get(y, z)))
            })
    }))
}

/// `(η ↙ φ)(y, z) = ⋀_x η(x, z) ↙ φ(x, y)` for `φ: X ⇸ Y`, `η: X ⇸ Z`.
pub fn imp_left(k: &Quantaloid, eta: &QRelation, phi: &QRelation) -> Result<QRelation> {
    same_types("imp_left", &eta.src, &phi.src)?;
    QRelation::try_from_fn(&phi.tgt, &eta.tgt, |y, z| {
        let (py, pz) = (phi.tgt[y], eta.tgt[z]);
        let mut acc = k.hom_top(py, pz);
        for (x, &px) in phi.src.iter().enumerate() {
            let v = k.left_imp(px, py, pz, eta.get(x, z), phi.get(x, y))?;
            acc = k.meet(py, pz, acc, v);
        }
        Ok(acc)
    })
}

/// `(ψ ↘ η)(x, y) = ⋀_z ψ(y, z) ↘ η(x, z)` for `ψ: Y ⇸ Z`, `η: X ⇸ Z`.
pub fn imp_right(k: &Quantaloid, psi: &QRelation, eta: &QRelation) -> Result<QRelation> {
    same_types("imp_right", &psi.tgt, &eta.tgt)?;
    QRelation::try_from_fn(&eta.src, &psi.src, |x, y| {
        let (px, py) = (eta.src[x], psi.src[y]);
        let mut acc = k.hom_top(px, py);
        for (z, &pz) in psi.tgt.iter().enumerate() {
            let v = k.right_imp(px, py, pz, psi.get(y, z), eta.get(x, z))?;
            acc = k.meet(px, py, acc, v);
        }
        Ok(acc)
    })
}

/// Identities on the diagonal, bottoms elsewhere.
pub fn identity_rel(k: &Quantaloid, types: &[Obj]) -> QRelation {
    QRelation::from_fn(types, types, |x, y| {
        if x == y {
            k.identity(types[x])
        } else {
            k.hom_bottom(types[x], types[y])
        }
    })
}

/// All relations `src ⇸ tgt`, in lexicographic order of their entries.
pub fn all_relations(k: &Quantaloid, src: &[Obj], tgt: &[Obj]) -> Vec<QRelation> {
    let slots: Vec<&[Elem]> = src
        .iter()
        .flat_map(|&p| tgt.iter().map(move |&q| k.hom(p, q)))
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; slots.len()];
    loop {
        let entries = idx.iter().zip(&slots).map(|(&i, s)| s[i]).collect();
        out.push(QRelation {
            src: src.to_vec(),
            tgt: tgt.to_vec(),
            entries,
        });
        let mut pos = slots.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < slots[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}
