//! Involutive quantales: the truth-value algebras everything else is built on.
//!
//! [`FiniteQuantale`] stores a finite quantale as explicit tables over element
//! indices. [`Lawvere`] is the value-level backend for `([0,∞], +, 0)` with the
//! reversed numeric order. Both implement [`Quantale`], so pointwise checks
//! such as the Q-set axioms run on either.

mod builtin;
mod lawvere;
mod validate;

use std::fmt;

use crate::error::{structural, Error, Result};

pub use builtin::{Monoid, Topology};
pub use lawvere::{Lawvere, LawvereValue};
pub use validate::validate_quantale;

/// Operations shared by finite and value-level quantale backends.
pub trait Quantale {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn le(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn bottom(&self) -> Self::Elem;
    fn top(&self) -> Self::Elem;
    /// The multiplication `a & b`.
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn unit(&self) -> Self::Elem;
    fn involution(&self, a: &Self::Elem) -> Self::Elem;
    /// `r / b`, the largest `p` with `p & b <= r`.
    fn left_imp(&self, r: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `a \ r`, the largest `x` with `a & x <= r`.
    fn right_imp(&self, a: &Self::Elem, r: &Self::Elem) -> Self::Elem;
    /// All elements, for backends that can enumerate them.
    fn elements(&self) -> Result<Vec<Self::Elem>>;
    fn show(&self, a: &Self::Elem) -> String;
}

/// An element of a [`FiniteQuantale`], by position in its carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(u16);

impl Elem {
    pub fn new(index: usize) -> Self {
        Elem(u16::try_from(index).expect("carrier index fits in u16"))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Raw tables describing a candidate finite involutive quantale.
///
/// Only shape is checked on construction; the axioms are checked by
/// [`validate_quantale`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantaleTables {
    pub names: Vec<String>,
    /// `order[i][j]` iff element `i <= j`.
    pub order: Vec<Vec<bool>>,
    pub mul: Vec<Vec<usize>>,
    pub unit: usize,
    pub involution: Vec<usize>,
}

impl QuantaleTables {
    /// Tables for a chain `0 < 1 < ... < n-1`.
    pub fn chain_order(n: usize) -> Vec<Vec<bool>> {
        (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect()
    }

    /// Reflexive-transitive closure of the given `i <= j` pairs.
    pub fn order_from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Vec<Vec<bool>>> {
        let mut order = vec![vec![false; n]; n];
        for (i, row) in order.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in pairs {
            if i >= n || j >= n {
                return Err(structural(format!(
                    "order pair ({i}, {j}) out of range for carrier of size {n}"
                )));
            }
            order[i][j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if order[i][k] {
                    for j in 0..n {
                        if order[k][j] {
                            order[i][j] = true;
                        }
                    }
                }
            }
        }
        Ok(order)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Dimension and index-range checks.
    pub fn check_shape(&self) -> Result<()> {
        let n = self.names.len();
        if n == 0 {
            return Err(structural("carrier is empty"));
        }
        if n > u16::MAX as usize {
            return Err(structural(format!("carrier of size {n} is too large")));
        }
        if self.order.len() != n || self.order.iter().any(|r| r.len() != n) {
            return Err(structural(format!("order relation must be {n}x{n}")));
        }
        if self.mul.len() != n || self.mul.iter().any(|r| r.len() != n) {
            return Err(structural(format!("multiplication table must be {n}x{n}")));
        }
        for (i, row) in self.mul.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(structural(format!(
                        "mul[{i}][{j}] = {v} is out of range for carrier of size {n}"
                    )));
                }
            }
        }
        if self.unit >= n {
            return Err(structural(format!("unit index {} out of range", self.unit)));
        }
        if self.involution.len() != n {
            return Err(structural(format!("involution must have {n} entries")));
        }
        if let Some((i, &v)) = self.involution.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(structural(format!(
                "involution[{i}] = {v} is out of range for carrier of size {n}"
            )));
        }
        Ok(())
    }
}

/// A validated finite involutive quantale with precomputed lattice and residual tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQuantale {
    name: String,
    names: Vec<String>,
    n: usize,
    leq: Vec<bool>,
    join: Vec<Elem>,
    meet: Vec<Elem>,
    mul: Vec<Elem>,
    left_imp: Vec<Elem>,
    right_imp: Vec<Elem>,
    inv: Vec<Elem>,
    unit: Elem,
    bottom: Elem,
    top: Elem,
}

impl FiniteQuantale {
    /// Builds a quantale from tables that pass [`validate_quantale`].
    pub fn new(name: impl Into<String>, tables: QuantaleTables) -> Result<Self> {
        let name = name.into();
        let report = validate_quantale(&tables)?;
        if !report.passed() {
            let failing: Vec<String> = report
                .failing()
                .map(|c| match c.witnesses.first() {
                    Some(w) => format!("{} ({w})", c.check),
                    None => c.check.clone(),
                })
                .collect();
            return Err(Error::Precondition(format!(
                "{name} is not an involutive quantale: {}",
                failing.join("; ")
            )));
        }
        Ok(Self::from_valid_tables(name, tables))
    }

    pub(crate) fn from_valid_tables(name: String, t: QuantaleTables) -> Self {
        let n = t.names.len();
        let lat = validate::Lattice::from_order(&t.order).expect("validated lattice");
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = t.order[i][j];
            }
        }
        let mul: Vec<Elem> = (0..n * n).map(|k| Elem::new(t.mul[k / n][k % n])).collect();
        let mut left_imp = vec![Elem::new(0); n * n];
        let mut right_imp = vec![Elem::new(0); n * n];
        for r in 0..n {
            for b in 0..n {
                let mut acc = lat.bottom;
                let mut acc_r = lat.bottom;
                for p in 0..n {
                    if t.order[t.mul[p][b]][r] {
                        acc = lat.join[acc * n + p];
                    }
                    // right_imp(b, r): largest x with b & x <= r
                    if t.order[t.mul[b][p]][r] {
                        acc_r = lat.join[acc_r * n + p];
                    }
                }
                left_imp[r * n + b] = Elem::new(acc);
                right_imp[b * n + r] = Elem::new(acc_r);
            }
        }
        FiniteQuantale {
            name,
            names: t.names,
            n,
            leq,
            join: lat.join.iter().map(|&i| Elem::new(i)).collect(),
            meet: lat.meet.iter().map(|&i| Elem::new(i)).collect(),
            mul,
            left_imp,
            right_imp,
            inv: t.involution.iter().map(|&i| Elem::new(i)).collect(),
            unit: Elem::new(t.unit),
            bottom: Elem::new(lat.bottom),
            top: Elem::new(lat.top),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn elems(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.n).map(Elem::new)
    }

    pub fn name_of(&self, e: Elem) -> &str {
        &self.names[e.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn elem_by_name(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|s| s == name).map(Elem::new)
    }

    /// Checks that an index belongs to this carrier.
    pub fn elem(&self, index: usize) -> Result<Elem> {
        if index < self.n {
            Ok(Elem::new(index))
        } else {
            Err(structural(format!(
                "element index {index} out of range for {} (size {})",
                self.name, self.n
            )))
        }
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a.index() * self.n + b.index()]
    }

    #[inline]
    pub fn join2(&self, a: Elem, b: Elem) -> Elem {
        self.join[a.index() * self.n + b.index()]
    }

    #[inline]
    pub fn meet2(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a.index() * self.n + b.index()]
    }

    #[inline]
    pub fn mul2(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a.index() * self.n + b.index()]
    }

    /// `r / b`.
    #[inline]
    pub fn limp(&self, r: Elem, b: Elem) -> Elem {
        self.left_imp[r.index() * self.n + b.index()]
    }

    /// `a \ r`.
    #[inline]
    pub fn rimp(&self, a: Elem, r: Elem) -> Elem {
        self.right_imp[a.index() * self.n + r.index()]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a.index()]
    }

    pub fn unit_elem(&self) -> Elem {
        self.unit
    }

    pub fn bottom_elem(&self) -> Elem {
        self.bottom
    }

    pub fn top_elem(&self) -> Elem {
        self.top
    }

    pub fn join_all(&self, items: impl IntoIterator<Item = Elem>) -> Elem {
        items
            .into_iter()
            .fold(self.bottom, |acc, e| self.join2(acc, e))
    }

    pub fn meet_all(&self, items: impl IntoIterator<Item = Elem>) -> Elem {
        items
            .into_iter()
            .fold(self.top, |acc, e| self.meet2(acc, e))
    }

    pub fn is_commutative(&self) -> bool {
        self.elems()
            .all(|a| self.elems().all(|b| self.mul2(a, b) == self.mul2(b, a)))
    }

    /// Tables this quantale was built from.
    pub fn tables(&self) -> QuantaleTables {
        let n = self.n;
        QuantaleTables {
            names: self.names.clone(),
            order: (0..n)
                .map(|i| (0..n).map(|j| self.leq[i * n + j]).collect())
                .collect(),
            mul: (0..n)
                .map(|i| (0..n).map(|j| self.mul[i * n + j].index()).collect())
                .collect(),
            unit: self.unit.index(),
            involution: self.inv.iter().map(|e| e.index()).collect(),
        }
    }
}

/// Residual `r / b` computed on demand: the join of all `p` with `p & b <= r`.
pub fn left_imp(q: &FiniteQuantale, r: Elem, b: Elem) -> Elem {
    q.limp(r, b)
}

/// Residual `a \ r`: the join of all `x` with `a & x <= r`.
pub fn right_imp(q: &FiniteQuantale, a: Elem, r: Elem) -> Elem {
    q.rimp(a, r)
}

/// All elements fixed by the involution, in carrier order.
pub fn hermitian_elements(q: &FiniteQuantale) -> Vec<Elem> {
    q.elems().filter(|&e| q.inv(e) == e).collect()
}

impl Quantale for FiniteQuantale {
    type Elem = Elem;

    fn le(&self, a: &Elem, b: &Elem) -> bool {
        self.leq(*a, *b)
    }
    fn join(&self, a: &Elem, b: &Elem) -> Elem {
        self.join2(*a, *b)
    }
    fn meet(&self, a: &Elem, b: &Elem) -> Elem {
        self.meet2(*a, *b)
    }
    fn bottom(&self) -> Elem {
        self.bottom
    }
    fn top(&self) -> Elem {
        self.top
    }
    fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        self.mul2(*a, *b)
    }
    fn unit(&self) -> Elem {
        self.unit
    }
    fn involution(&self, a: &Elem) -> Elem {
        self.inv(*a)
    }
    fn left_imp(&self, r: &Elem, b: &Elem) -> Elem {
        self.limp(*r, *b)
    }
    fn right_imp(&self, a: &Elem, r: &Elem) -> Elem {
        self.rimp(*a, *r)
    }
    fn elements(&self) -> Result<Vec<Elem>> {
        Ok(self.elems().collect())
    }
    fn show(&self, a: &Elem) -> String {
        self.names[a.index()].clone()
    }
}
