//! Builtin quantales: Boolean algebra, finite chains, finite frames and
//! powersets of finite involutive monoids.

use num_rational::Ratio;

use super::{FiniteQuantale, QuantaleTables};
use crate::error::{Error, Result};

/// A finite topology: points plus the list of open sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    pub points: Vec<String>,
    /// Each open set as a list of point indices.
    pub opens: Vec<Vec<usize>>,
}

impl Topology {
    /// The Sierpiński space on `{a, b}` with opens `∅, {a}, {a, b}`.
    pub fn sierpinski() -> Self {
        Topology {
            points: vec!["a".into(), "b".into()],
            opens: vec![vec![], vec![0], vec![0, 1]],
        }
    }
}

/// A finite monoid with an involutive anti-automorphism `a ↦ a*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monoid {
    pub elements: Vec<String>,
    pub mul: Vec<Vec<usize>>,
    pub involution: Vec<usize>,
}

impl Monoid {
    /// The cyclic group of order `n` with inversion as involution.
    pub fn cyclic(n: usize) -> Self {
        Monoid {
            elements: (0..n).map(|i| i.to_string()).collect(),
            mul: (0..n)
                .map(|a| (0..n).map(|b| (a + b) % n).collect())
                .collect(),
            involution: (0..n).map(|a| (n - a) % n).collect(),
        }
    }
}

const MAX_CHAIN: usize = 64;
const MAX_FRAME_POINTS: usize = 16;
const MAX_MONOID: usize = 6;

fn chain_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| Ratio::new(i as u64, (n - 1) as u64).to_string())
        .collect()
}

fn set_name(members: impl Iterator<Item = String>) -> String {
    let v: Vec<String> = members.collect();
    format!("{{{}}}", v.join(","))
}

impl FiniteQuantale {
    /// The two-element Boolean algebra `{0, 1}` with `& = ∧`.
    pub fn boolean2() -> Self {
        let t = QuantaleTables {
            names: vec!["0".into(), "1".into()],
            order: QuantaleTables::chain_order(2),
            mul: vec![vec![0, 0], vec![0, 1]],
            unit: 1,
            involution: vec![0, 1],
        };
        FiniteQuantale::new("boolean2", t).expect("boolean2 is a quantale")
    }

    /// The chain `{0, 1/(n-1), ..., 1}` with `a & b = max(a + b - 1, 0)`.
    pub fn chain_lukasiewicz(n: usize) -> Result<Self> {
        check_chain(n)?;
        let top = n - 1;
        let t = QuantaleTables {
            names: chain_names(n),
            order: QuantaleTables::chain_order(n),
            mul: (0..n)
                .map(|a| (0..n).map(|b| (a + b).saturating_sub(top)).collect())
                .collect(),
            unit: top,
            involution: (0..n).collect(),
        };
        FiniteQuantale::new(format!("chain_lukasiewicz({n})"), t)
    }

    /// The chain `{0, 1/(n-1), ..., 1}` with `& = min`.
    pub fn chain_goedel(n: usize) -> Result<Self> {
        check_chain(n)?;
        let t = QuantaleTables {
            names: chain_names(n),
            order: QuantaleTables::chain_order(n),
            mul: (0..n).map(|a| (0..n).map(|b| a.min(b)).collect()).collect(),
            unit: n - 1,
            involution: (0..n).collect(),
        };
        FiniteQuantale::new(format!("chain_goedel({n})"), t)
    }

    /// The frame of open sets of a finite topology: inclusion order,
    /// `& = ∩`, unit the whole space, identity involution.
    pub fn finite_frame(top: &Topology) -> Result<Self> {
        let p = top.points.len();
        if p > MAX_FRAME_POINTS {
            return Err(Error::InvalidParameter(format!(
                "finite_frame supports at most {MAX_FRAME_POINTS} points, got {p}"
            )));
        }
        let mut masks: Vec<u32> = Vec::with_capacity(top.opens.len());
        for open in &top.opens {
            let mut m = 0u32;
            for &i in open {
                if i >= p {
                    return Err(Error::InvalidParameter(format!(
                        "open set refers to point index {i}, but there are {p} points"
                    )));
                }
                m |= 1 << i;
            }
            if masks.contains(&m) {
                return Err(Error::InvalidParameter(format!(
                    "open set {} listed twice",
                    set_name(open.iter().map(|&i| top.points[i].clone()))
                )));
            }
            masks.push(m);
        }
        let whole = if p == 0 { 0 } else { (1u32 << p) - 1 };
        if !masks.contains(&0) {
            return Err(Error::InvalidParameter(
                "topology must contain the empty set".into(),
            ));
        }
        if !masks.contains(&whole) {
            return Err(Error::InvalidParameter(
                "topology must contain the whole space".into(),
            ));
        }
        for &a in &masks {
            for &b in &masks {
                if !masks.contains(&(a | b)) || !masks.contains(&(a & b)) {
                    return Err(Error::InvalidParameter(format!(
                        "topology is not closed under union/intersection at {} and {}",
                        mask_name(a, &top.points),
                        mask_name(b, &top.points)
                    )));
                }
            }
        }
        masks.sort_by_key(|&m| (m.count_ones(), m));
        let n = masks.len();
        let idx = |m: u32| masks.iter().position(|&x| x == m).expect("closed");
        let t = QuantaleTables {
            names: masks.iter().map(|&m| mask_name(m, &top.points)).collect(),
            order: (0..n)
                .map(|i| (0..n).map(|j| masks[i] & !masks[j] == 0).collect())
                .collect(),
            mul: (0..n)
                .map(|i| (0..n).map(|j| idx(masks[i] & masks[j])).collect())
                .collect(),
            unit: idx(whole),
            involution: (0..n).collect(),
        };
        FiniteQuantale::new("finite_frame", t)
    }

    /// All subsets of a finite monoid: inclusion order, `A & B = {ab}`,
    /// unit `{e}`, involution `A° = {a* | a ∈ A}`.
    pub fn powerset_of_monoid(m: &Monoid) -> Result<Self> {
        let k = m.elements.len();
        if k == 0 || k > MAX_MONOID {
            return Err(Error::InvalidParameter(format!(
                "powerset_of_monoid supports monoids of size 1..={MAX_MONOID}, got {k}"
            )));
        }
        if m.mul.len() != k
            || m.mul
                .iter()
                .any(|r| r.len() != k || r.iter().any(|&v| v >= k))
        {
            return Err(Error::InvalidParameter(format!(
                "monoid table must be {k}x{k} with entries below {k}"
            )));
        }
        if m.involution.len() != k || m.involution.iter().any(|&v| v >= k) {
            return Err(Error::InvalidParameter(format!(
                "monoid involution must have {k} entries below {k}"
            )));
        }
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    if m.mul[m.mul[a][b]][c] != m.mul[a][m.mul[b][c]] {
                        return Err(Error::InvalidParameter(format!(
                            "monoid is not associative at ({}, {}, {})",
                            m.elements[a], m.elements[b], m.elements[c]
                        )));
                    }
                }
            }
        }
        let e = (0..k)
            .find(|&e| (0..k).all(|a| m.mul[e][a] == a && m.mul[a][e] == a))
            .ok_or_else(|| Error::InvalidParameter("monoid has no identity".into()))?;
        let star = &m.involution;
        for a in 0..k {
            if star[star[a]] != a {
                return Err(Error::InvalidParameter(format!(
                    "monoid involution is not involutive at {}",
                    m.elements[a]
                )));
            }
            for b in 0..k {
                if star[m.mul[a][b]] != m.mul[star[b]][star[a]] {
                    return Err(Error::InvalidParameter(format!(
                        "monoid involution is not an anti-automorphism at ({}, {})",
                        m.elements[a], m.elements[b]
                    )));
                }
            }
        }
        let mut masks: Vec<u32> = (0..(1u32 << k)).collect();
        masks.sort_by_key(|&s| (s.count_ones(), s));
        let n = masks.len();
        let mut pos = vec![0usize; n];
        for (i, &s) in masks.iter().enumerate() {
            pos[s as usize] = i;
        }
        let product = |s: u32, t: u32| {
            let mut out = 0u32;
            for a in (0..k).filter(|&a| s & (1 << a) != 0) {
                for b in (0..k).filter(|&b| t & (1 << b) != 0) {
                    out |= 1 << m.mul[a][b];
                }
            }
            out
        };
        let conj = |s: u32| {
            (0..k)
                .filter(|&a| s & (1 << a) != 0)
                .fold(0u32, |acc, a| acc | (1 << star[a]))
        };
        let t = QuantaleTables {
            names: masks.iter().map(|&s| mask_name(s, &m.elements)).collect(),
            order: (0..n)
                .map(|i| (0..n).map(|j| masks[i] & !masks[j] == 0).collect())
                .collect(),
            mul: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| pos[product(masks[i], masks[j]) as usize])
                        .collect()
                })
                .collect(),
            unit: pos[1usize << e],
            involution: (0..n).map(|i| pos[conj(masks[i]) as usize]).collect(),
        };
        FiniteQuantale::new("powerset_of_monoid", t)
    }
}

fn mask_name(mask: u32, points: &[String]) -> String {
    set_name(
        points
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, s)| s.clone()),
    )
}

fn check_chain(n: usize) -> Result<()> {
    if !(2..=MAX_CHAIN).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "chain length must be in 2..={MAX_CHAIN}, got {n}"
        )));
    }
    Ok(())
}
