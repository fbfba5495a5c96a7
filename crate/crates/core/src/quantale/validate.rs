use crate::error::Result;
use crate::report::{CheckBuilder, LawCheck, LawReport, Witness};

use super::QuantaleTables;

/// Join/meet tables of a finite complete lattice given by its order.
pub(crate) struct Lattice {
    pub join: Vec<usize>,
    pub meet: Vec<usize>,
    pub bottom: usize,
    pub top: usize,
}

impl Lattice {
    /// `Err` carries a witness for the first missing bound.
    pub fn from_order(order: &[Vec<bool>]) -> std::result::Result<Lattice, Witness> {
        let n = order.len();
        let least_upper = |cands: &mut dyn Iterator<Item = usize>| -> Option<usize> {
            let ubs: Vec<usize> = cands.collect();
            ubs.iter()
                .copied()
                .find(|&u| ubs.iter().all(|&v| order[u][v]))
        };
        let greatest_lower = |cands: &mut dyn Iterator<Item = usize>| -> Option<usize> {
            let lbs: Vec<usize> = cands.collect();
            lbs.iter()
                .copied()
                .find(|&l| lbs.iter().all(|&v| order[v][l]))
        };
        let bottom = least_upper(&mut (0..n))
            .filter(|&b| (0..n).all(|j| order[b][j]))
            .ok_or_else(|| Witness::new().with("missing", "bottom (join of the empty set)"))?;
        let top = (0..n)
            .find(|&t| (0..n).all(|j| order[j][t]))
            .ok_or_else(|| Witness::new().with("missing", "top"))?;
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                join[a * n + b] = least_upper(&mut (0..n).filter(|&u| order[a][u] && order[b][u]))
                    .ok_or_else(|| {
                        Witness::new()
                            .with("missing", "join")
                            .with("a", a)
                            .with("b", b)
                    })?;
                meet[a * n + b] =
                    greatest_lower(&mut (0..n).filter(|&l| order[l][a] && order[l][b]))
                        .ok_or_else(|| {
                            Witness::new()
                                .with("missing", "meet")
                                .with("a", a)
                                .with("b", b)
                        })?;
            }
        }
        Ok(Lattice {
            join,
            meet,
            bottom,
            top,
        })
    }
}

/// Checks every axiom of a finite involutive quantale.
///
/// Returns `Err` only for malformed tables; axiom failures are reported as
/// failing checks with witnesses naming the offending elements.
pub fn validate_quantale(t: &QuantaleTables) -> Result<LawReport> {
    t.check_shape()?;
    let n = t.len();
    let nm = |i: usize| t.names[i].as_str();
    let le = |a: usize, b: usize| t.order[a][b];
    let mul = |a: usize, b: usize| t.mul[a][b];
    let inv = |a: usize| t.involution[a];
    let mut report = LawReport::new("quantale");

    let mut po = CheckBuilder::new("order.partial_order");
    for a in 0..n {
        po.case(le(a, a), || Witness::new().with("reflexivity", nm(a)));
        for b in 0..n {
            po.case(a == b || !(le(a, b) && le(b, a)), || {
                Witness::new()
                    .with("antisymmetry", nm(a))
                    .with("and", nm(b))
            });
            for c in 0..n {
                po.case(!(le(a, b) && le(b, c)) || le(a, c), || {
                    Witness::new()
                        .with("transitivity", nm(a))
                        .with("via", nm(b))
                        .with("to", nm(c))
                });
            }
        }
    }
    let po = po.finish();
    let po_ok = po.passed();
    report.push(po);

    let lattice = if po_ok {
        let mut cl = CheckBuilder::new("order.complete_lattice");
        let lat = Lattice::from_order(&t.order);
        match &lat {
            Ok(_) => {
                cl.case(true, Witness::new);
            }
            Err(w) => {
                let w = name_indices(w, &t.names);
                cl.case(false, || w);
            }
        }
        report.push(cl.finish());
        lat.ok()
    } else {
        report.push(LawCheck::skipped(
            "order.complete_lattice",
            "order is not a partial order",
        ));
        None
    };

    let mut assoc = CheckBuilder::new("mul.associativity");
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let l = mul(mul(a, b), c);
                let r = mul(a, mul(b, c));
                assoc.case(l == r, || {
                    Witness::new()
                        .with("p", nm(a))
                        .with("q", nm(b))
                        .with("r", nm(c))
                        .with("(p&q)&r", nm(l))
                        .with("p&(q&r)", nm(r))
                });
            }
        }
    }
    report.push(assoc.finish());

    let k = t.unit;
    let mut unit = CheckBuilder::new("mul.unit");
    for a in 0..n {
        unit.case(mul(k, a) == a && mul(a, k) == a, || {
            Witness::new()
                .with("q", nm(a))
                .with("k&q", nm(mul(k, a)))
                .with("q&k", nm(mul(a, k)))
        });
    }
    report.push(unit.finish());

    if let Some(lat) = &lattice {
        let join = |a: usize, b: usize| lat.join[a * n + b];
        let mut jp = CheckBuilder::new("mul.join_preservation");
        for a in 0..n {
            jp.case(
                mul(a, lat.bottom) == lat.bottom && mul(lat.bottom, a) == lat.bottom,
                || {
                    Witness::new()
                        .with("p", nm(a))
                        .with("empty_join", nm(lat.bottom))
                },
            );
            for b in 0..n {
                for c in 0..n {
                    let l1 = mul(a, join(b, c));
                    let r1 = join(mul(a, b), mul(a, c));
                    let l2 = mul(join(b, c), a);
                    let r2 = join(mul(b, a), mul(c, a));
                    jp.case(l1 == r1 && l2 == r2, || {
                        Witness::new()
                            .with("p", nm(a))
                            .with("q1", nm(b))
                            .with("q2", nm(c))
                    });
                }
            }
        }
        report.push(jp.finish());

        // Residuals as joins; equivalence p&q <= r <=> p <= r/q <=> q <= p\r.
        let mut res = CheckBuilder::new("mul.residuation");
        let limp =
            |r: usize, b: usize| (0..n).filter(|&p| le(mul(p, b), r)).fold(lat.bottom, &join);
        let rimp =
            |a: usize, r: usize| (0..n).filter(|&x| le(mul(a, x), r)).fold(lat.bottom, &join);
        for p in 0..n {
            for q in 0..n {
                for r in 0..n {
                    let lhs = le(mul(p, q), r);
                    let ok = lhs == le(p, limp(r, q)) && lhs == le(q, rimp(p, r));
                    res.case(ok, || {
                        Witness::new()
                            .with("p", nm(p))
                            .with("q", nm(q))
                            .with("r", nm(r))
                    });
                }
            }
        }
        report.push(res.finish());
    } else {
        report.push(LawCheck::skipped(
            "mul.join_preservation",
            "order is not a complete lattice",
        ));
        report.push(LawCheck::skipped(
            "mul.residuation",
            "order is not a complete lattice",
        ));
    }

    let mut iu = CheckBuilder::new("involution.unit");
    iu.case(inv(k) == k, || {
        Witness::new().with("k", nm(k)).with("k°", nm(inv(k)))
    });
    report.push(iu.finish());

    let mut ii = CheckBuilder::new("involution.involutive");
    for a in 0..n {
        ii.case(inv(inv(a)) == a, || {
            Witness::new().with("q", nm(a)).with("q°°", nm(inv(inv(a))))
        });
    }
    report.push(ii.finish());

    let mut ia = CheckBuilder::new("involution.anti_multiplicative");
    for a in 0..n {
        for b in 0..n {
            let l = inv(mul(a, b));
            let r = mul(inv(b), inv(a));
            ia.case(l == r, || {
                Witness::new()
                    .with("p", nm(a))
                    .with("q", nm(b))
                    .with("(p&q)°", nm(l))
                    .with("q°&p°", nm(r))
            });
        }
    }
    report.push(ia.finish());

    if let Some(lat) = &lattice {
        let join = |a: usize, b: usize| lat.join[a * n + b];
        let mut ij = CheckBuilder::new("involution.join_preserving");
        ij.case(inv(lat.bottom) == lat.bottom, || {
            Witness::new().with("bottom°", nm(inv(lat.bottom)))
        });
        for a in 0..n {
            for b in 0..n {
                ij.case(inv(join(a, b)) == join(inv(a), inv(b)), || {
                    Witness::new().with("p", nm(a)).with("q", nm(b))
                });
            }
        }
        report.push(ij.finish());

        let mut io = CheckBuilder::new("involution.order_isomorphism");
        for a in 0..n {
            for b in 0..n {
                io.case(le(a, b) == le(inv(a), inv(b)), || {
                    Witness::new().with("p", nm(a)).with("q", nm(b))
                });
            }
        }
        report.push(io.finish());
    } else {
        report.push(LawCheck::skipped(
            "involution.join_preserving",
            "order is not a complete lattice",
        ));
        report.push(LawCheck::skipped(
            "involution.order_isomorphism",
            "order is not a complete lattice",
        ));
    }

    Ok(report)
}

fn name_indices(w: &Witness, names: &[String]) -> Witness {
    let mut out = Witness::new();
    for (k, v) in w.bindings() {
        let shown = v
            .parse::<usize>()
            .ok()
            .and_then(|i| names.get(i).cloned())
            .unwrap_or_else(|| v.clone());
        out = out.with(k.clone(), shown);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantale::FiniteQuantale;
    use crate::report::Status;

    #[test]
    fn boolean_passes() {
        let r = validate_quantale(&FiniteQuantale::boolean2().tables()).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn broken_unit_is_witnessed_at_one() {
        let mut t = FiniteQuantale::boolean2().tables();
        t.mul[1][1] = 0;
        let r = validate_quantale(&t).unwrap();
        let c = r.get("mul.unit").unwrap();
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.witnesses[0].get("q"), Some("1"));
    }

    #[test]
    fn lukasiewicz3_brute_force_all_triples() {
        // a & b = max(a + b - 1, 0) over {0, 1/2, 1}, indices 0..3 in halves
        let luk = |a: usize, b: usize| (a + b).saturating_sub(2);
        let mut assoc_ok = true;
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    assoc_ok &= luk(luk(a, b), c) == luk(a, luk(b, c));
                }
            }
        }
        assert!(assoc_ok);
        let t = QuantaleTables {
            names: vec!["0".into(), "1/2".into(), "1".into()],
            order: QuantaleTables::chain_order(3),
            mul: (0..3)
                .map(|a| (0..3).map(|b| luk(a, b)).collect())
                .collect(),
            unit: 2,
            involution: vec![0, 1, 2],
        };
        let r = validate_quantale(&t).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.get("mul.associativity").unwrap().cases, 27);
    }

    #[test]
    fn malformed_tables_are_structural_errors() {
        let mut t = FiniteQuantale::boolean2().tables();
        t.mul[0].pop();
        assert!(validate_quantale(&t).is_err());
        let mut t = FiniteQuantale::boolean2().tables();
        t.involution[0] = 7;
        assert!(validate_quantale(&t).is_err());
    }

    #[test]
    fn non_lattice_order_skips_dependent_checks() {
        // two incomparable elements, no bottom
        let t = QuantaleTables {
            names: vec!["a".into(), "b".into()],
            order: vec![vec![true, false], vec![false, true]],
            mul: vec![vec![0, 1], vec![1, 0]],
            unit: 0,
            involution: vec![0, 1],
        };
        let r = validate_quantale(&t).unwrap();
        assert_eq!(r.status("order.complete_lattice"), Some(Status::Fail));
        assert_eq!(r.status("mul.join_preservation"), Some(Status::Skipped));
        assert_eq!(r.status("mul.associativity"), Some(Status::Pass));
    }
}
