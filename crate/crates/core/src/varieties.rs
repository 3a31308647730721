//! Total-operation presentations. The partial meet of an implication
//! semilattice becomes the ternary `r(x,y,z) = (x v z) ∧ (y v z)`
//! (I-algebras, identities (1')-(10')); the partial product of a relatively
//! residuated semilattice becomes `q(x,y,z) = (x v z) ⊙ (y v z)`
//! (R-algebras, identities (20)-(30)). Both are recovered by reading the
//! ternary at any common lower bound `z`.

use crate::algebra::{Algebra, ClassTag, Op};
use crate::error::{Error, Result};
use crate::implication::NcisAlgebra;
use crate::report::{expect_eq, expect_leq, Report, Violation};
use crate::residuated::RrsAlgebra;
use crate::table::{BinTable, TernTable};
use crate::Elem;

/// An algebra with `v`, `->` and `r` that passed [`validate_ialgebra`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IAlgebra(Algebra);

impl IAlgebra {
    pub fn new(alg: Algebra) -> Result<Self> {
        validate_ialgebra(&alg).into_result()?;
        Ok(IAlgebra(
            alg.without(Op::Meet)
                .without(Op::Prod)
                .without(Op::Q)
                .with_class(ClassTag::Ialg),
        ))
    }

    pub fn algebra(&self) -> &Algebra {
        &self.0
    }

    pub fn into_algebra(self) -> Algebra {
        self.0
    }

    #[inline]
    pub fn r(&self, x: Elem, y: Elem, z: Elem) -> Elem {
        self.0.r.as_ref().expect("validated").at(x, y, z)
    }

    #[inline]
    pub fn imp(&self, x: Elem, y: Elem) -> Elem {
        self.0.imp.as_ref().expect("validated").at(x, y)
    }
}

/// An algebra with `v`, `->` and `q` that passed [`validate_ralgebra`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RAlgebra(Algebra);

impl RAlgebra {
    pub fn new(alg: Algebra) -> Result<Self> {
        validate_ralgebra(&alg, false).into_result()?;
        Ok(RAlgebra(
            alg.without(Op::Meet)
                .without(Op::Prod)
                .without(Op::R)
                .with_class(ClassTag::Ralg),
        ))
    }

    pub fn algebra(&self) -> &Algebra {
        &self.0
    }

    pub fn into_algebra(self) -> Algebra {
        self.0
    }

    #[inline]
    pub fn q(&self, x: Elem, y: Elem, z: Elem) -> Elem {
        self.0.q.as_ref().expect("validated").at(x, y, z)
    }

    #[inline]
    pub fn imp(&self, x: Elem, y: Elem) -> Elem {
        self.0.imp.as_ref().expect("validated").at(x, y)
    }
}

/// `t(x,y,z) = f(x v z, y v z)` for a partial `f` defined on every pair
/// above a common `z`.
fn lift(alg: &Algebra, f: &BinTable) -> TernTable {
    TernTable::from_fn(alg.size(), |x, y, z| {
        f.get(alg.join(x, z), alg.join(y, z))
            .expect("defined on pairs with a common lower bound")
    })
}

/// `f(x,y) = t(x,y,z)` for any common lower bound `z`, undefined on
/// unbounded pairs.
fn restrict(alg: &Algebra, t: &TernTable, op: &'static str) -> Result<BinTable> {
    let n = alg.size();
    let mut f = BinTable::undefined(n);
    for x in 0..n {
        for y in 0..n {
            let lower = alg.common_lower_bounds(x, y);
            if let Some((&z0, rest)) = lower.split_first() {
                let v = t.at(x, y, z0);
                if let Some(&z) = rest.iter().find(|&&z| t.at(x, y, z) != v) {
                    return Err(Error::NotWellDefined {
                        op,
                        witness: vec![x, y, z0, z],
                    });
                }
                f.set(x, y, Some(v));
            }
        }
    }
    Ok(f)
}

/// The map `𝔸`: `r(x,y,z) := (x v z) ∧ (y v z)`.
pub fn ialgebra_from_ncis(ncis: &NcisAlgebra) -> Result<IAlgebra> {
    let alg = ncis.algebra();
    let r = lift(alg, alg.meet_table().expect("validated"));
    IAlgebra::new(alg.clone().without(Op::Meet).with_r(r)?)
}

/// The map `𝕁`: `x ∧ y := r(x,y,z)` for any `z <= x, y`.
pub fn ncis_from_ialgebra(ia: &IAlgebra) -> Result<NcisAlgebra> {
    let alg = ia.algebra();
    let meet = restrict(alg, alg.r_table().expect("validated"), "r")?;
    NcisAlgebra::new(alg.clone().without(Op::R).with_meet(meet)?)
}

/// The map `𝔹`: `q(x,y,z) := (x v z) ⊙ (y v z)`.
pub fn ralgebra_from_rrs(rrs: &RrsAlgebra) -> Result<RAlgebra> {
    let alg = rrs.algebra();
    let q = lift(alg, alg.prod_table().expect("validated"));
    RAlgebra::new(alg.clone().without(Op::Prod).with_q(q)?)
}

/// The map `ℚ`: `x ⊙ y := q(x,y,z)` for any `z <= x, y`.
pub fn rrs_from_ralgebra(ra: &RAlgebra) -> Result<RrsAlgebra> {
    let alg = ra.algebra();
    let prod = restrict(alg, alg.q_table().expect("validated"), "q")?;
    RrsAlgebra::new(alg.clone().without(Op::Q).with_prod(prod)?)
}

fn signature(alg: &Algebra, op: Op) -> Result<(&BinTable, &TernTable), Violation> {
    let imp = alg
        .imp_table()
        .ok_or_else(|| Violation::structural("signature", &[], "missing imp table"))?;
    let t = alg.ternary(op).ok_or_else(|| {
        Violation::structural("signature", &[], format!("missing {} table", op.name()))
    })?;
    Ok((imp, t))
}

/// Identities (1')-(10') over all tuples.
pub fn validate_ialgebra(alg: &Algebra) -> Report {
    let run = || -> Result<(), Violation> {
        let (imp, r) = signature(alg, Op::R)?;
        let n = alg.size();
        let j = |x, y| alg.join(x, y);
        let i = |x, y| imp.at(x, y);
        let r = |x, y, z| r.at(x, y, z);
        let leq = |x, y| alg.leq(x, y);
        for x in 0..n {
            for y in 0..n {
                expect_leq("(1')", &[x, y], leq(y, i(x, y)), y, i(x, y))?;
            }
        }
        for x in 0..n {
            for y in 0..n {
                expect_eq("(2')", &[x, y], r(x, i(x, y), y), y)?;
            }
        }
        for x in 0..n {
            for y in 0..n {
                expect_eq("(3')", &[x, y], i(j(x, y), y), i(x, y))?;
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let rhs = i(j(x, z), r(x, y, z));
                    expect_leq("(4')", &[x, y, z], leq(y, rhs), y, rhs)?;
                }
            }
        }
        for (law, bound) in [("(5')", 0), ("(6')", 1)] {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let v = r(x, y, z);
                        let b = j([x, y][bound], z);
                        expect_leq(law, &[x, y, z], leq(v, b), v, b)?;
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    expect_eq("(7')", &[x, y, z], r(x, j(x, y), z), j(x, z))?;
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    expect_eq("(8')", &[x, y, z], r(x, y, z), r(j(x, z), j(y, z), z))?;
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let v = r(x, y, z);
                    expect_leq("(9')", &[x, y, z], leq(z, v), z, v)?;
                }
            }
        }
        for u in 0..n {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        expect_eq(
                            "(10')",
                            &[u, x, y, z],
                            r(u, r(x, y, z), z),
                            r(r(u, x, z), r(u, y, z), z),
                        )?;
                    }
                }
            }
        }
        Ok(())
    };
    run().into()
}

/// `r(x,x,y) = x v y = r(y,y,x)`, a consequence of (1')-(10') checked on
/// its own.
pub fn check_r_diagonal(ia: &IAlgebra) -> Report {
    let alg = ia.algebra();
    let run = || -> Result<(), Violation> {
        for x in alg.elements() {
            for y in alg.elements() {
                expect_eq("r-diagonal", &[x, y], ia.r(x, x, y), alg.join(x, y))?;
                expect_eq("r-diagonal", &[x, y], ia.r(y, y, x), alg.join(x, y))?;
            }
        }
        Ok(())
    };
    run().into()
}

/// Identities (20)-(30) over all tuples; with `subvariety`, also
/// `q(x, x -> y, y) = y`.
pub fn validate_ralgebra(alg: &Algebra, subvariety: bool) -> Report {
    let run = || -> Result<(), Violation> {
        let (imp, q) = signature(alg, Op::Q)?;
        let n = alg.size();
        let top = alg.top();
        let j = |x, y| alg.join(x, y);
        let i = |x, y| imp.at(x, y);
        let q = |x, y, z| q.at(x, y, z);
        let leq = |x, y| alg.leq(x, y);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let v = q(x, y, z);
                    expect_leq("(20)", &[x, y, z], leq(z, v), z, v)?;
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for u in 0..n {
                        let zu = j(z, u);
                        let (a, b) = (j(zu, x), j(zu, y));
                        expect_eq("(21)", &[x, y, z, u], q(a, b, z), q(a, b, zu))?;
                    }
                }
            }
        }
        for x in 0..n {
            expect_eq("(22)", &[x], q(x, top, x), x)?;
            expect_eq("(22)", &[x], q(top, x, x), x)?;
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    expect_eq("(23)", &[x, y, z], q(x, y, z), q(y, x, z))?;
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for u in 0..n {
                        expect_eq(
                            "(24)",
                            &[x, y, z, u],
                            q(q(x, y, u), z, u),
                            q(x, q(y, z, u), u),
                        )?;
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for u in 0..n {
                        let (l, r) = (q(x, z, u), q(j(x, y), z, u));
                        expect_leq("(25)", &[x, y, z, u], leq(l, r), l, r)?;
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (l, r) = (j(x, z), i(y, j(q(x, y, z), z)));
                    expect_leq("(26)", &[x, y, z], leq(l, r), l, r)?;
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                expect_leq("(27)", &[x, y], leq(x, i(y, x)), x, i(y, x))?;
            }
        }
        for x in 0..n {
            for y in 0..n {
                let v = q(x, i(x, y), y);
                expect_leq("(28)", &[x, y], leq(v, y), v, y)?;
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    expect_eq("(29)", &[x, y, z], q(x, y, z), q(j(x, z), j(y, z), z))?;
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                expect_eq("(30)", &[x, y], i(j(x, y), y), i(x, y))?;
            }
        }
        if subvariety {
            for x in 0..n {
                for y in 0..n {
                    expect_eq("subvariety", &[x, y], q(x, i(x, y), y), y)?;
                }
            }
        }
        Ok(())
    };
    run().into()
}
