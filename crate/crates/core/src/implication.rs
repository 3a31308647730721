//! Non-classical implication semilattices: a join-semilattice with top, the
//! partial meet of bounded pairs and a total `->` satisfying
//!
//! 1. `y <= x -> y`
//! 2. `(x v y) ∧ (x -> y) = y`
//! 3. `(x v y) -> y = x -> y`
//! 4. `y <= (x v z) -> ((x v z) ∧ (y v z))`
//!
//! `x -> y` is the pseudocomplement of `x v y` in the section `[y, 1]`, and
//! conversely the pseudocomplement of `y` in `[x, 1]` is `y -> x`.

use crate::algebra::{Algebra, ClassTag, Op};
use crate::error::Result;
use crate::report::{expect_eq, expect_leq, Report, Violation};
use crate::sectioned::{check_meet_table, SectionedAlgebra};
use crate::table::BinTable;
use crate::Elem;

/// An algebra that passed [`validate_ncis`]. Carries total `->` and the
/// partial meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcisAlgebra(Algebra);

impl NcisAlgebra {
    /// Validates `alg` as an implication semilattice. A missing meet table
    /// is computed from the order.
    pub fn new(alg: Algebra) -> Result<Self> {
        let alg = if alg.meet_table().is_none() {
            alg.with_computed_meet()?
        } else {
            alg
        };
        validate_ncis(&alg).into_result()?;
        Ok(NcisAlgebra(
            alg.without(Op::Prod)
                .without(Op::R)
                .without(Op::Q)
                .with_class(ClassTag::Ncis),
        ))
    }

    pub fn algebra(&self) -> &Algebra {
        &self.0
    }

    pub fn into_algebra(self) -> Algebra {
        self.0
    }

    #[inline]
    pub fn imp(&self, x: Elem, y: Elem) -> Elem {
        self.0.imp.as_ref().expect("validated").at(x, y)
    }

    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Option<Elem> {
        self.0.meet.as_ref().expect("validated").get(x, y)
    }
}

/// The map `x -> y := (x v y)^y` from a sectioned semilattice to an
/// implication semilattice.
pub fn derive_implication(s: &SectionedAlgebra) -> Result<NcisAlgebra> {
    let alg = s.algebra();
    let imp = BinTable::total_from_fn(alg.size(), |x, y| {
        s.complement(y, alg.join(x, y))
            .expect("sectioned algebra has every pseudocomplement")
    });
    NcisAlgebra::new(alg.clone().with_imp(imp)?)
}

/// Convenience: validates a bare join-semilattice as sectioned and applies
/// [`derive_implication`].
pub fn derive_implication_from_order(alg: Algebra) -> Result<NcisAlgebra> {
    derive_implication(&SectionedAlgebra::from_algebra(alg)?)
}

/// The map `y^x := y -> x` for `x <= y`, back to a sectioned semilattice.
/// The resulting family is checked against the pseudocomplements
/// determined by the order.
pub fn derive_sections(ncis: &NcisAlgebra) -> Result<SectionedAlgebra> {
    let alg = ncis.algebra();
    let n = alg.size();
    let mut family = BinTable::undefined(n);
    for x in 0..n {
        for y in alg.section(x) {
            family.set(y, x, Some(ncis.imp(y, x)));
        }
    }
    let base = alg.clone().without(Op::Imp);
    SectionedAlgebra::with_family(base, family)
}

fn require_imp(alg: &Algebra) -> Result<&BinTable, Violation> {
    alg.imp_table()
        .ok_or_else(|| Violation::structural("signature", &[], "missing imp table"))
}

/// Checks the meet domain law and axioms (1)-(4) over all tuples. The meet
/// is recomputed from the order; an attached meet table is cross-checked.
pub fn validate_ncis(alg: &Algebra) -> Report {
    let run = || -> Result<(), Violation> {
        let imp = require_imp(alg)?;
        let n = alg.size();
        let mut meet = BinTable::undefined(n);
        for x in 0..n {
            for y in 0..n {
                let m = alg.partial_meet(x, y).map_err(|_| {
                    Violation::structural("meet-domain", &[x, y], "bounded pair without infimum")
                })?;
                meet.set(x, y, m);
            }
        }
        check_meet_table(alg)?;
        let j = |x, y| alg.join(x, y);
        let i = |x, y| imp.at(x, y);
        for x in 0..n {
            for y in 0..n {
                expect_leq("(1)", &[x, y], alg.leq(y, i(x, y)), y, i(x, y))?;
            }
        }
        for x in 0..n {
            for y in 0..n {
                let lhs = meet.get(j(x, y), i(x, y)).ok_or_else(|| {
                    Violation::structural("(2)", &[x, y], "meet undefined where (1) guarantees it")
                })?;
                expect_eq("(2)", &[x, y], lhs, y)?;
            }
        }
        for x in 0..n {
            for y in 0..n {
                expect_eq("(3)", &[x, y], i(j(x, y), y), i(x, y))?;
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let xz = j(x, z);
                    let m = meet.get(xz, j(y, z)).ok_or_else(|| {
                        Violation::structural("(4)", &[x, y, z], "meet undefined on a bounded pair")
                    })?;
                    let rhs = i(xz, m);
                    expect_leq("(4)", &[x, y, z], alg.leq(y, rhs), y, rhs)?;
                }
            }
        }
        Ok(())
    };
    run().into()
}

/// Properties (5)-(9) that every implication semilattice satisfies.
pub fn check_ncis_properties(ncis: &NcisAlgebra) -> Report {
    let alg = ncis.algebra();
    let n = alg.size();
    let top = alg.top();
    let i = |x, y| ncis.imp(x, y);
    let run = || -> Result<(), Violation> {
        for x in 0..n {
            for y in 0..n {
                expect_eq("(5)", &[x, y], alg.leq(x, y), i(x, y) == top)?;
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !alg.leq(x, y) {
                    continue;
                }
                for z in 0..n {
                    let (l, r) = (i(y, z), i(x, z));
                    expect_leq("(6)", &[x, y, z], alg.leq(l, r), l, r)?;
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let r = i(i(x, y), y);
                expect_leq("(7)", &[x, y], alg.leq(x, r), x, r)?;
            }
        }
        for x in 0..n {
            for y in 0..n {
                expect_eq("(8)", &[x, y], i(i(i(x, y), y), y), i(x, y))?;
            }
        }
        for x in 0..n {
            expect_eq("(9)", &[x], i(top, x), x)?;
        }
        Ok(())
    };
    run().into()
}
