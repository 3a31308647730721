//! Order-theoretic primitives: the order read off the join, sections,
//! common lower bounds and the partial meet.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::report::{expect_eq, Report, Violation};
use crate::table::BinTable;
use crate::Elem;

impl Algebra {
    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.join.at(x, y) == y
    }

    #[inline]
    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join.at(x, y)
    }

    /// `{ z : z <= x and z <= y }` in index order.
    pub fn common_lower_bounds(&self, x: Elem, y: Elem) -> Vec<Elem> {
        self.elements()
            .filter(|&z| self.leq(z, x) && self.leq(z, y))
            .collect()
    }

    pub fn is_bounded_pair(&self, x: Elem, y: Elem) -> bool {
        self.elements().any(|z| self.leq(z, x) && self.leq(z, y))
    }

    /// Greatest common lower bound of `x` and `y`; `Ok(None)` when the pair
    /// has no lower bound at all.
    pub fn partial_meet(&self, x: Elem, y: Elem) -> Result<Option<Elem>> {
        let lower = self.common_lower_bounds(x, y);
        if lower.is_empty() {
            return Ok(None);
        }
        lower
            .iter()
            .copied()
            .find(|&m| lower.iter().all(|&z| self.leq(z, m)))
            .map(Some)
            .ok_or_else(|| {
                Error::Structure(format!(
                    "meet not unique for ({},{})",
                    self.label(x),
                    self.label(y)
                ))
            })
    }

    /// The principal filter `[x, 1]`, in index order.
    pub fn section(&self, x: Elem) -> Vec<Elem> {
        self.elements().filter(|&y| self.leq(x, y)).collect()
    }

    /// Meet table computed from the order. Fails when some bounded pair has
    /// no greatest lower bound.
    pub fn infimum_table(&self) -> Result<BinTable> {
        let n = self.size();
        let mut t = BinTable::undefined(n);
        for x in 0..n {
            for y in 0..n {
                t.set(x, y, self.partial_meet(x, y)?);
            }
        }
        Ok(t)
    }

    /// Attaches the meet table computed from the order.
    pub fn with_computed_meet(self) -> Result<Self> {
        let meet = self.infimum_table()?;
        self.with_meet(meet)
    }

    /// True when the algebra has a least element.
    pub fn bottom(&self) -> Option<Elem> {
        self.elements()
            .find(|&b| self.elements().all(|x| self.leq(b, x)))
    }
}

/// Checks the join table against the semilattice laws, in the order
/// idempotence, commutativity, associativity, order consistency and
/// absorption of the top.
pub fn validate_join_semilattice(alg: &Algebra) -> Report {
    let n = alg.size();
    let j = &alg.join;
    let run = || -> Result<(), Violation> {
        for x in 0..n {
            expect_eq("idempotence", &[x], j.at(x, x), x)?;
        }
        for x in 0..n {
            for y in 0..n {
                expect_eq("commutativity", &[x, y], j.at(x, y), j.at(y, x))?;
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    expect_eq(
                        "associativity",
                        &[x, y, z],
                        j.at(x, j.at(y, z)),
                        j.at(j.at(x, y), z),
                    )?;
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let lub = alg.order.least_upper_bound(x, y);
                if lub != Some(j.at(x, y)) {
                    return Err(Violation::new(
                        "order-consistency",
                        &[x, y],
                        j.at(x, y),
                        lub,
                        "join is not the least upper bound under the order",
                    ));
                }
            }
        }
        let top = alg.top();
        for x in 0..n {
            expect_eq("top", &[x], j.at(x, top), top)?;
        }
        Ok(())
    };
    run().into()
}
