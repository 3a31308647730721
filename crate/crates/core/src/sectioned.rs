//! Join-semilattices whose sections `[x, 1]` are pseudocomplemented
//! lattices.
//!
//! The meet of a bounded pair is always the order-theoretic infimum, so the
//! only per-section datum is the pseudocomplement `y^x` of each `y` in
//! `[x, 1]`: the greatest `z` in `[x, 1]` with `y ∧ z = x`.

use crate::algebra::{Algebra, ClassTag};
use crate::error::{Error, Result};
use crate::report::{Report, Violation};
use crate::table::BinTable;
use crate::Elem;

/// Greatest `z` in `[base, 1]` with `y ∧ z = base`, or `None` if the set of
/// such `z` has no greatest element.
pub fn pseudocomplement_in_section(alg: &Algebra, base: Elem, y: Elem) -> Result<Option<Elem>> {
    if !alg.leq(base, y) {
        return Err(Error::Precondition(format!(
            "{} is not in the section of {}",
            alg.label(y),
            alg.label(base)
        )));
    }
    let mut candidates = Vec::new();
    for z in alg.section(base) {
        if alg.partial_meet(y, z)? == Some(base) {
            candidates.push(z);
        }
    }
    Ok(candidates
        .iter()
        .copied()
        .find(|&g| candidates.iter().all(|&z| alg.leq(z, g))))
}

/// Per-section summary used by `tables` and diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionReport {
    pub base: Elem,
    pub is_lattice: bool,
    /// `(y, y^base)` for each `y` in the section that has one.
    pub pseudocomplements: Vec<(Elem, Elem)>,
    pub failure_witness: Option<(Elem, Elem)>,
}

pub fn section_report(alg: &Algebra, base: Elem) -> SectionReport {
    let sec = alg.section(base);
    let mut failure_witness = None;
    let mut is_lattice = true;
    'outer: for &y in &sec {
        for &z in &sec {
            if alg.partial_meet(y, z).is_err() {
                is_lattice = false;
                failure_witness = Some((y, z));
                break 'outer;
            }
        }
    }
    let mut pseudocomplements = Vec::new();
    if is_lattice {
        for &y in &sec {
            match pseudocomplement_in_section(alg, base, y) {
                Ok(Some(c)) => pseudocomplements.push((y, c)),
                _ => {
                    failure_witness.get_or_insert((base, y));
                }
            }
        }
    }
    SectionReport {
        base,
        is_lattice,
        pseudocomplements,
        failure_witness,
    }
}

/// PASS iff every bounded pair has a greatest lower bound (law `(a)`) and
/// every element of every section has a pseudocomplement there (law `(b)`).
/// An attached meet table must agree with the computed infimum.
pub fn validate_sectioned(alg: &Algebra) -> Report {
    let run = || -> Result<(), Violation> {
        for x in alg.elements() {
            for y in alg.elements() {
                if alg.partial_meet(x, y).is_err() {
                    return Err(Violation::structural(
                        "(a)",
                        &[x, y],
                        "bounded pair without a greatest lower bound",
                    ));
                }
            }
        }
        check_meet_table(alg)?;
        for x in alg.elements() {
            for y in alg.section(x) {
                if !matches!(pseudocomplement_in_section(alg, x, y), Ok(Some(_))) {
                    return Err(Violation::structural(
                        "(b)",
                        &[x, y],
                        "no pseudocomplement in section",
                    ));
                }
            }
        }
        Ok(())
    };
    run().into()
}

/// Cross-checks an attached meet table against the infimum computed from
/// the order. Assumes infima exist on bounded pairs.
pub(crate) fn check_meet_table(alg: &Algebra) -> Result<(), Violation> {
    let Some(meet) = alg.meet_table() else {
        return Ok(());
    };
    for x in alg.elements() {
        for y in alg.elements() {
            let inf = alg.partial_meet(x, y).ok().flatten();
            if meet.get(x, y) != inf {
                return Err(Violation::new(
                    "meet-table",
                    &[x, y],
                    meet.get(x, y),
                    inf,
                    "meet table disagrees with the infimum",
                ));
            }
        }
    }
    Ok(())
}

/// A join-semilattice with pseudocomplemented sections together with its
/// family of sectional pseudocomplements, stored as `pc[y][x] = y^x` for
/// `x <= y` (undefined elsewhere).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionedAlgebra {
    alg: Algebra,
    pc: BinTable,
}

impl SectionedAlgebra {
    /// Computes the pseudocomplement family of a validated algebra. A meet
    /// table is attached if absent; any `->`, product or ternary tables
    /// are dropped.
    pub fn from_algebra(alg: Algebra) -> Result<Self> {
        validate_sectioned(&alg).into_result()?;
        let n = alg.size();
        let mut pc = BinTable::undefined(n);
        for x in 0..n {
            for y in alg.section(x) {
                pc.set(y, x, pseudocomplement_in_section(&alg, x, y)?);
            }
        }
        let alg = strip_to_sectioned(alg)?;
        Ok(SectionedAlgebra { alg, pc })
    }

    /// Wraps an explicit pseudocomplement family, checking it against the
    /// one determined by the order.
    pub fn with_family(alg: Algebra, pc: BinTable) -> Result<Self> {
        let computed = Self::from_algebra(alg)?;
        for x in computed.alg.elements() {
            for y in computed.alg.elements() {
                if pc.get(y, x) != computed.pc.get(y, x) {
                    return Err(Violation::new(
                        "pseudocomplement",
                        &[x, y],
                        pc.get(y, x),
                        computed.pc.get(y, x),
                        "given family is not the sectional pseudocomplementation",
                    )
                    .into());
                }
            }
        }
        Ok(computed)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn into_algebra(self) -> Algebra {
        self.alg
    }

    /// `y^base`; `None` unless `base <= y`.
    pub fn complement(&self, base: Elem, y: Elem) -> Option<Elem> {
        self.pc.get(y, base)
    }

    pub fn family(&self) -> &BinTable {
        &self.pc
    }
}

fn strip_to_sectioned(alg: Algebra) -> Result<Algebra> {
    use crate::algebra::Op;
    let alg = alg
        .without(Op::Imp)
        .without(Op::Prod)
        .without(Op::R)
        .without(Op::Q)
        .with_class(ClassTag::Sectioned);
    if alg.meet_table().is_some() {
        Ok(alg)
    } else {
        alg.with_computed_meet()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SublatticeKind {
    /// `(bottom, low, high, side, top)`
    Pentagon,
    /// `(bottom, atom, atom, atom, top)`
    Diamond,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeReport {
    pub distributive: bool,
    pub modular: bool,
    pub witness: Option<(SublatticeKind, [Elem; 5])>,
}

/// Distributivity and modularity of the lattice `[base, 1]`, with an N5
/// witness when it is not modular and an M3 witness when it is modular but
/// not distributive.
pub fn section_shape_report(alg: &Algebra, base: Elem) -> Result<ShapeReport> {
    let sec = alg.section(base);
    let meet = |x: Elem, y: Elem| -> Result<Elem> {
        alg.partial_meet(x, y)?
            .ok_or_else(|| Error::Precondition("section pair without meet".into()))
    };
    // Precondition: the section is a lattice.
    for &x in &sec {
        for &y in &sec {
            meet(x, y).map_err(|_| {
                Error::Precondition(format!("section of {} is not a lattice", alg.label(base)))
            })?;
        }
    }
    let lt = |x: Elem, y: Elem| x != y && alg.leq(x, y);
    let incomparable = |x: Elem, y: Elem| !alg.leq(x, y) && !alg.leq(y, x);

    for &o in &sec {
        for &x in &sec {
            if !lt(o, x) {
                continue;
            }
            for &y in &sec {
                if !lt(x, y) {
                    continue;
                }
                for &z in &sec {
                    if !lt(o, z) || !incomparable(x, z) || !incomparable(y, z) {
                        continue;
                    }
                    for &i in &sec {
                        if lt(y, i)
                            && lt(z, i)
                            && alg.join(x, z) == i
                            && alg.join(y, z) == i
                            && meet(x, z)? == o
                            && meet(y, z)? == o
                        {
                            return Ok(ShapeReport {
                                distributive: false,
                                modular: false,
                                witness: Some((SublatticeKind::Pentagon, [o, x, y, z, i])),
                            });
                        }
                    }
                }
            }
        }
    }
    for &o in &sec {
        for &x in &sec {
            for &y in &sec {
                for &z in &sec {
                    if !(x < y && y < z) || !lt(o, x) || !lt(o, y) || !lt(o, z) {
                        continue;
                    }
                    if !incomparable(x, y) || !incomparable(x, z) || !incomparable(y, z) {
                        continue;
                    }
                    let i = alg.join(x, y);
                    if alg.join(x, z) == i
                        && alg.join(y, z) == i
                        && meet(x, y)? == o
                        && meet(x, z)? == o
                        && meet(y, z)? == o
                    {
                        return Ok(ShapeReport {
                            distributive: false,
                            modular: true,
                            witness: Some((SublatticeKind::Diamond, [o, x, y, z, i])),
                        });
                    }
                }
            }
        }
    }
    Ok(ShapeReport {
        distributive: true,
        modular: true,
        witness: None,
    })
}
