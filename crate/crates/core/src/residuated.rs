//! Sectionally and relatively residuated join-semilattices.
//!
//! A relatively residuated join-semilattice (RRS) carries a partial product
//! `⊙`, defined exactly on pairs with a common lower bound and lying above
//! every such bound, and a total `->`, subject to (11)-(16). The sectional
//! form (SRS) instead carries one commutative monoid per section, glued by a
//! compatibility condition. The two are translated into each other by
//! restriction and by reading a product off any common lower bound.

use crate::algebra::{Algebra, ClassTag, Op};
use crate::error::{Error, Result};
use crate::implication::NcisAlgebra;
use crate::report::{expect_eq, expect_leq, Report, Violation};
use crate::table::BinTable;
use crate::Elem;

/// An algebra that passed [`validate_rrs`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RrsAlgebra(Algebra);

impl RrsAlgebra {
    pub fn new(alg: Algebra) -> Result<Self> {
        validate_rrs(&alg).into_result()?;
        Ok(RrsAlgebra(
            alg.without(Op::R).without(Op::Q).with_class(ClassTag::Rrs),
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
    pub fn prod(&self, x: Elem, y: Elem) -> Option<Elem> {
        self.0.prod.as_ref().expect("validated").get(x, y)
    }
}

struct Ops<'a> {
    alg: &'a Algebra,
    imp: &'a BinTable,
    prod: &'a BinTable,
}

impl<'a> Ops<'a> {
    fn of(alg: &'a Algebra) -> Result<Self, Violation> {
        let imp = alg
            .imp_table()
            .ok_or_else(|| Violation::structural("signature", &[], "missing imp table"))?;
        let prod = alg
            .prod_table()
            .ok_or_else(|| Violation::structural("signature", &[], "missing prod table"))?;
        Ok(Ops { alg, imp, prod })
    }

    fn n(&self) -> usize {
        self.alg.size()
    }

    fn j(&self, x: Elem, y: Elem) -> Elem {
        self.alg.join(x, y)
    }

    fn i(&self, x: Elem, y: Elem) -> Elem {
        self.imp.at(x, y)
    }

    /// Product on a pair the domain law guarantees to be bounded.
    fn p(&self, law: &str, w: &[Elem], x: Elem, y: Elem) -> Result<Elem, Violation> {
        self.prod
            .get(x, y)
            .ok_or_else(|| Violation::structural(law, w, "product undefined on a bounded pair"))
    }

    fn leq(&self, x: Elem, y: Elem) -> bool {
        self.alg.leq(x, y)
    }

    fn bounded3(&self, x: Elem, y: Elem, z: Elem) -> bool {
        self.alg
            .elements()
            .any(|w| self.leq(w, x) && self.leq(w, y) && self.leq(w, z))
    }
}

/// Domain and lower-bound laws, then (11)-(14) and (16).
fn check_rrs_base(o: &Ops) -> Result<(), Violation> {
    let n = o.n();
    let top = o.alg.top();
    for x in 0..n {
        for y in 0..n {
            let bounded = o.alg.is_bounded_pair(x, y);
            if bounded != o.prod.get(x, y).is_some() {
                return Err(Violation::new(
                    "domain",
                    &[x, y],
                    o.prod.get(x, y),
                    bounded,
                    "product must be defined exactly on bounded pairs",
                ));
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if let Some(p) = o.prod.get(x, y) {
                for z in o.alg.common_lower_bounds(x, y) {
                    expect_leq("lower-bound", &[x, y, z], o.leq(z, p), z, p)?;
                }
            }
        }
    }
    for x in 0..n {
        expect_eq("(11)", &[x], o.prod.get(x, top), x)?;
        expect_eq("(11)", &[x], o.prod.get(top, x), x)?;
    }
    for x in 0..n {
        for y in 0..n {
            expect_eq("(12)", &[x, y], o.prod.get(x, y), o.prod.get(y, x))?;
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !o.bounded3(x, y, z) {
                    continue;
                }
                let w = [x, y, z];
                let xy = o.p("(13)", &w, x, y)?;
                let yz = o.p("(13)", &w, y, z)?;
                let l = o.p("(13)", &w, xy, z)?;
                let r = o.p("(13)", &w, x, yz)?;
                expect_eq("(13)", &w, l, r)?;
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if !o.leq(x, y) {
                continue;
            }
            for z in 0..n {
                if !o.alg.is_bounded_pair(x, z) {
                    continue;
                }
                let w = [x, y, z];
                let l = o.p("(14)", &w, x, z)?;
                let r = o.p("(14)", &w, y, z)?;
                expect_leq("(14)", &w, o.leq(l, r), l, r)?;
            }
        }
    }
    check_16(o, "(16)")
}

fn check_16(o: &Ops, law: &str) -> Result<(), Violation> {
    for x in 0..o.n() {
        for y in 0..o.n() {
            expect_eq(law, &[x, y], o.i(o.j(x, y), y), o.i(x, y))?;
        }
    }
    Ok(())
}

/// Relative adjointness (15), reported per direction.
fn check_adjointness(o: &Ops) -> Result<(), Violation> {
    let n = o.n();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let w = [x, y, z];
                let (xz, yz) = (o.j(x, z), o.j(y, z));
                let p = o.p("(15)", &w, xz, yz)?;
                let left = o.leq(p, z);
                let right = o.leq(xz, o.i(y, z));
                if left && !right {
                    return Err(Violation::new(
                        "(15)->",
                        &w,
                        left,
                        right,
                        "(x v z)⊙(y v z) <= z but x v z is not below y -> z",
                    ));
                }
                if right && !left {
                    return Err(Violation::new(
                        "(15)<-",
                        &w,
                        left,
                        right,
                        "x v z <= y -> z but (x v z)⊙(y v z) is not below z",
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Full axiom check for a relatively residuated join-semilattice.
pub fn validate_rrs(alg: &Algebra) -> Report {
    let run = || -> Result<(), Violation> {
        let o = Ops::of(alg)?;
        check_rrs_base(&o)?;
        check_adjointness(&o)
    };
    run().into()
}

fn check_identities_17_19(o: &Ops) -> Result<(), Violation> {
    let n = o.n();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let w = [x, y, z];
                let xz = o.j(x, z);
                let p = o.p("(17)", &w, xz, o.j(y, z))?;
                let r = o.i(y, o.j(p, z));
                expect_leq("(17)", &w, o.leq(xz, r), xz, r)?;
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let r = o.i(y, x);
            expect_leq("(18)", &[x, y], o.leq(x, r), x, r)?;
        }
    }
    for x in 0..n {
        for y in 0..n {
            let w = [x, y];
            let l = o.p("(19)", &w, o.j(x, y), o.i(x, y))?;
            expect_leq("(19)", &w, o.leq(l, y), l, y)?;
        }
    }
    Ok(())
}

/// The identity-based characterization: under the domain and lower-bound
/// laws, (10)-(14) and (16), adjointness holds iff (17)-(19) hold. Returns
/// the (17)-(19) verdict, or a failure labelled `equivalence` when that
/// verdict and the adjointness verdict disagree.
pub fn validate_rrs_identities(alg: &Algebra) -> Report {
    let run = || -> Result<(), Violation> {
        let o = Ops::of(alg)?;
        check_rrs_base(&o)?;
        let identities = check_identities_17_19(&o);
        let adjoint = check_adjointness(&o);
        match (&identities, &adjoint) {
            (Ok(()), Err(v)) => Err(Violation::new(
                "equivalence",
                &v.witness,
                true,
                false,
                format!("(17)-(19) hold but adjointness fails at {}", v.law),
            )),
            (Err(v), Ok(())) => Err(Violation::new(
                "equivalence",
                &v.witness,
                false,
                true,
                format!("adjointness holds but {} fails", v.law),
            )),
            _ => identities,
        }
    };
    run().into()
}

/// `(x v y) ⊙ (x -> y) = y` for all `x, y`.
pub fn check_divisible(rrs: &RrsAlgebra) -> Report {
    let alg = rrs.algebra();
    let run = || -> Result<(), Violation> {
        for x in alg.elements() {
            for y in alg.elements() {
                let l = rrs.prod(alg.join(x, y), rrs.imp(x, y));
                expect_eq("divisibility", &[x, y], l, y)?;
            }
        }
        Ok(())
    };
    run().into()
}

/// Properties (i)-(viii) that every relatively residuated join-semilattice
/// satisfies.
pub fn check_rrs_properties(rrs: &RrsAlgebra) -> Report {
    let alg = rrs.algebra();
    let n = alg.size();
    let top = alg.top();
    let i = |x, y| rrs.imp(x, y);
    let leq = |x, y| alg.leq(x, y);
    let run = || -> Result<(), Violation> {
        for x in 0..n {
            for y in 0..n {
                expect_eq("(i)", &[x, y], leq(x, y), i(x, y) == top)?;
            }
        }
        for x in 0..n {
            for y in 0..n {
                if let Some(p) = rrs.prod(x, y) {
                    expect_leq("(ii)", &[x, y], leq(p, x), p, x)?;
                    if let Ok(Some(m)) = alg.partial_meet(x, y) {
                        expect_leq("(iii)", &[x, y], leq(p, m), p, m)?;
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                expect_leq("(iv)", &[x, y], leq(x, i(y, x)), x, i(y, x))?;
            }
        }
        for x in 0..n {
            for y in 0..n {
                let w = [x, y];
                let mid = rrs.prod(alg.join(x, y), i(x, y)).ok_or_else(|| {
                    Violation::structural("(v)", &w, "product undefined on a bounded pair")
                })?;
                if let Some(low) = rrs.prod(x, i(x, y)) {
                    expect_leq("(v)", &w, leq(low, mid), low, mid)?;
                }
                expect_leq("(v)", &w, leq(mid, y), mid, y)?;
            }
        }
        for x in 0..n {
            for y in 0..n {
                let r = i(i(x, y), y);
                expect_leq("(vi)", &[x, y], leq(x, r), x, r)?;
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !leq(x, y) {
                    continue;
                }
                for z in 0..n {
                    let (l, r) = (i(y, z), i(x, z));
                    expect_leq("(vii)", &[x, y, z], leq(l, r), l, r)?;
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                expect_eq("(viii)", &[x, y], i(i(i(x, y), y), y), i(x, y))?;
            }
        }
        Ok(())
    };
    run().into()
}

/// The `->` forced by adjointness for a given product: `y -> z` is the
/// greatest `u >= z` with `u ⊙ (y v z) <= z`. `None` if some such set has
/// no greatest element or a needed product is undefined.
pub fn residual_implication(alg: &Algebra) -> Option<BinTable> {
    let prod = alg.prod_table()?;
    let n = alg.size();
    let mut imp = BinTable::undefined(n);
    for y in 0..n {
        for z in 0..n {
            let yz = alg.join(y, z);
            let mut ok = Vec::new();
            for u in alg.section(z) {
                if alg.leq(prod.get(u, yz)?, z) {
                    ok.push(u);
                }
            }
            let g = ok
                .iter()
                .copied()
                .find(|&g| ok.iter().all(|&u| alg.leq(u, g)))?;
            imp.set(y, z, Some(g));
        }
    }
    Some(imp)
}

/// A join-semilattice with one monoid table per section. `monoid(b)` is
/// defined on pairs from `[b, 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrsAlgebra {
    alg: Algebra,
    monoids: Vec<BinTable>,
}

impl SrsAlgebra {
    /// Wraps an explicit family without validating it.
    pub fn from_family(alg: Algebra, monoids: Vec<BinTable>) -> Result<Self> {
        if monoids.len() != alg.size() || monoids.iter().any(|m| m.size() != alg.size()) {
            return Err(Error::Structure(
                "one n x n monoid table per element expected".into(),
            ));
        }
        if alg.imp_table().is_none() {
            return Err(Error::Structure("missing imp table".into()));
        }
        let alg = alg
            .without(Op::Prod)
            .without(Op::Meet)
            .without(Op::R)
            .without(Op::Q)
            .with_class(ClassTag::Srs);
        Ok(SrsAlgebra { alg, monoids })
    }

    /// The family obtained by restricting the product table of `alg` to
    /// each section. No axioms are checked.
    pub fn from_restriction(alg: &Algebra) -> Result<Self> {
        let prod = alg
            .prod_table()
            .ok_or_else(|| Error::Structure("missing prod table".into()))?;
        let n = alg.size();
        let monoids = (0..n)
            .map(|b| {
                BinTable::from_fn(n, |x, y| {
                    if alg.leq(b, x) && alg.leq(b, y) {
                        prod.get(x, y)
                    } else {
                        None
                    }
                })
            })
            .collect();
        Self::from_family(alg.clone(), monoids)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn monoid(&self, base: Elem) -> &BinTable {
        &self.monoids[base]
    }
}

/// Monoid laws on every section, then compatibility (i), monotonicity (ii),
/// sectional adjointness (iii) and (iv).
pub fn validate_srs(srs: &SrsAlgebra) -> Report {
    let alg = &srs.alg;
    let n = alg.size();
    let top = alg.top();
    let imp = alg.imp_table().expect("SrsAlgebra carries imp");
    let leq = |x, y| alg.leq(x, y);
    let run = || -> Result<(), Violation> {
        for b in 0..n {
            let m = &srs.monoids[b];
            let sec = alg.section(b);
            for &x in &sec {
                for &y in &sec {
                    match m.get(x, y) {
                        Some(v) if leq(b, v) => {}
                        v => {
                            return Err(Violation::new(
                                "monoid-closure",
                                &[b, x, y],
                                v,
                                b,
                                "section product missing or outside the section",
                            ))
                        }
                    }
                }
            }
            let at = |x, y| m.at(x, y);
            for &x in &sec {
                expect_eq("monoid-unit", &[b, x], at(x, top), x)?;
                expect_eq("monoid-unit", &[b, x], at(top, x), x)?;
            }
            for &x in &sec {
                for &y in &sec {
                    expect_eq("monoid-commutativity", &[b, x, y], at(x, y), at(y, x))?;
                }
            }
            for &x in &sec {
                for &y in &sec {
                    for &z in &sec {
                        expect_eq(
                            "monoid-associativity",
                            &[b, x, y, z],
                            at(at(x, y), z),
                            at(x, at(y, z)),
                        )?;
                    }
                }
            }
        }
        for z in 0..n {
            for u in alg.section(z) {
                for x in alg.section(u) {
                    for y in alg.section(u) {
                        let w = [x, y, z, u];
                        expect_eq("(i)", &w, srs.monoids[z].at(x, y), srs.monoids[u].at(x, y))?;
                    }
                }
            }
        }
        for u in 0..n {
            let m = &srs.monoids[u];
            for x in alg.section(u) {
                for y in alg.section(x) {
                    for z in alg.section(u) {
                        let (l, r) = (m.at(x, z), m.at(y, z));
                        expect_leq("(ii)", &[x, y, z, u], leq(l, r), l, r)?;
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (xz, yz) = (alg.join(x, z), alg.join(y, z));
                    let left = leq(srs.monoids[z].at(xz, yz), z);
                    let right = leq(xz, imp.at(y, z));
                    if left != right {
                        let law = if left { "(iii)->" } else { "(iii)<-" };
                        return Err(Violation::new(
                            law,
                            &[x, y, z],
                            left,
                            right,
                            "sectional adjointness",
                        ));
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                expect_eq("(iv)", &[x, y], imp.at(alg.join(x, y), y), imp.at(x, y))?;
            }
        }
        Ok(())
    };
    run().into()
}

/// Restriction of the product to each section.
pub fn srs_from_rrs(rrs: &RrsAlgebra) -> Result<SrsAlgebra> {
    let srs = SrsAlgebra::from_restriction(rrs.algebra())?;
    validate_srs(&srs).into_result()?;
    Ok(srs)
}

/// `x ⊙ y := x ⊙_z y` for any common lower bound `z`. Fails with
/// [`Error::IncompatibleFamily`] when two lower bounds disagree.
pub fn rrs_from_srs(srs: &SrsAlgebra) -> Result<RrsAlgebra> {
    let alg = srs.algebra();
    let n = alg.size();
    let mut prod = BinTable::undefined(n);
    for x in 0..n {
        for y in 0..n {
            let mut value: Option<(Elem, Elem)> = None;
            for z in alg.common_lower_bounds(x, y) {
                let v = srs.monoid(z).get(x, y).ok_or_else(|| {
                    Error::Structure(format!(
                        "monoid of {} undefined at ({},{})",
                        alg.label(z),
                        alg.label(x),
                        alg.label(y)
                    ))
                })?;
                match value {
                    None => value = Some((z, v)),
                    Some((z0, v0)) if v0 != v => {
                        return Err(Error::IncompatibleFamily {
                            witness: vec![x, y, z0, z],
                        })
                    }
                    Some(_) => {}
                }
            }
            prod.set(x, y, value.map(|(_, v)| v));
        }
    }
    RrsAlgebra::new(alg.clone().with_prod(prod)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BridgeDirection {
    ToRrs,
    ToNcis,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeOutcome {
    pub algebra: Algebra,
    /// Whether every pair with a common lower bound has an infimum in the
    /// order (the alternative to idempotence in the bridge).
    pub meet_on_bounded_pairs: bool,
}

/// Translates between implication semilattices and divisible, idempotent
/// RRS satisfying `y <= (x v z) -> ((x v z) ⊙ (y v z))`, via `⊙ = ∧`.
pub fn ncis_rrs_bridge(alg: &Algebra, direction: BridgeDirection) -> Result<BridgeOutcome> {
    let meet_on_bounded_pairs = alg
        .elements()
        .all(|x| alg.elements().all(|y| alg.partial_meet(x, y).is_ok()));
    match direction {
        BridgeDirection::ToRrs => {
            let ncis = NcisAlgebra::new(alg.clone())?;
            let meet = ncis.algebra().meet_table().expect("validated").clone();
            let out = ncis.into_algebra().without(Op::Meet).with_prod(meet)?;
            let rrs = RrsAlgebra::new(out)?;
            check_divisible(&rrs).into_result()?;
            check_bridge_identities(rrs.algebra())?;
            Ok(BridgeOutcome {
                algebra: rrs.into_algebra(),
                meet_on_bounded_pairs,
            })
        }
        BridgeDirection::ToNcis => {
            check_bridge_identities(alg)?;
            let rrs = RrsAlgebra::new(alg.clone())?;
            check_divisible(&rrs).into_result()?;
            for x in alg.elements() {
                for y in alg.elements() {
                    let inf = alg.partial_meet(x, y).ok().flatten();
                    if rrs.prod(x, y) != inf {
                        return Err(Violation::new(
                            "meet-coincidence",
                            &[x, y],
                            rrs.prod(x, y),
                            inf,
                            "product differs from the infimum",
                        )
                        .into());
                    }
                }
            }
            let prod = rrs.algebra().prod_table().expect("validated").clone();
            let out = rrs.into_algebra().without(Op::Prod).with_meet(prod)?;
            Ok(BridgeOutcome {
                algebra: NcisAlgebra::new(out)?.into_algebra(),
                meet_on_bounded_pairs,
            })
        }
    }
}

/// Idempotence `(i)` and `(ii)`: `y <= (x v z) -> ((x v z) ⊙ (y v z))`.
fn check_bridge_identities(alg: &Algebra) -> Result<(), Violation> {
    let o = Ops::of(alg)?;
    for x in 0..o.n() {
        expect_eq("(i)", &[x], o.prod.get(x, x), x)?;
    }
    for x in 0..o.n() {
        for y in 0..o.n() {
            for z in 0..o.n() {
                let w = [x, y, z];
                let xz = o.j(x, z);
                let p = o.p("(ii)", &w, xz, o.j(y, z))?;
                let r = o.i(xz, p);
                expect_leq("(ii)", &w, o.leq(y, r), y, r)?;
            }
        }
    }
    Ok(())
}
