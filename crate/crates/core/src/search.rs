//! Exhaustive enumeration of small models up to isomorphism, counting, and
//! counterexample search.
//!
//! Join-semilattices are grown one element at a time: every semilattice
//! with `n + 1` elements arises from one with `n` elements by adding a new
//! minimal element below a non-empty up-set `U` such that each `U ∩ [x, 1]`
//! has a least element (that element is the new join with `x`). Each child
//! is put in canonical form and duplicates are merged. The other classes
//! extend each semilattice by the operations their axioms allow.

use std::cmp::Reverse;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::algebra::{Algebra, ClassTag, Op};
use crate::congruence::maltsev_report;
use crate::error::{Error, Result};
use crate::implication::{check_ncis_properties, derive_implication, NcisAlgebra};
use crate::par::Exec;
use crate::residuated::{
    check_divisible, check_rrs_properties, residual_implication, srs_from_rrs, RrsAlgebra,
};
use crate::sectioned::{section_shape_report, validate_sectioned, SectionedAlgebra};
use crate::table::BinTable;
use crate::varieties::{
    ialgebra_from_ncis, ralgebra_from_rrs, rrs_from_ralgebra, validate_ralgebra, RAlgebra,
};
use crate::Elem;

/// Largest universe searched without an explicit override.
pub const MAX_SIZE: usize = 8;

/// Properties that `find_counterexample` can look for violations of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    SectionModular,
    SectionDistributive,
    Divisible,
    ConDistributive,
    Con3Permutable,
    WeaklyRegular,
    NcisProperties,
    RrsProperties,
    Subvariety,
}

impl Property {
    pub const ALL: [Property; 9] = [
        Property::SectionModular,
        Property::SectionDistributive,
        Property::Divisible,
        Property::ConDistributive,
        Property::Con3Permutable,
        Property::WeaklyRegular,
        Property::NcisProperties,
        Property::RrsProperties,
        Property::Subvariety,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::SectionModular => "section-modular",
            Property::SectionDistributive => "section-distributive",
            Property::Divisible => "divisible",
            Property::ConDistributive => "con-distributive",
            Property::Con3Permutable => "con-3-permutable",
            Property::WeaklyRegular => "weakly-regular",
            Property::NcisProperties => "ncis-properties",
            Property::RrsProperties => "rrs-properties",
            Property::Subvariety => "subvariety",
        }
    }

    pub fn applies_to(self, class: ClassTag) -> bool {
        use ClassTag::*;
        match self {
            Property::SectionModular | Property::SectionDistributive => true,
            Property::Divisible => matches!(class, Rrs | Srs | Ralg),
            Property::ConDistributive | Property::Con3Permutable | Property::WeaklyRegular => {
                matches!(class, Ialg | Ralg)
            }
            Property::NcisProperties => class == Ncis,
            Property::RrsProperties => class == Rrs,
            Property::Subvariety => class == Ralg,
        }
    }

    /// Evaluates the property on a model of a class it applies to.
    pub fn holds(self, alg: &Algebra) -> Result<bool> {
        Ok(match self {
            Property::SectionModular => all_sections(alg, |s| s.modular)?,
            Property::SectionDistributive => all_sections(alg, |s| s.distributive)?,
            Property::Divisible => {
                let rrs = match alg.q_table() {
                    Some(_) => rrs_from_ralgebra(&RAlgebra::new(alg.clone())?)?,
                    None => RrsAlgebra::new(alg.clone())?,
                };
                check_divisible(&rrs).is_pass()
            }
            Property::ConDistributive => maltsev_report(alg)?.con_distributive,
            Property::Con3Permutable => maltsev_report(alg)?.three_permutable,
            Property::WeaklyRegular => maltsev_report(alg)?.weakly_regular,
            Property::NcisProperties => {
                check_ncis_properties(&NcisAlgebra::new(alg.clone())?).is_pass()
            }
            Property::RrsProperties => {
                check_rrs_properties(&RrsAlgebra::new(alg.clone())?).is_pass()
            }
            Property::Subvariety => validate_ralgebra(alg, true).is_pass(),
        })
    }
}

fn all_sections(alg: &Algebra, f: impl Fn(&crate::sectioned::ShapeReport) -> bool) -> Result<bool> {
    for b in alg.elements() {
        if !f(&section_shape_report(alg, b)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownProperty(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub class: ClassTag,
    pub size: usize,
    /// Search all sizes `1..=size` instead of `size` alone.
    pub upto: bool,
    pub violate: Option<Property>,
    pub limit: Option<usize>,
    /// Enumerate `->` from its axioms instead of deriving it.
    pub free_imp: bool,
    pub max_size: usize,
    pub exec: Exec,
}

impl SearchSpec {
    pub fn new(class: ClassTag, size: usize) -> Self {
        SearchSpec {
            class,
            size,
            upto: false,
            violate: None,
            limit: None,
            free_imp: false,
            max_size: MAX_SIZE,
            exec: Exec::default(),
        }
    }

    pub fn upto(mut self, upto: bool) -> Self {
        self.upto = upto;
        self
    }

    pub fn violate(mut self, p: Property) -> Self {
        self.violate = Some(p);
        self
    }

    pub fn limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    pub fn free_imp(mut self, free: bool) -> Self {
        self.free_imp = free;
        self
    }

    pub fn max_size(mut self, cap: usize) -> Self {
        self.max_size = cap;
        self
    }

    pub fn exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    fn check(&self) -> Result<()> {
        if self.size == 0 {
            return Err(Error::Precondition("size must be positive".into()));
        }
        if self.size > self.max_size {
            return Err(Error::SizeCap {
                size: self.size,
                cap: self.max_size,
            });
        }
        if self.size > 26 {
            return Err(Error::Precondition(
                "at most 26 elements are supported".into(),
            ));
        }
        if self.free_imp && matches!(self.class, ClassTag::Jsl | ClassTag::Sectioned) {
            return Err(Error::Precondition(format!(
                "free implication search does not apply to class {}",
                self.class
            )));
        }
        if let Some(p) = self.violate {
            if !p.applies_to(self.class) {
                return Err(Error::PropertyNotApplicable {
                    property: p.name().into(),
                    class: self.class.as_str().into(),
                });
            }
        }
        Ok(())
    }

    fn sizes(&self) -> std::ops::RangeInclusive<usize> {
        if self.upto {
            1..=self.size
        } else {
            self.size..=self.size
        }
    }
}

/// Bitmask of the elements above each element.
type UpSets = Vec<u32>;

fn up_sets(join: &[u8], n: usize) -> UpSets {
    (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| join[x * n + y] as usize == y)
                .fold(0, |m, y| m | 1 << y)
        })
        .collect()
}

fn join_from_up_sets(up: &[u32]) -> Vec<u8> {
    let n = up.len();
    let mut t = vec![0u8; n * n];
    for x in 0..n {
        for y in 0..n {
            let common = up[x] & up[y];
            let j = (0..n)
                .find(|&e| up[e] == common)
                .expect("up-sets form a semilattice");
            t[x * n + y] = j as u8;
        }
    }
    t
}

/// Orderings of the universe that sort elements by an isomorphism-invariant
/// key (the top always last), as arrays `position -> element`.
fn invariant_orderings(up: &[u32]) -> Vec<Vec<Elem>> {
    let n = up.len();
    let down = |x: usize| (0..n).filter(|&y| up[y] >> x & 1 == 1).count();
    let covers = |x: usize, above: bool| {
        (0..n)
            .filter(|&y| {
                let (lo, hi) = if above { (x, y) } else { (y, x) };
                lo != hi
                    && up[lo] >> hi & 1 == 1
                    && !(0..n)
                        .any(|m| m != lo && m != hi && up[lo] >> m & 1 == 1 && up[m] >> hi & 1 == 1)
            })
            .count()
    };
    let key = |x: usize| {
        (
            Reverse(up[x].count_ones()),
            down(x),
            covers(x, true),
            covers(x, false),
        )
    };
    let mut elems: Vec<Elem> = (0..n).collect();
    elems.sort_by_key(|&x| key(x));
    let blocks: Vec<Vec<Elem>> = elems
        .into_iter()
        .chunk_by(|&x| key(x))
        .into_iter()
        .map(|(_, g)| g.collect())
        .collect();
    blocks
        .iter()
        .map(|b| b.iter().copied().permutations(b.len()).collect::<Vec<_>>())
        .multi_cartesian_product()
        .map(|parts| parts.concat())
        .collect()
}

fn inverse(order: &[Elem]) -> Vec<Elem> {
    let mut perm = vec![0; order.len()];
    for (pos, &e) in order.iter().enumerate() {
        perm[e] = pos;
    }
    perm
}

fn relabel(join: &[u8], n: usize, order: &[Elem], perm: &[Elem]) -> Vec<u8> {
    let mut t = Vec::with_capacity(n * n);
    for &x in order {
        for &y in order {
            t.push(perm[join[x * n + y] as usize] as u8);
        }
    }
    t
}

/// Lexicographically least flattened join table over the relabellings that
/// respect the invariant ordering. Isomorphic semilattices, and only those,
/// get the same form.
fn canonical_table(join: &[u8], n: usize) -> Vec<u8> {
    let up = up_sets(join, n);
    invariant_orderings(&up)
        .into_iter()
        .map(|order| {
            let perm = inverse(&order);
            relabel(join, n, &order, &perm)
        })
        .min()
        .expect("at least one ordering")
}

/// Canonical form of the join-semilattice reduct of `alg`.
pub fn canonical_form(alg: &Algebra) -> Vec<u8> {
    let n = alg.size();
    let join: Vec<u8> = alg
        .join_table()
        .cells()
        .iter()
        .map(|c| c.unwrap() as u8)
        .collect();
    canonical_table(&join, n)
}

/// Join-preserving permutations of `alg` (old index -> new index).
pub fn automorphisms(alg: &Algebra) -> Vec<Vec<Elem>> {
    let n = alg.size();
    let join: Vec<u8> = alg
        .join_table()
        .cells()
        .iter()
        .map(|c| c.unwrap() as u8)
        .collect();
    let orderings = invariant_orderings(&up_sets(&join, n));
    let base = &orderings[0];
    orderings
        .iter()
        .map(|o| {
            let mut sigma = vec![0; n];
            for (i, &e) in base.iter().enumerate() {
                sigma[e] = o[i];
            }
            sigma
        })
        .filter(|sigma| &alg.join_table().permuted(sigma) == alg.join_table())
        .collect()
}

fn children(parent: &[u8]) -> Vec<Vec<u8>> {
    let n = (parent.len() as f64).sqrt() as usize;
    let up = up_sets(parent, n);
    let top = n - 1;
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        if mask >> top & 1 == 0 {
            continue;
        }
        let closed = (0..n).all(|x| mask >> x & 1 == 0 || up[x] & !mask == 0);
        if !closed {
            continue;
        }
        let has_min = |s: u32| (0..n).any(|e| s >> e & 1 == 1 && up[e] & s == s);
        if !(0..n).all(|x| has_min(mask & up[x])) {
            continue;
        }
        let mut child_up = up.clone();
        child_up.push(mask | 1 << n);
        let join = join_from_up_sets(&child_up);
        out.push(canonical_table(&join, n + 1));
    }
    out
}

fn labels(n: usize) -> Vec<String> {
    let mut l: Vec<String> = (0..n - 1)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect();
    l.push("1".into());
    l
}

fn algebra_from_canonical(t: &[u8], n: usize) -> Algebra {
    let table = BinTable::total_from_fn(n, |x, y| t[x * n + y] as Elem);
    Algebra::from_join(labels(n), table).expect("enumerated tables are semilattices")
}

/// All join-semilattices with top on `n` elements, one per isomorphism
/// class, in canonical order. Elements are labelled `a b c ...` with the
/// top `1` last.
pub fn enumerate_join_semilattices(n: usize, exec: Exec) -> Vec<Algebra> {
    assert!((1..=26).contains(&n));
    let mut level: Vec<Vec<u8>> = vec![vec![0]];
    for _ in 1..n {
        let batches = exec.map(&level, |p| children(p));
        let merged: BTreeSet<Vec<u8>> = batches.into_iter().flatten().collect();
        level = merged.into_iter().collect();
    }
    level.iter().map(|t| algebra_from_canonical(t, n)).collect()
}

/// `->` tables of `alg` whose normalized cells `(u, y)`, `u >= y`, each
/// pass `cell_ok`; the other cells follow from `x -> y = (x v y) -> y`.
fn free_imp_tables(alg: &Algebra, cell_ok: impl Fn(Elem, Elem, Elem) -> bool) -> Vec<BinTable> {
    let n = alg.size();
    let cells: Vec<(Elem, Elem)> = (0..n)
        .flat_map(|u| (0..n).map(move |y| (u, y)))
        .filter(|&(u, y)| alg.leq(y, u))
        .collect();
    let cands: Vec<Vec<Elem>> = cells
        .iter()
        .map(|&(u, y)| (0..n).filter(|&v| cell_ok(u, y, v)).collect())
        .collect();
    if cands.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    cands
        .into_iter()
        .multi_cartesian_product()
        .map(|choice| {
            let mut base = vec![0; n * n];
            for (&(u, y), &v) in cells.iter().zip(&choice) {
                base[u * n + y] = v;
            }
            BinTable::total_from_fn(n, |x, y| base[alg.join(x, y) * n + y])
        })
        .collect()
}

/// Per-cell form of (1), (2) and (4) for an implication semilattice.
fn ncis_free_imps(alg: &Algebra) -> Vec<BinTable> {
    let n = alg.size();
    let meet = alg.meet_table().expect("meet attached");
    // required[u][m]: every y with (x v z) = u and u ∧ (y v z) = m must lie
    // below u -> m.
    let mut required = vec![Vec::new(); n * n];
    for x in 0..n {
        for z in 0..n {
            let u = alg.join(x, z);
            for y in 0..n {
                if let Some(m) = meet.get(u, alg.join(y, z)) {
                    required[u * n + m].push(y);
                }
            }
        }
    }
    free_imp_tables(alg, |u, y, v| {
        alg.leq(y, v)
            && meet.get(u, v) == Some(y)
            && required[u * n + y].iter().all(|&w| alg.leq(w, v))
    })
}

/// Per-cell form of adjointness (15): `u ⊙ w <= z` iff `u <= w -> z` for
/// all `u >= z`.
fn rrs_free_imps(alg: &Algebra) -> Vec<BinTable> {
    let prod = alg.prod_table().expect("prod attached");
    free_imp_tables(alg, |w, z, v| {
        alg.section(z)
            .into_iter()
            .all(|u| prod.get(u, w).is_some_and(|p| alg.leq(p, z)) == alg.leq(u, v))
    })
}

/// Partial products allowed by the domain, lower-bound, unit, commutativity
/// and monotonicity laws; associativity and the rest are left to the
/// validator.
fn rrs_products(alg: &Algebra) -> Vec<BinTable> {
    let n = alg.size();
    let top = alg.top();
    let mut prod = BinTable::undefined(n);
    for x in 0..n {
        prod.set(x, top, Some(x));
        prod.set(top, x, Some(x));
    }
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in x..n {
            if x != top && y != top && alg.is_bounded_pair(x, y) {
                let glb = alg
                    .partial_meet(x, y)
                    .ok()
                    .flatten()
                    .expect("finite semilattice");
                pairs.push((x, y, alg.section(glb)));
            }
        }
    }
    let monotone_ok = |p: &BinTable| {
        for a in 0..n {
            for b in alg.section(a) {
                for c in 0..n {
                    if let (Some(l), Some(r)) = (p.get(a, c), p.get(b, c)) {
                        if !alg.leq(l, r) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    };
    let mut out = Vec::new();
    fn go(
        i: usize,
        pairs: &[(Elem, Elem, Vec<Elem>)],
        prod: &mut BinTable,
        ok: &dyn Fn(&BinTable) -> bool,
        out: &mut Vec<BinTable>,
    ) {
        let Some((x, y, cands)) = pairs.get(i) else {
            out.push(prod.clone());
            return;
        };
        for &v in cands {
            prod.set(*x, *y, Some(v));
            prod.set(*y, *x, Some(v));
            if ok(prod) {
                go(i + 1, pairs, prod, ok, out);
            }
        }
        prod.set(*x, *y, None);
        prod.set(*y, *x, None);
    }
    go(0, &pairs, &mut prod, &monotone_ok, &mut out);
    out
}

fn ncis_models(jsl: &Algebra, free: bool) -> Result<Vec<Algebra>> {
    if !validate_sectioned(jsl).is_pass() {
        return Ok(Vec::new());
    }
    let s = SectionedAlgebra::from_algebra(jsl.clone())?;
    if !free {
        return Ok(vec![derive_implication(&s)?.into_algebra()]);
    }
    let base = s.into_algebra();
    let mut out = Vec::new();
    for imp in ncis_free_imps(&base) {
        if let Ok(m) = NcisAlgebra::new(base.clone().with_imp(imp)?) {
            out.push(m.into_algebra());
        }
    }
    Ok(dedupe_by_automorphisms(jsl, out))
}

fn rrs_models(jsl: &Algebra, free: bool) -> Result<Vec<Algebra>> {
    let mut out = Vec::new();
    for prod in rrs_products(jsl) {
        let base = jsl.clone().with_prod(prod)?;
        let imps = if free {
            rrs_free_imps(&base)
        } else {
            residual_implication(&base).into_iter().collect()
        };
        for imp in imps {
            if let Ok(m) = RrsAlgebra::new(base.clone().with_imp(imp)?) {
                out.push(m.into_algebra());
            }
        }
    }
    Ok(dedupe_by_automorphisms(jsl, out))
}

/// Keeps one model per orbit of the semilattice's automorphism group.
fn dedupe_by_automorphisms(jsl: &Algebra, models: Vec<Algebra>) -> Vec<Algebra> {
    if models.len() <= 1 {
        return models;
    }
    let auts = automorphisms(jsl);
    let key = |m: &Algebra| {
        auts.iter()
            .map(|p| {
                [Op::Meet, Op::Imp, Op::Prod]
                    .into_iter()
                    .filter_map(|op| m.binary(op).map(|t| t.permuted(p).cells().to_vec()))
                    .collect::<Vec<_>>()
            })
            .min()
            .unwrap()
    };
    let mut seen = BTreeSet::new();
    models.into_iter().filter(|m| seen.insert(key(m))).collect()
}

fn extend(class: ClassTag, jsl: &Algebra, free: bool) -> Result<Vec<Algebra>> {
    Ok(match class {
        ClassTag::Jsl => vec![jsl.clone()],
        ClassTag::Sectioned => {
            if validate_sectioned(jsl).is_pass() {
                vec![SectionedAlgebra::from_algebra(jsl.clone())?.into_algebra()]
            } else {
                Vec::new()
            }
        }
        ClassTag::Ncis => ncis_models(jsl, free)?,
        ClassTag::Ialg => ncis_models(jsl, free)?
            .into_iter()
            .map(|m| Ok(ialgebra_from_ncis(&NcisAlgebra::new(m)?)?.into_algebra()))
            .collect::<Result<_>>()?,
        ClassTag::Rrs => rrs_models(jsl, free)?,
        ClassTag::Srs => rrs_models(jsl, free)?
            .into_iter()
            .map(|m| {
                srs_from_rrs(&RrsAlgebra::new(m.clone())?)?;
                Ok(m.with_class(ClassTag::Srs))
            })
            .collect::<Result<_>>()?,
        ClassTag::Ralg => rrs_models(jsl, free)?
            .into_iter()
            .map(|m| Ok(ralgebra_from_rrs(&RrsAlgebra::new(m)?)?.into_algebra()))
            .collect::<Result<_>>()?,
    })
}

fn models_of_size(class: ClassTag, n: usize, free: bool, exec: Exec) -> Result<Vec<Algebra>> {
    let jsls = enumerate_join_semilattices(n, exec);
    let batches = exec.map(&jsls, |j| extend(class, j, free));
    let mut out = Vec::new();
    for batch in batches {
        out.extend(batch?);
    }
    Ok(out
        .into_iter()
        .enumerate()
        .map(|(i, m)| {
            m.with_class(class)
                .with_name(format!("{}_{}_{}", class.as_str(), n, i))
        })
        .collect())
}

/// One model per isomorphism class, by size and then canonical order of the
/// underlying semilattice. Each model is named `<class>_<size>_<index>`.
pub fn enumerate_models(spec: &SearchSpec) -> Result<Vec<Algebra>> {
    spec.check()?;
    let mut out = Vec::new();
    for n in spec.sizes() {
        out.extend(models_of_size(spec.class, n, spec.free_imp, spec.exec)?);
        if spec.limit.is_some_and(|l| out.len() >= l) {
            break;
        }
    }
    if let Some(l) = spec.limit {
        out.truncate(l);
    }
    Ok(out)
}

pub fn count_models(spec: &SearchSpec) -> Result<usize> {
    let mut spec = spec.clone();
    spec.limit = None;
    Ok(enumerate_models(&spec)?.len())
}

/// The first model, by size from 1 up to `spec.size` and then canonical
/// order, that violates `spec.violate`.
pub fn find_counterexample(spec: &SearchSpec) -> Result<Option<Algebra>> {
    spec.check()?;
    let property = spec
        .violate
        .ok_or_else(|| Error::Precondition("no property to violate".into()))?;
    for n in 1..=spec.size {
        let models = models_of_size(spec.class, n, spec.free_imp, spec.exec)?;
        let found = spec
            .exec
            .find_map_first(&models, |m| match property.holds(m) {
                Ok(true) => None,
                Ok(false) => Some(Ok(m.clone())),
                Err(e) => Some(Err(e)),
            });
        if let Some(r) = found {
            return r.map(Some);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn count(class: ClassTag, n: usize) -> usize {
        count_models(&SearchSpec::new(class, n)).unwrap()
    }

    #[test]
    fn small_semilattice_counts() {
        assert_eq!(count(ClassTag::Jsl, 1), 1);
        assert_eq!(count(ClassTag::Jsl, 2), 1);
        assert_eq!(count(ClassTag::Jsl, 3), 2);
        assert_eq!(count(ClassTag::Jsl, 4), 5);
    }

    #[test]
    fn canonical_form_ignores_labelling() {
        let a = fixtures::fig2_order();
        let perm = [3, 0, 5, 1, 2, 4];
        let labels: Vec<String> = "p q r s t u".split(' ').map(String::from).collect();
        let b = a.relabelled(&perm, labels).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&a), canonical_form(&fixtures::chain(6)));
    }

    #[test]
    fn fig1_shape_is_enumerated() {
        let models = enumerate_models(&SearchSpec::new(ClassTag::Sectioned, 5)).unwrap();
        let target = canonical_form(&fixtures::fig1_order());
        assert!(models.iter().any(|m| canonical_form(m) == target));
        assert!(models.iter().all(|m| validate_sectioned(m).is_pass()));
    }

    #[test]
    fn models_carry_names_and_class() {
        let models = enumerate_models(&SearchSpec::new(ClassTag::Ncis, 3)).unwrap();
        assert_eq!(models[0].name(), Some("ncis_3_0"));
        assert_eq!(models[1].class(), Some(ClassTag::Ncis));
        assert_eq!(models[0].label(2), "1");
    }

    #[test]
    fn free_implications_are_the_derived_ones() {
        for class in [ClassTag::Ncis, ClassTag::Rrs] {
            let spec = SearchSpec::new(class, 4);
            let derived = enumerate_models(&spec).unwrap();
            let free = enumerate_models(&spec.clone().free_imp(true)).unwrap();
            assert_eq!(derived, free);
        }
    }

    #[test]
    fn pentagon_is_the_first_non_modular_section() {
        let spec = SearchSpec::new(ClassTag::Sectioned, 6).violate(Property::SectionModular);
        let m = find_counterexample(&spec).unwrap().unwrap();
        assert_eq!(m.size(), 5);
        assert_eq!(canonical_form(&m), canonical_form(&fixtures::n5()));
    }

    #[test]
    fn spec_validation() {
        assert!(matches!(
            enumerate_models(&SearchSpec::new(ClassTag::Jsl, 9)),
            Err(Error::SizeCap { size: 9, cap: 8 })
        ));
        assert!(matches!(
            find_counterexample(&SearchSpec::new(ClassTag::Ncis, 3).violate(Property::Divisible)),
            Err(Error::PropertyNotApplicable { .. })
        ));
        assert!(matches!(
            "bogus".parse::<Property>(),
            Err(Error::UnknownProperty(_))
        ));
        assert_eq!(
            "con-3-permutable".parse::<Property>().unwrap(),
            Property::Con3Permutable
        );
        let limited = enumerate_models(&SearchSpec::new(ClassTag::Jsl, 4).upto(true).limit(3));
        assert_eq!(limited.unwrap().len(), 3);
    }

    #[test]
    fn automorphisms_of_small_shapes() {
        assert_eq!(automorphisms(&fixtures::fig1_order()).len(), 2);
        assert_eq!(automorphisms(&fixtures::m3()).len(), 6);
        assert_eq!(automorphisms(&fixtures::chain(4)).len(), 1);
    }
}
