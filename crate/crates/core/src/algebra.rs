//! The finite algebra value shared by every presentation.
//!
//! An [`Algebra`] always carries a total join table and the order derived
//! from it. The remaining operations are optional and are attached by the
//! presentation that needs them: partial meet and `->` for implication
//! semilattices, partial product for residuated ones, the ternary `r`/`q`
//! for the total varieties.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::table::{BinTable, TernTable};
use crate::Elem;

/// Labelled carrier set with a distinguished top.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Universe {
    labels: Vec<String>,
    top: Elem,
}

impl Universe {
    pub fn new(labels: Vec<String>, top: Elem) -> Result<Self> {
        check_labels(&labels)?;
        if top >= labels.len() {
            return Err(Error::Structure(format!("top index {top} out of range")));
        }
        Ok(Universe { labels, top })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn label(&self, e: Elem) -> &str {
        &self.labels[e]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label)
    }
}

pub(crate) fn check_labels(labels: &[String]) -> Result<()> {
    if labels.is_empty() {
        return Err(Error::Structure("universe must not be empty".into()));
    }
    for (i, l) in labels.iter().enumerate() {
        if l.is_empty() || l.chars().any(|c| c.is_whitespace() || c == '#') || l == "-" || l == "<"
        {
            return Err(Error::Structure(format!("invalid element label `{l}`")));
        }
        if labels[..i].contains(l) {
            return Err(Error::Structure(format!("duplicate label `{l}`")));
        }
    }
    Ok(())
}

/// Reflexive order matrix, `leq(i, j)` meaning `e_i <= e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderRelation {
    n: usize,
    leq: Vec<bool>,
}

impl OrderRelation {
    /// The order read off a join table: `x <= y` iff `x v y = y`.
    pub fn from_join(join: &BinTable) -> Self {
        let n = join.size();
        let mut leq = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                leq[x * n + y] = join.get(x, y) == Some(y);
            }
        }
        OrderRelation { n, leq }
    }

    /// Reflexive-transitive closure of the given strict pairs.
    pub fn closure_of(n: usize, pairs: &[(Elem, Elem)]) -> Self {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(x, y) in pairs {
            leq[x * n + y] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        OrderRelation { n, leq }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(Elem, Elem) -> bool) -> Self {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                leq[x * n + y] = f(x, y);
            }
        }
        OrderRelation { n, leq }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x * self.n + y]
    }

    /// First pair `(x, y)` of distinct elements with `x <= y <= x`.
    pub fn antisymmetry_witness(&self) -> Option<(Elem, Elem)> {
        (0..self.n)
            .flat_map(|x| (0..self.n).map(move |y| (x, y)))
            .find(|&(x, y)| x != y && self.leq(x, y) && self.leq(y, x))
    }

    /// The unique maximum, if any.
    pub fn maximum(&self) -> Option<Elem> {
        (0..self.n).find(|&t| (0..self.n).all(|x| self.leq(x, t)))
    }

    /// Least upper bound of `x` and `y`, when one exists.
    pub fn least_upper_bound(&self, x: Elem, y: Elem) -> Option<Elem> {
        let ups: Vec<Elem> = (0..self.n)
            .filter(|&u| self.leq(x, u) && self.leq(y, u))
            .collect();
        ups.iter()
            .copied()
            .find(|&u| ups.iter().all(|&v| self.leq(u, v)))
    }
}

/// Which axiom system an algebra claims to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassTag {
    Jsl,
    Sectioned,
    Ncis,
    Srs,
    Rrs,
    Ialg,
    Ralg,
}

impl ClassTag {
    pub const ALL: [ClassTag; 7] = [
        ClassTag::Jsl,
        ClassTag::Sectioned,
        ClassTag::Ncis,
        ClassTag::Srs,
        ClassTag::Rrs,
        ClassTag::Ialg,
        ClassTag::Ralg,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClassTag::Jsl => "jsl",
            ClassTag::Sectioned => "sectioned",
            ClassTag::Ncis => "ncis",
            ClassTag::Srs => "srs",
            ClassTag::Rrs => "rrs",
            ClassTag::Ialg => "ialg",
            ClassTag::Ralg => "ralg",
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        ClassTag::ALL
            .iter()
            .copied()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown class `{s}`"))
    }
}

/// Names of the operation slots of an [`Algebra`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    Join,
    Meet,
    Imp,
    Prod,
    R,
    Q,
}

impl Op {
    pub fn name(self) -> &'static str {
        match self {
            Op::Join => "join",
            Op::Meet => "meet",
            Op::Imp => "imp",
            Op::Prod => "prod",
            Op::R => "r",
            Op::Q => "q",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub(crate) name: Option<String>,
    pub(crate) class: Option<ClassTag>,
    pub(crate) universe: Universe,
    pub(crate) order: OrderRelation,
    pub(crate) join: BinTable,
    pub(crate) meet: Option<BinTable>,
    pub(crate) imp: Option<BinTable>,
    pub(crate) prod: Option<BinTable>,
    pub(crate) r: Option<TernTable>,
    pub(crate) q: Option<TernTable>,
}

impl Algebra {
    /// Builds a join-semilattice from its join table, rejecting tables that
    /// are not idempotent, commutative and associative.
    pub fn from_join(labels: Vec<String>, join: BinTable) -> Result<Self> {
        let alg = Self::from_join_unchecked(labels, join)?;
        if let Some(v) = crate::order::validate_join_semilattice(&alg).violation() {
            let names: Vec<&str> = v.witness.iter().map(|&e| alg.label(e)).collect();
            return Err(Error::Structure(format!(
                "join table violates {} at ({})",
                v.law,
                names.join(",")
            )));
        }
        Ok(alg)
    }

    /// Wraps a join table without checking the semilattice laws. The order
    /// is read off the table, and the top is the first absorbing element
    /// (or the last element when none exists). Intended for feeding
    /// deliberately broken tables to the validators.
    pub fn from_join_unchecked(labels: Vec<String>, join: BinTable) -> Result<Self> {
        check_labels(&labels)?;
        let n = labels.len();
        if join.size() != n {
            return Err(Error::Structure(format!(
                "join table has size {} but there are {n} elements",
                join.size()
            )));
        }
        check_indices(&join, n, "join")?;
        if !join.is_total() {
            return Err(Error::Structure("join table must be total".into()));
        }
        let order = OrderRelation::from_join(&join);
        let top = (0..n)
            .find(|&t| (0..n).all(|x| join.get(x, t) == Some(t)))
            .unwrap_or(n - 1);
        Ok(Algebra {
            name: None,
            class: None,
            universe: Universe::new(labels, top)?,
            order,
            join,
            meet: None,
            imp: None,
            prod: None,
            r: None,
            q: None,
        })
    }

    /// Builds a join-semilattice from an order given by strict pairs; the
    /// reflexive-transitive closure is taken.
    pub fn from_order(labels: Vec<String>, pairs: &[(Elem, Elem)]) -> Result<Self> {
        check_labels(&labels)?;
        let n = labels.len();
        let order = OrderRelation::closure_of(n, pairs);
        Self::from_order_relation(labels, order)
    }

    pub fn from_order_relation(labels: Vec<String>, order: OrderRelation) -> Result<Self> {
        check_labels(&labels)?;
        let n = labels.len();
        if let Some((x, y)) = order.antisymmetry_witness() {
            return Err(Error::Structure(format!(
                "order is not antisymmetric: {} and {} lie below each other",
                labels[x], labels[y]
            )));
        }
        let top = order
            .maximum()
            .ok_or_else(|| Error::Structure("no unique top element".into()))?;
        let mut join = BinTable::undefined(n);
        for x in 0..n {
            for y in 0..n {
                let lub = order.least_upper_bound(x, y).ok_or_else(|| {
                    Error::Structure(format!(
                        "no least upper bound for ({},{})",
                        labels[x], labels[y]
                    ))
                })?;
                join.set(x, y, Some(lub));
            }
        }
        Ok(Algebra {
            name: None,
            class: None,
            universe: Universe::new(labels, top)?,
            order,
            join,
            meet: None,
            imp: None,
            prod: None,
            r: None,
            q: None,
        })
    }

    pub fn size(&self) -> usize {
        self.universe.len()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size()
    }

    pub fn top(&self) -> Elem {
        self.universe.top()
    }

    pub fn label(&self, e: Elem) -> &str {
        self.universe.label(e)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn order(&self) -> &OrderRelation {
        &self.order
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn class(&self) -> Option<ClassTag> {
        self.class
    }

    pub fn join_table(&self) -> &BinTable {
        &self.join
    }

    pub fn meet_table(&self) -> Option<&BinTable> {
        self.meet.as_ref()
    }

    pub fn imp_table(&self) -> Option<&BinTable> {
        self.imp.as_ref()
    }

    pub fn prod_table(&self) -> Option<&BinTable> {
        self.prod.as_ref()
    }

    pub fn r_table(&self) -> Option<&TernTable> {
        self.r.as_ref()
    }

    pub fn q_table(&self) -> Option<&TernTable> {
        self.q.as_ref()
    }

    pub fn binary(&self, op: Op) -> Option<&BinTable> {
        match op {
            Op::Join => Some(&self.join),
            Op::Meet => self.meet.as_ref(),
            Op::Imp => self.imp.as_ref(),
            Op::Prod => self.prod.as_ref(),
            Op::R | Op::Q => None,
        }
    }

    pub fn ternary(&self, op: Op) -> Option<&TernTable> {
        match op {
            Op::R => self.r.as_ref(),
            Op::Q => self.q.as_ref(),
            _ => None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_class(mut self, class: ClassTag) -> Self {
        self.class = Some(class);
        self
    }

    pub fn without_class(mut self) -> Self {
        self.class = None;
        self
    }

    /// Attaches a partial meet table. The table must be defined exactly on
    /// the pairs that have a common lower bound; its values are checked by
    /// the validators, not here.
    pub fn with_meet(mut self, meet: BinTable) -> Result<Self> {
        self.check_binary(&meet, "meet")?;
        for x in self.elements() {
            for y in self.elements() {
                let bounded = self.elements().any(|z| self.leq(z, x) && self.leq(z, y));
                if bounded != meet.get(x, y).is_some() {
                    return Err(Error::Structure(format!(
                        "meet table domain mismatch at ({},{}): {}",
                        self.label(x),
                        self.label(y),
                        if bounded {
                            "bounded pair left undefined"
                        } else {
                            "defined on a pair without a common lower bound"
                        }
                    )));
                }
            }
        }
        self.meet = Some(meet);
        Ok(self)
    }

    pub fn with_imp(mut self, imp: BinTable) -> Result<Self> {
        self.check_binary(&imp, "imp")?;
        if !imp.is_total() {
            return Err(Error::Structure("imp table must be total".into()));
        }
        self.imp = Some(imp);
        Ok(self)
    }

    /// Attaches a partial product table; its domain is checked by the
    /// residuated validators.
    pub fn with_prod(mut self, prod: BinTable) -> Result<Self> {
        self.check_binary(&prod, "prod")?;
        self.prod = Some(prod);
        Ok(self)
    }

    pub fn with_r(mut self, r: TernTable) -> Result<Self> {
        self.check_ternary(&r, "r")?;
        self.r = Some(r);
        Ok(self)
    }

    pub fn with_q(mut self, q: TernTable) -> Result<Self> {
        self.check_ternary(&q, "q")?;
        self.q = Some(q);
        Ok(self)
    }

    /// Drops an optional operation. The join table cannot be removed.
    pub fn without(mut self, op: Op) -> Self {
        match op {
            Op::Join => {}
            Op::Meet => self.meet = None,
            Op::Imp => self.imp = None,
            Op::Prod => self.prod = None,
            Op::R => self.r = None,
            Op::Q => self.q = None,
        }
        self
    }

    /// True when every attached operation is total (no partial meet or
    /// product tables).
    pub fn is_total_signature(&self) -> bool {
        self.meet.is_none() && self.prod.is_none()
    }

    fn check_binary(&self, t: &BinTable, what: &str) -> Result<()> {
        if t.size() != self.size() {
            return Err(Error::Structure(format!(
                "{what} table has size {} but there are {} elements",
                t.size(),
                self.size()
            )));
        }
        check_indices(t, self.size(), what)
    }

    fn check_ternary(&self, t: &TernTable, what: &str) -> Result<()> {
        let n = self.size();
        if t.size() != n {
            return Err(Error::Structure(format!(
                "{what} table has size {} but there are {n} elements",
                t.size()
            )));
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if t.at(x, y, z) >= n {
                        return Err(Error::Structure(format!("{what} entry out of range")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Relabels the universe by `perm` (old index -> new index), keeping
    /// labels attached to their new positions in `labels`.
    pub fn relabelled(&self, perm: &[Elem], labels: Vec<String>) -> Result<Self> {
        let join = self.join.permuted(perm);
        let mut out = Algebra::from_join_unchecked(labels, join)?;
        out.name = self.name.clone();
        out.class = self.class;
        out.meet = self.meet.as_ref().map(|t| t.permuted(perm));
        out.imp = self.imp.as_ref().map(|t| t.permuted(perm));
        out.prod = self.prod.as_ref().map(|t| t.permuted(perm));
        out.r = self.r.as_ref().map(|t| t.permuted(perm));
        out.q = self.q.as_ref().map(|t| t.permuted(perm));
        Ok(out)
    }
}

fn check_indices(t: &BinTable, n: usize, what: &str) -> Result<()> {
    if t.cells().iter().flatten().any(|&v| v >= n) {
        return Err(Error::Structure(format!("{what} entry out of range")));
    }
    Ok(())
}

/// First cell at which two algebras over the same universe differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableDiff {
    pub op: Op,
    pub cell: Vec<Elem>,
    pub left: Option<Elem>,
    pub right: Option<Elem>,
}

impl TableDiff {
    pub fn render(&self, alg: &Algebra) -> String {
        let cell: Vec<&str> = self.cell.iter().map(|&e| alg.label(e)).collect();
        let show = |v: Option<Elem>| v.map_or("-".to_string(), |e| alg.label(e).to_string());
        format!(
            "DIFF op={} cell=({}) left={} right={}",
            self.op.name(),
            cell.join(","),
            show(self.left),
            show(self.right)
        )
    }
}

/// Compares the operation tables of two algebras cell by cell, in the order
/// join, meet, imp, prod, r, q. A table present on one side only counts as
/// differing at its first defined cell.
pub fn first_table_difference(a: &Algebra, b: &Algebra) -> Option<TableDiff> {
    if a.size() != b.size() {
        return Some(TableDiff {
            op: Op::Join,
            cell: vec![],
            left: Some(a.size()),
            right: Some(b.size()),
        });
    }
    let n = a.size();
    for op in [Op::Join, Op::Meet, Op::Imp, Op::Prod] {
        let (ta, tb) = (a.binary(op), b.binary(op));
        if ta.is_none() && tb.is_none() {
            continue;
        }
        for x in 0..n {
            for y in 0..n {
                let va = ta.and_then(|t| t.get(x, y));
                let vb = tb.and_then(|t| t.get(x, y));
                let presence_differs = ta.is_some() != tb.is_some();
                if va != vb || (presence_differs && x == n - 1 && y == n - 1) {
                    return Some(TableDiff {
                        op,
                        cell: vec![x, y],
                        left: va,
                        right: vb,
                    });
                }
            }
        }
    }
    for op in [Op::R, Op::Q] {
        let (ta, tb) = (a.ternary(op), b.ternary(op));
        if ta.is_none() && tb.is_none() {
            continue;
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let va = ta.map(|t| t.at(x, y, z));
                    let vb = tb.map(|t| t.at(x, y, z));
                    if va != vb {
                        return Some(TableDiff {
                            op,
                            cell: vec![x, y, z],
                            left: va,
                            right: vb,
                        });
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn labels_are_validated() {
        assert!(check_labels(&labels("a b 1")).is_ok());
        assert!(check_labels(&labels("a a")).is_err());
        assert!(check_labels(&labels("a -")).is_err());
        assert!(check_labels(&[String::new()]).is_err());
        assert!(check_labels(&["x y".to_string()]).is_err());
    }

    #[test]
    fn order_closure_and_join() {
        let alg = Algebra::from_order(labels("a b 1"), &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(alg.top(), 2);
        assert!(alg.order().leq(0, 2));
        assert_eq!(alg.join_table().at(0, 1), 1);
    }

    #[test]
    fn cyclic_order_rejected() {
        let err = Algebra::from_order(labels("a b 1"), &[(0, 1), (1, 0)]).unwrap_err();
        assert!(err.to_string().contains("antisymmetric"));
    }

    #[test]
    fn two_maximal_elements_rejected() {
        let err = Algebra::from_order(labels("a b c"), &[(0, 1), (0, 2)]).unwrap_err();
        assert!(err.to_string().contains("no unique top"));
    }

    #[test]
    fn table_difference_reports_first_cell() {
        let a = Algebra::from_order(labels("a b 1"), &[(0, 1), (1, 2)]).unwrap();
        let imp = BinTable::total_from_fn(3, |x, y| if x <= y { 2 } else { y });
        let b = a.clone().with_imp(imp.clone()).unwrap();
        let mut imp2 = imp;
        imp2.set(2, 0, Some(1));
        let c = a.with_imp(imp2).unwrap();
        let d = first_table_difference(&b, &c).unwrap();
        assert_eq!(d.op, Op::Imp);
        assert_eq!(d.cell, vec![2, 0]);
        assert_eq!((d.left, d.right), (Some(0), Some(1)));
        assert!(first_table_difference(&b, &b).is_none());
    }
}
