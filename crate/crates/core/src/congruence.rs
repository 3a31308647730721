//! Congruences of finite algebras with total operations (`v`, `->`, `r`,
//! `q`), the congruence lattice, and the Maltsev-type properties:
//! 3-permutability, congruence distributivity and weak regularity.

use std::collections::BTreeSet;

use crate::algebra::{Algebra, Op};
use crate::error::{Error, Result};
use crate::report::{expect_eq, Report, Violation};
use crate::Elem;

/// An equivalence relation on `0..n`, stored as the least element of each
/// element's class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    class_of: Vec<Elem>,
}

struct UnionFind {
    parent: Vec<Elem>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: Elem) -> Elem {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `x` and `y`; false if they already coincide.
    fn union(&mut self, x: Elem, y: Elem) -> bool {
        let (a, b) = (self.find(x), self.find(y));
        if a == b {
            return false;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        self.parent[hi] = lo;
        true
    }

    fn into_partition(mut self) -> Partition {
        let class_of = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Partition { class_of }
    }
}

impl Partition {
    pub fn identity(n: usize) -> Self {
        Partition {
            class_of: (0..n).collect(),
        }
    }

    pub fn full(n: usize) -> Self {
        Partition {
            class_of: vec![0; n],
        }
    }

    /// Builds a partition from arbitrary class ids.
    pub fn from_class_ids(ids: &[usize]) -> Self {
        let mut uf = UnionFind::new(ids.len());
        for x in 0..ids.len() {
            for y in 0..x {
                if ids[x] == ids[y] {
                    uf.union(x, y);
                    break;
                }
            }
        }
        uf.into_partition()
    }

    pub fn size(&self) -> usize {
        self.class_of.len()
    }

    /// Least element of the class of `x`.
    pub fn representative(&self, x: Elem) -> Elem {
        self.class_of[x]
    }

    pub fn related(&self, x: Elem, y: Elem) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    /// Classes ordered by least element, members in index order.
    pub fn blocks(&self) -> Vec<Vec<Elem>> {
        let mut out: Vec<Vec<Elem>> = Vec::new();
        let mut slot = vec![usize::MAX; self.size()];
        for (x, &rep) in self.class_of.iter().enumerate() {
            if rep == x {
                slot[x] = out.len();
                out.push(vec![x]);
            } else {
                out[slot[rep]].push(x);
            }
        }
        out
    }

    pub fn block_count(&self) -> usize {
        self.class_of
            .iter()
            .enumerate()
            .filter(|&(x, &r)| x == r)
            .count()
    }

    /// The class containing `x`.
    pub fn class(&self, x: Elem) -> Vec<Elem> {
        (0..self.size()).filter(|&y| self.related(x, y)).collect()
    }

    /// True when every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        (0..self.size()).all(|x| other.related(x, self.class_of[x]))
    }

    pub fn meet(&self, other: &Partition) -> Partition {
        let ids: Vec<usize> = (0..self.size())
            .map(|x| self.class_of[x] * self.size() + other.class_of[x])
            .collect();
        Partition::from_class_ids(&ids)
    }

    /// The least equivalence containing both.
    pub fn join(&self, other: &Partition) -> Partition {
        let mut uf = UnionFind::new(self.size());
        for x in 0..self.size() {
            uf.union(x, self.class_of[x]);
            uf.union(x, other.class_of[x]);
        }
        uf.into_partition()
    }

    /// Block notation with labels, e.g. `{0,a}{b}{c,1}`.
    pub fn render(&self, alg: &Algebra) -> String {
        self.blocks()
            .iter()
            .map(|b| {
                let labels: Vec<&str> = b.iter().map(|&x| alg.label(x)).collect();
                format!("{{{}}}", labels.join(","))
            })
            .collect()
    }

    fn matrix(&self) -> Relation {
        let n = self.size();
        Relation {
            n,
            bits: (0..n * n).map(|i| self.related(i / n, i % n)).collect(),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
struct Relation {
    n: usize,
    bits: Vec<bool>,
}

impl Relation {
    fn compose(&self, other: &Relation) -> Relation {
        let n = self.n;
        let mut bits = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                if self.bits[x * n + y] {
                    for z in 0..n {
                        if other.bits[y * n + z] {
                            bits[x * n + z] = true;
                        }
                    }
                }
            }
        }
        Relation { n, bits }
    }
}

fn require_total(alg: &Algebra) -> Result<()> {
    if alg.meet_table().is_some() || alg.prod_table().is_some() {
        return Err(Error::Precondition(
            "congruence analysis needs total operations; remove the partial meet/prod tables"
                .into(),
        ));
    }
    Ok(())
}

/// The least congruence relating `a` and `b`.
pub fn principal_congruence(alg: &Algebra, a: Elem, b: Elem) -> Result<Partition> {
    require_total(alg)?;
    let n = alg.size();
    let binary: Vec<_> = [Op::Join, Op::Imp]
        .into_iter()
        .filter_map(|op| alg.binary(op))
        .collect();
    let ternary: Vec<_> = [Op::R, Op::Q]
        .into_iter()
        .filter_map(|op| alg.ternary(op))
        .collect();
    let mut uf = UnionFind::new(n);
    let mut work = vec![(a, b)];
    while let Some((u, v)) = work.pop() {
        if !uf.union(u, v) {
            continue;
        }
        for t in &binary {
            for c in 0..n {
                work.push((t.at(u, c), t.at(v, c)));
                work.push((t.at(c, u), t.at(c, v)));
            }
        }
        for t in &ternary {
            for c in 0..n {
                for d in 0..n {
                    work.push((t.at(u, c, d), t.at(v, c, d)));
                    work.push((t.at(c, u, d), t.at(c, v, d)));
                    work.push((t.at(c, d, u), t.at(c, d, v)));
                }
            }
        }
    }
    Ok(uf.into_partition())
}

/// All congruences, ordered by decreasing number of classes and then by
/// class representatives, with the refinement order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConLattice {
    congruences: Vec<Partition>,
    leq: Vec<bool>,
}

impl ConLattice {
    pub fn len(&self) -> usize {
        self.congruences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.congruences.is_empty()
    }

    pub fn congruences(&self) -> &[Partition] {
        &self.congruences
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len() + j]
    }

    fn index_of(&self, p: &Partition) -> usize {
        self.congruences
            .iter()
            .position(|q| q == p)
            .expect("lattice is closed")
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.index_of(&self.congruences[i].meet(&self.congruences[j]))
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.index_of(&self.congruences[i].join(&self.congruences[j]))
    }
}

/// Principal congruences closed under joins.
pub fn congruence_lattice(alg: &Algebra) -> Result<ConLattice> {
    require_total(alg)?;
    let n = alg.size();
    let mut all = BTreeSet::new();
    all.insert(Partition::identity(n));
    for a in 0..n {
        for b in a + 1..n {
            all.insert(principal_congruence(alg, a, b)?);
        }
    }
    let mut frontier: Vec<Partition> = all.iter().cloned().collect();
    while !frontier.is_empty() {
        let snapshot: Vec<Partition> = all.iter().cloned().collect();
        let mut next = Vec::new();
        for p in &frontier {
            for q in &snapshot {
                let j = p.join(q);
                if !all.contains(&j) {
                    all.insert(j.clone());
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut congruences: Vec<Partition> = all.into_iter().collect();
    congruences.sort_by(|p, q| {
        q.block_count()
            .cmp(&p.block_count())
            .then_with(|| p.class_of.cmp(&q.class_of))
    });
    let m = congruences.len();
    let mut leq = vec![false; m * m];
    for i in 0..m {
        for j in 0..m {
            leq[i * m + j] = congruences[i].refines(&congruences[j]);
        }
    }
    Ok(ConLattice { congruences, leq })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaltsevReport {
    pub congruence_count: usize,
    pub three_permutable: bool,
    pub con_distributive: bool,
    pub weakly_regular: bool,
    /// Congruence indices `(i, j)` that do not 3-permute.
    pub permutability_witness: Option<(usize, usize)>,
    /// Indices `(i, j, k)` with `i ∧ (j v k) != (i ∧ j) v (i ∧ k)`.
    pub distributivity_witness: Option<(usize, usize, usize)>,
    /// Distinct congruences `(i, j)` with the same class of the top.
    pub regularity_witness: Option<(usize, usize)>,
    pub lattice: ConLattice,
}

/// Decides the three congruence properties on the actual congruence lattice.
pub fn maltsev_report(alg: &Algebra) -> Result<MaltsevReport> {
    let lattice = congruence_lattice(alg)?;
    let m = lattice.len();
    let rel: Vec<Relation> = lattice.congruences.iter().map(Partition::matrix).collect();
    let mut permutability_witness = None;
    'perm: for i in 0..m {
        for j in i + 1..m {
            let (a, b) = (&rel[i], &rel[j]);
            if a.compose(b).compose(a) != b.compose(a).compose(b) {
                permutability_witness = Some((i, j));
                break 'perm;
            }
        }
    }
    let mut distributivity_witness = None;
    'dist: for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let l = lattice.meet(i, lattice.join(j, k));
                let r = lattice.join(lattice.meet(i, j), lattice.meet(i, k));
                if l != r {
                    distributivity_witness = Some((i, j, k));
                    break 'dist;
                }
            }
        }
    }
    let top = alg.top();
    let mut regularity_witness = None;
    'reg: for i in 0..m {
        for j in i + 1..m {
            if lattice.congruences[i].class(top) == lattice.congruences[j].class(top) {
                regularity_witness = Some((i, j));
                break 'reg;
            }
        }
    }
    Ok(MaltsevReport {
        congruence_count: m,
        three_permutable: permutability_witness.is_none(),
        con_distributive: distributivity_witness.is_none(),
        weakly_regular: regularity_witness.is_none(),
        permutability_witness,
        distributivity_witness,
        regularity_witness,
        lattice,
    })
}

/// The term schemes witnessing the three properties.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermScheme {
    /// `t1 = t(z, y -> x, x)`, `t2 = t(x, y -> z, z)` with
    /// `t1(x,y,y) = x`, `t1(x,x,y) = t2(x,y,y)`, `t2(x,x,y) = y`.
    Permutability,
    /// `t0 = x`, `t1 = t(z,y,x)`, `t2 = t(x, y -> z, z)`, `t3 = z`.
    Jonsson,
    /// `x -> y = 1` and `y -> x = 1` exactly when `x = y`.
    WeakRegularity,
}

impl TermScheme {
    pub const ALL: [TermScheme; 3] = [
        TermScheme::Permutability,
        TermScheme::Jonsson,
        TermScheme::WeakRegularity,
    ];
}

/// Evaluates the requested term schemes pointwise, with `t` the algebra's
/// ternary operation (`r` if present, else `q`).
pub fn term_witness_check(alg: &Algebra, schemes: &[TermScheme]) -> Report {
    let run = || -> Result<(), Violation> {
        let imp = alg
            .imp_table()
            .ok_or_else(|| Violation::structural("signature", &[], "missing imp table"))?;
        let t = alg
            .ternary(Op::R)
            .or_else(|| alg.ternary(Op::Q))
            .ok_or_else(|| Violation::structural("signature", &[], "missing r or q table"))?;
        let n = alg.size();
        let top = alg.top();
        let i = |x, y| imp.at(x, y);
        let t = |x, y, z| t.at(x, y, z);
        for &scheme in schemes {
            match scheme {
                TermScheme::Permutability => {
                    let t1 = |x, y, z| t(z, i(y, x), x);
                    let t2 = |x, y, z| t(x, i(y, z), z);
                    for x in 0..n {
                        for y in 0..n {
                            let w = [x, y];
                            expect_eq("maltsev-1", &w, t1(x, y, y), x)?;
                            expect_eq("maltsev-2", &w, t1(x, x, y), t2(x, y, y))?;
                            expect_eq("maltsev-3", &w, t2(x, x, y), y)?;
                        }
                    }
                }
                TermScheme::Jonsson => {
                    let t1 = |x, y, z| t(z, y, x);
                    let t2 = |x, y, z| t(x, i(y, z), z);
                    for x in 0..n {
                        for y in 0..n {
                            let w = [x, y];
                            expect_eq("jonsson-1", &w, x, t1(x, x, y))?;
                            expect_eq("jonsson-2", &w, t1(x, y, y), t2(x, y, y))?;
                            expect_eq("jonsson-3", &w, t2(x, x, y), y)?;
                            expect_eq("jonsson-4", &w, t1(x, y, x), x)?;
                            expect_eq("jonsson-5", &w, t2(x, y, x), x)?;
                        }
                    }
                }
                TermScheme::WeakRegularity => {
                    for x in 0..n {
                        for y in 0..n {
                            let both = i(x, y) == top && i(y, x) == top;
                            expect_eq("weak-regularity", &[x, y], both, x == y)?;
                        }
                    }
                }
            }
        }
        Ok(())
    };
    run().into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::implication::{derive_implication_from_order, NcisAlgebra};
    use crate::varieties::ialgebra_from_ncis;

    fn ialg(alg: Algebra) -> Algebra {
        ialgebra_from_ncis(&NcisAlgebra::new(alg).unwrap())
            .unwrap()
            .into_algebra()
    }

    fn chain_ialg(n: usize) -> Algebra {
        ialgebra_from_ncis(&derive_implication_from_order(fixtures::chain(n)).unwrap())
            .unwrap()
            .into_algebra()
    }

    #[test]
    fn partition_basics() {
        let p = Partition::from_class_ids(&[7, 3, 7, 3, 9]);
        assert_eq!(p.blocks(), vec![vec![0, 2], vec![1, 3], vec![4]]);
        assert_eq!(p.representative(3), 1);
        let q = Partition::from_class_ids(&[0, 0, 1, 1, 2]);
        assert_eq!(p.join(&q).blocks(), vec![vec![0, 1, 2, 3], vec![4]]);
        assert_eq!(p.meet(&q), Partition::identity(5));
        assert!(Partition::identity(5).refines(&p));
        assert!(p.refines(&Partition::full(5)));
        assert!(!p.refines(&q));
    }

    #[test]
    fn trivial_congruences() {
        let one = chain_ialg(1);
        assert_eq!(congruence_lattice(&one).unwrap().len(), 1);
        let two = chain_ialg(2);
        assert_eq!(
            principal_congruence(&two, 0, 1).unwrap(),
            Partition::full(2)
        );
        assert_eq!(
            principal_congruence(&two, 1, 1).unwrap(),
            Partition::identity(2)
        );
        assert_eq!(congruence_lattice(&two).unwrap().len(), 2);
    }

    #[test]
    fn fig_algebras_have_all_three_properties() {
        for alg in [
            ialg(fixtures::fig1_paper()),
            ialg(fixtures::fig2_paper()),
            chain_ialg(1),
        ] {
            let rep = maltsev_report(&alg).unwrap();
            assert!(rep.three_permutable && rep.con_distributive && rep.weakly_regular);
            assert!(term_witness_check(&alg, &TermScheme::ALL).is_pass());
        }
    }

    #[test]
    fn permutability_instance_on_fig1() {
        let alg = ialg(fixtures::fig1_paper());
        let (c, d) = (2, 3);
        let r = alg.r_table().unwrap();
        let imp = alg.imp_table().unwrap();
        assert_eq!(r.at(d, imp.at(d, c), c), c);
    }

    #[test]
    fn block_rendering() {
        let alg = fixtures::fig2_order();
        let p = Partition::from_class_ids(&[0, 0, 1, 2, 2, 2]);
        assert_eq!(p.render(&alg), "{0,a}{b}{c,d,1}");
    }

    #[test]
    fn partial_tables_are_rejected() {
        assert!(matches!(
            congruence_lattice(&fixtures::fig1_paper()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn join_only_semilattice_is_not_weakly_regular() {
        // The 3-chain as a bare semilattice: {0,a}{1} and the identity
        // share the top class {1}.
        let rep = maltsev_report(&fixtures::chain(3)).unwrap();
        assert!(!rep.weakly_regular);
        assert!(!term_witness_check(&fixtures::chain(3), &TermScheme::ALL).is_pass());
    }
}
