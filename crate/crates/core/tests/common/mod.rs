//! Slow, independent reference implementations used to cross-check the
//! library. Nothing here calls into `ordalg` except for conversions at the
//! edges.

#![allow(dead_code)]

use itertools::Itertools;
use ordalg::congruence::Partition;
use ordalg::{Algebra, Op};

/// A finite poset given by its full `<=` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    pub leq: Vec<Vec<bool>>,
}

impl Poset {
    pub fn n(&self) -> usize {
        self.leq.len()
    }

    fn bound(&self, x: usize, y: usize, upper: bool) -> Option<usize> {
        let n = self.n();
        let rel = |a: usize, b: usize| {
            if upper {
                self.leq[a][b]
            } else {
                self.leq[b][a]
            }
        };
        let bounds: Vec<usize> = (0..n).filter(|&u| rel(x, u) && rel(y, u)).collect();
        bounds
            .iter()
            .copied()
            .find(|&u| bounds.iter().all(|&v| rel(u, v)))
    }

    pub fn lub(&self, x: usize, y: usize) -> Option<usize> {
        self.bound(x, y, true)
    }

    pub fn glb(&self, x: usize, y: usize) -> Option<usize> {
        self.bound(x, y, false)
    }

    pub fn from_algebra(alg: &Algebra) -> Poset {
        let n = alg.size();
        let join = alg.join_table();
        Poset {
            leq: (0..n)
                .map(|x| (0..n).map(|y| join.at(x, y) == y).collect())
                .collect(),
        }
    }
}

/// Every poset on `0..n` whose largest element is `n - 1` and in which all
/// pairs have a least upper bound. Built by trying every set of strict
/// relations among the other elements.
pub fn labelled_join_semilattices(n: usize) -> Vec<Poset> {
    let m = n - 1;
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
            row[n - 1] = true;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                leq[i][j] = true;
            }
        }
        let antisymmetric = (0..n).all(|i| (0..n).all(|j| i == j || !(leq[i][j] && leq[j][i])));
        let transitive =
            (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(leq[i][j] && leq[j][k]) || leq[i][k])));
        if !antisymmetric || !transitive {
            continue;
        }
        let p = Poset { leq };
        if (0..n).all(|x| (0..n).all(|y| p.lub(x, y).is_some())) {
            out.push(p);
        }
    }
    out
}

/// Whether every element of every section has a pseudocomplement there.
pub fn is_sectioned(p: &Poset) -> bool {
    let n = p.n();
    (0..n).all(|base| {
        (0..n).filter(|&y| p.leq[base][y]).all(|y| {
            let disjoint: Vec<usize> = (0..n)
                .filter(|&z| p.leq[base][z] && p.glb(y, z) == Some(base))
                .collect();
            disjoint
                .iter()
                .any(|&s| disjoint.iter().all(|&t| p.leq[t][s]))
        })
    })
}

/// All `->` tables on `p` satisfying axioms (1)-(4), by trying every
/// combination of the values allowed cell by cell by (1) and (2).
pub fn implications(p: &Poset) -> Vec<Vec<Vec<usize>>> {
    let n = p.n();
    let join = |x: usize, y: usize| p.lub(x, y).unwrap();
    let cells: Vec<Vec<usize>> = (0..n)
        .cartesian_product(0..n)
        .map(|(x, y)| {
            (0..n)
                .filter(|&v| p.leq[y][v] && p.glb(join(x, y), v) == Some(y))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for choice in cells
        .iter()
        .map(|c| c.iter().copied())
        .multi_cartesian_product()
    {
        let imp = |x: usize, y: usize| choice[x * n + y];
        let ok3 = (0..n).all(|x| (0..n).all(|y| imp(join(x, y), y) == imp(x, y)));
        let ok4 = ok3
            && (0..n).all(|x| {
                (0..n).all(|y| {
                    (0..n).all(|z| {
                        let (xz, yz) = (join(x, z), join(y, z));
                        match p.glb(xz, yz) {
                            Some(m) => p.leq[y][imp(xz, m)],
                            None => false,
                        }
                    })
                })
            });
        if ok4 {
            out.push(
                (0..n)
                    .map(|x| (0..n).map(|y| imp(x, y)).collect())
                    .collect(),
            );
        }
    }
    out
}

/// Counts structures up to isomorphism. `same(a, b, perm)` must say
/// whether `perm` maps `a` onto `b`; the top element `n - 1` is fixed.
pub fn count_up_to_iso<T>(items: &[T], n: usize, same: impl Fn(&T, &T, &[usize]) -> bool) -> usize {
    let perms: Vec<Vec<usize>> = (0..n - 1)
        .permutations(n - 1)
        .map(|mut p| {
            p.push(n - 1);
            p
        })
        .collect();
    let mut reps: Vec<&T> = Vec::new();
    for item in items {
        if !reps.iter().any(|r| perms.iter().any(|p| same(item, r, p))) {
            reps.push(item);
        }
    }
    reps.len()
}

pub fn order_maps_onto(a: &Poset, b: &Poset, perm: &[usize]) -> bool {
    let n = a.n();
    (0..n).all(|x| (0..n).all(|y| a.leq[x][y] == b.leq[perm[x]][perm[y]]))
}

pub fn oracle_count_jsl(n: usize) -> usize {
    count_up_to_iso(&labelled_join_semilattices(n), n, order_maps_onto)
}

pub fn oracle_count_sectioned(n: usize) -> usize {
    let ps: Vec<Poset> = labelled_join_semilattices(n)
        .into_iter()
        .filter(is_sectioned)
        .collect();
    count_up_to_iso(&ps, n, order_maps_onto)
}

/// Implication semilattices counted as pairs (order, `->`) up to
/// isomorphism, without assuming `->` is determined by the order.
pub fn oracle_count_ncis(n: usize) -> usize {
    let pairs: Vec<(Poset, Vec<Vec<usize>>)> = labelled_join_semilattices(n)
        .into_iter()
        .flat_map(|p| implications(&p).into_iter().map(move |i| (p.clone(), i)))
        .collect();
    count_up_to_iso(&pairs, n, |(pa, ia), (pb, ib), perm| {
        order_maps_onto(pa, pb, perm)
            && (0..n).all(|x| (0..n).all(|y| perm[ia[x][y]] == ib[perm[x]][perm[y]]))
    })
}

/// Restricted growth strings of length `n`: one per set partition.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    fn rec(i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for c in 0..=max + 1 {
            cur[i] = c;
            rec(i + 1, max.max(c), cur, out);
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    rec(1, 0, &mut cur, &mut out);
    out
}

/// Every partition compatible with all operations of a total algebra, as
/// restricted growth strings in lexicographic order.
pub fn oracle_congruences(alg: &Algebra) -> Vec<Vec<usize>> {
    let n = alg.size();
    let binary: Vec<_> = [Op::Join, Op::Imp]
        .iter()
        .filter_map(|&op| alg.binary(op))
        .collect();
    let ternary: Vec<_> = [Op::R, Op::Q]
        .iter()
        .filter_map(|&op| alg.ternary(op))
        .collect();
    set_partitions(n)
        .into_iter()
        .filter(|c| {
            let related: Vec<(usize, usize)> = (0..n)
                .cartesian_product(0..n)
                .filter(|&(a, b)| c[a] == c[b])
                .collect();
            binary.iter().all(|t| {
                related.iter().all(|&(x, x2)| {
                    related
                        .iter()
                        .all(|&(y, y2)| c[t.at(x, y)] == c[t.at(x2, y2)])
                })
            }) && ternary.iter().all(|t| {
                related.iter().all(|&(x, x2)| {
                    related.iter().all(|&(y, y2)| {
                        related
                            .iter()
                            .all(|&(z, z2)| c[t.at(x, y, z)] == c[t.at(x2, y2, z2)])
                    })
                })
            })
        })
        .collect()
}

/// A library partition as a restricted growth string.
pub fn growth_string(p: &Partition) -> Vec<usize> {
    let mut ids: Vec<Option<usize>> = vec![None; p.size()];
    let mut next = 0;
    (0..p.size())
        .map(|x| {
            let r = p.representative(x);
            *ids[r].get_or_insert_with(|| {
                next += 1;
                next - 1
            })
        })
        .collect()
}

/// Whether two algebras are isomorphic by some relabelling of elements,
/// comparing every present operation table.
pub fn isomorphic(a: &Algebra, b: &Algebra) -> bool {
    let n = a.size();
    if n != b.size() {
        return false;
    }
    (0..n).permutations(n).any(|p| {
        [Op::Join, Op::Meet, Op::Imp, Op::Prod].iter().all(|&op| {
            match (a.binary(op), b.binary(op)) {
                (Some(ta), Some(tb)) => {
                    (0..n).all(|x| (0..n).all(|y| ta.get(x, y).map(|v| p[v]) == tb.get(p[x], p[y])))
                }
                (None, None) => true,
                _ => false,
            }
        }) && [Op::R, Op::Q]
            .iter()
            .all(|&op| match (a.ternary(op), b.ternary(op)) {
                (Some(ta), Some(tb)) => (0..n).all(|x| {
                    (0..n).all(|y| (0..n).all(|z| p[ta.at(x, y, z)] == tb.at(p[x], p[y], p[z])))
                }),
                (None, None) => true,
                _ => false,
            })
    })
}
