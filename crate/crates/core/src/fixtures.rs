//! Small named algebras used throughout the tests, benches and docs.
//!
//! `fig1_*` is the five-element semilattice made of two 2-chains under a
//! common top; `fig2_*` is the six-element semilattice whose section above
//! the bottom is a pentagon. The `*_paper` variants attach the `->` and
//! meet tables exactly as published for these two examples.

use crate::algebra::Algebra;
use crate::table::BinTable;
use crate::Elem;

fn labels(s: &str) -> Vec<String> {
    s.split_whitespace().map(String::from).collect()
}

/// Parses rows of whitespace-separated labels, `-` meaning undefined.
pub fn table_from_text(alg_labels: &[String], text: &str) -> BinTable {
    let rows = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|tok| {
                    if tok == "-" {
                        None
                    } else {
                        Some(
                            alg_labels
                                .iter()
                                .position(|x| x == tok)
                                .unwrap_or_else(|| panic!("unknown label {tok}")),
                        )
                    }
                })
                .collect()
        })
        .collect();
    BinTable::from_rows(rows)
}

/// Elements `a b c d 1` with `a < b < 1` and `c < d < 1`.
pub fn fig1_order() -> Algebra {
    Algebra::from_order(labels("a b c d 1"), &[(0, 1), (1, 4), (2, 3), (3, 4)])
        .expect("fig1 is a join-semilattice")
        .with_name("fig1")
}

pub const FIG1_IMP: &str = "
    1 1 c d 1
    a 1 c d 1
    a b 1 1 1
    a b c 1 1
    a b c d 1
";

pub const FIG1_MEET: &str = "
    a a - - a
    a b - - b
    - - c c c
    - - c d d
    a b c d 1
";

/// Fig. 1 order with the published `->` and meet tables.
pub fn fig1_paper() -> Algebra {
    let base = fig1_order();
    let l = base.universe().labels().to_vec();
    base.with_meet(table_from_text(&l, FIG1_MEET))
        .and_then(|a| a.with_imp(table_from_text(&l, FIG1_IMP)))
        .expect("published tables are well-formed")
}

/// Elements `0 a b c d 1` with `0 < a < c < 1`, `0 < b < 1`, `d < 1`.
pub fn fig2_order() -> Algebra {
    Algebra::from_order(
        labels("0 a b c d 1"),
        &[(0, 1), (1, 3), (3, 5), (0, 2), (2, 5), (4, 5)],
    )
    .expect("fig2 is a join-semilattice")
    .with_name("fig2")
}

/// `0 -> d` is `d`: the two are incomparable, and `x -> y = 1` exactly
/// when `x <= y`.
pub const FIG2_IMP: &str = "
    1 1 1 1 d 1
    b 1 b 1 d 1
    c a 1 c d 1
    b a b 1 d 1
    0 a b c 1 1
    0 a b c d 1
";

pub const FIG2_MEET: &str = "
    0 0 0 0 - 0
    0 a 0 a - a
    0 0 b 0 - b
    0 a 0 c - c
    - - - - d d
    0 a b c d 1
";

/// Fig. 2 order with the published `->` and meet tables.
pub fn fig2_paper() -> Algebra {
    let base = fig2_order();
    let l = base.universe().labels().to_vec();
    base.with_meet(table_from_text(&l, FIG2_MEET))
        .and_then(|a| a.with_imp(table_from_text(&l, FIG2_IMP)))
        .expect("published tables are well-formed")
}

/// The `n`-element chain `e0 < e1 < ... < 1`.
pub fn chain(n: usize) -> Algebra {
    assert!(n >= 1);
    let mut l: Vec<String> = (0..n - 1).map(|i| format!("e{i}")).collect();
    l.push("1".into());
    let pairs: Vec<(Elem, Elem)> = (1..n).map(|i| (i - 1, i)).collect();
    Algebra::from_order(l, &pairs).expect("chains are join-semilattices")
}

/// The diamond `M3`: bottom `0`, three atoms `a b c`, top `1`.
pub fn m3() -> Algebra {
    Algebra::from_order(
        labels("0 a b c 1"),
        &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
    )
    .expect("M3 is a lattice")
    .with_name("m3")
}

/// The pentagon `N5`: `0 < a < c < 1`, `0 < b < 1`.
pub fn n5() -> Algebra {
    Algebra::from_order(
        labels("0 a b c 1"),
        &[(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)],
    )
    .expect("N5 is a lattice")
    .with_name("n5")
}
