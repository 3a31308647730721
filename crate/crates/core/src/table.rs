//! Dense operation tables over a finite universe.

use crate::Elem;

/// An `n x n` table of a binary operation. Entries are `None` where the
/// operation is undefined.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinTable {
    n: usize,
    cells: Vec<Option<Elem>>,
}

impl BinTable {
    /// A table with every entry undefined.
    pub fn undefined(n: usize) -> Self {
        BinTable {
            n,
            cells: vec![None; n * n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(Elem, Elem) -> Option<Elem>) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                cells.push(f(x, y));
            }
        }
        BinTable { n, cells }
    }

    pub fn total_from_fn(n: usize, mut f: impl FnMut(Elem, Elem) -> Elem) -> Self {
        Self::from_fn(n, |x, y| Some(f(x, y)))
    }

    /// Builds a table from rows. Rows must be square.
    pub fn from_rows(rows: Vec<Vec<Option<Elem>>>) -> Self {
        let n = rows.len();
        debug_assert!(rows.iter().all(|r| r.len() == n));
        BinTable {
            n,
            cells: rows.into_iter().flatten().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: Elem, y: Elem) -> Option<Elem> {
        self.cells[x * self.n + y]
    }

    /// Entry of a table known to be defined at `(x, y)`.
    #[inline]
    pub fn at(&self, x: Elem, y: Elem) -> Elem {
        self.cells[x * self.n + y].expect("operation undefined at requested cell")
    }

    pub fn set(&mut self, x: Elem, y: Elem, v: Option<Elem>) {
        self.cells[x * self.n + y] = v;
    }

    pub fn is_total(&self) -> bool {
        self.cells.iter().all(Option::is_some)
    }

    pub fn row(&self, x: Elem) -> &[Option<Elem>] {
        &self.cells[x * self.n..(x + 1) * self.n]
    }

    pub fn cells(&self) -> &[Option<Elem>] {
        &self.cells
    }

    /// Applies an index relabelling `perm` (old index -> new index).
    pub fn permuted(&self, perm: &[Elem]) -> Self {
        let mut out = BinTable::undefined(self.n);
        for x in 0..self.n {
            for y in 0..self.n {
                out.set(perm[x], perm[y], self.get(x, y).map(|v| perm[v]));
            }
        }
        out
    }
}

/// An `n x n x n` total table of a ternary operation; `at(x, y, z)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TernTable {
    n: usize,
    cells: Vec<Elem>,
}

impl TernTable {
    pub fn from_fn(n: usize, mut f: impl FnMut(Elem, Elem, Elem) -> Elem) -> Self {
        let mut cells = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    cells.push(f(x, y, z));
                }
            }
        }
        TernTable { n, cells }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn at(&self, x: Elem, y: Elem, z: Elem) -> Elem {
        self.cells[(x * self.n + y) * self.n + z]
    }

    pub fn set(&mut self, x: Elem, y: Elem, z: Elem, v: Elem) {
        self.cells[(x * self.n + y) * self.n + z] = v;
    }

    pub fn permuted(&self, perm: &[Elem]) -> Self {
        let mut out = self.clone();
        for x in 0..self.n {
            for y in 0..self.n {
                for z in 0..self.n {
                    out.set(perm[x], perm[y], perm[z], perm[self.at(x, y, z)]);
                }
            }
        }
        out
    }
}
