//! Finite join-semilattices with sectional structure, implication
//! semilattices, relatively residuated semilattices and the ternary-operation
//! varieties that encode them, together with congruence analysis and
//! exhaustive model search over small universes.
//!
//! Elements of an algebra are the indices `0..n`; labels are kept alongside
//! for reading and printing.

pub mod algebra;
pub mod congruence;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod implication;
pub mod order;
pub mod par;
pub mod report;
pub mod residuated;
pub mod search;
pub mod sectioned;
pub mod table;
pub mod varieties;

/// An element of a finite algebra, as an index into its universe.
pub type Elem = usize;

pub use algebra::{Algebra, ClassTag, Op, Universe};
pub use error::{Error, ParseError, Result};
pub use format::{parse_algebra, parse_algebra_lenient, render_tables, serialize};
pub use report::{Report, Value, Violation};
pub use table::{BinTable, TernTable};
