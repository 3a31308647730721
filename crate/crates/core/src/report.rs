//! Verdicts of the class validators.
//!
//! Every check scans its tuples lexicographically over element indices and
//! stops at the first violated law, so a failing [`Report`] is deterministic.

use std::fmt;

use crate::algebra::Algebra;
use crate::Elem;

/// One side of a violated law, as evaluated on the witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Value {
    Elem(Elem),
    Undef,
    Bool(bool),
}

impl From<Elem> for Value {
    fn from(e: Elem) -> Self {
        Value::Elem(e)
    }
}

impl From<Option<Elem>> for Value {
    fn from(e: Option<Elem>) -> Self {
        e.map_or(Value::Undef, Value::Elem)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Short stable label such as `(2)`, `commutativity` or `(15)->`.
    pub law: String,
    pub witness: Vec<Elem>,
    pub lhs: Value,
    pub rhs: Value,
    pub detail: String,
}

impl Violation {
    pub fn new(
        law: impl Into<String>,
        witness: &[Elem],
        lhs: impl Into<Value>,
        rhs: impl Into<Value>,
        detail: impl Into<String>,
    ) -> Self {
        Violation {
            law: law.into(),
            witness: witness.to_vec(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            detail: detail.into(),
        }
    }

    /// A structural failure with no meaningful sides.
    pub fn structural(law: impl Into<String>, witness: &[Elem], detail: impl Into<String>) -> Self {
        Self::new(law, witness, Value::Undef, Value::Undef, detail)
    }

    /// The machine-readable `FAIL axiom=... witness=(...) lhs=... rhs=...` line.
    pub fn fail_line(&self, alg: &Algebra) -> String {
        let witness = self
            .witness
            .iter()
            .map(|&e| alg.label(e))
            .collect::<Vec<_>>()
            .join(",");
        format!(
            "FAIL axiom={} witness=({}) lhs={} rhs={}",
            self.law,
            witness,
            render_value(alg, self.lhs),
            render_value(alg, self.rhs)
        )
    }
}

fn render_value(alg: &Algebra, v: Value) -> String {
    match v {
        Value::Elem(e) => alg.label(e).to_string(),
        Value::Undef => "-".to_string(),
        Value::Bool(b) => b.to_string(),
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "law {} fails at {:?}: {}",
            self.law, self.witness, self.detail
        )
    }
}

/// Pass/fail verdict of a validator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Report {
    Pass,
    Fail(Violation),
}

impl Report {
    pub fn is_pass(&self) -> bool {
        matches!(self, Report::Pass)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Report::Pass => None,
            Report::Fail(v) => Some(v),
        }
    }

    /// Law label of the failure, if any.
    pub fn law(&self) -> Option<&str> {
        self.violation().map(|v| v.law.as_str())
    }

    pub fn into_result(self) -> Result<(), Violation> {
        match self {
            Report::Pass => Ok(()),
            Report::Fail(v) => Err(v),
        }
    }
}

impl From<Result<(), Violation>> for Report {
    fn from(r: Result<(), Violation>) -> Self {
        match r {
            Ok(()) => Report::Pass,
            Err(v) => Report::Fail(v),
        }
    }
}

/// `Ok` unless `lhs != rhs`.
pub(crate) fn expect_eq(
    law: &str,
    witness: &[Elem],
    lhs: impl Into<Value>,
    rhs: impl Into<Value>,
) -> Result<(), Violation> {
    let (lhs, rhs) = (lhs.into(), rhs.into());
    if lhs == rhs {
        Ok(())
    } else {
        Err(Violation::new(law, witness, lhs, rhs, "sides differ"))
    }
}

/// `Ok` when `holds`; otherwise a violation carrying both sides of an
/// inequality `lhs <= rhs`.
pub(crate) fn expect_leq(
    law: &str,
    witness: &[Elem],
    holds: bool,
    lhs: impl Into<Value>,
    rhs: impl Into<Value>,
) -> Result<(), Violation> {
    if holds {
        Ok(())
    } else {
        Err(Violation::new(
            law,
            witness,
            lhs,
            rhs,
            "lhs is not below rhs",
        ))
    }
}
