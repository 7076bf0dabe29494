//! Verification reports with counterexample witnesses.
//!
//! Every verifier scans its whole tuple space for the verdict and keeps at
//! most [`VerifyOptions::witness_cap`] witnesses per check. The scan may run
//! on several threads; witnesses are always merged in lexicographic tuple
//! order, so reports do not depend on the thread count.

use rayon::prelude::*;
use serde::Serialize;

use crate::linear::LinComb;
use crate::scalar::Scalar;

pub const DEFAULT_WITNESS_CAP: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub witness_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            witness_cap: DEFAULT_WITNESS_CAP,
        }
    }
}

impl VerifyOptions {
    /// Keeps every witness. Used when comparing witness sets.
    pub fn exhaustive() -> Self {
        VerifyOptions {
            witness_cap: usize::MAX,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One basis tensor with its coefficient, e.g. `-1 · x⊗a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Component {
    pub basis: Vec<String>,
    pub coeff: Scalar,
}

/// A side of a checked identity: a scalar or a named linear combination.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum Term {
    Scalar(Scalar),
    Combination(Vec<Component>),
}

impl Term {
    pub fn combination<K: Ord + Clone>(comb: &LinComb<K>, mut names: impl FnMut(&K) -> Vec<String>) -> Term {
        Term::Combination(
            comb.iter()
                .map(|(k, c)| Component {
                    basis: names(k),
                    coeff: c.clone(),
                })
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Term::Scalar(s) => s.is_zero(),
            Term::Combination(c) => c.is_empty(),
        }
    }
}

impl std::fmt::Display for Term {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Term::Scalar(s) => write!(f, "{s}"),
            Term::Combination(parts) if parts.is_empty() => f.write_str("0"),
            Term::Combination(parts) => {
                for (n, part) in parts.iter().enumerate() {
                    let coeff = part.coeff.to_string();
                    let (sign, magnitude) = match coeff.strip_prefix('-') {
                        Some(m) => ("-", m.to_string()),
                        None => ("+", coeff),
                    };
                    if n == 0 {
                        if sign == "-" {
                            f.write_str("-")?;
                        }
                    } else {
                        write!(f, " {sign} ")?;
                    }
                    if magnitude != "1" {
                        write!(f, "{magnitude}·")?;
                    }
                    f.write_str(&part.basis.join("⊗"))?;
                }
                Ok(())
            }
        }
    }
}

/// A tuple at which an identity fails, with both sides and `lhs - rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Witness {
    pub at: Vec<String>,
    #[serde(skip)]
    pub indices: Vec<usize>,
    pub lhs: Term,
    pub rhs: Term,
    pub residual: Term,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    /// Number of failing tuples found by the full scan.
    pub failures: usize,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn from_witnesses(id: impl Into<String>, all: Vec<Witness>, opts: &VerifyOptions) -> Check {
        let failures = all.len();
        Check {
            id: id.into(),
            status: if failures == 0 { Status::Pass } else { Status::Fail },
            failures,
            witnesses: all.into_iter().take(opts.witness_cap).collect(),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Check {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        let note = note.into();
        if !self.notes.contains(&note) {
            self.notes.push(note);
        }
    }

    /// Appends `other`'s checks with `prefix.` prepended to their ids.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for mut check in other.checks {
            if !prefix.is_empty() {
                check.id = format!("{prefix}.{}", check.id);
            }
            self.checks.push(check);
        }
        for note in other.notes {
            self.note(note);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failed_ids(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.id.as_str())
            .collect()
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// Runs `f` over `0..outer` (possibly in parallel) and merges the witnesses in
/// index order.
pub(crate) fn scan<F>(id: impl Into<String>, outer: usize, opts: &VerifyOptions, f: F) -> Check
where
    F: Fn(usize) -> Vec<Witness> + Sync + Send,
{
    let cap = opts.witness_cap;
    let per_index: Vec<(usize, Vec<Witness>)> = (0..outer)
        .into_par_iter()
        .map(|i| {
            let mut found = f(i);
            let count = found.len();
            found.truncate(cap);
            (count, found)
        })
        .collect();
    let failures = per_index.iter().map(|(n, _)| n).sum();
    let witnesses = per_index.into_iter().flat_map(|(_, w)| w).take(cap).collect();
    Check {
        id: id.into(),
        status: if failures == 0 { Status::Pass } else { Status::Fail },
        failures,
        witnesses,
        note: None,
    }
}
