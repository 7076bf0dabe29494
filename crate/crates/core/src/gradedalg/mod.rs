//! Graded spaces and bilinear structure-constant tables.
//!
//! A left `kG`-comodule is a `G`-graded space, and the coaction of a
//! homogeneous element `v` is `deg(v) ⊗ v`. Only homogeneous bases are
//! representable, so every β- and σ-factor in the axioms is evaluated on
//! basis degrees.

mod algebra;
mod lie;

use std::collections::BTreeMap;

pub use algebra::{
    assoc_verify, beta_commutator, beta_commutator_unchecked, twist_algebra, twist_algebra_unchecked, GradedAlgebra,
};
pub use lie::{lie_verify, twist_lie, twist_lie_unchecked, GradedLieAlgebra};

use crate::error::{Error, Result};
use crate::grading::{FiniteAbelianGroup, GroupElement};
use crate::linear::GradedVector;
use crate::report::{scan, Check, Term, VerificationReport, VerifyOptions, Witness};
use crate::scalar::{FieldDescriptor, Scalar};

/// Ordered homogeneous basis: unique names, each with a degree in `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    group: FiniteAbelianGroup,
    names: Vec<String>,
    degrees: Vec<GroupElement>,
    degree_index: Vec<usize>,
    lookup: BTreeMap<String, usize>,
}

impl GradedBasis {
    pub fn new<S: Into<String>>(
        group: &FiniteAbelianGroup,
        entries: impl IntoIterator<Item = (S, GroupElement)>,
    ) -> Result<Self> {
        let mut basis = GradedBasis {
            group: group.clone(),
            names: Vec::new(),
            degrees: Vec::new(),
            degree_index: Vec::new(),
            lookup: BTreeMap::new(),
        };
        for (name, degree) in entries {
            basis.push(name.into(), degree)?;
        }
        Ok(basis)
    }

    /// Basis with every vector in degree 0.
    pub fn ungraded<S: Into<String>>(group: &FiniteAbelianGroup, names: impl IntoIterator<Item = S>) -> Result<Self> {
        GradedBasis::new(group, names.into_iter().map(|n| (n, group.identity())))
    }

    fn push(&mut self, name: String, degree: GroupElement) -> Result<()> {
        if !self.group.contains(&degree) {
            return Err(Error::ElementOutOfRange {
                element: degree.residues().iter().map(|&r| r as i64).collect(),
                orders: self.group.orders().to_vec(),
            });
        }
        if self.lookup.contains_key(&name) {
            return Err(Error::DuplicateName(name));
        }
        self.lookup.insert(name.clone(), self.names.len());
        self.degree_index.push(self.group.index_of(&degree));
        self.names.push(name);
        self.degrees.push(degree);
        Ok(())
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degree(&self, i: usize) -> &GroupElement {
        &self.degrees[i]
    }

    /// Flat group index of `deg(e_i)`, for table lookups.
    pub fn degree_index(&self, i: usize) -> usize {
        self.degree_index[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.lookup.get(name).copied()
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &GroupElement)> {
        self.names.iter().map(String::as_str).zip(&self.degrees)
    }

    /// `self` followed by `other`; names must stay unique.
    pub fn concat(&self, other: &GradedBasis) -> Result<GradedBasis> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(
                self.group.orders().to_vec(),
                other.group.orders().to_vec(),
            ));
        }
        let mut out = self.clone();
        for (name, degree) in other.iter() {
            out.push(name.to_string(), degree.clone())?;
        }
        Ok(out)
    }

    /// Sub-basis on the given indices, in the given order.
    pub fn restrict(&self, indices: &[usize]) -> GradedBasis {
        GradedBasis::new(
            &self.group,
            indices
                .iter()
                .map(|&i| (self.names[i].clone(), self.degrees[i].clone())),
        )
        .expect("sub-basis of a valid basis")
    }

    /// Named form of `v` for reports.
    pub fn vector_term(&self, v: &GradedVector) -> Term {
        Term::combination(v, |&k| vec![self.names[k].clone()])
    }

    fn labels(&self, indices: &[usize]) -> Vec<String> {
        indices.iter().map(|&i| self.names[i].clone()).collect()
    }
}

/// `(x, y, [(out, coeff)])`: one table entry written with basis names.
pub type NamedEntry<'a> = (&'a str, &'a str, &'a [(&'a str, i64)]);

/// Structure constants of a bilinear map `V ⊗ W → U` on homogeneous bases.
/// Omitted pairs are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearTable {
    field: FieldDescriptor,
    left: GradedBasis,
    right: GradedBasis,
    out: GradedBasis,
    entries: BTreeMap<(usize, usize), GradedVector>,
}

impl BilinearTable {
    pub fn new(
        field: FieldDescriptor,
        left: GradedBasis,
        right: GradedBasis,
        out: GradedBasis,
        entries: impl IntoIterator<Item = ((usize, usize), GradedVector)>,
    ) -> Result<Self> {
        if left.group != out.group || right.group != out.group {
            return Err(Error::BasisMismatch(
                "table bases are graded by different groups".into(),
            ));
        }
        let mut table = BilinearTable {
            field,
            left,
            right,
            out,
            entries: BTreeMap::new(),
        };
        for ((i, j), v) in entries {
            table.check_index(i, table.left.dim())?;
            table.check_index(j, table.right.dim())?;
            for (&k, c) in v.iter() {
                table.check_index(k, table.out.dim())?;
                if c.field() != field {
                    return Err(Error::FieldMismatch(field, c.field()));
                }
            }
            if table.entries.contains_key(&(i, j)) {
                return Err(Error::DuplicateEntry {
                    what: "structure constant",
                    x: table.left.name(i).to_string(),
                    y: table.right.name(j).to_string(),
                });
            }
            if !v.is_zero() {
                table.entries.insert((i, j), v);
            }
        }
        Ok(table)
    }

    /// Table over a single basis, `V ⊗ V → V`.
    pub fn square(
        field: FieldDescriptor,
        basis: GradedBasis,
        entries: impl IntoIterator<Item = ((usize, usize), GradedVector)>,
    ) -> Result<Self> {
        BilinearTable::new(field, basis.clone(), basis.clone(), basis, entries)
    }

    /// Builds a table over a single basis from entries given by name.
    pub fn from_named(field: FieldDescriptor, basis: &GradedBasis, entries: &[NamedEntry]) -> Result<Self> {
        BilinearTable::from_named_on(field, basis, basis, basis, entries)
    }

    pub fn from_named_on(
        field: FieldDescriptor,
        left: &GradedBasis,
        right: &GradedBasis,
        out: &GradedBasis,
        entries: &[NamedEntry],
    ) -> Result<Self> {
        let mut rows = Vec::with_capacity(entries.len());
        for (x, y, terms) in entries {
            let v = terms
                .iter()
                .map(|(n, c)| Ok((out.index(n)?, Scalar::from_i64(field, *c))))
                .collect::<Result<Vec<_>>>()?;
            rows.push(((left.index(x)?, right.index(y)?), GradedVector::from_terms(v)));
        }
        BilinearTable::new(field, left.clone(), right.clone(), out.clone(), rows)
    }

    fn check_index(&self, index: usize, dim: usize) -> Result<()> {
        if index < dim {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index, dim })
        }
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn left(&self) -> &GradedBasis {
        &self.left
    }

    pub fn right(&self) -> &GradedBasis {
        &self.right
    }

    pub fn out(&self) -> &GradedBasis {
        &self.out
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&GradedVector> {
        self.entries.get(&(i, j))
    }

    /// `T(e_i, e_j)`, zero when omitted.
    pub fn value(&self, i: usize, j: usize) -> GradedVector {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Nonzero entries in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &GradedVector)> {
        self.entries.iter()
    }

    /// `T(v, e_j)`
    pub fn apply_left(&self, v: &GradedVector, j: usize) -> GradedVector {
        let mut out = GradedVector::zero();
        for (&m, c) in v.iter() {
            if let Some(t) = self.entries.get(&(m, j)) {
                out.add_scaled(t, c);
            }
        }
        out
    }

    /// `T(e_i, v)`
    pub fn apply_right(&self, i: usize, v: &GradedVector) -> GradedVector {
        let mut out = GradedVector::zero();
        for (&m, c) in v.iter() {
            if let Some(t) = self.entries.get(&(i, m)) {
                out.add_scaled(t, c);
            }
        }
        out
    }

    /// `T(x, y)` for arbitrary vectors.
    pub fn apply(&self, x: &GradedVector, y: &GradedVector) -> GradedVector {
        let mut out = GradedVector::zero();
        for (&i, a) in x.iter() {
            for (&j, b) in y.iter() {
                if let Some(t) = self.entries.get(&(i, j)) {
                    out.add_scaled(t, &(a * b));
                }
            }
        }
        out
    }

    /// Rescales every entry `(i, j)` by `f(i, j)`.
    pub(crate) fn scale_entries(&self, f: impl Fn(usize, usize) -> Scalar) -> BilinearTable {
        let mut out = self.clone();
        out.entries = self
            .entries
            .iter()
            .map(|(&(i, j), v)| ((i, j), v.scaled(&f(i, j))))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        out
    }

    pub(crate) fn with_entries(&self, entries: BTreeMap<(usize, usize), GradedVector>) -> BilinearTable {
        let mut out = self.clone();
        out.entries = entries.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        out
    }

    pub(crate) fn pair_labels(&self, i: usize, j: usize) -> Vec<String> {
        vec![self.left.name(i).to_string(), self.right.name(j).to_string()]
    }
}

/// Degree additivity: every nonzero component `k` of `T(e_i, e_j)` has
/// `deg_k = deg_i + deg_j`.
pub fn grading_check(table: &BilinearTable, opts: &VerifyOptions) -> VerificationReport {
    let mut report = VerificationReport::new();
    report.push(grading_check_named("grading", table, opts));
    report
}

pub(crate) fn grading_check_named(id: &str, table: &BilinearTable, opts: &VerifyOptions) -> Check {
    let group = table.out.group();
    scan(id, table.left.dim(), opts, |i| {
        let mut found = Vec::new();
        for j in 0..table.right.dim() {
            let Some(v) = table.get(i, j) else { continue };
            let target = group.add(table.left.degree(i), table.right.degree(j));
            let (good, bad): (Vec<_>, Vec<_>) = v
                .iter()
                .map(|(&k, c)| (k, c.clone()))
                .partition(|(k, _)| table.out.degree(*k) == &target);
            if !bad.is_empty() {
                found.push(Witness {
                    at: table.pair_labels(i, j),
                    indices: vec![i, j],
                    lhs: table.out.vector_term(v),
                    rhs: table.out.vector_term(&GradedVector::from_terms(good)),
                    residual: table.out.vector_term(&GradedVector::from_terms(bad)),
                });
            }
        }
        found
    })
}

pub(crate) fn require(operation: &'static str, report: VerificationReport) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::Precondition {
            operation,
            report: Box::new(report),
        })
    }
}

pub(crate) fn characteristic_note(report: &mut VerificationReport, field: FieldDescriptor) {
    let p = field.characteristic();
    if p == 2 || p == 3 {
        report.note(format!(
            "characteristic {p}: anticommutativity and Jacobi-type identities lose their classical strength"
        ));
    }
}
