//! (H,β)-Lie coalgebras, the β-cocommutator of a comodule coalgebra, and
//! the Lie bialgebra compatibility condition.
//!
//! Cobrackets and coproducts are stored per basis vector as sparse tensors:
//! `δ(e_i) = Σ c · e_j ⊗ e_k`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gradedalg::{characteristic_note, require, GradedBasis, GradedLieAlgebra};
use crate::grading::{bichar_verify, same_context, Bicharacter};
use crate::linear::{GradedVector, Tensor2, Tensor3};
use crate::report::{scan, Check, Term, VerificationReport, VerifyOptions, Witness};
use crate::scalar::{FieldDescriptor, Scalar};

pub(crate) fn tensor2_term(t: &Tensor2, left: &GradedBasis, right: &GradedBasis) -> Term {
    Term::combination(t, |&(j, k)| vec![left.name(j).to_string(), right.name(k).to_string()])
}

fn tensor3_term(t: &Tensor3, basis: &GradedBasis) -> Term {
    Term::combination(t, |&(p, q, r)| {
        vec![
            basis.name(p).to_string(),
            basis.name(q).to_string(),
            basis.name(r).to_string(),
        ]
    })
}

fn validate_tensors(
    field: FieldDescriptor,
    basis: &GradedBasis,
    rows: impl IntoIterator<Item = (usize, Tensor2)>,
) -> Result<BTreeMap<usize, Tensor2>> {
    let dim = basis.dim();
    let check = |index: usize| {
        if index < dim {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index, dim })
        }
    };
    let mut out = BTreeMap::new();
    for (i, t) in rows {
        check(i)?;
        for (&(j, k), c) in t.iter() {
            check(j)?;
            check(k)?;
            if c.field() != field {
                return Err(Error::FieldMismatch(field, c.field()));
            }
        }
        if out.contains_key(&i) {
            return Err(Error::DuplicateName(basis.name(i).to_string()));
        }
        if !t.is_zero() {
            out.insert(i, t);
        }
    }
    Ok(out)
}

fn named_rows(field: FieldDescriptor, basis: &GradedBasis, rows: &[NamedCoRow]) -> Result<Vec<(usize, Tensor2)>> {
    rows.iter()
        .map(|(x, terms)| {
            let t = terms
                .iter()
                .map(|(a, b, c)| Ok(((basis.index(a)?, basis.index(b)?), Scalar::from_i64(field, *c))))
                .collect::<Result<Vec<_>>>()?;
            Ok((basis.index(x)?, Tensor2::from_terms(t)))
        })
        .collect()
}

/// `(x, [(left, right, coeff)])`: one cobracket or coproduct row by name.
pub type NamedCoRow<'a> = (&'a str, &'a [(&'a str, &'a str, i64)]);

/// `δ(e_i) = Σ c · e_j ⊗ e_k`; omitted basis vectors have zero cobracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CobracketTable {
    field: FieldDescriptor,
    basis: GradedBasis,
    entries: BTreeMap<usize, Tensor2>,
}

impl CobracketTable {
    pub fn new(
        field: FieldDescriptor,
        basis: GradedBasis,
        entries: impl IntoIterator<Item = (usize, Tensor2)>,
    ) -> Result<Self> {
        let entries = validate_tensors(field, &basis, entries)?;
        Ok(CobracketTable { field, basis, entries })
    }

    pub fn zero(field: FieldDescriptor, basis: GradedBasis) -> Self {
        CobracketTable {
            field,
            basis,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_named(field: FieldDescriptor, basis: &GradedBasis, rows: &[NamedCoRow]) -> Result<Self> {
        CobracketTable::new(field, basis.clone(), named_rows(field, basis, rows)?)
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn delta(&self, i: usize) -> Tensor2 {
        self.entries.get(&i).cloned().unwrap_or_default()
    }

    pub fn delta_ref(&self, i: usize) -> Option<&Tensor2> {
        self.entries.get(&i)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&usize, &Tensor2)> {
        self.entries.iter()
    }

    /// `δ(v)` by linearity.
    pub fn apply(&self, v: &GradedVector) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (&i, c) in v.iter() {
            if let Some(t) = self.entries.get(&i) {
                out.add_scaled(t, c);
            }
        }
        out
    }
}

/// Graded coalgebra `(C, Δ, ε)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCoalgebra {
    field: FieldDescriptor,
    basis: GradedBasis,
    coproduct: BTreeMap<usize, Tensor2>,
    counit: Vec<Scalar>,
}

impl GradedCoalgebra {
    pub fn new(
        field: FieldDescriptor,
        basis: GradedBasis,
        coproduct: impl IntoIterator<Item = (usize, Tensor2)>,
        counit: Vec<Scalar>,
    ) -> Result<Self> {
        let coproduct = validate_tensors(field, &basis, coproduct)?;
        if counit.len() != basis.dim() {
            return Err(Error::BasisMismatch(format!(
                "counit has {} values for a basis of dimension {}",
                counit.len(),
                basis.dim()
            )));
        }
        if let Some(c) = counit.iter().find(|c| c.field() != field) {
            return Err(Error::FieldMismatch(field, c.field()));
        }
        Ok(GradedCoalgebra {
            field,
            basis,
            coproduct,
            counit,
        })
    }

    pub fn from_named(
        field: FieldDescriptor,
        basis: &GradedBasis,
        rows: &[NamedCoRow],
        counit: &[(&str, i64)],
    ) -> Result<Self> {
        let mut eps = vec![Scalar::zero(field); basis.dim()];
        for (name, c) in counit {
            eps[basis.index(name)?] = Scalar::from_i64(field, *c);
        }
        GradedCoalgebra::new(field, basis.clone(), named_rows(field, basis, rows)?, eps)
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn coproduct(&self, i: usize) -> Tensor2 {
        self.coproduct.get(&i).cloned().unwrap_or_default()
    }

    pub fn coproduct_entries(&self) -> impl Iterator<Item = (&usize, &Tensor2)> {
        self.coproduct.iter()
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }
}

/// `deg_j + deg_k = deg_i` for every nonzero term of `t(e_i)`.
fn tensor_grading_check(id: &str, basis: &GradedBasis, rows: &BTreeMap<usize, Tensor2>, opts: &VerifyOptions) -> Check {
    let group = basis.group();
    scan(id, basis.dim(), opts, |i| {
        let Some(t) = rows.get(&i) else { return Vec::new() };
        let (good, bad): (Vec<_>, Vec<_>) = t
            .iter()
            .map(|(&jk, c)| (jk, c.clone()))
            .partition(|((j, k), _)| &group.add(basis.degree(*j), basis.degree(*k)) == basis.degree(i));
        if bad.is_empty() {
            return Vec::new();
        }
        vec![Witness {
            at: vec![basis.name(i).to_string()],
            indices: vec![i],
            lhs: tensor2_term(t, basis, basis),
            rhs: tensor2_term(&Tensor2::from_terms(good), basis, basis),
            residual: tensor2_term(&Tensor2::from_terms(bad), basis, basis),
        }]
    })
}

/// Grading, `(Δ⊗id)Δ = (id⊗Δ)Δ` and both counit laws on every basis vector.
pub fn coassoc_verify(coalgebra: &GradedCoalgebra, opts: &VerifyOptions) -> VerificationReport {
    let basis = &coalgebra.basis;
    let n = basis.dim();
    let mut report = VerificationReport::new();
    report.push(tensor_grading_check("grading", basis, &coalgebra.coproduct, opts));
    report.push(scan("coassociativity", n, opts, |i| {
        let mut lhs = Tensor3::zero();
        let mut rhs = Tensor3::zero();
        for (&(j, k), c) in coalgebra.coproduct(i).iter() {
            for (&(p, q), d) in coalgebra.coproduct(j).iter() {
                lhs.add_term((p, q, k), &(c * d));
            }
            for (&(p, q), d) in coalgebra.coproduct(k).iter() {
                rhs.add_term((j, p, q), &(c * d));
            }
        }
        if lhs == rhs {
            return Vec::new();
        }
        vec![Witness {
            at: vec![basis.name(i).to_string()],
            indices: vec![i],
            residual: tensor3_term(&(&lhs - &rhs), basis),
            lhs: tensor3_term(&lhs, basis),
            rhs: tensor3_term(&rhs, basis),
        }]
    }));
    for (id, left) in [("counit_left", true), ("counit_right", false)] {
        report.push(scan(id, n, opts, |i| {
            let mut lhs = GradedVector::zero();
            for (&(j, k), c) in coalgebra.coproduct(i).iter() {
                if left {
                    lhs.add_term(k, &(c * &coalgebra.counit[j]));
                } else {
                    lhs.add_term(j, &(c * &coalgebra.counit[k]));
                }
            }
            let rhs = GradedVector::term(i, Scalar::one(coalgebra.field));
            if lhs == rhs {
                return Vec::new();
            }
            vec![Witness {
                at: vec![basis.name(i).to_string()],
                indices: vec![i],
                residual: basis.vector_term(&(&lhs - &rhs)),
                lhs: basis.vector_term(&lhs),
                rhs: basis.vector_term(&rhs),
            }]
        }));
    }
    report
}

fn beta_at(beta: &Bicharacter, basis: &GradedBasis, i: usize, j: usize) -> Scalar {
    beta.at(basis.degree_index(i), basis.degree_index(j)).clone()
}

/// Grading, β-anticocommutativity `δ(a) = −β(|a₁|,|a₂|) a₂⊗a₁`, and the
/// β-co-Jacobi identity: with `(δ⊗id)δ(a) = Σ t₁⊗t₂⊗t₃`,
/// `Σ t₁⊗t₂⊗t₃ + β(|t₁|+|t₂|,|t₃|) t₃⊗t₁⊗t₂ + β(|t₁|,|t₂|+|t₃|) t₂⊗t₃⊗t₁ = 0`.
pub fn colie_verify(delta: &CobracketTable, beta: &Bicharacter, opts: &VerifyOptions) -> Result<VerificationReport> {
    let basis = &delta.basis;
    same_context(basis.group(), delta.field, beta.group(), beta.field())?;
    let group = basis.group();
    let n = basis.dim();
    let mut report = VerificationReport::new();
    characteristic_note(&mut report, delta.field);
    report.push(tensor_grading_check("grading", basis, &delta.entries, opts));

    report.push(scan("anticocommutativity", n, opts, |i| {
        let lhs = delta.delta(i);
        let rhs = Tensor2::from_terms(
            lhs.iter()
                .map(|(&(j, k), c)| ((k, j), -(&beta_at(beta, basis, j, k) * c))),
        );
        if lhs == rhs {
            return Vec::new();
        }
        vec![Witness {
            at: vec![basis.name(i).to_string()],
            indices: vec![i],
            residual: tensor2_term(&(&lhs - &rhs), basis, basis),
            lhs: tensor2_term(&lhs, basis, basis),
            rhs: tensor2_term(&rhs, basis, basis),
        }]
    }));

    report.push(scan("co_jacobi", n, opts, |i| {
        let mut sum = Tensor3::zero();
        for (&(j, k), c) in delta.delta(i).iter() {
            for (&(p, q), d) in delta.delta(j).iter() {
                let x = c * d;
                let (dp, dq, dk) = (basis.degree(p), basis.degree(q), basis.degree(k));
                sum.add_term((p, q, k), &x);
                sum.add_term((k, p, q), &(beta.get(&group.add(dp, dq), dk) * &x));
                sum.add_term((q, k, p), &(beta.get(dp, &group.add(dq, dk)) * &x));
            }
        }
        if sum.is_zero() {
            return Vec::new();
        }
        vec![Witness {
            at: vec![basis.name(i).to_string()],
            indices: vec![i],
            lhs: tensor3_term(&sum, basis),
            rhs: tensor3_term(&Tensor3::zero(), basis),
            residual: tensor3_term(&sum, basis),
        }]
    }));
    Ok(report)
}

/// `δ_β(c) = Σ c₁⊗c₂ − β(|c₁|,|c₂|) c₂⊗c₁`.
pub fn beta_cocommutator(coalgebra: &GradedCoalgebra, beta: &Bicharacter) -> Result<CobracketTable> {
    same_context(coalgebra.basis.group(), coalgebra.field, beta.group(), beta.field())?;
    let opts = VerifyOptions::default();
    let mut report = coassoc_verify(coalgebra, &opts);
    report.absorb("beta", bichar_verify(beta, &opts));
    require("beta_cocommutator", report)?;
    beta_cocommutator_unchecked(coalgebra, beta)
}

pub fn beta_cocommutator_unchecked(coalgebra: &GradedCoalgebra, beta: &Bicharacter) -> Result<CobracketTable> {
    same_context(coalgebra.basis.group(), coalgebra.field, beta.group(), beta.field())?;
    let basis = &coalgebra.basis;
    let rows = coalgebra.coproduct.iter().map(|(&i, t)| {
        let mut out = t.clone();
        for (&(j, k), c) in t.iter() {
            out.add_term((k, j), &-(&beta_at(beta, basis, j, k) * c));
        }
        (i, out)
    });
    CobracketTable::new(coalgebra.field, basis.clone(), rows.collect::<Vec<_>>())
}

/// Right-hand side of the compatibility condition at `(e_i, e_j)`:
/// `[a,b₁]⊗b₂ + β(|a|,|b₁|) b₁⊗[a,b₂] + a₁⊗[a₂,b] + β(|a₂|,|b|) [a₁,b]⊗a₂`.
fn lb_rhs(lie: &GradedLieAlgebra, delta: &CobracketTable, i: usize, j: usize) -> Tensor2 {
    let mut rhs = Tensor2::zero();
    for (&(p, q), c) in delta.delta(j).iter() {
        rhs.add_scaled(&lie.bracket_basis(i, p).tensor_right(q), c);
        rhs.add_scaled(&lie.bracket_basis(i, q).tensor_left(p), &(lie.beta_basis(i, p) * c));
    }
    for (&(p, q), c) in delta.delta(i).iter() {
        rhs.add_scaled(&lie.bracket_basis(q, j).tensor_left(p), c);
        rhs.add_scaled(&lie.bracket_basis(p, j).tensor_right(q), &(lie.beta_basis(q, j) * c));
    }
    rhs
}

/// Lie axioms, Lie coalgebra axioms, and the compatibility condition (LB)
/// `δ([a,b]) = [a,b₁]⊗b₂ + β(|a|,|b₁|) b₁⊗[a,b₂] + a₁⊗[a₂,b] + β(|a₂|,|b|) [a₁,b]⊗a₂`
/// on all basis pairs.
pub fn bialgebra_verify(
    lie: &GradedLieAlgebra,
    delta: &CobracketTable,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    if lie.basis() != delta.basis() {
        return Err(Error::BasisMismatch(
            "Lie algebra and cobracket are on different bases".into(),
        ));
    }
    let mut report = VerificationReport::new();
    report.absorb("lie", crate::gradedalg::lie_verify(lie, opts));
    report.absorb("colie", colie_verify(delta, lie.beta(), opts)?);
    report.push(lb_check(lie, delta, opts));
    Ok(report)
}

pub(crate) fn lb_check(lie: &GradedLieAlgebra, delta: &CobracketTable, opts: &VerifyOptions) -> Check {
    let basis = lie.basis();
    let n = basis.dim();
    scan("LB", n, opts, |i| {
        let mut found = Vec::new();
        for j in 0..n {
            let lhs = delta.apply(&lie.bracket_basis(i, j));
            let rhs = lb_rhs(lie, delta, i, j);
            if lhs != rhs {
                found.push(Witness {
                    at: vec![basis.name(i).to_string(), basis.name(j).to_string()],
                    indices: vec![i, j],
                    residual: tensor2_term(&(&lhs - &rhs), basis, basis),
                    lhs: tensor2_term(&lhs, basis, basis),
                    rhs: tensor2_term(&rhs, basis, basis),
                });
            }
        }
        found
    })
}
