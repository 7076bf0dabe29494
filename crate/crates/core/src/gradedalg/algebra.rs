use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::grading::{bichar_verify, cocycle_verify, same_context, Bicharacter, TwoCocycle};
use crate::linear::GradedVector;
use crate::report::{scan, VerificationReport, VerifyOptions, Witness};
use crate::scalar::Scalar;

use super::{grading_check_named, require, BilinearTable, GradedBasis, GradedLieAlgebra};

/// Graded associative algebra (a left `kG`-comodule algebra).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    product: BilinearTable,
    unit: Option<GradedVector>,
}

impl GradedAlgebra {
    pub fn new(product: BilinearTable, unit: Option<GradedVector>) -> Result<Self> {
        if product.left() != product.out() || product.right() != product.out() {
            return Err(Error::BasisMismatch("an algebra product must be V ⊗ V → V".into()));
        }
        if let Some(u) = &unit {
            for (&k, c) in u.iter() {
                if k >= product.out().dim() {
                    return Err(Error::IndexOutOfRange {
                        index: k,
                        dim: product.out().dim(),
                    });
                }
                if c.field() != product.field() {
                    return Err(Error::FieldMismatch(product.field(), c.field()));
                }
            }
        }
        Ok(GradedAlgebra { product, unit })
    }

    pub fn basis(&self) -> &GradedBasis {
        self.product.out()
    }

    pub fn product(&self) -> &BilinearTable {
        &self.product
    }

    pub fn unit(&self) -> Option<&GradedVector> {
        self.unit.as_ref()
    }

    pub fn field(&self) -> crate::scalar::FieldDescriptor {
        self.product.field()
    }
}

/// Grading, associativity on all basis triples, and the unit laws when a unit
/// is present.
pub fn assoc_verify(algebra: &GradedAlgebra, opts: &VerifyOptions) -> VerificationReport {
    let basis = algebra.basis();
    let table = &algebra.product;
    let n = basis.dim();
    let mut report = VerificationReport::new();
    report.push(grading_check_named("grading", table, opts));
    report.push(scan("associativity", n, opts, |i| {
        let mut found = Vec::new();
        for j in 0..n {
            let ij = table.value(i, j);
            for k in 0..n {
                let lhs = table.apply_left(&ij, k);
                let rhs = table.apply_right(i, &table.value(j, k));
                if lhs != rhs {
                    found.push(Witness {
                        at: basis.labels(&[i, j, k]),
                        indices: vec![i, j, k],
                        residual: basis.vector_term(&(&lhs - &rhs)),
                        lhs: basis.vector_term(&lhs),
                        rhs: basis.vector_term(&rhs),
                    });
                }
            }
        }
        found
    }));
    if let Some(unit) = &algebra.unit {
        let identity = basis.group().identity();
        let stray: Vec<Witness> = unit
            .iter()
            .filter(|(&k, _)| basis.degree(k) != &identity)
            .map(|(&k, c)| {
                let v = GradedVector::term(k, c.clone());
                Witness {
                    at: basis.labels(&[k]),
                    indices: vec![k],
                    lhs: basis.vector_term(&v),
                    rhs: basis.vector_term(&GradedVector::zero()),
                    residual: basis.vector_term(&v),
                }
            })
            .collect();
        report.push(crate::report::Check::from_witnesses("unit_degree", stray, opts));
        for (id, left) in [("unit_left", true), ("unit_right", false)] {
            report.push(scan(id, n, opts, |i| {
                let lhs = if left {
                    table.apply_left(unit, i)
                } else {
                    table.apply_right(i, unit)
                };
                let rhs = GradedVector::term(i, Scalar::one(table.field()));
                if lhs == rhs {
                    return Vec::new();
                }
                vec![Witness {
                    at: basis.labels(&[i]),
                    indices: vec![i],
                    residual: basis.vector_term(&(&lhs - &rhs)),
                    lhs: basis.vector_term(&lhs),
                    rhs: basis.vector_term(&rhs),
                }]
            }));
        }
    }
    report
}

/// β-commutator `[a, b]_β = ab − β(|a|,|b|) ba` of a comodule algebra.
pub fn beta_commutator(algebra: &GradedAlgebra, beta: &Bicharacter) -> Result<GradedLieAlgebra> {
    same_context(algebra.basis().group(), algebra.field(), beta.group(), beta.field())?;
    let opts = VerifyOptions::default();
    let mut report = assoc_verify(algebra, &opts);
    report.absorb("beta", bichar_verify(beta, &opts));
    require("beta_commutator", report)?;
    beta_commutator_unchecked(algebra, beta)
}

pub fn beta_commutator_unchecked(algebra: &GradedAlgebra, beta: &Bicharacter) -> Result<GradedLieAlgebra> {
    same_context(algebra.basis().group(), algebra.field(), beta.group(), beta.field())?;
    let basis = algebra.basis();
    let table = &algebra.product;
    let n = basis.dim();
    let mut entries = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            let flip = beta.at(basis.degree_index(i), basis.degree_index(j));
            let mut v = table.value(i, j);
            v.add_scaled(&table.value(j, i), &-flip);
            entries.insert((i, j), v);
        }
    }
    GradedLieAlgebra::new(table.with_entries(entries), beta.clone())
}

/// `a ·^σ b = σ(|a|,|b|) ab`. A unit `u` of `A` becomes `σ(0,0)⁻¹ u`.
pub fn twist_algebra(algebra: &GradedAlgebra, sigma: &TwoCocycle) -> Result<GradedAlgebra> {
    same_context(algebra.basis().group(), algebra.field(), sigma.group(), sigma.field())?;
    let opts = VerifyOptions::default();
    let mut report = assoc_verify(algebra, &opts);
    report.absorb("sigma", cocycle_verify(sigma, &opts));
    require("twist_algebra", report)?;
    twist_algebra_unchecked(algebra, sigma)
}

pub fn twist_algebra_unchecked(algebra: &GradedAlgebra, sigma: &TwoCocycle) -> Result<GradedAlgebra> {
    same_context(algebra.basis().group(), algebra.field(), sigma.group(), sigma.field())?;
    let basis = algebra.basis();
    let product = algebra
        .product
        .scale_entries(|i, j| sigma.at(basis.degree_index(i), basis.degree_index(j)).clone());
    let identity = basis.group().identity();
    let unit = algebra
        .unit
        .as_ref()
        .map(|u| u.scaled(&sigma.get(&identity, &identity).inv()));
    GradedAlgebra::new(product, unit)
}
