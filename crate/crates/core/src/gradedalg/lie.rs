use crate::error::{Error, Result};
use crate::grading::{cocycle_verify, same_context, twist_bicharacter_unchecked, Bicharacter, TwoCocycle};
use crate::linear::GradedVector;
use crate::report::{scan, VerificationReport, VerifyOptions, Witness};
use crate::scalar::{FieldDescriptor, Scalar};

use super::{characteristic_note, grading_check_named, require, BilinearTable, GradedBasis};

/// An (H,β)-Lie algebra for `H = kG`: a graded space with a bracket table
/// and the bicharacter the axioms are taken against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedLieAlgebra {
    bracket: BilinearTable,
    beta: Bicharacter,
}

impl GradedLieAlgebra {
    pub fn new(bracket: BilinearTable, beta: Bicharacter) -> Result<Self> {
        if bracket.left() != bracket.out() || bracket.right() != bracket.out() {
            return Err(Error::BasisMismatch("a bracket must be L ⊗ L → L".into()));
        }
        same_context(bracket.out().group(), bracket.field(), beta.group(), beta.field())?;
        Ok(GradedLieAlgebra { bracket, beta })
    }

    /// The zero bracket on `basis`.
    pub fn abelian(basis: GradedBasis, beta: Bicharacter) -> Result<Self> {
        let field = beta.field();
        GradedLieAlgebra::new(BilinearTable::square(field, basis, [])?, beta)
    }

    pub fn basis(&self) -> &GradedBasis {
        self.bracket.out()
    }

    pub fn bracket(&self) -> &BilinearTable {
        &self.bracket
    }

    pub fn beta(&self) -> &Bicharacter {
        &self.beta
    }

    pub fn field(&self) -> FieldDescriptor {
        self.bracket.field()
    }

    pub fn dim(&self) -> usize {
        self.basis().dim()
    }

    /// `[e_i, e_j]`
    pub fn bracket_basis(&self, i: usize, j: usize) -> GradedVector {
        self.bracket.value(i, j)
    }

    /// `β(deg e_i, deg e_j)`
    pub fn beta_basis(&self, i: usize, j: usize) -> &Scalar {
        let b = self.basis();
        self.beta.at(b.degree_index(i), b.degree_index(j))
    }

    /// Entrywise comparison matched by basis names, for algebras whose bases
    /// list the same names possibly in another order.
    pub fn same_structure(&self, other: &GradedLieAlgebra) -> bool {
        let (a, b) = (self.basis(), other.basis());
        if a.dim() != b.dim() || self.beta != other.beta {
            return false;
        }
        let map: Option<Vec<usize>> = (0..a.dim())
            .map(|i| b.index_of(a.name(i)).filter(|&j| b.degree(j) == a.degree(i)))
            .collect();
        let Some(map) = map else { return false };
        (0..a.dim()).all(|i| {
            (0..a.dim()).all(|j| self.bracket_basis(i, j).map_keys(|k| map[*k]) == other.bracket_basis(map[i], map[j]))
        })
    }
}

/// Grading, β-anticommutativity on all ordered pairs (the diagonal included)
/// and the β-Jacobi identity on all triples:
///
/// * `[a,b] = −β(|a|,|b|) [b,a]`
/// * `[[a,b],c] + β(|a|,|b|+|c|) [[b,c],a] + β(|a|+|b|,|c|) [[c,a],b] = 0`
pub fn lie_verify(lie: &GradedLieAlgebra, opts: &VerifyOptions) -> VerificationReport {
    let basis = lie.basis();
    let table = lie.bracket();
    let group = basis.group();
    let beta = lie.beta();
    let n = basis.dim();
    let mut report = VerificationReport::new();
    characteristic_note(&mut report, lie.field());
    report.push(grading_check_named("grading", table, opts));

    report.push(scan("anticommutativity", n, opts, |i| {
        let mut found = Vec::new();
        for j in 0..n {
            let lhs = table.value(i, j);
            let rhs = table.value(j, i).scaled(&-lie.beta_basis(i, j));
            if lhs != rhs {
                found.push(Witness {
                    at: basis.labels(&[i, j]),
                    indices: vec![i, j],
                    residual: basis.vector_term(&(&lhs - &rhs)),
                    lhs: basis.vector_term(&lhs),
                    rhs: basis.vector_term(&rhs),
                });
            }
        }
        found
    }));

    report.push(scan("jacobi", n, opts, |i| {
        let mut found = Vec::new();
        let di = basis.degree(i);
        for j in 0..n {
            let dj = basis.degree(j);
            let ij = table.value(i, j);
            for k in 0..n {
                let dk = basis.degree(k);
                let mut sum = table.apply_left(&ij, k);
                let c1 = beta.get(di, &group.add(dj, dk));
                sum.add_scaled(&table.apply_left(&table.value(j, k), i), c1);
                let c2 = beta.get(&group.add(di, dj), dk);
                sum.add_scaled(&table.apply_left(&table.value(k, i), j), c2);
                if !sum.is_zero() {
                    let zero = GradedVector::zero();
                    found.push(Witness {
                        at: basis.labels(&[i, j, k]),
                        indices: vec![i, j, k],
                        lhs: basis.vector_term(&sum),
                        rhs: basis.vector_term(&zero),
                        residual: basis.vector_term(&sum),
                    });
                }
            }
        }
        found
    }));
    report
}

/// `[a,b]^σ = σ(|a|,|b|) [a,b]`, an (H,β^σ)-Lie algebra.
pub fn twist_lie(lie: &GradedLieAlgebra, sigma: &TwoCocycle) -> Result<GradedLieAlgebra> {
    same_context(lie.basis().group(), lie.field(), sigma.group(), sigma.field())?;
    let opts = VerifyOptions::default();
    let mut report = lie_verify(lie, &opts);
    report.absorb("beta", crate::grading::bichar_verify(lie.beta(), &opts));
    report.absorb("sigma", cocycle_verify(sigma, &opts));
    require("twist_lie", report)?;
    twist_lie_unchecked(lie, sigma)
}

pub fn twist_lie_unchecked(lie: &GradedLieAlgebra, sigma: &TwoCocycle) -> Result<GradedLieAlgebra> {
    same_context(lie.basis().group(), lie.field(), sigma.group(), sigma.field())?;
    let basis = lie.basis();
    let bracket = lie
        .bracket
        .scale_entries(|i, j| sigma.at(basis.degree_index(i), basis.degree_index(j)).clone());
    GradedLieAlgebra::new(bracket, twist_bicharacter_unchecked(lie.beta(), sigma)?)
}
