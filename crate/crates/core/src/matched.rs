//! Actions, matched pairs, the double cross sum `A ⋈ H` and its cobracket,
//! and cocycle twists of matched pairs.
//!
//! In the double cross sum the A-basis comes first, so `a_i` has combined
//! index `i` and `h_p` has index `dim A + p`.

use std::collections::BTreeMap;

use crate::colie::{bialgebra_verify, tensor2_term, CobracketTable};
use crate::error::{Error, Result};
use crate::gradedalg::{
    lie_verify, require, twist_lie_unchecked, BilinearTable, GradedBasis, GradedLieAlgebra, NamedEntry,
};
use crate::grading::{cocycle_verify, same_context, Bicharacter, TwoCocycle};
use crate::linear::{GradedVector, Tensor2};
use crate::report::{scan, Check, Term, VerificationReport, VerifyOptions, Witness};
use crate::scalar::{FieldDescriptor, Scalar};

pub const RIGHT_MODULE_NOTE: &str = "axiom RM (artifact convention): h◁[a,b] = (h◁a)◁b − β(|a|,|b|)(h◁b)◁a";

/// `▷: H ⊗ A → A`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftAction {
    table: BilinearTable,
}

/// `◁: H ⊗ A → H`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightAction {
    table: BilinearTable,
}

macro_rules! action_common {
    ($ty:ident, $target:ident) => {
        impl $ty {
            pub fn zero(field: FieldDescriptor, h: &GradedBasis, a: &GradedBasis) -> Result<Self> {
                $ty::new(BilinearTable::new(
                    field,
                    h.clone(),
                    a.clone(),
                    $target(h, a).clone(),
                    [],
                )?)
            }

            /// Entries `(h, a, value)` by name.
            pub fn from_named(
                field: FieldDescriptor,
                h: &GradedBasis,
                a: &GradedBasis,
                entries: &[NamedEntry],
            ) -> Result<Self> {
                $ty::new(BilinearTable::from_named_on(field, h, a, $target(h, a), entries)?)
            }

            pub fn table(&self) -> &BilinearTable {
                &self.table
            }

            pub fn h_basis(&self) -> &GradedBasis {
                self.table.left()
            }

            pub fn a_basis(&self) -> &GradedBasis {
                self.table.right()
            }

            /// Action of `h_p` on `a_i`.
            pub fn act(&self, p: usize, i: usize) -> GradedVector {
                self.table.value(p, i)
            }

            pub fn is_zero(&self) -> bool {
                self.table.entries().next().is_none()
            }
        }
    };
}

fn a_of<'a>(_h: &'a GradedBasis, a: &'a GradedBasis) -> &'a GradedBasis {
    a
}

fn h_of<'a>(h: &'a GradedBasis, _a: &'a GradedBasis) -> &'a GradedBasis {
    h
}

action_common!(LeftAction, a_of);
action_common!(RightAction, h_of);

impl LeftAction {
    /// The table must be `H ⊗ A → A`.
    pub fn new(table: BilinearTable) -> Result<Self> {
        if table.out() != table.right() {
            return Err(Error::BasisMismatch("a left action must land in A".into()));
        }
        Ok(LeftAction { table })
    }
}

impl RightAction {
    /// The table must be `H ⊗ A → H`.
    pub fn new(table: BilinearTable) -> Result<Self> {
        if table.out() != table.left() {
            return Err(Error::BasisMismatch("a right action must land in H".into()));
        }
        Ok(RightAction { table })
    }
}

/// Two (H,β)-Lie algebras over the same β with actions on each other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    a: GradedLieAlgebra,
    h: GradedLieAlgebra,
    left: LeftAction,
    right: RightAction,
}

impl MatchedPair {
    pub fn new(a: GradedLieAlgebra, h: GradedLieAlgebra, left: LeftAction, right: RightAction) -> Result<Self> {
        same_context(a.basis().group(), a.field(), h.basis().group(), h.field())?;
        if a.beta() != h.beta() {
            return Err(Error::BasisMismatch("A and H carry different bicharacters".into()));
        }
        for (table, what) in [(left.table(), "left action"), (right.table(), "right action")] {
            if table.field() != a.field() {
                return Err(Error::FieldMismatch(a.field(), table.field()));
            }
            if table.left() != h.basis() || table.right() != a.basis() {
                return Err(Error::BasisMismatch(format!("{what} is not defined on H ⊗ A")));
            }
        }
        Ok(MatchedPair { a, h, left, right })
    }

    /// `◁ = 0`.
    pub fn semidirect(a: GradedLieAlgebra, h: GradedLieAlgebra, left: LeftAction) -> Result<Self> {
        let right = RightAction::zero(a.field(), h.basis(), a.basis())?;
        MatchedPair::new(a, h, left, right)
    }

    /// `▷ = 0` and `◁ = 0`: the direct sum.
    pub fn direct_sum(a: GradedLieAlgebra, h: GradedLieAlgebra) -> Result<Self> {
        let left = LeftAction::zero(a.field(), h.basis(), a.basis())?;
        MatchedPair::semidirect(a, h, left)
    }

    pub fn a(&self) -> &GradedLieAlgebra {
        &self.a
    }

    pub fn h(&self) -> &GradedLieAlgebra {
        &self.h
    }

    pub fn beta(&self) -> &Bicharacter {
        self.a.beta()
    }

    pub fn field(&self) -> FieldDescriptor {
        self.a.field()
    }

    pub fn left(&self) -> &LeftAction {
        &self.left
    }

    pub fn right(&self) -> &RightAction {
        &self.right
    }
}

/// A matched pair whose components carry cobrackets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CobrackedPair {
    pair: MatchedPair,
    delta_a: CobracketTable,
    delta_h: CobracketTable,
}

impl CobrackedPair {
    pub fn new(pair: MatchedPair, delta_a: CobracketTable, delta_h: CobracketTable) -> Result<Self> {
        if delta_a.basis() != pair.a.basis() || delta_h.basis() != pair.h.basis() {
            return Err(Error::BasisMismatch(
                "cobrackets must live on the bases of A and H".into(),
            ));
        }
        if delta_a.field() != pair.field() || delta_h.field() != pair.field() {
            return Err(Error::FieldMismatch(pair.field(), delta_a.field()));
        }
        Ok(CobrackedPair { pair, delta_a, delta_h })
    }

    pub fn pair(&self) -> &MatchedPair {
        &self.pair
    }

    pub fn delta_a(&self) -> &CobracketTable {
        &self.delta_a
    }

    pub fn delta_h(&self) -> &CobracketTable {
        &self.delta_h
    }
}

/// `β(deg x_i, deg y_j)` across two bases.
fn beta_of<'a>(beta: &'a Bicharacter, x: &GradedBasis, i: usize, y: &GradedBasis, j: usize) -> &'a Scalar {
    beta.at(x.degree_index(i), y.degree_index(j))
}

fn witness(at: Vec<String>, indices: Vec<usize>, out: &GradedBasis, lhs: &GradedVector, rhs: &GradedVector) -> Witness {
    Witness {
        at,
        indices,
        residual: out.vector_term(&(lhs - rhs)),
        lhs: out.vector_term(lhs),
        rhs: out.vector_term(rhs),
    }
}

fn names(parts: &[(&GradedBasis, usize)]) -> Vec<String> {
    parts.iter().map(|(b, i)| b.name(*i).to_string()).collect()
}

fn check_lie_on(lie: &GradedLieAlgebra, basis: &GradedBasis, what: &str) -> Result<()> {
    if lie.basis() != basis {
        return Err(Error::BasisMismatch(format!("{what} basis does not match the action")));
    }
    Ok(())
}

/// Grading of `▷` and the left module axiom
/// `[h,g]▷a = h▷(g▷a) − β(|h|,|g|) g▷(h▷a)` on all `(h, g, a)`.
pub fn left_module_verify(h: &GradedLieAlgebra, left: &LeftAction, opts: &VerifyOptions) -> Result<VerificationReport> {
    check_lie_on(h, left.h_basis(), "H")?;
    let t = left.table();
    let (hb, ab) = (left.h_basis(), left.a_basis());
    let mut report = VerificationReport::new();
    report.push(crate::gradedalg::grading_check_named("grading", t, opts));
    report.push(scan("module", hb.dim(), opts, |p| {
        let mut found = Vec::new();
        for q in 0..hb.dim() {
            let hg = h.bracket_basis(p, q);
            let beta = h.beta_basis(p, q);
            for i in 0..ab.dim() {
                let lhs = t.apply_left(&hg, i);
                let mut rhs = t.apply_right(p, &left.act(q, i));
                rhs.add_scaled(&t.apply_right(q, &left.act(p, i)), &-beta);
                if lhs != rhs {
                    found.push(witness(
                        names(&[(hb, p), (hb, q), (ab, i)]),
                        vec![p, q, i],
                        ab,
                        &lhs,
                        &rhs,
                    ));
                }
            }
        }
        found
    }));
    Ok(report)
}

/// Grading of `◁` and the right module axiom
/// `h◁[a,b] = (h◁a)◁b − β(|a|,|b|)(h◁b)◁a` on all `(h, a, b)`.
pub fn right_module_verify(
    a: &GradedLieAlgebra,
    right: &RightAction,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    check_lie_on(a, right.a_basis(), "A")?;
    let t = right.table();
    let (hb, ab) = (right.h_basis(), right.a_basis());
    let mut report = VerificationReport::new();
    report.push(crate::gradedalg::grading_check_named("grading", t, opts));
    let check = scan("module", hb.dim(), opts, |p| {
        let mut found = Vec::new();
        for i in 0..ab.dim() {
            let hi = right.act(p, i);
            for j in 0..ab.dim() {
                let lhs = t.apply_right(p, &a.bracket_basis(i, j));
                let mut rhs = t.apply_left(&hi, j);
                rhs.add_scaled(&t.apply_left(&right.act(p, j), i), &-a.beta_basis(i, j));
                if lhs != rhs {
                    found.push(witness(
                        names(&[(hb, p), (ab, i), (ab, j)]),
                        vec![p, i, j],
                        hb,
                        &lhs,
                        &rhs,
                    ));
                }
            }
        }
        found
    });
    report.push(check.with_note(RIGHT_MODULE_NOTE));
    Ok(report)
}

/// `h▷[a,b] = [h▷a,b] + β(|h|,|a|)[a,h▷b]` on all `(h, a, b)`.
pub fn module_lie_algebra_verify(
    left: &LeftAction,
    a: &GradedLieAlgebra,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    check_lie_on(a, left.a_basis(), "A")?;
    let t = left.table();
    let br = a.bracket();
    let (hb, ab) = (left.h_basis(), left.a_basis());
    let beta = a.beta();
    let mut report = VerificationReport::new();
    report.push(scan("module_lie_algebra", hb.dim(), opts, |p| {
        let mut found = Vec::new();
        for i in 0..ab.dim() {
            let hi = left.act(p, i);
            for j in 0..ab.dim() {
                let lhs = t.apply_right(p, &a.bracket_basis(i, j));
                let mut rhs = br.apply_left(&hi, j);
                rhs.add_scaled(&br.apply_right(i, &left.act(p, j)), beta_of(beta, hb, p, ab, i));
                if lhs != rhs {
                    found.push(witness(
                        names(&[(hb, p), (ab, i), (ab, j)]),
                        vec![p, i, j],
                        ab,
                        &lhs,
                        &rhs,
                    ));
                }
            }
        }
        found
    }));
    Ok(report)
}

fn tensor_witness(
    at: Vec<String>,
    indices: Vec<usize>,
    l: &GradedBasis,
    r: &GradedBasis,
    lhs: &Tensor2,
    rhs: &Tensor2,
) -> Witness {
    Witness {
        at,
        indices,
        residual: tensor2_term(&(lhs - rhs), l, r),
        lhs: tensor2_term(lhs, l, r),
        rhs: tensor2_term(rhs, l, r),
    }
}

/// `δ(h▷a) = (h▷a₁)⊗a₂ + β(|h|,|a₁|) a₁⊗(h▷a₂)` on all `(h, a)`.
pub fn module_lie_coalgebra_verify(
    left: &LeftAction,
    delta_a: &CobracketTable,
    beta: &Bicharacter,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    if delta_a.basis() != left.a_basis() {
        return Err(Error::BasisMismatch("cobracket of A does not match the action".into()));
    }
    let (hb, ab) = (left.h_basis(), left.a_basis());
    let mut report = VerificationReport::new();
    report.push(scan("module_lie_coalgebra", hb.dim(), opts, |p| {
        let mut found = Vec::new();
        for i in 0..ab.dim() {
            let lhs = delta_a.apply(&left.act(p, i));
            let mut rhs = Tensor2::zero();
            for (&(q, r), c) in delta_a.delta(i).iter() {
                rhs.add_scaled(&left.act(p, q).tensor_right(r), c);
                rhs.add_scaled(&left.act(p, r).tensor_left(q), &(beta_of(beta, hb, p, ab, q) * c));
            }
            if lhs != rhs {
                found.push(tensor_witness(
                    names(&[(hb, p), (ab, i)]),
                    vec![p, i],
                    ab,
                    ab,
                    &lhs,
                    &rhs,
                ));
            }
        }
        found
    }));
    Ok(report)
}

/// Mirror image for `◁`: `δ(h◁a) = h₁⊗(h₂◁a) + β(|h₂|,|a|)(h₁◁a)⊗h₂` on all `(h, a)`.
pub fn module_lie_coalgebra_right_verify(
    right: &RightAction,
    delta_h: &CobracketTable,
    beta: &Bicharacter,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    if delta_h.basis() != right.h_basis() {
        return Err(Error::BasisMismatch("cobracket of H does not match the action".into()));
    }
    let (hb, ab) = (right.h_basis(), right.a_basis());
    let mut report = VerificationReport::new();
    report.push(scan("module_lie_coalgebra_right", hb.dim(), opts, |p| {
        let mut found = Vec::new();
        for i in 0..ab.dim() {
            let lhs = delta_h.apply(&right.act(p, i));
            let mut rhs = Tensor2::zero();
            for (&(q, r), c) in delta_h.delta(p).iter() {
                rhs.add_scaled(&right.act(r, i).tensor_left(q), c);
                rhs.add_scaled(&right.act(q, i).tensor_right(r), &(beta_of(beta, hb, r, ab, i) * c));
            }
            if lhs != rhs {
                found.push(tensor_witness(
                    names(&[(hb, p), (ab, i)]),
                    vec![p, i],
                    hb,
                    hb,
                    &lhs,
                    &rhs,
                ));
            }
        }
        found
    }));
    Ok(report)
}

pub(crate) fn bb1_check(pair: &MatchedPair, opts: &VerifyOptions) -> Check {
    let (a, left, right) = (&pair.a, &pair.left, &pair.right);
    let (hb, ab) = (pair.h.basis(), a.basis());
    let (br, lt) = (a.bracket(), left.table());
    let beta = pair.beta();
    scan("BB1", hb.dim(), opts, |p| {
        let mut found = Vec::new();
        for i in 0..ab.dim() {
            let hi = left.act(p, i);
            let ri = right.act(p, i);
            let bhi = beta_of(beta, hb, p, ab, i);
            for j in 0..ab.dim() {
                let lhs = lt.apply_right(p, &a.bracket_basis(i, j));
                let mut rhs = br.apply_left(&hi, j);
                rhs.add_scaled(&br.apply_right(i, &left.act(p, j)), bhi);
                rhs = &rhs + &lt.apply_left(&ri, j);
                rhs.add_scaled(&lt.apply_left(&right.act(p, j), i), &-a.beta_basis(i, j));
                if lhs != rhs {
                    found.push(witness(
                        names(&[(hb, p), (ab, i), (ab, j)]),
                        vec![p, i, j],
                        ab,
                        &lhs,
                        &rhs,
                    ));
                }
            }
        }
        found
    })
}

pub(crate) fn bb2_check(pair: &MatchedPair, opts: &VerifyOptions) -> Check {
    let (h, left, right) = (&pair.h, &pair.left, &pair.right);
    let (hb, ab) = (h.basis(), pair.a.basis());
    let (br, rt) = (h.bracket(), right.table());
    let beta = pair.beta();
    scan("BB2", hb.dim(), opts, |p| {
        let mut found = Vec::new();
        for q in 0..hb.dim() {
            let hg = h.bracket_basis(p, q);
            let bhg = h.beta_basis(p, q);
            for i in 0..ab.dim() {
                let lhs = rt.apply_left(&hg, i);
                let mut rhs = br.apply_right(p, &right.act(q, i));
                rhs.add_scaled(&br.apply_left(&right.act(p, i), q), beta_of(beta, hb, q, ab, i));
                rhs = &rhs + &rt.apply_right(p, &left.act(q, i));
                rhs.add_scaled(&rt.apply_right(q, &left.act(p, i)), &-bhg);
                if lhs != rhs {
                    found.push(witness(
                        names(&[(hb, p), (hb, q), (ab, i)]),
                        vec![p, q, i],
                        hb,
                        &lhs,
                        &rhs,
                    ));
                }
            }
        }
        found
    })
}

/// `h▷[a,b] = [h▷a,b] + β(|h|,|a|)[a,h▷b] + (h◁a)▷b − β(|a|,|b|)(h◁b)▷a`
/// on all `(h, a, b)`.
pub fn bb1_verify(pair: &MatchedPair, opts: &VerifyOptions) -> VerificationReport {
    let mut report = VerificationReport::new();
    report.push(bb1_check(pair, opts));
    report
}

/// `[h,g]◁a = [h,g◁a] + β(|g|,|a|)[h◁a,g] + h◁(g▷a) − β(|h|,|g|) g◁(h▷a)`
/// on all `(h, g, a)`.
pub fn bb2_verify(pair: &MatchedPair, opts: &VerifyOptions) -> VerificationReport {
    let mut report = VerificationReport::new();
    report.push(bb2_check(pair, opts));
    report
}

/// `Σ h₁⊗(h₂▷a) + Σ (h◁a₁)⊗a₂ = 0` in `H⊗A` on all `(h, a)`.
pub fn bb3_verify(cp: &CobrackedPair, opts: &VerifyOptions) -> VerificationReport {
    let pair = &cp.pair;
    let (hb, ab) = (pair.h.basis(), pair.a.basis());
    let mut report = VerificationReport::new();
    report.push(scan("BB3", hb.dim(), opts, |p| {
        let mut found = Vec::new();
        for i in 0..ab.dim() {
            let mut sum = Tensor2::zero();
            for (&(q, r), c) in cp.delta_h.delta(p).iter() {
                sum.add_scaled(&pair.left.act(r, i).tensor_left(q), c);
            }
            for (&(q, r), c) in cp.delta_a.delta(i).iter() {
                sum.add_scaled(&pair.right.act(p, q).tensor_right(r), c);
            }
            if !sum.is_zero() {
                found.push(tensor_witness(
                    names(&[(hb, p), (ab, i)]),
                    vec![p, i],
                    hb,
                    ab,
                    &sum,
                    &Tensor2::zero(),
                ));
            }
        }
        found
    }));
    report
}

/// Lie axioms on both sides, both module axioms with grading, BB1 and BB2.
pub fn matched_verify(pair: &MatchedPair, opts: &VerifyOptions) -> VerificationReport {
    let mut report = VerificationReport::new();
    report.absorb("A", lie_verify(&pair.a, opts));
    report.absorb("H", lie_verify(&pair.h, opts));
    report.absorb(
        "left",
        left_module_verify(&pair.h, &pair.left, opts).expect("bases checked by MatchedPair"),
    );
    report.absorb(
        "right",
        right_module_verify(&pair.a, &pair.right, opts).expect("bases checked by MatchedPair"),
    );
    report.push(bb1_check(pair, opts));
    report.push(bb2_check(pair, opts));
    report
}

/// `A ⋈ H` on the basis `A ++ H` with `[h,a] = h▷a + h◁a` and
/// `[a,h] = −β(|a|,|h|)(h▷a + h◁a)`.
pub fn double_cross_sum(pair: &MatchedPair) -> Result<GradedLieAlgebra> {
    require("double_cross_sum", matched_verify(pair, &VerifyOptions::default()))?;
    double_cross_sum_unchecked(pair)
}

pub fn double_cross_sum_unchecked(pair: &MatchedPair) -> Result<GradedLieAlgebra> {
    let (ab, hb) = (pair.a.basis(), pair.h.basis());
    let basis = ab.concat(hb)?;
    let n = ab.dim();
    let shift = |v: &GradedVector| v.map_keys(|&k| k + n);
    let mut entries = BTreeMap::new();
    for (&(i, j), v) in pair.a.bracket().entries() {
        entries.insert((i, j), v.clone());
    }
    for (&(p, q), v) in pair.h.bracket().entries() {
        entries.insert((n + p, n + q), shift(v));
    }
    for p in 0..hb.dim() {
        for i in 0..n {
            let mixed = &pair.left.act(p, i) + &shift(&pair.right.act(p, i));
            if mixed.is_zero() {
                continue;
            }
            let flip = -beta_of(pair.beta(), ab, i, hb, p);
            entries.insert((i, n + p), mixed.scaled(&flip));
            entries.insert((n + p, i), mixed);
        }
    }
    let table = BilinearTable::square(pair.field(), basis, entries)?;
    GradedLieAlgebra::new(table, pair.beta().clone())
}

fn dcs_bialgebra_preconditions(cp: &CobrackedPair, opts: &VerifyOptions) -> Result<VerificationReport> {
    let pair = &cp.pair;
    let mut report = VerificationReport::new();
    report.absorb("matched", matched_verify(pair, opts));
    report.absorb("", bb3_verify(cp, opts));
    report.absorb(
        "left",
        module_lie_coalgebra_verify(&pair.left, &cp.delta_a, pair.beta(), opts)?,
    );
    report.absorb(
        "right",
        module_lie_coalgebra_right_verify(&pair.right, &cp.delta_h, pair.beta(), opts)?,
    );
    report.absorb("A", bialgebra_verify(&pair.a, &cp.delta_a, opts)?);
    report.absorb("H", bialgebra_verify(&pair.h, &cp.delta_h, opts)?);
    Ok(report)
}

/// `A ⋈ H` with the block-diagonal cobracket `δ_A ⊕ δ_H`.
pub fn dcs_bialgebra(cp: &CobrackedPair) -> Result<(GradedLieAlgebra, CobracketTable)> {
    require(
        "dcs_bialgebra",
        dcs_bialgebra_preconditions(cp, &VerifyOptions::default())?,
    )?;
    dcs_bialgebra_unchecked(cp)
}

pub fn dcs_bialgebra_unchecked(cp: &CobrackedPair) -> Result<(GradedLieAlgebra, CobracketTable)> {
    let lie = double_cross_sum_unchecked(&cp.pair)?;
    let n = cp.pair.a.dim();
    let rows = cp
        .delta_a
        .entries()
        .map(|(&i, t)| (i, t.clone()))
        .chain(
            cp.delta_h
                .entries()
                .map(|(&p, t)| (n + p, t.map_keys(|&(q, r)| (n + q, n + r)))),
        )
        .collect::<Vec<_>>();
    let delta = CobracketTable::new(lie.field(), lie.basis().clone(), rows)?;
    Ok((lie, delta))
}

/// Reads a matched pair off a decomposition `L = A ⊕ H` into two
/// subalgebras: `h▷a` and `h◁a` are the A- and H-components of `[h,a]`.
pub fn split_from_decomposition(lie: &GradedLieAlgebra, a_part: &[usize], h_part: &[usize]) -> Result<MatchedPair> {
    let basis = lie.basis();
    let n = basis.dim();
    let mut side = vec![None; n];
    for (part, tag) in [(a_part, 0usize), (h_part, 1)] {
        for &i in part {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, dim: n });
            }
            if side[i].replace(tag).is_some() {
                return Err(Error::InvalidPartition(format!("{} is listed twice", basis.name(i))));
            }
        }
    }
    if let Some(i) = side.iter().position(Option::is_none) {
        return Err(Error::InvalidPartition(format!("{} is in neither part", basis.name(i))));
    }
    let mut local = vec![0usize; n];
    for part in [a_part, h_part] {
        for (k, &i) in part.iter().enumerate() {
            local[i] = k;
        }
    }

    let sub = |part: &[usize], tag: usize| -> Result<GradedLieAlgebra> {
        let sub_basis = basis.restrict(part);
        let mut entries = Vec::new();
        for (x, &i) in part.iter().enumerate() {
            for (y, &j) in part.iter().enumerate() {
                let v = lie.bracket_basis(i, j);
                if let Some((&k, _)) = v.iter().find(|(&k, _)| side[k] != Some(tag)) {
                    return Err(Error::NotClosed {
                        left: basis.name(i).to_string(),
                        right: basis.name(j).to_string(),
                        escaped: basis.name(k).to_string(),
                    });
                }
                entries.push(((x, y), v.map_keys(|&k| local[k])));
            }
        }
        GradedLieAlgebra::new(
            BilinearTable::square(lie.field(), sub_basis, entries)?,
            lie.beta().clone(),
        )
    };
    let a = sub(a_part, 0)?;
    let h = sub(h_part, 1)?;

    let mut left = Vec::new();
    let mut right = Vec::new();
    for (p, &hp) in h_part.iter().enumerate() {
        for (i, &ai) in a_part.iter().enumerate() {
            let v = lie.bracket_basis(hp, ai);
            let (on_a, on_h): (Vec<_>, Vec<_>) = v
                .iter()
                .map(|(&k, c)| (k, c.clone()))
                .partition(|(k, _)| side[*k] == Some(0));
            left.push((
                (p, i),
                GradedVector::from_terms(on_a.into_iter().map(|(k, c)| (local[k], c))),
            ));
            right.push((
                (p, i),
                GradedVector::from_terms(on_h.into_iter().map(|(k, c)| (local[k], c))),
            ));
        }
    }
    let field = lie.field();
    let left = LeftAction::new(BilinearTable::new(
        field,
        h.basis().clone(),
        a.basis().clone(),
        a.basis().clone(),
        left,
    )?)?;
    let right = RightAction::new(BilinearTable::new(
        field,
        h.basis().clone(),
        a.basis().clone(),
        h.basis().clone(),
        right,
    )?)?;
    MatchedPair::new(a, h, left, right)
}

fn sigma_context(pair: &MatchedPair, sigma: &TwoCocycle) -> Result<()> {
    same_context(pair.a.basis().group(), pair.field(), sigma.group(), sigma.field())
}

fn scale_action(table: &BilinearTable, sigma: &TwoCocycle) -> BilinearTable {
    let (hb, ab) = (table.left(), table.right());
    table.scale_entries(|p, i| sigma.at(hb.degree_index(p), ab.degree_index(i)).clone())
}

fn require_cocycle(operation: &'static str, sigma: &TwoCocycle) -> Result<()> {
    let mut report = VerificationReport::new();
    report.absorb("sigma", cocycle_verify(sigma, &VerifyOptions::default()));
    require(operation, report)
}

/// `h ▷^σ a = σ(|h|,|a|) h▷a`
pub fn twist_left_action(left: &LeftAction, sigma: &TwoCocycle) -> Result<LeftAction> {
    require_cocycle("twist_left_action", sigma)?;
    twist_left_action_unchecked(left, sigma)
}

pub fn twist_left_action_unchecked(left: &LeftAction, sigma: &TwoCocycle) -> Result<LeftAction> {
    let t = left.table();
    same_context(t.out().group(), t.field(), sigma.group(), sigma.field())?;
    LeftAction::new(scale_action(t, sigma))
}

/// `h ◁^σ a = σ(|h|,|a|) h◁a`
pub fn twist_right_action(right: &RightAction, sigma: &TwoCocycle) -> Result<RightAction> {
    require_cocycle("twist_right_action", sigma)?;
    twist_right_action_unchecked(right, sigma)
}

pub fn twist_right_action_unchecked(right: &RightAction, sigma: &TwoCocycle) -> Result<RightAction> {
    let t = right.table();
    same_context(t.out().group(), t.field(), sigma.group(), sigma.field())?;
    RightAction::new(scale_action(t, sigma))
}

fn require_pair_and_cocycle(operation: &'static str, pair: &MatchedPair, sigma: &TwoCocycle) -> Result<()> {
    sigma_context(pair, sigma)?;
    let opts = VerifyOptions::default();
    let mut report = matched_verify(pair, &opts);
    report.absorb("sigma", cocycle_verify(sigma, &opts));
    require(operation, report)
}

/// `(A^σ, H^σ)` with twisted actions, matched over `β^σ`.
pub fn twist_matched_pair(pair: &MatchedPair, sigma: &TwoCocycle) -> Result<MatchedPair> {
    require_pair_and_cocycle("twist_matched_pair", pair, sigma)?;
    twist_matched_pair_unchecked(pair, sigma)
}

pub fn twist_matched_pair_unchecked(pair: &MatchedPair, sigma: &TwoCocycle) -> Result<MatchedPair> {
    sigma_context(pair, sigma)?;
    MatchedPair::new(
        twist_lie_unchecked(&pair.a, sigma)?,
        twist_lie_unchecked(&pair.h, sigma)?,
        twist_left_action_unchecked(&pair.left, sigma)?,
        twist_right_action_unchecked(&pair.right, sigma)?,
    )
}

/// Compares `A^σ ⋈ H^σ` with `(A ⋈ H)^σ` entrywise under the identity map
/// of `A ⊕ H`.
pub fn iso_check(pair: &MatchedPair, sigma: &TwoCocycle, opts: &VerifyOptions) -> Result<VerificationReport> {
    require_pair_and_cocycle("iso_check", pair, sigma)?;
    iso_check_unchecked(pair, sigma, sigma, opts)
}

/// `iso_check` without preconditions, twisting the pair by `sigma_pair` and
/// the double cross sum by `sigma_sum`. Different cocycles make a useful
/// self-test of the comparison.
pub fn iso_check_unchecked(
    pair: &MatchedPair,
    sigma_pair: &TwoCocycle,
    sigma_sum: &TwoCocycle,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let t1 = double_cross_sum_unchecked(&twist_matched_pair_unchecked(pair, sigma_pair)?)?;
    let t2 = twist_lie_unchecked(&double_cross_sum_unchecked(pair)?, sigma_sum)?;
    let basis = t1.basis();
    let n = basis.dim();
    let mut report = VerificationReport::new();
    report.push(scan("structure_constants", n, opts, |i| {
        (0..n)
            .filter_map(|j| {
                let (x, y) = (t1.bracket_basis(i, j), t2.bracket_basis(i, j));
                (x != y).then(|| witness(names(&[(basis, i), (basis, j)]), vec![i, j], basis, &x, &y))
            })
            .collect()
    }));
    let group = basis.group();
    let order = group.order();
    let (b1, b2) = (t1.beta(), t2.beta());
    report.push(scan("bicharacter", order, opts, |x| {
        (0..order)
            .filter(|&y| b1.at(x, y) != b2.at(x, y))
            .map(|y| {
                let (l, r) = (b1.at(x, y).clone(), b2.at(x, y).clone());
                Witness {
                    at: vec![group.element_at(x).to_string(), group.element_at(y).to_string()],
                    indices: vec![x, y],
                    residual: Term::Scalar(&l - &r),
                    lhs: Term::Scalar(l),
                    rhs: Term::Scalar(r),
                }
            })
            .collect()
    }));
    Ok(report)
}
