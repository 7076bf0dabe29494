//! Bicharacters `β` and 2-cocycles `σ` as total tables on `G × G`.
//!
//! Over a group algebra every element of `G` is group-like, so the Sweedler
//! legs in the Hopf-algebraic axioms collapse: `Δ(g) = g ⊗ g`, `ε(g) = 1`.
//! The cotriangularity axioms become
//!
//! * CT2: `β(x, y+z) = β(x,y) β(x,z)`
//! * CT3: `β(x+y, z) = β(y,z) β(x,z)`
//! * CT4: `β(x,y) β(y,x) = 1`
//!
//! and CT1 holds identically because `kG` is commutative and cocommutative,
//! so it is not checked. Left and right cocycle conditions coincide on
//! group-likes: `σ(g,h) σ(g+h,l) = σ(h,l) σ(g,h+l)`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::grading::group::{FiniteAbelianGroup, GroupElement};
use crate::report::{scan, Term, VerificationReport, VerifyOptions, Witness};
use crate::scalar::{root_of_unity_check, FieldDescriptor, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
struct FormTable {
    group: FiniteAbelianGroup,
    field: FieldDescriptor,
    values: Vec<Scalar>,
}

impl FormTable {
    fn from_fn(
        what: &'static str,
        group: &FiniteAbelianGroup,
        field: FieldDescriptor,
        f: impl Fn(&GroupElement, &GroupElement) -> Scalar,
    ) -> Result<Self> {
        let elems = group.enumerate();
        let mut values = Vec::with_capacity(elems.len() * elems.len());
        for x in &elems {
            for y in &elems {
                let v = f(x, y);
                if v.field() != field {
                    return Err(Error::FieldMismatch(field, v.field()));
                }
                if v.is_zero() {
                    return Err(Error::ZeroEntry {
                        what,
                        x: x.to_string(),
                        y: y.to_string(),
                    });
                }
                values.push(v);
            }
        }
        Ok(FormTable {
            group: group.clone(),
            field,
            values,
        })
    }

    fn from_entries<I>(
        what: &'static str,
        group: &FiniteAbelianGroup,
        field: FieldDescriptor,
        entries: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (GroupElement, GroupElement, Scalar)>,
    {
        let n = group.order();
        let mut values = vec![Scalar::one(field); n * n];
        let mut seen = BTreeSet::new();
        for (x, y, v) in entries {
            for e in [&x, &y] {
                if !group.contains(e) {
                    return Err(Error::ElementOutOfRange {
                        element: e.residues().iter().map(|&r| r as i64).collect(),
                        orders: group.orders().to_vec(),
                    });
                }
            }
            if v.field() != field {
                return Err(Error::FieldMismatch(field, v.field()));
            }
            if v.is_zero() {
                return Err(Error::ZeroEntry {
                    what,
                    x: x.to_string(),
                    y: y.to_string(),
                });
            }
            let slot = group.index_of(&x) * n + group.index_of(&y);
            if !seen.insert(slot) {
                return Err(Error::DuplicateEntry {
                    what,
                    x: x.to_string(),
                    y: y.to_string(),
                });
            }
            values[slot] = v;
        }
        Ok(FormTable {
            group: group.clone(),
            field,
            values,
        })
    }

    fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.values[i * self.group.order() + j]
    }

    fn get(&self, x: &GroupElement, y: &GroupElement) -> &Scalar {
        self.at(self.group.index_of(x), self.group.index_of(y))
    }

    fn entries(&self) -> Vec<(GroupElement, GroupElement, Scalar)> {
        let elems = self.group.enumerate();
        let mut out = Vec::with_capacity(self.values.len());
        for (i, x) in elems.iter().enumerate() {
            for (j, y) in elems.iter().enumerate() {
                out.push((x.clone(), y.clone(), self.at(i, j).clone()));
            }
        }
        out
    }
}

macro_rules! form_accessors {
    ($ty:ident, $what:literal) => {
        impl $ty {
            /// Table from a function on `G × G`. Values must be nonzero.
            pub fn from_fn(
                group: &FiniteAbelianGroup,
                field: FieldDescriptor,
                f: impl Fn(&GroupElement, &GroupElement) -> Scalar,
            ) -> Result<Self> {
                FormTable::from_fn($what, group, field, f).map($ty)
            }

            /// Table from explicit entries; omitted pairs default to 1.
            pub fn from_entries<I>(group: &FiniteAbelianGroup, field: FieldDescriptor, entries: I) -> Result<Self>
            where
                I: IntoIterator<Item = (GroupElement, GroupElement, Scalar)>,
            {
                FormTable::from_entries($what, group, field, entries).map($ty)
            }

            /// The constant table `1`.
            pub fn trivial(group: &FiniteAbelianGroup, field: FieldDescriptor) -> Self {
                $ty(FormTable {
                    group: group.clone(),
                    field,
                    values: vec![Scalar::one(field); group.order() * group.order()],
                })
            }

            pub fn group(&self) -> &FiniteAbelianGroup {
                &self.0.group
            }

            pub fn field(&self) -> FieldDescriptor {
                self.0.field
            }

            pub fn get(&self, x: &GroupElement, y: &GroupElement) -> &Scalar {
                self.0.get(x, y)
            }

            /// Lookup by flat indices in enumeration order.
            pub fn at(&self, i: usize, j: usize) -> &Scalar {
                self.0.at(i, j)
            }

            /// Every `(x, y, value)` in lexicographic order.
            pub fn entries(&self) -> Vec<(GroupElement, GroupElement, Scalar)> {
                self.0.entries()
            }

            /// Entries whose value differs from the default `1`.
            pub fn non_default_entries(&self) -> Vec<(GroupElement, GroupElement, Scalar)> {
                self.0
                    .entries()
                    .into_iter()
                    .filter(|(_, _, v)| !v.is_one())
                    .collect()
            }
        }
    };
}

/// Skew-symmetric bicharacter `β: G × G → k*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicharacter(FormTable);

/// 2-cocycle `σ: G × G → k*`. Not required to be normalized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCocycle(FormTable);

form_accessors!(Bicharacter, "bicharacter");
form_accessors!(TwoCocycle, "cocycle");

impl Bicharacter {
    /// `β(x,y) = ω^{(x·B·y) mod N}` for a primitive `N`-th root `ω`. The
    /// resulting table must pass [`bichar_verify`].
    pub fn from_exponents(group: &FiniteAbelianGroup, omega: &Scalar, n: u64, exponents: &[Vec<i64>]) -> Result<Self> {
        if !root_of_unity_check(omega, n)? {
            return Err(Error::NotPrimitiveRoot(omega.to_string(), n));
        }
        let rank = group.rank();
        if exponents.len() != rank || exponents.iter().any(|row| row.len() != rank) {
            return Err(Error::ExponentShape { expected: rank });
        }
        let beta = Bicharacter::from_fn(group, omega.field(), |x, y| {
            let mut e: i128 = 0;
            for (i, xi) in x.residues().iter().enumerate() {
                for (j, yj) in y.residues().iter().enumerate() {
                    e += *xi as i128 * exponents[i][j] as i128 * *yj as i128;
                }
            }
            omega.pow(e.rem_euclid(n as i128) as u64)
        })?;
        let report = bichar_verify(&beta, &VerifyOptions::default());
        if !report.passed() {
            return Err(Error::Precondition {
                operation: "bichar_from_exponents",
                report: Box::new(report),
            });
        }
        Ok(beta)
    }

    /// The super sign `β(x,y) = (-1)^{xy}` on `Z_2`.
    pub fn sign(field: FieldDescriptor) -> Self {
        let group = FiniteAbelianGroup::cyclic(2);
        Bicharacter::from_fn(&group, field, |x, y| {
            Scalar::from_i64(field, if x.residues()[0] * y.residues()[0] == 1 { -1 } else { 1 })
        })
        .expect("sign table is nonzero")
    }
}

impl TwoCocycle {
    /// Pointwise inverse `σ⁻¹`.
    pub fn inverse(&self) -> Self {
        TwoCocycle(FormTable {
            group: self.0.group.clone(),
            field: self.0.field,
            values: self.0.values.iter().map(Scalar::inv).collect(),
        })
    }

    /// Every verified bicharacter is a cocycle.
    pub fn from_bicharacter(beta: &Bicharacter) -> Self {
        TwoCocycle(beta.0.clone())
    }
}

fn scalar_witness(at: &[&GroupElement], group: &FiniteAbelianGroup, lhs: Scalar, rhs: Scalar) -> Witness {
    let residual = &lhs - &rhs;
    Witness {
        at: at.iter().map(|e| e.to_string()).collect(),
        indices: at.iter().map(|e| group.index_of(e)).collect(),
        lhs: Term::Scalar(lhs),
        rhs: Term::Scalar(rhs),
        residual: Term::Scalar(residual),
    }
}

/// Exhaustive CT2, CT3, CT4 check.
pub fn bichar_verify(beta: &Bicharacter, opts: &VerifyOptions) -> VerificationReport {
    let group = beta.group();
    let elems = group.enumerate();
    let n = elems.len();
    let mut report = VerificationReport::new();

    report.push(scan("CT2", n, opts, |i| {
        let x = &elems[i];
        let mut out = Vec::new();
        for y in &elems {
            for z in &elems {
                let lhs = beta.get(x, &group.add(y, z)).clone();
                let rhs = beta.get(x, y) * beta.get(x, z);
                if lhs != rhs {
                    out.push(scalar_witness(&[x, y, z], group, lhs, rhs));
                }
            }
        }
        out
    }));
    report.push(scan("CT3", n, opts, |i| {
        let x = &elems[i];
        let mut out = Vec::new();
        for y in &elems {
            for z in &elems {
                let lhs = beta.get(&group.add(x, y), z).clone();
                let rhs = beta.get(y, z) * beta.get(x, z);
                if lhs != rhs {
                    out.push(scalar_witness(&[x, y, z], group, lhs, rhs));
                }
            }
        }
        out
    }));
    report.push(scan("CT4", n, opts, |i| {
        let x = &elems[i];
        let one = Scalar::one(beta.field());
        elems
            .iter()
            .filter_map(|y| {
                let lhs = beta.get(x, y) * beta.get(y, x);
                (lhs != one).then(|| scalar_witness(&[x, y], group, lhs, one.clone()))
            })
            .collect()
    }));
    report.note("CT1 holds identically over a commutative, cocommutative group algebra and is not checked");
    report
}

/// Exhaustive check of `σ(g,h)σ(g+h,l) = σ(h,l)σ(g,h+l)` over all triples.
pub fn cocycle_verify(sigma: &TwoCocycle, opts: &VerifyOptions) -> VerificationReport {
    let group = sigma.group();
    let elems = group.enumerate();
    let mut report = VerificationReport::new();
    report.push(scan("cocycle", elems.len(), opts, |i| {
        let g = &elems[i];
        let mut out = Vec::new();
        for h in &elems {
            for l in &elems {
                let lhs = sigma.get(g, h) * sigma.get(&group.add(g, h), l);
                let rhs = sigma.get(h, l) * sigma.get(g, &group.add(h, l));
                if lhs != rhs {
                    out.push(scalar_witness(&[g, h, l], group, lhs, rhs));
                }
            }
        }
        out
    }));
    report
}

pub(crate) fn same_context(
    group_a: &FiniteAbelianGroup,
    field_a: FieldDescriptor,
    group_b: &FiniteAbelianGroup,
    field_b: FieldDescriptor,
) -> Result<()> {
    if group_a != group_b {
        return Err(Error::GroupMismatch(
            group_a.orders().to_vec(),
            group_b.orders().to_vec(),
        ));
    }
    if field_a != field_b {
        return Err(Error::FieldMismatch(field_a, field_b));
    }
    Ok(())
}

/// `β^σ(x,y) = σ(y,x)⁻¹ β(x,y) σ(x,y)`, after verifying both inputs.
pub fn twist_bicharacter(beta: &Bicharacter, sigma: &TwoCocycle) -> Result<Bicharacter> {
    same_context(beta.group(), beta.field(), sigma.group(), sigma.field())?;
    let opts = VerifyOptions::default();
    let mut report = bichar_verify(beta, &opts);
    report.absorb("sigma", cocycle_verify(sigma, &opts));
    if !report.passed() {
        return Err(Error::Precondition {
            operation: "twist_bicharacter",
            report: Box::new(report),
        });
    }
    twist_bicharacter_unchecked(beta, sigma)
}

/// [`twist_bicharacter`] without the precondition checks.
pub fn twist_bicharacter_unchecked(beta: &Bicharacter, sigma: &TwoCocycle) -> Result<Bicharacter> {
    same_context(beta.group(), beta.field(), sigma.group(), sigma.field())?;
    Bicharacter::from_fn(beta.group(), beta.field(), |x, y| {
        &(&sigma.get(y, x).inv() * beta.get(x, y)) * sigma.get(x, y)
    })
}
