//! Small worked examples used by the tests, the benchmarks and the CLI
//! fixture files.
//!
//! Every constructor here builds from constant data and panics only on a
//! programming error.

use crate::colie::{CobracketTable, GradedCoalgebra};
use crate::gradedalg::{beta_commutator, BilinearTable, GradedAlgebra, GradedBasis, GradedLieAlgebra, NamedEntry};
use crate::grading::{Bicharacter, FiniteAbelianGroup, GroupElement, TwoCocycle};
use crate::linear::GradedVector;
use crate::matched::{CobrackedPair, LeftAction, MatchedPair, RightAction};
use crate::scalar::{FieldDescriptor, Scalar};

const Q: FieldDescriptor = FieldDescriptor::Rationals;

fn f5() -> FieldDescriptor {
    FieldDescriptor::prime(5).unwrap()
}

fn lie(field: FieldDescriptor, basis: &GradedBasis, beta: &Bicharacter, entries: &[NamedEntry]) -> GradedLieAlgebra {
    GradedLieAlgebra::new(BilinearTable::from_named(field, basis, entries).unwrap(), beta.clone()).unwrap()
}

fn ungraded(names: &[&str]) -> GradedBasis {
    GradedBasis::ungraded(&FiniteAbelianGroup::trivial(), names.iter().copied()).unwrap()
}

const SL2: &[NamedEntry] = &[
    ("e", "f", &[("h", 1)]),
    ("f", "e", &[("h", -1)]),
    ("h", "e", &[("e", 2)]),
    ("e", "h", &[("e", -2)]),
    ("h", "f", &[("f", -2)]),
    ("f", "h", &[("f", 2)]),
];

/// sl(2) over Q on the basis `e, f, h`.
pub fn sl2() -> GradedLieAlgebra {
    let b = ungraded(&["e", "f", "h"]);
    lie(Q, &b, &Bicharacter::trivial(b.group(), Q), SL2)
}

/// sl(2) with `[h,e] = 3e`; still anticommutative, Jacobi fails.
pub fn sl2_perturbed() -> GradedLieAlgebra {
    let b = ungraded(&["e", "f", "h"]);
    let mut entries = SL2.to_vec();
    entries[2] = ("h", "e", &[("e", 3)]);
    entries[3] = ("e", "h", &[("e", -3)]);
    lie(Q, &b, &Bicharacter::trivial(b.group(), Q), &entries)
}

fn z2_matrix_basis(graded: bool) -> GradedBasis {
    let g = if graded {
        FiniteAbelianGroup::cyclic(2)
    } else {
        FiniteAbelianGroup::trivial()
    };
    let names = ["E11", "E12", "E21", "E22"];
    let parity = [0, 1, 1, 0];
    GradedBasis::new(
        &g,
        names
            .iter()
            .zip(parity)
            .map(|(n, p)| (*n, if graded { g.element(&[p]).unwrap() } else { g.identity() })),
    )
    .unwrap()
}

/// The 2×2 matrix units `E_ij E_jk = E_ik` with unit `E11 + E22`, optionally
/// Z_2-graded by `i + j`.
pub fn matrix_units(field: FieldDescriptor, graded: bool) -> GradedAlgebra {
    let b = z2_matrix_basis(graded);
    let mut entries = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                entries.push((
                    (2 * i + j, 2 * j + k),
                    GradedVector::term(2 * i + k, Scalar::one(field)),
                ));
            }
        }
    }
    let table = BilinearTable::square(field, b, entries).unwrap();
    let one = Scalar::one(field);
    GradedAlgebra::new(table, Some(GradedVector::from_terms([(0, one.clone()), (3, one)]))).unwrap()
}

/// gl(1|1): the sign-β commutator of the graded matrix units.
pub fn gl11(field: FieldDescriptor) -> GradedLieAlgebra {
    beta_commutator(&matrix_units(field, true), &Bicharacter::sign(field)).unwrap()
}

/// The group algebra `kG` with basis `g<index>` in degree `g`.
pub fn group_algebra(group: &FiniteAbelianGroup, field: FieldDescriptor) -> GradedAlgebra {
    twisted_group_algebra(&TwoCocycle::trivial(group, field))
}

/// `k_τ G`: `e_x e_y = τ(x,y) e_{x+y}`, with unit `τ(0,0)⁻¹ e_0`.
pub fn twisted_group_algebra(tau: &TwoCocycle) -> GradedAlgebra {
    let group = tau.group();
    let field = tau.field();
    let elements = group.enumerate();
    let b = GradedBasis::new(
        group,
        elements.iter().enumerate().map(|(i, x)| (format!("g{i}"), x.clone())),
    )
    .unwrap();
    let mut entries = Vec::new();
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            let k = group.index_of(&group.add(x, y));
            entries.push(((i, j), GradedVector::term(k, tau.at(i, j).clone())));
        }
    }
    let table = BilinearTable::square(field, b, entries).unwrap();
    let unit = GradedVector::term(0, tau.at(0, 0).inv());
    GradedAlgebra::new(table, Some(unit)).unwrap()
}

/// The comatrix coalgebra `Δ(E_ij) = Σ_k E_ik ⊗ E_kj`, `ε(E_ij) = δ_ij`.
pub fn comatrix(field: FieldDescriptor, graded: bool) -> GradedCoalgebra {
    let b = z2_matrix_basis(graded);
    let mut rows = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let t = (0..2).map(|k| ((2 * i + k, 2 * k + j), Scalar::one(field)));
            rows.push((2 * i + j, crate::linear::Tensor2::from_terms(t)));
        }
    }
    let counit = (0..4)
        .map(|i| {
            if i == 0 || i == 3 {
                Scalar::one(field)
            } else {
                Scalar::zero(field)
            }
        })
        .collect();
    GradedCoalgebra::new(field, b, rows, counit).unwrap()
}

/// `n` grouplike elements `g0, g1, …` in degree 0.
pub fn grouplike(field: FieldDescriptor, n: usize) -> GradedCoalgebra {
    let names: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
    let b = GradedBasis::ungraded(&FiniteAbelianGroup::trivial(), names).unwrap();
    let rows = (0..n).map(|i| (i, crate::linear::Tensor2::term((i, i), Scalar::one(field))));
    GradedCoalgebra::new(field, b, rows.collect::<Vec<_>>(), vec![Scalar::one(field); n]).unwrap()
}

/// Functions on `G`: `Δ(p_x) = Σ_{y+z=x} p_y ⊗ p_z`, `ε(p_x) = [x = 0]`,
/// with `p_x` in degree `x`.
pub fn function_coalgebra(group: &FiniteAbelianGroup, field: FieldDescriptor) -> GradedCoalgebra {
    let elements = group.enumerate();
    let b = GradedBasis::new(
        group,
        elements.iter().enumerate().map(|(i, x)| (format!("p{i}"), x.clone())),
    )
    .unwrap();
    let rows = elements.iter().enumerate().map(|(i, x)| {
        let t = elements
            .iter()
            .enumerate()
            .map(|(j, y)| ((j, group.index_of(&group.add(x, &group.neg(y)))), Scalar::one(field)));
        (i, crate::linear::Tensor2::from_terms(t))
    });
    let counit = (0..elements.len())
        .map(|i| {
            if i == 0 {
                Scalar::one(field)
            } else {
                Scalar::zero(field)
            }
        })
        .collect();
    GradedCoalgebra::new(field, b, rows.collect::<Vec<_>>(), counit).unwrap()
}

/// `[H0,X] = X` with `δ(X) = X⊗H0 − H0⊗X`, `δ(H0) = 0`.
pub fn two_dim_bialgebra() -> (GradedLieAlgebra, CobracketTable) {
    let b = ungraded(&["H0", "X"]);
    let l = lie(
        Q,
        &b,
        &Bicharacter::trivial(b.group(), Q),
        &[("H0", "X", &[("X", 1)]), ("X", "H0", &[("X", -1)])],
    );
    let delta = CobracketTable::from_named(Q, &b, &[("X", &[("X", "H0", 1), ("H0", "X", -1)])]).unwrap();
    (l, delta)
}

/// `β(x,y) = 2^{x₁y₂ − x₂y₁}` on Z_3 × Z_3 over F_7.
pub fn color_beta_z3z3() -> Bicharacter {
    let g = FiniteAbelianGroup::new(&[3, 3]).unwrap();
    let f = FieldDescriptor::prime(7).unwrap();
    Bicharacter::from_exponents(&g, &Scalar::from_i64(f, 2), 3, &[vec![0, 1], vec![-1, 0]]).unwrap()
}

/// `σ(x,y) = 2^{xy}` on Z_2 over F_5.
pub fn sigma_two_pow_xy() -> TwoCocycle {
    let g = FiniteAbelianGroup::cyclic(2);
    let f = f5();
    TwoCocycle::from_fn(&g, f, |x, y| {
        Scalar::from_i64(f, 2).pow(u64::from(x.residues()[0] * y.residues()[0]))
    })
    .unwrap()
}

fn split(a: GradedLieAlgebra, h: GradedLieAlgebra, left: &[NamedEntry], right: &[NamedEntry]) -> MatchedPair {
    let field = a.field();
    let l = LeftAction::from_named(field, h.basis(), a.basis(), left).unwrap();
    let r = RightAction::from_named(field, h.basis(), a.basis(), right).unwrap();
    MatchedPair::new(a, h, l, r).unwrap()
}

fn sl2_parts() -> (GradedLieAlgebra, GradedLieAlgebra) {
    let beta = Bicharacter::trivial(&FiniteAbelianGroup::trivial(), Q);
    let a = lie(Q, &ungraded(&["e"]), &beta, &[]);
    let h = lie(
        Q,
        &ungraded(&["h", "f"]),
        &beta,
        &[("h", "f", &[("f", -2)]), ("f", "h", &[("f", 2)])],
    );
    (a, h)
}

/// sl(2) split as `A = span{e}`, `H = span{h, f}`: `h▷e = 2e`, `f◁e = −h`.
pub fn sl2_split() -> MatchedPair {
    let (a, h) = sl2_parts();
    split(a, h, &[("h", "e", &[("e", 2)])], &[("f", "e", &[("h", -1)])])
}

/// The sl(2) split pair with `f◁e = f`; BB2 fails.
pub fn sl2_split_perturbed() -> MatchedPair {
    let (a, h) = sl2_parts();
    split(a, h, &[("h", "e", &[("e", 2)])], &[("f", "e", &[("f", 1)])])
}

fn super_parts(h_on_a2: i64) -> MatchedPair {
    let f = f5();
    let g = FiniteAbelianGroup::cyclic(2);
    let beta = Bicharacter::sign(f);
    let deg = |r| g.element(&[r]).unwrap();
    let ab = GradedBasis::new(&g, [("a1", deg(1)), ("a2", deg(0))]).unwrap();
    let hb = GradedBasis::new(&g, [("h", deg(0))]).unwrap();
    let a = lie(f, &ab, &beta, &[("a1", "a1", &[("a2", 1)])]);
    let h = lie(f, &hb, &beta, &[]);
    split(a, h, &[("h", "a1", &[("a1", 1)]), ("h", "a2", &[("a2", h_on_a2)])], &[])
}

/// Z_2 super pair over F_5: `[a1,a1] = a2` with `a1` odd, `h` even acting by
/// `h▷a1 = a1`, `h▷a2 = 2a2`, and `◁ = 0`.
pub fn super_pair() -> MatchedPair {
    super_parts(2)
}

/// The super pair with `h▷a2 = a2`; not a derivation.
pub fn super_pair_broken() -> MatchedPair {
    super_parts(1)
}

/// `A = span{a}`, `H = span{t}`, both abelian, `t▷a = a`, `◁ = 0`.
pub fn semidirect_1d() -> MatchedPair {
    let beta = Bicharacter::trivial(&FiniteAbelianGroup::trivial(), Q);
    let a = lie(Q, &ungraded(&["a"]), &beta, &[]);
    let h = lie(Q, &ungraded(&["t"]), &beta, &[]);
    split(a, h, &[("t", "a", &[("a", 1)])], &[])
}

/// gl(1|1) split as `A = span{E11, E12}`, `H = span{E22, E21}` over `field`.
pub fn gl11_split(field: FieldDescriptor) -> MatchedPair {
    let l = gl11(field);
    let b = l.basis();
    let i = |n: &str| b.index(n).unwrap();
    crate::matched::split_from_decomposition(&l, &[i("E11"), i("E12")], &[i("E22"), i("E21")]).unwrap()
}

/// `A = span{x, y}` with `[x,y] = y`, `H = span{t}`, `t◁x = t`, `▷ = 0`.
pub fn right_module_example() -> MatchedPair {
    let beta = Bicharacter::trivial(&FiniteAbelianGroup::trivial(), Q);
    let a = lie(
        Q,
        &ungraded(&["x", "y"]),
        &beta,
        &[("x", "y", &[("y", 1)]), ("y", "x", &[("y", -1)])],
    );
    let h = lie(Q, &ungraded(&["t"]), &beta, &[]);
    split(a, h, &[], &[("t", "x", &[("t", 1)])])
}

fn z2z2() -> FiniteAbelianGroup {
    FiniteAbelianGroup::new(&[2, 2]).unwrap()
}

fn sign_form(g: &FiniteAbelianGroup, f: impl Fn(&GroupElement, &GroupElement) -> u32) -> TwoCocycle {
    TwoCocycle::from_fn(g, Q, |x, y| {
        Scalar::from_i64(Q, if f(x, y).is_multiple_of(2) { 1 } else { -1 })
    })
    .unwrap()
}

/// `τ(x,y) = (−1)^{x₁y₂}` on Z_2 × Z_2 over Q.
pub fn tau_quaternion() -> TwoCocycle {
    sign_form(&z2z2(), |x, y| x.residues()[0] * y.residues()[1])
}

/// Z_2 × Z_2-graded pair over Q with trivial β: `A` is the commutator Lie
/// algebra of `k_τ G` (`τ` from [`tau_quaternion`]), `H = span{t}` acting by
/// `t▷g0 = g0`. Twisting by `τ` turns it into a pair of Lie color algebras.
pub fn color_pair() -> MatchedPair {
    let g = z2z2();
    let beta = Bicharacter::trivial(&g, Q);
    let a = beta_commutator(&twisted_group_algebra(&tau_quaternion()), &beta).unwrap();
    let h = lie(Q, &GradedBasis::new(&g, [("t", g.identity())]).unwrap(), &beta, &[]);
    split(a, h, &[("t", "g0", &[("g0", 1)])], &[])
}

/// Cocycles for [`color_pair`]: trivial, `(−1)^{x₁y₂}`, `(−1)^{x₂y₁}` and
/// `2·(−1)^{x₁y₂}`.
pub fn color_sigmas() -> Vec<TwoCocycle> {
    let g = z2z2();
    let tau = tau_quaternion();
    let two = Scalar::from_i64(Q, 2);
    vec![
        TwoCocycle::trivial(&g, Q),
        tau.clone(),
        sign_form(&g, |x, y| x.residues()[1] * y.residues()[0]),
        TwoCocycle::from_fn(&g, Q, |x, y| &two * tau.get(x, y)).unwrap(),
    ]
}

/// `H = span{x, y}` abelian with `δ_H(x) = x⊗y − y⊗x`, `A = span{a}`,
/// `y▷a = a`, `◁ = 0`, `δ_A = 0`. BB3 fails at `(x, a)`.
pub fn bb3_failure() -> CobrackedPair {
    let beta = Bicharacter::trivial(&FiniteAbelianGroup::trivial(), Q);
    let a = lie(Q, &ungraded(&["a"]), &beta, &[]);
    let h = lie(Q, &ungraded(&["x", "y"]), &beta, &[]);
    let delta_h = CobracketTable::from_named(Q, h.basis(), &[("x", &[("x", "y", 1), ("y", "x", -1)])]).unwrap();
    let delta_a = CobracketTable::zero(Q, a.basis().clone());
    let pair = split(a, h, &[("y", "a", &[("a", 1)])], &[]);
    CobrackedPair::new(pair, delta_a, delta_h).unwrap()
}

/// Every matched pair above that satisfies its axioms, by name.
pub fn matched_pairs() -> Vec<(&'static str, MatchedPair)> {
    vec![
        ("sl2_split", sl2_split()),
        ("super", super_pair()),
        ("semidirect_1d", semidirect_1d()),
        ("gl11_split_q", gl11_split(Q)),
        ("gl11_split_f5", gl11_split(f5())),
        ("right_module", right_module_example()),
        ("color", color_pair()),
    ]
}

/// Pairs violating at least one matched-pair axiom.
pub fn broken_pairs() -> Vec<(&'static str, MatchedPair)> {
    vec![
        ("sl2_split_perturbed", sl2_split_perturbed()),
        ("super_broken", super_pair_broken()),
    ]
}

/// Cocycles to twist each pair of [`matched_pairs`] with.
pub fn cocycles_for(pair: &MatchedPair) -> Vec<TwoCocycle> {
    let g = pair.a().basis().group().clone();
    let field = pair.field();
    let mut out = vec![
        TwoCocycle::trivial(&g, field),
        TwoCocycle::from_fn(&g, field, |_, _| Scalar::from_i64(field, 3)).unwrap(),
    ];
    if g == z2z2() && field == Q {
        out.extend(color_sigmas());
    } else if g == FiniteAbelianGroup::cyclic(2) && field == f5() {
        out.push(sigma_two_pow_xy());
    } else if g == FiniteAbelianGroup::cyclic(2) {
        out.push(
            TwoCocycle::from_fn(&g, field, |x, y| {
                Scalar::from_i64(field, if x.residues()[0] * y.residues()[0] == 1 { 3 } else { 1 })
            })
            .unwrap(),
        );
    }
    out
}

/// Lie algebras above that satisfy the axioms, by name.
pub fn lie_algebras() -> Vec<(&'static str, GradedLieAlgebra)> {
    let dcs = |p: MatchedPair| crate::matched::double_cross_sum(&p).unwrap();
    vec![
        ("sl2", sl2()),
        ("gl11_q", gl11(Q)),
        ("gl11_f5", gl11(f5())),
        ("two_dim", two_dim_bialgebra().0),
        ("super_dcs", dcs(super_pair())),
        ("color_dcs", dcs(color_pair())),
    ]
}
