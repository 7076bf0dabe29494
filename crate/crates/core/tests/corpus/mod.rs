//! Fixture corpus shared by the integration tests.

#![allow(dead_code)]

use hbeta_core::colie::beta_cocommutator;
use hbeta_core::fixtures;
use hbeta_core::gradedalg::beta_commutator;
use hbeta_core::matched::{dcs_bialgebra_unchecked, double_cross_sum_unchecked};
use hbeta_core::{
    Bicharacter, BilinearTable, CobrackedPair, CobracketTable, FieldDescriptor, FiniteAbelianGroup, GradedAlgebra,
    GradedBasis, GradedCoalgebra, GradedLieAlgebra, LeftAction, MatchedPair, RightAction, Scalar, TwoCocycle,
};

pub const Q: FieldDescriptor = FieldDescriptor::Rationals;

pub fn fp(p: u64) -> FieldDescriptor {
    FieldDescriptor::prime(p).unwrap()
}

pub fn z2z2() -> FiniteAbelianGroup {
    FiniteAbelianGroup::new(&[2, 2]).unwrap()
}

/// `(−1)^{x₁y₂ + x₂y₁}` on Z_2 × Z_2.
pub fn color_sign_z2z2(field: FieldDescriptor) -> Bicharacter {
    Bicharacter::from_fn(&z2z2(), field, |x, y| {
        let (a, b) = (x.residues(), y.residues());
        Scalar::from_i64(field, if (a[0] * b[1] + a[1] * b[0]) % 2 == 0 { 1 } else { -1 })
    })
    .unwrap()
}

pub fn algebra_beta_corpus() -> Vec<(String, GradedAlgebra, Bicharacter)> {
    let z2 = FiniteAbelianGroup::cyclic(2);
    let z3z3 = FiniteAbelianGroup::new(&[3, 3]).unwrap();
    let f5 = fp(5);
    let f7 = fp(7);
    let mut out = vec![
        (
            "matrix units, Q",
            fixtures::matrix_units(Q, false),
            Bicharacter::trivial(&FiniteAbelianGroup::trivial(), Q),
        ),
        (
            "graded matrix units, Q, sign",
            fixtures::matrix_units(Q, true),
            Bicharacter::sign(Q),
        ),
        (
            "graded matrix units, Q, trivial",
            fixtures::matrix_units(Q, true),
            Bicharacter::trivial(&z2, Q),
        ),
        (
            "graded matrix units, F5, sign",
            fixtures::matrix_units(f5, true),
            Bicharacter::sign(f5),
        ),
        (
            "kZ2xZ2, Q, trivial",
            fixtures::group_algebra(&z2z2(), Q),
            Bicharacter::trivial(&z2z2(), Q),
        ),
        (
            "kZ2xZ2, Q, color",
            fixtures::group_algebra(&z2z2(), Q),
            color_sign_z2z2(Q),
        ),
        (
            "k_tau Z2xZ2, Q, trivial",
            fixtures::twisted_group_algebra(&fixtures::tau_quaternion()),
            Bicharacter::trivial(&z2z2(), Q),
        ),
        (
            "k_tau Z2xZ2, Q, color",
            fixtures::twisted_group_algebra(&fixtures::tau_quaternion()),
            color_sign_z2z2(Q),
        ),
        (
            "kZ3xZ3, F7, color",
            fixtures::group_algebra(&z3z3, f7),
            fixtures::color_beta_z3z3(),
        ),
        (
            "kZ3xZ3, F7, trivial",
            fixtures::group_algebra(&z3z3, f7),
            Bicharacter::trivial(&z3z3, f7),
        ),
    ];
    let sigma = fixtures::sigma_two_pow_xy();
    out.push((
        "twisted graded matrix units, F5, sign",
        hbeta_core::gradedalg::twist_algebra(&fixtures::matrix_units(f5, true), &sigma).unwrap(),
        Bicharacter::sign(f5),
    ));
    out.into_iter().map(|(n, a, b)| (n.to_string(), a, b)).collect()
}

pub fn coalgebra_beta_corpus() -> Vec<(String, GradedCoalgebra, Bicharacter)> {
    let z2 = FiniteAbelianGroup::cyclic(2);
    let z3z3 = FiniteAbelianGroup::new(&[3, 3]).unwrap();
    let f5 = fp(5);
    let f7 = fp(7);
    let trivial = FiniteAbelianGroup::trivial();
    vec![
        (
            "comatrix, Q",
            fixtures::comatrix(Q, false),
            Bicharacter::trivial(&trivial, Q),
        ),
        (
            "graded comatrix, Q, sign",
            fixtures::comatrix(Q, true),
            Bicharacter::sign(Q),
        ),
        (
            "graded comatrix, Q, trivial",
            fixtures::comatrix(Q, true),
            Bicharacter::trivial(&z2, Q),
        ),
        (
            "graded comatrix, F5, sign",
            fixtures::comatrix(f5, true),
            Bicharacter::sign(f5),
        ),
        (
            "grouplikes, Q",
            fixtures::grouplike(Q, 3),
            Bicharacter::trivial(&trivial, Q),
        ),
        (
            "functions on Z2xZ2, Q, color",
            fixtures::function_coalgebra(&z2z2(), Q),
            color_sign_z2z2(Q),
        ),
        (
            "functions on Z2xZ2, Q, trivial",
            fixtures::function_coalgebra(&z2z2(), Q),
            Bicharacter::trivial(&z2z2(), Q),
        ),
        (
            "functions on Z3xZ3, F7, color",
            fixtures::function_coalgebra(&z3z3, f7),
            fixtures::color_beta_z3z3(),
        ),
    ]
    .into_iter()
    .map(|(n, c, b)| (n.to_string(), c, b))
    .collect()
}

/// Lie algebras, valid or not.
pub fn lie_corpus() -> Vec<(String, GradedLieAlgebra)> {
    let mut out: Vec<(String, GradedLieAlgebra)> = fixtures::lie_algebras()
        .into_iter()
        .map(|(n, l)| (n.to_string(), l))
        .collect();
    out.push(("sl2 perturbed".into(), fixtures::sl2_perturbed()));
    for (name, pair) in fixtures::broken_pairs() {
        out.push((
            format!("forced dcs of {name}"),
            double_cross_sum_unchecked(&pair).unwrap(),
        ));
    }
    for (name, algebra, beta) in algebra_beta_corpus() {
        out.push((
            format!("commutator of {name}"),
            beta_commutator(&algebra, &beta).unwrap(),
        ));
    }
    // a sign-β commutator read with the wrong β
    let gl = fixtures::gl11(Q);
    let wrong = GradedLieAlgebra::new(gl.bracket().clone(), Bicharacter::trivial(gl.basis().group(), Q)).unwrap();
    out.push(("gl(1|1) with trivial beta".into(), wrong));
    // wrong-degree entry
    let g = FiniteAbelianGroup::cyclic(2);
    let b = GradedBasis::new(&g, [("u", g.element(&[0]).unwrap()), ("o", g.element(&[1]).unwrap())]).unwrap();
    let t = BilinearTable::from_named(Q, &b, &[("u", "u", &[("u", 1), ("o", 3)]), ("o", "o", &[("u", 2)])]).unwrap();
    out.push((
        "misgraded".into(),
        GradedLieAlgebra::new(t, Bicharacter::sign(Q)).unwrap(),
    ));
    out
}

/// sl(2) with `δ(e) = e⊗h − h⊗e` and optionally `δ(f) = f⊗h − h⊗f`.
pub fn sl2_cobracket(with_f: bool) -> CobracketTable {
    let l = fixtures::sl2();
    let mut rows: Vec<(&str, &[(&str, &str, i64)])> = vec![("e", &[("e", "h", 1), ("h", "e", -1)])];
    if with_f {
        rows.push(("f", &[("f", "h", 1), ("h", "f", -1)]));
    }
    CobracketTable::from_named(Q, l.basis(), &rows).unwrap()
}

/// Cobrackets with the bicharacter they are checked against.
pub fn colie_corpus() -> Vec<(String, CobracketTable, Bicharacter)> {
    let (two, delta) = fixtures::two_dim_bialgebra();
    let trivial = two.beta().clone();
    let mut out = vec![
        ("two-dim".to_string(), delta, trivial.clone()),
        (
            "bb3 failure H".to_string(),
            fixtures::bb3_failure().delta_h().clone(),
            trivial.clone(),
        ),
        ("sl2 half".to_string(), sl2_cobracket(false), trivial.clone()),
        ("sl2 standard".to_string(), sl2_cobracket(true), trivial.clone()),
        (
            "one-sided".to_string(),
            CobracketTable::from_named(Q, two.basis(), &[("X", &[("X", "H0", 1)])]).unwrap(),
            trivial.clone(),
        ),
        (
            "not co-Jacobi".to_string(),
            CobracketTable::from_named(
                Q,
                fixtures::sl2().basis(),
                &[
                    ("e", &[("e", "h", 1), ("h", "e", -1)]),
                    ("h", &[("e", "f", 1), ("f", "e", -1)]),
                ],
            )
            .unwrap(),
            trivial,
        ),
    ];
    for (name, c, beta) in coalgebra_beta_corpus() {
        out.push((
            format!("cocommutator of {name}"),
            beta_cocommutator(&c, &beta).unwrap(),
            beta.clone(),
        ));
        let wrong = Bicharacter::trivial(beta.group(), beta.field());
        if wrong != beta {
            out.push((
                format!("cocommutator of {name}, read with trivial beta"),
                beta_cocommutator(&c, &beta).unwrap(),
                wrong,
            ));
        }
    }
    out
}

/// Lie algebras with cobrackets on the same basis.
pub fn bialgebra_corpus() -> Vec<(String, GradedLieAlgebra, CobracketTable)> {
    let (two, delta) = fixtures::two_dim_bialgebra();
    let mut out = vec![
        ("two-dim".to_string(), two.clone(), delta.clone()),
        (
            "two-dim, negated".to_string(),
            two.clone(),
            CobracketTable::new(
                Q,
                two.basis().clone(),
                delta.entries().map(|(&i, t)| (i, t.scaled(&Scalar::from_i64(Q, -1)))),
            )
            .unwrap(),
        ),
        ("sl2 half".to_string(), fixtures::sl2(), sl2_cobracket(false)),
        ("sl2 standard".to_string(), fixtures::sl2(), sl2_cobracket(true)),
    ];
    for (name, cp) in cobracked_corpus() {
        let (l, d) = dcs_bialgebra_unchecked(&cp).unwrap();
        out.push((format!("dcs of {name}"), l, d));
    }
    out
}

pub fn pair_corpus() -> Vec<(String, MatchedPair)> {
    let mut out: Vec<(String, MatchedPair)> = fixtures::matched_pairs()
        .into_iter()
        .chain(fixtures::broken_pairs())
        .map(|(n, p)| (n.to_string(), p))
        .collect();
    let split = fixtures::sl2_split();
    let (hb, ab) = (split.h().basis(), split.a().basis());
    let left = LeftAction::from_named(Q, hb, ab, &[("h", "e", &[("e", 2)]), ("f", "e", &[("e", 1)])]).unwrap();
    out.push((
        "sl2 split, f acts on e".into(),
        MatchedPair::new(split.a().clone(), split.h().clone(), left, split.right().clone()).unwrap(),
    ));
    let right = RightAction::from_named(Q, hb, ab, &[("f", "e", &[("h", 1)])]).unwrap();
    out.push((
        "sl2 split, f◁e = h".into(),
        MatchedPair::new(split.a().clone(), split.h().clone(), split.left().clone(), right).unwrap(),
    ));
    let rm = fixtures::right_module_example();
    let right = RightAction::from_named(Q, rm.h().basis(), rm.a().basis(), &[("t", "y", &[("t", 1)])]).unwrap();
    out.push((
        "right module, t◁y = t".into(),
        MatchedPair::new(rm.a().clone(), rm.h().clone(), rm.left().clone(), right).unwrap(),
    ));
    out
}

pub fn cobracked_corpus() -> Vec<(String, CobrackedPair)> {
    let zero = |p: &MatchedPair| {
        CobrackedPair::new(
            p.clone(),
            CobracketTable::zero(p.field(), p.a().basis().clone()),
            CobracketTable::zero(p.field(), p.h().basis().clone()),
        )
        .unwrap()
    };
    let mut out = vec![("bb3 failure".to_string(), fixtures::bb3_failure())];
    for (name, p) in fixtures::matched_pairs() {
        out.push((format!("{name}, zero cobrackets"), zero(&p)));
    }
    // right action against a nonzero cobracket on A
    let rm = fixtures::right_module_example();
    let delta_a = CobracketTable::from_named(Q, rm.a().basis(), &[("y", &[("y", "x", 1), ("x", "y", -1)])]).unwrap();
    let delta_h = CobracketTable::zero(Q, rm.h().basis().clone());
    out.push((
        "right module with cobracket".into(),
        CobrackedPair::new(rm, delta_a, delta_h).unwrap(),
    ));
    // 2-dim bialgebra with an extra derivation acting on it
    let (two, delta) = fixtures::two_dim_bialgebra();
    let hb = GradedBasis::ungraded(two.basis().group(), ["t"]).unwrap();
    let h = GradedLieAlgebra::abelian(hb.clone(), two.beta().clone()).unwrap();
    let left = LeftAction::from_named(Q, &hb, two.basis(), &[("t", "X", &[("X", 1)])]).unwrap();
    let pair = MatchedPair::semidirect(two.clone(), h, left).unwrap();
    out.push((
        "two-dim with t▷X = X".into(),
        CobrackedPair::new(pair, delta, CobracketTable::zero(Q, hb)).unwrap(),
    ));
    out
}

/// Form on `group` from a row-major table of values.
pub fn bichar_from(values: &[Scalar], group: &FiniteAbelianGroup) -> Bicharacter {
    let n = group.order();
    Bicharacter::from_fn(group, values[0].field(), |x, y| {
        values[group.index_of(x) * n + group.index_of(y)].clone()
    })
    .unwrap()
}

/// Cocycle on `group` from a row-major table of values.
pub fn cocycle_from(values: &[Scalar], group: &FiniteAbelianGroup) -> TwoCocycle {
    let n = group.order();
    TwoCocycle::from_fn(group, values[0].field(), |x, y| {
        values[group.index_of(x) * n + group.index_of(y)].clone()
    })
    .unwrap()
}
