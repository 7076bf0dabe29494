#![allow(dead_code)]

use std::path::PathBuf;

use hbeta_cli::Document;
use hbeta_core::{fixtures, Bicharacter, CobracketTable, FieldDescriptor, FiniteAbelianGroup, MatchedPair};

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn fixture(name: &str) -> PathBuf {
    fixture_dir().join(format!("{name}.json"))
}

fn add_pair(doc: &mut Document, name: &str, pair: &MatchedPair, deltas: Option<(CobracketTable, CobracketTable)>) {
    let (a, h) = (format!("{name}_A"), format!("{name}_H"));
    doc.add_lie(&a, &a, pair.a().clone());
    doc.add_lie(&h, &h, pair.h().clone());
    let (mut left, mut right) = (None, None);
    if !pair.left().is_zero() {
        let n = format!("{name}_left");
        doc.add_action_left(&n, &h, &a, pair.left().clone());
        left = Some(n);
    }
    if !pair.right().is_zero() {
        let n = format!("{name}_right");
        doc.add_action_right(&n, &h, &a, pair.right().clone());
        right = Some(n);
    }
    let names = deltas.map(|(da, dh)| {
        let (na, nh) = (format!("{name}_delta_A"), format!("{name}_delta_H"));
        doc.add_cobracket(&na, &a, da);
        doc.add_cobracket(&nh, &h, dh);
        (na, nh)
    });
    doc.add_pair(
        name,
        &a,
        &h,
        left.as_deref(),
        right.as_deref(),
        names.as_ref().map(|(x, y)| (x.as_str(), y.as_str())),
    )
    .unwrap();
}

fn zero_deltas(pair: &MatchedPair) -> (CobracketTable, CobracketTable) {
    (
        CobracketTable::zero(pair.field(), pair.a().basis().clone()),
        CobracketTable::zero(pair.field(), pair.h().basis().clone()),
    )
}

/// Every shipped fixture, built from the core fixtures.
pub fn fixture_documents() -> Vec<(&'static str, Document)> {
    let q = FieldDescriptor::Rationals;
    let f5 = FieldDescriptor::prime(5).unwrap();
    let mut out = Vec::new();

    let mut minimal = Document::new(Bicharacter::trivial(&FiniteAbelianGroup::trivial(), q));
    let basis = hbeta_core::GradedBasis::ungraded(&FiniteAbelianGroup::trivial(), ["x"]).unwrap();
    minimal.add_lie(
        "line",
        "V",
        hbeta_core::GradedLieAlgebra::abelian(basis, minimal.beta.clone()).unwrap(),
    );
    out.push(("minimal", minimal));

    let sl2 = fixtures::sl2();
    let mut doc = Document::new(sl2.beta().clone());
    doc.add_lie("sl2", "L", sl2.clone());
    doc.splits.insert(
        "borel".into(),
        hbeta_cli::document::Split {
            lie: "sl2".into(),
            a: vec!["e".into()],
            h: vec!["h".into(), "f".into()],
        },
    );
    doc.splits.insert(
        "not_closed".into(),
        hbeta_cli::document::Split {
            lie: "sl2".into(),
            a: vec!["e".into(), "f".into()],
            h: vec!["h".into()],
        },
    );
    out.push(("sl2", doc));

    let mut doc = Document::new(sl2.beta().clone());
    doc.add_lie("sl2_perturbed", "L", fixtures::sl2_perturbed());
    out.push(("sl2_perturbed", doc));

    let mut doc = Document::new(sl2.beta().clone());
    let split = fixtures::sl2_split();
    let deltas = zero_deltas(&split);
    add_pair(&mut doc, "split", &split, Some(deltas));
    add_pair(&mut doc, "perturbed", &fixtures::sl2_split_perturbed(), None);
    out.push(("sl2_split", doc));

    let gl = fixtures::matrix_units(q, true);
    let mut doc = Document::new(Bicharacter::sign(q));
    doc.add_algebra("M", "E", gl);
    doc.add_coalgebra("C", "E", fixtures::comatrix(q, true));
    out.push(("matrix_units", doc));

    let (two, delta) = fixtures::two_dim_bialgebra();
    let mut doc = Document::new(two.beta().clone());
    doc.add_lie("L", "V", two);
    doc.add_cobracket("delta", "V", delta);
    doc.bialgebras.insert(
        "two_dim".into(),
        hbeta_cli::document::Bialgebra {
            lie: "L".into(),
            cobracket: "delta".into(),
        },
    );
    out.push(("two_dim_bialgebra", doc));

    let bb3 = fixtures::bb3_failure();
    let mut doc = Document::new(bb3.pair().beta().clone());
    add_pair(
        &mut doc,
        "bb3",
        bb3.pair(),
        Some((bb3.delta_a().clone(), bb3.delta_h().clone())),
    );
    out.push(("bb3_failure", doc));

    let semi = fixtures::semidirect_1d();
    let mut doc = Document::new(semi.beta().clone());
    add_pair(&mut doc, "semidirect", &semi, None);
    out.push(("semidirect", doc));

    let sup = fixtures::super_pair();
    let mut doc = Document::new(Bicharacter::sign(f5));
    add_pair(&mut doc, "super", &sup, None);
    add_pair(&mut doc, "broken", &fixtures::super_pair_broken(), None);
    doc.sigmas.insert("two_pow_xy".into(), fixtures::sigma_two_pow_xy());
    doc.sigmas.insert(
        "not_a_cocycle".into(),
        hbeta_core::TwoCocycle::from_fn(sup.beta().group(), f5, |x, y| {
            hbeta_core::Scalar::from_i64(
                f5,
                if x.residues()[0] == 1 && y.residues()[0] == 0 {
                    2
                } else {
                    1
                },
            )
        })
        .unwrap(),
    );
    out.push(("super_pair", doc));

    let color = fixtures::color_pair();
    let mut doc = Document::new(color.beta().clone());
    add_pair(&mut doc, "color", &color, None);
    for (k, s) in fixtures::color_sigmas().into_iter().enumerate() {
        doc.sigmas.insert(format!("sigma{k}"), s);
    }
    out.push(("color_pair", doc));

    out
}
