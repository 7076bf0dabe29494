//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails. All comparisons are exact.

mod corpus;
mod oracle;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use corpus::*;
use hbeta_core::colie::{beta_cocommutator, bialgebra_verify, colie_verify};
use hbeta_core::fixtures;
use hbeta_core::gradedalg::{beta_commutator, lie_verify};
use hbeta_core::grading::{bichar_verify, cocycle_verify, twist_bicharacter};
use hbeta_core::matched::{
    bb1_verify, bb2_verify, bb3_verify, dcs_bialgebra, double_cross_sum, iso_check, matched_verify,
    split_from_decomposition, twist_matched_pair,
};
use hbeta_core::report::Term;
use hbeta_core::{
    Bicharacter, BilinearTable, CobrackedPair, CobracketTable, FiniteAbelianGroup, GradedLieAlgebra, GradedVector,
    MatchedPair, Scalar, TwoCocycle, VerificationReport, VerifyOptions,
};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn all() -> VerifyOptions {
    VerifyOptions::exhaustive()
}

fn fail_ids(r: &VerificationReport) -> String {
    r.failed_ids().join(", ")
}

fn criterion_1() -> Outcome {
    let sl2 = lie_verify(&fixtures::sl2(), &all());
    ensure!(sl2.passed(), "sl(2) fails {}", fail_ids(&sl2));
    let gl = beta_commutator(&fixtures::matrix_units(Q, true), &Bicharacter::sign(Q)).map_err(|e| e.to_string())?;
    let r = lie_verify(&gl, &all());
    ensure!(r.passed(), "gl(1|1) fails {}", fail_ids(&r));
    let r = lie_verify(&fixtures::sl2_perturbed(), &all());
    let jacobi = r.check("jacobi").ok_or("no jacobi check")?;
    ensure!(!jacobi.passed(), "perturbed sl(2) passes Jacobi");
    ensure!(
        r.check("anticommutativity").unwrap().passed(),
        "perturbation broke anticommutativity"
    );
    let w = jacobi
        .witnesses
        .iter()
        .find(|w| w.at == ["h", "e", "f"])
        .ok_or("no witness at (h,e,f)")?;
    ensure!(w.residual.to_string() == "h", "residual at (h,e,f) is {}", w.residual);
    Ok(format!(
        "sl(2), gl(1|1) pass; perturbed Jacobi fails at (h,e,f) with residual h ({} failing triples)",
        jacobi.failures
    ))
}

fn criterion_2() -> Outcome {
    let mut count = 0;
    for (name, algebra, beta) in algebra_beta_corpus() {
        let l = beta_commutator(&algebra, &beta).map_err(|e| format!("{name}: {e}"))?;
        let r = lie_verify(&l, &all());
        ensure!(r.passed(), "commutator of {name} fails {}", fail_ids(&r));
        count += 1;
    }
    for (name, coalgebra, beta) in coalgebra_beta_corpus() {
        let d = beta_cocommutator(&coalgebra, &beta).map_err(|e| format!("{name}: {e}"))?;
        let r = colie_verify(&d, &beta, &all()).map_err(|e| e.to_string())?;
        ensure!(r.passed(), "cocommutator of {name} fails {}", fail_ids(&r));
        count += 1;
    }
    let c = fixtures::comatrix(Q, true);
    let d = beta_cocommutator(&c, &Bicharacter::sign(Q)).unwrap();
    let e11 = c.basis().index("E11").unwrap();
    let got = Term::combination(&d.delta(e11), |&(j, k)| {
        vec![c.basis().name(j).to_string(), c.basis().name(k).to_string()]
    });
    ensure!(got.to_string() == "E12⊗E21 + E21⊗E12", "graded comatrix δ(E11) = {got}");
    Ok(format!("{count} (algebra/coalgebra, β) fixtures pass"))
}

fn twisted_bichar_passes(beta: &Bicharacter, sigma: &TwoCocycle) -> Result<(), String> {
    let t = twist_bicharacter(beta, sigma).map_err(|e| e.to_string())?;
    let r = bichar_verify(&t, &VerifyOptions::default());
    ensure!(r.passed(), "twist fails {}", fail_ids(&r));
    Ok(())
}

fn criterion_3() -> Outcome {
    let f5 = fp(5);
    let z2 = FiniteAbelianGroup::cyclic(2);
    let tables: Vec<Vec<Scalar>> = (0..256)
        .map(|n: u32| {
            (0..4)
                .map(|k| Scalar::from_i64(f5, i64::from((n >> (2 * k)) & 3) + 1))
                .collect()
        })
        .collect();
    let bichars: Vec<Bicharacter> = tables
        .iter()
        .map(|t| bichar_from(t, &z2))
        .filter(|b| bichar_verify(b, &VerifyOptions::default()).passed())
        .collect();
    let cocycles: Vec<TwoCocycle> = tables
        .iter()
        .map(|t| cocycle_from(t, &z2))
        .filter(|s| cocycle_verify(s, &VerifyOptions::default()).passed())
        .collect();
    ensure!(
        bichars.len() == 2,
        "expected 2 bicharacters on Z_2 over F_5, found {}",
        bichars.len()
    );
    let z2_cocycles = cocycles.len();
    let mut pairs = 0;
    for b in &bichars {
        for s in &cocycles {
            twisted_bichar_passes(b, s).map_err(|e| format!("Z_2: {e}"))?;
            pairs += 1;
        }
    }

    // Z_2 × Z_2: sign bicharacters (−1)^{xᵀBy} and cocycles generated by
    // (−1)^{xᵀCy}, constants and coboundaries.
    let g = z2z2();
    let sign = |e: u32| Scalar::from_i64(f5, if e % 2 == 0 { 1 } else { -1 });
    let bilinear = |m: u32, x: &[u32], y: &[u32]| -> u32 {
        (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| ((m >> (2 * i + j)) & 1) * x[i] * y[j])
            .sum()
    };
    let bichars: Vec<Bicharacter> = (0..16)
        .map(|m| Bicharacter::from_fn(&g, f5, |x, y| sign(bilinear(m, x.residues(), y.residues()))).unwrap())
        .filter(|b| bichar_verify(b, &VerifyOptions::default()).passed())
        .collect();
    let mut generators = Vec::new();
    for m in 0..16 {
        for c in 1..5 {
            generators.push(
                TwoCocycle::from_fn(&g, f5, |x, y| {
                    &Scalar::from_i64(f5, c) * &sign(bilinear(m, x.residues(), y.residues()))
                })
                .unwrap(),
            );
        }
    }
    for seed in 0..8u32 {
        let f: Vec<Scalar> = (0..4)
            .map(|i| Scalar::from_i64(f5, i64::from((seed * 3 + i * 7) % 4) + 1))
            .collect();
        generators.push(
            TwoCocycle::from_fn(&g, f5, |x, y| {
                let ix = g.index_of(x);
                let iy = g.index_of(y);
                let ixy = g.index_of(&g.add(x, y));
                &(&f[ix] * &f[iy]) * &f[ixy].inv()
            })
            .unwrap(),
        );
    }
    let cocycles: Vec<&TwoCocycle> = generators
        .iter()
        .filter(|s| cocycle_verify(s, &VerifyOptions::default()).passed())
        .collect();
    let mut pairs4 = 0;
    for b in &bichars {
        for s in &cocycles {
            twisted_bichar_passes(b, s).map_err(|e| format!("Z_2 x Z_2: {e}"))?;
            pairs4 += 1;
        }
    }
    Ok(format!(
        "Z_2: {pairs} (β, σ) pairs from {} cocycles; Z_2×Z_2: {pairs4} pairs from {} bicharacters × {} cocycles",
        z2_cocycles,
        bichars.len(),
        cocycles.len()
    ))
}

fn criterion_4() -> Outcome {
    let sl2 = fixtures::sl2();
    let b = sl2.basis();
    let i = |n: &str| b.index(n).unwrap();
    let pair = split_from_decomposition(&sl2, &[i("e")], &[i("f"), i("h")]).map_err(|e| e.to_string())?;
    let dcs = double_cross_sum(&pair).map_err(|e| e.to_string())?;
    ensure!(dcs == sl2, "sl(2) round trip differs");
    let pair = split_from_decomposition(&sl2, &[i("e")], &[i("h"), i("f")]).map_err(|e| e.to_string())?;
    ensure!(pair == fixtures::sl2_split(), "split of sl(2) is not the split fixture");
    ensure!(
        double_cross_sum(&pair).unwrap().same_structure(&sl2),
        "sl(2) round trip with H = (h, f) differs"
    );

    let semi = double_cross_sum(&fixtures::semidirect_1d()).map_err(|e| e.to_string())?;
    let sb = semi.basis();
    let (a, t) = (sb.index("a").unwrap(), sb.index("t").unwrap());
    let r = lie_verify(&semi, &all());
    ensure!(r.passed(), "semidirect dcs fails {}", fail_ids(&r));
    let expected = BilinearTable::square(
        Q,
        sb.clone(),
        [
            ((t, a), GradedVector::term(a, Scalar::one(Q))),
            ((a, t), GradedVector::term(a, Scalar::from_i64(Q, -1))),
        ],
    )
    .unwrap();
    ensure!(semi.bracket() == &expected, "semidirect dcs is not [t,a] = a");

    let mut direct = 0;
    for (x, y) in [
        (fixtures::sl2(), fixtures::two_dim_bialgebra().0),
        (fixtures::super_pair().a().clone(), fixtures::super_pair().h().clone()),
        (fixtures::color_pair().a().clone(), fixtures::color_pair().h().clone()),
    ] {
        let pair = MatchedPair::direct_sum(x.clone(), y.clone()).map_err(|e| e.to_string())?;
        let dcs = double_cross_sum(&pair).map_err(|e| e.to_string())?;
        let n = x.dim();
        let mut entries: Vec<_> = x.bracket().entries().map(|(&k, v)| (k, v.clone())).collect();
        entries.extend(
            y.bracket()
                .entries()
                .map(|(&(p, q), v)| ((n + p, n + q), v.map_keys(|&k| n + k))),
        );
        let expected = BilinearTable::square(x.field(), x.basis().concat(y.basis()).unwrap(), entries).unwrap();
        ensure!(dcs.bracket() == &expected, "zero-action dcs is not the direct sum");
        direct += 1;
    }
    Ok(format!(
        "sl(2) round trip identical; semidirect gives [t,a] = a; {direct} direct sums match"
    ))
}

fn criterion_5() -> Outcome {
    let (lie, delta) = fixtures::two_dim_bialgebra();
    let r = bialgebra_verify(&lie, &delta, &all()).map_err(|e| e.to_string())?;
    ensure!(r.passed(), "2-dim bialgebra fails {}", fail_ids(&r));

    let cp = fixtures::bb3_failure();
    let r = bb3_verify(&cp, &all());
    let bb3 = r.check("BB3").unwrap();
    ensure!(!bb3.passed(), "BB3 fixture passes");
    ensure!(bb3.failures == 1, "BB3 fixture has {} failures", bb3.failures);
    let w = &bb3.witnesses[0];
    ensure!(w.at == ["x", "a"], "BB3 witness at {:?}", w.at);
    ensure!(w.residual.to_string() == "x⊗a", "BB3 residual {}", w.residual);

    let pair = fixtures::sl2_split();
    let zero = CobrackedPair::new(
        pair.clone(),
        CobracketTable::zero(Q, pair.a().basis().clone()),
        CobracketTable::zero(Q, pair.h().basis().clone()),
    )
    .unwrap();
    let (l, d) = dcs_bialgebra(&zero).map_err(|e| e.to_string())?;
    let r = bialgebra_verify(&l, &d, &all()).map_err(|e| e.to_string())?;
    ensure!(r.passed(), "dcs bialgebra of sl(2) split fails {}", fail_ids(&r));
    Ok(
        "2-dim bialgebra passes; BB3 fails at (x,a) with residual x⊗a; zero-cobracket sl(2) dcs bialgebra passes"
            .into(),
    )
}

fn criterion_6() -> Outcome {
    let mut combos = 0;
    for (name, pair) in fixtures::matched_pairs() {
        for sigma in fixtures::cocycles_for(&pair) {
            let twisted = twist_matched_pair(&pair, &sigma).map_err(|e| format!("{name}: {e}"))?;
            let beta_sigma = twist_bicharacter(pair.beta(), &sigma).map_err(|e| e.to_string())?;
            ensure!(twisted.beta() == &beta_sigma, "{name}: twisted pair is not over β^σ");
            let r = matched_verify(&twisted, &all());
            ensure!(r.passed(), "{name}: twisted pair fails {}", fail_ids(&r));
            combos += 1;
        }
    }
    let pair = fixtures::super_pair();
    let twisted = twist_matched_pair(&pair, &fixtures::sigma_two_pow_xy()).unwrap();
    let ab = twisted.a().basis();
    let a1 = ab.index("a1").unwrap();
    let v = twisted.a().bracket_basis(a1, a1);
    ensure!(
        ab.vector_term(&v).to_string() == "2·a2",
        "[a1,a1]^σ = {}",
        ab.vector_term(&v)
    );
    ensure!(twisted.left() == pair.left(), "super actions changed");
    Ok(format!("{combos} (pair, σ) combinations pass under β^σ"))
}

fn table_entries(l: &GradedLieAlgebra) -> Vec<(String, String, GradedVector)> {
    let b = l.basis();
    l.bracket()
        .entries()
        .map(|(&(i, j), v)| (b.name(i).to_string(), b.name(j).to_string(), v.clone()))
        .collect()
}

fn criterion_7() -> Outcome {
    let mut combos = 0;
    for (name, pair) in fixtures::matched_pairs() {
        for sigma in fixtures::cocycles_for(&pair) {
            let r = iso_check(&pair, &sigma, &all()).map_err(|e| format!("{name}: {e}"))?;
            ensure!(r.passed(), "{name}: iso_check fails {}", fail_ids(&r));
            combos += 1;
        }
    }
    let pair = fixtures::super_pair();
    let sigma = fixtures::sigma_two_pow_xy();
    let t1 = double_cross_sum(&twist_matched_pair(&pair, &sigma).unwrap()).unwrap();
    let t2 = hbeta_core::gradedalg::twist_lie(&double_cross_sum(&pair).unwrap(), &sigma).unwrap();
    let f5 = fp(5);
    let b = t1.basis();
    let (a1, a2) = (b.index("a1").unwrap(), b.index("a2").unwrap());
    let s = |n| Scalar::from_i64(f5, n);
    let v = |k, c| GradedVector::term(k, s(c));
    // the three stated brackets and their β-flips [a1,h] = −a1, [a2,h] = −2a2
    let expected = vec![
        ("a1".to_string(), "a1".to_string(), v(a2, 2)),
        ("a1".to_string(), "h".to_string(), v(a1, -1)),
        ("a2".to_string(), "h".to_string(), v(a2, -2)),
        ("h".to_string(), "a1".to_string(), v(a1, 1)),
        ("h".to_string(), "a2".to_string(), v(a2, 2)),
    ];
    for (label, t) in [("A^σ ⋈ H^σ", &t1), ("(A ⋈ H)^σ", &t2)] {
        let got = table_entries(t);
        ensure!(got == expected, "{label} table is {:?}", got);
    }
    Ok(format!(
        "{combos} combinations pass; twisted super table is [a1,a1] = 2a2, [h,a1] = a1, [h,a2] = 2a2 (plus flips) both ways"
    ))
}

fn compare(
    what: &str,
    name: &str,
    check: Option<&hbeta_core::Check>,
    expected: &oracle::WitnessSet,
) -> Result<(), String> {
    let check = check.ok_or_else(|| format!("{what} missing on {name}"))?;
    let got = oracle::from_check(check);
    ensure!(
        &got == expected,
        "{what} on {name}: sparse {:?} vs dense {:?}",
        got,
        expected
    );
    ensure!(
        check.passed() == expected.is_empty(),
        "{what} on {name}: verdict differs"
    );
    ensure!(
        check.failures == expected.len(),
        "{what} on {name}: failure count differs"
    );
    Ok(())
}

fn criterion_8() -> Outcome {
    let mut checks = 0;
    let mut failing = 0;
    let mut tally = |set: &oracle::WitnessSet| {
        checks += 1;
        if !set.is_empty() {
            failing += 1;
        }
    };
    for (name, l) in lie_corpus() {
        let r = lie_verify(&l, &all());
        let o = oracle::lie(&l);
        compare("grading", &name, r.check("grading"), &o.grading)?;
        compare(
            "anticommutativity",
            &name,
            r.check("anticommutativity"),
            &o.anticommutativity,
        )?;
        compare("jacobi", &name, r.check("jacobi"), &o.jacobi)?;
        tally(&o.grading);
        tally(&o.anticommutativity);
        tally(&o.jacobi);
    }
    for (name, d, beta) in colie_corpus() {
        let r = colie_verify(&d, &beta, &all()).map_err(|e| e.to_string())?;
        let o = oracle::colie(&d, &beta);
        compare("grading", &name, r.check("grading"), &o.grading)?;
        compare(
            "anticocommutativity",
            &name,
            r.check("anticocommutativity"),
            &o.anticocommutativity,
        )?;
        compare("co_jacobi", &name, r.check("co_jacobi"), &o.co_jacobi)?;
        tally(&o.grading);
        tally(&o.anticocommutativity);
        tally(&o.co_jacobi);
    }
    for (name, l, d) in bialgebra_corpus() {
        let r = bialgebra_verify(&l, &d, &all()).map_err(|e| e.to_string())?;
        let o = oracle::lb(&l, &d);
        compare("LB", &name, r.check("LB"), &o)?;
        tally(&o);
    }
    for (name, pair) in pair_corpus() {
        let o1 = oracle::bb1(&pair);
        let o2 = oracle::bb2(&pair);
        compare("BB1", &name, bb1_verify(&pair, &all()).check("BB1"), &o1)?;
        compare("BB2", &name, bb2_verify(&pair, &all()).check("BB2"), &o2)?;
        tally(&o1);
        tally(&o2);
    }
    for (name, cp) in cobracked_corpus() {
        let o = oracle::bb3(&cp);
        compare("BB3", &name, bb3_verify(&cp, &all()).check("BB3"), &o)?;
        tally(&o);
    }
    ensure!(failing > 0, "corpus has no failing checks");
    Ok(format!(
        "{checks} checks agree with the dense evaluator ({failing} of them failing)"
    ))
}

fn determinism_report() -> String {
    let opts = VerifyOptions::default();
    let mut report = VerificationReport::new();
    for (name, l) in lie_corpus() {
        report.absorb(&name, lie_verify(&l, &opts));
    }
    for (name, d, beta) in colie_corpus() {
        report.absorb(&name, colie_verify(&d, &beta, &opts).unwrap());
    }
    for (name, pair) in pair_corpus() {
        report.absorb(&name, matched_verify(&pair, &opts));
    }
    for (name, cp) in cobracked_corpus() {
        report.absorb(&name, bb3_verify(&cp, &opts));
    }
    serde_json::to_string(&report).unwrap()
}

fn criterion_9() -> Outcome {
    let reference = determinism_report();
    ensure!(reference == determinism_report(), "two runs differ");
    for threads in [1, 2, 8] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| e.to_string())?;
        let got = pool.install(determinism_report);
        ensure!(got == reference, "report differs with {threads} threads");
    }
    Ok(format!(
        "{} byte report identical across runs and 1/2/8 threads",
        reference.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("Lie axioms", criterion_1),
        ("commutator and cocommutator constructions", criterion_2),
        ("twisted bicharacters", criterion_3),
        ("double cross sum", criterion_4),
        ("Lie bialgebras and BB3", criterion_5),
        ("twisted matched pairs", criterion_6),
        ("iso check", criterion_7),
        ("oracle equivalence", criterion_8),
        ("determinism", criterion_9),
    ];
    let mut failed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {title}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {title}: {detail}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
