//! Command dispatch. Each command calls one core operation; checked
//! constructions fall back to their unchecked form under `--force`.

use std::fmt;

use hbeta_core::colie::{beta_cocommutator, beta_cocommutator_unchecked, bialgebra_verify, colie_verify};
use hbeta_core::gradedalg::{
    assoc_verify, beta_commutator, beta_commutator_unchecked, lie_verify, twist_algebra, twist_algebra_unchecked,
    twist_lie, twist_lie_unchecked,
};
use hbeta_core::grading::{bichar_verify, cocycle_verify, twist_bicharacter, twist_bicharacter_unchecked};
use hbeta_core::matched::{
    bb3_verify, dcs_bialgebra, dcs_bialgebra_unchecked, double_cross_sum, double_cross_sum_unchecked, iso_check,
    iso_check_unchecked, matched_verify, split_from_decomposition, twist_matched_pair, twist_matched_pair_unchecked,
};
use hbeta_core::{Error, MatchedPair, Status, TwoCocycle, VerificationReport, VerifyOptions};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::document::{Document, InputError, Pair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    VerifyLie,
    VerifyColie,
    VerifyBialgebra,
    VerifyCocycle,
    VerifyBichar,
    VerifyMatched,
    VerifyBb3,
    BuildDcs,
    BuildDcsBialgebra,
    BuildBetaCommutator,
    BuildBetaCocommutator,
    TwistLie,
    TwistAlgebra,
    TwistBichar,
    TwistPair,
    IsoCheck,
    Split,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::VerifyLie => "verify-lie",
            Command::VerifyColie => "verify-colie",
            Command::VerifyBialgebra => "verify-bialgebra",
            Command::VerifyCocycle => "verify-cocycle",
            Command::VerifyBichar => "verify-bichar",
            Command::VerifyMatched => "verify-matched",
            Command::VerifyBb3 => "verify-bb3",
            Command::BuildDcs => "build-dcs",
            Command::BuildDcsBialgebra => "build-dcs-bialgebra",
            Command::BuildBetaCommutator => "build-beta-commutator",
            Command::BuildBetaCocommutator => "build-beta-cocommutator",
            Command::TwistLie => "twist-lie",
            Command::TwistAlgebra => "twist-algebra",
            Command::TwistBichar => "twist-bichar",
            Command::TwistPair => "twist-pair",
            Command::IsoCheck => "iso-check",
            Command::Split => "split",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, Default)]
pub struct Flags {
    pub entity: Option<String>,
    pub sigmas: Vec<String>,
    pub force: bool,
    pub witness_cap: Option<usize>,
}

impl Flags {
    fn opts(&self) -> VerifyOptions {
        match self.witness_cap {
            Some(cap) => VerifyOptions { witness_cap: cap },
            None => VerifyOptions::default(),
        }
    }
}

/// Machine-readable result of one invocation.
#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub input_sha256: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entity: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sigmas: Vec<String>,
    pub forced: bool,
    pub verdict: Status,
    #[serde(flatten)]
    pub report: VerificationReport,
}

pub struct Outcome {
    pub report: ReportDocument,
    /// Document built by a build or twist command.
    pub document: Option<Document>,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match self.report.verdict {
            Status::Pass => 0,
            Status::Fail => 1,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
}

pub fn digest(input: &[u8]) -> String {
    hex::encode(Sha256::digest(input))
}

fn pick<'a, T>(
    map: &'a std::collections::BTreeMap<String, T>,
    kind: &str,
    wanted: Option<&str>,
) -> Result<(&'a str, &'a T), RunError> {
    let flag = if kind == "sigma" { "--sigma" } else { "--entity" };
    match wanted {
        Some(name) => map.get_key_value(name).map(|(k, v)| (k.as_str(), v)).ok_or_else(|| {
            RunError::Usage(format!(
                "unknown name {name:?}: the document has no {kind} of that name"
            ))
        }),
        None => {
            let mut it = map.iter();
            match (it.next(), it.next()) {
                (Some((k, v)), None) => Ok((k.as_str(), v)),
                (None, _) => Err(RunError::Usage(format!("the document has no {kind}"))),
                _ => Err(RunError::Usage(format!(
                    "the document has several {kind} entries; choose one with {flag}"
                ))),
            }
        }
    }
}

/// Result of a checked construction: either the built value with nothing to
/// report, or the failed precondition report plus, under `--force`, the value
/// built anyway.
struct Built<T> {
    value: Option<T>,
    preconditions: Option<VerificationReport>,
}

fn build<T>(
    force: bool,
    checked: impl FnOnce() -> Result<T, Error>,
    unchecked: impl FnOnce() -> Result<T, Error>,
) -> Result<Built<T>, RunError> {
    match checked() {
        Ok(value) => Ok(Built {
            value: Some(value),
            preconditions: None,
        }),
        Err(Error::Precondition { report, .. }) => Ok(Built {
            value: if force { Some(unchecked()?) } else { None },
            preconditions: Some(*report),
        }),
        Err(e) => Err(e.into()),
    }
}

fn cobracked(pair_name: &str, pair: &Pair) -> Result<hbeta_core::CobrackedPair, RunError> {
    pair.cobracked
        .clone()
        .ok_or_else(|| RunError::Usage(format!("pair {pair_name:?} names no cobrackets (delta_a / delta_h)")))
}

fn one_sigma<'a>(doc: &'a Document, flags: &Flags) -> Result<(&'a str, &'a TwoCocycle), RunError> {
    if flags.sigmas.len() > 1 {
        return Err(RunError::Usage("this command takes a single --sigma".into()));
    }
    pick(&doc.sigmas, "sigma", flags.sigmas.first().map(String::as_str))
}

/// Copies the blocks of `pair` into `out` under their original names.
fn emit_pair(
    out: &mut Document,
    source: &Document,
    name: &str,
    p: &Pair,
    twisted: &MatchedPair,
) -> Result<(), RunError> {
    let space = |lie: &str| source.lie_algebras[lie].space.clone();
    let (sa, sh) = (space(&p.a), space(&p.h));
    out.add_lie(&p.a, &sa, twisted.a().clone());
    out.add_lie(&p.h, &sh, twisted.h().clone());
    if let Some(l) = &p.left {
        out.add_action_left(l, &sh, &sa, twisted.left().clone());
    }
    if let Some(r) = &p.right {
        out.add_action_right(r, &sh, &sa, twisted.right().clone());
    }
    out.add_pair(name, &p.a, &p.h, p.left.as_deref(), p.right.as_deref(), None)?;
    Ok(())
}

pub fn run(command: Command, doc: &Document, input: &[u8], flags: &Flags) -> Result<Outcome, RunError> {
    let opts = flags.opts();
    let entity = flags.entity.as_deref();
    let mut report = VerificationReport::new();
    let mut document = None;
    let mut chosen = None;
    let mut sigmas_used = Vec::new();

    macro_rules! finish_build {
        ($built:expr, $verify:expr, $emit:expr) => {{
            let built = $built;
            if let Some(pre) = built.preconditions {
                report.absorb("precondition", pre);
            }
            if let Some(value) = built.value {
                report.absorb("output", $verify(&value)?);
                document = Some($emit(value)?);
            }
        }};
    }

    match command {
        Command::VerifyLie => {
            let (name, l) = pick(&doc.lie_algebras, "Lie algebra", entity)?;
            chosen = Some(name);
            report = lie_verify(&l.lie, &opts);
        }
        Command::VerifyColie => {
            let (name, c) = pick(&doc.cobrackets, "cobracket", entity)?;
            chosen = Some(name);
            report = colie_verify(&c.table, &doc.beta, &opts)?;
        }
        Command::VerifyBialgebra => {
            let (name, b) = pick(&doc.bialgebras, "bialgebra", entity)?;
            chosen = Some(name);
            report = bialgebra_verify(
                &doc.lie_algebras[&b.lie].lie,
                &doc.cobrackets[&b.cobracket].table,
                &opts,
            )?;
        }
        Command::VerifyCocycle => {
            let wanted = flags.sigmas.first().map(String::as_str).or(entity);
            let (name, sigma) = pick(&doc.sigmas, "sigma", wanted)?;
            sigmas_used.push(name.to_string());
            report = cocycle_verify(sigma, &opts);
        }
        Command::VerifyBichar => {
            report = bichar_verify(&doc.beta, &opts);
        }
        Command::VerifyMatched => {
            let (name, p) = pick(&doc.pairs, "pair", entity)?;
            chosen = Some(name);
            report = matched_verify(&p.pair, &opts);
        }
        Command::VerifyBb3 => {
            let (name, p) = pick(&doc.pairs, "pair", entity)?;
            chosen = Some(name);
            report = bb3_verify(&cobracked(name, p)?, &opts);
        }
        Command::BuildDcs => {
            let (name, p) = pick(&doc.pairs, "pair", entity)?;
            chosen = Some(name);
            let out = format!("{name}_dcs");
            finish_build!(
                build(
                    flags.force,
                    || double_cross_sum(&p.pair),
                    || double_cross_sum_unchecked(&p.pair)
                )?,
                |l| Ok::<_, RunError>(lie_verify(l, &opts)),
                |l| {
                    let mut d = Document::new(doc.beta.clone());
                    d.add_lie(&out, &out, l);
                    Ok::<_, RunError>(d)
                }
            );
        }
        Command::BuildDcsBialgebra => {
            let (name, p) = pick(&doc.pairs, "pair", entity)?;
            chosen = Some(name);
            let cp = cobracked(name, p)?;
            let out = format!("{name}_dcs");
            finish_build!(
                build(flags.force, || dcs_bialgebra(&cp), || dcs_bialgebra_unchecked(&cp))?,
                |(l, d): &(_, _)| bialgebra_verify(l, d, &opts).map_err(RunError::from),
                |(l, d)| {
                    let mut doc = Document::new(doc.beta.clone());
                    doc.add_lie(&out, &out, l);
                    doc.add_cobracket(&out, &out, d);
                    doc.bialgebras.insert(
                        out.clone(),
                        crate::document::Bialgebra {
                            lie: out.clone(),
                            cobracket: out.clone(),
                        },
                    );
                    Ok::<_, RunError>(doc)
                }
            );
        }
        Command::BuildBetaCommutator => {
            let (name, a) = pick(&doc.algebras, "algebra", entity)?;
            chosen = Some(name);
            finish_build!(
                build(
                    flags.force,
                    || beta_commutator(&a.algebra, &doc.beta),
                    || beta_commutator_unchecked(&a.algebra, &doc.beta)
                )?,
                |l| Ok::<_, RunError>(lie_verify(l, &opts)),
                |l| {
                    let mut d = Document::new(doc.beta.clone());
                    d.add_lie(name, &a.space, l);
                    Ok::<_, RunError>(d)
                }
            );
        }
        Command::BuildBetaCocommutator => {
            let (name, c) = pick(&doc.coalgebras, "coalgebra", entity)?;
            chosen = Some(name);
            finish_build!(
                build(
                    flags.force,
                    || beta_cocommutator(&c.coalgebra, &doc.beta),
                    || beta_cocommutator_unchecked(&c.coalgebra, &doc.beta)
                )?,
                |d| colie_verify(d, &doc.beta, &opts).map_err(RunError::from),
                |d| {
                    let mut out = Document::new(doc.beta.clone());
                    out.add_cobracket(name, &c.space, d);
                    Ok::<_, RunError>(out)
                }
            );
        }
        Command::TwistLie => {
            let (name, l) = pick(&doc.lie_algebras, "Lie algebra", entity)?;
            let (sname, sigma) = one_sigma(doc, flags)?;
            chosen = Some(name);
            sigmas_used.push(sname.to_string());
            finish_build!(
                build(
                    flags.force,
                    || twist_lie(&l.lie, sigma),
                    || twist_lie_unchecked(&l.lie, sigma)
                )?,
                |t| Ok::<_, RunError>(lie_verify(t, &opts)),
                |t: hbeta_core::GradedLieAlgebra| {
                    let mut d = Document::new(t.beta().clone());
                    d.add_lie(name, &l.space, t);
                    Ok::<_, RunError>(d)
                }
            );
        }
        Command::TwistAlgebra => {
            let (name, a) = pick(&doc.algebras, "algebra", entity)?;
            let (sname, sigma) = one_sigma(doc, flags)?;
            chosen = Some(name);
            sigmas_used.push(sname.to_string());
            let beta = twist_bicharacter_unchecked(&doc.beta, sigma)?;
            finish_build!(
                build(
                    flags.force,
                    || twist_algebra(&a.algebra, sigma),
                    || twist_algebra_unchecked(&a.algebra, sigma)
                )?,
                |t| Ok::<_, RunError>(assoc_verify(t, &opts)),
                |t| {
                    let mut d = Document::new(beta);
                    d.add_algebra(name, &a.space, t);
                    Ok::<_, RunError>(d)
                }
            );
        }
        Command::TwistBichar => {
            let (sname, sigma) = one_sigma(doc, flags)?;
            sigmas_used.push(sname.to_string());
            finish_build!(
                build(
                    flags.force,
                    || twist_bicharacter(&doc.beta, sigma),
                    || twist_bicharacter_unchecked(&doc.beta, sigma)
                )?,
                |b| Ok::<_, RunError>(bichar_verify(b, &opts)),
                |b| Ok::<_, RunError>(Document::new(b))
            );
        }
        Command::TwistPair => {
            let (name, p) = pick(&doc.pairs, "pair", entity)?;
            let (sname, sigma) = one_sigma(doc, flags)?;
            chosen = Some(name);
            sigmas_used.push(sname.to_string());
            finish_build!(
                build(
                    flags.force,
                    || twist_matched_pair(&p.pair, sigma),
                    || twist_matched_pair_unchecked(&p.pair, sigma)
                )?,
                |t| Ok::<_, RunError>(matched_verify(t, &opts)),
                |t: MatchedPair| {
                    let mut d = Document::new(t.beta().clone());
                    emit_pair(&mut d, doc, name, p, &t)?;
                    Ok::<_, RunError>(d)
                }
            );
        }
        Command::IsoCheck => {
            let (name, p) = pick(&doc.pairs, "pair", entity)?;
            chosen = Some(name);
            match flags.sigmas.len() {
                0 | 1 => {
                    let (sname, sigma) = one_sigma(doc, flags)?;
                    sigmas_used.push(sname.to_string());
                    let built = build(
                        flags.force,
                        || iso_check(&p.pair, sigma, &opts),
                        || iso_check_unchecked(&p.pair, sigma, sigma, &opts),
                    )?;
                    if let Some(pre) = built.preconditions {
                        report.absorb("precondition", pre);
                    }
                    if let Some(r) = built.value {
                        report.absorb("", r);
                    }
                }
                2 => {
                    if !flags.force {
                        return Err(RunError::Usage(
                            "iso-check with two cocycles compares different twists and needs --force".into(),
                        ));
                    }
                    let (n1, s1) = pick(&doc.sigmas, "sigma", Some(&flags.sigmas[0]))?;
                    let (n2, s2) = pick(&doc.sigmas, "sigma", Some(&flags.sigmas[1]))?;
                    sigmas_used.extend([n1.to_string(), n2.to_string()]);
                    report = iso_check_unchecked(&p.pair, s1, s2, &opts)?;
                }
                _ => return Err(RunError::Usage("iso-check takes at most two --sigma".into())),
            }
        }
        Command::Split => {
            let (name, s) = pick(&doc.splits, "split", entity)?;
            chosen = Some(name);
            let l = &doc.lie_algebras[&s.lie];
            let basis = l.lie.basis();
            let index = |names: &[String]| names.iter().map(|n| basis.index(n)).collect::<Result<Vec<_>, _>>();
            let (a, h) = (index(&s.a)?, index(&s.h)?);
            let pair = split_from_decomposition(&l.lie, &a, &h)?;
            report.absorb("output", matched_verify(&pair, &opts));
            let (an, hn) = (format!("{name}_A"), format!("{name}_H"));
            let (ln, rn) = (format!("{name}_left"), format!("{name}_right"));
            let mut d = Document::new(doc.beta.clone());
            d.add_lie(&an, &an, pair.a().clone());
            d.add_lie(&hn, &hn, pair.h().clone());
            d.add_action_left(&ln, &hn, &an, pair.left().clone());
            d.add_action_right(&rn, &hn, &an, pair.right().clone());
            d.add_pair(name, &an, &hn, Some(&ln), Some(&rn), None)?;
            document = Some(d);
        }
    }

    let verdict = if report.passed() { Status::Pass } else { Status::Fail };
    Ok(Outcome {
        report: ReportDocument {
            tool: "hbeta",
            version: env!("CARGO_PKG_VERSION"),
            command: command.name().to_string(),
            input_sha256: digest(input),
            entity: chosen.map(str::to_string),
            sigmas: sigmas_used,
            forced: flags.force,
            verdict,
            report,
        },
        document,
    })
}
