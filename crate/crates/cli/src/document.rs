//! The JSON document format.
//!
//! A document fixes one field, one grading group and one bicharacter β, then
//! declares named spaces and the structures living on them. Omitted β and σ
//! entries are 1 and omitted structure constants are 0; `"defaults_ack":
//! true` is mandatory so that nobody relies on those defaults by accident.
//!
//! [`parse`] validates every block through the core constructors and
//! [`Document::to_json`] writes the canonical form, so parsing the canonical
//! text gives back an equal document.

use std::collections::BTreeMap;

use hbeta_core::{
    Bicharacter, BilinearTable, CobrackedPair, CobracketTable, FieldDescriptor, FiniteAbelianGroup, GradedAlgebra,
    GradedBasis, GradedCoalgebra, GradedLieAlgebra, GradedVector, GroupElement, LeftAction, MatchedPair, RightAction,
    Scalar, Tensor2, TwoCocycle,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    Invalid { path: String, message: String },
}

impl InputError {
    fn at(path: impl Into<String>, message: impl ToString) -> Self {
        InputError::Invalid {
            path: path.into(),
            message: message.to_string(),
        }
    }
}

type Result<T, E = InputError> = std::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum RawScalar {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFormEntry {
    x: Vec<i64>,
    y: Vec<i64>,
    value: RawScalar,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBasisElement {
    name: String,
    #[serde(default)]
    degree: Option<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProductEntry {
    x: String,
    y: String,
    out: Vec<(String, RawScalar)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCoEntry {
    x: String,
    out: Vec<(String, String, RawScalar)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    space: String,
    #[serde(default)]
    product: Vec<RawProductEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    unit: Option<Vec<(String, RawScalar)>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLie {
    space: String,
    #[serde(default)]
    bracket: Vec<RawProductEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCoalgebra {
    space: String,
    #[serde(default)]
    coproduct: Vec<RawCoEntry>,
    #[serde(default)]
    counit: Vec<(String, RawScalar)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCobracket {
    space: String,
    #[serde(default)]
    delta: Vec<RawCoEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBialgebra {
    lie: String,
    cobracket: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ActionKind {
    Left,
    Right,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAction {
    kind: ActionKind,
    h: String,
    a: String,
    #[serde(default)]
    entries: Vec<RawProductEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPair {
    a: String,
    h: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    left: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    right: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    delta_a: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    delta_h: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSplit {
    lie: String,
    a: Vec<String>,
    h: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    defaults_ack: bool,
    field: String,
    group: Vec<i64>,
    #[serde(default)]
    beta: Vec<RawFormEntry>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    sigmas: BTreeMap<String, Vec<RawFormEntry>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    spaces: BTreeMap<String, Vec<RawBasisElement>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    algebras: BTreeMap<String, RawAlgebra>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    lie_algebras: BTreeMap<String, RawLie>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    coalgebras: BTreeMap<String, RawCoalgebra>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    cobrackets: BTreeMap<String, RawCobracket>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    bialgebras: BTreeMap<String, RawBialgebra>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    actions: BTreeMap<String, RawAction>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pairs: BTreeMap<String, RawPair>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    splits: BTreeMap<String, RawSplit>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub space: String,
    pub algebra: GradedAlgebra,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lie {
    pub space: String,
    pub lie: GradedLieAlgebra,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    pub space: String,
    pub coalgebra: GradedCoalgebra,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cobracket {
    pub space: String,
    pub table: CobracketTable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    pub lie: String,
    pub cobracket: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Action {
    Left { h: String, a: String, action: LeftAction },
    Right { h: String, a: String, action: RightAction },
}

impl Action {
    fn spaces(&self) -> (&str, &str) {
        match self {
            Action::Left { h, a, .. } | Action::Right { h, a, .. } => (h, a),
        }
    }

    fn table(&self) -> &BilinearTable {
        match self {
            Action::Left { action, .. } => action.table(),
            Action::Right { action, .. } => action.table(),
        }
    }

    fn kind(&self) -> ActionKind {
        match self {
            Action::Left { .. } => ActionKind::Left,
            Action::Right { .. } => ActionKind::Right,
        }
    }
}

/// Names of the blocks a pair is assembled from, with the assembled pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pair {
    pub a: String,
    pub h: String,
    pub left: Option<String>,
    pub right: Option<String>,
    pub delta_a: Option<String>,
    pub delta_h: Option<String>,
    pub pair: MatchedPair,
    /// Present when the pair names at least one cobracket; a missing one is zero.
    pub cobracked: Option<CobrackedPair>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub lie: String,
    pub a: Vec<String>,
    pub h: Vec<String>,
}

/// A validated document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub field: FieldDescriptor,
    pub group: FiniteAbelianGroup,
    pub beta: Bicharacter,
    pub sigmas: BTreeMap<String, TwoCocycle>,
    pub spaces: BTreeMap<String, GradedBasis>,
    pub algebras: BTreeMap<String, Algebra>,
    pub lie_algebras: BTreeMap<String, Lie>,
    pub coalgebras: BTreeMap<String, Coalgebra>,
    pub cobrackets: BTreeMap<String, Cobracket>,
    pub bialgebras: BTreeMap<String, Bialgebra>,
    pub actions: BTreeMap<String, Action>,
    pub pairs: BTreeMap<String, Pair>,
    pub splits: BTreeMap<String, Split>,
}

pub fn parse(text: &str) -> Result<Document> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| InputError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    Document::from_raw(raw)
}

fn scalar(field: FieldDescriptor, raw: &RawScalar, path: &str) -> Result<Scalar> {
    match raw {
        RawScalar::Int(n) => Ok(Scalar::from_i64(field, *n)),
        RawScalar::Text(t) => Scalar::parse(field, t).map_err(|e| InputError::at(path, e)),
    }
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, kind: &str, name: &str, path: &str) -> Result<&'a T> {
    map.get(name)
        .ok_or_else(|| InputError::at(path, format!("unknown name {name:?} (no such {kind})")))
}

fn basis_index(basis: &GradedBasis, name: &str, path: &str) -> Result<usize> {
    basis.index(name).map_err(|e| InputError::at(path, e))
}

fn vector(
    field: FieldDescriptor,
    basis: &GradedBasis,
    terms: &[(String, RawScalar)],
    path: &str,
) -> Result<GradedVector> {
    let mut seen = BTreeMap::new();
    for (k, (name, c)) in terms.iter().enumerate() {
        let p = format!("{path}[{k}]");
        let i = basis_index(basis, name, &p)?;
        if seen.insert(i, scalar(field, c, &p)?).is_some() {
            return Err(InputError::at(p, format!("{name:?} appears twice")));
        }
    }
    Ok(GradedVector::from_terms(seen))
}

fn tensor(
    field: FieldDescriptor,
    basis: &GradedBasis,
    terms: &[(String, String, RawScalar)],
    path: &str,
) -> Result<Tensor2> {
    let mut seen = BTreeMap::new();
    for (k, (x, y, c)) in terms.iter().enumerate() {
        let p = format!("{path}[{k}]");
        let key = (basis_index(basis, x, &p)?, basis_index(basis, y, &p)?);
        if seen.insert(key, scalar(field, c, &p)?).is_some() {
            return Err(InputError::at(p, format!("{x:?}⊗{y:?} appears twice")));
        }
    }
    Ok(Tensor2::from_terms(seen))
}

fn table(
    field: FieldDescriptor,
    (left, right, out): (&GradedBasis, &GradedBasis, &GradedBasis),
    entries: &[RawProductEntry],
    path: &str,
) -> Result<BilinearTable> {
    let mut rows = Vec::with_capacity(entries.len());
    for (k, e) in entries.iter().enumerate() {
        let p = format!("{path}[{k}]");
        let key = (basis_index(left, &e.x, &p)?, basis_index(right, &e.y, &p)?);
        rows.push((key, vector(field, out, &e.out, &format!("{p}.out"))?));
    }
    BilinearTable::new(field, left.clone(), right.clone(), out.clone(), rows).map_err(|e| InputError::at(path, e))
}

fn co_rows(
    field: FieldDescriptor,
    basis: &GradedBasis,
    rows: &[RawCoEntry],
    path: &str,
) -> Result<Vec<(usize, Tensor2)>> {
    rows.iter()
        .enumerate()
        .map(|(k, r)| {
            let p = format!("{path}[{k}]");
            Ok((
                basis_index(basis, &r.x, &p)?,
                tensor(field, basis, &r.out, &format!("{p}.out"))?,
            ))
        })
        .collect()
}

fn element(group: &FiniteAbelianGroup, residues: &[i64], path: &str) -> Result<GroupElement> {
    group.element(residues).map_err(|e| InputError::at(path, e))
}

fn form_entries(
    group: &FiniteAbelianGroup,
    field: FieldDescriptor,
    entries: &[RawFormEntry],
    path: &str,
) -> Result<Vec<(GroupElement, GroupElement, Scalar)>> {
    entries
        .iter()
        .enumerate()
        .map(|(k, e)| {
            let p = format!("{path}[{k}]");
            Ok((
                element(group, &e.x, &format!("{p}.x"))?,
                element(group, &e.y, &format!("{p}.y"))?,
                scalar(field, &e.value, &format!("{p}.value"))?,
            ))
        })
        .collect()
}

impl Document {
    /// Empty document over the field and group of `beta`.
    pub fn new(beta: Bicharacter) -> Self {
        Document {
            field: beta.field(),
            group: beta.group().clone(),
            beta,
            sigmas: BTreeMap::new(),
            spaces: BTreeMap::new(),
            algebras: BTreeMap::new(),
            lie_algebras: BTreeMap::new(),
            coalgebras: BTreeMap::new(),
            cobrackets: BTreeMap::new(),
            bialgebras: BTreeMap::new(),
            actions: BTreeMap::new(),
            pairs: BTreeMap::new(),
            splits: BTreeMap::new(),
        }
    }

    fn from_raw(raw: RawDocument) -> Result<Self> {
        if !raw.defaults_ack {
            return Err(InputError::at(
                "defaults_ack",
                "must be true: omitted β/σ entries are 1 and omitted structure constants are 0",
            ));
        }
        let field: FieldDescriptor = raw.field.parse().map_err(|e| InputError::at("field", e))?;
        let group = FiniteAbelianGroup::new(&raw.group).map_err(|e| InputError::at("group", e))?;
        let beta = Bicharacter::from_entries(&group, field, form_entries(&group, field, &raw.beta, "beta")?)
            .map_err(|e| InputError::at("beta", e))?;
        let mut doc = Document::new(beta);

        for (name, entries) in &raw.sigmas {
            let path = format!("sigmas.{name}");
            let sigma = TwoCocycle::from_entries(&group, field, form_entries(&group, field, entries, &path)?)
                .map_err(|e| InputError::at(&path, e))?;
            doc.sigmas.insert(name.clone(), sigma);
        }

        for (name, elements) in &raw.spaces {
            let path = format!("spaces.{name}");
            let mut named = Vec::with_capacity(elements.len());
            for (k, e) in elements.iter().enumerate() {
                let degree = match &e.degree {
                    Some(d) => element(&group, d, &format!("{path}[{k}].degree"))?,
                    None => group.identity(),
                };
                named.push((e.name.clone(), degree));
            }
            let basis = GradedBasis::new(&group, named).map_err(|e| InputError::at(&path, e))?;
            doc.spaces.insert(name.clone(), basis);
        }

        for (name, a) in &raw.algebras {
            let path = format!("algebras.{name}");
            let basis = lookup(&doc.spaces, "space", &a.space, &format!("{path}.space"))?;
            let product = table(field, (basis, basis, basis), &a.product, &format!("{path}.product"))?;
            let unit = match &a.unit {
                Some(u) => Some(vector(field, basis, u, &format!("{path}.unit"))?),
                None => None,
            };
            let algebra = GradedAlgebra::new(product, unit).map_err(|e| InputError::at(&path, e))?;
            doc.algebras.insert(
                name.clone(),
                Algebra {
                    space: a.space.clone(),
                    algebra,
                },
            );
        }

        for (name, l) in &raw.lie_algebras {
            let path = format!("lie_algebras.{name}");
            let basis = lookup(&doc.spaces, "space", &l.space, &format!("{path}.space"))?;
            let bracket = table(field, (basis, basis, basis), &l.bracket, &format!("{path}.bracket"))?;
            let lie = GradedLieAlgebra::new(bracket, doc.beta.clone()).map_err(|e| InputError::at(&path, e))?;
            doc.lie_algebras.insert(
                name.clone(),
                Lie {
                    space: l.space.clone(),
                    lie,
                },
            );
        }

        for (name, c) in &raw.coalgebras {
            let path = format!("coalgebras.{name}");
            let basis = lookup(&doc.spaces, "space", &c.space, &format!("{path}.space"))?;
            let rows = co_rows(field, basis, &c.coproduct, &format!("{path}.coproduct"))?;
            let eps = vector(field, basis, &c.counit, &format!("{path}.counit"))?;
            let counit = (0..basis.dim())
                .map(|i| eps.get(&i).cloned().unwrap_or_else(|| Scalar::zero(field)))
                .collect();
            let coalgebra =
                GradedCoalgebra::new(field, basis.clone(), rows, counit).map_err(|e| InputError::at(&path, e))?;
            doc.coalgebras.insert(
                name.clone(),
                Coalgebra {
                    space: c.space.clone(),
                    coalgebra,
                },
            );
        }

        for (name, c) in &raw.cobrackets {
            let path = format!("cobrackets.{name}");
            let basis = lookup(&doc.spaces, "space", &c.space, &format!("{path}.space"))?;
            let rows = co_rows(field, basis, &c.delta, &format!("{path}.delta"))?;
            let table = CobracketTable::new(field, basis.clone(), rows).map_err(|e| InputError::at(&path, e))?;
            doc.cobrackets.insert(
                name.clone(),
                Cobracket {
                    space: c.space.clone(),
                    table,
                },
            );
        }

        for (name, b) in &raw.bialgebras {
            let path = format!("bialgebras.{name}");
            let lie = lookup(&doc.lie_algebras, "Lie algebra", &b.lie, &format!("{path}.lie"))?;
            let delta = lookup(&doc.cobrackets, "cobracket", &b.cobracket, &format!("{path}.cobracket"))?;
            if lie.space != delta.space {
                return Err(InputError::at(
                    path,
                    "Lie algebra and cobracket live on different spaces",
                ));
            }
            doc.bialgebras.insert(
                name.clone(),
                Bialgebra {
                    lie: b.lie.clone(),
                    cobracket: b.cobracket.clone(),
                },
            );
        }

        for (name, act) in &raw.actions {
            let path = format!("actions.{name}");
            let hb = lookup(&doc.spaces, "space", &act.h, &format!("{path}.h"))?;
            let ab = lookup(&doc.spaces, "space", &act.a, &format!("{path}.a"))?;
            let entries = format!("{path}.entries");
            let action = match act.kind {
                ActionKind::Left => Action::Left {
                    h: act.h.clone(),
                    a: act.a.clone(),
                    action: LeftAction::new(table(field, (hb, ab, ab), &act.entries, &entries)?)
                        .map_err(|e| InputError::at(&path, e))?,
                },
                ActionKind::Right => Action::Right {
                    h: act.h.clone(),
                    a: act.a.clone(),
                    action: RightAction::new(table(field, (hb, ab, hb), &act.entries, &entries)?)
                        .map_err(|e| InputError::at(&path, e))?,
                },
            };
            doc.actions.insert(name.clone(), action);
        }

        for (name, p) in &raw.pairs {
            let pair = doc.assemble_pair(name, p)?;
            doc.pairs.insert(name.clone(), pair);
        }

        for (name, s) in &raw.splits {
            let path = format!("splits.{name}");
            let lie = lookup(&doc.lie_algebras, "Lie algebra", &s.lie, &format!("{path}.lie"))?;
            for (part, names) in [("a", &s.a), ("h", &s.h)] {
                for (k, n) in names.iter().enumerate() {
                    basis_index(lie.lie.basis(), n, &format!("{path}.{part}[{k}]"))?;
                }
            }
            doc.splits.insert(
                name.clone(),
                Split {
                    lie: s.lie.clone(),
                    a: s.a.clone(),
                    h: s.h.clone(),
                },
            );
        }
        Ok(doc)
    }

    fn assemble_pair(&self, name: &str, p: &RawPair) -> Result<Pair> {
        let path = format!("pairs.{name}");
        let a = lookup(&self.lie_algebras, "Lie algebra", &p.a, &format!("{path}.a"))?;
        let h = lookup(&self.lie_algebras, "Lie algebra", &p.h, &format!("{path}.h"))?;
        let (ab, hb) = (a.lie.basis(), h.lie.basis());
        let field = self.field;
        let left = match &p.left {
            Some(n) => match lookup(&self.actions, "action", n, &format!("{path}.left"))? {
                Action::Left { action, .. } => action.clone(),
                Action::Right { .. } => {
                    return Err(InputError::at(
                        format!("{path}.left"),
                        format!("{n:?} is a right action"),
                    ))
                }
            },
            None => LeftAction::zero(field, hb, ab).map_err(|e| InputError::at(&path, e))?,
        };
        let right = match &p.right {
            Some(n) => match lookup(&self.actions, "action", n, &format!("{path}.right"))? {
                Action::Right { action, .. } => action.clone(),
                Action::Left { .. } => {
                    return Err(InputError::at(
                        format!("{path}.right"),
                        format!("{n:?} is a left action"),
                    ))
                }
            },
            None => RightAction::zero(field, hb, ab).map_err(|e| InputError::at(&path, e))?,
        };
        let pair = MatchedPair::new(a.lie.clone(), h.lie.clone(), left, right).map_err(|e| InputError::at(&path, e))?;
        let cobracket = |n: &Option<String>, what: &str, basis: &GradedBasis| -> Result<CobracketTable> {
            match n {
                Some(n) => Ok(lookup(&self.cobrackets, "cobracket", n, &format!("{path}.{what}"))?
                    .table
                    .clone()),
                None => Ok(CobracketTable::zero(field, basis.clone())),
            }
        };
        let cobracked = if p.delta_a.is_some() || p.delta_h.is_some() {
            let da = cobracket(&p.delta_a, "delta_a", ab)?;
            let dh = cobracket(&p.delta_h, "delta_h", hb)?;
            Some(CobrackedPair::new(pair.clone(), da, dh).map_err(|e| InputError::at(&path, e))?)
        } else {
            None
        };
        Ok(Pair {
            a: p.a.clone(),
            h: p.h.clone(),
            left: p.left.clone(),
            right: p.right.clone(),
            delta_a: p.delta_a.clone(),
            delta_h: p.delta_h.clone(),
            pair,
            cobracked,
        })
    }

    /// Adds a pair from already-present blocks.
    pub fn add_pair(
        &mut self,
        name: &str,
        a: &str,
        h: &str,
        left: Option<&str>,
        right: Option<&str>,
        deltas: Option<(&str, &str)>,
    ) -> Result<()> {
        let raw = RawPair {
            a: a.into(),
            h: h.into(),
            left: left.map(Into::into),
            right: right.map(Into::into),
            delta_a: deltas.map(|d| d.0.into()),
            delta_h: deltas.map(|d| d.1.into()),
        };
        let pair = self.assemble_pair(name, &raw)?;
        self.pairs.insert(name.to_string(), pair);
        Ok(())
    }

    pub fn add_action_left(&mut self, name: &str, h: &str, a: &str, action: LeftAction) {
        self.actions.insert(
            name.into(),
            Action::Left {
                h: h.into(),
                a: a.into(),
                action,
            },
        );
    }

    pub fn add_action_right(&mut self, name: &str, h: &str, a: &str, action: RightAction) {
        self.actions.insert(
            name.into(),
            Action::Right {
                h: h.into(),
                a: a.into(),
                action,
            },
        );
    }

    pub fn add_lie(&mut self, name: &str, space: &str, lie: GradedLieAlgebra) {
        self.spaces.insert(space.into(), lie.basis().clone());
        self.lie_algebras.insert(
            name.into(),
            Lie {
                space: space.into(),
                lie,
            },
        );
    }

    pub fn add_cobracket(&mut self, name: &str, space: &str, table: CobracketTable) {
        self.spaces.insert(space.into(), table.basis().clone());
        self.cobrackets.insert(
            name.into(),
            Cobracket {
                space: space.into(),
                table,
            },
        );
    }

    pub fn add_algebra(&mut self, name: &str, space: &str, algebra: GradedAlgebra) {
        self.spaces.insert(space.into(), algebra.basis().clone());
        self.algebras.insert(
            name.into(),
            Algebra {
                space: space.into(),
                algebra,
            },
        );
    }

    pub fn add_coalgebra(&mut self, name: &str, space: &str, coalgebra: GradedCoalgebra) {
        self.spaces.insert(space.into(), coalgebra.basis().clone());
        self.coalgebras.insert(
            name.into(),
            Coalgebra {
                space: space.into(),
                coalgebra,
            },
        );
    }

    fn to_raw(&self) -> RawDocument {
        let text = |s: &Scalar| RawScalar::Text(s.to_string());
        let degree = |e: &GroupElement| e.residues().iter().map(|&r| r as i64).collect::<Vec<_>>();
        let form = |entries: Vec<(GroupElement, GroupElement, Scalar)>| {
            entries
                .into_iter()
                .map(|(x, y, v)| RawFormEntry {
                    x: degree(&x),
                    y: degree(&y),
                    value: text(&v),
                })
                .collect::<Vec<_>>()
        };
        let terms = |basis: &GradedBasis, v: &GradedVector| {
            v.iter()
                .map(|(&k, c)| (basis.name(k).to_string(), text(c)))
                .collect::<Vec<_>>()
        };
        let products = |t: &BilinearTable| {
            t.entries()
                .map(|(&(i, j), v)| RawProductEntry {
                    x: t.left().name(i).into(),
                    y: t.right().name(j).into(),
                    out: terms(t.out(), v),
                })
                .collect::<Vec<_>>()
        };
        let co = |basis: &GradedBasis, rows: Vec<(usize, &Tensor2)>| {
            rows.into_iter()
                .filter(|(_, t)| !t.is_zero())
                .map(|(i, t)| RawCoEntry {
                    x: basis.name(i).into(),
                    out: t
                        .iter()
                        .map(|(&(j, k), c)| (basis.name(j).into(), basis.name(k).into(), text(c)))
                        .collect(),
                })
                .collect::<Vec<_>>()
        };
        RawDocument {
            defaults_ack: true,
            field: self.field.to_string(),
            group: self.group.orders().iter().map(|&n| n as i64).collect(),
            beta: form(self.beta.non_default_entries()),
            sigmas: self
                .sigmas
                .iter()
                .map(|(n, s)| (n.clone(), form(s.non_default_entries())))
                .collect(),
            spaces: self
                .spaces
                .iter()
                .map(|(n, b)| {
                    let elements = b
                        .iter()
                        .map(|(name, d)| RawBasisElement {
                            name: name.into(),
                            degree: Some(degree(d)),
                        })
                        .collect();
                    (n.clone(), elements)
                })
                .collect(),
            algebras: self
                .algebras
                .iter()
                .map(|(n, a)| {
                    let raw = RawAlgebra {
                        space: a.space.clone(),
                        product: products(a.algebra.product()),
                        unit: a.algebra.unit().map(|u| terms(a.algebra.basis(), u)),
                    };
                    (n.clone(), raw)
                })
                .collect(),
            lie_algebras: self
                .lie_algebras
                .iter()
                .map(|(n, l)| {
                    let raw = RawLie {
                        space: l.space.clone(),
                        bracket: products(l.lie.bracket()),
                    };
                    (n.clone(), raw)
                })
                .collect(),
            coalgebras: self
                .coalgebras
                .iter()
                .map(|(n, c)| {
                    let basis = c.coalgebra.basis();
                    let counit = GradedVector::from_terms(c.coalgebra.counit().iter().cloned().enumerate());
                    let raw = RawCoalgebra {
                        space: c.space.clone(),
                        coproduct: co(basis, c.coalgebra.coproduct_entries().map(|(&i, t)| (i, t)).collect()),
                        counit: terms(basis, &counit),
                    };
                    (n.clone(), raw)
                })
                .collect(),
            cobrackets: self
                .cobrackets
                .iter()
                .map(|(n, c)| {
                    let raw = RawCobracket {
                        space: c.space.clone(),
                        delta: co(c.table.basis(), c.table.entries().map(|(&i, t)| (i, t)).collect()),
                    };
                    (n.clone(), raw)
                })
                .collect(),
            bialgebras: self
                .bialgebras
                .iter()
                .map(|(n, b)| {
                    let raw = RawBialgebra {
                        lie: b.lie.clone(),
                        cobracket: b.cobracket.clone(),
                    };
                    (n.clone(), raw)
                })
                .collect(),
            actions: self
                .actions
                .iter()
                .map(|(n, act)| {
                    let (h, a) = act.spaces();
                    let raw = RawAction {
                        kind: act.kind(),
                        h: h.into(),
                        a: a.into(),
                        entries: products(act.table()),
                    };
                    (n.clone(), raw)
                })
                .collect(),
            pairs: self
                .pairs
                .iter()
                .map(|(n, p)| {
                    let raw = RawPair {
                        a: p.a.clone(),
                        h: p.h.clone(),
                        left: p.left.clone(),
                        right: p.right.clone(),
                        delta_a: p.delta_a.clone(),
                        delta_h: p.delta_h.clone(),
                    };
                    (n.clone(), raw)
                })
                .collect(),
            splits: self
                .splits
                .iter()
                .map(|(n, s)| {
                    let raw = RawSplit {
                        lie: s.lie.clone(),
                        a: s.a.clone(),
                        h: s.h.clone(),
                    };
                    (n.clone(), raw)
                })
                .collect(),
        }
    }

    /// Canonical JSON value of the document.
    pub fn to_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_raw()).expect("document serializes")
    }

    /// Canonical text: JSON with one table entry per line and a trailing
    /// newline.
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        write_json(&self.to_value(), 0, &mut out);
        out.push('\n');
        out
    }
}

const LINE_WIDTH: usize = 100;

fn compact(v: &serde_json::Value) -> String {
    use serde_json::Value;
    match v {
        Value::Array(items) => format!("[{}]", items.iter().map(compact).collect::<Vec<_>>().join(", ")),
        Value::Object(map) => format!(
            "{{{}}}",
            map.iter()
                .map(|(k, v)| format!("{}: {}", Value::String(k.clone()), compact(v)))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        other => other.to_string(),
    }
}

fn write_json(v: &serde_json::Value, indent: usize, out: &mut String) {
    use serde_json::Value;
    let flat = compact(v);
    if indent + flat.chars().count() <= LINE_WIDTH || !matches!(v, Value::Array(_) | Value::Object(_)) {
        out.push_str(&flat);
        return;
    }
    let pad = "  ".repeat(indent + 1);
    let (open, close, items): (char, char, Vec<(Option<&String>, &Value)>) = match v {
        Value::Array(a) => ('[', ']', a.iter().map(|x| (None, x)).collect()),
        Value::Object(m) => ('{', '}', m.iter().map(|(k, x)| (Some(k), x)).collect()),
        _ => unreachable!(),
    };
    out.push(open);
    for (n, (key, item)) in items.iter().enumerate() {
        out.push_str(if n == 0 { "\n" } else { ",\n" });
        out.push_str(&pad);
        if let Some(k) = key {
            out.push_str(&Value::String((*k).clone()).to_string());
            out.push_str(": ");
        }
        write_json(item, indent + 1, out);
    }
    out.push('\n');
    out.push_str(&"  ".repeat(indent));
    out.push(close);
}
