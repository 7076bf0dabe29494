//! Dense brute-force evaluator of the axiom checks.
//!
//! Structure constants are copied into dense arrays and every identity is
//! evaluated coefficient by coefficient, with its own degree arithmetic. The
//! result of each check is the set of failing basis tuples together with the
//! nonzero residual components, keyed by names so it can be compared with the
//! sparse verifiers' witnesses.

#![allow(dead_code)]

use std::collections::BTreeMap;

use hbeta_core::report::{Check, Term};
use hbeta_core::{
    Bicharacter, CobrackedPair, CobracketTable, FieldDescriptor, GradedBasis, GradedLieAlgebra, MatchedPair, Scalar,
};

/// failing tuple -> residual component -> coefficient
pub type WitnessSet = BTreeMap<Vec<String>, BTreeMap<Vec<String>, String>>;

pub fn from_check(check: &Check) -> WitnessSet {
    check
        .witnesses
        .iter()
        .map(|w| {
            let comps = match &w.residual {
                Term::Combination(c) => c.iter().map(|c| (c.basis.clone(), c.coeff.to_string())).collect(),
                Term::Scalar(s) => BTreeMap::from([(Vec::new(), s.to_string())]),
            };
            (w.at.clone(), comps)
        })
        .collect()
}

struct Degrees {
    orders: Vec<u32>,
    deg: Vec<Vec<u32>>,
}

impl Degrees {
    fn of(basis: &GradedBasis) -> Self {
        Degrees {
            orders: basis.group().orders().to_vec(),
            deg: (0..basis.dim()).map(|i| basis.degree(i).residues().to_vec()).collect(),
        }
    }

    fn sum(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter()
            .zip(y)
            .zip(&self.orders)
            .map(|((a, b), n)| (a + b) % n)
            .collect()
    }
}

fn beta_val(beta: &Bicharacter, x: &[u32], y: &[u32]) -> Scalar {
    let g = beta.group();
    let e = |r: &[u32]| g.element(&r.iter().map(|&v| v as i64).collect::<Vec<_>>()).unwrap();
    beta.get(&e(x), &e(y)).clone()
}

type D3 = Vec<Vec<Vec<Scalar>>>;

fn zeros(field: FieldDescriptor, n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(field); n]
}

fn dense_table(
    field: FieldDescriptor,
    rows: usize,
    cols: usize,
    out: usize,
    value: impl Fn(usize, usize) -> hbeta_core::linear::GradedVector,
) -> D3 {
    (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| {
                    let v = value(i, j);
                    (0..out)
                        .map(|k| v.get(&k).cloned().unwrap_or_else(|| Scalar::zero(field)))
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn dense_cobracket(delta: &CobracketTable) -> D3 {
    let n = delta.basis().dim();
    let f = delta.field();
    (0..n)
        .map(|i| {
            let t = delta.delta(i);
            (0..n)
                .map(|j| {
                    (0..n)
                        .map(|k| t.get(&(j, k)).cloned().unwrap_or_else(|| Scalar::zero(f)))
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn vec_residual(v: &[Scalar], names: &[String]) -> BTreeMap<Vec<String>, String> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (vec![names[k].clone()], c.to_string()))
        .collect()
}

fn mat_residual(m: &[Vec<Scalar>], left: &[String], right: &[String]) -> BTreeMap<Vec<String>, String> {
    let mut out = BTreeMap::new();
    for (p, row) in m.iter().enumerate() {
        for (q, c) in row.iter().enumerate() {
            if !c.is_zero() {
                out.insert(vec![left[p].clone(), right[q].clone()], c.to_string());
            }
        }
    }
    out
}

fn tuple(names: &[&[String]], idx: &[usize]) -> Vec<String> {
    names.iter().zip(idx).map(|(n, &i)| n[i].clone()).collect()
}

fn add_to(acc: &mut Scalar, x: &Scalar) {
    *acc = &*acc + x;
}

/// Wrong-degree components of a bilinear table `left × right → out`.
fn grading(c: &D3, l: &Degrees, r: &Degrees, o: &Degrees, names: [&[String]; 3]) -> WitnessSet {
    let mut out = WitnessSet::new();
    for (i, row) in c.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let target = l.sum(&l.deg[i], &r.deg[j]);
            let bad: Vec<Scalar> = v
                .iter()
                .enumerate()
                .map(|(k, x)| {
                    if o.deg[k] == target {
                        Scalar::zero(x.field())
                    } else {
                        x.clone()
                    }
                })
                .collect();
            let res = vec_residual(&bad, names[2]);
            if !res.is_empty() {
                out.insert(tuple(&names[..2], &[i, j]), res);
            }
        }
    }
    out
}

pub struct LieChecks {
    pub grading: WitnessSet,
    pub anticommutativity: WitnessSet,
    pub jacobi: WitnessSet,
}

pub fn lie(l: &GradedLieAlgebra) -> LieChecks {
    let b = l.basis();
    let n = b.dim();
    let f = l.field();
    let names = b.names().to_vec();
    let d = Degrees::of(b);
    let c = dense_table(f, n, n, n, |i, j| l.bracket_basis(i, j));
    let beta = |x: &[u32], y: &[u32]| beta_val(l.beta(), x, y);

    let mut anti = WitnessSet::new();
    for i in 0..n {
        for j in 0..n {
            let bij = beta(&d.deg[i], &d.deg[j]);
            let r: Vec<Scalar> = (0..n).map(|k| &c[i][j][k] + &(&bij * &c[j][i][k])).collect();
            let res = vec_residual(&r, &names);
            if !res.is_empty() {
                anti.insert(tuple(&[&names, &names], &[i, j]), res);
            }
        }
    }

    let mut jac = WitnessSet::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let b1 = beta(&d.deg[i], &d.sum(&d.deg[j], &d.deg[k]));
                let b2 = beta(&d.sum(&d.deg[i], &d.deg[j]), &d.deg[k]);
                let mut r = zeros(f, n);
                for (l_, out) in r.iter_mut().enumerate() {
                    for m in 0..n {
                        add_to(out, &(&c[i][j][m] * &c[m][k][l_]));
                        add_to(out, &(&b1 * &(&c[j][k][m] * &c[m][i][l_])));
                        add_to(out, &(&b2 * &(&c[k][i][m] * &c[m][j][l_])));
                    }
                }
                let res = vec_residual(&r, &names);
                if !res.is_empty() {
                    jac.insert(tuple(&[&names, &names, &names], &[i, j, k]), res);
                }
            }
        }
    }
    LieChecks {
        grading: grading(&c, &d, &d, &d, [&names, &names, &names]),
        anticommutativity: anti,
        jacobi: jac,
    }
}

pub struct ColieChecks {
    pub grading: WitnessSet,
    pub anticocommutativity: WitnessSet,
    pub co_jacobi: WitnessSet,
}

pub fn colie(delta: &CobracketTable, beta_form: &Bicharacter) -> ColieChecks {
    let b = delta.basis();
    let n = b.dim();
    let f = delta.field();
    let names = b.names().to_vec();
    let d = Degrees::of(b);
    let dd = dense_cobracket(delta);
    let beta = |x: &[u32], y: &[u32]| beta_val(beta_form, x, y);

    let mut grad = WitnessSet::new();
    let mut anti = WitnessSet::new();
    let mut cojac = WitnessSet::new();
    for i in 0..n {
        let mut bad = vec![zeros(f, n); n];
        let mut r = vec![zeros(f, n); n];
        for p in 0..n {
            for q in 0..n {
                if d.sum(&d.deg[p], &d.deg[q]) != d.deg[i] {
                    bad[p][q] = dd[i][p][q].clone();
                }
                r[p][q] = &dd[i][p][q] + &(&beta(&d.deg[q], &d.deg[p]) * &dd[i][q][p]);
            }
        }
        for (set, m) in [(&mut grad, &bad), (&mut anti, &r)] {
            let res = mat_residual(m, &names, &names);
            if !res.is_empty() {
                set.insert(vec![names[i].clone()], res);
            }
        }

        // T[p][q][k] = coefficient of e_p⊗e_q⊗e_k in (δ⊗id)δ(e_i)
        let mut t = vec![vec![zeros(f, n); n]; n];
        for j in 0..n {
            for k in 0..n {
                if dd[i][j][k].is_zero() {
                    continue;
                }
                for p in 0..n {
                    for q in 0..n {
                        add_to(&mut t[p][q][k], &(&dd[i][j][k] * &dd[j][p][q]));
                    }
                }
            }
        }
        let mut res = BTreeMap::new();
        for a in 0..n {
            for b_ in 0..n {
                for c in 0..n {
                    let mut s = t[a][b_][c].clone();
                    add_to(
                        &mut s,
                        &(&beta(&d.sum(&d.deg[b_], &d.deg[c]), &d.deg[a]) * &t[b_][c][a]),
                    );
                    add_to(
                        &mut s,
                        &(&beta(&d.deg[c], &d.sum(&d.deg[a], &d.deg[b_])) * &t[c][a][b_]),
                    );
                    if !s.is_zero() {
                        res.insert(
                            vec![names[a].clone(), names[b_].clone(), names[c].clone()],
                            s.to_string(),
                        );
                    }
                }
            }
        }
        if !res.is_empty() {
            cojac.insert(vec![names[i].clone()], res);
        }
    }
    ColieChecks {
        grading: grad,
        anticocommutativity: anti,
        co_jacobi: cojac,
    }
}

/// The compatibility condition between a bracket and a cobracket.
pub fn lb(l: &GradedLieAlgebra, delta: &CobracketTable) -> WitnessSet {
    let b = l.basis();
    let n = b.dim();
    let f = l.field();
    let names = b.names().to_vec();
    let d = Degrees::of(b);
    let c = dense_table(f, n, n, n, |i, j| l.bracket_basis(i, j));
    let dd = dense_cobracket(delta);
    let beta = |x: &[u32], y: &[u32]| beta_val(l.beta(), x, y);
    let mut out = WitnessSet::new();
    for i in 0..n {
        for j in 0..n {
            let mut r = vec![zeros(f, n); n];
            for p in 0..n {
                for q in 0..n {
                    let mut s = Scalar::zero(f);
                    for m in 0..n {
                        add_to(&mut s, &(&c[i][j][m] * &dd[m][p][q]));
                    }
                    for x in 0..n {
                        // [a,b1]⊗b2
                        add_to(&mut s, &-(&dd[j][x][q] * &c[i][x][p]));
                        // β(|a|,|b1|) b1⊗[a,b2]
                        add_to(&mut s, &-(&beta(&d.deg[i], &d.deg[p]) * &(&dd[j][p][x] * &c[i][x][q])));
                        // a1⊗[a2,b]
                        add_to(&mut s, &-(&dd[i][p][x] * &c[x][j][q]));
                        // β(|a2|,|b|) [a1,b]⊗a2
                        add_to(&mut s, &-(&beta(&d.deg[q], &d.deg[j]) * &(&dd[i][x][q] * &c[x][j][p])));
                    }
                    r[p][q] = s;
                }
            }
            let res = mat_residual(&r, &names, &names);
            if !res.is_empty() {
                out.insert(tuple(&[&names, &names], &[i, j]), res);
            }
        }
    }
    out
}

struct PairDense {
    f: FieldDescriptor,
    na: usize,
    nh: usize,
    an: Vec<String>,
    hn: Vec<String>,
    ad: Degrees,
    hd: Degrees,
    ca: D3,
    ch: D3,
    left: D3,
    right: D3,
}

impl PairDense {
    fn of(pair: &MatchedPair) -> Self {
        let (ab, hb) = (pair.a().basis(), pair.h().basis());
        let (na, nh) = (ab.dim(), hb.dim());
        let f = pair.field();
        PairDense {
            f,
            na,
            nh,
            an: ab.names().to_vec(),
            hn: hb.names().to_vec(),
            ad: Degrees::of(ab),
            hd: Degrees::of(hb),
            ca: dense_table(f, na, na, na, |i, j| pair.a().bracket_basis(i, j)),
            ch: dense_table(f, nh, nh, nh, |i, j| pair.h().bracket_basis(i, j)),
            left: dense_table(f, nh, na, na, |p, i| pair.left().act(p, i)),
            right: dense_table(f, nh, na, nh, |p, i| pair.right().act(p, i)),
        }
    }
}

pub fn bb1(pair: &MatchedPair) -> WitnessSet {
    let d = PairDense::of(pair);
    let beta = |x: &[u32], y: &[u32]| beta_val(pair.beta(), x, y);
    let mut out = WitnessSet::new();
    for p in 0..d.nh {
        for i in 0..d.na {
            for j in 0..d.na {
                let bhi = beta(&d.hd.deg[p], &d.ad.deg[i]);
                let bij = beta(&d.ad.deg[i], &d.ad.deg[j]);
                let mut r = zeros(d.f, d.na);
                for (k, s) in r.iter_mut().enumerate() {
                    for m in 0..d.na {
                        add_to(s, &(&d.ca[i][j][m] * &d.left[p][m][k]));
                        add_to(s, &-(&d.left[p][i][m] * &d.ca[m][j][k]));
                        add_to(s, &-(&bhi * &(&d.left[p][j][m] * &d.ca[i][m][k])));
                    }
                    for q in 0..d.nh {
                        add_to(s, &-(&d.right[p][i][q] * &d.left[q][j][k]));
                        add_to(s, &(&bij * &(&d.right[p][j][q] * &d.left[q][i][k])));
                    }
                }
                let res = vec_residual(&r, &d.an);
                if !res.is_empty() {
                    out.insert(tuple(&[&d.hn, &d.an, &d.an], &[p, i, j]), res);
                }
            }
        }
    }
    out
}

pub fn bb2(pair: &MatchedPair) -> WitnessSet {
    let d = PairDense::of(pair);
    let beta = |x: &[u32], y: &[u32]| beta_val(pair.beta(), x, y);
    let mut out = WitnessSet::new();
    for p in 0..d.nh {
        for q in 0..d.nh {
            for i in 0..d.na {
                let bqi = beta(&d.hd.deg[q], &d.ad.deg[i]);
                let bpq = beta(&d.hd.deg[p], &d.hd.deg[q]);
                let mut r = zeros(d.f, d.nh);
                for (t, s) in r.iter_mut().enumerate() {
                    for x in 0..d.nh {
                        add_to(s, &(&d.ch[p][q][x] * &d.right[x][i][t]));
                        add_to(s, &-(&d.right[q][i][x] * &d.ch[p][x][t]));
                        add_to(s, &-(&bqi * &(&d.right[p][i][x] * &d.ch[x][q][t])));
                    }
                    for m in 0..d.na {
                        add_to(s, &-(&d.left[q][i][m] * &d.right[p][m][t]));
                        add_to(s, &(&bpq * &(&d.left[p][i][m] * &d.right[q][m][t])));
                    }
                }
                let res = vec_residual(&r, &d.hn);
                if !res.is_empty() {
                    out.insert(tuple(&[&d.hn, &d.hn, &d.an], &[p, q, i]), res);
                }
            }
        }
    }
    out
}

pub fn bb3(cp: &CobrackedPair) -> WitnessSet {
    let d = PairDense::of(cp.pair());
    let da = dense_cobracket(cp.delta_a());
    let dh = dense_cobracket(cp.delta_h());
    let mut out = WitnessSet::new();
    for p in 0..d.nh {
        for i in 0..d.na {
            let mut r = vec![zeros(d.f, d.na); d.nh];
            for (q, row) in r.iter_mut().enumerate() {
                for (k, s) in row.iter_mut().enumerate() {
                    for x in 0..d.nh {
                        add_to(s, &(&dh[p][q][x] * &d.left[x][i][k]));
                    }
                    for m in 0..d.na {
                        add_to(s, &(&da[i][m][k] * &d.right[p][m][q]));
                    }
                }
            }
            let res = mat_residual(&r, &d.hn, &d.an);
            if !res.is_empty() {
                out.insert(tuple(&[&d.hn, &d.an], &[p, i]), res);
            }
        }
    }
    out
}
