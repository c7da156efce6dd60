//! Matrix identities, recursions, degree laws, factorization and duality on
//! the corpus of orbit tables.

use std::collections::HashMap;

use klcap::moves::{apply_slides, plan_for, project};
use klcap::poly::{d_of, dagger_weight, e_of, seq_d_poly, Matrix, SeqClass, SeqTable};
use klcap::resolutions::t_entry;
use klcap::{ext_dims, ArrowDiagram, ArrowSeq, Flavor, NodeState, Orbit, OrbitTable, QPoly, Recursion, SearchBudget};

use crate::corpus::{same_tables, signature, Corpus};
use crate::Tally;

fn nonzero_rows(m: &Matrix) -> Vec<Vec<(usize, &QPoly)>> {
    m.iter()
        .map(|row| row.iter().enumerate().filter(|(_, f)| !f.is_zero()).collect())
        .collect()
}

/// Whether `a * b(-q)` is the identity.
fn inverts_at_neg_q(a: &Matrix, b: &Matrix) -> Result<(), String> {
    let n = a.len();
    let rows = nonzero_rows(a);
    let b_neg: Vec<Vec<(usize, QPoly)>> = nonzero_rows(b)
        .into_iter()
        .map(|row| row.into_iter().map(|(j, f)| (j, f.neg_q())).collect())
        .collect();
    for (i, row) in rows.iter().enumerate() {
        let mut acc = vec![QPoly::zero(); n];
        for &(k, f) in row {
            for (j, g) in &b_neg[k] {
                acc[*j] += &(f * g);
            }
        }
        for (j, v) in acc.iter().enumerate() {
            let want = if i == j { QPoly::one() } else { QPoly::zero() };
            if *v != want {
                return Err(format!("entry ({i}, {j}) of the product is {v}"));
            }
        }
    }
    Ok(())
}

fn member(t: &OrbitTable, i: usize) -> String {
    t.orbit().weight(i).to_string()
}

fn cfg_of(t: &OrbitTable) -> String {
    format!("{:?}", t.orbit().cfg())
}

pub fn inversion(corpus: &Corpus) -> Tally {
    let mut tally = Tally::default();
    for t in corpus.all() {
        for (name, a, b) in [("p d(-q)", t.p(), t.d()), ("r e(-q)", t.r(), t.e())] {
            let res = inverts_at_neg_q(a, b);
            tally.check(res.is_ok(), || {
                format!(
                    "{name} != I on the orbit of {} in {}: {}",
                    member(t, 0),
                    cfg_of(t),
                    res.unwrap_err()
                )
            });
        }
    }
    let mut reps: HashMap<_, &OrbitTable> = HashMap::new();
    for t in &corpus.tables {
        if t.orbit().cfg().flavor() == Flavor::Gl {
            let key = (*t.orbit().cfg(), signature(t.orbit()));
            reps.entry(key).or_insert(t);
        }
    }
    let mut by_signature: HashMap<_, &OrbitTable> = HashMap::new();
    for t in corpus.tables.iter().filter(|t| t.orbit().cfg().flavor() == Flavor::Gl) {
        let first = *by_signature.entry(signature(t.orbit())).or_insert(t);
        let diff = same_tables(t, first);
        tally.check(diff.is_none(), || {
            format!(
                "orbit of {} differs from another orbit of the same signature: {}",
                member(t, 0),
                diff.unwrap()
            )
        });
    }
    for t in &corpus.samples {
        let key = (*t.orbit().cfg(), signature(t.orbit()));
        let diff = match reps.get(&key) {
            Some(rep) => same_tables(t, rep),
            None => Some("no representative with its signature".into()),
        };
        tally.check(diff.is_none(), || {
            format!("sampled orbit of {} in {}: {}", member(t, 0), cfg_of(t), diff.unwrap())
        });
    }
    tally
}

pub fn recursion(corpus: &Corpus) -> Tally {
    let mut tally = Tally::default();
    for t in corpus.all() {
        let mut rec = Recursion::new();
        let o = t.orbit();
        for i in 0..t.len() {
            for j in 0..t.len() {
                let (l, m) = (o.diagram(i), o.diagram(j));
                let p = rec.p(l, m).map_err(|e| e.to_string());
                let r = rec.r(l, m).map_err(|e| e.to_string());
                tally.check(p.as_ref() == Ok(&t.p()[i][j]), || {
                    format!(
                        "p({}, {}): recursion {p:?}, inversion {}",
                        member(t, i),
                        member(t, j),
                        t.p()[i][j]
                    )
                });
                tally.check(r.as_ref() == Ok(&t.r()[i][j]), || {
                    format!(
                        "r({}, {}): recursion {r:?}, inversion {}",
                        member(t, i),
                        member(t, j),
                        t.r()[i][j]
                    )
                });
            }
        }
    }
    tally
}

pub fn degrees(corpus: &Corpus) -> Tally {
    let mut tally = Tally::default();
    for t in corpus.all() {
        let o = t.orbit();
        for i in 0..t.len() {
            for j in 0..t.len() {
                let n = o.n_value(i) as i64 - o.n_value(j) as i64;
                for (name, f) in [("p", &t.p()[i][j]), ("r", &t.r()[i][j])] {
                    if f.is_zero() {
                        continue;
                    }
                    let ok = f.degree().map(|d| d as i64) == Some(n) && f.degree_parity() == Some(n % 2 != 0);
                    tally.check(ok, || {
                        format!("{name}({}, {}) = {f} but n = {n}", member(t, i), member(t, j))
                    });
                }
            }
        }
    }
    // Ext dimensions through the public entry point, on the small primes.
    for t in corpus.tables.iter().filter(|t| t.orbit().cfg().p() <= 7).step_by(7) {
        let o = t.orbit();
        let cfg = o.cfg();
        for j in 0..t.len() {
            let Ok(dims) = ext_dims(o.weight(0), o.weight(j), cfg) else {
                tally.check(false, || format!("ext_dims({}, {}) failed", member(t, 0), member(t, j)));
                continue;
            };
            let parity = (o.n_value(0) + o.n_value(j)) % 2;
            let gaps = dims.iter().enumerate().all(|(k, &v)| v == 0 || k as u64 % 2 == parity);
            let agrees = dims.iter().map(|&v| v as i64).eq(t.r()[0][j].coeffs().iter().copied());
            tally.check(gaps && agrees, || {
                format!("ext_dims({}, {}) = {dims:?}", member(t, 0), member(t, j))
            });
        }
    }
    tally
}

struct SeqTables(HashMap<SeqClass, SeqTable>);

impl SeqTables {
    fn p(&mut self, eta: &ArrowSeq, xi: &ArrowSeq, flavor: Flavor) -> QPoly {
        let class = SeqClass::of(eta, flavor);
        let table = self
            .0
            .entry(class)
            .or_insert_with(|| SeqTable::build(class).expect("sequence table"));
        if SeqClass::of(xi, flavor) != class {
            return QPoly::zero();
        }
        table.p(eta, xi).expect("members of the class")
    }
}

fn dagger_positions(t: &OrbitTable, budget: &SearchBudget) -> Option<(OrbitTable, Vec<usize>)> {
    let o = t.orbit();
    let cfg = o.cfg();
    let flip = |i: usize| dagger_weight(o.weight(i), cfg).ok();
    let dual = OrbitTable::build(Orbit::of(&flip(0)?, cfg, budget).ok()?).ok()?;
    let pos = (0..t.len())
        .map(|i| dual.orbit().position(&flip(i)?))
        .collect::<Option<Vec<_>>>()?;
    Some((dual, pos))
}

pub fn factorization(corpus: &Corpus) -> Tally {
    let mut tally = Tally::default();
    let mut seq_tables = SeqTables(HashMap::new());
    let budget = SearchBudget::with_max_orbit(1 << 20);
    for t in corpus.all() {
        let o = t.orbit();
        let flavor = o.cfg().flavor();
        for i in 0..t.len() {
            for j in 0..t.len() {
                let (a, b) = (o.seqs(i), o.seqs(j));
                let d =
                    &seq_d_poly(&a.left, &b.left, flavor).unwrap() * &seq_d_poly(&a.right, &b.right, flavor).unwrap();
                let p = &seq_tables.p(&a.left, &b.left, flavor) * &seq_tables.p(&a.right, &b.right, flavor);
                tally.check(d == t.d()[i][j] && p == t.p()[i][j], || {
                    format!(
                        "({}, {}): d = {} vs {d}, p = {} vs {p}",
                        member(t, i),
                        member(t, j),
                        t.d()[i][j],
                        t.p()[i][j]
                    )
                });
            }
        }
        let [s1, s2] = o.cfg().cutoffs();
        if flavor == Flavor::Gl && s1 != s2 {
            continue;
        }
        let Some((dual, pos)) = dagger_positions(t, &budget) else {
            tally.check(false, || format!("no dual orbit for {}", member(t, 0)));
            continue;
        };
        for i in 0..t.len() {
            for j in 0..t.len() {
                let (x, y) = (pos[j], pos[i]);
                let ok = t.e()[i][j] == dual.d()[x][y] && t.r()[i][j] == dual.p()[x][y];
                tally.check(ok, || {
                    format!("duality fails at ({}, {}) in {}", member(t, i), member(t, j), cfg_of(t))
                });
            }
        }
    }
    tally
}

fn pair_at(d: &ArrowDiagram, k: usize) -> Option<(NodeState, NodeState)> {
    let (a, b) = (d.node(k), d.node(k + 1));
    (a.is_single() && b.is_single() && a != b).then_some((a, b))
}

fn with_pair(d: &ArrowDiagram, k: usize, left: NodeState) -> ArrowDiagram {
    d.with_node(k, left).with_node(k + 1, left.flipped())
}

const PLUS: NodeState = NodeState::Down;
const MINUS: NodeState = NodeState::Up;

pub fn projections(corpus: &Corpus) -> Tally {
    let mut tally = Tally::default();
    let q = QPoly::q_pow(1);
    for t in corpus.all() {
        let o = t.orbit();
        for i in 0..t.len() {
            let lambda = o.diagram(i);
            // d relations from the cap plan of lambda, which ends on lambda = lambda^+.
            if let Some(plan) = plan_for(lambda, false) {
                let k = plan.projection.left;
                let lam = apply_slides(&plan, lambda);
                let parity = lam.up_parity();
                let slid: Vec<ArrowDiagram> = o
                    .diagrams()
                    .iter()
                    .map(|m| apply_slides(&plan, m).normalized(parity))
                    .collect();
                for (j, nu) in slid.iter().enumerate() {
                    tally.check(d_of(&lam, nu) == t.d()[i][j], || {
                        format!("slides change d({}, {})", member(t, i), member(t, j))
                    });
                }
                tally.check(pair_at(&lam, k) == Some((PLUS, MINUS)), || {
                    format!("plan of {} ends off a cap", member(t, i))
                });
                let lam_proj = project(&plan.projection, &lam).expect("opposite arrows");
                let lam_minus = with_pair(&lam, k, MINUS);
                for (j, nu) in slid.iter().enumerate() {
                    let here = d_of(&lam, nu);
                    let ok = match pair_at(nu, k) {
                        Some((a, _)) => {
                            let proj = d_of(&lam_proj, &project(&plan.projection, nu).expect("opposite arrows"));
                            let expect = if a == PLUS { proj } else { &q * &proj };
                            let (plus, minus) = (with_pair(nu, k, PLUS), with_pair(nu, k, MINUS));
                            let lp = d_of(&lam_minus, &plus);
                            let lm = d_of(&lam_minus, &minus);
                            let cleared =
                                &q * &d_of(&lam, &plus) == &lp + &(&q * &lm) && d_of(&lam, &minus) == &(&q * &lm) + &lp;
                            here == expect && cleared
                        }
                        None => here.is_zero(),
                    };
                    tally.check(ok, || {
                        format!("d relation fails for ({}, {})", member(t, i), member(t, j))
                    });
                }
            }
            // e relations from the co-plan of mu = mu^-.
            let mu = lambda;
            if let Some(plan) = plan_for(mu, true) {
                let k = plan.projection.left;
                let nu = apply_slides(&plan, mu);
                let parity = nu.up_parity();
                tally.check(pair_at(&nu, k) == Some((MINUS, PLUS)), || {
                    format!("co-plan of {} ends off a cap", member(t, i))
                });
                let nu_proj = project(&plan.projection, &nu).expect("opposite arrows");
                for (j, m) in o.diagrams().iter().enumerate() {
                    let lam = apply_slides(&plan, m).normalized(parity);
                    let here = e_of(&lam, &nu);
                    let ok = here == t.e()[j][i]
                        && match pair_at(&lam, k) {
                            Some((a, _)) => {
                                let proj = e_of(&project(&plan.projection, &lam).expect("opposite arrows"), &nu_proj);
                                here == if a == MINUS { proj } else { &q * &proj }
                            }
                            None => here.is_zero(),
                        };
                    tally.check(ok, || {
                        format!("e relation fails for ({}, {})", member(t, j), member(t, i))
                    });
                }
            }
        }
    }
    tally
}

pub fn characters(corpus: &Corpus) -> Tally {
    let mut tally = Tally::default();
    for t in corpus.all() {
        let n = t.len();
        let r: Vec<Vec<(usize, i64)>> = t
            .r()
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(j, f)| (j, f.eval(-1)))
                    .filter(|x| x.1 != 0)
                    .collect()
            })
            .collect();
        let e: Vec<Vec<(usize, i64)>> = t
            .e()
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(j, f)| (j, f.eval(1)))
                    .filter(|x| x.1 != 0)
                    .collect()
            })
            .collect();
        for (i, row) in r.iter().enumerate() {
            let mut acc = vec![0i64; n];
            for &(k, a) in row {
                for &(j, b) in &e[k] {
                    acc[j] += a * b;
                }
            }
            let ok = acc.iter().enumerate().all(|(j, &v)| v == i64::from(i == j));
            tally.check(ok, || format!("r(-1) e(1) row of {} is not a unit row", member(t, i)));
        }
        for i in 0..n {
            for j in i..n {
                let (a, b) = (t_entry(t, i, j), t_entry(t, j, i));
                let ok = a == b && (i != j || a.coeff(0) == 1);
                tally.check(ok, || {
                    format!("t({}, {}) = {a}, t reversed = {b}", member(t, i), member(t, j))
                });
            }
        }
    }
    tally
}
