//! The sequence order against brute-force move closures, the distance law,
//! and the diagrammatic order of weights against the reflection search.

use std::collections::VecDeque;

use klcap::order::oracle_down_set;
use klcap::{seq_distance, seq_leq, weight_leq, Arrow, ArrowSeq, SearchBudget};

use crate::corpus::Corpus;
use crate::Tally;

/// Bit `i` set means an up arrow at position `i`.
type Bits = u32;

fn to_seq(bits: Bits, len: usize) -> ArrowSeq {
    (0..len)
        .map(|i| if bits >> i & 1 == 1 { Arrow::Up } else { Arrow::Down })
        .collect()
}

fn up(bits: Bits, i: usize) -> bool {
    bits >> i & 1 == 1
}

/// Adjacent `∨∧ → ∧∨`, plus `∧∧ → ∨∨` on the first two positions unless `swaps_only`.
fn elementary(bits: Bits, len: usize, swaps_only: bool) -> Vec<Bits> {
    let mut out: Vec<Bits> = (0..len.saturating_sub(1))
        .filter(|&i| !up(bits, i) && up(bits, i + 1))
        .map(|i| bits ^ (0b11 << i))
        .collect();
    if !swaps_only && len >= 2 && bits & 0b11 == 0b11 {
        out.push(bits ^ 0b11);
    }
    out
}

/// `∨…∧ → ∧…∨` and `∧…∧ → ∨…∨` on any two positions.
fn pair_moves(bits: Bits, len: usize) -> Vec<Bits> {
    let mut out = Vec::new();
    for i in 0..len {
        for j in i + 1..len {
            if up(bits, j) {
                out.push(bits ^ (1 << i) ^ (1 << j));
            }
        }
    }
    out
}

/// Shortest path lengths from `start`, `None` where unreachable.
fn bfs(start: Bits, len: usize, next: impl Fn(Bits) -> Vec<Bits>) -> Vec<Option<u64>> {
    let mut dist = vec![None; 1 << len];
    dist[start as usize] = Some(0);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        let here = dist[x as usize].unwrap();
        for y in next(x) {
            if dist[y as usize].is_none() {
                dist[y as usize] = Some(here + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

pub fn sequences() -> Tally {
    let mut t = Tally::default();
    for len in 0..=9usize {
        let seqs: Vec<ArrowSeq> = (0..1 << len).map(|b| to_seq(b, len)).collect();
        for eta in 0..(1 as Bits) << len {
            let elem = bfs(eta, len, |b| elementary(b, len, false));
            let pairs = bfs(eta, len, |b| pair_moves(b, len));
            let swaps = bfs(eta, len, |b| elementary(b, len, true));
            for xi in 0..(1 as Bits) << len {
                let leq = seq_leq(&seqs[xi as usize], &seqs[eta as usize]).unwrap();
                let (a, b) = (elem[xi as usize].is_some(), pairs[xi as usize].is_some());
                t.check(leq == a && leq == b, || {
                    format!(
                        "{} ≼ {}: seq_leq {leq}, elementary {a}, pairs {b}",
                        seqs[xi as usize], seqs[eta as usize]
                    )
                });
                if leq && xi.count_ones() == eta.count_ones() {
                    t.check(swaps[xi as usize].is_some(), || {
                        format!("{} not reached from {} by swaps", seqs[xi as usize], seqs[eta as usize])
                    });
                }
            }
        }
    }
    t
}

pub fn distances() -> Tally {
    let mut t = Tally::default();
    for len in 0..=8usize {
        for eta in 0..(1 as Bits) << len {
            let dist = bfs(eta, len, |b| elementary(b, len, false));
            let e = to_seq(eta, len);
            for (xi, d) in dist.iter().enumerate() {
                let Some(d) = *d else { continue };
                let x = to_seq(xi as Bits, len);
                let l = seq_distance(&e, &x).ok();
                t.check(l == Some(d), || format!("l({e}, {x}) = {l:?}, shortest path {d}"));
            }
        }
    }
    t
}

pub fn weights(corpus: &Corpus) -> Tally {
    let mut t = Tally::default();
    let budget = SearchBudget::with_max_orbit(1 << 20);
    for table in corpus.all().filter(|t| t.orbit().cfg().p() <= 11) {
        let o = table.orbit();
        let cfg = o.cfg();
        for i in 0..o.len() {
            let lam = o.weight(i);
            let down = match oracle_down_set(lam, cfg, &budget) {
                Ok(d) => d,
                Err(e) => {
                    t.check(false, || format!("oracle for {lam}: {e}"));
                    continue;
                }
            };
            for mu in o.weights() {
                let leq = weight_leq(mu, lam, cfg).unwrap();
                let found = down.contains(mu);
                t.check(leq == found, || {
                    format!("{mu} ≼ {lam} in {cfg:?}: diagrams {leq}, oracle {found}")
                });
            }
        }
    }
    t
}
