//! Orbit tables for every block of rank at most 10 at p in {5, 7, 11, 13}.
//!
//! GL blocks at p = 11 and 13 are too large to walk weight by weight, so
//! there every realized sequence-class signature gets one representative
//! orbit, and a seeded sample of full orbits is checked against it.

use std::collections::{HashMap, HashSet};

use klcap::order::SeqPair;
use klcap::{
    canonical_diagram, in_lambda_s, lambda_s, weight_of_diagram, ArrowDiagram, Flavor, GroupConfig, NodeState, Orbit,
    OrbitTable, Partition, SearchBudget, Weight,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const PRIMES: [u32; 4] = [5, 7, 11, 13];
pub const MAX_RANK: u32 = 10;
const SAMPLES_PER_CONFIG: usize = 6;

/// Left length, left ups, right length, right ups of the first member.
pub type Signature = (usize, usize, usize, usize);

pub fn signature(orbit: &Orbit) -> Signature {
    let s = orbit.seqs(0);
    (s.left.len(), s.left.up_count(), s.right.len(), s.right.up_count())
}

pub struct Corpus {
    pub tables: Vec<OrbitTable>,
    pub configs: usize,
    pub weights: usize,
    pub representatives: usize,
    pub samples: Vec<OrbitTable>,
}

/// One configuration per `(rank mod p, cutoffs)`, smallest rank first.
pub fn configs(flavor: Flavor, p: u32) -> Vec<GroupConfig> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for rank in 1..=MAX_RANK {
        let cuts: Vec<[u32; 2]> = match flavor {
            Flavor::Gl => (1..=rank)
                .flat_map(|s1| (1..=rank - s1).map(move |s2| [s1, s2]))
                .collect(),
            Flavor::Sp => (1..=rank).map(|s| [s, 0]).collect(),
        };
        for s in cuts {
            let cfg = match flavor {
                Flavor::Gl => GroupConfig::gl(p, rank, s[0], s[1]),
                Flavor::Sp => GroupConfig::sp(p, rank, s[0]),
            };
            if let Ok(cfg) = cfg {
                if seen.insert((rank % p, s)) {
                    out.push(cfg);
                }
            }
        }
    }
    out
}

fn full_orbits(cfg: &GroupConfig, budget: &SearchBudget, out: &mut Vec<OrbitTable>) -> usize {
    let weights = lambda_s(cfg);
    let mut covered = HashSet::new();
    for lam in &weights {
        if covered.contains(lam) {
            continue;
        }
        let orbit = Orbit::of(lam, cfg, budget).expect("orbit");
        covered.extend(orbit.weights().iter().cloned());
        out.push(OrbitTable::build(orbit).expect("table"));
    }
    assert_eq!(covered.len(), weights.len(), "orbits of {cfg:?} leave Λ(s)");
    weights.len()
}

/// Ways to fill `len` nodes with `ups`, `downs`, `crosses` and empties.
fn fillings(len: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for u in 0..=len {
        for d in 0..=len - u {
            for c in 0..=len - u - d {
                out.push([u, d, c]);
            }
        }
    }
    out
}

fn fill(d: &mut ArrowDiagram, nodes: std::ops::Range<usize>, [u, dn, c]: [usize; 3]) {
    let states = std::iter::repeat_n(NodeState::Cross, c)
        .chain(std::iter::repeat_n(NodeState::Up, u))
        .chain(std::iter::repeat_n(NodeState::Down, dn))
        .chain(std::iter::repeat(NodeState::Empty));
    for (i, s) in nodes.zip(states) {
        *d = d.with_node(i, s);
    }
}

/// One orbit for each signature realized by a canonical diagram of the block.
fn representative_orbits(cfg: &GroupConfig, budget: &SearchBudget, out: &mut Vec<OrbitTable>) -> usize {
    let empty = Weight::gl(&[], &[]).unwrap();
    let base = canonical_diagram(&empty, cfg).expect("empty weight");
    let [left, right] = base.sides().expect("sides");
    let mut seen = HashSet::new();
    for fl in fillings(left.len()) {
        for fr in fillings(right.len()) {
            let sig = (fl[0] + fl[1], fl[0], fr[0] + fr[1], fr[0]);
            if seen.contains(&sig) {
                continue;
            }
            let mut d = base.clone();
            fill(&mut d, left.clone(), fl);
            fill(&mut d, right.clone(), fr);
            let Ok(w) = weight_of_diagram(&d, cfg) else { continue };
            if !in_lambda_s(&w, cfg).unwrap_or(false) || canonical_diagram(&w, cfg).ok().as_ref() != Some(&d) {
                continue;
            }
            seen.insert(sig);
            out.push(OrbitTable::build(Orbit::of(&w, cfg, budget).expect("orbit")).expect("table"));
        }
    }
    seen.len()
}

fn random_partition(rng: &mut StdRng, max_part: u32, len: u32) -> Partition {
    let mut parts: Vec<u32> = (0..len).map(|_| rng.gen_range(0..=max_part)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("sorted")
}

fn sampled_orbits(cfg: &GroupConfig, budget: &SearchBudget, rng: &mut StdRng, out: &mut Vec<OrbitTable>) {
    let [s1, s2] = cfg.cutoffs();
    let p = cfg.p();
    for _ in 0..SAMPLES_PER_CONFIG {
        let pos = random_partition(rng, p - s1, s1);
        let neg = random_partition(rng, p - s2, s2);
        let w = Weight::gl(pos.parts(), neg.parts()).expect("weight");
        out.push(OrbitTable::build(Orbit::of(&w, cfg, budget).expect("orbit")).expect("table"));
    }
}

impl Corpus {
    pub fn build() -> Self {
        let budget = SearchBudget::with_max_orbit(1 << 20);
        let mut rng = StdRng::seed_from_u64(2024);
        let mut corpus = Corpus {
            tables: Vec::new(),
            configs: 0,
            weights: 0,
            representatives: 0,
            samples: Vec::new(),
        };
        for p in PRIMES {
            for flavor in [Flavor::Gl, Flavor::Sp] {
                for cfg in configs(flavor, p) {
                    corpus.configs += 1;
                    if flavor == Flavor::Gl && p > 7 {
                        corpus.representatives += representative_orbits(&cfg, &budget, &mut corpus.tables);
                        sampled_orbits(&cfg, &budget, &mut rng, &mut corpus.samples);
                    } else {
                        corpus.weights += full_orbits(&cfg, &budget, &mut corpus.tables);
                    }
                }
            }
        }
        corpus
    }

    pub fn all(&self) -> impl Iterator<Item = &OrbitTable> {
        self.tables.iter().chain(&self.samples)
    }

    pub fn pairs(&self) -> usize {
        self.all().map(|t| t.len() * t.len()).sum()
    }
}

/// Compares a table with another of the same signature through the sequence
/// pairs of the members. Returns a description of the first difference.
pub fn same_tables(a: &OrbitTable, b: &OrbitTable) -> Option<String> {
    let index: HashMap<&SeqPair, usize> = (0..b.len()).map(|j| (b.orbit().seqs(j), j)).collect();
    if a.len() != b.len() {
        return Some(format!("sizes {} and {}", a.len(), b.len()));
    }
    let map: Vec<usize> = match (0..a.len()).map(|i| index.get(a.orbit().seqs(i)).copied()).collect() {
        Some(m) => m,
        None => return Some("sequence pairs differ".into()),
    };
    for i in 0..a.len() {
        for j in 0..a.len() {
            let (x, y) = (map[i], map[j]);
            for (name, ma, mb) in [
                ("d", a.d(), b.d()),
                ("e", a.e(), b.e()),
                ("p", a.p(), b.p()),
                ("r", a.r(), b.r()),
            ] {
                if ma[i][j] != mb[x][y] {
                    return Some(format!(
                        "{name}({}, {}) = {} but {}",
                        a.orbit().weight(i),
                        a.orbit().weight(j),
                        ma[i][j],
                        mb[x][y]
                    ));
                }
            }
        }
    }
    None
}
