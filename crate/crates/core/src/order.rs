//! Arrow sequences, the order on them and on weights, orbits, and the
//! reflection-based reference order.

use std::cmp::Reverse;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::budget::SearchBudget;
use crate::diagram::{canonical_diagram, weight_of_diagram, ArrowDiagram, NodeState};
use crate::error::{Error, Result};
use crate::weights::{Flavor, GroupConfig, Partition, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Arrow {
    Up,
    Down,
}

impl Arrow {
    pub fn flipped(self) -> Self {
        match self {
            Arrow::Up => Arrow::Down,
            Arrow::Down => Arrow::Up,
        }
    }

    pub fn glyph(self) -> char {
        match self {
            Arrow::Up => '∧',
            Arrow::Down => '∨',
        }
    }

    pub fn state(self) -> NodeState {
        match self {
            Arrow::Up => NodeState::Up,
            Arrow::Down => NodeState::Down,
        }
    }

    pub fn of_state(state: NodeState) -> Option<Self> {
        match state {
            NodeState::Up => Some(Arrow::Up),
            NodeState::Down => Some(Arrow::Down),
            _ => None,
        }
    }
}

/// A finite word in up and down arrows.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrowSeq(Vec<Arrow>);

impl ArrowSeq {
    pub fn new(arrows: Vec<Arrow>) -> Self {
        ArrowSeq(arrows)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn up_count(&self) -> usize {
        self.0.iter().filter(|&&a| a == Arrow::Up).count()
    }

    /// Sum over `i >= 2` of the number of up arrows at positions `>= i`.
    pub fn l_total(&self) -> u64 {
        l_total(&self.0)
    }

    /// Every arrow flipped.
    pub fn dagger(&self) -> Self {
        ArrowSeq(self.0.iter().map(|a| a.flipped()).collect())
    }

    /// All sequences of the given length whose up count is `ups`, or, when
    /// `ups` is `None`, whose up count has parity `parity`.
    pub fn all_with(len: usize, ups: Option<usize>, parity: bool) -> Vec<ArrowSeq> {
        (0u64..1 << len)
            .filter(|m| match ups {
                Some(k) => m.count_ones() as usize == k,
                None => (m.count_ones() % 2 == 1) == parity,
            })
            .map(|m| {
                ArrowSeq(
                    (0..len)
                        .map(|i| if m >> i & 1 == 1 { Arrow::Up } else { Arrow::Down })
                        .collect(),
                )
            })
            .collect()
    }
}

impl FromIterator<Arrow> for ArrowSeq {
    fn from_iter<I: IntoIterator<Item = Arrow>>(iter: I) -> Self {
        ArrowSeq(iter.into_iter().collect())
    }
}

impl fmt::Display for ArrowSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|a| write!(f, "{}", a.glyph()))
    }
}

/// Accepts `^`/`∧` and `v`/`∨`; whitespace is ignored.
impl FromStr for ArrowSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '^' | '∧' => Ok(Arrow::Up),
                'v' | 'V' | '∨' => Ok(Arrow::Down),
                other => Err(Error::Parse(format!("unknown arrow `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(ArrowSeq)
    }
}

/// The two arrow sequences read off the sides of a diagram.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeqPair {
    pub left: ArrowSeq,
    pub right: ArrowSeq,
}

impl SeqPair {
    pub fn sides(&self) -> [&ArrowSeq; 2] {
        [&self.left, &self.right]
    }

    pub fn l_total(&self) -> u64 {
        self.left.l_total() + self.right.l_total()
    }
}

impl fmt::Display for SeqPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

pub(crate) fn l_total(seq: &[Arrow]) -> u64 {
    seq.iter()
        .enumerate()
        .filter(|(_, &a)| a == Arrow::Up)
        .map(|(i, _)| i as u64)
        .sum()
}

/// `xi ≼ eta` on equal-length slices.
pub(crate) fn leq_slices(xi: &[Arrow], eta: &[Arrow]) -> bool {
    let mut diff = 0i64;
    for k in (1..eta.len()).rev() {
        diff += i64::from(eta[k] == Arrow::Up) - i64::from(xi[k] == Arrow::Up);
        if diff < 0 {
            return false;
        }
    }
    let total = |s: &[Arrow]| s.iter().filter(|&&a| a == Arrow::Up).count();
    total(xi) % 2 == total(eta) % 2
}

/// Reads the sequences off a diagram. GL diagrams are shifted first. The
/// right side of an Sp diagram is read from the right with arrows flipped.
pub fn split_sequences(d: &ArrowDiagram) -> SeqPair {
    let shifted;
    let d = if d.is_canonical() {
        d
    } else {
        shifted = d.shift_canonical();
        &shifted
    };
    let [left, right] = d.sides().expect("canonical diagram has sides");
    let read =
        |r: std::ops::Range<usize>| -> Vec<Arrow> { d.nodes()[r].iter().filter_map(|&n| Arrow::of_state(n)).collect() };
    let left = ArrowSeq(read(left));
    let mut right = read(right);
    if d.flavor() == Flavor::Sp {
        right.reverse();
        right.iter_mut().for_each(|a| *a = a.flipped());
    }
    SeqPair {
        left,
        right: ArrowSeq(right),
    }
}

fn check_lengths(a: &ArrowSeq, b: &ArrowSeq) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(())
}

/// Number of up arrows of `eta` at positions `>= i` (1-based) minus the same for `xi`.
pub fn l_stat(eta: &ArrowSeq, xi: &ArrowSeq, i: usize) -> Result<i64> {
    check_lengths(eta, xi)?;
    let count = |s: &ArrowSeq| {
        s.0.iter()
            .skip(i.saturating_sub(1))
            .filter(|&&a| a == Arrow::Up)
            .count() as i64
    };
    Ok(count(eta) - count(xi))
}

/// `xi ≼ eta`.
pub fn seq_leq(xi: &ArrowSeq, eta: &ArrowSeq) -> Result<bool> {
    check_lengths(xi, eta)?;
    Ok(leq_slices(&xi.0, &eta.0))
}

/// Length of every path of elementary moves from `eta` down to `xi`.
pub fn seq_distance(eta: &ArrowSeq, xi: &ArrowSeq) -> Result<u64> {
    if !seq_leq(xi, eta)? {
        return Err(Error::NotComparable);
    }
    Ok(eta.l_total() - xi.l_total())
}

fn seq_class_matches(a: &ArrowSeq, b: &ArrowSeq, flavor: Flavor) -> bool {
    match flavor {
        Flavor::Gl => a.up_count() == b.up_count(),
        Flavor::Sp => a.up_count() % 2 == b.up_count() % 2,
    }
}

/// Whether two canonical diagrams lie in the same orbit. `b` is compared after
/// normalizing its zero arrow to the parity of `a`.
pub fn diagram_same_orbit(a: &ArrowDiagram, b: &ArrowDiagram) -> bool {
    if !a.same_skeleton(b) {
        return false;
    }
    let b = b.normalized(a.up_parity());
    let (sa, sb) = (split_sequences(a), split_sequences(&b));
    seq_class_matches(&sa.left, &sb.left, a.flavor()) && seq_class_matches(&sa.right, &sb.right, a.flavor())
}

/// `mu ≼ lambda` for canonical diagrams.
pub fn diagram_leq(mu: &ArrowDiagram, lambda: &ArrowDiagram) -> bool {
    if !diagram_same_orbit(lambda, mu) {
        return false;
    }
    let mu = mu.normalized(lambda.up_parity());
    let (sm, sl) = (split_sequences(&mu), split_sequences(lambda));
    leq_slices(&sm.left.0, &sl.left.0) && leq_slices(&sm.right.0, &sl.right.0)
}

/// The grading statistic of a canonical diagram.
pub fn diagram_n(d: &ArrowDiagram) -> u64 {
    split_sequences(d).l_total()
}

pub fn n_stat(lambda: &Weight, cfg: &GroupConfig) -> Result<u64> {
    Ok(diagram_n(&canonical_diagram(lambda, cfg)?))
}

/// `n(lambda) - n(mu)` for weights in the same orbit.
pub fn n_rel(lambda: &Weight, mu: &Weight, cfg: &GroupConfig) -> Result<i64> {
    let (dl, dm) = (canonical_diagram(lambda, cfg)?, canonical_diagram(mu, cfg)?);
    if !diagram_same_orbit(&dl, &dm) {
        return Err(Error::NotComparable);
    }
    Ok(diagram_n(&dl) as i64 - diagram_n(&dm) as i64)
}

/// `mu ≼ lambda`.
pub fn weight_leq(mu: &Weight, lambda: &Weight, cfg: &GroupConfig) -> Result<bool> {
    Ok(diagram_leq(
        &canonical_diagram(mu, cfg)?,
        &canonical_diagram(lambda, cfg)?,
    ))
}

/// The weights of a block sharing a skeleton and conjugacy data with a given
/// weight, ordered so that larger elements come first.
#[derive(Debug, Clone)]
pub struct Orbit {
    cfg: GroupConfig,
    parity: bool,
    members: Vec<ArrowDiagram>,
    weights: Vec<Weight>,
    seqs: Vec<SeqPair>,
    n: Vec<u64>,
    by_weight: HashMap<Weight, usize>,
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

impl Orbit {
    pub fn of(lambda: &Weight, cfg: &GroupConfig, budget: &SearchBudget) -> Result<Self> {
        Orbit::from_diagram(&canonical_diagram(lambda, cfg)?, cfg, budget)
    }

    /// The orbit of a canonical diagram; its up-arrow parity fixes the zero-arrow convention.
    pub fn from_diagram(gen: &ArrowDiagram, cfg: &GroupConfig, budget: &SearchBudget) -> Result<Self> {
        gen.check_config(cfg)?;
        let gen = gen.shift_canonical();
        let parity = gen.up_parity();
        let sides = gen.sides()?;
        let free_zero = gen.zero_arrow().is_some();
        let mut side_masks: Vec<(Vec<usize>, Vec<u64>)> = Vec::new();
        for (h, range) in sides.iter().enumerate() {
            let positions: Vec<usize> = range
                .clone()
                .filter(|&i| gen.node(i).is_single() && !(free_zero && i == 0))
                .collect();
            let k = positions.len();
            let ups = positions.iter().filter(|&&i| gen.node(i) == NodeState::Up).count();
            let constraint = match (cfg.flavor(), free_zero && h == 0) {
                (Flavor::Gl, _) => Some(Some(ups)),
                (Flavor::Sp, false) => Some(None),
                (Flavor::Sp, true) => None,
            };
            let count = match constraint {
                Some(Some(a)) => binomial(k, a),
                Some(None) => 1usize << k.saturating_sub(1),
                None => 1usize.checked_shl(k as u32).unwrap_or(usize::MAX),
            };
            if count > budget.max_orbit || k >= 63 {
                return Err(Error::Budget(budget.max_orbit));
            }
            let masks = (0u64..1 << k)
                .filter(|m| match constraint {
                    Some(Some(a)) => m.count_ones() as usize == a,
                    Some(None) => m.count_ones() as usize % 2 == ups % 2,
                    None => true,
                })
                .collect();
            side_masks.push((positions, masks));
        }
        let total = side_masks[0].1.len().saturating_mul(side_masks[1].1.len());
        if total > budget.max_orbit {
            return Err(Error::Budget(budget.max_orbit));
        }
        let mut members = Vec::with_capacity(total);
        let (pos0, masks0) = &side_masks[0];
        let (pos1, masks1) = &side_masks[1];
        for &m0 in masks0 {
            for &m1 in masks1 {
                let mut d = gen.clone();
                for (positions, m) in [(pos0, m0), (pos1, m1)] {
                    for (bit, &i) in positions.iter().enumerate() {
                        let arrow = if m >> bit & 1 == 1 {
                            NodeState::Up
                        } else {
                            NodeState::Down
                        };
                        d.set_node(i, arrow);
                    }
                }
                if free_zero {
                    d.set_node(0, NodeState::Down);
                    d = d.normalized(parity);
                }
                members.push(d);
            }
        }
        let mut keyed: Vec<(u64, String, ArrowDiagram, SeqPair)> = members
            .into_iter()
            .map(|d| {
                let seqs = split_sequences(&d);
                (seqs.l_total(), d.render_ascii(), d, seqs)
            })
            .collect();
        keyed.sort_by(|a, b| (Reverse(a.0), &a.1).cmp(&(Reverse(b.0), &b.1)));
        let mut orbit = Orbit {
            cfg: *cfg,
            parity,
            members: Vec::with_capacity(keyed.len()),
            weights: Vec::with_capacity(keyed.len()),
            seqs: Vec::with_capacity(keyed.len()),
            n: Vec::with_capacity(keyed.len()),
            by_weight: HashMap::with_capacity(keyed.len()),
        };
        for (idx, (n, _, d, seqs)) in keyed.into_iter().enumerate() {
            let w = weight_of_diagram(&d, cfg)?;
            orbit.by_weight.insert(w.clone(), idx);
            orbit.weights.push(w);
            orbit.members.push(d);
            orbit.seqs.push(seqs);
            orbit.n.push(n);
        }
        Ok(orbit)
    }

    pub fn cfg(&self) -> &GroupConfig {
        &self.cfg
    }

    /// Up-arrow parity shared by all member diagrams.
    pub fn parity(&self) -> bool {
        self.parity
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn diagrams(&self) -> &[ArrowDiagram] {
        &self.members
    }

    pub fn diagram(&self, i: usize) -> &ArrowDiagram {
        &self.members[i]
    }

    pub fn weight(&self, i: usize) -> &Weight {
        &self.weights[i]
    }

    pub fn seqs(&self, i: usize) -> &SeqPair {
        &self.seqs[i]
    }

    pub fn n_value(&self, i: usize) -> u64 {
        self.n[i]
    }

    pub fn position(&self, w: &Weight) -> Option<usize> {
        self.by_weight.get(w).copied()
    }

    /// Member `i` ≼ member `j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        let (a, b) = (&self.seqs[i], &self.seqs[j]);
        leq_slices(&a.left.0, &b.left.0) && leq_slices(&a.right.0, &b.right.0)
    }
}

/// The orbit of `lambda`, largest elements first.
pub fn orbit(lambda: &Weight, cfg: &GroupConfig) -> Result<Vec<Weight>> {
    Ok(Orbit::of(lambda, cfg, &SearchBudget::from_env())?.weights)
}

fn weight_vector(w: &Weight, cfg: &GroupConfig) -> Result<Vec<i64>> {
    cfg.validate(w)?;
    let rank = cfg.rank() as usize;
    let mut v = vec![0i64; rank];
    match w {
        Weight::Gl { pos, neg } => {
            pos.parts().iter().enumerate().for_each(|(i, &x)| v[i] = i64::from(x));
            neg.parts()
                .iter()
                .enumerate()
                .for_each(|(i, &x)| v[rank - 1 - i] = -i64::from(x));
        }
        Weight::Sp { parts } => {
            parts.parts().iter().enumerate().for_each(|(i, &x)| v[i] = i64::from(x));
        }
    }
    Ok(v.iter().zip(cfg.rho_vector()).map(|(a, r)| a + r).collect())
}

fn vector_weight(x: &[i64], cfg: &GroupConfig) -> Weight {
    let v: Vec<i64> = x.iter().zip(cfg.rho_vector()).map(|(a, r)| a - r).collect();
    match cfg.flavor() {
        Flavor::Gl => Weight::Gl {
            pos: Partition::new(v.iter().filter(|&&a| a > 0).map(|&a| a as u32).collect()).expect("dominant"),
            neg: Partition::new(v.iter().rev().filter(|&&a| a < 0).map(|&a| (-a) as u32).collect()).expect("dominant"),
        },
        Flavor::Sp => Weight::Sp {
            parts: Partition::new(v.iter().map(|&a| a as u32).collect()).expect("dominant"),
        },
    }
}

fn strictly_decreasing(x: &[i64]) -> bool {
    x.windows(2).all(|w| w[0] > w[1])
}

fn all_distinct(x: &[i64]) -> bool {
    let mut s = x.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

fn reflection_successors(x: &[i64], cfg: &GroupConfig) -> Vec<Vec<i64>> {
    let p = i64::from(cfg.p());
    let rho = cfg.rho_vector();
    let rank = x.len();
    let mut out = Vec::new();
    match cfg.flavor() {
        Flavor::Gl => {
            let l1 = (0..rank).take_while(|&i| x[i] > rho[i]).count();
            let l2 = (0..rank).rev().take_while(|&i| x[i] < rho[i]).count();
            let support: Vec<usize> = (0..l1).chain(rank - l2..rank).collect();
            for i in 0..l1 {
                for j in rank - l2..rank {
                    let diff = x[i] - x[j];
                    let mut l = 1;
                    while diff - l * p >= 1 {
                        let a = diff - l * p;
                        l += 1;
                        let mut y = x.to_vec();
                        y[i] -= a;
                        y[j] += a;
                        if !all_distinct(&y) {
                            continue;
                        }
                        let mut vals: Vec<i64> = support.iter().map(|&k| y[k]).collect();
                        vals.sort_unstable_by(|a, b| b.cmp(a));
                        support.iter().zip(vals).for_each(|(&k, v)| y[k] = v);
                        if strictly_decreasing(&y) {
                            out.push(y);
                        }
                    }
                }
            }
        }
        Flavor::Sp => {
            let l = (0..rank).take_while(|&i| x[i] > rho[i]).count();
            for i in 0..l {
                for j in i + 1..l {
                    let sum = x[i] + x[j];
                    let mut k = 1;
                    while sum - k * p >= 1 {
                        let mut y = x.to_vec();
                        y[i] = k * p - x[j];
                        y[j] = k * p - x[i];
                        k += 1;
                        if y.iter().any(|&v| v <= 0) || !all_distinct(&y) {
                            continue;
                        }
                        y[..l].sort_unstable_by(|a, b| b.cmp(a));
                        if strictly_decreasing(&y) {
                            out.push(y);
                        }
                    }
                }
            }
        }
    }
    out
}

/// All dominant weights reachable from `lambda` by chains of the generating
/// affine reflections, `lambda` included.
pub fn oracle_down_set(lambda: &Weight, cfg: &GroupConfig, budget: &SearchBudget) -> Result<HashSet<Weight>> {
    let start = weight_vector(lambda, cfg)?;
    let mut seen: HashSet<Vec<i64>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for y in reflection_successors(&x, cfg) {
            if seen.insert(y.clone()) {
                if seen.len() > budget.max_states {
                    return Err(Error::Budget(budget.max_states));
                }
                queue.push_back(y);
            }
        }
    }
    Ok(seen.iter().map(|x| vector_weight(x, cfg)).collect())
}

/// `mu ≼ lambda` decided by searching chains of affine reflections.
pub fn preceq_oracle(mu: &Weight, lambda: &Weight, cfg: &GroupConfig, budget: &SearchBudget) -> Result<bool> {
    cfg.validate(mu)?;
    Ok(oracle_down_set(lambda, cfg, budget)?.contains(mu))
}
