//! Stable diagrams for a fixed residue `delta` of the rank modulo `p`.
//!
//! Once `p` is large compared with the bounds on the weights, relabelling the
//! nodes by centred residues makes the arrow positions independent of `p`.
//! The windowed diagrams built here are compared across primes and against the
//! characteristic zero picture read directly off the label formulas.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::budget::SearchBudget;
use crate::diagram::{arrow_diagram, ArrowDiagram, NodeState, WallSide, Walls};
use crate::error::{Error, Result};
use crate::order::{diagram_leq, diagram_same_orbit, split_sequences, Orbit};
use crate::poly::{d_of, e_of, OrbitTable, QPoly, SeqClass, SeqTable};
use crate::weights::{is_prime, partitions_in_box, Flavor, GroupConfig, Weight};

/// Box bounds on the weights: `r` caps the first part, `s` the number of parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "flavor", rename_all = "lowercase")]
pub enum Bounds {
    Gl { r1: u32, r2: u32, s1: u32, s2: u32 },
    Sp { r: u32, s: u32 },
}

/// A residue `delta`, weight bounds and optionally the multiple `t` of `p`
/// added to reach the rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct LimitConfig {
    pub delta: i64,
    pub bounds: Bounds,
    pub t: Option<u32>,
}

impl LimitConfig {
    pub fn gl(delta: i64, r1: u32, r2: u32, s1: u32, s2: u32) -> Result<Self> {
        if s1 == 0 || s2 == 0 {
            return Err(Error::Config("s1 and s2 must be at least 1".into()));
        }
        Ok(LimitConfig {
            delta,
            bounds: Bounds::Gl { r1, r2, s1, s2 },
            t: None,
        })
    }

    pub fn sp(delta: i64, r: u32, s: u32) -> Result<Self> {
        if s == 0 {
            return Err(Error::Config("s must be at least 1".into()));
        }
        Ok(LimitConfig {
            delta,
            bounds: Bounds::Sp { r, s },
            t: None,
        })
    }

    pub fn with_t(mut self, t: u32) -> Self {
        self.t = Some(t);
        self
    }

    pub fn flavor(&self) -> Flavor {
        match self.bounds {
            Bounds::Gl { .. } => Flavor::Gl,
            Bounds::Sp { .. } => Flavor::Sp,
        }
    }

    fn odd(&self) -> bool {
        self.delta.rem_euclid(2) == 1
    }

    /// Every weight inside the bounds, sorted.
    pub fn weights(&self) -> Vec<Weight> {
        let mut out: Vec<Weight> = match self.bounds {
            Bounds::Gl { r1, r2, s1, s2 } => {
                let negs = partitions_in_box(r2, s2);
                partitions_in_box(r1, s1)
                    .into_iter()
                    .flat_map(|pos| {
                        negs.iter().map(move |neg| Weight::Gl {
                            pos: pos.clone(),
                            neg: neg.clone(),
                        })
                    })
                    .collect()
            }
            Bounds::Sp { r, s } => partitions_in_box(r, s)
                .into_iter()
                .map(|parts| Weight::Sp { parts })
                .collect(),
        };
        out.sort();
        out
    }

    pub fn contains(&self, w: &Weight) -> bool {
        match (self.bounds, w) {
            (Bounds::Gl { r1, r2, s1, s2 }, Weight::Gl { pos, neg }) => {
                pos.first() <= r1 && pos.len() as u32 <= s1 && neg.first() <= r2 && neg.len() as u32 <= s2
            }
            (Bounds::Sp { r, s }, Weight::Sp { parts }) => parts.first() <= r && parts.len() as u32 <= s,
            _ => false,
        }
    }

    /// Whether the arrows of every bounded weight stay clear of the far end of
    /// the diagram for this prime.
    pub fn admits(&self, p: u32) -> bool {
        if p == 2 || !is_prime(p) {
            return false;
        }
        let p = i64::from(p);
        let d = self.delta;
        match self.bounds {
            Bounds::Gl { r1, r2, s1, s2 } => {
                let (r1, r2, s1, s2) = (i64::from(r1), i64::from(r2), i64::from(s1), i64::from(s2));
                2 * (d - s1 + 1) >= -(p - 1) && 2 * (1 - r2) >= -(p - 1) && 2 * s2 < p && 2 * (d + r1) < p
            }
            Bounds::Sp { r, s } => {
                let (r, s) = (i64::from(r), i64::from(s));
                -d - 2 * s + 2 > -p && -d + 2 * r < p
            }
        }
    }

    fn needed_rank(&self) -> i64 {
        match self.bounds {
            Bounds::Gl { s1, s2, .. } => i64::from(s1 + s2),
            Bounds::Sp { s, .. } => i64::from(s),
        }
    }

    /// `n` for GL, `m` for Sp.
    pub fn rank(&self, p: u32, t: u32) -> i64 {
        let (p, t) = (i64::from(p), i64::from(t));
        let base = match self.flavor() {
            Flavor::Gl => self.delta,
            Flavor::Sp if self.odd() => (p - self.delta) / 2,
            Flavor::Sp => -self.delta / 2,
        };
        base + t * p
    }

    /// Smallest admissible `t` for this prime.
    pub fn min_t(&self, p: u32) -> u32 {
        let first = u32::from(self.flavor() == Flavor::Sp && !self.odd());
        (first..)
            .find(|&t| self.rank(p, t) >= self.needed_rank().max(1))
            .expect("rank grows with t")
    }

    /// The group configuration realising these bounds at `p`.
    pub fn group_config(&self, p: u32, t: u32) -> Result<GroupConfig> {
        let min = min_prime(self);
        if !self.admits(p) {
            return Err(Error::PrimeBelowBound { p, min });
        }
        let rank = self.rank(p, t);
        if rank < self.needed_rank().max(1) || (self.flavor() == Flavor::Sp && !self.odd() && t == 0) {
            return Err(Error::Config(format!(
                "t = {t} gives rank {rank}, too small for the bounds"
            )));
        }
        let rank = u32::try_from(rank).map_err(|_| Error::Config(format!("rank {rank} out of range")))?;
        match self.bounds {
            Bounds::Gl { s1, s2, .. } => GroupConfig::gl(p, rank, s1, s2),
            Bounds::Sp { s, .. } => GroupConfig::sp(p, rank, s),
        }
    }

    /// Centred label range of the GL window, or the last node of the Sp window.
    fn window(&self) -> (i64, i64) {
        let d = self.delta;
        match self.bounds {
            Bounds::Gl { r1, r2, s1, s2 } => {
                let lo = (d - i64::from(s1) + 1).min(1 - i64::from(r2));
                let hi = (d + i64::from(r1)).max(i64::from(s2));
                (lo - 1, hi + 1)
            }
            Bounds::Sp { r, s } => {
                let low = -d - 2 * i64::from(s) + 2;
                let high = -d + 2 * i64::from(r);
                let far = (low.abs() / 2).max(high.abs() / 2);
                let gap = self.sp_wall();
                (0, far.max(gap) + 1)
            }
        }
    }

    /// Stable gap of the Sp wall.
    fn sp_wall(&self) -> i64 {
        let Bounds::Sp { s, .. } = self.bounds else {
            unreachable!("GL bounds have two walls")
        };
        let c = -self.delta - 2 * i64::from(s) + 2;
        if self.odd() {
            match c {
                c if c < 0 => (-c - 1) / 2,
                1 => -1,
                c => (c - 3) / 2,
            }
        } else if c >= 2 {
            (c - 2) / 2
        } else {
            -c / 2
        }
    }
}

impl fmt::Display for LimitConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.bounds {
            Bounds::Gl { r1, r2, s1, s2 } => write!(f, "GL delta={} r1={r1} r2={r2} s1={s1} s2={s2}", self.delta)?,
            Bounds::Sp { r, s } => write!(f, "Sp delta={} r={r} s={s}", self.delta)?,
        }
        if let Some(t) = self.t {
            write!(f, " t={t}")?;
        }
        Ok(())
    }
}

/// Smallest odd prime admitted by the bounds.
pub fn min_prime(lc: &LimitConfig) -> u32 {
    (3..).find(|&p| lc.admits(p)).expect("large primes are admissible")
}

/// The next admissible prime above `p`.
pub fn next_prime(lc: &LimitConfig, p: u32) -> u32 {
    (p + 1..).find(|&q| lc.admits(q)).expect("large primes are admissible")
}

/// A label stored doubled, so that the half-integer labels of odd `delta`
/// stay exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StableLabel(pub i64);

impl StableLabel {
    pub fn whole(x: i64) -> Self {
        StableLabel(2 * x)
    }
}

impl fmt::Display for StableLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Walls of a stable diagram. The GL lower wall sits just before the label
/// `below_next` and the upper wall just after `above`; the Sp gap counts from
/// the fixed end and may be `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum StableWalls {
    Gl { below_next: i64, above: i64 },
    Sp { gap: i64 },
}

/// The window of a limiting diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct StableDiagram {
    flavor: Flavor,
    delta: i64,
    /// Centred label of the first node (GL); Sp windows start at the fixed end.
    first: i64,
    nodes: Vec<NodeState>,
    walls: StableWalls,
}

impl StableDiagram {
    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn nodes(&self) -> &[NodeState] {
        &self.nodes
    }

    pub fn walls(&self) -> StableWalls {
        self.walls
    }

    pub fn first_label(&self) -> i64 {
        self.first
    }

    fn sp_label(&self, j: usize, up: bool) -> StableLabel {
        let base = 2 * j as i64 + self.delta.rem_euclid(2);
        StableLabel(if up { base } else { -base })
    }

    /// Labels of the up arrows and of the down arrows, each sorted.
    pub fn arrow_labels(&self) -> [Vec<StableLabel>; 2] {
        let mut ups = Vec::new();
        let mut downs = Vec::new();
        for (k, &n) in self.nodes.iter().enumerate() {
            let (up, down) = match self.flavor {
                Flavor::Gl => (
                    StableLabel::whole(self.first + k as i64),
                    StableLabel::whole(self.first + k as i64),
                ),
                Flavor::Sp => (self.sp_label(k, true), self.sp_label(k, false)),
            };
            if matches!(n, NodeState::Up | NodeState::Cross) {
                ups.push(up);
            }
            if matches!(n, NodeState::Down | NodeState::Cross) {
                downs.push(down);
            }
        }
        ups.sort();
        downs.sort();
        [ups, downs]
    }

    /// Whether both end nodes of the window are empty.
    pub fn clear_of_edges(&self) -> bool {
        let last = self.nodes.last().copied();
        let first_ok = self.flavor == Flavor::Sp || self.nodes.first() == Some(&NodeState::Empty);
        first_ok && last == Some(NodeState::Empty)
    }

    /// The window as a finite arrow diagram whose sides carry the same
    /// sequences as the limiting diagram. GL windows are rotated so that the
    /// outer chamber wraps round; odd Sp windows are turned back round so
    /// the wall is read from the right end.
    pub fn to_diagram(&self) -> ArrowDiagram {
        let len = self.nodes.len();
        match self.walls {
            StableWalls::Gl { below_next, above } => {
                let start = (below_next - self.first) as usize;
                let mut nodes = self.nodes.clone();
                nodes.rotate_left(start);
                let above = (above - below_next).rem_euclid(len as i64) as usize;
                ArrowDiagram::from_parts(Flavor::Gl, len as u32, nodes, Walls::Gl { below: len - 1, above })
            }
            StableWalls::Sp { gap } => {
                let side = WallSide::Below;
                let fake_p = 2 * len as u32 - 1;
                if self.delta.rem_euclid(2) == 1 {
                    let nodes = self.nodes.iter().rev().map(|n| n.flipped()).collect();
                    let gap = (len as i64 - 2 - gap) as usize;
                    ArrowDiagram::from_parts(Flavor::Sp, fake_p, nodes, Walls::Sp { gap, side })
                } else {
                    ArrowDiagram::from_parts(
                        Flavor::Sp,
                        fake_p,
                        self.nodes.clone(),
                        Walls::Sp {
                            gap: gap as usize,
                            side,
                        },
                    )
                }
            }
        }
    }

    /// Two rows: labels, then node symbols with walls after their node.
    pub fn render_ascii(&self) -> String {
        let labels: Vec<String> = (0..self.nodes.len())
            .map(|k| match self.flavor {
                Flavor::Gl => (self.first + k as i64).to_string(),
                Flavor::Sp => self.sp_label(k, true).to_string(),
            })
            .collect();
        let width = labels.iter().map(String::len).max().unwrap_or(1).max(1) + 2;
        let mut top = String::new();
        let mut row = String::new();
        if let StableWalls::Sp { gap: -1, .. } = self.walls {
            row.push('|');
            top.push(' ');
        }
        for (k, n) in self.nodes.iter().enumerate() {
            let mut cell = n.glyph().to_string();
            let wall = match self.walls {
                StableWalls::Gl { below_next, above } => {
                    let l = self.first + k as i64;
                    match (l + 1 == below_next, l == above) {
                        (true, true) => "|TB",
                        (true, false) => "|B",
                        (false, true) => "|T",
                        _ => "",
                    }
                }
                StableWalls::Sp { gap } if gap == k as i64 => "|",
                StableWalls::Sp { .. } => "",
            };
            cell.push_str(wall);
            row.push_str(&format!("{cell:<width$}"));
            top.push_str(&format!("{:<width$}", labels[k]));
        }
        format!("{}\n{}", top.trim_end(), row.trim_end())
    }
}

fn centred(x: i64, p: u32) -> i64 {
    let p = i64::from(p);
    let half = (p - 1) / 2;
    (x + half).rem_euclid(p) - half
}

fn pick_t(lc: &LimitConfig, primes: &[u32]) -> u32 {
    lc.t.unwrap_or_else(|| primes.iter().map(|&p| lc.min_t(p)).max().unwrap_or(0))
}

/// The window of the diagram of `w` at the prime `p`, relabelled by centred
/// residues (and turned round for odd Sp `delta`).
pub fn stable_diagram(w: &Weight, lc: &LimitConfig, p: u32) -> Result<StableDiagram> {
    stable_diagram_at(w, lc, p, pick_t(lc, &[p]))
}

fn stable_diagram_at(w: &Weight, lc: &LimitConfig, p: u32, t: u32) -> Result<StableDiagram> {
    if !lc.contains(w) {
        return Err(Error::OutsideRange(w.to_string()));
    }
    let cfg = lc.group_config(p, t)?;
    let d = arrow_diagram(w, &cfg)?;
    let (lo, hi) = lc.window();
    let half = i64::from((p - 1) / 2);
    let out = match lc.flavor() {
        Flavor::Gl => {
            let nodes = (lo..=hi)
                .map(|l| {
                    if l.abs() <= half {
                        d.node(l.rem_euclid(i64::from(p)) as usize)
                    } else {
                        NodeState::Empty
                    }
                })
                .collect();
            let [s1, s2] = cfg.cutoffs();
            StableDiagram {
                flavor: Flavor::Gl,
                delta: lc.delta,
                first: lo,
                nodes,
                walls: StableWalls::Gl {
                    below_next: centred(cfg.rho(s1), p),
                    above: centred(i64::from(s2), p),
                },
            }
        }
        Flavor::Sp => {
            let odd = lc.odd();
            let Walls::Sp { gap, .. } = d.walls() else {
                unreachable!("Sp diagrams have one wall")
            };
            let nodes = (0..=hi)
                .map(|j| match (j > half, odd) {
                    (true, _) => NodeState::Empty,
                    (false, false) => d.node(j as usize),
                    (false, true) => d.node((half - j) as usize).flipped(),
                })
                .collect();
            let gap = if odd { half - gap as i64 - 1 } else { gap as i64 };
            StableDiagram {
                flavor: Flavor::Sp,
                delta: lc.delta,
                first: 0,
                nodes,
                walls: StableWalls::Sp { gap },
            }
        }
    };
    let inside = out.nodes.iter().map(|n| arrow_weight(*n)).sum::<usize>();
    let total = d.nodes().iter().map(|n| arrow_weight(*n)).sum::<usize>();
    if inside != total {
        return Err(Error::Invariant(format!(
            "{total} arrows of {w} but only {inside} inside the window at p = {p}"
        )));
    }
    Ok(out)
}

fn arrow_weight(n: NodeState) -> usize {
    match n {
        NodeState::Empty => 0,
        NodeState::Up | NodeState::Down => 1,
        NodeState::Cross => 2,
    }
}

fn place(nodes: &mut [NodeState], k: usize, arrow: NodeState) -> Result<()> {
    nodes[k] = match (nodes[k], arrow) {
        (NodeState::Empty, a) => a,
        (NodeState::Up, NodeState::Down) | (NodeState::Down, NodeState::Up) => NodeState::Cross,
        _ => return Err(Error::Invariant("two equal arrows on one node".into())),
    };
    Ok(())
}

/// The limiting diagram of `w` built straight from the label formulas,
/// without reference to any prime.
pub fn char0_diagram(w: &Weight, lc: &LimitConfig) -> Result<StableDiagram> {
    if !lc.contains(w) {
        return Err(Error::OutsideRange(w.to_string()));
    }
    let (lo, hi) = lc.window();
    let mut nodes = vec![NodeState::Empty; (hi - lo + 1) as usize];
    let delta = lc.delta;
    let walls = match (lc.bounds, w) {
        (Bounds::Gl { s1, s2, .. }, Weight::Gl { pos, neg }) => {
            for i in 1..=i64::from(s1) {
                let label = delta - i + 1 + i64::from(pos.part(i as usize - 1));
                place(&mut nodes, (label - lo) as usize, NodeState::Up)?;
            }
            for i in 1..=i64::from(s2) {
                let label = i - i64::from(neg.part(i as usize - 1));
                place(&mut nodes, (label - lo) as usize, NodeState::Down)?;
            }
            StableWalls::Gl {
                below_next: delta - i64::from(s1) + 1,
                above: i64::from(s2),
            }
        }
        (Bounds::Sp { s, .. }, Weight::Sp { parts }) => {
            for i in 1..=i64::from(s) {
                let label = -delta - 2 * i + 2 + 2 * i64::from(parts.part(i as usize - 1));
                let arrow = if label > 0 { NodeState::Up } else { NodeState::Down };
                place(&mut nodes, (label.abs() / 2) as usize, arrow)?;
            }
            StableWalls::Sp { gap: lc.sp_wall() }
        }
        _ => return Err(Error::Flavor(format!("{w} does not match the bounds"))),
    };
    Ok(StableDiagram {
        flavor: lc.flavor(),
        delta,
        first: lo,
        nodes,
        walls,
    })
}

/// The order relation and the four polynomials for an ordered pair of weights.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PairData {
    pub leq: bool,
    pub d: QPoly,
    pub e: QPoly,
    pub p: QPoly,
    pub r: QPoly,
}

/// `PairData` for every ordered pair of a weight list, `[lambda][mu]`.
pub type PairTable = Vec<Vec<PairData>>;

/// Pair data computed in characteristic `p` from full orbit tables.
pub fn prime_tables(lc: &LimitConfig, p: u32, t: u32, weights: &[Weight]) -> Result<PairTable> {
    let cfg = lc.group_config(p, t)?;
    let budget = SearchBudget::from_env();
    let mut tables: Vec<OrbitTable> = Vec::new();
    let mut at = Vec::with_capacity(weights.len());
    for w in weights {
        let found = tables
            .iter()
            .enumerate()
            .find_map(|(k, tab)| tab.orbit().position(w).map(|i| (k, i)));
        let loc = match found {
            Some(loc) => loc,
            None => {
                let table = OrbitTable::build(Orbit::of(w, &cfg, &budget)?)?;
                let i = table
                    .orbit()
                    .position(w)
                    .ok_or_else(|| Error::Invariant(format!("{w} missing from its orbit")))?;
                tables.push(table);
                (tables.len() - 1, i)
            }
        };
        at.push(loc);
    }
    Ok(at
        .iter()
        .map(|&(ka, i)| {
            at.iter()
                .map(|&(kb, j)| {
                    if ka != kb {
                        return PairData::default();
                    }
                    let tab = &tables[ka];
                    PairData {
                        leq: tab.orbit().leq(j, i),
                        d: tab.d()[i][j].clone(),
                        e: tab.e()[i][j].clone(),
                        p: tab.p()[i][j].clone(),
                        r: tab.r()[i][j].clone(),
                    }
                })
                .collect()
        })
        .collect())
}

/// Pair data on the characteristic zero windows: order and `d`, `e` from the
/// windowed cap diagrams, `p`, `r` as products over the two sequences.
pub fn char0_tables(lc: &LimitConfig, weights: &[Weight]) -> Result<PairTable> {
    let diagrams = weights
        .iter()
        .map(|w| Ok(char0_diagram(w, lc)?.to_diagram()))
        .collect::<Result<Vec<_>>>()?;
    let flavor = lc.flavor();
    let mut seq_tables: HashMap<SeqClass, SeqTable> = HashMap::new();
    let mut out = Vec::with_capacity(weights.len());
    for lam in &diagrams {
        let mut row = Vec::with_capacity(weights.len());
        for mu in &diagrams {
            if !diagram_same_orbit(lam, mu) {
                row.push(PairData::default());
                continue;
            }
            let mu_n = mu.normalized(lam.up_parity());
            let (sl, sm) = (split_sequences(lam), split_sequences(&mu_n));
            let mut p = QPoly::one();
            let mut r = QPoly::one();
            for (eta, xi) in sl.sides().into_iter().zip(sm.sides()) {
                let class = SeqClass::of(eta, flavor);
                if let std::collections::hash_map::Entry::Vacant(e) = seq_tables.entry(class) {
                    e.insert(SeqTable::build(class)?);
                }
                let tab = &seq_tables[&class];
                p = &p * &tab.p(eta, xi)?;
                r = &r * &tab.r(eta, xi)?;
            }
            row.push(PairData {
                leq: diagram_leq(mu, lam),
                d: d_of(lam, mu),
                e: e_of(lam, mu),
                p,
                r,
            });
        }
        out.push(row);
    }
    Ok(out)
}

/// One disagreement found by a comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub lambda: String,
    pub mu: Option<String>,
    pub what: String,
    pub left: String,
    pub right: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mu {
            Some(mu) => write!(
                f,
                "{} at ({}, {}): {} vs {}",
                self.what, self.lambda, mu, self.left, self.right
            ),
            None => write!(f, "{} at {}: {} vs {}", self.what, self.lambda, self.left, self.right),
        }
    }
}

fn diff_tables(weights: &[Weight], a: &PairTable, b: &PairTable, out: &mut Vec<Mismatch>) -> usize {
    let mut pairs = 0;
    for (i, lam) in weights.iter().enumerate() {
        for (j, mu) in weights.iter().enumerate() {
            pairs += 1;
            let (x, y) = (&a[i][j], &b[i][j]);
            let mut push = |what: &str, l: String, r: String| {
                out.push(Mismatch {
                    lambda: lam.to_string(),
                    mu: Some(mu.to_string()),
                    what: what.into(),
                    left: l,
                    right: r,
                })
            };
            if x.leq != y.leq {
                push("order", x.leq.to_string(), y.leq.to_string());
            }
            for (what, l, r) in [
                ("d", &x.d, &y.d),
                ("e", &x.e, &y.e),
                ("p", &x.p, &y.p),
                ("r", &x.r, &y.r),
            ] {
                if l != r {
                    push(what, l.to_string(), r.to_string());
                }
            }
        }
    }
    pairs
}

fn diff_diagrams(w: &Weight, a: &StableDiagram, b: &StableDiagram, out: &mut Vec<Mismatch>) {
    if a != b {
        out.push(Mismatch {
            lambda: w.to_string(),
            mu: None,
            what: "diagram".into(),
            left: a.render_ascii().replace('\n', " / "),
            right: b.render_ascii().replace('\n', " / "),
        });
    }
}

/// Outcome of comparing two primes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub config: LimitConfig,
    pub primes: [u32; 2],
    pub t: u32,
    pub weights: usize,
    pub pairs: usize,
    pub mismatches: Vec<Mismatch>,
}

impl StabilityReport {
    pub fn is_stable(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares stable diagrams, the order and `d`, `e`, `p`, `r` on the bounded
/// weights between two primes, keeping `t` fixed.
pub fn stability_check(lc: &LimitConfig, p1: u32, p2: u32) -> Result<StabilityReport> {
    let t = pick_t(lc, &[p1, p2]);
    let weights = lc.weights();
    let mut mismatches = Vec::new();
    for w in &weights {
        let a = stable_diagram_at(w, lc, p1, t)?;
        let b = stable_diagram_at(w, lc, p2, t)?;
        diff_diagrams(w, &a, &b, &mut mismatches);
    }
    let a = prime_tables(lc, p1, t, &weights)?;
    let b = prime_tables(lc, p2, t, &weights)?;
    let pairs = diff_tables(&weights, &a, &b, &mut mismatches);
    Ok(StabilityReport {
        config: *lc,
        primes: [p1, p2],
        t,
        weights: weights.len(),
        pairs,
        mismatches,
    })
}

/// Outcome of comparing the smallest admissible prime with characteristic zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Char0Report {
    pub config: LimitConfig,
    pub p: u32,
    pub t: u32,
    pub weights: usize,
    pub pairs: usize,
    pub mismatches: Vec<Mismatch>,
    pub note: Option<String>,
}

impl Char0Report {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

const WALLED_NOTE: &str = "weights are written [pos|neg]; the walled Brauer label of [pos|neg] is (neg, pos)";

/// Compares the windows and tables at the smallest admissible prime with the
/// characteristic zero construction.
pub fn char0_compare(lc: &LimitConfig) -> Result<Char0Report> {
    let p = min_prime(lc);
    let t = pick_t(lc, &[p]);
    let weights = lc.weights();
    let mut mismatches = Vec::new();
    for w in &weights {
        let a = stable_diagram_at(w, lc, p, t)?;
        let b = char0_diagram(w, lc)?;
        diff_diagrams(w, &a, &b, &mut mismatches);
    }
    let a = prime_tables(lc, p, t, &weights)?;
    let b = char0_tables(lc, &weights)?;
    let pairs = diff_tables(&weights, &a, &b, &mut mismatches);
    Ok(Char0Report {
        config: *lc,
        p,
        t,
        weights: weights.len(),
        pairs,
        mismatches,
        note: (lc.flavor() == Flavor::Gl).then(|| WALLED_NOTE.to_string()),
    })
}

/// Odd `delta`, Sp: the doubled stable label of a residue `label` in `1..p`.
pub fn odd_stable_label(label: u32, p: u32) -> StableLabel {
    StableLabel(2 * i64::from(label) - i64::from(p))
}

/// Inverse of [`odd_stable_label`].
pub fn odd_residue(label: StableLabel, p: u32) -> Option<u32> {
    let twice = label.0 + i64::from(p);
    (twice % 2 == 0 && twice > 0 && twice < 2 * i64::from(p)).then_some((twice / 2) as u32)
}

/// Turns a label by half a revolution about the middle of the window.
pub fn rotate_label(label: StableLabel) -> StableLabel {
    StableLabel(-label.0)
}
