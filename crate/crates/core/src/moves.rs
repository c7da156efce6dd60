//! Equivalence and projection moves on arrow diagrams, and the recursions for
//! `p` and `r` built from them.

use std::collections::HashMap;

use serde::Serialize;

use crate::capcurl::{build_strands, Side, Strand, StrandKind};
use crate::diagram::{canonical_diagram, weight_of_diagram, ArrowDiagram, NodeState};
use crate::error::{Error, Result};
use crate::order::diagram_leq;
use crate::poly::QPoly;
use crate::weights::{GroupConfig, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MoveKind {
    /// A cap end moves onto a neighbouring empty node.
    SlideCapEnd,
    /// A curl end moves onto a neighbouring empty node.
    SlideCurlEnd,
    /// An arrow trades places with a neighbouring cross.
    SwapPastCross,
    /// The arrow on node 0 is flipped, turning a curl there into a cap.
    CurlToCapAtZero,
    /// The arrow on the last node is flipped, turning a curl there into a cap.
    CurlToCapAtEnd,
}

/// Swaps the contents of nodes `from` and `to`, or flips node `from` for the
/// two curl-to-cap kinds (then `to == from`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct EquivalenceMove {
    pub kind: MoveKind,
    pub from: usize,
    pub to: usize,
}

/// Replaces the arrows on nodes `left` and `left + 1` by an empty node and a cross.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ProjectionMove {
    pub left: usize,
}

impl ProjectionMove {
    pub fn right(&self) -> usize {
        self.left + 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionPlan {
    pub slides: Vec<EquivalenceMove>,
    pub projection: ProjectionMove,
}

fn innermost(strands: &[Strand], d: &ArrowDiagram) -> Option<Strand> {
    strands
        .iter()
        .filter(|s| s.kind == StrandKind::Cap)
        .filter(|s| (s.left + 1..s.right).all(|i| !d.node(i).is_single()))
        .min_by_key(|s| s.left)
        .copied()
}

fn slide(d: &mut ArrowDiagram, from: usize, to: usize, curl: bool, moves: &mut Vec<EquivalenceMove>) {
    let kind = match (d.node(to), curl) {
        (NodeState::Cross, _) => MoveKind::SwapPastCross,
        (_, false) => MoveKind::SlideCapEnd,
        (_, true) => MoveKind::SlideCurlEnd,
    };
    d.swap_nodes(from, to);
    moves.push(EquivalenceMove { kind, from, to });
}

/// Moves that bring one strand of the (co-)diagram of `d` onto two
/// neighbouring nodes as a cap, followed by the projection there. `None`
/// when there are no strands.
pub fn plan_for(d: &ArrowDiagram, co: bool) -> Option<ReductionPlan> {
    let mut d = d.shift_canonical();
    let strands = build_strands(&d, co);
    let mut slides = Vec::new();
    if let Some(cap) = innermost(&strands, &d) {
        let mut r = cap.right;
        while r > cap.left + 1 {
            slide(&mut d, r, r - 1, false, &mut slides);
            r -= 1;
        }
        return Some(ReductionPlan {
            slides,
            projection: ProjectionMove { left: cap.left },
        });
    }
    if let Some(curl) = strands.iter().filter(|s| s.side == Side::Left).min_by_key(|s| s.left) {
        for (mut at, target) in [(curl.left, 0), (curl.right, 1)] {
            while at > target {
                slide(&mut d, at, at - 1, true, &mut slides);
                at -= 1;
            }
        }
        slides.push(EquivalenceMove {
            kind: MoveKind::CurlToCapAtZero,
            from: 0,
            to: 0,
        });
        return Some(ReductionPlan {
            slides,
            projection: ProjectionMove { left: 0 },
        });
    }
    if let Some(curl) = strands.iter().filter(|s| s.side == Side::Right).max_by_key(|s| s.right) {
        let last = d.len() - 1;
        for (mut at, target) in [(curl.right, last), (curl.left, last - 1)] {
            while at < target {
                slide(&mut d, at, at + 1, true, &mut slides);
                at += 1;
            }
        }
        slides.push(EquivalenceMove {
            kind: MoveKind::CurlToCapAtEnd,
            from: last,
            to: last,
        });
        return Some(ReductionPlan {
            slides,
            projection: ProjectionMove { left: last - 1 },
        });
    }
    None
}

/// Plan driven by the co-diagram of `lambda`.
pub fn find_reduction(lambda: &Weight, cfg: &GroupConfig) -> Result<Option<ReductionPlan>> {
    Ok(plan_for(&canonical_diagram(lambda, cfg)?, true))
}

/// Plan driven by the cap and curl diagram of `lambda`.
pub fn find_cap_reduction(lambda: &Weight, cfg: &GroupConfig) -> Result<Option<ReductionPlan>> {
    Ok(plan_for(&canonical_diagram(lambda, cfg)?, false))
}

pub fn apply_move(mv: &EquivalenceMove, d: &ArrowDiagram) -> ArrowDiagram {
    let mut out = d.shift_canonical();
    match mv.kind {
        MoveKind::CurlToCapAtZero | MoveKind::CurlToCapAtEnd => {
            out.set_node(mv.from, out.node(mv.from).flipped());
        }
        _ => out.swap_nodes(mv.from, mv.to),
    }
    out
}

pub fn apply_slides(plan: &ReductionPlan, d: &ArrowDiagram) -> ArrowDiagram {
    plan.slides
        .iter()
        .fold(d.shift_canonical(), |acc, mv| apply_move(mv, &acc))
}

/// The projected diagram, or `None` when the two nodes carry equal arrows.
pub fn project(mv: &ProjectionMove, d: &ArrowDiagram) -> Option<ArrowDiagram> {
    let d = d.shift_canonical();
    let (a, b) = (d.node(mv.left), d.node(mv.right()));
    if !a.is_single() || !b.is_single() || a == b {
        return None;
    }
    let mut out = d;
    out.set_node(mv.left, NodeState::Empty);
    out.set_node(mv.right(), NodeState::Cross);
    Some(out)
}

pub fn apply_equivalence(mv: &EquivalenceMove, nu: &Weight, cfg: &GroupConfig) -> Result<Weight> {
    weight_of_diagram(&apply_move(mv, &canonical_diagram(nu, cfg)?), cfg)
}

pub fn apply_projection(mv: &ProjectionMove, nu: &Weight, cfg: &GroupConfig) -> Result<Option<Weight>> {
    project(mv, &canonical_diagram(nu, cfg)?)
        .map(|d| weight_of_diagram(&d, cfg))
        .transpose()
}

fn with_pair(d: &ArrowDiagram, left: usize, first: NodeState) -> ArrowDiagram {
    let mut out = d.clone();
    out.set_node(left, first);
    out.set_node(left + 1, first.flipped());
    out
}

fn has_pair(d: &ArrowDiagram, left: usize, first: NodeState) -> bool {
    d.node(left) == first && d.node(left + 1) == first.flipped()
}

/// Memoized evaluation of the `p` and `r` recursions on canonical diagrams.
#[derive(Debug, Default)]
pub struct Recursion {
    p_memo: HashMap<(ArrowDiagram, ArrowDiagram), QPoly>,
    r_memo: HashMap<(ArrowDiagram, ArrowDiagram), QPoly>,
}

impl Recursion {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn memo_size(&self) -> usize {
        self.p_memo.len() + self.r_memo.len()
    }

    /// `p` via the reduction plan of the cap and curl diagram of `lambda`.
    pub fn p(&mut self, lambda: &ArrowDiagram, mu: &ArrowDiagram) -> Result<QPoly> {
        let lambda = lambda.shift_canonical();
        let mu = mu.shift_canonical().normalized(lambda.up_parity());
        if !diagram_leq(&mu, &lambda) {
            return Ok(QPoly::zero());
        }
        if lambda == mu {
            return Ok(QPoly::one());
        }
        let key = (lambda, mu);
        if let Some(v) = self.p_memo.get(&key) {
            return Ok(v.clone());
        }
        let (lambda, mu) = &key;
        let plan = plan_for(lambda, false)
            .ok_or_else(|| Error::Invariant(format!("no cap or curl on {lambda} although it lies above {mu}")))?;
        let (lam, nu) = (apply_slides(&plan, lambda), apply_slides(&plan, mu));
        let k = plan.projection.left;
        if !has_pair(&lam, k, NodeState::Down) {
            return Err(Error::Invariant(format!("reduction of {lambda} does not end on a cap")));
        }
        let lam_lower = with_pair(&lam, k, NodeState::Up);
        let mut value = &QPoly::q_pow(1) * &self.p(&lam_lower, &nu)?;
        if has_pair(&nu, k, NodeState::Down) {
            let lam_proj = project(&plan.projection, &lam).expect("cap ends differ");
            let nu_proj = project(&plan.projection, &nu).expect("cap ends differ");
            value += &self.p(&lam_proj, &nu_proj)?;
        }
        self.p_memo.insert(key, value.clone());
        Ok(value)
    }

    /// `r` via the reduction plan of the co-diagram of `mu`.
    pub fn r(&mut self, lambda: &ArrowDiagram, mu: &ArrowDiagram) -> Result<QPoly> {
        let lambda = lambda.shift_canonical();
        let mu = mu.shift_canonical().normalized(lambda.up_parity());
        if !diagram_leq(&mu, &lambda) {
            return Ok(QPoly::zero());
        }
        if lambda == mu {
            return Ok(QPoly::one());
        }
        let key = (lambda, mu);
        if let Some(v) = self.r_memo.get(&key) {
            return Ok(v.clone());
        }
        let (lambda, mu) = &key;
        let plan = plan_for(mu, true)
            .ok_or_else(|| Error::Invariant(format!("no co-strand on {mu} although it lies below {lambda}")))?;
        let (lam, nu) = (apply_slides(&plan, lambda), apply_slides(&plan, mu));
        let k = plan.projection.left;
        if !has_pair(&nu, k, NodeState::Up) {
            return Err(Error::Invariant(format!("reduction of {mu} does not end on a co-cap")));
        }
        let nu_upper = with_pair(&nu, k, NodeState::Down);
        let mut value = &QPoly::q_pow(1) * &self.r(&lam, &nu_upper)?;
        if has_pair(&lam, k, NodeState::Up) {
            let lam_proj = project(&plan.projection, &lam).expect("cap ends differ");
            let nu_proj = project(&plan.projection, &nu).expect("cap ends differ");
            value += &self.r(&lam_proj, &nu_proj)?;
        }
        self.r_memo.insert(key, value.clone());
        Ok(value)
    }
}

pub fn p_recursive(lambda: &Weight, mu: &Weight, cfg: &GroupConfig) -> Result<QPoly> {
    Recursion::new().p(&canonical_diagram(lambda, cfg)?, &canonical_diagram(mu, cfg)?)
}

pub fn r_recursive(lambda: &Weight, mu: &Weight, cfg: &GroupConfig) -> Result<QPoly> {
    Recursion::new().r(&canonical_diagram(lambda, cfg)?, &canonical_diagram(mu, cfg)?)
}
