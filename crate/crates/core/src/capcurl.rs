//! Cap and curl diagrams, their co-diagrams, and orientation checks.

use serde::Serialize;

use crate::diagram::{canonical_diagram, ArrowDiagram, NodeState};
use crate::error::{Error, Result};
use crate::order::diagram_same_orbit;
use crate::weights::{Flavor, GroupConfig, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StrandKind {
    Cap,
    Curl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RenderSide {
    Above,
    Below,
}

/// A cap or curl joining two nodes, `left < right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Strand {
    pub kind: StrandKind,
    pub left: usize,
    pub right: usize,
    pub side: Side,
    pub render: RenderSide,
}

/// Cap and curl diagram (or co-diagram) attached to an arrow diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapCurlDiagram {
    base: ArrowDiagram,
    strands: Vec<Strand>,
    co: bool,
}

/// Result of laying an arrow diagram on a cap and curl diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Every strand is oriented; the count is the number of strands whose
    /// arrows differ from the base diagram.
    Oriented(u32),
    NotOriented,
}

impl Orientation {
    pub fn flips(self) -> Option<u32> {
        match self {
            Orientation::Oriented(k) => Some(k),
            Orientation::NotOriented => None,
        }
    }
}

pub(crate) fn build_strands(d: &ArrowDiagram, co: bool) -> Vec<Strand> {
    let (opener, closer) = if co {
        (NodeState::Up, NodeState::Down)
    } else {
        (NodeState::Down, NodeState::Up)
    };
    let sides = d.sides().expect("canonical diagram");
    let mut strands = Vec::new();
    for (h, range) in sides.into_iter().enumerate() {
        let side = if h == 0 { Side::Left } else { Side::Right };
        let render = match (d.flavor(), co, side) {
            (Flavor::Gl, false, _) => RenderSide::Above,
            (Flavor::Gl, true, _) => RenderSide::Below,
            (Flavor::Sp, false, Side::Left) | (Flavor::Sp, true, Side::Right) => RenderSide::Above,
            (Flavor::Sp, _, _) => RenderSide::Below,
        };
        let mut open = Vec::new();
        let mut free_closers = Vec::new();
        for i in range {
            let state = d.node(i);
            if state == opener {
                open.push(i);
            } else if state == closer {
                match open.pop() {
                    Some(j) => strands.push(Strand {
                        kind: StrandKind::Cap,
                        left: j,
                        right: i,
                        side,
                        render,
                    }),
                    None => free_closers.push(i),
                }
            }
        }
        if d.flavor() == Flavor::Sp {
            let curl = |pair: &[usize]| Strand {
                kind: StrandKind::Curl,
                left: pair[0],
                right: pair[1],
                side,
                render,
            };
            match side {
                Side::Left => strands.extend(free_closers.chunks_exact(2).map(curl)),
                Side::Right => strands.extend(open.rchunks_exact(2).map(curl)),
            }
        }
    }
    strands.sort_by_key(|s| (s.left, s.right));
    strands
}

impl CapCurlDiagram {
    /// Strands joining neighbouring down-up pairs, then curls on free arrows.
    pub fn of_diagram(d: &ArrowDiagram) -> Self {
        let base = d.shift_canonical();
        CapCurlDiagram {
            strands: build_strands(&base, false),
            base,
            co: false,
        }
    }

    /// The co-diagram, built with the roles of up and down exchanged.
    pub fn co_of_diagram(d: &ArrowDiagram) -> Self {
        let base = d.shift_canonical();
        CapCurlDiagram {
            strands: build_strands(&base, true),
            base,
            co: true,
        }
    }

    pub fn base(&self) -> &ArrowDiagram {
        &self.base
    }

    pub fn strands(&self) -> &[Strand] {
        &self.strands
    }

    pub fn is_co(&self) -> bool {
        self.co
    }

    /// Lays `other` on the strands. `other` must have the same skeleton; its
    /// zero arrow is normalized to the base parity first.
    pub fn orient(&self, other: &ArrowDiagram) -> Result<Orientation> {
        let other = other.shift_canonical();
        if !diagram_same_orbit(&self.base, &other) {
            return Err(Error::NotComparable);
        }
        Ok(orient_strands(
            &self.strands,
            &self.base,
            &other.normalized(self.base.up_parity()),
        ))
    }

    /// Three rows: strands drawn above, nodes with walls, strands drawn below.
    /// Caps are `( )`, curls `{ }`.
    pub fn render_ascii(&self) -> String {
        const WIDTH: usize = 4;
        let tokens: Vec<String> = self.base.render_ascii().split(' ').map(str::to_string).collect();
        let cols = tokens.len() * WIDTH;
        let mut above = vec![' '; cols];
        let mut below = vec![' '; cols];
        for s in &self.strands {
            let row = match s.render {
                RenderSide::Above => &mut above,
                RenderSide::Below => &mut below,
            };
            let (l, r) = match s.kind {
                StrandKind::Cap => ('(', ')'),
                StrandKind::Curl => ('{', '}'),
            };
            row[s.left * WIDTH] = l;
            row[s.right * WIDTH] = r;
        }
        let nodes: String = tokens.iter().map(|t| format!("{t:<WIDTH$}")).collect();
        [
            above.iter().collect::<String>(),
            nodes,
            below.iter().collect::<String>(),
        ]
        .iter()
        .map(|l| l.trim_end().to_string())
        .collect::<Vec<_>>()
        .join("\n")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "base": self.base.to_json(),
            "co": self.co,
            "strands": self.strands,
        })
    }
}

pub(crate) fn orient_strands(strands: &[Strand], base: &ArrowDiagram, other: &ArrowDiagram) -> Orientation {
    let mut flips = 0;
    for s in strands {
        let (a, b) = (other.node(s.left), other.node(s.right));
        let oriented = match s.kind {
            StrandKind::Cap => a != b,
            StrandKind::Curl => a == b,
        };
        if !oriented {
            return Orientation::NotOriented;
        }
        if a != base.node(s.left) {
            flips += 1;
        }
    }
    Orientation::Oriented(flips)
}

pub fn cap_diagram(lambda: &Weight, cfg: &GroupConfig) -> Result<CapCurlDiagram> {
    Ok(CapCurlDiagram::of_diagram(&canonical_diagram(lambda, cfg)?))
}

pub fn cocap_diagram(mu: &Weight, cfg: &GroupConfig) -> Result<CapCurlDiagram> {
    Ok(CapCurlDiagram::co_of_diagram(&canonical_diagram(mu, cfg)?))
}

/// Orientation of `mu` on the cap and curl diagram `c`.
pub fn pair_orient(c: &CapCurlDiagram, mu: &Weight, cfg: &GroupConfig) -> Result<Orientation> {
    if c.is_co() {
        return Err(Error::Invariant("pair_orient expects a cap diagram".into()));
    }
    c.orient(&canonical_diagram(mu, cfg)?)
}

/// Orientation of `lambda` on the co-diagram `co`.
pub fn copair_orient(co: &CapCurlDiagram, lambda: &Weight, cfg: &GroupConfig) -> Result<Orientation> {
    if !co.is_co() {
        return Err(Error::Invariant("copair_orient expects a co-diagram".into()));
    }
    co.orient(&canonical_diagram(lambda, cfg)?)
}
