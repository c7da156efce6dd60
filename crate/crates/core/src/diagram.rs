//! Arrow diagrams: the bijection between weights of a block and arrangements of
//! arrows on a circle (GL) or a folded line (Sp).

use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::{in_lambda_s, Flavor, GroupConfig, Partition, Weight};

/// Contents of a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeState {
    Empty,
    Up,
    Down,
    Cross,
}

impl NodeState {
    pub fn is_single(self) -> bool {
        matches!(self, NodeState::Up | NodeState::Down)
    }

    /// Swaps up and down, leaves other states alone.
    pub fn flipped(self) -> Self {
        match self {
            NodeState::Up => NodeState::Down,
            NodeState::Down => NodeState::Up,
            other => other,
        }
    }

    pub fn ascii(self) -> char {
        match self {
            NodeState::Empty => 'o',
            NodeState::Up => '^',
            NodeState::Down => 'v',
            NodeState::Cross => 'x',
        }
    }

    pub fn glyph(self) -> char {
        match self {
            NodeState::Empty => 'o',
            NodeState::Up => '∧',
            NodeState::Down => '∨',
            NodeState::Cross => '×',
        }
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c {
            'o' | 'O' | '.' => Ok(NodeState::Empty),
            '^' | '∧' => Ok(NodeState::Up),
            'v' | 'V' | '∨' => Ok(NodeState::Down),
            'x' | 'X' | '×' => Ok(NodeState::Cross),
            other => Err(Error::Parse(format!("unknown node symbol `{other}`"))),
        }
    }
}

/// Whether the Sp wall is drawn through the top or bottom row of labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WallSide {
    Above,
    Below,
}

/// Wall positions. Gap `k` sits between node `k` and node `k + 1` (cyclically for GL).
/// For Sp, gap `len - 1` is the right end of the line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Walls {
    Gl { below: usize, above: usize },
    Sp { gap: usize, side: WallSide },
}

/// An arrow diagram together with its wall data.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrowDiagram {
    flavor: Flavor,
    p: u32,
    offset: u32,
    nodes: Vec<NodeState>,
    walls: WallsKey,
}

// Walls without serde attributes so that the diagram can derive Ord.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum WallsKey {
    Gl { below: usize, above: usize },
    Sp { gap: usize, above: bool },
}

impl From<WallsKey> for Walls {
    fn from(w: WallsKey) -> Self {
        match w {
            WallsKey::Gl { below, above } => Walls::Gl { below, above },
            WallsKey::Sp { gap, above } => Walls::Sp {
                gap,
                side: if above { WallSide::Above } else { WallSide::Below },
            },
        }
    }
}

impl From<Walls> for WallsKey {
    fn from(w: Walls) -> Self {
        match w {
            Walls::Gl { below, above } => WallsKey::Gl { below, above },
            Walls::Sp { gap, side } => WallsKey::Sp {
                gap,
                above: side == WallSide::Above,
            },
        }
    }
}

fn modp(x: i64, p: u32) -> u32 {
    x.rem_euclid(i64::from(p)) as u32
}

fn gl_walls(cfg: &GroupConfig, offset: u32) -> WallsKey {
    let p = cfg.p();
    let [s1, s2] = cfg.cutoffs();
    let below_label = cfg.rho(s1) - 1;
    WallsKey::Gl {
        below: modp(below_label - i64::from(offset), p) as usize,
        above: modp(i64::from(s2) - i64::from(offset), p) as usize,
    }
}

fn sp_walls(cfg: &GroupConfig) -> WallsKey {
    let p = cfg.p();
    let half = (p - 1) / 2;
    let r = modp(cfg.rho(cfg.cutoffs()[0]), p);
    if (1..=half).contains(&r) {
        WallsKey::Sp {
            gap: (r - 1) as usize,
            above: false,
        }
    } else if r == half + 1 {
        WallsKey::Sp {
            gap: half as usize,
            above: false,
        }
    } else {
        WallsKey::Sp {
            gap: ((p - r) % p) as usize,
            above: true,
        }
    }
}

/// Node holding label `label` of an Sp diagram and whether it is the bottom label.
fn sp_node_of_label(label: u32, p: u32) -> (usize, bool) {
    let half = (p - 1) / 2;
    if label <= half {
        (label as usize, true)
    } else {
        ((p - label) as usize, false)
    }
}

impl ArrowDiagram {
    fn new(flavor: Flavor, p: u32, offset: u32, nodes: Vec<NodeState>, walls: WallsKey) -> Self {
        ArrowDiagram {
            flavor,
            p,
            offset,
            nodes,
            walls,
        }
    }

    /// A diagram with arbitrary nodes and walls; `p` only fixes the node count convention.
    pub(crate) fn from_parts(flavor: Flavor, p: u32, nodes: Vec<NodeState>, walls: Walls) -> Self {
        ArrowDiagram::new(flavor, p, 0, nodes, walls.into())
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn nodes(&self) -> &[NodeState] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, i: usize) -> NodeState {
        self.nodes[i]
    }

    pub fn walls(&self) -> Walls {
        self.walls.into()
    }

    /// Label of node `i` (for Sp the bottom label; the top label is its negative).
    pub fn label(&self, i: usize) -> u32 {
        match self.flavor {
            Flavor::Gl => (self.offset + i as u32) % self.p,
            Flavor::Sp => i as u32,
        }
    }

    pub fn labels(&self) -> Vec<u32> {
        (0..self.len()).map(|i| self.label(i)).collect()
    }

    /// For Sp diagrams with an arrow on node 0, that arrow.
    pub fn zero_arrow(&self) -> Option<NodeState> {
        (self.flavor == Flavor::Sp && self.nodes[0].is_single()).then_some(self.nodes[0])
    }

    /// GL diagrams are canonical when the below wall closes the circle; Sp always are.
    pub fn is_canonical(&self) -> bool {
        match self.walls {
            WallsKey::Gl { below, .. } => below + 1 == self.len(),
            WallsKey::Sp { .. } => true,
        }
    }

    /// Node ranges of the two sides of the wall, left first. GL diagrams must be canonical.
    pub fn sides(&self) -> Result<[Range<usize>; 2]> {
        let len = self.len();
        match self.walls {
            WallsKey::Gl { above, .. } => {
                if !self.is_canonical() {
                    return Err(Error::Invariant(
                        "sides requested on a GL diagram that is not canonically shifted".into(),
                    ));
                }
                Ok([0..above + 1, above + 1..len])
            }
            WallsKey::Sp { gap, .. } => Ok([0..gap + 1, gap + 1..len]),
        }
    }

    /// Glyph string without walls, e.g. `oo∨o∧`.
    pub fn arrow_string(&self) -> String {
        self.nodes.iter().map(|n| n.glyph()).collect()
    }

    pub fn single_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.is_single()).count()
    }

    /// Parity of the number of single up arrows.
    pub fn up_parity(&self) -> bool {
        self.nodes.iter().filter(|&&n| n == NodeState::Up).count() % 2 == 1
    }

    /// Same walls, labels and placement of singles, crosses and empty nodes.
    pub fn same_skeleton(&self, other: &ArrowDiagram) -> bool {
        self.flavor == other.flavor
            && self.p == other.p
            && self.offset == other.offset
            && self.walls == other.walls
            && self.nodes.len() == other.nodes.len()
            && self
                .nodes
                .iter()
                .zip(&other.nodes)
                .all(|(a, b)| if a.is_single() { b.is_single() } else { a == b })
    }

    pub fn with_node(&self, i: usize, state: NodeState) -> Self {
        let mut out = self.clone();
        out.nodes[i] = state;
        out
    }

    pub(crate) fn set_node(&mut self, i: usize, state: NodeState) {
        self.nodes[i] = state;
    }

    pub(crate) fn swap_nodes(&mut self, i: usize, j: usize) {
        self.nodes.swap(i, j);
    }

    /// Flips every single arrow.
    pub fn flipped(&self) -> Self {
        let mut out = self.clone();
        out.nodes.iter_mut().for_each(|n| *n = n.flipped());
        out
    }

    /// For Sp diagrams with a free zero arrow, flips it if needed so that the
    /// up-arrow parity equals `parity`. Other diagrams are returned unchanged.
    pub fn normalized(&self, parity: bool) -> Self {
        if self.zero_arrow().is_some() && self.up_parity() != parity {
            self.with_node(0, self.nodes[0].flipped())
        } else {
            self.clone()
        }
    }

    fn expected_walls(&self, cfg: &GroupConfig) -> WallsKey {
        match cfg.flavor() {
            Flavor::Gl => gl_walls(cfg, self.offset),
            Flavor::Sp => sp_walls(cfg),
        }
    }

    /// Checks that the diagram has the shape prescribed by `cfg`.
    pub fn check_config(&self, cfg: &GroupConfig) -> Result<()> {
        if self.flavor != cfg.flavor() || self.p != cfg.p() || self.len() != cfg.node_count() {
            return Err(Error::Flavor(format!(
                "diagram ({}, p = {}, {} nodes) does not match the configuration",
                self.flavor,
                self.p,
                self.len()
            )));
        }
        if self.walls != self.expected_walls(cfg) {
            return Err(Error::Config("diagram walls do not match the configuration".into()));
        }
        Ok(())
    }

    /// Rotates a GL diagram so that the below wall sits between the last and first node.
    pub fn shift_canonical(&self) -> Self {
        match self.walls {
            WallsKey::Gl { below, above } => {
                let len = self.len();
                let start = (below + 1) % len;
                let mut nodes = self.nodes.clone();
                nodes.rotate_left(start);
                ArrowDiagram::new(
                    self.flavor,
                    self.p,
                    self.label(start),
                    nodes,
                    WallsKey::Gl {
                        below: len - 1,
                        above: (above + len - start) % len,
                    },
                )
            }
            WallsKey::Sp { .. } => self.clone(),
        }
    }

    /// One line of node symbols with wall markers `|T` and `|B` glued to the
    /// node left of their gap.
    pub fn render_ascii(&self) -> String {
        let tokens: Vec<String> = (0..self.len())
            .map(|i| {
                let mut t = self.nodes[i].ascii().to_string();
                match self.walls {
                    WallsKey::Gl { below, above } => {
                        if above == i {
                            t.push_str("|T");
                        }
                        if below == i {
                            t.push_str("|B");
                        }
                    }
                    WallsKey::Sp { gap, above } => {
                        if gap == i {
                            t.push_str(if above { "|T" } else { "|B" });
                        }
                    }
                }
                t
            })
            .collect();
        tokens.join(" ")
    }

    /// The ascii line followed by a `labels:` line.
    pub fn render_ascii_labeled(&self) -> String {
        let labels: Vec<String> = self.labels().iter().map(u32::to_string).collect();
        format!("{}\nlabels: {}", self.render_ascii(), labels.join(" "))
    }

    /// Inverse of [`render_ascii`](Self::render_ascii) and
    /// [`render_ascii_labeled`](Self::render_ascii_labeled). Without a label
    /// line, GL labels start at 0.
    pub fn parse_ascii(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let body = lines.next().ok_or_else(|| Error::Parse("empty diagram".into()))?;
        let mut nodes = Vec::new();
        let mut top = Vec::new();
        let mut bottom = Vec::new();
        for (i, token) in body.split_whitespace().enumerate() {
            let mut chars = token.chars();
            let symbol = chars.next().ok_or_else(|| Error::Parse("empty token".into()))?;
            nodes.push(NodeState::from_char(symbol)?);
            let rest: String = chars.collect();
            for marker in rest.split('|').filter(|m| !m.is_empty()) {
                match marker {
                    "T" => top.push(i),
                    "B" => bottom.push(i),
                    other => return Err(Error::Parse(format!("unknown wall marker `{other}`"))),
                }
            }
        }
        let offset = match lines.next() {
            Some(line) => {
                let rest = line
                    .strip_prefix("labels:")
                    .ok_or_else(|| Error::Parse(format!("unexpected line `{line}`")))?;
                let labels: Vec<u32> = rest
                    .split_whitespace()
                    .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad label `{t}`"))))
                    .collect::<Result<_>>()?;
                let first = *labels.first().ok_or_else(|| Error::Parse("empty label line".into()))?;
                let p = nodes.len() as u32;
                if labels.len() != nodes.len() || labels.iter().enumerate().any(|(i, &l)| l != (first + i as u32) % p) {
                    return Err(Error::Parse("labels must increase cyclically by one".into()));
                }
                first
            }
            None => 0,
        };
        match (top.as_slice(), bottom.as_slice()) {
            ([above], [below]) => {
                let p = nodes.len() as u32;
                if p < 3 || !crate::weights::is_prime(p) {
                    return Err(Error::Parse(format!(
                        "a GL diagram needs an odd prime number of nodes, got {p}"
                    )));
                }
                Ok(ArrowDiagram::new(
                    Flavor::Gl,
                    p,
                    offset % p,
                    nodes,
                    WallsKey::Gl {
                        below: *below,
                        above: *above,
                    },
                ))
            }
            ([gap], []) | ([], [gap]) => {
                let p = 2 * nodes.len() as u32 - 1;
                if p < 3 || !crate::weights::is_prime(p) {
                    return Err(Error::Parse(format!(
                        "an Sp diagram with {} nodes has no matching prime",
                        nodes.len()
                    )));
                }
                if offset != 0 {
                    return Err(Error::Parse("Sp labels always start at 0".into()));
                }
                if nodes[0] == NodeState::Cross {
                    return Err(Error::Parse("node 0 of an Sp diagram carries a single label".into()));
                }
                Ok(ArrowDiagram::new(
                    Flavor::Sp,
                    p,
                    0,
                    nodes,
                    WallsKey::Sp {
                        gap: *gap,
                        above: !top.is_empty(),
                    },
                ))
            }
            _ => Err(Error::Parse(
                "expected two walls (|T and |B) for GL or one wall for Sp".into(),
            )),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let json = DiagramJson {
            flavor: self.flavor,
            p: self.p,
            nodes: self.nodes.iter().map(|n| n.ascii().to_string()).collect(),
            walls: self.walls.into(),
            zero_arrow: self.zero_arrow().map(|n| n.ascii().to_string()),
            first_label: self.offset,
        };
        serde_json::to_value(json).expect("diagram serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let json: DiagramJson = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let nodes = json
            .nodes
            .iter()
            .map(|s| {
                let mut chars = s.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) => NodeState::from_char(c),
                    _ => Err(Error::Parse(format!("bad node `{s}`"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let expected = match json.flavor {
            Flavor::Gl => json.p as usize,
            Flavor::Sp => (json.p as usize).div_ceil(2),
        };
        if nodes.len() != expected {
            return Err(Error::Parse(format!("expected {expected} nodes, got {}", nodes.len())));
        }
        let walls: WallsKey = json.walls.into();
        let in_range = match walls {
            WallsKey::Gl { below, above } => json.flavor == Flavor::Gl && below < nodes.len() && above < nodes.len(),
            WallsKey::Sp { gap, .. } => json.flavor == Flavor::Sp && gap < nodes.len(),
        };
        if !in_range {
            return Err(Error::Parse("walls do not fit the diagram".into()));
        }
        let mut d = ArrowDiagram::new(json.flavor, json.p, json.first_label % json.p, nodes, walls);
        if let (Some(z), true) = (json.zero_arrow, d.flavor == Flavor::Sp) {
            let mut chars = z.chars();
            if let (Some(c), None) = (chars.next(), chars.next()) {
                let state = NodeState::from_char(c)?;
                if d.nodes[0].is_single() && state.is_single() {
                    d.nodes[0] = state;
                }
            }
        }
        Ok(d)
    }
}

impl fmt::Display for ArrowDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_ascii())
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    flavor: Flavor,
    p: u32,
    nodes: Vec<String>,
    walls: Walls,
    #[serde(rename = "zeroArrow")]
    zero_arrow: Option<String>,
    #[serde(rename = "firstLabel", default, skip_serializing_if = "is_zero")]
    first_label: u32,
}

fn is_zero(x: &u32) -> bool {
    *x == 0
}

fn place(nodes: &mut [NodeState], i: usize, arrow: NodeState, w: &Weight) -> Result<()> {
    nodes[i] = match (nodes[i], arrow) {
        (NodeState::Empty, a) => a,
        (NodeState::Up, NodeState::Down) | (NodeState::Down, NodeState::Up) => NodeState::Cross,
        _ => {
            return Err(Error::Invariant(format!(
                "two arrows of the same kind on one node for {w}"
            )))
        }
    };
    Ok(())
}

/// The arrow diagram of `w`, with node `i` carrying label `i`.
pub fn arrow_diagram(w: &Weight, cfg: &GroupConfig) -> Result<ArrowDiagram> {
    if !in_lambda_s(w, cfg)? {
        return Err(Error::OutsideRange(w.to_string()));
    }
    let p = cfg.p();
    let mut nodes = vec![NodeState::Empty; cfg.node_count()];
    match w {
        Weight::Gl { pos, neg } => {
            let [s1, s2] = cfg.cutoffs();
            for i in 1..=s1 {
                let label = modp(cfg.rho(i) + i64::from(pos.part(i as usize - 1)), p);
                place(&mut nodes, label as usize, NodeState::Up, w)?;
            }
            for i in 1..=s2 {
                let label = modp(i64::from(i) - i64::from(neg.part(i as usize - 1)), p);
                place(&mut nodes, label as usize, NodeState::Down, w)?;
            }
            Ok(ArrowDiagram::new(Flavor::Gl, p, 0, nodes, gl_walls(cfg, 0)))
        }
        Weight::Sp { parts } => {
            for i in 1..=cfg.cutoffs()[0] {
                let label = modp(cfg.rho(i) + i64::from(parts.part(i as usize - 1)), p);
                let (node, bottom) = sp_node_of_label(label, p);
                let arrow = if label == 0 {
                    NodeState::Down
                } else if bottom {
                    NodeState::Up
                } else {
                    NodeState::Down
                };
                place(&mut nodes, node, arrow, w)?;
            }
            Ok(ArrowDiagram::new(Flavor::Sp, p, 0, nodes, sp_walls(cfg)))
        }
    }
}

/// The arrow diagram of `w`, canonically shifted for GL.
pub fn canonical_diagram(w: &Weight, cfg: &GroupConfig) -> Result<ArrowDiagram> {
    Ok(arrow_diagram(w, cfg)?.shift_canonical())
}

pub fn shift_canonical(d: &ArrowDiagram) -> ArrowDiagram {
    d.shift_canonical()
}

pub fn render_ascii(d: &ArrowDiagram) -> String {
    d.render_ascii()
}

pub fn parse_ascii(text: &str) -> Result<ArrowDiagram> {
    ArrowDiagram::parse_ascii(text)
}

/// Recovers the weight whose diagram is `d`.
pub fn weight_of_diagram(d: &ArrowDiagram, cfg: &GroupConfig) -> Result<Weight> {
    d.check_config(cfg)?;
    let p = i64::from(cfg.p());
    let window = |label: i64, low: i64| low + (label - low).rem_euclid(p);
    match cfg.flavor() {
        Flavor::Gl => {
            let [s1, s2] = cfg.cutoffs();
            let low = cfg.rho(s1);
            let top = i64::from(s2);
            let mut ups = Vec::new();
            let mut downs = Vec::new();
            for (i, &n) in d.nodes.iter().enumerate() {
                let label = i64::from(d.label(i));
                if matches!(n, NodeState::Up | NodeState::Cross) {
                    ups.push(window(label, low));
                }
                if matches!(n, NodeState::Down | NodeState::Cross) {
                    downs.push(top - (top - label).rem_euclid(p));
                }
            }
            if ups.len() != s1 as usize || downs.len() != s2 as usize {
                return Err(Error::ArrowCount(format!(
                    "expected {s1} up and {s2} down arrows, found {} and {}",
                    ups.len(),
                    downs.len()
                )));
            }
            ups.sort_unstable_by(|a, b| b.cmp(a));
            downs.sort_unstable();
            let pos = ups
                .iter()
                .enumerate()
                .map(|(i, v)| (v - cfg.rho(i as u32 + 1)) as u32)
                .collect();
            let neg = downs
                .iter()
                .enumerate()
                .map(|(i, w)| (i as i64 + 1 - w) as u32)
                .collect();
            Ok(Weight::Gl {
                pos: Partition::new(pos)?,
                neg: Partition::new(neg)?,
            })
        }
        Flavor::Sp => {
            let s = cfg.cutoffs()[0];
            let low = cfg.rho(s);
            let mut values = Vec::new();
            for (j, &n) in d.nodes.iter().enumerate() {
                let j = j as i64;
                match n {
                    NodeState::Empty => {}
                    _ if j == 0 => {
                        if n == NodeState::Cross {
                            return Err(Error::Invariant("cross on node 0".into()));
                        }
                        values.push(window(0, low));
                    }
                    NodeState::Up => values.push(window(j, low)),
                    NodeState::Down => values.push(window(-j, low)),
                    NodeState::Cross => {
                        values.push(window(j, low));
                        values.push(window(-j, low));
                    }
                }
            }
            if values.len() != s as usize {
                return Err(Error::ArrowCount(format!(
                    "expected {s} labels, found {}",
                    values.len()
                )));
            }
            values.sort_unstable_by(|a, b| b.cmp(a));
            let parts = values
                .iter()
                .enumerate()
                .map(|(i, v)| (v - cfg.rho(i as u32 + 1)) as u32)
                .collect();
            Ok(Weight::Sp {
                parts: Partition::new(parts)?,
            })
        }
    }
}
