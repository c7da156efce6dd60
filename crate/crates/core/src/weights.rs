//! Partitions, dominant weights and group configurations.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which family of groups a computation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Gl,
    Sp,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Gl => "gl",
            Flavor::Sp => "sp",
        })
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(Flavor::Gl),
            "sp" => Ok(Flavor::Sp),
            other => Err(Error::Parse(format!("unknown group flavor `{other}`"))),
        }
    }
}

/// A weakly decreasing sequence of positive integers. Trailing zeros are dropped.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidWeight(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    /// First part plus number of parts.
    pub fn hook(&self) -> u64 {
        u64::from(self.first()) + self.len() as u64
    }

    fn parse_body(body: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for token in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (token, "1"),
            };
            let base: u32 = base.parse().map_err(|_| Error::Parse(format!("bad part `{token}`")))?;
            let exp: usize = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{token}`")))?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&body.join(","))
    }
}

/// A dominant weight: a pair of partitions for GL, a single partition for Sp.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "flavor", rename_all = "lowercase")]
pub enum Weight {
    Gl { pos: Partition, neg: Partition },
    Sp { parts: Partition },
}

impl Weight {
    pub fn gl(pos: &[u32], neg: &[u32]) -> Result<Self> {
        Ok(Weight::Gl {
            pos: Partition::new(pos.to_vec())?,
            neg: Partition::new(neg.to_vec())?,
        })
    }

    pub fn sp(parts: &[u32]) -> Result<Self> {
        Ok(Weight::Sp {
            parts: Partition::new(parts.to_vec())?,
        })
    }

    pub fn flavor(&self) -> Flavor {
        match self {
            Weight::Gl { .. } => Flavor::Gl,
            Weight::Sp { .. } => Flavor::Sp,
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Gl { pos, neg } => write!(f, "[{pos}|{neg}]"),
            Weight::Sp { parts } => write!(f, "({parts})"),
        }
    }
}

/// Parses `[a,b,..|c,d,..]` as a GL weight and `(a,b,..)` as an Sp weight.
/// Repeated parts may be written `5^2`.
impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(body) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let (pos, neg) = body
                .split_once('|')
                .ok_or_else(|| Error::Parse(format!("GL weight `{s}` needs a `|` separator")))?;
            Ok(Weight::Gl {
                pos: Partition::parse_body(pos)?,
                neg: Partition::parse_body(neg)?,
            })
        } else if let Some(body) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            Ok(Weight::Sp {
                parts: Partition::parse_body(body)?,
            })
        } else {
            Err(Error::Parse(format!(
                "weight `{s}` must look like [a,b|c,d] or (a,b,c)"
            )))
        }
    }
}

/// Group, characteristic and the cut-off parameters selecting a finite block of weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupConfig {
    flavor: Flavor,
    p: u32,
    rank: u32,
    s: [u32; 2],
}

pub(crate) fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn check_prime(p: u32) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(Error::Config(format!("p = {p} must be an odd prime")));
    }
    Ok(())
}

impl GroupConfig {
    /// GL_n with `s1` positive and `s2` negative rows.
    pub fn gl(p: u32, n: u32, s1: u32, s2: u32) -> Result<Self> {
        check_prime(p)?;
        let cap = n.min(p);
        if !(1..=cap).contains(&s1) || !(1..=cap).contains(&s2) {
            return Err(Error::Config(format!("s1 = {s1}, s2 = {s2} must lie in 1..={cap}")));
        }
        if s1 + s2 > n {
            return Err(Error::Config(format!("s1 + s2 = {} exceeds n = {n}", s1 + s2)));
        }
        Ok(GroupConfig {
            flavor: Flavor::Gl,
            p,
            rank: n,
            s: [s1, s2],
        })
    }

    /// Sp_{2m} with `s` rows.
    pub fn sp(p: u32, m: u32, s: u32) -> Result<Self> {
        check_prime(p)?;
        let cap = m.min(p);
        if !(1..=cap).contains(&s) {
            return Err(Error::Config(format!("s = {s} must lie in 1..={cap}")));
        }
        Ok(GroupConfig {
            flavor: Flavor::Sp,
            p,
            rank: m,
            s: [s, 0],
        })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// `n` for GL, `m` for Sp.
    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// `(s1, s2)` for GL, `(s, 0)` for Sp.
    pub fn cutoffs(&self) -> [u32; 2] {
        self.s
    }

    /// Number of nodes of an arrow diagram.
    pub fn node_count(&self) -> usize {
        match self.flavor {
            Flavor::Gl => self.p as usize,
            Flavor::Sp => (self.p as usize).div_ceil(2),
        }
    }

    /// `rank - i + 1` for 1-based `i`.
    pub fn rho(&self, i: u32) -> i64 {
        i64::from(self.rank) - i64::from(i) + 1
    }

    pub fn rho_vector(&self) -> Vec<i64> {
        (1..=self.rank).map(|i| self.rho(i)).collect()
    }

    /// Checks that the weight has the right flavor and fits the rank.
    pub fn validate(&self, w: &Weight) -> Result<()> {
        match (self.flavor, w) {
            (Flavor::Gl, Weight::Gl { pos, neg }) => {
                if pos.len() + neg.len() > self.rank as usize {
                    return Err(Error::InvalidWeight(format!(
                        "{w} has more than n = {} nonzero entries",
                        self.rank
                    )));
                }
                Ok(())
            }
            (Flavor::Sp, Weight::Sp { parts }) => {
                if parts.len() > self.rank as usize {
                    return Err(Error::InvalidWeight(format!(
                        "{w} has more than m = {} parts",
                        self.rank
                    )));
                }
                Ok(())
            }
            _ => Err(Error::Flavor(format!(
                "weight {w} does not match a {} configuration",
                self.flavor
            ))),
        }
    }
}

/// Membership in the restricted set cut out by the hook bound `first + len <= p`.
pub fn in_lambda_p(w: &Weight, cfg: &GroupConfig) -> Result<bool> {
    cfg.validate(w)?;
    let p = u64::from(cfg.p);
    Ok(match w {
        Weight::Gl { pos, neg } => pos.hook() <= p && neg.hook() <= p,
        Weight::Sp { parts } => parts.hook() <= p,
    })
}

/// Membership in the block of weights handled by the arrow diagrams of `cfg`.
pub fn in_lambda_s(w: &Weight, cfg: &GroupConfig) -> Result<bool> {
    cfg.validate(w)?;
    let fits = |part: &Partition, s: u32| {
        part.len() as u64 <= u64::from(s) && u64::from(s) + u64::from(part.first()) <= u64::from(cfg.p)
    };
    Ok(match w {
        Weight::Gl { pos, neg } => fits(pos, cfg.s[0]) && fits(neg, cfg.s[1]),
        Weight::Sp { parts } => fits(parts, cfg.s[0]),
    })
}

/// All partitions with at most `max_len` parts, each at most `max_part`.
pub fn partitions_in_box(max_part: u32, max_len: u32) -> Vec<Partition> {
    fn go(max_part: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition(cur.clone()));
        if left == 0 {
            return;
        }
        for x in 1..=max_part {
            cur.push(x);
            go(x, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// Every weight of the block, in no particular order.
pub fn lambda_s(cfg: &GroupConfig) -> Vec<Weight> {
    let p = cfg.p;
    match cfg.flavor {
        Flavor::Gl => {
            let [s1, s2] = cfg.s;
            let negs = partitions_in_box(p - s2, s2);
            partitions_in_box(p - s1, s1)
                .into_iter()
                .flat_map(|pos| {
                    negs.iter().map(move |neg| Weight::Gl {
                        pos: pos.clone(),
                        neg: neg.clone(),
                    })
                })
                .collect()
        }
        Flavor::Sp => partitions_in_box(p - cfg.s[0], cfg.s[0])
            .into_iter()
            .map(|parts| Weight::Sp { parts })
            .collect(),
    }
}
