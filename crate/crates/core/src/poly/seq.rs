use std::collections::HashMap;

use crate::capcurl::StrandKind;
use crate::diagram::{canonical_diagram, weight_of_diagram};
use crate::error::{Error, Result};
use crate::order::{leq_slices, Arrow, ArrowSeq};
use crate::weights::{Flavor, GroupConfig, Weight};

use super::table::{invert_at_neg_q, Matrix};
use super::QPoly;

/// Strands of a single sequence read as the left side of a diagram: caps
/// between neighbouring openers and closers, then (Sp only) curls on
/// consecutive free closers from the left.
pub fn seq_strands(eta: &ArrowSeq, flavor: Flavor, co: bool) -> Vec<(StrandKind, usize, usize)> {
    let opener = if co { Arrow::Up } else { Arrow::Down };
    let mut stack = Vec::new();
    let mut free = Vec::new();
    let mut out = Vec::new();
    for (i, &a) in eta.arrows().iter().enumerate() {
        if a == opener {
            stack.push(i);
        } else if let Some(j) = stack.pop() {
            out.push((StrandKind::Cap, j, i));
        } else {
            free.push(i);
        }
    }
    if flavor == Flavor::Sp {
        out.extend(free.chunks_exact(2).map(|c| (StrandKind::Curl, c[0], c[1])));
    }
    out
}

fn orient(strands: &[(StrandKind, usize, usize)], base: &[Arrow], other: &[Arrow]) -> Option<u32> {
    let mut flips = 0;
    for &(kind, l, r) in strands {
        let same = other[l] == other[r];
        if same != (kind == StrandKind::Curl) {
            return None;
        }
        flips += u32::from(other[l] != base[l]);
    }
    Some(flips)
}

fn comparable(xi: &ArrowSeq, eta: &ArrowSeq, flavor: Flavor) -> bool {
    (flavor == Flavor::Sp || xi.up_count() == eta.up_count()) && leq_slices(xi.arrows(), eta.arrows())
}

/// `d` for a pair of sequences.
pub fn seq_d_poly(eta: &ArrowSeq, xi: &ArrowSeq, flavor: Flavor) -> Result<QPoly> {
    if eta.len() != xi.len() {
        return Err(Error::LengthMismatch(eta.len(), xi.len()));
    }
    if !comparable(xi, eta, flavor) {
        return Ok(QPoly::zero());
    }
    let strands = seq_strands(eta, flavor, false);
    Ok(orient(&strands, eta.arrows(), xi.arrows()).map_or_else(QPoly::zero, |k| QPoly::q_pow(k as usize)))
}

/// `e` for a pair of sequences.
pub fn seq_e_poly(eta: &ArrowSeq, xi: &ArrowSeq, flavor: Flavor) -> Result<QPoly> {
    if eta.len() != xi.len() {
        return Err(Error::LengthMismatch(eta.len(), xi.len()));
    }
    if !comparable(xi, eta, flavor) {
        return Ok(QPoly::zero());
    }
    let strands = seq_strands(xi, flavor, true);
    Ok(orient(&strands, xi.arrows(), eta.arrows()).map_or_else(QPoly::zero, |k| QPoly::q_pow(k as usize)))
}

/// A conjugacy class of sequences: fixed length and either a fixed number of
/// up arrows (GL) or a fixed parity of that number (Sp).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeqClass {
    pub flavor: Flavor,
    pub len: usize,
    pub ups: usize,
}

impl SeqClass {
    pub fn of(eta: &ArrowSeq, flavor: Flavor) -> Self {
        let ups = eta.up_count();
        SeqClass {
            flavor,
            len: eta.len(),
            ups: match flavor {
                Flavor::Gl => ups,
                Flavor::Sp => ups % 2,
            },
        }
    }

    pub fn members(&self) -> Vec<ArrowSeq> {
        match self.flavor {
            Flavor::Gl => ArrowSeq::all_with(self.len, Some(self.ups), false),
            Flavor::Sp => ArrowSeq::all_with(self.len, None, self.ups == 1),
        }
    }
}

/// `d`, `e`, `p`, `r` on one conjugacy class of sequences.
#[derive(Debug, Clone)]
pub struct SeqTable {
    class: SeqClass,
    seqs: Vec<ArrowSeq>,
    index: HashMap<ArrowSeq, usize>,
    d: Matrix,
    e: Matrix,
    p: Matrix,
    r: Matrix,
}

impl SeqTable {
    pub fn build(class: SeqClass) -> Result<Self> {
        if class.len > 20 {
            return Err(Error::Budget(1 << 20));
        }
        let mut seqs = class.members();
        seqs.sort_by(|a, b| b.l_total().cmp(&a.l_total()).then_with(|| a.cmp(b)));
        let n = seqs.len();
        let mut d = vec![vec![QPoly::zero(); n]; n];
        let mut e = vec![vec![QPoly::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                d[i][j] = seq_d_poly(&seqs[i], &seqs[j], class.flavor)?;
                e[i][j] = seq_e_poly(&seqs[i], &seqs[j], class.flavor)?;
            }
        }
        let p = invert_at_neg_q(&d)?;
        let r = invert_at_neg_q(&e)?;
        let index = seqs.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        Ok(SeqTable {
            class,
            seqs,
            index,
            d,
            e,
            p,
            r,
        })
    }

    pub fn class(&self) -> SeqClass {
        self.class
    }

    pub fn seqs(&self) -> &[ArrowSeq] {
        &self.seqs
    }

    fn at(&self, m: &Matrix, eta: &ArrowSeq, xi: &ArrowSeq) -> Result<QPoly> {
        let i = self.index.get(eta).ok_or(Error::NotComparable)?;
        let j = self.index.get(xi).ok_or(Error::NotComparable)?;
        Ok(m[*i][*j].clone())
    }

    pub fn d(&self, eta: &ArrowSeq, xi: &ArrowSeq) -> Result<QPoly> {
        self.at(&self.d, eta, xi)
    }

    pub fn e(&self, eta: &ArrowSeq, xi: &ArrowSeq) -> Result<QPoly> {
        self.at(&self.e, eta, xi)
    }

    pub fn p(&self, eta: &ArrowSeq, xi: &ArrowSeq) -> Result<QPoly> {
        self.at(&self.p, eta, xi)
    }

    pub fn r(&self, eta: &ArrowSeq, xi: &ArrowSeq) -> Result<QPoly> {
        self.at(&self.r, eta, xi)
    }

    pub fn p_matrix(&self) -> &Matrix {
        &self.p
    }
}

/// The inverse matrix `p` on the class of `eta`, with its row and column labels.
pub fn seq_p_matrix(class: SeqClass) -> Result<(Vec<ArrowSeq>, Matrix)> {
    let t = SeqTable::build(class)?;
    Ok((t.seqs, t.p))
}

/// Flips every arrow of a sequence.
pub fn dagger_seq(eta: &ArrowSeq) -> ArrowSeq {
    eta.dagger()
}

/// The weight whose diagram has every single arrow flipped. For GL this needs
/// `s1 = s2`.
pub fn dagger_weight(lambda: &Weight, cfg: &GroupConfig) -> Result<Weight> {
    if cfg.flavor() == Flavor::Gl {
        let [s1, s2] = cfg.cutoffs();
        if s1 != s2 {
            return Err(Error::Config(format!(
                "flipping arrows needs s1 = s2, got {s1} and {s2}"
            )));
        }
    }
    weight_of_diagram(&canonical_diagram(lambda, cfg)?.flipped(), cfg)
}
