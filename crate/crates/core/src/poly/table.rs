use crate::budget::SearchBudget;
use crate::capcurl::{build_strands, orient_strands, CapCurlDiagram};
use crate::diagram::{canonical_diagram, ArrowDiagram};
use crate::error::{Error, Result};
use crate::order::{diagram_leq, Orbit};
use crate::weights::{GroupConfig, Weight};

use super::QPoly;

/// Square matrix of polynomials indexed by orbit position.
pub type Matrix = Vec<Vec<QPoly>>;

fn monomial_or_zero(flips: Option<u32>) -> QPoly {
    flips.map_or_else(QPoly::zero, |k| QPoly::q_pow(k as usize))
}

/// `d` for two canonical diagrams.
pub fn d_of(lambda: &ArrowDiagram, mu: &ArrowDiagram) -> QPoly {
    if !diagram_leq(mu, lambda) {
        return QPoly::zero();
    }
    let c = CapCurlDiagram::of_diagram(lambda);
    monomial_or_zero(c.orient(mu).ok().and_then(|o| o.flips()))
}

/// `e` for two canonical diagrams.
pub fn e_of(lambda: &ArrowDiagram, mu: &ArrowDiagram) -> QPoly {
    if !diagram_leq(mu, lambda) {
        return QPoly::zero();
    }
    let co = CapCurlDiagram::co_of_diagram(mu);
    monomial_or_zero(co.orient(lambda).ok().and_then(|o| o.flips()))
}

pub fn d_poly(lambda: &Weight, mu: &Weight, cfg: &GroupConfig) -> Result<QPoly> {
    Ok(d_of(&canonical_diagram(lambda, cfg)?, &canonical_diagram(mu, cfg)?))
}

pub fn e_poly(lambda: &Weight, mu: &Weight, cfg: &GroupConfig) -> Result<QPoly> {
    Ok(e_of(&canonical_diagram(lambda, cfg)?, &canonical_diagram(mu, cfg)?))
}

/// Inverse of `m(-q)` for a matrix that is unitriangular with nonzero entries
/// only on or to the right of the diagonal.
pub fn invert_at_neg_q(m: &[Vec<QPoly>]) -> Result<Matrix> {
    let n = m.len();
    let mut cols: Vec<Vec<(usize, QPoly)>> = vec![Vec::new(); n];
    for (k, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Invariant("matrix is not square".into()));
        }
        for (j, entry) in row.iter().enumerate() {
            if j == k {
                if *entry != QPoly::one() {
                    return Err(Error::Invariant(format!("diagonal entry {k} is {entry}, not 1")));
                }
            } else if !entry.is_zero() {
                if j < k {
                    return Err(Error::Invariant(format!(
                        "entry ({k}, {j}) below the diagonal is {entry}"
                    )));
                }
                cols[j].push((k, entry.neg_q()));
            }
        }
    }
    let mut inv = vec![vec![QPoly::zero(); n]; n];
    for (i, row) in inv.iter_mut().enumerate() {
        row[i] = QPoly::one();
        for j in i + 1..n {
            let mut acc = QPoly::zero();
            for (k, c) in &cols[j] {
                if *k >= i && !row[*k].is_zero() {
                    acc -= &(&row[*k] * c);
                }
            }
            row[j] = acc;
        }
    }
    Ok(inv)
}

/// Which of the four polynomial families to read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    D,
    E,
    P,
    R,
}

/// `d`, `e` and their inverses `p`, `r` on one orbit.
#[derive(Debug, Clone)]
pub struct OrbitTable {
    orbit: Orbit,
    d: Matrix,
    e: Matrix,
    p: Matrix,
    r: Matrix,
}

impl OrbitTable {
    pub fn build(orbit: Orbit) -> Result<Self> {
        let n = orbit.len();
        let caps: Vec<_> = orbit.diagrams().iter().map(|m| build_strands(m, false)).collect();
        let cocaps: Vec<_> = orbit.diagrams().iter().map(|m| build_strands(m, true)).collect();
        let mut d = vec![vec![QPoly::zero(); n]; n];
        let mut e = vec![vec![QPoly::zero(); n]; n];
        for i in 0..n {
            let lam = orbit.diagram(i);
            for j in 0..n {
                if !orbit.leq(j, i) {
                    continue;
                }
                let mu = orbit.diagram(j);
                d[i][j] = monomial_or_zero(orient_strands(&caps[i], lam, mu).flips());
                e[i][j] = monomial_or_zero(orient_strands(&cocaps[j], mu, lam).flips());
            }
        }
        let p = invert_at_neg_q(&d)?;
        let r = invert_at_neg_q(&e)?;
        Ok(OrbitTable { orbit, d, e, p, r })
    }

    pub fn orbit(&self) -> &Orbit {
        &self.orbit
    }

    pub fn len(&self) -> usize {
        self.orbit.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbit.is_empty()
    }

    pub fn d(&self) -> &Matrix {
        &self.d
    }

    pub fn e(&self) -> &Matrix {
        &self.e
    }

    pub fn p(&self) -> &Matrix {
        &self.p
    }

    pub fn r(&self) -> &Matrix {
        &self.r
    }

    fn index(&self, w: &Weight) -> Result<usize> {
        self.orbit
            .position(w)
            .ok_or_else(|| Error::InvalidWeight(format!("{w} is not in this orbit")))
    }

    pub fn matrix(&self, family: Family) -> &Matrix {
        match family {
            Family::D => &self.d,
            Family::E => &self.e,
            Family::P => &self.p,
            Family::R => &self.r,
        }
    }

    /// Looks up an entry of one of the matrices by weights.
    pub fn get(&self, family: Family, lambda: &Weight, mu: &Weight) -> Result<&QPoly> {
        Ok(&self.matrix(family)[self.index(lambda)?][self.index(mu)?])
    }
}

/// The table of the orbit of `lambda`.
pub fn build_table(lambda: &Weight, cfg: &GroupConfig) -> Result<OrbitTable> {
    OrbitTable::build(Orbit::of(lambda, cfg, &SearchBudget::from_env())?)
}

fn lookup(lambda: &Weight, mu: &Weight, cfg: &GroupConfig, family: Family) -> Result<QPoly> {
    let table = build_table(lambda, cfg)?;
    match table.orbit().position(mu) {
        Some(j) => Ok(table.matrix(family)[table.index(lambda)?][j].clone()),
        None => {
            canonical_diagram(mu, cfg)?;
            Ok(QPoly::zero())
        }
    }
}

/// `p` by inverting the `d` matrix of the orbit.
pub fn p_poly(lambda: &Weight, mu: &Weight, cfg: &GroupConfig) -> Result<QPoly> {
    lookup(lambda, mu, cfg, Family::P)
}

/// `r` by inverting the `e` matrix of the orbit.
pub fn r_poly(lambda: &Weight, mu: &Weight, cfg: &GroupConfig) -> Result<QPoly> {
    lookup(lambda, mu, cfg, Family::R)
}
