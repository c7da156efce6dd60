//! Multiplicity data read off the orbit tables: tilting and injective
//! resolutions, Ext dimensions, `t` polynomials and simple characters.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{build_table, OrbitTable, QPoly};
use crate::weights::{GroupConfig, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ResolutionKind {
    Tilting,
    Injective,
}

/// Terms of a resolution grouped by homological degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Resolution {
    pub kind: ResolutionKind,
    pub subject: Weight,
    pub terms: Vec<Vec<(Weight, u64)>>,
}

impl Resolution {
    /// Highest degree with a nonzero term.
    pub fn length(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    /// Flat `(degree, weight, multiplicity)` rows.
    pub fn rows(&self) -> impl Iterator<Item = (usize, &Weight, u64)> {
        self.terms
            .iter()
            .enumerate()
            .flat_map(|(i, t)| t.iter().map(move |(w, m)| (i, w, *m)))
    }
}

fn coefficient(poly: &QPoly, i: usize, who: &str) -> Result<u64> {
    let c = poly.coeff(i);
    u64::try_from(c).map_err(|_| Error::Invariant(format!("negative coefficient {c} in {who}")))
}

fn assemble(kind: ResolutionKind, subject: &Weight, entries: Vec<(&Weight, &QPoly)>) -> Result<Resolution> {
    let top = entries.iter().filter_map(|(_, f)| f.degree()).max().unwrap_or(0);
    let mut terms = vec![Vec::new(); top + 1];
    for (w, f) in entries {
        for (i, term) in terms.iter_mut().enumerate() {
            let m = coefficient(f, i, &format!("the entry at {w}"))?;
            if m > 0 {
                term.push((w.clone(), m));
            }
        }
    }
    Ok(Resolution {
        kind,
        subject: subject.clone(),
        terms,
    })
}

impl Resolution {
    /// Tilting resolution of the member at position `i`, read from row `i` of `p`.
    pub fn tilting(table: &OrbitTable, i: usize) -> Result<Self> {
        let orbit = table.orbit();
        let entries = (0..table.len()).map(|j| (orbit.weight(j), &table.p()[i][j])).collect();
        assemble(ResolutionKind::Tilting, orbit.weight(i), entries)
    }

    /// Injective resolution of the member at position `j`, read from column `j` of `r`.
    pub fn injective(table: &OrbitTable, j: usize) -> Result<Self> {
        let orbit = table.orbit();
        let entries = (0..table.len()).map(|i| (orbit.weight(i), &table.r()[i][j])).collect();
        assemble(ResolutionKind::Injective, orbit.weight(j), entries)
    }
}

fn table_and_index(lambda: &Weight, cfg: &GroupConfig) -> Result<(OrbitTable, usize)> {
    let table = build_table(lambda, cfg)?;
    let i = table
        .orbit()
        .position(lambda)
        .ok_or_else(|| Error::Invariant(format!("{lambda} missing from its own orbit")))?;
    Ok((table, i))
}

fn pair_indices(table: &OrbitTable, mu: &Weight) -> Result<usize> {
    table.orbit().position(mu).ok_or(Error::NotComparable)
}

pub fn tilting_resolution(lambda: &Weight, cfg: &GroupConfig) -> Result<Resolution> {
    let (table, i) = table_and_index(lambda, cfg)?;
    Resolution::tilting(&table, i)
}

pub fn injective_resolution(mu: &Weight, cfg: &GroupConfig) -> Result<Resolution> {
    let (table, j) = table_and_index(mu, cfg)?;
    Resolution::injective(&table, j)
}

/// Coefficients of `r`, i.e. the Ext dimensions by degree.
pub fn ext_dims(lambda: &Weight, mu: &Weight, cfg: &GroupConfig) -> Result<Vec<u64>> {
    let (table, i) = table_and_index(lambda, cfg)?;
    let j = pair_indices(&table, mu)?;
    let f = &table.r()[i][j];
    (0..f.coeffs().len()).map(|k| coefficient(f, k, "r")).collect()
}

/// `t` for members `i` and `j` of a table.
pub fn t_entry(table: &OrbitTable, i: usize, j: usize) -> QPoly {
    let r = table.r();
    (0..table.len())
        .filter(|&k| !r[i][k].is_zero() && !r[j][k].is_zero())
        .fold(QPoly::zero(), |acc, k| &acc + &(&r[i][k] * &r[j][k]))
}

pub fn t_poly(lambda: &Weight, mu: &Weight, cfg: &GroupConfig) -> Result<QPoly> {
    let (table, i) = table_and_index(lambda, cfg)?;
    let j = pair_indices(&table, mu)?;
    Ok(t_entry(&table, i, j))
}

/// Coefficients of standard characters in a simple character.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterVector(pub Vec<(Weight, i64)>);

impl CharacterVector {
    pub fn get(&self, w: &Weight) -> i64 {
        self.0.iter().find(|(v, _)| v == w).map_or(0, |(_, c)| *c)
    }
}

pub fn character_row(table: &OrbitTable, i: usize) -> CharacterVector {
    let orbit = table.orbit();
    CharacterVector(
        (0..table.len())
            .map(|j| (orbit.weight(j).clone(), table.r()[i][j].eval(-1)))
            .filter(|(_, c)| *c != 0)
            .collect(),
    )
}

pub fn simple_character(lambda: &Weight, cfg: &GroupConfig) -> Result<CharacterVector> {
    let (table, i) = table_and_index(lambda, cfg)?;
    Ok(character_row(&table, i))
}

/// `(d(1), e(1))`.
pub fn classical_mults(lambda: &Weight, mu: &Weight, cfg: &GroupConfig) -> Result<(i64, i64)> {
    let (table, i) = table_and_index(lambda, cfg)?;
    let j = pair_indices(&table, mu)?;
    Ok((table.d()[i][j].eval(1), table.e()[i][j].eval(1)))
}
