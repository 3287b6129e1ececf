//! Exhaustive enumeration of commutative Lie algebras of dimension at most 3 over GF(2),
//! optionally up to isomorphism.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{consistent_lambdas, BracketTable, SubalgebraKind};
use crate::error::{Error, Result};
use crate::f2la::{BitMatrix, BitVec, Subspace};

pub const MAX_SURVEY_DIM: usize = 3;

/// Symmetric bracket table with vectors stored as bit masks; `code` packs the
/// upper triangle `c[i][j]` (`i ≤ j`) in row-major order, `d` bits each.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct SmallTable {
    d: usize,
    c: [[u8; MAX_SURVEY_DIM]; MAX_SURVEY_DIM],
}

impl SmallTable {
    fn from_code(d: usize, code: u32) -> Self {
        let mut c = [[0u8; MAX_SURVEY_DIM]; MAX_SURVEY_DIM];
        let mut k = 0;
        for i in 0..d {
            for j in i..d {
                let v = ((code >> (k * d)) & ((1 << d) - 1)) as u8;
                c[i][j] = v;
                c[j][i] = v;
                k += 1;
            }
        }
        Self { d, c }
    }

    fn code(&self) -> u32 {
        let mut code = 0u32;
        let mut k = 0;
        for i in 0..self.d {
            for j in i..self.d {
                code |= (self.c[i][j] as u32) << (k * self.d);
                k += 1;
            }
        }
        code
    }

    fn bracket(&self, x: u8, y: u8) -> u8 {
        let mut out = 0;
        for i in 0..self.d {
            if x >> i & 1 == 1 {
                for j in 0..self.d {
                    if y >> j & 1 == 1 {
                        out ^= self.c[i][j];
                    }
                }
            }
        }
        out
    }

    fn jacobi(&self) -> bool {
        let d = self.d;
        (0..d).all(|i| {
            (0..d).all(|j| {
                (0..d).all(|k| {
                    let (x, y, z) = (1u8 << i, 1u8 << j, 1u8 << k);
                    self.bracket(x, self.bracket(y, z))
                        ^ self.bracket(y, self.bracket(z, x))
                        ^ self.bracket(z, self.bracket(x, y))
                        == 0
                })
            })
        })
    }

    /// Table in the basis given by the columns `cols` of an invertible matrix whose
    /// inverse has columns `inv`.
    fn transform(&self, cols: &[u8], inv: &[u8]) -> SmallTable {
        let apply_inv = |v: u8| -> u8 {
            let mut out = 0;
            for (k, &col) in inv.iter().enumerate().take(self.d) {
                if v >> k & 1 == 1 {
                    out ^= col;
                }
            }
            out
        };
        let mut c = [[0u8; MAX_SURVEY_DIM]; MAX_SURVEY_DIM];
        for i in 0..self.d {
            for j in 0..self.d {
                c[i][j] = apply_inv(self.bracket(cols[i], cols[j]));
            }
        }
        SmallTable { d: self.d, c }
    }

    fn to_bracket_table(self) -> BracketTable {
        let d = self.d;
        let mut t = BracketTable::abelian(d);
        for i in 0..d {
            for j in 0..d {
                let v: Vec<bool> = (0..d).map(|k| self.c[i][j] >> k & 1 == 1).collect();
                t.set_bracket(i, j, BitVec::from_bools(&v));
            }
        }
        t
    }
}

/// All of GL(d, 2) as (columns, inverse columns), in a fixed order.
fn general_linear(d: usize) -> Vec<(Vec<u8>, Vec<u8>)> {
    let n = 1u32 << (d * d);
    (0..n)
        .filter_map(|bits| {
            let cols: Vec<u8> = (0..d).map(|j| ((bits >> (j * d)) & ((1 << d) - 1)) as u8).collect();
            let mut m = BitMatrix::zeros(d, d);
            for (j, &c) in cols.iter().enumerate() {
                for i in 0..d {
                    m.set(i, j, c >> i & 1 == 1);
                }
            }
            let inv = m.inverse()?;
            let inv_cols = (0..d)
                .map(|j| (0..d).fold(0u8, |acc, i| acc | (inv.get(i, j) as u8) << i))
                .collect();
            Some((cols, inv_cols))
        })
        .collect()
}

fn check_dim(d: usize) -> Result<()> {
    if d > MAX_SURVEY_DIM {
        return Err(Error::EnumerationBound(d));
    }
    Ok(())
}

/// Codes of all symmetric tables satisfying Jacobi, ascending.
pub fn commutative_lie_codes(d: usize) -> Result<Vec<u32>> {
    check_dim(d)?;
    let total = 1u32 << (d * d * (d + 1) / 2);
    Ok((0..total)
        .into_par_iter()
        .filter(|&code| SmallTable::from_code(d, code).jacobi())
        .collect())
}

pub fn table_from_code(d: usize, code: u32) -> Result<BracketTable> {
    check_dim(d)?;
    Ok(SmallTable::from_code(d, code).to_bracket_table())
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyOrbit {
    /// Smallest code in the orbit; the representative is the table with this code.
    pub canonical_code: u32,
    pub orbit_size: usize,
    #[serde(skip)]
    pub representative: BracketTable,
    pub abelian: bool,
    pub alternating: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyResult {
    pub dim: usize,
    pub candidates: u64,
    pub raw_count: usize,
    pub orbit_count: Option<usize>,
    pub orbits: Vec<SurveyOrbit>,
}

/// Enumerates symmetric bracket tables satisfying Jacobi; with `up_to_iso` also
/// groups them into GL(d, 2)-orbits. Output order is by code, independent of the
/// number of worker threads.
pub fn survey_enumerate(d: usize, up_to_iso: bool) -> Result<SurveyResult> {
    let codes = commutative_lie_codes(d)?;
    let candidates = 1u64 << (d * d * (d + 1) / 2);
    if !up_to_iso {
        return Ok(SurveyResult {
            dim: d,
            candidates,
            raw_count: codes.len(),
            orbit_count: None,
            orbits: Vec::new(),
        });
    }
    let group = general_linear(d);
    let canon: Vec<u32> = codes
        .par_iter()
        .map(|&code| {
            let t = SmallTable::from_code(d, code);
            group.iter().map(|(c, i)| t.transform(c, i).code()).min().expect("GL is nonempty")
        })
        .collect();
    let mut orbits: BTreeMap<u32, usize> = BTreeMap::new();
    for min in canon {
        *orbits.entry(min).or_default() += 1;
    }
    let orbits: Vec<SurveyOrbit> = orbits
        .into_iter()
        .map(|(code, orbit_size)| {
            let representative = SmallTable::from_code(d, code).to_bracket_table();
            let class = representative.classify();
            SurveyOrbit {
                canonical_code: code,
                orbit_size,
                abelian: representative.is_abelian(),
                alternating: class.alternating,
                representative,
            }
        })
        .collect();
    Ok(SurveyResult {
        dim: d,
        candidates,
        raw_count: codes.len(),
        orbit_count: Some(orbits.len()),
        orbits,
    })
}

/// Orbit of `code` under basis change, as a set of codes.
pub fn orbit_codes(d: usize, code: u32) -> Result<BTreeSet<u32>> {
    check_dim(d)?;
    let t = SmallTable::from_code(d, code);
    Ok(general_linear(d).iter().map(|(c, i)| t.transform(c, i).code()).collect())
}

/// Pairs (1-dimensional ideal `span{v}`, weights `lambda`) such that `F_lambda` is a
/// module on which `v` acts by 1.
pub fn ideal_weight_pairs(t: &BracketTable) -> Vec<(Subspace, BitVec)> {
    let d = t.dim();
    let lambdas = consistent_lambdas(t);
    let mut out = Vec::new();
    for bits in 1u32..1 << d {
        let v = BitVec::from_bools(&(0..d).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>());
        let h = Subspace::span(d, std::slice::from_ref(&v));
        if t.is_ideal(&h).ok() != Some(SubalgebraKind::Ideal) {
            continue;
        }
        for l in lambdas.iter().filter(|l| l.dot(&v)) {
            out.push((h.clone(), l.clone()));
        }
    }
    out
}
