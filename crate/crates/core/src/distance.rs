//! Minimum Hamming distance of a code by reduction to the chain-ring case:
//! generator form -> last pair f_r -> canonical form -> leading (x+1)
//! exponent i_0 -> closed-form distance table for <(x+1)^(i_0)> over GR(p,m).
//!
//! The tables are interval logic with an exhaustive tiling assertion at
//! construction time, so a typo in any band boundary trips immediately.

use crate::ambient::CodeKind;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::scalar::Scalar;

/// Which branch of the distance table fired.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableCase {
    /// i = 0: the full ambient, distance 1.
    AtZero,
    /// beta p^(s-1) + 1 <= i <= (beta+1) p^(s-1): distance beta + 2.
    BetaBand { beta: u64 },
    /// p^s - p^(s-k) + (t-1) p^(s-k-1) + 1 <= i <= p^s - p^(s-k) + t p^(s-k-1):
    /// distance (t+1) p^k.
    PowerBand { k: u32, t: u64 },
    /// i = p^s: the zero code, distance 0.
    AtFull,
}

struct Band {
    lo: u64,
    hi: u64,
    value: u64,
    case: TableCase,
}

/// Distance table for the chain ambient `GR(p,m)[x]/(x^(p^s) +- 1)`.
pub struct ChainTable {
    n: u64,
    bands: Vec<Band>,
}

impl ChainTable {
    /// Table for negacyclic codes over GR(p, m), any prime p.
    pub fn negacyclic(p: u64, s: u32) -> Self {
        let n = p.checked_pow(s).expect("p^s must fit in u64");
        let ps1 = n / p;
        let mut bands = vec![Band { lo: 0, hi: 0, value: 1, case: TableCase::AtZero }];
        for beta in 0..=(p - 2) {
            bands.push(Band {
                lo: beta * ps1 + 1,
                hi: (beta + 1) * ps1,
                value: beta + 2,
                case: TableCase::BetaBand { beta },
            });
        }
        for k in 1..s {
            let pk = p.pow(k);
            let psk = n / pk; // p^(s-k)
            let psk1 = psk / p; // p^(s-k-1)
            for t in 1..=(p - 1) {
                bands.push(Band {
                    lo: n - psk + (t - 1) * psk1 + 1,
                    hi: n - psk + t * psk1,
                    value: (t + 1) * pk,
                    case: TableCase::PowerBand { k, t },
                });
            }
        }
        bands.push(Band { lo: n, hi: n, value: 0, case: TableCase::AtFull });
        let table = ChainTable { n, bands };
        table.assert_tiling();
        table
    }

    /// Table for cyclic codes over GR(2, m).
    pub fn cyclic_p2(s: u32) -> Self {
        let n = 2u64.checked_pow(s).expect("2^s must fit in u64");
        let mut bands = vec![Band { lo: 0, hi: 0, value: 1, case: TableCase::AtZero }];
        bands.push(Band { lo: 1, hi: n / 2, value: 2, case: TableCase::BetaBand { beta: 0 } });
        for k in 1..s {
            let step = n >> k; // 2^(s-k)
            bands.push(Band {
                lo: n - step + 1,
                hi: n - step + step / 2,
                value: 2u64.pow(k + 1),
                case: TableCase::PowerBand { k, t: 1 },
            });
        }
        bands.push(Band { lo: n, hi: n, value: 0, case: TableCase::AtFull });
        let table = ChainTable { n, bands };
        table.assert_tiling();
        table
    }

    /// The bands must tile [0, p^s] exactly, once each.
    fn assert_tiling(&self) {
        let mut expected = 0u64;
        for b in &self.bands {
            assert_eq!(b.lo, expected, "distance table bands must be contiguous");
            assert!(b.lo <= b.hi, "empty band");
            expected = b.hi + 1;
        }
        assert_eq!(expected, self.n + 1, "distance table must end at i = p^s");
    }

    pub fn lookup(&self, i: u64) -> Result<(u64, TableCase)> {
        if i > self.n {
            return Err(Error::InvalidParameter(format!(
                "exponent {i} outside [0, {}]",
                self.n
            )));
        }
        let band = self
            .bands
            .iter()
            .find(|b| b.lo <= i && i <= b.hi)
            .expect("tiling covers the range");
        Ok((band.value, band.case))
    }
}

/// `d(<(x+1)^i>)` in `GR(p,m)[x]/(x^(p^s)+1)`.
pub fn chain_distance_negacyclic(p: u64, s: u32, i: u64) -> Result<u64> {
    Ok(ChainTable::negacyclic(p, s).lookup(i)?.0)
}

/// `d(<(x+1)^i>)` in `GR(2,m)[x]/(x^(2^s)-1)`.
pub fn chain_distance_cyclic_p2(s: u32, i: u64) -> Result<u64> {
    Ok(ChainTable::cyclic_p2(s).lookup(i)?.0)
}

/// How a distance was obtained: the last generator pair and its leading
/// (x+1) exponent.
#[derive(Clone, Debug)]
pub struct DistanceRoute<I: Scalar> {
    /// Index r of the last pair (pair count minus one).
    pub r: usize,
    /// Its p-power level j_r.
    pub level: u32,
    /// The monic last generator f_r. For cyclic ambients with odd p this
    /// lives in the conjugate negacyclic ambient.
    pub f_r: crate::ambient::AmbientElement<I>,
    /// Leading canonical exponent i_0 of f_r.
    pub i0: u64,
}

#[derive(Clone, Debug)]
pub struct DistanceResult<I: Scalar> {
    pub distance: u64,
    /// None exactly for the zero ideal.
    pub route: Option<DistanceRoute<I>>,
    pub case: TableCase,
}

impl<I: Scalar> Ideal<I> {
    /// Exact minimum Hamming distance by the table reduction. Zero ideal: 0;
    /// unit ideal: 1; cyclic codes with odd p are conjugated through x -> -x
    /// and resolved in the negacyclic ambient.
    pub fn code_distance(&self) -> Result<DistanceResult<I>> {
        let ambient = self.ambient();
        if self.is_zero() {
            return Ok(DistanceResult { distance: 0, route: None, case: TableCase::AtFull });
        }
        if !ambient.has_xplus1_structure() {
            let gens: Result<Vec<_>> =
                self.generators().iter().map(|g| g.substitute_neg_x()).collect();
            let conj = Ideal::new(ambient.opposite_kind(), gens?)?;
            return conj.code_distance();
        }
        if self.contains(&ambient.one())? {
            return Ok(DistanceResult {
                distance: 1,
                route: Some(DistanceRoute {
                    r: 0,
                    level: 0,
                    f_r: ambient.one(),
                    i0: 0,
                }),
                case: TableCase::AtZero,
            });
        }
        let form = self.groebner_form()?;
        let last = form.last();
        let cf = last.poly.canonical_form()?;
        let lead = cf
            .leading()
            .ok_or_else(|| Error::Internal("monic generator has empty canonical form".into()))?;
        if lead.level != 0 {
            return Err(Error::Internal("monic generator lost its unit layer".into()));
        }
        let i0 = lead.exponent as u64;
        let p = ambient
            .ring()
            .p()
            .to_u64()
            .ok_or_else(|| Error::TooLarge("distance tables need p to fit u64".into()))?;
        let table = match ambient.kind() {
            CodeKind::Negacyclic => ChainTable::negacyclic(p, ambient.s()),
            CodeKind::Cyclic => ChainTable::cyclic_p2(ambient.s()),
        };
        let (distance, case) = table.lookup(i0)?;
        Ok(DistanceResult {
            distance,
            route: Some(DistanceRoute {
                r: form.pairs().len() - 1,
                level: last.level,
                f_r: last.poly.clone(),
                i0,
            }),
            case,
        })
    }
}
