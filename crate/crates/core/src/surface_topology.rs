//! Topology of a disk with crosscaps and bands glued along boundary
//! intervals: Euler characteristic, boundary circles, orientability, genus.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::surface_model::{GenusParameter, LabelSequence};

/// A band glued to two boundary intervals of the disk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Band {
    /// 0-based interval indices, `first < second`.
    pub first: usize,
    pub second: usize,
    pub twisted: bool,
}

/// Disk with `crosscaps` crosscaps in its interior and bands attached along
/// disjoint boundary intervals.
///
/// Interval `p` has endpoint slots `2p` (start) and `2p + 1` (end) in the
/// boundary orientation, so there are `2 × intervals` slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandSurface {
    k: Option<GenusParameter>,
    intervals: usize,
    bands: Vec<Band>,
    crosscaps: u32,
}

impl BandSurface {
    /// Builds a surface from the cyclic interval labels: the two intervals
    /// sharing a label are joined by one band.
    pub fn from_labels(labels: &[usize], twisted: bool, crosscaps: u32) -> Result<Self> {
        let mut bands: Vec<Band> = Vec::new();
        let mut open: std::collections::BTreeMap<usize, usize> = Default::default();
        for (p, &label) in labels.iter().enumerate() {
            match open.remove(&label) {
                Some(first) => bands.push(Band {
                    first,
                    second: p,
                    twisted,
                }),
                None => {
                    if bands.iter().any(|b| labels[b.first] == label) {
                        return Err(Error::MalformedBands(format!(
                            "label {label} used more than twice"
                        )));
                    }
                    open.insert(label, p);
                }
            }
        }
        if let Some((label, _)) = open.into_iter().next() {
            return Err(Error::MalformedBands(format!("label {label} used once")));
        }
        Self::new(labels.len(), bands, crosscaps)
    }

    pub fn new(intervals: usize, bands: Vec<Band>, crosscaps: u32) -> Result<Self> {
        let mut used = vec![false; intervals];
        for b in &bands {
            for p in [b.first, b.second] {
                if p >= intervals {
                    return Err(Error::MalformedBands(format!("interval {p} out of range")));
                }
                if used[p] {
                    return Err(Error::MalformedBands(format!("interval {p} used twice")));
                }
                used[p] = true;
            }
        }
        if let Some(p) = used.iter().position(|u| !u) {
            return Err(Error::MalformedBands(format!("interval {p} unmatched")));
        }
        Ok(BandSurface {
            k: None,
            intervals,
            bands,
            crosscaps,
        })
    }

    pub fn k(&self) -> Option<GenusParameter> {
        self.k
    }

    pub fn intervals(&self) -> usize {
        self.intervals
    }

    pub fn bands(&self) -> &[Band] {
        &self.bands
    }

    pub fn crosscaps(&self) -> u32 {
        self.crosscaps
    }

    /// Gap involution on endpoint slots: the end of each interval is joined
    /// to the start of the next along the disk boundary.
    fn gap_partner(&self, slot: usize) -> usize {
        let m = self.intervals;
        let p = slot / 2;
        if slot % 2 == 1 {
            2 * ((p + 1) % m)
        } else {
            2 * ((p + m - 1) % m) + 1
        }
    }

    /// Band side-edge involution on endpoint slots.
    ///
    /// A half-twisted band joins start to start and end to end; an untwisted
    /// one joins start to end.
    fn band_partners(&self) -> Vec<usize> {
        let mut partner = vec![usize::MAX; 2 * self.intervals];
        for b in &self.bands {
            let (s1, e1, s2, e2) = (2 * b.first, 2 * b.first + 1, 2 * b.second, 2 * b.second + 1);
            let pairs = if b.twisted {
                [(s1, s2), (e1, e2)]
            } else {
                [(s1, e2), (e1, s2)]
            };
            for (x, y) in pairs {
                partner[x] = y;
                partner[y] = x;
            }
        }
        partner
    }
}

/// Band surface of `Σ_{2k,k}`: one crosscap and `2k` half-twisted bands.
pub fn band_surface(p: GenusParameter, seq: &LabelSequence) -> BandSurface {
    let mut surface =
        BandSurface::from_labels(seq.entries(), true, 1).expect("label word pairs every interval");
    surface.k = Some(p);
    surface
}

/// `χ = χ(disk with crosscaps) - #bands`.
pub fn euler_characteristic(bs: &BandSurface) -> i64 {
    1 - bs.crosscaps as i64 - bs.bands.len() as i64
}

/// Number of boundary circles.
pub fn boundary_components(bs: &BandSurface) -> Result<usize> {
    if bs.intervals == 0 {
        return Ok(1);
    }
    Ok(boundary_cycles(bs)?.len())
}

/// Boundary circles as cyclic lists of endpoint slots.
///
/// Each endpoint slot lies on exactly one gap arc and one band side, so the
/// boundary is a disjoint union of cycles alternating the two involutions.
pub fn boundary_cycles(bs: &BandSurface) -> Result<Vec<Vec<usize>>> {
    let partner = bs.band_partners();
    if let Some(slot) = partner.iter().position(|&x| x == usize::MAX) {
        return Err(Error::MalformedBands(format!(
            "endpoint slot {slot} unmatched"
        )));
    }
    let mut visited = vec![false; partner.len()];
    let mut cycles = Vec::new();
    for start in 0..partner.len() {
        if visited[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut slot = start;
        loop {
            let across = partner[slot];
            for s in [slot, across] {
                visited[s] = true;
                cycle.push(s);
            }
            slot = bs.gap_partner(across);
            if slot == start {
                break;
            }
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopologyReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<GenusParameter>,
    #[serde(rename = "euler")]
    pub euler_characteristic: i64,
    #[serde(rename = "boundary")]
    pub boundary_components: usize,
    pub orientable: bool,
    pub genus: usize,
}

impl TopologyReport {
    /// `χ = 2 - g - b` for nonorientable, `χ = 2 - 2g - b` for orientable.
    pub fn is_consistent(&self) -> bool {
        let handles = if self.orientable { 2 } else { 1 };
        self.euler_characteristic
            == 2 - handles * self.genus as i64 - self.boundary_components as i64
    }
}

pub fn topology_report(bs: &BandSurface) -> Result<TopologyReport> {
    let euler = euler_characteristic(bs);
    let boundary = boundary_components(bs)?;
    let orientable = bs.crosscaps == 0 && bs.bands.iter().all(|b| !b.twisted);
    let deficit = 2 - euler - boundary as i64;
    let genus = if orientable { deficit / 2 } else { deficit };
    Ok(TopologyReport {
        k: bs.k,
        euler_characteristic: euler,
        boundary_components: boundary,
        orientable,
        genus: genus as usize,
    })
}
