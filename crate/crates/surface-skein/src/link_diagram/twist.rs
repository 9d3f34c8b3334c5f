//! Twist regions and twist-reducedness.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{DiagramError, LinkDiagram};
use crate::surface_map::transverse::{self};
use crate::surface_map::MapError;

/// A maximal chain of bigon-connected crossings, or a single crossing in no
/// bigon. `closed` marks a necklace where the chain of bigons closes up.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistRegion {
    /// Crossings in chain order (arbitrary but fixed start for closed
    /// chains).
    pub crossings: Vec<u32>,
    pub closed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistDecomposition {
    pub regions: Vec<TwistRegion>,
}

impl TwistDecomposition {
    pub fn count(&self) -> usize {
        self.regions.len()
    }

    pub fn region_of(&self, crossing: u32) -> usize {
        self.regions
            .iter()
            .position(|r| r.crossings.contains(&crossing))
            .expect("regions cover all crossings")
    }
}

pub fn twist_regions(d: &LinkDiagram) -> TwistDecomposition {
    let map = d.map();
    let nv = map.vertex_count();
    // Bigon faces between two distinct crossings link those crossings.
    let mut adj: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); nv];
    for walk in map.faces() {
        if walk.len() == 2 {
            let (v, w) = (map.vertex_of_slot(walk[0]), map.vertex_of_slot(walk[1]));
            if v != w {
                adj[v as usize].insert(w);
                adj[w as usize].insert(v);
            }
        }
    }
    let mut seen = vec![false; nv];
    let mut regions = Vec::new();
    for start in 0..nv as u32 {
        if seen[start as usize] {
            continue;
        }
        // walk to one end of the chain (or around the cycle)
        let mut tail = start;
        let mut prev = u32::MAX;
        let mut closed = true;
        for _ in 0..=nv {
            let next = adj[tail as usize].iter().copied().find(|&x| x != prev);
            match next {
                Some(x) if x != start => {
                    prev = tail;
                    tail = x;
                }
                Some(_) => break, // returned to start: closed chain
                None => {
                    closed = false;
                    break;
                }
            }
        }
        if adj[start as usize].len() < 2 {
            closed = false;
        }
        let head = if closed { start } else { tail };
        let mut chain = vec![head];
        seen[head as usize] = true;
        let mut prev = u32::MAX;
        let mut cur = head;
        loop {
            let next = adj[cur as usize]
                .iter()
                .copied()
                .find(|&x| x != prev && !seen[x as usize]);
            match next {
                Some(x) => {
                    seen[x as usize] = true;
                    chain.push(x);
                    prev = cur;
                    cur = x;
                }
                None => break,
            }
        }
        regions.push(TwistRegion {
            crossings: chain,
            closed,
        });
    }
    regions.sort_by_key(|r| r.crossings[0]);
    TwistDecomposition { regions }
}

/// Whether the crossing set `w` occupies a consecutive stretch of `region`
/// whose two ends are exactly `c1` and `c2`.
fn consecutive_with_endpoints(region: &TwistRegion, w: &BTreeSet<u32>, c1: u32, c2: u32) -> bool {
    let n = region.crossings.len();
    let pos = |c: u32| region.crossings.iter().position(|&x| x == c);
    let (Some(p1), Some(p2)) = (pos(c1), pos(c2)) else {
        return false;
    };
    if w.len() == n && region.closed {
        return true; // the whole necklace
    }
    if !region.closed {
        let (lo, hi) = (p1.min(p2), p1.max(p2));
        if hi - lo + 1 != w.len() {
            return false;
        }
        (lo..=hi).all(|i| w.contains(&region.crossings[i]))
    } else {
        // circular: one of the two arcs between p1 and p2
        for (from, to) in [(p1, p2), (p2, p1)] {
            let mut arc = BTreeSet::new();
            let mut i = from;
            loop {
                arc.insert(region.crossings[i]);
                if i == to {
                    break;
                }
                i = (i + 1) % n;
            }
            if &arc == w {
                return true;
            }
        }
        false
    }
}

pub fn is_twist_reduced(d: &LinkDiagram) -> Result<bool, DiagramError> {
    if !d.is_alternating() {
        return Err(DiagramError::HypothesesNotMet(
            "twist-reducedness requires an alternating diagram".into(),
        ));
    }
    if d.checkerboard_coloring()?.is_none() {
        return Err(DiagramError::HypothesesNotMet(
            "twist-reducedness requires a checkerboard colorable diagram".into(),
        ));
    }
    let map = d.map();
    let decomp = twist_regions(d);
    let nv = map.vertex_count() as u32;
    for c1 in 0..nv {
        for c2 in c1 + 1..nv {
            for k1 in 0..4u8 {
                for k2 in 0..4u8 {
                    for swap in [false, true] {
                        let Some(curve) = transverse::corner_pair_curve(map, c1, k1, c2, k2, swap)
                        else {
                            continue;
                        };
                        let cut = match transverse::cut_along(map, &curve) {
                            Ok(c) => c,
                            Err(MapError::NonSimpleCycle) => continue,
                            Err(e) => unreachable!("4-point cut failed: {e}"),
                        };
                        if !cut.has_disk_side() {
                            continue; // only disks matter
                        }
                        let region = &decomp.regions[decomp.region_of(c1)];
                        let same_region = region.crossings.contains(&c2);
                        let mut ok = false;
                        if same_region {
                            for side in [cut.sides.0, cut.sides.1] {
                                let mut w: BTreeSet<u32> = cut.components[side]
                                    .interior_vertices
                                    .iter()
                                    .copied()
                                    .collect();
                                w.insert(c1);
                                w.insert(c2);
                                if w.iter().all(|c| region.crossings.contains(c))
                                    && consecutive_with_endpoints(region, &w, c1, c2)
                                {
                                    ok = true;
                                    break;
                                }
                            }
                        }
                        if !ok {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn trefoil_is_one_twist_region() {
        let d = diagram(TREFOIL_S2);
        let t = d.twist_regions();
        assert_eq!(t.count(), 1);
        assert_eq!(t.regions[0].crossings.len(), 3);
        assert!(t.regions[0].closed);
    }

    #[test]
    fn hopf_is_one_twist_region() {
        let d = diagram(HOPF_S2);
        let t = d.twist_regions();
        assert_eq!(t.count(), 1);
        assert_eq!(t.regions[0].crossings.len(), 2);
    }

    #[test]
    fn nontwist4_has_two_regions_and_fails() {
        // A clasp whose two bigons are both broken by pendant curls: the
        // two clasp crossings are separate twist regions, and the 4-point
        // curve around them has no bigon chain on either side.
        let d = diagram(NONTWIST4_S2);
        assert_eq!(d.genus(), 0);
        assert!(d.is_alternating());
        assert_eq!(d.twist_regions().count(), 3);
        assert_eq!(d.is_twist_reduced().unwrap(), false);
    }

    #[test]
    fn trefoil_and_fig8_are_twist_reduced() {
        assert_eq!(diagram(TREFOIL_S2).is_twist_reduced().unwrap(), true);
        assert_eq!(diagram(FIG8_S2).is_twist_reduced().unwrap(), true);
    }
}



