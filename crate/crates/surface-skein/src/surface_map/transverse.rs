//! Simple closed curves meeting the embedded graph transversely.
//!
//! A transverse curve is encoded combinatorially: crossing points in edge
//! interiors, joined cyclically by chords each of which lies inside a single
//! face and attaches to specific side occurrences of the edges it connects.
//! Since all faces are disks, a chord between two named boundary segments is
//! unique up to isotopy, so this data determines the curve up to isotopy
//! relative to the graph. Cutting builds an overlay cell complex (crossings,
//! points, edge segments, chords, face pieces) and hands it to the generic
//! cut engine.

use std::collections::BTreeMap;

use super::complex::{Complex, LinkItem};
use super::{CombinatorialMap, CutResult, EdgeId, MapError, Slot};

/// Position of a curve point along its edge, ordered from the lower slot end
/// toward the higher slot end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Anchor {
    NearLowSlot,
    Middle(u32),
    NearHighSlot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointOnEdge {
    pub edge: EdgeId,
    pub anchor: Anchor,
}

/// A chord inside one face, attaching two curve points on named edge sides.
/// A side is named by the slot occurrence of the edge lying in that face.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Chord {
    pub from_point: u32,
    pub from_side: Slot,
    pub to_point: u32,
    pub to_side: Slot,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransverseCurve {
    pub points: Vec<PointOnEdge>,
    /// Cyclic: chord `i` runs from `points[chords[i].from_point]` to
    /// `points[chords[i].to_point]`, and consecutive chords share a point.
    pub chords: Vec<Chord>,
}

impl TransverseCurve {
    /// Number of intersections with the graph.
    pub fn crossing_count(&self) -> usize {
        self.points.len()
    }
}

/// Every isotopy class of simple closed curve meeting the graph exactly once.
pub fn one_point_curves(map: &CombinatorialMap) -> Vec<TransverseCurve> {
    let mut out = Vec::new();
    for e in 0..map.edge_count() as EdgeId {
        let (lo, hi) = map.edge_slots(e);
        if map.face_of_slot(lo) == map.face_of_slot(hi) {
            out.push(TransverseCurve {
                points: vec![PointOnEdge {
                    edge: e,
                    anchor: Anchor::Middle(0),
                }],
                chords: vec![Chord {
                    from_point: 0,
                    from_side: lo,
                    to_point: 0,
                    to_side: hi,
                }],
            });
        }
    }
    out
}

/// Every isotopy class of simple closed curve meeting the graph exactly
/// twice: two edges (possibly equal) with the connecting arcs each inside a
/// single face. With all regions disks this enumeration is complete.
pub fn two_point_curves(map: &CombinatorialMap) -> Vec<TransverseCurve> {
    let mut out = Vec::new();
    let ne = map.edge_count() as EdgeId;
    for e1 in 0..ne {
        let (lo1, hi1) = map.edge_slots(e1);
        // Same edge, crossing twice and turning back on each side.
        out.push(TransverseCurve {
            points: vec![
                PointOnEdge { edge: e1, anchor: Anchor::Middle(0) },
                PointOnEdge { edge: e1, anchor: Anchor::Middle(1) },
            ],
            chords: vec![
                Chord { from_point: 0, from_side: lo1, to_point: 1, to_side: lo1 },
                Chord { from_point: 1, from_side: hi1, to_point: 0, to_side: hi1 },
            ],
        });
        // Same edge, crossing twice in the same direction (needs both sides
        // of the edge on one face).
        if map.face_of_slot(lo1) == map.face_of_slot(hi1) {
            out.push(TransverseCurve {
                points: vec![
                    PointOnEdge { edge: e1, anchor: Anchor::Middle(0) },
                    PointOnEdge { edge: e1, anchor: Anchor::Middle(1) },
                ],
                chords: vec![
                    Chord { from_point: 0, from_side: lo1, to_point: 1, to_side: hi1 },
                    Chord { from_point: 1, from_side: lo1, to_point: 0, to_side: hi1 },
                ],
            });
        }
        for e2 in e1 + 1..ne {
            let (lo2, hi2) = map.edge_slots(e2);
            for (s2, t2) in [(lo2, hi2), (hi2, lo2)] {
                if map.face_of_slot(lo1) == map.face_of_slot(s2)
                    && map.face_of_slot(hi1) == map.face_of_slot(t2)
                {
                    out.push(TransverseCurve {
                        points: vec![
                            PointOnEdge { edge: e1, anchor: Anchor::Middle(0) },
                            PointOnEdge { edge: e2, anchor: Anchor::Middle(0) },
                        ],
                        chords: vec![
                            Chord { from_point: 0, from_side: lo1, to_point: 1, to_side: s2 },
                            Chord { from_point: 1, from_side: t2, to_point: 0, to_side: hi1 },
                        ],
                    });
                }
            }
        }
    }
    out
}

/// A curve meeting the graph four times, twice in the quadrant of corner
/// `(k1, k1+1)` at `v1` and twice in the quadrant of `(k2, k2+1)` at `v2`,
/// with single-face connector arcs. `swap` selects which pair of outer ends
/// the connectors join. Returns `None` when the face conditions fail.
pub fn corner_pair_curve(
    map: &CombinatorialMap,
    v1: u32,
    k1: u8,
    v2: u32,
    k2: u8,
    swap: bool,
) -> Option<TransverseCurve> {
    if v1 == v2 {
        return None;
    }
    let fo = |v: u32, i: u8| map.face_of_corner(v, i % 4);
    // Outer faces of the four points.
    let fa = fo(v1, (k1 + 3) % 4);
    let fb = fo(v1, k1 + 1);
    let fc = fo(v2, (k2 + 3) % 4);
    let fd = fo(v2, k2 + 1);
    let ok = if !swap { fb == fc && fd == fa } else { fb == fd && fc == fa };
    if !ok {
        return None;
    }

    let slot_a = map.slot(v1, k1);
    let slot_b = map.slot(v1, (k1 + 1) % 4);
    let slot_c = map.slot(v2, k2);
    let slot_d = map.slot(v2, (k2 + 1) % 4);
    let anchor_for = |slot: Slot| -> Anchor {
        let (lo, _hi) = map.edge_slots(map.edge_of_slot(slot));
        if slot == lo {
            Anchor::NearLowSlot
        } else {
            Anchor::NearHighSlot
        }
    };
    let points = vec![
        PointOnEdge { edge: map.edge_of_slot(slot_a), anchor: anchor_for(slot_a) },
        PointOnEdge { edge: map.edge_of_slot(slot_b), anchor: anchor_for(slot_b) },
        PointOnEdge { edge: map.edge_of_slot(slot_c), anchor: anchor_for(slot_c) },
        PointOnEdge { edge: map.edge_of_slot(slot_d), anchor: anchor_for(slot_d) },
    ];
    // Two points may share an edge only at opposite anchors.
    for i in 0..4 {
        for j in i + 1..4 {
            if points[i].edge == points[j].edge && points[i].anchor == points[j].anchor {
                return None;
            }
        }
    }
    // Passage chords hug the chosen corners; connectors use the outer sides.
    let passage1 = Chord {
        from_point: 0,
        from_side: map.alpha(slot_a),
        to_point: 1,
        to_side: slot_b,
    };
    let passage2 = Chord {
        from_point: 2,
        from_side: map.alpha(slot_c),
        to_point: 3,
        to_side: slot_d,
    };
    let chords = if !swap {
        vec![
            passage1,
            Chord { from_point: 1, from_side: map.alpha(slot_b), to_point: 2, to_side: slot_c },
            passage2,
            Chord { from_point: 3, from_side: map.alpha(slot_d), to_point: 0, to_side: slot_a },
        ]
    } else {
        // passage2 traversed backward: d -> c
        vec![
            passage1,
            Chord { from_point: 1, from_side: map.alpha(slot_b), to_point: 3, to_side: map.alpha(slot_d) },
            Chord { from_point: 3, from_side: slot_d, to_point: 2, to_side: map.alpha(slot_c) },
            Chord { from_point: 2, from_side: slot_c, to_point: 0, to_side: slot_a },
        ]
    };
    Some(TransverseCurve { points, chords })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Event {
    Seg(u32, u8),
    ChordEnd(u32, u8),
    Corner(u32, u8),
}

/// Cuts the surface along a transverse curve. Fails with `NonSimpleCycle`
/// when the data does not describe an embedded circle (chords crossing
/// inside a face, malformed incidence).
pub fn cut_along(map: &CombinatorialMap, curve: &TransverseCurve) -> Result<CutResult, MapError> {
    let np = curve.points.len();
    if np == 0 || curve.chords.len() != np {
        return Err(MapError::NonSimpleCycle);
    }
    // Each point is met by exactly two chord ends, one per side of its edge.
    let mut side_use: Vec<BTreeMap<Slot, (u32, u8)>> = vec![BTreeMap::new(); np];
    for (ci, ch) in curve.chords.iter().enumerate() {
        for (pt, side, end) in [
            (ch.from_point, ch.from_side, 0u8),
            (ch.to_point, ch.to_side, 1u8),
        ] {
            let p = curve.points.get(pt as usize).ok_or(MapError::NonSimpleCycle)?;
            let (lo, hi) = map.edge_slots(p.edge);
            if side != lo && side != hi {
                return Err(MapError::NonSimpleCycle);
            }
            if side_use[pt as usize].insert(side, (ci as u32, end)).is_some() {
                return Err(MapError::NonSimpleCycle);
            }
        }
        if map.face_of_slot(ch.from_side) != map.face_of_slot(ch.to_side) {
            return Err(MapError::NonSimpleCycle);
        }
    }
    for (pt, uses) in side_use.iter().enumerate() {
        if uses.len() != 2 {
            return Err(MapError::NonSimpleCycle);
        }
        let (lo, hi) = map.edge_slots(curve.points[pt].edge);
        if !(uses.contains_key(&lo) && uses.contains_key(&hi)) {
            return Err(MapError::NonSimpleCycle);
        }
    }

    // Points per edge in anchor order; duplicate anchors are non-simple.
    let ne = map.edge_count();
    let mut points_on_edge: Vec<Vec<u32>> = vec![Vec::new(); ne];
    for (i, p) in curve.points.iter().enumerate() {
        points_on_edge[p.edge as usize].push(i as u32);
    }
    for pts in points_on_edge.iter_mut() {
        pts.sort_by_key(|&i| curve.points[i as usize].anchor);
        for w in pts.windows(2) {
            if curve.points[w[0] as usize].anchor == curve.points[w[1] as usize].anchor {
                return Err(MapError::NonSimpleCycle);
            }
        }
    }

    // Cell numbering.
    let nv = map.vertex_count();
    let n0 = nv + np;
    let point_cell = |i: u32| -> u32 { (nv as u32) + i };
    let mut seg_base = vec![0u32; ne + 1];
    for e in 0..ne {
        seg_base[e + 1] = seg_base[e] + points_on_edge[e].len() as u32 + 1;
    }
    let n_segs = seg_base[ne];
    let chord_cell = |c: u32| -> u32 { n_segs + c };
    let n1 = n_segs as usize + np;

    let mut edge_ends = vec![[0u32; 2]; n1];
    for e in 0..ne {
        let (lo, hi) = map.edge_slots(e as EdgeId);
        let pts = &points_on_edge[e];
        let mut prev = map.vertex_of_slot(lo);
        for (k, &pt) in pts.iter().enumerate() {
            edge_ends[(seg_base[e] + k as u32) as usize] = [prev, point_cell(pt)];
            prev = point_cell(pt);
        }
        edge_ends[(seg_base[e] + pts.len() as u32) as usize] = [prev, map.vertex_of_slot(hi)];
    }
    for (ci, ch) in curve.chords.iter().enumerate() {
        edge_ends[chord_cell(ci as u32) as usize] =
            [point_cell(ch.from_point), point_cell(ch.to_point)];
    }

    // Face boundary event circles.
    let mut face_events: Vec<Vec<Event>> = Vec::with_capacity(map.face_count());
    for walk in map.faces() {
        let mut events = Vec::new();
        for &d in walk {
            let e = map.edge_of_slot(d);
            let (lo, _hi) = map.edge_slots(e);
            let pts = &points_on_edge[e as usize];
            let k = pts.len();
            if d == lo {
                // traversal lo -> hi: segments 0..k, ascending points
                for i in 0..k {
                    events.push(Event::Seg(seg_base[e as usize] + i as u32, 0));
                    let (chord, end) = side_use[pts[i] as usize][&d];
                    events.push(Event::ChordEnd(chord, end));
                }
                events.push(Event::Seg(seg_base[e as usize] + k as u32, 0));
            } else {
                for i in (0..k).rev() {
                    events.push(Event::Seg(seg_base[e as usize] + i as u32 + 1, 1));
                    let (chord, end) = side_use[pts[i] as usize][&d];
                    events.push(Event::ChordEnd(chord, end));
                }
                events.push(Event::Seg(seg_base[e as usize], 1));
            }
            let far = map.alpha(d);
            events.push(Event::Corner(map.vertex_of_slot(far), map.pos_of_slot(far)));
        }
        face_events.push(events);
    }

    // Split each face into chord-diagram pieces.
    let mut piece_of_corner: BTreeMap<(u32, u8), u32> = BTreeMap::new();
    // chord end -> (piece before, piece after) in walk order
    let mut flank_of_chord_end: BTreeMap<(u32, u8), (u32, u32)> = BTreeMap::new();
    let mut n_pieces = 0u32;
    for events in &face_events {
        let end_positions: Vec<usize> = events
            .iter()
            .enumerate()
            .filter(|(_, ev)| matches!(ev, Event::ChordEnd(..)))
            .map(|(i, _)| i)
            .collect();
        let m = end_positions.len();
        if m == 0 {
            let piece = n_pieces;
            n_pieces += 1;
            for ev in events {
                if let Event::Corner(v, i) = ev {
                    piece_of_corner.insert((*v, *i), piece);
                }
            }
            continue;
        }
        // interval k spans (end_positions[k], end_positions[k+1]) circularly.
        let mut parent: Vec<u32> = (0..m as u32).collect();
        fn find(parent: &mut [u32], x: u32) -> u32 {
            let mut r = x;
            while parent[r as usize] != r {
                r = parent[r as usize];
            }
            let mut c = x;
            while parent[c as usize] != r {
                let nx = parent[c as usize];
                parent[c as usize] = r;
                c = nx;
            }
            r
        }
        // chord -> its two interval indices (position among end_positions)
        let mut ends_of_chord: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (k, &pos) in end_positions.iter().enumerate() {
            if let Event::ChordEnd(c, _) = events[pos] {
                ends_of_chord.entry(c).or_default().push(k);
            }
        }
        let chord_list: Vec<(usize, usize)> = ends_of_chord
            .values()
            .map(|v| {
                debug_assert_eq!(v.len(), 2, "chord ends lie in one face");
                (v[0], v[1])
            })
            .collect();
        // non-crossing check
        for (a, &(i, j)) in chord_list.iter().enumerate() {
            for &(k, l) in &chord_list[a + 1..] {
                let inside = |x: usize| -> bool { i < x && x < j };
                if inside(k) != inside(l) {
                    return Err(MapError::NonSimpleCycle);
                }
            }
        }
        for &(i, j) in &chord_list {
            let before = |x: usize| -> u32 { ((x + m - 1) % m) as u32 };
            let ra = find(&mut parent, i as u32);
            let rb = find(&mut parent, before(j));
            parent[rb as usize] = ra;
            let rc = find(&mut parent, j as u32);
            let rd = find(&mut parent, before(i));
            parent[rd as usize] = rc;
        }
        // assign global piece ids per interval class
        let mut global: BTreeMap<u32, u32> = BTreeMap::new();
        let mut piece_of_interval = vec![0u32; m];
        for k in 0..m {
            let r = find(&mut parent, k as u32);
            let id = *global.entry(r).or_insert_with(|| {
                let id = n_pieces;
                n_pieces += 1;
                id
            });
            piece_of_interval[k] = id;
        }
        // locate corners and flanks
        let interval_of_pos = |pos: usize| -> u32 {
            // largest end position <= pos, circularly
            match end_positions.binary_search(&pos) {
                Ok(_) => unreachable!("corner at a chord end"),
                Err(ins) => {
                    let k = if ins == 0 { m - 1 } else { ins - 1 };
                    piece_of_interval[k]
                }
            }
        };
        for (pos, ev) in events.iter().enumerate() {
            if let Event::Corner(v, i) = ev {
                piece_of_corner.insert((*v, *i), interval_of_pos(pos));
            }
        }
        for (k, &pos) in end_positions.iter().enumerate() {
            if let Event::ChordEnd(c, end) = events[pos] {
                let after = piece_of_interval[k];
                let before = piece_of_interval[(k + m - 1) % m];
                flank_of_chord_end.insert((c, end), (before, after));
            }
        }
    }

    // Links.
    let mut links: Vec<Vec<LinkItem>> = vec![Vec::new(); n0];
    for v in 0..nv as u32 {
        let mut link = Vec::with_capacity(4);
        for i in 0..4u8 {
            let s = map.slot(v, i);
            let e = map.edge_of_slot(s);
            let (lo, _hi) = map.edge_slots(e);
            let pts = points_on_edge[e as usize].len() as u32;
            let he = if s == lo {
                (seg_base[e as usize], 0u8)
            } else {
                (seg_base[e as usize] + pts, 1u8)
            };
            link.push(LinkItem {
                half_edge: he,
                corner: piece_of_corner[&(v, i)],
            });
        }
        links[v as usize] = link;
    }
    for (i, p) in curve.points.iter().enumerate() {
        let e = p.edge;
        let (lo, hi) = map.edge_slots(e);
        let idx = points_on_edge[e as usize]
            .iter()
            .position(|&q| q == i as u32)
            .unwrap() as u32;
        let seg_south = (seg_base[e as usize] + idx, 1u8);
        let seg_north = (seg_base[e as usize] + idx + 1, 0u8);
        let (chord_w, end_w) = side_use[i][&hi];
        let (chord_e, end_e) = side_use[i][&lo];
        let (nw, sw) = flank_of_chord_end[&(chord_w, end_w)];
        let (se, ne_piece) = flank_of_chord_end[&(chord_e, end_e)];
        links[point_cell(i as u32) as usize] = vec![
            LinkItem { half_edge: seg_north, corner: nw },
            LinkItem { half_edge: (chord_cell(chord_w), end_w), corner: sw },
            LinkItem { half_edge: seg_south, corner: se },
            LinkItem { half_edge: (chord_cell(chord_e), end_e), corner: ne_piece },
        ];
    }

    let mut vertex_tags = vec![None; n0];
    for v in 0..nv as u32 {
        vertex_tags[v as usize] = Some(v);
    }

    let complex = Complex {
        links,
        edge_ends,
        face_chi: vec![1; n_pieces as usize],
        vertex_tags,
    };
    debug_assert_eq!(complex.euler(), map.euler_characteristic());

    let cycle: Vec<u32> = (0..np as u32).map(chord_cell).collect();
    complex.cut(&cycle)
}

/// Convenience: contractibility of a transverse curve.
pub fn is_contractible(map: &CombinatorialMap, curve: &TransverseCurve) -> Result<bool, MapError> {
    Ok(cut_along(map, curve)?.has_disk_side())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_point_curve_on_torus_bouquet_is_essential() {
        let map = CombinatorialMap::build(&[vec![0, 1, 0, 1]]).unwrap();
        let curves = one_point_curves(&map);
        assert_eq!(curves.len(), 2, "both loops admit a once-meeting curve");
        for c in &curves {
            let cut = cut_along(&map, c).unwrap();
            assert_eq!(cut.components.len(), 1);
            assert_eq!(cut.components[0].euler, 0, "annulus");
            assert_eq!(cut.components[0].boundary_circles, 2);
            assert!(!cut.has_disk_side());
        }
    }

    #[test]
    fn two_point_curves_on_sphere_are_contractible() {
        let map = CombinatorialMap::build(&[vec![0, 0, 1, 1]]).unwrap();
        let mut seen = 0;
        for c in two_point_curves(&map) {
            match cut_along(&map, &c) {
                Ok(cut) => {
                    assert!(cut.has_disk_side(), "genus 0: every simple curve bounds");
                    let total: i64 = cut.components.iter().map(|k| k.euler).sum();
                    assert_eq!(total, 2);
                    seen += 1;
                }
                Err(MapError::NonSimpleCycle) => {}
                Err(e) => panic!("{e}"),
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn curve_around_a_vertex_has_it_inside() {
        // Two curls on the sphere joined by a pair of edges; a 2-point curve
        // across the connectors cuts off vertex 1 in a disk.
        let map = CombinatorialMap::build(&[vec![0, 0, 1, 2], vec![1, 3, 3, 2]]).unwrap();
        let mut found = false;
        for c in two_point_curves(&map) {
            if let Ok(cut) = cut_along(&map, &c) {
                for comp in &cut.components {
                    if comp.is_disk() && comp.interior_vertices == vec![1] {
                        found = true;
                    }
                }
            }
        }
        assert!(found, "some 2-point curve cuts off vertex 1 in a disk");
    }
}
