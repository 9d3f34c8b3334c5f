//! Combinatorial maps: 4-valent graphs cellularly embedded in closed
//! orientable surfaces.
//!
//! The encoding is a rotation system. Every vertex carries a counterclockwise
//! 4-tuple of dart labels; every label appears exactly twice across the map
//! and the two occurrences form an edge (the involution `alpha`). Faces are
//! the orbits of `sigma . alpha` acting on slots (vertex-position pairs), so
//! the surface is the unique closed orientable one in which the embedding is
//! cellular. Genus, Euler characteristic and all contractibility decisions
//! are derived from that finite data, no geometric realization is ever used.
//!
//! Curve machinery lives in the submodules:
//! * [`curves`] — smoothings of the vertices, traced circle systems, and
//!   cycles running along those circles and through crossing passages;
//! * [`transverse`] — simple closed curves meeting the graph transversely in
//!   finitely many points, encoded as edge points joined by face chords;
//! * [`complex`] — the shared cut engine: a generalized cell complex that is
//!   cut along a 1-skeleton cycle with exact integer Euler bookkeeping.

pub(crate) mod complex;
pub mod curves;
pub mod transverse;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A dart label. Each label occurs exactly twice in a map, once per edge end.
pub type DartLabel = u32;

/// Global slot index: `4 * vertex + position`. A slot is one of the four
/// edge ends attached to a vertex, position counted counterclockwise.
pub type Slot = u32;

/// Edge index (edges are numbered by increasing dart label).
pub type EdgeId = u32;

/// Face index in the canonical face ordering.
pub type FaceId = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MapError {
    #[error("dart label {label} occurs {count} times, expected exactly 2")]
    DanglingDart { label: DartLabel, count: usize },
    #[error("vertex {vertex} has {len} darts, expected exactly 4")]
    NotFourValent { vertex: u32, len: usize },
    #[error("the map is disconnected")]
    Disconnected,
    #[error("cycle is not simple or not properly closed")]
    NonSimpleCycle,
    #[error("the map has no vertices")]
    Empty,
}

/// A validated 4-valent combinatorial map on a closed orientable surface.
///
/// Immutable after construction; all operations are pure, so a map can be
/// shared freely across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialMap {
    records: Vec<[DartLabel; 4]>,
    /// Slot -> partner slot with the same label.
    alpha: Vec<Slot>,
    /// Slot -> edge index.
    edge_of_slot: Vec<EdgeId>,
    /// Edge -> (lower slot, higher slot) carrying its label.
    edges: Vec<(Slot, Slot)>,
    /// Edge -> dart label.
    edge_labels: Vec<DartLabel>,
    /// Slot -> face orbit containing it (as a walk element).
    face_of_slot: Vec<FaceId>,
    /// Face walks: orbit of `sigma . alpha`, starting at the canonical slot.
    faces: Vec<Vec<Slot>>,
    genus: u32,
}

impl CombinatorialMap {
    /// Builds and validates a map from per-vertex counterclockwise dart
    /// records. Labels pair the two ends of each edge; a label may repeat
    /// inside one record (a loop edge at that vertex).
    pub fn build(vertex_records: &[Vec<DartLabel>]) -> Result<Self, MapError> {
        if vertex_records.is_empty() {
            return Err(MapError::Empty);
        }
        let mut records = Vec::with_capacity(vertex_records.len());
        for (v, rec) in vertex_records.iter().enumerate() {
            if rec.len() != 4 {
                return Err(MapError::NotFourValent {
                    vertex: v as u32,
                    len: rec.len(),
                });
            }
            records.push([rec[0], rec[1], rec[2], rec[3]]);
        }
        Self::build_from_records(records)
    }

    pub(crate) fn build_from_records(records: Vec<[DartLabel; 4]>) -> Result<Self, MapError> {
        let n_slots = records.len() * 4;
        let mut occurrences: BTreeMap<DartLabel, Vec<Slot>> = BTreeMap::new();
        for (v, rec) in records.iter().enumerate() {
            for (i, &label) in rec.iter().enumerate() {
                occurrences.entry(label).or_default().push((v * 4 + i) as Slot);
            }
        }
        for (&label, slots) in &occurrences {
            if slots.len() != 2 {
                return Err(MapError::DanglingDart {
                    label,
                    count: slots.len(),
                });
            }
        }

        let mut alpha = vec![0 as Slot; n_slots];
        let mut edge_of_slot = vec![0 as EdgeId; n_slots];
        let mut edges = Vec::with_capacity(occurrences.len());
        let mut edge_labels = Vec::with_capacity(occurrences.len());
        for (&label, slots) in &occurrences {
            let (a, b) = (slots[0], slots[1]);
            let e = edges.len() as EdgeId;
            alpha[a as usize] = b;
            alpha[b as usize] = a;
            edge_of_slot[a as usize] = e;
            edge_of_slot[b as usize] = e;
            edges.push((a, b));
            edge_labels.push(label);
        }

        // Connectivity of the underlying 4-valent graph.
        let n_vertices = records.len();
        let mut seen = vec![false; n_vertices];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for i in 0..4 {
                let w = (alpha[v * 4 + i] / 4) as usize;
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(MapError::Disconnected);
        }

        // Face tracing: orbits of slot -> sigma(alpha(slot)).
        let phi = |s: Slot| -> Slot {
            let t = alpha[s as usize];
            (t & !3) | ((t + 1) & 3)
        };
        let mut face_of_slot = vec![u32::MAX; n_slots];
        let mut raw_faces: Vec<Vec<Slot>> = Vec::new();
        for start in 0..n_slots as Slot {
            if face_of_slot[start as usize] != u32::MAX {
                continue;
            }
            let id = raw_faces.len() as FaceId;
            let mut walk = Vec::new();
            let mut s = start;
            loop {
                face_of_slot[s as usize] = id;
                walk.push(s);
                s = phi(s);
                if s == start {
                    break;
                }
            }
            raw_faces.push(walk);
        }

        // Canonical ordering: faces sorted by least (label, slot) they touch,
        // each walk rotated to start at that slot.
        let key_of =
            |walk: &[Slot]| -> (DartLabel, Slot) {
                walk.iter()
                    .map(|&s| {
                        (
                            edge_labels[edge_of_slot[s as usize] as usize],
                            s,
                        )
                    })
                    .min()
                    .unwrap()
            };
        let mut order: Vec<usize> = (0..raw_faces.len()).collect();
        order.sort_by_key(|&i| key_of(&raw_faces[i]));
        let mut faces = Vec::with_capacity(raw_faces.len());
        let mut relabel = vec![0 as FaceId; raw_faces.len()];
        for (new_id, &old_id) in order.iter().enumerate() {
            let walk = &raw_faces[old_id];
            let anchor = key_of(walk).1;
            let pos = walk.iter().position(|&s| s == anchor).unwrap();
            let mut rotated = Vec::with_capacity(walk.len());
            rotated.extend_from_slice(&walk[pos..]);
            rotated.extend_from_slice(&walk[..pos]);
            relabel[old_id] = new_id as FaceId;
            faces.push(rotated);
        }
        for f in face_of_slot.iter_mut() {
            *f = relabel[*f as usize];
        }

        let chi = n_vertices as i64 - edges.len() as i64 + faces.len() as i64;
        debug_assert!(chi % 2 == 0 && chi <= 2, "bad Euler characteristic {chi}");
        let genus = ((2 - chi) / 2) as u32;

        Ok(CombinatorialMap {
            records,
            alpha,
            edge_of_slot,
            edges,
            edge_labels,
            face_of_slot,
            faces,
            genus,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.records.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn records(&self) -> &[[DartLabel; 4]] {
        &self.records
    }

    /// Face walks in canonical order. Each walk lists the slots whose
    /// edge-sides the face traverses; the walk length is the number of
    /// dart-side steps of the face boundary.
    pub fn faces(&self) -> &[Vec<Slot>] {
        &self.faces
    }

    pub fn slot(&self, vertex: u32, pos: u8) -> Slot {
        vertex * 4 + pos as u32
    }

    pub fn vertex_of_slot(&self, s: Slot) -> u32 {
        s / 4
    }

    pub fn pos_of_slot(&self, s: Slot) -> u8 {
        (s & 3) as u8
    }

    pub fn alpha(&self, s: Slot) -> Slot {
        self.alpha[s as usize]
    }

    pub fn edge_of_slot(&self, s: Slot) -> EdgeId {
        self.edge_of_slot[s as usize]
    }

    /// The two slots of an edge, lower global index first.
    pub fn edge_slots(&self, e: EdgeId) -> (Slot, Slot) {
        self.edges[e as usize]
    }

    pub fn edge_label(&self, e: EdgeId) -> DartLabel {
        self.edge_labels[e as usize]
    }

    pub fn face_of_slot(&self, s: Slot) -> FaceId {
        self.face_of_slot[s as usize]
    }

    /// Face containing the corner between positions `i` and `i+1` of a
    /// vertex. The corner between consecutive slots is traversed by the face
    /// walk right after it travels the dart arriving at position `i`.
    pub fn face_of_corner(&self, vertex: u32, i: u8) -> FaceId {
        let s = self.slot(vertex, i);
        self.face_of_slot(self.alpha(s))
    }
}

/// One connected piece of a surface cut along a simple closed cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutComponent {
    /// Euler characteristic of the compact piece.
    pub euler: i64,
    /// Number of boundary circles the cut produced on this piece.
    pub boundary_circles: u32,
    /// Map vertices (crossings) strictly inside the piece, sorted.
    pub interior_vertices: Vec<u32>,
}

impl CutComponent {
    pub fn is_disk(&self) -> bool {
        self.euler == 1 && self.boundary_circles == 1
    }
}

/// Result of cutting the surface along a simple closed cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutResult {
    /// Pieces sorted by least contained face of the ambient decomposition.
    pub components: Vec<CutComponent>,
    /// Index into `components` of the piece on each side of the cycle.
    /// Equal indices mean the cycle does not separate.
    pub sides: (usize, usize),
}

impl CutResult {
    /// A cycle is contractible iff some side of the cut is a disk.
    pub fn has_disk_side(&self) -> bool {
        self.sides.0 != self.sides.1
            && (self.components[self.sides.0].is_disk() || self.components[self.sides.1].is_disk())
    }

    /// The disk side, when there is exactly one.
    pub fn disk_side(&self) -> Option<&CutComponent> {
        if self.sides.0 == self.sides.1 {
            return None;
        }
        let (l, r) = (&self.components[self.sides.0], &self.components[self.sides.1]);
        match (l.is_disk(), r.is_disk()) {
            (true, false) => Some(l),
            (false, true) => Some(r),
            // Both sides disks only on the sphere; caller picks.
            (true, true) => Some(l),
            (false, false) => None,
        }
    }
}

/// A simple closed curve in the 2-complex determined by a map and,
/// optionally, a smoothed circle system on it.
#[derive(Debug, Clone)]
pub enum EmbeddedCycle {
    /// Runs along state circles and through crossing passages; expressed as
    /// a 1-skeleton cycle of the passage complex of a [`curves::CurveSystem`].
    Skeletal(curves::SkeletalCycle),
    /// Meets the graph transversely in finitely many edge points joined by
    /// face chords.
    Transverse(transverse::TransverseCurve),
}

/// Cuts the surface along `cycle`, returning the pieces with exact Euler
/// characteristics and boundary counts. Total Euler characteristic is
/// preserved. `circles` must be supplied for skeletal cycles and is ignored
/// for transverse ones.
pub fn cut_along_cycle(
    map: &CombinatorialMap,
    circles: Option<&curves::CurveSystem>,
    cycle: &EmbeddedCycle,
) -> Result<CutResult, MapError> {
    match cycle {
        EmbeddedCycle::Skeletal(cyc) => {
            let system = circles.ok_or(MapError::NonSimpleCycle)?;
            system.cut_along(cyc)
        }
        EmbeddedCycle::Transverse(curve) => transverse::cut_along(map, curve),
    }
}

/// True iff some side of the cut along `cycle` is a disk whose boundary is
/// the cycle itself. Independent of traversal direction and starting cell.
pub fn is_contractible(
    map: &CombinatorialMap,
    circles: Option<&curves::CurveSystem>,
    cycle: &EmbeddedCycle,
) -> Result<bool, MapError> {
    Ok(cut_along_cycle(map, circles, cycle)?.has_disk_side())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// One vertex, rotation (0,1,2,3) with slots 0<->2 and 1<->3 paired:
    /// record (a,b,a,b). The interleaved bouquet of two loops on the torus.
    pub(crate) fn torus_bouquet() -> CombinatorialMap {
        CombinatorialMap::build(&[vec![0, 1, 0, 1]]).unwrap()
    }

    /// One vertex, slots 0<->1 and 2<->3 paired: record (a,a,b,b). Two
    /// adjacent loops on the sphere.
    pub(crate) fn sphere_bouquet() -> CombinatorialMap {
        CombinatorialMap::build(&[vec![0, 0, 1, 1]]).unwrap()
    }

    #[test]
    fn torus_bouquet_counts() {
        let m = torus_bouquet();
        assert_eq!(m.vertex_count(), 1);
        assert_eq!(m.edge_count(), 2);
        assert_eq!(m.face_count(), 1);
        assert_eq!(m.euler_characteristic(), 0);
        assert_eq!(m.genus(), 1);
        assert_eq!(m.faces()[0].len(), 4, "single face of length 4 in dart-side steps");
    }

    #[test]
    fn sphere_bouquet_counts() {
        let m = sphere_bouquet();
        assert_eq!(m.face_count(), 3);
        assert_eq!(m.euler_characteristic(), 2);
        assert_eq!(m.genus(), 0);
    }

    #[test]
    fn dangling_dart_rejected() {
        let err = CombinatorialMap::build(&[vec![5, 5, 5, 1], vec![1, 2, 2, 3], vec![3, 4, 4, 6]])
            .unwrap_err();
        assert!(matches!(err, MapError::DanglingDart { label: 5, count: 3 }));
    }

    #[test]
    fn non_four_valent_rejected() {
        let err = CombinatorialMap::build(&[vec![0, 1, 0]]).unwrap_err();
        assert!(matches!(err, MapError::NotFourValent { vertex: 0, len: 3 }));
    }

    #[test]
    fn disconnected_rejected() {
        let err =
            CombinatorialMap::build(&[vec![0, 1, 0, 1], vec![2, 3, 2, 3]]).unwrap_err();
        assert_eq!(err, MapError::Disconnected);
    }

    #[test]
    fn euler_identity_holds() {
        for records in [
            vec![vec![0, 1, 0, 1]],
            vec![vec![0, 0, 1, 1]],
            vec![vec![0, 1, 2, 3], vec![0, 1, 2, 3]],
            vec![vec![0, 1, 2, 3], vec![2, 3, 0, 1]],
            vec![vec![0, 1, 2, 3], vec![3, 2, 1, 0]],
        ] {
            let m = CombinatorialMap::build(&records).unwrap();
            assert_eq!(
                m.euler_characteristic(),
                2 - 2 * m.genus() as i64,
                "records {records:?}"
            );
        }
    }

    #[test]
    fn corners_are_consistent_with_faces() {
        let m = CombinatorialMap::build(&[vec![0, 1, 2, 3], vec![2, 3, 0, 1]]).unwrap();
        // Every corner's face claims the corner in its walk: corner (i,i+1)
        // at v is owned by the walk element alpha(slot(v,i)).
        for v in 0..m.vertex_count() as u32 {
            for i in 0..4u8 {
                let f = m.face_of_corner(v, i);
                let owner = m.alpha(m.slot(v, i));
                assert_eq!(m.face_of_slot(owner), f);
            }
        }
    }
}
