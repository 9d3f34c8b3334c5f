//! Smoothed curve systems on a combinatorial map.
//!
//! Replacing every 4-valent vertex by one of its two planar smoothings turns
//! the map into a disjoint union of circles on the same surface. This module
//! traces those circles and builds the *passage complex*: a cell structure
//! on the surface whose 1-skeleton consists of the circle strands, the
//! smoothing arcs (split at midpoints), and one rung per vertex crossing the
//! smoothing channel. Circles, and the curves obtained by joining two rungs
//! with arcs of the circles they connect, are simple cycles of that
//! 1-skeleton, so contractibility questions reduce to the generic cut
//! engine.

use super::complex::{Complex, LinkItem};
use super::{CombinatorialMap, CutResult, EdgeId, MapError, Slot};

/// A smoothing of a 4-valent vertex: which pairs of adjacent positions get
/// joined by the two smoothing arcs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexSmoothing {
    /// Arcs join positions (0,1) and (2,3); the channel between them merges
    /// the corners (1,2) and (3,0).
    Pair01_23,
    /// Arcs join positions (1,2) and (3,0); the channel merges (0,1), (2,3).
    Pair12_30,
}

impl VertexSmoothing {
    /// The two arcs as position pairs, counterclockwise within each pair.
    pub fn arcs(self) -> [(u8, u8); 2] {
        match self {
            VertexSmoothing::Pair01_23 => [(0, 1), (2, 3)],
            VertexSmoothing::Pair12_30 => [(1, 2), (3, 0)],
        }
    }

    /// Corners merged by the channel (given as the lower position of each).
    pub fn merged_corners(self) -> [u8; 2] {
        match self {
            VertexSmoothing::Pair01_23 => [1, 3],
            VertexSmoothing::Pair12_30 => [0, 2],
        }
    }
}

/// One traced circle of a smoothed map.
#[derive(Debug, Clone)]
pub struct Circle {
    /// Ports (slots) in traversal order, starting from the canonical port.
    pub ports: Vec<Slot>,
    /// Edges whose strands the circle runs along, sorted.
    pub strands: Vec<EdgeId>,
}

/// A simple cycle in the 1-skeleton of the passage complex.
#[derive(Debug, Clone)]
pub struct SkeletalCycle {
    pub(crate) cells: Vec<u32>,
}

/// A smoothed circle system with its passage complex.
pub struct CurveSystem<'a> {
    map: &'a CombinatorialMap,
    smoothings: Vec<VertexSmoothing>,
    circles: Vec<Circle>,
    /// port -> circle index
    circle_of_port: Vec<u32>,
    /// circle -> (1-cells in traversal order, 0-cells in order); node `i`
    /// sits between cells `i-1` and `i`.
    circle_cells: Vec<(Vec<u32>, Vec<u32>)>,
    complex: Complex,
}

impl<'a> CurveSystem<'a> {
    pub fn new(map: &'a CombinatorialMap, smoothings: Vec<VertexSmoothing>) -> Self {
        assert_eq!(smoothings.len(), map.vertex_count());
        let nv = map.vertex_count();
        let ne = map.edge_count();

        // arc partner of a port within its vertex smoothing, plus the arc
        // index (0/1) and whether the port is the ccw-first of its arc.
        let mut arc_partner = vec![0 as Slot; nv * 4];
        let mut arc_index = vec![0u8; nv * 4];
        let mut arc_first = vec![false; nv * 4];
        for v in 0..nv as u32 {
            for (k, &(a, b)) in smoothings[v as usize].arcs().iter().enumerate() {
                let (sa, sb) = (map.slot(v, a), map.slot(v, b));
                arc_partner[sa as usize] = sb;
                arc_partner[sb as usize] = sa;
                arc_index[sa as usize] = k as u8;
                arc_index[sb as usize] = k as u8;
                arc_first[sa as usize] = true;
            }
        }

        // Trace circles: alternate strand (alpha) and arc steps.
        let mut circle_of_port = vec![u32::MAX; nv * 4];
        let mut circles = Vec::new();
        for start in 0..(nv * 4) as Slot {
            if circle_of_port[start as usize] != u32::MAX {
                continue;
            }
            let id = circles.len() as u32;
            let mut ports = Vec::new();
            let mut p = start;
            let mut via_strand = true;
            loop {
                circle_of_port[p as usize] = id;
                ports.push(p);
                p = if via_strand {
                    map.alpha(p)
                } else {
                    arc_partner[p as usize]
                };
                via_strand = !via_strand;
                if p == start {
                    break;
                }
            }
            let mut strands: Vec<EdgeId> = ports
                .iter()
                .step_by(2)
                .map(|&q| map.edge_of_slot(q))
                .collect();
            strands.sort_unstable();
            circles.push(Circle { ports, strands });
        }

        // Passage complex cells.
        //   0-cells: ports 0..4V, midpoints 4V + 2v + arc.
        //   1-cells: strands 0..E, half-arcs E + 4v + 2*arc + half,
        //            rungs E + 4V + v.
        let midpoint = |v: u32, arc: u8| -> u32 { (nv * 4) as u32 + 2 * v + arc as u32 };
        let halfarc = |v: u32, arc: u8, half: u8| -> u32 {
            ne as u32 + 4 * v + 2 * arc as u32 + half as u32
        };
        let rung = |v: u32| -> u32 { (ne + nv * 4) as u32 + v };

        let n0 = nv * 6;
        let n1 = ne + nv * 5;
        let mut edge_ends = vec![[0u32; 2]; n1];
        let mut links: Vec<Vec<LinkItem>> = vec![Vec::new(); n0];

        for e in 0..ne as u32 {
            let (lo, hi) = map.edge_slots(e);
            edge_ends[e as usize] = [lo, hi];
        }
        for v in 0..nv as u32 {
            let arcs = smoothings[v as usize].arcs();
            for (k, &(a, b)) in arcs.iter().enumerate() {
                let (sa, sb) = (map.slot(v, a), map.slot(v, b));
                let m = midpoint(v, k as u8);
                edge_ends[halfarc(v, k as u8, 0) as usize] = [sa, m];
                edge_ends[halfarc(v, k as u8, 1) as usize] = [m, sb];
            }
            edge_ends[rung(v) as usize] = [midpoint(v, 0), midpoint(v, 1)];
        }

        // Port links: ccw [strand, corner(i,i+1) side] then [half-arc,
        // corner(i-1,i) side].
        for p in 0..(nv * 4) as Slot {
            let v = map.vertex_of_slot(p);
            let e = map.edge_of_slot(p);
            let (lo, _hi) = map.edge_slots(e);
            let strand_he = (e, if p == lo { 0u8 } else { 1u8 });
            let k = arc_index[p as usize];
            let ha_he = if arc_first[p as usize] {
                (halfarc(v, k, 0), 0u8)
            } else {
                (halfarc(v, k, 1), 1u8)
            };
            links[p as usize] = vec![
                LinkItem {
                    half_edge: strand_he,
                    corner: map.face_of_slot(map.alpha(p)),
                },
                LinkItem {
                    half_edge: ha_he,
                    corner: map.face_of_slot(p),
                },
            ];
        }
        // Midpoint links: ccw [half-to-b | corner(b,b+1)], [rung |
        // corner(a-1,a)], [half-to-a | corner(a,b)].
        for v in 0..nv as u32 {
            let arcs = smoothings[v as usize].arcs();
            for (k, &(a, b)) in arcs.iter().enumerate() {
                let m = midpoint(v, k as u8);
                links[m as usize] = vec![
                    LinkItem {
                        half_edge: (halfarc(v, k as u8, 1), 0),
                        corner: map.face_of_corner(v, b),
                    },
                    LinkItem {
                        half_edge: (rung(v), k as u8),
                        corner: map.face_of_corner(v, (a + 3) % 4),
                    },
                    LinkItem {
                        half_edge: (halfarc(v, k as u8, 0), 1),
                        corner: map.face_of_corner(v, a),
                    },
                ];
            }
        }

        let complex = Complex {
            links,
            edge_ends,
            face_chi: vec![1; map.face_count()],
            vertex_tags: vec![None; n0],
        };
        debug_assert_eq!(complex.euler(), map.euler_characteristic());

        // Circle cell sequences for path building.
        let mut circle_cells = Vec::with_capacity(circles.len());
        for c in &circles {
            let mut cells = Vec::new();
            let mut nodes = Vec::new();
            let n = c.ports.len();
            for i in 0..n {
                let p = c.ports[i];
                let q = c.ports[(i + 1) % n];
                nodes.push(p);
                if i % 2 == 0 {
                    // strand step p -> q = alpha(p)
                    debug_assert_eq!(map.alpha(p), q);
                    cells.push(map.edge_of_slot(p));
                } else {
                    // arc step through the midpoint
                    let v = map.vertex_of_slot(p);
                    debug_assert_eq!(v, map.vertex_of_slot(q));
                    let k = arc_index[p as usize];
                    let (h_p, h_q) = if arc_first[p as usize] {
                        (halfarc(v, k, 0), halfarc(v, k, 1))
                    } else {
                        (halfarc(v, k, 1), halfarc(v, k, 0))
                    };
                    cells.push(h_p);
                    nodes.push(midpoint(v, k));
                    cells.push(h_q);
                }
            }
            circle_cells.push((cells, nodes));
        }

        CurveSystem {
            map,
            smoothings,
            circles,
            circle_of_port,
            circle_cells,
            complex,
        }
    }

    pub fn map(&self) -> &CombinatorialMap {
        self.map
    }

    pub fn smoothings(&self) -> &[VertexSmoothing] {
        &self.smoothings
    }

    pub fn circles(&self) -> &[Circle] {
        &self.circles
    }

    pub fn circle_of_port(&self, p: Slot) -> u32 {
        self.circle_of_port[p as usize]
    }

    /// The circles touched by the two smoothing arcs at `vertex`: the
    /// endpoints of the corresponding state-graph edge.
    pub fn arc_circles(&self, vertex: u32) -> (u32, u32) {
        let arcs = self.smoothings[vertex as usize].arcs();
        let p0 = self.map.slot(vertex, arcs[0].0);
        let p1 = self.map.slot(vertex, arcs[1].0);
        (self.circle_of_port(p0), self.circle_of_port(p1))
    }

    /// The circle as a 1-skeleton cycle of the passage complex.
    pub fn circle_cycle(&self, circle: u32) -> SkeletalCycle {
        SkeletalCycle {
            cells: self.circle_cells[circle as usize].0.clone(),
        }
    }

    /// The regions on the two sides of a circle: representative faces of the
    /// ambient map, used by the fast classifiers.
    pub fn circle_side_faces(&self, circle: u32) -> (u32, u32) {
        let p = self.circles[circle as usize].ports[0];
        (
            self.map.face_of_slot(self.map.alpha(p)),
            self.map.face_of_slot(p),
        )
    }

    /// Up to four simple cycles through the rungs of two vertices whose
    /// smoothing arcs join the same pair of distinct circles, each closed up
    /// by connecting arcs along the two circles.
    pub fn rung_pair_cycles(&self, v1: u32, v2: u32) -> Vec<SkeletalCycle> {
        let nv = self.map.vertex_count() as u32;
        let ne = self.map.edge_count() as u32;
        let rung = |v: u32| -> u32 { ne + nv * 4 + v };
        let midpoint = |v: u32, arc: u8| -> u32 { nv * 4 + 2 * v + arc as u32 };

        let (u1, w1) = self.arc_circles(v1);
        let (u2, w2) = self.arc_circles(v2);
        if u1 == w1 || u2 == w2 {
            return Vec::new(); // loop edges have no parallel pairing
        }
        // match arcs by circle
        let pairs = if (u1, w1) == (u2, w2) {
            [(0u8, 0u8), (1, 1)]
        } else if (u1, w1) == (w2, u2) {
            [(0u8, 1u8), (1, 0)]
        } else {
            return Vec::new();
        };

        let mut out = Vec::new();
        for dir_a in [false, true] {
            for dir_b in [false, true] {
                let mut cells = vec![rung(v1)];
                let path_a = self.circle_path(
                    midpoint(v1, pairs[0].0),
                    midpoint(v2, pairs[0].1),
                    dir_a,
                );
                cells.extend_from_slice(&path_a);
                cells.push(rung(v2));
                let path_b = self.circle_path(
                    midpoint(v2, pairs[1].1),
                    midpoint(v1, pairs[1].0),
                    dir_b,
                );
                cells.extend_from_slice(&path_b);
                out.push(SkeletalCycle { cells });
            }
        }
        out
    }

    /// Cells of the circle arc from 0-cell `from` to 0-cell `to`, walking
    /// forward or backward along the circle containing both.
    fn circle_path(&self, from: u32, to: u32, backward: bool) -> Vec<u32> {
        let circle = {
            // midpoints carry the circle of their arc's first port
            let find = |node: u32| -> u32 {
                for (ci, (_, nodes)) in self.circle_cells.iter().enumerate() {
                    if nodes.contains(&node) {
                        return ci as u32;
                    }
                }
                unreachable!("node on some circle")
            };
            let c = find(from);
            debug_assert_eq!(c, find(to));
            c
        };
        let (cells, nodes) = &self.circle_cells[circle as usize];
        let n = cells.len();
        let i = nodes.iter().position(|&x| x == from).unwrap();
        let j = nodes.iter().position(|&x| x == to).unwrap();
        let mut out = Vec::new();
        if !backward {
            let mut k = i;
            while k != j {
                out.push(cells[k]);
                k = (k + 1) % n;
            }
        } else {
            let mut k = i;
            while k != j {
                k = (k + n - 1) % n;
                out.push(cells[k]);
            }
        }
        out
    }

    /// Cuts the surface along a skeletal cycle.
    pub fn cut_along(&self, cycle: &SkeletalCycle) -> Result<CutResult, MapError> {
        self.complex.cut(&cycle.cells)
    }

    /// Cuts along circle `i` of the system.
    pub fn cut_circle(&self, circle: u32) -> Result<CutResult, MapError> {
        self.cut_along(&self.circle_cycle(circle))
    }

    /// Whether circle `i` bounds a disk on the surface.
    pub fn circle_contractible(&self, circle: u32) -> Result<bool, MapError> {
        Ok(self.cut_circle(circle)?.has_disk_side())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus_one_crossing() -> CombinatorialMap {
        // One vertex, edges at opposite slot pairs: the interleaved bouquet.
        CombinatorialMap::build(&[vec![0, 1, 0, 1]]).unwrap()
    }

    #[test]
    fn bouquet_diagonal_circle_is_essential() {
        let map = torus_one_crossing();
        let sys = CurveSystem::new(&map, vec![VertexSmoothing::Pair01_23]);
        assert_eq!(sys.circles().len(), 1);
        let cut = sys.cut_circle(0).unwrap();
        // Cutting the torus along the diagonal circle leaves one annulus.
        assert_eq!(cut.components.len(), 1);
        assert_eq!(cut.components[0].euler, 0);
        assert_eq!(cut.components[0].boundary_circles, 2);
        assert!(!cut.has_disk_side());
    }

    #[test]
    fn rung_cycle_on_bouquet_is_essential() {
        let map = torus_one_crossing();
        let sys = CurveSystem::new(&map, vec![VertexSmoothing::Pair01_23]);
        // A rung joined with part of the circle: essential (1,0)-style curve.
        let ne = map.edge_count() as u32;
        let nv = map.vertex_count() as u32;
        let rung = ne + nv * 4;
        let (cells, nodes) = (&sys.circle_cells[0].0, &sys.circle_cells[0].1);
        let m0 = nv * 4; // midpoint of arc 0
        let m1 = nv * 4 + 1;
        let i = nodes.iter().position(|&x| x == m0).unwrap();
        let mut cyc = vec![rung];
        let n = cells.len();
        let mut k = i;
        while nodes[k] != m1 {
            cyc.push(cells[k]);
            k = (k + 1) % n;
        }
        let cut = sys.cut_along(&SkeletalCycle { cells: cyc }).unwrap();
        assert_eq!(cut.components.len(), 1);
        assert_eq!(cut.components[0].euler, 0);
        assert!(!cut.has_disk_side());
    }

    #[test]
    fn sphere_circles_are_contractible() {
        // Two adjacent loops on the sphere, smoothed either way: every
        // circle on a genus 0 surface bounds a disk.
        let map = CombinatorialMap::build(&[vec![0, 0, 1, 1]]).unwrap();
        for s in [VertexSmoothing::Pair01_23, VertexSmoothing::Pair12_30] {
            let sys = CurveSystem::new(&map, vec![s]);
            for c in 0..sys.circles().len() as u32 {
                assert!(sys.circle_contractible(c).unwrap());
            }
        }
    }

    #[test]
    fn cut_preserves_total_euler() {
        let map = torus_one_crossing();
        for s in [VertexSmoothing::Pair01_23, VertexSmoothing::Pair12_30] {
            let sys = CurveSystem::new(&map, vec![s]);
            for c in 0..sys.circles().len() as u32 {
                let cut = sys.cut_circle(c).unwrap();
                let total: i64 = cut.components.iter().map(|k| k.euler).sum();
                assert_eq!(total, map.euler_characteristic());
            }
        }
    }

    #[test]
    fn contractibility_direction_independent() {
        let map = torus_one_crossing();
        let sys = CurveSystem::new(&map, vec![VertexSmoothing::Pair01_23]);
        let fwd = sys.circle_cycle(0);
        let mut rev = fwd.clone();
        rev.cells.reverse();
        assert_eq!(
            sys.cut_along(&fwd).unwrap().has_disk_side(),
            sys.cut_along(&rev).unwrap().has_disk_side()
        );
    }
}
