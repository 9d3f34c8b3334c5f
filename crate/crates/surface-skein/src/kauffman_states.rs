//! Kauffman state machinery: resolutions, state circles with
//! contractibility flags, state graphs, reduced graphs, adequacy.
//!
//! The A-resolution of a crossing joins the strand ends at positions (0,1)
//! and (2,3) and so merges the two corners labeled A; the B-resolution joins
//! (1,2) and (3,0). Contractibility of state circles is decided in two
//! independent ways: the general route cuts the passage complex along the
//! circle, while the fast scanner used inside the `2^c` state loops glues
//! the diagram faces across the smoothing channels into regions and reads
//! off bridges of the region graph. Both are exact; they cross-check each
//! other in the tests.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::link_diagram::{LinkDiagram, Side};
use crate::surface_map::curves::{CurveSystem, VertexSmoothing};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StateError {
    #[error("state graph has a 1-edge loop; reduction is undefined")]
    LoopEdgePresent,
    #[error("diagram has {count} crossings; state words carry at most 64")]
    TooManyCrossings { count: usize },
}

/// An assignment of A or B to every crossing, packed as a bit word
/// (bit set = B).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KauffmanState {
    bits: u64,
    len: u32,
}

impl KauffmanState {
    pub fn from_bits(bits: u64, len: usize) -> Result<Self, StateError> {
        if len > 64 {
            return Err(StateError::TooManyCrossings { count: len });
        }
        Ok(KauffmanState {
            bits: bits & mask(len),
            len: len as u32,
        })
    }

    pub fn all_a(len: usize) -> Self {
        Self::from_bits(0, len).expect("state length checked by caller")
    }

    pub fn all_b(len: usize) -> Self {
        Self::from_bits(u64::MAX, len).expect("state length checked by caller")
    }

    pub fn uniform(side: Side, len: usize) -> Self {
        match side {
            Side::A => Self::all_a(len),
            Side::B => Self::all_b(len),
        }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn side_at(&self, crossing: u32) -> Side {
        if self.bits >> crossing & 1 == 1 {
            Side::B
        } else {
            Side::A
        }
    }

    pub fn flipped(&self, crossing: u32) -> Self {
        KauffmanState {
            bits: self.bits ^ (1 << crossing),
            len: self.len,
        }
    }

    /// Number of A resolutions.
    pub fn a_count(&self) -> u32 {
        self.len - self.b_count()
    }

    /// Number of B resolutions.
    pub fn b_count(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn smoothings(&self) -> Vec<VertexSmoothing> {
        (0..self.len)
            .map(|i| side_smoothing(self.side_at(i)))
            .collect()
    }
}

fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

pub fn side_smoothing(side: Side) -> VertexSmoothing {
    match side {
        Side::A => VertexSmoothing::Pair01_23,
        Side::B => VertexSmoothing::Pair12_30,
    }
}

/// One state circle: the strands it runs along (sorted edge ids) and its
/// contractibility on the ambient surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateCircle {
    pub strands: Vec<u32>,
    pub contractible: bool,
}

/// The circle collection of a state, circles sorted by least traversed slot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateCircles {
    pub circles: Vec<StateCircle>,
}

impl StateCircles {
    pub fn total(&self) -> usize {
        self.circles.len()
    }

    pub fn contractible_count(&self) -> usize {
        self.circles.iter().filter(|c| c.contractible).count()
    }

    pub fn non_contractible_count(&self) -> usize {
        self.total() - self.contractible_count()
    }

    pub fn all_contractible(&self) -> bool {
        self.non_contractible_count() == 0
    }
}

/// The state graph `G_s`: one vertex per circle, one edge per crossing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateGraph {
    pub circles: StateCircles,
    /// Per crossing, the two circles its smoothing arcs lie on.
    pub edges: Vec<(u32, u32)>,
}

impl StateGraph {
    pub fn vertex_count(&self) -> usize {
        self.circles.total()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_loop(&self, crossing: u32) -> bool {
        let (u, w) = self.edges[crossing as usize];
        u == w
    }

    pub fn loop_count(&self) -> usize {
        (0..self.edges.len() as u32)
            .filter(|&c| self.is_loop(c))
            .count()
    }
}

/// `G'`: the state graph with one representative kept per class of edges
/// that join the same circles and whose union bounds a disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedStateGraph {
    pub graph: StateGraph,
    /// Crossings grouped into disk-parallelism classes, each sorted; classes
    /// sorted by first crossing.
    pub classes: Vec<Vec<u32>>,
}

impl ReducedStateGraph {
    /// Edge count of the reduced graph.
    pub fn reduced_edge_count(&self) -> usize {
        self.classes.len()
    }
}

/// Applies a state and classifies every circle.
pub fn apply_state(d: &LinkDiagram, state: &KauffmanState) -> StateCircles {
    let sys = CurveSystem::new(d.map(), state.smoothings());
    let circles = (0..sys.circles().len() as u32)
        .map(|i| StateCircle {
            strands: sys.circles()[i as usize].strands.clone(),
            contractible: sys
                .circle_contractible(i)
                .expect("state circles are simple cycles"),
        })
        .collect();
    StateCircles { circles }
}

/// Builds `G_s`.
pub fn state_graph(d: &LinkDiagram, state: &KauffmanState) -> StateGraph {
    let sys = CurveSystem::new(d.map(), state.smoothings());
    let circles = (0..sys.circles().len() as u32)
        .map(|i| StateCircle {
            strands: sys.circles()[i as usize].strands.clone(),
            contractible: sys
                .circle_contractible(i)
                .expect("state circles are simple cycles"),
        })
        .collect();
    let edges = (0..d.crossing_count() as u32)
        .map(|v| sys.arc_circles(v))
        .collect();
    StateGraph {
        circles: StateCircles { circles },
        edges,
    }
}

/// Collapses disk-parallel edge classes of a loopless state graph.
///
/// Two edges joining the same pair of circles are disk-parallel when some
/// simple cycle through their two crossing passages and connecting circle
/// arcs bounds a disk; all four arc choices are tested and the relation is
/// closed transitively.
pub fn reduce_state_graph(
    d: &LinkDiagram,
    state: &KauffmanState,
    graph: &StateGraph,
) -> Result<ReducedStateGraph, StateError> {
    if (0..graph.edge_count() as u32).any(|c| graph.is_loop(c)) {
        return Err(StateError::LoopEdgePresent);
    }
    let sys = CurveSystem::new(d.map(), state.smoothings());
    let n = graph.edge_count();
    let mut parent: Vec<u32> = (0..n as u32).collect();
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
    for x1 in 0..n as u32 {
        for x2 in x1 + 1..n as u32 {
            let (u1, w1) = graph.edges[x1 as usize];
            let (u2, w2) = graph.edges[x2 as usize];
            if (u1, w1) != (u2, w2) && (u1, w1) != (w2, u2) {
                continue;
            }
            if find(&mut parent, x1) == find(&mut parent, x2) {
                continue;
            }
            let parallel = sys.rung_pair_cycles(x1, x2).iter().any(|cyc| {
                sys.cut_along(cyc)
                    .map(|cut| cut.has_disk_side())
                    .unwrap_or(false)
            });
            if parallel {
                let (r1, r2) = (find(&mut parent, x1), find(&mut parent, x2));
                parent[r2 as usize] = r1;
            }
        }
    }
    let mut classes: Vec<Vec<u32>> = Vec::new();
    {
        let mut class_of_root = std::collections::BTreeMap::new();
        for x in 0..n as u32 {
            let r = find(&mut parent, x);
            let idx = *class_of_root.entry(r).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[idx].push(x);
        }
    }
    classes.sort_by_key(|c| c[0]);
    Ok(ReducedStateGraph {
        graph: graph.clone(),
        classes,
    })
}

/// Geometric adequacy on one side: the all-A (resp. all-B) state graph has
/// no 1-edge loops and all its circles bound disks.
pub fn is_geometrically_adequate(d: &LinkDiagram, side: Side) -> bool {
    let g = state_graph(d, &KauffmanState::uniform(side, d.crossing_count()));
    g.loop_count() == 0 && g.circles.all_contractible()
}

/// Single-state-change adequacy: for every state one resolution change away
/// from the uniform state, either the contractible circle count does not
/// exceed the uniform state's total circle count, or the number of
/// non-contractible circles changes.
pub fn is_bks_adequate(d: &LinkDiagram, side: Side) -> bool {
    let c = d.crossing_count();
    let mut scanner = fast::StateScanner::new(d);
    let base = KauffmanState::uniform(side, c);
    let base_scan = scanner.analyze(base.bits());
    let base_total = base_scan.circles;
    let base_nt = base_scan.non_contractible;
    for i in 0..c as u32 {
        let s = scanner.analyze(base.flipped(i).bits());
        let st = s.circles - s.non_contractible;
        if st > base_total && s.non_contractible == base_nt {
            return false;
        }
    }
    true
}

pub mod fast {
    //! Allocation-free per-state analysis for the `2^c` loops.
    //!
    //! Per state: trace circles over the 4c ports, glue faces across the
    //! smoothing channels into regions carrying exact Euler characteristics,
    //! and decide every circle's contractibility at once from the bridge
    //! forest of the region graph: a circle separates the surface iff its
    //! edge is a bridge, and it bounds a disk iff some side then has total
    //! Euler characteristic one.

    use super::*;

    #[derive(Debug, Clone, Copy, PartialEq, Eq)]
    pub struct ScanSummary {
        pub circles: u32,
        pub non_contractible: u32,
    }

    pub struct StateScanner<'a> {
        d: &'a LinkDiagram,
        /// faces merged by the A channel / B channel per crossing
        merge_a: Vec<(u32, u32)>,
        merge_b: Vec<(u32, u32)>,
        /// arc partner port under A / B smoothing
        partner_a: Vec<u32>,
        partner_b: Vec<u32>,
        total_chi: i64,
        // per-state buffers
        circle_of_port: Vec<u32>,
        circle_start: Vec<u32>,
        region_parent: Vec<u32>,
        region_chi: Vec<i64>,
        contractible: Vec<bool>,
        endpoints: Vec<(u32, u32)>,
        adj_head: Vec<i32>,
        adj_next: Vec<i32>,
        adj_to: Vec<u32>,
        disc: Vec<i32>,
        low: Vec<i32>,
        sum: Vec<i64>,
        stack: Vec<(u32, i32, i32)>,
    }

    impl<'a> StateScanner<'a> {
        pub fn new(d: &'a LinkDiagram) -> Self {
            let map = d.map();
            let nv = map.vertex_count();
            let nf = map.face_count();
            let mut merge_a = Vec::with_capacity(nv);
            let mut merge_b = Vec::with_capacity(nv);
            let mut partner_a = vec![0u32; nv * 4];
            let mut partner_b = vec![0u32; nv * 4];
            for v in 0..nv as u32 {
                merge_a.push((map.face_of_corner(v, 1), map.face_of_corner(v, 3)));
                merge_b.push((map.face_of_corner(v, 0), map.face_of_corner(v, 2)));
                for &(x, y) in VertexSmoothing::Pair01_23.arcs().iter() {
                    partner_a[map.slot(v, x) as usize] = map.slot(v, y);
                    partner_a[map.slot(v, y) as usize] = map.slot(v, x);
                }
                for &(x, y) in VertexSmoothing::Pair12_30.arcs().iter() {
                    partner_b[map.slot(v, x) as usize] = map.slot(v, y);
                    partner_b[map.slot(v, y) as usize] = map.slot(v, x);
                }
            }
            StateScanner {
                d,
                merge_a,
                merge_b,
                partner_a,
                partner_b,
                total_chi: map.euler_characteristic(),
                circle_of_port: vec![u32::MAX; nv * 4],
                circle_start: Vec::with_capacity(nv + 2),
                region_parent: vec![0; nf],
                region_chi: vec![0; nf],
                contractible: Vec::with_capacity(nv + 2),
                endpoints: Vec::with_capacity(nv + 2),
                adj_head: vec![-1; nf],
                adj_next: Vec::with_capacity(2 * (nv + 2)),
                adj_to: Vec::with_capacity(2 * (nv + 2)),
                disc: vec![-1; nf],
                low: vec![0; nf],
                sum: vec![0; nf],
                stack: Vec::with_capacity(nf + 1),
            }
        }

        fn find_region(&mut self, x: u32) -> u32 {
            let mut r = x;
            while self.region_parent[r as usize] != r {
                r = self.region_parent[r as usize];
            }
            let mut c = x;
            while self.region_parent[c as usize] != r {
                let nx = self.region_parent[c as usize];
                self.region_parent[c as usize] = r;
                c = nx;
            }
            r
        }

        /// Analyzes one state; the accessors below refer to the latest call.
        pub fn analyze(&mut self, bits: u64) -> ScanSummary {
            let map = self.d.map();
            let nv = map.vertex_count();
            let nf = map.face_count();

            // --- circles ---
            self.circle_of_port.iter_mut().for_each(|x| *x = u32::MAX);
            self.circle_start.clear();
            let mut n_circles = 0u32;
            for start in 0..(nv * 4) as u32 {
                if self.circle_of_port[start as usize] != u32::MAX {
                    continue;
                }
                self.circle_start.push(start);
                let id = n_circles;
                n_circles += 1;
                let mut p = start;
                let mut via_strand = true;
                loop {
                    self.circle_of_port[p as usize] = id;
                    p = if via_strand {
                        map.alpha(p)
                    } else if bits >> (p / 4) & 1 == 0 {
                        self.partner_a[p as usize]
                    } else {
                        self.partner_b[p as usize]
                    };
                    via_strand = !via_strand;
                    if p == start {
                        break;
                    }
                }
            }

            // --- regions: faces glued across the smoothing channels ---
            for f in 0..nf {
                self.region_parent[f] = f as u32;
                self.region_chi[f] = 1;
            }
            for v in 0..nv {
                let (x, y) = if bits >> v & 1 == 0 {
                    self.merge_a[v]
                } else {
                    self.merge_b[v]
                };
                let (rx, ry) = (self.find_region(x), self.find_region(y));
                if rx != ry {
                    let chi = self.region_chi[ry as usize];
                    self.region_parent[ry as usize] = rx;
                    self.region_chi[rx as usize] += chi;
                }
                let r = self.find_region(x);
                self.region_chi[r as usize] -= 1; // the channel band
            }

            // --- region graph: one edge per circle ---
            for f in 0..nf {
                self.adj_head[f] = -1;
            }
            self.adj_next.clear();
            self.adj_to.clear();
            self.endpoints.clear();
            for ci in 0..n_circles {
                let p = self.circle_start[ci as usize];
                let fa = map.face_of_slot(p);
                let fb = map.face_of_slot(map.alpha(p));
                let ra = self.find_region(fa);
                let rb = self.find_region(fb);
                self.endpoints.push((ra, rb));
                for (from, to) in [(ra, rb), (rb, ra)] {
                    let slot = self.adj_to.len() as i32;
                    self.adj_to.push(to);
                    self.adj_next.push(self.adj_head[from as usize]);
                    self.adj_head[from as usize] = slot;
                }
            }

            // --- bridge forest with subtree chi sums ---
            self.contractible.clear();
            self.contractible.resize(n_circles as usize, false);
            for f in 0..nf {
                self.disc[f] = -1;
            }
            let root = self.find_region(0);
            let mut timer = 0i32;
            self.disc[root as usize] = timer;
            self.low[root as usize] = timer;
            self.sum[root as usize] = self.region_chi[root as usize];
            timer += 1;
            self.stack.clear();
            self.stack.push((root, self.adj_head[root as usize], -1));
            while let Some((u, it, parent_arc)) = self.stack.pop() {
                if it == -1 {
                    // all arcs of u done: retreat into the parent
                    if parent_arc >= 0 {
                        let circle = parent_arc as usize / 2;
                        let (a, b) = self.endpoints[circle];
                        let pu = if parent_arc % 2 == 0 { a } else { b };
                        if self.low[u as usize] > self.disc[pu as usize] {
                            let side = self.sum[u as usize];
                            if side == 1 || self.total_chi - side == 1 {
                                self.contractible[circle] = true;
                            }
                        }
                        self.low[pu as usize] =
                            self.low[pu as usize].min(self.low[u as usize]);
                        self.sum[pu as usize] += self.sum[u as usize];
                    }
                    continue;
                }
                let arc = it as usize;
                let next_it = self.adj_next[arc];
                let v = self.adj_to[arc];
                self.stack.push((u, next_it, parent_arc));
                if self.disc[v as usize] == -1 {
                    self.disc[v as usize] = timer;
                    self.low[v as usize] = timer;
                    self.sum[v as usize] = self.region_chi[v as usize];
                    timer += 1;
                    self.stack.push((v, self.adj_head[v as usize], arc as i32));
                } else if parent_arc < 0 || arc / 2 != parent_arc as usize / 2 {
                    self.low[u as usize] = self.low[u as usize].min(self.disc[v as usize]);
                }
            }

            let non_contractible = self.contractible.iter().filter(|&&b| !b).count() as u32;
            ScanSummary {
                circles: n_circles,
                non_contractible,
            }
        }

        pub fn circle_count(&self) -> u32 {
            self.circle_start.len() as u32
        }

        pub fn circle_contractible(&self, circle: u32) -> bool {
            self.contractible[circle as usize]
        }

        pub fn circle_of_port(&self, port: u32) -> u32 {
            self.circle_of_port[port as usize]
        }

        /// Walks a circle, yielding its strand steps as (edge, forward),
        /// forward meaning traversal from the edge's lower slot to higher.
        pub fn circle_strands(&self, circle: u32, bits: u64) -> Vec<(u32, bool)> {
            let map = self.d.map();
            let start = self.circle_start[circle as usize];
            let mut out = Vec::new();
            let mut p = start;
            let mut via_strand = true;
            loop {
                if via_strand {
                    let e = map.edge_of_slot(p);
                    let (lo, _) = map.edge_slots(e);
                    out.push((e, p == lo));
                    p = map.alpha(p);
                } else {
                    p = if bits >> (p / 4) & 1 == 0 {
                        self.partner_a[p as usize]
                    } else {
                        self.partner_b[p as usize]
                    };
                }
                via_strand = !via_strand;
                if p == start {
                    break;
                }
            }
            out
        }

        /// Region roots on the two sides of a circle (latest scan).
        pub fn circle_side_regions(&mut self, circle: u32) -> (u32, u32) {
            let map = self.d.map();
            let p = self.circle_start[circle as usize];
            let a = map.face_of_slot(p);
            let b = map.face_of_slot(map.alpha(p));
            (self.find_region(a), self.find_region(b))
        }

        pub fn region_root(&mut self, face: u32) -> u32 {
            self.find_region(face)
        }

        pub fn region_chi_of_root(&self, root: u32) -> i64 {
            self.region_chi[root as usize]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link_diagram::fixtures::*;

    fn graph(text: &str, side: Side) -> StateGraph {
        let d = diagram(text);
        state_graph(&d, &KauffmanState::uniform(side, d.crossing_count()))
    }

    #[test]
    fn trefoil_state_counts() {
        let d = diagram(TREFOIL_S2);
        let a = apply_state(&d, &KauffmanState::all_a(3));
        assert_eq!(a.total(), 2);
        assert!(a.all_contractible());
        let b = apply_state(&d, &KauffmanState::all_b(3));
        assert_eq!(b.total(), 3);
        assert!(b.all_contractible());
    }

    #[test]
    fn trefoil_state_graphs() {
        let ga = graph(TREFOIL_S2, Side::A);
        assert_eq!(ga.vertex_count(), 2);
        assert_eq!(ga.edge_count(), 3);
        assert_eq!(ga.loop_count(), 0);
        let gb = graph(TREFOIL_S2, Side::B);
        assert_eq!(gb.vertex_count(), 3);
        assert_eq!(gb.loop_count(), 0);
    }

    #[test]
    fn trefoil_reduced_graph_edges() {
        let d = diagram(TREFOIL_S2);
        let sa = KauffmanState::all_a(3);
        let ga = state_graph(&d, &sa);
        let ra = reduce_state_graph(&d, &sa, &ga).unwrap();
        assert_eq!(ra.reduced_edge_count(), 1, "three parallel disk-bounding edges");
        let sb = KauffmanState::all_b(3);
        let gb = state_graph(&d, &sb);
        let rb = reduce_state_graph(&d, &sb, &gb).unwrap();
        assert_eq!(rb.reduced_edge_count(), 3, "triangle graph has no parallel pairs");
    }

    #[test]
    fn curl_adequacy() {
        let d = diagram(CURL_PLUS);
        // Positive curl: the B-smoothing joins the single circle to itself.
        assert!(is_geometrically_adequate(&d, Side::A));
        assert!(!is_geometrically_adequate(&d, Side::B));
        let gb = graph(CURL_PLUS, Side::B);
        assert_eq!(gb.vertex_count(), 1);
        assert_eq!(gb.loop_count(), 1);
        let ga = graph(CURL_PLUS, Side::A);
        assert_eq!(ga.vertex_count(), 2);
        assert_eq!(ga.loop_count(), 0);
    }

    #[test]
    fn reduce_rejects_loops() {
        let d = diagram(CURL_PLUS);
        let sb = KauffmanState::all_b(1);
        let gb = state_graph(&d, &sb);
        assert_eq!(
            reduce_state_graph(&d, &sb, &gb).unwrap_err(),
            StateError::LoopEdgePresent
        );
    }

    #[test]
    fn fast_scanner_matches_general_path() {
        for text in [TREFOIL_S2, HOPF_S2, CURL_PLUS, FIG8_S2, TORUS4, TORUS8, NONTWIST4_S2] {
            let d = diagram(text);
            let c = d.crossing_count();
            let mut scanner = fast::StateScanner::new(&d);
            for bits in 0..1u64 << c {
                let scan = scanner.analyze(bits);
                let slow = apply_state(&d, &KauffmanState::from_bits(bits, c).unwrap());
                assert_eq!(scan.circles as usize, slow.total(), "{text} bits={bits:b}");
                assert_eq!(
                    scan.non_contractible as usize,
                    slow.non_contractible_count(),
                    "{text} bits={bits:b}"
                );
                for ci in 0..scan.circles {
                    assert_eq!(
                        scanner.circle_contractible(ci),
                        slow.circles[ci as usize].contractible,
                        "{text} bits={bits:b} circle={ci}"
                    );
                }
            }
        }
    }

    #[test]
    fn single_change_moves_circle_count_by_at_most_one() {
        for text in [TREFOIL_S2, HOPF_S2, FIG8_S2, TORUS4, TORUS8] {
            let d = diagram(text);
            let c = d.crossing_count();
            let mut scanner = fast::StateScanner::new(&d);
            for bits in 0..1u64 << c {
                let n = scanner.analyze(bits).circles as i64;
                for i in 0..c as u32 {
                    let m = scanner.analyze(bits ^ (1 << i)).circles as i64;
                    assert!((n - m).abs() <= 1, "{text} bits={bits:b} flip={i}");
                }
            }
        }
    }

    #[test]
    fn geometric_adequacy_implies_single_change_adequacy() {
        for text in [TREFOIL_S2, HOPF_S2, CURL_PLUS, FIG8_S2, TORUS4, TORUS8] {
            let d = diagram(text);
            for side in [Side::A, Side::B] {
                if is_geometrically_adequate(&d, side) {
                    assert!(is_bks_adequate(&d, side), "{text} side {side}");
                }
            }
        }
    }

    #[test]
    fn mirror_swaps_state_graphs() {
        for text in [TREFOIL_S2, HOPF_S2, FIG8_S2, TORUS4, TORUS8] {
            let d = diagram(text);
            let m = d.mirror();
            let ga = graph(text, Side::A);
            let gb_m = state_graph(&m, &KauffmanState::all_b(m.crossing_count()));
            assert_eq!(ga.vertex_count(), gb_m.vertex_count(), "{text}");
            assert_eq!(ga.loop_count(), gb_m.loop_count(), "{text}");
            let contractible = |g: &StateGraph| {
                g.circles.circles.iter().filter(|c| c.contractible).count()
            };
            assert_eq!(contractible(&ga), contractible(&gb_m), "{text}");
        }
    }
}
