//! Generalized cell complex of a closed orientable surface, with a cut
//! engine for simple 1-skeleton cycles.
//!
//! The complex stores, for every 0-cell, the counterclockwise cyclic link:
//! an alternating sequence of incident 1-cell ends and the 2-cell corners
//! between them. Cutting along a simple cycle is pure bookkeeping:
//!
//! * 2-cells are merged by union-find across every 1-cell not on the cycle;
//! * each cycle 1-cell contributes one copy to the class on each of its
//!   sides; each cycle 0-cell splits its link at the two cycle ends into two
//!   arcs, one copy per side;
//! * the Euler characteristic of a piece is `V - E + sum(face chi)` over the
//!   copies assigned to it, and the two boundary circles produced by the cut
//!   land in the classes adjacent to the cycle's two sides.

use super::{CutComponent, CutResult, MapError};

/// End of a 1-cell: (edge index, end 0 or 1).
pub(crate) type HalfEdge = (u32, u8);

#[derive(Debug, Clone, Copy)]
pub(crate) struct LinkItem {
    pub half_edge: HalfEdge,
    /// 2-cell of the corner immediately counterclockwise after `half_edge`.
    pub corner: u32,
}

#[derive(Debug, Clone)]
pub(crate) struct Complex {
    /// Per 0-cell, counterclockwise link.
    pub links: Vec<Vec<LinkItem>>,
    /// Per 1-cell, its two endpoint 0-cells (end 0, end 1).
    pub edge_ends: Vec<[u32; 2]>,
    /// Per 2-cell, its Euler characteristic (1 for disks).
    pub face_chi: Vec<i64>,
    /// Optional tag carried by a 0-cell, reported per cut piece (used to
    /// track which map vertices a piece contains).
    pub vertex_tags: Vec<Option<u32>>,
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }
    fn find(&mut self, x: u32) -> u32 {
        let mut root = x;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = x;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }
    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[rb as usize] = ra;
        }
    }
}

impl Complex {
    /// The 2-cell counterclockwise after `he` around its endpoint — the cell
    /// on one fixed side of the 1-cell. By orientability the two ends give
    /// the two distinct sides.
    fn side_face(&self, he: HalfEdge) -> u32 {
        let v = self.edge_ends[he.0 as usize][he.1 as usize];
        self.links[v as usize]
            .iter()
            .find(|it| it.half_edge == he)
            .expect("half-edge present in its vertex link")
            .corner
    }

    fn checked(&self) -> &Self {
        #[cfg(debug_assertions)]
        {
            for (e, ends) in self.edge_ends.iter().enumerate() {
                for (end, &v) in ends.iter().enumerate() {
                    let he = (e as u32, end as u8);
                    assert!(
                        self.links[v as usize].iter().any(|it| it.half_edge == he),
                        "end {end} of 1-cell {e} missing from link of 0-cell {v}"
                    );
                }
            }
            let degree_sum: usize = self.links.iter().map(|l| l.len()).sum();
            assert_eq!(degree_sum, 2 * self.edge_ends.len());
        }
        self
    }

    pub fn euler(&self) -> i64 {
        self.links.len() as i64 - self.edge_ends.len() as i64
            + self.face_chi.iter().sum::<i64>()
    }

    /// Cuts along the cycle given as a 1-cell sequence. Consecutive cells
    /// must share a 0-cell, no 1-cell or interior 0-cell may repeat.
    pub fn cut(&self, cycle: &[u32]) -> Result<CutResult, MapError> {
        self.checked();
        if cycle.is_empty() {
            return Err(MapError::NonSimpleCycle);
        }
        let n = cycle.len();
        {
            let mut sorted = cycle.to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != n {
                return Err(MapError::NonSimpleCycle);
            }
        }

        // Orient the cycle: pick for each step the end at which it meets the
        // previous step. vertex_seq[i] is the 0-cell between cycle[i-1] and
        // cycle[i].
        let mut vertex_seq = Vec::with_capacity(n);
        let mut ends_in = Vec::with_capacity(n); // half-edge of cycle[i-1] at vertex_seq[i]
        let mut ends_out = Vec::with_capacity(n); // half-edge of cycle[i] at vertex_seq[i]
        if n == 1 {
            let e = cycle[0];
            let [a, b] = self.edge_ends[e as usize];
            if a != b {
                return Err(MapError::NonSimpleCycle);
            }
            vertex_seq.push(a);
            ends_in.push((e, 1u8));
            ends_out.push((e, 0u8));
        } else {
            // Choose the shared endpoint of each consecutive pair.
            let mut dirs = vec![0u8; n]; // end of cycle[i] that starts the step
            let e0 = self.edge_ends[cycle[0] as usize];
            let e1 = self.edge_ends[cycle[1] as usize];
            // end of cycle[0] that touches cycle[1]
            let shared01 = if e0[1] == e1[0] || e0[1] == e1[1] {
                1u8
            } else if e0[0] == e1[0] || e0[0] == e1[1] {
                0u8
            } else {
                return Err(MapError::NonSimpleCycle);
            };
            // step 0 runs from the other end toward shared01
            dirs[0] = 1 - shared01;
            for i in 1..n {
                let prev_head =
                    self.edge_ends[cycle[i - 1] as usize][1 - dirs[i - 1] as usize];
                let ei = self.edge_ends[cycle[i] as usize];
                if ei[0] == prev_head {
                    dirs[i] = 0;
                } else if ei[1] == prev_head {
                    dirs[i] = 1;
                } else {
                    return Err(MapError::NonSimpleCycle);
                }
            }
            let last_head = self.edge_ends[cycle[n - 1] as usize][1 - dirs[n - 1] as usize];
            let first_tail = self.edge_ends[cycle[0] as usize][dirs[0] as usize];
            if last_head != first_tail {
                return Err(MapError::NonSimpleCycle);
            }
            for i in 0..n {
                let prev = if i == 0 { n - 1 } else { i - 1 };
                let v = self.edge_ends[cycle[i] as usize][dirs[i] as usize];
                vertex_seq.push(v);
                ends_in.push((cycle[prev], 1 - dirs[prev]));
                ends_out.push((cycle[i], dirs[i]));
            }
            let mut vs = vertex_seq.clone();
            vs.sort_unstable();
            vs.dedup();
            if vs.len() != n {
                return Err(MapError::NonSimpleCycle);
            }
        }

        let on_cycle_edge = {
            let mut v = vec![false; self.edge_ends.len()];
            for &e in cycle {
                v[e as usize] = true;
            }
            v
        };
        let on_cycle_vertex = {
            let mut v = vec![false; self.links.len()];
            for &x in &vertex_seq {
                v[x as usize] = true;
            }
            v
        };

        // Merge 2-cells across non-cycle 1-cells.
        let mut uf = UnionFind::new(self.face_chi.len());
        for e in 0..self.edge_ends.len() as u32 {
            if !on_cycle_edge[e as usize] {
                let fa = self.side_face((e, 0));
                let fb = self.side_face((e, 1));
                uf.union(fa, fb);
            }
        }

        // Accumulate V - E + F per class.
        let nf = self.face_chi.len();
        let mut chi = vec![0i64; nf];
        let mut tags: Vec<Vec<u32>> = vec![Vec::new(); nf];
        let mut present = vec![false; nf];
        for f in 0..nf as u32 {
            let r = uf.find(f) as usize;
            chi[r] += self.face_chi[f as usize];
            present[r] = true;
        }
        for e in 0..self.edge_ends.len() as u32 {
            if !on_cycle_edge[e as usize] {
                let r = uf.find(self.side_face((e, 0))) as usize;
                debug_assert_eq!(r, uf.find(self.side_face((e, 1))) as usize);
                chi[r] -= 1;
            } else {
                // one copy per side
                chi[uf.find(self.side_face((e, 0))) as usize] -= 1;
                chi[uf.find(self.side_face((e, 1))) as usize] -= 1;
            }
        }
        for v in 0..self.links.len() as u32 {
            if !on_cycle_vertex[v as usize] {
                let link = &self.links[v as usize];
                debug_assert!(!link.is_empty());
                let r = uf.find(link[0].corner) as usize;
                #[cfg(debug_assertions)]
                for it in link {
                    assert_eq!(uf.find(it.corner) as usize, r, "vertex link split off cycle");
                }
                chi[r] += 1;
                if let Some(tag) = self.vertex_tags[v as usize] {
                    tags[r].push(tag);
                }
            }
        }

        // Cycle 0-cells: split each link into the two arcs between the
        // incoming and outgoing cycle ends; a vertex copy per arc. Also trace
        // the two boundary copies of the cycle: "left" is the side entered
        // immediately counterclockwise after the outgoing end.
        let mut left_class: Option<u32> = None;
        let mut right_class: Option<u32> = None;
        for i in 0..vertex_seq.len() {
            let v = vertex_seq[i];
            let link = &self.links[v as usize];
            let m = link.len();
            let pos_out = link
                .iter()
                .position(|it| it.half_edge == ends_out[i])
                .ok_or(MapError::NonSimpleCycle)?;
            let pos_in = link
                .iter()
                .position(|it| it.half_edge == ends_in[i])
                .ok_or(MapError::NonSimpleCycle)?;
            if pos_out == pos_in {
                return Err(MapError::NonSimpleCycle);
            }
            // Arc ccw from out to in: corners at positions pos_out..pos_in-1
            // (the corner of a link item follows its half-edge ccw).
            let mut arc_class = |from: usize, to: usize| -> u32 {
                // corners strictly between the two half-edges, ccw from `from`
                let mut j = from;
                let first = uf.find(link[j].corner);
                loop {
                    debug_assert_eq!(uf.find(link[j].corner), first, "mixed arc at cut vertex");
                    j = (j + 1) % m;
                    if j == to {
                        break;
                    }
                }
                first
            };
            let cls_left = arc_class(pos_out, pos_in);
            let cls_right = arc_class(pos_in, pos_out);
            chi[cls_left as usize] += 1;
            chi[cls_right as usize] += 1;
            match left_class {
                None => left_class = Some(cls_left),
                Some(c) => debug_assert_eq!(c, cls_left, "left boundary changed class"),
            }
            match right_class {
                None => right_class = Some(cls_right),
                Some(c) => debug_assert_eq!(c, cls_right, "right boundary changed class"),
            }
        }
        let left_class = left_class.unwrap();
        let right_class = right_class.unwrap();

        // Assemble components in canonical (least 2-cell) order.
        let mut roots: Vec<u32> = (0..nf as u32)
            .filter(|&f| present[uf.find(f) as usize] && uf.find(f) == f)
            .collect();
        roots.sort_unstable();
        let mut components = Vec::with_capacity(roots.len());
        let mut index_of = vec![usize::MAX; nf];
        for (k, &r) in roots.iter().enumerate() {
            index_of[r as usize] = k;
            let mut interior = std::mem::take(&mut tags[r as usize]);
            interior.sort_unstable();
            let boundary = (uf.find(left_class) == r) as u32 + (uf.find(right_class) == r) as u32;
            components.push(CutComponent {
                euler: chi[r as usize],
                boundary_circles: boundary,
                interior_vertices: interior,
            });
        }
        let sides = (
            index_of[uf.find(left_class) as usize],
            index_of[uf.find(right_class) as usize],
        );
        debug_assert_eq!(
            components.iter().map(|c| c.euler).sum::<i64>(),
            self.euler(),
            "cut must preserve total Euler characteristic"
        );
        Ok(CutResult { components, sides })
    }
}
