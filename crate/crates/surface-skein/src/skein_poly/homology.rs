//! Integer first homology of the surface carried by a combinatorial map.
//!
//! Cycle coordinates live on the non-tree edges of a spanning tree; the face
//! boundaries span the relation lattice. A Smith reduction of the relation
//! matrix produces the unimodular row transform whose rows at zero
//! elementary divisors evaluate the free part `Z^{2g}` on any 1-cycle.

use crate::surface_map::CombinatorialMap;

pub(crate) struct HomologyBasis {
    /// edge -> index among non-tree edges, when not in the spanning tree
    nontree_index: Vec<Option<usize>>,
    /// 2g rows, each of length r = #non-tree edges
    free_rows: Vec<Vec<i64>>,
}

impl HomologyBasis {
    pub fn new(map: &CombinatorialMap) -> Self {
        let nv = map.vertex_count();
        let ne = map.edge_count();
        // BFS spanning tree over vertices.
        let mut in_tree = vec![false; ne];
        let mut seen = vec![false; nv];
        let mut queue = std::collections::VecDeque::from([0u32]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for i in 0..4u8 {
                let s = map.slot(v, i);
                let w = map.vertex_of_slot(map.alpha(s));
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    in_tree[map.edge_of_slot(s) as usize] = true;
                    queue.push_back(w);
                }
            }
        }
        let mut nontree_index = vec![None; ne];
        let mut r = 0usize;
        for e in 0..ne {
            if !in_tree[e] {
                nontree_index[e] = Some(r);
                r += 1;
            }
        }
        debug_assert_eq!(r, ne - nv + 1);

        // Relation matrix: one column per face boundary, rows indexed by
        // non-tree edges. A face walk traverses the edge of slot d away from
        // d's vertex; count +1 when that is the low-to-high direction.
        let nf = map.face_count();
        let mut m: Vec<Vec<i128>> = vec![vec![0; nf]; r];
        for (fi, walk) in map.faces().iter().enumerate() {
            for &d in walk {
                let e = map.edge_of_slot(d);
                if let Some(k) = nontree_index[e as usize] {
                    let (lo, _) = map.edge_slots(e);
                    m[k][fi] += if d == lo { 1 } else { -1 };
                }
            }
        }

        // Smith reduction tracking the row transform only.
        let mut u: Vec<Vec<i128>> = (0..r)
            .map(|i| (0..r).map(|j| i128::from(i == j)).collect())
            .collect();
        let rows = r;
        let cols = nf;
        let mut row = 0usize;
        let mut col = 0usize;
        while row < rows && col < cols {
            // find a pivot with the smallest absolute value
            let mut pivot: Option<(usize, usize)> = None;
            for i in row..rows {
                for j in col..cols {
                    if m[i][j] != 0
                        && pivot
                            .map(|(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                            .unwrap_or(true)
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            m.swap(row, pi);
            u.swap(row, pi);
            for i in 0..rows {
                m[i].swap(col, pj);
            }
            loop {
                let mut clean = true;
                for i in row + 1..rows {
                    if m[i][col] != 0 {
                        let q = m[i][col] / m[row][col];
                        for j in col..cols {
                            m[i][j] -= q * m[row][j];
                        }
                        for j in 0..rows {
                            u[i][j] -= q * u[row][j];
                        }
                        if m[i][col] != 0 {
                            m.swap(row, i);
                            u.swap(row, i);
                            clean = false;
                        }
                    }
                }
                for j in col + 1..cols {
                    if m[row][j] != 0 {
                        let q = m[row][j] / m[row][col];
                        for i in row..rows {
                            m[i][j] -= q * m[i][col];
                        }
                        if m[row][j] != 0 {
                            for i in 0..rows {
                                m[i].swap(col, j);
                            }
                            clean = false;
                        }
                    }
                }
                if clean {
                    break;
                }
            }
            row += 1;
            col += 1;
        }
        // Rows from `row` on are zero rows of the reduced matrix: their u
        // rows evaluate the free quotient. H_1 of a closed orientable
        // surface is free, so the nonzero elementary divisors are units.
        #[cfg(debug_assertions)]
        for i in 0..row {
            assert_eq!(m[i][i].abs(), 1, "torsion in surface homology");
        }
        let free_rows: Vec<Vec<i64>> = (row..rows)
            .map(|i| u[i].iter().map(|&x| i64::try_from(x).expect("small entries")).collect())
            .collect();
        debug_assert_eq!(free_rows.len(), 2 * map.genus() as usize);
        HomologyBasis {
            nontree_index,
            free_rows,
        }
    }

    pub fn rank(&self) -> usize {
        self.free_rows.len()
    }

    /// Class of a 1-cycle given as signed edge traversals.
    pub fn class_of(&self, chain: &[(u32, bool)]) -> Vec<i64> {
        let r = self.nontree_index.iter().filter(|x| x.is_some()).count();
        let mut z = vec![0i64; r];
        for &(e, forward) in chain {
            if let Some(k) = self.nontree_index[e as usize] {
                z[k] += if forward { 1 } else { -1 };
            }
        }
        self.free_rows
            .iter()
            .map(|rowv| rowv.iter().zip(&z).map(|(&a, &b)| a * b).sum())
            .collect()
    }
}

/// Sign-normalizes a homology vector: first nonzero entry positive.
pub(crate) fn normalize_class(mut v: Vec<i64>) -> Vec<i64> {
    if let Some(&first) = v.iter().find(|&&x| x != 0) {
        if first < 0 {
            for x in v.iter_mut() {
                *x = -*x;
            }
        }
    }
    v
}

pub(crate) fn gcd_all(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |acc, &x| gcd(acc, x.abs()))
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_bouquet_has_rank_two() {
        let map = CombinatorialMap::build(&[vec![0, 1, 0, 1]]).unwrap();
        let h = HomologyBasis::new(&map);
        assert_eq!(h.rank(), 2);
        // The two loop edges represent independent classes.
        let c0 = h.class_of(&[(0, true)]);
        let c1 = h.class_of(&[(1, true)]);
        assert_ne!(c0, vec![0, 0]);
        assert_ne!(c1, vec![0, 0]);
        assert_ne!(c0, c1);
    }

    #[test]
    fn sphere_has_rank_zero() {
        let map = CombinatorialMap::build(&[vec![0, 0, 1, 1]]).unwrap();
        let h = HomologyBasis::new(&map);
        assert_eq!(h.rank(), 0);
    }

    #[test]
    fn face_boundaries_are_null() {
        let map = CombinatorialMap::build(&[vec![0, 1, 0, 1], vec![2, 3, 2, 3], vec![0, 2, 1, 3]])
            .map(|_| ())
            .err();
        let _ = map; // disconnected guard exercised elsewhere
        let map = CombinatorialMap::build(&[vec![0, 1, 2, 3], vec![1, 0, 3, 2]]).unwrap();
        let h = HomologyBasis::new(&map);
        for walk in map.faces() {
            let chain: Vec<(u32, bool)> = walk
                .iter()
                .map(|&d| {
                    let e = map.edge_of_slot(d);
                    let (lo, _) = map.edge_slots(e);
                    (e, d == lo)
                })
                .collect();
            assert!(h.class_of(&chain).iter().all(|&x| x == 0));
        }
    }
}
