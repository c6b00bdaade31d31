//! Exact isomorphism testing for small graphs.
//!
//! Backtracking over vertex maps, pruned by a per-vertex invariant (sorted
//! distance row plus sorted neighbour degrees) and by requiring every new
//! pair to preserve the distance to all previously mapped vertices. Since
//! distance 1 is adjacency, a complete map is an isomorphism.

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

/// Largest order accepted by [`are_isomorphic`].
pub const MAX_ISOMORPHISM_ORDER: usize = 64;

/// Per-vertex isomorphism invariant.
fn vertex_keys(g: &Graph, dist: &DistanceMatrix) -> Vec<Vec<u32>> {
    (0..g.vertex_count())
        .map(|v| {
            let mut row = dist.row(v).to_vec();
            row.sort_unstable();
            let mut nbr: Vec<u32> = g.neighbors(v).iter().map(|&w| g.degree(w) as u32).collect();
            nbr.sort_unstable();
            row.push(u32::MAX - 1);
            row.extend(nbr);
            row
        })
        .collect()
}

/// Sorted multiset of vertex invariants; equal for isomorphic graphs.
pub fn invariant_signature(g: &Graph) -> Vec<Vec<u32>> {
    let mut keys = vertex_keys(g, &g.distance_matrix());
    keys.sort();
    keys
}

/// Exact isomorphism test. On success returns `phi` with `phi[v]` the image
/// in `h` of vertex `v` of `g`.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count();
    for order in [n, h.vertex_count()] {
        if order > MAX_ISOMORPHISM_ORDER {
            return Err(Error::TooLarge {
                what: "graph order for isomorphism",
                size: order,
                cap: MAX_ISOMORPHISM_ORDER,
            });
        }
    }
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let mut gdeg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut hdeg: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    gdeg.sort_unstable();
    hdeg.sort_unstable();
    if gdeg != hdeg {
        return Ok(None);
    }

    let (dg, dh) = (g.distance_matrix(), h.distance_matrix());
    let (kg, kh) = (vertex_keys(g, &dg), vertex_keys(h, &dh));
    {
        let (mut sg, mut sh) = (kg.clone(), kh.clone());
        sg.sort();
        sh.sort();
        if sg != sh {
            return Ok(None);
        }
    }

    // class ids shared between the two graphs
    let mut classes: Vec<&Vec<u32>> = kg.iter().collect();
    classes.sort();
    classes.dedup();
    let class_of = |k: &Vec<u32>| classes.binary_search(&k).unwrap();
    let cg: Vec<usize> = kg.iter().map(class_of).collect();
    let ch: Vec<usize> = kh.iter().map(class_of).collect();
    let mut class_size = vec![0usize; classes.len()];
    for &c in &cg {
        class_size[c] += 1;
    }
    let candidates: Vec<Vec<usize>> = (0..classes.len())
        .map(|c| (0..n).filter(|&w| ch[w] == c).collect())
        .collect();

    // Most constrained first: many placed neighbours, then small class.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut placed_nbrs = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(placed_nbrs[v]), class_size[cg[v]], v))
            .unwrap();
        placed[v] = true;
        for &w in g.neighbors(v) {
            placed_nbrs[w] += 1;
        }
        order.push(v);
    }

    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let found = extend(0, &order, &cg, &candidates, &dg, &dh, &mut phi, &mut used);
    Ok(found.then_some(phi))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    depth: usize,
    order: &[usize],
    cg: &[usize],
    candidates: &[Vec<usize>],
    dg: &DistanceMatrix,
    dh: &DistanceMatrix,
    phi: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for &w in &candidates[cg[v]] {
        if used[w] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| dg.raw(u, v) == dh.raw(phi[u], w));
        if !consistent {
            continue;
        }
        phi[v] = w;
        used[w] = true;
        if extend(depth + 1, order, cg, candidates, dg, dh, phi, used) {
            return true;
        }
        used[w] = false;
        phi[v] = usize::MAX;
    }
    false
}

/// Checks that `phi` is a bijection `g -> h` preserving adjacency both ways.
pub fn is_isomorphism(g: &Graph, h: &Graph, phi: &[usize]) -> bool {
    let n = g.vertex_count();
    if n != h.vertex_count() || phi.len() != n || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut hit = vec![false; n];
    for &w in phi {
        if w >= n || hit[w] {
            return false;
        }
        hit[w] = true;
    }
    g.edges().iter().all(|&(u, v)| h.has_edge(phi[u], phi[v]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn square_is_c4() {
        let q2 = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let phi = are_isomorphic(&q2, &cycle(4)).unwrap().unwrap();
        assert!(is_isomorphism(&q2, &cycle(4), &phi));
    }

    #[test]
    fn path_is_not_star() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(are_isomorphic(&path(4), &star).unwrap(), None);
    }

    #[test]
    fn same_degrees_different_graphs() {
        // C6 versus two triangles: both 2-regular on 6 vertices
        let tri2 = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(are_isomorphic(&cycle(6), &tri2).unwrap(), None);
        assert!(are_isomorphic(&tri2, &tri2).unwrap().is_some());
    }

    #[test]
    fn relabelled_cycle() {
        let g = cycle(7);
        let perm = [3, 6, 0, 2, 5, 1, 4];
        let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let h = Graph::from_edges(7, &edges).unwrap();
        let phi = are_isomorphic(&g, &h).unwrap().unwrap();
        assert!(is_isomorphism(&g, &h, &phi));
    }

    #[test]
    fn cap_is_enforced() {
        let big = Graph::new(MAX_ISOMORPHISM_ORDER + 1);
        assert!(matches!(
            are_isomorphic(&big, &big),
            Err(Error::TooLarge { .. })
        ));
    }
}
