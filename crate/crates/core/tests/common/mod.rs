//! Corpus builders and brute-force oracles shared by the integration tests.
//! The oracles only use adjacency queries, Floyd-Warshall distances and
//! bitmask enumeration, never the algorithms they are compared with.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use simplex_graphs::families::{cartesian_product, complete, cycle, path};
use simplex_graphs::{Family, Graph};

/// The graph on `n` vertices whose edges are the set bits of `mask`, with
/// pairs taken in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// All 1024 labelled graphs on five vertices.
pub fn all_graphs_on_5() -> Vec<Graph> {
    (0..1u64 << 10).map(|m| graph_from_mask(5, m)).collect()
}

pub fn hypercube(n: usize) -> Graph {
    simplex_graphs::generate(Family::Hypercube, n).unwrap()
}

/// Floyd-Warshall distances; `u32::MAX` when unreachable.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
        for &w in g.neighbors(v) {
            row[w] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    for row in &mut d {
        for x in row.iter_mut() {
            if *x >= inf {
                *x = u32::MAX;
            }
        }
    }
    d
}

/// Canonical string of a rooted tree (AHU encoding).
fn rooted_code(g: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(g, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Canonical string of a tree: the smallest code over its centres.
pub fn tree_code(g: &Graph) -> String {
    let n = g.vertex_count();
    let d = floyd_warshall(g);
    let ecc: Vec<u32> = d.iter().map(|r| *r.iter().max().unwrap()).collect();
    let radius = *ecc.iter().min().unwrap();
    (0..n)
        .filter(|&v| ecc[v] == radius)
        .map(|c| rooted_code(g, c, usize::MAX))
        .min()
        .unwrap()
}

/// Non-isomorphic trees on `1..=max_n` vertices, grouped by order.
pub fn trees_up_to(max_n: usize) -> Vec<Graph> {
    let mut all = Vec::new();
    let mut level = vec![Graph::new(1)];
    all.extend(level.clone());
    for n in 2..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..n - 1 {
                let mut edges = t.edges();
                edges.push((v, n - 1));
                let g = Graph::from_edges(n, &edges).unwrap();
                if seen.insert(tree_code(&g)) {
                    next.push(g);
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

pub fn is_star(g: &Graph) -> bool {
    let n = g.vertex_count();
    n >= 3 && (0..n).any(|v| g.degree(v) == n - 1) && g.edge_count() == n - 1
}

/// Median graphs used beyond the simplex graphs: trees on up to 10
/// vertices, grids, and products of small trees with an edge.
pub fn median_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for (i, t) in trees_up_to(10).into_iter().enumerate() {
        out.push((format!("tree#{i} on {}", t.vertex_count()), t));
    }
    for a in 2..=5 {
        for b in a..=5 {
            out.push((format!("P{a}xP{b}"), cartesian_product(&path(a), &path(b))));
        }
    }
    for (i, t) in trees_up_to(6).into_iter().enumerate().skip(1) {
        out.push((format!("tree#{i}xP2"), cartesian_product(&t, &path(2))));
    }
    out.push((
        "P3xP3xP2".into(),
        cartesian_product(&cartesian_product(&path(3), &path(3)), &path(2)),
    ));
    out
}

/// `Q_n` minus the vertices whose index is listed.
pub fn cube_minus(n: usize, removed: &[usize]) -> Graph {
    let q = hypercube(n);
    let keep: Vec<usize> = (0..q.vertex_count())
        .filter(|v| !removed.contains(v))
        .collect();
    q.induced_subgraph(&keep)
}

/// Partial cubes that are not median graphs.
pub fn non_median_partial_cubes() -> Vec<(String, Graph)> {
    vec![
        ("Q3-".into(), cube_minus(3, &[7])),
        ("C6".into(), cycle(6)),
        ("C8".into(), cycle(8)),
        ("C10".into(), cycle(10)),
        ("Q4-".into(), cube_minus(4, &[15])),
        ("Q4--".into(), cube_minus(4, &[0, 15])),
        ("Q4 minus 1111 and 0111".into(), cube_minus(4, &[15, 14])),
        (
            "Q3-+".into(),
            simplex_graphs::generate(Family::QMinusPlus, 3).unwrap(),
        ),
        (
            "H4--".into(),
            simplex_graphs::generate(Family::HMinusMinus, 4).unwrap(),
        ),
    ]
}

/// Small graphs that are not partial cubes.
pub fn non_partial_cubes() -> Vec<(String, Graph)> {
    vec![
        ("K3".into(), complete(3)),
        ("C5".into(), cycle(5)),
        (
            "K2,3".into(),
            Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap(),
        ),
        (
            "2K2".into(),
            Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap(),
        ),
    ]
}

/// Cliques of a graph on at most 64 vertices as bitmasks, by brute force
/// over all vertex subsets (small graphs only).
pub fn clique_masks(g: &Graph) -> Vec<u64> {
    let n = g.vertex_count();
    assert!(n <= 20);
    (0..1u64 << n)
        .filter(|&m| {
            (0..n)
                .all(|u| m >> u & 1 == 0 || (u + 1..n).all(|v| m >> v & 1 == 0 || g.has_edge(u, v)))
        })
        .collect()
}

/// `Cl(G, x + 1)` from a brute-force clique count.
pub fn shifted_clique_poly(g: &Graph) -> Vec<u64> {
    let n = g.vertex_count();
    let mut a = vec![0u64; n + 1];
    for m in clique_masks(g) {
        a[m.count_ones() as usize] += 1;
    }
    let binom = |n: usize, k: usize| -> u64 {
        (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
    };
    let mut out: Vec<u64> = (0..=n)
        .map(|k| (k..=n).map(|i| a[i] * binom(i, k)).sum())
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Number of induced subgraphs isomorphic to `Q_k`, counted as induced
/// embeddings of `Q_k` divided by its automorphism count `2^k k!`.
pub fn induced_cube_count(g: &Graph, k: usize) -> u64 {
    let n = g.vertex_count();
    let size = 1usize << k;
    if size > n {
        return 0;
    }
    let mut image = vec![usize::MAX; size];
    let mut used = vec![false; n];
    fn extend(g: &Graph, pos: usize, image: &mut [usize], used: &mut [bool]) -> u64 {
        let size = image.len();
        if pos == size {
            return 1;
        }
        let mut total = 0;
        for v in 0..g.vertex_count() {
            if used[v] {
                continue;
            }
            let ok = (0..pos).all(|q| {
                let adjacent_in_cube = (q ^ pos).count_ones() == 1;
                g.has_edge(image[q], v) == adjacent_in_cube
            });
            if ok {
                image[pos] = v;
                used[v] = true;
                total += extend(g, pos + 1, image, used);
                used[v] = false;
            }
        }
        total
    }
    let embeddings = extend(g, 0, &mut image, &mut used);
    let aut = (1..=k as u64).product::<u64>() << k;
    assert_eq!(embeddings % aut, 0);
    embeddings / aut
}

/// Daisy test from distances alone: some vertex `b` has
/// `|I(b, v)| = 2^d(b, v)` for every `v`.
pub fn daisy_oracle(g: &Graph) -> bool {
    let d = floyd_warshall(g);
    let n = g.vertex_count();
    (0..n).any(|b| {
        (0..n).all(|v| {
            let dist = d[b][v];
            let size = (0..n).filter(|&w| d[b][w] + d[w][v] == dist).count();
            dist < 64 && size as u64 == 1u64 << dist
        })
    })
}

/// Median test from distances alone: every triple has exactly one median.
pub fn median_oracle(g: &Graph) -> bool {
    let d = floyd_warshall(g);
    let n = g.vertex_count();
    if n == 0 || d.iter().any(|r| r.contains(&u32::MAX)) {
        return false;
    }
    for u in 0..n {
        for v in u..n {
            for w in v..n {
                let count = (0..n)
                    .filter(|&x| {
                        d[u][x] + d[x][v] == d[u][v]
                            && d[v][x] + d[x][w] == d[v][w]
                            && d[u][x] + d[x][w] == d[u][w]
                    })
                    .count();
                if count != 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// Antichains of subsets of `0..n` as facet lists; the empty antichain is
/// included.
pub fn antichains(n: usize) -> Vec<Vec<Vec<usize>>> {
    let subsets = 1usize << n;
    let mut out = Vec::new();
    for family in 0u64..1 << subsets {
        let members: Vec<usize> = (0..subsets).filter(|&s| family >> s & 1 == 1).collect();
        let antichain = members
            .iter()
            .all(|&a| members.iter().all(|&b| a == b || a & b != a));
        if antichain {
            out.push(
                members
                    .iter()
                    .map(|&s| (0..n).filter(|&e| s >> e & 1 == 1).collect())
                    .collect(),
            );
        }
    }
    out
}

/// Vertex sets as sorted vectors, for comparing label or clique lists.
pub fn set_of(sets: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    sets.iter().cloned().collect()
}
