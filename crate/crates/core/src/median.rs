//! Medians of vertex triples, median-graph recognition and convexity.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::theta::{self, ThetaRelation};

/// Common vertices of the three pairwise intervals of `u`, `v`, `w`.
pub fn medians(g: &Graph, u: usize, v: usize, w: usize) -> Result<Vec<usize>> {
    let d = g.distance_matrix();
    if !d.is_connected() {
        return Err(Error::NotConnected);
    }
    for x in [u, v, w] {
        if x >= g.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                order: g.vertex_count(),
            });
        }
    }
    Ok(medians_in(&d, u, v, w))
}

fn medians_in(d: &DistanceMatrix, u: usize, v: usize, w: usize) -> Vec<usize> {
    let (duv, duw, dvw) = (d.raw(u, v), d.raw(u, w), d.raw(v, w));
    (0..d.order())
        .filter(|&x| {
            let (ux, vx, wx) = (d.raw(u, x), d.raw(v, x), d.raw(w, x));
            ux + vx == duv && ux + wx == duw && vx + wx == dvw
        })
        .collect()
}

/// Outcome of the brute-force triple scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MedianCheck {
    pub is_median: bool,
    /// Lexicographically first triple `u < v < w` without a unique median,
    /// with its median set. `None` for median graphs and disconnected input.
    pub witness: Option<((usize, usize, usize), Vec<usize>)>,
}

/// Scans all triples of distinct vertices.
pub fn median_check(g: &Graph) -> MedianCheck {
    let n = g.vertex_count();
    let d = g.distance_matrix();
    if n == 0 || !d.is_connected() {
        return MedianCheck {
            is_median: false,
            witness: None,
        };
    }
    let witness = (0..n).into_par_iter().find_map_first(|u| {
        for v in u + 1..n {
            for w in v + 1..n {
                let m = medians_in(&d, u, v, w);
                if m.len() != 1 {
                    return Some(((u, v, w), m));
                }
            }
        }
        None
    });
    MedianCheck {
        is_median: witness.is_none(),
        witness,
    }
}

pub fn is_median_graph(g: &Graph) -> bool {
    median_check(g).is_median
}

/// Median graphs as partial cubes whose boundary sets `U` all induce convex
/// subgraphs.
pub fn is_median_graph_via_convexity(g: &Graph) -> bool {
    if !theta::is_partial_cube(g) {
        return false;
    }
    let cube = theta::embed(g, 0).expect("partial cube embeds");
    let d = g.distance_matrix();
    theta::all_class_data(&cube)
        .iter()
        .all(|data| convex_by_definition(&d, &data.u0) && convex_by_definition(&d, &data.u1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConvexityMethod {
    /// Every geodesic between members stays inside.
    Definition,
    /// No boundary edge is related to an inner edge; needs a connected
    /// bipartite host and a connected induced subgraph.
    Lemma,
}

pub fn is_convex(g: &Graph, set: &[usize], method: ConvexityMethod) -> Result<bool> {
    for &v in set {
        if v >= g.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: g.vertex_count(),
            });
        }
    }
    match method {
        ConvexityMethod::Definition => {
            let d = g.distance_matrix();
            if !d.is_connected() {
                return Err(Error::NotConnected);
            }
            Ok(convex_by_definition(&d, set))
        }
        ConvexityMethod::Lemma => {
            if g.two_coloring().is_none() {
                return Err(Error::NotBipartite);
            }
            let rel = ThetaRelation::new(g)?;
            let mut sorted = set.to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            if !g.induced_subgraph(&sorted).is_connected() {
                return Err(Error::InvalidParameter(
                    "the convexity lemma needs a connected induced subgraph".into(),
                ));
            }
            Ok(convex_by_lemma(&rel, &sorted))
        }
    }
}

fn convex_by_definition(d: &DistanceMatrix, set: &[usize]) -> bool {
    let mut inside = vec![false; d.order()];
    for &v in set {
        inside[v] = true;
    }
    set.iter().enumerate().all(|(i, &u)| {
        set[i + 1..].iter().all(|&v| {
            let duv = d.raw(u, v);
            (0..d.order()).all(|x| inside[x] || d.raw(u, x) + d.raw(x, v) != duv)
        })
    })
}

fn convex_by_lemma(rel: &ThetaRelation<'_>, set: &[usize]) -> bool {
    let g = rel.graph();
    let mut inside = vec![false; g.vertex_count()];
    for &v in set {
        inside[v] = true;
    }
    let edges = g.edges();
    let inner: Vec<_> = edges
        .iter()
        .filter(|&&(u, v)| inside[u] && inside[v])
        .collect();
    let boundary: Vec<_> = edges
        .iter()
        .filter(|&&(u, v)| inside[u] != inside[v])
        .collect();
    boundary
        .iter()
        .all(|&&b| inner.iter().all(|&&e| !rel.related_unchecked(b, e)))
}
