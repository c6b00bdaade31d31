//! The Djoković–Winkler relation, its classes, partial-cube recognition and
//! the isometric embedding into a hypercube.
//!
//! Edges `uv` and `xy` are related when `d(u,x) + d(v,y) != d(u,y) + d(v,x)`.
//! Classes are computed as components of the relation graph on edges (the
//! transitive closure), so [`theta_classes`] is total on connected graphs; a
//! graph is a partial cube iff it is bipartite and every class is a clique
//! of the relation.

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::label::BinaryLabel;
use crate::partial_cube::LabelledPartialCube;

pub type Edge = (usize, usize);

/// A graph with its distance matrix, for repeated relation queries.
#[derive(Clone, Debug)]
pub struct ThetaRelation<'g> {
    graph: &'g Graph,
    dist: DistanceMatrix,
}

impl<'g> ThetaRelation<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        let dist = graph.distance_matrix();
        if !dist.is_connected() {
            return Err(Error::NotConnected);
        }
        Ok(ThetaRelation { graph, dist })
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    pub fn related(&self, e: Edge, f: Edge) -> Result<bool> {
        for (a, b) in [e, f] {
            if !self.graph.has_edge(a, b) {
                return Err(Error::NotAnEdge(a, b));
            }
        }
        Ok(self.related_unchecked(e, f))
    }

    #[inline]
    pub(crate) fn related_unchecked(&self, (u, v): Edge, (x, y): Edge) -> bool {
        let d = |a, b| self.dist.raw(a, b) as u64;
        d(u, x) + d(v, y) != d(u, y) + d(v, x)
    }

    /// Relation classes (transitive closure), each sorted, ordered by their
    /// smallest edge.
    pub fn classes(&self) -> Vec<Vec<Edge>> {
        let edges = self.graph.edges();
        let mut parent: Vec<usize> = (0..edges.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                if self.related_unchecked(edges[i], edges[j]) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut classes: Vec<Vec<Edge>> = Vec::new();
        let mut slot = vec![usize::MAX; edges.len()];
        // edges are lexicographic, so a class is created at its smallest edge
        for (i, &e) in edges.iter().enumerate() {
            let r = find(&mut parent, i);
            if slot[r] == usize::MAX {
                slot[r] = classes.len();
                classes.push(Vec::new());
            }
            classes[slot[r]].push(e);
        }
        classes
    }

    /// Whether the relation is transitive on `classes`.
    fn is_transitive_on(&self, classes: &[Vec<Edge>]) -> bool {
        classes.iter().all(|class| {
            class
                .iter()
                .enumerate()
                .all(|(i, &e)| class[i + 1..].iter().all(|&f| self.related_unchecked(e, f)))
        })
    }
}

pub fn theta_related(g: &Graph, e1: Edge, e2: Edge) -> Result<bool> {
    ThetaRelation::new(g)?.related(e1, e2)
}

pub fn theta_classes(g: &Graph) -> Result<Vec<Vec<Edge>>> {
    Ok(ThetaRelation::new(g)?.classes())
}

/// Winkler's criterion: connected, bipartite, relation transitive.
pub fn is_partial_cube(g: &Graph) -> bool {
    if g.vertex_count() == 0 || g.two_coloring().is_none() {
        return false;
    }
    match ThetaRelation::new(g) {
        Ok(rel) => rel.is_transitive_on(&rel.classes()),
        Err(_) => false,
    }
}

/// Isometric embedding with `base` labelled `0...0`. Coordinate `k` is the
/// `k`-th class of [`theta_classes`]; a vertex gets 1 there iff it lies on
/// the opposite side of that class from `base`.
pub fn embed(g: &Graph, base: usize) -> Result<LabelledPartialCube> {
    if base >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: base,
            order: g.vertex_count(),
        });
    }
    if g.two_coloring().is_none() {
        return Err(Error::NotPartialCube);
    }
    let rel = ThetaRelation::new(g).map_err(|_| Error::NotPartialCube)?;
    let classes = rel.classes();
    if !rel.is_transitive_on(&classes) {
        return Err(Error::NotPartialCube);
    }
    let d = rel.distances();
    let n = g.vertex_count();
    let mut labels = vec![BinaryLabel::zeros(classes.len()); n];
    for (k, class) in classes.iter().enumerate() {
        let (a, b) = class[0];
        let near_a = |w: usize| d.raw(a, w) < d.raw(b, w);
        let base_side = near_a(base);
        for (w, label) in labels.iter_mut().enumerate() {
            label.set(k, near_a(w) != base_side);
        }
    }
    LabelledPartialCube::with_graph(g.clone(), labels)
}

/// One class seen through the labelling: its edges, halfspaces and
/// boundary sets. Side 0 is the halfspace where coordinate `index` is 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaClassData {
    pub index: usize,
    pub edges: Vec<Edge>,
    pub w0: Vec<usize>,
    pub w1: Vec<usize>,
    pub u0: Vec<usize>,
    pub u1: Vec<usize>,
    pub peripheral0: bool,
    pub peripheral1: bool,
}

impl ThetaClassData {
    pub fn is_peripheral(&self) -> bool {
        self.peripheral0 || self.peripheral1
    }
}

pub fn theta_class_data(cube: &LabelledPartialCube, i: usize) -> Result<ThetaClassData> {
    cube.check_coordinate(i)?;
    let g = cube.graph();
    let side = |v: usize| cube.label(v).get(i);
    let edges: Vec<Edge> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| side(u) != side(v))
        .collect();
    let mut on_class = vec![false; g.vertex_count()];
    for &(u, v) in &edges {
        on_class[u] = true;
        on_class[v] = true;
    }
    let w0 = cube.halfspace(i, false);
    let w1 = cube.halfspace(i, true);
    let u0: Vec<usize> = w0.iter().copied().filter(|&v| on_class[v]).collect();
    let u1: Vec<usize> = w1.iter().copied().filter(|&v| on_class[v]).collect();
    Ok(ThetaClassData {
        index: i,
        peripheral0: u0.len() == w0.len(),
        peripheral1: u1.len() == w1.len(),
        edges,
        w0,
        w1,
        u0,
        u1,
    })
}

/// Class data for every coordinate.
pub fn all_class_data(cube: &LabelledPartialCube) -> Vec<ThetaClassData> {
    (0..cube.idim())
        .map(|i| theta_class_data(cube, i).expect("coordinate in range"))
        .collect()
}
