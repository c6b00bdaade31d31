//! Finite simple undirected graphs on dense vertex indices, with BFS
//! distances and geodesic intervals.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A finite simple undirected graph on vertices `0..vertex_count`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts `uv`; inserting an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
            self.edge_count += 1;
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut h = Graph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    h.add_edge(i, j).expect("indices are in range");
                }
            }
        }
        h
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.vertex_count()];
        let mut count = 0;
        for s in 0..self.vertex_count() {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// A proper 2-colouring if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let n = self.vertex_count();
        let mut color = vec![u8::MAX; n];
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    /// `(bipartite, connected)`.
    pub fn is_bipartite_connected(&self) -> (bool, bool) {
        (self.two_coloring().is_some(), self.is_connected())
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        DistanceMatrix::new(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.vertex_count(), self.edges())
    }
}

/// Free-function form of [`Graph::is_bipartite_connected`].
pub fn is_bipartite_connected(g: &Graph) -> (bool, bool) {
    g.is_bipartite_connected()
}

/// All-pairs shortest-path distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut data = vec![Self::UNREACHABLE; n * n];
        for s in 0..n {
            for (t, d) in g.bfs(s).into_iter().enumerate() {
                if let Some(d) = d {
                    data[s * n + t] = d;
                }
            }
        }
        DistanceMatrix { n, data }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        let d = self.data[u * self.n + v];
        (d != Self::UNREACHABLE).then_some(d)
    }

    /// Raw entry, [`Self::UNREACHABLE`] for different components.
    #[inline]
    pub fn raw(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn is_connected(&self) -> bool {
        !self.data.contains(&Self::UNREACHABLE)
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    /// `{x : d(u,x) + d(x,v) = d(u,v)}`, in increasing order.
    pub fn interval(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        let duv = self.get(u, v).ok_or(Error::Disconnected(u, v))?;
        Ok((0..self.n)
            .filter(|&x| {
                let (a, b) = (self.raw(u, x), self.raw(x, v));
                a != Self::UNREACHABLE && b != Self::UNREACHABLE && a + b == duv
            })
            .collect())
    }
}

pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    DistanceMatrix::new(g)
}

/// Vertices lying on some shortest `u`-`v` path.
pub fn interval(g: &Graph, u: usize, v: usize) -> Result<Vec<usize>> {
    for w in [u, v] {
        if w >= g.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: w,
                order: g.vertex_count(),
            });
        }
    }
    g.distance_matrix().interval(u, v)
}
