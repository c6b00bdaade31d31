//! Abstract simplicial complexes stored by their facets, the median
//! operator `M(A,B,C) = (A∩B) ∪ (A∩C) ∪ (B∩C)`, and realization of a
//! complex as the clique complex of a graph.

use std::collections::HashSet;

use crate::cubes::cliques_capped;
use crate::error::{Error, Result};
use crate::families::complement;
use crate::graph::Graph;
use crate::limits::Limits;

/// A face: strictly increasing ground elements, 0-based.
pub type Face = Vec<usize>;

/// Downward-closed family of subsets of `0..ground_size`, kept as its
/// inclusion-maximal members.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground_size: usize,
    facets: Vec<Face>,
}

fn normalize(set: &[usize]) -> Face {
    let mut f = set.to_vec();
    f.sort_unstable();
    f.dedup();
    f
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

fn intersect(a: &[usize], b: &[usize]) -> Face {
    a.iter()
        .copied()
        .filter(|x| b.binary_search(x).is_ok())
        .collect()
}

/// `(A∩B) ∪ (A∩C) ∪ (B∩C)`: the elements lying in at least two of the sets.
pub fn m_operator(a: &[usize], b: &[usize], c: &[usize]) -> Face {
    let (a, b, c) = (normalize(a), normalize(b), normalize(c));
    let mut out = intersect(&a, &b);
    out.extend(intersect(&a, &c));
    out.extend(intersect(&b, &c));
    normalize(&out)
}

impl SimplicialComplex {
    /// Complex generated by `sets`; only the maximal members are stored.
    pub fn from_facets(ground_size: usize, sets: &[Vec<usize>]) -> Result<Self> {
        let mut sets: Vec<Face> = sets.iter().map(|s| normalize(s)).collect();
        for s in &sets {
            if let Some(&e) = s.iter().find(|&&e| e >= ground_size) {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    ground: ground_size,
                });
            }
        }
        sets.sort();
        sets.dedup();
        let facets: Vec<Face> = sets
            .iter()
            .filter(|s| !sets.iter().any(|t| t.len() > s.len() && is_subset(s, t)))
            .cloned()
            .collect();
        Ok(SimplicialComplex {
            ground_size,
            facets,
        })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Whether the complex has no faces at all (not even the empty one).
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_face(&self, set: &[usize]) -> bool {
        let set = normalize(set);
        self.facets.iter().any(|f| is_subset(&set, f))
    }

    /// Every face, ordered by size and then lexicographically.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen: HashSet<Face> = HashSet::new();
        for f in &self.facets {
            for mask in 0u64..(1 << f.len()) {
                seen.insert(
                    f.iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e)
                        .collect(),
                );
            }
        }
        let mut faces: Vec<Face> = seen.into_iter().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        faces
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MedianPropertyCheck {
    pub holds: bool,
    /// First triple (in face or facet order) whose `M` is not a face.
    pub witness: Option<[Face; 3]>,
}

/// Median property over all face triples, or over facet triples when
/// `weak` is set.
pub fn check_median_property(
    complex: &SimplicialComplex,
    weak: bool,
    limits: &Limits,
) -> Result<MedianPropertyCheck> {
    let members: Vec<Face> = if weak {
        complex.facets.clone()
    } else {
        if complex.facets.iter().any(|f| f.len() >= 63) {
            return Err(Error::TooLarge {
                what: "facet size",
                size: complex.facets.iter().map(Vec::len).max().unwrap_or(0),
                cap: 62,
            });
        }
        complex.faces()
    };
    let m = members.len();
    let triples = m * (m + 1) / 2 * (m + 2) / 3;
    if !weak && triples > limits.face_triples {
        return Err(Error::TooLarge {
            what: "face triple count",
            size: triples,
            cap: limits.face_triples,
        });
    }
    let face_set: HashSet<&Face> = members.iter().collect();
    let member = |s: &Face| {
        if weak {
            complex.is_face(s)
        } else {
            face_set.contains(s)
        }
    };
    for i in 0..m {
        for j in i..m {
            for k in j..m {
                let med = m_operator(&members[i], &members[j], &members[k]);
                if !member(&med) {
                    return Ok(MedianPropertyCheck {
                        holds: false,
                        witness: Some([members[i].clone(), members[j].clone(), members[k].clone()]),
                    });
                }
            }
        }
    }
    Ok(MedianPropertyCheck {
        holds: true,
        witness: None,
    })
}

/// Complex of all cliques of `g`; facets are the maximal cliques.
pub fn clique_complex(g: &Graph, limits: &Limits) -> Result<SimplicialComplex> {
    let all = cliques_capped(g, limits.cliques)?;
    SimplicialComplex::from_facets(g.vertex_count(), &all)
}

/// Complex of all independent sets of `g`.
pub fn independence_complex(g: &Graph, limits: &Limits) -> Result<SimplicialComplex> {
    clique_complex(&complement(g), limits)
}

/// A graph whose clique complex is the given complex, up to ground
/// elements that lie in no face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub graph: Graph,
    /// `elements[v]`: ground element represented by vertex `v`.
    pub elements: Vec<usize>,
}

impl Realization {
    /// Clique complex of the graph, written over the original ground set.
    pub fn clique_complex(&self, ground_size: usize, limits: &Limits) -> Result<SimplicialComplex> {
        let mapped: Vec<Face> = cliques_capped(&self.graph, limits.cliques)?
            .iter()
            .map(|c| c.iter().map(|&v| self.elements[v]).collect())
            .collect();
        SimplicialComplex::from_facets(ground_size, &mapped)
    }
}

/// Candidate graph: vertices are the singleton faces, edges the 2-element
/// faces. The complex is a clique complex iff every clique of the candidate
/// is a face. `None` on failure.
pub fn realize_as_clique_complex(
    complex: &SimplicialComplex,
    limits: &Limits,
) -> Result<Option<Realization>> {
    let elements: Vec<usize> = (0..complex.ground_size)
        .filter(|&e| complex.is_face(&[e]))
        .collect();
    let mut graph = Graph::new(elements.len());
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            if complex.is_face(&[elements[i], elements[j]]) {
                graph.add_edge(i, j)?;
            }
        }
    }
    let ok = cliques_capped(&graph, limits.cliques)?
        .iter()
        .all(|c| complex.is_face(&c.iter().map(|&v| elements[v]).collect::<Vec<_>>()));
    Ok(ok.then_some(Realization { graph, elements }))
}
