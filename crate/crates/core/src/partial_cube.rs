//! Graphs carrying an isometric hypercube labelling.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::label::BinaryLabel;

/// A partial cube together with an isometric embedding into `Q_idim`.
///
/// Invariants: labels are pairwise distinct and all of length `idim`;
/// Hamming distance equals graph distance; label pairs at Hamming distance
/// one are exactly the edges; no coordinate is constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelledPartialCube {
    graph: Graph,
    labels: Vec<BinaryLabel>,
    idim: usize,
    index: HashMap<BinaryLabel, usize>,
}

/// Result of an operation that may drop coordinates.
///
/// `source_coords[j]` is the input coordinate that became coordinate `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub cube: LabelledPartialCube,
    pub source_coords: Vec<usize>,
    pub source_idim: usize,
}

impl Reduction {
    /// Input coordinates that do not survive.
    pub fn dropped(&self) -> Vec<usize> {
        (0..self.source_idim)
            .filter(|c| !self.source_coords.contains(c))
            .collect()
    }
}

impl LabelledPartialCube {
    /// Builds the cube on `labels`, joining labels at Hamming distance one.
    /// Constant coordinates are removed and reported.
    pub fn from_labels(labels: Vec<BinaryLabel>) -> Result<Reduction> {
        let Some(first) = labels.first() else {
            return Err(Error::InvalidLabels("no labels".into()));
        };
        let len = first.len();
        if let Some(bad) = labels.iter().find(|l| l.len() != len) {
            return Err(Error::InvalidLabels(format!(
                "label {bad} has length {}, expected {len}",
                bad.len()
            )));
        }
        let kept: Vec<usize> = (0..len)
            .filter(|&i| {
                let b = first.get(i);
                labels.iter().any(|l| l.get(i) != b)
            })
            .collect();
        let labels: Vec<BinaryLabel> = if kept.len() == len {
            labels
        } else {
            labels.iter().map(|l| l.project(&kept)).collect()
        };
        let cube = Self::from_normalized_labels(labels)?;
        Ok(Reduction {
            cube,
            source_coords: kept,
            source_idim: len,
        })
    }

    /// Builds the cube on labels that already have no constant coordinate.
    pub(crate) fn from_normalized_labels(labels: Vec<BinaryLabel>) -> Result<Self> {
        let idim = labels.first().map_or(0, BinaryLabel::len);
        let mut index = HashMap::with_capacity(labels.len());
        for (v, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), v).is_some() {
                return Err(Error::InvalidLabels(format!("duplicate label {l}")));
            }
        }
        let mut graph = Graph::new(labels.len());
        for (v, l) in labels.iter().enumerate() {
            for i in 0..idim {
                if let Some(&w) = index.get(&l.flipped(i)) {
                    if v < w {
                        graph.add_edge(v, w)?;
                    }
                }
            }
        }
        let cube = LabelledPartialCube {
            graph,
            labels,
            idim,
            index,
        };
        cube.check_isometry()?;
        Ok(cube)
    }

    /// Attaches `labels` to an existing graph, checking every invariant.
    pub fn with_graph(graph: Graph, labels: Vec<BinaryLabel>) -> Result<Self> {
        if graph.vertex_count() != labels.len() {
            return Err(Error::InvalidLabels(format!(
                "{} labels for {} vertices",
                labels.len(),
                graph.vertex_count()
            )));
        }
        let cube = Self::from_normalized_labels(labels)?;
        if cube.graph != graph {
            return Err(Error::InvalidLabels(
                "Hamming-distance-one pairs differ from the edge set".into(),
            ));
        }
        cube.validate()?;
        Ok(cube)
    }

    fn check_isometry(&self) -> Result<()> {
        for s in 0..self.labels.len() {
            for (t, d) in self.graph.bfs(s).into_iter().enumerate() {
                let h = self.labels[s].hamming(&self.labels[t]);
                if d != Some(h as u32) {
                    return Err(Error::InvalidLabels(format!(
                        "labels {} and {} are at Hamming distance {h} but graph distance {}",
                        self.labels[s],
                        self.labels[t],
                        d.map_or("inf".to_string(), |d| d.to_string())
                    )));
                }
            }
        }
        Ok(())
    }

    /// Re-checks every invariant.
    pub fn validate(&self) -> Result<()> {
        if self.labels.iter().any(|l| l.len() != self.idim) {
            return Err(Error::InvalidLabels("inconsistent label lengths".into()));
        }
        if self.index.len() != self.labels.len() {
            return Err(Error::InvalidLabels("duplicate labels".into()));
        }
        for i in 0..self.idim {
            let b = self.labels[0].get(i);
            if self.labels.iter().all(|l| l.get(i) == b) {
                return Err(Error::InvalidLabels(format!("coordinate {i} is constant")));
            }
        }
        for (u, v) in self.graph.edges() {
            if self.labels[u].hamming(&self.labels[v]) != 1 {
                return Err(Error::InvalidLabels(format!(
                    "edge {u}-{v} is not a unit step"
                )));
            }
        }
        self.check_isometry()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> &[BinaryLabel] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &BinaryLabel {
        &self.labels[v]
    }

    pub fn idim(&self) -> usize {
        self.idim
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertex_of(&self, label: &BinaryLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn contains(&self, label: &BinaryLabel) -> bool {
        self.index.contains_key(label)
    }

    /// Labels sorted, for order-independent comparison.
    pub fn label_set(&self) -> Vec<BinaryLabel> {
        let mut ls = self.labels.clone();
        ls.sort();
        ls
    }

    /// Same graph, relabelled so that `base` gets the all-zero label.
    pub fn rebased(&self, base: usize) -> Self {
        let shift = self.labels[base].clone();
        let labels: Vec<BinaryLabel> = self.labels.iter().map(|l| l.xor(&shift)).collect();
        let index = labels.iter().cloned().zip(0..).collect();
        LabelledPartialCube {
            graph: self.graph.clone(),
            labels,
            idim: self.idim,
            index,
        }
    }

    /// Whether the label set is closed under the coordinatewise order `<=`.
    pub fn is_down_closed(&self) -> bool {
        // closure under removing single 1-bits implies closure under <=
        self.labels.iter().all(|l| {
            (0..self.idim)
                .filter(|&i| l.get(i))
                .all(|i| self.index.contains_key(&l.flipped(i)))
        })
    }

    /// Vertices whose label has coordinate `i` equal to `side`.
    pub fn halfspace(&self, i: usize, side: bool) -> Vec<usize> {
        (0..self.labels.len())
            .filter(|&v| self.labels[v].get(i) == side)
            .collect()
    }

    pub(crate) fn check_coordinate(&self, i: usize) -> Result<()> {
        if i >= self.idim {
            Err(Error::CoordinateOutOfRange {
                coordinate: i,
                idim: self.idim,
            })
        } else {
            Ok(())
        }
    }
}
