//! Simplex graphs, daisy cubes, the five equivalent characterizations of
//! simplex graphs among median graphs, and cube/clique polynomials.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::isomorphism::{are_isomorphic, is_isomorphism, MAX_ISOMORPHISM_ORDER};
use crate::label::BinaryLabel;
use crate::limits::Limits;
use crate::median::is_median_graph;
use crate::partial_cube::{LabelledPartialCube, Reduction};
use crate::pcminor::{has_pc_minor, MinorSpec};
use crate::polynomial::Polynomial;
use crate::theta::{self, all_class_data};

/// All cliques of `g`, the empty one included, ordered by size and then
/// lexicographically.
pub fn cliques(g: &Graph) -> Vec<Vec<usize>> {
    cliques_capped(g, usize::MAX).expect("uncapped")
}

pub fn cliques_capped(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>> {
    let mut all: Vec<Vec<usize>> = vec![Vec::new()];
    let mut level: Vec<Vec<usize>> = vec![Vec::new()];
    while !level.is_empty() {
        let mut next = Vec::new();
        for c in &level {
            let start = c.last().map_or(0, |&m| m + 1);
            for v in start..g.vertex_count() {
                if c.iter().all(|&u| g.has_edge(u, v)) {
                    let mut d = c.clone();
                    d.push(v);
                    next.push(d);
                }
            }
        }
        if all.len() + next.len() > cap {
            return Err(Error::TooLarge {
                what: "clique count",
                size: all.len() + next.len(),
                cap,
            });
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    Ok(all)
}

/// `S(g)`: one vertex per clique, labelled by its characteristic vector
/// (coordinate `i` is vertex `i` of `g`); vertex order follows [`cliques`].
pub fn simplex_graph(g: &Graph, limits: &Limits) -> Result<LabelledPartialCube> {
    let n = g.vertex_count();
    let labels = cliques_capped(g, limits.cliques)?
        .iter()
        .map(|c| BinaryLabel::from_set(n, c))
        .collect();
    let r = LabelledPartialCube::from_labels(labels)?;
    debug_assert!(r.dropped().is_empty());
    Ok(r.cube)
}

/// Daisy cube on the down-closure of `generators` in `Q_n`. Coordinates
/// that are 0 throughout are dropped and reported.
pub fn daisy_generate(n: usize, generators: &[BinaryLabel]) -> Result<Reduction> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if let Some(bad) = generators.iter().find(|x| x.len() != n) {
        return Err(Error::InvalidLabels(format!(
            "generator {bad} has length {}, expected {n}",
            bad.len()
        )));
    }
    let mut seen: HashSet<BinaryLabel> = generators.iter().cloned().collect();
    let mut stack: Vec<BinaryLabel> = seen.iter().cloned().collect();
    while let Some(l) = stack.pop() {
        for i in l.support() {
            let below = l.flipped(i);
            if seen.insert(below.clone()) {
                stack.push(below);
            }
        }
    }
    let mut labels: Vec<BinaryLabel> = seen.into_iter().collect();
    labels.sort_by(|a, b| a.count_ones().cmp(&b.count_ones()).then_with(|| b.cmp(a)));
    LabelledPartialCube::from_labels(labels)
}

/// A base vertex whose relabelling makes the label set down-closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DaisyWitness {
    pub base: usize,
    pub cube: LabelledPartialCube,
}

/// Tries every vertex as the all-zero vertex. Any down-closed isometric
/// labelling has an all-zero vertex, and the labelling rooted there agrees
/// with it up to a permutation of coordinates, so this search is complete.
pub fn is_daisy(cube: &LabelledPartialCube) -> Option<DaisyWitness> {
    (0..cube.vertex_count()).find_map(|b| {
        let rebased = cube.rebased(b);
        rebased.is_down_closed().then_some(DaisyWitness {
            base: b,
            cube: rebased,
        })
    })
}

/// A graph `H` with `S(H)` isomorphic to the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preimage {
    pub graph: Graph,
    /// Vertex of degree `idim` used as the empty clique.
    pub base: usize,
    /// `isomorphism[v]`: input vertex matched to vertex `v` of `S(H)`.
    pub isomorphism: Vec<usize>,
}

/// Rebuilds `H` from a vertex `b` of degree `idim`: label the graph with
/// `b` as `0...0` and join `i`, `j` when `e_i + e_j` is a vertex; then
/// confirm `S(H)` is isomorphic to `g`.
pub fn simplex_preimage(g: &Graph, limits: &Limits) -> Result<Option<Preimage>> {
    if !is_median_graph(g) {
        return Err(Error::NotMedian);
    }
    let cube = theta::embed(g, 0)?;
    let n = cube.idim();
    let Some(base) = (0..g.vertex_count()).find(|&v| g.degree(v) == n) else {
        return Ok(None);
    };
    let rebased = cube.rebased(base);
    let mut h = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if rebased.contains(&BinaryLabel::from_set(n, &[i, j])) {
                h.add_edge(i, j)?;
            }
        }
    }
    let s = simplex_graph(&h, limits)?;
    if s.vertex_count() != g.vertex_count() {
        return Ok(None);
    }
    let isomorphism = if g.vertex_count() <= MAX_ISOMORPHISM_ORDER {
        are_isomorphic(s.graph(), g)?
    } else {
        // beyond search range: the characteristic-vector correspondence is
        // the candidate map, checked edge by edge
        s.labels()
            .iter()
            .map(|l| rebased.vertex_of(l))
            .collect::<Option<Vec<usize>>>()
            .filter(|phi| is_isomorphism(s.graph(), g, phi))
    };
    Ok(isomorphism.map(|isomorphism| Preimage {
        graph: h,
        base,
        isomorphism,
    }))
}

/// The five conditions evaluated independently, plus witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem1Report {
    pub is_median: bool,
    pub is_partial_cube: bool,
    pub idim: Option<usize>,
    /// (i) simplex graph, by constructing the preimage.
    pub simplex: bool,
    pub preimage: Option<Graph>,
    /// (ii) daisy cube.
    pub daisy: bool,
    pub daisy_base: Option<usize>,
    /// (iii) no P4 pc-minor.
    pub p4_free: bool,
    pub p4_witness: Option<MinorSpec>,
    /// (iv) every class peripheral on at least one side.
    pub all_peripheral: bool,
    pub non_peripheral_class: Option<usize>,
    /// (v) some vertex has degree `idim`.
    pub degree_equals_idim: bool,
    pub degree_witness: Option<usize>,
}

impl Theorem1Report {
    pub fn conditions(&self) -> [bool; 5] {
        [
            self.simplex,
            self.daisy,
            self.p4_free,
            self.all_peripheral,
            self.degree_equals_idim,
        ]
    }

    pub fn conditions_agree(&self) -> bool {
        let c = self.conditions();
        c.iter().all(|&x| x == c[0])
    }
}

impl fmt::Display for Theorem1Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
        writeln!(f, "median: {}", self.is_median)?;
        writeln!(
            f,
            "partial-cube: {} idim={}",
            self.is_partial_cube,
            opt(self.idim)
        )?;
        match &self.preimage {
            Some(h) => writeln!(
                f,
                "(i) simplex: {} preimage={} vertices {:?}",
                self.simplex,
                h.vertex_count(),
                h.edges()
            )?,
            None => writeln!(f, "(i) simplex: {}", self.simplex)?,
        }
        writeln!(
            f,
            "(ii) daisy: {} base={}",
            self.daisy,
            opt(self.daisy_base)
        )?;
        writeln!(
            f,
            "(iii) p4-free: {} witness={}",
            self.p4_free,
            self.p4_witness
                .as_ref()
                .map_or("-".to_string(), |s| s.to_string())
        )?;
        writeln!(
            f,
            "(iv) peripheral: {} non-peripheral-class={}",
            self.all_peripheral,
            opt(self.non_peripheral_class)
        )?;
        write!(
            f,
            "(v) deg-idim: {} vertex={}",
            self.degree_equals_idim,
            opt(self.degree_witness)
        )
    }
}

/// Evaluates the five conditions with separate algorithms. On a median
/// graph they must coincide; disagreement is reported as an error.
pub fn theorem1_report(g: &Graph, limits: &Limits) -> Result<Theorem1Report> {
    let is_median = is_median_graph(g);
    let mut report = Theorem1Report {
        is_median,
        is_partial_cube: theta::is_partial_cube(g),
        idim: None,
        simplex: false,
        preimage: None,
        daisy: false,
        daisy_base: None,
        p4_free: false,
        p4_witness: None,
        all_peripheral: false,
        non_peripheral_class: None,
        degree_equals_idim: false,
        degree_witness: None,
    };
    if !report.is_partial_cube {
        return Ok(report);
    }
    let cube = theta::embed(g, 0)?;
    let n = cube.idim();
    report.idim = Some(n);

    if is_median {
        report.preimage = simplex_preimage(g, limits)?.map(|p| p.graph);
        report.simplex = report.preimage.is_some();
    }

    report.daisy_base = is_daisy(&cube).map(|w| w.base);
    report.daisy = report.daisy_base.is_some();

    let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)])?;
    report.p4_witness = has_pc_minor(&cube, &p4, limits)?;
    report.p4_free = report.p4_witness.is_none();

    report.non_peripheral_class = all_class_data(&cube)
        .iter()
        .find(|d| !d.is_peripheral())
        .map(|d| d.index);
    report.all_peripheral = report.non_peripheral_class.is_none();

    report.degree_witness = (0..g.vertex_count()).find(|&v| g.degree(v) == n);
    report.degree_equals_idim = report.degree_witness.is_some();

    if is_median && !report.conditions_agree() {
        return Err(Error::ConditionsDisagree(
            report.to_string().replace('\n', "; "),
        ));
    }
    Ok(report)
}

/// `C(G, x)`: coefficient `i` counts induced `i`-cubes, each found from its
/// coordinatewise-minimal corner as a coordinate subcube.
pub fn cube_polynomial(cube: &LabelledPartialCube) -> Polynomial {
    let mut counts = vec![0u64; cube.idim() + 1];
    for l in cube.labels() {
        let up: Vec<usize> = (0..cube.idim())
            .filter(|&i| !l.get(i) && cube.contains(&l.flipped(i)))
            .collect();
        grow_subcubes(cube, &up, 0, vec![l.clone()], &mut counts);
    }
    Polynomial::new(counts)
}

fn grow_subcubes(
    cube: &LabelledPartialCube,
    up: &[usize],
    from: usize,
    corners: Vec<BinaryLabel>,
    counts: &mut [u64],
) {
    // corners.len() == 2^dim
    counts[corners.len().trailing_zeros() as usize] += 1;
    for (k, &i) in up.iter().enumerate().skip(from) {
        let lifted: Vec<BinaryLabel> = corners.iter().map(|c| c.flipped(i)).collect();
        if lifted.iter().all(|c| cube.contains(c)) {
            let mut next = corners.clone();
            next.extend(lifted);
            grow_subcubes(cube, up, k + 1, next, counts);
        }
    }
}

/// `Cl(G, x)`: coefficient `i` counts cliques of size `i`, with `a_0 = 1`.
pub fn clique_polynomial(g: &Graph, limits: &Limits) -> Result<Polynomial> {
    let mut counts = vec![0u64; g.vertex_count() + 1];
    for c in cliques_capped(g, limits.cliques)? {
        counts[c.len()] += 1;
    }
    Ok(Polynomial::new(counts))
}
