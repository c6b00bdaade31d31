//! Generators for the named graphs: complete graphs, paths, cycles,
//! hypercubes, gear graphs, Fibonacci and Lucas cubes, and the small
//! partial cubes that are minimal non-daisy graphs.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::label::BinaryLabel;
use crate::partial_cube::LabelledPartialCube;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Complete,
    Path,
    Cycle,
    Hypercube,
    ComplementPath,
    ComplementCycle,
    Gear,
    FibonacciCube,
    LucasCube,
    /// `Q_n` minus `1^n`.
    QMinus,
    /// `Q_n` minus `1^n`, plus a pendant vertex at `0...01`.
    QMinusPlus,
    /// `Q_n` minus `0^n` and `1^n`.
    QMinusMinus,
    /// `P_3 □ Q_{n-2}`.
    HGraph,
    /// `H_n` minus `00...0` and `21...1`.
    HMinusMinus,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::Complete,
        Family::Path,
        Family::Cycle,
        Family::Hypercube,
        Family::ComplementPath,
        Family::ComplementCycle,
        Family::Gear,
        Family::FibonacciCube,
        Family::LucasCube,
        Family::QMinus,
        Family::QMinusPlus,
        Family::QMinusMinus,
        Family::HGraph,
        Family::HMinusMinus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Hypercube => "hypercube",
            Family::ComplementPath => "complement_path",
            Family::ComplementCycle => "complement_cycle",
            Family::Gear => "gear",
            Family::FibonacciCube => "fibonacci_cube",
            Family::LucasCube => "lucas_cube",
            Family::QMinus => "q_minus",
            Family::QMinusPlus => "q_minus_plus",
            Family::QMinusMinus => "q_minus_minus",
            Family::HGraph => "h_graph",
            Family::HMinusMinus => "h_minus_minus",
        }
    }

    /// Smallest valid size parameter.
    pub fn min_n(self) -> usize {
        match self {
            Family::Complete | Family::Hypercube => 0,
            Family::Path | Family::ComplementPath | Family::FibonacciCube => 1,
            Family::QMinus | Family::QMinusPlus | Family::HGraph => 2,
            Family::Cycle
            | Family::ComplementCycle
            | Family::Gear
            | Family::LucasCube
            | Family::QMinusMinus => 3,
            Family::HMinusMinus => 4,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family {s:?}")))
    }
}

const MAX_CUBE_DIM: usize = 20;

fn check_n(family: Family, n: usize) -> Result<()> {
    if n < family.min_n() {
        return Err(Error::InvalidParameter(format!(
            "{family} needs n >= {}, got {n}",
            family.min_n()
        )));
    }
    let exponential = !matches!(
        family,
        Family::Complete
            | Family::Path
            | Family::Cycle
            | Family::ComplementPath
            | Family::ComplementCycle
            | Family::Gear
    );
    if exponential && n > MAX_CUBE_DIM {
        return Err(Error::TooLarge {
            what: "family dimension",
            size: n,
            cap: MAX_CUBE_DIM,
        });
    }
    Ok(())
}

pub fn generate(family: Family, n: usize) -> Result<Graph> {
    check_n(family, n)?;
    Ok(match family {
        Family::Complete => complete(n),
        Family::Path => path(n),
        Family::Cycle => cycle(n),
        Family::ComplementPath => complement(&path(n)),
        Family::ComplementCycle => complement(&cycle(n)),
        Family::HGraph => h_graph(n),
        Family::HMinusMinus => {
            let h = h_graph(n);
            let (low, high) = h_minus_minus_deleted(n);
            let keep: Vec<usize> = (0..h.vertex_count())
                .filter(|&v| v != low && v != high)
                .collect();
            h.induced_subgraph(&keep)
        }
        _ => generate_labelled(family, n)?
            .expect("cube families are labelled")
            .graph()
            .clone(),
    })
}

/// The standard labelling for families defined by bit strings; `None` for
/// the others (use [`crate::theta::embed`] on those that are partial cubes).
pub fn generate_labelled(family: Family, n: usize) -> Result<Option<LabelledPartialCube>> {
    check_n(family, n)?;
    let strings = |keep: &dyn Fn(u64) -> bool| -> Vec<BinaryLabel> {
        (0..1u64 << n)
            .filter(|&m| keep(m))
            .map(|m| BinaryLabel::from_bits(&(0..n).map(|i| m >> i & 1 == 1).collect::<Vec<_>>()))
            .collect()
    };
    let full = (1u64 << n) - 1;
    let labels = match family {
        Family::Hypercube => strings(&|_| true),
        Family::FibonacciCube => strings(&|m| m & (m >> 1) == 0),
        Family::LucasCube => {
            strings(&|m| m & (m >> 1) == 0 && !(m & 1 == 1 && m >> (n - 1) & 1 == 1))
        }
        Family::QMinus => strings(&|m| m != full),
        Family::QMinusMinus => strings(&|m| m != 0 && m != full),
        Family::QMinusPlus => {
            let mut ls: Vec<BinaryLabel> = strings(&|m| m != full)
                .iter()
                .map(|l| {
                    let mut bits: Vec<bool> = l.bits().collect();
                    bits.push(false);
                    BinaryLabel::from_bits(&bits)
                })
                .collect();
            ls.push(BinaryLabel::from_set(n + 1, &[n - 1, n]));
            ls
        }
        Family::Gear => {
            let mut ls = vec![BinaryLabel::zeros(n)];
            ls.extend((0..n).map(|i| BinaryLabel::unit(n, i)));
            ls.extend((0..n).map(|i| BinaryLabel::from_set(n, &[i, (i + 1) % n])));
            ls
        }
        _ => return Ok(None),
    };
    let r = LabelledPartialCube::from_labels(labels)?;
    debug_assert!(r.dropped().is_empty());
    Ok(Some(r.cube))
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).expect("in range");
        }
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v).expect("in range");
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.add_edge(n - 1, 0).expect("in range");
    }
    g
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut h = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                h.add_edge(u, v).expect("in range");
            }
        }
    }
    h
}

/// `g □ h`; vertex `(i, j)` has index `i * |V(h)| + j`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let mut p = Graph::new(ng * nh);
    for i in 0..ng {
        for (a, b) in h.edges() {
            p.add_edge(i * nh + a, i * nh + b).expect("in range");
        }
    }
    for (a, b) in g.edges() {
        for j in 0..nh {
            p.add_edge(a * nh + j, b * nh + j).expect("in range");
        }
    }
    p
}

/// `H_n = P_3 □ Q_{n-2}`. Vertex `a * 2^(n-2) + m` is the string whose
/// ternary first symbol is `a` and whose binary tail has bit `i` of `m` at
/// tail position `i`.
pub fn h_graph(n: usize) -> Graph {
    let q = generate_labelled(Family::Hypercube, n - 2)
        .expect("valid dimension")
        .expect("labelled")
        .graph()
        .clone();
    cartesian_product(&path(3), &q)
}

/// Indices in [`h_graph`] of `00...0` and `21...1`.
pub fn h_minus_minus_deleted(n: usize) -> (usize, usize) {
    let tail = 1usize << (n - 2);
    (0, 2 * tail + tail - 1)
}
