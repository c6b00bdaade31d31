//! Partial-cube minors: contractions and restrictions of Θ-classes,
//! exhaustive minor search, and the crossing relation between classes.
//!
//! A minor is described by one action per coordinate. Restrictions are
//! applied first (intersection of halfspaces), then every contracted or
//! restricted coordinate is projected away. Since contraction and
//! restriction commute, every minor has such a normal form.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::isomorphism::{are_isomorphic, invariant_signature};
use crate::label::BinaryLabel;
use crate::limits::Limits;
use crate::partial_cube::{LabelledPartialCube, Reduction};
use crate::theta::{self, Edge};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MinorAction {
    Keep,
    Contract,
    /// Keep the halfspace where the coordinate is 0.
    Restrict0,
    /// Keep the halfspace where the coordinate is 1.
    Restrict1,
}

impl MinorAction {
    fn symbol(self) -> char {
        match self {
            MinorAction::Keep => 'K',
            MinorAction::Contract => 'C',
            MinorAction::Restrict0 => '0',
            MinorAction::Restrict1 => '1',
        }
    }
}

/// One action per coordinate. Text form: `KC01`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MinorSpec(pub Vec<MinorAction>);

impl MinorSpec {
    pub fn identity(idim: usize) -> Self {
        MinorSpec(vec![MinorAction::Keep; idim])
    }

    pub fn single(idim: usize, i: usize, action: MinorAction) -> Self {
        let mut spec = Self::identity(idim);
        spec.0[i] = action;
        spec
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for MinorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|a| write!(f, "{}", a.symbol()))
    }
}

impl FromStr for MinorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                'K' | 'k' => Ok(MinorAction::Keep),
                'C' | 'c' => Ok(MinorAction::Contract),
                '0' => Ok(MinorAction::Restrict0),
                '1' => Ok(MinorAction::Restrict1),
                _ => Err(Error::InvalidParameter(format!(
                    "minor spec {s:?}: expected one of K, C, 0, 1, found {c:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(MinorSpec)
    }
}

pub fn apply_spec(cube: &LabelledPartialCube, spec: &MinorSpec) -> Result<Reduction> {
    if spec.len() != cube.idim() {
        return Err(Error::SpecLength {
            got: spec.len(),
            expected: cube.idim(),
        });
    }
    let survives = |l: &BinaryLabel| {
        spec.0.iter().enumerate().all(|(i, a)| match a {
            MinorAction::Restrict0 => !l.get(i),
            MinorAction::Restrict1 => l.get(i),
            _ => true,
        })
    };
    let keep: Vec<usize> = (0..spec.len())
        .filter(|&i| spec.0[i] == MinorAction::Keep)
        .collect();
    let mut labels: Vec<BinaryLabel> = cube
        .labels()
        .iter()
        .filter(|l| survives(l))
        .map(|l| l.project(&keep))
        .collect();
    if labels.is_empty() {
        return Err(Error::EmptyMinor);
    }
    labels.sort();
    labels.dedup();
    let r = LabelledPartialCube::from_labels(labels)?;
    Ok(Reduction {
        source_coords: r.source_coords.iter().map(|&j| keep[j]).collect(),
        cube: r.cube,
        source_idim: cube.idim(),
    })
}

/// Merges the two sides of class `i` along its edges.
pub fn contract_class(cube: &LabelledPartialCube, i: usize) -> Result<Reduction> {
    cube.check_coordinate(i)?;
    apply_spec(
        cube,
        &MinorSpec::single(cube.idim(), i, MinorAction::Contract),
    )
}

/// Induced subgraph on the halfspace where coordinate `i` equals `side`.
pub fn restrict_class(cube: &LabelledPartialCube, i: usize, side: bool) -> Result<Reduction> {
    cube.check_coordinate(i)?;
    let action = if side {
        MinorAction::Restrict1
    } else {
        MinorAction::Restrict0
    };
    apply_spec(cube, &MinorSpec::single(cube.idim(), i, action))
}

fn check_idim_cap(cube: &LabelledPartialCube, limits: &Limits) -> Result<()> {
    let cap = limits.idim.min(64);
    if cube.idim() > cap {
        return Err(Error::TooLarge {
            what: "isometric dimension",
            size: cube.idim(),
            cap,
        });
    }
    Ok(())
}

fn as_masks(cube: &LabelledPartialCube) -> Vec<u64> {
    cube.labels()
        .iter()
        .map(|l| l.support().iter().fold(0u64, |m, &i| m | 1 << i))
        .collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Spec keeping exactly `keep`; the other coordinates read `code` in base 3
/// (0 = contract, 1 = restrict to 0, 2 = restrict to 1), first coordinate
/// most significant.
fn spec_for(n: usize, keep: &[usize], mut code: usize) -> MinorSpec {
    let mut actions = vec![MinorAction::Keep; n];
    let others: Vec<usize> = (0..n).filter(|i| !keep.contains(i)).collect();
    for &i in others.iter().rev() {
        actions[i] = match code % 3 {
            0 => MinorAction::Contract,
            1 => MinorAction::Restrict0,
            _ => MinorAction::Restrict1,
        };
        code /= 3;
    }
    MinorSpec(actions)
}

/// Searches for a spec turning `cube` into a graph isomorphic to `target`.
///
/// Only specs keeping exactly `idim(target)` coordinates are tried: a kept
/// coordinate that becomes constant after the restrictions can be replaced
/// by restricting it to that constant, which yields the same minor.
/// Returns the first witness in enumeration order.
pub fn has_pc_minor(
    cube: &LabelledPartialCube,
    target: &Graph,
    limits: &Limits,
) -> Result<Option<MinorSpec>> {
    check_idim_cap(cube, limits)?;
    if !theta::is_partial_cube(target) {
        return Err(Error::InvalidParameter(
            "forbidden minor must be a partial cube".into(),
        ));
    }
    let k = theta::theta_classes(target)?.len();
    let n = cube.idim();
    let order = target.vertex_count();
    if k > n || order > cube.vertex_count() {
        return Ok(None);
    }
    let masks = as_masks(cube);
    let keep_sets = combinations(n, k);
    let per_set = 3usize.pow((n - k) as u32);
    let total = keep_sets.len() * per_set;

    let found = (0..total).into_par_iter().find_map_first(|idx| {
        let keep = &keep_sets[idx / per_set];
        let spec = spec_for(n, keep, idx % per_set);
        let (mut rmask, mut rval, mut kmask) = (0u64, 0u64, 0u64);
        for (i, a) in spec.0.iter().enumerate() {
            match a {
                MinorAction::Keep => kmask |= 1 << i,
                MinorAction::Restrict0 => rmask |= 1 << i,
                MinorAction::Restrict1 => {
                    rmask |= 1 << i;
                    rval |= 1 << i;
                }
                MinorAction::Contract => {}
            }
        }
        let mut images: Vec<u64> = masks
            .iter()
            .filter(|&&m| m & rmask == rval)
            .map(|&m| m & kmask)
            .collect();
        images.sort_unstable();
        images.dedup();
        if images.len() != order {
            return None;
        }
        let minor = apply_spec(cube, &spec).ok()?;
        match are_isomorphic(minor.cube.graph(), target) {
            Ok(Some(_)) => Some(spec),
            _ => None,
        }
    });
    Ok(found)
}

/// First forbidden graph (by list position) found as a minor, with its spec.
pub fn first_forbidden_minor(
    cube: &LabelledPartialCube,
    forbidden: &[Graph],
    limits: &Limits,
) -> Result<Option<(usize, MinorSpec)>> {
    for (pos, h) in forbidden.iter().enumerate() {
        if let Some(spec) = has_pc_minor(cube, h, limits)? {
            return Ok(Some((pos, spec)));
        }
    }
    Ok(None)
}

pub fn is_pc_minor_free(
    cube: &LabelledPartialCube,
    forbidden: &[Graph],
    limits: &Limits,
) -> Result<bool> {
    Ok(first_forbidden_minor(cube, forbidden, limits)?.is_none())
}

/// Canonical form of a labelled cube up to isomorphism: the smallest sorted
/// label list over all choices of base vertex and coordinate permutation.
/// `None` above `max_idim` (at most 8 is practical).
pub fn canonical_form(cube: &LabelledPartialCube, max_idim: usize) -> Option<Vec<u64>> {
    let n = cube.idim();
    if n > max_idim || n > 16 {
        return None;
    }
    let masks = as_masks(cube);
    let mut best: Option<Vec<u64>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut consider = |perm: &[usize]| {
        for &b in &masks {
            let mut img: Vec<u64> = masks
                .iter()
                .map(|&m| {
                    let x = m ^ b;
                    perm.iter()
                        .enumerate()
                        .fold(0u64, |acc, (j, &src)| acc | ((x >> src) & 1) << j)
                })
                .collect();
            img.sort_unstable();
            if best.as_ref().is_none_or(|cur| img < *cur) {
                best = Some(img);
            }
        }
    };
    // Heap's algorithm
    let mut c = vec![0usize; n];
    consider(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            consider(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    let mut key = best.unwrap_or_default();
    key.push(n as u64);
    Some(key)
}

/// Largest dimension deduplicated by exhaustive canonical forms; larger
/// cubes are bucketed by an invariant signature and compared exactly.
pub const CANONICAL_FORM_MAX_IDIM: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum DedupKey {
    Canonical(Vec<u64>),
    Signature(Vec<Vec<u32>>),
}

/// Partial cubes collected up to isomorphism.
#[derive(Clone, Debug, Default)]
pub struct MinorCollection {
    members: Vec<LabelledPartialCube>,
    buckets: HashMap<DedupKey, Vec<usize>>,
}

impl MinorCollection {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `cube` unless an isomorphic one is present; returns whether it was new.
    pub fn insert(&mut self, cube: LabelledPartialCube) -> bool {
        match canonical_form(&cube, CANONICAL_FORM_MAX_IDIM) {
            Some(key) => {
                let key = DedupKey::Canonical(key);
                if self.buckets.contains_key(&key) {
                    return false;
                }
                self.buckets.insert(key, vec![self.members.len()]);
            }
            None => {
                let key = DedupKey::Signature(invariant_signature(cube.graph()));
                let bucket = self.buckets.entry(key).or_default();
                let dup = bucket.iter().any(|&m| {
                    matches!(
                        are_isomorphic(self.members[m].graph(), cube.graph()),
                        Ok(Some(_))
                    )
                });
                if dup {
                    return false;
                }
                bucket.push(self.members.len());
            }
        }
        self.members.push(cube);
        true
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &LabelledPartialCube> {
        self.members.iter()
    }

    pub fn into_vec(self) -> Vec<LabelledPartialCube> {
        self.members
    }
}

/// All pc-minors of `cube` up to isomorphism, `cube` itself included.
pub fn pc_minors(cube: &LabelledPartialCube, limits: &Limits) -> Result<Vec<LabelledPartialCube>> {
    Ok(minor_collection(cube, limits, false)?.into_vec())
}

/// All pc-minors other than `cube` itself, up to isomorphism. Every spec
/// other than the identity lowers the dimension, so none of these is
/// isomorphic to `cube`.
pub fn proper_pc_minors(
    cube: &LabelledPartialCube,
    limits: &Limits,
) -> Result<Vec<LabelledPartialCube>> {
    Ok(minor_collection(cube, limits, true)?.into_vec())
}

fn minor_collection(
    cube: &LabelledPartialCube,
    limits: &Limits,
    proper: bool,
) -> Result<MinorCollection> {
    check_idim_cap(cube, limits)?;
    let n = cube.idim();
    let total = 4usize.pow(n as u32);
    let results: Vec<Option<LabelledPartialCube>> = (0..total)
        .into_par_iter()
        .map(|mut code| {
            let mut actions = vec![MinorAction::Keep; n];
            for a in actions.iter_mut().rev() {
                *a = match code % 4 {
                    0 => MinorAction::Keep,
                    1 => MinorAction::Contract,
                    2 => MinorAction::Restrict0,
                    _ => MinorAction::Restrict1,
                };
                code /= 4;
            }
            if proper && actions.iter().all(|&a| a == MinorAction::Keep) {
                return None;
            }
            apply_spec(cube, &MinorSpec(actions)).ok().map(|r| r.cube)
        })
        .collect();
    let mut collection = MinorCollection::new();
    for minor in results.into_iter().flatten() {
        collection.insert(minor);
    }
    Ok(collection)
}

/// Whether all four sign patterns of coordinates `i` and `j` occur.
pub fn crossing(cube: &LabelledPartialCube, i: usize, j: usize) -> Result<bool> {
    cube.check_coordinate(i)?;
    cube.check_coordinate(j)?;
    if i == j {
        return Err(Error::SameCoordinate(i));
    }
    let mut seen = [false; 4];
    for l in cube.labels() {
        seen[(l.get(i) as usize) << 1 | l.get(j) as usize] = true;
    }
    Ok(seen.iter().all(|&s| s))
}

/// Graph on the coordinates, adjacent when the classes cross.
pub fn crossing_graph(cube: &LabelledPartialCube) -> Graph {
    let n = cube.idim();
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if crossing(cube, i, j).expect("distinct coordinates in range") {
                g.add_edge(i, j).expect("in range");
            }
        }
    }
    g
}

/// A 4-cycle `u v w x` with `uv, xw` in class `ci` and `ux, vw` in class
/// `cj`, found by scanning the graph. `classes` is an edge partition such as
/// [`theta::theta_classes`].
pub fn alternating_four_cycle(
    g: &Graph,
    classes: &[Vec<Edge>],
    ci: usize,
    cj: usize,
) -> Option<[usize; 4]> {
    let mut class_of: HashMap<Edge, usize> = HashMap::new();
    for (c, class) in classes.iter().enumerate() {
        for &(a, b) in class {
            class_of.insert((a.min(b), a.max(b)), c);
        }
    }
    let class = |a: usize, b: usize| class_of.get(&(a.min(b), a.max(b))).copied();
    for &(a, b) in classes.get(ci)? {
        for (u, v) in [(a, b), (b, a)] {
            for &x in g.neighbors(u) {
                if class(u, x) != Some(cj) {
                    continue;
                }
                for &w in g.neighbors(v) {
                    if w != u
                        && g.has_edge(x, w)
                        && class(v, w) == Some(cj)
                        && class(x, w) == Some(ci)
                    {
                        return Some([u, v, w, x]);
                    }
                }
            }
        }
    }
    None
}
