//! Linear hypergraphs: model, validation and the transformations used before
//! building auxiliary graphs.

mod generate;
mod parse;

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use generate::{generate, n3_classes, Family};
pub use parse::parse_hypergraph;

/// A hypergraph with named vertices and an ordered edge list.
///
/// Edges are stored as ascending lists of vertex indices, and vertex indices
/// follow first-appearance order, so the `j`-th entry of edge `i` is the
/// clique vertex `v_{i,j}` of the auxiliary graphs. Linearity is not enforced
/// on construction; see [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearHypergraph {
    n: usize,
    vertices: Vec<String>,
    edges: Vec<Vec<usize>>,
}

impl LinearHypergraph {
    /// Builds a hypergraph from vertex names and index lists.
    ///
    /// Every edge must be a nonempty set of valid indices and every vertex
    /// must lie on some edge.
    pub fn new(n: usize, vertices: Vec<String>, edges: Vec<Vec<usize>>) -> Result<Self> {
        for (index, edge) in edges.iter().enumerate() {
            if edge.is_empty() {
                return Err(Error::EmptyEdge { index: index + 1 });
            }
        }
        Self::new_allowing_empty(n, vertices, edges)
    }

    pub(crate) fn new_allowing_empty(
        n: usize,
        vertices: Vec<String>,
        edges: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("n must be positive".into()));
        }
        let mut used = vec![false; vertices.len()];
        let mut sorted_edges = Vec::with_capacity(edges.len());
        for (index, mut edge) in edges.into_iter().enumerate() {
            edge.sort_unstable();
            for w in edge.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::DuplicateVertex {
                        line: index + 1,
                        vertex: vertices[w[0]].clone(),
                    });
                }
            }
            for &v in &edge {
                if v >= vertices.len() {
                    return Err(Error::Precondition(format!(
                        "edge {} refers to unknown vertex {v}",
                        index + 1
                    )));
                }
                used[v] = true;
            }
            sorted_edges.push(edge);
        }
        if let Some(v) = used.iter().position(|u| !u) {
            return Err(Error::Precondition(format!(
                "vertex {:?} lies on no edge",
                vertices[v]
            )));
        }
        Ok(LinearHypergraph {
            n,
            vertices,
            edges: sorted_edges,
        })
    }

    /// Builds a hypergraph from edges given as vertex names, interning names
    /// in first-appearance order.
    pub fn from_named_edges<S: AsRef<str>>(n: usize, edges: &[Vec<S>]) -> Result<Self> {
        let mut builder = Builder::default();
        let edges = edges
            .iter()
            .map(|e| e.iter().map(|name| builder.intern(name.as_ref())).collect())
            .collect();
        Self::new(n, builder.names, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// Edge indices containing each vertex, ascending.
    pub fn incidences(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertices.len()];
        for (i, edge) in self.edges.iter().enumerate() {
            for &v in edge {
                inc[v].push(i);
            }
        }
        inc
    }

    /// Position of vertex `v` inside edge `i`, if present.
    pub fn position_in_edge(&self, i: usize, v: usize) -> Option<usize> {
        self.edges[i].binary_search(&v).ok()
    }

    pub fn is_standard_form(&self) -> bool {
        validate(self).is_standard_form
    }

    /// Returns an error unless the hypergraph is linear, `n`-uniform and has
    /// exactly `n` edges.
    pub fn require_standard_form(&self) -> Result<()> {
        let report = validate(self);
        if report.is_standard_form {
            Ok(())
        } else {
            let reason = report
                .violations
                .first()
                .map(|v| v.reason.clone())
                .unwrap_or_default();
            Err(Error::NotStandardForm(reason))
        }
    }

    pub fn to_json(&self) -> CanonicalHypergraph {
        CanonicalHypergraph {
            n: self.n,
            vertices: self.vertices.clone(),
            edges: self.edges.clone(),
        }
    }

    pub fn from_json(value: CanonicalHypergraph) -> Result<Self> {
        Self::new_allowing_empty(value.n, value.vertices, value.edges)
    }

    /// Text form accepted by [`parse_hypergraph`]. Empty edges cannot be
    /// written in this format.
    pub fn to_text(&self) -> Result<String> {
        let mut out = format!("n={}\n", self.n);
        for (index, edge) in self.edges.iter().enumerate() {
            if edge.is_empty() {
                return Err(Error::EmptyEdge { index: index + 1 });
            }
            let names: Vec<&str> = edge.iter().map(|&v| self.vertices[v].as_str()).collect();
            out.push_str(&names.join(" "));
            out.push('\n');
        }
        Ok(out)
    }
}

/// Canonical JSON echo of a hypergraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalHypergraph {
    pub n: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<Vec<usize>>,
}

#[derive(Default)]
pub(crate) struct Builder {
    pub(crate) names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Builder {
    pub(crate) fn intern(&mut self, name: &str) -> usize {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        let i = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), i);
        i
    }
}

/// Degree `d(v)` of every vertex, indexed like [`LinearHypergraph::vertices`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    names: Vec<String>,
    degrees: Vec<usize>,
}

impl DegreeProfile {
    pub fn degree(&self, vertex: usize) -> usize {
        self.degrees[vertex]
    }

    pub fn degree_of(&self, name: &str) -> Option<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| self.degrees[i])
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn total(&self) -> usize {
        self.degrees.iter().sum()
    }

    pub fn to_map(&self) -> BTreeMap<String, usize> {
        self.names.iter().cloned().zip(self.degrees.iter().copied()).collect()
    }
}

pub fn degree_profile(h: &LinearHypergraph) -> DegreeProfile {
    let mut degrees = vec![0; h.vertices.len()];
    for edge in &h.edges {
        for &v in edge {
            degrees[v] += 1;
        }
    }
    DegreeProfile {
        names: h.vertices.clone(),
        degrees,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// 1-based edge indices involved.
    pub edges: Vec<usize>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub is_linear: bool,
    pub is_uniform: bool,
    pub is_standard_form: bool,
    pub violations: Vec<Violation>,
}

/// Checks linearity, uniformity and standard form.
pub fn validate(h: &LinearHypergraph) -> ValidationReport {
    let mut violations = Vec::new();
    let mut is_linear = true;
    for i in 0..h.edges.len() {
        for k in i + 1..h.edges.len() {
            let shared = intersection_size(&h.edges[i], &h.edges[k]);
            if shared > 1 {
                is_linear = false;
                violations.push(Violation {
                    edges: vec![i + 1, k + 1],
                    reason: format!("edges {} and {} share {shared} vertices", i + 1, k + 1),
                });
            }
        }
    }
    let is_uniform = h.edges.windows(2).all(|w| w[0].len() == w[1].len());
    let mut sizes_ok = true;
    for (i, edge) in h.edges.iter().enumerate() {
        if edge.len() != h.n {
            sizes_ok = false;
            violations.push(Violation {
                edges: vec![i + 1],
                reason: format!("edge {} has size {}, expected {}", i + 1, edge.len(), h.n),
            });
        }
    }
    let count_ok = h.edges.len() == h.n;
    if !count_ok {
        violations.push(Violation {
            edges: vec![],
            reason: format!("{} edges, expected n={}", h.edges.len(), h.n),
        });
    }
    ValidationReport {
        is_linear,
        is_uniform,
        is_standard_form: is_linear && is_uniform && sizes_ok && count_ok,
        violations,
    }
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut k, mut shared) = (0, 0, 0);
    while i < a.len() && k < b.len() {
        match a[i].cmp(&b[k]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => k += 1,
            std::cmp::Ordering::Equal => {
                shared += 1;
                i += 1;
                k += 1;
            }
        }
    }
    shared
}

fn require_linear(h: &LinearHypergraph) -> Result<()> {
    for i in 0..h.edges.len() {
        for k in i + 1..h.edges.len() {
            let shared = intersection_size(&h.edges[i], &h.edges[k]);
            if shared > 1 {
                return Err(Error::NotLinear {
                    first: i + 1,
                    second: k + 1,
                    shared,
                });
            }
        }
    }
    Ok(())
}

/// Dual hypergraph: dual vertex `i` (named `"i"`, 1-based) per edge `F_i`, and
/// one dual edge `H_v` per vertex `v` listing the edges through `v`.
///
/// The dual's `n` is the number of dual vertices.
pub fn dualize(h: &LinearHypergraph) -> Result<LinearHypergraph> {
    require_linear(h)?;
    let names = (1..=h.edges.len()).map(|i| i.to_string()).collect();
    LinearHypergraph::new(h.edges.len().max(1), names, h.incidences())
}

/// Removes every vertex of degree 1 in a single pass.
///
/// Edge identities are kept, so edges may shrink or become empty. Returns the
/// derived hypergraph and the removed vertex names in vertex order.
pub fn strip_degree_one(h: &LinearHypergraph) -> (LinearHypergraph, Vec<String>) {
    let profile = degree_profile(h);
    let mut remap = vec![usize::MAX; h.vertices.len()];
    let mut kept = Vec::new();
    let mut removed = Vec::new();
    for (v, name) in h.vertices.iter().enumerate() {
        if profile.degree(v) == 1 {
            removed.push(name.clone());
        } else {
            remap[v] = kept.len();
            kept.push(name.clone());
        }
    }
    let edges = h
        .edges
        .iter()
        .map(|e| {
            e.iter()
                .filter(|&&v| remap[v] != usize::MAX)
                .map(|&v| remap[v])
                .collect()
        })
        .collect();
    let derived = LinearHypergraph::new_allowing_empty(h.n, kept, edges)
        .expect("filtering a valid hypergraph keeps it valid");
    (derived, removed)
}

pub(crate) const PAD_PREFIX: &str = "_p";

/// Pads to standard form: each edge grows to size `n` with fresh degree-1
/// vertices and `n - m` fresh disjoint edges are appended.
///
/// Fresh vertices are named `_p<k>` with `k` counting up from one past the
/// largest such name already present.
pub fn uniformize(h: &LinearHypergraph, n: usize) -> Result<LinearHypergraph> {
    require_linear(h)?;
    if n == 0 {
        return Err(Error::Uniformize("n must be positive".into()));
    }
    if h.edges.len() > n {
        return Err(Error::Uniformize(format!(
            "{} edges exceed n={n}",
            h.edges.len()
        )));
    }
    if let Some((i, e)) = h.edges.iter().enumerate().find(|(_, e)| e.len() > n) {
        return Err(Error::Uniformize(format!(
            "edge {} has size {} > n={n}",
            i + 1,
            e.len()
        )));
    }
    let mut counter = h
        .vertices
        .iter()
        .filter_map(|v| v.strip_prefix(PAD_PREFIX)?.parse::<u64>().ok())
        .max()
        .map_or(0, |k| k + 1);
    let mut vertices = h.vertices.clone();
    let mut fresh = |vertices: &mut Vec<String>| {
        vertices.push(format!("{PAD_PREFIX}{counter}"));
        counter += 1;
        vertices.len() - 1
    };
    let mut edges = h.edges.clone();
    for edge in edges.iter_mut() {
        while edge.len() < n {
            edge.push(fresh(&mut vertices));
        }
    }
    while edges.len() < n {
        let edge = (0..n).map(|_| fresh(&mut vertices)).collect();
        edges.push(edge);
    }
    LinearHypergraph::new(n, vertices, edges)
}
