//! Auxiliary graphs `G1(H)` and `G2(H)`.
//!
//! Both consist of `n` disjoint base cliques `K_n`, one per edge `F_i`, whose
//! vertices are labelled by the vertices of `F_i`. Copies of the same
//! hypergraph vertex are tied together by an identifier spanning tree. In
//! `G1` every tree edge becomes a bundle of `n - 1` parallel identifier
//! edges; in `G2` a tree edge `v_{i,j} v_{k,l}` with `i < k` becomes the star
//! `{v_{i,j} v_{k,t} : t != l}` centred in the lower clique.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{degree_profile, LinearHypergraph};
use crate::index::CliqueVertex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AuxKind {
    G1,
    G2,
}

/// Spanning tree on the copies of one hypergraph vertex.
///
/// Edges are stored with the lower clique index first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentifierTree {
    pub vertex: usize,
    pub edges: Vec<(CliqueVertex, CliqueVertex)>,
}

/// One identifier tree per hypergraph vertex of degree at least 2, in vertex
/// order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IdentifierTreeSet {
    pub trees: Vec<IdentifierTree>,
}

impl IdentifierTreeSet {
    pub fn edges(&self) -> impl Iterator<Item = (CliqueVertex, CliqueVertex)> + '_ {
        self.trees.iter().flat_map(|t| t.edges.iter().copied())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IdentifierEdge {
    pub u: CliqueVertex,
    pub v: CliqueVertex,
    pub mult: usize,
}

/// A single oriented-able edge of the auxiliary graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EdgeInstance {
    pub u: CliqueVertex,
    pub v: CliqueVertex,
    pub copy: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxGraph {
    kind: AuxKind,
    n: usize,
    labels: Vec<Vec<usize>>,
    trees: IdentifierTreeSet,
    identifier_edges: Vec<IdentifierEdge>,
}

impl AuxGraph {
    pub fn kind(&self) -> AuxKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `labels[i][j]` is the hypergraph vertex carried by `v_{i,j}`.
    pub fn labels(&self) -> &[Vec<usize>] {
        &self.labels
    }

    pub fn label(&self, v: CliqueVertex) -> usize {
        self.labels[v.clique][v.position]
    }

    pub fn trees(&self) -> &IdentifierTreeSet {
        &self.trees
    }

    pub fn identifier_edges(&self) -> &[IdentifierEdge] {
        &self.identifier_edges
    }

    /// The tree edge joining cliques `i < k`, if any. Linearity allows at
    /// most one.
    pub fn tree_edge_between(&self, i: usize, k: usize) -> Option<(CliqueVertex, CliqueVertex)> {
        self.trees
            .edges()
            .find(|(a, b)| a.clique == i && b.clique == k)
    }

    pub fn clique_vertices(&self) -> impl Iterator<Item = CliqueVertex> + '_ {
        let n = self.n;
        (0..n).flat_map(move |i| (0..n).map(move |j| CliqueVertex::new(i, j)))
    }

    /// Edges of the base cliques, `(v_{i,j}, v_{i,j'})` with `j < j'`.
    pub fn clique_edges(&self) -> impl Iterator<Item = (CliqueVertex, CliqueVertex)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |i| {
            (0..n).flat_map(move |j| {
                (j + 1..n).map(move |l| (CliqueVertex::new(i, j), CliqueVertex::new(i, l)))
            })
        })
    }

    /// Identifier edges expanded by multiplicity, in storage order.
    pub fn identifier_instances(&self) -> Vec<EdgeInstance> {
        self.identifier_edges
            .iter()
            .flat_map(|e| {
                (0..e.mult).map(move |copy| EdgeInstance {
                    u: e.u,
                    v: e.v,
                    copy,
                })
            })
            .collect()
    }

    /// All edge instances: clique edges first, then identifier instances.
    pub fn all_instances(&self) -> Vec<EdgeInstance> {
        self.clique_edges()
            .map(|(u, v)| EdgeInstance { u, v, copy: 0 })
            .chain(self.identifier_instances())
            .collect()
    }

    pub fn identifier_edge_count(&self) -> usize {
        self.identifier_edges.iter().map(|e| e.mult).sum()
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> u64 {
        let n = self.n as u64;
        n * (n * n.saturating_sub(1) / 2) + self.identifier_edge_count() as u64
    }

    pub fn to_json(&self) -> AuxGraphJson {
        AuxGraphJson {
            kind: self.kind,
            n: self.n,
            labels: self.labels.clone(),
            tree_edges: self
                .trees
                .trees
                .iter()
                .flat_map(|t| {
                    t.edges.iter().map(move |&(u, v)| TreeEdgeJson {
                        vertex: t.vertex,
                        u,
                        v,
                    })
                })
                .collect(),
            identifier_edges: self.identifier_edges.clone(),
        }
    }

    pub fn from_json(json: AuxGraphJson) -> Result<Self> {
        if json.labels.len() != json.n || json.labels.iter().any(|row| row.len() != json.n) {
            return Err(Error::Json("labels must be an n x n array".into()));
        }
        let mut trees: Vec<IdentifierTree> = Vec::new();
        for e in json.tree_edges {
            match trees.iter_mut().find(|t| t.vertex == e.vertex) {
                Some(t) => t.edges.push((e.u, e.v)),
                None => trees.push(IdentifierTree {
                    vertex: e.vertex,
                    edges: vec![(e.u, e.v)],
                }),
            }
        }
        let in_range = |c: &CliqueVertex| c.clique < json.n && c.position < json.n;
        let endpoints_ok = trees
            .iter()
            .flat_map(|t| t.edges.iter())
            .all(|(a, b)| in_range(a) && in_range(b))
            && json
                .identifier_edges
                .iter()
                .all(|e| in_range(&e.u) && in_range(&e.v));
        if !endpoints_ok {
            return Err(Error::Json("clique coordinates out of range".into()));
        }
        Ok(AuxGraph {
            kind: json.kind,
            n: json.n,
            labels: json.labels,
            trees: IdentifierTreeSet { trees },
            identifier_edges: json.identifier_edges,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeEdgeJson {
    pub vertex: usize,
    pub u: CliqueVertex,
    pub v: CliqueVertex,
}

/// Serialized auxiliary graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxGraphJson {
    pub kind: AuxKind,
    pub n: usize,
    pub labels: Vec<Vec<usize>>,
    pub tree_edges: Vec<TreeEdgeJson>,
    pub identifier_edges: Vec<IdentifierEdge>,
}

/// Copies of every vertex, ordered by clique index.
fn vertex_copies(h: &LinearHypergraph) -> Vec<Vec<CliqueVertex>> {
    let mut copies = vec![Vec::new(); h.vertices().len()];
    for (i, edge) in h.edges().iter().enumerate() {
        for (j, &v) in edge.iter().enumerate() {
            copies[v].push(CliqueVertex::new(i, j));
        }
    }
    copies
}

fn ordered(a: CliqueVertex, b: CliqueVertex) -> (CliqueVertex, CliqueVertex) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Path-like trees: the copies of each vertex joined in increasing clique
/// order.
pub fn default_spanning_trees(h: &LinearHypergraph) -> Result<IdentifierTreeSet> {
    h.require_standard_form()?;
    let trees = vertex_copies(h)
        .into_iter()
        .enumerate()
        .filter(|(_, c)| c.len() >= 2)
        .map(|(vertex, c)| IdentifierTree {
            vertex,
            edges: c.windows(2).map(|w| (w[0], w[1])).collect(),
        })
        .collect();
    Ok(IdentifierTreeSet { trees })
}

/// Decodes a Prüfer sequence over nodes `0..seq.len() + 2`.
fn prufer_decode(seq: &[usize]) -> Vec<(usize, usize)> {
    let k = seq.len() + 2;
    let mut degree = vec![1usize; k];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(k - 1);
    for &s in seq {
        let leaf = (0..k).find(|&x| degree[x] == 1).expect("a leaf always exists");
        edges.push((leaf, s));
        degree[leaf] = 0;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..k).filter(|&x| degree[x] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Stream of identifier tree choices.
///
/// Every vertex of degree `d >= 2` ranges over all `d^(d-2)` labelled trees
/// on its copies in Prüfer-lexicographic order; the Cartesian product runs
/// like an odometer with the last vertex turning fastest.
pub struct SpanningTreeChoices {
    copies: Vec<(usize, Vec<CliqueVertex>)>,
    counter: Vec<u64>,
    remaining: usize,
    exhausted: bool,
}

impl SpanningTreeChoices {
    fn tree_for(&self, slot: usize) -> IdentifierTree {
        let (vertex, copies) = &self.copies[slot];
        let d = copies.len();
        let mut code = self.counter[slot];
        let mut seq = vec![0usize; d - 2];
        for s in seq.iter_mut().rev() {
            *s = (code % d as u64) as usize;
            code /= d as u64;
        }
        let edges = prufer_decode(&seq)
            .into_iter()
            .map(|(a, b)| ordered(copies[a], copies[b]))
            .collect();
        IdentifierTree {
            vertex: *vertex,
            edges,
        }
    }

    fn cayley(d: usize) -> u64 {
        (d as u64).pow((d - 2) as u32)
    }
}

impl Iterator for SpanningTreeChoices {
    type Item = IdentifierTreeSet;

    fn next(&mut self) -> Option<IdentifierTreeSet> {
        if self.exhausted || self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let trees = (0..self.copies.len()).map(|s| self.tree_for(s)).collect();
        // Advance the odometer.
        self.exhausted = true;
        for slot in (0..self.copies.len()).rev() {
            self.counter[slot] += 1;
            if self.counter[slot] < Self::cayley(self.copies[slot].1.len()) {
                self.exhausted = false;
                break;
            }
            self.counter[slot] = 0;
        }
        Some(IdentifierTreeSet { trees })
    }
}

pub fn enumerate_spanning_tree_choices(
    h: &LinearHypergraph,
    limit: usize,
) -> Result<SpanningTreeChoices> {
    h.require_standard_form()?;
    let copies: Vec<(usize, Vec<CliqueVertex>)> = vertex_copies(h)
        .into_iter()
        .enumerate()
        .filter(|(_, c)| c.len() >= 2)
        .collect();
    Ok(SpanningTreeChoices {
        counter: vec![0; copies.len()],
        copies,
        remaining: limit,
        exhausted: false,
    })
}

fn check_trees(h: &LinearHypergraph, trees: &IdentifierTreeSet) -> Result<()> {
    let copies = vertex_copies(h);
    let mut seen = vec![false; copies.len()];
    for tree in &trees.trees {
        let v = tree.vertex;
        if v >= copies.len() {
            return Err(Error::InvalidTrees(format!("unknown vertex index {v}")));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidTrees(format!("two trees for {:?}", h.vertices()[v])));
        }
        let nodes = &copies[v];
        if tree.edges.len() + 1 != nodes.len() {
            return Err(Error::InvalidTrees(format!(
                "tree for {:?} has {} edges, expected {}",
                h.vertices()[v],
                tree.edges.len(),
                nodes.len().saturating_sub(1)
            )));
        }
        // Union-find over the copies.
        let mut parent: Vec<usize> = (0..nodes.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in &tree.edges {
            let ia = nodes.iter().position(|&c| c == a);
            let ib = nodes.iter().position(|&c| c == b);
            let (Some(ia), Some(ib)) = (ia, ib) else {
                return Err(Error::InvalidTrees(format!(
                    "tree edge {a}-{b} is not between copies of {:?}",
                    h.vertices()[v]
                )));
            };
            if a.clique >= b.clique {
                return Err(Error::InvalidTrees(format!(
                    "tree edge {a}-{b} must list the lower clique first"
                )));
            }
            let (ra, rb) = (find(&mut parent, ia), find(&mut parent, ib));
            if ra == rb {
                return Err(Error::InvalidTrees(format!(
                    "tree for {:?} has a cycle",
                    h.vertices()[v]
                )));
            }
            parent[ra] = rb;
        }
    }
    for (v, c) in copies.iter().enumerate() {
        if c.len() >= 2 && !seen[v] {
            return Err(Error::InvalidTrees(format!(
                "no tree for {:?}",
                h.vertices()[v]
            )));
        }
    }
    Ok(())
}

/// Builds `G1(H)` or `G2(H)` for the given identifier trees.
pub fn build_aux(h: &LinearHypergraph, trees: &IdentifierTreeSet, kind: AuxKind) -> Result<AuxGraph> {
    h.require_standard_form()?;
    check_trees(h, trees)?;
    let n = h.n();
    let mut identifier_edges = Vec::new();
    for (u, v) in trees.edges() {
        match kind {
            AuxKind::G1 => identifier_edges.push(IdentifierEdge { u, v, mult: n - 1 }),
            AuxKind::G2 => {
                for t in (0..n).filter(|&t| t != v.position) {
                    identifier_edges.push(IdentifierEdge {
                        u,
                        v: CliqueVertex::new(v.clique, t),
                        mult: 1,
                    });
                }
            }
        }
    }
    Ok(AuxGraph {
        kind,
        n,
        labels: h.edges().to_vec(),
        trees: trees.clone(),
        identifier_edges,
    })
}

/// `n * C(n, 2) + sum_v (d(v) - 1)(n - 1)`.
pub fn expected_total_degree(h: &LinearHypergraph) -> u64 {
    let n = h.n() as u64;
    let identifier: u64 = degree_profile(h)
        .degrees()
        .iter()
        .map(|&d| (d as u64).saturating_sub(1) * (n - 1))
        .sum();
    n * (n * (n - 1) / 2) + identifier
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{generate, parse_hypergraph, Family};

    fn tri3() -> LinearHypergraph {
        parse_hypergraph("a b c\na d e\nb d f").unwrap()
    }

    fn cv(i: usize, j: usize) -> CliqueVertex {
        CliqueVertex::new(i, j)
    }

    #[test]
    fn tri3_default_trees() {
        let trees = default_spanning_trees(&tri3()).unwrap();
        assert_eq!(trees.trees.len(), 3);
        // a sits at position 0 of F1 and F2.
        assert_eq!(trees.trees[0].edges, vec![(cv(0, 0), cv(1, 0))]);
    }

    #[test]
    fn path_not_star() {
        let h = parse_hypergraph("x a b c\nd e f g\nx h i j\nx k l m").unwrap();
        let trees = default_spanning_trees(&h).unwrap();
        assert_eq!(trees.trees.len(), 1);
        assert_eq!(
            trees.trees[0].edges,
            vec![(cv(0, 0), cv(2, 0)), (cv(2, 0), cv(3, 0))]
        );
    }

    #[test]
    fn disjoint_edges_have_no_trees() {
        let h = parse_hypergraph("a b\nc d").unwrap();
        assert!(default_spanning_trees(&h).unwrap().trees.is_empty());
        let aux = build_aux(&h, &IdentifierTreeSet::default(), AuxKind::G2).unwrap();
        assert!(aux.identifier_edges().is_empty());
        assert_eq!(aux.edge_count(), 2);
    }

    #[test]
    fn prufer_decodes_all_trees_on_three_nodes() {
        let trees: Vec<_> = (0..3).map(|s| prufer_decode(&[s])).collect();
        assert_eq!(trees[0], vec![(1, 0), (0, 2)]);
        assert_eq!(trees[1], vec![(0, 1), (1, 2)]);
        assert_eq!(trees[2], vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn tree_choice_counts() {
        assert_eq!(enumerate_spanning_tree_choices(&tri3(), 100).unwrap().count(), 1);
        let pencil = generate(Family::NearPencil { n: 3 }, 0).unwrap();
        let choices: Vec<_> = enumerate_spanning_tree_choices(&pencil, 100).unwrap().collect();
        assert_eq!(choices.len(), 3);
        assert_ne!(choices[0], choices[1]);
        assert_eq!(enumerate_spanning_tree_choices(&pencil, 2).unwrap().count(), 2);
        let pencil4 = generate(Family::NearPencil { n: 4 }, 0).unwrap();
        assert_eq!(enumerate_spanning_tree_choices(&pencil4, 100).unwrap().count(), 16);
        for choice in enumerate_spanning_tree_choices(&pencil4, 100).unwrap() {
            assert!(build_aux(&pencil4, &choice, AuxKind::G1).is_ok());
        }
    }

    #[test]
    fn tri3_g1_counts() {
        let h = tri3();
        let aux = build_aux(&h, &default_spanning_trees(&h).unwrap(), AuxKind::G1).unwrap();
        assert_eq!(aux.identifier_edges().len(), 3);
        assert!(aux.identifier_edges().iter().all(|e| e.mult == 2));
        assert_eq!(aux.edge_count(), 15);
        assert_eq!(expected_total_degree(&h), 15);
    }

    #[test]
    fn tri3_g2_star_for_a() {
        let h = tri3();
        let aux = build_aux(&h, &default_spanning_trees(&h).unwrap(), AuxKind::G2).unwrap();
        assert_eq!(aux.identifier_edge_count(), 6);
        // F2 = {a, d, e}; the star for a omits v_{2,a}.
        let star: Vec<_> = aux
            .identifier_edges()
            .iter()
            .filter(|e| e.u == cv(0, 0))
            .map(|e| aux.label(e.v))
            .collect();
        let names: Vec<&str> = star.iter().map(|&v| h.vertices()[v].as_str()).collect();
        assert_eq!(names, vec!["d", "e"]);
        assert_eq!(aux.edge_count(), 15);
    }

    #[test]
    fn expected_degree_examples() {
        let h = parse_hypergraph("a b c\nd e f\ng h i").unwrap();
        assert_eq!(expected_total_degree(&h), 9);
        let pencil = generate(Family::NearPencil { n: 3 }, 0).unwrap();
        assert_eq!(expected_total_degree(&pencil), 13);
    }

    #[test]
    fn inconsistent_trees_rejected() {
        let h = tri3();
        let mut trees = default_spanning_trees(&h).unwrap();
        trees.trees[0].edges[0].1 = cv(1, 1);
        assert!(matches!(build_aux(&h, &trees, AuxKind::G1), Err(Error::InvalidTrees(_))));
        let mut trees = default_spanning_trees(&h).unwrap();
        trees.trees.pop();
        assert!(matches!(build_aux(&h, &trees, AuxKind::G1), Err(Error::InvalidTrees(_))));
    }

    #[test]
    fn json_round_trip() {
        let pencil = generate(Family::NearPencil { n: 4 }, 0).unwrap();
        for kind in [AuxKind::G1, AuxKind::G2] {
            for trees in enumerate_spanning_tree_choices(&pencil, 4).unwrap() {
                let aux = build_aux(&pencil, &trees, kind).unwrap();
                let text = serde_json::to_string(&aux.to_json()).unwrap();
                let back = AuxGraph::from_json(serde_json::from_str(&text).unwrap()).unwrap();
                assert_eq!(back, aux);
            }
        }
    }
}
