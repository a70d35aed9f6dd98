//! Orientations of auxiliary graphs.
//!
//! An orientation assigns a head to every edge instance. The in-degree of
//! `v_{i,j}` is the exponent of `x_{i,j}` in the monomial the orientation
//! picks out of the coloring polynomial; its sign is `(-1)^t` where `t`
//! counts instances pointing at the lexicographically larger endpoint.

use serde::{Deserialize, Serialize};

use crate::auxgraph::{build_aux, default_spanning_trees, AuxGraph, AuxKind, EdgeInstance};
use crate::error::{Error, Result};
use crate::hypergraph::LinearHypergraph;
use crate::index::{CliqueVertex, ExponentVector};

pub type InDegreeVector = ExponentVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrientedInstance {
    pub u: CliqueVertex,
    pub v: CliqueVertex,
    pub copy: usize,
    pub head: CliqueVertex,
}

impl OrientedInstance {
    pub fn new(edge: EdgeInstance, head: CliqueVertex) -> Self {
        debug_assert!(head == edge.u || head == edge.v);
        OrientedInstance {
            u: edge.u,
            v: edge.v,
            copy: edge.copy,
            head,
        }
    }

    pub fn tail(&self) -> CliqueVertex {
        if self.head == self.u {
            self.v
        } else {
            self.u
        }
    }

    /// Points at the lexicographically larger endpoint.
    pub fn is_descending(&self) -> bool {
        self.head == self.u.max(self.v)
    }

    pub fn flipped(&self) -> Self {
        OrientedInstance {
            head: self.tail(),
            ..*self
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Orientation {
    pub instances: Vec<OrientedInstance>,
}

impl Orientation {
    pub fn in_degrees(&self, n: usize) -> InDegreeVector {
        let mut deg = ExponentVector::zeros(n * n);
        for inst in &self.instances {
            deg.0[inst.head.var(n)] += 1;
        }
        deg
    }

    pub fn len(&self) -> usize {
        self.instances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instances.is_empty()
    }

    /// Instances of both orientations; used for disjoint edge sets.
    pub fn union(&self, other: &Orientation) -> Orientation {
        Orientation {
            instances: self.instances.iter().chain(&other.instances).copied().collect(),
        }
    }
}

/// Cyclic offset between two distinct clique indices (any common base):
/// `a - b` if `a > b`, else `n + a - b`. Always in `1..=n-1`.
pub fn s_offset(a: usize, b: usize, n: usize) -> Result<usize> {
    if a == b {
        return Err(Error::Precondition(format!("s({a},{b}) needs distinct indices")));
    }
    if a > n || b > n || a == 0 || b == 0 {
        return Err(Error::Precondition(format!(
            "s({a},{b}) needs indices in 1..={n}"
        )));
    }
    Ok(if a > b { a - b } else { n + a - b })
}

/// Number of parallel instances of one tree edge pointing at each endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BundleSplit {
    pub toward_first: u32,
    pub toward_second: u32,
}

/// Orients the multigraph obtained from a tree on nodes `0..k` by taking
/// `n - 1` copies of every edge so that node `v` gets in-degree `alphas[v]`.
///
/// Requires every `alphas[v] <= n - 1` and `sum alphas = (k - 1)(n - 1)`.
/// Leaves are peeled smallest index first; give nodes indices in the order
/// you want them peeled.
pub fn orient_tree_multigraph(
    k: usize,
    edges: &[(usize, usize)],
    alphas: &[u32],
    n: usize,
) -> Result<Vec<BundleSplit>> {
    let mult = n.checked_sub(1).ok_or_else(|| Error::Precondition("n must be positive".into()))? as u32;
    if alphas.len() != k {
        return Err(Error::Precondition(format!("{} targets for {k} nodes", alphas.len())));
    }
    if k > 0 && edges.len() != k - 1 {
        return Err(Error::Precondition(format!(
            "{} edges cannot form a tree on {k} nodes",
            edges.len()
        )));
    }
    if let Some(v) = alphas.iter().position(|&a| a > mult) {
        return Err(Error::Precondition(format!(
            "target {} at node {v} exceeds n-1={mult}",
            alphas[v]
        )));
    }
    let total: u64 = alphas.iter().map(|&a| a as u64).sum();
    let required = (k.saturating_sub(1) as u64) * mult as u64;
    if total != required {
        return Err(Error::Precondition(format!(
            "targets sum to {total}, expected (k-1)(n-1)={required}"
        )));
    }
    let mut degree = vec![0usize; k];
    for &(a, b) in edges {
        if a >= k || b >= k || a == b {
            return Err(Error::Precondition(format!("bad tree edge ({a},{b})")));
        }
        degree[a] += 1;
        degree[b] += 1;
    }

    let mut remaining: Vec<i64> = alphas.iter().map(|&a| a as i64).collect();
    let mut edge_alive = vec![true; edges.len()];
    let mut node_alive = vec![true; k];
    let mut splits = vec![
        BundleSplit {
            toward_first: 0,
            toward_second: 0
        };
        edges.len()
    ];
    for _ in 1..k {
        let leaf = (0..k)
            .find(|&v| node_alive[v] && degree[v] == 1)
            .ok_or_else(|| Error::Precondition("edges do not form a tree".into()))?;
        let e = (0..edges.len())
            .find(|&e| edge_alive[e] && (edges[e].0 == leaf || edges[e].1 == leaf))
            .expect("leaf has one live edge");
        let other = if edges[e].0 == leaf { edges[e].1 } else { edges[e].0 };
        let toward_leaf = remaining[leaf];
        let toward_other = mult as i64 - toward_leaf;
        if toward_leaf < 0 || toward_other < 0 {
            return Err(Error::Precondition("targets are not realizable".into()));
        }
        splits[e] = if edges[e].0 == leaf {
            BundleSplit {
                toward_first: toward_leaf as u32,
                toward_second: toward_other as u32,
            }
        } else {
            BundleSplit {
                toward_first: toward_other as u32,
                toward_second: toward_leaf as u32,
            }
        };
        remaining[leaf] = 0;
        remaining[other] -= toward_other;
        edge_alive[e] = false;
        node_alive[leaf] = false;
        degree[leaf] = 0;
        degree[other] -= 1;
    }
    if remaining.iter().any(|&r| r != 0) {
        return Err(Error::Precondition("targets are not realizable".into()));
    }
    Ok(splits)
}

/// Copies of the identified vertex in a tree, sorted by clique.
fn tree_nodes(edges: &[(CliqueVertex, CliqueVertex)]) -> Vec<CliqueVertex> {
    let mut nodes: Vec<CliqueVertex> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    nodes.sort_unstable();
    nodes.dedup();
    nodes
}

/// Target identifier in-degrees for the copies `w_1..w_k` of one vertex
/// (1-based clique indices `i_1 < ... < i_k`): `s(i_{j-1}, i_j)` with
/// `i_0 = i_k`, minus one for every `j < k`.
fn g1_targets<S>(cliques: &[usize], n: usize, offset: &S) -> Result<Vec<u32>>
where
    S: Fn(usize, usize, usize) -> Result<usize>,
{
    let k = cliques.len();
    (0..k)
        .map(|j| {
            let prev = if j == 0 { cliques[k - 1] } else { cliques[j - 1] };
            let s = offset(prev, cliques[j], n)?;
            let excess = usize::from(j + 1 < k);
            s.checked_sub(excess)
                .map(|t| t as u32)
                .ok_or_else(|| Error::Precondition("offset below 1".into()))
        })
        .collect()
}

/// Vandermonde-completable orientation of the identifier edges of `G1(H)`.
pub fn orient_g1(aux: &AuxGraph) -> Result<Orientation> {
    orient_g1_with_offsets(aux, s_offset)
}

/// [`orient_g1`] with the cyclic offset function supplied by the caller.
pub fn orient_g1_with_offsets<S>(aux: &AuxGraph, offset: S) -> Result<Orientation>
where
    S: Fn(usize, usize, usize) -> Result<usize>,
{
    if aux.kind() != AuxKind::G1 {
        return Err(Error::WrongKind);
    }
    let n = aux.n();
    let mut heads: Vec<(CliqueVertex, CliqueVertex, BundleSplit)> = Vec::new();
    for tree in &aux.trees().trees {
        let nodes = tree_nodes(&tree.edges);
        let cliques: Vec<usize> = nodes.iter().map(|c| c.clique + 1).collect();
        let alphas = g1_targets(&cliques, n, &offset)?;
        let index = |c: CliqueVertex| nodes.binary_search(&c).expect("tree node");
        let edges: Vec<(usize, usize)> = tree.edges.iter().map(|&(a, b)| (index(a), index(b))).collect();
        let splits = orient_tree_multigraph(nodes.len(), &edges, &alphas, n)?;
        for (&(a, b), split) in tree.edges.iter().zip(splits) {
            heads.push((a, b, split));
        }
    }
    let mut instances = Vec::with_capacity(aux.identifier_edge_count());
    for e in aux.identifier_edges() {
        let (_, _, split) = heads
            .iter()
            .find(|(a, b, _)| *a == e.u && *b == e.v)
            .expect("every G1 identifier edge comes from a tree edge");
        for copy in 0..e.mult {
            let head = if (copy as u32) < split.toward_first { e.u } else { e.v };
            instances.push(OrientedInstance::new(EdgeInstance { u: e.u, v: e.v, copy }, head));
        }
    }
    Ok(Orientation { instances })
}

/// Builds the path-like `G2(H)` and a Vandermonde-completable orientation of
/// its identifier edges.
///
/// Works edge by edge in file order. At step `r` edge `F_r` plays the role of
/// the removed edge, and every later edge gives up one private vertex (its
/// largest-position vertex not shared with any other remaining edge). Star
/// edges into a private vertex point at the star centre; star edges centred
/// in `F_r` point at the centre exactly when the leaf is a source or the
/// private vertex of its clique, and at the leaf otherwise.
pub fn orient_g2_pathlike(h: &LinearHypergraph) -> Result<(AuxGraph, Orientation)> {
    let trees = default_spanning_trees(h)?;
    let aux = build_aux(h, &trees, AuxKind::G2)?;
    let n = h.n();
    let incidences = h.incidences();
    let label = |c: CliqueVertex| aux.label(c);
    // A source has a tree edge to a copy in a higher clique.
    let is_source = |c: CliqueVertex| {
        incidences[label(c)].last().is_some_and(|&last| last > c.clique)
    };

    let mut active = vec![vec![true; n]; n];
    let edges = aux.identifier_edges();
    let mut heads: Vec<Option<CliqueVertex>> = vec![None; edges.len()];

    for r in 0..n {
        let mut private: Vec<Option<usize>> = vec![None; n];
        for k in r + 1..n {
            let chosen = (0..n).rev().find(|&j| {
                active[k][j]
                    && incidences[aux.labels()[k][j]]
                        .iter()
                        .filter(|&&c| c >= r)
                        .filter(|&&c| {
                            let p = h.position_in_edge(c, aux.labels()[k][j]).expect("copy");
                            active[c][p]
                        })
                        .count()
                        == 1
            });
            match chosen {
                Some(j) => private[k] = Some(j),
                None => {
                    return Err(Error::Precondition(format!(
                        "edge {} has no private vertex at step {}",
                        k + 1,
                        r + 1
                    )))
                }
            }
        }
        for (e, slot) in edges.iter().zip(heads.iter_mut()) {
            if slot.is_some() {
                continue;
            }
            let (centre, leaf) = (e.u, e.v);
            let leaf_is_private = private[leaf.clique] == Some(leaf.position);
            if centre.clique == r {
                debug_assert!(active[leaf.clique][leaf.position]);
                *slot = Some(if is_source(leaf) || leaf_is_private { centre } else { leaf });
            } else if centre.clique > r && leaf_is_private {
                *slot = Some(centre);
            }
        }
        for k in r + 1..n {
            if let Some(j) = private[k] {
                active[k][j] = false;
            }
        }
    }

    let instances = edges
        .iter()
        .zip(heads)
        .map(|(e, head)| {
            let head = head.expect("every star edge is oriented at some step");
            OrientedInstance::new(EdgeInstance { u: e.u, v: e.v, copy: 0 }, head)
        })
        .collect();
    Ok((aux, Orientation { instances }))
}

/// Whether a transitive tournament on a clique can be added to these
/// identifier in-degrees keeping every total at most `n - 1`: for each
/// `0 <= j <= n`, at most `j` entries are `>= n - j`.
pub fn clique_is_completable(in_degrees: &[u32], n: usize) -> bool {
    let mut sorted: Vec<u32> = in_degrees.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    // The r-th largest (0-based) needs r + value <= n - 1, which is the
    // counting condition restated.
    sorted
        .iter()
        .enumerate()
        .all(|(r, &d)| (r as u64 + d as u64) < n as u64)
}

/// Vandermonde-completability of an in-degree vector laid out as `n * n`.
pub fn in_degrees_completable(deg: &ExponentVector, n: usize) -> bool {
    (0..n).all(|i| clique_is_completable(deg.clique(i, n), n))
}

/// Vandermonde-completability of an orientation of the identifier edges.
pub fn is_vandermonde_completable(aux: &AuxGraph, o: &Orientation) -> bool {
    in_degrees_completable(&o.in_degrees(aux.n()), aux.n())
}

/// Tournament in-degrees assigned to the positions of one clique: larger
/// identifier in-degree gets a smaller tournament in-degree, ties broken by
/// position.
pub fn tournament_ranks(in_degrees: &[u32]) -> Vec<u32> {
    let mut order: Vec<usize> = (0..in_degrees.len()).collect();
    order.sort_by(|&a, &b| in_degrees[b].cmp(&in_degrees[a]).then(a.cmp(&b)));
    let mut ranks = vec![0; in_degrees.len()];
    for (rank, &pos) in order.iter().enumerate() {
        ranks[pos] = rank as u32;
    }
    ranks
}

/// Orients every base clique as a transitive tournament on top of a
/// completable identifier orientation. Clique instances come first, in
/// [`AuxGraph::clique_edges`] order, followed by the identifier instances.
pub fn complete_orientation(aux: &AuxGraph, o: &Orientation) -> Result<Orientation> {
    if !is_vandermonde_completable(aux, o) {
        return Err(Error::NotCompletable);
    }
    let n = aux.n();
    let deg = o.in_degrees(n);
    let ranks: Vec<Vec<u32>> = (0..n).map(|i| tournament_ranks(deg.clique(i, n))).collect();
    let mut instances: Vec<OrientedInstance> = aux
        .clique_edges()
        .map(|(u, v)| {
            let head = if ranks[u.clique][u.position] > ranks[v.clique][v.position] { u } else { v };
            OrientedInstance::new(EdgeInstance { u, v, copy: 0 }, head)
        })
        .collect();
    instances.extend_from_slice(&o.instances);
    Ok(Orientation { instances })
}

/// `(-1)^t`, `t` = number of instances pointing at the larger endpoint.
pub fn sign_of(o: &Orientation) -> i8 {
    let t = o.instances.iter().filter(|i| i.is_descending()).count();
    if t % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::auxgraph::{default_spanning_trees, enumerate_spanning_tree_choices};
    use crate::hypergraph::{generate, parse_hypergraph, Family};

    fn tri3() -> LinearHypergraph {
        parse_hypergraph("a b c\na d e\nb d f").unwrap()
    }

    #[test]
    fn offsets() {
        for n in 2..8 {
            assert_eq!(s_offset(2, 1, n).unwrap(), 1);
        }
        assert_eq!(s_offset(1, 2, 3).unwrap(), 2);
        let mut values: Vec<usize> = [1, 2, 4, 5].iter().map(|&q| s_offset(q, 3, 5).unwrap()).collect();
        assert_eq!(values, vec![3, 4, 1, 2]);
        values.sort();
        assert_eq!(values, vec![1, 2, 3, 4]);
        assert!(s_offset(2, 2, 3).is_err());
    }

    #[test]
    fn offsets_cover_full_range() {
        for n in 2..10 {
            for i in 1..=n {
                let mut vals: Vec<usize> = (1..=n).filter(|&q| q != i).map(|q| s_offset(q, i, n).unwrap()).collect();
                vals.sort();
                assert_eq!(vals, (1..n).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn tree_multigraph_small_cases() {
        let s = orient_tree_multigraph(2, &[(0, 1)], &[1, 1], 3).unwrap();
        assert_eq!(s, vec![BundleSplit { toward_first: 1, toward_second: 1 }]);
        assert!(orient_tree_multigraph(1, &[], &[0], 3).unwrap().is_empty());
        // Path 0-1-2 with targets (2, 2, 0).
        let s = orient_tree_multigraph(3, &[(0, 1), (1, 2)], &[2, 2, 0], 3).unwrap();
        assert_eq!(s[0], BundleSplit { toward_first: 2, toward_second: 0 });
        assert_eq!(s[1], BundleSplit { toward_first: 2, toward_second: 0 });
    }

    #[test]
    fn tree_multigraph_rejects_bad_targets() {
        assert!(orient_tree_multigraph(2, &[(0, 1)], &[3, 1], 3).is_err());
        assert!(orient_tree_multigraph(2, &[(0, 1)], &[1, 0], 3).is_err());
        assert!(orient_tree_multigraph(3, &[(0, 1), (0, 1)], &[1, 2, 1], 3).is_err());
    }

    #[test]
    fn g1_construction_on_tri3() {
        let h = tri3();
        let aux = build_aux(&h, &default_spanning_trees(&h).unwrap(), AuxKind::G1).unwrap();
        let o = orient_g1(&aux).unwrap();
        assert_eq!(o.len(), 6);
        let deg = o.in_degrees(3);
        // clique1 (a,b,c), clique2 (a,d,e), clique3 (b,d,f)
        assert_eq!(deg.0, vec![0, 1, 0, 2, 0, 0, 1, 2, 0]);
        assert!(is_vandermonde_completable(&aux, &o));
    }

    #[test]
    fn g1_tri3_vertex_a_points_into_second_clique() {
        let h = tri3();
        let aux = build_aux(&h, &default_spanning_trees(&h).unwrap(), AuxKind::G1).unwrap();
        let o = orient_g1(&aux).unwrap();
        let a_instances: Vec<_> = o.instances.iter().filter(|i| i.u == CliqueVertex::new(0, 0)).collect();
        assert_eq!(a_instances.len(), 2);
        assert!(a_instances.iter().all(|i| i.head == CliqueVertex::new(1, 0)));
    }

    #[test]
    fn disjoint_edges_trivial() {
        let h = parse_hypergraph("a b c\nd e f\ng h i").unwrap();
        let aux = build_aux(&h, &default_spanning_trees(&h).unwrap(), AuxKind::G1).unwrap();
        let o = orient_g1(&aux).unwrap();
        assert!(o.is_empty());
        assert!(is_vandermonde_completable(&aux, &o));
        let (aux2, o2) = orient_g2_pathlike(&h).unwrap();
        assert!(o2.is_empty());
        assert!(is_vandermonde_completable(&aux2, &o2));
    }

    #[test]
    fn g2_construction_base_case() {
        let h = parse_hypergraph("a").unwrap();
        let (aux, o) = orient_g2_pathlike(&h).unwrap();
        assert!(o.is_empty());
        assert!(is_vandermonde_completable(&aux, &o));
    }

    #[test]
    fn g2_construction_on_tri3() {
        let (aux, o) = orient_g2_pathlike(&tri3()).unwrap();
        assert_eq!(o.len(), aux.identifier_edge_count());
        assert!(is_vandermonde_completable(&aux, &o));
    }

    #[test]
    fn constructions_on_structured_families() {
        for n in 1..=7 {
            let h = generate(Family::NearPencil { n }, 0).unwrap();
            for trees in enumerate_spanning_tree_choices(&h, 5).unwrap() {
                let aux = build_aux(&h, &trees, AuxKind::G1).unwrap();
                assert!(is_vandermonde_completable(&aux, &orient_g1(&aux).unwrap()));
            }
            let (aux, o) = orient_g2_pathlike(&h).unwrap();
            assert!(is_vandermonde_completable(&aux, &o), "pencil n={n}");
        }
        let fano = generate(Family::TruncatedProjectivePlane { q: 2 }, 0).unwrap();
        let (aux, o) = orient_g2_pathlike(&fano).unwrap();
        assert!(is_vandermonde_completable(&aux, &o));
    }

    #[test]
    fn criterion_examples() {
        assert!(clique_is_completable(&[2, 1, 0], 3));
        assert!(!clique_is_completable(&[2, 2, 0], 3));
        assert!(!clique_is_completable(&[3, 0, 0], 3));
    }

    #[test]
    fn completion_example() {
        assert_eq!(tournament_ranks(&[2, 1, 0]), vec![0, 1, 2]);
        assert_eq!(tournament_ranks(&[0, 0, 0]), vec![0, 1, 2]);
        assert_eq!(tournament_ranks(&[0, 1, 1]), vec![2, 0, 1]);
    }

    #[test]
    fn completion_respects_bound_and_handshake() {
        let h = tri3();
        let aux = build_aux(&h, &default_spanning_trees(&h).unwrap(), AuxKind::G1).unwrap();
        let o = orient_g1(&aux).unwrap();
        let full = complete_orientation(&aux, &o).unwrap();
        let deg = full.in_degrees(3);
        assert!(deg.is_bounded_by(2));
        assert_eq!(deg.total_degree(), aux.edge_count());
        assert_eq!(full.len() as u64, aux.edge_count());
    }

    #[test]
    fn completion_without_identifier_edges_is_permutation() {
        let h = parse_hypergraph("a b c\nd e f\ng h i").unwrap();
        let aux = build_aux(&h, &default_spanning_trees(&h).unwrap(), AuxKind::G1).unwrap();
        let full = complete_orientation(&aux, &Orientation::default()).unwrap();
        let deg = full.in_degrees(3);
        for i in 0..3 {
            let mut c = deg.clique(i, 3).to_vec();
            c.sort();
            assert_eq!(c, vec![0, 1, 2]);
        }
    }

    #[test]
    fn completion_rejects_non_completable() {
        let h = parse_hypergraph("a b\na c").unwrap();
        let aux = build_aux(&h, &default_spanning_trees(&h).unwrap(), AuxKind::G1).unwrap();
        // One instance; point it so the copy in clique 2 gets in-degree 1, then
        // duplicate it to push that copy to 2 > n - 1.
        let inst = aux.identifier_instances()[0];
        let o = Orientation {
            instances: vec![OrientedInstance::new(inst, inst.v); 2],
        };
        assert_eq!(complete_orientation(&aux, &o), Err(Error::NotCompletable));
    }

    #[test]
    fn signs() {
        let e = EdgeInstance {
            u: CliqueVertex::new(0, 0),
            v: CliqueVertex::new(0, 1),
            copy: 0,
        };
        let down = Orientation { instances: vec![OrientedInstance::new(e, e.v)] };
        assert_eq!(sign_of(&down), -1);
        let up = Orientation { instances: vec![OrientedInstance::new(e, e.u)] };
        assert_eq!(sign_of(&up), 1);
    }
}
