//! Proper colorings: verification, exhaustive search, decoding from points
//! of the coloring polynomial and extension over stripped vertices.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{eval_p, point_from_colors};
use crate::auxgraph::AuxGraph;
use crate::error::{Error, Result};
use crate::hypergraph::LinearHypergraph;
use crate::index::ExponentVector;
use crate::scalar::Scalar;

/// Vertex name to color.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring(pub BTreeMap<String, usize>);

impl Coloring {
    pub fn get(&self, vertex: &str) -> Option<usize> {
        self.0.get(vertex).copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn colors_used(&self) -> usize {
        self.0.values().max().map_or(0, |&m| m + 1)
    }

    fn from_indices(h: &LinearHypergraph, colors: &[usize]) -> Self {
        Coloring(
            h.vertices()
                .iter()
                .cloned()
                .zip(colors.iter().copied())
                .collect(),
        )
    }
}

/// No edge contains two vertices of the same color. Fails if some vertex of
/// `h` is uncolored.
pub fn verify_coloring(h: &LinearHypergraph, c: &Coloring) -> Result<bool> {
    let colors: Vec<usize> = h
        .vertices()
        .iter()
        .map(|v| c.get(v).ok_or_else(|| Error::PartialColoring(v.clone())))
        .collect::<Result<_>>()?;
    Ok(h.edges().iter().all(|e| {
        let mut seen: Vec<usize> = e.iter().map(|&v| colors[v]).collect();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }))
}

/// Backtracking search for a proper `k`-coloring. Vertices are colored in
/// index order, colors tried in ascending order.
pub fn brute_force_coloring(h: &LinearHypergraph, k: usize) -> Option<Coloring> {
    let nv = h.vertices().len();
    let mut earlier: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for e in h.edges() {
        for &a in e {
            earlier[a].extend(e.iter().copied().filter(|&b| b < a));
        }
    }
    for list in &mut earlier {
        list.sort_unstable();
        list.dedup();
    }
    let mut colors = vec![usize::MAX; nv];
    fn rec(v: usize, k: usize, earlier: &[Vec<usize>], colors: &mut [usize]) -> bool {
        if v == colors.len() {
            return true;
        }
        for c in 0..k {
            if earlier[v].iter().all(|&u| colors[u] != c) {
                colors[v] = c;
                if rec(v + 1, k, earlier, colors) {
                    return true;
                }
            }
        }
        colors[v] = usize::MAX;
        false
    }
    rec(0, k, &earlier, &mut colors).then(|| Coloring::from_indices(h, &colors))
}

/// The two properties that characterize non-vanishing points on
/// `{0..n-1}^(n^2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PointProperties {
    /// Every clique uses all `n` colors.
    pub rainbow: bool,
    /// All copies of a hypergraph vertex get the same color.
    pub consistent: bool,
}

pub fn point_properties(aux: &AuxGraph, colors: &[usize]) -> PointProperties {
    let n = aux.n();
    let rainbow = (0..n).all(|i| {
        let mut row: Vec<usize> = colors[i * n..(i + 1) * n].to_vec();
        row.sort_unstable();
        row.iter().enumerate().all(|(j, &c)| c == j)
    });
    let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
    let consistent = aux.clique_vertices().all(|v| {
        let c = colors[v.var(n)];
        *seen.entry(aux.label(v)).or_insert(c) == c
    });
    PointProperties { rainbow, consistent }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Decoded {
    Coloring { coloring: Coloring },
    Rejected { violated: Vec<String> },
}

/// Decodes a coloring from a point of `{0..n-1}^(n^2)` at which the
/// coloring polynomial does not vanish. A vanishing point is rejected with
/// the violated properties.
pub fn coloring_from_point<F: Scalar>(
    h: &LinearHypergraph,
    aux: &AuxGraph,
    colors: &[usize],
) -> Result<Decoded> {
    let n = aux.n();
    if h.n() != n || h.edge_count() != n {
        return Err(Error::Precondition("hypergraph does not match the auxiliary graph".into()));
    }
    for i in 0..n {
        if aux.labels()[i] != h.edges()[i] {
            return Err(Error::Precondition("hypergraph does not match the auxiliary graph".into()));
        }
    }
    if colors.iter().any(|&c| c >= n) {
        return Err(Error::Precondition(format!("colors must lie in 0..{n}")));
    }
    let value = eval_p::<F>(aux, &point_from_colors(colors))?;
    let props = point_properties(aux, colors);
    if value.is_zero() {
        let mut violated = Vec::new();
        if !props.rainbow {
            violated.push("rainbow".to_string());
        }
        if !props.consistent {
            violated.push("consistent".to_string());
        }
        return Ok(Decoded::Rejected { violated });
    }
    let mut by_vertex = vec![0; h.vertices().len()];
    for v in aux.clique_vertices() {
        by_vertex[aux.label(v)] = colors[v.var(n)];
    }
    Ok(Decoded::Coloring {
        coloring: Coloring::from_indices(h, &by_vertex),
    })
}

fn search_grid<F: Scalar>(aux: &AuxGraph, sets: &[Vec<usize>]) -> Result<Option<Vec<usize>>> {
    let n = aux.n();
    let mut colors = Vec::with_capacity(n * n);
    fn rec<F: Scalar>(
        aux: &AuxGraph,
        sets: &[Vec<usize>],
        colors: &mut Vec<usize>,
    ) -> Result<bool> {
        let n = aux.n();
        let var = colors.len();
        if var == sets.len() {
            return Ok(!eval_p::<F>(aux, &point_from_colors(colors))?.is_zero());
        }
        let start = var / n * n;
        for &c in &sets[var] {
            if colors[start..].contains(&c) {
                continue;
            }
            colors.push(c);
            if rec::<F>(aux, sets, colors)? {
                return Ok(true);
            }
            colors.pop();
        }
        Ok(false)
    }
    Ok(rec::<F>(aux, sets, &mut colors)?.then_some(colors))
}

/// Searches for a point of `{0..n-1}^(n^2)` where the coloring polynomial
/// does not vanish. The sub-grid `{0..target_v}` is tried first; when the
/// coefficient at `target` is nonzero it always contains such a point.
pub fn nonvanishing_search<F: Scalar>(aux: &AuxGraph, target: &ExponentVector) -> Result<Option<Vec<usize>>> {
    let n = aux.n();
    if target.len() != n * n {
        return Err(Error::PointSize {
            expected: n * n,
            actual: target.len(),
        });
    }
    if target.total_degree() != aux.edge_count() {
        return Err(Error::NonMaximalTarget {
            actual: target.total_degree(),
            expected: aux.edge_count(),
        });
    }
    if !target.is_bounded_by(n as u32 - 1) {
        return Err(Error::Precondition("target is not (n-1)-bounded".into()));
    }
    let restricted: Vec<Vec<usize>> = target.0.iter().map(|&d| (0..=d as usize).collect()).collect();
    if let Some(point) = search_grid::<F>(aux, &restricted)? {
        return Ok(Some(point));
    }
    let full = vec![(0..n).collect(); n * n];
    search_grid::<F>(aux, &full)
}

/// Extends a coloring of `derived` to `h` by giving every missing vertex the
/// smallest color in `0..n` unused on its edges.
pub fn extend_coloring(
    h: &LinearHypergraph,
    derived: &LinearHypergraph,
    c: &Coloring,
    n: usize,
) -> Result<Coloring> {
    for v in derived.vertices() {
        if c.get(v).is_none() {
            return Err(Error::PartialColoring(v.clone()));
        }
    }
    let incidences = h.incidences();
    let mut colors: Vec<Option<usize>> = h.vertices().iter().map(|v| c.get(v)).collect();
    for v in 0..colors.len() {
        if colors[v].is_some() {
            continue;
        }
        let taken: Vec<usize> = incidences[v]
            .iter()
            .flat_map(|&e| h.edges()[e].iter())
            .filter_map(|&u| colors[u])
            .collect();
        let free = (0..n)
            .find(|col| !taken.contains(col))
            .ok_or_else(|| Error::NoFreeColor(h.vertices()[v].clone()))?;
        colors[v] = Some(free);
    }
    Ok(Coloring(
        h.vertices()
            .iter()
            .cloned()
            .zip(colors.into_iter().map(|c| c.expect("every vertex colored")))
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::auxgraph::{build_aux, default_spanning_trees, AuxKind};
    use crate::hypergraph::{parse_hypergraph, strip_degree_one};
    use crate::orientation::{complete_orientation, orient_g1};
    use crate::scalar::Fp;

    fn tri3() -> LinearHypergraph {
        parse_hypergraph("a b c\na d e\nb d f").unwrap()
    }

    #[test]
    fn verify_detects_clash_and_partial() {
        let h = tri3();
        let mut c = brute_force_coloring(&h, 3).unwrap();
        assert!(verify_coloring(&h, &c).unwrap());
        c.0.insert("c".into(), c.get("a").unwrap());
        assert!(!verify_coloring(&h, &c).unwrap());
        c.0.remove("f");
        assert_eq!(verify_coloring(&h, &c), Err(Error::PartialColoring("f".into())));
    }

    #[test]
    fn brute_force_exhausts() {
        let h = tri3();
        assert!(brute_force_coloring(&h, 2).is_none());
        let c = brute_force_coloring(&h, 3).unwrap();
        assert_eq!(c.get("a"), Some(0));
        assert_eq!(c.get("b"), Some(1));
    }

    #[test]
    fn decode_tri3_point() {
        let h = tri3();
        let aux = build_aux(&h, &default_spanning_trees(&h).unwrap(), AuxKind::G1).unwrap();
        // a=0 b=1 c=2 d=2 e=1 f=0
        let colors = [0, 1, 2, 0, 2, 1, 1, 2, 0];
        match coloring_from_point::<Fp<3>>(&h, &aux, &colors).unwrap() {
            Decoded::Coloring { coloring } => {
                assert!(verify_coloring(&h, &coloring).unwrap());
                assert_eq!(coloring.get("d"), Some(2));
            }
            other => panic!("{other:?}"),
        }
        let bad = [0, 1, 2, 1, 2, 0, 1, 2, 0];
        assert_eq!(
            coloring_from_point::<Fp<3>>(&h, &aux, &bad).unwrap(),
            Decoded::Rejected {
                violated: vec!["consistent".into()]
            }
        );
    }

    #[test]
    fn search_pipeline_tri3() {
        let h = tri3();
        let aux = build_aux(&h, &default_spanning_trees(&h).unwrap(), AuxKind::G1).unwrap();
        let target = complete_orientation(&aux, &orient_g1(&aux).unwrap())
            .unwrap()
            .in_degrees(3);
        let point = nonvanishing_search::<Fp<3>>(&aux, &target).unwrap().unwrap();
        let Decoded::Coloring { coloring } = coloring_from_point::<Fp<3>>(&h, &aux, &point).unwrap() else {
            panic!("search returned a vanishing point");
        };
        assert!(verify_coloring(&h, &coloring).unwrap());
    }

    #[test]
    fn extension_over_stripped_vertices() {
        let h = tri3();
        let (derived, removed) = strip_degree_one(&h);
        assert_eq!(removed.len(), 3);
        let c = brute_force_coloring(&derived, 3).unwrap();
        let full = extend_coloring(&h, &derived, &c, 3).unwrap();
        assert!(verify_coloring(&h, &full).unwrap());
        let same = extend_coloring(&h, &h, &brute_force_coloring(&h, 3).unwrap(), 3).unwrap();
        assert_eq!(same, brute_force_coloring(&h, 3).unwrap());
    }
}
