//! Coordinates shared by the auxiliary graphs, orientations and polynomials.
//!
//! Clique vertex `(i, j)` is the `j`-th vertex of edge `F_i`; it carries the
//! polynomial variable `x_{i,j}`. Internally both indices are 0-based and
//! variables are laid out clique-major (`i * n + j`). Serialized forms use
//! 1-based `[i, j]` pairs.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Vertex `v_{i,j}` of base clique `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliqueVertex {
    pub clique: usize,
    pub position: usize,
}

impl CliqueVertex {
    pub const fn new(clique: usize, position: usize) -> Self {
        CliqueVertex { clique, position }
    }

    /// Index of the variable `x_{i,j}` among `n * n` variables.
    pub fn var(self, n: usize) -> usize {
        self.clique * n + self.position
    }

    pub fn from_var(var: usize, n: usize) -> Self {
        CliqueVertex::new(var / n, var % n)
    }
}

impl fmt::Display for CliqueVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.clique + 1, self.position + 1)
    }
}

impl Serialize for CliqueVertex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.clique + 1, self.position + 1].serialize(s)
    }
}

impl<'de> Deserialize<'de> for CliqueVertex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [i, j] = <[usize; 2]>::deserialize(d)?;
        if i == 0 || j == 0 {
            return Err(serde::de::Error::custom("clique coordinates are 1-based"));
        }
        Ok(CliqueVertex::new(i - 1, j - 1))
    }
}

/// Exponents of a monomial, one entry per variable.
///
/// For the coloring polynomials the variables are the `n * n` clique vertices
/// in clique-major order; the same type doubles as an in-degree vector.
/// Ordering is graded lexicographic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn zeros(len: usize) -> Self {
        ExponentVector(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Every entry is at most `bound`.
    pub fn is_bounded_by(&self, bound: u32) -> bool {
        self.0.iter().all(|&e| e <= bound)
    }

    pub fn at(&self, v: CliqueVertex, n: usize) -> u32 {
        self.0[v.var(n)]
    }

    /// Entries of clique `i` when the vector is laid out as `n * n`.
    pub fn clique(&self, i: usize, n: usize) -> &[u32] {
        &self.0[i * n..(i + 1) * n]
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `{"(i,j)": e}` map over the nonzero entries of an `n * n` vector.
    pub fn to_json_map(&self, n: usize) -> BTreeMap<String, u32> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(var, &e)| (CliqueVertex::from_var(var, n).to_string(), e))
            .collect()
    }

    /// Inverse of [`ExponentVector::to_json_map`].
    pub fn from_json_map(map: &BTreeMap<String, u32>, n: usize) -> Result<Self, String> {
        let mut exps = vec![0; n * n];
        for (key, &e) in map {
            let inner = key
                .trim()
                .strip_prefix('(')
                .and_then(|k| k.strip_suffix(')'))
                .ok_or_else(|| format!("bad monomial key {key:?}"))?;
            let (i, j) = inner
                .split_once(',')
                .ok_or_else(|| format!("bad monomial key {key:?}"))?;
            let i: usize = i.trim().parse().map_err(|_| format!("bad clique in {key:?}"))?;
            let j: usize = j.trim().parse().map_err(|_| format!("bad position in {key:?}"))?;
            if i == 0 || j == 0 || i > n || j > n {
                return Err(format!("monomial key {key:?} out of range for n={n}"));
            }
            exps[(i - 1) * n + (j - 1)] = e;
        }
        Ok(ExponentVector(exps))
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_order_compares_degree_first() {
        let a = ExponentVector(vec![0, 3]);
        let b = ExponentVector(vec![2, 0]);
        let c = ExponentVector(vec![1, 1]);
        assert!(b < a);
        assert!(c < b);
    }

    #[test]
    fn json_map_round_trip() {
        let v = ExponentVector(vec![0, 2, 1, 0]);
        let map = v.to_json_map(2);
        assert_eq!(map.get("(1,2)"), Some(&2));
        assert_eq!(map.get("(2,1)"), Some(&1));
        assert_eq!(ExponentVector::from_json_map(&map, 2).unwrap(), v);
        let mut bad = BTreeMap::new();
        bad.insert("(3,1)".to_string(), 1);
        assert!(ExponentVector::from_json_map(&bad, 2).is_err());
    }

    #[test]
    fn clique_vertex_serializes_one_based() {
        let v = CliqueVertex::new(0, 2);
        assert_eq!(serde_json::to_string(&v).unwrap(), "[1,3]");
        let back: CliqueVertex = serde_json::from_str("[1,3]").unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<CliqueVertex>("[0,1]").is_err());
    }
}
