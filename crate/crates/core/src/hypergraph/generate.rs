use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{uniformize, Builder, LinearHypergraph};
use crate::error::{Error, Result};
use crate::scalar::is_prime_u64;

const MAX_REJECTIONS_PER_EDGE: usize = 10_000;

/// Structured and random instance families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `n` edges of size `n` sampled from a pool of `n^2` vertices.
    Random { n: usize },
    /// One centre vertex on all `n` edges, every other vertex private.
    NearPencil { n: usize },
    /// Lines of the projective plane over `F_q` (prime `q`), padded to
    /// standard form with `n = q^2 + q + 1`.
    TruncatedProjectivePlane { q: u64 },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Random { .. } => "random",
            Family::NearPencil { .. } => "near_pencil",
            Family::TruncatedProjectivePlane { .. } => "truncated_projective_plane",
        }
    }
}

/// Generates a standard-form linear hypergraph. Deterministic in `seed`;
/// only the random family consumes it.
pub fn generate(family: Family, seed: u64) -> Result<LinearHypergraph> {
    let h = match family {
        Family::Random { n } => random(n, seed)?,
        Family::NearPencil { n } => near_pencil(n)?,
        Family::TruncatedProjectivePlane { q } => projective_plane(q)?,
    };
    let n = h.n();
    uniformize(&h, n)
}

fn random(n: usize, seed: u64) -> Result<LinearHypergraph> {
    if n == 0 {
        return Err(Error::InvalidParams("random family needs n >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = n * n;
    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(n);
    for edge_index in 0..n {
        let mut accepted = None;
        for _ in 0..MAX_REJECTIONS_PER_EDGE {
            let mut candidate = rand::seq::index::sample(&mut rng, pool, n).into_vec();
            candidate.sort_unstable();
            let clashes = edges
                .iter()
                .any(|e| e.iter().filter(|v| candidate.binary_search(v).is_ok()).count() >= 2);
            if !clashes {
                accepted = Some(candidate);
                break;
            }
        }
        match accepted {
            Some(edge) => edges.push(edge),
            None => {
                return Err(Error::GenerationFailed {
                    edge: edge_index + 1,
                    attempts: MAX_REJECTIONS_PER_EDGE,
                })
            }
        }
    }
    let mut builder = Builder::default();
    let edges = edges
        .iter()
        .map(|e| e.iter().map(|v| builder.intern(&format!("v{v}"))).collect())
        .collect();
    LinearHypergraph::new(n, builder.names, edges)
}

fn near_pencil(n: usize) -> Result<LinearHypergraph> {
    if n == 0 {
        return Err(Error::InvalidParams("near_pencil needs n >= 1".into()));
    }
    let edges: Vec<Vec<String>> = (1..=n)
        .map(|i| {
            std::iter::once("c".to_string())
                .chain((1..n).map(|j| format!("e{i}.{j}")))
                .collect()
        })
        .collect();
    LinearHypergraph::from_named_edges(n, &edges)
}

/// One instance per isomorphism class of standard-form linear hypergraphs
/// with `n = 3`, keyed by name. Classes are determined by which pairs of
/// edges meet and whether three meeting pairs share a point.
pub fn n3_classes() -> Vec<(&'static str, LinearHypergraph)> {
    [
        ("disjoint", "a b c\nd e f\ng h i"),
        ("one_pair", "a b c\na d e\nf g h"),
        ("path", "a b c\na d e\nd f g"),
        ("triangle", "a b c\na d e\nb d f"),
        ("pencil", "a b c\na d e\na f g"),
    ]
    .into_iter()
    .map(|(name, text)| {
        let h = super::parse_hypergraph(text).expect("fixed instance parses");
        (name, h)
    })
    .collect()
}

/// Normalized representatives of the 1-dimensional subspaces of `F_q^3`.
fn projective_points(q: u64) -> Vec<[u64; 3]> {
    let mut points = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let p = [a, b, c];
                if p.iter().find(|&&x| x != 0) == Some(&1) {
                    points.push(p);
                }
            }
        }
    }
    points
}

fn projective_plane(q: u64) -> Result<LinearHypergraph> {
    if !is_prime_u64(q) {
        return Err(Error::InvalidParams(format!(
            "projective planes are supported for prime q only, got {q}"
        )));
    }
    if q > 31 {
        return Err(Error::InvalidParams(format!("q={q} is too large")));
    }
    let points = projective_points(q);
    let names: Vec<String> = points
        .iter()
        .map(|p| format!("p{}.{}.{}", p[0], p[1], p[2]))
        .collect();
    // Lines are the same normalized triples under the dot-product incidence.
    let edges: Vec<Vec<String>> = points
        .iter()
        .map(|line| {
            points
                .iter()
                .zip(&names)
                .filter(|(p, _)| (line[0] * p[0] + line[1] * p[1] + line[2] * p[2]) % q == 0)
                .map(|(_, name)| name.clone())
                .collect()
        })
        .collect();
    let n = (q * q + q + 1) as usize;
    LinearHypergraph::from_named_edges(n, &edges)
}
