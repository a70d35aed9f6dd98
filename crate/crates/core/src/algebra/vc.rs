//! Vandermonde-completable monomials of the identifier part `prod R` (G1) or
//! `prod Phi` (G2), and the orientation count behind them.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::auxgraph::{AuxGraph, AuxKind};
use crate::error::{Error, Result};
use crate::index::ExponentVector;
use crate::orientation::{clique_is_completable, in_degrees_completable};
use crate::scalar::{binomial, is_prime_u64, reduce_mod};

struct Bundle {
    u: usize,
    v: usize,
    mult: u32,
}

fn bundles(aux: &AuxGraph) -> Vec<Bundle> {
    let n = aux.n();
    aux.identifier_edges()
        .iter()
        .map(|e| Bundle {
            u: e.u.min(e.v).var(n),
            v: e.u.max(e.v).var(n),
            mult: e.mult as u32,
        })
        .collect()
}

fn clique_ok(deg: &[u32], var: usize, n: usize) -> bool {
    let i = var / n;
    clique_is_completable(&deg[i * n..(i + 1) * n], n)
}

/// All identifier in-degree vectors passing the per-clique criterion, in
/// graded lexicographic order.
pub fn enumerate_vc_monomials(aux: &AuxGraph) -> Vec<ExponentVector> {
    let n = aux.n();
    let items = bundles(aux);
    let mut out = BTreeSet::new();
    let mut deg = vec![0u32; n * n];
    fn rec(
        k: usize,
        items: &[Bundle],
        n: usize,
        deg: &mut Vec<u32>,
        out: &mut BTreeSet<ExponentVector>,
    ) {
        if k == items.len() {
            out.insert(ExponentVector(deg.clone()));
            return;
        }
        let Bundle { u, v, mult } = items[k];
        for t in 0..=mult {
            deg[v] += t;
            deg[u] += mult - t;
            // In-degrees only grow, so a failing clique stays failed.
            if clique_ok(deg, u, n) && clique_ok(deg, v, n) {
                rec(k + 1, items, n, deg, out);
            }
            deg[v] -= t;
            deg[u] -= mult - t;
        }
    }
    rec(0, &items, n, &mut deg, &mut out);
    out.into_iter().collect()
}

/// Up to `count` distinct VC monomials found by randomized greedy descent.
/// Gives up after `20 * count` dead ends.
pub fn sample_vc_monomials<R: Rng>(aux: &AuxGraph, count: usize, rng: &mut R) -> Vec<ExponentVector> {
    let n = aux.n();
    let items = bundles(aux);
    let mut found = BTreeSet::new();
    let mut failures = 0;
    while found.len() < count && failures < 20 * count.max(1) {
        let mut deg = vec![0u32; n * n];
        let mut order: Vec<usize> = (0..items.len()).collect();
        order.shuffle(rng);
        let mut ok = true;
        for &k in &order {
            let Bundle { u, v, mult } = items[k];
            let choices: Vec<u32> = (0..=mult)
                .filter(|&t| {
                    deg[v] += t;
                    deg[u] += mult - t;
                    let good = clique_ok(&deg, u, n) && clique_ok(&deg, v, n);
                    deg[v] -= t;
                    deg[u] -= mult - t;
                    good
                })
                .collect();
            let Some(&t) = choices.choose(rng) else {
                ok = false;
                break;
            };
            deg[v] += t;
            deg[u] += mult - t;
        }
        if ok && found.insert(ExponentVector(deg)) {
            continue;
        }
        failures += 1;
    }
    found.into_iter().collect()
}

/// Every `beta + sigma` with `sigma` a permutation of `0..n` on each clique
/// and all entries at most `n - 1`: the maximal bounded monomials of the
/// whole polynomial that extend `beta`.
pub fn vc_completions(beta: &ExponentVector, n: usize) -> Vec<ExponentVector> {
    let per_clique: Vec<Vec<Vec<u32>>> = (0..n)
        .map(|i| {
            let base = beta.clique(i, n);
            permutations(n)
                .into_iter()
                .map(|sigma| base.iter().zip(&sigma).map(|(b, s)| b + s).collect::<Vec<u32>>())
                .filter(|row| row.iter().all(|&e| e < n as u32))
                .collect()
        })
        .collect();
    let mut out = vec![Vec::with_capacity(n * n)];
    for rows in &per_clique {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                rows.iter().map(move |row| {
                    let mut next = prefix.clone();
                    next.extend_from_slice(row);
                    next
                })
            })
            .collect();
    }
    let set: BTreeSet<ExponentVector> = out.into_iter().map(ExponentVector).collect();
    set.into_iter().collect()
}

fn permutations(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (0..n as u32).collect();
    fn heap(k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            let j = if k % 2 == 0 { i } else { 0 };
            cur.swap(j, k - 1);
        }
    }
    heap(n, &mut cur, &mut out);
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationCountReport {
    /// Identifier orientations realizing `beta`, counted per instance.
    pub count: BigInt,
    pub all_same_sign: bool,
    pub nonzero_mod_p: bool,
    /// Common sign when `all_same_sign`.
    pub sign: Option<i8>,
    /// Realizing bundle splits (instances toward the higher clique).
    pub split_vectors: Vec<Vec<u32>>,
    /// `prod C(n-1, t_e)` over the split found by leaf peeling.
    pub predicted_count: Option<BigInt>,
}

/// The bundle split forced by `beta`, found by repeatedly resolving a
/// vertex with a single undecided bundle.
pub fn peel_splits(aux: &AuxGraph, beta: &ExponentVector) -> Option<Vec<u32>> {
    let items = bundles(aux);
    let mut need: Vec<i64> = beta.0.iter().map(|&b| b as i64).collect();
    let mut split: Vec<Option<u32>> = vec![None; items.len()];
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); need.len()];
    for (k, b) in items.iter().enumerate() {
        incident[b.u].push(k);
        incident[b.v].push(k);
    }
    loop {
        let leaf = (0..need.len()).find(|&w| {
            incident[w].iter().filter(|&&k| split[k].is_none()).count() == 1
        });
        let Some(w) = leaf else { break };
        let k = *incident[w].iter().find(|&&k| split[k].is_none())?;
        let b = &items[k];
        let toward_w = need[w];
        if toward_w < 0 || toward_w > b.mult as i64 {
            return None;
        }
        let toward_w = toward_w as u32;
        let (t, other, to_other) = if w == b.v {
            (toward_w, b.u, b.mult - toward_w)
        } else {
            (b.mult - toward_w, b.v, b.mult - toward_w)
        };
        split[k] = Some(t);
        need[w] = 0;
        need[other] -= to_other as i64;
    }
    if need.iter().any(|&x| x != 0) {
        return None;
    }
    split.into_iter().collect()
}

/// Enumerates the identifier orientations of a `G1` graph realizing `beta`
/// and checks that they share a sign and that their number is not divisible
/// by `p = n`.
pub fn orientation_count_check(aux: &AuxGraph, beta: &ExponentVector, p: u64) -> Result<OrientationCountReport> {
    if aux.kind() != AuxKind::G1 {
        return Err(Error::WrongKind);
    }
    let n = aux.n();
    if !is_prime_u64(p) || p != n as u64 {
        return Err(Error::NotPrime(p));
    }
    if beta.len() != n * n {
        return Err(Error::PointSize {
            expected: n * n,
            actual: beta.len(),
        });
    }
    let items = bundles(aux);
    let mut splits = Vec::new();
    let mut need = beta.0.clone();
    let mut cur = Vec::with_capacity(items.len());
    fn rec(k: usize, items: &[Bundle], need: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == items.len() {
            if need.iter().all(|&x| x == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let Bundle { u, v, mult } = items[k];
        for t in 0..=mult {
            if need[v] < t || need[u] < mult - t {
                continue;
            }
            need[v] -= t;
            need[u] -= mult - t;
            cur.push(t);
            rec(k + 1, items, need, cur, out);
            cur.pop();
            need[v] += t;
            need[u] += mult - t;
        }
    }
    rec(0, &items, &mut need, &mut cur, &mut splits);

    let weight = |split: &[u32]| -> BigInt {
        split
            .iter()
            .zip(&items)
            .map(|(&t, b)| binomial(b.mult as u64, t as u64))
            .fold(BigInt::one(), |acc, c| acc * c)
    };
    // Every instance toward the higher clique points at the larger endpoint.
    let parity = |split: &[u32]| split.iter().map(|&t| t as u64).sum::<u64>() % 2;
    let count: BigInt = splits.iter().map(|s| weight(s)).sum();
    let signs: BTreeSet<u64> = splits.iter().map(|s| parity(s)).collect();
    let all_same_sign = signs.len() <= 1;
    let sign = match (all_same_sign, signs.iter().next()) {
        (true, Some(0)) => Some(1),
        (true, Some(_)) => Some(-1),
        _ => None,
    };
    Ok(OrientationCountReport {
        nonzero_mod_p: !count.is_zero() && reduce_mod(&count, p) != 0,
        count,
        all_same_sign,
        sign,
        predicted_count: peel_splits(aux, beta).map(|s| weight(&s)),
        split_vectors: splits,
    })
}

/// Whether `beta`, read as identifier in-degrees, is Vandermonde-completable.
pub fn is_vc_monomial(beta: &ExponentVector, n: usize) -> bool {
    beta.len() == n * n && in_degrees_completable(beta, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::auxgraph::{build_aux, default_spanning_trees};
    use crate::hypergraph::parse_hypergraph;
    use crate::orientation::orient_g1;
    use rand::SeedableRng;

    fn tri3_g1() -> AuxGraph {
        let h = parse_hypergraph("a b c\na d e\nb d f").unwrap();
        build_aux(&h, &default_spanning_trees(&h).unwrap(), AuxKind::G1).unwrap()
    }

    #[test]
    fn disjoint_edges_have_one_empty_monomial() {
        let h = parse_hypergraph("a b c\nd e f\ng h i").unwrap();
        let aux = build_aux(&h, &default_spanning_trees(&h).unwrap(), AuxKind::G1).unwrap();
        let all = enumerate_vc_monomials(&aux);
        assert_eq!(all, vec![ExponentVector::zeros(9)]);
        let report = orientation_count_check(&aux, &all[0], 3).unwrap();
        assert_eq!(report.count, BigInt::one());
        assert!(report.nonzero_mod_p && report.all_same_sign);
        assert_eq!(vc_completions(&all[0], 3).len(), 216);
    }

    #[test]
    fn g1_construction_is_enumerated() {
        let aux = tri3_g1();
        let beta = orient_g1(&aux).unwrap().in_degrees(3);
        let all = enumerate_vc_monomials(&aux);
        assert!(all.contains(&beta));
        assert!(all.iter().all(|b| is_vc_monomial(b, 3)));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn single_bundle_split() {
        // a on F1 and F2 only; one bundle with two instances.
        let h = parse_hypergraph("a b c\na d e\nf g h").unwrap();
        let aux = build_aux(&h, &default_spanning_trees(&h).unwrap(), AuxKind::G1).unwrap();
        let mut beta = ExponentVector::zeros(9);
        beta.0[0] = 1;
        beta.0[3] = 1;
        let r = orientation_count_check(&aux, &beta, 3).unwrap();
        assert_eq!(r.count, BigInt::from(2));
        assert!(r.all_same_sign && r.nonzero_mod_p);
        assert_eq!(r.predicted_count, Some(BigInt::from(2)));
    }

    #[test]
    fn tri3_orientation_counts() {
        let aux = tri3_g1();
        for beta in enumerate_vc_monomials(&aux) {
            let r = orientation_count_check(&aux, &beta, 3).unwrap();
            assert!(r.all_same_sign && r.nonzero_mod_p, "{beta:?}");
            assert_eq!(r.predicted_count.as_ref(), Some(&r.count));
        }
    }

    #[test]
    fn orientation_count_needs_matching_prime() {
        let aux = tri3_g1();
        let beta = orient_g1(&aux).unwrap().in_degrees(3);
        assert_eq!(orientation_count_check(&aux, &beta, 5), Err(Error::NotPrime(5)));
    }

    #[test]
    fn sampling_is_deterministic_subset() {
        let aux = tri3_g1();
        let all = enumerate_vc_monomials(&aux);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let a = sample_vc_monomials(&aux, 5, &mut rng);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let b = sample_vc_monomials(&aux, 5, &mut rng);
        assert_eq!(a, b);
        assert!(!a.is_empty());
        assert!(a.iter().all(|m| all.contains(m)));
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
    }
}
