//! The coloring polynomials `P1 = prod Q_i * prod R_{i,k}` and
//! `P2 = prod Q_i * prod Phi_{i,k}` of an auxiliary graph.
//!
//! * `Q_i = prod_{j < j'} (x_{i,j} - x_{i,j'})`
//! * `R_{i,k} = (x_{i,j} - x_{k,l})^(n-1) - 1` for the tree edge
//!   `v_{i,j} v_{k,l}` joining cliques `i < k`, else 1
//! * `Phi_{i,k} = prod_{m != l} (x_{i,j} - x_{k,m})` for the same tree edge,
//!   else 1
//!
//! `P1` pairs with `G1` and lives over `F_n` for prime `n`; `P2` pairs with
//! `G2` and has integer coefficients.

use crate::auxgraph::{AuxGraph, AuxKind};
use crate::error::{Error, Result};
use crate::index::{CliqueVertex, ExponentVector};
use crate::scalar::{is_prime_u64, Scalar};

use super::coefficient::GridEvaluator;
use super::poly::SparsePolynomial;

/// Default bound on the estimated number of terms during expansion.
pub const DEFAULT_MAX_TERMS: u128 = 10_000_000;

/// Environment variable overriding [`DEFAULT_MAX_TERMS`].
pub const MAX_TERMS_ENV: &str = "EFL_MAX_TERMS";

pub fn max_terms_from_env() -> u128 {
    std::env::var(MAX_TERMS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_TERMS)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PolyKind {
    P1,
    P2,
}

impl PolyKind {
    pub fn of(kind: AuxKind) -> Self {
        match kind {
            AuxKind::G1 => PolyKind::P1,
            AuxKind::G2 => PolyKind::P2,
        }
    }
}

/// Checks that `F` can host the polynomial of `aux`.
pub fn check_field<F: Scalar>(aux: &AuxGraph) -> Result<()> {
    if PolyKind::of(aux.kind()) == PolyKind::P1 {
        let n = aux.n() as u64;
        if !is_prime_u64(n) {
            return Err(Error::NotPrime(n));
        }
        if F::characteristic() != n {
            return Err(Error::FieldMismatch {
                n: aux.n(),
                actual: F::characteristic(),
            });
        }
    }
    Ok(())
}

/// The coloring polynomial of an auxiliary graph, evaluated or expanded on
/// demand.
#[derive(Clone, Copy, Debug)]
pub struct ColoringPolynomial<'a> {
    aux: &'a AuxGraph,
}

impl<'a> ColoringPolynomial<'a> {
    pub fn new<F: Scalar>(aux: &'a AuxGraph) -> Result<Self> {
        check_field::<F>(aux)?;
        Ok(ColoringPolynomial { aux })
    }

    pub fn kind(&self) -> PolyKind {
        PolyKind::of(self.aux.kind())
    }

    pub fn aux(&self) -> &AuxGraph {
        self.aux
    }

    pub fn nvars(&self) -> usize {
        self.aux.n() * self.aux.n()
    }

    /// Product of the Vandermonde factors `Q_i` only.
    pub fn eval_cliques<F: Scalar>(&self, point: &[F]) -> F {
        let n = self.aux.n();
        let mut acc = F::one();
        for i in 0..n {
            let row = &point[i * n..(i + 1) * n];
            for j in 0..n {
                for l in j + 1..n {
                    let d = row[j].clone() - row[l].clone();
                    if d.is_zero() {
                        return F::zero();
                    }
                    acc = acc * d;
                }
            }
        }
        acc
    }

    /// Value of the identifier factor for one tree edge.
    fn eval_identifier<F: Scalar>(&self, u: CliqueVertex, v: CliqueVertex, point: &[F]) -> F {
        let n = self.aux.n();
        let xu = point[u.var(n)].clone();
        match self.kind() {
            PolyKind::P1 => (xu - point[v.var(n)].clone()).pow(n as u32 - 1) - F::one(),
            PolyKind::P2 => (0..n)
                .filter(|&m| m != v.position)
                .fold(F::one(), |acc, m| {
                    acc * (xu.clone() - point[CliqueVertex::new(v.clique, m).var(n)].clone())
                }),
        }
    }

    pub fn eval<F: Scalar>(&self, point: &[F]) -> F {
        let mut acc = self.eval_cliques(point);
        if acc.is_zero() {
            return acc;
        }
        for (u, v) in self.aux.trees().edges() {
            let f = self.eval_identifier(u, v, point);
            if f.is_zero() {
                return f;
            }
            acc = acc * f;
        }
        acc
    }

    fn linear<R: Scalar>(&self, plus: CliqueVertex, minus: CliqueVertex) -> SparsePolynomial<R> {
        let n = self.aux.n();
        let nv = self.nvars();
        &SparsePolynomial::variable(nv, plus.var(n)) - &SparsePolynomial::variable(nv, minus.var(n))
    }

    /// Expanded factors: `Q_1..Q_n` followed by one identifier factor per
    /// tree edge.
    fn factors<R: Scalar>(&self) -> Vec<SparsePolynomial<R>> {
        let n = self.aux.n();
        let nv = self.nvars();
        let mut factors = Vec::new();
        for i in 0..n {
            let mut q = SparsePolynomial::one(nv);
            for j in 0..n {
                for l in j + 1..n {
                    q = &q * &self.linear(CliqueVertex::new(i, j), CliqueVertex::new(i, l));
                }
            }
            factors.push(q);
        }
        for (u, v) in self.aux.trees().edges() {
            let f = match self.kind() {
                PolyKind::P1 => {
                    let p = self.linear::<R>(u, v).pow(n as u32 - 1);
                    &p - &SparsePolynomial::one(nv)
                }
                PolyKind::P2 => (0..n).filter(|&m| m != v.position).fold(
                    SparsePolynomial::one(nv),
                    |acc, m| &acc * &self.linear(u, CliqueVertex::new(v.clique, m)),
                ),
            };
            factors.push(f);
        }
        factors
    }

    /// Fully expanded polynomial. Refuses when the product of the factor
    /// sizes exceeds `max_terms`.
    pub fn expand<R: Scalar>(&self, max_terms: u128) -> Result<SparsePolynomial<R>> {
        check_field::<R>(self.aux)?;
        let factors = self.factors::<R>();
        let estimate = factors
            .iter()
            .fold(1u128, |acc, f| acc.saturating_mul(f.len() as u128));
        if estimate > max_terms {
            return Err(Error::Infeasible {
                estimate,
                bound: max_terms,
            });
        }
        Ok(factors
            .iter()
            .fold(SparsePolynomial::one(self.nvars()), |acc, f| &acc * f))
    }
}

impl<F: Scalar> GridEvaluator<F> for ColoringPolynomial<'_> {
    fn eval(&self, point: &[F]) -> F {
        ColoringPolynomial::eval(self, point)
    }

    /// A repeated value inside one clique kills `Q_i`.
    fn vanishes_on_prefix(&self, prefix: &[F]) -> bool {
        let n = self.aux.n();
        let Some(last) = prefix.last() else {
            return false;
        };
        let start = (prefix.len() - 1) / n * n;
        prefix[start..prefix.len() - 1].iter().any(|x| x == last)
    }
}

/// `P(point)` for the polynomial paired with `aux`.
pub fn eval_p<F: Scalar>(aux: &AuxGraph, point: &[F]) -> Result<F> {
    let poly = ColoringPolynomial::new::<F>(aux)?;
    if point.len() != poly.nvars() {
        return Err(Error::PointSize {
            expected: poly.nvars(),
            actual: point.len(),
        });
    }
    Ok(poly.eval(point))
}

/// Expansion of the polynomial paired with `aux`.
pub fn expand_p<R: Scalar>(aux: &AuxGraph, max_terms: u128) -> Result<SparsePolynomial<R>> {
    ColoringPolynomial::new::<R>(aux)?.expand(max_terms)
}

/// Embeds colors `0..n` into a scalar type.
pub fn point_from_colors<F: Scalar>(colors: &[usize]) -> Vec<F> {
    colors.iter().map(|&c| F::from_natural(c)).collect()
}

/// Every `(n-1)`-bounded exponent vector on `n * n` variables of the given
/// total degree, in graded lexicographic order.
pub fn bounded_targets(n: usize, total: u64) -> Vec<ExponentVector> {
    let len = n * n;
    let bound = n.saturating_sub(1) as u32;
    let mut out = Vec::new();
    let mut cur = vec![0u32; len];
    fn rec(
        var: usize,
        left: u64,
        bound: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<ExponentVector>,
    ) {
        let len = cur.len();
        if var == len {
            if left == 0 {
                out.push(ExponentVector(cur.clone()));
            }
            return;
        }
        let rest_cap = (len - var - 1) as u64 * bound as u64;
        let lo = left.saturating_sub(rest_cap);
        let hi = left.min(bound as u64);
        for e in lo..=hi {
            cur[var] = e as u32;
            rec(var + 1, left - e, bound, cur, out);
        }
        cur[var] = 0;
    }
    if total <= len as u64 * bound as u64 {
        rec(0, total, bound, &mut cur, &mut out);
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::auxgraph::{build_aux, default_spanning_trees, expected_total_degree};
    use crate::hypergraph::{parse_hypergraph, LinearHypergraph};
    use crate::scalar::Fp;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::Zero;

    type F3 = Fp<3>;

    fn tri3() -> LinearHypergraph {
        parse_hypergraph("a b c\na d e\nb d f").unwrap()
    }

    fn aux(h: &LinearHypergraph, kind: AuxKind) -> AuxGraph {
        build_aux(h, &default_spanning_trees(h).unwrap(), kind).unwrap()
    }

    /// Copies of each vertex get the vertex's color.
    fn point_for(h: &LinearHypergraph, colors: &[usize]) -> Vec<usize> {
        h.edges().iter().flat_map(|e| e.iter().map(|&v| colors[v])).collect()
    }

    #[test]
    fn disjoint_edges_vanish_on_repeat() {
        let h = parse_hypergraph("a b c\nd e f\ng h i").unwrap();
        let g = aux(&h, AuxKind::G1);
        let pt: Vec<F3> = point_from_colors(&[0, 0, 1, 0, 1, 2, 0, 1, 2]);
        assert!(eval_p(&g, &pt).unwrap().is_zero());
    }

    #[test]
    fn tri3_proper_coloring_is_nonzero() {
        let h = tri3();
        // a=0 b=1 c=2 d=2 e=1 f=0 in vertex order a b c d e f.
        let colors = point_for(&h, &[0, 1, 2, 2, 1, 0]);
        let g1 = aux(&h, AuxKind::G1);
        assert!(!eval_p::<F3>(&g1, &point_from_colors(&colors)).unwrap().is_zero());
        let g2 = aux(&h, AuxKind::G2);
        assert!(!eval_p::<BigRational>(&g2, &point_from_colors(&colors)).unwrap().is_zero());
    }

    #[test]
    fn tri3_mismatched_copies_vanish() {
        let h = tri3();
        // Cliques rainbow, but a gets 0 in F1 and 1 in F2.
        let colors = vec![0, 1, 2, 1, 0, 2, 1, 2, 0];
        let g1 = aux(&h, AuxKind::G1);
        assert!(eval_p::<F3>(&g1, &point_from_colors(&colors)).unwrap().is_zero());
        let g2 = aux(&h, AuxKind::G2);
        assert!(eval_p::<BigRational>(&g2, &point_from_colors(&colors)).unwrap().is_zero());
    }

    #[test]
    fn p1_needs_matching_prime_field() {
        let h = tri3();
        let g1 = aux(&h, AuxKind::G1);
        let pt: Vec<Fp<5>> = point_from_colors(&[0; 9]);
        assert!(matches!(eval_p(&g1, &pt), Err(Error::FieldMismatch { .. })));
        let h4 = parse_hypergraph("a b c d\ne f g h\ni j k l\nm o p q").unwrap();
        let g = aux(&h4, AuxKind::G1);
        let pt: Vec<BigInt> = point_from_colors(&[0; 16]);
        assert_eq!(eval_p(&g, &pt), Err(Error::NotPrime(4)));
        let pt: Vec<F3> = point_from_colors(&[0; 8]);
        assert!(matches!(eval_p(&g1, &pt), Err(Error::PointSize { .. })));
    }

    #[test]
    fn vandermonde_product_expansion() {
        let h = parse_hypergraph("a b c\nd e f\ng h i").unwrap();
        let g = aux(&h, AuxKind::G2);
        let p = expand_p::<BigInt>(&g, DEFAULT_MAX_TERMS).unwrap();
        assert_eq!(p.len(), 216);
        for (e, c) in p.terms() {
            assert!(c == &BigInt::from(1) || c == &BigInt::from(-1));
            for i in 0..3 {
                let mut row = e.clique(i, 3).to_vec();
                row.sort();
                assert_eq!(row, vec![0, 1, 2]);
            }
        }
    }

    #[test]
    fn tri3_expansion_degree_and_evaluation() {
        let h = tri3();
        for kind in [AuxKind::G1, AuxKind::G2] {
            let g = aux(&h, kind);
            let expected = expected_total_degree(&h);
            match kind {
                AuxKind::G1 => {
                    let p = expand_p::<F3>(&g, DEFAULT_MAX_TERMS).unwrap();
                    assert_eq!(p.total_degree(), Some(expected));
                    for colors in sample_points(25, 3) {
                        let pt: Vec<F3> = point_from_colors(&colors);
                        assert_eq!(p.eval(&pt), eval_p(&g, &pt).unwrap());
                    }
                }
                AuxKind::G2 => {
                    let p = expand_p::<BigInt>(&g, DEFAULT_MAX_TERMS).unwrap();
                    assert_eq!(p.total_degree(), Some(expected));
                    for colors in sample_points(25, 7) {
                        let pt: Vec<BigInt> = colors.iter().map(|&c| BigInt::from(c as i64 - 3)).collect();
                        assert_eq!(p.eval(&pt), eval_p(&g, &pt).unwrap());
                    }
                }
            }
        }
    }

    fn sample_points(count: usize, modulus: usize) -> Vec<Vec<usize>> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        (0..count)
            .map(|_| (0..9).map(|_| rng.gen_range(0..modulus)).collect())
            .collect()
    }

    #[test]
    fn feasibility_bound() {
        let h = tri3();
        let g = aux(&h, AuxKind::G2);
        assert!(matches!(expand_p::<BigInt>(&g, 10), Err(Error::Infeasible { .. })));
    }

    #[test]
    fn bounded_targets_count() {
        // Vectors in {0,1,2}^9 summing to 15: complement deficit 3 spread
        // over 9 slots with each slot at most 2.
        assert_eq!(bounded_targets(3, 15).len(), 156);
        assert_eq!(bounded_targets(3, 19).len(), 0);
        assert!(bounded_targets(3, 9).iter().all(|t| t.total_degree() == 9));
    }

    #[test]
    fn prefix_pruning() {
        let h = tri3();
        let g = aux(&h, AuxKind::G2);
        let poly = ColoringPolynomial::new::<BigInt>(&g).unwrap();
        let pre: Vec<BigInt> = point_from_colors(&[0, 1, 0]);
        assert!(GridEvaluator::vanishes_on_prefix(&poly, &pre));
        let pre: Vec<BigInt> = point_from_colors(&[0, 1, 2, 0]);
        assert!(!GridEvaluator::vanishes_on_prefix(&poly, &pre));
    }
}
