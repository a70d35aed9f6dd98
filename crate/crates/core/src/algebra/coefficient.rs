//! Three independent ways to read off a coefficient of the coloring
//! polynomial: lookup in the expansion, signed enumeration of orientations,
//! and interpolation over a product grid.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::auxgraph::AuxGraph;
use crate::error::{Error, Result};
use crate::index::{CliqueVertex, ExponentVector};
use crate::scalar::{binomial, Field, Scalar};

use super::families::{check_field, expand_p, ColoringPolynomial};
use super::poly::SparsePolynomial;

/// Something that can be evaluated at grid points.
pub trait GridEvaluator<F>: Sync {
    fn eval(&self, point: &[F]) -> F;

    /// `true` if every completion of `prefix` evaluates to zero. Called each
    /// time one more coordinate is fixed.
    fn vanishes_on_prefix(&self, _prefix: &[F]) -> bool {
        false
    }
}

impl<F: Scalar> GridEvaluator<F> for SparsePolynomial<F> {
    fn eval(&self, point: &[F]) -> F {
        SparsePolynomial::eval(self, point)
    }
}

/// Adapts a closure to [`GridEvaluator`].
pub struct FnEvaluator<G>(pub G);

impl<F, G> GridEvaluator<F> for FnEvaluator<G>
where
    G: Fn(&[F]) -> F + Sync,
{
    fn eval(&self, point: &[F]) -> F {
        (self.0)(point)
    }
}

/// Per-variable finite sets `C_v`.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid<F> {
    pub sets: Vec<Vec<F>>,
}

impl<F: Scalar> Grid<F> {
    pub fn new(sets: Vec<Vec<F>>) -> Self {
        Grid { sets }
    }

    /// `C_v = {0, 1, ..., d_v}`.
    pub fn standard(degrees: &ExponentVector) -> Self {
        Grid {
            sets: degrees
                .0
                .iter()
                .map(|&d| (0..=d as usize).map(F::from_natural).collect())
                .collect(),
        }
    }

    pub fn point_count(&self) -> u128 {
        self.sets
            .iter()
            .fold(1u128, |acc, s| acc.saturating_mul(s.len() as u128))
    }
}

/// Which engine produced a coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Expand,
    Orient,
    Formula,
}

impl Engine {
    pub const ALL: [Engine; 3] = [Engine::Expand, Engine::Orient, Engine::Formula];

    pub fn name(self) -> &'static str {
        match self {
            Engine::Expand => "expand",
            Engine::Orient => "orient",
            Engine::Formula => "formula",
        }
    }
}

pub fn coefficient_by_expansion<R: Scalar>(p: &SparsePolynomial<R>, target: &ExponentVector) -> R {
    p.coefficient(target)
}

fn check_target(aux: &AuxGraph, target: &ExponentVector) -> Result<()> {
    let n = aux.n();
    if target.len() != n * n {
        return Err(Error::PointSize {
            expected: n * n,
            actual: target.len(),
        });
    }
    let expected = aux.edge_count();
    if target.total_degree() != expected {
        return Err(Error::NonMaximalTarget {
            actual: target.total_degree(),
            expected,
        });
    }
    Ok(())
}

/// An edge bundle: `mult` parallel instances between `u < v`.
#[derive(Clone, Copy, Debug)]
struct Item {
    u: usize,
    v: usize,
    mult: u32,
}

fn items_of(aux: &AuxGraph) -> Vec<Item> {
    let n = aux.n();
    let var = |c: CliqueVertex| c.var(n);
    let mut items: Vec<Item> = aux
        .clique_edges()
        .map(|(a, b)| Item {
            u: var(a.min(b)),
            v: var(a.max(b)),
            mult: 1,
        })
        .collect();
    items.extend(aux.identifier_edges().iter().map(|e| Item {
        u: var(e.u.min(e.v)),
        v: var(e.u.max(e.v)),
        mult: e.mult as u32,
    }));
    items
}

/// `rem[k][w]`: instances among `items[k..]` incident to `w`.
fn remaining_capacity(items: &[Item], nvars: usize) -> Vec<Vec<u32>> {
    let mut rem = vec![vec![0u32; nvars]; items.len() + 1];
    for k in (0..items.len()).rev() {
        rem[k] = rem[k + 1].clone();
        rem[k][items[k].u] += items[k].mult;
        rem[k][items[k].v] += items[k].mult;
    }
    rem
}

struct OrientationCounter<'a> {
    items: &'a [Item],
    rem: Vec<Vec<u32>>,
    binom: Vec<Vec<BigInt>>,
}

impl OrientationCounter<'_> {
    /// Signed count of completions from item `k` on, with `need` the
    /// in-degree still missing at every vertex.
    fn count(&self, k: usize, need: &mut [u32]) -> BigInt {
        if k == self.items.len() {
            return BigInt::one();
        }
        let Item { u, v, mult } = self.items[k];
        let mut total = BigInt::zero();
        // `t` instances point at the larger endpoint `v`.
        for t in 0..=mult {
            let s = mult - t;
            if need[v] < t || need[u] < s {
                continue;
            }
            need[v] -= t;
            need[u] -= s;
            if need[u] <= self.rem[k + 1][u] && need[v] <= self.rem[k + 1][v] {
                let sub = self.count(k + 1, need);
                if !sub.is_zero() {
                    let term = &self.binom[mult as usize][t as usize] * sub;
                    if t % 2 == 0 {
                        total += term;
                    } else {
                        total -= term;
                    }
                }
            }
            need[v] += t;
            need[u] += s;
        }
        total
    }
}

/// Sum of the signs of all orientations of `aux` (every instance, clique and
/// identifier) with in-degree vector `target`. Equals the coefficient of
/// `x^target` in the coloring polynomial when `target` has maximal degree.
pub fn coefficient_by_orientations(aux: &AuxGraph, target: &ExponentVector) -> Result<BigInt> {
    check_target(aux, target)?;
    let n = aux.n();
    let nvars = n * n;
    let items = items_of(aux);
    let rem = remaining_capacity(&items, nvars);
    if (0..nvars).any(|w| target.0[w] > rem[0][w]) {
        return Ok(BigInt::zero());
    }
    let max_mult = items.iter().map(|i| i.mult).max().unwrap_or(1) as u64;
    let binom = (0..=max_mult)
        .map(|m| (0..=m).map(|t| binomial(m, t)).collect())
        .collect();
    let counter = OrientationCounter {
        items: &items,
        rem,
        binom,
    };
    if items.is_empty() {
        return Ok(BigInt::one());
    }
    // Split on the first decision; partial sums are exact so the combined
    // result does not depend on the split.
    let Item { u, v, mult } = items[0];
    let partial: Vec<BigInt> = (0..=mult)
        .into_par_iter()
        .map(|t| {
            let s = mult - t;
            let mut need = target.0.clone();
            if need[v] < t || need[u] < s {
                return BigInt::zero();
            }
            need[v] -= t;
            need[u] -= s;
            if need[u] > counter.rem[1][u] || need[v] > counter.rem[1][v] {
                return BigInt::zero();
            }
            let term = &counter.binom[mult as usize][t as usize] * counter.count(1, &mut need);
            if t % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .collect();
    Ok(partial.into_iter().sum())
}

/// `1 / phi_v'(c)` for every element `c` of every set, where
/// `phi_v(z) = prod_{c' in C_v} (z - c')`.
fn grid_weights<F: Field>(grid: &Grid<F>) -> Result<Vec<Vec<F>>> {
    grid.sets
        .iter()
        .enumerate()
        .map(|(var, set)| {
            set.iter()
                .enumerate()
                .map(|(a, c)| {
                    let deriv = set
                        .iter()
                        .enumerate()
                        .filter(|&(b, _)| b != a)
                        .fold(F::one(), |acc, (_, d)| acc * (c.clone() - d.clone()));
                    deriv.inverse().ok_or(Error::ZeroDenominator { var })
                })
                .collect()
        })
        .collect()
}

struct FormulaSum<'a, F, E> {
    evaluator: &'a E,
    grid: &'a Grid<F>,
    weights: Vec<Vec<F>>,
}

impl<F: Field, E: GridEvaluator<F>> FormulaSum<'_, F, E> {
    fn sum(&self, point: &mut Vec<F>, weight: F) -> F {
        let var = point.len();
        if var == self.grid.sets.len() {
            return self.evaluator.eval(point) * weight;
        }
        let mut acc = F::zero();
        for (c, w) in self.grid.sets[var].iter().zip(&self.weights[var]) {
            point.push(c.clone());
            if !self.evaluator.vanishes_on_prefix(point) {
                acc = acc + self.sum(point, weight.clone() * w.clone());
            }
            point.pop();
        }
        acc
    }
}

/// Coefficient of `x^degrees` in a polynomial of total degree at most
/// `sum(degrees)`:
///
/// `sum_{c in C_1 x ... x C_m} P(c) / prod_v phi_v'(c_v)`
///
/// with `|C_v| = degrees[v] + 1`. The degree bound is not checked; when it
/// fails the result is meaningless.
pub fn coefficient_by_formula<F, E>(evaluator: &E, degrees: &ExponentVector, grid: &Grid<F>) -> Result<F>
where
    F: Field,
    E: GridEvaluator<F>,
{
    if grid.sets.len() != degrees.len() {
        return Err(Error::GridMismatch(format!(
            "{} sets for {} variables",
            grid.sets.len(),
            degrees.len()
        )));
    }
    for (var, (set, &d)) in grid.sets.iter().zip(&degrees.0).enumerate() {
        if set.len() != d as usize + 1 {
            return Err(Error::GridMismatch(format!(
                "variable {var} has degree {d} but {} grid elements",
                set.len()
            )));
        }
    }
    let weights = grid_weights(grid)?;
    let engine = FormulaSum {
        evaluator,
        grid,
        weights,
    };
    if grid.sets.is_empty() {
        return Ok(evaluator.eval(&[]));
    }
    let partial: Vec<F> = (0..grid.sets[0].len())
        .into_par_iter()
        .map(|a| {
            let mut point = vec![grid.sets[0][a].clone()];
            if evaluator.vanishes_on_prefix(&point) {
                return F::zero();
            }
            engine.sum(&mut point, engine.weights[0][a].clone())
        })
        .collect();
    Ok(partial.into_iter().fold(F::zero(), |acc, x| acc + x))
}

/// Coefficient of the coloring polynomial of `aux` at a maximal target,
/// computed by the requested engine over `F`.
pub fn coloring_coefficient<F: Field>(
    aux: &AuxGraph,
    target: &ExponentVector,
    engine: Engine,
    max_terms: u128,
) -> Result<F> {
    check_field::<F>(aux)?;
    check_target(aux, target)?;
    match engine {
        Engine::Expand => Ok(expand_p::<F>(aux, max_terms)?.coefficient(target)),
        Engine::Orient => Ok(F::from_bigint(&coefficient_by_orientations(aux, target)?)),
        Engine::Formula => {
            let poly = ColoringPolynomial::new::<F>(aux)?;
            coefficient_by_formula(&poly, target, &Grid::standard(target))
        }
    }
}
