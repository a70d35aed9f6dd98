//! Runtime dispatch of coefficient computations onto concrete scalar types.

use anyhow::{anyhow, bail, Result};
use efl_core::algebra::{
    coefficient_by_formula, coefficient_by_orientations, expand_p, ColoringPolynomial, Engine, Grid,
};
use efl_core::auxgraph::{build_aux, default_spanning_trees};
use efl_core::coloring::{coloring_from_point, nonvanishing_search, Decoded};
use efl_core::orientation::{complete_orientation, orient_g1, orient_g2_pathlike};
use efl_core::scalar::{reduce_mod, rational_to_integer};
use efl_core::{with_prime_field, AuxGraph, AuxKind, ExponentVector, LinearHypergraph, Rational};
use num_bigint::BigInt;
use serde_json::{json, Value};

/// A coefficient of `P1` (residue mod `p`) or `P2` (integer).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coefficient {
    Residue { p: u64, value: u64 },
    Integer(BigInt),
}

impl Coefficient {
    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Residue { value, .. } => *value == 0,
            Coefficient::Integer(v) => v.sign() == num_bigint::Sign::NoSign,
        }
    }

    pub fn field_tag(&self) -> String {
        match self {
            Coefficient::Residue { p, .. } => format!("F{p}"),
            Coefficient::Integer(_) => "Z".into(),
        }
    }

    pub fn value_string(&self) -> String {
        match self {
            Coefficient::Residue { value, .. } => value.to_string(),
            Coefficient::Integer(v) => v.to_string(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "value": self.value_string(), "field": self.field_tag() })
    }

    /// Wraps an integer count as a coefficient of the polynomial of `aux`.
    pub fn from_integer(aux: &AuxGraph, value: BigInt) -> Self {
        match aux.kind() {
            AuxKind::G1 => {
                let p = aux.n() as u64;
                Coefficient::Residue {
                    p,
                    value: reduce_mod(&value, p),
                }
            }
            AuxKind::G2 => Coefficient::Integer(value),
        }
    }
}

fn unsupported_prime(n: usize) -> anyhow::Error {
    anyhow!("P1 needs a prime n in 2..=31, got n={n}")
}

/// Coefficient of the coloring polynomial paired with `aux` at `target`.
pub fn coefficient(aux: &AuxGraph, target: &ExponentVector, engine: Engine, max_terms: u128) -> Result<Coefficient> {
    let n = aux.n();
    if aux.kind() == AuxKind::G1 && !efl_core::scalar::SUPPORTED_PRIMES.contains(&(n as u64)) {
        return Err(unsupported_prime(n));
    }
    if engine == Engine::Orient {
        return Ok(Coefficient::from_integer(aux, coefficient_by_orientations(aux, target)?));
    }
    match aux.kind() {
        AuxKind::G1 => {
            let p = n as u64;
            let value = with_prime_field!(p, F => {
                efl_core::algebra::coloring_coefficient::<F>(aux, target, engine, max_terms)
                    .map(|v| v.residue())
            })
            .ok_or_else(|| unsupported_prime(n))??;
            Ok(Coefficient::Residue { p, value })
        }
        AuxKind::G2 => match engine {
            Engine::Expand => Ok(Coefficient::Integer(expand_p::<BigInt>(aux, max_terms)?.coefficient(target))),
            Engine::Formula => {
                let poly = ColoringPolynomial::new::<Rational>(aux)?;
                let value = coefficient_by_formula(&poly, target, &Grid::standard(target))?;
                match rational_to_integer(&value) {
                    Some(v) => Ok(Coefficient::Integer(v)),
                    None => bail!("coefficient formula gave a non-integral value {value}"),
                }
            }
            Engine::Orient => unreachable!(),
        },
    }
}

/// Auxiliary graph with default trees and the maximal monomial picked out by
/// the constructive orientation completed with transitive tournaments.
pub fn auto_target(h: &LinearHypergraph, kind: AuxKind) -> Result<(AuxGraph, ExponentVector)> {
    let (aux, identifiers) = match kind {
        AuxKind::G1 => {
            let aux = build_aux(h, &default_spanning_trees(h)?, AuxKind::G1)?;
            let o = orient_g1(&aux)?;
            (aux, o)
        }
        AuxKind::G2 => orient_g2_pathlike(h)?,
    };
    let full = complete_orientation(&aux, &identifiers)?;
    let target = full.in_degrees(aux.n());
    Ok((aux, target))
}

/// Searches for a non-vanishing point and decodes it.
pub fn search_and_decode(
    h: &LinearHypergraph,
    aux: &AuxGraph,
    target: &ExponentVector,
) -> Result<Option<(Vec<usize>, Decoded)>> {
    let n = aux.n();
    match aux.kind() {
        AuxKind::G1 => with_prime_field!(n as u64, F => {
            match nonvanishing_search::<F>(aux, target)? {
                Some(point) => {
                    let decoded = coloring_from_point::<F>(h, aux, &point)?;
                    Ok(Some((point, decoded)))
                }
                None => Ok(None),
            }
        })
        .ok_or_else(|| unsupported_prime(n))?,
        AuxKind::G2 => match nonvanishing_search::<Rational>(aux, target)? {
            Some(point) => {
                let decoded = coloring_from_point::<Rational>(h, aux, &point)?;
                Ok(Some((point, decoded)))
            }
            None => Ok(None),
        },
    }
}
