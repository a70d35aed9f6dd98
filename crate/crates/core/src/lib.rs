//! Auxiliary graphs, orientations and coloring polynomials for linear
//! hypergraphs in standard form, with exact arithmetic throughout.
//!
//! A standard-form hypergraph has `n` edges of size `n`, any two sharing at
//! most one vertex. Each edge becomes a base clique `K_n`; copies of a vertex
//! are tied together by identifier trees. Orientations of the resulting
//! auxiliary graph index monomials of a polynomial that vanishes exactly off
//! the proper `n`-colorings.

pub mod algebra;
pub mod auxgraph;
pub mod coloring;
pub mod error;
pub mod hypergraph;
pub mod index;
pub mod orientation;
pub mod scalar;

pub use algebra::{Engine, Grid, SparsePolynomial};
pub use auxgraph::{build_aux, default_spanning_trees, AuxGraph, AuxKind, IdentifierTreeSet};
pub use coloring::Coloring;
pub use error::{Error, Result};
pub use hypergraph::{parse_hypergraph, LinearHypergraph};
pub use index::{CliqueVertex, ExponentVector};
pub use orientation::{Orientation, OrientedInstance};
pub use scalar::{Field, Fp, Scalar};

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

/// Expanded `P2`.
pub type IntegerPolynomial = SparsePolynomial<Integer>;
pub type RationalPolynomial = SparsePolynomial<Rational>;
