//! Exact computation with rational invariants of algebraic group actions.
//!
//! The library implements the graph-ideal approach to rational invariants:
//! given a rational action of an algebraic group on affine space, it computes
//! a generating set of rational invariants from a reduced Gröbner basis of the
//! graph ideal, rewrites arbitrary invariants in terms of the generators,
//! validates cross-sections, and derives replacement invariants,
//! invariantizations and moving-frame ideals.
//!
//! All arithmetic is exact. The polynomial and Gröbner layers are generic over
//! the coefficient field through the [`Field`] trait; the two instantiations
//! used throughout are the rationals (`Rat`) and the rational-function field
//! in the action variables ([`RatFunc`]).

pub mod action;
pub mod error;
pub mod field;
pub mod gcd;
pub mod graph;
pub mod groebner;
pub mod invariantize;
pub mod matrix;
pub mod monomial;
pub mod mpoly;
pub mod order;
pub mod parse;
pub mod ratfunc;
pub mod section;
pub mod vars;

pub use action::{GroupAction, GroupSpec, ValidationOptions, ValidationReport};
pub use error::{Error, ErrorKind, Result};
pub use field::{Field, Rat};
pub use graph::{GraphIdeal, InvariantSet, RewriteResult};
pub use groebner::GroebnerBasis;
pub use invariantize::{MonicUnivariate, MovingFrameIdeal, ReplacementDescription};
pub use monomial::Monomial;
pub use mpoly::MPoly;
pub use order::{BaseOrder, OrderBlock, TermOrder};
pub use ratfunc::RatFunc;
pub use section::{CrossSection, SectionIdeal, SectionReport};
pub use vars::VarContext;

/// Polynomial with rational coefficients.
pub type QPoly = MPoly<Rat>;
/// Polynomial with coefficients in the rational-function field of the
/// action variables, e.g. an element of K(z)[Z].
pub type QzPoly = MPoly<RatFunc>;
