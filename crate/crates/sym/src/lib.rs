//! Exact multivariate polynomial arithmetic over the rationals: canonical
//! sparse polynomials, gcd, rational functions and Sylvester resultants.

pub mod error;
pub mod gcd;
pub mod par;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod resultant;
pub mod ring;
pub mod text;

pub use error::SymError;
pub use gcd::poly_gcd;
pub use par::Execution;
pub use poly::{poly_arith, ArithKind, Monomial, Polynomial};
pub use ratfunc::RationalFunction;
pub use rational::Rational;
pub use resultant::{resultant, resultant_with, DetMethod};
pub use ring::Ring;
pub use text::{parse, render};
