//! Exact computer algebra for singular cubic threefolds with many nodes.
//!
//! The crate is layered bottom-up: scalars ([`arith`]), dense linear algebra
//! ([`linalg`]), sparse polynomials and the input language ([`poly`],
//! [`parse`]), Gröbner bases ([`ideal`]), projective geometry
//! ([`projective`]), finite groups ([`group`]), singularity analysis
//! ([`singular`]) and finally the catalog of varieties with its verifier
//! ([`catalog`], [`verify`], [`report`]).

pub mod arith;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod ideal;
pub mod projective;
pub mod group;
pub mod singular;
pub mod report;
pub mod catalog;
pub mod verify;
