//! Exact equivariant CSM and motivic Chern classes of Dynkin quiver orbits,
//! computed through shuffle products in the cohomological and K-theoretic
//! Hall algebras.
//!
//! Layers, bottom up:
//! - [`poly`]: Laurent polynomials with rational coefficients.
//! - [`quiver`]: Dynkin quivers, roots, Euler form, Reineke orders, Kostant partitions.
//! - [`repalg`]: explicit representations, hom/ext, generic decompositions, stability.
//! - [`hall`]: shuffles, the shuffle product, graded classes and exponentials.
//! - [`charclass`]: orbit classes, basic classes and the identity checkers.

pub mod charclass;
pub mod exec;
pub mod hall;
pub mod poly;
pub mod quiver;
pub mod repalg;
