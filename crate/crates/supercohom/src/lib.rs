//! Exact cohomology of finite-dimensional restricted Lie superalgebras
//! over prime fields of odd characteristic.
//!
//! The crate builds the Koszul resolution Y(L), its restricted variant
//! X(L) twisted by a twisting cochain, the bar and cobar complexes of the
//! restricted enveloping superalgebra V(L), and the spectral sequences of
//! their monomial-length filtrations. All arithmetic is exact in F_p.

pub mod bar;
pub mod complex;
pub mod env;
pub mod fplinalg;
pub mod free;
pub mod grading;
pub mod koszul;
pub mod liesuper;
pub mod may;
pub mod parallel;
pub mod specseq;
