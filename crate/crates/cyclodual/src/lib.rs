//! Construction and verification of Euclidean and Hermitian self-dual
//! cyclic and linear codes over finite fields: finite-field towers,
//! polynomial arithmetic, cyclotomic cosets, BCH and quadratic-residue
//! codes, length-doubling self-dual constructions, and certified
//! minimum-distance computation.

pub mod cli;
pub mod codes;
pub mod construct;
pub mod cyclo;
pub mod gf;
pub mod mindist;
pub mod polyring;
pub mod report;
