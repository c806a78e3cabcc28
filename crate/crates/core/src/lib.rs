//! Exact equivariant K-classes and Chow classes of matrix orbit closures of
//! matroids, with expansions in matrix Schubert bases and positivity checks.

pub mod exactpoly;
pub mod matroid;
pub mod orbitclass;
pub mod schubert;
pub mod projclass;
pub mod selftest;
pub mod cli;
