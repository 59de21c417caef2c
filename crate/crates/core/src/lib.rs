//! Finite permutation groups and their non-nilpotent subgroup structure:
//! Schmidt subgroups, supersolvability, Frobenius recognition and the
//! decomposition of G/Z_∞(G) into F(p, d) factors.

pub mod arith;
pub mod classify;
pub mod cli;
pub mod constructors;
pub mod corpus;
pub mod dsl;
pub mod error;
pub mod group;
pub mod harness;
pub mod lattice;
pub mod perm;
pub mod report;
pub mod series;
