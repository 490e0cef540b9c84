//! Exact computational toolkit for |2|-graded simple Lie algebras, pseudo
//! H-type algebras built from Clifford modules, and their Tanaka
//! prolongations.

pub mod exact;
pub mod rootsys;
pub mod clifford;
pub mod rhe;
pub mod htype;
pub mod prolong;
pub mod tables;
