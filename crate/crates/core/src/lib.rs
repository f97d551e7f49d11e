//! Exact generating-function toolkit for two-parameter integer sequence
//! families and their interleaved (even/odd-indexed) subsequences.
//!
//! Everything is exact. Coefficients are arbitrary-precision integers,
//! polynomials live in a fixed ten-symbol variable universe ([`mpoly`]),
//! power series are truncated at an explicit order ([`fps`]), and every
//! closed form shipped in the catalog ([`genfun`]) can be mechanically
//! re-checked against an independent recurrence oracle ([`sequences`],
//! [`symfun`]). No floating point is used anywhere.

pub mod fps;
pub mod genfun;
pub mod mpoly;
pub mod report;
pub mod sequences;
pub mod symfun;
