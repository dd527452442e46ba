//! Combinatorics of the diagonal space `D(n)` of the `n`-cube.
//!
//! `D(n)` is the set of ordered pairs of cube vertices, i.e. all (directed)
//! segments of `Q^n`. The library provides:
//!
//! * the line decomposition of `D(n)` and its enumeration ([`line`]),
//! * detectors for monochromatic structures: corners, binary trees,
//!   self-crossing paths and coplanar quadruples ([`detect`]),
//! * the iterated popular-color / grid extraction loop for binary trees
//!   ([`extract`]),
//! * the slope `-1` analog on Cartesian products `A x B`, including Hilbert
//!   cube detection ([`plane`]),
//! * the `{0,1,2,3}^n <-> D(n)` codec and partial Hales-Jewett line
//!   predicates ([`hj`]),
//! * the prime-exponent encoding producing monochromatic 3-term geometric
//!   progressions in `[N]` ([`gp`]),
//! * exact backtracking searches for avoidance colorings ([`search`]).
//!
//! All decision-bearing arithmetic is exact (machine integers, big integers
//! or big rationals); no floating point is used anywhere.

pub mod coloring;
pub mod detect;
pub mod error;
pub mod extract;
pub mod generate;
pub mod gp;
pub mod hj;
pub mod line;
pub mod plane;
pub mod point;
pub mod search;
pub mod word;

pub use coloring::DnColoring;
pub use error::Error;
pub use line::LineId;
pub use point::DiagPoint;
pub use word::BitWord;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
