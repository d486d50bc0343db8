//! Stanley decompositions of monomial ideals and partitions of simplicial
//! complexes by Janet's recursive algorithm.
//!
//! The engines split on the last variable (or vertex) and recurse on the
//! slices; every output can be certified by the brute-force checks in
//! [`oracle`].
//!
//! ```
//! use janet_stanley::{janet_complement, text};
//!
//! let ideal = text::parse_ideal("vars 2\nx1*x2").unwrap();
//! let d = janet_complement(&ideal);
//! assert_eq!(d.to_string(), "1 * K[x1]\nx2 * K[x2]\n");
//! ```

pub mod cli;
pub mod complex;
pub mod decomposition;
pub mod error;
pub mod monomial;
pub mod oracle;
pub mod text;

pub use complex::{
    janet_partition, partition_to_spaces, Face, Interval, Niceness, Partition, SimplicialComplex,
};
pub use decomposition::{
    is_squarefree_decomposition, janet_complement, janet_decompose, janet_ideal,
    StanleyDecomposition, StanleySpace, Target,
};
pub use error::{Error, ParseError, Result};
pub use monomial::{Monomial, MonomialIdeal, VarSet};
pub use oracle::VerificationReport;
