//! Codes as shift-closed modules: echelon spans, membership, cardinality and
//! staircase generators of univariate codes.

mod canonical;
mod span;

pub use canonical::{canonical_generators, colon_gamma, CanonicalEntry, CanonicalGenSet};
pub use span::{cardinality, codes_equal, membership, span_from_generators, CodeSpan, Pivot};
