//! Exact generator sets for cyclic, 2D and nD cyclic codes over the finite
//! chain rings `Z/(p^nu)` and `F_q[g]/(g^nu)`.
//!
//! A code is given by a finite generator list; the smallest ideal of
//! `R[x_1..x_k]/(x_i^{m_i} - 1)` containing it is held as a [`CodeSpan`].
//! [`canonical_generators`] produces the staircase form of a univariate code,
//! [`method1_generators`] and [`method2_generators`] build 2D generator sets and
//! [`nd_generators`] recurses over any number of variables. The [`oracle`]
//! module enumerates codes literally to certify all of it at small sizes.

pub mod cyclic;
pub mod error;
pub mod multidim;
pub mod oracle;
pub mod poly;
pub mod ring;
pub mod text;

pub use cyclic::{canonical_generators, codes_equal, span_from_generators, CanonicalGenSet, CodeSpan};
pub use error::{Error, Result};
pub use multidim::{
    idempotents, method1_generators, method1_ideals, method2_generators, nd_generators, IdempotentFamily,
    GeneratorReport, Method, NdOptions,
};
pub use poly::{MultiPoly, Poly, QuotPoly};
pub use ring::{ChainRing, Elem, Ring, RingElement, RingSpec};
