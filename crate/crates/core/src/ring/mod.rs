//! Finite chain rings `Z/(p^nu)` and `F_{p^r}[g]/(g^nu)`.

mod chain;
mod element;
pub mod field;
mod roots;
mod spec;

pub use chain::{ChainRing, Elem, Ring};
pub use element::RingElement;
pub use field::{FieldElem, ResidueField};
pub use roots::{field_primitive_root, find_primitive_root, has_order, hensel_lift_root};
pub use spec::{Family, RingSpec, MAX_RING_ORDER};
