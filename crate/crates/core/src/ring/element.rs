use std::fmt;

use crate::error::{Error, Result};
use crate::ring::chain::{Elem, Ring};
use crate::ring::field::FieldElem;

/// An element bound to its ring, with spec-checked arithmetic.
#[derive(Clone, PartialEq, Eq)]
pub struct RingElement {
    ring: Ring,
    elem: Elem,
}

impl RingElement {
    pub fn new(ring: &Ring, elem: Elem) -> Self {
        assert!((elem.0 as u64) < ring.order(), "element code out of range");
        RingElement { ring: ring.clone(), elem }
    }

    pub fn from_int(ring: &Ring, v: i64) -> Self {
        RingElement { ring: ring.clone(), elem: ring.from_int(v) }
    }

    pub fn gamma(ring: &Ring) -> Self {
        RingElement { ring: ring.clone(), elem: ring.gamma() }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elem(&self) -> Elem {
        self.elem
    }

    fn same_ring(&self, other: &RingElement) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.same_ring(other)?;
        Ok(RingElement { ring: self.ring.clone(), elem: self.ring.add(self.elem, other.elem) })
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement> {
        self.same_ring(other)?;
        Ok(RingElement { ring: self.ring.clone(), elem: self.ring.sub(self.elem, other.elem) })
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.same_ring(other)?;
        Ok(RingElement { ring: self.ring.clone(), elem: self.ring.mul(self.elem, other.elem) })
    }

    pub fn pow(&self, e: u64) -> RingElement {
        RingElement { ring: self.ring.clone(), elem: self.ring.pow(self.elem, e) }
    }

    pub fn inverse(&self) -> Result<RingElement> {
        self.ring
            .inverse(self.elem)
            .map(|elem| RingElement { ring: self.ring.clone(), elem })
            .ok_or_else(|| Error::NotAUnit(self.to_string()))
    }

    pub fn valuation(&self) -> u32 {
        self.ring.valuation(self.elem)
    }

    pub fn residue(&self) -> FieldElem {
        self.ring.residue(self.elem)
    }

    pub fn is_unit(&self) -> bool {
        self.ring.is_unit(self.elem)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format(self.elem))
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.ring.format(self.elem), self.ring)
    }
}
