//! Roots of unity in the chain ring, lifted from the residue field.

use crate::error::{Error, Result};
use crate::ring::chain::{ChainRing, Elem};
use crate::ring::field::FieldElem;
use crate::ring::spec::Family;

/// Whether `zeta` has multiplicative order exactly `n`.
pub fn has_order(ring: &ChainRing, zeta: Elem, n: usize) -> bool {
    let mut x = ring.one();
    for _ in 1..n {
        x = ring.mul(x, zeta);
        if x == ring.one() {
            return false;
        }
    }
    ring.mul(x, zeta) == ring.one()
}

/// Smallest element of `F_q` (by code) of multiplicative order exactly `n`.
pub fn field_primitive_root(ring: &ChainRing, n: usize) -> Result<FieldElem> {
    let q = ring.q();
    if n == 0 || !(q - 1).is_multiple_of(n as u64) {
        return Err(Error::OrderNotCompatible { n, q_minus_one: q - 1 });
    }
    let field = ring.field();
    field
        .elements()
        .skip(1)
        .find(|&w| field.order_of(w) == Some(n as u64))
        .ok_or(Error::OrderNotCompatible { n, q_minus_one: q - 1 })
}

/// A primitive `n`-th root of unity of the ring.
///
/// The smallest residue root `w` is embedded directly for `F_q[g]/(g^nu)`; for
/// `Z/(p^nu)` the Teichmuller power `w^(p^(nu-1))` is used. Either way the
/// order is verified and Newton lifting is the fallback.
pub fn find_primitive_root(ring: &ChainRing, n: usize) -> Result<Elem> {
    let omega = field_primitive_root(ring, n)?;
    let candidate = match ring.family() {
        Family::GammaExtension => ring.lift(omega),
        Family::IntegerModular => {
            let exp = ring.spec().p.pow(ring.nu() - 1);
            ring.pow(ring.lift(omega), exp)
        }
    };
    if has_order(ring, candidate, n) {
        return Ok(candidate);
    }
    hensel_lift_root(ring, n, omega)
}

/// The unique lift `zeta` of `omega` with `zeta^n = 1`, via Newton iteration
/// `zeta <- zeta - (zeta^n - 1) / (n zeta^(n-1))`.
pub fn hensel_lift_root(ring: &ChainRing, n: usize, omega: FieldElem) -> Result<Elem> {
    let field = ring.field();
    if field.pow(omega, n as u64) != field.one() {
        return Err(Error::NotARoot(field.format(omega)));
    }
    let derivative = field.mul(field.from_int(n as i64), field.pow(omega, n as u64 - 1));
    if derivative.0 == 0 {
        return Err(Error::NotSimpleRoot(field.format(omega)));
    }
    let n_elem = ring.from_int(n as i64);
    let mut zeta = ring.lift(omega);
    // precision doubles each step; nu + 1 steps is always enough
    for _ in 0..=ring.nu() {
        let value = ring.sub(ring.pow(zeta, n as u64), ring.one());
        if value == ring.zero() {
            break;
        }
        let slope = ring.mul(n_elem, ring.pow(zeta, n as u64 - 1));
        let inv = ring.inverse(slope).expect("derivative is a unit");
        zeta = ring.sub(zeta, ring.mul(value, inv));
    }
    debug_assert_eq!(ring.pow(zeta, n as u64), ring.one());
    Ok(zeta)
}
