use crate::poly::MultiPoly;
use crate::ring::{ChainRing, Elem};

/// Whether `f` is a product of univariate polynomials, one per variable.
///
/// Splits off the first variable: `f` viewed as a matrix (first exponent by the
/// rest) must have rank one. Writing its entries as `g^v a'` with some `a'` a
/// unit, that means all 2x2 minors of `a'` vanish modulo `g^(nu - v)`; the test
/// then recurses on a pivot row at that precision.
pub fn is_separable(f: &MultiPoly) -> bool {
    let ring = f.ring();
    separable_at(ring, f.dims(), f.coeffs().to_vec(), ring.nu())
}

fn separable_at(ring: &ChainRing, dims: &[usize], coeffs: Vec<Elem>, precision: u32) -> bool {
    if dims.len() <= 1 || precision == 0 {
        return true;
    }
    let m = dims[0];
    let cols = coeffs.len() / m;
    let reduced: Vec<Elem> = coeffs.iter().map(|&c| ring.reduce_mod_gamma_pow(c, precision)).collect();
    let Some(v) = reduced.iter().filter(|c| c.0 != 0).map(|&c| ring.valuation(c)).min() else {
        return true;
    };
    let w = precision - v;
    let a: Vec<Elem> = reduced.iter().map(|&c| ring.div_rem_gamma_pow(c, v).0).collect();
    let at = |i: usize, c: usize| a[i + m * c];
    let (i0, c0) = (0..a.len())
        .find(|&k| ring.is_unit(a[k]))
        .map(|k| (k % m, k / m))
        .expect("a unit entry exists after dividing out the valuation");
    let pivot = at(i0, c0);
    for c in 0..cols {
        for i in 0..m {
            let lhs = ring.mul(at(i, c), pivot);
            let rhs = ring.mul(at(i, c0), at(i0, c));
            if ring.reduce_mod_gamma_pow(ring.sub(lhs, rhs), w).0 != 0 {
                return false;
            }
        }
    }
    let row: Vec<Elem> = (0..cols).map(|c| at(i0, c)).collect();
    separable_at(ring, &dims[1..], row, w)
}
