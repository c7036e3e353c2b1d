use crate::error::{Error, Result};
use crate::poly::{Poly, QuotPoly};
use crate::ring::{find_primitive_root, Elem, Ring};

/// The primitive central idempotents of `R[y]/(y^n - 1)` for `n | q - 1`.
#[derive(Clone, Debug)]
pub struct IdempotentFamily {
    ring: Ring,
    n: usize,
    zeta: Elem,
    scale: Elem,
    thetas: Vec<QuotPoly>,
}

impl IdempotentFamily {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn zeta(&self) -> Elem {
        self.zeta
    }

    /// `1/n`.
    pub fn scale(&self) -> Elem {
        self.scale
    }

    pub fn thetas(&self) -> &[QuotPoly] {
        &self.thetas
    }

    pub fn theta(&self, i: usize) -> &QuotPoly {
        &self.thetas[i]
    }

    /// `zeta^i`.
    pub fn zeta_pow(&self, i: usize) -> Elem {
        self.ring.pow(self.zeta, i as u64)
    }

    /// `sum_k (zeta^(n-i) y)^k`, so that `theta_i = scale * unscaled(i)`.
    pub fn unscaled(&self, i: usize) -> QuotPoly {
        let r = &self.ring;
        let w = self.zeta_pow((self.n - i % self.n) % self.n);
        let mut c = r.one();
        let coeffs = (0..self.n)
            .map(|_| {
                let out = c;
                c = r.mul(c, w);
                out
            })
            .collect();
        QuotPoly::from_coeffs(r, coeffs, self.n)
    }

    /// Orthogonality, idempotency, partition of unity, the eigen-action
    /// `theta_i y^j = zeta^(ij) theta_i` and `y^n - 1 = prod (y - zeta^i)` in `R[y]`.
    pub fn verify(&self) -> Result<()> {
        let r = &self.ring;
        let n = self.n;
        let fail = |what: String| Err(Error::IdempotentIdentity(what));
        let zero = QuotPoly::new(&Poly::zero(r), n);
        let mut total = zero.clone();
        for i in 0..n {
            let ti = &self.thetas[i];
            for j in 0..n {
                let prod = ti.mul_mod(&self.thetas[j])?;
                let expected = if i == j { ti } else { &zero };
                if &prod != expected {
                    return fail(format!("theta_{i} * theta_{j} = {prod}"));
                }
            }
            let y = QuotPoly::from_coeffs(r, vec![Elem(0), r.one()], n);
            let mut yj = QuotPoly::one(r, n);
            for j in 0..n {
                if ti.mul_mod(&yj)? != ti.scale(r.pow(self.zeta, (i * j) as u64)) {
                    return fail(format!("theta_{i} * y^{j} != zeta^{} theta_{i}", i * j));
                }
                yj = yj.mul_mod(&y)?;
            }
            total = total.add(ti)?;
        }
        if total != QuotPoly::one(r, n) {
            return fail(format!("sum of thetas = {total}"));
        }
        let mut prod = Poly::one(r);
        for i in 0..n {
            let factor = Poly::new(r, vec![r.neg(self.zeta_pow(i)), r.one()]);
            prod = prod.mul(&factor)?;
        }
        let mut target = vec![Elem(0); n + 1];
        target[0] = r.neg(r.one());
        target[n] = r.one();
        if prod != Poly::new(r, target) {
            return fail(format!("prod (y - zeta^i) = {prod}"));
        }
        Ok(())
    }
}

/// `theta_i(y) = (1/n) sum_k (zeta^(n-i) y)^k` with `zeta` from
/// [`find_primitive_root`]; all identities are checked before returning.
pub fn idempotents(ring: &Ring, n: usize) -> Result<IdempotentFamily> {
    let zeta = find_primitive_root(ring, n)?;
    let scale = ring
        .inverse(ring.from_int(n as i64))
        .ok_or_else(|| Error::NotAUnit(n.to_string()))?;
    let mut fam = IdempotentFamily { ring: ring.clone(), n, zeta, scale, thetas: Vec::new() };
    fam.thetas = (0..n).map(|i| fam.unscaled(i).scale(scale)).collect();
    fam.verify()?;
    Ok(fam)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ChainRing;

    fn dense(q: &QuotPoly) -> Vec<u32> {
        q.dense().iter().map(|c| c.0).collect()
    }

    #[test]
    fn z25_order_four() {
        let r = ChainRing::parse("Z/25").unwrap();
        let f = idempotents(&r, 4).unwrap();
        assert_eq!(f.zeta(), Elem(7));
        assert_eq!(f.scale(), Elem(19));
        assert_eq!(dense(&f.unscaled(0)), vec![1, 1, 1, 1]);
        assert_eq!(dense(&f.unscaled(1)), vec![1, 18, 24, 7]);
        assert_eq!(dense(&f.unscaled(2)), vec![1, 24, 1, 24]);
        assert_eq!(dense(&f.unscaled(3)), vec![1, 7, 24, 18]);
    }

    #[test]
    fn trivial_and_z9() {
        let r = ChainRing::parse("Z/9").unwrap();
        let one = idempotents(&r, 1).unwrap();
        assert_eq!(one.theta(0), &QuotPoly::one(&r, 1));
        let f = idempotents(&r, 2).unwrap();
        assert_eq!(dense(f.theta(0)), vec![5, 5]);
        assert_eq!(dense(f.theta(1)), vec![5, 4]);
    }

    #[test]
    fn incompatible_order() {
        let r = ChainRing::parse("Z/25").unwrap();
        assert!(matches!(idempotents(&r, 3), Err(Error::OrderNotCompatible { .. })));
    }
}
