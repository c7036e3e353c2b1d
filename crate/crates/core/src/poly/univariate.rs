use std::fmt;

use crate::error::{Error, Result};
use crate::poly::multi::MultiPoly;
use crate::ring::{Elem, FieldElem, Ring};

/// Dense polynomial over a chain ring; index `i` holds the coefficient of `x^i`.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ring: Ring,
    coeffs: Vec<Elem>,
}

/// Coefficient-wise image of a [`Poly`] in `F_q[x]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResiduePoly {
    pub coeffs: Vec<FieldElem>,
}

impl ResiduePoly {
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map(|c| c.0 == 1).unwrap_or(false)
    }
}

impl Poly {
    pub fn new(ring: &Ring, mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last() == Some(&Elem(0)) {
            coeffs.pop();
        }
        Poly { ring: ring.clone(), coeffs }
    }

    pub fn from_ints(ring: &Ring, coeffs: &[i64]) -> Self {
        Poly::new(ring, coeffs.iter().map(|&c| ring.from_int(c)).collect())
    }

    pub fn zero(ring: &Ring) -> Self {
        Poly { ring: ring.clone(), coeffs: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Poly::constant(ring, ring.one())
    }

    pub fn constant(ring: &Ring, c: Elem) -> Self {
        Poly::new(ring, vec![c])
    }

    pub fn monomial(ring: &Ring, c: Elem, degree: usize) -> Self {
        let mut coeffs = vec![Elem(0); degree + 1];
        coeffs[degree] = c;
        Poly::new(ring, coeffs)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem(0))
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(self.ring.one())
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.ring.add(self.coeff(i), other.coeff(i))).collect();
        Ok(Poly::new(&self.ring, coeffs))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.ring.sub(self.coeff(i), other.coeff(i))).collect();
        Ok(Poly::new(&self.ring, coeffs))
    }

    pub fn neg(&self) -> Poly {
        Poly::new(&self.ring, self.coeffs.iter().map(|&c| self.ring.neg(c)).collect())
    }

    pub fn scale(&self, c: Elem) -> Poly {
        Poly::new(&self.ring, self.coeffs.iter().map(|&a| self.ring.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.ring));
        }
        let mut out = vec![Elem(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.0 == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = self.ring.add(out[i + j], self.ring.mul(a, b));
            }
        }
        Ok(Poly::new(&self.ring, out))
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    pub fn residue(&self) -> ResiduePoly {
        let mut coeffs: Vec<FieldElem> = self.coeffs.iter().map(|&c| self.ring.residue(c)).collect();
        while coeffs.last() == Some(&FieldElem(0)) {
            coeffs.pop();
        }
        ResiduePoly { coeffs }
    }

    /// Evaluates at a ring element.
    pub fn eval(&self, at: Elem) -> Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(Elem(0), |acc, &c| self.ring.add(self.ring.mul(acc, at), c))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mp = MultiPoly::from_flat(&self.ring, vec![self.coeffs.len().max(1)], {
            let mut c = self.coeffs.clone();
            if c.is_empty() {
                c.push(Elem(0));
            }
            c
        })
        .expect("shape");
        f.write_str(&mp.format_with(&["x"]))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Residue class of a polynomial in `R[x]/(x^m - 1)`.
#[derive(Clone, PartialEq, Eq)]
pub struct QuotPoly {
    base: Poly,
    m: usize,
}

impl QuotPoly {
    /// Folds `poly` modulo `x^m - 1`.
    pub fn new(poly: &Poly, m: usize) -> Self {
        assert!(m > 0, "quotient modulus must be positive");
        let ring = poly.ring();
        let mut folded = vec![Elem(0); m];
        for (i, &c) in poly.coeffs().iter().enumerate() {
            folded[i % m] = ring.add(folded[i % m], c);
        }
        QuotPoly { base: Poly::new(ring, folded), m }
    }

    pub fn from_coeffs(ring: &Ring, coeffs: Vec<Elem>, m: usize) -> Self {
        QuotPoly::new(&Poly::new(ring, coeffs), m)
    }

    pub fn one(ring: &Ring, m: usize) -> Self {
        QuotPoly::new(&Poly::one(ring), m)
    }

    pub fn poly(&self) -> &Poly {
        &self.base
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn ring(&self) -> &Ring {
        self.base.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero()
    }

    /// Dense coefficient vector of length `m`.
    pub fn dense(&self) -> Vec<Elem> {
        (0..self.m).map(|i| self.base.coeff(i)).collect()
    }

    fn check(&self, other: &QuotPoly) -> Result<()> {
        if self.ring() != other.ring() {
            return Err(Error::SpecMismatch);
        }
        if self.m != other.m {
            return Err(Error::ShapeMismatch(format!("moduli {} and {}", self.m, other.m)));
        }
        Ok(())
    }

    pub fn add(&self, other: &QuotPoly) -> Result<QuotPoly> {
        self.check(other)?;
        Ok(QuotPoly { base: self.base.add(&other.base)?, m: self.m })
    }

    pub fn sub(&self, other: &QuotPoly) -> Result<QuotPoly> {
        self.check(other)?;
        Ok(QuotPoly { base: self.base.sub(&other.base)?, m: self.m })
    }

    pub fn scale(&self, c: Elem) -> QuotPoly {
        QuotPoly { base: self.base.scale(c), m: self.m }
    }

    /// Product with `x^m` folded to 1.
    pub fn mul_mod(&self, other: &QuotPoly) -> Result<QuotPoly> {
        self.check(other)?;
        let ring = self.ring();
        let mut out = vec![Elem(0); self.m];
        for (i, &a) in self.base.coeffs().iter().enumerate() {
            if a.0 == 0 {
                continue;
            }
            for (j, &b) in other.base.coeffs().iter().enumerate() {
                let k = (i + j) % self.m;
                out[k] = ring.add(out[k], ring.mul(a, b));
            }
        }
        Ok(QuotPoly { base: Poly::new(ring, out), m: self.m })
    }

    pub fn to_multi(&self) -> MultiPoly {
        MultiPoly::from_flat(self.ring(), vec![self.m], self.dense()).expect("shape")
    }
}

impl fmt::Display for QuotPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.base.fmt(f)
    }
}

impl fmt::Debug for QuotPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuotPoly({} mod x^{} - 1)", self.base, self.m)
    }
}

/// `poly_mul_mod` as a free function.
pub fn poly_mul_mod(a: &QuotPoly, b: &QuotPoly) -> Result<QuotPoly> {
    a.mul_mod(b)
}
