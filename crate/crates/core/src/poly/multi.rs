use std::fmt;

use crate::error::{Error, Result};
use crate::poly::univariate::QuotPoly;
use crate::ring::{Elem, Ring};

/// A class in `R[x_1..x_k]/(x_1^{m_1} - 1, ..., x_k^{m_k} - 1)`, stored as a dense
/// exponent box.
///
/// The flat index of exponent tuple `(e_1, .., e_k)` is
/// `e_1 + m_1 (e_2 + m_2 (e_3 + ..))`, so `x_1` varies fastest and the last
/// variable is the most significant.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    ring: Ring,
    dims: Vec<usize>,
    coeffs: Vec<Elem>,
}

/// Default variable names: `x` for one variable, `x, y` for two, `x1..xk` otherwise.
pub fn var_names(k: usize) -> Vec<String> {
    match k {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        _ => (1..=k).map(|i| format!("x{i}")).collect(),
    }
}

fn check_dims(dims: &[usize]) -> Result<usize> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::ShapeMismatch(format!("invalid dims {dims:?}")));
    }
    dims.iter()
        .try_fold(1usize, |acc, &m| acc.checked_mul(m))
        .ok_or_else(|| Error::ShapeMismatch("dims product overflows".into()))
}

impl MultiPoly {
    pub fn zero(ring: &Ring, dims: &[usize]) -> Self {
        let len = check_dims(dims).expect("valid dims");
        MultiPoly { ring: ring.clone(), dims: dims.to_vec(), coeffs: vec![Elem(0); len] }
    }

    pub fn one(ring: &Ring, dims: &[usize]) -> Self {
        Self::constant(ring, dims, ring.one())
    }

    pub fn constant(ring: &Ring, dims: &[usize], c: Elem) -> Self {
        let mut z = Self::zero(ring, dims);
        z.coeffs[0] = c;
        z
    }

    pub fn from_flat(ring: &Ring, dims: Vec<usize>, coeffs: Vec<Elem>) -> Result<Self> {
        let len = check_dims(&dims)?;
        if coeffs.len() != len {
            return Err(Error::ShapeMismatch(format!(
                "{} coefficients for dims {dims:?}",
                coeffs.len()
            )));
        }
        Ok(MultiPoly { ring: ring.clone(), dims, coeffs })
    }

    /// `c * x^exps`, exponents folded modulo the dims.
    pub fn monomial(ring: &Ring, dims: &[usize], exps: &[usize], c: Elem) -> Self {
        let mut z = Self::zero(ring, dims);
        let idx = z.index_of(exps);
        z.coeffs[idx] = c;
        z
    }

    /// The variable `x_{var+1}` (zero-based `var`).
    pub fn variable(ring: &Ring, dims: &[usize], var: usize) -> Self {
        let mut exps = vec![0; dims.len()];
        exps[var] = 1;
        Self::monomial(ring, dims, &exps, ring.one())
    }

    /// Embeds a univariate class in variable `var`.
    pub fn from_univariate(u: &QuotPoly, dims: &[usize], var: usize) -> Result<Self> {
        if dims.get(var) != Some(&u.modulus()) {
            return Err(Error::ShapeMismatch(format!(
                "modulus {} does not match dims {dims:?} at variable {var}",
                u.modulus()
            )));
        }
        let mut z = Self::zero(u.ring(), dims);
        let stride: usize = dims[..var].iter().product();
        for (e, c) in u.dense().into_iter().enumerate() {
            z.coeffs[e * stride] = c;
        }
        Ok(z)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Elem> {
        self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.0 == 0)
    }

    pub fn index_of(&self, exps: &[usize]) -> usize {
        assert_eq!(exps.len(), self.dims.len(), "exponent arity");
        let mut idx = 0;
        for (e, m) in exps.iter().zip(&self.dims).rev() {
            idx = idx * m + e % m;
        }
        idx
    }

    pub fn exponents_of(&self, mut idx: usize) -> Vec<usize> {
        self.dims
            .iter()
            .map(|m| {
                let e = idx % m;
                idx /= m;
                e
            })
            .collect()
    }

    pub fn coeff(&self, exps: &[usize]) -> Elem {
        self.coeffs[self.index_of(exps)]
    }

    pub fn set_coeff(&mut self, exps: &[usize], c: Elem) {
        let idx = self.index_of(exps);
        self.coeffs[idx] = c;
    }

    fn check(&self, other: &MultiPoly) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::SpecMismatch);
        }
        if self.dims != other.dims {
            return Err(Error::ShapeMismatch(format!("dims {:?} and {:?}", self.dims, other.dims)));
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| self.ring.add(a, b)).collect();
        Ok(MultiPoly { ring: self.ring.clone(), dims: self.dims.clone(), coeffs })
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| self.ring.sub(a, b)).collect();
        Ok(MultiPoly { ring: self.ring.clone(), dims: self.dims.clone(), coeffs })
    }

    pub fn neg(&self) -> MultiPoly {
        let coeffs = self.coeffs.iter().map(|&a| self.ring.neg(a)).collect();
        MultiPoly { ring: self.ring.clone(), dims: self.dims.clone(), coeffs }
    }

    pub fn scale(&self, c: Elem) -> MultiPoly {
        let coeffs = self.coeffs.iter().map(|&a| self.ring.mul(a, c)).collect();
        MultiPoly { ring: self.ring.clone(), dims: self.dims.clone(), coeffs }
    }

    /// Product with every variable folded independently.
    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut out = vec![Elem(0); self.coeffs.len()];
        let k = self.dims.len();
        let b_terms: Vec<(Vec<usize>, Elem)> = other
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.0 != 0)
            .map(|(i, &c)| (other.exponents_of(i), c))
            .collect();
        let mut exps = vec![0; k];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.0 == 0 {
                continue;
            }
            let ea = self.exponents_of(i);
            for (eb, b) in &b_terms {
                for v in 0..k {
                    exps[v] = ea[v] + eb[v];
                }
                let idx = self.index_of(&exps);
                out[idx] = self.ring.add(out[idx], self.ring.mul(a, *b));
            }
        }
        Ok(MultiPoly { ring: self.ring.clone(), dims: self.dims.clone(), coeffs: out })
    }

    pub fn pow(&self, mut e: u64) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.ring, &self.dims);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same shape");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same shape");
            }
        }
        acc
    }

    /// Multiplication by `x_{var+1}^k`, a cyclic shift along one axis.
    pub fn shift(&self, var: usize, k: usize) -> MultiPoly {
        let m = self.dims[var];
        let stride: usize = self.dims[..var].iter().product();
        let block = stride * m;
        let mut out = vec![Elem(0); self.coeffs.len()];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c.0 == 0 {
                continue;
            }
            let e = (i / stride) % m;
            let j = i - e * stride + ((e + k) % m) * stride;
            debug_assert_eq!(j / block, i / block);
            out[j] = c;
        }
        MultiPoly { ring: self.ring.clone(), dims: self.dims.clone(), coeffs: out }
    }

    /// Coefficient of `x_k^j` where `x_k` is the last variable, as a class over the
    /// first `k - 1` variables. Requires `k >= 2`.
    pub fn slice_last(&self, j: usize) -> MultiPoly {
        let k = self.dims.len();
        assert!(k >= 2, "slice_last needs two or more variables");
        let inner = &self.dims[..k - 1];
        let len: usize = inner.iter().product();
        MultiPoly {
            ring: self.ring.clone(),
            dims: inner.to_vec(),
            coeffs: self.coeffs[j * len..(j + 1) * len].to_vec(),
        }
    }

    /// Inverse of [`slice_last`](Self::slice_last): `sum_j slices[j] * x_k^j`.
    pub fn from_slices(slices: &[MultiPoly]) -> Result<MultiPoly> {
        let first = slices
            .first()
            .ok_or_else(|| Error::ShapeMismatch("no slices".into()))?;
        let mut dims = first.dims.clone();
        dims.push(slices.len());
        let mut coeffs = Vec::with_capacity(first.len() * slices.len());
        for s in slices {
            first.check(s)?;
            coeffs.extend_from_slice(&s.coeffs);
        }
        Ok(MultiPoly { ring: first.ring.clone(), dims, coeffs })
    }

    /// Lifts a class over the first `k - 1` variables to `k` variables (degree 0
    /// in the new last variable of length `m`).
    pub fn extend_last(&self, m: usize) -> MultiPoly {
        let mut slices = vec![MultiPoly::zero(&self.ring, &self.dims); m];
        slices[0] = self.clone();
        MultiPoly::from_slices(&slices).expect("same shape")
    }

    /// Degree in the last variable, `None` for zero.
    pub fn last_degree(&self) -> Option<usize> {
        let k = self.dims.len();
        let len: usize = self.dims[..k - 1].iter().product();
        self.coeffs.iter().rposition(|c| c.0 != 0).map(|i| i / len)
    }

    /// Substitutes `x_k = value` for the last variable.
    pub fn evaluate_last(&self, value: Elem) -> Result<MultiPoly> {
        let n = *self.dims.last().expect("dims");
        if self.ring.pow(value, n as u64) != self.ring.one() {
            return Err(Error::RootOrderViolation { value: self.ring.format(value), n });
        }
        let k = self.dims.len();
        if k == 1 {
            let mut acc = Elem(0);
            for &c in self.coeffs.iter().rev() {
                acc = self.ring.add(self.ring.mul(acc, value), c);
            }
            return Ok(MultiPoly::constant(&self.ring, &[1], acc));
        }
        let mut acc = MultiPoly::zero(&self.ring, &self.dims[..k - 1]);
        for j in (0..n).rev() {
            acc = acc.scale(value).add(&self.slice_last(j))?;
        }
        Ok(acc)
    }

    /// Substitution `y = value` for a two-variable class over dims `(m, n)`.
    pub fn evaluate_y(&self, value: Elem) -> Result<QuotPoly> {
        if self.dims.len() != 2 {
            return Err(Error::ShapeMismatch(format!("evaluate_y needs 2 variables, got {:?}", self.dims)));
        }
        let f = self.evaluate_last(value)?;
        Ok(QuotPoly::from_coeffs(&self.ring, f.coeffs, self.dims[0]))
    }

    /// Reorders variables: new variable `i` is old variable `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> MultiPoly {
        assert_eq!(perm.len(), self.dims.len(), "permutation arity");
        let new_dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let mut out = MultiPoly::zero(&self.ring, &new_dims);
        let mut new_exps = vec![0; perm.len()];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c.0 == 0 {
                continue;
            }
            let old = self.exponents_of(i);
            for (slot, &p) in new_exps.iter_mut().zip(perm) {
                *slot = old[p];
            }
            out.set_coeff(&new_exps, c);
        }
        out
    }

    /// Swaps the two variables of a bivariate class; an involution.
    pub fn transpose(&self) -> MultiPoly {
        assert_eq!(self.dims.len(), 2, "transpose needs 2 variables");
        self.permute(&[1, 0])
    }

    /// The univariate class in variable `var` when the support lies on that axis.
    pub fn to_univariate(&self, var: usize) -> Option<QuotPoly> {
        let stride: usize = self.dims[..var].iter().product();
        let m = self.dims[var];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.0 != 0 && (i % stride != 0 || i / stride >= m) {
                return None;
            }
        }
        let coeffs = (0..m).map(|e| self.coeffs[e * stride]).collect();
        Some(QuotPoly::from_coeffs(&self.ring, coeffs, m))
    }

    /// Text form using the given variable names; highest flat index first.
    pub fn format_with<S: AsRef<str>>(&self, names: &[S]) -> String {
        let mut terms = Vec::new();
        for idx in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[idx];
            if c.0 == 0 {
                continue;
            }
            let exps = self.exponents_of(idx);
            let mono: Vec<String> = exps
                .iter()
                .zip(names)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, n)| if e == 1 { n.as_ref().to_string() } else { format!("{}^{e}", n.as_ref()) })
                .collect();
            let coeff = self.ring.format(c);
            let term = if mono.is_empty() {
                coeff
            } else if c == self.ring.one() {
                mono.join("*")
            } else if self.ring.is_compound(c) {
                format!("({coeff})*{}", mono.join("*"))
            } else {
                format!("{coeff}*{}", mono.join("*"))
            };
            terms.push(term);
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&var_names(self.dims.len())))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self}; dims {:?})", self.dims)
    }
}

/// `multi_mul_mod` as a free function.
pub fn multi_mul_mod(a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly> {
    a.mul(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ChainRing;

    fn z9() -> Ring {
        ChainRing::parse("Z/9").unwrap()
    }

    #[test]
    fn xy_squared_folds() {
        let r = z9();
        let xy = MultiPoly::monomial(&r, &[2, 2], &[1, 1], r.one());
        assert_eq!(xy.mul(&xy).unwrap(), MultiPoly::one(&r, &[2, 2]));
    }

    #[test]
    fn expand_and_fold() {
        let r = z9();
        let d = [3, 2];
        let x = MultiPoly::variable(&r, &d, 0);
        let y = MultiPoly::variable(&r, &d, 1);
        let lhs = x.add(&y).unwrap().mul(&x.pow(2).add(&y).unwrap()).unwrap();
        // x^3 and y^2 both fold to 1, so the constant term is 2
        let mut rhs = MultiPoly::constant(&r, &d, Elem(2));
        for e in [[2, 1], [1, 1]] {
            rhs = rhs.add(&MultiPoly::monomial(&r, &d, &e, r.one())).unwrap();
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluate_y_examples() {
        let r = ChainRing::parse("Z/25").unwrap();
        let d = [3, 4];
        let y = MultiPoly::variable(&r, &d, 1);
        assert_eq!(y.evaluate_y(Elem(7)).unwrap().dense(), vec![Elem(7), Elem(0), Elem(0)]);
        let s = (0..4).fold(MultiPoly::zero(&r, &d), |acc, j| acc.add(&y.pow(j)).unwrap());
        assert!(s.evaluate_y(Elem(7)).unwrap().is_zero());
        assert!(matches!(y.evaluate_y(Elem(2)), Err(Error::RootOrderViolation { .. })));
        let x = MultiPoly::variable(&r, &d, 0);
        assert_eq!(x.evaluate_y(Elem(7)).unwrap().dense(), vec![Elem(0), Elem(1), Elem(0)]);
    }

    #[test]
    fn transpose_swaps_indices() {
        let r = z9();
        let f = MultiPoly::monomial(&r, &[3, 4], &[1, 2], r.one());
        let t = f.transpose();
        assert_eq!(t.dims(), &[4, 3]);
        assert_eq!(t.coeff(&[2, 1]), r.one());
        assert_eq!(t.transpose(), f);
    }

    #[test]
    fn shift_matches_variable_product() {
        let r = z9();
        let d = [2, 3, 2];
        let f = MultiPoly::from_flat(&r, d.to_vec(), (0..12).map(|i| Elem(i % 9)).collect()).unwrap();
        for var in 0..3 {
            let expected = f.mul(&MultiPoly::variable(&r, &d, var)).unwrap();
            assert_eq!(f.shift(var, 1), expected);
        }
    }

    #[test]
    fn slices_round_trip() {
        let r = z9();
        let f = MultiPoly::from_flat(&r, vec![2, 3], (0..6).map(|i| Elem(i + 1)).collect()).unwrap();
        let slices: Vec<_> = (0..3).map(|j| f.slice_last(j)).collect();
        assert_eq!(MultiPoly::from_slices(&slices).unwrap(), f);
        assert_eq!(f.last_degree(), Some(2));
    }

    #[test]
    fn printing() {
        let r = z9();
        let d = [3, 2];
        let mut f = MultiPoly::zero(&r, &d);
        f.set_coeff(&[2, 1], Elem(8));
        f.set_coeff(&[1, 0], Elem(1));
        f.set_coeff(&[0, 0], Elem(3));
        assert_eq!(f.to_string(), "8*x^2*y + x + 3");
        let f4 = ChainRing::parse("F4[g]/(g^2)").unwrap();
        let g = MultiPoly::monomial(&f4, &[4], &[1], Elem(3));
        assert_eq!(g.to_string(), "(a + 1)*x");
    }
}
