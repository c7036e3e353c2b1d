//! The residue field `F_q = F_p[a]/(m(a))` of a chain ring.
//!
//! Elements are encoded as integers `c_0 + c_1 p + ... + c_{r-1} p^{r-1}` where
//! `c_i` is the coefficient of `a^i` in the power basis.

use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElem(pub u32);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueField {
    p: u64,
    r: u32,
    q: u64,
    /// Monic modulus, coefficients low to high, length `r + 1`.
    modulus: Vec<u64>,
}

/// Polynomial remainder over `F_p`; `modulus` must be monic.
fn rem_mod_p(mut a: Vec<u64>, modulus: &[u64], p: u64) -> Vec<u64> {
    let d = modulus.len() - 1;
    while a.len() > d {
        let lead = a.pop().unwrap();
        if lead != 0 {
            let shift = a.len() - d;
            for (i, &m) in modulus[..d].iter().enumerate() {
                let idx = shift + i;
                a[idx] = (a[idx] + (p - lead) * m) % p;
            }
        }
    }
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn is_irreducible(modulus: &[u64], p: u64) -> bool {
    let r = modulus.len() - 1;
    if r <= 1 {
        return true;
    }
    // trial division by every monic polynomial of degree 1..=r/2
    for deg in 1..=r / 2 {
        let count = p.pow(deg as u32);
        for code in 0..count {
            let mut div = Vec::with_capacity(deg + 1);
            let mut c = code;
            for _ in 0..deg {
                div.push(c % p);
                c /= p;
            }
            div.push(1);
            if rem_mod_p(modulus.to_vec(), &div, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible of degree `r` over `F_p`, ordered by the
/// integer code of its non-leading coefficients (constant term least significant).
pub fn smallest_irreducible(p: u64, r: u32) -> Vec<u64> {
    let count = p.pow(r);
    for code in 0..count {
        let mut m = Vec::with_capacity(r as usize + 1);
        let mut c = code;
        for _ in 0..r {
            m.push(c % p);
            c /= p;
        }
        m.push(1);
        if is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl ResidueField {
    pub fn new(p: u64, r: u32) -> Self {
        let modulus = smallest_irreducible(p, r);
        ResidueField { p, r, q: p.pow(r), modulus }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.r
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem(0)
    }

    pub fn one(&self) -> FieldElem {
        FieldElem(1)
    }

    /// The power-basis generator `a` (for `r = 1` this is the root of `x`, i.e. zero).
    pub fn generator(&self) -> FieldElem {
        if self.r == 1 {
            FieldElem(0)
        } else {
            FieldElem(self.p as u32)
        }
    }

    pub fn from_int(&self, v: i64) -> FieldElem {
        FieldElem(v.rem_euclid(self.p as i64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q as u32).map(FieldElem)
    }

    pub fn digits(&self, a: FieldElem) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.r as usize);
        let mut c = a.0 as u64;
        for _ in 0..self.r {
            out.push(c % self.p);
            c /= self.p;
        }
        out
    }

    pub fn encode_digits(&self, digits: &[u64]) -> FieldElem {
        let mut code = 0u64;
        for &d in digits.iter().rev() {
            code = code * self.p + d % self.p;
        }
        FieldElem(code as u32)
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.r == 1 {
            return FieldElem(((a.0 as u64 + b.0 as u64) % self.p) as u32);
        }
        let da = self.digits(a);
        let db = self.digits(b);
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.encode_digits(&sum)
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if self.r == 1 {
            return FieldElem(((self.p - a.0 as u64) % self.p) as u32);
        }
        let d: Vec<u64> = self.digits(a).iter().map(|x| (self.p - x) % self.p).collect();
        self.encode_digits(&d)
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.r == 1 {
            return FieldElem(((a.0 as u64 * b.0 as u64) % self.p) as u32);
        }
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * self.r as usize - 1];
        for (i, x) in da.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let rem = rem_mod_p(prod, &self.modulus, self.p);
        self.encode_digits(&rem)
    }

    pub fn pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElem) -> Option<FieldElem> {
        if a.0 == 0 {
            None
        } else {
            Some(self.pow(a, self.q - 2))
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn order_of(&self, a: FieldElem) -> Option<u64> {
        if a.0 == 0 {
            return None;
        }
        let mut x = a;
        let mut k = 1u64;
        while x != self.one() {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    /// Number of nonzero power-basis terms; used to decide on parentheses.
    pub fn term_count(&self, a: FieldElem) -> usize {
        self.digits(a).iter().filter(|d| **d != 0).count()
    }

    pub fn format(&self, a: FieldElem) -> String {
        if self.r == 1 {
            return a.0.to_string();
        }
        let digits = self.digits(a);
        let mut out = String::new();
        for (i, &d) in digits.iter().enumerate().rev() {
            if d == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            match (i, d) {
                (0, _) => write!(out, "{d}").unwrap(),
                (1, 1) => out.push('a'),
                (1, _) => write!(out, "{d}*a").unwrap(),
                (_, 1) => write!(out, "a^{i}").unwrap(),
                _ => write!(out, "{d}*a^{i}").unwrap(),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}
