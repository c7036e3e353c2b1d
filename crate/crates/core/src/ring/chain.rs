use std::fmt;
use std::sync::Arc;

use crate::error::Error;
use crate::ring::field::{FieldElem, ResidueField};
use crate::ring::spec::{Family, RingSpec};

/// A ring element encoded by its canonical integer code.
///
/// For `Z/(p^nu)` the code is the residue in `[0, p^nu)`. For
/// `F_q[g]/(g^nu)` it is `sum_i c_i q^i` where `c_i` is the field code of the
/// coefficient of `g^i`. In both families the code is the base-`b` expansion of
/// the element in powers of `gamma` (`b = p` resp. `b = q`), so multiplying by
/// `gamma^v` and dividing by it are digit shifts of the code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Elem(pub u32);

/// Order up to which `F_q[g]/(g^nu)` arithmetic is tabulated.
const TABLE_LIMIT: u64 = 1024;

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
}

/// Arithmetic context for a finite chain ring.
pub struct ChainRing {
    spec: RingSpec,
    field: ResidueField,
    base: u64,
    order: u64,
    tables: Option<Tables>,
}

pub type Ring = Arc<ChainRing>;

impl PartialEq for ChainRing {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for ChainRing {}

impl fmt::Debug for ChainRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChainRing({})", self.spec)
    }
}

impl fmt::Display for ChainRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.spec.fmt(f)
    }
}

impl ChainRing {
    pub fn new(spec: RingSpec) -> Ring {
        let field = ResidueField::new(spec.p, spec.r);
        let base = match spec.family {
            Family::IntegerModular => spec.p,
            Family::GammaExtension => spec.q(),
        };
        let order = spec.order();
        let mut ring = ChainRing { spec, field, base, order, tables: None };
        if ring.spec.family == Family::GammaExtension && order <= TABLE_LIMIT {
            let n = order as usize;
            let mut add = vec![0u32; n * n];
            let mut mul = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    add[a * n + b] = ring.gamma_add(Elem(a as u32), Elem(b as u32)).0;
                    mul[a * n + b] = ring.gamma_mul(Elem(a as u32), Elem(b as u32)).0;
                }
            }
            ring.tables = Some(Tables { add, mul });
        }
        Arc::new(ring)
    }

    pub fn parse(text: &str) -> Result<Ring, Error> {
        Ok(ChainRing::new(text.parse()?))
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn field(&self) -> &ResidueField {
        &self.field
    }

    pub fn family(&self) -> Family {
        self.spec.family
    }

    pub fn nu(&self) -> u32 {
        self.spec.nu
    }

    pub fn q(&self) -> u64 {
        self.field.order()
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Digit base of the `gamma`-adic code: `p` for `Z/(p^nu)`, `q` otherwise.
    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn zero(&self) -> Elem {
        Elem(0)
    }

    pub fn one(&self) -> Elem {
        Elem(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order as u32).map(Elem)
    }

    pub fn from_int(&self, v: i64) -> Elem {
        match self.spec.family {
            Family::IntegerModular => Elem(v.rem_euclid(self.order as i64) as u32),
            Family::GammaExtension => Elem(self.field.from_int(v).0),
        }
    }

    /// The uniformizer `gamma` (`p` resp. `g`); zero when `nu = 1`.
    pub fn gamma(&self) -> Elem {
        self.gamma_pow(1)
    }

    pub fn gamma_pow(&self, v: u32) -> Elem {
        if v >= self.spec.nu {
            Elem(0)
        } else {
            Elem(self.base.pow(v) as u32)
        }
    }

    /// `gamma^v * a`.
    pub fn mul_gamma_pow(&self, a: Elem, v: u32) -> Elem {
        if v >= self.spec.nu {
            return Elem(0);
        }
        Elem(((a.0 as u64 * self.base.pow(v)) % self.order) as u32)
    }

    /// Splits `a = gamma^v * quot + rem` with `rem` the canonical representative
    /// of `a` modulo `gamma^v` and `quot` reduced modulo `gamma^(nu - v)`.
    pub fn div_rem_gamma_pow(&self, a: Elem, v: u32) -> (Elem, Elem) {
        if v >= self.spec.nu {
            return (Elem(0), a);
        }
        let b = self.base.pow(v);
        (Elem((a.0 as u64 / b) as u32), Elem((a.0 as u64 % b) as u32))
    }

    /// Canonical representative of `a` modulo `gamma^v`.
    pub fn reduce_mod_gamma_pow(&self, a: Elem, v: u32) -> Elem {
        self.div_rem_gamma_pow(a, v).1
    }

    /// Largest `i` with `a` in `<gamma^i>`; `nu` for zero.
    pub fn valuation(&self, a: Elem) -> u32 {
        if a.0 == 0 {
            return self.spec.nu;
        }
        let mut v = 0;
        let mut c = a.0 as u64;
        while c.is_multiple_of(self.base) {
            c /= self.base;
            v += 1;
        }
        v
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        !(a.0 as u64).is_multiple_of(self.base)
    }

    pub fn residue(&self, a: Elem) -> FieldElem {
        match self.spec.family {
            Family::IntegerModular => FieldElem((a.0 as u64 % self.spec.p) as u32),
            Family::GammaExtension => FieldElem((a.0 as u64 % self.base) as u32),
        }
    }

    /// Canonical lift of a residue-field element (digit zero of the code).
    pub fn lift(&self, a: FieldElem) -> Elem {
        Elem(a.0)
    }

    fn digits(&self, a: Elem) -> Vec<FieldElem> {
        let mut out = Vec::with_capacity(self.spec.nu as usize);
        let mut c = a.0 as u64;
        for _ in 0..self.spec.nu {
            out.push(FieldElem((c % self.base) as u32));
            c /= self.base;
        }
        out
    }

    fn encode_digits(&self, digits: &[FieldElem]) -> Elem {
        let mut code = 0u64;
        for d in digits.iter().rev() {
            code = code * self.base + d.0 as u64;
        }
        Elem(code as u32)
    }

    fn gamma_add(&self, a: Elem, b: Elem) -> Elem {
        let da = self.digits(a);
        let db = self.digits(b);
        let s: Vec<FieldElem> = da.iter().zip(&db).map(|(x, y)| self.field.add(*x, *y)).collect();
        self.encode_digits(&s)
    }

    fn gamma_mul(&self, a: Elem, b: Elem) -> Elem {
        let nu = self.spec.nu as usize;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut out = vec![FieldElem(0); nu];
        for i in 0..nu {
            if da[i].0 == 0 {
                continue;
            }
            for j in 0..nu - i {
                let t = self.field.mul(da[i], db[j]);
                out[i + j] = self.field.add(out[i + j], t);
            }
        }
        self.encode_digits(&out)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match self.spec.family {
            Family::IntegerModular => Elem(((a.0 as u64 + b.0 as u64) % self.order) as u32),
            Family::GammaExtension => match &self.tables {
                Some(t) => Elem(t.add[a.0 as usize * self.order as usize + b.0 as usize]),
                None => self.gamma_add(a, b),
            },
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        match self.spec.family {
            Family::IntegerModular => Elem(((self.order - a.0 as u64) % self.order) as u32),
            Family::GammaExtension => {
                let d: Vec<FieldElem> = self.digits(a).iter().map(|x| self.field.neg(*x)).collect();
                self.encode_digits(&d)
            }
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match self.spec.family {
            Family::IntegerModular => Elem(((a.0 as u64 * b.0 as u64) % self.order) as u32),
            Family::GammaExtension => match &self.tables {
                Some(t) => Elem(t.mul[a.0 as usize * self.order as usize + b.0 as usize]),
                None => self.gamma_mul(a, b),
            },
        }
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
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

    /// Inverse of a unit by Newton iteration `x <- x (2 - a x)` from the residue inverse.
    pub fn inverse(&self, a: Elem) -> Option<Elem> {
        let inv0 = self.field.inv(self.residue(a))?;
        let mut x = self.lift(inv0);
        let two = self.from_int(2);
        let mut precision = 1;
        loop {
            if self.mul(a, x) == self.one() {
                return Some(x);
            }
            x = self.mul(x, self.sub(two, self.mul(a, x)));
            precision *= 2;
            if precision > 2 * self.spec.nu {
                debug_assert_eq!(self.mul(a, x), self.one());
                return Some(x);
            }
        }
    }

    /// Whether the printed form of `a` needs parentheses when used as a factor.
    pub fn is_compound(&self, a: Elem) -> bool {
        match self.spec.family {
            Family::IntegerModular => false,
            Family::GammaExtension => {
                let digits = self.digits(a);
                let nonzero: Vec<_> = digits.iter().enumerate().filter(|(_, d)| d.0 != 0).collect();
                match nonzero.as_slice() {
                    [] => false,
                    [(_, d)] => self.field.term_count(**d) > 1,
                    _ => true,
                }
            }
        }
    }

    pub fn format(&self, a: Elem) -> String {
        match self.spec.family {
            Family::IntegerModular => a.0.to_string(),
            Family::GammaExtension => {
                let digits = self.digits(a);
                let mut parts = Vec::new();
                for (i, d) in digits.iter().enumerate() {
                    if d.0 == 0 {
                        continue;
                    }
                    let c = self.field.format(*d);
                    let g = if i == 1 { "g".to_string() } else { format!("g^{i}") };
                    parts.push(match (i, d.0) {
                        (0, _) => c,
                        (_, 1) => g,
                        _ if self.field.term_count(*d) > 1 => format!("({c})*{g}"),
                        _ => format!("{c}*{g}"),
                    });
                }
                if parts.is_empty() {
                    "0".into()
                } else {
                    parts.join(" + ")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(text: &str) -> Ring {
        ChainRing::parse(text).unwrap()
    }

    #[test]
    fn z25_basics() {
        let r = ring("Z/25");
        assert_eq!(r.add(Elem(19), Elem(7)), Elem(1));
        assert_eq!(r.mul(Elem(4), Elem(19)), Elem(1));
        assert_eq!(r.mul(Elem(7), Elem(7)), Elem(24));
        assert_eq!(r.inverse(Elem(4)), Some(Elem(19)));
        assert_eq!(r.valuation(Elem(10)), 1);
        assert_eq!(r.residue(Elem(7)).0, 2);
        assert_eq!(r.div_rem_gamma_pow(Elem(17), 1), (Elem(3), Elem(2)));
    }

    #[test]
    fn gamma_extension_nilpotent() {
        let r = ring("F4[g]/(g^2)");
        let g = r.gamma();
        assert_eq!(g, Elem(4));
        assert_eq!(r.add(g, g), Elem(0));
        assert_eq!(r.mul(g, g), Elem(0));
        assert_eq!(r.valuation(g), 1);
        assert_eq!(r.valuation(Elem(0)), 2);
        assert!(r.inverse(g).is_none());
        // (a + 1) + a g
        let x = Elem(3 + 4 * 2);
        assert_eq!(r.format(x), "a + 1 + a*g");
        assert_eq!(r.residue(x).0, 3);
    }

    #[test]
    fn untabulated_matches_tabulated() {
        // F_17[g]/(g^3) has 4913 elements and is computed without tables
        let r = ring("F17[g]/(g^3)");
        assert!(r.tables.is_none());
        let a = Elem(5 + 17 * 3 + 289 * 11);
        let inv = r.inverse(a).unwrap();
        assert_eq!(r.mul(a, inv), r.one());
        assert_eq!(r.mul(r.gamma_pow(2), r.gamma()), Elem(0));
    }

    #[test]
    fn unit_xor_gamma_multiple_exhaustive() {
        for text in ["Z/9", "Z/27", "F4[g]/(g^2)", "F9[g]/(g^2)", "Z/81"] {
            let r = ring(text);
            for a in r.elements() {
                let in_gamma = r.valuation(a) >= 1;
                assert_ne!(r.is_unit(a), in_gamma, "{text} {a:?}");
                assert_eq!(r.inverse(a).is_some(), r.is_unit(a));
                if let Some(inv) = r.inverse(a) {
                    assert_eq!(r.mul(a, inv), r.one());
                }
                let (quot, rem) = r.div_rem_gamma_pow(a, 1);
                assert_eq!(r.add(r.mul_gamma_pow(quot, 1), rem), a);
            }
        }
    }
}
