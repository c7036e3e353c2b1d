use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::ring::field::smallest_irreducible;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `Z/(p^nu)` with `gamma = p`.
    IntegerModular,
    /// `F_{p^r}[g]/(g^nu)`.
    GammaExtension,
}

/// Parameters of one of the two supported finite chain ring families.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    pub family: Family,
    pub p: u64,
    pub r: u32,
    pub nu: u32,
    /// Residue-field modulus for `GammaExtension`, low to high; empty otherwise.
    pub modulus_poly: Vec<u64>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `n` as `p^k` for a prime `p`.
fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n && !n.is_multiple_of(p) {
        p += 1;
    }
    if !n.is_multiple_of(p) {
        p = n;
    }
    let mut k = 0;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

/// Largest ring order the element encoding supports.
pub const MAX_RING_ORDER: u64 = 1 << 31;

impl RingSpec {
    pub fn integer_modular(p: u64, nu: u32) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        let spec = RingSpec { family: Family::IntegerModular, p, r: 1, nu, modulus_poly: Vec::new() };
        spec.check_size()?;
        Ok(spec)
    }

    pub fn gamma_extension(p: u64, r: u32, nu: u32) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        if r == 0 {
            return Err(Error::InvalidRing("residue degree must be positive".into()));
        }
        let spec = RingSpec {
            family: Family::GammaExtension,
            p,
            r,
            nu,
            modulus_poly: smallest_irreducible(p, r),
        };
        spec.check_size()?;
        Ok(spec)
    }

    fn check_size(&self) -> Result<(), Error> {
        if self.nu == 0 {
            return Err(Error::InvalidRing("nilpotency index must be at least 1".into()));
        }
        let q = self.p.checked_pow(self.r);
        let order = q.and_then(|q| q.checked_pow(self.nu));
        match order {
            Some(o) if o <= MAX_RING_ORDER => Ok(()),
            _ => Err(Error::InvalidRing(format!("ring order exceeds {MAX_RING_ORDER}"))),
        }
    }

    /// Residue field size `q = p^r`.
    pub fn q(&self) -> u64 {
        self.p.pow(self.r)
    }

    /// Number of ring elements `q^nu`.
    pub fn order(&self) -> u64 {
        self.q().pow(self.nu)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::IntegerModular => write!(f, "Z/{}", self.order()),
            Family::GammaExtension => write!(f, "F{}[g]/(g^{})", self.q(), self.nu),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    /// Accepts `Z/<p^nu>`, `F<q>[g]/(g^<nu>)` and the bare field `F<q>`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::InvalidRing(format!("cannot parse ring `{s}`"));
        if let Some(rest) = compact.strip_prefix("Z/") {
            let n: u64 = rest.parse().map_err(|_| bad())?;
            let (p, nu) = prime_power(n)
                .ok_or_else(|| Error::InvalidRing(format!("{n} is not a prime power")))?;
            return RingSpec::integer_modular(p, nu);
        }
        if let Some(rest) = compact.strip_prefix('F') {
            let (q_text, nu) = match rest.find('[') {
                Some(idx) => {
                    let tail = &rest[idx..];
                    let nu_text = tail
                        .strip_prefix("[g]/(g^")
                        .and_then(|t| t.strip_suffix(')'))
                        .or_else(|| tail.strip_prefix("[g]/(g").and_then(|t| t.strip_suffix(')')).map(|_| "1"))
                        .ok_or_else(bad)?;
                    let nu: u32 = nu_text.parse().map_err(|_| bad())?;
                    (&rest[..idx], nu)
                }
                None => (rest, 1),
            };
            let q: u64 = q_text.parse().map_err(|_| bad())?;
            let (p, r) = prime_power(q)
                .ok_or_else(|| Error::InvalidRing(format!("{q} is not a prime power")))?;
            return RingSpec::gamma_extension(p, r, nu);
        }
        Err(bad())
    }
}
