//! Brute-force codes: literal enumeration of spans and of the level sets used by
//! the two constructions.
//!
//! Nothing here touches the echelon code. Words are plain arrays of element
//! codes; shifting, adding and scaling are done locally on those arrays.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, QuotPoly};
use crate::ring::{Elem, Ring};

/// Default cap on the number of enumerated words.
pub const DEFAULT_BUDGET: usize = 1 << 24;

pub type Word = Box<[u16]>;

/// An explicitly enumerated code.
#[derive(Clone, Debug)]
pub struct EnumeratedCode {
    ring: Ring,
    dims: Vec<usize>,
    words: HashSet<Word>,
}

fn to_word(ring: &Ring, coeffs: &[Elem]) -> Result<Word> {
    if ring.order() > u16::MAX as u64 + 1 {
        return Err(Error::InvalidRing(format!("{} is too large for the oracle", ring.spec())));
    }
    Ok(coeffs.iter().map(|c| c.0 as u16).collect())
}

fn add_words(ring: &Ring, a: &[u16], b: &[u16]) -> Word {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| ring.add(Elem(x as u32), Elem(y as u32)).0 as u16)
        .collect()
}

fn scale_word(ring: &Ring, a: &[u16], c: Elem) -> Word {
    a.iter().map(|&x| ring.mul(Elem(x as u32), c).0 as u16).collect()
}

/// Multiplies by the monomial with exponent tuple `exps`.
fn monomial_shift(dims: &[usize], a: &[u16], exps: &[usize]) -> Word {
    let mut out = vec![0u16; a.len()];
    for (i, &c) in a.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mut rest = i;
        let mut j = 0;
        let mut stride = 1;
        for (d, &m) in dims.iter().enumerate() {
            let e = rest % m;
            rest /= m;
            j += ((e + exps[d]) % m) * stride;
            stride *= m;
        }
        out[j] = c;
    }
    out.into_boxed_slice()
}

fn all_exponents(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &m in dims {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..m).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    out
}

fn weight(w: &[u16]) -> usize {
    w.iter().filter(|&&c| c != 0).count()
}

impl EnumeratedCode {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &HashSet<Word> {
        &self.words
    }

    pub fn contains(&self, f: &MultiPoly) -> bool {
        f.dims() == self.dims.as_slice()
            && to_word(&self.ring, f.coeffs()).map(|w| self.words.contains(&w)).unwrap_or(false)
    }

    pub fn word_to_poly(&self, w: &[u16]) -> MultiPoly {
        let coeffs = w.iter().map(|&c| Elem(c as u32)).collect();
        MultiPoly::from_flat(&self.ring, self.dims.clone(), coeffs).expect("shape")
    }

    /// Closure under addition, scalars and every cyclic shift.
    pub fn is_closed(&self) -> bool {
        let shifts: Vec<Vec<usize>> = (0..self.dims.len())
            .map(|v| (0..self.dims.len()).map(|u| usize::from(u == v)).collect())
            .collect();
        self.words.iter().all(|w| {
            shifts.iter().all(|e| self.words.contains(&monomial_shift(&self.dims, w, e)))
                && self.ring.elements().all(|c| self.words.contains(&scale_word(&self.ring, w, c)))
        }) && {
            // closure under addition follows from the construction; spot check pairs
            let sample: Vec<&Word> = self.words.iter().take(64).collect();
            sample
                .iter()
                .all(|a| sample.iter().all(|b| self.words.contains(&add_words(&self.ring, a, b))))
        }
    }

    /// Smallest word (by weight, then lexicographically) in `self` but not `other`.
    pub fn min_difference(&self, other: &EnumeratedCode) -> Option<MultiPoly> {
        self.words
            .iter()
            .filter(|w| !other.words.contains(*w))
            .min_by(|a, b| weight(a).cmp(&weight(b)).then_with(|| a.cmp(b)))
            .map(|w| self.word_to_poly(w))
    }

    pub fn same_words(&self, other: &EnumeratedCode) -> bool {
        self.dims == other.dims && self.words == other.words
    }
}

/// Enumerates the ideal generated by `gens` by adding `R * w` for every shift
/// `w` of every generator that is not yet present.
pub fn enumerate_span(ring: &Ring, dims: &[usize], gens: &[MultiPoly], budget: usize) -> Result<EnumeratedCode> {
    let n: usize = dims.iter().product();
    let mut words: HashSet<Word> = HashSet::new();
    words.insert(vec![0u16; n].into_boxed_slice());
    let exps = all_exponents(dims);
    for g in gens {
        if g.dims() != dims {
            return Err(Error::ShapeMismatch(format!("generator dims {:?}, expected {dims:?}", g.dims())));
        }
        let base = to_word(ring, g.coeffs())?;
        for e in &exps {
            let w = monomial_shift(dims, &base, e);
            if words.contains(&w) {
                continue;
            }
            let multiples: HashSet<Word> = ring.elements().map(|c| scale_word(ring, &w, c)).collect();
            let estimate = words.len().saturating_mul(multiples.len());
            let mut next: HashSet<Word> = HashSet::with_capacity(estimate.min(budget));
            for s in &words {
                for t in &multiples {
                    next.insert(add_words(ring, s, t));
                }
                if next.len() > budget {
                    return Err(Error::BudgetExceeded { limit: budget });
                }
            }
            words = next;
        }
    }
    Ok(EnumeratedCode { ring: ring.clone(), dims: dims.to_vec(), words })
}

/// `I_j`: the coefficient of `x_k^(n-1-j)` over all words of last-variable degree
/// at most `n - 1 - j`. Words are returned over the first `k - 1` variables.
pub fn literal_ij(code: &EnumeratedCode, j: usize) -> HashSet<Word> {
    let k = code.dims.len();
    let n = code.dims[k - 1];
    let inner: usize = code.dims[..k - 1].iter().product();
    let d = n - 1 - j;
    code.words
        .iter()
        .filter(|w| w[(d + 1) * inner..].iter().all(|&c| c == 0))
        .map(|w| w[d * inner..(d + 1) * inner].to_vec().into_boxed_slice())
        .collect()
}

/// `C_j = {g : g * theta_j in C}`, scanning every word over the first `k - 1`
/// variables.
pub fn literal_cj(code: &EnumeratedCode, theta: &QuotPoly, budget: usize) -> Result<HashSet<Word>> {
    let ring = &code.ring;
    let k = code.dims.len();
    let n = code.dims[k - 1];
    if theta.modulus() != n {
        return Err(Error::ShapeMismatch(format!("idempotent modulus {} for length {n}", theta.modulus())));
    }
    let inner: usize = code.dims[..k - 1].iter().product();
    let q = ring.order() as usize;
    let total = (0..inner).try_fold(1usize, |acc, _| acc.checked_mul(q).filter(|&t| t <= budget));
    if total.is_none() {
        return Err(Error::BudgetExceeded { limit: budget });
    }
    let th: Vec<Elem> = theta.dense();
    let mut out = HashSet::new();
    let mut g = vec![0u16; inner];
    loop {
        let mut prod = vec![0u16; inner * n];
        for (e, &t) in th.iter().enumerate() {
            for (i, &c) in g.iter().enumerate() {
                prod[e * inner + i] = ring.mul(Elem(c as u32), t).0 as u16;
            }
        }
        if code.words.contains(prod.as_slice()) {
            out.insert(g.clone().into_boxed_slice());
        }
        // odometer over all words of length inner
        let mut pos = 0;
        loop {
            if pos == inner {
                return Ok(out);
            }
            g[pos] += 1;
            if g[pos] as usize == q {
                g[pos] = 0;
                pos += 1;
            } else {
                break;
            }
        }
    }
}

/// `{f(.., value) : f in C}` computed word by word.
pub fn literal_evaluation(code: &EnumeratedCode, value: Elem) -> HashSet<Word> {
    let ring = &code.ring;
    let k = code.dims.len();
    let n = code.dims[k - 1];
    let inner: usize = code.dims[..k - 1].iter().product();
    code.words
        .iter()
        .map(|w| {
            let mut acc = vec![Elem(0); inner];
            let mut power = ring.one();
            for e in 0..n {
                for (i, a) in acc.iter_mut().enumerate() {
                    *a = ring.add(*a, ring.mul(Elem(w[e * inner + i] as u32), power));
                }
                power = ring.mul(power, value);
            }
            acc.iter().map(|c| c.0 as u16).collect()
        })
        .collect()
}

/// Word set of a list of polynomials over the same dims.
pub fn word_set(ring: &Ring, polys: &[MultiPoly]) -> Result<HashSet<Word>> {
    polys.iter().map(|p| to_word(ring, p.coeffs())).collect()
}
