use std::collections::VecDeque;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::ring::{ChainRing, Elem, Ring};

/// Pivot of an echelon row: flat position of its leading term and the
/// valuation `v` of the leading coefficient, which is stored as exactly `g^v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pivot {
    pub position: usize,
    pub valuation: u32,
}

/// A shift-closed submodule of `R^N`, `N = m_1 * .. * m_k`, in reduced Howell form.
///
/// The leading term of a vector is its highest nonzero flat index, so the last
/// variable is the most significant. At most one row has its pivot at a given
/// position; for every row `r` with pivot valuation `v`, `g^(nu - v) r` reduces
/// to zero against the rows below it, which makes leading-term reduction a
/// complete membership test. Entries at lower pivot positions are reduced to
/// canonical representatives, so two spans are equal exactly when their rows are.
#[derive(Clone, PartialEq, Eq)]
pub struct CodeSpan {
    ring: Ring,
    dims: Vec<usize>,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<Pivot>,
}

fn shift_flat(dims: &[usize], w: &[Elem], var: usize) -> Vec<Elem> {
    let m = dims[var];
    let stride: usize = dims[..var].iter().product();
    let mut out = vec![Elem(0); w.len()];
    for (i, &c) in w.iter().enumerate() {
        if c.0 != 0 {
            let e = (i / stride) % m;
            let j = if e + 1 == m { i - e * stride } else { i + stride };
            out[j] = c;
        }
    }
    out
}

struct Builder<'a> {
    ring: &'a ChainRing,
    dims: &'a [usize],
    table: Vec<Option<(Vec<Elem>, u32)>>,
}

impl Builder<'_> {
    /// Leading-term reduction. Returns the remainder and the position where it
    /// got stuck, or `None` when it reduced to zero.
    fn reduce(&self, mut w: Vec<Elem>) -> (Vec<Elem>, Option<usize>) {
        let ring = self.ring;
        let mut hi = w.len();
        while let Some(i) = w[..hi].iter().rposition(|c| c.0 != 0) {
            match &self.table[i] {
                Some((row, v)) if ring.valuation(w[i]) >= *v => {
                    let t = ring.div_rem_gamma_pow(w[i], *v).0;
                    for k in 0..=i {
                        if row[k].0 != 0 {
                            w[k] = ring.sub(w[k], ring.mul(t, row[k]));
                        }
                    }
                    debug_assert_eq!(w[i], Elem(0));
                    hi = i;
                }
                _ => return (w, Some(i)),
            }
        }
        (w, None)
    }

    fn run(&mut self, queue: &mut VecDeque<Vec<Elem>>) -> bool {
        let ring = self.ring;
        let nu = ring.nu();
        let mut changed = false;
        while let Some(w) = queue.pop_front() {
            let (mut r, lead) = self.reduce(w);
            let Some(i) = lead else { continue };
            let v = ring.valuation(r[i]);
            let unit = ring.div_rem_gamma_pow(r[i], v).0;
            let inv = ring.inverse(unit).expect("unit part");
            if inv != ring.one() {
                for c in r.iter_mut().take(i + 1) {
                    *c = ring.mul(*c, inv);
                }
            }
            debug_assert_eq!(r[i], ring.gamma_pow(v));
            if v > 0 {
                queue.push_back(r.iter().map(|&c| ring.mul_gamma_pow(c, nu - v)).collect());
            }
            for var in 0..self.dims.len() {
                queue.push_back(shift_flat(self.dims, &r, var));
            }
            if let Some((old, _)) = self.table[i].replace((r, v)) {
                queue.push_back(old);
            }
            changed = true;
        }
        changed
    }

    /// Re-checks the annihilator and shift conditions on every row until stable.
    fn saturate(&mut self) {
        let nu = self.ring.nu();
        loop {
            let mut queue = VecDeque::new();
            for (row, v) in self.table.iter().flatten() {
                let mut probes: Vec<Vec<Elem>> =
                    (0..self.dims.len()).map(|var| shift_flat(self.dims, row, var)).collect();
                if *v > 0 {
                    probes.push(row.iter().map(|&c| self.ring.mul_gamma_pow(c, nu - v)).collect());
                }
                for p in probes {
                    if self.reduce(p.clone()).1.is_some() {
                        queue.push_back(p);
                    }
                }
            }
            if queue.is_empty() || !self.run(&mut queue) {
                return;
            }
        }
    }

    fn finish(self, ring: &Ring) -> CodeSpan {
        let r = self.ring;
        let mut rows: Vec<Vec<Elem>> = Vec::new();
        let mut pivots = Vec::new();
        for (pos, entry) in self.table.iter().enumerate() {
            let Some((row, v)) = entry else { continue };
            let mut row = row.clone();
            for j in (0..pos).rev() {
                if let Some((lower, w)) = &self.table[j] {
                    let (t, _) = r.div_rem_gamma_pow(row[j], *w);
                    if t.0 != 0 {
                        for k in 0..=j {
                            if lower[k].0 != 0 {
                                row[k] = r.sub(row[k], r.mul(t, lower[k]));
                            }
                        }
                    }
                }
            }
            rows.push(row);
            pivots.push(Pivot { position: pos, valuation: *v });
        }
        CodeSpan { ring: ring.clone(), dims: self.dims.to_vec(), rows, pivots }
    }
}

impl CodeSpan {
    pub fn zero(ring: &Ring, dims: &[usize]) -> Self {
        CodeSpan { ring: ring.clone(), dims: dims.to_vec(), rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ring: &Ring, dims: &[usize]) -> Self {
        Self::from_vectors(ring, dims, vec![MultiPoly::one(ring, dims).into_coeffs()])
    }

    /// Smallest shift-closed submodule containing the given coefficient vectors.
    pub fn from_vectors(ring: &Ring, dims: &[usize], vectors: Vec<Vec<Elem>>) -> Self {
        let n: usize = dims.iter().product();
        let mut b = Builder { ring, dims, table: vec![None; n] };
        let mut queue: VecDeque<Vec<Elem>> = vectors.into_iter().collect();
        debug_assert!(queue.iter().all(|v| v.len() == n));
        b.run(&mut queue);
        b.saturate();
        b.finish(ring)
    }

    pub fn from_generators(ring: &Ring, dims: &[usize], gens: &[MultiPoly]) -> Result<Self> {
        for g in gens {
            if g.ring() != ring {
                return Err(Error::SpecMismatch);
            }
            if g.dims() != dims {
                return Err(Error::ShapeMismatch(format!("generator dims {:?}, expected {dims:?}", g.dims())));
            }
        }
        Ok(Self::from_vectors(ring, dims, gens.iter().map(|g| g.coeffs().to_vec()).collect()))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn pivots(&self) -> &[Pivot] {
        &self.pivots
    }

    pub fn row_coeffs(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn rows(&self) -> Vec<MultiPoly> {
        self.rows
            .iter()
            .map(|r| MultiPoly::from_flat(&self.ring, self.dims.clone(), r.clone()).expect("shape"))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn pivot_at(&self, position: usize) -> Option<u32> {
        self.pivots
            .binary_search_by_key(&position, |p| p.position)
            .ok()
            .map(|i| self.pivots[i].valuation)
    }

    fn row_at(&self, position: usize) -> Option<(&[Elem], u32)> {
        self.pivots
            .binary_search_by_key(&position, |p| p.position)
            .ok()
            .map(|i| (self.rows[i].as_slice(), self.pivots[i].valuation))
    }

    /// Remainder of leading-term reduction restricted to positions in `range`.
    /// Returns the vector after all possible reductions and whether every
    /// position in the range was cleared.
    pub(crate) fn reduce_within(&self, mut w: Vec<Elem>, range: std::ops::Range<usize>) -> (Vec<Elem>, bool) {
        let ring = &self.ring;
        let mut hi = range.end;
        while let Some(off) = w[range.start..hi].iter().rposition(|c| c.0 != 0) {
            let i = range.start + off;
            match self.row_at(i) {
                Some((row, v)) if ring.valuation(w[i]) >= v => {
                    let t = ring.div_rem_gamma_pow(w[i], v).0;
                    for k in 0..=i {
                        if row[k].0 != 0 {
                            w[k] = ring.sub(w[k], ring.mul(t, row[k]));
                        }
                    }
                    hi = i;
                }
                _ => return (w, false),
            }
        }
        (w, true)
    }

    pub fn contains_coeffs(&self, w: &[Elem]) -> bool {
        self.reduce_within(w.to_vec(), 0..w.len()).1
    }

    pub fn contains(&self, f: &MultiPoly) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::SpecMismatch);
        }
        if f.dims() != self.dims.as_slice() {
            return Err(Error::ShapeMismatch(format!("word dims {:?}, code dims {:?}", f.dims(), self.dims)));
        }
        Ok(self.contains_coeffs(f.coeffs()))
    }

    /// `log_q |C|`, the sum of `nu - v` over the pivots.
    pub fn log_q_size(&self) -> u64 {
        let nu = self.ring.nu() as u64;
        self.pivots.iter().map(|p| nu - p.valuation as u64).sum()
    }

    pub fn cardinality(&self) -> BigUint {
        BigUint::from(self.ring.q()).pow(self.log_q_size() as u32)
    }

    /// Whether every element of `self` lies in `other`.
    pub fn is_subcode_of(&self, other: &CodeSpan) -> bool {
        self.rows.iter().all(|r| other.contains_coeffs(r))
    }

    /// Reorders variables: new variable `i` is old variable `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> CodeSpan {
        let rows: Vec<Vec<Elem>> = self.rows().iter().map(|r| r.permute(perm).into_coeffs()).collect();
        let dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        CodeSpan::from_vectors(&self.ring, &dims, rows)
    }

    pub fn transpose(&self) -> CodeSpan {
        self.permute(&[1, 0])
    }

    pub fn sum(&self, other: &CodeSpan) -> Result<CodeSpan> {
        self.same_shape(other)?;
        let vectors = self.rows.iter().chain(&other.rows).cloned().collect();
        Ok(CodeSpan::from_vectors(&self.ring, &self.dims, vectors))
    }

    fn same_shape(&self, other: &CodeSpan) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::SpecMismatch);
        }
        if self.dims != other.dims {
            return Err(Error::ShapeMismatch(format!("dims {:?} and {:?}", self.dims, other.dims)));
        }
        Ok(())
    }
}

impl std::fmt::Debug for CodeSpan {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CodeSpan")
            .field("ring", &self.ring.spec().to_string())
            .field("dims", &self.dims)
            .field("rows", &self.rows().iter().map(|r| r.to_string()).collect::<Vec<_>>())
            .field("pivots", &self.pivots)
            .finish()
    }
}

/// The smallest ideal containing `gens`, in canonical echelon form.
pub fn span_from_generators(ring: &Ring, dims: &[usize], gens: &[MultiPoly]) -> Result<CodeSpan> {
    CodeSpan::from_generators(ring, dims, gens)
}

pub fn membership(span: &CodeSpan, f: &MultiPoly) -> Result<bool> {
    span.contains(f)
}

pub fn cardinality(span: &CodeSpan) -> BigUint {
    span.cardinality()
}

/// Equality of codes; exact because the echelon form is canonical.
pub fn codes_equal(a: &CodeSpan, b: &CodeSpan) -> Result<bool> {
    a.same_shape(b)?;
    Ok(a.pivots == b.pivots && a.rows == b.rows)
}
