use std::fmt;

use crate::cyclic::span::CodeSpan;
use crate::error::{Error, Result};
use crate::poly::{MultiPoly, Poly, QuotPoly};
use crate::ring::{Elem, FieldElem, Ring};

/// One staircase entry `g^i * q(x)` with `q` monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalEntry {
    pub gamma_exp: u32,
    pub q: Poly,
}

impl CanonicalEntry {
    pub fn degree(&self) -> usize {
        self.q.degree().expect("monic entries are nonzero")
    }

    /// `g^i * q` as a class modulo `x^m - 1`.
    pub fn generator(&self, m: usize) -> QuotPoly {
        let ring = self.q.ring();
        QuotPoly::new(&self.q.scale(ring.gamma_pow(self.gamma_exp)), m)
    }
}

/// Staircase generators `g^{i_0} q_0, .., g^{i_r} q_r` of a univariate code
/// with `i_0 > i_1 > ..` and `deg q_0 < deg q_1 < ..`. Empty for the zero code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalGenSet {
    ring: Ring,
    m: usize,
    entries: Vec<CanonicalEntry>,
}

impl CanonicalGenSet {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn length(&self) -> usize {
        self.m
    }

    pub fn entries(&self) -> &[CanonicalEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn generators(&self) -> Vec<QuotPoly> {
        self.entries.iter().map(|e| e.generator(self.m)).collect()
    }

    pub fn generator_polys(&self) -> Vec<MultiPoly> {
        self.generators().iter().map(QuotPoly::to_multi).collect()
    }

    pub fn to_span(&self) -> CodeSpan {
        CodeSpan::from_generators(&self.ring, &[self.m], &self.generator_polys()).expect("shape")
    }

    /// Strict `i`-descent, strict degree ascent, monic parts and the count bound
    /// `r + 1 <= min(nu, deg q_r + 1)`.
    pub fn check_staircase(&self) -> std::result::Result<(), String> {
        for w in self.entries.windows(2) {
            if w[0].gamma_exp <= w[1].gamma_exp {
                return Err(format!("gamma exponents {} then {}", w[0].gamma_exp, w[1].gamma_exp));
            }
            if w[0].degree() >= w[1].degree() {
                return Err(format!("degrees {} then {}", w[0].degree(), w[1].degree()));
            }
        }
        if let Some(e) = self.entries.iter().find(|e| !e.q.is_monic()) {
            return Err(format!("q = {} is not monic", e.q));
        }
        if let Some(last) = self.entries.last() {
            let bound = (self.ring.nu() as usize).min(last.degree() + 1);
            if self.entries.len() > bound {
                return Err(format!("{} entries exceed the bound {bound}", self.entries.len()));
            }
        }
        Ok(())
    }
}

impl fmt::Display for CanonicalGenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("zero code");
        }
        let lines: Vec<String> = self
            .entries
            .iter()
            .map(|e| format!("gamma^{} * ({})", e.gamma_exp, e.q))
            .collect();
        f.write_str(&lines.join("\n"))
    }
}

/// Residue-field left kernel of the rows: coefficient vectors `c` with
/// `sum c_i * residue(row_i) = 0`, as a basis.
fn residue_left_kernel(ring: &Ring, rows: &[Vec<Elem>]) -> Vec<Vec<FieldElem>> {
    let field = ring.field();
    let s = rows.len();
    let n = rows.first().map(Vec::len).unwrap_or(0);
    // augmented rows [residue(row) | e_i]
    let mut mat: Vec<Vec<FieldElem>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v: Vec<FieldElem> = r.iter().map(|&c| ring.residue(c)).collect();
            v.extend((0..s).map(|j| if i == j { field.one() } else { field.zero() }));
            v
        })
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..s).find(|&i| mat[i][col].0 != 0) else { continue };
        mat.swap(rank, p);
        let inv = field.inv(mat[rank][col]).expect("nonzero");
        let pivot_row: Vec<FieldElem> = mat[rank].iter().map(|&c| field.mul(c, inv)).collect();
        for (i, row) in mat.iter_mut().enumerate() {
            if i != rank && row[col].0 != 0 {
                let factor = row[col];
                for (c, &pc) in row.iter_mut().zip(&pivot_row) {
                    *c = field.sub(*c, field.mul(factor, pc));
                }
            }
        }
        mat[rank] = pivot_row;
        rank += 1;
    }
    mat[rank..].iter().map(|r| r[n..].to_vec()).collect()
}

/// `(C : g) = {f : g f in C}` for a shift-closed code `C`.
pub fn colon_gamma(span: &CodeSpan) -> CodeSpan {
    let ring = span.ring();
    let rows = span.row_coeffs();
    let mut gens: Vec<Vec<Elem>> = rows.to_vec();
    for c in residue_left_kernel(ring, rows) {
        let n = rows[0].len();
        let mut w = vec![Elem(0); n];
        for (ci, row) in c.iter().zip(rows) {
            if ci.0 == 0 {
                continue;
            }
            let lift = ring.lift(*ci);
            for (acc, &x) in w.iter_mut().zip(row) {
                *acc = ring.add(*acc, ring.mul(lift, x));
            }
        }
        debug_assert!(w.iter().all(|&x| ring.valuation(x) >= 1));
        gens.push(w.iter().map(|&x| ring.div_rem_gamma_pow(x, 1).0).collect());
    }
    let n: usize = span.dims().iter().product();
    let mut socle = vec![Elem(0); n];
    socle[0] = ring.gamma_pow(ring.nu() - 1);
    gens.push(socle);
    CodeSpan::from_vectors(ring, span.dims(), gens)
}

/// Staircase generators of a univariate code.
///
/// For each level `v < nu` the colon ideal `(C : g^v)` is formed and its
/// minimal-degree monic element `q_v` read from the valuation-0 pivots; a level
/// is kept when that degree drops below every smaller level's.
pub fn canonical_generators(span: &CodeSpan) -> Result<CanonicalGenSet> {
    let ring = span.ring().clone();
    let [m] = span.dims() else {
        return Err(Error::ShapeMismatch(format!(
            "canonical generators need one variable, got dims {:?}",
            span.dims()
        )));
    };
    let m = *m;
    let nu = ring.nu();
    let mut entries = Vec::new();
    let mut best = usize::MAX;
    let mut colon = span.clone();
    for v in 0..nu {
        if v > 0 {
            colon = colon_gamma(&colon);
        }
        let monic = colon
            .pivots()
            .iter()
            .zip(colon.row_coeffs())
            .find(|(p, _)| p.valuation == 0);
        if let Some((p, row)) = monic {
            if p.position < best {
                best = p.position;
                let coeffs = row.iter().map(|&c| ring.reduce_mod_gamma_pow(c, nu - v)).collect();
                entries.push(CanonicalEntry { gamma_exp: v, q: Poly::new(&ring, coeffs) });
            }
        }
        if best == 0 {
            break;
        }
    }
    entries.reverse();
    Ok(CanonicalGenSet { ring, m, entries })
}
