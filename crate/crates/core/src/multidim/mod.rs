//! 2D and nD generator sets.
//!
//! The recursion always works on the last variable of the current order. When
//! its length `n` divides `q - 1` the code splits along the idempotents of
//! `R[x_k]/(x_k^n - 1)` into the evaluation images `C_j` at `x_k = zeta^j`;
//! otherwise the level ideals `I_j` of top coefficients are peeled off and a
//! witness codeword is picked for each of their generators.

mod idempotents;
mod levels;
mod report;
mod separable;

use rayon::prelude::*;

use crate::cyclic::{canonical_generators, codes_equal, CanonicalGenSet, CodeSpan};
use crate::error::{Error, Result};
use crate::poly::{var_names, MultiPoly};
use crate::ring::{Elem, Ring};

pub use idempotents::{idempotents, IdempotentFamily};
pub use levels::{method1_from_levels, method2_from_levels};
pub use report::{
    describe_path, Certification, Generator, GeneratorReport, LevelRecord, Method, ProductForm, Step,
};
pub use separable::is_separable;

/// Which construction to apply to the outermost variable.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Route {
    /// Idempotent split wherever the length divides `q - 1`, peeling elsewhere.
    #[default]
    Auto,
    /// Peeling at every variable.
    Method1,
    /// Idempotent split at the outermost variable, which must divide `q - 1`.
    Method2,
}

#[derive(Clone, Debug)]
pub struct NdOptions {
    pub method: Route,
    /// Process the variables in reverse order (for two variables: work over
    /// `(R[y]/(y^n - 1))[x]`).
    pub transpose: bool,
    pub certify: bool,
    /// Largest `prod m_i` for which the span certificate is computed.
    pub span_budget: usize,
}

impl Default for NdOptions {
    fn default() -> Self {
        NdOptions { method: Route::Auto, transpose: false, certify: true, span_budget: 4096 }
    }
}

pub(crate) fn divides_q_minus_one(ring: &Ring, n: usize) -> bool {
    (ring.q() - 1).is_multiple_of(n as u64)
}

fn incompatible(ring: &Ring, n: usize) -> Error {
    Error::OrderNotCompatible { n, q_minus_one: ring.q() - 1 }
}

/// Block-`d` slices of the rows whose pivot lies in block `d`: an `R`-spanning
/// set of the level ideal with top degree `d` in the last variable.
fn level_vectors(span: &CodeSpan, d: usize) -> Vec<Vec<Elem>> {
    let dims = span.dims();
    let len: usize = dims[..dims.len() - 1].iter().product();
    span.pivots()
        .iter()
        .zip(span.row_coeffs())
        .filter(|(p, _)| p.position / len == d)
        .map(|(_, row)| row[d * len..(d + 1) * len].to_vec())
        .collect()
}

/// `I_j` for a code in two or more variables, as codes over the first `k - 1`.
pub fn level_ideals(span: &CodeSpan) -> Result<Vec<CodeSpan>> {
    let dims = span.dims();
    if dims.len() < 2 {
        return Err(Error::ShapeMismatch(format!("level ideals need two or more variables, got {dims:?}")));
    }
    let n = dims[dims.len() - 1];
    let inner = &dims[..dims.len() - 1];
    Ok((0..n)
        .map(|j| CodeSpan::from_vectors(span.ring(), inner, level_vectors(span, n - 1 - j)))
        .collect())
}

/// The ideals `I_0, .., I_{n-1}` of a 2D code in staircase form.
pub fn method1_ideals(span: &CodeSpan) -> Result<Vec<CanonicalGenSet>> {
    if span.dims().len() != 2 {
        return Err(Error::ShapeMismatch(format!("method1_ideals needs dims (m, n), got {:?}", span.dims())));
    }
    level_ideals(span)?.iter().map(canonical_generators).collect()
}

/// `{f(.., value) : f in C}` over the first `k - 1` variables.
pub fn evaluation_image(span: &CodeSpan, value: Elem) -> Result<CodeSpan> {
    let dims = span.dims();
    let inner = &dims[..dims.len() - 1];
    let images = span.rows().iter().map(|r| r.evaluate_last(value)).collect::<Result<Vec<_>>>()?;
    CodeSpan::from_generators(span.ring(), inner, &images)
}

struct Item {
    poly: MultiPoly,
    form: ProductForm,
    origin: Vec<Step>,
    leaf_index: usize,
}

#[derive(Default)]
struct Solved {
    items: Vec<Item>,
    levels: Vec<LevelRecord>,
    method1: bool,
    method2: bool,
}

impl Solved {
    fn absorb(&mut self, other: Solved) {
        self.levels.extend(other.levels);
        self.method1 |= other.method1;
        self.method2 |= other.method2;
    }
}

/// `vars[i]` is the original index of the current variable `i`.
fn solve(ring: &Ring, dims: &[usize], gens: Vec<MultiPoly>, route: Route, path: Vec<Step>, vars: &[usize]) -> Result<Solved> {
    let k = dims.len();
    if k == 1 {
        let span = CodeSpan::from_generators(ring, dims, &gens)?;
        let set = canonical_generators(&span)?;
        let items = set
            .entries()
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let poly = e.generator(dims[0]).to_multi();
                Item {
                    form: ProductForm { core_vars: vars.to_vec(), core: poly.clone(), factors: Vec::new() },
                    poly,
                    origin: path.clone(),
                    leaf_index: i,
                }
            })
            .collect();
        return Ok(Solved { items, levels: vec![LevelRecord { path, set }], ..Default::default() });
    }
    let n = dims[k - 1];
    let inner = &dims[..k - 1];
    let var = vars[k - 1];
    let split = match route {
        Route::Method1 => false,
        Route::Method2 if !divides_q_minus_one(ring, n) => return Err(incompatible(ring, n)),
        Route::Method2 => true,
        Route::Auto => divides_q_minus_one(ring, n),
    };
    let inner_route = if route == Route::Method1 { Route::Method1 } else { Route::Auto };
    let step_path = |step: Step| {
        let mut p = path.clone();
        p.push(step);
        p
    };

    let mut out = Solved::default();
    if split {
        let fam = idempotents(ring, n)?;
        let subs = (0..n)
            .into_par_iter()
            .map(|j| {
                let z = fam.zeta_pow(j);
                let images = gens
                    .iter()
                    .map(|g| g.evaluate_last(z))
                    .filter(|g| !g.as_ref().is_ok_and(MultiPoly::is_zero))
                    .collect::<Result<Vec<_>>>()?;
                solve(ring, inner, images, inner_route, step_path(Step::Split { var, j }), &vars[..k - 1])
            })
            .collect::<Result<Vec<_>>>()?;
        out.method2 = n > 1;
        for (j, mut sub) in subs.into_iter().enumerate() {
            let theta = fam.theta(j);
            let lifted = MultiPoly::from_univariate(theta, dims, k - 1)?;
            for item in std::mem::take(&mut sub.items) {
                let poly = item.poly.extend_last(n).mul(&lifted)?;
                let mut form = item.form;
                form.factors.push((var, theta.clone()));
                out.items.push(Item { poly, form, ..item });
            }
            out.absorb(sub);
        }
    } else {
        let span = CodeSpan::from_generators(ring, dims, &gens)?;
        let len: usize = inner.iter().product();
        let subs = (0..n)
            .into_par_iter()
            .map(|j| {
                let d = n - 1 - j;
                let slices = level_vectors(&span, d)
                    .into_iter()
                    .map(|v| MultiPoly::from_flat(ring, inner.to_vec(), v))
                    .collect::<Result<Vec<_>>>()?;
                let mut sub = solve(ring, inner, slices, inner_route, step_path(Step::Peel { var, j }), &vars[..k - 1])?;
                for item in &mut sub.items {
                    let mut v = vec![Elem(0); len * n];
                    v[d * len..(d + 1) * len].copy_from_slice(item.poly.coeffs());
                    let (rest, cleared) = span.reduce_within(v.clone(), d * len..(d + 1) * len);
                    if !cleared {
                        return Err(Error::WitnessNotFound);
                    }
                    let witness: Vec<Elem> = v.iter().zip(&rest).map(|(&a, &b)| ring.sub(a, b)).collect();
                    item.poly = MultiPoly::from_flat(ring, dims.to_vec(), witness)?;
                    item.form = ProductForm { core_vars: vars.to_vec(), core: item.poly.clone(), factors: Vec::new() };
                }
                Ok(sub)
            })
            .collect::<Result<Vec<_>>>()?;
        out.method1 = true;
        for mut sub in subs {
            out.items.append(&mut sub.items);
            out.absorb(sub);
        }
    }
    Ok(out)
}

fn processing_order(ring: &Ring, dims: &[usize], opts: &NdOptions) -> Vec<usize> {
    let mut order: Vec<usize> = (0..dims.len()).collect();
    if opts.transpose {
        order.reverse();
    }
    if opts.method == Route::Auto {
        // divisors of q - 1 last, so they are split first
        let (div, rest): (Vec<usize>, Vec<usize>) = order.iter().partition(|&&v| divides_q_minus_one(ring, dims[v]));
        order = rest.into_iter().chain(div).collect();
    }
    order
}

/// Generators of the code spanned by `gens` in `R[x_1..x_k]/(x_i^{m_i} - 1)`.
pub fn nd_generators(ring: &Ring, dims: &[usize], gens: &[MultiPoly], opts: &NdOptions) -> Result<GeneratorReport> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::ShapeMismatch(format!("dims must be nonempty and positive, got {dims:?}")));
    }
    for g in gens {
        if g.ring() != ring {
            return Err(Error::SpecMismatch);
        }
        if g.dims() != dims {
            return Err(Error::ShapeMismatch(format!("generator dims {:?}, expected {dims:?}", g.dims())));
        }
    }
    let k = dims.len();
    let order = processing_order(ring, dims, opts);
    let pdims: Vec<usize> = order.iter().map(|&v| dims[v]).collect();
    let pgens: Vec<MultiPoly> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.permute(&order)).collect();
    let solved = solve(ring, &pdims, pgens, opts.method, Vec::new(), &order)?;

    let mut inverse = vec![0; k];
    for (i, &v) in order.iter().enumerate() {
        inverse[v] = i;
    }
    let generators: Vec<Generator> = solved
        .items
        .into_iter()
        .map(|item| {
            let poly = item.poly.permute(&inverse);
            Generator { separable: is_separable(&poly), poly, form: item.form, origin: item.origin, leaf_index: item.leaf_index }
        })
        .collect();
    let method = match (k, solved.method1, solved.method2) {
        (1, _, _) => Method::Canonical,
        (_, true, true) => Method::Hybrid,
        (_, false, true) => Method::Method2,
        _ => Method::Method1,
    };

    let mut notes = Vec::new();
    if order.iter().enumerate().any(|(i, &v)| i != v) {
        let names = var_names(k);
        let shown: Vec<&str> = order.iter().rev().map(|&v| names[v].as_str()).collect();
        notes.push(format!("variables processed outermost first: {}", shown.join(", ")));
    }
    let size: usize = dims.iter().product();
    let certification = if !opts.certify {
        Certification::Uncertified("certification not requested".into())
    } else if size > opts.span_budget {
        Certification::Uncertified(format!("{size} coefficients per word exceeds the span budget {}", opts.span_budget))
    } else {
        let input = CodeSpan::from_generators(ring, dims, gens)?;
        let polys: Vec<MultiPoly> = generators.iter().map(|g| g.poly.clone()).collect();
        let output = CodeSpan::from_generators(ring, dims, &polys)?;
        if codes_equal(&input, &output)? {
            Certification::Certified
        } else {
            Certification::Failed("span of the generators differs from the input code".into())
        }
    };
    Ok(GeneratorReport { method, dims: dims.to_vec(), order, generators, levels: solved.levels, certification, notes })
}

fn two_dims(span: &CodeSpan, what: &str) -> Result<()> {
    if span.dims().len() != 2 {
        return Err(Error::ShapeMismatch(format!("{what} needs dims (m, n), got {:?}", span.dims())));
    }
    Ok(())
}

fn forced(span: &CodeSpan, method: Route) -> Result<GeneratorReport> {
    let opts = NdOptions { method, transpose: false, certify: true, span_budget: usize::MAX };
    nd_generators(span.ring(), span.dims(), &span.rows(), &opts)
}

/// Peeling over `y`: one witness per staircase generator of each `I_j`.
pub fn method1_generators(span: &CodeSpan) -> Result<GeneratorReport> {
    two_dims(span, "method1_generators")?;
    forced(span, Route::Method1)
}

/// Separable generators `theta_j(y) p(x)`; needs `n | q - 1`.
pub fn method2_generators(span: &CodeSpan) -> Result<GeneratorReport> {
    two_dims(span, "method2_generators")?;
    forced(span, Route::Method2)
}
