use std::fmt;

use crate::cyclic::CanonicalGenSet;
use crate::error::{Error, Result};
use crate::poly::{var_names, MultiPoly, QuotPoly};

/// Which construction produced a generator set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// One variable: the staircase generators themselves.
    Canonical,
    Method1,
    Method2,
    /// Both constructions were used at different variables.
    Hybrid,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Canonical => "canonical",
            Method::Method1 => "method1",
            Method::Method2 => "method2",
            Method::Hybrid => "hybrid",
        })
    }
}

/// One step of the recursion, with `var` a zero-based index in the caller's
/// variable order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    /// Idempotent split of `var`: the level `C_j` at `x_var = zeta^j`.
    Split { var: usize, j: usize },
    /// Peeling of `var`: the level ideal `I_j` of top coefficients of
    /// `x_var`-degree `n - 1 - j`.
    Peel { var: usize, j: usize },
}

impl Step {
    pub fn describe(&self, names: &[String]) -> String {
        match *self {
            Step::Split { var, j } => format!("{}: C_{j}", names[var]),
            Step::Peel { var, j } => format!("{}: I_{j}", names[var]),
        }
    }
}

pub fn describe_path(path: &[Step], k: usize) -> String {
    let names = var_names(k);
    if path.is_empty() {
        return "code".into();
    }
    path.iter().map(|s| s.describe(&names)).collect::<Vec<_>>().join(" / ")
}

/// `core(x_{core_vars}) * prod f_v(x_v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductForm {
    /// Variables of the core, in the order of the core's own dims.
    pub core_vars: Vec<usize>,
    pub core: MultiPoly,
    pub factors: Vec<(usize, QuotPoly)>,
}

impl ProductForm {
    pub fn trivial(poly: &MultiPoly) -> Self {
        ProductForm { core_vars: (0..poly.dims().len()).collect(), core: poly.clone(), factors: Vec::new() }
    }

    /// Multiplies the form out over the full dims.
    pub fn expand(&self, dims: &[usize]) -> Result<MultiPoly> {
        let ring = self.core.ring();
        let mut full = MultiPoly::zero(ring, dims);
        let mut exps = vec![0; dims.len()];
        for (idx, &c) in self.core.coeffs().iter().enumerate() {
            if c.0 == 0 {
                continue;
            }
            let local = self.core.exponents_of(idx);
            exps.iter_mut().for_each(|e| *e = 0);
            for (&v, &e) in self.core_vars.iter().zip(&local) {
                exps[v] = e;
            }
            full.set_coeff(&exps, c);
        }
        for (v, f) in &self.factors {
            full = full.mul(&MultiPoly::from_univariate(f, dims, *v)?)?;
        }
        Ok(full)
    }
}

/// A generator with its structure.
#[derive(Clone, Debug)]
pub struct Generator {
    pub poly: MultiPoly,
    pub form: ProductForm,
    pub separable: bool,
    /// Recursion path that produced it; the last component is the index in
    /// the leaf's staircase set.
    pub origin: Vec<Step>,
    pub leaf_index: usize,
}

/// A univariate level reached by the recursion with its staircase generators.
#[derive(Clone, Debug)]
pub struct LevelRecord {
    pub path: Vec<Step>,
    pub set: CanonicalGenSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certification {
    /// Span equality (or level consistency) was checked and holds.
    Certified,
    Failed(String),
    Uncertified(String),
}

impl Certification {
    pub fn is_certified(&self) -> bool {
        matches!(self, Certification::Certified)
    }
}

impl fmt::Display for Certification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certification::Certified => f.write_str("certified"),
            Certification::Failed(why) => write!(f, "FAILED: {why}"),
            Certification::Uncertified(why) => write!(f, "uncertified ({why})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GeneratorReport {
    pub method: Method,
    pub dims: Vec<usize>,
    /// Processing order: position `i` holds the original variable handled as
    /// the `i`-th innermost one.
    pub order: Vec<usize>,
    pub generators: Vec<Generator>,
    pub levels: Vec<LevelRecord>,
    pub certification: Certification,
    pub notes: Vec<String>,
}

impl GeneratorReport {
    pub fn polys(&self) -> Vec<MultiPoly> {
        self.generators.iter().map(|g| g.poly.clone()).collect()
    }

    /// Every generator equals its product form, and its separability flag is
    /// consistent with the form when the core is univariate.
    pub fn check_forms(&self) -> Result<()> {
        for g in &self.generators {
            if g.form.expand(&self.dims)? != g.poly {
                return Err(Error::ShapeMismatch(format!("product form of {} does not expand to it", g.poly)));
            }
        }
        Ok(())
    }
}
