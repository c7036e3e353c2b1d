//! Pipelines that start from level data instead of a code: the ideals `I_j`
//! with chosen witnesses for peeling, or the codes `C_j` for the idempotent
//! split.

use crate::cyclic::{canonical_generators, codes_equal, CodeSpan};
use crate::error::{Error, Result};
use crate::multidim::{
    divides_q_minus_one, idempotents, is_separable, level_ideals, Certification, Generator, GeneratorReport,
    LevelRecord, Method, ProductForm, Step,
};
use crate::poly::{MultiPoly, QuotPoly};
use crate::ring::Ring;

/// Generators `theta_j(y) p(x)` from the level codes `C_0, .., C_{n-1}`, each
/// given by any generator list over length `m`.
///
/// With `certify`, evaluating the output at `y = zeta^j` must give back `C_j`
/// for every `j`; that identifies the generated code completely.
pub fn method2_from_levels(ring: &Ring, m: usize, n: usize, levels: &[Vec<QuotPoly>], certify: bool) -> Result<GeneratorReport> {
    if !divides_q_minus_one(ring, n) {
        return Err(Error::OrderNotCompatible { n, q_minus_one: ring.q() - 1 });
    }
    if levels.len() != n {
        return Err(Error::InvalidLevelInput(format!("{} level codes given for n = {n}", levels.len())));
    }
    let fam = idempotents(ring, n)?;
    let dims = vec![m, n];
    let mut spans = Vec::with_capacity(n);
    let mut records = Vec::with_capacity(n);
    let mut generators = Vec::new();
    for (j, level) in levels.iter().enumerate() {
        let polys: Vec<MultiPoly> = level
            .iter()
            .map(|p| QuotPoly::new(p.poly(), m).to_multi())
            .collect();
        let span = CodeSpan::from_generators(ring, &[m], &polys)?;
        let set = canonical_generators(&span)?;
        let theta = fam.theta(j);
        let lifted = MultiPoly::from_univariate(theta, &dims, 1)?;
        let path = vec![Step::Split { var: 1, j }];
        for (i, e) in set.entries().iter().enumerate() {
            let core = e.generator(m).to_multi();
            let poly = core.extend_last(n).mul(&lifted)?;
            generators.push(Generator {
                separable: is_separable(&poly),
                poly,
                form: ProductForm { core_vars: vec![0], core, factors: vec![(1, theta.clone())] },
                origin: path.clone(),
                leaf_index: i,
            });
        }
        records.push(LevelRecord { path, set });
        spans.push(span);
    }
    let certification = if certify {
        let mut bad = Vec::new();
        for (j, span) in spans.iter().enumerate() {
            let z = fam.zeta_pow(j);
            let images = generators.iter().map(|g| g.poly.evaluate_last(z)).collect::<Result<Vec<_>>>()?;
            if !codes_equal(&CodeSpan::from_generators(ring, &[m], &images)?, span)? {
                bad.push(format!("C_{j}"));
            }
        }
        if bad.is_empty() {
            Certification::Certified
        } else {
            Certification::Failed(format!("evaluation images differ at {}", bad.join(", ")))
        }
    } else {
        Certification::Uncertified("level check not requested".into())
    };
    Ok(GeneratorReport {
        method: Method::Method2,
        dims,
        order: vec![0, 1],
        generators,
        levels: records,
        certification,
        notes: Vec::new(),
    })
}

/// Uses the supplied codewords `P` as generators, level `j` holding those of
/// `y`-degree `n - 1 - j`.
///
/// Each `P` needs a nonzero top coefficient and every lower coefficient inside
/// the ideal spanned by its level's tops. The level ideal of a code is the span
/// of all tops of that degree, so the tops alone need not account for it; with
/// `certify` the actual `I_j` of the generated code is compared with the span
/// of the supplied tops.
pub fn method1_from_levels(ring: &Ring, m: usize, n: usize, levels: &[Vec<MultiPoly>], certify: bool) -> Result<GeneratorReport> {
    if levels.len() != n {
        return Err(Error::InvalidLevelInput(format!("{} levels given for n = {n}", levels.len())));
    }
    let dims = vec![m, n];
    let mut generators = Vec::new();
    let mut records = Vec::with_capacity(n);
    let mut supplied = Vec::with_capacity(n);
    let mut notes = Vec::new();
    for (j, level) in levels.iter().enumerate() {
        let d = n - 1 - j;
        let mut tops = Vec::with_capacity(level.len());
        for p in level {
            if p.dims() != dims.as_slice() {
                return Err(Error::ShapeMismatch(format!("level {j} entry dims {:?}, expected {dims:?}", p.dims())));
            }
            if p.last_degree() != Some(d) {
                return Err(Error::InvalidLevelInput(format!("level {j} entry {p} must have y-degree exactly {d}")));
            }
            tops.push(p.slice_last(d));
        }
        let ideal = CodeSpan::from_generators(ring, &[m], &tops)?;
        for p in level {
            for e in 0..d {
                let c = p.slice_last(e);
                if !ideal.contains(&c)? {
                    return Err(Error::InvalidLevelInput(format!(
                        "level {j} entry {p}: coefficient of y^{e} is not in I_{j}"
                    )));
                }
            }
        }
        let set = canonical_generators(&ideal)?;
        let canonical: Vec<MultiPoly> = set.generator_polys();
        if canonical != tops {
            notes.push(format!("I_{j}: supplied tops differ from the staircase generators"));
        }
        let path = vec![Step::Peel { var: 1, j }];
        for (i, p) in level.iter().enumerate() {
            generators.push(Generator {
                separable: is_separable(p),
                poly: p.clone(),
                form: ProductForm { core_vars: vec![0, 1], core: p.clone(), factors: Vec::new() },
                origin: path.clone(),
                leaf_index: i,
            });
        }
        records.push(LevelRecord { path, set });
        supplied.push(ideal);
    }
    let certification = if certify {
        let polys: Vec<MultiPoly> = generators.iter().map(|g| g.poly.clone()).collect();
        let code = CodeSpan::from_generators(ring, &dims, &polys)?;
        let actual = level_ideals(&code)?;
        let mut bad = Vec::new();
        for (j, (a, s)) in actual.iter().zip(&supplied).enumerate() {
            if !codes_equal(a, s)? {
                let canon = canonical_generators(a)?;
                let shown: Vec<String> = canon.generator_polys().iter().map(|p| p.to_string()).collect();
                bad.push(format!("I_{j} of the generated code is <{}>", shown.join(", ")));
            }
        }
        if bad.is_empty() {
            Certification::Certified
        } else {
            Certification::Failed(bad.join("; "))
        }
    } else {
        Certification::Uncertified("level check not requested".into())
    };
    Ok(GeneratorReport {
        method: Method::Method1,
        dims,
        order: vec![0, 1],
        generators,
        levels: records,
        certification,
        notes,
    })
}
