use std::fmt::Write;

use mdcodes::cyclic::{canonical_generators, codes_equal, CodeSpan};
use mdcodes::multidim::{
    evaluation_image, idempotents, level_ideals, method1_from_levels, method2_from_levels, nd_generators, Certification,
    GeneratorReport,
};
use mdcodes::oracle::{enumerate_span, literal_cj, literal_ij, EnumeratedCode};
use mdcodes::ring::{find_primitive_root, has_order, hensel_lift_root};
use mdcodes::text::{parse_levels, parse_list, parse_poly, ParseError};
use mdcodes::{ChainRing, Error, MultiPoly, NdOptions, Ring};
use serde_json::{json, Value};

use crate::config::{load_text, Format, JobConfig, MethodChoice};
use crate::error::{CliError, EXIT_OK, EXIT_VERIFY_FAILED};
use crate::render::{entries_json, generate_json, generate_text, theta_factored, univariate_in};

/// What a command prints, in both formats, and its exit status.
#[derive(Clone, Debug)]
pub struct CommandOutput {
    pub text: String,
    pub json: Value,
    pub exit: i32,
}

impl CommandOutput {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&self.json).expect("json")),
        }
    }
}

pub fn parse_ring(text: &str) -> Result<Ring, CliError> {
    ChainRing::parse(text).map_err(|e| CliError::from(e).context("--ring"))
}

fn parse_error(what: &str, e: ParseError) -> CliError {
    CliError::from(Error::Parse(e)).context(what)
}

fn generators(ring: &Ring, config: &JobConfig) -> Result<Vec<MultiPoly>, CliError> {
    let text = load_text(&config.generators)?;
    parse_list(ring, &config.dims, &text).map_err(|e| parse_error("--gens", e))
}

fn dims_line(dims: &[usize]) -> String {
    dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ")
}

/// Staircase generators of a univariate code.
pub fn cmd_canonical(config: &JobConfig) -> Result<CommandOutput, CliError> {
    config.validate()?;
    if config.dims.len() != 1 {
        return Err(CliError::precondition("canonical takes a single length in --dims"));
    }
    let ring = parse_ring(&config.ring)?;
    let gens = generators(&ring, config)?;
    let span = CodeSpan::from_generators(&ring, &config.dims, &gens)?;
    let set = canonical_generators(&span)?;
    let staircase = set.check_staircase();
    let certified = if config.verify { Some(codes_equal(&set.to_span(), &span)?) } else { None };

    let mut text = String::new();
    writeln!(text, "ring: {}", ring.spec()).unwrap();
    writeln!(text, "length: {}", config.dims[0]).unwrap();
    writeln!(text, "{set}").unwrap();
    if set.is_empty() {
        writeln!(text, "note: the zero code has an empty generator set").unwrap();
    } else {
        let is: Vec<String> = set.entries().iter().map(|e| e.gamma_exp.to_string()).collect();
        let ds: Vec<String> = set.entries().iter().map(|e| e.degree().to_string()).collect();
        writeln!(text, "staircase: i = ({}), deg q = ({})", is.join(", "), ds.join(", ")).unwrap();
    }
    match &staircase {
        Ok(()) => writeln!(text, "staircase check: ok").unwrap(),
        Err(why) => writeln!(text, "staircase check: FAILED ({why})").unwrap(),
    }
    writeln!(text, "size: {}", span.cardinality()).unwrap();
    match certified {
        Some(true) => writeln!(text, "certification: certified").unwrap(),
        Some(false) => writeln!(text, "certification: FAILED").unwrap(),
        None => {}
    }
    let json = json!({
        "ring": ring.spec().to_string(),
        "dims": config.dims,
        "entries": entries_json(&set),
        "zero_code": set.is_empty(),
        "staircase_ok": staircase.is_ok(),
        "size": span.cardinality().to_string(),
        "certified": certified,
    });
    let failed = staircase.is_err() || certified == Some(false);
    Ok(CommandOutput { text, json, exit: if failed { EXIT_VERIFY_FAILED } else { EXIT_OK } })
}

/// `auto` with level data: split when `n | q - 1`, peel otherwise.
fn levels_split(ring: &Ring, method: MethodChoice, n: usize) -> Result<bool, CliError> {
    let divides = (ring.q() - 1).is_multiple_of(n as u64);
    match method {
        MethodChoice::Method1 => Ok(false),
        MethodChoice::Method2 if !divides => Err(Error::OrderNotCompatible { n, q_minus_one: ring.q() - 1 }.into()),
        _ => Ok(divides),
    }
}

fn generate_report(ring: &Ring, config: &JobConfig) -> Result<GeneratorReport, CliError> {
    let Some(levels) = &config.levels else {
        let gens = generators(ring, config)?;
        return Ok(nd_generators(ring, &config.dims, &gens, &config.nd_options())?);
    };
    if config.dims.len() != 2 {
        return Err(CliError::precondition("--levels needs dims m,n"));
    }
    if config.transpose {
        return Err(CliError::precondition("--transpose does not apply to --levels input"));
    }
    let (m, n) = (config.dims[0], config.dims[1]);
    let text = load_text(levels)?;
    if levels_split(ring, config.method, n)? {
        let parsed = parse_levels(ring, &[m], &text).map_err(|e| parse_error("--levels", e))?;
        let codes: Vec<Vec<_>> = parsed
            .iter()
            .map(|l| l.iter().map(|p| p.to_univariate(0).expect("univariate")).collect())
            .collect();
        Ok(method2_from_levels(ring, m, n, &codes, config.verify)?)
    } else {
        let parsed = parse_levels(ring, &config.dims, &text).map_err(|e| parse_error("--levels", e))?;
        Ok(method1_from_levels(ring, m, n, &parsed, config.verify)?)
    }
}

/// Generator sets of 2D and nD codes, from generators or from level data.
pub fn cmd_generate(config: &JobConfig) -> Result<CommandOutput, CliError> {
    config.validate()?;
    if config.dims.len() < 2 {
        return Err(CliError::precondition("generate needs two or more lengths; use canonical for one"));
    }
    let ring = parse_ring(&config.ring)?;
    let report = generate_report(&ring, config)?;
    let exit = match report.certification {
        Certification::Failed(_) => EXIT_VERIFY_FAILED,
        _ => EXIT_OK,
    };
    Ok(CommandOutput {
        text: generate_text(&ring, &report),
        json: serde_json::to_value(generate_json(&ring, &report)).expect("json"),
        exit,
    })
}

struct Check {
    name: String,
    outcome: Result<(), String>,
}

fn check_sets(name: String, lhs: &std::collections::HashSet<mdcodes::oracle::Word>, rhs: &std::collections::HashSet<mdcodes::oracle::Word>) -> Check {
    let outcome = if lhs == rhs { Ok(()) } else { Err(format!("{} words against {}", lhs.len(), rhs.len())) };
    Check { name, outcome }
}

fn level_checks(ring: &Ring, dims: &[usize], span: &CodeSpan, code: &EnumeratedCode, budget: usize) -> Result<(Vec<Check>, Vec<String>), CliError> {
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    let k = dims.len();
    let inner = &dims[..k - 1];
    let n = dims[k - 1];
    for (j, ideal) in level_ideals(span)?.iter().enumerate() {
        let words = enumerate_span(ring, inner, &ideal.rows(), budget)?;
        checks.push(check_sets(format!("I_{j} equals its literal definition"), words.words(), &literal_ij(code, j)));
    }
    if (ring.q() - 1).is_multiple_of(n as u64) {
        let fam = idempotents(ring, n)?;
        for j in 0..n {
            let image = evaluation_image(span, fam.zeta_pow(j))?;
            let words = enumerate_span(ring, inner, &image.rows(), budget)?;
            match literal_cj(code, fam.theta(j), budget) {
                Ok(cj) => checks.push(check_sets(format!("C_{j} equals the evaluation image"), words.words(), &cj)),
                Err(Error::BudgetExceeded { .. }) => notes.push(format!("C_{j}: literal scan skipped, beyond the budget")),
                Err(e) => return Err(e.into()),
            }
        }
    }
    Ok((checks, notes))
}

/// Oracle certificate: enumerates the code and the claimed generator set's
/// span and compares them word for word.
pub fn cmd_verify(config: &JobConfig) -> Result<CommandOutput, CliError> {
    config.validate()?;
    let ring = parse_ring(&config.ring)?;
    let dims = &config.dims;
    let gens = generators(&ring, config)?;
    let code = enumerate_span(&ring, dims, &gens, config.budget)?;
    let span = CodeSpan::from_generators(&ring, dims, &gens)?;
    let claimed = match &config.claim {
        Some(c) => {
            let text = load_text(c)?;
            parse_list(&ring, dims, &text).map_err(|e| parse_error("--claim", e))?
        }
        None if dims.len() == 1 => canonical_generators(&span)?.generator_polys(),
        None => {
            let opts = NdOptions { certify: false, ..config.nd_options() };
            nd_generators(&ring, dims, &gens, &opts)?.polys()
        }
    };
    // A claimed generator outside the code settles it without enumerating the
    // claimed span, which may be far larger than the code.
    let outside = claimed.iter().find(|g| !code.contains(g)).cloned();
    let claimed_span = CodeSpan::from_generators(&ring, dims, &claimed)?;
    let (extra, missing) = match &outside {
        Some(g) => (Some(g.clone()), span.rows().into_iter().find(|r| !claimed_span.contains(r).unwrap_or(false))),
        None => {
            let claimed_code = enumerate_span(&ring, dims, &claimed, config.budget)?;
            (None, code.min_difference(&claimed_code))
        }
    };

    let mut checks = vec![Check {
        name: "echelon size matches enumeration".into(),
        outcome: if span.cardinality().to_string() == code.len().to_string() {
            Ok(())
        } else {
            Err(format!("{} against {}", span.cardinality(), code.len()))
        },
    }];
    checks.push(Check {
        name: "claimed generators span the code".into(),
        outcome: if extra.is_none() && missing.is_none() { Ok(()) } else { Err("spans differ".into()) },
    });
    let mut notes = Vec::new();
    if config.claim.is_none() && dims.len() >= 2 {
        let (more, skipped) = level_checks(&ring, dims, &span, &code, config.budget)?;
        checks.extend(more);
        notes.extend(skipped);
    }

    let passed = checks.iter().all(|c| c.outcome.is_ok());

    let mut text = String::new();
    writeln!(text, "ring: {}", ring.spec()).unwrap();
    writeln!(text, "dims: {}", dims_line(dims)).unwrap();
    writeln!(text, "code: {} words", code.len()).unwrap();
    writeln!(text, "claimed: {} generators, {} words", claimed.len(), claimed_span.cardinality()).unwrap();
    for c in &checks {
        match &c.outcome {
            Ok(()) => writeln!(text, "check {}: ok", c.name).unwrap(),
            Err(why) => writeln!(text, "check {}: FAILED ({why})", c.name).unwrap(),
        }
    }
    if let Some(w) = &extra {
        writeln!(text, "counterexample (in the claimed span, not in the code): {w}").unwrap();
    }
    if let Some(w) = &missing {
        writeln!(text, "counterexample (in the code, not in the claimed span): {w}").unwrap();
    }
    for n in &notes {
        writeln!(text, "note: {n}").unwrap();
    }
    writeln!(text, "result: {}", if passed { "PASS" } else { "FAIL" }).unwrap();

    let json = json!({
        "ring": ring.spec().to_string(),
        "dims": dims,
        "code_words": code.len(),
        "claimed_generators": claimed.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "checks": checks.iter().map(|c| json!({"name": c.name, "ok": c.outcome.is_ok(), "detail": c.outcome.as_ref().err()})).collect::<Vec<_>>(),
        "counterexample_extra": extra.map(|w| w.to_string()),
        "counterexample_missing": missing.map(|w| w.to_string()),
        "notes": notes,
        "certified": passed,
    });
    Ok(CommandOutput { text, json, exit: if passed { EXIT_OK } else { EXIT_VERIFY_FAILED } })
}

/// Arguments of `idempotents` and `root`.
#[derive(Clone, Debug, Default)]
pub struct RootConfig {
    pub ring: String,
    pub n: usize,
    /// A residue to lift instead of the default root.
    pub residue: Option<String>,
    pub format: Format,
}

pub fn cmd_idempotents(config: &RootConfig) -> Result<CommandOutput, CliError> {
    let ring = parse_ring(&config.ring)?;
    let fam = idempotents(&ring, config.n)?;
    let mut text = String::new();
    writeln!(text, "ring: {}", ring.spec()).unwrap();
    writeln!(text, "n: {}", config.n).unwrap();
    writeln!(text, "zeta: {}", ring.format(fam.zeta())).unwrap();
    writeln!(text, "1/n: {}", ring.format(fam.scale())).unwrap();
    let mut thetas = Vec::new();
    for i in 0..config.n {
        let factored = theta_factored(&fam, i);
        let expanded = univariate_in(fam.theta(i), "y");
        writeln!(text, "theta_{i} = {factored}").unwrap();
        writeln!(text, "        = {expanded}").unwrap();
        thetas.push(json!({"index": i, "factored": factored, "expanded": expanded}));
    }
    writeln!(text, "identities: orthogonality, idempotency, sum, eigen-action and y^n - 1 = prod (y - zeta^i) hold").unwrap();
    let json = json!({
        "ring": ring.spec().to_string(),
        "n": config.n,
        "zeta": ring.format(fam.zeta()),
        "scale": ring.format(fam.scale()),
        "thetas": thetas,
        "verified": true,
    });
    Ok(CommandOutput { text, json, exit: EXIT_OK })
}

pub fn cmd_root(config: &RootConfig) -> Result<CommandOutput, CliError> {
    let ring = parse_ring(&config.ring)?;
    let n = config.n;
    if n == 0 {
        return Err(CliError::precondition("--n must be positive"));
    }
    let zeta = match &config.residue {
        Some(text) => {
            let omega = parse_poly(&ring, &[1], text).map_err(|e| parse_error("--residue", e))?.coeff(&[0]);
            hensel_lift_root(&ring, n, ring.residue(omega))?
        }
        None => find_primitive_root(&ring, n)?,
    };
    let primitive = has_order(&ring, zeta, n);
    let mut text = String::new();
    writeln!(text, "ring: {}", ring.spec()).unwrap();
    writeln!(text, "n: {n}").unwrap();
    writeln!(text, "zeta: {}", ring.format(zeta)).unwrap();
    writeln!(text, "zeta^n = {}", ring.format(ring.pow(zeta, n as u64))).unwrap();
    writeln!(text, "primitive: {}", if primitive { "yes" } else { "no" }).unwrap();
    let json = json!({
        "ring": ring.spec().to_string(),
        "n": n,
        "zeta": ring.format(zeta),
        "primitive": primitive,
    });
    Ok(CommandOutput { text, json, exit: EXIT_OK })
}
