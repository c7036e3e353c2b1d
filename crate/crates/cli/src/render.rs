//! Text and JSON views of the library's reports.

use std::fmt::Write;

use mdcodes::multidim::{describe_path, Generator, GeneratorReport, IdempotentFamily, LevelRecord};
use mdcodes::poly::var_names;
use mdcodes::{CanonicalGenSet, QuotPoly, Ring};
use serde::Serialize;

#[derive(Serialize)]
pub struct EntryJson {
    pub gamma_exp: u32,
    pub q: String,
    pub generator: String,
}

#[derive(Serialize)]
pub struct FactorJson {
    pub var: String,
    pub poly: String,
}

#[derive(Serialize)]
pub struct FormJson {
    pub core_vars: Vec<String>,
    pub core: String,
    pub factors: Vec<FactorJson>,
}

#[derive(Serialize)]
pub struct GeneratorJson {
    pub poly: String,
    pub origin: String,
    pub separable: bool,
    pub form: FormJson,
}

#[derive(Serialize)]
pub struct LevelJson {
    pub path: String,
    pub entries: Vec<EntryJson>,
}

#[derive(Serialize)]
pub struct GenerateJson {
    pub ring: String,
    pub dims: Vec<usize>,
    pub method: String,
    pub generators: Vec<GeneratorJson>,
    pub levels: Vec<LevelJson>,
    pub certified: bool,
    pub certification: String,
    pub notes: Vec<String>,
}

pub fn entries_json(set: &CanonicalGenSet) -> Vec<EntryJson> {
    set.entries()
        .iter()
        .map(|e| EntryJson {
            gamma_exp: e.gamma_exp,
            q: e.q.to_string(),
            generator: e.generator(set.length()).to_string(),
        })
        .collect()
}

/// `theta(x_var)` printed with that variable's name.
pub fn univariate_in(f: &QuotPoly, name: &str) -> String {
    f.to_multi().format_with(&[name])
}

fn origin(g: &Generator, k: usize) -> String {
    format!("{} / p_{}", describe_path(&g.origin, k), g.leaf_index)
}

fn form_json(g: &Generator, k: usize) -> FormJson {
    let names = var_names(k);
    let core_names: Vec<&str> = g.form.core_vars.iter().map(|&v| names[v].as_str()).collect();
    FormJson {
        core_vars: core_names.iter().map(|s| s.to_string()).collect(),
        core: g.form.core.format_with(&core_names),
        factors: g
            .form
            .factors
            .iter()
            .map(|(v, f)| FactorJson { var: names[*v].clone(), poly: univariate_in(f, &names[*v]) })
            .collect(),
    }
}

fn level_json(l: &LevelRecord, k: usize) -> LevelJson {
    LevelJson { path: describe_path(&l.path, k), entries: entries_json(&l.set) }
}

pub fn generate_json(ring: &Ring, report: &GeneratorReport) -> GenerateJson {
    let k = report.dims.len();
    GenerateJson {
        ring: ring.spec().to_string(),
        dims: report.dims.clone(),
        method: report.method.to_string(),
        generators: report
            .generators
            .iter()
            .map(|g| GeneratorJson {
                poly: g.poly.to_string(),
                origin: origin(g, k),
                separable: g.separable,
                form: form_json(g, k),
            })
            .collect(),
        levels: report.levels.iter().map(|l| level_json(l, k)).collect(),
        certified: report.certification.is_certified(),
        certification: report.certification.to_string(),
        notes: report.notes.clone(),
    }
}

fn indent(block: &str, by: &str) -> String {
    block.lines().map(|l| format!("{by}{l}\n")).collect()
}

pub fn generate_text(ring: &Ring, report: &GeneratorReport) -> String {
    let j = generate_json(ring, report);
    let mut out = String::new();
    let dims: Vec<String> = j.dims.iter().map(|d| d.to_string()).collect();
    writeln!(out, "ring: {}", j.ring).unwrap();
    writeln!(out, "dims: {}", dims.join(", ")).unwrap();
    writeln!(out, "method: {}", j.method).unwrap();
    writeln!(out, "generators ({}):", j.generators.len()).unwrap();
    if j.generators.is_empty() {
        writeln!(out, "  none (zero code)").unwrap();
    }
    for (i, g) in j.generators.iter().enumerate() {
        let sep = if g.separable { "separable" } else { "not separable" };
        writeln!(out, "  [{i}] {}", g.poly).unwrap();
        writeln!(out, "      from {}; {sep}", g.origin).unwrap();
        if !g.form.factors.is_empty() {
            let factors: Vec<String> = g.form.factors.iter().map(|f| format!("({})", f.poly)).collect();
            writeln!(out, "      = ({}) * {}", g.form.core, factors.join(" * ")).unwrap();
        }
    }
    writeln!(out, "levels:").unwrap();
    for (l, rec) in j.levels.iter().zip(&report.levels) {
        writeln!(out, "  {}:", l.path).unwrap();
        out.push_str(&indent(&rec.set.to_string(), "    "));
    }
    writeln!(out, "certification: {}", j.certification).unwrap();
    for n in &j.notes {
        writeln!(out, "note: {n}").unwrap();
    }
    out
}

/// `19*(1 + 18*y + 24*y^2 + 7*y^3)`: the scale times the geometric sum, low
/// degree first.
pub fn theta_factored(fam: &IdempotentFamily, i: usize) -> String {
    let ring = fam.ring();
    let terms: Vec<String> = fam
        .unscaled(i)
        .dense()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.0 != 0)
        .map(|(k, &c)| {
            let coeff = if ring.is_compound(c) { format!("({})", ring.format(c)) } else { ring.format(c) };
            match (k, c == ring.one()) {
                (0, _) => coeff,
                (_, true) if k == 1 => "y".to_string(),
                (_, true) => format!("y^{k}"),
                (1, false) => format!("{coeff}*y"),
                _ => format!("{coeff}*y^{k}"),
            }
        })
        .collect();
    let scale = fam.scale();
    let s = if ring.is_compound(scale) { format!("({})", ring.format(scale)) } else { ring.format(scale) };
    format!("{s}*({})", terms.join(" + "))
}
