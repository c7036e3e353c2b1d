use std::fs;

use clap::ValueEnum;
use mdcodes::multidim::{NdOptions, Route};
use mdcodes::oracle::DEFAULT_BUDGET;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum MethodChoice {
    #[default]
    Auto,
    Method1,
    Method2,
}

impl From<MethodChoice> for Route {
    fn from(m: MethodChoice) -> Route {
        match m {
            MethodChoice::Auto => Route::Auto,
            MethodChoice::Method1 => Route::Method1,
            MethodChoice::Method2 => Route::Method2,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// One job: a ring, the code's dims and its generators, plus routing flags.
#[derive(Clone, Debug)]
pub struct JobConfig {
    pub ring: String,
    pub dims: Vec<usize>,
    /// Generator list text: comma or newline separated polynomials.
    pub generators: String,
    /// Level data (`;` or newline between levels) instead of generators.
    pub levels: Option<String>,
    /// For `verify`: the generator set to check against the code.
    pub claim: Option<String>,
    pub method: MethodChoice,
    pub transpose: bool,
    pub verify: bool,
    /// Oracle budget in enumerated words.
    pub budget: usize,
    pub span_budget: usize,
    pub format: Format,
}

impl Default for JobConfig {
    fn default() -> Self {
        JobConfig {
            ring: String::new(),
            dims: Vec::new(),
            generators: String::new(),
            levels: None,
            claim: None,
            method: MethodChoice::Auto,
            transpose: false,
            verify: false,
            budget: DEFAULT_BUDGET,
            span_budget: 4096,
            format: Format::Text,
        }
    }
}

impl JobConfig {
    pub fn new(ring: &str, dims: &[usize], generators: &str) -> Self {
        JobConfig { ring: ring.into(), dims: dims.to_vec(), generators: generators.into(), ..Default::default() }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.dims.is_empty() {
            return Err(CliError::precondition("--dims must list at least one length"));
        }
        if self.dims.contains(&0) {
            return Err(CliError::precondition("every length in --dims must be positive"));
        }
        Ok(())
    }

    pub fn nd_options(&self) -> NdOptions {
        NdOptions {
            method: self.method.into(),
            transpose: self.transpose,
            certify: self.verify,
            span_budget: self.span_budget,
        }
    }
}

/// `@path` reads the file, anything else is taken literally.
pub fn load_text(arg: &str) -> Result<String, CliError> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| CliError::parse(format!("{path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}
