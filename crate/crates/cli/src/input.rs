//! Input sources, field selection and the error type mapped to exit code 2.

use std::fmt;
use std::sync::Arc;

use liebider::field::FieldTag;
use liebider::lie::json::{algebra_from_json, field_tag, module_from_json, parse_text};
use liebider::lie::{catalog, LModule, LieAlgebra, LieError};
use liebider::Field;
use serde_json::Value;

/// Bad input: unreadable file, malformed JSON, unknown name, bad flag value.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<LieError> for InputError {
    fn from(e: LieError) -> Self {
        InputError(e.to_string())
    }
}

pub type CliResult<T> = Result<T, InputError>;

pub fn input_err<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(InputError(msg.into()))
}

/// `NAME` from the catalog or `@path` to a JSON document.
#[derive(Debug, Clone)]
pub enum Source {
    Catalog(String),
    File { path: String, doc: Value },
}

impl Source {
    pub fn parse(s: &str) -> CliResult<Self> {
        match s.strip_prefix('@') {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("cannot read {path}: {e}")))?;
                let doc = parse_text(&text).map_err(|e| InputError(format!("{path}: {e}")))?;
                Ok(Source::File { path: path.to_string(), doc })
            }
            None => Ok(Source::Catalog(s.to_string())),
        }
    }

    fn file_field(&self) -> CliResult<Option<FieldTag>> {
        match self {
            Source::Catalog(_) => Ok(None),
            Source::File { path, doc } => field_tag(doc).map(Some).map_err(|e| InputError(format!("{path}: {e}"))),
        }
    }
}

/// Parses `Q` or a prime.
pub fn parse_field(s: &str) -> CliResult<FieldTag> {
    if s.eq_ignore_ascii_case("q") {
        return Ok(FieldTag::Rationals);
    }
    let p: u64 = s.parse().map_err(|_| InputError(format!("field must be Q or a prime, got `{s}`")))?;
    FieldTag::prime(p).map_err(|e| InputError(e.to_string()))
}

/// The working field: the file's tag, the `--field` flag, or Q. A flag that
/// contradicts the file is an input error.
pub fn resolve_field(flag: Option<&str>, source: Option<&Source>) -> CliResult<FieldTag> {
    let flag = flag.map(parse_field).transpose()?;
    let file = match source {
        Some(s) => s.file_field()?,
        None => None,
    };
    match (flag, file) {
        (Some(a), Some(b)) if a != b => input_err(format!("--field {a} contradicts the input's field {b}")),
        (Some(a), _) | (None, Some(a)) => Ok(a),
        (None, None) => Ok(FieldTag::Rationals),
    }
}

pub fn load_algebra<F: Field>(src: &Source) -> CliResult<LieAlgebra<F>> {
    match src {
        Source::Catalog(name) => catalog::by_name(name).ok_or_else(|| {
            InputError(format!("unknown algebra `{name}`; catalog: {}", catalog::names().join(", ")))
        }),
        Source::File { path, doc } => algebra_from_json(doc).map_err(|e| InputError(format!("{path}: {e}"))),
    }
}

pub fn load_module<F: Field>(src: &Source) -> CliResult<LModule<F>> {
    match src {
        Source::Catalog(name) => input_err(format!("modules are read from JSON files (`@file.json`), got `{name}`")),
        Source::File { path, doc } => module_from_json(doc).map_err(|e| InputError(format!("{path}: {e}"))),
    }
}

/// Exactly one of `--algebra` (adjoint module) and `--module`.
#[derive(Debug, Clone)]
pub enum Input {
    Algebra(Source),
    Module(Source),
}

impl Input {
    pub fn new(algebra: Option<&str>, module: Option<&str>) -> CliResult<Self> {
        match (algebra, module) {
            (Some(a), None) => Ok(Input::Algebra(Source::parse(a)?)),
            (None, Some(m)) => Ok(Input::Module(Source::parse(m)?)),
            (Some(_), Some(_)) => input_err("give exactly one of --algebra and --module"),
            (None, None) => input_err("an input is required: --algebra NAME|@file.json or --module @file.json"),
        }
    }

    pub fn source(&self) -> &Source {
        match self {
            Input::Algebra(s) | Input::Module(s) => s,
        }
    }

    pub fn load<F: Field>(&self) -> CliResult<LModule<F>> {
        match self {
            Input::Algebra(s) => Ok(LModule::adjoint(Arc::new(load_algebra(s)?))),
            Input::Module(s) => load_module(s),
        }
    }
}

/// Runs a generic function at the scalar type named by a [`FieldTag`].
#[macro_export]
macro_rules! with_field {
    ($tag:expr, $f:ident ( $($arg:expr),* $(,)? )) => {
        match $tag {
            liebider::field::FieldTag::Rationals => $f::<liebider::Q>($($arg),*),
            liebider::field::FieldTag::Prime(3) => $f::<liebider::Fp<3>>($($arg),*),
            liebider::field::FieldTag::Prime(5) => $f::<liebider::Fp<5>>($($arg),*),
            liebider::field::FieldTag::Prime(7) => $f::<liebider::Fp<7>>($($arg),*),
            liebider::field::FieldTag::Prime(11) => $f::<liebider::Fp<11>>($($arg),*),
            liebider::field::FieldTag::Prime(13) => $f::<liebider::Fp<13>>($($arg),*),
            liebider::field::FieldTag::Prime(p) => $crate::input::input_err(format!(
                "prime {p} is not built in; supported fields: Q, 3, 5, 7, 11, 13"
            )),
        }
    };
}
