//! Report documents and error classification.

use std::fmt;
use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use zpr_codes::{Error, Poly, PolyMatrix, RingSpec};

use crate::matrix_file;

/// A parsed input file together with its digest.
pub struct Input {
    pub path: PathBuf,
    pub sha256: String,
    pub matrix: PolyMatrix,
}

impl Input {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let bytes = std::fs::read(path).map_err(|e| CliError::Io(path.to_path_buf(), e.to_string()))?;
        let text = String::from_utf8(bytes.clone())
            .map_err(|_| CliError::Io(path.to_path_buf(), "file is not valid UTF-8".into()))?;
        let matrix = matrix_file::parse(&text).map_err(CliError::Lib)?;
        Ok(Self {
            path: path.to_path_buf(),
            sha256: hex::encode(Sha256::digest(&bytes)),
            matrix,
        })
    }

    fn to_json(&self) -> Value {
        json!({
            "path": self.path.display().to_string(),
            "sha256": self.sha256,
            "ring": ring_json(self.matrix.ring()),
            "k": self.matrix.rows(),
            "n": self.matrix.cols(),
            "rows": matrix_json(&self.matrix),
        })
    }
}

pub struct Report {
    pub command: &'static str,
    pub args: Value,
    pub input: Input,
    pub results: Value,
    pub warnings: Vec<Value>,
    /// Human-readable body printed after the input summary.
    pub text: String,
}

impl Report {
    pub fn to_json(&self) -> String {
        let doc = json!({
            "command": self.command,
            "args": self.args,
            "input": self.input.to_json(),
            "results": self.results,
            "warnings": self.warnings,
        });
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let m = &self.input.matrix;
        let ring = m.ring();
        let mut out = format!(
            "{}: {} ({}x{} over Z_{})\n",
            self.command,
            self.input.path.display(),
            m.rows(),
            m.cols(),
            ring.modulus()
        );
        out.push_str(&indent_matrix(m));
        out.push_str(&self.text);
        for w in &self.warnings {
            out.push_str(&format!("warning [{}]: {}\n", w["code"].as_str().unwrap_or(""), w["message"].as_str().unwrap_or("")));
        }
        out
    }
}

pub fn warning(code: &str, message: String) -> Value {
    json!({ "code": code, "message": message })
}

pub fn ring_json(ring: RingSpec) -> Value {
    json!({ "p": ring.p(), "r": ring.r(), "modulus": ring.modulus() })
}

pub fn poly_json(p: &Poly) -> Value {
    Value::String(p.to_string())
}

/// Rows of polynomial strings.
pub fn matrix_json(m: &PolyMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(poly_json).collect()))
            .collect(),
    )
}

pub fn indent_matrix(m: &PolyMatrix) -> String {
    m.to_rows()
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(Poly::to_string).collect();
            format!("  [{}]\n", cells.join(", "))
        })
        .collect()
}

pub fn object(pairs: Vec<(&str, Value)>) -> Value {
    Value::Object(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<Map<_, _>>())
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(PathBuf, String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Io(path, msg) => write!(f, "{}: {msg}", path.display()),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    /// 2 for input problems, 1 for analysis failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(..) | CliError::Lib(Error::Parse { .. }) => 2,
            CliError::Lib(_) => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "Usage",
            CliError::Io(..) => "Io",
            CliError::Lib(e) => error_kind(e),
        }
    }

    pub fn to_json(&self, command: &str) -> String {
        let mut error = Map::new();
        error.insert("kind".into(), json!(self.kind()));
        error.insert("message".into(), json!(self.to_string()));
        if let CliError::Lib(Error::Parse { line, column, .. }) = self {
            error.insert("line".into(), json!(line));
            error.insert("column".into(), json!(column));
        }
        let doc = json!({
            "command": command,
            "error": error,
            "exit_code": self.exit_code(),
        });
        serde_json::to_string_pretty(&doc).expect("error serializes")
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::NotPrime(_) => "NotPrime",
        Error::InvalidExponent => "InvalidExponent",
        Error::ModulusTooLarge { .. } => "ModulusTooLarge",
        Error::RingMismatch { .. } => "RingMismatch",
        Error::NotAField(_) => "NotAField",
        Error::NotAUnit { .. } => "NotAUnit",
        Error::BothZero => "BothZero",
        Error::ConstantTermNotUnit => "ConstantTermNotUnit",
        Error::NonUnitLeadingCoefficient => "NonUnitLeadingCoefficient",
        Error::DimensionMismatch(_) => "DimensionMismatch",
        Error::NotSquare { .. } => "NotSquare",
        Error::DeterminantTooLarge(_) => "DeterminantTooLarge",
        Error::SizeTooLarge { .. } => "SizeTooLarge",
        Error::NotLeftZeroPrime => "NotLeftZeroPrime",
        Error::RankDeficient { .. } => "RankDeficient",
        Error::SearchTooLarge { .. } => "SearchTooLarge",
        Error::NotFullRowRank { .. } => "NotFullRowRank",
        Error::Catastrophic => "Catastrophic",
        Error::NotCatastrophic => "NotCatastrophic",
        Error::UnsupportedShape(_) => "UnsupportedShape",
        Error::NonUnitConstantGcd => "NonUnitConstantGcd",
        Error::PrimeMismatch { .. } => "PrimeMismatch",
        Error::Parse { .. } => "Parse",
    }
}
