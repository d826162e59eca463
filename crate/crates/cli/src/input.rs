//! The generator-file schema:
//!
//! ```json
//! {
//!   "dimension": 4,
//!   "field": "qsqrt5" | "rational" | "float64",
//!   "generators": [ [[entry, …], …], … ]
//! }
//! ```
//!
//! with `entry := number | "p/q" | {"a": "p/q", "b": "r/s"}`, the object form
//! meaning `a + b√5`. Exact scalars always serialize as strings, so emitted
//! files re-parse losslessly.

use orbiform::error::{Error, Result};
use orbiform::group::FiniteMatrixGroup;
use orbiform::numeric::{rat::Rat, Backend, Matrix, Scalar};
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
pub struct InputFile {
    pub dimension: usize,
    pub field: String,
    pub generators: Vec<Vec<Vec<EntryJson>>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EntryJson {
    Number(f64),
    Fraction(String),
    Sqrt5 { a: String, b: String },
}

fn parse_rat(s: &str) -> Result<Rat> {
    s.parse::<Rat>()
        .map_err(|e| Error::BadParameter(format!("bad rational '{s}': {e}")))
}

pub fn backend_from_name(name: &str) -> Result<Backend> {
    match name {
        "qsqrt5" => Ok(Backend::QSqrt5),
        "rational" => Ok(Backend::Rational),
        "float64" => Ok(Backend::Float64),
        other => Err(Error::BadParameter(format!(
            "unknown field '{other}' (expected qsqrt5, rational or float64)"
        ))),
    }
}

impl EntryJson {
    fn to_scalar(&self, backend: Backend) -> Result<Scalar> {
        match (self, backend) {
            (EntryJson::Number(x), Backend::Float64) => Ok(Scalar::Float(*x)),
            (EntryJson::Fraction(s), Backend::Rational) => {
                Ok(Scalar::Rational(parse_rat(s)?))
            }
            (EntryJson::Fraction(s), Backend::QSqrt5) => {
                Ok(Scalar::from_rat_parts(parse_rat(s)?, Rat::ZERO))
            }
            (EntryJson::Sqrt5 { a, b }, Backend::QSqrt5) => {
                Ok(Scalar::from_rat_parts(parse_rat(a)?, parse_rat(b)?))
            }
            // integral JSON numbers are accepted for exact backends
            (EntryJson::Number(x), Backend::Rational | Backend::QSqrt5)
                if x.fract() == 0.0 && x.abs() < 9e15 =>
            {
                Ok(Scalar::from_int(*x as i64, backend))
            }
            _ => Err(Error::BadParameter(
                "entry form does not match the declared field".into(),
            )),
        }
    }

    pub fn from_scalar(s: &Scalar) -> EntryJson {
        match s {
            Scalar::Float(x) => EntryJson::Number(*x),
            Scalar::Rational(r) => EntryJson::Fraction(r.to_string()),
            Scalar::Sqrt5 { a, b } => EntryJson::Sqrt5 {
                a: a.to_string(),
                b: b.to_string(),
            },
        }
    }
}

impl InputFile {
    pub fn parse_generators(&self) -> Result<Vec<Matrix>> {
        let backend = backend_from_name(&self.field)?;
        let n = self.dimension;
        if n == 0 || n > 12 {
            return Err(Error::BadParameter(
                "dimension must be between 1 and 12".into(),
            ));
        }
        if self.generators.is_empty() {
            return Err(Error::BadParameter("no generators in input".into()));
        }
        self.generators
            .iter()
            .map(|rows| {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(Error::BadParameter(format!(
                        "generator is not a {n}x{n} matrix"
                    )));
                }
                let scalar_rows = rows
                    .iter()
                    .map(|r| r.iter().map(|e| e.to_scalar(backend)).collect())
                    .collect::<Result<Vec<Vec<Scalar>>>>()?;
                Matrix::from_rows(scalar_rows)
            })
            .collect()
    }

    pub fn from_group(g: &FiniteMatrixGroup) -> InputFile {
        let field = match g.backend() {
            Backend::QSqrt5 => "qsqrt5",
            Backend::Rational => "rational",
            Backend::Float64 => "float64",
        };
        let generators = g
            .generator_matrices()
            .into_iter()
            .map(|m| {
                m.rows()
                    .map(|row| row.iter().map(EntryJson::from_scalar).collect())
                    .collect()
            })
            .collect();
        InputFile {
            dimension: g.dim(),
            field: field.to_string(),
            generators,
        }
    }
}
