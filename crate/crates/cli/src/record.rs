//! Knot records: the JSON knot file format.
//!
//! ```json
//! {"name": "trefoil", "seifert": [["1", "1"], ["0", "1"]]}
//! {"name": "figure8", "braid": {"strands": 3, "letters": [1, -2, 1, -2]}}
//! {"name": "poincare", "catalog": "poincare"}
//! {"name": "k", "seifert": [["1", "1"], ["0", "1"]], "bounding_form": [["2", "1"], ["1", "2"]]}
//! ```
//!
//! Integers may be JSON numbers or decimal strings; records are written back
//! with decimal strings. At most one of `seifert`, `braid`, `catalog` may be
//! present, and a record with none of them must carry a `bounding_form`.

use std::fmt;

use num_bigint::BigInt;
use ribbon_core::{
    catalog, seifert_matrix_from_braid, validate_seifert, BraidWord, EvenForm, IntMatrix,
    SeifertMatrix, TwoKnot,
};
use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

/// Serde adapter: decimal string out, string or JSON integer in.
pub mod decimal {
    use super::*;

    pub fn serialize<T: fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: std::str::FromStr,
        D: Deserializer<'de>,
    {
        let text = d.deserialize_any(DecimalVisitor)?;
        text.parse()
            .map_err(|_| de::Error::custom(format!("integer {text:?} is out of range")))
    }

    struct DecimalVisitor;

    impl Visitor<'_> for DecimalVisitor {
        type Value = String;

        fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("an integer or a decimal string")
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<String, E> {
            Ok(v.to_string())
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<String, E> {
            Ok(v.to_string())
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<String, E> {
            let t = v.trim();
            let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(E::custom(format!("invalid integer {v:?}")));
            }
            Ok(t.to_string())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Entry(#[serde(with = "decimal")] pub BigInt);

/// Matrix as rows of integers; shape is checked on resolution so that ragged
/// input is reported as a validation error rather than a syntax error.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MatrixData(pub Vec<Vec<Entry>>);

impl MatrixData {
    pub fn to_matrix(&self) -> CliResult<IntMatrix> {
        let rows: Vec<Vec<BigInt>> = self
            .0
            .iter()
            .map(|r| r.iter().map(|e| e.0.clone()).collect())
            .collect();
        Ok(IntMatrix::try_from_rows(&rows, None)?)
    }
}

impl From<&IntMatrix> for MatrixData {
    fn from(m: &IntMatrix) -> Self {
        MatrixData(
            m.to_rows()
                .into_iter()
                .map(|r| r.into_iter().map(Entry).collect())
                .collect(),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraidData {
    #[serde(with = "decimal")]
    pub strands: usize,
    pub letters: Vec<Letter>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(#[serde(with = "decimal")] pub i64);

impl BraidData {
    pub fn new(strands: usize, letters: &[i64]) -> Self {
        Self {
            strands,
            letters: letters.iter().copied().map(Letter).collect(),
        }
    }

    pub fn word(&self) -> CliResult<BraidWord> {
        Ok(BraidWord::new(
            self.strands,
            self.letters.iter().map(|l| l.0).collect(),
        )?)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnotRecord {
    #[serde(default)]
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seifert: Option<MatrixData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braid: Option<BraidData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub catalog: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounding_form: Option<MatrixData>,
}

/// How mu and the hypersurface homology were obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// `S + S^T` of the 1-knot Seifert matrix.
    TwoTwistSpin,
    /// A supplied even form bounding the capped hypersurface.
    BoundingForm,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::TwoTwistSpin => "two-twist-spin",
            Route::BoundingForm => "bounding-form",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedKnot {
    pub name: String,
    pub seifert: Option<SeifertMatrix>,
    pub knot: TwoKnot,
}

impl ResolvedKnot {
    pub fn route(&self) -> Route {
        match self.knot {
            TwoKnot::TwoTwistSpin(_) => Route::TwoTwistSpin,
            TwoKnot::Bounded(_) => Route::BoundingForm,
        }
    }
}

impl KnotRecord {
    pub fn catalog(name: &str) -> Self {
        Self {
            name: name.to_string(),
            catalog: Some(name.to_string()),
            ..Self::default()
        }
    }

    pub fn from_json(text: &str, context: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| CliError::json(context, &e))
    }

    /// Checks the source rule and builds the 2-knot.
    pub fn resolve(&self) -> CliResult<ResolvedKnot> {
        let sources = [
            self.seifert.is_some(),
            self.braid.is_some(),
            self.catalog.is_some(),
        ];
        let count = sources.iter().filter(|&&s| s).count();
        if count > 1 {
            return Err(CliError::Record(format!(
                "{:?} names more than one of seifert, braid, catalog",
                self.name
            )));
        }
        if count == 0 && self.bounding_form.is_none() {
            return Err(CliError::Record(format!(
                "{:?} needs one of seifert, braid, catalog, or a bounding_form",
                self.name
            )));
        }
        let mut bounding = self
            .bounding_form
            .as_ref()
            .map(MatrixData::to_matrix)
            .transpose()?;
        let seifert = if let Some(m) = &self.seifert {
            Some(validate_seifert(m.to_matrix()?)?)
        } else if let Some(b) = &self.braid {
            Some(seifert_matrix_from_braid(&b.word()?)?)
        } else if let Some(name) = &self.catalog {
            let entry = catalog(name)?;
            bounding = bounding.or(entry.bounding_form);
            Some(entry.seifert)
        } else {
            None
        };
        let knot = match (bounding, &seifert) {
            (Some(q), _) => TwoKnot::Bounded(EvenForm::new(q)?),
            (None, Some(s)) => TwoKnot::TwoTwistSpin(s.clone()),
            (None, None) => unreachable!("source rule checked above"),
        };
        Ok(ResolvedKnot {
            name: self.name.clone(),
            seifert,
            knot,
        })
    }
}
