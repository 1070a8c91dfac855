//! Reports printed by the subcommands, as text or as one-line JSON records.
//! Every number in a JSON record is a decimal string.

use std::fmt;

use num_bigint::BigInt;
use ribbon_core::{
    alinking, determinant, mod2_alinking, obstruct_ribbon_equivalent, signature, smith_normal_form,
    FiniteAbelianGroup, InducedMap, IntMatrix, TwoKnot, Verdict,
};
use serde::{Deserialize, Serialize};

use crate::error::CliResult;
use crate::record::{decimal, BraidData, KnotRecord, MatrixData, ResolvedKnot, Route};

fn factors(g: &FiniteAbelianGroup) -> Vec<String> {
    g.invariant_factors()
        .iter()
        .map(ToString::to_string)
        .collect()
}

fn group_text(factors: &[String]) -> String {
    if factors.is_empty() {
        "0".into()
    } else {
        factors
            .iter()
            .map(|d| format!("Z{d}"))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsReport {
    pub name: String,
    pub route: Route,
    #[serde(with = "decimal")]
    pub mu: u8,
    #[serde(with = "decimal")]
    pub signature: i64,
    /// Determinant of the form (`S + S^T` on the two-twist-spin route).
    #[serde(with = "decimal")]
    pub det: BigInt,
    /// Invariant factors of H1 of the hypersurface (the branched double
    /// cover on the two-twist-spin route).
    pub h1: Vec<String>,
    pub doubling: bool,
    /// `G` with `H1 = G + G`, when one exists.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub half: Option<Vec<String>>,
    pub record: KnotRecord,
}

impl InvariantsReport {
    pub fn compute(record: &KnotRecord) -> CliResult<Self> {
        let resolved = record.resolve()?;
        Self::from_resolved(record, &resolved)
    }

    pub fn from_resolved(record: &KnotRecord, k: &ResolvedKnot) -> CliResult<Self> {
        let form = k.knot.form();
        let h1 = k.knot.hypersurface_h1();
        let half = h1.is_double();
        Ok(Self {
            name: k.name.clone(),
            route: k.route(),
            mu: k.knot.mu()?.value(),
            signature: signature(&form)?,
            det: determinant(&form)?,
            h1: factors(&h1),
            doubling: half.is_some(),
            half: half.as_ref().map(factors),
            record: record.clone(),
        })
    }
}

impl fmt::Display for InvariantsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = if self.name.is_empty() {
            "(unnamed)"
        } else {
            &self.name
        };
        writeln!(f, "{name} ({})", self.route)?;
        writeln!(f, "  mu         {} mod 16", self.mu)?;
        writeln!(f, "  signature  {}", self.signature)?;
        writeln!(f, "  det        {}", self.det)?;
        writeln!(f, "  H1         {}", group_text(&self.h1))?;
        match &self.half {
            Some(half) => write!(
                f,
                "  doubling   yes, H1 = G + G with G = {}",
                group_text(half)
            ),
            None => write!(f, "  doubling   no"),
        }
    }
}

/// The data a verdict rests on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Mu {
        #[serde(with = "decimal")]
        left: u8,
        #[serde(with = "decimal")]
        right: u8,
    },
    Torsion {
        torsion: Vec<String>,
    },
    Double {
        #[serde(with = "decimal")]
        mu: u8,
        torsion: Vec<String>,
        half: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub left: String,
    pub right: String,
    pub verdict: String,
    pub obstructed: bool,
    pub tag: Option<String>,
    pub witness: Witness,
    pub explanation: String,
    pub left_record: KnotRecord,
    /// Absent when comparing against the trivial 2-knot.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_record: Option<KnotRecord>,
}

pub const TRIVIAL_NAME: &str = "trivial 2-knot";

impl VerdictReport {
    pub fn compute(left: &KnotRecord, right: Option<&KnotRecord>) -> CliResult<Self> {
        let a = left.resolve()?;
        let (b_name, b) = match right {
            Some(r) => {
                let k = r.resolve()?;
                (k.name, k.knot)
            }
            None => (TRIVIAL_NAME.to_string(), TwoKnot::trivial()),
        };
        let verdict = obstruct_ribbon_equivalent(&a.knot, &b)?;
        let witness = match &verdict {
            Verdict::ObstructedByMu { left, right } => Witness::Mu {
                left: left.value(),
                right: right.value(),
            },
            Verdict::ObstructedByTorsion { torsion } => Witness::Torsion {
                torsion: factors(torsion),
            },
            Verdict::NoObstructionFound { mu, torsion, half } => Witness::Double {
                mu: mu.value(),
                torsion: factors(torsion),
                half: factors(half),
            },
        };
        Ok(Self {
            left: a.name,
            right: b_name,
            verdict: verdict.conclusion().to_string(),
            obstructed: verdict.is_obstructed(),
            tag: verdict.theorem_tag().map(str::to_string),
            witness,
            explanation: verdict.explanation(),
            left_record: left.clone(),
            right_record: right.cloned(),
        })
    }
}

impl fmt::Display for VerdictReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} vs {}: {}", self.left, self.right, self.verdict)?;
        if let Some(tag) = &self.tag {
            writeln!(f, "  by         {tag}")?;
        }
        match &self.witness {
            Witness::Mu { left, right } => writeln!(f, "  mu         {left} vs {right}")?,
            Witness::Torsion { torsion } => writeln!(f, "  torsion    {}", group_text(torsion))?,
            Witness::Double { mu, torsion, half } => {
                writeln!(f, "  mu         {mu}")?;
                writeln!(
                    f,
                    "  torsion    {} = G + G, G = {}",
                    group_text(torsion),
                    group_text(half)
                )?;
            }
        }
        write!(f, "  {}", self.explanation)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnfReport {
    pub matrix: MatrixData,
    pub diagonal: Vec<String>,
    pub invariant_factors: Vec<String>,
    #[serde(with = "decimal")]
    pub rank: usize,
    pub d: MatrixData,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<MatrixData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<MatrixData>,
}

impl SnfReport {
    pub fn compute(m: &IntMatrix, full: bool) -> Self {
        let snf = smith_normal_form(m);
        Self {
            matrix: m.into(),
            diagonal: snf.diagonal().iter().map(ToString::to_string).collect(),
            invariant_factors: snf
                .invariant_factors()
                .iter()
                .map(ToString::to_string)
                .collect(),
            rank: snf.rank(),
            d: (&snf.d).into(),
            u: full.then(|| (&snf.u).into()),
            v: full.then(|| (&snf.v).into()),
        }
    }
}

fn matrix_text(m: &MatrixData) -> String {
    let rows: Vec<String> =
        m.0.iter()
            .map(|r| {
                format!(
                    "[{}]",
                    r.iter()
                        .map(|e| e.0.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect();
    format!("[{}]", rows.join(","))
}

impl fmt::Display for SnfReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "diag({})", self.diagonal.join(","))?;
        writeln!(
            f,
            "  invariant factors  {}",
            self.invariant_factors.join(", ")
        )?;
        write!(f, "  rank               {}", self.rank)?;
        if let (Some(u), Some(v)) = (&self.u, &self.v) {
            write!(
                f,
                "\n  D = {}\n  U = {}\n  V = {}",
                matrix_text(&self.d),
                matrix_text(u),
                matrix_text(v)
            )?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlinkReport {
    pub matrix: MatrixData,
    #[serde(with = "decimal")]
    pub v: BigInt,
    #[serde(with = "decimal")]
    pub mod2: u8,
}

impl AlinkReport {
    pub fn compute(m: IntMatrix) -> CliResult<Self> {
        let matrix = MatrixData::from(&m);
        let iota = InducedMap::new(m)?;
        Ok(Self {
            matrix,
            v: alinking(&iota)?,
            mod2: mod2_alinking(&iota)?,
        })
    }
}

impl fmt::Display for AlinkReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v = {}\nv mod 2 = {}", self.v, self.mod2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidReport {
    pub braid: BraidData,
    pub seifert: MatrixData,
    #[serde(with = "decimal")]
    pub genus: usize,
    pub invariants: InvariantsReport,
}

impl BraidReport {
    pub fn compute(strands: usize, letters: &[i64]) -> CliResult<Self> {
        let braid = BraidData::new(strands, letters);
        let record = KnotRecord {
            name: format!(
                "braid {}",
                letters
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
            braid: Some(braid.clone()),
            ..KnotRecord::default()
        };
        let resolved = record.resolve()?;
        let s = resolved
            .seifert
            .as_ref()
            .expect("braid records carry a Seifert matrix");
        Ok(Self {
            braid,
            seifert: s.matrix().into(),
            genus: s.genus(),
            invariants: InvariantsReport::from_resolved(&record, &resolved)?,
        })
    }
}

impl fmt::Display for BraidReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Seifert matrix {} (genus {})",
            matrix_text(&self.seifert),
            self.genus
        )?;
        write!(f, "{}", self.invariants)
    }
}
