//! Wire formats. Every integer that can grow without bound is written as a
//! decimal string.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::duality::SdReport;
use crate::error::{Error, Result};
use crate::fusion::{FusionElement, SuRep};
use crate::quantum::QClass;
use crate::schubert::{CohClass, Shape, Subset};

pub const SD_REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohTerm {
    pub subset: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohClassJson {
    /// [r, n]
    pub shape: [usize; 2],
    pub terms: Vec<CohTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QTerm {
    pub subset: Vec<usize>,
    pub q: usize,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QClassJson {
    /// [r, n]
    pub shape: [usize; 2],
    pub terms: Vec<QTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionTerm {
    pub rep: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionElementJson {
    /// [r, k]
    pub shape: [usize; 2],
    pub terms: Vec<FusionTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleJson {
    pub subsets: Vec<Vec<usize>>,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SdReportJson {
    pub schema_version: u32,
    pub r: usize,
    pub k: usize,
    pub g: usize,
    #[serde(rename = "M")]
    pub m: String,
    pub m_factorization: String,
    pub m_gw: String,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub per_tuple: Option<Vec<TupleJson>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seconds: Option<f64>,
}

fn parse_int(s: &str) -> Result<BigInt> {
    BigInt::from_str(s).map_err(|e| Error::Parse(format!("coefficient {s:?}: {e}")))
}

impl From<&CohClass> for CohClassJson {
    fn from(c: &CohClass) -> Self {
        let shape = c.shape();
        CohClassJson {
            shape: [shape.r(), shape.n()],
            terms: c
                .terms()
                .map(|(s, x)| CohTerm {
                    subset: s.as_slice().to_vec(),
                    coeff: x.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&CohClassJson> for CohClass {
    type Error = Error;

    fn try_from(j: &CohClassJson) -> Result<Self> {
        let shape = Shape::from_rn(j.shape[0], j.shape[1])?;
        let terms = j
            .terms
            .iter()
            .map(|t| Ok((Subset::from(t.subset.as_slice()), parse_int(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        CohClass::from_terms(shape, terms)
    }
}

impl From<&QClass> for QClassJson {
    fn from(c: &QClass) -> Self {
        let shape = c.shape();
        QClassJson {
            shape: [shape.r(), shape.n()],
            terms: c
                .terms()
                .map(|(s, q, x)| QTerm {
                    subset: s.as_slice().to_vec(),
                    q,
                    coeff: x.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&QClassJson> for QClass {
    type Error = Error;

    fn try_from(j: &QClassJson) -> Result<Self> {
        let shape = Shape::from_rn(j.shape[0], j.shape[1])?;
        let terms = j
            .terms
            .iter()
            .map(|t| Ok((Subset::from(t.subset.as_slice()), t.q, parse_int(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        QClass::from_terms(shape, terms)
    }
}

impl From<&FusionElement> for FusionElementJson {
    fn from(e: &FusionElement) -> Self {
        FusionElementJson {
            shape: [e.rank(), e.level()],
            terms: e
                .terms()
                .map(|(rep, x)| FusionTerm {
                    rep: rep.parts().to_vec(),
                    coeff: x.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&FusionElementJson> for FusionElement {
    type Error = Error;

    fn try_from(j: &FusionElementJson) -> Result<Self> {
        let [rank, level] = j.shape;
        let mut e = FusionElement::zero(rank, level);
        for t in &j.terms {
            let rep = SuRep::new(t.rep.clone())?;
            if rep.rank() != rank || rep.level() > level {
                return Err(Error::InvalidRep {
                    parts: t.rep.clone(),
                    rank,
                    level,
                });
            }
            e.add_term(rep, parse_int(&t.coeff)?);
        }
        Ok(e)
    }
}

impl SdReportJson {
    pub fn new(report: &SdReport, seconds: Option<f64>) -> Self {
        SdReportJson {
            schema_version: SD_REPORT_SCHEMA_VERSION,
            r: report.r,
            k: report.k,
            g: report.g,
            m: report.m_factorization.to_string(),
            m_factorization: report.m_factorization.to_string(),
            m_gw: report.m_gw.to_string(),
            agree: report.agree,
            per_tuple: report.per_tuple.as_ref().map(|rows| {
                rows.iter()
                    .map(|t| TupleJson {
                        subsets: t.tuple.iter().map(|s| s.as_slice().to_vec()).collect(),
                        value: t.value.to_string(),
                    })
                    .collect()
            }),
            seconds,
        }
    }
}

/// Header and one row of the CSV summary table.
pub const CSV_HEADER: &str = "r,k,g,M,route_agreement,seconds";

pub fn csv_row(
    r: usize,
    k: usize,
    g: usize,
    m: &BigInt,
    agree: Option<bool>,
    seconds: f64,
) -> String {
    let agree = match agree {
        Some(true) => "true",
        Some(false) => "false",
        None => "",
    };
    format!("{r},{k},{g},{m},{agree},{seconds:.3}")
}
