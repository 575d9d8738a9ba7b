//! JSON documents bundling an algebra, an action and optional Hopf/grading data.

use serde::{Deserialize, Serialize};

use crate::algebra::StructAlgebra;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::haction::{ExpansionTerm, Generator, HAction};
use crate::hopfzoo::{group_presentation, taft_presentation, trivial_presentation, Grading, HopfPresentation};
use crate::linalg::{Matrix, StructureTensor};

pub const SCHEMA: &str = "hpi-doc/1";

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RawField {
    #[serde(rename = "type")]
    pub kind: String,
    pub order: u32,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RawAlgebra {
    pub field: RawField,
    pub dim: usize,
    pub unit: Option<Vec<String>>,
    pub table: Vec<Vec<Vec<String>>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RawTerm {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeff: Option<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RawGenerator {
    pub label: String,
    pub matrix: Vec<Vec<String>>,
    pub expansion: Vec<RawTerm>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RawAction {
    pub generators: Vec<RawGenerator>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RawHopf {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeta: Option<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RawGrading {
    pub support: Vec<String>,
    pub components: Vec<usize>,
    pub product: Vec<Vec<Option<usize>>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RawDocument {
    pub schema: String,
    pub name: String,
    pub note: String,
    pub algebra: RawAlgebra,
    pub action: RawAction,
    pub hopf: Option<RawHopf>,
    pub grading: Option<RawGrading>,
}

/// Which acting algebra a document's generators present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfSpec {
    Taft { m: u32, zeta: Scalar },
    Trivial,
    GradingDual,
    GroupAlgebra,
}

#[derive(Clone, Debug)]
pub struct Document {
    pub name: String,
    pub note: String,
    pub action: HAction,
    pub hopf: Option<HopfSpec>,
    pub grading: Option<Grading>,
}

impl Document {
    pub fn algebra(&self) -> &StructAlgebra {
        self.action.algebra()
    }

    pub fn presentation(&self) -> Result<Option<HopfPresentation>> {
        Ok(match &self.hopf {
            None => None,
            Some(HopfSpec::Taft { m, zeta }) => Some(taft_presentation(*m, zeta)?),
            Some(HopfSpec::Trivial) => Some(trivial_presentation()),
            Some(HopfSpec::GroupAlgebra) => Some(group_presentation(&self.action)),
            Some(HopfSpec::GradingDual) => Some(
                self.grading
                    .as_ref()
                    .ok_or_else(|| Error::Schema("grading-dual document without a grading".into()))?
                    .presentation(),
            ),
        })
    }

    pub fn from_json(text: &str) -> Result<Document> {
        let raw: RawDocument = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        Document::from_raw(raw)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_raw()).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_raw(raw: RawDocument) -> Result<Document> {
        if raw.schema != SCHEMA {
            return Err(Error::Schema(format!("unsupported schema {:?}, expected {SCHEMA:?}", raw.schema)));
        }
        let algebra = parse_algebra(&raw.algebra)?;
        if let Some((i, j, k)) = algebra.associativity_failure() {
            return Err(Error::Schema(format!("multiplication is not associative on basis triple ({i}, {j}, {k})")));
        }
        let field = algebra.field();
        let n = algebra.dim();
        let generators = raw
            .action
            .generators
            .iter()
            .map(|g| {
                Ok(Generator {
                    label: g.label.clone(),
                    matrix: parse_matrix(field, n, &g.matrix, &g.label)?,
                    expansion: g
                        .expansion
                        .iter()
                        .map(|t| {
                            Ok(ExpansionTerm {
                                p: t.p.clone(),
                                q: t.q.clone(),
                                r: t.r.clone(),
                                s: t.s.clone(),
                                coeff: match &t.coeff {
                                    None => Scalar::one(),
                                    Some(c) => field.parse_scalar(c)?,
                                },
                            })
                        })
                        .collect::<Result<Vec<_>>>()?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let action = HAction::new(algebra, generators)?;
        let hopf = raw
            .hopf
            .as_ref()
            .map(|h| -> Result<HopfSpec> {
                Ok(match h.kind.as_str() {
                    "taft" => {
                        let m = h.m.ok_or_else(|| Error::Schema("taft entry needs m".into()))?;
                        let z = h.zeta.as_ref().ok_or_else(|| Error::Schema("taft entry needs zeta".into()))?;
                        HopfSpec::Taft { m, zeta: field.parse_scalar(z)? }
                    }
                    "trivial" => HopfSpec::Trivial,
                    "grading-dual" => HopfSpec::GradingDual,
                    "group-algebra" => HopfSpec::GroupAlgebra,
                    other => return Err(Error::Schema(format!("unknown hopf kind {other:?}"))),
                })
            })
            .transpose()?;
        let grading = raw.grading.as_ref().map(|g| Grading {
            support: g.support.clone(),
            components: g.components.clone(),
            product: g.product.clone(),
        });
        if let Some(g) = &grading {
            g.validate(action.algebra())?;
        }
        Ok(Document { name: raw.name, note: raw.note, action, hopf, grading })
    }

    pub fn to_raw(&self) -> RawDocument {
        let a = self.algebra();
        let n = a.dim();
        let field = match a.field() {
            FieldSpec::Rational => RawField { kind: "Q".into(), order: 1 },
            FieldSpec::Cyclotomic(m) => RawField { kind: "Q(zeta)".into(), order: m },
        };
        let table = (0..n)
            .map(|i| (0..n).map(|j| a.basis_product(i, j).iter().map(|x| x.to_string()).collect()).collect())
            .collect();
        let algebra = RawAlgebra {
            field,
            dim: n,
            unit: a.unit().map(|u| u.iter().map(|x| x.to_string()).collect()),
            table,
        };
        let generators = self
            .action
            .generators()
            .iter()
            .map(|g| RawGenerator {
                label: g.label.clone(),
                matrix: (0..n).map(|i| g.matrix.row(i).iter().map(|x| x.to_string()).collect()).collect(),
                expansion: g
                    .expansion
                    .iter()
                    .map(|t| RawTerm {
                        p: t.p.clone(),
                        q: t.q.clone(),
                        r: t.r.clone(),
                        s: t.s.clone(),
                        coeff: if t.coeff.is_one() { None } else { Some(t.coeff.to_string()) },
                    })
                    .collect(),
            })
            .collect();
        let hopf = self.hopf.as_ref().map(|h| match h {
            HopfSpec::Taft { m, zeta } => RawHopf { kind: "taft".into(), m: Some(*m), zeta: Some(zeta.to_string()) },
            HopfSpec::Trivial => RawHopf { kind: "trivial".into(), m: None, zeta: None },
            HopfSpec::GradingDual => RawHopf { kind: "grading-dual".into(), m: None, zeta: None },
            HopfSpec::GroupAlgebra => RawHopf { kind: "group-algebra".into(), m: None, zeta: None },
        });
        let grading = self.grading.as_ref().map(|g| RawGrading {
            support: g.support.clone(),
            components: g.components.clone(),
            product: g.product.clone(),
        });
        RawDocument {
            schema: SCHEMA.into(),
            name: self.name.clone(),
            note: self.note.clone(),
            algebra,
            action: RawAction { generators },
            hopf,
            grading,
        }
    }
}

fn parse_field(f: &RawField) -> Result<FieldSpec> {
    match (f.kind.as_str(), f.order) {
        ("Q", 1) => Ok(FieldSpec::Rational),
        ("Q", m) => Err(Error::Schema(format!("field Q must have order 1, found {m}"))),
        ("Q(zeta)", m) if m <= 2 => Err(Error::Schema(format!("Q(zeta) needs order at least 3 (found {m}); use Q"))),
        ("Q(zeta)", m) => Ok(FieldSpec::Cyclotomic(m)),
        (other, _) => Err(Error::Schema(format!("unknown field type {other:?}"))),
    }
}

pub fn parse_algebra(raw: &RawAlgebra) -> Result<StructAlgebra> {
    let field = parse_field(&raw.field)?;
    let n = raw.dim;
    if raw.table.len() != n || raw.table.iter().any(|r| r.len() != n || r.iter().any(|c| c.len() != n)) {
        return Err(Error::Schema(format!("table must have shape {n} x {n} x {n}")));
    }
    let data = raw
        .table
        .iter()
        .flatten()
        .flatten()
        .map(|s| field.parse_scalar(s).map_err(Error::from))
        .collect::<Result<Vec<_>>>()?;
    let table = StructureTensor::new(n, n, n, data)?;
    let unit = raw
        .unit
        .as_ref()
        .map(|u| u.iter().map(|s| field.parse_scalar(s).map_err(Error::from)).collect::<Result<Vec<_>>>())
        .transpose()?;
    StructAlgebra::new(field, n, table, unit)
}

fn parse_matrix(field: FieldSpec, n: usize, rows: &[Vec<String>], label: &str) -> Result<Matrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Schema(format!("matrix of generator {label} must be {n} x {n}")));
    }
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|s| field.parse_scalar(s).map_err(Error::from)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(parsed)
}
