//! JSON wire types and serialization.
//!
//! Every number is written with 17 significant digits (`{:.16e}`), which
//! round-trips any 64-bit float exactly and keeps output byte-identical
//! across runs; output field order is fixed by the struct definitions,
//! and no map types appear anywhere.


use nalgebra::{DMatrix, DVector};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::ser::{Formatter, PrettyFormatter};

use crate::corpus::Instance;
use crate::geom::{AffineMap, Ellipsoid, HPolytope, Halfspace, VPolytope};
use crate::helly::HellyReport;
use crate::oracle::SubsetSearch;
use crate::select::{
    BoundaryPoint, CaratheodorySelection, CheckReport, SelectionCertificate, SimplexChoice,
};
use crate::{Error, Result};

/// `{"a": [..], "b": x}` — one halfspace `a·x <= b`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HalfspaceJson {
    pub a: Vec<f64>,
    pub b: f64,
}

/// `{"dim": d, "hrep": [..], "vrep": [..]}`; either representation may
/// be absent, and carrying both does not promise they agree.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hrep: Option<Vec<HalfspaceJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vrep: Option<Vec<Vec<f64>>>,
}

impl PolytopeJson {
    pub fn from_hpolytope(h: &HPolytope) -> Self {
        PolytopeJson {
            dim: h.dim(),
            hrep: Some(
                h.halfspaces()
                    .iter()
                    .map(|r| HalfspaceJson {
                        a: r.a().as_slice().to_vec(),
                        b: r.b(),
                    })
                    .collect(),
            ),
            vrep: None,
        }
    }

    pub fn from_vpolytope(v: &VPolytope) -> Self {
        PolytopeJson {
            dim: v.dim(),
            hrep: None,
            vrep: Some(v.points().iter().map(|p| p.as_slice().to_vec()).collect()),
        }
    }

    pub fn from_instance(inst: &Instance) -> Self {
        PolytopeJson {
            dim: inst.dim,
            hrep: inst
                .hrep
                .as_ref()
                .map(|h| Self::from_hpolytope(h).hrep.unwrap()),
            vrep: inst
                .vrep
                .as_ref()
                .map(|v| Self::from_vpolytope(v).vrep.unwrap()),
        }
    }

    pub fn to_hpolytope(&self) -> Result<HPolytope> {
        let rows = self
            .hrep
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("input carries no halfspace list".into()))?;
        let halfspaces = rows
            .iter()
            .map(|r| {
                if r.a.len() != self.dim {
                    return Err(Error::Dimension {
                        expected: self.dim,
                        got: r.a.len(),
                    });
                }
                Halfspace::from_slice(&r.a, r.b)
            })
            .collect::<Result<Vec<_>>>()?;
        HPolytope::new(self.dim, halfspaces)
    }

    pub fn to_vpolytope(&self) -> Result<VPolytope> {
        let pts = self
            .vrep
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("input carries no vertex list".into()))?;
        let points = pts
            .iter()
            .map(|p| {
                if p.len() != self.dim {
                    return Err(Error::Dimension {
                        expected: self.dim,
                        got: p.len(),
                    });
                }
                Ok(DVector::from_column_slice(p))
            })
            .collect::<Result<Vec<_>>>()?;
        VPolytope::new(self.dim, points)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SimplexChoiceJson {
    pub indices: Vec<usize>,
    pub volume: f64,
    pub mode: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundaryPointJson {
    pub y: Vec<f64>,
    pub u: Vec<f64>,
    pub used_fallback_direction: bool,
    pub gauge_value: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CaratheodoryJson {
    pub indices: Vec<usize>,
    pub weights: Vec<f64>,
    pub used_facet_fallback: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateJson {
    pub dim: usize,
    pub lambda_used: f64,
    pub lambda_measured: f64,
    pub factor: f64,
    pub simplex: SimplexChoiceJson,
    pub boundary: BoundaryPointJson,
    pub caratheodory: CaratheodoryJson,
    pub qprime_indices: Vec<usize>,
}

impl From<&SelectionCertificate> for CertificateJson {
    fn from(c: &SelectionCertificate) -> Self {
        CertificateJson {
            dim: c.dim,
            lambda_used: c.lambda_used,
            lambda_measured: c.lambda_measured,
            factor: c.factor,
            simplex: SimplexChoiceJson {
                indices: c.simplex.indices.clone(),
                volume: c.simplex.volume,
                mode: c.simplex.mode.to_string(),
            },
            boundary: BoundaryPointJson {
                y: c.boundary.y.as_slice().to_vec(),
                u: c.boundary.u.as_slice().to_vec(),
                used_fallback_direction: c.boundary.used_fallback_direction,
                gauge_value: c.boundary.gauge_value,
            },
            caratheodory: CaratheodoryJson {
                indices: c.caratheodory.indices.clone(),
                weights: c.caratheodory.weights.clone(),
                used_facet_fallback: c.caratheodory.used_facet_fallback,
            },
            qprime_indices: c.qprime_indices.clone(),
        }
    }
}

impl CertificateJson {
    pub fn to_certificate(&self) -> Result<SelectionCertificate> {
        if self.boundary.y.len() != self.dim || self.boundary.u.len() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                got: self.boundary.y.len(),
            });
        }
        Ok(SelectionCertificate {
            dim: self.dim,
            lambda_used: self.lambda_used,
            lambda_measured: self.lambda_measured,
            factor: self.factor,
            simplex: SimplexChoice {
                indices: self.simplex.indices.clone(),
                volume: self.simplex.volume,
                mode: self.simplex.mode.parse()?,
            },
            boundary: BoundaryPoint {
                y: DVector::from_column_slice(&self.boundary.y),
                u: DVector::from_column_slice(&self.boundary.u),
                used_fallback_direction: self.boundary.used_fallback_direction,
                gauge_value: self.boundary.gauge_value,
            },
            caratheodory: CaratheodorySelection {
                indices: self.caratheodory.indices.clone(),
                weights: self.caratheodory.weights.clone(),
                used_facet_fallback: self.caratheodory.used_facet_fallback,
            },
            qprime_indices: self.qprime_indices.clone(),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckOutcomeJson {
    pub check: String,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReportJson {
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
    pub checks: Vec<CheckOutcomeJson>,
}

impl From<&CheckReport> for CheckReportJson {
    fn from(r: &CheckReport) -> Self {
        CheckReportJson {
            passed: r.passed,
            first_failure: r.first_failure.map(|c| c.to_string()),
            checks: r
                .details
                .iter()
                .map(|(id, ok)| CheckOutcomeJson {
                    check: id.to_string(),
                    passed: *ok,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HellyReportJson {
    pub dim: usize,
    pub sigma: Vec<usize>,
    pub lambda_tilde: f64,
    pub diam_k: f64,
    pub diam_sigma: f64,
    pub diam_bound: f64,
    pub vol_k: f64,
    pub vol_sigma: f64,
    pub vol_bound: f64,
    pub certificate: CertificateJson,
    pub containment_transfer_ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub santalo_ok: Option<bool>,
}

impl From<&HellyReport> for HellyReportJson {
    fn from(r: &HellyReport) -> Self {
        HellyReportJson {
            dim: r.dim,
            sigma: r.sigma.clone(),
            lambda_tilde: r.lambda_tilde,
            diam_k: r.diam_k,
            diam_sigma: r.diam_sigma,
            diam_bound: r.diam_bound,
            vol_k: r.vol_k,
            vol_sigma: r.vol_sigma,
            vol_bound: r.vol_bound,
            certificate: CertificateJson::from(&r.certificate),
            containment_transfer_ok: r.containment_transfer_ok,
            santalo_ok: r.santalo_ok,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EllipsoidJson {
    pub center: Vec<f64>,
    /// Symmetric positive-definite linear part, row by row; the
    /// ellipsoid is its image of the unit ball around the center.
    pub shape: Vec<Vec<f64>>,
}

impl From<&Ellipsoid> for EllipsoidJson {
    fn from(e: &Ellipsoid) -> Self {
        EllipsoidJson {
            center: e.center().as_slice().to_vec(),
            shape: matrix_rows(e.shape()),
        }
    }
}

impl EllipsoidJson {
    pub fn to_ellipsoid(&self) -> Result<Ellipsoid> {
        Ellipsoid::new(
            DVector::from_column_slice(&self.center),
            rows_to_matrix(&self.shape)?,
        )
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AffineMapJson {
    pub linear: Vec<Vec<f64>>,
    pub shift: Vec<f64>,
}

impl From<&AffineMap> for AffineMapJson {
    fn from(m: &AffineMap) -> Self {
        AffineMapJson {
            linear: matrix_rows(m.linear()),
            shift: m.shift().as_slice().to_vec(),
        }
    }
}

impl AffineMapJson {
    pub fn to_affine_map(&self) -> Result<AffineMap> {
        AffineMap::new(
            rows_to_matrix(&self.linear)?,
            DVector::from_column_slice(&self.shift),
        )
    }
}

/// Output of the inscribed-ellipsoid subcommand.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JohnOutputJson {
    pub ellipsoid: EllipsoidJson,
    pub transform: AffineMapJson,
    pub quality: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer_radius: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubsetSearchJson {
    pub indices: Vec<usize>,
    /// Absent when no finite score exists (unbounded or degenerate
    /// subset body).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub score: Option<f64>,
    pub enumerated: u64,
}

impl From<&SubsetSearch> for SubsetSearchJson {
    fn from(s: &SubsetSearch) -> Self {
        SubsetSearchJson {
            indices: s.indices.clone(),
            score: s.score.is_finite().then_some(s.score),
            enumerated: s.enumerated as u64,
        }
    }
}

fn matrix_rows(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| m[(i, j)]).collect())
        .collect()
}

fn rows_to_matrix(rows: &[Vec<f64>]) -> Result<DMatrix<f64>> {
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidInput("matrix rows must be square".into()));
    }
    Ok(DMatrix::from_fn(n, n, |i, j| rows[i][j]))
}

/// Pretty formatter that writes every float with 17 significant digits.
struct SigDigits17<'a> {
    inner: PrettyFormatter<'a>,
}

impl Formatter for SigDigits17<'_> {
    fn write_f64<W: ?Sized + std::io::Write>(
        &mut self,
        writer: &mut W,
        value: f64,
    ) -> std::io::Result<()> {
        write!(writer, "{value:.16e}")
    }
    fn begin_array<W: ?Sized + std::io::Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        self.inner.begin_array(w)
    }
    fn end_array<W: ?Sized + std::io::Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        self.inner.end_array(w)
    }
    fn begin_array_value<W: ?Sized + std::io::Write>(
        &mut self,
        w: &mut W,
        first: bool,
    ) -> std::io::Result<()> {
        self.inner.begin_array_value(w, first)
    }
    fn end_array_value<W: ?Sized + std::io::Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        self.inner.end_array_value(w)
    }
    fn begin_object<W: ?Sized + std::io::Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        self.inner.begin_object(w)
    }
    fn end_object<W: ?Sized + std::io::Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        self.inner.end_object(w)
    }
    fn begin_object_key<W: ?Sized + std::io::Write>(
        &mut self,
        w: &mut W,
        first: bool,
    ) -> std::io::Result<()> {
        self.inner.begin_object_key(w, first)
    }
    fn begin_object_value<W: ?Sized + std::io::Write>(
        &mut self,
        w: &mut W,
    ) -> std::io::Result<()> {
        self.inner.begin_object_value(w)
    }
    fn end_object_value<W: ?Sized + std::io::Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        self.inner.end_object_value(w)
    }
}

/// Serializes to pretty JSON with exact float round-tripping and a
/// trailing newline.
pub fn to_json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(
        &mut out,
        SigDigits17 {
            inner: PrettyFormatter::new(),
        },
    );
    value
        .serialize(&mut ser)
        .map_err(|e| Error::InvalidInput(format!("serialization failed: {e}")))?;
    out.push(b'\n');
    String::from_utf8(out).map_err(|e| Error::InvalidInput(format!("non-utf8 output: {e}")))
}

/// Parses a JSON document into the given wire type.
pub fn from_json_str<T: DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::InvalidInput(format!("invalid JSON: {e}")))
}
