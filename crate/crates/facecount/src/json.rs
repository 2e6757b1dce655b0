//! JSON views of the kernel types.
//!
//! Every integer is emitted as a decimal string. The exact values in play
//! here overflow 64-bit consumers quickly, and many JSON parsers silently
//! round large numbers through a double; strings survive.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinatorics::FaceCountVector;
use crate::kernel::{IncidenceStructure, KernelError, Point, VPolytope};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("`{0}` is not a decimal integer")]
    BadInteger(String),
    #[error("denominator is zero in `{0}/{1}`")]
    ZeroDenominator(String, String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// A vertex-description polytope: each coordinate is a
/// `[numerator, denominator]` pair of decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub ambient_dim: usize,
    pub vertices: Vec<Vec<[String; 2]>>,
}

impl PolytopeJson {
    pub fn from_polytope(p: &VPolytope) -> Self {
        PolytopeJson {
            ambient_dim: p.ambient_dim(),
            vertices: p
                .vertices()
                .iter()
                .map(|v| {
                    v.coords()
                        .iter()
                        .map(|c| [c.numer().to_string(), c.denom().to_string()])
                        .collect()
                })
                .collect(),
        }
    }

    /// Rebuild the polytope, re-running every construction-time check.
    pub fn into_polytope(&self) -> Result<VPolytope, JsonError> {
        let mut points = Vec::with_capacity(self.vertices.len());
        for vertex in &self.vertices {
            let mut coords = Vec::with_capacity(vertex.len());
            for [numer, denom] in vertex {
                let n = parse_bigint(numer)?;
                let d = parse_bigint(denom)?;
                if d == BigInt::from(0) {
                    return Err(JsonError::ZeroDenominator(numer.clone(), denom.clone()));
                }
                coords.push(BigRational::new(n, d));
            }
            points.push(Point::new(coords));
        }
        Ok(VPolytope::new(self.ambient_dim, points)?)
    }
}

fn parse_bigint(text: &str) -> Result<BigInt, JsonError> {
    text.parse::<BigInt>()
        .map_err(|_| JsonError::BadInteger(text.to_string()))
}

/// Vertex–facet incidences, one bit string per facet, vertex order as in the
/// source polytope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceJson {
    pub n_vertices: usize,
    pub n_facets: usize,
    pub rows: Vec<String>,
}

impl IncidenceJson {
    pub fn from_incidence(inc: &IncidenceStructure) -> Self {
        IncidenceJson {
            n_vertices: inc.n_vertices(),
            n_facets: inc.n_facets(),
            rows: (0..inc.n_facets()).map(|j| inc.row_string(j)).collect(),
        }
    }
}

/// A face-count vector with decimal-string entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceCountJson {
    pub dim: usize,
    pub counts: Vec<String>,
    pub realized: bool,
}

impl FaceCountJson {
    pub fn from_vector(v: &FaceCountVector) -> Self {
        FaceCountJson {
            dim: v.dim(),
            counts: v.counts().iter().map(|c| c.to_string()).collect(),
            realized: v.is_realized(),
        }
    }
}

/// Everything the `dump` command emits for one construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DumpJson {
    pub spec: String,
    pub polytope: PolytopeJson,
    pub incidence: IncidenceJson,
    pub f_vector: FaceCountJson,
}

impl DumpJson {
    pub fn new(spec: &str, p: &VPolytope) -> Self {
        DumpJson {
            spec: spec.to_string(),
            polytope: PolytopeJson::from_polytope(p),
            incidence: IncidenceJson::from_incidence(&IncidenceStructure::from_polytope(p)),
            f_vector: FaceCountJson::from_vector(p.face_lattice().f_vector()),
        }
    }
}
