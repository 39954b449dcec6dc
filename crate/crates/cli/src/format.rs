//! Graph files: TOML with a header, optional rotation system and one
//! `[[edge]]` table per edge (orbit).
//!
//! ```toml
//! format_version = 1
//! d = 1
//! vertices = 2
//! rotation = [[0, 1, 3], [2, 4]]   # optional; dart 2k is the tail of edge k, 2k+1 its head
//!
//! [[edge]]
//! from = 0
//! to = 1
//! shift = [1]
//! sign = -1
//! ```

use gcx_core::graph::{Edge, Sign, SignedGraph};
use gcx_core::links::{AnnularGraph, PlaneGraph};
use gcx_core::periodic::{PeriodicEdge, PeriodicGraph};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub format_version: u32,
    /// Rank of the translation lattice; 0 for a finite graph.
    pub d: usize,
    /// Vertices (d = 0) or vertex orbits (d ≥ 1).
    pub vertices: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<Vec<Vec<usize>>>,
    /// A dart on the boundary of the unbounded face.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer: Option<usize>,
    #[serde(default, rename = "edge")]
    pub edges: Vec<EdgeRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub from: usize,
    pub to: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub shift: Vec<i64>,
    #[serde(default = "plus")]
    pub sign: i64,
}

fn plus() -> i64 {
    1
}

/// A realized graph embedded in a result record.
#[derive(Deserialize)]
struct Wrapped {
    graph: GraphFile,
}

impl GraphFile {
    /// Accepts a graph file or a result record carrying a `graph` table.
    pub fn parse(text: &str) -> Result<GraphFile, CliError> {
        let file: GraphFile = match toml::from_str::<GraphFile>(text) {
            Ok(f) => f,
            Err(e) => match toml::from_str::<toml::Table>(text) {
                Ok(t) if t.contains_key("graph") => {
                    toml::from_str::<Wrapped>(text).map_err(|e| CliError::Parse(e.to_string()))?.graph
                }
                _ => return Err(CliError::Parse(e.to_string())),
            },
        };
        file.validate()?;
        Ok(file)
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.format_version != FORMAT_VERSION {
            return Err(CliError::Parse(format!(
                "unsupported format_version {} (expected {FORMAT_VERSION})",
                self.format_version
            )));
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.vertices {
                return Err(CliError::Parse(format!("{} labels for {} vertices", labels.len(), self.vertices)));
            }
        }
        for (k, e) in self.edges.iter().enumerate() {
            if e.from >= self.vertices || e.to >= self.vertices {
                return Err(CliError::Parse(format!("edge {k}: vertex index out of range 0..{}", self.vertices)));
            }
            if e.shift.len() != self.d {
                return Err(CliError::Parse(format!("edge {k}: shift has length {}, expected d = {}", e.shift.len(), self.d)));
            }
            if e.sign != 1 && e.sign != -1 {
                return Err(CliError::Parse(format!("edge {k}: sign must be 1 or -1, found {}", e.sign)));
            }
        }
        Ok(())
    }

    fn sign(e: &EdgeRecord) -> Sign {
        if e.sign > 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn signed_graph(&self) -> Result<SignedGraph, CliError> {
        if self.d != 0 {
            return Err(CliError::Precondition(format!("expected a finite graph (d = 0), found d = {}", self.d)));
        }
        let edges = self.edges.iter().map(|e| Edge::new(e.from, e.to, Self::sign(e))).collect();
        Ok(SignedGraph::new(self.vertices, edges)?)
    }

    pub fn periodic_graph(&self) -> Result<PeriodicGraph, CliError> {
        if self.d == 0 {
            return Err(CliError::Precondition("expected a periodic graph (d >= 1), found d = 0".into()));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| PeriodicEdge::new(e.from, e.to, e.shift.clone(), Self::sign(e)))
            .collect();
        Ok(PeriodicGraph::new(self.d, self.vertices, edges)?)
    }

    fn rotation(&self) -> Result<Vec<Vec<usize>>, CliError> {
        self.rotation.clone().ok_or_else(|| CliError::Parse("a rotation system is required".into()))
    }

    pub fn plane_graph(&self) -> Result<PlaneGraph, CliError> {
        Ok(PlaneGraph::new(self.signed_graph()?, self.rotation()?, self.outer)?)
    }

    pub fn annular_graph(&self) -> Result<AnnularGraph, CliError> {
        if self.d != 1 {
            return Err(CliError::Precondition(format!("annular graphs need d = 1, found d = {}", self.d)));
        }
        // edges keep the file's order and orientation so darts match the rotation
        let graph = SignedGraph::new(
            self.vertices,
            self.edges.iter().map(|e| Edge::new(e.from, e.to, Self::sign(e))).collect(),
        )?;
        let shifts = self.edges.iter().map(|e| e.shift[0]).collect();
        Ok(AnnularGraph::new(graph, shifts, self.rotation()?)?)
    }

    pub fn from_signed(g: &SignedGraph) -> GraphFile {
        GraphFile {
            format_version: FORMAT_VERSION,
            d: 0,
            vertices: g.vertex_count(),
            labels: None,
            rotation: None,
            outer: None,
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeRecord { from: e.a, to: e.b, shift: Vec::new(), sign: e.sign.value() })
                .collect(),
        }
    }

    pub fn from_plane(g: &PlaneGraph) -> GraphFile {
        GraphFile {
            rotation: Some(g.rotation().to_vec()),
            outer: Some(g.outer_dart()),
            ..Self::from_signed(g.graph())
        }
    }

    pub fn from_periodic(g: &PeriodicGraph) -> GraphFile {
        GraphFile {
            format_version: FORMAT_VERSION,
            d: g.dim(),
            vertices: g.orbit_count(),
            labels: None,
            rotation: None,
            outer: None,
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeRecord { from: e.from, to: e.to, shift: e.shift.clone(), sign: e.sign.value() })
                .collect(),
        }
    }

    pub fn from_annular(a: &AnnularGraph) -> GraphFile {
        let g = a.graph();
        GraphFile {
            format_version: FORMAT_VERSION,
            d: 1,
            vertices: g.vertex_count(),
            labels: None,
            rotation: Some(a.rotation().to_vec()),
            outer: None,
            edges: g
                .edges()
                .iter()
                .zip(a.shifts())
                .map(|(e, &s)| EdgeRecord { from: e.a, to: e.b, shift: vec![s], sign: e.sign.value() })
                .collect(),
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("graph files serialize")
    }
}
