//! JSON file formats for graphs and certificates.
//!
//! A graph file is `{"n": 4, "directed": false, "edges": [[0, 1], [1, 2]]}`.
//! A certificate file holds either `{"weights": [..]}`, one weight per
//! vertex, or `{"set": [..]}`, a list of vertex indices, plus an optional
//! free-text `recipe`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificates::{Broadcast, CertificateError};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Certificate(#[from] CertificateError),
    #[error("certificate must have exactly one of `weights` and `set`")]
    CertificateShape,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub directed: bool,
    pub edges: Vec<[usize; 2]>,
}

impl GraphFile {
    pub fn from_graph(g: &Graph) -> Self {
        GraphFile {
            n: g.order(),
            directed: g.is_directed(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        Graph::new(
            self.n,
            self.directed,
            self.edges.iter().map(|&[u, v]| (u, v)),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recipe: Option<String>,
}

/// A parsed certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Weights(Broadcast),
    Set(Vec<usize>),
}

impl Certificate {
    /// The certificate as a broadcast on `n` vertices; a set becomes its
    /// indicator.
    pub fn to_broadcast(&self, n: usize) -> Result<Broadcast, CertificateError> {
        match self {
            Certificate::Weights(f) if f.len() != n => Err(CertificateError::LengthMismatch {
                expected: n,
                found: f.len(),
            }),
            Certificate::Weights(f) => Ok(f.clone()),
            Certificate::Set(s) => Broadcast::indicator(n, s),
        }
    }

    /// The certificate as a vertex set: a set as given, or the support of a
    /// 0/1 broadcast. Heavier weights have no set reading.
    pub fn to_set(&self) -> Option<Vec<usize>> {
        match self {
            Certificate::Set(s) => Some(s.clone()),
            Certificate::Weights(f) if f.is_adjacency() => Some(f.support()),
            Certificate::Weights(_) => None,
        }
    }
}

impl CertificateFile {
    pub fn weights(f: &Broadcast) -> Self {
        CertificateFile {
            weights: Some(f.weights().to_vec()),
            ..Default::default()
        }
    }

    pub fn set(s: &[usize]) -> Self {
        CertificateFile {
            set: Some(s.to_vec()),
            ..Default::default()
        }
    }

    pub fn with_recipe(mut self, recipe: impl Into<String>) -> Self {
        self.recipe = Some(recipe.into());
        self
    }

    pub fn certificate(&self) -> Result<Certificate, IoError> {
        match (&self.weights, &self.set) {
            (Some(w), None) => Ok(Certificate::Weights(Broadcast::new(w.clone()))),
            (None, Some(s)) => Ok(Certificate::Set(s.clone())),
            _ => Err(IoError::CertificateShape),
        }
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, IoError> {
    let file: GraphFile = serde_json::from_str(text)?;
    Ok(file.to_graph()?)
}

pub fn graph_to_string(g: &Graph) -> String {
    serde_json::to_string(&GraphFile::from_graph(g)).expect("graph files always serialize")
}

pub fn parse_certificate(text: &str) -> Result<CertificateFile, IoError> {
    let file: CertificateFile = serde_json::from_str(text)?;
    file.certificate()?;
    Ok(file)
}

fn read(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })
}

pub fn write_text(path: &Path, text: &str) -> Result<(), IoError> {
    fs::write(path, text).map_err(|source| IoError::Write {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_graph(path: &Path) -> Result<Graph, IoError> {
    parse_graph(&read(path)?)
}

pub fn write_graph(path: &Path, g: &Graph) -> Result<(), IoError> {
    write_text(path, &(graph_to_string(g) + "\n"))
}

pub fn read_certificate(path: &Path) -> Result<CertificateFile, IoError> {
    parse_certificate(&read(path)?)
}

pub fn write_certificate(path: &Path, c: &CertificateFile) -> Result<(), IoError> {
    let text = serde_json::to_string(c).expect("certificate files always serialize");
    write_text(path, &(text + "\n"))
}
