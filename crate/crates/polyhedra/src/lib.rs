//! Non-thin Conway polyhedra: 4-valent simple spherical maps without bigon
//! faces and without 2-edge cuts, deduplicated up to homeomorphism.

pub mod embedding;
pub mod generate;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use embedding::{from_neighbor_lists, octahedron, EmbeddingError, PlanarEmbedding};
pub use generate::polyhedra_with_vertices;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedronRecord {
    pub embedding: PlanarEmbedding,
    pub canonical_code: Vec<u8>,
    pub vertex_count: usize,
}

#[derive(Serialize, Deserialize)]
struct Wire {
    v: usize,
    rotation: Vec<[usize; 4]>,
    pairing: Vec<usize>,
    code: String,
}

#[derive(Debug, thiserror::Error)]
pub enum RecordError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("embedding: {0}")]
    Embedding(#[from] EmbeddingError),
    #[error("code: {0}")]
    Code(#[from] hex::FromHexError),
    #[error("vertex count {0} does not match the rotation table")]
    VertexCount(usize),
}

impl PolyhedronRecord {
    pub fn new(embedding: PlanarEmbedding) -> Self {
        let canonical_code = embedding.canonical_code();
        let vertex_count = embedding.vertex_count();
        Self { embedding, canonical_code, vertex_count }
    }

    pub fn to_json(&self) -> String {
        let w = Wire {
            v: self.vertex_count,
            rotation: self.embedding.rotation().to_vec(),
            pairing: self.embedding.pairing().to_vec(),
            code: hex::encode(&self.canonical_code),
        };
        serde_json::to_string(&w).expect("serializable record")
    }

    pub fn from_json(line: &str) -> Result<Self, RecordError> {
        let w: Wire = serde_json::from_str(line)?;
        if w.v != w.rotation.len() {
            return Err(RecordError::VertexCount(w.v));
        }
        Ok(Self {
            embedding: PlanarEmbedding::new(w.rotation, w.pairing)?,
            canonical_code: hex::decode(&w.code)?,
            vertex_count: w.v,
        })
    }
}

pub fn has_two_edge_cut(e: &PlanarEmbedding) -> bool {
    e.has_two_edge_cut()
}

pub fn canonical_embedding_code(e: &PlanarEmbedding) -> Vec<u8> {
    e.canonical_code()
}

pub fn faces(e: &PlanarEmbedding) -> Vec<usize> {
    e.faces()
}

/// All records with `6..=max_vertices` vertices, ordered by vertex count and code.
pub fn enumerate_polyhedra(max_vertices: usize) -> Vec<PolyhedronRecord> {
    let per_v: Vec<Vec<PolyhedronRecord>> = (6..=max_vertices)
        .into_par_iter()
        .map(|v| {
            polyhedra_with_vertices(v)
                .into_iter()
                .map(|(code, embedding)| PolyhedronRecord { embedding, canonical_code: code, vertex_count: v })
                .collect()
        })
        .collect();
    per_v.into_iter().flatten().collect()
}
