//! Closed-form certificate builders: grid adjacency resolving sets from
//! block recipes, weight placements on complete out-trees, and the rewrite
//! of a resolving broadcast on an out-tree into a 0/1 broadcast.

pub mod blocks;
pub mod kary;
pub mod transform;

use serde::Serialize;
use thiserror::Error;

use self::blocks::{grid2_blocks, grid2_recipe, grid3_blocks, grid3_recipe, recipe_label};

pub use self::kary::{kary_adim_formula, kary_tree_certificate};
pub use self::transform::{
    crucial_vertices, tree_broadcast_to_adjacency, TransformError, TransformOutcome,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{0}")]
    InvalidParameters(String),
}

/// A certificate vertex set and the recipe that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Construction {
    pub set: Vec<usize>,
    pub recipe: String,
}

/// Adjacency resolving set of `P_2 □ P_n` with `ceil((3n - 1) / 4)` vertices.
pub fn grid2_certificate(n: usize) -> Result<Construction, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::InvalidParameters(format!(
            "grid2 certificate needs at least 2 columns, got {n}"
        )));
    }
    let recipe = grid2_recipe(n);
    let pattern = grid2_blocks().assemble(&recipe);
    Ok(Construction {
        set: pattern.vertex_set(),
        recipe: recipe_label(&recipe),
    })
}

/// Adjacency resolving set of `P_3 □ P_n` with `n + 1` vertices when
/// `n ≡ 1 (mod 3)` and `n` otherwise.
pub fn grid3_certificate(n: usize) -> Result<Construction, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::InvalidParameters(format!(
            "grid3 certificate needs at least 2 columns, got {n}"
        )));
    }
    let recipe = grid3_recipe(n);
    let pattern = grid3_blocks().assemble(&recipe);
    Ok(Construction {
        set: pattern.vertex_set(),
        recipe: recipe_label(&recipe),
    })
}
