//! Hardness reductions as executable constructions.
//!
//! Each builder produces a [`ReductionArtifact`]: the target graph, the exact
//! density a partition must reach, a role for every vertex, and the source
//! instance. Extractors turn a partition that meets the target back into a
//! witness for the source problem, validating it before returning.

mod dominating;
mod rx3c;
mod uncut;

use serde::{Deserialize, Serialize};

use crate::error::{DgpError, Result};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::rational::Rat;

pub use dominating::{
    ds_forward_partition, ds_parameters, extract_dominating_set, is_dominating_set,
    reduce_ds_to_bipartite, DsParameters,
};
pub use rx3c::{extract_exact_cover, reduce_rx3c_to_cubic, rx3c_forward_partition, Rx3cInstance};
pub use uncut::{
    cubic_cut_identity_check, extract_cut, local_search_cut, local_search_cut_with_moves,
    minuncut_forward_partition, reduce_minuncut_to_dense, triple_instance, CutWitness,
};

/// Which side of a `K_{3,3}` copy a vertex sits on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Side {
    L,
    R,
}

/// The four padding families that make the dominating-set image dense.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum PadSet {
    V1Up,
    V1Down,
    V2Up,
    V2Down,
}

/// What a vertex of a reduction image stands for. Indices are 0-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "role", rename_all = "snake_case")]
pub enum Role {
    /// Element vertex `v_x`.
    Type1 { element: usize },
    /// Set vertex `v^x_{xyz}`: the copy of `element` inside set `set`.
    Type2 { set: usize, element: usize },
    /// A vertex of the source graph.
    Original { vertex: usize },
    /// The primed copy `v'` of a source vertex.
    Copy { vertex: usize },
    W { i: usize, j: usize },
    X { r: usize, j: usize },
    Z,
    ZI { i: usize },
    Pad { set: PadSet, index: usize },
    K33 { copy: usize, side: Side, index: usize },
}

/// The source problem instance an artifact was built from.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Source {
    Rx3c {
        instance: Rx3cInstance,
    },
    DominatingSet {
        graph: Graph,
        k: usize,
        /// True when only the sparse intermediate graph was built.
        intermediate: bool,
    },
    MinUncut {
        graph: Graph,
        k: usize,
    },
}

impl Source {
    pub fn kind(&self) -> &'static str {
        match self {
            Source::Rx3c { .. } => "rx3c",
            Source::DominatingSet { .. } => "dominating_set",
            Source::MinUncut { .. } => "min_uncut",
        }
    }
}

/// Everything about an artifact except its graph; this is what travels in
/// the metadata sidecar next to the graph file.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ArtifactMeta {
    pub target: Rat,
    pub roles: Vec<Role>,
    pub source: Source,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReductionArtifact {
    pub graph: Graph,
    pub meta: ArtifactMeta,
}

impl ReductionArtifact {
    /// Reassembles an artifact from a graph and its sidecar, checking that
    /// they describe the same vertex set.
    pub fn from_parts(graph: Graph, meta: ArtifactMeta) -> Result<Self> {
        if meta.roles.len() != graph.n() {
            return Err(DgpError::InvalidInstance(format!(
                "metadata lists {} roles but the graph has {} vertices",
                meta.roles.len(),
                graph.n()
            )));
        }
        Ok(ReductionArtifact { graph, meta })
    }

    pub fn target(&self) -> &Rat {
        &self.meta.target
    }

    pub fn roles(&self) -> &[Role] {
        &self.meta.roles
    }

    pub fn source(&self) -> &Source {
        &self.meta.source
    }
}

/// A witness recovered from a partition of a reduction image.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "witness", rename_all = "snake_case")]
pub enum Witness {
    ExactCover { sets: Vec<usize> },
    DominatingSet { vertices: Vec<usize> },
    Cut(CutWitness),
}

/// Runs the extractor matching the artifact's source problem.
pub fn extract_witness(artifact: &ReductionArtifact, p: &Partition) -> Result<Option<Witness>> {
    Ok(match artifact.source() {
        Source::Rx3c { .. } => {
            extract_exact_cover(artifact, p)?.map(|sets| Witness::ExactCover { sets })
        }
        Source::DominatingSet { .. } => extract_dominating_set(artifact, p)?
            .map(|vertices| Witness::DominatingSet { vertices }),
        Source::MinUncut { .. } => extract_cut(artifact, p)?.map(Witness::Cut),
    })
}

fn check_partition(artifact: &ReductionArtifact, p: &Partition) -> Result<()> {
    if p.n() != artifact.graph.n() {
        return Err(DgpError::InvalidPartition(format!(
            "partition covers {} vertices but the image has {}",
            p.n(),
            artifact.graph.n()
        )));
    }
    Ok(())
}

fn wrong_kind(expected: &str, artifact: &ReductionArtifact) -> DgpError {
    DgpError::InvalidArgument(format!(
        "expected a {expected} artifact, got {}",
        artifact.source().kind()
    ))
}
