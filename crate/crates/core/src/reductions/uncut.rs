//! Min UnCut on cubic graphs to Max Dense Graph Partition on
//! `(n'-4)`-regular graphs.
//!
//! The image of a cubic graph `G` on `n ≡ 0 (mod 6)` vertices is the
//! complement of `G` plus `(n²-n)/6` disjoint copies of `K_{3,3}`. It has
//! `n²` vertices, and a partition of density at least
//! `n²/2 - 1 - 2k/n²` exists iff `G` has a cut leaving at most `k` edges
//! uncut.

use serde::{Deserialize, Serialize};

use super::{check_partition, wrong_kind, ArtifactMeta, ReductionArtifact, Role, Side, Source};
use crate::density::partition_density;
use crate::error::{DgpError, Result};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::rational::Rat;

/// A 2-cut `{A, B}` and the number of edges with both ends on one side.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CutWitness {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub uncut: usize,
}

impl CutWitness {
    /// Builds the witness for side `a` (the rest is `b`) and counts uncut edges.
    pub fn from_side(g: &Graph, a: &[usize]) -> Result<Self> {
        let mut in_a = vec![false; g.n()];
        for &v in a {
            if v >= g.n() {
                return Err(DgpError::VertexOutOfRange { vertex: v, n: g.n() });
            }
            in_a[v] = true;
        }
        let a: Vec<usize> = (0..g.n()).filter(|&v| in_a[v]).collect();
        let b: Vec<usize> = (0..g.n()).filter(|&v| !in_a[v]).collect();
        let uncut = g.edges().filter(|&(u, v)| in_a[u] == in_a[v]).count();
        Ok(CutWitness { a, b, uncut })
    }

    pub fn cut_size(&self, g: &Graph) -> usize {
        g.m() - self.uncut
    }
}

/// For cubic `n ≡ 2, 4 (mod 6)`, three disjoint copies with budget `3k`;
/// graphs with `n ≡ 0 (mod 6)` are returned unchanged.
pub fn triple_instance(g: &Graph, k: usize) -> Result<(Graph, usize)> {
    g.require_cubic()?;
    if g.n().is_multiple_of(6) {
        return Ok((g.clone(), k));
    }
    let tripled = g.disjoint_union(g).disjoint_union(g);
    Ok((tripled, 3 * k))
}

/// Builds the dense image and its target density.
pub fn reduce_minuncut_to_dense(g: &Graph, k: usize) -> Result<ReductionArtifact> {
    g.require_cubic()?;
    let n = g.n();
    if !n.is_multiple_of(6) {
        return Err(DgpError::InvalidInstance(format!(
            "source has {n} vertices, need a multiple of 6 (triple the instance first)"
        )));
    }
    if 2 * k > n {
        return Err(DgpError::InvalidArgument(format!(
            "budget k = {k} exceeds n/2 = {}; every cubic graph has such a cut",
            n / 2
        )));
    }
    let copies = (n * n - n) / 6;
    let mut roles: Vec<Role> = (0..n).map(|vertex| Role::Original { vertex }).collect();
    let mut union = g.clone();
    let k33 = Graph::complete_bipartite(3, 3);
    for copy in 0..copies {
        union = union.disjoint_union(&k33);
        for index in 0..6 {
            let side = if index < 3 { Side::L } else { Side::R };
            roles.push(Role::K33 { copy, side, index });
        }
    }
    let graph = union.complement();
    let nn = n * n;
    if let Err((v, d)) = graph.check_regular(nn - 4) {
        return Err(DgpError::Internal(format!(
            "image vertex {v} has degree {d}, expected {}",
            nn - 4
        )));
    }
    let nn = nn as i64;
    let target = Rat::frac(nn - 2, 2) - Rat::frac(2 * k as i64, nn);
    Ok(ReductionArtifact {
        graph,
        meta: ArtifactMeta {
            target,
            roles,
            source: Source::MinUncut {
                graph: g.clone(),
                k,
            },
        },
    })
}

fn source_of(artifact: &ReductionArtifact) -> Result<(&Graph, usize)> {
    match artifact.source() {
        Source::MinUncut { graph, k } => Ok((graph, *k)),
        _ => Err(wrong_kind("min uncut", artifact)),
    }
}

/// The 2-block partition `{A ∪ L, B ∪ R}` for source side `a`.
pub fn minuncut_forward_partition(artifact: &ReductionArtifact, a: &[usize]) -> Result<Partition> {
    let (g, _) = source_of(artifact)?;
    let cut = CutWitness::from_side(g, a)?;
    let mut in_a = vec![false; g.n()];
    for &v in &cut.a {
        in_a[v] = true;
    }
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (v, role) in artifact.roles().iter().enumerate() {
        let goes_left = match role {
            Role::Original { vertex } => in_a[*vertex],
            Role::K33 { side, .. } => *side == Side::L,
            other => {
                return Err(DgpError::Internal(format!(
                    "unexpected role {other:?} in a min uncut image"
                )))
            }
        };
        if goes_left {
            left.push(v);
        } else {
            right.push(v);
        }
    }
    let blocks = [left, right].into_iter().filter(|b| !b.is_empty()).collect();
    Partition::new(artifact.graph.n(), blocks)
}

/// Recovers a cut with at most `k` uncut edges from a partition reaching the
/// target, by restricting its two blocks to the source vertices.
pub fn extract_cut(artifact: &ReductionArtifact, p: &Partition) -> Result<Option<CutWitness>> {
    let (g, k) = source_of(artifact)?;
    check_partition(artifact, p)?;
    if partition_density(&artifact.graph, p)? < *artifact.target() {
        return Ok(None);
    }
    if p.len() != 2 {
        return Err(DgpError::Internal(format!(
            "partition reaches the target with {} blocks, expected 2",
            p.len()
        )));
    }
    let a: Vec<usize> = p.blocks()[0]
        .iter()
        .filter_map(|&v| match artifact.roles()[v] {
            Role::Original { vertex } => Some(vertex),
            _ => None,
        })
        .collect();
    let cut = CutWitness::from_side(g, &a)?;
    if cut.uncut > k {
        return Err(DgpError::Internal(format!(
            "partition reaches the target but leaves {} edges uncut, budget {k}",
            cut.uncut
        )));
    }
    Ok(Some(cut))
}

/// Local search from the split `{ids < n/2, rest}`: while some vertex has
/// two or more neighbors on its own side, move the lowest such vertex.
pub fn local_search_cut(g: &Graph) -> Result<CutWitness> {
    local_search_cut_with_moves(g).map(|(w, _)| w)
}

/// [`local_search_cut`] together with the number of moves made.
pub fn local_search_cut_with_moves(g: &Graph) -> Result<(CutWitness, usize)> {
    g.require_cubic()?;
    let n = g.n();
    let mut in_a: Vec<bool> = (0..n).map(|v| v < n / 2).collect();
    let same = |in_a: &[bool], v: usize| {
        g.neighbors(v)
            .iter()
            .filter(|&&u| in_a[u] == in_a[v])
            .count()
    };
    let mut moves = 0;
    while let Some(v) = (0..n).find(|&v| same(&in_a, v) >= 2) {
        in_a[v] = !in_a[v];
        moves += 1;
    }
    let a: Vec<usize> = (0..n).filter(|&v| in_a[v]).collect();
    Ok((CutWitness::from_side(g, &a)?, moves))
}

/// Checks `3|A| + 2|E(B)| = 3|B| + 2|E(A)|`, which every cut of a cubic
/// graph satisfies. False if `w` is not a partition of `g`'s vertices.
pub fn cubic_cut_identity_check(g: &Graph, w: &CutWitness) -> bool {
    let mut seen = vec![0u8; g.n()];
    for &v in w.a.iter().chain(&w.b) {
        if v >= g.n() {
            return false;
        }
        seen[v] += 1;
    }
    if seen.iter().any(|&s| s != 1) {
        return false;
    }
    let ea = g.induced_edge_count(&w.a);
    let eb = g.induced_edge_count(&w.b);
    3 * w.a.len() + 2 * eb == 3 * w.b.len() + 2 * ea
}
