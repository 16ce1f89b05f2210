//! Exact cover by 3-sets (each element in exactly three sets) to cubic
//! graphs.
//!
//! Element `x` becomes vertex `x`; set `j` becomes a triangle on vertices
//! `3q + 3j + p` for `p = 0, 1, 2`, and its `p`-th vertex is joined to the
//! `p`-th element of the set. The image is cubic with `4|X|` vertices and has
//! a partition of density `7|X|/6` iff the instance has an exact cover.

use serde::{Deserialize, Serialize};

use super::{check_partition, wrong_kind, ArtifactMeta, ReductionArtifact, Role, Source};
use crate::density::partition_density;
use crate::error::{DgpError, Result};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::rational::Rat;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Rx3cInstance {
    q: usize,
    sets: Vec<[usize; 3]>,
}

impl Rx3cInstance {
    /// Validates that elements are `0..3q`, every set has three distinct
    /// elements, and every element lies in exactly three sets. Each triple is
    /// stored sorted.
    pub fn new(q: usize, sets: Vec<[usize; 3]>) -> Result<Self> {
        if q == 0 {
            return Err(DgpError::InvalidInstance("q must be at least 1".into()));
        }
        let universe = 3 * q;
        let mut count = vec![0usize; universe];
        let mut sorted = Vec::with_capacity(sets.len());
        for (j, mut s) in sets.into_iter().enumerate() {
            s.sort_unstable();
            if s[0] == s[1] || s[1] == s[2] {
                return Err(DgpError::InvalidInstance(format!(
                    "set {j} repeats an element: {s:?}"
                )));
            }
            if s[2] >= universe {
                return Err(DgpError::InvalidInstance(format!(
                    "set {j} uses element {} outside 0..{universe}",
                    s[2]
                )));
            }
            for &x in &s {
                count[x] += 1;
            }
            sorted.push(s);
        }
        if let Some(x) = count.iter().position(|&c| c != 3) {
            return Err(DgpError::InvalidInstance(format!(
                "element {x} occurs in {} sets, expected 3",
                count[x]
            )));
        }
        Ok(Rx3cInstance { q, sets: sorted })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// `|X| = 3q`.
    pub fn universe(&self) -> usize {
        3 * self.q
    }

    pub fn sets(&self) -> &[[usize; 3]] {
        &self.sets
    }

    /// True iff `cover` names sets that hit every element exactly once.
    pub fn is_exact_cover(&self, cover: &[usize]) -> bool {
        let mut hit = vec![false; self.universe()];
        for &j in cover {
            let Some(set) = self.sets.get(j) else {
                return false;
            };
            for &x in set {
                if hit[x] {
                    return false;
                }
                hit[x] = true;
            }
        }
        hit.iter().all(|&h| h)
    }
}

fn type2(q: usize, set: usize, pos: usize) -> usize {
    3 * q + 3 * set + pos
}

/// Builds the cubic image and its target density `7|X|/6`.
pub fn reduce_rx3c_to_cubic(inst: &Rx3cInstance) -> Result<ReductionArtifact> {
    let q = inst.q;
    let n = 4 * inst.universe();
    let mut edges = Vec::with_capacity(3 * n / 2);
    let mut roles: Vec<Role> = (0..inst.universe())
        .map(|element| Role::Type1 { element })
        .collect();
    for (j, set) in inst.sets.iter().enumerate() {
        for (p, &x) in set.iter().enumerate() {
            roles.push(Role::Type2 { set: j, element: x });
            edges.push((x, type2(q, j, p)));
        }
        edges.push((type2(q, j, 0), type2(q, j, 1)));
        edges.push((type2(q, j, 0), type2(q, j, 2)));
        edges.push((type2(q, j, 1), type2(q, j, 2)));
    }
    let graph = Graph::from_edges(n, &edges)?;
    graph
        .require_cubic()
        .map_err(|e| DgpError::Internal(format!("image is not cubic: {e}")))?;
    let target = Rat::frac(7 * inst.universe() as i64, 6);
    Ok(ReductionArtifact {
        graph,
        meta: ArtifactMeta {
            target,
            roles,
            source: Source::Rx3c {
                instance: inst.clone(),
            },
        },
    })
}

fn instance_of(artifact: &ReductionArtifact) -> Result<&Rx3cInstance> {
    match artifact.source() {
        Source::Rx3c { instance } => Ok(instance),
        _ => Err(wrong_kind("rx3c", artifact)),
    }
}

/// The partition a cover induces: sets outside the cover stay triangles;
/// each set in the cover pairs its three vertices with their elements.
pub fn rx3c_forward_partition(artifact: &ReductionArtifact, cover: &[usize]) -> Result<Partition> {
    let inst = instance_of(artifact)?;
    if !inst.is_exact_cover(cover) {
        return Err(DgpError::InvalidArgument(format!(
            "sets {cover:?} are not an exact cover"
        )));
    }
    let q = inst.q;
    let mut blocks = Vec::new();
    for (j, set) in inst.sets.iter().enumerate() {
        if cover.contains(&j) {
            for (p, &x) in set.iter().enumerate() {
                blocks.push(vec![x, type2(q, j, p)]);
            }
        } else {
            blocks.push((0..3).map(|p| type2(q, j, p)).collect());
        }
    }
    Partition::new(artifact.graph.n(), blocks)
}

/// Recovers an exact cover from a partition reaching the target: the sets
/// whose three vertices do not form a block of their own.
///
/// Returns `None` below the target. A partition at the target whose sets do
/// not form an exact cover is reported as an internal error.
pub fn extract_exact_cover(
    artifact: &ReductionArtifact,
    p: &Partition,
) -> Result<Option<Vec<usize>>> {
    let inst = instance_of(artifact)?;
    check_partition(artifact, p)?;
    if partition_density(&artifact.graph, p)? < *artifact.target() {
        return Ok(None);
    }
    let q = inst.q;
    let cover: Vec<usize> = (0..inst.sets.len())
        .filter(|&j| {
            let triple: Vec<usize> = (0..3).map(|pos| type2(q, j, pos)).collect();
            p.block_containing(triple[0]) != Some(&triple[..])
        })
        .collect();
    if !inst.is_exact_cover(&cover) {
        return Err(DgpError::Internal(format!(
            "partition reaches the target but sets {cover:?} are not an exact cover"
        )));
    }
    Ok(Some(cover))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Cover {0,1,2} ∪ {3,4,5}; each element in three sets.
    pub(crate) fn yes_instance() -> Rx3cInstance {
        Rx3cInstance::new(
            2,
            vec![[0, 1, 2], [3, 4, 5], [0, 1, 3], [2, 4, 5], [0, 2, 4], [1, 3, 5]],
        )
        .unwrap()
    }

    #[test]
    fn validates_instances() {
        assert!(Rx3cInstance::new(1, vec![[0, 1, 2]; 3]).is_ok());
        assert!(Rx3cInstance::new(1, vec![[0, 1, 2]; 2]).is_err());
        assert!(Rx3cInstance::new(1, vec![[0, 1, 1], [0, 1, 2], [0, 2, 2]]).is_err());
        assert!(Rx3cInstance::new(1, vec![[0, 1, 3]; 3]).is_err());
        assert!(Rx3cInstance::new(0, vec![]).is_err());
    }

    #[test]
    fn image_shape() {
        let a = reduce_rx3c_to_cubic(&yes_instance()).unwrap();
        assert_eq!(a.graph.n(), 24);
        assert!(a.graph.is_regular(3));
        assert_eq!(a.target(), &Rat::from_integer(7));
        for x in 0..6 {
            assert!(a
                .graph
                .neighbors(x)
                .iter()
                .all(|&u| matches!(a.roles()[u], Role::Type2 { element, .. } if element == x)));
        }
    }

    #[test]
    fn forward_partition_hits_target_and_extracts() {
        let a = reduce_rx3c_to_cubic(&yes_instance()).unwrap();
        let p = rx3c_forward_partition(&a, &[0, 1]).unwrap();
        assert_eq!(partition_density(&a.graph, &p).unwrap(), Rat::from_integer(7));
        assert_eq!(extract_exact_cover(&a, &p).unwrap(), Some(vec![0, 1]));
        assert!(rx3c_forward_partition(&a, &[0, 2]).is_err());
    }

    #[test]
    fn below_target_extracts_nothing() {
        let a = reduce_rx3c_to_cubic(&yes_instance()).unwrap();
        assert_eq!(extract_exact_cover(&a, &Partition::singletons(24)).unwrap(), None);
        // Break one matched pair of the forward partition into singletons.
        let p = rx3c_forward_partition(&a, &[0, 1]).unwrap();
        let mut blocks = p.into_blocks();
        let pair = blocks.iter().position(|b| b.len() == 2).unwrap();
        let removed = blocks.remove(pair);
        blocks.extend(removed.into_iter().map(|v| vec![v]));
        let q = Partition::new(24, blocks).unwrap();
        assert_eq!(
            partition_density(&a.graph, &q).unwrap(),
            Rat::frac(7 * 4 - 2, 4)
        );
        assert_eq!(extract_exact_cover(&a, &q).unwrap(), None);
    }
}
