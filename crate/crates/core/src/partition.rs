//! Vertex partitions in canonical form.

use serde::{Deserialize, Serialize};

use crate::error::{DgpError, Result};

/// A partition of `0..n` into non-empty blocks.
///
/// Blocks are stored sorted, and ordered by their smallest vertex. Two
/// partitions of the same set are equal iff their block lists are equal,
/// and the canonical restricted-growth string ([`Partition::rgs`]) orders
/// them consistently.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawPartition", into = "RawPartition")]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<RawPartition> for Partition {
    type Error = DgpError;
    fn try_from(raw: RawPartition) -> Result<Self> {
        Partition::new(raw.n, raw.blocks)
    }
}

impl From<Partition> for RawPartition {
    fn from(p: Partition) -> Self {
        RawPartition {
            n: p.n,
            blocks: p.blocks,
        }
    }
}

impl Partition {
    /// Validates and normalizes `blocks` as a partition of `0..n`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut owner = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(DgpError::InvalidPartition(format!("block {i} is empty")));
            }
            for &v in block {
                if v >= n {
                    return Err(DgpError::InvalidPartition(format!(
                        "block {i} references vertex {v} but the graph has {n} vertices"
                    )));
                }
                if owner[v] != usize::MAX {
                    return Err(DgpError::InvalidPartition(format!(
                        "vertex {v} appears in blocks {} and {i}",
                        owner[v]
                    )));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(DgpError::InvalidPartition(format!(
                "vertex {v} is not covered by any block"
            )));
        }
        Ok(Self::normalized(n, blocks))
    }

    fn normalized(n: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Partition { n, blocks }
    }

    /// Every vertex in its own block.
    pub fn singletons(n: usize) -> Self {
        Partition {
            n,
            blocks: (0..n).map(|v| vec![v]).collect(),
        }
    }

    /// One block holding every vertex (no blocks when `n = 0`).
    pub fn whole(n: usize) -> Self {
        let blocks = if n == 0 { Vec::new() } else { vec![(0..n).collect()] };
        Partition { n, blocks }
    }

    /// Builds a partition from per-vertex labels. Labels need not be
    /// contiguous or canonical.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (v, &l) in labels.iter().enumerate() {
            let idx = *map.entry(l).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[idx].push(v);
        }
        Self::normalized(labels.len(), blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn into_blocks(self) -> Vec<Vec<usize>> {
        self.blocks
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `block_of()[v]` is the index of the block containing `v`.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                out[v] = i;
            }
        }
        out
    }

    pub fn block_containing(&self, v: usize) -> Option<&[usize]> {
        self.blocks
            .iter()
            .find(|b| b.binary_search(&v).is_ok())
            .map(Vec::as_slice)
    }

    /// Canonical restricted-growth string: vertex `v` gets the index of its
    /// block, blocks numbered by first appearance.
    pub fn rgs(&self) -> Vec<usize> {
        self.block_of()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_order() {
        let p = Partition::new(5, vec![vec![4, 2], vec![3, 0, 1]]).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 1, 3], vec![2, 4]]);
        assert_eq!(p.rgs(), vec![0, 0, 1, 0, 1]);
        assert_eq!(Partition::from_labels(&[7, 7, 3, 7, 3]), p);
    }

    #[test]
    fn rejects_invalid() {
        let err = |r: Result<Partition>| match r {
            Err(DgpError::InvalidPartition(msg)) => msg,
            other => panic!("expected invalid partition, got {other:?}"),
        };
        assert!(err(Partition::new(3, vec![vec![0, 1], vec![1, 2]])).contains("vertex 1"));
        assert!(err(Partition::new(3, vec![vec![0, 1]])).contains("vertex 2"));
        assert!(err(Partition::new(3, vec![vec![0, 1, 2, 3]])).contains("vertex 3"));
        assert!(err(Partition::new(3, vec![vec![0, 1, 2], vec![]])).contains("empty"));
    }

    #[test]
    fn serde_validates() {
        let p = Partition::new(3, vec![vec![2], vec![0, 1]]).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), p);
        assert!(serde_json::from_str::<Partition>(r#"{"n":3,"blocks":[[0,1]]}"#).is_err());
    }

    #[test]
    fn trivial_partitions() {
        assert_eq!(Partition::singletons(3).len(), 3);
        assert_eq!(Partition::whole(3).len(), 1);
        assert_eq!(Partition::whole(3).block_containing(2), Some(&[0, 1, 2][..]));
    }
}
