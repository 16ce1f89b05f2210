//! Complete bipartite graphs `G_{n,m}`: the optimum is `nm/(n+m)`, and a
//! partition reaches it iff every block meets both sides in the ratio
//! `n : m`.

use serde::{Deserialize, Serialize};

use crate::error::{DgpError, Result};
use crate::partition::Partition;
use crate::rational::Rat;

/// Per block, how many vertices it takes from side A (`n_i`) and side B
/// (`m_i`).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BipartiteSplit {
    pub blocks: Vec<(usize, usize)>,
}

impl BipartiteSplit {
    /// Counts side memberships of `p`'s blocks, with side A = `0..n` as in
    /// [`Graph::complete_bipartite`](crate::graph::Graph::complete_bipartite).
    pub fn from_partition(n: usize, p: &Partition) -> Self {
        let blocks = p
            .blocks()
            .iter()
            .map(|b| {
                let a = b.iter().filter(|&&v| v < n).count();
                (a, b.len() - a)
            })
            .collect();
        BipartiteSplit { blocks }
    }

    /// A partition of `G_{n,m}` realizing the split, filling blocks in order.
    pub fn to_partition(&self, n: usize, m: usize) -> Result<Partition> {
        self.validate(n, m)?;
        let (mut a, mut b) = (0, n);
        let blocks = self
            .blocks
            .iter()
            .map(|&(ni, mi)| {
                let block: Vec<usize> = (a..a + ni).chain(b..b + mi).collect();
                a += ni;
                b += mi;
                block
            })
            .collect();
        Partition::new(n + m, blocks)
    }

    fn validate(&self, n: usize, m: usize) -> Result<()> {
        if self.blocks.iter().any(|&(a, b)| a + b == 0) {
            return Err(DgpError::InvalidPartition("split has an empty block".into()));
        }
        let sa: usize = self.blocks.iter().map(|b| b.0).sum();
        let sb: usize = self.blocks.iter().map(|b| b.1).sum();
        if (sa, sb) != (n, m) {
            return Err(DgpError::InvalidPartition(format!(
                "split covers ({sa}, {sb}) vertices, expected ({n}, {m})"
            )));
        }
        Ok(())
    }
}

/// `d(G_{n,m}) = nm/(n+m)`.
pub fn complete_bipartite_density(n: usize, m: usize) -> Result<Rat> {
    if n == 0 || m == 0 {
        return Err(DgpError::InvalidArgument(format!(
            "complete bipartite graph needs both sides non-empty, got ({n}, {m})"
        )));
    }
    Ok(Rat::frac((n * m) as i64, (n + m) as i64))
}

/// True iff every block has `n_i, m_i >= 1` and `n_i * m = m_i * n`.
pub fn is_optimal_bipartite_partition(n: usize, m: usize, split: &BipartiteSplit) -> Result<bool> {
    complete_bipartite_density(n, m)?;
    split.validate(n, m)?;
    Ok(split
        .blocks
        .iter()
        .all(|&(ni, mi)| ni >= 1 && mi >= 1 && ni * m == mi * n))
}
