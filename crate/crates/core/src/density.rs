//! Densities, utilities and the global block-count bound.

use crate::error::{DgpError, Result};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::rational::Rat;

/// `|E| / |V|`.
pub fn density(g: &Graph) -> Result<Rat> {
    if g.n() == 0 {
        return Err(DgpError::EmptyGraph);
    }
    Ok(Rat::frac(g.m() as i64, g.n() as i64))
}

/// Density of the subgraph induced on a non-empty vertex set.
pub fn block_density(g: &Graph, block: &[usize]) -> Result<Rat> {
    if block.is_empty() {
        return Err(DgpError::InvalidPartition("empty block".into()));
    }
    if let Some(&v) = block.iter().find(|&&v| v >= g.n()) {
        return Err(DgpError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(Rat::frac(
        g.induced_edge_count(block) as i64,
        block.len() as i64,
    ))
}

fn check_size(g: &Graph, p: &Partition) -> Result<()> {
    if p.n() != g.n() {
        return Err(DgpError::InvalidPartition(format!(
            "partition covers {} vertices but the graph has {}",
            p.n(),
            g.n()
        )));
    }
    Ok(())
}

/// Sum of the induced densities of the blocks of `p`.
pub fn partition_density(g: &Graph, p: &Partition) -> Result<Rat> {
    check_size(g, p)?;
    p.blocks().iter().map(|b| block_density(g, b)).sum()
}

/// `d(B) / |B|` for the block `B` containing `v`.
pub fn utility(g: &Graph, p: &Partition, v: usize) -> Result<Rat> {
    check_size(g, p)?;
    if v >= g.n() {
        return Err(DgpError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let block = p
        .block_containing(v)
        .expect("validated partition covers every vertex");
    let size = Rat::from(block.len());
    Ok(block_density(g, block)? / size)
}

/// `(n - k) / 2`: no `k`-block partition of an `n`-vertex graph is denser.
pub fn density_upper_bound(n: usize, k: usize) -> Result<Rat> {
    if k == 0 || k > n {
        return Err(DgpError::InvalidArgument(format!(
            "block count {k} outside 1..={n}"
        )));
    }
    Ok(Rat::frac((n - k) as i64, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn diamond() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn graph_densities() {
        assert_eq!(density(&Graph::complete(3)).unwrap(), Rat::one());
        assert_eq!(density(&Graph::complete(4)).unwrap(), Rat::frac(3, 2));
        assert_eq!(
            density(&Graph::complete_bipartite(3, 2)).unwrap(),
            Rat::frac(6, 5)
        );
        assert_eq!(density(&Graph::empty(0)), Err(DgpError::EmptyGraph));
    }

    #[test]
    fn c5_partitions() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(
            partition_density(&c5, &Partition::whole(5)).unwrap(),
            Rat::one()
        );
        let p = Partition::new(5, vec![vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert_eq!(partition_density(&c5, &p).unwrap(), Rat::frac(7, 6));
        assert!(partition_density(&c5, &Partition::singletons(5))
            .unwrap()
            .is_zero());
        assert!(partition_density(&c5, &Partition::whole(4)).is_err());
    }

    #[test]
    fn utilities() {
        let k3 = Graph::complete(3);
        assert!(utility(&k3, &Partition::singletons(3), 0).unwrap().is_zero());
        assert_eq!(
            utility(&k3, &Partition::whole(3), 1).unwrap(),
            Rat::frac(1, 3)
        );
        let d = diamond();
        let whole = Partition::whole(4);
        assert_eq!(utility(&d, &whole, 0).unwrap(), Rat::frac(5, 16));
        let total: Rat = (0..4).map(|v| utility(&d, &whole, v).unwrap()).sum();
        assert_eq!(total, Rat::frac(5, 4));
        assert!(utility(&d, &whole, 4).is_err());
    }

    #[test]
    fn upper_bound_values() {
        assert_eq!(density_upper_bound(6, 2).unwrap(), Rat::from_integer(2));
        assert!(density_upper_bound(5, 5).unwrap().is_zero());
        assert_eq!(density_upper_bound(10, 1).unwrap(), Rat::frac(9, 2));
        assert!(density_upper_bound(3, 0).is_err());
        assert!(density_upper_bound(3, 4).is_err());
    }

    fn graph_and_labels(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (
                proptest::collection::vec(any::<bool>(), pairs),
                proptest::collection::vec(0..n, n),
            )
                .prop_map(move |(mask, labels)| {
                    let mut edges = Vec::new();
                    let mut i = 0;
                    for u in 0..n {
                        for v in u + 1..n {
                            if mask[i] {
                                edges.push((u, v));
                            }
                            i += 1;
                        }
                    }
                    (Graph::from_edges(n, &edges).unwrap(), labels)
                })
        })
    }

    proptest! {
        #[test]
        fn utilities_sum_to_density((g, labels) in graph_and_labels(12)) {
            let p = Partition::from_labels(&labels);
            let total: Rat = (0..g.n()).map(|v| utility(&g, &p, v).unwrap()).sum();
            prop_assert_eq!(total, partition_density(&g, &p).unwrap());
        }

        #[test]
        fn complement_is_involution((g, _) in graph_and_labels(14)) {
            prop_assert_eq!(g.complement().complement(), g.clone());
            let n = g.n();
            prop_assert_eq!(g.m() + g.complement().m(), n * (n - 1) / 2);
        }

        #[test]
        fn block_bound_holds((g, labels) in graph_and_labels(12)) {
            let p = Partition::from_labels(&labels);
            let d = partition_density(&g, &p).unwrap();
            prop_assert!(d <= density_upper_bound(g.n(), p.len()).unwrap());
        }

        #[test]
        fn clique_partition_density(labels in proptest::collection::vec(0usize..6, 1..14)) {
            // Make each labelled block a clique.
            let n = labels.len();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if labels[u] == labels[v] {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let p = Partition::from_labels(&labels);
            prop_assert_eq!(
                partition_density(&g, &p).unwrap(),
                Rat::frac((n - p.len()) as i64, 2)
            );
        }
    }
}
