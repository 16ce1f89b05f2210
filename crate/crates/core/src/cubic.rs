//! 4/3-approximation for cubic graphs.
//!
//! `K4` components become blocks. In the rest, vertex-disjoint diamonds
//! (`K4` minus an edge) and then triangles are taken greedily in
//! lexicographic order, and the remaining graph is covered by a maximum
//! matching. The bound `5|D|/4 + |T| + (n - 3|T| - 4|D|)/4` on every
//! partition of a cubic graph without `K4` components certifies the ratio.

use serde::{Deserialize, Serialize};

use crate::error::{DgpError, Result};
use crate::graph::Graph;
use crate::matching::maximum_matching;
use crate::partition::Partition;
use crate::rational::Rat;
use crate::report::{Algorithm, SolveReport};

/// Vertex sets of the diamonds and of the triangles, in that order.
pub type DiamondsAndTriangles = (Vec<Vec<usize>>, Vec<Vec<usize>>);

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct CubicDecomposition {
    pub k4_components: Vec<Vec<usize>>,
    pub diamonds: Vec<Vec<usize>>,
    pub triangles: Vec<Vec<usize>>,
    pub matching: Vec<(usize, usize)>,
    pub leftover: Vec<usize>,
}

impl CubicDecomposition {
    /// Blocks in the order K4s, diamonds, triangles, pairs, singletons.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        blocks.extend(self.k4_components.iter().cloned());
        blocks.extend(self.diamonds.iter().cloned());
        blocks.extend(self.triangles.iter().cloned());
        blocks.extend(self.matching.iter().map(|&(u, v)| vec![u, v]));
        blocks.extend(self.leftover.iter().map(|&v| vec![v]));
        blocks
    }

    /// `3/2 #K4 + 5/4 |D| + |T| + |M|/2`.
    pub fn density(&self) -> Rat {
        Rat::frac(3 * self.k4_components.len() as i64, 2)
            + Rat::frac(5 * self.diamonds.len() as i64, 4)
            + Rat::from(self.triangles.len())
            + Rat::frac(self.matching.len() as i64, 2)
    }
}

fn k4_components(g: &Graph) -> Vec<Vec<usize>> {
    g.connected_components()
        .into_iter()
        .filter(|c| c.len() == 4 && g.induced_edge_count(c) == 6)
        .collect()
}

fn require_no_k4(g: &Graph) -> Result<()> {
    match k4_components(g).first() {
        Some(c) => Err(DgpError::K4Component { vertex: c[0] }),
        None => Ok(()),
    }
}

/// All diamonds and all triangles among the `alive` vertices, each sorted,
/// listed in lexicographic order.
fn candidates(g: &Graph, alive: &[bool]) -> DiamondsAndTriangles {
    let mut diamonds = Vec::new();
    let mut triangles = Vec::new();
    for (u, v) in g.edges() {
        if !alive[u] || !alive[v] {
            continue;
        }
        let common: Vec<usize> = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| alive[w] && g.has_edge(v, w))
            .collect();
        for &w in &common {
            if w > v {
                triangles.push(vec![u, v, w]);
            }
        }
        if common.len() == 2 && !g.has_edge(common[0], common[1]) {
            let mut d = vec![u, v, common[0], common[1]];
            d.sort_unstable();
            diamonds.push(d);
        }
    }
    diamonds.sort();
    diamonds.dedup();
    triangles.sort();
    (diamonds, triangles)
}

fn take_greedily(sets: Vec<Vec<usize>>, alive: &mut [bool]) -> Vec<Vec<usize>> {
    let mut taken = Vec::new();
    for s in sets {
        if s.iter().all(|&v| alive[v]) {
            for &v in &s {
                alive[v] = false;
            }
            taken.push(s);
        }
    }
    taken
}

fn greedy_diamonds_and_triangles(g: &Graph, alive: &mut [bool]) -> DiamondsAndTriangles {
    let (all_diamonds, all_triangles) = candidates(g, alive);
    let diamond_count = all_diamonds.len();
    let diamonds = take_greedily(all_diamonds, alive);
    let (_, rest_triangles) = candidates(g, alive);
    let triangles = take_greedily(rest_triangles, alive);

    let mut in_diamond = vec![false; g.n()];
    for &v in diamonds.iter().flatten() {
        in_diamond[v] = true;
    }
    let free_triangles = all_triangles
        .iter()
        .filter(|t| !t.iter().any(|&v| in_diamond[v]))
        .count();
    if diamonds.len() != diamond_count || triangles.len() != free_triangles {
        log::warn!(
            "greedy extraction took {} of {} diamonds and {} of {} triangles",
            diamonds.len(),
            diamond_count,
            triangles.len(),
            free_triangles
        );
    }
    (diamonds, triangles)
}

/// Vertex-disjoint diamonds, then vertex-disjoint triangles on the remaining
/// vertices, each chosen greedily in lexicographic order.
pub fn find_diamonds_and_triangles(g: &Graph) -> Result<DiamondsAndTriangles> {
    g.require_cubic()?;
    require_no_k4(g)?;
    let mut alive = vec![true; g.n()];
    Ok(greedy_diamonds_and_triangles(g, &mut alive))
}

/// The full decomposition used by [`approx_cubic`].
pub fn cubic_decomposition(g: &Graph) -> Result<CubicDecomposition> {
    g.require_cubic()?;
    let mut alive = vec![true; g.n()];
    let k4 = k4_components(g);
    for &v in k4.iter().flatten() {
        alive[v] = false;
    }
    let (diamonds, triangles) = greedy_diamonds_and_triangles(g, &mut alive);
    let rest: Vec<usize> = (0..g.n()).filter(|&v| alive[v]).collect();
    let sub = g.induced_subgraph(&rest);
    let matching: Vec<(usize, usize)> = maximum_matching(&sub)
        .into_iter()
        .map(|(a, b)| (rest[a], rest[b]))
        .collect();
    for &(u, v) in &matching {
        alive[u] = false;
        alive[v] = false;
    }
    let leftover = (0..g.n()).filter(|&v| alive[v]).collect();
    Ok(CubicDecomposition {
        k4_components: k4,
        diamonds,
        triangles,
        matching,
        leftover,
    })
}

/// `5|D|/4 + |T| + (n - 3|T| - 4|D|)/4` for a cubic graph without `K4`
/// components.
pub fn cubic_upper_bound(g: &Graph) -> Result<Rat> {
    let (d, t) = find_diamonds_and_triangles(g)?;
    Ok(bound_from_counts(g.n(), d.len(), t.len()))
}

fn bound_from_counts(n: usize, d: usize, t: usize) -> Rat {
    Rat::frac(5 * d as i64, 4) + Rat::from(t) + Rat::frac((n - 3 * t - 4 * d) as i64, 4)
}

/// The decomposition's blocks as a partition, with the density bound as a
/// certificate. `optimal` is set when the two coincide.
pub fn approx_cubic(g: &Graph) -> Result<SolveReport> {
    let dec = cubic_decomposition(g)?;
    let non_k4 = g.n() - 4 * dec.k4_components.len();
    let bound = Rat::frac(3 * dec.k4_components.len() as i64, 2)
        + bound_from_counts(non_k4, dec.diamonds.len(), dec.triangles.len());
    let partition = Partition::new(g.n(), dec.blocks())?;
    let optimal = dec.density() == bound;
    let report = SolveReport::new(g, partition, Algorithm::Cubic43, Some(bound), optimal)?;
    if report.density != dec.density() {
        return Err(DgpError::Internal(format!(
            "decomposition density {} differs from the partition density {}",
            dec.density(),
            report.density
        )));
    }
    Ok(report)
}

/// True iff at most a quarter of the vertices are left unmatched.
pub fn leftover_budget_check(g: &Graph, dec: &CubicDecomposition) -> bool {
    4 * dec.leftover.len() <= g.n()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prism() -> Graph {
        Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap()
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    /// Two diamonds whose tips are joined crosswise: 8 vertices, cubic.
    fn two_diamonds() -> Graph {
        let mut e = Vec::new();
        for b in [0, 4] {
            e.extend([(b, b + 1), (b, b + 2), (b + 1, b + 2), (b + 1, b + 3), (b + 2, b + 3)]);
        }
        e.extend([(0, 4), (3, 7)]);
        Graph::from_edges(8, &e).unwrap()
    }

    #[test]
    fn extraction() {
        let (d, t) = find_diamonds_and_triangles(&prism()).unwrap();
        assert_eq!((d.len(), t), (0, vec![vec![0, 1, 2], vec![3, 4, 5]]));
        let (d, t) = find_diamonds_and_triangles(&petersen()).unwrap();
        assert!(d.is_empty() && t.is_empty());
        let (d, t) = find_diamonds_and_triangles(&two_diamonds()).unwrap();
        assert_eq!((d, t.len()), (vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]], 0));
        assert!(matches!(
            find_diamonds_and_triangles(&Graph::complete(4)),
            Err(DgpError::K4Component { vertex: 0 })
        ));
        assert!(matches!(
            find_diamonds_and_triangles(&Graph::cycle(4).unwrap()),
            Err(DgpError::NotCubic { .. })
        ));
    }

    #[test]
    fn approximations() {
        let r = approx_cubic(&prism()).unwrap();
        assert_eq!((r.density.clone(), r.upper_bound.clone()), (Rat::from_integer(2), Some(Rat::from_integer(2))));
        assert!(r.optimal);
        assert_eq!(r.partition.len(), 2);

        let r = approx_cubic(&petersen()).unwrap();
        assert_eq!(r.density, Rat::frac(5, 2));
        assert_eq!(r.upper_bound, Some(Rat::frac(10, 4)));
        assert!(r.optimal);

        let r = approx_cubic(&Graph::complete(4).disjoint_union(&Graph::complete(4))).unwrap();
        assert_eq!((r.density, r.partition.len()), (Rat::from_integer(3), 2));
        assert!(r.optimal);

        let r = approx_cubic(&two_diamonds()).unwrap();
        assert_eq!(r.density, Rat::frac(5, 2));

        assert_eq!(cubic_upper_bound(&petersen()).unwrap(), Rat::frac(5, 2));
        assert_eq!(cubic_upper_bound(&prism()).unwrap(), Rat::from_integer(2));
        assert!(cubic_upper_bound(&Graph::complete(4)).is_err());
    }

    #[test]
    fn leftover() {
        for g in [prism(), petersen(), two_diamonds(), Graph::complete_bipartite(3, 3)] {
            let dec = cubic_decomposition(&g).unwrap();
            assert!(dec.leftover.is_empty());
            assert!(leftover_budget_check(&g, &dec));
        }
    }
}
