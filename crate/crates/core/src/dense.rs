//! Solvers for graphs of high minimum degree, working on the complement
//! `H` (the graph of missing edges).
//!
//! * [`solve_min_degree_n3`]: optimal when `δ >= n - 3`, i.e. `H` is a
//!   disjoint union of paths and cycles.
//! * [`brooks_clique_partition`]: color `H`; color classes are cliques of
//!   the input, giving density `(n - #colors) / 2`.
//! * [`eptas`]: the coloring above for large `n`, exact search otherwise.

use serde::{Deserialize, Serialize};

use crate::coloring::{brooks_coloring, color_count};
use crate::error::{DgpError, Result};
use crate::exact::{solve_exact, SearchConfig};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::rational::Rat;
use crate::report::{Algorithm, SolveReport};

/// Shape of the complement of a graph with `δ >= n - 3`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ComplementStats {
    pub n: usize,
    /// Missing edges (edges of `H`).
    pub q: usize,
    /// Odd cycles of `H`.
    pub o: usize,
    /// Paths of `H` with an odd number (at least 3) of vertices.
    pub p_o: usize,
    /// Vertices of degree `n - 1` (isolated in `H`).
    pub d_n1: usize,
    pub n1: usize,
    pub n2: usize,
    /// Components of `H` with at least two vertices, each listed in walk
    /// order (end to end for paths, around for cycles).
    pub walks: Vec<Walk>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Walk {
    pub vertices: Vec<usize>,
    pub cycle: bool,
}

fn require_min_degree(g: &Graph, required: usize) -> Result<()> {
    if g.n() == 0 {
        return Err(DgpError::EmptyGraph);
    }
    match (0..g.n()).find(|&v| g.degree(v) < required) {
        Some(vertex) => Err(DgpError::DegreeCondition {
            vertex,
            degree: g.degree(vertex),
            required,
        }),
        None => Ok(()),
    }
}

/// Decomposes the complement into paths, cycles and isolated vertices.
pub fn analyze_complement(g: &Graph) -> Result<ComplementStats> {
    let n = g.n();
    require_min_degree(g, n.saturating_sub(3))?;
    let h = g.complement();
    let (mut o, mut p_o, mut d_n1) = (0, 0, 0);
    let mut walks = Vec::new();
    for comp in h.connected_components() {
        if comp.len() == 1 {
            d_n1 += 1;
            continue;
        }
        let start = comp.iter().copied().find(|&v| h.degree(v) == 1);
        let cycle = start.is_none();
        let mut order = vec![start.unwrap_or(comp[0])];
        let mut prev = usize::MAX;
        while order.len() < comp.len() {
            let cur = *order.last().expect("non-empty");
            let next = h
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&u| u != prev && !(order.len() >= 2 && u == order[0]))
                .expect("paths and cycles continue until every vertex is visited");
            prev = cur;
            order.push(next);
        }
        let odd = comp.len() % 2 == 1;
        if odd && cycle {
            o += 1;
        } else if odd {
            p_o += 1;
        }
        walks.push(Walk {
            vertices: order,
            cycle,
        });
    }
    let odd_parts = d_n1 + p_o + o;
    Ok(ComplementStats {
        n,
        q: h.m(),
        o,
        p_o,
        d_n1,
        n1: (n - odd_parts) / 2,
        n2: (n + odd_parts) / 2,
        walks,
    })
}

/// Optimal partition for `δ >= n - 3`: the better of the whole graph and a
/// two-coloring of the complement that puts every odd-component overhang,
/// hence every missing edge inside a part, into the larger part `V2`.
pub fn solve_min_degree_n3(g: &Graph) -> Result<SolveReport> {
    let stats = analyze_complement(g)?;
    let n = stats.n;
    // Color 1 marks V1; everything else is V2.
    let mut in_v1 = vec![false; n];
    for walk in &stats.walks {
        let even = walk.vertices.len() % 2 == 0;
        // Even walks alternate from either end; odd walks start (and, being
        // odd, end) on V2.
        let offset = usize::from(!even);
        for (i, &v) in walk.vertices.iter().enumerate() {
            in_v1[v] = (i + offset) % 2 == 0;
        }
    }
    let v1: Vec<usize> = (0..n).filter(|&v| in_v1[v]).collect();
    let v2: Vec<usize> = (0..n).filter(|&v| !in_v1[v]).collect();
    if v1.len() != stats.n1
        || g.missing_edge_count(&v1) != 0
        || g.missing_edge_count(&v2) != stats.o
    {
        return Err(DgpError::Internal(format!(
            "two-coloring of the complement is off: |V1| = {}, expected {}",
            v1.len(),
            stats.n1
        )));
    }

    let nn = n as i64;
    let whole = Rat::frac(nn - 1, 2) - Rat::frac(stats.q as i64, nn);
    let partition = if v1.is_empty() {
        Partition::whole(n)
    } else {
        let split = Rat::frac(nn - 2, 2) - Rat::frac(stats.o as i64, stats.n2 as i64);
        if split > whole {
            Partition::new(n, vec![v1, v2])?
        } else {
            Partition::whole(n)
        }
    };
    SolveReport::new(g, partition, Algorithm::Dense3, None, true)
}

/// Partition into the color classes of a Brooks coloring of the complement.
/// Each class is a clique, so the density is `(n - #colors) / 2`.
pub fn brooks_clique_partition(g: &Graph) -> Result<SolveReport> {
    let n = g.n();
    if n == 0 {
        return Err(DgpError::EmptyGraph);
    }
    let colors = brooks_coloring(&g.complement())?;
    let partition = Partition::from_labels(&colors);
    let k = color_count(&colors);
    if let Some(b) = partition.blocks().iter().find(|b| g.missing_edge_count(b) != 0) {
        return Err(DgpError::Internal(format!("color class {b:?} is not a clique")));
    }
    let report = SolveReport::new(
        g,
        partition,
        Algorithm::Brooks,
        Some(Rat::frac(n as i64 - 1, 2)),
        false,
    )?;
    debug_assert_eq!(report.density, Rat::frac((n - k) as i64, 2));
    Ok(report)
}

/// The `(n-1)/(δ+1)`-approximation: optimal via [`solve_min_degree_n3`]
/// when `δ >= n - 3`, otherwise [`brooks_clique_partition`].
pub fn approx_min_degree(g: &Graph) -> Result<SolveReport> {
    let n = g.n();
    match g.min_degree() {
        None => Err(DgpError::EmptyGraph),
        Some(delta) if delta + 3 >= n => solve_min_degree_n3(g),
        Some(_) => brooks_clique_partition(g),
    }
}

/// `t - 1 + (t - 2) / eps`: from this size on, the coloring branch runs.
pub fn eptas_threshold(eps: &Rat, t: usize) -> Result<Rat> {
    if !eps.is_positive() {
        return Err(DgpError::InvalidArgument(format!("eps must be positive, got {eps}")));
    }
    if t < 4 {
        return Err(DgpError::InvalidArgument(format!("t must be at least 4, got {t}")));
    }
    Ok(Rat::from(t - 1) + Rat::from(t - 2) / eps.clone())
}

/// Approximation scheme for `δ >= n - t`: the clique partition when
/// `n >= t - 1 + (t - 2)/eps`, otherwise an exact search with `cfg`. The
/// report's algorithm tag records the branch.
pub fn eptas(g: &Graph, eps: &Rat, t: usize, cfg: &SearchConfig) -> Result<SolveReport> {
    let threshold = eptas_threshold(eps, t)?;
    let n = g.n();
    require_min_degree(g, n.saturating_sub(t))?;
    if Rat::from(n) >= threshold {
        let mut r = brooks_clique_partition(g)?;
        r.algorithm = Algorithm::EptasColoring;
        Ok(r)
    } else {
        let mut r = solve_exact(g, cfg)?;
        r.algorithm = Algorithm::EptasExact;
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minus(n: usize, missing: &[(usize, usize)]) -> Graph {
        let h = Graph::from_edges(n, missing).unwrap();
        h.complement()
    }

    fn k6_minus_c5() -> Graph {
        minus(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    }

    fn k6_minus_pm() -> Graph {
        minus(6, &[(0, 1), (2, 3), (4, 5)])
    }

    #[test]
    fn complement_stats() {
        let s = analyze_complement(&k6_minus_pm()).unwrap();
        assert_eq!((s.q, s.o, s.p_o, s.d_n1, s.n1, s.n2), (3, 0, 0, 0, 3, 3));
        let s = analyze_complement(&k6_minus_c5()).unwrap();
        assert_eq!((s.q, s.o, s.p_o, s.d_n1, s.n1, s.n2), (5, 1, 0, 1, 2, 4));
        let s = analyze_complement(&Graph::complete(7)).unwrap();
        assert_eq!((s.q, s.o, s.p_o, s.d_n1, s.n1, s.n2), (0, 0, 0, 7, 0, 7));
        let s = analyze_complement(&minus(7, &[(0, 1), (1, 2), (4, 5), (5, 6)])).unwrap();
        assert_eq!((s.q, s.p_o, s.d_n1, s.n1, s.n2), (4, 2, 1, 2, 5));
    }

    #[test]
    fn degree_condition() {
        let err = analyze_complement(&Graph::cycle(6).unwrap()).unwrap_err();
        assert_eq!(
            err,
            DgpError::DegreeCondition {
                vertex: 0,
                degree: 2,
                required: 3
            }
        );
    }

    #[test]
    fn solver_examples() {
        let r = solve_min_degree_n3(&minus(5, &[(0, 1), (2, 3)])).unwrap();
        assert_eq!(r.density, Rat::frac(8, 5));
        assert_eq!(r.partition.len(), 1);

        let r = solve_min_degree_n3(&k6_minus_c5()).unwrap();
        assert_eq!(r.density, Rat::frac(7, 4));
        assert_eq!(r.partition.len(), 2);
        let big = r.partition.blocks().iter().find(|b| b.len() == 4).unwrap();
        assert_eq!(k6_minus_c5().missing_edge_count(big), 1);

        let r = solve_min_degree_n3(&k6_minus_pm()).unwrap();
        assert_eq!(r.density, Rat::from_integer(2));
        assert_eq!(r.partition.len(), 1);

        let r = solve_min_degree_n3(&Graph::complete(5)).unwrap();
        assert_eq!(r.density, Rat::from_integer(2));
        assert!(r.optimal);
    }

    #[test]
    fn brooks_examples() {
        // Complement is an even cycle.
        let g = Graph::cycle(8).unwrap().complement();
        assert_eq!(brooks_clique_partition(&g).unwrap().density, Rat::from_integer(3));
        let r = brooks_clique_partition(&Graph::complete(6)).unwrap();
        assert_eq!(r.density, Rat::frac(5, 2));
        assert_eq!(r.upper_bound, Some(Rat::frac(5, 2)));
        assert!(!r.optimal);
    }

    #[test]
    fn approx_dispatch() {
        let r = approx_min_degree(&Graph::complete(5)).unwrap();
        assert_eq!((r.algorithm, r.density), (Algorithm::Dense3, Rat::from_integer(2)));
        let g = Graph::cycle(8).unwrap().complement();
        assert_eq!(approx_min_degree(&g).unwrap().algorithm, Algorithm::Dense3);
        let r = approx_min_degree(&Graph::cycle(8).unwrap()).unwrap();
        assert_eq!(r.algorithm, Algorithm::Brooks);
    }

    /// A complement with a `K_{Δ+1}` component needs `Δ + 1` colors, so the
    /// coloring can fall short of `(δ+1)/2` and of the eptas guarantee.
    #[test]
    fn clique_component_in_complement() {
        // H = K4 + 7 K1, n = 11, δ = 7: four colors give 7/2, while the
        // whole graph alone has density 49/11 > (1 + 1/4) 7/2.
        let h = Graph::complete(4).disjoint_union(&Graph::empty(7));
        let g = h.complement();
        let r = approx_min_degree(&g).unwrap();
        assert_eq!(r.density, Rat::frac(7, 2));
        let whole = Rat::frac(g.m() as i64, 11);
        assert_eq!(whole, Rat::frac(49, 11));
        assert!(r.density * Rat::frac(5, 4) < whole);
    }

    #[test]
    fn eptas_branches() {
        let g = k6_minus_pm();
        let cfg = SearchConfig::default();
        let r = eptas(&g, &Rat::frac(1, 2), 4, &cfg).unwrap();
        assert_eq!(r.algorithm, Algorithm::EptasExact);
        assert_eq!(r.density, Rat::from_integer(2));
        let r = eptas(&g, &Rat::one(), 4, &cfg).unwrap();
        assert_eq!(r.algorithm, Algorithm::EptasColoring);
        assert_eq!(eptas_threshold(&Rat::one(), 4).unwrap(), Rat::from_integer(5));
        assert_eq!(eptas_threshold(&Rat::frac(1, 10), 4).unwrap(), Rat::from_integer(23));
        let big = Graph::cycle(12).unwrap().complement();
        let r = eptas(&big, &Rat::one(), 4, &cfg).unwrap();
        assert_eq!(r.algorithm, Algorithm::EptasColoring);
        assert_eq!(r.density, Rat::from_integer(5));
        assert!(eptas(&Graph::cycle(8).unwrap(), &Rat::one(), 4, &cfg).is_err());
        assert!(eptas(&g, &Rat::zero(), 4, &cfg).is_err());
        assert!(eptas(&g, &Rat::one(), 3, &cfg).is_err());
    }
}
