//! Dominating Set to Max Dense Graph Partition on bipartite graphs.
//!
//! For a connected graph on `n` vertices and a budget `1 <= k < n/2`, the
//! intermediate bipartite graph `G'` has sides
//!
//! * `V1 = V ∪ {w_i^j : i < n-k, j < k} ∪ {z}`
//! * `V2 = V' ∪ {x_r^j : r < N, j < k} ∪ {z_i : i < N-n}`
//!
//! where `N = c(n-k+1) - 1` for the least `c` making `N > n`. A partition of
//! `G'` reaches `(k+1) d(K_{n-k+1,N})` iff `G` has a dominating set of size
//! `k`. The dense graph `G''` adds four padding families joined completely
//! to each other and to `G'`, scaling the target by `2kn + 1`.

use super::{check_partition, wrong_kind, ArtifactMeta, PadSet, ReductionArtifact, Role, Source};
use crate::density::partition_density;
use crate::error::{DgpError, Result};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::rational::Rat;

/// Sizes derived from `(n, k)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DsParameters {
    pub n: usize,
    pub k: usize,
    pub c: usize,
    /// `N = c(n-k+1) - 1`.
    pub big_n: usize,
    /// `|V1| = k(n-k) + n + 1 = (k+1)(n-k+1)`.
    pub v1: usize,
    /// `|V2| = (k+1) N`.
    pub v2: usize,
    /// Size of each of `V1^u`, `V1^d` (`kn|V1|`).
    pub pad1: usize,
    /// Size of each of `V2^u`, `V2^d` (`kn|V2|`).
    pub pad2: usize,
}

impl DsParameters {
    /// Vertex count of the intermediate graph `G'`.
    pub fn intermediate_n(&self) -> usize {
        self.v1 + self.v2
    }

    /// Vertex count of the dense graph `G''`.
    pub fn full_n(&self) -> usize {
        self.v1 + self.v2 + 2 * self.pad1 + 2 * self.pad2
    }

    /// `(k+1) d(K_{n-k+1,N})`, the target on `G'`.
    pub fn intermediate_target(&self) -> Rat {
        let a = (self.n - self.k + 1) as i64;
        let b = self.big_n as i64;
        Rat::frac((self.k as i64 + 1) * a * b, a + b)
    }

    /// `(2kn+1)(k+1) d(K_{n-k+1,N})`, the target on `G''`.
    pub fn full_target(&self) -> Rat {
        Rat::from_integer((2 * self.k * self.n + 1) as i64) * self.intermediate_target()
    }
}

/// Checks `1 <= k < n/2` and computes the construction sizes.
pub fn ds_parameters(n: usize, k: usize) -> Result<DsParameters> {
    if k == 0 || 2 * k >= n {
        return Err(DgpError::InvalidArgument(format!(
            "budget k = {k} must satisfy 1 <= k < n/2 for n = {n}"
        )));
    }
    let block = n - k + 1;
    let c = (1..=n)
        .find(|&c| c * block > n + 1)
        .expect("c = n always works");
    let big_n = c * block - 1;
    let v1 = k * (n - k) + n + 1;
    let v2 = (k + 1) * big_n;
    if !(n < big_n && big_n <= 2 * n) || num_integer::gcd(big_n, block) != 1 {
        return Err(DgpError::Internal(format!(
            "N = {big_n} violates n < N <= 2n or gcd(N, n-k+1) = 1"
        )));
    }
    Ok(DsParameters {
        n,
        k,
        c,
        big_n,
        v1,
        v2,
        pad1: k * n * v1,
        pad2: k * n * v2,
    })
}

/// Vertex numbering of the image.
struct Layout {
    p: DsParameters,
}

impl Layout {
    fn original(&self, v: usize) -> usize {
        v
    }
    fn w(&self, i: usize, j: usize) -> usize {
        self.p.n + j * (self.p.n - self.p.k) + i
    }
    fn z(&self) -> usize {
        self.p.v1 - 1
    }
    fn copy(&self, v: usize) -> usize {
        self.p.v1 + v
    }
    fn x(&self, r: usize, j: usize) -> usize {
        self.p.v1 + self.p.n + j * self.p.big_n + r
    }
    fn zi(&self, i: usize) -> usize {
        self.p.v1 + self.p.n + self.p.k * self.p.big_n + i
    }
    fn pad_start(&self, set: PadSet) -> usize {
        let base = self.p.v1 + self.p.v2;
        match set {
            PadSet::V1Up => base,
            PadSet::V1Down => base + self.p.pad1,
            PadSet::V2Up => base + 2 * self.p.pad1,
            PadSet::V2Down => base + 2 * self.p.pad1 + self.p.pad2,
        }
    }
}

/// Builds the intermediate graph `G'` when `intermediate` is set, otherwise
/// the dense graph `G''`.
pub fn reduce_ds_to_bipartite(g: &Graph, k: usize, intermediate: bool) -> Result<ReductionArtifact> {
    g.require_connected()?;
    let p = ds_parameters(g.n(), k)?;
    let lay = Layout { p };
    let (n, big_n) = (p.n, p.big_n);
    let total = if intermediate { p.intermediate_n() } else { p.full_n() };

    let mut roles = vec![Role::Z; total];
    for v in 0..n {
        roles[lay.original(v)] = Role::Original { vertex: v };
        roles[lay.copy(v)] = Role::Copy { vertex: v };
    }
    for j in 0..k {
        for i in 0..n - k {
            roles[lay.w(i, j)] = Role::W { i, j };
        }
        for r in 0..big_n {
            roles[lay.x(r, j)] = Role::X { r, j };
        }
    }
    for i in 0..big_n - n {
        roles[lay.zi(i)] = Role::ZI { i };
    }

    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); total];
    let mut join = |a: usize, b: usize| {
        adj[a].push(b);
        adj[b].push(a);
    };
    // E_d: closed neighborhoods between V and V'.
    for v in 0..n {
        join(lay.original(v), lay.copy(v));
        for &u in g.neighbors(v) {
            join(lay.original(v), lay.copy(u));
        }
    }
    for j in 0..k {
        for i in 0..n - k {
            // E_wx: every x^j except the last.
            for r in 0..big_n - 1 {
                join(lay.w(i, j), lay.x(r, j));
            }
            // E_c, first half: w to all of V'.
            for s in 0..n {
                join(lay.w(i, j), lay.copy(s));
            }
        }
        for r in 0..big_n {
            // E_c, second half: all of V to every x.
            for s in 0..n {
                join(lay.original(s), lay.x(r, j));
            }
            // E_z: z to every x^j except the first.
            if r >= 1 {
                join(lay.z(), lay.x(r, j));
            }
        }
    }
    for i in 0..big_n - n {
        join(lay.z(), lay.zi(i));
        for s in 0..n {
            join(lay.original(s), lay.zi(i));
        }
    }

    if !intermediate {
        let range = |set: PadSet, len: usize| {
            let s = lay.pad_start(set);
            s..s + len
        };
        for (set, len) in [
            (PadSet::V1Up, p.pad1),
            (PadSet::V1Down, p.pad1),
            (PadSet::V2Up, p.pad2),
            (PadSet::V2Down, p.pad2),
        ] {
            for (index, v) in range(set, len).enumerate() {
                roles[v] = Role::Pad { set, index };
            }
        }
        let v1 = 0..p.v1;
        let v2 = p.v1..p.v1 + p.v2;
        // The four complete bipartite joins. V1^u meets V2 and V2^d meets
        // V1 so that every join crosses the bipartition.
        let joins = [
            (range(PadSet::V1Up, p.pad1), range(PadSet::V2Up, p.pad2)),
            (range(PadSet::V1Down, p.pad1), range(PadSet::V2Down, p.pad2)),
            (range(PadSet::V1Up, p.pad1), v2),
            (range(PadSet::V2Down, p.pad2), v1),
        ];
        for (a, b) in joins {
            for u in a.clone() {
                for v in b.clone() {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
    }

    let graph = Graph::from_adjacency_unchecked(adj);
    let side1 = |v: usize| {
        matches!(
            roles[v],
            Role::Original { .. }
                | Role::W { .. }
                | Role::Z
                | Role::Pad { set: PadSet::V1Up | PadSet::V1Down, .. }
        )
    };
    if let Some((u, v)) = graph.edges().find(|&(u, v)| side1(u) == side1(v)) {
        return Err(DgpError::Internal(format!(
            "edge {{{u}, {v}}} does not cross the bipartition"
        )));
    }
    if !intermediate {
        let need = p.pad1;
        if let Some(v) = (0..graph.n()).find(|&v| graph.degree(v) < need) {
            return Err(DgpError::Internal(format!(
                "vertex {v} has degree {} below the density claim {need}",
                graph.degree(v)
            )));
        }
    }
    let target = if intermediate {
        p.intermediate_target()
    } else {
        p.full_target()
    };
    Ok(ReductionArtifact {
        graph,
        meta: ArtifactMeta {
            target,
            roles,
            source: Source::DominatingSet {
                graph: g.clone(),
                k,
                intermediate,
            },
        },
    })
}

/// True iff every vertex of `g` is in `set` or adjacent to it.
pub fn is_dominating_set(g: &Graph, set: &[usize]) -> bool {
    let mut covered = vec![false; g.n()];
    for &v in set {
        if v >= g.n() {
            return false;
        }
        covered[v] = true;
        for &u in g.neighbors(v) {
            covered[u] = true;
        }
    }
    covered.iter().all(|&c| c)
}

fn source_of(artifact: &ReductionArtifact) -> Result<(&Graph, usize, bool)> {
    match artifact.source() {
        Source::DominatingSet {
            graph,
            k,
            intermediate,
        } => Ok((graph, *k, *intermediate)),
        _ => Err(wrong_kind("dominating set", artifact)),
    }
}

/// The partition a dominating set induces. Sets smaller than `k` are padded
/// with the lowest-numbered other vertices.
pub fn ds_forward_partition(artifact: &ReductionArtifact, dom: &[usize]) -> Result<Partition> {
    let (g, k, intermediate) = source_of(artifact)?;
    if !is_dominating_set(g, dom) {
        return Err(DgpError::InvalidArgument(format!(
            "{dom:?} does not dominate the source graph"
        )));
    }
    let mut d: Vec<usize> = dom.to_vec();
    d.sort_unstable();
    d.dedup();
    if d.len() > k {
        return Err(DgpError::InvalidArgument(format!(
            "dominating set has {} vertices, budget is {k}",
            d.len()
        )));
    }
    for v in 0..g.n() {
        if d.len() == k {
            break;
        }
        if !d.contains(&v) {
            d.push(v);
        }
    }
    let p = ds_parameters(g.n(), k)?;
    let lay = Layout { p };
    // owner[v] = j if v' goes to block j. Each member of D takes its own
    // copy, which also keeps x^j_{N-1} (not joined to w^j) out of block j.
    let mut owner = vec![usize::MAX; g.n()];
    for (j, &v) in d.iter().enumerate() {
        owner[v] = j;
    }
    for (v, o) in owner.iter_mut().enumerate() {
        if *o == usize::MAX {
            *o = (0..k)
                .find(|&j| g.has_edge(d[j], v))
                .expect("D dominates the graph");
        }
    }
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); k + 1];
    for j in 0..k {
        let block = &mut blocks[j];
        block.push(lay.original(d[j]));
        block.extend((0..g.n()).filter(|&v| owner[v] == j).map(|v| lay.copy(v)));
        let taken = block.len() - 1;
        block.extend((0..p.n - k).map(|i| lay.w(i, j)));
        block.extend((0..p.big_n - taken).map(|r| lay.x(r, j)));
    }
    let total = artifact.graph.n();
    let mut used = vec![false; p.intermediate_n()];
    for b in &blocks[..k] {
        for &v in b {
            used[v] = true;
        }
    }
    blocks[k] = (0..p.intermediate_n()).filter(|&v| !used[v]).collect();
    if !intermediate {
        let up: Vec<usize> = (lay.pad_start(PadSet::V1Up)..lay.pad_start(PadSet::V1Up) + p.pad1)
            .chain(lay.pad_start(PadSet::V2Up)..lay.pad_start(PadSet::V2Up) + p.pad2)
            .collect();
        let down: Vec<usize> = (lay.pad_start(PadSet::V1Down)
            ..lay.pad_start(PadSet::V1Down) + p.pad1)
            .chain(lay.pad_start(PadSet::V2Down)..lay.pad_start(PadSet::V2Down) + p.pad2)
            .collect();
        blocks.push(up);
        blocks.push(down);
    }
    Partition::new(total, blocks)
}

/// Recovers a dominating set from a partition reaching the target: the
/// source vertices that share a block with some `w` vertex.
pub fn extract_dominating_set(
    artifact: &ReductionArtifact,
    p: &Partition,
) -> Result<Option<Vec<usize>>> {
    let (g, k, _) = source_of(artifact)?;
    check_partition(artifact, p)?;
    if partition_density(&artifact.graph, p)? < *artifact.target() {
        return Ok(None);
    }
    let roles = artifact.roles();
    let mut dom: Vec<usize> = p
        .blocks()
        .iter()
        .filter(|b| b.iter().any(|&v| matches!(roles[v], Role::W { .. })))
        .flat_map(|b| {
            b.iter().filter_map(|&v| match roles[v] {
                Role::Original { vertex } => Some(vertex),
                _ => None,
            })
        })
        .collect();
    dom.sort_unstable();
    if dom.len() > k || !is_dominating_set(g, &dom) {
        return Err(DgpError::Internal(format!(
            "partition reaches the target but {dom:?} is not a dominating set of size <= {k}"
        )));
    }
    Ok(Some(dom))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameters_for_five_vertices() {
        let p = ds_parameters(5, 2).unwrap();
        assert_eq!((p.c, p.big_n, p.v1, p.v2), (2, 7, 12, 21));
        assert_eq!(p.intermediate_n(), 33);
        assert_eq!(p.full_n(), 21 * 12 + 21 * 21);
        assert!(ds_parameters(5, 3).is_err());
        assert!(ds_parameters(5, 0).is_err());
    }

    #[test]
    fn intermediate_graph_for_p5() {
        let g = Graph::path(5);
        let a = reduce_ds_to_bipartite(&g, 2, true).unwrap();
        assert_eq!(a.graph.n(), 33);
        let count = |f: fn(&Role) -> bool| a.roles().iter().filter(|r| f(r)).count();
        assert_eq!(count(|r| matches!(r, Role::W { .. })), 6);
        assert_eq!(count(|r| matches!(r, Role::X { .. })), 14);
        assert_eq!(count(|r| matches!(r, Role::ZI { .. })), 2);
        // 12 * 7 / 19 per block, 3 blocks.
        assert_eq!(a.target(), &Rat::frac(3 * 4 * 7, 11));
    }

    #[test]
    fn forward_partition_meets_target() {
        let g = Graph::path(5);
        for intermediate in [true, false] {
            let a = reduce_ds_to_bipartite(&g, 2, intermediate).unwrap();
            let p = ds_forward_partition(&a, &[1, 3]).unwrap();
            assert_eq!(&partition_density(&a.graph, &p).unwrap(), a.target());
            assert_eq!(extract_dominating_set(&a, &p).unwrap(), Some(vec![1, 3]));
        }
    }

    #[test]
    fn dense_image_degree_and_size() {
        let g = Graph::path(5);
        let a = reduce_ds_to_bipartite(&g, 2, false).unwrap();
        let p = ds_parameters(5, 2).unwrap();
        assert_eq!(a.graph.n(), p.full_n());
        assert!(a.graph.min_degree().unwrap() >= p.pad1);
        assert_eq!(a.target(), &(Rat::from_integer(21) * p.intermediate_target()));
    }

    #[test]
    fn rejects_bad_sources() {
        let two = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        assert!(matches!(
            reduce_ds_to_bipartite(&two, 1, true),
            Err(DgpError::Disconnected { .. })
        ));
        assert!(reduce_ds_to_bipartite(&Graph::path(4), 2, true).is_err());
    }

    #[test]
    fn whole_graph_is_below_target() {
        let a = reduce_ds_to_bipartite(&Graph::path(5), 2, true).unwrap();
        assert_eq!(extract_dominating_set(&a, &Partition::whole(33)).unwrap(), None);
    }
}
