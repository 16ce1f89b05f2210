//! Simple undirected graphs over dense vertex ids `0..n`.

use std::collections::VecDeque;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{DgpError, Result};

/// A simple undirected graph. Neighbor lists are kept sorted, which makes
/// every traversal, and therefore every tie-break built on top of one,
/// deterministic.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(DgpError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(DgpError::InvalidEdge {
                    u,
                    v,
                    reason: "self-loop".into(),
                });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(DgpError::InvalidEdge {
                    u,
                    v: w[0],
                    reason: "duplicate edge".into(),
                });
            }
        }
        Ok(Graph {
            n,
            adj,
            m: edges.len(),
        })
    }

    /// Builds a graph from adjacency lists that are already known to be
    /// symmetric and simple. Lists are sorted here.
    pub(crate) fn from_adjacency_unchecked(mut adj: Vec<Vec<usize>>) -> Self {
        let mut deg_sum = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            deg_sum += list.len();
        }
        Graph {
            n: adj.len(),
            adj,
            m: deg_sum / 2,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Self::from_adjacency_unchecked(adj)
    }

    /// `K_{a,b}` with side A = `0..a` and side B = `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let adj = (0..a + b)
            .map(|v| if v < a { (a..a + b).collect() } else { (0..a).collect() })
            .collect();
        Self::from_adjacency_unchecked(adj)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(DgpError::InvalidArgument(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("path edges are simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Minimum degree, `None` on the empty graph.
    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).max()
    }

    /// A vertex attaining the minimum degree (lowest id on ties).
    pub fn min_degree_vertex(&self) -> Option<usize> {
        (0..self.n).min_by_key(|&v| self.adj[v].len())
    }

    /// Checks that every vertex has degree `d`, reporting the first that doesn't.
    pub fn check_regular(&self, d: usize) -> std::result::Result<(), (usize, usize)> {
        match (0..self.n).find(|&v| self.adj[v].len() != d) {
            Some(v) => Err((v, self.adj[v].len())),
            None => Ok(()),
        }
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.check_regular(d).is_ok()
    }

    /// Fails with [`DgpError::NotCubic`] unless every vertex has degree 3.
    pub fn require_cubic(&self) -> Result<()> {
        if self.n == 0 {
            return Err(DgpError::EmptyGraph);
        }
        self.check_regular(3)
            .map_err(|(vertex, degree)| DgpError::NotCubic { vertex, degree })
    }

    pub fn complement(&self) -> Graph {
        let adj = (0..self.n)
            .map(|v| {
                let mut out = Vec::with_capacity(self.n - 1 - self.adj[v].len());
                let mut it = self.adj[v].iter().peekable();
                for u in 0..self.n {
                    if it.peek() == Some(&&u) {
                        it.next();
                    } else if u != v {
                        out.push(u);
                    }
                }
                out
            })
            .collect();
        Graph::from_adjacency_unchecked(adj)
    }

    /// Number of edges with both endpoints in `set`. Duplicates in `set` are
    /// not allowed.
    pub fn induced_edge_count(&self, set: &[usize]) -> usize {
        let mut mark = vec![false; self.n];
        for &v in set {
            mark[v] = true;
        }
        let twice: usize = set
            .iter()
            .map(|&v| self.adj[v].iter().filter(|&&u| mark[u]).count())
            .sum();
        twice / 2
    }

    /// `C(|S|, 2) - |E(S)|`: the non-adjacent pairs inside `set`.
    pub fn missing_edge_count(&self, set: &[usize]) -> usize {
        let s = set.len();
        s * s.saturating_sub(1) / 2 - self.induced_edge_count(set)
    }

    /// Subgraph induced on `set`; vertex `set[i]` becomes `i`.
    pub fn induced_subgraph(&self, set: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in set.iter().enumerate() {
            index[v] = i;
        }
        let adj = set
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&u| (index[u] != usize::MAX).then_some(index[u]))
                    .collect()
            })
            .collect();
        Graph::from_adjacency_unchecked(adj)
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Fails with [`DgpError::Disconnected`] naming the first unreachable vertex.
    pub fn require_connected(&self) -> Result<()> {
        if self.n == 0 {
            return Err(DgpError::EmptyGraph);
        }
        let comps = self.connected_components();
        if comps.len() > 1 {
            return Err(DgpError::Disconnected { vertex: comps[1][0] });
        }
        Ok(())
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&u| u + off).collect()),
        );
        Graph::from_adjacency_unchecked(adj)
    }
}

#[derive(Serialize, Deserialize)]
struct EdgeList {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Serialized as `{"n": .., "edges": [[u, v], ..]}`; validated on the way in.
impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        EdgeList {
            n: self.n,
            edges: self.edges().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = EdgeList::deserialize(deserializer)?;
        Graph::from_edges(raw.n, &raw.edges).map_err(serde::de::Error::custom)
    }
}
