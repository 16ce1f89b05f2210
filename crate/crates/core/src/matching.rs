//! Maximum-cardinality matching in general graphs (Edmonds' blossom
//! algorithm, one BFS per free vertex with blossom contraction by base
//! relabeling).

use std::collections::VecDeque;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn contract(&mut self, v: usize, u: usize) {
        let b = self.lca(v, u);
        self.in_blossom.fill(false);
        self.mark_path(v, b, u);
        self.mark_path(u, b, v);
        for i in 0..self.g.n() {
            if self.in_blossom[self.base[i]] {
                self.base[i] = b;
                if !self.used[i] {
                    self.used[i] = true;
                    self.queue.push_back(i);
                }
            }
        }
    }

    /// BFS for an augmenting path from the free vertex `root`; returns its
    /// free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &u in self.g.neighbors(v) {
                if self.base[v] == self.base[u] || self.mate[v] == u {
                    continue;
                }
                if u == root || (self.mate[u] != NONE && self.parent[self.mate[u]] != NONE) {
                    self.contract(v, u);
                } else if self.parent[u] == NONE {
                    self.parent[u] = v;
                    if self.mate[u] == NONE {
                        return Some(u);
                    }
                    let w = self.mate[u];
                    self.used[w] = true;
                    self.queue.push_back(w);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

/// A maximum matching of `g` as pairs `(u, v)` with `u < v`, sorted.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    let mut b = Blossom::new(g);
    // A greedy start keeps the number of searches small.
    for v in 0..g.n() {
        if b.mate[v] == NONE {
            if let Some(&u) = g.neighbors(v).iter().find(|&&u| b.mate[u] == NONE) {
                b.mate[v] = u;
                b.mate[u] = v;
            }
        }
    }
    for v in 0..g.n() {
        if b.mate[v] == NONE {
            if let Some(end) = b.find_path(v) {
                b.augment(end);
            }
        }
    }
    (0..g.n())
        .filter(|&v| b.mate[v] != NONE && v < b.mate[v])
        .map(|v| (v, b.mate[v]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute(g: &Graph) -> usize {
        let edges: Vec<_> = g.edges().collect();
        fn go(edges: &[(usize, usize)], used: u64) -> usize {
            match edges.split_first() {
                None => 0,
                Some((&(u, v), rest)) => {
                    let skip = go(rest, used);
                    if used & (1 << u) == 0 && used & (1 << v) == 0 {
                        skip.max(1 + go(rest, used | 1 << u | 1 << v))
                    } else {
                        skip
                    }
                }
            }
        }
        go(&edges, 0)
    }

    fn check(g: &Graph) -> usize {
        let m = maximum_matching(g);
        let mut seen = vec![false; g.n()];
        for &(u, v) in &m {
            assert!(g.has_edge(u, v));
            assert!(!seen[u] && !seen[v]);
            seen[u] = true;
            seen[v] = true;
        }
        m.len()
    }

    #[test]
    fn small_graphs() {
        assert_eq!(check(&Graph::cycle(5).unwrap()), 2);
        assert_eq!(check(&Graph::complete_bipartite(3, 3)), 3);
        assert_eq!(check(&Graph::complete(7)), 3);
        assert_eq!(check(&Graph::empty(3)), 0);
        // Two triangles joined by a path through a blossom.
        let g = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6), (6, 7)],
        )
        .unwrap();
        assert_eq!(check(&g), 4);
    }

    proptest! {
        #[test]
        fn matches_brute_force(n in 1usize..11, bits in any::<u64>(), extra in any::<u64>()) {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    let word = if i < 64 { bits } else { extra };
                    if word >> (i % 64) & 1 == 1 {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            prop_assert_eq!(check(&g), brute(&g));
        }
    }
}
