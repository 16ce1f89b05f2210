//! Constructive Brooks coloring.
//!
//! Each connected component `C` with maximum degree `Δ` is colored with
//!
//! * `|C|` colors if it is complete,
//! * 3 colors if it is an odd cycle,
//! * at most 2 colors if `Δ <= 2` otherwise,
//! * at most `Δ` colors in every other case.
//!
//! Colors are reused across components, so the total is the maximum over
//! components.

use std::collections::VecDeque;

use crate::error::{DgpError, Result};
use crate::graph::Graph;

/// A proper coloring of `h` meeting the per-component counts above.
/// `colors[v]` is in `0..k` where `k` is the number of colors used.
pub fn brooks_coloring(h: &Graph) -> Result<Vec<usize>> {
    let mut color = vec![usize::MAX; h.n()];
    for comp in h.connected_components() {
        color_component(h, &comp, &mut color);
    }
    if let Some((u, v)) = h.edges().find(|&(u, v)| color[u] == color[v]) {
        return Err(DgpError::Internal(format!(
            "coloring gives adjacent vertices {u} and {v} the same color"
        )));
    }
    Ok(color)
}

/// The number of colors [`brooks_coloring`] may use on a connected component.
pub fn brooks_bound(h: &Graph, comp: &[usize]) -> usize {
    let s = comp.len();
    let delta = comp.iter().map(|&v| h.degree(v)).max().unwrap_or(0);
    let regular = comp.iter().all(|&v| h.degree(v) == delta);
    if regular && delta + 1 == s {
        s
    } else if regular && delta == 2 && s % 2 == 1 {
        3
    } else {
        delta
    }
}

fn color_component(h: &Graph, comp: &[usize], color: &mut [usize]) {
    let s = comp.len();
    let delta = comp.iter().map(|&v| h.degree(v)).max().unwrap_or(0);
    if delta == s - 1 && comp.iter().all(|&v| h.degree(v) == s - 1) {
        for (i, &v) in comp.iter().enumerate() {
            color[v] = i;
        }
        return;
    }
    if delta <= 2 {
        // Paths and cycles: greedy along a walk from an endpoint (or any
        // vertex of a cycle) uses 2 colors unless the cycle is odd.
        let start = comp
            .iter()
            .copied()
            .find(|&v| h.degree(v) < 2)
            .unwrap_or(comp[0]);
        let order = bfs_order(h, start, |_| true);
        greedy(h, &order, color);
        return;
    }
    if let Some(&root) = comp.iter().find(|&&v| h.degree(v) < delta) {
        color_from_root(h, root, |_| true, color);
        return;
    }
    if let Some(cut) = find_cut_vertex(h, comp) {
        color_through_cut_vertex(h, comp, cut, color);
        return;
    }
    color_two_connected(h, comp, color);
}

/// Vertices reachable from `root` inside `keep`, in BFS order.
fn bfs_order(h: &Graph, root: usize, keep: impl Fn(usize) -> bool) -> Vec<usize> {
    let mut seen = vec![false; h.n()];
    let mut order = vec![root];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &u in h.neighbors(v) {
            if !seen[u] && keep(u) {
                seen[u] = true;
                order.push(u);
                queue.push_back(u);
            }
        }
    }
    order
}

/// Smallest color absent from the already-colored neighbors, in order.
fn greedy(h: &Graph, order: &[usize], color: &mut [usize]) {
    for &v in order {
        let mut used: Vec<usize> = h
            .neighbors(v)
            .iter()
            .map(|&u| color[u])
            .filter(|&c| c != usize::MAX)
            .collect();
        used.sort_unstable();
        used.dedup();
        color[v] = used
            .iter()
            .enumerate()
            .find(|&(i, &c)| i != c)
            .map_or(used.len(), |(i, _)| i);
    }
}

/// Colors the vertices reachable from `root` inside `keep`, farthest first,
/// so that every vertex but the root still has an uncolored neighbor (its
/// BFS parent) when it is colored.
fn color_from_root(h: &Graph, root: usize, keep: impl Fn(usize) -> bool, color: &mut [usize]) {
    let mut order = bfs_order(h, root, keep);
    order.reverse();
    greedy(h, &order, color);
}

fn connected_without(h: &Graph, comp: &[usize], removed: &[usize]) -> bool {
    let Some(&start) = comp.iter().find(|v| !removed.contains(v)) else {
        return true;
    };
    let reached = bfs_order(h, start, |u| !removed.contains(&u)).len();
    reached == comp.len() - removed.len()
}

fn find_cut_vertex(h: &Graph, comp: &[usize]) -> Option<usize> {
    comp.iter()
        .copied()
        .find(|&x| !connected_without(h, comp, &[x]))
}

/// Regular component with a cut vertex `x`: each lobe plus `x` has `x` as a
/// low-degree root; lobes are then recolored so `x` agrees.
fn color_through_cut_vertex(h: &Graph, comp: &[usize], x: usize, color: &mut [usize]) {
    let mut done = vec![false; h.n()];
    done[x] = true;
    for &start in comp {
        if done[start] {
            continue;
        }
        let lobe = bfs_order(h, start, |u| u != x);
        for &u in &lobe {
            done[u] = true;
        }
        let mut in_piece = vec![false; h.n()];
        for &u in &lobe {
            in_piece[u] = true;
        }
        in_piece[x] = true;
        let mut local = vec![usize::MAX; h.n()];
        color_from_root(h, x, |u| in_piece[u], &mut local);
        let cx = local[x];
        for &u in &lobe {
            color[u] = match local[u] {
                c if c == cx => 0,
                0 => cx,
                c => c,
            };
        }
    }
    color[x] = 0;
}

/// 2-connected, regular, not complete, degree at least 3: find `x` with
/// non-adjacent neighbors `y`, `z` such that removing `y` and `z` leaves the
/// component connected. `y` and `z` share a color, and `x` is colored last.
fn color_two_connected(h: &Graph, comp: &[usize], color: &mut [usize]) {
    for &x in comp {
        let nb = h.neighbors(x);
        for (i, &y) in nb.iter().enumerate() {
            for &z in &nb[i + 1..] {
                if h.has_edge(y, z) || !connected_without(h, comp, &[y, z]) {
                    continue;
                }
                color[y] = 0;
                color[z] = 0;
                color_from_root(h, x, |u| u != y && u != z, color);
                return;
            }
        }
    }
    unreachable!("a 2-connected regular non-complete graph has such a triple");
}

/// Number of distinct colors in a coloring.
pub fn color_count(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}
