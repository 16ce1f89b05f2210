use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dgp_core::reductions::Rx3cInstance;
use dgp_core::Graph;

use crate::{Result, TestkitError};

const MAX_ATTEMPTS: usize = 100_000;

/// A seed; the same seed always yields the same object.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Seeded {
    pub seed: u64,
}

impl Seeded {
    pub fn new(seed: u64) -> Self {
        Seeded { seed }
    }

    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

fn graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Ok(Graph::from_edges(n, edges)?)
}

fn pairing_attempt(n: usize, rng: &mut ChaCha8Rng) -> Option<Vec<(usize, usize)>> {
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    points.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = points
        .chunks(2)
        .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
        .collect();
    if edges.iter().any(|&(u, v)| u == v) {
        return None;
    }
    edges.sort_unstable();
    if edges.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(edges)
}

fn random_cubic(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if n < 4 || n % 2 == 1 {
        return Err(TestkitError::Infeasible(format!(
            "cubic graphs need an even n >= 4, got {n}"
        )));
    }
    for _ in 0..MAX_ATTEMPTS {
        if let Some(edges) = pairing_attempt(n, rng) {
            return graph(n, &edges);
        }
    }
    Err(TestkitError::Infeasible(format!(
        "no simple pairing for n = {n} after {MAX_ATTEMPTS} attempts"
    )))
}

/// A simple cubic graph from the pairing model, rejecting loops and
/// multi-edges.
pub fn gen_random_cubic(n: usize, s: Seeded) -> Result<Graph> {
    random_cubic(n, &mut s.rng())
}

/// As [`gen_random_cubic`], also rejecting disconnected graphs.
pub fn gen_connected_cubic(n: usize, s: Seeded) -> Result<Graph> {
    let mut rng = s.rng();
    for _ in 0..MAX_ATTEMPTS {
        let g = random_cubic(n, &mut rng)?;
        if g.connected_components().len() == 1 {
            return Ok(g);
        }
    }
    Err(TestkitError::Infeasible(format!("no connected cubic graph on {n} vertices")))
}

/// Erdős–Rényi `G(n, p)`.
pub fn gen_gnp(n: usize, p: f64, s: Seeded) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(TestkitError::Infeasible(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = s.rng();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    graph(n, &edges)
}

/// The complement of a random disjoint union of paths and cycles covering
/// all `n` vertices, so the minimum degree is at least `n - 3`.
pub fn gen_min_degree_n3(n: usize, s: Seeded) -> Result<Graph> {
    if n < 3 {
        return Err(TestkitError::Infeasible(format!("need n >= 3, got {n}")));
    }
    let mut rng = s.rng();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges = Vec::new();
    let mut rest = &order[..];
    while !rest.is_empty() {
        let len = rng.gen_range(1..=rest.len());
        let (piece, tail) = rest.split_at(len);
        for w in piece.windows(2) {
            edges.push((w[0].min(w[1]), w[0].max(w[1])));
        }
        if len >= 3 && rng.gen_bool(0.5) {
            edges.push((piece[0].min(piece[len - 1]), piece[0].max(piece[len - 1])));
        }
        rest = tail;
    }
    Ok(graph(n, &edges)?.complement())
}

/// The complement of a random graph of maximum degree at most `t - 1`, so
/// the minimum degree is at least `n - t`. Random pairs are offered a
/// random number of times and kept when both ends still have room.
pub fn gen_min_degree_n_minus(n: usize, t: usize, s: Seeded) -> Result<Graph> {
    if t == 0 || n < 2 {
        return Err(TestkitError::Infeasible(format!("need t >= 1 and n >= 2, got t = {t}, n = {n}")));
    }
    let mut rng = s.rng();
    let mut deg = vec![0usize; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let offers = rng.gen_range(0..=2 * n * t);
    for _ in 0..offers {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let e = (u.min(v), u.max(v));
        if u != v && deg[u] < t - 1 && deg[v] < t - 1 && !edges.contains(&e) {
            deg[u] += 1;
            deg[v] += 1;
            edges.push(e);
        }
    }
    Ok(graph(n, &edges)?.complement())
}

/// A random instance on `3q` elements where each element lies in exactly
/// three sets: the multiset `{x, x, x : x < 3q}` is shuffled and cut into
/// triples, rejecting triples with a repeated element.
pub fn gen_rx3c(q: usize, s: Seeded) -> Result<Rx3cInstance> {
    if q == 0 {
        return Err(TestkitError::Infeasible("q must be at least 1".into()));
    }
    let mut rng = s.rng();
    let mut slots: Vec<usize> = (0..9 * q).map(|i| i / 3).collect();
    for _ in 0..MAX_ATTEMPTS {
        slots.shuffle(&mut rng);
        let sets: Vec<[usize; 3]> = slots.chunks(3).map(|c| [c[0], c[1], c[2]]).collect();
        if sets.iter().all(|s| s[0] != s[1] && s[1] != s[2] && s[0] != s[2]) {
            return Ok(Rx3cInstance::new(q, sets)?);
        }
    }
    Err(TestkitError::Infeasible(format!("no valid instance for q = {q}")))
}

/// `{0,1,2}, {3,4,5}` is an exact cover.
pub fn rx3c_yes_instance() -> Rx3cInstance {
    Rx3cInstance::new(
        2,
        vec![[0, 1, 2], [3, 4, 5], [0, 1, 3], [2, 4, 5], [0, 2, 4], [1, 3, 5]],
    )
    .expect("valid instance")
}

/// No two of these sets are disjoint, so there is no exact cover.
pub fn rx3c_no_instance() -> Rx3cInstance {
    Rx3cInstance::new(
        2,
        vec![[0, 1, 2], [0, 1, 3], [0, 4, 5], [1, 4, 5], [2, 3, 4], [2, 3, 5]],
    )
    .expect("valid instance")
}

pub const NAMED: &[&str] = &[
    "petersen", "prism", "k33", "k4", "c5", "p4", "k23", "k5", "k6-minus-pm", "k6-minus-c5",
    "k5-minus-2e", "cube", "two-diamonds",
];

/// A small named graph; see [`NAMED`].
pub fn gen_named(name: &str) -> Result<Graph> {
    let minus = |n: usize, e: &[(usize, usize)]| graph(n, e).map(|h| h.complement());
    match name {
        "petersen" => {
            let mut e = Vec::new();
            for i in 0..5 {
                e.push((i, (i + 1) % 5));
                e.push((i, i + 5));
                e.push((5 + i, 5 + (i + 2) % 5));
            }
            graph(10, &e)
        }
        "prism" => graph(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        ),
        "k33" => Ok(Graph::complete_bipartite(3, 3)),
        "k23" => Ok(Graph::complete_bipartite(2, 3)),
        "k4" => Ok(Graph::complete(4)),
        "k5" => Ok(Graph::complete(5)),
        "c5" => Ok(Graph::cycle(5)?),
        "p4" => Ok(Graph::path(4)),
        "k6-minus-pm" => minus(6, &[(0, 1), (2, 3), (4, 5)]),
        "k6-minus-c5" => minus(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
        "k5-minus-2e" => minus(5, &[(0, 1), (2, 3)]),
        "cube" => {
            let e: Vec<(usize, usize)> = (0..8usize)
                .flat_map(|v| [1, 2, 4].map(|b| (v, v ^ b)))
                .filter(|&(u, v)| u < v)
                .collect();
            graph(8, &e)
        }
        "two-diamonds" => {
            let mut e = Vec::new();
            for b in [0, 4] {
                e.extend([(b, b + 1), (b, b + 2), (b + 1, b + 2), (b + 1, b + 3), (b + 2, b + 3)]);
            }
            e.extend([(0, 4), (3, 7)]);
            graph(8, &e)
        }
        other => Err(TestkitError::UnknownName(other.to_string())),
    }
}

/// Every graph in [`NAMED`], with its name.
pub fn named_graphs() -> Vec<(&'static str, Graph)> {
    NAMED
        .iter()
        .map(|&name| (name, gen_named(name).expect("named graphs build")))
        .collect()
}
