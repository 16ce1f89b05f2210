//! Exact maximum-density partition by branch and bound.
//!
//! The search grows one block at a time: the lowest unassigned vertex `v`
//! opens a block, and every admissible block containing `v` is tried. With
//! `prune_connected` only connected blocks are generated (splitting a
//! disconnected block never lowers the density). All arithmetic is done on
//! integers scaled by a common multiple of every denominator that can occur,
//! so comparisons are exact.

use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{DgpError, Result};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::report::{Algorithm, SolveReport};

/// Largest vertex count the bitmask search supports.
pub const HARD_MAX_N: usize = 32;

/// Largest block size enumerated when computing per-vertex utility caps.
const UCAP_SIZE: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Refuse graphs with more vertices than this. Must be in `1..=HARD_MAX_N`.
    pub max_n: usize,
    /// Only generate connected blocks.
    pub prune_connected: bool,
    /// Discard branches whose upper bound cannot beat the incumbent.
    pub prune_bound: bool,
    /// Split the first branching level across the rayon pool.
    pub parallel: bool,
    /// Give up with [`DgpError::BudgetExceeded`] after this much wall time.
    pub time_limit: Option<Duration>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_n: 12,
            prune_connected: true,
            prune_bound: true,
            parallel: true,
            time_limit: None,
        }
    }
}

impl SearchConfig {
    pub fn with_max_n(max_n: usize) -> Self {
        SearchConfig {
            max_n,
            ..Self::default()
        }
    }

    /// No pruning at all: every set partition is visited.
    pub fn unpruned(max_n: usize) -> Self {
        SearchConfig {
            max_n,
            prune_connected: false,
            prune_bound: false,
            ..Self::default()
        }
    }
}

/// Maximum-density partition of `g`.
///
/// Among optimal partitions the one with the fewest blocks is returned, ties
/// broken by the lexicographically smallest restricted-growth string. With
/// `prune_connected` the comparison ranges over connected-block partitions
/// only; the optimal density is the same either way.
pub fn solve_exact(g: &Graph, cfg: &SearchConfig) -> Result<SolveReport> {
    if cfg.max_n == 0 || cfg.max_n > HARD_MAX_N {
        return Err(DgpError::InvalidArgument(format!(
            "max_n must be in 1..={HARD_MAX_N}, got {}",
            cfg.max_n
        )));
    }
    let n = g.n();
    if n > cfg.max_n {
        return Err(DgpError::TooLarge { n, max_n: cfg.max_n });
    }
    if n == 0 {
        return Err(DgpError::EmptyGraph);
    }
    let ctx = Ctx::new(g, cfg);
    let seed = ctx.heuristic();
    let shared = Shared {
        best: Mutex::new(seed),
        deadline: cfg.time_limit.map(|t| Instant::now() + t),
    };
    let nodes = ctx.run(&shared, cfg.parallel)?;
    let best = shared.best.into_inner().expect("search worker panicked");
    log::debug!(
        "exact search on n={n}: {nodes} nodes, optimum {} blocks",
        best.k
    );
    let labels: Vec<usize> = best.rgs.iter().map(|&l| l as usize).collect();
    SolveReport::new(g, Partition::from_labels(&labels), Algorithm::Exact, None, true)
}

/// All set partitions of `0..n`, each exactly once, in lexicographic order of
/// their restricted-growth strings. There are Bell(n) of them, so this is only
/// practical for small `n` (Bell(12) is about 4.2 million).
pub fn enumerate_partitions(n: usize) -> RgsPartitions {
    RgsPartitions {
        rgs: vec![0; n],
        max_prefix: vec![0; n],
        started: false,
        done: false,
    }
}

/// Iterator returned by [`enumerate_partitions`].
pub struct RgsPartitions {
    rgs: Vec<usize>,
    // max_prefix[i] = max(rgs[0..i]); rgs[i] may go up to max_prefix[i] + 1.
    max_prefix: Vec<usize>,
    started: bool,
    done: bool,
}

impl RgsPartitions {
    /// Advances and borrows the next restricted-growth string, without
    /// building a [`Partition`].
    pub fn next_rgs(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.rgs);
        }
        let n = self.rgs.len();
        let Some(i) = (1..n).rev().find(|&i| self.rgs[i] <= self.max_prefix[i]) else {
            self.done = true;
            return None;
        };
        self.rgs[i] += 1;
        let m = self.max_prefix[i].max(self.rgs[i]);
        for j in i + 1..n {
            self.rgs[j] = 0;
            self.max_prefix[j] = m;
        }
        Some(&self.rgs)
    }
}

impl Iterator for RgsPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        self.next_rgs().map(Partition::from_labels)
    }
}

#[derive(Clone)]
struct Best {
    value: u128,
    k: usize,
    rgs: Vec<u8>,
}

impl Best {
    /// Total order: higher density, then fewer blocks, then smaller string.
    fn is_beaten_by(&self, value: u128, k: usize, rgs: &[u8]) -> bool {
        use std::cmp::Reverse;
        (value, Reverse(k), Reverse(rgs)) > (self.value, Reverse(self.k), Reverse(&self.rgs[..]))
    }
}

struct Shared {
    best: Mutex<Best>,
    deadline: Option<Instant>,
}

struct Ctx {
    n: usize,
    adj: Vec<u64>,
    connected: bool,
    bound: bool,
    scale: u128,
    /// `inv[s] = scale / s`.
    inv: Vec<u128>,
    /// `h[d][s] = scale * d / (2 max(s, d + 1))`: the most a vertex with `d`
    /// available neighbors can contribute to a block of size at least `s`.
    h: Vec<Vec<u128>>,
    /// Per-vertex cap on utility over every connected block containing it.
    ucap: Vec<u128>,
    /// `tail[s]`: cap on the utility of any block of size at least `s`.
    tail: Vec<u128>,
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn bit(v: usize) -> u64 {
    1u64 << v
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl Ctx {
    fn new(g: &Graph, cfg: &SearchConfig) -> Self {
        let n = g.n();
        let adj: Vec<u64> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0, |m, &u| m | bit(u)))
            .collect();
        // Denominators: block sizes and 2*(sizes) up to 2n, and squares of
        // block sizes up to UCAP_SIZE (all divide 3600).
        let mut scale: u128 = 3600;
        for d in 1..=(2 * n as u128) {
            scale = scale / gcd(scale, d) * d;
        }
        let inv: Vec<u128> = (0..=n as u128)
            .map(|s| scale.checked_div(s).unwrap_or(0))
            .collect();
        let h: Vec<Vec<u128>> = (0..=n as u128)
            .map(|d| {
                (0..=n as u128)
                    .map(|s| scale * d / (2 * s.max(d + 1)))
                    .collect()
            })
            .collect();
        let max_deg = g.max_degree().unwrap_or(0) as u128;
        let tail: Vec<u128> = (0..=n as u128 + 1)
            .map(|s| {
                (s.max(1)..=n as u128)
                    .map(|b| scale * max_deg.min(b - 1) / (2 * b))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut ctx = Ctx {
            n,
            adj,
            connected: cfg.prune_connected,
            bound: cfg.prune_bound,
            scale,
            inv,
            h,
            ucap: Vec::new(),
            tail,
        };
        if ctx.connected && ctx.bound {
            ctx.ucap = (0..n).map(|v| ctx.utility_cap(v)).collect();
        }
        ctx
    }

    fn utility_cap(&self, v: usize) -> u128 {
        let mut best = if self.n > UCAP_SIZE {
            self.tail[UCAP_SIZE + 1]
        } else {
            0
        };
        let all = if self.n == 64 { u64::MAX } else { bit(self.n) - 1 };
        self.small_sets(bit(v), self.adj[v], bit(v), 0, all, &mut |s, e| {
            best = best.max(e as u128 * self.scale / (s * s) as u128);
        });
        best
    }

    /// Connected supersets of `set` inside `pool` with at most UCAP_SIZE
    /// vertices, each reported once with its size and edge count.
    fn small_sets(
        &self,
        set: u64,
        ext: u64,
        excl: u64,
        edges: u32,
        pool: u64,
        f: &mut impl FnMut(u32, u32),
    ) {
        let size = set.count_ones();
        f(size, edges);
        if size as usize == UCAP_SIZE {
            return;
        }
        let mut rest = ext & pool & !excl;
        let mut excl = excl;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            excl |= bit(w);
            let next_ext = (rest | self.adj[w]) & pool & !set & !excl;
            let e = edges + (self.adj[w] & set).count_ones();
            self.small_sets(set | bit(w), next_ext, excl, e, pool, f);
        }
    }

    fn edges_in(&self, set: u64) -> u32 {
        bits(set).map(|u| (self.adj[u] & set).count_ones()).sum::<u32>() / 2
    }

    fn block_value(&self, set: u64) -> u128 {
        self.edges_in(set) as u128 * self.inv[set.count_ones() as usize]
    }

    fn components(&self, rem: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut left = rem;
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let mut grow = 0;
                for u in bits(frontier) {
                    grow |= self.adj[u];
                }
                frontier = grow & left & !comp;
                comp |= frontier;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// Upper bound on the best density of any partition of `comp` into
    /// blocks inside `comp`.
    fn comp_bound(&self, comp: u64) -> u128 {
        let size = comp.count_ones() as usize;
        if size <= 1 {
            return 0;
        }
        let mut twice_e = 0u32;
        let mut deg_bound = 0u128;
        let mut ucap_bound = 0u128;
        for u in bits(comp) {
            let d = (self.adj[u] & comp).count_ones();
            twice_e += d;
            deg_bound += self.h[d as usize][1];
            if self.connected {
                ucap_bound += self.ucap[u];
            }
        }
        let whole = (twice_e / 2) as u128 * self.inv[size];
        let split = (size as u128 - 2) * self.scale / 2;
        let mut b = deg_bound.min(whole.max(split));
        if self.connected {
            b = b.min(ucap_bound);
        }
        b
    }

    /// Local-search incumbent: vertex moves between blocks until no move
    /// raises the density, then blocks split into connected pieces.
    fn heuristic(&self) -> Best {
        let n = self.n;
        let mut label: Vec<usize> = (0..n).collect();
        let mut blocks: Vec<u64> = (0..n).map(bit).collect();
        let mut improved = true;
        while improved {
            improved = false;
            for u in 0..n {
                let from = label[u];
                let base_from = self.block_value(blocks[from]);
                let after_from = self.block_value(blocks[from] & !bit(u));
                let mut best_gain: Option<(u128, usize)> = None;
                let mut targets: Vec<usize> = bits(self.adj[u]).map(|w| label[w]).collect();
                targets.sort_unstable();
                targets.dedup();
                for t in targets {
                    if t == from {
                        continue;
                    }
                    let before = base_from + self.block_value(blocks[t]);
                    let after = after_from + self.block_value(blocks[t] | bit(u));
                    if after > before && best_gain.is_none_or(|(g, _)| after - before > g) {
                        best_gain = Some((after - before, t));
                    }
                }
                if best_gain.is_none() && blocks[from] != bit(u) && after_from > base_from {
                    // Leaving to a fresh singleton helps.
                    let empty = (0..n).find(|&i| blocks[i] == 0).expect("a block is free");
                    best_gain = Some((after_from - base_from, empty));
                }
                if let Some((_, t)) = best_gain {
                    blocks[from] &= !bit(u);
                    blocks[t] |= bit(u);
                    label[u] = t;
                    improved = true;
                }
            }
        }
        let mut pieces: Vec<u64> = Vec::new();
        for &b in blocks.iter().filter(|&&b| b != 0) {
            for c in self.components(b) {
                pieces.push(c);
            }
        }
        pieces.sort_unstable_by_key(|b| b.trailing_zeros());
        let mut rgs = vec![0u8; n];
        let mut value = 0;
        for (i, &b) in pieces.iter().enumerate() {
            value += self.block_value(b);
            for u in bits(b) {
                rgs[u] = i as u8;
            }
        }
        Best {
            value,
            k: pieces.len(),
            rgs,
        }
    }

    fn run(&self, shared: &Shared, parallel: bool) -> Result<u64> {
        let all = if self.n == 64 { u64::MAX } else { bit(self.n) - 1 };
        let mut root = Worker::new(self, shared);
        if !parallel {
            root.node(all, 0);
            return root.finish();
        }
        // Collect the admissible first blocks, then search below each one
        // independently. The incumbent is shared; the result depends only on
        // the total order, not on scheduling.
        root.collect_firsts = Some(Vec::new());
        root.node(all, 0);
        let firsts = root.collect_firsts.take().unwrap_or_default();
        let mut nodes = root.finish()?;
        let counts: Vec<Result<u64>> = firsts
            .par_iter()
            .map(|&first| {
                let mut w = Worker::new(self, shared);
                for u in bits(first) {
                    w.labels[u] = 0;
                }
                w.k = 1;
                let value = self.block_value(first);
                w.node(all & !first, value);
                w.finish()
            })
            .collect();
        for c in counts {
            nodes += c?;
        }
        Ok(nodes)
    }
}

struct Worker<'a> {
    ctx: &'a Ctx,
    shared: &'a Shared,
    labels: Vec<u8>,
    k: usize,
    best: Best,
    nodes: u64,
    aborted: bool,
    collect_firsts: Option<Vec<u64>>,
}

impl<'a> Worker<'a> {
    fn new(ctx: &'a Ctx, shared: &'a Shared) -> Self {
        let best = shared.best.lock().expect("search worker panicked").clone();
        Worker {
            ctx,
            shared,
            labels: vec![u8::MAX; ctx.n],
            k: 0,
            best,
            nodes: 0,
            aborted: false,
            collect_firsts: None,
        }
    }

    fn finish(self) -> Result<u64> {
        if self.aborted {
            Err(DgpError::BudgetExceeded { nodes: self.nodes })
        } else {
            Ok(self.nodes)
        }
    }

    /// Pulls a better incumbent found by another worker; checks the clock.
    fn refresh(&mut self) {
        {
            let shared = self.shared.best.lock().expect("search worker panicked");
            if self.best.is_beaten_by(shared.value, shared.k, &shared.rgs) {
                self.best.clone_from(&shared);
            }
        }
        if let Some(deadline) = self.shared.deadline {
            if Instant::now() > deadline {
                self.aborted = true;
            }
        }
    }

    /// Counts a search step; true once the search has been aborted.
    fn tick(&mut self) -> bool {
        if !self.aborted {
            self.nodes += 1;
            if self.nodes.is_multiple_of(4096) {
                self.refresh();
            }
        }
        self.aborted
    }

    fn offer(&mut self, value: u128) {
        if !self.best.is_beaten_by(value, self.k, &self.labels) {
            return;
        }
        self.best.value = value;
        self.best.k = self.k;
        self.best.rgs.clone_from(&self.labels);
        let mut shared = self.shared.best.lock().expect("search worker panicked");
        if shared.is_beaten_by(value, self.k, &self.labels) {
            shared.clone_from(&self.best);
        }
    }

    /// True if nothing below a branch with this bound, at least `kmin`
    /// blocks, and fixed labels on `0..fixed` can beat the incumbent.
    fn hopeless(&self, bound: u128, kmin: usize, fixed: usize) -> bool {
        if !self.ctx.bound {
            return false;
        }
        let best = &self.best;
        bound < best.value
            || (bound == best.value
                && (kmin > best.k
                    || (kmin == best.k && self.labels[..fixed] > best.rgs[..fixed])))
    }

    fn node(&mut self, rem: u64, acc: u128) {
        if self.tick() {
            return;
        }
        if rem == 0 {
            self.offer(acc);
            return;
        }
        let ctx = self.ctx;
        let v = rem.trailing_zeros() as usize;
        let comps = if ctx.connected {
            ctx.components(rem)
        } else {
            vec![rem]
        };
        let pool = comps[0];
        debug_assert!(pool & bit(v) != 0);
        let mut others = 0u128;
        if ctx.bound {
            others = comps[1..].iter().map(|&c| ctx.comp_bound(c)).sum();
            if self.hopeless(acc + ctx.comp_bound(pool) + others, self.k + comps.len(), v) {
                return;
            }
        }
        let mut deg = [0u8; HARD_MAX_N];
        let mut pool_deg_sum = 0u128;
        let mut pool_ucap_sum = 0u128;
        for u in bits(pool) {
            let d = (ctx.adj[u] & pool).count_ones() as usize;
            deg[u] = d as u8;
            if ctx.bound {
                pool_deg_sum += ctx.h[d][1];
                if ctx.connected {
                    pool_ucap_sum += ctx.ucap[u];
                }
            }
        }
        let frame = Frame {
            rem,
            pool,
            acc,
            others,
            kmin: self.k + comps.len(),
            v,
            deg,
            pool_deg_sum,
            pool_ucap_sum,
        };
        let label = self.k as u8;
        self.labels[v] = label;
        self.k += 1;
        let ext = if ctx.connected { ctx.adj[v] & pool } else { pool & !bit(v) };
        self.grow(&frame, bit(v), ext, bit(v), 0);
        self.k -= 1;
        self.labels[v] = u8::MAX;
    }

    /// Bound on `acc + d(B) + best(rest)` over blocks `B ⊇ set` in the pool.
    fn growth_bound(&self, f: &Frame, set: u64, edges: u32) -> u128 {
        let ctx = self.ctx;
        let s = set.count_ones() as usize;
        let c = f.pool.count_ones() as usize;
        let mut deg_bound = f.pool_deg_sum;
        let mut min_ucap = u128::MAX;
        let mut set_ucap = 0u128;
        for u in bits(set) {
            let d = f.deg[u] as usize;
            deg_bound = deg_bound - ctx.h[d][1] + ctx.h[d][s];
            if ctx.connected {
                min_ucap = min_ucap.min(ctx.ucap[u]);
                set_ucap += ctx.ucap[u];
            }
        }
        let missing = (s * (s - 1) / 2) as u128 - edges as u128;
        let mut b = deg_bound.min((c as u128 - 1) * ctx.scale / 2 - missing * ctx.inv[c]);
        if ctx.connected {
            let util = min_ucap.min(ctx.tail[s]);
            b = b.min(s as u128 * util + f.pool_ucap_sum - set_ucap);
        }
        f.acc + f.others + b
    }

    fn grow(&mut self, f: &Frame, set: u64, ext: u64, excl: u64, edges: u32) {
        if self.tick() {
            return;
        }
        if self.ctx.bound && self.hopeless(self.growth_bound(f, set, edges), f.kmin, f.v) {
            return;
        }
        let ctx = self.ctx;
        for u in bits(set) {
            self.labels[u] = (self.k - 1) as u8;
        }
        let value = edges as u128 * ctx.inv[set.count_ones() as usize];
        if let Some(firsts) = self.collect_firsts.as_mut() {
            firsts.push(set);
        } else {
            self.node(f.rem & !set, f.acc + value);
        }
        for u in bits(set & !bit(f.v)) {
            self.labels[u] = u8::MAX;
        }
        let mut rest = ext;
        let mut excl = excl;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            excl |= bit(w);
            let nbrs = if ctx.connected { ctx.adj[w] & f.pool } else { 0 };
            let next_ext = (rest | nbrs) & !set & !excl;
            let e = edges + (ctx.adj[w] & set).count_ones();
            self.grow(f, set | bit(w), next_ext, excl, e);
        }
    }
}

struct Frame {
    rem: u64,
    pool: u64,
    acc: u128,
    others: u128,
    kmin: usize,
    v: usize,
    deg: [u8; HARD_MAX_N],
    pool_deg_sum: u128,
    pool_ucap_sum: u128,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::partition_density;
    use crate::rational::Rat;
    use proptest::prelude::*;

    fn serial(cfg: SearchConfig) -> SearchConfig {
        SearchConfig {
            parallel: false,
            ..cfg
        }
    }

    #[test]
    fn bell_numbers() {
        let bell = [1usize, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
        for (n, &b) in bell.iter().enumerate() {
            let mut it = enumerate_partitions(n);
            let mut count = 0;
            while it.next_rgs().is_some() {
                count += 1;
            }
            assert_eq!(count, b, "Bell({n})");
        }
    }

    #[test]
    fn enumerated_partitions_are_distinct_and_valid() {
        let all: Vec<Partition> = enumerate_partitions(5).collect();
        assert_eq!(all.len(), 52);
        let set: std::collections::HashSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), 52);
        assert!(all.iter().all(|p| Partition::new(5, p.blocks().to_vec()).is_ok()));
    }

    #[test]
    fn small_optima() {
        let cfg = SearchConfig::default();
        let k4 = solve_exact(&Graph::complete(4), &cfg).unwrap();
        assert_eq!(k4.density, Rat::frac(3, 2));
        assert_eq!(k4.partition.len(), 1);
        assert!(k4.optimal);

        let c5 = solve_exact(&Graph::cycle(5).unwrap(), &cfg).unwrap();
        assert_eq!(c5.density, Rat::frac(7, 6));
        assert_eq!(c5.partition.blocks(), &[vec![0, 1, 2], vec![3, 4]]);

        let k23 = solve_exact(&Graph::complete_bipartite(2, 3), &cfg).unwrap();
        assert_eq!(k23.density, Rat::frac(6, 5));
        assert_eq!(k23.partition.len(), 1);
    }

    #[test]
    fn cliques_stay_whole() {
        for n in 1..=10 {
            let r = solve_exact(&Graph::complete(n), &SearchConfig::default()).unwrap();
            assert_eq!(r.density, Rat::frac(n as i64 - 1, 2));
            assert_eq!(r.partition.len(), 1);
        }
    }

    #[test]
    fn edgeless_graph_is_all_singletons() {
        let r = solve_exact(&Graph::empty(6), &SearchConfig::default()).unwrap();
        assert!(r.density.is_zero());
        assert_eq!(r.partition.len(), 6);
    }

    #[test]
    fn size_limits() {
        let g = Graph::cycle(13).unwrap();
        assert_eq!(
            solve_exact(&g, &SearchConfig::default()),
            Err(DgpError::TooLarge { n: 13, max_n: 12 })
        );
        assert!(solve_exact(&g, &SearchConfig::with_max_n(33)).is_err());
        assert!(solve_exact(&g, &SearchConfig::with_max_n(13)).is_ok());
        assert_eq!(
            solve_exact(&Graph::empty(0), &SearchConfig::default()),
            Err(DgpError::EmptyGraph)
        );
    }

    #[test]
    fn time_limit_reports_budget() {
        // A 3-regular 30-vertex graph takes far longer than a microsecond.
        let n = 30;
        let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        edges.extend((0..n / 2).map(|i| (i, i + n / 2)));
        let g = Graph::from_edges(n, &edges).unwrap();
        let cfg = SearchConfig {
            max_n: 32,
            time_limit: Some(Duration::from_micros(1)),
            parallel: false,
            ..SearchConfig::default()
        };
        match solve_exact(&g, &cfg) {
            Err(DgpError::BudgetExceeded { .. }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    fn brute_force(g: &Graph) -> Rat {
        let mut best = Rat::zero();
        for p in enumerate_partitions(g.n()) {
            let d = partition_density(g, &p).unwrap();
            if d > best {
                best = d;
            }
        }
        best
    }

    fn random_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |mask| {
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
                Graph::from_edges(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn prunes_do_not_change_the_optimum(g in random_graph(8)) {
            let full = solve_exact(&g, &serial(SearchConfig::unpruned(8))).unwrap();
            prop_assert_eq!(&full.density, &brute_force(&g));
            for (conn, bound) in [(true, false), (false, true), (true, true)] {
                let cfg = SearchConfig {
                    prune_connected: conn,
                    prune_bound: bound,
                    ..SearchConfig::with_max_n(8)
                };
                let r = solve_exact(&g, &serial(cfg)).unwrap();
                prop_assert_eq!(&r.density, &full.density);
            }
        }

        #[test]
        fn bound_pruning_keeps_the_tie_break(g in random_graph(9)) {
            for conn in [false, true] {
                let plain = SearchConfig { prune_connected: conn, prune_bound: false, ..SearchConfig::with_max_n(9) };
                let pruned = SearchConfig { prune_bound: true, ..plain.clone() };
                let a = solve_exact(&g, &serial(plain)).unwrap();
                let b = solve_exact(&g, &serial(pruned.clone())).unwrap();
                let c = solve_exact(&g, &pruned).unwrap();
                prop_assert_eq!(&a.partition, &b.partition);
                prop_assert_eq!(&b.partition, &c.partition);
            }
        }

        #[test]
        fn unpruned_tie_break_is_fewest_blocks_then_rgs(g in random_graph(7)) {
            let r = solve_exact(&g, &serial(SearchConfig::unpruned(7))).unwrap();
            let mut best: Option<(Rat, usize, Vec<usize>)> = None;
            for p in enumerate_partitions(g.n()) {
                let key = (partition_density(&g, &p).unwrap(), p.len(), p.rgs());
                let better = match &best {
                    None => true,
                    Some((d, k, s)) => key.0 > *d || (key.0 == *d && (key.1 < *k || (key.1 == *k && key.2 < *s))),
                };
                if better {
                    best = Some(key);
                }
            }
            prop_assert_eq!(r.partition.rgs(), best.unwrap().2);
        }
    }
}
