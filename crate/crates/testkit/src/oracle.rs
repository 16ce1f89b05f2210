use dgp_core::reductions::Rx3cInstance;
use dgp_core::{Graph, Partition, Rat};

use crate::{Result, TestkitError};

pub const ORACLE_PARTITION_MAX_N: usize = 10;
pub const ORACLE_SUBSET_MAX_N: usize = 16;

fn limit(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(TestkitError::TooLarge { what, n, max });
    }
    Ok(())
}

/// Calls `f` once per set partition of `0..n`, as a list of blocks, in
/// restricted-growth order.
pub fn for_each_partition(n: usize, mut f: impl FnMut(&[Vec<usize>])) {
    fn go(v: usize, n: usize, blocks: &mut Vec<Vec<usize>>, f: &mut dyn FnMut(&[Vec<usize>])) {
        if v == n {
            f(blocks);
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(v);
            go(v + 1, n, blocks, f);
            blocks[i].pop();
        }
        blocks.push(vec![v]);
        go(v + 1, n, blocks, f);
        blocks.pop();
    }
    go(0, n, &mut Vec::new(), &mut f);
}

/// Edges with both ends in `block`, counted pair by pair.
fn edges_within(g: &Graph, block: &[usize]) -> usize {
    let mut count = 0;
    for (i, &u) in block.iter().enumerate() {
        for &v in &block[i + 1..] {
            if g.neighbors(u).contains(&v) {
                count += 1;
            }
        }
    }
    count
}

/// The densest partition by exhaustive enumeration, first in
/// restricted-growth order among ties.
pub fn oracle_best_partition(g: &Graph) -> Result<(Partition, Rat)> {
    let n = g.n();
    limit("oracle_best_partition", n, ORACLE_PARTITION_MAX_N)?;
    if n == 0 {
        return Err(dgp_core::DgpError::EmptyGraph.into());
    }
    let mut best: Option<(Vec<Vec<usize>>, Rat)> = None;
    for_each_partition(n, |blocks| {
        let d: Rat = blocks
            .iter()
            .map(|b| Rat::frac(edges_within(g, b) as i64, b.len() as i64))
            .sum();
        if best.as_ref().is_none_or(|(_, bd)| d > *bd) {
            best = Some((blocks.to_vec(), d));
        }
    });
    let (blocks, d) = best.expect("at least one partition");
    Ok((Partition::new(n, blocks)?, d))
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect()
}

/// Size of a maximum matching, by recursion on the lowest unmatched vertex.
pub fn oracle_max_matching(g: &Graph) -> Result<usize> {
    limit("oracle_max_matching", g.n(), ORACLE_SUBSET_MAX_N)?;
    fn go(free: u32, adj: &[u32]) -> usize {
        if free == 0 {
            return 0;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        let mut best = go(rest, adj);
        let mut cand = adj[v] & rest;
        while cand != 0 {
            let u = cand.trailing_zeros();
            cand &= cand - 1;
            best = best.max(1 + go(rest & !(1 << u), adj));
        }
        best
    }
    let full = if g.n() == 0 { 0 } else { u32::MAX >> (32 - g.n()) };
    Ok(go(full, &masks(g)))
}

/// Size of a smallest dominating set, trying all subsets.
pub fn oracle_min_dominating_set(g: &Graph) -> Result<usize> {
    let n = g.n();
    limit("oracle_min_dominating_set", n, ORACLE_SUBSET_MAX_N)?;
    let closed: Vec<u32> = masks(g)
        .into_iter()
        .enumerate()
        .map(|(v, m)| m | 1 << v)
        .collect();
    let full: u32 = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let best = (0..=full)
        .filter(|&s| {
            let covered = (0..n)
                .filter(|&v| s >> v & 1 == 1)
                .fold(0u32, |c, v| c | closed[v]);
            covered == full
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0);
    Ok(best)
}

/// Whether some subfamily covers every element exactly once.
pub fn oracle_exact_cover(inst: &Rx3cInstance) -> Result<bool> {
    let sets = inst.sets();
    limit("oracle_exact_cover", sets.len(), ORACLE_SUBSET_MAX_N)?;
    let x = inst.universe();
    let masks: Vec<u64> = sets
        .iter()
        .map(|s| s.iter().fold(0u64, |m, &e| m | 1 << e))
        .collect();
    let full: u64 = (1u64 << x) - 1;
    Ok((0u32..1 << sets.len()).any(|chosen| {
        let mut union = 0u64;
        let mut total = 0;
        for (j, m) in masks.iter().enumerate() {
            if chosen >> j & 1 == 1 {
                union |= m;
                total += 3;
            }
        }
        union == full && total == x
    }))
}

/// Largest number of edges crossing a 2-cut.
pub fn oracle_max_cut(g: &Graph) -> Result<usize> {
    let n = g.n();
    limit("oracle_max_cut", n, ORACLE_SUBSET_MAX_N)?;
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| g.neighbors(u).iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
        .collect();
    let sides: u32 = if n == 0 { 1 } else { 1 << (n - 1) };
    Ok((0..sides)
        .map(|s| {
            edges
                .iter()
                .filter(|&&(u, v)| (s >> u & 1) != (s >> v & 1))
                .count()
        })
        .max()
        .unwrap_or(0))
}
