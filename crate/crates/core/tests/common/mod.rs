#![allow(dead_code)]

use looprank::SelfLoopGraph;
use rand::Rng;

/// Rank over ℚ by Gaussian elimination on reduced fractions.
pub fn fraction_rank(rows: &[Vec<i64>]) -> usize {
    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 { a.abs() } else { gcd(b, a % b) }
    }
    fn reduce((p, q): (i128, i128)) -> (i128, i128) {
        let g = gcd(p, q).max(1);
        let s = if q < 0 { -1 } else { 1 };
        (s * p / g, s * q / g)
    }
    let n = rows.len();
    let m = rows.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<(i128, i128)>> =
        rows.iter().map(|r| r.iter().map(|&x| (x as i128, 1)).collect()).collect();
    let mut rank = 0;
    for col in 0..m {
        let Some(p) = (rank..n).find(|&r| a[r][col].0 != 0) else { continue };
        a.swap(rank, p);
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == rank || row[col].0 == 0 {
                continue;
            }
            let (fp, fq) = reduce((row[col].0 * pivot_row[col].1, row[col].1 * pivot_row[col].0));
            for (x, &(yp, yq)) in row.iter_mut().zip(&pivot_row) {
                let (xp, xq) = *x;
                *x = reduce((xp * yq * fq - yp * fp * xq, xq * yq * fq));
            }
        }
        rank += 1;
    }
    rank
}

/// Labeled graph from an upper-triangle edge mask (pairs in row-major order)
/// and a loop mask.
pub fn graph_from_masks(n: usize, edge_mask: u64, loop_mask: u64) -> SelfLoopGraph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let edges = pairs.iter().enumerate().filter(|(k, _)| edge_mask >> k & 1 == 1).map(|(_, &e)| e);
    let loops = (0..n).filter(|v| loop_mask >> v & 1 == 1);
    SelfLoopGraph::from_edges(n, edges, loops).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize) -> SelfLoopGraph {
    let pairs = n * (n - 1) / 2;
    let p = rng.gen_range(0.1..0.9);
    let edge_mask = (0..pairs).filter(|_| rng.gen_bool(p)).fold(0u64, |m, k| m | 1 << k);
    let loop_mask = rng.gen_range(0u64..1 << n);
    graph_from_masks(n, edge_mask, loop_mask)
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
