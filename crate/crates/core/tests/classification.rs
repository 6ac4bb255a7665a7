mod common;

use std::collections::BTreeSet;

use common::{fraction_rank, graph_from_masks};
use looprank::enumerate::{self_loop_graph_classes, simple_graph_classes};
use looprank::iso::canonical_form_unrestricted;
use looprank::verify::classify_rank3;
use looprank::{CanonicalForm, SelfLoopGraph};

fn connected(g: &SelfLoopGraph) -> bool {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for (w, s) in seen.iter_mut().enumerate() {
            if g.has_edge(v, w) && !*s {
                *s = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn triangle_free(g: &SelfLoopGraph) -> bool {
    let n = g.order();
    (0..n).all(|a| (a + 1..n).all(|b| (b + 1..n).all(|c| !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)))))
}

/// Canonical forms of every labeled graph of order `n` passing `keep`.
fn brute_force_classes(n: usize, keep: impl Fn(&SelfLoopGraph) -> bool) -> BTreeSet<CanonicalForm> {
    let pairs = n * (n - 1) / 2;
    let mut out = BTreeSet::new();
    for edges in 0u64..1 << pairs {
        let simple = graph_from_masks(n, edges, 0);
        if !connected(&simple) {
            continue;
        }
        for loops in 0u64..1 << n {
            let g = graph_from_masks(n, edges, loops);
            if keep(&g) {
                out.insert(canonical_form_unrestricted(&g).unwrap());
            }
        }
    }
    out
}

#[test]
fn class_enumeration_matches_brute_force() {
    for n in 1..=5 {
        let expected = brute_force_classes(n, |_| true);
        let got: BTreeSet<_> = self_loop_graph_classes(n, false, false)
            .unwrap()
            .iter()
            .map(|g| canonical_form_unrestricted(g).unwrap())
            .collect();
        assert_eq!(got, expected, "n={n}");
    }
}

#[test]
fn connected_simple_graph_counts() {
    let expected = [1, 1, 2, 6, 21, 112, 853];
    for (n, &want) in (1..=7).zip(&expected) {
        let got = simple_graph_classes(n, false).unwrap().iter().filter(|g| g.is_connected()).count();
        assert_eq!(got, want, "n={n}");
    }
}

#[test]
fn rank3_survivors_match_brute_force() {
    for n in 4..=6 {
        let expected = brute_force_classes(n, |g| {
            triangle_free(g) && g.edge_count() >= n && fraction_rank(&g.adjacency_matrix().to_rows()) == 3
        });
        let (_, survivors) = classify_rank3(n, true, true, false).unwrap();
        let got: BTreeSet<_> = survivors.iter().map(|s| s.canonical).collect();
        assert_eq!(got, expected, "order {n}");
        assert_eq!(survivors.len(), got.len());
    }
}

#[test]
fn unrestricted_survivors_include_the_restricted_ones() {
    let (_, all) = classify_rank3(5, false, false, false).unwrap();
    let (_, restricted) = classify_rank3(5, true, true, false).unwrap();
    let all: BTreeSet<_> = all.iter().map(|s| s.canonical).collect();
    assert!(restricted.iter().all(|s| all.contains(&s.canonical)));
    assert!(all.len() > restricted.len());
}
