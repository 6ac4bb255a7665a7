mod common;

use common::{graph_from_masks, random_graph, random_permutation};
use looprank::iso::{canonical_form_unrestricted, contains_induced};
use looprank::{are_isomorphic, canonical_form, rank_graph, SelfLoopGraph, VertexSet};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn graph(max_order: usize) -> impl Strategy<Value = SelfLoopGraph> {
    (1..=max_order).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), 0u64..1 << pairs, 0u64..1 << n).prop_map(|(n, e, l)| graph_from_masks(n, e, l))
    })
}

fn graph_and_subset(max_order: usize) -> impl Strategy<Value = (SelfLoopGraph, VertexSet)> {
    graph(max_order).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), 1u64..1 << n).prop_map(|(g, m)| (g, VertexSet::from_mask(m)))
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    permutations(n - 1)
        .into_iter()
        .flat_map(|p| {
            (0..n).map(move |k| {
                let mut q = p.clone();
                q.insert(k, n - 1);
                q
            })
        })
        .collect()
}

proptest! {
    #[test]
    fn adjacency_matrix_is_symmetric_with_trace_sigma(g in graph(9)) {
        let a = g.adjacency_matrix();
        prop_assert!(a.is_symmetric());
        prop_assert!(a.is_graph_matrix());
        prop_assert_eq!(a.trace() as usize, g.sigma());
    }

    #[test]
    fn join_adds_exactly_the_cross_edges(g1 in graph(5), g2 in graph(4), m in 1u64..32) {
        let a = VertexSet::from_mask(m & ((1 << g1.order()) - 1));
        let j = g1.join_over(&a, &g2).unwrap();
        prop_assert_eq!(j.order(), g1.order() + g2.order());
        prop_assert_eq!(j.edge_count(), g1.edge_count() + g2.edge_count() + a.len() * g2.order());
        prop_assert_eq!(j.sigma(), g1.sigma() + g2.sigma());
    }

    #[test]
    fn induced_subgraph_matrix_is_principal_submatrix((g, u) in graph_and_subset(8)) {
        let h = g.induced(&u).unwrap();
        prop_assert_eq!(h.adjacency_matrix(), g.adjacency_matrix().submatrix(u.as_slice()));
        prop_assert!(rank_graph(&h) <= rank_graph(&g));
    }

    #[test]
    fn rank_and_canonical_form_are_relabeling_invariant(g in graph(8), seed in any::<u64>()) {
        let p = random_permutation(&mut StdRng::seed_from_u64(seed), g.order());
        let h = g.permute(&p);
        prop_assert_eq!(rank_graph(&g), rank_graph(&h));
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(are_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn canonical_form_decodes_to_an_isomorphic_graph(g in graph(8)) {
        let c = canonical_form(&g).unwrap();
        let back = c.to_graph();
        prop_assert_eq!(canonical_form(&back).unwrap(), c);
        prop_assert_eq!(back.sigma(), g.sigma());
        prop_assert_eq!(back.edge_count(), g.edge_count());
    }

    #[test]
    fn block_search_agrees_with_full_search(g in graph(6)) {
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form_unrestricted(&g).unwrap());
    }

    #[test]
    fn induced_containment_finds_an_isomorphic_copy((g, u) in graph_and_subset(7), seed in any::<u64>()) {
        let h = g.induced(&u).unwrap();
        let p = random_permutation(&mut StdRng::seed_from_u64(seed), h.order());
        let found = contains_induced(&h.permute(&p), &g).expect("a copy exists");
        let copy = g.induced(&found).unwrap();
        prop_assert!(are_isomorphic(&copy, &h).unwrap());
        prop_assert!(rank_graph(&copy) <= rank_graph(&g));
    }

    #[test]
    fn isomorphism_is_an_equivalence(a in graph(5), seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let b = a.permute(&random_permutation(&mut rng, a.order()));
        let c = b.permute(&random_permutation(&mut rng, a.order()));
        prop_assert!(are_isomorphic(&a, &a).unwrap());
        prop_assert_eq!(are_isomorphic(&a, &b).unwrap(), are_isomorphic(&b, &a).unwrap());
        prop_assert!(are_isomorphic(&a, &c).unwrap());
    }

    #[test]
    fn cluster_lengths_and_gaps_cover_the_cycle(n in 3usize..=12, m in 1u64..4096) {
        let mask = m & ((1 << n) - 1);
        prop_assume!(mask != 0);
        let g = SelfLoopGraph::cycle(n).unwrap().with_loop_mask(mask).unwrap();
        let d = g.cluster_decomposition().unwrap();
        prop_assert_eq!(d.sigma(), g.sigma());
        if g.sigma() < n {
            let covered: usize = d.clusters.iter().map(|c| c.len).sum::<usize>() + d.gaps.iter().map(|g| g - 1).sum::<usize>();
            prop_assert_eq!(covered, n);
            prop_assert!(d.gaps.iter().all(|&x| x >= 2));
        }
    }
}

#[test]
fn exhaustive_relabeling_invariance_up_to_order_five() {
    for n in 1..=5 {
        let perms = permutations(n);
        let pairs = n * (n - 1) / 2;
        for edges in 0u64..1 << pairs {
            for loops in [0u64, 1, (1 << n) - 1, 0b101 & ((1 << n) - 1)] {
                let g = graph_from_masks(n, edges, loops);
                let (r, c) = (rank_graph(&g), canonical_form(&g).unwrap());
                for p in &perms {
                    let h = g.permute(p);
                    assert_eq!(rank_graph(&h), r);
                    assert_eq!(canonical_form(&h).unwrap(), c);
                }
            }
        }
    }
}

#[test]
fn canonical_forms_separate_classes_up_to_order_four() {
    // two labeled graphs share a canonical form iff some relabeling maps one onto the other
    for n in 1..=4 {
        let perms = permutations(n);
        let pairs = n * (n - 1) / 2;
        let all: Vec<SelfLoopGraph> = (0u64..1 << pairs)
            .flat_map(|e| (0u64..1 << n).map(move |l| graph_from_masks(n, e, l)))
            .collect();
        for g in &all {
            let orbit: std::collections::BTreeSet<String> =
                perms.iter().map(|p| looprank::io::to_json(&g.permute(p))).collect();
            for h in &all {
                let same = canonical_form(g).unwrap() == canonical_form(h).unwrap();
                assert_eq!(same, orbit.contains(&looprank::io::to_json(h)));
            }
        }
    }
}

#[test]
fn cycles_are_vertex_transitive() {
    for n in 3..=10 {
        let c = SelfLoopGraph::cycle(n).unwrap();
        let forms: std::collections::BTreeSet<_> =
            (0..n).map(|v| canonical_form(&c.with_loops(&[v].into()).unwrap()).unwrap()).collect();
        assert_eq!(forms.len(), 1, "C_{n}");
    }
}

#[test]
fn induced_subgraphs_never_raise_rank() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=7);
        let g = random_graph(&mut rng, n);
        let u = VertexSet::from_mask(rng.gen_range(1u64..1 << n));
        let h = g.induced(&u).unwrap();
        assert!(rank_graph(&h) <= rank_graph(&g), "{g:?} {u}");
    }
}
