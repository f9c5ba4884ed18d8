use metamour_core::canon::canonical_form;
use metamour_core::constructions::{c5hat, cycle, join_along};
use metamour_core::dynamics::{cycle_power_edges, metamour_period, pseudo_metamour_period};
use metamour_core::graph::{CombineMode, Graph};
use metamour_core::subgraph::subgraph_search;
use metamour_core::verify::enumerate_graphs;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph_strategy(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::build(n, &edges).unwrap()
        })
    })
}

fn permute(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::build(g.n(), &edges).unwrap()
}

proptest! {
    #[test]
    fn canonical_form_is_permutation_invariant(g in graph_strategy(1, 8), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let h = permute(&g, &perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn metamour_is_subgraph_of_complement(g in graph_strategy(1, 10)) {
        let m = g.metamour();
        let c = g.complement();
        prop_assert!(m.edges().iter().all(|&(u, v)| c.has_edge(u, v)));
    }

    #[test]
    fn metamour_distributes_over_union(g in graph_strategy(1, 6), h in graph_strategy(1, 6)) {
        let lhs = g.combine(&h, CombineMode::Union).metamour();
        let rhs = g.metamour().combine(&h.metamour(), CombineMode::Union);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn metamour_of_decorated_odd_cycle(
        n in prop::sample::select(vec![5usize, 7, 9]),
        blocks in proptest::collection::vec(graph_strategy(1, 3), 9),
    ) {
        let blocks = &blocks[..n];
        let g = join_along(&cycle(n), blocks).unwrap();
        let complemented: Vec<Graph> = blocks.iter().map(Graph::complement).collect();
        let shifted = join_along(&cycle_power_edges(n, 1).unwrap(), &complemented).unwrap();
        prop_assert_eq!(g.metamour(), shifted);
    }

    #[test]
    fn joins_along_period2_bases_have_period2(
        base_is_hat in any::<bool>(),
        blocks in proptest::collection::vec(graph_strategy(1, 3), 6),
    ) {
        let g = if base_is_hat {
            join_along(&c5hat(), &blocks).unwrap()
        } else {
            join_along(&cycle(5), &blocks[..5]).unwrap()
        };
        prop_assert_eq!(metamour_period(&g).unwrap(), Some(2));
    }

    #[test]
    fn subgraph_search_returns_real_embeddings(
        g in graph_strategy(1, 8),
        h in graph_strategy(1, 4),
        induced in any::<bool>(),
    ) {
        if let Some(map) = subgraph_search(&g, &h, induced) {
            prop_assert_eq!(map.len(), h.n());
            for (i, &gi) in map.iter().enumerate() {
                for (j, &gj) in map.iter().enumerate().skip(i + 1) {
                    prop_assert_ne!(gi, gj);
                    if h.has_edge(i, j) {
                        prop_assert!(g.has_edge(gi, gj));
                    } else if induced {
                        prop_assert!(!g.has_edge(gi, gj));
                    }
                }
            }
        }
    }

    #[test]
    fn pseudo_period_divides_below_exact_period(g in graph_strategy(1, 6)) {
        if let Some(p) = metamour_period(&g).unwrap() {
            let q = pseudo_metamour_period(&g).unwrap();
            prop_assert!(q.is_some());
            prop_assert!(q.unwrap() <= p);
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    for n in 1..=6 {
        for connected in [false, true] {
            assert_eq!(
                enumerate_graphs(n, connected).unwrap(),
                enumerate_graphs(n, connected).unwrap()
            );
        }
    }
}
