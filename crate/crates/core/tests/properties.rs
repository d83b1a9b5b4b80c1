use proptest::prelude::*;

use tgraph_core::analysis::{
    connected_components, involution_image, is_bipartite, laplacian, laplacian_nullity,
    Bipartiteness,
};
use tgraph_core::graph::{build_tgraph, edges_match_distance_predicate};
use tgraph_core::{d1, GeneratorBounds};

fn bounds_strategy() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(2u32..=8, 1..=4)
}

// Pairwise oracle written independently of the library's metric.
fn brute_edges(bounds: &GeneratorBounds, t: u32) -> Vec<(usize, usize)> {
    let elems = bounds.enumerate_elements();
    let mut out = Vec::new();
    for (i, x) in elems.iter().enumerate() {
        for (j, y) in elems.iter().enumerate().skip(i + 1) {
            let d: u32 = x
                .exponents()
                .iter()
                .zip(y.exponents())
                .map(|(a, b)| a.abs_diff(*b))
                .sum();
            if d == t {
                out.push((i, j));
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn index_round_trip(raw in bounds_strategy()) {
        let b = GeneratorBounds::new(raw.clone()).unwrap();
        prop_assert_eq!(b.element_count(), raw.iter().map(|&e| e as usize).product::<usize>());
        let elems = b.enumerate_elements();
        prop_assert_eq!(elems.len(), b.element_count());
        for (i, x) in elems.iter().enumerate() {
            prop_assert_eq!(b.index_of(x).unwrap(), i);
            prop_assert_eq!(&b.element_at(i).unwrap(), x);
        }
        // lexicographic, first coordinate most significant
        prop_assert!(elems.windows(2).all(|w| w[0].exponents() < w[1].exponents()));
    }

    #[test]
    fn edges_are_exactly_distance_t(raw in bounds_strategy(), t in 1u32..12) {
        let b = GeneratorBounds::new(raw).unwrap();
        let g = build_tgraph(&b, t).unwrap();
        let expected = brute_edges(&b, t);
        prop_assert_eq!(g.edges(), expected.as_slice());
        prop_assert!(edges_match_distance_predicate(&g));
        let again = build_tgraph(&b, t).unwrap();
        prop_assert_eq!(g.to_json(), again.to_json());
    }

    #[test]
    fn diameter_bounds_distances(raw in bounds_strategy()) {
        let b = GeneratorBounds::new(raw).unwrap();
        let elems = b.enumerate_elements();
        let max = elems.iter().map(|x| d1(&elems[0], x).unwrap()).max().unwrap();
        prop_assert_eq!(max, b.diameter());
        prop_assert_eq!(build_tgraph(&b, b.diameter() + 1).unwrap().edge_count(), 0);
    }

    #[test]
    fn union_find_equals_nullity(m in 2u32..=4, n in 2u32..=12, t in 1u32..=16) {
        let g = build_tgraph(&GeneratorBounds::new(vec![m, n]).unwrap(), t).unwrap();
        let (nullity, _) = laplacian_nullity(&laplacian(&g).unwrap());
        prop_assert_eq!(connected_components(&g).len(), nullity);
    }

    #[test]
    fn involution_preserves_edges(n in 2u32..=12, t in 1u32..=12) {
        let b = GeneratorBounds::new(vec![2, n]).unwrap();
        let g = build_tgraph(&b, t).unwrap();
        for &(u, v) in g.edges() {
            let su = b.index_of(&involution_image(&b, &g.element(u)).unwrap()).unwrap();
            let sv = b.index_of(&involution_image(&b, &g.element(v)).unwrap()).unwrap();
            prop_assert!(g.has_edge(su, sv));
        }
    }

    #[test]
    fn bipartite_witness_is_valid(raw in prop::collection::vec(2u32..=6, 1..=3), t in 1u32..8) {
        let g = build_tgraph(&GeneratorBounds::new(raw).unwrap(), t).unwrap();
        match is_bipartite(&g) {
            Bipartiteness::Bipartite { coloring } => {
                prop_assert!(g.edges().iter().all(|&(u, v)| coloring[u] != coloring[v]));
            }
            Bipartiteness::NotBipartite { odd_cycle } => {
                prop_assert!(odd_cycle.len() % 2 == 1);
                for i in 0..odd_cycle.len() {
                    prop_assert!(g.has_edge(odd_cycle[i], odd_cycle[(i + 1) % odd_cycle.len()]));
                }
            }
        }
    }
}
