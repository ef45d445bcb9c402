use girthlab::graph::{
    boost_girth, count_short_cycles, generate_random_cubic, girth, load_edge_list, save_edge_list, CubicGraph,
};
use proptest::prelude::*;

fn is_cycle_in(g: &CubicGraph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    k >= 3 && sorted.len() == k && (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k]))
}

/// Smallest length with at least one cycle, by brute-force enumeration.
fn brute_girth(g: &CubicGraph, cap: usize) -> Option<usize> {
    (3..=cap).find(|&l| count_short_cycles(g, l + 1) > count_short_cycles(g, l))
}

#[test]
fn triangle_count_matches_pairing_model_mean() {
    // Triangles in a random cubic graph are asymptotically Poisson(4/3).
    let samples = 1000;
    let counts: Vec<f64> =
        (0..samples).map(|s| count_short_cycles(&generate_random_cubic(100, s).unwrap(), 4) as f64).collect();
    let mean = counts.iter().sum::<f64>() / samples as f64;
    let var = counts.iter().map(|c| (c - mean).powi(2)).sum::<f64>() / (samples as f64 - 1.0);
    let sigma = (var / samples as f64).sqrt();
    assert!((mean - 4.0 / 3.0).abs() <= 3.0 * sigma, "mean {mean}, sigma {sigma}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generated_graphs_are_valid_and_girth_is_exact(half in 2usize..20, seed in any::<u64>()) {
        let g = generate_random_cubic(2 * half, seed).unwrap();
        prop_assert!(g.validate().is_ok());
        prop_assert!(g.is_cubic());
        let rep = girth(&g);
        prop_assert_eq!(rep.girth, brute_girth(&g, 2 * half));
        let w = rep.girth_witness.unwrap();
        prop_assert!(is_cycle_in(&g, &w));
        if let Some(odd) = rep.odd_witness {
            prop_assert!(is_cycle_in(&g, &odd) && odd.len() % 2 == 1);
            prop_assert_eq!(Some(odd.len()), rep.odd_girth);
        }
    }

    #[test]
    fn boosting_preserves_degrees_and_never_adds_short_cycles(
        half in 5usize..20,
        target in 4usize..7,
        seed in any::<u64>(),
        steps in 0usize..200,
    ) {
        let g = generate_random_cubic(2 * half, seed).unwrap();
        let before = count_short_cycles(&g, target);
        let out = boost_girth(&g, target, steps, seed ^ 1).unwrap();
        prop_assert_eq!(out.graph.n(), g.n());
        prop_assert!(out.graph.is_cubic());
        prop_assert!(out.graph.validate().is_ok());
        let after = count_short_cycles(&out.graph, target);
        prop_assert!(after + out.swaps <= before, "before {} after {} swaps {}", before, after, out.swaps);
        prop_assert_eq!(out.reached, after == 0);
    }

    #[test]
    fn edge_list_round_trip(half in 2usize..30, seed in any::<u64>()) {
        let g = generate_random_cubic(2 * half, seed).unwrap();
        let text = save_edge_list(&g);
        let back = load_edge_list(&text).unwrap();
        prop_assert_eq!(save_edge_list(&back), text);
        prop_assert_eq!(back, g);
    }
}
