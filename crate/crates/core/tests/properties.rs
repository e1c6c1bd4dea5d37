use cfcolor::generators::{random_bipartite, random_gnp};
use cfcolor::general::scf_bound;
use cfcolor::oracle::{exact_cf_index, exact_scf_index, OracleBudget};
use cfcolor::{
    bipartite_cf_coloring, bipartite_scf_coloring, check_certificate, general_cf_coloring,
    greedy_vertex_coloring, recursive_scf_coloring, verify_cf, Graph, Side, TwoColoring,
};
use proptest::prelude::*;

/// Some assignment of sides makes every edge cross.
fn brute_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    (0u32..1 << n).any(|mask| g.edges().iter().all(|&(u, v)| (mask >> u & 1) != (mask >> v & 1)))
}

fn is_odd_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    cycle.len() % 2 == 1
        && sorted.len() == cycle.len()
        && (0..cycle.len()).all(|i| g.edge_between(cycle[i], cycle[(i + 1) % cycle.len()]).is_some())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn two_coloring_matches_brute_force(n in 1usize..11, p in 0.0f64..0.6, seed in any::<u64>()) {
        let g = random_gnp(n, p, seed);
        match g.bipartition() {
            TwoColoring::Bipartite(b) => {
                prop_assert!(brute_bipartite(&g));
                prop_assert!(g.edges().iter().all(|&(u, v)| b.side(u) != b.side(v)));
            }
            TwoColoring::OddCycle(c) => {
                prop_assert!(!brute_bipartite(&g));
                prop_assert!(is_odd_cycle(&g, &c), "bad witness {:?}", c);
            }
        }
    }

    #[test]
    fn bipartite_partial_coloring_shape(nx in 1usize..30, ny in 1usize..30, p in 0.05f64..0.6, seed in any::<u64>()) {
        let g = random_bipartite(nx, ny, p, seed);
        prop_assume!(g.edge_count() > 0);
        let b = g.bipartition().bipartite().unwrap();
        let (c, cert) = bipartite_scf_coloring(&g, &b).unwrap();
        prop_assert!(check_certificate(&g, &b, &cert));
        prop_assert!(verify_cf(&g, &c).unwrap().all_satisfied());
        prop_assert!(c.distinct_colors().iter().all(|&x| x == 1 || x == 2));
        for y in b.vertices_on(Side::Y) {
            let colored = g.incident(y).iter().filter(|&&(_, e)| c.get(e).is_some()).count();
            prop_assert_eq!(colored, 1);
        }
        prop_assert_eq!(bipartite_scf_coloring(&g, &b).unwrap(), (c, cert));

        let total = bipartite_cf_coloring(&g).unwrap();
        prop_assert!(total.is_total() && total.colors_used() <= 3);
        prop_assert!(verify_cf(&g, &total).unwrap().all_satisfied());
    }

    #[test]
    fn general_coloring_within_bound(n in 2usize..40, p in 0.05f64..0.9, seed in any::<u64>()) {
        let g = random_gnp(n, p, seed);
        prop_assume!(g.edge_count() > 0);
        let vc = greedy_vertex_coloring(&g);
        let partial = recursive_scf_coloring(&g, &vc).unwrap();
        prop_assert!(verify_cf(&g, &partial).unwrap().all_satisfied());
        prop_assert!(partial.max_color().unwrap_or(0) <= scf_bound(vc.k().max(2)));
        let total = general_cf_coloring(&g).unwrap();
        prop_assert!(total.is_total());
        prop_assert!(total.colors_used() as u32 <= scf_bound(vc.k().max(2)) + 1);
        prop_assert!(verify_cf(&g, &total).unwrap().all_satisfied());
    }

    #[test]
    fn partial_index_sandwiches_total(n in 2usize..7, p in 0.3f64..1.0, seed in any::<u64>()) {
        let g = random_gnp(n, p, seed);
        prop_assume!(g.edge_count() > 0 && g.edge_count() <= 8);
        let m = g.edge_count() as u32;
        let budget = OracleBudget::default();
        let scf = exact_scf_index(&g, m, budget).unwrap().value().unwrap();
        let cf = exact_cf_index(&g, m, budget).unwrap().value().unwrap();
        prop_assert!(scf <= cf && cf <= scf + 1, "scf {} cf {}", scf, cf);
    }
}
