mod common;

use common::*;
use proptest::prelude::*;
use sigdom::bounds::{certify_all, BoundId};
use sigdom::graph::{canonical_form, from_graph6, parse_edge_list, to_edge_list};
use sigdom::solvers::{
    gamma_st, gamma_t, gamma_tuple_t, is_limited_packing, is_open_packing, is_tlp, is_tuple_tds, is_valid_stdf,
    limited_packing, oracle_gamma_st, partition_stats, rho_open, total_limited_packing,
};
use sigdom::{Graph, SignedFunction, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn max_degree(g: &Graph) -> usize {
    g.vertices().map(|v| g.degree(v)).max().unwrap_or(0)
}

fn min_degree(g: &Graph) -> usize {
    g.vertices().map(|v| g.degree(v)).min().unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graph6_round_trip(g in graph(24)) {
        let s = g.to_graph6().unwrap();
        let back = from_graph6(s.as_bytes()).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.to_graph6().unwrap(), s);
    }

    #[test]
    fn edge_list_round_trip(g in graph(16)) {
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_with_perm(9)) {
        let h = g.permuted(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(g.is_isomorphic(&h));
    }

    #[test]
    fn reformulation_identity(g in graph(10)) {
        // n - 2 max{|L| : |N(v) ∩ L| <= ⌈deg(v)/2⌉ - 1}, by brute force over L.
        let adj = adjacency(&g);
        let n = g.n();
        let reformulated = if min_degree(&g) == 0 {
            None
        } else {
            (0u32..1 << n)
                .filter(|&l| adj.iter().all(|nv| {
                    let hit = nv.iter().filter(|&&u| l >> u & 1 == 1).count() as i64;
                    hit < (nv.len() as i64 + 1) / 2
                }))
                .map(|l| n as i64 - 2 * l.count_ones() as i64)
                .min()
        };
        prop_assert_eq!(reformulated, oracle_gamma_st(&g).unwrap().value);
        prop_assert_eq!(gamma_st(&g).unwrap().value, reformulated);
    }

    #[test]
    fn witnesses_attain_their_values(g in graph(12)) {
        let st = gamma_st(&g).unwrap();
        if let Some(v) = st.value {
            let f = st.signs().unwrap();
            prop_assert!(is_valid_stdf(&g, &f));
            prop_assert_eq!(f.weight(), v);
        } else {
            prop_assert!(min_degree(&g) == 0);
        }
        for k in 1..=3 {
            let r = gamma_tuple_t(&g, k).unwrap();
            prop_assert_eq!(r.feasible, min_degree(&g) >= k);
            if let Some(v) = r.value {
                let d = r.set().unwrap();
                prop_assert!(is_tuple_tds(&g, &d, k));
                prop_assert_eq!(d.len() as i64, v);
            }
        }
        let gt = gamma_t(&g).unwrap();
        prop_assert_eq!(gt.value, gamma_tuple_t(&g, 1).unwrap().value);
        let rho = rho_open(&g).unwrap();
        prop_assert!(is_open_packing(&g, &rho.set().unwrap()));
        for k in 0..=3 {
            let r = total_limited_packing(&g, k).unwrap();
            let l = r.set().unwrap();
            prop_assert!(is_tlp(&g, &l, k));
            prop_assert_eq!(l.len() as i64, r.expect_value());
            if k == 1 {
                prop_assert_eq!(r.value, rho.value);
            }
        }
        for k in 1..=3 {
            let r = limited_packing(&g, k).unwrap();
            prop_assert!(is_limited_packing(&g, &r.set().unwrap(), k));
        }
    }

    #[test]
    fn ladders_and_monotone_caps(g in graph(10)) {
        let n = g.n() as i64;
        let delta_max = max_degree(&g);
        let values: Vec<i64> = (0..=delta_max + 1)
            .map(|k| total_limited_packing(&g, k).unwrap().expect_value())
            .collect();
        for k in 0..=delta_max {
            prop_assert!(values[k] <= values[k + 1]);
            if values[k] < n {
                prop_assert!(values[k + 1] > values[k]);
            }
            prop_assert_eq!(values[k] == n, k >= delta_max);
        }
        prop_assert_eq!(values[delta_max + 1], n);

        let delta_min = min_degree(&g);
        let tuples: Vec<Option<i64>> = (1..=delta_min + 1).map(|k| gamma_tuple_t(&g, k).unwrap().value).collect();
        for k in 2..=delta_min {
            let (lo, hi) = (tuples[k - 2].unwrap(), tuples[k - 1].unwrap());
            prop_assert!(hi > lo);
        }
        prop_assert_eq!(tuples[delta_min], None);
    }

    #[test]
    fn signed_weight_has_parity_of_order(g in graph(12)) {
        if let Some(v) = gamma_st(&g).unwrap().value {
            prop_assert_eq!((v - g.n() as i64).rem_euclid(2), 0);
        }
    }

    #[test]
    fn partition_stats_are_consistent(g in graph(12), mask in any::<u64>()) {
        let n = g.n();
        let f = SignedFunction::from_negatives(VertexSet::from_bits(n, mask & ((1u64 << n) - 1)).unwrap());
        let s = partition_stats(&g, &f);
        prop_assert_eq!(s.plus + s.minus, n);
        prop_assert_eq!(s.plus_even + s.plus_odd, s.plus);
        prop_assert_eq!(s.minus_even + s.minus_odd, s.minus);
        prop_assert_eq!(s.edges_plus + s.edges_minus + s.cross, g.m());
        prop_assert_eq!(f.weight(), s.plus as i64 - s.minus as i64);
    }

    #[test]
    fn applicable_bounds_hold(g in graph(9)) {
        for rep in certify_all(&g).unwrap() {
            if rep.id == BoundId::TotalDomination {
                // The max-degree term is known to fail on some graphs; the
                // acceptance suite reports it. The γ_t term must hold.
                let term = rep.checks.iter().find(|c| c.name == "total_domination_term");
                prop_assert!(term.is_none_or(|c| c.holds), "{:?}", rep);
                continue;
            }
            prop_assert!(!rep.violated(), "{} on {}: {:?}", rep.id, g.to_graph6().unwrap(), rep);
        }
    }
}
