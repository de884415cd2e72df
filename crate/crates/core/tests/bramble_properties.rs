mod common;

use common::{brute_min_hitting_set, hits_canonical, spec_strategy};
use linetw_core::bramble::{enumerate_bramble, is_canonical_hitting_set, min_canonical_hitting_set, HittingSet};
use linetw_core::constructions::crossing_edges;
use linetw_core::formulas::{bramble_lower_bound, h_size_regular};
use linetw_core::oracle::exact_treewidth;
use linetw_core::{complete_multipartite, line_graph, MultipartiteSpec};
use proptest::prelude::*;

fn spec_with_subset() -> impl Strategy<Value = (MultipartiteSpec, Vec<bool>, usize)> {
    spec_strategy(5, 4, 7)
        .prop_filter("need three vertices", |s| s.n() >= 3)
        .prop_flat_map(|s| {
            let m = s.cross_pairs();
            let n = s.n();
            (Just(s), proptest::collection::vec(any::<bool>(), m), 0..n)
        })
}

proptest! {
    #[test]
    fn characterisation_matches_definitions((spec, subset, v) in spec_with_subset()) {
        let g = complete_multipartite(&spec);
        let chosen: Vec<usize> = (0..subset.len()).filter(|&i| subset[i]).collect();
        let h = HittingSet::new(&g, chosen, v).unwrap();
        let claimed = is_canonical_hitting_set(&g, &h).unwrap();
        let bramble = enumerate_bramble(&g, v, 8).unwrap();
        prop_assert_eq!(claimed, bramble.iter().all(|s| s.is_hit_by(&g, &h)));
        prop_assert_eq!(claimed, hits_canonical(&g, &subset, v));
    }

    #[test]
    fn minimum_is_a_hitting_set(spec in spec_strategy(4, 4, 9)) {
        prop_assume!(spec.n() >= 3 && spec.k() >= 2);
        let g = complete_multipartite(&spec);
        let min = min_canonical_hitting_set(&spec, spec.default_vertex(), 10).unwrap();
        prop_assert_eq!(min.edges.len(), min.size);
        prop_assert_eq!(crossing_edges(&g, &min.assignment).unwrap(), min.edges.clone());
        let h = HittingSet::new(&g, min.edges.iter().copied(), min.v).unwrap();
        prop_assert!(is_canonical_hitting_set(&g, &h).unwrap());
        prop_assert!(min.size as u64 >= bramble_lower_bound(&spec).unwrap());
    }
}

#[test]
fn minimum_matches_subset_search() {
    for parts in [
        vec![1, 1, 1],
        vec![1, 1, 1, 1],
        vec![2, 2],
        vec![1, 2, 2],
        vec![2, 3],
        vec![1, 1, 3],
        vec![1, 1, 1, 1, 1],
        vec![2, 2, 1],
        vec![3, 3],
        vec![1, 1, 2, 2],
    ] {
        let spec = MultipartiteSpec::new(parts.clone()).unwrap();
        let g = complete_multipartite(&spec);
        for v in 0..spec.n() {
            let min = min_canonical_hitting_set(&spec, v, 10).unwrap();
            assert_eq!(min.size, brute_min_hitting_set(&g, v), "{parts:?} v={v}");
        }
    }
}

#[test]
fn order_bounds_treewidth_from_below() {
    for parts in [
        vec![1, 1, 1, 1, 1],
        vec![2, 2, 2],
        vec![2, 3],
        vec![1, 2, 3],
        vec![3, 3],
        vec![1, 1, 2, 2],
    ] {
        let spec = MultipartiteSpec::new(parts).unwrap();
        let lg = line_graph(&complete_multipartite(&spec)).0;
        let min = min_canonical_hitting_set(&spec, spec.default_vertex(), 10).unwrap();
        assert!(min.treewidth_lower_bound() <= exact_treewidth(&lg).unwrap().value);
    }
}

#[test]
fn regular_orders_follow_the_closed_form() {
    for (c, k) in [
        (1, 3),
        (1, 4),
        (1, 5),
        (1, 6),
        (1, 7),
        (2, 2),
        (2, 3),
        (3, 2),
        (2, 4),
        (4, 2),
        (3, 3),
    ] {
        let spec = MultipartiteSpec::regular(c, k).unwrap();
        let min = min_canonical_hitting_set(&spec, spec.default_vertex(), 10).unwrap();
        assert_eq!(
            min.size as u64,
            h_size_regular(c as u64, k as u64).unwrap().value,
            "c={c} k={k}"
        );
    }
}
