//! Exact invariants and enumeration checked against slow brute-force
//! oracles that share no code with the implementations.

use std::collections::BTreeSet;

use abs_extremal::graph6;
use abs_extremal::search::{enumerate_classes_relabeled, enumerate_connected, Strategy};
use abs_extremal::{
    abs_index, canonical_form, chromatic_number, edge_contributions, independence_number,
    pendant_count, Graph, GraphInvariants, SearchOptions,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

/// Smallest k such that some assignment of k colours is proper.
fn brute_chromatic(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = adj.len();
    for k in 1..=n {
        let total = k.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let colours: Vec<usize> = (0..n)
                .map(|_| {
                    let x = c % k;
                    c /= k;
                    x
                })
                .collect();
            let proper = (0..n).all(|u| (0..n).all(|v| !adj[u][v] || colours[u] != colours[v]));
            if proper {
                return k;
            }
        }
    }
    unreachable!("n colours always suffice")
}

fn brute_independence(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = adj.len();
    (0u32..1 << n)
        .filter(|s| {
            (0..n).all(|u| (0..n).all(|v| !(s >> u & 1 == 1 && s >> v & 1 == 1 && adj[u][v])))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

fn all_connected_up_to(n_max: usize) -> Vec<Graph> {
    let opts = SearchOptions::default();
    (1..=n_max)
        .flat_map(|n| enumerate_connected(n, &opts).unwrap())
        .collect()
}

#[test]
fn chromatic_and_independence_match_brute_force() {
    for g in all_connected_up_to(6) {
        assert_eq!(
            chromatic_number(&g),
            brute_chromatic(&g),
            "{}",
            graph6::encode(&g)
        );
        assert_eq!(
            independence_number(&g),
            brute_independence(&g),
            "{}",
            graph6::encode(&g)
        );
    }
}

#[test]
fn disconnected_graphs_also_match_brute_force() {
    // every labelled graph on 5 vertices, connected or not
    for mask in 0u128..1 << 10 {
        let g = Graph::from_upper_mask(5, mask).unwrap();
        assert_eq!(chromatic_number(&g), brute_chromatic(&g));
        assert_eq!(independence_number(&g), brute_independence(&g));
    }
}

#[test]
fn invariant_bundle_relations() {
    for g in all_connected_up_to(7) {
        let n = g.order();
        let inv = GraphInvariants::of(&g);
        assert!(inv.connected);
        assert!((1..=n).contains(&inv.chromatic));
        assert_eq!(inv.chromatic == 1, g.edge_count() == 0);
        assert!((1..=n).contains(&inv.independence));
        if n >= 2 {
            assert!(inv.independence < n);
        }
        if n >= 3 {
            assert!(inv.pendants < n);
        }
        assert!(inv.chromatic * inv.independence >= n);
        assert_eq!(inv.pendants, pendant_count(&g));
    }
}

#[test]
fn edge_degree_form_of_index() {
    for g in all_connected_up_to(6) {
        let by_edge_degree: f64 = g
            .edges()
            .map(|e| {
                let de = g.edge_degree(e).unwrap() as f64;
                (1.0 - 2.0 / (de + 2.0)).sqrt()
            })
            .sum();
        assert!((by_edge_degree - abs_index(&g)).abs() <= 1e-12);

        let contributions = edge_contributions(&g);
        assert_eq!(contributions.len(), g.edge_count());
        for c in &contributions {
            assert!(c.value >= 0.0 && c.value < 1.0);
            assert_eq!(c.value == 0.0, c.du == 1 && c.dv == 1);
        }
        let index = abs_index(&g);
        assert!(index >= 0.0);
        assert!(index < g.edge_count().max(1) as f64);
    }
}

#[test]
fn graph6_round_trip_over_enumeration() {
    for g in all_connected_up_to(7) {
        assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
    }
}

/// Labelled enumeration + dedup by a naive canonical form: minimum mask over
/// all n! relabellings.
fn naive_class_count(n: usize) -> usize {
    let mut perms: Vec<Vec<usize>> = vec![vec![]];
    for k in 0..n {
        perms = perms
            .into_iter()
            .flat_map(|p| {
                (0..=k).map(move |i| {
                    let mut q = p.clone();
                    q.insert(i, k);
                    q
                })
            })
            .collect();
    }
    let mut seen = BTreeSet::new();
    for mask in 0u128..1 << (n * (n - 1) / 2) {
        let g = Graph::from_upper_mask(n, mask).unwrap();
        if !g.is_connected() {
            continue;
        }
        let min = perms
            .iter()
            .map(|p| g.relabel(p).unwrap().upper_mask())
            .min()
            .unwrap();
        seen.insert(min);
    }
    seen.len()
}

#[test]
fn class_counts_match_naive_dedup() {
    for n in 1..=5 {
        let fast = enumerate_connected(n, &SearchOptions::default())
            .unwrap()
            .len();
        assert_eq!(fast, naive_class_count(n), "n = {n}");
    }
}

#[test]
fn shuffled_labelled_enumeration_gives_same_classes() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let opts = SearchOptions {
        strategy: Strategy::LabeledMasks,
        workers: 3,
        ..Default::default()
    };
    for n in 2..=6 {
        let identity: Vec<usize> = (0..n).collect();
        let base = enumerate_classes_relabeled(n, &identity, &opts).unwrap();
        for _ in 0..2 {
            let mut perm = identity.clone();
            perm.shuffle(&mut rng);
            let shuffled = enumerate_classes_relabeled(n, &perm, &opts).unwrap();
            assert_eq!(base, shuffled, "n = {n}, perm = {perm:?}");
        }
    }
}

#[test]
fn invariant_buckets_partition_the_classes() {
    for n in 2..=7 {
        let classes = enumerate_connected(n, &SearchOptions::default()).unwrap();
        let invs: Vec<_> = classes.iter().map(GraphInvariants::of).collect();
        let chi: usize = (1..=n)
            .map(|k| invs.iter().filter(|i| i.chromatic == k).count())
            .sum();
        let alpha: usize = (1..=n)
            .map(|k| invs.iter().filter(|i| i.independence == k).count())
            .sum();
        let pend: usize = (0..=n)
            .map(|k| invs.iter().filter(|i| i.pendants == k).count())
            .sum();
        assert_eq!(
            (chi, alpha, pend),
            (classes.len(), classes.len(), classes.len())
        );
        // classes are canonical and distinct
        let forms: BTreeSet<_> = classes.iter().map(canonical_form).collect();
        assert_eq!(forms.len(), classes.len());
    }
}
