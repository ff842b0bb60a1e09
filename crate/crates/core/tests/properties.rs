//! Structural invariants of k-power graphs, checked against brute force.

use std::collections::BTreeMap;

use proptest::prelude::*;

use kpower::analysis::{analyze, degree_cyclic, is_perfect};
use kpower::chair::{degree_profile, solve_chairs, ChairConfig};
use kpower::graph::{ComponentShape, KPowerGraph};
use kpower::verify::fixed_points_cover_edges;
use kpower::{FiniteGroup, GroupSpec};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn group_spec() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        (1..=120u64).prop_map(GroupSpec::Cyclic),
        (1..=60u64).prop_map(GroupSpec::Dihedral),
        (2..=30u64).prop_map(GroupSpec::Quaternion),
        (1..=5u32).prop_map(GroupSpec::Symmetric),
        prop::collection::vec(2..=6u64, 2..=3).prop_map(GroupSpec::Product),
    ]
}

/// A group with an exponent in `2..=o(G) + 1`.
fn cell() -> impl Strategy<Value = (FiniteGroup, u64)> {
    group_spec().prop_flat_map(|spec| {
        let g = FiniteGroup::build(spec).unwrap();
        let top = g.order() as u64 + 1;
        (Just(g), 2..=top)
    })
}

fn cyclic(n: u64, k: u64) -> KPowerGraph {
    KPowerGraph::build(&FiniteGroup::build(GroupSpec::Cyclic(n)).unwrap(), k).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn edges_match_pairwise_scan((g, k) in cell()) {
        let gr = KPowerGraph::build(&g, k).unwrap();
        let n = g.order();
        let pw: Vec<usize> = g.elements().map(|x| g.power(x, k).unwrap().index()).collect();
        let mut brute = vec![];
        for x in 0..n {
            for y in x + 1..n {
                if pw[x] == y || pw[y] == x {
                    brute.push((x, y));
                }
            }
        }
        prop_assert_eq!(gr.edges(), brute);
        prop_assert!(gr.edge_count() < n);
    }

    #[test]
    fn components_partition_vertices_and_edges((g, k) in cell()) {
        let gr = KPowerGraph::build(&g, k).unwrap();
        let comps = gr.components();
        let mut seen: Vec<usize> = comps.iter().flat_map(|c| c.vertices.iter().copied()).collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..g.order()).collect::<Vec<_>>());
        prop_assert_eq!(comps.iter().map(|c| c.edge_count).sum::<usize>(), gr.edge_count());
        for c in &comps {
            prop_assert!(c.edge_count <= c.vertex_count);
            let (v, e) = (c.vertex_count, c.edge_count);
            let consistent = match c.shape {
                ComponentShape::Isolated => (v, e) == (1, 0),
                ComponentShape::K2 => (v, e) == (2, 1),
                ComponentShape::Cycle { length } => v == length && e == length && length >= 3,
                ComponentShape::Tree => v >= 3 && e + 1 == v,
                ComponentShape::Unicyclic { cycle_length } => e == v && cycle_length >= 3 && cycle_length < v,
            };
            prop_assert!(consistent, "{:?} with {} vertices and {} edges", c.shape, v, e);
        }
    }

    #[test]
    fn lagrange_and_iterated_products((g, k) in cell()) {
        let n = g.order() as u64;
        let e = g.identity();
        for x in g.elements() {
            prop_assert_eq!(g.power(x, n).unwrap(), e);
        }
        let k = k % 13;
        for x in g.elements() {
            let mut acc = e;
            for _ in 0..k {
                acc = g.op(acc, x).unwrap();
            }
            prop_assert_eq!(g.power(x, k).unwrap(), acc);
        }
    }

    #[test]
    fn analysis_criteria_agree_with_graph((g, k) in cell()) {
        let r = analyze(&g, k).unwrap();
        prop_assert_eq!(r.edge_count_formula, r.edges as u64);
        prop_assert!(r.clique_number <= 3 && r.chromatic_number <= 3);
        prop_assert_eq!(r.clique_number == 3, r.clique_criterion_holds);
        prop_assert_eq!(r.is_forest, r.forest_criterion_holds);
        prop_assert_eq!(r.is_empty, r.empty_criterion_holds);
        prop_assert_eq!(r.is_connected, r.connectivity_criterion_holds);
        if let (Some(d), Some(b)) = (r.diameter, r.diameter_bound) {
            prop_assert!(d as u64 <= b);
        }
    }
}

#[test]
fn degree_formula_matches_brute_force_degrees() {
    let mut mismatches = vec![];
    for n in 1..=512u64 {
        for k in 2..(n + 1).min(64) {
            let gr = cyclic(n, k);
            for a in 0..n {
                let f = degree_cyclic(n, k, a);
                if f != gr.degree(a as usize) as u64 {
                    mismatches.push((n, k, a, f, gr.degree(a as usize)));
                }
            }
        }
    }
    assert!(
        mismatches.is_empty(),
        "{} mismatched vertices, first (n, k, a, formula, graph) = {:?}",
        mismatches.len(),
        mismatches[0]
    );
}

fn elementary(gr: &KPowerGraph) -> bool {
    gr.components().iter().all(|c| c.shape.is_elementary())
}

#[test]
fn coprime_exponents_give_only_isolated_k2_and_cycles() {
    for n in 1..=200u64 {
        for k in (2..=n + 1).filter(|&k| gcd(n, k) == 1) {
            assert!(elementary(&cyclic(n, k)), "n={n} k={k}");
        }
    }
}

#[test]
fn non_coprime_exponents_leave_a_non_elementary_component() {
    let failures: Vec<(u64, u64)> = (1..=200u64)
        .flat_map(|n| (2..=n + 1).map(move |k| (n, k)))
        .filter(|&(n, k)| gcd(n, k) > 1 && elementary(&cyclic(n, k)))
        .collect();
    assert!(
        failures.is_empty(),
        "{} non-coprime (n, k) with only isolated, K2 and cycle components, first {:?}",
        failures.len(),
        failures[0]
    );
}

#[test]
fn non_coprime_exponents_leave_a_non_elementary_component_unless_fixed_points_cover_edges() {
    for n in 1..=200u64 {
        for k in (2..=n + 1).filter(|&k| gcd(n, k) > 1) {
            let gr = cyclic(n, k);
            if gr.edge_count() > 0 && !fixed_points_cover_edges(&gr) {
                assert!(!elementary(&gr), "n={n} k={k}");
            }
        }
    }
}

/// Whether some induced cycle of odd length at least 5 exists.
fn has_odd_induced_cycle(adj: &[Vec<bool>]) -> bool {
    fn extend(adj: &[Vec<bool>], path: &mut Vec<usize>, on: &mut [bool]) -> bool {
        let s = path[0];
        let last = *path.last().unwrap();
        for w in s + 1..adj.len() {
            if on[w] || !adj[last][w] {
                continue;
            }
            // no chords to interior path vertices
            let interior = if path.len() > 2 { &path[1..path.len() - 1] } else { &[][..] };
            if interior.iter().any(|&p| adj[p][w]) {
                continue;
            }
            if adj[s][w] {
                if path.len() >= 2 && (path.len() + 1) % 2 == 1 && path.len() + 1 >= 5 {
                    return true;
                }
                if path.len() >= 2 {
                    continue;
                }
            }
            path.push(w);
            on[w] = true;
            let found = extend(adj, path, on);
            on[w] = false;
            path.pop();
            if found {
                return true;
            }
        }
        false
    }
    let n = adj.len();
    (0..n).any(|s| {
        let mut on = vec![false; n];
        on[s] = true;
        extend(adj, &mut vec![s], &mut on)
    })
}

#[test]
fn perfection_matches_odd_hole_and_antihole_scan() {
    for n in 1..=64u64 {
        for k in 2..=n + 1 {
            let gr = cyclic(n, k);
            let m = n as usize;
            let adj: Vec<Vec<bool>> = (0..m).map(|u| (0..m).map(|v| gr.has_edge(u, v)).collect()).collect();
            let co: Vec<Vec<bool>> = (0..m).map(|u| (0..m).map(|v| u != v && !adj[u][v]).collect()).collect();
            let brute = !has_odd_induced_cycle(&adj) && !has_odd_induced_cycle(&co);
            assert_eq!(is_perfect(&gr), brute, "n={n} k={k}");
        }
    }
}

#[test]
fn induced_cycle_search_finds_known_obstructions() {
    let ring = |m: usize| -> Vec<Vec<bool>> {
        (0..m)
            .map(|u| (0..m).map(|v| (u + 1) % m == v || (v + 1) % m == u).collect())
            .collect()
    };
    assert!(has_odd_induced_cycle(&ring(5)));
    assert!(has_odd_induced_cycle(&ring(7)));
    assert!(!has_odd_induced_cycle(&ring(6)));
    let c7 = ring(7);
    let anti: Vec<Vec<bool>> = (0..7).map(|u| (0..7).map(|v| u != v && !c7[u][v]).collect()).collect();
    assert!(!has_odd_induced_cycle(&ring(3)));
    // an odd antihole shows up as a hole of its complement only
    assert!(!has_odd_induced_cycle(&anti));
}

#[test]
fn chair_degree_profiles_are_functional() {
    for n in 1..=150u64 {
        for k in 2..=n + 1 {
            let p = degree_profile(n, k).unwrap();
            assert!(p.iter().all(|d| d.1 == 1));
            assert_eq!(p.iter().map(|d| d.0 as u64).sum::<u64>(), n);
        }
    }
}

#[test]
fn coprime_seating_cycles_match_graph_components() {
    for n in 1..=200u64 {
        let sol = solve_chairs(ChairConfig::new(n).unwrap()).unwrap();
        let mut seen = vec![false; n as usize];
        let mut perm_cycles: BTreeMap<usize, usize> = BTreeMap::new();
        for s in 0..n as usize {
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = sol.seating[x];
                len += 1;
            }
            if len > 0 {
                *perm_cycles.entry(len).or_default() += 1;
            }
        }
        let mut graph_cycles: BTreeMap<usize, usize> = BTreeMap::new();
        for c in cyclic(n, sol.minimal_k).components() {
            let len = match c.shape {
                ComponentShape::Isolated => 1,
                ComponentShape::K2 => 2,
                ComponentShape::Cycle { length } => length,
                other => panic!("n={n}: {other:?} in a bijective power graph"),
            };
            *graph_cycles.entry(len).or_default() += 1;
        }
        assert_eq!(perm_cycles, graph_cycles, "n={n}");
    }
}
