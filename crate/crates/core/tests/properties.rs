use efl_core::auxgraph::{build_aux, default_spanning_trees, enumerate_spanning_tree_choices, AuxGraphJson};
use efl_core::hypergraph::{generate, parse_hypergraph, uniformize, validate, CanonicalHypergraph, Family};
use efl_core::orientation::{
    complete_orientation, is_vandermonde_completable, orient_g1, orient_g2_pathlike,
    orient_tree_multigraph, sign_of,
};
use efl_core::{AuxGraph, AuxKind, LinearHypergraph, Orientation};
use proptest::prelude::*;

/// Random tree on `k` nodes (each node after the first attaches to an
/// earlier one) and targets `alpha <= n - 1` summing to `(k-1)(n-1)`.
fn tree_and_targets() -> impl Strategy<Value = (usize, usize, Vec<(usize, usize)>, Vec<u32>)> {
    (1usize..=6, 2usize..=6).prop_flat_map(|(k, n)| {
        let parents = proptest::collection::vec(any::<prop::sample::Index>(), k.saturating_sub(1));
        let drops = proptest::collection::vec(any::<prop::sample::Index>(), n - 1);
        (Just(k), Just(n), parents, drops).prop_map(|(k, n, parents, drops)| {
            let edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(c, p)| (p.index(c + 1), c + 1))
                .collect();
            let mut alphas = vec![(n - 1) as u32; k];
            // Remove n - 1 units from nodes that still have some.
            for d in drops {
                let live: Vec<usize> = (0..k).filter(|&v| alphas[v] > 0).collect();
                alphas[live[d.index(live.len())]] -= 1;
            }
            (k, n, edges, alphas)
        })
    })
}

proptest! {
    #[test]
    fn tree_multigraph_hits_targets((k, n, edges, alphas) in tree_and_targets()) {
        let splits = orient_tree_multigraph(k, &edges, &alphas, n).unwrap();
        let mut indeg = vec![0u32; k];
        for (&(a, b), s) in edges.iter().zip(&splits) {
            prop_assert_eq!(s.toward_first + s.toward_second, (n - 1) as u32);
            indeg[a] += s.toward_first;
            indeg[b] += s.toward_second;
        }
        prop_assert_eq!(indeg, alphas);
    }

    #[test]
    fn constructions_are_completable(n in 3usize..=6, seed in 0u64..1000) {
        let h = generate(Family::Random { n }, seed).unwrap();
        for trees in enumerate_spanning_tree_choices(&h, 3).unwrap() {
            let aux = build_aux(&h, &trees, AuxKind::G1).unwrap();
            let o = orient_g1(&aux).unwrap();
            prop_assert!(is_vandermonde_completable(&aux, &o));
            // Every identifier instance is oriented exactly once.
            prop_assert_eq!(o.in_degrees(n).total_degree(), aux.identifier_edge_count() as u64);
        }
        let (g2, o2) = orient_g2_pathlike(&h).unwrap();
        prop_assert!(is_vandermonde_completable(&g2, &o2));
        let full = complete_orientation(&g2, &o2).unwrap();
        let deg = full.in_degrees(n);
        prop_assert!(deg.is_bounded_by(n as u32 - 1));
        prop_assert_eq!(deg.total_degree(), g2.edge_count());
    }

    #[test]
    fn flipping_one_instance_flips_sign(n in 3usize..=5, seed in 0u64..200, pick in any::<prop::sample::Index>()) {
        let h = generate(Family::Random { n }, seed).unwrap();
        let aux = build_aux(&h, &default_spanning_trees(&h).unwrap(), AuxKind::G1).unwrap();
        let full = complete_orientation(&aux, &orient_g1(&aux).unwrap()).unwrap();
        let mut flipped = full.clone();
        let at = pick.index(flipped.instances.len());
        flipped.instances[at] = flipped.instances[at].flipped();
        prop_assert_eq!(sign_of(&flipped), -sign_of(&full));
    }

    #[test]
    fn uniformize_gives_standard_form(sizes in proptest::collection::vec(1usize..=4, 1..=4), extra in 0usize..=2) {
        // Disjoint edges of the given sizes; always linear.
        let mut next = 0;
        let edges: Vec<Vec<String>> = sizes
            .iter()
            .map(|&s| (0..s).map(|_| { next += 1; format!("u{next}") }).collect())
            .collect();
        let n = sizes.len().max(*sizes.iter().max().unwrap()) + extra;
        let h = LinearHypergraph::from_named_edges(n, &edges).unwrap();
        let u = uniformize(&h, n).unwrap();
        prop_assert!(validate(&u).is_standard_form);
        for (orig, padded) in h.edges().iter().zip(u.edges()) {
            for &v in orig {
                let name = &h.vertices()[v];
                prop_assert!(padded.iter().any(|&w| &u.vertices()[w] == name));
            }
        }
    }

    #[test]
    fn serialization_round_trips(n in 2usize..=5, seed in 0u64..100, g2 in any::<bool>()) {
        let h = generate(Family::Random { n }, seed).unwrap();
        let text = h.to_text().unwrap();
        prop_assert_eq!(&parse_hypergraph(&text).unwrap(), &h);
        let json = serde_json::to_string(&h.to_json()).unwrap();
        let back: CanonicalHypergraph = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&LinearHypergraph::from_json(back).unwrap(), &h);

        let kind = if g2 { AuxKind::G2 } else { AuxKind::G1 };
        let aux = build_aux(&h, &default_spanning_trees(&h).unwrap(), kind).unwrap();
        let json = serde_json::to_string(&aux.to_json()).unwrap();
        let back: AuxGraphJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&AuxGraph::from_json(back).unwrap(), &aux);

        if !g2 {
            let o = orient_g1(&aux).unwrap();
            let json = serde_json::to_string(&o).unwrap();
            let back: Orientation = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(back, o);
        }
    }
}
