//! Validation of the search-based canonical labelling against brute force.
//!
//! The two labellings make different canonical choices, so they are compared
//! as classifiers: the search form must be invariant under role-preserving
//! relabelling (brute-force invariance is true by construction), and the
//! automorphism group orders must agree exactly, which also certifies that
//! the search's discovered generators generate the full group.

use potts_core::graphs::{
    aut_group, aut_order_brute, canonical_form, canonicalize, role_preserving_permutations,
    Permutation, Role, SmallGraph,
};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// All graphs on `n` plain vertices, by edge-set bitmask.
fn all_plain_graphs(n: usize) -> impl Iterator<Item = SmallGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    (0u32..(1 << pairs.len())).map(move |mask| {
        let mut g = SmallGraph::plain(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                g.add_edge(u, v);
            }
        }
        g
    })
}

fn random_roles(rng: &mut StdRng, n: usize) -> Vec<Role> {
    let palette = [
        Role::Centre,
        Role::Neighbour,
        Role::Boundary,
        Role::Colour,
        Role::Plain,
    ];
    (0..n)
        .map(|_| palette[rng.gen_range(0..palette.len())])
        .collect()
}

fn random_graph(rng: &mut StdRng, n: usize, edge_prob: f64) -> SmallGraph {
    let mut g = SmallGraph::with_roles(random_roles(rng, n));
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(edge_prob) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn random_role_preserving_perm(rng: &mut StdRng, g: &SmallGraph) -> Permutation {
    let mut img: Vec<usize> = (0..g.n()).collect();
    // shuffle within each role class
    for role in [
        Role::Centre,
        Role::Neighbour,
        Role::Boundary,
        Role::Colour,
        Role::Plain,
    ] {
        let positions: Vec<usize> = g.vertices_with_role(role).collect();
        let mut targets = positions.clone();
        targets.shuffle(rng);
        for (&from, &to) in positions.iter().zip(&targets) {
            img[from] = to;
        }
    }
    Permutation::from_images(img)
}

#[test]
fn exhaustive_plain_graphs_up_to_5_vertices() {
    for n in 1..=5 {
        for g in all_plain_graphs(n) {
            let canon = canonicalize(&g);
            assert_eq!(
                canon.aut_group().order(),
                aut_order_brute(&g),
                "group order mismatch on {g:?}"
            );
            // invariance over every role-preserving permutation
            if n <= 4 {
                for p in role_preserving_permutations(&g) {
                    assert_eq!(
                        canonical_form(&g.relabel(&p)),
                        canon.graph,
                        "form not invariant on {g:?} under {p:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn random_roled_graphs_agree_with_brute_force() {
    let mut rng = StdRng::seed_from_u64(0x5eed_cafe);
    for _ in 0..150 {
        let n = rng.gen_range(2..=7);
        let g = random_graph(&mut rng, n, 0.45);
        let canon = canonicalize(&g);
        assert_eq!(
            canon.aut_group().order(),
            aut_order_brute(&g),
            "group order mismatch on {g:?}"
        );
        assert_eq!(g.relabel(&canon.relabelling), canon.graph);
        for _ in 0..6 {
            let p = random_role_preserving_perm(&mut rng, &g);
            assert_eq!(
                canonical_form(&g.relabel(&p)),
                canon.graph,
                "form not invariant on {g:?} under {p:?}"
            );
        }
    }
}

#[test]
fn canonical_form_is_idempotent() {
    let mut rng = StdRng::seed_from_u64(0xfeed_beef);
    for _ in 0..60 {
        let n = rng.gen_range(1..=8);
        let g = random_graph(&mut rng, n, 0.4);
        let c = canonical_form(&g);
        assert_eq!(canonical_form(&c), c);
    }
}

#[test]
fn generators_preserve_roles_and_structure() {
    let mut rng = StdRng::seed_from_u64(0x0dd_ba11);
    for _ in 0..80 {
        let n = rng.gen_range(2..=8);
        let g = random_graph(&mut rng, n, 0.5);
        for phi in canonicalize(&g).generators {
            assert!(phi.preserves_roles(&g));
            assert_eq!(g.relabel(&phi), g);
        }
    }
}

#[test]
fn larger_symmetric_graphs_have_exact_orders() {
    // complete bipartite K_{3,3} on plain vertices: order 2 * (3!)^2 = 72
    let mut k33 = SmallGraph::plain(6);
    for u in 0..3 {
        for v in 3..6 {
            k33.add_edge(u, v);
        }
    }
    assert_eq!(aut_group(&k33).order(), 72);

    // 6-cycle: dihedral group of order 12
    let mut c6 = SmallGraph::plain(6);
    for i in 0..6 {
        c6.add_edge(i, (i + 1) % 6);
    }
    assert_eq!(aut_group(&c6).order(), 12);

    // disjoint union of two edges with distinct roles on one pair
    let mut g = SmallGraph::with_roles(vec![
        Role::Boundary,
        Role::Boundary,
        Role::Colour,
        Role::Colour,
    ]);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    assert_eq!(aut_group(&g).order(), 4);
}
