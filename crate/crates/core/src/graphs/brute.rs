//! Brute-force canonical labelling oracle.
//!
//! Enumerate every role-preserving permutation, relabel, and keep the
//! greatest adjacency table. Exponential, so only usable on small graphs,
//! but its classification (which graphs share a form) is trivially correct;
//! the search-based labelling is validated against it in tests and in the
//! CLI selfcheck.

use super::graph::{Permutation, SmallGraph, ROLE_ORDER};

/// All permutations fixing every role class setwise, in deterministic order.
pub fn role_preserving_permutations(g: &SmallGraph) -> Vec<Permutation> {
    let n = g.n();
    let blocks: Vec<Vec<usize>> = ROLE_ORDER
        .iter()
        .map(|&role| g.vertices_with_role(role).collect::<Vec<usize>>())
        .filter(|block| !block.is_empty())
        .collect();

    let mut block_perms: Vec<Vec<Vec<usize>>> = Vec::new();
    for block in &blocks {
        block_perms.push(permutations_of(block));
    }

    let mut out = Vec::new();
    let mut choice = vec![0usize; block_perms.len()];
    loop {
        let mut img = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            let perm = &block_perms[b][choice[b]];
            for (i, &v) in block.iter().enumerate() {
                img[v] = perm[i];
            }
        }
        out.push(Permutation::from_images(img));

        // odometer increment over the per-block choices
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return out;
            }
            choice[pos] += 1;
            if choice[pos] < block_perms[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// All orderings of `items`, lexicographic in the index sequence.
fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(items.len());
    let mut used = vec![false; items.len()];
    fn rec(
        items: &[usize],
        used: &mut Vec<bool>,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == items.len() {
            out.push(current.clone());
            return;
        }
        for i in 0..items.len() {
            if !used[i] {
                used[i] = true;
                current.push(items[i]);
                rec(items, used, current, out);
                current.pop();
                used[i] = false;
            }
        }
    }
    rec(items, &mut used, &mut current, &mut out);
    out
}

/// Maximal relabelled form over all role-preserving permutations.
///
/// Constant on isomorphism classes by construction. Note this is a
/// different canonical choice than the search-based one; the two agree as
/// classifiers, not byte for byte.
pub fn canonical_form_brute(g: &SmallGraph) -> SmallGraph {
    assert!(g.n() <= 10, "brute-force canonicalization is factorial");
    let mut best: Option<(Vec<u64>, SmallGraph)> = None;
    for perm in role_preserving_permutations(g) {
        let h = g.relabel(&perm);
        let rows: Vec<u64> = (0..h.n()).map(|v| h.neighbours_mask(v)).collect();
        match &best {
            Some((best_rows, _)) if *best_rows >= rows => {}
            _ => best = Some((rows, h)),
        }
    }
    best.expect("at least the identity permutation exists").1
}

/// Automorphism count by exhaustive check.
pub fn aut_order_brute(g: &SmallGraph) -> u64 {
    assert!(
        g.n() <= 10,
        "brute-force automorphism counting is factorial"
    );
    role_preserving_permutations(g)
        .into_iter()
        .filter(|p| g.relabel(p) == *g)
        .count() as u64
}
