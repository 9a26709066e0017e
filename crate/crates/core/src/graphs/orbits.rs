//! Automorphism groups, orbits and the canonical-augmentation test.

use std::collections::{BTreeSet, HashSet, VecDeque};

use super::canon::{canonicalize, Canonical};
use super::graph::{Permutation, SmallGraph};

/// A permutation group given by generators, acting on `{0, .., n-1}`.
#[derive(Clone, Debug)]
pub struct AutGroup {
    n: usize,
    generators: Vec<Permutation>,
}

impl AutGroup {
    pub fn from_generators(n: usize, generators: Vec<Permutation>) -> Self {
        AutGroup { n, generators }
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The orbit of an unordered pair under the group, as normalized pairs.
    pub fn pair_orbit(&self, e: (usize, usize)) -> BTreeSet<(usize, usize)> {
        let start = normalize(e);
        let mut orbit = BTreeSet::from([start]);
        let mut frontier = VecDeque::from([start]);
        while let Some((u, v)) = frontier.pop_front() {
            for p in &self.generators {
                let img = normalize((p.apply(u), p.apply(v)));
                if orbit.insert(img) {
                    frontier.push_back(img);
                }
            }
        }
        orbit
    }

    /// One representative per orbit among `items`: the lexicographic minimum
    /// of each orbit. Every returned pair is a member of `items`.
    pub fn orbit_representatives(&self, items: &[(usize, usize)]) -> Vec<(usize, usize)> {
        let item_set: BTreeSet<(usize, usize)> = items.iter().map(|&e| normalize(e)).collect();
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut reps = Vec::new();
        // items iterate in ascending order, so the first unseen member of
        // each orbit is that orbit's minimum within the item set
        for &e in &item_set {
            if seen.contains(&e) {
                continue;
            }
            reps.push(e);
            for member in self.pair_orbit(e) {
                seen.insert(member);
            }
        }
        reps
    }

    /// Whole-group enumeration by closure over the generators. Only intended
    /// for testing and selfchecking on small groups; panics beyond the cap.
    pub fn order(&self) -> u64 {
        const CAP: usize = 4_000_000;
        let identity = Permutation::identity(self.n);
        let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
        let mut frontier = VecDeque::from([identity]);
        while let Some(p) = frontier.pop_front() {
            for g in &self.generators {
                let q = g.compose(&p);
                if !seen.contains(&q) {
                    assert!(
                        seen.len() < CAP,
                        "automorphism group exceeds enumeration cap"
                    );
                    seen.insert(q.clone());
                    frontier.push_back(q);
                }
            }
        }
        seen.len() as u64
    }
}

fn normalize(e: (usize, usize)) -> (usize, usize) {
    if e.0 <= e.1 {
        e
    } else {
        (e.1, e.0)
    }
}

/// Decides whether the augmented graph `y = x + e` was reached along the
/// canonical route: `e` must lie in the automorphism orbit of the designated
/// last edge, the lexicographically greatest edge of the canonical form
/// pulled back through the canonicalizing relabelling.
///
/// Augmentation enumerators accept a child exactly when this holds, which
/// yields every isomorphism class exactly once.
pub fn is_canonical_augmentation(y: &SmallGraph, e: (usize, usize)) -> bool {
    is_canonical_augmentation_with(&canonicalize(y), e)
}

/// As [`is_canonical_augmentation`], reusing an already computed
/// canonicalization of `y`.
pub fn is_canonical_augmentation_with(y_can: &Canonical, e: (usize, usize)) -> bool {
    let canon_edges = y_can.graph.edges();
    let last = *canon_edges
        .last()
        .expect("augmented graph has at least one edge");
    let inverse = y_can.relabelling.inverse();
    let pullback = normalize((inverse.apply(last.0), inverse.apply(last.1)));
    if pullback == normalize(e) {
        return true;
    }
    y_can
        .aut_group()
        .pair_orbit(pullback)
        .contains(&normalize(e))
}
