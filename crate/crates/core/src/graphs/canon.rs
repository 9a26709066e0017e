//! Canonical labelling by individualisation and refinement.
//!
//! The search maintains an ordered partition of the vertices, initially the
//! role classes in block order. Cells are refined to equitability by
//! neighbour counts; when cells remain, the first non-singleton cell is
//! branched on, one child per orbit of its vertices under the automorphisms
//! discovered so far. Each fully discrete partition (leaf) is a candidate
//! labelling; the canonical form is the lexicographically greatest relabelled
//! adjacency table over all leaves, and pairs of leaves with equal tables
//! yield automorphism generators.
//!
//! Discovered automorphisms prune sibling branches, which is what makes the
//! search tractable on local views: their colour vertices alone would
//! otherwise contribute up to 12! equivalent leaves.

use std::collections::VecDeque;

use super::graph::{Permutation, SmallGraph, ROLE_ORDER};
use super::orbits::AutGroup;

/// Result of canonicalizing a graph.
#[derive(Clone, Debug)]
pub struct Canonical {
    /// The canonical form: `graph = input.relabel(&relabelling)`.
    pub graph: SmallGraph,
    /// Maps input vertex ids to canonical positions.
    pub relabelling: Permutation,
    /// Role-preserving automorphism generators of the input graph.
    pub generators: Vec<Permutation>,
}

impl Canonical {
    pub fn aut_group(&self) -> AutGroup {
        AutGroup::from_generators(self.relabelling.len(), self.generators.clone())
    }
}

pub fn canonicalize(g: &SmallGraph) -> Canonical {
    let mut search = Search {
        g,
        n: g.n(),
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let (mut order, mut cell_end, mut queue) = initial_partition(g);
    refine(g, &mut order, &mut cell_end, &mut queue);
    let mut base = Vec::new();
    search.explore(&order, &cell_end, &mut base);
    let best = search.best.expect("search always reaches a leaf");
    Canonical {
        graph: g.relabel(&best.labelling),
        relabelling: best.labelling,
        generators: search.generators,
    }
}

pub fn canonical_form(g: &SmallGraph) -> SmallGraph {
    canonicalize(g).graph
}

pub fn aut_group(g: &SmallGraph) -> AutGroup {
    canonicalize(g).aut_group()
}

struct Leaf {
    rows: Vec<u64>,
    labelling: Permutation,
}

struct Search<'g> {
    g: &'g SmallGraph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Permutation>,
}

impl<'g> Search<'g> {
    fn explore(&mut self, order: &[usize], cell_end: &[bool], base: &mut Vec<usize>) {
        let target = first_non_singleton(order, cell_end);
        let (start, end) = match target {
            None => {
                self.process_leaf(order);
                return;
            }
            Some(cell) => cell,
        };

        let mut candidates: Vec<usize> = order[start..=end].to_vec();
        candidates.sort_unstable();
        let mut handled: Vec<usize> = Vec::new();

        for w in candidates {
            if self.in_handled_orbit(w, &handled, base) {
                handled.push(w);
                continue;
            }

            let mut child_order = order.to_vec();
            let mut child_cell_end = cell_end.to_vec();
            let pos = child_order[start..=end]
                .iter()
                .position(|&x| x == w)
                .expect("candidate drawn from this cell")
                + start;
            child_order[start..=pos].rotate_right(1);
            child_cell_end[start] = true;
            let mut queue = VecDeque::from([1u64 << w]);
            refine(self.g, &mut child_order, &mut child_cell_end, &mut queue);

            base.push(w);
            self.explore(&child_order, &child_cell_end, base);
            base.pop();
            handled.push(w);
        }
    }

    /// True iff `w` is equivalent to an already explored sibling under the
    /// subgroup of discovered automorphisms fixing the current base
    /// pointwise. Exploring it again could not improve the best leaf nor
    /// yield generators outside the group already being assembled.
    fn in_handled_orbit(&self, w: usize, handled: &[usize], base: &[usize]) -> bool {
        if handled.is_empty() || self.generators.is_empty() {
            return false;
        }
        let applicable: Vec<&Permutation> = self
            .generators
            .iter()
            .filter(|p| base.iter().all(|&b| p.apply(b) == b))
            .collect();
        if applicable.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(self.n);
        for p in applicable {
            for v in 0..self.n {
                uf.union(v, p.apply(v));
            }
        }
        let root = uf.find(w);
        handled.iter().any(|&h| uf.find(h) == root)
    }

    fn process_leaf(&mut self, order: &[usize]) {
        let mut positions = vec![0usize; self.n];
        for (i, &v) in order.iter().enumerate() {
            positions[v] = i;
        }
        let rows: Vec<u64> = order
            .iter()
            .map(|&v| {
                self.g
                    .neighbours(v)
                    .fold(0u64, |m, u| m | (1 << positions[u]))
            })
            .collect();
        let labelling = Permutation::from_images(positions);

        if self.first.is_none() {
            self.first = Some(Leaf {
                rows: rows.clone(),
                labelling: labelling.clone(),
            });
            self.best = Some(Leaf { rows, labelling });
            return;
        }

        let first = self.first.as_ref().unwrap();
        if rows == first.rows {
            let phi = first.labelling.inverse().compose(&labelling);
            self.record_automorphism(phi);
        } else {
            let best = self.best.as_ref().unwrap();
            if rows == best.rows {
                let phi = best.labelling.inverse().compose(&labelling);
                self.record_automorphism(phi);
            }
        }
        if rows > self.best.as_ref().unwrap().rows {
            self.best = Some(Leaf { rows, labelling });
        }
    }

    fn record_automorphism(&mut self, phi: Permutation) {
        if phi.is_identity() {
            return;
        }
        debug_assert!(
            self.g.relabel(&phi) == *self.g,
            "leaf equality must give an automorphism"
        );
        if !self.generators.contains(&phi) {
            self.generators.push(phi);
        }
    }
}

fn first_non_singleton(order: &[usize], cell_end: &[bool]) -> Option<(usize, usize)> {
    let mut start = 0;
    for i in 0..order.len() {
        if cell_end[i] {
            if i > start {
                return Some((start, i));
            }
            start = i + 1;
        }
    }
    None
}

/// Builds the role-block partition: vertices grouped by role in canonical
/// block order, ascending ids inside each block. Returns the refinement
/// queue seeded with every block.
fn initial_partition(g: &SmallGraph) -> (Vec<usize>, Vec<bool>, VecDeque<u64>) {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut cell_end = vec![false; n];
    let mut queue = VecDeque::new();
    for role in ROLE_ORDER {
        let block: Vec<usize> = g.vertices_with_role(role).collect();
        if block.is_empty() {
            continue;
        }
        let mask = block.iter().fold(0u64, |m, &v| m | (1 << v));
        queue.push_back(mask);
        order.extend_from_slice(&block);
        cell_end[order.len() - 1] = true;
    }
    debug_assert_eq!(order.len(), n);
    (order, cell_end, queue)
}

/// Refines the ordered partition to equitability with respect to adjacency.
///
/// The queue holds splitter sets as bit masks; splitting a cell orders its
/// fragments by ascending neighbour count into the splitter, which depends
/// only on the partition structure, never on vertex ids, so isomorphic
/// inputs refine along corresponding partitions.
fn refine(g: &SmallGraph, order: &mut [usize], cell_end: &mut [bool], queue: &mut VecDeque<u64>) {
    let n = order.len();
    while let Some(mask) = queue.pop_front() {
        let mut start = 0;
        while start < n {
            let mut end = start;
            while !cell_end[end] {
                end += 1;
            }
            if end > start {
                let first_key = (g.neighbours_mask(order[start]) & mask).count_ones();
                let mixed = order[start + 1..=end]
                    .iter()
                    .any(|&v| (g.neighbours_mask(v) & mask).count_ones() != first_key);
                if mixed {
                    order[start..=end].sort_by_key(|&v| (g.neighbours_mask(v) & mask).count_ones());
                    let mut i = start;
                    while i <= end {
                        let key = (g.neighbours_mask(order[i]) & mask).count_ones();
                        let mut j = i;
                        while j < end
                            && (g.neighbours_mask(order[j + 1]) & mask).count_ones() == key
                        {
                            j += 1;
                        }
                        cell_end[j] = true;
                        let fragment = order[i..=j].iter().fold(0u64, |m, &v| m | (1 << v));
                        queue.push_back(fragment);
                        i = j + 1;
                    }
                }
            }
            start = end + 1;
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, v: usize) -> usize {
        let mut root = v;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = v;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Role;

    fn star(d: usize) -> SmallGraph {
        let mut roles = vec![Role::Centre];
        roles.extend(std::iter::repeat(Role::Neighbour).take(d));
        let mut g = SmallGraph::with_roles(roles);
        for u in 1..=d {
            g.add_edge(0, u);
        }
        g
    }

    #[test]
    fn canonical_form_fixed_point() {
        let g = SmallGraph::plain(4);
        let c = canonicalize(&g);
        assert_eq!(c.graph, g);
        assert!(c.relabelling.is_identity());

        let s = star(4);
        let c = canonicalize(&s);
        assert_eq!(c.graph, s);
    }

    #[test]
    fn canonical_form_is_invariant() {
        // a path 0-1-2 with plain roles, relabelled two ways
        let mut a = SmallGraph::plain(3);
        a.add_edge(0, 1);
        a.add_edge(1, 2);
        let mut b = SmallGraph::plain(3);
        b.add_edge(0, 2);
        b.add_edge(1, 2);
        assert_eq!(canonical_form(&a), canonical_form(&b));

        // and distinguishable from the non-isomorphic triangle
        let mut tri = SmallGraph::plain(3);
        tri.add_edge(0, 1);
        tri.add_edge(1, 2);
        tri.add_edge(0, 2);
        assert_ne!(canonical_form(&a), canonical_form(&tri));
    }

    #[test]
    fn relabelling_maps_input_to_canonical() {
        let mut g = SmallGraph::plain(5);
        g.add_edge(2, 4);
        g.add_edge(1, 4);
        g.add_edge(0, 3);
        let c = canonicalize(&g);
        assert_eq!(g.relabel(&c.relabelling), c.graph);
    }

    #[test]
    fn roles_stay_in_block_order() {
        let mut g = SmallGraph::with_roles(vec![
            Role::Colour,
            Role::Boundary,
            Role::Centre,
            Role::Neighbour,
            Role::Neighbour,
        ]);
        g.add_edge(2, 3);
        g.add_edge(2, 4);
        g.add_edge(3, 1);
        g.add_edge(1, 0);
        let c = canonicalize(&g);
        let codes: String = (0..5).map(|v| c.graph.role(v).code()).collect();
        assert_eq!(codes, "VNNBC");
    }

    #[test]
    fn generators_are_automorphisms() {
        let g = star(4);
        let c = canonicalize(&g);
        assert!(!c.generators.is_empty());
        for phi in &c.generators {
            assert!(phi.preserves_roles(&g));
            assert_eq!(g.relabel(phi), g);
        }
        // the four leaves are interchangeable: group order 4! = 24
        assert_eq!(c.aut_group().order(), 24);
    }

    #[test]
    fn aut_group_of_asymmetric_graph_is_trivial() {
        // P6 plus the chord (1,3): degree sequence (1,3,2,3,2,1) and the two
        // degree-1 vertices see different degrees, so only the identity
        // remains.
        let mut g = SmallGraph::plain(6);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(3, 4);
        g.add_edge(4, 5);
        g.add_edge(1, 3);
        assert_eq!(aut_group(&g).order(), 1);
    }

    #[test]
    fn roles_split_symmetry() {
        // an edge between equal roles has the swap; between different roles
        // it does not
        let mut same = SmallGraph::plain(2);
        same.add_edge(0, 1);
        assert_eq!(aut_group(&same).order(), 2);

        let mut diff = SmallGraph::with_roles(vec![Role::Boundary, Role::Colour]);
        diff.add_edge(0, 1);
        assert_eq!(aut_group(&diff).order(), 1);
    }
}
