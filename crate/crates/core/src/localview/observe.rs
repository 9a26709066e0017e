//! Reading the local view of a concrete vertex in a concrete d-regular
//! graph whose second neighbourhood carries a colouring.

use std::collections::BTreeMap;

use crate::graphs::SmallGraph;

use super::view::{LocalView, ViewError};

/// Extracts the local view of `v` in `g`. The graph must be regular; every
/// external vertex (at distance two from `v` through some neighbour) must
/// have a colour in `colours`. Colour labels are arbitrary and are
/// normalised inside the view.
///
/// An external vertex adjacent to two different neighbours of `v`
/// contributes its colour to both multisets, matching what each neighbour
/// sees independently.
pub fn local_view_of(
    g: &SmallGraph,
    v: usize,
    colours: &BTreeMap<usize, usize>,
) -> Result<LocalView, ViewError> {
    assert!(v < g.n(), "vertex out of range");
    let d = g.degree(v);
    for u in 0..g.n() {
        if g.degree(u) != d {
            return Err(ViewError::NotRegular {
                vertex: u,
                degree: g.degree(u),
            });
        }
    }

    let neighbours: Vec<usize> = g.neighbours(v).collect();
    let position: BTreeMap<usize, usize> = neighbours
        .iter()
        .enumerate()
        .map(|(i, &u)| (u, i + 1))
        .collect();

    let mut inner_edges = Vec::new();
    let mut multisets = Vec::with_capacity(d);
    for (i, &u) in neighbours.iter().enumerate() {
        let mut set = Vec::new();
        for w in g.neighbours(u) {
            if w == v {
                continue;
            }
            if let Some(&j) = position.get(&w) {
                if j > i + 1 {
                    inner_edges.push((i + 1, j));
                }
            } else {
                let colour = *colours
                    .get(&w)
                    .ok_or(ViewError::MissingColour { vertex: w })?;
                set.push(colour);
            }
        }
        multisets.push(set);
    }

    LocalView::from_parts(d, &inner_edges, &multisets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete_graph(n: usize) -> SmallGraph {
        let mut g = SmallGraph::plain(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    fn complete_bipartite(a: usize, b: usize) -> SmallGraph {
        let mut g = SmallGraph::plain(a + b);
        for u in 0..a {
            for v in a..(a + b) {
                g.add_edge(u, v);
            }
        }
        g
    }

    #[test]
    fn view_in_k5_is_boundaryless() {
        let g = complete_graph(5);
        let view = local_view_of(&g, 0, &BTreeMap::new()).unwrap();
        assert_eq!(view.d(), 4);
        assert_eq!(view.inner_edge_count(), 6);
        assert_eq!(view.boundary_size(), 0);
        assert_eq!(view.colour_count(), 0);
    }

    #[test]
    fn view_in_k44_with_equal_externals() {
        // K_{4,4} from one vertex: every neighbour sees the same three
        // externals (the rest of v's side), here all coloured alike.
        let g = complete_bipartite(4, 4);
        let mut colours = BTreeMap::new();
        colours.insert(1, 7);
        colours.insert(2, 7);
        colours.insert(3, 7);
        let view = local_view_of(&g, 0, &colours).unwrap();
        assert_eq!(view.d(), 4);
        assert_eq!(view.inner_edge_count(), 0);
        assert_eq!(view.colour_count(), 1);
        for set in view.multisets() {
            assert_eq!(set, &vec![1, 1, 1]);
        }
    }

    #[test]
    fn view_in_k44_with_distinct_externals() {
        let g = complete_bipartite(4, 4);
        let mut colours = BTreeMap::new();
        colours.insert(1, 10);
        colours.insert(2, 20);
        colours.insert(3, 30);
        let view = local_view_of(&g, 0, &colours).unwrap();
        assert_eq!(view.colour_count(), 3);
        for set in view.multisets() {
            assert_eq!(set.len(), 3);
        }
    }

    #[test]
    fn view_in_six_cycle() {
        let mut g = SmallGraph::plain(6);
        for i in 0..6 {
            g.add_edge(i, (i + 1) % 6);
        }
        let mut colours = BTreeMap::new();
        colours.insert(1, 1);
        colours.insert(5, 2);
        let view = local_view_of(&g, 3, &colours).unwrap();
        assert_eq!(view.d(), 2);
        assert_eq!(view.inner_edge_count(), 0);
        assert_eq!(view.colour_count(), 2);
        assert_eq!(view.multisets(), &[vec![1], vec![2]]);
    }

    #[test]
    fn irregular_graph_is_rejected() {
        let mut g = SmallGraph::plain(3);
        g.add_edge(0, 1);
        let err = local_view_of(&g, 0, &BTreeMap::new()).unwrap_err();
        assert!(matches!(err, ViewError::NotRegular { .. }));
    }

    #[test]
    fn missing_colour_is_reported() {
        let mut g = SmallGraph::plain(6);
        for i in 0..6 {
            g.add_edge(i, (i + 1) % 6);
        }
        let mut colours = BTreeMap::new();
        colours.insert(1, 1);
        let err = local_view_of(&g, 3, &colours).unwrap_err();
        assert_eq!(err, ViewError::MissingColour { vertex: 5 });
    }

    #[test]
    fn shared_external_counts_twice() {
        // C4: each neighbour of v sees the same opposite vertex.
        let mut g = SmallGraph::plain(4);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        g.add_edge(3, 0);
        let mut colours = BTreeMap::new();
        colours.insert(2, 5);
        let view = local_view_of(&g, 0, &colours).unwrap();
        assert_eq!(view.multisets(), &[vec![1], vec![1]]);
    }
}
