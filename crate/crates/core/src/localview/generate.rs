//! Isomorph-free generation of local views by canonical augmentation.
//!
//! Generation runs in two phases. First the inner graphs on d vertices are
//! enumerated one per isomorphism class by growing an edge at a time and
//! keeping a child only when the added edge lies in the automorphism orbit of
//! the child's designated canonical edge. Each inner graph is then dressed
//! into a skeleton (centre, pendant boundary, bare colour vertices), and the
//! same augmentation scheme runs again on boundary-to-colour edges, yielding
//! each boundary colouring once up to symmetry.

use crate::graphs::{canonicalize, is_canonical_augmentation_with, Canonical, Role, SmallGraph};

use super::catalogue::Catalogue;
use super::view::{LocalView, ViewError};

/// Enumerates the graphs on d labelled vertices, one representative per
/// isomorphism class. The representatives are plain-roled and returned in
/// the deterministic order the augmentation search visits them.
pub fn generate_inner_graphs(d: usize) -> Vec<SmallGraph> {
    assert!(
        (1..=6).contains(&d),
        "inner graphs supported for 1 <= d <= 6"
    );
    let root = SmallGraph::plain(d);
    let root_can = canonicalize(&root);
    let mut out = Vec::new();
    grow_inner(&root, &root_can, &mut out);
    out
}

fn grow_inner(x: &SmallGraph, x_can: &Canonical, out: &mut Vec<SmallGraph>) {
    out.push(x.clone());
    let non_edges = x.non_edges();
    if non_edges.is_empty() {
        return;
    }
    let group = x_can.aut_group();
    for e in group.orbit_representatives(&non_edges) {
        let y = x.plus_edge(e);
        let y_can = canonicalize(&y);
        if is_canonical_augmentation_with(&y_can, e) {
            grow_inner(&y, &y_can, out);
        }
    }
}

/// Dresses an inner graph into the skeleton of a view: vertex 0 is the
/// centre, 1..=d carry the inner graph, each neighbour gets d-1-deg pendant
/// boundary vertices, and one bare colour vertex is added per boundary
/// vertex. Fails with InvalidInner when the inner graph does not have
/// exactly d vertices. (A simple graph on d vertices always fits: its
/// degrees are at most d-1, leaving room for the centre edge.)
pub fn build_simple_representation(d: usize, inner: &SmallGraph) -> Result<SmallGraph, ViewError> {
    if inner.n() != d {
        return Err(ViewError::InvalidInner);
    }

    let boundary: usize = (0..d).map(|u| d - 1 - inner.degree(u)).sum();
    let mut roles = vec![Role::Centre];
    roles.extend(std::iter::repeat(Role::Neighbour).take(d));
    roles.extend(std::iter::repeat(Role::Boundary).take(boundary));
    roles.extend(std::iter::repeat(Role::Colour).take(boundary));
    let mut g = SmallGraph::with_roles(roles);

    for u in 0..d {
        g.add_edge(0, u + 1);
    }
    for (a, b) in inner.edges() {
        g.add_edge(a + 1, b + 1);
    }
    let mut next = 1 + d;
    for u in 0..d {
        for _ in 0..(d - 1 - inner.degree(u)) {
            g.add_edge(u + 1, next);
            next += 1;
        }
    }
    Ok(g)
}

/// Enumerates the boundary colourings of a skeleton, one per isomorphism
/// class, returned as canonical forms. A colouring joins every boundary
/// vertex to exactly one colour vertex; unused colour vertices stay
/// isolated, so views using few colours and views using many live in the
/// same vertex count.
pub fn generate_colourings(skeleton: &SmallGraph) -> Vec<SmallGraph> {
    let can = canonicalize(skeleton);
    let mut out = Vec::new();
    grow_colouring(skeleton, &can, &mut out);
    out
}

fn grow_colouring(x: &SmallGraph, x_can: &Canonical, out: &mut Vec<SmallGraph>) {
    let uncoloured: Vec<usize> = x
        .vertices_with_role(Role::Boundary)
        .filter(|&b| x.degree(b) == 1)
        .collect();
    if uncoloured.is_empty() {
        out.push(x_can.graph.clone());
        return;
    }
    let mut candidates = Vec::new();
    for &b in &uncoloured {
        for c in x.vertices_with_role(Role::Colour) {
            candidates.push((b, c));
        }
    }
    let group = x_can.aut_group();
    for e in group.orbit_representatives(&candidates) {
        let y = x.plus_edge(e);
        let y_can = canonicalize(&y);
        if is_canonical_augmentation_with(&y_can, e) {
            grow_colouring(&y, &y_can, out);
        }
    }
}

/// Generates the full catalogue of local views for degree d: every inner
/// graph, dressed and coloured, each isomorphism class exactly once.
pub fn generate_catalogue(d: usize) -> Result<Catalogue, ViewError> {
    assert!((2..=5).contains(&d), "catalogues supported for 2 <= d <= 5");
    let mut views = Vec::new();
    for inner in generate_inner_graphs(d) {
        let skeleton = build_simple_representation(d, &inner)?;
        for rep in generate_colourings(&skeleton) {
            views.push(LocalView::from_canonical_rep(rep)?);
        }
    }
    Catalogue::new(d, views)
}
