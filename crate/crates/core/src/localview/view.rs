//! The `LocalView` type: a canonical coloured view together with the
//! combinatorial data (inner edges, boundary colour multisets) read off it.

use std::collections::BTreeMap;
use std::fmt;

use crate::graphs::{canonical_form, Role, SmallGraph};

/// Errors raised when constructing or parsing a local view.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViewError {
    /// An inner graph had a vertex of degree d or more, leaving no room for
    /// the centre edge, or its vertex count did not match d.
    InvalidInner,
    /// A multiset list did not match the boundary layout of the inner graph.
    MultisetMismatch,
    /// A roled graph did not have the layout of a coloured view
    /// (centre, neighbours, pendant boundary, colour vertices).
    MalformedRepresentation(String),
    /// A record or catalogue file could not be parsed.
    BadRecord(String),
    /// The graph handed to an observation was not d-regular.
    NotRegular { vertex: usize, degree: usize },
    /// An external vertex had no colour assigned.
    MissingColour { vertex: usize },
}

impl fmt::Display for ViewError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViewError::InvalidInner => write!(f, "inner graph does not fit a d-regular vertex"),
            ViewError::MultisetMismatch => {
                write!(f, "colour multisets do not match the boundary layout")
            }
            ViewError::MalformedRepresentation(msg) => {
                write!(f, "not a coloured view representation: {msg}")
            }
            ViewError::BadRecord(msg) => write!(f, "bad view record: {msg}"),
            ViewError::NotRegular { vertex, degree } => {
                write!(
                    f,
                    "graph is not regular: vertex {vertex} has degree {degree}"
                )
            }
            ViewError::MissingColour { vertex } => {
                write!(f, "no colour assigned to external vertex {vertex}")
            }
        }
    }
}

impl std::error::Error for ViewError {}

/// A local view of a vertex in a d-regular graph, stored canonically.
///
/// The data is redundant on purpose: `rep` is the canonical roled graph and
/// uniquely identifies the view, while the remaining fields are the readable
/// combinatorial content extracted from it. Inner edges live on neighbour
/// indices 1..=d, colours are renumbered 1..=colour_count in order of first
/// appearance (scanning neighbours in index order, each multiset in
/// ascending colour order).
#[derive(Debug, Clone)]
pub struct LocalView {
    d: usize,
    inner_edges: Vec<(usize, usize)>,
    multisets: Vec<Vec<usize>>,
    colour_count: usize,
    rep: SmallGraph,
}

impl PartialEq for LocalView {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep
    }
}

impl Eq for LocalView {}

impl LocalView {
    /// Degree of the observed vertex.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Edges among the neighbours, as sorted pairs on 1..=d.
    pub fn inner_edges(&self) -> &[(usize, usize)] {
        &self.inner_edges
    }

    pub fn inner_edge_count(&self) -> usize {
        self.inner_edges.len()
    }

    /// Colour multisets, one per neighbour in index order, each sorted.
    pub fn multisets(&self) -> &[Vec<usize>] {
        &self.multisets
    }

    /// Number of distinct colours appearing on the boundary.
    pub fn colour_count(&self) -> usize {
        self.colour_count
    }

    /// Number of boundary vertices, d(d-1) - 2 * inner_edge_count.
    pub fn boundary_size(&self) -> usize {
        self.d * (self.d - 1) - 2 * self.inner_edges.len()
    }

    /// The canonical roled graph representing this view.
    pub fn rep(&self) -> &SmallGraph {
        &self.rep
    }

    /// Number of edges inside the closed neighbourhood: the d centre edges
    /// plus the inner edges.
    pub fn closed_edge_count(&self) -> usize {
        self.d + self.inner_edges.len()
    }

    /// Builds a view from raw combinatorial data. The colour labels in
    /// `multisets` may be arbitrary (any usize); they are normalised during
    /// canonicalisation. `inner_edges` must be distinct pairs on 1..=d with
    /// every vertex of inner degree at most d-1, and multiset lengths must
    /// match the resulting boundary layout.
    pub fn from_parts(
        d: usize,
        inner_edges: &[(usize, usize)],
        multisets: &[Vec<usize>],
    ) -> Result<LocalView, ViewError> {
        if multisets.len() != d {
            return Err(ViewError::MultisetMismatch);
        }
        let mut inner_degree = vec![0usize; d + 1];
        let mut seen = std::collections::BTreeSet::new();
        for &(a, b) in inner_edges {
            if a == b || a < 1 || b < 1 || a > d || b > d {
                return Err(ViewError::InvalidInner);
            }
            let key = (a.min(b), a.max(b));
            if !seen.insert(key) {
                return Err(ViewError::InvalidInner);
            }
            inner_degree[a] += 1;
            inner_degree[b] += 1;
        }
        for u in 1..=d {
            if multisets[u - 1].len() != d - 1 - inner_degree[u] {
                return Err(ViewError::MultisetMismatch);
            }
        }

        let boundary = d * (d - 1) - 2 * inner_edges.len();
        let n = 1 + d + 2 * boundary;
        let mut roles = vec![Role::Centre];
        roles.extend(std::iter::repeat(Role::Neighbour).take(d));
        roles.extend(std::iter::repeat(Role::Boundary).take(boundary));
        roles.extend(std::iter::repeat(Role::Colour).take(boundary));
        let mut g = SmallGraph::with_roles(roles);
        debug_assert_eq!(g.n(), n);

        for u in 1..=d {
            g.add_edge(0, u);
        }
        for &(a, b) in inner_edges {
            g.add_edge(a, b);
        }
        // Colour vertices are interchangeable, so the assignment of labels
        // to colour vertices is arbitrary; first come, first served.
        let colour_base = 1 + d + boundary;
        let mut label_to_vertex: BTreeMap<usize, usize> = BTreeMap::new();
        let mut next_boundary = 1 + d;
        for u in 1..=d {
            for &label in &multisets[u - 1] {
                let next_id = colour_base + label_to_vertex.len();
                let c = *label_to_vertex.entry(label).or_insert(next_id);
                g.add_edge(u, next_boundary);
                g.add_edge(next_boundary, c);
                next_boundary += 1;
            }
        }

        let rep = canonical_form(&g);
        LocalView::from_canonical_rep(rep)
    }

    /// Reads the combinatorial data back off a canonical representation.
    /// Validates the full layout so that corrupted inputs are rejected.
    pub fn from_canonical_rep(rep: SmallGraph) -> Result<LocalView, ViewError> {
        let malformed = |msg: &str| ViewError::MalformedRepresentation(msg.to_string());

        let n = rep.n();
        if n == 0 || rep.role(0) != Role::Centre {
            return Err(malformed("vertex 0 is not the centre"));
        }
        let centres: Vec<usize> = rep.vertices_with_role(Role::Centre).collect();
        if centres.len() != 1 {
            return Err(malformed("more than one centre"));
        }
        let neighbours: Vec<usize> = rep.vertices_with_role(Role::Neighbour).collect();
        let boundary: Vec<usize> = rep.vertices_with_role(Role::Boundary).collect();
        let colours: Vec<usize> = rep.vertices_with_role(Role::Colour).collect();
        if rep.vertices_with_role(Role::Plain).next().is_some() {
            return Err(malformed("unexpected plain vertices"));
        }
        let d = neighbours.len();
        if d == 0 {
            return Err(malformed("centre has no neighbours"));
        }
        if neighbours != (1..=d).collect::<Vec<_>>() {
            return Err(malformed(
                "neighbour block is not contiguous after the centre",
            ));
        }
        let b_start = 1 + d;
        if boundary != (b_start..b_start + boundary.len()).collect::<Vec<_>>() {
            return Err(malformed("boundary block is not contiguous"));
        }
        let c_start = b_start + boundary.len();
        if colours != (c_start..c_start + colours.len()).collect::<Vec<_>>() {
            return Err(malformed("colour block is not contiguous"));
        }
        if colours.len() != boundary.len() {
            return Err(malformed("colour and boundary block sizes differ"));
        }
        if n != c_start + colours.len() {
            return Err(malformed("vertex count mismatch"));
        }

        for u in 1..=d {
            if !rep.has_edge(0, u) {
                return Err(malformed("centre is not adjacent to a neighbour vertex"));
            }
        }
        if rep.degree(0) != d {
            return Err(malformed("centre has edges outside the neighbour block"));
        }

        let mut inner_edges = Vec::new();
        for u in 1..=d {
            for v in rep.neighbours(u) {
                if v > u && rep.role(v) == Role::Neighbour {
                    inner_edges.push((u, v));
                }
            }
            for v in rep.neighbours(u) {
                if rep.role(v) == Role::Colour {
                    return Err(malformed("neighbour adjacent to a colour vertex"));
                }
            }
        }

        // Every boundary vertex is a pendant of exactly one neighbour and
        // carries exactly one colour.
        let mut colour_of_boundary = vec![0usize; n];
        for &b in &boundary {
            if rep.degree(b) != 2 {
                return Err(malformed("boundary vertex does not have degree 2"));
            }
            let nbrs: Vec<usize> = rep.neighbours(b).collect();
            let (u, c) = (nbrs[0], nbrs[1]);
            if !(rep.role(u) == Role::Neighbour && rep.role(c) == Role::Colour) {
                return Err(malformed(
                    "boundary vertex not joined to neighbour and colour",
                ));
            }
            colour_of_boundary[b] = c;
        }
        for &c in &colours {
            if rep.neighbours(c).any(|v| rep.role(v) != Role::Boundary) {
                return Err(malformed("colour vertex adjacent outside the boundary"));
            }
        }
        for u in 1..=d {
            if rep.degree(u) != d {
                return Err(malformed("neighbour vertex degree is not d"));
            }
        }

        // Renumber colours 1.. in order of first appearance. Within one
        // neighbour the boundary vertices are scanned in ascending id order,
        // which by canonicality is as good as any fixed rule.
        let mut colour_index: BTreeMap<usize, usize> = BTreeMap::new();
        let mut multisets = Vec::with_capacity(d);
        for u in 1..=d {
            let mut set = Vec::new();
            for b in rep.neighbours(u) {
                if rep.role(b) == Role::Boundary {
                    let c = colour_of_boundary[b];
                    let next = colour_index.len() + 1;
                    let idx = *colour_index.entry(c).or_insert(next);
                    set.push(idx);
                }
            }
            set.sort_unstable();
            multisets.push(set);
        }
        let colour_count = colour_index.len();

        Ok(LocalView {
            d,
            inner_edges,
            multisets,
            colour_count,
            rep,
        })
    }

    /// Two-line record describing this view:
    /// `inner: 1 2, 3 4` and `mults: [1,2|1|2,3|...]`.
    pub fn record_text(&self) -> String {
        let inner = self
            .inner_edges
            .iter()
            .map(|&(a, b)| format!("{a} {b}"))
            .collect::<Vec<_>>()
            .join(", ");
        let mults = self
            .multisets
            .iter()
            .map(|set| {
                set.iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("|");
        if inner.is_empty() {
            format!("inner:\nmults: [{mults}]\n")
        } else {
            format!("inner: {inner}\nmults: [{mults}]\n")
        }
    }

    /// Parses a two-line record produced by `record_text` and rebuilds the
    /// view for the given degree.
    pub fn parse_record(d: usize, text: &str) -> Result<LocalView, ViewError> {
        let bad = |msg: &str| ViewError::BadRecord(msg.to_string());
        let mut inner_line = None;
        let mut mults_line = None;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("inner:") {
                if inner_line.replace(rest.trim().to_string()).is_some() {
                    return Err(bad("duplicate inner line"));
                }
            } else if let Some(rest) = line.strip_prefix("mults:") {
                if mults_line.replace(rest.trim().to_string()).is_some() {
                    return Err(bad("duplicate mults line"));
                }
            } else {
                return Err(bad(&format!("unrecognised line: {line}")));
            }
        }
        let inner_line = inner_line.ok_or_else(|| bad("missing inner line"))?;
        let mults_line = mults_line.ok_or_else(|| bad("missing mults line"))?;

        let mut inner_edges = Vec::new();
        if !inner_line.is_empty() {
            for pair in inner_line.split(',') {
                let mut it = pair.split_whitespace();
                let a = it
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| bad("bad inner edge"))?;
                let b = it
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| bad("bad inner edge"))?;
                if it.next().is_some() {
                    return Err(bad("bad inner edge"));
                }
                inner_edges.push((a, b));
            }
        }

        let body = mults_line
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| bad("mults line is not bracketed"))?;
        let mut multisets = Vec::new();
        for part in body.split('|') {
            let part = part.trim();
            let mut set = Vec::new();
            if !part.is_empty() {
                for c in part.split(',') {
                    let c: usize = c
                        .trim()
                        .parse()
                        .map_err(|_| bad("bad colour in multiset"))?;
                    set.push(c);
                }
            }
            multisets.push(set);
        }

        LocalView::from_parts(d, &inner_edges, &multisets)
    }
}
