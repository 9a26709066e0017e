//! Vertex-roled simple graphs on up to 64 vertices, stored as bitset rows.

use std::fmt;

/// Hard capacity of the bitset representation.
pub const MAX_VERTICES: usize = 64;

/// Vertex roles, in canonical block order. Canonical labellings list all
/// centre vertices first, then neighbours, boundary, colour and plain
/// vertices; symmetries never map a vertex to one of a different role.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Centre,
    Neighbour,
    Boundary,
    Colour,
    Plain,
}

/// All roles in canonical block order.
pub const ROLE_ORDER: [Role; 5] = [
    Role::Centre,
    Role::Neighbour,
    Role::Boundary,
    Role::Colour,
    Role::Plain,
];

impl Role {
    pub fn code(self) -> char {
        match self {
            Role::Centre => 'V',
            Role::Neighbour => 'N',
            Role::Boundary => 'B',
            Role::Colour => 'C',
            Role::Plain => 'P',
        }
    }

    pub fn from_code(c: char) -> Option<Role> {
        match c {
            'V' => Some(Role::Centre),
            'N' => Some(Role::Neighbour),
            'B' => Some(Role::Boundary),
            'C' => Some(Role::Colour),
            'P' => Some(Role::Plain),
            _ => None,
        }
    }
}

/// An undirected simple graph with per-vertex roles.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: usize,
    adj: Vec<u64>,
    roles: Vec<Role>,
}

impl SmallGraph {
    /// A graph with all vertices `Plain` and no edges.
    pub fn plain(n: usize) -> Self {
        SmallGraph::with_roles(vec![Role::Plain; n])
    }

    pub fn with_roles(roles: Vec<Role>) -> Self {
        let n = roles.len();
        assert!(
            n <= MAX_VERTICES,
            "graph capacity is {MAX_VERTICES} vertices"
        );
        SmallGraph {
            n,
            adj: vec![0; n],
            roles,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn role(&self, v: usize) -> Role {
        self.roles[v]
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn vertices_with_role(&self, role: Role) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.roles[v] == role)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "no self-loops");
        assert!(u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    /// Copy with one extra edge; `add_edge` panics on invalid input.
    pub fn plus_edge(&self, e: (usize, usize)) -> SmallGraph {
        let mut out = self.clone();
        out.add_edge(e.0, e.1);
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbours_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in BitIter(self.adj[u]) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// All non-adjacent unordered pairs, sorted lexicographically.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The image graph under `perm`: vertex `u` becomes `perm.apply(u)`,
    /// carrying its role and adjacencies along.
    pub fn relabel(&self, perm: &Permutation) -> SmallGraph {
        debug_assert_eq!(perm.len(), self.n);
        let mut roles = vec![Role::Plain; self.n];
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            let nu = perm.apply(u);
            roles[nu] = self.roles[u];
            let mut row = 0u64;
            for v in self.neighbours(u) {
                row |= 1 << perm.apply(v);
            }
            adj[nu] = row;
        }
        SmallGraph {
            n: self.n,
            adj,
            roles,
        }
    }

    /// Serializes to the exchange format:
    /// ```text
    /// n <count>
    /// <role codes, one char per vertex>
    /// <u> <v>        one line per edge, u < v, sorted
    /// ```
    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for v in 0..self.n {
            out.push(self.roles[v].code());
        }
        out.push('\n');
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<SmallGraph, GraphFormatError> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| GraphFormatError::new("empty graph text"))?;
        let n: usize = header
            .strip_prefix("n ")
            .ok_or_else(|| GraphFormatError::new(format!("bad header `{header}`")))?
            .trim()
            .parse()
            .map_err(|_| GraphFormatError::new(format!("bad vertex count in `{header}`")))?;
        if n > MAX_VERTICES {
            return Err(GraphFormatError::new(format!(
                "vertex count {n} exceeds capacity {MAX_VERTICES}"
            )));
        }
        let role_line = lines
            .next()
            .ok_or_else(|| GraphFormatError::new("missing role line"))?
            .trim();
        if role_line.chars().count() != n {
            return Err(GraphFormatError::new(format!(
                "role line has {} codes, expected {n}",
                role_line.chars().count()
            )));
        }
        let mut roles = Vec::with_capacity(n);
        for c in role_line.chars() {
            roles.push(
                Role::from_code(c)
                    .ok_or_else(|| GraphFormatError::new(format!("unknown role code `{c}`")))?,
            );
        }
        let mut g = SmallGraph::with_roles(roles);
        for raw in lines {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace();
            let u: usize = fields
                .next()
                .unwrap()
                .parse()
                .map_err(|_| GraphFormatError::new(format!("bad edge line `{line}`")))?;
            let v: usize = fields
                .next()
                .ok_or_else(|| GraphFormatError::new(format!("bad edge line `{line}`")))?
                .parse()
                .map_err(|_| GraphFormatError::new(format!("bad edge line `{line}`")))?;
            if fields.next().is_some() {
                return Err(GraphFormatError::new(format!(
                    "trailing fields in `{line}`"
                )));
            }
            if u >= v || v >= n {
                return Err(GraphFormatError::new(format!(
                    "edge `{line}` is not `u v` with u < v < n"
                )));
            }
            if g.has_edge(u, v) {
                return Err(GraphFormatError::new(format!("duplicate edge `{line}`")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SmallGraph(n={}, roles={}, edges={:?})",
            self.n,
            self.roles.iter().map(|r| r.code()).collect::<String>(),
            self.edges()
        )
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// A bijection on `{0, .., n-1}` stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    img: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            img: (0..n).collect(),
        }
    }

    /// Builds from an image table; panics unless it is a bijection.
    pub fn from_images(img: Vec<usize>) -> Self {
        let n = img.len();
        let mut seen = vec![false; n];
        for &i in &img {
            assert!(i < n && !seen[i], "not a permutation: {img:?}");
            seen[i] = true;
        }
        Permutation { img }
    }

    pub fn len(&self) -> usize {
        self.img.len()
    }

    pub fn is_empty(&self) -> bool {
        self.img.is_empty()
    }

    pub fn apply(&self, u: usize) -> usize {
        self.img[u]
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Function composition: `a.compose(&b)` maps `u` to `a(b(u))`.
    pub fn compose(&self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), rhs.len());
        Permutation {
            img: rhs.img.iter().map(|&u| self.img[u]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut img = vec![0; self.img.len()];
        for (i, &v) in self.img.iter().enumerate() {
            img[v] = i;
        }
        Permutation { img }
    }

    pub fn preserves_roles(&self, g: &SmallGraph) -> bool {
        (0..g.n()).all(|v| g.role(self.apply(v)) == g.role(v))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.img)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFormatError {
    message: String,
}

impl GraphFormatError {
    fn new(message: impl Into<String>) -> Self {
        GraphFormatError {
            message: message.into(),
        }
    }
}

impl fmt::Display for GraphFormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph format error: {}", self.message)
    }
}

impl std::error::Error for GraphFormatError {}
