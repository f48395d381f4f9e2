//! Finite simple graphs on vertex sets {1, ..., n}, n <= 64.

use crate::error::{Error, Result};
use crate::set::{Vertex, VertexSet, MAX_VERTICES};

/// Simple undirected graph. Edges are kept sorted with u < v; the
/// adjacency masks are derived and kept in sync.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: u32,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<VertexSet>, // indexed by vertex, entry 0 unused
}

impl Graph {
    /// Builds a graph from an explicit edge set. Loops, out-of-range
    /// endpoints and duplicate edges are rejected.
    pub fn new(n: u32, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidArgument(format!(
                "vertex count {n} exceeds the supported maximum {MAX_VERTICES}"
            )));
        }
        let mut adj = vec![VertexSet::empty(); n as usize + 1];
        let mut sorted = Vec::new();
        for (a, b) in edges {
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            if u < 1 || v > n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({a},{b}) out of range 1..={n}"
                )));
            }
            if adj[u as usize].contains(v) {
                return Err(Error::InvalidArgument(format!("duplicate edge ({u},{v})")));
            }
            adj[u as usize].insert(v);
            adj[v as usize].insert(u);
            sorted.push((u, v));
        }
        sorted.sort_unstable();
        Ok(Graph { n, edges: sorted, adj })
    }

    /// The path 1 - 2 - ... - n. Defined for 2 <= n <= 64.
    pub fn path(n: u32) -> Result<Graph> {
        if !(2..=MAX_VERTICES).contains(&n) {
            return Err(Error::InvalidFamilyParameter(format!(
                "path requires 2 <= n <= {MAX_VERTICES}, got {n}"
            )));
        }
        Graph::new(n, (1..n).map(|i| (i, i + 1)))
    }

    /// The cycle 1 - 2 - ... - n - 1. Defined for 3 <= n <= 64.
    pub fn cycle(n: u32) -> Result<Graph> {
        if !(3..=MAX_VERTICES).contains(&n) {
            return Err(Error::InvalidFamilyParameter(format!(
                "cycle requires 3 <= n <= {MAX_VERTICES}, got {n}"
            )));
        }
        Graph::new(n, (1..n).map(|i| (i, i + 1)).chain(std::iter::once((n, 1))))
    }

    /// Complete bipartite graph on parts {1..a} and {a+1..a+b}.
    pub fn complete_bipartite(a: u32, b: u32) -> Result<Graph> {
        if a < 1 || b < 1 || a + b > MAX_VERTICES {
            return Err(Error::InvalidFamilyParameter(format!(
                "complete bipartite requires a, b >= 1 and a + b <= {MAX_VERTICES}, got a={a} b={b}"
            )));
        }
        Graph::new(a + b, (1..=a).flat_map(move |u| (a + 1..=a + b).map(move |v| (u, v))))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u >= 1 && u <= self.n && self.adj[u as usize].contains(v)
    }

    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        assert!(v >= 1 && v <= self.n, "vertex {v} out of range");
        self.adj[v as usize]
    }

    pub fn degree(&self, v: Vertex) -> u32 {
        self.neighbors(v).len()
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (1..=self.n).filter(|&v| self.adj[v as usize].is_empty()).collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        !self.isolated_vertices().is_empty()
    }

    /// Complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let n = self.n;
        let mut edges = Vec::new();
        for u in 1..n {
            for v in u + 1..=n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, edges).expect("complement edges are valid by construction")
    }

    /// Subgraph induced on w, relabeled to 1..=|w| preserving label order.
    /// Returns the graph and the embedding, where embedding[i] is the
    /// original label of new vertex i+1.
    pub fn induced_subgraph(&self, w: VertexSet) -> Result<(Graph, Vec<Vertex>)> {
        if !w.is_subset(self.vertex_set()) {
            return Err(Error::InvalidArgument(format!(
                "{w} is not contained in the vertex set of the graph"
            )));
        }
        let embedding = w.elements();
        let index_of = |v: Vertex| (embedding.iter().position(|&x| x == v).unwrap() + 1) as Vertex;
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if w.contains(u) && w.contains(v) {
                edges.push((index_of(u), index_of(v)));
            }
        }
        Ok((Graph::new(w.len(), edges)?, embedding))
    }

    /// Maximum cardinality search visit order: repeatedly take the unvisited
    /// vertex with the most visited neighbors, smallest label on ties.
    fn mcs_order(&self) -> Vec<Vertex> {
        let mut visited = VertexSet::empty();
        let mut order = Vec::with_capacity(self.n as usize);
        for _ in 0..self.n {
            let mut best: Option<(u32, Vertex)> = None;
            for v in 1..=self.n {
                if visited.contains(v) {
                    continue;
                }
                let w = (self.adj[v as usize] & visited).len();
                if best.is_none_or(|(bw, _)| w > bw) {
                    best = Some((w, v));
                }
            }
            let (_, v) = best.expect("unvisited vertex exists");
            visited.insert(v);
            order.push(v);
        }
        order
    }

    /// Checks that eliminating vertices in the given order always leaves the
    /// later neighborhood of the eliminated vertex a clique.
    pub fn is_perfect_elimination_order(&self, order: &[Vertex]) -> bool {
        if order.len() != self.n as usize {
            return false;
        }
        let mut later = self.vertex_set();
        for &v in order {
            later.remove(v);
            let x = self.adj[v as usize] & later;
            for u in x.iter() {
                if !(x.without(u)).is_subset(self.adj[u as usize]) {
                    return false;
                }
            }
        }
        true
    }

    /// A perfect elimination order when the graph is chordal, None otherwise.
    /// The reverse of the maximum cardinality search visit order works
    /// exactly for chordal graphs, so one verification pass decides both.
    pub fn perfect_elimination_order(&self) -> Option<Vec<Vertex>> {
        let mut order = self.mcs_order();
        order.reverse();
        if self.is_perfect_elimination_order(&order) {
            Some(order)
        } else {
            None
        }
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_order().is_some()
    }

    /// All maximal cliques, canonically sorted. Isolated vertices appear as
    /// singleton cliques; the graph on zero vertices yields the empty clique.
    pub fn maximal_cliques(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.bron_kerbosch(VertexSet::empty(), self.vertex_set(), VertexSet::empty(), &mut out);
        out.sort();
        out
    }

    fn bron_kerbosch(&self, r: VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        let mut pivot = None;
        let mut best = 0u32;
        for u in (p | x).iter() {
            let c = (p & self.adj[u as usize]).len();
            if pivot.is_none() || c > best {
                pivot = Some(u);
                best = c;
            }
        }
        let cand = p - self.adj[pivot.unwrap() as usize];
        let mut p = p;
        let mut x = x;
        for v in cand.iter() {
            let nv = self.adj[v as usize];
            self.bron_kerbosch(r.with(v), p & nv, x & nv, out);
            p.remove(v);
            x.insert(v);
        }
    }

    /// Minimal vertex covers, canonically sorted. These are exactly the
    /// complements of the maximal cliques of the complement graph.
    pub fn minimal_vertex_covers(&self) -> Result<Vec<VertexSet>> {
        if self.edges.is_empty() {
            return Err(Error::EmptyCoverIdeal);
        }
        let mut covers: Vec<VertexSet> = self
            .complement()
            .maximal_cliques()
            .into_iter()
            .map(|c| c.complement_in(self.n))
            .collect();
        covers.sort();
        Ok(covers)
    }

    pub fn is_vertex_cover(&self, s: VertexSet) -> bool {
        self.edges.iter().all(|&(u, v)| s.contains(u) || s.contains(v))
    }

    /// True when the vertices split into two nonempty sides with every
    /// cross pair an edge and nothing else. Isolated vertices disqualify.
    pub fn is_complete_bipartite(&self) -> bool {
        if self.edges.is_empty() {
            return false;
        }
        let side_b = self.neighbors(1);
        let side_a = side_b.complement_in(self.n);
        if side_a.is_empty() || side_b.is_empty() {
            return false;
        }
        let crossing = self.edges.iter().all(|&(u, v)| {
            side_a.contains(u) != side_a.contains(v)
        });
        crossing
            && self.edge_count() as u64
                == u64::from(side_a.len()) * u64::from(side_b.len())
    }

    /// Parses the plain text edge-list format:
    /// a header line "n <count>", then one "u v" line per edge.
    /// Blank lines and lines starting with '#' are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut n: Option<u32> = None;
        let mut seen = std::collections::HashSet::new();
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            match n {
                None => {
                    if toks.len() != 2 || toks[0] != "n" {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!("expected header \"n <count>\", got \"{line}\""),
                        });
                    }
                    let count: u32 = toks[1].parse().map_err(|_| Error::Parse {
                        line: lineno,
                        msg: format!("vertex count \"{}\" is not a nonnegative integer", toks[1]),
                    })?;
                    if count > MAX_VERTICES {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!("vertex count {count} exceeds the supported maximum {MAX_VERTICES}"),
                        });
                    }
                    n = Some(count);
                }
                Some(count) => {
                    if toks.len() != 2 {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!("expected an edge \"u v\", got \"{line}\""),
                        });
                    }
                    let parse = |t: &str| -> Result<u32> {
                        t.parse().map_err(|_| Error::Parse {
                            line: lineno,
                            msg: format!("endpoint \"{t}\" is not a positive integer"),
                        })
                    };
                    let u = parse(toks[0])?;
                    let v = parse(toks[1])?;
                    if u == v {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!("loop at vertex {u}"),
                        });
                    }
                    if u < 1 || v < 1 || u > count || v > count {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!("edge ({u},{v}) out of range 1..={count}"),
                        });
                    }
                    let key = (u.min(v), u.max(v));
                    if !seen.insert(key) {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!("duplicate edge ({},{})", key.0, key.1),
                        });
                    }
                    edges.push(key);
                }
            }
        }
        match n {
            None => Err(Error::Parse { line: text.lines().count() + 1, msg: "missing header \"n <count>\"".into() }),
            Some(count) => Graph::new(count, edges),
        }
    }

    /// Inverse of parse_edge_list, up to comments and edge order.
    pub fn to_edge_list_string(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// The two graph families with a parameterized theory in this crate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    Path,
    Cycle,
}

impl Family {
    pub fn graph(self, n: u32) -> Result<Graph> {
        match self {
            Family::Path => Graph::path(n),
            Family::Cycle => Graph::cycle(n),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
        }
    }

    pub fn min_n(self) -> u32 {
        match self {
            Family::Path => 2,
            Family::Cycle => 3,
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}
