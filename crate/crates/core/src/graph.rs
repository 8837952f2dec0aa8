//! Simple graphs on `V_n`, their truncated and shortest-path metrics, and
//! the named families used throughout the examples.

use std::collections::VecDeque;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::metric::Metric;
use crate::rational::int;

/// Undirected simple graph with 1-based vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adjacency: Vec<bool>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        Self { n, adjacency: vec![false; n * n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    /// Rows of a symmetric 0/1 matrix with zero diagonal.
    pub fn from_adjacency(rows: &[Vec<u8>]) -> Result<Self> {
        let n = rows.len();
        let mut g = Self::empty(n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGraph(format!("adjacency row {} has length {}, expected {n}", r + 1, row.len())));
            }
            for (c, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 if r == c => return Err(Error::InvalidGraph(format!("loop at vertex {}", r + 1))),
                    1 => g.adjacency[r * n + c] = true,
                    _ => return Err(Error::InvalidGraph(format!("adjacency entry {x} is not 0 or 1"))),
                }
            }
        }
        for r in 0..n {
            for c in 0..n {
                if g.adjacency[r * n + c] != g.adjacency[c * n + r] {
                    return Err(Error::InvalidGraph(format!("adjacency is not symmetric at ({}, {})", r + 1, c + 1)));
                }
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        for v in [i, j] {
            if v == 0 || v > self.n {
                return Err(Error::VertexOutOfRange { v, n: self.n });
            }
        }
        if i == j {
            return Err(Error::InvalidGraph(format!("loop at vertex {i}")));
        }
        self.adjacency[(i - 1) * self.n + (j - 1)] = true;
        self.adjacency[(j - 1) * self.n + (i - 1)] = true;
        Ok(())
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && i >= 1 && j >= 1 && i <= self.n && j <= self.n && self.adjacency[(i - 1) * self.n + (j - 1)]
    }

    /// Edges `(i, j)` with `i < j` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n).flat_map(|i| (i + 1..=self.n).map(move |j| (i, j))).filter(|&(i, j)| self.has_edge(i, j)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().filter(|&&b| b).count() / 2
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (1..=self.n).filter(|&u| self.has_edge(v, u)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    /// The common degree, if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(1);
        (2..=self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        (0..self.n).map(|r| (0..self.n).map(|c| u8::from(self.adjacency[r * self.n + c])).collect()).collect()
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::from([source]);
        dist[source - 1] = Some(0);
        while let Some(v) = queue.pop_front() {
            let next = dist[v - 1].map(|x| x + 1);
            for u in self.neighbors(v) {
                if dist[u - 1].is_none() {
                    dist[u - 1] = next;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances_from(1).iter().all(Option::is_some)
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().iter().map(|(i, j)| format!("{i}-{j}")).collect();
        write!(f, "G(n={}; {})", self.n, edges.join(" "))
    }
}

/// `d_0`: 1 on edges, 2 on other distinct pairs.
pub fn truncated_metric(g: &SimpleGraph) -> Result<Metric> {
    Metric::from_fn(g.n(), |i, j| int(if g.has_edge(i, j) { 1 } else { 2 }))
}

/// `d_1`: shortest-path distance with unit edges.
pub fn graph_metric(g: &SimpleGraph) -> Result<Metric> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let rows: Vec<Vec<Option<usize>>> = (1..=g.n()).map(|v| g.distances_from(v)).collect();
    Metric::from_fn(g.n(), |i, j| int(rows[i - 1][j - 1].expect("connected") as i64))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `K_n`.
    Complete(usize),
    /// `C_n`, vertices in cyclic order.
    Cycle(usize),
    /// `Q_k`: vertex `x + 1` for each bit string `x` of length `k`.
    Hypercube(usize),
    /// `B_{m,n}`: parts `1..=m` and `m+1..=m+n`.
    Bipartite(usize, usize),
    /// `L_n`: the path `1 - 2 - ... - n`.
    Linear(usize),
    /// `CP_n`: `K_{2n}` minus the matching `i ↔ i + n`.
    CocktailParty(usize),
    /// `S(n)`: center is vertex 1, leaves are `2..=n+1`.
    Star(usize),
    /// `k`-regular circulant on `n` vertices.
    Regular(usize, usize),
}

impl Family {
    /// Parses a short name (`K`, `C`, `Q`, `B`, `L`, `CP`, `S`, `R`) with its
    /// integer parameters.
    pub fn parse(name: &str, params: &[usize]) -> Result<Self> {
        let arity = |k: usize| {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidFamily(format!("{name} takes {k} parameter(s), got {}", params.len())))
            }
        };
        let family = match name.to_ascii_uppercase().as_str() {
            "K" => arity(1).map(|_| Family::Complete(params[0])),
            "C" => arity(1).map(|_| Family::Cycle(params[0])),
            "Q" => arity(1).map(|_| Family::Hypercube(params[0])),
            "B" => arity(2).map(|_| Family::Bipartite(params[0], params[1])),
            "L" => arity(1).map(|_| Family::Linear(params[0])),
            "CP" => arity(1).map(|_| Family::CocktailParty(params[0])),
            "S" => arity(1).map(|_| Family::Star(params[0])),
            "R" => arity(2).map(|_| Family::Regular(params[0], params[1])),
            _ => Err(Error::InvalidFamily(format!("unknown family {name:?}"))),
        }?;
        Ok(family)
    }

    pub fn build(&self) -> Result<SimpleGraph> {
        let bad = |msg: String| Err(Error::InvalidFamily(msg));
        match *self {
            Family::Complete(n) => {
                if n < 2 {
                    return bad(format!("K_{n} needs at least 2 vertices"));
                }
                let edges: Vec<_> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
                SimpleGraph::from_edges(n, &edges)
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return bad(format!("C_{n} needs at least 3 vertices"));
                }
                let edges: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
                SimpleGraph::from_edges(n, &edges)
            }
            Family::Hypercube(k) => {
                if k == 0 || k > 12 {
                    return bad(format!("Q_{k} must have dimension in 1..=12"));
                }
                let n = 1usize << k;
                let edges: Vec<_> = (0..n)
                    .flat_map(|x| (0..k).map(move |b| (x, x ^ (1 << b))))
                    .filter(|(x, y)| x < y)
                    .map(|(x, y)| (x + 1, y + 1))
                    .collect();
                SimpleGraph::from_edges(n, &edges)
            }
            Family::Bipartite(m, n) => {
                if m == 0 || n == 0 {
                    return bad(format!("B_{{{m},{n}}} needs nonempty parts"));
                }
                let edges: Vec<_> = (1..=m).flat_map(|i| (m + 1..=m + n).map(move |j| (i, j))).collect();
                SimpleGraph::from_edges(m + n, &edges)
            }
            Family::Linear(n) => {
                if n < 2 {
                    return bad(format!("L_{n} needs at least 2 vertices"));
                }
                let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
                SimpleGraph::from_edges(n, &edges)
            }
            Family::CocktailParty(n) => {
                if n < 2 {
                    return bad(format!("CP_{n} needs n >= 2"));
                }
                let edges: Vec<_> = (1..=2 * n)
                    .flat_map(|i| (i + 1..=2 * n).map(move |j| (i, j)))
                    .filter(|&(i, j)| j != i + n)
                    .collect();
                SimpleGraph::from_edges(2 * n, &edges)
            }
            Family::Star(n) => {
                if n == 0 {
                    return bad("S(0) has no leaves".into());
                }
                let edges: Vec<_> = (2..=n + 1).map(|j| (1, j)).collect();
                SimpleGraph::from_edges(n + 1, &edges)
            }
            Family::Regular(n, k) => {
                if k == 0 || k >= n || (n * k) % 2 == 1 {
                    return bad(format!("no {k}-regular graph on {n} vertices"));
                }
                // offsets 1..=k/2, plus the antipode when k is odd
                let mut offsets: Vec<usize> = (1..=k / 2).collect();
                if k % 2 == 1 {
                    offsets.push(n / 2);
                }
                let mut g = SimpleGraph::empty(n);
                for v in 0..n {
                    for &o in &offsets {
                        g.add_edge(v + 1, (v + o) % n + 1)?;
                    }
                }
                Ok(g)
            }
        }
    }
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// independently with probability `p`.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<SimpleGraph> {
    if n < 1 {
        return Err(Error::TooFewVertices { n, min: 1, what: "a random graph" });
    }
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut g = SimpleGraph::empty(n);
    for k in 1..n {
        let parent = order[rng.gen_range(0..k)];
        g.add_edge(order[k], parent)?;
    }
    for i in 1..=n {
        for j in i + 1..=n {
            if !g.has_edge(i, j) && rng.gen_bool(p) {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}
