//! Finite undirected simple graphs with the metric and connectivity
//! invariants the spectral bounds consume. Vertices are labeled 1..=n.

use std::collections::BTreeSet;
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Labeled undirected simple graph. Immutable after construction; edge
/// iteration order is lexicographic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>, // 0-based adjacency lists, each sorted
}

/// Validate and normalize an edge list into a [`Graph`]: pairs are stored
/// as (min, max), duplicates collapse, loops and out-of-range endpoints are
/// rejected naming the offending pair.
pub fn build_graph(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph> {
    if n == 0 {
        return Err(Error::OrderTooSmall { n, min: 1 });
    }
    let mut set = BTreeSet::new();
    for &(i, j) in edge_list {
        if i == j {
            return Err(Error::LoopEdge(i));
        }
        if i < 1 || i > n || j < 1 || j > n {
            return Err(Error::EdgeOutOfRange { i, j, n });
        }
        set.insert((i.min(j), i.max(j)));
    }
    let edges: Vec<(usize, usize)> = set.into_iter().collect();
    let mut adj = vec![Vec::new(); n];
    for &(i, j) in &edges {
        adj[i - 1].push(j - 1);
        adj[j - 1].push(i - 1);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(Graph { n, edges, adj })
}

impl Graph {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Edges as 1-based (min, max) pairs in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v - 1].len())
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        if i == j || i < 1 || j < 1 || i > self.n || j > self.n {
            return false;
        }
        self.adj[i - 1].binary_search(&(j - 1)).is_ok()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < 1 || v > self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        Ok(())
    }

    /// Breadth-first distances from `src` (0-based internal), `usize::MAX`
    /// marking unreachable vertices.
    fn bfs(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(|&d| d != usize::MAX)
    }
}

/// Graph Laplacian: degrees on the diagonal, -1 at edges. Rows sum to zero.
pub fn laplacian(g: &Graph) -> Matrix {
    let n = g.order();
    let mut l = Matrix::zeros(n, n);
    for &(i, j) in g.edges() {
        l[(i - 1, i - 1)] += 1.0;
        l[(j - 1, j - 1)] += 1.0;
        l[(i - 1, j - 1)] = -1.0;
        l[(j - 1, i - 1)] = -1.0;
    }
    l
}

/// 0/1 adjacency matrix.
pub fn adjacency(g: &Graph) -> Matrix {
    let n = g.order();
    let mut a = Matrix::zeros(n, n);
    for &(i, j) in g.edges() {
        a[(i - 1, j - 1)] = 1.0;
        a[(j - 1, i - 1)] = 1.0;
    }
    a
}

/// BFS shortest-path length between two vertices; `None` for a
/// disconnected pair.
pub fn distance(g: &Graph, i: usize, j: usize) -> Result<Option<usize>> {
    g.check_vertex(i)?;
    g.check_vertex(j)?;
    let d = g.bfs(i - 1)[j - 1];
    Ok(if d == usize::MAX { None } else { Some(d) })
}

/// Maximum pairwise distance. Errors on disconnected graphs, whose
/// diameter is infinite.
pub fn diameter(g: &Graph) -> Result<usize> {
    if g.order() < 2 {
        return Err(Error::OrderTooSmall {
            n: g.order(),
            min: 2,
        });
    }
    let mut best = 0;
    for src in 0..g.order() {
        for &d in &g.bfs(src) {
            if d == usize::MAX {
                return Err(Error::Disconnected("diameter is infinite"));
            }
            best = best.max(d);
        }
    }
    Ok(best)
}

/// All-pairs distance matrix (entries `usize::MAX` when unreachable).
pub fn distance_matrix(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order()).map(|s| g.bfs(s)).collect()
}

/// Unit-capacity max-flow network used for vertex connectivity: every
/// vertex v is split into v_in -> v_out with capacity 1, and every edge
/// {u, v} contributes u_out -> v_in and v_out -> u_in arcs.
struct FlowNetwork {
    to: Vec<usize>,
    cap: Vec<i32>,
    head: Vec<Vec<usize>>, // arc indices per node
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            to: Vec::new(),
            cap: Vec::new(),
            head: vec![Vec::new(); nodes],
        }
    }

    fn arc(&mut self, u: usize, v: usize, cap: i32) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(cap);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    /// Edmonds-Karp: repeatedly augment along BFS shortest paths.
    fn max_flow(&mut self, s: usize, t: usize) -> i32 {
        let mut flow = 0;
        loop {
            let mut pred: Vec<Option<usize>> = vec![None; self.head.len()];
            let mut queue = VecDeque::from([s]);
            'bfs: while let Some(u) = queue.pop_front() {
                for &e in &self.head[u] {
                    let v = self.to[e];
                    if self.cap[e] > 0 && pred[v].is_none() && v != s {
                        pred[v] = Some(e);
                        if v == t {
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            let Some(_) = pred[t] else { break };
            let mut v = t;
            while v != s {
                let e = pred[v].unwrap();
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                v = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally vertex-disjoint a-b paths, via unit vertex
/// capacities in the split network. Adjacent pairs are handled by removing
/// the direct edge and adding one.
fn local_connectivity(g: &Graph, a: usize, b: usize) -> usize {
    let adjacent = g.has_edge(a, b);
    let n = g.order();
    // node 2v = v_in, 2v + 1 = v_out (0-based v)
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        let cap = if v + 1 == a || v + 1 == b { n as i32 } else { 1 };
        net.arc(2 * v, 2 * v + 1, cap);
    }
    for &(i, j) in g.edges() {
        if adjacent && ((i, j) == (a.min(b), a.max(b))) {
            continue;
        }
        net.arc(2 * (i - 1) + 1, 2 * (j - 1), 1);
        net.arc(2 * (j - 1) + 1, 2 * (i - 1), 1);
    }
    let flow = net.max_flow(2 * (a - 1) + 1, 2 * (b - 1)) as usize;
    flow + usize::from(adjacent)
}

/// Maximum number of internally vertex-disjoint paths between two distinct
/// vertices.
pub fn count_disjoint_paths(g: &Graph, a: usize, b: usize) -> Result<usize> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(Error::SameVertex(a));
    }
    Ok(local_connectivity(g, a, b))
}

/// Vertex connectivity κ(G): the minimum over non-adjacent pairs of the
/// local connectivity; n-1 for complete graphs, 0 when disconnected.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n < 2 {
        return Err(Error::OrderTooSmall { n, min: 2 });
    }
    if !g.is_connected() {
        return Ok(0);
    }
    if g.is_complete() {
        return Ok(n - 1);
    }
    let mut best = n - 1;
    for a in 1..=n {
        for b in (a + 1)..=n {
            if !g.has_edge(a, b) {
                best = best.min(local_connectivity(g, a, b));
            }
        }
    }
    Ok(best)
}
