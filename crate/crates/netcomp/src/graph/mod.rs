//! Undirected simple graphs with dense node indices, plus the structural
//! metrics and community tools the comparison measures rely on.

mod io;
mod modularity;
mod stats;

pub use io::{
    read_edge_list, read_edge_list_path, write_edge_list, write_edge_list_path, LoadedGraph,
};
pub use modularity::{best_modularity, modularity, Partition};
pub use stats::{graph_stats, local_clustering, GraphStats};

use crate::error::{Error, Result};

/// Hop-distance sentinel for nodes a BFS cannot reach.
pub const UNREACHABLE: u32 = u32::MAX;

/// Undirected simple graph over node indices `0..node_count`.
/// No self-loops, no duplicate edges; adjacency lists are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(node_count: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); node_count],
            edge_count: 0,
        }
    }

    /// Build from an edge list, silently deduplicating and dropping
    /// self-loops. Errors when an endpoint is out of range.
    pub fn from_edges(node_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(node_count);
        for &(u, v) in edges {
            if u >= node_count || v >= node_count {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) out of range for {node_count} nodes"
                )));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Insert an edge; returns false for self-loops and existing edges.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        match self.adjacency[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos_u) => {
                self.adjacency[u].insert(pos_u, v);
                let pos_v = self.adjacency[v].binary_search(&u).unwrap_err();
                self.adjacency[v].insert(pos_v, u);
                self.edge_count += 1;
                true
            }
        }
    }

    /// Remove an edge; returns false when it was not present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        match self.adjacency[u].binary_search(&v) {
            Err(_) => false,
            Ok(pos_u) => {
                self.adjacency[u].remove(pos_u);
                let pos_v = self.adjacency[v].binary_search(&u).unwrap();
                self.adjacency[v].remove(pos_v);
                self.edge_count -= 1;
                true
            }
        }
    }

    /// Edges as (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Sorted degree sequence (ascending).
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        degs.sort_unstable();
        degs
    }

    /// Complement graph: edge present iff absent here (no self-loops).
    pub fn complement(&self) -> Graph {
        let n = self.node_count();
        let mut adjacency = Vec::with_capacity(n);
        let mut edge_count = 0;
        for u in 0..n {
            let mut row = Vec::with_capacity(n.saturating_sub(1 + self.degree(u)));
            let mut nbrs = self.adjacency[u].iter().peekable();
            for v in 0..n {
                while let Some(&&w) = nbrs.peek() {
                    if w < v {
                        nbrs.next();
                    } else {
                        break;
                    }
                }
                if v == u || nbrs.peek() == Some(&&v) {
                    continue;
                }
                row.push(v);
            }
            edge_count += row.len();
            adjacency.push(row);
        }
        Graph {
            adjacency,
            edge_count: edge_count / 2,
        }
    }

    /// Hop distances from `source`; unreachable nodes get [`UNREACHABLE`].
    pub fn bfs_distances(&self, source: usize) -> Vec<u32> {
        assert!(source < self.node_count(), "BFS source out of range");
        let mut dist = vec![UNREACHABLE; self.node_count()];
        dist[source] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            for &v in &self.adjacency[u] {
                if dist[v] == UNREACHABLE {
                    dist[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Connected component label per node (labels are dense, in order of
    /// first appearance) and the number of components.
    pub fn connected_components(&self) -> (Vec<usize>, usize) {
        let n = self.node_count();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            label[start] = count;
            while let Some(u) = stack.pop() {
                for &v in &self.adjacency[u] {
                    if label[v] == usize::MAX {
                        label[v] = count;
                        stack.push(v);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }
}
