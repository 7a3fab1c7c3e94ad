//! Edge-list text format: one edge per line as `u<whitespace>v`, `#` starts
//! a comment, and an optional `# N=<n>` header declares the node count so
//! isolated nodes survive a round trip. Node identifiers may be arbitrary
//! tokens; they are remapped to dense indices and the mapping is retained.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph together with its ingestion metadata.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: Graph,
    /// Original identifier for each dense node index.
    pub labels: Vec<String>,
    pub self_loops_dropped: usize,
    pub duplicates_dropped: usize,
}

impl LoadedGraph {
    /// True when labels are just the dense indices themselves.
    pub fn labels_are_trivial(&self) -> bool {
        self.labels
            .iter()
            .enumerate()
            .all(|(i, l)| l == &i.to_string())
    }
}

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<LoadedGraph> {
    let mut declared_n: Option<usize> = None;
    let mut raw_edges: Vec<(String, String)> = Vec::new();
    let mut self_loops = 0usize;

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(value) = comment.strip_prefix("N=") {
                let n: usize = value.trim().parse().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("invalid node-count header '{trimmed}'"),
                })?;
                declared_n = Some(n);
            }
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let u = tokens.next();
        let v = tokens.next();
        match (u, v) {
            (Some(u), Some(v)) => {
                if u == v {
                    self_loops += 1;
                } else {
                    raw_edges.push((u.to_string(), v.to_string()));
                }
            }
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected two node identifiers, got '{trimmed}'"),
                })
            }
        }
    }

    if raw_edges.is_empty() && self_loops == 0 && declared_n.is_none() {
        return Err(Error::EmptyInput);
    }

    let (graph, labels, duplicates) = match declared_n {
        Some(n) => {
            // Header present: identifiers must be dense integer indices.
            let mut g = Graph::empty(n);
            let mut dups = 0;
            for (u, v) in &raw_edges {
                let parse = |tok: &str| -> Result<usize> {
                    let idx: usize = tok.parse().map_err(|_| {
                        Error::invalid(format!(
                            "node id '{tok}' is not an integer index (required with an N= header)"
                        ))
                    })?;
                    if idx >= n {
                        return Err(Error::invalid(format!(
                            "node id {idx} out of range for declared N={n}"
                        )));
                    }
                    Ok(idx)
                };
                if !g.add_edge(parse(u)?, parse(v)?) {
                    dups += 1;
                }
            }
            let labels = (0..n).map(|i| i.to_string()).collect();
            (g, labels, dups)
        }
        None => {
            // Remap identifiers by first appearance.
            let mut index = std::collections::HashMap::new();
            let mut labels: Vec<String> = Vec::new();
            let mut dense: Vec<(usize, usize)> = Vec::with_capacity(raw_edges.len());
            for (u, v) in &raw_edges {
                for tok in [u, v] {
                    if !index.contains_key(tok.as_str()) {
                        index.insert(tok.clone(), labels.len());
                        labels.push(tok.clone());
                    }
                }
                dense.push((index[u.as_str()], index[v.as_str()]));
            }
            let mut g = Graph::empty(labels.len());
            let mut dups = 0;
            for (u, v) in dense {
                if !g.add_edge(u, v) {
                    dups += 1;
                }
            }
            (g, labels, dups)
        }
    };

    Ok(LoadedGraph {
        graph,
        labels,
        self_loops_dropped: self_loops,
        duplicates_dropped: duplicates,
    })
}

/// Write with an `# N=` header so isolated nodes round-trip.
pub fn write_edge_list<W: Write>(graph: &Graph, mut writer: W) -> Result<()> {
    writeln!(writer, "# N={}", graph.node_count())?;
    for (u, v) in graph.edges() {
        writeln!(writer, "{u} {v}")?;
    }
    Ok(())
}

pub fn read_edge_list_path(path: &std::path::Path) -> Result<LoadedGraph> {
    let file = std::fs::File::open(path)?;
    read_edge_list(std::io::BufReader::new(file))
}

pub fn write_edge_list_path(graph: &Graph, path: &std::path::Path) -> Result<()> {
    let file = std::fs::File::create(path)?;
    write_edge_list(graph, std::io::BufWriter::new(file))
}
