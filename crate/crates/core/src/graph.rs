//! Immutable simple undirected graphs and the `p`/`e` edge-list text format.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..vertex_count`.
///
/// Adjacency lists are sorted ascending and free of loops and repeats;
/// once built a `Graph` never changes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from unordered vertex pairs.
    ///
    /// Fails on the first self-loop, repeated pair (in either orientation) or
    /// endpoint outside `0..vertex_count`.
    pub fn from_edge_list<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            for id in [u, v] {
                if id >= vertex_count {
                    return Err(Error::VertexOutOfRange { id, vertex_count });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(u, v));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            adjacency,
            edge_count: seen.len(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges, cached at construction (`½ Σ deg(v)`).
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> Result<&[usize]> {
        self.check_vertex(v)?;
        Ok(&self.adjacency[v])
    }

    /// Unchecked neighbor access for hot loops.
    #[inline]
    pub(crate) fn adj(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.neighbors(v).map(<[usize]>::len)
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.iter().map(Vec::len)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.degrees().min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.degrees().max()
    }

    /// Degree multiset as `degree -> number of vertices with that degree`.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for d in self.degrees() {
            *hist.entry(d).or_insert(0) += 1;
        }
        hist
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// True iff a BFS from vertex 0 reaches every vertex. Graphs with zero or
    /// one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        self.first_unreachable().is_none()
    }

    /// Smallest vertex not reachable from vertex 0, if any.
    pub(crate) fn first_unreachable(&self) -> Option<usize> {
        let n = self.vertex_count();
        if n == 0 {
            return None;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            label[start] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for &v in &self.adjacency[u] {
                    if label[v] == usize::MAX {
                        label[v] = id;
                        members.push(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                id: v,
                vertex_count: self.vertex_count(),
            })
        }
    }

    /// Renders the graph in edge-list format: a `p <vertices> <edges>` header
    /// followed by one `e <u> <v>` line per edge, `u < v`, sorted.
    pub fn to_edge_list_string(&self) -> String {
        let mut out = String::new();
        writeln!(out, "p {} {}", self.vertex_count(), self.edge_count()).unwrap();
        for (u, v) in self.edges() {
            writeln!(out, "e {u} {v}").unwrap();
        }
        out
    }

    /// Parses the edge-list format.
    ///
    /// Lines starting with `#` and blank lines are skipped. Labels that are
    /// all integers in `0..vertex_count` are used as ids directly; any other
    /// labeling is remapped onto `0..` in sorted label order (numeric order
    /// when every label is an integer, otherwise lexicographic).
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut raw_edges: Vec<(usize, String, String)> = Vec::new();

        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            let parse_err = |message: String| Error::Parse { line: lineno, message };
            match (header.is_some(), tokens.as_slice()) {
                (false, ["p", vc, ec]) => {
                    let vc = vc.parse().map_err(|_| parse_err(format!("bad vertex count {vc:?}")))?;
                    let ec = ec.parse().map_err(|_| parse_err(format!("bad edge count {ec:?}")))?;
                    header = Some((vc, ec));
                }
                (false, _) => {
                    return Err(parse_err(format!(
                        "expected header \"p <vertex_count> <edge_count>\", found {trimmed:?}"
                    )))
                }
                (true, ["e", u, v]) => raw_edges.push((lineno, u.to_string(), v.to_string())),
                (true, _) => {
                    return Err(parse_err(format!(
                        "expected edge line \"e <u> <v>\", found {trimmed:?}"
                    )))
                }
            }
        }

        let (vertex_count, edge_count) = header.ok_or(Error::Parse {
            line: 0,
            message: "missing \"p\" header".into(),
        })?;
        if raw_edges.len() != edge_count {
            return Err(Error::Parse {
                line: 0,
                message: format!(
                    "header declares {edge_count} edges but {} edge lines follow",
                    raw_edges.len()
                ),
            });
        }

        let ids = label_map(vertex_count, &raw_edges)?;
        let edges = raw_edges.iter().map(|(_, u, v)| (ids[u.as_str()], ids[v.as_str()]));
        Graph::from_edge_list(vertex_count, edges)
    }
}

/// Assigns vertex ids to edge-line labels.
fn label_map(vertex_count: usize, raw_edges: &[(usize, String, String)]) -> Result<BTreeMap<&str, usize>> {
    let labels: BTreeSet<&str> = raw_edges
        .iter()
        .flat_map(|(_, u, v)| [u.as_str(), v.as_str()])
        .collect();
    let numeric: Option<Vec<(u128, &str)>> = labels.iter().map(|l| l.parse::<u128>().ok().map(|n| (n, *l))).collect();

    if let Some(numeric) = &numeric {
        if numeric.iter().all(|&(n, _)| n < vertex_count as u128) {
            return Ok(numeric.iter().map(|&(n, l)| (l, n as usize)).collect());
        }
    }

    if labels.len() > vertex_count {
        let line = raw_edges.last().map_or(0, |e| e.0);
        return Err(Error::Parse {
            line,
            message: format!(
                "{} distinct labels exceed the declared {vertex_count} vertices",
                labels.len()
            ),
        });
    }
    let ordered: Vec<&str> = match numeric {
        Some(mut numeric) => {
            numeric.sort_unstable();
            numeric.into_iter().map(|(_, l)| l).collect()
        }
        None => labels.into_iter().collect(),
    };
    Ok(ordered.into_iter().enumerate().map(|(i, l)| (l, i)).collect())
}
