//! Simple graphs of maximum degree three.

mod boost;
mod edgelist;
mod generate;
mod girth;
mod named;

use arrayvec::ArrayVec;
use thiserror::Error;

pub use boost::{boost_girth, count_short_cycles, BoostOutcome};
pub use edgelist::{load_edge_list, save_edge_list};
pub use generate::generate_random_cubic;
pub use girth::{girth, shortest_cycle_len, GirthReport};
pub use named::{cycle_graph, lcf_graph, named_graph, NAMED_GRAPHS};

pub type Vertex = usize;
pub type Neighbors = ArrayVec<Vertex, 3>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {vertex} has degree {degree} (maximum is 3)")]
    DegreeViolation { vertex: Vertex, degree: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("graph is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: Vertex, degree: usize },
    #[error("invalid order {0}: a cubic graph needs an even number of vertices, at least 4")]
    InvalidOrder(usize),
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
}

/// Immutable simple graph with every degree at most three.
///
/// Neighbour lists are sorted, so equal edge sets give equal graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CubicGraph {
    adj: Vec<Neighbors>,
}

impl CubicGraph {
    /// Builds a graph on vertices `0..n`, rejecting loops, repeated edges and
    /// degrees above three.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, GraphError> {
        let mut adj = vec![Neighbors::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].contains(&v) {
                return Err(GraphError::ParallelEdge(u.min(v), u.max(v)));
            }
            for (x, y) in [(u, v), (v, u)] {
                if adj[x].try_push(y).is_err() {
                    return Err(GraphError::DegreeViolation { vertex: x, degree: 4 });
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self { adj })
    }

    /// Internal constructor for adjacency already known to be valid.
    pub(crate) fn from_adjacency(mut adj: Vec<Neighbors>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = Self { adj };
        debug_assert!(g.validate().is_ok());
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn is_cubic(&self) -> bool {
        self.adj.iter().all(|a| a.len() == 3)
    }

    /// Fails with the first vertex whose degree is not three.
    pub fn require_cubic(&self) -> Result<(), GraphError> {
        match self.adj.iter().position(|a| a.len() != 3) {
            None => Ok(()),
            Some(vertex) => Err(GraphError::NotCubic { vertex, degree: self.adj[vertex].len() }),
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Degree histogram `[#deg0, #deg1, #deg2, #deg3]`.
    pub fn degree_histogram(&self) -> [usize; 4] {
        let mut h = [0; 4];
        for list in &self.adj {
            h[list.len()] += 1;
        }
        h
    }

    /// Checks symmetry, simplicity and the degree bound.
    pub fn validate(&self) -> Result<(), GraphError> {
        let n = self.n();
        for (u, list) in self.adj.iter().enumerate() {
            for (i, &v) in list.iter().enumerate() {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
                if v == u {
                    return Err(GraphError::SelfLoop(u));
                }
                if list[..i].contains(&v) {
                    return Err(GraphError::ParallelEdge(u.min(v), u.max(v)));
                }
                if !self.adj[v].contains(&u) {
                    return Err(GraphError::Parse { line: 0, message: format!("asymmetric adjacency {u}->{v}") });
                }
            }
        }
        Ok(())
    }

    /// True when no two vertices of `set` are adjacent.
    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        self.find_edge_within(set).is_none()
    }

    /// Some edge with both ends in `set`, if one exists.
    pub fn find_edge_within(&self, set: &[Vertex]) -> Option<(Vertex, Vertex)> {
        let mut mark = vec![false; self.n()];
        for &v in set {
            mark[v] = true;
        }
        self.edges().find(|&(u, v)| mark[u] && mark[v])
    }

    pub(crate) fn adjacency(&self) -> &[Neighbors] {
        &self.adj
    }
}
