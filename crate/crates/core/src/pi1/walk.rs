use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::combinatorics::{Quiver, SimplicialComplex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Step {
    pub arrow: String,
    pub forward: bool,
}

impl Step {
    pub fn new(arrow: impl Into<String>, forward: bool) -> Step {
        Step {
            arrow: arrow.into(),
            forward,
        }
    }
}

/// A walk in the underlying graph of a quiver; arrows may be followed
/// backwards. Steps are stored in traversal order, first step first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    pub source: String,
    pub target: String,
    pub steps: Vec<Step>,
}

impl Walk {
    pub fn trivial(v: impl Into<String>) -> Walk {
        let v = v.into();
        Walk {
            source: v.clone(),
            target: v,
            steps: Vec::new(),
        }
    }

    /// Checks that the steps chain in `q` starting from `source`.
    pub fn new(q: &Quiver, source: impl Into<String>, steps: Vec<Step>) -> Result<Walk> {
        let source = source.into();
        if !q.vertices().contains(&source) {
            return Err(Error::MalformedWalk(format!("unknown start `{source}`")));
        }
        let mut at = source.clone();
        for s in &steps {
            let a = q
                .arrow(&s.arrow)
                .ok_or_else(|| Error::MalformedWalk(format!("unknown arrow `{}`", s.arrow)))?;
            let (from, to) = if s.forward {
                (&a.source, &a.target)
            } else {
                (&a.target, &a.source)
            };
            if *from != at {
                return Err(Error::MalformedWalk(format!(
                    "step `{}` starts at `{from}`, walk is at `{at}`",
                    s.arrow
                )));
            }
            at = to.clone();
        }
        Ok(Walk {
            source,
            target: at,
            steps,
        })
    }

    pub fn is_closed(&self) -> bool {
        self.source == self.target
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn inverse(&self) -> Walk {
        Walk {
            source: self.target.clone(),
            target: self.source.clone(),
            steps: self
                .steps
                .iter()
                .rev()
                .map(|s| Step::new(s.arrow.clone(), !s.forward))
                .collect(),
        }
    }

    /// `self` followed by `other`; panics if they do not meet.
    pub fn then(&self, other: &Walk) -> Walk {
        assert_eq!(self.target, other.source, "walks do not compose");
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().cloned());
        Walk {
            source: self.source.clone(),
            target: other.target.clone(),
            steps,
        }
    }

    /// Vertices visited, including both ends.
    pub fn vertices(&self, q: &Quiver) -> Vec<String> {
        let mut out = vec![self.source.clone()];
        for s in &self.steps {
            let a = q.arrow(&s.arrow).expect("walk arrows belong to the quiver");
            out.push(if s.forward { a.target.clone() } else { a.source.clone() });
        }
        out
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return write!(f, "e_{}", self.source);
        }
        let parts: Vec<String> = self
            .steps
            .iter()
            .map(|s| if s.forward { s.arrow.clone() } else { format!("{}^-1", s.arrow) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A vertex sequence in which consecutive vertices span a simplex (or
/// repeat). Stored in traversal order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgePath {
    pub vertices: Vec<String>,
}

impl EdgePath {
    pub fn new(c: &SimplicialComplex, vertices: Vec<String>) -> Result<EdgePath> {
        if vertices.is_empty() {
            return Err(Error::EmptyInput("edge-path has no vertices"));
        }
        for v in &vertices {
            if !c.vertices().contains(v) {
                return Err(Error::UnknownVertex(v.clone()));
            }
        }
        for w in vertices.windows(2) {
            if !c.has_edge(&w[0], &w[1]) {
                return Err(Error::NotAnEdgePath(w[0].clone(), w[1].clone()));
            }
        }
        Ok(EdgePath { vertices })
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }
}

/// Breadth-first spanning tree. `parent[v] = (parent vertex, edge id)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    pub root: String,
    pub tree_edges: BTreeSet<String>,
    pub parent: BTreeMap<String, (String, String)>,
}

impl SpanningTree {
    /// BFS over `neighbors(v) -> [(w, edge id)]`, visiting neighbors in the
    /// order given. Returns `None` if some vertex of `all` is unreached.
    pub fn bfs<'a, F>(root: &str, all: impl IntoIterator<Item = &'a String>, mut neighbors: F) -> Option<SpanningTree>
    where
        F: FnMut(&str) -> Vec<(String, String)>,
    {
        let mut parent = BTreeMap::new();
        let mut tree_edges = BTreeSet::new();
        let mut seen = BTreeSet::from([root.to_string()]);
        let mut queue = VecDeque::from([root.to_string()]);
        while let Some(v) = queue.pop_front() {
            for (w, edge) in neighbors(&v) {
                if seen.insert(w.clone()) {
                    tree_edges.insert(edge.clone());
                    parent.insert(w.clone(), (v.clone(), edge));
                    queue.push_back(w);
                }
            }
        }
        if all.into_iter().any(|v| !seen.contains(v)) {
            return None;
        }
        Some(SpanningTree {
            root: root.to_string(),
            tree_edges,
            parent,
        })
    }

    pub fn contains_edge(&self, id: &str) -> bool {
        self.tree_edges.contains(id)
    }

    /// Tree vertices from the root down to `v`.
    pub fn path_from_root(&self, v: &str) -> Vec<(String, String)> {
        let mut out = Vec::new();
        let mut cur = v.to_string();
        while let Some((p, e)) = self.parent.get(&cur) {
            out.push((cur.clone(), e.clone()));
            cur = p.clone();
        }
        out.reverse();
        out
    }
}
