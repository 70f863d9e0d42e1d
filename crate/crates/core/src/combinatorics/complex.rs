use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// A non-empty set of vertex labels, kept sorted.
///
/// Simplexes order by dimension first, then lexicographically, so iterating a
/// `BTreeSet<Simplex>` walks vertices, then edges, then triangles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Simplex(Vec<String>);

impl Simplex {
    pub fn new<I, S>(labels: I) -> Result<Simplex>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let set: BTreeSet<String> = labels.into_iter().map(Into::into).collect();
        if set.is_empty() {
            return Err(Error::EmptySimplex);
        }
        Ok(Simplex(set.into_iter().collect()))
    }

    pub fn vertices(&self) -> &[String] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: &str) -> bool {
        self.0.binary_search_by(|x| x.as_str().cmp(v)).is_ok()
    }

    pub fn is_proper_face_of(&self, other: &Simplex) -> bool {
        self.len() < other.len() && self.0.iter().all(|v| other.contains(v))
    }

    /// Faces of codimension one, in lexicographic order of the removed vertex.
    pub fn facets(&self) -> Vec<Simplex> {
        if self.0.len() < 2 {
            return Vec::new();
        }
        (0..self.0.len())
            .map(|skip| {
                Simplex(
                    self.0
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, v)| v.clone())
                        .collect(),
                )
            })
            .collect()
    }

    /// All non-empty subsets, including the simplex itself.
    pub fn all_faces(&self) -> Vec<Simplex> {
        let n = self.0.len();
        (1u64..(1u64 << n))
            .map(|mask| {
                Simplex(
                    (0..n)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| self.0[i].clone())
                        .collect(),
                )
            })
            .collect()
    }

    /// Canonical label used when the simplex becomes a poset element.
    pub fn label(&self) -> String {
        self.0.join("+")
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.join(","))
    }
}

/// A finite simplicial complex whose face family has been checked to be
/// downward closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: BTreeSet<String>,
    simplexes: BTreeSet<Simplex>,
    connected: bool,
}

impl SimplicialComplex {
    /// Validates a candidate complex. Missing faces are rejected, never added.
    pub fn validate<V, S>(vertices: V, simplexes: S) -> Result<SimplicialComplex>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        S: IntoIterator<Item = Simplex>,
    {
        let vertices: BTreeSet<String> = vertices.into_iter().map(Into::into).collect();
        if vertices.is_empty() {
            return Err(Error::EmptyInput("complex has no vertices"));
        }
        let simplexes: BTreeSet<Simplex> = simplexes.into_iter().collect();
        for s in &simplexes {
            if let Some(v) = s.vertices().iter().find(|v| !vertices.contains(*v)) {
                return Err(Error::UnknownVertex(v.clone()));
            }
        }
        for v in &vertices {
            let single = Simplex(vec![v.clone()]);
            if !simplexes.contains(&single) {
                return Err(Error::MissingFace {
                    face: vec![v.clone()],
                    simplex: vec![v.clone()],
                });
            }
        }
        // checking facets suffices: closure then follows by induction on dimension
        for s in &simplexes {
            let mut facets = s.facets();
            facets.sort();
            for f in facets {
                if !simplexes.contains(&f) {
                    return Err(Error::MissingFace {
                        face: f.0,
                        simplex: s.0.clone(),
                    });
                }
            }
        }
        let connected = one_skeleton_connected(&vertices, &simplexes);
        Ok(SimplicialComplex {
            vertices,
            simplexes,
            connected,
        })
    }

    /// Builds the smallest complex containing the given simplexes.
    pub fn closure<S>(simplexes: S) -> Result<SimplicialComplex>
    where
        S: IntoIterator<Item = Simplex>,
    {
        let mut all = BTreeSet::new();
        for s in simplexes {
            all.extend(s.all_faces());
        }
        let vertices: BTreeSet<String> = all
            .iter()
            .flat_map(|s: &Simplex| s.vertices().iter().cloned())
            .collect();
        SimplicialComplex::validate(vertices, all)
    }

    pub fn vertices(&self) -> &BTreeSet<String> {
        &self.vertices
    }

    pub fn simplexes(&self) -> &BTreeSet<Simplex> {
        &self.simplexes
    }

    pub fn num_simplexes(&self) -> usize {
        self.simplexes.len()
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn dimension(&self) -> usize {
        self.simplexes.iter().map(Simplex::dim).max().unwrap_or(0)
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplexes.contains(s)
    }

    /// Simplexes of a given dimension, lexicographically sorted.
    pub fn of_dim(&self, dim: usize) -> Vec<&Simplex> {
        self.simplexes.iter().filter(|s| s.dim() == dim).collect()
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        if u == v {
            return self.vertices.contains(u);
        }
        Simplex::new([u, v]).map(|s| self.simplexes.contains(&s)).unwrap_or(false)
    }

    /// Neighbors of a vertex in the 1-skeleton, lexicographically sorted.
    pub fn neighbors(&self, v: &str) -> Vec<&str> {
        let mut out: Vec<&str> = self
            .of_dim(1)
            .into_iter()
            .filter(|e| e.contains(v))
            .map(|e| {
                let vs = e.vertices();
                if vs[0] == v {
                    vs[1].as_str()
                } else {
                    vs[0].as_str()
                }
            })
            .collect();
        out.sort_unstable();
        out
    }
}

fn one_skeleton_connected(vertices: &BTreeSet<String>, simplexes: &BTreeSet<Simplex>) -> bool {
    let index: BTreeMap<&str, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_str(), i))
        .collect();
    let mut uf = UnionFind::new(vertices.len());
    for s in simplexes.iter().filter(|s| s.dim() == 1) {
        let vs = s.vertices();
        uf.union(index[vs[0].as_str()], index[vs[1].as_str()]);
    }
    uf.components() == 1
}

#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    pub(crate) fn components(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[&str]) -> Simplex {
        Simplex::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn smallest_edge() {
        let c = SimplicialComplex::validate(["a", "b"], [s(&["a"]), s(&["b"]), s(&["a", "b"])]).unwrap();
        assert!(c.is_connected());
        assert_eq!(c.num_simplexes(), 3);
    }

    #[test]
    fn filled_triangle_is_valid() {
        let c = SimplicialComplex::closure([s(&["a", "b", "c"])]).unwrap();
        assert_eq!(c.num_simplexes(), 7);
        assert_eq!(c.dimension(), 2);
    }

    #[test]
    fn missing_face_is_rejected() {
        let err = SimplicialComplex::validate(
            ["a", "b", "c"],
            [s(&["a"]), s(&["b"]), s(&["c"]), s(&["a", "b"]), s(&["a", "b", "c"])],
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::MissingFace {
                face: vec!["a".into(), "c".into()],
                simplex: vec!["a".into(), "b".into(), "c".into()]
            }
        );
    }

    #[test]
    fn unknown_and_empty() {
        assert_eq!(Simplex::new(Vec::<String>::new()), Err(Error::EmptySimplex));
        let err = SimplicialComplex::validate(["a"], [s(&["a"]), s(&["z"])]).unwrap_err();
        assert_eq!(err, Error::UnknownVertex("z".into()));
        let err = SimplicialComplex::validate(Vec::<String>::new(), []).unwrap_err();
        assert!(matches!(err, Error::EmptyInput(_)));
    }

    #[test]
    fn disconnected_is_recorded() {
        let c = SimplicialComplex::validate(["a", "b"], [s(&["a"]), s(&["b"])]).unwrap();
        assert!(!c.is_connected());
    }
}
