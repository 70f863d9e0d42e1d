use std::collections::{BTreeMap, BTreeSet};

use super::complex::{Simplex, SimplicialComplex, UnionFind};
use crate::error::{Error, Result};

/// A finite poset. The strict order is stored transitively closed as a
/// boolean matrix over the lexicographically sorted elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<String>,
    index: BTreeMap<String, usize>,
    less: Vec<Vec<bool>>,
}

impl Poset {
    /// Builds a poset from generating relations `x < y`, taking the
    /// transitive closure. Fails if the closure is not irreflexive.
    pub fn from_relations<E, R, S>(elements: E, relations: R) -> Result<Poset>
    where
        E: IntoIterator<Item = S>,
        S: Into<String>,
        R: IntoIterator<Item = (S, S)>,
    {
        let elements: BTreeSet<String> = elements.into_iter().map(Into::into).collect();
        if elements.is_empty() {
            return Err(Error::EmptyInput("poset has no elements"));
        }
        let elements: Vec<String> = elements.into_iter().collect();
        let index: BTreeMap<String, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        let n = elements.len();
        let mut less = vec![vec![false; n]; n];
        for (x, y) in relations {
            let (x, y) = (x.into(), y.into());
            let xi = *index.get(&x).ok_or_else(|| Error::UnknownVertex(x.clone()))?;
            let yi = *index.get(&y).ok_or_else(|| Error::UnknownVertex(y.clone()))?;
            if xi == yi {
                return Err(Error::NotAnOrder(x, y));
            }
            less[xi][yi] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if less[i][k] {
                    for j in 0..n {
                        if less[k][j] {
                            less[i][j] = true;
                        }
                    }
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| less[i][i]) {
            let j = (0..n).find(|&j| less[i][j] && less[j][i]).unwrap_or(i);
            return Err(Error::NotAnOrder(elements[i].clone(), elements[j].clone()));
        }
        Ok(Poset {
            elements,
            index,
            less,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub(crate) fn lt_idx(&self, i: usize, j: usize) -> bool {
        self.less[i][j]
    }

    pub fn lt(&self, x: &str, y: &str) -> bool {
        match (self.index_of(x), self.index_of(y)) {
            (Some(i), Some(j)) => self.less[i][j],
            _ => false,
        }
    }

    pub fn le(&self, x: &str, y: &str) -> bool {
        x == y && self.index.contains_key(x) || self.lt(x, y)
    }

    pub fn comparable(&self, x: &str, y: &str) -> bool {
        self.le(x, y) || self.lt(y, x)
    }

    /// All strict pairs `(x, y)` with `x < y`, lexicographically ordered.
    pub fn relations(&self) -> Vec<(&str, &str)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.less[i][j] {
                    out.push((self.elements[i].as_str(), self.elements[j].as_str()));
                }
            }
        }
        out
    }

    pub(crate) fn covers_idx(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.less[i][j] && !(0..n).any(|k| self.less[i][k] && self.less[k][j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Cover pairs `x ⋖ y`: `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(&str, &str)> {
        self.covers_idx()
            .into_iter()
            .map(|(i, j)| (self.elements[i].as_str(), self.elements[j].as_str()))
            .collect()
    }

    /// Connectivity of the comparability graph (equivalently, of the Hasse quiver).
    pub fn is_connected(&self) -> bool {
        let n = self.len();
        let mut uf = UnionFind::new(n);
        for (i, j) in self.covers_idx() {
            uf.union(i, j);
        }
        uf.components() == 1
    }

    /// Number of intervals `x ≤ y`, counting the trivial ones.
    pub fn num_intervals(&self) -> usize {
        self.len() + self.less.iter().flatten().filter(|&&b| b).count()
    }

    /// All non-empty chains, each listed from smallest to largest element.
    pub fn chains(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut out = Vec::new();
        let mut stack: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
        while let Some(chain) = stack.pop() {
            let top = *chain.last().unwrap();
            for j in 0..n {
                if self.less[top][j] {
                    let mut next = chain.clone();
                    next.push(j);
                    stack.push(next);
                }
            }
            out.push(chain);
        }
        out
    }

    /// Saturated chains from `x` up to `y` (`x < y`), i.e. Hasse paths, in
    /// lexicographic order of their label sequences.
    pub fn maximal_chains_between(&self, x: usize, y: usize) -> Vec<Vec<usize>> {
        let covers = self.covers_idx();
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); self.len()];
        for (i, j) in covers {
            up[i].push(j);
        }
        let mut out = Vec::new();
        let mut stack = vec![vec![x]];
        while let Some(chain) = stack.pop() {
            let top = *chain.last().unwrap();
            if top == y {
                out.push(chain);
                continue;
            }
            for &j in &up[top] {
                if j == y || self.less[j][y] {
                    let mut next = chain.clone();
                    next.push(j);
                    stack.push(next);
                }
            }
        }
        out.sort_by(|a, b| {
            let la: Vec<&str> = a.iter().map(|&i| self.elements[i].as_str()).collect();
            let lb: Vec<&str> = b.iter().map(|&i| self.elements[i].as_str()).collect();
            la.cmp(&lb)
        });
        out
    }
}

/// Face poset of a complex: its simplexes ordered by inclusion. Element
/// labels are the sorted vertex labels joined by `+`.
pub fn pos_of_complex(c: &SimplicialComplex) -> Poset {
    let simplexes: Vec<&Simplex> = c.simplexes().iter().collect();
    let mut rels = Vec::new();
    for a in &simplexes {
        for b in &simplexes {
            if a.is_proper_face_of(b) {
                rels.push((a.label(), b.label()));
            }
        }
    }
    Poset::from_relations(simplexes.iter().map(|s| s.label()), rels)
        .expect("inclusion of simplexes is a strict order")
}

/// Order complex: the simplexes are the non-empty chains of `p`.
pub fn sim_of_poset(p: &Poset) -> SimplicialComplex {
    let simplexes = p.chains().into_iter().map(|chain| {
        Simplex::new(chain.into_iter().map(|i| p.elements()[i].clone()))
            .expect("chains are non-empty")
    });
    SimplicialComplex::validate(p.elements().iter().cloned(), simplexes)
        .expect("chains of a poset are closed under subsets")
}

/// Barycentric subdivision, `Sim(Pos(c))`.
pub fn barycentric(c: &SimplicialComplex) -> SimplicialComplex {
    sim_of_poset(&pos_of_complex(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> Poset {
        Poset::from_relations(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap()
    }

    fn filled_triangle() -> SimplicialComplex {
        SimplicialComplex::closure([Simplex::new(["a", "b", "c"]).unwrap()]).unwrap()
    }

    fn triangle_boundary() -> SimplicialComplex {
        SimplicialComplex::closure(
            [["a", "b"], ["b", "c"], ["a", "c"]].map(|e| Simplex::new(e).unwrap()),
        )
        .unwrap()
    }

    #[test]
    fn closure_and_covers() {
        let p = chain3();
        assert!(p.lt("a", "c"));
        assert_eq!(p.covers(), vec![("a", "b"), ("b", "c")]);
        assert_eq!(p.num_intervals(), 6);
    }

    #[test]
    fn cycles_are_rejected() {
        let err = Poset::from_relations(["a", "b"], [("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, Error::NotAnOrder(_, _)));
    }

    #[test]
    fn pos_of_filled_triangle() {
        let p = pos_of_complex(&filled_triangle());
        assert_eq!(p.len(), 7);
        // S_i < A_j exactly when the vertex lies on the edge, everything < T
        assert!(p.lt("a", "a+b") && !p.lt("c", "a+b"));
        assert!(p.lt("a", "a+b+c") && p.lt("b+c", "a+b+c"));
        assert_eq!(p.relations().len(), 6 + 3 + 3);
    }

    #[test]
    fn pos_of_vertex_and_boundary() {
        let c = SimplicialComplex::closure([Simplex::new(["a"]).unwrap()]).unwrap();
        assert_eq!(pos_of_complex(&c).len(), 1);
        let p = pos_of_complex(&triangle_boundary());
        assert_eq!(p.len(), 6);
        let maximal = p
            .elements()
            .iter()
            .filter(|x| !p.elements().iter().any(|y| p.lt(x, y)))
            .count();
        assert_eq!(maximal, 3);
    }

    #[test]
    fn sim_of_chain_is_full_simplex() {
        let c = sim_of_poset(&chain3());
        assert_eq!(c.num_simplexes(), 7);
        assert!(c.contains(&Simplex::new(["a", "b", "c"]).unwrap()));
    }

    #[test]
    fn sim_of_antichain() {
        let p = Poset::from_relations(["a", "b"], Vec::<(&str, &str)>::new()).unwrap();
        let c = sim_of_poset(&p);
        assert_eq!(c.num_simplexes(), 2);
        assert!(!c.is_connected());
    }

    #[test]
    fn barycentric_counts() {
        let b = barycentric(&filled_triangle());
        assert_eq!(b.of_dim(0).len(), 7);
        assert_eq!(b.of_dim(1).len(), 12);
        assert_eq!(b.of_dim(2).len(), 6);
        assert_eq!(b.num_simplexes(), 25);

        let edge = SimplicialComplex::closure([Simplex::new(["a", "b"]).unwrap()]).unwrap();
        let b = barycentric(&edge);
        assert_eq!((b.of_dim(0).len(), b.of_dim(1).len()), (3, 2));
        assert!(b.has_edge("a", "a+b") && b.has_edge("a+b", "b"));

        let hex = barycentric(&triangle_boundary());
        assert_eq!((hex.of_dim(0).len(), hex.of_dim(1).len(), hex.of_dim(2).len()), (6, 6, 0));
    }

    #[test]
    fn saturated_chains_sorted() {
        let p = Poset::from_relations(
            ["a", "b", "c", "d"],
            [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
        )
        .unwrap();
        let chains = p.maximal_chains_between(0, 3);
        assert_eq!(chains, vec![vec![0, 1, 3], vec![0, 2, 3]]);
    }
}
