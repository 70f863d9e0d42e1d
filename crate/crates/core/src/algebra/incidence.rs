use std::collections::HashMap;

use super::field::FieldSpec;
use crate::combinatorics::Poset;
use crate::error::{Error, Result};

/// Incidence algebra of a finite poset over a field, on the interval basis
/// `e_xy` (`x ≤ y`) with `e_xy · e_yz = e_xz` and all other products zero.
#[derive(Debug, Clone)]
pub struct IncidenceAlgebra {
    poset: Poset,
    basis: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
    /// basis indices `(u, v)` grouped by `v`
    ending_at: Vec<Vec<usize>>,
    /// basis indices `(u, v)` grouped by `u`
    starting_at: Vec<Vec<usize>>,
}

impl IncidenceAlgebra {
    pub fn new(p: &Poset) -> IncidenceAlgebra {
        let n = p.len();
        let mut basis = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x == y || p.lt_idx(x, y) {
                    basis.push((x, y));
                }
            }
        }
        let index = basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let mut ending_at = vec![Vec::new(); n];
        let mut starting_at = vec![Vec::new(); n];
        for (i, &(u, v)) in basis.iter().enumerate() {
            ending_at[v].push(i);
            starting_at[u].push(i);
        }
        IncidenceAlgebra {
            poset: p.clone(),
            basis,
            index,
            ending_at,
            starting_at,
        }
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    /// Basis intervals as `(x, y)` labels, in canonical order.
    pub fn basis_labels(&self) -> Vec<(&str, &str)> {
        let el = self.poset.elements();
        self.basis
            .iter()
            .map(|&(x, y)| (el[x].as_str(), el[y].as_str()))
            .collect()
    }

    /// Product of two basis elements, as a basis index.
    pub fn product(&self, a: usize, b: usize) -> Option<usize> {
        let (x, y) = self.basis[a];
        let (z, w) = self.basis[b];
        (y == z).then(|| self.index[&(x, w)])
    }

    pub fn is_associative(&self) -> bool {
        let n = self.dimension();
        (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    let left = self.product(a, b).and_then(|ab| self.product(ab, c));
                    let right = self.product(b, c).and_then(|bc| self.product(a, bc));
                    left == right
                })
            })
        })
    }

    /// Coefficients of the unit, `Σ e_xx`.
    pub fn identity(&self) -> Vec<i64> {
        self.basis.iter().map(|&(x, y)| i64::from(x == y)).collect()
    }

    /// Dimension of the space of derivations `D` with
    /// `D(ab) = D(a)b + aD(b)` on all pairs of basis elements.
    ///
    /// Unknown `d[a][c]` is the `e_c`-coefficient of `D(e_a)`.
    pub fn derivation_dimension(&self, k: FieldSpec) -> usize {
        let n = self.dimension();
        let var = |a: usize, c: usize| a * n + c;
        let mut rows: Vec<Vec<(usize, i64)>> = Vec::new();
        let mut eq: HashMap<usize, Vec<(usize, i64)>> = HashMap::new();
        for a in 0..n {
            let (x, y) = self.basis[a];
            for b in 0..n {
                let (z, w) = self.basis[b];
                eq.clear();
                // D(ab)
                if y == z {
                    let ab = self.index[&(x, w)];
                    for c in 0..n {
                        eq.entry(c).or_default().push((var(ab, c), 1));
                    }
                }
                // D(a)·b: e_(u,z)·e_(z,w) = e_(u,w)
                for &c in &self.ending_at[z] {
                    let u = self.basis[c].0;
                    eq.entry(self.index[&(u, w)]).or_default().push((var(a, c), -1));
                }
                // a·D(b): e_(x,y)·e_(y,v) = e_(x,v)
                for &c in &self.starting_at[y] {
                    let v = self.basis[c].1;
                    eq.entry(self.index[&(x, v)]).or_default().push((var(b, c), -1));
                }
                rows.extend(eq.drain().map(|(_, r)| r));
            }
        }
        n * n - k.sparse_rank(n * n, &rows)
    }

    /// Dimension of the center, from the equations `z·e_b = e_b·z`.
    pub fn center_dimension(&self, k: FieldSpec) -> usize {
        let n = self.dimension();
        let mut rows = Vec::new();
        let mut eq: HashMap<usize, Vec<(usize, i64)>> = HashMap::new();
        for b in 0..n {
            let (y, w) = self.basis[b];
            eq.clear();
            // z·e_b: e_(u,y)·e_(y,w)
            for &c in &self.ending_at[y] {
                let u = self.basis[c].0;
                eq.entry(self.index[&(u, w)]).or_default().push((c, 1));
            }
            // e_b·z: e_(y,w)·e_(w,v)
            for &c in &self.starting_at[w] {
                let v = self.basis[c].1;
                eq.entry(self.index[&(y, v)]).or_default().push((c, -1));
            }
            rows.extend(eq.drain().map(|(_, r)| r));
        }
        n - k.sparse_rank(n, &rows)
    }

    /// `dim Inn(A) = dim A - dim Z(A)`.
    pub fn inner_derivation_dimension(&self, k: FieldSpec) -> usize {
        self.dimension() - self.center_dimension(k)
    }
}

/// `dim_k HH¹(A) = dim Der(A) - dim Inn(A)` for the incidence algebra of a
/// connected poset.
pub fn hh1_dimension(p: &Poset, k: FieldSpec) -> Result<usize> {
    if !p.is_connected() {
        return Err(Error::Disconnected);
    }
    let a = IncidenceAlgebra::new(p);
    Ok(a.derivation_dimension(k) - a.inner_derivation_dimension(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poset(el: &[&str], rel: &[(&str, &str)]) -> Poset {
        Poset::from_relations(el.iter().copied(), rel.iter().copied()).unwrap()
    }

    fn hexagon() -> Poset {
        poset(
            &["a", "b", "c", "ab", "bc", "ac"],
            &[("a", "ab"), ("b", "ab"), ("a", "ac"), ("c", "ac"), ("b", "bc"), ("c", "bc")],
        )
    }

    #[test]
    fn dimensions() {
        assert_eq!(IncidenceAlgebra::new(&poset(&["a"], &[])).dimension(), 1);
        let chain = poset(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let alg = IncidenceAlgebra::new(&chain);
        assert_eq!(alg.dimension(), 6);
        assert!(alg.is_associative());
        assert_eq!(IncidenceAlgebra::new(&hexagon()).dimension(), 12);
    }

    #[test]
    fn single_point_is_the_field() {
        let p = poset(&["a"], &[]);
        let a = IncidenceAlgebra::new(&p);
        assert_eq!(a.derivation_dimension(FieldSpec::rationals()), 0);
        assert_eq!(a.center_dimension(FieldSpec::rationals()), 1);
        assert_eq!(hh1_dimension(&p, FieldSpec::rationals()).unwrap(), 0);
    }

    #[test]
    fn chain_and_hexagon() {
        let chain = poset(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        for ch in [0, 2, 3] {
            let k = FieldSpec::new(ch).unwrap();
            assert_eq!(hh1_dimension(&chain, k).unwrap(), 0);
            assert_eq!(hh1_dimension(&hexagon(), k).unwrap(), 1);
            assert_eq!(IncidenceAlgebra::new(&hexagon()).center_dimension(k), 1);
        }
    }

    #[test]
    fn disconnected_rejected() {
        let p = poset(&["a", "b"], &[]);
        assert_eq!(hh1_dimension(&p, FieldSpec::rationals()), Err(Error::Disconnected));
    }
}
