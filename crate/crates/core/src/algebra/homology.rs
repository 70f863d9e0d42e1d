use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::field::FieldSpec;
use super::matrix::{smith_normal_form, IntMatrix};
use crate::combinatorics::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// Low-dimensional simplicial chain complex with lexicographic orientation:
/// `∂[v0,v1] = v1 - v0` and `∂[v0,v1,v2] = [v1,v2] - [v0,v2] + [v0,v1]`.
#[derive(Debug, Clone)]
pub struct ChainComplexData {
    pub vertices: Vec<Simplex>,
    pub edges: Vec<Simplex>,
    pub triangles: Vec<Simplex>,
    /// vertices × edges
    pub d1: IntMatrix,
    /// edges × triangles
    pub d2: IntMatrix,
}

impl ChainComplexData {
    pub fn new(c: &SimplicialComplex) -> ChainComplexData {
        let vertices: Vec<Simplex> = c.of_dim(0).into_iter().cloned().collect();
        let edges: Vec<Simplex> = c.of_dim(1).into_iter().cloned().collect();
        let triangles: Vec<Simplex> = c.of_dim(2).into_iter().cloned().collect();
        let d1 = boundary(&edges, &vertices);
        let d2 = boundary(&triangles, &edges);
        ChainComplexData {
            vertices,
            edges,
            triangles,
            d1,
            d2,
        }
    }

    pub fn boundaries_compose_to_zero(&self) -> bool {
        self.d1.mul(&self.d2).is_zero()
    }
}

fn boundary(cells: &[Simplex], faces: &[Simplex]) -> IntMatrix {
    let row: BTreeMap<&Simplex, usize> = faces.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut m = IntMatrix::zeros(faces.len(), cells.len());
    for (j, s) in cells.iter().enumerate() {
        for (k, f) in s.facets().iter().enumerate() {
            let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            m.set(row[f], j, sign);
        }
    }
    m
}

fn to_i64_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| i64::try_from(x).expect("boundary entries are ±1")).collect())
        .collect()
}

/// `H₁(c; ℤ)` as (free rank, torsion divisor chain).
pub fn h1_integral(c: &SimplicialComplex) -> Result<(usize, Vec<u64>)> {
    if !c.is_connected() {
        return Err(Error::Disconnected);
    }
    let chain = ChainComplexData::new(c);
    let s1 = smith_normal_form(&chain.d1);
    let s2 = smith_normal_form(&chain.d2);
    let rank = chain.edges.len() - s1.rank() - s2.rank();
    let torsion = s2
        .diagonal
        .iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .map(|d| u64::try_from(d).expect("torsion fits in u64"))
        .collect();
    Ok((rank, torsion))
}

/// `dim_k H¹(c; k)`, from ranks of the boundary maps over `k`.
pub fn h1_cohomology_dim(c: &SimplicialComplex, k: FieldSpec) -> usize {
    let chain = ChainComplexData::new(c);
    // δ⁰ = ∂₁ᵀ and δ¹ = ∂₂ᵀ have the same ranks as ∂₁, ∂₂
    let r1 = k.rank(&to_i64_rows(&chain.d1.transpose()));
    let r2 = k.rank(&to_i64_rows(&chain.d2.transpose()));
    chain.edges.len() - r1 - r2
}
