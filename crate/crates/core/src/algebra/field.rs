use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::UnionFind;
use crate::error::{Error, Result};

/// Characteristic of the coefficient field: 0 means ℚ, otherwise `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldSpec {
    characteristic: u64,
}

impl FieldSpec {
    pub fn new(characteristic: u64) -> Result<FieldSpec> {
        if characteristic == 0 || is_prime(characteristic) {
            Ok(FieldSpec { characteristic })
        } else {
            Err(Error::NonPrimeCharacteristic(characteristic))
        }
    }

    pub fn rationals() -> FieldSpec {
        FieldSpec { characteristic: 0 }
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    /// Rank of a dense integer matrix, reduced into this field.
    pub fn rank(&self, rows: &[Vec<i64>]) -> usize {
        if self.characteristic == 0 {
            rank_rational(rows)
        } else {
            rank_mod_p(rows, self.characteristic)
        }
    }

    /// Rank of a sparse system given as rows of `(column, coefficient)`.
    /// Columns that never meet through a shared row are solved separately.
    pub fn sparse_rank(&self, num_vars: usize, rows: &[Vec<(usize, i64)>]) -> usize {
        let mut uf = UnionFind::new(num_vars);
        for row in rows {
            for w in row.windows(2) {
                uf.union(w[0].0, w[1].0);
            }
        }
        let mut blocks: BTreeMap<usize, BTreeSet<Vec<(usize, i64)>>> = BTreeMap::new();
        for row in rows {
            let Some(&(first, _)) = row.first() else {
                continue;
            };
            let mut canon = row.clone();
            canon.sort_unstable();
            blocks.entry(uf.find(first)).or_default().insert(canon);
        }
        blocks
            .values()
            .map(|block| {
                let vars: BTreeSet<usize> = block.iter().flatten().map(|&(v, _)| v).collect();
                let col: BTreeMap<usize, usize> =
                    vars.iter().enumerate().map(|(i, &v)| (v, i)).collect();
                let dense: Vec<Vec<i64>> = block
                    .iter()
                    .map(|row| {
                        let mut r = vec![0i64; vars.len()];
                        for &(v, c) in row {
                            r[col[&v]] += c;
                        }
                        r
                    })
                    .collect();
                self.rank(&dense)
            })
            .sum()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let p = p as i128;
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| (x as i128).rem_euclid(p)).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = mod_pow(m[rank][col], p - 2, p);
        for x in m[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let f = row[col];
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_pow(mut b: i128, mut e: i128, p: i128) -> i128 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn rank_rational(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = BigRational::one() / &m[rank][col];
        for x in m[rank].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[rank].clone();
        for i in 0..m.len() {
            if i != rank && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        rank += 1;
    }
    rank
}
