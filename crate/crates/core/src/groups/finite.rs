use std::collections::BTreeMap;

use super::presentation::Presentation;
use crate::error::{Error, Result};

/// Default cap on `|target|^generators` for [`count_homs`].
pub const DEFAULT_HOM_BUDGET: u128 = 100_000_000;

/// A finite group given by its multiplication table. Element 0 is the
/// identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from a Cayley table. Checks identity at 0, closure,
    /// inverses and associativity.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>) -> Option<FiniteGroup> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return None;
        }
        if (0..n).any(|x| table[0][x] != x || table[x][0] != x) {
            return None;
        }
        let mut inverse = vec![0; n];
        for x in 0..n {
            inverse[x] = (0..n).find(|&y| table[x][y] == 0 && table[y][x] == 0)?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return None;
                    }
                }
            }
        }
        Some(FiniteGroup {
            name: name.into(),
            table,
            inverse,
        })
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(format!("C{n}"), table).expect("cyclic group table")
    }

    /// Symmetric group on `n` points; elements are permutations in
    /// lexicographic order, so the identity comes first.
    pub fn symmetric(n: usize) -> FiniteGroup {
        let perms = permutations(n);
        let index: BTreeMap<&Vec<usize>, usize> =
            perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        // (p*q)(i) = p(q(i))
                        let pq: Vec<usize> = (0..n).map(|i| p[q[i]]).collect();
                        index[&pq]
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(format!("S{n}"), table).expect("symmetric group table")
    }

    /// Built-in targets: `C2`, `C3`, `C4`, `C6`, `S3`, `S4`.
    pub fn by_name(name: &str) -> Option<FiniteGroup> {
        match name {
            "C2" => Some(FiniteGroup::cyclic(2)),
            "C3" => Some(FiniteGroup::cyclic(3)),
            "C4" => Some(FiniteGroup::cyclic(4)),
            "C6" => Some(FiniteGroup::cyclic(6)),
            "S3" => Some(FiniteGroup::symmetric(3)),
            "S4" => Some(FiniteGroup::symmetric(4)),
            _ => None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Number of homomorphisms from the presented group to `target`: tuples of
/// generator images satisfying every relator. A relator is checked as soon
/// as all of its generators have images, which prunes the search without
/// changing the count.
pub fn count_homs(p: &Presentation, target: &FiniteGroup, budget: u128) -> Result<u64> {
    let n = p.num_generators();
    let order = target.order() as u128;
    let needed = (0..n).try_fold(1u128, |acc, _| acc.checked_mul(order)).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::TargetTooLarge { needed, budget });
    }
    let col: BTreeMap<&str, usize> = p
        .generators()
        .iter()
        .enumerate()
        .map(|(i, g)| (g.as_str(), i))
        .collect();
    // relators as (generator index, inverse) sequences, bucketed by the last
    // generator they need
    let mut by_depth: Vec<Vec<Vec<(usize, bool)>>> = vec![Vec::new(); n.max(1)];
    for r in p.relators() {
        let coded: Vec<(usize, bool)> = r
            .letters()
            .iter()
            .map(|l| (col[l.generator.as_str()], l.inverse))
            .collect();
        match coded.iter().map(|&(g, _)| g).max() {
            Some(depth) => by_depth[depth].push(coded),
            None => continue,
        }
    }
    if n == 0 {
        return Ok(1);
    }
    let mut images = vec![0usize; n];
    Ok(search(0, &mut images, &by_depth, target))
}

fn search(
    depth: usize,
    images: &mut Vec<usize>,
    by_depth: &[Vec<Vec<(usize, bool)>>],
    g: &FiniteGroup,
) -> u64 {
    let mut count = 0;
    for x in 0..g.order() {
        images[depth] = x;
        let ok = by_depth[depth].iter().all(|r| {
            r.iter().fold(0, |acc, &(gen, inv)| {
                let v = images[gen];
                g.mul(acc, if inv { g.inv(v) } else { v })
            }) == 0
        });
        if !ok {
            continue;
        }
        count += if depth + 1 == images.len() {
            1
        } else {
            search(depth + 1, images, by_depth, g)
        };
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::Word;

    #[test]
    fn builtin_orders() {
        for (name, order) in [("C2", 2), ("C3", 3), ("C4", 4), ("C6", 6), ("S3", 6), ("S4", 24)] {
            assert_eq!(FiniteGroup::by_name(name).unwrap().order(), order);
        }
        assert!(FiniteGroup::by_name("A5").is_none());
    }

    #[test]
    fn non_group_tables_rejected() {
        assert!(FiniteGroup::from_table("bad", vec![vec![0, 1], vec![1, 1]]).is_none());
    }

    #[test]
    fn count_examples() {
        let c4 = FiniteGroup::cyclic(4);
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(count_homs(&Presentation::free(["a"]), &c4, DEFAULT_HOM_BUDGET).unwrap(), 4);
        assert_eq!(
            count_homs(&Presentation::free(["a", "b", "c"]), &s3, DEFAULT_HOM_BUDGET).unwrap(),
            216
        );
        assert_eq!(count_homs(&Presentation::trivial(), &s3, DEFAULT_HOM_BUDGET).unwrap(), 1);
        let z2 = Presentation::new(["a"], vec![Word::parse("a a").unwrap()]).unwrap();
        // involutions of S3 plus the identity
        assert_eq!(count_homs(&z2, &s3, DEFAULT_HOM_BUDGET).unwrap(), 4);
        // commuting pairs in S3: sum of centralizer orders = |G| * #classes
        let z2z = Presentation::new(["a", "b"], vec![Word::parse("a b a^-1 b^-1").unwrap()]).unwrap();
        assert_eq!(count_homs(&z2z, &s3, DEFAULT_HOM_BUDGET).unwrap(), 18);
    }

    #[test]
    fn budget_enforced() {
        let p = Presentation::free(["a", "b", "c"]);
        let err = count_homs(&p, &FiniteGroup::symmetric(4), 1000).unwrap_err();
        assert_eq!(err, Error::TargetTooLarge { needed: 13824, budget: 1000 });
    }
}
