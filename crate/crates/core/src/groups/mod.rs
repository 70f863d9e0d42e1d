//! Finitely presented groups and the invariants used to compare them.
//!
//! Isomorphism of finitely presented groups is undecidable, so comparisons
//! go through an [`InvariantReport`]: abelianization plus homomorphism
//! counts into a few small finite groups. Two reports can only ever say
//! "equal" or "distinguished by ...".

mod finite;
mod presentation;
mod word;

use std::collections::BTreeMap;
use std::fmt;

pub use finite::{count_homs, FiniteGroup, DEFAULT_HOM_BUDGET};
pub use presentation::Presentation;
pub use word::{Letter, Word};

use crate::algebra::FieldSpec;
use crate::error::Result;

/// Targets always counted by [`invariant_suite`].
pub const STANDARD_TARGETS: [&str; 4] = ["C2", "C3", "C4", "S3"];

/// Above this many generators (after simplification) `S4` is skipped.
pub const S4_MAX_GENERATORS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub abelian_rank: usize,
    pub torsion: Vec<u64>,
    pub hom_counts: BTreeMap<String, u64>,
}

impl InvariantReport {
    /// Name of the first invariant on which the two reports differ.
    pub fn distinguishing(&self, other: &InvariantReport) -> Option<String> {
        if self.abelian_rank != other.abelian_rank {
            return Some("abelian rank".into());
        }
        if self.torsion != other.torsion {
            return Some("torsion".into());
        }
        for (k, v) in &self.hom_counts {
            if let Some(w) = other.hom_counts.get(k) {
                if v != w {
                    return Some(format!("hom count into {k}"));
                }
            }
        }
        if self.hom_counts.len() != other.hom_counts.len() {
            return Some("set of hom targets".into());
        }
        None
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "invariants: rank {}", self.abelian_rank)?;
        write!(f, "torsion:")?;
        for d in &self.torsion {
            write!(f, " {d}")?;
        }
        write!(f, "\nhoms:")?;
        for (k, v) in &self.hom_counts {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

/// What a simplified presentation literally is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupShape {
    Trivial,
    Free(usize),
    /// Neither trivial nor free on sight; only invariants are known.
    Presented,
}

impl GroupShape {
    pub fn of(simplified: &Presentation) -> GroupShape {
        if simplified.is_trivial() {
            GroupShape::Trivial
        } else if simplified.is_free() {
            GroupShape::Free(simplified.num_generators())
        } else {
            GroupShape::Presented
        }
    }
}

impl fmt::Display for GroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupShape::Trivial => write!(f, "trivial"),
            GroupShape::Free(n) => write!(f, "free of rank {n}"),
            GroupShape::Presented => write!(f, "presented (compare by invariants)"),
        }
    }
}

/// Abelianization rank and torsion of a presented group.
pub fn abelianization_invariants(p: &Presentation) -> (usize, Vec<u64>) {
    p.abelianization()
}

/// Abelianization plus hom counts into `C2, C3, C4, S3`, and `S4` when the
/// simplified presentation has at most six generators and fits the budget.
pub fn invariant_suite(p: &Presentation) -> Result<InvariantReport> {
    invariant_suite_with_budget(p, DEFAULT_HOM_BUDGET)
}

pub fn invariant_suite_with_budget(p: &Presentation, budget: u128) -> Result<InvariantReport> {
    let simple = p.simplify();
    let (abelian_rank, torsion) = simple.abelianization();
    let mut hom_counts = BTreeMap::new();
    for name in STANDARD_TARGETS {
        let g = FiniteGroup::by_name(name).expect("built-in target");
        hom_counts.insert(name.to_string(), count_homs(&simple, &g, budget)?);
    }
    if simple.num_generators() <= S4_MAX_GENERATORS {
        let s4 = FiniteGroup::symmetric(4);
        if let Ok(n) = count_homs(&simple, &s4, budget) {
            hom_counts.insert("S4".to_string(), n);
        }
    }
    Ok(InvariantReport {
        abelian_rank,
        torsion,
        hom_counts,
    })
}

/// Dimension of `Hom(G, k⁺)` over `k` for a group with the given
/// abelianization: one per free summand, plus one per torsion coefficient
/// divisible by the characteristic.
pub fn hom_kplus_dimension(rank: usize, torsion: &[u64], characteristic: u64) -> Result<usize> {
    let field = FieldSpec::new(characteristic)?;
    let p = field.characteristic();
    if p == 0 {
        return Ok(rank);
    }
    Ok(rank + torsion.iter().filter(|&&d| d % p == 0).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn suite_of_integers() {
        let r = invariant_suite(&Presentation::free(["g"])).unwrap();
        assert_eq!((r.abelian_rank, r.torsion.clone()), (1, vec![]));
        let expect: BTreeMap<String, u64> =
            [("C2", 2), ("C3", 3), ("C4", 4), ("S3", 6), ("S4", 24)]
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect();
        assert_eq!(r.hom_counts, expect);
    }

    #[test]
    fn suite_of_trivial_group() {
        let r = invariant_suite(&Presentation::trivial()).unwrap();
        assert_eq!(r.abelian_rank, 0);
        assert!(r.hom_counts.values().all(|&v| v == 1));
    }

    #[test]
    fn distinguishing_names_first_difference() {
        let z = invariant_suite(&Presentation::free(["g"])).unwrap();
        let z2 = invariant_suite(&Presentation::new(["g"], vec![Word::parse("g g").unwrap()]).unwrap()).unwrap();
        assert_eq!(z.distinguishing(&z2).as_deref(), Some("abelian rank"));
        assert_eq!(z.distinguishing(&z), None);
    }

    #[test]
    fn hom_kplus_examples() {
        for ch in [0, 2, 3, 5] {
            assert_eq!(hom_kplus_dimension(1, &[], ch).unwrap(), 1);
        }
        assert_eq!(hom_kplus_dimension(0, &[2], 2).unwrap(), 1);
        assert_eq!(hom_kplus_dimension(0, &[2], 3).unwrap(), 0);
        assert_eq!(hom_kplus_dimension(3, &[], 0).unwrap(), 3);
        assert_eq!(hom_kplus_dimension(0, &[2, 6], 3).unwrap(), 1);
        assert_eq!(hom_kplus_dimension(1, &[], 4).unwrap_err(), Error::NonPrimeCharacteristic(4));
    }

    #[test]
    fn shapes() {
        assert_eq!(GroupShape::of(&Presentation::trivial()), GroupShape::Trivial);
        assert_eq!(GroupShape::of(&Presentation::free(["a", "b"])), GroupShape::Free(2));
    }
}
