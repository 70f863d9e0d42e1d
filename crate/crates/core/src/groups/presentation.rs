use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::word::Word;
use crate::algebra::{smith_normal_form, IntMatrix};
use crate::error::{Error, Result};

const MAX_TIETZE_PASSES: usize = 1000;

/// A finite group presentation `⟨generators | relators⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Checks that relators only mention declared generators and stores
    /// them freely reduced.
    pub fn new<G, S>(generators: G, relators: Vec<Word>) -> Result<Presentation>
    where
        G: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut seen = BTreeSet::new();
        let mut gens = Vec::new();
        for g in generators {
            let g = g.into();
            if !seen.insert(g.clone()) {
                return Err(Error::DuplicateElement(g));
            }
            gens.push(g);
        }
        let relators: Vec<Word> = relators.iter().map(Word::free_reduce).collect();
        for r in &relators {
            if let Some(l) = r.letters().iter().find(|l| !seen.contains(&l.generator)) {
                return Err(Error::UnknownGenerator(l.generator.clone()));
            }
        }
        Ok(Presentation {
            generators: gens,
            relators,
        })
    }

    pub fn trivial() -> Presentation {
        Presentation::default()
    }

    pub fn free<S: Into<String>>(generators: impl IntoIterator<Item = S>) -> Presentation {
        Presentation::new(generators, Vec::new()).expect("free presentation")
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Both trivial-free checks look only at the literal presentation; call
    /// [`Presentation::simplify`] first.
    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.relators.is_empty()
    }

    /// Generators prefixed with `prefix`, relators rewritten to match.
    pub fn prefixed(&self, prefix: &str) -> Presentation {
        Presentation {
            generators: self.generators.iter().map(|g| format!("{prefix}{g}")).collect(),
            relators: self.relators.iter().map(|r| r.prefixed(prefix)).collect(),
        }
    }

    /// Tietze simplification: drop trivial and duplicate relators, and
    /// eliminate a generator whenever some relator contains it exactly
    /// once. Among the possible eliminations the one leaving the smallest
    /// total relator length is taken.
    pub fn simplify(&self) -> Presentation {
        let mut gens = self.generators.clone();
        let mut rels = normalize_relators(&self.relators);
        let length_cap = 4 * total_len(&rels) + 64;
        for _ in 0..MAX_TIETZE_PASSES {
            let Some((g, idx, image)) = best_elimination(&gens, &rels, length_cap) else {
                break;
            };
            let rest: Vec<Word> = rels
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != idx)
                .map(|(_, r)| r.substitute(&g, &image))
                .collect();
            gens.retain(|x| *x != g);
            rels = normalize_relators(&rest);
        }
        Presentation {
            generators: gens,
            relators: rels,
        }
    }

    /// Relator exponent-sum matrix, relators by generators.
    pub fn relation_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.relators.len(), self.generators.len());
        let col: BTreeMap<&str, usize> = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| (g.as_str(), i))
            .collect();
        for (i, r) in self.relators.iter().enumerate() {
            for l in r.letters() {
                let j = col[l.generator.as_str()];
                let v = m.get(i, j) + BigInt::from(l.exponent());
                m.set(i, j, v);
            }
        }
        m
    }

    /// Free rank and torsion divisor chain of the abelianization.
    pub fn abelianization(&self) -> (usize, Vec<u64>) {
        let snf = smith_normal_form(&self.relation_matrix());
        let nonzero: Vec<&BigInt> = snf.diagonal.iter().filter(|d| !d.is_zero()).collect();
        let rank = self.generators.len() - nonzero.len();
        let torsion = nonzero
            .into_iter()
            .filter(|d| d.abs() > BigInt::one())
            .map(|d| u64::try_from(d.abs()).expect("torsion coefficient fits in u64"))
            .collect();
        (rank, torsion)
    }
}

fn total_len(rels: &[Word]) -> usize {
    rels.iter().map(Word::len).sum()
}

fn normalize_relators(rels: &[Word]) -> Vec<Word> {
    let set: BTreeSet<Word> = rels
        .iter()
        .map(Word::canonical_relator)
        .filter(|r| !r.is_empty())
        .collect();
    let mut out: Vec<Word> = set.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Picks `(generator, relator index, image)` such that the relator solved
/// for the generator gives `generator = image`.
fn best_elimination(gens: &[String], rels: &[Word], cap: usize) -> Option<(String, usize, Word)> {
    let mut best: Option<(usize, String, usize, Word)> = None;
    for (idx, r) in rels.iter().enumerate() {
        for g in gens {
            if r.occurrences(g) != 1 {
                continue;
            }
            let pos = r.letters().iter().position(|l| &l.generator == g).unwrap();
            // rotate so that g^{±1} leads: g^e w = 1, so g = w^{-e}
            let rotated = r.rotate(pos);
            let lead = &rotated.letters()[0];
            let tail: Word = rotated.letters()[1..].iter().cloned().collect();
            let image = if lead.inverse { tail } else { tail.inverse() };
            let cost: usize = rels
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != idx)
                .map(|(_, s)| {
                    if s.occurrences(g) == 0 {
                        s.len()
                    } else {
                        s.substitute(g, &image).len()
                    }
                })
                .sum();
            if cost > cap {
                continue;
            }
            let better = match &best {
                None => true,
                Some((c, bg, bi, _)) => (cost, g, idx) < (*c, bg, *bi),
            };
            if better {
                best = Some((cost, g.clone(), idx, image));
            }
        }
    }
    best.map(|(_, g, idx, image)| (g, idx, image))
}
