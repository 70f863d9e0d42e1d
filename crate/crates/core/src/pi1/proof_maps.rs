use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{smith_normal_form, IntMatrix};
use crate::combinatorics::{hasse_quiver, Poset, Quiver};
use crate::error::{Error, Result};
use crate::groups::{Presentation, Word};

use super::quiver_group::QuiverGroup;
use super::walk::{EdgePath, Step, Walk};

/// Default number of rewriting moves tried before giving up.
pub const DEFAULT_REWRITE_BUDGET: usize = 10_000;

/// Sends a walk to the edge-path through the same vertices in the order
/// complex. Every arrow joins comparable elements, so the result is an
/// edge-path of `Sim` of the quiver's poset.
pub fn phi_walk_to_edgepath(w: &Walk, q: &Quiver) -> Result<EdgePath> {
    let checked = Walk::new(q, w.source.clone(), w.steps.clone())?;
    if checked.target != w.target {
        return Err(Error::MalformedWalk(format!(
            "walk ends at `{}`, not `{}`",
            checked.target, w.target
        )));
    }
    Ok(EdgePath {
        vertices: checked.vertices(q),
    })
}

/// Sends an edge-path of `Sim(p)` to a walk in the Hasse quiver of `p`:
/// each step `s → t` becomes the lexicographically least saturated chain
/// between them, walked forwards when `s < t` and backwards otherwise.
pub fn psi_edgepath_to_walk(e: &EdgePath, p: &Poset) -> Result<Walk> {
    let first = e
        .vertices
        .first()
        .ok_or(Error::EmptyInput("edge-path has no vertices"))?;
    let idx = |v: &String| p.index_of(v).ok_or_else(|| Error::UnknownVertex(v.clone()));
    idx(first)?;
    let mut walk = Walk::trivial(first.clone());
    for pair in e.vertices.windows(2) {
        let (s, t) = (idx(&pair[0])?, idx(&pair[1])?);
        if s == t {
            continue;
        }
        let (lo, hi, forward) = if p.lt_idx(s, t) {
            (s, t, true)
        } else if p.lt_idx(t, s) {
            (t, s, false)
        } else {
            return Err(Error::NotAnEdgePath(pair[0].clone(), pair[1].clone()));
        };
        let chain = p
            .maximal_chains_between(lo, hi)
            .into_iter()
            .next()
            .expect("comparable elements have a saturated chain");
        let el = p.elements();
        let mut steps: Vec<Step> = chain
            .windows(2)
            .map(|c| Step::new(format!("{}|{}", el[c[0]], el[c[1]]), true))
            .collect();
        let mut segment = Walk {
            source: el[lo].clone(),
            target: el[hi].clone(),
            steps: std::mem::take(&mut steps),
        };
        if !forward {
            segment = segment.inverse();
        }
        walk = walk.then(&segment);
    }
    Ok(walk)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// The rewriting budget ran out before the words could be identified.
    Inconclusive,
}

#[derive(Debug, Clone)]
pub struct RoundtripSample {
    pub walk: Walk,
    pub image: Walk,
    pub verdict: Verdict,
}

#[derive(Debug, Clone)]
pub struct RoundtripReport {
    pub samples: Vec<RoundtripSample>,
}

impl RoundtripReport {
    pub fn count(&self, v: Verdict) -> usize {
        self.samples.iter().filter(|s| s.verdict == v).count()
    }

    pub fn all_pass(&self) -> bool {
        self.count(Verdict::Pass) == self.samples.len()
    }
}

/// Samples closed walks in the Hasse quiver of `p` and checks that `ψ(φ(w))`
/// and `w` give the same element of `Π₁`.
pub fn check_phi_psi_roundtrip(p: &Poset, samples: usize, seed: u64) -> Result<RoundtripReport> {
    check_phi_psi_roundtrip_with_budget(p, samples, seed, DEFAULT_REWRITE_BUDGET)
}

pub fn check_phi_psi_roundtrip_with_budget(
    p: &Poset,
    samples: usize,
    seed: u64,
    budget: usize,
) -> Result<RoundtripReport> {
    let hasse = hasse_quiver(p);
    let group = QuiverGroup::with_default_basepoint(hasse.quiver())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(samples);
    for _ in 0..samples {
        let len = rng.gen_range(1..=12);
        let walk = random_closed_walk(hasse.quiver(), group.basepoint(), len, &mut rng);
        let image = psi_edgepath_to_walk(&phi_walk_to_edgepath(&walk, hasse.quiver())?, p)?;
        let verdict = same_element(
            group.presentation(),
            &group.walk_word(&walk),
            &group.walk_word(&image),
            budget,
        );
        out.push(RoundtripSample { walk, image, verdict });
    }
    Ok(RoundtripReport { samples: out })
}

/// Random walk of `len` steps from `base`, closed up by a shortest route back.
pub fn random_closed_walk<R: Rng>(q: &Quiver, base: &str, len: usize, rng: &mut R) -> Walk {
    let incident = q.incident();
    let mut walk = Walk::trivial(base);
    for _ in 0..len {
        let Some(&(next, id, forward)) = incident[walk.target.as_str()].choose(rng) else {
            break;
        };
        walk = walk.then(&Walk {
            source: walk.target.clone(),
            target: next.to_string(),
            steps: vec![Step::new(id, forward)],
        });
    }
    let back = q
        .undirected_route(&walk.target, base)
        .expect("walk stays in the connected component of the base");
    walk.then(&Walk {
        source: walk.target.clone(),
        target: base.to_string(),
        steps: back.into_iter().map(|(id, f)| Step::new(id, f)).collect(),
    })
}

/// Decides whether `a` and `b` are equal in the presented group, as far
/// as free reduction, abelianization and bounded relator rewriting can tell.
pub fn same_element(p: &Presentation, a: &Word, b: &Word, budget: usize) -> Verdict {
    let diff = a.concat(&b.inverse()).free_reduce();
    if diff.is_empty() {
        return Verdict::Pass;
    }
    if !in_relation_lattice(p, &diff) {
        return Verdict::Fail;
    }
    if rewrites_to_identity(&diff, p.relators(), budget) {
        Verdict::Pass
    } else {
        Verdict::Inconclusive
    }
}

/// Whether the exponent-sum vector of `w` lies in the row lattice of the
/// relation matrix, i.e. `w` dies in the abelianization.
fn in_relation_lattice(p: &Presentation, w: &Word) -> bool {
    let n = p.num_generators();
    let v: Vec<BigInt> = p
        .generators()
        .iter()
        .map(|g| BigInt::from(w.exponent_sum(g)))
        .collect();
    if p.relators().is_empty() {
        return v.iter().all(Zero::is_zero);
    }
    let m = p.relation_matrix();
    let s = smith_normal_form(&m);
    // rowspace(m)·right = rowspace(diag), so test v·right against the diagonal
    let row = IntMatrix::from_rows(&[v]);
    let moved = row.mul(&s.right);
    (0..n).all(|j| {
        let x = moved.get(0, j);
        match s.diagonal.get(j) {
            Some(d) if !d.is_zero() => (x % d).is_zero(),
            _ => x.is_zero(),
        }
    })
}

/// Greedy Dehn-style rewriting: replace more than half of a cyclic
/// relator by the inverse of the rest, until the word vanishes, no move
/// applies, or the budget is spent.
pub fn rewrites_to_identity(w: &Word, relators: &[Word], budget: usize) -> bool {
    let mut pieces: Vec<Word> = Vec::new();
    for r in relators {
        let r = r.cyclic_reduce();
        for base in [r.clone(), r.inverse()] {
            for k in 0..base.len() {
                pieces.push(base.rotate(k));
            }
        }
    }
    let mut cur = w.cyclic_reduce();
    for _ in 0..budget {
        if cur.is_empty() {
            return true;
        }
        let Some(next) = dehn_step(&cur, &pieces) else {
            return false;
        };
        cur = next.cyclic_reduce();
    }
    cur.is_empty()
}

fn dehn_step(w: &Word, pieces: &[Word]) -> Option<Word> {
    let letters = w.letters();
    let n = letters.len();
    // cyclic word: look at every rotation
    for start in 0..n {
        let rot = w.rotate(start);
        let rl = rot.letters();
        for r in pieces {
            let len = r.len();
            let half = len / 2 + 1;
            for take in (half..=len.min(n)).rev() {
                if rl[..take] == r.letters()[..take] {
                    let rest: Word = r.letters()[take..].iter().cloned().collect();
                    let mut out = rest.inverse();
                    out.extend(&rl[take..].iter().cloned().collect());
                    return Some(out);
                }
            }
        }
    }
    None
}
