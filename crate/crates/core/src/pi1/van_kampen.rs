use crate::combinatorics::Quiver;
use crate::error::{Error, Result};
use crate::groups::{Presentation, Word};

use super::quiver_group::QuiverGroup;
use super::walk::{Step, Walk};

/// A presented `Π₁` of a quiver that can also turn closed walks into words.
/// Pieces of a Van Kampen decomposition may themselves be decomposed.
#[derive(Debug, Clone)]
pub enum PresentedQuiverGroup {
    Direct(QuiverGroup),
    Amalgam(Box<VanKampen>),
}

impl PresentedQuiverGroup {
    pub fn direct(q: &Quiver, basepoint: &str) -> Result<PresentedQuiverGroup> {
        Ok(PresentedQuiverGroup::Direct(QuiverGroup::new(q, basepoint)?))
    }

    pub fn quiver(&self) -> &Quiver {
        match self {
            PresentedQuiverGroup::Direct(g) => g.quiver(),
            PresentedQuiverGroup::Amalgam(vk) => &vk.quiver,
        }
    }

    pub fn basepoint(&self) -> &str {
        match self {
            PresentedQuiverGroup::Direct(g) => g.basepoint(),
            PresentedQuiverGroup::Amalgam(vk) => &vk.basepoint,
        }
    }

    pub fn presentation(&self) -> &Presentation {
        match self {
            PresentedQuiverGroup::Direct(g) => g.presentation(),
            PresentedQuiverGroup::Amalgam(vk) => &vk.presentation,
        }
    }

    /// Word of a closed walk. Walks closed away from the basepoint are
    /// first conjugated back to it along a fixed route.
    pub fn word_of_loop(&self, w: &Walk) -> Word {
        assert!(w.is_closed(), "word_of_loop needs a closed walk");
        match self {
            PresentedQuiverGroup::Direct(g) => g.walk_word(w),
            PresentedQuiverGroup::Amalgam(vk) => vk.word_of_loop(w),
        }
    }
}

/// `Π₁(Q, I_Q)` assembled from two pieces whose completions cover `Q^c`:
/// the free product of the pieces, amalgamated along the ordered
/// intersection `Q₀`.
#[derive(Debug, Clone)]
pub struct VanKampen {
    quiver: Quiver,
    pieces: [PresentedQuiverGroup; 2],
    intersection: QuiverGroup,
    basepoint: String,
    amalgamation: Vec<Word>,
    presentation: Presentation,
}

const PIECE_NAMES: [&str; 2] = ["q1", "q2"];

/// Van Kampen assembly with both pieces presented directly.
pub fn van_kampen_assemble(q: &Quiver, q1: &Quiver, q2: &Quiver, basepoint: Option<&str>) -> Result<VanKampen> {
    let (q0, b) = check_decomposition(q, q1, q2, basepoint)?;
    let p1 = PresentedQuiverGroup::direct(q1, &b)?;
    let p2 = PresentedQuiverGroup::direct(q2, &b)?;
    VanKampen::assemble(q, q0, b, p1, p2)
}

/// Checks the hypotheses and returns `Q₀` with the chosen basepoint.
fn check_decomposition(q: &Quiver, q1: &Quiver, q2: &Quiver, basepoint: Option<&str>) -> Result<(Quiver, String)> {
    if !q.is_connected() {
        return Err(Error::Disconnected);
    }
    let qc = q.complete()?;
    let mut covered_vertices = std::collections::BTreeSet::new();
    let mut covered_pairs = std::collections::BTreeSet::new();
    let mut completions = Vec::new();
    for (piece, name) in [q1, q2].into_iter().zip(PIECE_NAMES) {
        let inside = piece.vertices().is_subset(q.vertices())
            && piece
                .arrows()
                .iter()
                .all(|a| q.arrow_between(&a.source, &a.target).is_some());
        if !inside {
            return Err(Error::NotASubquiver(name));
        }
        if !piece.is_connected() {
            return Err(Error::DisconnectedPiece(name));
        }
        let c = piece.complete()?;
        covered_vertices.extend(c.vertices().iter().cloned());
        covered_pairs.extend(c.arrow_pairs());
        completions.push(c);
    }
    if &covered_vertices != q.vertices() || covered_pairs != qc.arrow_pairs() {
        return Err(Error::CoverViolation);
    }
    let common = completions[0].vertices().intersection(completions[1].vertices()).count();
    if common == 0 {
        return Err(Error::DisconnectedPiece("q0"));
    }
    let q0 = completions[0].intersection(&completions[1])?.order()?.into_inner();
    if !q0.is_connected() {
        return Err(Error::DisconnectedPiece("q0"));
    }
    let b = match basepoint {
        Some(b) if q0.vertices().contains(b) => b.to_string(),
        Some(b) => return Err(Error::BadBasepoint(b.to_string())),
        None => q0.vertices().first().expect("q0 is non-empty").clone(),
    };
    Ok((q0, b))
}

impl VanKampen {
    /// Assembly from already presented pieces, which may be decompositions
    /// of their own. Piece basepoints need not match `basepoint`.
    pub fn from_pieces(
        q: &Quiver,
        p1: PresentedQuiverGroup,
        p2: PresentedQuiverGroup,
        basepoint: Option<&str>,
    ) -> Result<VanKampen> {
        let (q0, b) = check_decomposition(q, p1.quiver(), p2.quiver(), basepoint)?;
        VanKampen::assemble(q, q0, b, p1, p2)
    }

    fn assemble(
        q: &Quiver,
        q0: Quiver,
        basepoint: String,
        p1: PresentedQuiverGroup,
        p2: PresentedQuiverGroup,
    ) -> Result<VanKampen> {
        let intersection = QuiverGroup::new(&q0, &basepoint)?;
        let mut vk = VanKampen {
            quiver: q.clone(),
            pieces: [p1, p2],
            intersection,
            basepoint,
            amalgamation: Vec::new(),
            presentation: Presentation::trivial(),
        };
        vk.amalgamation = vk
            .intersection
            .presentation()
            .generators()
            .iter()
            .map(|g| {
                let lp = vk.intersection.generator_loop(g).expect("generators are non-tree arrows");
                let w1 = vk.piece_word(0, &vk.into_piece(0, &lp));
                let w2 = vk.piece_word(1, &vk.into_piece(1, &lp));
                w1.concat(&w2.inverse()).free_reduce()
            })
            .collect();
        let mut generators = Vec::new();
        let mut relators = Vec::new();
        for (n, piece) in vk.pieces.iter().enumerate() {
            let p = piece.presentation().prefixed(&prefix(n));
            generators.extend(p.generators().iter().cloned());
            relators.extend(p.relators().iter().cloned());
        }
        relators.extend(vk.amalgamation.iter().cloned());
        vk.presentation = Presentation::new(generators, relators)?;
        Ok(vk)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn basepoint(&self) -> &str {
        &self.basepoint
    }

    pub fn pieces(&self) -> &[PresentedQuiverGroup; 2] {
        &self.pieces
    }

    /// The ordered intersection `Q₀` and its presented group.
    pub fn intersection(&self) -> &QuiverGroup {
        &self.intersection
    }

    /// Relators `i₁(g)·i₂(g)⁻¹`, one per generator of `Π₁(Q₀)`.
    pub fn amalgamation_relators(&self) -> &[Word] {
        &self.amalgamation
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    fn piece_word(&self, n: usize, lp: &Walk) -> Word {
        self.pieces[n].word_of_loop(lp).prefixed(&prefix(n))
    }

    /// Image in piece `n` of a walk in `Q₀`: an arrow of `Q₀` becomes the
    /// piece's arrow between the same vertices, or else the first directed
    /// path of the piece between them.
    fn into_piece(&self, n: usize, w: &Walk) -> Walk {
        let piece = self.pieces[n].quiver();
        let mut steps = Vec::new();
        for s in &w.steps {
            let a = self.intersection.quiver().arrow(&s.arrow).expect("walk in q0");
            steps.extend(directed_image(piece, &a.source, &a.target, s.forward).expect("q0 pairs lie in every completion"));
        }
        Walk::new(piece, w.source.clone(), steps).expect("image of a walk is a walk")
    }

    /// Tree walk of `Q₀` from the basepoint to `v`, pushed into piece `n`.
    fn anchor(&self, n: usize, v: &str) -> Walk {
        self.into_piece(n, &self.intersection.tree_walk(v))
    }

    /// Word of a closed walk in `Q`.
    pub fn word_of_loop(&self, w: &Walk) -> Word {
        let w = conjugate_to(&self.quiver, &self.basepoint, w);
        let mut segments: Vec<(usize, Walk)> = Vec::new();
        let mut at = w.source.clone();
        for s in &w.steps {
            let a = self.quiver.arrow(&s.arrow).expect("walk in q");
            let (n, image) = (0..2)
                .find_map(|n| {
                    let piece = self.pieces[n].quiver();
                    piece
                        .arrow_between(&a.source, &a.target)
                        .map(|pa| (n, vec![Step::new(pa.id.clone(), s.forward)]))
                })
                .or_else(|| {
                    (0..2).find_map(|n| {
                        directed_image(self.pieces[n].quiver(), &a.source, &a.target, s.forward).map(|st| (n, st))
                    })
                })
                .expect("every pair of q is reachable in some piece");
            let piece = self.pieces[n].quiver();
            let seg = Walk::new(piece, at.clone(), image).expect("image of a step is a walk");
            at = seg.target.clone();
            match segments.last_mut() {
                Some((m, last)) if *m == n => *last = last.then(&seg),
                _ => segments.push((n, seg)),
            }
        }
        let mut out = Word::identity();
        for (n, seg) in segments {
            let lp = self.anchor(n, &seg.source).then(&seg).then(&self.anchor(n, &seg.target).inverse());
            out.extend(&self.piece_word(n, &lp));
        }
        out.free_reduce()
    }
}

fn prefix(n: usize) -> String {
    format!("{}:", n + 1)
}

/// Steps of the first directed path `s → t` in `q` (its own arrow if there
/// is one), reversed when `forward` is false.
fn directed_image(q: &Quiver, s: &str, t: &str, forward: bool) -> Option<Vec<Step>> {
    let arrows: Vec<String> = match q.arrow_between(s, t) {
        Some(a) => vec![a.id.clone()],
        None => q.paths_between(s, t).ok()?.into_iter().next()?.arrows,
    };
    let mut steps: Vec<Step> = arrows.into_iter().map(|id| Step::new(id, true)).collect();
    if !forward {
        steps.reverse();
        for st in &mut steps {
            st.forward = false;
        }
    }
    Some(steps)
}

/// `route · w · route⁻¹` with `route` a fixed walk from `base` to the start
/// of the closed walk `w`.
fn conjugate_to(q: &Quiver, base: &str, w: &Walk) -> Walk {
    if w.source == base {
        return w.clone();
    }
    let route = q.undirected_route(base, &w.source).expect("connected quiver");
    let route = Walk {
        source: base.to_string(),
        target: w.source.clone(),
        steps: route.into_iter().map(|(id, f)| Step::new(id, f)).collect(),
    };
    route.then(w).then(&route.inverse())
}
