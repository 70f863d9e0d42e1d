use crate::combinatorics::{DirectedPath, Quiver};
use crate::error::{Error, Result};
use crate::groups::{Letter, Presentation, Word};

use super::walk::{SpanningTree, Walk};

/// `Π₁(Q, I_Q)` presented from a spanning tree of the underlying graph:
/// generators are the non-tree arrows, relators identify parallel paths.
#[derive(Debug, Clone)]
pub struct QuiverGroup {
    quiver: Quiver,
    basepoint: String,
    tree: SpanningTree,
    presentation: Presentation,
}

impl QuiverGroup {
    pub fn new(q: &Quiver, basepoint: &str) -> Result<QuiverGroup> {
        q.topological_order()?;
        if !q.vertices().contains(basepoint) {
            return Err(Error::UnknownBasepoint(basepoint.to_string()));
        }
        let incident = q.incident();
        let tree = SpanningTree::bfs(basepoint, q.vertices(), |v| {
            incident[v]
                .iter()
                .map(|&(w, id, _)| (w.to_string(), id.to_string()))
                .collect()
        })
        .ok_or(Error::Disconnected)?;
        let generators: Vec<String> = q
            .sorted_arrows()
            .into_iter()
            .filter(|a| !tree.contains_edge(&a.id))
            .map(|a| a.id.clone())
            .collect();
        let mut group = QuiverGroup {
            quiver: q.clone(),
            basepoint: basepoint.to_string(),
            tree,
            presentation: Presentation::trivial(),
        };
        let relators = q
            .parallel_pairs()?
            .iter()
            .map(|(p, p2)| group.path_word(p).concat(&group.path_word(p2).inverse()).free_reduce())
            .collect();
        group.presentation = Presentation::new(generators, relators)?;
        Ok(group)
    }

    /// Uses the lexicographically least vertex as basepoint.
    pub fn with_default_basepoint(q: &Quiver) -> Result<QuiverGroup> {
        let b = q.vertices().first().expect("quivers are non-empty").clone();
        QuiverGroup::new(q, &b)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn basepoint(&self) -> &str {
        &self.basepoint
    }

    pub fn tree(&self) -> &SpanningTree {
        &self.tree
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    fn letter(&self, arrow: &str, forward: bool) -> Option<Letter> {
        (!self.tree.contains_edge(arrow)).then(|| Letter::new(arrow, !forward))
    }

    pub fn path_word(&self, p: &DirectedPath) -> Word {
        p.arrows.iter().filter_map(|a| self.letter(a, true)).collect()
    }

    /// Word of a walk: tree arrows vanish, other arrows become their
    /// generator (inverted when walked backwards).
    pub fn walk_word(&self, w: &Walk) -> Word {
        w.steps
            .iter()
            .filter_map(|s| self.letter(&s.arrow, s.forward))
            .collect::<Word>()
            .free_reduce()
    }

    /// Tree walk from the basepoint to `v`.
    pub fn tree_walk(&self, v: &str) -> Walk {
        let mut walk = Walk::trivial(self.basepoint.clone());
        for (child, id) in self.tree.path_from_root(v) {
            let a = self.quiver.arrow(&id).expect("tree arrow");
            let forward = a.target == child;
            walk = walk.then(&Walk {
                source: if forward { a.source.clone() } else { a.target.clone() },
                target: child,
                steps: vec![super::walk::Step::new(id, forward)],
            });
        }
        walk
    }

    /// Closed walk at the basepoint represented by a generator.
    pub fn generator_loop(&self, generator: &str) -> Option<Walk> {
        if self.tree.contains_edge(generator) {
            return None;
        }
        let a = self.quiver.arrow(generator)?;
        let there = self.tree_walk(&a.source);
        let back = self.tree_walk(&a.target).inverse();
        let step = Walk {
            source: a.source.clone(),
            target: a.target.clone(),
            steps: vec![super::walk::Step::new(a.id.clone(), true)],
        };
        Some(there.then(&step).then(&back))
    }
}

/// Presentation of `Π₁(Q, I_Q)` based at `basepoint`.
pub fn quiver_pi1_presentation(q: &Quiver, basepoint: &str) -> Result<Presentation> {
    Ok(QuiverGroup::new(q, basepoint)?.presentation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Arrow;
    use crate::groups::{invariant_suite, GroupShape};

    fn q(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Quiver {
        Quiver::new(
            vertices.iter().copied(),
            arrows.iter().map(|&(i, s, t)| Arrow::new(i, s, t)),
        )
        .unwrap()
    }

    #[test]
    fn hexagon_is_z() {
        let hex = q(
            &["a", "b", "c", "ab", "bc", "ac"],
            &[
                ("a|ab", "a", "ab"),
                ("b|ab", "b", "ab"),
                ("a|ac", "a", "ac"),
                ("b|bc", "b", "bc"),
                ("c|ac", "c", "ac"),
                ("c|bc", "c", "bc"),
            ],
        );
        let p = quiver_pi1_presentation(&hex, "a").unwrap();
        assert_eq!(p.num_generators(), 1);
        assert!(p.relators().is_empty());
    }

    #[test]
    fn diamond_is_trivial() {
        let d = q(
            &["bottom", "left", "right", "top"],
            &[("tl", "top", "left"), ("tr", "top", "right"), ("lb", "left", "bottom"), ("rb", "right", "bottom")],
        );
        let p = quiver_pi1_presentation(&d, "bottom").unwrap();
        assert_eq!(p.num_generators(), 1);
        assert_eq!(p.relators().len(), 1);
        assert_eq!(GroupShape::of(&p.simplify()), GroupShape::Trivial);
    }

    #[test]
    fn two_hubs_four_spokes_free_rank_three() {
        let mut arrows = Vec::new();
        for h in ["h1", "h2"] {
            for s in ["p1", "p2", "p3", "p4"] {
                arrows.push((format!("{h}>{s}"), h, s));
            }
        }
        let arrows: Vec<(&str, &str, &str)> = arrows.iter().map(|(i, s, t)| (i.as_str(), *s, *t)).collect();
        let g = q(&["h1", "h2", "p1", "p2", "p3", "p4"], &arrows);
        let p = quiver_pi1_presentation(&g, "h1").unwrap();
        assert_eq!(GroupShape::of(&p.simplify()), GroupShape::Free(3));
        assert_eq!(invariant_suite(&p).unwrap().abelian_rank, 3);
    }

    #[test]
    fn generator_loops_read_back() {
        let sq = q(&["a", "b", "c", "d"], &[("f", "a", "b"), ("g", "b", "c"), ("h", "d", "c"), ("k", "a", "d")]);
        let g = QuiverGroup::new(&sq, "a").unwrap();
        for gen in g.presentation().generators() {
            let lp = g.generator_loop(gen).unwrap();
            assert!(lp.is_closed());
            assert_eq!(g.walk_word(&lp), Word::from_letters(vec![Letter::pos(gen.clone())]));
        }
    }

    #[test]
    fn errors() {
        let cyc = q(&["a", "b"], &[("f", "a", "b"), ("g", "b", "a")]);
        assert_eq!(quiver_pi1_presentation(&cyc, "a").unwrap_err(), Error::CyclicQuiver);
        let dis = q(&["a", "b", "c"], &[("f", "a", "b")]);
        assert_eq!(quiver_pi1_presentation(&dis, "a").unwrap_err(), Error::Disconnected);
        assert_eq!(
            quiver_pi1_presentation(&dis, "z").unwrap_err(),
            Error::UnknownBasepoint("z".into())
        );
    }
}
