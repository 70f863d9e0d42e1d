use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::ops::Deref;

use super::complex::UnionFind;
use super::poset::Poset;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub id: String,
    pub source: String,
    pub target: String,
}

impl Arrow {
    pub fn new(id: impl Into<String>, source: impl Into<String>, target: impl Into<String>) -> Arrow {
        Arrow {
            id: id.into(),
            source: source.into(),
            target: target.into(),
        }
    }
}

/// A finite loop-free directed graph with named arrows. Multiple arrows
/// between the same pair are allowed here; the ordered and completed
/// constructions reject them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: BTreeSet<String>,
    arrows: Vec<Arrow>,
    by_id: BTreeMap<String, usize>,
}

/// A non-empty composable sequence of arrows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectedPath {
    pub arrows: Vec<String>,
    pub source: String,
    pub target: String,
}

impl DirectedPath {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_parallel_to(&self, other: &DirectedPath) -> bool {
        self.source == other.source && self.target == other.target
    }
}

impl Quiver {
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Quiver>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = Arrow>,
    {
        let vertices: BTreeSet<String> = vertices.into_iter().map(Into::into).collect();
        if vertices.is_empty() {
            return Err(Error::EmptyInput("quiver has no vertices"));
        }
        let mut by_id = BTreeMap::new();
        let mut list = Vec::new();
        for a in arrows {
            for end in [&a.source, &a.target] {
                if !vertices.contains(end) {
                    return Err(Error::UnknownVertex(end.clone()));
                }
            }
            if a.source == a.target {
                return Err(Error::LoopArrow(a.id));
            }
            if by_id.insert(a.id.clone(), list.len()).is_some() {
                return Err(Error::DuplicateArrow(a.id));
            }
            list.push(a);
        }
        Ok(Quiver {
            vertices,
            arrows: list,
            by_id,
        })
    }

    pub fn vertices(&self) -> &BTreeSet<String> {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: &str) -> Option<&Arrow> {
        self.by_id.get(id).map(|&i| &self.arrows[i])
    }

    /// The first arrow (in declaration order) from `source` to `target`.
    pub fn arrow_between(&self, source: &str, target: &str) -> Option<&Arrow> {
        self.arrows
            .iter()
            .find(|a| a.source == source && a.target == target)
    }

    /// Arrows sorted by id.
    pub fn sorted_arrows(&self) -> Vec<&Arrow> {
        self.by_id.values().map(|&i| &self.arrows[i]).collect()
    }

    pub fn has_parallel_arrows(&self) -> Option<(&str, &str)> {
        let mut seen = BTreeSet::new();
        for a in &self.arrows {
            if !seen.insert((a.source.as_str(), a.target.as_str())) {
                return Some((a.source.as_str(), a.target.as_str()));
            }
        }
        None
    }

    fn out_arrows(&self) -> BTreeMap<&str, Vec<&Arrow>> {
        let mut out: BTreeMap<&str, Vec<&Arrow>> =
            self.vertices.iter().map(|v| (v.as_str(), Vec::new())).collect();
        for a in &self.arrows {
            out.get_mut(a.source.as_str()).unwrap().push(a);
        }
        for list in out.values_mut() {
            list.sort_by(|x, y| x.id.cmp(&y.id));
        }
        out
    }

    /// Vertices in a topological order, or `CyclicQuiver`.
    pub fn topological_order(&self) -> Result<Vec<&str>> {
        let mut indeg: BTreeMap<&str, usize> =
            self.vertices.iter().map(|v| (v.as_str(), 0)).collect();
        for a in &self.arrows {
            *indeg.get_mut(a.target.as_str()).unwrap() += 1;
        }
        let out = self.out_arrows();
        let mut ready: BTreeSet<&str> = indeg
            .iter()
            .filter(|(_, &d)| d == 0)
            .map(|(&v, _)| v)
            .collect();
        let mut order = Vec::with_capacity(self.vertices.len());
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for a in &out[v] {
                let d = indeg.get_mut(a.target.as_str()).unwrap();
                *d -= 1;
                if *d == 0 {
                    ready.insert(a.target.as_str());
                }
            }
        }
        if order.len() == self.vertices.len() {
            Ok(order)
        } else {
            Err(Error::CyclicQuiver)
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_ok()
    }

    /// Connectivity of the underlying undirected graph.
    pub fn is_connected(&self) -> bool {
        let index: BTreeMap<&str, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut uf = UnionFind::new(self.vertices.len());
        for a in &self.arrows {
            uf.union(index[a.source.as_str()], index[a.target.as_str()]);
        }
        uf.components() == 1
    }

    /// Reachability by directed paths of length at least one.
    pub fn reachability(&self) -> Result<BTreeSet<(String, String)>> {
        let order = self.topological_order()?;
        let out = self.out_arrows();
        let mut reach: BTreeMap<&str, BTreeSet<&str>> = BTreeMap::new();
        for &v in order.iter().rev() {
            let mut set = BTreeSet::new();
            for a in &out[v] {
                set.insert(a.target.as_str());
                set.extend(reach[a.target.as_str()].iter().copied());
            }
            reach.insert(v, set);
        }
        Ok(reach
            .into_iter()
            .flat_map(|(u, set)| set.into_iter().map(move |v| (u.to_string(), v.to_string())))
            .collect())
    }

    /// All directed paths of length ≥ 1 (up to `max_len` when given), sorted
    /// by length and then by arrow id sequence.
    pub fn enumerate_paths(&self, max_len: Option<usize>) -> Result<Vec<DirectedPath>> {
        self.topological_order()?;
        let out = self.out_arrows();
        let mut paths = Vec::new();
        let mut stack: Vec<DirectedPath> = self
            .arrows
            .iter()
            .map(|a| DirectedPath {
                arrows: vec![a.id.clone()],
                source: a.source.clone(),
                target: a.target.clone(),
            })
            .collect();
        while let Some(p) = stack.pop() {
            if max_len.is_none_or(|m| p.len() < m) {
                for a in &out[p.target.as_str()] {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a.id.clone());
                    stack.push(DirectedPath {
                        arrows,
                        source: p.source.clone(),
                        target: a.target.clone(),
                    });
                }
            }
            paths.push(p);
        }
        paths.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.arrows.cmp(&b.arrows)));
        Ok(paths)
    }

    /// Directed paths from `source` to `target`, in `enumerate_paths` order.
    pub fn paths_between(&self, source: &str, target: &str) -> Result<Vec<DirectedPath>> {
        Ok(self
            .enumerate_paths(None)?
            .into_iter()
            .filter(|p| p.source == source && p.target == target)
            .collect())
    }

    /// Unordered pairs of distinct parallel paths.
    pub fn parallel_pairs(&self) -> Result<Vec<(DirectedPath, DirectedPath)>> {
        let paths = self.enumerate_paths(None)?;
        let mut groups: BTreeMap<(&str, &str), Vec<&DirectedPath>> = BTreeMap::new();
        for p in &paths {
            groups
                .entry((p.source.as_str(), p.target.as_str()))
                .or_default()
                .push(p);
        }
        let mut pairs = Vec::new();
        for group in groups.values() {
            for (i, p) in group.iter().enumerate() {
                for q in &group[i + 1..] {
                    pairs.push(((*p).clone(), (*q).clone()));
                }
            }
        }
        Ok(pairs)
    }

    fn require_simple_dag(&self) -> Result<()> {
        self.topological_order()?;
        if let Some((s, t)) = self.has_parallel_arrows() {
            return Err(Error::ParallelArrows(s.to_string(), t.to_string()));
        }
        Ok(())
    }

    /// Adds an arrow `c:a>b` for every reachable pair `(a, b)` that has no
    /// arrow yet.
    pub fn complete(&self) -> Result<Quiver> {
        self.require_simple_dag()?;
        let reach = self.reachability()?;
        let mut arrows = self.arrows.clone();
        for (a, b) in reach {
            if self.arrow_between(&a, &b).is_none() {
                arrows.push(Arrow::new(format!("c:{a}>{b}"), a, b));
            }
        }
        Quiver::new(self.vertices.iter().cloned(), arrows)
    }

    /// Deletes every arrow parallel to a path of length at least two.
    pub fn order(&self) -> Result<OrderedQuiver> {
        self.require_simple_dag()?;
        let reach = self.reachability()?;
        let kept: Vec<Arrow> = self
            .arrows
            .iter()
            .filter(|a| !self.has_longer_path(a, &reach))
            .cloned()
            .collect();
        let q = Quiver::new(self.vertices.iter().cloned(), kept)?;
        Ok(OrderedQuiver(q))
    }

    fn has_longer_path(&self, a: &Arrow, reach: &BTreeSet<(String, String)>) -> bool {
        self.arrows.iter().any(|b| {
            b.source == a.source
                && b.target != a.target
                && reach.contains(&(b.target.clone(), a.target.clone()))
        })
    }

    /// Subquiver on the pairs present in both (source, target) sets.
    pub fn intersection(&self, other: &Quiver) -> Result<Quiver> {
        let vertices: BTreeSet<String> = self
            .vertices
            .intersection(&other.vertices)
            .cloned()
            .collect();
        let arrows: Vec<Arrow> = self
            .arrows
            .iter()
            .filter(|a| other.arrow_between(&a.source, &a.target).is_some())
            .cloned()
            .collect();
        Quiver::new(vertices, arrows)
    }

    /// Set of (source, target) pairs.
    pub fn arrow_pairs(&self) -> BTreeSet<(String, String)> {
        self.arrows
            .iter()
            .map(|a| (a.source.clone(), a.target.clone()))
            .collect()
    }

    /// Breadth-first walk in the underlying graph from `from` to `to`,
    /// returning `(arrow id, forward)` steps.
    pub fn undirected_route(&self, from: &str, to: &str) -> Option<Vec<(String, bool)>> {
        let mut prev: BTreeMap<&str, (&str, &str, bool)> = BTreeMap::new();
        let mut seen = BTreeSet::from([from]);
        let mut queue = VecDeque::from([from]);
        let incident = self.incident();
        while let Some(v) = queue.pop_front() {
            if v == to {
                break;
            }
            for &(w, id, fwd) in &incident[v] {
                if seen.insert(w) {
                    prev.insert(w, (v, id, fwd));
                    queue.push_back(w);
                }
            }
        }
        if !seen.contains(to) {
            return None;
        }
        let mut steps = Vec::new();
        let mut cur = to;
        while cur != from {
            let (p, id, fwd) = prev[cur];
            steps.push((id.to_string(), fwd));
            cur = p;
        }
        steps.reverse();
        Some(steps)
    }

    /// For each vertex, its neighbors in the underlying graph as
    /// `(neighbor, arrow id, forward)`, sorted by neighbor then arrow id.
    pub(crate) fn incident(&self) -> BTreeMap<&str, Vec<(&str, &str, bool)>> {
        let mut inc: BTreeMap<&str, Vec<(&str, &str, bool)>> =
            self.vertices.iter().map(|v| (v.as_str(), Vec::new())).collect();
        for a in &self.arrows {
            inc.get_mut(a.source.as_str())
                .unwrap()
                .push((a.target.as_str(), a.id.as_str(), true));
            inc.get_mut(a.target.as_str())
                .unwrap()
                .push((a.source.as_str(), a.id.as_str(), false));
        }
        for list in inc.values_mut() {
            list.sort();
        }
        inc
    }
}

/// A quiver checked to be a Hasse diagram: acyclic, no parallel arrows and
/// no arrow parallel to a longer path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedQuiver(Quiver);

impl OrderedQuiver {
    pub fn validate(q: Quiver) -> Result<OrderedQuiver> {
        q.require_simple_dag()?;
        let reach = q.reachability()?;
        if let Some(a) = q.arrows.iter().find(|a| q.has_longer_path(a, &reach)) {
            return Err(Error::NotOrdered(a.id.clone()));
        }
        Ok(OrderedQuiver(q))
    }

    pub fn quiver(&self) -> &Quiver {
        &self.0
    }

    pub fn into_inner(self) -> Quiver {
        self.0
    }

    /// The poset whose strict order is directed reachability.
    pub fn to_poset(&self) -> Poset {
        let reach = self.0.reachability().expect("ordered quivers are acyclic");
        Poset::from_relations(
            self.0.vertices.iter().cloned(),
            reach,
        )
        .expect("reachability in a DAG is a strict order")
    }
}

impl Deref for OrderedQuiver {
    type Target = Quiver;

    fn deref(&self) -> &Quiver {
        &self.0
    }
}

/// Hasse quiver: one arrow `x|y` from smaller to larger per cover pair.
pub fn hasse_quiver(p: &Poset) -> OrderedQuiver {
    let arrows = p
        .covers()
        .into_iter()
        .map(|(x, y)| Arrow::new(format!("{x}|{y}"), x, y));
    let q = Quiver::new(p.elements().iter().cloned(), arrows).expect("cover pairs are valid arrows");
    OrderedQuiver::validate(q).expect("Hasse diagrams are ordered")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Quiver {
        Quiver::new(
            vertices.iter().copied(),
            arrows.iter().map(|&(i, s, t)| Arrow::new(i, s, t)),
        )
        .unwrap()
    }

    pub(crate) fn diamond() -> Quiver {
        q(
            &["bottom", "left", "right", "top"],
            &[
                ("tl", "top", "left"),
                ("tr", "top", "right"),
                ("lb", "left", "bottom"),
                ("rb", "right", "bottom"),
            ],
        )
    }

    fn hexagon() -> Quiver {
        q(
            &["a", "b", "c", "ab", "bc", "ac"],
            &[
                ("a|ab", "a", "ab"),
                ("b|ab", "b", "ab"),
                ("a|ac", "a", "ac"),
                ("b|bc", "b", "bc"),
                ("c|ac", "c", "ac"),
                ("c|bc", "c", "bc"),
            ],
        )
    }

    fn square() -> Quiver {
        q(
            &["BL", "BR", "TL", "TR"],
            &[
                ("u", "BL", "TL"),
                ("r", "TL", "TR"),
                ("d", "TR", "BR"),
                ("x", "BL", "TR"),
            ],
        )
    }

    #[test]
    fn rejects_bad_quivers() {
        assert_eq!(
            Quiver::new(["a"], [Arrow::new("f", "a", "a")]).unwrap_err(),
            Error::LoopArrow("f".into())
        );
        assert_eq!(
            Quiver::new(["a", "b"], [Arrow::new("f", "a", "b"), Arrow::new("f", "b", "a")]).unwrap_err(),
            Error::DuplicateArrow("f".into())
        );
        let cyc = q(&["a", "b"], &[("f", "a", "b"), ("g", "b", "a")]);
        assert_eq!(cyc.enumerate_paths(None).unwrap_err(), Error::CyclicQuiver);
    }

    #[test]
    fn path_counts() {
        let single = q(&["a", "b"], &[("f", "a", "b")]);
        assert_eq!(single.enumerate_paths(None).unwrap().len(), 1);
        let paths = diamond().enumerate_paths(None).unwrap();
        assert_eq!(paths.len(), 6);
        assert_eq!(paths.iter().filter(|p| p.len() == 2).count(), 2);
        assert_eq!(diamond().enumerate_paths(Some(1)).unwrap().len(), 4);
        let hex = hexagon().enumerate_paths(None).unwrap();
        assert_eq!(hex.len(), 6);
        assert!(hex.iter().all(|p| p.len() == 1));
    }

    #[test]
    fn parallel_pairs_examples() {
        let pairs = diamond().parallel_pairs().unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].0.arrows, vec!["tl", "lb"]);
        assert_eq!(pairs[0].1.arrows, vec!["tr", "rb"]);
        assert!(hexagon().parallel_pairs().unwrap().is_empty());
        let tri = q(&["a", "b", "c"], &[("f", "a", "b"), ("g", "b", "c"), ("h", "a", "c")]);
        let pairs = tri.parallel_pairs().unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].0.arrows, vec!["h"]);
        assert_eq!(pairs[0].1.arrows, vec!["f", "g"]);
    }

    #[test]
    fn square_completion_and_order() {
        let c = square().complete().unwrap();
        assert_eq!(c.arrows().len(), 6);
        assert!(c.arrow("c:TL>BR").is_some());
        assert!(c.arrow("c:BL>BR").is_some());
        let o = square().order().unwrap();
        let ids: Vec<&str> = o.arrows().iter().map(|a| a.id.as_str()).collect();
        assert_eq!(ids, vec!["u", "r", "d"]);
    }

    #[test]
    fn chain_complete_and_back() {
        let chain = q(&["a", "b", "c"], &[("f", "a", "b"), ("g", "b", "c")]);
        let c = chain.complete().unwrap();
        assert_eq!(c.arrows().len(), 3);
        assert!(c.arrow("c:a>c").is_some());
        let o = c.order().unwrap();
        assert_eq!(o.quiver(), &chain);
        let single = q(&["a", "b"], &[("f", "a", "b")]);
        assert_eq!(single.complete().unwrap(), single);
        assert_eq!(single.order().unwrap().quiver(), &single);
    }

    #[test]
    fn parallel_arrows_rejected_by_constructions() {
        let par = q(&["a", "b"], &[("f", "a", "b"), ("g", "a", "b")]);
        assert!(matches!(par.complete(), Err(Error::ParallelArrows(_, _))));
        assert!(matches!(par.order(), Err(Error::ParallelArrows(_, _))));
    }

    #[test]
    fn ordered_validation() {
        assert!(OrderedQuiver::validate(square()).is_err());
        assert!(OrderedQuiver::validate(hexagon()).is_ok());
    }

    #[test]
    fn quiver_to_poset_examples() {
        let p = OrderedQuiver::validate(hexagon()).unwrap().to_poset();
        assert_eq!(p.len(), 6);
        assert_eq!(p.relations().len(), 6);
        let p = OrderedQuiver::validate(diamond()).unwrap().to_poset();
        assert!(p.lt("top", "bottom"));
        assert_eq!(p.covers().len(), 4);
        let single = OrderedQuiver::validate(q(&["a", "b"], &[("f", "a", "b")])).unwrap();
        assert_eq!(single.to_poset().relations(), vec![("a", "b")]);
    }

    #[test]
    fn hasse_of_chain() {
        let p = Poset::from_relations(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap();
        let h = hasse_quiver(&p);
        let ids: Vec<&str> = h.arrows().iter().map(|a| a.id.as_str()).collect();
        assert_eq!(ids, vec!["a|b", "b|c"]);
    }

    #[test]
    fn route_in_underlying_graph() {
        let r = diamond().undirected_route("left", "right").unwrap();
        assert_eq!(r, vec![("lb".to_string(), true), ("rb".to_string(), false)]);
    }
}
