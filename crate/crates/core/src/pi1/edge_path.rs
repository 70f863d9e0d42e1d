use crate::combinatorics::SimplicialComplex;
use crate::error::{Error, Result};
use crate::groups::{Letter, Presentation, Word};

use super::walk::SpanningTree;

/// Generator name for the edge `{u, v}`, `u < v`.
pub fn edge_generator(u: &str, v: &str) -> String {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    format!("{a}|{b}")
}

/// BFS spanning tree of the 1-skeleton, neighbors in lexicographic order.
pub fn complex_spanning_tree(c: &SimplicialComplex, basepoint: &str) -> Result<SpanningTree> {
    if !c.vertices().contains(basepoint) {
        return Err(Error::UnknownBasepoint(basepoint.to_string()));
    }
    SpanningTree::bfs(basepoint, c.vertices(), |v| {
        c.neighbors(v)
            .into_iter()
            .map(|w| (w.to_string(), edge_generator(v, w)))
            .collect()
    })
    .ok_or(Error::Disconnected)
}

/// Edge-path group presentation: one generator per edge outside a BFS
/// spanning tree, one relator per triangle.
pub fn edge_path_presentation(c: &SimplicialComplex, basepoint: &str) -> Result<Presentation> {
    if !c.is_connected() {
        return Err(Error::Disconnected);
    }
    let tree = complex_spanning_tree(c, basepoint)?;
    let generators: Vec<String> = c
        .of_dim(1)
        .into_iter()
        .map(|e| edge_generator(&e.vertices()[0], &e.vertices()[1]))
        .filter(|g| !tree.contains_edge(g))
        .collect();
    let step = |x: &str, y: &str| -> Option<Letter> {
        let g = edge_generator(x, y);
        if tree.contains_edge(&g) {
            None
        } else {
            Some(Letter::new(g, x > y))
        }
    };
    let relators = c
        .of_dim(2)
        .into_iter()
        .map(|t| {
            let [u, v, w] = [&t.vertices()[0], &t.vertices()[1], &t.vertices()[2]];
            [step(u, v), step(v, w), step(w, u)].into_iter().flatten().collect::<Word>()
        })
        .collect();
    Presentation::new(generators, relators)
}

/// Word of a closed (or open) edge-path, reading non-tree edges.
pub fn edge_path_word(c: &SimplicialComplex, basepoint: &str, vertices: &[String]) -> Result<Word> {
    let tree = complex_spanning_tree(c, basepoint)?;
    let mut w = Word::identity();
    for pair in vertices.windows(2) {
        let (x, y) = (&pair[0], &pair[1]);
        if x == y {
            continue;
        }
        if !c.has_edge(x, y) {
            return Err(Error::NotAnEdgePath(x.clone(), y.clone()));
        }
        let g = edge_generator(x, y);
        if !tree.contains_edge(&g) {
            w.push(Letter::new(g, x > y));
        }
    }
    Ok(w.free_reduce())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Simplex;
    use crate::groups::invariant_suite;

    fn closure(faces: &[&[&str]]) -> SimplicialComplex {
        SimplicialComplex::closure(faces.iter().map(|f| Simplex::new(f.iter().copied()).unwrap())).unwrap()
    }

    #[test]
    fn triangle_boundary_is_z() {
        let c = closure(&[&["a", "b"], &["b", "c"], &["a", "c"]]);
        let p = edge_path_presentation(&c, "a").unwrap();
        assert_eq!(p.num_generators(), 1);
        assert!(p.relators().is_empty());
        assert_eq!(p.generators(), ["b|c"]);
    }

    #[test]
    fn filled_triangle_is_trivial() {
        let c = closure(&[&["a", "b", "c"]]);
        let p = edge_path_presentation(&c, "a").unwrap();
        assert_eq!(p.num_generators(), 1);
        assert_eq!(p.relators().len(), 1);
        assert!(p.simplify().is_trivial());
    }

    #[test]
    fn tetrahedron_boundary() {
        let c = closure(&[&["a", "b", "c"], &["a", "b", "d"], &["a", "c", "d"], &["b", "c", "d"]]);
        let p = edge_path_presentation(&c, "a").unwrap();
        assert_eq!((p.num_generators(), p.relators().len()), (3, 4));
        let r = invariant_suite(&p).unwrap();
        assert_eq!(r.abelian_rank, 0);
        assert!(r.hom_counts.values().all(|&v| v == 1));
    }

    #[test]
    fn errors() {
        let c = closure(&[&["a", "b"]]);
        assert_eq!(edge_path_presentation(&c, "z"), Err(Error::UnknownBasepoint("z".into())));
        let d = closure(&[&["a"], &["b"]]);
        assert_eq!(edge_path_presentation(&d, "a"), Err(Error::Disconnected));
    }
}
