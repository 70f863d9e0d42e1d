#![allow(dead_code)]

use fgtool::cli::parse_input;
use fgtool::combinatorics::{Poset, Quiver, SimplicialComplex};

macro_rules! data {
    ($name:literal) => {
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/", $name))
    };
}

pub fn complex(text: &str) -> SimplicialComplex {
    parse_input(text).unwrap().to_complex(true).unwrap()
}

pub fn poset(text: &str) -> Poset {
    parse_input(text).unwrap().to_poset().unwrap()
}

pub fn quiver(text: &str) -> Quiver {
    parse_input(text).unwrap().to_quiver().unwrap()
}

pub fn triangle_boundary() -> SimplicialComplex {
    complex(data!("triangle_boundary.sc"))
}
pub fn filled_triangle() -> SimplicialComplex {
    complex(data!("filled_triangle.sc"))
}
pub fn tetrahedron_boundary() -> SimplicialComplex {
    complex(data!("tetrahedron_boundary.sc"))
}
pub fn torus() -> SimplicialComplex {
    complex(data!("torus.sc"))
}
pub fn projective_plane() -> SimplicialComplex {
    complex(data!("projective_plane.sc"))
}

/// The five test complexes with their names.
pub fn complexes() -> Vec<(&'static str, SimplicialComplex)> {
    vec![
        ("triangle boundary", triangle_boundary()),
        ("filled triangle", filled_triangle()),
        ("tetrahedron boundary", tetrahedron_boundary()),
        ("torus", torus()),
        ("projective plane", projective_plane()),
    ]
}

pub fn chain() -> Poset {
    poset(data!("chain.po"))
}
pub fn diamond_poset() -> Poset {
    poset(data!("diamond.po"))
}
pub fn hexagon_poset() -> Poset {
    poset(data!("hexagon.po"))
}
pub fn crown() -> Poset {
    poset(data!("crown.po"))
}

pub fn hexagon_quiver() -> Quiver {
    quiver(data!("hexagon.qv"))
}
pub fn diamond() -> (Quiver, Quiver, Quiver) {
    (quiver(data!("diamond.qv")), quiver(data!("diamond_left.qv")), quiver(data!("diamond_right.qv")))
}
pub fn square() -> Quiver {
    quiver(data!("square.qv"))
}

pub struct Nested {
    pub q: Quiver,
    pub q1: Quiver,
    pub q2: Quiver,
    pub q11: Quiver,
    pub q12: Quiver,
    pub q21: Quiver,
    pub q22: Quiver,
}

pub fn nested() -> Nested {
    Nested {
        q: quiver(data!("nested.qv")),
        q1: quiver(data!("nested_q1.qv")),
        q2: quiver(data!("nested_q2.qv")),
        q11: quiver(data!("nested_q11.qv")),
        q12: quiver(data!("nested_q12.qv")),
        q21: quiver(data!("nested_q21.qv")),
        q22: quiver(data!("nested_q22.qv")),
    }
}

pub struct Hubs {
    pub q: Quiver,
    pub q1: Quiver,
    pub q2: Quiver,
    pub q11: Quiver,
    pub q12: Quiver,
}

pub fn hubs() -> Hubs {
    Hubs {
        q: quiver(data!("hubs.qv")),
        q1: quiver(data!("hubs_q1.qv")),
        q2: quiver(data!("hubs_q2.qv")),
        q11: quiver(data!("hubs_q11.qv")),
        q12: quiver(data!("hubs_q12.qv")),
    }
}
