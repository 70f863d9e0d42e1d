use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use crate::combinatorics::{Arrow, Poset, Quiver, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::groups::{InvariantReport, Presentation, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Complex,
    Poset,
    Quiver,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Complex => "complex",
            Kind::Poset => "poset",
            Kind::Quiver => "quiver",
        }
    }
}

/// One declaration line: keyword plus its whitespace-separated arguments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub line: usize,
    pub keyword: String,
    pub args: Vec<String>,
}

/// A parsed input file. Only the line grammar is checked here; building the
/// structure (and its validation) happens in `to_complex` and friends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputDocument {
    pub kind: Kind,
    pub records: Vec<Record>,
}

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { line, msg: msg.into() }
}

fn kind_of(keyword: &str) -> Option<Kind> {
    match keyword {
        "simplex" => Some(Kind::Complex),
        "elem" | "rel" => Some(Kind::Poset),
        "vertex" | "arrow" => Some(Kind::Quiver),
        _ => None,
    }
}

/// Parses the line grammar. `#` starts a comment; blank lines are skipped.
pub fn parse_input(text: &str) -> Result<InputDocument> {
    let mut kind = None;
    let mut records = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = content.split_whitespace();
        let Some(keyword) = tokens.next() else {
            continue;
        };
        let k = kind_of(keyword).ok_or_else(|| syntax(line, format!("unknown keyword `{keyword}`")))?;
        match kind {
            None => kind = Some(k),
            Some(prev) if prev != k => {
                return Err(syntax(
                    line,
                    format!("`{keyword}` does not belong in a {} file", prev.name()),
                ))
            }
            _ => {}
        }
        let args: Vec<String> = tokens.map(str::to_string).collect();
        let arity_ok = match keyword {
            "simplex" => !args.is_empty(),
            "elem" | "vertex" => args.len() == 1,
            "rel" => args.len() == 3 && args[1] == "<",
            "arrow" => args.len() == 3,
            _ => unreachable!(),
        };
        if !arity_ok {
            let expected = match keyword {
                "simplex" => "simplex v1 v2 ...",
                "elem" => "elem x",
                "vertex" => "vertex v",
                "rel" => "rel x < y",
                _ => "arrow id src dst",
            };
            return Err(syntax(line, format!("expected `{expected}`")));
        }
        if keyword == "arrow" && args[1] == args[2] {
            return Err(syntax(line, format!("arrow `{}` is a loop", args[0])));
        }
        records.push(Record {
            line,
            keyword: keyword.to_string(),
            args,
        });
    }
    let kind = kind.ok_or(Error::EmptyInput("no declarations"))?;
    Ok(InputDocument { kind, records })
}

impl InputDocument {
    fn expect(&self, kind: Kind) -> Result<()> {
        if self.kind != kind {
            let line = self.records.first().map_or(1, |r| r.line);
            return Err(syntax(line, format!("expected a {} file, found a {} file", kind.name(), self.kind.name())));
        }
        Ok(())
    }

    /// Builds the complex. With `close_down` every face of a listed simplex
    /// is added; otherwise missing faces are an error.
    pub fn to_complex(&self, close_down: bool) -> Result<SimplicialComplex> {
        self.expect(Kind::Complex)?;
        let mut seen = BTreeSet::new();
        let mut simplexes = Vec::new();
        for r in &self.records {
            let distinct: BTreeSet<&String> = r.args.iter().collect();
            if distinct.len() != r.args.len() {
                return Err(syntax(r.line, "repeated vertex in simplex"));
            }
            let s = Simplex::new(r.args.iter().cloned())?;
            if !seen.insert(s.clone()) {
                return Err(Error::DuplicateId { line: r.line, id: s.label() });
            }
            simplexes.push(s);
        }
        if close_down {
            SimplicialComplex::closure(simplexes)
        } else {
            let vertices: BTreeSet<String> = simplexes.iter().flat_map(|s| s.vertices().iter().cloned()).collect();
            SimplicialComplex::validate(vertices, simplexes)
        }
    }

    pub fn to_poset(&self) -> Result<Poset> {
        self.expect(Kind::Poset)?;
        let mut elements = BTreeSet::new();
        for r in self.records.iter().filter(|r| r.keyword == "elem") {
            if !elements.insert(r.args[0].clone()) {
                return Err(Error::DuplicateId { line: r.line, id: r.args[0].clone() });
            }
        }
        let mut relations = Vec::new();
        for r in self.records.iter().filter(|r| r.keyword == "rel") {
            for label in [&r.args[0], &r.args[2]] {
                if !elements.contains(label) {
                    return Err(Error::UnknownLabel { line: r.line, label: label.clone() });
                }
            }
            if r.args[0] == r.args[2] {
                return Err(syntax(r.line, "an element is not smaller than itself"));
            }
            relations.push((r.args[0].clone(), r.args[2].clone()));
        }
        Poset::from_relations(elements, relations)
    }

    pub fn to_quiver(&self) -> Result<Quiver> {
        self.expect(Kind::Quiver)?;
        let mut vertices = BTreeSet::new();
        for r in self.records.iter().filter(|r| r.keyword == "vertex") {
            if !vertices.insert(r.args[0].clone()) {
                return Err(Error::DuplicateId { line: r.line, id: r.args[0].clone() });
            }
        }
        let mut ids = BTreeSet::new();
        let mut arrows = Vec::new();
        for r in self.records.iter().filter(|r| r.keyword == "arrow") {
            if !ids.insert(r.args[0].clone()) {
                return Err(Error::DuplicateId { line: r.line, id: r.args[0].clone() });
            }
            for label in &r.args[1..] {
                if !vertices.contains(label) {
                    return Err(Error::UnknownLabel { line: r.line, label: label.clone() });
                }
            }
            arrows.push(Arrow::new(r.args[0].clone(), r.args[1].clone(), r.args[2].clone()));
        }
        Quiver::new(vertices, arrows)
    }
}

pub fn serialize_complex(c: &SimplicialComplex) -> String {
    let mut out = String::new();
    for s in c.simplexes() {
        writeln!(out, "simplex {}", s.vertices().join(" ")).unwrap();
    }
    out
}

/// Elements, then cover relations; the transitive closure is implied.
pub fn serialize_poset(p: &Poset) -> String {
    let mut out = String::new();
    for e in p.elements() {
        writeln!(out, "elem {e}").unwrap();
    }
    let mut covers = p.covers();
    covers.sort();
    for (x, y) in covers {
        writeln!(out, "rel {x} < {y}").unwrap();
    }
    out
}

pub fn serialize_quiver(q: &Quiver) -> String {
    let mut out = String::new();
    for v in q.vertices() {
        writeln!(out, "vertex {v}").unwrap();
    }
    for a in q.sorted_arrows() {
        writeln!(out, "arrow {} {} {}", a.id, a.source, a.target).unwrap();
    }
    out
}

/// `gens:` line and one `rel:` line per relator, then the invariant block
/// when a report is given.
pub fn serialize_presentation(p: &Presentation, report: Option<&InvariantReport>) -> String {
    let mut out = String::from("gens:");
    for g in p.generators() {
        write!(out, " {g}").unwrap();
    }
    out.push('\n');
    for r in p.relators() {
        writeln!(out, "rel: {r}").unwrap();
    }
    if let Some(rep) = report {
        writeln!(out, "{rep}").unwrap();
    }
    out
}

/// Reads back the `gens:` / `rel:` lines of a report; other lines are
/// ignored.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut gens: Option<Vec<String>> = None;
    let mut rels = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if let Some(rest) = line.strip_prefix("gens:") {
            if gens.is_some() {
                return Err(syntax(i + 1, "second `gens:` line"));
            }
            gens = Some(rest.split_whitespace().map(str::to_string).collect());
        } else if let Some(rest) = line.strip_prefix("rel:") {
            rels.push(Word::parse(rest).map_err(|e| syntax(i + 1, e.to_string()))?);
        }
    }
    let gens = gens.ok_or(Error::EmptyInput("no `gens:` line"))?;
    Presentation::new(gens, rels)
}

/// Reads back the `invariants:` / `torsion:` / `homs:` block.
pub fn parse_invariants(text: &str) -> Result<InvariantReport> {
    let mut rank = None;
    let mut torsion = Vec::new();
    let mut hom_counts = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let bad = |what: &str| syntax(i + 1, format!("bad {what}"));
        if let Some(rest) = line.strip_prefix("invariants: rank") {
            rank = Some(rest.trim().parse().map_err(|_| bad("rank"))?);
        } else if let Some(rest) = line.strip_prefix("torsion:") {
            torsion = rest
                .split_whitespace()
                .map(|d| d.parse().map_err(|_| bad("torsion")))
                .collect::<Result<_>>()?;
        } else if let Some(rest) = line.strip_prefix("homs:") {
            for item in rest.split_whitespace() {
                let (k, v) = item.split_once('=').ok_or_else(|| bad("hom count"))?;
                hom_counts.insert(k.to_string(), v.parse().map_err(|_| bad("hom count"))?);
            }
        }
    }
    Ok(InvariantReport {
        abelian_rank: rank.ok_or(Error::EmptyInput("no `invariants:` line"))?,
        torsion,
        hom_counts,
    })
}
