use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{hh1_dimension, FieldSpec};
use crate::combinatorics::{hasse_quiver, sim_of_poset, Arrow, Poset, Quiver, UnionFind};
use crate::error::Result;
use crate::groups::{hom_kplus_dimension, invariant_suite_with_budget, InvariantReport, Presentation};
use crate::pi1::{
    check_phi_psi_roundtrip, edge_path_presentation, phi_walk_to_edgepath, psi_edgepath_to_walk,
    quiver_pi1_presentation, Step, Verdict, Walk,
};

#[derive(Debug, Clone, Copy)]
pub struct CheckConfig {
    pub seed: u64,
    pub count: usize,
    pub max_size: usize,
    pub hom_budget: u128,
}

/// Outcome of a randomized check: one line per case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub lines: Vec<String>,
    pub passed: usize,
    pub total: usize,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        write!(
            f,
            "{}: {}/{} {}",
            self.name,
            self.passed,
            self.total,
            if self.ok() { "PASS" } else { "FAIL" }
        )
    }
}

fn connect<R: Rng>(n: usize, pairs: &mut Vec<(usize, usize)>, rng: &mut R) {
    let mut uf = UnionFind::new(n);
    for &(i, j) in pairs.iter() {
        uf.union(i, j);
    }
    for j in 1..n {
        if uf.find(j) != uf.find(0) {
            // join to a random earlier vertex; keeps every pair increasing
            let i = rng.gen_range(0..j);
            let i = if uf.find(i) == uf.find(j) { 0 } else { i };
            pairs.push((i, j));
            uf.union(i, j);
        }
    }
}

/// Random connected poset with `1..=max_size` elements `p0, p1, ...`,
/// built in layers: covers mostly join adjacent layers, with a few longer
/// relations. Relations only go from lower to higher index.
pub fn random_connected_poset<R: Rng>(rng: &mut R, max_size: usize) -> Poset {
    let n = rng.gen_range((max_size / 2).max(1)..=max_size.max(1));
    let layers = rng.gen_range(2..=3);
    let mut layer: Vec<usize> = (0..n).map(|_| rng.gen_range(0..layers)).collect();
    layer.sort_unstable();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let p = match layer[j] - layer[i] {
                0 => 0.0,
                1 => 0.7,
                _ => 0.05,
            };
            if rng.gen_bool(p) {
                pairs.push((i, j));
            }
        }
    }
    connect(n, &mut pairs, rng);
    let name = |i: usize| format!("p{i}");
    Poset::from_relations(
        (0..n).map(name),
        pairs.into_iter().map(|(i, j)| (name(i), name(j))),
    )
    .expect("index order is acyclic")
}

/// Random connected acyclic quiver without parallel arrows on
/// `1..=max_size` vertices `v0, v1, ...`; arrow `vi>vj` has `i < j`.
pub fn random_acyclic_quiver<R: Rng>(rng: &mut R, max_size: usize) -> Quiver {
    let n = rng.gen_range(1..=max_size.max(1));
    let density = rng.gen_range(0.2..0.6);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((i, j));
            }
        }
    }
    connect(n, &mut pairs, rng);
    Quiver::new(
        (0..n).map(|i| format!("v{i}")),
        pairs.into_iter().map(|(i, j)| Arrow::new(format!("v{i}>v{j}"), format!("v{i}"), format!("v{j}"))),
    )
    .expect("generated quiver is valid")
}

fn case_rng(seed: u64, k: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64))
}

fn compare(a: &InvariantReport, b: &InvariantReport) -> Option<String> {
    if a == b {
        None
    } else {
        Some(a.distinguishing(b).unwrap_or_else(|| "hom targets".into()))
    }
}

fn suite(p: &Presentation, budget: u128) -> Result<InvariantReport> {
    invariant_suite_with_budget(p, budget)
}

/// `Π₁` of a random poset against the edge-path group of its order complex.
pub fn check_theorem2(cfg: CheckConfig) -> Result<CheckReport> {
    let mut lines = Vec::new();
    let mut passed = 0;
    for k in 0..cfg.count {
        let seed = cfg.seed.wrapping_add(k as u64);
        let p = random_connected_poset(&mut case_rng(cfg.seed, k), cfg.max_size);
        let q = hasse_quiver(&p);
        let base = p.elements()[0].clone();
        let a = suite(&quiver_pi1_presentation(q.quiver(), &base)?, cfg.hom_budget)?;
        let b = suite(&edge_path_presentation(&sim_of_poset(&p), &base)?, cfg.hom_budget)?;
        let verdict = match compare(&a, &b) {
            None => {
                passed += 1;
                "invariant suites equal".to_string()
            }
            Some(why) => format!("DISTINGUISHED by {why}"),
        };
        lines.push(format!("seed {seed}: {} elements, rank {}: {verdict}", p.len(), a.abelian_rank));
    }
    Ok(CheckReport { name: "theorem2".into(), lines, passed, total: cfg.count })
}

/// `dim HH¹` of the incidence algebra against `dim Hom(Π₁, k⁺)` in
/// characteristics 0, 2 and 3.
pub fn check_theorem3(cfg: CheckConfig) -> Result<CheckReport> {
    let mut lines = Vec::new();
    let mut passed = 0;
    let mut total = 0;
    for k in 0..cfg.count {
        let seed = cfg.seed.wrapping_add(k as u64);
        let p = random_connected_poset(&mut case_rng(cfg.seed, k), cfg.max_size);
        let pres = quiver_pi1_presentation(hasse_quiver(&p).quiver(), &p.elements()[0])?;
        let (rank, torsion) = pres.simplify().abelianization();
        for ch in [0, 2, 3] {
            total += 1;
            let hh = hh1_dimension(&p, FieldSpec::new(ch)?)?;
            let hom = hom_kplus_dimension(rank, &torsion, ch)?;
            if hh == hom {
                passed += 1;
            }
            lines.push(format!(
                "seed {seed} char {ch}: HH1 {hh}, Hom(pi1, k+) {hom}: {}",
                if hh == hom { "match" } else { "MISMATCH" }
            ));
        }
    }
    Ok(CheckReport { name: "theorem3".into(), lines, passed, total })
}

/// Invariant suites of `Q`, its ordered form and its completion.
pub fn check_theorem4(cfg: CheckConfig) -> Result<CheckReport> {
    let mut lines = Vec::new();
    let mut passed = 0;
    for k in 0..cfg.count {
        let seed = cfg.seed.wrapping_add(k as u64);
        let q = random_acyclic_quiver(&mut case_rng(cfg.seed, k), cfg.max_size);
        let base = q.vertices().first().expect("non-empty").clone();
        let ordered = q.order()?.into_inner();
        let completed = q.complete()?;
        let s = suite(&quiver_pi1_presentation(&q, &base)?, cfg.hom_budget)?;
        let so = suite(&quiver_pi1_presentation(&ordered, &base)?, cfg.hom_budget)?;
        let sc = suite(&quiver_pi1_presentation(&completed, &base)?, cfg.hom_budget)?;
        let verdict = match (compare(&s, &so), compare(&s, &sc)) {
            (None, None) => {
                passed += 1;
                "invariant suites equal".to_string()
            }
            (Some(why), _) => format!("Q^o DISTINGUISHED by {why}"),
            (_, Some(why)) => format!("Q^c DISTINGUISHED by {why}"),
        };
        lines.push(format!(
            "seed {seed}: {} vertices, {}/{}/{} arrows: {verdict}",
            q.vertices().len(),
            q.arrows().len(),
            ordered.arrows().len(),
            completed.arrows().len()
        ));
    }
    Ok(CheckReport { name: "theorem4".into(), lines, passed, total: cfg.count })
}

/// Whether `ψ(φ(f)) = f` for every Hasse arrow `f` of `p`.
pub fn psi_phi_fixes_arrows(p: &Poset) -> Result<bool> {
    let h = hasse_quiver(p);
    for a in h.quiver().arrows() {
        for forward in [true, false] {
            let start = if forward { &a.source } else { &a.target };
            let w = Walk::new(h.quiver(), start.clone(), vec![Step::new(a.id.clone(), forward)])?;
            if psi_edgepath_to_walk(&phi_walk_to_edgepath(&w, h.quiver())?, p)? != w {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Loops per poset in [`check_roundtrip`].
pub const ROUNDTRIP_SAMPLES: usize = 10;

/// `ψ∘φ` on random posets: exact on arrows, and on sampled loops up to the
/// relations of `Π₁`.
pub fn check_roundtrip(cfg: CheckConfig) -> Result<CheckReport> {
    let mut lines = Vec::new();
    let mut passed = 0;
    for k in 0..cfg.count {
        let seed = cfg.seed.wrapping_add(k as u64);
        let p = random_connected_poset(&mut case_rng(cfg.seed, k), cfg.max_size);
        let arrows_ok = psi_phi_fixes_arrows(&p)?;
        let r = check_phi_psi_roundtrip(&p, ROUNDTRIP_SAMPLES, seed)?;
        let ok = arrows_ok && r.all_pass();
        if ok {
            passed += 1;
        }
        lines.push(format!(
            "seed {seed}: {} elements, arrows {}, loops {} pass / {} fail / {} inconclusive",
            p.len(),
            if arrows_ok { "fixed" } else { "MOVED" },
            r.count(Verdict::Pass),
            r.count(Verdict::Fail),
            r.count(Verdict::Inconclusive)
        ));
    }
    Ok(CheckReport { name: "roundtrip".into(), lines, passed, total: cfg.count })
}
