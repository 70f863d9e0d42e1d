mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fgtool::cli::{random_acyclic_quiver, random_connected_poset};
use fgtool::combinatorics::{barycentric, hasse_quiver, sim_of_poset, Poset, Quiver};
use fgtool::groups::{count_homs, invariant_suite, FiniteGroup, Letter, Presentation, Word, DEFAULT_HOM_BUDGET};
use fgtool::pi1::{edge_path_presentation, quiver_pi1_presentation};

fn poset(seed: u64) -> Poset {
    random_connected_poset(&mut ChaCha8Rng::seed_from_u64(seed), 8)
}

fn quiver(seed: u64) -> Quiver {
    random_acyclic_quiver(&mut ChaCha8Rng::seed_from_u64(seed), 7)
}

fn relation_set(p: &Poset) -> BTreeSet<(String, String)> {
    p.relations().into_iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

fn random_word<R: Rng>(rng: &mut R, gens: &[&str], max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| Letter::new(*gens.choose(rng).unwrap(), rng.gen_bool(0.5)))
        .collect();
    Word::from_letters(letters)
}

fn random_presentation(seed: u64) -> Presentation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = ["a", "b", "c"];
    let n = rng.gen_range(1..=3);
    let m = rng.gen_range(0..=3);
    let rels = (0..m).map(|_| random_word(&mut rng, &gens[..n], 6)).collect();
    Presentation::new(gens[..n].iter().copied(), rels).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hasse_quiver_recovers_the_poset(seed in any::<u64>()) {
        let p = poset(seed);
        let back = hasse_quiver(&p).to_poset();
        prop_assert_eq!(relation_set(&back), relation_set(&p));
        let covers: BTreeSet<(String, String)> =
            p.covers().into_iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        prop_assert_eq!(hasse_quiver(&p).arrow_pairs(), covers);
    }

    #[test]
    fn order_and_completion_keep_reachability(seed in any::<u64>()) {
        let q = quiver(seed);
        let reach = q.reachability().unwrap();
        let c = q.complete().unwrap();
        let o = q.order().unwrap();
        prop_assert_eq!(c.reachability().unwrap(), reach.clone());
        prop_assert_eq!(o.reachability().unwrap(), reach.clone());
        prop_assert_eq!(c.arrow_pairs(), reach);
        prop_assert!(o.arrow_pairs().is_subset(&q.arrow_pairs()));
        prop_assert_eq!(c.complete().unwrap().arrow_pairs(), c.arrow_pairs());
        prop_assert_eq!(c.order().unwrap().arrow_pairs(), o.arrow_pairs());
        prop_assert_eq!(o.order().unwrap().arrow_pairs(), o.arrow_pairs());
    }

    #[test]
    fn abelianization_ignores_relator_order_conjugates_and_inverses(seed in any::<u64>()) {
        let p = random_presentation(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let gens: Vec<&str> = p.generators().iter().map(String::as_str).collect();
        let mut rels: Vec<Word> = p
            .relators()
            .iter()
            .map(|r| {
                let c = random_word(&mut rng, &gens, 4);
                let r = if rng.gen_bool(0.5) { r.inverse() } else { r.clone() };
                c.concat(&r).concat(&c.inverse())
            })
            .collect();
        rels.shuffle(&mut rng);
        let q = Presentation::new(gens.iter().copied(), rels).unwrap();
        prop_assert_eq!(p.abelianization(), q.abelianization());
    }

    #[test]
    fn hom_counts_survive_simplification(seed in any::<u64>()) {
        let p = random_presentation(seed);
        let s = p.simplify();
        prop_assert_eq!(p.abelianization(), s.abelianization());
        for name in ["C2", "C3", "S3"] {
            let g = FiniteGroup::by_name(name).unwrap();
            prop_assert_eq!(
                count_homs(&p, &g, DEFAULT_HOM_BUDGET).unwrap(),
                count_homs(&s, &g, DEFAULT_HOM_BUDGET).unwrap()
            );
        }
    }

    #[test]
    fn pi1_does_not_depend_on_basepoint(seed in any::<u64>()) {
        let p = poset(seed);
        let q = hasse_quiver(&p);
        let first = invariant_suite(&quiver_pi1_presentation(q.quiver(), &p.elements()[0]).unwrap()).unwrap();
        let last = invariant_suite(&quiver_pi1_presentation(q.quiver(), p.elements().last().unwrap()).unwrap()).unwrap();
        prop_assert_eq!(&first, &last);
        let c = sim_of_poset(&p);
        let v = c.vertices().iter().last().unwrap();
        prop_assert_eq!(&invariant_suite(&edge_path_presentation(&c, v).unwrap()).unwrap(), &first);
    }

    #[test]
    fn order_complex_simplexes_are_chains(seed in any::<u64>()) {
        let p = poset(seed);
        let c = sim_of_poset(&p);
        prop_assert_eq!(c.num_simplexes(), p.chains().len());
        for s in c.simplexes() {
            let v = s.vertices();
            for i in 0..v.len() {
                for j in i + 1..v.len() {
                    prop_assert!(p.comparable(&v[i], &v[j]));
                }
            }
            for f in s.facets() {
                prop_assert!(f.is_empty() || c.contains(&f));
            }
        }
    }

    #[test]
    fn subdivision_has_one_vertex_per_simplex(seed in any::<u64>()) {
        let c = sim_of_poset(&poset(seed));
        prop_assert_eq!(barycentric(&c).vertices().len(), c.num_simplexes());
    }
}

#[test]
fn free_groups_have_power_hom_counts() {
    for n in 0..4 {
        let gens: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let p = Presentation::free(gens);
        for name in ["C2", "C3", "C4", "S3", "S4"] {
            let g = FiniteGroup::by_name(name).unwrap();
            let want = (g.order() as u64).pow(n as u32);
            assert_eq!(count_homs(&p, &g, DEFAULT_HOM_BUDGET).unwrap(), want, "{name}^{n}");
        }
    }
}

#[test]
fn subdivision_counts_on_fixtures() {
    for (name, c) in common::complexes() {
        assert_eq!(barycentric(&c).vertices().len(), c.num_simplexes(), "{name}");
    }
}
