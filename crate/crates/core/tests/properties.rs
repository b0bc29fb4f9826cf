use std::collections::BTreeSet;

use kauffman_core::pruning::PruningReport;
use kauffman_core::verify::random_braid_diagram;
use kauffman_core::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn diagram_from_seed(seed: u64, max_crossings: usize) -> Diagram {
    random_braid_diagram(&mut ChaCha8Rng::seed_from_u64(seed), max_crossings)
}

fn planar_from_seed(seed: u64, max_crossings: usize) -> Diagram {
    let d = diagram_from_seed(seed, max_crossings);
    let mut out = d.clone();
    for v in 0..d.num_vertices() {
        if !out.vertices()[v].kind.is_singular() {
            out = out.singularize(v).unwrap();
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn faces_satisfy_euler_formula(seed in any::<u64>()) {
        let d = diagram_from_seed(seed, 8);
        let f = compute_faces(&d).unwrap();
        prop_assert_eq!(f.len(), d.num_vertices() + 2);
        let mut corners: Vec<Quadrant> = f.faces.iter().flat_map(|x| x.corners.iter().copied()).collect();
        let n = corners.len();
        corners.sort();
        corners.dedup();
        prop_assert_eq!(corners.len(), n);
        prop_assert_eq!(n, 4 * d.num_vertices());
    }

    #[test]
    fn state_sum_agrees_with_both_skein_branches(seed in any::<u64>()) {
        let d = diagram_from_seed(seed, 8);
        let delta = alexander_state_sum(&d).unwrap();
        prop_assert_eq!(&alexander_skein(&d, SkeinBranch::Plus).unwrap(), &delta);
        prop_assert_eq!(&alexander_skein(&d, SkeinBranch::Minus).unwrap(), &delta);
    }

    #[test]
    fn enumeration_matches_oracle(seed in any::<u64>()) {
        let d = diagram_from_seed(seed, 8);
        let f = compute_faces(&d).unwrap();
        let states = enumerate_states(&d, &f);
        prop_assert_eq!(count_states_oracle(&d, &f).unwrap(), states.len() as u64);
        let eligible: BTreeSet<usize> = f.eligible_faces().collect();
        for s in &states {
            let image: BTreeSet<usize> = s.faces.iter().copied().collect();
            prop_assert_eq!(image.len(), d.num_vertices());
            prop_assert_eq!(&image, &eligible);
            prop_assert_eq!(s.n_grading(), s.maslov - s.twice_s);
        }
        let parity = states.first().map(|s| s.twice_s.rem_euclid(2));
        prop_assert!(states.iter().all(|s| Some(s.twice_s.rem_euclid(2)) == parity));
    }

    #[test]
    fn chain_euler_characteristic_is_delta(seed in any::<u64>()) {
        let d = diagram_from_seed(seed, 8);
        let t = generator_table(&d).unwrap();
        prop_assert_eq!(t.euler(), alexander_state_sum(&d).unwrap());
    }

    #[test]
    fn marked_edge_does_not_matter(seed in any::<u64>()) {
        let d = diagram_from_seed(seed, 6);
        let delta = alexander_state_sum(&d).unwrap();
        for &e in d.edges() {
            prop_assert_eq!(&alexander_state_sum(&d.with_marked_edge(e).unwrap()).unwrap(), &delta);
        }
    }

    #[test]
    fn skein_identity_at_every_vertex(seed in any::<u64>()) {
        let d = diagram_from_seed(seed, 6);
        for v in 0..d.num_vertices() {
            prop_assert!(classical_skein_check(&d, v).unwrap());
        }
    }

    #[test]
    fn planar_diagrams_satisfy_pruning_lemmas(seed in any::<u64>()) {
        let d = planar_from_seed(seed, 8);
        let r = PruningReport::compute(&d).unwrap();
        prop_assert!(r.all_connected(), "{:?}", r);
        prop_assert!(r.all_singletons(), "{:?}", r);
    }

    #[test]
    fn planar_homology_is_diagonal(seed in any::<u64>()) {
        let d = planar_from_seed(seed, 8);
        let h = hfb_planar(&d).unwrap();
        let delta = alexander_state_sum(&d).unwrap();
        prop_assert!(h.ranks.entries().all(|((m, k), _)| m == k));
        prop_assert_eq!(h.euler(), delta.clone());
        for ((_, k), r) in h.ranks.entries() {
            prop_assert_eq!(delta.coeff(k).magnitude().to_string(), r.to_string());
        }
    }

    #[test]
    fn skd_round_trip(seed in any::<u64>()) {
        let d = diagram_from_seed(seed, 8);
        prop_assert_eq!(parse_diagram(&d.to_skd()).unwrap(), d);
    }

    #[test]
    fn plus_then_singularize_restores(seed in any::<u64>()) {
        let d = planar_from_seed(seed, 6);
        for v in 0..d.num_vertices() {
            let plus = d.resolve(v, ResolveMode::Plus).unwrap();
            prop_assert_eq!(plus.diagram.singularize(v).unwrap(), d.clone());
        }
    }
}

#[test]
fn knots_evaluate_to_a_unit() {
    for name in ["unknot", "kink+", "trefoil", "trefoil-", "figure8"] {
        let d = corpus::lookup(name).unwrap().diagram().unwrap();
        let v = alexander_state_sum(&d).unwrap().eval_at_one();
        assert!(v == 1.into() || v == (-1).into(), "{name}: {v}");
    }
}

#[test]
fn split_resolutions_vanish_under_both_methods() {
    for e in corpus::CORPUS {
        let d = e.diagram().unwrap();
        for v in 0..d.num_vertices() {
            let r = d.resolve(v, ResolveMode::Oriented).unwrap();
            if r.split {
                assert!(alexander_state_sum(&r.diagram).unwrap().is_zero());
                assert!(alexander_skein(&r.diagram, SkeinBranch::Plus).unwrap().is_zero());
            }
        }
    }
}
