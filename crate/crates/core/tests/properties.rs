//! Invariants over random partial cubes.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use media_draw::corpus::random_partial_cube;
use media_draw::graph::Graph;
use media_draw::io::{load, parse_file, serialize, serialize_json, LoadedMedium, MediumFile, StateRecord};
use media_draw::medium::{graph_from_medium, medium_from_partial_cube, medium_isomorphism, validate_medium_axioms};
use media_draw::partial_cube::{hypercube_embedding, theta_classes};
use media_draw::planar::{arrangement_to_medium, recognize_and_draw, verify_symmetric};
use media_draw::projection::verify_lattice_drawing;
use media_draw::report::lattice;
use media_draw::svg::{render, Scene, Style};

fn file_of(g: &Graph) -> MediumFile {
    let emb = hypercube_embedding(g, &theta_classes(g).unwrap()).unwrap();
    MediumFile::new(
        emb.to_lattice()
            .into_iter()
            .enumerate()
            .map(|(i, coords)| StateRecord {
                name: format!("v{i}"),
                coords,
            })
            .collect(),
    )
}

fn random_medium(seed: u64, n: usize) -> LoadedMedium {
    let g = random_partial_cube(&mut StdRng::seed_from_u64(seed), n);
    load(file_of(&g)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn serialization_round_trips(seed in any::<u64>(), n in 1usize..=14) {
        let m = random_medium(seed, n);
        prop_assert_eq!(&parse_file(serialize(&m.file).as_bytes()).unwrap(), &m.file);
        prop_assert_eq!(&parse_file(serialize_json(&m.file).as_bytes()).unwrap(), &m.file);
    }

    #[test]
    fn media_satisfy_axioms_and_round_trip(seed in any::<u64>(), n in 1usize..=14) {
        let m = random_medium(seed, n);
        prop_assert!(validate_medium_axioms(&m.medium, 4).is_ok());
        let g = graph_from_medium(&m.medium);
        let back = medium_from_partial_cube(&hypercube_embedding(&g, &theta_classes(&g).unwrap()).unwrap());
        prop_assert!(medium_isomorphism(&m.medium, &back).is_some());
    }

    #[test]
    fn lattice_projection_properties(seed in any::<u64>(), n in 2usize..=16) {
        let m = random_medium(seed, n);
        let lat = lattice(&m).unwrap();
        let pp = lat.placement.expect("nondegenerate axes");
        let report = verify_lattice_drawing(&pp, &lat.embedding);
        prop_assert!(report.core_passed(), "{}", report);
        if lat.embedding.is_interval_product() {
            prop_assert!(report.all_passed(), "{}", report);
        }
    }

    #[test]
    fn svg_is_deterministic_and_complete(seed in any::<u64>(), n in 1usize..=12) {
        let m = random_medium(seed, n);
        let lat = lattice(&m).unwrap();
        let scene = match &lat.placement {
            Some(pp) => Scene::from(pp),
            None => Scene { points: vec![(0.0, 0.0)], edges: vec![] },
        };
        let a = render(&scene, &Style::default());
        prop_assert_eq!(&a, &render(&scene, &Style::default()));
        prop_assert_eq!(a.matches("<circle").count(), m.graph.n());
        prop_assert_eq!(a.matches("<line").count(), m.graph.m());
    }

    #[test]
    fn accepted_drawings_verify_and_round_trip(seed in any::<u64>(), n in 1usize..=14) {
        let m = random_medium(seed, n);
        if let Ok(rec) = recognize_and_draw(&m.graph) {
            prop_assert_eq!(verify_symmetric(&rec.drawing), Ok(()));
            prop_assert!(rec.arrangement.is_weak());
            let cells = arrangement_to_medium(&rec.arrangement).unwrap();
            prop_assert!(medium_isomorphism(&cells, &m.medium).is_some());
        }
    }
}
