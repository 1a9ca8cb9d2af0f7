mod common;

use gpplanar::corpus::random_graph;
use gpplanar::decider::{check_condition_i, simple_graph};
use gpplanar::planarity::planar;
use gpplanar::witnesses::witness_radius;
use gpplanar::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn verdict_survives_relabelling() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let g = random_graph(&mut rng, 7, 5);
        let h = g.relabel(|id| format!("z_{}", id.chars().rev().collect::<String>())).unwrap();
        let (a, b) = (decide(&g), decide(&h));
        assert_eq!(a.planar, b.planar);
        assert_eq!(a.conditions(), b.conditions());
    }
}

#[test]
fn condition_i_matches_subdivision_search() {
    for n in 1..=5usize {
        let ids: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let ps = common::pairs(n);
        for mask in 0u64..1 << ps.len() {
            let edges: Vec<_> = ps.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &(i, j))| (ids[i].clone(), ids[j].clone())).collect();
            let g = ProductGraph::new(ids.iter().map(|id| (id.clone(), 2)), edges).unwrap();
            let outer = common::outerplanar_by_subdivision_search(&simple_graph(&g));
            assert_eq!(check_condition_i(&g).is_none(), outer, "n={n} mask={mask:#x}");
        }
    }
}

#[test]
fn condition_i_certificates_check() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut seen = 0;
    for _ in 0..400 {
        let g = random_graph(&mut rng, 8, 2);
        if let Some(v) = check_condition_i(&g) {
            let cert = v.certificate.expect("condition I carries a certificate");
            assert!(witnesses::verify_graph_certificate(&g, &cert));
            assert!(matches!(cert.model, Model::K4 | Model::K23));
            seen += 1;
        }
    }
    assert!(seen > 50);
}

#[test]
fn planar_verdicts_have_planar_balls() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut checked = 0;
    for _ in 0..300 {
        let g = random_graph(&mut rng, 6, 5);
        if !decide(&g).planar {
            continue;
        }
        for r in 1..=3 {
            match ball_with_cap(&g, r, 20_000) {
                Ok(b) => assert!(planar(&b.to_simple_graph()), "{} at r={r}", serde_json::to_string(&g).unwrap()),
                Err(_) => break,
            }
        }
        checked += 1;
    }
    assert!(checked > 50);
}

#[test]
fn witnesses_embed_in_nonplanar_balls() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut checked = 0;
    for _ in 0..300 {
        let g = random_graph(&mut rng, 6, 5);
        let v = decide(&g);
        let Some(w) = witness_for(&g, &v).unwrap() else { continue };
        assert!(verify_witness(&g, &w));
        let r = witness_radius(&g, &w);
        let b = ball(&g, r).unwrap();
        assert!(w.vertices().iter().all(|x| b.contains(x)));
        assert!(!planar(&b.to_simple_graph()));
        checked += 1;
    }
    assert!(checked > 30);
}
