mod common;

use foldkit::coloring::{chi, edge_bound, is_complete, is_k_colorable, is_proper, psi};
use foldkit::enumerate::enumerate_graphs;
use foldkit::family::Family;
use foldkit::Graph;

#[test]
fn chi_matches_brute_force() {
    for n in 0..=6 {
        for g in enumerate_graphs(n).unwrap() {
            let r = chi(&g).unwrap();
            assert_eq!(r.value, common::naive_chi(&g), "{g:?}");
            assert_eq!(r.certificate.num_colors(), r.value);
            assert!(is_proper(&g, &r.certificate).unwrap());
            if r.value > 0 {
                assert!(!is_k_colorable(&g, r.value - 1));
            }
        }
    }
}

#[test]
fn psi_matches_brute_force_on_all_small_graphs() {
    for n in 0..=5 {
        for g in enumerate_graphs(n).unwrap() {
            assert_eq!(psi(&g).unwrap().value, common::naive_psi(&g), "{g:?}");
        }
    }
}

#[test]
fn psi_certificates_and_bounds() {
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            let p = psi(&g).unwrap();
            let c = chi(&g).unwrap().value;
            assert!(c <= p.value);
            assert_eq!(p.certificate.num_colors(), p.value);
            assert!(is_proper(&g, &p.certificate).unwrap());
            assert!(is_complete(&g, &p.certificate).unwrap());
            assert!(p.value * (p.value - 1) / 2 <= g.edge_count());
            assert!(p.value <= edge_bound(g.edge_count()));
        }
    }
}

#[test]
fn isolated_vertex_rule() {
    for n in 0..=5 {
        for g in enumerate_graphs(n).unwrap() {
            let with = g.add_isolated().unwrap();
            assert_eq!(psi(&with).unwrap().value, psi(&g).unwrap().value.max(1));
        }
    }
}

#[test]
fn spot_values() {
    let p = |f: Family| psi(&f.generate().unwrap()).unwrap().value;
    assert_eq!(p(Family::cycle(9)), 4);
    assert_eq!(p(Family::path(4)), 3);
    assert_eq!(p(Family::complete(4)), 4);
    assert_eq!(p(Family::wheel(9)), 5);
    assert_eq!(chi(&Family::wheel(9).generate().unwrap()).unwrap().value, 4);
    // P4 upper bound from edges: 3 edges < C(4,2)
    assert!(edge_bound(3) < 4);
}

#[test]
fn bounds_are_enforced() {
    assert!(psi(&Graph::empty(11).unwrap()).is_err());
    assert!(chi(&Graph::empty(17).unwrap()).is_err());
    assert!(chi(&Graph::complete(16).unwrap()).is_ok());
}
