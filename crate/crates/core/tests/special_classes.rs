mod common;

use foldkit::coloring::psi;
use foldkit::enumerate::enumerate_graphs;
use foldkit::special::{
    is_threshold, is_trivially_perfect, marcu_min_length, psi_cycle_upper, psi_threshold,
    threshold_obstruction, CreationSequence,
};

#[test]
fn threshold_recognizers_agree() {
    for n in 0..=6 {
        for g in enumerate_graphs(n).unwrap() {
            let peeled = is_threshold(&g).is_ok();
            assert_eq!(peeled, !common::has_forbidden_four_set(&g, true), "{g:?}");
            assert_eq!(peeled, threshold_obstruction(&g).is_none());
            if let Err(o) = is_threshold(&g) {
                let set = o.vertices.iter().fold(0u64, |acc, &v| acc | 1 << v);
                assert!(common::has_forbidden_four_set(&g.induced(set), true));
            }
        }
    }
}

#[test]
fn trivially_perfect_is_a_superclass() {
    for n in 0..=6 {
        for g in enumerate_graphs(n).unwrap() {
            let tp = is_trivially_perfect(&g);
            assert_eq!(tp.is_ok(), !common::has_forbidden_four_set(&g, false));
            if tp.is_err() {
                assert!(is_threshold(&g).is_err());
            }
        }
    }
}

#[test]
fn every_short_sequence_is_recognized() {
    for len in 1..=9 {
        for seq in CreationSequence::all_of_length(len) {
            let g = seq.realize();
            let cert = is_threshold(&g).expect("realized sequences are threshold");
            assert_eq!(cert.sequence, seq);
        }
    }
}

#[test]
fn psi_threshold_matches_solver_on_short_sequences() {
    for len in 1..=7 {
        for seq in CreationSequence::all_of_length(len) {
            assert_eq!(
                psi_threshold(&seq),
                psi(&seq.realize()).unwrap().value,
                "{seq}"
            );
        }
    }
}

#[test]
fn marcu_bound_is_monotone_and_inverse_is_consistent() {
    let mut prev = 0;
    for p in 1..20 {
        let b = marcu_min_length(p).unwrap();
        assert!(b.min_n >= prev);
        prev = b.min_n;
    }
    for n in 3..60 {
        let p = psi_cycle_upper(n);
        assert!(marcu_min_length(p).unwrap().min_n <= n);
        assert!(marcu_min_length(p + 1).unwrap().min_n > n);
    }
}

#[test]
fn cycle_psi_never_exceeds_the_bound() {
    for n in 3..=10 {
        let c = foldkit::family::Family::cycle(n).generate().unwrap();
        let p = psi(&c).unwrap().value;
        assert!(marcu_min_length(p).unwrap().min_n <= n);
        assert!(p <= psi_cycle_upper(n));
    }
}
