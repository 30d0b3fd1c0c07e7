mod common;

use std::collections::HashSet;

use common::words_up_to;
use cxkit::braid::{braid_equal, is_reduced};
use cxkit::fconj::f_conjugacy_class;
use cxkit::reduction::{reduce_word, verify_trace, ReductionMove};
use cxkit::twist::registry_twist;

#[test]
fn each_move_keeps_its_invariant() {
    for name in ["A2", "2A2", "B2", "2B2", "G2", "2G2", "A3", "2A3"] {
        let tw = registry_twist(name).unwrap();
        let sys = tw.system();
        let max = if sys.rank() == 3 { 5 } else { 6 };
        for w in words_up_to(sys.rank(), max) {
            let r = reduce_word(&tw, &w).unwrap();
            let words = r.words(&tw).unwrap();
            for (mv, pair) in r.trace.iter().zip(words.windows(2)) {
                let (before, after) = (&pair[0], &pair[1]);
                let xb = sys.element_from_word(before).unwrap();
                let xa = sys.element_from_word(after).unwrap();
                match mv {
                    ReductionMove::BraidRewrite { .. } => {
                        assert!(braid_equal(sys, before, after).unwrap());
                        assert_eq!(xa, xb);
                        assert_eq!(after.len(), before.len());
                    }
                    ReductionMove::SquareContraction { .. } => {
                        assert_eq!(after.len() + 1, before.len());
                    }
                    ReductionMove::CyclicShiftLeft { .. } | ReductionMove::CyclicShiftRight { .. } => {
                        assert_eq!(after.len(), before.len());
                        assert!(f_conjugacy_class(&tw, &xb).unwrap().contains(&xa), "{name} {w}");
                    }
                }
            }
            assert!(is_reduced(sys, &r.final_word).unwrap());
        }
    }
}

#[test]
fn type_a_results_have_distinct_letters() {
    for name in ["A2", "A3"] {
        let tw = registry_twist(name).unwrap();
        for w in words_up_to(tw.system().rank(), 6) {
            let r = reduce_word(&tw, &w).unwrap();
            let letters: HashSet<_> = r.final_word.letters().iter().collect();
            assert_eq!(letters.len(), r.final_word.len(), "{name} {w} -> {}", r.final_word);
        }
    }
}

#[test]
fn reduction_is_deterministic() {
    let tw = registry_twist("2A3").unwrap();
    for w in words_up_to(3, 4) {
        assert_eq!(reduce_word(&tw, &w).unwrap(), reduce_word(&tw, &w).unwrap());
    }
}

#[test]
fn verifier_rejects_non_minimal_claims() {
    let tw = registry_twist("A2").unwrap();
    let w = "1 2 1".parse().unwrap();
    let mut r = reduce_word(&tw, &w).unwrap();
    assert!(verify_trace(&tw, &w, &r).is_ok());
    r.trace.clear();
    r.final_word = w.clone();
    r.final_element = tw.system().element_from_word(&w).unwrap();
    assert!(verify_trace(&tw, &w, &r).is_err());
}

#[test]
fn larger_systems() {
    for (name, word) in [
        ("3D4", "1 2 3 4 2 1 3 2 4 1"),
        ("2D4", "2 1 3 4 2 1 2 3 2 4"),
        ("F4", "1 2 3 4 3 2 1 2 3 4 1 2"),
        ("2E6", "1 3 4 5 6 2 4 3 1 5"),
    ] {
        let tw = registry_twist(name).unwrap();
        let w = cxkit::Word::parse(word, tw.system().rank()).unwrap();
        let r = reduce_word(&tw, &w).unwrap();
        verify_trace(&tw, &w, &r).unwrap();
    }
}
