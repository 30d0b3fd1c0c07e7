mod common;

use common::{contains_pattern, permutation, words_up_to};
use cxkit::invariants::{
    component_count, dl_dimension, f_support, is_irreducible_dl, is_rationally_smooth, strata_count, DLTuple,
};
use cxkit::twist::registry_twist;
use cxkit::{QPolynomial, Word};

/// Complete flags `0 < L < P < F_2^3`, counted by brute force over vectors
/// encoded as 3-bit masks.
fn flags_over_f2() -> usize {
    let mut planes = std::collections::BTreeSet::new();
    for v in 1u8..8 {
        for w in 1u8..8 {
            if v != w {
                let mut p = vec![0, v, w, v ^ w];
                p.sort();
                planes.insert(p);
            }
        }
    }
    (1u8..8).map(|line| planes.iter().filter(|p| p.contains(&line)).count()).sum()
}

#[test]
fn empty_tuple_in_a2_counts_flags() {
    assert_eq!(flags_over_f2(), 21);
    let tw = registry_twist("A2").unwrap();
    let p = component_count(&tw, &DLTuple::default()).unwrap();
    assert_eq!(p.evaluate(2).unwrap(), flags_over_f2() as i128);
}

#[test]
fn twisted_empty_tuples() {
    let p = |n: &str| component_count(&registry_twist(n).unwrap(), &DLTuple::default()).unwrap();
    assert_eq!(p("2A2"), QPolynomial::from_coeffs(vec![1, 0, 0, 1]));
    assert_eq!(p("2B2"), QPolynomial::from_coeffs(vec![1, 0, 0, 0, 1]));
}

#[test]
fn full_support_gives_one_component() {
    for name in ["A2", "2A2", "A3", "2A3", "B2", "2B2", "G2"] {
        let tw = registry_twist(name).unwrap();
        let sys = tw.system();
        for w in words_up_to(sys.rank(), 4) {
            let t = DLTuple::from_word(sys, &w).unwrap();
            let irreducible = is_irreducible_dl(&tw, &t);
            assert_eq!(irreducible, f_support(&tw, &t).len() == tw.f_orbits().len());
            let p = component_count(&tw, &t).unwrap();
            assert_eq!(irreducible, p == QPolynomial::one(), "{name} {w}");
        }
    }
}

#[test]
fn rational_smoothness_in_a3_matches_patterns() {
    let tw = registry_twist("A3").unwrap();
    let sys = tw.system();
    let mut singular = Vec::new();
    for x in sys.elements().unwrap() {
        let w = sys.canonical_reduced_word(&x);
        let perm = permutation(3, &w);
        let pattern = contains_pattern(&perm, &[3, 4, 1, 2]) || contains_pattern(&perm, &[4, 2, 3, 1]);
        let smooth = is_rationally_smooth(sys, &x).unwrap();
        assert_eq!(!smooth, pattern, "{w}");
        if !smooth {
            singular.push(perm);
        }
    }
    singular.sort();
    assert_eq!(singular, vec![vec![3, 4, 1, 2], vec![4, 2, 3, 1]]);
}

#[test]
fn dimension_is_additive_and_strata_positive() {
    let tw = registry_twist("B2").unwrap();
    let sys = tw.system();
    let words = words_up_to(2, 3);
    for a in &words {
        for b in &words {
            let ta = DLTuple::from_words(sys, std::slice::from_ref(a)).unwrap();
            let tb = DLTuple::from_words(sys, std::slice::from_ref(b)).unwrap();
            let tab = ta.concat(&tb);
            assert_eq!(dl_dimension(sys, &tab), dl_dimension(sys, &ta) + dl_dimension(sys, &tb));
            let strata = strata_count(sys, &tab).unwrap();
            let trivial = tab.elements().iter().all(|x| x.is_identity());
            assert!(strata >= 1);
            assert_eq!(strata == 1, trivial, "{a} {b}");
        }
    }
    let one: Word = "1".parse().unwrap();
    assert_eq!(strata_count(sys, &DLTuple::from_word(sys, &one).unwrap()).unwrap(), 2);
}
