use std::collections::{BTreeSet, HashSet};

use cxkit::fconj::{all_f_classes, f_conjugacy_class, reduce_to_min, shifts_to};
use cxkit::twist::registry_twist;
use cxkit::{Twist, WeylElement};

const SYSTEMS: [&str; 9] = ["A2", "2A2", "A3", "2A3", "B2", "2B2", "B3", "G2", "2G2"];

/// Class of `x` by closure under all `y -> w y F(w)^{-1}`, generated by plain
/// products rather than simple-generator shifts.
fn oracle_class(tw: &Twist, x: &WeylElement) -> BTreeSet<Vec<i32>> {
    let sys = tw.system();
    sys.elements()
        .unwrap()
        .iter()
        .map(|w| {
            let y = sys.mul(&sys.mul(w, x), &sys.inverse(&tw.apply(w)));
            y.canonical_form().concat()
        })
        .collect()
}

#[test]
fn classes_partition_the_group() {
    for name in SYSTEMS {
        let tw = registry_twist(name).unwrap();
        let sys = tw.system();
        let classes = all_f_classes(&tw).unwrap();
        let total: usize = classes.iter().map(|c| c.len()).sum();
        assert_eq!(total as u64, sys.order(), "{name}");
        let mut seen = HashSet::new();
        for c in &classes {
            let oracle = oracle_class(&tw, c.representative());
            assert_eq!(oracle.len(), c.len(), "{name}");
            for x in c.elements() {
                assert!(seen.insert(x.clone()));
                assert!(oracle.contains(&x.canonical_form().concat()));
            }
            let min = c.elements().iter().map(|x| sys.length(x)).min().unwrap();
            assert_eq!(min, c.min_length());
        }
    }
}

#[test]
fn reduce_to_min_reaches_class_minimum() {
    for name in SYSTEMS {
        let tw = registry_twist(name).unwrap();
        let sys = tw.system();
        for x in sys.elements().unwrap() {
            let class = f_conjugacy_class(&tw, &x).unwrap();
            let (x0, path) = reduce_to_min(&tw, &x).unwrap();
            assert_eq!(sys.length(&x0), class.min_length(), "{name}");
            assert!(path.is_valid(&tw));
            assert_eq!(path.end(), &x0);
            let mut prev = &path.start;
            for step in &path.steps {
                assert_eq!(step.result, tw.conjugate_by_gen(step.generator, prev));
                assert!(sys.length(&step.result) <= sys.length(prev));
                prev = &step.result;
            }
        }
    }
}

#[test]
fn minimal_elements_of_elliptic_classes_are_strongly_connected() {
    for name in SYSTEMS {
        let tw = registry_twist(name).unwrap();
        let sys = tw.system();
        for c in all_f_classes(&tw).unwrap().iter().filter(|c| c.is_elliptic()) {
            let mins: HashSet<_> = c.minimal_elements().iter().cloned().collect();
            // reachability within the minimal layer using only length-preserving edges
            for a in c.minimal_elements() {
                let mut reach = HashSet::from([a.clone()]);
                let mut stack = vec![a.clone()];
                while let Some(y) = stack.pop() {
                    for s in 0..sys.rank() {
                        let z = tw.conjugate_by_gen(s, &y);
                        if mins.contains(&z) && reach.insert(z.clone()) {
                            stack.push(z);
                        }
                    }
                }
                assert_eq!(reach.len(), mins.len(), "{name}");
            }
            let (a, b) = (&c.minimal_elements()[0], c.minimal_elements().last().unwrap());
            let p = shifts_to(&tw, a, b, 100_000).unwrap().unwrap();
            assert!(p.is_valid(&tw));
            assert_eq!(p.end(), b);
        }
    }
}

#[test]
fn expected_class_counts() {
    let count = |n: &str| all_f_classes(&registry_twist(n).unwrap()).unwrap().len();
    // untwisted classes are ordinary conjugacy classes
    assert_eq!(count("A2"), 3);
    assert_eq!(count("A3"), 5);
    assert_eq!(count("B2"), 5);
    assert_eq!(count("G2"), 6);
    assert_eq!(count("B3"), 10);
    assert_eq!(count("2A2"), 3);
}
