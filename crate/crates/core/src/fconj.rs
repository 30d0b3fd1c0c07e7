//! `F`-conjugacy classes `x ~ v^{-1} x F(v)`, cyclic shifts `->_F` and
//! descent to minimal length elements.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::coxeter::{GeneratorSubset, WeylElement};
use crate::error::{Error, Result};
use crate::twist::Twist;
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FConjClass {
    /// Members ordered lexicographically by canonical reduced word.
    elements: Vec<WeylElement>,
    words: Vec<Word>,
    min_length: usize,
    minimal_elements: Vec<WeylElement>,
    elliptic: bool,
}

impl FConjClass {
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    /// Canonical reduced words, aligned with [`FConjClass::elements`].
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &WeylElement) -> bool {
        self.elements.contains(x)
    }

    pub fn min_length(&self) -> usize {
        self.min_length
    }

    pub fn minimal_elements(&self) -> &[WeylElement] {
        &self.minimal_elements
    }

    pub fn is_elliptic(&self) -> bool {
        self.elliptic
    }

    /// The member with the lexicographically smallest canonical word.
    pub fn representative(&self) -> &WeylElement {
        &self.elements[0]
    }

    pub fn representative_word(&self) -> &Word {
        &self.words[0]
    }
}

/// One cyclic shift `x -> s x F(s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftStep {
    pub generator: usize,
    pub result: WeylElement,
}

/// A witness for `x ->_F y`: each step conjugates by a generator without
/// increasing length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftPath {
    pub start: WeylElement,
    pub steps: Vec<ShiftStep>,
}

impl ShiftPath {
    pub fn trivial(start: WeylElement) -> Self {
        ShiftPath { start, steps: Vec::new() }
    }

    pub fn end(&self) -> &WeylElement {
        self.steps.last().map_or(&self.start, |s| &s.result)
    }

    pub fn generators(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.generator).collect()
    }

    /// Replays every step and checks the non-increasing length condition.
    pub fn is_valid(&self, tw: &Twist) -> bool {
        let sys = tw.system();
        let mut cur = self.start.clone();
        for step in &self.steps {
            let next = tw.conjugate_by_gen(step.generator, &cur);
            if next != step.result || sys.length(&next) > sys.length(&cur) {
                return false;
            }
            cur = next;
        }
        true
    }
}

fn closure(tw: &Twist, x: &WeylElement) -> Vec<WeylElement> {
    let mut seen = HashSet::from([x.clone()]);
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(y) = queue.pop_front() {
        for s in 0..tw.system().rank() {
            let z = tw.conjugate_by_gen(s, &y);
            if seen.insert(z.clone()) {
                queue.push_back(z);
            }
        }
    }
    seen.into_iter().collect()
}

fn has_full_f_support(tw: &Twist, x: &WeylElement) -> bool {
    let full = GeneratorSubset::full(tw.system().rank());
    tw.f_closure(tw.system().support(x)) == full
}

fn make_class(tw: &Twist, members: Vec<WeylElement>) -> FConjClass {
    let sys = tw.system();
    let mut keyed: Vec<(Word, WeylElement)> = members
        .into_iter()
        .map(|x| (sys.canonical_reduced_word(&x), x))
        .collect();
    keyed.sort();
    let min_length = keyed.iter().map(|(w, _)| w.len()).min().unwrap_or(0);
    let minimal_elements = keyed
        .iter()
        .filter(|(w, _)| w.len() == min_length)
        .map(|(_, x)| x.clone())
        .collect();
    let elliptic = keyed.iter().all(|(_, x)| has_full_f_support(tw, x));
    let (words, elements) = keyed.into_iter().unzip();
    FConjClass {
        elements,
        words,
        min_length,
        minimal_elements,
        elliptic,
    }
}

/// The `F`-class of `x`, generated as the closure of `{x}` under
/// `y -> s y F(s)` for simple `s`.
pub fn f_conjugacy_class(tw: &Twist, x: &WeylElement) -> Result<FConjClass> {
    tw.system().check_guard(tw.system().order())?;
    Ok(make_class(tw, closure(tw, x)))
}

/// The partition of `W` into `F`-classes, sorted by representative word.
pub fn all_f_classes(tw: &Twist) -> Result<Vec<FConjClass>> {
    let mut assigned: HashSet<WeylElement> = HashSet::new();
    let mut classes = Vec::new();
    for x in tw.system().elements()? {
        if assigned.contains(&x) {
            continue;
        }
        let members = closure(tw, &x);
        assigned.extend(members.iter().cloned());
        classes.push(make_class(tw, members));
    }
    classes.sort_by(|a, b| a.representative_word().cmp(b.representative_word()));
    Ok(classes)
}

pub fn min_length_elements(class: &FConjClass) -> &[WeylElement] {
    class.minimal_elements()
}

/// No member lies in a proper `F`-stable standard parabolic subgroup.
pub fn is_elliptic(class: &FConjClass) -> bool {
    class.is_elliptic()
}

fn rebuild(
    parent: &HashMap<WeylElement, Option<(WeylElement, usize)>>,
    start: &WeylElement,
    end: WeylElement,
) -> ShiftPath {
    let mut steps = Vec::new();
    let mut cur = end;
    while let Some(Some((prev, s))) = parent.get(&cur) {
        steps.push(ShiftStep {
            generator: *s,
            result: cur.clone(),
        });
        cur = prev.clone();
    }
    steps.reverse();
    ShiftPath {
        start: start.clone(),
        steps,
    }
}

/// A shortest witness of `x ->_F y`, or `Ok(None)` when `y` is not reachable
/// by non-increasing shifts. Visiting more than `budget` elements is an
/// error.
pub fn shifts_to(tw: &Twist, x: &WeylElement, y: &WeylElement, budget: usize) -> Result<Option<ShiftPath>> {
    let sys = tw.system();
    let mut parent: HashMap<WeylElement, Option<(WeylElement, usize)>> = HashMap::from([(x.clone(), None)]);
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(u) = queue.pop_front() {
        if &u == y {
            return Ok(Some(rebuild(&parent, x, u)));
        }
        let len = sys.length(&u);
        for s in 0..sys.rank() {
            let v = tw.conjugate_by_gen(s, &u);
            if sys.length(&v) <= len && !parent.contains_key(&v) {
                if parent.len() >= budget {
                    return Err(Error::BudgetExceeded(budget));
                }
                parent.insert(v.clone(), Some((u.clone(), s)));
                queue.push_back(v);
            }
        }
    }
    Ok(None)
}

/// Breadth-first search through the equal-length shifts of `x` for the
/// first strictly length-decreasing shift. Returns the path to the shorter
/// element, or `None` if the layer has none (then `x` is minimal).
pub fn descent_step(tw: &Twist, x: &WeylElement) -> Option<ShiftPath> {
    let sys = tw.system();
    let len = sys.length(x);
    let mut parent: HashMap<WeylElement, Option<(WeylElement, usize)>> = HashMap::from([(x.clone(), None)]);
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(u) = queue.pop_front() {
        let mut same = Vec::new();
        for s in 0..sys.rank() {
            let v = tw.conjugate_by_gen(s, &u);
            let l = sys.length(&v);
            if l < len {
                let mut path = rebuild(&parent, x, u);
                path.steps.push(ShiftStep { generator: s, result: v });
                return Some(path);
            }
            if l == len {
                same.push((v, s));
            }
        }
        for (v, s) in same {
            if !parent.contains_key(&v) {
                parent.insert(v.clone(), Some((u.clone(), s)));
                queue.push_back(v);
            }
        }
    }
    None
}

/// A minimal length element of the class of `x` together with a `->_F`
/// path reaching it.
pub fn reduce_to_min(tw: &Twist, x: &WeylElement) -> Result<(WeylElement, ShiftPath)> {
    tw.system().check_guard(tw.system().order())?;
    let mut path = ShiftPath::trivial(x.clone());
    while let Some(segment) = descent_step(tw, path.end()) {
        path.steps.extend(segment.steps);
    }
    Ok((path.end().clone(), path))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twist::registry_twist;

    fn el(tw: &Twist, w: &str) -> WeylElement {
        tw.system().element_from_word(&w.parse().unwrap()).unwrap()
    }

    fn words(tw: &Twist, xs: &[WeylElement]) -> Vec<String> {
        let mut out: Vec<String> = xs.iter().map(|x| tw.system().canonical_reduced_word(x).to_string()).collect();
        out.sort();
        out
    }

    #[test]
    fn class_examples() {
        let a2 = registry_twist("A2").unwrap();
        let c = f_conjugacy_class(&a2, &el(&a2, "1")).unwrap();
        assert_eq!(words(&a2, c.elements()), vec!["1", "1 2 1", "2"]);
        assert_eq!(c.min_length(), 1);
        assert_eq!(words(&a2, min_length_elements(&c)), vec!["1", "2"]);
        assert!(!c.is_elliptic());

        let f = registry_twist("2A2").unwrap();
        let c = f_conjugacy_class(&f, &el(&f, "1")).unwrap();
        assert_eq!(words(&f, c.elements()), vec!["1", "2"]);
        assert!(c.is_elliptic());
        let c = f_conjugacy_class(&f, &el(&f, "")).unwrap();
        assert_eq!(words(&f, c.elements()), vec!["", "1 2", "2 1"]);
        assert_eq!(c.min_length(), 0);
        assert_eq!(words(&f, min_length_elements(&c)), vec![""]);
        let c = f_conjugacy_class(&f, &el(&f, "1 2 1")).unwrap();
        assert_eq!(c.minimal_elements().len(), 1);
    }

    #[test]
    fn partition_examples() {
        let sizes = |d: &str| -> Vec<usize> { all_f_classes(&registry_twist(d).unwrap()).unwrap().iter().map(|c| c.len()).collect() };
        assert_eq!(sizes("A2"), vec![1, 3, 2]);
        assert_eq!(sizes("2A2"), vec![3, 2, 1]);
        assert_eq!(sizes("G2").len(), 6);
        let a2 = registry_twist("A2").unwrap();
        let classes = all_f_classes(&a2).unwrap();
        assert!(classes[2].is_elliptic());
        assert!(!classes[1].is_elliptic());
    }

    #[test]
    fn shift_examples() {
        let a2 = registry_twist("A2").unwrap();
        let w0 = a2.system().longest_element();
        let p = shifts_to(&a2, &w0, &el(&a2, "2"), 100).unwrap().unwrap();
        assert_eq!(p.generators(), vec![0]);
        assert!(p.is_valid(&a2));
        assert_eq!(shifts_to(&a2, &el(&a2, "1"), &el(&a2, "1 2"), 100).unwrap(), None);
        let f = registry_twist("2A2").unwrap();
        let p = shifts_to(&f, &el(&f, "1"), &el(&f, "2"), 100).unwrap().unwrap();
        assert_eq!(p.generators(), vec![0]);
        assert!(matches!(shifts_to(&a2, &w0, &el(&a2, "1"), 1), Err(Error::BudgetExceeded(1))));
    }

    #[test]
    fn reduce_to_min_examples() {
        let a2 = registry_twist("A2").unwrap();
        let (x0, path) = reduce_to_min(&a2, &a2.system().longest_element()).unwrap();
        assert_eq!(x0, el(&a2, "2"));
        assert_eq!(path.generators(), vec![0]);
        let f = registry_twist("2A2").unwrap();
        let (x0, path) = reduce_to_min(&f, &el(&f, "1 2")).unwrap();
        assert!(x0.is_identity());
        assert_eq!(path.generators(), vec![0]);
        let (x0, path) = reduce_to_min(&f, &el(&f, "1")).unwrap();
        assert_eq!(x0, el(&f, "1"));
        assert!(path.steps.is_empty());
    }
}
