//! Combinatorial invariants attached to words and tuples of Weyl elements:
//! `F`-support, Coxeter elements, irreducibility, component counts,
//! dimension, strata and smoothness certificates.

use serde::Serialize;

use crate::coxeter::{CoxeterSystem, GeneratorSubset, WeylElement};
use crate::error::Result;
use crate::poly::QPolynomial;
use crate::twist::Twist;
use crate::word::Word;

/// A tuple `(w_1, ..., w_r)` of elements of one system; `r = 0` allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DLTuple {
    elements: Vec<WeylElement>,
}

impl DLTuple {
    pub fn new(elements: Vec<WeylElement>) -> Self {
        DLTuple { elements }
    }

    /// The tuple of simple reflections spelled by a word, `(s_1, ..., s_m)`.
    pub fn from_word(sys: &CoxeterSystem, w: &Word) -> Result<Self> {
        w.validate(sys.rank())?;
        Ok(DLTuple::new(w.letters().iter().map(|&s| sys.generator(s)).collect()))
    }

    /// One factor `alpha(w_i)` per word.
    pub fn from_words(sys: &CoxeterSystem, words: &[Word]) -> Result<Self> {
        words
            .iter()
            .map(|w| sys.element_from_word(w))
            .collect::<Result<Vec<_>>>()
            .map(DLTuple::new)
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn concat(&self, other: &DLTuple) -> DLTuple {
        DLTuple::new(self.elements.iter().chain(&other.elements).cloned().collect())
    }
}

/// The `F`-orbits meeting the support of the tuple, in orbit order.
pub fn f_support(tw: &Twist, t: &DLTuple) -> Vec<GeneratorSubset> {
    let support = t
        .elements()
        .iter()
        .fold(GeneratorSubset::EMPTY, |acc, x| acc.union(tw.system().support(x)));
    tw.f_orbits()
        .blocks()
        .iter()
        .copied()
        .filter(|b| b.bits() & support.bits() != 0)
        .collect()
}

/// `F`-support of a word: the orbits of its letters.
pub fn f_support_of_word(tw: &Twist, w: &Word) -> Result<Vec<GeneratorSubset>> {
    Ok(f_support(tw, &DLTuple::from_word(tw.system(), w)?))
}

/// Full `F`-support, with the letters of a reduced word in pairwise distinct
/// `F`-orbits.
pub fn is_coxeter_element(tw: &Twist, x: &WeylElement) -> bool {
    let orbits = tw.f_orbits();
    let word = tw.system().canonical_reduced_word(x);
    let mut hit = vec![false; orbits.len()];
    for &s in word.letters() {
        if std::mem::replace(&mut hit[orbits.index_of(s)], true) {
            return false;
        }
    }
    hit.into_iter().all(|h| h)
}

/// Irreducible exactly when the `F`-support is all of `S_F`.
pub fn is_irreducible_dl(tw: &Twist, t: &DLTuple) -> bool {
    f_support(tw, t).len() == tw.f_orbits().len()
}

/// `sum q^{l(w)}` over the `F`-fixed minimal coset representatives
/// `w in W^J`, where `J` is the union of the orbits in the `F`-support.
/// Counts the `F`-rational points of `G/P_J`, one cell per fixed `w`.
pub fn component_count(tw: &Twist, t: &DLTuple) -> Result<QPolynomial> {
    let sys = tw.system();
    let j = f_support(tw, t).into_iter().fold(GeneratorSubset::EMPTY, GeneratorSubset::union);
    let mut poly = QPolynomial::zero();
    for w in sys.min_coset_reps(j)? {
        if tw.is_identity() || tw.apply(&w) == w {
            poly.add_monomial(sys.length(&w), 1);
        }
    }
    Ok(poly)
}

/// `l(w_1) + ... + l(w_r)`.
pub fn dl_dimension(sys: &CoxeterSystem, t: &DLTuple) -> usize {
    t.elements().iter().map(|x| sys.length(x)).sum()
}

/// `prod |[e, w_i]|`, the number of strata `X(w_1', ..., w_r')` with
/// `w_i' <= w_i`.
pub fn strata_count(sys: &CoxeterSystem, t: &DLTuple) -> Result<u128> {
    let mut count: u128 = 1;
    for x in t.elements() {
        let size = sys.lower_interval(x)?.len() as u128;
        count = count.checked_mul(size).ok_or(crate::Error::Overflow)?;
    }
    Ok(count)
}

/// Palindromic Poincaré polynomial of `[e, w]`.
pub fn is_rationally_smooth(sys: &CoxeterSystem, w: &WeylElement) -> Result<bool> {
    Ok(sys.poincare_polynomial(w)?.is_palindromic())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SmoothnessKind {
    /// Every factor is the longest element of a standard parabolic of rank
    /// at most two.
    SmoothByDihedralLongest,
    RationallySmoothAllFactors,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorEvidence {
    pub word: Word,
    /// Generators of the rank <= 2 parabolic whose longest element this is.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dihedral_parabolic: Option<GeneratorSubset>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poincare: Option<QPolynomial>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub palindromic: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmoothnessVerdict {
    pub kind: SmoothnessKind,
    pub factors: Vec<FactorEvidence>,
    /// 0-based indices of factors failing palindromicity.
    #[serde(skip)]
    pub failing: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub caveat: Option<String>,
}

pub const SIMPLY_LACED_CAVEAT: &str =
    "rational smoothness (palindromic Poincare polynomial) implies smoothness only in simply-laced types";

/// `Some(J)` when `x` is the longest element of `W_J` with `|J| <= 2`.
pub fn dihedral_longest_support(sys: &CoxeterSystem, x: &WeylElement) -> Option<GeneratorSubset> {
    let j = sys.support(x);
    (j.len() <= 2 && sys.parabolic_longest(j) == *x).then_some(j)
}

pub fn smoothness_certificate(sys: &CoxeterSystem, t: &DLTuple) -> Result<SmoothnessVerdict> {
    let mut factors: Vec<FactorEvidence> = t
        .elements()
        .iter()
        .map(|x| FactorEvidence {
            word: sys.canonical_reduced_word(x),
            dihedral_parabolic: dihedral_longest_support(sys, x),
            poincare: None,
            palindromic: None,
        })
        .collect();
    if factors.iter().all(|f| f.dihedral_parabolic.is_some()) {
        return Ok(SmoothnessVerdict {
            kind: SmoothnessKind::SmoothByDihedralLongest,
            factors,
            failing: Vec::new(),
            caveat: None,
        });
    }
    let mut failing = Vec::new();
    for (i, (x, f)) in t.elements().iter().zip(factors.iter_mut()).enumerate() {
        let poly = sys.poincare_polynomial(x)?;
        let palindromic = poly.is_palindromic();
        if !palindromic {
            failing.push(i);
        }
        f.poincare = Some(poly);
        f.palindromic = Some(palindromic);
    }
    let kind = if failing.is_empty() {
        SmoothnessKind::RationallySmoothAllFactors
    } else {
        SmoothnessKind::Unknown
    };
    Ok(SmoothnessVerdict {
        kind,
        caveat: (kind == SmoothnessKind::RationallySmoothAllFactors).then(|| SIMPLY_LACED_CAVEAT.to_string()),
        factors,
        failing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twist::registry_twist;

    fn el(tw: &Twist, w: &str) -> WeylElement {
        tw.system().element_from_word(&w.parse().unwrap()).unwrap()
    }

    fn word_tuple(tw: &Twist, w: &str) -> DLTuple {
        DLTuple::from_word(tw.system(), &w.parse().unwrap()).unwrap()
    }

    fn show(blocks: &[GeneratorSubset]) -> Vec<String> {
        blocks.iter().map(|b| b.to_string()).collect()
    }

    #[test]
    fn support_examples() {
        let t = registry_twist("2A3").unwrap();
        assert_eq!(show(&f_support(&t, &word_tuple(&t, "1"))), vec!["{s1, s3}"]);
        let a2 = registry_twist("A2").unwrap();
        assert_eq!(show(&f_support(&a2, &word_tuple(&a2, "1"))), vec!["{s1}"]);
        let f = registry_twist("2A2").unwrap();
        let w0 = DLTuple::new(vec![f.system().longest_element()]);
        assert_eq!(show(&f_support(&f, &w0)), vec!["{s1, s2}"]);
        // a word's support is its letters even when alpha(w) = e
        assert_eq!(f_support_of_word(&a2, &"1 1".parse().unwrap()).unwrap().len(), 1);
    }

    #[test]
    fn coxeter_element_examples() {
        let a2 = registry_twist("A2").unwrap();
        assert!(is_coxeter_element(&a2, &el(&a2, "1 2")));
        assert!(!is_coxeter_element(&a2, &a2.system().longest_element()));
        assert!(!is_coxeter_element(&a2, &el(&a2, "1")));
        let f = registry_twist("2A2").unwrap();
        assert!(is_coxeter_element(&f, &el(&f, "1")));
        assert!(!is_coxeter_element(&f, &el(&f, "1 2")));
    }

    #[test]
    fn irreducibility_examples() {
        let f = registry_twist("2A2").unwrap();
        assert!(is_irreducible_dl(&f, &word_tuple(&f, "1")));
        let a2 = registry_twist("A2").unwrap();
        assert!(!is_irreducible_dl(&a2, &word_tuple(&a2, "1")));
        let a3 = registry_twist("A3").unwrap();
        assert!(is_irreducible_dl(&a3, &word_tuple(&a3, "1 2 3")));
    }

    #[test]
    fn component_count_examples() {
        let a2 = registry_twist("A2").unwrap();
        assert_eq!(component_count(&a2, &word_tuple(&a2, "1")).unwrap().to_string(), "1 + q + q^2");
        let full = component_count(&a2, &DLTuple::default()).unwrap();
        assert_eq!(full.to_string(), "1 + 2*q + 2*q^2 + q^3");
        assert_eq!(full.evaluate(2).unwrap(), 21);
        let sz = registry_twist("2B2").unwrap();
        assert_eq!(component_count(&sz, &DLTuple::default()).unwrap().to_string(), "1 + q^4");
        let f = registry_twist("2A2").unwrap();
        assert_eq!(component_count(&f, &DLTuple::default()).unwrap().to_string(), "1 + q^3");
        assert_eq!(component_count(&f, &word_tuple(&f, "2")).unwrap(), QPolynomial::one());
    }

    #[test]
    fn dimension_and_strata_examples() {
        let a2 = registry_twist("A2").unwrap();
        let sys = a2.system();
        assert_eq!(dl_dimension(sys, &DLTuple::default()), 0);
        let t = DLTuple::new(vec![el(&a2, "1"), el(&a2, "2 1")]);
        assert_eq!(dl_dimension(sys, &t), 3);
        let w0 = DLTuple::new(vec![sys.longest_element()]);
        assert_eq!(dl_dimension(sys, &w0), 3);
        assert_eq!(strata_count(sys, &w0).unwrap(), 6);
        assert_eq!(strata_count(sys, &word_tuple(&a2, "1 2")).unwrap(), 4);
        assert_eq!(strata_count(sys, &DLTuple::default()).unwrap(), 1);
    }

    #[test]
    fn smoothness_examples() {
        let a2 = registry_twist("A2").unwrap();
        assert!(is_rationally_smooth(a2.system(), &a2.system().longest_element()).unwrap());
        assert!(is_rationally_smooth(a2.system(), &a2.system().identity()).unwrap());
        let a3 = registry_twist("A3").unwrap();
        let bad = el(&a3, "2 1 3 2");
        assert_eq!(a3.system().canonical_reduced_word(&bad).to_string(), "2 1 3 2");
        assert!(!is_rationally_smooth(a3.system(), &bad).unwrap());

        let b2 = registry_twist("B2").unwrap();
        let v = smoothness_certificate(b2.system(), &DLTuple::new(vec![el(&b2, "1 2 1 2")])).unwrap();
        assert_eq!(v.kind, SmoothnessKind::SmoothByDihedralLongest);
        let v = smoothness_certificate(a3.system(), &DLTuple::new(vec![bad])).unwrap();
        assert_eq!(v.kind, SmoothnessKind::Unknown);
        assert_eq!(v.failing, vec![0]);
        let v = smoothness_certificate(a2.system(), &word_tuple(&a2, "1 2")).unwrap();
        assert_eq!(v.kind, SmoothnessKind::SmoothByDihedralLongest);
        let v = smoothness_certificate(a3.system(), &DLTuple::new(vec![el(&a3, "1 2 3")])).unwrap();
        assert_eq!(v.kind, SmoothnessKind::RationallySmoothAllFactors);
        assert!(v.caveat.is_some());
    }
}
