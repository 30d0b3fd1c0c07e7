use std::collections::{HashSet, VecDeque};
use std::fmt;

use super::cartan::{parse_descriptor, TypeFactor};
use super::subset::GeneratorSubset;
use crate::error::{Error, Result};
use crate::poly::QPolynomial;
use crate::word::Word;

/// Default bound on `|W|` for any system built without an explicit limit.
pub const DEFAULT_MAX_ORDER: u64 = 1_000_000;

/// A root written in the basis of simple roots.
pub type Root = Vec<i32>;

/// A Weyl group element, stored as the images of the simple roots under its
/// action on the root lattice (column `j` is `x(alpha_j)`).
///
/// Two elements are equal exactly when these images agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    rank: usize,
    cols: Vec<i32>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut cols = vec![0; rank * rank];
        for i in 0..rank {
            cols[i * rank + i] = 1;
        }
        WeylElement { rank, cols }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_identity(&self) -> bool {
        (0..self.rank).all(|j| (0..self.rank).all(|i| self.cols[j * self.rank + i] == (i == j) as i32))
    }

    /// `x(alpha_j)`.
    pub fn simple_root_image(&self, j: usize) -> &[i32] {
        &self.cols[j * self.rank..(j + 1) * self.rank]
    }

    /// Images of all simple roots, the canonical form of the element.
    pub fn canonical_form(&self) -> Vec<Root> {
        (0..self.rank).map(|j| self.simple_root_image(j).to_vec()).collect()
    }

    pub fn apply(&self, v: &[i32]) -> Root {
        let n = self.rank;
        let mut out = vec![0; n];
        for (j, &c) in v.iter().enumerate() {
            if c != 0 {
                for (o, &x) in out.iter_mut().zip(&self.cols[j * n..(j + 1) * n]) {
                    *o += c * x;
                }
            }
        }
        out
    }

    fn sends_simple_root_negative(&self, s: usize) -> bool {
        is_negative(self.simple_root_image(s))
    }
}

fn is_negative(v: &[i32]) -> bool {
    v.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0)
}

/// A finite crystallographic Coxeter system `(W, S)` with its root data.
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    descriptor: String,
    factors: Vec<TypeFactor>,
    rank: usize,
    cartan: Vec<Vec<i32>>,
    coxeter: Vec<Vec<u8>>,
    positive_roots: Vec<Root>,
    order: u64,
    max_order: u64,
}

impl CoxeterSystem {
    /// Builds an untwisted system from a descriptor such as `"A3"` or
    /// `"B2xG2"`, refusing groups larger than [`DEFAULT_MAX_ORDER`].
    pub fn build(descriptor: &str) -> Result<Self> {
        Self::build_with_limit(descriptor, DEFAULT_MAX_ORDER)
    }

    pub fn build_with_limit(descriptor: &str, max_order: u64) -> Result<Self> {
        let factors = parse_descriptor(descriptor)?;
        if let Some(f) = factors.iter().find(|f| f.twist_order.is_some()) {
            return Err(Error::UnknownType(format!(
                "{f} (twisted descriptors go through the twist registry)"
            )));
        }
        Self::from_factors(&factors, max_order)
    }

    pub(crate) fn from_factors(factors: &[TypeFactor], max_order: u64) -> Result<Self> {
        let order = factors
            .iter()
            .try_fold(1u64, |acc, f| f.group_order().and_then(|o| acc.checked_mul(o)))
            .unwrap_or(u64::MAX);
        if order > max_order {
            return Err(Error::GuardExceeded {
                order,
                limit: max_order,
            });
        }
        let rank: usize = factors.iter().map(|f| f.rank).sum();
        let mut cartan = vec![vec![0; rank]; rank];
        let mut offset = 0;
        for f in factors {
            for (i, row) in f.cartan_matrix().into_iter().enumerate() {
                cartan[offset + i][offset..offset + f.rank].copy_from_slice(&row);
            }
            offset += f.rank;
        }
        let coxeter = coxeter_from_cartan(&cartan);
        let positive_roots = enumerate_positive_roots(&cartan);
        let descriptor = factors.iter().map(|f| f.untwisted().to_string()).collect::<Vec<_>>().join("x");
        let expected: usize = factors.iter().map(TypeFactor::positive_root_count).sum();
        debug_assert_eq!(positive_roots.len(), expected);
        Ok(CoxeterSystem {
            descriptor,
            factors: factors.iter().map(|f| f.untwisted()).collect(),
            rank,
            cartan,
            coxeter,
            positive_roots,
            order,
            max_order,
        })
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn factors(&self) -> &[TypeFactor] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u8>] {
        &self.coxeter
    }

    /// `m_{st}`.
    pub fn m(&self, s: usize, t: usize) -> u8 {
        self.coxeter[s][t]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// `|W|`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn max_order(&self) -> u64 {
        self.max_order
    }

    /// Fails when enumerating `count` elements would exceed the size guard.
    pub fn check_guard(&self, count: u64) -> Result<()> {
        if count > self.max_order {
            Err(Error::GuardExceeded {
                order: count,
                limit: self.max_order,
            })
        } else {
            Ok(())
        }
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank)
    }

    pub fn generator(&self, s: usize) -> WeylElement {
        self.left_mul_gen(s, &self.identity())
    }

    /// `s * x`.
    pub fn left_mul_gen(&self, s: usize, x: &WeylElement) -> WeylElement {
        let n = self.rank;
        let a = &self.cartan[s];
        let mut out = x.clone();
        for col in out.cols.chunks_mut(n) {
            let pairing: i32 = a.iter().zip(col.iter()).map(|(a, c)| a * c).sum();
            col[s] -= pairing;
        }
        out
    }

    /// `x * s`.
    pub fn right_mul_gen(&self, x: &WeylElement, s: usize) -> WeylElement {
        let n = self.rank;
        let col_s: Vec<i32> = x.simple_root_image(s).to_vec();
        let mut out = x.clone();
        for (k, col) in out.cols.chunks_mut(n).enumerate() {
            let a = self.cartan[s][k];
            if a != 0 {
                for (c, cs) in col.iter_mut().zip(&col_s) {
                    *c -= a * cs;
                }
            }
        }
        out
    }

    pub fn mul(&self, x: &WeylElement, y: &WeylElement) -> WeylElement {
        let n = self.rank;
        let mut cols = Vec::with_capacity(n * n);
        for j in 0..n {
            cols.extend(x.apply(y.simple_root_image(j)));
        }
        WeylElement { rank: n, cols }
    }

    /// The projection `alpha: S* -> W`.
    pub fn element_from_word(&self, w: &Word) -> Result<WeylElement> {
        w.validate(self.rank)?;
        Ok(self.element_from_letters(w.letters()))
    }

    pub(crate) fn element_from_letters(&self, letters: &[usize]) -> WeylElement {
        letters
            .iter()
            .fold(self.identity(), |x, &s| self.right_mul_gen(&x, s))
    }

    pub fn inverse(&self, x: &WeylElement) -> WeylElement {
        let mut y = x.clone();
        let mut inv = self.identity();
        while let Some(s) = (0..self.rank).find(|&s| y.sends_simple_root_negative(s)) {
            y = self.right_mul_gen(&y, s);
            inv = self.right_mul_gen(&inv, s);
        }
        inv
    }

    /// Bruhat length: the number of positive roots sent to negative roots.
    pub fn length(&self, x: &WeylElement) -> usize {
        self.positive_roots.iter().filter(|r| is_negative(&x.apply(r))).count()
    }

    /// `{s : l(x s) < l(x)}`.
    pub fn right_descents(&self, x: &WeylElement) -> GeneratorSubset {
        (0..self.rank).filter(|&s| x.sends_simple_root_negative(s)).collect()
    }

    /// `{s : l(s x) < l(x)}`, read off as the simple roots `alpha_s` with
    /// `-alpha_s` in `x(Phi+)`.
    pub fn left_descents(&self, x: &WeylElement) -> GeneratorSubset {
        let mut set = GeneratorSubset::EMPTY;
        for r in &self.positive_roots {
            let image = x.apply(r);
            let mut nonzero = image.iter().enumerate().filter(|(_, &c)| c != 0);
            if let (Some((s, &-1)), None) = (nonzero.next(), nonzero.next()) {
                set.insert(s);
            }
        }
        set
    }

    pub fn is_left_descent(&self, s: usize, x: &WeylElement) -> bool {
        self.inverse(x).sends_simple_root_negative(s)
    }

    pub fn is_right_descent(&self, x: &WeylElement, s: usize) -> bool {
        x.sends_simple_root_negative(s)
    }

    /// The lexicographically smallest reduced word of `x`, obtained by
    /// repeatedly stripping the smallest left descent.
    pub fn canonical_reduced_word(&self, x: &WeylElement) -> Word {
        // left descents of x are right descents of x^{-1}
        let mut y = self.inverse(x);
        let mut letters = Vec::new();
        while let Some(s) = (0..self.rank).find(|&s| y.sends_simple_root_negative(s)) {
            letters.push(s);
            y = self.right_mul_gen(&y, s);
        }
        Word::new(letters)
    }

    /// The generators occurring in any reduced word of `x`, i.e. `{s : s <= x}`.
    pub fn support(&self, x: &WeylElement) -> GeneratorSubset {
        self.canonical_reduced_word(x).letters().iter().copied().collect()
    }

    /// All elements of `W`, ordered by length and then by canonical form.
    pub fn elements(&self) -> Result<Vec<WeylElement>> {
        self.check_guard(self.order)?;
        let mut seen: HashSet<WeylElement> = HashSet::new();
        let mut layer = vec![self.identity()];
        seen.insert(self.identity());
        let mut all = Vec::with_capacity(self.order as usize);
        while !layer.is_empty() {
            layer.sort();
            let mut next = Vec::new();
            for x in &layer {
                for s in 0..self.rank {
                    if !x.sends_simple_root_negative(s) {
                        let y = self.right_mul_gen(x, s);
                        if seen.insert(y.clone()) {
                            next.push(y);
                        }
                    }
                }
            }
            all.append(&mut layer);
            layer = next;
        }
        debug_assert_eq!(all.len() as u64, self.order);
        Ok(all)
    }

    pub fn longest_element(&self) -> WeylElement {
        self.parabolic_longest(GeneratorSubset::full(self.rank))
    }

    /// The longest element of the standard parabolic subgroup `W_J`.
    pub fn parabolic_longest(&self, j: GeneratorSubset) -> WeylElement {
        let mut x = self.identity();
        while let Some(s) = j.iter().take_while(|&s| s < self.rank).find(|&s| !x.sends_simple_root_negative(s)) {
            x = self.right_mul_gen(&x, s);
        }
        x
    }

    /// Bruhat order `v <= w`, decided by descending along right descents of
    /// `w` (the lifting property).
    pub fn bruhat_leq(&self, v: &WeylElement, w: &WeylElement) -> bool {
        let (mut v, mut w) = (v.clone(), w.clone());
        loop {
            if v.is_identity() {
                return true;
            }
            let Some(s) = (0..self.rank).find(|&s| w.sends_simple_root_negative(s)) else {
                return false;
            };
            if v.sends_simple_root_negative(s) {
                v = self.right_mul_gen(&v, s);
            }
            w = self.right_mul_gen(&w, s);
        }
    }

    /// The lower Bruhat interval `[e, w]`, sorted.
    pub fn lower_interval(&self, w: &WeylElement) -> Result<Vec<WeylElement>> {
        let mut interval: HashSet<WeylElement> = HashSet::from([self.identity()]);
        for &s in self.canonical_reduced_word(w).letters() {
            let shifted: Vec<_> = interval.iter().map(|v| self.right_mul_gen(v, s)).collect();
            interval.extend(shifted);
            self.check_guard(interval.len() as u64)?;
        }
        let mut out: Vec<_> = interval.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// `sum_{v <= w} q^{l(v)}`.
    pub fn poincare_polynomial(&self, w: &WeylElement) -> Result<QPolynomial> {
        let mut poly = QPolynomial::zero();
        for v in self.lower_interval(w)? {
            poly.add_monomial(self.length(&v), 1);
        }
        Ok(poly)
    }

    /// Minimal length representatives `W^J` of the cosets `w W_J`.
    pub fn min_coset_reps(&self, j: GeneratorSubset) -> Result<Vec<WeylElement>> {
        Ok(self
            .elements()?
            .into_iter()
            .filter(|w| self.right_descents(w).bits() & j.bits() == 0)
            .collect())
    }

    /// Order of `W_J`, computed by enumeration inside the parabolic.
    pub fn parabolic_order(&self, j: GeneratorSubset) -> u64 {
        let mut seen = HashSet::from([self.identity()]);
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(x) = queue.pop_front() {
            for s in j.iter().take_while(|&s| s < self.rank) {
                let y = self.right_mul_gen(&x, s);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen.len() as u64
    }

    pub fn display_element(&self, x: &WeylElement) -> ElementDisplay<'_> {
        ElementDisplay { sys: self, x: x.clone() }
    }
}

/// Shows an element through its canonical reduced word, `e` for the identity.
pub struct ElementDisplay<'a> {
    sys: &'a CoxeterSystem,
    x: WeylElement,
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = self.sys.canonical_reduced_word(&self.x);
        if word.is_empty() {
            f.write_str("e")
        } else {
            write!(f, "[{word}]")
        }
    }
}

fn coxeter_from_cartan(cartan: &[Vec<i32>]) -> Vec<Vec<u8>> {
    let n = cartan.len();
    let mut m = vec![vec![1u8; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                m[i][j] = match cartan[i][j] * cartan[j][i] {
                    0 => 2,
                    1 => 3,
                    2 => 4,
                    3 => 6,
                    other => unreachable!("non-crystallographic bond {other}"),
                };
            }
        }
    }
    m
}

/// Positive roots as the orbit of the simple roots under the simple
/// reflections, sorted by height and then lexicographically.
fn enumerate_positive_roots(cartan: &[Vec<i32>]) -> Vec<Root> {
    let n = cartan.len();
    let simple: Vec<Root> = (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i32).collect())
        .collect();
    let mut seen: HashSet<Root> = simple.iter().cloned().collect();
    let mut queue: VecDeque<Root> = simple.into_iter().collect();
    while let Some(r) = queue.pop_front() {
        for (i, row) in cartan.iter().enumerate() {
            let pairing: i32 = row.iter().zip(&r).map(|(a, c)| a * c).sum();
            if pairing != 0 {
                let mut image = r.clone();
                image[i] -= pairing;
                if seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }
    }
    let mut positive: Vec<Root> = seen.into_iter().filter(|r| r.iter().all(|&c| c >= 0)).collect();
    positive.sort_by_key(|r| (r.iter().sum::<i32>(), r.clone()));
    positive
}
