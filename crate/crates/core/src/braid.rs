//! The positive braid monoid `B+`: reduced words, left-greedy normal forms,
//! braid moves and Matsumoto paths between reduced words.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxeterSystem, WeylElement};
use crate::error::{Error, Result};
use crate::word::Word;

/// Default number of visited words in [`matsumoto_path`].
pub const DEFAULT_BUDGET: usize = 100_000;

/// `l*(w) == l(alpha(w))`.
pub fn is_reduced(sys: &CoxeterSystem, w: &Word) -> Result<bool> {
    let x = sys.element_from_word(w)?;
    Ok(sys.length(&x) == w.len())
}

/// Replaces the alternating word `P(first, second)` of length
/// `m(first, second)` starting at `position` by `P(second, first)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BraidMove {
    pub position: usize,
    pub first: usize,
    pub second: usize,
}

impl BraidMove {
    /// Applies the move, checking that the letters spell `P(first, second)`.
    pub fn apply(&self, sys: &CoxeterSystem, w: &Word) -> Result<Word> {
        let (s, t) = (self.first, self.second);
        let invalid = || Error::Precondition(format!("{self} does not apply to `{w}`"));
        if s == t || s >= sys.rank() || t >= sys.rank() {
            return Err(invalid());
        }
        let m = sys.m(s, t) as usize;
        let letters = w.letters();
        let end = self.position.checked_add(m).filter(|&e| e <= letters.len()).ok_or_else(invalid)?;
        if !alternates(&letters[self.position..end], s, t) {
            return Err(invalid());
        }
        let mut out = letters.to_vec();
        for (k, slot) in out[self.position..end].iter_mut().enumerate() {
            *slot = if k % 2 == 0 { t } else { s };
        }
        Ok(Word::new(out))
    }
}

impl fmt::Display for BraidMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({},{})->P({},{})@{}", self.first + 1, self.second + 1, self.second + 1, self.first + 1, self.position + 1)
    }
}

fn alternates(seg: &[usize], s: usize, t: usize) -> bool {
    seg.iter().enumerate().all(|(k, &c)| c == if k % 2 == 0 { s } else { t })
}

/// Replays a move chain.
pub fn replay(sys: &CoxeterSystem, w: &Word, moves: &[BraidMove]) -> Result<Word> {
    moves.iter().try_fold(w.clone(), |acc, mv| mv.apply(sys, &acc))
}

/// All words one braid move away from `letters`, with the move, sorted by
/// resulting word.
pub fn braid_neighbors(sys: &CoxeterSystem, letters: &[usize]) -> Vec<(Vec<usize>, BraidMove)> {
    let mut out = Vec::new();
    for p in 0..letters.len().saturating_sub(1) {
        let (s, t) = (letters[p], letters[p + 1]);
        if s == t {
            continue;
        }
        let m = sys.m(s, t) as usize;
        if p + m <= letters.len() && alternates(&letters[p..p + m], s, t) {
            let mut next = letters.to_vec();
            for (k, slot) in next[p..p + m].iter_mut().enumerate() {
                *slot = if k % 2 == 0 { t } else { s };
            }
            out.push((next, BraidMove { position: p, first: s, second: t }));
        }
    }
    out.sort();
    out
}

/// A positive braid in left-greedy normal form: a product of simple
/// elements (reduced positive braids, identified with Weyl elements) in
/// which every left descent of a factor is a right descent of its
/// predecessor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidNormalForm {
    factors: Vec<WeylElement>,
}

impl BraidNormalForm {
    pub fn factors(&self) -> &[WeylElement] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total number of letters, `sum l(factor)`.
    pub fn letter_count(&self, sys: &CoxeterSystem) -> usize {
        self.factors.iter().map(|f| sys.length(f)).sum()
    }

    /// Concatenation of the canonical reduced words of the factors.
    pub fn to_word(&self, sys: &CoxeterSystem) -> Word {
        self.factors
            .iter()
            .fold(Word::empty(), |acc, f| acc.concat(&sys.canonical_reduced_word(f)))
    }

    pub fn factor_words(&self, sys: &CoxeterSystem) -> Vec<Word> {
        self.factors.iter().map(|f| sys.canonical_reduced_word(f)).collect()
    }

    /// Checks the left-greedy condition at every junction.
    pub fn is_left_greedy(&self, sys: &CoxeterSystem) -> bool {
        self.factors.iter().all(|f| !f.is_identity())
            && self
                .factors
                .windows(2)
                .all(|p| sys.left_descents(&p[1]).is_subset(sys.right_descents(&p[0])))
    }
}

/// Moves letters from `b` into `a` until `L(b) ⊆ R(a)`; returns whether
/// anything moved.
fn make_left_weighted(sys: &CoxeterSystem, a: &mut WeylElement, b: &mut WeylElement) -> bool {
    let mut changed = false;
    loop {
        let free = sys.left_descents(b).bits() & !sys.right_descents(a).bits();
        if free == 0 {
            return changed;
        }
        let t = free.trailing_zeros() as usize;
        *a = sys.right_mul_gen(a, t);
        *b = sys.left_mul_gen(t, b);
        changed = true;
    }
}

/// The left-greedy normal form of `beta(w)`.
pub fn greedy_normal_form(sys: &CoxeterSystem, w: &Word) -> Result<BraidNormalForm> {
    w.validate(sys.rank())?;
    let mut factors: Vec<WeylElement> = Vec::new();
    for &s in w.letters() {
        factors.push(sys.generator(s));
        loop {
            let mut changed = false;
            for i in (1..factors.len()).rev() {
                let (head, tail) = factors.split_at_mut(i);
                changed |= make_left_weighted(sys, &mut head[i - 1], &mut tail[0]);
            }
            let before = factors.len();
            factors.retain(|f| !f.is_identity());
            if !changed && factors.len() == before {
                break;
            }
        }
    }
    Ok(BraidNormalForm { factors })
}

/// `beta(w) == beta(v)`.
pub fn braid_equal(sys: &CoxeterSystem, w: &Word, v: &Word) -> Result<bool> {
    if w.len() != v.len() {
        w.validate(sys.rank())?;
        v.validate(sys.rank())?;
        return Ok(false);
    }
    Ok(greedy_normal_form(sys, w)? == greedy_normal_form(sys, v)?)
}

fn check_same_reduced(sys: &CoxeterSystem, w: &Word, v: &Word) -> Result<()> {
    let x = sys.element_from_word(w)?;
    let y = sys.element_from_word(v)?;
    if sys.length(&x) != w.len() || sys.length(&y) != v.len() {
        return Err(Error::Precondition("both words must be reduced".into()));
    }
    if x != y {
        return Err(Error::Precondition(format!("`{w}` and `{v}` represent different elements")));
    }
    Ok(())
}

/// A shortest chain of braid moves from `w` to `v`, found by breadth-first
/// search over reduced words (neighbours visited in lexicographic order).
/// `Ok(None)` means more than `budget` words were visited.
pub fn matsumoto_path(sys: &CoxeterSystem, w: &Word, v: &Word, budget: usize) -> Result<Option<Vec<BraidMove>>> {
    check_same_reduced(sys, w, v)?;
    let start = w.letters().to_vec();
    let goal = v.letters().to_vec();
    let mut parent: HashMap<Vec<usize>, Option<(Vec<usize>, BraidMove)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        if u == goal {
            let mut moves = Vec::new();
            let mut cur = u;
            while let Some(Some((prev, mv))) = parent.get(&cur) {
                moves.push(*mv);
                cur = prev.clone();
            }
            moves.reverse();
            return Ok(Some(moves));
        }
        for (next, mv) in braid_neighbors(sys, &u) {
            if !parent.contains_key(&next) {
                if parent.len() >= budget {
                    return Ok(None);
                }
                parent.insert(next.clone(), Some((u.clone(), mv)));
                queue.push_back(next);
            }
        }
    }
    unreachable!("reduced words of one element are braid-connected")
}

/// A braid-move chain from `w` to `v` built by the inductive proof of
/// Matsumoto's theorem: equal first letters recurse on the tails, distinct
/// first letters `a, b` route through `P(a,b) y` and `P(b,a) y`. Not
/// shortest, but never searches.
pub fn matsumoto_path_constructive(sys: &CoxeterSystem, w: &Word, v: &Word) -> Result<Vec<BraidMove>> {
    check_same_reduced(sys, w, v)?;
    let mut moves = Vec::new();
    connect(sys, w.letters(), v.letters(), 0, &mut moves);
    Ok(moves)
}

fn connect(sys: &CoxeterSystem, u: &[usize], v: &[usize], offset: usize, moves: &mut Vec<BraidMove>) {
    let mut k = 0;
    while k < u.len() && u[k] == v[k] {
        k += 1;
    }
    if k == u.len() {
        return;
    }
    let (u, v, offset) = (&u[k..], &v[k..], offset + k);
    let (a, b) = (u[0], v[0]);
    let m = sys.m(a, b) as usize;
    let alternating = |first: usize, second: usize| -> Vec<usize> {
        (0..m).map(|i| if i % 2 == 0 { first } else { second }).collect()
    };
    let mut y = sys.element_from_letters(u);
    for &s in &alternating(a, b) {
        y = sys.left_mul_gen(s, &y);
    }
    let tail = sys.canonical_reduced_word(&y);
    let through_a: Vec<usize> = alternating(a, b).into_iter().chain(tail.letters().iter().copied()).collect();
    let through_b: Vec<usize> = alternating(b, a).into_iter().chain(tail.letters().iter().copied()).collect();
    connect(sys, &u[1..], &through_a[1..], offset + 1, moves);
    moves.push(BraidMove {
        position: offset,
        first: a,
        second: b,
    });
    connect(sys, &through_b[1..], &v[1..], offset + 1, moves);
}

/// A braid-equivalent word exposing an adjacent square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExposedSquare {
    pub word: Word,
    pub moves: Vec<BraidMove>,
    /// 0-based index `i` with `word[i] == word[i + 1]`.
    pub position: usize,
}

/// Scans `w` left to right keeping a reduced prefix; at the first letter `s`
/// that shortens the prefix, rewrites the prefix into a reduced word ending
/// in `s`. Returns `None` exactly when `w` is reduced.
pub fn expose_square(sys: &CoxeterSystem, w: &Word) -> Result<Option<ExposedSquare>> {
    w.validate(sys.rank())?;
    let letters = w.letters();
    let mut x = sys.identity();
    for (i, &s) in letters.iter().enumerate() {
        if sys.is_right_descent(&x, s) {
            let prefix = Word::new(letters[..i].to_vec());
            let mut target = sys.canonical_reduced_word(&sys.right_mul_gen(&x, s));
            target.push(s);
            let moves = match matsumoto_path(sys, &prefix, &target, DEFAULT_BUDGET)? {
                Some(moves) => moves,
                None => matsumoto_path_constructive(sys, &prefix, &target)?,
            };
            let word = Word::new(target.letters().iter().chain(&letters[i..]).copied().collect());
            return Ok(Some(ExposedSquare {
                word,
                moves,
                position: i - 1,
            }));
        }
        x = sys.right_mul_gen(&x, s);
    }
    Ok(None)
}
