//! Reduction of an arbitrary word over `S` to a reduced word of a minimal
//! length element of some `F`-conjugacy class, recorded as a replayable
//! trace of moves, plus an independent verifier for such traces.
//!
//! The engine alternates two phases until it stops:
//!
//! 1. while the word is not reduced, rewrite it by braid moves until an
//!    adjacent square `ss` appears and delete the left letter of the square;
//! 2. once reduced, stop if `alpha(word)` is minimal in its `F`-class;
//!    otherwise take the first generator `s` of a shortest cyclic-shift
//!    descent path, rewrite the word to begin with `s` (or end with `F(s)`)
//!    and shift it around.
//!
//! Each move kind preserves the cohomology it is tagged with, so the
//! resulting class may differ from the class of `alpha(input)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{braid_equal, expose_square};
use crate::coxeter::WeylElement;
use crate::error::{Error, Result};
use crate::fconj::{descent_step, f_conjugacy_class};
use crate::twist::Twist;
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionMove {
    /// Replace the word by another lift of the same positive braid.
    BraidRewrite { before: Word, after: Word },
    /// Delete the left letter of the square at `position` (0-based).
    SquareContraction { word: Word, position: usize },
    /// `s v -> v F(s)`.
    CyclicShiftLeft { generator: usize },
    /// `v F(s) -> s v`.
    CyclicShiftRight { generator: usize },
}

impl ReductionMove {
    /// Name of the invariance result licensing the move.
    pub fn tag(&self) -> &'static str {
        match self {
            ReductionMove::BraidRewrite { .. } => "braid-invariance",
            ReductionMove::SquareContraction { .. } => "square-contraction",
            ReductionMove::CyclicShiftLeft { .. } | ReductionMove::CyclicShiftRight { .. } => "cyclic-shift",
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ReductionMove::BraidRewrite { .. } => "braid_rewrite",
            ReductionMove::SquareContraction { .. } => "square_contraction",
            ReductionMove::CyclicShiftLeft { .. } => "cyclic_shift_left",
            ReductionMove::CyclicShiftRight { .. } => "cyclic_shift_right",
        }
    }

    /// Applies the move to `current`, checking its local invariant.
    pub fn apply(&self, tw: &Twist, current: &Word) -> std::result::Result<Word, String> {
        let sys = tw.system();
        match self {
            ReductionMove::BraidRewrite { before, after } => {
                if before != current {
                    return Err(format!("rewrite starts from `{before}`, current word is `{current}`"));
                }
                match braid_equal(sys, before, after) {
                    Ok(true) => Ok(after.clone()),
                    Ok(false) => Err(format!("`{before}` and `{after}` are not braid-equivalent")),
                    Err(e) => Err(e.to_string()),
                }
            }
            ReductionMove::SquareContraction { word, position } => {
                if word != current {
                    return Err(format!("contraction names `{word}`, current word is `{current}`"));
                }
                let l = word.letters();
                if *position + 1 >= l.len() || l[*position] != l[*position + 1] {
                    return Err(format!("no square at position {} of `{word}`", position + 1));
                }
                Ok(word.without(*position))
            }
            ReductionMove::CyclicShiftLeft { generator } => {
                let s = *generator;
                if s >= sys.rank() || current.first() != Some(s) {
                    return Err(format!("`{current}` does not start with {}", s + 1));
                }
                let mut letters = current.letters()[1..].to_vec();
                letters.push(tw.image(s));
                Ok(Word::new(letters))
            }
            ReductionMove::CyclicShiftRight { generator } => {
                let s = *generator;
                if s >= sys.rank() {
                    return Err(format!("generator {} out of range", s + 1));
                }
                if current.last() != Some(tw.image(s)) {
                    return Err(format!("`{current}` does not end with F({}) = {}", s + 1, tw.image(s) + 1));
                }
                let l = current.letters();
                let letters = std::iter::once(s).chain(l[..l.len() - 1].iter().copied()).collect();
                Ok(Word::new(letters))
            }
        }
    }
}

/// Summary of the `F`-class containing the final element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassSummary {
    pub min_length: usize,
    pub size: usize,
    pub elliptic: bool,
    /// Whether `alpha(input)` lies in this class.
    pub contains_input: bool,
    pub representative: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    pub input: Word,
    pub final_word: Word,
    pub final_element: WeylElement,
    pub class: ClassSummary,
    pub trace: Vec<ReductionMove>,
}

impl ReductionResult {
    /// Word after each move, starting with the input.
    pub fn words(&self, tw: &Twist) -> std::result::Result<Vec<Word>, TraceViolation> {
        let mut words = vec![self.input.clone()];
        for (i, mv) in self.trace.iter().enumerate() {
            let next = mv.apply(tw, words.last().expect("nonempty")).map_err(|reason| TraceViolation {
                move_index: Some(i),
                reason,
            })?;
            words.push(next);
        }
        Ok(words)
    }
}

fn summarize(tw: &Twist, input: &Word, x0: &WeylElement) -> Result<ClassSummary> {
    let class = f_conjugacy_class(tw, x0)?;
    let alpha_input = tw.system().element_from_word(input)?;
    Ok(ClassSummary {
        min_length: class.min_length(),
        size: class.len(),
        elliptic: class.is_elliptic(),
        contains_input: class.contains(&alpha_input),
        representative: class.representative_word().clone(),
    })
}

/// Runs the reduction engine on `w`. Every choice is made lexicographically,
/// so identical inputs give identical traces.
pub fn reduce_word(tw: &Twist, w: &Word) -> Result<ReductionResult> {
    let sys = tw.system();
    w.validate(sys.rank())?;
    sys.check_guard(sys.order())?;
    let mut word = w.clone();
    let mut trace = Vec::new();
    loop {
        if let Some(sq) = expose_square(sys, &word)? {
            if sq.word != word {
                trace.push(ReductionMove::BraidRewrite {
                    before: word,
                    after: sq.word.clone(),
                });
            }
            word = sq.word.without(sq.position);
            trace.push(ReductionMove::SquareContraction {
                word: sq.word,
                position: sq.position,
            });
            continue;
        }
        let x = sys.element_from_word(&word)?;
        let Some(path) = descent_step(tw, &x) else {
            break;
        };
        let s = path.steps[0].generator;
        let (target, shift) = if sys.is_left_descent(s, &x) {
            let rest = sys.canonical_reduced_word(&sys.left_mul_gen(s, &x));
            (Word::new(vec![s]).concat(&rest), ReductionMove::CyclicShiftLeft { generator: s })
        } else {
            let fs = tw.image(s);
            debug_assert!(sys.is_right_descent(&x, fs));
            let mut head = sys.canonical_reduced_word(&sys.right_mul_gen(&x, fs));
            head.push(fs);
            (head, ReductionMove::CyclicShiftRight { generator: s })
        };
        if target != word {
            trace.push(ReductionMove::BraidRewrite {
                before: word,
                after: target.clone(),
            });
        }
        word = shift.apply(tw, &target).map_err(Error::Precondition)?;
        trace.push(shift);
    }
    let final_element = sys.element_from_word(&word)?;
    Ok(ReductionResult {
        input: w.clone(),
        class: summarize(tw, w, &final_element)?,
        final_word: word,
        final_element,
        trace,
    })
}

/// The first problem found while checking a trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceViolation {
    /// 0-based index of the offending move, `None` for end-state checks.
    pub move_index: Option<usize>,
    pub reason: String,
}

impl fmt::Display for TraceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.move_index {
            Some(i) => write!(f, "move {}: {}", i + 1, self.reason),
            None => f.write_str(&self.reason),
        }
    }
}

impl std::error::Error for TraceViolation {}

/// Replays the trace from `input` checking every move's local invariant,
/// then checks that the final word is reduced, represents the claimed
/// element, and that this element is minimal in its (recomputed) class.
pub fn verify_trace(tw: &Twist, input: &Word, result: &ReductionResult) -> std::result::Result<(), TraceViolation> {
    let sys = tw.system();
    let end = |reason: String| TraceViolation {
        move_index: None,
        reason,
    };
    if &result.input != input {
        return Err(end(format!("result is for `{}`, not `{input}`", result.input)));
    }
    input.validate(sys.rank()).map_err(|e| end(e.to_string()))?;
    let words = result.words(tw)?;
    let last = words.last().expect("nonempty");
    if last != &result.final_word {
        return Err(end(format!("replay ends at `{last}`, result claims `{}`", result.final_word)));
    }
    let x = sys.element_from_word(last).map_err(|e| end(e.to_string()))?;
    if sys.length(&x) != last.len() {
        return Err(end(format!("final word `{last}` is not reduced")));
    }
    if x != result.final_element {
        return Err(end("final element does not match the final word".into()));
    }
    let summary = summarize(tw, input, &x).map_err(|e| end(e.to_string()))?;
    if summary.min_length != last.len() {
        return Err(end(format!(
            "final element has length {} but its class has minimal length {}",
            last.len(),
            summary.min_length
        )));
    }
    if summary != result.class {
        return Err(end("class summary does not match the recomputed class".into()));
    }
    Ok(())
}

/// One trace entry on the wire. Generator labels and positions are 1-based;
/// `result` is the word after the move.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum MoveRecord {
    BraidRewrite {
        before: Word,
        after: Word,
        paper_tag: String,
    },
    SquareContraction {
        word: Word,
        position: usize,
        result: Word,
        paper_tag: String,
    },
    CyclicShiftLeft {
        generator: usize,
        image: usize,
        result: Word,
        paper_tag: String,
    },
    CyclicShiftRight {
        generator: usize,
        image: usize,
        result: Word,
        paper_tag: String,
    },
}

/// A reduction result on the wire.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReductionReport {
    pub input: Word,
    pub final_word: Word,
    /// Canonical reduced word of the final element.
    pub final_element: Word,
    pub final_length: usize,
    pub class: ClassSummary,
    pub trace: Vec<MoveRecord>,
}

impl ReductionResult {
    pub fn to_report(&self, tw: &Twist) -> ReductionReport {
        let sys = tw.system();
        let mut current = self.input.clone();
        let trace = self
            .trace
            .iter()
            .map(|mv| {
                let result = mv.apply(tw, &current).unwrap_or_else(|_| current.clone());
                let paper_tag = mv.tag().to_string();
                let record = match mv {
                    ReductionMove::BraidRewrite { before, after } => MoveRecord::BraidRewrite {
                        before: before.clone(),
                        after: after.clone(),
                        paper_tag,
                    },
                    ReductionMove::SquareContraction { word, position } => MoveRecord::SquareContraction {
                        word: word.clone(),
                        position: position + 1,
                        result: result.clone(),
                        paper_tag,
                    },
                    ReductionMove::CyclicShiftLeft { generator } => MoveRecord::CyclicShiftLeft {
                        generator: generator + 1,
                        image: tw.image(*generator) + 1,
                        result: result.clone(),
                        paper_tag,
                    },
                    ReductionMove::CyclicShiftRight { generator } => MoveRecord::CyclicShiftRight {
                        generator: generator + 1,
                        image: tw.image(*generator) + 1,
                        result: result.clone(),
                        paper_tag,
                    },
                };
                current = result;
                record
            })
            .collect();
        ReductionReport {
            input: self.input.clone(),
            final_word: self.final_word.clone(),
            final_element: sys.canonical_reduced_word(&self.final_element),
            final_length: sys.length(&self.final_element),
            class: self.class.clone(),
            trace,
        }
    }

    /// Decodes a report, checking the record-level redundancy (tags, twist
    /// images, intermediate words) on the way. Move-level invariants are
    /// left to [`verify_trace`].
    pub fn from_report(tw: &Twist, report: &ReductionReport) -> std::result::Result<Self, TraceViolation> {
        let sys = tw.system();
        let at = |i: usize, reason: String| TraceViolation {
            move_index: Some(i),
            reason,
        };
        let generator = |i: usize, label: usize, image: usize| -> std::result::Result<usize, TraceViolation> {
            let s = label.checked_sub(1).filter(|&s| s < sys.rank()).ok_or_else(|| at(i, format!("generator {label} out of range")))?;
            if tw.image(s) + 1 != image {
                return Err(at(i, format!("F({label}) is {}, record says {image}", tw.image(s) + 1)));
            }
            Ok(s)
        };
        let mut trace = Vec::with_capacity(report.trace.len());
        let mut current = report.input.clone();
        for (i, record) in report.trace.iter().enumerate() {
            let (mv, tag, claimed) = match record {
                MoveRecord::BraidRewrite { before, after, paper_tag } => (
                    ReductionMove::BraidRewrite {
                        before: before.clone(),
                        after: after.clone(),
                    },
                    paper_tag,
                    after,
                ),
                MoveRecord::SquareContraction {
                    word,
                    position,
                    result,
                    paper_tag,
                } => (
                    ReductionMove::SquareContraction {
                        word: word.clone(),
                        position: position.checked_sub(1).ok_or_else(|| at(i, "position 0".into()))?,
                    },
                    paper_tag,
                    result,
                ),
                MoveRecord::CyclicShiftLeft {
                    generator: g,
                    image,
                    result,
                    paper_tag,
                } => (
                    ReductionMove::CyclicShiftLeft {
                        generator: generator(i, *g, *image)?,
                    },
                    paper_tag,
                    result,
                ),
                MoveRecord::CyclicShiftRight {
                    generator: g,
                    image,
                    result,
                    paper_tag,
                } => (
                    ReductionMove::CyclicShiftRight {
                        generator: generator(i, *g, *image)?,
                    },
                    paper_tag,
                    result,
                ),
            };
            if tag != mv.tag() {
                return Err(at(i, format!("tag `{tag}` does not match a {} move", mv.kind())));
            }
            let next = mv.apply(tw, &current).map_err(|r| at(i, r))?;
            if &next != claimed {
                return Err(at(i, format!("move yields `{next}`, record claims `{claimed}`")));
            }
            current = next;
            trace.push(mv);
        }
        let final_element = sys.element_from_word(&report.final_element).map_err(|e| TraceViolation {
            move_index: None,
            reason: e.to_string(),
        })?;
        Ok(ReductionResult {
            input: report.input.clone(),
            final_word: report.final_word.clone(),
            final_element,
            class: report.class.clone(),
            trace,
        })
    }
}
