//! The endomorphism `F` at the level of `(W, S)`: a permutation of the simple
//! reflections preserving the Coxeter matrix.

use std::fmt;
use std::sync::Arc;

use crate::coxeter::{parse_descriptor, CoxeterSystem, GeneratorSubset, WeylElement, DEFAULT_MAX_ORDER};
use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Debug, Clone)]
pub struct Twist {
    system: Arc<CoxeterSystem>,
    sigma: Vec<usize>,
    order: usize,
    label: Option<String>,
    q_constraint: Option<String>,
}

/// Partition of `S` into `F`-orbits, ordered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FOrbitSet {
    blocks: Vec<GeneratorSubset>,
}

impl FOrbitSet {
    pub fn blocks(&self) -> &[GeneratorSubset] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn orbit_of(&self, s: usize) -> GeneratorSubset {
        *self
            .blocks
            .iter()
            .find(|b| b.contains(s))
            .expect("orbit partition covers S")
    }

    /// Index of the block containing `s`.
    pub fn index_of(&self, s: usize) -> usize {
        self.blocks.iter().position(|b| b.contains(s)).expect("orbit partition covers S")
    }
}

impl fmt::Display for FOrbitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("}")
    }
}

impl Twist {
    /// Validates `sigma` (0-based images of the generators) against the
    /// Coxeter matrix.
    pub fn new(system: Arc<CoxeterSystem>, sigma: Vec<usize>) -> Result<Self> {
        let n = system.rank();
        let mut hit = vec![false; n];
        if sigma.len() != n || sigma.iter().any(|&t| t >= n || std::mem::replace(&mut hit[t], true)) {
            return Err(Error::InvalidPermutation(format!(
                "{:?} on {n} generators",
                sigma.iter().map(|s| s + 1).collect::<Vec<_>>()
            )));
        }
        for s in 0..n {
            for t in 0..n {
                let (fs, ft) = (sigma[s], sigma[t]);
                if system.m(s, t) != system.m(fs, ft) {
                    return Err(Error::CoxeterMatrixViolation {
                        s: s + 1,
                        t: t + 1,
                        fs: fs + 1,
                        ft: ft + 1,
                        m_st: system.m(s, t),
                        m_fst: system.m(fs, ft),
                    });
                }
            }
        }
        let order = permutation_order(&sigma);
        let (label, q_constraint) = registry_label(&system, &sigma);
        Ok(Twist {
            system,
            sigma,
            order,
            label,
            q_constraint,
        })
    }

    /// The untwisted (split) case.
    pub fn identity(system: Arc<CoxeterSystem>) -> Self {
        let n = system.rank();
        Twist::new(system, (0..n).collect()).expect("identity preserves the Coxeter matrix")
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn system_arc(&self) -> &Arc<CoxeterSystem> {
        &self.system
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    /// `F(s)` on a generator.
    pub fn image(&self, s: usize) -> usize {
        self.sigma[s]
    }

    /// `F^{-1}(s)` on a generator.
    pub fn preimage(&self, s: usize) -> usize {
        self.sigma.iter().position(|&t| t == s).expect("sigma is a permutation")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Informational restriction on `q` for Suzuki and Ree types; never
    /// enforced.
    pub fn q_constraint(&self) -> Option<&str> {
        self.q_constraint.as_deref()
    }

    pub fn f_orbits(&self) -> FOrbitSet {
        let mut seen = GeneratorSubset::EMPTY;
        let mut blocks = Vec::new();
        for s in 0..self.sigma.len() {
            if seen.contains(s) {
                continue;
            }
            let mut block = GeneratorSubset::EMPTY;
            let mut t = s;
            while !block.contains(t) {
                block.insert(t);
                t = self.sigma[t];
            }
            seen = seen.union(block);
            blocks.push(block);
        }
        FOrbitSet { blocks }
    }

    /// Smallest `F`-stable subset containing `j`.
    pub fn f_closure(&self, j: GeneratorSubset) -> GeneratorSubset {
        self.f_orbits()
            .blocks
            .into_iter()
            .filter(|b| b.bits() & j.bits() != 0)
            .fold(GeneratorSubset::EMPTY, GeneratorSubset::union)
    }

    pub fn apply_word(&self, w: &Word) -> Word {
        w.map(|s| self.sigma[s])
    }

    /// `F(x)`, computed letterwise on a reduced word.
    pub fn apply(&self, x: &WeylElement) -> WeylElement {
        let word = self.apply_word(&self.system.canonical_reduced_word(x));
        self.system.element_from_letters(word.letters())
    }

    /// `s x F(s)`.
    pub fn conjugate_by_gen(&self, s: usize, x: &WeylElement) -> WeylElement {
        let left = self.system.left_mul_gen(s, x);
        self.system.right_mul_gen(&left, self.sigma[s])
    }

    pub fn display_sigma(&self) -> String {
        format_cycles(&self.sigma)
    }
}

/// `F(x)`.
pub fn apply_twist(tw: &Twist, x: &WeylElement) -> WeylElement {
    tw.apply(x)
}

/// The `F`-orbit partition of `S`.
pub fn f_orbits(tw: &Twist) -> FOrbitSet {
    tw.f_orbits()
}

/// Builds a validated twist on an existing system.
pub fn build_twist(system: Arc<CoxeterSystem>, sigma: Vec<usize>) -> Result<Twist> {
    Twist::new(system, sigma)
}

/// Looks up a standard (possibly twisted) type such as `"2A3"`, `"3D4"` or
/// `"2B2"`; untwisted descriptors yield the identity twist.
pub fn registry_twist(descriptor: &str) -> Result<Twist> {
    registry_twist_with_limit(descriptor, DEFAULT_MAX_ORDER)
}

pub fn registry_twist_with_limit(descriptor: &str, max_order: u64) -> Result<Twist> {
    let factors = parse_descriptor(descriptor)?;
    let mut sigma = Vec::new();
    for f in &factors {
        let offset = sigma.len();
        sigma.extend(f.standard_twist()?.into_iter().map(|t| t + offset));
    }
    let system = Arc::new(CoxeterSystem::from_factors(&factors, max_order)?);
    Twist::new(system, sigma)
}

/// Parses a cycle list such as `"(1 3)(2 4)"` into 0-based images.
pub fn parse_cycles(text: &str, rank: usize) -> Result<Vec<usize>> {
    let mut sigma: Vec<usize> = (0..rank).collect();
    let bad = |msg: String| Error::InvalidPermutation(msg);
    let mut seen = GeneratorSubset::EMPTY;
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| bad(format!("expected `(` in `{rest}`")))?;
        let cycle: Vec<usize> = body
            .0
            .split([' ', ','])
            .filter(|t| !t.is_empty())
            .map(|tok| match tok.parse::<usize>() {
                Ok(l) if (1..=rank).contains(&l) => Ok(l - 1),
                _ => Err(Error::LetterOutOfRange {
                    token: tok.to_string(),
                    rank,
                }),
            })
            .collect::<Result<_>>()?;
        for (i, &s) in cycle.iter().enumerate() {
            if seen.contains(s) {
                return Err(bad(format!("generator {} repeated", s + 1)));
            }
            seen.insert(s);
            sigma[s] = cycle[(i + 1) % cycle.len()];
        }
        rest = body.1.trim_start();
    }
    Ok(sigma)
}

/// Cycle notation with 1-based labels, `()` for the identity.
pub fn format_cycles(sigma: &[usize]) -> String {
    let mut seen = vec![false; sigma.len()];
    let mut out = String::new();
    for s in 0..sigma.len() {
        if seen[s] || sigma[s] == s {
            continue;
        }
        let mut cycle = Vec::new();
        let mut t = s;
        while !seen[t] {
            seen[t] = true;
            cycle.push((t + 1).to_string());
            t = sigma[t];
        }
        out.push_str(&format!("({})", cycle.join(" ")));
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

fn permutation_order(sigma: &[usize]) -> usize {
    let gcd = |mut a: usize, mut b: usize| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let mut order = 1;
    for s in 0..sigma.len() {
        let mut len = 1;
        let mut t = sigma[s];
        while t != s {
            t = sigma[t];
            len += 1;
        }
        order = order / gcd(order, len) * len;
    }
    order
}

/// Registry name when `sigma` acts factorwise by standard diagram
/// automorphisms.
fn registry_label(system: &CoxeterSystem, sigma: &[usize]) -> (Option<String>, Option<String>) {
    let mut names = Vec::new();
    let mut constraints = Vec::new();
    let mut offset = 0;
    for f in system.factors() {
        let range = offset..offset + f.rank;
        let local: Option<Vec<usize>> = range
            .clone()
            .map(|s| range.contains(&sigma[s]).then(|| sigma[s] - offset))
            .collect();
        let Some(local) = local else {
            return (None, None);
        };
        let matched = [None, Some(2), Some(3)].into_iter().find_map(|d| {
            let candidate = crate::coxeter::TypeFactor { twist_order: d, ..*f };
            (candidate.standard_twist().ok()? == local).then_some(candidate)
        });
        let Some(candidate) = matched else {
            return (None, None);
        };
        names.push(candidate.to_string());
        constraints.extend(candidate.q_constraint());
        offset += f.rank;
    }
    let constraint = (!constraints.is_empty()).then(|| constraints.join("; "));
    (Some(names.join("x")), constraint)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(d: &str) -> Arc<CoxeterSystem> {
        Arc::new(CoxeterSystem::build(d).unwrap())
    }

    #[test]
    fn build_twist_examples() {
        let a2 = arc("A2");
        let id = build_twist(a2.clone(), vec![0, 1]).unwrap();
        assert_eq!(id.order(), 1);
        assert_eq!(id.label(), Some("A2"));
        let flip = build_twist(a2, vec![1, 0]).unwrap();
        assert_eq!(flip.order(), 2);
        assert_eq!(flip.label(), Some("2A2"));
        let err = build_twist(arc("A3"), vec![1, 0, 2]).unwrap_err();
        assert!(matches!(err, Error::CoxeterMatrixViolation { .. }), "{err}");
        assert!(matches!(build_twist(arc("A2"), vec![0, 0]), Err(Error::InvalidPermutation(_))));
    }

    #[test]
    fn registry_examples() {
        let t = registry_twist("2A3").unwrap();
        assert_eq!(t.sigma(), &[2, 1, 0]);
        assert_eq!(t.order(), 2);
        let t = registry_twist("3D4").unwrap();
        assert_eq!(t.order(), 3);
        assert_eq!(t.display_sigma(), "(1 3 4)");
        assert_eq!(t.label(), Some("3D4"));
        let t = registry_twist("2B2").unwrap();
        assert_eq!(t.sigma(), &[1, 0]);
        assert_eq!(t.order(), 2);
        assert_eq!(t.q_constraint(), Some("q is an odd power of sqrt(2)"));
        assert_eq!(registry_twist("2G2").unwrap().q_constraint(), Some("q is an odd power of sqrt(3)"));
        assert!(registry_twist("2F4").is_ok());
        assert!(registry_twist("2E6").is_ok());
        assert!(registry_twist("2D5").is_ok());
        assert!(matches!(registry_twist("2B3"), Err(Error::UnknownTwist(_))));
        assert!(matches!(registry_twist("Q4"), Err(Error::UnknownType(_))));
        assert_eq!(registry_twist("A2").unwrap().order(), 1);
    }

    #[test]
    fn orbit_examples() {
        let t = registry_twist("A2").unwrap();
        assert_eq!(t.f_orbits().to_string(), "{{s1}, {s2}}");
        let t = registry_twist("2A3").unwrap();
        assert_eq!(t.f_orbits().to_string(), "{{s1, s3}, {s2}}");
        let t = registry_twist("3D4").unwrap();
        assert_eq!(t.f_orbits().to_string(), "{{s1, s3, s4}, {s2}}");
    }

    #[test]
    fn apply_examples() {
        let t = registry_twist("2A2").unwrap();
        let sys = t.system();
        let s1 = sys.generator(0);
        assert_eq!(t.apply(&s1), sys.generator(1));
        let x = sys.element_from_word(&"1 2".parse().unwrap()).unwrap();
        let y = sys.element_from_word(&"2 1".parse().unwrap()).unwrap();
        assert_eq!(t.apply(&x), y);
        let u = registry_twist("B3").unwrap();
        for x in u.system().elements().unwrap() {
            assert_eq!(u.apply(&x), x);
        }
    }

    #[test]
    fn cycle_syntax() {
        assert_eq!(parse_cycles("(1 3)", 3).unwrap(), vec![2, 1, 0]);
        assert_eq!(parse_cycles("(1 3 4)(2)", 4).unwrap(), vec![2, 1, 3, 0]);
        assert_eq!(parse_cycles("", 2).unwrap(), vec![0, 1]);
        assert!(parse_cycles("(1 5)", 3).is_err());
        assert!(parse_cycles("(1 2)(2 3)", 3).is_err());
        assert!(parse_cycles("1 2", 3).is_err());
        assert_eq!(format_cycles(&[2, 1, 3, 0]), "(1 3 4)");
    }

    #[test]
    fn product_twists_swap_factors() {
        let sys = arc("A2xA2");
        let t = build_twist(sys, parse_cycles("(1 3)(2 4)", 4).unwrap()).unwrap();
        assert_eq!(t.order(), 2);
        assert_eq!(t.label(), None);
        assert_eq!(t.f_orbits().len(), 2);
    }
}
