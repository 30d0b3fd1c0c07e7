//! Type descriptors (`A3`, `B2xG2`, `2A3`, `3D4`) and the Cartan matrices of
//! the irreducible crystallographic types in Bourbaki labelling.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn from_letter(c: char) -> Option<Self> {
        Some(match c {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn rank_range(self) -> (usize, usize) {
        match self {
            Family::A => (1, 8),
            Family::B | Family::C => (2, 8),
            Family::D => (4, 8),
            Family::E => (6, 8),
            Family::F => (4, 4),
            Family::G => (2, 2),
        }
    }
}

/// One irreducible factor of a descriptor, with its optional twist prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TypeFactor {
    pub family: Family,
    pub rank: usize,
    /// Leading `2` or `3` of a twisted descriptor such as `2A3`.
    pub twist_order: Option<u8>,
}

impl TypeFactor {
    pub fn untwisted(self) -> TypeFactor {
        TypeFactor {
            twist_order: None,
            ..self
        }
    }

    /// Number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1) / 2,
            (Family::B | Family::C, _) => n * n,
            (Family::D, _) => n * (n - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            (Family::E, _) => 120,
            (Family::F, _) => 24,
            (Family::G, _) => 6,
        }
    }

    /// Order of the Weyl group, `None` on overflow.
    pub fn group_order(&self) -> Option<u64> {
        let n = self.rank as u64;
        let fact = |k: u64| (1..=k).try_fold(1u64, |acc, i| acc.checked_mul(i));
        match (self.family, self.rank) {
            (Family::A, _) => fact(n + 1),
            (Family::B | Family::C, _) => fact(n)?.checked_mul(1u64 << n),
            (Family::D, _) => fact(n)?.checked_mul(1u64 << (n - 1)),
            (Family::E, 6) => Some(51_840),
            (Family::E, 7) => Some(2_903_040),
            (Family::E, _) => Some(696_729_600),
            (Family::F, _) => Some(1_152),
            (Family::G, _) => Some(12),
        }
    }

    /// Cartan matrix with `a[i][j] = <alpha_i^vee, alpha_j>`, so that
    /// `s_i(alpha_j) = alpha_j - a[i][j] alpha_i`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        let n = self.rank;
        let mut a = vec![vec![0i32; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut bond = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => {
                for i in 0..n.saturating_sub(1) {
                    bond(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    bond(i, i + 1);
                }
                bond(n - 3, n - 1);
            }
            Family::E => {
                // 1 - 3 - 4 - 5 - ... with 2 attached to 4
                bond(0, 2);
                bond(1, 3);
                for i in 2..n - 1 {
                    bond(i, i + 1);
                }
            }
        }
        match self.family {
            // alpha_n short
            Family::B => a[n - 1][n - 2] = -2,
            // alpha_n long
            Family::C => a[n - 2][n - 1] = -2,
            // alpha_3, alpha_4 short
            Family::F => a[2][1] = -2,
            // alpha_1 short
            Family::G => a[0][1] = -3,
            _ => {}
        }
        a
    }

    /// The standard diagram automorphism attached to the twist prefix, as a
    /// permutation of local node indices.
    pub fn standard_twist(&self) -> Result<Vec<usize>> {
        let n = self.rank;
        let id: Vec<usize> = (0..n).collect();
        let order = match self.twist_order {
            None | Some(1) => return Ok(id),
            Some(d) => d,
        };
        let mut sigma = id;
        match (order, self.family, n) {
            (2, Family::A, n) if n >= 2 => {
                for (i, v) in sigma.iter_mut().enumerate() {
                    *v = n - 1 - i;
                }
            }
            (2, Family::D, _) => sigma.swap(n - 2, n - 1),
            (3, Family::D, 4) => {
                // outer nodes 1 -> 3 -> 4 -> 1
                sigma[0] = 2;
                sigma[2] = 3;
                sigma[3] = 0;
            }
            (2, Family::E, 6) => {
                sigma.swap(0, 5);
                sigma.swap(2, 4);
            }
            (2, Family::B, 2) | (2, Family::G, 2) => sigma.swap(0, 1),
            (2, Family::F, 4) => {
                sigma.swap(0, 3);
                sigma.swap(1, 2);
            }
            _ => return Err(Error::UnknownTwist(self.to_string())),
        }
        Ok(sigma)
    }

    /// Informational constraint on `q` for the Suzuki and Ree twists.
    pub fn q_constraint(&self) -> Option<&'static str> {
        match (self.twist_order, self.family) {
            (Some(2), Family::B | Family::F) => Some("q is an odd power of sqrt(2)"),
            (Some(2), Family::G) => Some("q is an odd power of sqrt(3)"),
            _ => None,
        }
    }
}

impl fmt::Display for TypeFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(d) = self.twist_order {
            write!(f, "{d}")?;
        }
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Parses `FACTOR ("x" FACTOR)*` where `FACTOR := [23]? [A-G][1-8]`.
pub fn parse_descriptor(descriptor: &str) -> Result<Vec<TypeFactor>> {
    let descriptor = descriptor.trim();
    if descriptor.is_empty() {
        return Err(Error::UnknownType(descriptor.to_string()));
    }
    descriptor.split('x').map(parse_factor).collect()
}

fn parse_factor(token: &str) -> Result<TypeFactor> {
    let unknown = || Error::UnknownType(token.to_string());
    let mut chars = token.chars().peekable();
    let twist_order = match chars.peek() {
        Some('2') => Some(2),
        Some('3') => Some(3),
        _ => None,
    };
    if twist_order.is_some() {
        chars.next();
    }
    let family = chars.next().and_then(Family::from_letter).ok_or_else(unknown)?;
    let digits: String = chars.collect();
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(unknown());
    }
    let rank: usize = digits.parse().map_err(|_| unknown())?;
    let (min, max) = family.rank_range();
    if rank < min || rank > max {
        return Err(Error::RankOutOfRange {
            letter: family.letter(),
            rank,
            min,
            max,
        });
    }
    Ok(TypeFactor {
        family,
        rank,
        twist_order,
    })
}
