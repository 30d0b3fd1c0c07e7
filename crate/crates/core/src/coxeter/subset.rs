use std::fmt;

use serde::{Serialize, Serializer};

/// A subset `J` of the simple reflections, stored as a bit mask.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSubset(u64);

impl GeneratorSubset {
    pub const EMPTY: GeneratorSubset = GeneratorSubset(0);

    pub fn full(rank: usize) -> Self {
        if rank >= 64 {
            GeneratorSubset(u64::MAX)
        } else {
            GeneratorSubset((1u64 << rank) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        GeneratorSubset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(s: usize) -> Self {
        GeneratorSubset(1 << s)
    }

    pub fn contains(self, s: usize) -> bool {
        self.0 >> s & 1 == 1
    }

    pub fn insert(&mut self, s: usize) {
        self.0 |= 1 << s;
    }

    pub fn union(self, other: Self) -> Self {
        GeneratorSubset(self.0 | other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&s| self.contains(s))
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }
}

impl FromIterator<usize> for GeneratorSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = GeneratorSubset::EMPTY;
        for s in iter {
            set.insert(s);
        }
        set
    }
}

impl fmt::Display for GeneratorSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "s{}", s + 1)?;
        }
        f.write_str("}")
    }
}

/// Serialized as the list of 1-based generator labels.
impl Serialize for GeneratorSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|s| s + 1))
    }
}
