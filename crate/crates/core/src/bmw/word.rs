use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A generator letter with 1-based index.  `Tinv` only occurs in user input;
/// internally inverses are expanded through the skein relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    T(usize),
    Tinv(usize),
    K(usize),
}

impl Letter {
    pub fn index(&self) -> usize {
        match *self {
            Letter::T(i) | Letter::Tinv(i) | Letter::K(i) => i,
        }
    }

    pub fn parse(s: &str) -> Result<Letter> {
        let bad = || Error::Parse(format!("bad letter {s:?}"));
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?;
        let i: usize = chars.as_str().parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(bad());
        }
        match head {
            'T' => Ok(Letter::T(i)),
            'U' => Ok(Letter::Tinv(i)),
            'K' => Ok(Letter::K(i)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::T(i) => write!(f, "T{i}"),
            Letter::Tinv(i) => write!(f, "U{i}"),
            Letter::K(i) => write!(f, "K{i}"),
        }
    }
}

/// A word over the internal alphabet, stored as letter codes.
pub type Word = Vec<u8>;

/// Degree-lexicographic comparison of code words.
pub fn deglex(a: &[u8], b: &[u8]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Word wrapper ordered degree-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegLex(pub Word);

impl Ord for DegLex {
    fn cmp(&self, other: &Self) -> Ordering {
        deglex(&self.0, &other.0)
    }
}

impl PartialOrd for DegLex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Internal alphabet of `BMW_n`: the letters `T_i` and `K_i`, `1 <= i < n`.
///
/// Codes are ordered `K_1 < K_2 < ... < T_1 < T_2 < ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    n: usize,
}

impl Alphabet {
    pub fn new(n: usize) -> Self {
        Alphabet { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        2 * (self.n - 1)
    }

    pub fn is_empty(&self) -> bool {
        self.n < 2
    }

    pub fn t(&self, i: usize) -> u8 {
        debug_assert!(i >= 1 && i < self.n);
        (self.n - 1 + i - 1) as u8
    }

    pub fn k(&self, i: usize) -> u8 {
        debug_assert!(i >= 1 && i < self.n);
        (i - 1) as u8
    }

    pub fn letter(&self, code: u8) -> Letter {
        let m = self.n - 1;
        let c = code as usize;
        if c < m {
            Letter::K(c + 1)
        } else {
            Letter::T(c - m + 1)
        }
    }

    pub fn is_k(&self, code: u8) -> bool {
        (code as usize) < self.n - 1
    }

    /// Code of a `T` or `K` letter, checking the index.
    pub fn code(&self, letter: Letter) -> Result<u8> {
        let i = letter.index();
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.n.saturating_sub(1),
            });
        }
        match letter {
            Letter::T(i) => Ok(self.t(i)),
            Letter::K(i) => Ok(self.k(i)),
            Letter::Tinv(_) => Err(Error::Invalid("inverse letters have no code".into())),
        }
    }

    pub fn letters(&self, word: &[u8]) -> Vec<Letter> {
        word.iter().map(|&c| self.letter(c)).collect()
    }

    pub fn format(&self, word: &[u8]) -> String {
        if word.is_empty() {
            return "1".into();
        }
        word.iter()
            .map(|&c| self.letter(c).to_string())
            .collect::<Vec<_>>()
            .join("·")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letters_round_trip() {
        for s in ["T1", "U3", "K12"] {
            assert_eq!(Letter::parse(s).unwrap().to_string(), s);
        }
        assert!(Letter::parse("T0").is_err());
        assert!(Letter::parse("X1").is_err());
        let a = Alphabet::new(4);
        for code in 0..a.len() as u8 {
            assert_eq!(a.code(a.letter(code)).unwrap(), code);
        }
        assert!(a.code(Letter::T(4)).is_err());
    }

    #[test]
    fn deglex_orders_by_length_first() {
        assert_eq!(deglex(&[5], &[0, 0]), Ordering::Less);
        assert_eq!(deglex(&[0, 1], &[0, 0]), Ordering::Greater);
    }
}
