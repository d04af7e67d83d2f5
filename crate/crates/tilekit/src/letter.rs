//! Letters of a complemented alphabet.
//!
//! The alphabet is `{a1, a1', ..., a16, a16', *}`. Complementation swaps the
//! two letters of a pair and fixes the star. In text form the pairs are
//! written `a..p`, their complements `A..P`, and the star `*`; this is also
//! the sorting order (`a < A < b < B < ... < p < P < *`).

/// Maximum number of letter pairs supported by the packed encoding.
pub const MAX_PAIRS: u8 = 16;

const STAR_CODE: u8 = 32;

/// One symbol: a member of a letter pair, or the star.
///
/// Encoded in 6 bits: pair `j` (0-based) unprimed is `2j`, primed is
/// `2j + 1`, the star is 32. The numeric encoding equals the canonical
/// symbol rank, so deriving `Ord` gives the text order for free.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

impl Letter {
    pub const STAR: Letter = Letter(STAR_CODE);

    /// The unprimed or primed letter of pair `pair` (0-based, `< 16`).
    pub fn paired(pair: u8, primed: bool) -> Letter {
        assert!(pair < MAX_PAIRS, "pair index {pair} out of range");
        Letter(pair * 2 + primed as u8)
    }

    pub fn star() -> Letter {
        Letter::STAR
    }

    pub fn from_code(code: u8) -> Option<Letter> {
        (code <= STAR_CODE).then_some(Letter(code))
    }

    pub fn code(self) -> u8 {
        self.0
    }

    pub fn is_star(self) -> bool {
        self.0 == STAR_CODE
    }

    /// Pair index (0-based) for a paired letter, `None` for the star.
    pub fn pair(self) -> Option<u8> {
        (!self.is_star()).then_some(self.0 / 2)
    }

    pub fn primed(self) -> bool {
        !self.is_star() && self.0 & 1 == 1
    }

    /// The involutive complementation: swaps the letters of a pair and
    /// fixes the star.
    pub fn complement(self) -> Letter {
        if self.is_star() {
            self
        } else {
            Letter(self.0 ^ 1)
        }
    }

    pub fn symbol(self) -> char {
        if self.is_star() {
            '*'
        } else if self.primed() {
            (b'A' + self.0 / 2) as char
        } else {
            (b'a' + self.0 / 2) as char
        }
    }

    pub fn from_symbol(c: char) -> Option<Letter> {
        match c {
            '*' => Some(Letter::STAR),
            'a'..='p' => Some(Letter((c as u8 - b'a') * 2)),
            'A'..='P' => Some(Letter((c as u8 - b'A') * 2 + 1)),
            _ => None,
        }
    }

    /// All 33 letters in rank order.
    pub fn all() -> impl Iterator<Item = Letter> {
        (0..=STAR_CODE).map(Letter)
    }
}

impl std::fmt::Debug for Letter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl std::fmt::Display for Letter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Free-function form of [`Letter::complement`].
pub fn complement(x: Letter) -> Letter {
    x.complement()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_is_an_involution_with_star_fixed() {
        for l in Letter::all() {
            assert_eq!(l.complement().complement(), l);
            if l.is_star() {
                assert_eq!(l.complement(), l);
            } else {
                assert_ne!(l.complement(), l);
            }
        }
    }

    #[test]
    fn symbols_round_trip_in_rank_order() {
        let mut prev: Option<Letter> = None;
        for l in Letter::all() {
            assert_eq!(Letter::from_symbol(l.symbol()), Some(l));
            if let Some(p) = prev {
                assert!(p < l);
            }
            prev = Some(l);
        }
        assert_eq!(Letter::from_symbol('z'), None);
        assert_eq!(Letter::from_symbol('9'), None);
    }

    #[test]
    fn complement_examples() {
        let a = Letter::paired(0, false);
        assert_eq!(a.complement(), Letter::paired(0, true));
        assert_eq!(a.complement().complement(), a);
        assert_eq!(Letter::STAR.complement(), Letter::STAR);
    }
}
