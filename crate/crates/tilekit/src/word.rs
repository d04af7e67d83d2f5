//! Fixed-length words over the complemented alphabet.

use crate::error::{Error, Result};
use crate::letter::Letter;

/// Maximum supported dimension.
pub const MAX_DIM: u8 = 8;

/// A word of `dim` letters, bit-packed six bits per position.
///
/// Position 0 sits in the most significant slot, so comparing the packed
/// value of two words of equal dimension is the position-wise symbol order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    dim: u8,
    bits: u64,
}

#[inline]
fn shift(i: usize) -> u32 {
    58 - 6 * i as u32
}

impl Word {
    pub fn new(letters: &[Letter]) -> Result<Word> {
        let dim = letters.len();
        if dim == 0 || dim > MAX_DIM as usize {
            return Err(Error::BadPosition(dim, MAX_DIM));
        }
        let mut bits = 0u64;
        for (i, l) in letters.iter().enumerate() {
            bits |= (l.code() as u64) << shift(i);
        }
        Ok(Word {
            dim: dim as u8,
            bits,
        })
    }

    /// Allocation-free constructor from a letter-per-position closure.
    pub fn build(dim: u8, mut f: impl FnMut(usize) -> Letter) -> Word {
        debug_assert!(dim >= 1 && dim <= MAX_DIM);
        let mut bits = 0u64;
        for i in 0..dim as usize {
            bits |= (f(i).code() as u64) << shift(i);
        }
        Word { dim, bits }
    }

    pub fn dim(self) -> u8 {
        self.dim
    }

    #[inline]
    pub fn letter(self, i: usize) -> Letter {
        debug_assert!(i < self.dim as usize);
        Letter::from_code(((self.bits >> shift(i)) & 0x3f) as u8).unwrap()
    }

    pub fn letters(self) -> impl Iterator<Item = Letter> {
        (0..self.dim as usize).map(move |i| self.letter(i))
    }

    pub fn with_letter(self, i: usize, l: Letter) -> Word {
        debug_assert!(i < self.dim as usize);
        let mask = 0x3fu64 << shift(i);
        Word {
            dim: self.dim,
            bits: (self.bits & !mask) | ((l.code() as u64) << shift(i)),
        }
    }

    /// Appends a letter, raising the dimension by one.
    pub fn push(self, l: Letter) -> Result<Word> {
        if self.dim >= MAX_DIM {
            return Err(Error::BadPosition(self.dim as usize, MAX_DIM));
        }
        let mut w = Word {
            dim: self.dim + 1,
            bits: self.bits,
        };
        w = w.with_letter(self.dim as usize, l);
        Ok(w)
    }

    /// Removes the letter at position `i`, lowering the dimension by one.
    pub fn remove(self, i: usize) -> Result<Word> {
        if i >= self.dim as usize {
            return Err(Error::BadPosition(i, self.dim));
        }
        if self.dim == 1 {
            return Err(Error::BadPosition(i, self.dim));
        }
        let letters: Vec<Letter> = self
            .letters()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, l)| l)
            .collect();
        Word::new(&letters)
    }

    pub fn star_count(self) -> u32 {
        self.letters().filter(|l| l.is_star()).count() as u32
    }

    pub fn star_positions(self) -> Vec<usize> {
        (0..self.dim as usize)
            .filter(|&i| self.letter(i).is_star())
            .collect()
    }

    pub fn is_proper(self) -> bool {
        self.star_count() == 0
    }

    /// `2^(number of stars)`.
    pub fn measure(self) -> u64 {
        1 << self.star_count()
    }

    /// True when some position carries complementary non-star letters.
    pub fn dichotomous(self, other: Word) -> Result<bool> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        // Complementary paired letters differ exactly in the low bit of
        // their slot; the star cannot produce that pattern.
        let x = self.bits ^ other.bits;
        for i in 0..self.dim as usize {
            if (x >> shift(i)) & 0x3f == 1 {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// The single differing position when the two words are a twin pair.
    pub fn twin_position(self, other: Word) -> Option<usize> {
        if self.dim != other.dim || self == other {
            return None;
        }
        let x = self.bits ^ other.bits;
        if x.count_ones() != 1 {
            return None;
        }
        let tz = x.trailing_zeros();
        for i in 0..self.dim as usize {
            if shift(i) == tz {
                return Some(i);
            }
        }
        None
    }
}

impl std::fmt::Debug for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for l in self.letters() {
            write!(f, "{}", l.symbol())?;
        }
        Ok(())
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Free-function form of [`Word::dichotomous`].
pub fn is_dichotomous(v: Word, u: Word) -> Result<bool> {
    v.dichotomous(u)
}

/// Free-function form of [`Word::measure`].
pub fn word_measure(w: Word) -> u64 {
    w.measure()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_word;

    #[test]
    fn measures() {
        assert_eq!(parse_word("aaaa").unwrap().measure(), 1);
        assert_eq!(parse_word("a**A").unwrap().measure(), 4);
        assert_eq!(parse_word("****").unwrap().measure(), 16);
    }

    #[test]
    fn dichotomy() {
        let v = parse_word("aaa").unwrap();
        assert!(v.dichotomous(parse_word("Aab").unwrap()).unwrap());
        // star positions never witness a dichotomy
        assert!(!parse_word("a*a")
            .unwrap()
            .dichotomous(parse_word("aBa").unwrap())
            .unwrap());
        assert!(parse_word("aa")
            .unwrap()
            .dichotomous(parse_word("aA").unwrap())
            .unwrap());
        assert!(parse_word("aa").unwrap().dichotomous(v).is_err());
    }

    #[test]
    fn twin_positions() {
        let v = parse_word("aaba").unwrap();
        assert_eq!(v.twin_position(parse_word("aaBa").unwrap()), Some(2));
        assert_eq!(v.twin_position(parse_word("aaca").unwrap()), None);
        assert_eq!(v.twin_position(v), None);
        // a*aa vs aAaa: star against a paired letter is not a twin
        assert_eq!(
            parse_word("a*aa")
                .unwrap()
                .twin_position(parse_word("aAaa").unwrap()),
            None
        );
        // twin through equal star positions is fine
        assert_eq!(
            parse_word("a***")
                .unwrap()
                .twin_position(parse_word("A***").unwrap()),
            Some(0)
        );
    }

    #[test]
    fn push_remove_round_trip() {
        let v = parse_word("ab*").unwrap();
        let w = v.push(Letter::paired(2, true)).unwrap();
        assert_eq!(format!("{w}"), "ab*C");
        assert_eq!(w.remove(3).unwrap(), v);
        assert_eq!(format!("{}", w.remove(1).unwrap()), "a*C");
    }

    #[test]
    fn ordering_is_positionwise_symbol_rank() {
        let mut ws: Vec<Word> = ["ba", "aA", "aa", "a*", "Ab"]
            .iter()
            .map(|s| parse_word(s).unwrap())
            .collect();
        ws.sort();
        let shown: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, vec!["aa", "aA", "a*", "Ab", "ba"]);
    }
}
