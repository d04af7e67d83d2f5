//! Sets of pairwise-distinct words and the basic predicates on them.

use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::word::Word;

/// A code: a set of distinct words of common dimension, stored sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Code {
    dim: u8,
    words: Vec<Word>,
}

impl Code {
    pub fn new(dim: u8, words: impl IntoIterator<Item = Word>) -> Result<Code> {
        let mut ws: Vec<Word> = words.into_iter().collect();
        for w in &ws {
            if w.dim() != dim {
                return Err(Error::DimensionMismatch(dim, w.dim()));
            }
        }
        ws.sort();
        ws.dedup();
        Ok(Code { dim, words: ws })
    }

    pub fn empty(dim: u8) -> Code {
        Code {
            dim,
            words: Vec::new(),
        }
    }

    pub fn from_words(words: &[Word]) -> Result<Code> {
        let dim = words.first().map(|w| w.dim()).unwrap_or(1);
        Code::new(dim, words.iter().copied())
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: Word) -> bool {
        self.words.binary_search(&w).is_ok()
    }

    pub fn with_word(&self, w: Word) -> Result<Code> {
        let mut ws = self.words.clone();
        ws.push(w);
        Code::new(self.dim, ws)
    }

    pub fn without_words(&self, drop: &[Word]) -> Code {
        Code {
            dim: self.dim,
            words: self
                .words
                .iter()
                .copied()
                .filter(|w| !drop.contains(w))
                .collect(),
        }
    }

    /// All pairs of words that fail the dichotomy requirement.
    pub fn validate_polybox(&self) -> Vec<(Word, Word)> {
        let mut offending = Vec::new();
        for (i, &v) in self.words.iter().enumerate() {
            for &u in &self.words[i + 1..] {
                if !v.dichotomous(u).unwrap() {
                    offending.push((v, u));
                }
            }
        }
        offending
    }

    pub fn is_polybox(&self) -> bool {
        self.validate_polybox().is_empty()
    }

    pub fn measure_sum(&self) -> u64 {
        self.words.iter().map(|w| w.measure()).sum()
    }

    /// A polybox code partitions the whole box exactly when the measures
    /// of its words sum to `2^dim`.
    pub fn is_partition_code(&self) -> Result<bool> {
        if !self.is_polybox() {
            return Err(Error::NotPolybox);
        }
        Ok(self.measure_sum() == 1 << self.dim)
    }

    pub fn is_proper(&self) -> bool {
        self.words.iter().all(|w| w.is_proper())
    }

    /// Proper polybox code with `2^dim` words.
    pub fn is_tiling_code(&self) -> bool {
        self.is_proper() && self.len() == 1usize << self.dim && self.is_polybox()
    }

    /// Words carrying letter `l` at position `pos`.
    pub fn subcode(&self, pos: usize, l: Letter) -> Result<Code> {
        if pos >= self.dim as usize {
            return Err(Error::BadPosition(pos, self.dim));
        }
        Ok(Code {
            dim: self.dim,
            words: self
                .words
                .iter()
                .copied()
                .filter(|w| w.letter(pos) == l)
                .collect(),
        })
    }

    /// Removes coordinate `pos` from every word.
    pub fn project(&self, pos: usize) -> Result<Code> {
        if pos >= self.dim as usize {
            return Err(Error::BadPosition(pos, self.dim));
        }
        let ws: Result<Vec<Word>> = self.words.iter().map(|w| w.remove(pos)).collect();
        Code::new(self.dim - 1, ws?)
    }

    /// First `(position, pair)` such that every word carries that pair
    /// (primed or not) at the position.
    pub fn is_layered(&self) -> Option<(usize, u8)> {
        for pos in 0..self.dim as usize {
            for pair in 0..16u8 {
                let all = !self.words.is_empty()
                    && self
                        .words
                        .iter()
                        .all(|w| w.letter(pos).pair() == Some(pair));
                if all {
                    return Some((pos, pair));
                }
            }
        }
        None
    }

    /// Sorted pair indices occurring at a position.
    pub fn position_pairs(&self, pos: usize) -> Vec<u8> {
        let mut seen = [false; 16];
        for w in &self.words {
            if let Some(p) = w.letter(pos).pair() {
                seen[p as usize] = true;
            }
        }
        (0..16u8).filter(|&p| seen[p as usize]).collect()
    }

    /// Sorted letters occurring at a position (stars excluded).
    pub fn position_letters(&self, pos: usize) -> Vec<Letter> {
        let mut seen = [false; 33];
        for w in &self.words {
            let l = w.letter(pos);
            if !l.is_star() {
                seen[l.code() as usize] = true;
            }
        }
        Letter::all().filter(|l| seen[l.code() as usize]).collect()
    }

    /// Number of stars occurring at a position.
    pub fn star_count_at(&self, pos: usize) -> usize {
        self.words
            .iter()
            .filter(|w| w.letter(pos).is_star())
            .count()
    }

    /// Largest pair index used anywhere, plus one (0 when no pairs occur).
    pub fn pairs_used(&self) -> u8 {
        let mut max = 0u8;
        for w in &self.words {
            for l in w.letters() {
                if let Some(p) = l.pair() {
                    max = max.max(p + 1);
                }
            }
        }
        max
    }
}

impl std::fmt::Debug for Code {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{w:?}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse;

    fn code(lines: &str) -> Code {
        parse(lines).unwrap()
    }

    #[test]
    fn polybox_validation() {
        // an 8-word cube tiling code
        let v = code("aaa abA aBA Aab AaB AAA bAa BAa");
        assert!(v.is_polybox());
        assert!(v.is_tiling_code());

        let bad = code("aa ab");
        let offending = bad.validate_polybox();
        assert_eq!(offending.len(), 1);
        assert!(Code::empty(3).is_polybox());
    }

    #[test]
    fn partition_criterion() {
        let c1 = code("a*aa a**A A*a* A*AA **Aa");
        assert_eq!(c1.measure_sum(), 16);
        assert!(c1.is_partition_code().unwrap());
        assert!(!code("aaaa").is_partition_code().unwrap());
        assert!(code("a*** A***").is_partition_code().unwrap());
        assert_eq!(code("aa ab").is_partition_code(), Err(Error::NotPolybox));
    }

    #[test]
    fn subcode_and_project() {
        let c16 = code("aaaa aaAb aAA* a*aA AaaB Aa*b AAAa AA*A *aAB *Aaa");
        let sub = c16.subcode(3, Letter::paired(0, false)).unwrap();
        assert_eq!(format!("{sub:?}"), "{aaaa AAAa *Aaa}");
        let sub_b = c16.subcode(3, Letter::paired(1, false)).unwrap();
        let projected = sub_b.project(3).unwrap();
        assert_eq!(format!("{projected:?}"), "{aaA Aa*}");
        // absent letter gives the empty code
        assert!(c16.subcode(0, Letter::paired(5, false)).unwrap().is_empty());
        assert!(c16.subcode(9, Letter::STAR).is_err());
    }

    #[test]
    fn layered_detection() {
        assert_eq!(code("ab aB Ab AB").is_layered(), Some((0, 0)));
        assert_eq!(code("a*** A***").is_layered(), Some((0, 0)));
        let c1 = code("a*aa a**A A*a* A*AA **Aa");
        assert_eq!(c1.is_layered(), None);
    }
}
