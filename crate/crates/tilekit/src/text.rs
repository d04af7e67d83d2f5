//! Text form of words and codes.
//!
//! Letters `a..p` are the sixteen pairs, `A..P` their complements, `*` the
//! star. A word is one line of contiguous symbols, a code one word per
//! line, `#` opens a comment line. Serialization is canonical: words
//! sorted ascending, LF newlines.

use crate::code::Code;
use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::word::{Word, MAX_DIM};

pub fn parse_word(s: &str) -> Result<Word> {
    parse_word_at(s, 1)
}

fn parse_word_at(s: &str, line: usize) -> Result<Word> {
    let mut letters = Vec::with_capacity(s.len());
    for (i, c) in s.chars().enumerate() {
        let l = Letter::from_symbol(c).ok_or(Error::Parse {
            line,
            col: i + 1,
            msg: format!("invalid symbol {c:?}"),
        })?;
        letters.push(l);
    }
    if letters.is_empty() || letters.len() > MAX_DIM as usize {
        return Err(Error::Parse {
            line,
            col: 1,
            msg: format!("word length {} out of range 1..=8", letters.len()),
        });
    }
    Word::new(&letters).map_err(|_| Error::Parse {
        line,
        col: 1,
        msg: "bad word".into(),
    })
}

pub fn parse(text: &str) -> Result<Code> {
    let mut words = Vec::new();
    let mut dim: Option<u8> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        for token in trimmed.split_whitespace() {
            let w = parse_word_at(token, line)?;
            match dim {
                None => dim = Some(w.dim()),
                Some(d) if d != w.dim() => {
                    return Err(Error::Parse {
                        line,
                        col: 1,
                        msg: format!("word dimension {} differs from {}", w.dim(), d),
                    })
                }
                _ => {}
            }
            words.push(w);
        }
    }
    let dim = dim.ok_or(Error::Parse {
        line: 1,
        col: 1,
        msg: "no words".into(),
    })?;
    Code::new(dim, words)
}

pub fn serialize(c: &Code) -> String {
    let mut out = String::new();
    for w in c.words() {
        out.push_str(&w.to_string());
        out.push('\n');
    }
    out
}

/// Compact one-line form, words separated by spaces.
pub fn serialize_line(c: &Code) -> String {
    c.words()
        .iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_parsing() {
        let w = parse_word("aA*b").unwrap();
        assert_eq!(w.letter(0), Letter::paired(0, false));
        assert_eq!(w.letter(1), Letter::paired(0, true));
        assert!(w.letter(2).is_star());
        assert_eq!(w.letter(3), Letter::paired(1, false));
        assert!(parse_word("aZ9").is_err());
        assert!(parse_word("").is_err());
        assert!(parse_word("aaaaaaaaa").is_err());
    }

    #[test]
    fn code_round_trip() {
        let text = "# comment\nAaa\naaa\n\na*a\n";
        let c = parse(text).unwrap();
        assert_eq!(serialize(&c), "aaa\na*a\nAaa\n");
        let again = parse(&serialize(&c)).unwrap();
        assert_eq!(again, c);
    }

    #[test]
    fn dimension_mismatch_reported_with_line() {
        let err = parse("aaa\naaaa\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }
}
