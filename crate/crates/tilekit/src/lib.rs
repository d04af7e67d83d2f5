//! Codes over complemented alphabets: dichotomous words, box partition
//! codes and cube tiling codes, with enumeration, isomorphism
//! classification, orbit counting, and glue-and-cut transformations.

pub mod atoms;
pub mod catalog;
pub mod code;
pub mod enumerate;
pub mod error;
pub mod expand;
pub mod iso;
pub mod letter;
pub mod moves;
pub mod orbit;
pub mod perfect;
pub mod records;
pub mod text;
pub mod word;

pub use atoms::{equivalent, is_exact_box_cover, realization, AtomRealization, AtomSpace};
pub use code::Code;
pub use error::{Error, Result};
pub use letter::{complement, Letter, MAX_PAIRS};
pub use text::{parse, parse_word, serialize};
pub use word::{is_dichotomous, word_measure, Word, MAX_DIM};
