//! JSONL record types shared by the library and the command line tool.

use serde::{Deserialize, Serialize};

use crate::code::Code;
use crate::error::Result;
use crate::iso::CodeClass;
use crate::text::parse;

/// One enumerated or expanded code.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CodeRecord {
    pub dim: u8,
    pub k: usize,
    pub code: Vec<String>,
    pub canonical: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source_class: Option<String>,
}

impl CodeRecord {
    pub fn new(code: &Code, canonical: String, source_class: Option<String>) -> CodeRecord {
        CodeRecord {
            dim: code.dim(),
            k: code.len(),
            code: code.words().iter().map(|w| w.to_string()).collect(),
            canonical,
            source_class,
        }
    }

    pub fn to_code(&self) -> Result<Code> {
        parse(&self.code.join("\n"))
    }
}

/// One isomorphism class.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassRecord {
    pub representative: Vec<String>,
    pub class_size_in_input: usize,
    pub canonical: String,
    pub tp: Vec<u32>,
    pub profile: Vec<Vec<(u32, u32)>>,
}

impl ClassRecord {
    pub fn from_class(class: &CodeClass) -> ClassRecord {
        ClassRecord {
            representative: class
                .representative
                .words()
                .iter()
                .map(|w| w.to_string())
                .collect(),
            class_size_in_input: class.size,
            canonical: class.canonical.clone(),
            tp: class.tp.0.clone(),
            profile: class.profile.rows.clone(),
        }
    }

    pub fn to_code(&self) -> Result<Code> {
        parse(&self.representative.join("\n"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::canonical_key;

    #[test]
    fn record_round_trip() {
        let c = parse("aa aA Ab AB").unwrap();
        let rec = CodeRecord::new(&c, canonical_key(&c), Some("test".into()));
        let json = serde_json::to_string(&rec).unwrap();
        let back: CodeRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_code().unwrap(), c);
        assert_eq!(back.canonical, rec.canonical);
    }
}
