//! The twenty-one expansion planes in dimension four: the twenty
//! non-layered twin-pair-free partition code classes plus the layered
//! two-word class. Every cube tiling code in dimension four is made on
//! the plane of one of these by replacing improper words with grafted
//! tiling codes.
//!
//! The twenty are regenerated by the seeded enumeration in tests; they
//! are pinned here so the expansion pipeline does not depend on a long
//! search.

use crate::code::Code;
use crate::text::parse;

pub const PLANES: [(&str, &str); 21] = [
    ("tpf-01", "a*aa a**A A*a* A*AA **Aa"),
    ("tpf-02", "aaAa aa*A AaaA AaA* *aaa *A**"),
    ("tpf-03", "a*aA a**a AaaA Aa*a AAa* AAAa **AA"),
    ("tpf-04", "aaaA a*A* AaAa Aa*A AAA* *AaA **aa"),
    ("tpf-05", "aa*A aAA* a*aa Aaa* AA*a A*AA *aAa *AaA"),
    ("tpf-06", "aaaa aaA* aA*A Aa*a AAaA A*AA *aaA *A*a"),
    ("tpf-07", "aaaa aAAA aA*a a*aA AaaA AAAa AA*A A*aa *aA*"),
    ("tpf-08", "aaaa aA*a AAAa A*aa *aA* bAAA b*aA BaaA BA*A"),
    ("tpf-09", "aaaa aA*a a**A AAAa Abaa Ab*A ABa* ABAA *aAa"),
    ("tpf-10", "aaaa a*Aa Aa*a AAAa ba*A bAa* bAAA BAaa B**A"),
    ("tpf-11", "aaaa aa*A aAAb aA*B Aaab AAAa A*aB A*AA *aAa *Aab"),
    ("tpf-12", "aaaa a*Aa Aa*a AAAa *Aaa *baA b*AA bBaA BbAA BB*A"),
    ("tpf-13", "aaaa a*Aa Aa*a AAAa *Aaa *AAA ba*A bAaA BaAA B*aA"),
    ("tpf-14", "aaaa a*Aa ab*A aBBA Aa*a AAAa A*BA AbbA *Aaa *BbA"),
    ("tpf-15", "aaaa a*Aa Aa*a AAAa *Aaa *bBA b*bA bBBA BbbA BB*A"),
    ("tpf-16", "aaaa aaAb aAA* a*aA AaaB Aa*b AAAa AA*A *aAB *Aaa"),
    ("tpf-17", "aaaa aAaA aA*a a*AA AaAA AAAa AA*A A*aa *aaA *aAa"),
    ("tpf-18", "aaaa a*Aa abaA aB*A Aa*a AAAa A*aA ABAA *Aaa *bAA"),
    ("tpf-19", "aaaa aaBA aAba aAB* abbA AAAa A*aa Ab*A ABBA *aAa *BbA"),
    ("tpf-20", "aaaa aabA aAb* aABa aBBA AAAa Abaa AbbA ABa* ABAA *aAa *bBA"),
    ("layered", "a*** A***"),
];

/// Parses the pinned planes.
pub fn planes() -> Vec<(String, Code)> {
    PLANES
        .iter()
        .map(|(name, text)| (name.to_string(), parse(text).unwrap()))
        .collect()
}

/// The twenty twin-pair-free planes only.
pub fn twin_pair_free_planes() -> Vec<(String, Code)> {
    planes().into_iter().filter(|(n, _)| n != "layered").collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::find_twin_pairs;

    #[test]
    fn planes_are_partition_codes() {
        // seven of the twenty twin-pair-free planes are layered in the
        // sense of a shared pair at one position
        let layered_planes = [
            "tpf-02", "tpf-12", "tpf-13", "tpf-14", "tpf-15", "tpf-17", "tpf-18", "layered",
        ];
        for (name, code) in planes() {
            assert_eq!(code.dim(), 4, "{name}");
            assert!(code.is_partition_code().unwrap(), "{name}");
            if name == "layered" {
                assert_eq!(find_twin_pairs(&code).len(), 1, "{name}");
            } else {
                assert!(find_twin_pairs(&code).is_empty(), "{name}");
            }
            assert_eq!(
                code.is_layered().is_some(),
                layered_planes.contains(&name.as_str()),
                "{name}"
            );
        }
    }

    #[test]
    fn planes_are_pairwise_non_isomorphic() {
        let keys: std::collections::HashSet<String> = planes()
            .iter()
            .map(|(_, c)| crate::iso::canonical_key(c))
            .collect();
        assert_eq!(keys.len(), PLANES.len());
    }
}
