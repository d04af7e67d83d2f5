//! Expanding improper words into proper codes and raising tiling codes by
//! one dimension through the cylinder construction.

use std::collections::HashMap;

use crate::atoms::{equivalent, AtomSpace, CellSet};
use crate::code::Code;
use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::word::Word;

/// All proper codes over `supply` whose realization equals the realization
/// of `block`. Exact-cover search on the atom grid over `supply`.
pub fn covers_of_region(block: &Code, supply: &[u8]) -> Vec<Code> {
    let dim = block.dim() as usize;
    for i in 0..dim {
        for p in block.position_pairs(i) {
            assert!(supply.contains(&p), "block uses pair outside the supply");
        }
    }
    let space = AtomSpace::uniform(dim, supply);
    let region = space.realize(block);

    // candidate words: proper, box inside the region
    let letters: Vec<Letter> = supply
        .iter()
        .flat_map(|&p| [Letter::paired(p, false), Letter::paired(p, true)])
        .collect();
    let mut candidates: Vec<(Word, CellSet)> = Vec::new();
    let mut stack: Vec<Letter> = Vec::new();
    build_words(&letters, dim, &mut stack, &mut |w| {
        let cells = space.word_cells(w);
        if cells.is_subset(&region) {
            candidates.push((w, cells));
        }
    });

    // per-cell candidate index
    let mut per_cell: Vec<Vec<usize>> = vec![Vec::new(); space.cells];
    for (i, (_, cells)) in candidates.iter().enumerate() {
        for (cell, slot) in per_cell.iter_mut().enumerate() {
            if cells.get(cell) {
                slot.push(i);
            }
        }
    }

    let mut out = Vec::new();
    let mut chosen: Vec<Word> = Vec::new();
    let covered = CellSet::new(space.cells);
    cover_rec(
        &region,
        &covered,
        &candidates,
        &per_cell,
        &mut chosen,
        &mut |words| {
            out.push(Code::new(dim as u8, words.iter().copied()).unwrap());
        },
    );
    out.sort();
    out
}

fn build_words(letters: &[Letter], dim: usize, stack: &mut Vec<Letter>, emit: &mut impl FnMut(Word)) {
    if stack.len() == dim {
        emit(Word::new(stack).unwrap());
        return;
    }
    for &l in letters {
        stack.push(l);
        build_words(letters, dim, stack, emit);
        stack.pop();
    }
}

fn cover_rec(
    region: &CellSet,
    covered: &CellSet,
    candidates: &[(Word, CellSet)],
    per_cell: &[Vec<usize>],
    chosen: &mut Vec<Word>,
    emit: &mut impl FnMut(&[Word]),
) {
    let cell = match region.first_missing_from(covered) {
        None => {
            emit(chosen);
            return;
        }
        Some(c) => c,
    };
    for &i in &per_cell[cell] {
        let (w, cells) = &candidates[i];
        if cells.is_disjoint(covered) {
            let mut next = covered.clone();
            next.union_with(cells);
            chosen.push(*w);
            cover_rec(region, &next, candidates, per_cell, chosen, emit);
            chosen.pop();
        }
    }
}

/// All cube tiling codes of dimension `dim` over the given pairs.
/// Dimensions 1..=3 run the direct cover search; dimension 4 is raised
/// from dimension 3 through the cylinder construction.
pub fn all_tilings(dim: u8, supply: &[u8]) -> Vec<Code> {
    assert!((1..=4).contains(&dim));
    assert!(!supply.is_empty());
    if dim <= 3 {
        let star = Word::new(&vec![Letter::STAR; dim as usize]).unwrap();
        let full = Code::new(dim, [star]).unwrap();
        covers_of_region(&full, supply)
    } else {
        let mut out = raise_tilings(&all_tilings(3, supply), supply);
        out.sort();
        out
    }
}

/// Restricted-growth enumeration of set partitions into at most `max_k`
/// blocks. Blocks come out ordered by their least element.
pub fn set_partitions(n: usize, max_k: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut assign = vec![0usize; n];
    fn rec(i: usize, used: usize, max_k: usize, assign: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == assign.len() {
            let mut blocks = vec![Vec::new(); used];
            for (el, &b) in assign.iter().enumerate() {
                blocks[b].push(el);
            }
            out.push(blocks);
            return;
        }
        for b in 0..=used.min(max_k - 1) {
            if b == used && used + 1 > max_k {
                continue;
            }
            assign[i] = b;
            rec(i + 1, used.max(b + 1), max_k, assign, out);
        }
    }
    if n > 0 && max_k > 0 {
        rec(0, 0, max_k, &mut assign, &mut out);
    }
    out
}

fn ordered_injections(supply: &[u8], k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(supply: &[u8], k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for &p in supply {
            if !cur.contains(&p) {
                cur.push(p);
                rec(supply, k, cur, out);
                cur.pop();
            }
        }
    }
    rec(supply, k, &mut cur, &mut out);
    out
}

/// Raises one tiling code of dimension `d` to dimension `d+1`: split the
/// code into blocks, give each block a fresh pair at the new position and
/// pair it with any equivalent replacement on the complementary side.
/// Over all sources, every (d+1)-code arises exactly once.
pub fn raise_each(
    v: &Code,
    supply: &[u8],
    cover_cache: &mut HashMap<Code, Vec<Code>>,
    emit: &mut impl FnMut(Code),
) {
    let n = v.len();
    let words = v.words();
    for partition in set_partitions(n, supply.len().min(n)) {
        let blocks: Vec<Code> = partition
            .iter()
            .map(|idxs| Code::new(v.dim(), idxs.iter().map(|&i| words[i])).unwrap())
            .collect();
        let mut replacements: Vec<Vec<Code>> = Vec::with_capacity(blocks.len());
        for b in &blocks {
            let covers = cover_cache
                .entry(b.clone())
                .or_insert_with(|| covers_of_region(b, supply));
            replacements.push(covers.clone());
        }
        let k = blocks.len();
        for letters in ordered_injections(supply, k) {
            let mut picks = vec![0usize; k];
            loop {
                let mut ws: Vec<Word> = Vec::with_capacity(2 * n);
                for (i, block) in blocks.iter().enumerate() {
                    let a = Letter::paired(letters[i], false);
                    let b = a.complement();
                    for &w in block.words() {
                        ws.push(w.push(a).unwrap());
                    }
                    for &w in replacements[i][picks[i]].words() {
                        ws.push(w.push(b).unwrap());
                    }
                }
                emit(Code::new(v.dim() + 1, ws).unwrap());
                // odometer over replacement picks
                let mut i = k;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    picks[i] += 1;
                    if picks[i] < replacements[i].len() {
                        break;
                    }
                    picks[i] = 0;
                    if i == 0 {
                        i = usize::MAX;
                        break;
                    }
                }
                if i == usize::MAX {
                    break;
                }
            }
        }
    }
}

/// Vector form of [`raise_each`] over a whole family.
pub fn raise_tilings(prev: &[Code], supply: &[u8]) -> Vec<Code> {
    let mut out = Vec::new();
    let mut cover_cache: HashMap<Code, Vec<Code>> = HashMap::new();
    for v in prev {
        raise_each(v, supply, &mut cover_cache, &mut |c| out.push(c));
    }
    out
}

/// Classifies every tiling code of the given dimension over `supply`
/// without materializing the family. Dimension four streams the raising
/// of each three-dimensional code straight into per-worker class maps.
pub fn classify_all_tilings(dim: u8, supply: &[u8]) -> Vec<crate::iso::CodeClass> {
    use crate::iso::{canonical_form, finish_classes, merge_class_maps};
    use crate::text::serialize;
    use rayon::prelude::*;
    use std::collections::HashMap as Map;

    if dim <= 3 {
        return crate::iso::classify(all_tilings(dim, supply));
    }
    assert_eq!(dim, 4);
    let prev = all_tilings(3, supply);
    let classes = prev
        .par_iter()
        .fold(
            Map::new,
            |mut acc: Map<String, (Code, usize)>, v| {
                let mut cache = Map::new();
                raise_each(v, supply, &mut cache, &mut |c| {
                    let form = canonical_form(&c);
                    acc.entry(serialize(&form))
                        .and_modify(|e| e.1 += 1)
                        .or_insert((form, 1));
                });
                acc
            },
        )
        .reduce(Map::new, merge_class_maps);
    finish_classes(classes)
}

/// All proper codes equivalent to the single word `w`: every star position
/// is filled by grafting a cube tiling code over `supply` onto the star
/// block.
pub fn star_expansions(w: Word, supply: &[u8]) -> Result<Vec<Code>> {
    let stars = w.star_positions();
    if stars.is_empty() {
        return Ok(vec![Code::new(w.dim(), [w]).unwrap()]);
    }
    if supply.is_empty() {
        return Err(Error::EmptySupply);
    }
    let grafts = all_tilings(stars.len() as u8, supply);
    Ok(grafts
        .into_iter()
        .map(|t| {
            let ws = t.words().iter().map(|g| {
                let mut filled = w;
                for (j, &pos) in stars.iter().enumerate() {
                    filled = filled.with_letter(pos, g.letter(j));
                }
                filled
            });
            Code::new(w.dim(), ws).unwrap()
        })
        .collect())
}

/// Expands a partition code into cube tiling codes by independently
/// replacing every improper word. Streams each result into `emit`.
pub fn expand_code_each(c: &Code, supply: &[u8], emit: &mut impl FnMut(Code)) -> Result<()> {
    let mut proper: Vec<Word> = Vec::new();
    let mut improper: Vec<Word> = Vec::new();
    for &w in c.words() {
        if w.is_proper() {
            proper.push(w);
        } else {
            improper.push(w);
        }
    }
    let expansions: Vec<Vec<Code>> = improper
        .iter()
        .map(|&w| star_expansions(w, supply))
        .collect::<Result<_>>()?;
    let mut picks = vec![0usize; improper.len()];
    loop {
        let mut ws = proper.clone();
        for (i, exp) in expansions.iter().enumerate() {
            ws.extend_from_slice(exp[picks[i]].words());
        }
        let code = Code::new(c.dim(), ws).unwrap();
        debug_assert_eq!(code.len(), 1 << c.dim());
        emit(code);
        let mut i = expansions.len();
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            picks[i] += 1;
            if picks[i] < expansions[i].len() {
                break;
            }
            picks[i] = 0;
            if i == 0 {
                return Ok(());
            }
        }
    }
}

/// Vector form of [`expand_code_each`].
pub fn expand_code(c: &Code, supply: &[u8]) -> Result<Vec<Code>> {
    let mut out = Vec::new();
    expand_code_each(c, supply, &mut |code| out.push(code))?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// An ordered partition of a code into disjoint nonempty blocks.
#[derive(Clone, Debug)]
pub struct CodePartition {
    blocks: Vec<Code>,
}

impl CodePartition {
    pub fn new(of: &Code, blocks: Vec<Code>) -> Result<CodePartition> {
        let total: usize = blocks.iter().map(|b| b.len()).sum();
        let mut all: Vec<Word> = blocks.iter().flat_map(|b| b.words().iter().copied()).collect();
        all.sort();
        all.dedup();
        if blocks.iter().any(|b| b.is_empty())
            || total != of.len()
            || all.len() != total
            || all != of.words()
        {
            return Err(Error::NotPolybox);
        }
        Ok(CodePartition { blocks })
    }

    /// Blocks of a set partition given by word indices.
    pub fn from_indices(of: &Code, partition: &[Vec<usize>]) -> Result<CodePartition> {
        let words = of.words();
        let blocks = partition
            .iter()
            .map(|idxs| Code::new(of.dim(), idxs.iter().map(|&i| words[i])).unwrap())
            .collect();
        CodePartition::new(of, blocks)
    }

    pub fn blocks(&self) -> &[Code] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// The cylinder construction: stacks paired partition blocks of two
/// `d`-dimensional tiling codes along a new position, one fresh pair per
/// block. Valid exactly when paired blocks are equivalent.
pub fn cylinder_extend(
    v: &Code,
    w: &Code,
    pv: &CodePartition,
    pw: &CodePartition,
    pairs: &[u8],
) -> Result<Code> {
    if v.dim() != w.dim() {
        return Err(Error::DimensionMismatch(v.dim(), w.dim()));
    }
    if pv.len() != pw.len() || pv.len() != pairs.len() {
        return Err(Error::ShapeMismatch);
    }
    for i in 0..pv.len() {
        if !equivalent(&pv.blocks[i], &pw.blocks[i])? {
            return Err(Error::BlocksNotEquivalent(i));
        }
    }
    let mut ws = Vec::with_capacity(v.len() + w.len());
    for (i, &p) in pairs.iter().enumerate() {
        let a = Letter::paired(p, false);
        for &word in pv.blocks[i].words() {
            ws.push(word.push(a)?);
        }
        for &word in pw.blocks[i].words() {
            ws.push(word.push(a.complement())?);
        }
    }
    Code::new(v.dim() + 1, ws)
}

/// Dimension-4 codes whose last position uses eight pairs: every block is
/// a singleton, paired with itself.
pub fn build_n48(n3: &[Code]) -> Vec<Code> {
    let pairs: Vec<u8> = (0..8).collect();
    n3.iter()
        .map(|v| {
            let singletons: Vec<Vec<usize>> = (0..v.len()).map(|i| vec![i]).collect();
            let p = CodePartition::from_indices(v, &singletons).unwrap();
            cylinder_extend(v, v, &p, &p, &pairs).unwrap()
        })
        .collect()
}

/// Dimension-4 codes whose last position uses seven pairs. The first
/// family keeps both sides equal and its doubled block is never a twin
/// pair; the second replaces a twin-pair block by any equivalent twin
/// pair. Returns `(first, second)`.
pub fn build_n47(n3: &[Code]) -> (Vec<Code>, Vec<Code>) {
    let pairs: Vec<u8> = (0..7).collect();
    let mut family_a = Vec::new();
    let mut family_b = Vec::new();
    for v in n3 {
        let n = v.len();
        let words = v.words();
        for i in 0..n {
            for j in i + 1..n {
                let mut blocks: Vec<Vec<usize>> = vec![vec![i, j]];
                blocks.extend((0..n).filter(|&x| x != i && x != j).map(|x| vec![x]));
                let pv = CodePartition::from_indices(v, &blocks).unwrap();
                match words[i].twin_position(words[j]) {
                    None => {
                        family_a.push(cylinder_extend(v, v, &pv, &pv, &pairs).unwrap());
                    }
                    Some(pos) => {
                        // replace by the twin pair over any pair within
                        // the used alphabet plus one fresh pair
                        let fresh = v.pairs_used();
                        let mut candidates = v.position_pairs(pos);
                        if fresh < 16 && !candidates.contains(&fresh) {
                            candidates.push(fresh);
                        }
                        for t in candidates {
                            let a = words[i].with_letter(pos, Letter::paired(t, false));
                            let b = words[i].with_letter(pos, Letter::paired(t, true));
                            let replacement = Code::new(v.dim(), [a, b]).unwrap();
                            let mut w_blocks = pv.blocks().to_vec();
                            w_blocks[0] = replacement.clone();
                            let w_words: Vec<Word> = w_blocks
                                .iter()
                                .flat_map(|b| b.words().iter().copied())
                                .collect();
                            let w = Code::new(v.dim(), w_words).unwrap();
                            if w.len() != v.len() {
                                continue; // replacement collided with a singleton
                            }
                            let pw = CodePartition::new(&w, w_blocks).unwrap();
                            family_b.push(cylinder_extend(v, &w, &pv, &pw, &pairs).unwrap());
                        }
                    }
                }
            }
        }
    }
    family_a.sort();
    family_a.dedup();
    family_b.sort();
    family_b.dedup();
    (family_a, family_b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse, parse_word};

    fn code(s: &str) -> Code {
        parse(s).unwrap()
    }

    #[test]
    fn tiling_counts_in_low_dimensions() {
        assert_eq!(all_tilings(1, &[0]).len(), 1);
        assert_eq!(all_tilings(1, &[0, 1]).len(), 2);
        // 2k^3 - k^2 codes in dimension two over k pairs
        assert_eq!(all_tilings(2, &[0, 1]).len(), 12);
        assert_eq!(all_tilings(2, &[0, 1, 2]).len(), 45);
        assert_eq!(all_tilings(2, &[0, 1, 2, 3]).len(), 112);
    }

    #[test]
    fn raising_matches_the_direct_search() {
        let direct = all_tilings(3, &[0, 1]);
        let mut raised = raise_tilings(&all_tilings(2, &[0, 1]), &[0, 1]);
        raised.sort();
        let direct_sorted: Vec<Code> = direct;
        assert_eq!(raised.len(), direct_sorted.len(), "raising must be exact");
        assert_eq!(raised, direct_sorted);
    }

    #[test]
    fn star_expansion_shapes() {
        let w = parse_word("*aaa").unwrap();
        let exps = star_expansions(w, &[2]).unwrap();
        assert_eq!(exps.len(), 1);
        assert_eq!(format!("{:?}", exps[0]), "{caaa Caaa}");
        let w2 = parse_word("a*Aa").unwrap();
        let exps2 = star_expansions(w2, &[3]).unwrap();
        assert_eq!(format!("{:?}", exps2[0]), "{adAa aDAa}");
        assert!(star_expansions(parse_word("a*").unwrap(), &[]).is_err());
        // every expansion is equivalent to the source word
        for e in &exps2 {
            let src = Code::new(4, [w2]).unwrap();
            assert!(equivalent(&src, e).unwrap());
        }
    }

    #[test]
    fn expanding_a_partition_code_yields_tiling_codes() {
        let c = code("a*aa a**A A*a* A*AA **Aa");
        let out = expand_code(&c, &[0, 1]).unwrap();
        assert!(!out.is_empty());
        for t in &out {
            assert!(t.is_tiling_code());
            assert!(equivalent(&c, t).unwrap());
        }
        // an all-proper code expands to itself
        let proper = code("aa aA Aa AA");
        assert_eq!(expand_code(&proper, &[0, 1]).unwrap(), vec![proper]);
    }

    #[test]
    fn cylinder_extension_of_layered_blocks() {
        let v = code("a A");
        let p = CodePartition::from_indices(&v, &[vec![0, 1]]).unwrap();
        let u = cylinder_extend(&v, &v, &p, &p, &[1]).unwrap();
        assert_eq!(format!("{u:?}"), "{ab aB Ab AB}");
        // non-equivalent blocks are rejected
        let w = code("a A");
        let pw = CodePartition::from_indices(&w, &[vec![0], vec![1]]).unwrap();
        let pv = CodePartition::from_indices(&v, &[vec![1], vec![0]]).unwrap();
        assert!(matches!(
            cylinder_extend(&v, &w, &pv, &pw, &[1, 2]),
            Err(Error::BlocksNotEquivalent(0))
        ));
    }

    #[test]
    fn twin_pair_block_replacements_match_the_cover_search() {
        let twin = code("aab aaB");
        let covers = covers_of_region(&twin, &[0, 1, 2]);
        assert_eq!(covers.len(), 3);
        for c in &covers {
            assert_eq!(c.len(), 2);
            assert!(c.words()[0].twin_position(c.words()[1]).is_some());
        }
        // a non-twin two-word block is rigid
        let rigid = code("aa AA");
        assert_eq!(covers_of_region(&rigid, &[0, 1]), vec![rigid]);
        // a single proper word is rigid
        let single = code("ab");
        assert_eq!(covers_of_region(&single, &[0, 1]), vec![single]);
    }
}
