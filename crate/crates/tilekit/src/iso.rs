//! Isomorphism machinery: compressed forms, count-pair matrices, twin-pair
//! invariants, the isomorphism decision, canonical keys, and
//! classification.
//!
//! An isomorphism is a position permutation composed with independent
//! per-position letter bijections that commute with complementation and
//! fix the star. Candidate maps are cut down by two cheap invariants (the
//! count-pair matrix up to row/entry permutation, and the twin-pair
//! vector up to permutation); the per-pair sign freedom at the heaviest
//! position is resolved by matching projected subcodes letter by letter
//! instead of enumerating the flips.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::code::Code;
use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::text::serialize;
use crate::word::Word;

/// Counts `(|V at pair j|, |V at pair j'|)` per position and pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixProfile {
    /// `rows[i][j]` is the count pair of letter pair `j` at position `i`.
    pub rows: Vec<Vec<(u32, u32)>>,
}

impl MatrixProfile {
    pub fn of(c: &Code) -> MatrixProfile {
        let dim = c.dim() as usize;
        let width = c.pairs_used().max(1) as usize;
        let mut rows = vec![vec![(0u32, 0u32); width]; dim];
        for w in c.words() {
            for (i, l) in w.letters().enumerate() {
                if let Some(p) = l.pair() {
                    let entry = &mut rows[i][p as usize];
                    if l.primed() {
                        entry.1 += 1;
                    } else {
                        entry.0 += 1;
                    }
                }
            }
        }
        MatrixProfile { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn row_support(&self, i: usize) -> usize {
        self.rows[i].iter().filter(|e| **e != (0, 0)).count()
    }

    /// Row content up to entry order, entry orientation, and zero padding.
    fn row_key(&self, i: usize) -> Vec<(u32, u32)> {
        let mut key: Vec<(u32, u32)> = self.rows[i]
            .iter()
            .filter(|e| **e != (0, 0))
            .map(|&(a, b)| (a.max(b), a.min(b)))
            .collect();
        key.sort_unstable_by(|a, b| b.cmp(a));
        key
    }

    fn sorted_row_keys(&self) -> Vec<Vec<(u32, u32)>> {
        let mut keys: Vec<_> = (0..self.dim()).map(|i| self.row_key(i)).collect();
        keys.sort();
        keys
    }

    /// Satisfies the compressed-form conditions: occurring pairs are
    /// left-justified in every row and rows carry nondecreasing support.
    pub fn is_compressed(&self) -> bool {
        let mut prev = 0usize;
        for i in 0..self.dim() {
            let support = self.row_support(i);
            if self.rows[i][..support].iter().any(|e| *e == (0, 0)) {
                return false;
            }
            if support < prev {
                return false;
            }
            prev = support;
        }
        true
    }
}

/// Equality up to row permutation, entry permutation within rows, and
/// orientation of each count pair.
pub fn profile_equal(p: &MatrixProfile, q: &MatrixProfile) -> Result<bool> {
    if p.dim() != q.dim() {
        return Err(Error::ShapeMismatch);
    }
    Ok(p.sorted_row_keys() == q.sorted_row_keys())
}

/// Twin-pair counts per differing position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinVector(pub Vec<u32>);

impl TwinVector {
    pub fn matches(&self, other: &TwinVector) -> bool {
        let mut a = self.0.clone();
        let mut b = other.0.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }
}

pub fn twin_vector(c: &Code) -> TwinVector {
    let mut t = vec![0u32; c.dim() as usize];
    let words = c.words();
    for (i, &v) in words.iter().enumerate() {
        for &u in &words[i + 1..] {
            if let Some(pos) = v.twin_position(u) {
                t[pos] += 1;
            }
        }
    }
    TwinVector(t)
}

/// A position permutation together with per-position letter bijections.
/// Output position `i` reads input position `sigma[i]` and maps its
/// letter through `letters[i]`.
#[derive(Clone, PartialEq, Eq)]
pub struct CandidateMap {
    pub sigma: Vec<u8>,
    pub letters: Vec<[u8; 33]>,
}

impl CandidateMap {
    pub fn identity(dim: usize) -> CandidateMap {
        let mut table = [0u8; 33];
        for (i, slot) in table.iter_mut().enumerate() {
            *slot = i as u8;
        }
        CandidateMap {
            sigma: (0..dim as u8).collect(),
            letters: vec![table; dim],
        }
    }

    /// Sets `pair -> (dst, flip)` at output position `i`.
    pub fn set_pair(&mut self, i: usize, src: u8, dst: u8, flip: bool) {
        self.letters[i][(src * 2) as usize] = dst * 2 + flip as u8;
        self.letters[i][(src * 2 + 1) as usize] = dst * 2 + (!flip) as u8;
    }

    pub fn apply_word(&self, w: Word) -> Word {
        let letters: Vec<Letter> = (0..w.dim() as usize)
            .map(|i| {
                let src = w.letter(self.sigma[i] as usize);
                Letter::from_code(self.letters[i][src.code() as usize]).unwrap()
            })
            .collect();
        Word::new(&letters).unwrap()
    }

    pub fn apply(&self, c: &Code) -> Code {
        Code::new(c.dim(), c.words().iter().map(|&w| self.apply_word(w))).unwrap()
    }

    /// `self` after `first`: `(self.compose(first)).apply(c) ==
    /// self.apply(&first.apply(c))`.
    pub fn compose(&self, first: &CandidateMap) -> CandidateMap {
        let dim = self.sigma.len();
        let mut sigma = vec![0u8; dim];
        let mut letters = vec![[0u8; 33]; dim];
        for i in 0..dim {
            let j = self.sigma[i] as usize;
            sigma[i] = first.sigma[j];
            for l in 0..33usize {
                letters[i][l] = self.letters[i][first.letters[j][l] as usize];
            }
        }
        CandidateMap { sigma, letters }
    }

    pub fn inverse(&self) -> CandidateMap {
        let dim = self.sigma.len();
        let mut sigma = vec![0u8; dim];
        let mut letters = vec![[0u8; 33]; dim];
        for i in 0..dim {
            sigma[self.sigma[i] as usize] = i as u8;
        }
        for j in 0..dim {
            let i = self.sigma[j] as usize;
            for l in 0..33usize {
                letters[i][self.letters[j][l] as usize] = l as u8;
            }
        }
        CandidateMap { sigma, letters }
    }

    /// Bijective, complement-respecting, star-fixing.
    pub fn is_valid(&self) -> bool {
        self.letters.iter().all(|table| {
            let mut seen = [false; 33];
            if table[32] != 32 {
                return false;
            }
            for l in 0..33usize {
                if table[l] > 32 || seen[table[l] as usize] {
                    return false;
                }
                seen[table[l] as usize] = true;
                let c = if l == 32 { 32 } else { l ^ 1 };
                let tc = if table[l] == 32 { 32 } else { table[l] ^ 1 };
                if table[c] != tc {
                    return false;
                }
            }
            true
        })
    }
}

impl std::fmt::Debug for CandidateMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "sigma={:?}", self.sigma)
    }
}

/// Per-position pair counts as `(pair, unprimed, primed)` triples.
fn position_counts(c: &Code, pos: usize) -> Vec<(u8, u32, u32)> {
    let mut counts = [(0u32, 0u32); 16];
    for w in c.words() {
        let l = w.letter(pos);
        if let Some(p) = l.pair() {
            if l.primed() {
                counts[p as usize].1 += 1;
            } else {
                counts[p as usize].0 += 1;
            }
        }
    }
    (0..16u8)
        .filter(|&p| counts[p as usize] != (0, 0))
        .map(|p| (p, counts[p as usize].0, counts[p as usize].1))
        .collect()
}

/// Rewrites a code into compressed form: rows sorted by support, occurring
/// pairs renamed to an initial segment ordered by descending total count,
/// each pair oriented so the unprimed letter is at least as frequent.
/// Ties keep their current order, which makes the rewrite idempotent.
/// Returns the rewritten code and the witnessing map.
pub fn compress(c: &Code) -> (Code, CandidateMap) {
    let dim = c.dim() as usize;
    let profile = MatrixProfile::of(c);
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&a, &b| {
        (profile.row_support(a), profile.row_key(a), a)
            .cmp(&(profile.row_support(b), profile.row_key(b), b))
    });

    let mut map = CandidateMap::identity(dim);
    map.sigma = order.iter().map(|&i| i as u8).collect();
    for (out_pos, &src_pos) in order.iter().enumerate() {
        let mut counts = position_counts(c, src_pos);
        // descending total, stable in the current pair order
        counts.sort_by(|a, b| (b.1 + b.2).cmp(&(a.1 + a.2)));
        let mut used = [false; 16];
        for (dst, &(p, unp, pr)) in counts.iter().enumerate() {
            map.set_pair(out_pos, p, dst as u8, pr > unp);
            used[p as usize] = true;
        }
        // park non-occurring pairs on the remaining indices
        let mut next = counts.len() as u8;
        for p in 0..16u8 {
            if !used[p as usize] {
                map.set_pair(out_pos, p, next, false);
                next += 1;
            }
        }
    }
    (map.apply(c), map)
}

fn multiset_eq(a: &mut Vec<Word>, b: &mut Vec<Word>) -> bool {
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

struct IsoSearch<'a> {
    cv: &'a Code,
    cu: &'a Code,
    dim: usize,
    pivot: usize,
    /// output position order for the non-pivot assignment phase
    phase: Vec<usize>,
    cv_counts: Vec<Vec<(u8, u32, u32)>>,
    cu_counts: Vec<Vec<(u8, u32, u32)>>,
}

impl<'a> IsoSearch<'a> {
    /// Enumerates count-respecting pair bijections at output position
    /// `level` and prunes by comparing mapped word prefixes.
    fn assign_position(&self, map: &mut CandidateMap, level: usize) -> Option<CandidateMap> {
        if level == self.phase.len() {
            return self.match_pivot(map);
        }
        let i = self.phase[level];
        let src = &self.cv_counts[map.sigma[i] as usize];
        let dst = &self.cu_counts[i];
        if src.len() != dst.len() {
            return None;
        }
        let mut taken = vec![false; dst.len()];
        self.assign_pairs(map, level, i, src, dst, 0, &mut taken)
    }

    #[allow(clippy::too_many_arguments)]
    fn assign_pairs(
        &self,
        map: &mut CandidateMap,
        level: usize,
        i: usize,
        src: &[(u8, u32, u32)],
        dst: &[(u8, u32, u32)],
        s: usize,
        taken: &mut [bool],
    ) -> Option<CandidateMap> {
        if s == src.len() {
            if !self.prefix_consistent(map, level) {
                return None;
            }
            return self.assign_position(map, level + 1);
        }
        let (p, unp, pr) = src[s];
        for (t, &(q, c_unp, c_pr)) in dst.iter().enumerate() {
            if taken[t] {
                continue;
            }
            for flip in [false, true] {
                let (mu, mp) = if flip { (pr, unp) } else { (unp, pr) };
                if (mu, mp) != (c_unp, c_pr) {
                    continue;
                }
                taken[t] = true;
                map.set_pair(i, p, q, flip);
                if let Some(found) = self.assign_pairs(map, level, i, src, dst, s + 1, taken) {
                    return Some(found);
                }
                taken[t] = false;
                if unp == pr && !flip {
                    continue; // the flipped branch is distinct only here
                }
                break;
            }
        }
        None
    }

    /// Multiset equality of mapped projections over the first `level + 1`
    /// processed positions.
    fn prefix_consistent(&self, map: &CandidateMap, level: usize) -> bool {
        let positions = &self.phase[..=level];
        let n = positions.len() as u8;
        let mut mapped: Vec<Word> = self
            .cv
            .words()
            .iter()
            .map(|w| {
                Word::build(n, |j| {
                    let i = positions[j];
                    let l = w.letter(map.sigma[i] as usize);
                    Letter::from_code(map.letters[i][l.code() as usize]).unwrap()
                })
            })
            .collect();
        let mut target: Vec<Word> = self
            .cu
            .words()
            .iter()
            .map(|w| Word::build(n, |j| w.letter(positions[j])))
            .collect();
        multiset_eq(&mut mapped, &mut target)
    }

    /// Resolves the pivot position by matching projected subcodes per
    /// letter, pair against pair, then verifies the assembled map.
    fn match_pivot(&self, map: &mut CandidateMap) -> Option<CandidateMap> {
        let p = self.pivot;
        let src_pos = map.sigma[p] as usize;
        let others: Vec<usize> = (0..self.dim).filter(|&i| i != p).collect();

        let project_mapped = |w: &Word| -> Word {
            let letters: Vec<Letter> = others
                .iter()
                .map(|&i| {
                    let l = w.letter(map.sigma[i] as usize);
                    Letter::from_code(map.letters[i][l.code() as usize]).unwrap()
                })
                .collect();
            Word::new(&letters).unwrap()
        };
        let project_plain = |w: &Word| -> Word {
            let letters: Vec<Letter> = others.iter().map(|&i| w.letter(i)).collect();
            Word::new(&letters).unwrap()
        };

        let mut src_fibers: HashMap<Letter, Vec<Word>> = HashMap::new();
        for w in self.cv.words() {
            src_fibers
                .entry(w.letter(src_pos))
                .or_default()
                .push(project_mapped(w));
        }
        let mut dst_fibers: HashMap<Letter, Vec<Word>> = HashMap::new();
        for w in self.cu.words() {
            dst_fibers
                .entry(w.letter(p))
                .or_default()
                .push(project_plain(w));
        }
        for f in src_fibers.values_mut().chain(dst_fibers.values_mut()) {
            f.sort_unstable();
        }

        // the star fiber must transfer verbatim
        let empty: Vec<Word> = Vec::new();
        if src_fibers.get(&Letter::STAR).unwrap_or(&empty)
            != dst_fibers.get(&Letter::STAR).unwrap_or(&empty)
        {
            return None;
        }

        // group pairs by the unordered pair of their letter fibers
        type FiberKey = (Vec<Word>, Vec<Word>);
        let group = |fibers: &HashMap<Letter, Vec<Word>>, pairs: &[(u8, u32, u32)]| {
            let mut groups: HashMap<FiberKey, Vec<(u8, bool)>> = HashMap::new();
            for &(pair, _, _) in pairs {
                let f0 = fibers
                    .get(&Letter::paired(pair, false))
                    .cloned()
                    .unwrap_or_default();
                let f1 = fibers
                    .get(&Letter::paired(pair, true))
                    .cloned()
                    .unwrap_or_default();
                // orient the key; remember whether it was swapped
                if f0 <= f1 {
                    groups.entry((f0, f1)).or_default().push((pair, false));
                } else {
                    groups.entry((f1, f0)).or_default().push((pair, true));
                }
            }
            groups
        };
        let src_groups = group(&src_fibers, &self.cv_counts[src_pos]);
        let dst_groups = group(&dst_fibers, &self.cu_counts[p]);
        if src_groups.len() != dst_groups.len() {
            return None;
        }
        for (key, srcs) in &src_groups {
            match dst_groups.get(key) {
                Some(dsts) if dsts.len() == srcs.len() => {
                    for (&(sp, s_swapped), &(dp, d_swapped)) in srcs.iter().zip(dsts) {
                        map.set_pair(p, sp, dp, s_swapped != d_swapped);
                    }
                }
                _ => return None,
            }
        }
        // exact check; the grouping above guarantees it
        if map.apply(self.cv) == *self.cu {
            Some(map.clone())
        } else {
            None
        }
    }
}

/// Decides isomorphism and returns a witnessing map with
/// `witness.apply(v) == u`.
pub fn isomorphic(v: &Code, u: &Code) -> Result<Option<CandidateMap>> {
    if v.dim() != u.dim() {
        return Err(Error::DimensionMismatch(v.dim(), u.dim()));
    }
    if v.len() != u.len() {
        return Ok(None);
    }
    if v.is_empty() {
        return Ok(Some(CandidateMap::identity(v.dim() as usize)));
    }
    let (cv, mv) = compress(v);
    let (cu, mu) = compress(u);
    let pv = MatrixProfile::of(&cv);
    let pu = MatrixProfile::of(&cu);
    if !profile_equal(&pv, &pu)? || !twin_vector(&cv).matches(&twin_vector(&cu)) {
        return Ok(None);
    }
    let dim = v.dim() as usize;
    if cv
        .words()
        .iter()
        .map(|w| w.star_count())
        .sum::<u32>()
        != cu.words().iter().map(|w| w.star_count()).sum::<u32>()
    {
        return Ok(None);
    }

    let cv_counts: Vec<_> = (0..dim).map(|i| position_counts(&cv, i)).collect();
    let cu_counts: Vec<_> = (0..dim).map(|i| position_counts(&cu, i)).collect();
    let pivot = dim - 1; // compressed rows put the widest support last
    let mut phase: Vec<usize> = (0..dim).filter(|&i| i != pivot).collect();
    phase.sort_by_key(|&i| cu_counts[i].len());

    // row keys gate the position permutation
    let row_keys_v: Vec<_> = (0..dim).map(|i| (pv.row_support(i), pv.row_key(i))).collect();
    let row_keys_u: Vec<_> = (0..dim).map(|i| (pu.row_support(i), pu.row_key(i))).collect();

    let search = IsoSearch {
        cv: &cv,
        cu: &cu,
        dim,
        pivot,
        phase,
        cv_counts,
        cu_counts,
    };

    let mut sigma = vec![u8::MAX; dim];
    let mut used = vec![false; dim];
    fn sigmas(
        i: usize,
        dim: usize,
        row_keys_v: &[(usize, Vec<(u32, u32)>)],
        row_keys_u: &[(usize, Vec<(u32, u32)>)],
        sigma: &mut Vec<u8>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<u8>>,
    ) {
        if i == dim {
            out.push(sigma.clone());
            return;
        }
        for j in 0..dim {
            if !used[j] && row_keys_v[j] == row_keys_u[i] {
                used[j] = true;
                sigma[i] = j as u8;
                sigmas(i + 1, dim, row_keys_v, row_keys_u, sigma, used, out);
                used[j] = false;
            }
        }
    }
    let mut all_sigmas = Vec::new();
    sigmas(
        0,
        dim,
        &row_keys_v,
        &row_keys_u,
        &mut sigma,
        &mut used,
        &mut all_sigmas,
    );

    for sigma in all_sigmas {
        let mut map = CandidateMap::identity(dim);
        map.sigma = sigma;
        if let Some(found) = search.assign_position(&mut map, 0) {
            // witness from v to u through the compressed forms
            let witness = mu.inverse().compose(&found.compose(&mv));
            debug_assert_eq!(witness.apply(v), *u);
            return Ok(Some(witness));
        }
    }
    Ok(None)
}

const UNASSIGNED: u8 = 0xff;

/// State of the canonical-form search for one position permutation.
/// Fixed-size and copyable so branching never allocates.
#[derive(Clone, Copy)]
struct KeyState {
    /// per output position and source pair: `dst * 2 + flip`, or unassigned
    assigned: [[u8; 16]; 8],
    next_free: [u8; 8],
    used: u32,
    /// strictly better than the incumbent so far
    better: bool,
}

#[inline]
fn optimistic_image(w: Word, sigma: &[usize], st: &KeyState) -> Word {
    Word::build(w.dim(), |i| {
        let l = w.letter(sigma[i]);
        match l.pair() {
            None => Letter::STAR,
            Some(p) => {
                let slot = st.assigned[i][p as usize];
                if slot == UNASSIGNED {
                    Letter::paired(st.next_free[i], false)
                } else {
                    let flip = slot & 1 == 1;
                    Letter::paired(slot >> 1, l.primed() != flip)
                }
            }
        }
    })
}

fn commit(w: Word, idx: usize, sigma: &[usize], st: &mut KeyState) -> Word {
    for i in 0..w.dim() as usize {
        let l = w.letter(sigma[i]);
        if let Some(p) = l.pair() {
            if st.assigned[i][p as usize] == UNASSIGNED {
                st.assigned[i][p as usize] = st.next_free[i] * 2 + l.primed() as u8;
                st.next_free[i] += 1;
            }
        }
    }
    st.used |= 1 << idx;
    optimistic_image(w, sigma, st)
}

fn key_search(
    words: &[Word],
    sigma: &[usize],
    st: KeyState,
    committed: &mut Vec<Word>,
    best: &mut Option<Vec<Word>>,
) {
    use std::cmp::Ordering;
    let depth = committed.len();
    if depth == words.len() {
        if best.is_none() || st.better {
            *best = Some(committed.clone());
        }
        return;
    }
    let mut min_image = Word::build(words[0].dim(), |_| Letter::STAR);
    let mut found = false;
    let mut candidates: [usize; 32] = [0; 32];
    let mut n_candidates = 0usize;
    for (idx, &w) in words.iter().enumerate() {
        if st.used >> idx & 1 == 1 {
            continue;
        }
        let img = optimistic_image(w, sigma, &st);
        if !found {
            min_image = img;
            found = true;
            candidates[0] = idx;
            n_candidates = 1;
        } else {
            match img.cmp(&min_image) {
                Ordering::Less => {
                    min_image = img;
                    candidates[0] = idx;
                    n_candidates = 1;
                }
                Ordering::Equal => {
                    candidates[n_candidates] = idx;
                    n_candidates += 1;
                }
                Ordering::Greater => {}
            }
        }
    }
    let mut better = st.better;
    if !better {
        if let Some(b) = best {
            match min_image.cmp(&b[depth]) {
                Ordering::Greater => return,
                Ordering::Less => better = true,
                Ordering::Equal => {}
            }
        }
    }
    for &idx in &candidates[..n_candidates] {
        let mut next = st;
        next.better = better;
        let img = commit(words[idx], idx, sigma, &mut next);
        committed.push(img);
        key_search(words, sigma, next, committed, best);
        committed.pop();
    }
}

/// The lexicographically least compressed isomorph of `c`.
pub fn canonical_form(c: &Code) -> Code {
    if c.is_empty() {
        return c.clone();
    }
    assert!(c.len() <= 32, "canonical form supports up to 32 words");
    let dim = c.dim() as usize;
    let profile = MatrixProfile::of(c);
    let supports: Vec<usize> = (0..dim).map(|i| profile.row_support(i)).collect();

    // position orders with nondecreasing support
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by_key(|&i| supports[i]);
    let mut sigmas: Vec<Vec<usize>> = Vec::new();
    permute_ties(&order, &supports, 0, &mut Vec::new(), &mut sigmas);

    // identical columns: swapping them changes nothing, keep one order
    let columns: Vec<Vec<u8>> = (0..dim)
        .map(|i| c.words().iter().map(|w| w.letter(i).code()).collect())
        .collect();
    let mut column_ids: Vec<usize> = Vec::with_capacity(dim);
    for i in 0..dim {
        let id = columns[..i]
            .iter()
            .position(|col| *col == columns[i])
            .unwrap_or(i);
        column_ids.push(id);
    }
    let mut seen = std::collections::HashSet::new();
    sigmas.retain(|sigma| seen.insert(sigma.iter().map(|&j| column_ids[j]).collect::<Vec<_>>()));

    let mut best: Option<Vec<Word>> = None;
    let mut committed: Vec<Word> = Vec::with_capacity(c.len());
    for sigma in &sigmas {
        let st = KeyState {
            assigned: [[UNASSIGNED; 16]; 8],
            next_free: [0; 8],
            used: 0,
            better: false,
        };
        committed.clear();
        key_search(c.words(), sigma, st, &mut committed, &mut best);
    }
    Code::new(c.dim(), best.unwrap()).unwrap()
}

fn permute_ties(
    order: &[usize],
    supports: &[usize],
    start: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if start == order.len() {
        out.push(cur.clone());
        return;
    }
    let mut end = start;
    while end < order.len() && supports[order[end]] == supports[order[start]] {
        end += 1;
    }
    let mut group: Vec<usize> = order[start..end].to_vec();
    permutations(&mut group, 0, &mut |perm| {
        cur.extend_from_slice(perm);
        permute_ties(order, supports, end, cur, out);
        cur.truncate(cur.len() - perm.len());
    });
}

fn permutations(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Canonical serialization; equal keys exactly when isomorphic.
pub fn canonical_key(c: &Code) -> String {
    serialize(&canonical_form(c))
}

/// One isomorphism class of an input family.
#[derive(Clone, Debug)]
pub struct CodeClass {
    pub representative: Code,
    pub size: usize,
    pub canonical: String,
    pub tp: TwinVector,
    pub profile: MatrixProfile,
}

/// Partitions a family by isomorphism. Representatives are the canonical
/// forms; classes come out sorted by canonical key.
pub fn classify(codes: Vec<Code>) -> Vec<CodeClass> {
    let classes = codes
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<String, (Code, usize)>, c| {
            let form = canonical_form(&c);
            acc.entry(serialize(&form))
                .and_modify(|e| e.1 += 1)
                .or_insert((form, 1));
            acc
        })
        .reduce(HashMap::new, merge_class_maps);
    finish_classes(classes)
}

pub(crate) fn merge_class_maps(
    mut a: HashMap<String, (Code, usize)>,
    b: HashMap<String, (Code, usize)>,
) -> HashMap<String, (Code, usize)> {
    for (key, (form, n)) in b {
        a.entry(key)
            .and_modify(|e| e.1 += n)
            .or_insert((form, n));
    }
    a
}

pub(crate) fn finish_classes(classes: HashMap<String, (Code, usize)>) -> Vec<CodeClass> {
    let mut out: Vec<CodeClass> = classes
        .into_iter()
        .map(|(canonical, (representative, size))| CodeClass {
            tp: twin_vector(&representative),
            profile: MatrixProfile::of(&representative),
            representative,
            size,
            canonical,
        })
        .collect();
    out.sort_by(|a, b| a.canonical.cmp(&b.canonical));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse;

    fn code(s: &str) -> Code {
        parse(s).unwrap()
    }

    /// The sixteen-word example used throughout: position 3 carries seven
    /// against seven of the first pair plus a second pair, position 2 six
    /// against six plus two pairs.
    fn wide_example() -> Code {
        code("acaa acAa adaA aCda aCDa aDaA AaaA Aaca AaCa AAab AAaB AAAa beAA bEAA BdAA BDAA")
    }

    #[test]
    fn wide_example_is_a_tiling_code() {
        let v = wide_example();
        assert!(v.is_tiling_code());
    }

    #[test]
    fn compression_reaches_the_expected_profile() {
        let (compressed, map) = compress(&wide_example());
        assert!(map.is_valid());
        assert_eq!(map.apply(&wide_example()), compressed);
        let p = MatrixProfile::of(&compressed);
        assert!(p.is_compressed());
        let expected = MatrixProfile {
            rows: vec![
                vec![(6, 6), (2, 2), (0, 0), (0, 0)],
                vec![(7, 7), (1, 1), (0, 0), (0, 0)],
                vec![(6, 6), (1, 1), (1, 1), (0, 0)],
                vec![(3, 3), (2, 2), (2, 2), (1, 1)],
            ],
        };
        assert!(profile_equal(&p, &expected).unwrap());
    }

    #[test]
    fn compression_is_idempotent() {
        for c in [
            wide_example(),
            code("aa aA Aa AA"),
            code("a*aa a**A A*a* A*AA **Aa"),
            code("aaaa aaAb aAA* a*aA AaaB Aa*b AAAa AA*A *aAB *Aaa"),
        ] {
            let (once, _) = compress(&c);
            let (twice, map2) = compress(&once);
            assert_eq!(once, twice);
            assert_eq!(map2.apply(&once), once);
            assert_eq!(compress(&code("aa aA Aa AA")).0, code("aa aA Aa AA"));
        }
    }

    #[test]
    fn profile_equality_up_to_elementary_operations() {
        let m_v = MatrixProfile {
            rows: vec![
                vec![(6, 6), (2, 2)],
                vec![(7, 7), (1, 1)],
                vec![(6, 6), (1, 1), (1, 1)],
                vec![(3, 3), (2, 2), (2, 2), (1, 1)],
            ],
        };
        let m_u = MatrixProfile {
            rows: vec![
                vec![(1, 1), (7, 7)],
                vec![(6, 6), (2, 2)],
                vec![(6, 6), (1, 1), (1, 1)],
                vec![(3, 3), (2, 2), (2, 2), (1, 1)],
            ],
        };
        assert!(profile_equal(&m_v, &m_u).unwrap());
        let different = MatrixProfile {
            rows: vec![
                vec![(6, 6), (2, 2)],
                vec![(8, 8)],
                vec![(6, 6), (1, 1), (1, 1)],
                vec![(3, 3), (2, 2), (2, 2), (1, 1)],
            ],
        };
        assert!(!profile_equal(&m_v, &different).unwrap());
        assert!(profile_equal(
            &m_v,
            &MatrixProfile { rows: vec![vec![(1, 1)]] }
        )
        .is_err());
    }

    #[test]
    fn twin_vectors() {
        assert_eq!(twin_vector(&code("aa aA Aa AA")).0, vec![2, 2]);
        let c1 = code("a*aa a**A A*a* A*AA **Aa");
        assert_eq!(twin_vector(&c1).0, vec![0, 0, 0, 0]);
    }

    #[test]
    fn isomorphism_finds_a_constructed_witness() {
        let v = wide_example();
        // scramble: rotate positions, swap pair roles, flip signs
        let mut map = CandidateMap::identity(4);
        map.sigma = vec![2, 0, 3, 1];
        map.set_pair(0, 0, 3, true);
        map.set_pair(0, 2, 0, false);
        map.set_pair(0, 3, 1, true);
        map.set_pair(0, 1, 2, false);
        map.set_pair(0, 4, 4, true);
        for i in 1..4 {
            map.set_pair(i, 0, 1, i == 2);
            map.set_pair(i, 1, 0, false);
            map.set_pair(i, 2, 4, true);
            map.set_pair(i, 3, 2, false);
            map.set_pair(i, 4, 3, i == 3);
        }
        assert!(map.is_valid());
        let u = map.apply(&v);
        let witness = isomorphic(&v, &u).unwrap().expect("must be isomorphic");
        assert_eq!(witness.apply(&v), u);
        assert!(witness.is_valid());
    }

    #[test]
    fn non_isomorphic_codes_are_rejected() {
        let simple = code("aa aA Aa AA");
        let other = code("aa aA Ab AB");
        assert!(isomorphic(&simple, &other).unwrap().is_none());
        assert!(isomorphic(&simple, &code("aaa aaA aAa aAA Aaa AaA AAa AAA")).is_err());
    }

    #[test]
    fn canonical_keys_are_orbit_constants() {
        let v = wide_example();
        let mut map = CandidateMap::identity(4);
        map.sigma = vec![1, 3, 0, 2];
        for i in 0..4 {
            map.set_pair(i, 0, 2, i % 2 == 0);
            map.set_pair(i, 1, 0, false);
            map.set_pair(i, 2, 1, true);
            map.set_pair(i, 3, 4, false);
            map.set_pair(i, 4, 3, true);
        }
        let u = map.apply(&v);
        assert_eq!(canonical_key(&v), canonical_key(&u));
        assert_ne!(canonical_key(&code("aa aA Aa AA")), canonical_key(&code("aa aA Ab AB")));
    }

    #[test]
    fn classification_groups_by_key() {
        let simple = code("aa aA Aa AA");
        let other = code("aa aA Ab AB");
        let mut map = CandidateMap::identity(2);
        map.sigma = vec![1, 0];
        map.set_pair(0, 0, 1, true);
        map.set_pair(0, 1, 0, false);
        map.set_pair(1, 0, 0, true);
        map.set_pair(1, 1, 1, false);
        let classes = classify(vec![simple.clone(), other.clone(), map.apply(&other)]);
        assert_eq!(classes.len(), 2);
        let sizes: Vec<usize> = classes.iter().map(|c| c.size).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 3);
        for class in &classes {
            assert_eq!(canonical_key(&class.representative), class.canonical);
        }
    }
}
