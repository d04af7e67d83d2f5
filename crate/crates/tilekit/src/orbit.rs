//! Orbit arithmetic: position alphabets, admissible position permutations,
//! minimal orbits via orbit-stabilizer, full orbit sizes, aggregate
//! counts, and the exact combinatorial quantities behind them. All counts
//! are exact big integers.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::code::Code;
use crate::error::{Error, Result};
use crate::iso::canonical_key;
use crate::letter::Letter;
use crate::word::Word;

pub fn factorial(n: u64) -> BigUint {
    let mut out = BigUint::one();
    for i in 2..=n {
        out *= i;
    }
    out
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut out = BigUint::one();
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// Stirling number of the second kind by the standard recurrence.
pub fn stirling2(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    if n == 0 {
        return BigUint::one();
    }
    if k == 0 {
        return BigUint::zero();
    }
    let mut prev = vec![BigUint::zero(); k as usize + 1];
    prev[0] = BigUint::one();
    for _ in 1..=n {
        let mut cur = vec![BigUint::zero(); k as usize + 1];
        for j in 1..=k as usize {
            cur[j] = &prev[j] * j as u64 + &prev[j - 1];
        }
        prev = cur;
    }
    prev[k as usize].clone()
}

/// Number of ways to spread `n` words over at least two of `n` letter
/// pairs: partitions into `k` blocks, an injective pair assignment each,
/// summed over `2 <= k <= n`.
pub fn c_number(n: u32) -> BigUint {
    let mut out = BigUint::zero();
    for k in 2..=n {
        out += binomial(n as u64, k as u64) * stirling2(n, k) * factorial(k as u64);
    }
    out
}

/// Order of the full map group in dimension `d` over `k` pairs:
/// `d! (k! 2^k)^d`.
pub fn group_order(d: u32, k: u32) -> BigUint {
    let per_position = factorial(k as u64) * BigUint::from(2u32).pow(k);
    factorial(d as u64) * per_position.pow(d)
}

/// Lower bound for the total count one dimension up, from the layered
/// codes and the same-base cylinder extensions:
/// `2^(d-1) m^2 + m C(2^(d-1))`.
pub fn layered_lower_bound(d: u32, m_prev: &BigUint) -> BigUint {
    let half = 1u32 << (d - 1);
    m_prev * m_prev * BigUint::from(2u32).pow(d as u32 - 1) + m_prev * c_number(half)
}

/// Letters occurring per position.
pub fn position_alphabets(c: &Code) -> Vec<Vec<Letter>> {
    (0..c.dim() as usize)
        .map(|i| c.position_letters(i))
        .collect()
}

/// Pairs occurring per position.
pub fn position_pair_counts(c: &Code) -> Vec<u8> {
    (0..c.dim() as usize)
        .map(|i| c.position_pairs(i).len() as u8)
        .collect()
}

/// All position permutations that move positions only within equal
/// letter-set classes.
pub fn sigma_group(c: &Code) -> Vec<Vec<u8>> {
    let dim = c.dim() as usize;
    let sets: Vec<Vec<Letter>> = position_alphabets(c);
    let mut out = Vec::new();
    let mut sigma = vec![0u8; dim];
    let mut used = vec![false; dim];
    fn rec(
        i: usize,
        dim: usize,
        sets: &[Vec<Letter>],
        sigma: &mut Vec<u8>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<u8>>,
    ) {
        if i == dim {
            out.push(sigma.clone());
            return;
        }
        for j in 0..dim {
            if !used[j] && (i == j || sets[i] == sets[j]) {
                used[j] = true;
                sigma[i] = j as u8;
                rec(i + 1, dim, sets, sigma, used, out);
                used[j] = false;
            }
        }
    }
    rec(0, dim, &sets, &mut sigma, &mut used, &mut out);
    debug_assert!(sigma_closed(&out), "admissible permutations must form a group");
    out
}

fn sigma_closed(group: &[Vec<u8>]) -> bool {
    let set: HashSet<&Vec<u8>> = group.iter().collect();
    for a in group {
        for b in group {
            let composed: Vec<u8> = (0..a.len()).map(|i| b[a[i] as usize]).collect();
            if !set.contains(&composed) {
                return false;
            }
        }
    }
    true
}

pub fn sigma_order(c: &Code) -> u64 {
    let sets = position_alphabets(c);
    let mut order = BigUint::one();
    let mut seen = vec![false; sets.len()];
    for i in 0..sets.len() {
        if seen[i] {
            continue;
        }
        let mut class = 0u64;
        for (j, s) in sets.iter().enumerate() {
            if s == &sets[i] {
                class += 1;
                seen[j] = true;
            }
        }
        order *= factorial(class);
    }
    u64::try_from(order).unwrap()
}

fn position_pair_stats(c: &Code, pos: usize) -> Vec<(u8, u32, u32)> {
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

/// Counts elements `(sigma, h)` of the restricted group that fix `c`:
/// sigma admissible, each `h_i` a pair bijection with signs on the
/// letters at position `i`.
fn stabilizer_order(c: &Code) -> u64 {
    let dim = c.dim() as usize;
    let stats: Vec<Vec<(u8, u32, u32)>> = (0..dim).map(|i| position_pair_stats(c, i)).collect();
    let mut total = 0u64;
    for sigma in sigma_group(c) {
        total += count_fixing_maps(c, &sigma, &stats);
    }
    total
}

fn count_fixing_maps(c: &Code, sigma: &[u8], stats: &[Vec<(u8, u32, u32)>]) -> u64 {
    let dim = c.dim() as usize;
    // order positions by ascending pair count for early pruning
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by_key(|&i| stats[i].len());

    struct Ctx<'a> {
        c: &'a Code,
        sigma: &'a [u8],
        stats: &'a [Vec<(u8, u32, u32)>],
        order: &'a [usize],
    }
    // letter maps per output position, identity by default
    fn rec(ctx: &Ctx, level: usize, maps: &mut Vec<[u8; 33]>) -> u64 {
        if level == ctx.order.len() {
            return 1;
        }
        let i = ctx.order[level];
        let src = &ctx.stats[ctx.sigma[i] as usize];
        let dst = &ctx.stats[i];
        if src.len() != dst.len() {
            return 0;
        }
        let mut taken = vec![false; dst.len()];
        assign(ctx, level, i, src, dst, 0, &mut taken, maps)
    }
    #[allow(clippy::too_many_arguments)]
    fn assign(
        ctx: &Ctx,
        level: usize,
        i: usize,
        src: &[(u8, u32, u32)],
        dst: &[(u8, u32, u32)],
        s: usize,
        taken: &mut [bool],
        maps: &mut Vec<[u8; 33]>,
    ) -> u64 {
        if s == src.len() {
            if !prefix_fixed(ctx, level, maps) {
                return 0;
            }
            return rec(ctx, level + 1, maps);
        }
        let (p, unp, pr) = src[s];
        let mut found = 0;
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
                maps[i][(p * 2) as usize] = q * 2 + flip as u8;
                maps[i][(p * 2 + 1) as usize] = q * 2 + (!flip) as u8;
                found += assign(ctx, level, i, src, dst, s + 1, taken, maps);
                taken[t] = false;
                if unp == pr && !flip {
                    continue;
                }
                break;
            }
        }
        found
    }
    fn prefix_fixed(ctx: &Ctx, level: usize, maps: &[[u8; 33]]) -> bool {
        let positions = &ctx.order[..=level];
        let n = positions.len() as u8;
        let mut mapped: Vec<Word> = ctx
            .c
            .words()
            .iter()
            .map(|w| {
                Word::build(n, |j| {
                    let i = positions[j];
                    let l = w.letter(ctx.sigma[i] as usize);
                    Letter::from_code(maps[i][l.code() as usize]).unwrap()
                })
            })
            .collect();
        let mut target: Vec<Word> = ctx
            .c
            .words()
            .iter()
            .map(|w| Word::build(n, |j| w.letter(positions[j])))
            .collect();
        mapped.sort_unstable();
        target.sort_unstable();
        mapped == target
    }

    let ctx = Ctx {
        c,
        sigma,
        stats,
        order: &order,
    };
    let mut maps = {
        let mut id = [0u8; 33];
        for (i, slot) in id.iter_mut().enumerate() {
            *slot = i as u8;
        }
        vec![id; dim]
    };
    rec(&ctx, 0, &mut maps)
}

/// Order of the restricted group: admissible permutations times per-pair
/// renamings with signs on each position alphabet.
pub fn restricted_group_order(c: &Code) -> BigUint {
    let mut order = BigUint::from(sigma_order(c));
    for k in position_pair_counts(c) {
        order *= factorial(k as u64) * BigUint::from(2u32).pow(k as u32);
    }
    order
}

/// Minimal orbit size by orbit-stabilizer within the restricted group.
pub fn minimal_orbit_size(c: &Code) -> BigUint {
    let group = restricted_group_order(c);
    let stab = BigUint::from(stabilizer_order(c));
    debug_assert!((&group % &stab).is_zero());
    group / stab
}

/// Brute-force minimal orbit: applies every element of the restricted
/// group. Exponential; for oracle checks on small codes only.
pub fn minimal_orbit_brute(c: &Code) -> BigUint {
    let dim = c.dim() as usize;
    let pair_lists: Vec<Vec<u8>> = (0..dim).map(|i| c.position_pairs(i)).collect();
    let mut images: HashSet<Code> = HashSet::new();
    for sigma in sigma_group(c) {
        // per output position the letters come from position sigma[i],
        // whose pair set equals the one at i
        let mut maps: Vec<Vec<(Vec<u8>, Vec<bool>)>> = Vec::new();
        for i in 0..dim {
            maps.push(pair_maps(&pair_lists[i]));
        }
        apply_all(c, &sigma, &maps, 0, &mut vec![None; dim], &mut images);
    }
    BigUint::from(images.len())
}

/// All bijections-with-signs of a pair list, as (target order, flips).
fn pair_maps(pairs: &[u8]) -> Vec<(Vec<u8>, Vec<bool>)> {
    let mut perms = Vec::new();
    let mut cur = pairs.to_vec();
    permute(&mut cur, 0, &mut |p| perms.push(p.to_vec()));
    let k = pairs.len();
    let mut out = Vec::new();
    for perm in &perms {
        for mask in 0..1u32 << k {
            out.push((
                perm.clone(),
                (0..k).map(|j| mask >> j & 1 == 1).collect(),
            ));
        }
    }
    out
}

fn permute(items: &mut Vec<u8>, k: usize, visit: &mut impl FnMut(&[u8])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

fn apply_all(
    c: &Code,
    sigma: &[u8],
    maps: &[Vec<(Vec<u8>, Vec<bool>)>],
    i: usize,
    chosen: &mut Vec<Option<usize>>,
    images: &mut HashSet<Code>,
) {
    if i == sigma.len() {
        let pair_lists: Vec<Vec<u8>> = (0..sigma.len())
            .map(|j| c.position_pairs(j))
            .collect();
        let words = c.words().iter().map(|w| {
            let letters: Vec<Letter> = (0..sigma.len())
                .map(|j| {
                    let l = w.letter(sigma[j] as usize);
                    match l.pair() {
                        None => Letter::STAR,
                        Some(p) => {
                            let (perm, flips) = &maps[j][chosen[j].unwrap()];
                            let src_pairs = &pair_lists[j];
                            let idx = src_pairs.iter().position(|&x| x == p).unwrap();
                            Letter::paired(perm[idx], l.primed() != flips[idx])
                        }
                    }
                })
                .collect();
            Word::new(&letters).unwrap()
        });
        images.insert(Code::new(c.dim(), words).unwrap());
        return;
    }
    for m in 0..maps[i].len() {
        chosen[i] = Some(m);
        apply_all(c, sigma, maps, i + 1, chosen, images);
    }
    chosen[i] = None;
}

/// Full orbit size over an alphabet of `k_alphabet` pairs:
/// `(d!/|Sigma|) prod_i C(k, k_i) o_min`.
pub fn orbit_size(c: &Code, k_alphabet: u32) -> Result<BigUint> {
    orbit_size_from(c, k_alphabet, &minimal_orbit_size(c))
}

fn orbit_size_from(c: &Code, k_alphabet: u32, o_min: &BigUint) -> Result<BigUint> {
    let ks = position_pair_counts(c);
    let max_k = ks.iter().copied().max().unwrap_or(0) as u32;
    if k_alphabet < max_k {
        return Err(Error::AlphabetTooSmall {
            need: max_k as u8,
            have: k_alphabet as u8,
        });
    }
    let mut out = factorial(c.dim() as u64) / sigma_order(c);
    for k in ks {
        out *= binomial(k_alphabet as u64, k as u64);
    }
    Ok(out * o_min)
}

/// Brute-force full orbit: applies every element of the whole map group
/// over `k_alphabet` pairs. For oracle checks on tiny codes only.
pub fn orbit_size_brute(c: &Code, k_alphabet: u32) -> BigUint {
    let dim = c.dim() as usize;
    let all_pairs: Vec<u8> = (0..k_alphabet as u8).collect();
    let mut images: HashSet<Code> = HashSet::new();
    let mut sigma: Vec<u8> = (0..dim as u8).collect();
    let mut sigmas = Vec::new();
    permute(&mut sigma, 0, &mut |s| sigmas.push(s.to_vec()));
    let maps: Vec<(Vec<u8>, Vec<bool>)> = pair_maps(&all_pairs);
    fn rec(
        c: &Code,
        sigma: &[u8],
        maps: &[(Vec<u8>, Vec<bool>)],
        j: usize,
        chosen: &mut Vec<usize>,
        images: &mut HashSet<Code>,
    ) {
        if j == sigma.len() {
            let words = c.words().iter().map(|w| {
                let letters: Vec<Letter> = (0..sigma.len())
                    .map(|i| {
                        let l = w.letter(sigma[i] as usize);
                        match l.pair() {
                            None => Letter::STAR,
                            Some(p) => {
                                let (perm, flips) = &maps[chosen[i]];
                                Letter::paired(
                                    perm[p as usize],
                                    l.primed() != flips[p as usize],
                                )
                            }
                        }
                    })
                    .collect();
                Word::new(&letters).unwrap()
            });
            images.insert(Code::new(c.dim(), words).unwrap());
            return;
        }
        for m in 0..maps.len() {
            chosen.push(m);
            rec(c, sigma, maps, j + 1, chosen, images);
            chosen.pop();
        }
    }
    for s in &sigmas {
        rec(c, s, &maps, 0, &mut Vec::new(), &mut images);
    }
    BigUint::from(images.len())
}

/// Exact orbit data of one representative.
#[derive(Clone, Debug)]
pub struct OrbitStats {
    pub k_sizes: Vec<u8>,
    pub sigma_size: u64,
    pub o_min: BigUint,
    pub o_full: BigUint,
}

pub fn orbit_stats(c: &Code, k_alphabet: u32) -> Result<OrbitStats> {
    let o_min = minimal_orbit_size(c);
    let o_full = orbit_size_from(c, k_alphabet, &o_min)?;
    Ok(OrbitStats {
        k_sizes: position_pair_counts(c),
        sigma_size: sigma_order(c),
        o_min,
        o_full,
    })
}

/// Aggregate report over a complete set of representatives.
#[derive(Clone, Debug)]
pub struct CountReport {
    pub dim: u8,
    pub k_alphabet: u32,
    pub n: u64,
    pub m_total: BigUint,
    pub m_min: BigUint,
    pub orbit_histogram: BTreeMap<BigUint, u64>,
    pub cylinder_histogram: BTreeMap<Vec<u8>, u64>,
    pub letters_histogram: BTreeMap<u8, u64>,
    pub laminations: u64,
    pub balanced: u64,
}

pub fn aggregate(reps: &[Code], k_alphabet: u32) -> Result<CountReport> {
    if reps.is_empty() {
        return Err(Error::IncompleteInput("empty input".into()));
    }
    let dim = reps[0].dim();
    let mut keys = HashSet::new();
    for c in reps {
        if !keys.insert(canonical_key(c)) {
            return Err(Error::IncompleteInput(canonical_key(c)));
        }
    }
    let stats: Vec<OrbitStats> = reps
        .par_iter()
        .map(|c| orbit_stats(c, k_alphabet))
        .collect::<Result<_>>()?;
    let mut report = CountReport {
        dim,
        k_alphabet,
        n: reps.len() as u64,
        m_total: BigUint::zero(),
        m_min: BigUint::zero(),
        orbit_histogram: BTreeMap::new(),
        cylinder_histogram: BTreeMap::new(),
        letters_histogram: BTreeMap::new(),
        laminations: 0,
        balanced: 0,
    };
    let max_cylinders = (1u32 << dim) - 1;
    for s in &stats {
        report.m_total += &s.o_full;
        report.m_min += &s.o_min;
        *report.orbit_histogram.entry(s.o_full.clone()).or_insert(0) += 1;
        let mut c_vec = s.k_sizes.clone();
        c_vec.sort_unstable();
        let total: u32 = c_vec.iter().map(|&k| k as u32).sum();
        if total == max_cylinders {
            report.laminations += 1;
        }
        if c_vec.iter().all(|&k| k == c_vec[0]) {
            report.balanced += 1;
        }
        *report.cylinder_histogram.entry(c_vec).or_insert(0) += 1;
        let k_max = s.k_sizes.iter().copied().max().unwrap();
        *report.letters_histogram.entry(k_max).or_insert(0) += 1;
    }
    Ok(report)
}

impl CountReport {
    pub fn orbits_csv(&self) -> String {
        let mut out = String::from("orbit_size,count\n");
        for (o, n) in &self.orbit_histogram {
            out.push_str(&format!("{o},{n}\n"));
        }
        out
    }

    pub fn cylinders_csv(&self) -> String {
        let mut out = String::from("cylinders,count,lamination,balanced\n");
        let max_cylinders = (1u32 << self.dim) - 1;
        for (c, n) in &self.cylinder_histogram {
            let total: u32 = c.iter().map(|&k| k as u32).sum();
            let lam = total == max_cylinders;
            let bal = c.iter().all(|&k| k == c[0]);
            let label = c
                .iter()
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            out.push_str(&format!("{label},{n},{lam},{bal}\n"));
        }
        out
    }

    pub fn letters_csv(&self) -> String {
        let mut out = String::from("pairs,count\n");
        for (k, n) in &self.letters_histogram {
            out.push_str(&format!("{k},{n}\n"));
        }
        out
    }

    pub fn summary(&self) -> String {
        format!(
            "dim={} pairs={} classes={} total={} minimal={} laminations={} balanced={}\n",
            self.dim,
            self.k_alphabet,
            self.n,
            self.m_total,
            self.m_min,
            self.laminations,
            self.balanced
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse;

    fn code(s: &str) -> Code {
        parse(s).unwrap()
    }

    fn simple(dim: u8) -> Code {
        let mut words = vec![Word::new(&[Letter::paired(0, false)]).unwrap()];
        words.push(Word::new(&[Letter::paired(0, true)]).unwrap());
        let mut cur = words;
        for _ in 1..dim {
            cur = cur
                .iter()
                .flat_map(|&w| {
                    [
                        w.push(Letter::paired(0, false)).unwrap(),
                        w.push(Letter::paired(0, true)).unwrap(),
                    ]
                })
                .collect();
        }
        Code::new(dim, cur).unwrap()
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(4, 2), BigUint::from(7u32));
        assert_eq!(stirling2(5, 3), BigUint::from(25u32));
        assert_eq!(stirling2(8, 2), BigUint::from(127u32));
        assert_eq!(stirling2(0, 0), BigUint::one());
        assert_eq!(stirling2(3, 5), BigUint::zero());
        // cross-check against an exhaustive partition count
        fn count_partitions(n: usize, k: usize) -> u64 {
            fn rec(i: usize, n: usize, blocks: &mut Vec<Vec<usize>>, k: usize) -> u64 {
                if i == n {
                    return (blocks.len() == k) as u64;
                }
                let mut total = 0;
                for b in 0..blocks.len() {
                    blocks[b].push(i);
                    total += rec(i + 1, n, blocks, k);
                    blocks[b].pop();
                }
                blocks.push(vec![i]);
                total += rec(i + 1, n, blocks, k);
                blocks.pop();
                total
            }
            rec(0, n, &mut Vec::new(), k)
        }
        for n in 1..=7u32 {
            for k in 1..=n {
                assert_eq!(
                    stirling2(n, k),
                    BigUint::from(count_partitions(n as usize, k as usize))
                );
            }
        }
    }

    #[test]
    fn c_number_small_values() {
        // n = 4: 84 + 144 + 24
        assert_eq!(c_number(4), BigUint::from(252u32));
        assert_eq!(c_number(2), BigUint::from(2u32));
    }

    #[test]
    fn group_orders() {
        assert_eq!(group_order(1, 1), BigUint::from(2u32));
        assert_eq!(group_order(2, 2), BigUint::from(128u32));
        let expected = factorial(4) * (factorial(8) * BigUint::from(256u32)).pow(4);
        assert_eq!(group_order(4, 8), expected);
    }

    #[test]
    fn layered_bound_matches_exhaustive_dimension_two() {
        // two pairs: 2 one-dimensional codes, bound equals the exhaustive
        // count because nothing else exists in dimension two
        let m1 = BigUint::from(2u32);
        let bound = layered_lower_bound(2, &m1);
        let all = crate::expand::all_tilings(2, &[0, 1]);
        assert_eq!(bound, BigUint::from(all.len()));
    }

    #[test]
    fn simple_code_orbits() {
        let s2 = simple(2);
        assert_eq!(minimal_orbit_size(&s2), BigUint::one());
        assert_eq!(orbit_size(&s2, 2).unwrap(), BigUint::from(4u32));
        let s4 = simple(4);
        assert_eq!(minimal_orbit_size(&s4), BigUint::one());
        assert_eq!(orbit_size(&s4, 8).unwrap(), BigUint::from(4096u32));
        assert!(matches!(
            orbit_size(&code("aa aA Ab AB"), 1),
            Err(Error::AlphabetTooSmall { need: 2, have: 1 })
        ));
    }

    #[test]
    fn minimal_orbit_matches_brute_force() {
        for c in [
            simple(2),
            code("aa aA Ab AB"),
            code("aaa abA aBA Aab AaB AAA bAa BAa"),
        ] {
            assert_eq!(minimal_orbit_size(&c), minimal_orbit_brute(&c), "{c:?}");
        }
    }

    #[test]
    fn full_orbit_matches_brute_force_on_dimension_two() {
        for c in [simple(2), code("aa aA Ab AB")] {
            assert_eq!(orbit_size(&c, 2).unwrap(), orbit_size_brute(&c, 2), "{c:?}");
        }
    }

    #[test]
    fn orbit_sizes_sum_to_the_direct_count() {
        let all = crate::expand::all_tilings(2, &[0, 1]);
        let classes = crate::iso::classify(all.clone());
        let total: BigUint = classes
            .iter()
            .map(|cl| orbit_size(&cl.representative, 2).unwrap())
            .sum();
        assert_eq!(total, BigUint::from(all.len()));
    }

    #[test]
    fn aggregate_counts() {
        let classes = crate::iso::classify(crate::expand::all_tilings(2, &[0, 1]));
        let reps: Vec<Code> = classes.iter().map(|c| c.representative.clone()).collect();
        let report = aggregate(&reps, 2).unwrap();
        assert_eq!(report.n, 2);
        assert_eq!(report.m_total, BigUint::from(12u32));
        // duplicates rejected
        let dup = vec![reps[0].clone(), reps[0].clone()];
        assert!(matches!(
            aggregate(&dup, 2),
            Err(Error::IncompleteInput(_))
        ));
    }
}
