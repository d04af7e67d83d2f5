//! Perfect codes in the maximum metric induced by cube tiling codes.
//!
//! Every letter at a position maps to `2r + 1` consecutive residues of
//! `Z_{4r+2}`, its complement to the complementary run. Each word then
//! covers a radius-`r` ball, and the balls of a tiling code partition the
//! grid; the ball centers form an `r`-perfect code.

use crate::code::Code;
use crate::error::{Error, Result};

/// Centers of the balls induced by a cube tiling code. Pair `j` at a
/// position is assigned the run starting at offset `j - 1` in pair-index
/// order; its complement gets the complementary run.
pub fn realize_perfect_code(c: &Code, r: u32) -> Result<Vec<Vec<u32>>> {
    if !c.is_tiling_code() {
        return Err(Error::NotTilingCode);
    }
    let n = 4 * r + 2;
    let dim = c.dim() as usize;
    let pair_rank: Vec<Vec<u8>> = (0..dim).map(|i| c.position_pairs(i)).collect();
    let mut centers: Vec<Vec<u32>> = c
        .words()
        .iter()
        .map(|w| {
            (0..dim)
                .map(|i| {
                    let l = w.letter(i);
                    let p = l.pair().expect("tiling codes are proper");
                    let j = pair_rank[i].iter().position(|&q| q == p).unwrap() as u32;
                    let offset = if l.primed() { j + 2 * r + 1 } else { j };
                    (offset + r) % n
                })
                .collect()
        })
        .collect();
    centers.sort();
    Ok(centers)
}

/// Exhaustively checks that every grid point lies in exactly one ball of
/// radius `r` around the centers, in the cyclic maximum metric on
/// `Z_{4r+2}^d`.
pub fn verify_perfect_code(centers: &[Vec<u32>], dim: u8, r: u32) -> bool {
    let n = 4 * r + 2;
    if centers.is_empty() {
        return false;
    }
    let dist = |a: u32, b: u32| {
        let d = a.abs_diff(b);
        d.min(n - d)
    };
    let mut point = vec![0u32; dim as usize];
    loop {
        let covering = centers
            .iter()
            .filter(|c| point.iter().zip(c.iter()).all(|(&x, &y)| dist(x, y) <= r))
            .count();
        if covering != 1 {
            return false;
        }
        let mut i = dim as usize;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            point[i] += 1;
            if point[i] < n {
                break;
            }
            point[i] = 0;
            if i == 0 {
                return true;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse;

    #[test]
    fn two_dimensional_example() {
        let c = parse("aa aA Ab AB").unwrap();
        let centers = realize_perfect_code(&c, 1).unwrap();
        assert_eq!(centers.len(), 4);
        // ball count times ball volume fills the grid
        assert_eq!(centers.len() * 9, 36);
        assert!(verify_perfect_code(&centers, 2, 1));
    }

    #[test]
    fn one_dimensional_degenerate_case() {
        let c = parse("a A").unwrap();
        let centers = realize_perfect_code(&c, 1).unwrap();
        assert_eq!(centers, vec![vec![1], vec![4]]);
        assert!(verify_perfect_code(&centers, 1, 1));
    }

    #[test]
    fn rejects_non_tiling_codes() {
        assert!(matches!(
            realize_perfect_code(&parse("aa aA").unwrap(), 1),
            Err(Error::NotTilingCode)
        ));
        assert!(matches!(
            realize_perfect_code(&parse("a* A*").unwrap(), 1),
            Err(Error::NotTilingCode)
        ));
    }

    #[test]
    fn broken_center_sets_fail_verification() {
        let c = parse("aa aA Ab AB").unwrap();
        let mut centers = realize_perfect_code(&c, 1).unwrap();
        centers[0][0] = (centers[0][0] + 1) % 6;
        assert!(!verify_perfect_code(&centers, 2, 1));
    }
}
