//! Permutations as image arrays over `0..degree`.

use crate::error::{Error, Result};

/// True iff `p` is a bijection of `0..p.len()`.
pub fn is_bijection(p: &[u32]) -> bool {
    let n = p.len();
    let mut seen = vec![false; n];
    for &x in p {
        let x = x as usize;
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

pub fn validate(p: &[u32], degree: usize) -> Result<()> {
    if p.len() != degree || !is_bijection(p) {
        return Err(Error::InvalidPermutation { degree });
    }
    Ok(())
}

pub fn identity(degree: usize) -> Vec<u32> {
    (0..degree as u32).collect()
}

/// Image array of the product `a`·`b`, with `a` applied first.
pub fn product(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().map(|&x| b[x as usize]).collect()
}

pub fn invert(p: &[u32]) -> Vec<u32> {
    let mut inv = vec![0u32; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x as usize] = i as u32;
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bijection_check() {
        assert!(is_bijection(&[1, 0, 2]));
        assert!(!is_bijection(&[1, 1, 2]));
        assert!(!is_bijection(&[1, 3, 2]));
        assert!(is_bijection(&[]));
    }

    #[test]
    fn product_applies_left_factor_first() {
        // a = (0 1), b = (1 2): a·b sends 0 -> a(0)=1 -> b(1)=2.
        let a = vec![1, 0, 2];
        let b = vec![0, 2, 1];
        assert_eq!(product(&a, &b), vec![2, 0, 1]);
    }

    #[test]
    fn inverse_round_trip() {
        let p = vec![2, 0, 3, 1];
        assert_eq!(product(&p, &invert(&p)), identity(4));
        assert_eq!(product(&invert(&p), &p), identity(4));
    }
}
