//! Permutations of `{0, .., n-1}` as image vectors.

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Checks that `sigma` is a bijection of `{0, .., n-1}`.
pub fn check_permutation(sigma: &[usize]) -> Result<()> {
    let n = sigma.len();
    let mut seen = vec![false; n];
    for &x in sigma {
        if x >= n || seen[x] {
            return Err(Error::InvalidPermutation(format!("{sigma:?}")));
        }
        seen[x] = true;
    }
    Ok(())
}

/// The permutation of cycle type `nu` whose cycles run over consecutive
/// integers: `(0 1 .. ν_1-1)(ν_1 ..)...`.
pub fn canonical_permutation(nu: &Partition) -> Vec<usize> {
    let mut sigma = Vec::with_capacity(nu.size());
    let mut start = 0;
    for &len in nu.parts() {
        for i in 0..len {
            sigma.push(start + (i + 1) % len);
        }
        start += len;
    }
    sigma
}

/// Cycle type of a permutation.
pub fn cycle_type(sigma: &[usize]) -> Partition {
    let mut seen = vec![false; sigma.len()];
    let mut lengths = Vec::new();
    for start in 0..sigma.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = sigma[x];
            len += 1;
        }
        lengths.push(len);
    }
    Partition::from_unsorted(lengths)
}

pub fn inverse(sigma: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; sigma.len()];
    for (i, &s) in sigma.iter().enumerate() {
        inv[s] = i;
    }
    inv
}

/// Calls `f` once for every permutation of `{0, .., n-1}` (Heap's
/// algorithm).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}
