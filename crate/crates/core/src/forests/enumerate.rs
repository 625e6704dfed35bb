//! Closed-form counts, exhaustive labeled enumeration and the brute-force
//! orbit oracle.

use std::collections::{BTreeSet, HashSet};

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use rayon::prelude::*;

use super::forest::LoopAugmentedForest;
use super::perm::{canonical_permutation, for_each_permutation};
use super::transform::PartialTransformation;
use crate::characters::{decompose, decomposition_to_schur, ClassFunction};
use crate::error::{Error, Result};
use crate::SymFunc;
use crate::Rational;

/// Enumeration cap used when `ADJOINT_CAP` is unset.
pub const DEFAULT_CAP: usize = 7;

/// The brute-force cap: `ADJOINT_CAP` if set and numeric, else
/// [`DEFAULT_CAP`].
pub fn cap() -> usize {
    env_cap().unwrap_or(DEFAULT_CAP)
}

pub(crate) fn env_cap() -> Option<usize> {
    std::env::var("ADJOINT_CAP").ok().and_then(|v| v.trim().parse().ok())
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

/// Labeled rooted forests on `n` vertices with `k` roots:
/// `C(n-1, k-1) n^{n-k}`.
pub fn count_forests(n: usize, k: usize) -> BigUint {
    if k == 0 || k > n {
        return BigUint::from(0u32);
    }
    binomial(BigUint::from(n - 1), BigUint::from(k - 1)) * BigUint::from(n).pow((n - k) as u32)
}

/// Loop-augmented forests with `k` roots: each root may carry a loop.
pub fn count_loop_forests(n: usize, k: usize) -> BigUint {
    count_forests(n, k) << k
}

/// `|C_n| = (n+1)^{n-1}`.
pub fn count_nilpotents(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::from(1u32);
    }
    BigUint::from(n + 1).pow((n - 1) as u32)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabeledKind {
    Forests,
    LoopForests,
    Nilpotents,
}

/// Decodes `index` as a base-`(n+1)` word; digit 0 means "no image".
fn decode(index: u64, n: usize) -> Vec<Option<usize>> {
    let mut x = index;
    (0..n)
        .map(|_| {
            let d = (x % (n as u64 + 1)) as usize;
            x /= n as u64 + 1;
            d.checked_sub(1)
        })
        .collect()
}

fn all_words(n: usize) -> u64 {
    (n as u64 + 1).pow(n as u32)
}

/// All labeled forests on `n` vertices, with loops on every subset of
/// roots when `loops` is set. Sorted.
pub fn enumerate_forests(n: usize, loops: bool) -> Result<Vec<LoopAugmentedForest>> {
    check_cap(n, cap())?;
    let mut out: Vec<LoopAugmentedForest> = (0..all_words(n))
        .into_par_iter()
        .flat_map_iter(|index| {
            let parent = decode(index, n);
            let plain = if parent.iter().enumerate().any(|(v, p)| *p == Some(v)) {
                None
            } else {
                LoopAugmentedForest::new(parent, BTreeSet::new()).ok()
            };
            let variants: Vec<LoopAugmentedForest> = match plain {
                None => Vec::new(),
                Some(f) if !loops => vec![f],
                Some(f) => {
                    let roots = f.roots();
                    (0u32..1 << roots.len())
                        .map(|mask| {
                            let chosen = roots.iter().enumerate().filter(|(b, _)| mask & (1 << b) != 0).map(|(_, &r)| r);
                            f.with_loops(chosen.collect()).expect("loops on roots")
                        })
                        .collect()
                }
            };
            variants
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Exhaustive, duplicate-free, sorted list of labeled objects as partial
/// transformations.
///
/// `Nilpotents` filters every partial map by [`PartialTransformation::is_nilpotent`];
/// the forest kinds are built from parent arrays, so the two routes check
/// each other.
pub fn enumerate_labeled(n: usize, kind: LabeledKind) -> Result<Vec<PartialTransformation>> {
    check_cap(n, cap())?;
    let mut out: Vec<PartialTransformation> = match kind {
        LabeledKind::Forests | LabeledKind::LoopForests => enumerate_forests(n, kind == LabeledKind::LoopForests)?
            .iter()
            .map(LoopAugmentedForest::to_transformation)
            .collect(),
        LabeledKind::Nilpotents => (0..all_words(n))
            .into_par_iter()
            .filter_map(|index| {
                let f = PartialTransformation::from_images(decode(index, n)).expect("digits in range");
                f.is_nilpotent().then_some(f)
            })
            .collect(),
    };
    out.sort();
    Ok(out)
}

/// One labeled representative per isomorphism class, sorted by canonical
/// code.
pub fn forest_types(n: usize, loops: bool) -> Result<Vec<LoopAugmentedForest>> {
    let mut seen = HashSet::new();
    let mut out: Vec<(Vec<u8>, LoopAugmentedForest)> = Vec::new();
    for f in enumerate_forests(n, loops)? {
        let code = f.canonical_code();
        if seen.insert(code.clone()) {
            out.push((code, f));
        }
    }
    out.sort();
    Ok(out.into_iter().map(|(_, f)| f).collect())
}

/// The orbit of `f` under conjugation by every element of `S_n`.
pub fn brute_force_orbit(f: &PartialTransformation) -> Result<BTreeSet<PartialTransformation>> {
    check_cap(f.n(), cap())?;
    let mut orbit = HashSet::new();
    for_each_permutation(f.n(), |sigma| {
        orbit.insert(f.conjugate_unchecked(sigma));
    });
    Ok(orbit.into_iter().collect())
}

/// Permutation character of the orbit: at each class, the number of orbit
/// points fixed by the canonical representative.
pub fn orbit_character(f: &PartialTransformation) -> Result<ClassFunction> {
    let orbit = brute_force_orbit(f)?;
    Ok(ClassFunction::from_fn(f.n(), |mu| {
        let sigma = canonical_permutation(mu);
        let fixed = orbit.iter().filter(|g| g.is_fixed_by(&sigma)).count();
        Rational::from_integer(BigInt::from(fixed))
    }))
}

/// Schur expansion of the orbit's permutation character.
pub fn brute_force_odun(f: &PartialTransformation) -> Result<SymFunc> {
    Ok(decomposition_to_schur(&decompose(&orbit_character(f)?)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forests::odun::{odun_dimension, odun_frobenius};

    fn u(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn closed_forms() {
        assert_eq!(count_forests(2, 1), u(2));
        assert_eq!(count_forests(2, 2), u(1));
        assert_eq!(count_loop_forests(2, 1), u(4));
        assert_eq!(count_loop_forests(2, 2), u(4));
        for n in 1..=10usize {
            let total: BigUint = (1..=n).map(|k| count_forests(n, k)).sum();
            assert_eq!(total, count_nilpotents(n));
            let loop_total: BigUint = (1..=n).map(|k| count_loop_forests(n, k)).sum();
            assert_eq!(loop_total, u(2) * BigUint::from(n + 2).pow(n as u32 - 1));
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled(1, LabeledKind::Forests).unwrap().len(), 1);
        assert_eq!(enumerate_labeled(3, LabeledKind::Nilpotents).unwrap().len(), 16);
        assert_eq!(enumerate_labeled(4, LabeledKind::Forests).unwrap().len(), 125);
        for n in 1..=5 {
            let forests = enumerate_forests(n, false).unwrap();
            for k in 1..=n {
                let with_k = forests.iter().filter(|f| f.roots().len() == k).count();
                assert_eq!(BigUint::from(with_k), count_forests(n, k), "n={n} k={k}");
            }
            let loops = enumerate_forests(n, true).unwrap();
            for k in 1..=n {
                let with_k = loops.iter().filter(|f| f.roots().len() == k).count();
                assert_eq!(BigUint::from(with_k), count_loop_forests(n, k));
            }
        }
    }

    #[test]
    fn nilpotents_are_forests() {
        for n in 0..=5 {
            let a = enumerate_labeled(n, LabeledKind::Forests).unwrap();
            let b = enumerate_labeled(n, LabeledKind::Nilpotents).unwrap();
            assert_eq!(a, b);
            assert_eq!(BigUint::from(b.len()), count_nilpotents(n));
        }
    }

    #[test]
    fn cap_is_enforced() {
        if env_cap().is_none() {
            assert!(matches!(enumerate_labeled(8, LabeledKind::Forests), Err(Error::CapExceeded { n: 8, cap: 7 })));
            assert!(brute_force_orbit(&PartialTransformation::zero(9)).is_err());
        }
    }

    #[test]
    fn orbit_examples() {
        let e11 = PartialTransformation::unit(3, 0, 0);
        let schur = |terms: &[(&[usize], i64)]| {
            SymFunc::from_terms(
                crate::Basis::Schur,
                terms.iter().map(|(l, c)| (crate::Partition::new(l.to_vec()).unwrap(), Rational::from_integer((*c).into()))),
            )
        };
        assert_eq!(brute_force_odun(&e11).unwrap(), schur(&[(&[3], 1), (&[2, 1], 1)]));
        let e12 = PartialTransformation::unit(4, 0, 1);
        assert_eq!(
            brute_force_odun(&e12).unwrap(),
            schur(&[(&[4], 1), (&[3, 1], 2), (&[2, 2], 1), (&[2, 1, 1], 1)])
        );
        assert_eq!(brute_force_orbit(&e12).unwrap().len(), 12);
    }

    #[test]
    fn small_forest_types_agree_with_the_recursion() {
        for n in 1..=4 {
            for f in forest_types(n, true).unwrap() {
                let brute = brute_force_odun(&f.to_transformation()).unwrap();
                let rule = odun_frobenius(&f);
                assert_eq!(rule, brute, "{}", serde_json::to_string(&f).unwrap());
                let orbit = brute_force_orbit(&f.to_transformation()).unwrap().len();
                assert_eq!(odun_dimension(&rule), BigInt::from(orbit));
            }
        }
    }
}
