//! Frobenius characters of conjugation orbits ("oduns") of loop-augmented
//! forests and block forms `σ ⊕ τ`.
//!
//! Two rules generate everything:
//! - a tree contributes `s_1 · F(forest left after deleting its root)`;
//! - a component type occurring `m` times contributes `s_m[F(type)]`.
//!
//! A loop on a root changes which components count as the same type but
//! not the per-tree character.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;

use super::forest::{LoopAugmentedForest, ShapeCode};
use super::perm::canonical_permutation;
use super::transform::PartialTransformation;
use crate::error::{Error, Result};
use crate::partitions::{factorial, Partition};
use crate::symfunc::{Basis, SymFunc};
use crate::Rational;

/// One factor of a product formula for an odun character.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Factor {
    /// `s_k`
    Schur(usize),
    /// `L_i`: the character of `Ind_{C_i}^{S_i} 1` for a cyclic subgroup
    /// `C_i` generated by an `i`-cycle. `L_1 = s_1`, `L_2 = s_2`.
    Cyclic(usize),
    /// `s_m[inner]`
    Plethysm { outer: usize, inner: Factored },
}

/// A product of factors, printed in a fixed order: Schur generators by
/// increasing degree with exponents, then the remaining factors sorted by
/// their printed form.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Factored(Vec<Factor>);

impl Factored {
    pub fn factors(&self) -> &[Factor] {
        &self.0
    }

    pub fn is_single_vertex(&self) -> bool {
        self.0 == [Factor::Schur(1)]
    }

    fn push_power(&mut self, m: usize, inner: Factored) {
        if m == 0 {
            return;
        }
        if inner.is_single_vertex() {
            self.0.push(Factor::Schur(m));
        } else if m == 1 {
            self.0.extend(inner.0);
        } else {
            self.0.push(Factor::Plethysm { outer: m, inner });
        }
    }

    /// The symmetric function this product denotes, in the power-sum basis.
    pub fn evaluate(&self) -> SymFunc {
        let mut acc = SymFunc::one(Basis::PowerSum);
        for f in &self.0 {
            let value = match f {
                Factor::Schur(k) => complete(*k),
                Factor::Cyclic(i) => cyclic_induced(*i),
                Factor::Plethysm { outer, inner } => complete(*outer).plethysm(&inner.evaluate()),
            };
            acc = acc.multiply(&value);
        }
        acc
    }

    pub fn degree(&self) -> usize {
        self.0
            .iter()
            .map(|f| match f {
                Factor::Schur(k) | Factor::Cyclic(k) => *k,
                Factor::Plethysm { outer, inner } => outer * inner.degree(),
            })
            .sum()
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Schur(k) => write!(f, "s[{k}]"),
            Factor::Cyclic(i) => write!(f, "L[{i}]"),
            Factor::Plethysm { outer, inner } => write!(f, "s[{outer}][{inner}]"),
        }
    }
}

impl fmt::Display for Factored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut powers: BTreeMap<usize, usize> = BTreeMap::new();
        let mut others: Vec<String> = Vec::new();
        for factor in &self.0 {
            match factor {
                Factor::Schur(k) => *powers.entry(*k).or_default() += 1,
                other => others.push(other.to_string()),
            }
        }
        others.sort();
        let mut pieces: Vec<String> = powers
            .into_iter()
            .map(|(k, e)| if e == 1 { format!("s[{k}]") } else { format!("s[{k}]^{e}") })
            .collect();
        pieces.extend(others);
        if pieces.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", pieces.join("*"))
        }
    }
}

fn complete(k: usize) -> SymFunc {
    SymFunc::generator(Basis::Complete, Partition::row(k)).to_basis(Basis::PowerSum)
}

fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|&k| k.gcd(&n) == 1).count()
}

/// `L_i = (1/i) Σ_{d | i} φ(d) p_d^{i/d}`, the Frobenius character of the
/// conjugation orbit of an `i`-cycle in `S_i`.
pub fn cyclic_induced(i: usize) -> SymFunc {
    let terms = (1..=i).filter(|d| i.is_multiple_of(*d)).map(|d| {
        let c = Rational::new(BigInt::from(euler_phi(d)), BigInt::from(i));
        (Partition::from_unsorted(vec![d; i / d]), c)
    });
    SymFunc::from_terms(Basis::PowerSum, terms)
}

fn shape_factored(shape: &ShapeCode) -> Factored {
    let mut out = Factored(vec![Factor::Schur(1)]);
    let mut groups: BTreeMap<ShapeCode, usize> = BTreeMap::new();
    for c in shape.children() {
        *groups.entry(c).or_default() += 1;
    }
    for (child, m) in groups {
        out.push_power(m, shape_factored(&child));
    }
    out
}

/// Product formula for the odun of a loop-augmented forest.
pub fn odun_factored(forest: &LoopAugmentedForest) -> Factored {
    let mut groups = BTreeMap::new();
    for code in forest.component_codes() {
        *groups.entry(code).or_insert(0usize) += 1;
    }
    let mut out = Factored::default();
    for (code, m) in groups {
        out.push_power(m, shape_factored(&code.shape));
    }
    out
}

/// Frobenius character of the odun of `forest`, in the Schur basis.
pub fn odun_frobenius(forest: &LoopAugmentedForest) -> SymFunc {
    odun_factored(forest).evaluate().to_basis(Basis::Schur)
}

/// Product formula for the orbit of a permutation of cycle type `nu`:
/// `∏_i s_{m_i}[L_i]` where `m_i` is the multiplicity of the part `i`.
pub fn cycle_type_factored(nu: &Partition) -> Factored {
    let mut out = Factored::default();
    let mut mults = nu.multiplicities();
    mults.reverse();
    for (i, m) in mults {
        let inner = match i {
            1 | 2 => Factored(vec![Factor::Schur(i)]),
            _ => Factored(vec![Factor::Cyclic(i)]),
        };
        out.push_power(m, inner);
    }
    out
}

/// A partial transformation `σ ⊕ τ` with `σ ∈ S_k` of cycle type
/// `cycle_type` on the first `k` points and a nilpotent `τ` on the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockForm {
    pub cycle_type: Partition,
    pub forest: LoopAugmentedForest,
}

impl BlockForm {
    pub fn new(cycle_type: Partition, forest: LoopAugmentedForest) -> Result<Self> {
        if forest.has_loops() {
            return Err(Error::InvalidForest("the nilpotent block must not carry loops".to_string()));
        }
        Ok(BlockForm { cycle_type, forest })
    }

    pub fn n(&self) -> usize {
        self.cycle_type.size() + self.forest.n()
    }

    pub fn to_transformation(&self) -> PartialTransformation {
        let k = self.cycle_type.size();
        let sigma = canonical_permutation(&self.cycle_type);
        let tau = self.forest.to_transformation();
        let image = sigma
            .into_iter()
            .map(Some)
            .chain(tau.images().iter().map(|j| j.map(|j| j + k)))
            .collect();
        PartialTransformation::from_images(image).expect("block images are in range")
    }

    pub fn factored(&self) -> Factored {
        let mut out = cycle_type_factored(&self.cycle_type);
        out.0.extend(odun_factored(&self.forest).0);
        out
    }
}

/// Frobenius character of the odun of `σ ⊕ τ`: the orbit character of
/// `σ` in `S_k` times the odun character of `τ`, in the Schur basis.
pub fn master_character(nu: &Partition, tau: &LoopAugmentedForest) -> Result<SymFunc> {
    let block = BlockForm::new(nu.clone(), tau.clone())?;
    Ok(block.factored().evaluate().to_basis(Basis::Schur))
}

fn shape_automorphisms(shape: &ShapeCode) -> BigUint {
    let mut groups: BTreeMap<ShapeCode, usize> = BTreeMap::new();
    for c in shape.children() {
        *groups.entry(c).or_default() += 1;
    }
    groups
        .into_iter()
        .map(|(child, m)| BigUint::from(factorial(m)) * shape_automorphisms(&child).pow(m as u32))
        .product()
}

/// Order of the stabilizer of a labeled forest under relabeling:
/// `∏_t m_t! · a_t^{m_t}` over component types `t` with `a_t` the
/// automorphism count of one tree of type `t`.
pub fn forest_stabilizer_order(forest: &LoopAugmentedForest) -> BigUint {
    let mut groups = BTreeMap::new();
    for code in forest.component_codes() {
        *groups.entry(code).or_insert(0usize) += 1;
    }
    groups
        .into_iter()
        .map(|(code, m)| BigUint::from(factorial(m)) * shape_automorphisms(&code.shape).pow(m as u32))
        .product()
}

/// `|Stab(σ ⊕ τ)| = z_ν · |Stab(τ)|`.
pub fn stabilizer_order(nu: &Partition, tau: &LoopAugmentedForest) -> BigUint {
    BigUint::from(nu.z()) * forest_stabilizer_order(tau)
}

/// Dimension of the odun: the value of its character at the identity.
pub fn odun_dimension(f: &SymFunc) -> BigInt {
    let p = f.to_basis(Basis::PowerSum);
    let mut total = Rational::from_integer(BigInt::from(0));
    for (mu, c) in p.terms() {
        if mu.parts().iter().all(|&x| x == 1) {
            total += c * Rational::from_integer(BigInt::from(factorial(mu.size())));
        }
    }
    assert!(total.is_integer(), "dimension is not an integer");
    total.to_integer()
}

/// The forest pictured as the running example: a 6-vertex tree (root, one
/// child with four leaves) and two copies of a 7-vertex tree.
pub fn example_forest() -> LoopAugmentedForest {
    let parent = [0, 1, 2, 2, 2, 2, 0, 7, 8, 7, 10, 11, 11, 0, 14, 15, 14, 17, 18, 18];
    let parent = parent.iter().map(|&p: &usize| p.checked_sub(1)).collect();
    LoopAugmentedForest::new(parent, Default::default()).expect("valid forest")
}
