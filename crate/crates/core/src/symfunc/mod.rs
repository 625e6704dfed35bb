//! Symmetric functions over `ℚ` in the power-sum, complete homogeneous and
//! Schur bases.
//!
//! Products and plethysm are computed in the power-sum basis, where both are
//! determined by substitution rules: `p_λ p_μ = p_{λ ∪ μ}` and
//! `p_m[p_k] = p_{mk}`, extended multiplicatively in both arguments.
//! Schur coefficients are recovered from power-sum coefficients through the
//! character table, and the Schur-to-complete expansion is the Jacobi–Trudi
//! determinant.

pub mod poly;
pub mod ratio;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::characters::character_value;
use crate::error::{Error, Result};
use crate::partitions::{generate_partitions, Partition};
use crate::Rational;

pub use poly::{expand_in_variables, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// `p_λ`
    PowerSum,
    /// `h_λ`
    Complete,
    /// `s_λ`
    Schur,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::PowerSum => "powersum",
            Basis::Complete => "complete",
            Basis::Schur => "schur",
        }
    }

    fn letter(self) -> char {
        match self {
            Basis::PowerSum => 'p',
            Basis::Complete => 'h',
            Basis::Schur => 's',
        }
    }
}

/// A finite linear combination of basis elements of one basis.
///
/// Zero coefficients are never stored. Terms of different degrees may be
/// mixed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc { basis, terms: BTreeMap::new() }
    }

    /// The constant `1 = p_∅ = h_∅ = s_∅`.
    pub fn one(basis: Basis) -> Self {
        Self::generator(basis, Partition::empty())
    }

    pub fn constant(basis: Basis, c: Rational) -> Self {
        Self::from_terms(basis, [(Partition::empty(), c)])
    }

    pub fn generator(basis: Basis, lambda: Partition) -> Self {
        Self::from_terms(basis, [(lambda, Rational::one())])
    }

    /// Collects terms, summing repeated partitions and dropping zeros.
    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut out = Self::zero(basis);
        for (lambda, c) in terms {
            out.add_term(lambda, c);
        }
        out
    }

    fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    /// Sorted, distinct degrees of the stored terms.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(Partition::size).collect();
        d.dedup();
        d
    }

    /// `Some(d)` when every term has degree `d`; the zero function has no
    /// degree.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        match self.degrees().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    pub fn has_constant_term(&self) -> bool {
        self.terms.contains_key(&Partition::empty())
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn is_nonnegative_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && !c.is_negative())
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch { left: self.basis.name(), right: other.basis.name() });
        }
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> SymFunc {
        SymFunc::from_terms(self.basis, self.terms.iter().map(|(l, v)| (l.clone(), v * c)))
    }

    /// Product in `Λ`, returned in the basis of `self`.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        let a = self.to_basis(Basis::PowerSum);
        let b = other.to_basis(Basis::PowerSum);
        p_multiply(&a, &b).to_basis(self.basis)
    }

    pub fn pow(&self, k: u32) -> SymFunc {
        let base = self.to_basis(Basis::PowerSum);
        let mut acc = SymFunc::one(Basis::PowerSum);
        for _ in 0..k {
            acc = p_multiply(&acc, &base);
        }
        acc.to_basis(self.basis)
    }

    /// `⟨f, g⟩` with `⟨p_λ, p_μ⟩ = z_λ δ_{λμ}`.
    pub fn hall_inner_product(&self, other: &SymFunc) -> Rational {
        let a = self.to_basis(Basis::PowerSum);
        let b = other.to_basis(Basis::PowerSum);
        a.terms
            .iter()
            .filter_map(|(l, c)| b.terms.get(l).map(|d| c * d * Rational::from_integer(BigInt::from(l.z()))))
            .sum()
    }

    /// The plethysm `self[inner]`, returned in the basis of `self`.
    ///
    /// With `inner = Σ d_μ p_μ`, `p_k[inner] = Σ d_μ p_{kμ}` (coefficients
    /// are constants), and `p_λ[inner] = ∏ p_{λ_i}[inner]`.
    pub fn plethysm(&self, inner: &SymFunc) -> SymFunc {
        let outer = self.to_basis(Basis::PowerSum);
        let g = inner.to_basis(Basis::PowerSum);
        let mut cache: HashMap<usize, SymFunc> = HashMap::new();
        let mut out = SymFunc::zero(Basis::PowerSum);
        for (lambda, c) in &outer.terms {
            let mut term = SymFunc::constant(Basis::PowerSum, c.clone());
            for &k in lambda.parts() {
                let pk = cache.entry(k).or_insert_with(|| {
                    SymFunc::from_terms(Basis::PowerSum, g.terms.iter().map(|(mu, d)| (mu.scale(k), d.clone())))
                });
                term = p_multiply(&term, pk);
            }
            out = out.add(&term).expect("same basis");
        }
        out.to_basis(self.basis)
    }

    /// The same symmetric function in another basis.
    pub fn to_basis(&self, target: Basis) -> SymFunc {
        if self.basis == target {
            return self.clone();
        }
        match (self.basis, target) {
            (Basis::Schur, Basis::Complete) => schur_to_complete(self),
            (_, Basis::PowerSum) => self.to_powersum(),
            (Basis::PowerSum, Basis::Schur) => powersum_to_schur(self),
            (Basis::PowerSum, Basis::Complete) => schur_to_complete(&powersum_to_schur(self)),
            (Basis::Complete, Basis::Schur) => powersum_to_schur(&self.to_powersum()),
            _ => unreachable!("identity handled above"),
        }
    }

    fn to_powersum(&self) -> SymFunc {
        match self.basis {
            Basis::PowerSum => self.clone(),
            Basis::Schur => {
                let mut out = SymFunc::zero(Basis::PowerSum);
                for (lambda, c) in &self.terms {
                    for mu in generate_partitions(lambda.size()) {
                        let chi = character_value(lambda, &mu);
                        if chi != 0 {
                            let coeff = c * Rational::new(BigInt::from(chi), BigInt::from(mu.z()));
                            out.add_term(mu, coeff);
                        }
                    }
                }
                out
            }
            Basis::Complete => {
                let mut cache: HashMap<usize, SymFunc> = HashMap::new();
                let mut out = SymFunc::zero(Basis::PowerSum);
                for (lambda, c) in &self.terms {
                    let mut term = SymFunc::constant(Basis::PowerSum, c.clone());
                    for &k in lambda.parts() {
                        let hk = cache.entry(k).or_insert_with(|| complete_in_powersum(k));
                        term = p_multiply(&term, hk);
                    }
                    out = out.add(&term).expect("same basis");
                }
                out
            }
        }
    }
}

/// `h_k = Σ_{μ ⊢ k} p_μ / z_μ`.
fn complete_in_powersum(k: usize) -> SymFunc {
    SymFunc::from_terms(
        Basis::PowerSum,
        generate_partitions(k)
            .into_iter()
            .map(|mu| {
                let z = Rational::from_integer(BigInt::from(mu.z()));
                (mu, z.recip())
            }),
    )
}

fn p_multiply(a: &SymFunc, b: &SymFunc) -> SymFunc {
    debug_assert!(a.basis == Basis::PowerSum && b.basis == Basis::PowerSum);
    let mut acc: BTreeMap<Partition, Rational> = BTreeMap::new();
    for (l, c) in &a.terms {
        for (m, d) in &b.terms {
            *acc.entry(l.join(m)).or_insert_with(Rational::zero) += c * d;
        }
    }
    SymFunc::from_terms(Basis::PowerSum, acc)
}

/// `[s_λ] f = Σ_μ χ^λ(μ) [p_μ] f`, since `p_μ = Σ_λ χ^λ(μ) s_λ`.
fn powersum_to_schur(f: &SymFunc) -> SymFunc {
    let mut by_degree: BTreeMap<usize, Vec<(&Partition, &Rational)>> = BTreeMap::new();
    for (mu, c) in &f.terms {
        by_degree.entry(mu.size()).or_default().push((mu, c));
    }
    let mut out = SymFunc::zero(Basis::Schur);
    for (d, support) in by_degree {
        for lambda in generate_partitions(d) {
            let coeff: Rational = support
                .iter()
                .map(|(mu, c)| *c * Rational::from_integer(BigInt::from(character_value(&lambda, mu))))
                .sum();
            out.add_term(lambda, coeff);
        }
    }
    out
}

/// Jacobi–Trudi: `s_λ = det(h_{λ_i + j - i})`, expanded row by row with the
/// set of used columns as the dynamic-programming state.
fn schur_to_complete(f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(Basis::Complete);
    for (lambda, c) in &f.terms {
        for (mu, d) in jacobi_trudi(lambda) {
            out.add_term(mu, c * Rational::from_integer(d));
        }
    }
    out
}

/// Expansion of `s_λ` as an integer combination of `h_μ`.
pub fn jacobi_trudi(lambda: &Partition) -> BTreeMap<Partition, BigInt> {
    let l = lambda.len();
    let parts = lambda.parts();
    // state: bitmask of used columns -> (h multiset -> signed count)
    let mut states: HashMap<u64, BTreeMap<Vec<usize>, BigInt>> = HashMap::new();
    states.insert(0, BTreeMap::from([(Vec::new(), BigInt::one())]));
    for (i, &part) in parts.iter().enumerate() {
        let mut next: HashMap<u64, BTreeMap<Vec<usize>, BigInt>> = HashMap::new();
        for (mask, polys) in &states {
            for j in 0..l {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let index = part as isize + j as isize - i as isize;
                if index < 0 {
                    continue;
                }
                // sign of placing column j: number of used columns greater than j
                let inversions = (mask >> (j + 1)).count_ones();
                let sign = if inversions % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                let entry = next.entry(mask | (1 << j)).or_default();
                for (hs, coeff) in polys {
                    let mut key = hs.clone();
                    if index > 0 {
                        key.push(index as usize);
                        key.sort_unstable_by(|a, b| b.cmp(a));
                    }
                    *entry.entry(key).or_insert_with(BigInt::zero) += &sign * coeff;
                }
            }
        }
        states = next;
    }
    let full = if l == 64 { u64::MAX } else { (1u64 << l) - 1 };
    states
        .remove(&full)
        .unwrap_or_default()
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(hs, c)| (Partition::from_unsorted(hs), c))
        .collect()
}

impl fmt::Display for SymFunc {
    /// Renders like `2*s[4] + s[2,2] - 1/2*p[2]`; the constant is a bare
    /// number.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if lambda.is_empty() {
                write!(f, "{}", ratio::to_display(&magnitude))?;
                continue;
            }
            if !magnitude.is_one() {
                write!(f, "{}*", ratio::to_display(&magnitude))?;
            }
            write!(f, "{}{}", self.basis.letter(), lambda)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    basis: Basis,
    terms: Vec<TermJson>,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFuncJson {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| TermJson { partition: l.clone(), coeff: ratio::to_string(c) })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SymFuncJson::deserialize(d)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| ratio::parse(&t.coeff).map(|c| (t.partition, c)))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Ok(SymFunc::from_terms(raw.basis, terms))
    }
}

pub fn generator(basis: Basis, lambda: Partition) -> SymFunc {
    SymFunc::generator(basis, lambda)
}

pub fn hall_inner_product(f: &SymFunc, g: &SymFunc) -> Rational {
    f.hall_inner_product(g)
}

pub fn plethysm(f: &SymFunc, g: &SymFunc) -> SymFunc {
    f.plethysm(g)
}

/// `c^λ_{μν}`, the coefficient of `s_λ` in `s_μ s_ν`; zero unless
/// `|μ| + |ν| = |λ|`.
pub fn littlewood_richardson(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if mu.size() + nu.size() != lambda.size() || !mu.is_contained_in(lambda) || !nu.is_contained_in(lambda) {
        return BigInt::zero();
    }
    let prod = SymFunc::generator(Basis::Schur, mu.clone()).multiply(&SymFunc::generator(Basis::Schur, nu.clone()));
    let c = prod.coefficient(lambda);
    debug_assert!(c.is_integer());
    c.to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn half(n: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(2))
    }

    fn s(parts: &[usize]) -> SymFunc {
        SymFunc::generator(Basis::Schur, p(parts))
    }

    fn schur(terms: &[(&[usize], i64)]) -> SymFunc {
        SymFunc::from_terms(Basis::Schur, terms.iter().map(|(l, c)| (p(l), q(*c))))
    }

    #[test]
    fn linear_structure() {
        assert_eq!(s(&[2]).add(&s(&[2])).unwrap(), schur(&[(&[2], 2)]));
        assert!(s(&[3]).scale(&q(0)).is_zero());
        assert!(s(&[3]).add(&s(&[3]).scale(&q(-1))).unwrap().is_zero());
        let err = s(&[1]).add(&SymFunc::generator(Basis::PowerSum, p(&[1])));
        assert!(matches!(err, Err(Error::BasisMismatch { .. })));
        assert_eq!(SymFunc::generator(Basis::Schur, Partition::empty()), SymFunc::one(Basis::Schur));
    }

    #[test]
    fn products() {
        let pp = SymFunc::generator(Basis::PowerSum, p(&[2])).multiply(&SymFunc::generator(Basis::PowerSum, p(&[3])));
        assert_eq!(pp, SymFunc::generator(Basis::PowerSum, p(&[3, 2])));
        assert_eq!(s(&[1]).multiply(&s(&[4])), schur(&[(&[5], 1), (&[4, 1], 1)]));
        assert_eq!(
            s(&[1]).multiply(&s(&[1])).multiply(&s(&[1])),
            schur(&[(&[3], 1), (&[2, 1], 2), (&[1, 1, 1], 1)])
        );
        assert_eq!(s(&[2]).multiply(&s(&[4])), schur(&[(&[6], 1), (&[5, 1], 1), (&[4, 2], 1)]));
        assert_eq!(s(&[2]).multiply(&SymFunc::one(Basis::Schur)), s(&[2]));
    }

    #[test]
    fn conversions() {
        assert_eq!(s(&[3]).to_basis(Basis::Complete), SymFunc::generator(Basis::Complete, p(&[3])));
        let h2 = SymFunc::generator(Basis::Complete, p(&[2])).to_basis(Basis::PowerSum);
        assert_eq!(h2, SymFunc::from_terms(Basis::PowerSum, [(p(&[1, 1]), half(1)), (p(&[2]), half(1))]));
        let s11 = s(&[1, 1]).to_basis(Basis::PowerSum);
        assert_eq!(s11, SymFunc::from_terms(Basis::PowerSum, [(p(&[1, 1]), half(1)), (p(&[2]), half(-1))]));
        let jt = s(&[1, 1]).to_basis(Basis::Complete);
        assert_eq!(jt, SymFunc::from_terms(Basis::Complete, [(p(&[1, 1]), q(1)), (p(&[2]), q(-1))]));
    }

    #[test]
    fn conversions_round_trip() {
        let bases = [Basis::PowerSum, Basis::Complete, Basis::Schur];
        for n in 0..=8 {
            for lambda in generate_partitions(n) {
                for &from in &bases {
                    let f = SymFunc::generator(from, lambda.clone());
                    for &to in &bases {
                        assert_eq!(f.to_basis(to).to_basis(from), f, "{lambda} {from:?} -> {to:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn jacobi_trudi_agrees_with_character_route() {
        for n in 1..=7 {
            for lambda in generate_partitions(n) {
                let via_jt = s(lambda.parts()).to_basis(Basis::Complete).to_basis(Basis::PowerSum);
                assert_eq!(via_jt, s(lambda.parts()).to_basis(Basis::PowerSum), "{lambda}");
            }
        }
    }

    #[test]
    fn hall_inner_products() {
        let p3 = SymFunc::generator(Basis::PowerSum, p(&[3]));
        assert_eq!(p3.hall_inner_product(&p3), q(3));
        assert_eq!(s(&[2, 1]).hall_inner_product(&s(&[2, 1])), q(1));
        assert_eq!(s(&[2, 1]).hall_inner_product(&s(&[3])), q(0));
        for a in (0..=6).flat_map(generate_partitions) {
            for b in (0..=6).flat_map(generate_partitions) {
                let ip = s(a.parts()).hall_inner_product(&s(b.parts()));
                assert_eq!(ip, q((a == b) as i64));
            }
        }
    }

    #[test]
    fn plethysm_examples() {
        let p2 = SymFunc::generator(Basis::PowerSum, p(&[2]));
        let p3 = SymFunc::generator(Basis::PowerSum, p(&[3]));
        assert_eq!(p2.plethysm(&p3), SymFunc::generator(Basis::PowerSum, p(&[6])));
        for k in 0..=8 {
            let sk = SymFunc::generator(Basis::Schur, Partition::row(k));
            assert_eq!(sk.plethysm(&s(&[1])), sk);
        }
        assert_eq!(s(&[2]).plethysm(&s(&[2])), schur(&[(&[4], 1), (&[2, 2], 1)]));
        // s_1[g] = g and s_∅[g] = 1
        let g = schur(&[(&[2, 1], 3), (&[1], 1)]);
        assert_eq!(s(&[1]).plethysm(&g), g);
        assert_eq!(SymFunc::one(Basis::Schur).plethysm(&g), SymFunc::one(Basis::Schur));
    }

    #[test]
    fn plethysm_of_example_forest_component() {
        let inner = s(&[1]).pow(5).multiply(&s(&[2]));
        let f = s(&[2]).plethysm(&inner);
        assert_eq!(f.homogeneous_degree(), Some(14));
        assert!(f.is_nonnegative_integral());
        // s_2[g] for g of degree 7 induces g ⊗ g from S_7 ≀ S_2, so its
        // dimension is [S_14 : S_7 ≀ S_2] · dim(g)^2 with dim(g) = 7!/2.
        let d = BigInt::from(2520);
        let expected_dim = BigInt::from(3432 / 2) * &d * &d;
        let dim: BigInt = f
            .terms()
            .map(|(l, c)| c.to_integer() * BigInt::from(l.dim()))
            .sum();
        assert_eq!(dim, expected_dim);
    }

    #[test]
    fn littlewood_richardson_examples() {
        assert_eq!(littlewood_richardson(&p(&[2]), &p(&[1]), &p(&[1])), BigInt::from(1));
        for n in 1..=7 {
            for k in 0..=n {
                let c = littlewood_richardson(&Partition::row(n), &Partition::row(k), &Partition::row(n - k));
                assert_eq!(c, BigInt::from(1));
            }
        }
        assert_eq!(littlewood_richardson(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), BigInt::from(1));
        assert_eq!(littlewood_richardson(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), BigInt::from(2));
        assert_eq!(littlewood_richardson(&p(&[3]), &p(&[1, 1]), &p(&[1])), BigInt::from(0));
    }

    #[test]
    fn display_and_json() {
        let f = schur(&[(&[4], 2), (&[2, 2], 1)]).add(&SymFunc::constant(Basis::Schur, half(-3))).unwrap();
        assert_eq!(f.to_string(), "-3/2 + 2*s[4] + s[2,2]");
        let g = schur(&[(&[4, 2], 3)]);
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"basis":"schur","terms":[{"partition":[4,2],"coeff":"3/1"}]}"#
        );
        let back: SymFunc = serde_json::from_str(&serde_json::to_string(&f).unwrap()).unwrap();
        assert_eq!(back, f);
        assert_eq!(SymFunc::zero(Basis::Schur).to_string(), "0");
    }
}
