//! Class functions on `S_n`: irreducible characters by the
//! Murnaghan–Nakayama rule, the Frobenius characteristic map in both
//! directions, decomposition into irreducibles, Young-subgroup induction and
//! Kronecker products.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{generate_partitions, Partition};
use crate::symfunc::{ratio, Basis, SymFunc};
use crate::Rational;

type Memo = RwLock<HashMap<(Partition, Partition), i128>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `χ^λ(μ)`, memoized per `(λ, μ)`.
///
/// Border strips of length `μ_1` are removed on the beta-set of `λ`: a bead
/// at position `b` slides to `b - r` when that position is free, and the
/// strip height is the number of beads jumped over.
pub fn character_value(lambda: &Partition, mu: &Partition) -> i128 {
    assert_eq!(lambda.size(), mu.size(), "character_value: |{lambda}| != |{mu}|");
    mn(lambda, mu)
}

fn mn(lambda: &Partition, mu: &Partition) -> i128 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(&v) = memo().read().unwrap().get(&key) {
        return v;
    }
    let r = mu.parts()[0];
    let rest = Partition::new(mu.parts()[1..].to_vec()).expect("suffix of a partition");
    let len = lambda.len();
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut total = 0i128;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let height = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let mut next = beta.clone();
        next[idx] = b - r;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let parts = next.iter().enumerate().map(|(i, &c)| c - (len - 1 - i)).collect();
        let smaller = Partition::from_unsorted(parts);
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&smaller, &rest);
    }
    memo().write().unwrap().insert(key, total);
    total
}

/// A class function on `S_n`, keyed by cycle type. Every partition of `n`
/// is present; zeros are kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, Rational>,
}

impl ClassFunction {
    pub fn zero(n: usize) -> Self {
        let values = generate_partitions(n).into_iter().map(|mu| (mu, Rational::zero())).collect();
        ClassFunction { n, values }
    }

    /// Builds a class function from a value per class.
    pub fn from_fn(n: usize, mut f: impl FnMut(&Partition) -> Rational) -> Self {
        let values = generate_partitions(n)
            .into_iter()
            .map(|mu| {
                let v = f(&mu);
                (mu, v)
            })
            .collect();
        ClassFunction { n, values }
    }

    /// Missing classes are filled with zero; classes of the wrong size are
    /// rejected.
    pub fn from_values(n: usize, values: impl IntoIterator<Item = (Partition, Rational)>) -> Result<Self> {
        let mut out = Self::zero(n);
        for (mu, v) in values {
            if mu.size() != n {
                return Err(Error::DegreeMismatch { expected: n, found: mu.size() });
            }
            out.values.insert(mu, v);
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn value(&self, mu: &Partition) -> &Rational {
        &self.values[mu]
    }

    pub fn values(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.values.iter()
    }

    /// Value at the identity class, i.e. the dimension for a character.
    pub fn dimension(&self) -> Rational {
        self.values[&Partition::column(self.n)].clone()
    }

    /// `⟨χ, ψ⟩ = Σ_μ χ(μ) ψ(μ) / z_μ`.
    pub fn inner(&self, other: &ClassFunction) -> Result<Rational> {
        self.check_degree(other)?;
        Ok(self
            .values
            .iter()
            .map(|(mu, v)| v * &other.values[mu] / Rational::from_integer(BigInt::from(mu.z())))
            .sum())
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_degree(other)?;
        Ok(ClassFunction::from_fn(self.n, |mu| &self.values[mu] + &other.values[mu]))
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_degree(other)?;
        Ok(ClassFunction::from_fn(self.n, |mu| &self.values[mu] - &other.values[mu]))
    }

    fn check_degree(&self, other: &ClassFunction) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct ClassValueJson {
    class: Partition,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct ClassFunctionJson {
    n: usize,
    values: Vec<ClassValueJson>,
}

impl Serialize for ClassFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ClassFunctionJson {
            n: self.n,
            values: self
                .values
                .iter()
                .map(|(mu, v)| ClassValueJson { class: mu.clone(), value: ratio::to_string(v) })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ClassFunction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = ClassFunctionJson::deserialize(d)?;
        let values = raw
            .values
            .into_iter()
            .map(|cv| ratio::parse(&cv.value).map(|v| (cv.class, v)))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        ClassFunction::from_values(raw.n, values).map_err(D::Error::custom)
    }
}

pub fn irreducible_character(lambda: &Partition) -> ClassFunction {
    ClassFunction::from_fn(lambda.size(), |mu| Rational::from_integer(BigInt::from(character_value(lambda, mu))))
}

/// `F(χ) = Σ_μ χ(μ) p_μ / z_μ`, in the power-sum basis.
pub fn frobenius(chi: &ClassFunction) -> SymFunc {
    SymFunc::from_terms(
        Basis::PowerSum,
        chi.values.iter().map(|(mu, v)| (mu.clone(), v / Rational::from_integer(BigInt::from(mu.z())))),
    )
}

/// Inverse of [`frobenius`]: `χ(μ) = z_μ · [p_μ] f`.
pub fn inverse_frobenius(f: &SymFunc, n: usize) -> Result<ClassFunction> {
    let p = f.to_basis(Basis::PowerSum);
    if let Some((mu, _)) = p.terms().find(|(mu, _)| mu.size() != n) {
        return Err(Error::DegreeMismatch { expected: n, found: mu.size() });
    }
    Ok(ClassFunction::from_fn(n, |mu| p.coefficient(mu) * Rational::from_integer(BigInt::from(mu.z()))))
}

/// Multiplicities `m_λ = ⟨χ, χ^λ⟩`, zeros omitted.
///
/// Fails when a multiplicity is negative or non-integral.
pub fn decompose(chi: &ClassFunction) -> Result<BTreeMap<Partition, BigInt>> {
    let mut out = BTreeMap::new();
    for lambda in generate_partitions(chi.n) {
        let m = chi.inner(&irreducible_character(&lambda))?;
        if !m.is_integer() || m.is_negative() {
            return Err(Error::NotACharacter { partition: lambda, value: ratio::to_string(&m) });
        }
        if !m.is_zero() {
            out.insert(lambda, m.to_integer());
        }
    }
    Ok(out)
}

/// The Schur expansion `Σ m_λ s_λ` of a decomposition.
pub fn decomposition_to_schur(multiplicities: &BTreeMap<Partition, BigInt>) -> SymFunc {
    SymFunc::from_terms(
        Basis::Schur,
        multiplicities.iter().map(|(l, m)| (l.clone(), Rational::from_integer(m.clone()))),
    )
}

/// Frobenius image of `Ind_{S_{b_1} × S_{b_2} × ...}^{S_n} 1`, i.e.
/// `h_{b_1} h_{b_2} ...`, in the Schur basis.
pub fn induce_trivial_from_young(blocks: &[usize]) -> SymFunc {
    let h = SymFunc::generator(Basis::Complete, Partition::from_unsorted(blocks.to_vec()));
    h.to_basis(Basis::Schur)
}

/// Pointwise product of class functions.
pub fn kronecker_product(a: &ClassFunction, b: &ClassFunction) -> Result<ClassFunction> {
    a.check_degree(b)?;
    Ok(ClassFunction::from_fn(a.n, |mu| &a.values[mu] * &b.values[mu]))
}

/// Multiplicity of `χ^λ` in `χ^μ · χ^ν`.
pub fn kronecker_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigInt> {
    let n = lambda.size();
    for other in [mu, nu] {
        if other.size() != n {
            return Err(Error::DegreeMismatch { expected: n, found: other.size() });
        }
    }
    let total: Rational = generate_partitions(n)
        .iter()
        .map(|rho| {
            let prod = character_value(lambda, rho) * character_value(mu, rho) * character_value(nu, rho);
            Rational::new(BigInt::from(prod), BigInt::from(rho.z()))
        })
        .sum();
    debug_assert!(total.is_integer());
    Ok(total.to_integer())
}

/// The regular character: `n!` at the identity, zero elsewhere.
pub fn regular_character(n: usize) -> ClassFunction {
    let id = Partition::column(n);
    ClassFunction::from_fn(n, |mu| {
        if *mu == id {
            Rational::from_integer(BigInt::from(crate::partitions::factorial(n)))
        } else {
            Rational::zero()
        }
    })
}

/// The trivial character of `S_n`.
pub fn trivial_character(n: usize) -> ClassFunction {
    ClassFunction::from_fn(n, |_| Rational::one())
}
