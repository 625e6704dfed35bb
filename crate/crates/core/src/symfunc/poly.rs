//! Symmetric functions evaluated in finitely many variables.
//!
//! This is a reference route that never touches the character table:
//! `p_k ↦ Σ x_i^k`, `h_k ↦` the sum of all degree-`k` monomials, and `s_λ`
//! through its Jacobi–Trudi expansion in the `h_k`. Schur coefficients are
//! read back by leading-monomial elimination.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Signed, Zero};

use super::{jacobi_trudi, Basis, SymFunc};
use crate::partitions::Partition;
use crate::Rational;

/// A polynomial in `nvars` commuting variables, keyed by exponent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], Rational::one())
    }

    pub fn monomial(exponents: Vec<u32>, c: Rational) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, exponents: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
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

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, c * d);
            }
        }
        out
    }

    /// `Σ_i x_i^k`.
    pub fn power_sum(nvars: usize, k: usize) -> Polynomial {
        let mut out = Self::zero(nvars);
        for i in 0..nvars {
            let mut e = vec![0; nvars];
            e[i] = k as u32;
            out.add_term(e, Rational::one());
        }
        out
    }

    /// Sum of all monomials of degree `k`.
    pub fn complete(nvars: usize, k: usize) -> Polynomial {
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Polynomial) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.add_term(cur.clone(), Rational::one());
                return;
            }
            for e in 0..=left {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
        }
        let mut out = Self::zero(nvars);
        if nvars == 0 {
            if k == 0 {
                out = Self::one(0);
            }
            return out;
        }
        rec(0, k as u32, &mut vec![0; nvars], &mut out);
        out
    }

    /// Schur expansion of a symmetric polynomial by repeatedly cancelling
    /// the lexicographically largest monomial with the matching `s_λ`.
    ///
    /// Faithful when `nvars` is at least the degree of every term.
    pub fn to_schur(&self) -> SymFunc {
        let mut rest = self.clone();
        let mut out = SymFunc::zero(Basis::Schur);
        let mut cache: HashMap<Partition, Polynomial> = HashMap::new();
        while let Some((lead, c)) = rest.terms.last_key_value() {
            assert!(
                lead.windows(2).all(|w| w[0] >= w[1]),
                "leading monomial {lead:?} is not a partition: polynomial is not symmetric"
            );
            let lambda = Partition::from_unsorted(lead.iter().map(|&e| e as usize).collect());
            let c = c.clone();
            let schur = cache
                .entry(lambda.clone())
                .or_insert_with(|| expand_in_variables(&SymFunc::generator(Basis::Schur, lambda.clone()), self.nvars));
            rest = rest.add(&schur.scale(&-c.clone()));
            out = out.add(&SymFunc::from_terms(Basis::Schur, [(lambda, c)])).expect("same basis");
        }
        out
    }
}

/// The image of `f` in `nvars` variables.
pub fn expand_in_variables(f: &SymFunc, nvars: usize) -> Polynomial {
    let mut h_cache: HashMap<usize, Polynomial> = HashMap::new();
    let mut p_cache: HashMap<usize, Polynomial> = HashMap::new();
    let mut out = Polynomial::zero(nvars);
    let mut product = |basis: Basis, lambda: &Partition| -> Polynomial {
        let mut acc = Polynomial::one(nvars);
        for &k in lambda.parts() {
            let factor = match basis {
                Basis::PowerSum => p_cache.entry(k).or_insert_with(|| Polynomial::power_sum(nvars, k)),
                _ => h_cache.entry(k).or_insert_with(|| Polynomial::complete(nvars, k)),
            };
            acc = acc.mul(factor);
        }
        acc
    };
    for (lambda, c) in f.terms() {
        let term = match f.basis() {
            Basis::PowerSum | Basis::Complete => product(f.basis(), lambda),
            Basis::Schur => {
                let mut acc = Polynomial::zero(nvars);
                for (mu, d) in jacobi_trudi(lambda) {
                    acc = acc.add(&product(Basis::Complete, &mu).scale(&Rational::from_integer(d)));
                }
                acc
            }
        };
        out = out.add(&term.scale(c));
    }
    out
}

/// `f[g]` computed by substitution: expand `g` in `nvars` variables, treat
/// each of its monomials (repeated according to its coefficient) as a new
/// variable, and evaluate `f` at those.
///
/// Requires `g` to have nonnegative integer coefficients in the monomial
/// expansion, which holds for Schur-positive integral `g`.
pub fn plethysm_by_substitution(f: &SymFunc, g: &SymFunc, nvars: usize) -> Polynomial {
    let inner = expand_in_variables(g, nvars);
    let mut alphabet: Vec<Vec<u32>> = Vec::new();
    for (e, c) in inner.terms() {
        assert!(c.is_integer() && !c.is_negative(), "inner function has a non-monomial-positive term");
        let times: usize = c.to_integer().try_into().expect("coefficient fits in usize");
        alphabet.extend(std::iter::repeat_n(e.clone(), times));
    }
    let outer = expand_in_variables(f, alphabet.len());
    let mut out = Polynomial::zero(nvars);
    for (e, c) in outer.terms() {
        let mut exponents = vec![0u32; nvars];
        for (k, &power) in e.iter().enumerate() {
            if power == 0 {
                continue;
            }
            for (slot, &x) in exponents.iter_mut().zip(&alphabet[k]) {
                *slot += power * x;
            }
        }
        out.add_term(exponents, c.clone());
    }
    out
}
