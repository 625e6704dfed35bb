//! The conjugation action of `S_n` on `Mat_n`, `Sym_n` and `Skew_n`.
//!
//! Each space gets three independent Frobenius characters: the closed
//! forms, an assembly from orbit building blocks (`E_{i,j}`, `E_{i,i}` and
//! `F_{i,j} = E_{i,j} + E_{j,i}`), and explicit traces of permutation
//! matrices acting on a basis.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::{decompose, decomposition_to_schur, ClassFunction};
use crate::error::{Error, Result};
use crate::forests::{self, perm::canonical_permutation, LoopAugmentedForest};
use crate::partitions::Partition;
use crate::symfunc::{Basis, SymFunc};
use crate::Rational;

/// Cap on `n` for the trace oracle when `ADJOINT_CAP` is unset.
pub const DEFAULT_CAP: usize = 10;

pub fn cap() -> usize {
    forests::env_cap().unwrap_or(DEFAULT_CAP)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceKind {
    Mat,
    Sym,
    Skew,
}

impl SpaceKind {
    pub const ALL: [SpaceKind; 3] = [SpaceKind::Mat, SpaceKind::Sym, SpaceKind::Skew];

    pub fn name(self) -> &'static str {
        match self {
            SpaceKind::Mat => "mat",
            SpaceKind::Sym => "sym",
            SpaceKind::Skew => "skew",
        }
    }
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpaceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mat" => Ok(SpaceKind::Mat),
            "sym" => Ok(SpaceKind::Sym),
            "skew" => Ok(SpaceKind::Skew),
            other => Err(Error::Parse(format!("unknown space {other:?} (expected mat, sym or skew)"))),
        }
    }
}

type Matrix = Vec<Vec<i64>>;

/// `Mat_n`, `Sym_n` or `Skew_n` with its distinguished basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixSpace {
    pub n: usize,
    pub kind: SpaceKind,
}

impl MatrixSpace {
    pub fn new(n: usize, kind: SpaceKind) -> Self {
        MatrixSpace { n, kind }
    }

    pub fn dimension(&self) -> usize {
        let n = self.n;
        match self.kind {
            SpaceKind::Mat => n * n,
            SpaceKind::Sym => n * (n + 1) / 2,
            SpaceKind::Skew => n * n.saturating_sub(1) / 2,
        }
    }

    /// Index pairs of the basis: all `(i,j)` for `Mat`; `i <= j` for `Sym`
    /// (`E_{i,i}` and `F_{i,j}`); `i < j` for `Skew` (`K_{i,j}`).
    fn index_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let keep = match self.kind {
                    SpaceKind::Mat => true,
                    SpaceKind::Sym => i <= j,
                    SpaceKind::Skew => i < j,
                };
                if keep {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn basis(&self) -> Vec<Matrix> {
        self.index_pairs()
            .into_iter()
            .map(|(i, j)| {
                let mut m = vec![vec![0i64; self.n]; self.n];
                match self.kind {
                    SpaceKind::Mat => m[i][j] = 1,
                    SpaceKind::Sym => {
                        m[i][j] = 1;
                        m[j][i] = 1;
                    }
                    SpaceKind::Skew => {
                        m[i][j] = 1;
                        m[j][i] = -1;
                    }
                }
                m
            })
            .collect()
    }

    /// Coordinates of `x` in the basis; `x` must lie in the space.
    pub fn coordinates(&self, x: &Matrix) -> Vec<i64> {
        self.index_pairs().into_iter().map(|(i, j)| x[i][j]).collect()
    }
}

/// `P X P^{-1}` for the permutation matrix `P e_i = e_{σ(i)}`.
fn conjugate_matrix(x: &Matrix, sigma: &[usize]) -> Matrix {
    let n = x.len();
    let p: Matrix = (0..n).map(|r| (0..n).map(|c| (sigma[c] == r) as i64).collect()).collect();
    let mul = |a: &Matrix, b: &Matrix| -> Matrix {
        (0..n).map(|r| (0..n).map(|c| (0..n).map(|k| a[r][k] * b[k][c]).sum()).collect()).collect()
    };
    let pt: Matrix = (0..n).map(|r| (0..n).map(|c| p[c][r]).collect()).collect();
    mul(&mul(&p, x), &pt)
}

/// Trace of `Ad_σ` from the cycle structure alone.
fn trace_by_counting(kind: SpaceKind, sigma: &[usize]) -> i64 {
    let fixed = (0..sigma.len()).filter(|&i| sigma[i] == i).count() as i64;
    let swapped = (0..sigma.len()).filter(|&i| sigma[i] != i && sigma[sigma[i]] == i).count() as i64 / 2;
    let preserved_pairs = fixed * (fixed - 1) / 2;
    match kind {
        SpaceKind::Mat => fixed * fixed,
        SpaceKind::Sym => fixed + preserved_pairs + swapped,
        SpaceKind::Skew => preserved_pairs - swapped,
    }
}

/// The character of `Ad` on the space, by conjugating every basis element
/// with a representative of each class and summing diagonal coordinates.
pub fn trace_character(n: usize, kind: SpaceKind) -> Result<ClassFunction> {
    let cap = cap();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let space = MatrixSpace::new(n, kind);
    let basis = space.basis();
    Ok(ClassFunction::from_fn(n, |mu| {
        let sigma = canonical_permutation(mu);
        let trace: i64 = basis
            .iter()
            .enumerate()
            .map(|(b, x)| space.coordinates(&conjugate_matrix(x, &sigma))[b])
            .sum();
        assert_eq!(trace, trace_by_counting(kind, &sigma), "{kind} trace at class {mu}");
        Rational::from_integer(BigInt::from(trace))
    }))
}

fn schur(terms: &[(Partition, i64)]) -> SymFunc {
    SymFunc::from_terms(Basis::Schur, terms.iter().map(|(l, c)| (l.clone(), Rational::from_integer(BigInt::from(*c)))))
}

fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("literal partition")
}

fn check_range(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::OutsideTheoremRange(n));
    }
    Ok(())
}

/// The closed forms, case by case in `n`.
pub fn theorem_formula(n: usize, kind: SpaceKind) -> Result<SymFunc> {
    check_range(n)?;
    let terms = match (kind, n) {
        (SpaceKind::Mat, 2) => vec![(part(&[2]), 2), (part(&[1, 1]), 2)],
        (SpaceKind::Mat, 3) => vec![(part(&[3]), 2), (part(&[2, 1]), 3), (part(&[1, 1, 1]), 1)],
        (SpaceKind::Mat, _) => vec![
            (part(&[n]), 2),
            (part(&[n - 1, 1]), 3),
            (part(&[n - 2, 2]), 1),
            (part(&[n - 2, 1, 1]), 1),
        ],
        (SpaceKind::Sym, 2) => vec![(part(&[2]), 2), (part(&[1, 1]), 1)],
        (SpaceKind::Sym, 3) => vec![(part(&[3]), 2), (part(&[2, 1]), 3)],
        (SpaceKind::Sym, _) => vec![(part(&[n]), 2), (part(&[n - 1, 1]), 2), (part(&[n - 2, 2]), 1)],
        (SpaceKind::Skew, 2) => vec![(part(&[1, 1]), 1)],
        (SpaceKind::Skew, 3) => vec![(part(&[1, 1, 1]), 1)],
        (SpaceKind::Skew, _) => vec![(part(&[n - 1, 1]), 1), (part(&[n - 2, 1, 1]), 1)],
    };
    Ok(schur(&terms))
}

/// Orbit of `E_{i,j}`, `i != j`: a 2-vertex chain plus `n-2` roots.
pub fn off_diagonal_unit_forest(n: usize) -> LoopAugmentedForest {
    let mut parent = vec![None; n];
    parent[0] = Some(1);
    LoopAugmentedForest::new(parent, Default::default()).expect("chain")
}

/// Orbit of `E_{i,i}`: one looped root plus `n-1` plain roots.
pub fn diagonal_unit_forest(n: usize) -> LoopAugmentedForest {
    LoopAugmentedForest::isolated(n).with_loops([0].into()).expect("loop on a root")
}

/// The character assembled from orbit characters:
/// `Mat = o(E_{i,j}) + o(E_{i,i})`, `Sym = o(F_{i,j}) + o(E_{i,i})`,
/// `Skew = Mat - Sym`.
pub fn orbit_formula(n: usize, kind: SpaceKind) -> Result<SymFunc> {
    check_range(n)?;
    let diagonal = forests::odun_frobenius(&diagonal_unit_forest(n));
    let off_diagonal = forests::odun_frobenius(&off_diagonal_unit_forest(n));
    let symmetric_pairs = forests::master_character(&part(&[2]), &LoopAugmentedForest::isolated(n - 2))?;
    let mat = off_diagonal.add(&diagonal)?;
    let sym = symmetric_pairs.add(&diagonal)?;
    match kind {
        SpaceKind::Mat => Ok(mat),
        SpaceKind::Sym => Ok(sym),
        SpaceKind::Skew => mat.sub(&sym),
    }
}

/// Schur expansion of [`trace_character`].
pub fn bruteforce_formula(n: usize, kind: SpaceKind) -> Result<SymFunc> {
    Ok(decomposition_to_schur(&decompose(&trace_character(n, kind)?)?))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpaceRecord {
    pub n: usize,
    pub space: SpaceKind,
    pub formula: SymFunc,
    pub orbit: SymFunc,
    pub bruteforce: SymFunc,
    #[serde(rename = "match")]
    pub matches: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AdditivityRecord {
    pub n: usize,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub records: Vec<SpaceRecord>,
    /// `χ_Mat = χ_Sym + χ_Skew` class by class.
    pub additivity: Vec<AdditivityRecord>,
    pub all_match: bool,
}

impl VerifyReport {
    /// The first mismatch as a structured error.
    pub fn check(&self) -> Result<()> {
        if let Some(r) = self.records.iter().find(|r| !r.matches) {
            return Err(Error::Mismatch {
                n: r.n,
                space: r.space.to_string(),
                detail: format!("formula {} | orbit {} | bruteforce {}", r.formula, r.orbit, r.bruteforce),
            });
        }
        if let Some(a) = self.additivity.iter().find(|a| !a.matches) {
            return Err(Error::Mismatch {
                n: a.n,
                space: "mat = sym + skew".to_string(),
                detail: "trace characters are not additive".to_string(),
            });
        }
        Ok(())
    }
}

fn space_record(n: usize, kind: SpaceKind) -> Result<SpaceRecord> {
    let start = Instant::now();
    let formula = theorem_formula(n, kind)?;
    let orbit = orbit_formula(n, kind)?;
    let bruteforce = bruteforce_formula(n, kind)?;
    let matches = formula == orbit && orbit == bruteforce;
    Ok(SpaceRecord { n, space: kind, formula, orbit, bruteforce, matches, elapsed: start.elapsed() })
}

/// Every `(n, space)` cell for `2 <= n <= n_max`, computed in parallel.
/// Mismatches are reported, not raised; see [`VerifyReport::check`].
pub fn verify_report(n_max: usize) -> Result<VerifyReport> {
    check_range(n_max)?;
    let cap = cap();
    if n_max > cap {
        return Err(Error::CapExceeded { n: n_max, cap });
    }
    let cells: Vec<(usize, SpaceKind)> = (2..=n_max).flat_map(|n| SpaceKind::ALL.map(|k| (n, k))).collect();
    let records = cells.par_iter().map(|&(n, k)| space_record(n, k)).collect::<Result<Vec<_>>>()?;
    let additivity = (2..=n_max)
        .map(|n| {
            let mat = trace_character(n, SpaceKind::Mat)?;
            let sum = trace_character(n, SpaceKind::Sym)?.add(&trace_character(n, SpaceKind::Skew)?)?;
            Ok(AdditivityRecord { n, matches: mat == sum })
        })
        .collect::<Result<Vec<_>>>()?;
    let all_match = records.iter().all(|r| r.matches) && additivity.iter().all(|a| a.matches);
    Ok(VerifyReport { records, additivity, all_match })
}

/// [`verify_report`] followed by [`VerifyReport::check`].
pub fn verify(n_max: usize) -> Result<VerifyReport> {
    let report = verify_report(n_max)?;
    report.check()?;
    Ok(report)
}
