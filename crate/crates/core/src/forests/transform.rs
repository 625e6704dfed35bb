//! Partial transformations of `{1, .., n}` and their 0/1 matrices.
//!
//! Internally vertices are `0..n`; the JSON form and error messages use
//! 1-based labels. The matrix convention is `M[i][j] = 1` iff `f(i) = j`, so
//! every row holds at most one 1.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::perm::check_permutation;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialTransformation {
    image: Vec<Option<usize>>,
}

impl PartialTransformation {
    /// The map with empty domain.
    pub fn zero(n: usize) -> Self {
        PartialTransformation { image: vec![None; n] }
    }

    pub fn identity(n: usize) -> Self {
        PartialTransformation { image: (0..n).map(Some).collect() }
    }

    /// `image[i]` is `f(i)` (0-based) or `None` outside the domain.
    pub fn from_images(image: Vec<Option<usize>>) -> Result<Self> {
        let n = image.len();
        if let Some(bad) = image.iter().flatten().find(|&&j| j >= n) {
            return Err(Error::Parse(format!("image {} outside 1..={n}", bad + 1)));
        }
        Ok(PartialTransformation { image })
    }

    /// The matrix unit `E_{i,j}` (0-based), viewed as a partial map.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut f = Self::zero(n);
        f.image[i] = Some(j);
        f
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn images(&self) -> &[Option<usize>] {
        &self.image
    }

    pub fn apply(&self, i: usize) -> Option<usize> {
        self.image[i]
    }

    pub fn to_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.n();
        let mut m = vec![vec![0u8; n]; n];
        for (i, j) in self.image.iter().enumerate() {
            if let Some(j) = j {
                m[i][*j] = 1;
            }
        }
        m
    }

    /// Rejects non-square, non-binary, and rows with more than one 1.
    pub fn from_matrix(m: &[Vec<i64>]) -> Result<Self> {
        let n = m.len();
        let mut image = vec![None; n];
        for (i, row) in m.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse(format!("row {} has length {}, expected {n}", i + 1, row.len())));
            }
            let mut ones = 0;
            for (j, &v) in row.iter().enumerate() {
                match v {
                    0 => {}
                    1 => {
                        ones += 1;
                        image[i] = Some(j);
                    }
                    _ => return Err(Error::NonBinaryMatrix { row: i + 1, col: j + 1, value: v }),
                }
            }
            if ones > 1 {
                return Err(Error::NonFunctionalMatrix { row: i + 1, ones });
            }
        }
        Ok(PartialTransformation { image })
    }

    /// `σ f σ^{-1}`: the map sending `σ(i)` to `σ(f(i))`.
    pub fn conjugate(&self, sigma: &[usize]) -> Result<Self> {
        if sigma.len() != self.n() {
            return Err(Error::InvalidPermutation(format!("length {} for n = {}", sigma.len(), self.n())));
        }
        check_permutation(sigma)?;
        Ok(self.conjugate_unchecked(sigma))
    }

    pub(crate) fn conjugate_unchecked(&self, sigma: &[usize]) -> Self {
        let mut image = vec![None; self.n()];
        for (i, j) in self.image.iter().enumerate() {
            image[sigma[i]] = j.map(|j| sigma[j]);
        }
        PartialTransformation { image }
    }

    /// True when `σ f σ^{-1} = f`.
    pub fn is_fixed_by(&self, sigma: &[usize]) -> bool {
        self.image.iter().enumerate().all(|(i, j)| self.image[sigma[i]] == j.map(|j| sigma[j]))
    }

    /// Some power of the matrix vanishes.
    ///
    /// Uses the extension by zero: a total map on `{0, 1, .., n}` that sends
    /// `0` and every point outside the domain to `0`. `f` is nilpotent
    /// exactly when `n` iterations of that map send everything to `0`.
    pub fn is_nilpotent(&self) -> bool {
        let n = self.n();
        let extended: Vec<usize> = std::iter::once(0).chain(self.image.iter().map(|j| j.map_or(0, |j| j + 1))).collect();
        let mut state: Vec<usize> = (0..=n).collect();
        for _ in 0..n {
            for x in state.iter_mut() {
                *x = extended[*x];
            }
        }
        state.iter().all(|&x| x == 0)
    }

    /// Fixed points, i.e. loops of the functional graph.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.image[i] == Some(i)).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct TransformationJson {
    n: usize,
    image: BTreeMap<usize, usize>,
}

impl Serialize for PartialTransformation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let image = self.image.iter().enumerate().filter_map(|(i, j)| j.map(|j| (i + 1, j + 1))).collect();
        TransformationJson { n: self.n(), image }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PartialTransformation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = TransformationJson::deserialize(d)?;
        let mut image = vec![None; raw.n];
        for (i, j) in raw.image {
            if i == 0 || i > raw.n || j == 0 || j > raw.n {
                return Err(D::Error::custom(format!("entry {i} -> {j} outside 1..={}", raw.n)));
            }
            image[i - 1] = Some(j - 1);
        }
        Ok(PartialTransformation { image })
    }
}
