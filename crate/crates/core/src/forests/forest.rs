//! Labeled rooted forests whose roots may carry a loop, and canonical codes
//! for their components.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::transform::PartialTransformation;
use crate::error::{Error, Result};

/// Canonical code of a rooted tree: `(` followed by the sorted codes of the
/// children and `)`. Equal codes mean isomorphic rooted trees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShapeCode(pub(crate) Vec<u8>);

impl ShapeCode {
    /// The single-vertex tree.
    pub fn leaf() -> Self {
        ShapeCode(b"()".to_vec())
    }

    pub fn from_children(mut children: Vec<ShapeCode>) -> Self {
        children.sort();
        let mut bytes = vec![b'('];
        for c in children {
            bytes.extend_from_slice(&c.0);
        }
        bytes.push(b')');
        ShapeCode(bytes)
    }

    /// Codes of the root's children, in sorted order.
    pub fn children(&self) -> Vec<ShapeCode> {
        let inner = &self.0[1..self.0.len() - 1];
        let mut out = Vec::new();
        let mut depth = 0usize;
        let mut start = 0;
        for (i, &b) in inner.iter().enumerate() {
            if b == b'(' {
                if depth == 0 {
                    start = i;
                }
                depth += 1;
            } else {
                depth -= 1;
                if depth == 0 {
                    out.push(ShapeCode(inner[start..=i].to_vec()));
                }
            }
        }
        out
    }

    /// Number of vertices.
    pub fn size(&self) -> usize {
        self.0.len() / 2
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("ascii")
    }
}

/// Code of a component: a marker byte `L` (looped root) or `T` (plain
/// root) followed by the shape code.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeCode {
    pub looped: bool,
    pub shape: ShapeCode,
}

impl TreeCode {
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = vec![if self.looped { b'L' } else { b'T' }];
        out.extend_from_slice(&self.shape.0);
        out
    }
}

impl fmt::Display for TreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.looped { 'L' } else { 'T' }, self.shape.as_str())
    }
}

/// A rooted forest on `0..n` where some roots carry a loop.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LoopAugmentedForest {
    parent: Vec<Option<usize>>,
    loops: BTreeSet<usize>,
}

impl LoopAugmentedForest {
    /// Validates acyclicity and that every loop sits on a root.
    pub fn new(parent: Vec<Option<usize>>, loops: BTreeSet<usize>) -> Result<Self> {
        let n = parent.len();
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = p {
                if *p >= n {
                    return Err(Error::InvalidForest(format!("parent {} of vertex {} outside 1..={n}", p + 1, v + 1)));
                }
            }
        }
        for &l in &loops {
            if l >= n || parent[l].is_some() {
                return Err(Error::InvalidForest(format!("loop at {} which is not a root", l + 1)));
            }
        }
        for start in 0..n {
            let mut v = start;
            for _ in 0..=n {
                match parent[v] {
                    Some(p) => v = p,
                    None => break,
                }
            }
            if parent[v].is_some() {
                return Err(Error::InvalidForest(format!("cycle through vertex {}", start + 1)));
            }
        }
        Ok(LoopAugmentedForest { parent, loops })
    }

    /// `n` isolated plain roots.
    pub fn isolated(n: usize) -> Self {
        LoopAugmentedForest { parent: vec![None; n], loops: BTreeSet::new() }
    }

    /// Reads a partial transformation whose only cycles are fixed points:
    /// edges `i -> f(i)` become parent links and fixed points become loops.
    pub fn from_transformation(f: &PartialTransformation) -> Result<Self> {
        let parent: Vec<Option<usize>> =
            f.images().iter().enumerate().map(|(i, j)| j.filter(|&j| j != i)).collect();
        let loops = f.fixed_points().into_iter().collect();
        Self::new(parent, loops)
            .map_err(|_| Error::InvalidForest("transformation has a cycle of length > 1".to_string()))
    }

    pub fn to_transformation(&self) -> PartialTransformation {
        let image = self
            .parent
            .iter()
            .enumerate()
            .map(|(v, p)| p.or_else(|| self.loops.contains(&v).then_some(v)))
            .collect();
        PartialTransformation::from_images(image).expect("parents are in range")
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn loops(&self) -> &BTreeSet<usize> {
        &self.loops
    }

    pub fn has_loops(&self) -> bool {
        !self.loops.is_empty()
    }

    pub fn roots(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.parent[v].is_none()).collect()
    }

    fn children(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n()];
        for (v, p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                out[*p].push(v);
            }
        }
        out
    }

    /// Codes of the components, sorted.
    pub fn component_codes(&self) -> Vec<TreeCode> {
        let children = self.children();
        fn shape(v: usize, children: &[Vec<usize>]) -> ShapeCode {
            ShapeCode::from_children(children[v].iter().map(|&c| shape(c, children)).collect())
        }
        let mut codes: Vec<TreeCode> = self
            .roots()
            .into_iter()
            .map(|r| TreeCode { looped: self.loops.contains(&r), shape: shape(r, &children) })
            .collect();
        codes.sort();
        codes
    }

    /// Isomorphism-invariant code of the whole forest.
    pub fn canonical_code(&self) -> Vec<u8> {
        self.component_codes().iter().flat_map(TreeCode::to_bytes).collect()
    }

    /// Lays out the components in preorder; inverse to
    /// [`Self::component_codes`] up to relabeling.
    pub fn from_codes(codes: &[TreeCode]) -> Self {
        fn place(shape: &ShapeCode, parent: Option<usize>, out: &mut Vec<Option<usize>>) {
            let me = out.len();
            out.push(parent);
            for c in shape.children() {
                place(&c, Some(me), out);
            }
        }
        let mut parent = Vec::new();
        let mut loops = BTreeSet::new();
        for code in codes {
            if code.looped {
                loops.insert(parent.len());
            }
            place(&code.shape, None, &mut parent);
        }
        LoopAugmentedForest { parent, loops }
    }

    /// The same forest with a loop added at every root listed.
    pub fn with_loops(&self, loops: BTreeSet<usize>) -> Result<Self> {
        Self::new(self.parent.clone(), loops)
    }
}

#[derive(Serialize, Deserialize)]
struct ForestJson {
    n: usize,
    parent: Vec<usize>,
    #[serde(default)]
    loops: Vec<usize>,
}

impl Serialize for LoopAugmentedForest {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ForestJson {
            n: self.n(),
            parent: self.parent.iter().map(|p| p.map_or(0, |p| p + 1)).collect(),
            loops: self.loops.iter().map(|l| l + 1).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LoopAugmentedForest {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = ForestJson::deserialize(d)?;
        if raw.parent.len() != raw.n {
            return Err(D::Error::custom(format!("parent has {} entries, expected n = {}", raw.parent.len(), raw.n)));
        }
        let parent = raw.parent.iter().map(|&p| p.checked_sub(1)).collect();
        let mut loops = BTreeSet::new();
        for &l in &raw.loops {
            if l == 0 || l > raw.n || !loops.insert(l - 1) {
                return Err(D::Error::custom(format!("bad loop entry {l}")));
            }
        }
        LoopAugmentedForest::new(parent, loops).map_err(D::Error::custom)
    }
}
