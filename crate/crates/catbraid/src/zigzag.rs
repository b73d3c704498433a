//! The bigraded zigzag algebra of an oriented ADE diagram.
//!
//! Basis: idempotents `e_i`, one edge path per ordered pair of adjacent
//! vertices and one loop `X_i` per vertex. A basis morphism of bidegree
//! `β = (path, orient)` maps `P_a` with shift label `s` to `P_c` with label
//! `s − β`, so degree-0 maps between shifted projectives are exactly the
//! basis elements whose bidegree matches the label difference.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::coxeter::DynkinSpec;
use crate::error::{Error, Result};
use crate::garside_dual::Orientation;

/// Exact rational scalars.
pub type Q = Ratio<i64>;

/// Bigrading `(path length, orientation)`.
pub type Bidegree = (i32, i32);

/// A basis morphism between indecomposable projectives (0-based vertices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisMorphism {
    /// `e_i : P_i → P_i`.
    Identity(usize),
    /// The length-one path `P_a → P_c` for adjacent `a, c`.
    Edge(usize, usize),
    /// `X_i : P_i → P_i`, the common length-two path at `i`.
    Loop(usize),
}

use BasisMorphism::{Edge, Identity, Loop};

impl BasisMorphism {
    pub fn source(self) -> usize {
        match self {
            Identity(i) | Loop(i) | Edge(i, _) => i,
        }
    }

    pub fn target(self) -> usize {
        match self {
            Identity(i) | Loop(i) | Edge(_, i) => i,
        }
    }

    /// Path-length degree alone.
    pub fn path_length(self) -> i32 {
        match self {
            Identity(_) => 0,
            Edge(..) => 1,
            Loop(_) => 2,
        }
    }

    /// The dual basis element under the trace pairing `(f, g) ↦ coeff of the
    /// loop in f·g`: identity and loop swap, edges reverse.
    pub fn dual(self) -> BasisMorphism {
        match self {
            Identity(i) => Loop(i),
            Loop(i) => Identity(i),
            Edge(a, c) => Edge(c, a),
        }
    }
}

impl fmt::Display for BasisMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Identity(i) => write!(f, "id({})", i + 1),
            Edge(a, c) => write!(f, "edge({},{})", a + 1, c + 1),
            Loop(i) => write!(f, "loop({})", i + 1),
        }
    }
}

impl FromStr for BasisMorphism {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidMorphism(s.to_string());
        let (head, rest) = s.split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        if nums.contains(&0) {
            return Err(bad());
        }
        match (head.trim(), nums.as_slice()) {
            ("id", [i]) => Ok(Identity(i - 1)),
            ("loop", [i]) => Ok(Loop(i - 1)),
            ("edge", [a, c]) if a != c => Ok(Edge(a - 1, c - 1)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for BasisMorphism {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BasisMorphism {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A scalar multiple of a basis morphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MorphismTerm {
    pub coeff: Q,
    pub basis: BasisMorphism,
}

/// The zigzag algebra of a diagram with a chosen orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZigzagAlgebra {
    spec: DynkinSpec,
    orientation: Orientation,
}

impl ZigzagAlgebra {
    pub fn new(spec: &DynkinSpec, orientation: &Orientation) -> Self {
        ZigzagAlgebra { spec: spec.clone(), orientation: orientation.clone() }
    }

    pub fn spec(&self) -> &DynkinSpec {
        &self.spec
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    /// Whether `b` is a basis element of this algebra.
    pub fn is_valid(&self, b: BasisMorphism) -> bool {
        let n = self.rank();
        match b {
            Identity(i) | Loop(i) => i < n,
            Edge(a, c) => a < n && c < n && self.spec.adjacent(a, c),
        }
    }

    /// Bidegree: identity `(0,0)`, loop `(2,1)`, edge `a → c` `(1,0)` when
    /// the orientation has the arrow `a → c` and `(1,1)` otherwise.
    pub fn bidegree(&self, b: BasisMorphism) -> Bidegree {
        match b {
            Identity(_) => (0, 0),
            Loop(_) => (2, 1),
            Edge(a, c) => {
                if self.orientation.has_arrow(a, c) {
                    (1, 0)
                } else {
                    (1, 1)
                }
            }
        }
    }

    /// Algebra product in path order: `f` followed by `g`. Returns `None`
    /// for zero, including mismatched endpoints. All structure constants
    /// are `+1`.
    #[inline]
    pub fn then(&self, f: BasisMorphism, g: BasisMorphism) -> Option<BasisMorphism> {
        if f.target() != g.source() {
            return None;
        }
        match (f, g) {
            (Identity(_), x) | (x, Identity(_)) => Some(x),
            (Edge(a, _), Edge(_, c)) if a == c => Some(Loop(a)),
            _ => None,
        }
    }

    /// Composition `g ∘ f` of terms; errors on endpoint mismatch.
    pub fn compose(&self, g: MorphismTerm, f: MorphismTerm) -> Result<Option<MorphismTerm>> {
        if f.basis.target() != g.basis.source() {
            return Err(Error::InvalidMorphism(format!("cannot compose {} after {}", g.basis, f.basis)));
        }
        Ok(self
            .then(f.basis, g.basis)
            .map(|basis| MorphismTerm { coeff: f.coeff * g.coeff, basis }))
    }

    /// All basis morphisms `P_a → P_c`.
    pub fn basis_between(&self, a: usize, c: usize) -> Vec<BasisMorphism> {
        if a == c {
            vec![Identity(a), Loop(a)]
        } else if self.spec.adjacent(a, c) {
            vec![Edge(a, c)]
        } else {
            Vec::new()
        }
    }

    /// Degree-0 basis morphisms between shifted projectives given as
    /// `(vertex, pshift, oshift)`.
    pub fn hom_basis(&self, source: (usize, i32, i32), target: (usize, i32, i32)) -> Vec<BasisMorphism> {
        let gap = (source.1 - target.1, source.2 - target.2);
        self.basis_between(source.0, target.0)
            .into_iter()
            .filter(|&b| self.bidegree(b) == gap)
            .collect()
    }

    /// Every basis element of the algebra.
    pub fn full_basis(&self) -> Vec<BasisMorphism> {
        let n = self.rank();
        let mut v = Vec::new();
        for a in 0..n {
            for c in 0..n {
                v.extend(self.basis_between(a, c));
            }
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> ZigzagAlgebra {
        let spec: DynkinSpec = "A3".parse().unwrap();
        let o = Orientation::parse(&spec, "2>1,2>3").unwrap();
        ZigzagAlgebra::new(&spec, &o)
    }

    #[test]
    fn composition_table() {
        let z = a3();
        assert_eq!(z.then(Edge(0, 1), Edge(1, 0)), Some(Loop(0)));
        assert_eq!(z.then(Edge(0, 1), Edge(1, 2)), None);
        assert_eq!(z.then(Edge(1, 0), Loop(0)), None);
        assert_eq!(z.then(Identity(0), Edge(0, 1)), Some(Edge(0, 1)));
        let t = |b| MorphismTerm { coeff: Q::from_integer(2), basis: b };
        let r = z.compose(t(Edge(1, 0)), t(Edge(0, 1))).unwrap().unwrap();
        assert_eq!(r.basis, Loop(0));
        assert_eq!(r.coeff, Q::from_integer(4));
        assert!(z.compose(t(Edge(1, 0)), t(Edge(1, 0))).is_err());
    }

    #[test]
    fn hom_basis_examples() {
        let z = a3();
        assert_eq!(z.hom_basis((0, 0, 0), (0, 0, 0)), vec![Identity(0)]);
        assert_eq!(z.hom_basis((0, 1, 1), (1, 0, 0)), vec![Edge(0, 1)]);
        assert_eq!(z.hom_basis((1, 1, 0), (0, 0, 0)), vec![Edge(1, 0)]);
        for p in -3..3 {
            for o in -3..3 {
                assert!(z.hom_basis((0, 0, 0), (2, p, o)).is_empty());
            }
        }
    }

    #[test]
    fn serialization() {
        for b in a3().full_basis() {
            assert_eq!(b.to_string().parse::<BasisMorphism>().unwrap(), b);
        }
        assert!("edge(1,1)".parse::<BasisMorphism>().is_err());
        assert!("id(0)".parse::<BasisMorphism>().is_err());
    }
}
