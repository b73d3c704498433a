//! Root systems and Weyl groups of simply-laced (ADE) type.
//!
//! Roots are integer vectors in the basis of simple roots, and a Weyl group
//! element is the integer matrix of its action on the root lattice. Vertices
//! are 1-based in Bourbaki labeling on the public surface and 0-based
//! internally.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dynkin family of a simply-laced diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

/// An ADE Dynkin diagram in Bourbaki labeling.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynkinSpec {
    family: Family,
    rank: usize,
    /// Edges as 0-based pairs `(i, j)` with `i < j`.
    edges: Vec<(usize, usize)>,
}

impl DynkinSpec {
    /// Builds the diagram of the given family and rank.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if !ok {
            return Err(Error::UnsupportedType(format!("{family:?}{rank}")));
        }
        let mut edges = Vec::new();
        match family {
            Family::A => {
                for i in 0..rank.saturating_sub(1) {
                    edges.push((i, i + 1));
                }
            }
            Family::D => {
                for i in 0..rank - 2 {
                    edges.push((i, i + 1));
                }
                edges.push((rank - 3, rank - 1));
            }
            Family::E => {
                // 1-3-4-5-6(-7-8) with 2 attached to 4.
                edges.push((0, 2));
                edges.push((1, 3));
                for i in 2..rank - 1 {
                    edges.push((i, i + 1));
                }
            }
        }
        edges.sort_unstable();
        Ok(DynkinSpec { family, rank, edges })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Undirected edges as 0-based pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        let key = if i < j { (i, j) } else { (j, i) };
        self.edges.binary_search(&key).is_ok()
    }

    /// Neighbours of vertex `i` in increasing order.
    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        (0..self.rank).filter(|&j| self.adjacent(i, j)).collect()
    }

    /// The Cartan matrix entry `⟨α_i, α_j⟩`.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        if i == j {
            2
        } else if self.adjacent(i, j) {
            -1
        } else {
            0
        }
    }

    /// Order of the Weyl group, from the classical product formulas.
    pub fn weyl_order(&self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match (self.family, self.rank) {
            (Family::A, n) => fact(n + 1),
            (Family::D, n) => fact(n) << (n - 1),
            (Family::E, 6) => 51_840,
            (Family::E, 7) => 2_903_040,
            (Family::E, _) => 696_729_600,
        }
    }

    /// Coxeter number `h`.
    pub fn coxeter_number(&self) -> usize {
        match (self.family, self.rank) {
            (Family::A, n) => n + 1,
            (Family::D, n) => 2 * n - 2,
            (Family::E, 6) => 12,
            (Family::E, 7) => 18,
            (Family::E, _) => 30,
        }
    }

    /// The simple reflection `s_i` (0-based `i`).
    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        if i >= self.rank {
            return Err(Error::VertexOutOfRange { vertex: i + 1, rank: self.rank });
        }
        let n = self.rank;
        let mut m = WeylElement::identity(n);
        // Column j is s_i(α_j) = α_j − ⟨α_i, α_j⟩ α_i.
        for j in 0..n {
            let c = self.cartan(i, j);
            let v = m.get(i, j) - c;
            m.set(i, j, v);
        }
        Ok(m)
    }

    /// All simple reflections, indexed by 0-based vertex.
    pub fn simple_reflections(&self) -> Vec<WeylElement> {
        (0..self.rank).map(|i| self.simple_reflection(i).expect("in range")).collect()
    }

    /// Builds the root system as the orbit of the simple roots.
    pub fn root_system(&self) -> RootSystem {
        RootSystem::new(self)
    }

    /// The Weyl group element of a word in the simple reflections.
    pub fn weyl_of_word(&self, word: &[usize]) -> WeylElement {
        let gens = self.simple_reflections();
        let mut w = WeylElement::identity(self.rank);
        for &i in word {
            w = w.mul(&gens[i]);
        }
        w
    }

    /// The longest element `w₀`.
    pub fn longest_element(&self) -> WeylElement {
        let gens = self.simple_reflections();
        let mut w = WeylElement::identity(self.rank);
        loop {
            let next = (0..self.rank).find(|&i| !w.is_right_descent(i));
            match next {
                Some(i) => w = w.mul(&gens[i]),
                None => return w,
            }
        }
    }
}

impl fmt::Display for DynkinSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(Error::UnsupportedType(s.to_string())),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| Error::UnsupportedType(s.to_string()))?;
        DynkinSpec::new(family, rank)
    }
}

/// A root in simple-root coordinates.
pub type Root = Vec<i64>;

/// Sign of a root: `true` for positive roots.
pub fn is_positive_root(r: &[i64]) -> bool {
    r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0)
}

/// Height of a root (sum of coordinates).
pub fn root_height(r: &[i64]) -> i64 {
    r.iter().sum()
}

/// An element of the Weyl group, stored as its integer matrix on the root
/// lattice. Column `j` is the image of the simple root `α_j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylElement {
    n: usize,
    m: Vec<i64>,
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[i64]> = self.m.chunks(self.n).collect();
        write!(f, "W{rows:?}")
    }
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        let mut m = vec![0; n * n];
        for i in 0..n {
            m[i * n + i] = 1;
        }
        WeylElement { n, m }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.m[r * self.n + c]
    }

    #[inline]
    fn set(&mut self, r: usize, c: usize, v: i64) {
        self.m[r * self.n + c] = v;
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.n)
    }

    /// Matrix product: `(self * other)(x) = self(other(x))`.
    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        let n = self.n;
        let mut m = vec![0; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.m[r * n + k];
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    m[r * n + c] += a * other.m[k * n + c];
                }
            }
        }
        WeylElement { n, m }
    }

    /// Image of a vector in simple-root coordinates.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = self.n;
        (0..n).map(|r| (0..n).map(|c| self.m[r * n + c] * v[c]).sum()).collect()
    }

    /// Image of the simple root `α_i`.
    pub fn image_of_simple(&self, i: usize) -> Vec<i64> {
        (0..self.n).map(|r| self.get(r, i)).collect()
    }

    /// `i ∈ D_R(w)` iff `w(α_i)` is negative.
    pub fn is_right_descent(&self, i: usize) -> bool {
        (0..self.n).any(|r| self.get(r, i) < 0)
    }

    /// Right descent set `D_R(w) = {i : w(α_i) < 0}` (0-based).
    pub fn right_descents(&self) -> BTreeSet<usize> {
        (0..self.n).filter(|&i| self.is_right_descent(i)).collect()
    }

    /// Left descent set `D_L(w) = D_R(w⁻¹)` (0-based).
    pub fn left_descents(&self) -> BTreeSet<usize> {
        self.inverse().right_descents()
    }

    /// Descent set on the requested side.
    pub fn descents(&self, side: Side) -> BTreeSet<usize> {
        match side {
            Side::Left => self.left_descents(),
            Side::Right => self.right_descents(),
        }
    }

    /// Inverse element, as the last power before the identity.
    pub fn inverse(&self) -> WeylElement {
        let id = WeylElement::identity(self.n);
        let mut prev = id.clone();
        let mut cur = self.clone();
        while cur != id {
            prev = cur.clone();
            cur = cur.mul(self);
        }
        prev
    }

    /// Coxeter length: number of positive roots sent to negative roots.
    pub fn coxeter_length(&self, roots: &RootSystem) -> usize {
        roots.positive().iter().filter(|r| !is_positive_root(&self.apply(r))).count()
    }

    /// Reflection length: rank of `w − 1`.
    pub fn reflection_length(&self) -> usize {
        let n = self.n;
        let mut a: Vec<Vec<i64>> = (0..n)
            .map(|r| (0..n).map(|c| self.get(r, c) - if r == c { 1 } else { 0 }).collect())
            .collect();
        integer_rank(&mut a)
    }
}

/// Which side a descent, divisor or lcm refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Rank of an integer matrix by fraction-free elimination.
pub(crate) fn integer_rank(a: &mut [Vec<i64>]) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, p);
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c];
                let g = a[rank][c];
                for k in 0..cols {
                    a[r][k] = a[r][k] * g - a[rank][k] * f;
                }
                let gcd = a[r].iter().fold(0i64, |acc, &x| gcd_i64(acc, x));
                if gcd > 1 {
                    for x in a[r].iter_mut() {
                        *x /= gcd;
                    }
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// The root system of a diagram with its reflections.
#[derive(Clone, Debug)]
pub struct RootSystem {
    spec: DynkinSpec,
    positive: Vec<Root>,
    reflections: Vec<WeylElement>,
}

impl RootSystem {
    fn new(spec: &DynkinSpec) -> Self {
        let n = spec.rank();
        let gens = spec.simple_reflections();
        let mut seen: HashSet<Root> = HashSet::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut r = vec![0; n];
            r[i] = 1;
            seen.insert(r.clone());
            queue.push_back(r);
        }
        while let Some(r) = queue.pop_front() {
            for g in &gens {
                let img = g.apply(&r);
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        let mut positive: Vec<Root> = seen.into_iter().filter(|r| is_positive_root(r)).collect();
        positive.sort_by(|a, b| root_height(a).cmp(&root_height(b)).then_with(|| b.cmp(a)));
        let reflections = positive.iter().map(|r| reflection_matrix(spec, r)).collect();
        RootSystem { spec: spec.clone(), positive, reflections }
    }

    pub fn spec(&self) -> &DynkinSpec {
        &self.spec
    }

    /// Positive roots sorted by height, then reverse-lexicographically.
    pub fn positive(&self) -> &[Root] {
        &self.positive
    }

    /// All roots, positive then negative.
    pub fn all_roots(&self) -> Vec<Root> {
        let mut v = self.positive.clone();
        v.extend(self.positive.iter().map(|r| r.iter().map(|x| -x).collect::<Root>()));
        v
    }

    /// Reflections `s_β`, in the order of [`Self::positive`].
    pub fn reflections(&self) -> &[WeylElement] {
        &self.reflections
    }

    /// Index of a reflection in [`Self::reflections`], if `w` is one.
    pub fn reflection_index(&self, w: &WeylElement) -> Option<usize> {
        self.reflections.iter().position(|t| t == w)
    }

    /// The positive root `β` with `s_β = t`.
    pub fn root_of_reflection(&self, t: &WeylElement) -> Option<&Root> {
        self.reflection_index(t).map(|k| &self.positive[k])
    }

    /// The reflection of a (positive or negative) root.
    pub fn reflection_of_root(&self, r: &[i64]) -> WeylElement {
        reflection_matrix(&self.spec, r)
    }
}

/// `s_β(x) = x − ⟨β, x⟩ β`.
fn reflection_matrix(spec: &DynkinSpec, beta: &[i64]) -> WeylElement {
    let n = spec.rank();
    let mut w = WeylElement::identity(n);
    for c in 0..n {
        // ⟨β, α_c⟩
        let pair: i64 = (0..n).map(|k| beta[k] * spec.cartan(k, c)).sum();
        for r in 0..n {
            let v = w.get(r, c) - pair * beta[r];
            w.set(r, c, v);
        }
    }
    w
}

/// Simple-reflection generators plus helpers bound to one diagram.
#[derive(Clone, Debug)]
pub struct Weyl {
    spec: DynkinSpec,
    gens: Vec<WeylElement>,
    roots: RootSystem,
    w0: WeylElement,
}

impl Weyl {
    pub fn new(spec: &DynkinSpec) -> Self {
        let roots = spec.root_system();
        let gens = spec.simple_reflections();
        let w0 = spec.longest_element();
        Weyl { spec: spec.clone(), gens, roots, w0 }
    }

    pub fn spec(&self) -> &DynkinSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank())
    }

    pub fn gen(&self, i: usize) -> &WeylElement {
        &self.gens[i]
    }

    pub fn longest(&self) -> &WeylElement {
        &self.w0
    }

    /// Weyl element of a 0-based word.
    pub fn of_word(&self, word: &[usize]) -> WeylElement {
        let mut w = self.identity();
        for &i in word {
            w = w.mul(&self.gens[i]);
        }
        w
    }

    /// Lexicographically smallest reduced word (0-based letters), found by
    /// peeling the smallest left descent first.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut inv = w.inverse();
        let mut word = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&i| inv.is_right_descent(i)) {
            word.push(i);
            inv = inv.mul(&self.gens[i]);
        }
        word
    }

    /// Coxeter length by inversion count.
    pub fn length(&self, w: &WeylElement) -> usize {
        w.coxeter_length(&self.roots)
    }

    /// `u ≤ w` in the prefix (right weak) order: `l(u) + l(u⁻¹w) = l(w)`.
    pub fn is_prefix(&self, u: &WeylElement, w: &WeylElement) -> bool {
        self.length(u) + self.length(&u.inverse().mul(w)) == self.length(w)
    }

    /// `u` is a suffix of `w`: `l(wu⁻¹) + l(u) = l(w)`.
    pub fn is_suffix(&self, u: &WeylElement, w: &WeylElement) -> bool {
        self.length(&w.mul(&u.inverse())) + self.length(u) == self.length(w)
    }

    /// The diagram automorphism `i ↦ j` with `w₀ s_i w₀ = s_j`.
    pub fn delta_permutation(&self) -> Vec<usize> {
        (0..self.rank())
            .map(|i| {
                let c = self.w0.mul(&self.gens[i]).mul(&self.w0);
                self.gens.iter().position(|g| *g == c).expect("w0 conjugates simple to simple")
            })
            .collect()
    }

    /// Join in the weak order on the requested side: the least element
    /// having both `a` and `b` as prefixes (left) or suffixes (right).
    pub fn simple_lcm(&self, a: &WeylElement, b: &WeylElement, side: Side) -> WeylElement {
        // Climb from `a` one generator at a time; any upper bound of a and b
        // is reachable, and the join is the unique one of minimal length.
        let below = |u: &WeylElement, w: &WeylElement| match side {
            Side::Left => self.is_prefix(u, w),
            Side::Right => self.is_suffix(u, w),
        };
        if below(b, a) {
            return a.clone();
        }
        let mut frontier: BTreeSet<WeylElement> = BTreeSet::new();
        frontier.insert(a.clone());
        loop {
            let mut next = BTreeSet::new();
            for w in &frontier {
                for i in 0..self.rank() {
                    let up = match side {
                        Side::Left => {
                            if w.is_right_descent(i) {
                                continue;
                            }
                            w.mul(&self.gens[i])
                        }
                        Side::Right => {
                            if w.inverse().is_right_descent(i) {
                                continue;
                            }
                            self.gens[i].mul(w)
                        }
                    };
                    next.insert(up);
                }
            }
            if let Some(j) = next.iter().find(|w| below(b, w)) {
                return j.clone();
            }
            frontier = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> DynkinSpec {
        DynkinSpec::new(Family::A, n).unwrap()
    }

    #[test]
    fn parse_types() {
        assert_eq!("a3".parse::<DynkinSpec>().unwrap().rank(), 3);
        assert_eq!("E6".parse::<DynkinSpec>().unwrap().edges().len(), 5);
        assert!("B2".parse::<DynkinSpec>().is_err());
        assert!("D3".parse::<DynkinSpec>().is_err());
        assert!("E9".parse::<DynkinSpec>().is_err());
    }

    #[test]
    fn simple_reflection_cases() {
        let s = a(2).simple_reflection(0).unwrap();
        assert_eq!(s.apply(&[1, 0]), vec![-1, 0]);
        assert_eq!(s.apply(&[0, 1]), vec![1, 1]);
        let s = a(3).simple_reflection(0).unwrap();
        assert_eq!(s.apply(&[0, 0, 1]), vec![0, 0, 1]);
    }

    #[test]
    fn root_counts() {
        assert_eq!(a(1).root_system().positive().len(), 1);
        assert_eq!(a(3).root_system().positive().len(), 6);
        assert_eq!("D4".parse::<DynkinSpec>().unwrap().root_system().positive().len(), 12);
        assert_eq!("E6".parse::<DynkinSpec>().unwrap().root_system().positive().len(), 36);
    }

    #[test]
    fn lengths() {
        let w = Weyl::new(&a(3));
        assert_eq!(w.length(&w.identity()), 0);
        assert_eq!(w.length(w.gen(0)), 1);
        assert_eq!(w.length(w.longest()), 6);
        assert_eq!(w.reduced_word(w.longest()).len(), 6);
        assert_eq!(w.reduced_word(&w.of_word(&[1, 0, 2, 1])), vec![1, 0, 2, 1]);
        assert_eq!(w.longest().right_descents().len(), 3);
        assert_eq!(w.longest().left_descents().len(), 3);
        assert_eq!(w.gen(1).left_descents(), BTreeSet::from([1]));
        let c = w.of_word(&[0, 2, 1]);
        assert_eq!(c.reflection_length(), 3);
        for t in w.roots().reflections() {
            assert_eq!(t.reflection_length(), 1);
            assert!(t.mul(t).is_identity());
        }
    }

    #[test]
    fn lcm_examples() {
        let w = Weyl::new(&a(2));
        let l = w.simple_lcm(w.gen(0), w.gen(1), Side::Left);
        assert_eq!(l, *w.longest());
        assert_eq!(w.simple_lcm(w.gen(0), w.gen(0), Side::Right), *w.gen(0));
        assert_eq!(w.simple_lcm(w.longest(), w.gen(1), Side::Left), *w.longest());
    }
}
