//! The dual Garside structure attached to an orientation of the diagram:
//! the interval `[1,c]_T`, its noncrossing-partition lattice, dual lifts of
//! reflections and dual normal forms.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::coxeter::{DynkinSpec, Weyl, WeylElement};
use crate::error::{Error, Result};
use crate::garside::{self, GarsideStructure, MixedNormalForm};
use crate::word::{BraidWord, Letter};

/// An orientation of every edge of a Dynkin diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    /// Directed edges `(from, to)`, 0-based, sorted.
    arrows: Vec<(usize, usize)>,
}

impl Orientation {
    /// Every edge directed from the smaller index to the larger.
    pub fn default_for(spec: &DynkinSpec) -> Self {
        Orientation { arrows: spec.edges().to_vec() }
    }

    /// Builds an orientation from 0-based arrows, checking it covers each
    /// edge exactly once.
    pub fn new(spec: &DynkinSpec, mut arrows: Vec<(usize, usize)>) -> Result<Self> {
        arrows.sort_unstable();
        let mut seen = BTreeSet::new();
        for &(a, b) in &arrows {
            if a >= spec.rank() || b >= spec.rank() || !spec.adjacent(a, b) {
                return Err(Error::InvalidOrientation(format!("{}>{} is not an edge", a + 1, b + 1)));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidOrientation(format!("edge {}-{} oriented twice", a + 1, b + 1)));
            }
        }
        if seen.len() != spec.edges().len() {
            return Err(Error::InvalidOrientation("some edge is not oriented".into()));
        }
        Ok(Orientation { arrows })
    }

    /// Parses `"2>1,2>3"` (1-based, `i>j` means an arrow `i → j`). An empty
    /// string yields the default orientation.
    pub fn parse(spec: &DynkinSpec, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::default_for(spec));
        }
        let mut arrows = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (a, b) = part
                .split_once('>')
                .ok_or_else(|| Error::InvalidOrientation(format!("expected i>j, got `{part}`")))?;
            let a: usize = a.trim().parse().map_err(|_| Error::InvalidOrientation(part.into()))?;
            let b: usize = b.trim().parse().map_err(|_| Error::InvalidOrientation(part.into()))?;
            if a == 0 || b == 0 {
                return Err(Error::InvalidOrientation(part.into()));
            }
            arrows.push((a - 1, b - 1));
        }
        Self::new(spec, arrows)
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Whether there is an arrow `a → b`.
    pub fn has_arrow(&self, a: usize, b: usize) -> bool {
        self.arrows.binary_search(&(a, b)).is_ok()
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arrows.iter().map(|(a, b)| format!("{}>{}", a + 1, b + 1)).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A Coxeter element fixed by an orientation, with its braid lift `γ`.
#[derive(Clone, Debug)]
pub struct CoxeterChoice {
    spec: DynkinSpec,
    orientation: Orientation,
    c_word: Vec<usize>,
    c: WeylElement,
}

impl CoxeterChoice {
    /// For each arrow `i → j`, `s_j` is placed to the left of `s_i`; ties are
    /// broken by taking the smallest available vertex first.
    pub fn from_orientation(spec: &DynkinSpec, orientation: &Orientation) -> Self {
        let n = spec.rank();
        let mut placed = vec![false; n];
        let mut c_word = Vec::with_capacity(n);
        while c_word.len() < n {
            let next = (0..n)
                .find(|&v| {
                    // v can be placed once every j with v → j is placed.
                    !placed[v] && orientation.arrows().iter().all(|&(a, b)| a != v || placed[b])
                })
                .expect("orientation of a tree is acyclic");
            placed[next] = true;
            c_word.push(next);
        }
        let c = spec.weyl_of_word(&c_word);
        CoxeterChoice { spec: spec.clone(), orientation: orientation.clone(), c_word, c }
    }

    pub fn spec(&self) -> &DynkinSpec {
        &self.spec
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    /// The Coxeter word (0-based vertices).
    pub fn c_word(&self) -> &[usize] {
        &self.c_word
    }

    pub fn c(&self) -> &WeylElement {
        &self.c
    }

    /// Positive braid word of `γ`.
    pub fn gamma_word(&self) -> BraidWord {
        BraidWord::positive(&self.c_word)
    }
}

/// The interval `[1,c]_T` with its partial order.
#[derive(Clone, Debug)]
pub struct NCLattice {
    elements: Vec<WeylElement>,
    index: HashMap<WeylElement, usize>,
    lengths: Vec<usize>,
    /// `leq[a][b]` iff `elements[a] ≤_T elements[b]`.
    leq: Vec<Vec<bool>>,
    reflections: Vec<usize>,
}

impl NCLattice {
    /// Enumerates the interval by breadth-first search from the identity,
    /// multiplying by reflections with strictly increasing reflection length.
    pub fn enumerate(weyl: &Weyl, c: &WeylElement) -> Self {
        let n = weyl.rank();
        let refl = weyl.roots().reflections();
        let below_c = |u: &WeylElement, lu: usize| lu + u.inverse().mul(c).reflection_length() == n;
        let mut elements = vec![weyl.identity()];
        let mut lengths = vec![0];
        let mut index = HashMap::new();
        index.insert(weyl.identity(), 0);
        let mut layer = vec![0usize];
        for k in 1..=n {
            let mut next = Vec::new();
            for &u in &layer {
                for t in refl {
                    let v = elements[u].mul(t);
                    if index.contains_key(&v) {
                        continue;
                    }
                    if v.reflection_length() == k && below_c(&v, k) {
                        index.insert(v.clone(), elements.len());
                        next.push(elements.len());
                        elements.push(v);
                        lengths.push(k);
                    }
                }
            }
            layer = next;
        }
        // Sort by (length, matrix) for a canonical order.
        let mut order: Vec<usize> = (0..elements.len()).collect();
        order.sort_by(|&a, &b| lengths[a].cmp(&lengths[b]).then_with(|| elements[a].cmp(&elements[b])));
        let elements: Vec<WeylElement> = order.iter().map(|&i| elements[i].clone()).collect();
        let lengths: Vec<usize> = order.iter().map(|&i| lengths[i]).collect();
        let index: HashMap<WeylElement, usize> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let m = elements.len();
        let inverses: Vec<WeylElement> = elements.iter().map(|e| e.inverse()).collect();
        let mut leq = vec![vec![false; m]; m];
        for a in 0..m {
            for b in 0..m {
                if lengths[a] <= lengths[b] {
                    let d = inverses[a].mul(&elements[b]);
                    leq[a][b] = lengths[a] + d.reflection_length() == lengths[b];
                }
            }
        }
        let reflections = (0..m).filter(|&i| lengths[i] == 1).collect();
        NCLattice { elements, index, lengths, leq, reflections }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &WeylElement {
        &self.elements[i]
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.index.contains_key(w)
    }

    /// Reflection length of element `i`.
    pub fn length(&self, i: usize) -> usize {
        self.lengths[i]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// Indices of the reflections (rank-1 elements).
    pub fn reflection_indices(&self) -> &[usize] {
        &self.reflections
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    /// Greatest lower bound, by exhaustive scan.
    pub fn meet(&self, a: usize, b: usize) -> usize {
        let lower: Vec<usize> = (0..self.len()).filter(|&x| self.leq[x][a] && self.leq[x][b]).collect();
        *lower
            .iter()
            .find(|&&x| lower.iter().all(|&y| self.leq[y][x]))
            .expect("interval is a lattice")
    }

    /// Least upper bound, by exhaustive scan.
    pub fn join(&self, a: usize, b: usize) -> usize {
        let upper: Vec<usize> = (0..self.len()).filter(|&x| self.leq[a][x] && self.leq[b][x]).collect();
        *upper
            .iter()
            .find(|&&x| upper.iter().all(|&y| self.leq[x][y]))
            .expect("interval is a lattice")
    }

    /// Meet of a nonempty set.
    pub fn meet_all(&self, xs: &[usize]) -> Option<usize> {
        let (&first, rest) = xs.split_first()?;
        Some(rest.iter().fold(first, |acc, &x| self.meet(acc, x)))
    }

    /// Join of a set (bottom for the empty set).
    pub fn join_all(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.bottom(), |acc, &x| self.join(acc, x))
    }

    /// Reflections below `b`; the same set on either side.
    pub fn descents(&self, b: usize) -> Vec<usize> {
        self.reflections.iter().copied().filter(|&t| self.leq[t][b]).collect()
    }
}

/// Dual Garside structure for a Coxeter choice.
#[derive(Clone, Debug)]
pub struct DualGarside {
    weyl: Arc<Weyl>,
    choice: CoxeterChoice,
    lattice: Arc<NCLattice>,
    /// Dual lift data `(k, j)` per reflection, indexed like the lattice's
    /// reflection list.
    lifts: HashMap<WeylElement, (usize, usize)>,
    /// Minimal reflection words per lattice element (lattice indices of
    /// reflections).
    t_words: Vec<Vec<usize>>,
}

impl DualGarside {
    pub fn new(spec: &DynkinSpec, orientation: &Orientation) -> Self {
        Self::with_weyl(Arc::new(Weyl::new(spec)), orientation)
    }

    pub fn with_weyl(weyl: Arc<Weyl>, orientation: &Orientation) -> Self {
        let choice = CoxeterChoice::from_orientation(weyl.spec(), orientation);
        let lattice = Arc::new(NCLattice::enumerate(&weyl, choice.c()));
        let lifts = dual_lift_table(&weyl, &choice);
        let t_words = (0..lattice.len()).map(|i| minimal_t_word(&lattice, i)).collect();
        DualGarside { weyl, choice, lattice, lifts, t_words }
    }

    pub fn weyl(&self) -> &Weyl {
        &self.weyl
    }

    pub fn weyl_arc(&self) -> Arc<Weyl> {
        self.weyl.clone()
    }

    pub fn choice(&self) -> &CoxeterChoice {
        &self.choice
    }

    pub fn lattice(&self) -> &NCLattice {
        &self.lattice
    }

    /// The `(k, j)` data of the dual lift of a reflection.
    pub fn lift_data(&self, t: &WeylElement) -> Option<(usize, usize)> {
        self.lifts.get(t).copied()
    }

    /// `γ^k σ_{i₁}⋯σ_{i_j} σ_{i_{j+1}} σ_{i_j}⁻¹⋯σ_{i₁}⁻¹ γ^{-k}`.
    pub fn lift_word(&self, k: usize, j: usize) -> BraidWord {
        let cw = self.choice.c_word();
        let gamma = self.choice.gamma_word();
        let mut mid = BraidWord::positive(&cw[..=j]);
        mid = mid.concat(&BraidWord::positive(&cw[..j]).inverse());
        gamma.pow(k as i64).concat(&mid).concat(&gamma.pow(-(k as i64)))
    }

    /// Braid word of the dual lift of a reflection.
    pub fn dual_lift_reflection(&self, t: &WeylElement) -> Result<BraidWord> {
        let (k, j) = self
            .lift_data(t)
            .ok_or_else(|| Error::Precondition("not a reflection".into()))?;
        Ok(self.lift_word(k, j))
    }

    /// Minimal reflection word of lattice element `i` (lattice indices).
    pub fn t_word(&self, i: usize) -> &[usize] {
        &self.t_words[i]
    }

    /// The dual braid lift of lattice element `i`, as a product of dual
    /// lifts of a minimal reflection word.
    pub fn bessis_word(&self, i: usize) -> BraidWord {
        let mut w = BraidWord::empty();
        for &t in &self.t_words[i] {
            w = w.concat(&self.dual_lift_reflection(self.lattice.element(t)).expect("reflection"));
        }
        w
    }

    /// Dual mixed normal form.
    pub fn dual_mixed_nf(&self, word: &BraidWord) -> MixedNormalForm {
        garside::mixed_normal_form(self, word)
    }

    /// `(#positive, #negative)` dual factors.
    pub fn dual_length(&self, word: &BraidWord) -> (usize, usize) {
        let nf = self.dual_mixed_nf(word);
        (nf.positive.len(), nf.negative.len())
    }

    /// Dual descents of a lattice element (lattice indices of reflections).
    pub fn dual_descents(&self, b: &WeylElement) -> Result<Vec<usize>> {
        let i = self
            .lattice
            .index_of(b)
            .ok_or_else(|| Error::Precondition("element not in [1,c]".into()))?;
        Ok(self.lattice.descents(i))
    }
}

fn dual_lift_table(weyl: &Weyl, choice: &CoxeterChoice) -> HashMap<WeylElement, (usize, usize)> {
    let n = weyl.rank();
    let h = weyl.spec().coxeter_number();
    let c = choice.c();
    let cw = choice.c_word();
    let mut table = HashMap::new();
    let mut ck = weyl.identity();
    for k in 0..h {
        let cki = ck.inverse();
        for j in 0..n {
            let mut u = weyl.identity();
            for &i in &cw[..j] {
                u = u.mul(weyl.gen(i));
            }
            let t = ck.mul(&u).mul(weyl.gen(cw[j])).mul(&u.inverse()).mul(&cki);
            table.entry(t).or_insert((k, j));
        }
        ck = ck.mul(c);
    }
    assert_eq!(table.len(), weyl.roots().reflections().len(), "every reflection has a dual lift");
    table
}

fn minimal_t_word(lat: &NCLattice, i: usize) -> Vec<usize> {
    let mut word = Vec::new();
    let mut cur = i;
    while lat.length(cur) > 0 {
        let (t, rest) = lat
            .reflection_indices()
            .iter()
            .find_map(|&t| {
                if !lat.leq(t, cur) {
                    return None;
                }
                let r = lat.element(t).mul(lat.element(cur));
                lat.index_of(&r).map(|ri| (t, ri))
            })
            .expect("nontrivial element has a reflection prefix");
        word.push(t);
        cur = rest;
    }
    word
}

impl GarsideStructure for DualGarside {
    fn rank(&self) -> usize {
        self.weyl.rank()
    }

    fn delta(&self) -> &WeylElement {
        self.choice.c()
    }

    fn delta_word(&self) -> BraidWord {
        self.choice.gamma_word()
    }

    fn letter_atom(&self, i: usize) -> WeylElement {
        self.weyl.gen(i).clone()
    }

    fn atoms_below(&self, w: &WeylElement) -> Vec<WeylElement> {
        let i = self.lattice.index_of(w).expect("dual simple");
        self.lattice.descents(i).into_iter().map(|t| self.lattice.element(t).clone()).collect()
    }

    fn extends(&self, a: &WeylElement, t: &WeylElement) -> bool {
        let ia = self.lattice.index_of(a).expect("dual simple");
        match self.lattice.index_of(&a.mul(t)) {
            Some(j) => self.lattice.length(j) == self.lattice.length(ia) + 1,
            None => false,
        }
    }

    fn simple_word(&self, w: &WeylElement) -> BraidWord {
        self.bessis_word(self.lattice.index_of(w).expect("dual simple"))
    }
}

/// The letter `σ_i` as a one-letter word.
pub fn letter_word(i: usize) -> BraidWord {
    BraidWord::new(vec![Letter::pos(i)])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dual(t: &str, o: &str) -> DualGarside {
        let spec: DynkinSpec = t.parse().unwrap();
        let o = Orientation::parse(&spec, o).unwrap();
        DualGarside::new(&spec, &o)
    }

    #[test]
    fn coxeter_elements() {
        let spec: DynkinSpec = "A3".parse().unwrap();
        let ch = CoxeterChoice::from_orientation(&spec, &Orientation::parse(&spec, "2>1,2>3").unwrap());
        assert_eq!(ch.c_word(), &[0, 2, 1]);
        let a2: DynkinSpec = "A2".parse().unwrap();
        let ch = CoxeterChoice::from_orientation(&a2, &Orientation::parse(&a2, "1>2").unwrap());
        assert_eq!(ch.c_word(), &[1, 0]);
        let a1: DynkinSpec = "A1".parse().unwrap();
        let ch = CoxeterChoice::from_orientation(&a1, &Orientation::default_for(&a1));
        assert_eq!(ch.c_word(), &[0]);
        assert!(Orientation::parse(&spec, "2>1").is_err());
        assert!(Orientation::parse(&spec, "2>1,1>2,2>3").is_err());
        assert!(Orientation::parse(&spec, "1>3,2>3").is_err());
    }

    #[test]
    fn interval_sizes() {
        assert_eq!(dual("A1", "").lattice().len(), 2);
        assert_eq!(dual("A2", "").lattice().len(), 5);
        assert_eq!(dual("A3", "2>1,2>3").lattice().len(), 14);
        assert_eq!(dual("A4", "").lattice().len(), 42);
        assert_eq!(dual("D4", "").lattice().len(), 50);
    }

    #[test]
    fn lifts_and_joins() {
        let d = dual("A3", "2>1,2>3");
        let w = d.weyl();
        assert_eq!(d.dual_lift_reflection(w.gen(0)).unwrap().to_string(), "1");
        let l = d.lattice();
        let s1 = l.index_of(w.gen(0)).unwrap();
        let s3 = l.index_of(w.gen(2)).unwrap();
        assert_eq!(l.element(l.join(s1, s3)), &w.of_word(&[0, 2]));
        assert_eq!(l.join_all(l.reflection_indices()), l.top());
        assert_eq!(l.descents(l.top()).len(), 6);
        assert_eq!(l.descents(l.join(s1, s3)), {
            let mut v = vec![s1, s3];
            v.sort();
            v
        });
    }

    #[test]
    fn dual_nf_examples() {
        let d = dual("A3", "2>1,2>3");
        assert!(d.dual_mixed_nf(&BraidWord::empty()).is_empty());
        let nf = d.dual_mixed_nf(&d.choice().gamma_word());
        assert_eq!(nf.positive, vec![d.choice().c().clone()]);
        assert_eq!(d.dual_length(&BraidWord::parse("2 1", 3).unwrap()), (2, 0));
        assert_eq!(d.dual_length(&BraidWord::parse("1 2", 3).unwrap()), (1, 0));
        assert_eq!(d.dual_length(&BraidWord::parse("1 3", 3).unwrap()), (1, 0));
    }
}
