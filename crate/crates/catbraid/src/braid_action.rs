//! The braid group action on complexes of projectives by tensoring with
//! complexes of bimodules, and the reflection complexes `C_t`.
//!
//! `σ_i` acts by `A → P_i⊗Q_i{−1}⟨−1⟩` (the unit in position 0) and `σ_i⁻¹`
//! by `P_i⊗Q_i{1}⟨1⟩ → A` (the multiplication map in position 0). A word acts
//! with its rightmost letter first.

use std::collections::BTreeSet;

use num_traits::One;

use crate::chain::{tensor, Complex, Gen, Mor, Obj, Term};
use crate::complexes::{hom_dimension, ProjComplex, Support};
use crate::coxeter::{DynkinSpec, WeylElement};
use crate::garside_dual::{DualGarside, Orientation};
use crate::word::{BraidWord, Letter};
use crate::zigzag::{BasisMorphism, ZigzagAlgebra, Q};

/// Kind of a bimodule summand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BimodSummandKind {
    /// The diagonal bimodule `A`.
    Identity,
    /// `P_i ⊗ Q_j` (0-based).
    Factor(usize, usize),
}

/// A shifted bimodule summand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BimodSummand {
    pub id: usize,
    pub kind: BimodSummandKind,
    pub hpos: i32,
    pub pshift: i32,
    pub oshift: i32,
}

impl BimodSummand {
    /// `−hpos − pshift`.
    pub fn t_level(&self) -> i32 {
        -self.hpos - self.pshift
    }

    /// `−oshift`.
    pub fn baric_degree(&self) -> i32 {
        -self.oshift
    }
}

/// A bounded complex of bimodules.
#[derive(Clone, Debug)]
pub struct BimodComplex {
    pub(crate) inner: Complex,
}

impl BimodComplex {
    /// The identity bimodule `A` in position 0.
    pub fn identity() -> Self {
        let mut c = Complex::new();
        c.add_obj(Obj { gen: Gen::Unit, hpos: 0, p: 0, o: 0 });
        BimodComplex { inner: c }
    }

    /// Summands sorted by id.
    pub fn summands(&self) -> Vec<BimodSummand> {
        self.inner
            .objs
            .iter()
            .map(|(&id, o)| BimodSummand {
                id,
                kind: match o.gen {
                    Gen::Unit => BimodSummandKind::Identity,
                    Gen::Proj(a, Some(b)) => BimodSummandKind::Factor(a, b),
                    Gen::Proj(_, None) => unreachable!("bimodule complexes hold bimodules"),
                },
                hpos: o.hpos,
                pshift: o.p,
                oshift: o.o,
            })
            .collect()
    }

    /// Number of summands.
    pub fn len(&self) -> usize {
        self.inner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of nonzero differential components.
    pub fn differential_len(&self) -> usize {
        self.inner.entries().count()
    }

    /// Min and max baric degree (the complex is kept minimal).
    pub fn baric_support(&self) -> Support {
        self.summands().iter().map(|s| s.baric_degree()).fold(None, |acc, l| match acc {
            None => Some((l, l)),
            Some((a, b)) => Some((a.min(l), b.max(l))),
        })
    }

    /// Summands of baric degree `n`.
    pub fn baric_slice(&self, n: i32) -> BimodComplex {
        BimodComplex { inner: self.inner.restrict(|o| -o.o == n) }
    }

    /// Checks degrees and `d∘d = 0`.
    pub fn is_well_formed(&self, alg: &ZigzagAlgebra) -> bool {
        self.inner.check_entries(alg).is_ok() && self.inner.dd_is_zero(alg)
    }
}

/// The braid action for a fixed diagram, with cached generator complexes.
#[derive(Clone, Debug)]
pub struct BraidAction {
    alg: ZigzagAlgebra,
    positive: Vec<Complex>,
    negative: Vec<Complex>,
}

impl BraidAction {
    pub fn new(spec: &DynkinSpec, orientation: &Orientation) -> Self {
        let alg = ZigzagAlgebra::new(spec, orientation);
        let n = spec.rank();
        let positive = (0..n).map(|i| sigma(&alg, i)).collect();
        let negative = (0..n).map(sigma_inverse).collect();
        BraidAction { alg, positive, negative }
    }

    pub fn algebra(&self) -> &ZigzagAlgebra {
        &self.alg
    }

    pub fn rank(&self) -> usize {
        self.alg.rank()
    }

    fn generator(&self, l: Letter) -> &Complex {
        if l.positive {
            &self.positive[l.vertex]
        } else {
            &self.negative[l.vertex]
        }
    }

    /// The complex of bimodules of `σ_i^{±1}`.
    pub fn generator_bimodule(&self, i: usize, positive: bool) -> BimodComplex {
        let l = if positive { Letter::pos(i) } else { Letter::neg(i) };
        BimodComplex { inner: self.generator(l).clone() }
    }

    /// `σ_i^{±1} · c`, minimized.
    pub fn apply_generator(&self, c: &ProjComplex, i: usize, positive: bool) -> ProjComplex {
        let l = if positive { Letter::pos(i) } else { Letter::neg(i) };
        self.apply_letter(c, l)
    }

    fn apply_letter(&self, c: &ProjComplex, l: Letter) -> ProjComplex {
        let mut t = tensor(&self.alg, self.generator(l), &c.inner);
        t.minimize(&self.alg);
        ProjComplex { inner: t.canonical_ids() }
    }

    /// `β · c`, rightmost letter first, minimizing after each letter.
    pub fn apply_word(&self, c: &ProjComplex, word: &BraidWord) -> ProjComplex {
        let mut x = c.minimize(&self.alg);
        for &l in word.letters().iter().rev() {
            x = self.apply_letter(&x, l);
        }
        x
    }

    /// `β · (⊕_i P_i)`.
    pub fn apply_to_projectives(&self, word: &BraidWord) -> ProjComplex {
        self.apply_word(&ProjComplex::all_projectives(self.rank()), word)
    }

    /// The minimal complex of bimodules of a word.
    pub fn bimodule_of_word(&self, word: &BraidWord) -> BimodComplex {
        let mut b = BimodComplex::identity().inner;
        for &l in word.letters().iter().rev() {
            b = tensor(&self.alg, self.generator(l), &b);
            b.minimize(&self.alg);
        }
        BimodComplex { inner: b.canonical_ids() }
    }

    /// Acts on a module complex through a bimodule complex.
    pub fn act_by_bimodule(&self, b: &BimodComplex, c: &ProjComplex) -> ProjComplex {
        let mut t = tensor(&self.alg, &b.inner, &c.inner);
        t.minimize(&self.alg);
        ProjComplex { inner: t.canonical_ids() }
    }

    /// `C_t = γ^k σ_{i₁}⋯σ_{i_j} P_{i_{j+1}}`, moved into t-level 0 and baric
    /// degree 0 with lowest homological position 0.
    pub fn reflection_complex(&self, dual: &DualGarside, t: &WeylElement) -> Option<RootComplex> {
        let (k, j) = dual.lift_data(t)?;
        let cw = dual.choice().c_word();
        let word = dual.choice().gamma_word().pow(k as i64).concat(&BraidWord::positive(&cw[..j]));
        let x = self.apply_word(&ProjComplex::projective(cw[j]), &word);
        let level = x.raw_t_support().expect("nonzero").0;
        let baric = x.raw_baric_support().expect("nonzero").0;
        let x = x.shifted(0, level, baric);
        let hmin = x.summands().iter().map(|s| s.hpos).min().expect("nonzero");
        let complex = x.shifted(-hmin, hmin, 0).minimize(&self.alg);
        let root = dual.weyl().roots().root_of_reflection(t)?.clone();
        Some(RootComplex { reflection: t.clone(), root, lift: (k, j), complex })
    }

    /// All reflection complexes, in the order of the positive roots.
    pub fn root_complexes(&self, dual: &DualGarside) -> Vec<RootComplex> {
        dual.weyl()
            .roots()
            .reflections()
            .iter()
            .map(|t| self.reflection_complex(dual, t).expect("reflection"))
            .collect()
    }

    /// `dim Hom(c, 𝔠_t)` with `𝔠_t = ⊕_l C_t[l]⟨l⟩`, summed over all
    /// path-length shifts and in orientation degree 0.
    pub fn hom_to_frak(&self, c: &ProjComplex, root: &RootComplex) -> usize {
        hom_all_shifts(&self.alg, c, &root.complex, |_, _, o| o == 0)
    }
}

/// `Σ dim Hom(c, d[h]⟨p⟩{o})` over the shifts `(h, p, o)` accepted by `keep`.
pub(crate) fn hom_all_shifts(
    alg: &ZigzagAlgebra,
    c: &ProjComplex,
    d: &ProjComplex,
    keep: impl Fn(i32, i32, i32) -> bool,
) -> usize {
    candidate_shifts(alg, c, d)
        .into_iter()
        .filter(|&(h, p, o)| keep(h, p, o))
        .map(|(h, p, o)| hom_dimension(alg, &c.inner, &d.inner.shifted(h, p, o)))
        .sum()
}

/// Shifts of `d` for which some degree-0 component `c → d[h]⟨p⟩{o}` exists.
pub(crate) fn candidate_shifts(alg: &ZigzagAlgebra, c: &ProjComplex, d: &ProjComplex) -> BTreeSet<(i32, i32, i32)> {
    let mut out = BTreeSet::new();
    for x in c.summands() {
        for y in d.summands() {
            for b in alg.basis_between(x.vertex, y.vertex) {
                let (bp, bo) = alg.bidegree(b);
                out.insert((x.hpos - y.hpos, x.pshift - y.pshift - bp, x.oshift - y.oshift - bo));
            }
        }
    }
    out
}

/// The reflection complex of a reflection.
#[derive(Clone, Debug)]
pub struct RootComplex {
    pub reflection: WeylElement,
    /// The positive root of the reflection in the simple-root basis.
    pub root: Vec<i64>,
    /// Dual lift data `(k, j)`.
    pub lift: (usize, usize),
    pub complex: ProjComplex,
}

impl RootComplex {
    /// Summand count per vertex.
    pub fn dimension_vector(&self) -> Vec<i64> {
        self.complex.dimension_vector(self.root.len())
    }
}

fn sigma(alg: &ZigzagAlgebra, i: usize) -> Complex {
    let mut c = Complex::new();
    let a = c.add_obj(Obj { gen: Gen::Unit, hpos: 0, p: 0, o: 0 });
    let pq = c.add_obj(Obj { gen: Gen::Proj(i, Some(i)), hpos: 1, p: -1, o: -1 });
    let one = Q::one();
    let mut terms = vec![
        Term { c: one, l: BasisMorphism::Loop(i), r: Some(BasisMorphism::Identity(i)) },
        Term { c: one, l: BasisMorphism::Identity(i), r: Some(BasisMorphism::Loop(i)) },
    ];
    for j in alg.spec().neighbours(i) {
        terms.push(Term { c: one, l: BasisMorphism::Edge(j, i), r: Some(BasisMorphism::Edge(i, j)) });
    }
    c.add_entry(a, pq, &Mor::from_terms(terms));
    c
}

fn sigma_inverse(i: usize) -> Complex {
    let mut c = Complex::new();
    let pq = c.add_obj(Obj { gen: Gen::Proj(i, Some(i)), hpos: -1, p: 1, o: 0 });
    let a = c.add_obj(Obj { gen: Gen::Unit, hpos: 0, p: 0, o: 0 });
    c.add_entry(pq, a, &Mor::single(Q::one(), BasisMorphism::Identity(i), None));
    c
}
