//! The classical Garside structure: simples are positive lifts of Weyl
//! elements and the Garside element is the half twist `Δ`.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::coxeter::{DynkinSpec, Side, Weyl, WeylElement};
use crate::error::{Error, Result};
use crate::garside::{self, GarsideStructure, MixedNormalForm};
use crate::word::BraidWord;

/// Classical Garside structure on the braid group of a diagram.
#[derive(Clone, Debug)]
pub struct StdGarside {
    weyl: Arc<Weyl>,
}

impl StdGarside {
    pub fn new(spec: &DynkinSpec) -> Self {
        StdGarside { weyl: Arc::new(Weyl::new(spec)) }
    }

    pub fn from_weyl(weyl: Arc<Weyl>) -> Self {
        StdGarside { weyl }
    }

    pub fn weyl(&self) -> &Weyl {
        &self.weyl
    }

    /// Left-greedy factorization of a positive word.
    pub fn greedy_nf_positive(&self, word: &BraidWord) -> Result<Vec<WeylElement>> {
        if !word.is_positive() {
            return Err(Error::Precondition("greedy normal form needs a positive word".into()));
        }
        let simples: Vec<WeylElement> = word.letters().iter().map(|l| self.letter_atom(l.vertex)).collect();
        let d = garside::left_normal_form(self, &simples);
        let mut out = vec![self.delta().clone(); d.power as usize];
        out.extend(d.factors);
        Ok(out)
    }

    /// Mixed normal form `β = β⁻β⁺`.
    pub fn mixed_nf(&self, word: &BraidWord) -> MixedNormalForm {
        garside::mixed_normal_form(self, word)
    }

    /// `(#positive factors, #negative factors)` of the mixed normal form.
    pub fn charney_length(&self, word: &BraidWord) -> (usize, usize) {
        let nf = self.mixed_nf(word);
        (nf.positive.len(), nf.negative.len())
    }

    /// Join of two simples in the left or right weak order.
    pub fn simple_lcm(&self, a: &WeylElement, b: &WeylElement, side: Side) -> WeylElement {
        self.weyl.simple_lcm(a, b, side)
    }

    /// Whether two words represent the same braid.
    pub fn braid_eq(&self, a: &BraidWord, b: &BraidWord) -> bool {
        self.mixed_nf(a) == self.mixed_nf(b)
    }

    /// The positive word of `Δ`.
    pub fn delta_braid_word(&self) -> BraidWord {
        self.delta_word()
    }

    /// Right descents of a positive braid: `i` with `σ_i` a right divisor.
    pub fn braid_right_descents(&self, word: &BraidWord) -> BTreeSet<usize> {
        (0..self.rank())
            .filter(|&i| {
                let w = word.concat(&BraidWord::new(vec![crate::word::Letter::neg(i)]));
                self.mixed_nf(&w).negative.is_empty()
            })
            .collect()
    }

    /// A normal-form word for the braid, or the input if that is shorter.
    pub fn shorten(&self, word: &BraidWord) -> BraidWord {
        let nf = self.mixed_nf(word).to_word(self);
        let w = word.free_reduce();
        if nf.len() < w.len() {
            nf
        } else {
            w
        }
    }
}

impl GarsideStructure for StdGarside {
    fn rank(&self) -> usize {
        self.weyl.rank()
    }

    fn delta(&self) -> &WeylElement {
        self.weyl.longest()
    }

    fn delta_word(&self) -> BraidWord {
        self.simple_word(self.weyl.longest())
    }

    fn letter_atom(&self, i: usize) -> WeylElement {
        self.weyl.gen(i).clone()
    }

    fn atoms_below(&self, w: &WeylElement) -> Vec<WeylElement> {
        w.left_descents().into_iter().map(|i| self.weyl.gen(i).clone()).collect()
    }

    fn extends(&self, a: &WeylElement, t: &WeylElement) -> bool {
        // t = s_i; a s_i is longer iff a(α_i) > 0.
        let i = (0..self.rank()).find(|&i| self.weyl.gen(i) == t).expect("atom is simple");
        !a.is_right_descent(i)
    }

    fn simple_word(&self, w: &WeylElement) -> BraidWord {
        BraidWord::positive(&self.weyl.reduced_word(w))
    }
}
