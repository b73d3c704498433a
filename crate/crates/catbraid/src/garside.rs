//! Generic Garside machinery shared by the classical and dual structures.
//!
//! Simple elements are represented by their Weyl images. A structure
//! supplies its Garside element `δ`, its atoms (the images of the
//! generators of the monoid) and divisibility on simples; the left normal
//! form and the mixed normal form are computed here once for both.

use serde::{Deserialize, Serialize};

use crate::coxeter::WeylElement;
use crate::word::BraidWord;

/// The interface a finite-type Garside structure exposes on simple elements.
pub trait GarsideStructure {
    fn rank(&self) -> usize;

    /// Weyl image of the Garside element (`w₀` or `c`).
    fn delta(&self) -> &WeylElement;

    /// Weyl image of the positive braid word of `δ`.
    fn delta_word(&self) -> BraidWord;

    /// Simple element lifting the generator `σ_i`.
    fn letter_atom(&self, i: usize) -> WeylElement;

    /// Atoms dividing the simple `w` on the left.
    fn atoms_below(&self, w: &WeylElement) -> Vec<WeylElement>;

    /// Whether `a · t` is simple with lengths adding, for an atom `t`.
    fn extends(&self, a: &WeylElement, t: &WeylElement) -> bool;

    /// A positive braid word for the simple `w`.
    fn simple_word(&self, w: &WeylElement) -> BraidWord;

    /// `δ^k x δ^{-k}` on Weyl images.
    fn conj_delta(&self, x: &WeylElement, k: i64) -> WeylElement {
        let d = if k >= 0 { self.delta().clone() } else { self.delta().inverse() };
        let di = d.inverse();
        let mut y = x.clone();
        for _ in 0..k.unsigned_abs() {
            y = d.mul(&y).mul(&di);
        }
        y
    }

    /// Left complement `∂x = x⁻¹δ`.
    fn complement(&self, x: &WeylElement) -> WeylElement {
        x.inverse().mul(self.delta())
    }
}

/// A braid as `δ^power · factors`, each factor a simple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaForm {
    pub power: i64,
    pub factors: Vec<WeylElement>,
}

/// The mixed (negative then positive) normal form `β = β⁻β⁺`.
///
/// `negative` lists simples `x₁, …, x_l` with `β⁻ = x₁⁻¹ x₂⁻¹ ⋯ x_l⁻¹`
/// (so `x₁⁻¹` is the last negative factor), and `positive` lists the left-greedy
/// factors of `β⁺` in reading order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MixedNormalForm {
    pub negative: Vec<WeylElement>,
    pub positive: Vec<WeylElement>,
}

impl MixedNormalForm {
    /// Total factor count, the word length in simples.
    pub fn len(&self) -> usize {
        self.negative.len() + self.positive.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// A braid word representing the same braid.
    pub fn to_word<G: GarsideStructure + ?Sized>(&self, g: &G) -> BraidWord {
        let mut w = BraidWord::empty();
        for x in &self.negative {
            w = w.concat(&g.simple_word(x).inverse());
        }
        for x in &self.positive {
            w = w.concat(&g.simple_word(x));
        }
        w
    }
}

/// Rewrites a braid word as `δ^{-m} · (simples)`.
pub fn to_delta_sequence<G: GarsideStructure + ?Sized>(g: &G, word: &BraidWord) -> DeltaForm {
    let mut factors: Vec<WeylElement> = Vec::with_capacity(word.len());
    let mut m = 0i64;
    for l in word.letters() {
        let a = g.letter_atom(l.vertex);
        if l.positive {
            factors.push(a);
        } else {
            // σ⁻¹ = δ⁻¹ (δσ⁻¹); move δ⁻¹ left past earlier factors:
            // x δ⁻¹ = δ⁻¹ (δ x δ⁻¹).
            for f in factors.iter_mut() {
                *f = g.conj_delta(f, 1);
            }
            m += 1;
            factors.push(g.delta().mul(&a.inverse()));
        }
    }
    DeltaForm { power: -m, factors }
}

/// Makes the pair `(a, b)` left-weighted by moving atoms of `b` into `a`.
/// Returns whether anything moved.
fn slide_pair<G: GarsideStructure + ?Sized>(g: &G, a: &mut WeylElement, b: &mut WeylElement) -> bool {
    let mut moved = false;
    loop {
        let t = g.atoms_below(b).into_iter().find(|t| g.extends(a, t));
        match t {
            Some(t) => {
                *a = a.mul(&t);
                *b = t.inverse().mul(b);
                moved = true;
            }
            None => return moved,
        }
    }
}

/// Left normal form of a positive braid given as a product of simples:
/// `δ^r a₁ ⋯ a_k` with each `a_i` a proper nontrivial simple.
pub fn left_normal_form<G: GarsideStructure + ?Sized>(g: &G, simples: &[WeylElement]) -> DeltaForm {
    let mut f: Vec<WeylElement> = simples.iter().filter(|x| !x.is_identity()).cloned().collect();
    // Insert each factor at the right end and bubble it leftward; the prefix
    // is already normal, so one backward pass restores normality.
    let mut out: Vec<WeylElement> = Vec::with_capacity(f.len());
    for x in f.drain(..) {
        out.push(x);
        let mut i = out.len() - 1;
        while i > 0 {
            let (left, right) = out.split_at_mut(i);
            let moved = slide_pair(g, &mut left[i - 1], &mut right[0]);
            if !moved {
                break;
            }
            i -= 1;
        }
        out.retain(|x| !x.is_identity());
    }
    let delta = g.delta();
    let power = out.iter().take_while(|x| *x == delta).count();
    let factors = out[power..].to_vec();
    DeltaForm { power: power as i64, factors }
}

/// Mixed normal form of an arbitrary braid word.
pub fn mixed_normal_form<G: GarsideStructure + ?Sized>(g: &G, word: &BraidWord) -> MixedNormalForm {
    let seq = to_delta_sequence(g, word);
    let lnf = left_normal_form(g, &seq.factors);
    let r = seq.power + lnf.power;
    mixed_from_delta_form(g, &DeltaForm { power: r, factors: lnf.factors })
}

/// Converts a left normal form `δ^r a₁ ⋯ a_k` to the mixed form.
pub fn mixed_from_delta_form<G: GarsideStructure + ?Sized>(g: &G, d: &DeltaForm) -> MixedNormalForm {
    let r = d.power;
    if r >= 0 {
        let mut positive = vec![g.delta().clone(); r as usize];
        positive.extend(d.factors.iter().cloned());
        return MixedNormalForm { negative: Vec::new(), positive };
    }
    let l = (-r) as usize;
    let id = WeylElement::identity(g.rank());
    let mut negative = Vec::with_capacity(l);
    for i in 0..l {
        let a = d.factors.get(i).unwrap_or(&id);
        // δ^{-(l-i)} a_i ... = (δ^{-(l-i-1)} ∂a_i⁻¹ δ^{(l-i-1)}) δ^{-(l-i-1)} ...
        let x = g.conj_delta(&g.complement(a), -((l - i - 1) as i64));
        negative.push(x);
    }
    let positive = d.factors.iter().skip(l).cloned().collect();
    MixedNormalForm { negative, positive }
}
