//! Homological algorithms: monoid membership, descents, `ν±`, lengths and
//! normal forms read off from the action on test objects, and a verifier
//! for the Digne–Gobet property of dual simple braids.
//!
//! Standard-basis quantities are read from `β(⊕_i P_i)` through t-levels;
//! dual-basis quantities from `β(⊕_t C_t)` through baric degrees.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::braid_action::{hom_all_shifts, BraidAction, RootComplex};
use crate::complexes::ProjComplex;
use crate::coxeter::{DynkinSpec, WeylElement};
use crate::error::{Error, Result};
use crate::garside::{self, DeltaForm, GarsideStructure, MixedNormalForm};
use crate::garside_dual::{DualGarside, Orientation};
use crate::garside_std::StdGarside;
use crate::word::{BraidWord, Letter};

/// Which Garside structure a length or normal form refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Standard,
    Dual,
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" | "std" => Ok(Basis::Standard),
            "dual" => Ok(Basis::Dual),
            _ => Err(Error::Precondition(format!("unknown basis `{s}`"))),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Standard => "standard",
            Basis::Dual => "dual",
        })
    }
}

/// Side of an E-set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ESide {
    /// `E⁺_r(X) = {i : Hom(𝔓_i⟨−r⟩, X) ≠ 0}`.
    Plus,
    /// `E⁻_r(X) = {i : Hom(X, 𝔓_i⟨−r⟩) ≠ 0}`.
    Minus,
}

/// The two one-sided lengths and their combination.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LengthReport {
    pub plus: i64,
    pub minus: i64,
    pub total: i64,
    pub basis: Basis,
}

impl LengthReport {
    pub fn new(plus: i64, minus: i64, basis: Basis) -> Self {
        LengthReport { plus, minus, total: plus.max(0) + minus.max(0), basis }
    }

    /// The lengths predicted by a mixed normal form: with `a` negative and
    /// `b` positive factors, `plus = b` if `b > 0` and otherwise minus the
    /// number of negative factors equal to `δ`; symmetrically for `minus`.
    pub fn from_normal_form<G: GarsideStructure + ?Sized>(g: &G, nf: &MixedNormalForm, basis: Basis) -> Self {
        let delta = g.delta();
        let plus = if !nf.positive.is_empty() {
            nf.positive.len() as i64
        } else {
            -(nf.negative.iter().filter(|x| *x == delta).count() as i64)
        };
        let minus = if !nf.negative.is_empty() {
            nf.negative.len() as i64
        } else {
            -(nf.positive.iter().filter(|x| *x == delta).count() as i64)
        };
        LengthReport::new(plus, minus, basis)
    }
}

/// A dual simple found by `ν₊`, or the inverse of one found by `ν₋`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NuResult {
    pub element: WeylElement,
    pub inverse: bool,
}

/// One Digne–Gobet witness `β = x·y⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Positive roots of a minimal reflection word for `β`.
    pub beta_tword: Vec<Vec<i64>>,
    pub x_word: BraidWord,
    pub y_word: BraidWord,
}

/// Result of checking every dual simple braid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigneGobetReport {
    #[serde(rename = "type")]
    pub type_name: String,
    pub orientation: String,
    pub checked: usize,
    pub failures: Vec<String>,
    pub witnesses: Vec<Witness>,
}

/// Everything needed to run the homological algorithms for one diagram
/// and orientation.
#[derive(Clone, Debug)]
pub struct HomEngine {
    spec: DynkinSpec,
    orientation: Orientation,
    std: StdGarside,
    dual: DualGarside,
    action: BraidAction,
    roots: Vec<RootComplex>,
    sum_roots: ProjComplex,
    /// Short braid words for the dual simples, indexed like the lattice.
    simple_words: Vec<BraidWord>,
}

const MAX_STEPS: usize = 10_000;

impl HomEngine {
    pub fn new(spec: &DynkinSpec, orientation: &Orientation) -> Self {
        let dual = DualGarside::new(spec, orientation);
        let std = StdGarside::from_weyl(dual.weyl_arc());
        let action = BraidAction::new(spec, orientation);
        let roots = action.root_complexes(&dual);
        let sum_roots = roots.iter().fold(ProjComplex::zero(), |acc, r| acc.direct_sum(&r.complex));
        let simple_words = (0..dual.lattice().len()).map(|i| std.shorten(&dual.bessis_word(i))).collect();
        HomEngine { spec: spec.clone(), orientation: orientation.clone(), std, dual, action, roots, sum_roots, simple_words }
    }

    pub fn spec(&self) -> &DynkinSpec {
        &self.spec
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn std(&self) -> &StdGarside {
        &self.std
    }

    pub fn dual(&self) -> &DualGarside {
        &self.dual
    }

    pub fn action(&self) -> &BraidAction {
        &self.action
    }

    pub fn root_complexes(&self) -> &[RootComplex] {
        &self.roots
    }

    /// `⊕_{t ∈ T} C_t`.
    pub fn sum_of_root_complexes(&self) -> &ProjComplex {
        &self.sum_roots
    }

    /// A short braid word for the dual simple with lattice index `i`.
    pub fn simple_word(&self, i: usize) -> &BraidWord {
        &self.simple_words[i]
    }

    /// The reflection complex of `t`.
    pub fn root_complex(&self, t: &WeylElement) -> Option<&RootComplex> {
        self.roots.iter().find(|r| &r.reflection == t)
    }

    fn rank(&self) -> usize {
        self.spec.rank()
    }

    fn std_object(&self, word: &BraidWord) -> ProjComplex {
        self.action.apply_to_projectives(word)
    }

    fn dual_object(&self, word: &BraidWord) -> ProjComplex {
        self.action.apply_word(&self.sum_roots, word)
    }

    /// `β ∈ B⁺`: every t-level of `β(⊕P_i)` is nonnegative.
    pub fn member_std_positive(&self, word: &BraidWord) -> bool {
        self.std_object(word).raw_t_support().map_or(true, |(lo, _)| lo >= 0)
    }

    /// `β ∈ B⁻`: every t-level of `β(⊕P_i)` is nonpositive.
    pub fn member_std_negative(&self, word: &BraidWord) -> bool {
        self.std_object(word).raw_t_support().map_or(true, |(_, hi)| hi <= 0)
    }

    /// Right descents `{i : βP_i ∈ 𝒦^{≥1}}` of a positive braid.
    pub fn right_descent_std(&self, word: &BraidWord) -> Result<BTreeSet<usize>> {
        if !self.member_std_positive(word) {
            return Err(Error::Precondition("word is not a positive braid".into()));
        }
        Ok((0..self.rank())
            .filter(|&i| {
                let x = self.action.apply_word(&ProjComplex::projective(i), word);
                x.raw_t_support().is_some_and(|(lo, _)| lo >= 1)
            })
            .collect())
    }

    /// `E^±_r` of a complex.
    pub fn e_set(&self, x: &ProjComplex, r: i32, side: ESide) -> BTreeSet<usize> {
        let alg = self.action.algebra();
        (0..self.rank())
            .filter(|&i| {
                let p = ProjComplex::projective(i);
                match side {
                    // P_i shifted by (−h, −p) sits at level h + p.
                    ESide::Plus => hom_all_shifts(alg, &p, x, |h, q, _| h + q == r) > 0,
                    ESide::Minus => hom_all_shifts(alg, x, &p, |h, q, _| -h - q == r) > 0,
                }
            })
            .collect()
    }

    /// `E^±_r(β(⊕P_i))`.
    pub fn e_set_of_word(&self, word: &BraidWord, r: i32, side: ESide) -> BTreeSet<usize> {
        self.e_set(&self.std_object(word), r, side)
    }

    /// `β ∈ Be⁺`: `β(⊕P_i)` has baric degrees in `[0, 1]`.
    pub fn is_bessis(&self, word: &BraidWord) -> bool {
        let ok = self.std_object(word).raw_baric_support().map_or(true, |(lo, hi)| lo >= 0 && hi <= 1);
        if ok {
            debug_assert!(self.dual.lattice().contains(&self.dual.weyl().of_word(&word_vertices(word)).clone()));
        }
        ok
    }

    /// `β` lies in the dual positive monoid: `β(⊕P_i)` has nonnegative
    /// baric degrees.
    pub fn member_dual_positive(&self, word: &BraidWord) -> bool {
        self.std_object(word).raw_baric_support().map_or(true, |(lo, _)| lo >= 0)
    }

    fn check_baric_heart(&self, x: &ProjComplex) -> Result<ProjComplex> {
        let m = x.minimize(self.action.algebra());
        match m.raw_baric_support() {
            None | Some((0, 0)) => Ok(m),
            _ => Err(Error::Precondition("complex is not in the baric heart".into())),
        }
    }

    /// Lattice indices `b` with `lift(b)·x` (or `lift(b)⁻¹·x`) strictly
    /// above (below) baric degree 0.
    fn nu_candidates(&self, x: &ProjComplex, plus: bool) -> Vec<usize> {
        (0..self.dual.lattice().len())
            .filter(|&b| {
                let w = if plus { self.simple_words[b].clone() } else { self.simple_words[b].inverse() };
                let y = self.action.apply_word(x, &w);
                match y.raw_baric_support() {
                    None => true,
                    Some((lo, hi)) => {
                        if plus {
                            lo >= 1
                        } else {
                            hi <= -1
                        }
                    }
                }
            })
            .collect()
    }

    fn nu_index(&self, x: &ProjComplex, plus: bool) -> usize {
        let lat = self.dual.lattice();
        if x.is_zero() {
            return lat.bottom();
        }
        let s = self.nu_candidates(x, plus);
        let m = lat.meet_all(&s).expect("the Garside element always qualifies");
        assert!(s.contains(&m), "the meet of the candidates is a candidate");
        m
    }

    /// `ν₊(x)`: the least dual simple moving `x` into baric degrees `≥ 1`.
    pub fn nu_plus(&self, x: &ProjComplex) -> Result<NuResult> {
        let m = self.check_baric_heart(x)?;
        let i = self.nu_index(&m, true);
        Ok(NuResult { element: self.dual.lattice().element(i).clone(), inverse: false })
    }

    /// `ν₋(x)`: the inverse of the least dual simple whose inverse moves `x`
    /// into baric degrees `≤ −1`.
    pub fn nu_minus(&self, x: &ProjComplex) -> Result<NuResult> {
        let m = self.check_baric_heart(x)?;
        let i = self.nu_index(&m, false);
        Ok(NuResult { element: self.dual.lattice().element(i).clone(), inverse: true })
    }

    /// Homological lengths of a braid.
    pub fn length(&self, word: &BraidWord, basis: Basis) -> LengthReport {
        let sup = match basis {
            Basis::Standard => self.std_object(word).raw_t_support(),
            Basis::Dual => self.dual_object(word).raw_baric_support(),
        };
        let (lo, hi) = sup.expect("the action is by autoequivalences");
        LengthReport::new(hi as i64, -(lo as i64), basis)
    }

    /// Lengths predicted by the combinatorial normal form.
    pub fn oracle_length(&self, word: &BraidWord, basis: Basis) -> LengthReport {
        match basis {
            Basis::Standard => LengthReport::from_normal_form(&self.std, &self.std.mixed_nf(word), basis),
            Basis::Dual => LengthReport::from_normal_form(&self.dual, &self.dual.dual_mixed_nf(word), basis),
        }
    }

    /// Combinatorial normal form.
    pub fn oracle_normal_form(&self, word: &BraidWord, basis: Basis) -> MixedNormalForm {
        match basis {
            Basis::Standard => self.std.mixed_nf(word),
            Basis::Dual => self.dual.dual_mixed_nf(word),
        }
    }

    /// The mixed normal form recovered from the action alone.
    pub fn hom_normal_form(&self, word: &BraidWord, basis: Basis) -> MixedNormalForm {
        match basis {
            Basis::Standard => self.std_hom_nf(word),
            Basis::Dual => self.dual_hom_nf(word),
        }
    }

    fn std_hom_nf(&self, word: &BraidWord) -> MixedNormalForm {
        let mut x = self.std_object(word);
        let lo = x.raw_t_support().expect("nonzero").0;
        let l = (-lo).max(0) as usize;
        let delta = self.std.delta_word();
        for _ in 0..l {
            x = self.action.apply_word(&x, &delta);
        }
        let weyl = self.std.weyl();
        let mut factors = Vec::new();
        let mut steps = 0;
        while x.raw_t_support().expect("nonzero").1 > 0 {
            let mut w = weyl.identity();
            loop {
                steps += 1;
                assert!(steps < MAX_STEPS, "normal form peeling does not terminate");
                // Left descents of the remaining positive braid.
                let not_desc = self.e_set(&x, 0, ESide::Minus);
                let next = (0..self.rank()).find(|&i| !not_desc.contains(&i) && !w.is_right_descent(i));
                let Some(i) = next else { break };
                w = w.mul(weyl.gen(i));
                x = self.action.apply_generator(&x, i, false);
            }
            assert!(!w.is_identity(), "a braid with positive levels has a left descent");
            factors.push(w);
        }
        garside::mixed_from_delta_form(&self.std, &DeltaForm { power: -(l as i64), factors })
    }

    fn dual_hom_nf(&self, word: &BraidWord) -> MixedNormalForm {
        let lat = self.dual.lattice();
        let mut x = self.dual_object(word);
        let mut negative = Vec::new();
        let mut steps = 0;
        loop {
            let (lo, _) = x.raw_baric_support().expect("nonzero");
            if lo >= 0 {
                break;
            }
            steps += 1;
            assert!(steps < MAX_STEPS, "normal form peeling does not terminate");
            let slice = x.raw_baric_slice(lo).shifted(0, 0, lo);
            let b = self.nu_index(&slice, false);
            negative.push(lat.element(b).clone());
            x = self.action.apply_word(&x, &self.simple_words[b]);
        }
        let mut positive = Vec::new();
        loop {
            let (_, hi) = x.raw_baric_support().expect("nonzero");
            if hi <= 0 {
                break;
            }
            steps += 1;
            assert!(steps < MAX_STEPS, "normal form peeling does not terminate");
            let slice = x.raw_baric_slice(0);
            let v = lat.element(self.nu_index(&slice, true));
            let f = v.inverse().mul(self.dual.choice().c());
            let fi = lat.index_of(&f).expect("complement of a dual simple");
            positive.push(f);
            x = self.action.apply_word(&x, &self.simple_words[fi].inverse());
        }
        MixedNormalForm { negative, positive }
    }

    /// Checks every dual simple braid: standard lengths at most one on each
    /// side, a witness `β = x·y⁻¹` with `x, y` simple, and the shape of its
    /// complex of bimodules.
    pub fn digne_gobet_verify(&self) -> DigneGobetReport {
        use rayon::prelude::*;
        let lat = self.dual.lattice();
        let results: Vec<(Witness, Vec<String>)> = (0..lat.len()).into_par_iter().map(|b| self.digne_gobet_one(b)).collect();
        let mut failures = Vec::new();
        let mut witnesses = Vec::new();
        for (w, f) in results {
            failures.extend(f);
            witnesses.push(w);
        }
        DigneGobetReport {
            type_name: self.spec.to_string(),
            orientation: self.orientation.to_string(),
            checked: lat.len(),
            failures,
            witnesses,
        }
    }

    fn digne_gobet_one(&self, b: usize) -> (Witness, Vec<String>) {
        let lat = self.dual.lattice();
        let roots = self.dual.weyl().roots();
        let word = &self.simple_words[b];
        let beta_tword = self
            .dual
            .t_word(b)
            .iter()
            .map(|&t| roots.root_of_reflection(lat.element(t)).expect("reflection").clone())
            .collect();
        let mut failures = Vec::new();
        let label = format!("beta {} ({})", b, word);
        let len = self.length(word, Basis::Standard);
        if len.plus > 1 || len.minus > 1 {
            failures.push(format!("{label}: standard length {len:?}"));
        }
        // The mixed form p⁻¹q of the reversed braid gives β = rev(q)·rev(p)⁻¹,
        // and reversal sends the lift of w to the lift of w⁻¹.
        let rev = self.std.mixed_nf(&word.reversed());
        let id = self.std.weyl().identity();
        if rev.negative.len() > 1 || rev.positive.len() > 1 {
            failures.push(format!("{label}: reversed normal form has {} factors", rev.len()));
        }
        let x = rev.positive.first().unwrap_or(&id).inverse();
        let y = rev.negative.first().unwrap_or(&id).inverse();
        let x_word = self.std.simple_word(&x);
        let y_word = self.std.simple_word(&y);
        if !self.std.braid_eq(word, &x_word.concat(&y_word.inverse())) {
            failures.push(format!("{label}: witness {x_word} / {y_word} does not multiply back"));
        }
        let bm = self.action.bimodule_of_word(word);
        for s in bm.summands() {
            if s.kind != crate::braid_action::BimodSummandKind::Identity && (s.oshift != -1 || s.t_level() != 0) {
                failures.push(format!("{label}: bimodule summand {s:?}"));
            }
        }
        (Witness { beta_tword, x_word, y_word }, failures)
    }
}

fn word_vertices(word: &BraidWord) -> Vec<usize> {
    word.letters().iter().map(|l: &Letter| l.vertex).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn engine(t: &str, o: &str) -> HomEngine {
        let spec: DynkinSpec = t.parse().unwrap();
        let o = Orientation::parse(&spec, o).unwrap();
        HomEngine::new(&spec, &o)
    }

    #[test]
    fn small_examples() {
        let e = engine("A2", "");
        let w = |s: &str| BraidWord::parse(s, 2).unwrap();
        assert!(e.member_std_positive(&w("1 2 1")));
        assert!(!e.member_std_positive(&w("1 -2")));
        assert!(!e.member_std_negative(&w("1 -2")));
        assert!(e.member_std_negative(&w("-1")));
        assert_eq!(e.length(&w("1 -2"), Basis::Standard), LengthReport::new(1, 1, Basis::Standard));
        assert_eq!(e.length(&BraidWord::empty(), Basis::Dual), LengthReport::new(0, 0, Basis::Dual));
    }
}
