//! Braid words: sequences of signed Artin generators.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One Artin generator `σ_i^{±1}` with a 0-based vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub vertex: usize,
    pub positive: bool,
}

impl Letter {
    pub fn pos(vertex: usize) -> Self {
        Letter { vertex, positive: true }
    }

    pub fn neg(vertex: usize) -> Self {
        Letter { vertex, positive: false }
    }

    pub fn inverse(self) -> Self {
        Letter { vertex: self.vertex, positive: !self.positive }
    }

    /// Signed 1-based integer form, as in the text format.
    pub fn signed(self) -> i64 {
        let v = self.vertex as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }
}

/// A word in the Artin generators. The text format is whitespace-separated
/// signed 1-based integers, e.g. `"1 -3 2 2"`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<i64>", try_from = "Vec<i64>")]
pub struct BraidWord {
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        BraidWord { letters }
    }

    pub fn empty() -> Self {
        BraidWord::default()
    }

    /// Positive word from 0-based vertices.
    pub fn positive(vertices: &[usize]) -> Self {
        BraidWord { letters: vertices.iter().map(|&v| Letter::pos(v)).collect() }
    }

    /// Parses the text format, checking indices against `rank`.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let k: i64 = tok.parse().map_err(|_| Error::InvalidWord(format!("bad token `{tok}`")))?;
            letters.push(Self::letter_from_signed(k, rank)?);
        }
        Ok(BraidWord { letters })
    }

    /// Builds a word from signed 1-based integers.
    pub fn from_signed(v: &[i64], rank: usize) -> Result<Self> {
        let letters = v.iter().map(|&k| Self::letter_from_signed(k, rank)).collect::<Result<_>>()?;
        Ok(BraidWord { letters })
    }

    fn letter_from_signed(k: i64, rank: usize) -> Result<Letter> {
        if k == 0 || k.unsigned_abs() as usize > rank {
            return Err(Error::InvalidWord(format!("generator {k} out of range for rank {rank}")));
        }
        let v = k.unsigned_abs() as usize - 1;
        Ok(if k > 0 { Letter::pos(v) } else { Letter::neg(v) })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.positive)
    }

    pub fn is_negative(&self) -> bool {
        self.letters.iter().all(|l| !l.positive)
    }

    pub fn push(&mut self, l: Letter) {
        self.letters.push(l);
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { letters }
    }

    /// The inverse word.
    pub fn inverse(&self) -> BraidWord {
        BraidWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// The anti-automorphism fixing each generator (reversed letters).
    pub fn reversed(&self) -> BraidWord {
        BraidWord { letters: self.letters.iter().rev().copied().collect() }
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k >= 0 { self.clone() } else { self.inverse() };
        let mut out = BraidWord::empty();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Cancels adjacent `σσ⁻¹` pairs.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { letters: out }
    }

    /// Signed 1-based integers.
    pub fn to_signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.signed()).collect()
    }

    /// Uniformly random word of the given length.
    pub fn random<R: Rng>(rng: &mut R, rank: usize, len: usize) -> BraidWord {
        let letters = (0..len)
            .map(|_| Letter { vertex: rng.gen_range(0..rank), positive: rng.gen_bool(0.5) })
            .collect();
        BraidWord { letters }
    }

    /// Uniformly random positive word of the given length.
    pub fn random_positive<R: Rng>(rng: &mut R, rank: usize, len: usize) -> BraidWord {
        BraidWord { letters: (0..len).map(|_| Letter::pos(rng.gen_range(0..rank))).collect() }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.signed().to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl From<BraidWord> for Vec<i64> {
    fn from(w: BraidWord) -> Self {
        w.to_signed()
    }
}

impl TryFrom<Vec<i64>> for BraidWord {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        BraidWord::from_signed(&v, usize::MAX)
    }
}
