//! Batch verification suites run by `catbraid verify`.

use std::time::Instant;

use catbraid::complexes::ProjComplex;
use catbraid::hom_algorithms::{Basis, DigneGobetReport, HomEngine};
use catbraid::word::BraidWord;
use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    BraidRelations,
    Gabriel,
    Lengths,
    NormalForms,
    DualLattice,
    DigneGobet,
    Faithfulness,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::BraidRelations => "braid-relations",
            Suite::Gabriel => "gabriel",
            Suite::Lengths => "lengths",
            Suite::NormalForms => "normal-forms",
            Suite::DualLattice => "dual-lattice",
            Suite::DigneGobet => "digne-gobet",
            Suite::Faithfulness => "faithfulness",
        }
    }
}

/// Outcome of a suite. `complete` is false when the time budget ran out
/// before every instance was checked.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    #[serde(rename = "type")]
    pub type_name: String,
    pub orientation: String,
    pub checked: usize,
    pub complete: bool,
    pub failures: Vec<String>,
}

/// Options shared by the randomized suites.
#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub seed: u64,
    pub count: Option<usize>,
    pub deadline: Option<Instant>,
}

impl RunOptions {
    fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

/// Per-instance outcome: `None` when skipped for lack of time.
type Outcome = Option<Result<(), String>>;

fn report(e: &HomEngine, suite: Suite, outcomes: Vec<Outcome>) -> SuiteReport {
    let complete = outcomes.iter().all(Option::is_some);
    let checked = outcomes.iter().filter(|o| o.is_some()).count();
    let failures = outcomes.into_iter().flatten().filter_map(Result::err).collect();
    SuiteReport {
        suite: suite.name().to_string(),
        type_name: e.spec().to_string(),
        orientation: e.orientation().to_string(),
        checked,
        complete,
        failures,
    }
}

fn run_all<T: Sync>(items: &[T], opts: &RunOptions, f: impl Fn(&T) -> Result<(), String> + Sync) -> Vec<Outcome> {
    items.par_iter().map(|x| if opts.expired() { None } else { Some(f(x)) }).collect()
}

/// A finished suite: the generic report, or the witness report of the
/// Digne–Gobet check.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Report {
    Suite(SuiteReport),
    DigneGobet(DigneGobetReport),
}

impl Report {
    pub fn failures(&self) -> &[String] {
        match self {
            Report::Suite(r) => &r.failures,
            Report::DigneGobet(r) => &r.failures,
        }
    }

    pub fn checked(&self) -> usize {
        match self {
            Report::Suite(r) => r.checked,
            Report::DigneGobet(r) => r.checked,
        }
    }

    pub fn complete(&self) -> bool {
        match self {
            Report::Suite(r) => r.complete,
            Report::DigneGobet(_) => true,
        }
    }
}

pub fn run(e: &HomEngine, suite: Suite, opts: &RunOptions) -> Report {
    let outcomes = match suite {
        Suite::BraidRelations => braid_relations(e, opts),
        Suite::Gabriel => gabriel(e, opts),
        Suite::Lengths => lengths(e, opts),
        Suite::NormalForms => normal_forms(e, opts),
        Suite::DualLattice => dual_lattice(e, opts),
        Suite::Faithfulness => faithfulness(e, opts),
        Suite::DigneGobet => return Report::DigneGobet(e.digne_gobet_verify()),
    };
    Report::Suite(report(e, suite, outcomes))
}

fn braid_relations(e: &HomEngine, opts: &RunOptions) -> Vec<Outcome> {
    let spec = e.spec();
    let n = spec.rank();
    let mut cases = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                cases.push((i, j, k));
            }
        }
    }
    let act = e.action();
    let alg = act.algebra();
    run_all(&cases, opts, |&(i, j, k)| {
        let p = ProjComplex::projective(k);
        if i == j {
            let s = BraidWord::positive(&[i]);
            let x = act.apply_word(&p, &s.concat(&s.inverse()));
            let y = act.apply_word(&p, &s.inverse().concat(&s));
            return if x == p && y == p { Ok(()) } else { Err(format!("s{0} s{0}^-1 on P{1}", i + 1, k + 1)) };
        }
        let (l, r) = if spec.adjacent(i, j) {
            (BraidWord::positive(&[i, j, i]), BraidWord::positive(&[j, i, j]))
        } else {
            (BraidWord::positive(&[i, j]), BraidWord::positive(&[j, i]))
        };
        if act.apply_word(&p, &l).iso_check(&act.apply_word(&p, &r), alg) {
            Ok(())
        } else {
            Err(format!("relation ({l}) = ({r}) fails on P{}", k + 1))
        }
    })
}

fn gabriel(e: &HomEngine, opts: &RunOptions) -> Vec<Outcome> {
    let alg = e.action().algebra();
    let roots = e.root_complexes();
    let mut outcomes = run_all(roots, opts, |r| {
        let c = &r.complex;
        if r.dimension_vector() != r.root {
            return Err(format!("dimension vector {:?} for root {:?}", r.dimension_vector(), r.root));
        }
        if c.t_support(alg) != Some((0, 0)) || c.baric_support(alg) != Some((0, 0)) {
            return Err(format!("root {:?} is not in the heart", r.root));
        }
        if c.hom_up_to_homotopy(c, alg, (0, 0, 0)) != 1 {
            return Err(format!("root {:?} has a nontrivial endomorphism", r.root));
        }
        Ok(())
    });
    let mut dims: Vec<Vec<i64>> = roots.iter().map(|r| r.dimension_vector()).collect();
    dims.sort();
    let mut want: Vec<Vec<i64>> = e.dual().weyl().roots().positive().to_vec();
    want.sort();
    outcomes.push(Some(if dims == want { Ok(()) } else { Err("dimension vectors differ from the positive roots".into()) }));
    outcomes
}

fn corpus(e: &HomEngine, opts: &RunOptions) -> Vec<BraidWord> {
    let n = e.spec().rank();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    (0..opts.count.unwrap_or(500))
        .map(|_| {
            let len = rng.gen_range(0..=8);
            BraidWord::random(&mut rng, n, len)
        })
        .collect()
}

fn lengths(e: &HomEngine, opts: &RunOptions) -> Vec<Outcome> {
    run_all(&corpus(e, opts), opts, |w| {
        for b in [Basis::Standard, Basis::Dual] {
            let (got, want) = (e.length(w, b), e.oracle_length(w, b));
            if got != want {
                return Err(format!("{b} length of {w}: {got:?}, expected {want:?}"));
            }
        }
        Ok(())
    })
}

fn normal_forms(e: &HomEngine, opts: &RunOptions) -> Vec<Outcome> {
    run_all(&corpus(e, opts), opts, |w| {
        for b in [Basis::Standard, Basis::Dual] {
            let (got, want) = (e.hom_normal_form(w, b), e.oracle_normal_form(w, b));
            if got != want {
                return Err(format!("{b} normal form of {w} differs from the greedy form"));
            }
        }
        Ok(())
    })
}

fn membership(e: &HomEngine, w: &BraidWord) -> Result<(), String> {
    let nf = e.std().mixed_nf(w);
    let d = e.dual().dual_mixed_nf(w);
    let checks = [
        ("positive", e.member_std_positive(w), nf.negative.is_empty()),
        ("negative", e.member_std_negative(w), nf.positive.is_empty()),
        ("dual-positive", e.member_dual_positive(w), d.negative.is_empty()),
        ("bessis", e.is_bessis(w), d.negative.is_empty() && d.positive.len() <= 1),
    ];
    for (name, got, want) in checks {
        if got != want {
            return Err(format!("{name} membership of {w}: {got}, expected {want}"));
        }
    }
    Ok(())
}

fn dual_lattice(e: &HomEngine, opts: &RunOptions) -> Vec<Outcome> {
    let lat = e.dual().lattice();
    let mut words: Vec<(BraidWord, bool)> = (0..lat.len()).map(|b| (e.dual().bessis_word(b), true)).collect();
    let n = e.spec().rank();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let want = opts.count.unwrap_or(200);
    let mut found = 0;
    while found < want {
        let len = rng.gen_range(1..=8);
        let w = BraidWord::random(&mut rng, n, len);
        let d = e.dual().dual_mixed_nf(&w);
        if d.negative.is_empty() && d.positive.len() <= 1 {
            continue;
        }
        words.push((w, false));
        found += 1;
    }
    run_all(&words, opts, |(w, member)| {
        if e.is_bessis(w) != *member {
            return Err(format!("bessis membership of {w} should be {member}"));
        }
        membership(e, w)
    })
}

fn faithfulness(e: &HomEngine, opts: &RunOptions) -> Vec<Outcome> {
    let n = e.spec().rank();
    let count = opts.count.unwrap_or(100);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut words = Vec::new();
    while words.len() < count {
        let len = rng.gen_range(3..=8);
        let a = BraidWord::random(&mut rng, n, len);
        let id = a.concat(&e.std().mixed_nf(&a).to_word(e.std()).inverse());
        if !id.free_reduce().is_empty() {
            words.push((id, true));
        }
    }
    while words.len() < 2 * count {
        let len = rng.gen_range(1..=8);
        let w = BraidWord::random(&mut rng, n, len);
        if !e.std().mixed_nf(&w).is_empty() {
            words.push((w, false));
        }
    }
    let sum = ProjComplex::all_projectives(n);
    let alg = e.action().algebra();
    run_all(&words, opts, |(w, trivial)| {
        let acts_trivially = e.action().apply_to_projectives(w).iso_check(&sum, alg);
        if acts_trivially == *trivial {
            Ok(())
        } else if *trivial {
            Err(format!("identity word {w} acts nontrivially"))
        } else {
            Err(format!("nontrivial braid {w} acts trivially"))
        }
    })
}
