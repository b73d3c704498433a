use catbraid::coxeter::{DynkinSpec, Side, WeylElement};
use catbraid::garside::{GarsideStructure, MixedNormalForm};
use catbraid::garside_dual::{DualGarside, Orientation};
use catbraid::garside_std::StdGarside;
use catbraid::word::{BraidWord, Letter};
use proptest::prelude::*;

fn std_g(t: &str) -> StdGarside {
    StdGarside::new(&t.parse::<DynkinSpec>().unwrap())
}

fn dual(t: &str, o: &str) -> DualGarside {
    let spec: DynkinSpec = t.parse().unwrap();
    DualGarside::new(&spec, &Orientation::parse(&spec, o).unwrap())
}

fn w(s: &str, n: usize) -> BraidWord {
    BraidWord::parse(s, n).unwrap()
}

#[test]
fn standard_examples() {
    let g = std_g("A2");
    let wy = g.weyl();
    assert_eq!(g.greedy_nf_positive(&w("1 1", 2)).unwrap(), vec![wy.gen(0).clone(), wy.gen(0).clone()]);
    assert_eq!(g.greedy_nf_positive(&w("1 2 1", 2)).unwrap(), vec![wy.of_word(&[0, 1, 0])]);
    assert!(g.greedy_nf_positive(&w("1 -2", 2)).is_err());
    let nf = g.mixed_nf(&w("-2 1", 2));
    assert_eq!(nf, MixedNormalForm { negative: vec![wy.gen(1).clone()], positive: vec![wy.gen(0).clone()] });
    assert!(g.mixed_nf(&w("1 -1", 2)).is_empty());
    assert_eq!(g.charney_length(&w("1 -2", 2)), (1, 1));
    let a3 = std_g("A3");
    assert_eq!(a3.greedy_nf_positive(&w("2 1 3 2", 3)).unwrap().len(), 1);
    assert_eq!(a3.charney_length(&w("1 2 1 3 2 1", 3)), (1, 0));
    assert_eq!(a3.charney_length(&BraidWord::empty()), (0, 0));
}

#[test]
fn dual_lift_of_a_reflection() {
    let d = dual("A3", "2>1,2>3");
    let t = d.weyl().of_word(&[0, 2, 1, 2, 0]);
    assert_eq!(d.dual_lift_reflection(&t).unwrap().to_string(), "1 3 2 -3 -1");
    let g = StdGarside::new(d.weyl().spec());
    let s2 = d.dual_lift_reflection(d.weyl().gen(1)).unwrap();
    assert!(g.braid_eq(&s2, &w("2", 3)), "{s2}");
    assert!(d.dual_lift_reflection(d.choice().c()).is_err());
    let a1 = dual("A1", "");
    assert_eq!(a1.dual_lift_reflection(a1.weyl().gen(0)).unwrap().to_string(), "1");
}

#[test]
fn descents_of_the_coxeter_element() {
    let d = dual("A3", "2>1,2>3");
    let lat = d.lattice();
    assert_eq!(d.dual_descents(d.choice().c()).unwrap(), lat.reflection_indices());
    assert!(d.dual_descents(&d.weyl().identity()).unwrap().is_empty());
    assert!(d.dual_descents(d.weyl().longest()).is_err());
}

#[test]
fn left_factor_is_lcm_of_simple_divisors() {
    for t in ["A2", "A3"] {
        let g = std_g(t);
        let wy = g.weyl();
        let n = wy.rank();
        let all: Vec<WeylElement> = all_elements(&g);
        for len in 1..=5 {
            for letters in words_of_length(n, len) {
                let beta = BraidWord::positive(&letters);
                let divisors: Vec<&WeylElement> = all
                    .iter()
                    .filter(|u| g.mixed_nf(&g.simple_word(u).inverse().concat(&beta)).negative.is_empty())
                    .collect();
                let lcm = divisors.iter().fold(wy.identity(), |acc, u| g.simple_lcm(&acc, u, Side::Left));
                let nf = g.greedy_nf_positive(&beta).unwrap();
                assert_eq!(nf[0], lcm, "{t} {beta}");
            }
        }
    }
}

fn all_elements(g: &StdGarside) -> Vec<WeylElement> {
    let wy = g.weyl();
    let mut out = vec![wy.identity()];
    let mut k = 0;
    while k < out.len() {
        for i in 0..wy.rank() {
            let y = out[k].mul(wy.gen(i));
            if !out.contains(&y) {
                out.push(y);
            }
        }
        k += 1;
    }
    out
}

fn words_of_length(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..n).map(move |i| {
                    let mut v = w.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
    }
    out
}

#[test]
fn delta_conjugation_is_a_diagram_automorphism() {
    for t in ["A3", "A4", "D4", "D5", "E6"] {
        let g = std_g(t);
        let n = g.rank();
        let perm = g.weyl().delta_permutation();
        let delta = g.delta_braid_word();
        for i in 0..n {
            let lhs = delta.concat(&BraidWord::positive(&[i])).concat(&delta.inverse());
            assert!(g.braid_eq(&lhs, &BraidWord::positive(&[perm[i]])), "{t} {i}");
        }
    }
}

#[test]
fn conjugates_of_reflection_pairs_are_reflections() {
    for (t, o) in [("A2", ""), ("A3", "2>1,2>3"), ("D4", "")] {
        let d = dual(t, o);
        let lat = d.lattice();
        for &a in lat.reflection_indices() {
            for &b in lat.reflection_indices() {
                let (t1, t2) = (lat.element(a), lat.element(b));
                let Some(p) = lat.index_of(&t1.mul(t2)) else { continue };
                if lat.length(p) != 2 {
                    continue;
                }
                let conj = t2.inverse().mul(t1).mul(t2);
                let k = lat.index_of(&conj).expect("conjugate lies in the interval");
                assert_eq!(lat.length(k), 1, "{t}");
            }
        }
    }
}

#[test]
fn elements_are_joins_of_their_descents() {
    for (t, o) in [("A3", "2>1,2>3"), ("A4", ""), ("D4", "")] {
        let d = dual(t, o);
        let lat = d.lattice();
        for b in 0..lat.len() {
            assert_eq!(lat.join_all(&lat.descents(b)), b, "{t}");
        }
    }
}

#[test]
fn complements_have_non_commuting_witnesses() {
    let d = dual("A3", "2>1,2>3");
    let lat = d.lattice();
    let c = d.choice().c();
    for bp in 0..lat.len() {
        let b = lat.index_of(&lat.element(bp).inverse().mul(c)).unwrap();
        assert_eq!(lat.length(bp) + lat.length(b), 3);
        for &t in lat.reflection_indices() {
            if lat.leq(t, bp) || lat.leq(t, b) {
                continue;
            }
            let found = lat
                .reflection_indices()
                .iter()
                .any(|&tp| lat.leq(tp, bp) && lat.index_of(&lat.element(tp).mul(lat.element(t))).is_none());
            assert!(found, "{bp} {t}");
        }
    }
}

#[test]
fn interval_sizes() {
    for (t, o, n) in [("A1", "", 2), ("A2", "", 5), ("A3", "2>1,2>3", 14), ("A4", "", 42), ("D4", "", 50)] {
        assert_eq!(dual(t, o).lattice().len(), n, "{t}");
    }
}

/// One legal rewrite of a word: a braid or commutation relation, or the
/// insertion or deletion of a cancelling pair.
fn rewrite(spec: &DynkinSpec, word: &BraidWord, pos: usize, choice: u8) -> BraidWord {
    let l = word.letters().to_vec();
    let n = spec.rank();
    let pos = if l.is_empty() { 0 } else { pos % (l.len() + 1) };
    let mut out = l.clone();
    match choice % 4 {
        0 => {
            let x = Letter::pos((pos * 7 + 3) % n);
            out.insert(pos, x.inverse());
            out.insert(pos, x);
        }
        1 => {
            if pos + 1 < l.len() && l[pos] == l[pos + 1].inverse() {
                out.drain(pos..pos + 2);
            }
        }
        2 => {
            if pos + 1 < l.len() && l[pos].signed().signum() == l[pos + 1].signed().signum() {
                let (i, j) = (l[pos].vertex, l[pos + 1].vertex);
                if i != j && !spec.adjacent(i, j) {
                    out.swap(pos, pos + 1);
                }
            }
        }
        _ => {
            if pos + 2 < l.len()
                && l[pos] == l[pos + 2]
                && l[pos].signed().signum() == l[pos + 1].signed().signum()
                && spec.adjacent(l[pos].vertex, l[pos + 1].vertex)
            {
                let (a, b) = (l[pos], l[pos + 1]);
                out[pos] = b;
                out[pos + 1] = a;
                out[pos + 2] = b;
            }
        }
    }
    BraidWord::new(out)
}

fn signed_word(rank: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec((1..=rank, any::<bool>()).prop_map(|(v, s)| if s { v } else { -v }), 0..=8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_forms_survive_rewrites(
        v in signed_word(4),
        moves in prop::collection::vec((0usize..20, 0u8..4), 50),
    ) {
        let spec: DynkinSpec = "A4".parse().unwrap();
        let g = StdGarside::new(&spec);
        let d = DualGarside::new(&spec, &Orientation::default_for(&spec));
        let word = BraidWord::from_signed(&v, 4).unwrap();
        let mut other = word.clone();
        for (pos, choice) in moves {
            other = rewrite(&spec, &other, pos, choice);
        }
        prop_assert_eq!(g.mixed_nf(&word), g.mixed_nf(&other));
        prop_assert_eq!(d.dual_mixed_nf(&word), d.dual_mixed_nf(&other));
    }

    #[test]
    fn normal_form_words_represent_the_braid(v in signed_word(4)) {
        let spec: DynkinSpec = "D4".parse().unwrap();
        let g = StdGarside::new(&spec);
        let d = DualGarside::new(&spec, &Orientation::default_for(&spec));
        let word = BraidWord::from_signed(&v, 4).unwrap();
        let nf = g.mixed_nf(&word);
        prop_assert_eq!(g.mixed_nf(&nf.to_word(&g)), nf);
        let dn = d.dual_mixed_nf(&word);
        prop_assert!(g.braid_eq(&dn.to_word(&d), &word));
        prop_assert_eq!(d.dual_mixed_nf(&dn.to_word(&d)), dn);
    }

    #[test]
    fn inverse_swaps_lengths(v in signed_word(3)) {
        let g = std_g("A3");
        let d = dual("A3", "2>1,2>3");
        let word = BraidWord::from_signed(&v, 3).unwrap();
        let (p, m) = g.charney_length(&word);
        prop_assert_eq!(g.charney_length(&word.inverse()), (m, p));
        let (p, m) = d.dual_length(&word);
        prop_assert_eq!(d.dual_length(&word.inverse()), (m, p));
    }
}
