use std::collections::{BTreeSet, VecDeque};

use catbraid::coxeter::{DynkinSpec, Weyl, WeylElement};
use proptest::prelude::*;

fn weyl(t: &str) -> Weyl {
    Weyl::new(&t.parse::<DynkinSpec>().unwrap())
}

/// Every element of a finite Weyl group, by breadth-first search.
fn elements(w: &Weyl) -> Vec<WeylElement> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([w.identity()]);
    seen.insert(w.identity());
    while let Some(x) = queue.pop_front() {
        for i in 0..w.rank() {
            let y = x.mul(w.gen(i));
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

#[test]
fn simple_reflection_formulas() {
    let w = weyl("A2");
    let s1 = w.gen(0);
    assert_eq!(s1.apply(&[1, 0]), vec![-1, 0]);
    assert_eq!(s1.apply(&[0, 1]), vec![1, 1]);
    let w3 = weyl("A3");
    assert_eq!(w3.gen(0).apply(&[0, 0, 1]), vec![0, 0, 1]);
}

#[test]
fn root_counts_and_bijection() {
    for (t, n) in [("A1", 1), ("A3", 6), ("A5", 15), ("D4", 12), ("D5", 20), ("E6", 36)] {
        let w = weyl(t);
        let roots = w.roots();
        assert_eq!(roots.positive().len(), n, "{t}");
        assert_eq!(roots.reflections().len(), n, "{t}");
        assert_eq!(roots.all_roots().len(), 2 * n, "{t}");
        for r in roots.positive() {
            let s = roots.reflection_of_root(r);
            assert_eq!(roots.root_of_reflection(&s), Some(r), "{t}");
            assert_eq!(s.reflection_length(), 1, "{t}");
        }
    }
}

#[test]
fn length_examples() {
    let w = weyl("A3");
    assert_eq!(w.length(&w.identity()), 0);
    assert_eq!(w.length(w.gen(1)), 1);
    assert_eq!(w.length(w.longest()), 6);
    assert_eq!(w.longest().right_descents(), [0, 1, 2].into());
    assert_eq!(w.longest().left_descents(), [0, 1, 2].into());
    assert_eq!(w.gen(1).right_descents(), [1].into());
    assert_eq!(w.identity().right_descents(), BTreeSet::new());
    assert_eq!(w.identity().reflection_length(), 0);
    assert_eq!(w.of_word(&[0, 2, 1]).reflection_length(), 3);
}

#[test]
fn group_orders() {
    for (t, n) in [("A1", 2), ("A2", 6), ("A3", 24), ("D4", 192)] {
        let w = weyl(t);
        assert_eq!(elements(&w).len(), n, "{t}");
        assert_eq!(w.spec().weyl_order(), n as u128, "{t}");
    }
}

#[test]
fn reflection_length_matches_brute_force() {
    for t in ["A1", "A2", "A3"] {
        let w = weyl(t);
        let refl = w.roots().reflections().to_vec();
        // Breadth-first search over products of reflections.
        let mut dist = std::collections::BTreeMap::from([(w.identity(), 0usize)]);
        let mut queue = VecDeque::from([w.identity()]);
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            for t in &refl {
                let y = x.mul(t);
                if !dist.contains_key(&y) {
                    dist.insert(y.clone(), d + 1);
                    queue.push_back(y);
                }
            }
        }
        for (x, d) in &dist {
            assert_eq!(x.reflection_length(), *d, "{t}");
        }
    }
}

#[test]
fn reflection_length_is_subadditive() {
    for t in ["A2", "A3"] {
        let w = weyl(t);
        let all = elements(&w);
        for u in &all {
            for v in &all {
                assert!(u.mul(v).reflection_length() <= u.reflection_length() + v.reflection_length());
            }
        }
    }
}

fn word_strategy(rank: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..rank, 0..=20)
}

proptest! {
    #[test]
    fn length_changes_by_one(word in word_strategy(4), i in 0usize..4) {
        let w = weyl("D4");
        let x = w.of_word(&word);
        let l = w.length(&x) as i64;
        let m = w.length(&x.mul(w.gen(i))) as i64;
        prop_assert_eq!((l - m).abs(), 1);
        prop_assert_eq!(x.is_right_descent(i), m < l);
    }

    #[test]
    fn elements_permute_roots(word in word_strategy(5)) {
        let w = weyl("A5");
        let x = w.of_word(&word);
        let roots: BTreeSet<Vec<i64>> = w.roots().all_roots().into_iter().collect();
        let image: BTreeSet<Vec<i64>> = roots.iter().map(|r| x.apply(r)).collect();
        prop_assert_eq!(image, roots);
    }

    #[test]
    fn reduced_words_are_reduced(word in word_strategy(4)) {
        let w = weyl("A4");
        let x = w.of_word(&word);
        let r = w.reduced_word(&x);
        prop_assert_eq!(r.len(), w.length(&x));
        prop_assert_eq!(w.of_word(&r), x);
    }
}

#[test]
fn only_simply_laced_types_parse() {
    for t in ["B2", "C3", "F4", "G2", "A0", "D3", "E9", "X"] {
        assert!(t.parse::<DynkinSpec>().is_err(), "{t}");
    }
    for t in ["A1", "D4", "E6", "E7", "E8"] {
        assert!(t.parse::<DynkinSpec>().is_ok(), "{t}");
    }
}
