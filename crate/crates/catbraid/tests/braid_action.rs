use catbraid::braid_action::{BimodSummandKind, BraidAction};
use catbraid::complexes::ProjComplex;
use catbraid::coxeter::DynkinSpec;
use catbraid::garside_dual::{DualGarside, Orientation};
use catbraid::word::BraidWord;

fn setup(t: &str, o: &str) -> (DynkinSpec, Orientation, BraidAction) {
    let spec: DynkinSpec = t.parse().unwrap();
    let o = Orientation::parse(&spec, o).unwrap();
    let b = BraidAction::new(&spec, &o);
    (spec, o, b)
}

fn w(s: &str, n: usize) -> BraidWord {
    BraidWord::parse(s, n).unwrap()
}

#[test]
fn braid_relations_on_projectives() {
    for t in ["A3", "D4"] {
        let (spec, _, b) = setup(t, "");
        let n = spec.rank();
        let alg = b.algebra();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (l, r) = if spec.adjacent(i, j) {
                    (BraidWord::positive(&[i, j, i]), BraidWord::positive(&[j, i, j]))
                } else {
                    (BraidWord::positive(&[i, j]), BraidWord::positive(&[j, i]))
                };
                for k in 0..n {
                    let p = ProjComplex::projective(k);
                    let x = b.apply_word(&p, &l);
                    let y = b.apply_word(&p, &r);
                    assert!(x.iso_check(&y, alg), "{t}: {i} {j} on P{k}");
                }
            }
        }
    }
}

#[test]
fn inverse_pairs_cancel() {
    let (_, _, b) = setup("A3", "");
    for i in 0..3 {
        for k in 0..3 {
            let p = ProjComplex::projective(k);
            let word = BraidWord::positive(&[i]).concat(&BraidWord::positive(&[i]).inverse());
            assert_eq!(b.apply_word(&p, &word), p);
            assert_eq!(b.apply_word(&p, &word.inverse()), p);
        }
    }
}

#[test]
fn gamma_shifts_baric_degree() {
    for t in ["A3", "A4", "D4"] {
        let (spec, o, b) = setup(t, "");
        let d = DualGarside::new(&spec, &o);
        let g = d.choice().gamma_word();
        for i in 0..spec.rank() {
            let x = b.apply_word(&ProjComplex::projective(i), &g);
            assert_eq!(x.baric_support(b.algebra()), Some((1, 1)), "{t} P{i}");
        }
    }
}

#[test]
fn reflection_complex_example() {
    let (spec, o, b) = setup("A3", "2>1,2>3");
    let d = DualGarside::new(&spec, &o);
    let t = d.weyl().of_word(&[0, 2, 1, 2, 0]);
    let r = b.reflection_complex(&d, &t).unwrap();
    assert_eq!(r.root, vec![1, 1, 1]);
    assert_eq!(r.dimension_vector(), vec![1, 1, 1]);
    let s = r.complex.summands();
    let p2 = s.iter().find(|x| x.vertex == 1).unwrap();
    assert!(s.iter().filter(|x| x.vertex != 1).all(|x| x.hpos == p2.hpos + 1));
    assert_eq!(r.complex.differential().len(), 2);
}

#[test]
fn gabriel_bijection() {
    for t in ["A1", "A2", "A3", "A4", "A5", "D4", "D5"] {
        let (spec, o, b) = setup(t, "");
        let d = DualGarside::new(&spec, &o);
        let rcs = b.root_complexes(&d);
        let mut dims: Vec<Vec<i64>> = rcs.iter().map(|r| r.dimension_vector()).collect();
        for r in &rcs {
            assert_eq!(r.dimension_vector(), r.root, "{t}");
            assert_eq!(r.complex.t_support(b.algebra()), Some((0, 0)));
            assert_eq!(r.complex.baric_support(b.algebra()), Some((0, 0)));
        }
        dims.sort();
        dims.dedup();
        assert_eq!(dims.len(), d.weyl().roots().positive().len());
    }
}

#[test]
fn bimodule_of_word_matches_module_action() {
    let (_, _, b) = setup("A3", "2>1,2>3");
    let word = w("1 -2 3 2", 3);
    let bm = b.bimodule_of_word(&word);
    for k in 0..3 {
        let p = ProjComplex::projective(k);
        assert!(b.act_by_bimodule(&bm, &p).iso_check(&b.apply_word(&p, &word), b.algebra()));
    }
    let one = b.bimodule_of_word(&w("1", 3));
    assert_eq!(one.len(), 2);
    let e = b.bimodule_of_word(&BraidWord::empty());
    assert_eq!(e.summands()[0].kind, BimodSummandKind::Identity);
    let bes = b.bimodule_of_word(&w("1 2", 3));
    assert_eq!(bes.baric_support(), Some((0, 1)));
    let zero = bes.baric_slice(0).summands();
    assert_eq!(zero.len(), 1);
    assert_eq!(zero[0].kind, BimodSummandKind::Identity);
}

#[test]
fn hom_to_frak_examples() {
    let (spec, o, b) = setup("A3", "2>1,2>3");
    let d = DualGarside::new(&spec, &o);
    let s = |i: usize| b.reflection_complex(&d, d.weyl().gen(i)).unwrap();
    assert_eq!(b.hom_to_frak(&s(0).complex, &s(1)), 0);
    assert_ne!(b.hom_to_frak(&s(1).complex, &s(0)), 0);
    assert!(b.hom_to_frak(&s(1).complex, &s(1)) > 0);
}
