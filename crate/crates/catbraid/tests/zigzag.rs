use catbraid::coxeter::DynkinSpec;
use catbraid::garside_dual::Orientation;
use catbraid::zigzag::{BasisMorphism, ZigzagAlgebra};

use BasisMorphism::{Edge, Identity, Loop};

fn algebra(t: &str, o: &str) -> ZigzagAlgebra {
    let spec: DynkinSpec = t.parse().unwrap();
    let o = Orientation::parse(&spec, o).unwrap();
    ZigzagAlgebra::new(&spec, &o)
}

/// Every orientation of the diagram.
fn orientations(spec: &DynkinSpec) -> Vec<Orientation> {
    let edges = spec.edges().to_vec();
    (0..1u32 << edges.len())
        .map(|mask| {
            let arrows = edges
                .iter()
                .enumerate()
                .map(|(k, &(a, b))| if mask >> k & 1 == 1 { (a, b) } else { (b, a) })
                .collect();
            Orientation::new(spec, arrows).unwrap()
        })
        .collect()
}

#[test]
fn composition_examples() {
    let a = algebra("A3", "");
    assert_eq!(a.then(Edge(0, 1), Edge(1, 0)), Some(Loop(0)));
    assert_eq!(a.then(Edge(0, 1), Edge(1, 2)), None);
    assert_eq!(a.then(Edge(1, 0), Loop(0)), None);
    assert_eq!(a.then(Loop(1), Loop(1)), None);
    assert_eq!(a.then(Identity(1), Edge(1, 2)), Some(Edge(1, 2)));
    assert_eq!(a.then(Edge(0, 1), Identity(0)), None);
}

#[test]
fn a1_is_dual_numbers() {
    let a = algebra("A1", "");
    assert_eq!(a.full_basis(), vec![Identity(0), Loop(0)]);
    assert_eq!(a.bidegree(Loop(0)), (2, 1));
    assert_eq!(a.then(Loop(0), Loop(0)), None);
}

#[test]
fn hom_basis_examples() {
    let a = algebra("A3", "2>1,2>3");
    assert_eq!(a.hom_basis((0, 0, 0), (0, 0, 0)), vec![Identity(0)]);
    assert_eq!(a.hom_basis((0, 1, 1), (1, 0, 0)), vec![Edge(0, 1)]);
    assert_eq!(a.hom_basis((1, 1, 0), (0, 0, 0)), vec![Edge(1, 0)]);
    for p in -3..=3 {
        for o in -3..=3 {
            assert!(a.hom_basis((0, p, o), (2, 0, 0)).is_empty());
        }
    }
}

#[test]
fn hom_dimensions_between_projectives() {
    for t in ["A1", "A2", "A3", "A4", "A5", "A6", "D4", "D5", "D6", "E6"] {
        let spec: DynkinSpec = t.parse().unwrap();
        for o in orientations(&spec) {
            let a = ZigzagAlgebra::new(&spec, &o);
            for i in 0..spec.rank() {
                for j in 0..spec.rank() {
                    let mut degs: Vec<(i32, i32)> = a.basis_between(i, j).into_iter().map(|b| a.bidegree(b)).collect();
                    degs.sort();
                    let want = if i == j {
                        vec![(0, 0), (2, 1)]
                    } else if o.has_arrow(i, j) {
                        vec![(1, 0)]
                    } else if o.has_arrow(j, i) {
                        vec![(1, 1)]
                    } else {
                        vec![]
                    };
                    assert_eq!(degs, want, "{t} {o} {i} {j}");
                }
            }
        }
    }
}

#[test]
fn graded_duality_pairs_degrees() {
    // Every basis element b : P_i → P_j has a partner b' : P_j → P_i with
    // b then b' equal to the loop at i.
    for t in ["A3", "D4"] {
        let a = algebra(t, "");
        for b in a.full_basis() {
            let partner = a
                .full_basis()
                .into_iter()
                .find(|&c| a.then(b, c) == Some(Loop(b.source())))
                .unwrap();
            assert_eq!(partner, b.dual());
            let (p, o) = a.bidegree(b);
            let (q, r) = a.bidegree(partner);
            assert_eq!((p + q, o + r), (2, 1));
        }
    }
}

#[test]
fn composition_is_associative() {
    for t in ["A3", "D4"] {
        let a = algebra(t, "");
        let basis = a.full_basis();
        for &f in &basis {
            for &g in &basis {
                for &h in &basis {
                    let left = a.then(f, g).and_then(|fg| a.then(fg, h));
                    let right = a.then(g, h).and_then(|gh| a.then(f, gh));
                    assert_eq!(left, right, "{t}: {f} {g} {h}");
                }
            }
        }
    }
}

#[test]
fn bidegrees_add_under_composition() {
    let a = algebra("D5", "");
    let basis = a.full_basis();
    for &f in &basis {
        for &g in &basis {
            if let Some(fg) = a.then(f, g) {
                let (p, o) = a.bidegree(f);
                let (q, r) = a.bidegree(g);
                assert_eq!(a.bidegree(fg), (p + q, o + r));
            }
        }
    }
}
