//! Chain complexes over the zigzag algebra, shared by left modules and
//! bimodules.
//!
//! A summand is the identity bimodule `A`, a bimodule `P_a ⊗ Q_b`, or a left
//! module `P_a`, each with a homological position and a bigrading label.
//! A map is a sparse sum of terms `q · u ⊗ v`:
//!
//! * `P_a⊗Q_b → P_c⊗Q_d`: `u` a path `a → c`, `v` a path `d → b`;
//! * `P_a → P_c`: `u` a path `a → c`, no right factor;
//! * `A → P_c⊗Q_d`: a central element, `u` a path `k → c`, `v` a path `d → k`;
//! * `P_a⊗Q_b → A`: `u` a path `a → b`, no right factor.
//!
//! A map from label `s` to label `s'` has bidegree `s − s'`; the label of
//! `P_a⊗Q_b` excludes the intrinsic shift `(−1, 0)` of `Q_b`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::zigzag::{BasisMorphism, Bidegree, ZigzagAlgebra, Q};

/// Intrinsic bigrading of `Q_b` relative to the dual of `P_b`.
pub(crate) const Q_OFFSET: Bidegree = (-1, 0);

/// The kind of an indecomposable summand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum Gen {
    /// The identity bimodule `A`.
    Unit,
    /// `P_a ⊗ Q_b` for `Some(b)`, the left module `P_a` for `None`.
    Proj(usize, Option<usize>),
}

/// A summand with its position and shifts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Obj {
    pub gen: Gen,
    pub hpos: i32,
    pub p: i32,
    pub o: i32,
}

impl Obj {
    pub fn label(&self) -> Bidegree {
        (self.p, self.o)
    }

    /// Same summand up to homological position.
    pub fn same_type(&self, other: &Obj) -> bool {
        self.gen == other.gen && self.p == other.p && self.o == other.o
    }
}

/// One term `c · l ⊗ r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Term {
    pub c: Q,
    pub l: BasisMorphism,
    pub r: Option<BasisMorphism>,
}

/// A sparse map between two summands; terms sorted by `(l, r)`, nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Mor(pub Vec<Term>);

impl Mor {
    pub fn single(c: Q, l: BasisMorphism, r: Option<BasisMorphism>) -> Mor {
        if c.is_zero() {
            Mor::default()
        } else {
            Mor(vec![Term { c, l, r }])
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn from_terms(mut v: Vec<Term>) -> Mor {
        v.sort_by_key(|t| (t.l, t.r));
        let mut out: Vec<Term> = Vec::with_capacity(v.len());
        for t in v {
            match out.last_mut() {
                Some(last) if last.l == t.l && last.r == t.r => last.c += t.c,
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.c.is_zero());
        Mor(out)
    }

    pub fn add_scaled(&mut self, other: &Mor, s: Q) {
        if s.is_zero() || other.is_zero() {
            return;
        }
        let mut v = std::mem::take(&mut self.0);
        v.extend(other.0.iter().map(|t| Term { c: t.c * s, ..*t }));
        *self = Mor::from_terms(v);
    }

    pub fn scaled(&self, s: Q) -> Mor {
        if s.is_zero() {
            return Mor::default();
        }
        Mor(self.0.iter().map(|t| Term { c: t.c * s, ..*t }).collect())
    }

    /// The scalar `λ` if this map is `λ · e ⊗ e`.
    pub fn iso_scalar(&self) -> Option<Q> {
        match self.0.as_slice() {
            [t] if matches!(t.l, BasisMorphism::Identity(_))
                && matches!(t.r, None | Some(BasisMorphism::Identity(_))) =>
            {
                Some(t.c)
            }
            _ => None,
        }
    }
}

/// `g ∘ f` for `f: X → Y`, `g: Y → Z` with kinds `kx, ky, kz`.
pub(crate) fn compose(alg: &ZigzagAlgebra, kx: Gen, ky: Gen, kz: Gen, f: &Mor, g: &Mor) -> Mor {
    let mut out = Vec::new();
    match (kx, ky, kz) {
        (Gen::Proj(..), Gen::Proj(..), Gen::Proj(..)) | (Gen::Unit, Gen::Proj(..), Gen::Proj(..)) => {
            for a in &f.0 {
                for b in &g.0 {
                    let Some(l) = alg.then(a.l, b.l) else { continue };
                    let r = match (a.r, b.r) {
                        (None, None) => None,
                        (Some(v1), Some(v2)) => match alg.then(v2, v1) {
                            Some(v) => Some(v),
                            None => continue,
                        },
                        _ => unreachable!("mixed module and bimodule maps"),
                    };
                    out.push(Term { c: a.c * b.c, l, r });
                }
            }
        }
        (Gen::Proj(..), Gen::Proj(..), Gen::Unit) => {
            for a in &f.0 {
                for b in &g.0 {
                    let Some(uw) = alg.then(a.l, b.l) else { continue };
                    let Some(v) = a.r else { unreachable!("bimodule map") };
                    let Some(x) = alg.then(uw, v) else { continue };
                    out.push(Term { c: a.c * b.c, l: x, r: None });
                }
            }
        }
        (Gen::Proj(..), Gen::Unit, Gen::Proj(..)) => {
            for a in &f.0 {
                for b in &g.0 {
                    let Some(l) = alg.then(a.l, b.l) else { continue };
                    out.push(Term { c: a.c * b.c, l, r: b.r });
                }
            }
        }
        _ => unreachable!("composition through or between identity bimodules"),
    }
    Mor::from_terms(out)
}

/// A bounded complex of summands with a sparse differential.
#[derive(Clone, Debug, Default)]
pub(crate) struct Complex {
    pub objs: BTreeMap<usize, Obj>,
    pub out: BTreeMap<usize, BTreeMap<usize, Mor>>,
    pub inc: BTreeMap<usize, BTreeSet<usize>>,
    next: usize,
}

impl Complex {
    pub fn new() -> Self {
        Complex::default()
    }

    pub fn len(&self) -> usize {
        self.objs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objs.is_empty()
    }

    pub fn add_obj(&mut self, o: Obj) -> usize {
        let id = self.next;
        self.next += 1;
        self.objs.insert(id, o);
        id
    }

    /// Inserts an object with a given id (ids must stay unique).
    pub fn insert_obj(&mut self, id: usize, o: Obj) {
        self.objs.insert(id, o);
        self.next = self.next.max(id + 1);
    }

    pub fn entry(&self, a: usize, b: usize) -> Option<&Mor> {
        self.out.get(&a).and_then(|m| m.get(&b))
    }

    /// Adds `m` to the entry `a → b`.
    pub fn add_entry(&mut self, a: usize, b: usize, m: &Mor) {
        if m.is_zero() {
            return;
        }
        let slot = self.out.entry(a).or_default().entry(b).or_default();
        slot.add_scaled(m, Q::one());
        if slot.is_zero() {
            self.out.get_mut(&a).unwrap().remove(&b);
            if let Some(s) = self.inc.get_mut(&b) {
                s.remove(&a);
            }
        } else {
            self.inc.entry(b).or_default().insert(a);
        }
    }

    fn remove_obj(&mut self, x: usize) {
        self.objs.remove(&x);
        if let Some(outs) = self.out.remove(&x) {
            for y in outs.keys() {
                if let Some(s) = self.inc.get_mut(y) {
                    s.remove(&x);
                }
            }
        }
        if let Some(ins) = self.inc.remove(&x) {
            for w in ins {
                if let Some(m) = self.out.get_mut(&w) {
                    m.remove(&x);
                }
            }
        }
    }

    /// All nonzero entries `(from, to, map)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Mor)> {
        self.out.iter().flat_map(|(&a, m)| m.iter().map(move |(&b, f)| (a, b, f)))
    }

    /// Finds an isomorphism entry, scanning sources by increasing id.
    fn find_pivot(&self) -> Option<(usize, usize, Q)> {
        for (&x, outs) in &self.out {
            let ox = &self.objs[&x];
            for (&y, m) in outs {
                if ox.same_type(&self.objs[&y]) {
                    if let Some(l) = m.iso_scalar() {
                        return Some((x, y, l));
                    }
                }
            }
        }
        None
    }

    /// Gaussian elimination of an isomorphism entry `x → y` with scalar `λ`:
    /// `d'(w → z) = d(w → z) − d(x → z) λ⁻¹ d(w → y)`.
    fn eliminate(&mut self, alg: &ZigzagAlgebra, x: usize, y: usize, lambda: Q) {
        let kx = self.objs[&x].gen;
        let ins: Vec<usize> = self.inc.get(&y).map(|s| s.iter().copied().filter(|&w| w != x).collect()).unwrap_or_default();
        let outs: Vec<usize> = self
            .out
            .get(&x)
            .map(|m| m.keys().copied().filter(|&z| z != y).collect())
            .unwrap_or_default();
        let s = -lambda.recip();
        let mut updates = Vec::new();
        for &w in &ins {
            let a = self.entry(w, y).expect("incoming entry").clone();
            let kw = self.objs[&w].gen;
            for &z in &outs {
                let b = self.entry(x, z).expect("outgoing entry");
                let kz = self.objs[&z].gen;
                let c = compose(alg, kw, kx, kz, &a, b).scaled(s);
                updates.push((w, z, c));
            }
        }
        for (w, z, c) in updates {
            self.add_entry(w, z, &c);
        }
        self.remove_obj(x);
        self.remove_obj(y);
    }

    /// Removes contractible summands until no isomorphism entry remains.
    pub fn minimize(&mut self, alg: &ZigzagAlgebra) {
        while let Some((x, y, l)) = self.find_pivot() {
            self.eliminate(alg, x, y, l);
            debug_assert!(self.dd_is_zero(alg));
        }
    }

    /// Checks `d ∘ d = 0` exactly.
    pub fn dd_is_zero(&self, alg: &ZigzagAlgebra) -> bool {
        for (&x, outs) in &self.out {
            let mut acc: BTreeMap<usize, Mor> = BTreeMap::new();
            for (&y, f) in outs {
                if let Some(outs2) = self.out.get(&y) {
                    for (&z, g) in outs2 {
                        let c = compose(alg, self.objs[&x].gen, self.objs[&y].gen, self.objs[&z].gen, f, g);
                        acc.entry(z).or_default().add_scaled(&c, Q::one());
                    }
                }
            }
            if acc.values().any(|m| !m.is_zero()) {
                return false;
            }
        }
        true
    }

    /// Structural checks: entries go up one position and have degree 0.
    pub fn check_entries(&self, alg: &ZigzagAlgebra) -> Result<(), String> {
        for (a, b, m) in self.entries() {
            let (oa, ob) = (&self.objs[&a], &self.objs[&b]);
            if ob.hpos != oa.hpos + 1 {
                return Err(format!("entry {a}->{b} does not raise hpos by one"));
            }
            let want = (oa.p - ob.p, oa.o - ob.o);
            for t in &m.0 {
                let mut d = alg.bidegree(t.l);
                if let Some(r) = t.r {
                    let e = alg.bidegree(r);
                    d = (d.0 + e.0, d.1 + e.1);
                }
                let want = match (oa.gen, ob.gen) {
                    (Gen::Unit, Gen::Proj(..)) => (want.0 - Q_OFFSET.0, want.1 - Q_OFFSET.1),
                    (Gen::Proj(..), Gen::Unit) => (want.0 + Q_OFFSET.0, want.1 + Q_OFFSET.1),
                    _ => want,
                };
                if d != want {
                    return Err(format!("entry {a}->{b} term {} has degree {d:?}, expected {want:?}", t.l));
                }
            }
        }
        Ok(())
    }

    /// Applies a shift to every summand; the differential picks up the
    /// sign `(−1)^h`.
    pub fn shifted(&self, h: i32, p: i32, o: i32) -> Complex {
        let mut c = self.clone();
        for ob in c.objs.values_mut() {
            ob.hpos += h;
            ob.p += p;
            ob.o += o;
        }
        if h % 2 != 0 {
            for m in c.out.values_mut() {
                for f in m.values_mut() {
                    *f = f.scaled(-Q::one());
                }
            }
        }
        c
    }

    /// Direct sum (ids of `other` are renumbered).
    pub fn direct_sum(&self, other: &Complex) -> Complex {
        let mut c = self.clone();
        let mut map = BTreeMap::new();
        for (&id, &o) in &other.objs {
            map.insert(id, c.add_obj(o));
        }
        for (a, b, m) in other.entries() {
            c.add_entry(map[&a], map[&b], m);
        }
        c
    }

    /// Sub-complex on the summands satisfying `keep`.
    pub fn restrict(&self, keep: impl Fn(&Obj) -> bool) -> Complex {
        let mut c = Complex::new();
        for (&id, o) in &self.objs {
            if keep(o) {
                c.insert_obj(id, *o);
            }
        }
        for (a, b, m) in self.entries() {
            if c.objs.contains_key(&a) && c.objs.contains_key(&b) {
                c.add_entry(a, b, m);
            }
        }
        c
    }

    /// Renumbers summands `0..n` in the order `(hpos, gen, p, o, old id)`.
    pub fn canonical_ids(&self) -> Complex {
        let mut order: Vec<(usize, Obj)> = self.objs.iter().map(|(&i, &o)| (i, o)).collect();
        order.sort_by_key(|&(i, o)| (o.hpos, o.gen, o.p, o.o, i));
        let mut c = Complex::new();
        let mut map = BTreeMap::new();
        for (i, o) in order {
            map.insert(i, c.add_obj(o));
        }
        for (a, b, m) in self.entries() {
            c.add_entry(map[&a], map[&b], m);
        }
        c
    }
}

fn add(a: Bidegree, b: Bidegree) -> Bidegree {
    (a.0 + b.0, a.1 + b.1)
}

/// Tensor product `B ⊗_A X` of a bimodule complex with a module or
/// bimodule complex, with differential `d(b ⊗ x) = db ⊗ x + (−1)^{|b|} b ⊗ dx`.
pub(crate) fn tensor(alg: &ZigzagAlgebra, bc: &Complex, xc: &Complex) -> Complex {
    let mut out = Complex::new();
    // (b, x, middle basis) -> new id
    let mut ids: BTreeMap<(usize, usize, Option<BasisMorphism>), usize> = BTreeMap::new();
    for (&b, ob) in &bc.objs {
        for (&x, ox) in &xc.objs {
            let hpos = ob.hpos + ox.hpos;
            let s = add(ob.label(), ox.label());
            match (ob.gen, ox.gen) {
                (Gen::Unit, g) => {
                    let id = out.add_obj(Obj { gen: g, hpos, p: s.0, o: s.1 });
                    ids.insert((b, x, None), id);
                }
                (Gen::Proj(a, Some(bb)), Gen::Unit) => {
                    let id = out.add_obj(Obj { gen: Gen::Proj(a, Some(bb)), hpos, p: s.0, o: s.1 });
                    ids.insert((b, x, None), id);
                }
                (Gen::Proj(a, Some(bb)), Gen::Proj(e, r)) => {
                    for h in alg.basis_between(bb, e) {
                        let l = add(add(s, Q_OFFSET), alg.bidegree(h));
                        let id = out.add_obj(Obj { gen: Gen::Proj(a, r), hpos, p: l.0, o: l.1 });
                        ids.insert((b, x, Some(h)), id);
                    }
                }
                (Gen::Proj(_, None), _) => unreachable!("left factor must be a bimodule"),
            }
        }
    }
    let right_id = |g: Gen| match g {
        Gen::Proj(_, Some(f)) => Some(BasisMorphism::Identity(f)),
        _ => None,
    };
    // d_B ⊗ id
    for (b, b2, m) in bc.entries() {
        let (kb, kb2) = (bc.objs[&b].gen, bc.objs[&b2].gen);
        for (&x, ox) in &xc.objs {
            match (kb, kb2, ox.gen) {
                (_, _, Gen::Unit) => {
                    out.add_entry(ids[&(b, x, None)], ids[&(b2, x, None)], m);
                }
                (Gen::Unit, Gen::Proj(_, Some(_)), Gen::Proj(e, _)) => {
                    let src = ids[&(b, x, None)];
                    for t in &m.0 {
                        let v = t.r.expect("central element");
                        if t.l.source() != e {
                            continue;
                        }
                        let tgt = ids[&(b2, x, Some(v))];
                        out.add_entry(src, tgt, &Mor::single(t.c, t.l, right_id(ox.gen)));
                    }
                }
                (Gen::Proj(_, Some(b0)), Gen::Proj(_, Some(_)), Gen::Proj(e, _)) => {
                    for h in alg.basis_between(b0, e) {
                        let src = ids[&(b, x, Some(h))];
                        for t in &m.0 {
                            let v = t.r.expect("bimodule map");
                            let Some(h2) = alg.then(v, h) else { continue };
                            let tgt = ids[&(b2, x, Some(h2))];
                            out.add_entry(src, tgt, &Mor::single(t.c, t.l, right_id(ox.gen)));
                        }
                    }
                }
                (Gen::Proj(_, Some(b0)), Gen::Unit, Gen::Proj(e, _)) => {
                    let tgt = ids[&(b2, x, None)];
                    for h in alg.basis_between(b0, e) {
                        let src = ids[&(b, x, Some(h))];
                        for t in &m.0 {
                            let Some(l) = alg.then(t.l, h) else { continue };
                            out.add_entry(src, tgt, &Mor::single(t.c, l, right_id(ox.gen)));
                        }
                    }
                }
                _ => unreachable!("unexpected bimodule entry"),
            }
        }
    }
    // id ⊗ d_X with the Koszul sign
    for (x, x2, m) in xc.entries() {
        let (kx, kx2) = (xc.objs[&x].gen, xc.objs[&x2].gen);
        for (&b, ob) in &bc.objs {
            let sign = if ob.hpos.rem_euclid(2) == 0 { Q::one() } else { -Q::one() };
            match ob.gen {
                Gen::Unit => {
                    out.add_entry(ids[&(b, x, None)], ids[&(b, x2, None)], &m.scaled(sign));
                }
                Gen::Proj(a, Some(bb)) => match (kx, kx2) {
                    (Gen::Proj(e, _), Gen::Proj(_, _)) => {
                        for h in alg.basis_between(bb, e) {
                            let src = ids[&(b, x, Some(h))];
                            for t in &m.0 {
                                let Some(h2) = alg.then(h, t.l) else { continue };
                                let tgt = ids[&(b, x2, Some(h2))];
                                out.add_entry(src, tgt, &Mor::single(sign * t.c, BasisMorphism::Identity(a), t.r));
                            }
                        }
                    }
                    (Gen::Unit, Gen::Proj(_, Some(_))) => {
                        let src = ids[&(b, x, None)];
                        for t in &m.0 {
                            if t.l.source() != bb {
                                continue;
                            }
                            let tgt = ids[&(b, x2, Some(t.l))];
                            out.add_entry(src, tgt, &Mor::single(sign * t.c, BasisMorphism::Identity(a), t.r));
                        }
                    }
                    (Gen::Proj(c, Some(_)), Gen::Unit) => {
                        let tgt = ids[&(b, x2, None)];
                        for h in alg.basis_between(bb, c) {
                            let src = ids[&(b, x, Some(h))];
                            for t in &m.0 {
                                let Some(r) = alg.then(h, t.l) else { continue };
                                out.add_entry(src, tgt, &Mor::single(sign * t.c, BasisMorphism::Identity(a), Some(r)));
                            }
                        }
                    }
                    _ => unreachable!("unexpected entry kinds"),
                },
                Gen::Proj(_, None) => unreachable!("left factor must be a bimodule"),
            }
        }
    }
    out
}
