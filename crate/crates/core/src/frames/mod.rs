//! Cylindric orthoframes: representation, axiom checks and the two
//! constructions from a cylindric quasi-implication algebra.

mod construct;
mod filters;

pub use construct::{
    check_canonical_iso, check_goldblatt_lemmas, check_maclaren_lemmas, goldblatt_frame, maclaren_frame, nonzero_elements, phi, psi, to_points,
};
pub use filters::{
    enumerate_proper_filters, filter_generated, principal_filter, FilterSubset, Generated,
};

use crate::error::{Error, Result};
use crate::law::{verify, Domain, Law};
use crate::report::CheckReport;
use fixedbitset::FixedBitSet;

/// A binary relation on `0..m`, stored as successor rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    rows: Vec<FixedBitSet>,
}

impl Relation {
    pub fn empty(m: usize) -> Self {
        Relation { rows: vec![FixedBitSet::with_capacity(m); m] }
    }

    pub fn from_fn(m: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut r = Relation::empty(m);
        for x in 0..m {
            for y in 0..m {
                if f(x, y) {
                    r.rows[x].insert(y);
                }
            }
        }
        r
    }

    pub fn from_matrix(rows: &[Vec<bool>]) -> Self {
        Relation::from_fn(rows.len(), |x, y| rows[x][y])
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    #[inline]
    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    /// `R[{x}]`
    pub fn successors(&self, x: usize) -> &FixedBitSet {
        &self.rows[x]
    }

    /// `R[U]`
    pub fn image(&self, u: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.len());
        for x in u.ones() {
            out.union_with(&self.rows[x]);
        }
        out
    }

    /// `x (self ; other) z` iff `x self y` and `y other z` for some `y`.
    pub fn then(&self, other: &Relation) -> Relation {
        Relation { rows: self.rows.iter().map(|r| other.image(r)).collect() }
    }

    pub fn matrix(&self) -> Vec<Vec<bool>> {
        let m = self.len();
        self.rows.iter().map(|r| (0..m).map(|y| r.contains(y)).collect()).collect()
    }
}

/// A carrier `0..m` with orthogonality, one relation per dimension and the
/// diagonal subsets `Δ_{i,k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CylindricOrthoFrame {
    m: usize,
    perp: Relation,
    rels: Vec<Relation>,
    deltas: Vec<Vec<FixedBitSet>>,
    point_labels: Option<Vec<String>>,
}

impl CylindricOrthoFrame {
    pub fn new(
        perp: Relation,
        rels: Vec<Relation>,
        deltas: Vec<Vec<FixedBitSet>>,
        point_labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let m = perp.len();
        if perp.rows.iter().any(|r| r.len() != m) {
            return Err(Error::malformed("perp", "row length differs from carrier size"));
        }
        if rels.iter().any(|r| r.len() != m || r.rows.iter().any(|row| row.len() != m)) {
            return Err(Error::malformed("rels", format!("expected {m}x{m} relations")));
        }
        let d = rels.len();
        if deltas.len() != d || deltas.iter().any(|r| r.len() != d) {
            return Err(Error::malformed("deltas", format!("expected a {d}x{d} family")));
        }
        if deltas.iter().flatten().any(|s| s.len() != m) {
            return Err(Error::malformed("deltas", "subset over the wrong carrier"));
        }
        crate::lattice::check_labels(&point_labels, m)?;
        Ok(CylindricOrthoFrame { m, perp, rels, deltas, point_labels })
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    pub fn dims(&self) -> usize {
        self.rels.len()
    }

    pub fn perp(&self) -> &Relation {
        &self.perp
    }

    pub fn rel(&self, i: usize) -> &Relation {
        &self.rels[i]
    }

    pub fn rels(&self) -> &[Relation] {
        &self.rels
    }

    pub fn delta(&self, i: usize, k: usize) -> &FixedBitSet {
        &self.deltas[i][k]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.point_labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.point_labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn subset(&self, members: impl IntoIterator<Item = usize>) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.m);
        s.extend(members);
        s
    }
}

/// `U⊥ = {x : x ⊥ y for all y ∈ U}`.
pub fn perp_set(f: &CylindricOrthoFrame, u: &FixedBitSet) -> FixedBitSet {
    let mut out = FixedBitSet::with_capacity(f.m);
    for x in 0..f.m {
        if u.ones().all(|y| f.perp.contains(x, y)) {
            out.insert(x);
        }
    }
    out
}

fn orthoframe_laws(f: &CylindricOrthoFrame) -> Vec<Law<'_>> {
    let m = f.len();
    vec![
        Law::new("irreflexive", vec![Domain::Elem(m)], move |a| !f.perp.contains(a[0], a[0])),
        Law::new("symmetric", vec![Domain::Elem(m); 2], move |a| {
            f.perp.contains(a[0], a[1]) == f.perp.contains(a[1], a[0])
        }),
    ]
}

pub fn check_orthoframe(f: &CylindricOrthoFrame) -> CheckReport {
    verify(&orthoframe_laws(f))
}

/// `(R[{x}]⊥, R[R[{x}]⊥])` for every dimension and point.
fn monadic_sets(f: &CylindricOrthoFrame) -> Vec<Vec<(FixedBitSet, FixedBitSet)>> {
    f.rels
        .iter()
        .map(|r| {
            (0..f.m)
                .map(|x| {
                    let rxp = perp_set(f, r.successors(x));
                    let rrxp = r.image(&rxp);
                    (rxp, rrxp)
                })
                .collect()
        })
        .collect()
}

fn monadic_laws<'a>(f: &'a CylindricOrthoFrame, sets: &'a [Vec<(FixedBitSet, FixedBitSet)>]) -> Vec<Law<'a>> {
    let (m, d) = (f.len(), f.dims());
    let dom = |k: usize| {
        let mut v = vec![Domain::Dim(d)];
        v.extend(vec![Domain::Elem(m); k]);
        v
    };
    vec![
        Law::new("reflexive", dom(1), move |a| f.rels[a[0]].contains(a[1], a[1])),
        Law::new("transitive", dom(3), move |a| {
            let r = &f.rels[a[0]];
            !(r.contains(a[1], a[2]) && r.contains(a[2], a[3])) || r.contains(a[1], a[3])
        }),
        // R[R[{x}]⊥] ⊆ R[{x}]⊥, witness (i, x, z) with z on the left only
        Law::new("mof", dom(2), move |a| {
            let (rxp, rrxp) = &sets[a[0]][a[1]];
            !rrxp.contains(a[2]) || rxp.contains(a[2])
        }),
        Law::new("mof.eq", dom(2), move |a| {
            let (rxp, rrxp) = &sets[a[0]][a[1]];
            !rxp.contains(a[2]) || rrxp.contains(a[2])
        }),
    ]
}

/// Orthoframe laws plus, for every `R_i`, reflexivity, transitivity, the
/// inclusion `R[R[{x}]⊥] ⊆ R[{x}]⊥` and (separately) the equality.
pub fn check_monadic_orthoframe(f: &CylindricOrthoFrame) -> CheckReport {
    let sets = monadic_sets(f);
    let mut laws = orthoframe_laws(f);
    laws.extend(monadic_laws(f, &sets));
    verify(&laws)
}

pub fn check_cylindric_orthoframe(f: &CylindricOrthoFrame) -> CheckReport {
    let (m, d) = (f.len(), f.dims());
    let sets = monadic_sets(f);
    let compose: Vec<Vec<Relation>> =
        (0..d).map(|i| (0..d).map(|k| f.rels[i].then(&f.rels[k])).collect()).collect();
    let closed: Vec<Vec<FixedBitSet>> = (0..d)
        .map(|i| (0..d).map(|k| perp_set(f, &perp_set(f, &f.deltas[i][k]))).collect())
        .collect();
    let compose_image = |i: usize, k: usize, l: usize| {
        let mut both = f.deltas[i][k].clone();
        both.intersect_with(&f.deltas[k][l]);
        f.rels[k].image(&both)
    };
    let images: Vec<FixedBitSet> = (0..d * d * d)
        .map(|v| compose_image(v / (d * d), v / d % d, v % d))
        .collect();
    let (compose, closed, images) = (&compose, &closed, &images);

    let mut laws = orthoframe_laws(f);
    laws.extend(monadic_laws(f, &sets));
    laws.extend([
        Law::new(
            "commute",
            vec![Domain::Dim(d), Domain::Dim(d), Domain::Elem(m), Domain::Elem(m)],
            move |a| compose[a[0]][a[1]].contains(a[2], a[3]) == compose[a[1]][a[0]].contains(a[2], a[3]),
        ),
        Law::new("delta.sym", vec![Domain::Dim(d), Domain::Dim(d), Domain::Elem(m)], move |a| {
            f.deltas[a[0]][a[1]].contains(a[2]) == f.deltas[a[1]][a[0]].contains(a[2])
        }),
        Law::new("delta.closed", vec![Domain::Dim(d), Domain::Dim(d), Domain::Elem(m)], move |a| {
            f.deltas[a[0]][a[1]].contains(a[2]) == closed[a[0]][a[1]].contains(a[2])
        }),
        Law::new("delta.unit", vec![Domain::Dim(d), Domain::Elem(m)], move |a| {
            f.deltas[a[0]][a[0]].contains(a[1])
        }),
        Law::new(
            "delta.compose",
            vec![Domain::Dim(d), Domain::Dim(d), Domain::Dim(d), Domain::Elem(m)],
            move |a| {
                let (i, k, l, x) = (a[0], a[1], a[2], a[3]);
                i == k || l == k || images[(i * d + k) * d + l].contains(x) == f.deltas[i][l].contains(x)
            },
        ),
    ]);
    verify(&laws)
}
