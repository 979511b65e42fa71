//! Implication polynomials and the conversions between quantum cylindric
//! algebras and cylindric quasi-implication algebras.

use crate::error::{Error, Result};
use crate::lattice::FiniteOrtholattice;
use crate::law::{elems, verify, Domain, Law};
use crate::qca::{check_qca, QuantifierMap, QuantumCylindricAlgebra};
use crate::qia::{check_cylindric_qia, derived_order, CylindricQia, QiaTable};
use crate::report::CheckReport;

/// The four two-variable implication polynomials of an ortholattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ImplicationKind {
    /// `x⊥ ∨ y`
    Classical,
    /// `x⊥ ∨ (x ∧ y)`
    Sasaki,
    /// `(x⊥ ∧ y⊥) ∨ y`
    Dishkant,
    /// `(x ∧ y) ∨ (x⊥ ∧ y) ∨ (x⊥ ∧ y⊥)`
    Kalmbach,
}

impl ImplicationKind {
    pub const ALL: [ImplicationKind; 4] = [
        ImplicationKind::Classical,
        ImplicationKind::Sasaki,
        ImplicationKind::Dishkant,
        ImplicationKind::Kalmbach,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ImplicationKind::Classical => "classical",
            ImplicationKind::Sasaki => "sasaki",
            ImplicationKind::Dishkant => "dishkant",
            ImplicationKind::Kalmbach => "kalmbach",
        }
    }
}

pub fn implication(l: &FiniteOrtholattice, kind: ImplicationKind, x: usize, y: usize) -> usize {
    let (xc, yc) = (l.comp(x), l.comp(y));
    match kind {
        ImplicationKind::Classical => l.join(xc, y),
        ImplicationKind::Sasaki => l.join(xc, l.meet(x, y)),
        ImplicationKind::Dishkant => l.join(l.meet(xc, yc), y),
        ImplicationKind::Kalmbach => l.join(l.join(l.meet(x, y), l.meet(xc, y)), l.meet(xc, yc)),
    }
}

/// Law of implication, modus ponens and modus tollens for `kind`.
pub fn check_hardegree(l: &FiniteOrtholattice, kind: ImplicationKind) -> CheckReport {
    let n = l.len();
    let imp = move |x, y| implication(l, kind, x, y);
    verify(&[
        Law::new("law-of-implication", elems(n, 2), move |a| {
            !l.leq(a[0], a[1]) || imp(a[0], a[1]) == l.top()
        }),
        Law::new("modus-ponens", elems(n, 2), move |a| {
            l.leq(l.meet(a[0], imp(a[0], a[1])), a[1])
        }),
        Law::new("modus-tollens", elems(n, 2), move |a| {
            let (x, y) = (a[0], a[1]);
            l.leq(l.meet(l.comp(y), imp(x, y)), l.comp(x))
        }),
    ])
}

/// `⟨A; π_s, 0⟩` as a dot table, labels carried over.
pub fn sasaki_table(l: &FiniteOrtholattice) -> QiaTable {
    let n = l.len();
    let dot = (0..n)
        .map(|x| (0..n).map(|y| implication(l, ImplicationKind::Sasaki, x, y)).collect())
        .collect();
    QiaTable::new(dot, Some(l.bot()), l.labels().map(<[String]>::to_vec))
        .expect("sasaki table of a well-formed lattice")
}

/// Orthomodular lattice of a bounded QIA: order `x·y = 1`, complement `x·0`,
/// join `((x·y)·(y·x))·x`, meet `((x·y)·(x·0))·0`.
pub fn qia_to_lattice(q: &QiaTable) -> Result<FiniteOrtholattice> {
    let zero = q.zero().ok_or(Error::Unbounded)?;
    let order = derived_order(q)?;
    let n = q.len();
    let table = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
        (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect()
    };
    FiniteOrtholattice::from_parts(
        order.matrix(),
        table(&|x, y| q.meet(x, y)),
        table(&|x, y| q.join(x, y)),
        (0..n).map(|x| q.comp(x)).collect(),
        zero,
        q.dot(zero, zero),
        q.labels().map(<[String]>::to_vec),
    )
}

/// Sasaki hook, zero, quantifiers as diamonds and the diagonal unchanged.
pub fn qca_to_cqia(a: &QuantumCylindricAlgebra) -> Result<CylindricQia> {
    let report = check_qca(a);
    if !report.passed() {
        return Err(Error::InvalidQca(Box::new(report)));
    }
    CylindricQia::new(
        sasaki_table(a.lattice()),
        a.quantifiers().iter().map(|q| q.exists.clone()).collect(),
        a.diag_matrix().to_vec(),
    )
}

/// Lattice from the derived order and lattice terms, diamonds as quantifiers,
/// diagonal unchanged.
pub fn cqia_to_qca(c: &CylindricQia) -> Result<QuantumCylindricAlgebra> {
    let report = check_cylindric_qia(c);
    if !report.passed() {
        return Err(Error::InvalidCqia(Box::new(report)));
    }
    QuantumCylindricAlgebra::new(
        qia_to_lattice(c.qia())?,
        c.diamonds().iter().cloned().map(QuantifierMap::new).collect(),
        c.diag_matrix().to_vec(),
    )
}

/// `π_s(π_s(x, y), x⊥)⊥ = x ∧ y` over all pairs.
pub fn check_useful_lemma(l: &FiniteOrtholattice) -> CheckReport {
    let s = move |x, y| implication(l, ImplicationKind::Sasaki, x, y);
    verify(&[Law::new("useful-lemma", elems(l.len(), 2), move |a| {
        let (x, y) = (a[0], a[1]);
        l.comp(s(s(x, y), l.comp(x))) == l.meet(x, y)
    })])
}

/// A total function between two finite carriers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomMap {
    pub source_size: usize,
    pub target_size: usize,
    pub map: Vec<usize>,
}

impl HomMap {
    pub fn new(source_size: usize, target_size: usize, map: Vec<usize>) -> Result<Self> {
        if map.len() != source_size {
            return Err(Error::malformed("map", format!("expected {source_size} entries")));
        }
        if map.iter().any(|&v| v >= target_size) {
            return Err(Error::malformed("map", "entry out of range"));
        }
        Ok(HomMap { source_size, target_size, map })
    }

    pub fn identity(n: usize) -> Self {
        HomMap { source_size: n, target_size: n, map: (0..n).collect() }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }
}

fn hom_shape(h: &HomMap, source: usize, target: usize) -> Result<()> {
    if h.source_size != source || h.target_size != target {
        return Err(Error::malformed(
            "map",
            format!("map is {}→{}, structures are {source}→{target}", h.source_size, h.target_size),
        ));
    }
    Ok(())
}

pub fn check_hom_qca(a: &QuantumCylindricAlgebra, b: &QuantumCylindricAlgebra, h: &HomMap) -> Result<CheckReport> {
    if a.dims() != b.dims() {
        return Err(Error::DimensionMismatch(a.dims(), b.dims()));
    }
    hom_shape(h, a.len(), b.len())?;
    let (la, lb) = (a.lattice(), b.lattice());
    let (n, d) = (a.len(), a.dims());
    Ok(verify(&[
        Law::new("1", elems(n, 2), move |v| h.apply(la.meet(v[0], v[1])) == lb.meet(h.apply(v[0]), h.apply(v[1]))),
        Law::new("2", elems(n, 2), move |v| h.apply(la.join(v[0], v[1])) == lb.join(h.apply(v[0]), h.apply(v[1]))),
        Law::new("3", elems(n, 1), move |v| h.apply(la.comp(v[0])) == lb.comp(h.apply(v[0]))),
        Law::new("4", vec![], move |_| h.apply(la.bot()) == lb.bot() && h.apply(la.top()) == lb.top()),
        Law::new("5", vec![Domain::Dim(d), Domain::Elem(n)], move |v| {
            h.apply(a.exists(v[0], v[1])) == b.exists(v[0], h.apply(v[1]))
        }),
        Law::new("6", vec![Domain::Dim(d); 2], move |v| h.apply(a.diag(v[0], v[1])) == b.diag(v[0], v[1])),
    ]))
}

pub fn check_hom_cqia(a: &CylindricQia, b: &CylindricQia, h: &HomMap) -> Result<CheckReport> {
    if a.dims() != b.dims() {
        return Err(Error::DimensionMismatch(a.dims(), b.dims()));
    }
    hom_shape(h, a.len(), b.len())?;
    let (n, d) = (a.len(), a.dims());
    Ok(verify(&[
        Law::new("1", elems(n, 2), move |v| h.apply(a.dot(v[0], v[1])) == b.dot(h.apply(v[0]), h.apply(v[1]))),
        Law::new("2", vec![Domain::Dim(d), Domain::Elem(n)], move |v| {
            h.apply(a.diamond(v[0], v[1])) == b.diamond(v[0], h.apply(v[1]))
        }),
        Law::new("3", vec![Domain::Dim(d); 2], move |v| h.apply(a.diag(v[0], v[1])) == b.diag(v[0], v[1])),
        Law::new("4", vec![], move |_| h.apply(a.zero()) == b.zero()),
    ]))
}
