//! Quantifiers and quantum cylindric algebras.

use crate::error::{Error, Result};
use crate::lattice::{
    check_ortholattice, orthomodular_equational_law, orthomodular_quasi_law, FiniteOrtholattice,
};
use crate::law::{elems, verify, Domain, Law};
use crate::report::CheckReport;

/// An `x ↦ ∃x` table over a host lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantifierMap {
    pub exists: Vec<usize>,
}

impl QuantifierMap {
    pub fn new(exists: Vec<usize>) -> Self {
        QuantifierMap { exists }
    }

    pub fn identity(n: usize) -> Self {
        QuantifierMap { exists: (0..n).collect() }
    }

    /// `∃0 = 0`, `∃x = 1` otherwise.
    pub fn simple(l: &FiniteOrtholattice) -> Self {
        QuantifierMap {
            exists: l.elements().map(|x| if x == l.bot() { l.bot() } else { l.top() }).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.exists[x]
    }
}

/// A finite quantum cylindric algebra with dimensions `0..d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumCylindricAlgebra {
    lattice: FiniteOrtholattice,
    quantifiers: Vec<QuantifierMap>,
    diag: Vec<Vec<usize>>,
}

impl QuantumCylindricAlgebra {
    /// Shape-checks the tables; the axioms are left to [`check_qca`].
    pub fn new(
        lattice: FiniteOrtholattice,
        quantifiers: Vec<QuantifierMap>,
        diag: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = lattice.len();
        let d = quantifiers.len();
        for (i, q) in quantifiers.iter().enumerate() {
            if q.exists.len() != n {
                return Err(Error::malformed("exists", format!("quantifier {i} has {} entries, expected {n}", q.exists.len())));
            }
            if let Some(v) = q.exists.iter().find(|&&v| v >= n) {
                return Err(Error::malformed("exists", format!("quantifier {i} maps to {v}, out of range")));
            }
        }
        if diag.len() != d || diag.iter().any(|r| r.len() != d) {
            return Err(Error::malformed("diag", format!("expected a {d}x{d} matrix")));
        }
        if let Some(v) = diag.iter().flatten().find(|&&v| v >= n) {
            return Err(Error::malformed("diag", format!("entry {v} out of range")));
        }
        Ok(QuantumCylindricAlgebra { lattice, quantifiers, diag })
    }

    pub fn lattice(&self) -> &FiniteOrtholattice {
        &self.lattice
    }

    pub fn dims(&self) -> usize {
        self.quantifiers.len()
    }

    pub fn quantifiers(&self) -> &[QuantifierMap] {
        &self.quantifiers
    }

    #[inline]
    pub fn exists(&self, i: usize, x: usize) -> usize {
        self.quantifiers[i].apply(x)
    }

    #[inline]
    pub fn diag(&self, i: usize, k: usize) -> usize {
        self.diag[i][k]
    }

    pub fn diag_matrix(&self) -> &[Vec<usize>] {
        &self.diag
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    pub fn with_diag(&self, diag: Vec<Vec<usize>>) -> Result<Self> {
        QuantumCylindricAlgebra::new(self.lattice.clone(), self.quantifiers.clone(), diag)
    }
}

/// The five quantifier laws. When `qs` has several maps a leading dimension
/// variable selects the quantifier; with `indexed = false` only `qs[0]` is
/// used and witnesses are element tuples.
fn quantifier_laws<'a>(l: &'a FiniteOrtholattice, qs: &'a [QuantifierMap], indexed: bool) -> Vec<Law<'a>> {
    let n = l.len();
    let dom = |k: usize| {
        let mut d = if indexed { vec![Domain::Dim(qs.len())] } else { vec![] };
        d.extend(elems(n, k));
        d
    };
    let q = move |a: &[usize]| if indexed { &qs[a[0]] } else { &qs[0] };
    let off = usize::from(indexed);
    vec![
        Law::new("2(a)", dom(0), move |a| q(a).apply(l.bot()) == l.bot()),
        Law::new("2(b)", dom(1), move |a| {
            let x = a[off];
            l.leq(x, q(a).apply(x))
        }),
        Law::new("2(c)", dom(2), move |a| {
            let (e, x, y) = (q(a), a[off], a[off + 1]);
            e.apply(l.join(x, y)) == l.join(e.apply(x), e.apply(y))
        }),
        Law::new("2(d)", dom(1), move |a| {
            let (e, x) = (q(a), a[off]);
            e.apply(e.apply(x)) == e.apply(x)
        }),
        Law::new("2(e)", dom(1), move |a| {
            let (e, x) = (q(a), a[off]);
            let c = l.comp(e.apply(x));
            e.apply(c) == c
        }),
    ]
}

pub fn check_quantifier(l: &FiniteOrtholattice, q: &QuantifierMap) -> CheckReport {
    let n = l.len();
    let mut report = CheckReport::default();
    if q.exists.len() != n || q.exists.iter().any(|&v| v >= n) {
        report.push("table", vec![]);
        return report;
    }
    let qs = std::slice::from_ref(q);
    verify(&quantifier_laws(l, qs, false))
}

/// Commutation and diagonal laws.
pub fn cylindric_laws(a: &QuantumCylindricAlgebra) -> Vec<Law<'_>> {
    let (n, d) = (a.len(), a.dims());
    let l = a.lattice();
    vec![
        Law::new("3", vec![Domain::Dim(d), Domain::Dim(d), Domain::Elem(n)], move |v| {
            let (i, k, x) = (v[0], v[1], v[2]);
            a.exists(i, a.exists(k, x)) == a.exists(k, a.exists(i, x))
        }),
        Law::new("4(a)", vec![Domain::Dim(d); 2], move |v| {
            let (i, k) = (v[0], v[1]);
            a.diag(i, k) == a.diag(k, i) && (i != k || a.diag(i, i) == l.top())
        }),
        Law::new("4(b)", vec![Domain::Dim(d); 3], move |v| {
            let (i, k, m) = (v[0], v[1], v[2]);
            i == k || m == k || a.exists(k, l.meet(a.diag(i, k), a.diag(k, m))) == a.diag(i, m)
        }),
    ]
}

/// Orthomodularity, every quantifier, commutation and the diagonal laws.
pub fn check_qca(a: &QuantumCylindricAlgebra) -> CheckReport {
    let l = a.lattice();
    let mut report = CheckReport::default();
    match check_ortholattice(l) {
        Ok(ol) if ol.passed() => {
            report.absorb("", verify(&[orthomodular_quasi_law(l), orthomodular_equational_law(l)]));
        }
        Ok(ol) => report.absorb("ol", ol),
        Err(_) => report.push("ol.tables", vec![]),
    }
    report.absorb("exists", verify(&quantifier_laws(l, a.quantifiers(), true)));
    report.absorb("", verify(&cylindric_laws(a)));
    report
}
