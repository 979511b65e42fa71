//! Finite ortholattices as explicit tables.

use crate::error::{Error, Result};
use crate::law::{elems, verify, Law};
use crate::report::CheckReport;

/// A finite bounded lattice with an orthocomplement, elements `0..n`.
///
/// The order is the source of truth; `meet` and `join` are either derived
/// from it ([`FiniteOrtholattice::from_order`]) or supplied and then
/// revalidated by [`check_ortholattice`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteOrtholattice {
    n: usize,
    leq: Vec<bool>,
    meet: Vec<usize>,
    join: Vec<usize>,
    ocomp: Vec<usize>,
    bot: usize,
    top: usize,
    labels: Option<Vec<String>>,
}

fn check_square<T>(field: &'static str, rows: &[Vec<T>], n: usize) -> Result<()> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::malformed(field, format!("expected a {n}x{n} matrix")));
    }
    Ok(())
}

fn check_range(field: &'static str, values: &[usize], n: usize) -> Result<()> {
    if let Some((i, v)) = values.iter().enumerate().find(|(_, &v)| v >= n) {
        return Err(Error::malformed(field, format!("entry {i} is {v}, out of range 0..{n}")));
    }
    Ok(())
}

pub(crate) fn check_labels(labels: &Option<Vec<String>>, n: usize) -> Result<()> {
    match labels {
        Some(l) if l.len() != n => {
            Err(Error::malformed("labels", format!("expected {n} labels, found {}", l.len())))
        }
        _ => Ok(()),
    }
}

impl FiniteOrtholattice {
    /// Builds the lattice from its order and complement, deriving meet, join
    /// and the bounds.
    pub fn from_order(
        leq: Vec<Vec<bool>>,
        ocomp: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let n = leq.len();
        check_square("leq", &leq, n)?;
        if ocomp.len() != n {
            return Err(Error::malformed("ocomp", format!("expected {n} entries")));
        }
        check_range("ocomp", &ocomp, n)?;
        check_labels(&labels, n)?;
        if n == 0 {
            return Err(Error::NotALattice("empty carrier".into()));
        }
        let flat: Vec<bool> = leq.into_iter().flatten().collect();
        let le = |x: usize, y: usize| flat[x * n + y];
        for x in 0..n {
            if !le(x, x) {
                return Err(Error::NotALattice(format!("not reflexive at {x}")));
            }
            for y in 0..n {
                if x != y && le(x, y) && le(y, x) {
                    return Err(Error::NotALattice(format!("not antisymmetric at ({x}, {y})")));
                }
                for z in 0..n {
                    if le(x, y) && le(y, z) && !le(x, z) {
                        return Err(Error::NotALattice(format!(
                            "not transitive at ({x}, {y}, {z})"
                        )));
                    }
                }
            }
        }
        let bot = (0..n)
            .find(|&b| (0..n).all(|x| le(b, x)))
            .ok_or_else(|| Error::NotALattice("no least element".into()))?;
        let top = (0..n)
            .find(|&t| (0..n).all(|x| le(x, t)))
            .ok_or_else(|| Error::NotALattice("no greatest element".into()))?;
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let lower: Vec<usize> = (0..n).filter(|&z| le(z, x) && le(z, y)).collect();
                meet[x * n + y] = *lower
                    .iter()
                    .find(|&&g| lower.iter().all(|&z| le(z, g)))
                    .ok_or_else(|| Error::NotALattice(format!("no meet of ({x}, {y})")))?;
                let upper: Vec<usize> = (0..n).filter(|&z| le(x, z) && le(y, z)).collect();
                join[x * n + y] = *upper
                    .iter()
                    .find(|&&l| upper.iter().all(|&z| le(l, z)))
                    .ok_or_else(|| Error::NotALattice(format!("no join of ({x}, {y})")))?;
            }
        }
        Ok(FiniteOrtholattice { n, leq: flat, meet, join, ocomp, bot, top, labels })
    }

    /// Builds the structure from explicit tables, validating only shapes and
    /// index ranges. Use [`check_ortholattice`] to validate the algebra.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        leq: Vec<Vec<bool>>,
        meet: Vec<Vec<usize>>,
        join: Vec<Vec<usize>>,
        ocomp: Vec<usize>,
        bot: usize,
        top: usize,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let n = leq.len();
        check_square("leq", &leq, n)?;
        check_square("meet", &meet, n)?;
        check_square("join", &join, n)?;
        let meet: Vec<usize> = meet.into_iter().flatten().collect();
        let join: Vec<usize> = join.into_iter().flatten().collect();
        check_range("meet", &meet, n)?;
        check_range("join", &join, n)?;
        if ocomp.len() != n {
            return Err(Error::malformed("ocomp", format!("expected {n} entries")));
        }
        check_range("ocomp", &ocomp, n)?;
        check_range("bot", &[bot], n)?;
        check_range("top", &[top], n)?;
        check_labels(&labels, n)?;
        let leq = leq.into_iter().flatten().collect();
        Ok(FiniteOrtholattice { n, leq, meet, join, ocomp, bot, top, labels })
    }

    /// Replaces the orthocomplement, keeping the order.
    pub fn with_ocomp(&self, ocomp: Vec<usize>) -> Result<Self> {
        if ocomp.len() != self.n {
            return Err(Error::malformed("ocomp", format!("expected {} entries", self.n)));
        }
        check_range("ocomp", &ocomp, self.n)?;
        Ok(FiniteOrtholattice { ocomp, ..self.clone() })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.n + y]
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.n + y]
    }

    #[inline]
    pub fn comp(&self, x: usize) -> usize {
        self.ocomp[x]
    }

    pub fn bot(&self) -> usize {
        self.bot
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn ocomp(&self) -> &[usize] {
        &self.ocomp
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// Index of the element carrying `label`.
    pub fn element(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn leq_matrix(&self) -> Vec<Vec<bool>> {
        self.leq.chunks(self.n).map(<[bool]>::to_vec).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }
}

/// Partial order, bound and orthocomplement laws.
pub fn ortholattice_laws(l: &FiniteOrtholattice) -> Vec<Law<'_>> {
    let n = l.len();
    vec![
        Law::new("po.reflexive", elems(n, 1), move |a| l.leq(a[0], a[0])),
        Law::new("po.antisymmetric", elems(n, 2), move |a| {
            !(l.leq(a[0], a[1]) && l.leq(a[1], a[0])) || a[0] == a[1]
        }),
        Law::new("po.transitive", elems(n, 3), move |a| {
            !(l.leq(a[0], a[1]) && l.leq(a[1], a[2])) || l.leq(a[0], a[2])
        }),
        Law::new("bound.bot", elems(n, 1), move |a| l.leq(l.bot(), a[0])),
        Law::new("bound.top", elems(n, 1), move |a| l.leq(a[0], l.top())),
        Law::new("2(a).meet", elems(n, 1), move |a| l.meet(a[0], l.comp(a[0])) == l.bot()),
        Law::new("2(a).join", elems(n, 1), move |a| l.join(a[0], l.comp(a[0])) == l.top()),
        Law::new("2(b)", elems(n, 2), move |a| {
            !l.leq(a[0], a[1]) || l.leq(l.comp(a[1]), l.comp(a[0]))
        }),
        Law::new("2(c)", elems(n, 1), move |a| l.comp(l.comp(a[0])) == a[0]),
    ]
}

/// Meet and join tables agree with the order: `meet[x][y]` is the greatest
/// lower bound of `{x, y}` and `join[x][y]` the least upper bound.
fn tables_match_order(l: &FiniteOrtholattice) -> Result<()> {
    let n = l.len();
    for x in 0..n {
        for y in 0..n {
            let m = l.meet(x, y);
            let glb = l.leq(m, x)
                && l.leq(m, y)
                && (0..n).all(|z| !(l.leq(z, x) && l.leq(z, y)) || l.leq(z, m));
            if !glb {
                return Err(Error::malformed(
                    "meet",
                    format!("meet[{x}][{y}] = {m} is not the greatest lower bound"),
                ));
            }
            let j = l.join(x, y);
            let lub = l.leq(x, j)
                && l.leq(y, j)
                && (0..n).all(|z| !(l.leq(x, z) && l.leq(y, z)) || l.leq(j, z));
            if !lub {
                return Err(Error::malformed(
                    "join",
                    format!("join[{x}][{y}] = {j} is not the least upper bound"),
                ));
            }
        }
    }
    Ok(())
}

pub fn check_ortholattice(l: &FiniteOrtholattice) -> Result<CheckReport> {
    let laws = ortholattice_laws(l);
    let order = verify(&laws[..5]);
    if !order.passed() {
        // meet/join correctness is meaningless without a bounded order
        return Ok(order);
    }
    tables_match_order(l)?;
    Ok(verify(&laws))
}

/// The quasi-equation `x ≤ y ⇒ y = x ∨ (x⊥ ∧ y)`.
pub fn orthomodular_quasi_law(l: &FiniteOrtholattice) -> Law<'_> {
    Law::new("oml", elems(l.len(), 2), move |a| {
        let (x, y) = (a[0], a[1]);
        !l.leq(x, y) || y == l.join(x, l.meet(l.comp(x), y))
    })
}

/// The equational form `x ∨ y = x ∨ (x⊥ ∧ (x ∨ y))`.
pub fn orthomodular_equational_law(l: &FiniteOrtholattice) -> Law<'_> {
    Law::new("oml.equational", elems(l.len(), 2), move |a| {
        let (x, y) = (a[0], a[1]);
        let xy = l.join(x, y);
        xy == l.join(x, l.meet(l.comp(x), xy))
    })
}

/// Checks orthomodularity twice, once per formulation, and insists both
/// verdicts agree. The report carries the first witness of each form.
pub fn check_orthomodular(l: &FiniteOrtholattice) -> Result<CheckReport> {
    let ol = check_ortholattice(l)?;
    if !ol.passed() {
        return Err(Error::NotOrtholattice(Box::new(ol)));
    }
    let report = verify(&[orthomodular_quasi_law(l), orthomodular_equational_law(l)]);
    let quasi = report.violation("oml").is_none();
    let equational = report.violation("oml.equational").is_none();
    if quasi != equational {
        return Err(Error::InternalInconsistency { quasi, equational });
    }
    Ok(report)
}

pub fn is_orthomodular(l: &FiniteOrtholattice) -> bool {
    matches!(check_orthomodular(l), Ok(r) if r.passed())
}

/// `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)`.
pub fn check_distributive(l: &FiniteOrtholattice) -> CheckReport {
    verify(&[Law::new("distributive", elems(l.len(), 3), move |a| {
        let (x, y, z) = (a[0], a[1], a[2]);
        l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z))
    })])
}
