//! Quasi-implication algebras given by their dot tables.

use crate::error::{Error, Result};
use crate::lattice::check_labels;
use crate::law::{elems, verify, Domain, Law};
use crate::report::CheckReport;

/// A finite magma `x·y`, optionally with a designated zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QiaTable {
    n: usize,
    dot: Vec<usize>,
    zero: Option<usize>,
    labels: Option<Vec<String>>,
}

impl QiaTable {
    pub fn new(dot: Vec<Vec<usize>>, zero: Option<usize>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = dot.len();
        if n == 0 {
            return Err(Error::malformed("dot", "empty carrier"));
        }
        if dot.iter().any(|r| r.len() != n) {
            return Err(Error::malformed("dot", format!("expected a {n}x{n} matrix")));
        }
        let dot: Vec<usize> = dot.into_iter().flatten().collect();
        if let Some(v) = dot.iter().find(|&&v| v >= n) {
            return Err(Error::malformed("dot", format!("entry {v} out of range 0..{n}")));
        }
        if zero.is_some_and(|z| z >= n) {
            return Err(Error::malformed("zero", "out of range"));
        }
        check_labels(&labels, n)?;
        Ok(QiaTable { n, dot, zero, labels })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn dot(&self, x: usize, y: usize) -> usize {
        self.dot[x * self.n + y]
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
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

    pub fn element(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn dot_matrix(&self) -> Vec<Vec<usize>> {
        self.dot.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    /// `0·0`, which is the unit whenever `x·x` is constant.
    fn nominal_unit(&self) -> usize {
        self.dot(0, 0)
    }

    fn z(&self) -> usize {
        self.zero.expect("bounded table")
    }

    // Lattice terms, valid on bounded tables.

    pub(crate) fn comp(&self, x: usize) -> usize {
        self.dot(x, self.z())
    }

    pub(crate) fn join(&self, x: usize, y: usize) -> usize {
        self.dot(self.dot(self.dot(x, y), self.dot(y, x)), x)
    }

    pub(crate) fn meet(&self, x: usize, y: usize) -> usize {
        let z = self.z();
        self.dot(self.dot(self.dot(x, y), self.dot(x, z)), z)
    }

    /// Join term of `x·0` and `y·0`, complemented.
    pub(crate) fn long_meet(&self, x: usize, y: usize) -> usize {
        let z = self.z();
        let (xc, yc) = (self.dot(x, z), self.dot(y, z));
        self.dot(self.dot(self.dot(self.dot(xc, yc), self.dot(yc, xc)), xc), z)
    }
}

/// The relation `x ⪯ y ⟺ x·y = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedOrder {
    n: usize,
    leq: Vec<bool>,
}

impl DerivedOrder {
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn matrix(&self) -> Vec<Vec<bool>> {
        self.leq.chunks(self.n).map(<[bool]>::to_vec).collect()
    }
}

pub fn qia_laws(q: &QiaTable) -> Vec<Law<'_>> {
    let n = q.len();
    let d = move |x, y| q.dot(x, y);
    let mut laws = vec![
        Law::new("1", elems(n, 2), move |a| {
            let (x, y) = (a[0], a[1]);
            d(d(x, y), x) == x
        }),
        Law::new("2", elems(n, 3), move |a| {
            let (x, y, z) = (a[0], a[1], a[2]);
            d(d(x, y), d(x, z)) == d(d(y, x), d(y, z))
        }),
        Law::new("3", elems(n, 2), move |a| {
            let (x, y) = (a[0], a[1]);
            d(d(d(x, y), d(y, x)), x) == d(d(d(y, x), d(x, y)), y)
        }),
    ];
    if let Some(z) = q.zero() {
        laws.push(Law::new("bottom", elems(n, 1), move |a| d(z, a[0]) == d(a[0], a[0])));
    }
    laws
}

pub fn check_qia(q: &QiaTable) -> CheckReport {
    verify(&qia_laws(q))
}

fn derived_identity_laws(q: &QiaTable, one: usize) -> Vec<Law<'_>> {
    let n = q.len();
    let d = move |x, y| q.dot(x, y);
    vec![
        Law::new("lemma.1", elems(n, 2), move |a| d(a[0], d(a[0], a[1])) == d(a[0], a[1])),
        Law::new("lemma.2", elems(n, 2), move |a| {
            let xy = d(a[0], a[1]);
            d(a[0], a[0]) == d(xy, xy)
        }),
        Law::new("lemma.3", elems(n, 2), move |a| d(a[0], a[0]) == d(a[1], a[1])),
        Law::new("lemma.4", elems(n, 3), move |a| {
            let (x, y, z) = (a[0], a[1], a[2]);
            d(d(x, y), d(x, z)) == d(x, d(d(x, y), z))
        }),
        Law::new("unit.left", elems(n, 1), move |a| d(one, a[0]) == a[0]),
        Law::new("unit.right", elems(n, 1), move |a| d(a[0], one) == one),
        Law::new("left-monotone", elems(n, 3), move |a| {
            let (x, y, z) = (a[0], a[1], a[2]);
            d(y, z) != one || d(d(x, y), d(x, z)) == one
        }),
    ]
}

/// Identities that follow from the axioms. A failure on a table that passes
/// [`check_qia`] is reported as [`Error::TheoremViolation`].
pub fn check_derived_identities(q: &QiaTable) -> Result<CheckReport> {
    if !check_qia(q).passed() {
        return Err(Error::PreconditionFailed("table is not a quasi-implication algebra"));
    }
    let one = unit_of(q)?;
    let report = verify(&derived_identity_laws(q, one));
    if !report.passed() {
        return Err(Error::TheoremViolation(Box::new(report)));
    }
    Ok(report)
}

/// The constant `x·x`.
pub fn unit_of(q: &QiaTable) -> Result<usize> {
    let one = q.dot(0, 0);
    match (1..q.len()).find(|&x| q.dot(x, x) != one) {
        Some(x) => Err(Error::NotConstant(0, one, x, q.dot(x, x))),
        None => Ok(one),
    }
}

pub fn derived_order(q: &QiaTable) -> Result<DerivedOrder> {
    let n = q.len();
    let one = unit_of(q)?;
    let leq: Vec<bool> = (0..n * n).map(|i| q.dot(i / n, i % n) == one).collect();
    let order = DerivedOrder { n, leq };
    for x in 0..n {
        if !order.leq(x, x) {
            return Err(Error::OrderLawViolation(format!("not reflexive at {x}")));
        }
        if !order.leq(x, one) {
            return Err(Error::OrderLawViolation(format!("{x} is not below the unit")));
        }
        if let Some(z) = q.zero() {
            if !order.leq(z, x) {
                return Err(Error::OrderLawViolation(format!("zero is not below {x}")));
            }
        }
        for y in 0..n {
            if x != y && order.leq(x, y) && order.leq(y, x) {
                return Err(Error::OrderLawViolation(format!("not antisymmetric at ({x}, {y})")));
            }
            for z in 0..n {
                if order.leq(x, y) && order.leq(y, z) && !order.leq(x, z) {
                    return Err(Error::OrderLawViolation(format!("not transitive at ({x}, {y}, {z})")));
                }
            }
        }
    }
    Ok(order)
}

/// Orthocomplement `x·0`.
pub fn qia_comp(q: &QiaTable, x: usize) -> Result<usize> {
    q.zero().ok_or(Error::Unbounded)?;
    Ok(q.comp(x))
}

/// Least upper bound `((x·y)·(y·x))·x`.
pub fn qia_join(q: &QiaTable, x: usize, y: usize) -> Result<usize> {
    q.zero().ok_or(Error::Unbounded)?;
    Ok(q.join(x, y))
}

/// Greatest lower bound `((x·y)·(x·0))·0`.
pub fn qia_meet(q: &QiaTable, x: usize, y: usize) -> Result<usize> {
    q.zero().ok_or(Error::Unbounded)?;
    Ok(q.meet(x, y))
}

/// The longer meet term `(((x·0)·(y·0))·((y·0)·(x·0)))·(x·0)` followed by `·0`.
pub fn qia_long_meet(q: &QiaTable, x: usize, y: usize) -> Result<usize> {
    q.zero().ok_or(Error::Unbounded)?;
    Ok(q.long_meet(x, y))
}

/// Diamond laws for one or (with a leading dimension variable) several
/// diamonds.
fn diamond_laws<'a>(q: &'a QiaTable, ds: &'a [Vec<usize>], indexed: bool) -> Vec<Law<'a>> {
    let n = q.len();
    let z = q.z();
    let one = q.nominal_unit();
    let dom = move |k: usize| {
        let mut v = if indexed { vec![Domain::Dim(ds.len())] } else { vec![] };
        v.extend(elems(n, k));
        v
    };
    let dia = move |a: &[usize]| -> &'a [usize] { if indexed { &ds[a[0]] } else { &ds[0] } };
    let off = usize::from(indexed);
    let d = move |x, y| q.dot(x, y);
    vec![
        Law::new("2(a).1", dom(1), move |a| {
            let (m, x) = (dia(a), a[off]);
            d(m[m[x]], m[x]) == one
        }),
        Law::new("2(a).2", dom(1), move |a| {
            let (m, x) = (dia(a), a[off]);
            d(x, m[x]) == one
        }),
        Law::new("2(b).1", dom(1), move |a| {
            let (m, x) = (dia(a), a[off]);
            m[d(m[x], z)] == d(m[x], z)
        }),
        Law::new("2(b).2", dom(0), move |a| dia(a)[z] == z),
        Law::new("2(c)", dom(2), move |a| {
            let (m, x, y) = (dia(a), a[off], a[off + 1]);
            m[d(d(d(x, z), d(y, z)), x)] == d(d(d(m[x], z), d(m[y], z)), m[x])
        }),
        Law::new("derived.idempotent", dom(1), move |a| {
            let (m, x) = (dia(a), a[off]);
            m[m[x]] == m[x]
        }),
        Law::new("derived.monotone", dom(2), move |a| {
            let (m, x, y) = (dia(a), a[off], a[off + 1]);
            d(x, y) != one || d(m[x], m[y]) == one
        }),
    ]
}

fn diamond_in_range(q: &QiaTable, diamond: &[usize]) -> bool {
    diamond.len() == q.len() && diamond.iter().all(|&v| v < q.len())
}

/// Monadic axioms as written, plus idempotence and monotonicity recorded
/// under `derived.*`.
pub fn check_monadic_qia(q: &QiaTable, diamond: &[usize]) -> CheckReport {
    let mut report = check_qia(q);
    if q.zero().is_none() {
        report.push("bounded", vec![]);
        return report;
    }
    if !diamond_in_range(q, diamond) {
        report.push("table", vec![]);
        return report;
    }
    report.absorb("", verify(&diamond_laws(q, std::slice::from_ref(&diamond.to_vec()), false)));
    report
}

/// A bounded QIA with diamonds `◇_i` and diagonal constants `d_{i,k}`,
/// dimensions `0..d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CylindricQia {
    qia: QiaTable,
    diamonds: Vec<Vec<usize>>,
    diag: Vec<Vec<usize>>,
}

impl CylindricQia {
    pub fn new(qia: QiaTable, diamonds: Vec<Vec<usize>>, diag: Vec<Vec<usize>>) -> Result<Self> {
        if qia.zero().is_none() {
            return Err(Error::Unbounded);
        }
        let (n, d) = (qia.len(), diamonds.len());
        if let Some(i) = (0..d).find(|&i| !diamond_in_range(&qia, &diamonds[i])) {
            return Err(Error::malformed("diamonds", format!("diamond {i} is not a map on 0..{n}")));
        }
        if diag.len() != d || diag.iter().any(|r| r.len() != d) {
            return Err(Error::malformed("diag", format!("expected a {d}x{d} matrix")));
        }
        if let Some(v) = diag.iter().flatten().find(|&&v| v >= n) {
            return Err(Error::malformed("diag", format!("entry {v} out of range")));
        }
        Ok(CylindricQia { qia, diamonds, diag })
    }

    pub fn qia(&self) -> &QiaTable {
        &self.qia
    }

    pub fn len(&self) -> usize {
        self.qia.len()
    }

    pub fn is_empty(&self) -> bool {
        self.qia.is_empty()
    }

    pub fn dims(&self) -> usize {
        self.diamonds.len()
    }

    pub fn zero(&self) -> usize {
        self.qia.z()
    }

    #[inline]
    pub fn dot(&self, x: usize, y: usize) -> usize {
        self.qia.dot(x, y)
    }

    #[inline]
    pub fn diamond(&self, i: usize, x: usize) -> usize {
        self.diamonds[i][x]
    }

    pub fn diamonds(&self) -> &[Vec<usize>] {
        &self.diamonds
    }

    #[inline]
    pub fn diag(&self, i: usize, k: usize) -> usize {
        self.diag[i][k]
    }

    pub fn diag_matrix(&self) -> &[Vec<usize>] {
        &self.diag
    }

    pub fn with_diag(&self, diag: Vec<Vec<usize>>) -> Result<Self> {
        CylindricQia::new(self.qia.clone(), self.diamonds.clone(), diag)
    }

    /// Meet term `((x·y)·(x·0))·0`.
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.qia.meet(x, y)
    }

    pub fn unit(&self) -> usize {
        self.qia.nominal_unit()
    }
}

pub fn cylindric_qia_laws(c: &CylindricQia) -> Vec<Law<'_>> {
    let (n, d) = (c.len(), c.dims());
    let z = c.zero();
    let one = c.unit();
    vec![
        Law::new("2", vec![Domain::Dim(d), Domain::Dim(d), Domain::Elem(n)], move |a| {
            let (i, k, x) = (a[0], a[1], a[2]);
            c.diamond(i, c.diamond(k, x)) == c.diamond(k, c.diamond(i, x))
        }),
        Law::new("3", vec![Domain::Dim(d); 2], move |a| {
            let (i, k) = (a[0], a[1]);
            c.diag(i, k) == c.diag(k, i) && (i != k || c.diag(i, i) == one)
        }),
        Law::new("4", vec![Domain::Dim(d); 3], move |a| {
            let (i, k, l) = (a[0], a[1], a[2]);
            if i == k || l == k {
                return true;
            }
            let (dik, dkl) = (c.diag(i, k), c.diag(k, l));
            let term = c.dot(c.dot(c.dot(dik, dkl), c.dot(dik, z)), z);
            c.diamond(k, term) == c.diag(i, l)
        }),
    ]
}

/// QIA axioms, the monadic axioms for every diamond, commutation and the
/// diagonal conditions.
pub fn check_cylindric_qia(c: &CylindricQia) -> CheckReport {
    let mut report = CheckReport::default();
    report.absorb("qia", check_qia(c.qia()));
    report.absorb("diamond", verify(&diamond_laws(c.qia(), c.diamonds(), true)));
    report.absorb("", verify(&cylindric_qia_laws(c)));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{boolean_algebra, mo};
    use crate::limits::Limits;
    use crate::transforms::{sasaki_table, ImplicationKind};

    fn b1() -> QiaTable {
        sasaki_table(&boolean_algebra(1, &Limits::default()).unwrap())
    }

    fn mo2() -> QiaTable {
        sasaki_table(&mo(2).unwrap())
    }

    #[test]
    fn boolean_implication_table() {
        let q = b1();
        assert_eq!(q.dot_matrix(), vec![vec![1, 1], vec![0, 1]]);
        assert!(check_qia(&q).passed());
        assert_eq!(ImplicationKind::ALL.len(), 4);
    }

    #[test]
    fn mo2_sasaki_is_qia() {
        assert!(check_qia(&mo2()).passed());
        assert!(check_derived_identities(&mo2()).unwrap().passed());
        assert!(check_derived_identities(&b1()).unwrap().passed());
    }

    #[test]
    fn constant_magma_fails_axiom_one() {
        let q = QiaTable::new(vec![vec![0, 0], vec![0, 0]], None, None).unwrap();
        let r = check_qia(&q);
        assert_eq!(r.witness("1"), Some(vec![1, 0]));
        assert!(matches!(check_derived_identities(&q), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn units() {
        assert_eq!(unit_of(&b1()).unwrap(), 1);
        let q = mo2();
        assert_eq!(unit_of(&q).unwrap(), q.element("1").unwrap());
        let one = QiaTable::new(vec![vec![0]], Some(0), None).unwrap();
        assert_eq!(unit_of(&one).unwrap(), 0);
        let bad = QiaTable::new(vec![vec![1, 0], vec![0, 0]], None, None).unwrap();
        assert!(matches!(unit_of(&bad), Err(Error::NotConstant(0, 1, 1, 0))));
    }

    #[test]
    fn orders() {
        let o = derived_order(&b1()).unwrap();
        assert!(o.leq(0, 1) && !o.leq(1, 0));
        let q = mo2();
        let o = derived_order(&q).unwrap();
        let (a, b, top) = (q.element("a").unwrap(), q.element("b").unwrap(), q.element("1").unwrap());
        assert!(o.leq(a, top));
        assert!(!o.leq(a, b) && !o.leq(b, a));
        assert_eq!(q.dot(a, b), q.element("a'").unwrap());
        for x in 0..q.len() {
            assert_eq!(o.leq(top, x), x == top);
        }
    }

    #[test]
    fn lattice_terms() {
        let q = b1();
        assert_eq!(qia_comp(&q, 1).unwrap(), 0);
        assert_eq!(qia_comp(&q, 0).unwrap(), 1);
        let q = mo2();
        let (a, b) = (q.element("a").unwrap(), q.element("b").unwrap());
        let (zero, top) = (q.element("0").unwrap(), q.element("1").unwrap());
        assert_eq!(qia_join(&q, a, b).unwrap(), top);
        assert_eq!(qia_meet(&q, a, b).unwrap(), zero);
        for x in 0..q.len() {
            assert_eq!(qia_meet(&q, x, top).unwrap(), x);
        }
        let unbounded = QiaTable::new(q.dot_matrix(), None, None).unwrap();
        assert!(matches!(qia_meet(&unbounded, a, b), Err(Error::Unbounded)));
    }

    #[test]
    fn monadic_examples() {
        let q = b1();
        assert!(check_monadic_qia(&q, &[0, 1]).passed());
        let q = mo2();
        let simple: Vec<usize> = (0..6).map(|x| if x == 0 { 0 } else { 5 }).collect();
        assert!(check_monadic_qia(&q, &simple).passed());
        let mut bad = simple.clone();
        bad[0] = 5;
        let r = check_monadic_qia(&q, &bad);
        assert!(r.violation("2(b).2").is_some());
        let unbounded = QiaTable::new(q.dot_matrix(), None, None).unwrap();
        assert!(check_monadic_qia(&unbounded, &simple).violation("bounded").is_some());
    }

    #[test]
    fn cylindric_requires_zero() {
        let q = QiaTable::new(mo2().dot_matrix(), None, None).unwrap();
        assert!(matches!(CylindricQia::new(q, vec![], vec![]), Err(Error::Unbounded)));
    }
}
