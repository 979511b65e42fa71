//! Known finite instances: Boolean algebras, the MO_m family, the hexagon O6,
//! cylindric set algebras and QCAs with simple quantifiers.

use crate::error::{Error, Result};
use crate::lattice::{check_orthomodular, FiniteOrtholattice};
use crate::limits::Limits;
use crate::qca::{QuantifierMap, QuantumCylindricAlgebra};

fn letter(j: usize) -> String {
    if j < 26 {
        char::from(b'a' + j as u8).to_string()
    } else {
        format!("x{j}")
    }
}

fn cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        return Err(Error::TooLarge { what, size, cap });
    }
    Ok(())
}

/// Powerset lattice of a set of `k` atoms; element `m` is the bitmask `m`.
pub fn boolean_algebra(k: u32, limits: &Limits) -> Result<FiniteOrtholattice> {
    let n = 1usize.checked_shl(k).filter(|&n| k < usize::BITS && n > 0).unwrap_or(usize::MAX);
    cap("boolean algebra", n, limits.max_elems)?;
    Ok(powerset(n, |m| {
        if m == 0 {
            "0".to_string()
        } else if m == n - 1 {
            "1".to_string()
        } else {
            (0..k as usize).filter(|b| m >> b & 1 == 1).map(letter).collect()
        }
    }))
}

fn powerset(n: usize, label: impl Fn(usize) -> String) -> FiniteOrtholattice {
    let full = n - 1;
    let leq = (0..n).map(|x| (0..n).map(|y| x & !y == 0).collect()).collect();
    let meet = (0..n).map(|x| (0..n).map(|y| x & y).collect()).collect();
    let join = (0..n).map(|x| (0..n).map(|y| x | y).collect()).collect();
    let ocomp = (0..n).map(|x| full & !x).collect();
    let labels = (0..n).map(label).collect();
    FiniteOrtholattice::from_parts(leq, meet, join, ocomp, 0, full, Some(labels))
        .expect("powerset tables are well-formed")
}

/// The "Chinese lantern" MO_m: `0 < a_j, a_j⊥ < 1` for `j < m`.
///
/// Element order is `0, a, a', b, b', …, 1`.
pub fn mo(m: usize) -> Result<FiniteOrtholattice> {
    if m == 0 {
        return Err(Error::PreconditionFailed("mo requires at least one atom pair"));
    }
    let n = 2 * m + 2;
    let top = n - 1;
    let leq = (0..n)
        .map(|x| (0..n).map(|y| x == y || x == 0 || y == top).collect())
        .collect();
    let ocomp = (0..n)
        .map(|x| match x {
            0 => top,
            x if x == top => 0,
            x if x % 2 == 1 => x + 1,
            x => x - 1,
        })
        .collect();
    let mut labels = vec!["0".to_string()];
    for j in 0..m {
        labels.push(letter(j));
        labels.push(format!("{}'", letter(j)));
    }
    labels.push("1".to_string());
    FiniteOrtholattice::from_order(leq, ocomp, Some(labels))
}

/// The benzene ring: chains `0 < a < b < 1` and `0 < b' < a' < 1`.
pub fn o6() -> FiniteOrtholattice {
    let labels: Vec<String> = ["0", "a", "b", "b'", "a'", "1"].iter().map(|s| s.to_string()).collect();
    let up: [&[usize]; 6] = [&[0, 1, 2, 3, 4, 5], &[1, 2, 5], &[2, 5], &[3, 4, 5], &[4, 5], &[5]];
    let leq = up.iter().map(|row| (0..6).map(|y| row.contains(&y)).collect()).collect();
    FiniteOrtholattice::from_order(leq, vec![5, 4, 3, 2, 1, 0], Some(labels))
        .expect("hexagon is a lattice")
}

/// Cylindric set algebra on the powerset of `u^d`.
///
/// A point `f` is encoded in base `u` with coordinate 0 most significant, and
/// element `m` is the set of points whose bit is set in `m`.
pub fn cylindric_set_algebra(u: usize, d: usize, limits: &Limits) -> Result<QuantumCylindricAlgebra> {
    if u == 0 {
        return Err(Error::PreconditionFailed("base set must be nonempty"));
    }
    let points = u
        .checked_pow(d as u32)
        .filter(|&p| p <= limits.max_points)
        .ok_or(Error::TooLarge { what: "function space", size: usize::MAX, cap: limits.max_points })?;
    let n = 1usize << points;
    cap("cylindric set algebra", n, limits.max_elems)?;
    let coords = |p: usize| -> Vec<usize> {
        (0..d).map(|i| p / u.pow((d - 1 - i) as u32) % u).collect()
    };
    let digit = |c: usize| std::char::from_digit(c as u32, 36).unwrap_or('?');
    let lattice = powerset(n, |m| {
        let pts: Vec<String> = (0..points)
            .filter(|p| m >> p & 1 == 1)
            .map(|p| coords(p).into_iter().map(digit).collect())
            .collect();
        format!("{{{}}}", pts.join(","))
    });
    let point_sets: Vec<Vec<usize>> = (0..points).map(coords).collect();
    let quantifiers = (0..d)
        .map(|i| {
            // ∃_i S = points agreeing with some member of S off coordinate i
            let cyl: Vec<usize> = (0..points)
                .map(|p| {
                    (0..points)
                        .filter(|&q| (0..d).all(|j| j == i || point_sets[p][j] == point_sets[q][j]))
                        .fold(0usize, |acc, q| acc | 1 << q)
                })
                .collect();
            let exists = (0..n)
                .map(|m| (0..points).filter(|p| m >> p & 1 == 1).fold(0, |acc, p| acc | cyl[p]))
                .collect();
            QuantifierMap::new(exists)
        })
        .collect();
    let diag = (0..d)
        .map(|i| {
            (0..d)
                .map(|k| {
                    (0..points)
                        .filter(|&p| point_sets[p][i] == point_sets[p][k])
                        .fold(0, |acc, p| acc | 1 << p)
                })
                .collect()
        })
        .collect();
    QuantumCylindricAlgebra::new(lattice, quantifiers, diag)
}

/// `d` simple quantifiers and all diagonals equal to the top.
pub fn with_simple_quantifiers(l: &FiniteOrtholattice, d: usize) -> Result<QuantumCylindricAlgebra> {
    let r = check_orthomodular(l)?;
    if !r.passed() {
        return Err(Error::NotOrthomodular(Box::new(r)));
    }
    let q = QuantifierMap::simple(l);
    QuantumCylindricAlgebra::new(l.clone(), vec![q; d], vec![vec![l.top(); d]; d])
}

/// Componentwise product; element `(x, y)` has index `x * |B| + y`.
pub fn product(a: &QuantumCylindricAlgebra, b: &QuantumCylindricAlgebra) -> Result<QuantumCylindricAlgebra> {
    if a.dims() != b.dims() {
        return Err(Error::DimensionMismatch(a.dims(), b.dims()));
    }
    let (la, lb) = (a.lattice(), b.lattice());
    let nb = lb.len();
    let n = la.len() * nb;
    let pair = |x: usize| (x / nb, x % nb);
    let idx = |x: usize, y: usize| x * nb + y;
    let table = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
        (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect()
    };
    let leq = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let ((x0, x1), (y0, y1)) = (pair(x), pair(y));
                    la.leq(x0, y0) && lb.leq(x1, y1)
                })
                .collect()
        })
        .collect();
    let meet = table(&|x, y| {
        let ((x0, x1), (y0, y1)) = (pair(x), pair(y));
        idx(la.meet(x0, y0), lb.meet(x1, y1))
    });
    let join = table(&|x, y| {
        let ((x0, x1), (y0, y1)) = (pair(x), pair(y));
        idx(la.join(x0, y0), lb.join(x1, y1))
    });
    let ocomp = (0..n).map(|x| idx(la.comp(pair(x).0), lb.comp(pair(x).1))).collect();
    let labels = (0..n).map(|x| format!("({},{})", la.label(pair(x).0), lb.label(pair(x).1))).collect();
    let lattice = FiniteOrtholattice::from_parts(
        leq,
        meet,
        join,
        ocomp,
        idx(la.bot(), lb.bot()),
        idx(la.top(), lb.top()),
        Some(labels),
    )?;
    let quantifiers = (0..a.dims())
        .map(|i| QuantifierMap::new((0..n).map(|x| idx(a.exists(i, pair(x).0), b.exists(i, pair(x).1))).collect()))
        .collect();
    let diag = (0..a.dims())
        .map(|i| (0..a.dims()).map(|k| idx(a.diag(i, k), b.diag(i, k))).collect())
        .collect();
    QuantumCylindricAlgebra::new(lattice, quantifiers, diag)
}

/// A catalog instance: either a bare lattice or a full QCA.
#[derive(Debug, Clone)]
pub enum Entry {
    Lattice(FiniteOrtholattice),
    Qca(QuantumCylindricAlgebra),
}

fn parse_num(s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse(format!("expected a number, found `{s}`")))
}

/// Resolves `boolean:K`, `mo:M`, `o6`, `cylset:U:D` and `simple:BASE:D`.
pub fn by_name(name: &str, limits: &Limits) -> Result<Entry> {
    let parts: Vec<&str> = name.split(':').collect();
    match parts.as_slice() {
        ["boolean", k] => {
            let k = parse_num(k)?;
            Ok(Entry::Lattice(boolean_algebra(u32::try_from(k).unwrap_or(u32::MAX), limits)?))
        }
        ["mo", m] => Ok(Entry::Lattice(mo(parse_num(m)?)?)),
        ["o6"] => Ok(Entry::Lattice(o6())),
        ["cylset", u, d] => Ok(Entry::Qca(cylindric_set_algebra(parse_num(u)?, parse_num(d)?, limits)?)),
        ["simple", base @ .., d] if !base.is_empty() => {
            let d = parse_num(d)?;
            match by_name(&base.join(":"), limits)? {
                Entry::Lattice(l) => Ok(Entry::Qca(with_simple_quantifiers(&l, d)?)),
                Entry::Qca(_) => Err(Error::Parse(format!("`{}` is not a lattice", base.join(":")))),
            }
        }
        _ => Err(Error::Parse(format!("unknown catalog name `{name}`"))),
    }
}
