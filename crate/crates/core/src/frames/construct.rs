use super::filters::{enumerate_proper_filters, FilterClosure, FilterSubset};
use super::{perp_set, CylindricOrthoFrame, Relation};
use crate::error::{Error, Result};
use crate::law::{verify, Domain, Law};
use crate::limits::Limits;
use crate::qia::{check_cylindric_qia, CylindricQia};
use crate::report::CheckReport;
use fixedbitset::FixedBitSet;

fn precondition(c: &CylindricQia, limits: &Limits) -> Result<()> {
    if c.len() > limits.max_frame_source {
        return Err(Error::TooLarge { what: "algebra", size: c.len(), cap: limits.max_frame_source });
    }
    let report = check_cylindric_qia(c);
    if !report.passed() {
        return Err(Error::InvalidCqia(Box::new(report)));
    }
    Ok(())
}

/// Nonzero elements in index order; point `p` of the MacLaren frame is
/// element `nonzero_elements(c)[p]`.
pub fn nonzero_elements(c: &CylindricQia) -> Vec<usize> {
    (0..c.len()).filter(|&x| x != c.zero()).collect()
}

/// `ψ(x) = {y ≠ 0 : y·x = 1}` as a set of algebra elements.
pub fn psi(c: &CylindricQia, x: usize) -> FixedBitSet {
    let one = c.unit();
    let mut s = FixedBitSet::with_capacity(c.len());
    s.extend((0..c.len()).filter(|&y| y != c.zero() && c.dot(y, x) == one));
    s
}

/// Re-indexes a set of nonzero elements onto MacLaren frame points.
pub fn to_points(c: &CylindricQia, elements: &FixedBitSet) -> FixedBitSet {
    let points = nonzero_elements(c);
    let mut s = FixedBitSet::with_capacity(points.len());
    s.extend(points.iter().enumerate().filter(|(_, &x)| elements.contains(x)).map(|(p, _)| p));
    s
}

/// Frame on the nonzero elements:
/// `x ⊥ y ⟺ x·(y·0) = 1`, `x R_i y ⟺ y·◇_i x = 1`, `Δ_{i,k} = ψ(d_{i,k})`.
pub fn maclaren_frame(c: &CylindricQia, limits: &Limits) -> Result<CylindricOrthoFrame> {
    precondition(c, limits)?;
    let points = nonzero_elements(c);
    let (m, d, z, one) = (points.len(), c.dims(), c.zero(), c.unit());
    let perp = Relation::from_fn(m, |p, q| c.dot(points[p], c.dot(points[q], z)) == one);
    let rels = (0..d)
        .map(|i| Relation::from_fn(m, |p, q| c.dot(points[q], c.diamond(i, points[p])) == one))
        .collect();
    let deltas = (0..d)
        .map(|i| (0..d).map(|k| to_points(c, &psi(c, c.diag(i, k)))).collect())
        .collect();
    let labels = points.iter().map(|&x| c.qia().label(x)).collect();
    CylindricOrthoFrame::new(perp, rels, deltas, Some(labels))
}

/// `φ(x)`: indices of the filters containing `x`.
pub fn phi(filters: &[FilterSubset], x: usize) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(filters.len());
    s.extend(filters.iter().enumerate().filter(|(_, f)| f.contains(x)).map(|(p, _)| p));
    s
}

fn filter_label(c: &CylindricQia, f: &FilterSubset) -> String {
    let members: Vec<String> = f.members().map(|x| c.qia().label(x)).collect();
    format!("{{{}}}", members.join(","))
}

/// Frame on the proper filters:
/// `α ⊥ β` iff some `x ∈ α` has `x·0 ∈ β`, `α R_i β ⟺ ◇_i[α] ⊆ β`,
/// `Δ_{i,k} = φ(d_{i,k})`.
pub fn goldblatt_frame(c: &CylindricQia, limits: &Limits) -> Result<CylindricOrthoFrame> {
    precondition(c, limits)?;
    let filters = enumerate_proper_filters(c, limits)?;
    let (m, d, n, z) = (filters.len(), c.dims(), c.len(), c.zero());
    let image = |f: &FilterSubset, map: &dyn Fn(usize) -> usize| {
        let mut s = FixedBitSet::with_capacity(n);
        s.extend(f.members().map(map));
        s
    };
    let comps: Vec<FixedBitSet> = filters.iter().map(|f| image(f, &|x| c.dot(x, z))).collect();
    let perp = Relation::from_fn(m, |a, b| !comps[a].is_disjoint(filters[b].bits()));
    let rels = (0..d)
        .map(|i| {
            let images: Vec<FixedBitSet> = filters.iter().map(|f| image(f, &|x| c.diamond(i, x))).collect();
            Relation::from_fn(m, |a, b| images[a].is_subset(filters[b].bits()))
        })
        .collect();
    let deltas = (0..d)
        .map(|i| (0..d).map(|k| phi(&filters, c.diag(i, k))).collect())
        .collect();
    let labels = filters.iter().map(|f| filter_label(c, f)).collect();
    CylindricOrthoFrame::new(perp, rels, deltas, Some(labels))
}

fn check_representation(c: &CylindricQia, frame: &CylindricOrthoFrame, rep: &dyn Fn(usize) -> FixedBitSet) -> CheckReport {
    let (n, z) = (c.len(), c.zero());
    let reps: Vec<FixedBitSet> = (0..n).map(rep).collect();
    let reps = &reps;
    let report = verify(&[
        Law::new("meet", vec![Domain::Elem(n); 2], move |a| {
            let mut both = reps[a[0]].clone();
            both.intersect_with(&reps[a[1]]);
            both == reps[c.meet(a[0], a[1])]
        }),
        Law::new("perp", vec![Domain::Elem(n)], move |a| perp_set(frame, &reps[a[0]]) == reps[c.dot(a[0], z)]),
    ]);
    report
}

/// `ψ(x) ∩ ψ(y) = ψ(((x·y)·(x·0))·0)` and `ψ(x·0) = ψ(x)⊥` in the MacLaren
/// frame, over all elements.
pub fn check_maclaren_lemmas(c: &CylindricQia, limits: &Limits) -> Result<CheckReport> {
    let frame = maclaren_frame(c, limits)?;
    Ok(check_representation(c, &frame, &|x| to_points(c, &psi(c, x))))
}

/// The same two identities for `φ` in the Goldblatt frame.
pub fn check_goldblatt_lemmas(c: &CylindricQia, limits: &Limits) -> Result<CheckReport> {
    let frame = goldblatt_frame(c, limits)?;
    let filters = enumerate_proper_filters(c, limits)?;
    Ok(check_representation(c, &frame, &|x| phi(&filters, x)))
}

/// Checks that `x ↦ ↑x` is a bijection from MacLaren points onto Goldblatt
/// points carrying `⊥`, every `R_i` and every `Δ_{i,k}` across.
///
/// Witness coordinates are MacLaren points, except for `surjective` whose
/// witness is a Goldblatt point.
pub fn check_canonical_iso(c: &CylindricQia, limits: &Limits) -> Result<CheckReport> {
    let mac = maclaren_frame(c, limits)?;
    let gold = goldblatt_frame(c, limits)?;
    let filters = enumerate_proper_filters(c, limits)?;
    let closure = FilterClosure::new(c);
    let points = nonzero_elements(c);
    let image: Vec<Option<usize>> = points
        .iter()
        .map(|&x| filters.iter().position(|f| f.bits() == closure.up(x)))
        .collect();
    let (m, g, d) = (mac.len(), gold.len(), c.dims());
    let (mac, gold, image) = (&mac, &gold, &image);
    let pair = move |p: usize, q: usize| image[p].zip(image[q]);
    let report = verify(&[
        Law::new("total", vec![Domain::Elem(m)], move |a| image[a[0]].is_some()),
        Law::new("injective", vec![Domain::Elem(m); 2], move |a| {
            a[0] == a[1] || image[a[0]].is_none() || image[a[0]] != image[a[1]]
        }),
        Law::new("surjective", vec![Domain::Elem(g)], move |a| image.contains(&Some(a[0]))),
        Law::new("perp", vec![Domain::Elem(m); 2], move |a| {
            pair(a[0], a[1]).is_some_and(|(u, v)| mac.perp().contains(a[0], a[1]) == gold.perp().contains(u, v))
        }),
        Law::new("rel", vec![Domain::Dim(d), Domain::Elem(m), Domain::Elem(m)], move |a| {
            pair(a[1], a[2])
                .is_some_and(|(u, v)| mac.rel(a[0]).contains(a[1], a[2]) == gold.rel(a[0]).contains(u, v))
        }),
        Law::new("delta", vec![Domain::Dim(d), Domain::Dim(d), Domain::Elem(m)], move |a| {
            image[a[2]].is_some_and(|u| mac.delta(a[0], a[1]).contains(a[2]) == gold.delta(a[0], a[1]).contains(u))
        }),
    ]);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{boolean_algebra, cylindric_set_algebra, mo, with_simple_quantifiers};
    use crate::frames::{check_cylindric_orthoframe, perp_set, principal_filter};
    use crate::transforms::qca_to_cqia;

    fn lim() -> Limits {
        Limits::default()
    }

    fn b2() -> CylindricQia {
        qca_to_cqia(&with_simple_quantifiers(&boolean_algebra(2, &lim()).unwrap(), 2).unwrap()).unwrap()
    }

    fn cyl() -> CylindricQia {
        qca_to_cqia(&cylindric_set_algebra(2, 2, &lim()).unwrap()).unwrap()
    }

    fn point(f: &CylindricOrthoFrame, label: &str) -> usize {
        f.labels().unwrap().iter().position(|l| l == label).unwrap()
    }

    #[test]
    fn psi_examples() {
        let c = b2();
        assert_eq!(psi(&c, c.unit()).count_ones(..), c.len() - 1);
        assert!(psi(&c, c.zero()).is_clear());
        let a = c.qia().element("a").unwrap();
        assert_eq!(psi(&c, a).ones().collect::<Vec<_>>(), vec![a]);
    }

    #[test]
    fn maclaren_b2() {
        let c = b2();
        let f = maclaren_frame(&c, &lim()).unwrap();
        assert_eq!(f.len(), 3);
        for i in 0..2 {
            assert!((0..3).all(|p| (0..3).all(|q| f.rel(i).contains(p, q))));
        }
        let (a, b) = (point(&f, "a"), point(&f, "b"));
        assert!(f.perp().contains(a, b));
        assert!(!f.perp().contains(a, a));
        assert_eq!(perp_set(&f, &f.subset([a])).ones().collect::<Vec<_>>(), vec![b]);
        assert!(check_cylindric_orthoframe(&f).passed());
    }

    #[test]
    fn maclaren_cylset_delta() {
        let c = cyl();
        let f = maclaren_frame(&c, &lim()).unwrap();
        let delta: Vec<String> = f.delta(0, 1).ones().map(|p| f.label(p)).collect();
        assert_eq!(delta, vec!["{00}", "{11}", "{00,11}"]);
        assert!(check_cylindric_orthoframe(&f).passed());
    }

    #[test]
    fn goldblatt_b2() {
        let c = b2();
        let f = goldblatt_frame(&c, &lim()).unwrap();
        let (ua, ub, u1) = (point(&f, "{a,1}"), point(&f, "{b,1}"), point(&f, "{1}"));
        assert!(f.perp().contains(ua, ub));
        for i in 0..2 {
            assert!((0..f.len()).all(|beta| f.rel(i).contains(u1, beta)));
        }
        assert!(check_cylindric_orthoframe(&f).passed());
    }

    #[test]
    fn goldblatt_cylset_delta() {
        let c = cyl();
        let f = goldblatt_frame(&c, &lim()).unwrap();
        assert_eq!(f.len(), 15);
        assert_eq!(f.delta(0, 1).count_ones(..), 3);
        let filters = enumerate_proper_filters(&c, &lim()).unwrap();
        for p in f.delta(0, 1).ones() {
            assert!(filters[p].contains(c.diag(0, 1)));
        }
    }

    #[test]
    fn canonical_iso() {
        for c in [b2(), qca_to_cqia(&with_simple_quantifiers(&mo(2).unwrap(), 2).unwrap()).unwrap(), cyl()] {
            assert!(check_canonical_iso(&c, &lim()).unwrap().passed());
        }
    }

    #[test]
    fn principal_filters_are_enumerated() {
        let c = cyl();
        let filters = enumerate_proper_filters(&c, &lim()).unwrap();
        for x in nonzero_elements(&c) {
            assert!(filters.contains(&principal_filter(&c, x).unwrap()));
        }
    }

    #[test]
    fn representation_lemmas() {
        for c in [b2(), qca_to_cqia(&with_simple_quantifiers(&mo(2).unwrap(), 2).unwrap()).unwrap(), cyl()] {
            assert!(check_maclaren_lemmas(&c, &lim()).unwrap().passed());
            assert!(check_goldblatt_lemmas(&c, &lim()).unwrap().passed());
        }
    }

    #[test]
    fn invalid_source_is_refused() {
        let c = cyl();
        let mut diag = c.diag_matrix().to_vec();
        diag[0][1] = c.zero();
        let bad = c.with_diag(diag).unwrap();
        assert!(matches!(maclaren_frame(&bad, &lim()), Err(Error::InvalidCqia(_))));
        assert!(matches!(goldblatt_frame(&bad, &lim()), Err(Error::InvalidCqia(_))));
    }
}
