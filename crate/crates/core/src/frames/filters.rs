use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::qia::CylindricQia;
use fixedbitset::FixedBitSet;
use std::cmp::Ordering;

/// A subset of the algebra's elements closed under `x·y = 1` successors and
/// the meet term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FilterSubset(FixedBitSet);

impl FilterSubset {
    pub fn contains(&self, x: usize) -> bool {
        self.0.contains(x)
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.0
    }
}

/// Orders bitsets as binary numbers with element `i` worth `2^i`.
pub(crate) fn bitset_cmp(a: &FixedBitSet, b: &FixedBitSet) -> Ordering {
    let (a, b) = (a.as_slice(), b.as_slice());
    let len = a.len().max(b.len());
    let word = |s: &[usize], i: usize| s.get(i).copied().unwrap_or(0);
    (0..len).rev().map(|i| word(a, i).cmp(&word(b, i))).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
}

impl Ord for FilterSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        bitset_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for FilterSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Outcome of generating a filter from a set of elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generated {
    Proper(FilterSubset),
    /// Zero entered the closure.
    Improper,
}

/// Closure under the two filter conditions, with `up[x] = {y : x·y = 1}`.
pub(crate) struct FilterClosure<'a> {
    c: &'a CylindricQia,
    up: Vec<FixedBitSet>,
}

impl<'a> FilterClosure<'a> {
    pub(crate) fn new(c: &'a CylindricQia) -> Self {
        let (n, one) = (c.len(), c.unit());
        let up = (0..n)
            .map(|x| {
                let mut s = FixedBitSet::with_capacity(n);
                s.extend((0..n).filter(|&y| c.dot(x, y) == one));
                s
            })
            .collect();
        FilterClosure { c, up }
    }

    pub(crate) fn up(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    pub(crate) fn close(&self, seed: &FixedBitSet) -> FixedBitSet {
        let mut members = seed.clone();
        let mut queue: Vec<usize> = seed.ones().collect();
        while let Some(x) = queue.pop() {
            let mut fresh = self.up[x].difference(&members).collect::<Vec<_>>();
            let current: Vec<usize> = members.ones().collect();
            for y in current {
                fresh.push(self.c.meet(x, y));
                fresh.push(self.c.meet(y, x));
            }
            for z in fresh {
                if !members.put(z) {
                    queue.push(z);
                }
            }
        }
        members
    }
}

/// Every proper filter, in ascending bitset order.
///
/// Filters are the nonempty closed sets of [`FilterClosure`]; they are
/// enumerated with Ganter's next-closure algorithm.
pub fn enumerate_proper_filters(c: &CylindricQia, limits: &Limits) -> Result<Vec<FilterSubset>> {
    let n = c.len();
    if n > limits.max_frame_source {
        return Err(Error::TooLarge { what: "algebra", size: n, cap: limits.max_frame_source });
    }
    let closure = FilterClosure::new(c);
    let zero = c.zero();
    let mut out = Vec::new();
    let mut current = closure.close(&FixedBitSet::with_capacity(n));
    loop {
        if !current.is_clear() && !current.contains(zero) {
            if out.len() == limits.max_filters {
                return Err(Error::TooLarge { what: "filter count", size: out.len() + 1, cap: limits.max_filters });
            }
            out.push(FilterSubset(current.clone()));
        }
        let next = (0..n).rev().find_map(|i| {
            if current.contains(i) {
                return None;
            }
            let mut seed = current.clone();
            seed.set_range(i.., false);
            seed.insert(i);
            let candidate = closure.close(&seed);
            let new_below_i = candidate.difference(&current).any(|x| x < i);
            (!new_below_i).then_some(candidate)
        });
        match next {
            Some(s) => current = s,
            None => break,
        }
    }
    out.sort();
    Ok(out)
}

/// `↑x = {y : x·y = 1}`.
pub fn principal_filter(c: &CylindricQia, x: usize) -> Result<FilterSubset> {
    if x == c.zero() {
        return Err(Error::ZeroGenerator);
    }
    let one = c.unit();
    let mut s = FixedBitSet::with_capacity(c.len());
    s.extend((0..c.len()).filter(|&y| c.dot(x, y) == one));
    Ok(FilterSubset(s))
}

/// Least filter containing `generators`.
pub fn filter_generated(c: &CylindricQia, generators: &[usize]) -> Result<Generated> {
    if generators.is_empty() {
        return Err(Error::EmptyGenerator);
    }
    if let Some(&g) = generators.iter().find(|&&g| g >= c.len()) {
        return Err(Error::malformed("generators", format!("{g} out of range")));
    }
    let mut seed = FixedBitSet::with_capacity(c.len());
    seed.extend(generators.iter().copied());
    let closed = FilterClosure::new(c).close(&seed);
    Ok(if closed.contains(c.zero()) { Generated::Improper } else { Generated::Proper(FilterSubset(closed)) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{boolean_algebra, cylindric_set_algebra, mo, with_simple_quantifiers};
    use crate::transforms::qca_to_cqia;

    fn lim() -> Limits {
        Limits::default()
    }

    fn b2() -> CylindricQia {
        qca_to_cqia(&with_simple_quantifiers(&boolean_algebra(2, &lim()).unwrap(), 2).unwrap()).unwrap()
    }

    fn labels(c: &CylindricQia, f: &FilterSubset) -> Vec<String> {
        f.members().map(|x| c.qia().label(x)).collect()
    }

    #[test]
    fn b2_filters() {
        let c = b2();
        let fs = enumerate_proper_filters(&c, &lim()).unwrap();
        let got: Vec<Vec<String>> = fs.iter().map(|f| labels(&c, f)).collect();
        assert_eq!(got, vec![vec!["1"], vec!["a", "1"], vec!["b", "1"]]);
    }

    #[test]
    fn counts() {
        let mo2 = qca_to_cqia(&with_simple_quantifiers(&mo(2).unwrap(), 2).unwrap()).unwrap();
        assert_eq!(enumerate_proper_filters(&mo2, &lim()).unwrap().len(), 5);
        let cyl = qca_to_cqia(&cylindric_set_algebra(2, 2, &lim()).unwrap()).unwrap();
        assert_eq!(enumerate_proper_filters(&cyl, &lim()).unwrap().len(), 15);
    }

    #[test]
    fn caps() {
        let cyl = qca_to_cqia(&cylindric_set_algebra(2, 2, &lim()).unwrap()).unwrap();
        let small = Limits { max_frame_source: 8, ..lim() };
        assert!(matches!(enumerate_proper_filters(&cyl, &small), Err(Error::TooLarge { .. })));
        let few = Limits { max_filters: 4, ..lim() };
        assert!(matches!(enumerate_proper_filters(&cyl, &few), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn principal() {
        let c = b2();
        let one = c.unit();
        assert_eq!(principal_filter(&c, one).unwrap().members().collect::<Vec<_>>(), vec![one]);
        let a = c.qia().element("a").unwrap();
        assert_eq!(labels(&c, &principal_filter(&c, a).unwrap()), vec!["a", "1"]);
        for x in 1..c.len() {
            assert!(principal_filter(&c, x).unwrap().contains(x));
        }
        assert!(matches!(principal_filter(&c, c.zero()), Err(Error::ZeroGenerator)));
    }

    #[test]
    fn generated() {
        let c = b2();
        let (a, b) = (c.qia().element("a").unwrap(), c.qia().element("b").unwrap());
        assert_eq!(
            filter_generated(&c, &[a]).unwrap(),
            Generated::Proper(principal_filter(&c, a).unwrap())
        );
        assert_eq!(filter_generated(&c, &[a, b]).unwrap(), Generated::Improper);
        let one = c.unit();
        assert_eq!(
            filter_generated(&c, &[one]).unwrap(),
            Generated::Proper(principal_filter(&c, one).unwrap())
        );
        assert!(matches!(filter_generated(&c, &[]), Err(Error::EmptyGenerator)));
    }

    #[test]
    fn bitset_order() {
        let mk = |v: &[usize]| {
            let mut s = FixedBitSet::with_capacity(100);
            s.extend(v.iter().copied());
            s
        };
        assert_eq!(bitset_cmp(&mk(&[3]), &mk(&[1, 3])), Ordering::Less);
        assert_eq!(bitset_cmp(&mk(&[1, 3]), &mk(&[2, 3])), Ordering::Less);
        assert_eq!(bitset_cmp(&mk(&[70]), &mk(&[0, 1, 69])), Ordering::Greater);
    }
}
