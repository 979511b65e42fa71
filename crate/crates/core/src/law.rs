//! Universally quantified laws over finite domains.
//!
//! Every checker in the crate is a list of [`Law`]s. A law names its variable
//! domains and a predicate; [`verify`] walks all tuples in lexicographic order
//! and records the first failing tuple. Because the predicate is kept, any
//! reported witness can be re-evaluated with [`Law::holds`].

use crate::report::{Arg, CheckReport};
use std::borrow::Cow;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    Elem(usize),
    Dim(usize),
}

impl Domain {
    fn size(self) -> usize {
        match self {
            Domain::Elem(n) | Domain::Dim(n) => n,
        }
    }

    fn arg(self, i: usize) -> Arg {
        match self {
            Domain::Elem(_) => Arg::Elem(i),
            Domain::Dim(_) => Arg::Dim(i),
        }
    }
}

type Predicate<'a> = Box<dyn Fn(&[usize]) -> bool + Send + Sync + 'a>;

pub struct Law<'a> {
    pub id: Cow<'static, str>,
    pub domains: Vec<Domain>,
    predicate: Predicate<'a>,
}

impl<'a> Law<'a> {
    pub fn new(
        id: impl Into<Cow<'static, str>>,
        domains: Vec<Domain>,
        predicate: impl Fn(&[usize]) -> bool + Send + Sync + 'a,
    ) -> Self {
        Law { id: id.into(), domains, predicate: Box::new(predicate) }
    }

    pub fn holds(&self, args: &[usize]) -> bool {
        (self.predicate)(args)
    }

    /// Same as [`Law::holds`] but takes a witness as reported.
    pub fn holds_at(&self, witness: &[Arg]) -> bool {
        let args: Vec<usize> = witness.iter().map(|a| a.index()).collect();
        self.holds(&args)
    }

    pub fn first_counterexample(&self) -> Option<Vec<usize>> {
        let sizes: Vec<usize> = self.domains.iter().map(|d| d.size()).collect();
        if sizes.contains(&0) {
            return None;
        }
        let mut args = vec![0usize; sizes.len()];
        loop {
            if !self.holds(&args) {
                return Some(args);
            }
            // odometer, last coordinate fastest
            let mut pos = args.len();
            loop {
                if pos == 0 {
                    return None;
                }
                pos -= 1;
                args[pos] += 1;
                if args[pos] < sizes[pos] {
                    break;
                }
                args[pos] = 0;
            }
        }
    }

    fn witness(&self, args: &[usize]) -> Vec<Arg> {
        self.domains.iter().zip(args).map(|(d, &i)| d.arg(i)).collect()
    }
}

impl std::fmt::Debug for Law<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Law").field("id", &self.id).field("domains", &self.domains).finish()
    }
}

pub fn verify(laws: &[Law<'_>]) -> CheckReport {
    let mut report = CheckReport::default();
    for law in laws {
        if let Some(args) = law.first_counterexample() {
            report.push(law.id.clone().into_owned(), law.witness(&args));
        }
    }
    report
}

/// Shorthand for a domain list of `k` element variables over `n` elements.
pub(crate) fn elems(n: usize, k: usize) -> Vec<Domain> {
    vec![Domain::Elem(n); k]
}
