mod common;

use common::{cqias, lattices, qcas};
use oqkit_core::io::{parse_str, to_canonical_string, AlgebraDocument};
use oqkit_core::lattice::{check_ortholattice, ortholattice_laws};
use oqkit_core::qca::{check_qca, cylindric_laws};
use oqkit_core::qia::{check_derived_identities, derived_order, qia_join, qia_long_meet, qia_meet};
use oqkit_core::transforms::{implication, qca_to_cqia, sasaki_table};
use oqkit_core::{Arg, ImplicationKind};
use proptest::prelude::*;

fn lattice_and_elems(k: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..lattices().len()).prop_flat_map(move |i| {
        let n = lattices()[i].len();
        (Just(i), proptest::collection::vec(0..n, k))
    })
}

proptest! {
    #[test]
    fn de_morgan_and_involution((i, xs) in lattice_and_elems(2)) {
        let l = &lattices()[i];
        let (x, y) = (xs[0], xs[1]);
        prop_assert_eq!(l.comp(l.meet(x, y)), l.join(l.comp(x), l.comp(y)));
        prop_assert_eq!(l.comp(l.join(x, y)), l.meet(l.comp(x), l.comp(y)));
        prop_assert_eq!(l.comp(l.comp(x)), x);
    }

    #[test]
    fn lattice_laws((i, xs) in lattice_and_elems(3)) {
        let l = &lattices()[i];
        let (x, y, z) = (xs[0], xs[1], xs[2]);
        prop_assert_eq!(l.meet(x, y), l.meet(y, x));
        prop_assert_eq!(l.join(x, l.meet(x, y)), x);
        prop_assert_eq!(l.meet(x, l.join(x, y)), x);
        prop_assert_eq!(l.meet(l.meet(x, y), z), l.meet(x, l.meet(y, z)));
        prop_assert_eq!(l.leq(x, y), l.meet(x, y) == x);
    }

    #[test]
    fn sasaki_boundary_values((i, xs) in lattice_and_elems(1)) {
        let l = &lattices()[i];
        let x = xs[0];
        prop_assert_eq!(implication(l, ImplicationKind::Sasaki, x, l.bot()), l.comp(x));
        prop_assert_eq!(implication(l, ImplicationKind::Sasaki, l.bot(), x), l.top());
    }

    #[test]
    fn disjunction_term_is_join((i, xs) in lattice_and_elems(2)) {
        // the monadic law written ((x·0)·(y·0))·x reads x ∨ y under π_s
        let l = &lattices()[i];
        let q = sasaki_table(l);
        let (x, y, z) = (xs[0], xs[1], l.bot());
        prop_assert_eq!(q.dot(q.dot(q.dot(x, z), q.dot(y, z)), x), l.join(x, y));
        prop_assert_eq!(qia_join(&q, x, y).unwrap(), l.join(x, y));
        prop_assert_eq!(qia_meet(&q, x, y).unwrap(), l.meet(x, y));
    }

    #[test]
    fn long_meet_agrees((i, x, y) in (0..cqias().len()).prop_flat_map(|i| {
        let n = cqias()[i].len();
        (Just(i), 0..n, 0..n)
    })) {
        let c = &cqias()[i];
        prop_assert_eq!(qia_long_meet(c.qia(), x, y).unwrap(), c.meet(x, y));
    }

    #[test]
    fn broken_complement_witnesses_recheck(i in 0..lattices().len(), seed in any::<u64>()) {
        let l = &lattices()[i];
        let n = l.len();
        // rotate the complement table by a seed-dependent amount
        let shift = (seed as usize) % n;
        let ocomp: Vec<usize> = (0..n).map(|x| l.comp((x + shift) % n)).collect();
        let bad = l.with_ocomp(ocomp).unwrap();
        let report = check_ortholattice(&bad).unwrap();
        prop_assert_eq!(report.passed(), shift == 0);
        let laws = ortholattice_laws(&bad);
        for v in &report.violations {
            let law = laws.iter().find(|law| law.id == v.axiom).unwrap();
            prop_assert!(!law.holds_at(&v.witness));
        }
    }

    #[test]
    fn broken_diagonal_witnesses_recheck(i in 0..qcas().len(), seed in any::<(usize, usize, usize)>()) {
        let a = &qcas()[i];
        prop_assume!(a.dims() > 0);
        let mut diag = a.diag_matrix().to_vec();
        let (r, c) = (seed.0 % a.dims(), seed.1 % a.dims());
        diag[r][c] = seed.2 % a.len();
        let mutated = a.with_diag(diag).unwrap();
        let report = check_qca(&mutated);
        let laws = cylindric_laws(&mutated);
        for v in &report.violations {
            if let Some(law) = laws.iter().find(|law| law.id == v.axiom) {
                prop_assert!(!law.holds_at(&v.witness));
                let in_range = v.witness.iter().all(|w| match w {
                    Arg::Dim(k) => *k < a.dims(),
                    Arg::Elem(x) => *x < a.len(),
                });
                prop_assert!(in_range);
            }
        }
    }

    #[test]
    fn documents_round_trip(i in 0..qcas().len()) {
        let a = &qcas()[i];
        for doc in [AlgebraDocument::Qca(a.clone()), AlgebraDocument::Cqia(qca_to_cqia(a).unwrap())] {
            let text = to_canonical_string(&doc);
            let back = parse_str(&text).unwrap();
            prop_assert_eq!(to_canonical_string(&back), text);
            prop_assert_eq!(back, doc);
        }
    }
}

#[test]
fn derived_order_is_source_order() {
    for l in lattices() {
        let q = sasaki_table(l);
        assert!(check_derived_identities(&q).unwrap().passed());
        assert_eq!(derived_order(&q).unwrap().matrix(), l.leq_matrix());
    }
}
