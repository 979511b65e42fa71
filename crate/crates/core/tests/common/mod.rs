#![allow(dead_code)]

use oqkit_core::catalog::{boolean_algebra, cylindric_set_algebra, mo, product, with_simple_quantifiers};
use oqkit_core::transforms::qca_to_cqia;
use oqkit_core::{CylindricQia, FiniteOrtholattice, Limits, QuantumCylindricAlgebra};
use std::sync::OnceLock;

pub fn lim() -> Limits {
    Limits::default()
}

/// Orthomodular lattices small enough for exhaustive checks.
pub fn lattices() -> &'static [FiniteOrtholattice] {
    static CELL: OnceLock<Vec<FiniteOrtholattice>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut v: Vec<_> = (0..=3).map(|k| boolean_algebra(k, &lim()).unwrap()).collect();
        v.extend((1..=4).map(|m| mo(m).unwrap()));
        v.push(cylindric_set_algebra(2, 2, &lim()).unwrap().lattice().clone());
        v
    })
}

/// The catalog QCAs plus a product.
pub fn qcas() -> &'static [QuantumCylindricAlgebra] {
    static CELL: OnceLock<Vec<QuantumCylindricAlgebra>> = OnceLock::new();
    CELL.get_or_init(|| {
        let simple = |l: FiniteOrtholattice, d| with_simple_quantifiers(&l, d).unwrap();
        let b1 = simple(boolean_algebra(1, &lim()).unwrap(), 2);
        let mo2 = simple(mo(2).unwrap(), 2);
        vec![
            cylindric_set_algebra(2, 2, &lim()).unwrap(),
            cylindric_set_algebra(2, 1, &lim()).unwrap(),
            cylindric_set_algebra(3, 1, &lim()).unwrap(),
            simple(boolean_algebra(2, &lim()).unwrap(), 2),
            mo2.clone(),
            simple(mo(3).unwrap(), 1),
            simple(boolean_algebra(3, &lim()).unwrap(), 3),
            product(&b1, &mo2).unwrap(),
        ]
    })
}

pub fn cqias() -> &'static [CylindricQia] {
    static CELL: OnceLock<Vec<CylindricQia>> = OnceLock::new();
    CELL.get_or_init(|| qcas().iter().map(|a| qca_to_cqia(a).unwrap()).collect())
}
