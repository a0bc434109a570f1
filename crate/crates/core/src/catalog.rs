//! The fixed battery of test groups, with the prime each is examined at.

use serde::Serialize;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct CatalogEntry {
    pub spec: &'static str,
    pub p: u64,
    pub order: usize,
    /// What the group models, if anything in particular.
    pub note: &'static str,
}

const fn e(spec: &'static str, p: u64, order: usize, note: &'static str) -> CatalogEntry {
    CatalogEntry { spec, p, order, note }
}

pub const CATALOG: &[CatalogEntry] = &[
    e("cyclic:1", 2, 1, "trivial"),
    e("cyclic:2", 2, 2, "W-group of a field with one square class besides 1"),
    e("cyclic:4", 2, 4, ""),
    e("cyclic:8", 2, 8, "model of the profinite integers at p = 2"),
    e("cyclic:16", 2, 16, ""),
    e("cyclic:32", 2, 32, ""),
    e("elementary:2:2", 2, 4, ""),
    e("elementary:2:3", 2, 8, ""),
    e("elementary:2:4", 2, 16, ""),
    e("direct:cyclic:4,cyclic:2", 2, 8, ""),
    e("direct:cyclic:4,cyclic:4", 2, 16, ""),
    e("direct:cyclic:8,cyclic:2", 2, 16, ""),
    e("direct:cyclic:8,cyclic:4", 2, 32, ""),
    e("dihedral:8", 2, 8, "model of the pro-2 dihedral group of R((t))"),
    e("dihedral:16", 2, 16, "finer model of the pro-2 dihedral group"),
    e("dihedral:32", 2, 32, "finer model of the pro-2 dihedral group"),
    e("quaternion:8", 2, 8, "counterexample: Delta is the center"),
    e("quaternion:16", 2, 16, ""),
    e("semidirect:8,2,5", 2, 16, ""),
    e("semidirect:8,2,3", 2, 16, "semidihedral"),
    e("semidirect:4,4,3", 2, 16, ""),
    e("direct:dihedral:8,cyclic:2", 2, 16, ""),
    e("direct:quaternion:8,cyclic:2", 2, 16, ""),
    e("direct:dihedral:8,cyclic:4", 2, 32, ""),
    e("direct:dihedral:8,dihedral:8", 2, 64, ""),
    e("dihedral:6", 2, 6, "not a 2-group"),
    e("dihedral:12", 2, 12, "not a 2-group"),
    e("cyclic:1", 3, 1, "trivial"),
    e("cyclic:3", 3, 3, "counterexample: reduced list gives G"),
    e("cyclic:9", 3, 9, ""),
    e("cyclic:27", 3, 27, "model of the profinite integers at p = 3"),
    e("cyclic:81", 3, 81, ""),
    e("cyclic:243", 3, 243, ""),
    e("elementary:3:2", 3, 9, ""),
    e("elementary:3:3", 3, 27, ""),
    e("elementary:3:4", 3, 81, ""),
    e("direct:cyclic:9,cyclic:3", 3, 27, ""),
    e("direct:cyclic:9,cyclic:9", 3, 81, ""),
    e("direct:cyclic:27,cyclic:3", 3, 81, ""),
    e("direct:cyclic:27,cyclic:9", 3, 243, ""),
    e("heisenberg:3", 3, 27, "counterexample: reduced list gives G"),
    e("modular:3", 3, 27, ""),
    e("semidirect:9,9,4", 3, 81, "model of the W-group of a local field with p-th roots of unity"),
    e("semidirect:9,9,7", 3, 81, ""),
    e("semidirect:27,3,10", 3, 81, ""),
    e("semidirect:27,9,4", 3, 243, ""),
    e("direct:heisenberg:3,cyclic:3", 3, 81, ""),
    e("direct:modular:3,cyclic:3", 3, 81, ""),
    e("direct:cyclic:9,elementary:3:2", 3, 81, ""),
    e("direct:heisenberg:3,cyclic:9", 3, 243, ""),
    e("direct:modular:3,cyclic:9", 3, 243, ""),
    e("dihedral:6", 3, 6, "not a 3-group"),
    e("semidirect:7,3,2", 3, 21, "not a 3-group"),
];

/// Catalog entries for the given primes with order at most `max_order`.
pub fn catalog(primes: &[u64], max_order: usize) -> Vec<CatalogEntry> {
    CATALOG
        .iter()
        .filter(|c| primes.contains(&c.p) && c.order <= max_order)
        .copied()
        .collect()
}
