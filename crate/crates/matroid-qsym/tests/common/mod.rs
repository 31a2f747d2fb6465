//! Shared fixtures for the integration suites: catalogs of matroids up to
//! isomorphism, built once per process.

// Each test target uses its own subset of the fixtures.
#![allow(dead_code)]

use std::sync::OnceLock;

use matroid_qsym::matroid::{enumerate_matroids, Matroid};

/// All matroids up to isomorphism with ground set size at most 5.
pub fn catalog_n5() -> &'static [Matroid] {
    static CACHE: OnceLock<Vec<Matroid>> = OnceLock::new();
    CACHE.get_or_init(|| catalog_up_to(5))
}

/// All matroids up to isomorphism with ground set size at most 6.
pub fn catalog_n6() -> &'static [Matroid] {
    static CACHE: OnceLock<Vec<Matroid>> = OnceLock::new();
    CACHE.get_or_init(|| catalog_up_to(6))
}

/// Connected rank-3 matroids on 6 elements up to isomorphism.
pub fn rank3_n6_connected() -> &'static [Matroid] {
    static CACHE: OnceLock<Vec<Matroid>> = OnceLock::new();
    CACHE.get_or_init(|| enumerate_matroids(6, 3, true).expect("feasible size"))
}

/// Rank-3 matroids on 7 elements up to isomorphism, grown by
/// single-element extensions.
pub fn rank3_n7() -> &'static [Matroid] {
    static CACHE: OnceLock<Vec<Matroid>> = OnceLock::new();
    CACHE.get_or_init(|| enumerate_matroids(7, 3, false).expect("feasible size"))
}

fn catalog_up_to(n_max: usize) -> Vec<Matroid> {
    let mut out = Vec::new();
    for n in 0..=n_max {
        for r in 0..=n {
            out.extend(enumerate_matroids(n, r, false).expect("feasible size"));
        }
    }
    out
}

/// A small deterministic pseudo-random stream for sampling tests.
pub struct Lcg(pub u64);

impl Lcg {
    pub fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 11
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }
}
