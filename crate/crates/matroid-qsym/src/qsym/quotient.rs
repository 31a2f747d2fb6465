//! The degree-`n` piece of the quotient of QSym by the square of its maximal
//! graded ideal.
//!
//! The square of the maximal ideal is spanned in degree `n` by the products
//! `L_b * L_e` over pairs of nonempty compositions with `|b| + |e| = n`. The
//! quotient lattice is free; its rank `r_n` is pinned down by the power
//! series identity `prod (1 - t^k)^(-r_k) = (1-t)/(1-2t)`. A presentation
//! row-reduces the product span over the fundamental-basis coordinate
//! lattice and projects onto the non-pivot coordinates.

use std::fmt;

use crate::int::Int;
use crate::linalg::{hermite_normal_form, IntMatrix};
use crate::qsym::{Basis, Composition, QSymFn};

/// Projection of degree-`n` quasisymmetric functions onto the free lattice
/// `Z^(r_n)` of the quotient modulo products.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    n: usize,
    /// Fundamental-basis compositions of `n` in canonical order.
    comps: Vec<Composition>,
    /// Hermite basis of the product sublattice, with unit pivots.
    reduced: IntMatrix,
    pivots: Vec<usize>,
    /// Indices into `comps` of the coordinates that survive the projection.
    free_indices: Vec<usize>,
}

/// Failure to build or apply a quotient presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientError {
    /// The reduced product lattice does not match the rank forced by the
    /// Hilbert series, or has a non-unit pivot.
    RankMismatch { n: usize, expected: usize, got: usize },
    /// Input is not homogeneous of the presentation degree.
    DegreeMismatch { expected: usize },
}

impl fmt::Display for QuotientError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientError::RankMismatch { n, expected, got } => write!(
                f,
                "quotient lattice in degree {n} has rank {got}, expected {expected}"
            ),
            QuotientError::DegreeMismatch { expected } => {
                write!(f, "input must be homogeneous of degree {expected}")
            }
        }
    }
}

impl std::error::Error for QuotientError {}

/// Quotient ranks `r_1..=r_n` from the recurrence
/// `sum over d dividing k of d * r_d = 2^k - 1`.
pub fn quotient_ranks(n: usize) -> Vec<usize> {
    let mut r = vec![0usize; n + 1];
    for k in 1..=n {
        let mut acc: i128 = (1i128 << k) - 1;
        for d in 1..k {
            if k % d == 0 {
                acc -= (d as i128) * (r[d] as i128);
            }
        }
        r[k] = (acc / k as i128) as usize;
    }
    r[1..].to_vec()
}

impl QuotientPresentation {
    /// Builds the presentation in degree `n >= 1`.
    pub fn new(n: usize) -> Result<QuotientPresentation, QuotientError> {
        assert!(n >= 1, "degree must be positive");
        let comps = Composition::all(n);
        let index: std::collections::HashMap<&Composition, usize> =
            comps.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let mut rows: IntMatrix = Vec::new();
        for a in 1..=n / 2 {
            for beta in Composition::all(a) {
                for eps in Composition::all(n - a) {
                    let prod = QSymFn::fundamental(beta.clone())
                        .product(&QSymFn::fundamental(eps.clone()))
                        .to_basis(Basis::Fundamental);
                    let mut row = vec![Int::ZERO; comps.len()];
                    for (gamma, c) in prod.terms() {
                        row[index[gamma]] = c.clone();
                    }
                    rows.push(row);
                }
            }
        }
        let pivots = hermite_normal_form(&mut rows);
        let expected_rank = comps.len() - quotient_ranks(n)[n - 1];
        let unit_pivots = rows
            .iter()
            .zip(&pivots)
            .all(|(row, &p)| row[p].is_one());
        if pivots.len() != expected_rank || !unit_pivots {
            return Err(QuotientError::RankMismatch {
                n,
                expected: expected_rank,
                got: pivots.len(),
            });
        }
        let free_indices: Vec<usize> = (0..comps.len())
            .filter(|i| !pivots.contains(i))
            .collect();
        Ok(QuotientPresentation {
            n,
            comps,
            reduced: rows,
            pivots,
            free_indices,
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Rank `r_n` of the quotient lattice.
    pub fn rank(&self) -> usize {
        self.free_indices.len()
    }

    /// The compositions whose fundamental-basis coordinates survive as the
    /// chosen free basis of the quotient.
    pub fn free_basis(&self) -> Vec<&Composition> {
        self.free_indices.iter().map(|&i| &self.comps[i]).collect()
    }

    /// Projects a homogeneous function of degree `n` to its quotient vector.
    /// Linear; kills every product of two positive-degree elements.
    pub fn project(&self, f: &QSymFn) -> Result<QuotientVector, QuotientError> {
        if !(f.is_zero() || f.degree() == Some(self.n)) {
            return Err(QuotientError::DegreeMismatch { expected: self.n });
        }
        let f = f.to_basis(Basis::Fundamental);
        let mut v = vec![Int::ZERO; self.comps.len()];
        for (i, comp) in self.comps.iter().enumerate() {
            v[i] = f.coeff(comp);
        }
        for (row, &p) in self.reduced.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let q = v[p].clone();
            for j in 0..v.len() {
                let delta = &q * &row[j];
                v[j] -= &delta;
            }
        }
        Ok(QuotientVector {
            n: self.n,
            coords: self.free_indices.iter().map(|&i| v[i].clone()).collect(),
        })
    }
}

/// The image of a degree-`n` quasisymmetric function in the quotient
/// lattice, relative to a fixed [`QuotientPresentation`].
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct QuotientVector {
    n: usize,
    coords: Vec<Int>,
}

impl QuotientVector {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[Int] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &QuotientVector) -> QuotientVector {
        assert_eq!(self.n, other.n, "degree mismatch");
        QuotientVector {
            n: self.n,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &QuotientVector) -> QuotientVector {
        assert_eq!(self.n, other.n, "degree mismatch");
        QuotientVector {
            n: self.n,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scaled(&self, k: &Int) -> QuotientVector {
        QuotientVector {
            n: self.n,
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    pub fn zero(n: usize, rank: usize) -> QuotientVector {
        QuotientVector {
            n,
            coords: vec![Int::ZERO; rank],
        }
    }
}

impl fmt::Display for QuotientVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_follow_hilbert_series() {
        assert_eq!(quotient_ranks(7), vec![1, 1, 2, 3, 6, 9, 18]);
    }

    #[test]
    fn small_presentations() {
        for n in 1..=7 {
            let pres = QuotientPresentation::new(n).unwrap();
            assert_eq!(pres.rank(), quotient_ranks(n)[n - 1], "degree {n}");
        }
    }

    #[test]
    fn kills_products() {
        let pres = QuotientPresentation::new(4).unwrap();
        let f = QSymFn::fundamental(Composition::of(&[2, 1]));
        let g = QSymFn::fundamental(Composition::of(&[1]));
        let prod = f.product(&g);
        assert!(pres.project(&prod).unwrap().is_zero());
        // A single fundamental element is not a product.
        let l4 = QSymFn::fundamental(Composition::of(&[4]));
        assert!(!pres.project(&l4).unwrap().is_zero());
        let pres3 = QuotientPresentation::new(3).unwrap();
        let l3 = QSymFn::fundamental(Composition::of(&[3]));
        assert!(!pres3.project(&l3).unwrap().is_zero());
    }

    #[test]
    fn degree_checked() {
        let pres = QuotientPresentation::new(3).unwrap();
        let f = QSymFn::fundamental(Composition::of(&[2]));
        assert!(matches!(
            pres.project(&f),
            Err(QuotientError::DegreeMismatch { .. })
        ));
    }
}
