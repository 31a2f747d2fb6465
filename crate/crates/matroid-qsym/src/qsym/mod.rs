//! The Hopf algebra of quasisymmetric functions over the integers.
//!
//! Elements are stored as sparse integer combinations of either the monomial
//! basis `M[a1,...,ak]` or the fundamental basis `L[a1,...,ak]`, indexed by
//! compositions. Products are computed by the quasi-shuffle of compositions,
//! the coproduct by deconcatenation, and the antipode by the sign-and-
//! complement rule on the fundamental basis. Setting `x_1 = ... = x_m = 1`
//! (and the rest to zero) specializes an element to an integer-valued
//! polynomial in `m`, kept in the binomial basis.

mod quotient;

pub use quotient::{QuotientError, QuotientPresentation, QuotientVector};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::int::Int;

/// A finite sequence of positive integers, indexing basis elements of QSym.
///
/// The empty composition (weight 0) indexes the unit. Compositions order by
/// weight first, then lexicographically on parts, which is the canonical
/// order used for rendering and for matrix layouts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Composition {
    parts: Vec<u32>,
}

/// Error for attempting to build a composition with a zero part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvalidComposition;

impl fmt::Display for InvalidComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "composition parts must be positive")
    }
}

impl std::error::Error for InvalidComposition {}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Composition, InvalidComposition> {
        if parts.iter().any(|&p| p == 0) {
            return Err(InvalidComposition);
        }
        Ok(Composition { parts })
    }

    /// Shorthand that panics on a zero part; for literals in code and tests.
    pub fn of(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).expect("composition parts must be positive")
    }

    pub fn empty() -> Composition {
        Composition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// All `2^(n-1)` compositions of `n` in canonical (lexicographic) order;
    /// just the empty composition for `n = 0`.
    pub fn all(n: usize) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        fn rec(rem: usize, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if rem == 0 {
                out.push(Composition {
                    parts: prefix.clone(),
                });
                return;
            }
            for first in 1..=rem {
                prefix.push(first as u32);
                rec(rem - first, prefix, out);
                prefix.pop();
            }
        }
        rec(n, &mut prefix, &mut out);
        out
    }

    /// The subset of `[n-1]` of partial sums (all but the last), as a bitmask
    /// with bit `i-1` standing for `i`.
    pub fn descent_set(&self) -> u64 {
        let mut mask = 0u64;
        let mut acc = 0usize;
        for &p in self.parts.iter().take(self.parts.len().saturating_sub(1)) {
            acc += p as usize;
            mask |= 1 << (acc - 1);
        }
        mask
    }

    /// Composition of `n` whose partial sums are the set `mask ⊆ [n-1]`.
    pub fn from_descent_set(n: usize, mask: u64) -> Composition {
        let mut parts = Vec::new();
        let mut prev = 0u32;
        for i in 1..n {
            if mask & (1 << (i - 1)) != 0 {
                parts.push(i as u32 - prev);
                prev = i as u32;
            }
        }
        if n > 0 {
            parts.push(n as u32 - prev);
        }
        Composition { parts }
    }

    /// `self` refines `other`: `other` is obtained by merging consecutive
    /// runs of parts of `self`. Both must have the same weight.
    pub fn refines(&self, other: &Composition) -> bool {
        self.weight() == other.weight()
            && (other.descent_set() & !self.descent_set()) == 0
    }

    /// Complementary composition: partial sums are the complement in `[n-1]`.
    pub fn complement(&self) -> Composition {
        let n = self.weight();
        if n == 0 {
            return Composition::empty();
        }
        let full = if n >= 2 { (1u64 << (n - 1)) - 1 } else { 0 };
        Composition::from_descent_set(n, full & !self.descent_set())
    }

    pub fn reversed(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Composition) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Composition) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Which of the two standard bases a [`QSymFn`] is expressed in.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Basis {
    Monomial,
    Fundamental,
}

impl Basis {
    fn letter(self) -> char {
        match self {
            Basis::Monomial => 'M',
            Basis::Fundamental => 'L',
        }
    }
}

/// A quasisymmetric function: a sparse integer combination of basis elements
/// indexed by compositions, tagged with the basis it is expressed in.
///
/// No zero coefficients are stored. Inhomogeneous values are allowed and are
/// treated as a bag of graded pieces by the operations that care (antipode,
/// specialization).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSymFn {
    basis: Basis,
    terms: BTreeMap<Composition, Int>,
}

impl QSymFn {
    pub fn zero(basis: Basis) -> QSymFn {
        QSymFn {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The unit of QSym (the empty composition with coefficient 1).
    pub fn one(basis: Basis) -> QSymFn {
        QSymFn::term(basis, Composition::empty(), Int::ONE)
    }

    pub fn term(basis: Basis, alpha: Composition, coeff: Int) -> QSymFn {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(alpha, coeff);
        }
        QSymFn { basis, terms }
    }

    pub fn monomial(alpha: Composition) -> QSymFn {
        QSymFn::term(Basis::Monomial, alpha, Int::ONE)
    }

    pub fn fundamental(alpha: Composition) -> QSymFn {
        QSymFn::term(Basis::Fundamental, alpha, Int::ONE)
    }

    pub fn from_terms<I>(basis: Basis, terms: I) -> QSymFn
    where
        I: IntoIterator<Item = (Composition, Int)>,
    {
        let mut f = QSymFn::zero(basis);
        for (alpha, c) in terms {
            f.add_term(alpha, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &Int)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, alpha: &Composition) -> Int {
        self.terms.get(alpha).cloned().unwrap_or(Int::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, alpha: Composition, c: Int) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(alpha);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Degree of a homogeneous element (`Some(0)` for zero), or `None` when
    /// terms of different weights are mixed.
    pub fn degree(&self) -> Option<usize> {
        let mut deg = None;
        for alpha in self.terms.keys() {
            match deg {
                None => deg = Some(alpha.weight()),
                Some(d) if d == alpha.weight() => {}
                Some(_) => return None,
            }
        }
        Some(deg.unwrap_or(0))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree().is_some()
    }

    /// The terms of weight `d`, as a homogeneous function.
    pub fn graded_piece(&self, d: usize) -> QSymFn {
        QSymFn {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(a, _)| a.weight() == d)
                .map(|(a, c)| (a.clone(), c.clone()))
                .collect(),
        }
    }

    /// The weights present, ascending.
    pub fn weights(&self) -> Vec<usize> {
        let mut ws: Vec<usize> = self.terms.keys().map(|a| a.weight()).collect();
        ws.dedup();
        ws
    }

    pub fn add(&self, other: &QSymFn) -> QSymFn {
        let other = other.to_basis(self.basis);
        let mut out = self.clone();
        for (a, c) in other.terms {
            out.add_term(a, c);
        }
        out
    }

    pub fn sub(&self, other: &QSymFn) -> QSymFn {
        self.add(&other.negated())
    }

    pub fn negated(&self) -> QSymFn {
        QSymFn {
            basis: self.basis,
            terms: self.terms.iter().map(|(a, c)| (a.clone(), -c)).collect(),
        }
    }

    pub fn scaled(&self, k: &Int) -> QSymFn {
        if k.is_zero() {
            return QSymFn::zero(self.basis);
        }
        QSymFn {
            basis: self.basis,
            terms: self.terms.iter().map(|(a, c)| (a.clone(), c * k)).collect(),
        }
    }

    /// Re-expresses the same quasisymmetric function in `target`.
    ///
    /// `L_a = sum of M_b over refinements b of a`; the inverse expansion
    /// carries the sign `(-1)^(parts(b) - parts(a))`.
    pub fn to_basis(&self, target: Basis) -> QSymFn {
        if self.basis == target {
            return self.clone();
        }
        let mut out = QSymFn::zero(target);
        for (alpha, c) in &self.terms {
            let n = alpha.weight();
            let t = alpha.descent_set();
            let free = if n >= 2 { ((1u64 << (n - 1)) - 1) & !t } else { 0 };
            // Refinements of alpha are supersets of its descent set: iterate
            // all submasks of `free` and union them in.
            let mut sub = 0u64;
            loop {
                let beta = Composition::from_descent_set(n, t | sub);
                match (self.basis, target) {
                    (Basis::Fundamental, Basis::Monomial) => out.add_term(beta, c.clone()),
                    (Basis::Monomial, Basis::Fundamental) => {
                        let sign = sub.count_ones() % 2 == 1;
                        out.add_term(beta, if sign { -c } else { c.clone() });
                    }
                    _ => unreachable!(),
                }
                if sub == free {
                    break;
                }
                sub = sub.wrapping_sub(free) & free;
            }
        }
        out
    }

    /// Product of quasisymmetric functions, computed by the quasi-shuffle of
    /// compositions in the monomial basis. The result is in the monomial
    /// basis; convert afterwards if needed.
    pub fn product(&self, other: &QSymFn) -> QSymFn {
        let a = self.to_basis(Basis::Monomial);
        let b = other.to_basis(Basis::Monomial);
        let mut out = QSymFn::zero(Basis::Monomial);
        for (alpha, ca) in &a.terms {
            for (beta, cb) in &b.terms {
                let c = ca * cb;
                for gamma in quasi_shuffle(alpha.parts(), beta.parts()) {
                    out.add_term(gamma, c.clone());
                }
            }
        }
        out
    }

    /// Coproduct by deconcatenation of monomial-basis compositions.
    pub fn coproduct(&self) -> TensorQSym {
        let f = self.to_basis(Basis::Monomial);
        let mut out = TensorQSym::zero(Basis::Monomial);
        for (alpha, c) in &f.terms {
            let parts = alpha.parts();
            for i in 0..=parts.len() {
                let left = Composition::of(&parts[..i]);
                let right = Composition::of(&parts[i..]);
                out.add_term(left, right, c.clone());
            }
        }
        out
    }

    /// The reciprocity involution, acting per graded piece by
    /// `S(L_a) = (-1)^|a| L_(complement of a)`. The result is returned in the
    /// basis of the input.
    ///
    /// This is the sign-and-complement rule classically tied to P-partition
    /// reciprocity: it exchanges the natural and strict enumerators of a
    /// labelled poset. It differs from the convolution inverse of the
    /// identity for the deconcatenation coproduct by the variable-reversal
    /// automorphism (see [`QSymFn::reverse_alphabet`]); the two agree on
    /// reversal-symmetric elements.
    pub fn antipode(&self) -> QSymFn {
        let f = self.to_basis(Basis::Fundamental);
        let mut out = QSymFn::zero(Basis::Fundamental);
        for (alpha, c) in &f.terms {
            let sign = alpha.weight() % 2 == 1;
            out.add_term(alpha.complement(), if sign { -c } else { c.clone() });
        }
        out.to_basis(self.basis)
    }

    /// The algebra automorphism induced by reversing the variable order,
    /// which reverses every composition index (in either basis).
    pub fn reverse_alphabet(&self) -> QSymFn {
        QSymFn::from_terms(
            self.basis,
            self.terms
                .iter()
                .map(|(a, c)| (a.reversed(), c.clone())),
        )
    }

    /// Coefficient of the empty composition (the counit).
    pub fn counit(&self) -> Int {
        self.coeff(&Composition::empty())
    }

    /// Specialization `x_1 = ... = x_m = 1`, rest zero, as an integer-valued
    /// polynomial in `m`: `M_a(1^m) = C(m, parts(a))`.
    pub fn specialize_ones(&self) -> IntValuedPoly {
        let f = self.to_basis(Basis::Monomial);
        let mut coeffs: Vec<Int> = Vec::new();
        for (alpha, c) in &f.terms {
            let k = alpha.num_parts();
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Int::ZERO);
            }
            coeffs[k] += c;
        }
        IntValuedPoly::from_binomial_coeffs(coeffs)
    }

    /// Mathematical equality regardless of basis tags.
    pub fn equivalent(&self, other: &QSymFn) -> bool {
        *self == other.to_basis(self.basis)
    }
}

/// Quasi-shuffles of two part lists: interleavings in which adjacent parts
/// from opposite sides may also merge into their sum.
fn quasi_shuffle(a: &[u32], b: &[u32]) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut prefix: Vec<u32> = Vec::new();
    fn rec(a: &[u32], b: &[u32], prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if a.is_empty() && b.is_empty() {
            out.push(Composition::of(prefix));
            return;
        }
        if !a.is_empty() {
            prefix.push(a[0]);
            rec(&a[1..], b, prefix, out);
            prefix.pop();
        }
        if !b.is_empty() {
            prefix.push(b[0]);
            rec(a, &b[1..], prefix, out);
            prefix.pop();
        }
        if !a.is_empty() && !b.is_empty() {
            prefix.push(a[0] + b[0]);
            rec(&a[1..], &b[1..], prefix, out);
            prefix.pop();
        }
    }
    rec(a, b, &mut prefix, &mut out);
    out
}

/// An element of QSym tensor QSym, sparse over pairs of compositions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorQSym {
    basis: Basis,
    terms: BTreeMap<(Composition, Composition), Int>,
}

impl TensorQSym {
    pub fn zero(basis: Basis) -> TensorQSym {
        TensorQSym {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The simple tensor `f (x) g` (both converted to `basis`).
    pub fn tensor(basis: Basis, f: &QSymFn, g: &QSymFn) -> TensorQSym {
        let f = f.to_basis(basis);
        let g = g.to_basis(basis);
        let mut out = TensorQSym::zero(basis);
        for (a, ca) in f.terms() {
            for (b, cb) in g.terms() {
                out.add_term(a.clone(), b.clone(), ca * cb);
            }
        }
        out
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn add_term(&mut self, left: Composition, right: Composition, c: Int) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &TensorQSym) -> TensorQSym {
        assert_eq!(self.basis, other.basis, "tensor basis mismatch");
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Composition, Composition), &Int)> {
        self.terms.iter()
    }
}

/// An integer-valued polynomial in one variable `m`, stored in the binomial
/// basis: `sum of c_k * C(m, k)`. Evaluation at any integer is exact.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntValuedPoly {
    coeffs: Vec<Int>,
}

impl IntValuedPoly {
    pub fn zero() -> IntValuedPoly {
        IntValuedPoly { coeffs: Vec::new() }
    }

    pub fn from_binomial_coeffs(mut coeffs: Vec<Int>) -> IntValuedPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntValuedPoly { coeffs }
    }

    /// Coefficient of `C(m, k)`.
    pub fn binomial_coeff(&self, k: usize) -> Int {
        self.coeffs.get(k).cloned().unwrap_or(Int::ZERO)
    }

    pub fn binomial_coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, m: i64) -> Int {
        let m = Int::from(m);
        let mut acc = Int::ZERO;
        for (k, c) in self.coeffs.iter().enumerate() {
            acc += &(c * &Int::binomial(&m, k));
        }
        acc
    }

    pub fn add(&self, other: &IntValuedPoly) -> IntValuedPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Int::ZERO; len];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntValuedPoly::from_binomial_coeffs(coeffs)
    }

    pub fn negated(&self) -> IntValuedPoly {
        IntValuedPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for IntValuedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if k == 0 {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}*C(m,{k})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for QSymFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let letter = self.basis.letter();
        let mut first = true;
        for (alpha, c) in &self.terms {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}*{}{}", c.abs(), letter, alpha)?;
        }
        Ok(())
    }
}

/// Error from parsing the canonical text rendering of a [`QSymFn`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseQSymError(pub String);

impl fmt::Display for ParseQSymError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid quasisymmetric function: {}", self.0)
    }
}

impl std::error::Error for ParseQSymError {}

impl FromStr for QSymFn {
    type Err = ParseQSymError;

    /// Parses the canonical rendering, e.g. `3*M[1,2] + 6*M[1,1,1]` or `0`.
    /// All terms must use the same basis letter.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseQSymError("empty input".into()));
        }
        if s == "0" {
            return Ok(QSymFn::zero(Basis::Monomial));
        }
        let mut basis: Option<Basis> = None;
        let mut terms: Vec<(Composition, Int)> = Vec::new();
        // Split on +/- separators that are not inside a coefficient.
        let mut rest = s;
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r.trim_start();
        }
        loop {
            let end = rest
                .find(" + ")
                .into_iter()
                .chain(rest.find(" - "))
                .min()
                .unwrap_or(rest.len());
            let term = rest[..end].trim();
            let (coeff_str, comp_str) = term
                .split_once('*')
                .ok_or_else(|| ParseQSymError(format!("term `{term}` missing `*`")))?;
            let coeff: Int = coeff_str
                .trim()
                .parse()
                .map_err(|_| ParseQSymError(format!("bad coefficient `{coeff_str}`")))?;
            let comp_str = comp_str.trim();
            let b = match comp_str.chars().next() {
                Some('M') => Basis::Monomial,
                Some('L') => Basis::Fundamental,
                _ => return Err(ParseQSymError(format!("bad basis in `{comp_str}`"))),
            };
            if *basis.get_or_insert(b) != b {
                return Err(ParseQSymError("mixed bases".into()));
            }
            let inner = comp_str[1..]
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| ParseQSymError(format!("bad composition in `{comp_str}`")))?;
            let parts: Vec<u32> = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|p| p.trim().parse::<u32>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| ParseQSymError(format!("bad composition in `{comp_str}`")))?
            };
            let alpha = Composition::new(parts)
                .map_err(|e| ParseQSymError(e.to_string()))?;
            terms.push((alpha, coeff * Int::from(sign)));
            if end == rest.len() {
                break;
            }
            sign = if rest[end..].starts_with(" - ") { -1 } else { 1 };
            rest = &rest[end + 3..];
        }
        Ok(QSymFn::from_terms(basis.unwrap_or(Basis::Monomial), terms))
    }
}
