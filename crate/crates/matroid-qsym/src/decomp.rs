//! Base polytope decomposition machinery.
//!
//! A decomposition certificate names a parent matroid and pieces whose base
//! families cover the parent's. The valuation identity states that the
//! invariant of the parent equals the inclusion-exclusion alternating sum of
//! the invariants of all nonempty piece intersections; in the quotient
//! modulo products the intersection terms vanish (they are disconnected,
//! hence products), so decompositions become additive identities between
//! quotient vectors. Searching that additive semigroup decides
//! indecomposability and yields Hilbert bases for small instances.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::int::Int;
use crate::invariant;
use crate::linalg::positive_functional;
use crate::matroid::{intersect, ElemSet, Matroid, MatroidError};
use crate::qsym::{QSymFn, QuotientError, QuotientPresentation, QuotientVector};

#[derive(Debug)]
pub enum DecompError {
    /// A nonempty intersection of pieces violates the matroid axioms, or
    /// the pieces do not cover the parent.
    InvalidCertificate(String),
    Matroid(MatroidError),
    Quotient(QuotientError),
}

impl fmt::Display for DecompError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompError::InvalidCertificate(msg) => write!(f, "invalid certificate: {msg}"),
            DecompError::Matroid(e) => write!(f, "{e}"),
            DecompError::Quotient(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for DecompError {}

impl From<MatroidError> for DecompError {
    fn from(e: MatroidError) -> Self {
        DecompError::Matroid(e)
    }
}

impl From<QuotientError> for DecompError {
    fn from(e: QuotientError) -> Self {
        DecompError::Quotient(e)
    }
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    parent: serde_json::Value,
    pieces: Vec<serde_json::Value>,
}

/// A claimed decomposition: pieces of the same ground set and rank whose
/// base families are contained in and jointly cover the parent's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionCertificate {
    parent: Matroid,
    pieces: Vec<Matroid>,
}

impl DecompositionCertificate {
    pub fn new(
        parent: Matroid,
        pieces: Vec<Matroid>,
    ) -> Result<DecompositionCertificate, DecompError> {
        if pieces.is_empty() {
            return Err(DecompError::InvalidCertificate("no pieces".into()));
        }
        let mut covered: BTreeSet<ElemSet> = BTreeSet::new();
        for (i, piece) in pieces.iter().enumerate() {
            if piece.ground_size() != parent.ground_size() || piece.rank() != parent.rank() {
                return Err(DecompError::InvalidCertificate(format!(
                    "piece {i} does not match the parent's ground set and rank"
                )));
            }
            for &b in piece.bases() {
                if !parent.is_base(b) {
                    return Err(DecompError::InvalidCertificate(format!(
                        "piece {i} has a base outside the parent"
                    )));
                }
                covered.insert(b);
            }
        }
        if covered.len() != parent.num_bases() {
            return Err(DecompError::InvalidCertificate(
                "pieces do not cover the parent's bases".into(),
            ));
        }
        Ok(DecompositionCertificate { parent, pieces })
    }

    pub fn parent(&self) -> &Matroid {
        &self.parent
    }

    pub fn pieces(&self) -> &[Matroid] {
        &self.pieces
    }

    pub fn to_json(&self) -> String {
        let raw = CertificateJson {
            parent: serde_json::from_str(&self.parent.to_json()).expect("valid json"),
            pieces: self
                .pieces
                .iter()
                .map(|p| serde_json::from_str(&p.to_json()).expect("valid json"))
                .collect(),
        };
        serde_json::to_string(&raw).expect("serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<DecompositionCertificate, DecompError> {
        let raw: CertificateJson = serde_json::from_str(s)
            .map_err(|e| DecompError::InvalidCertificate(e.to_string()))?;
        let parent = Matroid::from_json(&raw.parent.to_string())?;
        let pieces = raw
            .pieces
            .iter()
            .map(|p| Matroid::from_json(&p.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        DecompositionCertificate::new(parent, pieces)
    }
}

/// The image of the invariant in the degree-`n` quotient lattice.
pub fn bar_f(
    m: &Matroid,
    pres: &QuotientPresentation,
) -> Result<QuotientVector, DecompError> {
    let inv = invariant::f(m)?;
    Ok(pres.project(&inv)?)
}

/// Verifies the alternating-sum valuation identity over all nonempty
/// intersections of certificate pieces. Every nonempty intersection must
/// itself be a matroid; otherwise the certificate is rejected.
pub fn check_valuation(cert: &DecompositionCertificate) -> Result<bool, DecompError> {
    let t = cert.pieces.len();
    let mut rhs = QSymFn::zero(crate::qsym::Basis::Fundamental);
    for pick in 1u64..(1 << t) {
        let chosen: Vec<&Matroid> = (0..t)
            .filter(|i| pick & (1 << i) != 0)
            .map(|i| &cert.pieces[i])
            .collect();
        let meet = match intersect_all(&chosen)? {
            Some(m) => m,
            None => continue,
        };
        let sign = Int::from(if pick.count_ones() % 2 == 1 { 1 } else { -1 });
        rhs = rhs.add(&invariant::f(&meet)?.scaled(&sign));
    }
    Ok(invariant::f(&cert.parent)?.equivalent(&rhs))
}

/// Intersects a family of pieces; `Ok(None)` when the common family is
/// empty, an invalid-certificate error when it is nonempty but fails the
/// exchange axiom.
fn intersect_all(pieces: &[&Matroid]) -> Result<Option<Matroid>, DecompError> {
    let mut current = pieces[0].clone();
    for (step, piece) in pieces.iter().enumerate().skip(1) {
        let (family, matroid) = intersect(&current, piece)?;
        if family.is_empty() {
            return Ok(None);
        }
        current = matroid.ok_or_else(|| {
            DecompError::InvalidCertificate(format!(
                "intersection of {} pieces is nonempty but not a matroid",
                step + 1
            ))
        })?;
    }
    Ok(Some(current))
}

/// Ground-set cap for the split search.
pub const SPLIT_SEARCH_LIMIT: usize = 10;

/// Searches for two-piece decompositions cut out by a threshold on the
/// intersection size with a ground subset: pieces `{B : |B & S| <= k}` and
/// `{B : |B & S| >= k}`.
///
/// A candidate pair is kept when both pieces are proper sub-families that
/// are matroids of the same polytope dimension as the parent, their common
/// family is a matroid of strictly smaller dimension, and the valuation
/// identity holds. Results are deduplicated as unordered pairs.
pub fn find_hyperplane_splits(
    m: &Matroid,
) -> Result<Vec<DecompositionCertificate>, DecompError> {
    let n = m.ground_size();
    if n > SPLIT_SEARCH_LIMIT {
        return Err(DecompError::Matroid(MatroidError::SizeLimit(format!(
            "split search limited to {SPLIT_SEARCH_LIMIT} elements"
        ))));
    }
    let parent_seps = m.num_separators();
    let mut seen: BTreeSet<Vec<Vec<ElemSet>>> = BTreeSet::new();
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let ground: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    // Fixing element 1 inside S covers each complementary pair once.
    for s in 1..=ground {
        if s & 1 == 0 || s == ground {
            continue;
        }
        for k in 1..m.rank() as u32 {
            let fam1: Vec<ElemSet> = m
                .bases()
                .iter()
                .copied()
                .filter(|b| (b & s).count_ones() <= k)
                .collect();
            let fam2: Vec<ElemSet> = m
                .bases()
                .iter()
                .copied()
                .filter(|b| (b & s).count_ones() >= k)
                .collect();
            if fam1.len() == m.num_bases()
                || fam2.len() == m.num_bases()
                || fam1.is_empty()
                || fam2.is_empty()
            {
                continue;
            }
            let Ok(p1) = Matroid::from_masks(n, fam1) else { continue };
            let Ok(p2) = Matroid::from_masks(n, fam2) else { continue };
            if p1.num_separators() != parent_seps || p2.num_separators() != parent_seps {
                continue;
            }
            let (common, common_matroid) = intersect(&p1, &p2)?;
            if common.is_empty() {
                continue;
            }
            let Some(meet) = common_matroid else { continue };
            if meet.num_separators() <= parent_seps {
                continue;
            }
            let mut key: Vec<Vec<ElemSet>> =
                vec![p1.bases().to_vec(), p2.bases().to_vec()];
            key.sort();
            if !seen.insert(key) {
                continue;
            }
            let cert = DecompositionCertificate::new(m.clone(), vec![p1, p2])?;
            if check_valuation(&cert)? {
                out.push(cert);
            }
        }
    }
    Ok(out)
}

/// A labelled family of quotient vectors generating an additive semigroup.
#[derive(Clone, Debug)]
pub struct SemigroupInstance {
    degree: usize,
    generators: Vec<(String, QuotientVector)>,
}

impl SemigroupInstance {
    pub fn new(
        degree: usize,
        generators: Vec<(String, QuotientVector)>,
    ) -> Result<SemigroupInstance, DecompError> {
        if let Some((label, v)) = generators.iter().find(|(_, v)| v.degree() != degree) {
            return Err(DecompError::InvalidCertificate(format!(
                "generator {label} has degree {}, expected {degree}",
                v.degree()
            )));
        }
        Ok(SemigroupInstance { degree, generators })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[(String, QuotientVector)] {
        &self.generators
    }
}

/// Result of a bounded decomposition search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// Generator indices (with multiplicity) summing to the target.
    Found(Vec<usize>),
    /// The bounded space was exhausted; no representation exists within
    /// `max_terms`.
    NoneWithinBound,
    /// The node budget ran out before the space was exhausted.
    BudgetExhausted,
}

/// Default node budget for the decomposition search.
pub const SEARCH_NODE_BUDGET: u64 = 5_000_000;

/// Searches for a representation of `target` as a sum of at least two
/// generators (repetition allowed), depth-first over multisets in index
/// order, with exact integer arithmetic.
///
/// When a strictly positive functional on the generators exists it is used
/// to prune and to guarantee termination; otherwise the search falls back
/// to the raw node budget.
pub fn decomposable_search(
    target: &QuotientVector,
    instance: &SemigroupInstance,
    max_terms: usize,
) -> SearchOutcome {
    decomposable_search_with_budget(target, instance, max_terms, SEARCH_NODE_BUDGET)
}

pub fn decomposable_search_with_budget(
    target: &QuotientVector,
    instance: &SemigroupInstance,
    max_terms: usize,
    node_budget: u64,
) -> SearchOutcome {
    let gens: Vec<(usize, &QuotientVector)> = instance
        .generators
        .iter()
        .enumerate()
        .filter(|(_, (_, v))| !v.is_zero())
        .map(|(i, (_, v))| (i, v))
        .collect();
    let dim = target.coords().len();
    let gen_vecs: Vec<Vec<Int>> = gens.iter().map(|(_, v)| v.coords().to_vec()).collect();
    let phi = positive_functional(&gen_vecs);
    let phi_values: Option<Vec<Int>> = phi.as_ref().map(|phi| {
        gen_vecs
            .iter()
            .map(|g| g.iter().zip(phi).map(|(a, b)| a * b).sum())
            .collect()
    });
    let phi_target: Option<Int> = phi
        .as_ref()
        .map(|phi| target.coords().iter().zip(phi).map(|(a, b)| a * b).sum());

    struct Ctx<'a> {
        gens: &'a [Vec<Int>],
        phi_values: Option<&'a [Int]>,
        nodes: u64,
        budget: u64,
        failed: HashSet<(Vec<Int>, usize)>,
        exhausted: bool,
    }

    fn rec(
        ctx: &mut Ctx,
        remaining: &[Int],
        remaining_phi: Option<&Int>,
        start: usize,
        terms: usize,
        max_terms: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if remaining.iter().all(|c| c.is_zero()) {
            return terms >= 2;
        }
        if terms >= max_terms {
            return false;
        }
        if ctx.nodes >= ctx.budget {
            ctx.exhausted = true;
            return false;
        }
        ctx.nodes += 1;
        if let Some(rp) = remaining_phi {
            if rp < &Int::ONE {
                return false;
            }
        }
        let key = (remaining.to_vec(), start);
        if ctx.failed.contains(&key) {
            return false;
        }
        for gi in start..ctx.gens.len() {
            let next: Vec<Int> = remaining
                .iter()
                .zip(&ctx.gens[gi])
                .map(|(a, b)| a - b)
                .collect();
            let next_phi = match (&ctx.phi_values, remaining_phi) {
                (Some(values), Some(rp)) => {
                    let np = rp - &values[gi];
                    if np.is_negative() {
                        continue;
                    }
                    Some(np)
                }
                _ => None,
            };
            chosen.push(gi);
            if rec(ctx, &next, next_phi.as_ref(), gi, terms + 1, max_terms, chosen) {
                return true;
            }
            chosen.pop();
        }
        if !ctx.exhausted {
            ctx.failed.insert(key);
        }
        false
    }

    if dim == 0 {
        // A rank-zero quotient has no nonzero generators to sum.
        return SearchOutcome::NoneWithinBound;
    }

    let mut ctx = Ctx {
        gens: &gen_vecs,
        phi_values: phi_values.as_deref(),
        nodes: 0,
        budget: node_budget,
        failed: HashSet::new(),
        exhausted: false,
    };
    let mut chosen = Vec::new();
    let found = rec(
        &mut ctx,
        target.coords(),
        phi_target.as_ref(),
        0,
        0,
        max_terms,
        &mut chosen,
    );
    if found {
        // Verify the witness sums exactly to the target.
        let mut acc = vec![Int::ZERO; dim];
        for &gi in &chosen {
            for (a, b) in acc.iter_mut().zip(&gen_vecs[gi]) {
                *a += b;
            }
        }
        debug_assert_eq!(acc, target.coords());
        SearchOutcome::Found(chosen.iter().map(|&gi| gens[gi].0).collect())
    } else if ctx.exhausted {
        SearchOutcome::BudgetExhausted
    } else {
        SearchOutcome::NoneWithinBound
    }
}

/// Indices of the generators whose vectors cannot be written as a sum of
/// two or more generators: the Hilbert basis of the generated semigroup
/// when the generators span it.
pub fn hilbert_basis(
    instance: &SemigroupInstance,
    max_terms: usize,
) -> Result<Vec<usize>, DecompError> {
    let mut decomposability: HashMap<Vec<Int>, bool> = HashMap::new();
    let mut out = Vec::new();
    for (i, (label, v)) in instance.generators.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let key = v.coords().to_vec();
        let decomposable = match decomposability.get(&key) {
            Some(&d) => d,
            None => {
                let d = match decomposable_search(v, instance, max_terms) {
                    SearchOutcome::Found(_) => true,
                    SearchOutcome::NoneWithinBound => false,
                    SearchOutcome::BudgetExhausted => {
                        return Err(DecompError::InvalidCertificate(format!(
                            "search budget exhausted while deciding generator {label}"
                        )))
                    }
                };
                decomposability.insert(key, d);
                d
            }
        };
        if !decomposable {
            out.push(i);
        }
    }
    Ok(out)
}
