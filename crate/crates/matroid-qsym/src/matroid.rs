//! Matroids on ground set `{1, ..., n}` represented by their base families.
//!
//! Bases are stored as bitmasks (bit `e-1` for element `e`); every
//! constructor validates the exchange axiom and reports a witness triple on
//! failure. Minors, duality, connectivity, weight optimization, the
//! base-exchange posets, freedom matroids, isomorphism testing and small
//! catalog enumeration all live here.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::int::Int;
use crate::poset::{LabelledPoset, PosetError, SigmaString};

/// A set of ground elements as a bitmask; bit `e-1` stands for element `e`.
pub type ElemSet = u32;

pub fn elems_to_mask(elems: &[usize]) -> ElemSet {
    elems.iter().fold(0, |m, &e| {
        assert!(e >= 1 && e <= 32, "element out of range");
        m | (1 << (e - 1))
    })
}

pub fn mask_to_elems(mask: ElemSet) -> Vec<usize> {
    (0..32).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatroidError {
    EmptyFamily,
    UnequalCardinality,
    ElementOutOfRange { element: usize, n: usize },
    /// Exchange axiom fails: no valid exchange for `element` of `base`
    /// against `other`.
    ExchangeFailure { base: Vec<usize>, other: Vec<usize>, element: usize },
    RankMismatch,
    GroundSetMismatch,
    SizeLimit(String),
    WrongRank { expected: usize, got: usize },
    HasLoops,
    NotABase,
    Poset(PosetError),
    Parse(String),
}

impl fmt::Display for MatroidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatroidError::EmptyFamily => write!(f, "base family is empty"),
            MatroidError::UnequalCardinality => write!(f, "bases differ in cardinality"),
            MatroidError::ElementOutOfRange { element, n } => {
                write!(f, "element {element} outside ground set [{n}]")
            }
            MatroidError::ExchangeFailure { base, other, element } => write!(
                f,
                "exchange axiom fails for bases {base:?}, {other:?} at element {element}"
            ),
            MatroidError::RankMismatch => write!(f, "matroids must have equal rank"),
            MatroidError::GroundSetMismatch => write!(f, "matroids must share a ground set"),
            MatroidError::SizeLimit(msg) => write!(f, "size limit exceeded: {msg}"),
            MatroidError::WrongRank { expected, got } => {
                write!(f, "expected rank {expected}, got {got}")
            }
            MatroidError::HasLoops => write!(f, "matroid has loops"),
            MatroidError::NotABase => write!(f, "the given set is not a base"),
            MatroidError::Poset(e) => write!(f, "{e}"),
            MatroidError::Parse(msg) => write!(f, "invalid matroid: {msg}"),
        }
    }
}

impl std::error::Error for MatroidError {}

impl From<PosetError> for MatroidError {
    fn from(e: PosetError) -> Self {
        MatroidError::Poset(e)
    }
}

#[derive(Serialize, Deserialize)]
struct MatroidJson {
    n: usize,
    bases: Vec<Vec<usize>>,
}

/// A matroid given by its base family on ground set `{1, ..., n}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Matroid {
    n: usize,
    rank: usize,
    /// Sorted, deduplicated base bitmasks.
    bases: Vec<ElemSet>,
}

impl Matroid {
    /// Validates and builds a matroid from explicit bases.
    pub fn from_bases(n: usize, bases: &[Vec<usize>]) -> Result<Matroid, MatroidError> {
        let mut masks = Vec::with_capacity(bases.len());
        for base in bases {
            for &e in base {
                if e < 1 || e > n {
                    return Err(MatroidError::ElementOutOfRange { element: e, n });
                }
            }
            masks.push(elems_to_mask(base));
        }
        Matroid::from_masks(n, masks)
    }

    pub fn from_masks(n: usize, mut masks: Vec<ElemSet>) -> Result<Matroid, MatroidError> {
        assert!(n <= 32, "ground sets are limited to 32 elements");
        masks.sort_unstable();
        masks.dedup();
        if masks.is_empty() {
            return Err(MatroidError::EmptyFamily);
        }
        let rank = masks[0].count_ones() as usize;
        if masks.iter().any(|m| m.count_ones() as usize != rank) {
            return Err(MatroidError::UnequalCardinality);
        }
        if let Some((b1, b2, e)) = exchange_violation(&masks) {
            return Err(MatroidError::ExchangeFailure {
                base: mask_to_elems(b1),
                other: mask_to_elems(b2),
                element: e,
            });
        }
        Ok(Matroid { n, rank, bases: masks })
    }

    /// The rank-0 matroid on `n` elements (every element a loop).
    pub fn loops(n: usize) -> Matroid {
        Matroid { n, rank: 0, bases: vec![0] }
    }

    /// The free matroid on `n` elements (every element an isthmus).
    pub fn free(n: usize) -> Matroid {
        Matroid {
            n,
            rank: n,
            bases: vec![if n == 32 { u32::MAX } else { (1 << n) - 1 }],
        }
    }

    /// The uniform matroid of rank `r` on `n` elements.
    pub fn uniform(r: usize, n: usize) -> Matroid {
        let bases: Vec<ElemSet> = subsets_of_size(n, r);
        Matroid { n, rank: r, bases }
    }

    pub fn empty() -> Matroid {
        Matroid::loops(0)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn corank(&self) -> usize {
        self.n - self.rank
    }

    pub fn bases(&self) -> &[ElemSet] {
        &self.bases
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    pub fn bases_as_sets(&self) -> Vec<Vec<usize>> {
        self.bases.iter().map(|&m| mask_to_elems(m)).collect()
    }

    pub fn is_base(&self, mask: ElemSet) -> bool {
        self.bases.binary_search(&mask).is_ok()
    }

    fn ground_mask(&self) -> ElemSet {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    /// Rank of a subset: the largest intersection with a base.
    pub fn rank_of(&self, set: ElemSet) -> usize {
        self.bases
            .iter()
            .map(|b| (b & set).count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn is_independent(&self, set: ElemSet) -> bool {
        self.rank_of(set) == set.count_ones() as usize
    }

    /// Elements appearing in no base.
    pub fn loop_elements(&self) -> Vec<usize> {
        let union = self.bases.iter().fold(0u32, |m, b| m | b);
        mask_to_elems(self.ground_mask() & !union)
    }

    /// Elements appearing in every base.
    pub fn coloop_elements(&self) -> Vec<usize> {
        let inter = self.bases.iter().fold(self.ground_mask(), |m, b| m & b);
        mask_to_elems(inter)
    }

    /// A matroid splits completely when it is a direct sum of loops and
    /// isthmuses, equivalently when it has exactly one base.
    pub fn splits_completely(&self) -> bool {
        self.bases.len() == 1
    }

    pub fn dual(&self) -> Matroid {
        let g = self.ground_mask();
        let mut bases: Vec<ElemSet> = self.bases.iter().map(|b| g & !b).collect();
        bases.sort_unstable();
        Matroid {
            n: self.n,
            rank: self.n - self.rank,
            bases,
        }
    }

    pub fn direct_sum(&self, other: &Matroid) -> Matroid {
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &b1 in &self.bases {
            for &b2 in &other.bases {
                bases.push(b1 | (b2 << self.n));
            }
        }
        bases.sort_unstable();
        Matroid {
            n: self.n + other.n,
            rank: self.rank + other.rank,
            bases,
        }
    }

    /// Restriction to `set`, relabelled onto `{1, ..., |set|}` preserving
    /// element order.
    pub fn restrict(&self, set: ElemSet) -> Matroid {
        let r = self.rank_of(set);
        let mut bases: Vec<ElemSet> = self
            .bases
            .iter()
            .filter(|b| (*b & set).count_ones() as usize == r)
            .map(|b| compress_mask(b & set, set))
            .collect();
        bases.sort_unstable();
        bases.dedup();
        Matroid {
            n: set.count_ones() as usize,
            rank: r,
            bases,
        }
    }

    pub fn delete(&self, set: ElemSet) -> Matroid {
        self.restrict(self.ground_mask() & !set)
    }

    /// Contraction of `set`, on the remaining elements relabelled onto
    /// `{1, ..., n - |set|}`.
    pub fn contract(&self, set: ElemSet) -> Matroid {
        let keep = self.ground_mask() & !set;
        let ra = self.rank_of(set);
        let mut bases: Vec<ElemSet> = self
            .bases
            .iter()
            .filter(|b| (*b & set).count_ones() as usize == ra)
            .map(|b| compress_mask(b & keep, keep))
            .collect();
        bases.sort_unstable();
        bases.dedup();
        Matroid {
            n: keep.count_ones() as usize,
            rank: self.rank - ra,
            bases,
        }
    }

    /// The subquotient `(M restricted to outer) contracted by inner`, for
    /// `inner` a subset of `outer`.
    pub fn minor(&self, outer: ElemSet, inner: ElemSet) -> Matroid {
        debug_assert_eq!(inner & !outer, 0, "inner must lie inside outer");
        self.restrict(outer).contract(compress_mask(inner, outer))
    }

    /// The finest partition of the ground set into separators, computed as
    /// the connected components of the single-exchange relation.
    pub fn min_separators(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &b in &self.bases {
            for e in 0..n {
                if b & (1 << e) == 0 {
                    continue;
                }
                for f in 0..n {
                    if b & (1 << f) != 0 {
                        continue;
                    }
                    let swapped = (b & !(1 << e)) | (1 << f);
                    if self.is_base(swapped) {
                        let (re, rf) = (find(&mut parent, e), find(&mut parent, f));
                        parent[re] = rf;
                    }
                }
            }
        }
        let mut comps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for e in 0..n {
            let root = find(&mut parent, e);
            comps.entry(root).or_default().push(e + 1);
        }
        let mut out: Vec<Vec<usize>> = comps.into_values().collect();
        out.sort();
        out
    }

    pub fn num_separators(&self) -> usize {
        self.min_separators().len()
    }

    pub fn is_connected(&self) -> bool {
        self.num_separators() == 1
    }

    /// Minimum weight over all bases together with the achieving bases.
    pub fn min_weight_bases(&self, f: &WeightFunction) -> (u64, Vec<ElemSet>) {
        assert_eq!(f.len(), self.n, "weight function must cover the ground set");
        let mut best = u64::MAX;
        let mut winners = Vec::new();
        for &b in &self.bases {
            let w = f.weight_of(b);
            if w < best {
                best = w;
                winners.clear();
            }
            if w == best {
                winners.push(b);
            }
        }
        (best, winners)
    }

    /// Is the minimum weight achieved by a unique base?
    pub fn is_generic(&self, f: &WeightFunction) -> bool {
        self.min_weight_bases(f).1.len() == 1
    }

    /// Builds one minimum-weight base greedily: scan elements by increasing
    /// weight (ties by element order) and keep those that stay independent.
    pub fn greedy_min_base(&self, f: &WeightFunction) -> ElemSet {
        assert_eq!(f.len(), self.n);
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&e| (f.values()[e], e));
        let mut current: ElemSet = 0;
        for e in order {
            let candidate = current | (1 << e);
            if self.is_independent(candidate) {
                current = candidate;
            }
        }
        current
    }

    /// The exchange poset of a base: ground elements as labels, with
    /// `e < e'` when `e` is in the base, `e'` is not, and swapping them
    /// gives another base.
    pub fn base_poset(&self, base: ElemSet) -> Result<LabelledPoset, MatroidError> {
        if !self.is_base(base) {
            return Err(MatroidError::NotABase);
        }
        let mut rels = Vec::new();
        for e in 0..self.n {
            if base & (1 << e) == 0 {
                continue;
            }
            for x in 0..self.n {
                if base & (1 << x) != 0 {
                    continue;
                }
                let swapped = (base & !(1 << e)) | (1 << x);
                if self.is_base(swapped) {
                    rels.push((e as u32 + 1, x as u32 + 1));
                }
            }
        }
        Ok(LabelledPoset::from_relations(
            (1..=self.n as u32).collect(),
            &rels,
        )?)
    }

    /// Multiset of parallel-class sizes of a loopless rank-2 matroid,
    /// sorted decreasing.
    pub fn lambda_partition(&self) -> Result<Vec<usize>, MatroidError> {
        if self.rank != 2 {
            return Err(MatroidError::WrongRank { expected: 2, got: self.rank });
        }
        if !self.loop_elements().is_empty() {
            return Err(MatroidError::HasLoops);
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in 0..self.n {
            for f in e + 1..self.n {
                let pair = (1 << e) | (1 << f);
                if !self.is_base(pair) {
                    let (re, rf) = (find(&mut parent, e), find(&mut parent, f));
                    parent[re] = rf;
                }
            }
        }
        let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
        for e in 0..self.n {
            *sizes.entry(find(&mut parent, e)).or_insert(0) += 1;
        }
        let mut out: Vec<usize> = sizes.into_values().collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        Ok(out)
    }

    /// Corank-nullity sum over all subsets:
    /// `T(x,y) = sum over A of (x-1)^(r - r(A)) (y-1)^(|A| - r(A))`.
    pub fn tutte(&self) -> Result<BiPoly, MatroidError> {
        if self.n > 16 {
            return Err(MatroidError::SizeLimit(format!(
                "tutte polynomial limited to 16 elements, got {}",
                self.n
            )));
        }
        let mut counts: BTreeMap<(usize, usize), Int> = BTreeMap::new();
        for set in 0..=self.ground_mask() {
            let ra = self.rank_of(set);
            let key = (self.rank - ra, set.count_ones() as usize - ra);
            *counts.entry(key).or_insert(Int::ZERO) += Int::ONE;
            if self.n == 0 {
                break;
            }
        }
        let mut poly = BiPoly::zero();
        for ((a, b), c) in counts {
            // (x-1)^a (y-1)^b expanded binomially.
            for i in 0..=a {
                for j in 0..=b {
                    let sign = if (a - i + b - j) % 2 == 1 { -Int::ONE } else { Int::ONE };
                    let coeff = &(&c * &Int::binomial(&Int::from(a), i))
                        * &(&Int::binomial(&Int::from(b), j) * &sign);
                    poly.add_term(i as u32, j as u32, coeff);
                }
            }
        }
        Ok(poly)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&MatroidJson {
            n: self.n,
            bases: self.bases_as_sets(),
        })
        .expect("serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Matroid, MatroidError> {
        let raw: MatroidJson =
            serde_json::from_str(s).map_err(|e| MatroidError::Parse(e.to_string()))?;
        Matroid::from_bases(raw.n, &raw.bases)
    }
}

/// A positive integer weighting of the ground set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightFunction {
    values: Vec<u64>,
}

impl WeightFunction {
    pub fn new(values: Vec<u64>) -> Result<WeightFunction, MatroidError> {
        if values.iter().any(|&v| v == 0) {
            return Err(MatroidError::Parse("weights must be positive".into()));
        }
        Ok(WeightFunction { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn weight_of(&self, set: ElemSet) -> u64 {
        (0..self.values.len())
            .filter(|e| set & (1 << e) != 0)
            .map(|e| self.values[e])
            .sum()
    }
}

/// All size-`k` subsets of `{1,...,n}` as ascending masks.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<ElemSet> {
    let mut out = Vec::new();
    let top = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    for mask in 0..=top {
        if mask.count_ones() as usize == k {
            out.push(mask);
        }
        if n == 0 {
            break;
        }
    }
    out
}

/// All size-`k` submasks of `pool`, ascending.
pub fn subsets_of_mask(pool: ElemSet, k: usize) -> Vec<ElemSet> {
    let bits: Vec<u32> = (0..32).filter(|i| pool & (1 << i) != 0).collect();
    subsets_of_size(bits.len(), k)
        .into_iter()
        .map(|small| {
            let mut out = 0u32;
            for (pos, &b) in bits.iter().enumerate() {
                if small & (1 << pos) != 0 {
                    out |= 1 << b;
                }
            }
            out
        })
        .collect()
}

/// First base-exchange violation in a sorted family, if any.
fn exchange_violation(masks: &[ElemSet]) -> Option<(ElemSet, ElemSet, usize)> {
    for &b1 in masks {
        for &b2 in masks {
            let leaving = b1 & !b2;
            let mut e_bits = leaving;
            while e_bits != 0 {
                let e = e_bits.trailing_zeros();
                e_bits &= e_bits - 1;
                let without = b1 & !(1 << e);
                let mut ok = false;
                let mut f_bits = b2 & !b1;
                while f_bits != 0 {
                    let f = f_bits.trailing_zeros();
                    f_bits &= f_bits - 1;
                    if masks.binary_search(&(without | (1 << f))).is_ok() {
                        ok = true;
                        break;
                    }
                }
                if !ok {
                    return Some((b1, b2, e as usize + 1));
                }
            }
        }
    }
    None
}

fn compress_mask(mask: ElemSet, keep: ElemSet) -> ElemSet {
    let mut out = 0u32;
    let mut pos = 0;
    for i in 0..32 {
        if keep & (1 << i) != 0 {
            if mask & (1 << i) != 0 {
                out |= 1 << pos;
            }
            pos += 1;
        }
    }
    out
}

/// Intersection of base families of two matroids of equal rank on the same
/// ground set. Returns the common family and, when it satisfies the
/// exchange axiom, the matroid it defines. An empty intersection yields
/// `(vec![], None)`.
pub fn intersect(
    m1: &Matroid,
    m2: &Matroid,
) -> Result<(Vec<ElemSet>, Option<Matroid>), MatroidError> {
    if m1.n != m2.n {
        return Err(MatroidError::GroundSetMismatch);
    }
    if m1.rank != m2.rank {
        return Err(MatroidError::RankMismatch);
    }
    let common: Vec<ElemSet> = m1
        .bases
        .iter()
        .copied()
        .filter(|b| m2.is_base(*b))
        .collect();
    if common.is_empty() {
        return Ok((common, None));
    }
    let matroid = Matroid::from_masks(m1.n, common.clone()).ok();
    Ok((common, matroid))
}

/// Extension by an isthmus: the new element belongs to every base.
pub fn add_isthmus(m: &Matroid) -> Matroid {
    m.direct_sum(&Matroid::free(1))
}

/// Principal extension along the improper flat: the new element is added
/// generically without raising the rank. New bases are every independent
/// set of size `rank - 1` together with the new element; on a rank-0
/// matroid this adds a loop.
pub fn add_free_element(m: &Matroid) -> Matroid {
    let new_bit = 1u32 << m.n;
    let mut bases: BTreeSet<ElemSet> = m.bases.iter().copied().collect();
    if m.rank >= 1 {
        for &b in &m.bases {
            let mut bits = b;
            while bits != 0 {
                let e = bits.trailing_zeros();
                bits &= bits - 1;
                bases.insert((b & !(1 << e)) | new_bit);
            }
        }
    }
    Matroid {
        n: m.n + 1,
        rank: m.rank,
        bases: bases.into_iter().collect(),
    }
}

/// The freedom matroid of a binary string: starting from the empty matroid,
/// each 0 adds an isthmus and each 1 adds a free element.
pub fn freedom_matroid(sigma: &SigmaString) -> Matroid {
    let mut m = Matroid::empty();
    for &bit in sigma.bits() {
        m = if bit { add_free_element(&m) } else { add_isthmus(&m) };
    }
    m
}

/// The same matroid built directly from the blocks of the string: bases are
/// the rank-sized sets taking at most `z_1 + ... + z_i` elements from the
/// union of the first `i` blocks.
pub fn freedom_matroid_direct(sigma: &SigmaString) -> Matroid {
    let bz = sigma.blocks_and_z();
    let n = sigma.len();
    let rank: usize = bz.z.iter().sum();
    let mut flat_masks = Vec::new();
    let mut caps = Vec::new();
    let mut acc_mask = 0u32;
    let mut acc_cap = 0usize;
    for (&(s, e), &z) in bz.blocks.iter().zip(&bz.z) {
        for pos in s..=e {
            acc_mask |= 1 << (pos - 1);
        }
        acc_cap += z;
        flat_masks.push(acc_mask);
        caps.push(acc_cap);
    }
    let bases: Vec<ElemSet> = subsets_of_size(n, rank)
        .into_iter()
        .filter(|&b| {
            flat_masks
                .iter()
                .zip(&caps)
                .all(|(&fm, &cap)| (b & fm).count_ones() as usize <= cap)
        })
        .collect();
    Matroid { n, rank, bases }
}

/// Ground-set size limit for isomorphism search.
pub const ISO_LIMIT: usize = 9;

/// Searches for a relabelling of `a` onto `b`, returning the permutation
/// (position `i` holds the image of element `i+1`) if one exists.
pub fn isomorphism(a: &Matroid, b: &Matroid) -> Result<Option<Vec<usize>>, MatroidError> {
    if a.n > ISO_LIMIT || b.n > ISO_LIMIT {
        return Err(MatroidError::SizeLimit(format!(
            "isomorphism search limited to {ISO_LIMIT} elements"
        )));
    }
    if a.n != b.n || a.rank != b.rank || a.bases.len() != b.bases.len() {
        return Ok(None);
    }
    let n = a.n;
    let pa = pair_profile(a);
    let pb = pair_profile(b);
    let ia = incidence(a);
    let ib = incidence(b);
    {
        let mut sa = ia.clone();
        let mut sb = ib.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return Ok(None);
        }
    }
    // Backtracking assignment with incidence and pairwise pruning.
    let mut image: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    fn rec(
        e: usize,
        n: usize,
        a: &Matroid,
        b: &Matroid,
        ia: &[usize],
        ib: &[usize],
        pa: &Vec<Vec<usize>>,
        pb: &Vec<Vec<usize>>,
        image: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if e == n {
            let mut mapped: Vec<ElemSet> = a
                .bases
                .iter()
                .map(|&bm| {
                    let mut out = 0u32;
                    for x in 0..n {
                        if bm & (1 << x) != 0 {
                            out |= 1 << image[x].unwrap();
                        }
                    }
                    out
                })
                .collect();
            mapped.sort_unstable();
            return mapped == b.bases;
        }
        for v in 0..n {
            if used[v] || ia[e] != ib[v] {
                continue;
            }
            if (0..e).any(|x| pa[e][x] != pb[v][image[x].unwrap()]) {
                continue;
            }
            image[e] = Some(v);
            used[v] = true;
            if rec(e + 1, n, a, b, ia, ib, pa, pb, image, used) {
                return true;
            }
            image[e] = None;
            used[v] = false;
        }
        false
    }
    if rec(0, n, a, b, &ia, &ib, &pa, &pb, &mut image, &mut used) {
        Ok(Some(image.into_iter().map(|v| v.unwrap() + 1).collect()))
    } else {
        Ok(None)
    }
}

pub fn is_isomorphic(a: &Matroid, b: &Matroid) -> Result<bool, MatroidError> {
    Ok(isomorphism(a, b)?.is_some())
}

fn incidence(m: &Matroid) -> Vec<usize> {
    (0..m.n)
        .map(|e| m.bases.iter().filter(|b| *b & (1 << e) != 0).count())
        .collect()
}

fn pair_profile(m: &Matroid) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0usize; m.n]; m.n];
    for &b in &m.bases {
        for e in 0..m.n {
            if b & (1 << e) == 0 {
                continue;
            }
            for f in 0..m.n {
                if f != e && b & (1 << f) != 0 {
                    out[e][f] += 1;
                }
            }
        }
    }
    out
}

/// Invariant fingerprint used to bucket isomorphism classes.
fn iso_signature(m: &Matroid) -> (usize, usize, Vec<usize>, Vec<Vec<usize>>) {
    let mut inc = incidence(m);
    inc.sort_unstable();
    let mut rows: Vec<Vec<usize>> = pair_profile(m)
        .into_iter()
        .map(|mut row| {
            row.sort_unstable();
            row
        })
        .collect();
    rows.sort();
    (m.rank, m.bases.len(), inc, rows)
}

/// Feasibility cap: direct subset search requires `C(n, r) <= 20`.
const ENUM_DIRECT_LIMIT: usize = 20;

fn binom_usize(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Enumerates matroids of rank `r` on `{1,...,n}` up to isomorphism, in a
/// deterministic order. Small cases search all subsets of the `r`-sets
/// directly; when only `C(n-1, r)` is small the catalog is grown by
/// single-element extensions of the smaller one (complete for `r < n`
/// because any matroid of rank `r < n` has a non-coloop element whose
/// deletion keeps the rank).
pub fn enumerate_matroids(
    n: usize,
    r: usize,
    connected_only: bool,
) -> Result<Vec<Matroid>, MatroidError> {
    if r > n {
        return Err(MatroidError::SizeLimit(format!("rank {r} exceeds ground set {n}")));
    }
    let reps = if binom_usize(n, r) <= ENUM_DIRECT_LIMIT {
        enumerate_direct(n, r)
    } else if r < n && binom_usize(n - 1, r) <= ENUM_DIRECT_LIMIT {
        let parents = enumerate_matroids(n - 1, r, false)?;
        enumerate_by_extension(&parents, n, r)
    } else {
        return Err(MatroidError::SizeLimit(format!(
            "enumeration of ({n}, {r}) is not feasible"
        )));
    };
    Ok(if connected_only {
        reps.into_iter().filter(|m| m.is_connected()).collect()
    } else {
        reps
    })
}

fn dedupe_by_isomorphism(candidates: impl Iterator<Item = Matroid>) -> Vec<Matroid> {
    let mut buckets: BTreeMap<(usize, usize, Vec<usize>, Vec<Vec<usize>>), Vec<usize>> =
        BTreeMap::new();
    let mut reps: Vec<Matroid> = Vec::new();
    for m in candidates {
        let sig = iso_signature(&m);
        let bucket = buckets.entry(sig).or_default();
        let known = bucket
            .iter()
            .any(|&i| isomorphism(&reps[i], &m).expect("within iso limit").is_some());
        if !known {
            bucket.push(reps.len());
            reps.push(m);
        }
    }
    reps
}

fn enumerate_direct(n: usize, r: usize) -> Vec<Matroid> {
    let rsets = subsets_of_size(n, r);
    let total: u64 = 1 << rsets.len();
    let candidates = (1..total).filter_map(move |pick| {
        let masks: Vec<ElemSet> = rsets
            .iter()
            .enumerate()
            .filter(|(i, _)| pick & (1 << i) != 0)
            .map(|(_, &m)| m)
            .collect();
        valid_family(n, r, masks)
    });
    dedupe_by_isomorphism(candidates)
}

fn enumerate_by_extension(parents: &[Matroid], n: usize, r: usize) -> Vec<Matroid> {
    let new_bit = 1u32 << (n - 1);
    let slots = subsets_of_size(n - 1, r - 1);
    let mut candidates = Vec::new();
    for parent in parents {
        for pick in 0u64..(1 << slots.len()) {
            let mut masks: Vec<ElemSet> = parent.bases().to_vec();
            for (i, &s) in slots.iter().enumerate() {
                if pick & (1 << i) != 0 {
                    masks.push(s | new_bit);
                }
            }
            if let Some(m) = valid_family(n, r, masks) {
                candidates.push(m);
            }
        }
    }
    dedupe_by_isomorphism(candidates.into_iter())
}

fn valid_family(n: usize, r: usize, mut masks: Vec<ElemSet>) -> Option<Matroid> {
    masks.sort_unstable();
    masks.dedup();
    if masks.is_empty() || masks[0].count_ones() as usize != r {
        return None;
    }
    if exchange_violation(&masks).is_some() {
        return None;
    }
    Some(Matroid { n, rank: r, bases: masks })
}

/// Base-count limit for weak image enumeration.
pub const WEAK_IMAGE_LIMIT: usize = 22;

/// All matroids (with labels) of the same rank whose base family is
/// contained in the base family of `m`, including `m` itself.
pub fn weak_images(m: &Matroid, connected_only: bool) -> Result<Vec<Matroid>, MatroidError> {
    let k = m.bases.len();
    if k > WEAK_IMAGE_LIMIT {
        return Err(MatroidError::SizeLimit(format!(
            "weak image search limited to {WEAK_IMAGE_LIMIT} bases, got {k}"
        )));
    }
    let mut out = Vec::new();
    for pick in 1u64..(1 << k) {
        let masks: Vec<ElemSet> = (0..k)
            .filter(|i| pick & (1 << i) != 0)
            .map(|i| m.bases[i])
            .collect();
        if let Some(img) = valid_family(m.n, m.rank, masks) {
            if !connected_only || img.is_connected() {
                out.push(img);
            }
        }
    }
    Ok(out)
}

/// An integer-coefficient polynomial in two variables `x`, `y`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Int>,
}

impl BiPoly {
    pub fn zero() -> BiPoly {
        BiPoly::default()
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Int) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert(Int::ZERO);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> Int {
        self.terms.get(&(i, j)).cloned().unwrap_or(Int::ZERO)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Int)> {
        self.terms.iter()
    }

    /// The polynomial with `x` and `y` exchanged.
    pub fn swapped(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(j, i, c.clone());
        }
        out
    }

    pub fn eval(&self, x: i64, y: i64) -> Int {
        let mut acc = Int::ZERO;
        for (&(i, j), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..i {
                t *= Int::from(x);
            }
            for _ in 0..j {
                t *= Int::from(y);
            }
            acc += t;
        }
        acc
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        let mut first = true;
        for key in keys {
            let c = &self.terms[key];
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
            let mut vars = String::new();
            match key.0 {
                0 => {}
                1 => vars.push('x'),
                p => vars.push_str(&format!("x^{p}")),
            }
            if key.1 > 0 {
                if !vars.is_empty() {
                    vars.push('*');
                }
                match key.1 {
                    1 => vars.push('y'),
                    p => vars.push_str(&format!("y^{p}")),
                }
            }
            if vars.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{a}*{vars}")?;
            }
        }
        Ok(())
    }
}
