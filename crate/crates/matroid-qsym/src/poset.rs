//! Labelled posets and their partition enumerators.
//!
//! A labelled poset is a strict partial order on a finite set of distinct
//! positive integer labels. A partition of a labelled poset is a map `f` to
//! the positive integers that is weakly increasing along order relations and
//! strictly increasing along relations where the label decreases. Summing
//! `x_f` over all such maps gives a quasisymmetric enumerator, computed here
//! through linear extensions and descent compositions.
//!
//! The module also builds the special poset families indexed by binary
//! strings starting with 0 (`R`, `Q`) and by compositions (ordinal sums of
//! antichains), together with their triangular change-of-basis matrices.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::int::Int;
use crate::linalg::{solve_lower_unitriangular, solve_upper_unitriangular, IntMatrix};
use crate::qsym::{Basis, Composition, QSymFn};

/// Default cap on poset size for linear-extension enumeration.
pub const DEFAULT_EXTENSION_LIMIT: usize = 12;
/// Default cap on `k^|P|` for brute-force partition counting.
pub const DEFAULT_PPARTITION_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetError {
    DuplicateLabel(u32),
    UnknownLabel(u32),
    Cycle,
    LabelCollision(u32),
    SizeLimit { size: usize, limit: usize },
    BudgetExceeded,
    Parse(String),
}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetError::DuplicateLabel(l) => write!(f, "duplicate label {l}"),
            PosetError::UnknownLabel(l) => write!(f, "unknown label {l}"),
            PosetError::Cycle => write!(f, "relations contain a cycle"),
            PosetError::LabelCollision(l) => write!(f, "label {l} present on both sides"),
            PosetError::SizeLimit { size, limit } => {
                write!(f, "poset has {size} elements, limit {limit}")
            }
            PosetError::BudgetExceeded => write!(f, "enumeration budget exceeded"),
            PosetError::Parse(msg) => write!(f, "invalid poset text: {msg}"),
        }
    }
}

impl std::error::Error for PosetError {}

/// A finite strict partial order on distinct positive integer labels.
///
/// Relations are stored as the full transitive closure over label indices;
/// covers are recomputed on demand for rendering.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabelledPoset {
    /// Sorted, distinct labels.
    labels: Vec<u32>,
    /// `below[i]` = bitmask of indices strictly below element `i`.
    below: Vec<u64>,
}

impl LabelledPoset {
    pub fn from_relations(
        mut labels: Vec<u32>,
        relations: &[(u32, u32)],
    ) -> Result<LabelledPoset, PosetError> {
        labels.sort_unstable();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(PosetError::DuplicateLabel(w[0]));
        }
        assert!(labels.len() <= 64, "poset too large for bitmask storage");
        let idx = |l: u32| -> Result<usize, PosetError> {
            labels.binary_search(&l).map_err(|_| PosetError::UnknownLabel(l))
        };
        let n = labels.len();
        let mut below = vec![0u64; n];
        for &(a, b) in relations {
            let (ia, ib) = (idx(a)?, idx(b)?);
            if ia == ib {
                return Err(PosetError::Cycle);
            }
            below[ib] |= 1 << ia;
        }
        // Warshall closure on bitmasks.
        for k in 0..n {
            for i in 0..n {
                if below[i] & (1 << k) != 0 {
                    below[i] |= below[k];
                }
            }
        }
        if (0..n).any(|i| below[i] & (1 << i) != 0) {
            return Err(PosetError::Cycle);
        }
        Ok(LabelledPoset { labels, below })
    }

    pub fn antichain(labels: &[u32]) -> LabelledPoset {
        LabelledPoset::from_relations(labels.to_vec(), &[]).expect("antichain is valid")
    }

    /// Total order `order[0] < order[1] < ...`.
    pub fn chain(order: &[u32]) -> LabelledPoset {
        let rels: Vec<(u32, u32)> = order.windows(2).map(|w| (w[0], w[1])).collect();
        LabelledPoset::from_relations(order.to_vec(), &rels).expect("chain is valid")
    }

    pub fn singleton(label: u32) -> LabelledPoset {
        LabelledPoset::antichain(&[label])
    }

    pub fn empty() -> LabelledPoset {
        LabelledPoset::antichain(&[])
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Is `a` strictly below `b`?
    pub fn less(&self, a: u32, b: u32) -> bool {
        match (
            self.labels.binary_search(&a),
            self.labels.binary_search(&b),
        ) {
            (Ok(ia), Ok(ib)) => self.below[ib] & (1 << ia) != 0,
            _ => false,
        }
    }

    /// All strict order relations as label pairs `(lower, upper)`.
    pub fn relations(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for ib in 0..self.size() {
            for ia in 0..self.size() {
                if self.below[ib] & (1 << ia) != 0 {
                    out.push((self.labels[ia], self.labels[ib]));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Cover relations: pairs with nothing strictly in between.
    pub fn covers(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for ib in 0..self.size() {
            for ia in 0..self.size() {
                if self.below[ib] & (1 << ia) == 0 {
                    continue;
                }
                let between = (0..self.size()).any(|c| {
                    self.below[ib] & (1 << c) != 0 && self.below[c] & (1 << ia) != 0
                });
                if !between {
                    out.push((self.labels[ia], self.labels[ib]));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Same order with all relations reversed, same labels.
    pub fn opposite(&self) -> LabelledPoset {
        let rels: Vec<(u32, u32)> = self.relations().iter().map(|&(a, b)| (b, a)).collect();
        LabelledPoset::from_relations(self.labels.clone(), &rels).expect("opposite is valid")
    }

    /// Relabels order-isomorphically onto `1..=n` preserving the relative
    /// order of the labels.
    pub fn standardize(&self) -> LabelledPoset {
        let map: BTreeMap<u32, u32> = self
            .labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, i as u32 + 1))
            .collect();
        self.relabel(&map)
    }

    fn relabel(&self, map: &BTreeMap<u32, u32>) -> LabelledPoset {
        let rels: Vec<(u32, u32)> = self
            .relations()
            .iter()
            .map(|&(a, b)| (map[&a], map[&b]))
            .collect();
        let labels: Vec<u32> = self.labels.iter().map(|l| map[l]).collect();
        LabelledPoset::from_relations(labels, &rels).expect("relabelling preserves order")
    }

    /// Relabels with `1..=n` so that labels increase along every relation
    /// (a natural labelling). The enumerator of a naturally labelled poset
    /// does not depend on the choice.
    pub fn naturally_labelled(&self) -> LabelledPoset {
        self.relabel_along_extension(false)
    }

    /// Relabels with `1..=n` so that labels decrease along every relation
    /// (a strict labelling).
    pub fn strictly_labelled(&self) -> LabelledPoset {
        self.relabel_along_extension(true)
    }

    fn relabel_along_extension(&self, descending: bool) -> LabelledPoset {
        let order = self.first_extension();
        let n = order.len() as u32;
        let map: BTreeMap<u32, u32> = order
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, if descending { n - i as u32 } else { i as u32 + 1 }))
            .collect();
        self.relabel(&map)
    }

    /// The lexicographically first linear extension.
    fn first_extension(&self) -> Vec<u32> {
        let n = self.size();
        let mut placed = 0u64;
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let i = (0..n)
                .find(|&i| placed & (1 << i) == 0 && self.below[i] & !placed == 0)
                .expect("acyclic poset always has a minimal element");
            placed |= 1 << i;
            order.push(self.labels[i]);
        }
        order
    }

    /// All linear extensions as label words, in lexicographic order of the
    /// word (minimal available label first).
    pub fn linear_extensions(&self) -> Result<Vec<Vec<u32>>, PosetError> {
        self.linear_extensions_with_limit(DEFAULT_EXTENSION_LIMIT)
    }

    pub fn linear_extensions_with_limit(
        &self,
        limit: usize,
    ) -> Result<Vec<Vec<u32>>, PosetError> {
        if self.size() > limit {
            return Err(PosetError::SizeLimit {
                size: self.size(),
                limit,
            });
        }
        let mut out = Vec::new();
        self.for_each_extension(&mut |w| out.push(w.to_vec()));
        Ok(out)
    }

    /// Visits every linear extension without materializing the list.
    fn for_each_extension(&self, visit: &mut impl FnMut(&[u32])) {
        let n = self.size();
        let mut word: Vec<u32> = Vec::with_capacity(n);
        fn rec(
            p: &LabelledPoset,
            placed: u64,
            word: &mut Vec<u32>,
            visit: &mut impl FnMut(&[u32]),
        ) {
            let n = p.size();
            if word.len() == n {
                visit(word);
                return;
            }
            for i in 0..n {
                if placed & (1 << i) == 0 && p.below[i] & !placed == 0 {
                    word.push(p.labels[i]);
                    rec(p, placed | (1 << i), word, visit);
                    word.pop();
                }
            }
        }
        rec(self, 0, &mut word, visit);
    }

    /// The partition enumerator: the sum of fundamental basis elements over
    /// descent compositions of the linear extensions.
    pub fn enumerator(&self) -> Result<QSymFn, PosetError> {
        self.enumerator_with_limit(DEFAULT_EXTENSION_LIMIT)
    }

    pub fn enumerator_with_limit(&self, limit: usize) -> Result<QSymFn, PosetError> {
        if self.size() > limit {
            return Err(PosetError::SizeLimit {
                size: self.size(),
                limit,
            });
        }
        let mut terms: BTreeMap<Composition, Int> = BTreeMap::new();
        self.for_each_extension(&mut |w| {
            *terms.entry(descent_composition(w)).or_insert(Int::ZERO) += Int::ONE;
        });
        Ok(QSymFn::from_terms(Basis::Fundamental, terms))
    }

    /// Brute-force partition counts with values restricted to `1..=k`,
    /// grouped by the sorted multiset of values used. The count for values
    /// `v_1 < ... < v_j` with multiplicities `m_1, ..., m_j` must equal the
    /// monomial coefficient of the composition `(m_1, ..., m_j)` in the
    /// enumerator.
    pub fn partition_counts(
        &self,
        k: u32,
    ) -> Result<BTreeMap<Vec<u32>, u64>, PosetError> {
        self.partition_counts_with_budget(k, DEFAULT_PPARTITION_BUDGET)
    }

    pub fn partition_counts_with_budget(
        &self,
        k: u32,
        budget: u64,
    ) -> Result<BTreeMap<Vec<u32>, u64>, PosetError> {
        let n = self.size();
        if k == 0 {
            return Ok(BTreeMap::new());
        }
        let total = (k as u64).checked_pow(n as u32);
        if total.is_none_or(|t| t > budget) {
            return Err(PosetError::BudgetExceeded);
        }
        // Strict constraint exactly when the label decreases upward.
        let mut constraints: Vec<(usize, usize, bool)> = Vec::new();
        for ib in 0..n {
            for ia in 0..n {
                if self.below[ib] & (1 << ia) != 0 {
                    constraints.push((ia, ib, self.labels[ia] > self.labels[ib]));
                }
            }
        }
        let mut out: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        let mut values = vec![1u32; n];
        'outer: loop {
            let ok = constraints.iter().all(|&(lo, hi, strict)| {
                if strict {
                    values[lo] < values[hi]
                } else {
                    values[lo] <= values[hi]
                }
            });
            if ok {
                let mut key = values.clone();
                key.sort_unstable();
                *out.entry(key).or_insert(0) += 1;
            }
            for i in 0..n {
                if values[i] < k {
                    values[i] += 1;
                    continue 'outer;
                }
                values[i] = 1;
            }
            break;
        }
        if n == 0 {
            out.insert(Vec::new(), 1);
        }
        Ok(out)
    }

    /// Disjoint union; the label sets must not overlap.
    pub fn disjoint_sum(&self, other: &LabelledPoset) -> Result<LabelledPoset, PosetError> {
        if let Some(&l) = self.labels.iter().find(|l| other.labels.binary_search(l).is_ok()) {
            return Err(PosetError::LabelCollision(l));
        }
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        let mut rels = self.relations();
        rels.extend(other.relations());
        LabelledPoset::from_relations(labels, &rels)
    }

    /// Ordinal sum: the disjoint union plus every element of `self` below
    /// every element of `other`.
    pub fn ordinal_sum(&self, other: &LabelledPoset) -> Result<LabelledPoset, PosetError> {
        let mut sum = self.disjoint_sum(other)?;
        let n = sum.size();
        let low_mask: u64 = sum
            .labels
            .iter()
            .enumerate()
            .filter(|(_, l)| self.labels.binary_search(l).is_ok())
            .fold(0, |m, (i, _)| m | (1 << i));
        for i in 0..n {
            if low_mask & (1 << i) == 0 {
                sum.below[i] |= low_mask;
            }
        }
        Ok(sum)
    }

    /// For a poset labelled by `1..=n`, appends a new top element labelled
    /// `n+m` and an antichain labelled `n+1, ..., n+m-1` above it:
    /// `P (+) {n+m} (+) antichain`.
    pub fn psi(&self, m: usize) -> Result<LabelledPoset, PosetError> {
        assert!(m >= 1, "psi requires m >= 1");
        let n = self.size() as u32;
        debug_assert!(
            self.labels.iter().copied().eq(1..=n),
            "psi expects labels 1..=n"
        );
        let top = LabelledPoset::singleton(n + m as u32);
        let tail: Vec<u32> = (n + 1..n + m as u32).collect();
        self.ordinal_sum(&top)?
            .ordinal_sum(&LabelledPoset::antichain(&tail))
    }

    /// Renders the poset text format `n; i<j, i<j, ...` listing covers.
    /// Only defined for posets labelled by `1..=n`.
    pub fn to_text(&self) -> String {
        let covers = self.covers();
        let mut s = format!("{}", self.size());
        if !covers.is_empty() {
            s.push_str("; ");
            s.push_str(
                &covers
                    .iter()
                    .map(|(a, b)| format!("{a}<{b}"))
                    .collect::<Vec<_>>()
                    .join(", "),
            );
        }
        s
    }
}

impl FromStr for LabelledPoset {
    type Err = PosetError;

    /// Parses `n; i<j, i<j, ...` (covers between labels `1..=n`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut pieces = s.splitn(2, ';');
        let n: u32 = pieces
            .next()
            .unwrap()
            .trim()
            .parse()
            .map_err(|_| PosetError::Parse("missing element count".into()))?;
        let labels: Vec<u32> = (1..=n).collect();
        let mut rels = Vec::new();
        if let Some(rest) = pieces.next() {
            for chunk in rest.split(',') {
                let chunk = chunk.trim();
                if chunk.is_empty() {
                    continue;
                }
                let (a, b) = chunk
                    .split_once('<')
                    .ok_or_else(|| PosetError::Parse(format!("bad relation `{chunk}`")))?;
                let a: u32 = a
                    .trim()
                    .parse()
                    .map_err(|_| PosetError::Parse(format!("bad label `{a}`")))?;
                let b: u32 = b
                    .trim()
                    .parse()
                    .map_err(|_| PosetError::Parse(format!("bad label `{b}`")))?;
                rels.push((a, b));
            }
        }
        LabelledPoset::from_relations(labels, &rels)
    }
}

/// Run-length composition of the maximal increasing runs of a word of
/// distinct integers.
pub fn descent_composition(w: &[u32]) -> Composition {
    let mut parts = Vec::new();
    let mut run = 0u32;
    for i in 0..w.len() {
        run += 1;
        if i + 1 == w.len() || w[i] > w[i + 1] {
            parts.push(run);
            run = 0;
        }
    }
    Composition::new(parts).expect("run lengths are positive")
}

/// A binary word starting with 0, indexing the special poset and matroid
/// families.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SigmaString {
    bits: Vec<bool>,
}

impl SigmaString {
    pub fn new(bits: Vec<bool>) -> Result<SigmaString, PosetError> {
        if bits.is_empty() || bits[0] {
            return Err(PosetError::Parse(
                "sigma strings are nonempty and start with 0".into(),
            ));
        }
        Ok(SigmaString { bits })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// All length-`n` strings in lexicographic order (`0 < 1`).
    pub fn all(n: usize) -> Vec<SigmaString> {
        assert!(n >= 1 && n <= 32);
        (0..(1u64 << (n - 1)))
            .map(|k| {
                let mut bits = vec![false; n];
                for (p, bit) in bits.iter_mut().skip(1).enumerate() {
                    *bit = k & (1 << (n - 2 - p)) != 0;
                }
                SigmaString { bits }
            })
            .collect()
    }

    /// Appends the bits of `tail` (need not start with 0).
    pub fn concat_bits(&self, tail: &[bool]) -> SigmaString {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(tail);
        SigmaString { bits }
    }

    /// The height-at-most-one poset on `[n]` with `i < j` whenever
    /// `sigma_i = 0`, `sigma_j = 1` and `i < j`.
    pub fn r_poset(&self) -> LabelledPoset {
        let n = self.len();
        let mut rels = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !self.bits[i] && self.bits[j] {
                    rels.push((i as u32 + 1, j as u32 + 1));
                }
            }
        }
        LabelledPoset::from_relations((1..=n as u32).collect(), &rels)
            .expect("r poset is acyclic")
    }

    /// The recursively labelled ordinal sum of antichains on `[n]`:
    /// an antichain for the all-zeroes string; appending 1 stacks a new top
    /// element; appending 0 inserts a new element just above the previous
    /// top and swaps the two highest labels.
    pub fn q_poset(&self) -> LabelledPoset {
        let n = self.len();
        if self.bits.iter().all(|&b| !b) {
            return LabelledPoset::antichain(&(1..=n as u32).collect::<Vec<_>>());
        }
        let head = SigmaString {
            bits: self.bits[..n - 1].to_vec(),
        };
        let prev = head.q_poset();
        let m = n as u32;
        if self.bits[n - 1] {
            prev.ordinal_sum(&LabelledPoset::singleton(m))
                .expect("fresh top label")
        } else {
            let mut rels = prev.relations();
            rels.push((m - 1, m));
            let with_new =
                LabelledPoset::from_relations((1..=m).collect(), &rels).expect("acyclic");
            let mut map: BTreeMap<u32, u32> = (1..=m).map(|l| (l, l)).collect();
            map.insert(m - 1, m);
            map.insert(m, m - 1);
            with_new.relabel(&map)
        }
    }

    /// Interval blocks of `[n]` broken between positions `i, i+1` where
    /// `(sigma_i, sigma_{i+1}) = (1, 0)`, with the zero count of each block.
    pub fn blocks_and_z(&self) -> BlocksAndZ {
        let n = self.len();
        let mut blocks = Vec::new();
        let mut z = Vec::new();
        let mut start = 0usize;
        for i in 0..n {
            let break_after = i + 1 == n || (self.bits[i] && !self.bits[i + 1]);
            if break_after {
                blocks.push((start + 1, i + 1));
                z.push(self.bits[start..=i].iter().filter(|&&b| !b).count());
                start = i + 1;
            }
        }
        BlocksAndZ { blocks, z }
    }

    /// Descent set `{i in [n-1] : sigma_{i+1} = 0}` of the distinguished
    /// linear extension of the `Q` poset.
    pub fn w_descents(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| !self.bits[i]).collect()
    }
}

impl fmt::Display for SigmaString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl FromStr for SigmaString {
    type Err = PosetError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bits: Result<Vec<bool>, PosetError> = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(PosetError::Parse(format!("bad sigma character `{c}`"))),
            })
            .collect();
        SigmaString::new(bits?)
    }
}

/// Interval blocks and per-block zero counts of a sigma string; the string
/// is recoverable from the pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlocksAndZ {
    /// Inclusive 1-based `(start, end)` intervals covering `[n]`.
    pub blocks: Vec<(usize, usize)>,
    /// Number of zero positions within each block.
    pub z: Vec<usize>,
}

impl BlocksAndZ {
    /// Reconstructs the sigma string: each block is `z_i` zeroes followed by
    /// ones.
    pub fn to_sigma(&self) -> SigmaString {
        let mut bits = Vec::new();
        for (&(s, e), &zi) in self.blocks.iter().zip(&self.z) {
            let len = e - s + 1;
            bits.extend(std::iter::repeat_n(false, zi));
            bits.extend(std::iter::repeat_n(true, len - zi));
        }
        SigmaString::new(bits).expect("blocks start with a zero")
    }
}

/// The naturally labelled ordinal sum of antichains of sizes
/// `alpha_1, ..., alpha_k`.
pub fn stanley_poset(alpha: &Composition) -> LabelledPoset {
    let mut poset = LabelledPoset::empty();
    let mut next = 1u32;
    for &part in alpha.parts() {
        let labels: Vec<u32> = (next..next + part).collect();
        next += part;
        poset = poset
            .ordinal_sum(&LabelledPoset::antichain(&labels))
            .expect("fresh labels");
    }
    poset
}

/// The matrix expanding the naturally labelled `R` enumerators into the
/// fundamental basis: rows are compositions of `n` in canonical order,
/// columns are sigma strings in lexicographic order.
pub fn r_in_fundamental_matrix(n: usize) -> Arc<IntMatrix> {
    cached_matrix(MatrixKind::RInFundamental, n, || {
        poset_family_matrix(n, |s| s.r_poset())
    })
}

/// The matrix expanding the `Q` enumerators into the fundamental basis
/// (lower unitriangular with the canonical orders).
pub fn q_in_fundamental_matrix(n: usize) -> Arc<IntMatrix> {
    cached_matrix(MatrixKind::QInFundamental, n, || {
        poset_family_matrix(n, |s| s.q_poset())
    })
}

fn poset_family_matrix(n: usize, family: impl Fn(&SigmaString) -> LabelledPoset) -> IntMatrix {
    let comps = Composition::all(n);
    let sigmas = SigmaString::all(n);
    let mut mat = vec![vec![Int::ZERO; sigmas.len()]; comps.len()];
    for (j, sigma) in sigmas.iter().enumerate() {
        let f = family(sigma)
            .enumerator_with_limit(n.max(DEFAULT_EXTENSION_LIMIT))
            .expect("within limit");
        for (i, comp) in comps.iter().enumerate() {
            mat[i][j] = f.coeff(comp);
        }
    }
    mat
}

/// The upper unitriangular matrix expanding the `R` enumerators in the `Q`
/// enumerators, obtained by solving against the lower unitriangular `Q`
/// matrix.
pub fn r_in_q_matrix(n: usize) -> Arc<IntMatrix> {
    cached_matrix(MatrixKind::RInQ, n, || {
        let a = r_in_fundamental_matrix(n);
        let l = q_in_fundamental_matrix(n);
        let dim = a.len();
        let mut u = vec![vec![Int::ZERO; dim]; dim];
        for j in 0..dim {
            let col: Vec<Int> = (0..dim).map(|i| a[i][j].clone()).collect();
            let sol = solve_lower_unitriangular(&l, &col);
            for i in 0..dim {
                u[i][j] = sol[i].clone();
            }
        }
        u
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum MatrixKind {
    RInFundamental,
    QInFundamental,
    RInQ,
}

/// The family matrices are pure functions of the degree; enumerating the
/// poset families is the expensive part, so computed matrices are shared.
fn cached_matrix(
    kind: MatrixKind,
    n: usize,
    build: impl FnOnce() -> IntMatrix,
) -> Arc<IntMatrix> {
    static CACHE: OnceLock<Mutex<HashMap<(MatrixKind, usize), Arc<IntMatrix>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&(kind, n)) {
        return Arc::clone(hit);
    }
    let built = Arc::new(build());
    cache
        .lock()
        .unwrap()
        .entry((kind, n))
        .or_insert_with(|| Arc::clone(&built))
        .clone()
}

/// Expands a homogeneous degree-`n` function in the `Q` enumerator basis;
/// coefficients are indexed by sigma strings in lexicographic order.
pub fn expand_in_q_basis(f: &QSymFn, n: usize) -> Vec<Int> {
    let l = q_in_fundamental_matrix(n);
    let comps = Composition::all(n);
    let fl = f.to_basis(Basis::Fundamental);
    let v: Vec<Int> = comps.iter().map(|c| fl.coeff(c)).collect();
    solve_lower_unitriangular(&l, &v)
}

/// Expands a homogeneous degree-`n` function in the naturally labelled `R`
/// enumerator basis, via two unitriangular solves against `A_n = L_n U_n`.
pub fn expand_in_natural_r_basis(f: &QSymFn, n: usize) -> Vec<Int> {
    let partial = expand_in_q_basis(f, n);
    let u = r_in_q_matrix(n);
    solve_upper_unitriangular(&u, &partial)
}

/// Expands a homogeneous degree-`n` function in the strictly labelled `R`
/// enumerator basis. The sign-and-complement involution exchanges the
/// strict and natural enumerators of each `R` poset, so the coefficients
/// are those of `(-1)^n S(f)` in the natural basis.
pub fn expand_in_strict_r_basis(f: &QSymFn, n: usize) -> Vec<Int> {
    let sign = Int::from(if n % 2 == 1 { -1 } else { 1 });
    expand_in_natural_r_basis(&f.antipode().scaled(&sign), n)
}
