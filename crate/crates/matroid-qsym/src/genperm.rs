//! Polytopes whose edges are parallel to differences of standard basis
//! vectors, presented as explicit vertex-edge graphs.
//!
//! Each vertex carries a poset on the coordinate directions read off from
//! its incident edges; the invariant of the polytope is the sum of strictly
//! labelled enumerators over vertices, exactly parallel to the matroid case
//! (whose base polytopes are the motivating examples). Graphic zonotopes
//! are handled combinatorially through acyclic orientations, which
//! identifies their invariant with the chromatic symmetric function.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::int::Int;
use crate::invariant;
use crate::matroid::{mask_to_elems, Matroid, MatroidError};
use crate::poset::{LabelledPoset, PosetError};
use crate::qsym::{Basis, Composition, IntValuedPoly, QSymFn};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenPermError {
    /// An edge difference is not a positive multiple of `e_j - e_i`.
    BadEdgeDirection { from: usize, to: usize },
    Disconnected,
    NoVertices,
    DimensionMismatch,
    BudgetExceeded(String),
    Parse(String),
}

impl fmt::Display for GenPermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenPermError::BadEdgeDirection { from, to } => {
                write!(f, "edge {from}-{to} is not in a root direction")
            }
            GenPermError::Disconnected => write!(f, "vertex-edge graph is not connected"),
            GenPermError::NoVertices => write!(f, "polytope needs at least one vertex"),
            GenPermError::DimensionMismatch => write!(f, "vertex dimensions differ"),
            GenPermError::BudgetExceeded(msg) => write!(f, "budget exceeded: {msg}"),
            GenPermError::Parse(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

impl std::error::Error for GenPermError {}

impl From<PosetError> for GenPermError {
    fn from(e: PosetError) -> Self {
        GenPermError::BudgetExceeded(e.to_string())
    }
}

#[derive(Serialize, Deserialize)]
struct GenPermJson {
    n: usize,
    vertices: Vec<Vec<i64>>,
    edges: Vec<(usize, usize)>,
}

/// The vertex-edge graph of a polytope in `Z^n` all of whose edges are
/// parallel to differences of standard basis vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenPermGraph {
    n: usize,
    vertices: Vec<Vec<i64>>,
    /// Unordered vertex index pairs.
    edges: Vec<(usize, usize)>,
}

impl GenPermGraph {
    pub fn new(
        n: usize,
        vertices: Vec<Vec<i64>>,
        edges: Vec<(usize, usize)>,
    ) -> Result<GenPermGraph, GenPermError> {
        if vertices.is_empty() {
            return Err(GenPermError::NoVertices);
        }
        if vertices.iter().any(|v| v.len() != n) {
            return Err(GenPermError::DimensionMismatch);
        }
        for &(u, v) in &edges {
            if u >= vertices.len() || v >= vertices.len() || root_direction(&vertices[u], &vertices[v]).is_none() {
                return Err(GenPermError::BadEdgeDirection { from: u, to: v });
            }
        }
        // Vertex-edge connectivity.
        let mut seen = vec![false; vertices.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &(a, b) in &edges {
                let other = if a == u { b } else if b == u { a } else { continue };
                if !seen[other] {
                    seen[other] = true;
                    stack.push(other);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(GenPermError::Disconnected);
        }
        Ok(GenPermGraph { n, vertices, edges })
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The poset at a vertex: the transitive closure of `i < j` over
    /// incident edges pointing away with direction `e_j - e_i`.
    pub fn vertex_poset(&self, v: usize) -> LabelledPoset {
        let mut rels = Vec::new();
        for &(a, b) in &self.edges {
            let other = if a == v { b } else if b == v { a } else { continue };
            let (i, j) =
                root_direction(&self.vertices[v], &self.vertices[other]).expect("validated");
            rels.push((i as u32 + 1, j as u32 + 1));
        }
        LabelledPoset::from_relations((1..=self.n as u32).collect(), &rels)
            .expect("vertex posets of a polytope are acyclic")
    }

    /// The invariant: the sum over vertices of strictly labelled
    /// vertex-poset enumerators. Counts the weightings of `[n]` minimizing
    /// uniquely at a vertex, by value multiplicities.
    pub fn invariant(&self) -> Result<QSymFn, GenPermError> {
        let mut acc = QSymFn::zero(Basis::Fundamental);
        for v in 0..self.vertices.len() {
            let poset = self.vertex_poset(v).strictly_labelled();
            acc = acc.add(&poset.enumerator()?);
        }
        Ok(acc)
    }

    /// The tie-counting companion via the sign-and-complement involution.
    pub fn invariant_star(&self) -> Result<QSymFn, GenPermError> {
        let sign = Int::from(if self.n % 2 == 1 { -1 } else { 1 });
        Ok(self.invariant()?.antipode().scaled(&sign))
    }

    pub fn phi(&self) -> Result<IntValuedPoly, GenPermError> {
        Ok(self.invariant()?.specialize_ones())
    }

    pub fn phi_star(&self) -> Result<IntValuedPoly, GenPermError> {
        Ok(self.invariant_star()?.specialize_ones())
    }

    /// Brute-force pattern counts over weightings `[n] -> [k]`, weighted by
    /// the number of vertices attaining the minimum scalar product
    /// (`unique_only` restricts to weightings with a unique minimizer).
    pub fn bruteforce_counts(
        &self,
        k: u32,
        unique_only: bool,
    ) -> Result<BTreeMap<Composition, Int>, GenPermError> {
        let n = self.n;
        if n == 0 {
            let mut out = BTreeMap::new();
            out.insert(
                Composition::empty(),
                if unique_only && self.vertices.len() != 1 {
                    Int::ZERO
                } else {
                    Int::from(self.vertices.len() as u64)
                },
            );
            out.retain(|_, c| !c.is_zero());
            return Ok(out);
        }
        if k == 0 {
            return Ok(BTreeMap::new());
        }
        let total = (k as u64).checked_pow(n as u32);
        if total.is_none_or(|t| t > invariant::BRUTE_FORCE_BUDGET) {
            return Err(GenPermError::BudgetExceeded(format!("{k}^{n} weightings")));
        }
        let mut by_pattern: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        let mut values = vec![1u32; n];
        loop {
            let mut best = i64::MAX;
            let mut ties = 0u64;
            for vertex in &self.vertices {
                let w: i64 = vertex
                    .iter()
                    .zip(&values)
                    .map(|(&c, &f)| c * f as i64)
                    .sum();
                if w < best {
                    best = w;
                    ties = 1;
                } else if w == best {
                    ties += 1;
                }
            }
            let contribution = if unique_only {
                u64::from(ties == 1)
            } else {
                ties
            };
            if contribution > 0 {
                let mut pattern = vec![0u32; k as usize];
                for &v in &values {
                    pattern[v as usize - 1] += 1;
                }
                *by_pattern.entry(pattern).or_insert(0) += contribution;
            }
            let mut carry = true;
            for v in values.iter_mut() {
                if *v < k {
                    *v += 1;
                    carry = false;
                    break;
                }
                *v = 1;
            }
            if carry {
                break;
            }
        }
        let mut out = BTreeMap::new();
        for (pattern, count) in by_pattern {
            let j = pattern.iter().position(|&c| c == 0).unwrap_or(k as usize);
            if pattern[j..].iter().all(|&c| c == 0) {
                out.insert(
                    Composition::new(pattern[..j].to_vec()).expect("positive parts"),
                    Int::from(count),
                );
            }
        }
        Ok(out)
    }

    /// Checks the polynomial reciprocity `phi(-m) = (-1)^n phi_star(m)` and
    /// that the involution image matches the brute-force tie counts.
    pub fn check_reciprocity(&self) -> Result<bool, GenPermError> {
        let n = self.n;
        let p = self.phi()?;
        let q = self.phi_star()?;
        let sign = if n % 2 == 1 { -1i64 } else { 1 };
        let poly_ok =
            (0..=n as i64 + 1).all(|x| p.eval(-x) == q.eval(x) * Int::from(sign));
        let star = self.invariant_star()?.to_basis(Basis::Monomial);
        let counts = self.bruteforce_counts(n.max(1) as u32, false)?;
        let star_ok = Composition::all(n).into_iter().all(|alpha| {
            star.coeff(&alpha) == counts.get(&alpha).cloned().unwrap_or(Int::ZERO)
        });
        Ok(poly_ok && star_ok)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GenPermJson {
            n: self.n,
            vertices: self.vertices.clone(),
            edges: self.edges.clone(),
        })
        .expect("serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<GenPermGraph, GenPermError> {
        let raw: GenPermJson =
            serde_json::from_str(s).map_err(|e| GenPermError::Parse(e.to_string()))?;
        GenPermGraph::new(raw.n, raw.vertices, raw.edges)
    }
}

/// If `to - from = c (e_j - e_i)` with `c > 0`, returns `(i, j)` as
/// zero-based coordinates.
fn root_direction(from: &[i64], to: &[i64]) -> Option<(usize, usize)> {
    let mut pos = None;
    let mut neg = None;
    let mut mag_pos = 0i64;
    let mut mag_neg = 0i64;
    for (idx, (&a, &b)) in from.iter().zip(to).enumerate() {
        match (b - a).signum() {
            0 => {}
            1 => {
                if pos.is_some() {
                    return None;
                }
                pos = Some(idx);
                mag_pos = b - a;
            }
            _ => {
                if neg.is_some() {
                    return None;
                }
                neg = Some(idx);
                mag_neg = a - b;
            }
        }
    }
    match (pos, neg) {
        (Some(j), Some(i)) if mag_pos == mag_neg => Some((i, j)),
        _ => None,
    }
}

/// The vertex-edge graph of a matroid base polytope: base indicator
/// vectors, with edges between bases differing by a single exchange.
pub fn from_matroid(m: &Matroid) -> GenPermGraph {
    let n = m.ground_size();
    let vertices: Vec<Vec<i64>> = m
        .bases()
        .iter()
        .map(|&b| {
            let mut v = vec![0i64; n];
            for e in mask_to_elems(b) {
                v[e - 1] = 1;
            }
            v
        })
        .collect();
    let mut edges = Vec::new();
    for (i, &b1) in m.bases().iter().enumerate() {
        for (j, &b2) in m.bases().iter().enumerate().skip(i + 1) {
            if (b1 ^ b2).count_ones() == 2 {
                edges.push((i, j));
            }
        }
    }
    GenPermGraph::new(n, vertices, edges).expect("base polytopes are valid")
}

#[derive(Serialize, Deserialize)]
struct SimpleGraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// A simple graph on vertex set `{1, ..., n}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<SimpleGraph, GenPermError> {
        let mut cleaned = Vec::new();
        for &(a, b) in edges {
            if a == b {
                return Err(GenPermError::Parse(format!("self-loop at {a}")));
            }
            if a < 1 || a > n || b < 1 || b > n {
                return Err(GenPermError::Parse(format!("edge {a}-{b} out of range")));
            }
            cleaned.push((a.min(b), a.max(b)));
        }
        cleaned.sort_unstable();
        let before = cleaned.len();
        cleaned.dedup();
        if cleaned.len() != before {
            return Err(GenPermError::Parse("duplicate edge".into()));
        }
        Ok(SimpleGraph { n, edges: cleaned })
    }

    pub fn complete(n: usize) -> SimpleGraph {
        let edges: Vec<(usize, usize)> = (1..=n)
            .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
            .collect();
        SimpleGraph { n, edges }
    }

    pub fn edgeless(n: usize) -> SimpleGraph {
        SimpleGraph { n, edges: Vec::new() }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// All acyclic orientations, each as the list of edges directed
    /// `(smaller end of f, larger end of f)`.
    pub fn acyclic_orientations(&self) -> Result<Vec<Vec<(usize, usize)>>, GenPermError> {
        if self.edges.len() > 20 {
            return Err(GenPermError::BudgetExceeded(format!(
                "orientation enumeration limited to 20 edges, got {}",
                self.edges.len()
            )));
        }
        let mut out = Vec::new();
        let e = self.edges.len();
        'next: for pick in 0u64..(1 << e) {
            let oriented: Vec<(usize, usize)> = self
                .edges
                .iter()
                .enumerate()
                .map(|(i, &(a, b))| if pick & (1 << i) != 0 { (b, a) } else { (a, b) })
                .collect();
            // Cycle check by repeated minimal-element removal.
            let mut indeg = vec![0usize; self.n + 1];
            for &(_, to) in &oriented {
                indeg[to] += 1;
            }
            let mut removed = 0;
            let mut active: Vec<bool> = vec![true; self.n + 1];
            loop {
                let Some(v) = (1..=self.n).find(|&v| active[v] && indeg[v] == 0) else {
                    break;
                };
                active[v] = false;
                removed += 1;
                for &(from, to) in &oriented {
                    if from == v && active[to] {
                        indeg[to] -= 1;
                    }
                }
            }
            if removed != self.n {
                continue 'next;
            }
            out.push(oriented);
        }
        Ok(out)
    }

    /// The poset forced on the vertices by an acyclic orientation.
    fn orientation_poset(&self, oriented: &[(usize, usize)]) -> LabelledPoset {
        let rels: Vec<(u32, u32)> = oriented
            .iter()
            .map(|&(a, b)| (a as u32, b as u32))
            .collect();
        LabelledPoset::from_relations((1..=self.n as u32).collect(), &rels)
            .expect("orientation is acyclic")
    }

    /// The chromatic symmetric function: proper colorings counted by color
    /// multiplicity, computed as the sum of all-strict enumerators over
    /// acyclic orientations. No vertex coordinates are involved.
    pub fn chromatic_symmetric(&self) -> Result<QSymFn, GenPermError> {
        let mut acc = QSymFn::zero(Basis::Fundamental);
        for oriented in self.acyclic_orientations()? {
            let poset = self.orientation_poset(&oriented).strictly_labelled();
            acc = acc.add(&poset.enumerator()?);
        }
        Ok(acc)
    }

    /// The vertex-edge graph of the zonotope spanned by the edge direction
    /// segments: vertices are indexed by acyclic orientations, with the
    /// orientation's source coordinates.
    pub fn zonotope(&self) -> Result<GenPermGraph, GenPermError> {
        let orientations = self.acyclic_orientations()?;
        let vertices: Vec<Vec<i64>> = orientations
            .iter()
            .map(|oriented| {
                let mut v = vec![0i64; self.n];
                for &(a, b) in oriented {
                    // The weighting picks the endpoint e_a - e_b when
                    // f(a) < f(b).
                    v[a - 1] += 1;
                    v[b - 1] -= 1;
                }
                v
            })
            .collect();
        let mut edges = Vec::new();
        for i in 0..orientations.len() {
            for j in i + 1..orientations.len() {
                let diff: usize = orientations[i]
                    .iter()
                    .zip(&orientations[j])
                    .filter(|(a, b)| a != b)
                    .count();
                if diff == 1 {
                    edges.push((i, j));
                }
            }
        }
        GenPermGraph::new(self.n, vertices, edges)
    }

    /// Brute-force proper-coloring pattern counts with colors `1..=k`.
    pub fn proper_coloring_counts(
        &self,
        k: u32,
    ) -> Result<BTreeMap<Composition, Int>, GenPermError> {
        let n = self.n;
        if k == 0 || n == 0 {
            let mut out = BTreeMap::new();
            if n == 0 {
                out.insert(Composition::empty(), Int::ONE);
            }
            return Ok(out);
        }
        let total = (k as u64).checked_pow(n as u32);
        if total.is_none_or(|t| t > invariant::BRUTE_FORCE_BUDGET) {
            return Err(GenPermError::BudgetExceeded(format!("{k}^{n} colorings")));
        }
        let mut by_pattern: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        let mut colors = vec![1u32; n];
        loop {
            if self
                .edges
                .iter()
                .all(|&(a, b)| colors[a - 1] != colors[b - 1])
            {
                let mut pattern = vec![0u32; k as usize];
                for &c in &colors {
                    pattern[c as usize - 1] += 1;
                }
                *by_pattern.entry(pattern).or_insert(0) += 1;
            }
            let mut carry = true;
            for c in colors.iter_mut() {
                if *c < k {
                    *c += 1;
                    carry = false;
                    break;
                }
                *c = 1;
            }
            if carry {
                break;
            }
        }
        let mut out = BTreeMap::new();
        for (pattern, count) in by_pattern {
            let j = pattern.iter().position(|&c| c == 0).unwrap_or(k as usize);
            if pattern[j..].iter().all(|&c| c == 0) {
                out.insert(
                    Composition::new(pattern[..j].to_vec()).expect("positive parts"),
                    Int::from(count),
                );
            }
        }
        Ok(out)
    }

    /// The chromatic polynomial by deletion-contraction, as power-basis
    /// coefficients (index = degree).
    pub fn chromatic_polynomial(&self) -> Vec<Int> {
        if let Some(&(a, b)) = self.edges.first() {
            let deleted = SimpleGraph {
                n: self.n,
                edges: self.edges[1..].to_vec(),
            };
            // Contract b into a, dropping duplicates.
            let mut contracted_edges: Vec<(usize, usize)> = self.edges[1..]
                .iter()
                .map(|&(x, y)| {
                    let map = |v: usize| {
                        let v = if v == b { a } else { v };
                        if v > b {
                            v - 1
                        } else {
                            v
                        }
                    };
                    let (x, y) = (map(x), map(y));
                    (x.min(y), x.max(y))
                })
                .filter(|&(x, y)| x != y)
                .collect();
            contracted_edges.sort_unstable();
            contracted_edges.dedup();
            let contracted = SimpleGraph {
                n: self.n - 1,
                edges: contracted_edges,
            };
            let del = deleted.chromatic_polynomial();
            let con = contracted.chromatic_polynomial();
            let mut out = vec![Int::ZERO; del.len().max(con.len())];
            for (i, c) in del.iter().enumerate() {
                out[i] += c;
            }
            for (i, c) in con.iter().enumerate() {
                out[i] -= c;
            }
            out
        } else {
            let mut out = vec![Int::ZERO; self.n + 1];
            out[self.n] = Int::ONE;
            out
        }
    }

    /// The specialization of the chromatic symmetric function agrees with
    /// the deletion-contraction chromatic polynomial at `m = 1..=n+2`.
    pub fn chromatic_check(&self) -> Result<bool, GenPermError> {
        let p = self.chromatic_symmetric()?.specialize_ones();
        let coeffs = self.chromatic_polynomial();
        Ok((1..=self.n as i64 + 2).all(|m| {
            let direct: Int = coeffs
                .iter()
                .enumerate()
                .map(|(d, c)| {
                    let mut t = c.clone();
                    for _ in 0..d {
                        t *= Int::from(m);
                    }
                    t
                })
                .sum();
            p.eval(m) == direct
        }))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}", self.n);
        if !self.edges.is_empty() {
            s.push_str("; ");
            s.push_str(
                &self
                    .edges
                    .iter()
                    .map(|(a, b)| format!("{a}-{b}"))
                    .collect::<Vec<_>>()
                    .join(", "),
            );
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&SimpleGraphJson {
            n: self.n,
            edges: self.edges.clone(),
        })
        .expect("serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<SimpleGraph, GenPermError> {
        let raw: SimpleGraphJson =
            serde_json::from_str(s).map_err(|e| GenPermError::Parse(e.to_string()))?;
        SimpleGraph::new(raw.n, &raw.edges)
    }
}

impl std::str::FromStr for SimpleGraph {
    type Err = GenPermError;

    /// Parses `n; 1-2, 2-3, ...`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut pieces = s.splitn(2, ';');
        let n: usize = pieces
            .next()
            .unwrap()
            .trim()
            .parse()
            .map_err(|_| GenPermError::Parse("missing vertex count".into()))?;
        let mut edges = Vec::new();
        if let Some(rest) = pieces.next() {
            for chunk in rest.split(',') {
                let chunk = chunk.trim();
                if chunk.is_empty() {
                    continue;
                }
                let (a, b) = chunk
                    .split_once('-')
                    .ok_or_else(|| GenPermError::Parse(format!("bad edge `{chunk}`")))?;
                let a: usize = a
                    .trim()
                    .parse()
                    .map_err(|_| GenPermError::Parse(format!("bad vertex `{a}`")))?;
                let b: usize = b
                    .trim()
                    .parse()
                    .map_err(|_| GenPermError::Parse(format!("bad vertex `{b}`")))?;
                edges.push((a, b));
            }
        }
        SimpleGraph::new(n, &edges)
    }
}

/// Consistency with the matroid route, exact equality.
pub fn matches_matroid_invariant(m: &Matroid) -> Result<bool, MatroidError> {
    let direct = invariant::f(m)?;
    let via_polytope = from_matroid(m)
        .invariant()
        .map_err(|e| MatroidError::SizeLimit(e.to_string()))?;
    Ok(direct == via_polytope)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(pairs: &[(&[u32], i64)]) -> QSymFn {
        QSymFn::from_terms(
            Basis::Monomial,
            pairs
                .iter()
                .map(|(p, c)| (Composition::of(p), Int::from(*c))),
        )
    }

    #[test]
    fn vertex_posets() {
        let q = from_matroid(&Matroid::uniform(1, 2));
        assert_eq!(q.vertices().len(), 2);
        assert_eq!(q.edges().len(), 1);
        // At e_1 the edge points towards e_2.
        let v = q.vertices().iter().position(|v| v == &vec![1, 0]).unwrap();
        assert_eq!(q.vertex_poset(v).relations(), vec![(1, 2)]);

        // A point polytope has antichain posets.
        let point = GenPermGraph::new(3, vec![vec![0, 1, 2]], vec![]).unwrap();
        assert!(point.vertex_poset(0).relations().is_empty());

        let q = from_matroid(&Matroid::uniform(2, 3));
        let v = q
            .vertices()
            .iter()
            .position(|v| v == &vec![1, 1, 0])
            .unwrap();
        assert_eq!(q.vertex_poset(v).relations(), vec![(1, 3), (2, 3)]);
    }

    #[test]
    fn octahedron_shape() {
        let q = from_matroid(&Matroid::uniform(2, 4));
        assert_eq!(q.vertices().len(), 6);
        assert_eq!(q.edges().len(), 12);

        let split = from_matroid(&Matroid::free(3));
        assert_eq!((split.vertices().len(), split.edges().len()), (1, 0));
    }

    #[test]
    fn polytope_invariant_matches_matroid_invariant() {
        for m in [
            Matroid::uniform(1, 2),
            Matroid::uniform(2, 3),
            Matroid::uniform(2, 4),
            Matroid::free(2).direct_sum(&Matroid::loops(1)),
            crate::matroid::freedom_matroid(&"01011".parse().unwrap()),
        ] {
            assert!(matches_matroid_invariant(&m).unwrap(), "{m:?}");
        }
    }

    #[test]
    fn zonotope_invariants() {
        let k2 = SimpleGraph::complete(2);
        assert!(k2
            .chromatic_symmetric()
            .unwrap()
            .equivalent(&mono(&[(&[1, 1], 2)])));

        let k3 = SimpleGraph::complete(3);
        assert!(k3
            .chromatic_symmetric()
            .unwrap()
            .equivalent(&mono(&[(&[1, 1, 1], 6)])));

        let empty2 = SimpleGraph::edgeless(2);
        assert!(empty2
            .chromatic_symmetric()
            .unwrap()
            .equivalent(&mono(&[(&[1, 1], 2), (&[2], 1)])));

        // The zonotope route gives the same answer as the direct one.
        let path3: SimpleGraph = "3; 1-2, 2-3".parse().unwrap();
        assert_eq!(
            path3.zonotope().unwrap().invariant().unwrap(),
            path3.chromatic_symmetric().unwrap()
        );
    }

    #[test]
    fn colorings_match_monomial_coefficients() {
        let path3: SimpleGraph = "3; 1-2, 2-3".parse().unwrap();
        let x = path3
            .chromatic_symmetric()
            .unwrap()
            .to_basis(Basis::Monomial);
        for k in 1..=3u32 {
            let counts = path3.proper_coloring_counts(k).unwrap();
            for alpha in Composition::all(3) {
                if alpha.num_parts() <= k as usize {
                    assert_eq!(
                        x.coeff(&alpha),
                        counts.get(&alpha).cloned().unwrap_or(Int::ZERO),
                        "k={k} alpha={alpha}"
                    );
                }
            }
        }
    }

    #[test]
    fn chromatic_polynomials() {
        let k3 = SimpleGraph::complete(3);
        let coeffs = k3.chromatic_polynomial();
        // m(m-1)(m-2) = m^3 - 3m^2 + 2m.
        assert_eq!(
            coeffs,
            vec![Int::ZERO, Int::from(2), Int::from(-3), Int::ONE]
        );
        assert!(k3.chromatic_check().unwrap());
        assert!(SimpleGraph::edgeless(3).chromatic_check().unwrap());
        assert!(SimpleGraph::complete(2).chromatic_check().unwrap());
    }

    #[test]
    fn reciprocity_checks() {
        assert!(from_matroid(&Matroid::uniform(1, 2))
            .check_reciprocity()
            .unwrap());
        let zk2 = SimpleGraph::complete(2).zonotope().unwrap();
        assert!(zk2.check_reciprocity().unwrap());
        // phi(-m) = m^2 + m for the single-edge zonotope.
        let p = zk2.phi().unwrap();
        for m in 0..5i64 {
            assert_eq!(p.eval(-m), Int::from(m * m + m));
        }
        // A single point in Z^1.
        let point = GenPermGraph::new(1, vec![vec![0]], vec![]).unwrap();
        let inv = point.invariant().unwrap();
        assert!(inv.equivalent(&mono(&[(&[1], 1)])));
        assert!(point.invariant_star().unwrap().equivalent(&inv));
        assert!(point.check_reciprocity().unwrap());
    }

    #[test]
    fn validation() {
        assert!(matches!(
            GenPermGraph::new(2, vec![vec![0, 0], vec![1, 1]], vec![(0, 1)]),
            Err(GenPermError::BadEdgeDirection { .. })
        ));
        assert!(matches!(
            GenPermGraph::new(2, vec![vec![0, 0], vec![1, -1]], vec![]),
            Err(GenPermError::Disconnected)
        ));
        assert!(SimpleGraph::new(2, &[(1, 1)]).is_err());
        assert!(SimpleGraph::new(2, &[(1, 3)]).is_err());
        let g: SimpleGraph = "3; 1-2, 2-3".parse().unwrap();
        assert_eq!(g.to_text(), "3; 1-2, 2-3");
        assert_eq!(SimpleGraph::from_json(&g.to_json()).unwrap(), g);
    }
}
