//! The quasisymmetric invariant of a matroid and its satellites.
//!
//! `f(M)` is the generating function, over weightings of the ground set by
//! positive integers, of the weightings whose minimum-weight base is unique,
//! graded by how often each value is used. It is computed as the sum of the
//! strictly labelled exchange-poset enumerators over all bases; the
//! brute-force counters here provide independent oracles for it and for the
//! tie-counting variant `f_star`.

use std::collections::BTreeMap;

use crate::int::Int;
use crate::matroid::{subsets_of_mask, ElemSet, Matroid, MatroidError};
use crate::poset::{expand_in_strict_r_basis, SigmaString};
use crate::qsym::{Basis, Composition, IntValuedPoly, QSymFn, TensorQSym};

/// Ground-set budget for the linear-extension expansion.
pub const F_SIZE_LIMIT: usize = 10;
/// Budget for brute-force enumeration: `k^n` must stay below this.
pub const BRUTE_FORCE_BUDGET: u64 = 10_000_000;

/// The invariant, as a homogeneous degree-`n` function in the fundamental
/// basis: the sum over bases of the strictly labelled exchange-poset
/// enumerators.
pub fn f(m: &Matroid) -> Result<QSymFn, MatroidError> {
    f_with_limit(m, F_SIZE_LIMIT)
}

pub fn f_with_limit(m: &Matroid, limit: usize) -> Result<QSymFn, MatroidError> {
    if m.ground_size() > limit {
        return Err(MatroidError::SizeLimit(format!(
            "invariant computation limited to {limit} elements, got {}",
            m.ground_size()
        )));
    }
    let mut acc = QSymFn::zero(Basis::Fundamental);
    for &base in m.bases() {
        let poset = m.base_poset(base)?.strictly_labelled();
        acc = acc.add(&poset.enumerator_with_limit(limit.max(12))?);
    }
    Ok(acc)
}

/// The tie-counting companion: the generating function of all weightings,
/// each weighted by its number of minimum-weight bases. Computed as
/// `(-1)^n` times the sign-and-complement involution applied to `f(M)`.
pub fn f_star(m: &Matroid) -> Result<QSymFn, MatroidError> {
    let sign = Int::from(if m.ground_size() % 2 == 1 { -1 } else { 1 });
    Ok(f(m)?.antipode().scaled(&sign))
}

/// Counts weightings `E -> {1..k}` that single out a unique minimum base,
/// bucketed by the composition recording how often each value is used.
/// The count at a composition with `j <= k` parts is the monomial-basis
/// coefficient of the invariant.
pub fn f_bruteforce(
    m: &Matroid,
    k: u32,
) -> Result<BTreeMap<Composition, Int>, MatroidError> {
    f_bruteforce_with_budget(m, k, BRUTE_FORCE_BUDGET)
}

pub fn f_bruteforce_with_budget(
    m: &Matroid,
    k: u32,
    budget: u64,
) -> Result<BTreeMap<Composition, Int>, MatroidError> {
    brute_force_counts(m, k, budget, |ties| if ties == 1 { 1 } else { 0 })
}

/// Counts all weightings `E -> {1..k}` weighted by their number of
/// minimum-weight bases; the oracle for `f_star`.
pub fn f_star_bruteforce(
    m: &Matroid,
    k: u32,
) -> Result<BTreeMap<Composition, Int>, MatroidError> {
    f_star_bruteforce_with_budget(m, k, BRUTE_FORCE_BUDGET)
}

pub fn f_star_bruteforce_with_budget(
    m: &Matroid,
    k: u32,
    budget: u64,
) -> Result<BTreeMap<Composition, Int>, MatroidError> {
    brute_force_counts(m, k, budget, |ties| ties)
}

fn brute_force_counts(
    m: &Matroid,
    k: u32,
    budget: u64,
    weight: impl Fn(u64) -> u64,
) -> Result<BTreeMap<Composition, Int>, MatroidError> {
    let n = m.ground_size();
    if n == 0 {
        // The one empty weighting; the empty matroid's sole base wins it.
        let mut out = BTreeMap::new();
        let w = weight(1);
        if w > 0 {
            out.insert(Composition::empty(), Int::from(w));
        }
        return Ok(out);
    }
    if k == 0 {
        return Ok(BTreeMap::new());
    }
    let total = (k as u64).checked_pow(n as u32);
    if total.is_none_or(|t| t > budget) {
        return Err(MatroidError::SizeLimit(format!(
            "brute force budget exceeded: {k}^{n}"
        )));
    }
    let mut by_pattern: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    let mut values = vec![1u32; n];
    loop {
        let mut best = u64::MAX;
        let mut ties = 0u64;
        for &b in m.bases() {
            let w: u64 = (0..n)
                .filter(|e| b & (1 << e) != 0)
                .map(|e| values[e] as u64)
                .sum();
            if w < best {
                best = w;
                ties = 1;
            } else if w == best {
                ties += 1;
            }
        }
        let contribution = weight(ties);
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
        if carry || n == 0 {
            break;
        }
    }
    // Keep only the exact monomial patterns: values 1..j used, rest unused.
    let mut out = BTreeMap::new();
    for (pattern, count) in by_pattern {
        let j = pattern.iter().position(|&c| c == 0).unwrap_or(k as usize);
        if pattern[j..].iter().all(|&c| c == 0) {
            let alpha = Composition::new(pattern[..j].to_vec()).expect("parts are positive");
            out.insert(alpha, Int::from(count));
        }
    }
    Ok(out)
}

/// The number of set flags with step sizes `alpha` in which every
/// subquotient splits completely; equals the monomial-basis coefficient of
/// the invariant at `alpha`.
pub fn flag_coefficient(m: &Matroid, alpha: &Composition) -> Int {
    if alpha.weight() != m.ground_size() {
        return Int::ZERO;
    }
    fn rec(m: &Matroid, current: ElemSet, steps: &[u32]) -> Int {
        let Some((&step, rest)) = steps.split_first() else {
            return Int::ONE;
        };
        let ground = if m.ground_size() == 32 {
            u32::MAX
        } else {
            (1u32 << m.ground_size()) - 1
        };
        let mut acc = Int::ZERO;
        for add in subsets_of_mask(ground & !current, step as usize) {
            let next = current | add;
            if m.minor(next, current).splits_completely() {
                acc += rec(m, next, rest);
            }
        }
        acc
    }
    rec(m, 0, alpha.parts())
}

/// Counts weightings into `{1..m}` that single out a unique minimum base,
/// as an integer-valued polynomial in `m`.
pub fn phi(m: &Matroid) -> Result<IntValuedPoly, MatroidError> {
    Ok(f(m)?.specialize_ones())
}

/// The expected-tie companion polynomial.
pub fn phi_star(m: &Matroid) -> Result<IntValuedPoly, MatroidError> {
    Ok(f_star(m)?.specialize_ones())
}

/// Checks the polynomial reciprocity `phi(-m) = (-1)^n phi_star(m)` by
/// evaluation at `n + 2` points.
pub fn check_reciprocity(m: &Matroid) -> Result<bool, MatroidError> {
    let n = m.ground_size();
    let p = phi(m)?;
    let q = phi_star(m)?;
    let sign = if n % 2 == 1 { -1i64 } else { 1 };
    Ok((0..=n as i64 + 1).all(|x| p.eval(-x) == q.eval(x) * Int::from(sign)))
}

/// Checks the coalgebra identity: the coproduct of the invariant equals the
/// sum over ground subsets of the tensor of restriction and contraction
/// invariants.
pub fn check_coproduct_identity(m: &Matroid) -> Result<bool, MatroidError> {
    let n = m.ground_size();
    if n > 6 {
        return Err(MatroidError::SizeLimit(
            "coproduct identity check limited to 6 elements".into(),
        ));
    }
    let lhs = f(m)?.coproduct();
    let mut rhs = TensorQSym::zero(Basis::Monomial);
    let ground = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    for set in 0..=ground {
        let left = f(&m.restrict(set))?;
        let right = f(&m.contract(set))?;
        rhs = rhs.add(&TensorQSym::tensor(Basis::Monomial, &left, &right));
        if n == 0 {
            break;
        }
    }
    Ok(lhs == rhs)
}

/// Checks multiplicativity over a direct sum.
pub fn check_product_identity(m1: &Matroid, m2: &Matroid) -> Result<bool, MatroidError> {
    let lhs = f(&m1.direct_sum(m2))?;
    let rhs = f(m1)?.product(&f(m2)?);
    Ok(lhs.equivalent(&rhs))
}

/// Checks that the invariant of the dual has reverse-indexed coefficients.
pub fn check_duality(m: &Matroid) -> Result<bool, MatroidError> {
    Ok(f(&m.dual())?.equivalent(&f(m)?.reverse_alphabet()))
}

/// The fundamental-basis coefficient facts: nonnegativity, total mass `n!`,
/// the all-ones coefficient counting bases, the single-part coefficient
/// detecting complete splitting, and the two-part coefficient formula
/// `#bases * C(loops + coloops, rank + loops - a)` at `(a, n-a)` (for a
/// matroid with at least two bases; with a single base the invariant is a
/// power of `L[1]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LCoefficientReport {
    pub nonnegative: bool,
    pub sum_is_factorial: bool,
    pub ones_counts_bases: bool,
    pub full_part_detects_split: bool,
    pub two_part_formula: bool,
}

impl LCoefficientReport {
    pub fn ok(&self) -> bool {
        self.nonnegative
            && self.sum_is_factorial
            && self.ones_counts_bases
            && self.full_part_detects_split
            && self.two_part_formula
    }
}

pub fn l_coefficient_report(m: &Matroid) -> Result<LCoefficientReport, MatroidError> {
    let n = m.ground_size();
    let fl = f(m)?.to_basis(Basis::Fundamental);
    let nonnegative = fl.terms().all(|(_, c)| !c.is_negative());
    let sum: Int = fl.terms().map(|(_, c)| c.clone()).sum();
    let sum_is_factorial = sum == Int::factorial(n);
    let ones_counts_bases = if n == 0 {
        true
    } else {
        fl.coeff(&Composition::of(&vec![1; n])) == Int::from(m.num_bases())
    };
    let full_part_detects_split = if n == 0 {
        true
    } else {
        let expected = if m.splits_completely() { Int::ONE } else { Int::ZERO };
        fl.coeff(&Composition::of(&[n as u32])) == expected
    };
    let two_part_formula = if m.splits_completely() {
        // One base: the invariant is exactly L[1]^n.
        let mut power = QSymFn::one(Basis::Fundamental);
        let l1 = QSymFn::fundamental(Composition::of(&[1]));
        for _ in 0..n {
            power = power.product(&l1);
        }
        fl.equivalent(&power)
    } else {
        let r = m.rank();
        let loops = m.loop_elements().len();
        let coloops = m.coloop_elements().len();
        let b = Int::from(m.num_bases());
        (1..n as u32).all(|a| {
            let alpha = Composition::of(&[a, n as u32 - a]);
            let j = r as i64 + loops as i64 - a as i64;
            let expected = if j >= 0 && j <= (loops + coloops) as i64 {
                &b * &Int::binomial(&Int::from(loops + coloops), j as usize)
            } else {
                Int::ZERO
            };
            fl.coeff(&alpha) == expected
        })
    };
    Ok(LCoefficientReport {
        nonnegative,
        sum_is_factorial,
        ones_counts_bases,
        full_part_detects_split,
        two_part_formula,
    })
}

/// Expansion of a freedom matroid invariant in the strictly labelled `R`
/// enumerator basis: coefficients by sigma string in lexicographic order,
/// with the expected triangular support and diagonal value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreedomExpansion {
    pub coefficients: Vec<Int>,
    pub diagonal: Int,
    pub expected_diagonal: Int,
    pub triangular: bool,
}

impl FreedomExpansion {
    pub fn ok(&self) -> bool {
        self.triangular && self.diagonal == self.expected_diagonal
    }
}

/// Expands the invariant of the freedom matroid of `sigma` in the strict
/// `R` basis and checks lexicographic triangularity together with the
/// block-binomial diagonal coefficient.
pub fn freedom_expansion(sigma: &SigmaString) -> Result<FreedomExpansion, MatroidError> {
    let n = sigma.len();
    let matroid = crate::matroid::freedom_matroid(sigma);
    let inv = f(&matroid)?;
    let coeffs = expand_in_strict_r_basis(&inv, n);
    let sigmas = SigmaString::all(n);
    let pos = sigmas
        .iter()
        .position(|s| s == sigma)
        .expect("sigma is in the lex enumeration");
    let triangular = coeffs[pos + 1..].iter().all(|c| c.is_zero());
    let bz = sigma.blocks_and_z();
    let mut expected = Int::ONE;
    for (&(s, e), &z) in bz.blocks.iter().zip(&bz.z) {
        expected *= Int::binomial(&Int::from(e - s + 1), z);
    }
    Ok(FreedomExpansion {
        diagonal: coeffs[pos].clone(),
        coefficients: coeffs,
        expected_diagonal: expected,
        triangular,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{elems_to_mask, enumerate_matroids, WeightFunction};

    fn mono(pairs: &[(&[u32], i64)]) -> QSymFn {
        QSymFn::from_terms(
            Basis::Monomial,
            pairs
                .iter()
                .map(|(p, c)| (Composition::of(p), Int::from(*c))),
        )
    }

    #[test]
    fn golden_values() {
        assert!(f(&Matroid::empty()).unwrap().equivalent(&QSymFn::one(Basis::Monomial)));
        let m1 = mono(&[(&[1], 1)]);
        assert!(f(&Matroid::free(1)).unwrap().equivalent(&m1));
        assert!(f(&Matroid::loops(1)).unwrap().equivalent(&m1));
        assert!(f(&Matroid::uniform(1, 2))
            .unwrap()
            .equivalent(&mono(&[(&[1, 1], 2)])));
        assert!(f(&Matroid::uniform(1, 3))
            .unwrap()
            .equivalent(&mono(&[(&[1, 2], 3), (&[1, 1, 1], 6)])));
    }

    #[test]
    fn brute_force_oracle_values() {
        let counts = f_bruteforce(&Matroid::uniform(1, 2), 2).unwrap();
        assert_eq!(counts.get(&Composition::of(&[1, 1])), Some(&Int::from(2)));
        assert_eq!(counts.get(&Composition::of(&[2])), None);

        let counts = f_bruteforce(&Matroid::free(3), 3).unwrap();
        assert_eq!(counts.get(&Composition::of(&[3])), Some(&Int::ONE));

        let counts = f_bruteforce(&Matroid::uniform(2, 3), 3).unwrap();
        assert_eq!(counts.get(&Composition::of(&[3])), None);
    }

    #[test]
    fn theorem_equals_bruteforce_on_samples() {
        for m in [
            Matroid::uniform(2, 4),
            Matroid::uniform(2, 3),
            Matroid::free(2).direct_sum(&Matroid::loops(1)),
            crate::matroid::freedom_matroid(&"01011".parse().unwrap()),
        ] {
            let n = m.ground_size();
            let inv = f(&m).unwrap().to_basis(Basis::Monomial);
            let counts = f_bruteforce(&m, n as u32).unwrap();
            for alpha in Composition::all(n) {
                let expected = counts.get(&alpha).cloned().unwrap_or(Int::ZERO);
                assert_eq!(inv.coeff(&alpha), expected, "{m:?} at {alpha}");
            }
        }
    }

    #[test]
    fn flag_coefficients() {
        assert_eq!(
            flag_coefficient(&Matroid::uniform(1, 2), &Composition::of(&[1, 1])),
            Int::from(2)
        );
        assert_eq!(
            flag_coefficient(&Matroid::uniform(1, 3), &Composition::of(&[1, 2])),
            Int::from(3)
        );
        assert_eq!(
            flag_coefficient(&Matroid::uniform(1, 3), &Composition::of(&[1, 1, 1])),
            Int::from(6)
        );
        // Equality with the monomial coefficients across a whole matroid.
        let m = Matroid::uniform(2, 4);
        let inv = f(&m).unwrap().to_basis(Basis::Monomial);
        for alpha in Composition::all(4) {
            assert_eq!(flag_coefficient(&m, &alpha), inv.coeff(&alpha), "{alpha}");
        }
    }

    #[test]
    fn f_star_matches_its_oracle() {
        for m in [
            Matroid::free(1),
            Matroid::uniform(1, 2),
            Matroid::uniform(1, 3),
            Matroid::uniform(2, 3),
            Matroid::uniform(2, 4),
            Matroid::free(1).direct_sum(&Matroid::loops(1)),
        ] {
            let n = m.ground_size();
            let star = f_star(&m).unwrap().to_basis(Basis::Monomial);
            assert_eq!(star.degree(), Some(n));
            let counts = f_star_bruteforce(&m, n as u32).unwrap();
            for alpha in Composition::all(n) {
                let expected = counts.get(&alpha).cloned().unwrap_or(Int::ZERO);
                assert_eq!(star.coeff(&alpha), expected, "{m:?} at {alpha}");
            }
        }
        // A splits-completely matroid has f_star = f.
        let isthmus = Matroid::free(1);
        assert!(f_star(&isthmus).unwrap().equivalent(&f(&isthmus).unwrap()));
    }

    #[test]
    fn specializations() {
        let p = phi(&Matroid::uniform(1, 2)).unwrap();
        for m in -4i64..=6 {
            assert_eq!(p.eval(m), Int::from(m * m - m));
        }
        let q = phi_star(&Matroid::uniform(1, 2)).unwrap();
        for m in 0i64..=6 {
            assert_eq!(q.eval(m), Int::from(m * m + m));
        }
        // Leading term: the binomial coefficient at C(m, n) is n!.
        for mat in [Matroid::uniform(2, 4), Matroid::uniform(1, 3)] {
            let n = mat.ground_size();
            let p = phi(&mat).unwrap();
            assert_eq!(p.binomial_coeff(n), Int::factorial(n));
        }
    }

    #[test]
    fn reciprocity() {
        for m in [
            Matroid::free(1),
            Matroid::uniform(1, 2),
            Matroid::uniform(2, 4),
            Matroid::uniform(1, 3).direct_sum(&Matroid::free(1)),
        ] {
            assert!(check_reciprocity(&m).unwrap(), "{m:?}");
        }
    }

    #[test]
    fn hopf_identities() {
        assert!(check_coproduct_identity(&Matroid::empty()).unwrap());
        assert!(check_coproduct_identity(&Matroid::uniform(1, 2)).unwrap());
        assert!(check_coproduct_identity(&Matroid::uniform(2, 3)).unwrap());
        assert!(
            check_product_identity(&Matroid::free(1), &Matroid::loops(1)).unwrap()
        );
        // f(isthmus (+) loop) is the square of a single variable sum.
        let sum = Matroid::free(1).direct_sum(&Matroid::loops(1));
        assert!(f(&sum)
            .unwrap()
            .equivalent(&mono(&[(&[1, 1], 2), (&[2], 1)])));
    }

    #[test]
    fn duality() {
        assert!(f(&Matroid::uniform(2, 3))
            .unwrap()
            .equivalent(&mono(&[(&[2, 1], 3), (&[1, 1, 1], 6)])));
        for m in [
            Matroid::uniform(2, 4),
            Matroid::uniform(1, 3),
            Matroid::loops(1),
            crate::matroid::freedom_matroid(&"0101".parse().unwrap()),
        ] {
            assert!(check_duality(&m).unwrap(), "{m:?}");
        }
    }

    #[test]
    fn l_coefficient_reports() {
        let report = l_coefficient_report(&Matroid::uniform(2, 3)).unwrap();
        assert!(report.ok());
        let fl = f(&Matroid::uniform(2, 3)).unwrap();
        assert_eq!(fl.coeff(&Composition::of(&[1, 1, 1])), Int::from(3));
        let total: Int = fl.terms().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, Int::from(6));

        // U(1,2): f = 2 L[1,1].
        let fl = f(&Matroid::uniform(1, 2)).unwrap();
        assert_eq!(
            fl,
            QSymFn::term(Basis::Fundamental, Composition::of(&[1, 1]), Int::from(2))
        );
        for m in [
            Matroid::free(2),
            Matroid::free(1).direct_sum(&Matroid::loops(1)),
            Matroid::uniform(2, 4),
            Matroid::uniform(2, 4).direct_sum(&Matroid::free(1)),
            Matroid::uniform(1, 3).direct_sum(&Matroid::loops(2)),
        ] {
            assert!(l_coefficient_report(&m).unwrap().ok(), "{m:?}");
        }
    }

    #[test]
    fn loops_and_isthmuses_are_interchangeable() {
        for m in [Matroid::uniform(1, 2), Matroid::uniform(2, 3)] {
            let with_loop = m.direct_sum(&Matroid::loops(1));
            let with_isthmus = m.direct_sum(&Matroid::free(1));
            assert!(f(&with_loop)
                .unwrap()
                .equivalent(&f(&with_isthmus).unwrap()));
        }
    }

    #[test]
    fn strict_labelling_choice_is_irrelevant() {
        // Swapping two incomparable labels in a strict labelling yields a
        // different strict labelling with the same enumerator.
        let m = crate::matroid::freedom_matroid(&"01011".parse().unwrap());
        let mut swaps = 0;
        for &base in m.bases() {
            let one = m.base_poset(base).unwrap().strictly_labelled();
            let labels = one.labels().to_vec();
            for (a, b) in labels
                .iter()
                .flat_map(|&a| labels.iter().map(move |&b| (a, b)))
                .filter(|&(a, b)| a < b && !one.less(a, b) && !one.less(b, a))
            {
                let map: std::collections::BTreeMap<u32, u32> = labels
                    .iter()
                    .map(|&l| {
                        let image = if l == a { b } else if l == b { a } else { l };
                        (l, image)
                    })
                    .collect();
                let rels: Vec<(u32, u32)> = one
                    .relations()
                    .iter()
                    .map(|&(x, y)| (map[&x], map[&y]))
                    .collect();
                let other =
                    crate::poset::LabelledPoset::from_relations(labels.clone(), &rels)
                        .unwrap();
                // Only another, genuinely different, strict labelling is
                // expected to agree.
                if other == one || !other.relations().iter().all(|&(lo, hi)| lo > hi) {
                    continue;
                }
                assert_eq!(one.enumerator().unwrap(), other.enumerator().unwrap());
                swaps += 1;
            }
        }
        assert!(swaps > 0, "at least one poset admits a strict label swap");
    }

    #[test]
    fn injective_orders_extend_the_winning_base_poset() {
        // For an injective weighting, the unique minimum base's exchange
        // poset admits the weight order as a linear extension.
        let m = Matroid::uniform(2, 4);
        let perms = [
            vec![1u64, 2, 3, 4],
            vec![4, 3, 2, 1],
            vec![2, 4, 1, 3],
            vec![3, 1, 4, 2],
        ];
        for weights in perms {
            let wf = WeightFunction::new(weights.clone()).unwrap();
            let (_, winners) = m.min_weight_bases(&wf);
            assert_eq!(winners.len(), 1);
            let poset = m.base_poset(winners[0]).unwrap();
            let mut order: Vec<u32> = (1..=4).collect();
            order.sort_by_key(|&e| weights[e as usize - 1]);
            // No relation may point backwards in the weight order.
            for (lo, hi) in poset.relations() {
                let pos = |x: u32| order.iter().position(|&y| y == x).unwrap();
                assert!(pos(lo) < pos(hi));
            }
        }
    }

    #[test]
    fn freedom_expansions() {
        let e = freedom_expansion(&"01001110".parse().unwrap()).unwrap();
        assert!(e.ok());
        assert_eq!(e.diagonal, Int::from(20));

        let e = freedom_expansion(&"0000".parse().unwrap()).unwrap();
        assert!(e.ok());
        assert_eq!(e.diagonal, Int::ONE);

        let e = freedom_expansion(&"01".parse().unwrap()).unwrap();
        assert!(e.ok());
        assert_eq!(e.diagonal, Int::from(2));
    }

    #[test]
    fn theorem_equals_bruteforce_on_small_catalogs() {
        for n in 0..=4usize {
            for r in 0..=n {
                for m in enumerate_matroids(n, r, false).unwrap() {
                    let inv = f(&m).unwrap().to_basis(Basis::Monomial);
                    let counts = f_bruteforce(&m, n as u32).unwrap();
                    for alpha in Composition::all(n) {
                        let expected = counts.get(&alpha).cloned().unwrap_or(Int::ZERO);
                        assert_eq!(inv.coeff(&alpha), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn size_budget() {
        let big = Matroid::uniform(1, 11);
        assert!(matches!(f(&big), Err(MatroidError::SizeLimit(_))));
        assert!(matches!(
            f_bruteforce_with_budget(&Matroid::uniform(2, 4), 4, 100),
            Err(MatroidError::SizeLimit(_))
        ));
        let _ = elems_to_mask(&[1]);
    }
}
