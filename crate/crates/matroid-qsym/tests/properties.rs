//! Cross-module invariants: triangularity of the sigma-indexed bases, the
//! reciprocity involution on poset enumerators, brute-force agreement on
//! sampled posets, and the matroid-level identities that are not already
//! part of the acceptance suite.

mod common;

use common::Lcg;
use matroid_qsym::int::Int;
use matroid_qsym::invariant;
use matroid_qsym::linalg::mat_mul;
use matroid_qsym::matroid::{freedom_matroid, Matroid, WeightFunction};
use matroid_qsym::poset::{
    expand_in_q_basis, q_in_fundamental_matrix, r_in_fundamental_matrix, r_in_q_matrix,
    LabelledPoset, SigmaString,
};
use matroid_qsym::qsym::{Basis, Composition, QSymFn};

/// Every poset on `[n]`, as all transitive orientation choices of the
/// complete graph.
fn all_posets(n: u32) -> Vec<LabelledPoset> {
    let pairs: Vec<(u32, u32)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0u8; pairs.len()];
    'outer: loop {
        let rels: Vec<(u32, u32)> = pairs
            .iter()
            .zip(&choice)
            .filter_map(|(&(i, j), &c)| match c {
                1 => Some((i, j)),
                2 => Some((j, i)),
                _ => None,
            })
            .collect();
        if let Ok(p) = LabelledPoset::from_relations((1..=n).collect(), &rels) {
            if p.relations().len() == rels.len() {
                out.push(p);
            }
        }
        for slot in choice.iter_mut() {
            if *slot < 2 {
                *slot += 1;
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
    out
}

fn random_poset(n: u32, rng: &mut Lcg) -> LabelledPoset {
    loop {
        let mut rels = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                match rng.below(4) {
                    0 => rels.push((i, j)),
                    1 => rels.push((j, i)),
                    _ => {}
                }
            }
        }
        if let Ok(p) = LabelledPoset::from_relations((1..=n).collect(), &rels) {
            return p;
        }
    }
}

fn check_counts_against_enumerator(p: &LabelledPoset, k: u32) {
    let f = p.enumerator().unwrap().to_basis(Basis::Monomial);
    let counts = p.partition_counts(k).unwrap();
    for (values, count) in &counts {
        let mut parts: Vec<u32> = Vec::new();
        let mut i = 0;
        while i < values.len() {
            let run = values[i..].iter().take_while(|&&v| v == values[i]).count();
            parts.push(run as u32);
            i += run;
        }
        assert_eq!(
            f.coeff(&Composition::of(&parts)),
            Int::from(*count),
            "{p:?} with values {values:?}"
        );
    }
}

#[test]
fn partition_counts_match_enumerators_small_and_sampled() {
    for n in 0..=5u32 {
        for p in all_posets(n) {
            for k in 1..=n {
                check_counts_against_enumerator(&p, k);
            }
        }
    }
    let mut rng = Lcg(2024);
    for n in [6u32, 7] {
        for _ in 0..25 {
            let p = random_poset(n, &mut rng);
            for k in 1..=n.min(5) {
                check_counts_against_enumerator(&p, k);
            }
        }
    }
}

#[test]
fn reciprocity_involution_on_all_five_element_posets() {
    for n in 0..=5u32 {
        let sign = Int::from(if n % 2 == 1 { -1 } else { 1 });
        for p in all_posets(n) {
            let natural = p.naturally_labelled().enumerator().unwrap();
            let strict = p.strictly_labelled().enumerator().unwrap();
            assert_eq!(natural.antipode(), strict.scaled(&sign), "{p:?}");
        }
    }
}

#[test]
fn q_matrix_is_lower_unitriangular_up_to_seven() {
    for n in 1..=7usize {
        let l = q_in_fundamental_matrix(n);
        let dim = l.len();
        for i in 0..dim {
            assert!(l[i][i].is_one(), "degree {n} diagonal at {i}");
            for j in i + 1..dim {
                assert!(l[i][j].is_zero(), "degree {n} above diagonal ({i},{j})");
            }
        }
    }
}

#[test]
fn multiplying_q_by_l1_expands_triangularly() {
    // F(Q_sigma) * L[1] = F(Q_(sigma 0)) + nonnegative lex-smaller terms.
    let l1 = QSymFn::fundamental(Composition::of(&[1]));
    for n in 1..=6usize {
        let sigmas = SigmaString::all(n + 1);
        for sigma in SigmaString::all(n) {
            let f = sigma.q_poset().enumerator().unwrap();
            let prod = f.product(&l1);
            let coeffs = expand_in_q_basis(&prod, n + 1);
            let extended = sigma.concat_bits(&[false]);
            let pivot = sigmas.iter().position(|s| *s == extended).unwrap();
            assert!(coeffs[pivot].is_one(), "sigma {sigma}");
            for (i, c) in coeffs.iter().enumerate() {
                if i > pivot {
                    assert!(c.is_zero(), "sigma {sigma} has support above {extended}");
                } else {
                    assert!(!c.is_negative(), "sigma {sigma} coefficient {i}");
                }
            }
        }
    }
}

#[test]
fn r_in_q_is_nonnegative_upper_unitriangular() {
    for n in 1..=6usize {
        let u = r_in_q_matrix(n);
        let dim = u.len();
        for i in 0..dim {
            assert!(u[i][i].is_one());
            for j in 0..dim {
                assert!(!u[i][j].is_negative(), "degree {n} at ({i},{j})");
                if j < i {
                    assert!(u[i][j].is_zero(), "degree {n} below diagonal ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn lu_product_recovers_the_r_matrix() {
    for n in 1..=6usize {
        let a = r_in_fundamental_matrix(n);
        let l = q_in_fundamental_matrix(n);
        let u = r_in_q_matrix(n);
        assert_eq!(mat_mul(&l, &u), *a, "degree {n}");
    }
}

#[test]
fn greedy_matches_minimum_on_a_thousand_samples() {
    let pool: Vec<Matroid> = {
        let mut v = vec![
            Matroid::uniform(1, 2),
            Matroid::uniform(2, 4),
            Matroid::uniform(3, 6),
            Matroid::uniform(2, 7),
            Matroid::uniform(3, 7),
            Matroid::free(5),
            Matroid::loops(3).direct_sum(&Matroid::uniform(2, 4)),
            freedom_matroid(&"0110100".parse().unwrap()),
            freedom_matroid(&"0101010".parse().unwrap()),
            freedom_matroid(&"0011011".parse().unwrap()),
        ];
        let duals: Vec<Matroid> = v.iter().map(|m| m.dual()).collect();
        v.extend(duals);
        v
    };
    let mut rng = Lcg(7);
    for _ in 0..1000 {
        let m = &pool[rng.below(pool.len() as u64) as usize];
        let weights: Vec<u64> = (0..m.ground_size()).map(|_| 1 + rng.below(9)).collect();
        let f = WeightFunction::new(weights).unwrap();
        let (min_w, _) = m.min_weight_bases(&f);
        let greedy = m.greedy_min_base(&f);
        assert!(m.is_base(greedy));
        assert_eq!(f.weight_of(greedy), min_w);
    }
}

#[test]
fn flag_coefficients_match_monomial_coefficients() {
    let pool: Vec<&Matroid> = common::catalog_n5()
        .iter()
        .chain(common::rank3_n6_connected())
        .collect();
    for m in pool {
        let inv = invariant::f(m).unwrap().to_basis(Basis::Monomial);
        for alpha in Composition::all(m.ground_size()) {
            assert_eq!(
                invariant::flag_coefficient(m, &alpha),
                inv.coeff(&alpha),
                "{m:?} at {alpha}"
            );
        }
    }
}

#[test]
fn expansion_matches_bruteforce_on_the_full_six_element_catalog() {
    for m in common::catalog_n6().iter().filter(|m| m.ground_size() == 6) {
        let inv = invariant::f(m).unwrap().to_basis(Basis::Monomial);
        let counts = invariant::f_bruteforce(m, 6).unwrap();
        for alpha in Composition::all(6) {
            let expected = counts.get(&alpha).cloned().unwrap_or(Int::ZERO);
            assert_eq!(inv.coeff(&alpha), expected, "{m:?} at {alpha}");
        }
    }
}

#[test]
fn loops_and_isthmuses_agree_through_the_invariant() {
    for m in common::catalog_n5().iter().filter(|m| m.ground_size() <= 4) {
        let with_loop = invariant::f(&m.direct_sum(&Matroid::loops(1))).unwrap();
        let with_isthmus = invariant::f(&m.direct_sum(&Matroid::free(1))).unwrap();
        assert!(with_loop.equivalent(&with_isthmus), "{m:?}");
    }
}

#[test]
fn polytope_l_coefficients_behave() {
    // Nonnegative, sum to n factorial, all-ones coefficient counts
    // vertices; matroid polytopes with n <= 5 and graphic zonotopes with
    // n <= 5 vertices.
    let mut polytopes = Vec::new();
    for m in common::catalog_n5().iter().filter(|m| m.ground_size() == 4) {
        polytopes.push(matroid_qsym::genperm::from_matroid(m));
    }
    for edges in 0u32..(1 << 6) {
        let pairs: Vec<(usize, usize)> = (1..=4usize)
            .flat_map(|a| (a + 1..=4).map(move |b| (a, b)))
            .collect();
        let chosen: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| edges & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        let g = matroid_qsym::genperm::SimpleGraph::new(4, &chosen).unwrap();
        polytopes.push(g.zonotope().unwrap());
    }
    for q in polytopes {
        let n = q.ambient_dim();
        let inv = q.invariant().unwrap().to_basis(Basis::Fundamental);
        assert!(inv.terms().all(|(_, c)| !c.is_negative()));
        let total: Int = inv.terms().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, Int::factorial(n));
        assert_eq!(
            inv.coeff(&Composition::of(&vec![1; n])),
            Int::from(q.vertices().len())
        );
    }
}

#[test]
fn polytope_route_equals_matroid_route_on_the_catalog() {
    for m in common::catalog_n5() {
        assert!(
            matroid_qsym::genperm::matches_matroid_invariant(m).unwrap(),
            "{m:?}"
        );
    }
}

#[test]
fn isthmus_extension_multiplies_by_l1() {
    let l1 = QSymFn::fundamental(Composition::of(&[1]));
    for m in common::catalog_n5().iter().filter(|m| m.ground_size() <= 4) {
        let extended = matroid_qsym::matroid::add_isthmus(m);
        let lhs = invariant::f(&extended).unwrap();
        let rhs = invariant::f(m).unwrap().product(&l1);
        assert!(lhs.equivalent(&rhs), "{m:?}");
    }
}

#[test]
fn small_matroids_are_freedom_matroids() {
    // Every matroid on at most three elements is isomorphic to one built
    // from isthmus and free-element steps (any bit sequence, not only
    // those starting with an isthmus).
    use matroid_qsym::matroid::{add_free_element, add_isthmus};
    for n in 1..=3usize {
        let built: Vec<Matroid> = (0u32..(1 << n))
            .map(|bits| {
                let mut m = Matroid::empty();
                for i in 0..n {
                    m = if bits & (1 << i) != 0 {
                        add_free_element(&m)
                    } else {
                        add_isthmus(&m)
                    };
                }
                m
            })
            .collect();
        for r in 0..=n {
            for m in matroid_qsym::matroid::enumerate_matroids(n, r, false).unwrap() {
                assert!(
                    built
                        .iter()
                        .any(|f| matroid_qsym::matroid::is_isomorphic(f, &m).unwrap()),
                    "{m:?}"
                );
            }
        }
    }
}

#[test]
fn freedom_expansion_triangular_through_degree_six() {
    for n in 1..=6usize {
        for sigma in SigmaString::all(n) {
            let e = invariant::freedom_expansion(&sigma).unwrap();
            assert!(e.ok(), "sigma {sigma}: {e:?}");
        }
    }
}
