//! Exact linear algebra over the integers: Hermite-style row reduction,
//! unitriangular solves, and a small rational simplex used to certify a
//! strictly positive linear functional on a finite set of lattice vectors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::int::Int;

pub type IntMatrix = Vec<Vec<Int>>;

/// Row-style Hermite normal form.
///
/// Reduces `rows` in place by integer row operations, scanning columns left
/// to right and choosing pivots greedily. Returns the pivot column of each
/// nonzero row, in order. On return the nonzero rows form a basis of the
/// lattice spanned by the input rows, pivots are positive, and entries above
/// each pivot are reduced into `[0, pivot)`.
pub fn hermite_normal_form(rows: &mut IntMatrix) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r >= rows.len() {
            break;
        }
        // Euclidean elimination within the column.
        loop {
            let mut best: Option<usize> = None;
            for i in r..rows.len() {
                if !rows[i][col].is_zero()
                    && best.is_none_or(|b| rows[i][col].abs() < rows[b][col].abs())
                {
                    best = Some(i);
                }
            }
            let Some(best) = best else { break };
            rows.swap(r, best);
            if rows[r][col].is_negative() {
                for x in rows[r].iter_mut() {
                    *x = -&*x;
                }
            }
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let (q, _) = rows[i][col].div_mod_floor(&rows[r][col]);
                for j in 0..ncols {
                    let delta = &q * &rows[r][j];
                    rows[i][j] = &rows[i][j] - &delta;
                }
                if !rows[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if rows[r][col].is_zero() {
            continue;
        }
        // Reduce the rows above into the canonical range.
        for i in 0..r {
            let (q, _) = rows[i][col].div_mod_floor(&rows[r][col]);
            if q.is_zero() {
                continue;
            }
            for j in 0..ncols {
                let delta = &q * &rows[r][j];
                rows[i][j] = &rows[i][j] - &delta;
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Solves `M x = b` where `M` is square lower unitriangular (unit diagonal,
/// zero above), by forward substitution. Exact over the integers.
pub fn solve_lower_unitriangular(m: &IntMatrix, b: &[Int]) -> Vec<Int> {
    let n = b.len();
    let mut x = vec![Int::ZERO; n];
    for i in 0..n {
        debug_assert!(m[i][i].is_one());
        let mut acc = b[i].clone();
        for j in 0..i {
            acc -= &(&m[i][j] * &x[j]);
        }
        x[i] = acc;
    }
    x
}

/// Solves `M x = b` where `M` is square upper unitriangular, by back
/// substitution.
pub fn solve_upper_unitriangular(m: &IntMatrix, b: &[Int]) -> Vec<Int> {
    let n = b.len();
    let mut x = vec![Int::ZERO; n];
    for i in (0..n).rev() {
        debug_assert!(m[i][i].is_one());
        let mut acc = b[i].clone();
        for j in i + 1..n {
            acc -= &(&m[i][j] * &x[j]);
        }
        x[i] = acc;
    }
    x
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let rows = a.len();
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![Int::ZERO; cols]; rows];
    for i in 0..rows {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                let term = &a[i][k] * &b[k][j];
                out[i][j] += &term;
            }
        }
    }
    out
}

/// Searches for an integer functional `phi` with `phi . g >= 1` for every
/// generator `g`. Returns `None` when no such functional exists (the cone
/// spanned by the generators is not pointed towards an open halfspace).
///
/// Feasibility is decided exactly by a phase-one simplex over rationals; the
/// rational solution is then scaled to integers and re-verified.
pub fn positive_functional(generators: &[Vec<Int>]) -> Option<Vec<Int>> {
    if generators.is_empty() {
        return Some(Vec::new());
    }
    let dim = generators[0].len();
    let m = generators.len();
    // Variables: phi+ (dim), phi- (dim), slack (m), artificial (m).
    // Constraint i: sum_j g_ij (phi+_j - phi-_j) - s_i + a_i = 1.
    let nvars = 2 * dim + 2 * m;
    let mut tableau: Vec<Vec<BigRational>> =
        vec![vec![BigRational::zero(); nvars + 1]; m];
    for (i, g) in generators.iter().enumerate() {
        for j in 0..dim {
            let v = BigRational::from_integer(g[j].to_bigint());
            tableau[i][j] = v.clone();
            tableau[i][dim + j] = -v;
        }
        tableau[i][2 * dim + i] = -BigRational::one();
        tableau[i][2 * dim + m + i] = BigRational::one();
        tableau[i][nvars] = BigRational::one();
    }
    // Objective: minimize the sum of artificials. Stored as maximization of
    // its negation; reduced costs kept in a separate row.
    let mut basis: Vec<usize> = (0..m).map(|i| 2 * dim + m + i).collect();
    let mut obj = vec![BigRational::zero(); nvars + 1];
    for i in 0..m {
        // obj row starts as sum of artificial rows (cost 1 each).
        for j in 0..=nvars {
            let t = tableau[i][j].clone();
            obj[j] += t;
        }
    }
    loop {
        // Bland's rule: entering variable = smallest index with positive
        // reduced cost among non-artificial columns (artificials may leave
        // but never re-enter).
        let mut enter = None;
        for j in 0..2 * dim + m {
            if obj[j].is_positive() && !basis.contains(&j) {
                enter = Some(j);
                break;
            }
        }
        let Some(enter) = enter else { break };
        // Ratio test, Bland tie-break on basis index.
        let mut leave: Option<usize> = None;
        let mut best: Option<BigRational> = None;
        for i in 0..m {
            if tableau[i][enter].is_positive() {
                let ratio = &tableau[i][nvars] / &tableau[i][enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let leave = leave?; // unbounded phase-one cannot happen, but bail safely
        // Pivot.
        let piv = tableau[leave][enter].clone();
        for j in 0..=nvars {
            tableau[leave][j] = &tableau[leave][j] / &piv;
        }
        for i in 0..m {
            if i != leave && !tableau[i][enter].is_zero() {
                let factor = tableau[i][enter].clone();
                for j in 0..=nvars {
                    let delta = &factor * &tableau[leave][j];
                    tableau[i][j] = &tableau[i][j] - delta;
                }
            }
        }
        if !obj[enter].is_zero() {
            let factor = obj[enter].clone();
            for j in 0..=nvars {
                let delta = &factor * &tableau[leave][j];
                obj[j] = &obj[j] - delta;
            }
        }
        basis[leave] = enter;
    }
    // Feasible iff all artificials are zero, i.e. objective value is zero.
    if !obj[nvars].is_zero() {
        return None;
    }
    if basis.iter().enumerate().any(|(i, &b)| {
        b >= 2 * dim + m && !tableau[i][nvars].is_zero()
    }) {
        return None;
    }
    let mut phi = vec![BigRational::zero(); dim];
    for (i, &b) in basis.iter().enumerate() {
        if b < dim {
            phi[b] += tableau[i][nvars].clone();
        } else if b < 2 * dim {
            phi[b - dim] -= tableau[i][nvars].clone();
        }
    }
    // Clear denominators.
    let mut denom = BigInt::one();
    for v in &phi {
        denom = num_integer::lcm(denom, v.denom().clone());
    }
    let out: Vec<Int> = phi
        .iter()
        .map(|v| Int::from(v.numer() * (&denom / v.denom())))
        .collect();
    // The scaled functional still satisfies phi . g >= 1 since denom >= 1.
    for g in generators {
        let dot: Int = g.iter().zip(&out).map(|(a, b)| a * b).sum();
        if dot < Int::ONE {
            return None;
        }
    }
    Some(out)
}
