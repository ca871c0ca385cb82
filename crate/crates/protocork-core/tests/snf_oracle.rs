//! Cross-checks the Smith normal form against an independent textbook
//! implementation on random integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use protocork_core::matrix::{smith_form, IntMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Plain pivot-chasing diagonalization followed by a pairwise gcd/lcm fix
/// of the diagonal. No fraction-free tricks, no shared code with the
/// library routine.
fn naive_invariant_factors(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let r = rows.len();
    let c = if r == 0 { 0 } else { rows[0].len() };
    let mut m: Vec<Vec<BigInt>> =
        rows.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut diag = Vec::new();
    for t in 0..r.min(c) {
        'step: loop {
            let Some((pr, pc)) = pivot_position(&m, t) else { break };
            m.swap(t, pr);
            for row in m.iter_mut() {
                row.swap(t, pc);
            }
            let p = m[t][t].clone();
            for i in (t + 1)..r {
                if !m[i][t].is_zero() {
                    let q = &m[i][t] / &p;
                    for j in t..c {
                        let s = &q * &m[t][j];
                        m[i][j] -= s;
                    }
                    // Any nonzero remainder is strictly smaller than the
                    // pivot and gets picked next round.
                    continue 'step;
                }
            }
            for j in (t + 1)..c {
                if !m[t][j].is_zero() {
                    let q = &m[t][j] / &p;
                    for i in t..r {
                        let s = &q * &m[i][t];
                        m[i][j] -= s;
                    }
                    continue 'step;
                }
            }
            break;
        }
        if m[t][t].is_zero() {
            break;
        }
        diag.push(m[t][t].abs());
    }
    // diag generates the same module as the invariant factors; fold pairs
    // until the divisibility chain holds. Each fold strictly lowers the
    // sum, so this terminates.
    loop {
        let mut changed = false;
        for i in 0..diag.len() {
            for j in (i + 1)..diag.len() {
                if !(&diag[j] % &diag[i]).is_zero() {
                    let g = diag[i].gcd(&diag[j]);
                    let l = diag[i].lcm(&diag[j]);
                    diag[i] = g;
                    diag[j] = l;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    diag.sort();
    diag
}

fn pivot_position(m: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if m[bi][bj].abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

#[test]
fn smith_form_agrees_with_naive_reduction_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x534e46);
    for case in 0..500 {
        let rows = rng.gen_range(1..=12);
        let cols = rng.gen_range(1..=12);
        let grid: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect())
            .collect();
        let a = IntMatrix::from_rows(&grid);
        let s = smith_form(&a);
        assert!(s.verify(&a), "case {case}: U*A*V != D or U/V not unimodular");
        let expected = naive_invariant_factors(&grid);
        assert_eq!(
            s.invariant_factors, expected,
            "case {case}: invariant factors disagree for {grid:?}"
        );
        for w in s.invariant_factors.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "case {case}: divisibility chain broken");
        }
    }
}

#[test]
fn smith_form_agrees_on_structured_matrices() {
    let cases: Vec<Vec<Vec<i64>>> = vec![
        vec![vec![0]],
        vec![vec![0, 0], vec![0, 0]],
        vec![vec![2, 4], vec![4, 8]],
        vec![vec![6, 0], vec![0, 10]],
        vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]],
        vec![vec![100, 99], vec![99, 98]],
    ];
    for grid in cases {
        let a = IntMatrix::from_rows(&grid);
        let s = smith_form(&a);
        assert!(s.verify(&a));
        assert_eq!(s.invariant_factors, naive_invariant_factors(&grid), "grid {grid:?}");
    }
}
