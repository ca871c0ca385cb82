//! Exact integer linear algebra: matrices over Z with arbitrary precision
//! entries, Smith normal form with unimodular transforms, cokernel and
//! kernel computations, and rational signatures of symmetric forms.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense row-major matrix over Z.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds from i64 rows; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let mut m = IntMatrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(*v));
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut m = IntMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, BigInt::from(f(i, j)));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    let cur = out.get(i, j) + add;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    pub fn add_multiple_of_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let add = k * self.get(src, j);
            let v = self.get(dst, j) + add;
            self.set(dst, j, v);
        }
    }

    /// col[dst] += k * col[src]
    pub fn add_multiple_of_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let add = k * self.get(i, src);
            let v = self.get(i, dst) + add;
            self.set(i, dst, v);
        }
    }

    pub fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.get(r, j);
            self.set(r, j, v);
        }
    }

    pub fn negate_col(&mut self, c: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, c);
            self.set(i, c, v);
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j);
                    m.set(i, j, num / &prev);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.get(k, k).clone();
        }
        let d = m.get(n - 1, n - 1).clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for j in 0..self.cols {
                row.push(i64::try_from(self.get(i, j)).ok()?);
            }
            out.push(row);
        }
        Some(out)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Smith normal form U * A * V = D with U, V unimodular and the diagonal of
/// D a divisibility chain d1 | d2 | ... of non-negative integers.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
    /// Nonzero diagonal entries of D in divisibility order.
    pub invariant_factors: Vec<BigInt>,
}

impl SmithForm {
    /// Checks U * A * V == D. Cheap sanity guard used by tests.
    pub fn verify(&self, a: &IntMatrix) -> bool {
        self.u.mul(a).mul(&self.v) == self.d
    }
}

/// Finitely generated abelian group: free rank plus torsion coefficients
/// greater than 1 in divisibility order.
#[derive(Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn describe(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        if self.is_trivial() {
            return String::from("0");
        }
        if self.free_rank > 0 {
            let _ = write!(s, "Z^{}", self.free_rank);
        }
        for t in &self.torsion {
            if !s.is_empty() {
                s.push_str(" + ");
            }
            let _ = write!(s, "Z/{}", t);
        }
        s
    }
}

impl fmt::Debug for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

fn smallest_nonzero_pivot(m: &IntMatrix, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in from..m.rows() {
        for j in from..m.cols() {
            let v = m.get(i, j);
            if v.is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if v.abs() < m.get(bi, bj).abs() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

/// Smith normal form by smallest-pivot Euclidean elimination with full
/// transform tracking. One reduction per restart: the pivot is the global
/// minimum of the block, so any nonzero remainder is strictly smaller and
/// becomes the next pivot.
pub fn smith_form(a: &IntMatrix) -> SmithForm {
    let mut d = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut v = IntMatrix::identity(a.cols());
    let n = a.rows().min(a.cols());
    let mut k = 0;
    'outer: while k < n {
        let Some((pi, pj)) = smallest_nonzero_pivot(&d, k) else {
            break;
        };
        d.swap_rows(k, pi);
        u.swap_rows(k, pi);
        d.swap_cols(k, pj);
        v.swap_cols(k, pj);
        for i in k + 1..d.rows() {
            if !d.get(i, k).is_zero() {
                let neg_q = -d.get(i, k).div_floor(d.get(k, k));
                d.add_multiple_of_row(i, k, &neg_q);
                u.add_multiple_of_row(i, k, &neg_q);
                continue 'outer;
            }
        }
        for j in k + 1..d.cols() {
            if !d.get(k, j).is_zero() {
                let neg_q = -d.get(k, j).div_floor(d.get(k, k));
                d.add_multiple_of_col(j, k, &neg_q);
                v.add_multiple_of_col(j, k, &neg_q);
                continue 'outer;
            }
        }
        // Divisibility: fold a row holding an entry the pivot misses into
        // the cleared row k; the next restarts leave a smaller remainder.
        for i in k + 1..d.rows() {
            for j in k + 1..d.cols() {
                if !(d.get(i, j) % d.get(k, k)).is_zero() {
                    d.add_multiple_of_row(k, i, &BigInt::one());
                    u.add_multiple_of_row(k, i, &BigInt::one());
                    continue 'outer;
                }
            }
        }
        if d.get(k, k).is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
        k += 1;
    }
    let rank = k;
    let invariant_factors = (0..rank).map(|i| d.get(i, i).clone()).collect();
    SmithForm { u, d, v, rank, invariant_factors }
}

/// Cokernel of A viewed as a map Z^cols -> Z^rows.
pub fn cokernel(a: &IntMatrix) -> AbelianGroup {
    let s = smith_form(a);
    let torsion = s
        .invariant_factors
        .iter()
        .filter(|f| !f.is_one())
        .cloned()
        .collect::<Vec<_>>();
    AbelianGroup { free_rank: a.rows() - s.rank, torsion }
}

/// Integer basis of the kernel of A viewed as a map Z^cols -> Z^rows.
/// The vectors are the columns of V beyond the rank.
pub fn kernel_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let s = smith_form(a);
    (s.rank..a.cols())
        .map(|j| (0..a.cols()).map(|i| s.v.get(i, j).clone()).collect())
        .collect()
}

/// Signature data (positive, negative, zero inertia indices) of a symmetric
/// integer matrix, computed exactly over Q by congruence diagonalization.
pub fn symmetric_signature(m: &IntMatrix) -> (usize, usize, usize) {
    assert!(m.is_symmetric(), "signature of non-symmetric matrix");
    let n = m.rows();
    let mut q: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| BigRational::from(m.get(i, j).clone())).collect())
        .collect();
    let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
    for k in 0..n {
        if q[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !q[j][j].is_zero()) {
                q.swap(k, j);
                for row in q.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some((i, j)) = (k..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !q[i][j].is_zero())
            {
                // Hyperbolic pair: add row/col j into i to expose a pivot.
                for t in 0..n {
                    let add = q[j][t].clone();
                    q[i][t] += add;
                }
                for row in q.iter_mut() {
                    let add = row[j].clone();
                    row[i] += add;
                }
                q.swap(k, i);
                for row in q.iter_mut() {
                    row.swap(k, i);
                }
            } else {
                zero += n - k;
                break;
            }
        }
        let pivot = q[k][k].clone();
        if pivot.is_zero() {
            zero += 1;
            continue;
        }
        if pivot > BigRational::zero() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            let factor = &q[i][k] / &pivot;
            if factor.is_zero() {
                continue;
            }
            // Congruence step: row i -= factor * row k, then the mirror
            // column operation to keep the matrix symmetric.
            for t in 0..n {
                let sub = &factor * &q[k][t];
                q[i][t] -= sub;
            }
            for t in 0..n {
                let sub = &factor * &q[t][k];
                q[t][i] -= sub;
            }
        }
    }
    (pos, neg, zero)
}
