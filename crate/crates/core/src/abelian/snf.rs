//! Smith Normal Form over the integers, with transforms.

use alloc::vec::Vec;

use crate::int::Int;
use crate::matrix::IntMatrix;

/// `u * m * v == d`, with `u` and `v` unimodular.
///
/// `v_inv` is the inverse of `v`, maintained alongside it so that callers can
/// translate between the original and the diagonal coordinates in both
/// directions without a second elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    /// Number of nonzero diagonal entries; they occupy `d[(i, i)]` for `i < rank`.
    pub rank: usize,
}

impl SmithForm {
    /// The nonzero diagonal entries, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<Int> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// All `min(rows, cols)` diagonal entries, zeros included.
    pub fn diagonal(&self) -> Vec<Int> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }
}

struct Reducer {
    a: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    // row[dst] += c * row[src]
    fn add_row(&mut self, dst: usize, src: usize, c: &Int) {
        self.a.add_row_multiple(dst, src, c);
        self.u.add_row_multiple(dst, src, c);
    }

    // col[dst] += c * col[src]; the inverse of that elementary matrix acts
    // on v_inv from the left as row[src] -= c * row[dst].
    fn add_col(&mut self, dst: usize, src: usize, c: &Int) {
        self.a.add_col_multiple(dst, src, c);
        self.v.add_col_multiple(dst, src, c);
        self.v_inv.add_row_multiple(src, dst, &-c);
    }

    /// Minimal nonzero |entry| in the trailing block, lowest row then column on ties.
    fn pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, Int)> = None;
        for i in k..self.a.rows() {
            for j in k..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                    best = Some((i, j, ax));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn non_divisible_entry(&self, k: usize) -> Option<usize> {
        let p = &self.a[(k, k)];
        (k + 1..self.a.rows()).find(|&i| (k + 1..self.a.cols()).any(|j| !p.divides(&self.a[(i, j)])))
    }

    /// Diagonalizes position `k`; returns false once the trailing block is zero.
    fn step(&mut self, k: usize) -> bool {
        loop {
            let Some((pi, pj)) = self.pivot(k) else {
                return false;
            };
            self.swap_rows(k, pi);
            self.swap_cols(k, pj);
            let p = self.a[(k, k)].clone();

            let mut dirty = false;
            for i in k + 1..self.a.rows() {
                if self.a[(i, k)].is_zero() {
                    continue;
                }
                let (q, r) = self.a[(i, k)].div_rem_euclid(&p);
                self.add_row(i, k, &-q);
                dirty |= !r.is_zero();
            }
            for j in k + 1..self.a.cols() {
                if self.a[(k, j)].is_zero() {
                    continue;
                }
                let (q, r) = self.a[(k, j)].div_rem_euclid(&p);
                self.add_col(j, k, &-q);
                dirty |= !r.is_zero();
            }
            if dirty {
                continue;
            }
            match self.non_divisible_entry(k) {
                Some(i) => self.add_row(k, i, &Int::ONE),
                None => break,
            }
        }
        if self.a[(k, k)].is_negative() {
            self.a.negate_row(k);
            self.u.negate_row(k);
        }
        true
    }
}

/// Smith Normal Form of an arbitrary (possibly empty) integer matrix.
///
/// Pivoting is deterministic: the nonzero entry of least absolute value in
/// the remaining block, lowest row then lowest column on ties.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut r = Reducer {
        a: m.clone(),
        u: IntMatrix::identity(m.rows()),
        v: IntMatrix::identity(m.cols()),
        v_inv: IntMatrix::identity(m.cols()),
    };
    let mut rank = 0;
    for k in 0..m.rows().min(m.cols()) {
        if !r.step(k) {
            break;
        }
        rank += 1;
    }
    SmithForm {
        u: r.u,
        d: r.a,
        v: r.v,
        v_inv: r.v_inv,
        rank,
    }
}

/// A basis of the integer kernel `{x : m x = 0}`.
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<Int>> {
    let snf = smith_normal_form(m);
    (snf.rank..m.cols()).map(|j| snf.v.column(j)).collect()
}

/// Some integer solution of `m x = b`, if one exists.
pub fn solve(m: &IntMatrix, b: &[Int]) -> Option<Vec<Int>> {
    assert_eq!(b.len(), m.rows(), "right-hand side length mismatch");
    let snf = smith_normal_form(m);
    let y = snf.u.mul_vec(b);
    let mut z = alloc::vec![Int::ZERO; m.cols()];
    for (i, yi) in y.iter().enumerate() {
        if i < snf.rank {
            let (q, r) = yi.div_rem_euclid(&snf.d[(i, i)]);
            if !r.is_zero() {
                return None;
            }
            z[i] = q;
        } else if !yi.is_zero() {
            return None;
        }
    }
    Some(snf.v.mul_vec(&z))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d);
        assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(m.cols()));
        assert_eq!(s.u.determinant().abs(), Int::ONE);
        s
    }

    #[test]
    fn zero_matrix() {
        let m = IntMatrix::zeros(2, 3);
        let s = check(&m);
        assert_eq!(s.d, m);
        assert_eq!(s.rank, 0);
    }

    #[test]
    fn empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (2, 0)] {
            let s = check(&IntMatrix::zeros(r, c));
            assert_eq!(s.rank, 0);
        }
    }

    #[test]
    fn two_by_two() {
        // gcd of entries is 2 and |det| = 8, so the factors are 2 and 4.
        let s = check(&IntMatrix::from_rows([[2, 4], [6, 8]]));
        assert_eq!(s.d, IntMatrix::from_rows([[2, 0], [0, 4]]));
    }

    #[test]
    fn coprime_diagonal_recombines() {
        let s = check(&IntMatrix::from_rows([[2, 0], [0, 3]]));
        assert_eq!(s.invariant_factors(), [Int::from(1), Int::from(6)]);
    }

    #[test]
    fn negative_entries_become_positive() {
        let s = check(&IntMatrix::from_rows([[-4, 0], [0, -6]]));
        assert_eq!(s.invariant_factors(), [Int::from(2), Int::from(12)]);
    }

    #[test]
    fn kernel_and_solve() {
        let m = IntMatrix::from_rows([[2, 4, 6], [1, 2, 3]]);
        let ker = integer_kernel(&m);
        assert_eq!(ker.len(), 2);
        for k in &ker {
            assert!(m.mul_vec(k).iter().all(Int::is_zero));
        }
        let a = IntMatrix::from_rows([[2, 0], [0, 3]]);
        let x = solve(&a, &[Int::from(4), Int::from(3)]).unwrap();
        assert_eq!(x, [Int::from(2), Int::from(1)]);
        assert!(solve(&a, &[Int::from(1), Int::from(0)]).is_none());
    }
}
