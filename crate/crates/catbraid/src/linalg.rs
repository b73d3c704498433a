//! Exact dense linear algebra over the rationals.

use num_traits::Zero;

use crate::zigzag::Q;

/// A dense matrix stored by rows.
pub(crate) type Matrix = Vec<Vec<Q>>;

/// Reduces `m` in place to reduced row echelon form and returns the pivot
/// columns.
pub(crate) fn rref(m: &mut Matrix, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let f = other[col];
            for (x, y) in other.iter_mut().zip(&pivot_row).skip(col) {
                if !y.is_zero() {
                    *x -= f * *y;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Rank of a matrix with `ncols` columns.
pub(crate) fn rank(mut m: Matrix, ncols: usize) -> usize {
    rref(&mut m, ncols).len()
}

/// A basis of the null space `{x : m x = 0}`.
pub(crate) fn kernel(mut m: Matrix, ncols: usize) -> Vec<Vec<Q>> {
    let pivots = rref(&mut m, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Q::zero(); ncols];
        v[free] = Q::from_integer(1);
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -m[r][free];
        }
        basis.push(v);
    }
    basis
}

/// Whether a square matrix is invertible.
pub(crate) fn is_invertible(m: Matrix) -> bool {
    let n = m.len();
    m.iter().all(|r| r.len() == n) && rank(m, n) == n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[&[i64]]) -> Matrix {
        v.iter().map(|r| r.iter().map(|&x| Q::from_integer(x)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(m.clone(), 3), 2);
        let k = kernel(m.clone(), 3);
        assert_eq!(k.len(), 1);
        for row in &m {
            let s: Q = row.iter().zip(&k[0]).map(|(a, b)| a * b).sum();
            assert!(s.is_zero());
        }
        assert!(is_invertible(q(&[&[0, 1], &[1, 0]])));
        assert!(!is_invertible(q(&[&[1, 1], &[1, 1]])));
        assert_eq!(kernel(Vec::new(), 2).len(), 2);
    }
}
