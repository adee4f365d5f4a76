//! Dense row-major matrix kernels and small-vector helpers.
//!
//! The three matmul variants cover the forward pass and both adjoint
//! products of reverse mode. Each output row is computed by one sequential
//! loop, so results are bit-identical whether or not rayon splits the rows
//! across threads.

use crate::num::Real;
use rayon::prelude::*;

/// Below this many multiply-adds the rayon dispatch overhead dominates.
const PAR_WORK_THRESHOLD: usize = 1 << 16;

/// C = A * B with A (m,k), B (k,n), all row-major.
pub fn matmul_nn(a: &[f64], b: &[f64], m: usize, k: usize, n: usize) -> Vec<f64> {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), k * n);
    let mut c = vec![0.0; m * n];
    let row = |ci: &mut [f64], i: usize| {
        let ar = &a[i * k..(i + 1) * k];
        for (l, &al) in ar.iter().enumerate() {
            let br = &b[l * n..(l + 1) * n];
            for (cj, &bj) in ci.iter_mut().zip(br) {
                *cj += al * bj;
            }
        }
    };
    if m * k * n >= PAR_WORK_THRESHOLD {
        c.par_chunks_mut(n).enumerate().for_each(|(i, ci)| row(ci, i));
    } else {
        for (i, ci) in c.chunks_mut(n).enumerate() {
            row(ci, i);
        }
    }
    c
}

/// C = A * B^T with A (m,n), B (k,n); result (m,k). Rows of both operands
/// are contiguous, so this is a row-dot kernel.
pub fn matmul_nt(a: &[f64], b: &[f64], m: usize, n: usize, k: usize) -> Vec<f64> {
    debug_assert_eq!(a.len(), m * n);
    debug_assert_eq!(b.len(), k * n);
    let mut c = vec![0.0; m * k];
    let row = |ci: &mut [f64], i: usize| {
        let ar = &a[i * n..(i + 1) * n];
        for (j, cj) in ci.iter_mut().enumerate() {
            let br = &b[j * n..(j + 1) * n];
            let mut acc = 0.0;
            for (x, y) in ar.iter().zip(br) {
                acc += x * y;
            }
            *cj = acc;
        }
    };
    if m * n * k >= PAR_WORK_THRESHOLD {
        c.par_chunks_mut(k).enumerate().for_each(|(i, ci)| row(ci, i));
    } else {
        for (i, ci) in c.chunks_mut(k).enumerate() {
            row(ci, i);
        }
    }
    c
}

/// C = A^T * B with A (m,k), B (m,n); result (k,n).
pub fn matmul_tn(a: &[f64], b: &[f64], m: usize, k: usize, n: usize) -> Vec<f64> {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), m * n);
    let mut c = vec![0.0; k * n];
    let row = |ci: &mut [f64], i: usize| {
        // ci[j] = sum_l a[l*k + i] * b[l*n + j]
        for l in 0..m {
            let al = a[l * k + i];
            if al == 0.0 {
                continue;
            }
            let br = &b[l * n..(l + 1) * n];
            for (cj, &bj) in ci.iter_mut().zip(br) {
                *cj += al * bj;
            }
        }
    };
    if m * k * n >= PAR_WORK_THRESHOLD {
        c.par_chunks_mut(n).enumerate().for_each(|(i, ci)| row(ci, i));
    } else {
        for (i, ci) in c.chunks_mut(n).enumerate() {
            row(ci, i);
        }
    }
    c
}

pub fn transpose(a: &[f64], rows: usize, cols: usize) -> Vec<f64> {
    let mut out = vec![0.0; rows * cols];
    for i in 0..rows {
        for j in 0..cols {
            out[j * rows + i] = a[i * cols + j];
        }
    }
    out
}

// Small fixed-size vector helpers over any Real scalar.

pub fn dot3<R: Real>(a: &[R; 3], b: &[R; 3]) -> R {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross3<R: Real>(a: &[R; 3], b: &[R; 3]) -> [R; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn norm3<R: Real>(a: &[R; 3]) -> R {
    dot3(a, a).sqrt()
}

pub fn normalize3<R: Real>(a: &[R; 3]) -> [R; 3] {
    let n = norm3(a);
    [a[0] / n, a[1] / n, a[2] / n]
}

pub fn scale3<R: Real>(a: &[R; 3], s: R) -> [R; 3] {
    [a[0] * s, a[1] * s, a[2] * s]
}

pub fn add3<R: Real>(a: &[R; 3], b: &[R; 3]) -> [R; 3] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub fn sub3<R: Real>(a: &[R; 3], b: &[R; 3]) -> [R; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// y = M * x for a row-major 3x3.
pub fn matvec3<R: Real>(m: &[[R; 3]; 3], x: &[R; 3]) -> [R; 3] {
    [dot3(&m[0], x), dot3(&m[1], x), dot3(&m[2], x)]
}

pub fn mat3_mul<R: Real>(a: &[[R; 3]; 3], b: &[[R; 3]; 3]) -> [[R; 3]; 3] {
    let mut c = [[R::zero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = R::zero();
            for l in 0..3 {
                acc += a[i][l] * b[l][j];
            }
            c[i][j] = acc;
        }
    }
    c
}

pub fn mat3_transpose<R: Real>(a: &[[R; 3]; 3]) -> [[R; 3]; 3] {
    let mut t = [[R::zero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            t[i][j] = a[j][i];
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matmul_round() {
        // (2,3) x (3,2)
        let a = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0];
        let b = [7.0, 8.0, 9.0, 10.0, 11.0, 12.0];
        let c = matmul_nn(&a, &b, 2, 3, 2);
        assert_eq!(c, vec![58.0, 64.0, 139.0, 154.0]);
    }

    #[test]
    fn matmul_adjoint_variants_agree_with_explicit_transpose() {
        let a = [1.0, -2.0, 0.5, 3.0, 4.0, -1.0]; // (2,3)
        let b = [2.0, 1.0, 0.0, -1.0, 1.5, 2.5]; // (2,3)
        // A^T * B via tn and via explicit transpose.
        let direct = matmul_tn(&a, &b, 2, 3, 3);
        let at = transpose(&a, 2, 3);
        let explicit = matmul_nn(&at, &b, 3, 2, 3);
        assert_eq!(direct, explicit);
        // A * B^T via nt.
        let direct = matmul_nt(&a, &b, 2, 3, 2);
        let bt = transpose(&b, 2, 3);
        let explicit = matmul_nn(&a, &bt, 2, 3, 2);
        assert_eq!(direct, explicit);
    }

    #[test]
    fn cross_follows_right_hand_rule() {
        let x = [1.0f32, 0.0, 0.0];
        let y = [0.0f32, 1.0, 0.0];
        assert_eq!(cross3(&x, &y), [0.0, 0.0, 1.0]);
    }
}
