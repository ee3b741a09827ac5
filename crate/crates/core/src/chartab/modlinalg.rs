//! Dense linear algebra over a prime field.

use crate::field::PrimeField;

pub type Matrix = Vec<Vec<u64>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(f: PrimeField, rows: &mut Matrix) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = f.inv(rows[rank][col]);
        for x in rows[rank].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let c = row[col];
                for (x, &p) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(c, p));
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

/// Basis of `{x : A x = 0}` for an `m × n` matrix `A`.
pub fn nullspace(f: PrimeField, a: &Matrix) -> Matrix {
    let n = a.first().map_or(0, |r| r.len());
    let mut rows = a.clone();
    let pivots = rref(f, &mut rows);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; n];
            v[fc] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = f.neg(row[fc]);
            }
            v
        })
        .collect()
}

/// Characteristic polynomial `det(xI - A)`, constant term first, via
/// reduction to upper Hessenberg form.
pub fn charpoly(f: PrimeField, a: &Matrix) -> Vec<u64> {
    let n = a.len();
    let mut h = a.clone();
    // similarity transforms to Hessenberg form
    for col in 0..n.saturating_sub(2) {
        let Some(p) = (col + 1..n).find(|&i| h[i][col] != 0) else {
            continue;
        };
        if p != col + 1 {
            h.swap(p, col + 1);
            for row in h.iter_mut() {
                row.swap(p, col + 1);
            }
        }
        let inv = f.inv(h[col + 1][col]);
        for i in col + 2..n {
            let c = f.mul(h[i][col], inv);
            if c == 0 {
                continue;
            }
            // row_i -= c * row_{col+1}
            let (upper, lower) = h.split_at_mut(i);
            for (x, &y) in lower[0].iter_mut().zip(&upper[col + 1]) {
                *x = f.sub(*x, f.mul(c, y));
            }
            // col_{col+1} += c * col_i
            for row in h.iter_mut() {
                row[col + 1] = f.add(row[col + 1], f.mul(c, row[i]));
            }
        }
    }
    // p_k = charpoly of the leading k×k block
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        // (x - h_kk) p_k
        let prev = &polys[k];
        let mut next = vec![0u64; k + 2];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = f.add(next[i + 1], c);
            next[i] = f.sub(next[i], f.mul(h[k][k], c));
        }
        // - Σ_{i<k} h_ik (Π_{j=i+1}^{k} h_{j,j-1}) p_i
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = f.mul(prod, h[i + 1][i]);
            if prod == 0 {
                break;
            }
            let c = f.mul(h[i][k], prod);
            for (t, &pc) in polys[i].iter().enumerate() {
                next[t] = f.sub(next[t], f.mul(c, pc));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

pub fn eval_poly(f: PrimeField, p: &[u64], x: u64) -> u64 {
    p.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Distinct roots in GF(p) by exhaustive scan.
pub fn roots(f: PrimeField, p: &[u64]) -> Vec<u64> {
    (0..f.modulus())
        .filter(|&x| eval_poly(f, p, x) == 0)
        .collect()
}
