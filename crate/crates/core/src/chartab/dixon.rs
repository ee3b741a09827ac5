//! Common eigenvectors of the class matrices over GF(ℓ), and the recovery
//! of degrees and exact values from them.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{PrimeField, PrimeFieldCtx};
use crate::group::ClassData;

use super::classmat::ClassMatrix;
use super::cyclotomic::CyclotomicValue;
use super::modlinalg::{charpoly, nullspace, roots, rref, Matrix};

/// A subspace of GF(ℓ)^r held as a basis in reduced row echelon form.
#[derive(Clone, Debug)]
struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    fn new(f: PrimeField, mut basis: Matrix) -> Self {
        let pivots = rref(f, &mut basis);
        Self { basis, pivots }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Splits this subspace into eigenspaces of `m` (entries already reduced
    /// mod ℓ). Returns `None` when `m` acts as a scalar here.
    fn split(&self, f: PrimeField, m: &Matrix) -> Result<Option<Vec<Subspace>>> {
        let dim = self.dim();
        let r = m.len();
        // m b_a = Σ_c restricted[a][c] b_c
        let mut restricted = vec![vec![0u64; dim]; dim];
        for (a, b) in self.basis.iter().enumerate() {
            let image: Vec<u64> = m
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(b)
                        .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
                })
                .collect();
            for (c, &p) in self.pivots.iter().enumerate() {
                restricted[a][c] = image[p];
            }
            let mut check = image;
            for (c, bc) in self.basis.iter().enumerate() {
                let coef = restricted[a][c];
                for t in 0..r {
                    check[t] = f.sub(check[t], f.mul(coef, bc[t]));
                }
            }
            if check.iter().any(|&x| x != 0) {
                return Err(Error::Consistency(
                    "eigenspace is not invariant under a class matrix".into(),
                ));
            }
        }
        // left eigenvectors of `restricted`
        let transposed: Matrix = (0..dim)
            .map(|c| (0..dim).map(|a| restricted[a][c]).collect())
            .collect();
        let eigenvalues = roots(f, &charpoly(f, &transposed));
        if eigenvalues.len() == 1 {
            return Ok(None);
        }
        let mut parts = Vec::new();
        let mut total = 0;
        for lambda in eigenvalues {
            let shifted: Matrix = transposed
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, &x)| if i == j { f.sub(x, lambda) } else { x })
                        .collect()
                })
                .collect();
            let coords = nullspace(f, &shifted);
            total += coords.len();
            let vectors: Matrix = coords
                .iter()
                .map(|x| {
                    let mut v = vec![0u64; r];
                    for (xa, b) in x.iter().zip(&self.basis) {
                        for t in 0..r {
                            v[t] = f.add(v[t], f.mul(*xa, b[t]));
                        }
                    }
                    v
                })
                .collect();
            parts.push(Subspace::new(f, vectors));
        }
        if total != dim {
            return Err(Error::Consistency(
                "class matrix is not diagonalizable on an eigenspace".into(),
            ));
        }
        Ok(Some(parts))
    }
}

/// Splits GF(ℓ)^r into the common eigenspaces of the class matrices, which
/// are requested from `matrix` in increasing class-size order. When the
/// single matrices are exhausted, seeded random combinations are tried.
///
/// Each returned vector is normalised to have coordinate 0 equal to 1, so its
/// entries are the central character values `|C_j| χ(g_j) / χ(1)` mod ℓ.
pub fn split_eigenspaces(
    cd: &ClassData,
    ctx: &PrimeFieldCtx,
    mut matrix: impl FnMut(usize) -> ClassMatrix,
) -> Result<Vec<Vec<u64>>> {
    let f = ctx.field;
    let r = cd.len();
    let identity: Matrix = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut done: Vec<Subspace> = Vec::new();
    let mut pending = vec![Subspace::new(f, identity)];
    let mut order: Vec<usize> = (1..r).collect();
    order.sort_by_key(|&i| (cd.sizes[i], i));
    let mut reduced: BTreeMap<usize, Matrix> = BTreeMap::new();

    let apply = |m: &Matrix, pending: &mut Vec<Subspace>, done: &mut Vec<Subspace>| -> Result<()> {
        let mut next = Vec::new();
        for space in pending.drain(..) {
            match space.split(f, m)? {
                Some(parts) => next.extend(parts),
                None => next.push(space),
            }
        }
        for s in next {
            if s.dim() == 1 {
                done.push(s);
            } else {
                pending.push(s);
            }
        }
        Ok(())
    };

    for &i in &order {
        if pending.iter().all(|s| s.dim() <= 1) {
            break;
        }
        let cm = matrix(i);
        let m: Matrix = cm
            .entries
            .iter()
            .map(|row| row.iter().map(|&x| f.reduce(x)).collect())
            .collect();
        apply(&m, &mut pending, &mut done)?;
        reduced.insert(i, m);
    }
    done.extend(pending.iter().filter(|s| s.dim() == 1).cloned());
    pending.retain(|s| s.dim() > 1);

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut attempts = 0;
    while !pending.is_empty() {
        attempts += 1;
        if attempts > 32 || reduced.is_empty() {
            return Err(Error::Consistency("eigenspace splitting stalled".into()));
        }
        let mut combo = vec![vec![0u64; r]; r];
        for m in reduced.values() {
            let c = rng.gen_range(0..f.modulus());
            for (crow, mrow) in combo.iter_mut().zip(m) {
                for (x, &y) in crow.iter_mut().zip(mrow) {
                    *x = f.add(*x, f.mul(c, y));
                }
            }
        }
        apply(&combo, &mut pending, &mut done)?;
    }

    if done.len() != r {
        return Err(Error::Consistency(format!(
            "found {} eigenvectors for {r} classes",
            done.len()
        )));
    }
    let mut vectors: Vec<Vec<u64>> = done
        .into_iter()
        .map(|s| s.basis.into_iter().next().unwrap())
        .collect();
    for v in &mut vectors {
        if v[0] == 0 {
            return Err(Error::Consistency(
                "eigenvector vanishes at the identity class".into(),
            ));
        }
        let inv = f.inv(v[0]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
    }
    vectors.sort();
    Ok(vectors)
}

/// Degree from a normalised eigenvector: `χ(1)^2 = |G| / Σ_j ω_j ω_{j'} / |C_j|`.
pub fn recover_degree(omega: &[u64], cd: &ClassData, ctx: &PrimeFieldCtx) -> Result<u64> {
    let f = ctx.field;
    let s = (0..cd.len()).fold(0, |acc, j| {
        let term = f.mul(
            f.mul(omega[j], omega[cd.inverse_class[j] as usize]),
            f.inv(f.reduce(cd.sizes[j])),
        );
        f.add(acc, term)
    });
    if s == 0 {
        return Err(Error::Consistency("degree norm vanishes mod ℓ".into()));
    }
    let target = f.mul(f.reduce(cd.group_order), f.inv(s));
    let half = f.modulus() / 2;
    (1..=half)
        .find(|&d| f.mul(d, d) == target)
        .filter(|&d| cd.group_order.is_multiple_of(d))
        .ok_or_else(|| {
            Error::Consistency(format!(
                "no degree dividing |G| squares to {target} mod {}",
                f.modulus()
            ))
        })
}

/// Exact values `χ(g_j) = Σ_k m_k ζ_e^k` by Fourier inversion over each
/// cyclic subgroup `<g_j>` using the power map.
pub fn lift_values(
    omega: &[u64],
    degree: u64,
    cd: &ClassData,
    ctx: &PrimeFieldCtx,
) -> Result<Vec<CyclotomicValue>> {
    let f = ctx.field;
    let e = cd.exponent;
    let d = f.reduce(degree);
    let modular: Vec<u64> = (0..cd.len())
        .map(|j| f.mul(f.mul(d, omega[j]), f.inv(f.reduce(cd.sizes[j]))))
        .collect();
    (0..cd.len())
        .map(|j| {
            let o = cd.element_orders[j];
            let step = e / o;
            let zo = f.pow(ctx.root, step);
            let zo_inv = f.inv(zo);
            let o_inv = f.inv(f.reduce(o));
            let powers: Vec<u64> = (0..o)
                .map(|s| modular[cd.power_map[j][s as usize] as usize])
                .collect();
            let mut terms = Vec::new();
            let mut total = 0u64;
            for t in 0..o {
                let base = f.pow(zo_inv, t);
                let mut acc = 0u64;
                let mut w = 1u64;
                for &v in &powers {
                    acc = f.add(acc, f.mul(v, w));
                    w = f.mul(w, base);
                }
                let m = f.mul(acc, o_inv);
                if m > degree {
                    return Err(Error::Consistency(format!(
                        "multiplicity {m} exceeds degree {degree} at class {j}"
                    )));
                }
                total += m;
                if m > 0 {
                    terms.push((t * step, m as i64));
                }
            }
            if total != degree {
                return Err(Error::Consistency(format!(
                    "multiplicities at class {j} sum to {total}, not {degree}"
                )));
            }
            Ok(CyclotomicValue::new(e, terms))
        })
        .collect()
}
