//! Exact values in `Z[ζ_e]`.
//!
//! A [`CyclotomicValue`] is a sparse integer combination `Σ m_k ζ_e^k`,
//! i.e. an element of the group ring `Z[Z_e]`. Distinct coefficient vectors
//! can denote the same algebraic integer; equality and zero tests reduce
//! modulo the cyclotomic polynomial `Φ_e`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

static PHI_CACHE: Lazy<Mutex<HashMap<u64, Arc<Vec<i64>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Coefficients (constant term first) of the `n`-th cyclotomic polynomial,
/// obtained by dividing `x^n - 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    assert!(n >= 1);
    if let Some(p) = PHI_CACHE.lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let divisor = cyclotomic_polynomial(d);
        poly = divide_monic(&poly, &divisor);
    }
    let poly = Arc::new(poly);
    PHI_CACHE.lock().unwrap().insert(n, poly.clone());
    poly
}

/// Exact quotient of `num` by a monic divisor.
fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; dn - dd + 1];
    for i in (0..=dn - dd).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

/// Whether the polynomial `Σ coeffs[k] x^k` vanishes at `ζ_e`, i.e. is
/// divisible by `Φ_e`.
pub fn vanishes_at_root_of_unity(coeffs: &[i128], e: u64) -> bool {
    let phi = cyclotomic_polynomial(e);
    let deg = phi.len() - 1;
    let mut rem = coeffs.to_vec();
    for top in (deg..rem.len()).rev() {
        let c = rem[top];
        if c == 0 {
            continue;
        }
        for (j, &pj) in phi.iter().enumerate() {
            rem[top - deg + j] -= c * i128::from(pj);
        }
    }
    rem.iter().all(|&c| c == 0)
}

/// `Σ_k m_k ζ_e^k` with `0 <= k < e`, stored sparsely with nonzero `m_k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclotomicValue {
    conductor: u64,
    terms: Vec<(u64, i64)>,
}

impl CyclotomicValue {
    /// Normalises exponents modulo `e` and merges repeated terms.
    pub fn new(conductor: u64, terms: impl IntoIterator<Item = (u64, i64)>) -> Self {
        assert!(conductor >= 1);
        let mut dense: std::collections::BTreeMap<u64, i64> = Default::default();
        for (k, m) in terms {
            *dense.entry(k % conductor).or_insert(0) += m;
        }
        Self {
            conductor,
            terms: dense.into_iter().filter(|&(_, m)| m != 0).collect(),
        }
    }

    pub fn integer(conductor: u64, n: i64) -> Self {
        Self::new(conductor, [(0, n)])
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> &[(u64, i64)] {
        &self.terms
    }

    /// `Σ m_k`; the degree of the character for a lifted value.
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.iter().map(|t| t.1).sum()
    }

    /// Complex conjugate: `ζ^k -> ζ^{-k}`.
    pub fn conj(&self) -> Self {
        Self::new(
            self.conductor,
            self.terms
                .iter()
                .map(|&(k, m)| ((self.conductor - k) % self.conductor, m)),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.conductor, other.conductor);
        Self::new(
            self.conductor,
            self.terms.iter().chain(&other.terms).copied(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.conductor, other.conductor);
        Self::new(
            self.conductor,
            self.terms
                .iter()
                .copied()
                .chain(other.terms.iter().map(|&(k, m)| (k, -m))),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.conductor, other.conductor);
        let e = self.conductor;
        Self::new(
            e,
            self.terms
                .iter()
                .flat_map(|&(a, m)| other.terms.iter().map(move |&(b, n)| ((a + b) % e, m * n))),
        )
    }

    /// Dense coefficient vector of length `e`.
    pub fn to_dense(&self) -> Vec<i128> {
        let mut v = vec![0i128; self.conductor as usize];
        for &(k, m) in &self.terms {
            v[k as usize] += i128::from(m);
        }
        v
    }

    /// Exact zero test in `Z[ζ_e]`.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() || vanishes_at_root_of_unity(&self.to_dense(), self.conductor)
    }

    /// Exact equality of the algebraic integers denoted.
    pub fn equals(&self, other: &Self) -> bool {
        self == other || self.sub(other).is_zero()
    }

    /// The rational integer this value equals, if any.
    pub fn as_integer(&self) -> Option<i64> {
        // try the constant term of the reduced form: Σ m_k ζ^k - n is zero for a unique n if rational
        let phi = cyclotomic_polynomial(self.conductor);
        let deg = phi.len() - 1;
        let mut rem = self.to_dense();
        for top in (deg..rem.len()).rev() {
            let c = rem[top];
            if c != 0 {
                for (j, &pj) in phi.iter().enumerate() {
                    rem[top - deg + j] -= c * i128::from(pj);
                }
            }
        }
        if rem
            .iter()
            .skip(1)
            .take(deg.saturating_sub(1))
            .all(|&c| c == 0)
        {
            i64::try_from(rem[0]).ok()
        } else {
            None
        }
    }

    /// Value under the embedding `ζ_e -> exp(2πi/e)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let e = self.conductor as f64;
        self.terms.iter().fold((0.0, 0.0), |(re, im), &(k, m)| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / e;
            (re + m as f64 * angle.cos(), im + m as f64 * angle.sin())
        })
    }
}

impl fmt::Debug for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|&(k, m)| {
                if k == 0 {
                    format!("{m}")
                } else {
                    format!("{m}*z{}^{k}", self.conductor)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Dense accumulator in `Z[Z_e]`, for sums of many products.
pub(crate) struct Accumulator {
    conductor: u64,
    coeffs: Vec<i128>,
}

impl Accumulator {
    pub fn new(conductor: u64) -> Self {
        Self {
            conductor,
            coeffs: vec![0; conductor as usize],
        }
    }

    /// Adds `weight * a * conj(b)`.
    pub fn add_product_conj(&mut self, weight: i128, a: &CyclotomicValue, b: &CyclotomicValue) {
        let e = self.conductor;
        for &(ka, ma) in &a.terms {
            for &(kb, mb) in &b.terms {
                let k = (ka + e - kb) % e;
                self.coeffs[k as usize] += weight * i128::from(ma) * i128::from(mb);
            }
        }
    }

    /// Whether the accumulated sum equals the rational integer `n`.
    pub fn equals_integer(mut self, n: i128) -> bool {
        self.coeffs[0] -= n;
        vanishes_at_root_of_unity(&self.coeffs, self.conductor)
    }
}
