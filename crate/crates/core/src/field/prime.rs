use crate::error::{Error, Result};
use crate::numtheory::{is_prime, pow_mod, prime_divisors};

/// Arithmetic modulo an odd prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidArgument(format!(
                "{p} is not a prime below 2^31"
            )));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn modulus(self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(self, a: u64) -> u64 {
        a % self.p
    }

    #[inline]
    pub fn from_i64(self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.p)
    }

    /// Inverse of a nonzero residue.
    pub fn inv(self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "zero is not invertible");
        self.pow(a, self.p - 2)
    }

    /// The representative of `a` in `(-p/2, p/2]`.
    pub fn symmetric(self, a: u64) -> i64 {
        let a = a % self.p;
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

/// A prime field GF(ℓ) with `ℓ ≡ 1 (mod e)` and a fixed element `z` of exact
/// multiplicative order `e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeFieldCtx {
    pub field: PrimeField,
    pub root: u64,
    pub root_order: u64,
}

impl PrimeFieldCtx {
    pub fn prime(&self) -> u64 {
        self.field.modulus()
    }
}

const SEARCH_CAP: u64 = 1 << 31;

/// Smallest prime `ℓ > lower_bound` with `ℓ ≡ 1 (mod e)`, together with the
/// first element (scanning 2, 3, ...) whose `(ℓ-1)/e`-th power has exact
/// order `e`.
pub fn prime_field_with_root(e: u64, lower_bound: u64) -> Result<PrimeFieldCtx> {
    if e == 0 || lower_bound < 2 {
        return Err(Error::InvalidArgument(format!(
            "need e >= 1 and lower_bound >= 2, got e={e}, lower_bound={lower_bound}"
        )));
    }
    let start = lower_bound + 1;
    let mut candidate = start + (e - (start - 1) % e) % e;
    while !is_prime(candidate) {
        candidate += e;
        if candidate >= SEARCH_CAP {
            return Err(Error::InvalidArgument(format!(
                "no prime congruent to 1 mod {e} above {lower_bound} below 2^31"
            )));
        }
    }
    let field = PrimeField::new(candidate)?;
    let cofactor = (candidate - 1) / e;
    let primes = prime_divisors(e);
    for g in 2..candidate {
        let z = field.pow(g, cofactor);
        if field.pow(z, e) == 1 && primes.iter().all(|&p| field.pow(z, e / p) != 1) {
            return Ok(PrimeFieldCtx {
                field,
                root: z,
                root_order: e,
            });
        }
    }
    if e == 1 {
        return Ok(PrimeFieldCtx {
            field,
            root: 1,
            root_order: 1,
        });
    }
    Err(Error::Consistency(format!(
        "GF({candidate}) has no element of order {e}"
    )))
}
