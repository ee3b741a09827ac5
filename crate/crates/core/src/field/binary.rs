use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::numtheory::prime_divisors;

/// Default irreducible moduli for `k = 1..=16`, indexed by `k - 1`.
///
/// Bit `i` is the coefficient of `x^i`. Every entry is re-verified when a
/// context is created.
pub const DEFAULT_MODULI: [u32; 16] = [
    0b11,    // x + 1
    0x7,     // x^2 + x + 1
    0xB,     // x^3 + x + 1
    0x13,    // x^4 + x + 1
    0x25,    // x^5 + x^2 + 1
    0x43,    // x^6 + x + 1
    0x83,    // x^7 + x + 1
    0x11D,   // x^8 + x^4 + x^3 + x^2 + 1
    0x211,   // x^9 + x^4 + 1
    0x409,   // x^10 + x^3 + 1
    0x805,   // x^11 + x^2 + 1
    0x1053,  // x^12 + x^6 + x^4 + x + 1
    0x201B,  // x^13 + x^4 + x^3 + x + 1
    0x4443,  // x^14 + x^10 + x^6 + x + 1
    0x8003,  // x^15 + x + 1
    0x1100B, // x^16 + x^12 + x^3 + x + 1
];

fn poly_degree(p: u32) -> Option<u32> {
    if p == 0 {
        None
    } else {
        Some(31 - p.leading_zeros())
    }
}

fn poly_rem(mut a: u32, b: u32) -> u32 {
    let db = poly_degree(b).expect("division by the zero polynomial");
    while let Some(da) = poly_degree(a) {
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

/// Carry-less product of two residues followed by reduction.
#[inline]
fn mul_reduce(a: u32, b: u32, modulus: u32, k: u32) -> u32 {
    let mut acc = 0u32;
    let mut a = a;
    let mut b = b;
    let top = 1u32 << k;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & top != 0 {
            a ^= modulus;
        }
    }
    acc
}

/// Smallest nonconstant factor of `modulus`, found by exhaustive trial
/// division by every polynomial of degree at most `deg / 2`.
fn smallest_factor(modulus: u32) -> Option<u32> {
    let deg = poly_degree(modulus)?;
    for d in 1..=deg / 2 {
        for candidate in (1u32 << d)..(1u32 << (d + 1)) {
            if poly_rem(modulus, candidate) == 0 {
                return Some(candidate);
            }
        }
    }
    None
}

/// An element of GF(2^k) in the polynomial basis.
///
/// Elements remember the modulus of the field they came from so that
/// mixing two different fields is detected instead of silently producing
/// garbage.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryFieldElement {
    bits: u32,
    modulus: u32,
}

impl BinaryFieldElement {
    /// Coordinates in the polynomial basis; bit `i` is the coefficient of `x^i`.
    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    fn check(self, other: Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ContextMismatch {
                left: self.modulus,
                right: other.modulus,
            });
        }
        Ok(())
    }

    pub fn checked_add(self, other: Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            bits: self.bits ^ other.bits,
            modulus: self.modulus,
        })
    }

    pub fn checked_mul(self, other: Self) -> Result<Self> {
        self.check(other)?;
        let k = poly_degree(self.modulus).unwrap();
        Ok(Self {
            bits: mul_reduce(self.bits, other.bits, self.modulus, k),
            modulus: self.modulus,
        })
    }
}

impl fmt::Debug for BinaryFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.bits)
    }
}

impl Add for BinaryFieldElement {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for BinaryFieldElement {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

/// The field GF(2^k), `1 <= k <= 16`, with a verified irreducible modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryFieldCtx {
    k: u32,
    modulus: u32,
    primitive: BinaryFieldElement,
}

impl BinaryFieldCtx {
    /// Creates GF(2^k) from an explicit modulus, verifying irreducibility.
    pub fn new(k: u32, modulus: u32) -> Result<Self> {
        if !(1..=16).contains(&k) {
            return Err(Error::InvalidArgument(format!(
                "extension degree {k} outside 1..=16"
            )));
        }
        if poly_degree(modulus) != Some(k) {
            return Err(Error::InvalidArgument(format!(
                "modulus {modulus:#x} does not have degree {k}"
            )));
        }
        if let Some(factor) = smallest_factor(modulus) {
            return Err(Error::ReducibleModulus { modulus, factor });
        }
        let mut ctx = Self {
            k,
            modulus,
            primitive: BinaryFieldElement { bits: 1, modulus },
        };
        let primitive = ctx
            .elements()
            .skip(1)
            .find(|&g| ctx.multiplicative_order(g) == ctx.unit_count())
            .ok_or_else(|| Error::Consistency("no primitive element in a field".into()))?;
        ctx.primitive = primitive;
        Ok(ctx)
    }

    /// GF(2^k) with the built-in modulus from [`DEFAULT_MODULI`].
    pub fn with_default(k: u32) -> Result<Self> {
        if !(1..=16).contains(&k) {
            return Err(Error::InvalidArgument(format!(
                "extension degree {k} outside 1..=16"
            )));
        }
        Self::new(k, DEFAULT_MODULI[k as usize - 1])
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of elements, `2^k`.
    pub fn size(&self) -> u32 {
        1 << self.k
    }

    /// Order of the multiplicative group, `2^k - 1`.
    pub fn unit_count(&self) -> u32 {
        (1 << self.k) - 1
    }

    /// Element with the given polynomial-basis coordinates.
    ///
    /// Panics if `bits` does not fit in `k` bits.
    pub fn elem(&self, bits: u32) -> BinaryFieldElement {
        assert!(
            bits < self.size(),
            "{bits:#x} is not a residue modulo {:#x}",
            self.modulus
        );
        BinaryFieldElement {
            bits,
            modulus: self.modulus,
        }
    }

    pub fn zero(&self) -> BinaryFieldElement {
        self.elem(0)
    }

    pub fn one(&self) -> BinaryFieldElement {
        self.elem(1)
    }

    /// The residue class of `x`.
    pub fn x(&self) -> BinaryFieldElement {
        BinaryFieldElement {
            bits: poly_rem(0b10, self.modulus),
            modulus: self.modulus,
        }
    }

    /// Lexicographically smallest generator of the multiplicative group.
    pub fn primitive_element(&self) -> BinaryFieldElement {
        self.primitive
    }

    /// True when the class of `x` generates the multiplicative group.
    pub fn modulus_is_primitive(&self) -> bool {
        self.multiplicative_order(self.x()) == self.unit_count()
    }

    /// All elements in increasing coordinate order.
    pub fn elements(&self) -> impl Iterator<Item = BinaryFieldElement> + '_ {
        (0..self.size()).map(move |b| BinaryFieldElement {
            bits: b,
            modulus: self.modulus,
        })
    }

    fn owns(&self, x: BinaryFieldElement) {
        assert_eq!(x.modulus, self.modulus, "element from a different field");
    }

    pub fn add(&self, a: BinaryFieldElement, b: BinaryFieldElement) -> BinaryFieldElement {
        self.owns(a);
        a + b
    }

    pub fn mul(&self, a: BinaryFieldElement, b: BinaryFieldElement) -> BinaryFieldElement {
        self.owns(a);
        a * b
    }

    /// Product on raw coordinates, for table builders that work on bits.
    #[inline]
    pub fn mul_bits(&self, a: u32, b: u32) -> u32 {
        mul_reduce(a, b, self.modulus, self.k)
    }

    pub fn pow(&self, x: BinaryFieldElement, mut exp: u64) -> BinaryFieldElement {
        self.owns(x);
        let mut acc = self.one();
        let mut base = x;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self, x: BinaryFieldElement) -> Option<BinaryFieldElement> {
        if x.is_zero() {
            None
        } else {
            Some(self.pow(x, u64::from(self.unit_count()) - 1))
        }
    }

    /// Order of a nonzero element in the multiplicative group.
    pub fn multiplicative_order(&self, x: BinaryFieldElement) -> u32 {
        assert!(!x.is_zero(), "zero has no multiplicative order");
        let n = self.unit_count();
        let mut order = n;
        for p in prime_divisors(u64::from(n)) {
            let p = p as u32;
            while order.is_multiple_of(p) && self.pow(x, u64::from(order / p)) == self.one() {
                order /= p;
            }
        }
        order
    }

    /// `x^(2^j)`; `j` is taken modulo `k`.
    pub fn frobenius(&self, x: BinaryFieldElement, j: u32) -> BinaryFieldElement {
        self.owns(x);
        let mut y = x;
        for _ in 0..(j % self.k) {
            y = y * y;
        }
        y
    }

    /// Absolute trace `Σ_{j<k} x^(2^j)`, returned as 0 or 1.
    pub fn abs_trace(&self, x: BinaryFieldElement) -> u8 {
        let t = self.subfield_sum(x, self.k);
        debug_assert!(t.bits <= 1);
        t.bits as u8
    }

    fn subfield_sum(&self, x: BinaryFieldElement, m: u32) -> BinaryFieldElement {
        self.owns(x);
        let mut acc = self.zero();
        let mut y = x;
        for _ in 0..m {
            acc = acc + y;
            y = y * y;
        }
        acc
    }

    /// Trace from the subfield GF(2^m) down to GF(2) of an element of that
    /// subfield.
    pub fn subfield_trace(&self, x: BinaryFieldElement, m: u32) -> Result<u8> {
        if m == 0 || !self.k.is_multiple_of(m) {
            return Err(Error::InvalidArgument(format!(
                "{m} does not divide {}",
                self.k
            )));
        }
        if self.frobenius(x, m) != x {
            return Err(Error::InvalidArgument(format!(
                "{x:?} does not lie in GF(2^{m})"
            )));
        }
        let t = self.subfield_sum(x, m);
        Ok(t.bits as u8)
    }

    /// Norm to GF(2^m): `x^((2^k - 1) / (2^m - 1))`.
    pub fn norm_to_subfield(&self, x: BinaryFieldElement, m: u32) -> Result<BinaryFieldElement> {
        if m == 0 || !self.k.is_multiple_of(m) {
            return Err(Error::InvalidArgument(format!(
                "{m} does not divide {}",
                self.k
            )));
        }
        let exp = u64::from(self.unit_count()) / ((1u64 << m) - 1);
        Ok(self.pow(x, exp))
    }
}
