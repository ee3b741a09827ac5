//! Backends for the small named groups.

use crate::group::{Element, GroupBackend};

/// Permutations of `0..n`, `n <= 16`, packed four bits per point.
/// The product `a * b` applies `a` first.
pub struct PermutationBackend {
    points: usize,
}

impl PermutationBackend {
    pub fn new(points: usize) -> Self {
        assert!(
            (1..=16).contains(&points),
            "permutation degree must be in 1..=16"
        );
        Self { points }
    }

    pub fn pack(&self, images: &[u8]) -> Element {
        assert_eq!(images.len(), self.points);
        images
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &p)| acc | (u64::from(p) << (4 * i)))
    }
}

/// Images of `0..points` under the permutation with the given key.
pub fn decode_permutation(key: Element, points: usize) -> Vec<u8> {
    (0..points)
        .map(|i| ((key >> (4 * i)) & 0xF) as u8)
        .collect()
}

impl GroupBackend for PermutationBackend {
    fn identity(&self) -> Element {
        self.pack(&(0..self.points as u8).collect::<Vec<_>>())
    }

    fn mul(&self, a: Element, b: Element) -> Element {
        let mut out = 0;
        for i in 0..self.points {
            let ai = (a >> (4 * i)) & 0xF;
            let bi = (b >> (4 * ai)) & 0xF;
            out |= bi << (4 * i);
        }
        out
    }

    fn inv(&self, a: Element) -> Element {
        let mut out = 0;
        for i in 0..self.points {
            let ai = (a >> (4 * i)) & 0xF;
            out |= (i as u64) << (4 * ai);
        }
        out
    }

    fn key_bound(&self) -> Option<u64> {
        (self.points <= 6).then(|| 1u64 << (4 * self.points))
    }
}

/// Integers modulo `n` under addition.
pub struct CyclicBackend(pub u64);

impl GroupBackend for CyclicBackend {
    fn identity(&self) -> Element {
        0
    }

    fn mul(&self, a: Element, b: Element) -> Element {
        (a + b) % self.0
    }

    fn inv(&self, a: Element) -> Element {
        (self.0 - a) % self.0
    }

    fn key_bound(&self) -> Option<u64> {
        Some(self.0)
    }
}

/// The quaternion units `{±1, ±i, ±j, ±k}`; key `4 * sign + unit` with
/// units 1, i, j, k numbered 0..4.
pub struct QuaternionBackend;

const QUATERNION_PRODUCTS: [[(u64, u64); 4]; 4] = [
    [(0, 0), (0, 1), (0, 2), (0, 3)],
    [(0, 1), (1, 0), (0, 3), (1, 2)],
    [(0, 2), (1, 3), (1, 0), (0, 1)],
    [(0, 3), (0, 2), (1, 1), (1, 0)],
];

/// `(sign, unit)` of a quaternion key: the element is `(-1)^sign * unit`.
pub fn decode_quaternion(key: Element) -> (u64, u64) {
    (key / 4, key % 4)
}

impl GroupBackend for QuaternionBackend {
    fn identity(&self) -> Element {
        0
    }

    fn mul(&self, a: Element, b: Element) -> Element {
        let (sa, ua) = decode_quaternion(a);
        let (sb, ub) = decode_quaternion(b);
        let (s, u) = QUATERNION_PRODUCTS[ua as usize][ub as usize];
        4 * ((sa + sb + s) % 2) + u
    }

    fn inv(&self, a: Element) -> Element {
        let (s, u) = decode_quaternion(a);
        if u == 0 {
            a
        } else {
            4 * ((s + 1) % 2) + u
        }
    }

    fn key_bound(&self) -> Option<u64> {
        Some(8)
    }
}

/// 2x2 matrices of determinant 1 over GF(3); key `a + 3b + 9c + 27d` for
/// the matrix `[[a, b], [c, d]]`.
pub struct Sl23Backend;

pub fn decode_sl23(key: Element) -> [[u64; 2]; 2] {
    [[key % 3, key / 3 % 3], [key / 9 % 3, key / 27 % 3]]
}

pub fn encode_sl23(m: [[u64; 2]; 2]) -> Element {
    m[0][0] + 3 * m[0][1] + 9 * m[1][0] + 27 * m[1][1]
}

impl GroupBackend for Sl23Backend {
    fn identity(&self) -> Element {
        encode_sl23([[1, 0], [0, 1]])
    }

    fn mul(&self, a: Element, b: Element) -> Element {
        let (x, y) = (decode_sl23(a), decode_sl23(b));
        let mut out = [[0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = (x[i][0] * y[0][j] + x[i][1] * y[1][j]) % 3;
            }
        }
        encode_sl23(out)
    }

    fn inv(&self, a: Element) -> Element {
        let m = decode_sl23(a);
        encode_sl23([[m[1][1], (3 - m[0][1]) % 3], [(3 - m[1][0]) % 3, m[0][0]]])
    }

    fn key_bound(&self) -> Option<u64> {
        Some(81)
    }
}

/// Upper unitriangular 3x3 matrices over GF(p): the extraspecial group of
/// order p^3 and exponent p (p odd). Key `a + p b + p^2 c` for the matrix
/// with superdiagonal `(a, b)` and corner `c`.
pub struct HeisenbergBackend(pub u64);

impl HeisenbergBackend {
    fn split(&self, k: Element) -> (u64, u64, u64) {
        let p = self.0;
        (k % p, k / p % p, k / (p * p))
    }

    fn join(&self, a: u64, b: u64, c: u64) -> Element {
        let p = self.0;
        a % p + p * (b % p) + p * p * (c % p)
    }
}

impl GroupBackend for HeisenbergBackend {
    fn identity(&self) -> Element {
        0
    }

    fn mul(&self, x: Element, y: Element) -> Element {
        let (a, b, c) = self.split(x);
        let (a2, b2, c2) = self.split(y);
        self.join(a + a2, b + b2, c + c2 + a * b2)
    }

    fn inv(&self, x: Element) -> Element {
        let p = self.0;
        let (a, b, c) = self.split(x);
        // (a,b,c)^{-1} = (-a, -b, ab - c)
        self.join(p - a, p - b, a * b % p + p - c)
    }

    fn key_bound(&self) -> Option<u64> {
        Some(self.0.pow(3))
    }
}
