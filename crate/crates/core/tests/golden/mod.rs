//! Independently constructed irreducible characters of the small groups
//! (explicit representations, inflations and inductions), for comparison
//! with computed tables as multisets of rows.

#![allow(dead_code)]

use std::rc::Rc;

use codegree_core::chartab::cyclotomic_polynomial;
use codegree_core::construct::semilinear::torus_multiplier;
use codegree_core::construct::small::{
    decode_permutation, decode_quaternion, decode_sl23, encode_sl23,
};
use codegree_core::construct::{build_named, paper_field};
use codegree_core::{character_table, CyclotomicValue, FiniteGroup};

/// Every group with an oracle.
pub const NAMES: [&str; 20] = [
    "C_1",
    "C_2",
    "C_3",
    "C_4",
    "C_5",
    "C_6",
    "C_7",
    "C_8",
    "C_9",
    "C_10",
    "C_11",
    "C_12",
    "S3",
    "S4",
    "D8",
    "Q8",
    "A4",
    "SL23",
    "extraspecial_p_small",
    "torus_t",
];

/// A character as a function of the element key, with values in `Z[ζ_n]`.
pub struct Oracle {
    n: u64,
    value: Box<dyn Fn(u64) -> Vec<(u64, i64)>>,
}

fn oracle(n: u64, f: impl Fn(u64) -> Vec<(u64, i64)> + 'static) -> Oracle {
    Oracle {
        n,
        value: Box::new(f),
    }
}

fn int(v: i64) -> Vec<(u64, i64)> {
    vec![(0, v)]
}

/// Remainder modulo `Φ_e`: a canonical form for elements of `Z[ζ_e]`.
pub fn canonical(v: &CyclotomicValue) -> Vec<i128> {
    let e = v.conductor();
    let phi = cyclotomic_polynomial(e);
    let deg = phi.len() - 1;
    let mut rem = v.to_dense();
    for top in (deg..rem.len()).rev() {
        let c = rem[top];
        for (j, &p) in phi.iter().enumerate() {
            rem[top - deg + j] -= c * i128::from(p);
        }
    }
    rem.truncate(deg);
    rem
}

/// Computes the table of `g` and compares it with the oracle rows.
pub fn compare(g: &FiniteGroup, oracles: &[Oracle]) -> Result<(), String> {
    let t = character_table(g).map_err(|e| e.to_string())?;
    let e = t.exponent();
    if oracles.len() != t.num_classes() {
        return Err(format!(
            "{}: {} oracle characters for {} classes",
            g.name(),
            oracles.len(),
            t.num_classes()
        ));
    }
    let mut expected = Vec::new();
    for o in oracles {
        if e % o.n != 0 {
            return Err(format!(
                "{}: oracle conductor {} does not divide {e}",
                g.name(),
                o.n
            ));
        }
        let row: Vec<Vec<i128>> = t
            .classes
            .representatives
            .iter()
            .map(|&x| {
                let terms = (o.value)(x).into_iter().map(|(k, m)| (k * (e / o.n), m));
                canonical(&CyclotomicValue::new(e, terms))
            })
            .collect();
        expected.push(row);
    }
    let mut actual: Vec<Vec<Vec<i128>>> = t
        .characters
        .iter()
        .map(|row| row.iter().map(canonical).collect())
        .collect();
    expected.sort();
    actual.sort();
    if actual == expected {
        Ok(())
    } else {
        Err(format!("{}: computed table differs from the oracle\n computed: {actual:?}\n oracle:   {expected:?}", g.name()))
    }
}

/// Builds the named group and checks its table against its oracle.
pub fn check(name: &str) -> Result<(), String> {
    let g = build_named(name).map_err(|e| e.to_string())?;
    compare(&g, &oracles(name))
}

fn sign(p: &[u8]) -> i64 {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j]);
    if inversions.count() % 2 == 0 {
        1
    } else {
        -1
    }
}

fn fixed_points(p: &[u8]) -> i64 {
    p.iter()
        .enumerate()
        .filter(|&(i, &x)| i == x as usize)
        .count() as i64
}

/// `k` with `x ∈ a^k N`, where `N` is the normal subgroup of elements passing `in_normal`.
fn coset(g: &FiniteGroup, x: u64, a: u64, order: u64, in_normal: impl Fn(u64) -> bool) -> u64 {
    (0..order)
        .find(|&k| in_normal(g.mul(x, g.inv(g.pow(a, k)))))
        .expect("coset")
}

/// Oracle characters for one of [`NAMES`].
pub fn oracles(name: &str) -> Vec<Oracle> {
    match name {
        "S3" => symmetric3(),
        "S4" => symmetric4(),
        "D8" => dihedral8(),
        "Q8" => quaternion8(),
        "A4" => alternating4(),
        "SL23" => sl23(),
        "extraspecial_p_small" => heisenberg27(),
        "torus_t" => torus(),
        other => {
            let n: u64 = other
                .strip_prefix("C_")
                .and_then(|s| s.parse().ok())
                .expect("oracle for group");
            (0..n)
                .map(|a| oracle(n, move |x| vec![(a * x % n, 1)]))
                .collect()
        }
    }
}

fn symmetric3() -> Vec<Oracle> {
    vec![
        oracle(1, |_| int(1)),
        oracle(1, |x| int(sign(&decode_permutation(x, 3)))),
        oracle(1, |x| int(fixed_points(&decode_permutation(x, 3)) - 1)),
    ]
}

/// Permutation character minus one of the action on the three pairings
/// `{0, q+1} | rest`, i.e. the degree-2 character inflated from S4 -> S3.
fn pairing_character(x: u64) -> i64 {
    let p = decode_permutation(x, 4);
    let index = |a: u8, b: u8| -> u8 {
        if a == 0 {
            b - 1
        } else if b == 0 {
            a - 1
        } else {
            (1..4).find(|&z| z != a && z != b).unwrap() - 1
        }
    };
    (0..3u8)
        .filter(|&q| index(p[0], p[q as usize + 1]) == q)
        .count() as i64
        - 1
}

fn symmetric4() -> Vec<Oracle> {
    vec![
        oracle(1, |_| int(1)),
        oracle(1, |x| int(sign(&decode_permutation(x, 4)))),
        oracle(1, |x| int(fixed_points(&decode_permutation(x, 4)) - 1)),
        oracle(1, |x| {
            let p = decode_permutation(x, 4);
            int(sign(&p) * (fixed_points(&p) - 1))
        }),
        oracle(1, |x| int(pairing_character(x))),
    ]
}

/// Vertices of the square at (1,0), (0,1), (-1,0), (0,-1).
const SQUARE: [(i64, i64); 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];

fn square_matrix(x: u64) -> [[i64; 2]; 2] {
    let p = decode_permutation(x, 4);
    let (c0, c1) = (SQUARE[p[0] as usize], SQUARE[p[1] as usize]);
    [[c0.0, c1.0], [c0.1, c1.1]]
}

fn square_det(x: u64) -> i64 {
    let m = square_matrix(x);
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

fn dihedral8() -> Vec<Oracle> {
    vec![
        oracle(1, |_| int(1)),
        oracle(1, |x| int(sign(&decode_permutation(x, 4)))),
        oracle(1, |x| int(square_det(x))),
        oracle(1, |x| int(sign(&decode_permutation(x, 4)) * square_det(x))),
        oracle(1, |x| {
            let m = square_matrix(x);
            int(m[0][0] + m[1][1])
        }),
    ]
}

fn quaternion8() -> Vec<Oracle> {
    // traces of 1 -> I, i -> diag(i, -i), j -> [[0,1],[-1,0]], k = ij
    let mut v = vec![
        oracle(1, |_| int(1)),
        oracle(1, |x| {
            let (s, u) = decode_quaternion(x);
            int(if u == 0 { 2 - 4 * s as i64 } else { 0 })
        }),
    ];
    for unit in 1..4u64 {
        v.push(oracle(1, move |x| {
            let u = decode_quaternion(x).1;
            int(if u == 0 || u == unit { 1 } else { -1 })
        }));
    }
    v
}

fn alternating4() -> Vec<Oracle> {
    let g = Rc::new(build_named("A4").unwrap());
    let mut v = vec![oracle(1, |x| {
        int(fixed_points(&decode_permutation(x, 4)) - 1)
    })];
    for c in 0..3u64 {
        let h = Rc::clone(&g);
        let a = h.generators()[0];
        v.push(oracle(3, move |x| {
            let k = coset(&h, x, a, 3, |y| h.element_order(y) <= 2);
            vec![(c * k % 3, 1)]
        }));
    }
    v
}

/// Trace of the natural representation lifted to `{-2, -1, 0, 1, 2}`.
fn natural_sl23(x: u64) -> i64 {
    let m = decode_sl23(x);
    if m == [[1, 0], [0, 1]] {
        return 2;
    }
    if m == [[2, 0], [0, 2]] {
        return -2;
    }
    match (m[0][0] + m[1][1]) % 3 {
        2 => -1,
        1 => 1,
        _ => 0,
    }
}

fn sl23() -> Vec<Oracle> {
    let g = Rc::new(build_named("SL23").unwrap());
    let t = encode_sl23([[1, 1], [0, 1]]);
    // inflated from A4: 3 at ±I, -1 on order 4, 0 on orders 3 and 6
    let mut v = vec![oracle(1, |x| {
        let m = decode_sl23(x);
        int(if m[0][1] == 0 && m[1][0] == 0 {
            3
        } else if (m[0][0] + m[1][1]).is_multiple_of(3) {
            -1
        } else {
            0
        })
    })];
    for c in 0..3u64 {
        let h = Rc::clone(&g);
        v.push(oracle(3, move |x| {
            let k = coset(&h, x, t, 3, |y| 4 % h.element_order(y) == 0);
            vec![(c * k % 3, 1)]
        }));
        let h = Rc::clone(&g);
        v.push(oracle(3, move |x| {
            let k = coset(&h, x, t, 3, |y| 4 % h.element_order(y) == 0);
            vec![(c * k % 3, natural_sl23(x))]
        }));
    }
    v
}

/// Keys `a + 3b + 9c` with `c` central.
fn heisenberg27() -> Vec<Oracle> {
    let mut v = Vec::new();
    for alpha in 0..3u64 {
        for beta in 0..3u64 {
            v.push(oracle(3, move |x| {
                vec![((alpha * (x % 3) + beta * (x / 3 % 3)) % 3, 1)]
            }));
        }
    }
    for gamma in 1..3u64 {
        v.push(oracle(3, move |x| {
            if x % 9 == 0 {
                vec![(gamma * (x / 9) % 3, 3)]
            } else {
                vec![]
            }
        }));
    }
    v
}

/// Linear characters through `T/<m^3> ≅ C3 × C5`, and the characters
/// induced from `<m>`, one per ×4-orbit on `Z/33` outside `{0, 11, 22}`.
/// Elements `x -> λ^i x^(4^s)` are decoded to `(i, s)` by discrete log.
fn torus() -> Vec<Oracle> {
    let field = paper_field().unwrap();
    let lambda = torus_multiplier(&field);
    let mut powers = vec![1u32];
    for _ in 1..33 {
        powers.push(field.mul_bits(*powers.last().unwrap(), lambda));
    }
    let decode = move |x: u64| -> (u64, u64) {
        let multiplier = (x & 0x3FF) as u32;
        let i = powers
            .iter()
            .position(|&p| p == multiplier)
            .expect("multiplier in <λ>") as u64;
        (i, (x >> 10) / 2)
    };
    let mut v = Vec::new();
    for a in 0..3u64 {
        for b in 0..5u64 {
            let d = decode.clone();
            v.push(oracle(15, move |x| {
                let (i, s) = d(x);
                vec![((5 * a * i + 3 * b * s) % 15, 1)]
            }));
        }
    }
    let mut seen = [false; 33];
    for c in 0..33u64 {
        if c % 11 == 0 || seen[c as usize] {
            continue;
        }
        let orbit: Vec<u64> = (0..5).map(|t| c * 4u64.pow(t) % 33).collect();
        for &o in &orbit {
            seen[o as usize] = true;
        }
        let d = decode.clone();
        v.push(oracle(33, move |x| {
            let (i, s) = d(x);
            if s != 0 {
                vec![]
            } else {
                orbit.iter().map(|&o| (o * i % 33, 1)).collect()
            }
        }));
    }
    v
}
