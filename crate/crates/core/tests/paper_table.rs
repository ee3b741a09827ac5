use std::collections::{BTreeMap, BTreeSet};

use codegree_core::codegree::{
    codegrees, moreto_check, qian_property_test, verify_theorem22_consequence, verify_theorem23,
    Codegrees,
};
use codegree_core::construct::build_paper_g;
use codegree_core::{character_table, pi_set, CharacterTable, FiniteGroup};
use once_cell::sync::Lazy;

struct Computed {
    group: FiniteGroup,
    table: CharacterTable,
    cods: Codegrees,
}

static G: Lazy<Computed> = Lazy::new(|| {
    let group = build_paper_g().unwrap();
    let table = character_table(&group).unwrap();
    let cods = codegrees(&table).unwrap();
    Computed { group, table, cods }
});

#[test]
fn table_shape_and_degrees() {
    let t = &G.table;
    assert_eq!(t.group_order(), 337_920);
    assert_eq!(t.exponent(), 660);
    assert_eq!(t.prime, 1321);
    assert_eq!(t.num_classes(), 53);
    let degrees = t.degrees();
    assert_eq!(degrees.iter().map(|d| d * d).sum::<u64>(), 337_920);
    let mut counts = BTreeMap::new();
    for d in degrees {
        *counts.entry(d).or_insert(0) += 1;
    }
    let expected: BTreeMap<u64, usize> =
        [(1, 15), (5, 6), (32, 15), (33, 5), (160, 6), (165, 6)].into();
    assert_eq!(counts, expected);
}

#[test]
fn codegree_set() {
    let expected: BTreeSet<u64> = [1, 3, 5, 11, 15, 33, 1024, 2112, 5120, 10560].into();
    assert_eq!(G.cods.set, expected);
    let faithful: BTreeSet<(u64, u64)> = G
        .cods
        .records
        .iter()
        .filter(|r| r.is_faithful())
        .map(|r| (r.degree, r.cod))
        .collect();
    assert_eq!(faithful, [(32, 10560), (160, 2112)].into());
}

#[test]
fn question_b_violations_are_exactly_full_prime_set() {
    let report = moreto_check(&G.table, &G.cods);
    assert!(report.has_violations());
    let full = pi_set(337_920);
    let violating: BTreeSet<usize> = report.violations.iter().map(|v| v.0).collect();
    let by_primes: BTreeSet<usize> = G
        .cods
        .records
        .iter()
        .filter(|r| r.pi_set == full)
        .map(|r| r.character)
        .collect();
    assert_eq!(violating, by_primes);
    assert!(report.violations.iter().all(|&(_, cod)| cod == 10560));
    assert_eq!(violating.len(), 15);
}

#[test]
fn fully_ramified_certificate() {
    let cert = verify_theorem23(&G.group, &G.table, &G.cods).unwrap();
    assert!(cert.hypotheses_hold(), "{:?}", cert.inapplicable);
    assert!(cert.passes());
    assert_eq!(cert.expected_cod, Some(10560));
    assert!(cert
        .witnesses
        .iter()
        .all(|w| w.degree == 32 && w.cod == 10560));
    assert!(cert.quotient_condition);
    assert!(verify_theorem22_consequence(&G.table, &G.cods, &cert));
}

#[test]
fn element_orders_divide_codegrees() {
    assert!(qian_property_test(&G.table, &G.cods).holds());
}
