//! The subcommands, each producing a JSON document and an exit code.

use std::collections::BTreeSet;

use codegree_core::codegree::{
    moreto_check, qian_property_test, verify_theorem22_consequence, verify_theorem23, Codegrees,
    MoretoReport, MoretoVerdict, Theorem23Certificate,
};
use codegree_core::group::{
    center, element_order_spectrum, fitting_subgroup, is_cyclic, is_nilpotent, Subgroup,
};
use codegree_core::{character_table, codegrees, CharacterTable, FiniteGroup};
use serde_json::{json, Value};

use crate::cache::Cache;
use crate::descriptor::GroupDescriptor;
use crate::error::{exit, CliError};
use crate::tablefile::{codegree_entries, TableFile};
use crate::FORMAT;

/// Codegree set reported for the counterexample group.
pub const EXPECTED_PAPER_CODEGREES: [u64; 10] = [1, 3, 5, 11, 15, 33, 1024, 2112, 5120, 10560];

pub struct Output {
    pub json: Value,
    pub exit_code: i32,
}

impl Output {
    fn ok(json: Value) -> Self {
        Self {
            json,
            exit_code: exit::OK,
        }
    }
}

/// Loads the table from the cache or computes (and caches) it.
pub fn obtain_table(
    d: &GroupDescriptor,
    group: Option<&FiniteGroup>,
    cache: Option<&Cache>,
) -> Result<(TableFile, CharacterTable, Codegrees), CliError> {
    if let Some(tf) = cache.and_then(|c| c.load(d)) {
        let (tbl, cods) = tf.validate()?;
        return Ok((tf, tbl, cods));
    }
    let built;
    let g = match group {
        Some(g) => g,
        None => {
            built = d.build()?;
            &built
        }
    };
    let tbl = character_table(g)?;
    let cods = codegrees(&tbl)?;
    let tf = TableFile::new(d, &tbl, &cods);
    if let Some(c) = cache {
        c.store(&tf)?;
    }
    Ok((tf, tbl, cods))
}

fn set_json(s: &BTreeSet<u64>) -> Value {
    json!(s.iter().collect::<Vec<_>>())
}

pub fn build(d: &GroupDescriptor) -> Result<Output, CliError> {
    let g = d.build()?;
    let order = g.order()?;
    let z = center(&g)?;
    let f = fitting_subgroup(&g)?;
    let whole = Subgroup::whole(&g)?;
    let spectrum = element_order_spectrum(&g)?;
    Ok(Output::ok(json!({
        "format": FORMAT,
        "command": "build",
        "descriptor": d,
        "group": g.name(),
        "order": order,
        "center_order": z.order(),
        "fitting_order": f.order(),
        "cyclic": is_cyclic(&g, &whole).is_cyclic(),
        "nilpotent": is_nilpotent(&g)?,
        "num_classes": g.classes()?.len(),
        "exponent": g.classes()?.exponent,
        "spectrum": {
            "orders": set_json(&spectrum.orders),
            "maximal_prime_sets": spectrum.maximal_prime_sets.iter().map(set_json).collect::<Vec<_>>(),
        },
    })))
}

pub fn chartab(d: &GroupDescriptor, cache: Option<&Cache>) -> Result<Output, CliError> {
    let (tf, _, _) = obtain_table(d, None, cache)?;
    Ok(Output::ok(
        serde_json::to_value(&tf).expect("table serializes"),
    ))
}

pub fn codegrees_cmd(d: &GroupDescriptor, cache: Option<&Cache>) -> Result<Output, CliError> {
    let (tf, _, cods) = obtain_table(d, None, cache)?;
    Ok(Output::ok(json!({
        "format": FORMAT,
        "command": "codegrees",
        "descriptor": d,
        "group": tf.group,
        "group_order": tf.group_order,
        "codegree_set": set_json(&cods.set),
        "records": codegree_entries(&cods),
    })))
}

fn moreto_json(tbl: &CharacterTable, cods: &Codegrees, report: &MoretoReport) -> Value {
    let verdicts: Vec<Value> = cods
        .records
        .iter()
        .zip(&report.verdicts)
        .map(|(r, v)| {
            let witness = match v {
                MoretoVerdict::Witness { class, order } => json!({ "class": class, "order": order }),
                MoretoVerdict::Violation => Value::Null,
            };
            json!({ "character": r.character, "degree": r.degree, "cod": r.cod, "pi_set": set_json(&r.pi_set), "witness": witness })
        })
        .collect();
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|&(c, cod)| json!({ "character": c, "degree": tbl.degree(c), "cod": cod }))
        .collect();
    json!({ "negative_answer": report.has_violations(), "verdicts": verdicts, "violations": violations })
}

pub fn moreto(d: &GroupDescriptor, cache: Option<&Cache>) -> Result<Output, CliError> {
    let (tf, tbl, cods) = obtain_table(d, None, cache)?;
    let report = moreto_check(&tbl, &cods);
    let mut json = moreto_json(&tbl, &cods, &report);
    let obj = json.as_object_mut().unwrap();
    obj.insert("format".into(), json!(FORMAT));
    obj.insert("command".into(), json!("moreto"));
    obj.insert("descriptor".into(), json!(d));
    obj.insert("group".into(), json!(tf.group));
    let exit_code = if report.has_violations() {
        exit::VIOLATIONS
    } else {
        exit::OK
    };
    Ok(Output { json, exit_code })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl Status {
    fn of(b: bool) -> Self {
        if b {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::NotApplicable => "N/A",
        }
    }
}

fn certificate_json(cert: &Theorem23Certificate) -> Value {
    json!({
        "group_order": cert.group_order,
        "center_order": cert.center_order,
        "fitting_order": cert.fitting_order,
        "hypotheses": {
            "non_nilpotent": cert.non_nilpotent,
            "center_cyclic": cert.center_cyclic,
            "fitting_over_center_is_chief_factor": cert.chief_factor,
            "fitting_order_coprime_to_index": cert.coprime,
            "center_of_fitting_is_center": cert.center_of_fitting_is_center,
        },
        "inapplicable": cert.inapplicable,
        "expected_cod": cert.expected_cod,
        "witnesses": cert.witnesses.iter().map(|w| json!({
            "character": w.character,
            "degree": w.degree,
            "faithful": w.faithful,
            "degree_squared_is_index": w.degree_squared_is_index,
            "restriction_irreducible": w.restriction_irreducible,
            "vanishes_off_center": w.vanishes_off_center,
            "cod": w.cod,
            "cod_matches_formula": w.cod_matches_formula,
        })).collect::<Vec<_>>(),
        "quotient_orders": set_json(&cert.quotient_orders),
        "quotient_condition": cert.quotient_condition,
    })
}

/// One-shot reproduction of the counterexample: hypotheses, fully ramified
/// witnesses, their codegree and prime set, the violation of the
/// prime-set question, and (for the preset `paper_g`) the codegree set.
pub fn verify_paper(d: &GroupDescriptor, cache: Option<&Cache>) -> Result<Output, CliError> {
    let g = d.build()?;
    let (tf, tbl, cods) = obtain_table(d, Some(&g), cache)?;
    let cert = verify_theorem23(&g, &tbl, &cods)?;
    let report = moreto_check(&tbl, &cods);
    let qian = qian_property_test(&tbl, &cods);
    let applicable = cert.hypotheses_hold();
    let na = |s: Status| if applicable { s } else { Status::NotApplicable };

    let mut checks: Vec<(&str, Status)> = vec![
        ("hypotheses", na(Status::Pass)),
        (
            "witness_character",
            na(Status::of(!cert.witnesses.is_empty())),
        ),
        ("codegree_formula", na(Status::of(cert.passes()))),
        (
            "prime_set_consequence",
            na(Status::of(verify_theorem22_consequence(&tbl, &cods, &cert))),
        ),
    ];
    let violating: BTreeSet<usize> = report.violations.iter().map(|v| v.0).collect();
    let witnesses_violate = cert
        .witnesses
        .iter()
        .all(|w| violating.contains(&w.character));
    checks.push(if applicable && cert.quotient_condition {
        (
            "prime_set_question_violation",
            Status::of(report.has_violations() && witnesses_violate),
        )
    } else {
        ("prime_set_question_violation", Status::NotApplicable)
    });
    checks.push(("element_orders_divide_codegrees", Status::of(qian.holds())));

    let expected: BTreeSet<u64> = EXPECTED_PAPER_CODEGREES.into_iter().collect();
    let is_paper = *d == GroupDescriptor::preset("paper_g");
    let mut codegree_diff = Value::Null;
    if is_paper {
        checks.push(("codegree_set", Status::of(cods.set == expected)));
        if cods.set != expected {
            codegree_diff = json!({
                "missing": set_json(&expected.difference(&cods.set).copied().collect()),
                "unexpected": set_json(&cods.set.difference(&expected).copied().collect()),
            });
        }
    }
    let all_pass = checks.iter().all(|c| c.1 != Status::Fail);
    let json = json!({
        "format": FORMAT,
        "command": "verify-paper",
        "descriptor": d,
        "group": tf.group,
        "group_order": tf.group_order,
        "num_classes": tbl.num_classes(),
        "degrees": tbl.degrees(),
        "codegree_set": set_json(&cods.set),
        "expected_codegree_set": if is_paper { set_json(&expected) } else { Value::Null },
        "codegree_set_diff": codegree_diff,
        "certificate": certificate_json(&cert),
        "moreto": moreto_json(&tbl, &cods, &report),
        "qian_failures": qian.failures,
        "applicable": applicable,
        "checks": checks.iter().map(|(n, s)| json!({ "name": n, "status": s.label() })).collect::<Vec<_>>(),
        "all_pass": all_pass,
        "notes": [
            "the prime-set consequence is checked only for the certified witnesses; other faithful primitive characters are unverified",
        ],
    });
    Ok(Output {
        json,
        exit_code: if all_pass { exit::OK } else { exit::INTERNAL },
    })
}
