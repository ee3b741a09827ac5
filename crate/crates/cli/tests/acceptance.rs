//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

#[path = "../../core/tests/golden/mod.rs"]
mod golden;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use codegree_core::chartab::ClassMatrix;
use codegree_core::codegree::{codegrees, moreto_check, qian_property_test, Codegrees};
use codegree_core::construct::{build_named, build_paper_g};
use codegree_core::group::element_order_spectrum;
use codegree_core::{character_table, pi_set, CharacterTable, FiniteGroup};
use serde_json::Value;

const EXPECTED_CODEGREES: [u64; 10] = [1, 3, 5, 11, 15, 33, 1024, 2112, 5120, 10560];

type Check = Result<(), String>;
type Criterion = fn(&Inputs) -> Check;

fn ensure(cond: bool, msg: impl Into<String>) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn run_cli(args: &[&str], json_out: &Path) -> Result<(i32, Vec<u8>), String> {
    let status = Command::new(env!("CARGO_BIN_EXE_codegree-lab"))
        .args(args)
        .arg("--json")
        .arg(json_out)
        .env_remove("CODEGREE_LAB_CACHE")
        .status()
        .map_err(|e| format!("cannot run codegree-lab: {e}"))?;
    let bytes = std::fs::read(json_out).map_err(|e| format!("no output from {args:?}: {e}"))?;
    Ok((status.code().unwrap_or(-1), bytes))
}

struct Computed {
    name: String,
    group: FiniteGroup,
    table: CharacterTable,
    cods: Codegrees,
}

fn compute(name: &str, group: FiniteGroup) -> Result<Computed, String> {
    let table = character_table(&group).map_err(|e| format!("{name}: {e}"))?;
    let cods = codegrees(&table).map_err(|e| format!("{name}: {e}"))?;
    Ok(Computed {
        name: name.to_string(),
        group,
        table,
        cods,
    })
}

struct Inputs {
    dir: PathBuf,
    verify: Result<(Value, i32), String>,
    computed: Result<Vec<Computed>, String>,
    moreto_exit: Result<i32, String>,
}

impl Inputs {
    fn cert(&self) -> Result<(&Value, i32), String> {
        self.verify
            .as_ref()
            .map(|(v, c)| (v, *c))
            .map_err(Clone::clone)
    }

    fn all(&self) -> Result<&[Computed], String> {
        self.computed.as_deref().map_err(Clone::clone)
    }

    fn moreto(&self) -> Result<i32, String> {
        self.moreto_exit.clone()
    }
}

fn u64_set(v: &Value) -> BTreeSet<u64> {
    v.as_array()
        .map(|a| a.iter().filter_map(Value::as_u64).collect())
        .unwrap_or_default()
}

fn paper(all: &[Computed]) -> &Computed {
    all.iter()
        .find(|c| c.name == "paper_g")
        .expect("paper_g computed")
}

fn criterion1(cert: &Value, exit_code: i32) -> Check {
    ensure(
        exit_code == 0,
        format!("verify-paper exited with {exit_code}"),
    )?;
    let c = &cert["certificate"];
    ensure(
        cert["group_order"] == 337_920,
        format!("|G| = {}", cert["group_order"]),
    )?;
    ensure(
        c["fitting_order"] == 2048,
        format!("|F| = {}", c["fitting_order"]),
    )?;
    ensure(
        c["center_order"] == 2,
        format!("|Z| = {}", c["center_order"]),
    )?;
    let h = &c["hypotheses"];
    ensure(h["center_cyclic"] == true, "Z(G) not cyclic")?;
    ensure(
        h["fitting_over_center_is_chief_factor"] == true,
        "F/Z is not a chief factor",
    )?;
    ensure(
        h["fitting_order_coprime_to_index"] == true,
        "gcd(|F|, |G/F|) != 1",
    )?;
    ensure(h["non_nilpotent"] == true, "G is nilpotent")
}

fn criterion2(cert: &Value) -> Check {
    let found = u64_set(&cert["codegree_set"]);
    let expected: BTreeSet<u64> = EXPECTED_CODEGREES.into_iter().collect();
    ensure(
        found == expected,
        format!(
            "codegree set differs: missing {:?}, unexpected {:?}",
            expected.difference(&found).collect::<Vec<_>>(),
            found.difference(&expected).collect::<Vec<_>>()
        ),
    )
}

fn criterion3(cert: &Value) -> Check {
    let witnesses = cert["certificate"]["witnesses"]
        .as_array()
        .cloned()
        .unwrap_or_default();
    let good = witnesses.iter().filter(|w| {
        w["degree"] == 32
            && w["faithful"] == true
            && w["vanishes_off_center"] == true
            && w["restriction_irreducible"] == true
            && w["cod"] == 10560
    });
    ensure(
        good.count() >= 1,
        format!("no certified witness among {} candidates", witnesses.len()),
    )?;
    ensure(
        cert["certificate"]["expected_cod"] == 10560,
        "formula |G|/|F:Z|^(1/2) is not 10560",
    )
}

fn criterion4(cert: &Value, g: &Computed) -> Check {
    let target: BTreeSet<u64> = [2, 3, 5, 11].into();
    ensure(pi_set(337_920) == target, "π(|G|) != {2,3,5,11}")?;
    let witnesses = cert["certificate"]["witnesses"]
        .as_array()
        .cloned()
        .unwrap_or_default();
    ensure(!witnesses.is_empty(), "no witnesses")?;
    for w in witnesses {
        let i = w["character"].as_u64().ok_or("witness without index")? as usize;
        let cod = g.cods.records[i].cod;
        ensure(
            pi_set(cod) == target,
            format!("witness {i}: π({cod}) != {{2,3,5,11}}"),
        )?;
    }
    Ok(())
}

fn criterion5(g: &Computed, moreto_exit: i32) -> Check {
    let report = moreto_check(&g.table, &g.cods);
    ensure(report.has_violations(), "no violations found")?;
    let violating: BTreeSet<usize> = report.violations.iter().map(|v| v.0).collect();
    for r in g.cods.records.iter().filter(|r| r.cod == 10560) {
        ensure(
            violating.contains(&r.character),
            format!("character {} with cod 10560 has a witness", r.character),
        )?;
    }
    let full = pi_set(337_920);
    let by_primes: BTreeSet<usize> = g
        .cods
        .records
        .iter()
        .filter(|r| r.pi_set == full)
        .map(|r| r.character)
        .collect();
    ensure(
        violating == by_primes,
        "violations are not exactly the characters with π(cod) = π(|G|)",
    )?;
    let spectrum = element_order_spectrum(&g.group).map_err(|e| e.to_string())?;
    ensure(
        spectrum.orders.iter().all(|o| o % 330 != 0),
        format!("element order divisible by 330 in {:?}", spectrum.orders),
    )?;
    ensure(
        moreto_exit == 10,
        format!("moreto exited with {moreto_exit}, expected 10"),
    )
}

fn criterion6() -> Check {
    for name in golden::NAMES {
        golden::check(name)?;
    }
    Ok(())
}

fn properties(c: &Computed) -> Check {
    let n = c.table.group_order();
    c.table.verify().map_err(|e| format!("{}: {e}", c.name))?;
    let degrees = c.table.degrees();
    ensure(
        degrees.iter().map(|d| d * d).sum::<u64>() == n,
        format!("{}: Σd² != |G|", c.name),
    )?;
    ensure(
        degrees.iter().all(|d| n.is_multiple_of(*d)),
        format!("{}: degree does not divide |G|", c.name),
    )?;
    let cd = c.group.classes().map_err(|e| e.to_string())?;
    let mut matrices: BTreeMap<usize, ClassMatrix> = BTreeMap::new();
    for r in &c.cods.records {
        ensure(
            r.cod * r.degree * r.kernel_size == n,
            format!("{}: cod integrality fails for {}", c.name, r.character),
        )?;
        // a union of classes is a subgroup iff C_i C_j stays inside it
        let inside: BTreeSet<usize> = r.kernel_classes.iter().copied().collect();
        ensure(
            inside.contains(&0),
            format!("{}: kernel of {} misses the identity", c.name, r.character),
        )?;
        for &i in &inside {
            let m = matrices
                .entry(i)
                .or_insert_with(|| ClassMatrix::compute(&c.group, cd, i));
            let closed = inside
                .iter()
                .all(|&j| (0..cd.len()).all(|k| inside.contains(&k) || m.entries[j][k] == 0));
            ensure(
                closed,
                format!(
                    "{}: kernel of {} is not closed under products",
                    c.name, r.character
                ),
            )?;
        }
    }
    Ok(())
}

fn criterion7(all: &[Computed]) -> Check {
    all.iter().try_for_each(properties)
}

fn criterion8(all: &[Computed]) -> Check {
    for c in all {
        let q = qian_property_test(&c.table, &c.cods);
        ensure(
            q.holds(),
            format!("{}: orders {:?} divide no codegree", c.name, q.failures),
        )?;
    }
    Ok(())
}

fn criterion9(dir: &Path) -> Check {
    let cases: [&[&str]; 4] = [
        &["verify-paper"],
        &["chartab", "--preset", "SL23"],
        &["codegrees", "--preset", "torus_t"],
        &["moreto", "--preset", "paper_g"],
    ];
    for (k, args) in cases.iter().enumerate() {
        let mut outputs = Vec::new();
        for threads in ["1", "4"] {
            let mut full: Vec<&str> = args.to_vec();
            full.extend(["--threads", threads]);
            let (_, bytes) = run_cli(&full, &dir.join(format!("det_{k}_{threads}.json")))?;
            outputs.push(bytes);
        }
        ensure(
            outputs[0] == outputs[1],
            format!("{args:?}: output differs between --threads 1 and 4"),
        )?;
    }
    Ok(())
}

fn main() {
    let start = Instant::now();
    let dir = tempfile::tempdir().expect("temp dir");
    let cache = dir.path().join("cache");
    let cache_arg = cache.to_str().unwrap();
    let verify = run_cli(
        &["verify-paper", "--cache", cache_arg],
        &dir.path().join("verify.json"),
    );
    let moreto = run_cli(
        &["moreto", "--preset", "paper_g", "--cache", cache_arg],
        &dir.path().join("moreto.json"),
    );
    let cli_elapsed = start.elapsed();

    let mut names: Vec<String> = (1..=12).map(|n| format!("C_{n}")).collect();
    names.extend(
        [
            "trivial",
            "S3",
            "S4",
            "D8",
            "Q8",
            "A4",
            "SL23",
            "extraspecial_p_small",
            "torus_t",
        ]
        .map(String::from),
    );
    let mut computed: Vec<Result<Computed, String>> = names
        .iter()
        .map(|n| {
            build_named(n)
                .map_err(|e| e.to_string())
                .and_then(|g| compute(n, g))
        })
        .collect();
    computed.push(
        build_paper_g()
            .map_err(|e| e.to_string())
            .and_then(|g| compute("paper_g", g)),
    );
    let computed: Result<Vec<Computed>, String> = computed.into_iter().collect();

    let inputs = Inputs {
        dir: dir.path().to_path_buf(),
        verify: verify.and_then(|(code, bytes)| {
            serde_json::from_slice(&bytes)
                .map(|v| (v, code))
                .map_err(|e| format!("verify-paper JSON: {e}"))
        }),
        computed,
        moreto_exit: moreto.map(|m| m.0),
    };

    let criteria: [(&str, Criterion); 9] = [
        (
            "counterexample group: |G|, |F|, |Z|, Z cyclic, F/Z chief, coprime",
            |x| {
                let (c, code) = x.cert()?;
                criterion1(c, code)
            },
        ),
        ("codegree set of G", |x| criterion2(x.cert()?.0)),
        (
            "faithful fully ramified witness of degree 32 with cod 10560",
            |x| criterion3(x.cert()?.0),
        ),
        ("witness codegrees have all primes of |G|", |x| {
            criterion4(x.cert()?.0, paper(x.all()?))
        }),
        (
            "prime-set question has violations, exactly the cod 10560 characters",
            |x| criterion5(paper(x.all()?), x.moreto()?),
        ),
        ("golden tables of the small corpus", |_| criterion6()),
        ("table properties on every computed table", |x| {
            criterion7(x.all()?)
        }),
        ("every element order divides a codegree", |x| {
            criterion8(x.all()?)
        }),
        ("byte-identical output across thread counts", |x| {
            criterion9(&x.dir)
        }),
    ];

    let mut failures = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(|| check(&inputs)))
            .unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(()) => println!("criterion {}: PASS  {title}", i + 1),
            Err(msg) => {
                failures += 1;
                println!("criterion {}: FAIL  {title}\n    {msg}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed (verify-paper run: {:.1}s, total {:.1}s)",
        criteria.len() - failures,
        criteria.len(),
        cli_elapsed.as_secs_f64(),
        start.elapsed().as_secs_f64()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
