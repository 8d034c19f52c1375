//! Acceptance criteria 1-9, one PASS/FAIL line each.
//!
//! Run with `cargo test -p mtl-cli --test acceptance -- --nocapture` to see
//! the lines. Criterion 1 is known to fail: two printed example values do
//! not follow from their own tables (see the README). The test asserts the
//! exact pass/fail pattern, so a criterion that starts or stops passing is
//! noticed either way.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use mtl_core::claims::{verify_claim, verify_claim_at, Verdict};
use mtl_core::classify::{classify, is_bl};
use mtl_core::fixtures;
use mtl_core::induced::{check_mtl_iso, order_iso_right, Mode};
use mtl_core::order::{generated_filter, is_filter, is_subalgebra, subalgebra_failure};
use mtl_core::search::{
    canonical_form, enumerate_all, enumerate_chains, enumerate_chains_by_imp, standard_corpus,
};
use mtl_core::stabilizers::{impl_left, impl_right, mult_left, mult_right, mult_stab};
use mtl_core::{FiniteMtlAlgebra, Subset};
use tempfile::TempDir;

/// Criteria expected to fail, with the reason recorded in the README.
const KNOWN_FAILING: &[usize] = &[1];

type Outcome = Result<String, String>;

fn set(a: &FiniteMtlAlgebra, labels: &[&str]) -> Subset {
    a.subset(labels.iter().copied()).unwrap()
}

fn shown(a: &FiniteMtlAlgebra, s: &Subset) -> String {
    format!("{{{}}}", a.render(s))
}

fn expect_set(
    errors: &mut Vec<String>,
    what: &str,
    a: &FiniteMtlAlgebra,
    got: &Subset,
    want: &[&str],
) {
    if *got != set(a, want) {
        errors.push(format!(
            "{what} = {} (expected {{{}}})",
            shown(a, got),
            want.join(",")
        ));
    }
}

fn finish(errors: Vec<String>, ok: String) -> Outcome {
    if errors.is_empty() {
        Ok(ok)
    } else {
        Err(errors.join("; "))
    }
}

fn within(errors: &mut Vec<String>, t: Duration, limit: Duration) -> String {
    if t > limit {
        errors.push(format!("took {t:?}, limit {limit:?}"));
    }
    format!("{:.2?}", t)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut e = Vec::new();

    let a4 = fixtures::load("a4");
    let b = set(&a4, &["b"]);
    expect_set(&mut e, "a4 X_l", &a4, &impl_left(&a4, &b).unwrap(), &["1"]);
    expect_set(
        &mut e,
        "a4 X_r",
        &a4,
        &impl_right(&a4, &b).unwrap(),
        &["a", "1"],
    );
    let xs = impl_left(&a4, &b)
        .unwrap()
        .intersection(&impl_right(&a4, &b).unwrap());
    expect_set(&mut e, "a4 X_s", &a4, &xs, &["1"]);

    let a5 = fixtures::load("a5");
    let b = set(&a5, &["b"]);
    expect_set(
        &mut e,
        "a5 X_l",
        &a5,
        &impl_left(&a5, &b).unwrap(),
        &["a", "1"],
    );
    let gl = impl_left(&a5, &generated_filter(&a5, &b).unwrap()).unwrap();
    expect_set(&mut e, "a5 <X>_l", &a5, &gl, &["1"]);

    let g6 = fixtures::load("g6");
    let mut xr = impl_right(&g6, &set(&g6, &["b"])).unwrap();
    xr.insert(g6.bot());
    expect_set(&mut e, "g6 X_r u {0}", &g6, &xr, &["0", "a", "1"]);
    match subalgebra_failure(&g6, &xr) {
        Some(f) if !is_subalgebra(&g6, &xr) && f.describe(&g6).contains("a->0=d") => {}
        other => e.push(format!(
            "g6 subalgebra witness: {:?}",
            other.map(|f| f.describe(&g6))
        )),
    }

    let b4 = fixtures::load("b4");
    let b = set(&b4, &["b"]);
    expect_set(
        &mut e,
        "b4 X*_l",
        &b4,
        &mult_left(&b4, &b).unwrap(),
        &["b", "1"],
    );
    let gml = mult_left(&b4, &generated_filter(&b4, &b).unwrap()).unwrap();
    expect_set(&mut e, "b4 <X>*_l", &b4, &gml, &["1"]);

    let m6 = fixtures::load("m6");
    let f = set(&m6, &["a", "1"]);
    if !is_filter(&m6, &f) {
        let a = m6.element("a").unwrap();
        e.push(format!(
            "m6 F = {{a,1}} is not a filter (a*a = {})",
            m6.label(m6.mul(a, a))
        ));
    }
    let frr = impl_right(&m6, &impl_right(&m6, &f).unwrap()).unwrap();
    expect_set(&mut e, "m6 (F_r)_r", &m6, &frr, &["a", "b", "1"]);
    if classify(&m6).get("mv") != Some(true) {
        e.push("m6 is not MV".into());
    }
    let t = within(&mut e, start.elapsed(), Duration::from_secs(1));
    finish(e, format!("all example values reproduced in {t}"))
}

fn criterion_2() -> Outcome {
    let mut e = Vec::new();
    for (name, class, check) in [
        ("i6", "imtl", "imtl_via_l0"),
        ("n5", "integral", "integral_via_l0"),
        ("g6", "godel", "godel_via_left"),
    ] {
        let c = classify(&fixtures::load(name));
        let chk = c.checks.iter().find(|k| k.key == check).unwrap();
        if c.get(class) != Some(true) || !chk.direct || !chk.via_stabilizers {
            e.push(format!(
                "{name}: {class} direct={} via stabilizers={}",
                chk.direct, chk.via_stabilizers
            ));
        }
    }
    finish(e, "i6 IMTL, n5 integral, g6 Godel by both routes".into())
}

const SUITE: [&str; 21] = [
    "T3.9-ortho",
    "P3.4.1",
    "P3.4.2",
    "P3.4.3",
    "P3.4.4",
    "P3.4.5",
    "P3.4.6",
    "P3.4.7",
    "P3.4.8",
    "P3.4.9",
    "P4.3.1",
    "P4.3.2",
    "P4.3.3",
    "P4.3.4",
    "P4.3.7",
    "P4.3.8",
    "T4.7-left-alg",
    "T4.8-right-alg",
    "T4.11-order-iso",
    "T4.9-godel",
    "T4.10-godel-chain",
];

fn single_threaded<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(f)
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut e = Vec::new();
    let (checked, instances) = single_threaded(|| {
        let corpus = standard_corpus();
        let mut instances = 0;
        for a in &corpus {
            for id in SUITE {
                let o = verify_claim(a, id).unwrap();
                instances += o.scope;
                if o.verdict != Verdict::Holds {
                    e.push(format!(
                        "{} {id}: {:?} {}",
                        a.name(),
                        o.verdict,
                        o.describe_witness(a)
                    ));
                }
            }
        }
        (corpus.len(), instances)
    });
    let t = within(&mut e, start.elapsed(), Duration::from_secs(120));
    finish(
        e,
        format!("{checked} algebras, {instances} instances, zero refutations, {t}"),
    )
}

fn criterion_4() -> Outcome {
    let mut e = Vec::new();
    let a4 = fixtures::load("a4");
    if verify_claim(&a4, "P4.3.6").unwrap().verdict != Verdict::Refuted {
        e.push("P4.3.6 not refuted on a4".into());
    }
    let ab = set(&a4, &["a", "b"]);
    let at = verify_claim_at(&a4, "P4.3.6", &[ab]).unwrap();
    let detail = at
        .witness
        .as_ref()
        .map(|w| w.failure.detail.clone())
        .unwrap_or_default();
    if at.verdict != Verdict::Refuted
        || detail != "X*_s = ∅"
        || !mult_stab(&a4, &ab).unwrap().is_empty()
    {
        e.push(format!("P4.3.6 at X={{a,b}}: {detail}"));
    }
    let mut pool = standard_corpus();
    pool.extend(fixtures::NAMES.iter().map(|n| fixtures::load(n)));
    for a in &pool {
        let o = verify_claim(a, "P4.3.5").unwrap();
        let full = mult_right(a, &Subset::singleton(a.size(), a.top()))
            .unwrap()
            .is_full();
        let detail = o
            .witness
            .as_ref()
            .map(|w| w.failure.detail.clone())
            .unwrap_or_default();
        if o.verdict != Verdict::Refuted || !full || !detail.contains("R*_1") {
            e.push(format!("P4.3.5 on {}: {:?} {detail}", a.name(), o.verdict));
        }
    }
    let g6 = fixtures::load("g6");
    if verify_claim(&g6, "Q-godel-xr-union-subalg")
        .unwrap()
        .verdict
        != Verdict::Refuted
    {
        e.push("Godel question not refuted on g6".into());
    }
    let at = verify_claim_at(&g6, "Q-godel-xr-union-subalg", &[set(&g6, &["b"])]).unwrap();
    let detail = at
        .witness
        .as_ref()
        .map(|w| w.failure.detail.clone())
        .unwrap_or_default();
    if at.verdict != Verdict::Refuted || !detail.contains("a->0=d") {
        e.push(format!("g6 at X={{b}}: {detail}"));
    }
    finish(
        e,
        "P4.3.6 (X={a,b}, X*_s = ∅), P4.3.5 (R*_1 = L) and the g6 question (a->0=d) refuted".into(),
    )
}

fn criterion_5() -> Outcome {
    let mut e = Vec::new();
    let corpus = standard_corpus();
    let mut bl = 0;
    for a in &corpus {
        let o = verify_claim(a, "T3.6").unwrap();
        if o.verdict != Verdict::Holds {
            e.push(format!("{} T3.6 {}", a.name(), o.describe_witness(a)));
        }
        if is_bl(a) {
            bl += 1;
            let o = verify_claim(a, "T3.16-bl").unwrap();
            if o.verdict != Verdict::Holds {
                e.push(format!("{} T3.16 {}", a.name(), o.describe_witness(a)));
            }
        }
    }
    finish(
        e,
        format!("{} algebras, {bl} BL, no split bundle", corpus.len()),
    )
}

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_mtlstab"));
    c.env_remove("MTL_JOBS");
    c
}

fn write_fixture(dir: &TempDir, name: &str) -> PathBuf {
    let p = dir.path().join(format!("{name}.alg"));
    std::fs::write(&p, fixtures::source(name)).unwrap();
    p
}

fn criterion_6() -> Outcome {
    let mut e = Vec::new();
    let d = TempDir::new().unwrap();
    let cases = [
        (
            "a4",
            "a,b",
            vec![
                "reported\tmult_left(a,b)\tprinted={b,1} computed={1} existential={b,1} mismatch",
                "reported\tmult_right(a,b)\tprinted={0,b} computed={0} existential={0,b} mismatch",
            ],
        ),
        (
            "c5",
            "a,c",
            vec!["reported\tmult_right(a,c)\tprinted={0,a,c} computed={0,a} existential={0,a,c} mismatch"],
        ),
    ];
    for (name, x, lines) in cases {
        let p = write_fixture(&d, name);
        let o = bin()
            .args([
                "verify",
                p.to_str().unwrap(),
                "--set",
                x,
                "--format",
                "machine",
            ])
            .output()
            .unwrap();
        let out = String::from_utf8(o.stdout).unwrap();
        for l in lines {
            if !out.lines().any(|x| x == l) {
                e.push(format!("{name}: missing `{l}`"));
            }
        }
    }
    finish(
        e,
        "definitional and printed values both recorded with mismatch flags".into(),
    )
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut e = Vec::new();
    for (n, want) in [(2, 1), (3, 2), (4, 6)] {
        let got = enumerate_chains(n).unwrap();
        if got.len() != want {
            e.push(format!("chains({n}) = {}", got.len()));
        }
        let a: Vec<_> = got.iter().map(canonical_form).collect();
        let b: Vec<_> = enumerate_chains_by_imp(n)
            .unwrap()
            .iter()
            .map(canonical_form)
            .collect();
        if a != b {
            e.push(format!("dual paths disagree at {n}"));
        }
        if !got.iter().all(|x| x.check().valid()) {
            e.push(format!("invalid chain at {n}"));
        }
    }
    let all = enumerate_all(4, false).unwrap();
    if !all.iter().all(|x| x.check().valid()) {
        e.push("invalid algebra in enumerate_all(4)".into());
    }
    for (i, a) in all.iter().enumerate() {
        for b in &all[i..] {
            let same_form = canonical_form(a) == canonical_form(b);
            if same_form != check_mtl_iso(a, b).is_some() {
                e.push(format!("{} vs {}", a.name(), b.name()));
            }
        }
    }
    let t = within(&mut e, start.elapsed(), Duration::from_secs(60));
    finish(
        e,
        format!(
            "counts 1,2,6; dual path agrees; {} algebras of size 4 dedup-consistent; {t}",
            all.len()
        ),
    )
}

fn criterion_8() -> Outcome {
    let mut e = Vec::new();
    let mut pool = standard_corpus();
    pool.extend(fixtures::NAMES.iter().map(|n| fixtures::load(n)));
    let mut count = 0;
    for a in &pool {
        for x in a.elements().filter(|&x| a.is_idempotent(x)) {
            count += 1;
            let iso = order_iso_right(a, x, Mode::Strict).unwrap();
            let back = iso.map.iter().all(|&(d, c)| a.mul(x, c) == d);
            if !iso.ok() || !back {
                e.push(format!(
                    "{} at {}: {:?}",
                    a.name(),
                    a.label(x),
                    iso.failures
                ));
            }
        }
    }
    let g6 = fixtures::load("g6");
    let iso = order_iso_right(&g6, g6.element("c").unwrap(), Mode::Strict).unwrap();
    let shown: Vec<String> = iso
        .map
        .iter()
        .map(|&(d, c)| format!("{}->{}", g6.label(d), g6.label(c)))
        .collect();
    if shown != ["0->0", "a->a", "b->d", "c->1"] {
        e.push(format!("g6 at c: {}", shown.join(" ")));
    }
    finish(
        e,
        format!("{count} idempotents, g inverse checked; g6 at c maps 0,a,b,c to 0,a,d,1"),
    )
}

fn criterion_9() -> Outcome {
    let mut e = Vec::new();
    let mut summary = Vec::new();
    for k in ["1", "2", "3"] {
        let mut outputs = Vec::new();
        for jobs in ["1", "8"] {
            let o = bin()
                .args([
                    "search",
                    "--problem",
                    k,
                    "--size",
                    "4",
                    "--format",
                    "machine",
                    "--jobs",
                    jobs,
                ])
                .output()
                .unwrap();
            outputs.push((o.status.code(), o.stdout));
        }
        let (code, out) = &outputs[0];
        if outputs[0] != outputs[1] {
            e.push(format!(
                "problem {k}: output differs between 1 and 8 workers"
            ));
        }
        let text = String::from_utf8_lossy(out);
        let findings = text.lines().filter(|l| l.starts_with("finding\t")).count();
        if text
            .lines()
            .any(|l| l.starts_with("finding\t") && !l.ends_with("[replayed]"))
        {
            e.push(format!("problem {k}: a finding did not replay"));
        }
        if *code != Some(i32::from(findings > 0)) {
            e.push(format!(
                "problem {k}: exit {code:?} with {findings} findings"
            ));
        }
        summary.push(format!("open{k}: {findings} findings"));
    }
    let d = TempDir::new().unwrap();
    let g6 = write_fixture(&d, "g6");
    let runs: Vec<_> = ["1", "8"]
        .iter()
        .map(|j| {
            bin()
                .args([
                    "verify",
                    g6.to_str().unwrap(),
                    "--format",
                    "machine",
                    "--jobs",
                    j,
                ])
                .output()
                .unwrap()
        })
        .collect();
    if runs[0].stdout != runs[1].stdout || runs[0].status.code() != Some(1) {
        e.push("verify g6 not byte-identical across worker counts or wrong exit".into());
    }
    finish(
        e,
        summary.join(", ") + "; reports byte-identical for 1 and 8 workers",
    )
}

#[test]
fn acceptance() {
    let criteria: [fn() -> Outcome; 9] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
    ];
    let mut unexpected = Vec::new();
    for (i, c) in criteria.iter().enumerate() {
        let n = i + 1;
        let outcome = c();
        match &outcome {
            Ok(msg) => println!("criterion {n}: PASS ({msg})"),
            Err(msg) => println!("criterion {n}: FAIL ({msg})"),
        }
        if outcome.is_ok() == KNOWN_FAILING.contains(&n) {
            unexpected.push(n);
        }
    }
    assert!(
        unexpected.is_empty(),
        "criteria with an unexpected outcome: {unexpected:?}"
    );
}
