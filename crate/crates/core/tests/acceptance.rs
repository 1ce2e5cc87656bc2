//! Acceptance run: one pass/fail line per criterion.
//!
//! Two criteria cannot pass as stated and print FAIL: the binary not-tight
//! forms up to 3x3 are weakly hereditary (the counterexample needs 3x4), and
//! four registry claims are refuted by explicit witnesses. The process still
//! exits 0 as long as every other criterion passes and the only registry
//! mismatches are the entries marked disputed.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use convexfam::cli::{verify, Format, GlobalArgs, Status};
use convexfam::registry::{audit_entry, find_family, list_families, AuditBounds, AuditReport, Check, Universe};

struct Outcome {
    ok: bool,
    detail: String,
}

fn args() -> GlobalArgs {
    GlobalArgs { format: Format::Text, jobs: None, seed: 0, budget: None, slow: true, timings: false }
}

/// Runs `verify` bundles; the detail lists failing lines, or the last line of each bundle.
fn bundles(names: &[&str]) -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for name in names {
        let r = verify(name, &args()).expect("known bundle");
        ok &= r.status == Status::Pass;
        let bad: Vec<String> = r
            .lines
            .iter()
            .filter(|l| l.status != Status::Pass)
            .map(|l| format!("{} [{}]: {}", l.name, l.status.word(), l.detail))
            .collect();
        if bad.is_empty() {
            let last = r.lines.last().expect("non-empty bundle");
            notes.push(format!("{name}: {}", if last.detail.is_empty() { &last.name } else { &last.detail }));
        } else {
            notes.push(format!("{name}: {}", bad.join("; ")));
        }
    }
    Outcome { ok, detail: notes.join(" | ") }
}

fn not_tight_binary(rows: usize, cols: usize) -> AuditReport {
    let mut entry = find_family("not-tight").unwrap();
    entry.checks = vec![Check::classify(Universe::Forms { rows, cols, outcomes: 2 })];
    audit_entry(&entry, &AuditBounds::default()).unwrap()
}

fn yn(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "?",
    }
}

fn criterion_11() -> Outcome {
    let small = not_tight_binary(3, 3);
    let wide = not_tight_binary(3, 4);
    let square = not_tight_binary(4, 4);
    let [_, sc, wh, _] = small.verdicts;
    let stated = sc == Some(true) && wh == Some(false);
    let extended = [&wide, &square].iter().all(|r| r.verdicts[1] == Some(true) && r.verdicts[2] == Some(false));
    Outcome {
        ok: stated,
        detail: format!(
            "up to 3x3: strongly convex {}, weakly hereditary {} (no counterexample fits); 3x4: SC {}, WH {}; 4x4: SC {}, WH {}; theorem confirmed on the larger forms: {}",
            yn(sc),
            yn(wh),
            yn(wide.verdicts[1]),
            yn(wide.verdicts[2]),
            yn(square.verdicts[1]),
            yn(square.verdicts[2]),
            if extended { "yes" } else { "no" }
        ),
    }
}

fn main() {
    let mut results: Vec<(usize, &str, Duration, Duration, Outcome)> = Vec::new();
    let mut run = |n: usize, what: &'static str, limit_s: u64, f: &dyn Fn() -> Outcome| {
        let t = Instant::now();
        let o = f();
        results.push((n, what, t.elapsed(), Duration::from_secs(limit_s), o));
    };

    let t = Instant::now();
    let audits: Vec<(convexfam::registry::FamilyEntry, AuditReport)> = list_families()
        .into_iter()
        .map(|e| {
            let r = audit_entry(&e, &AuditBounds::default()).unwrap();
            (e, r)
        })
        .collect();
    let audit_time = t.elapsed();
    let not_tight_minima = audits.iter().find(|(e, _)| e.name == "not-tight").unwrap().1.minima_classes();

    run(1, "circulant kernels of G43 minus one arc", 1, &|| bundles(&["circulant43"]));
    run(2, "G16(1,7,8) kernel-less, every vertex deletion has a kernel", 60, &|| bundles(&["g16"]));
    run(3, "G_n(1,7,8), n = 3..21: kernel iff 3 | n", 300, &|| bundles(&["circulants"]));
    run(4, "Wrochna graph: ternary graphs not convex under edge deletion", 60, &|| bundles(&["wrochna"]));
    run(5, "cube: every edge deletion creates an induced 6-cycle", 1, &|| bundles(&["cube"]));
    run(6, "4x4 SP-free matrix and its reduction chains", 1, &|| bundles(&["sp-4x4"]));
    run(7, "Shapley on random matrices, SP-free convexity up to 4x4", 600, &|| bundles(&["shapley", "sp-free-scan"]));
    run(8, "3x3 NE-free instance and the structural local-minimality test", 300, &|| bundles(&["ne-free-3x3", "theorem3"]));
    run(9, "no 3x3 locally minimal NE-free zero-sum game", 600, &|| bundles(&["zero-sum-scan"]));
    run(10, "tightness of g1..g9, not-tight minima, 4x4 a/b form", 1, &|| {
        let mut o = bundles(&["nine-forms", "not-tight-catalog", "ab-form-4x4"]);
        let want: BTreeSet<String> = ["diag2", "diag3", "diag4"].map(String::from).into();
        o.ok &= not_tight_minima == want;
        o.detail += &format!(" | minima of the not-tight family: {}", not_tight_minima.iter().cloned().collect::<Vec<_>>().join(", "));
        o
    });
    run(11, "binary not-tight forms up to 3x3: strongly convex, not weakly hereditary", 600, &criterion_11);
    run(12, "d-graphs: minima of CC and not-CIS, substitutions, L(K3,3)", 1800, &|| {
        bundles(&["dgraph-theorems", "pi-sub-pi", "bull-sub-pi", "bull-sub-delta", "line-k33"])
    });
    run(13, "kernel properties on random digraphs and directed cycles", 600, &|| bundles(&["kernel-properties"]));
    run(14, "perfect-graph suite up to 7 vertices", 3600, &|| bundles(&["perfect-suite"]));

    let mismatched: Vec<&(convexfam::registry::FamilyEntry, AuditReport)> =
        audits.iter().filter(|(_, r)| !r.mismatches.is_empty() || r.partial || r.undecided).collect();
    let listed: Vec<String> = mismatched
        .iter()
        .map(|(e, r)| {
            let props: Vec<String> = r.mismatches.iter().map(|m| format!("{} expected {} found {}", m.property, m.expected, m.found)).collect();
            format!("{} ({})", e.name, props.join(", "))
        })
        .collect();
    let unexplained: Vec<&str> = mismatched.iter().filter(|(e, _)| e.note.is_none()).map(|(e, _)| e.name).collect();
    results.push((
        15,
        "registry audit: every expectation matches the engine",
        audit_time,
        Duration::from_secs(3600),
        Outcome {
            ok: mismatched.is_empty(),
            detail: format!("{} entries, {} mismatched: {}", audits.len(), mismatched.len(), if listed.is_empty() { "none".into() } else { listed.join("; ") }),
        },
    ));

    let mut unexpected = Vec::new();
    for (n, what, took, limit, o) in &results {
        let in_time = took <= limit;
        let ok = o.ok && in_time;
        let time_note = if in_time { String::new() } else { format!(" over the {} s limit", limit.as_secs()) };
        println!(
            "criterion {n:>2}: {} {what} ({:.2} s{time_note}) {}",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            o.detail
        );
        let known = (*n == 11 && in_time) || (*n == 15 && unexplained.is_empty());
        if !ok && !known {
            unexpected.push(*n);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
