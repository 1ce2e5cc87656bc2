//! Audits every registry entry on its declared universe and prints one line
//! per entry. Pass entry names to audit only those.

use std::time::Instant;

use convexfam::registry::{audit_entry, list_families, AuditBounds};

fn show(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

fn main() {
    let only: Vec<String> = std::env::args().skip(1).collect();
    let mut failed = 0;
    for entry in list_families() {
        if !only.is_empty() && !only.iter().any(|n| n == entry.name) {
            continue;
        }
        let t = Instant::now();
        let report = audit_entry(&entry, &AuditBounds::default()).expect("audit runs");
        let v = report.verdicts;
        println!(
            "{:<32} {:<5} convex {:<3} strongly {:<3} weakly-her {:<3} hereditary {:<3} {:>7.2}s {}",
            entry.name,
            if report.passed() { "ok" } else { "FAIL" },
            show(v[0]),
            show(v[1]),
            show(v[2]),
            show(v[3]),
            t.elapsed().as_secs_f64(),
            report.minima_classes().into_iter().collect::<Vec<_>>().join(", ")
        );
        for m in &report.mismatches {
            println!("    {}: expected {}, found {}; {}", m.property, m.expected, m.found, m.witness.as_deref().unwrap_or(""));
        }
        failed += !report.passed() as usize;
    }
    std::process::exit(if failed == 0 { 0 } else { 1 });
}
