use involab_core::oracle::Limits;
use involab_core::verify::{verify, targets};
use std::time::Instant;

fn main() {
    let n_max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(9);
    let limits = Limits::verification();
    for t in targets() {
        let start = Instant::now();
        match verify(t, n_max, &limits) {
            Ok(report) => {
                let bad: Vec<_> = report.mismatches().take(3).collect();
                println!(
                    "{:15} {:5} rows={:4} [{:.2?}] {}",
                    t,
                    if report.verdict() { "PASS" } else { "FAIL" },
                    report.rows.len(),
                    start.elapsed(),
                    bad.iter().map(|r| format!("{}: exp {} got {}", r.label, r.expected, r.observed)).collect::<Vec<_>>().join(" | ")
                );
            }
            Err(e) => println!("{t:15} ERROR {e}"),
        }
    }
}
