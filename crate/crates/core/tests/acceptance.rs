//! One pass/fail line per acceptance criterion.

use std::process::ExitCode;
use std::time::Duration;

use hsymb::verify::{run, Bounds, Report, Suite};

struct Criterion {
    number: usize,
    title: &'static str,
    suite: Suite,
    bounds: Bounds,
    time_limit: Duration,
}

fn criteria() -> Vec<Criterion> {
    let default = Bounds::default();
    let c = |number, title, suite, secs| Criterion { number, title, suite, bounds: default, time_limit: Duration::from_secs(secs) };
    vec![
        c(1, "golden examples, exact equality", Suite::Golden, 60),
        c(2, "coassociativity, weight <= 4 (Hbar depth <= 3, H depth <= 2)", Suite::Coassoc, 300),
        c(3, "INV commutes with the coproduct on inverted generators", Suite::Inv, 300),
        c(4, "variation-matrix laws for six weight vectors in both sorts", Suite::Varmatrix, 300),
        c(5, "form laws and chain maps", Suite::Forms, 300),
        c(6, "iterated integrals: variation matrices and the Φ morphism", Suite::Iterint, 300),
        c(7, "numeric flatness of ω∧ω at 20 seeded points", Suite::Flatness, 60),
        c(8, "structural properties", Suite::Structural, 300),
    ]
}

fn line(c: &Criterion, r: &Report) -> (bool, String) {
    let in_time = r.elapsed <= c.time_limit;
    let ok = r.passed() && r.cases > 0 && in_time;
    let mut text = format!(
        "criterion {} [{}] {}: {} ({} cases, {} failures, {:.2?})",
        c.number,
        c.suite,
        c.title,
        if ok { "PASS" } else { "FAIL" },
        r.cases,
        r.failures.len(),
        r.elapsed
    );
    if !in_time {
        text.push_str(&format!(" exceeded {:?}", c.time_limit));
    }
    for f in r.failures.iter().take(5) {
        text.push_str(&format!("\n    {}: {}", f.case, f.detail));
    }
    (ok, text)
}

fn main() -> ExitCode {
    let list = criteria();
    let reports: Vec<Report> = std::thread::scope(|s| {
        let handles: Vec<_> = list.iter().map(|c| s.spawn(move || run(c.suite, &c.bounds))).collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut passed = 0;
    for (c, r) in list.iter().zip(&reports) {
        let (ok, text) = line(c, r);
        println!("{}", text);
        passed += ok as usize;
    }
    println!("acceptance: {}/{} criteria passed", passed, list.len());
    if passed == list.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
