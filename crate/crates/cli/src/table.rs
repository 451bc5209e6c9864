//! Plain-text renderings for `--format table`.

use std::fmt::Write;

use superinv::arith::{format_rational, TrigradedSeries};
use superinv::molien::MolienReport;
use superinv::superalg::SuperPolynomial;
use superinv::verify::VerifyReport;

/// One block per t-degree; rows are q-degrees, columns u-degrees.
pub fn series(s: &TrigradedSeries) -> String {
    let caps = s.caps();
    let mut cells = Vec::new();
    for t in 0..=caps.t {
        for q in 0..=caps.q {
            for u in 0..=caps.u {
                cells.push(format_rational(&s.coeff(t, q, u)));
            }
        }
    }
    let width = cells.iter().map(String::len).max().unwrap_or(1).max(caps.u.to_string().len());
    let qw = caps.q.to_string().len().max(3);
    let mut out = String::new();
    let mut it = cells.into_iter();
    for t in 0..=caps.t {
        if caps.t > 0 {
            writeln!(out, "t^{t}").unwrap();
        }
        write!(out, "{:>qw$}", "q\\u").unwrap();
        for u in 0..=caps.u {
            write!(out, " {u:>width$}").unwrap();
        }
        out.push('\n');
        for q in 0..=caps.q {
            write!(out, "{q:>qw$}").unwrap();
            for _ in 0..=caps.u {
                write!(out, " {:>width$}", it.next().unwrap()).unwrap();
            }
            out.push('\n');
        }
    }
    out
}

pub fn molien_report(r: &MolienReport) -> String {
    let mut out = format!("agreements: {}\n", r.agreements);
    for m in &r.mismatches {
        writeln!(out, "mismatch i={} j={} molien={} oracle={}", m.i, m.j, format_rational(&m.molien), m.oracle).unwrap();
    }
    out
}

pub fn element(f: &SuperPolynomial) -> String {
    let mut out = String::new();
    for (m, c) in f.terms() {
        let mut factors: Vec<String> = m.x().iter().map(|&(r, col, e)| format!("x[{r},{col}]^{e}")).collect();
        factors.extend(m.theta().iter().map(|&(r, col)| format!("θ[{r},{col}]")));
        writeln!(out, "{:>6}  {}", format_rational(c), factors.join(" ")).unwrap();
    }
    out
}

pub fn verify_report(r: &VerifyReport) -> String {
    let mut out = String::new();
    for c in &r.checks {
        let verdict = if c.pass { "PASS" } else { "FAIL" };
        writeln!(out, "{verdict} {:<10} {:<22} {}", c.suite, c.topic, c.name).unwrap();
    }
    writeln!(out, "seed {}: {} passed, {} failed", r.seed, r.passed(), r.failed()).unwrap();
    out
}
