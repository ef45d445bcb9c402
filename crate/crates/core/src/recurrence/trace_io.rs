use std::fmt::Write;

use super::{RoundState, Trace};
use crate::scalar::Scalar;

/// Formats with 17 significant digits in scientific notation (valid JSON and CSV).
pub fn format_sig17(x: f64) -> String {
    format!("{x:.16e}")
}

fn join<S: Scalar>(values: &[S], sep: &str) -> String {
    values.iter().map(|v| format_sig17(v.to_f64_lossy())).collect::<Vec<_>>().join(sep)
}

fn json_record<S: Scalar>(s: &RoundState<S>) -> String {
    format!(
        "{{\"k\":{},\"w\":{},\"b\":{},\"r\":{},\"wdeg\":[{}],\"qdeg\":[{}]}}",
        s.k,
        format_sig17(s.w.to_f64_lossy()),
        format_sig17(s.b.to_f64_lossy()),
        format_sig17(s.r.to_f64_lossy()),
        join(&s.wdeg, ","),
        join(&s.qdeg, ","),
    )
}

/// JSON array with one `{k, w, b, r, wdeg[4], qdeg[3]}` record per round.
pub fn trace_to_json<S: Scalar>(trace: &Trace<S>) -> String {
    let mut out = String::from("[");
    for (i, s) in trace.rounds.iter().enumerate() {
        out.push_str(if i == 0 { "\n" } else { ",\n" });
        out.push_str(&json_record(s));
    }
    out.push_str("\n]");
    out
}

/// CSV with header `k,w,b,r,w0,w1,w2,w3,q1,q2,q3`.
pub fn trace_to_csv<S: Scalar>(trace: &Trace<S>) -> String {
    let mut out = String::from("k,w,b,r,w0,w1,w2,w3,q1,q2,q3\n");
    for s in &trace.rounds {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            s.k,
            format_sig17(s.w.to_f64_lossy()),
            format_sig17(s.b.to_f64_lossy()),
            format_sig17(s.r.to_f64_lossy()),
            join(&s.wdeg, ","),
            join(&s.qdeg, ","),
        );
    }
    out
}
