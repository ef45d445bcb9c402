mod common;

use common::appendix;
use girthlab::recurrence::{iterate, solve, Params, Termination};
use girthlab::{ParamsDd, Scalar};
use serde::Deserialize;

const FIXTURE: &str = include_str!("fixtures/appendix_p1e-5.json");

#[derive(Deserialize)]
struct Fixture {
    p1: f64,
    p2: f64,
    white_threshold: f64,
    final_round: usize,
    rounds: Vec<FixtureRound>,
}

#[derive(Deserialize)]
struct FixtureRound {
    k: usize,
    w: f64,
    b: f64,
    r: f64,
    wdeg: [f64; 4],
    qdeg: [f64; 3],
}

fn rel_err(got: f64, want: f64) -> f64 {
    if got == want {
        0.0
    } else {
        (got - want).abs() / got.abs().max(want.abs())
    }
}

#[test]
fn oracle_port_reproduces_frozen_reference_values() {
    let fx: Fixture = serde_json::from_str(FIXTURE).unwrap();
    let rounds = appendix::run(fx.p1, fx.p2, fx.white_threshold, usize::MAX);
    assert_eq!(rounds.len(), fx.final_round);
    for want in &fx.rounds {
        let got = &rounds[want.k - 1];
        assert_eq!(got.k, want.k);
        assert!(rel_err(got.p_r, want.r) <= 1e-12, "k={} r", want.k);
        assert!(rel_err(got.p_w, want.w) <= 1e-12, "k={} w", want.k);
    }
}

#[test]
fn solver_matches_frozen_reference_values() {
    let fx: Fixture = serde_json::from_str(FIXTURE).unwrap();
    let params = Params::new(fx.p1, fx.p2, fx.white_threshold, 10_000_000).unwrap();
    let trace = solve(&params).unwrap();
    assert_eq!(trace.len(), fx.final_round);
    let mut worst = 0.0f64;
    for want in &fx.rounds {
        let got = trace.round(want.k).unwrap();
        let pairs = [(got.w, want.w), (got.b, want.b), (got.r, want.r)]
            .into_iter()
            .chain(got.wdeg.into_iter().zip(want.wdeg))
            .chain(got.qdeg.into_iter().zip(want.qdeg));
        for (g, w) in pairs {
            worst = worst.max(rel_err(g, w));
        }
    }
    assert!(worst <= 1e-9, "worst relative error {worst:e}");
}

#[test]
fn solver_matches_oracle_port_at_every_round() {
    for (p1, p2, thr) in [(1e-3, 1e-3, 1e-6), (1e-2, 1e-3, 1e-5), (0.05, 0.2, 1e-3)] {
        let oracle = appendix::run(p1, p2, thr, usize::MAX);
        let trace = solve(&Params::new(p1, p2, thr, 10_000_000).unwrap()).unwrap();
        assert_eq!(trace.len(), oracle.len(), "K for p1={p1} p2={p2}");
        for (got, want) in trace.rounds.iter().zip(&oracle) {
            let pairs = [(got.w, want.p_w), (got.b, want.p_b), (got.r, want.p_r)]
                .into_iter()
                .chain(got.wdeg.into_iter().zip(want.w))
                .chain(got.qdeg.into_iter().zip(want.q[1..].iter().copied()));
            for (g, w) in pairs {
                assert!(rel_err(g, w) <= 1e-9, "k={} {g:e} vs {w:e}", got.k);
            }
        }
    }
}

#[test]
fn double_double_confirms_reported_digits() {
    let params = ParamsDd::new(
        Scalar::lit(1e-3),
        Scalar::lit(1e-3),
        Scalar::lit(1e-6),
        10_000_000,
    )
    .unwrap();
    let dd = solve(&params).unwrap();
    let plain = solve(&params.cast::<f64>()).unwrap();
    assert_eq!(dd.termination, Termination::BelowThreshold);
    let (a, b) = (dd.last(), plain.last());
    assert!(rel_err(a.r.to_f64_lossy(), b.r) < 1e-10);
    assert!(rel_err(a.b.to_f64_lossy(), b.b) < 1e-10);
}

#[test]
fn single_precision_tracks_double() {
    let p = Params::new(0.02f32, 0.02, 1e-3, 100_000).unwrap();
    let t32 = iterate(&p).unwrap();
    let t64 = iterate(&p.cast::<f64>()).unwrap();
    let k = t32.len().min(t64.len()).min(20);
    for i in 0..k {
        assert!((f64::from(t32.rounds[i].r) - t64.rounds[i].r).abs() < 1e-5);
    }
}
