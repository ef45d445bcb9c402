use std::io::Write;

use girthlab::cert::{
    cut_from_independent_set, exact_max_cut, exact_max_independent_set, fractional_upper_bound, monte_carlo_coverage,
    CoverageReport, Cut, FractionalBound,
};
use girthlab::graph::{
    boost_girth, generate_random_cubic, girth, load_edge_list, named_graph, save_edge_list, BoostOutcome, CubicGraph,
};
use girthlab::odd_girth::{check_odd_girth, find_two_factor, odd_girth_bound, theorem_coverage, Ratio, TwoFactor};
use girthlab::recurrence::{format_sig17, solve, trace_to_csv, trace_to_json, Params, Trace};
use girthlab::sim::{self, pooled_rounds, run_trials, RoundAggregate, SimParams};
use girthlab::stats::binomial_sigma;
use girthlab::{seeded_rng, Scalar, TwoFloat};
use serde::Serialize;

use crate::error::CliError;
use crate::{
    Command, CoverageArgs, Format, GenerateArgs, GirthArgs, GraphSource, MaxCutArgs, OddGirthArgs, Output, Precision,
    ProcedureArgs, SimulateArgs, SolveArgs, Workers,
};

type Result<T> = std::result::Result<T, CliError>;

pub fn run(command: Command) -> Result<()> {
    match command {
        Command::Solve(a) => emit(&a.out, solve_cmd(&a)?),
        Command::Generate(a) => emit(&a.out, generate_cmd(&a)?),
        Command::Girth(a) => emit(&a.out, girth_cmd(&a)?),
        Command::Simulate(a) => emit(&a.out, simulate_cmd(&a)?),
        Command::Coverage(a) => emit(&a.out, coverage_cmd(&a)?),
        Command::Oddgirth(a) => emit(&a.out, oddgirth_cmd(&a)?),
        Command::Maxcut(a) => emit(&a.out, maxcut_cmd(&a)?),
    }
}

fn emit(out: &Output, text: String) -> Result<()> {
    match &out.output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output serializes")
}

fn load_graph(src: &GraphSource) -> Result<CubicGraph> {
    match (&src.input, &src.named) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::precondition(format!("cannot read {}: {e}", path.display())))?;
            Ok(load_edge_list(&text)?)
        }
        (None, Some(name)) => Ok(named_graph(name)?),
        (None, None) => Err(CliError::precondition("either --input or --named is required")),
    }
}

/// Runs `f` on a dedicated pool when a worker count is given.
fn with_workers<T: Send>(workers: &Workers, f: impl FnOnce() -> T + Send) -> Result<T> {
    match workers.workers {
        None => Ok(f()),
        Some(0) => Err(CliError::precondition("workers must be positive")),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::new(crate::error::Kind::Internal, e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

fn sim_params(p: &ProcedureArgs) -> Result<SimParams> {
    let params = SimParams { p1: p.p1, p2: p.p2, rounds: p.rounds };
    params.validate()?;
    Ok(params)
}

fn solve_cmd(a: &SolveArgs) -> Result<String> {
    match a.precision {
        Precision::F32 => solve_as::<f32>(a),
        Precision::F64 => solve_as::<f64>(a),
        Precision::Dd => solve_as::<TwoFloat>(a),
    }
}

fn solve_as<S: Scalar>(a: &SolveArgs) -> Result<String> {
    let params = Params::<S>::new(S::lit(a.p1), S::lit(a.p2), S::lit(a.threshold), a.max_rounds)?;
    let trace = solve(&params)?;
    let last = *trace.last();
    let kept = Trace {
        rounds: trace
            .rounds
            .iter()
            .filter(|s| s.k == 1 || (s.k as u64).is_multiple_of(a.stride) || s.k == last.k)
            .copied()
            .collect(),
        termination: trace.termination,
    };
    let result = format!(
        "{{\"K\":{},\"r_K\":{},\"b_K\":{},\"w_K\":{},\"termination\":{}}}",
        last.k,
        format_sig17(last.r.to_f64_lossy()),
        format_sig17(last.b.to_f64_lossy()),
        format_sig17(last.w.to_f64_lossy()),
        json(&trace.termination),
    );
    Ok(match a.format {
        Format::Json => format!("{{\"config\":{},\n\"result\":{result},\n\"trace\":{}}}\n", json(a), trace_to_json(&kept)),
        Format::Csv => format!("# config {}\n# result {result}\n{}", json(a), trace_to_csv(&kept)),
    })
}

fn generate_cmd(a: &GenerateArgs) -> Result<String> {
    let g = generate_random_cubic(a.n, a.seed)?;
    let mut header = format!("# girthlab generate {}\n", json(a));
    let g = match a.target_girth {
        None => g,
        Some(target) => {
            // The swaps draw from their own stream, seeded with seed + 1.
            let out: BoostOutcome = boost_girth(&g, target, a.max_steps, a.seed.wrapping_add(1))?;
            header.push_str(&format!("# boost {}\n", json(&out)));
            if !out.reached {
                eprintln!(
                    "{}",
                    json(&serde_json::json!({
                        "warning": "target_girth_not_reached",
                        "target_girth": target,
                        "achieved_girth": out.achieved_girth,
                    }))
                );
            }
            out.graph
        }
    };
    Ok(header + &save_edge_list(&g))
}

#[derive(Serialize)]
struct GirthOut<'a> {
    config: &'a GirthArgs,
    girth: Option<usize>,
    odd_girth: Option<usize>,
    n: usize,
    m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    girth_witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    odd_witness: Option<Vec<usize>>,
}

fn girth_cmd(a: &GirthArgs) -> Result<String> {
    let g = load_graph(&a.graph)?;
    let mut rep = girth(&g);
    if !a.witness {
        rep = rep.without_witnesses();
    }
    let out = GirthOut {
        config: a,
        girth: rep.girth,
        odd_girth: rep.odd_girth,
        n: g.n(),
        m: g.m(),
        girth_witness: rep.girth_witness,
        odd_witness: rep.odd_witness,
    };
    Ok(json(&out) + "\n")
}

#[derive(Serialize)]
struct SimulateOut<'a> {
    config: &'a SimulateArgs,
    rounds: Vec<RoundAggregate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    red_set: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct AggregateRow {
    k: usize,
    frac_white: f64,
    frac_blue: f64,
    frac_red: f64,
    w0: f64,
    w1: f64,
    w2: f64,
    w3: f64,
    q1: f64,
    q2: f64,
    q3: f64,
}

impl From<&RoundAggregate> for AggregateRow {
    fn from(a: &RoundAggregate) -> Self {
        let [w0, w1, w2, w3] = a.wdeg_hist;
        let [q1, q2, q3] = a.qdeg_hist;
        Self { k: a.k, frac_white: a.frac_white, frac_blue: a.frac_blue, frac_red: a.frac_red, w0, w1, w2, w3, q1, q2, q3 }
    }
}

fn aggregates_csv(rows: &[RoundAggregate]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(AggregateRow::from(r)).map_err(|e| CliError::new(crate::error::Kind::Internal, e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::new(crate::error::Kind::Internal, e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn simulate_cmd(a: &SimulateArgs) -> Result<String> {
    let g = load_graph(&a.graph)?;
    let params = sim_params(&a.procedure)?;
    if a.red_set && a.trials > 1 {
        return Err(CliError::precondition("--red-set needs --trials 1"));
    }
    let keep_red = a.red_set;
    let runs = with_workers(&a.workers, || {
        run_trials(&g, &params, a.trials as usize, a.seed, |_, r| (r.rounds, keep_red.then(|| r.state.red_set())))
    })??;
    let len = runs.iter().map(|r| r.0.len()).max().unwrap_or(0);
    let red_set = runs.first().and_then(|r| r.1.clone());
    let counts: Vec<_> = runs.into_iter().map(|r| r.0).collect();
    let rounds: Vec<RoundAggregate> = pooled_rounds(&counts, len).iter().map(|c| c.aggregate()).collect();
    Ok(match a.format {
        Format::Json => json(&SimulateOut { config: a, rounds, red_set }) + "\n",
        Format::Csv => format!("# config {}\n{}", json(a), aggregates_csv(&rounds)?),
    })
}

#[derive(Serialize)]
struct CoverageJson<'a> {
    #[serde(flatten)]
    report: &'a CoverageReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    per_vertex: Option<Vec<f64>>,
}

impl<'a> CoverageJson<'a> {
    fn new(report: &'a CoverageReport, per_vertex: bool) -> Self {
        Self { report, per_vertex: per_vertex.then(|| report.per_vertex()) }
    }
}

#[derive(Serialize)]
struct CoverageOut<'a> {
    config: &'a CoverageArgs,
    coverage: CoverageJson<'a>,
    fractional_bound: Option<FractionalBound>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fractional_bound_error: Option<String>,
}

fn split_bound(report: &CoverageReport) -> (Option<FractionalBound>, Option<String>) {
    match fractional_upper_bound(report) {
        Ok(b) => (Some(b), None),
        Err(e) => (None, Some(e.to_string())),
    }
}

fn coverage_cmd(a: &CoverageArgs) -> Result<String> {
    let g = load_graph(&a.graph)?;
    let params = sim_params(&a.procedure)?;
    let report = with_workers(&a.workers, || monte_carlo_coverage(&g, &params, a.trials, a.seed))??;
    let (fractional_bound, fractional_bound_error) = split_bound(&report);
    let out =
        CoverageOut { config: a, coverage: CoverageJson::new(&report, a.per_vertex), fractional_bound, fractional_bound_error };
    Ok(json(&out) + "\n")
}

#[derive(Serialize)]
struct BoundJson {
    coverage: String,
    coverage_value: f64,
    fractional: String,
    fractional_value: f64,
}

#[derive(Serialize)]
struct OddGirthOut<'a> {
    config: &'a OddGirthArgs,
    two_factor: TwoFactor,
    bound: BoundJson,
    coverage: CoverageJson<'a>,
    /// Binomial standard deviation at the guaranteed coverage.
    sigma: f64,
    /// Whether the minimum coverage is at least the guarantee minus 4 sigma.
    meets_coverage_bound: bool,
    fractional_bound: Option<FractionalBound>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fractional_bound_error: Option<String>,
}

fn oddgirth_cmd(a: &OddGirthArgs) -> Result<String> {
    let g = load_graph(&a.graph)?;
    let bound = odd_girth_bound(a.g_odd)?;
    check_odd_girth(&g, a.g_odd)?;
    let tf = find_two_factor(&g)?;
    let report = with_workers(&a.workers, || theorem_coverage(&g, &tf, a.g_odd, a.trials, a.seed))??;
    let ratio = |r: Ratio<u64>| *r.numer() as f64 / *r.denom() as f64;
    let coverage_value = ratio(bound.coverage);
    let sigma = binomial_sigma(coverage_value, a.trials);
    let (fractional_bound, fractional_bound_error) = split_bound(&report);
    let out = OddGirthOut {
        config: a,
        two_factor: tf,
        bound: BoundJson {
            coverage: bound.coverage.to_string(),
            coverage_value,
            fractional: bound.fractional.to_string(),
            fractional_value: ratio(bound.fractional),
        },
        meets_coverage_bound: report.min >= coverage_value - 4.0 * sigma,
        coverage: CoverageJson::new(&report, a.per_vertex),
        sigma,
        fractional_bound,
        fractional_bound_error,
    };
    Ok(json(&out) + "\n")
}

#[derive(Serialize)]
struct Exact {
    alpha: usize,
    alpha_set: Vec<usize>,
    alpha_cut: usize,
    max_cut: Cut,
}

#[derive(Serialize)]
struct MaxCutOut<'a> {
    config: &'a MaxCutArgs,
    source: &'static str,
    n: usize,
    m: usize,
    set_size: usize,
    cut: Cut,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<Exact>,
}

fn maxcut_cmd(a: &MaxCutArgs) -> Result<String> {
    let g = load_graph(&a.graph)?;
    let (set, source) = match &a.set {
        Some(s) => (s.clone(), "given"),
        None => {
            let missing = |flag: &str| CliError::precondition(format!("--{flag} is required when --set is absent"));
            let seed = a.seed.ok_or_else(|| missing("seed"))?;
            let params = sim_params(&ProcedureArgs {
                p1: a.p1.ok_or_else(|| missing("p1"))?,
                p2: a.p2.ok_or_else(|| missing("p2"))?,
                rounds: a.rounds.ok_or_else(|| missing("rounds"))?,
            })?;
            (sim::run(&g, &params, &mut seeded_rng(seed))?.state.red_set(), "simulated")
        }
    };
    let cut = cut_from_independent_set(&g, &set)?;
    let exact = if a.exact {
        let (alpha, alpha_set) = exact_max_independent_set(&g)?;
        let alpha_cut = cut_from_independent_set(&g, &alpha_set)?.size;
        Some(Exact { alpha, alpha_set, alpha_cut, max_cut: exact_max_cut(&g)? })
    } else {
        None
    };
    let out = MaxCutOut { config: a, source, n: g.n(), m: g.m(), set_size: cut.side.len(), cut, exact };
    Ok(json(&out) + "\n")
}
