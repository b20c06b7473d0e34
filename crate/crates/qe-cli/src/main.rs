//! `qe` — quadratic embedding constants of finite graphs from the
//! command line.
//!
//! Exit codes: 0 on success, 1 for computation-domain failures (invalid
//! parameters, disconnected graphs, failed verification), 2 for usage
//! errors. JSON mode (`--json`) emits a single-line document per run;
//! text mode emits `key=value` records. Identical invocations produce
//! byte-identical stdout.

mod json;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qe_core::condmin::{cond_min, stationarity_residual, PhiInstance};
use qe_core::graph::{
    format_edge_list, named_graph, parse_edge_list, star_product, Graph, GraphKind, StarSpec,
};
use qe_core::minroot::{
    all_roots, bounds_basic, bounds_sharp, min_root, ExtCount, ParamPair, RootSolution,
};
use qe_core::qec::{path_qec_bounds, qec_exact, qec_path_pencil};
use qe_core::sequences::{
    a_closed, a_series, alt_power_sum, alt_power_sum_closed, b_ceil, comb_sum_brute_force,
    comb_sum_closed_form, convolution_check, det_min_matrix, det_min_matrix_corner, CombSum,
    ExactInt, ExactRational,
};
use qe_core::star_bounds::{harmonic_bound, lambda_upper, q12, FactorSummary};

use json::{fmt_f64, num_array, Json};

#[derive(Parser)]
#[command(
    name = "qe",
    version,
    about = "Quadratic embedding constants of finite graphs: exact values, star products, bounds, and exact identity suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact QE constant of a graph read from an edge-list file.
    Qec {
        /// Edge-list file: `n <count>` header, `u v` lines, `#` comments.
        file: PathBuf,
        /// Emit a single JSON document instead of key=value text.
        #[arg(long)]
        json: bool,
    },
    /// Build a star product of rooted factors and write its edge list.
    Star {
        /// Factor spec `NAME[@ROOT]`. NAME is one of k<N>, p<N>, c<N>,
        /// s<N> (complete, path, cycle, star on N vertices) or a path to
        /// an edge-list file; ROOT is a 0-based vertex, default 0.
        /// Repeat the flag once per factor.
        #[arg(long = "factor", required = true)]
        factors: Vec<String>,
        /// Write the product's edge list here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve sum_j d_j/(a_j d_j + a_j - x) = 1/x for its minimal root.
    Minroot {
        /// Positive coefficients, comma-separated.
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        a: Vec<f64>,
        /// Positive counts or `inf`, comma-separated.
        #[arg(long, value_delimiter = ',', required = true, value_parser = parse_ext_count)]
        d: Vec<ExtCount>,
        /// Relative bisection tolerance.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        /// Report every root, one per breakpoint gap.
        #[arg(long)]
        all_roots: bool,
        /// Also report the bound chain around the minimal root.
        #[arg(long)]
        bounds: bool,
        #[arg(long)]
        json: bool,
    },
    /// Conditional minimum of the block quadratic form, with the
    /// minimal-root cross-check.
    Condmin {
        /// Positive coefficients, comma-separated.
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        a: Vec<f64>,
        /// Finite block dimensions (>= 1), comma-separated.
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        d: Vec<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Star-product QEC bounds from factor constants and sizes.
    Bounds {
        /// Factor QE constants (all <= 0), comma-separated.
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        q: Vec<f64>,
        /// Non-root vertex counts (>= 1 or `inf`), comma-separated.
        #[arg(long, value_delimiter = ',', required = true, value_parser = parse_ext_count)]
        n: Vec<ExtCount>,
        #[arg(long)]
        json: bool,
    },
    /// Table of path-graph QE constants against the closed-form bounds.
    Paths {
        /// Largest path size to tabulate.
        #[arg(long, default_value_t = 20)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Opening terms of the integer sequence, the ceiling sequence, and
    /// their convolution and series cross-checks.
    Seq {
        /// Number of opening terms.
        #[arg(long, default_value_t = 16)]
        terms: u32,
        #[arg(long)]
        json: bool,
    },
    /// Run the exact identity suites; reports pass/fail per identity and
    /// exits 1 on any failure.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Seed for the randomized determinant spot checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    #[value(name = "lemma61")]
    Lemma61,
    #[value(name = "detA")]
    DetA,
    #[value(name = "series")]
    Series,
    #[value(name = "all")]
    All,
}

fn parse_ext_count(s: &str) -> Result<ExtCount, String> {
    s.parse::<ExtCount>()
        .map_err(|_| format!("`{s}` is not a positive number or `inf`"))
}

enum CliError {
    Usage(String),
    Domain(String),
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

struct Output {
    text: String,
    failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            failed: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(output) => {
            print!("{}", output.text);
            if output.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Qec { file, json } => cmd_qec(&file, json),
        Command::Star { factors, out } => cmd_star(&factors, out.as_deref()),
        Command::Minroot {
            a,
            d,
            tol,
            all_roots,
            bounds,
            json,
        } => cmd_minroot(a, d, tol, all_roots, bounds, json),
        Command::Condmin { a, d, json } => cmd_condmin(a, d, json),
        Command::Bounds { q, n, json } => cmd_bounds(q, n, json),
        Command::Paths { max_n, json } => cmd_paths(max_n, json),
        Command::Seq { terms, json } => cmd_seq(terms, json),
        Command::Verify { suite, seed, json } => cmd_verify(suite, seed, json),
    }
}

fn join_f64(values: &[f64]) -> String {
    values
        .iter()
        .map(|&v| fmt_f64(v))
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_qec(file: &std::path::Path, json: bool) -> Result<Output, CliError> {
    let text = fs::read_to_string(file)
        .map_err(|e| CliError::Domain(format!("{}: {e}", file.display())))?;
    let graph = parse_edge_list(&text).map_err(domain)?;
    let result = qec_exact(&graph).map_err(domain)?;
    let text = if json {
        Json::Obj(vec![
            ("value", Json::Num(result.value)),
            ("optimizer", num_array(&result.optimizer)),
            ("method", Json::Str(result.method.to_string())),
            ("residual", Json::Num(result.residual)),
        ])
        .to_document()
    } else {
        format!(
            "value={} method={} residual={} optimizer={}\n",
            fmt_f64(result.value),
            result.method,
            fmt_f64(result.residual),
            join_f64(&result.optimizer)
        )
    };
    Ok(Output::ok(text))
}

/// `NAME[@ROOT]` -> rooted factor graph plus a display label.
fn parse_factor(spec: &str) -> Result<(Graph, usize, String), CliError> {
    let (name, root) = match spec.rsplit_once('@') {
        Some((name, root_text)) => {
            let root = root_text.parse::<usize>().map_err(|_| {
                CliError::Usage(format!("bad root `{root_text}` in factor spec `{spec}`"))
            })?;
            (name, root)
        }
        None => (spec, 0),
    };
    if name.is_empty() {
        return Err(CliError::Usage(format!("empty factor name in `{spec}`")));
    }
    if let Some(graph) = named_shorthand(name) {
        return Ok((graph.map_err(domain)?, root, name.to_string()));
    }
    let text = fs::read_to_string(name)
        .map_err(|e| CliError::Domain(format!("factor file {name}: {e}")))?;
    let graph = parse_edge_list(&text).map_err(domain)?;
    Ok((graph, root, name.to_string()))
}

fn named_shorthand(name: &str) -> Option<Result<Graph, qe_core::graph::GraphError>> {
    let mut chars = name.chars();
    let kind = match chars.next()? {
        'k' => GraphKind::Complete,
        'p' => GraphKind::Path,
        'c' => GraphKind::Cycle,
        's' => GraphKind::Star,
        _ => return None,
    };
    let size: usize = chars.as_str().parse().ok()?;
    Some(named_graph(kind, size))
}

fn cmd_star(specs: &[String], out: Option<&std::path::Path>) -> Result<Output, CliError> {
    let mut factors = Vec::with_capacity(specs.len());
    let mut labels = Vec::with_capacity(specs.len());
    for spec in specs {
        let (graph, root, label) = parse_factor(spec)?;
        factors.push((graph, root));
        labels.push(label);
    }
    let spec = StarSpec::new(factors).map_err(domain)?;
    let (product, maps) = star_product(&spec);
    let mut text = format!("# star product of {} factors\n", maps.len());
    for (index, ((label, map), (_, root))) in
        labels.iter().zip(&maps).zip(spec.factors()).enumerate()
    {
        let vertices = map
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",");
        let _ = writeln!(
            text,
            "# factor {index}: {label} root {root} -> product vertices {vertices}"
        );
    }
    text.push_str(&format_edge_list(&product));
    if let Some(path) = out {
        fs::write(path, &text).map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))?;
        Ok(Output::ok(String::new()))
    } else {
        Ok(Output::ok(text))
    }
}

fn root_to_json(root: &RootSolution) -> Json {
    Json::Obj(vec![
        ("lambda", Json::Num(root.lambda)),
        (
            "bracket",
            Json::Arr(vec![Json::Num(root.bracket.0), Json::Num(root.bracket.1)]),
        ),
        ("residual", Json::Num(root.residual)),
        ("method", Json::Str(root.method.to_string())),
    ])
}

fn cmd_minroot(
    a: Vec<f64>,
    d: Vec<ExtCount>,
    tol: f64,
    want_all: bool,
    want_bounds: bool,
    json: bool,
) -> Result<Output, CliError> {
    let p = ParamPair::new(a, d).map_err(domain)?;
    let solution = min_root(&p, tol).map_err(domain)?;
    let basic = if want_bounds {
        Some(bounds_basic(&p).map_err(domain)?)
    } else {
        None
    };
    // The sharp chain needs a finite count; silently absent otherwise.
    let sharp = if want_bounds { bounds_sharp(&p).ok() } else { None };
    let roots = if want_all {
        Some(all_roots(&p, tol).map_err(domain)?)
    } else {
        None
    };

    let text = if json {
        let mut fields = vec![
            ("lambda", Json::Num(solution.lambda)),
            (
                "bracket",
                Json::Arr(vec![
                    Json::Num(solution.bracket.0),
                    Json::Num(solution.bracket.1),
                ]),
            ),
            ("residual", Json::Num(solution.residual)),
            ("method", Json::Str(solution.method.to_string())),
        ];
        if let Some((harmonic, min_a)) = basic {
            let mut bounds = vec![
                ("harmonic", Json::Num(harmonic)),
                ("min_a", Json::Num(min_a)),
            ];
            if let Some(sharp) = sharp {
                bounds.push(("est1_lower", Json::Num(sharp.lower_est1)));
                bounds.push(("est2_lower", Json::Num(sharp.lower_est2)));
                bounds.push(("est1_upper", Json::Num(sharp.upper_est1)));
            }
            fields.push(("bounds", Json::Obj(bounds)));
        }
        if let Some(roots) = &roots {
            fields.push(("all_roots", Json::Arr(roots.iter().map(root_to_json).collect())));
        }
        Json::Obj(fields).to_document()
    } else {
        let mut line = format!(
            "lambda={} lo={} hi={} residual={} method={}",
            fmt_f64(solution.lambda),
            fmt_f64(solution.bracket.0),
            fmt_f64(solution.bracket.1),
            fmt_f64(solution.residual),
            solution.method
        );
        if let Some((harmonic, min_a)) = basic {
            let _ = write!(line, " harmonic={} min_a={}", fmt_f64(harmonic), fmt_f64(min_a));
            if let Some(sharp) = sharp {
                let _ = write!(
                    line,
                    " est1_lower={} est2_lower={} est1_upper={}",
                    fmt_f64(sharp.lower_est1),
                    fmt_f64(sharp.lower_est2),
                    fmt_f64(sharp.upper_est1)
                );
            }
        }
        if let Some(roots) = &roots {
            let lambdas: Vec<f64> = roots.iter().map(|r| r.lambda).collect();
            let _ = write!(line, " roots={}", join_f64(&lambdas));
        }
        line.push('\n');
        line
    };
    Ok(Output::ok(text))
}

fn cmd_condmin(a: Vec<f64>, d: Vec<u32>, json: bool) -> Result<Output, CliError> {
    let inst = PhiInstance::new(a.clone(), d.clone()).map_err(domain)?;
    let point = cond_min(&inst);
    let residual =
        stationarity_residual(&inst, point.x0, &point.xs, point.lambda).map_err(domain)?;
    let pair = ParamPair::new(
        a,
        d.iter().map(|&dj| ExtCount::Finite(f64::from(dj))).collect(),
    )
    .map_err(domain)?;
    let cross = min_root(&pair, 1e-13).map_err(domain)?;
    let delta = (point.value() - cross.lambda).abs();

    let text = if json {
        Json::Obj(vec![
            ("value", Json::Num(point.value())),
            ("x0", Json::Num(point.x0)),
            (
                "argmin",
                Json::Arr(point.xs.iter().map(|x| num_array(x)).collect()),
            ),
            ("stationarity_residual", Json::Num(residual)),
            ("minroot_delta", Json::Num(delta)),
        ])
        .to_document()
    } else {
        let blocks = point
            .xs
            .iter()
            .map(|x| join_f64(x))
            .collect::<Vec<_>>()
            .join("|");
        format!(
            "value={} x0={} stationarity_residual={} minroot_delta={} argmin={}\n",
            fmt_f64(point.value()),
            fmt_f64(point.x0),
            fmt_f64(residual),
            fmt_f64(delta),
            blocks
        )
    };
    Ok(Output::ok(text))
}

fn cmd_bounds(q: Vec<f64>, n: Vec<ExtCount>, json: bool) -> Result<Output, CliError> {
    if q.len() != n.len() {
        return Err(CliError::Usage(format!(
            "--q has {} entries but --n has {}",
            q.len(),
            n.len()
        )));
    }
    let mut factors = Vec::with_capacity(q.len());
    for (index, (&qi, &ni)) in q.iter().zip(&n).enumerate() {
        factors.push(
            FactorSummary::new(qi, ni)
                .map_err(|e| CliError::Domain(format!("factor {index}: {e}")))?,
        );
    }

    // A zero factor constant forces the product constant to zero and makes
    // the upper-bound equation singular.
    if factors.iter().any(|f| f.q() == 0.0) {
        let text = if json {
            Json::Obj(vec![
                ("qec", Json::Num(0.0)),
                ("zero_rule", Json::Bool(true)),
            ])
            .to_document()
        } else {
            format!("qec={} rule=zero_factor\n", fmt_f64(0.0))
        };
        return Ok(Output::ok(text));
    }

    let lambda = lambda_upper(&factors).map_err(domain)?;
    let lower = factors.iter().map(FactorSummary::q).fold(f64::NEG_INFINITY, f64::max);
    let upper = -lambda;
    let pair_bound = if factors.len() == 2 {
        Some(q12(q[0], q[1], n[0], n[1]).map_err(domain)?)
    } else {
        None
    };
    let harmonic = if factors.len() >= 2 {
        Some(harmonic_bound(&factors).map_err(domain)?)
    } else {
        None
    };

    let text = if json {
        let mut fields = vec![
            ("lower", Json::Num(lower)),
            ("lambda", Json::Num(lambda)),
            ("upper", Json::Num(upper)),
        ];
        if let Some(v) = pair_bound {
            fields.push(("q12", Json::Num(v)));
        }
        if let Some(v) = harmonic {
            fields.push(("harmonic", Json::Num(v)));
        }
        Json::Obj(fields).to_document()
    } else {
        let mut line = format!(
            "lower={} lambda={} upper={}",
            fmt_f64(lower),
            fmt_f64(lambda),
            fmt_f64(upper)
        );
        if let Some(v) = pair_bound {
            let _ = write!(line, " q12={}", fmt_f64(v));
        }
        if let Some(v) = harmonic {
            let _ = write!(line, " harmonic={}", fmt_f64(v));
        }
        line.push('\n');
        line
    };
    Ok(Output::ok(text))
}

fn cmd_paths(max_n: usize, json: bool) -> Result<Output, CliError> {
    if max_n < 2 {
        return Err(CliError::Domain(format!(
            "--max-n must be at least 2, got {max_n}"
        )));
    }
    let mut rows = Vec::with_capacity(max_n - 1);
    for n in 2..=max_n {
        let value = qec_path_pencil(n).map_err(domain)?.value;
        let (lower, upper) = path_qec_bounds(n).map_err(domain)?;
        rows.push((n, value, lower, upper));
    }
    let text = if json {
        Json::Obj(vec![(
            "rows",
            Json::Arr(
                rows.iter()
                    .map(|&(n, value, lower, upper)| {
                        Json::Obj(vec![
                            ("n", Json::Count(n as u64)),
                            ("qec", Json::Num(value)),
                            ("lower", Json::Num(lower)),
                            ("upper", Json::Num(upper)),
                        ])
                    })
                    .collect(),
            ),
        )])
        .to_document()
    } else {
        let mut out = String::new();
        for (n, value, lower, upper) in rows {
            let _ = writeln!(
                out,
                "n={n} qec={} lower={} upper={}",
                fmt_f64(value),
                fmt_f64(lower),
                fmt_f64(upper)
            );
        }
        out
    };
    Ok(Output::ok(text))
}

fn cmd_seq(terms: u32, json: bool) -> Result<Output, CliError> {
    if terms == 0 {
        return Err(CliError::Domain("--terms must be at least 1".into()));
    }
    let series = a_series(terms as usize - 1);
    let mut rows = Vec::with_capacity(terms as usize);
    for n in 0..terms {
        let a = a_closed(n);
        let b = b_ceil(n);
        let conv_ok = convolution_check(n) == a;
        let series_ok = series[n as usize] == a;
        rows.push((n, a, b, conv_ok, series_ok));
    }
    let text = if json {
        Json::Obj(vec![(
            "terms",
            Json::Arr(
                rows.iter()
                    .map(|(n, a, b, conv_ok, series_ok)| {
                        Json::Obj(vec![
                            ("n", Json::Count(u64::from(*n))),
                            ("a", Json::BigInt(a.to_string())),
                            ("b", Json::BigInt(b.to_string())),
                            ("conv_ok", Json::Bool(*conv_ok)),
                            ("series_ok", Json::Bool(*series_ok)),
                        ])
                    })
                    .collect(),
            ),
        )])
        .to_document()
    } else {
        let mut out = String::new();
        for (n, a, b, conv_ok, series_ok) in rows {
            let _ = writeln!(out, "n={n} a={a} b={b} conv_ok={conv_ok} series_ok={series_ok}");
        }
        out
    };
    Ok(Output::ok(text))
}

struct Check {
    name: String,
    passed: bool,
    detail: String,
}

fn check_exact_sweep<L, R>(name: &str, max_n: u32, lhs: L, rhs: R) -> Check
where
    L: Fn(u32) -> ExactRational,
    R: Fn(u32) -> ExactRational,
{
    for n in 0..=max_n {
        let left = lhs(n);
        let right = rhs(n);
        if left != right {
            return Check {
                name: name.to_string(),
                passed: false,
                detail: format!("first counterexample at n={n}: lhs={left}, rhs={right}"),
            };
        }
    }
    Check {
        name: name.to_string(),
        passed: true,
        detail: format!("n <= {max_n}"),
    }
}

fn lemma61_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for (kind, name) in [
        (CombSum::MinWeightedAlternating, "lemma61/min_weighted_alternating"),
        (CombSum::ProductAlternating, "lemma61/product_alternating"),
        (CombSum::SquaredProducts, "lemma61/squared_products"),
    ] {
        checks.push(check_exact_sweep(
            name,
            300,
            move |n| ExactRational::from_integer(comb_sum_brute_force(kind, n)),
            move |n| comb_sum_closed_form(kind, n),
        ));
    }
    for power in 1..=3u32 {
        checks.push(check_exact_sweep(
            &format!("lemma61/alternating_power_sum_{power}"),
            300,
            move |n| ExactRational::from_integer(alt_power_sum(power, n)),
            move |n| alt_power_sum_closed(power, n),
        ));
    }
    checks
}

fn deta_checks(seed: u64) -> Vec<Check> {
    let mut checks = Vec::new();

    let mut failure = None;
    for n in 1..=60usize {
        let det = det_min_matrix(n);
        if det != ExactInt::from(n as i64 + 1) {
            failure = Some(format!("first counterexample at n={n}: det={det}"));
            break;
        }
    }
    checks.push(Check {
        name: "detA/det_equals_size_plus_one".into(),
        passed: failure.is_none(),
        detail: failure.unwrap_or_else(|| "n <= 60".into()),
    });

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failure = None;
    for _ in 0..50 {
        let n = rng.gen_range(1..=30usize);
        let u = rng.gen_range(-1_000_000..=1_000_000i64);
        let got = det_min_matrix_corner(n, &ExactInt::from(u));
        let expected = ExactInt::from(n as i64) * ExactInt::from(u)
            - ExactInt::from((n as i64 - 1) * (4 * n as i64 + 1));
        if got != expected {
            failure = Some(format!(
                "first counterexample at n={n}, u={u}: det={got}, formula={expected}"
            ));
            break;
        }
    }
    checks.push(Check {
        name: "detA/corner_formula".into(),
        passed: failure.is_none(),
        detail: failure.unwrap_or_else(|| format!("50 random pairs, seed {seed}")),
    });

    let mut failure = None;
    for n in 1..=60usize {
        let corner = ExactInt::from(4 * n as i64 - 2);
        if det_min_matrix_corner(n, &corner) != det_min_matrix(n) {
            failure = Some(format!("first counterexample at n={n}"));
            break;
        }
    }
    checks.push(Check {
        name: "detA/corner_consistency".into(),
        passed: failure.is_none(),
        detail: failure.unwrap_or_else(|| "n <= 60".into()),
    });

    checks
}

fn series_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    let coeffs = a_series(64);

    let mut failure = None;
    for n in 0..=64u32 {
        if coeffs[n as usize] != a_closed(n) {
            failure = Some(format!(
                "first counterexample at n={n}: series={}, closed={}",
                coeffs[n as usize],
                a_closed(n)
            ));
            break;
        }
    }
    checks.push(Check {
        name: "series/series_equals_closed_form".into(),
        passed: failure.is_none(),
        detail: failure.unwrap_or_else(|| "n <= 64".into()),
    });

    let mut failure = None;
    for n in 0..=64u32 {
        if convolution_check(n) != a_closed(n) {
            failure = Some(format!("first counterexample at n={n}"));
            break;
        }
    }
    checks.push(Check {
        name: "series/convolution_equals_sequence".into(),
        passed: failure.is_none(),
        detail: failure.unwrap_or_else(|| "n <= 64".into()),
    });

    let listing: [i64; 16] = [
        0, 0, 1, 4, 14, 36, 83, 168, 316, 552, 917, 1452, 2218, 3276, 4711, 6608,
    ];
    let mut failure = None;
    for (n, &want) in listing.iter().enumerate() {
        if a_closed(n as u32) != ExactInt::from(want) {
            failure = Some(format!("first counterexample at n={n}"));
            break;
        }
    }
    checks.push(Check {
        name: "series/opening_terms".into(),
        passed: failure.is_none(),
        detail: failure.unwrap_or_else(|| "16 reference terms".into()),
    });

    checks
}

fn cmd_verify(suite: Suite, seed: u64, json: bool) -> Result<Output, CliError> {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Lemma61 | Suite::All) {
        checks.extend(lemma61_checks());
    }
    if matches!(suite, Suite::DetA | Suite::All) {
        checks.extend(deta_checks(seed));
    }
    if matches!(suite, Suite::Series | Suite::All) {
        checks.extend(series_checks());
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    let failed = checks.len() - passed;

    let suite_name = match suite {
        Suite::Lemma61 => "lemma61",
        Suite::DetA => "detA",
        Suite::Series => "series",
        Suite::All => "all",
    };
    let text = if json {
        Json::Obj(vec![
            ("suite", Json::Str(suite_name.into())),
            (
                "checks",
                Json::Arr(
                    checks
                        .iter()
                        .map(|c| {
                            Json::Obj(vec![
                                ("name", Json::Str(c.name.clone())),
                                ("passed", Json::Bool(c.passed)),
                                ("detail", Json::Str(c.detail.clone())),
                            ])
                        })
                        .collect(),
                ),
            ),
            ("passed", Json::Count(passed as u64)),
            ("failed", Json::Count(failed as u64)),
        ])
        .to_document()
    } else {
        let mut out = String::new();
        for check in &checks {
            let verdict = if check.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{} {verdict} ({})", check.name, check.detail);
        }
        let _ = writeln!(out, "summary: {passed} passed, {failed} failed");
        out
    };
    Ok(Output {
        text,
        failed: failed > 0,
    })
}
