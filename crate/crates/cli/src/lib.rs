//! Command-line driver for the `berge-core` engine: chain replay,
//! constructions, brute-force verification and ad-hoc resultants.

pub mod args;
pub mod parallel;
pub mod report;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::time::Instant;

use berge_core::arith::RationalField;
use berge_core::construction::{build_graph, Adjacency, ConstructionError, GraphGq};
use berge_core::elimchain::{builtin_script, parse_script, ChainReport, Clock, RunOptions, BUILTIN_NAMES};
use berge_core::poly::{format_poly, parse_poly, VarTable};
use berge_core::resultant::{resultant, Method};
use berge_core::verifier::{find_1212_cycles, octagon_identity_check, PathClass};
use clap::Parser;
use serde::Serialize;

use args::{Cli, Command, Format, MethodArg, ReplayArgs, ResultantArgs, VerifyCommand};
use report::*;

/// Exit status for passing verdicts.
pub const EXIT_PASS: i32 = 0;
/// Exit status for failing verdicts.
pub const EXIT_FAIL: i32 = 1;
/// Exit status for usage and input errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

/// A finished report: both renderings and the verdict.
pub struct Outcome {
    pub pass: bool,
    pub text: String,
    pub json: serde_json::Value,
}

impl Outcome {
    fn new<T: Serialize>(pass: bool, text: String, doc: &T) -> Outcome {
        Outcome { pass, text, json: serde_json::to_value(doc).expect("report serializes") }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("report serializes");
                s.push('\n');
                s
            }
        }
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Wall-clock time since the clock was made.
pub struct StdClock(Instant);

impl StdClock {
    pub fn new() -> StdClock {
        StdClock(Instant::now())
    }
}

impl Default for StdClock {
    fn default() -> Self {
        StdClock::new()
    }
}

impl Clock for StdClock {
    fn now_micros(&self) -> u64 {
        self.0.elapsed().as_micros() as u64
    }
}

fn chain_text(r: &ChainReport, timings: bool) -> String {
    let mut s = String::new();
    for st in &r.steps {
        let _ = write!(s, "{:>3} {} {:<24} {:<8}", st.index, st.status.as_str(), st.kind, st.name);
        let _ = write!(s, " terms={}", st.terms);
        if let Some(l) = &st.scalar {
            let _ = write!(s, " scalar={l}");
        }
        if let Some(sp) = &st.spot {
            let _ = write!(s, " spot={}/{}", sp.trials - sp.mismatches, sp.trials);
        }
        for (f, k) in &st.stripped {
            let _ = write!(s, " strip({f})^{k}");
        }
        if timings {
            let _ = write!(s, " {:.3}s", st.micros as f64 / 1e6);
        }
        if let (Some(d), berge_core::elimchain::Status::Fail) = (&st.detail, st.status) {
            let _ = write!(s, "\n      line {}: {d}", st.line);
        }
        s.push('\n');
    }
    let _ = writeln!(s, "{}: {}", r.script, r.verdict.as_str());
    s
}

fn replay(a: &ReplayArgs, seed: u64) -> Result<Outcome, CliError> {
    let method = match a.method {
        MethodArg::Auto => Method::Auto,
        MethodArg::Sylvester => Method::Sylvester,
        MethodArg::Modular => Method::Modular,
    };
    let opts = RunOptions { seed, spot_trials: a.spot_trials, method, ..RunOptions::default() };
    let scripts = if a.all {
        BUILTIN_NAMES.iter().map(|n| builtin_script(n).expect("built-in").expect("built-in parses")).collect()
    } else if let Some(path) = &a.file {
        let text = std::fs::read_to_string(path)?;
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        vec![parse_script(&name, &text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?]
    } else {
        let name = a.name.as_deref().unwrap_or_default();
        match builtin_script(name) {
            Some(s) => vec![s.expect("built-in parses")],
            None => {
                return Err(CliError::Usage(format!(
                    "unknown script `{name}`; built-in scripts are {}",
                    BUILTIN_NAMES.join(", ")
                )))
            }
        }
    };
    let reports = parallel::run_scripts(&scripts, &opts);
    let pass = reports.iter().all(ChainReport::passed);
    let text: String = reports.iter().map(|r| chain_text(r, a.timings)).collect::<Vec<_>>().join("\n");
    let docs: Vec<ChainJson> = reports.iter().map(|r| ChainJson::new(r, a.timings)).collect();
    Ok(if a.all { Outcome::new(pass, text, &docs) } else { Outcome::new(pass, text, &docs[0]) })
}

fn construct(p: u64, force: bool) -> Result<Outcome, CliError> {
    let h = parallel::hypergraph(p, force)?;
    let g = &h.graph;
    let doc = ConstructJson {
        schema_version: SCHEMA_VERSION,
        command: "construct",
        p,
        chosen_half: h.sets.chosen_half.as_str(),
        sizes: Sizes { S1: h.sets.s1.len(), S2: h.sets.s2.len(), V: h.vertex_count(), E: g.edge_count() },
        edge_lower_bound: h.edge_lower_bound(),
        verdict: "PASS",
        edges: g.edges().iter().map(|e| e.params).collect(),
    };
    let text = format!(
        "p = {p}\nchosen half: {}\n|S1| = {}\n|S2| = {}\n|V| = {}\n|E| = {} (lower bound {})\nverdict: PASS\n",
        doc.chosen_half, doc.sizes.S1, doc.sizes.S2, doc.sizes.V, doc.sizes.E, doc.edge_lower_bound
    );
    Ok(Outcome::new(true, text, &doc))
}

fn construct_graph(q: u64, adjacency: bool) -> Result<Outcome, CliError> {
    let g = build_graph(q)?;
    let n = g.vertex_count();
    let mut edges = Vec::new();
    let mut count = 0u64;
    for u in 0..n {
        for v in g.neighbors(u) {
            if u < v {
                count += 1;
                if adjacency {
                    edges.push([u, v]);
                }
            }
        }
    }
    let pass = count == g.edge_count() && count >= q.pow(5) / 2 - q.pow(4);
    let doc = GraphJson {
        schema_version: SCHEMA_VERSION,
        command: "construct-graph",
        q,
        n,
        edge_count: count,
        verdict: verdict(pass),
        adjacency: adjacency.then_some(edges),
    };
    let text = format!("q = {q}\nn = {n}\nedges = {count}\nverdict: {}\n", verdict(pass));
    Ok(Outcome::new(pass, text, &doc))
}

fn verify_paths(p: u64, force: bool) -> Result<Outcome, CliError> {
    let h = parallel::hypergraph(p, force)?;
    let c = parallel::census(&h.graph);
    let pass = c.within_bounds();
    let sig = |s: [u8; 4]| s.iter().map(|d| char::from(b'0' + d)).collect::<String>();
    let doc = PathsJson {
        schema_version: SCHEMA_VERSION,
        command: "verify paths",
        p,
        paths: c.paths,
        pairs: c.pairs,
        max_same_part: (&c.max_same_part).into(),
        max_cross_part: (&c.max_cross_part).into(),
        per_type_max: c.per_signature_max.iter().map(|(s, e)| (sig(*s), e.into())).collect(),
        per_class_max: PathClass::ALL.iter().map(|&k| (k.representative().to_string(), c.class_max(k))).collect(),
        bound_check: verdict(pass),
    };
    let mut text = format!(
        "p = {p}\npaths = {}\npairs = {}\nmax same-part = {} (bound 216)\nmax cross-part = {} (bound 76)\n",
        c.paths, c.pairs, c.max_same_part.count, c.max_cross_part.count
    );
    for k in PathClass::ALL {
        let _ = writeln!(text, "max type {} class = {} (bound {})", k.representative(), c.class_max(k), k.bound());
    }
    let _ = writeln!(text, "bound_check: {}", verdict(pass));
    Ok(Outcome::new(pass, text, &doc))
}

fn verify_cycles(p: u64, force: bool) -> Result<Outcome, CliError> {
    let h = parallel::hypergraph(p, force)?;
    let g = &h.graph;
    let found = find_1212_cycles(g);
    let witnesses: Vec<CycleJson> = found
        .iter()
        .map(|c| CycleJson {
            vertices: c.vertices.map(|v| vertex_json(g.vertex(v))),
            edges: c.edges.map(|e| g.edges()[e as usize].params),
        })
        .collect();
    let pass = witnesses.is_empty();
    let mut text = format!("p = {p}\nwitnesses = {}\n", witnesses.len());
    for w in &witnesses {
        let _ = writeln!(text, "  {:?} via {:?}", w.vertices, w.edges);
    }
    let _ = writeln!(text, "verdict: {}", verdict(pass));
    let doc = CyclesJson {
        schema_version: SCHEMA_VERSION,
        command: "verify cycles1212",
        p,
        witnesses,
        verdict: verdict(pass),
    };
    Ok(Outcome::new(pass, text, &doc))
}

fn verify_theta(q: u64) -> Result<Outcome, CliError> {
    let g = build_graph(q)?;
    let found = parallel::theta43(&g);
    let coords = |v: usize| g.vertex(v);
    let witness = found.map(|t| ThetaWitnessJson {
        a: coords(t.a),
        b: coords(t.b),
        paths: t.paths.iter().map(|p| p.map(coords)).collect(),
    });
    let pass = witness.is_none();
    let text = match &witness {
        None => format!("q = {q}\nno theta_(4,3)\nverdict: PASS\n"),
        Some(w) => format!("q = {q}\ntheta_(4,3) between {:?} and {:?}: {:?}\nverdict: FAIL\n", w.a, w.b, w.paths),
    };
    let doc =
        ThetaJson { schema_version: SCHEMA_VERSION, command: "verify theta43", q, witness, verdict: verdict(pass) };
    Ok(Outcome::new(pass, text, &doc))
}

fn verify_octagon(q: u64, samples: u64) -> Result<Outcome, CliError> {
    let g: GraphGq = build_graph(q)?;
    let r = octagon_identity_check(&g, (samples > 0).then_some(samples));
    let pass = r.holds();
    let first = r.first_violation.map(|c| c.iter().map(|&v| g.vertex(v)).collect::<Vec<_>>());
    let mut text = format!("q = {q}\noctagons examined = {}\nviolations = {}\n", r.examined, r.violations);
    if let Some(c) = &first {
        let _ = writeln!(text, "first violation: {c:?}");
    }
    let _ = writeln!(text, "verdict: {}", verdict(pass));
    let doc = OctagonJson {
        schema_version: SCHEMA_VERSION,
        command: "verify octagon",
        q,
        samples,
        examined: r.examined,
        violations: r.violations,
        truncated: r.truncated,
        first_violation: first,
        verdict: verdict(pass),
    };
    Ok(Outcome::new(pass, text, &doc))
}

fn resultant_cmd(a: &ResultantArgs) -> Result<Outcome, CliError> {
    let usage = |e: &dyn std::fmt::Display| CliError::Usage(e.to_string());
    let vars = VarTable::parse_list(&a.vars).map_err(|e| usage(&e))?;
    let v = vars.index(a.var.trim()).map_err(|e| usage(&e))?;
    let f = parse_poly(&a.f, &vars, RationalField).map_err(|e| usage(&format!("--f: {e}")))?;
    let g = parse_poly(&a.g, &vars, RationalField).map_err(|e| usage(&format!("--g: {e}")))?;
    let r = resultant(&f, &g, v).map_err(|e| usage(&e))?;
    let result = format_poly(&r, &vars);
    let text = format!("{result}\n");
    let doc = ResultantJson {
        schema_version: SCHEMA_VERSION,
        command: "resultant",
        vars: vars.names().to_vec(),
        var: a.var.trim().to_string(),
        result,
        verdict: "PASS",
    };
    Ok(Outcome::new(true, text, &doc))
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Replay(a) => replay(a, cli.seed),
        Command::Construct(a) => construct(a.prime.p, a.prime.force),
        Command::ConstructGraph(a) => construct_graph(a.q, a.adjacency),
        Command::Verify(VerifyCommand::Paths(a)) => verify_paths(a.p, a.force),
        Command::Verify(VerifyCommand::Cycles1212(a)) => verify_cycles(a.p, a.force),
        Command::Verify(VerifyCommand::Theta43 { q }) => verify_theta(*q),
        Command::Verify(VerifyCommand::Octagon { q, samples }) => verify_octagon(*q, *samples),
        Command::Resultant(a) => resultant_cmd(a),
    }
}

/// Parses `argv`, runs the command and writes the report. Returns the exit
/// status.
pub fn dispatch<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    let threads = cli.threads.unwrap_or(0);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let outcome = match pool.install(|| execute(&cli)) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let rendered = outcome.render(cli.format);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, rendered),
        None => std::io::stdout().lock().write_all(rendered.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }
    if outcome.pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}
