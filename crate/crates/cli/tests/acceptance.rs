//! One line per acceptance criterion. Run with
//! `cargo test -p berge-cli --test acceptance -- --nocapture` (the output is
//! printed either way).
//!
//! The process fails when a criterion fails for a reason not listed in
//! `KNOWN_UNATTAINABLE`, or when a listed part unexpectedly passes.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use berge_cli::parallel;
use berge_core::arith::{Integer, IntegerRing, PrimeField, RationalField};
use berge_core::construction::{build_graph, edge_from_params, AdjacencyList, HypergraphH};
use berge_core::elimchain::{builtin_script, run_script, ChainReport, NoClock, RunOptions};
use berge_core::poly::{format_poly, parse_poly, Poly, VarTable, ZPoly};
use berge_core::resultant::{resultant, univariate_resultant_mod_p};
use berge_core::verifier::{find_1212_cycles, octagon_identity_check, theta43_search, PathClass};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Parts that cannot pass as stated, with the reason.
const KNOWN_UNATTAINABLE: [(u8, &str, &str); 2] = [
    (2, "k4", "R(r0', r1', x2) is C^2 (c2-d2)^2 b2^2 (b2-1)^2; the displayed identity has C to the first power"),
    (8, "K6 witness", "a theta_{4,3} has 2 + 3*3 = 11 vertices, so K6 cannot contain one"),
];

struct Part {
    name: String,
    ok: bool,
    note: String,
}

fn part(name: impl Into<String>, ok: bool, note: impl Into<String>) -> Part {
    Part { name: name.into(), ok, note: note.into() }
}

struct Criterion {
    id: u8,
    title: &'static str,
    parts: Vec<Part>,
    elapsed: Duration,
}

fn within(name: &str, elapsed: Duration, budget: Duration) -> Part {
    part(name, elapsed <= budget, format!("{:.1}s of {}s", elapsed.as_secs_f64(), budget.as_secs()))
}

fn replay(name: &str) -> (ChainReport, Duration) {
    let script = builtin_script(name).unwrap().unwrap();
    let t = Instant::now();
    let r = run_script(&script, &RunOptions::default(), &NoClock);
    (r, t.elapsed())
}

/// One part per failing step, or a single passing part.
fn chain_parts(r: &ChainReport) -> Vec<Part> {
    let fails: Vec<Part> = r
        .failures()
        .map(|s| part(s.name.clone(), false, format!("line {}: {}", s.line, s.detail.clone().unwrap_or_default())))
        .collect();
    if fails.is_empty() {
        vec![part("chain", true, format!("{} steps", r.steps.len()))]
    } else {
        fails
    }
}

fn chain_criterion(
    id: u8,
    title: &'static str,
    name: &str,
    budget_s: u64,
    reports: &mut Vec<ChainReport>,
) -> Criterion {
    let (r, elapsed) = replay(name);
    let mut parts = chain_parts(&r);
    parts.push(within("runtime", elapsed, Duration::from_secs(budget_s)));
    reports.push(r);
    Criterion { id, title, parts, elapsed }
}

fn construction_parts(p: u64) -> (Vec<Part>, HypergraphH) {
    let h = parallel::hypergraph(p, false).unwrap();
    let s1 = h.sets.s1.len() as u64;
    let e = h.graph.edge_count() as u64;
    let mut parts = vec![
        part(format!("|T3| at {p}"), h.sets.t3.len() as u64 == (p - 1) / 2, format!("{}", h.sets.t3.len())),
        part(format!("|S1| at {p}"), s1 >= 1 && 4 * s1 + 43 >= p, format!("{s1}")),
        part(format!("|E| at {p}"), e >= s1.pow(3) * (p - 13), format!("{e} >= {}", s1.pow(3) * (p - 13))),
    ];
    // Every tuple of F_p^4, independently of the builder's own loop.
    let mut accepted = 0u64;
    let mut triples = HashSet::new();
    for x1 in 0..p {
        for x2 in 0..p {
            for x3 in 0..p {
                for a in 0..p {
                    if let Ok(edge) = edge_from_params(&h.sets, x1, x2, x3, a) {
                        accepted += 1;
                        triples.insert(edge.members);
                    }
                }
            }
        }
    }
    parts.push(part(
        format!("injectivity at {p}"),
        accepted == e && triples.len() as u64 == accepted,
        format!("{accepted} accepted tuples, {} distinct triples", triples.len()),
    ));
    (parts, h)
}

fn random_zpoly(rng: &mut ChaCha8Rng, nvars: usize, max_deg: u32, max_terms: usize) -> ZPoly {
    let n = rng.gen_range(1..=max_terms);
    let terms: Vec<(Vec<u32>, Integer)> = (0..n)
        .map(|_| {
            let e: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=max_deg)).collect();
            (e, Integer::from(rng.gen_range(-6i64..=6)))
        })
        .collect();
    Poly::from_terms(IntegerRing, nvars, terms)
}

fn random_in_x(rng: &mut ChaCha8Rng) -> ZPoly {
    loop {
        let f = random_zpoly(rng, 3, 3, 5);
        if f.degree_in(0) >= 1 {
            return f;
        }
    }
}

/// Property suites, 1000 seeded cases each.
fn property_parts() -> Vec<Part> {
    const CASES: usize = 1000;
    const P: u64 = 10007;
    let field = PrimeField::new(P);
    let mut rng = ChaCha8Rng::seed_from_u64(20240521);
    let mut parts = Vec::new();

    // Specialization: R(f, g)(pt) equals the univariate resultant of the
    // specialized pair whenever both leading coefficients survive.
    let mut checked = 0;
    let mut bad = 0;
    for _ in 0..CASES {
        let (f, g) = (random_in_x(&mut rng), random_in_x(&mut rng));
        let r = resultant(&f, &g, 0).unwrap();
        if r.degree_in(0) > 0 {
            bad += 1;
            continue;
        }
        let (ff, gf, rf) = (f.to_prime_field(field), g.to_prime_field(field), r.to_prime_field(field));
        let pt = [0, rng.gen_range(0..P), rng.gen_range(0..P)];
        let fu = ff.specialize_to_univariate(0, &pt);
        let gu = gf.specialize_to_univariate(0, &pt);
        if fu.len() as i64 != ff.degree_in(0) + 1 || gu.len() as i64 != gf.degree_in(0) + 1 {
            continue;
        }
        checked += 1;
        if univariate_resultant_mod_p(&field, &fu, &gu) != rf.evaluate(&pt).unwrap() {
            bad += 1;
        }
    }
    parts.push(part(
        "elimination",
        bad == 0 && checked >= CASES * 9 / 10,
        format!("{checked} specializations, {bad} bad"),
    ));

    let mut bad = 0;
    for _ in 0..CASES {
        let h = random_in_x(&mut rng);
        let (a, b) = (random_zpoly(&mut rng, 3, 2, 3), random_zpoly(&mut rng, 3, 2, 3));
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let (f, g) = (h.mul(&a), h.mul(&b));
        if f.degree_in(0) < 1 || g.degree_in(0) < 1 {
            continue;
        }
        if !resultant(&f, &g, 0).unwrap().is_zero() {
            bad += 1;
        }
    }
    parts.push(part("vanishing", bad == 0, format!("{bad} bad")));

    let mut bad = 0;
    for _ in 0..CASES {
        let (f1, f2, g) = (random_in_x(&mut rng), random_in_x(&mut rng), random_in_x(&mut rng));
        let lhs = resultant(&f1.mul(&f2), &g, 0).unwrap();
        let rhs = resultant(&f1, &g, 0).unwrap().mul(&resultant(&f2, &g, 0).unwrap());
        if lhs != rhs {
            bad += 1;
        }
    }
    parts.push(part("multiplicativity", bad == 0, format!("{bad} bad")));

    let mut bad = 0;
    for _ in 0..CASES {
        let f = random_zpoly(&mut rng, 3, 2, 4);
        let h = random_in_x(&mut rng);
        if f.is_zero() {
            continue;
        }
        let k = rng.gen_range(0..3u32);
        let fk = f.mul(&h.pow(k));
        if fk.div_exact(&h.pow(k)).ok() != Some(f.clone()) {
            bad += 1;
        }
        match (f.strip_factor(&h), fk.strip_factor(&h)) {
            (Ok((k0, base)), Ok((k1, rest))) if k1 == k0 + k && rest == base && rest.mul(&h.pow(k1)) == fk => {}
            _ => bad += 1,
        }
    }
    parts.push(part("exact_div/strip_factor", bad == 0, format!("{bad} bad")));

    let vars = VarTable::parse_list("x, y, w").unwrap();
    let mut bad = 0;
    for _ in 0..CASES {
        let z = random_zpoly(&mut rng, 3, 3, 6);
        let q = Poly::from_terms(
            RationalField,
            3,
            z.terms().map(|(c, e)| {
                (
                    e.to_vec(),
                    berge_core::arith::normalize_rational(c.clone(), Integer::from(rng.gen_range(1i64..=9))).unwrap(),
                )
            }),
        );
        if parse_poly(&format_poly(&q, &vars), &vars, RationalField).ok() != Some(q.clone()) {
            bad += 1;
        }
        if parse_poly(&format_poly(&z, &vars), &vars, IntegerRing).ok() != Some(z) {
            bad += 1;
        }
    }
    parts.push(part("parser round trip", bad == 0, format!("{bad} bad")));
    parts
}

fn main() {
    let mut out: Vec<Criterion> = Vec::new();
    let mut reports = Vec::new();

    out.push(chain_criterion(1, "replay lemma1", "lemma1", 10, &mut reports));
    out.push(chain_criterion(2, "replay path1212", "path1212", 300, &mut reports));
    out.push(chain_criterion(3, "replay path1231", "path1231", 1800, &mut reports));
    out.push(chain_criterion(4, "replay path1232", "path1232", 600, &mut reports));
    out.push(chain_criterion(5, "replay theta43", "theta43", 60, &mut reports));

    let t = Instant::now();
    let (mut parts, h47) = construction_parts(47);
    parts.extend(construction_parts(59).0);
    let elapsed = t.elapsed();
    parts.push(within("runtime", elapsed, Duration::from_secs(60)));
    out.push(Criterion { id: 6, title: "construction at p = 47 and 59", parts, elapsed });

    let t = Instant::now();
    let cycles = find_1212_cycles(&h47.graph);
    let census = parallel::census(&h47.graph);
    let elapsed = t.elapsed();
    let mut parts = vec![
        part("no (1,2,1,2) 4-cycle", cycles.is_empty(), format!("{} witnesses", cycles.len())),
        part("same-part <= 216", census.max_same_part.count <= 216, census.max_same_part.count.to_string()),
        part("cross-part <= 76", census.max_cross_part.count <= 76, census.max_cross_part.count.to_string()),
    ];
    for class in [PathClass::Abab, PathClass::Abca, PathClass::Abcb] {
        let m = census.class_max(class);
        parts.push(part(format!("{} <= {}", class.representative(), class.bound()), m <= class.bound(), m.to_string()));
    }
    parts.push(within("runtime", elapsed, Duration::from_secs(300)));
    out.push(Criterion { id: 7, title: "combinatorial verification at p = 47", parts, elapsed });

    let t = Instant::now();
    let mut parts = Vec::new();
    for (q, limit) in [(5u64, None), (7, Some(1000))] {
        let g = build_graph(q).unwrap();
        let theta = parallel::theta43(&g);
        parts.push(part(format!("G_{q} theta-free"), theta.is_none(), format!("{theta:?}")));
        let oct = octagon_identity_check(&g, limit);
        parts.push(part(
            format!("G_{q} octagons"),
            oct.holds() && (oct.examined >= 100 || !oct.truncated),
            format!("{} examined, {} violations", oct.examined, oct.violations),
        ));
    }
    let k6 = theta43_search(&AdjacencyList::complete(6));
    parts.push(part("K6 witness", k6.is_some(), format!("{k6:?}")));
    let k11 = theta43_search(&AdjacencyList::complete(11));
    parts.push(part("K11 witness", k11.is_some(), format!("{k11:?}")));
    let elapsed = t.elapsed();
    parts.push(within("runtime", elapsed, Duration::from_secs(300)));
    out.push(Criterion { id: 8, title: "G_q at q = 5 and 7", parts, elapsed });

    let t = Instant::now();
    let mut parts = property_parts();
    let mut steps = 0;
    let mut short = Vec::new();
    for r in &reports {
        for s in r.steps.iter().filter(|s| s.kind == "resultant") {
            steps += 1;
            match &s.spot {
                Some(c) if c.trials == 50 && c.mismatches == 0 => {}
                _ => short.push(format!("{}:{}", r.script, s.name)),
            }
        }
    }
    parts.push(part("spot checks", short.is_empty(), format!("{steps} resultant steps at 50 points; bad {short:?}")));
    let elapsed = t.elapsed();
    parts.push(within("runtime", elapsed, Duration::from_secs(120)));
    out.push(Criterion { id: 9, title: "property suites", parts, elapsed });

    let mut unexpected = Vec::new();
    for c in &out {
        let failing: Vec<&Part> = c.parts.iter().filter(|p| !p.ok).collect();
        let verdict = if failing.is_empty() { "PASS" } else { "FAIL" };
        let detail = if failing.is_empty() {
            c.parts.iter().map(|p| format!("{} {}", p.name, p.note)).collect::<Vec<_>>().join("; ")
        } else {
            failing.iter().map(|p| format!("{}: {}", p.name, p.note)).collect::<Vec<_>>().join("; ")
        };
        println!("criterion {}: {verdict}  {} ({:.1}s)  {detail}", c.id, c.title, c.elapsed.as_secs_f64());
        for p in &failing {
            if !KNOWN_UNATTAINABLE.iter().any(|(id, name, _)| *id == c.id && *name == p.name) {
                unexpected.push(format!("criterion {} part {} failed", c.id, p.name));
            }
        }
        for (id, name, _) in KNOWN_UNATTAINABLE.iter().filter(|(id, _, _)| *id == c.id) {
            if !failing.iter().any(|p| p.name == *name) {
                unexpected.push(format!("criterion {id} part {name} now passes; update KNOWN_UNATTAINABLE"));
            }
        }
    }
    for (id, name, why) in KNOWN_UNATTAINABLE {
        println!("known: criterion {id} part {name}: {why}");
    }
    if !unexpected.is_empty() {
        for u in &unexpected {
            println!("unexpected: {u}");
        }
        std::process::exit(1);
    }
}
