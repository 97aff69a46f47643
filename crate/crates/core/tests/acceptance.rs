//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fails.

use dls_core::canon::canonical_form;
use dls_core::checks::{
    check_reduction, minus_two_closed_form, mu1_window, pendant_edge_mu1, run_case_analysis, second_eigenvalue_bound,
    small_radius_classify, starlike_mu1_separation, Hypothesis, Multiplicity,
};
use dls_core::enumerate::{enumerate_vec, EnumFilter};
use dls_core::generators::{friendship, PathFriendshipSpec, StarlikeSpec};
use dls_core::oracle::compare_with_brute_force;
use dls_core::random::{pendant_trial, random_graph, rng};
use dls_core::search::Certifier;
use dls_core::spectral::{
    char_poly, check_bounds, closed_walks, coefficients_l, complement_duality, interlacing_check,
    invariants_from_spectrum, SpectralInvariants, Tolerances,
};
use dls_core::Graph;
use num_rational::Rational64;
use rand::Rng;
use std::time::{Duration, Instant};

/// Slack for eigenvalue bounds, windows and interlacing.
const SLACK: f64 = 1e-10;
/// Cross-graph comparisons: complement duality, pendant-edge μ₁ equality.
const CHECK: f64 = 1e-8;
/// Starlike μ₁ gaps below this are flagged.
const SEPARATION: f64 = 1e-9;
const SEED: u64 = 20_240_601;

fn tol() -> Tolerances {
    Tolerances { num: SLACK, check: CHECK, mult: 1e-6, sep: SEPARATION }
}

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn all_graphs(n: usize, connected: bool) -> Vec<Graph> {
    enumerate_vec(&EnumFilter::new(n).connected(connected), false).expect("within the enumeration guard")
}

fn path_friendship_specs(max_n: usize) -> Vec<PathFriendshipSpec> {
    (1..=max_n).flat_map(|n| PathFriendshipSpec::all_with_order(n, 1)).collect()
}

fn certify_all(graphs: Vec<(String, Graph)>, budget: Duration) -> Outcome {
    let start = Instant::now();
    let mut cert = Certifier::new().parallel(true);
    let mut failures = Vec::new();
    for (name, g) in &graphs {
        match cert.certify(g) {
            Ok(c) if c.verdict.is_dls() => {}
            other => failures.push(format!("{name}: {other:?}")),
        }
    }
    let elapsed = start.elapsed();
    Outcome {
        pass: failures.is_empty() && elapsed <= budget,
        detail: format!(
            "{} graphs certified DLS-at-scope, {} failures, {:.1?}",
            graphs.len() - failures.len(),
            failures.len(),
            elapsed
        ),
    }
}

fn dls_path_friendship() -> Outcome {
    let graphs = path_friendship_specs(9).into_iter().map(|s| (s.to_string(), s.graph())).collect();
    certify_all(graphs, Duration::from_secs(600))
}

fn dls_constituents() -> Outcome {
    let mut graphs: Vec<(String, Graph)> = (1..=4).map(|s| (format!("F_{s}"), friendship(s).unwrap().graph)).collect();
    for n in 2..=9 {
        for spec in StarlikeSpec::all_with_order(n) {
            graphs.push((format!("starlike {:?}", spec.all_branches()), spec.graph()));
        }
    }
    certify_all(graphs, Duration::from_secs(600))
}

fn exhaustive<F: Fn(&Graph) -> bool>(max_n: usize, connected: bool, budget: Duration, law: F) -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    let mut first_failure = None;
    for n in 0..=max_n {
        for g in all_graphs(n, connected) {
            checked += 1;
            if !law(&g) && first_failure.is_none() {
                first_failure = Some(canonical_form(&g));
            }
        }
    }
    let elapsed = start.elapsed();
    Outcome {
        pass: first_failure.is_none() && elapsed <= budget,
        detail: format!("{checked} graphs, first failure {first_failure:?}, {elapsed:.1?}"),
    }
}

fn spectrum_invariants() -> Outcome {
    exhaustive(8, false, Duration::from_secs(300), |g| {
        invariants_from_spectrum(&char_poly(g)).is_ok_and(|inv| inv == SpectralInvariants::direct(g))
    })
}

fn walk_counts() -> Outcome {
    exhaustive(7, false, Duration::from_secs(60), |g| (2..=4).all(|k| closed_walks(g, k).unwrap().agree()))
}

fn coefficient_forms() -> Outcome {
    exhaustive(7, false, Duration::from_secs(300), |g| coefficients_l(g, &char_poly(g)).agree())
}

fn complement_spectra() -> Outcome {
    let mut r = rng(SEED);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let g = random_graph(&mut r, 1, 12);
        worst = worst.max(complement_duality(&g).unwrap());
    }
    Outcome { pass: worst < CHECK, detail: format!("10000 random graphs, max deviation {worst:.3e}") }
}

fn bounds_and_interlacing() -> Outcome {
    let t = tol();
    let mut graphs = 0;
    let mut failures = 0;
    for n in 1..=8 {
        for g in all_graphs(n, true) {
            graphs += 1;
            let ok = check_bounds(&g, &t).unwrap().pass()
                && (0..g.order()).all(|v| g.order() < 2 || interlacing_check(&g, v, &t).unwrap().pass);
            failures += usize::from(!ok);
        }
    }
    let mut r = rng(SEED ^ 1);
    let mut worst = 0.0f64;
    let mut trial_failures = 0;
    for _ in 0..10_000 {
        let g = random_graph(&mut r, 2, 12);
        let v = r.gen_range(0..g.order());
        let rep = interlacing_check(&g, v, &t).unwrap();
        worst = worst.max(rep.max_violation);
        trial_failures += usize::from(!rep.pass);
    }
    Outcome {
        pass: failures == 0 && trial_failures == 0,
        detail: format!(
            "{graphs} connected graphs ({failures} failing), 10000 interlacing trials ({trial_failures} failing, worst violation {worst:.1e})"
        ),
    }
}

fn radius_classification() -> Outcome {
    let mut below = Vec::new();
    let mut pass = true;
    for n in 1..=8 {
        let c = small_radius_classify(n).unwrap();
        pass &= c.pass;
        below.push(c.below.len());
    }
    Outcome { pass, detail: format!("graphs with mu1 < 4 per order 1..=8: {below:?}") }
}

fn windows() -> Outcome {
    let t = tol();
    let specs = path_friendship_specs(12);
    let failing: Vec<String> = specs
        .iter()
        .filter(|s| !(mu1_window(s, &t).unwrap().pass && second_eigenvalue_bound(s, &t).unwrap().pass))
        .map(|s| s.to_string())
        .collect();
    Outcome { pass: failing.is_empty(), detail: format!("{} specs, failing {failing:?}", specs.len()) }
}

fn case_analysis() -> Outcome {
    let r = |x: i64| Some(Rational64::from(x));
    let mut problems: Vec<String> = Vec::new();
    let mut runs = 0;
    let mut minus_two_triangles = 0;
    let mut negative_n3 = 0;
    for s in 1..=5usize {
        for k in 1..=10usize {
            if 2 * s + k > 12 {
                continue;
            }
            for n in 2 * s + k + 1..=(2 * s + k + 1).max(14) {
                runs += 1;
                let cases = run_case_analysis(s, k, n).unwrap();
                let (si, ki, ni) = (s as i64, k as i64, n as i64);
                let find = |h: Hypothesis, m: Multiplicity| {
                    cases.iter().find(|c| c.hypothesis == h && c.solution.multiplicity == m).map(|c| &c.solution)
                };
                let alive: Vec<_> = cases.iter().filter(|c| c.survives()).collect();
                let top_n3 = if 2 * si + ki > 3 { 0 } else { 1 };
                let ok = alive.len() == 1
                    && alive[0].hypothesis == Hypothesis::Exact
                    && (alive[0].solution.n1, alive[0].solution.n2, alive[0].solution.n3)
                        == (r(ki), r(ni - ki - 1), r(top_n3));
                if !ok {
                    problems.push(format!("(s={s}, k={k}, n={n}) survivors {}", alive.len()));
                }
                if 2 * s + k - 2 > 3 {
                    let sol = find(Hypothesis::MinusTwo, Multiplicity::Single).unwrap();
                    let [_, _, n3, _] = minus_two_closed_form(si, ki, ni);
                    if sol.n3 != r(n3) || n3 != 4 * si + 2 * ki - 5 {
                        problems.push(format!("(s={s}, k={k}, n={n}) n3 = {:?}", sol.n3));
                    }
                }
                if let Some(sol) = find(Hypothesis::PlusOne, Multiplicity::Single) {
                    if sol.n3.is_some_and(|x| x < Rational64::from(0)) && !sol.feasible {
                        negative_n3 += 1;
                    } else {
                        problems.push(format!("(s={s}, k={k}, n={n}) d1 = 2s+k+1 not refuted by n3 < 0"));
                    }
                }
                if (s, k) == (2, 1) && n >= 10 {
                    let sol = find(Hypothesis::MinusTwo, Multiplicity::Multiple).unwrap();
                    if (sol.n1, sol.n3, sol.triangles) == (r(4), r(6), r(-2)) && !sol.feasible {
                        minus_two_triangles += 1;
                    } else {
                        problems.push(format!("repeated degree three at n={n}: {sol:?}"));
                    }
                }
            }
        }
    }
    let pass = problems.is_empty() && minus_two_triangles > 0 && negative_n3 > 0;
    Outcome {
        pass,
        detail: format!(
            "{runs} (s, k, n) systems; N(C3) = -2 refutations {minus_two_triangles}; n3 < 0 refutations {negative_n3}; problems {problems:?}"
        ),
    }
}

fn pendant_edges() -> Outcome {
    let t = tol();
    let mut r = rng(SEED ^ 2);
    let mut worst = 0.0f64;
    for _ in 0..1_000 {
        let trial = pendant_trial(&mut r, 12);
        let rep = pendant_edge_mu1(&trial.graph, trial.vertex, &trial.added, &t).unwrap();
        worst = worst.max(rep.gap);
    }
    let specs = path_friendship_specs(12);
    let mut sweep_worst = 0.0f64;
    let mut structural = 0;
    for s in &specs {
        let c = check_reduction(s, &t).unwrap();
        sweep_worst = sweep_worst.max(c.mu1_gap);
        structural += usize::from(!c.pass);
    }
    Outcome {
        pass: worst <= CHECK && sweep_worst <= CHECK && structural == 0,
        detail: format!(
            "1000 random trials max gap {worst:.1e}; {} reductions max gap {sweep_worst:.1e}, {structural} failing",
            specs.len()
        ),
    }
}

fn starlike_separation() -> Outcome {
    let t = tol();
    let mut pass = true;
    let mut min_gap = f64::INFINITY;
    let mut flagged = 0;
    let mut pairs = 0;
    for n in 2..=12 {
        let rep = starlike_mu1_separation(n, None, &t).unwrap();
        pass &= rep.distinct_polys;
        pairs += rep.pairs;
        flagged += rep.near_ties.len();
        if let Some(g) = rep.min_gap {
            min_gap = min_gap.min(g);
        }
    }
    Outcome {
        pass,
        detail: format!(
            "{pairs} pairs with distinct char polys, min mu1 gap {min_gap:.3e}, {flagged} flagged below 1e-9"
        ),
    }
}

fn oracles() -> Outcome {
    let mut pass = true;
    let mut counts = Vec::new();
    for n in 0..=6 {
        let c = compare_with_brute_force(n).unwrap();
        pass &= c.canonical_agrees && c.enumeration_agrees && c.enumerated == c.brute_classes;
        counts.push(c.enumerated);
    }
    Outcome { pass, detail: format!("classes per order 0..=6: {counts:?}") }
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("path-friendship graphs with n <= 9 are DLS-at-scope", dls_path_friendship),
        ("friendship graphs and starlike trees with n <= 9 are DLS-at-scope", dls_constituents),
        ("spectrum-derived invariants equal direct values, all graphs n <= 8", spectrum_invariants),
        ("closed-walk counts for k = 2, 3, 4, all graphs n <= 7", walk_counts),
        ("l1, l2, l3 closed forms equal char-poly coefficients, all graphs n <= 7", coefficient_forms),
        ("complement duality below 1e-8 on 10000 random graphs n <= 12", complement_spectra),
        ("degree bounds and interlacing with slack 1e-10", bounds_and_interlacing),
        ("mu1 < 4 exactly for paths and odd cycles, n <= 8", radius_classification),
        ("mu1 window and mu2 < 4 for path-friendship graphs n <= 12", windows),
        ("degree-system case analysis, 2s + k <= 12", case_analysis),
        ("pendant-edge additions preserve mu1 within 1e-8", pendant_edges),
        ("starlike trees n <= 12 have distinct char polys", starlike_separation),
        ("enumeration and canonical forms match brute force, n <= 6", oracles),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let out = run();
        failed += usize::from(!out.pass);
        println!("{} {:>2}. {name}: {}", if out.pass { "PASS" } else { "FAIL" }, i + 1, out.detail);
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
