//! The verification suite: every spectral law, bound and structural argument
//! run over explicit finite scopes. Each unit of work yields one
//! [`CheckRecord`]; the suite passes iff every record does.

use crate::canon::canonical_form;
use crate::checks::{
    check_reduction, epsilon_closed_form, minus_one_closed_form, minus_two_closed_form, mu1_window, pendant_edge_mu1,
    printed_pairs_agree, quadratic_target, repeated_maximum_pairs, run_case_analysis, second_eigenvalue_bound,
    small_radius_classify, starlike_mu1_separation, CaseReport, DegreeSystemSolution, Hypothesis, Multiplicity,
};
use crate::enumerate::{enumerate_vec, EnumFilter, SOFT_MAX_ORDER};
use crate::error::{Error, Result};
use crate::generators::{friendship, PathFriendshipSpec, StarlikeSpec};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::oracle::{compare_with_brute_force, OracleComparison, ORACLE_MAX_ORDER};
use crate::random::{pendant_trial, random_graph, rng, DEFAULT_SEED};
use crate::search::{Certifier, ClassCache, Verdict};
use crate::spectral::{
    char_poly, check_bounds, closed_walks, coefficients_l, complement_duality, eigenvalues, epsilon_invariant,
    interlacing_check, invariants_from_spectrum, SpectralInvariants, Spectrum, Tolerances,
};
use num_rational::Rational64;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::Arc;

/// One check in the suite, with the order it covers by default.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckInfo {
    pub id: &'static str,
    pub default_max_n: usize,
    pub summary: &'static str,
}

/// Every check, in run order.
pub const CHECKS: &[CheckInfo] = &[
    CheckInfo {
        id: "enumeration-oracle",
        default_max_n: 6,
        summary: "enumerator class counts equal permutation-search dedup",
    },
    CheckInfo {
        id: "canonical-oracle",
        default_max_n: 6,
        summary: "canonical forms induce the permutation-search partition",
    },
    CheckInfo {
        id: "spectral-invariants",
        default_max_n: 8,
        summary: "n, m, components, spanning trees and sum of squared degrees from the char poly, all graphs",
    },
    CheckInfo { id: "char-poly-roots", default_max_n: 8, summary: "char-poly roots match the eigensolver, all graphs" },
    CheckInfo {
        id: "closed-walks",
        default_max_n: 7,
        summary: "tr(A^k) equals its subgraph-count closed form for k = 2, 3, 4, all graphs",
    },
    CheckInfo {
        id: "char-poly-coefficients",
        default_max_n: 7,
        summary: "l1, l2, l3 closed forms equal char-poly coefficients, all graphs",
    },
    CheckInfo {
        id: "complement-duality",
        default_max_n: 12,
        summary: "complement spectrum is n minus the reversed spectrum, random graphs",
    },
    CheckInfo {
        id: "degree-bounds",
        default_max_n: 8,
        summary: "degree and theta bounds on mu1 and mu2, all connected graphs",
    },
    CheckInfo {
        id: "interlacing",
        default_max_n: 8,
        summary: "vertex-deleted Laplacian submatrices interlace, all connected graphs and vertices",
    },
    CheckInfo { id: "interlacing-random", default_max_n: 12, summary: "interlacing on random (graph, vertex) pairs" },
    CheckInfo {
        id: "small-radius-classification",
        default_max_n: 8,
        summary: "connected graphs with mu1 < 4 are exactly paths and odd cycles",
    },
    CheckInfo { id: "mu1-window", default_max_n: 12, summary: "2s+k+1 <= mu1 <= 2s+k+2 for path-friendship graphs" },
    CheckInfo {
        id: "mu2-bound",
        default_max_n: 12,
        summary: "mu2 < 4 for path-friendship graphs, with component radii",
    },
    CheckInfo {
        id: "degree-reconstruction",
        default_max_n: 12,
        summary: "degree-system case analysis leaves only the path-friendship degrees",
    },
    CheckInfo {
        id: "triangle-identity",
        default_max_n: 12,
        summary: "epsilon and quadratic degree identities of path-friendship graphs",
    },
    CheckInfo {
        id: "starlike-reduction",
        default_max_n: 12,
        summary: "dropping outer triangle edges gives the expected starlike tree",
    },
    CheckInfo {
        id: "pendant-edge-mu1",
        default_max_n: 12,
        summary: "edges among pendant neighbours leave mu1 unchanged",
    },
    CheckInfo {
        id: "starlike-separation",
        default_max_n: 12,
        summary: "non-isomorphic starlike trees have distinct char polys; mu1 gaps reported",
    },
    CheckInfo {
        id: "cospectral-pairs",
        default_max_n: 9,
        summary: "cospectral mates share epsilon and, with equal degrees, triangle counts",
    },
    CheckInfo {
        id: "dls-friendship",
        default_max_n: 9,
        summary: "friendship graphs have no cospectral mate at their order and size",
    },
    CheckInfo {
        id: "dls-starlike",
        default_max_n: 9,
        summary: "starlike trees have no cospectral mate at their order and size",
    },
    CheckInfo {
        id: "dls-path-friendship",
        default_max_n: 9,
        summary: "path-friendship graphs have no cospectral mate at their order and size",
    },
];

pub fn check_info(id: &str) -> Option<&'static CheckInfo> {
    CHECKS.iter().find(|c| c.id == id)
}

/// Random trials for the randomized checks.
pub const RANDOM_TRIALS: usize = 10_000;
pub const PENDANT_TRIALS: usize = 1_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub params: Value,
    pub expected: Value,
    pub measured: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyScope {
    /// Replaces every check's default order limit.
    pub max_n: Option<usize>,
    /// Check ids to run; empty means all.
    pub only: Vec<String>,
    pub tol: Tolerances,
    pub seed: u64,
    /// Allow enumeration above the soft order guard.
    pub force: bool,
    pub cache: Option<PathBuf>,
    /// Replaces the random trial counts.
    pub trials: Option<usize>,
    pub parallel: bool,
}

impl Default for VerifyScope {
    fn default() -> Self {
        VerifyScope {
            max_n: None,
            only: Vec::new(),
            tol: Tolerances::default(),
            seed: DEFAULT_SEED,
            force: false,
            cache: None,
            trials: None,
            parallel: true,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub checks: usize,
    pub records: usize,
    pub failed: usize,
}

impl Summary {
    pub fn pass(&self) -> bool {
        self.failed == 0
    }
}

/// Runs checks, sharing enumerations and cospectral classes between them.
pub struct Verifier {
    scope: VerifyScope,
    certifier: Certifier,
    graphs: HashMap<(usize, bool), Arc<Vec<Graph>>>,
    oracle: HashMap<usize, OracleComparison>,
}

impl Verifier {
    pub fn new(scope: VerifyScope) -> Result<Self> {
        for id in &scope.only {
            if check_info(id).is_none() {
                let known: Vec<&str> = CHECKS.iter().map(|c| c.id).collect();
                return Err(Error::InvalidParams(format!("unknown check {id:?}; known checks: {}", known.join(", "))));
            }
        }
        let t = scope.tol;
        if [t.num, t.check, t.mult, t.sep].iter().any(|&x| !(x > 0.0 && x.is_finite())) {
            return Err(Error::InvalidParams("tolerances must be positive and finite".into()));
        }
        let mut certifier = Certifier::new().force(scope.force).parallel(scope.parallel);
        if let Some(dir) = &scope.cache {
            certifier = certifier.with_cache(ClassCache::new(dir.clone()));
        }
        Ok(Verifier { scope, certifier, graphs: HashMap::new(), oracle: HashMap::new() })
    }

    pub fn scope(&self) -> &VerifyScope {
        &self.scope
    }

    /// Ids selected by the scope, in run order.
    pub fn selected(&self) -> Vec<&'static str> {
        CHECKS
            .iter()
            .map(|c| c.id)
            .filter(|id| self.scope.only.is_empty() || self.scope.only.iter().any(|o| o == id))
            .collect()
    }

    pub fn run(&mut self, emit: &mut dyn FnMut(&CheckRecord)) -> Result<Summary> {
        let mut summary = Summary::default();
        for id in self.selected() {
            summary.checks += 1;
            self.run_check(id, &mut |r| {
                summary.records += 1;
                if !r.pass {
                    summary.failed += 1;
                }
                emit(r);
            })?;
        }
        Ok(summary)
    }

    pub fn run_check(&mut self, id: &str, emit: &mut dyn FnMut(&CheckRecord)) -> Result<()> {
        let info = check_info(id).ok_or_else(|| Error::InvalidParams(format!("unknown check {id:?}")))?;
        let max_n = self.scope.max_n.unwrap_or(info.default_max_n);
        let mut out = Out { id: info.id, emit };
        match info.id {
            "enumeration-oracle" | "canonical-oracle" => self.oracle_check(&mut out, max_n),
            "spectral-invariants" => self.all_graphs(&mut out, max_n, false, 0, |g| {
                let derived = invariants_from_spectrum(&char_poly(g))?;
                Ok(derived == SpectralInvariants::direct(g))
            }),
            "char-poly-roots" => {
                let tol = self.scope.tol;
                self.all_graphs(&mut out, max_n, false, 0, move |g| {
                    let s: Spectrum = eigenvalues(g)?;
                    Ok(s.matches_char_poly(&char_poly(g), tol.check, tol.mult))
                })
            }
            "closed-walks" => self.all_graphs(&mut out, max_n, false, 0, |g| {
                for len in 2..=4 {
                    if !closed_walks(g, len)?.agree() {
                        return Ok(false);
                    }
                }
                Ok(true)
            }),
            "char-poly-coefficients" => {
                self.all_graphs(&mut out, max_n, false, 0, |g| Ok(coefficients_l(g, &char_poly(g)).agree()))
            }
            "complement-duality" => self.complement_check(&mut out, max_n),
            "degree-bounds" => {
                let tol = self.scope.tol;
                self.all_graphs(&mut out, max_n, true, 1, move |g| Ok(check_bounds(g, &tol)?.pass()))
            }
            "interlacing" => {
                let tol = self.scope.tol;
                self.all_graphs(&mut out, max_n, true, 2, move |g| {
                    for v in 0..g.order() {
                        if !interlacing_check(g, v, &tol)?.pass {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                })
            }
            "interlacing-random" => self.interlacing_random(&mut out, max_n),
            "small-radius-classification" => {
                for n in 1..=max_n {
                    let c = small_radius_classify(n)?;
                    out.record(
                        json!({ "n": n }),
                        json!({ "below_four": c.expected }),
                        json!({ "connected": c.connected, "below_four": c.below }),
                        c.pass,
                    );
                }
                Ok(())
            }
            "mu1-window" => {
                let tol = self.scope.tol;
                for spec in path_friendship_specs(max_n, 1) {
                    let w = mu1_window(&spec, &tol)?;
                    out.record(
                        json!({ "spec": w.spec, "s": w.s, "k": w.k }),
                        json!({ "lower": w.lower, "upper": w.upper, "slack": tol.num }),
                        json!({ "mu1": w.mu1 }),
                        w.pass,
                    );
                }
                Ok(())
            }
            "mu2-bound" => {
                let tol = self.scope.tol;
                for spec in path_friendship_specs(max_n, 1) {
                    let r = second_eigenvalue_bound(&spec, &tol)?;
                    out.record(
                        json!({ "spec": r.spec }),
                        json!({ "mu2_below": 4, "component_radius_below": 4, "components": "s K2 and the paths" }),
                        json!({ "mu2": r.mu2, "components": r.components, "structure_ok": r.structure_ok, "radii_ok": r.radii_ok }),
                        r.pass,
                    );
                }
                Ok(())
            }
            "degree-reconstruction" => degree_reconstruction(&mut out, max_n),
            "triangle-identity" => {
                for spec in path_friendship_specs(max_n, 0) {
                    let g = spec.graph();
                    let (s, k) = (spec.triangles() as i64, spec.path_count() as i64);
                    let cubes: i64 = g.degrees().iter().map(|&d| (d as i64 - 2).pow(3)).sum();
                    let epsilon = 6 * g.triangle_count() as i64 - cubes;
                    let quadratic: i64 = g.degrees().iter().map(|&d| (d * d) as i64 - 3 * d as i64 + 2).sum();
                    let (eps_cf, quad_cf) = (epsilon_closed_form(s, k), quadratic_target(s, k));
                    let pass = epsilon == eps_cf && epsilon_invariant(&g) == eps_cf && quadratic == quad_cf;
                    out.record(
                        json!({ "spec": spec.to_string() }),
                        json!({ "epsilon": eps_cf, "quadratic": quad_cf }),
                        json!({ "epsilon": epsilon, "epsilon_invariant": epsilon_invariant(&g), "quadratic": quadratic }),
                        pass,
                    );
                }
                Ok(())
            }
            "starlike-reduction" => {
                let tol = self.scope.tol;
                for spec in path_friendship_specs(max_n, 1) {
                    let r = check_reduction(&spec, &tol)?;
                    let pass = r.pass;
                    out.record(
                        json!({ "spec": spec.to_string() }),
                        json!({ "starlike": spec.starlike_reduction() }),
                        serde_json::to_value(r).expect("plain data"),
                        pass,
                    );
                }
                Ok(())
            }
            "pendant-edge-mu1" => self.pendant_check(&mut out, max_n),
            "starlike-separation" => {
                let tol = self.scope.tol;
                for n in 2..=max_n {
                    let r = starlike_mu1_separation(n, None, &tol)?;
                    let pass = r.distinct_polys;
                    out.record(
                        json!({ "n": n }),
                        json!({ "distinct_polys": true, "near_tie_below": tol.sep }),
                        json!({
                            "trees": r.trees,
                            "pairs": r.pairs,
                            "distinct_polys": r.distinct_polys,
                            "min_mu1_gap": r.min_gap,
                            "closest": r.closest,
                            "near_ties": r.near_ties,
                        }),
                        pass,
                    );
                }
                Ok(())
            }
            "cospectral-pairs" => self.cospectral_pairs(&mut out, max_n),
            "dls-friendship" => {
                let graphs: Vec<Graph> = (1..)
                    .take_while(|s| 2 * s < max_n)
                    .map(|s| friendship(s).map(|r| r.graph))
                    .collect::<Result<_>>()?;
                self.certify_all(&mut out, graphs.into_iter().enumerate().map(|(i, g)| (json!({ "s": i + 1 }), g)))
            }
            "dls-starlike" => {
                let items: Vec<(Value, Graph)> = (2..=max_n)
                    .flat_map(StarlikeSpec::all_with_order)
                    .map(|s| (json!({ "branches": s.all_branches() }), s.graph()))
                    .collect();
                self.certify_all(&mut out, items.into_iter())
            }
            "dls-path-friendship" => {
                let items: Vec<(Value, Graph)> = path_friendship_specs(max_n, 1)
                    .into_iter()
                    .map(|s| (json!({ "spec": s.to_string() }), s.graph()))
                    .collect();
                self.certify_all(&mut out, items.into_iter())
            }
            _ => unreachable!("every listed check is dispatched"),
        }
    }

    fn graphs(&mut self, n: usize, connected: bool) -> Result<Arc<Vec<Graph>>> {
        if let Some(g) = self.graphs.get(&(n, connected)) {
            return Ok(g.clone());
        }
        let filter = EnumFilter::new(n).connected(connected);
        let list = Arc::new(enumerate_vec(&filter, self.scope.force)?);
        self.graphs.insert((n, connected), list.clone());
        Ok(list)
    }

    /// One record per order: `law` holds on every graph (connected graphs when asked) of that order.
    fn all_graphs(
        &mut self,
        out: &mut Out,
        max_n: usize,
        connected: bool,
        min_n: usize,
        law: impl Fn(&Graph) -> Result<bool> + Sync,
    ) -> Result<()> {
        for n in min_n..=max_n {
            let graphs = self.graphs(n, connected)?;
            let verdicts: Vec<bool> = graphs.par_iter().map(&law).collect::<Result<_>>()?;
            let failures: Vec<String> =
                graphs.iter().zip(&verdicts).filter(|(_, ok)| !**ok).map(|(g, _)| to_graph6(g)).collect();
            out.record(
                json!({ "n": n, "connected_only": connected }),
                json!({ "failures": 0 }),
                json!({ "graphs": graphs.len(), "failures": failures.len(), "first_failure": failures.first() }),
                failures.is_empty(),
            );
        }
        Ok(())
    }

    fn oracle_check(&mut self, out: &mut Out, max_n: usize) -> Result<()> {
        let limit = max_n.min(ORACLE_MAX_ORDER);
        for n in 0..=limit {
            if let Entry::Vacant(e) = self.oracle.entry(n) {
                e.insert(compare_with_brute_force(n)?);
            }
            let c = &self.oracle[&n];
            if out.id == "enumeration-oracle" {
                out.record(
                    json!({ "n": n }),
                    json!({ "classes": c.brute_classes }),
                    json!({ "enumerated": c.enumerated, "labeled": c.labeled }),
                    c.enumeration_agrees && c.enumerated == c.brute_classes,
                );
            } else {
                out.record(
                    json!({ "n": n }),
                    json!({ "classes": c.brute_classes }),
                    json!({ "canonical_classes": c.canonical_classes, "labeled": c.labeled }),
                    c.canonical_agrees,
                );
            }
        }
        Ok(())
    }

    fn trials(&self, default: usize) -> usize {
        self.scope.trials.unwrap_or(default)
    }

    fn complement_check(&mut self, out: &mut Out, max_n: usize) -> Result<()> {
        let trials = self.trials(RANDOM_TRIALS);
        let mut r = rng(self.scope.seed);
        let graphs: Vec<Graph> = (0..trials).map(|_| random_graph(&mut r, 1, max_n.max(1))).collect();
        let deviations: Vec<f64> = graphs.par_iter().map(complement_duality).collect::<Result<_>>()?;
        let (worst, max_dev) =
            deviations
                .iter()
                .enumerate()
                .fold((None, 0.0f64), |(w, m), (i, &d)| if d > m { (Some(i), d) } else { (w, m) });
        out.record(
            json!({ "trials": trials, "max_n": max_n, "seed": self.scope.seed }),
            json!({ "max_deviation_at_most": self.scope.tol.check }),
            json!({ "max_deviation": max_dev, "worst": worst.map(|i| to_graph6(&graphs[i])) }),
            max_dev <= self.scope.tol.check,
        );
        Ok(())
    }

    fn interlacing_random(&mut self, out: &mut Out, max_n: usize) -> Result<()> {
        let trials = self.trials(RANDOM_TRIALS);
        let tol = self.scope.tol;
        let mut r = rng(self.scope.seed ^ 0x1a7e);
        let cases: Vec<(Graph, usize)> = (0..trials)
            .map(|_| {
                let g = random_graph(&mut r, 2, max_n.max(2));
                let v = r.gen_range(0..g.order());
                (g, v)
            })
            .collect();
        let reports = cases.par_iter().map(|(g, v)| interlacing_check(g, *v, &tol)).collect::<Result<Vec<_>>>()?;
        let worst = reports.iter().map(|x| x.max_violation).fold(0.0f64, f64::max);
        let failures: Vec<Value> = cases
            .iter()
            .zip(&reports)
            .filter(|(_, x)| !x.pass)
            .map(|((g, v), _)| json!({ "graph6": to_graph6(g), "vertex": v }))
            .collect();
        out.record(
            json!({ "trials": trials, "max_n": max_n, "seed": self.scope.seed }),
            json!({ "failures": 0 }),
            json!({ "max_violation": worst, "failures": failures.len(), "first_failure": failures.first() }),
            failures.is_empty(),
        );
        Ok(())
    }

    fn pendant_check(&mut self, out: &mut Out, max_n: usize) -> Result<()> {
        let tol = self.scope.tol;
        let trials = self.trials(PENDANT_TRIALS);
        if max_n >= 4 {
            let mut r = rng(self.scope.seed ^ 0x9e0d);
            let cases: Vec<_> = (0..trials).map(|_| pendant_trial(&mut r, max_n)).collect();
            let reports = cases
                .par_iter()
                .map(|c| pendant_edge_mu1(&c.graph, c.vertex, &c.added, &tol))
                .collect::<Result<Vec<_>>>()?;
            let worst = reports.iter().map(|x| x.gap).fold(0.0f64, f64::max);
            let failures = reports.iter().filter(|x| !x.pass).count();
            out.record(
                json!({ "form": "random", "trials": trials, "max_n": max_n, "seed": self.scope.seed }),
                json!({ "max_gap_at_most": tol.check }),
                json!({ "max_gap": worst, "failures": failures }),
                failures == 0,
            );
        }
        let specs = path_friendship_specs(max_n, 1);
        let checks = specs.par_iter().map(|s| check_reduction(s, &tol)).collect::<Result<Vec<_>>>()?;
        let worst = checks.iter().map(|c| c.mu1_gap).fold(0.0f64, f64::max);
        let failing: Vec<&str> =
            checks.iter().filter(|c| !(c.recovers_input && c.mu1_gap <= tol.check)).map(|c| c.spec.as_str()).collect();
        out.record(
            json!({ "form": "starlike reduction and back", "specs": specs.len(), "max_n": max_n }),
            json!({ "max_gap_at_most": tol.check }),
            json!({ "max_gap": worst, "failures": failing.len(), "first_failure": failing.first() }),
            failing.is_empty(),
        );
        Ok(())
    }

    fn cospectral_pairs(&mut self, out: &mut Out, max_n: usize) -> Result<()> {
        let mut smallest: Option<(usize, Vec<String>)> = None;
        for n in 1..=max_n {
            let mut nontrivial = 0;
            let mut with_mate = 0;
            let mut pairs = 0;
            let mut epsilon_ok = true;
            let mut triangles_ok = true;
            let mut mate_ok = true;
            let mut first: Option<Vec<String>> = None;
            for m in 0..=n * (n - 1) / 2 {
                let classes = self.certifier.classes(n, m)?;
                for class in classes.iter().filter(|c| !c.is_singleton()) {
                    nontrivial += 1;
                    with_mate += class.members.len();
                    let graphs: Vec<Graph> =
                        class.members.iter().map(|s| crate::graph6::from_graph6(s)).collect::<Result<_>>()?;
                    for i in 0..graphs.len() {
                        for j in i + 1..graphs.len() {
                            pairs += 1;
                            let (a, b) = (&graphs[i], &graphs[j]);
                            epsilon_ok &= epsilon_invariant(a) == epsilon_invariant(b);
                            if a.degree_sequence() == b.degree_sequence() {
                                triangles_ok &= a.triangle_count() == b.triangle_count();
                            }
                        }
                    }
                    if first.is_none() {
                        first = Some(class.members.clone());
                        let cert = self.certifier.certify(&graphs[0])?;
                        mate_ok &=
                            matches!(&cert.verdict, Verdict::MateFound { mates } if mates.contains(&class.members[1]));
                    }
                }
            }
            if smallest.is_none() {
                if let Some(f) = &first {
                    smallest = Some((n, f.clone()));
                }
            }
            out.record(
                json!({ "n": n }),
                json!({ "epsilon_agree": true, "triangles_agree_with_equal_degrees": true, "member_certifies_mate": true }),
                json!({
                    "nonsingleton_classes": nontrivial,
                    "graphs_with_mate": with_mate,
                    "pairs": pairs,
                    "epsilon_agree": epsilon_ok,
                    "triangles_agree_with_equal_degrees": triangles_ok,
                    "member_certifies_mate": mate_ok,
                    "example": first,
                }),
                epsilon_ok && triangles_ok && mate_ok,
            );
        }
        out.record(
            json!({ "form": "smallest order with a cospectral pair", "max_n": max_n }),
            Value::String("reported".into()),
            json!({ "n": smallest.as_ref().map(|s| s.0), "members": smallest.map(|s| s.1) }),
            true,
        );
        Ok(())
    }

    fn certify_all(&mut self, out: &mut Out, items: impl Iterator<Item = (Value, Graph)>) -> Result<()> {
        let items: Vec<(Value, Graph)> = items.collect();
        if let Some(n) = items.iter().map(|(_, g)| g.order()).max() {
            if n > SOFT_MAX_ORDER && !self.scope.force {
                return Err(Error::Budget { n, guard: SOFT_MAX_ORDER });
            }
        }
        for (params, g) in items {
            let cert = self.certifier.certify(&g)?;
            let mut params = params;
            params["graph6"] = Value::String(canonical_form(&g));
            let pass = cert.verdict.is_dls();
            out.record(
                params,
                json!({ "verdict": "DLS-at-scope" }),
                serde_json::to_value(&cert).expect("plain data"),
                pass,
            );
        }
        Ok(())
    }
}

struct Out<'a> {
    id: &'static str,
    emit: &'a mut dyn FnMut(&CheckRecord),
}

impl Out<'_> {
    fn record(&mut self, params: Value, expected: Value, measured: Value, pass: bool) {
        (self.emit)(&CheckRecord { check: self.id.to_string(), params, expected, measured, pass });
    }
}

/// Path-friendship specs on at most `max_n` vertices with at least `min_s` triangles.
fn path_friendship_specs(max_n: usize, min_s: usize) -> Vec<PathFriendshipSpec> {
    (1..=max_n).flat_map(|n| PathFriendshipSpec::all_with_order(n, min_s)).collect()
}

fn rational(x: Option<Rational64>) -> Value {
    x.map_or(Value::Null, |v| Value::String(v.to_string()))
}

fn case_json(c: &CaseReport) -> Value {
    let s = &c.solution;
    json!({
        "hypothesis": c.hypothesis.to_string(),
        "d1": s.d1,
        "multiplicity": s.multiplicity,
        "n1": rational(s.n1),
        "n2": rational(s.n2),
        "n3": rational(s.n3),
        "top": rational(s.top),
        "triangles": rational(s.triangles),
        "feasible": s.feasible,
        "reason": s.reason,
    })
}

fn find(cases: &[CaseReport], h: Hypothesis, mode: Multiplicity) -> Option<&DegreeSystemSolution> {
    cases.iter().find(|c| c.hypothesis == h && c.solution.multiplicity == mode).map(|c| &c.solution)
}

fn int(x: i64) -> Option<Rational64> {
    Some(Rational64::from(x))
}

/// One record per `(s, k, n)` with `s, k ≥ 1`, `2s + k ≤ max_n` and
/// `2s+k+1 ≤ n ≤ max(max_n, 2s+k+1)`, plus the repeated-maximum lists.
fn degree_reconstruction(out: &mut Out, max_n: usize) -> Result<()> {
    for s in 1..=max_n / 2 {
        for k in 1..=max_n.saturating_sub(2 * s) {
            let lo = 2 * s + k + 1;
            for n in lo..=max_n.max(lo) {
                let cases = run_case_analysis(s, k, n)?;
                let (si, ki, ni) = (s as i64, k as i64, n as i64);
                let centre = 2 * si + ki;
                let mut failures: Vec<String> = Vec::new();
                let mut expected = serde_json::Map::new();

                let survivors: Vec<&CaseReport> = cases.iter().filter(|c| c.survives()).collect();
                let want =
                    if centre > 3 { (int(ki), int(ni - ki - 1), int(0)) } else { (int(ki), int(ni - ki - 1), int(1)) };
                expected.insert(
                    "survivor".into(),
                    json!({ "d1": centre, "n1": ki, "n2": ni - ki - 1, "n3": if centre > 3 { 0 } else { 1 } }),
                );
                match survivors.as_slice() {
                    [only]
                        if only.hypothesis == Hypothesis::Exact
                            && only.solution.multiplicity == Multiplicity::Single =>
                    {
                        let sol = &only.solution;
                        if (sol.n1, sol.n2, sol.n3) != want {
                            failures.push("surviving counts differ from the path-friendship degrees".into());
                        }
                        if sol.quadratic_form() != int(quadratic_target(si, ki)) {
                            failures.push("quadratic degree identity fails for the survivor".into());
                        }
                        if sol.triangles != int(si) {
                            failures.push("survivor does not have s triangles".into());
                        }
                    }
                    _ => failures.push(format!("{} surviving cases", survivors.len())),
                }

                if centre - 2 > 3 {
                    let [n1, n2, n3, tri] = minus_two_closed_form(si, ki, ni);
                    expected.insert("minus_two".into(), json!({ "n1": n1, "n2": n2, "n3": n3, "triangles": tri }));
                    if let Some(sol) = find(&cases, Hypothesis::MinusTwo, Multiplicity::Single) {
                        if (sol.n1, sol.n2, sol.n3) != (int(n1), int(n2), int(n3))
                            || sol.triangles.is_some_and(|t| t != Rational64::from(tri))
                        {
                            failures.push("d1 = 2s+k-2 counts differ from the closed form".into());
                        }
                    }
                }
                if centre - 1 > 3 {
                    let [n1, n2, n3, tri2] = minus_one_closed_form(si, ki, ni);
                    expected
                        .insert("minus_one".into(), json!({ "n1": n1, "n2": n2, "n3": n3, "twice_triangles": tri2 }));
                    if let Some(sol) = find(&cases, Hypothesis::MinusOne, Multiplicity::Single) {
                        if (sol.n1, sol.n2, sol.n3) != (int(n1), int(n2), int(n3))
                            || sol.triangles.is_some_and(|t| t * Rational64::from(2) != Rational64::from(tri2))
                        {
                            failures.push("d1 = 2s+k-1 counts differ from the closed form".into());
                        }
                    }
                }
                if let Some(sol) = find(&cases, Hypothesis::PlusOne, Multiplicity::Single) {
                    let n3 = -2 * si - ki + 1;
                    expected.insert("plus_one_n3".into(), json!(n3));
                    if sol.n3 != int(n3) || sol.feasible {
                        failures.push("d1 = 2s+k+1 does not give the negative n3".into());
                    }
                }
                if (s, k) == (2, 1) && n >= 10 {
                    expected.insert("repeated_degree_three".into(), json!({ "n1": 4, "n3": 6, "triangles": -2 }));
                    let ok = find(&cases, Hypothesis::MinusTwo, Multiplicity::Multiple).is_some_and(|sol| {
                        sol.n1 == int(4) && sol.n3 == int(6) && sol.triangles == int(-2) && !sol.feasible
                    });
                    if !ok {
                        failures.push("repeated degree three does not force -2 triangles".into());
                    }
                }
                if (s, k) == (1, 1) {
                    expected.insert("max_degree_one".into(), json!("H would be K2"));
                    let ok = find(&cases, Hypothesis::MinusTwo, Multiplicity::Single)
                        .is_some_and(|sol| !sol.feasible && sol.reason.as_deref().is_some_and(|r| r.contains("K₂")));
                    if !ok {
                        failures.push("maximum degree one is not refuted by order".into());
                    }
                }

                out.record(
                    json!({ "s": s, "k": k, "n": n }),
                    Value::Object(expected),
                    json!({ "cases": cases.iter().map(case_json).collect::<Vec<_>>(), "failures": failures }),
                    failures.is_empty(),
                );
            }
        }
    }
    let pairs = |h| repeated_maximum_pairs(h).into_iter().map(|(s, k)| json!({ "s": s, "k": k })).collect::<Vec<_>>();
    out.record(
        json!({ "form": "repeated maximum degree lists" }),
        json!({ "printed_lists_match_search": true }),
        json!({ "minus_two": pairs(Hypothesis::MinusTwo), "minus_one": pairs(Hypothesis::MinusOne) }),
        printed_pairs_agree(),
    );
    Ok(())
}

/// Convenience: the whole suite with `scope`, collecting records.
pub fn verify_all(scope: VerifyScope) -> Result<(Summary, Vec<CheckRecord>)> {
    let mut records = Vec::new();
    let summary = Verifier::new(scope)?.run(&mut |r| records.push(r.clone()))?;
    Ok((summary, records))
}
