//! Reconstruction of the degree sequence of a graph `H` that shares the
//! Laplacian spectrum of a path-friendship graph `G(s, t)` with `k` paths.
//!
//! The spectrum fixes `n`, `m`, `Σd²` and `ε = 6·N(C₃) − Σ(d − 2)³`, and
//! confines `d₁(H)` to `2s+k−2 ..= 2s+k+1` with every other degree at most
//! three. Each hypothesis on `d₁` (and on how many vertices attain it) is
//! solved exactly and either refuted or kept.

use crate::error::{Error, Result};
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// Spectrum-determined data of the target graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSystem {
    pub n: i64,
    pub m: i64,
    pub sum_sq: i64,
    pub epsilon: i64,
    /// Spanning trees of the target; used for the unicyclic test.
    pub spanning_trees: i64,
}

impl DegreeSystem {
    /// Data of `G(s, t)` with `k = |t|` paths on `n` vertices, from closed forms.
    pub fn path_friendship(s: usize, k: usize, n: usize) -> Result<Self> {
        if s == 0 || k == 0 {
            return Err(Error::InvalidParams("s and k must be at least 1".into()));
        }
        if n < 2 * s + k + 1 {
            return Err(Error::InvalidParams(format!(
                "no path-friendship graph with s = {s}, k = {k} on {n} vertices"
            )));
        }
        let (s, k, n) = (s as i64, k as i64, n as i64);
        let d1 = 2 * s + k;
        Ok(DegreeSystem {
            n,
            m: n + s - 1,
            sum_sq: k + 4 * (n - k - 1) + d1 * d1,
            epsilon: 6 * s - (d1 - 2).pow(3) + k,
            spanning_trees: 3i64.pow(s as u32),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Multiplicity {
    /// Exactly one vertex of degree `d₁`; all others have degree below `d₁` and at most 3.
    Single,
    /// At least two vertices of degree `d₁ ≤ 3`.
    Multiple,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSystemSolution {
    pub d1: usize,
    pub multiplicity: Multiplicity,
    /// Vertices of degree 1, 2 and 3, counting the top vertices when `d₁ ≤ 3`.
    pub n1: Option<Rational64>,
    pub n2: Option<Rational64>,
    pub n3: Option<Rational64>,
    /// Vertices of degree `d₁`.
    pub top: Option<Rational64>,
    /// `N_H(C₃)` from the ε identity, when the counts exist.
    pub triangles: Option<Rational64>,
    pub feasible: bool,
    pub reason: Option<String>,
}

impl DegreeSystemSolution {
    pub fn count(&self, degree: usize) -> Option<Rational64> {
        match degree {
            1 => self.n1,
            2 => self.n2,
            3 => self.n3,
            d if d == self.d1 => self.top,
            _ => Some(Rational64::zero()),
        }
    }

    fn all_counts(&self) -> Vec<(usize, Rational64)> {
        let mut out: Vec<(usize, Rational64)> = (1..=3).filter_map(|d| self.count(d).map(|c| (d, c))).collect();
        if self.d1 > 3 {
            out.extend(self.top.map(|c| (self.d1, c)));
        }
        out
    }

    /// `Σ (i² − 3i + 2)·nᵢ` over all degrees.
    pub fn quadratic_form(&self) -> Option<Rational64> {
        if !self.counts_known() {
            return None;
        }
        Some(self.all_counts().into_iter().map(|(d, c)| c * Rational64::from((d * d) as i64 - 3 * d as i64 + 2)).sum())
    }

    fn counts_known(&self) -> bool {
        self.top.is_some() && (1..=3.min(self.d1)).all(|d| self.count(d).is_some())
    }
}

/// Solves the hypothesis `(d1, multiplicity)` against `sys`.
pub fn solve_degree_system(sys: &DegreeSystem, d1: usize, multiplicity: Multiplicity) -> Result<DegreeSystemSolution> {
    if d1 < 1 || d1 as i64 > sys.n - 1 {
        return Err(Error::InvalidParams(format!("d1 = {d1} outside 1..={}", sys.n - 1)));
    }
    if multiplicity == Multiplicity::Multiple && d1 > 3 {
        return Err(Error::InvalidParams(format!("a repeated maximum degree must be at most 3, got {d1}")));
    }
    let mut sol = DegreeSystemSolution {
        d1,
        multiplicity,
        n1: None,
        n2: None,
        n3: None,
        top: None,
        triangles: None,
        feasible: false,
        reason: None,
    };
    let rhs = [sys.n, 2 * sys.m, sys.sum_sq];
    let (unknowns, fixed): (Vec<usize>, i64) = match multiplicity {
        Multiplicity::Single => ((1..d1.min(4)).collect(), 1),
        Multiplicity::Multiple => ((1..=d1).collect(), 0),
    };
    let d = d1 as i64;
    let reduced: Vec<Rational64> = (0..3).map(|e| Rational64::from(rhs[e] - fixed * d.pow(e as u32))).collect();
    let values = match solve_moments(&unknowns, &reduced) {
        Ok(v) => v,
        Err(equation) => {
            sol.reason = Some(if d1 == 1 {
                format!("maximum degree 1 makes a connected H equal to K₂, but n = {}", sys.n)
            } else {
                format!("{} is violated by every solution of the other equations", EQUATION_NAMES[equation])
            });
            return Ok(sol);
        }
    };
    let r = |x: i64| Rational64::from(x);
    for (&deg, &v) in unknowns.iter().zip(&values) {
        match deg {
            1 => sol.n1 = Some(v),
            2 => sol.n2 = Some(v),
            3 => sol.n3 = Some(v),
            _ => unreachable!("unknown degrees are at most 3"),
        }
    }
    for deg in 1..=3usize {
        if deg > d1 && sol.count(deg).is_none() {
            match deg {
                2 => sol.n2 = Some(r(0)),
                3 => sol.n3 = Some(r(0)),
                _ => {}
            }
        }
    }
    sol.top = Some(match multiplicity {
        Multiplicity::Single => r(1),
        Multiplicity::Multiple => values[unknowns.len() - 1],
    });
    if d1 <= 3 && multiplicity == Multiplicity::Single {
        let slot = match d1 {
            1 => &mut sol.n1,
            2 => &mut sol.n2,
            _ => &mut sol.n3,
        };
        *slot = Some(r(1));
    }

    for (deg, c) in sol.all_counts() {
        if !c.is_integer() {
            sol.reason = Some(format!("n{deg} = {c} is not an integer"));
            return Ok(sol);
        }
        if c.is_negative() {
            sol.reason = Some(format!("n{deg} = {c} < 0"));
            return Ok(sol);
        }
    }
    if multiplicity == Multiplicity::Multiple && sol.top.unwrap() < r(2) {
        sol.reason =
            Some(format!("n{d1} = {} but this subcase needs at least two vertices of degree {d1}", sol.top.unwrap()));
        return Ok(sol);
    }
    let cubes: Rational64 = sol.all_counts().into_iter().map(|(deg, c)| c * r((deg as i64 - 2).pow(3))).sum();
    let triangles = (r(sys.epsilon) + cubes) / r(6);
    sol.triangles = Some(triangles);
    if !triangles.is_integer() {
        sol.reason = Some(format!("N_H(C₃) = {triangles} is not an integer"));
        return Ok(sol);
    }
    if triangles.is_negative() {
        sol.reason = Some(format!("N_H(C₃) = {triangles} < 0"));
        return Ok(sol);
    }
    // connected with m = n: one cycle, whose length is the spanning-tree count
    if sys.m == sys.n {
        let needed = if sys.spanning_trees == 3 { 1 } else { 0 };
        if triangles != r(needed) {
            sol.reason = Some(format!(
                "H is unicyclic with {} spanning trees, so N_H(C₃) = {needed}, not {triangles}",
                sys.spanning_trees
            ));
            return Ok(sol);
        }
    }
    sol.feasible = true;
    Ok(sol)
}

const EQUATION_NAMES: [&str; 3] = ["the vertex count", "the degree sum", "the sum of squared degrees"];

/// Solves `Σ_{d ∈ unknowns} d^e · x_d = rhs[e]` for `e = 0, 1, 2`. With fewer
/// than three unknowns the leading equations determine the solution and the
/// rest must agree; `Err(e)` names the first equation that does not.
fn solve_moments(unknowns: &[usize], rhs: &[Rational64]) -> std::result::Result<Vec<Rational64>, usize> {
    let u = unknowns.len();
    let mut a: Vec<Vec<Rational64>> = (0..u)
        .map(|e| {
            let mut row: Vec<Rational64> =
                unknowns.iter().map(|&d| Rational64::from((d as i64).pow(e as u32))).collect();
            row.push(rhs[e]);
            row
        })
        .collect();
    for col in 0..u {
        let pivot = (col..u).find(|&r| !a[r][col].is_zero()).expect("Vandermonde rows are independent");
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        let pivot = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x -= f * y;
                }
            }
        }
    }
    let x: Vec<Rational64> = a.iter().map(|row| row[u]).collect();
    for (e, &target) in rhs.iter().enumerate().skip(u) {
        let lhs: Rational64 =
            unknowns.iter().zip(&x).map(|(&d, &v)| v * Rational64::from((d as i64).pow(e as u32))).sum();
        if lhs != target {
            return Err(e);
        }
    }
    Ok(x)
}

/// Offset of the `d₁` hypothesis from the centre degree `2s + k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Hypothesis {
    MinusTwo,
    MinusOne,
    Exact,
    PlusOne,
}

impl Hypothesis {
    pub const ALL: [Hypothesis; 4] =
        [Hypothesis::MinusTwo, Hypothesis::MinusOne, Hypothesis::Exact, Hypothesis::PlusOne];

    pub fn offset(self) -> i64 {
        match self {
            Hypothesis::MinusTwo => -2,
            Hypothesis::MinusOne => -1,
            Hypothesis::Exact => 0,
            Hypothesis::PlusOne => 1,
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.offset() {
            0 => write!(f, "d1 = 2s+k"),
            o => write!(f, "d1 = 2s+k{o:+}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub hypothesis: Hypothesis,
    pub solution: DegreeSystemSolution,
}

impl CaseReport {
    pub fn survives(&self) -> bool {
        self.solution.feasible
    }
}

/// Evaluates every hypothesis `d₁ ∈ {2s+k−2, …, 2s+k+1}` with a unique
/// maximum-degree vertex, and the repeated-maximum subcases wherever `d₁ ≤ 3`.
pub fn run_case_analysis(s: usize, k: usize, n: usize) -> Result<Vec<CaseReport>> {
    let sys = DegreeSystem::path_friendship(s, k, n)?;
    let centre = (2 * s + k) as i64;
    let mut out = Vec::new();
    for h in Hypothesis::ALL {
        let d1 = centre + h.offset();
        if d1 < 1 || d1 > sys.n - 1 {
            continue;
        }
        let d1 = d1 as usize;
        let mut modes = vec![Multiplicity::Single];
        if d1 <= 3 {
            modes.push(Multiplicity::Multiple);
        }
        for mode in modes {
            out.push(CaseReport { hypothesis: h, solution: solve_degree_system(&sys, d1, mode)? });
        }
    }
    Ok(out)
}

/// `(s, k)` with `s, k ≥ 1` for which the hypothesis admits a repeated maximum
/// degree, i.e. `2s + k + offset ≤ 3`, derived by search.
pub fn repeated_maximum_pairs(h: Hypothesis) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for s in 1..=3usize {
        for k in 1..=4usize {
            if (2 * s + k) as i64 + h.offset() <= 3 {
                out.insert((s, k));
            }
        }
    }
    out
}

/// The repeated-maximum pairs as printed in the source argument, written `(k, s)`.
pub const PRINTED_PAIRS_MINUS_TWO: [(usize, usize); 4] = [(1, 1), (1, 2), (2, 1), (3, 1)];
/// Printed as `(s, k)`.
pub const PRINTED_PAIRS_MINUS_ONE: [(usize, usize); 2] = [(1, 1), (1, 2)];

/// Whether the printed lists agree with [`repeated_maximum_pairs`].
pub fn printed_pairs_agree() -> bool {
    let minus_two: BTreeSet<(usize, usize)> = PRINTED_PAIRS_MINUS_TWO.iter().map(|&(k, s)| (s, k)).collect();
    let minus_one: BTreeSet<(usize, usize)> = PRINTED_PAIRS_MINUS_ONE.iter().copied().collect();
    minus_two == repeated_maximum_pairs(Hypothesis::MinusTwo)
        && minus_one == repeated_maximum_pairs(Hypothesis::MinusOne)
}

/// `n₃ = 4s + 2k − 5` and friends for a unique `d₁ = 2s+k−2 > 3`.
pub fn minus_two_closed_form(s: i64, k: i64, n: i64) -> [i64; 4] {
    [
        4 * s + 3 * k - 7,
        n - 8 * s - 5 * k + 11,
        4 * s + 2 * k - 5,
        (-k * k + 6 * k) + (-4 * s * s + 13 * s - 9 - 4 * k * s),
    ]
}

/// Counts for a unique `d₁ = 2s+k−1 > 3`; the triangle entry is doubled.
pub fn minus_one_closed_form(s: i64, k: i64, n: i64) -> [i64; 4] {
    [2 * s + 2 * k - 3, n - 4 * s - 3 * k + 4, 2 * s + k - 2, -k * k + 5 * k - 6 - 4 * s * s - 4 * k * s + 12 * s]
}

/// `Σ (i² − 3i + 2)·nᵢ` of the target, `4s² + 4sk − 6s + k² − 3k + 2`.
pub fn quadratic_target(s: i64, k: i64) -> i64 {
    4 * s * s + 4 * s * k - 6 * s + k * k - 3 * k + 2
}

/// `6s − (−k + 8s³ + (k−2)[(k−2)² + 12s² + 6s(k−2)])`.
pub fn epsilon_closed_form(s: i64, k: i64) -> i64 {
    6 * s - (-k + 8 * s.pow(3) + (k - 2) * ((k - 2).pow(2) + 12 * s * s + 6 * s * (k - 2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: i64) -> Option<Rational64> {
        Some(Rational64::from(x))
    }

    #[test]
    fn exact_hypothesis_recovers_target_degrees() {
        for (s, k, n) in [(1, 1, 4), (2, 3, 12), (3, 2, 10), (1, 5, 9)] {
            let sys = DegreeSystem::path_friendship(s, k, n).unwrap();
            let sol = solve_degree_system(&sys, 2 * s + k, Multiplicity::Single).unwrap();
            assert!(sol.feasible, "{sol:?}");
            let (s, k, n) = (s as i64, k as i64, n as i64);
            if 2 * s + k > 3 {
                assert_eq!((sol.n1, sol.n2, sol.n3), (r(k), r(n - k - 1), r(0)));
            }
            assert_eq!(sol.triangles, r(s));
            assert_eq!(sol.quadratic_form(), r(quadratic_target(s, k)));
        }
    }

    #[test]
    fn plus_one_is_negative() {
        let sys = DegreeSystem::path_friendship(2, 3, 11).unwrap();
        let sol = solve_degree_system(&sys, 8, Multiplicity::Single).unwrap();
        assert_eq!(sol.n3, r(-2 * 2 - 3 + 1));
        assert!(!sol.feasible);
    }

    #[test]
    fn minus_two_matches_closed_form() {
        for s in 1..5i64 {
            for k in 1..8i64 {
                if 2 * s + k - 2 <= 3 {
                    continue;
                }
                let n = 2 * s + k + 1 + 3;
                let sys = DegreeSystem::path_friendship(s as usize, k as usize, n as usize).unwrap();
                let sol = solve_degree_system(&sys, (2 * s + k - 2) as usize, Multiplicity::Single).unwrap();
                let [n1, n2, n3, tri] = minus_two_closed_form(s, k, n);
                assert_eq!((sol.n1, sol.n2, sol.n3), (r(n1), r(n2), r(n3)));
                if sol.n1.unwrap() >= Rational64::zero() && sol.n2.unwrap() >= Rational64::zero() {
                    assert_eq!(sol.triangles, r(tri));
                }
                assert!(!sol.feasible);
            }
        }
    }

    #[test]
    fn repeated_degree_three_gives_minus_two_triangles() {
        // two triangles, one path
        let sys = DegreeSystem::path_friendship(2, 1, 12).unwrap();
        let sol = solve_degree_system(&sys, 3, Multiplicity::Multiple).unwrap();
        assert_eq!((sol.n1, sol.n2, sol.n3), (r(4), r(2), r(6)));
        assert_eq!(sol.triangles, r(-2));
        assert!(!sol.feasible);
    }

    #[test]
    fn epsilon_forms_agree() {
        for s in 1..6 {
            for k in 1..6 {
                let sys = DegreeSystem::path_friendship(s, k, 2 * s + k + 1).unwrap();
                assert_eq!(sys.epsilon, epsilon_closed_form(s as i64, k as i64));
            }
        }
    }

    #[test]
    fn printed_pairs_are_the_derived_pairs() {
        assert!(printed_pairs_agree());
        assert_eq!(repeated_maximum_pairs(Hypothesis::MinusTwo).len(), 4);
        assert!(repeated_maximum_pairs(Hypothesis::Exact).contains(&(1, 1)));
    }

    #[test]
    fn single_survivor() {
        for s in 1..=5usize {
            for k in 1..=10usize {
                if 2 * s + k > 12 {
                    continue;
                }
                for n in 2 * s + k + 1..=2 * s + k + 8 {
                    let cases = run_case_analysis(s, k, n).unwrap();
                    let alive: Vec<_> = cases.iter().filter(|c| c.survives()).collect();
                    assert_eq!(alive.len(), 1, "s={s} k={k} n={n}: {alive:?}");
                    assert_eq!(alive[0].hypothesis, Hypothesis::Exact);
                }
            }
        }
    }

    #[test]
    fn domain_errors() {
        let sys = DegreeSystem::path_friendship(1, 1, 4).unwrap();
        assert!(solve_degree_system(&sys, 0, Multiplicity::Single).is_err());
        assert!(solve_degree_system(&sys, 4, Multiplicity::Single).is_err());
        assert!(solve_degree_system(&sys, 4, Multiplicity::Multiple).is_err());
        assert!(DegreeSystem::path_friendship(2, 2, 5).is_err());
    }
}
