use serde::Serialize;

use super::{branch_projection, solve_flow};
use crate::branch::{Branch, Flow};
use crate::qstate::StateError;
use crate::resource::{
    sample_params, theorem1_case_point, theorem1_check, theorem2_case_point, theorem2_check,
    GParams, Region, SampleError, Secret,
};
use crate::tolerance;

/// Default lattice resolution per free real parameter.
pub const DEFAULT_GRID: usize = 41;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Theorem {
    /// Revocation at Alice.
    #[serde(rename = "1")]
    One,
    /// Reconstruction at Charlie.
    #[serde(rename = "2")]
    Two,
}

impl Theorem {
    pub fn flow(self) -> Flow {
        match self {
            Theorem::One => Flow::Revocation,
            Theorem::Two => Flow::ReconstructionAtCharlie,
        }
    }

    pub fn region(self) -> Region {
        match self {
            Theorem::One => Region::Theorem1,
            Theorem::Two => Region::Theorem2,
        }
    }

    fn cases(self, p: &GParams) -> Vec<u8> {
        let tol = tolerance::CONSTRUCTION;
        match self {
            Theorem::One => theorem1_check(p, tol).satisfied_cases(),
            Theorem::Two => theorem2_check(p, tol).satisfied_cases(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PointClass {
    /// Predicate and all-branch solvability agree.
    Consistent,
    /// Predicate holds but some branch has no exact correction.
    PredicateOnly,
    /// Every branch is solvable but the predicate fails.
    SolvableOnly,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointResult {
    pub index: usize,
    pub params: GParams,
    pub cases: Vec<u8>,
    pub predicate: bool,
    pub solvable: bool,
    pub class: PointClass,
    pub unsolvable_branches: Vec<Branch>,
    pub max_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub index: usize,
    pub class: PointClass,
    pub params: GParams,
    pub unsolvable_branches: Vec<Branch>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegionReport {
    pub theorem: Theorem,
    pub flow: Flow,
    pub total: usize,
    pub consistent: usize,
    pub predicate_only: usize,
    pub solvable_only: usize,
    /// Consistent points where both predicate and solvability hold.
    pub admissible: usize,
    pub counterexamples: Vec<Counterexample>,
    pub points: Vec<PointResult>,
}

/// Classifies each point by comparing the predicate against an all-branch
/// oracle solve of the theorem's flow. Output is ordered by point index.
pub fn verify_theorem(theorem: Theorem, points: &[GParams]) -> Result<RegionReport, StateError> {
    let flow = theorem.flow();
    let mut results = Vec::with_capacity(points.len());
    for (index, p) in points.iter().enumerate() {
        let cases = theorem.cases(p);
        let predicate = !cases.is_empty();
        let solved = solve_flow(p, flow)?;
        let unsolvable_branches: Vec<Branch> = solved
            .iter()
            .filter(|(_, r)| !r.is_solvable())
            .map(|(b, _)| *b)
            .collect();
        let max_residual = solved.iter().map(|(_, r)| r.residual).fold(0.0, f64::max);
        let solvable = unsolvable_branches.is_empty();
        let class = match (predicate, solvable) {
            (true, false) => PointClass::PredicateOnly,
            (false, true) => PointClass::SolvableOnly,
            _ => PointClass::Consistent,
        };
        results.push(PointResult {
            index,
            params: *p,
            cases,
            predicate,
            solvable,
            class,
            unsolvable_branches,
            max_residual,
        });
    }
    let count = |c: PointClass| results.iter().filter(|r| r.class == c).count();
    Ok(RegionReport {
        theorem,
        flow,
        total: results.len(),
        consistent: count(PointClass::Consistent),
        predicate_only: count(PointClass::PredicateOnly),
        solvable_only: count(PointClass::SolvableOnly),
        admissible: results.iter().filter(|r| r.predicate && r.solvable).count(),
        counterexamples: results
            .iter()
            .filter(|r| r.class != PointClass::Consistent)
            .map(|r| Counterexample {
                index: r.index,
                class: r.class,
                params: r.params,
                unsolvable_branches: r.unsolvable_branches.clone(),
            })
            .collect(),
        points: results,
    })
}

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error(transparent)]
    Sample(#[from] SampleError),
    #[error(transparent)]
    State(#[from] StateError),
}

/// [`verify_theorem`] over `count` seeded samples from `region`.
pub fn verify_theorem_sampled(
    theorem: Theorem,
    region: Region,
    count: usize,
    seed: u64,
) -> Result<RegionReport, SweepError> {
    let points = sample_params(region, count, seed)?;
    Ok(verify_theorem(theorem, &points)?)
}

fn lattice(n: usize) -> Vec<f64> {
    let max = std::f64::consts::FRAC_1_SQRT_2;
    match n {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => (0..n)
            .map(|i| -max + 2.0 * max * i as f64 / (n - 1) as f64)
            .collect(),
    }
}

/// `n × n` lattice over the two free reals of a revocation case, times the four
/// sign choices of the imaginary partners: `4n²` points, endpoints included.
pub fn theorem1_case_grid(case: u8, n: usize) -> Result<Vec<GParams>, SampleError> {
    let xs = lattice(n);
    let mut out = Vec::with_capacity(4 * n * n);
    for &x in &xs {
        for &y in &xs {
            for (s, t) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
                out.push(theorem1_case_point(case, x, y, s, t)?);
            }
        }
    }
    if out.is_empty() {
        theorem1_case_point(case, 0.0, 0.0, 1.0, 1.0)?;
    }
    Ok(out)
}

/// `n` lattice points times two signs for a reconstruction case.
pub fn theorem2_case_grid(case: u8, n: usize) -> Result<Vec<GParams>, SampleError> {
    let mut out = Vec::with_capacity(2 * n);
    for x in lattice(n) {
        for s in [1.0, -1.0] {
            out.push(theorem2_case_point(case, x, s)?);
        }
    }
    if out.is_empty() {
        theorem2_case_point(case, 0.0, 1.0)?;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BranchProbability {
    pub branch: Branch,
    pub probability: f64,
}

/// Joint probability of each of the sixteen branches of `flow`.
pub fn branch_probability_table(
    params: &GParams,
    secret: &Secret,
    flow: Flow,
) -> Result<Vec<BranchProbability>, StateError> {
    Branch::all()
        .map(|branch| {
            let probability = branch_projection(params, secret, flow, branch)?.probability();
            Ok(BranchProbability {
                branch,
                probability,
            })
        })
        .collect()
}
