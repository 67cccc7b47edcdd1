//! Case-by-case parameter predicates for revocation (four cases) and
//! reconstruction at Charlie (eight cases).
//!
//! Every condition is evaluated and reported with its residual; nothing here
//! fails. A coefficient counts as real when `|Im| < tol` and as imaginary when
//! `|Re| < tol`, so zero is both. The inequalities `x² ≤ 1/2` are closed and
//! points on `x² = 1/2` are flagged as boundary.

use num_complex::Complex64;
use serde::Serialize;

use super::GParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Coefficient {
    A,
    B,
    C,
    D,
}

impl Coefficient {
    fn of(self, p: &GParams) -> Complex64 {
        match self {
            Coefficient::A => p.a(),
            Coefficient::B => p.b(),
            Coefficient::C => p.c(),
            Coefficient::D => p.d(),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Coefficient::A => "a",
            Coefficient::B => "b",
            Coefficient::C => "c",
            Coefficient::D => "d",
        }
    }
}

use Coefficient::{A, B, C, D};

/// One evaluated condition. `residual` is signed where the condition is an
/// equality of reals (`rhs − lhs`) and non-negative otherwise.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Condition {
    pub name: String,
    pub residual: f64,
    pub satisfied: bool,
    pub boundary: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseCheck {
    pub case: u8,
    pub satisfied: bool,
    pub boundary: bool,
    pub conditions: Vec<Condition>,
}

/// Reality pattern shared by a revocation case and two reconstruction cases:
/// each `(real, imaginary)` pair obeys `|imaginary|² = 1/2 − real²`.
struct Pattern {
    pairs: [(Coefficient, Coefficient); 2],
}

const PATTERNS: [Pattern; 4] = [
    Pattern {
        pairs: [(A, B), (C, D)],
    },
    Pattern {
        pairs: [(A, B), (D, C)],
    },
    Pattern {
        pairs: [(B, A), (C, D)],
    },
    Pattern {
        pairs: [(B, A), (D, C)],
    },
];

/// Equalities `x = s·y` of each reconstruction case.
const EQUALITIES: [[(Coefficient, f64, Coefficient); 2]; 8] = [
    [(A, 1.0, C), (B, 1.0, D)],
    [(A, -1.0, D), (B, -1.0, C)],
    [(B, 1.0, C), (A, 1.0, D)],
    [(B, -1.0, D), (A, -1.0, C)],
    [(B, -1.0, D), (A, -1.0, C)],
    [(B, 1.0, C), (A, 1.0, D)],
    [(A, -1.0, D), (B, -1.0, C)],
    [(A, 1.0, C), (B, 1.0, D)],
];

fn pattern_conditions(pattern: &Pattern, p: &GParams, tol: f64) -> Vec<Condition> {
    let mut out = Vec::with_capacity(8);
    for &(real, _) in &pattern.pairs {
        let r = real.of(p).im.abs();
        out.push(Condition {
            name: format!("Im({})=0", real.name()),
            residual: r,
            satisfied: r < tol,
            boundary: false,
        });
    }
    for &(_, imag) in &pattern.pairs {
        let r = imag.of(p).re.abs();
        out.push(Condition {
            name: format!("Re({})=0", imag.name()),
            residual: r,
            satisfied: r < tol,
            boundary: false,
        });
    }
    for &(real, _) in &pattern.pairs {
        let sq = real.of(p).re.powi(2);
        let r = (sq - 0.5).max(0.0);
        out.push(Condition {
            name: format!("{}^2<=1/2", real.name()),
            residual: r,
            satisfied: r <= tol,
            boundary: (0.5 - sq).abs() < tol,
        });
    }
    for &(real, imag) in &pattern.pairs {
        let r = (0.5 - real.of(p).re.powi(2)) - imag.of(p).norm_sqr();
        out.push(Condition {
            name: format!("|{}|^2=1/2-{}^2", imag.name(), real.name()),
            residual: r,
            satisfied: r.abs() < tol,
            boundary: false,
        });
    }
    out
}

fn case_check(case: u8, conditions: Vec<Condition>) -> CaseCheck {
    CaseCheck {
        case,
        satisfied: conditions.iter().all(|c| c.satisfied),
        boundary: conditions.iter().any(|c| c.boundary),
        conditions,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Theorem1Report {
    pub cases: Vec<CaseCheck>,
}

impl Theorem1Report {
    pub fn satisfied_cases(&self) -> Vec<u8> {
        self.cases
            .iter()
            .filter(|c| c.satisfied)
            .map(|c| c.case)
            .collect()
    }

    pub fn revocable(&self) -> bool {
        self.cases.iter().any(|c| c.satisfied)
    }
}

/// Conditions on `λ₁ = a+b−c+d`, `λ₂ = a+b+c−d` under which the single
/// closed-form reconstruction correction `(1/√2)(−λ₁I + λ₂σx)` applies.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LambdaCheck {
    pub lambda1: Complex64,
    pub lambda2: Complex64,
    pub re_lambda1: f64,
    pub im_lambda2: f64,
    /// `|λ₁|² + |λ₂|² − 2`.
    pub norm_residual: f64,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Theorem2Report {
    pub cases: Vec<CaseCheck>,
    pub lambda: LambdaCheck,
}

impl Theorem2Report {
    pub fn satisfied_cases(&self) -> Vec<u8> {
        self.cases
            .iter()
            .filter(|c| c.satisfied)
            .map(|c| c.case)
            .collect()
    }

    pub fn reconstructible(&self) -> bool {
        self.cases.iter().any(|c| c.satisfied)
    }
}

/// Evaluates the four revocation cases.
pub fn theorem1_check(p: &GParams, tol: f64) -> Theorem1Report {
    let cases = PATTERNS
        .iter()
        .enumerate()
        .map(|(k, pattern)| case_check(k as u8 + 1, pattern_conditions(pattern, p, tol)))
        .collect();
    Theorem1Report { cases }
}

/// Evaluates the eight reconstruction cases as listed, without merging
/// cases that repeat a condition pattern.
pub fn theorem2_check(p: &GParams, tol: f64) -> Theorem2Report {
    let cases = EQUALITIES
        .iter()
        .enumerate()
        .map(|(k, equalities)| {
            let mut conditions = Vec::with_capacity(10);
            for &(x, sign, y) in equalities {
                let r = (x.of(p) - sign * y.of(p)).norm();
                let op = if sign > 0.0 { "" } else { "-" };
                conditions.push(Condition {
                    name: format!("{}={}{}", x.name(), op, y.name()),
                    residual: r,
                    satisfied: r < tol,
                    boundary: false,
                });
            }
            conditions.extend(pattern_conditions(&PATTERNS[k % 4], p, tol));
            case_check(k as u8 + 1, conditions)
        })
        .collect();

    let (l1, l2) = (p.lambda1(), p.lambda2());
    let norm_residual = l1.norm_sqr() + l2.norm_sqr() - 2.0;
    let lambda = LambdaCheck {
        lambda1: l1,
        lambda2: l2,
        re_lambda1: l1.re,
        im_lambda2: l2.im,
        norm_residual,
        satisfied: l1.re.abs() < tol && l2.im.abs() < tol && norm_residual.abs() < tol,
    };
    Theorem2Report { cases, lambda }
}

/// Both predicates at once.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdmissibilityReport {
    pub theorem1: Theorem1Report,
    pub theorem2: Theorem2Report,
}

impl AdmissibilityReport {
    pub fn theorem1_cases(&self) -> Vec<u8> {
        self.theorem1.satisfied_cases()
    }

    pub fn theorem2_cases(&self) -> Vec<u8> {
        self.theorem2.satisfied_cases()
    }

    pub fn revocable(&self) -> bool {
        self.theorem1.revocable()
    }

    pub fn reconstructible(&self) -> bool {
        self.theorem2.reconstructible()
    }
}

pub fn admissibility(p: &GParams, tol: f64) -> AdmissibilityReport {
    AdmissibilityReport {
        theorem1: theorem1_check(p, tol),
        theorem2: theorem2_check(p, tol),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;
    const H: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn params(v: [(f64, f64); 4]) -> GParams {
        GParams::new(
            c(v[0].0, v[0].1),
            c(v[1].0, v[1].1),
            c(v[2].0, v[2].1),
            c(v[3].0, v[3].1),
        )
        .unwrap()
    }

    #[test]
    fn reference_point_is_revocable_via_case_one() {
        let r = theorem1_check(&GParams::reference_point(), TOL);
        assert_eq!(r.satisfied_cases(), vec![1]);
        assert!(r.revocable());
    }

    #[test]
    fn a_only_is_not_revocable() {
        let r = theorem1_check(
            &params([(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0)]),
            TOL,
        );
        assert!(!r.revocable());
        let case1 = &r.cases[0];
        let c_cond = case1
            .conditions
            .iter()
            .find(|c| c.name == "|b|^2=1/2-a^2")
            .unwrap();
        assert!((c_cond.residual + 0.5).abs() < 1e-15);
        assert!(!c_cond.satisfied);
    }

    #[test]
    fn boundary_point_is_revocable_and_flagged() {
        let p = params([(H, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, H)]);
        let r = theorem1_check(&p, TOL);
        assert!(r.cases[0].satisfied);
        assert!(r.cases[0].boundary);
        assert!(r.revocable());
    }

    #[test]
    fn reference_point_reconstruction() {
        let r = theorem2_check(&GParams::reference_point(), TOL);
        assert!(r.satisfied_cases().contains(&1));
        assert!(r.reconstructible());
        assert!((r.lambda.lambda1 - c(0.0, 1.0)).norm() < 1e-15);
        assert!((r.lambda.lambda2 - c(1.0, 0.0)).norm() < 1e-15);
        assert!(r.lambda.norm_residual.abs() < 1e-15);
        assert!(r.lambda.satisfied);
    }

    #[test]
    fn boundary_point_is_not_reconstructible() {
        let r = theorem2_check(&params([(H, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, H)]), TOL);
        assert!(r.satisfied_cases().is_empty());
        assert!(!r.reconstructible());
        assert!(r.lambda.im_lambda2.abs() > 0.5);
        assert!(!r.lambda.satisfied);
    }

    #[test]
    fn antisymmetric_point_matches_case_two() {
        let p = params([(0.5, 0.0), (0.0, 0.5), (0.0, -0.5), (-0.5, 0.0)]);
        let r = theorem2_check(&p, TOL);
        assert!(r.cases[1].satisfied, "{:?}", r.cases[1]);
    }

    #[test]
    fn zero_counts_as_real_and_imaginary() {
        // b = c = 0 satisfies both the "real" and "imaginary" requirements.
        let p = params([(H, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, H)]);
        let r = theorem1_check(&p, TOL);
        let names: Vec<&str> = r.cases[0]
            .conditions
            .iter()
            .map(|c| c.name.as_str())
            .collect();
        assert!(names.contains(&"Re(b)=0"));
        assert!(r.cases[0].conditions.iter().all(|c| c.satisfied));
    }

    #[test]
    fn exact_points_survive_tighter_tolerance() {
        let p = GParams::reference_point();
        for tol in [1e-12, 5e-13, 1e-15, 1e-20] {
            assert!(theorem1_check(&p, tol).cases[0].satisfied);
            assert!(theorem2_check(&p, tol).cases[0].satisfied);
        }
    }
}
