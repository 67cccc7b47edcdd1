use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;
use thiserror::Error;

use super::{theorem1_check, theorem2_check, GParams};
use crate::tolerance;

const MAX_REAL: f64 = std::f64::consts::FRAC_1_SQRT_2;
const MAX_ATTEMPTS: usize = 64;

/// Which parameter region to draw from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Region {
    /// Revocation cases 1–4, drawn round-robin.
    Theorem1,
    /// Reconstruction cases 1–8, drawn round-robin.
    Theorem2,
    /// Points satisfying both predicates.
    Both,
    /// Uniform on the unit sphere of `C⁴`.
    Unconstrained,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SampleError {
    #[error("sample count must be at least 1")]
    ZeroCount,
    #[error("unknown case {case} (valid: 1..={max})")]
    UnknownCase { case: u8, max: u8 },
    #[error("no sample satisfying the {0:?} predicate was found")]
    EmptyRegion(Region),
}

fn imaginary(sign: f64, real: f64) -> Complex64 {
    Complex64::new(0.0, sign * (0.5 - real * real).max(0.0).sqrt())
}

/// Revocation case point from free reals `x, y ∈ [−1/√2, 1/√2]` and signs
/// `s, t ∈ {±1}`: the real pair is `(x, y)` and each partner imaginary
/// coefficient has modulus `√(1/2 − real²)`.
pub fn theorem1_case_point(
    case: u8,
    x: f64,
    y: f64,
    s: f64,
    t: f64,
) -> Result<GParams, SampleError> {
    let (u, v) = (Complex64::new(x, 0.0), Complex64::new(y, 0.0));
    let (iu, iv) = (imaginary(s, x), imaginary(t, y));
    let [a, b, c, d] = match case {
        1 => [u, iu, v, iv],
        2 => [u, iu, iv, v],
        3 => [iu, u, v, iv],
        4 => [iu, u, iv, v],
        _ => return Err(SampleError::UnknownCase { case, max: 4 }),
    };
    Ok(GParams::new(a, b, c, d).expect("case parametrization is normalized"))
}

/// Reconstruction case point from one free real `x` and sign `s`.
pub fn theorem2_case_point(case: u8, x: f64, s: f64) -> Result<GParams, SampleError> {
    let r = Complex64::new(x, 0.0);
    let m = imaginary(s, x);
    let [a, b, c, d] = match case {
        1 => [r, m, r, m],
        2 => [r, m, -m, -r],
        3 => [m, r, r, m],
        4 => [m, r, -m, -r],
        5 => [r, m, -r, -m],
        6 => [r, m, m, r],
        7 => [m, r, -r, -m],
        8 => [m, r, m, r],
        _ => return Err(SampleError::UnknownCase { case, max: 8 }),
    };
    Ok(GParams::new(a, b, c, d).expect("case parametrization is normalized"))
}

fn sign<R: Rng>(rng: &mut R) -> f64 {
    if rng.random::<bool>() {
        1.0
    } else {
        -1.0
    }
}

pub fn sample_theorem1_case<R: Rng>(case: u8, rng: &mut R) -> Result<GParams, SampleError> {
    let x = rng.random_range(-MAX_REAL..=MAX_REAL);
    let y = rng.random_range(-MAX_REAL..=MAX_REAL);
    let (s, t) = (sign(rng), sign(rng));
    theorem1_case_point(case, x, y, s, t)
}

pub fn sample_theorem2_case<R: Rng>(case: u8, rng: &mut R) -> Result<GParams, SampleError> {
    let x = rng.random_range(-MAX_REAL..=MAX_REAL);
    let s = sign(rng);
    theorem2_case_point(case, x, s)
}

fn unconstrained<R: Rng>(rng: &mut R) -> GParams {
    let mut draw = || Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
    let v = [draw(), draw(), draw(), draw()];
    GParams::normalized(v[0], v[1], v[2], v[3]).expect("gaussian draw is nonzero")
}

/// Deterministic draw of `count` parameter points from `region`; every point
/// is re-checked against the requested predicate.
pub fn sample_params(region: Region, count: usize, seed: u64) -> Result<Vec<GParams>, SampleError> {
    if count == 0 {
        return Err(SampleError::ZeroCount);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tol = tolerance::CONSTRUCTION;
    (0..count)
        .map(|i| {
            for _ in 0..MAX_ATTEMPTS {
                let (p, ok) = match region {
                    Region::Theorem1 => {
                        let p = sample_theorem1_case((i % 4) as u8 + 1, &mut rng)?;
                        (p, theorem1_check(&p, tol).revocable())
                    }
                    Region::Theorem2 => {
                        let p = sample_theorem2_case((i % 8) as u8 + 1, &mut rng)?;
                        (p, theorem2_check(&p, tol).reconstructible())
                    }
                    Region::Both => {
                        let p = sample_theorem2_case((i % 8) as u8 + 1, &mut rng)?;
                        let ok = theorem1_check(&p, tol).revocable()
                            && theorem2_check(&p, tol).reconstructible();
                        (p, ok)
                    }
                    Region::Unconstrained => (unconstrained(&mut rng), true),
                };
                if ok {
                    return Ok(p);
                }
            }
            Err(SampleError::EmptyRegion(region))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_region_first_sample_is_symmetric() {
        let p = sample_params(Region::Both, 1, 7).unwrap()[0];
        assert!((p.a() - p.c()).norm() < 1e-15);
        assert!((p.b() - p.d()).norm() < 1e-15);
        assert!(theorem2_check(&p, 1e-12).cases[0].satisfied);
    }

    #[test]
    fn theorem1_samples_are_revocable() {
        let ps = sample_params(Region::Theorem1, 100, 1).unwrap();
        assert_eq!(ps.len(), 100);
        for p in &ps {
            assert!(theorem1_check(p, 1e-12).revocable());
        }
    }

    #[test]
    fn unconstrained_samples_are_normalized() {
        let p = sample_params(Region::Unconstrained, 1, 42).unwrap()[0];
        assert!((p.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sampling_is_deterministic() {
        assert_eq!(
            sample_params(Region::Theorem2, 16, 9).unwrap(),
            sample_params(Region::Theorem2, 16, 9).unwrap()
        );
        assert_ne!(
            sample_params(Region::Theorem2, 16, 9).unwrap(),
            sample_params(Region::Theorem2, 16, 10).unwrap()
        );
    }

    #[test]
    fn invalid_requests() {
        assert_eq!(
            sample_params(Region::Theorem1, 0, 0),
            Err(SampleError::ZeroCount)
        );
        assert_eq!(
            theorem1_case_point(5, 0.0, 0.0, 1.0, 1.0),
            Err(SampleError::UnknownCase { case: 5, max: 4 })
        );
        assert_eq!(
            theorem2_case_point(9, 0.0, 1.0),
            Err(SampleError::UnknownCase { case: 9, max: 8 })
        );
    }

    #[test]
    fn case_points_satisfy_their_case() {
        for case in 1..=4u8 {
            let p = theorem1_case_point(case, 0.3, -0.6, 1.0, -1.0).unwrap();
            assert_eq!(
                theorem1_check(&p, 1e-12).satisfied_cases(),
                vec![case],
                "case {case}"
            );
        }
        for case in 1..=8u8 {
            let p = theorem2_case_point(case, 0.4, -1.0).unwrap();
            assert!(
                theorem2_check(&p, 1e-12).satisfied_cases().contains(&case),
                "case {case}"
            );
        }
    }
}
