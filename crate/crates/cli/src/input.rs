use num_complex::Complex64;
use qss_core::resource::{GParams, Secret};

/// Largest deviation of the input norm from 1 that is silently repaired.
const AUTO_NORMALIZE: f64 = 1e-6;

#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

/// Parses `re,im,re,im,...` into `n` complex numbers.
pub fn parse_complex_list(flag: &str, raw: &str, n: usize) -> anyhow::Result<Vec<Complex64>> {
    let reals = raw
        .split(',')
        .map(|s| {
            let v: f64 = s
                .trim()
                .parse()
                .map_err(|_| usage(format!("{flag}: `{s}` is not a number")))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(usage(format!("{flag}: `{s}` is not finite")))
            }
        })
        .collect::<anyhow::Result<Vec<f64>>>()?;
    if reals.len() != 2 * n {
        return Err(usage(format!(
            "{flag}: expected {} comma-separated reals, got {}",
            2 * n,
            reals.len()
        )));
    }
    Ok(reals
        .chunks(2)
        .map(|p| Complex64::new(p[0], p[1]))
        .collect())
}

/// Returns the normalized vector, warning on stderr when it had to be rescaled.
fn checked_normalize(flag: &str, v: &[Complex64]) -> anyhow::Result<Vec<Complex64>> {
    let norm = v.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
    let off = (norm - 1.0).abs();
    if off >= AUTO_NORMALIZE {
        return Err(usage(format!("{flag}: norm is {norm}, not 1")));
    }
    if off > qss_core::tolerance::CONSTRUCTION {
        eprintln!("warning: {flag} off by {off:e} from unit norm; normalizing");
    }
    Ok(v.iter().map(|c| c / norm).collect())
}

pub fn parse_params(raw: &str) -> anyhow::Result<GParams> {
    let v = checked_normalize("--params", &parse_complex_list("--params", raw, 4)?)?;
    GParams::normalized(v[0], v[1], v[2], v[3]).map_err(|e| usage(format!("--params: {e}")))
}

pub fn parse_secret(raw: &str) -> anyhow::Result<Secret> {
    let v = checked_normalize("--secret", &parse_complex_list("--secret", raw, 2)?)?;
    Secret::normalized(v[0], v[1]).map_err(|e| usage(format!("--secret: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_reference_point() {
        let p = parse_params("0.5,0,0,0.5,0.5,0,0,0.5").unwrap();
        assert_eq!(p, GParams::reference_point());
    }

    #[test]
    fn repairs_small_norm_errors_only() {
        let s = parse_secret("1.0000001,0,0,0").unwrap();
        assert_eq!(s, Secret::zero());
        assert!(parse_secret("1.1,0,0,0").is_err());
        assert!(parse_secret("1,0,0").is_err());
        assert!(parse_secret("1,0,x,0").is_err());
        assert!(parse_secret("nan,0,0,0").is_err());
    }
}
