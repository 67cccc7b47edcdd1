#![allow(dead_code)]

use proptest::prelude::*;
use qss_core::resource::{theorem1_case_point, theorem2_case_point, GParams, Secret};
use qss_core::Complex64;

const EDGE: f64 = std::f64::consts::FRAC_1_SQRT_2;

fn component() -> impl Strategy<Value = f64> {
    -1.0f64..1.0
}

fn complex() -> impl Strategy<Value = Complex64> {
    (component(), component()).prop_map(|(re, im)| Complex64::new(re, im))
}

pub fn params() -> impl Strategy<Value = GParams> {
    [complex(), complex(), complex(), complex()]
        .prop_filter("nonzero", |v| {
            v.iter().map(|c| c.norm_sqr()).sum::<f64>() > 1e-3
        })
        .prop_map(|v| GParams::normalized(v[0], v[1], v[2], v[3]).unwrap())
}

pub fn secret() -> impl Strategy<Value = Secret> {
    (
        0.0f64..std::f64::consts::FRAC_PI_2,
        0.0f64..std::f64::consts::TAU,
        0.0f64..std::f64::consts::TAU,
    )
        .prop_map(|(theta, phi, g)| Secret::from_angles(theta, phi).with_global_phase(g))
}

fn sign() -> impl Strategy<Value = f64> {
    prop_oneof![Just(1.0), Just(-1.0)]
}

pub fn theorem1_params() -> impl Strategy<Value = (u8, GParams)> {
    (1u8..=4, -EDGE..=EDGE, -EDGE..=EDGE, sign(), sign())
        .prop_map(|(case, x, y, s, t)| (case, theorem1_case_point(case, x, y, s, t).unwrap()))
}

pub fn theorem2_params() -> impl Strategy<Value = (u8, GParams)> {
    (1u8..=8, -EDGE..=EDGE, sign())
        .prop_map(|(case, x, s)| (case, theorem2_case_point(case, x, s).unwrap()))
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
