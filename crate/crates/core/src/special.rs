//! Gamma and digamma on the positive real axis, and the sharp Pitt constant.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

// Lanczos approximation, g = 7, nine terms.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn lanczos(x: f64) -> f64 {
    // Valid for x >= 0.5.
    let x = x - 1.0;
    let series = LANCZOS_COEF[1..]
        .iter()
        .enumerate()
        .fold(LANCZOS_COEF[0], |acc, (i, c)| acc + c / (x + i as f64 + 1.0));
    let t = x + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * series
}

/// `Γ(x)` for `x > 0`. Relative error around 1e-15 on `(0, 50]`.
pub fn gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::DomainError(x));
    }
    if x < 0.5 {
        // Reflection: Γ(x) Γ(1 − x) = π / sin(πx).
        Ok(PI / ((PI * x).sin() * lanczos(1.0 - x)))
    } else {
        Ok(lanczos(x))
    }
}

/// `ψ(x) = Γ'(x)/Γ(x)` for `x > 0`.
///
/// Upward recurrence `ψ(x) = ψ(x + 1) − 1/x` until `x >= 10`, then the
/// asymptotic series in `1/x²`.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::DomainError(x));
    }
    let mut x = x;
    let mut shift = 0.0;
    while x < 10.0 {
        shift -= x.recip();
        x += 1.0;
    }
    let r = (x * x).recip();
    // B_2k / 2k for k = 1..7, Horner in r.
    let tail = r
        * (1.0 / 12.0
            - r * (1.0 / 120.0
                - r * (1.0 / 252.0
                    - r * (1.0 / 240.0
                        - r * (1.0 / 132.0 - r * (691.0 / 32_760.0 - r / 12.0))))));
    Ok(shift + x.ln() - 0.5 / x - tail)
}

/// The sharp constant `M_λ = Γ²((1−λ)/4) / Γ²((1+λ)/4)` in Pitt's inequality.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PittConstant {
    pub lambda: f64,
    pub value: f64,
}

pub fn pitt_constant(lambda: f64) -> Result<PittConstant> {
    if !(0.0..1.0).contains(&lambda) {
        return Err(Error::LambdaOutOfRange(lambda));
    }
    let ratio = gamma((1.0 - lambda) / 4.0)? / gamma((1.0 + lambda) / 4.0)?;
    Ok(PittConstant { lambda, value: ratio * ratio })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    // Reference values from a 30-digit arbitrary precision evaluation.
    #[test]
    fn gamma_reference_values() {
        let cases = [
            (0.5, PI.sqrt()),
            (5.0, 24.0),
            (0.25, 3.625_609_908_221_908_3),
            (0.125, 7.533_941_598_797_612),
            (0.375, 2.370_436_184_416_601),
            (0.001, 999.423_772_484_595_5),
            (7.3, 1_271.423_633_663_909_3),
            (33.7, 3.032_162_654_739_841_6e36),
            (50.0, 6.082_818_640_342_675_6e62),
        ];
        for (x, expected) in cases {
            let got = gamma(x).unwrap();
            assert!(rel(got, expected) < 1e-12, "Γ({x}) = {got}, want {expected}");
        }
    }

    #[test]
    fn gamma_integers_are_factorials() {
        let mut fact = 1.0;
        for n in 1..=20 {
            assert!(rel(gamma(n as f64).unwrap(), fact) < 1e-13);
            fact *= n as f64;
        }
    }

    #[test]
    fn gamma_domain() {
        assert_eq!(gamma(0.0), Err(Error::DomainError(0.0)));
        assert!(gamma(-1.5).is_err());
        assert!(gamma(f64::NAN).is_err());
    }

    #[test]
    fn digamma_reference_values() {
        let ln2 = 2f64.ln();
        let cases = [
            (1.0, -EULER_GAMMA),
            (0.5, -EULER_GAMMA - 2.0 * ln2),
            (0.25, -EULER_GAMMA - PI / 2.0 - 3.0 * ln2),
            (0.25, -4.227_453_533_376_265_4),
            (0.001, -1_000.575_571_931_810_3),
            (50.0, 3.901_989_673_427_892),
        ];
        for (x, expected) in cases {
            let got = digamma(x).unwrap();
            assert!((got - expected).abs() < 1e-10, "ψ({x}) = {got}, want {expected}");
        }
        assert!(digamma(0.0).is_err());
    }

    #[test]
    fn pitt_constant_values() {
        assert_eq!(pitt_constant(0.0).unwrap().value, 1.0);
        assert!(rel(pitt_constant(0.1).unwrap().value, 1.528_215_290_301_352_2) < 1e-12);
        assert!(rel(pitt_constant(0.5).unwrap().value, 10.101_548_718_589_684) < 1e-12);
        assert!(rel(pitt_constant(0.9).unwrap().value, 447.570_158_580_971_14) < 1e-12);
        assert_eq!(pitt_constant(1.0), Err(Error::LambdaOutOfRange(1.0)));
        assert_eq!(pitt_constant(-0.1), Err(Error::LambdaOutOfRange(-0.1)));
    }

    #[test]
    fn pitt_constant_strictly_increasing() {
        let values: Vec<f64> =
            (0..100).map(|i| pitt_constant(i as f64 / 100.0).unwrap().value).collect();
        assert!(values.windows(2).all(|w| w[1] > w[0]));
        assert!(values[1..].iter().all(|&v| v > 1.0));
    }

    proptest! {
        #[test]
        fn digamma_recurrence(x in 0.1f64..10.0) {
            let lhs = digamma(x + 1.0).unwrap();
            let rhs = digamma(x).unwrap() + x.recip();
            prop_assert!((lhs - rhs).abs() < 1e-10);
        }

        #[test]
        fn gamma_recurrence(x in 0.1f64..20.0) {
            let lhs = gamma(x + 1.0).unwrap();
            let rhs = x * gamma(x).unwrap();
            prop_assert!(rel(lhs, rhs) < 1e-12);
        }
    }
}
