//! Clebsch–Gordan coefficients in the Condon–Shortley phase convention.

use crate::error::{invalid, Result};

/// Largest factorial argument handled by the table; enough for j ≈ 50.
const MAX_FACTORIAL: usize = 170;

fn factorial(n: i32) -> f64 {
    debug_assert!(n >= 0 && (n as usize) <= MAX_FACTORIAL);
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Converts an angular-momentum quantum number to twice its value, rejecting
/// anything that is not a (half-)integer.
fn doubled(value: f64, name: &str) -> Result<i32> {
    let twice = 2.0 * value;
    let rounded = twice.round();
    if !value.is_finite() || (twice - rounded).abs() > 1e-9 {
        return invalid(format!("{name} = {value} is not a half-integer"));
    }
    Ok(rounded as i32)
}

/// `⟨j₁ m₁ j₂ m₂ | J M⟩`.
///
/// Arguments may be integers or half-integers. Combinations violating the
/// triangle rule, projection conservation or `|m| ≤ j` are valid and give
/// zero.
pub fn clebsch_gordan(j1: f64, m1: f64, j2: f64, m2: f64, j: f64, m: f64) -> Result<f64> {
    let tj1 = doubled(j1, "j1")?;
    let tm1 = doubled(m1, "m1")?;
    let tj2 = doubled(j2, "j2")?;
    let tm2 = doubled(m2, "m2")?;
    let tj = doubled(j, "J")?;
    let tm = doubled(m, "M")?;
    for (tv, name) in [(tj1, "j1"), (tj2, "j2"), (tj, "J")] {
        if tv < 0 {
            return invalid(format!("{name} must be non-negative"));
        }
    }
    if tj1 + tj2 + tj > 2 * (MAX_FACTORIAL as i32 - 1) {
        return invalid("angular momenta too large for the factorial table");
    }
    Ok(clebsch_gordan_doubled(tj1, tm1, tj2, tm2, tj, tm))
}

/// Integer-spin convenience wrapper used throughout the basis construction.
pub(crate) fn cg_int(j1: i32, m1: i32, j2: i32, m2: i32, j: i32, m: i32) -> f64 {
    clebsch_gordan_doubled(2 * j1, 2 * m1, 2 * j2, 2 * m2, 2 * j, 2 * m)
}

/// Racah's closed form with all quantum numbers given doubled.
pub fn clebsch_gordan_doubled(tj1: i32, tm1: i32, tj2: i32, tm2: i32, tj: i32, tm: i32) -> f64 {
    if tm1 + tm2 != tm {
        return 0.0;
    }
    if tm1.abs() > tj1 || tm2.abs() > tj2 || tm.abs() > tj {
        return 0.0;
    }
    // j - m must be an integer for every (j, m) pair
    if (tj1 - tm1) % 2 != 0 || (tj2 - tm2) % 2 != 0 || (tj - tm) % 2 != 0 {
        return 0.0;
    }
    if tj < (tj1 - tj2).abs() || tj > tj1 + tj2 || (tj1 + tj2 + tj) % 2 != 0 {
        return 0.0;
    }

    // everything below is an integer
    let a = (tj1 + tj2 - tj) / 2;
    let b = (tj1 - tm1) / 2;
    let c = (tj2 + tm2) / 2;
    let d = (tj - tj2 + tm1) / 2;
    let e = (tj - tj1 - tm2) / 2;

    let prefactor = ((tj + 1) as f64 * factorial((tj + tj1 - tj2) / 2)
        * factorial((tj - tj1 + tj2) / 2)
        * factorial(a)
        / factorial((tj1 + tj2 + tj) / 2 + 1))
        .sqrt();
    let projections = (factorial((tj + tm) / 2)
        * factorial((tj - tm) / 2)
        * factorial((tj1 - tm1) / 2)
        * factorial((tj1 + tm1) / 2)
        * factorial((tj2 - tm2) / 2)
        * factorial((tj2 + tm2) / 2))
        .sqrt();

    let k_min = 0.max(-d).max(-e);
    let k_max = a.min(b).min(c);
    let sum: f64 = (k_min..=k_max)
        .map(|k| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign / (factorial(k)
                * factorial(a - k)
                * factorial(b - k)
                * factorial(c - k)
                * factorial(d + k)
                * factorial(e + k))
        })
        .sum();

    prefactor * projections * sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singlet_of_two_spin_ones() {
        let c = clebsch_gordan(1.0, -1.0, 1.0, 1.0, 0.0, 0.0).unwrap();
        assert!((c - 1.0 / 3f64.sqrt()).abs() < 1e-14);
        let c = clebsch_gordan(1.0, 0.0, 1.0, 0.0, 0.0, 0.0).unwrap();
        assert!((c + 1.0 / 3f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn projection_mismatch_is_zero() {
        assert_eq!(clebsch_gordan(1.0, 0.0, 1.0, 1.0, 2.0, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn triangle_violation_is_zero() {
        assert_eq!(clebsch_gordan(1.0, 0.0, 1.0, 0.0, 3.0, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn half_integer_spins() {
        // |1 1⟩ = |↑↑⟩ and |1 0⟩ = (|↑↓⟩ + |↓↑⟩)/√2
        let c = clebsch_gordan(0.5, 0.5, 0.5, 0.5, 1.0, 1.0).unwrap();
        assert!((c - 1.0).abs() < 1e-14);
        let c = clebsch_gordan(0.5, 0.5, 0.5, -0.5, 1.0, 0.0).unwrap();
        assert!((c - 0.5f64.sqrt()).abs() < 1e-14);
        let c = clebsch_gordan(0.5, -0.5, 0.5, 0.5, 0.0, 0.0).unwrap();
        assert!((c + 0.5f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(clebsch_gordan(-1.0, 0.0, 1.0, 0.0, 0.0, 0.0).is_err());
        assert!(clebsch_gordan(1.0, 0.25, 1.0, 0.0, 1.0, 0.25).is_err());
        assert!(clebsch_gordan(f64::NAN, 0.0, 1.0, 0.0, 1.0, 0.0).is_err());
    }
}
