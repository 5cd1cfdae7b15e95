//! Direct/exchange decomposition of the two- and three-body scattering
//! length operators for `f = 1`:
//! `Â₂b = α₂b + α₂b^ex f₁·f₂` and `Â₃b = α₃b + α₃b^ex Σ_{i<j} fᵢ·fⱼ`.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::spin::{exchange_operator_matrix, symmetrize_states, two_body_coupled_states, ProductSpinBlock, Symmetry};

/// Three-body scattering lengths of the two symmetric `f = 1` sectors.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ThreeBodyLengthSet {
    pub a3b_1: f64,
    pub a3b_3: f64,
}

impl ThreeBodyLengthSet {
    pub fn alpha_3b(&self) -> f64 {
        three_body_direct_exchange(self.a3b_1, self.a3b_3).0
    }

    pub fn alpha_3b_ex(&self) -> f64 {
        three_body_direct_exchange(self.a3b_1, self.a3b_3).1
    }

    pub fn from_direct_exchange(alpha: f64, alpha_ex: f64) -> Self {
        let (a3b_1, a3b_3) = three_body_from_direct_exchange(alpha, alpha_ex);
        Self { a3b_1, a3b_3 }
    }
}

/// `(α₃b, α₃b^ex) = ((3a⁽¹⁾ + 2a⁽³⁾)/5, (a⁽³⁾ − a⁽¹⁾)/5)`.
pub fn three_body_direct_exchange(a3b_1: f64, a3b_3: f64) -> (f64, f64) {
    ((3.0 * a3b_1 + 2.0 * a3b_3) / 5.0, (a3b_3 - a3b_1) / 5.0)
}

/// `(a⁽¹⁾, a⁽³⁾) = (α − 2α^ex, α + 3α^ex)`.
pub fn three_body_from_direct_exchange(alpha: f64, alpha_ex: f64) -> (f64, f64) {
    (alpha - 2.0 * alpha_ex, alpha + 3.0 * alpha_ex)
}

/// `(α₂b, α₂b^ex) = ((a₀ + 2a₂)/3, (a₂ − a₀)/3)`, the pair that reproduces
/// `a₀P₀ + a₂P₂` with `f₁·f₂ = −2` on `F₂b = 0` and `+1` on `F₂b = 2`.
pub fn two_body_direct_exchange(a0: f64, a2: f64) -> (f64, f64) {
    ((a0 + 2.0 * a2) / 3.0, (a2 - a0) / 3.0)
}

/// `(a₀, a₂) = (α − 2α^ex, α + α^ex)`.
pub fn two_body_from_direct_exchange(alpha: f64, alpha_ex: f64) -> (f64, f64) {
    (alpha - 2.0 * alpha_ex, alpha + alpha_ex)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CouplingConstants {
    pub g_2b: f64,
    pub g_2b_ex: f64,
    pub g_3b: f64,
    pub g_3b_ex: f64,
}

/// `g₂b = 4πα₂b/m`, `g₃b = √3·12πα₃b/m`, and likewise for the exchange parts.
pub fn coupling_constants(
    mass: f64,
    alpha_2b: f64,
    alpha_2b_ex: f64,
    alpha_3b: f64,
    alpha_3b_ex: f64,
) -> Result<CouplingConstants> {
    if !(mass > 0.0 && mass.is_finite()) {
        return invalid(format!("mass must be positive, got {mass}"));
    }
    let two = 4.0 * PI / mass;
    let three = 3f64.sqrt() * 12.0 * PI / mass;
    Ok(CouplingConstants {
        g_2b: two * alpha_2b,
        g_2b_ex: two * alpha_2b_ex,
        g_3b: three * alpha_3b,
        g_3b_ex: three * alpha_3b_ex,
    })
}

/// `f₁·f₂` on the two-spin product basis, ordered by descending `(m₁, m₂)`.
pub fn pair_exchange_matrix(f: u32) -> Result<DMatrix<f64>> {
    if f == 0 {
        return invalid("hyperfine spin f must be at least 1");
    }
    let fi = f as i32;
    let width = 2 * fi + 1;
    let index = |m1: i32, m2: i32| ((fi - m1) * width + (fi - m2)) as usize;
    let casimir = f64::from(fi * (fi + 1));
    let raise = |m: i32| (casimir - f64::from(m * (m + 1))).sqrt();
    let lower = |m: i32| (casimir - f64::from(m * (m - 1))).sqrt();
    let n = (width * width) as usize;
    let mut out = DMatrix::zeros(n, n);
    for m1 in -fi..=fi {
        for m2 in -fi..=fi {
            let c = index(m1, m2);
            out[(c, c)] = f64::from(m1 * m2);
            if m1 < fi && m2 > -fi {
                out[(index(m1 + 1, m2 - 1), c)] += 0.5 * raise(m1) * lower(m2);
            }
            if m1 > -fi && m2 < fi {
                out[(index(m1 - 1, m2 + 1), c)] += 0.5 * lower(m1) * raise(m2);
            }
        }
    }
    Ok(out)
}

fn max_abs_difference(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    (a - b).iter().fold(0.0f64, |acc, v| acc.max(v.abs()))
}

/// Largest entry of `Σ_F a_F P_F − P(α₂b + α₂b^ex f₁·f₂)P` on the
/// symmetric two-body sector of `f = 1`, with `P` its projector.
pub fn a2b_operator_consistency(a0: f64, a2: f64) -> Result<f64> {
    let f = 1;
    let exchange = pair_exchange_matrix(f)?;
    let n = exchange.nrows();
    let width = 3i32;
    let mut sector = DMatrix::zeros(n, n);
    let mut projected = DMatrix::zeros(n, n);
    for state in two_body_coupled_states(f)? {
        if state.symmetry != Symmetry::Symmetric {
            continue;
        }
        let mut v = DMatrix::<f64>::zeros(n, 1);
        for &(m1, m2, c) in &state.coefficients {
            v[((1 - m1) * width + (1 - m2)) as usize] = c;
        }
        let outer = &v * v.transpose();
        let length = if state.f2b == 0 { a0 } else { a2 };
        projected += length * &outer;
        sector += outer;
    }
    let (alpha, alpha_ex) = two_body_direct_exchange(a0, a2);
    let operator = alpha * DMatrix::identity(n, n) + alpha_ex * exchange;
    Ok(max_abs_difference(&projected, &(&sector * operator * &sector)))
}

/// Largest entry of `a⁽¹⁾P₁ + a⁽³⁾P₃ − P(α₃b + α₃b^ex Σ fᵢ·fⱼ)P` on the
/// fully symmetric sector of an `f = 1` block, with `P_F` the projectors
/// onto its symmetric `F₃b` states.
pub fn a3b_operator_consistency(block: &ProductSpinBlock, a3b_1: f64, a3b_3: f64) -> Result<f64> {
    if block.f() != 1 {
        return invalid(format!("three-body length decomposition is defined for f = 1, got f = {}", block.f()));
    }
    let n = block.dim();
    let m = block.m_total();
    let mut sector = DMatrix::zeros(n, n);
    let mut projected = DMatrix::zeros(n, n);
    for (f3b, length) in [(1, a3b_1), (3, a3b_3)] {
        if m.unsigned_abs() > f3b {
            continue;
        }
        for combination in symmetrize_states(1, f3b, m)?.symmetric {
            let outer = &combination.vector * combination.vector.transpose();
            projected += length * &outer;
            sector += outer;
        }
    }
    let (alpha, alpha_ex) = three_body_direct_exchange(a3b_1, a3b_3);
    let operator = alpha * DMatrix::identity(n, n) + alpha_ex * exchange_operator_matrix(block);
    Ok(max_abs_difference(&projected, &(&sector * operator * &sector)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spin::product_block;

    #[test]
    fn three_body_examples() {
        assert_eq!(three_body_direct_exchange(2.5, 2.5), (2.5, 0.0));
        assert_eq!(three_body_direct_exchange(0.0, 5.0), (2.0, 1.0));
        let (a1, a3) = three_body_from_direct_exchange(2.0, 1.0);
        assert_eq!((a1, a3), (0.0, 5.0));
    }

    #[test]
    fn two_body_round_trip() {
        assert_eq!(two_body_direct_exchange(1.0, 1.0), (1.0, 0.0));
        assert_eq!(two_body_direct_exchange(-3.0, 3.0), (1.0, 2.0));
        let (a0, a2) = two_body_from_direct_exchange(1.0, 2.0);
        assert_eq!((a0, a2), (-3.0, 3.0));
    }

    #[test]
    fn couplings() {
        let g = coupling_constants(1.0, 1.0, 0.0, 1.0, 0.0).unwrap();
        assert!((g.g_2b - 4.0 * PI).abs() < 1e-14);
        assert!((g.g_3b - 12.0 * 3f64.sqrt() * PI).abs() < 1e-13);
        let g = coupling_constants(7.0, 0.5, 0.0, 1.5, 0.0).unwrap();
        assert!((g.g_3b / g.g_2b - 3.0 * 3f64.sqrt() * 1.5 / 0.5).abs() < 1e-12);
        assert!(coupling_constants(0.0, 1.0, 1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn pair_exchange_eigenvalues() {
        let e = pair_exchange_matrix(1).unwrap();
        let mut ev: Vec<f64> = nalgebra::SymmetricEigen::new(e).eigenvalues.iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        // F = 0 (once), F = 1 (three times), F = 2 (five times)
        let expected = [-2.0, -1.0, -1.0, -1.0, 1.0, 1.0, 1.0, 1.0, 1.0];
        for (a, b) in ev.iter().zip(expected) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn operator_identities() {
        assert!(a2b_operator_consistency(0.3, -7.0).unwrap() < 1e-12);
        for m in -3..=3 {
            let block = product_block(1, m).unwrap();
            assert!(a3b_operator_consistency(&block, 1.7, -0.4).unwrap() < 1e-12);
        }
        assert!(a3b_operator_consistency(&product_block(2, 0).unwrap(), 1.0, 1.0).is_err());
    }
}
