//! Zero-range kernel matrix and its projection onto fixed total spin.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI};

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{invalid, Error, Result};
use crate::spin::{
    pair_scattering_matrix, permutation_matrices, projector_matrix, ProductSpinBlock,
    ProjectorMatrix, SpinorSpecies,
};

/// Half-width (in `x = s²`) of the excluded band around each kernel pole.
pub const POLE_GUARD: f64 = 1e-8;

/// Direct (`s cot(sπ/2)`) and exchange (`−4 sin(sπ/6) / (√3 sin(sπ/2))`)
/// kernel values, continued to imaginary `s` for `x < 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AngularKernel {
    pub direct: f64,
    pub exchange: f64,
}

/// The pole `x = (2n)²` closest to `x`, for `x > 0`.
pub fn nearest_pole(x: f64) -> Option<f64> {
    if x <= 0.0 {
        return None;
    }
    let n = (x.sqrt() / 2.0).round().max(1.0);
    Some(4.0 * n * n)
}

pub fn angular_kernel(x: f64) -> Result<AngularKernel> {
    if !x.is_finite() {
        return invalid(format!("x = {x} is not finite"));
    }
    if x > 0.0 {
        let pole = nearest_pole(x).expect("x is positive");
        if (x - pole).abs() < POLE_GUARD {
            return Err(Error::Pole { x, pole });
        }
        let s = x.sqrt();
        if s < 1e-8 {
            return Ok(origin_kernel());
        }
        let half = s * FRAC_PI_2;
        Ok(AngularKernel {
            direct: s / half.tan(),
            exchange: -4.0 * (s * PI / 6.0).sin() / (3f64.sqrt() * half.sin()),
        })
    } else if x < 0.0 {
        let t = (-x).sqrt();
        if t < 1e-8 {
            return Ok(origin_kernel());
        }
        // sinh(πt/6)/sinh(πt/2) = q/(1 + q + q²) with q = e^{−πt/3}
        let q = (-PI * t / 3.0).exp();
        Ok(AngularKernel {
            direct: t / (t * FRAC_PI_2).tanh(),
            exchange: -4.0 / 3f64.sqrt() * q / (1.0 + q + q * q),
        })
    } else {
        Ok(origin_kernel())
    }
}

fn origin_kernel() -> AngularKernel {
    AngularKernel {
        direct: 2.0 / PI,
        exchange: -4.0 / (3.0 * 3f64.sqrt()),
    }
}

/// `3^{1/4} / (√2 R)`, the factor multiplying every scattering length.
pub fn hyperradial_prefactor(r: f64) -> f64 {
    3f64.powf(0.25) / (2f64.sqrt() * r)
}

/// Weight used to regularise residuals near poles: the distance in `s` to
/// the nearest pole, capped at one.
pub(crate) fn pole_weight(x: f64) -> f64 {
    match nearest_pole(x) {
        Some(pole) => (x.sqrt() - pole.sqrt()).abs().min(1.0),
        None => 1.0,
    }
}

/// Per-`F₃b` data of the projected condition: the exchange matrix
/// `S(P₊+P₋)Sᵀ` and the scattering length attached to each coupled state.
#[derive(Clone, Debug)]
struct ReducedChannel {
    exchange: DMatrix<f64>,
    lengths: Vec<f64>,
}

/// Everything needed to evaluate the kernel matrix on one spin block.
#[derive(Clone, Debug)]
pub struct KernelContext {
    block: ProductSpinBlock,
    species: SpinorSpecies,
    pair: [DMatrix<f64>; 3],
    p_plus: DMatrix<f64>,
    p_minus: DMatrix<f64>,
    projectors: BTreeMap<u32, ProjectorMatrix>,
    reduced: BTreeMap<u32, ReducedChannel>,
}

impl KernelContext {
    pub fn new(species: &SpinorSpecies, m_total: i32) -> Result<Self> {
        let block = ProductSpinBlock::new(species.f(), m_total)?;
        let (p_plus, p_minus) = permutation_matrices(&block);
        let pair = [
            pair_scattering_matrix(&block, 1, species)?,
            pair_scattering_matrix(&block, 2, species)?,
            pair_scattering_matrix(&block, 3, species)?,
        ];
        let cyclic_sum = &p_plus + &p_minus;
        let mut projectors = BTreeMap::new();
        let mut reduced = BTreeMap::new();
        for f3b in block.total_spins() {
            let s = projector_matrix(&block, f3b)?;
            let exchange = &s.matrix * &cyclic_sum * s.matrix.transpose();
            // the coupled basis diagonalises the (12) pair, whose channel
            // length is read straight off the F₂b label
            let lengths = s.rows.iter().map(|row| species.length(row.f2b)).collect();
            reduced.insert(f3b, ReducedChannel { exchange, lengths });
            projectors.insert(f3b, s);
        }
        Ok(Self {
            block,
            species: species.clone(),
            pair,
            p_plus,
            p_minus,
            projectors,
            reduced,
        })
    }

    pub fn block(&self) -> &ProductSpinBlock {
        &self.block
    }

    pub fn species(&self) -> &SpinorSpecies {
        &self.species
    }

    /// `A⁽ᵏ⁾` for spectator `k ∈ {1,2,3}`.
    pub fn pair_matrix(&self, spectator: usize) -> Option<&DMatrix<f64>> {
        spectator.checked_sub(1).and_then(|k| self.pair.get(k))
    }

    pub fn permutations(&self) -> (&DMatrix<f64>, &DMatrix<f64>) {
        (&self.p_plus, &self.p_minus)
    }

    pub fn projector(&self, f3b: u32) -> Result<&ProjectorMatrix> {
        self.projectors.get(&f3b).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "F3b = {f3b} not available on the M = {} block",
                self.block.m_total()
            ))
        })
    }

    pub fn total_spins(&self) -> impl Iterator<Item = u32> + '_ {
        self.projectors.keys().copied()
    }

    /// Scattering lengths attached to the coupled states of `f3b`.
    pub fn channel_lengths(&self, f3b: u32) -> Result<&[f64]> {
        self.reduced_channel(f3b).map(|c| c.lengths.as_slice())
    }

    fn reduced_channel(&self, f3b: u32) -> Result<&ReducedChannel> {
        self.reduced.get(&f3b).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "F3b = {f3b} not available on the M = {} block",
                self.block.m_total()
            ))
        })
    }
}

fn check_radius(r: f64) -> Result<()> {
    if !(r > 0.0 && r.is_finite()) {
        return invalid(format!("hyperradius must be positive and finite, got {r}"));
    }
    Ok(())
}

/// `Q = c (K₁A⁽¹⁾ + K₂A⁽²⁾P₋ + K₂A⁽³⁾P₊) − 1` on the full product block.
///
/// `Q` is not symmetric in general; only its projected determinant matters.
pub fn kernel_matrix(x: f64, r: f64, ctx: &KernelContext) -> Result<DMatrix<f64>> {
    check_radius(r)?;
    let k = angular_kernel(x)?;
    let c = hyperradial_prefactor(r);
    let n = ctx.block.dim();
    let [a1, a2, a3] = &ctx.pair;
    let mut q = a1 * k.direct + (a2 * &ctx.p_minus + a3 * &ctx.p_plus) * k.exchange;
    q *= c;
    q -= DMatrix::<f64>::identity(n, n);
    Ok(q)
}

/// `det(S Q Sᵀ)` for one total spin.
pub fn projected_determinant(x: f64, r: f64, ctx: &KernelContext, f3b: u32) -> Result<f64> {
    let s = &ctx.projector(f3b)?.matrix;
    let q = kernel_matrix(x, r, ctx)?;
    Ok((s * q * s.transpose()).determinant())
}

/// Symmetric matrix with the same zero set (and multiplicities) as
/// `det(S Q Sᵀ)`.
///
/// In the coupled basis the projected kernel is congruent to
/// `c·D^{1/2}(K₁ + K₂Π)D^{1/2} − sgn(D)` with `D = diag(|a_{F₂b}|)` and
/// `Π = S(P₊+P₋)Sᵀ`. Rows with `c|a| > 1` are further divided by `√(c|a|)` so
/// the entries stay of order one when the lengths span many decades.
pub fn reduced_root_matrix(x: f64, r: f64, ctx: &KernelContext, f3b: u32) -> Result<DMatrix<f64>> {
    check_radius(r)?;
    let channel = ctx.reduced_channel(f3b)?;
    let k = angular_kernel(x)?;
    let c = hyperradial_prefactor(r);
    let n = channel.lengths.len();
    let mut gain = Vec::with_capacity(n);
    let mut shift = Vec::with_capacity(n);
    for &a in &channel.lengths {
        let strength = c * a.abs();
        if a == 0.0 {
            gain.push(0.0);
            shift.push(1.0);
        } else {
            gain.push(strength.sqrt().min(1.0));
            shift.push(a.signum() * strength.recip().min(1.0));
        }
    }
    Ok(DMatrix::from_fn(n, n, |i, j| {
        let kernel = if i == j { k.direct } else { 0.0 } + k.exchange * channel.exchange[(i, j)];
        let diagonal = if i == j { shift[i] } else { 0.0 };
        gain[i] * gain[j] * kernel - diagonal
    }))
}

/// Sorted eigenvalues of [`reduced_root_matrix`]; a root is a zero crossing
/// of one of these branches.
pub fn projected_root_condition(x: f64, r: f64, ctx: &KernelContext, f3b: u32) -> Result<Vec<f64>> {
    let m = reduced_root_matrix(x, r, ctx, f3b)?;
    let mut ev: Vec<f64> = if m.nrows() == 1 {
        vec![m[(0, 0)]]
    } else {
        SymmetricEigen::new(m).eigenvalues.iter().copied().collect()
    };
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn context(a0: f64, a2: f64) -> KernelContext {
        KernelContext::new(&SpinorSpecies::spin_one(a0, a2).unwrap(), 0).unwrap()
    }

    #[test]
    fn kernel_limits() {
        let origin = angular_kernel(0.0).unwrap();
        assert!((origin.direct - 2.0 / PI).abs() < 1e-15);
        let near = angular_kernel(1e-12).unwrap();
        assert!((near.direct - 2.0 / PI).abs() < 1e-10);
        assert!(angular_kernel(1.0).unwrap().direct.abs() < 1e-15);
        let t = 1.00624;
        let k = angular_kernel(-t * t).unwrap();
        assert!((k.direct - t / (PI * t / 2.0).tanh()).abs() < 1e-14);
        let plain = -4.0 * (PI * t / 6.0).sinh() / (3f64.sqrt() * (PI * t / 2.0).sinh());
        assert!((k.exchange - plain).abs() < 1e-14);
    }

    #[test]
    fn kernel_is_continuous_through_origin() {
        let below = angular_kernel(-1e-6).unwrap();
        let above = angular_kernel(1e-6).unwrap();
        assert!((below.direct - above.direct).abs() < 1e-5);
        assert!((below.exchange - above.exchange).abs() < 1e-5);
    }

    #[test]
    fn large_imaginary_kernel_is_finite() {
        let k = angular_kernel(-1e8).unwrap();
        assert!(k.exchange.is_finite() && k.exchange.abs() < 1e-100);
        assert!((k.direct - 1e4).abs() < 1e-8);
    }

    #[test]
    fn poles_are_rejected() {
        assert!(matches!(angular_kernel(4.0), Err(Error::Pole { .. })));
        assert!(matches!(angular_kernel(16.0 + 5e-9), Err(Error::Pole { .. })));
        assert!(angular_kernel(16.0 + 2e-8).is_ok());
        assert!(angular_kernel(36.0 - 1e-9).is_err());
    }

    #[test]
    fn noninteracting_kernel_is_minus_identity() {
        let ctx = context(0.0, 0.0);
        let q = kernel_matrix(0.7, 1.0, &ctx).unwrap();
        assert!((q + DMatrix::identity(7, 7)).amax() < 1e-15);
    }

    #[test]
    fn scale_invariance_of_kernel() {
        let q1 = kernel_matrix(2.3, 1.5, &context(0.4, -3.0)).unwrap();
        let q2 = kernel_matrix(2.3, 15.0, &context(4.0, -30.0)).unwrap();
        assert!((q1 - q2).amax() < 1e-12);
    }

    #[test]
    fn singlet_sector_is_inert() {
        let ctx = context(3.0, 5.0);
        for x in [-2.0, 0.3, 9.0] {
            assert_eq!(projected_root_condition(x, 1.0, &ctx, 0).unwrap(), vec![-1.0]);
        }
    }

    #[test]
    fn reduced_condition_tracks_projected_determinant() {
        // both change sign at the same places
        let ctx = context(2.0, 7.0);
        let xs: Vec<f64> = (0..400).map(|i| -3.0 + 0.0173 * i as f64).collect();
        for f3b in 1..=3 {
            let mut det_changes = 0;
            let mut red_changes = 0;
            let mut prev: Option<(f64, f64)> = None;
            for &x in &xs {
                let d = projected_determinant(x, 1.0, &ctx, f3b).unwrap();
                let h: f64 = projected_root_condition(x, 1.0, &ctx, f3b)
                    .unwrap()
                    .iter()
                    .product();
                if let Some((pd, ph)) = prev {
                    det_changes += usize::from(pd * d < 0.0);
                    red_changes += usize::from(ph * h < 0.0);
                }
                prev = Some((d, h));
            }
            assert_eq!(det_changes, red_changes, "F3b = {f3b}");
        }
    }
}
