use std::collections::{BTreeMap, HashMap};

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use super::cg::cg_int;
use super::operators::{permutation_matrices, transposition_matrices};
use crate::error::{invalid, Result};

/// Atomic species: hyperfine spin `f` and the scattering lengths of the
/// bosonically allowed (even) two-body channels, in units of `r_vdW`.
///
/// A missing or zero length means the channel does not interact. The atomic
/// mass is fixed to one.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpinorSpecies {
    f: u32,
    scattering_lengths: BTreeMap<u32, f64>,
}

impl SpinorSpecies {
    pub fn new(f: u32, lengths: &[(u32, f64)]) -> Result<Self> {
        if f == 0 {
            return invalid("hyperfine spin f must be at least 1");
        }
        let mut scattering_lengths = BTreeMap::new();
        for &(channel, a) in lengths {
            if channel % 2 != 0 || channel > 2 * f {
                return invalid(format!(
                    "scattering length for F2b = {channel}: only even F2b <= {} interact",
                    2 * f
                ));
            }
            if !a.is_finite() {
                return invalid(format!("scattering length a{channel} = {a} is not finite"));
            }
            if scattering_lengths.insert(channel, a).is_some() {
                return invalid(format!("duplicate scattering length for F2b = {channel}"));
            }
        }
        Ok(Self {
            f,
            scattering_lengths,
        })
    }

    /// `f = 1` species with lengths `a₀`, `a₂`.
    pub fn spin_one(a0: f64, a2: f64) -> Result<Self> {
        Self::new(1, &[(0, a0), (2, a2)])
    }

    /// `f = 2` species with lengths `a₀`, `a₂`, `a₄`.
    pub fn spin_two(a0: f64, a2: f64, a4: f64) -> Result<Self> {
        Self::new(2, &[(0, a0), (2, a2), (4, a4)])
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn mass(&self) -> f64 {
        1.0
    }

    /// Scattering length of pair channel `f2b` (zero for odd or absent channels).
    pub fn length(&self, f2b: u32) -> f64 {
        self.scattering_lengths.get(&f2b).copied().unwrap_or(0.0)
    }

    pub fn lengths(&self) -> impl Iterator<Item = (u32, f64)> + '_ {
        (0..=2 * self.f)
            .step_by(2)
            .map(move |channel| (channel, self.length(channel)))
    }

    /// Same species with every length multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            f: self.f,
            scattering_lengths: self
                .scattering_lengths
                .iter()
                .map(|(&k, &a)| (k, a * factor))
                .collect(),
        }
    }

    pub fn is_noninteracting(&self) -> bool {
        self.scattering_lengths.values().all(|&a| a == 0.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    Symmetric,
    Mixed,
    Antisymmetric,
}

/// Product states `|m₁ m₂ m₃⟩` with fixed total projection.
///
/// States are ordered lexicographically in `(m₁, m₂, m₃)`, descending.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductSpinBlock {
    f: u32,
    m_total: i32,
    states: Vec<[i32; 3]>,
    index: HashMap<[i32; 3], usize>,
}

impl ProductSpinBlock {
    pub fn new(f: u32, m_total: i32) -> Result<Self> {
        if f == 0 {
            return invalid("hyperfine spin f must be at least 1");
        }
        let fi = f as i32;
        if m_total.abs() > 3 * fi {
            return invalid(format!("|M| = {} exceeds 3f = {}", m_total.abs(), 3 * fi));
        }
        let mut states = Vec::new();
        for m1 in (-fi..=fi).rev() {
            for m2 in (-fi..=fi).rev() {
                let m3 = m_total - m1 - m2;
                if m3.abs() <= fi {
                    states.push([m1, m2, m3]);
                }
            }
        }
        let index = states.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        Ok(Self {
            f,
            m_total,
            states,
            index,
        })
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn m_total(&self) -> i32 {
        self.m_total
    }

    pub fn states(&self) -> &[[i32; 3]] {
        &self.states
    }

    pub fn dim(&self) -> usize {
        self.states.len()
    }

    pub fn index_of(&self, state: [i32; 3]) -> Option<usize> {
        self.index.get(&state).copied()
    }

    /// Allowed total spins for this block, `|M| ≤ F₃b ≤ 3f`.
    pub fn total_spins(&self) -> impl Iterator<Item = u32> {
        self.m_total.unsigned_abs()..=3 * self.f
    }

    /// `|F₃b M (F₂b)⟩` for every allowed `F₂b`, coupling spins 1 and 2 first.
    pub fn coupled_states(&self, f3b: u32) -> Result<Vec<CoupledSpinState>> {
        if f3b > 3 * self.f || (self.m_total.unsigned_abs()) > f3b {
            return invalid(format!(
                "F3b = {f3b} incompatible with f = {} and M = {}",
                self.f, self.m_total
            ));
        }
        let (p_plus, _) = permutation_matrices(self);
        let [t12, _, _] = transposition_matrices(self);
        let f = self.f as i32;
        let big_f = f3b as i32;
        let mut out = Vec::new();
        for f2b in 0..=2 * self.f {
            let f2 = f2b as i32;
            if (f2 - f).abs() > big_f || big_f > f2 + f {
                continue;
            }
            let mut coefficients = DVector::zeros(self.dim());
            for (i, &[m1, m2, m3]) in self.states.iter().enumerate() {
                let m12 = m1 + m2;
                if m12.abs() > f2 {
                    continue;
                }
                coefficients[i] =
                    cg_int(f, m1, f, m2, f2, m12) * cg_int(f2, m12, f, m3, big_f, self.m_total);
            }
            let norm = coefficients.norm();
            if norm < 1e-12 {
                continue;
            }
            coefficients /= norm;
            let symmetry = classify(&coefficients, &p_plus, &t12);
            out.push(CoupledSpinState {
                f3b,
                m_f3b: self.m_total,
                f2b,
                coefficients,
                symmetry,
            });
        }
        Ok(out)
    }
}

fn classify(v: &DVector<f64>, p_plus: &DMatrix<f64>, t12: &DMatrix<f64>) -> Symmetry {
    let cyclic = (p_plus * v - v).norm() < 1e-10;
    let swapped = t12 * v;
    if cyclic && (&swapped - v).norm() < 1e-10 {
        Symmetry::Symmetric
    } else if cyclic && (&swapped + v).norm() < 1e-10 {
        Symmetry::Antisymmetric
    } else {
        Symmetry::Mixed
    }
}

/// `|F₃b M_{F₃b} (F₂b)⟩` expanded over a [`ProductSpinBlock`].
///
/// `symmetry` describes the state itself under the three-particle permutation
/// group; a single coupled state is usually `Mixed` even when it belongs to
/// a subspace containing a fully symmetric combination.
#[derive(Clone, Debug, PartialEq)]
pub struct CoupledSpinState {
    pub f3b: u32,
    pub m_f3b: i32,
    pub f2b: u32,
    pub coefficients: DVector<f64>,
    pub symmetry: Symmetry,
}

/// Two-body coupled state `|F₂b M⟩` as a table of
/// `(m₁, m₂, ⟨f m₁ f m₂|F₂b M⟩)`, ordered by ascending `m₁`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TwoBodyState {
    pub f2b: u32,
    pub m: i32,
    pub coefficients: Vec<(i32, i32, f64)>,
    pub symmetry: Symmetry,
}

pub fn two_body_coupled_states(f: u32) -> Result<Vec<TwoBodyState>> {
    if f == 0 {
        return invalid("hyperfine spin f must be at least 1");
    }
    let fi = f as i32;
    let mut out = Vec::new();
    for f2b in 0..=2 * f {
        let f2 = f2b as i32;
        for m in -f2..=f2 {
            let coefficients = (-fi..=fi)
                .filter_map(|m1| {
                    let m2 = m - m1;
                    (m2.abs() <= fi).then(|| (m1, m2, cg_int(fi, m1, fi, m2, f2, m)))
                })
                .filter(|&(_, _, c)| c != 0.0)
                .collect();
            let symmetry = if f2b % 2 == 0 {
                Symmetry::Symmetric
            } else {
                Symmetry::Antisymmetric
            };
            out.push(TwoBodyState {
                f2b,
                m,
                coefficients,
                symmetry,
            });
        }
    }
    Ok(out)
}

pub fn product_block(f: u32, m_total: i32) -> Result<ProductSpinBlock> {
    ProductSpinBlock::new(f, m_total)
}

/// All coupled states of total spin `f3b` and projection `m`, one per allowed `F₂b`.
pub fn three_body_coupled_states(f: u32, f3b: u32, m: i32) -> Result<Vec<CoupledSpinState>> {
    if m.unsigned_abs() > f3b || f3b > 3 * f {
        return invalid(format!("need |M| <= F3b <= 3f, got F3b = {f3b}, M = {m}"));
    }
    ProductSpinBlock::new(f, m)?.coupled_states(f3b)
}

/// A permutation-adapted combination of the coupled states of one `F₃b`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetryCombination {
    /// Weights on the coupled states `|F₃b M (F₂b)⟩`, keyed by `F₂b`.
    pub weights: Vec<(u32, f64)>,
    /// The same state expanded over the product block.
    pub vector: DVector<f64>,
    /// Behaviour under exchange of spins 1 and 2 (`+1` or `-1`).
    pub swap12_parity: i8,
    /// Fully antisymmetric spin states cannot interact through s-wave
    /// contact forces.
    pub noninteracting: bool,
}

/// Partition of one `F₃b` subspace into irreducible permutation sectors.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetrizedSubspace {
    pub f3b: u32,
    pub m_f3b: i32,
    pub symmetric: Vec<SymmetryCombination>,
    /// Each pair is (symmetric under 1↔2, antisymmetric under 1↔2).
    pub mixed: Vec<(SymmetryCombination, SymmetryCombination)>,
    pub antisymmetric: Vec<SymmetryCombination>,
}

pub fn symmetrize_states(f: u32, f3b: u32, m: i32) -> Result<SymmetrizedSubspace> {
    let block = ProductSpinBlock::new(f, m)?;
    let states = three_body_coupled_states(f, f3b, m)?;
    let dim = block.dim();
    let (p_plus, p_minus) = permutation_matrices(&block);
    let [t12, t13, t23] = transposition_matrices(&block);
    let identity = DMatrix::<f64>::identity(dim, dim);
    let cyclic = &identity + &p_plus + &p_minus;
    let transpositions = &t12 + &t13 + &t23;
    let symmetrizer = (&cyclic + &transpositions) / 6.0;
    let antisymmetrizer = (&cyclic - &transpositions) / 6.0;

    let mut subspace = DMatrix::<f64>::zeros(dim, dim);
    for s in &states {
        subspace += &s.coefficients * s.coefficients.transpose();
    }
    let mixed_projector = &subspace - &symmetrizer * &subspace - &antisymmetrizer * &subspace;
    let mixed_swap_even = &mixed_projector * (&identity + &t12) / 2.0;

    let combine = |vector: DVector<f64>, parity: i8, noninteracting: bool| SymmetryCombination {
        weights: states
            .iter()
            .map(|s| (s.f2b, s.coefficients.dot(&vector)))
            .collect(),
        vector,
        swap12_parity: parity,
        noninteracting,
    };

    let symmetric = gram_schmidt(&symmetrizer, &states)
        .into_iter()
        .map(|v| combine(v, 1, false))
        .collect();
    let antisymmetric = gram_schmidt(&antisymmetrizer, &states)
        .into_iter()
        .map(|v| combine(v, -1, true))
        .collect();
    let difference = &p_plus - &p_minus;
    let mixed = gram_schmidt(&mixed_swap_even, &states)
        .into_iter()
        .map(|v| {
            let partner = &difference * &v / 3f64.sqrt();
            (combine(v, 1, false), combine(partner, -1, false))
        })
        .collect();

    Ok(SymmetrizedSubspace {
        f3b,
        m_f3b: m,
        symmetric,
        mixed,
        antisymmetric,
    })
}

/// Orthonormal basis of the range of `projector` restricted to the span of
/// `states`, built by projecting the states in order.
fn gram_schmidt(projector: &DMatrix<f64>, states: &[CoupledSpinState]) -> Vec<DVector<f64>> {
    let mut basis: Vec<DVector<f64>> = Vec::new();
    for s in states {
        let mut v = projector * &s.coefficients;
        for b in &basis {
            v -= b * b.dot(&v);
        }
        let norm = v.norm();
        if norm > 1e-8 {
            basis.push(v / norm);
        }
    }
    basis
}
