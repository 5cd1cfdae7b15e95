use nalgebra::DMatrix;

use super::basis::{CoupledSpinState, ProductSpinBlock, SpinorSpecies};
use super::cg::cg_int;
use crate::error::{invalid, Result};

/// Cyclic and anticyclic permutation matrices `(P₊, P₋)` on a block.
///
/// `P₊` acts on wavefunctions as `(P₊ψ)(m₁,m₂,m₃) = ψ(m₃,m₁,m₂)`, so the
/// basis vector of `(m₁,m₂,m₃)` is sent to that of `(m₂,m₃,m₁)`. With this
/// reading `A⁽²⁾ = P₋A⁽¹⁾P₊` and `A⁽³⁾ = P₊A⁽¹⁾P₋`.
pub fn permutation_matrices(block: &ProductSpinBlock) -> (DMatrix<f64>, DMatrix<f64>) {
    let p_plus = relabel(block, |[m1, m2, m3]| [m2, m3, m1]);
    let p_minus = p_plus.transpose();
    (p_plus, p_minus)
}

/// Pair transpositions `[T₁₂, T₁₃, T₂₃]`.
pub fn transposition_matrices(block: &ProductSpinBlock) -> [DMatrix<f64>; 3] {
    [
        relabel(block, |[m1, m2, m3]| [m2, m1, m3]),
        relabel(block, |[m1, m2, m3]| [m3, m2, m1]),
        relabel(block, |[m1, m2, m3]| [m1, m3, m2]),
    ]
}

fn relabel(block: &ProductSpinBlock, map: impl Fn([i32; 3]) -> [i32; 3]) -> DMatrix<f64> {
    let n = block.dim();
    let mut p = DMatrix::zeros(n, n);
    for (j, &state) in block.states().iter().enumerate() {
        let i = block
            .index_of(map(state))
            .expect("permuted triple keeps the total projection");
        p[(i, j)] = 1.0;
    }
    p
}

/// Indices `(i, j)` of the interacting pair for a spectator `k ∈ {1,2,3}`.
fn pair_of(spectator: usize) -> Result<(usize, usize, usize)> {
    match spectator {
        1 => Ok((1, 2, 0)),
        2 => Ok((2, 0, 1)),
        3 => Ok((0, 1, 2)),
        _ => invalid(format!("spectator index must be 1, 2 or 3, got {spectator}")),
    }
}

/// `A⁽ᵏ⁾ = Σ_F a_F |F⟩⟨F|` acting on the pair that excludes particle `k`.
pub fn pair_scattering_matrix(
    block: &ProductSpinBlock,
    spectator: usize,
    species: &SpinorSpecies,
) -> Result<DMatrix<f64>> {
    if species.f() != block.f() {
        return invalid(format!(
            "species has f = {} but the block has f = {}",
            species.f(),
            block.f()
        ));
    }
    let (i, j, k) = pair_of(spectator)?;
    let f = block.f() as i32;
    let n = block.dim();
    let mut a = DMatrix::zeros(n, n);
    let states = block.states();
    for (r, sr) in states.iter().enumerate() {
        for (c, sc) in states.iter().enumerate().skip(r) {
            if sr[k] != sc[k] {
                continue;
            }
            let m = sr[i] + sr[j];
            let value: f64 = species
                .lengths()
                .filter(|&(_, length)| length != 0.0)
                .map(|(channel, length)| {
                    let channel = channel as i32;
                    length
                        * cg_int(f, sr[i], f, sr[j], channel, m)
                        * cg_int(f, sc[i], f, sc[j], channel, m)
                })
                .sum();
            a[(r, c)] = value;
            a[(c, r)] = value;
        }
    }
    Ok(a)
}

/// Rectangular matrix `S` whose rows are the coupled states of one `F₃b`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectorMatrix {
    pub f3b: u32,
    pub rows: Vec<CoupledSpinState>,
    pub matrix: DMatrix<f64>,
}

impl ProjectorMatrix {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// `F₂b` label of each row.
    pub fn pair_channels(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.f2b).collect()
    }
}

pub fn projector_matrix(block: &ProductSpinBlock, f3b: u32) -> Result<ProjectorMatrix> {
    let rows = block.coupled_states(f3b)?;
    let mut matrix = DMatrix::zeros(rows.len(), block.dim());
    for (r, state) in rows.iter().enumerate() {
        matrix.set_row(r, &state.coefficients.transpose());
    }
    Ok(ProjectorMatrix { f3b, rows, matrix })
}

/// `Σ_{i<j} fᵢ·fⱼ` built from single-spin ladder operators.
pub fn exchange_operator_matrix(block: &ProductSpinBlock) -> DMatrix<f64> {
    let f = block.f() as i32;
    let casimir = f64::from(f * (f + 1));
    let raise = |m: i32| (casimir - f64::from(m * (m + 1))).sqrt();
    let lower = |m: i32| (casimir - f64::from(m * (m - 1))).sqrt();
    let n = block.dim();
    let mut out = DMatrix::zeros(n, n);
    for (c, &state) in block.states().iter().enumerate() {
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            out[(c, c)] += f64::from(state[i] * state[j]);
            // ½(f₊ⁱ f₋ʲ + f₋ⁱ f₊ʲ)
            for (di, dj) in [(1, -1), (-1, 1)] {
                let mut target = state;
                target[i] += di;
                target[j] += dj;
                if target[i].abs() > f || target[j].abs() > f {
                    continue;
                }
                let amp = if di > 0 {
                    raise(state[i]) * lower(state[j])
                } else {
                    lower(state[i]) * raise(state[j])
                };
                let r = block.index_of(target).expect("projection is conserved");
                out[(r, c)] += 0.5 * amp;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spin::basis::product_block;
    use nalgebra::SymmetricEigen;

    fn sorted_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
        let mut ev: Vec<f64> = SymmetricEigen::new(m.clone()).eigenvalues.iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    #[test]
    fn cyclic_permutation_action() {
        let block = product_block(1, 0).unwrap();
        let (p, m) = permutation_matrices(&block);
        let from = block.index_of([0, 1, -1]).unwrap();
        let to = block.index_of([1, -1, 0]).unwrap();
        assert_eq!(p[(to, from)], 1.0);
        let fixed = block.index_of([0, 0, 0]).unwrap();
        assert_eq!(p[(fixed, fixed)], 1.0);
        assert_eq!(&p * &m, DMatrix::identity(7, 7));
    }

    #[test]
    fn p_plus_cubed_is_identity_f2() {
        let block = product_block(2, 0).unwrap();
        let (p, m) = permutation_matrices(&block);
        assert_eq!(&p * &p * &p, DMatrix::identity(19, 19));
        assert_eq!(m, p.transpose());
    }

    #[test]
    fn pair_matrix_spectrum() {
        let block = product_block(1, 0).unwrap();
        let species = SpinorSpecies::spin_one(1.0, 2.0).unwrap();
        let a1 = pair_scattering_matrix(&block, 1, &species).unwrap();
        let ev = sorted_eigenvalues(&a1);
        let expected = [0.0, 0.0, 0.0, 1.0, 2.0, 2.0, 2.0];
        for (got, want) in ev.iter().zip(expected) {
            assert!((got - want).abs() < 1e-12, "{ev:?}");
        }
    }

    #[test]
    fn spectator_relabeling() {
        let block = product_block(2, 1).unwrap();
        let species = SpinorSpecies::spin_two(0.3, -1.7, 2.2).unwrap();
        let (p, m) = permutation_matrices(&block);
        let a1 = pair_scattering_matrix(&block, 1, &species).unwrap();
        let a2 = pair_scattering_matrix(&block, 2, &species).unwrap();
        let a3 = pair_scattering_matrix(&block, 3, &species).unwrap();
        assert!((&m * &a1 * &p - a2).amax() < 1e-12);
        assert!((&p * &a1 * &m - a3).amax() < 1e-12);
        assert!(pair_scattering_matrix(&block, 4, &species).is_err());
    }

    #[test]
    fn degenerate_lengths_give_even_projector() {
        let block = product_block(1, 1).unwrap();
        let species = SpinorSpecies::spin_one(2.5, 2.5).unwrap();
        let a = pair_scattering_matrix(&block, 3, &species).unwrap();
        let projector = &a / 2.5;
        assert!((&projector * &projector - &projector).amax() < 1e-12);
    }

    #[test]
    fn projector_shapes_and_completeness() {
        let block = product_block(1, 0).unwrap();
        assert_eq!(projector_matrix(&block, 3).unwrap().matrix.shape(), (1, 7));
        let mut total = DMatrix::zeros(7, 7);
        for f3b in 0..=3 {
            let s = projector_matrix(&block, f3b).unwrap().matrix;
            total += s.transpose() * &s;
        }
        assert!((total - DMatrix::identity(7, 7)).amax() < 1e-12);
        let block = product_block(2, 0).unwrap();
        assert_eq!(projector_matrix(&block, 2).unwrap().pair_channels(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn exchange_operator_f1() {
        let block = product_block(1, 0).unwrap();
        let x = exchange_operator_matrix(&block);
        assert!((x.trace() + 6.0).abs() < 1e-12);
        assert!((&x - x.transpose()).amax() < 1e-14);
        let top = product_block(1, 3).unwrap();
        assert!((exchange_operator_matrix(&top)[(0, 0)] - 3.0).abs() < 1e-14);
    }
}
