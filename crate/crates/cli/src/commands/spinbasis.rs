use std::path::Path;

use anyhow::Result;
use hyperspin::spin::{product_block, symmetrize_states, Symmetry, SymmetryCombination};
use serde_json::{json, Value};

use crate::cli::SpinbasisArgs;
use crate::output::emit;

fn symmetry_name(symmetry: Symmetry) -> &'static str {
    match symmetry {
        Symmetry::Symmetric => "symmetric",
        Symmetry::Mixed => "mixed",
        Symmetry::Antisymmetric => "antisymmetric",
    }
}

fn combination(c: &SymmetryCombination) -> Value {
    json!({
        "weights": c.weights.iter().map(|&(f2b, w)| json!({"F2b": f2b, "weight": w})).collect::<Vec<_>>(),
        "swap12_parity": c.swap12_parity,
        "noninteracting": c.noninteracting,
    })
}

pub fn run(args: &SpinbasisArgs, out: Option<&Path>) -> Result<()> {
    let block = product_block(args.f, args.m)?;
    let spins: Vec<u32> = match args.f3b {
        Some(f3b) => vec![f3b],
        None => block.total_spins().collect(),
    };
    let mut coupled = Vec::new();
    let mut symmetrized = Vec::new();
    for &f3b in &spins {
        for state in block.coupled_states(f3b)? {
            coupled.push(json!({
                "F3b": state.f3b,
                "M": state.m_f3b,
                "F2b": state.f2b,
                "symmetry": symmetry_name(state.symmetry),
                "coefficients": state.coefficients.iter().copied().collect::<Vec<f64>>(),
            }));
        }
        let sectors = symmetrize_states(args.f, f3b, args.m)?;
        symmetrized.push(json!({
            "F3b": f3b,
            "symmetric": sectors.symmetric.iter().map(combination).collect::<Vec<_>>(),
            "mixed": sectors.mixed.iter().map(|(even, odd)| json!([combination(even), combination(odd)])).collect::<Vec<_>>(),
            "antisymmetric": sectors.antisymmetric.iter().map(combination).collect::<Vec<_>>(),
        }));
    }
    let doc = json!({
        "f": args.f,
        "M": args.m,
        "product_states": block.states(),
        "coupled_states": coupled,
        "symmetrized": symmetrized,
    });
    let mut text = serde_json::to_string_pretty(&doc)?;
    text.push('\n');
    emit(&text, out)
}
