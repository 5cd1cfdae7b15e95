//! Reference values of `s` in the asymptotic regimes where the roots are
//! independent of `R`, and the machinery to reproduce them numerically.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::kernel::KernelContext;
use super::roots::{find_channel_roots, ChannelRoot, XWindow};
use crate::error::{invalid, Error, Result};
use crate::spin::SpinorSpecies;

/// An ordering of `R` against the scattering lengths:
/// `|a_small| ≪ R ≪ |a_large|` for every listed channel.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RootRegime {
    pub small: Vec<u32>,
    pub large: Vec<u32>,
}

impl RootRegime {
    pub fn new(small: &[u32], large: &[u32]) -> Self {
        let mut small = small.to_vec();
        let mut large = large.to_vec();
        small.sort_unstable();
        large.sort_unstable();
        Self { small, large }
    }

    /// Species and hyperradius realising the regime: `R = 1`, separated
    /// lengths at `1/ratio` and `ratio`. Channels listed in `negative` get a
    /// negative length.
    pub fn realize(&self, f: u32, ratio: f64, negative: &[u32]) -> Result<(SpinorSpecies, f64)> {
        if !(ratio > 1.0 && ratio.is_finite()) {
            return invalid(format!("regime ratio must exceed one, got {ratio}"));
        }
        let channels: Vec<u32> = (0..=2 * f).step_by(2).collect();
        let mut covered: Vec<u32> = self.small.iter().chain(&self.large).copied().collect();
        covered.sort_unstable();
        if covered != channels {
            return invalid(format!("regime {self} does not cover the channels of f = {f}"));
        }
        let lengths: Vec<(u32, f64)> = channels
            .iter()
            .map(|&ch| {
                let magnitude = if self.small.contains(&ch) { 1.0 / ratio } else { ratio };
                let sign = if negative.contains(&ch) { -1.0 } else { 1.0 };
                (ch, sign * magnitude)
            })
            .collect();
        Ok((SpinorSpecies::new(f, &lengths)?, 1.0))
    }
}

fn join(channels: &[u32]) -> String {
    channels
        .iter()
        .map(|c| format!("a{c}"))
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for RootRegime {
    /// `a0<R<a2,a4`, `R<a0,a2`, `a0,a2<R`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.small.is_empty() {
            parts.push(join(&self.small));
        }
        parts.push("R".to_string());
        if !self.large.is_empty() {
            parts.push(join(&self.large));
        }
        write!(f, "{}", parts.join("<"))
    }
}

impl FromStr for RootRegime {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace() && *c != '|').collect();
        let cleaned = cleaned.replace("<<", "<");
        let parts: Vec<&str> = cleaned.split('<').collect();
        let position = parts.iter().position(|p| *p == "R");
        let parse_list = |text: &str| -> Result<Vec<u32>> {
            text.split(',')
                .map(|item| {
                    item.strip_prefix('a')
                        .and_then(|n| n.parse().ok())
                        .ok_or_else(|| Error::InvalidArgument(format!("bad channel '{item}' in regime '{s}'")))
                })
                .collect()
        };
        match (position, parts.len()) {
            (Some(0), 2) => Ok(Self::new(&[], &parse_list(parts[1])?)),
            (Some(1), 2) => Ok(Self::new(&parse_list(parts[0])?, &[])),
            (Some(1), 3) => Ok(Self::new(&parse_list(parts[0])?, &parse_list(parts[2])?)),
            _ => invalid(format!(
                "regime '{s}' must look like 'a0<R<a2,a4', 'R<a0,a2' or 'a0,a2<R'"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ExpectedRoot {
    pub s_abs: f64,
    pub imaginary: bool,
    pub multiplicity: usize,
}

const fn re(s_abs: f64) -> ExpectedRoot {
    ExpectedRoot {
        s_abs,
        imaginary: false,
        multiplicity: 1,
    }
}

const fn im(s_abs: f64) -> ExpectedRoot {
    ExpectedRoot {
        s_abs,
        imaginary: true,
        multiplicity: 1,
    }
}

const fn times(root: ExpectedRoot, multiplicity: usize) -> ExpectedRoot {
    ExpectedRoot {
        multiplicity,
        ..root
    }
}

/// Tabulated roots for one regime: the lowest few values per `F₃b`, and for
/// `f = 2` the aggregated summary where the multiplicity counts how many
/// `F₃b` channels carry each value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootTable {
    pub f: u32,
    pub regime: RootRegime,
    pub channels: Vec<(u32, Vec<ExpectedRoot>)>,
    pub aggregated: Vec<ExpectedRoot>,
}

const S0: f64 = 1.0062;
const S_2_1662: f64 = 2.1662;
const S_4_4653: f64 = 4.4653;

type Row = (&'static [u32], &'static [u32], &'static [&'static [ExpectedRoot]], &'static [ExpectedRoot]);

const F1_ROWS: &[Row] = &[
    (
        &[],
        &[0, 2],
        &[&[im(S0), re(S_2_1662)], &[re(S_2_1662)], &[im(S0), re(S_4_4653)]],
        &[],
    ),
    (&[0], &[2], &[&[re(0.7429)], &[re(S_2_1662)], &[im(S0), re(S_4_4653)]], &[]),
    (&[2], &[0], &[&[re(0.4097)], &[re(4.0)], &[re(2.0)]], &[]),
    (&[0, 2], &[], &[&[re(2.0)], &[re(4.0)], &[re(2.0)]], &[]),
];

const F2_ROWS: &[Row] = &[
    (
        &[],
        &[0, 2, 4],
        &[
            &[im(S0), re(S_4_4653)],
            &[re(S_2_1662)],
            &[im(S0), times(re(S_2_1662), 2)],
            &[im(S0), re(S_2_1662)],
            &[im(S0), re(S_2_1662)],
            &[re(S_2_1662)],
            &[im(S0), re(S_4_4653)],
        ],
        &[times(im(S0), 5), times(re(S_2_1662), 5)],
    ),
    (
        &[0],
        &[2, 4],
        &[
            &[im(S0), re(S_4_4653)],
            &[re(S_2_1662)],
            &[re(0.49050)],
            &[im(S0), re(S_2_1662)],
            &[im(S0), re(S_2_1662)],
            &[re(S_2_1662)],
            &[im(S0), re(S_4_4653)],
        ],
        &[times(im(S0), 4), re(0.4905)],
    ),
    (
        &[2],
        &[0, 4],
        &[
            &[re(2.0)],
            &[re(4.0)],
            &[im(0.7473), re(S_2_1662)],
            &[re(1.1044)],
            &[re(0.66080)],
            &[re(S_2_1662)],
            &[im(S0), re(S_4_4653)],
        ],
        &[im(S0), im(0.7473), re(0.6608)],
    ),
    (
        &[4],
        &[0, 2],
        &[
            &[im(S0), re(S_4_4653)],
            &[re(S_2_1662)],
            &[im(0.3788), re(S_2_1662)],
            &[im(0.5528), re(3.5151)],
            &[re(0.52186)],
            &[re(4.0)],
            &[re(2.0)],
        ],
        &[im(S0), im(0.5528), im(0.3788), re(0.5219)],
    ),
    (
        &[0, 2],
        &[4],
        &[
            &[re(2.0)],
            &[re(4.0)],
            &[re(0.97895)],
            &[re(1.1044)],
            &[re(0.66080)],
            &[re(S_2_1662)],
            &[im(S0), re(S_4_4653)],
        ],
        &[im(S0), re(0.6608)],
    ),
    (
        &[0, 4],
        &[2],
        &[
            &[im(S0), re(S_4_4653)],
            &[re(S_2_1662)],
            &[re(1.3173)],
            &[im(0.5528), re(3.5151)],
            &[re(0.52186)],
            &[re(4.0)],
            &[re(2.0)],
        ],
        &[im(S0), im(0.5528), re(0.5219)],
    ),
    (
        &[2, 4],
        &[0],
        &[
            &[re(2.0)],
            &[re(4.0)],
            &[re(0.68609)],
            &[re(2.0)],
            &[re(2.0)],
            &[re(4.0)],
            &[re(2.0)],
        ],
        &[re(0.6861)],
    ),
    (
        &[0, 2, 4],
        &[],
        &[
            &[re(2.0)],
            &[re(4.0)],
            &[re(2.0)],
            &[re(2.0)],
            &[re(2.0)],
            &[re(4.0)],
            &[re(2.0)],
        ],
        &[times(re(2.0), 5), times(re(4.0), 2)],
    ),
];

fn rows(f: u32) -> Result<&'static [Row]> {
    match f {
        1 => Ok(F1_ROWS),
        2 => Ok(F2_ROWS),
        _ => invalid(format!("reference roots are tabulated for f = 1 and 2, not f = {f}")),
    }
}

/// All tabulated regimes for spin `f`.
pub fn tabulated_regimes(f: u32) -> Result<Vec<RootRegime>> {
    Ok(rows(f)?
        .iter()
        .map(|(small, large, _, _)| RootRegime::new(small, large))
        .collect())
}

pub fn asymptotic_root_table(f: u32, regime: &RootRegime) -> Result<RootTable> {
    let (_, _, per_channel, aggregated) = rows(f)?
        .iter()
        .find(|(small, large, _, _)| RootRegime::new(small, large) == *regime)
        .ok_or_else(|| Error::InvalidArgument(format!("no tabulated regime {regime} for f = {f}")))?;
    // f = 1 has no interacting F₃b = 0 channel, so its columns start at 1
    let first = if f == 1 { 1 } else { 0 };
    Ok(RootTable {
        f,
        regime: regime.clone(),
        channels: per_channel
            .iter()
            .enumerate()
            .map(|(i, roots)| (first + i as u32, roots.to_vec()))
            .collect(),
        aggregated: aggregated.to_vec(),
    })
}

/// Window used when comparing against the tables; wide enough for the
/// listed roots, narrow enough to exclude deep atom-dimer channels.
pub const TABLE_WINDOW: XWindow = XWindow { lo: -10.0, hi: 40.0 };

/// Agreement required between computed and tabulated `|s|`.
pub const TABLE_TOLERANCE: f64 = 5e-4;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CellComparison {
    pub f3b: u32,
    pub expected: ExpectedRoot,
    /// Computed `(|s|, imaginary)`; `None` if too few roots were found.
    pub computed: Option<(f64, bool)>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AggregateComparison {
    pub expected: ExpectedRoot,
    pub computed_multiplicity: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegimeReport {
    pub f: u32,
    pub regime: RootRegime,
    pub ratio: f64,
    pub cells: Vec<CellComparison>,
    pub aggregated: Vec<AggregateComparison>,
    pub roots: Vec<ChannelRoot>,
}

impl RegimeReport {
    pub fn passed(&self) -> bool {
        self.cells.iter().all(|c| c.passed) && self.aggregated.iter().all(|c| c.passed)
    }
}

fn matches(expected: &ExpectedRoot, s_abs: f64, imaginary: bool) -> bool {
    expected.imaginary == imaginary && (expected.s_abs - s_abs).abs() <= TABLE_TOLERANCE
}

/// Realises `regime` at the given scale ratio and compares the lowest
/// computed roots of every tabulated `F₃b` with the table.
pub fn regime_check(f: u32, regime: &RootRegime, ratio: f64) -> Result<RegimeReport> {
    let table = asymptotic_root_table(f, regime)?;
    let (species, r) = regime.realize(f, ratio, &[])?;
    let ctx = KernelContext::new(&species, 0)?;
    let mut cells = Vec::new();
    let mut all_roots = Vec::new();
    let mut per_channel: Vec<Vec<(f64, bool)>> = Vec::new();
    for (f3b, expected) in &table.channels {
        let wanted: usize = expected.iter().map(|e| e.multiplicity).sum();
        let roots = find_channel_roots(r, &ctx, *f3b, TABLE_WINDOW, wanted)?;
        let computed: Vec<(f64, bool)> = roots
            .iter()
            .flat_map(|root| std::iter::repeat((root.s_abs(), root.is_imaginary())).take(root.multiplicity))
            .take(wanted)
            .collect();
        let mut slot = 0;
        for e in expected {
            for _ in 0..e.multiplicity {
                let got = computed.get(slot).copied();
                cells.push(CellComparison {
                    f3b: *f3b,
                    expected: ExpectedRoot {
                        multiplicity: 1,
                        ..*e
                    },
                    computed: got,
                    passed: got.is_some_and(|(s, imag)| matches(e, s, imag)),
                });
                slot += 1;
            }
        }
        per_channel.push(computed);
        all_roots.extend(roots);
    }
    let aggregated = table
        .aggregated
        .iter()
        .map(|e| {
            let count = per_channel
                .iter()
                .filter(|roots| roots.iter().any(|&(s, imag)| matches(e, s, imag)))
                .count();
            AggregateComparison {
                expected: *e,
                computed_multiplicity: count,
                passed: count == e.multiplicity,
            }
        })
        .collect();
    Ok(RegimeReport {
        f,
        regime: regime.clone(),
        ratio,
        cells,
        aggregated,
        roots: all_roots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regime_round_trip() {
        for f in [1, 2] {
            for regime in tabulated_regimes(f).unwrap() {
                let parsed: RootRegime = regime.to_string().parse().unwrap();
                assert_eq!(parsed, regime);
            }
        }
        let r: RootRegime = "|a0| << R << |a2|,|a4|".parse().unwrap();
        assert_eq!(r, RootRegime::new(&[0], &[2, 4]));
        assert!("a0<a2".parse::<RootRegime>().is_err());
    }

    #[test]
    fn table_lookup() {
        let all_large = RootRegime::new(&[], &[0, 2, 4]);
        let t = asymptotic_root_table(2, &all_large).unwrap();
        assert_eq!(t.aggregated[0].multiplicity, 5);
        assert!(t.aggregated[0].imaginary);
        let t = asymptotic_root_table(1, &RootRegime::new(&[0, 2], &[])).unwrap();
        let firsts: Vec<f64> = t.channels.iter().map(|(_, r)| r[0].s_abs).collect();
        assert_eq!(firsts, vec![2.0, 4.0, 2.0]);
        assert!(asymptotic_root_table(3, &all_large).is_err());
        assert!(asymptotic_root_table(2, &RootRegime::new(&[0], &[2])).is_err());
    }

    #[test]
    fn aggregated_counts_follow_channel_listing() {
        for regime in tabulated_regimes(2).unwrap() {
            let t = asymptotic_root_table(2, &regime).unwrap();
            for agg in &t.aggregated {
                let count = t
                    .channels
                    .iter()
                    .filter(|(_, roots)| {
                        roots.iter().any(|r| {
                            r.imaginary == agg.imaginary && (r.s_abs - agg.s_abs).abs() < 2e-4
                        })
                    })
                    .count();
                assert_eq!(count, agg.multiplicity, "{regime} {agg:?}");
            }
        }
    }

    #[test]
    fn realize_rejects_incomplete_regime() {
        assert!(RootRegime::new(&[0], &[]).realize(1, 1e4, &[]).is_err());
        let (species, r) = RootRegime::new(&[0], &[2]).realize(1, 1e4, &[2]).unwrap();
        assert_eq!(r, 1.0);
        assert_eq!(species.length(2), -1e4);
    }
}
