//! Scattering-length dependence of recombination, dissociation and
//! atom-dimer observables for `f = 1`.
//!
//! A [`RegimeDescriptor`] names one cell: the three-body spin `F₃b`, the
//! sign/magnitude pattern of `(a₀, a₂)` and the observable. Cells the tables
//! leave empty evaluate to [`CellValue::Undefined`].

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::scaling::{interference_m, oscillation_o, resonance_p, tangent_t, ScalingParams};
use crate::error::{invalid, Error, Result};

/// "≫" means at least this ratio when classifying lengths.
pub const REGIME_RATIO: f64 = 1e2;
/// Subleading exponent for `F₃b = 1` with `|a₂| ≫ |a₀|`.
pub const S1_A2_DOMINANT: f64 = 0.7429;
/// Subleading exponent for `F₃b = 1` with `|a₀| ≫ |a₂|`.
pub const S1_A0_DOMINANT: f64 = 0.4097;
/// Subleading exponent for `F₃b = 2`.
pub const S1_F3B2: f64 = 2.1662;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Observable {
    /// Recombination into the weakly bound `F₂b = 0` dimer.
    K3Zero,
    K3Two,
    /// Recombination into deeply bound dimers.
    K3Deep,
    /// Three-body scattering length `a₃b^{(F₃b)}`.
    A3b,
    /// Dissociation of `F₂b = 0` dimers, `∝ K₃⁽⁰⁾ k⁴ a₀`.
    D3Zero,
    D3Two,
    /// Relaxation of `F₂b = 0` dimers into deep dimers.
    KadZeroDeep,
    KadTwoDeep,
    /// `F₂b = 2` dimers relaxing into `F₂b = 0` dimers.
    KadTwoZero,
    KadZeroTwo,
    AadZero,
    AadTwo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ScalingTable {
    ThreeAtom,
    AtomDimer,
}

impl Observable {
    pub const ALL: [Observable; 12] = [
        Self::K3Zero,
        Self::K3Two,
        Self::K3Deep,
        Self::A3b,
        Self::D3Zero,
        Self::D3Two,
        Self::KadZeroDeep,
        Self::KadTwoDeep,
        Self::KadTwoZero,
        Self::KadZeroTwo,
        Self::AadZero,
        Self::AadTwo,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Self::K3Zero => "K3_0",
            Self::K3Two => "K3_2",
            Self::K3Deep => "K3d",
            Self::A3b => "a3b",
            Self::D3Zero => "D3_0",
            Self::D3Two => "D3_2",
            Self::KadZeroDeep => "Kad_0d",
            Self::KadTwoDeep => "Kad_2d",
            Self::KadTwoZero => "Kad_20",
            Self::KadZeroTwo => "Kad_02",
            Self::AadZero => "aad_0",
            Self::AadTwo => "aad_2",
        }
    }

    pub fn table(self) -> ScalingTable {
        match self {
            Self::K3Zero | Self::K3Two | Self::K3Deep | Self::A3b | Self::D3Zero | Self::D3Two => {
                ScalingTable::ThreeAtom
            }
            _ => ScalingTable::AtomDimer,
        }
    }
}

impl fmt::Display for Observable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Observable {
    type Err = Error;

    /// Accepts the ids of [`Observable::id`], ignoring case, underscores,
    /// slashes and parentheses (`K3(0)`, `Kad(2/d)`, `K3_d`).
    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| !matches!(c, '_' | '/' | '(' | ')' | ' '))
            .collect::<String>()
            .to_ascii_lowercase();
        Self::ALL
            .into_iter()
            .find(|o| o.id().replace('_', "").to_ascii_lowercase() == key)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown observable {s:?}")))
    }
}

/// The larger of the two `F₃b = 1` lengths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Dominant {
    A0,
    A2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LengthRegime {
    /// `F₃b = 1`: one of `|a₀|`, `|a₂|` dominates the other.
    Hierarchy {
        dominant: Dominant,
        dominant_positive: bool,
        other_positive: bool,
    },
    /// `F₃b = 2, 3`: only `a₂` enters, `|a₂| ≫ r_vdW`.
    Single { a2_positive: bool },
}

impl LengthRegime {
    /// Lengths `(a₀, a₂)` realizing the regime with separation `ratio`.
    pub fn sample_lengths(&self, ratio: f64) -> (f64, f64) {
        let sign = |positive: bool| if positive { 1.0 } else { -1.0 };
        match *self {
            Self::Hierarchy {
                dominant,
                dominant_positive,
                other_positive,
            } => {
                let big = sign(dominant_positive) * ratio * ratio;
                let small = sign(other_positive) * ratio;
                match dominant {
                    Dominant::A2 => (small, big),
                    Dominant::A0 => (big, small),
                }
            }
            Self::Single { a2_positive } => (1.0, sign(a2_positive) * ratio),
        }
    }
}

impl fmt::Display for LengthRegime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let abs = |name: &str, positive: bool| {
            if positive {
                name.to_string()
            } else {
                format!("|{name}|")
            }
        };
        match *self {
            Self::Hierarchy {
                dominant,
                dominant_positive,
                other_positive,
            } => {
                let (big, small) = match dominant {
                    Dominant::A2 => ("a2", "a0"),
                    Dominant::A0 => ("a0", "a2"),
                };
                write!(f, "{}>>{}", abs(big, dominant_positive), abs(small, other_positive))
            }
            Self::Single { a2_positive } => write!(f, "{}>>rvdW", abs("a2", a2_positive)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RegimeDescriptor {
    pub f3b: u32,
    pub regime: LengthRegime,
    pub observable: Observable,
}

impl RegimeDescriptor {
    pub fn new(f3b: u32, regime: LengthRegime, observable: Observable) -> Result<Self> {
        match (f3b, regime) {
            (1, LengthRegime::Hierarchy { .. }) | (2 | 3, LengthRegime::Single { .. }) => Ok(Self {
                f3b,
                regime,
                observable,
            }),
            (1..=3, _) => invalid(format!("regime {regime} does not apply to F3b = {f3b}")),
            _ => invalid(format!("scaling tables cover F3b = 1, 2, 3; got {f3b}")),
        }
    }

    /// Subleading exponent of this regime, if it has one.
    pub fn s1(&self) -> Option<f64> {
        match (self.f3b, self.regime) {
            (1, LengthRegime::Hierarchy { dominant: Dominant::A2, .. }) => Some(S1_A2_DOMINANT),
            (1, LengthRegime::Hierarchy { dominant: Dominant::A0, .. }) => Some(S1_A0_DOMINANT),
            (2, _) => Some(S1_F3B2),
            _ => None,
        }
    }
}

impl fmt::Display for RegimeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F3b={} {} {}", self.f3b, self.regime, self.observable)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum CellValue {
    /// Infinite values mark `η = 0` resonances of `T`.
    Value(f64),
    /// The table has no entry for this cell.
    Undefined,
    /// The cell carries a `k⁴` threshold factor and `k = 0`.
    Suppressed,
}

impl CellValue {
    pub fn value(self) -> Option<f64> {
        match self {
            Self::Value(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for CellValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Value(v) => write!(f, "{v}"),
            Self::Undefined => f.write_str("undefined"),
            Self::Suppressed => f.write_str("suppressed"),
        }
    }
}

/// Classifies `(a₀, a₂)` for the given `F₃b` using [`REGIME_RATIO`].
pub fn detect_regime(f3b: u32, a0: f64, a2: f64) -> Result<LengthRegime> {
    if !(a0.is_finite() && a2.is_finite()) {
        return invalid("scattering lengths must be finite");
    }
    match f3b {
        1 => {
            let dominant = if a2.abs() >= REGIME_RATIO * a0.abs() && a2 != 0.0 {
                Dominant::A2
            } else if a0.abs() >= REGIME_RATIO * a2.abs() && a0 != 0.0 {
                Dominant::A0
            } else {
                return Err(Error::Regime {
                    detected: format!("|a0| ~ |a2| (a0 = {a0}, a2 = {a2})"),
                });
            };
            let (big, small) = match dominant {
                Dominant::A2 => (a2, a0),
                Dominant::A0 => (a0, a2),
            };
            Ok(LengthRegime::Hierarchy {
                dominant,
                dominant_positive: big > 0.0,
                other_positive: small > 0.0,
            })
        }
        2 | 3 => {
            if a2.abs() < REGIME_RATIO {
                return Err(Error::Regime {
                    detected: format!("|a2| ~ rvdW (a2 = {a2})"),
                });
            }
            Ok(LengthRegime::Single { a2_positive: a2 > 0.0 })
        }
        _ => invalid(format!("scaling tables cover F3b = 1, 2, 3; got {f3b}")),
    }
}

/// Evaluates a cell after checking that `(a₀, a₂)` belong to its regime.
pub fn scaling_law(
    descriptor: &RegimeDescriptor,
    a0: f64,
    a2: f64,
    params: &ScalingParams,
    k: f64,
) -> Result<CellValue> {
    let detected = detect_regime(descriptor.f3b, a0, a2)?;
    if detected != descriptor.regime {
        return Err(Error::Regime {
            detected: detected.to_string(),
        });
    }
    evaluate_cell(descriptor, a0, a2, params, k)
}

/// Three-atom observables (recombination, dissociation, `a₃b`) with
/// wavenumber `k`, `k² = 2μE`. Raw per-channel rates: no degeneracy
/// prefactors are applied.
pub fn rate_scaling(
    descriptor: &RegimeDescriptor,
    a0: f64,
    a2: f64,
    params: &ScalingParams,
    k: f64,
) -> Result<CellValue> {
    if descriptor.observable.table() != ScalingTable::ThreeAtom {
        return invalid(format!("{} is an atom-dimer observable", descriptor.observable));
    }
    scaling_law(descriptor, a0, a2, params, k)
}

/// Atom-dimer observables with collision wavenumber `k_ad`,
/// `k_ad² = 2μ_ad E_col`.
pub fn atom_dimer_scaling(
    descriptor: &RegimeDescriptor,
    a0: f64,
    a2: f64,
    params: &ScalingParams,
    k_ad: f64,
) -> Result<CellValue> {
    if descriptor.observable.table() != ScalingTable::AtomDimer {
        return invalid(format!("{} is a three-atom observable", descriptor.observable));
    }
    scaling_law(descriptor, a0, a2, params, k_ad)
}

/// `D₃ = K₃ k⁴ a` with unit proportionality constant; `which` names the
/// dimer channel (0 or 2) whose length is `a`.
pub fn dissociation_rate(which: u32, k3: f64, k: f64, a: f64) -> Result<f64> {
    if which != 0 && which != 2 {
        return invalid(format!("dissociation is defined for F2b = 0 or 2, got {which}"));
    }
    if !(k >= 0.0) {
        return invalid(format!("wavenumber must be non-negative, got {k}"));
    }
    Ok(k3 * k.powi(4) * a)
}

/// Every descriptor of both tables, including the empty cells.
pub fn enumerate_cells() -> Vec<RegimeDescriptor> {
    let mut regimes = Vec::new();
    for dominant in [Dominant::A2, Dominant::A0] {
        for dominant_positive in [true, false] {
            for other_positive in [true, false] {
                regimes.push((
                    1,
                    LengthRegime::Hierarchy {
                        dominant,
                        dominant_positive,
                        other_positive,
                    },
                ));
            }
        }
    }
    for f3b in [2, 3] {
        for a2_positive in [true, false] {
            regimes.push((f3b, LengthRegime::Single { a2_positive }));
        }
    }
    regimes
        .into_iter()
        .flat_map(|(f3b, regime)| {
            Observable::ALL.into_iter().map(move |observable| RegimeDescriptor {
                f3b,
                regime,
                observable,
            })
        })
        .collect()
}

/// `T` for table cells: `η = 0` resonances become signed infinities.
fn tangent_or_infinite(a: f64, params: &ScalingParams) -> Result<f64> {
    match tangent_t(a, params) {
        Err(Error::Resonance { .. }) => {
            let theta = params.s0_mag * (a.abs() / params.r_phi()).ln();
            let (sin, cos) = theta.sin_cos();
            Ok(f64::INFINITY.copysign(params.beta * sin * cos))
        }
        other => other,
    }
}

/// Evaluates a cell without classifying `(a₀, a₂)`, so callers can override
/// the detected regime. `P` on an `η = 0` resonance is reported as an error.
pub fn evaluate_cell(
    descriptor: &RegimeDescriptor,
    a0: f64,
    a2: f64,
    params: &ScalingParams,
    k: f64,
) -> Result<CellValue> {
    let descriptor = RegimeDescriptor::new(descriptor.f3b, descriptor.regime, descriptor.observable)?;
    if !(k >= 0.0 && k.is_finite()) {
        return invalid(format!("wavenumber must be non-negative and finite, got {k}"));
    }
    let params = match descriptor.s1() {
        Some(s1) => params.with_s1(s1),
        None => *params,
    };
    params.validate()?;
    match descriptor.regime {
        LengthRegime::Hierarchy {
            dominant,
            dominant_positive,
            other_positive,
        } => hierarchy_cell(
            descriptor.observable,
            dominant,
            column(dominant_positive, other_positive),
            a0,
            a2,
            &params,
            k,
        ),
        LengthRegime::Single { a2_positive } => {
            single_cell(descriptor.f3b, descriptor.observable, a2_positive, a2, &params, k)
        }
    }
}

fn column(dominant_positive: bool, other_positive: bool) -> usize {
    match (dominant_positive, other_positive) {
        (true, true) => 0,
        (true, false) => 1,
        (false, true) => 2,
        (false, false) => 3,
    }
}

/// `F₃b = 1`. Rows are organised by the role of the dimer channel
/// (dominant or small length), which is how the `a₀`- and `a₂`-dominant
/// halves of the tables map onto each other.
fn hierarchy_cell(
    observable: Observable,
    dominant: Dominant,
    col: usize,
    a0: f64,
    a2: f64,
    params: &ScalingParams,
    k: f64,
) -> Result<CellValue> {
    use CellValue::{Undefined, Value};
    let (big, small, dominant_channel) = match dominant {
        Dominant::A2 => (a2, a0, 2),
        Dominant::A0 => (a0, a2, 0),
    };
    let ratio = (small / big).abs();
    let sup2 = ratio.powf(2.0 * params.s1);
    let sup4 = ratio.powf(4.0 * params.s1);
    let gamma = params.gamma;
    let m = || interference_m(small, params);
    let p = || resonance_p(small, params);
    let t = || tangent_or_infinite(small, params);
    let o = || oscillation_o(small, params);
    let channel = |which: u32| if which == dominant_channel { big } else { small };

    // recombination into the dimer of channel `which`, divided by big⁴
    let k3 = |which: u32| -> Result<Option<f64>> {
        Ok(if which == dominant_channel {
            match col {
                0 => Some(gamma + m()? * sup4),
                1 => Some(gamma + p()? * sup4),
                _ => None,
            }
        } else {
            match col {
                0 | 2 => Some(m()? * sup2),
                _ => None,
            }
        })
    };
    let scaled = |v: Option<f64>, norm: f64| v.map_or(Undefined, |v| Value(v * norm));

    let norm4 = big.powi(4);
    Ok(match observable {
        Observable::K3Zero => scaled(k3(0)?, norm4),
        Observable::K3Two => scaled(k3(2)?, norm4),
        Observable::K3Deep => Value(norm4 * if col % 2 == 0 { gamma * sup2 } else { p()? * sup2 }),
        Observable::A3b => Value(norm4 * (gamma + if col % 2 == 0 { o()? } else { t()? } * sup4)),
        Observable::D3Zero | Observable::D3Two => {
            let which = if observable == Observable::D3Zero { 0 } else { 2 };
            match k3(which)? {
                Some(v) => Value(dissociation_rate(which, v * norm4, k, channel(which))?),
                None => Undefined,
            }
        }
        Observable::KadZeroDeep | Observable::KadTwoDeep => {
            let which = if observable == Observable::KadZeroDeep { 0 } else { 2 };
            if which == dominant_channel {
                match col {
                    0 => Value(big * sup2),
                    1 => Value(big * p()? * sup2),
                    _ => Undefined,
                }
            } else {
                match col {
                    0 | 2 => Value(small * p()?),
                    _ => Undefined,
                }
            }
        }
        Observable::KadTwoZero | Observable::KadZeroTwo => {
            if col != 0 {
                return Ok(Undefined);
            }
            // both transfer rates are quoted in units of a₂
            let from = if observable == Observable::KadZeroTwo { 0 } else { 2 };
            let downward = a2 * m()? * sup2;
            if from == dominant_channel {
                Value(downward)
            } else {
                Value(a2 * downward * (small / big) * k)
            }
        }
        Observable::AadZero | Observable::AadTwo => {
            let which = if observable == Observable::AadZero { 0 } else { 2 };
            if which == dominant_channel {
                match col {
                    0 => Value(big * (1.0 + o()? * sup4)),
                    1 => Value(big * (1.0 + t()? * sup4)),
                    _ => Undefined,
                }
            } else {
                match col {
                    0 | 2 => Value(small * t()?),
                    _ => Undefined,
                }
            }
        }
    })
}

fn single_cell(
    f3b: u32,
    observable: Observable,
    a2_positive: bool,
    a2: f64,
    params: &ScalingParams,
    k: f64,
) -> Result<CellValue> {
    use CellValue::{Suppressed, Undefined, Value};
    let threshold = |v: f64| if k == 0.0 { Suppressed } else { Value(v * k.powi(4)) };
    let short = (params.r_vdw / a2.abs()).powf(2.0 * params.s1);
    let gamma = params.gamma;
    Ok(match (f3b, observable, a2_positive) {
        (2, Observable::K3Two, true) => threshold(gamma * a2.powi(8)),
        (2, Observable::K3Deep, true) => threshold(gamma * a2.powi(8)),
        (2, Observable::K3Deep, false) => threshold(gamma * a2.powi(8) * short),
        (2, Observable::D3Two, true) => match threshold(gamma * a2.powi(8)) {
            Value(k3) => Value(dissociation_rate(2, k3, k, a2)?),
            other => other,
        },
        (2, Observable::KadTwoDeep, true) => Value(a2 * short),
        (2, Observable::AadTwo, true) => Value(a2 * (1.0 + short * short)),

        (3, Observable::K3Two, true) => Value(a2.powi(4) * interference_m(a2, params)?),
        (3, Observable::K3Deep, true) => Value(a2.powi(4) * gamma),
        (3, Observable::K3Deep, false) => Value(a2.powi(4) * resonance_p(a2, params)?),
        (3, Observable::A3b, true) => Value(a2.powi(4) * oscillation_o(a2, params)?),
        (3, Observable::A3b, false) => Value(a2.powi(4) * tangent_or_infinite(a2, params)?),
        (3, Observable::D3Two, true) => {
            let k3 = a2.powi(4) * interference_m(a2, params)?;
            Value(dissociation_rate(2, k3, k, a2)?)
        }
        (3, Observable::KadTwoDeep, true) => Value(a2 * resonance_p(a2, params)?),
        (3, Observable::AadTwo, true) => Value(a2 * tangent_or_infinite(a2, params)?),
        _ => Undefined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(f3b: u32, obs: Observable, a0: f64, a2: f64, k: f64) -> CellValue {
        let regime = detect_regime(f3b, a0, a2).unwrap();
        let d = RegimeDescriptor::new(f3b, regime, obs).unwrap();
        scaling_law(&d, a0, a2, &ScalingParams::default(), k).unwrap()
    }

    #[test]
    fn quoted_cells() {
        let p = ScalingParams::default();
        assert_eq!(eval(3, Observable::K3Deep, 0.0, 500.0, 0.0), CellValue::Value(500f64.powi(4)));
        let v = eval(1, Observable::K3Zero, 10.0, 1e5, 0.0).value().unwrap();
        let expected = 1e20 * interference_m(10.0, &p).unwrap() * (1e-4f64).powf(2.0 * S1_A2_DOMINANT);
        assert!((v / expected - 1.0).abs() < 1e-13);
        assert_eq!(eval(2, Observable::A3b, 0.0, 1e3, 0.1), CellValue::Undefined);
        let v = eval(2, Observable::K3Two, 0.0, 1e3, 0.1).value().unwrap();
        assert!((v / (1e24 * 1e-4) - 1.0).abs() < 1e-13);
        assert_eq!(eval(2, Observable::K3Two, 0.0, 1e3, 0.0), CellValue::Suppressed);

        let v = eval(1, Observable::KadZeroDeep, 10.0, 1e5, 0.0).value().unwrap();
        assert!((v - 10.0 * resonance_p(10.0, &p).unwrap()).abs() < 1e-12);
        let v = eval(3, Observable::AadTwo, 0.0, 300.0, 0.0).value().unwrap();
        assert!((v - 300.0 * tangent_t(300.0, &p).unwrap()).abs() < 1e-10);
        let v = eval(2, Observable::KadTwoDeep, 0.0, 300.0, 0.0).value().unwrap();
        assert!((v - 300.0 * 300f64.powf(-2.0 * S1_F3B2)).abs() < 1e-15);
    }

    #[test]
    fn chained_transfer_rate() {
        let (a0, a2, k) = (20.0, 1e5, 0.01);
        let down = eval(1, Observable::KadTwoZero, a0, a2, k).value().unwrap();
        let up = eval(1, Observable::KadZeroTwo, a0, a2, k).value().unwrap();
        assert!((up - a2 * down * (a0 / a2) * k).abs() < 1e-12 * up.abs());
    }

    #[test]
    fn dissociation() {
        assert_eq!(dissociation_rate(0, 3.0, 0.0, 10.0).unwrap(), 0.0);
        let one = dissociation_rate(2, 3.0, 0.1, 10.0).unwrap();
        let two = dissociation_rate(2, 3.0, 0.2, 10.0).unwrap();
        assert!((two / one - 16.0).abs() < 1e-12);
        assert!(dissociation_rate(1, 1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn regime_mismatch_names_detected_regime() {
        let d = RegimeDescriptor::new(
            1,
            LengthRegime::Hierarchy {
                dominant: Dominant::A2,
                dominant_positive: true,
                other_positive: true,
            },
            Observable::K3Zero,
        )
        .unwrap();
        let err = scaling_law(&d, 1e5, 10.0, &ScalingParams::default(), 0.0).unwrap_err();
        assert_eq!(err, Error::Regime { detected: "a0>>a2".into() });
        assert!(matches!(
            scaling_law(&d, 10.0, 20.0, &ScalingParams::default(), 0.0),
            Err(Error::Regime { .. })
        ));
        // the override path ignores classification
        assert!(evaluate_cell(&d, 10.0, 20.0, &ScalingParams::default(), 0.0).is_ok());
    }

    #[test]
    fn wrong_table_is_rejected() {
        let d = RegimeDescriptor::new(3, LengthRegime::Single { a2_positive: true }, Observable::AadTwo).unwrap();
        assert!(rate_scaling(&d, 0.0, 1e3, &ScalingParams::default(), 0.0).is_err());
        assert!(atom_dimer_scaling(&d, 0.0, 1e3, &ScalingParams::default(), 0.0).is_ok());
    }

    #[test]
    fn observable_parsing() {
        assert_eq!("K3d".parse::<Observable>().unwrap(), Observable::K3Deep);
        assert_eq!("K3(0)".parse::<Observable>().unwrap(), Observable::K3Zero);
        assert_eq!("Kad(2/0)".parse::<Observable>().unwrap(), Observable::KadTwoZero);
        assert_eq!("aad(2)".parse::<Observable>().unwrap(), Observable::AadTwo);
        assert!("K4".parse::<Observable>().is_err());
    }
}
