use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The angular kernel was evaluated inside the guard band of one of its
    /// poles at `x = (2n)^2`.
    #[error("x = {x} lies within the guard band of the kernel pole at x = {pole}")]
    Pole { x: f64, pole: f64 },

    /// A scaling function was evaluated exactly on one of its resonances
    /// with zero inelasticity.
    #[error("scaling function diverges at a = {a} (eta = 0 resonance)")]
    Resonance { a: f64 },

    #[error("lengths do not match the requested regime: detected {detected}")]
    Regime { detected: String },

    #[error("eigenvalue branch {branch} approaches zero near x = {x} without a resolvable sign change")]
    UnresolvedCrossing { branch: usize, x: f64 },

    #[error("channel tracking failed near R = {r}: {reason}")]
    Tracking { r: f64, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
