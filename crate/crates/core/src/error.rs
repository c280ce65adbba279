use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Errors surfaced by the solvers and operators.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An index or order fell outside a precomputed table.
    OutOfRange {
        what: &'static str,
        value: usize,
        max: usize,
    },
    /// A sampled value was NaN or infinite.
    NonFinite(&'static str),
    /// A parameter violated its domain (nonpositive rate, bad grid, ...).
    Domain(&'static str),
    /// The selection function has a vanishing second derivative at the
    /// requested extremum; the nondimensionalization is undefined.
    DegenerateExtremum,
    /// Metadata needed by a checker (e.g. a global minimum) is missing.
    InsufficientMetadata(&'static str),
    /// A grid density carries significant mass next to the boundary.
    DomainTooSmall,
    /// The assembled linear operator is numerically singular.
    SingularOperator { condition: f64 },
    /// The quadratic equation for the first coefficient has no real root.
    NoRealRoot,
    /// The linear branch of the first-coefficient equation lost its pivot.
    DegeneratePivot,
    /// A fixed-point or time-stepping loop failed to converge.
    Divergence { iterations: usize, last_update: f64 },
    /// The mortality denominator turned nonpositive on the support; no
    /// concentrated steady state exists at this extremum.
    Inadmissible { margin: f64 },
    /// The integrated state exceeded the blow-up guard.
    BlowUp { t: f64, norm: f64 },
    /// A time step produced negative density beyond round-off.
    StepSize { t: f64 },
    /// A decay fit was requested on unusable data.
    FitError(&'static str),
    /// An integrand grows towards the grid boundary.
    TailOverflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OutOfRange { what, value, max } => {
                write!(f, "{what} = {value} exceeds table range {max}")
            }
            Error::NonFinite(what) => write!(f, "non-finite value in {what}"),
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::DegenerateExtremum => {
                write!(f, "selection function has m''(x0) = 0 at the chosen extremum")
            }
            Error::InsufficientMetadata(what) => write!(f, "insufficient metadata: {what}"),
            Error::DomainTooSmall => {
                write!(f, "grid domain too small: significant mass near the boundary")
            }
            Error::SingularOperator { condition } => {
                write!(f, "linear operator near-singular (condition ~ {condition:.3e})")
            }
            Error::NoRealRoot => {
                write!(f, "no real root for the first coefficient; eps too large")
            }
            Error::DegeneratePivot => {
                write!(f, "degenerate pivot in the first-coefficient equation")
            }
            Error::Divergence {
                iterations,
                last_update,
            } => write!(
                f,
                "iteration diverged after {iterations} steps (last update {last_update:.3e})"
            ),
            Error::Inadmissible { margin } => write!(
                f,
                "inadmissible extremum (margin {margin:.3e}): mortality denominator nonpositive"
            ),
            Error::BlowUp { t, norm } => {
                write!(f, "finite-time blow-up at t = {t:.3} (norm {norm:.3e})")
            }
            Error::StepSize { t } => {
                write!(f, "time step too large at t = {t:.3}: negativity produced")
            }
            Error::FitError(what) => write!(f, "decay fit error: {what}"),
            Error::TailOverflow => {
                write!(f, "tail integrand grows towards the boundary; lower delta'")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
