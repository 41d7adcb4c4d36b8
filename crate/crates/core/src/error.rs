use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// `|a|² + |b|²` (or `w² + x² + y² + z²`) is too far from one.
    NonUnit {
        norm_sq: f64,
    },
    /// An index operation was applied to a spinor with the wrong variance.
    VarianceMismatch,
    /// The spinor pair does not satisfy the dyad contraction relations.
    DyadInvalid {
        deviation: f64,
    },
    SingularFrameMetric,
    CutoffTooLarge {
        cutoff: usize,
        max_dimension: usize,
    },
    /// Mode indices run from 1 to 4.
    BadMode(usize),
    TruncationTooLossy {
        deficit: f64,
    },
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    NegativeEpoch(f64),
    InvalidExpansion,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonUnit { norm_sq } => {
                write!(
                    f,
                    "not a unit element: squared norm {norm_sq} differs from 1"
                )
            }
            Error::VarianceMismatch => f.write_str("spinor has the wrong index position"),
            Error::DyadInvalid { deviation } => {
                write!(f, "spinor pair is not a dyad (deviation {deviation:e})")
            }
            Error::SingularFrameMetric => f.write_str("frame metric is singular"),
            Error::CutoffTooLarge {
                cutoff,
                max_dimension,
            } => write!(
                f,
                "cutoff {cutoff} gives a Fock space larger than {max_dimension} states"
            ),
            Error::BadMode(r) => write!(f, "mode index {r} outside 1..=4"),
            Error::TruncationTooLossy { deficit } => {
                write!(
                    f,
                    "coherent state loses {deficit:e} of its norm to the cutoff"
                )
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NegativeEpoch(t) => write!(f, "epoch {t} is negative"),
            Error::InvalidExpansion => f.write_str("expansion model needs r0 >= 0 and c > 0"),
        }
    }
}

impl core::error::Error for Error {}
