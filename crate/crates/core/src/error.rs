use thiserror::Error;

use crate::image::Quadrant;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FhtError {
    #[error("image dimensions must be non-zero (got {width}x{height})")]
    EmptyImage { width: usize, height: usize },
    #[error("pixel buffer holds {got} values, expected {expected}")]
    PixelCount { expected: usize, got: usize },
    #[error("pattern height {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("shift {shift} out of range for strip height {height}")]
    ShiftOutOfRange { shift: usize, height: usize },
    #[error("column {x0} out of range for cyclic width {width}")]
    ColumnOutOfRange { x0: usize, width: usize },
    #[error("angle {0} degrees outside [-45, 135)")]
    AngleOutOfRange(f64),
    #[error("angle {0} degrees is not in a mostly-vertical quadrant (|tan| > 1)")]
    NotMostlyVertical(f64),
    #[error("row {row} outside full Hough image with {rows} rows")]
    RowOutOfRange { row: usize, rows: usize },
    #[error("invalid angle range [-{gamma1}; {gamma2}] degrees")]
    InvalidAngleRange { gamma1: f64, gamma2: f64 },
    #[error("invalid transform plan (spl {spl}, alpha {alpha})")]
    InvalidPlan { spl: f64, alpha: f64 },
    #[error("scale {alpha} shrinks a {width}-column image to nothing")]
    ScaleTooSmall { alpha: f64, width: usize },
    #[error("shear of {spl} per row wraps content onto itself")]
    ShearWraps { spl: f64 },
    #[error("{0:?} accumulator is not supported here")]
    UnsupportedQuadrant(Quadrant),
    #[error("accumulator has already been regrouped with fhtshift")]
    AlreadyShifted,
    #[error("accumulator has not been regrouped with fhtshift")]
    NotShifted,
    #[error("line recovery needs an accumulator that has not been regrouped")]
    ShiftedInput,
}

pub type Result<T> = std::result::Result<T, FhtError>;
