//! Fast Hough transform over dyadic line patterns.
//!
//! * [`transform`]: single-quadrant transform by block doubling.
//! * [`geometry`]: line parameters and recovery of image-space patterns.
//! * [`full`]: the four quadrants stacked into one full Hough image.
//! * [`range`]: transforms over an arbitrary inclination range via a fused
//!   shear and scale.
//! * [`shift`]: `fhtshift` row regrouping.
//! * [`oracle`]: brute-force references.
//! * [`io`]: PGM input, accumulator files and previews.

pub mod error;
pub mod full;
pub mod geometry;
pub mod image;
pub mod io;
pub mod oracle;
pub mod pattern;
pub mod range;
pub mod shift;
pub mod transform;

pub use error::{FhtError, Result};
pub use full::{attribute_row, full_hough, line_from_full_point, FullHoughImage, FullHoughPoint};
pub use geometry::{classify_angle, pattern_on_original, shift_of_angle, LineParams, PatternSegment};
pub use image::{pad_for_quadrant, GrayImage, PaddedImage, Quadrant};
pub use pattern::dyadic_pattern;
pub use range::{angle_of_row, fht_angle_range, plan_transform, AngleRange, TransformPlan};
pub use shift::{fhtshift_full, fhtshift_quadrant};
pub use transform::{fht_quadrant, fht_quadrant_counted, FrameDims, HoughAccumulator};
