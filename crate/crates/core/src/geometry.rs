//! Line parametrization and recovery of image-space patterns from
//! accumulator cells.

use crate::error::{FhtError, Result};
use crate::image::{mirror_column, Quadrant};
use crate::pattern::dyadic_pattern;
use crate::transform::{FrameDims, HoughAccumulator, Source};

/// Quadrant of a line whose normal makes angle `phi` (degrees) with the x axis.
/// Intervals are half-open on the right.
pub fn classify_angle(phi: f64) -> Result<Quadrant> {
    if !(-45.0..135.0).contains(&phi) {
        return Err(FhtError::AngleOutOfRange(phi));
    }
    Ok(if phi < 0.0 {
        Quadrant::A
    } else if phi < 45.0 {
        Quadrant::B
    } else if phi < 90.0 {
        Quadrant::C
    } else {
        Quadrant::D
    })
}

/// Horizontal drift `h * |tan(phi)|` of a mostly-vertical line across `h` rows.
/// The sign is carried by the quadrant, not the shift.
pub fn shift_of_angle(phi: f64, height: f64) -> Result<f64> {
    let t = phi.to_radians().tan().abs();
    if !t.is_finite() || t > 1.0 + 1e-12 {
        return Err(FhtError::NotMostlyVertical(phi));
    }
    Ok(height * t)
}

/// A cell of one quadrant's accumulator, with the frame it refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LineParams {
    pub quadrant: Quadrant,
    pub x0: usize,
    pub shift: usize,
    pub dims: FrameDims,
}

impl LineParams {
    pub fn new(quadrant: Quadrant, x0: usize, shift: usize, dims: FrameDims) -> Result<Self> {
        if x0 >= dims.padded_width {
            return Err(FhtError::ColumnOutOfRange {
                x0,
                width: dims.padded_width,
            });
        }
        if shift >= dims.padded_height {
            return Err(FhtError::ShiftOutOfRange {
                shift,
                height: dims.padded_height,
            });
        }
        Ok(LineParams {
            quadrant,
            x0,
            shift,
            dims,
        })
    }

    /// Cell `(shift, x0)` of the single-quadrant transform of a `width x height` image.
    pub fn for_image(width: usize, height: usize, quadrant: Quadrant, x0: usize, shift: usize) -> Result<Self> {
        Self::new(quadrant, x0, shift, FrameDims::for_quadrant(width, height, quadrant))
    }

    /// Cell `(shift, x0)` of `acc`. Regrouped and angle-range accumulators
    /// are rejected: their columns no longer name a pattern start.
    pub fn from_accumulator(acc: &HoughAccumulator, x0: usize, shift: usize) -> Result<Self> {
        if acc.shifted {
            return Err(FhtError::ShiftedInput);
        }
        if acc.source != Source::Quadrant {
            return Err(FhtError::UnsupportedQuadrant(acc.quadrant));
        }
        Self::new(acc.quadrant, x0, shift, acc.dims)
    }
}

/// Pixels of the original image covered by one pattern. Ordered by row for
/// mostly-vertical quadrants and by column for mostly-horizontal ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSegment {
    pub pixels: Vec<(usize, usize)>,
}

impl PatternSegment {
    pub fn len(&self) -> usize {
        self.pixels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pixels.is_empty()
    }

    pub fn first(&self) -> (usize, usize) {
        self.pixels[0]
    }

    pub fn last(&self) -> (usize, usize) {
        self.pixels[self.pixels.len() - 1]
    }
}

/// The part of the pattern behind `p` that lies on the original image, or
/// `None` if the pattern only crosses padding (the black zone).
///
/// The pattern is traced across the whole padded strip with columns reduced
/// modulo the padded width, and only pixels inside the image are kept. That
/// covers both a pattern leaving the image sideways and one that runs off
/// the right edge of the padding and re-enters on the left.
pub fn pattern_on_original(p: &LineParams) -> Option<PatternSegment> {
    let d = &p.dims;
    let (content_w, content_h) = if p.quadrant.is_transposed() {
        (d.image_height, d.image_width)
    } else {
        (d.image_width, d.image_height)
    };
    let start = if p.quadrant.is_mirrored() {
        mirror_column(p.x0, d.frame_width, d.padded_width)
    } else {
        p.x0
    };
    let cols = dyadic_pattern(d.padded_height, start, p.shift, d.padded_width).expect("validated LineParams");

    let pixels: Vec<(usize, usize)> = cols
        .iter()
        .take(content_h)
        .enumerate()
        .filter(|&(_, &c)| c < d.frame_width)
        .map(|(y, &c)| {
            let x = if p.quadrant.is_mirrored() {
                d.frame_width - 1 - c
            } else {
                c
            };
            (x, y)
        })
        .filter(|&(x, _)| x < content_w)
        .map(|(x, y)| if p.quadrant.is_transposed() { (y, x) } else { (x, y) })
        .collect();

    if pixels.is_empty() {
        None
    } else {
        Some(PatternSegment { pixels })
    }
}

/// Whether a quadrant-A cell can only ever see padding: the pattern starts
/// right of the image and does not wrap back within the strip.
pub fn in_black_zone(x0: usize, shift: usize, width: usize, padded_width: usize) -> bool {
    x0 >= width && x0 + shift < padded_width
}
