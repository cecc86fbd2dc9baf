//! Brute-force references for the fast paths.
//!
//! Everything here materializes each pattern and sums pixels one at a time.
//! It is quadratic in the image size and meant for images up to ~64 pixels
//! on a side.

use crate::error::{FhtError, Result};
use crate::image::{next_pow2, pad_for_quadrant, GrayImage, Quadrant};
use crate::pattern::{dyadic_pattern, pattern_offsets};
use crate::range::TransformPlan;
use crate::transform::{FrameDims, HoughAccumulator, Source};

/// Reference single-quadrant transform with the same output contract as
/// [`crate::transform::fht_quadrant`].
pub fn slow_hough(image: &GrayImage, quadrant: Quadrant) -> HoughAccumulator {
    let padded = pad_for_quadrant(image, quadrant);
    let (hp, pw) = (padded.padded_height, padded.padded_width);
    let frame_w = padded.width as isize;
    let mut cells = vec![0u32; hp * pw];
    for s in 0..hp {
        for label in 0..pw {
            // Mirrored frames are labelled by the row-0 column in the original frame.
            let start = if quadrant.is_mirrored() {
                (frame_w - 1 - label as isize).rem_euclid(pw as isize) as usize
            } else {
                label
            };
            let cols = dyadic_pattern(hp, start, s, pw).expect("valid pattern");
            cells[s * pw + label] = cols.iter().enumerate().map(|(y, &x)| padded.get(x, y)).sum();
        }
    }
    let dims = FrameDims::for_quadrant(image.width(), image.height(), quadrant);
    HoughAccumulator::from_cells(quadrant, dims, Source::Quadrant, cells)
}

/// Largest horizontal distance between the dyadic pattern of height `n` and
/// shift `shift` and the straight segment joining its two endpoints.
pub fn pattern_deviation(n: usize, shift: usize) -> Result<f64> {
    if n < 2 {
        return Err(FhtError::NotPowerOfTwo(n));
    }
    let cols = pattern_offsets(n, shift)?;
    let span = (n - 1) as f64;
    Ok(cols
        .iter()
        .enumerate()
        .map(|(y, &x)| (x as f64 - shift as f64 * y as f64 / span).abs())
        .fold(0.0, f64::max))
}

/// The sheared-and-scaled image the angle-range transform works on, built
/// explicitly as a `padded_height x padded_width` grid.
pub fn sheared_scaled_image(image: &GrayImage, plan: &TransformPlan) -> (FrameDims, Vec<u32>) {
    let (w, h) = (image.width(), image.height());
    let hp = next_pow2(h);
    let scaled_w = (plan.alpha * w as f64 - 1e-9).ceil().max(1.0) as usize;
    let pw = scaled_w + hp;
    let mut grid = vec![0u32; hp * pw];
    for r in 0..h {
        let shear = (plan.spl * r as f64 + 0.5).floor() as isize;
        for x in 0..pw {
            let signed = if plan.spl > 0.0 && x >= scaled_w {
                x as isize - pw as isize
            } else {
                x as isize
            };
            let src = (signed as f64 / plan.alpha + 1e-9).floor() as isize + shear;
            if (0..w as isize).contains(&src) {
                grid[r * pw + x] = u32::from(image.get(src as usize, r));
            }
        }
    }
    let dims = FrameDims {
        image_width: w,
        image_height: h,
        frame_width: scaled_w,
        frame_height: h,
        padded_height: hp,
        padded_width: pw,
    };
    (dims, grid)
}

/// Reference for [`crate::range::fht_angle_range`]: materializes the
/// transformed image, then sums along every dyadic pattern.
pub fn slow_angle_range(image: &GrayImage, plan: &TransformPlan) -> HoughAccumulator {
    let (dims, grid) = sheared_scaled_image(image, plan);
    let (hp, pw) = (dims.padded_height, dims.padded_width);
    let mut cells = vec![0u32; hp * pw];
    for s in 0..hp {
        for x0 in 0..pw {
            let cols = dyadic_pattern(hp, x0, s, pw).expect("valid pattern");
            cells[s * pw + x0] = cols.iter().enumerate().map(|(y, &x)| grid[y * pw + x]).sum();
        }
    }
    HoughAccumulator::from_cells(
        Quadrant::A,
        dims,
        Source::AngleRange {
            spl: plan.spl,
            alpha: plan.alpha,
        },
        cells,
    )
}
