//! Transforms over an arbitrary range of inclinations.
//!
//! A range `[-gamma1; gamma2]` is mapped onto quadrant A (`[-45; 0]`) by a
//! horizontal shear followed by a horizontal scale. Shearing by `spl` columns
//! per row turns `tan(phi)` into `tan(phi) + spl`; scaling columns by `alpha`
//! turns it into `alpha * tan(phi)`. Neither is applied to the image up front:
//! both are folded into the first level of the block-doubling recursion.

use crate::error::{FhtError, Result};
use crate::image::{next_pow2, GrayImage, Quadrant};
use crate::transform::{run_block_doubling, FrameDims, HoughAccumulator, Source};

/// Inclination range `[-gamma1; gamma2]`, in degrees.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleRange {
    pub gamma1: f64,
    pub gamma2: f64,
}

impl AngleRange {
    pub fn new(gamma1: f64, gamma2: f64) -> Result<Self> {
        let ok = |g: f64| g.is_finite() && (0.0..90.0).contains(&g);
        if !ok(gamma1) || !ok(gamma2) || gamma1 + gamma2 <= 0.0 {
            return Err(FhtError::InvalidAngleRange { gamma1, gamma2 });
        }
        Ok(AngleRange { gamma1, gamma2 })
    }
}

/// Shear (`spl`, columns per row) and scale (`alpha`) applied before the
/// quadrant-A transform.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformPlan {
    pub spl: f64,
    pub alpha: f64,
    pub range: Option<AngleRange>,
}

impl TransformPlan {
    pub fn new(spl: f64, alpha: f64) -> Result<Self> {
        if !spl.is_finite() || !alpha.is_finite() || alpha <= 0.0 {
            return Err(FhtError::InvalidPlan { spl, alpha });
        }
        Ok(TransformPlan {
            spl,
            alpha,
            range: None,
        })
    }

    pub fn identity() -> Self {
        TransformPlan {
            spl: 0.0,
            alpha: 1.0,
            range: None,
        }
    }

    /// Integer column displacement for row `r` (`spl * r`, rounded half up).
    pub fn row_displacement(&self, r: usize) -> isize {
        (self.spl * r as f64 + 0.5).floor() as isize
    }

    /// Content width after scaling a `width`-column image.
    pub fn scaled_width(&self, width: usize) -> usize {
        (self.alpha * width as f64 - 1e-9).ceil().max(1.0) as usize
    }
}

/// Shear so that `gamma2` lands on 0 degrees, then scale so that `-gamma1`
/// lands on -45 degrees.
pub fn plan_transform(range: AngleRange) -> TransformPlan {
    let t1 = range.gamma1.to_radians().tan();
    let t2 = range.gamma2.to_radians().tan();
    TransformPlan {
        spl: -t2,
        alpha: 1.0 / (t1 + t2),
        range: Some(range),
    }
}

/// Inclination (degrees, in the original image) summed by row `shift` of an
/// angle-range accumulator built from an image of height `height`.
pub fn angle_of_row(shift: f64, plan: &TransformPlan, height: f64) -> f64 {
    let tan_target = -shift / height;
    (tan_target / plan.alpha - plan.spl).atan().to_degrees()
}

/// Quadrant-A transform of the image sheared by `plan.spl` and scaled by
/// `plan.alpha`, without building the transformed image.
///
/// Row `r` of the virtual image reads original column
/// `floor(x / alpha) + round(spl * r)` at column `x`. Columns are cyclic in
/// the padded width, so content displaced past the left edge reappears in
/// the zero padding on the right rather than on top of the image.
pub fn fht_angle_range(image: &GrayImage, plan: &TransformPlan) -> Result<HoughAccumulator> {
    let (w, h) = (image.width(), image.height());
    if plan.alpha * (w as f64) < 1.0 {
        return Err(FhtError::ScaleTooSmall {
            alpha: plan.alpha,
            width: w,
        });
    }
    let hp = next_pow2(h);
    let scaled_w = plan.scaled_width(w);
    let pw = scaled_w + hp;

    let max_disp = (0..h)
        .map(|r| plan.row_displacement(r).unsigned_abs())
        .max()
        .unwrap_or(0);
    let room = if plan.spl > 0.0 {
        hp as f64
    } else {
        hp as f64 + scaled_w as f64 - plan.alpha * w as f64
    };
    if plan.alpha * max_disp as f64 > room + 1e-9 {
        return Err(FhtError::ShearWraps { spl: plan.spl });
    }

    // Unsheared source column of every output column; the shear only adds a
    // per-row constant.
    let base: Vec<isize> = (0..pw)
        .map(|x| {
            let signed = if plan.spl > 0.0 && x >= scaled_w {
                x as isize - pw as isize
            } else {
                x as isize
            };
            (signed as f64 / plan.alpha + 1e-9).floor() as isize
        })
        .collect();

    let (cells, _) = run_block_doubling(hp, pw, |r, row| {
        row.fill(0);
        if r >= h {
            return;
        }
        let disp = plan.row_displacement(r);
        let src_row = image.row(r);
        for (dst, &b) in row.iter_mut().zip(&base) {
            let src = b + disp;
            if src >= 0 && (src as usize) < w {
                *dst = u32::from(src_row[src as usize]);
            }
        }
    });

    let dims = FrameDims {
        image_width: w,
        image_height: h,
        frame_width: scaled_w,
        frame_height: h,
        padded_height: hp,
        padded_width: pw,
    };
    Ok(HoughAccumulator::from_cells(
        Quadrant::A,
        dims,
        Source::AngleRange {
            spl: plan.spl,
            alpha: plan.alpha,
        },
        cells,
    ))
}
