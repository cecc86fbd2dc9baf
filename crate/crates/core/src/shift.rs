//! `fhtshift`: cyclic per-row regrouping of accumulators.
//!
//! In quadrant A, row `s` can only be non-zero on `[0, w) ∪ [W - s, W)`:
//! patterns that start on the image, plus patterns that start in the padding
//! and wrap around onto it. Rotating row `s` right by
//! `round_half_up(Hp - i/2)`, where `i = Hp - 1 - s` is the row's index in
//! the vertically flipped block, joins the two pieces into a single run of
//! length `w + s` centred near `(W + 1) / 2`.
//!
//! Quadrant D has the same layout on the transposed frame. Quadrants B and C
//! are mirrored, their meaningful cells form `[0, w + s)`, and the rotation
//! mirrors accordingly.

use crate::error::{FhtError, Result};
use crate::full::{attribute_row, FullHoughImage};
use crate::image::Quadrant;
use crate::transform::HoughAccumulator;

/// Right rotation applied to row `shift` of a quadrant block of height
/// `padded_height`.
pub fn row_rotation(quadrant: Quadrant, shift: usize, padded_height: usize) -> usize {
    let hp = padded_height;
    match quadrant {
        // round_half_up(hp - (hp - 1 - s) / 2)
        Quadrant::A | Quadrant::D => (hp + 2 + shift) / 2,
        Quadrant::B | Quadrant::C => (hp + 2 - shift) / 2,
    }
}

fn rotate(row: &mut [u32], by: usize, inverse: bool) {
    let by = by % row.len();
    if inverse {
        row.rotate_left(by);
    } else {
        row.rotate_right(by);
    }
}

pub fn fhtshift_quadrant(acc: &HoughAccumulator) -> Result<HoughAccumulator> {
    if acc.shifted {
        return Err(FhtError::AlreadyShifted);
    }
    let mut out = acc.clone();
    regroup_quadrant(&mut out, false);
    out.shifted = true;
    Ok(out)
}

/// Undoes [`fhtshift_quadrant`].
pub fn fhtunshift_quadrant(acc: &HoughAccumulator) -> Result<HoughAccumulator> {
    if !acc.shifted {
        return Err(FhtError::NotShifted);
    }
    let mut out = acc.clone();
    regroup_quadrant(&mut out, true);
    out.shifted = false;
    Ok(out)
}

fn regroup_quadrant(acc: &mut HoughAccumulator, inverse: bool) {
    let hp = acc.rows();
    let q = acc.quadrant;
    for s in 0..hp {
        rotate(acc.row_mut(s), row_rotation(q, s, hp), inverse);
    }
}

pub fn fhtshift_full(full: &FullHoughImage) -> Result<FullHoughImage> {
    if full.shifted {
        return Err(FhtError::AlreadyShifted);
    }
    let mut out = full.clone();
    regroup_full(&mut out, false);
    out.shifted = true;
    Ok(out)
}

/// Undoes [`fhtshift_full`].
pub fn fhtunshift_full(full: &FullHoughImage) -> Result<FullHoughImage> {
    if !full.shifted {
        return Err(FhtError::NotShifted);
    }
    let mut out = full.clone();
    regroup_full(&mut out, true);
    out.shifted = false;
    Ok(out)
}

fn regroup_full(full: &mut FullHoughImage, inverse: bool) {
    let size = full.size;
    for row in 0..full.rows() {
        let (q, s) = attribute_row(row, size).expect("row in range");
        rotate(full.row_mut(row), row_rotation(q, s, size), inverse);
    }
}

/// Maximal runs of non-zero cells in a row, as half-open `(start, end)`
/// intervals. A run touching both ends of the row is reported as two runs.
pub fn positive_runs(row: &[u32]) -> Vec<(usize, usize)> {
    let mut runs = Vec::new();
    let mut start = None;
    for (i, &v) in row.iter().enumerate() {
        match (v > 0, start) {
            (true, None) => start = Some(i),
            (false, Some(s)) => {
                runs.push((s, i));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        runs.push((s, row.len()));
    }
    runs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::full::full_hough;
    use crate::image::GrayImage;
    use crate::transform::fht_quadrant;

    #[test]
    fn rotation_amounts() {
        // Flipped row 0 (s = Hp - 1) moves by Hp, flipped row 3 (s = 0) by 3.
        assert_eq!(row_rotation(Quadrant::A, 3, 4), 4);
        assert_eq!(row_rotation(Quadrant::A, 0, 4), 3);
        assert_eq!(row_rotation(Quadrant::A, 2, 4), 4);
    }

    #[test]
    fn all_ones_row_becomes_single_run() {
        let acc = fht_quadrant(&GrayImage::filled(4, 4, 1).unwrap(), Quadrant::A);
        assert_eq!(positive_runs(acc.row(2)), vec![(0, 4), (6, 8)]);
        let shifted = fhtshift_quadrant(&acc).unwrap();
        assert_eq!(positive_runs(shifted.row(2)), vec![(2, 8)]);
        for s in 0..4 {
            let runs = positive_runs(shifted.row(s));
            assert_eq!(runs.len(), 1);
            assert_eq!(runs[0].1 - runs[0].0, 4 + s);
        }
    }

    #[test]
    fn double_application_rejected() {
        let acc = fht_quadrant(&GrayImage::filled(2, 2, 1).unwrap(), Quadrant::A);
        let once = fhtshift_quadrant(&acc).unwrap();
        assert_eq!(fhtshift_quadrant(&once), Err(FhtError::AlreadyShifted));
        assert_eq!(fhtunshift_quadrant(&acc), Err(FhtError::NotShifted));
        assert_eq!(fhtunshift_quadrant(&once).unwrap(), acc);
    }

    #[test]
    fn full_zero_stays_zero() {
        let f = full_hough(&GrayImage::zeros(4, 4).unwrap());
        let g = fhtshift_full(&f).unwrap();
        assert!(g.cells().iter().all(|&c| c == 0));
        assert!(fhtshift_full(&g).is_err());
    }

    #[test]
    fn full_all_ones_rows_contiguous() {
        let f = fhtshift_full(&full_hough(&GrayImage::filled(4, 4, 1).unwrap())).unwrap();
        for r in 0..13 {
            assert_eq!(positive_runs(f.row(r)).len(), 1, "row {r}");
        }
        assert_eq!(
            fhtunshift_full(&f).unwrap(),
            full_hough(&GrayImage::filled(4, 4, 1).unwrap())
        );
    }

    #[test]
    fn runs_helper() {
        assert_eq!(positive_runs(&[1, 0, 2, 2, 0]), vec![(0, 1), (2, 4)]);
        assert_eq!(positive_runs(&[0, 0]), vec![]);
        assert_eq!(positive_runs(&[3, 3]), vec![(0, 2)]);
    }
}
