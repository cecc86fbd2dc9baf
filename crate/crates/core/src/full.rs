//! Full Hough image: all four quadrants stacked into one accumulator.
//!
//! The image is embedded in a `P x P` square (`P` = next power of two of the
//! larger side) so every quadrant block has `P` rows and `2P` columns. Blocks
//! are stacked as A (flipped), B, C (flipped), D. Neighbouring blocks agree on
//! their shared edge row (shift 0 between A/B and C/D, full shift between
//! B/C), and each shared row is kept once, giving `4P - 3` rows.

use rayon::prelude::*;

use crate::error::{FhtError, Result};
use crate::geometry::{pattern_on_original, LineParams, PatternSegment};
use crate::image::{next_pow2, GrayImage, Quadrant};
use crate::transform::{fht_quadrant, FrameDims, HoughAccumulator};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullHoughImage {
    /// Side of the square the image was embedded in.
    pub size: usize,
    pub image_width: usize,
    pub image_height: usize,
    /// Set once rows have been regrouped by [`crate::shift::fhtshift_full`].
    pub shifted: bool,
    cells: Vec<u32>,
}

/// A cell of the full Hough image.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FullHoughPoint {
    pub row: usize,
    pub x0: usize,
}

pub fn full_rows(size: usize) -> usize {
    4 * size - 3
}

impl FullHoughImage {
    pub fn rows(&self) -> usize {
        full_rows(self.size)
    }

    pub fn cols(&self) -> usize {
        2 * self.size
    }

    pub fn get(&self, row: usize, x0: usize) -> u32 {
        self.cells[row * self.cols() + x0]
    }

    pub fn row(&self, row: usize) -> &[u32] {
        let c = self.cols();
        &self.cells[row * c..(row + 1) * c]
    }

    pub(crate) fn row_mut(&mut self, row: usize) -> &mut [u32] {
        let c = self.cols();
        &mut self.cells[row * c..(row + 1) * c]
    }

    pub fn cells(&self) -> &[u32] {
        &self.cells
    }

    pub fn max_cell(&self) -> u32 {
        self.cells.iter().copied().max().unwrap_or(0)
    }

    /// Recovers the pattern behind a cell. Regrouped images are rejected.
    pub fn line_at(&self, point: FullHoughPoint) -> Result<Option<PatternSegment>> {
        if self.shifted {
            return Err(FhtError::ShiftedInput);
        }
        line_from_full_point(point, self.image_width, self.image_height)
    }
}

/// The four quadrant transforms of `image` embedded in its `P x P` square,
/// in order A, B, C, D.
pub fn square_quadrants(image: &GrayImage) -> (usize, [HoughAccumulator; 4]) {
    let size = next_pow2(image.width().max(image.height()));
    let square = image.embedded(size, size).expect("non-empty square");
    let accs: Vec<HoughAccumulator> = Quadrant::ALL
        .par_iter()
        .map(|&q| {
            let mut acc = fht_quadrant(&square, q);
            acc.dims = FrameDims::for_square(image.width(), image.height(), size);
            acc
        })
        .collect();
    let accs: [HoughAccumulator; 4] = accs.try_into().expect("four quadrants");
    (size, accs)
}

/// For each of the three seams (A/B, B/C, C/D), whether the two blocks'
/// shared edge rows are cell-identical.
pub fn seams_match(blocks: &[HoughAccumulator; 4]) -> [bool; 3] {
    let last = blocks[0].rows() - 1;
    [
        blocks[0].row(0) == blocks[1].row(0),
        blocks[1].row(last) == blocks[2].row(last),
        blocks[2].row(0) == blocks[3].row(0),
    ]
}

pub fn full_hough(image: &GrayImage) -> FullHoughImage {
    let (size, blocks) = square_quadrants(image);
    let seams = seams_match(&blocks);
    assert!(
        seams.iter().all(|&m| m),
        "quadrant seams disagree ({seams:?}); quadrant conventions are inconsistent"
    );

    let cols = 2 * size;
    let mut cells = Vec::with_capacity(full_rows(size) * cols);
    for row in 0..full_rows(size) {
        let (q, s) = attribute_row(row, size).expect("row in range");
        cells.extend_from_slice(blocks[quadrant_index(q)].row(s));
    }
    FullHoughImage {
        size,
        image_width: image.width(),
        image_height: image.height(),
        shifted: false,
        cells,
    }
}

fn quadrant_index(q: Quadrant) -> usize {
    match q {
        Quadrant::A => 0,
        Quadrant::B => 1,
        Quadrant::C => 2,
        Quadrant::D => 3,
    }
}

/// Quadrant and local shift of a full-image row. A shared seam row belongs
/// to the block above it.
pub fn attribute_row(row: usize, size: usize) -> Result<(Quadrant, usize)> {
    let rows = full_rows(size);
    if size == 0 || row >= rows {
        return Err(FhtError::RowOutOfRange { row, rows });
    }
    let p = size;
    Ok(if row < p {
        (Quadrant::A, p - 1 - row)
    } else if row < 2 * p - 1 {
        (Quadrant::B, row - (p - 1))
    } else if row < 3 * p - 2 {
        (Quadrant::C, (p - 1) - (row - (2 * p - 2)))
    } else {
        (Quadrant::D, row - (3 * p - 3))
    })
}

/// Full-image row holding local shift `shift` of quadrant `q`. Seam rows map
/// to the row shared with the previous block.
pub fn placement_row(q: Quadrant, shift: usize, size: usize) -> usize {
    let p = size;
    match q {
        Quadrant::A => p - 1 - shift,
        Quadrant::B => p - 1 + shift,
        Quadrant::C => 2 * p - 2 + (p - 1 - shift),
        Quadrant::D => 3 * p - 3 + shift,
    }
}

/// Pattern behind a full-image cell, for an original image of the given size.
pub fn line_from_full_point(
    point: FullHoughPoint,
    image_width: usize,
    image_height: usize,
) -> Result<Option<PatternSegment>> {
    let size = next_pow2(image_width.max(image_height));
    let (q, s) = attribute_row(point.row, size)?;
    let dims = FrameDims::for_square(image_width, image_height, size);
    let params = LineParams::new(q, point.x0, s, dims)?;
    Ok(pattern_on_original(&params))
}
