//! Single-quadrant fast Hough transform by block doubling.
//!
//! Level `k` holds, for every block of `2^k` consecutive rows, the sums along
//! all dyadic patterns of that height: row `t` of a block is shift `t`, column
//! `x` is the pattern's start column. Two adjacent blocks merge as
//!
//! ```text
//! acc_k(b, x, t) = acc_{k-1}(2b, x, t/2) + acc_{k-1}(2b+1, x + ceil(t/2), t/2)
//! ```
//!
//! with columns taken modulo the padded width. After `log2(Hp)` levels the
//! single remaining block is the accumulator.

use rayon::prelude::*;

use crate::image::{mirror_column, next_pow2, GrayImage, Quadrant};

/// Geometry shared by every accumulator: the frame the patterns live in and
/// the original image it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrameDims {
    /// Original (untransposed) image width.
    pub image_width: usize,
    /// Original (untransposed) image height.
    pub image_height: usize,
    /// Width of the frame the patterns run across, after transposition.
    pub frame_width: usize,
    /// Height of the frame, after transposition.
    pub frame_height: usize,
    /// Power-of-two strip height, also the number of accumulator rows.
    pub padded_height: usize,
    /// Cyclic width `frame_width + padded_height`, also the number of columns.
    pub padded_width: usize,
}

impl FrameDims {
    /// Dimensions of the single-quadrant transform of a `width x height` image.
    pub fn for_quadrant(width: usize, height: usize, quadrant: Quadrant) -> FrameDims {
        let (fw, fh) = if quadrant.is_transposed() {
            (height, width)
        } else {
            (width, height)
        };
        let hp = next_pow2(fh);
        FrameDims {
            image_width: width,
            image_height: height,
            frame_width: fw,
            frame_height: fh,
            padded_height: hp,
            padded_width: fw + hp,
        }
    }

    /// Dimensions of one quadrant block inside a full Hough image, where the
    /// image is first embedded in a `size x size` square.
    pub fn for_square(width: usize, height: usize, size: usize) -> FrameDims {
        FrameDims {
            image_width: width,
            image_height: height,
            frame_width: size,
            frame_height: size,
            padded_height: size,
            padded_width: 2 * size,
        }
    }
}

/// How an accumulator was produced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Source {
    Quadrant,
    /// Fused shear + scale transform; see [`crate::range`].
    AngleRange {
        spl: f64,
        alpha: f64,
    },
}

/// One quadrant's transform result: `padded_height` rows (shift) by
/// `padded_width` columns (start column `x0`).
#[derive(Debug, Clone, PartialEq)]
pub struct HoughAccumulator {
    pub quadrant: Quadrant,
    pub dims: FrameDims,
    pub source: Source,
    /// Set once the rows have been regrouped by [`crate::shift::fhtshift_quadrant`].
    pub shifted: bool,
    cells: Vec<u32>,
}

impl HoughAccumulator {
    pub(crate) fn from_cells(quadrant: Quadrant, dims: FrameDims, source: Source, cells: Vec<u32>) -> Self {
        debug_assert_eq!(cells.len(), dims.padded_height * dims.padded_width);
        HoughAccumulator {
            quadrant,
            dims,
            source,
            shifted: false,
            cells,
        }
    }

    pub fn rows(&self) -> usize {
        self.dims.padded_height
    }

    pub fn cols(&self) -> usize {
        self.dims.padded_width
    }

    pub fn get(&self, shift: usize, x0: usize) -> u32 {
        self.cells[shift * self.cols() + x0]
    }

    pub fn row(&self, shift: usize) -> &[u32] {
        let c = self.cols();
        &self.cells[shift * c..(shift + 1) * c]
    }

    pub(crate) fn row_mut(&mut self, shift: usize) -> &mut [u32] {
        let c = self.cols();
        &mut self.cells[shift * c..(shift + 1) * c]
    }

    pub fn cells(&self) -> &[u32] {
        &self.cells
    }

    pub fn max_cell(&self) -> u32 {
        self.cells.iter().copied().max().unwrap_or(0)
    }
}

/// Runs the block-doubling recursion on a virtual `hp x width` image whose
/// rows are produced on demand by `fill_row`. The first level is computed
/// straight from `fill_row` (two scratch rows per worker), so callers can
/// fold per-row resampling into it without materializing the image.
///
/// Returns the final cells and the number of cell additions performed.
pub(crate) fn run_block_doubling<F>(hp: usize, width: usize, fill_row: F) -> (Vec<u32>, u64)
where
    F: Fn(usize, &mut [u32]) + Sync,
{
    debug_assert!(hp.is_power_of_two());
    let mut src = vec![0u32; hp * width];
    if hp == 1 {
        fill_row(0, &mut src);
        return (src, 0);
    }

    let mut additions: u64 = src
        .par_chunks_mut(2 * width)
        .enumerate()
        .map(|(pair, block)| {
            let mut top = vec![0u32; width];
            let mut bottom = vec![0u32; width];
            fill_row(2 * pair, &mut top);
            fill_row(2 * pair + 1, &mut bottom);
            let (t0, t1) = block.split_at_mut(width);
            merge_rows(t0, &top, &bottom, 0) + merge_rows(t1, &top, &bottom, 1)
        })
        .sum();

    let mut dst = vec![0u32; hp * width];
    let mut n = 4;
    while n <= hp {
        let half = n / 2;
        additions += dst
            .par_chunks_mut(n * width)
            .zip(src.par_chunks(n * width))
            .map(|(out, block)| {
                let (upper, lower) = block.split_at(half * width);
                let mut count = 0;
                for (t, out_row) in out.chunks_mut(width).enumerate() {
                    let inner = t / 2;
                    let top = &upper[inner * width..(inner + 1) * width];
                    let bottom = &lower[inner * width..(inner + 1) * width];
                    count += merge_rows(out_row, top, bottom, t - inner);
                }
                count
            })
            .sum::<u64>();
        std::mem::swap(&mut src, &mut dst);
        n *= 2;
    }
    (src, additions)
}

/// `out[x] = top[x] + bottom[(x + offset) mod width]`; returns the number of additions.
#[inline]
fn merge_rows(out: &mut [u32], top: &[u32], bottom: &[u32], offset: usize) -> u64 {
    let width = out.len();
    let split = width - offset;
    for ((o, &a), &b) in out[..split].iter_mut().zip(&top[..split]).zip(&bottom[offset..]) {
        *o = a + b;
    }
    for ((o, &a), &b) in out[split..].iter_mut().zip(&top[split..]).zip(&bottom[..offset]) {
        *o = a + b;
    }
    width as u64
}

/// Fast Hough transform of one quadrant.
///
/// Cell `(s, x0)` is the sum of the image along the dyadic pattern of height
/// `Hp` starting at column `x0` with shift `s`. For mirrored quadrants the
/// columns are relabeled so `x0` is the pattern's row-0 column in the
/// unmirrored frame.
pub fn fht_quadrant(image: &GrayImage, quadrant: Quadrant) -> HoughAccumulator {
    fht_quadrant_counted(image, quadrant).0
}

/// [`fht_quadrant`] that also reports how many cell additions it performed.
pub fn fht_quadrant_counted(image: &GrayImage, quadrant: Quadrant) -> (HoughAccumulator, u64) {
    let dims = FrameDims::for_quadrant(image.width(), image.height(), quadrant);
    let oriented = if quadrant.is_transposed() {
        image.transposed()
    } else {
        image.clone()
    };
    let oriented = if quadrant.is_mirrored() {
        oriented.mirrored()
    } else {
        oriented
    };
    let (cells, additions) = run_block_doubling(dims.padded_height, dims.padded_width, |r, row| {
        row.fill(0);
        if r < oriented.height() {
            for (dst, &v) in row.iter_mut().zip(oriented.row(r)) {
                *dst = u32::from(v);
            }
        }
    });
    let cells = if quadrant.is_mirrored() {
        unmirror_columns(&cells, dims)
    } else {
        cells
    };
    (
        HoughAccumulator::from_cells(quadrant, dims, Source::Quadrant, cells),
        additions,
    )
}

fn unmirror_columns(cells: &[u32], dims: FrameDims) -> Vec<u32> {
    let pw = dims.padded_width;
    let mut out = vec![0u32; cells.len()];
    for (src_row, dst_row) in cells.chunks(pw).zip(out.chunks_mut(pw)) {
        for (xm, &v) in src_row.iter().enumerate() {
            dst_row[mirror_column(xm, dims.frame_width, pw)] = v;
        }
    }
    out
}
