//! Binary accumulator files.
//!
//! Layout (all integers little-endian `u32`):
//!
//! ```text
//! offset  0  magic "FHT1"
//! offset  4  cols
//! offset  8  rows
//! offset 12  original image width
//! offset 16  original image height
//! offset 20  flags: bit 0 = fhtshift applied, bits 1-2 = mode
//! offset 24  rows * cols cells, row-major
//! ```

use thiserror::Error;

use crate::full::FullHoughImage;
use crate::transform::{HoughAccumulator, Source};

pub const MAGIC: &[u8; 4] = b"FHT1";
pub const HEADER_LEN: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Quadrant = 0,
    Full = 1,
    Range = 2,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AccFileError {
    #[error("bad magic")]
    BadMagic,
    #[error("file is {found} bytes, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("unknown mode {0}")]
    BadMode(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AccumulatorFile {
    pub cols: u32,
    pub rows: u32,
    pub width: u32,
    pub height: u32,
    pub shifted: bool,
    pub mode: Mode,
    pub cells: Vec<u32>,
}

impl AccumulatorFile {
    pub fn from_accumulator(acc: &HoughAccumulator) -> Self {
        let mode = match acc.source {
            Source::Quadrant => Mode::Quadrant,
            Source::AngleRange { .. } => Mode::Range,
        };
        AccumulatorFile {
            cols: acc.cols() as u32,
            rows: acc.rows() as u32,
            width: acc.dims.image_width as u32,
            height: acc.dims.image_height as u32,
            shifted: acc.shifted,
            mode,
            cells: acc.cells().to_vec(),
        }
    }

    pub fn from_full(full: &FullHoughImage) -> Self {
        AccumulatorFile {
            cols: full.cols() as u32,
            rows: full.rows() as u32,
            width: full.image_width as u32,
            height: full.image_height as u32,
            shifted: full.shifted,
            mode: Mode::Full,
            cells: full.cells().to_vec(),
        }
    }

    pub fn flags(&self) -> u32 {
        u32::from(self.shifted) | ((self.mode as u32) << 1)
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(HEADER_LEN + 4 * self.cells.len());
        out.extend_from_slice(MAGIC);
        for v in [self.cols, self.rows, self.width, self.height, self.flags()] {
            out.extend_from_slice(&v.to_le_bytes());
        }
        for c in &self.cells {
            out.extend_from_slice(&c.to_le_bytes());
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, AccFileError> {
        if bytes.len() < HEADER_LEN {
            return Err(AccFileError::Length {
                expected: HEADER_LEN,
                found: bytes.len(),
            });
        }
        if &bytes[..4] != MAGIC {
            return Err(AccFileError::BadMagic);
        }
        let word = |i: usize| u32::from_le_bytes(bytes[4 + 4 * i..8 + 4 * i].try_into().unwrap());
        let (cols, rows, width, height, flags) = (word(0), word(1), word(2), word(3), word(4));
        let mode = match (flags >> 1) & 0b11 {
            0 => Mode::Quadrant,
            1 => Mode::Full,
            2 => Mode::Range,
            m => return Err(AccFileError::BadMode(m)),
        };
        let expected = HEADER_LEN + 4 * rows as usize * cols as usize;
        if bytes.len() != expected {
            return Err(AccFileError::Length {
                expected,
                found: bytes.len(),
            });
        }
        let cells = bytes[HEADER_LEN..]
            .chunks_exact(4)
            .map(|c| u32::from_le_bytes(c.try_into().unwrap()))
            .collect();
        Ok(AccumulatorFile {
            cols,
            rows,
            width,
            height,
            shifted: flags & 1 == 1,
            mode,
            cells,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::image::{GrayImage, Quadrant};
    use crate::transform::fht_quadrant;
    use proptest::prelude::*;

    #[test]
    fn two_by_two_layout() {
        let acc = fht_quadrant(&GrayImage::filled(2, 2, 1).unwrap(), Quadrant::A);
        let bytes = AccumulatorFile::from_accumulator(&acc).to_bytes();
        assert_eq!(bytes.len(), 24 + 4 * 8);
        assert_eq!(&bytes[..4], b"FHT1");
        assert_eq!(
            &bytes[4..24],
            &[4, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0]
        );
        let cells: Vec<u32> = bytes[24..]
            .chunks(4)
            .map(|c| u32::from_le_bytes(c.try_into().unwrap()))
            .collect();
        assert_eq!(cells, vec![2, 2, 0, 0, 2, 1, 0, 1]);
    }

    #[test]
    fn rejects_bad_files() {
        assert_eq!(
            AccumulatorFile::from_bytes(b"FHT1"),
            Err(AccFileError::Length { expected: 24, found: 4 })
        );
        let mut bytes = vec![0u8; 24];
        bytes[..4].copy_from_slice(b"NOPE");
        assert_eq!(AccumulatorFile::from_bytes(&bytes), Err(AccFileError::BadMagic));
        bytes[..4].copy_from_slice(b"FHT1");
        bytes[20] = 0b110;
        assert_eq!(AccumulatorFile::from_bytes(&bytes), Err(AccFileError::BadMode(3)));
        bytes[20] = 0;
        bytes[4] = 1;
        bytes[8] = 1;
        assert!(matches!(
            AccumulatorFile::from_bytes(&bytes),
            Err(AccFileError::Length { expected: 28, .. })
        ));
    }

    proptest! {
        #[test]
        fn round_trip(rows in 0u32..6, cols in 0u32..6, w in any::<u32>(), h in any::<u32>(),
                      shifted in any::<bool>(), mode in 0u8..3, seed in any::<u32>()) {
            let mode = [Mode::Quadrant, Mode::Full, Mode::Range][mode as usize];
            let cells = (0..rows * cols).map(|i| seed.wrapping_mul(2654435761).wrapping_add(i)).collect();
            let file = AccumulatorFile { cols, rows, width: w, height: h, shifted, mode, cells };
            let bytes = file.to_bytes();
            prop_assert_eq!(bytes.len(), 24 + 4 * (rows * cols) as usize);
            prop_assert_eq!(AccumulatorFile::from_bytes(&bytes).unwrap(), file);
        }
    }
}
