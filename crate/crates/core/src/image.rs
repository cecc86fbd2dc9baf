//! Input images, angle quadrants and the zero-padded frame the transform runs on.

use std::fmt;

use crate::error::{FhtError, Result};

/// Row-major 8-bit grayscale image. `x` grows rightward, `y` grows downward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize, pixels: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(FhtError::EmptyImage { width, height });
        }
        if pixels.len() != width * height {
            return Err(FhtError::PixelCount {
                expected: width * height,
                got: pixels.len(),
            });
        }
        Ok(Self { width, height, pixels })
    }

    pub fn zeros(width: usize, height: usize) -> Result<Self> {
        Self::filled(width, height, 0)
    }

    pub fn filled(width: usize, height: usize, value: u8) -> Result<Self> {
        Self::new(width, height, vec![value; width * height])
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> u8) -> Result<Self> {
        let mut pixels = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                pixels.push(f(x, y));
            }
        }
        Self::new(width, height, pixels)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.pixels[y * self.width + x]
    }

    pub fn set(&mut self, x: usize, y: usize, value: u8) {
        self.pixels[y * self.width + x] = value;
    }

    pub fn row(&self, y: usize) -> &[u8] {
        &self.pixels[y * self.width..(y + 1) * self.width]
    }

    pub fn total(&self) -> u64 {
        self.pixels.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn transposed(&self) -> GrayImage {
        let mut out = vec![0u8; self.pixels.len()];
        for y in 0..self.height {
            for x in 0..self.width {
                out[x * self.height + y] = self.get(x, y);
            }
        }
        GrayImage {
            width: self.height,
            height: self.width,
            pixels: out,
        }
    }

    pub fn mirrored(&self) -> GrayImage {
        let mut pixels = self.pixels.clone();
        for row in pixels.chunks_mut(self.width) {
            row.reverse();
        }
        GrayImage {
            width: self.width,
            height: self.height,
            pixels,
        }
    }

    /// Copies the image into the top-left corner of a zero-filled `width x height` canvas.
    pub fn embedded(&self, width: usize, height: usize) -> Result<GrayImage> {
        let mut out = GrayImage::zeros(width, height)?;
        for y in 0..self.height.min(height) {
            for x in 0..self.width.min(width) {
                out.set(x, y, self.get(x, y));
            }
        }
        Ok(out)
    }
}

/// One of the four 45-degree families of lines, each with its own accumulator.
///
/// `A` = [-45; 0) and `B` = [0; 45) are mostly vertical, `C` = [45; 90) and
/// `D` = [90; 135) mostly horizontal. The mostly horizontal pair runs on the
/// transposed image. `B` and `C` are evaluated on a horizontally mirrored
/// frame so every quadrant shares the positive-shift recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quadrant {
    A,
    B,
    C,
    D,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::A, Quadrant::B, Quadrant::C, Quadrant::D];

    pub fn is_mostly_vertical(self) -> bool {
        matches!(self, Quadrant::A | Quadrant::B)
    }

    pub fn is_transposed(self) -> bool {
        !self.is_mostly_vertical()
    }

    pub fn is_mirrored(self) -> bool {
        matches!(self, Quadrant::B | Quadrant::C)
    }

    pub fn letter(self) -> char {
        match self {
            Quadrant::A => 'a',
            Quadrant::B => 'b',
            Quadrant::C => 'c',
            Quadrant::D => 'd',
        }
    }

    pub fn from_letter(c: char) -> Option<Quadrant> {
        match c.to_ascii_lowercase() {
            'a' => Some(Quadrant::A),
            'b' => Some(Quadrant::B),
            'c' => Some(Quadrant::C),
            'd' => Some(Quadrant::D),
            _ => None,
        }
    }
}

impl fmt::Display for Quadrant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q{}", self.letter().to_ascii_uppercase())
    }
}

/// Smallest power of two that is `>= n` (with `next_pow2(0) == 1`).
pub fn next_pow2(n: usize) -> usize {
    n.max(1).next_power_of_two()
}

/// Column relabeling between the mirrored evaluation frame and the original
/// frame. It is an involution on `[0, padded_width)`.
pub(crate) fn mirror_column(x: usize, frame_width: usize, padded_width: usize) -> usize {
    let w = frame_width as isize;
    let pw = padded_width as isize;
    (w - 1 - x as isize).rem_euclid(pw) as usize
}

/// A quadrant's image after transposition / mirroring, padded with zero rows
/// to a power-of-two height and with `padded_height` zero columns on the right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaddedImage {
    pub quadrant: Quadrant,
    /// Width of the (possibly transposed) content.
    pub width: usize,
    /// Height of the (possibly transposed) content.
    pub height: usize,
    pub padded_height: usize,
    pub padded_width: usize,
    pub pixels: Vec<u32>,
}

impl PaddedImage {
    pub fn get(&self, x: usize, y: usize) -> u32 {
        self.pixels[y * self.padded_width + x]
    }

    pub fn row(&self, y: usize) -> &[u32] {
        &self.pixels[y * self.padded_width..(y + 1) * self.padded_width]
    }

    pub fn total(&self) -> u64 {
        self.pixels.iter().map(|&p| u64::from(p)).sum()
    }
}

pub fn pad_for_quadrant(image: &GrayImage, quadrant: Quadrant) -> PaddedImage {
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
    let (w, h) = (oriented.width(), oriented.height());
    let hp = next_pow2(h);
    let pw = w + hp;
    let mut pixels = vec![0u32; hp * pw];
    for y in 0..h {
        for (x, &v) in oriented.row(y).iter().enumerate() {
            pixels[y * pw + x] = u32::from(v);
        }
    }
    PaddedImage {
        quadrant,
        width: w,
        height: h,
        padded_height: hp,
        padded_width: pw,
        pixels,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_mismatched() {
        assert!(matches!(GrayImage::new(0, 3, vec![]), Err(FhtError::EmptyImage { .. })));
        assert!(matches!(
            GrayImage::new(2, 2, vec![1, 2, 3]),
            Err(FhtError::PixelCount { expected: 4, got: 3 })
        ));
    }

    #[test]
    fn pad_square_power_of_two() {
        let img = GrayImage::filled(2, 2, 1).unwrap();
        let p = pad_for_quadrant(&img, Quadrant::A);
        assert_eq!((p.padded_height, p.padded_width), (2, 4));
        assert_eq!(p.row(0), &[1, 1, 0, 0]);
        assert_eq!(p.row(1), &[1, 1, 0, 0]);
    }

    #[test]
    fn pad_rounds_height_up() {
        let img = GrayImage::filled(4, 3, 7).unwrap();
        let p = pad_for_quadrant(&img, Quadrant::A);
        assert_eq!((p.padded_height, p.padded_width), (4, 8));
        assert!(p.row(3).iter().all(|&v| v == 0));
        for y in 0..3 {
            assert_eq!(&p.row(y)[..4], &[7, 7, 7, 7]);
            assert!(p.row(y)[4..].iter().all(|&v| v == 0));
        }
    }

    #[test]
    fn pad_transposes_horizontal_quadrants() {
        let img = GrayImage::from_fn(2, 4, |x, y| (10 * y + x) as u8).unwrap();
        let p = pad_for_quadrant(&img, Quadrant::D);
        assert_eq!((p.width, p.height, p.padded_height, p.padded_width), (4, 2, 2, 6));
        assert_eq!(p.row(0), &[0, 10, 20, 30, 0, 0]);
        assert_eq!(p.row(1), &[1, 11, 21, 31, 0, 0]);
        let c = pad_for_quadrant(&img, Quadrant::C);
        assert_eq!(c.row(0), &[30, 20, 10, 0, 0, 0]);
    }

    #[test]
    fn pad_mirrors_quadrant_b() {
        let img = GrayImage::from_fn(3, 1, |x, _| x as u8 + 1).unwrap();
        let p = pad_for_quadrant(&img, Quadrant::B);
        assert_eq!(p.row(0), &[3, 2, 1, 0]);
    }

    #[test]
    fn mirror_column_is_involution() {
        for x in 0..12 {
            assert_eq!(mirror_column(mirror_column(x, 4, 12), 4, 12), x);
        }
        assert_eq!(mirror_column(0, 4, 12), 3);
        assert_eq!(mirror_column(4, 4, 12), 11);
    }

    #[test]
    fn next_pow2_values() {
        assert_eq!(next_pow2(1), 1);
        assert_eq!(next_pow2(3), 4);
        assert_eq!(next_pow2(4), 4);
        assert_eq!(next_pow2(33), 64);
    }
}
