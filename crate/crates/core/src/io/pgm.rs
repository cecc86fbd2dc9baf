//! Binary PGM (`P5`) with 8-bit samples.
//!
//! Header tokens (magic, width, height, maxval) are separated by whitespace;
//! a `#` outside the raster starts a comment that runs to end of line. A
//! single whitespace byte separates maxval from the raster.

use thiserror::Error;

use crate::image::GrayImage;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PgmError {
    #[error("unsupported magic {0:?} (only binary P5 is supported)")]
    UnsupportedMagic(String),
    #[error("truncated header")]
    TruncatedHeader,
    #[error("malformed header field {0:?}")]
    BadHeaderField(String),
    #[error("zero image dimension ({width}x{height})")]
    ZeroDimension { width: usize, height: usize },
    #[error("maxval {0} not in 1..=255")]
    UnsupportedMaxval(usize),
    #[error("truncated raster: expected {expected} bytes, found {found}")]
    TruncatedRaster { expected: usize, found: usize },
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_space_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while let Some(&c) = self.bytes.get(self.pos) {
                    self.pos += 1;
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn token(&mut self) -> Result<&'a str, PgmError> {
        self.skip_space_and_comments();
        let start = self.pos;
        while let Some(&b) = self.bytes.get(self.pos) {
            if b.is_ascii_whitespace() || b == b'#' {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            return Err(PgmError::TruncatedHeader);
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .map_err(|_| PgmError::BadHeaderField(String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned()))
    }

    fn number(&mut self) -> Result<usize, PgmError> {
        let tok = self.token()?;
        tok.parse().map_err(|_| PgmError::BadHeaderField(tok.to_string()))
    }
}

pub fn read_pgm(bytes: &[u8]) -> Result<GrayImage, PgmError> {
    if bytes.len() < 2 {
        return Err(PgmError::TruncatedHeader);
    }
    if &bytes[..2] != b"P5" {
        return Err(PgmError::UnsupportedMagic(
            String::from_utf8_lossy(&bytes[..2]).into_owned(),
        ));
    }
    let mut cur = Cursor { bytes, pos: 2 };
    let width = cur.number()?;
    let height = cur.number()?;
    let maxval = cur.number()?;
    if width == 0 || height == 0 {
        return Err(PgmError::ZeroDimension { width, height });
    }
    if maxval == 0 || maxval > 255 {
        return Err(PgmError::UnsupportedMaxval(maxval));
    }
    match bytes.get(cur.pos) {
        Some(b) if b.is_ascii_whitespace() => cur.pos += 1,
        _ => return Err(PgmError::TruncatedHeader),
    }
    let expected = width * height;
    let raster = &bytes[cur.pos..];
    if raster.len() < expected {
        return Err(PgmError::TruncatedRaster {
            expected,
            found: raster.len(),
        });
    }
    Ok(GrayImage::new(width, height, raster[..expected].to_vec()).expect("dimensions checked"))
}

pub fn write_pgm(width: usize, height: usize, pixels: &[u8]) -> Vec<u8> {
    let mut out = format!("P5\n{width} {height}\n255\n").into_bytes();
    out.extend_from_slice(pixels);
    out
}

pub fn encode_image(image: &GrayImage) -> Vec<u8> {
    write_pgm(image.width(), image.height(), image.pixels())
}
