//! On-disk formats: binary PGM input, accumulator files and PGM previews.

pub mod accfile;
pub mod pgm;
pub mod preview;
