#![allow(dead_code)]

use fht::GrayImage;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_image(rng: &mut impl Rng, width: usize, height: usize) -> GrayImage {
    GrayImage::from_fn(width, height, |_, _| rng.gen()).unwrap()
}

pub fn random_dims_image(rng: &mut impl Rng, max: usize) -> GrayImage {
    let w = rng.gen_range(1..=max);
    let h = rng.gen_range(1..=max);
    random_image(rng, w, h)
}

/// Whether `b` is `a` rotated by some amount.
pub fn is_rotation(a: &[u32], b: &[u32]) -> bool {
    a.len() == b.len() && (0..a.len().max(1)).any(|k| a.iter().cycle().skip(k).take(a.len()).eq(b.iter()))
}

/// Distance between two column positions on a cycle of length `width`.
pub fn cyclic_distance(a: f64, b: f64, width: usize) -> f64 {
    let w = width as f64;
    let d = (a - b).rem_euclid(w);
    d.min(w - d)
}
