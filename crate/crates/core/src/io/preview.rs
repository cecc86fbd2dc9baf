use crate::io::pgm::write_pgm;

/// Scales cells linearly so the largest maps to 255. An all-zero input stays zero.
pub fn normalize(cells: &[u32]) -> Vec<u8> {
    let max = u64::from(cells.iter().copied().max().unwrap_or(0));
    if max == 0 {
        return vec![0; cells.len()];
    }
    cells.iter().map(|&c| (u64::from(c) * 255 / max) as u8).collect()
}

pub fn preview_pgm(cols: usize, rows: usize, cells: &[u32]) -> Vec<u8> {
    write_pgm(cols, rows, &normalize(cells))
}
