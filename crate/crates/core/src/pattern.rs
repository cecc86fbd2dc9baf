//! Dyadic line patterns: the discrete lines the fast transform sums along.

use crate::error::{FhtError, Result};

/// Columns visited by the dyadic pattern of height `n` that starts at column
/// `x0` on row 0 and drifts `shift` columns by row `n - 1`, cyclic in `width`.
///
/// The top half is the pattern of height `n/2` with shift `shift/2` (floor);
/// the bottom half is the same pattern started `ceil(shift/2)` columns further
/// right.
pub fn dyadic_pattern(n: usize, x0: usize, shift: usize, width: usize) -> Result<Vec<usize>> {
    if n == 0 || !n.is_power_of_two() {
        return Err(FhtError::NotPowerOfTwo(n));
    }
    if shift >= n {
        return Err(FhtError::ShiftOutOfRange { shift, height: n });
    }
    if x0 >= width {
        return Err(FhtError::ColumnOutOfRange { x0, width });
    }
    let mut cols = Vec::with_capacity(n);
    fill(&mut cols, n, x0, shift, width);
    Ok(cols)
}

fn fill(out: &mut Vec<usize>, n: usize, x0: usize, shift: usize, width: usize) {
    if n == 1 {
        out.push(x0);
        return;
    }
    let inner = shift / 2;
    let offset = shift - inner;
    fill(out, n / 2, x0, inner, width);
    fill(out, n / 2, (x0 + offset) % width, inner, width);
}

/// Unwrapped column drift of the pattern at every row, i.e. the pattern with
/// `x0 = 0` and no cyclic reduction.
pub fn pattern_offsets(n: usize, shift: usize) -> Result<Vec<usize>> {
    dyadic_pattern(n, 0, shift, usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn vertical_pattern() {
        assert_eq!(dyadic_pattern(4, 2, 0, 8).unwrap(), vec![2, 2, 2, 2]);
    }

    #[test]
    fn full_shift_is_diagonal() {
        assert_eq!(dyadic_pattern(4, 0, 3, 8).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn half_shift() {
        assert_eq!(dyadic_pattern(4, 0, 2, 8).unwrap(), vec![0, 1, 1, 2]);
    }

    #[test]
    fn wraps_cyclically() {
        assert_eq!(dyadic_pattern(4, 7, 3, 8).unwrap(), vec![7, 0, 1, 2]);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert_eq!(dyadic_pattern(3, 0, 0, 8), Err(FhtError::NotPowerOfTwo(3)));
        assert_eq!(dyadic_pattern(0, 0, 0, 8), Err(FhtError::NotPowerOfTwo(0)));
        assert!(matches!(
            dyadic_pattern(4, 0, 4, 8),
            Err(FhtError::ShiftOutOfRange { .. })
        ));
        assert!(matches!(
            dyadic_pattern(4, 8, 0, 8),
            Err(FhtError::ColumnOutOfRange { .. })
        ));
    }

    proptest! {
        #[test]
        fn endpoints_and_unit_steps(log_n in 0u32..=8, t_frac in 0.0f64..1.0, x0_frac in 0.0f64..1.0, extra in 1usize..64) {
            let n = 1usize << log_n;
            let t = ((n as f64) * t_frac) as usize;
            let width = n + extra;
            let x0 = ((width as f64) * x0_frac) as usize;
            let cols = dyadic_pattern(n, x0, t, width).unwrap();
            prop_assert_eq!(cols.len(), n);
            prop_assert_eq!(cols[0], x0);
            prop_assert_eq!(cols[n - 1], (x0 + t) % width);
            for pair in cols.windows(2) {
                let step = (pair[1] + width - pair[0]) % width;
                prop_assert!(step <= 1);
            }
        }
    }
}
