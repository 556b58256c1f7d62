//! Sparse-table range minimum queries: O(m log m) preprocessing, O(1) query.

use crate::error::Error;

/// Range-minimum structure over an immutable array `A[1..=m]`.
///
/// Level `l` stores the minimum of every window of length `2^l`, so a query
/// is the minimum of two overlapping power-of-two windows.
#[derive(Debug, Clone)]
pub struct SparseTableRmq<T> {
    len: usize,
    levels: Vec<Vec<T>>,
    log2: Vec<u32>,
}

impl<T: Copy + Ord> SparseTableRmq<T> {
    pub fn new(source: &[T]) -> Result<Self, Error> {
        if source.is_empty() {
            return Err(Error::InputEmpty);
        }
        let m = source.len();
        let mut log2 = vec![0u32; m + 1];
        for i in 2..=m {
            log2[i] = log2[i / 2] + 1;
        }
        let mut levels = vec![source.to_vec()];
        let mut l = 1;
        while (1 << l) <= m {
            let half = 1 << (l - 1);
            let prev = &levels[l - 1];
            let level: Vec<T> = (0..=m - (1 << l))
                .map(|i| prev[i].min(prev[i + half]))
                .collect();
            levels.push(level);
            l += 1;
        }
        Ok(SparseTableRmq {
            len: m,
            levels,
            log2,
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Minimum of `A[x..=y]` (1-based, inclusive).
    pub fn range_min(&self, x: usize, y: usize) -> Result<T, Error> {
        if x == 0 || x > y || y > self.len {
            return Err(Error::RangeInvalid {
                x,
                y,
                len: self.len,
            });
        }
        Ok(self.min_unchecked(x, y))
    }

    /// As `range_min` but with the bounds already known valid.
    pub(crate) fn min_unchecked(&self, x: usize, y: usize) -> T {
        debug_assert!(1 <= x && x <= y && y <= self.len);
        let (a, b) = (x - 1, y - 1);
        let l = self.log2[b - a + 1] as usize;
        self.levels[l][a].min(self.levels[l][b + 1 - (1 << l)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairwise_minima_level() {
        let rmq = SparseTableRmq::new(&[3, 1, 4, 1, 5]).unwrap();
        assert_eq!(rmq.levels[0], [3, 1, 4, 1, 5]);
        assert_eq!(rmq.levels[1], [1, 1, 1, 1]);
    }

    #[test]
    fn window_of_four_level() {
        // levels[2][i] = min(levels[1][i], levels[1][i+2]) = window-of-4 minima
        let rmq = SparseTableRmq::new(&[5, 4, 3, 2, 1]).unwrap();
        assert_eq!(rmq.levels[1], [4, 3, 2, 1]);
        assert_eq!(rmq.levels[2], [2, 1]);
        assert_eq!(rmq.range_min(1, 4).unwrap(), 2);
        assert_eq!(rmq.range_min(2, 5).unwrap(), 1);
    }

    #[test]
    fn singleton() {
        let rmq = SparseTableRmq::new(&[7]).unwrap();
        assert_eq!(rmq.range_min(1, 1).unwrap(), 7);
        assert!(rmq.range_min(1, 2).is_err());
    }

    #[test]
    fn example_queries() {
        let rmq = SparseTableRmq::new(&[3, 1, 4, 1, 5]).unwrap();
        assert_eq!(rmq.range_min(2, 4).unwrap(), 1);
        assert_eq!(rmq.range_min(1, 1).unwrap(), 3);
        assert_eq!(rmq.range_min(3, 5).unwrap(), 1);
        assert_eq!(rmq.range_min(1, 5).unwrap(), 1);
        assert_eq!(rmq.range_min(3, 3).unwrap(), 4);
    }

    #[test]
    fn empty_input_rejected() {
        assert!(matches!(
            SparseTableRmq::<i32>::new(&[]),
            Err(Error::InputEmpty)
        ));
    }

    #[test]
    fn invalid_ranges_rejected() {
        let rmq = SparseTableRmq::new(&[3, 1, 4]).unwrap();
        for (x, y) in [(0, 1), (2, 1), (1, 4), (4, 4), (0, 0)] {
            assert!(
                matches!(rmq.range_min(x, y), Err(Error::RangeInvalid { .. })),
                "({x},{y})"
            );
        }
    }

    #[test]
    fn matches_linear_scan_exhaustively() {
        // deterministic pseudo-random array, all ranges up to length 64
        let mut state = 0x243f_6a88_85a3_08d3u64;
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) as i64 % 1000) - 500
        };
        for m in 1..=64 {
            let a: Vec<i64> = (0..m).map(|_| next()).collect();
            let rmq = SparseTableRmq::new(&a).unwrap();
            for x in 1..=m {
                let mut min = a[x - 1];
                for y in x..=m {
                    min = min.min(a[y - 1]);
                    assert_eq!(rmq.range_min(x, y).unwrap(), min);
                }
            }
        }
    }

    #[test]
    fn negative_values() {
        let rmq = SparseTableRmq::new(&[-1i32, 5, -3, 0]).unwrap();
        assert_eq!(rmq.range_min(1, 4).unwrap(), -3);
        assert_eq!(rmq.range_min(1, 2).unwrap(), -1);
    }
}
