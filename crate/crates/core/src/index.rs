//! The LCCP index: a dynamic-programming table of longest common compatible
//! prefixes between every position and every transit position, answering
//! arbitrary lccp queries in O(1) with a single table access.

use std::time::{Duration, Instant};

use crate::error::Error;
use crate::suffix::{SolidifiedWord, SuffixIndex};
use crate::word::{PartialWord, PositionType};

const NO_COLUMN: u32 = u32::MAX;

/// Query-capable index over one partial word.
///
/// The table holds `lccp(i, j)` for `i` in `1..=n+1` and `j` ranging over
/// the transit set plus the virtual position `n+1`; row `n+1` and the
/// `n+1` column are zero. Storage is `(n+1) * (kappa+1)` cells, i.e.
/// O(n*mu + n). Immutable after construction and safe to query from any
/// number of threads.
#[derive(Debug, Clone)]
pub struct LccpIndex {
    word: PartialWord,
    sidx: SuffixIndex,
    next_change: Vec<usize>,
    transit: Vec<usize>,
    column: Vec<u32>,
    table: Vec<u32>,
    build_time: Duration,
}

/// Size and timing summary of a built index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexStats {
    pub n: usize,
    pub holes: usize,
    pub hole_blocks: usize,
    pub transit_count: usize,
    pub table_cells: usize,
    pub build_time: Duration,
}

impl LccpIndex {
    /// Solidifies the word, builds the suffix index and runs preprocessing.
    pub fn build(word: PartialWord) -> Self {
        let solid = SolidifiedWord::from_word(&word);
        let sidx = SuffixIndex::build(&solid);
        Self::preprocess(word, sidx)
    }

    /// Fills the LCCP table in O(n*kappa) by evaluating the query recurrence
    /// for every (position, transit) cell. `sidx` must be the suffix index of
    /// the solidified `word`.
    ///
    /// Cells are filled in decreasing order of the index sum `i+j`: every
    /// cell depends only on `(i+d, j+d)` with `d >= 1`, whose sum is strictly
    /// larger, so each lookup hits either a final cell or the zeroed
    /// boundary.
    pub fn preprocess(word: PartialWord, sidx: SuffixIndex) -> Self {
        let n = word.len();
        assert_eq!(n, sidx.len(), "suffix index does not match the word");
        assert!(n < u32::MAX as usize, "word too long for u32 table cells");
        let start = Instant::now();

        let next_change = word.next_change();
        let transit = word.transit_positions();
        let kappa = transit.len();

        let mut column = vec![NO_COLUMN; n + 2];
        for (c, &j) in transit.iter().enumerate() {
            column[j] = c as u32;
        }
        column[n + 1] = kappa as u32;

        let table = vec![0u32; (n + 1) * (kappa + 1)];
        let mut index = LccpIndex {
            word,
            sidx,
            next_change,
            transit,
            column,
            table,
            build_time: Duration::ZERO,
        };

        let last_transit = *index.transit.last().expect("transit set is never empty");
        for sum in (2..=n + last_transit).rev() {
            for c in 0..kappa {
                let j = index.transit[c];
                if j >= sum {
                    continue;
                }
                let i = sum - j;
                if i > n {
                    continue;
                }
                let value = index.query_unchecked(i, j) as u32;
                index.table[(i - 1) * (kappa + 1) + c] = value;
            }
        }

        index.build_time = start.elapsed();
        index
    }

    pub fn word(&self) -> &PartialWord {
        &self.word
    }

    pub fn suffix_index(&self) -> &SuffixIndex {
        &self.sidx
    }

    /// `NextChange` table, 1-based; entry 0 is unused.
    pub fn next_change(&self) -> &[usize] {
        &self.next_change
    }

    /// Transit positions in increasing order.
    pub fn transit(&self) -> &[usize] {
        &self.transit
    }

    /// Longest common compatible prefix of positions `i` and `j`, in O(1).
    pub fn lccp(&self, i: usize, j: usize) -> Result<usize, Error> {
        let n = self.word.len();
        for pos in [i, j] {
            if pos == 0 || pos > n {
                return Err(Error::PositionOutOfRange { pos, n });
            }
        }
        Ok(self.query_unchecked(i, j))
    }

    /// The query recurrence; also the cell evaluator during preprocessing.
    /// `d` is the distance to the nearest type change among the two
    /// positions, `k` the exact-match prefix length in the solidified word.
    /// When both positions are solid and `k < d`, the first mismatch happens
    /// between two solid symbols and is final; otherwise the first `d`
    /// symbols pair a hole with something (or match exactly), and the rest
    /// is the table value at `(i+d, j+d)`.
    fn query_unchecked(&self, i: usize, j: usize) -> usize {
        let d = self.next_change[i].min(self.next_change[j]);
        let k = self.sidx.lcp_unchecked(i, j);
        let solid = |p: usize| self.word.position_type(p) == PositionType::Solid;
        if !solid(i) || !solid(j) || k >= d {
            d + self.table_lookup(i + d, j + d)
        } else {
            k
        }
    }

    /// Stored table value for `(i, j)` where `i, j` are in `1..=n+1` and at
    /// least one of them is a transit position or `n+1`.
    pub fn table_get(&self, i: usize, j: usize) -> Result<usize, Error> {
        let n = self.word.len();
        for pos in [i, j] {
            if pos == 0 || pos > n + 1 {
                return Err(Error::PositionOutOfRange { pos, n });
            }
        }
        if self.column[j] == NO_COLUMN && self.column[i] == NO_COLUMN {
            return Err(Error::NotATransitColumn { i, j });
        }
        Ok(self.table_lookup(i, j))
    }

    /// Symmetric table read: `LCCP[j, i] = LCCP[i, j]`.
    fn table_lookup(&self, i: usize, j: usize) -> usize {
        let width = self.transit.len() + 1;
        let cj = self.column[j];
        let (row, col) = if cj != NO_COLUMN {
            (i, cj)
        } else {
            let ci = self.column[i];
            debug_assert!(ci != NO_COLUMN, "({i},{j}) has no table column");
            (j, ci)
        };
        self.table[(row - 1) * width + col as usize] as usize
    }

    /// n, h, mu, kappa, table cell count and build wall time.
    pub fn stats(&self) -> IndexStats {
        IndexStats {
            n: self.word.len(),
            holes: self.word.holes(),
            hole_blocks: self.word.hole_blocks(),
            transit_count: self.transit.len(),
            table_cells: self.table.len(),
            build_time: self.build_time,
        }
    }

    pub(crate) fn table_cells(&self) -> &[u32] {
        &self.table
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    const EXAMPLE: &str = "ab??a???bcab?";

    // the example word's full LCCP table, rows j in T, columns i = 1..13,
    // verified against a naive compatibility scan
    const EXAMPLE_TABLE: [(usize, [usize; 13]); 6] = [
        (1, [13, 0, 8, 1, 4, 4, 7, 4, 0, 0, 3, 0, 1]),
        (3, [8, 7, 11, 6, 6, 8, 2, 2, 5, 2, 3, 2, 1]),
        (5, [4, 0, 6, 5, 9, 4, 4, 6, 0, 0, 3, 0, 1]),
        (6, [4, 3, 8, 5, 4, 8, 3, 3, 5, 4, 3, 2, 1]),
        (9, [0, 3, 5, 1, 0, 5, 2, 1, 5, 0, 0, 2, 1]),
        (13, [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]),
    ];

    fn build(text: &str) -> LccpIndex {
        LccpIndex::build(PartialWord::parse(text.as_bytes(), b'?').unwrap())
    }

    #[test]
    fn golden_table() {
        let idx = build(EXAMPLE);
        assert_eq!(idx.transit(), [1, 3, 5, 6, 9, 13]);
        for (j, row) in EXAMPLE_TABLE {
            for (i, &expected) in row.iter().enumerate().map(|(k, v)| (k + 1, v)) {
                assert_eq!(idx.table_get(i, j).unwrap(), expected, "cell ({i},{j})");
                assert_eq!(idx.lccp(i, j).unwrap(), expected, "query ({i},{j})");
            }
        }
    }

    #[test]
    fn golden_queries() {
        let idx = build(EXAMPLE);
        assert_eq!(idx.lccp(2, 9).unwrap(), 3);
        assert_eq!(idx.lccp(1, 2).unwrap(), 0);
        assert_eq!(idx.lccp(3, 6).unwrap(), 8);
    }

    #[test]
    fn table_get_symmetry_and_boundary() {
        let idx = build(EXAMPLE);
        assert_eq!(idx.table_get(3, 1).unwrap(), 8);
        assert_eq!(idx.table_get(1, 3).unwrap(), 8);
        assert_eq!(idx.table_get(5, 5).unwrap(), 9);
        // whole boundary row and column are zero
        for j in idx.transit().to_vec() {
            assert_eq!(idx.table_get(14, j).unwrap(), 0);
            assert_eq!(idx.table_get(j, 14).unwrap(), 0);
        }
        assert_eq!(idx.table_get(14, 14).unwrap(), 0);
    }

    #[test]
    fn table_get_rejects_non_transit_pairs() {
        let idx = build(EXAMPLE);
        // neither 2 nor 10 is transit
        assert!(matches!(
            idx.table_get(2, 10),
            Err(Error::NotATransitColumn { i: 2, j: 10 })
        ));
        assert!(matches!(
            idx.table_get(0, 1),
            Err(Error::PositionOutOfRange { pos: 0, .. })
        ));
        assert!(matches!(
            idx.table_get(1, 15),
            Err(Error::PositionOutOfRange { pos: 15, .. })
        ));
    }

    #[test]
    fn lccp_self_query_is_suffix_length() {
        let idx = build(EXAMPLE);
        for i in 1..=13 {
            assert_eq!(idx.lccp(i, i).unwrap(), 13 + 1 - i);
        }
    }

    #[test]
    fn lccp_position_validation() {
        let idx = build(EXAMPLE);
        assert!(matches!(
            idx.lccp(0, 1),
            Err(Error::PositionOutOfRange { pos: 0, .. })
        ));
        assert!(matches!(
            idx.lccp(1, 14),
            Err(Error::PositionOutOfRange { pos: 14, .. })
        ));
    }

    #[test]
    fn fill_order_counterexample() {
        // ten 'a' then a hole: a row-descending fill would read the unfilled
        // cell (11, 2) while computing (10, 1); the diagonal schedule must not
        let idx = build("aaaaaaaaaa?");
        assert_eq!(idx.transit(), [1, 11]);
        assert_eq!(idx.lccp(10, 1).unwrap(), 2);
        let word = idx.word().clone();
        for i in 1..=11 {
            for j in 1..=11 {
                assert_eq!(
                    idx.lccp(i, j).unwrap(),
                    oracle::naive_lccp(&word, i, j).unwrap(),
                    "({i},{j})"
                );
            }
        }
    }

    #[test]
    fn all_hole_word_column() {
        let idx = build("???");
        assert_eq!(idx.transit(), [1]);
        for i in 1..=3 {
            assert_eq!(idx.table_get(i, 1).unwrap(), 3 + 1 - i);
        }
    }

    #[test]
    fn hole_free_word_equals_lcp() {
        let idx = build("abc");
        assert_eq!(idx.transit(), [1]);
        assert_eq!(idx.table_get(1, 1).unwrap(), 3);
        assert_eq!(idx.table_get(2, 1).unwrap(), 0);
        assert_eq!(idx.table_get(3, 1).unwrap(), 0);
        for i in 1..=3 {
            for j in 1..=3 {
                assert_eq!(
                    idx.lccp(i, j).unwrap(),
                    idx.suffix_index().lcp(i, j).unwrap()
                );
            }
        }
    }

    #[test]
    fn non_transitive_witness() {
        let idx = build("a?b");
        assert!(idx.lccp(1, 2).unwrap() >= 1);
        assert!(idx.lccp(2, 3).unwrap() >= 1);
        assert_eq!(idx.lccp(1, 3).unwrap(), 0);
    }

    #[test]
    fn stats_examples() {
        let s = build(EXAMPLE).stats();
        assert_eq!(
            (s.n, s.holes, s.hole_blocks, s.transit_count),
            (13, 6, 3, 6)
        );
        assert_eq!(s.table_cells, 14 * 7);

        let s = build("abc").stats();
        assert_eq!((s.n, s.holes, s.hole_blocks, s.transit_count), (3, 0, 0, 1));

        let s = build("???").stats();
        assert_eq!((s.n, s.holes, s.hole_blocks, s.transit_count), (3, 3, 1, 1));
    }

    #[test]
    fn single_symbol_words() {
        for text in ["a", "?"] {
            let idx = build(text);
            assert_eq!(idx.lccp(1, 1).unwrap(), 1);
            assert_eq!(idx.transit(), [1]);
        }
    }
}
