//! Suffix array, rank and LCP tables over the solidified word, with O(1)
//! longest-common-prefix queries between arbitrary positions.

use crate::error::Error;
use crate::rmq::SparseTableRmq;
use crate::word::{PartialWord, Symbol};

/// The word with holes replaced by one reserved code, so that two positions
/// carry equal codes iff their symbols are identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolidifiedWord {
    codes: Vec<u32>,
    hole_code: u32,
}

impl SolidifiedWord {
    /// The hole code is fixed as one more than the largest letter code
    /// (zero for an all-hole word), which can never collide with a letter.
    pub fn from_word(word: &PartialWord) -> Self {
        let hole_code = word
            .symbols()
            .iter()
            .filter_map(|s| match s {
                Symbol::Letter(c) => Some(*c),
                Symbol::Hole => None,
            })
            .max()
            .map_or(0, |m| m + 1);
        let codes = word
            .symbols()
            .iter()
            .map(|s| match s {
                Symbol::Letter(c) => *c,
                Symbol::Hole => hole_code,
            })
            .collect();
        SolidifiedWord { codes, hole_code }
    }

    /// Codes over a plain byte string (no holes); handy in tests.
    pub fn from_bytes(text: &[u8]) -> Self {
        let codes = text.iter().map(|&b| u32::from(b)).collect();
        SolidifiedWord {
            codes,
            hole_code: 256,
        }
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    /// Code at 1-based position `pos`.
    pub fn code(&self, pos: usize) -> u32 {
        self.codes[pos - 1]
    }

    pub fn codes(&self) -> &[u32] {
        &self.codes
    }

    pub fn hole_code(&self) -> u32 {
        self.hole_code
    }
}

/// SUF, RANK and LCP tables plus an RMQ over LCP.
///
/// All three tables are 1-based; index 0 is an unused placeholder. `SUF[r]`
/// is the start of the r-th suffix in increasing lexicographic order,
/// `RANK` its inverse, `LCP[r]` the common-prefix length of the suffixes at
/// `SUF[r-1]` and `SUF[r]` with `LCP[1] = -1`.
#[derive(Debug, Clone)]
pub struct SuffixIndex {
    n: usize,
    suf: Vec<usize>,
    rank: Vec<usize>,
    lcp: Vec<i64>,
    rmq: SparseTableRmq<i64>,
}

impl SuffixIndex {
    pub fn build(word: &SolidifiedWord) -> Self {
        let n = word.len();
        assert!(n >= 1, "suffix index requires a non-empty word");
        let sa = suffix_array_doubling(word.codes());

        let mut suf = vec![0usize; n + 1];
        let mut rank = vec![0usize; n + 1];
        for (r, &p) in sa.iter().enumerate() {
            suf[r + 1] = p + 1;
            rank[p + 1] = r + 1;
        }
        let lcp = kasai_lcp(word.codes(), &suf, &rank);
        let rmq = SparseTableRmq::new(&lcp[1..]).expect("word is non-empty");
        SuffixIndex {
            n,
            suf,
            rank,
            lcp,
            rmq,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// The SUF table; entry 0 is unused.
    pub fn suf(&self) -> &[usize] {
        &self.suf
    }

    /// The RANK table; entry 0 is unused. `suf()[rank()[i]] == i`.
    pub fn rank(&self) -> &[usize] {
        &self.rank
    }

    /// The LCP table; entry 0 is unused and `lcp()[1] == -1`.
    pub fn lcp_table(&self) -> &[i64] {
        &self.lcp
    }

    /// Longest common prefix of the suffixes starting at `i` and `j` in the
    /// solidified word, in O(1). For `i == j` this is the suffix length
    /// `n+1-i`; otherwise the range minimum of `LCP[x+1..=y]` where `x < y`
    /// are the two ranks.
    pub fn lcp(&self, i: usize, j: usize) -> Result<usize, Error> {
        for pos in [i, j] {
            if pos == 0 || pos > self.n {
                return Err(Error::PositionOutOfRange { pos, n: self.n });
            }
        }
        Ok(self.lcp_unchecked(i, j))
    }

    pub(crate) fn lcp_unchecked(&self, i: usize, j: usize) -> usize {
        if i == j {
            return self.n + 1 - i;
        }
        let (ri, rj) = (self.rank[i], self.rank[j]);
        let (x, y) = if ri < rj { (ri, rj) } else { (rj, ri) };
        // the range always starts at x+1 >= 2, so the -1 sentinel at LCP[1]
        // is never part of it and the minimum is non-negative
        self.rmq.min_unchecked(x + 1, y) as usize
    }
}

/// Prefix-doubling suffix array construction, O(n log n): each round sorts
/// by (rank, rank-at-offset) with two stable counting passes. Returns
/// 0-based suffix starts in increasing lexicographic order; a suffix that is
/// a proper prefix of another sorts first.
fn suffix_array_doubling(codes: &[u32]) -> Vec<usize> {
    let n = codes.len();

    // initial ranks: compressed codes
    let mut sa: Vec<usize> = (0..n).collect();
    sa.sort_unstable_by_key(|&i| codes[i]);
    let mut rank = vec![0usize; n];
    let mut max_rank = 0;
    for t in 1..n {
        if codes[sa[t]] != codes[sa[t - 1]] {
            max_rank += 1;
        }
        rank[sa[t]] = max_rank;
    }

    let mut tmp = vec![0usize; n];
    let mut count = vec![0usize; n + 1];
    let mut k = 1;
    while max_rank + 1 < n && k < n {
        // order by second key (rank at i+k, absent keys first): suffixes with
        // i+k >= n keep no second key, then previous order shifted left by k
        let mut by_second = Vec::with_capacity(n);
        by_second.extend(n - k..n);
        by_second.extend(sa.iter().filter(|&&x| x >= k).map(|&x| x - k));

        // stable counting sort by first key
        count[..=max_rank + 1].fill(0);
        for &r in &rank {
            count[r + 1] += 1;
        }
        for i in 1..=max_rank + 1 {
            count[i] += count[i - 1];
        }
        for &x in &by_second {
            sa[count[rank[x]]] = x;
            count[rank[x]] += 1;
        }

        // recompute ranks; a missing second key compares below any present one
        let second = |x: usize| if x + k < n { rank[x + k] as isize } else { -1 };
        tmp[sa[0]] = 0;
        max_rank = 0;
        for t in 1..n {
            let (a, b) = (sa[t - 1], sa[t]);
            if rank[a] != rank[b] || second(a) != second(b) {
                max_rank += 1;
            }
            tmp[b] = max_rank;
        }
        std::mem::swap(&mut rank, &mut tmp);
        k *= 2;
    }
    sa
}

/// Kasai's linear-time LCP construction over 1-based SUF/RANK tables.
fn kasai_lcp(codes: &[u32], suf: &[usize], rank: &[usize]) -> Vec<i64> {
    let n = codes.len();
    let mut lcp = vec![0i64; n + 1];
    lcp[1] = -1;
    let mut l = 0usize;
    for i in 1..=n {
        let r = rank[i];
        if r == 1 {
            l = 0;
            continue;
        }
        let j = suf[r - 1];
        while i + l <= n && j + l <= n && codes[i + l - 1] == codes[j + l - 1] {
            l += 1;
        }
        lcp[r] = l as i64;
        l = l.saturating_sub(1);
    }
    lcp
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn word(text: &str) -> PartialWord {
        PartialWord::parse(text.as_bytes(), b'?').unwrap()
    }

    #[test]
    fn solidify_reserves_code_above_letters() {
        let s = SolidifiedWord::from_word(&word("a?b"));
        assert_eq!(s.codes(), [97, 99, 98]);
        assert_eq!(s.hole_code(), 99);
    }

    #[test]
    fn solidify_hole_free_is_identity() {
        let s = SolidifiedWord::from_word(&word("abc"));
        assert_eq!(s.codes(), [97, 98, 99]);
    }

    #[test]
    fn solidify_all_holes_single_code() {
        let s = SolidifiedWord::from_word(&word("???"));
        assert_eq!(s.codes(), [s.hole_code(); 3]);
    }

    #[test]
    fn suffix_array_banana() {
        // frozen from an explicit sort of all suffixes; "na" < "nana"
        let idx = SuffixIndex::build(&SolidifiedWord::from_bytes(b"banana"));
        assert_eq!(idx.suf()[1..], [6, 4, 2, 1, 5, 3]);
        assert_eq!(idx.lcp_table()[1..], [-1, 1, 3, 0, 0, 2]);
    }

    #[test]
    fn suffix_array_single_and_repeated() {
        let idx = SuffixIndex::build(&SolidifiedWord::from_bytes(b"a"));
        assert_eq!(idx.suf()[1..], [1]);
        assert_eq!(idx.lcp_table()[1..], [-1]);

        // shorter suffix of equal prefix sorts first
        let idx = SuffixIndex::build(&SolidifiedWord::from_bytes(b"aaa"));
        assert_eq!(idx.suf()[1..], [3, 2, 1]);
        assert_eq!(idx.lcp_table()[1..], [-1, 1, 2]);
    }

    #[test]
    fn suffix_array_example_word() {
        // frozen from the naive oracle over the solidified example word
        let idx = SuffixIndex::build(&SolidifiedWord::from_word(&word("ab??a???bcab?")));
        assert_eq!(idx.suf()[1..], [11, 1, 5, 9, 12, 2, 10, 13, 4, 8, 3, 7, 6]);
        assert_eq!(idx.rank()[1..], [2, 6, 11, 9, 3, 13, 12, 10, 4, 7, 1, 5, 8]);
        assert_eq!(
            idx.lcp_table()[1..],
            [-1, 3, 1, 0, 1, 2, 0, 0, 1, 1, 1, 2, 2]
        );
    }

    #[test]
    fn rank_inverts_suf() {
        let idx = SuffixIndex::build(&SolidifiedWord::from_bytes(b"mississippi"));
        for i in 1..=idx.len() {
            assert_eq!(idx.suf()[idx.rank()[i]], i);
        }
    }

    #[test]
    fn lcp_query_examples() {
        let s = SolidifiedWord::from_word(&word("ab??a???bcab?"));
        let idx = SuffixIndex::build(&s);
        // holes are ordinary symbols in the solidified word
        assert_eq!(idx.lcp(3, 6).unwrap(), 2);

        let idx = SuffixIndex::build(&SolidifiedWord::from_bytes(b"banana"));
        assert_eq!(idx.lcp(2, 4).unwrap(), 3);
        assert_eq!(idx.lcp(4, 2).unwrap(), 3);
        for i in 1..=6 {
            assert_eq!(idx.lcp(i, i).unwrap(), 6 + 1 - i);
        }
    }

    #[test]
    fn lcp_query_position_validation() {
        let idx = SuffixIndex::build(&SolidifiedWord::from_bytes(b"abc"));
        assert!(matches!(
            idx.lcp(0, 1),
            Err(Error::PositionOutOfRange { pos: 0, .. })
        ));
        assert!(matches!(
            idx.lcp(1, 4),
            Err(Error::PositionOutOfRange { pos: 4, .. })
        ));
    }

    #[test]
    fn matches_naive_on_mixed_words() {
        for (seed, text) in [
            (0, "abracadabra".to_string()),
            (1, "aaaaabaaaab".to_string()),
            (2, "a?b?a??ab".to_string()),
            (3, "????????".to_string()),
        ] {
            let _ = seed;
            let s = SolidifiedWord::from_word(&word(&text));
            let idx = SuffixIndex::build(&s);
            assert_eq!(idx.suf(), oracle::naive_suffix_array(&s), "{text}");
            let n = s.len();
            for i in 1..=n {
                for j in 1..=n {
                    assert_eq!(
                        idx.lcp(i, j).unwrap(),
                        oracle::naive_lcp(&s, i, j).unwrap(),
                        "{text} ({i},{j})"
                    );
                }
            }
        }
    }
}
