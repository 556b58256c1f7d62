//! Brute-force reference implementations and randomized word generation.
//!
//! Everything here is deliberately naive: direct definition-unfolding scans
//! and explicit sorts, kept independent of the indexed code paths so the two
//! can be compared against each other.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::index::LccpIndex;
use crate::suffix::SolidifiedWord;
use crate::word::{compatible, PartialWord, Symbol};

/// Parameters for deterministic random word generation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorParams {
    pub n: usize,
    pub sigma: u32,
    pub hole_density: f64,
    pub seed: u64,
}

/// One disagreement between the index and the naive scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub word: String,
    pub i: usize,
    pub j: usize,
    pub expected: usize,
    pub actual: usize,
}

/// Outcome of a fuzz run; a passing run has no mismatches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub trials: u64,
    pub words_tested: u64,
    pub pairs_checked: u64,
    pub mismatches: Vec<Mismatch>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// lccp by definition: scan while both positions are in range and
/// compatible. O(n) per query.
pub fn naive_lccp(word: &PartialWord, i: usize, j: usize) -> Result<usize, Error> {
    let n = word.len();
    for pos in [i, j] {
        if pos == 0 || pos > n {
            return Err(Error::PositionOutOfRange { pos, n });
        }
    }
    let mut k = 0;
    while i + k <= n && j + k <= n && compatible(word.symbol(i + k), word.symbol(j + k)) {
        k += 1;
    }
    Ok(k)
}

/// Exact-match common prefix length in the solidified word, by direct scan.
pub fn naive_lcp(word: &SolidifiedWord, i: usize, j: usize) -> Result<usize, Error> {
    let n = word.len();
    for pos in [i, j] {
        if pos == 0 || pos > n {
            return Err(Error::PositionOutOfRange { pos, n });
        }
    }
    let mut k = 0;
    while i + k <= n && j + k <= n && word.code(i + k) == word.code(j + k) {
        k += 1;
    }
    Ok(k)
}

/// Suffix array by explicit suffix sort; 1-based like
/// [`crate::SuffixIndex::suf`], entry 0 unused. Intended for small inputs.
pub fn naive_suffix_array(word: &SolidifiedWord) -> Vec<usize> {
    let codes = word.codes();
    let mut suf: Vec<usize> = (1..=word.len()).collect();
    suf.sort_by(|&a, &b| codes[a - 1..].cmp(&codes[b - 1..]));
    let mut out = Vec::with_capacity(word.len() + 1);
    out.push(0);
    out.extend(suf);
    out
}

/// Generates a word of length `n`: each position is independently a hole
/// with probability `hole_density`, otherwise a uniform letter out of
/// `sigma` codes starting at `'a'`. Deterministic in the seed.
pub fn random_partial_word(params: &GeneratorParams) -> PartialWord {
    assert!(params.n >= 1, "generator needs n >= 1");
    assert!(params.sigma >= 1, "generator needs sigma >= 1");
    assert!(
        (0.0..=1.0).contains(&params.hole_density),
        "hole density must be a probability"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let symbols = (0..params.n)
        .map(|_| {
            if rng.random_bool(params.hole_density) {
                Symbol::Hole
            } else {
                Symbol::Letter(u32::from(b'a') + rng.random_range(0..params.sigma))
            }
        })
        .collect();
    PartialWord::new(symbols).expect("n >= 1")
}

/// Builds the index for `trials` freshly generated words and compares every
/// answer against [`naive_lccp`]: all pairs for words up to 128 positions,
/// a deterministic sample of `10 n` pairs beyond that.
pub fn fuzz_compare(params: &GeneratorParams, trials: u64) -> OracleReport {
    fuzz_compare_with(params, trials, 128)
}

/// As [`fuzz_compare`] with a custom all-pairs threshold.
pub fn fuzz_compare_with(
    params: &GeneratorParams,
    trials: u64,
    exhaustive_limit: usize,
) -> OracleReport {
    let mut report = OracleReport {
        trials,
        words_tested: 0,
        pairs_checked: 0,
        mismatches: Vec::new(),
    };
    for trial in 0..trials {
        let word_params = GeneratorParams {
            seed: params.seed.wrapping_add(trial),
            ..*params
        };
        let word = random_partial_word(&word_params);
        let n = word.len();
        let index = LccpIndex::build(word.clone());
        report.words_tested += 1;

        let check = |i: usize, j: usize, report: &mut OracleReport| {
            let expected = naive_lccp(&word, i, j).unwrap();
            let actual = index.lccp(i, j).unwrap();
            report.pairs_checked += 1;
            if expected != actual {
                report.mismatches.push(Mismatch {
                    word: word.render('?'),
                    i,
                    j,
                    expected,
                    actual,
                });
            }
        };

        if n <= exhaustive_limit {
            for i in 1..=n {
                for j in 1..=n {
                    check(i, j, &mut report);
                }
            }
        } else {
            let mut pair_rng = ChaCha8Rng::seed_from_u64(word_params.seed ^ 0x70ab_9f3c_5d11_e6a2);
            for _ in 0..10 * n {
                let i = pair_rng.random_range(1..=n);
                let j = pair_rng.random_range(1..=n);
                check(i, j, &mut report);
            }
        }
    }
    report
        .mismatches
        .sort_by(|a, b| (&a.word, a.i, a.j).cmp(&(&b.word, b.i, b.j)));
    report
}
