//! Longest-common-compatible-prefix queries on partial words.
//!
//! A partial word is a string in which some positions are *holes*: wildcard
//! positions compatible with every symbol. Two factors are compatible when
//! they agree at every position where both are solid, and `lccp(i, j)` is
//! the length of the longest compatible prefix of the suffixes starting at
//! positions `i` and `j` (1-based).
//!
//! Compatibility is not transitive, so classic suffix-array machinery does
//! not answer these queries by itself. [`LccpIndex`] combines an exact-match
//! suffix index over the solidified word with a sparse table, keyed by the
//! positions where the word switches between solid runs and hole runs, that
//! is linear in the word length for any fixed number of hole blocks. After
//! preprocessing, each query is answered in constant time.
//!
//! ```
//! use lccp::{LccpIndex, PartialWord};
//!
//! let word = PartialWord::parse(b"ab??a???bcab?", b'?').unwrap();
//! let index = LccpIndex::build(word);
//! assert_eq!(index.lccp(2, 9).unwrap(), 3);
//! assert_eq!(index.lccp(1, 2).unwrap(), 0);
//! ```

mod error;
mod index;
mod io;
pub mod oracle;
mod rmq;
mod suffix;
mod word;

pub use error::Error;
pub use index::{IndexStats, LccpIndex};
pub use rmq::SparseTableRmq;
pub use suffix::{SolidifiedWord, SuffixIndex};
pub use word::{compatible, PartialWord, PositionType, Symbol};
