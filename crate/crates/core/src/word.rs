//! Partial words: strings over an integer alphabet plus a hole (don't-care)
//! symbol, with the position classification used by the index.
//!
//! Positions are 1-based throughout the public API. Position 0 is a virtual
//! sentinel whose type is the opposite of position 1.

use crate::error::Error;

/// One element of a partial word: a concrete letter or a hole.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    Letter(u32),
    Hole,
}

/// Whether a position holds a letter or a hole.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PositionType {
    Solid,
    Hole,
}

impl PositionType {
    fn opposite(self) -> PositionType {
        match self {
            PositionType::Solid => PositionType::Hole,
            PositionType::Hole => PositionType::Solid,
        }
    }
}

impl Symbol {
    pub fn position_type(self) -> PositionType {
        match self {
            Symbol::Letter(_) => PositionType::Solid,
            Symbol::Hole => PositionType::Hole,
        }
    }

    pub fn is_hole(self) -> bool {
        matches!(self, Symbol::Hole)
    }
}

/// Compatibility relation: a hole matches anything, letters match themselves.
/// Reflexive and symmetric but not transitive.
pub fn compatible(a: Symbol, b: Symbol) -> bool {
    match (a, b) {
        (Symbol::Hole, _) | (_, Symbol::Hole) => true,
        (Symbol::Letter(x), Symbol::Letter(y)) => x == y,
    }
}

/// A non-empty partial word with precomputed hole statistics.
///
/// Immutable after construction; `n` is the length, `h` the number of holes
/// and `mu` the number of maximal blocks of consecutive holes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialWord {
    symbols: Vec<Symbol>,
    holes: usize,
    hole_blocks: usize,
    sentinel: PositionType,
}

impl PartialWord {
    /// Builds a word from symbols. Fails on empty input.
    pub fn new(symbols: Vec<Symbol>) -> Result<Self, Error> {
        if symbols.is_empty() {
            return Err(Error::InputEmpty);
        }
        let holes = symbols.iter().filter(|s| s.is_hole()).count();
        let mut hole_blocks = 0;
        let mut prev_hole = false;
        for s in &symbols {
            let hole = s.is_hole();
            if hole && !prev_hole {
                hole_blocks += 1;
            }
            prev_hole = hole;
        }
        let sentinel = symbols[0].position_type().opposite();
        Ok(PartialWord {
            symbols,
            holes,
            hole_blocks,
            sentinel,
        })
    }

    /// Parses raw bytes: every occurrence of `hole_char` becomes a hole, any
    /// other byte a letter with its byte value as code. A single trailing
    /// `\n` (with optional preceding `\r`) is stripped first.
    pub fn parse(text: &[u8], hole_char: u8) -> Result<Self, Error> {
        let mut text = text;
        if let Some(stripped) = text.strip_suffix(b"\r\n") {
            text = stripped;
        } else if let Some(stripped) = text.strip_suffix(b"\n") {
            text = stripped;
        }
        Self::parse_exact(text, hole_char)
    }

    /// As [`PartialWord::parse`] but without terminator stripping; every
    /// byte is taken verbatim.
    pub fn parse_exact(text: &[u8], hole_char: u8) -> Result<Self, Error> {
        let symbols = text
            .iter()
            .map(|&b| {
                if b == hole_char {
                    Symbol::Hole
                } else {
                    Symbol::Letter(u32::from(b))
                }
            })
            .collect();
        Self::new(symbols)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Number of holes (`h`).
    pub fn holes(&self) -> usize {
        self.holes
    }

    /// Number of maximal blocks of consecutive holes (`mu`).
    pub fn hole_blocks(&self) -> usize {
        self.hole_blocks
    }

    /// Type of the virtual position 0: the opposite of position 1.
    pub fn sentinel_type(&self) -> PositionType {
        self.sentinel
    }

    /// Symbol at 1-based position `pos`. Panics if `pos` is 0 or past `n`.
    pub fn symbol(&self, pos: usize) -> Symbol {
        self.symbols[pos - 1]
    }

    /// Type of position `pos` where `pos` ranges over `0..=n`; position 0 is
    /// the sentinel.
    pub fn position_type(&self, pos: usize) -> PositionType {
        if pos == 0 {
            self.sentinel
        } else {
            self.symbols[pos - 1].position_type()
        }
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// `NextChange[i]` for `i = 1..=n`: the smallest `k > 0` such that
    /// `type(i+k) != type(i)`, or `n+1-i` when no such position exists.
    /// Entry 0 of the returned table is unused.
    pub fn next_change(&self) -> Vec<usize> {
        let n = self.len();
        let mut nc = vec![0; n + 1];
        nc[n] = 1;
        for i in (1..n).rev() {
            nc[i] = if self.position_type(i + 1) != self.position_type(i) {
                1
            } else {
                nc[i + 1] + 1
            };
        }
        nc
    }

    /// Transit positions in increasing order: every `i` whose type differs
    /// from its predecessor's, position 0 being the sentinel. Position 1 is
    /// always transit.
    pub fn transit_positions(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut prev = self.sentinel;
        for i in 1..=self.len() {
            let t = self.position_type(i);
            if t != prev {
                out.push(i);
            }
            prev = t;
        }
        out
    }

    /// Renders the word as text, using `hole_char` for holes. Letters outside
    /// the char range come out as U+FFFD; intended for diagnostics.
    pub fn render(&self, hole_char: char) -> String {
        self.symbols
            .iter()
            .map(|s| match s {
                Symbol::Hole => hole_char,
                Symbol::Letter(c) => char::from_u32(*c).unwrap_or('\u{FFFD}'),
            })
            .collect()
    }

    /// Encodes the word back to bytes with `hole_char` for holes. Fails if a
    /// letter does not fit in a byte or collides with `hole_char`.
    pub fn to_bytes(&self, hole_char: u8) -> Result<Vec<u8>, Error> {
        self.symbols
            .iter()
            .enumerate()
            .map(|(idx, s)| match *s {
                Symbol::Hole => Ok(hole_char),
                Symbol::Letter(c) => {
                    let b = u8::try_from(c).map_err(|_| Error::SymbolNotByte { pos: idx + 1 })?;
                    if b == hole_char {
                        return Err(Error::SymbolNotByte { pos: idx + 1 });
                    }
                    Ok(b)
                }
            })
            .collect()
    }
}
