//! Binary index persistence.
//!
//! Layout, all integers little-endian u32:
//!
//! ```text
//! "LCCP"  magic, 4 bytes
//! version u8 (currently 1)
//! n, h, mu, kappa
//! word    n bytes (holes written as the hole byte)
//! hole    1 byte
//! NextChange[1..=n]
//! T[1..=kappa]
//! table   (n+1)*(kappa+1) cells, row-major from row 1
//! ```
//!
//! Loading re-derives everything from the stored word and refuses the file
//! if any stored field disagrees, so a loaded index is always internally
//! consistent.

use std::io::{Read, Write};

use crate::error::Error;
use crate::index::LccpIndex;
use crate::word::PartialWord;

const MAGIC: &[u8; 4] = b"LCCP";
const VERSION: u8 = 1;

impl LccpIndex {
    /// Writes the index in the binary format above. `hole_char` is the byte
    /// used to encode holes; every letter must be a distinct byte.
    pub fn write_to<W: Write>(&self, mut out: W, hole_char: u8) -> Result<(), Error> {
        let word_bytes = self.word().to_bytes(hole_char)?;
        let stats = self.stats();

        out.write_all(MAGIC)?;
        out.write_all(&[VERSION])?;
        for v in [stats.n, stats.holes, stats.hole_blocks, stats.transit_count] {
            out.write_all(&(v as u32).to_le_bytes())?;
        }
        out.write_all(&word_bytes)?;
        out.write_all(&[hole_char])?;
        for &v in &self.next_change()[1..] {
            out.write_all(&(v as u32).to_le_bytes())?;
        }
        for &v in self.transit() {
            out.write_all(&(v as u32).to_le_bytes())?;
        }
        for &cell in self.table_cells() {
            out.write_all(&cell.to_le_bytes())?;
        }
        Ok(())
    }

    /// Reads an index written by [`LccpIndex::write_to`], rebuilding the
    /// suffix structures from the stored word and verifying every stored
    /// table against the rebuild.
    pub fn read_from<R: Read>(mut input: R) -> Result<LccpIndex, Error> {
        let mut magic = [0u8; 4];
        input.read_exact(&mut magic)?;
        if &magic != MAGIC {
            return Err(Error::BadMagic);
        }
        let version = read_u8(&mut input)?;
        if version != VERSION {
            return Err(Error::BadVersion { found: version });
        }

        let n = read_u32(&mut input)? as usize;
        let holes = read_u32(&mut input)? as usize;
        let hole_blocks = read_u32(&mut input)? as usize;
        let kappa = read_u32(&mut input)? as usize;
        if n == 0 {
            return Err(Error::Corrupt("stored length is zero"));
        }

        let mut word_bytes = vec![0u8; n];
        input.read_exact(&mut word_bytes)?;
        let hole_char = read_u8(&mut input)?;
        let word = PartialWord::parse_exact(&word_bytes, hole_char)?;
        if word.holes() != holes {
            return Err(Error::Corrupt("hole count does not match the word"));
        }
        if word.hole_blocks() != hole_blocks {
            return Err(Error::Corrupt("hole block count does not match the word"));
        }

        let next_change = read_u32_vec(&mut input, n)?;
        let transit = read_u32_vec(&mut input, kappa)?;
        let table = read_u32_vec(&mut input, (n + 1) * (kappa + 1))?;

        let index = LccpIndex::build(word);
        if next_change != index.next_change()[1..] {
            return Err(Error::Corrupt("NextChange does not match the word"));
        }
        if transit != *index.transit() {
            return Err(Error::Corrupt("transit set does not match the word"));
        }
        if table
            .iter()
            .zip(index.table_cells())
            .any(|(stored, fresh)| *stored as u32 != *fresh)
        {
            return Err(Error::Corrupt("LCCP table does not match the word"));
        }
        Ok(index)
    }
}

fn read_u8<R: Read>(input: &mut R) -> Result<u8, Error> {
    let mut buf = [0u8; 1];
    input.read_exact(&mut buf)?;
    Ok(buf[0])
}

fn read_u32<R: Read>(input: &mut R) -> Result<u32, Error> {
    let mut buf = [0u8; 4];
    input.read_exact(&mut buf)?;
    Ok(u32::from_le_bytes(buf))
}

fn read_u32_vec<R: Read>(input: &mut R, len: usize) -> Result<Vec<usize>, Error> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(read_u32(input)? as usize);
    }
    Ok(out)
}
