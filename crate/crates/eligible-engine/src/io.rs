//! The `ELG1` eligible-number file format.
//!
//! Four magic bytes `ELG1` followed by the numbers as little-endian
//! 64-bit words, in whatever order the caller supplies (the engine's
//! emitters always write ascending).  No length field: the array runs to
//! end of file, and a payload that is not a whole number of words is
//! rejected as truncated.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{EngineError, Result};

pub const ELG1_MAGIC: [u8; 4] = *b"ELG1";

/// Write numbers to any sink in `ELG1` format.
pub fn write_numbers<W: Write>(mut sink: W, numbers: &[u64]) -> Result<()> {
    sink.write_all(&ELG1_MAGIC)?;
    for &value in numbers {
        sink.write_all(&value.to_le_bytes())?;
    }
    sink.flush()?;
    Ok(())
}

/// Read an `ELG1` stream back into a vector.
pub fn read_numbers<R: Read>(mut source: R) -> Result<Vec<u64>> {
    let mut magic = [0u8; 4];
    source.read_exact(&mut magic).map_err(|_| EngineError::BadMagic)?;
    if magic != ELG1_MAGIC {
        return Err(EngineError::BadMagic);
    }
    let mut payload = Vec::new();
    source.read_to_end(&mut payload)?;
    let trailing = payload.len() % 8;
    if trailing != 0 {
        return Err(EngineError::Truncated { trailing });
    }
    Ok(payload
        .chunks_exact(8)
        .map(|chunk| u64::from_le_bytes(chunk.try_into().expect("chunk of 8")))
        .collect())
}

pub fn write_numbers_path<P: AsRef<Path>>(path: P, numbers: &[u64]) -> Result<()> {
    write_numbers(BufWriter::new(File::create(path)?), numbers)
}

pub fn read_numbers_path<P: AsRef<Path>>(path: P) -> Result<Vec<u64>> {
    read_numbers(BufReader::new(File::open(path)?))
}
