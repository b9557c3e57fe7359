//! On-disk format for boolean theta bitmaps.
//!
//! Layout, all integers little-endian:
//!
//! ```text
//! "BTH1"            4 bytes   magic
//! bound             u64       largest value covered
//! mode              u8        0 = exact, 1 = approximate
//! form_hash         u64       FNV-1a of the ternary form
//! words             u64 × ⌈(bound+1)/64⌉
//! ```
//!
//! The word count is implied by the bound, so a short or padded payload is
//! detected, and the hash ties a file back to the form that produced it.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::bitset::{BitsetMode, RepresentedBitset};
use crate::error::{CheckError, Result};

pub const BTH_MAGIC: [u8; 4] = *b"BTH1";

/// Serialize a bitmap.
pub fn write_bitset<W: Write>(writer: &mut W, bits: &RepresentedBitset) -> Result<()> {
    writer.write_all(&BTH_MAGIC)?;
    writer.write_all(&bits.bound().to_le_bytes())?;
    writer.write_all(&[bits.mode().to_byte()])?;
    writer.write_all(&bits.form_hash().to_le_bytes())?;
    for word in bits.words() {
        writer.write_all(&word.to_le_bytes())?;
    }
    writer.flush()?;
    Ok(())
}

/// Deserialize a bitmap, checking magic, mode byte, and payload length.
pub fn read_bitset<R: Read>(reader: &mut R) -> Result<RepresentedBitset> {
    let mut magic = [0u8; 4];
    reader.read_exact(&mut magic)?;
    if magic != BTH_MAGIC {
        return Err(CheckError::BadMagic);
    }
    let mut u64_buf = [0u8; 8];
    reader.read_exact(&mut u64_buf)?;
    let bound = u64::from_le_bytes(u64_buf);
    let mut mode_buf = [0u8; 1];
    reader.read_exact(&mut mode_buf)?;
    let mode = BitsetMode::from_byte(mode_buf[0])?;
    reader.read_exact(&mut u64_buf)?;
    let form_hash = u64::from_le_bytes(u64_buf);

    let expected_words = ((bound + 1).div_ceil(64)) as usize;
    let mut payload = Vec::new();
    reader.read_to_end(&mut payload)?;
    if payload.len() != expected_words * 8 {
        return Err(CheckError::Truncated {
            expected: expected_words * 8,
            found: payload.len(),
        });
    }
    let words = payload
        .chunks_exact(8)
        .map(|chunk| u64::from_le_bytes(chunk.try_into().expect("chunk of 8")))
        .collect();
    RepresentedBitset::from_raw(bound, mode, form_hash, words)
}

/// [`write_bitset`] to a fresh file, buffered.
pub fn write_bitset_path<P: AsRef<Path>>(path: P, bits: &RepresentedBitset) -> Result<()> {
    let mut writer = BufWriter::new(File::create(path)?);
    write_bitset(&mut writer, bits)
}

/// [`read_bitset`] from a file, buffered.
pub fn read_bitset_path<P: AsRef<Path>>(path: P) -> Result<RepresentedBitset> {
    let mut reader = BufReader::new(File::open(path)?);
    read_bitset(&mut reader)
}
