//! The BTH1 bitmap file format: header layout, round trips, and rejection
//! of malformed payloads.

use std::io::Cursor;

use qform_core::QuadForm;
use rep_checker::io::{read_bitset, read_bitset_path, write_bitset, write_bitset_path, BTH_MAGIC};
use rep_checker::{boolean_theta, BitsetMode, CheckError};

fn sample(bound: u64, mode: BitsetMode) -> rep_checker::RepresentedBitset {
    let form = QuadForm::diagonal(&[2, 7, 13]).unwrap();
    boolean_theta(&form, bound, mode).unwrap()
}

#[test]
fn round_trip_preserves_everything() {
    let bits = sample(1000, BitsetMode::Exact);
    let mut buf = Vec::new();
    write_bitset(&mut buf, &bits).unwrap();
    let back = read_bitset(&mut Cursor::new(&buf)).unwrap();
    assert_eq!(back, bits);

    // Header layout: magic, bound, mode byte, form hash, then words.
    assert_eq!(&buf[0..4], &BTH_MAGIC);
    assert_eq!(u64::from_le_bytes(buf[4..12].try_into().unwrap()), 1000);
    assert_eq!(buf[12], 0);
    let form = QuadForm::diagonal(&[2, 7, 13]).unwrap();
    assert_eq!(
        u64::from_le_bytes(buf[13..21].try_into().unwrap()),
        form.fnv_hash()
    );
    let expected_words = (1000u64 + 1).div_ceil(64) as usize;
    assert_eq!(buf.len(), 21 + expected_words * 8);
}

#[test]
fn approximate_mode_survives_the_trip() {
    let bits = sample(321, BitsetMode::Approximate);
    let mut buf = Vec::new();
    write_bitset(&mut buf, &bits).unwrap();
    assert_eq!(buf[12], 1);
    let back = read_bitset(&mut Cursor::new(&buf)).unwrap();
    assert_eq!(back.mode(), BitsetMode::Approximate);
    assert_eq!(back, bits);
}

#[test]
fn wrong_magic_is_rejected() {
    let bits = sample(64, BitsetMode::Exact);
    let mut buf = Vec::new();
    write_bitset(&mut buf, &bits).unwrap();
    buf[3] = b'2';
    match read_bitset(&mut Cursor::new(&buf)) {
        Err(CheckError::BadMagic) => {}
        other => panic!("expected BadMagic, got {other:?}"),
    }
}

#[test]
fn unknown_mode_byte_is_rejected() {
    let bits = sample(64, BitsetMode::Exact);
    let mut buf = Vec::new();
    write_bitset(&mut buf, &bits).unwrap();
    buf[12] = 7;
    match read_bitset(&mut Cursor::new(&buf)) {
        Err(CheckError::BadMode(7)) => {}
        other => panic!("expected BadMode, got {other:?}"),
    }
}

#[test]
fn short_and_padded_payloads_are_rejected() {
    let bits = sample(500, BitsetMode::Exact);
    let mut buf = Vec::new();
    write_bitset(&mut buf, &bits).unwrap();

    let short = &buf[..buf.len() - 5];
    match read_bitset(&mut Cursor::new(short)) {
        Err(CheckError::Truncated { .. }) => {}
        other => panic!("expected Truncated for a short payload, got {other:?}"),
    }

    let mut padded = buf.clone();
    padded.extend_from_slice(&[0; 8]);
    match read_bitset(&mut Cursor::new(&padded)) {
        Err(CheckError::Truncated { .. }) => {}
        other => panic!("expected Truncated for a padded payload, got {other:?}"),
    }
}

#[test]
fn file_helpers_round_trip() {
    let bits = sample(777, BitsetMode::Exact);
    let path = std::env::temp_dir().join(format!("bth-roundtrip-{}.bth", std::process::id()));
    write_bitset_path(&path, &bits).unwrap();
    let back = read_bitset_path(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(back, bits);
}
