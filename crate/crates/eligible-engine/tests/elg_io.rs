//! The ELG1 on-disk format.

use std::io::Cursor;

use eligible_engine::{read_numbers, write_numbers, EngineError, ELG1_MAGIC};

#[test]
fn round_trip_preserves_numbers() {
    let numbers = vec![1u64, 5, 20, 17_107_700_610, u64::MAX];
    let mut buffer = Vec::new();
    write_numbers(&mut buffer, &numbers).unwrap();
    assert_eq!(&buffer[..4], b"ELG1");
    assert_eq!(buffer.len(), 4 + numbers.len() * 8);
    let back = read_numbers(Cursor::new(buffer)).unwrap();
    assert_eq!(back, numbers);
}

#[test]
fn empty_set_round_trips() {
    let mut buffer = Vec::new();
    write_numbers(&mut buffer, &[]).unwrap();
    let back = read_numbers(Cursor::new(buffer)).unwrap();
    assert!(back.is_empty());
}

#[test]
fn wrong_magic_is_rejected() {
    let err = read_numbers(Cursor::new(b"ELG2\x01\x00\x00\x00\x00\x00\x00\x00".to_vec()))
        .unwrap_err();
    assert!(matches!(err, EngineError::BadMagic));
}

#[test]
fn truncated_payload_is_rejected() {
    let mut buffer = Vec::new();
    buffer.extend_from_slice(&ELG1_MAGIC);
    buffer.extend_from_slice(&42u64.to_le_bytes());
    buffer.extend_from_slice(&[1, 2, 3]); // a partial word
    let err = read_numbers(Cursor::new(buffer)).unwrap_err();
    match err {
        EngineError::Truncated { trailing } => assert_eq!(trailing, 3),
        other => panic!("expected truncation, got {other:?}"),
    }
}
