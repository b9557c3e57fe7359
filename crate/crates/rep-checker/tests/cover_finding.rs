//! Split-local-cover search: minimal d, block Gram structure, local
//! agreement bookkeeping, and the error paths.

use qform_core::QuadForm;
use rep_checker::{find_split_local_cover, find_split_local_cover_with, CheckError, CoverConfig};

fn halmos() -> QuadForm {
    QuadForm::diagonal(&[1, 2, 7, 13]).unwrap()
}

#[test]
fn halmos_cover_splits_off_the_unit_square() {
    let form = halmos();
    let cover = find_split_local_cover(&form).unwrap();
    assert_eq!(cover.d, 1);
    assert_eq!(
        cover.ternary.gram_rows(),
        QuadForm::diagonal(&[2, 7, 13]).unwrap().gram_rows()
    );
    // One full period of the local conditions fits under the default cap.
    assert_eq!(cover.verified_modulus, 8 * 182 * 728);
    // The embedding really is x² ⊥ (2y² + 7z² + 13w²) inside the form.
    let block = form.transform(&cover.embedding).unwrap();
    assert_eq!(block.gram_rows(), cover.cover_form().unwrap().gram_rows());
    assert_eq!(block.entry(0, 0), 1);
    for i in 1..4 {
        assert_eq!(block.entry(0, i), 0);
    }
}

#[test]
fn sorted_diagonal_splits_at_its_first_entry() {
    let form = QuadForm::diagonal(&[2, 3, 5, 7]).unwrap();
    let cover = find_split_local_cover(&form).unwrap();
    assert_eq!(cover.d, 2);
    assert_eq!(
        cover.ternary.gram_rows(),
        QuadForm::diagonal(&[3, 5, 7]).unwrap().gram_rows()
    );
    assert_eq!(form.evaluate(&cover.embedding[0]).unwrap(), 2);
}

#[test]
fn cover_values_are_parent_values() {
    // Everything the sublattice represents, the parent must represent.
    let parents = [halmos(), QuadForm::diagonal(&[1, 1, 2, 22]).unwrap()];
    for parent in parents {
        let cover = find_split_local_cover(&parent).unwrap();
        let sub = cover.cover_form().unwrap();
        let sub_theta = sub.theta_coefficients(200).unwrap();
        let parent_theta = parent.theta_coefficients(200).unwrap();
        for m in 0..=200usize {
            if sub_theta[m] > 0 {
                assert!(
                    parent_theta[m] > 0,
                    "sublattice of {:?} represents {m}, parent does not",
                    parent.gram_rows()
                );
            }
        }
    }
}

#[test]
fn off_diagonal_parent_gets_a_structural_cover() {
    // No unit vectors on the axes; the kernel machinery has to work.
    let gram = [
        vec![2, 1, 0, 0],
        vec![1, 2, 0, 0],
        vec![0, 0, 3, 0],
        vec![0, 0, 0, 4],
    ];
    let parent = QuadForm::from_gram(&gram).unwrap();
    let config = CoverConfig {
        d_cap: 20,
        residue_cap: 1 << 12,
    };
    let cover = find_split_local_cover_with(&parent, &config).unwrap();
    assert!(cover.d >= 2, "no primitive vectors of norm 1 exist");
    // Embedding row 0 attains d; the rest are orthogonal to it.
    assert_eq!(parent.evaluate(&cover.embedding[0]).unwrap(), cover.d);
    let block = parent.transform(&cover.embedding).unwrap();
    assert_eq!(block.entry(0, 0) as u64, cover.d);
    for i in 1..4 {
        assert_eq!(block.entry(0, i), 0, "embedding not orthogonal");
    }
    // The ternary part is exactly the lower block.
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(cover.ternary.entry(i, j), block.entry(i + 1, j + 1));
        }
    }
    assert_eq!(cover.verified_modulus, 1 << 12);
}

#[test]
fn search_is_deterministic() {
    let form = halmos();
    let a = find_split_local_cover(&form).unwrap();
    let b = find_split_local_cover(&form).unwrap();
    assert_eq!(a.d, b.d);
    assert_eq!(a.embedding, b.embedding);
    assert_eq!(a.ternary.gram_rows(), b.ternary.gram_rows());
}

#[test]
fn non_quaternary_is_rejected() {
    let ternary = QuadForm::diagonal(&[1, 2, 3]).unwrap();
    match find_split_local_cover(&ternary) {
        Err(CheckError::NotQuaternary { dim: 3 }) => {}
        other => panic!("expected NotQuaternary, got {other:?}"),
    }
}

#[test]
fn cap_exhaustion_is_reported() {
    // Minimum of the form is 3; no vectors exist below d = 3.
    let form = QuadForm::diagonal(&[3, 4, 5, 6]).unwrap();
    let config = CoverConfig {
        d_cap: 2,
        residue_cap: 1 << 10,
    };
    match find_split_local_cover_with(&form, &config) {
        Err(CheckError::NoCover { d_cap: 2 }) => {}
        other => panic!("expected NoCover, got {other:?}"),
    }
}
