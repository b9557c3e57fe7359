//! Near-monotonicity of B along the primes (the two-miss rule's backbone).

use eligible_engine::{b_inversions, FormProfile, Inversion};

/// Halmos character: inversions exist, but never with a gap beyond 2.
#[test]
fn halmos_inversions_are_twin_only() {
    let inversions = b_inversions(&FormProfile::halmos(), 100_000);
    assert!(!inversions.is_empty());
    assert!(inversions.iter().all(|inv| inv.gap() <= 2));
    // A concrete dip: χ(227) = +1 gives B(227)² = 227/4, while χ(229) = −1
    // drags B(229)² down to 229·228²/(4·230²) < 227/4.
    assert!(inversions.contains(&Inversion { p: 227, q: 229 }));
}

/// A handful of fixed synthetic profiles, anisotropy included.
#[test]
fn synthetic_profiles_stay_twin_only() {
    let profiles = [
        FormProfile::new(1, 5, Vec::new()),
        FormProfile::new(60, -15, vec![2]),
        FormProfile::new(88, 44, vec![2, 3]),
        FormProfile::new(420, 105, vec![5, 7]),
    ];
    for profile in &profiles {
        let inversions = b_inversions(profile, 50_000);
        assert!(
            inversions.iter().all(|inv| inv.gap() <= 2),
            "wide inversion under profile {profile:?}"
        );
    }
}

/// Trivial character without anisotropy: B is outright monotone.
#[test]
fn trivial_character_has_no_inversions() {
    let profile = FormProfile::new(1, 1, Vec::new());
    assert!(b_inversions(&profile, 50_000).is_empty());
}
