//! Certifying engine output by brute force, including what a failure
//! looks like.
//!
//! `cargo run --example oracle_verification`

use janet_stanley::oracle::{self, default_degree_bound};
use janet_stanley::{janet_complement, janet_partition, StanleyDecomposition, Target};

fn main() {
    let mut checked = 0;
    for seed in 0..50 {
        let ideal = oracle::random_ideal(seed, 3, 4, 5, false);
        let d = janet_complement(&ideal);
        let r = oracle::verify_cover_for(&ideal, &d, default_degree_bound(&ideal)).unwrap();
        assert!(r.is_ok());
        checked += r.checked;
    }
    println!("50 random complements verified, {checked} monomials checked");

    for seed in 0..50 {
        let c = oracle::random_complex(seed, 5, 4);
        assert!(oracle::verify_partition(&c, &janet_partition(&c).unwrap()).is_ok());
        let bound = default_degree_bound(&c.stanley_reisner().unwrap());
        assert!(oracle::verify_correspondence(&c, bound).unwrap().is_ok());
    }
    println!("50 random partitions verified");

    // drop one space and the oracle names a monomial that is no longer covered
    let ideal = oracle::random_ideal(7, 3, 3, 3, false);
    let full = janet_complement(&ideal);
    let mut spaces = full.spaces().to_vec();
    let dropped = spaces.remove(0);
    let broken = StanleyDecomposition::new(Target::Complement, ideal.clone(), spaces).unwrap();
    let r = oracle::verify_complement_cover(&ideal, &broken, 6).unwrap();
    println!(
        "\nwithout {dropped}: {} failures, first: {}",
        r.failures.len(),
        r.failures[0]
    );
}
