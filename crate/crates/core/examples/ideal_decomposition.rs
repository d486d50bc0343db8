//! Janet decompositions of a monomial ideal and of its complement.
//!
//! `cargo run --example ideal_decomposition`

use janet_stanley::{janet_complement, janet_ideal, text};

fn main() {
    let ideal = text::parse_ideal("vars 4\nx1^2*x2, x2*x3^3, x1*x4^2, x3*x4").unwrap();
    println!("I = {ideal}");
    println!(
        "alpha = {}, beta = {}",
        ideal.alpha().unwrap(),
        ideal.beta().unwrap()
    );
    for k in 0..=ideal.beta().unwrap() {
        println!("  slice {k}: {}", ideal.slice(k).unwrap());
    }

    let inside = janet_ideal(&ideal);
    println!("\nI decomposes into {} spaces:", inside.len());
    print!("{inside}");

    let outside = janet_complement(&ideal);
    println!("\nthe complement decomposes into {} spaces:", outside.len());
    print!("{outside}");
    println!(
        "sdepth of that decomposition: {}",
        outside.sdepth().unwrap()
    );
}
