//! Squarefree ideals keep every Stanley space squarefree.
//!
//! `cargo run --example squarefree_complement`

use janet_stanley::{is_squarefree_decomposition, janet_complement, janet_ideal, text};

fn main() {
    for src in [
        "vars 3\nx1*x2, x2*x3",
        "vars 4\nx1*x2, x3*x4",
        "vars 4\nx1*x2*x3, x2*x4",
    ] {
        let ideal = text::parse_ideal(src).unwrap();
        let d = janet_complement(&ideal);
        println!("complement of {ideal}:");
        print!("{d}");
        println!(
            "squarefree: {} / {}\n",
            is_squarefree_decomposition(&d),
            is_squarefree_decomposition(&janet_ideal(&ideal))
        );
    }
}
