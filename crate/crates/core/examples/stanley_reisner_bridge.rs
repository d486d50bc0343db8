//! A partition of a complex and the Janet complement decomposition of its
//! Stanley-Reisner ideal describe the same squarefree spaces.
//!
//! `cargo run --example stanley_reisner_bridge`

use janet_stanley::text::{self, FaceStyle};
use janet_stanley::{janet_complement, janet_partition};

fn main() {
    let complex = text::parse_complex("vertices 4\n{124},{134},{23}").unwrap();
    let ideal = complex.stanley_reisner().unwrap();
    println!(
        "complex {}",
        text::render_complex(&complex, FaceStyle::Compact)
    );
    println!("Stanley-Reisner ideal {ideal}\n");

    let p = janet_partition(&complex).unwrap();
    let from_partition = p.to_spaces().unwrap();
    let from_ideal = janet_complement(&ideal);
    for (iv, s) in p.intervals().iter().zip(from_partition.spaces()) {
        println!(
            "{:<16} -> {s}",
            text::render_interval(iv, FaceStyle::Compact)
        );
    }
    println!(
        "\nsame spaces as the complement decomposition: {}",
        from_partition.spaces() == from_ideal.spaces()
    );
}
