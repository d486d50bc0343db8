//! The text formats: parsing, canonical rendering, JSON, and error
//! positions.
//!
//! `cargo run --example parse_and_render`

use janet_stanley::text::{self, InputDocument};
use janet_stanley::{janet_complement, janet_partition};

fn main() {
    let doc = text::parse_document("# a comment\nvars 3\nx2*x3, x1^2*x2, x1^2*x2*x3\n").unwrap();
    print!("canonical form:\n{}", text::render_document(&doc));
    if let InputDocument::Ideal(ideal) = &doc {
        print!("{}", text::decomposition_json(&janet_complement(ideal)));
    }

    let wide = text::parse_document("vertices 11\n{1,2,11}, {3,10}\n").unwrap();
    print!("\n{}", text::render_document(&wide));
    if let InputDocument::Complex(c, _) = &wide {
        print!("{}", text::partition_json(&janet_partition(c).unwrap()));
    }

    for bad in ["vars 2\nx1*x3", "vertices 3\n{14}", "vars 2\nx1^"] {
        println!("{:?} -> {}", bad, text::parse_document(bad).unwrap_err());
    }
}
