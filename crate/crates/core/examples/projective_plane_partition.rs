//! The Janet partition of the six-vertex real projective plane, its
//! r-vector, and why it is not nice.
//!
//! `cargo run --example projective_plane_partition`

use janet_stanley::janet_partition;
use janet_stanley::text::{self, FaceStyle};

const RP2: &str = "vertices 6\n{124},{126},{135},{134},{156},{245},{236},{235},{346},{456}\n";

fn main() {
    let complex = text::parse_complex(RP2).unwrap();
    println!(
        "delta_0 = {}",
        text::render_complex(&complex.restriction().unwrap(), FaceStyle::Compact)
    );
    println!(
        "delta_1 = {}",
        text::render_complex(&complex.shift_link().unwrap(), FaceStyle::Compact)
    );

    let p = janet_partition(&complex).unwrap();
    print!(
        "{}",
        text::render_partition(&p, FaceStyle::Compact, true, true)
    );

    let faces = complex.all_faces().len();
    let counted: usize = p.intervals().iter().map(|iv| 1 << iv.rank()).sum();
    println!("faces: {faces}, sum of 2^rank: {counted}");
}
