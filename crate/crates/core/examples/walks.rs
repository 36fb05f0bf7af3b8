//! Homotopy strings and bands: parsing, validation, canonical readings and
//! primitive roots.

use gentle_cones::fixtures::kronecker;
use gentle_cones::walks::{parse_band, parse_string, parse_walk};

fn main() {
    let k = kronecker();

    let s = parse_string("d ~c ~a", &k).unwrap();
    println!(
        "string {} with node degrees {:?}",
        s.word(&k),
        gentle_cones::walks::Walk::String(s.clone()).degree_profile()
    );
    println!("trivial string: {}", parse_string("", &k).unwrap().word(&k));

    let b = parse_band("(d ~c)^3 ~a b @ 2", &k).unwrap();
    let (root, power) = b.primitive_root();
    println!(
        "band {} has a primitive root of length {} (power {power})",
        b.word(&k),
        root.len()
    );
    println!("canonical reading: {}", b.canonical(&k).word(&k));

    let p = parse_band("(d ~c ~a b)^2 @ 9", &k).unwrap();
    println!(
        "{} is a proper power: {:?}",
        p.word(&k),
        p.primitive_root().1
    );

    for bad in ["band: d ~a @ 1", "d c"] {
        println!("{bad:?}: {}", parse_walk(bad, &k).unwrap_err());
    }
}
