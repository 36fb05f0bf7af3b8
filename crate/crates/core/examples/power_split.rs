//! Band complexes of proper powers split into primitive bands twisted by
//! roots of unity.

use gentle_cones::cones::split_band_power;
use gentle_cones::fixtures::kronecker;
use gentle_cones::walks::parse_band;

fn main() {
    let k = kronecker();
    for spec in [
        "(d ~c)^3 @ 1",
        "(d ~c)^2 @ -1",
        "(d ~c ~a b)^2 @ 9",
        "(d ~c)^3 @ 2",
    ] {
        let b = parse_band(spec, &k).unwrap();
        let parts: Vec<String> = split_band_power(&k, &b)
            .unwrap()
            .iter()
            .map(|s| s.text(&k))
            .collect();
        println!("{spec:>20}  =  {}", parts.join(" ⊕ "));
    }
}
