//! Enumerating a basis of morphisms between two band complexes.

use gentle_cones::field::Fp;
use gentle_cones::fixtures::final_algebra;
use gentle_cones::morphisms::{Kind, Pair};
use gentle_cones::oracle::Oracle;
use gentle_cones::walks::parse_walk;

fn main() {
    let f = final_algebra();
    let sigma = parse_walk("~a b*c ~a b ~e d*b*c @ 36", &f).unwrap();
    let tau = parse_walk("e ~d*b @ 4 deg=-2", &f).unwrap();

    let oracle = Oracle::new(&f, Fp::new(1_000_003).unwrap());
    let pair = Pair::new(&oracle, &sigma, &tau).unwrap();
    for (m, g) in pair.enumerate(&Kind::ALL) {
        // Each descriptor comes with an explicit chain map that is not null-homotopic.
        assert!(pair.is_chain_map(&g) && !pair.is_null_homotopic(&g));
        println!("{}", m.describe(&f));
    }
}
