//! The independent verifier: explicit cones and Gaussian elimination of unit
//! entries down to a minimal complex.

use gentle_cones::field::Fp;
use gentle_cones::fixtures::kronecker;
use gentle_cones::morphisms::{Kind, Pair};
use gentle_cones::oracle::Oracle;
use gentle_cones::walks::parse_walk;

fn main() {
    let k = kronecker();
    let x = parse_walk("(d ~c)^7 ~a b @ -1", &k).unwrap();
    let y = parse_walk("(d ~c)^4 ~a b @ 1", &k).unwrap();

    // 3 divides p − 1, so the cube roots of unity in the cone exist.
    let oracle = Oracle::new(&k, Fp::new(1_000_003).unwrap());
    let pair = Pair::new(&oracle, &x, &y).unwrap();
    let (_, g) = pair.enumerate(&[Kind::Graph]).remove(0);

    let cone = oracle
        .mapping_cone(&g, &pair.x.complex, &pair.y.complex)
        .unwrap();
    let (min, eliminated) = oracle.reduce_min(&cone);
    println!("explicit cone: total rank {}", cone.total_rank());
    println!(
        "minimal model: total rank {} after {eliminated} eliminations",
        min.total_rank()
    );
    println!("per-vertex Euler characteristic: {:?}", min.euler());
    assert_eq!(min.euler(), cone.euler());
}
