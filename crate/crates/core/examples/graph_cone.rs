//! The cone of a graph map between two Kronecker bands is a single band.

use gentle_cones::cones::{compute_cone, verify};
use gentle_cones::field::Fp;
use gentle_cones::fixtures::kronecker;
use gentle_cones::morphisms::{Kind, Pair};
use gentle_cones::oracle::Oracle;
use gentle_cones::walks::parse_walk;

fn main() {
    let k = kronecker();
    let tau = parse_walk("(d ~c)^2 ~a b @ 1", &k).unwrap();
    let sigma = parse_walk("d ~c ~a b (d ~c)^2 ~a b @ 1", &k).unwrap();

    let oracle = Oracle::new(&k, Fp::new(1_000_003).unwrap());
    let pair = Pair::new(&oracle, &tau, &sigma).unwrap();
    let (m, _) = pair
        .enumerate(&[Kind::Graph])
        .into_iter()
        .max_by_key(|(m, _)| m.descriptor.overlap().unwrap().len)
        .unwrap();

    let d = compute_cone(&k, &m).unwrap();
    println!("{}\n  cone = {}", m.describe(&k), d.text(&k));
    let report = verify(&k, &m, &d, 16, 0).unwrap();
    println!("  {report:?}");
    assert!(report.iso);
}
