//! Quasi-graph maps: the connecting map of an Auslander–Reiten triangle has
//! the rank-two band as its cone.

use gentle_cones::cones::{compute_cone, verify};
use gentle_cones::field::Fp;
use gentle_cones::fixtures::kronecker;
use gentle_cones::morphisms::{Kind, Pair};
use gentle_cones::oracle::Oracle;
use gentle_cones::walks::parse_walk;

fn main() {
    let k = kronecker();
    let b = parse_walk("d ~c ~a b @ 3", &k).unwrap();
    let shifted = parse_walk("d ~c ~a b @ 3 deg=-1", &k).unwrap();

    let oracle = Oracle::new(&k, Fp::new(1_000_003).unwrap());
    let pair = Pair::new(&oracle, &b, &shifted).unwrap();
    for (m, _) in pair.enumerate(&[Kind::Quasi]) {
        let d = compute_cone(&k, &m).unwrap();
        let report = verify(&k, &m, &d, 16, 0).unwrap();
        println!(
            "{}\n  cone = {}  (rule {:?}, iso {})",
            m.describe(&k),
            d.text(&k),
            d.provenance.rule,
            report.iso
        );
        assert!(report.iso);
    }
}
