//! A single map between bands whose cone splits over Q(i).

use gentle_cones::cones::{compute_cone, verify};
use gentle_cones::field::Fp;
use gentle_cones::fixtures::final_algebra;
use gentle_cones::morphisms::{Descriptor, Kind, Pair};
use gentle_cones::oracle::Oracle;
use gentle_cones::walks::parse_walk;

fn main() {
    let f = final_algebra();
    let sigma = parse_walk("~a b*c ~a b ~e d*b*c @ 36", &f).unwrap();
    let tau = parse_walk("e ~d*b @ 4 deg=-2", &f).unwrap();
    let b = f.parse_path("b").unwrap();

    let oracle = Oracle::new(&f, Fp::new(1_000_003).unwrap());
    let pair = Pair::new(&oracle, &sigma, &tau).unwrap();
    let (m, _) = pair
        .enumerate(&[Kind::Single])
        .into_iter()
        .find(|(m, _)| matches!(&m.descriptor, Descriptor::Single { component } if component.path == b))
        .unwrap();

    let d = compute_cone(&f, &m).unwrap();
    println!("{}\n  cone = {}", m.describe(&f), d.text(&f));
    let report = verify(&f, &m, &d, 16, 0).unwrap();
    println!("  verified over {}: iso = {}", report.field, report.iso);
    assert!(report.iso);
}
