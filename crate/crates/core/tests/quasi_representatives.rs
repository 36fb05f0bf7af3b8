//! The cone of a quasi-graph map is computed from one chosen representative;
//! every other representative of the same class must give the same cone.

use gentle_cones::cones::{compute_cone, verification_field};
use gentle_cones::fixtures::{final_algebra, kronecker};
use gentle_cones::gen::{bands_up_to, random_gentle};
use gentle_cones::morphisms::{Kind, Pair};
use gentle_cones::oracle::Oracle;
use gentle_cones::walks::Walk;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn every_representative_gives_the_same_cone() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut algs = vec![kronecker(), final_algebra()];
    algs.extend((0..3).map(|_| random_gentle(&mut rng, 5)));
    let mut checked = 0;
    for alg in &algs {
        let bands = bands_up_to(alg, 6);
        for (i, a) in bands.iter().enumerate().take(6) {
            for b in bands.iter().skip(i).take(6) {
                for shift in -2..=2 {
                    let x = Walk::Band(a.clone());
                    let y = Walk::Band(b.with_anchor(shift));
                    let probe = Oracle::new(alg, gentle_cones::field::Fp::new(1_000_003).unwrap());
                    let pair = Pair::new(&probe, &x, &y).unwrap();
                    for (m, _) in pair.enumerate(&[Kind::Quasi]) {
                        let d = compute_cone(alg, &m).unwrap();
                        let oracle = Oracle::new(alg, verification_field(&m, &d).unwrap());
                        let pair = Pair::new(&oracle, &x, &y).unwrap();
                        let reps = pair.quasi_representatives(m.descriptor.overlap().unwrap());
                        if reps.len() < 2 {
                            continue;
                        }
                        let claimed = oracle.embed_complex(&d.complex()).unwrap();
                        for (c, g) in &reps {
                            let rep = oracle
                                .verify_cone(g, &pair.x.complex, &pair.y.complex, &claimed, 16, &mut rng)
                                .unwrap();
                            assert!(rep.iso, "{} with representative {c:?}: {}", m.describe(alg), d.text(alg));
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 0, "no quasi-graph class with two representatives was found");
    println!("{checked} quasi-graph classes checked against every representative");
}
