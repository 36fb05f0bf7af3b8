mod common;

use common::exact;
use gentle_cones::complexes::build_band_complex;
use gentle_cones::cones::{compute_cone, verify, Summand};
use gentle_cones::field::Fp;
use gentle_cones::gen::{bands_up_to, random_gentle, strings_up_to};
use gentle_cones::morphisms::{Kind, Pair};
use gentle_cones::oracle::{FComplex, Oracle};
use gentle_cones::walks::{HomotopyBand, Walk};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

/// A random pair of walks with at least one band, and matching degrees at
/// some node more often than not.
fn random_pair(seed: u64) -> (gentle_cones::algebra::GentleAlgebra, Walk, Walk) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alg = random_gentle(&mut rng, 5);
    let bands = bands_up_to(&alg, 6);
    let strings = strings_up_to(&alg, 4);
    let lam = [1i64, -1, 2, 3][rng.gen_range(0..4)];
    let mu = [1i64, -1, 5, 7][rng.gen_range(0..4)];
    let band = |rng: &mut ChaCha8Rng, s: i64| {
        let b = bands.choose(rng).unwrap();
        Walk::Band(b.with_scalar(exact(s)).with_anchor(rng.gen_range(-2..=2)))
    };
    let string = |rng: &mut ChaCha8Rng| {
        Walk::String(
            strings
                .choose(rng)
                .unwrap()
                .with_anchor(rng.gen_range(-2..=2)),
        )
    };
    let (s, t) = match rng.gen_range(0..3) {
        0 => (band(&mut rng, lam), band(&mut rng, mu)),
        1 => (band(&mut rng, lam), string(&mut rng)),
        _ => (string(&mut rng), band(&mut rng, mu)),
    };
    (alg, s, t)
}

proptest! {
    #![proptest_config(config(128))]

    /// Every computed decomposition is the explicit cone, up to isomorphism;
    /// band summands are primitive and graded dimensions agree.
    #[test]
    fn cones_agree_with_oracle(seed in any::<u64>()) {
        let (alg, s, t) = random_pair(seed);
        let o = Oracle::new(&alg, Fp::new(1_000_003).unwrap());
        let pair = Pair::new(&o, &s, &t).unwrap();
        for (m, _) in pair.enumerate(&Kind::ALL) {
            let d = compute_cone(&alg, &m).unwrap();
            if d.is_oracle_only() {
                // Single and double maps with a string end are not named.
                prop_assert!(!(s.is_band() && t.is_band()));
                continue;
            }
            for summand in &d.summands {
                if let Summand::Band { band, .. } = summand {
                    prop_assert_eq!(band.primitive_root().1, 1);
                    prop_assert!(!band.scalar().is_zero());
                }
            }
            let rep = verify(&alg, &m, &d, 16, seed).unwrap();
            prop_assert!(rep.graded_dims_match, "{}: {}", m.describe(&alg), d.text(&alg));
            prop_assert!(rep.iso, "{}: {}", m.describe(&alg), d.text(&alg));
        }
    }
}

/// Eliminates unit entries in random order.
fn reduce_randomly(o: &Oracle<Fp>, c: &FComplex<u64>, rng: &mut ChaCha8Rng) -> FComplex<u64> {
    let mut c = c.clone();
    loop {
        let mut units = Vec::new();
        for (i, m) in c.diffs.iter().enumerate() {
            for (row, r) in m.iter().enumerate() {
                for (col, e) in r.iter().enumerate() {
                    if e.iter().any(|(p, _)| p.is_trivial()) {
                        units.push((i, row, col));
                    }
                }
            }
        }
        let Some(&(i, row, col)) = units.choose(rng) else {
            break;
        };
        o.eliminate(&mut c, i, row, col);
    }
    o.reduce_min(&c).0
}

proptest! {
    #![proptest_config(config(64))]

    /// Different elimination orders reach isomorphic minimal complexes with the
    /// same per-vertex Euler characteristic.
    #[test]
    fn reduction_is_confluent(seed in any::<u64>()) {
        let (alg, s, t) = random_pair(seed);
        let o = Oracle::new(&alg, Fp::new(1_000_003).unwrap());
        let pair = Pair::new(&o, &s, &t).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (_, g) in pair.enumerate(&Kind::ALL).into_iter().take(3) {
            let cone = o.mapping_cone(&g, &pair.x.complex, &pair.y.complex).unwrap();
            let (a, _) = o.reduce_min(&cone);
            let b = reduce_randomly(&o, &cone, &mut rng);
            prop_assert_eq!(a.euler(), cone.euler());
            prop_assert_eq!(b.euler(), cone.euler());
            prop_assert!(o.iso_probe(&a, &b, 16, &mut rng).is_some());
        }
    }

    /// Canonical readings ignore rotation and inversion; powers have their
    /// root as primitive root.
    #[test]
    fn band_words(seed in any::<u64>(), k in 0i64..8, n in 1usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alg = random_gentle(&mut rng, 5);
        let b = bands_up_to(&alg, 6).choose(&mut rng).unwrap().clone();
        let c = b.canonical(&alg);
        prop_assert_eq!(b.rotate(k).canonical(&alg).word(&alg), c.word(&alg));
        prop_assert_eq!(b.inverse().canonical(&alg).word(&alg), c.word(&alg));
        let letters: Vec<_> = b.letters().iter().cycle().take(b.len() * n).cloned().collect();
        let p = HomotopyBand::new(&alg, letters, exact(2), 0).unwrap();
        let (root, power) = p.primitive_root();
        prop_assert_eq!(power, n);
        prop_assert_eq!(root.as_slice(), b.letters());
    }

    /// Jordan blocks of every size give minimal complexes: `d² = 0`, `n`
    /// copies of each projective, and no unit entry left to cancel.
    #[test]
    fn band_complexes_of_any_dimension(seed in any::<u64>(), n in 1usize..=4, lam in prop::sample::select(vec![1i64, -1, 2, 5])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let alg = random_gentle(&mut rng, 5);
        let b = bands_up_to(&alg, 6).choose(&mut rng).unwrap().with_scalar(exact(lam));
        let o = Oracle::new(&alg, Fp::new(1_000_003).unwrap());
        let c = o.embed_complex(&build_band_complex(&b, n)).unwrap();
        prop_assert!(o.d_squared_zero(&c));
        prop_assert_eq!(c.total_rank(), n * b.len());
        let (min, eliminated) = o.reduce_min(&c);
        prop_assert_eq!(eliminated, 0);
        prop_assert_eq!(min.total_rank(), c.total_rank());
    }
}
