#![allow(dead_code)]

use gentle_cones::algebra::GentleAlgebra;
use gentle_cones::cones::{verify, ConeDecomposition, Summand};
use gentle_cones::field::Fp;
use gentle_cones::morphisms::{Kind, Morphism, Pair};
use gentle_cones::oracle::Oracle;
use gentle_cones::scalars::{CycloScalar, SummandScalar};
use gentle_cones::walks::{parse_band, parse_walk, Walk};

pub fn walk(alg: &GentleAlgebra, w: &str) -> Walk {
    parse_walk(w, alg).unwrap()
}

/// Maps of `kind` from `x` to `y`, longest overlap first.
pub fn maps(alg: &GentleAlgebra, x: &Walk, y: &Walk, kind: Kind) -> Vec<Morphism> {
    let o = Oracle::new(alg, Fp::new(1_000_003).unwrap());
    let pair = Pair::new(&o, x, y).unwrap();
    let mut ms: Vec<Morphism> = pair
        .enumerate(&[kind])
        .into_iter()
        .map(|(m, _)| m)
        .collect();
    ms.sort_by_key(|m| std::cmp::Reverse(m.descriptor.overlap().map_or(0, |o| o.len)));
    ms
}

/// `(word, scalar, dim)` of every band summand, canonical and sorted.
pub fn bands(alg: &GentleAlgebra, d: &ConeDecomposition) -> Vec<(String, String, usize)> {
    let mut out: Vec<_> = d
        .canonical(alg)
        .iter()
        .map(|s| match s {
            Summand::Band { band, dim } => (band.word(alg), band.scalar().to_string(), *dim),
            other => panic!("unexpected string summand {}", other.text(alg)),
        })
        .collect();
    out.sort();
    out
}

pub fn expected(
    alg: &GentleAlgebra,
    words: &[(&str, SummandScalar, usize)],
) -> Vec<(String, String, usize)> {
    let mut out: Vec<_> = words
        .iter()
        .map(|(w, s, dim)| {
            let b = parse_band(w, alg)
                .unwrap()
                .with_scalar(s.clone())
                .canonical(alg);
            (b.word(alg), b.scalar().to_string(), *dim)
        })
        .collect();
    out.sort();
    out
}

pub fn assert_iso(alg: &GentleAlgebra, m: &Morphism, d: &ConeDecomposition) {
    let rep = verify(alg, m, d, 16, 1).unwrap();
    assert!(
        rep.graded_dims_match && rep.iso,
        "{} not verified: {rep:?}",
        d.text(alg)
    );
}

pub fn exact(n: i64) -> SummandScalar {
    SummandScalar::exact(CycloScalar::from_int(n))
}
