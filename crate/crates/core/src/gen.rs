//! Random gentle algebras and exhaustive band lists, for property tests,
//! examples and the batch front end.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::GentleAlgebra;
use crate::scalars::SummandScalar;
use crate::walks::{junction_problem, HomotopyBand, HomotopyString, Letter};

/// A random connected-ish gentle algebra without loops on `2..=max_vertices`
/// vertices. Relations are forced by the gentle conditions wherever two
/// arrows meet; free choices are made at random.
pub fn random_gentle<R: Rng>(rng: &mut R, max_vertices: usize) -> GentleAlgebra {
    loop {
        let n = rng.gen_range(2..=max_vertices.max(2));
        let tries = rng.gen_range(n..=2 * n + 1);
        let mut arrows: Vec<(usize, usize)> = Vec::new();
        for _ in 0..tries {
            let (s, t) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let out = arrows.iter().filter(|a| a.0 == s).count();
            let inc = arrows.iter().filter(|a| a.1 == t).count();
            if s != t && out < 2 && inc < 2 {
                arrows.push((s, t));
            }
        }
        let mut relations = Vec::new();
        for v in 0..n {
            let ins: Vec<usize> = (0..arrows.len()).filter(|&k| arrows[k].1 == v).collect();
            let mut outs: Vec<usize> = (0..arrows.len()).filter(|&k| arrows[k].0 == v).collect();
            outs.shuffle(rng);
            match (ins.len(), outs.len()) {
                (0, _) | (_, 0) => {}
                (1, 1) => {
                    if rng.gen_bool(0.4) {
                        relations.push((outs[0], ins[0]));
                    }
                }
                (1, 2) => relations.push((outs[1], ins[0])),
                (2, 1) => relations.push((outs[0], ins[rng.gen_range(0..2)])),
                _ => {
                    relations.push((outs[0], ins[1]));
                    relations.push((outs[1], ins[0]));
                }
            }
        }
        let name = |k: usize| ((b'a' + k as u8) as char).to_string();
        let alg = GentleAlgebra::new(
            (1..=n).map(|v| v.to_string()),
            arrows
                .iter()
                .enumerate()
                .map(|(k, &(s, t))| (name(k), (s + 1).to_string(), (t + 1).to_string())),
            relations.iter().map(|&(x, y)| (name(x), name(y))),
        );
        if let Ok(alg) = alg {
            if !bands_up_to(&alg, 6).is_empty() {
                return alg;
            }
        }
    }
}

/// Every homotopy letter: each nonzero nontrivial path, direct and inverse.
pub fn all_letters(alg: &GentleAlgebra) -> Vec<Letter> {
    let mut out = Vec::new();
    for v in 0..alg.vertex_count() {
        for p in alg.projective_basis(v) {
            if !p.is_trivial() {
                let l = Letter::direct(p);
                out.push(l.inverse());
                out.push(l);
            }
        }
    }
    out
}

/// All primitive bands of length at most `max_len`, one reading each, with
/// scalar 1 and node 0 in degree 0.
pub fn bands_up_to(alg: &GentleAlgebra, max_len: usize) -> Vec<HomotopyBand> {
    let letters = all_letters(alg);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..letters.len()).map(|k| vec![k]).collect();
    while let Some(word) = stack.pop() {
        let last = &letters[*word.last().unwrap()];
        let first = &letters[word[0]];
        if word.len() % 2 == 0 && junction_problem(alg, last, first).is_none() {
            let ls: Vec<Letter> = word.iter().map(|&k| letters[k].clone()).collect();
            if let Ok(b) = HomotopyBand::new(alg, ls, SummandScalar::one(), 0) {
                if b.primitive_root().1 == 1 {
                    let key = b.canonical(alg).word(alg);
                    if seen.insert(key) {
                        out.push(b.canonical(alg));
                    }
                }
            }
        }
        if word.len() < max_len {
            for (k, l) in letters.iter().enumerate() {
                if junction_problem(alg, last, l).is_none() {
                    let mut w = word.clone();
                    w.push(k);
                    stack.push(w);
                }
            }
        }
    }
    out.sort_by_key(|b| (b.len(), b.word(alg)));
    out
}

/// All homotopy strings with at most `max_len` letters, trivial ones
/// included, one reading each, with node 0 in degree 0.
pub fn strings_up_to(alg: &GentleAlgebra, max_len: usize) -> Vec<HomotopyString> {
    let letters = all_letters(alg);
    let mut seen = BTreeSet::new();
    let mut out: Vec<HomotopyString> = (0..alg.vertex_count())
        .map(|v| HomotopyString::trivial(v, 0))
        .collect();
    let mut stack: Vec<Vec<usize>> = (0..letters.len()).map(|k| vec![k]).collect();
    while let Some(word) = stack.pop() {
        let ls: Vec<Letter> = word.iter().map(|&k| letters[k].clone()).collect();
        if let Ok(s) = HomotopyString::new(alg, ls, 0) {
            let fwd = s.word(alg);
            let back = s.inverse().word(alg);
            if seen.insert(fwd.clone().min(back.clone())) {
                out.push(s);
            }
        }
        if word.len() < max_len {
            let last = &letters[*word.last().unwrap()];
            for (k, l) in letters.iter().enumerate() {
                if junction_problem(alg, last, l).is_none() {
                    let mut w = word.clone();
                    w.push(k);
                    stack.push(w);
                }
            }
        }
    }
    out.sort_by_key(|s| (s.len(), s.word(alg)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::kronecker;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn kronecker_bands() {
        let k = kronecker();
        let words: Vec<String> = bands_up_to(&k, 4).iter().map(|b| b.word(&k)).collect();
        assert!(words.iter().any(|w| w.split(' ').count() == 4), "{words:?}");
        for b in bands_up_to(&k, 6) {
            assert_eq!(b.primitive_root().1, 1);
        }
    }

    #[test]
    fn random_algebras_are_gentle_with_bands() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let a = random_gentle(&mut rng, 6);
            assert!(a.vertex_count() <= 6);
            assert!(!bands_up_to(&a, 6).is_empty());
        }
    }
}
