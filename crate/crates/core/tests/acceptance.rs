//! The nine acceptance criteria, one PASS/FAIL line each.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{bands, exact, expected, maps, walk};
use gentle_cones::algebra::{GentleAlgebra, Path};
use gentle_cones::complexes::{build_band_complex, Slot};
use gentle_cones::cones::{
    compute_cone, split_band_power, verification_field, verify, ConeDecomposition, Rule,
};
use gentle_cones::field::{Field, Fp};
use gentle_cones::fixtures::{final_algebra, kronecker};
use gentle_cones::gen::{bands_up_to, random_gentle};
use gentle_cones::morphisms::{Descriptor, Kind, Morphism, Pair};
use gentle_cones::oracle::{FComplex, Morph, Oracle};
use gentle_cones::scalars::{CycloScalar, SummandScalar};
use gentle_cones::walks::{HomotopyBand, Walk};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn iso_report(alg: &GentleAlgebra, m: &Morphism, d: &ConeDecomposition) -> Result<(), String> {
    let rep = verify(alg, m, d, 16, 1).map_err(|e| e.to_string())?;
    check(rep.graded_dims_match && rep.iso, || {
        format!("{} not verified: {rep:?}", d.text(alg))
    })
}

fn within(t: Instant, limit: Duration) -> Result<(), String> {
    check(t.elapsed() < limit, || {
        format!("took {:?}, limit {limit:?}", t.elapsed())
    })
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let k = kronecker();
    let sigma = walk(&k, "d ~c ~a b (d ~c)^2 ~a b @ 1");
    let tau = walk(&k, "(d ~c)^2 ~a b @ 1");
    let m = maps(&k, &tau, &sigma, Kind::Graph).remove(0);
    let d = compute_cone(&k, &m).map_err(|e| e.to_string())?;
    check(
        bands(&k, &d) == expected(&k, &[("d ~c ~a b", exact(-1), 1)]),
        || d.text(&k),
    )?;
    iso_report(&k, &m, &d)?;
    within(t, Duration::from_secs(1))?;
    Ok(d.text(&k))
}

fn criterion_2() -> Outcome {
    let t = Instant::now();
    let k = kronecker();
    let sigma = walk(&k, "(d ~c)^7 ~a b @ -1");
    let tau = walk(&k, "(d ~c)^4 ~a b @ 1");
    let m = maps(&k, &sigma, &tau, Kind::Graph).remove(0);
    let d = compute_cone(&k, &m).map_err(|e| e.to_string())?;
    let w = |i| SummandScalar::exact(CycloScalar::unity_root(3).pow(i));
    check(
        bands(&k, &d)
            == expected(
                &k,
                &[("d ~c", w(0), 1), ("d ~c", w(1), 1), ("d ~c", w(2), 1)],
            ),
        || d.text(&k),
    )?;
    let p = verification_field(&m, &d)
        .map_err(|e| e.to_string())?
        .modulus();
    check((p - 1) % 3 == 0, || format!("verification prime {p}"))?;
    iso_report(&k, &m, &d)?;
    within(t, Duration::from_secs(5))?;
    Ok(format!("{} over F_{p}", d.text(&k)))
}

fn criterion_3() -> Outcome {
    let t = Instant::now();
    let f = final_algebra();
    let sigma = walk(&f, "~a b*c ~a b ~e d*b*c @ 36");
    let tau = walk(&f, "e ~d*b @ 4 deg=-2");
    let b = f.parse_path("b").unwrap();
    let m = maps(&f, &sigma, &tau, Kind::Single)
        .into_iter()
        .find(|m| matches!(&m.descriptor, Descriptor::Single { component } if component.path == b))
        .ok_or("no single map with component b")?;
    let d = compute_cone(&f, &m).map_err(|e| e.to_string())?;
    let i = CycloScalar::unity_root(4);
    let three_i = |e| SummandScalar::exact(CycloScalar::from_int(3).mul(&i.pow(e)));
    let want = expected(
        &f,
        &[
            ("~a b ~e d*b*c", three_i(1), 1),
            ("~a b ~e d*b*c", three_i(3), 1),
        ],
    );
    check(bands(&f, &d) == want, || d.text(&f))?;
    let p = verification_field(&m, &d)
        .map_err(|e| e.to_string())?
        .modulus();
    check((p - 1) % 4 == 0, || format!("verification prime {p}"))?;
    iso_report(&f, &m, &d)?;
    within(t, Duration::from_secs(5))?;
    Ok(format!("{} over F_{p}", d.text(&f)))
}

fn criterion_4() -> Outcome {
    let t = Instant::now();
    let k = kronecker();
    let sigma = walk(&k, "d ~c ~a b (d ~c)^2 ~a b @ 1");
    let m = (-3..=3)
        .find_map(|deg| {
            let tau = walk(&k, &format!("(d ~c)^2 ~a b @ 1 deg={deg}"));
            maps(&k, &sigma, &tau, Kind::Quasi)
                .into_iter()
                .find(|m| m.descriptor.overlap().unwrap().len == 12)
        })
        .ok_or("no quasi-graph map with a 12-letter overlap")?;
    let d = compute_cone(&k, &m).map_err(|e| e.to_string())?;
    let want = expected(
        &k,
        &[("d ~c ~a b (d ~c)^2 ~a b (d ~c)^2 ~a b", exact(-1), 1)],
    );
    check(bands(&k, &d) == want && d.provenance.power == 1, || {
        d.text(&k)
    })?;
    iso_report(&k, &m, &d)?;
    within(t, Duration::from_secs(5))?;
    Ok(d.text(&k))
}

/// Primitive bands of length at most 8 from the bundled and random algebras.
fn band_pool(rng: &mut ChaCha8Rng) -> Vec<(GentleAlgebra, HomotopyBand)> {
    let mut algs = vec![kronecker(), final_algebra()];
    algs.extend((0..4).map(|_| random_gentle(rng, 5)));
    let mut pool = Vec::new();
    for a in algs {
        for b in bands_up_to(&a, 8) {
            pool.push((a.clone(), b));
        }
    }
    pool
}

fn criterion_5() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let pool = band_pool(&mut rng);
    let picks: Vec<_> = pool.choose_multiple(&mut rng, 50).cloned().collect();
    check(picks.len() == 50, || {
        format!("only {} bands available", picks.len())
    })?;
    let jobs: Vec<_> = picks
        .iter()
        .flat_map(|p| {
            [1usize, 2, 3]
                .into_iter()
                .flat_map(move |n| [1i64, -1, 4, 9].map(move |l| (p, n, l)))
        })
        .collect();
    let failures: Vec<String> = jobs
        .par_iter()
        .filter_map(|((alg, theta), n, lam)| {
            let letters: Vec<_> = theta
                .letters()
                .iter()
                .cycle()
                .take(theta.len() * n)
                .cloned()
                .collect();
            let run = || -> Result<bool, String> {
                let power =
                    HomotopyBand::new(alg, letters, exact(*lam), 0).map_err(|e| e.to_string())?;
                let parts = split_band_power(alg, &power).map_err(|e| e.to_string())?;
                if parts.len() != *n {
                    return Ok(false);
                }
                let mut scalars: Vec<SummandScalar> =
                    parts.iter().filter_map(|s| s.scalar().cloned()).collect();
                scalars.push(exact(*lam));
                let field = Fp::for_requirements(&scalars).map_err(|e| e.to_string())?;
                let o = Oracle::new(alg, field);
                let sum = parts.iter().fold(
                    Default::default(),
                    |acc: gentle_cones::complexes::ProjComplex, s| acc.direct_sum(&s.complex()),
                );
                let x = o
                    .embed_complex(&build_band_complex(&power, 1))
                    .map_err(|e| e.to_string())?;
                let y = o.embed_complex(&sum).map_err(|e| e.to_string())?;
                let (x, _) = o.reduce_min(&x);
                let (y, _) = o.reduce_min(&y);
                let mut r = ChaCha8Rng::seed_from_u64(1);
                Ok(o.iso_probe(&x, &y, 16, &mut r).is_some())
            };
            match run() {
                Ok(true) => None,
                Ok(false) => Some(format!("{} ^{n} @ {lam}", theta.word(alg))),
                Err(e) => Some(format!("{} ^{n} @ {lam}: {e}", theta.word(alg))),
            }
        })
        .collect();
    check(failures.is_empty(), || failures.join("; "))?;
    within(t, Duration::from_secs(60))?;
    Ok(format!("{} splittings verified", jobs.len()))
}

fn radical_combination<R: Rng>(rng: &mut R, o: &Oracle<Fp>, from: usize, to: usize) -> Morph<u64> {
    let mut m: Morph<u64> = Vec::new();
    for p in o
        .hom_basis(from, to)
        .into_iter()
        .filter(|p| !p.is_trivial())
    {
        if rng.gen_bool(0.6) {
            m.push((p, 1 + rng.gen_range(0..o.field.modulus() - 1)));
        }
    }
    m.sort_by(|a, b| a.0.cmp(&b.0));
    m
}

/// `Σ` of terms with like paths collected, zeros dropped, sorted by path.
fn normalize(f: &Fp, terms: Vec<(Path, u64)>) -> Morph<u64> {
    let mut acc: BTreeMap<Path, u64> = BTreeMap::new();
    for (p, c) in terms {
        let e = acc.entry(p).or_insert(0);
        *e = f.add(e, &c);
    }
    acc.into_iter().filter(|(_, c)| *c != 0).collect()
}

fn planted_instance(rng: &mut ChaCha8Rng, o: &Oracle<Fp>) -> Result<(), String> {
    let (alg, f) = (o.alg, &o.field);
    let nv = alg.vertex_count();
    let v = rng.gen_range(0..nv);
    let mut cols: Vec<usize> = (0..rng.gen_range(1..=3))
        .map(|_| rng.gen_range(0..nv))
        .collect();
    let mut rows: Vec<usize> = (0..rng.gen_range(1..=3))
        .map(|_| rng.gen_range(0..nv))
        .collect();
    let (pc, pr) = (rng.gen_range(0..=cols.len()), rng.gen_range(0..=rows.len()));
    cols.insert(pc, v);
    rows.insert(pr, v);
    let lambda = 1 + rng.gen_range(0..f.modulus() - 1);
    let mat: Vec<Vec<Morph<u64>>> = rows
        .iter()
        .enumerate()
        .map(|(r, &rv)| {
            cols.iter()
                .enumerate()
                .map(|(c, &cv)| {
                    if (r, c) == (pr, pc) {
                        vec![(Path::trivial(v), lambda)]
                    } else {
                        radical_combination(rng, o, cv, rv)
                    }
                })
                .collect()
        })
        .collect();
    let slot = |v: usize| Slot {
        vertex: v,
        label: String::new(),
    };
    let cx = FComplex {
        lo: 0,
        slots: vec![
            cols.iter().map(|&v| slot(v)).collect(),
            rows.iter().map(|&v| slot(v)).collect(),
        ],
        diffs: vec![mat.clone()],
    };
    let (min, count) = o.reduce_min(&cx);
    check(count == 1, || format!("{count} eliminations"))?;
    check(min.euler() == cx.euler(), || {
        "Euler characteristic changed".into()
    })?;
    let units = min
        .diffs
        .iter()
        .flatten()
        .flatten()
        .flatten()
        .any(|(p, _)| p.is_trivial());
    check(!units, || "unit entry left".into())?;
    // b₁ − λ⁻¹ b₂ b₃ with b₃ = x_c → y*, b₂ = x* → y_r.
    let li = f.inv(&lambda).unwrap();
    let keep_r: Vec<usize> = (0..rows.len()).filter(|&r| r != pr).collect();
    let keep_c: Vec<usize> = (0..cols.len()).filter(|&c| c != pc).collect();
    for (i, &r) in keep_r.iter().enumerate() {
        for (j, &c) in keep_c.iter().enumerate() {
            let mut terms = mat[r][c].clone();
            for (p3, a) in &mat[pr][c] {
                for (p2, b) in &mat[r][pc] {
                    if let Some(q) = alg.compose(p3, p2).map_err(|e| e.to_string())? {
                        terms.push((q, f.neg(&f.mul(&li, &f.mul(a, b)))));
                    }
                }
            }
            let want = normalize(f, terms);
            let got = min
                .diffs
                .first()
                .map(|d| normalize(f, d[i][j].clone()))
                .unwrap_or_default();
            check(got == want, || {
                format!("entry ({r},{c}): {got:?} vs {want:?}")
            })?;
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut algs = vec![kronecker(), final_algebra()];
    algs.extend((0..3).map(|_| random_gentle(&mut rng, 6)));
    for n in 0..100 {
        let alg = &algs[n % algs.len()];
        let o = Oracle::new(alg, Fp::new(1_000_003).unwrap());
        planted_instance(&mut rng, &o).map_err(|e| format!("instance {n}: {e}"))?;
    }
    Ok("100 planted blocks".into())
}

fn criterion_7() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut jobs = Vec::new();
    for _ in 0..5 {
        let alg = random_gentle(&mut rng, 6);
        let bands = bands_up_to(&alg, 8);
        for _ in 0..40 {
            let s = bands.choose(&mut rng).unwrap().clone();
            let t = if rng.gen_bool(0.2) {
                s.clone()
            } else {
                bands.choose(&mut rng).unwrap().clone()
            };
            let lam = [1i64, -1, 2, 3][rng.gen_range(0..4)];
            let mu = if rng.gen_bool(0.2) {
                lam
            } else {
                [1i64, -1, 5, 7][rng.gen_range(0..4)]
            };
            for shift in -2..=2 {
                let sw = Walk::Band(s.with_scalar(exact(lam)));
                let tw = Walk::Band(t.with_scalar(exact(mu)).with_anchor(t.anchor() + shift));
                jobs.push((alg.clone(), sw, tw));
            }
        }
    }
    let results: Vec<(BTreeMap<String, usize>, Vec<String>)> = jobs
        .par_iter()
        .map(|(alg, s, t)| {
            let o = Oracle::new(alg, Fp::new(1_000_003).unwrap());
            let mut counts = BTreeMap::new();
            let mut fails = Vec::new();
            let pair = match Pair::new(&o, s, t) {
                Ok(p) => p,
                Err(e) => return (counts, vec![e.to_string()]),
            };
            for (m, _) in pair.enumerate(&Kind::ALL) {
                *counts.entry(m.kind().to_string()).or_insert(0) += 1;
                let ok = compute_cone(alg, &m)
                    .map_err(|e| e.to_string())
                    .and_then(|d| {
                        if d.is_oracle_only() {
                            Err("no decomposition".into())
                        } else {
                            iso_report(alg, &m, &d)
                        }
                    });
                if let Err(e) = ok {
                    fails.push(format!(
                        "{} [{} → {}]: {e}",
                        m.describe(alg),
                        s.word(alg),
                        t.word(alg)
                    ));
                }
            }
            (counts, fails)
        })
        .collect();
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    let mut fails = Vec::new();
    for (c, f) in results {
        for (k, n) in c {
            *counts.entry(k).or_insert(0) += n;
        }
        fails.extend(f);
    }
    check(fails.is_empty(), || {
        format!("{} failures, first: {}", fails.len(), fails[0])
    })?;
    within(t, Duration::from_secs(600))?;
    Ok(format!("{counts:?} all verified"))
}

fn criterion_8() -> Outcome {
    let (lam, mu) = (3i64, 5i64);
    let mut seen = [0usize; 2];
    for alg in [kronecker(), final_algebra()] {
        let bands = bands_up_to(&alg, 8);
        for s in &bands {
            for t in &bands {
                for shift in -2..=2 {
                    let sw = Walk::Band(s.with_scalar(exact(lam)));
                    let tw = Walk::Band(t.with_scalar(exact(mu)).with_anchor(t.anchor() + shift));
                    for m in maps(&alg, &sw, &tw, Kind::Graph) {
                        let d = compute_cone(&alg, &m).map_err(|e| e.to_string())?;
                        if d.provenance.rule != Rule::GraphBandBand || d.provenance.case != Some(4)
                        {
                            continue;
                        }
                        let o = m.descriptor.overlap().unwrap();
                        let parity = o.len % 2;
                        // Which power of μ enters depends on the reading of τ (a trivial
                        // overlap may be read either way); the sign depends on |ρ| only.
                        let sign = if parity == 0 { 1 } else { -1 };
                        let fed = d.provenance.fed_scalar.clone().ok_or("no scalar fed")?;
                        let ok = [1i64, -1].iter().any(|&e| {
                            let want = CycloScalar::from_int(sign * lam)
                                .mul(&CycloScalar::from_int(mu).pow(e));
                            fed == SummandScalar::exact(want)
                        });
                        check(ok, || {
                            format!("{}: fed {fed}, sign should be {sign}", m.describe(&alg))
                        })?;
                        if seen[parity] < 3 {
                            iso_report(&alg, &m, &d)?;
                        }
                        seen[parity] += 1;
                    }
                }
            }
        }
    }
    check(seen[0] > 0 && seen[1] > 0, || {
        format!("parities seen {seen:?}")
    })?;
    Ok(format!(
        "{} even and {} odd overlaps, signs +/−",
        seen[0], seen[1]
    ))
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut n = 0;
    for (alg, b) in band_pool(&mut rng).choose_multiple(&mut rng, 12) {
        for lam in [1i64, -1, 3] {
            let s = Walk::Band(b.with_scalar(exact(lam)));
            let graph = maps(alg, &s, &s, Kind::Graph)
                .into_iter()
                .find(|m| m.descriptor.overlap().unwrap().infinite)
                .ok_or("no identity graph map")?;
            let d = compute_cone(alg, &graph).map_err(|e| e.to_string())?;
            check(d.summands.is_empty(), || d.text(alg))?;
            iso_report(alg, &graph, &d)?;
            let shifted = Walk::Band(b.with_scalar(exact(lam)).with_anchor(b.anchor() - 1));
            let quasi = maps(alg, &s, &shifted, Kind::Quasi)
                .into_iter()
                .find(|m| m.descriptor.overlap().unwrap().infinite)
                .ok_or("no infinite quasi-graph map")?;
            let d = compute_cone(alg, &quasi).map_err(|e| e.to_string())?;
            check(d.provenance.rule == Rule::AuslanderReiten, || {
                d.provenance.to_string()
            })?;
            check(
                bands(alg, &d) == expected(alg, &[(&b.word(alg), exact(lam), 2)]),
                || d.text(alg),
            )?;
            iso_report(alg, &quasi, &d)?;
            n += 1;
        }
    }
    Ok(format!("{n} bands: zero cone and AR middle term"))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("golden: indecomposable band cone", criterion_1),
        ("golden: three summands", criterion_2),
        ("golden: single map", criterion_3),
        ("golden: quasi-graph k=1", criterion_4),
        ("property: power splitting", criterion_5),
        ("property: unit elimination", criterion_6),
        ("property: master cone check", criterion_7),
        ("property: parity sign rule", criterion_8),
        ("property: infinite overlap", criterion_9),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or(p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        match outcome {
            Ok(detail) => println!(
                "criterion {}: PASS  {name} ({:.2?}) {detail}",
                i + 1,
                t.elapsed()
            ),
            Err(e) => {
                println!(
                    "criterion {}: FAIL  {name} ({:.2?}) {e}",
                    i + 1,
                    t.elapsed()
                );
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
