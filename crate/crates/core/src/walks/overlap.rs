//! Maximal common subwords of two (possibly periodic) walks.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{Letter, Walk};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MapKind {
    Graph,
    Quasi,
}

impl MapKind {
    /// `deg_τ − deg_σ` along the overlap.
    pub fn degree_offset(self) -> i64 {
        match self {
            MapKind::Graph => 0,
            MapKind::Quasi => -1,
        }
    }
}

/// A maximal common subword `ρ` of `σ` and `τ*`, where `τ*` is `τ` or its
/// inverse. Positions are node indices; for bands they are taken modulo the
/// period and `ρ` may wrap several times.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Overlap {
    pub kind: MapKind,
    pub sigma_start: i64,
    pub tau_start: i64,
    pub tau_reversed: bool,
    pub len: usize,
    pub infinite: bool,
}

impl Overlap {
    pub fn oriented_tau(&self, tau: &Walk) -> Walk {
        if self.tau_reversed {
            tau.inverse()
        } else {
            tau.clone()
        }
    }

    pub fn rho(&self, sigma: &Walk) -> Vec<Letter> {
        (0..self.len as i64)
            .map(|t| sigma.letter(self.sigma_start + t).unwrap().clone())
            .collect()
    }

    /// For a band side of period `m`: `ℓ = ⌊r/m⌋` full turns inside `ρ`.
    pub fn turns(&self, period: usize) -> usize {
        self.len / period
    }

    /// Letters left of and right of `ρ` in a string side starting at `start`.
    pub fn string_residues(w: &Walk, start: i64, len: usize) -> (Vec<Letter>, Vec<Letter>) {
        let letters = w.letters();
        let s = start as usize;
        (letters[..s].to_vec(), letters[s + len..].to_vec())
    }
}

/// All maximal overlaps of the requested kind between `σ` and both
/// orientations of `τ`. Infinite overlaps (two bands agreeing forever) are
/// reported once per alignment class.
pub fn find_overlaps(sigma: &Walk, tau: &Walk, kind: MapKind) -> Vec<Overlap> {
    let mut out = Vec::new();
    let orientations: &[bool] = if tau.is_empty() {
        &[false]
    } else {
        &[false, true]
    };
    for &rev in orientations {
        let t = if rev { tau.inverse() } else { tau.clone() };
        let (m, n) = (sigma.len(), t.len());
        let both_bands = sigma.is_band() && t.is_band();
        let bound = if both_bands {
            m.lcm(&n) + m.max(n)
        } else {
            m + n + 1
        };
        let mut infinite_classes = Vec::new();
        for i in 0..sigma.node_count() as i64 {
            for j in 0..t.node_count() as i64 {
                if sigma.node_vertex(i) != t.node_vertex(j)
                    || t.node_degree(j) - sigma.node_degree(i) != kind.degree_offset()
                {
                    continue;
                }
                let mut r = 0usize;
                while r < bound {
                    match (sigma.letter(i + r as i64), t.letter(j + r as i64)) {
                        (Some(x), Some(y)) if x == y => r += 1,
                        _ => break,
                    }
                }
                if r >= bound {
                    let class = (i - j).rem_euclid(m.gcd(&n) as i64);
                    if !infinite_classes.contains(&class) {
                        infinite_classes.push(class);
                        out.push(Overlap {
                            kind,
                            sigma_start: i,
                            tau_start: j,
                            tau_reversed: rev,
                            len: m.lcm(&n),
                            infinite: true,
                        });
                    }
                    continue;
                }
                let left_extends = match (sigma.letter(i - 1), t.letter(j - 1)) {
                    (Some(x), Some(y)) => x == y,
                    _ => false,
                };
                if !left_extends {
                    out.push(Overlap {
                        kind,
                        sigma_start: i,
                        tau_start: j,
                        tau_reversed: rev,
                        len: r,
                        infinite: false,
                    });
                }
            }
        }
    }
    // A trivial overlap whose node pair lies on a longer overlap read against
    // the other orientation of τ is part of that overlap, not maximal.
    let pair = |i: i64, j: i64, rev: bool| {
        let norm = |w: &Walk, k: i64| {
            if w.is_band() {
                k.rem_euclid(w.len() as i64)
            } else {
                k
            }
        };
        let j = if !rev {
            j
        } else if tau.is_band() {
            -j
        } else {
            tau.len() as i64 - j
        };
        (norm(sigma, i), norm(tau, j))
    };
    let covered: Vec<(i64, i64)> = out
        .iter()
        .filter(|o| o.len > 0)
        .flat_map(|o| {
            (0..=o.len as i64)
                .map(move |t| pair(o.sigma_start + t, o.tau_start + t, o.tau_reversed))
        })
        .collect();
    out.retain(|o| {
        o.len > 0 || !covered.contains(&pair(o.sigma_start, o.tau_start, o.tau_reversed))
    });
    out
}

/// Whether `ρ` is an unbounded overlap, i.e. the bands agree up to rotation
/// and inversion.
pub fn is_infinite_overlap(sigma: &Walk, tau: &Walk, rho: &Overlap) -> bool {
    rho.infinite && sigma.is_band() && tau.is_band() && sigma.len() == tau.len()
}
