//! Complexes of indecomposable projectives built from strings and bands,
//! plus text/TikZ renderings of unfolded diagrams.
//!
//! A map `P_a → P_b` is a combination of paths from `b` to `a`. Differential
//! entries are stored sparsely as `(row, col, path, coefficient)` with `col` a
//! slot in degree `i` and `row` a slot in degree `i + 1`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{GentleAlgebra, Path, Vertex};
use crate::scalars::SummandScalar;
use crate::walks::{Dir, HomotopyBand, HomotopyString, Walk};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Slot {
    pub vertex: Vertex,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub row: usize,
    pub col: usize,
    pub path: Path,
    pub coeff: SummandScalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ProjComplex {
    lo: i64,
    slots: Vec<Vec<Slot>>,
    diffs: Vec<Vec<Term>>,
}

type PendingTerm = ((i64, usize), (i64, usize), Path, SummandScalar);

/// Slots keyed by `(degree, index)` while a complex is being assembled.
#[derive(Default)]
pub struct Builder {
    slots: BTreeMap<i64, Vec<Slot>>,
    terms: Vec<PendingTerm>,
}

impl Builder {
    pub fn slot(&mut self, degree: i64, vertex: Vertex, label: String) -> (i64, usize) {
        let v = self.slots.entry(degree).or_default();
        v.push(Slot { vertex, label });
        (degree, v.len() - 1)
    }

    /// A differential component `from → to` (degrees must differ by one).
    pub fn arrow(
        &mut self,
        from: (i64, usize),
        to: (i64, usize),
        path: Path,
        coeff: SummandScalar,
    ) {
        assert_eq!(to.0, from.0 + 1, "differential raises degree by one");
        self.terms.push((from, to, path, coeff));
    }

    pub fn finish(self) -> ProjComplex {
        let Some((&lo, _)) = self.slots.iter().next() else {
            return ProjComplex::default();
        };
        let hi = *self.slots.keys().last().unwrap();
        let slots: Vec<Vec<Slot>> = (lo..=hi)
            .map(|d| self.slots.get(&d).cloned().unwrap_or_default())
            .collect();
        let mut diffs = vec![Vec::new(); slots.len().saturating_sub(1)];
        for (from, to, path, coeff) in self.terms {
            diffs[(from.0 - lo) as usize].push(Term {
                row: to.1,
                col: from.1,
                path,
                coeff,
            });
        }
        ProjComplex { lo, slots, diffs }
    }
}

impl ProjComplex {
    pub fn from_parts(lo: i64, slots: Vec<Vec<Slot>>, diffs: Vec<Vec<Term>>) -> Self {
        assert_eq!(diffs.len(), slots.len().saturating_sub(1));
        ProjComplex { lo, slots, diffs }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.slots.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.slots.iter().all(Vec::is_empty)
    }

    /// Slots in degree `d` (empty outside the range).
    pub fn slots(&self, d: i64) -> &[Slot] {
        usize::try_from(d - self.lo)
            .ok()
            .and_then(|i| self.slots.get(i))
            .map_or(&[], Vec::as_slice)
    }

    /// Differential terms from degree `d` to `d + 1`.
    pub fn diff(&self, d: i64) -> &[Term] {
        usize::try_from(d - self.lo)
            .ok()
            .and_then(|i| self.diffs.get(i))
            .map_or(&[], Vec::as_slice)
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi()
    }

    pub fn total_rank(&self) -> usize {
        self.slots.iter().map(Vec::len).sum()
    }

    /// Scalars appearing in the differential.
    pub fn scalars(&self) -> Vec<SummandScalar> {
        let mut out: Vec<SummandScalar> = Vec::new();
        for t in self.diffs.iter().flatten() {
            if !out.contains(&t.coeff) {
                out.push(t.coeff.clone());
            }
        }
        out
    }

    /// `Σ^s`: degrees move down by `s`; the differential flips sign for odd `s`.
    pub fn shift(&self, s: i64) -> ProjComplex {
        let mut out = self.clone();
        out.lo -= s;
        if s.rem_euclid(2) == 1 {
            for t in out.diffs.iter_mut().flatten() {
                t.coeff = t.coeff.neg();
            }
        }
        out
    }

    /// Degree-wise direct sum, slots of `self` first.
    pub fn direct_sum(&self, other: &ProjComplex) -> ProjComplex {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let mut b = Builder::default();
        let mut index = BTreeMap::new();
        for (tag, c) in [(0, self), (1, other)] {
            for d in c.degrees() {
                for (i, s) in c.slots(d).iter().enumerate() {
                    index.insert((tag, d, i), b.slot(d, s.vertex, s.label.clone()));
                }
            }
        }
        for (tag, c) in [(0, self), (1, other)] {
            for d in c.degrees() {
                for t in c.diff(d) {
                    b.arrow(
                        index[&(tag, d, t.col)],
                        index[&(tag, d + 1, t.row)],
                        t.path.clone(),
                        t.coeff.clone(),
                    );
                }
            }
        }
        b.finish()
    }

    /// Per degree, the sorted multiset of vertices.
    pub fn graded_dims(&self) -> BTreeMap<i64, Vec<Vertex>> {
        let mut out = BTreeMap::new();
        for d in self.degrees() {
            let mut v: Vec<Vertex> = self.slots(d).iter().map(|s| s.vertex).collect();
            if !v.is_empty() {
                v.sort();
                out.insert(d, v);
            }
        }
        out
    }

    pub fn to_json(&self, alg: &GentleAlgebra) -> serde_json::Value {
        let degrees: Vec<_> = self
            .degrees()
            .filter(|_| !self.is_zero())
            .map(|d| {
                serde_json::json!({
                    "degree": d,
                    "slots": self.slots(d).iter().map(|s| serde_json::json!({
                        "vertex": alg.vertex_name(s.vertex),
                        "label": s.label,
                    })).collect::<Vec<_>>(),
                    "differential": self.diff(d).iter().map(|t| serde_json::json!({
                        "row": t.row,
                        "col": t.col,
                        "path": alg.path_name(&t.path),
                        "scalar": t.coeff.to_string(),
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({ "degrees": degrees })
    }

    pub fn text(&self, alg: &GentleAlgebra) -> String {
        let mut out = String::new();
        for d in self.degrees().filter(|_| !self.is_zero()) {
            let slots: Vec<String> = self
                .slots(d)
                .iter()
                .map(|s| format!("{}:P{}", s.label, alg.vertex_name(s.vertex)))
                .collect();
            let _ = writeln!(out, "deg {d}: {}", slots.join(" "));
            for t in self.diff(d) {
                let _ = writeln!(
                    out,
                    "  {} -> {}  {}*{}",
                    self.slots(d)[t.col].label,
                    self.slots(d + 1)[t.row].label,
                    t.coeff,
                    alg.path_name(&t.path)
                );
            }
        }
        out
    }
}

pub fn build_string_complex(s: &HomotopyString) -> ProjComplex {
    let mut b = Builder::default();
    let degs = s.degrees();
    let nodes: Vec<_> = (0..=s.len())
        .map(|t| b.slot(degs[t], s.node_vertex(t), format!("n{t}")))
        .collect();
    for (t, l) in s.letters().iter().enumerate() {
        let (from, to) = match l.dir {
            Dir::Direct => (nodes[t], nodes[t + 1]),
            Dir::Inverse => (nodes[t + 1], nodes[t]),
        };
        b.arrow(from, to, l.path.clone(), SummandScalar::one());
    }
    b.finish()
}

/// `B_{σ,λ,n}`: `n` slots per node, the lower-triangular Jordan block
/// `J_n(λ)` on the scalar letter and identity blocks elsewhere.
pub fn build_band_complex(band: &HomotopyBand, n: usize) -> ProjComplex {
    assert!(n >= 1);
    let mut b = Builder::default();
    let degs = band.degrees();
    let len = band.len();
    let nodes: Vec<Vec<_>> = (0..len)
        .map(|t| {
            (0..n)
                .map(|k| {
                    let label = if n == 1 {
                        format!("n{t}")
                    } else {
                        format!("n{t}.{k}")
                    };
                    b.slot(degs[t], band.node_vertex(t as i64), label)
                })
                .collect()
        })
        .collect();
    let one = SummandScalar::one();
    for (t, l) in band.letters().iter().enumerate() {
        let (left, right) = (&nodes[t], &nodes[(t + 1) % len]);
        let (from, to) = match l.dir {
            Dir::Direct => (left, right),
            Dir::Inverse => (right, left),
        };
        for k in 0..n {
            let c = if t == band.slot() {
                band.scalar().clone()
            } else {
                one.clone()
            };
            b.arrow(from[k], to[k], l.path.clone(), c);
            if t == band.slot() && k + 1 < n {
                b.arrow(from[k], to[k + 1], l.path.clone(), one.clone());
            }
        }
    }
    b.finish()
}

pub fn build_walk_complex(w: &Walk, n: usize) -> ProjComplex {
    match w {
        Walk::String(s) => build_string_complex(s),
        Walk::Band(b) => build_band_complex(b, n),
    }
}

/// Nodes of the unfolded diagram, as `(vertex, degree)`, and its edges.
pub struct UnfoldedDiagram {
    pub nodes: Vec<(Vertex, i64)>,
    pub edges: Vec<(String, Dir, Option<SummandScalar>)>,
    pub cyclic: bool,
}

impl UnfoldedDiagram {
    pub fn of(w: &Walk, alg: &GentleAlgebra) -> Self {
        let degs = w.degree_profile();
        let nodes = (0..w.node_count())
            .map(|t| (w.node_vertex(t as i64), degs[t]))
            .collect();
        let slot = match w {
            Walk::Band(b) => Some((b.slot(), b.scalar().clone())),
            Walk::String(_) => None,
        };
        let edges = w
            .letters()
            .iter()
            .enumerate()
            .map(|(t, l)| {
                let deco = slot
                    .as_ref()
                    .filter(|(s, _)| *s == t)
                    .map(|(_, c)| c.clone());
                (alg.path_name(&l.path), l.dir, deco)
            })
            .collect();
        UnfoldedDiagram {
            nodes,
            edges,
            cyclic: w.is_band(),
        }
    }

    pub fn text(&self, alg: &GentleAlgebra) -> String {
        let node = |i: usize| {
            let (v, d) = self.nodes[i % self.nodes.len()];
            format!("P{}[{}]", alg.vertex_name(v), d)
        };
        let mut out = node(0);
        for (t, (name, dir, deco)) in self.edges.iter().enumerate() {
            let label = match deco {
                Some(c) => format!("{name}@{c}"),
                None => name.clone(),
            };
            match dir {
                Dir::Direct => {
                    let _ = write!(out, " --{label}--> ");
                }
                Dir::Inverse => {
                    let _ = write!(out, " <--{label}-- ");
                }
            }
            out.push_str(&node(t + 1));
        }
        if self.cyclic {
            out.push_str("  (cyclic)");
        }
        out
    }

    pub fn tikz(&self, alg: &GentleAlgebra) -> String {
        let count = self.edges.len() + 1;
        let mut out = String::from(
            "\\begin{tikzpicture}\n\\matrix (m) [matrix of math nodes, row sep=2em, column sep=2.5em]\n{\n",
        );
        let cells: Vec<String> = (0..count)
            .map(|i| {
                let (v, d) = self.nodes[i % self.nodes.len()];
                format!("P_{{{}}}^{{{}}}", alg.vertex_name(v), d)
            })
            .collect();
        let _ = writeln!(out, "  {} \\\\", cells.join(" & "));
        out.push_str("};\n");
        for (t, (name, dir, deco)) in self.edges.iter().enumerate() {
            let label = match deco {
                Some(c) => format!("{c}\\,{name}"),
                None => name.clone(),
            };
            let (a, b) = match dir {
                Dir::Direct => (t + 1, t + 2),
                Dir::Inverse => (t + 2, t + 1),
            };
            let _ = writeln!(
                out,
                "\\draw[->] (m-1-{a}) -- node[above] {{${label}$}} (m-1-{b});"
            );
        }
        if self.cyclic {
            let _ = writeln!(out, "% columns 1 and {count} are identified");
        }
        out.push_str("\\end{tikzpicture}\n");
        out
    }
}
