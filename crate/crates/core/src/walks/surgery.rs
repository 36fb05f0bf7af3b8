//! Word surgery: glue pieces of graded walks, cancel, and re-cut into letters.
//!
//! Each node of a piece remembers the degree it had in the complex it came
//! from. Gluing two nodes of different degrees is only legal if the glued node
//! ends up inside a letter; this is how junction letters merge.

use crate::algebra::{GentleAlgebra, Vertex};
use crate::error::{Error, Result};
use crate::scalars::SummandScalar;

use super::{
    cancels, forced_split, step_left, step_right, HomotopyBand, HomotopyString, Letter, Step, Walk,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeDeg {
    Known(i64),
    /// Known degree, but produced by cancellation: free to sit inside a letter.
    Glued(i64),
    Interior,
    Conflict,
}

impl NodeDeg {
    fn degree(self) -> Option<i64> {
        match self {
            NodeDeg::Known(d) | NodeDeg::Glued(d) => Some(d),
            _ => None,
        }
    }

    fn merge(self, other: NodeDeg) -> NodeDeg {
        use NodeDeg::*;
        match (self, other) {
            (Conflict, _) | (_, Conflict) => Conflict,
            (Interior, x) | (x, Interior) => x,
            (Known(a), Known(b)) | (Known(a), Glued(b)) | (Glued(b), Known(a)) if a == b => {
                Known(a)
            }
            (Glued(a), Glued(b)) if a == b => Glued(a),
            _ => Conflict,
        }
    }

    /// Merge of the two ends of a cancelled pair of steps.
    fn cancel(self, other: NodeDeg) -> NodeDeg {
        match self.merge(other) {
            NodeDeg::Known(d) => NodeDeg::Glued(d),
            x => x,
        }
    }
}

/// A graded step sequence; `nodes.len() == steps.len() + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    start: Vertex,
    steps: Vec<Step>,
    nodes: Vec<NodeDeg>,
}

impl Piece {
    pub fn point(v: Vertex, degree: i64) -> Self {
        Piece {
            start: v,
            steps: Vec::new(),
            nodes: vec![NodeDeg::Known(degree)],
        }
    }

    /// Letters with known degrees at their `letters.len() + 1` boundary nodes.
    pub fn from_letters(start: Vertex, letters: &[Letter], left_degree: i64) -> Self {
        let mut p = Piece::point(start, left_degree);
        let mut deg = left_degree;
        for l in letters {
            let steps = l.steps();
            for _ in 1..steps.len() {
                p.nodes.push(NodeDeg::Interior);
            }
            deg += l.delta();
            p.nodes.push(NodeDeg::Known(deg));
            p.steps.extend(steps);
        }
        p
    }

    /// `len` letters of `w` starting at node `from` (wrapping for bands),
    /// with every degree moved by `shift`.
    pub fn from_walk(w: &Walk, from: i64, len: usize, shift: i64) -> Self {
        let letters: Vec<Letter> = (0..len as i64)
            .map(|t| w.letter(from + t).expect("range inside walk").clone())
            .collect();
        Piece::from_letters(w.node_vertex(from), &letters, w.node_degree(from) + shift)
    }

    pub fn start(&self) -> Vertex {
        self.start
    }

    pub fn end(&self, alg: &GentleAlgebra) -> Vertex {
        self.steps
            .last()
            .map_or(self.start, |&s| step_right(alg, s))
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn inverse(&self, alg: &GentleAlgebra) -> Self {
        Piece {
            start: self.end(alg),
            steps: self
                .steps
                .iter()
                .rev()
                .map(|&(a, d)| (a, d.flip()))
                .collect(),
            nodes: self.nodes.iter().rev().copied().collect(),
        }
    }

    pub fn concat(mut self, alg: &GentleAlgebra, other: &Piece) -> Result<Self> {
        if self.end(alg) != other.start {
            return Err(Error::Invalid(
                "pieces do not meet at a common vertex".into(),
            ));
        }
        let last = self.nodes.pop().unwrap();
        self.nodes.push(last.merge(other.nodes[0]));
        self.nodes.extend_from_slice(&other.nodes[1..]);
        self.steps.extend_from_slice(&other.steps);
        Ok(self)
    }

    pub fn glue(alg: &GentleAlgebra, pieces: &[Piece]) -> Result<Self> {
        let mut it = pieces.iter();
        let mut acc = it.next().expect("at least one piece").clone();
        for p in it {
            acc = acc.concat(alg, p)?;
        }
        Ok(acc)
    }

    /// Whether node `i` separates letters: the gentle relations force it, or
    /// it is a glued junction of known degree. Letters only merge through
    /// eliminated or cancelled nodes. Indices wrap, for closed pieces.
    fn cut_at(&self, alg: &GentleAlgebra, i: usize) -> bool {
        let s = self.steps.len();
        matches!(self.nodes[i], NodeDeg::Known(_))
            || forced_split(alg, self.steps[(i + s - 1) % s], self.steps[i % s])
    }

    fn reduce_linear(&mut self) {
        let mut steps: Vec<Step> = Vec::with_capacity(self.steps.len());
        let mut nodes = vec![self.nodes[0]];
        for (i, &s) in self.steps.iter().enumerate() {
            if steps.last().is_some_and(|&l| cancels(l, s)) {
                steps.pop();
                nodes.pop();
                let before = nodes.pop().unwrap();
                nodes.push(before.cancel(self.nodes[i + 1]));
            } else {
                steps.push(s);
                nodes.push(self.nodes[i + 1]);
            }
        }
        self.steps = steps;
        self.nodes = nodes;
    }

    fn partition(&self, alg: &GentleAlgebra) -> Vec<(usize, usize)> {
        let mut cuts = vec![0];
        for i in 1..self.steps.len() {
            if self.cut_at(alg, i) {
                cuts.push(i);
            }
        }
        cuts.push(self.steps.len());
        cuts.windows(2).map(|w| (w[0], w[1])).collect()
    }

    fn letters_and_degrees(
        &self,
        alg: &GentleAlgebra,
        ranges: &[(usize, usize)],
        boundary: impl Fn(usize) -> NodeDeg,
    ) -> Result<(Vec<Letter>, i64)> {
        let letters = ranges
            .iter()
            .map(|&(a, b)| Letter::from_steps(alg, &self.steps[a..b]))
            .collect::<Result<Vec<_>>>()?;
        let mut known = None;
        let mut offset = 0i64;
        for (i, &(a, _)) in ranges.iter().enumerate() {
            match boundary(a) {
                NodeDeg::Conflict => {
                    return Err(Error::IllegalJunction {
                        index: i,
                        reason: "glued nodes of different degrees stay a letter boundary".into(),
                    })
                }
                NodeDeg::Known(d) | NodeDeg::Glued(d) => match known {
                    None => known = Some(d - offset),
                    Some(anchor) if anchor + offset != d => {
                        return Err(Error::IllegalJunction {
                            index: i,
                            reason: "inconsistent degrees after surgery".into(),
                        })
                    }
                    _ => {}
                },
                NodeDeg::Interior => {}
            }
            offset += letters[i].delta();
        }
        let anchor =
            known.ok_or_else(|| Error::Invalid("surgery result has no graded node".into()))?;
        Ok((letters, anchor))
    }

    /// Cancels, re-cuts and grades the result as a string.
    pub fn into_string(mut self, alg: &GentleAlgebra) -> Result<HomotopyString> {
        self.reduce_linear();
        if self.steps.is_empty() {
            return match self.nodes[0].degree() {
                Some(d) => Ok(HomotopyString::trivial(self.start, d)),
                None => Err(Error::Invalid(
                    "trivial surgery result has no degree".into(),
                )),
            };
        }
        let ranges = self.partition(alg);
        let last = *self.nodes.last().unwrap();
        if last == NodeDeg::Conflict {
            return Err(Error::IllegalJunction {
                index: ranges.len(),
                reason: "glued end node".into(),
            });
        }
        let (letters, anchor) = self.letters_and_degrees(alg, &ranges, |i| self.nodes[i])?;
        let total: i64 = letters.iter().map(Letter::delta).sum();
        if let Some(d) = last.degree() {
            if d != anchor + total {
                return Err(Error::IllegalJunction {
                    index: ranges.len(),
                    reason: "inconsistent degrees after surgery".into(),
                });
            }
        }
        HomotopyString::new(alg, letters, anchor)
    }

    /// Treats the piece as closed (its ends must meet), cancels cyclically,
    /// and re-cuts into a band reading that starts at a letter boundary.
    pub fn into_band(mut self, alg: &GentleAlgebra, scalar: SummandScalar) -> Result<HomotopyBand> {
        if self.end(alg) != self.start {
            return Err(Error::NotABand("surgery result is not closed".into()));
        }
        let n0 = self.nodes[0].merge(*self.nodes.last().unwrap());
        self.nodes[0] = n0;
        *self.nodes.last_mut().unwrap() = n0;
        self.reduce_cyclic(alg);
        let s = self.steps.len();
        if s == 0 {
            return Err(Error::NotABand("word cancels completely".into()));
        }
        let cut = (0..s)
            .find(|&i| self.cut_at(alg, i))
            .ok_or_else(|| Error::NotABand("no letter boundary in cyclic word".into()))?;
        let steps: Vec<Step> = self.steps[cut..]
            .iter()
            .chain(&self.steps[..cut])
            .copied()
            .collect();
        let nodes: Vec<NodeDeg> = self.nodes[cut..s]
            .iter()
            .chain(&self.nodes[..cut])
            .copied()
            .collect();
        let rotated = Piece {
            start: step_left(alg, steps[0]),
            steps,
            nodes,
        };
        let mut ranges = Vec::new();
        let mut a = 0;
        for i in 1..s {
            if rotated.cut_at(alg, i) {
                ranges.push((a, i));
                a = i;
            }
        }
        ranges.push((a, s));
        let (letters, anchor) = rotated.letters_and_degrees(alg, &ranges, |i| rotated.nodes[i])?;
        HomotopyBand::new(alg, letters, scalar, anchor)
    }
}

/// Outcome of resolving a piece whose glued nodes may have been eliminated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Resolved {
    Band(HomotopyBand),
    Strings(Vec<HomotopyString>),
}

impl Piece {
    /// Letter boundaries of a reduced piece, `0` and `steps.len()` included.
    fn boundaries(&self, alg: &GentleAlgebra) -> Vec<usize> {
        let mut b = vec![0];
        for i in 1..self.steps.len() {
            if self.cut_at(alg, i) {
                b.push(i);
            }
        }
        b.push(self.steps.len());
        b
    }

    /// Like [`Piece::into_string`], but a conflicting node on a letter
    /// boundary (a pair eliminated against each other) is deleted together
    /// with its incident letters. Conflicts inside a letter are merged
    /// junctions and kept. Returns the surviving strings left to right.
    pub fn resolve_open(mut self, alg: &GentleAlgebra) -> Result<Vec<HomotopyString>> {
        self.reduce_linear();
        if self.steps.is_empty() {
            return match self.nodes[0] {
                NodeDeg::Known(d) | NodeDeg::Glued(d) => {
                    Ok(vec![HomotopyString::trivial(self.start, d)])
                }
                NodeDeg::Conflict => Ok(Vec::new()),
                NodeDeg::Interior => Err(Error::Invalid(
                    "trivial surgery result has no degree".into(),
                )),
            };
        }
        let bounds = self.boundaries(alg);
        let dead: Vec<bool> = bounds
            .iter()
            .map(|&b| self.nodes[b] == NodeDeg::Conflict)
            .collect();
        let mut out = Vec::new();
        let mut k = 0;
        while k < bounds.len() {
            if dead[k] {
                k += 1;
                continue;
            }
            // A run of letters between live boundaries k..=e.
            let mut e = k;
            while e + 1 < bounds.len() && !dead[e + 1] {
                e += 1;
            }
            let part = Piece {
                start: self.vertex_at(alg, bounds[k]),
                steps: self.steps[bounds[k]..bounds[e]].to_vec(),
                nodes: self.nodes[bounds[k]..=bounds[e]].to_vec(),
            };
            out.push(part.into_string(alg)?);
            k = e + 1;
        }
        Ok(out)
    }

    /// Closed version of [`Piece::resolve_open`]: a band if no boundary node
    /// was eliminated, otherwise the strings left after cutting there.
    pub fn resolve_closed(
        mut self,
        alg: &GentleAlgebra,
        scalar: SummandScalar,
    ) -> Result<Resolved> {
        if self.end(alg) != self.start {
            return Err(Error::NotABand("surgery result is not closed".into()));
        }
        let n0 = self.nodes[0].merge(*self.nodes.last().unwrap());
        self.nodes[0] = n0;
        *self.nodes.last_mut().unwrap() = n0;
        self.reduce_cyclic(alg);
        let s = self.steps.len();
        if s == 0 {
            return Ok(Resolved::Strings(match self.nodes[0].degree() {
                Some(d) => vec![HomotopyString::trivial(self.start, d)],
                None => Vec::new(),
            }));
        }
        let cut = (0..s).find(|&i| self.cut_at(alg, i) && self.nodes[i] == NodeDeg::Conflict);
        match cut {
            None => self.into_band(alg, scalar).map(Resolved::Band),
            Some(c) => {
                let steps: Vec<Step> = self.steps[c..]
                    .iter()
                    .chain(&self.steps[..c])
                    .copied()
                    .collect();
                let mut nodes: Vec<NodeDeg> = self.nodes[c..s]
                    .iter()
                    .chain(&self.nodes[..c])
                    .copied()
                    .collect();
                nodes.push(NodeDeg::Conflict);
                let open = Piece {
                    start: step_left(alg, steps[0]),
                    steps,
                    nodes,
                };
                open.resolve_open(alg).map(Resolved::Strings)
            }
        }
    }

    fn vertex_at(&self, alg: &GentleAlgebra, i: usize) -> Vertex {
        if i < self.steps.len() {
            step_left(alg, self.steps[i])
        } else {
            self.end(alg)
        }
    }

    fn reduce_cyclic(&mut self, alg: &GentleAlgebra) {
        loop {
            self.reduce_linear();
            // The two ends are one node; a cancellation at either end reaches both.
            let (a, b) = (self.nodes[0], *self.nodes.last().unwrap());
            let glued = matches!(a, NodeDeg::Glued(_)) || matches!(b, NodeDeg::Glued(_));
            let end = if glued { a.cancel(b) } else { a.merge(b) };
            self.nodes[0] = end;
            *self.nodes.last_mut().unwrap() = end;
            let s = self.steps.len();
            if s >= 2 && cancels(self.steps[s - 1], self.steps[0]) {
                let merged = self.nodes[1].cancel(self.nodes[s - 1]);
                self.steps = self.steps[1..s - 1].to_vec();
                let mut nodes = vec![merged];
                nodes.extend_from_slice(&self.nodes[2..s - 1]);
                nodes.push(merged);
                self.nodes = nodes;
                self.start = self
                    .steps
                    .first()
                    .map_or(self.start, |&st| step_left(alg, st));
            } else {
                break;
            }
        }
    }
}

/// Single-letter piece: `letter` with its left node at `left_degree`.
pub fn letter_piece(letter: &Letter, left_degree: i64) -> Piece {
    Piece::from_letters(
        letter.left_vertex(),
        std::slice::from_ref(letter),
        left_degree,
    )
}
