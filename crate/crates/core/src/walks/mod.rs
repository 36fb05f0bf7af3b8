//! Homotopy letters, strings and bands.
//!
//! Words are read left to right. A direct letter `p` has left node
//! `target(p)`, right node `source(p)` and its map points rightward, raising
//! the degree by one; an inverse letter points leftward and lowers it.
//!
//! Internally a word is also viewed as a sequence of arrow *steps*; homotopy
//! strings are exactly the freely reduced, vertex-continuous step sequences,
//! and the letter partition is forced by the relations.

mod overlap;
mod surgery;

pub use overlap::{find_overlaps, is_infinite_overlap, MapKind, Overlap};
pub use surgery::{letter_piece, NodeDeg, Piece, Resolved};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{ArrowId, GentleAlgebra, Path, Vertex};
use crate::error::{Error, Result};
use crate::scalars::{CycloScalar, SummandScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Dir {
    Direct,
    Inverse,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Direct => Dir::Inverse,
            Dir::Inverse => Dir::Direct,
        }
    }

    pub fn delta(self) -> i64 {
        match self {
            Dir::Direct => 1,
            Dir::Inverse => -1,
        }
    }
}

pub type Step = (ArrowId, Dir);

pub(crate) fn step_left(alg: &GentleAlgebra, (a, d): Step) -> Vertex {
    let ar = alg.arrow(a);
    match d {
        Dir::Direct => ar.target,
        Dir::Inverse => ar.source,
    }
}

pub(crate) fn step_right(alg: &GentleAlgebra, (a, d): Step) -> Vertex {
    let ar = alg.arrow(a);
    match d {
        Dir::Direct => ar.source,
        Dir::Inverse => ar.target,
    }
}

/// Whether a letter boundary is forced between adjacent steps.
pub(crate) fn forced_split(alg: &GentleAlgebra, (x, dx): Step, (y, dy): Step) -> bool {
    match (dx, dy) {
        (Dir::Direct, Dir::Direct) => alg.is_relation(x, y),
        (Dir::Inverse, Dir::Inverse) => alg.is_relation(y, x),
        _ => true,
    }
}

pub(crate) fn cancels((x, dx): Step, (y, dy): Step) -> bool {
    x == y && dx != dy
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub path: Path,
    pub dir: Dir,
}

impl Letter {
    pub fn direct(path: Path) -> Self {
        Letter {
            path,
            dir: Dir::Direct,
        }
    }

    pub fn left_vertex(&self) -> Vertex {
        match self.dir {
            Dir::Direct => self.path.target(),
            Dir::Inverse => self.path.source(),
        }
    }

    pub fn right_vertex(&self) -> Vertex {
        match self.dir {
            Dir::Direct => self.path.source(),
            Dir::Inverse => self.path.target(),
        }
    }

    pub fn inverse(&self) -> Letter {
        Letter {
            path: self.path.clone(),
            dir: self.dir.flip(),
        }
    }

    pub fn delta(&self) -> i64 {
        self.dir.delta()
    }

    pub fn steps(&self) -> Vec<Step> {
        let arrows = self.path.arrows();
        match self.dir {
            Dir::Direct => arrows.iter().map(|&a| (a, Dir::Direct)).collect(),
            Dir::Inverse => arrows.iter().rev().map(|&a| (a, Dir::Inverse)).collect(),
        }
    }

    pub fn name(&self, alg: &GentleAlgebra) -> String {
        let p = alg.path_name(&self.path);
        match self.dir {
            Dir::Direct => p,
            Dir::Inverse => format!("~{p}"),
        }
    }

    /// Rebuilds the letter spanned by a run of same-direction steps.
    pub(crate) fn from_steps(alg: &GentleAlgebra, steps: &[Step]) -> Result<Letter> {
        let dir = steps[0].1;
        let mut arrows: Vec<ArrowId> = steps.iter().map(|s| s.0).collect();
        if dir == Dir::Inverse {
            arrows.reverse();
        }
        let path = alg
            .path(&arrows)?
            .ok_or_else(|| Error::Invalid("letter path vanishes".into()))?;
        Ok(Letter { path, dir })
    }
}

pub fn letters_to_steps(letters: &[Letter]) -> Vec<Step> {
    letters.iter().flat_map(Letter::steps).collect()
}

/// Why two adjacent letters cannot follow each other, if they cannot.
pub fn junction_problem(alg: &GentleAlgebra, l: &Letter, r: &Letter) -> Option<String> {
    if l.right_vertex() != r.left_vertex() {
        return Some("letters do not meet at a common vertex".into());
    }
    let (lp, rp) = (&l.path, &r.path);
    match (l.dir, r.dir) {
        (Dir::Direct, Dir::Direct) => (!alg.is_relation(lp.first_applied()?, rp.last_applied()?))
            .then(|| "composite of direct letters is nonzero".into()),
        (Dir::Inverse, Dir::Inverse) => (!alg.is_relation(rp.first_applied()?, lp.last_applied()?))
            .then(|| "composite of inverse letters is nonzero".into()),
        (Dir::Direct, Dir::Inverse) => {
            (lp.first_applied() == rp.first_applied()).then(|| "letters cancel".into())
        }
        (Dir::Inverse, Dir::Direct) => {
            (lp.last_applied() == rp.last_applied()).then(|| "letters cancel".into())
        }
    }
}

fn check_letters(alg: &GentleAlgebra, letters: &[Letter], cyclic: bool) -> Result<()> {
    for l in letters {
        if l.path.is_trivial() {
            return Err(Error::Invalid(
                "homotopy letters must be nontrivial paths".into(),
            ));
        }
    }
    let n = letters.len();
    let junctions = if cyclic { n } else { n.saturating_sub(1) };
    for i in 0..junctions {
        if let Some(reason) = junction_problem(alg, &letters[i], &letters[(i + 1) % n]) {
            return Err(Error::IllegalJunction { index: i, reason });
        }
    }
    Ok(())
}

/// A finite homotopy string; `anchor` is the degree of the leftmost node.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomotopyString {
    letters: Vec<Letter>,
    start: Vertex,
    anchor: i64,
}

impl HomotopyString {
    pub fn new(alg: &GentleAlgebra, letters: Vec<Letter>, anchor: i64) -> Result<Self> {
        let Some(first) = letters.first() else {
            return Err(Error::Invalid(
                "use HomotopyString::trivial for empty strings".into(),
            ));
        };
        check_letters(alg, &letters, false)?;
        let start = first.left_vertex();
        Ok(HomotopyString {
            letters,
            start,
            anchor,
        })
    }

    pub fn trivial(v: Vertex, anchor: i64) -> Self {
        HomotopyString {
            letters: Vec::new(),
            start: v,
            anchor,
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn anchor(&self) -> i64 {
        self.anchor
    }

    pub fn with_anchor(&self, anchor: i64) -> Self {
        HomotopyString {
            anchor,
            ..self.clone()
        }
    }

    pub fn node_vertex(&self, i: usize) -> Vertex {
        if i == 0 {
            self.start
        } else {
            self.letters[i - 1].right_vertex()
        }
    }

    /// Degrees of the `len + 1` nodes.
    pub fn degrees(&self) -> Vec<i64> {
        let mut out = vec![self.anchor];
        for l in &self.letters {
            out.push(out.last().unwrap() + l.delta());
        }
        out
    }

    pub fn inverse(&self) -> Self {
        let end = *self.degrees().last().unwrap();
        HomotopyString {
            letters: self.letters.iter().rev().map(Letter::inverse).collect(),
            start: self.node_vertex(self.len()),
            anchor: end,
        }
    }

    pub fn word(&self, alg: &GentleAlgebra) -> String {
        if self.is_trivial() {
            format!("e_{}", alg.vertex_name(self.start))
        } else {
            word_text(alg, &self.letters)
        }
    }
}

pub fn word_text(alg: &GentleAlgebra, letters: &[Letter]) -> String {
    letters
        .iter()
        .map(|l| l.name(alg))
        .collect::<Vec<_>>()
        .join(" ")
}

/// A homotopy band with scalar on letter `slot` (a direct letter);
/// `anchor` is the degree of node 0, the node left of letter 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomotopyBand {
    letters: Vec<Letter>,
    scalar: SummandScalar,
    slot: usize,
    anchor: i64,
}

impl HomotopyBand {
    pub fn new(
        alg: &GentleAlgebra,
        letters: Vec<Letter>,
        scalar: SummandScalar,
        anchor: i64,
    ) -> Result<Self> {
        let n = letters.len();
        if n < 2 || n % 2 == 1 {
            return Err(Error::NotABand(format!(
                "length {n} is not even and at least 2"
            )));
        }
        check_letters(alg, &letters, true)?;
        let total: i64 = letters.iter().map(Letter::delta).sum();
        if total != 0 {
            return Err(Error::NotABand(
                "degree changes by a nonzero amount around the cycle".into(),
            ));
        }
        if scalar.is_zero() {
            return Err(Error::NotABand("scalar must be nonzero".into()));
        }
        let slot = letters.iter().position(|l| l.dir == Dir::Direct).unwrap();
        Ok(HomotopyBand {
            letters,
            scalar,
            slot,
            anchor,
        })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn scalar(&self) -> &SummandScalar {
        &self.scalar
    }

    pub fn slot(&self) -> usize {
        self.slot
    }

    pub fn anchor(&self) -> i64 {
        self.anchor
    }

    pub fn with_scalar(&self, scalar: SummandScalar) -> Self {
        HomotopyBand {
            scalar,
            ..self.clone()
        }
    }

    pub fn with_anchor(&self, anchor: i64) -> Self {
        HomotopyBand {
            anchor,
            ..self.clone()
        }
    }

    pub fn letter(&self, i: i64) -> &Letter {
        &self.letters[i.rem_euclid(self.len() as i64) as usize]
    }

    pub fn node_vertex(&self, i: i64) -> Vertex {
        self.letter(i).left_vertex()
    }

    /// Degrees of nodes `0..len`.
    pub fn degrees(&self) -> Vec<i64> {
        let mut out = vec![self.anchor];
        for l in &self.letters[..self.len() - 1] {
            out.push(out.last().unwrap() + l.delta());
        }
        out
    }

    pub fn node_degree(&self, i: i64) -> i64 {
        self.degrees()[i.rem_euclid(self.len() as i64) as usize]
    }

    /// The same band read from node `k`.
    pub fn rotate(&self, k: i64) -> Self {
        let n = self.len() as i64;
        let k = k.rem_euclid(n) as usize;
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        let slot = (self.slot + self.len() - k) % self.len();
        HomotopyBand {
            anchor: self.node_degree(k as i64),
            letters,
            scalar: self.scalar.clone(),
            slot,
        }
    }

    /// The band read backwards; the scalar is inverted.
    pub fn inverse(&self) -> Self {
        let letters: Vec<Letter> = self.letters.iter().rev().map(Letter::inverse).collect();
        let slot = letters.iter().position(|l| l.dir == Dir::Direct).unwrap();
        HomotopyBand {
            letters,
            scalar: self.scalar.inv(),
            slot,
            anchor: self.anchor,
        }
    }

    /// Lexicographically least reading over rotations and inversion, with the
    /// scalar on the first direct letter.
    pub fn canonical(&self, alg: &GentleAlgebra) -> Self {
        let mut best: Option<(Vec<String>, HomotopyBand)> = None;
        for b in [self.clone(), self.inverse()] {
            for k in 0..self.len() as i64 {
                let r = b.rotate(k);
                let key: Vec<String> = r.letters.iter().map(|l| l.name(alg)).collect();
                if best.as_ref().is_none_or(|(bk, _)| key < *bk) {
                    best = Some((key, r));
                }
            }
        }
        let mut b = best.unwrap().1;
        b.slot = b.letters.iter().position(|l| l.dir == Dir::Direct).unwrap();
        b
    }

    /// Same cyclic word up to rotation and inversion, ignoring scalar and grading.
    pub fn same_word(&self, other: &Self, alg: &GentleAlgebra) -> bool {
        self.len() == other.len() && self.canonical(alg).letters == other.canonical(alg).letters
    }

    /// `(θ, k)` with `θ^k` this band and `k` maximal.
    pub fn primitive_root(&self) -> (Vec<Letter>, usize) {
        let (p, k) = primitive_period(&self.letters);
        (self.letters[..p].to_vec(), k)
    }

    pub fn word(&self, alg: &GentleAlgebra) -> String {
        word_text(alg, &self.letters)
    }
}

/// Smallest period `p` of a cyclic sequence and the exponent `len / p`.
pub fn primitive_period<T: PartialEq>(w: &[T]) -> (usize, usize) {
    let n = w.len();
    for p in 1..=n {
        if n.is_multiple_of(p) && (0..n).all(|i| w[i] == w[(i + p) % n]) {
            return (p, n / p);
        }
    }
    (n, 1)
}

/// A string or a band.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Walk {
    String(HomotopyString),
    Band(HomotopyBand),
}

impl Walk {
    pub fn len(&self) -> usize {
        match self {
            Walk::String(s) => s.len(),
            Walk::Band(b) => b.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_band(&self) -> bool {
        matches!(self, Walk::Band(_))
    }

    pub fn word(&self, alg: &GentleAlgebra) -> String {
        match self {
            Walk::String(s) => s.word(alg),
            Walk::Band(b) => b.word(alg),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        match self {
            Walk::String(s) => s.letters(),
            Walk::Band(b) => b.letters(),
        }
    }

    /// Letter `i`, wrapping for bands.
    pub fn letter(&self, i: i64) -> Option<&Letter> {
        match self {
            Walk::String(s) => usize::try_from(i).ok().and_then(|i| s.letters.get(i)),
            Walk::Band(b) => Some(b.letter(i)),
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            Walk::String(s) => s.len() + 1,
            Walk::Band(b) => b.len(),
        }
    }

    pub fn node_vertex(&self, i: i64) -> Vertex {
        match self {
            Walk::String(s) => s.node_vertex(i as usize),
            Walk::Band(b) => b.node_vertex(i),
        }
    }

    pub fn node_degree(&self, i: i64) -> i64 {
        match self {
            Walk::String(s) => s.degrees()[i as usize],
            Walk::Band(b) => b.node_degree(i),
        }
    }

    pub fn degree_profile(&self) -> Vec<i64> {
        match self {
            Walk::String(s) => s.degrees(),
            Walk::Band(b) => b.degrees(),
        }
    }

    pub fn inverse(&self) -> Walk {
        match self {
            Walk::String(s) => Walk::String(s.inverse()),
            Walk::Band(b) => Walk::Band(b.inverse()),
        }
    }

    pub fn shifted(&self, by: i64) -> Walk {
        match self {
            Walk::String(s) => Walk::String(s.with_anchor(s.anchor + by)),
            Walk::Band(b) => Walk::Band(b.with_anchor(b.anchor + by)),
        }
    }

    pub fn text(&self, alg: &GentleAlgebra) -> String {
        match self {
            Walk::String(s) => s.word(alg),
            Walk::Band(b) => format!("{} @ {}", b.word(alg), b.scalar),
        }
    }
}

/// Expands `( ... )^n` groups.
fn expand_groups(text: &str) -> Result<String> {
    let Some(close) = text.find(')') else {
        if text.contains('(') {
            return Err(Error::Parse("unbalanced parenthesis".into()));
        }
        return Ok(text.to_string());
    };
    let open = text[..close]
        .rfind('(')
        .ok_or_else(|| Error::Parse("unbalanced parenthesis".into()))?;
    let inner = &text[open + 1..close];
    let rest = &text[close + 1..];
    let (count, tail) = match rest.strip_prefix('^') {
        Some(r) => {
            let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
            let n: usize = r[..end]
                .parse()
                .map_err(|_| Error::Parse("bad group exponent".into()))?;
            (n, &r[end..])
        }
        None => (1, rest),
    };
    let body = vec![inner.trim(); count].join(" ");
    expand_groups(&format!("{} {} {}", &text[..open], body, tail))
}

pub fn parse_letters(text: &str, alg: &GentleAlgebra) -> Result<Vec<Letter>> {
    expand_groups(text)?
        .split_whitespace()
        .map(|tok| {
            let (dir, body) = match tok.strip_prefix('~') {
                Some(b) => (Dir::Inverse, b),
                None => (Dir::Direct, tok),
            };
            Ok(Letter {
                path: alg.parse_path(body)?,
                dir,
            })
        })
        .collect()
}

/// Splits off a trailing `deg=N` token.
fn take_degree(text: &str) -> Result<(String, i64)> {
    let mut anchor = 0;
    let mut kept = Vec::new();
    for tok in text.split_whitespace() {
        match tok.strip_prefix("deg=") {
            Some(n) => {
                anchor = n
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad degree `{tok}`")))?
            }
            None => kept.push(tok),
        }
    }
    Ok((kept.join(" "), anchor))
}

/// Parses a string word; `""` is the trivial string at the first vertex and
/// `e_v` the trivial string at `v`.
pub fn parse_string(text: &str, alg: &GentleAlgebra) -> Result<HomotopyString> {
    if text.contains('@') {
        return Err(Error::Parse("strings carry no scalar".into()));
    }
    let (body, anchor) = take_degree(text)?;
    let body = body.trim();
    if body.is_empty() {
        return Ok(HomotopyString::trivial(0, anchor));
    }
    if let Some(v) = body.strip_prefix("e_") {
        return Ok(HomotopyString::trivial(alg.vertex_index(v)?, anchor));
    }
    HomotopyString::new(alg, parse_letters(body, alg)?, anchor)
}

/// Parses `word @ scalar`; the scalar defaults to 1.
pub fn parse_band(text: &str, alg: &GentleAlgebra) -> Result<HomotopyBand> {
    let (body, anchor) = take_degree(text)?;
    let (word, scalar) = match body.split_once('@') {
        Some((w, s)) => (w.to_string(), s.trim().parse::<CycloScalar>()?),
        None => (body.clone(), CycloScalar::one()),
    };
    let letters = parse_letters(&word, alg)?;
    if letters.is_empty() {
        return Err(Error::NotABand("empty word".into()));
    }
    if let Some(reason) = junction_problem(alg, letters.last().unwrap(), &letters[0]) {
        if check_letters(alg, &letters, false).is_ok() {
            return Err(Error::NotABand(format!("open word: {reason} at the wrap")));
        }
    }
    HomotopyBand::new(alg, letters, SummandScalar::exact(scalar), anchor)
}

/// Parses `band: ...`, `string: ...`, or a bare word (a band iff it has `@`).
pub fn parse_walk(text: &str, alg: &GentleAlgebra) -> Result<Walk> {
    let t = text.trim();
    if let Some(rest) = t.strip_prefix("band:") {
        return Ok(Walk::Band(parse_band(rest, alg)?));
    }
    if let Some(rest) = t.strip_prefix("string:") {
        return Ok(Walk::String(parse_string(rest, alg)?));
    }
    if t.contains('@') {
        Ok(Walk::Band(parse_band(t, alg)?))
    } else {
        Ok(Walk::String(parse_string(t, alg)?))
    }
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dir::Direct => "direct",
            Dir::Inverse => "inverse",
        })
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::fixtures::{final_algebra, kronecker};

    #[test]
    fn kronecker_band() {
        let k = kronecker();
        let b = parse_band("d ~c ~a b @ -1", &k).unwrap();
        assert_eq!(b.len(), 4);
        assert_eq!(b.slot(), 0);
        assert_eq!(b.word(&k), "d ~c ~a b");
        let s = parse_string("d ~c ~a b", &k).unwrap();
        assert_eq!(s.degrees(), [0, 1, 0, -1, 0]);
        let b2 = parse_band("d ~c", &k).unwrap().with_anchor(5);
        assert_eq!(b2.degrees(), [5, 6]);
    }

    #[test]
    fn worked_bands_are_valid() {
        let k = kronecker();
        for w in [
            "d ~c ~a b (d ~c)^2 ~a b",
            "(d ~c)^2 ~a b",
            "(d ~c)^7 ~a b",
            "(d ~c)^4 ~a b",
        ] {
            parse_band(w, &k).unwrap();
        }
        let f = final_algebra();
        parse_band("~a b*c ~a b ~e d*b*c @ 36", &f).unwrap();
        parse_band("e ~d*b @ 4", &f).unwrap();
        parse_band("~a b ~e d*b*c", &f).unwrap();
    }

    #[test]
    fn illegal_junctions() {
        let k = kronecker();
        // `a d` is a relation-free composite: must be written as one letter.
        let err = parse_string("a d", &k).unwrap_err();
        assert!(matches!(err, Error::IllegalJunction { index: 0, .. }));
        assert!(parse_string("a*d", &k).is_ok());
        assert!(parse_string("b d", &k).is_ok());
        assert!(matches!(
            parse_string("a ~a", &k),
            Err(Error::IllegalJunction { .. })
        ));
        assert!(matches!(parse_string("x", &k), Err(Error::UnknownArrow(_))));
        assert!(matches!(parse_band("d ~c ~a", &k), Err(Error::NotABand(_))));
    }

    #[test]
    fn direct_direct_junction_requires_relation() {
        // Brute force over all ordered pairs of single-arrow direct letters.
        let k = kronecker();
        for x in 0..4 {
            for y in 0..4 {
                let l = Letter::direct(k.arrow_path(x));
                let r = Letter::direct(k.arrow_path(y));
                let meets = k.arrow(x).source == k.arrow(y).target;
                let ok = junction_problem(&k, &l, &r).is_none();
                assert_eq!(ok, meets && k.is_relation(x, y));
            }
        }
    }

    #[test]
    fn trivial_strings() {
        let k = kronecker();
        let t = parse_string("", &k).unwrap();
        assert!(t.is_trivial());
        assert_eq!(t.degrees(), [0]);
        let t3 = parse_string("e_3", &k).unwrap();
        assert_eq!(t3.node_vertex(0), k.vertex_index("3").unwrap());
    }

    #[test]
    fn primitive_roots() {
        let k = kronecker();
        let b = parse_band("(d ~c)^3", &k).unwrap();
        let (theta, n) = b.primitive_root();
        assert_eq!((word_text(&k, &theta), n), ("d ~c".to_string(), 3));
        let b = parse_band("(d ~c ~a b)^2", &k).unwrap();
        let (theta, n) = b.primitive_root();
        assert_eq!((word_text(&k, &theta), n), ("d ~c ~a b".to_string(), 2));
        let b = parse_band("d ~c ~a b (d ~c)^2 ~a b", &k).unwrap();
        assert_eq!(b.primitive_root().1, 1);
    }

    #[test]
    fn canonical_forms() {
        let k = kronecker();
        let b = parse_band("d ~c ~a b @ 2", &k).unwrap();
        let c = b.canonical(&k);
        for r in 0..4 {
            assert_eq!(b.rotate(r).canonical(&k), c);
        }
        assert_eq!(b.inverse().canonical(&k), c);
        let other = parse_band("d ~c", &k).unwrap();
        assert!(!other.same_word(&b, &k));
        let c_inv = b.inverse();
        assert_eq!(
            c_inv.scalar(),
            &SummandScalar::exact("1/2".parse().unwrap())
        );
    }

    #[test]
    fn rotation_keeps_degrees() {
        let k = kronecker();
        let b = parse_band("d ~c ~a b", &k).unwrap().with_anchor(3);
        let r = b.rotate(1);
        assert_eq!(r.anchor(), 4);
        assert_eq!(r.degrees(), [4, 3, 2, 3]);
        assert_eq!(b.inverse().degrees()[0], 3);
    }
}
