//! Gentle algebras `kQ/I` with length-two relations, paths and projective bases.
//!
//! Paths are stored in written (composition) order: `dbc` is `[d, b, c]` and
//! `c` is traversed first. A relation `(x, y)` means `x∘y = 0`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type ArrowId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: Vertex,
    pub target: Vertex,
}

/// A path of the quiver, possibly trivial. `arrows[0]` is applied last.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    source: Vertex,
    target: Vertex,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: Vertex) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn source(&self) -> Vertex {
        self.source
    }

    pub fn target(&self) -> Vertex {
        self.target
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Arrow applied first.
    pub fn first_applied(&self) -> Option<ArrowId> {
        self.arrows.last().copied()
    }

    /// Arrow applied last.
    pub fn last_applied(&self) -> Option<ArrowId> {
        self.arrows.first().copied()
    }
}

#[derive(Deserialize)]
struct RawArrow {
    name: String,
    from: serde_json::Value,
    to: serde_json::Value,
}

#[derive(Deserialize)]
struct RawAlgebra {
    vertices: Vec<serde_json::Value>,
    arrows: Vec<RawArrow>,
    #[serde(default)]
    relations: Vec<[String; 2]>,
}

fn vertex_label(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GentleAlgebra {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    relations: BTreeSet<(ArrowId, ArrowId)>,
    by_name: BTreeMap<String, ArrowId>,
}

impl GentleAlgebra {
    /// Builds and validates an algebra from named vertices, `(name, from, to)`
    /// arrows and relations `[x, y]` meaning `x∘y = 0`.
    pub fn new<V, A, R>(vertices: V, arrows: A, relations: R) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
        R: IntoIterator<Item = (String, String)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::Duplicate(v.clone()));
            }
        }
        let vidx = |s: &str| {
            vertices
                .iter()
                .position(|v| v == s)
                .ok_or_else(|| Error::UnknownVertex(s.to_string()))
        };
        let mut list = Vec::new();
        let mut by_name = BTreeMap::new();
        for (name, from, to) in arrows {
            if name.is_empty() || name.contains(['*', '~', ' ', '@']) {
                return Err(Error::Parse(format!("bad arrow name `{name}`")));
            }
            if by_name.insert(name.clone(), list.len()).is_some() {
                return Err(Error::Duplicate(name));
            }
            list.push(Arrow {
                name,
                source: vidx(&from)?,
                target: vidx(&to)?,
            });
        }
        let mut rels = BTreeSet::new();
        for (x, y) in relations {
            let xi = *by_name
                .get(&x)
                .ok_or_else(|| Error::UnknownArrow(x.clone()))?;
            let yi = *by_name
                .get(&y)
                .ok_or_else(|| Error::UnknownArrow(y.clone()))?;
            if list[yi].target != list[xi].source {
                return Err(Error::NonComposableRelation(x, y));
            }
            rels.insert((xi, yi));
        }
        let alg = GentleAlgebra {
            vertices,
            arrows: list,
            relations: rels,
            by_name,
        };
        alg.validate()?;
        Ok(alg)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawAlgebra =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        GentleAlgebra::new(
            raw.vertices.iter().map(vertex_label),
            raw.arrows
                .into_iter()
                .map(|a| (a.name, vertex_label(&a.from), vertex_label(&a.to))),
            raw.relations.into_iter().map(|[x, y]| (x, y)),
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vertices": self.vertices,
            "arrows": self.arrows.iter().map(|a| serde_json::json!({
                "name": a.name,
                "from": self.vertices[a.source],
                "to": self.vertices[a.target],
            })).collect::<Vec<_>>(),
            "relations": self.relations.iter()
                .map(|&(x, y)| [self.arrows[x].name.clone(), self.arrows[y].name.clone()])
                .collect::<Vec<_>>(),
        })
    }

    fn validate(&self) -> Result<()> {
        for v in 0..self.vertices.len() {
            let outgoing = self.arrows.iter().filter(|a| a.source == v).count();
            let incoming = self.arrows.iter().filter(|a| a.target == v).count();
            for (side, count) in [("outgoing", outgoing), ("incoming", incoming)] {
                if count > 2 {
                    return Err(Error::FanOutExceeded {
                        vertex: self.vertices[v].clone(),
                        side,
                        count,
                    });
                }
            }
        }
        for (a, arrow) in self.arrows.iter().enumerate() {
            let after: Vec<_> = self.arrows_from(arrow.target).collect();
            let before: Vec<_> = self.arrows_into(arrow.source).collect();
            let after_zero = after.iter().filter(|&&b| self.is_relation(b, a)).count();
            let before_zero = before.iter().filter(|&&c| self.is_relation(a, c)).count();
            let checks = [
                (after.len() - after_zero, "two arrows b with ba nonzero"),
                (after_zero, "two arrows b with ba in I"),
                (before.len() - before_zero, "two arrows c with ac nonzero"),
                (before_zero, "two arrows c with ac in I"),
            ];
            for (n, reason) in checks {
                if n > 1 {
                    return Err(Error::GentlenessViolation {
                        arrow: arrow.name.clone(),
                        reason: reason.to_string(),
                    });
                }
            }
        }
        // A nonzero path longer than the arrow count repeats an arrow, and in
        // a gentle algebra such a cycle can be traversed indefinitely.
        let bound = self.arrows.len();
        for v in 0..self.vertices.len() {
            let mut frontier = vec![Path::trivial(v)];
            while let Some(p) = frontier.pop() {
                if p.len() > bound {
                    let a = p.arrows[0];
                    return Err(Error::InfiniteDimensional(self.arrows[a].name.clone()));
                }
                frontier.extend(self.extensions(&p));
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_name(&self, v: Vertex) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, name: &str) -> Result<Vertex> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrow_index(&self, name: &str) -> Result<ArrowId> {
        self.by_name
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn relations(&self) -> impl Iterator<Item = (ArrowId, ArrowId)> + '_ {
        self.relations.iter().copied()
    }

    /// `x∘y ∈ I`.
    pub fn is_relation(&self, x: ArrowId, y: ArrowId) -> bool {
        self.relations.contains(&(x, y))
    }

    pub fn arrows_from(&self, v: Vertex) -> impl Iterator<Item = ArrowId> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    pub fn arrows_into(&self, v: Vertex) -> impl Iterator<Item = ArrowId> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    pub fn arrow_path(&self, a: ArrowId) -> Path {
        let ar = &self.arrows[a];
        Path {
            source: ar.source,
            target: ar.target,
            arrows: vec![a],
        }
    }

    /// Builds a path from arrows in written order, checking composability
    /// and nonvanishing.
    pub fn path(&self, arrows: &[ArrowId]) -> Result<Option<Path>> {
        let Some((&last, rest)) = arrows.split_last() else {
            return Err(Error::Invalid("empty arrow list".into()));
        };
        let mut p = self.arrow_path(last);
        for &a in rest.iter().rev() {
            match self.compose(&self.arrow_path(a), &p)? {
                Some(q) => p = q,
                None => return Ok(None),
            }
        }
        Ok(Some(p))
    }

    /// Parses `d*b*c`; the result must be nonzero.
    pub fn parse_path(&self, text: &str) -> Result<Path> {
        let ids = text
            .split('*')
            .map(|s| self.arrow_index(s.trim()))
            .collect::<Result<Vec<_>>>()?;
        self.path(&ids)?
            .ok_or_else(|| Error::Parse(format!("path `{text}` is zero in the algebra")))
    }

    /// `p∘q` (`q` first). `None` means the composite lies in `I`.
    pub fn compose(&self, p: &Path, q: &Path) -> Result<Option<Path>> {
        if q.target != p.source {
            return Err(Error::EndpointMismatch(format!(
                "{} ∘ {}",
                self.path_name(p),
                self.path_name(q)
            )));
        }
        if let (Some(x), Some(y)) = (p.first_applied(), q.last_applied()) {
            if self.is_relation(x, y) {
                return Ok(None);
            }
        }
        let mut arrows = p.arrows.clone();
        arrows.extend_from_slice(&q.arrows);
        Ok(Some(Path {
            source: q.source,
            target: p.target,
            arrows,
        }))
    }

    fn extensions<'a>(&'a self, p: &'a Path) -> impl Iterator<Item = Path> + 'a {
        self.arrows_from(p.target).filter_map(move |a| {
            if p.last_applied().is_some_and(|y| self.is_relation(a, y)) {
                return None;
            }
            let mut arrows = vec![a];
            arrows.extend_from_slice(&p.arrows);
            Some(Path {
                source: p.source,
                target: self.arrows[a].target,
                arrows,
            })
        })
    }

    /// All nonzero paths starting at `v`, trivial path first, by length.
    pub fn projective_basis(&self, v: Vertex) -> Vec<Path> {
        let mut out = vec![Path::trivial(v)];
        let mut i = 0;
        while i < out.len() {
            let next: Vec<_> = self.extensions(&out[i]).collect();
            out.extend(next);
            i += 1;
        }
        out
    }

    /// Nonzero paths from `from` to `to`; these span `Hom(P_to, P_from)`.
    pub fn paths_between(&self, from: Vertex, to: Vertex) -> Vec<Path> {
        self.projective_basis(from)
            .into_iter()
            .filter(|p| p.target == to)
            .collect()
    }

    /// The unique arrow `b` with `b∘a ≠ 0`, if any.
    pub fn continuation(&self, a: ArrowId) -> Option<ArrowId> {
        self.arrows_from(self.arrows[a].target)
            .find(|&b| !self.is_relation(b, a))
    }

    pub fn path_name(&self, p: &Path) -> String {
        if p.is_trivial() {
            format!("e_{}", self.vertices[p.source])
        } else {
            p.arrows
                .iter()
                .map(|&a| self.arrows[a].name.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    pub fn display_path<'a>(&'a self, p: &'a Path) -> impl fmt::Display + 'a {
        struct D<'a>(&'a GentleAlgebra, &'a Path);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.path_name(self.1))
            }
        }
        D(self, p)
    }
}
