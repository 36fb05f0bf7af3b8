//! Graph, quasi-graph, single and double maps between string and band
//! complexes: descriptors, realization as chain maps, enumeration.
//!
//! Realization does not transcribe endpoint conditions. Each descriptor names
//! a support (slot pairs and paths); the chain-map equations restricted to that
//! support are solved exactly and candidates that fail, or are null-homotopic,
//! are rejected.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::algebra::{GentleAlgebra, Path, Vertex};
use crate::complexes::build_walk_complex;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::oracle::{FComplex, FMap, Oracle};
use crate::walks::{find_overlaps, Dir, MapKind, Overlap, Walk};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Graph,
    Quasi,
    Single,
    Double,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::Graph, Kind::Quasi, Kind::Single, Kind::Double];
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Graph => "graph",
            Kind::Quasi => "quasi",
            Kind::Single => "single",
            Kind::Double => "double",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph" => Ok(Kind::Graph),
            "quasi" | "quasi-graph" => Ok(Kind::Quasi),
            "single" => Ok(Kind::Single),
            "double" => Ok(Kind::Double),
            _ => Err(Error::Parse(format!("unknown morphism kind `{s}`"))),
        }
    }
}

/// One component `P_{σ(source_node)} → P_{τ(target_node)}` given by a path;
/// node indices refer to the walks as given (not reoriented).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Component {
    pub source_node: usize,
    pub target_node: usize,
    pub path: Path,
}

impl Component {
    fn to_json(&self, alg: &GentleAlgebra) -> Value {
        json!({
            "source_node": self.source_node,
            "target_node": self.target_node,
            "path": alg.path_name(&self.path),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Descriptor {
    Graph {
        overlap: Overlap,
        f_left: Option<Component>,
        f_right: Option<Component>,
    },
    /// `rep` lists the components of the chosen representative.
    Quasi {
        overlap: Overlap,
        rep: Vec<Component>,
    },
    Single {
        component: Component,
    },
    Double {
        left: Component,
        right: Component,
    },
}

impl Descriptor {
    pub fn kind(&self) -> Kind {
        match self {
            Descriptor::Graph { .. } => Kind::Graph,
            Descriptor::Quasi { .. } => Kind::Quasi,
            Descriptor::Single { .. } => Kind::Single,
            Descriptor::Double { .. } => Kind::Double,
        }
    }

    pub fn overlap(&self) -> Option<&Overlap> {
        match self {
            Descriptor::Graph { overlap, .. } | Descriptor::Quasi { overlap, .. } => Some(overlap),
            _ => None,
        }
    }
}

/// A morphism `source → target` named by its descriptor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub source: Walk,
    pub target: Walk,
    pub descriptor: Descriptor,
}

impl Morphism {
    pub fn kind(&self) -> Kind {
        self.descriptor.kind()
    }

    pub fn describe(&self, alg: &GentleAlgebra) -> String {
        let comp = |c: &Component| {
            format!(
                "{}:{}->{}",
                alg.path_name(&c.path),
                c.source_node,
                c.target_node
            )
        };
        match &self.descriptor {
            Descriptor::Graph {
                overlap,
                f_left,
                f_right,
            } => {
                let mut out = self.describe_overlap(alg, overlap);
                if let Some(c) = f_left {
                    out += &format!(" f_L={}", comp(c));
                }
                if let Some(c) = f_right {
                    out += &format!(" f_R={}", comp(c));
                }
                out
            }
            Descriptor::Quasi { overlap, rep } => {
                let reps: Vec<String> = rep.iter().map(comp).collect();
                format!(
                    "{} rep=[{}]",
                    self.describe_overlap(alg, overlap),
                    reps.join(" ")
                )
            }
            Descriptor::Single { component } => format!("single {}", comp(component)),
            Descriptor::Double { left, right } => format!("double {} {}", comp(left), comp(right)),
        }
    }

    fn describe_overlap(&self, alg: &GentleAlgebra, o: &Overlap) -> String {
        let rho = crate::walks::word_text(alg, &o.rho(&self.source));
        let rho = if rho.is_empty() {
            "∅".to_string()
        } else {
            rho
        };
        format!(
            "{} rho=[{}] len={} at {}/{}{}{}",
            self.kind(),
            rho,
            o.len,
            o.sigma_start,
            o.tau_start,
            if o.tau_reversed {
                " (target inverted)"
            } else {
                ""
            },
            if o.infinite { " infinite" } else { "" }
        )
    }

    pub fn to_json(&self, alg: &GentleAlgebra) -> Value {
        let mut v = json!({
            "kind": self.kind().to_string(),
            "source": self.source.text(alg),
            "target": self.target.text(alg),
        });
        let obj = v.as_object_mut().unwrap();
        if let Some(o) = self.descriptor.overlap() {
            obj.insert(
                "overlap".into(),
                json!({
                    "rho": crate::walks::word_text(alg, &o.rho(&self.source)),
                    "len": o.len,
                    "source_range": [o.sigma_start, o.sigma_start + o.len as i64],
                    "target_range": [o.tau_start, o.tau_start + o.len as i64],
                    "target_inverted": o.tau_reversed,
                    "infinite": o.infinite,
                }),
            );
        }
        match &self.descriptor {
            Descriptor::Graph {
                f_left, f_right, ..
            } => {
                obj.insert(
                    "f_left".into(),
                    f_left.as_ref().map_or(Value::Null, |c| c.to_json(alg)),
                );
                obj.insert(
                    "f_right".into(),
                    f_right.as_ref().map_or(Value::Null, |c| c.to_json(alg)),
                );
            }
            Descriptor::Quasi { rep, .. } => {
                obj.insert(
                    "representative".into(),
                    rep.iter().map(|c| c.to_json(alg)).collect(),
                );
            }
            Descriptor::Single { component } => {
                obj.insert("components".into(), json!([component.to_json(alg)]));
            }
            Descriptor::Double { left, right } => {
                obj.insert(
                    "components".into(),
                    json!([left.to_json(alg), right.to_json(alg)]),
                );
            }
        }
        v
    }
}

/// Node index of a walk, wrapped for bands; `None` outside a string.
pub fn norm_node(w: &Walk, i: i64) -> Option<usize> {
    match w {
        Walk::Band(b) => Some(i.rem_euclid(b.len() as i64) as usize),
        Walk::String(s) => usize::try_from(i).ok().filter(|&i| i <= s.len()),
    }
}

/// Node of `τ` corresponding to node `j` of `τ` or of its inverse.
pub fn target_node(tau: &Walk, j: i64, reversed: bool) -> Option<usize> {
    if !reversed {
        return norm_node(tau, j);
    }
    match tau {
        Walk::Band(b) => Some((-j).rem_euclid(b.len() as i64) as usize),
        Walk::String(s) => usize::try_from(j)
            .ok()
            .filter(|&j| j <= s.len())
            .map(|j| s.len() - j),
    }
}

/// A walk complex embedded over a field, with the slot of every node.
#[derive(Clone, Debug)]
pub struct WalkComplex<E> {
    pub walk: Walk,
    pub complex: FComplex<E>,
    nodes: Vec<(i64, usize)>,
}

impl<E: Clone> WalkComplex<E> {
    pub fn build<F: Field<E = E>>(o: &Oracle<F>, w: &Walk) -> Result<Self> {
        let pc = build_walk_complex(w, 1);
        let complex = o.embed_complex(&pc)?;
        let nodes = (0..w.node_count() as i64)
            .map(|t| {
                let d = w.node_degree(t);
                let label = format!("n{t}");
                let idx = pc
                    .slots(d)
                    .iter()
                    .position(|s| s.label == label)
                    .expect("node slot");
                (d, idx)
            })
            .collect();
        Ok(WalkComplex {
            walk: w.clone(),
            complex,
            nodes,
        })
    }

    pub fn slot(&self, t: usize) -> (i64, usize) {
        self.nodes[t]
    }

    pub fn vertex(&self, t: usize) -> Vertex {
        self.walk.node_vertex(t as i64)
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }
}

type Coord = (i64, usize, usize, Path);

/// A source/target pair embedded over a field, ready to realize descriptors.
pub struct Pair<'o, 'a, F: Field> {
    pub oracle: &'o Oracle<'a, F>,
    pub x: WalkComplex<F::E>,
    pub y: WalkComplex<F::E>,
}

impl<'o, 'a, F: Field> Pair<'o, 'a, F> {
    pub fn new(oracle: &'o Oracle<'a, F>, source: &Walk, target: &Walk) -> Result<Self> {
        Ok(Pair {
            oracle,
            x: WalkComplex::build(oracle, source)?,
            y: WalkComplex::build(oracle, target)?,
        })
    }

    pub fn source(&self) -> &Walk {
        &self.x.walk
    }

    pub fn target(&self) -> &Walk {
        &self.y.walk
    }

    fn coord(&self, c: &Component) -> Option<Coord> {
        let (ds, xs) = self.x.slot(c.source_node);
        let (dt, yt) = self.y.slot(c.target_node);
        (ds == dt).then(|| (ds, yt, xs, c.path.clone()))
    }

    fn comp_of(&self, k: &Coord, s: usize, t: usize) -> Component {
        Component {
            source_node: s,
            target_node: t,
            path: k.3.clone(),
        }
    }

    fn to_map(&self, v: &[F::E], unknowns: &[Coord]) -> FMap<F::E> {
        self.oracle
            .map_from_coords(v, unknowns, &self.x.complex, &self.y.complex)
    }

    pub fn is_null_homotopic(&self, g: &FMap<F::E>) -> bool {
        self.oracle
            .is_null_homotopic(g, &self.x.complex, &self.y.complex)
    }

    pub fn is_chain_map(&self, g: &FMap<F::E>) -> bool {
        self.oracle
            .is_chain_map(g, &self.x.complex, &self.y.complex)
    }

    /// A chain map supported on `unknowns` whose coordinate `anchor` is 1.
    fn solve_anchored(&self, unknowns: &[Coord], anchor: usize) -> Option<Vec<F::E>> {
        let f = &self.oracle.field;
        let mut order: Vec<usize> = (0..unknowns.len()).filter(|&k| k != anchor).collect();
        order.push(anchor);
        let permuted: Vec<Coord> = order.iter().map(|&k| unknowns[k].clone()).collect();
        let kernel = self
            .oracle
            .chain_maps_on(&self.x.complex, &self.y.complex, &permuted);
        let last = permuted.len() - 1;
        let v = kernel.into_iter().find(|v| !f.is_zero(&v[last]))?;
        let inv = f.inv(&v[last]).unwrap();
        let mut out = vec![f.zero(); unknowns.len()];
        for (pos, &k) in order.iter().enumerate() {
            out[k] = f.mul(&v[pos], &inv);
        }
        Some(out)
    }

    pub fn realize(&self, d: &Descriptor) -> Result<(Descriptor, FMap<F::E>)> {
        match d {
            Descriptor::Graph { overlap, .. } => self.realize_graph(overlap),
            Descriptor::Quasi { overlap, .. } => self.realize_quasi(overlap),
            Descriptor::Single { component } => self
                .realize_components(std::slice::from_ref(component))
                .map(|g| (d.clone(), g)),
            Descriptor::Double { left, right } => self
                .realize_components(&[left.clone(), right.clone()])
                .map(|g| (d.clone(), g)),
        }
    }

    fn reject(&self, why: &str) -> Error {
        Error::NotAChainMap(why.to_string())
    }

    fn realize_components(&self, comps: &[Component]) -> Result<FMap<F::E>> {
        let unknowns = comps
            .iter()
            .map(|c| {
                self.coord(c)
                    .ok_or_else(|| self.reject("component changes degree"))
            })
            .collect::<Result<Vec<_>>>()?;
        let v = self
            .solve_anchored(&unknowns, 0)
            .ok_or_else(|| self.reject("support admits no chain map"))?;
        if v.iter().any(|e| self.oracle.field.is_zero(e)) {
            return Err(self.reject("a named component vanishes"));
        }
        let g = self.to_map(&v, &unknowns);
        if self.is_null_homotopic(&g) {
            return Err(self.reject("null-homotopic"));
        }
        Ok(g)
    }

    /// Node pairs `(σ node, τ node)` along an overlap, in order.
    fn overlap_pairs(&self, o: &Overlap) -> Vec<(usize, usize)> {
        let steps = if o.infinite { o.len } else { o.len + 1 };
        let mut out: Vec<(usize, usize)> = Vec::new();
        for t in 0..steps as i64 {
            let s = norm_node(self.source(), o.sigma_start + t).unwrap();
            let u = target_node(self.target(), o.tau_start + t, o.tau_reversed).unwrap();
            if !out.contains(&(s, u)) {
                out.push((s, u));
            }
        }
        out
    }

    fn realize_graph(&self, o: &Overlap) -> Result<(Descriptor, FMap<F::E>)> {
        let pairs = self.overlap_pairs(o);
        let diag: Vec<Coord> = pairs
            .iter()
            .map(|&(s, u)| {
                self.coord(&Component {
                    source_node: s,
                    target_node: u,
                    path: Path::trivial(self.x.vertex(s)),
                })
                .ok_or_else(|| self.reject("overlap changes degree"))
            })
            .collect::<Result<_>>()?;
        let mut unknowns = diag.clone();
        let mut solution = self.solve_anchored(&unknowns, 0);
        let mut outer_nodes: Vec<(usize, usize, usize)> = Vec::new(); // (coord index, s, u)
        if solution.is_none() && !o.infinite {
            let ends = [(-1i64, -1i64), (o.len as i64 + 1, o.len as i64 + 1)];
            for (ds, dt) in ends {
                let (Some(s), Some(u)) = (
                    norm_node(self.source(), o.sigma_start + ds),
                    target_node(self.target(), o.tau_start + dt, o.tau_reversed),
                ) else {
                    continue;
                };
                if pairs.contains(&(s, u)) {
                    continue;
                }
                for p in self.oracle.hom_basis(self.x.vertex(s), self.y.vertex(u)) {
                    if let Some(k) = self.coord(&Component {
                        source_node: s,
                        target_node: u,
                        path: p,
                    }) {
                        outer_nodes.push((unknowns.len(), s, u));
                        unknowns.push(k);
                    }
                }
            }
            solution = self.solve_anchored(&unknowns, 0);
        }
        let v = solution.ok_or_else(|| self.reject("overlap does not give a chain map"))?;
        let f = &self.oracle.field;
        if v[..diag.len()].iter().any(|e| f.is_zero(e)) {
            return Err(self.reject("overlap component vanishes"));
        }
        let g = self.to_map(&v, &unknowns);
        if self.is_null_homotopic(&g) {
            return Err(self.reject("null-homotopic"));
        }
        let mut f_left = None;
        let mut f_right = None;
        for &(k, s, u) in &outer_nodes {
            if !f.is_zero(&v[k]) {
                let c = self.comp_of(&unknowns[k], s, u);
                if self.on_left_end(o, &c) && f_left.is_none() {
                    f_left = Some(c);
                } else if f_right.is_none() {
                    f_right = Some(c);
                }
            }
        }
        Ok((
            Descriptor::Graph {
                overlap: o.clone(),
                f_left,
                f_right,
            },
            g,
        ))
    }

    /// Whether an outer component of a graph map sits at the left end of the
    /// overlap. When both ends land on the same node pair (short periods) the
    /// side is the one whose letters factor through the component.
    fn on_left_end(&self, o: &Overlap, c: &Component) -> bool {
        let (sigma, tau) = (self.source(), o.oriented_tau(self.target()));
        let node = |ds: i64, dt: i64| {
            (
                norm_node(sigma, o.sigma_start + ds),
                target_node(self.target(), o.tau_start + dt, o.tau_reversed),
            )
        };
        let r = o.len as i64;
        let (left, right) = (node(-1, -1), node(r + 1, r + 1));
        let here = (Some(c.source_node), Some(c.target_node));
        if left != right {
            return here == left;
        }
        let alg = self.oracle.alg;
        let fits = |a: Option<&crate::walks::Letter>, b: Option<&crate::walks::Letter>| {
            let (Some(a), Some(b)) = (a, b) else {
                return false;
            };
            let (p, q, f) = (&a.path, &b.path, &c.path);
            [(p, f, q), (f, p, q), (q, f, p), (f, q, p)]
                .iter()
                .any(|(x, y, z)| alg.compose(x, y).ok().flatten().as_ref() == Some(*z))
        };
        fits(sigma.letter(o.sigma_start - 1), tau.letter(o.tau_start - 1))
    }

    /// Components of `d h + h d` for `h` the identity along the overlap.
    fn quasi_candidates(&self, o: &Overlap) -> Vec<Component> {
        let sigma = self.source();
        let tau = o.oriented_tau(self.target());
        let steps = if o.infinite { o.len } else { o.len + 1 };
        let mut out: Vec<Component> = Vec::new();
        let mut push = |a: i64, b: i64, p: &Path| {
            if let (Some(s), Some(u)) = (
                norm_node(sigma, a),
                target_node(self.target(), b, o.tau_reversed),
            ) {
                let c = Component {
                    source_node: s,
                    target_node: u,
                    path: p.clone(),
                };
                if !out.contains(&c) {
                    out.push(c);
                }
            }
        };
        for t in 0..steps as i64 {
            let (a, b) = (o.sigma_start + t, o.tau_start + t);
            if let Some(l) = sigma.letter(a - 1).filter(|l| l.dir == Dir::Direct) {
                push(a - 1, b, &l.path);
            }
            if let Some(l) = tau.letter(b - 1).filter(|l| l.dir == Dir::Inverse) {
                push(a, b - 1, &l.path);
            }
            if let Some(l) = tau.letter(b).filter(|l| l.dir == Dir::Direct) {
                push(a, b + 1, &l.path);
            }
            if let Some(l) = sigma.letter(a).filter(|l| l.dir == Dir::Inverse) {
                push(a + 1, b, &l.path);
            }
        }
        out
    }

    /// Every single-component representative of the quasi-graph class along
    /// `o`, with its chain map. Used to check that the cone does not depend
    /// on the choice.
    pub fn quasi_representatives(&self, o: &Overlap) -> Vec<(Component, FMap<F::E>)> {
        self.quasi_candidates(o)
            .into_iter()
            .filter_map(|c| {
                let g = self.realize_components(std::slice::from_ref(&c)).ok()?;
                Some((c, g))
            })
            .collect()
    }

    fn realize_quasi(&self, o: &Overlap) -> Result<(Descriptor, FMap<F::E>)> {
        let cands = self.quasi_candidates(o);
        for c in &cands {
            if let Ok(g) = self.realize_components(std::slice::from_ref(c)) {
                return Ok((
                    Descriptor::Quasi {
                        overlap: o.clone(),
                        rep: vec![c.clone()],
                    },
                    g,
                ));
            }
        }
        let unknowns: Vec<(Coord, &Component)> = cands
            .iter()
            .filter_map(|c| self.coord(c).map(|k| (k, c)))
            .collect();
        let coords: Vec<Coord> = unknowns.iter().map(|(k, _)| k.clone()).collect();
        let f = &self.oracle.field;
        for v in self
            .oracle
            .chain_maps_on(&self.x.complex, &self.y.complex, &coords)
        {
            let g = self.to_map(&v, &coords);
            if !self.is_null_homotopic(&g) {
                let rep = unknowns
                    .iter()
                    .zip(&v)
                    .filter(|(_, e)| !f.is_zero(e))
                    .map(|((_, c), _)| (*c).clone())
                    .collect();
                return Ok((
                    Descriptor::Quasi {
                        overlap: o.clone(),
                        rep,
                    },
                    g,
                ));
            }
        }
        Err(self.reject("no representative of the quasi-graph class"))
    }

    /// All descriptors of the requested kinds, each realized, deduplicated up
    /// to homotopy against the ones found before.
    pub fn enumerate(&self, kinds: &[Kind]) -> Vec<(Morphism, FMap<F::E>)> {
        let mut found: Vec<(Morphism, FMap<F::E>)> = Vec::new();
        let mut accepted: Vec<FMap<F::E>> = Vec::new();
        let mut consider =
            |d: Descriptor, g: FMap<F::E>, found: &mut Vec<(Morphism, FMap<F::E>)>| {
                if self
                    .oracle
                    .in_homotopy_span(&g, &accepted, &self.x.complex, &self.y.complex)
                {
                    return;
                }
                accepted.push(g.clone());
                let m = Morphism {
                    source: self.source().clone(),
                    target: self.target().clone(),
                    descriptor: d,
                };
                found.push((m, g));
            };
        if kinds.contains(&Kind::Graph) {
            for o in find_overlaps(self.source(), self.target(), MapKind::Graph) {
                if let Ok((d, g)) = self.realize_graph(&o) {
                    consider(d, g, &mut found);
                }
            }
        }
        if kinds.contains(&Kind::Quasi) {
            for o in find_overlaps(self.source(), self.target(), MapKind::Quasi) {
                if let Ok((d, g)) = self.realize_quasi(&o) {
                    consider(d, g, &mut found);
                }
            }
        }
        if kinds.contains(&Kind::Single) {
            for s in 0..self.x.node_count() {
                for u in 0..self.y.node_count() {
                    for p in self.oracle.hom_basis(self.x.vertex(s), self.y.vertex(u)) {
                        if p.is_trivial() {
                            continue;
                        }
                        let c = Component {
                            source_node: s,
                            target_node: u,
                            path: p,
                        };
                        if let Ok(g) = self.realize_components(std::slice::from_ref(&c)) {
                            consider(Descriptor::Single { component: c }, g, &mut found);
                        }
                    }
                }
            }
        }
        if kinds.contains(&Kind::Double) {
            for (l, r) in self.double_supports() {
                let mut coords = Vec::new();
                let mut comps = Vec::new();
                for &(s, u) in [l, r].iter() {
                    for p in self.oracle.hom_basis(self.x.vertex(s), self.y.vertex(u)) {
                        let c = Component {
                            source_node: s,
                            target_node: u,
                            path: p,
                        };
                        if let Some(k) = self.coord(&c) {
                            coords.push(k);
                            comps.push(c);
                        }
                    }
                }
                let f = &self.oracle.field;
                for v in self
                    .oracle
                    .chain_maps_on(&self.x.complex, &self.y.complex, &coords)
                {
                    let nz: Vec<&Component> = comps
                        .iter()
                        .zip(&v)
                        .filter(|(_, e)| !f.is_zero(e))
                        .map(|(c, _)| c)
                        .collect();
                    let on = |pair: (usize, usize)| {
                        nz.iter()
                            .filter(|c| (c.source_node, c.target_node) == pair)
                            .count()
                    };
                    if on(l) != 1 || on(r) != 1 {
                        continue;
                    }
                    let g = self.to_map(&v, &coords);
                    if self.is_null_homotopic(&g) {
                        continue;
                    }
                    let left = (*nz
                        .iter()
                        .find(|c| (c.source_node, c.target_node) == l)
                        .unwrap())
                    .clone();
                    let right = (*nz
                        .iter()
                        .find(|c| (c.source_node, c.target_node) == r)
                        .unwrap())
                    .clone();
                    consider(Descriptor::Double { left, right }, g, &mut found);
                }
            }
        }
        found
    }

    /// Adjacent slot-pair pairs `((s, u), (s+1, u±1))` of equal degrees.
    fn double_supports(&self) -> Vec<((usize, usize), (usize, usize))> {
        let mut out = Vec::new();
        let (xs, ys) = (self.source(), self.target());
        for s in 0..self.x.node_count() as i64 {
            let Some(s2) = norm_node(xs, s + 1).filter(|_| xs.letter(s).is_some()) else {
                continue;
            };
            let s = s as usize;
            for u in 0..self.y.node_count() as i64 {
                for du in [1i64, -1] {
                    let letter = if du == 1 {
                        ys.letter(u)
                    } else {
                        ys.letter(u - 1)
                    };
                    let Some(u2) = norm_node(ys, u + du).filter(|_| letter.is_some()) else {
                        continue;
                    };
                    let u = u as usize;
                    if self.x.slot(s).0 != self.y.slot(u).0
                        || self.x.slot(s2).0 != self.y.slot(u2).0
                    {
                        continue;
                    }
                    let pair = ((s, u), (s2, u2));
                    if (s, u) != (s2, u2) && !out.contains(&pair) {
                        out.push(pair);
                    }
                }
            }
        }
        out
    }
}

/// Whether `g` is null-homotopic as a map between the embedded walk complexes.
pub fn is_null_homotopic<F: Field>(
    o: &Oracle<F>,
    g: &FMap<F::E>,
    x: &FComplex<F::E>,
    y: &FComplex<F::E>,
) -> bool {
    o.is_null_homotopic(g, x, y)
}
