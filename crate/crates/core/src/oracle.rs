//! Independent verification by explicit linear algebra over a field.
//!
//! Complexes are embedded into a concrete [`Field`], mapping cones are formed
//! as matrices, minimized by repeated elimination of unit components, and
//! compared with randomized searches for invertible chain maps.

use std::collections::{BTreeMap, HashMap};

use rand::Rng;
use serde::Serialize;

use crate::algebra::{GentleAlgebra, Path, Vertex};
use crate::complexes::{ProjComplex, Slot, Term};
use crate::error::{Error, Result};
use crate::field::Field;

/// A map between indecomposable projectives: a combination of paths, sorted
/// by path and without zero coefficients.
pub type Morph<E> = Vec<(Path, E)>;
/// `mat[row][col]`.
pub type Mat<E> = Vec<Vec<Morph<E>>>;

#[derive(Clone, Debug, PartialEq)]
pub struct FComplex<E> {
    pub lo: i64,
    pub slots: Vec<Vec<Slot>>,
    /// `diffs[i]` maps degree `lo + i` to `lo + i + 1`.
    pub diffs: Vec<Mat<E>>,
}

impl<E: Clone> FComplex<E> {
    pub fn zero() -> Self {
        FComplex {
            lo: 0,
            slots: Vec::new(),
            diffs: Vec::new(),
        }
    }

    pub fn slots(&self, d: i64) -> &[Slot] {
        usize::try_from(d - self.lo)
            .ok()
            .and_then(|i| self.slots.get(i))
            .map_or(&[], Vec::as_slice)
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.slots.len() as i64 - 1
    }

    pub fn total_rank(&self) -> usize {
        self.slots.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_rank() == 0
    }

    pub fn graded_dims(&self) -> BTreeMap<i64, Vec<Vertex>> {
        let mut out = BTreeMap::new();
        for (i, s) in self.slots.iter().enumerate() {
            if !s.is_empty() {
                let mut v: Vec<Vertex> = s.iter().map(|s| s.vertex).collect();
                v.sort();
                out.insert(self.lo + i as i64, v);
            }
        }
        out
    }

    /// Per-vertex Euler characteristic `Σ (−1)^d · mult(P_v, d)`.
    pub fn euler(&self) -> BTreeMap<Vertex, i64> {
        let mut out = BTreeMap::new();
        for (d, vs) in self.graded_dims() {
            for v in vs {
                *out.entry(v).or_insert(0) += if d.rem_euclid(2) == 0 { 1 } else { -1 };
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    fn diff(&self, d: i64) -> Option<&Mat<E>> {
        usize::try_from(d - self.lo)
            .ok()
            .and_then(|i| self.diffs.get(i))
    }
}

/// A degree-zero family of matrices `X^d → Y^d`, absent degrees being zero.
/// An unknown coefficient of a degree-zero map: `(degree, row, column, path)`.
pub type Unknown = (i64, usize, usize, Path);

pub type FMap<E> = BTreeMap<i64, Mat<E>>;

/// Verdict of [`Oracle::verify_cone`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub graded_dims_match: bool,
    pub iso: bool,
    pub trials_used: usize,
    pub field: String,
    pub eliminated_pairs: usize,
}

pub struct Oracle<'a, F: Field> {
    pub alg: &'a GentleAlgebra,
    pub field: F,
    hom_cache: std::sync::Mutex<HashMap<(Vertex, Vertex), Vec<Path>>>,
}

fn zero_mat<E>(rows: usize, cols: usize) -> Mat<E> {
    (0..rows)
        .map(|_| (0..cols).map(|_| Vec::new()).collect())
        .collect()
}

impl<'a, F: Field> Oracle<'a, F> {
    pub fn new(alg: &'a GentleAlgebra, field: F) -> Self {
        Oracle {
            alg,
            field,
            hom_cache: Default::default(),
        }
    }

    /// Basis of `Hom(P_a, P_b)`: paths from `b` to `a`.
    pub fn hom_basis(&self, a: Vertex, b: Vertex) -> Vec<Path> {
        let mut cache = self.hom_cache.lock().unwrap();
        cache
            .entry((a, b))
            .or_insert_with(|| self.alg.paths_between(b, a))
            .clone()
    }

    // ---- morphisms between indecomposable projectives ----

    fn push_term(&self, out: &mut Morph<F::E>, p: Path, c: F::E) {
        match out.binary_search_by(|(q, _)| q.cmp(&p)) {
            Ok(i) => {
                let s = self.field.add(&out[i].1, &c);
                if self.field.is_zero(&s) {
                    out.remove(i);
                } else {
                    out[i].1 = s;
                }
            }
            Err(i) => {
                if !self.field.is_zero(&c) {
                    out.insert(i, (p, c));
                }
            }
        }
    }

    pub fn m_add(&self, a: &Morph<F::E>, b: &Morph<F::E>) -> Morph<F::E> {
        let mut out = a.clone();
        for (p, c) in b {
            self.push_term(&mut out, p.clone(), c.clone());
        }
        out
    }

    pub fn m_scale(&self, a: &Morph<F::E>, s: &F::E) -> Morph<F::E> {
        if self.field.is_zero(s) {
            return Vec::new();
        }
        a.iter()
            .map(|(p, c)| (p.clone(), self.field.mul(c, s)))
            .collect()
    }

    /// `g ∘ f`.
    pub fn m_after(&self, g: &Morph<F::E>, f: &Morph<F::E>) -> Morph<F::E> {
        let mut out = Vec::new();
        for (p, a) in f {
            for (q, b) in g {
                if let Ok(Some(r)) = self.alg.compose(p, q) {
                    self.push_term(&mut out, r, self.field.mul(a, b));
                }
            }
        }
        out
    }

    fn unit_part(&self, m: &Morph<F::E>) -> Option<F::E> {
        m.iter()
            .find(|(p, _)| p.is_trivial())
            .map(|(_, c)| c.clone())
    }

    /// Inverse of `λ·e + n` with `n` in the radical: `λ⁻¹ Σ (−λ⁻¹ n)^k`.
    fn m_inverse(&self, u: &Morph<F::E>) -> Morph<F::E> {
        let lambda = self.unit_part(u).expect("unit component");
        let li = self.field.inv(&lambda).unwrap();
        let n: Morph<F::E> = u.iter().filter(|(p, _)| !p.is_trivial()).cloned().collect();
        let e = u.iter().find(|(p, _)| p.is_trivial()).unwrap().0.clone();
        let step = self.m_scale(&n, &self.field.neg(&li));
        let mut power: Morph<F::E> = vec![(e, self.field.one())];
        let mut sum = power.clone();
        loop {
            power = self.m_after(&step, &power);
            if power.is_empty() {
                break;
            }
            sum = self.m_add(&sum, &power);
        }
        self.m_scale(&sum, &li)
    }

    fn mat_mul(&self, g: &Mat<F::E>, f: &Mat<F::E>, inner: usize, cols: usize) -> Mat<F::E> {
        let rows = g.len();
        let mut out = zero_mat(rows, cols);
        for r in 0..rows {
            for k in 0..inner {
                if g[r][k].is_empty() {
                    continue;
                }
                for c in 0..cols {
                    if !f[k][c].is_empty() {
                        let t = self.m_after(&g[r][k], &f[k][c]);
                        out[r][c] = self.m_add(&out[r][c], &t);
                    }
                }
            }
        }
        out
    }

    // ---- embedding ----

    fn embed_terms(&self, terms: &[Term], rows: usize, cols: usize) -> Result<Mat<F::E>> {
        let mut m = zero_mat(rows, cols);
        for t in terms {
            let c = self.field.embed_summand(&t.coeff)?;
            self.push_term(&mut m[t.row][t.col], t.path.clone(), c);
        }
        Ok(m)
    }

    pub fn embed_complex(&self, c: &ProjComplex) -> Result<FComplex<F::E>> {
        if c.is_zero() {
            return Ok(FComplex::zero());
        }
        let slots: Vec<Vec<Slot>> = c.degrees().map(|d| c.slots(d).to_vec()).collect();
        let diffs = c
            .degrees()
            .take(slots.len() - 1)
            .map(|d| self.embed_terms(c.diff(d), c.slots(d + 1).len(), c.slots(d).len()))
            .collect::<Result<Vec<_>>>()?;
        Ok(FComplex {
            lo: c.lo(),
            slots,
            diffs,
        })
    }

    /// Embeds a symbolic map given as `(degree, terms)` blocks.
    pub fn embed_map(
        &self,
        map: &BTreeMap<i64, Vec<Term>>,
        x: &FComplex<F::E>,
        y: &FComplex<F::E>,
    ) -> Result<FMap<F::E>> {
        map.iter()
            .map(|(&d, terms)| {
                Ok((
                    d,
                    self.embed_terms(terms, y.slots(d).len(), x.slots(d).len())?,
                ))
            })
            .collect()
    }

    // ---- checks ----

    pub fn d_squared_zero(&self, c: &FComplex<F::E>) -> bool {
        (c.lo..c.hi() - 1).all(|d| {
            let a = c.diff(d).unwrap();
            let b = c.diff(d + 1).unwrap();
            self.mat_mul(b, a, c.slots(d + 1).len(), c.slots(d).len())
                .iter()
                .flatten()
                .all(Vec::is_empty)
        })
    }

    fn block(&self, m: &FMap<F::E>, d: i64, rows: usize, cols: usize) -> Mat<F::E> {
        m.get(&d).cloned().unwrap_or_else(|| zero_mat(rows, cols))
    }

    fn dmat(&self, c: &FComplex<F::E>, d: i64) -> Mat<F::E> {
        c.diff(d)
            .cloned()
            .unwrap_or_else(|| zero_mat(c.slots(d + 1).len(), c.slots(d).len()))
    }

    /// `d_Y g = g d_X` exactly.
    pub fn is_chain_map(&self, g: &FMap<F::E>, x: &FComplex<F::E>, y: &FComplex<F::E>) -> bool {
        let lo = x.lo.min(y.lo) - 1;
        let hi = x.hi().max(y.hi()) + 1;
        (lo..=hi).all(|d| {
            let (xd, xd1, yd, yd1) = (
                x.slots(d).len(),
                x.slots(d + 1).len(),
                y.slots(d).len(),
                y.slots(d + 1).len(),
            );
            let left = self.mat_mul(&self.dmat(y, d), &self.block(g, d, yd, xd), yd, xd);
            let right = self.mat_mul(&self.block(g, d + 1, yd1, xd1), &self.dmat(x, d), xd1, xd);
            (0..yd1).all(|r| (0..xd).all(|c| left[r][c] == right[r][c]))
        })
    }

    // ---- cones and minimization ----

    /// `C^i = X^{i+1} ⊕ Y^i` with differential `[[−d_X, 0], [g, d_Y]]`.
    pub fn mapping_cone(
        &self,
        g: &FMap<F::E>,
        x: &FComplex<F::E>,
        y: &FComplex<F::E>,
    ) -> Result<FComplex<F::E>> {
        if !self.is_chain_map(g, x, y) {
            return Err(Error::NotAChainMap("cone of a non-chain map".into()));
        }
        let (xlo, ylo) = if x.is_zero() {
            (y.lo, y.lo)
        } else {
            (x.lo - 1, x.hi() - 1)
        };
        let lo = if y.is_zero() { xlo } else { xlo.min(y.lo) };
        let hi = if y.is_zero() { ylo } else { ylo.max(y.hi()) };
        let hi = if x.is_zero() {
            y.hi()
        } else {
            hi.max(x.hi() - 1)
        };
        if x.is_zero() && y.is_zero() {
            return Ok(FComplex::zero());
        }
        let slots: Vec<Vec<Slot>> = (lo..=hi)
            .map(|i| {
                let mut s: Vec<Slot> = x
                    .slots(i + 1)
                    .iter()
                    .map(|s| Slot {
                        vertex: s.vertex,
                        label: format!("x{}", s.label),
                    })
                    .collect();
                s.extend(y.slots(i).iter().map(|s| Slot {
                    vertex: s.vertex,
                    label: format!("y{}", s.label),
                }));
                s
            })
            .collect();
        let mut diffs = Vec::new();
        for i in lo..hi {
            let (nx0, ny0) = (x.slots(i + 1).len(), y.slots(i).len());
            let (nx1, ny1) = (x.slots(i + 2).len(), y.slots(i + 1).len());
            let mut m = zero_mat(nx1 + ny1, nx0 + ny0);
            let dx = self.dmat(x, i + 1);
            for r in 0..nx1 {
                for c in 0..nx0 {
                    m[r][c] = self.m_scale(&dx[r][c], &self.field.neg(&self.field.one()));
                }
            }
            let gi = self.block(g, i + 1, ny1, nx0);
            for r in 0..ny1 {
                for c in 0..nx0 {
                    m[nx1 + r][c] = gi[r][c].clone();
                }
            }
            let dy = self.dmat(y, i);
            for r in 0..ny1 {
                for c in 0..ny0 {
                    m[nx1 + r][nx0 + c] = dy[r][c].clone();
                }
            }
            diffs.push(m);
        }
        Ok(FComplex { lo, slots, diffs })
    }

    fn find_unit(&self, c: &FComplex<F::E>) -> Option<(usize, usize, usize)> {
        for (i, m) in c.diffs.iter().enumerate() {
            for col in 0..c.slots[i].len() {
                for (row, r) in m.iter().enumerate() {
                    if c.slots[i][col].vertex == c.slots[i + 1][row].vertex
                        && self.unit_part(&r[col]).is_some()
                    {
                        return Some((i, row, col));
                    }
                }
            }
        }
        None
    }

    /// Cancels the unit component `d^i[row][col]`, updating the complementary
    /// block by `b₁ − b₂ u⁻¹ b₃`.
    pub fn eliminate(&self, c: &mut FComplex<F::E>, i: usize, row: usize, col: usize) {
        let u_inv = self.m_inverse(&c.diffs[i][row][col]);
        let m = &c.diffs[i];
        let mut next = m.clone();
        for r in 0..m.len() {
            if r == row || m[r][col].is_empty() {
                continue;
            }
            let b2u = self.m_after(&m[r][col], &u_inv);
            for k in 0..m[r].len() {
                if k == col || m[row][k].is_empty() {
                    continue;
                }
                let corr = self.m_after(&b2u, &m[row][k]);
                next[r][k] = self.m_add(
                    &next[r][k],
                    &self.m_scale(&corr, &self.field.neg(&self.field.one())),
                );
            }
        }
        next.remove(row);
        for r in next.iter_mut() {
            r.remove(col);
        }
        c.diffs[i] = next;
        if i > 0 {
            c.diffs[i - 1].remove(col);
        }
        if i + 1 < c.diffs.len() {
            for r in c.diffs[i + 1].iter_mut() {
                r.remove(row);
            }
        }
        c.slots[i].remove(col);
        c.slots[i + 1].remove(row);
    }

    /// Repeated elimination, lowest degree and leftmost unit first. Returns the
    /// minimal complex and the number of cancelled slot pairs.
    pub fn reduce_min(&self, c: &FComplex<F::E>) -> (FComplex<F::E>, usize) {
        let mut c = c.clone();
        let mut count = 0;
        while let Some((i, row, col)) = self.find_unit(&c) {
            self.eliminate(&mut c, i, row, col);
            count += 1;
        }
        // Trim empty ends.
        while c.slots.first().is_some_and(Vec::is_empty) {
            c.slots.remove(0);
            if !c.diffs.is_empty() {
                c.diffs.remove(0);
            }
            c.lo += 1;
        }
        while c.slots.last().is_some_and(Vec::is_empty) {
            c.slots.pop();
            c.diffs.pop();
        }
        if c.slots.is_empty() {
            return (FComplex::zero(), count);
        }
        (c, count)
    }

    // ---- spaces of maps ----

    /// Coordinates of degree-`shift` maps `X^d → Y^{d-shift}`: one unknown per
    /// slot pair and path.
    fn unknowns(&self, x: &FComplex<F::E>, y: &FComplex<F::E>, shift: i64) -> Vec<Unknown> {
        let mut out = Vec::new();
        for d in x.lo..=x.hi() {
            for (col, xs) in x.slots(d).iter().enumerate() {
                for (row, ys) in y.slots(d - shift).iter().enumerate() {
                    for p in self.hom_basis(xs.vertex, ys.vertex) {
                        out.push((d, row, col, p));
                    }
                }
            }
        }
        out
    }

    /// Vector of the map `g` in the degree-zero coordinates.
    fn vectorize(&self, g: &FMap<F::E>, index: &HashMap<Unknown, usize>, n: usize) -> Vec<F::E> {
        let mut v = vec![self.field.zero(); n];
        for (d, m) in g {
            for (r, row) in m.iter().enumerate() {
                for (c, e) in row.iter().enumerate() {
                    for (p, coeff) in e {
                        if let Some(&k) = index.get(&(*d, r, c, p.clone())) {
                            v[k] = coeff.clone();
                        }
                    }
                }
            }
        }
        v
    }

    pub fn map_from_coords(
        &self,
        v: &[F::E],
        unknowns: &[Unknown],
        x: &FComplex<F::E>,
        y: &FComplex<F::E>,
    ) -> FMap<F::E> {
        let mut g: FMap<F::E> = BTreeMap::new();
        for (k, (d, r, c, p)) in unknowns.iter().enumerate() {
            if self.field.is_zero(&v[k]) {
                continue;
            }
            let m = g
                .entry(*d)
                .or_insert_with(|| zero_mat(y.slots(*d).len(), x.slots(*d).len()));
            self.push_term(&mut m[*r][*c], p.clone(), v[k].clone());
        }
        g
    }

    /// Rows of `d_Y g − g d_X` as linear forms in the unknowns of `g`.
    fn chain_equations(
        &self,
        x: &FComplex<F::E>,
        y: &FComplex<F::E>,
        unknowns: &[Unknown],
    ) -> Vec<Vec<F::E>> {
        let n = unknowns.len();
        let mut eqs: HashMap<Unknown, Vec<F::E>> = HashMap::new();
        let one = self.field.one();
        let minus = self.field.neg(&one);
        for (k, (d, r, c, p)) in unknowns.iter().enumerate() {
            let single: Morph<F::E> = vec![(p.clone(), one.clone())];
            // d_Y^d ∘ g^d: lands in Y^{d+1} × X^d.
            if let Some(dy) = y.diff(*d) {
                for (r2, row) in dy.iter().enumerate() {
                    for (q, e) in self.m_after(&row[*r], &single) {
                        let v = eqs
                            .entry((*d, r2, *c, q))
                            .or_insert_with(|| vec![self.field.zero(); n]);
                        v[k] = self.field.add(&v[k], &e);
                    }
                }
            }
            // g^d ∘ d_X^{d-1}: lands in Y^d × X^{d-1}, with a minus sign.
            if let Some(dx) = x.diff(*d - 1) {
                for (c2, e0) in dx[*c].iter().enumerate() {
                    for (q, e) in self.m_after(&single, e0) {
                        let v = eqs
                            .entry((*d - 1, *r, c2, q))
                            .or_insert_with(|| vec![self.field.zero(); n]);
                        v[k] = self.field.add(&v[k], &self.field.mul(&e, &minus));
                    }
                }
            }
        }
        let mut keys: Vec<_> = eqs.keys().cloned().collect();
        keys.sort();
        keys.into_iter().map(|k| eqs.remove(&k).unwrap()).collect()
    }

    /// Chain maps supported on the given unknowns, as coordinate vectors.
    pub fn chain_maps_on(
        &self,
        x: &FComplex<F::E>,
        y: &FComplex<F::E>,
        unknowns: &[Unknown],
    ) -> Vec<Vec<F::E>> {
        let eqs = self.chain_equations(x, y, unknowns);
        kernel(&self.field, eqs, unknowns.len())
    }

    /// Basis of the space of degree-zero chain maps `X → Y`.
    pub fn chain_map_basis(&self, x: &FComplex<F::E>, y: &FComplex<F::E>) -> Vec<FMap<F::E>> {
        let unknowns = self.unknowns(x, y, 0);
        let eqs = self.chain_equations(x, y, &unknowns);
        kernel(&self.field, eqs, unknowns.len())
            .into_iter()
            .map(|v| self.map_from_coords(&v, &unknowns, x, y))
            .collect()
    }

    /// Vectors `d_Y h + h d_X` spanning the null-homotopic maps.
    fn homotopy_image(
        &self,
        x: &FComplex<F::E>,
        y: &FComplex<F::E>,
        index: &HashMap<Unknown, usize>,
        n: usize,
    ) -> Vec<Vec<F::E>> {
        let one = self.field.one();
        let mut out = Vec::new();
        for (d, row, col, p) in self.unknowns(x, y, 1) {
            // h: X^d → Y^{d-1}, component (row, col) = p.
            let single: Morph<F::E> = vec![(p, one.clone())];
            let mut g: FMap<F::E> = BTreeMap::new();
            if let Some(dy) = y.diff(d - 1) {
                let m = g
                    .entry(d)
                    .or_insert_with(|| zero_mat(y.slots(d).len(), x.slots(d).len()));
                for (r2, r) in dy.iter().enumerate() {
                    let t = self.m_after(&r[row], &single);
                    m[r2][col] = self.m_add(&m[r2][col], &t);
                }
            }
            if let Some(dx) = x.diff(d - 1) {
                let m = g
                    .entry(d - 1)
                    .or_insert_with(|| zero_mat(y.slots(d - 1).len(), x.slots(d - 1).len()));
                for (c2, e0) in dx[col].iter().enumerate() {
                    let t = self.m_after(&single, e0);
                    m[row][c2] = self.m_add(&m[row][c2], &t);
                }
            }
            out.push(self.vectorize(&g, index, n));
        }
        out
    }

    fn degree_zero_index(
        &self,
        x: &FComplex<F::E>,
        y: &FComplex<F::E>,
    ) -> (HashMap<Unknown, usize>, usize) {
        let unknowns = self.unknowns(x, y, 0);
        let n = unknowns.len();
        (
            unknowns
                .into_iter()
                .enumerate()
                .map(|(i, k)| (k, i))
                .collect(),
            n,
        )
    }

    /// Whether `g` lies in the span of `others` plus the null-homotopic maps.
    pub fn in_homotopy_span(
        &self,
        g: &FMap<F::E>,
        others: &[FMap<F::E>],
        x: &FComplex<F::E>,
        y: &FComplex<F::E>,
    ) -> bool {
        let (index, n) = self.degree_zero_index(x, y);
        let mut rows = self.homotopy_image(x, y, &index, n);
        rows.extend(others.iter().map(|o| self.vectorize(o, &index, n)));
        let base = rank(&self.field, rows.clone());
        rows.push(self.vectorize(g, &index, n));
        rank(&self.field, rows) == base
    }

    pub fn is_null_homotopic(
        &self,
        g: &FMap<F::E>,
        x: &FComplex<F::E>,
        y: &FComplex<F::E>,
    ) -> bool {
        self.in_homotopy_span(g, &[], x, y)
    }

    /// Whether a degree-zero map is invertible in every degree: modulo the
    /// radical only the trivial-path coefficients between equal vertices count.
    pub fn is_degreewise_invertible(
        &self,
        g: &FMap<F::E>,
        x: &FComplex<F::E>,
        y: &FComplex<F::E>,
    ) -> bool {
        let lo = x.lo.min(y.lo);
        let hi = x.hi().max(y.hi());
        (lo..=hi).all(|d| {
            let (xs, ys) = (x.slots(d), y.slots(d));
            if xs.len() != ys.len() {
                return false;
            }
            if xs.is_empty() {
                return true;
            }
            let block = g.get(&d);
            let m: Vec<Vec<F::E>> = (0..ys.len())
                .map(|r| {
                    (0..xs.len())
                        .map(|c| {
                            block
                                .and_then(|b| self.unit_part(&b[r][c]))
                                .filter(|_| xs[c].vertex == ys[r].vertex)
                                .unwrap_or_else(|| self.field.zero())
                        })
                        .collect()
                })
                .collect();
            rank(&self.field, m) == xs.len()
        })
    }

    /// Randomized isomorphism test between minimal complexes. `Some(k)` is the
    /// number of trials used by the first success.
    pub fn iso_probe<R: Rng>(
        &self,
        x: &FComplex<F::E>,
        y: &FComplex<F::E>,
        trials: usize,
        rng: &mut R,
    ) -> Option<usize> {
        if x.graded_dims() != y.graded_dims() {
            return None;
        }
        if x.is_zero() {
            return Some(0);
        }
        let basis = self.chain_map_basis(x, y);
        if basis.is_empty() {
            return None;
        }
        for t in 1..=trials {
            let mut g: FMap<F::E> = BTreeMap::new();
            for b in &basis {
                let s = self.field.random(rng);
                for (d, m) in b {
                    let acc = g
                        .entry(*d)
                        .or_insert_with(|| zero_mat(y.slots(*d).len(), x.slots(*d).len()));
                    for (r, row) in m.iter().enumerate() {
                        for (c, e) in row.iter().enumerate() {
                            if !e.is_empty() {
                                acc[r][c] = self.m_add(&acc[r][c], &self.m_scale(e, &s));
                            }
                        }
                    }
                }
            }
            if self.is_degreewise_invertible(&g, x, y) && self.is_chain_map(&g, x, y) {
                return Some(t);
            }
        }
        None
    }

    /// Builds the cone of `g: X → Y`, minimizes both it and `claimed`, and
    /// probes for an isomorphism.
    pub fn verify_cone<R: Rng>(
        &self,
        g: &FMap<F::E>,
        x: &FComplex<F::E>,
        y: &FComplex<F::E>,
        claimed: &FComplex<F::E>,
        trials: usize,
        rng: &mut R,
    ) -> Result<VerifyReport> {
        let cone = self.mapping_cone(g, x, y)?;
        let (min, eliminated) = self.reduce_min(&cone);
        let (claimed, _) = self.reduce_min(claimed);
        let graded_dims_match = min.graded_dims() == claimed.graded_dims();
        let found = if graded_dims_match {
            self.iso_probe(&min, &claimed, trials, rng)
        } else {
            None
        };
        Ok(VerifyReport {
            graded_dims_match,
            iso: found.is_some(),
            trials_used: found.unwrap_or(if graded_dims_match { trials } else { 0 }),
            field: self.field.describe(),
            eliminated_pairs: eliminated,
        })
    }
}

/// Row-reduces in place; returns pivot columns.
#[allow(clippy::needless_range_loop)]
fn row_reduce<F: Field>(f: &F, m: &mut [Vec<F::E>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !f.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, p);
        let inv = f.inv(&m[r][c]).unwrap();
        for k in c..ncols {
            m[r][k] = f.mul(&m[r][k], &inv);
        }
        for i in 0..m.len() {
            if i != r && !f.is_zero(&m[i][c]) {
                let factor = m[i][c].clone();
                for k in c..ncols {
                    if !f.is_zero(&m[r][k]) {
                        let t = f.mul(&factor, &m[r][k]);
                        m[i][k] = f.sub(&m[i][k], &t);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(f: &F, mut rows: Vec<Vec<F::E>>) -> usize {
    let n = rows.first().map_or(0, Vec::len);
    row_reduce(f, &mut rows, n).len()
}

/// Basis of `{v : A v = 0}` for `A` given by rows of length `n`.
pub fn kernel<F: Field>(f: &F, mut rows: Vec<Vec<F::E>>, n: usize) -> Vec<Vec<F::E>> {
    let pivots = row_reduce(f, &mut rows, n);
    let mut is_pivot = vec![None; n];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    (0..n)
        .filter(|&c| is_pivot[c].is_none())
        .map(|free| {
            let mut v = vec![f.zero(); n];
            v[free] = f.one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = f.neg(&rows[r][free]);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{build_walk_complex, Builder};
    use crate::field::Fp;
    use crate::fixtures::{final_algebra, kronecker};
    use crate::scalars::SummandScalar;
    use crate::walks::parse_walk;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn complex(o: &Oracle<Fp>, w: &str) -> FComplex<u64> {
        let walk = parse_walk(w, o.alg).unwrap();
        o.embed_complex(&build_walk_complex(&walk, 1)).unwrap()
    }

    fn identity(o: &Oracle<Fp>, x: &FComplex<u64>) -> FMap<u64> {
        (x.lo..=x.hi())
            .map(|d| {
                let s = x.slots(d);
                let mut m = zero_mat(s.len(), s.len());
                for (i, sl) in s.iter().enumerate() {
                    m[i][i] = vec![(Path::trivial(sl.vertex), o.field.one())];
                }
                (d, m)
            })
            .collect()
    }

    #[test]
    fn walk_complexes_square_to_zero() {
        let k = kronecker();
        let o = Oracle::new(&k, Fp::new(101).unwrap());
        for w in ["d ~c ~a b @ 3", "(d ~c)^2 ~a b @ 5", "d ~c ~a", "b*c"] {
            assert!(o.d_squared_zero(&complex(&o, w)), "{w}");
        }
        let f = final_algebra();
        let o = Oracle::new(&f, Fp::new(101).unwrap());
        assert!(o.d_squared_zero(&complex(&o, "~a b*c ~a b ~e d*b*c @ 36")));
    }

    #[test]
    fn cone_of_identity_is_contractible() {
        let k = kronecker();
        let o = Oracle::new(&k, Fp::new(101).unwrap());
        let x = complex(&o, "d ~c ~a b @ 7");
        let id = identity(&o, &x);
        assert!(o.is_chain_map(&id, &x, &x));
        assert!(!o.is_null_homotopic(&id, &x, &x));
        let cone = o.mapping_cone(&id, &x, &x).unwrap();
        assert!(o.d_squared_zero(&cone));
        let (min, n) = o.reduce_min(&cone);
        assert!(min.is_zero());
        assert_eq!(n, x.total_rank());
    }

    #[test]
    fn planted_unit_elimination() {
        // P1 ⊕ P2 → P1 ⊕ P2 with u = λ·e_1, b3 = a, b2 = 0-map slot, b1 = μ·e_2:
        // after cancelling u the remaining entry is b1 − b2 u⁻¹ b3.
        let k = kronecker();
        let f = Fp::new(101).unwrap();
        let o = Oracle::new(&k, f.clone());
        let (lam, mu) = (
            SummandScalar::exact("5".parse().unwrap()),
            SummandScalar::exact("3".parse().unwrap()),
        );
        let mut b = Builder::default();
        let x1 = b.slot(0, 0, "x1".into());
        let x2 = b.slot(0, 1, "x2".into());
        let y1 = b.slot(1, 0, "y1".into());
        let y2 = b.slot(1, 1, "y2".into());
        let a = k.parse_path("a").unwrap();
        b.arrow(x1, y1, Path::trivial(0), lam);
        b.arrow(x2, y1, a.clone(), SummandScalar::one());
        b.arrow(x1, y2, a.clone(), SummandScalar::one());
        b.arrow(x2, y2, Path::trivial(1), mu);
        let c = o.embed_complex(&b.finish()).unwrap();
        let mut e = c.clone();
        o.eliminate(&mut e, 0, 0, 0);
        // a∘a = 0 here, so b₂u⁻¹b₃ vanishes and the block is μ·e_2.
        assert_eq!(e.diffs[0][0][0], vec![(Path::trivial(1), 3)]);
        let (min, n) = o.reduce_min(&c);
        assert!(min.is_zero());
        assert_eq!(n, 2);
    }

    #[test]
    fn distinct_band_parameters_are_not_isomorphic() {
        let k = kronecker();
        let o = Oracle::new(&k, Fp::new(101).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let x = complex(&o, "d ~c ~a b @ 2");
        let y = complex(&o, "d ~c ~a b @ 3");
        let x2 = complex(&o, "~a b d ~c @ 2");
        assert!(o.iso_probe(&x, &x2, 16, &mut rng).is_some());
        assert!(o.iso_probe(&x, &y, 16, &mut rng).is_none());
    }

    #[test]
    fn endomorphisms_of_stalk_projective() {
        let k = kronecker();
        let o = Oracle::new(&k, Fp::new(101).unwrap());
        let p = complex(&o, "e_1");
        assert_eq!(o.chain_map_basis(&p, &p).len(), k.paths_between(0, 0).len());
        let q = complex(&o, "e_2");
        // Hom(P_2, P_1) is spanned by a and b; nothing goes back.
        assert_eq!(o.chain_map_basis(&q, &p).len(), 2);
        assert!(o.chain_map_basis(&p, &q).is_empty());
    }

    #[test]
    fn linear_algebra_helpers() {
        let f = Fp::new(7).unwrap();
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6]];
        assert_eq!(rank(&f, rows.clone()), 1);
        let ker = kernel(&f, rows, 3);
        assert_eq!(ker.len(), 2);
        for v in ker {
            assert_eq!((v[0] + 2 * v[1] + 3 * v[2]) % 7, 0);
        }
    }
}
