//! Concrete fields for the oracle: a prime field large enough to contain the
//! needed roots of unity, and exact cyclotomic fields `Q(ζ_N)`.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::scalars::{CycloScalar, SummandScalar};

pub trait Field: Clone + Debug + Send + Sync {
    type E: Clone + Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Option<Self::E>;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn random<R: Rng>(&self, rng: &mut R) -> Self::E;
    fn int(&self, n: i64) -> Self::E;
    fn embed(&self, s: &CycloScalar) -> Result<Self::E>;
    fn embed_summand(&self, s: &SummandScalar) -> Result<Self::E>;
    fn describe(&self) -> String;

    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::E) -> bool {
        *a == self.one()
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The prime field `F_p` with a fixed generator of `F_p^*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fp {
    p: u64,
    generator: u64,
}

pub const PRIME_FLOOR: u64 = 1_000_000;

impl Fp {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::Invalid(format!("{p} is not a supported prime")));
        }
        let factors = prime_factors(p - 1);
        let generator = (2..p)
            .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
            .unwrap_or(1);
        Ok(Fp { p, generator })
    }

    /// Smallest prime above `10^6` whose unit group contains every needed
    /// root of unity and in which every listed scalar has its `k`-th root.
    pub fn for_requirements(scalars: &[SummandScalar]) -> Result<Self> {
        let mut order = 1u64;
        for s in scalars {
            for o in s.orders() {
                order = order.lcm(&o);
            }
        }
        let mut p = PRIME_FLOOR + 1;
        loop {
            if (p - 1).is_multiple_of(order) && is_prime(p) {
                let f = Fp::new(p)?;
                if scalars.iter().all(|s| f.embed_summand(s).is_ok()) {
                    return Ok(f);
                }
            }
            p += 1;
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_int(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        n.mod_floor(&p).to_u64().unwrap()
    }

    fn rational(&self, q: &BigRational) -> Result<u64> {
        let d = self.reduce_int(q.denom());
        if d == 0 {
            return Err(Error::OrderMismatch {
                order: self.p,
                reason: format!("denominator of {q} vanishes mod {}", self.p),
            });
        }
        Ok(self.mul(&self.reduce_int(q.numer()), &pow_mod(d, self.p - 2, self.p)))
    }

    fn unity(&self, order: u64, exponent: u64) -> Result<u64> {
        if !(self.p - 1).is_multiple_of(order) {
            return Err(Error::OrderMismatch {
                order,
                reason: format!("{order} does not divide {} - 1", self.p),
            });
        }
        let z = pow_mod(self.generator, (self.p - 1) / order, self.p);
        Ok(pow_mod(z, exponent, self.p))
    }

    fn discrete_log(&self, x: u64) -> Option<u64> {
        let n = self.p - 1;
        let m = (n as f64).sqrt().ceil() as u64 + 1;
        let mut table = std::collections::HashMap::with_capacity(m as usize);
        let mut cur = 1u64;
        for j in 0..m {
            table.entry(cur).or_insert(j);
            cur = self.mul(&cur, &self.generator);
        }
        let step = pow_mod(pow_mod(self.generator, m, self.p), self.p - 2, self.p);
        let mut gamma = x;
        for i in 0..m {
            if let Some(&j) = table.get(&gamma) {
                return Some((i * m + j) % n);
            }
            gamma = self.mul(&gamma, &step);
        }
        None
    }

    /// A deterministic `k`-th root of `x`, if one exists.
    pub fn kth_root(&self, x: u64, k: u64) -> Option<u64> {
        if x == 0 {
            return Some(0);
        }
        let n = self.p - 1;
        let l = self.discrete_log(x)?;
        let d = k.gcd(&n);
        if l % d != 0 {
            return None;
        }
        let (k1, n1) = ((k / d) as i64, (n / d) as i64);
        let inv = k1.extended_gcd(&n1).x.rem_euclid(n1) as u64;
        let e = ((l / d) as u128 * inv as u128 % n1 as u128) as u64;
        Some(pow_mod(self.generator, e, self.p))
    }
}

impl Field for Fp {
    type E = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| pow_mod(*a, self.p - 2, self.p))
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn random<R: Rng>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn int(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn embed(&self, s: &CycloScalar) -> Result<u64> {
        if s.is_zero() {
            return Ok(0);
        }
        let q = self.rational(s.magnitude())?;
        Ok(self.mul(&q, &self.unity(s.order(), s.exponent())?))
    }
    fn embed_summand(&self, s: &SummandScalar) -> Result<u64> {
        match s {
            SummandScalar::Exact { value } => self.embed(value),
            SummandScalar::Root {
                radicand,
                k,
                inverse,
                factor,
            } => {
                let r = self.embed(radicand)?;
                let root = self
                    .kth_root(r, *k as u64)
                    .ok_or_else(|| Error::OrderMismatch {
                        order: *k as u64,
                        reason: format!("{radicand} has no {k}-th root mod {}", self.p),
                    })?;
                let root = if *inverse {
                    self.inv(&root).unwrap()
                } else {
                    root
                };
                Ok(self.mul(&root, &self.embed(factor)?))
            }
        }
    }
    fn describe(&self) -> String {
        format!("F_{}", self.p)
    }
}

type Poly = Vec<BigRational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Poly, Poly) {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let lead = b.last().expect("division by zero polynomial").clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lead;
        for (j, y) in b.iter().enumerate() {
            r[shift + j] -= &c * y;
        }
        q[shift] = c;
        r = trim(r);
    }
    (trim(q), r)
}

fn cyclotomic_poly(n: u64) -> Poly {
    let mut num: Poly = vec![BigRational::zero(); n as usize + 1];
    num[0] = -BigRational::one();
    num[n as usize] = BigRational::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = poly_divmod(&num, &cyclotomic_poly(d)).0;
        }
    }
    num
}

/// `Q(ζ_N)` as `Q[x]/Φ_N(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclo {
    n: u64,
    modulus: Poly,
}

impl Cyclo {
    pub fn new(n: u64) -> Self {
        assert!(n >= 1);
        Cyclo {
            n,
            modulus: cyclotomic_poly(n),
        }
    }

    /// Smallest cyclotomic field containing every listed scalar.
    pub fn for_requirements(scalars: &[SummandScalar]) -> Result<Self> {
        let mut n = 1u64;
        for s in scalars {
            match s {
                SummandScalar::Exact { value } => n = n.lcm(&value.order()),
                SummandScalar::Root { radicand, k, .. } => {
                    return Err(Error::OrderMismatch {
                        order: *k as u64,
                        reason: format!("root({radicand},{k}) is not cyclotomic over Q"),
                    })
                }
            }
        }
        // Q(ζ_N) = Q(ζ_2N) for odd N; keep 2 | N so that −1 has an exponent.
        Ok(Cyclo::new(n.lcm(&2)))
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    fn reduce(&self, p: &[BigRational]) -> Poly {
        poly_divmod(p, &self.modulus).1
    }
}

impl Field for Cyclo {
    type E = Poly;

    fn zero(&self) -> Poly {
        Vec::new()
    }
    fn one(&self) -> Poly {
        vec![BigRational::one()]
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let mut out = vec![BigRational::zero(); a.len().max(b.len())];
        for (i, x) in a.iter().enumerate() {
            out[i] += x;
        }
        for (i, y) in b.iter().enumerate() {
            out[i] += y;
        }
        trim(out)
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.reduce(&poly_mul(a, b))
    }
    fn neg(&self, a: &Poly) -> Poly {
        a.iter().map(|x| -x).collect()
    }
    fn inv(&self, a: &Poly) -> Option<Poly> {
        if a.is_empty() {
            return None;
        }
        // Extended Euclid in Q[x]: s·a + t·Φ = g, g a nonzero constant.
        let (mut r0, mut r1) = (self.modulus.clone(), a.clone());
        let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![BigRational::one()]);
        while r1.len() > 1 {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = self.add(&s0, &self.neg(&poly_mul(&q, &s1)));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        let c = r1.first()?.clone();
        if c.is_zero() {
            return None;
        }
        let s: Poly = s1.iter().map(|x| x / &c).collect();
        Some(self.reduce(&s))
    }
    fn is_zero(&self, a: &Poly) -> bool {
        a.is_empty()
    }
    fn random<R: Rng>(&self, rng: &mut R) -> Poly {
        let deg = self.modulus.len() - 1;
        trim(
            (0..deg)
                .map(|_| BigRational::from_integer(rng.gen_range(-50i64..=50).into()))
                .collect(),
        )
    }
    fn int(&self, n: i64) -> Poly {
        trim(vec![BigRational::from_integer(n.into())])
    }
    fn embed(&self, s: &CycloScalar) -> Result<Poly> {
        if s.is_zero() {
            return Ok(Vec::new());
        }
        if !self.n.is_multiple_of(s.order()) {
            return Err(Error::OrderMismatch {
                order: s.order(),
                reason: format!("ζ_{} is not in Q(ζ_{})", s.order(), self.n),
            });
        }
        let e = (s.exponent() * (self.n / s.order())) as usize;
        let mut mono = vec![BigRational::zero(); e + 1];
        mono[e] = s.magnitude().clone();
        Ok(self.reduce(&mono))
    }
    fn embed_summand(&self, s: &SummandScalar) -> Result<Poly> {
        match s {
            SummandScalar::Exact { value } => self.embed(value),
            SummandScalar::Root { radicand, k, .. } => Err(Error::OrderMismatch {
                order: *k as u64,
                reason: format!("root({radicand},{k}) is not cyclotomic over Q"),
            }),
        }
    }
    fn describe(&self) -> String {
        format!("Q(z({}))", self.n)
    }
}
