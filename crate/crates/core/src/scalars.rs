//! Monomial cyclotomic scalars `q·ζ_N^e` with `q` rational.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// `magnitude · ζ_order^exponent`, with `magnitude > 0` (or the zero scalar),
/// `0 ≤ exponent < order` and `gcd(exponent, order) = 1` unless `order = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloScalar {
    magnitude: BigRational,
    order: u64,
    exponent: u64,
}

fn reduce_phase(order: u64, exponent: u64) -> (u64, u64) {
    let e = exponent % order;
    if e == 0 {
        return (1, 0);
    }
    let g = e.gcd(&order);
    (order / g, e / g)
}

impl CycloScalar {
    pub fn new(magnitude: BigRational, order: u64, exponent: u64) -> Self {
        assert!(order >= 1, "root order must be positive");
        if magnitude.is_zero() {
            return Self::zero();
        }
        let (mut order, mut exponent) = (order, exponent);
        let mut magnitude = magnitude;
        if magnitude.is_negative() {
            magnitude = -magnitude;
            // −1 = ζ_2; fold into the phase.
            let l = order.lcm(&2);
            exponent = exponent * (l / order) + l / 2;
            order = l;
        }
        let (order, exponent) = reduce_phase(order, exponent);
        CycloScalar {
            magnitude,
            order,
            exponent,
        }
    }

    pub fn zero() -> Self {
        CycloScalar {
            magnitude: BigRational::zero(),
            order: 1,
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(BigInt::from(n)), 1, 0)
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::new(BigRational::new(num.into(), den.into()), 1, 0)
    }

    /// `ζ_k`, a primitive `k`-th root of unity.
    pub fn unity_root(k: u64) -> Self {
        Self::new(BigRational::one(), k, 1)
    }

    pub fn magnitude(&self) -> &BigRational {
        &self.magnitude
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.magnitude.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.magnitude.is_one() && self.order == 1
    }

    /// Rational value, if the phase is ±1.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.order {
            1 => Some(self.magnitude.clone()),
            2 => Some(-self.magnitude.clone()),
            _ => None,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let l = self.order.lcm(&other.order);
        let e = self.exponent * (l / self.order) + other.exponent * (l / other.order);
        Self::new(&self.magnitude * &other.magnitude, l, e)
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero scalar");
        Self::new(
            self.magnitude.recip(),
            self.order,
            self.order - self.exponent,
        )
    }

    pub fn neg(&self) -> Self {
        self.mul(&Self::from_int(-1))
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    pub fn pow(&self, n: i64) -> Self {
        if n < 0 {
            return self.inv().pow(-n);
        }
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// The canonical `k`-th root: rational root of the magnitude times
    /// `ζ_{Nk}^e`. Fails when the magnitude has no rational `k`-th root.
    pub fn kth_root(&self, k: u32) -> Result<Self> {
        assert!(k >= 1, "root degree must be positive");
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let exact = |n: &BigInt| -> Option<BigInt> {
            let r = n.nth_root(k);
            (num_traits::pow(r.clone(), k as usize) == *n).then_some(r)
        };
        let (num, den) = (self.magnitude.numer(), self.magnitude.denom());
        match (exact(num), exact(den)) {
            (Some(a), Some(b)) => Ok(Self::new(
                BigRational::new(a, b),
                self.order * k as u64,
                self.exponent,
            )),
            _ => Err(Error::IrrationalRoot {
                value: self.to_string(),
                k,
            }),
        }
    }

    pub fn to_complex(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let m = self.magnitude.to_f64().unwrap_or(f64::NAN);
        let t = std::f64::consts::TAU * self.exponent as f64 / self.order as f64;
        (m * t.cos(), m * t.sin())
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.order {
            1 => f.write_str(&fmt_rational(&self.magnitude)),
            2 => write!(f, "-{}", fmt_rational(&self.magnitude)),
            n => write!(
                f,
                "{}*z({})^{}",
                fmt_rational(&self.magnitude),
                n,
                self.exponent
            ),
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    let int = |t: &str| BigInt::from_str(t.trim()).map_err(|_| bad());
    let q = match s.split_once('/') {
        Some((n, d)) => {
            let d = int(d)?;
            if d.sign() == Sign::NoSign {
                return Err(bad());
            }
            BigRational::new(int(n)?, d)
        }
        None => BigRational::from_integer(int(s)?),
    };
    Ok(q)
}

impl FromStr for CycloScalar {
    type Err = Error;

    /// Grammar: `q`, `-q`, `q*z(N)^e`; `q` may be a fraction `a/b`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("bad scalar `{s}`"));
        let Some(pos) = s.find("z(") else {
            return Ok(Self::new(parse_rational(&s)?, 1, 0));
        };
        let (coeff, phase) = s.split_at(pos);
        let q = match coeff.strip_suffix('*') {
            Some(c) => parse_rational(c)?,
            None if coeff.is_empty() => BigRational::one(),
            None if coeff == "-" => -BigRational::one(),
            None => return Err(bad()),
        };
        let rest = &phase[2..];
        let (n, tail) = rest.split_once(')').ok_or_else(bad)?;
        let n: u64 = n.parse().map_err(|_| bad())?;
        let e: u64 = match tail {
            "" => 1,
            t => t
                .strip_prefix('^')
                .ok_or_else(bad)?
                .parse()
                .map_err(|_| bad())?,
        };
        if n == 0 {
            return Err(bad());
        }
        Ok(Self::new(q, n, e))
    }
}

impl Serialize for CycloScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CycloScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A summand scalar: exact, or `factor · root(radicand, k)^(±1)` for a fixed
/// but unspecified `k`-th root when no rational root exists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "lowercase")]
pub enum SummandScalar {
    Exact {
        value: CycloScalar,
    },
    Root {
        radicand: CycloScalar,
        k: u32,
        inverse: bool,
        factor: CycloScalar,
    },
}

impl SummandScalar {
    pub fn exact(value: CycloScalar) -> Self {
        SummandScalar::Exact { value }
    }

    pub fn one() -> Self {
        Self::exact(CycloScalar::one())
    }

    pub fn as_exact(&self) -> Option<&CycloScalar> {
        match self {
            SummandScalar::Exact { value } => Some(value),
            SummandScalar::Root { .. } => None,
        }
    }

    pub fn scale(&self, c: &CycloScalar) -> Self {
        match self {
            SummandScalar::Exact { value } => Self::exact(value.mul(c)),
            SummandScalar::Root {
                radicand,
                k,
                inverse,
                factor,
            } => SummandScalar::Root {
                radicand: radicand.clone(),
                k: *k,
                inverse: *inverse,
                factor: factor.mul(c),
            },
        }
    }

    pub fn inv(&self) -> Self {
        match self {
            SummandScalar::Exact { value } => Self::exact(value.inv()),
            SummandScalar::Root {
                radicand,
                k,
                inverse,
                factor,
            } => SummandScalar::Root {
                radicand: radicand.clone(),
                k: *k,
                inverse: !inverse,
                factor: factor.inv(),
            },
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&CycloScalar::from_int(-1))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            SummandScalar::Exact { value } => value.is_zero(),
            SummandScalar::Root {
                radicand, factor, ..
            } => radicand.is_zero() || factor.is_zero(),
        }
    }

    /// Root-of-unity orders the value needs in a verification field.
    pub fn orders(&self) -> Vec<u64> {
        match self {
            SummandScalar::Exact { value } => vec![value.order()],
            SummandScalar::Root {
                radicand,
                k,
                factor,
                ..
            } => {
                vec![radicand.order(), factor.order(), *k as u64]
            }
        }
    }
}

impl fmt::Display for SummandScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SummandScalar::Exact { value } => value.fmt(f),
            SummandScalar::Root {
                radicand,
                k,
                inverse,
                factor,
            } => {
                write!(f, "root({radicand},{k})")?;
                if *inverse {
                    f.write_str("^-1")?;
                }
                if !factor.is_one() {
                    write!(f, "*{factor}")?;
                }
                Ok(())
            }
        }
    }
}

impl From<CycloScalar> for SummandScalar {
    fn from(value: CycloScalar) -> Self {
        SummandScalar::exact(value)
    }
}

/// All `k` solutions of `x^k = s`: `ζ_k^i · μ` for `i = 1..=k`, with `μ` the
/// canonical root (symbolic when irrational).
pub fn all_kth_roots(s: &CycloScalar, k: u32) -> Vec<SummandScalar> {
    let omega = CycloScalar::unity_root(k as u64);
    match s.kth_root(k) {
        Ok(mu) => (1..=k as i64)
            .map(|i| SummandScalar::exact(omega.pow(i).mul(&mu)))
            .collect(),
        Err(_) => (1..=k as i64)
            .map(|i| SummandScalar::Root {
                radicand: s.clone(),
                k,
                inverse: false,
                factor: omega.pow(i),
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sc(s: &str) -> CycloScalar {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(sc("-1"), CycloScalar::new(BigRational::one(), 2, 1));
        assert_eq!(sc("3*z(4)^1").to_string(), "3*z(4)^1");
        assert_eq!(sc("3*z(4)^2"), sc("-3"));
        assert_eq!(sc("-3*z(4)^1"), sc("3*z(4)^3"));
        assert_eq!(sc("2/4"), CycloScalar::from_ratio(1, 2));
        assert_eq!(sc("z(3)"), CycloScalar::unity_root(3));
        assert!("z(0)".parse::<CycloScalar>().is_err());
        assert!("x".parse::<CycloScalar>().is_err());
    }

    #[test]
    fn roots() {
        assert_eq!(sc("-9").kth_root(2).unwrap(), sc("3*z(4)^1"));
        assert_eq!(sc("1").kth_root(1).unwrap(), sc("1"));
        assert_eq!(sc("1").kth_root(3).unwrap(), sc("1"));
        assert_eq!(sc("9/4").kth_root(2).unwrap(), sc("3/2"));
        assert!(matches!(
            sc("4").kth_root(3),
            Err(Error::IrrationalRoot { .. })
        ));
    }

    #[test]
    fn unity_roots() {
        assert!(CycloScalar::unity_root(1).is_one());
        assert_eq!(CycloScalar::unity_root(2), sc("-1"));
        let z4 = CycloScalar::unity_root(4);
        assert_eq!(z4.pow(2), sc("-1"));
        assert!(z4.pow(4).is_one());
    }

    #[test]
    fn square_roots_of_minus_nine() {
        let roots = all_kth_roots(&sc("-9"), 2);
        let vals: Vec<_> = roots
            .iter()
            .map(|r| r.as_exact().unwrap().clone())
            .collect();
        assert!(vals.contains(&sc("3*z(4)^1")));
        assert!(vals.contains(&sc("-3*z(4)^1")));
        let sym = all_kth_roots(&sc("4"), 3);
        assert!(sym.iter().all(|r| r.as_exact().is_none()));
    }

    fn scalar() -> impl Strategy<Value = CycloScalar> {
        (-20i64..20, 1i64..8, 1u64..13, 0u64..13).prop_filter_map("nonzero", |(n, d, o, e)| {
            (n != 0).then(|| CycloScalar::new(BigRational::new(n.into(), d.into()), o, e))
        })
    }

    proptest! {
        #[test]
        fn root_power_roundtrip(s in scalar(), k in 1u32..5) {
            let s = s.pow(k as i64);
            let r = s.kth_root(k).unwrap();
            prop_assert_eq!(r.pow(k as i64), s);
        }

        #[test]
        fn all_roots_solve(s in scalar(), k in 1u32..7) {
            let s = s.pow(k as i64);
            let roots = all_kth_roots(&s, k);
            let vals: std::collections::HashSet<_> =
                roots.iter().map(|r| r.as_exact().unwrap().clone()).collect();
            prop_assert_eq!(vals.len(), k as usize);
            for v in vals {
                prop_assert_eq!(v.pow(k as i64), s.clone());
            }
        }

        #[test]
        fn group_laws(a in scalar(), b in scalar()) {
            prop_assert!(a.mul(&a.inv()).is_one());
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).div(&b), a.clone());
            let printed: CycloScalar = a.to_string().parse().unwrap();
            prop_assert_eq!(printed, a);
        }
    }
}
