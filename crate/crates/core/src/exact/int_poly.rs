//! Sparse univariate polynomials over the integers.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A polynomial in `z` with arbitrary-precision integer coefficients, stored
/// as an exponent-to-coefficient map. No stored coefficient is ever zero, so
/// structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    terms: BTreeMap<u64, BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `coeff * z^exp`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: u64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs. Repeated
    /// exponents are summed and zero results dropped.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// The 0/1 polynomial `sum_{j in exps} z^j`.
    pub fn indicator<I: IntoIterator<Item = u64>>(exps: I) -> Self {
        Self::from_terms(exps.into_iter().map(|e| (e, 1)))
    }

    /// `1 + z^step + z^{2 step} + ... + z^{(count-1) step}`.
    pub fn geometric(step: u64, count: u64) -> Self {
        Self::indicator((0..count).map(|i| i * step))
    }

    /// `1 - z^exp`.
    pub fn one_minus_z_pow(exp: u64) -> Self {
        Self::from_terms([(0, 1), (exp, -1)])
    }

    /// `z^exp - 1`.
    pub fn z_pow_minus_one(exp: u64) -> Self {
        Self::from_terms([(exp, 1), (0, -1)])
    }

    fn add_term(&mut self, exp: u64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading(&self) -> Option<(u64, &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: u64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Exponents carrying a nonzero coefficient, increasing.
    pub fn support(&self) -> Vec<u64> {
        self.terms.keys().copied().collect()
    }

    pub fn is_zero_one(&self) -> bool {
        self.terms.values().all(One::is_one)
    }

    /// Multiplies by `z^shift`.
    pub fn shifted(&self, shift: u64) -> Self {
        IntPoly {
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    pub fn eval(&self, z: &BigInt) -> BigInt {
        // Horner over the sparse exponents, from the top down.
        let mut acc = BigInt::zero();
        let mut prev = match self.degree() {
            Some(d) => d,
            None => return acc,
        };
        for (&e, c) in self.terms.iter().rev() {
            acc *= Pow::pow(z, prev - e);
            acc += c;
            prev = e;
        }
        acc * Pow::pow(z, prev)
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Fails with [`Error::NotDivisible`] when the remainder is nonzero or a
    /// leading coefficient does not divide over the integers.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let (dd, dl) = divisor.leading().ok_or(Error::NotDivisible)?;
        let dl = dl.clone();
        let mut rem = self.clone();
        let mut quot = IntPoly::zero();
        while let Some((re, rc)) = rem.leading() {
            if re < dd {
                return Err(Error::NotDivisible);
            }
            let (c, r) = rc.div_rem(&dl);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            let shift = re - dd;
            for (e, dc) in divisor.terms() {
                rem.add_term(e + shift, -(&c * dc));
            }
            quot.add_term(shift, c);
        }
        Ok(quot)
    }

    /// The first `len` coefficients of the power series `self / denominator`.
    ///
    /// The denominator's constant term must be `1` or `-1`, so the expansion
    /// stays integral.
    pub fn series_div(&self, denominator: &IntPoly, len: usize) -> Result<Vec<BigInt>> {
        let lead = denominator.coeff(0);
        if lead.abs() != BigInt::one() {
            return Err(Error::NotDivisible);
        }
        let tail: Vec<(usize, &BigInt)> = denominator
            .terms()
            .filter(|&(e, _)| e > 0)
            .filter_map(|(e, c)| usize::try_from(e).ok().map(|e| (e, c)))
            .filter(|&(e, _)| e < len)
            .collect();
        let mut out: Vec<BigInt> = vec![BigInt::zero(); len];
        for (e, c) in self.terms() {
            if let Ok(e) = usize::try_from(e) {
                if e < len {
                    out[e] = c.clone();
                }
            }
        }
        for j in 0..len {
            let mut acc = std::mem::take(&mut out[j]);
            for &(e, c) in &tail {
                if e > j {
                    break;
                }
                acc -= c * &out[j - e];
            }
            out[j] = if lead.is_one() { acc } else { -acc };
        }
        Ok(out)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        let mut out = IntPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |acc, p| &acc * &p)
    }
}

/// Canonical text form: terms in increasing exponent order, e.g.
/// `1 - z^7 + 3*z^15`. The zero polynomial prints as `0`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let var = match e {
                0 => None,
                1 => Some("z".to_string()),
                _ => Some(format!("z^{e}")),
            };
            match var {
                None => write!(f, "{mag}")?,
                Some(v) if mag.is_one() => f.write_str(&v)?,
                Some(v) => write!(f, "{mag}*{v}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    /// Parses the canonical text form (whitespace is ignored, terms may come
    /// in any order).
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty input".into()));
        }
        let bytes = compact.as_bytes();
        let mut pos = 0;
        let mut poly = IntPoly::zero();
        let digits = |pos: &mut usize| -> Option<&str> {
            let start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            (start < *pos).then(|| &compact[start..*pos])
        };
        while pos < bytes.len() {
            let mut negative = false;
            match bytes[pos] {
                b'+' if pos > 0 => pos += 1,
                b'-' => {
                    negative = true;
                    pos += 1;
                }
                _ if pos > 0 => return Err(Error::Parse(format!("expected sign at {pos}"))),
                _ => {}
            }
            let coeff = match digits(&mut pos) {
                Some(d) => {
                    let c: BigInt = d.parse().map_err(|_| Error::Parse(d.into()))?;
                    if pos < bytes.len() && bytes[pos] == b'*' {
                        pos += 1;
                        if bytes.get(pos) != Some(&b'z') {
                            return Err(Error::Parse(format!("expected z at {pos}")));
                        }
                    }
                    c
                }
                None => BigInt::one(),
            };
            let exp = if bytes.get(pos) == Some(&b'z') {
                pos += 1;
                if bytes.get(pos) == Some(&b'^') {
                    pos += 1;
                    let d = digits(&mut pos)
                        .ok_or_else(|| Error::Parse(format!("missing exponent at {pos}")))?;
                    d.parse::<u64>().map_err(|_| Error::Parse(d.into()))?
                } else {
                    1
                }
            } else if pos > 0 && bytes[pos - 1].is_ascii_digit() {
                0
            } else {
                return Err(Error::Parse(format!("expected term at {pos}")));
            };
            poly.add_term(exp, if negative { -coeff } else { coeff });
        }
        Ok(poly)
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<(u64, String)>,
}

/// JSON form `{"terms": [[exp, "coeff"], ...]}`, coefficients as decimal
/// strings.
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            terms: self.terms().map(|(e, c)| (e, c.to_string())).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(deserializer)?;
        let mut poly = IntPoly::zero();
        for (e, c) in raw.terms {
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            if c.is_zero() {
                return Err(D::Error::custom(format!("zero coefficient at exponent {e}")));
            }
            if poly.terms.insert(e, c).is_some() {
                return Err(D::Error::custom(format!("duplicate exponent {e}")));
            }
        }
        Ok(poly)
    }
}
