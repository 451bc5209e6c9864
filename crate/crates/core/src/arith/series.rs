use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// Exponent triple `(t, q, u)`.
pub type Exponent = (u32, u32, u32);

/// Inclusive degree caps of a truncated series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Caps {
    pub t: u32,
    pub q: u32,
    pub u: u32,
}

impl Caps {
    pub const fn new(t: u32, q: u32, u: u32) -> Self {
        Caps { t, q, u }
    }

    /// Caps of a bigraded `(q, u)` series.
    pub const fn bigraded(q: u32, u: u32) -> Self {
        Caps { t: 0, q, u }
    }

    pub fn min(self, other: Caps) -> Caps {
        Caps {
            t: self.t.min(other.t),
            q: self.q.min(other.q),
            u: self.u.min(other.u),
        }
    }

    pub fn contains(&self, (t, q, u): Exponent) -> bool {
        t <= self.t && q <= self.q && u <= self.u
    }

    /// All exponents inside the caps in lexicographic `(t, q, u)` order.
    pub fn exponents(&self) -> impl Iterator<Item = Exponent> + '_ {
        (0..=self.t).flat_map(move |t| {
            (0..=self.q).flat_map(move |q| (0..=self.u).map(move |u| (t, q, u)))
        })
    }
}

/// One of the three series variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesVar {
    T,
    Q,
    U,
}

impl SeriesVar {
    /// The exponent triple of `var^k`.
    pub fn exponent(self, k: u32) -> Exponent {
        match self {
            SeriesVar::T => (k, 0, 0),
            SeriesVar::Q => (0, k, 0),
            SeriesVar::U => (0, 0, k),
        }
    }
}

/// Truncated power series in `t, q, u` with exact rational coefficients.
///
/// Only nonzero coefficients inside the caps are stored. Two series compare
/// equal when they agree on every coefficient within the componentwise
/// minimum of their caps.
#[derive(Clone)]
pub struct TrigradedSeries {
    caps: Caps,
    coeffs: BTreeMap<Exponent, Rational>,
}

impl TrigradedSeries {
    pub fn zero(caps: Caps) -> Self {
        TrigradedSeries {
            caps,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(caps: Caps) -> Self {
        Self::constant(Rational::one(), caps)
    }

    pub fn constant(c: Rational, caps: Caps) -> Self {
        Self::monomial(c, (0, 0, 0), caps)
    }

    pub fn monomial(c: Rational, e: Exponent, caps: Caps) -> Self {
        let mut s = Self::zero(caps);
        s.add_term(e, c);
        s
    }

    /// Builds a series from `(exponent, coefficient)` pairs; like terms merge
    /// and terms outside the caps are discarded.
    pub fn from_terms(caps: Caps, terms: impl IntoIterator<Item = (Exponent, Rational)>) -> Self {
        let mut s = Self::zero(caps);
        for (e, c) in terms {
            s.add_term(e, c);
        }
        s
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn coeff(&self, t: u32, q: u32, u: u32) -> Rational {
        self.coeffs
            .get(&(t, q, u))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in lexicographic `(t, q, u)` order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0, 0, 0)
    }

    /// Adds `c * t^e.0 q^e.1 u^e.2` in place; ignored when outside the caps.
    pub fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() || !self.caps.contains(e) {
            return;
        }
        match self.coeffs.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Restricts to smaller caps (componentwise minimum with `caps`).
    pub fn truncate(&self, caps: Caps) -> Self {
        let caps = self.caps.min(caps);
        TrigradedSeries {
            caps,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(e, _)| caps.contains(**e))
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Re-labels the caps without touching coefficients. Raising a cap asserts
    /// that every coefficient beyond the old cap is genuinely zero (for
    /// example a Hilbert series in `u` whose top degree is the odd dimension).
    pub fn with_exact_caps(&self, caps: Caps) -> Self {
        self.truncate(caps).relabel(caps)
    }

    fn relabel(mut self, caps: Caps) -> Self {
        self.caps = caps;
        self
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.caps);
        }
        TrigradedSeries {
            caps: self.caps,
            coeffs: self.coeffs.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let caps = self.caps.min(other.caps);
        let mut out = self.truncate(caps);
        for (e, c) in other.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    /// Truncated Cauchy product; caps are the componentwise minimum.
    pub fn mul(&self, other: &Self) -> Self {
        let caps = self.caps.min(other.caps);
        let mut acc: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (&(t1, q1, u1), a) in self.coeffs.iter() {
            if !caps.contains((t1, q1, u1)) {
                continue;
            }
            for (&(t2, q2, u2), b) in other.coeffs.iter() {
                let e = (t1 + t2, q1 + q2, u1 + u2);
                if caps.contains(e) {
                    *acc.entry(e).or_insert_with(Rational::zero) += a * b;
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        TrigradedSeries { caps, coeffs: acc }
    }

    /// Multiplicative inverse within the caps, solving for coefficients in
    /// lexicographic order of exponents.
    pub fn inv(&self) -> Result<Self> {
        let a0 = self.constant_term();
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let a0_inv = a0.recip();
        let caps = self.caps;
        let rest: Vec<(Exponent, &Rational)> =
            self.terms().filter(|(e, _)| *e != (0, 0, 0)).collect();
        let mut out: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for k in caps.exponents() {
            let mut acc = if k == (0, 0, 0) {
                Rational::one()
            } else {
                Rational::zero()
            };
            for &((t, q, u), a) in &rest {
                if t <= k.0 && q <= k.1 && u <= k.2 {
                    if let Some(b) = out.get(&(k.0 - t, k.1 - q, k.2 - u)) {
                        acc -= a * b;
                    }
                }
            }
            if !acc.is_zero() {
                out.insert(k, acc * &a0_inv);
            }
        }
        Ok(TrigradedSeries { caps, coeffs: out })
    }

    /// Integer power by repeated squaring; negative powers go through
    /// [`TrigradedSeries::inv`].
    pub fn pow_int(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut result = Self::one(self.caps);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(result)
    }

    /// The substitution `u -> -u`.
    pub fn flip_u(&self) -> Self {
        TrigradedSeries {
            caps: self.caps,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e, if e.2 % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// The substitution `(t, q, u) -> (t^r, q^r, u^r)`, discarding terms that
    /// leave the caps. `r` must be positive.
    pub fn dilate(&self, r: u32) -> Self {
        assert!(r > 0, "dilation factor must be positive");
        let caps = self.caps;
        TrigradedSeries {
            caps,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(t, q, u), c)| ((t * r, q * r, u * r), c))
                .filter(|(e, _)| caps.contains(*e))
                .map(|(e, c)| (e, c.clone()))
                .collect(),
        }
    }

    /// Multiplies by `t^k` (shifting the t-exponent), dropping overflow.
    pub fn shift_t(&self, k: u32) -> Self {
        TrigradedSeries::from_terms(
            self.caps,
            self.terms().map(|((t, q, u), c)| ((t + k, q, u), c.clone())),
        )
    }

    /// The `t^k` slice as a bigraded series with `t`-cap 0.
    pub fn t_slice(&self, k: u32) -> Self {
        TrigradedSeries::from_terms(
            Caps::new(0, self.caps.q, self.caps.u),
            self.terms()
                .filter(|(e, _)| e.0 == k)
                .map(|((_, q, u), c)| ((0, q, u), c.clone())),
        )
    }

    /// Sets `u = 0`.
    pub fn at_u_zero(&self) -> Self {
        TrigradedSeries::from_terms(
            Caps::new(self.caps.t, self.caps.q, 0),
            self.terms()
                .filter(|(e, _)| e.2 == 0)
                .map(|(e, c)| (e, c.clone())),
        )
    }

    /// Sets `q = 0`.
    pub fn at_q_zero(&self) -> Self {
        TrigradedSeries::from_terms(
            Caps::new(self.caps.t, 0, self.caps.u),
            self.terms()
                .filter(|(e, _)| e.1 == 0)
                .map(|(e, c)| (e, c.clone())),
        )
    }

    /// Exponents within the common caps where the two series differ.
    pub fn differences(&self, other: &Self) -> Vec<(Exponent, Rational, Rational)> {
        let caps = self.caps.min(other.caps);
        let mut keys: Vec<Exponent> = self
            .coeffs
            .keys()
            .chain(other.coeffs.keys())
            .copied()
            .filter(|e| caps.contains(*e))
            .collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter_map(|e| {
                let a = self.coeff(e.0, e.1, e.2);
                let b = other.coeff(e.0, e.1, e.2);
                (a != b).then_some((e, a, b))
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let wire = SeriesWire {
            caps: self.caps,
            coeffs: self
                .terms()
                .map(|((t, q, u), c)| TermWire {
                    t,
                    q,
                    u,
                    c: format_rational(c),
                })
                .collect(),
        };
        serde_json::to_value(wire).expect("series serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let wire: SeriesWire = serde_json::from_value(v.clone())
            .map_err(|e| Error::InvalidInput(format!("series JSON: {e}")))?;
        let mut s = Self::zero(wire.caps);
        for term in wire.coeffs {
            let e = (term.t, term.q, term.u);
            if !wire.caps.contains(e) {
                return Err(Error::InvalidInput(format!("term {e:?} outside caps")));
            }
            s.add_term(e, parse_rational(&term.c)?);
        }
        Ok(s)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesWire {
    caps: Caps,
    coeffs: Vec<TermWire>,
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    t: u32,
    q: u32,
    u: u32,
    c: String,
}

impl PartialEq for TrigradedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.differences(other).is_empty()
    }
}

impl fmt::Debug for TrigradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[caps t<={} q<={} u<={}] ", self.caps.t, self.caps.q, self.caps.u)?;
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|((t, q, u), c)| {
                let mut m = String::new();
                for (name, e) in [("t", t), ("q", q), ("u", u)] {
                    match e {
                        0 => {}
                        1 => m.push_str(name),
                        _ => m.push_str(&format!("{name}^{e}")),
                    }
                }
                if m.is_empty() {
                    format_rational(c)
                } else {
                    format!("{}*{m}", format_rational(c))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for &TrigradedSeries {
            type Output = TrigradedSeries;
            fn $method(self, rhs: &TrigradedSeries) -> TrigradedSeries {
                TrigradedSeries::$method(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &TrigradedSeries {
    type Output = TrigradedSeries;
    fn neg(self) -> TrigradedSeries {
        TrigradedSeries::neg(self)
    }
}
