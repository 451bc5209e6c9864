use std::fmt;

use num_traits::{One, Zero};

use super::{format_rational, Caps, Rational, SeriesVar, TrigradedSeries};

/// Dense univariate polynomial; `coeffs[k]` multiplies `z^k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn one() -> Self {
        UniPoly::new(vec![Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * z + c)
    }

    /// `p(c z)`.
    pub fn scale_var(&self, c: &Rational) -> Self {
        let mut pow = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pow);
            pow *= c;
        }
        UniPoly::new(out)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::new(vec![]);
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Embeds the polynomial as a series in one of the three variables,
    /// dropping terms beyond the cap of that variable.
    pub fn to_series(&self, var: SeriesVar, caps: Caps) -> TrigradedSeries {
        let mut s = TrigradedSeries::zero(caps);
        for (k, c) in self.coeffs.iter().enumerate() {
            let e = var.exponent(k as u32);
            s.add_term(e, c.clone());
        }
        s
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format_rational(c),
                1 => format!("{}*z", format_rational(c)),
                _ => format!("{}*z^{k}", format_rational(c)),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::super::int;
    use super::*;

    #[test]
    fn trims_and_evaluates() {
        let p = UniPoly::new(vec![int(1), int(2), int(0), int(0)]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.eval(&int(3)), int(7));
        assert_eq!(UniPoly::new(vec![int(0)]).degree(), None);
        let sq = p.mul(&p);
        assert_eq!(sq, UniPoly::new(vec![int(1), int(4), int(4)]));
        assert_eq!(p.scale_var(&int(-1)), UniPoly::new(vec![int(1), int(-2)]));
    }
}
