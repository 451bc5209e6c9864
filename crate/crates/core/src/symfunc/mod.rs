//! Symmetric functions in the power-sum basis.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Deserialize;

use crate::arith::{format_rational, int, parse_rational, Rational, TrigradedSeries};
use crate::error::{Error, Result};
use crate::group::{LinearCharacter, PermGroup};

/// A partition, parts weakly decreasing. The empty partition indexes
/// `p_∅ = 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Union of the multisets of parts, i.e. `p_λ p_μ = p_{λ ∪ μ}`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    /// `Π (-1)^{λ_i - 1}`.
    pub fn omega_sign(&self) -> i32 {
        let even_parts = self.parts.iter().filter(|&&p| p % 2 == 0).count();
        if even_parts % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

/// An element of `Λ_Q` as a finite combination of `p_λ`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFuncPoly {
    terms: BTreeMap<Partition, Rational>,
}

/// Which average over the group a cycle index takes.
#[derive(Clone, Copy, Debug)]
pub enum CycleIndexFlavor<'a> {
    Plain,
    Sgn,
    /// Weight `χ(σ)` by a linear character aligned with the group's element order.
    Character(&'a LinearCharacter),
}

impl SymFuncPoly {
    pub fn zero() -> Self {
        SymFuncPoly::default()
    }

    pub fn one() -> Self {
        Self::p(Partition::empty())
    }

    /// The power sum `p_λ`.
    pub fn p(lambda: Partition) -> Self {
        Self::from_terms([(lambda, Rational::one())])
    }

    /// `p_r`.
    pub fn p_r(r: u32) -> Self {
        Self::p(Partition::new(vec![r]))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut out = SymFuncPoly::zero();
        for (l, c) in terms {
            out.add_term(l, c);
        }
        out
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(l, v)| (l.clone(), v * c)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = SymFuncPoly::zero();
        for (l1, c1) in &self.terms {
            for (l2, c2) in &other.terms {
                out.add_term(l1.union(l2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// The involution `ω(p_r) = (-1)^{r-1} p_r`.
    pub fn omega(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(l, c)| (l.clone(), c * int(l.omega_sign() as i64))),
        )
    }

    /// The cycle index `(1/|P|) Σ w(σ) p_{λ(σ)}` for the chosen weights.
    pub fn cycle_index(p: &PermGroup, flavor: CycleIndexFlavor<'_>) -> Self {
        let order = int(p.order() as i64);
        let mut out = SymFuncPoly::zero();
        for (i, sigma) in p.elements().iter().enumerate() {
            let w = match flavor {
                CycleIndexFlavor::Plain => Rational::one(),
                CycleIndexFlavor::Sgn => int(sigma.sign() as i64),
                CycleIndexFlavor::Character(chi) => chi.value(i).clone(),
            };
            out.add_term(sigma.cycle_type(), w / &order);
        }
        out
    }

    /// `h_n` (`signed = false`) or `e_n` (`signed = true`): the plain or signed
    /// cycle index of the full symmetric group. `h_0 = e_0 = 1`.
    pub fn hn_en(n: usize, signed: bool) -> Self {
        if n == 0 {
            return Self::one();
        }
        let flavor = if signed {
            CycleIndexFlavor::Sgn
        } else {
            CycleIndexFlavor::Plain
        };
        Self::cycle_index(&PermGroup::symmetric(n), flavor)
    }

    /// Plethystic substitution into a series: `p_r ↦ s(t^r, q^r, u^r)`.
    pub fn plethystic_substitute(&self, s: &TrigradedSeries) -> TrigradedSeries {
        let caps = s.caps();
        let mut dilated: BTreeMap<u32, TrigradedSeries> = BTreeMap::new();
        let mut out = TrigradedSeries::zero(caps);
        for (lambda, c) in &self.terms {
            let mut term = TrigradedSeries::constant(c.clone(), caps);
            for &r in lambda.parts() {
                let d = dilated.entry(r).or_insert_with(|| s.dilate(r));
                term = term.mul(d);
            }
            out = out.add(&term);
        }
        out
    }

    /// Plethystic composition `f[g]`: `p_r[g]` is `g` with each `p_s`
    /// replaced by `p_{rs}`, extended multiplicatively and linearly.
    pub fn plethystic_compose(&self, g: &SymFuncPoly) -> SymFuncPoly {
        let mut out = SymFuncPoly::zero();
        for (lambda, c) in &self.terms {
            let mut term = SymFuncPoly::from_terms([(Partition::empty(), c.clone())]);
            for &r in lambda.parts() {
                term = term.mul(&g.scale_indices(r));
            }
            out = out.add(&term);
        }
        out
    }

    fn scale_indices(&self, r: u32) -> SymFuncPoly {
        Self::from_terms(self.terms.iter().map(|(l, c)| {
            (
                Partition::new(l.parts().iter().map(|p| p * r).collect()),
                c.clone(),
            )
        }))
    }

    /// `{"terms": [{"lambda": [3, 1], "c": "1/6"}, ...]}`, partitions in
    /// reverse lexicographic order.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .terms
            .iter()
            .rev()
            .map(|(l, c)| serde_json::json!({"lambda": l.parts(), "c": format_rational(c)}))
            .collect();
        serde_json::json!({ "terms": terms })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct Term {
            lambda: Vec<u32>,
            c: String,
        }
        #[derive(Deserialize)]
        struct Wire {
            terms: Vec<Term>,
        }
        let w: Wire = serde_json::from_value(v.clone())
            .map_err(|e| Error::InvalidInput(format!("symmetric function JSON: {e}")))?;
        let mut out = SymFuncPoly::zero();
        for t in w.terms {
            out.add_term(Partition::new(t.lambda), parse_rational(&t.c)?);
        }
        Ok(out)
    }
}

impl fmt::Display for SymFuncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(l, c)| format!("{} p{:?}", format_rational(c), l))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SymFuncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `Σ_{k=0}^{n} (-1)^k e_k h_{n-k}`, which vanishes for `n ≥ 1`.
pub fn eh_alternating_sum(n: usize) -> SymFuncPoly {
    let mut out = SymFuncPoly::zero();
    for k in 0..=n {
        let sign = if k % 2 == 0 { int(1) } else { int(-1) };
        let term = SymFuncPoly::hn_en(k, true).mul(&SymFuncPoly::hn_en(n - k, false));
        out = out.add(&term.scale(&sign));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Caps};
    use crate::group::{perm_group_of_wreath, Permutation};

    fn pl(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn sf(terms: &[(&[u32], i64, i64)]) -> SymFuncPoly {
        SymFuncPoly::from_terms(terms.iter().map(|(l, p, q)| (pl(l), rat(*p, *q))))
    }

    #[test]
    fn partitions_sort() {
        assert_eq!(pl(&[1, 3, 0, 2]).parts(), &[3, 2, 1]);
        assert_eq!(Permutation::from_one_line(&[2, 3, 1, 5, 4]).unwrap().cycle_type(), pl(&[3, 2]));
    }

    #[test]
    fn cycle_indices() {
        let s2 = PermGroup::symmetric(2);
        let s3 = PermGroup::symmetric(3);
        assert_eq!(
            SymFuncPoly::cycle_index(&s2, CycleIndexFlavor::Plain),
            sf(&[(&[1, 1], 1, 2), (&[2], 1, 2)])
        );
        assert_eq!(
            SymFuncPoly::cycle_index(&s2, CycleIndexFlavor::Sgn),
            sf(&[(&[1, 1], 1, 2), (&[2], -1, 2)])
        );
        let z3 = SymFuncPoly::cycle_index(&s3, CycleIndexFlavor::Plain);
        assert_eq!(z3, sf(&[(&[1, 1, 1], 1, 6), (&[2, 1], 1, 2), (&[3], 1, 3)]));
        assert_eq!(z3.omega(), SymFuncPoly::cycle_index(&s3, CycleIndexFlavor::Sgn));
        let chi = LinearCharacter::from_signs(s3.elements().iter().map(|s| s.sign()));
        assert_eq!(
            SymFuncPoly::cycle_index(&s3, CycleIndexFlavor::Character(&chi)),
            SymFuncPoly::cycle_index(&s3, CycleIndexFlavor::Sgn)
        );
    }

    #[test]
    fn omega_on_power_sums() {
        assert_eq!(SymFuncPoly::p_r(1).omega(), SymFuncPoly::p_r(1));
        assert_eq!(SymFuncPoly::p_r(2).omega(), SymFuncPoly::p_r(2).scale(&int(-1)));
    }

    #[test]
    fn h_and_e() {
        assert_eq!(SymFuncPoly::hn_en(1, false), SymFuncPoly::p_r(1));
        assert_eq!(SymFuncPoly::hn_en(1, true), SymFuncPoly::p_r(1));
        assert_eq!(SymFuncPoly::hn_en(2, true), sf(&[(&[1, 1], 1, 2), (&[2], -1, 2)]));
        assert_eq!(
            SymFuncPoly::hn_en(3, false),
            sf(&[(&[1, 1, 1], 1, 6), (&[2, 1], 1, 2), (&[3], 1, 3)])
        );
        for n in 1..=5 {
            assert!(eh_alternating_sum(n).is_zero(), "n = {n}");
        }
        assert_eq!(eh_alternating_sum(0), SymFuncPoly::one());
    }

    #[test]
    fn plethystic_substitution() {
        let caps = Caps::bigraded(5, 0);
        let geo = TrigradedSeries::from_terms(caps, (0..=5).map(|i| ((0, i, 0), int(1))));
        assert_eq!(SymFuncPoly::p_r(1).plethystic_substitute(&geo), geo);
        let even = TrigradedSeries::from_terms(caps, (0..=2).map(|i| ((0, 2 * i, 0), int(1))));
        assert_eq!(SymFuncPoly::p_r(2).plethystic_substitute(&geo), even);
        let z2 = SymFuncPoly::cycle_index(&PermGroup::symmetric(2), CycleIndexFlavor::Plain);
        let got = z2.plethystic_substitute(&geo);
        // Monomials x1^a x2^b with a <= b, counted by total degree.
        for m in 0..=5u32 {
            let count = (0..=m).filter(|a| 2 * a <= m).count();
            assert_eq!(got.coeff(0, m, 0), int(count as i64));
        }
    }

    #[test]
    fn plethystic_composition() {
        assert_eq!(SymFuncPoly::p_r(2).plethystic_compose(&SymFuncPoly::p_r(3)), SymFuncPoly::p_r(6));
        let z2 = SymFuncPoly::cycle_index(&PermGroup::symmetric(2), CycleIndexFlavor::Plain);
        assert_eq!(SymFuncPoly::p_r(1).plethystic_compose(&z2), z2);
        let expected = sf(&[(&[1, 1, 1, 1], 1, 8), (&[2, 1, 1], 1, 4), (&[2, 2], 3, 8), (&[4], 1, 4)]);
        assert_eq!(z2.plethystic_compose(&z2), expected);
        let b2 = perm_group_of_wreath(&PermGroup::symmetric(2), &PermGroup::symmetric(2), 2).unwrap();
        assert_eq!(SymFuncPoly::cycle_index(&b2, CycleIndexFlavor::Plain), expected);
    }

    #[test]
    fn json_round_trip() {
        let z3 = SymFuncPoly::hn_en(3, false);
        let v = z3.to_json();
        assert_eq!(
            v.to_string(),
            r#"{"terms":[{"lambda":[3],"c":"1/3"},{"lambda":[2,1],"c":"1/2"},{"lambda":[1,1,1],"c":"1/6"}]}"#
        );
        assert_eq!(SymFuncPoly::from_json(&v).unwrap(), z3);
    }
}
