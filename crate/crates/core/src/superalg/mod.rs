//! Superpolynomials: `n` rows of `r0` commuting variables `x_{row,col}` and
//! `r1` anticommuting variables `θ_{row,col}`, all indices 1-based.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Deserialize;

use crate::arith::{format_rational, int, parse_rational, QMatrix, Rational};
use crate::error::{Error, Result};
use crate::group::{combinations, GradedGroupElement, Permutation, WreathElement};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AlgebraSignature {
    pub r0: usize,
    pub r1: usize,
    pub n: usize,
}

impl AlgebraSignature {
    pub const fn new(r0: usize, r1: usize, n: usize) -> Self {
        AlgebraSignature { r0, r1, n }
    }

    pub const fn with_rows(self, n: usize) -> Self {
        AlgebraSignature { n, ..self }
    }
}

/// A normalized monomial `Π x^e · θ...θ`. Both lists are strictly increasing
/// in `(row, col)`; the θ list is the canonical order all signs refer to.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SuperMonomial {
    x: Vec<(usize, usize, u32)>,
    theta: Vec<(usize, usize)>,
}

/// Sorts a product of θ factors into canonical order. Returns the sorted
/// list and the sign of the sorting permutation, or sign 0 when a factor
/// repeats.
pub fn normalize_theta(raw: &[(usize, usize)]) -> (Vec<(usize, usize)>, i32) {
    fn sort_count(v: &mut [(usize, usize)], buf: &mut Vec<(usize, usize)>) -> usize {
        let n = v.len();
        if n <= 1 {
            return 0;
        }
        let mid = n / 2;
        let mut inv = sort_count(&mut v[..mid], buf) + sort_count(&mut v[mid..], buf);
        buf.clear();
        let (mut i, mut j) = (0, mid);
        while i < mid && j < n {
            if v[j] < v[i] {
                inv += mid - i;
                buf.push(v[j]);
                j += 1;
            } else {
                buf.push(v[i]);
                i += 1;
            }
        }
        buf.extend_from_slice(&v[i..mid]);
        buf.extend_from_slice(&v[j..n]);
        v.copy_from_slice(buf);
        inv
    }
    let mut v = raw.to_vec();
    let inv = sort_count(&mut v, &mut Vec::with_capacity(raw.len()));
    if v.windows(2).any(|w| w[0] == w[1]) {
        return (v, 0);
    }
    (v, if inv.is_multiple_of(2) { 1 } else { -1 })
}

impl SuperMonomial {
    pub fn one() -> Self {
        SuperMonomial::default()
    }

    /// Builds a monomial from commuting factors (merged) and θ factors in
    /// the given order, returning the sign of normalization (0 if it
    /// vanishes).
    pub fn new(x: &[(usize, usize, u32)], theta: &[(usize, usize)]) -> (Self, i32) {
        let mut xs: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for &(r, c, e) in x {
            *xs.entry((r, c)).or_insert(0) += e;
        }
        let (theta, sign) = normalize_theta(theta);
        (
            SuperMonomial {
                x: xs.into_iter().filter(|&(_, e)| e > 0).map(|((r, c), e)| (r, c, e)).collect(),
                theta,
            },
            sign,
        )
    }

    pub fn x(&self) -> &[(usize, usize, u32)] {
        &self.x
    }

    pub fn theta(&self) -> &[(usize, usize)] {
        &self.theta
    }

    pub fn x_degree(&self) -> u32 {
        self.x.iter().map(|t| t.2).sum()
    }

    pub fn theta_degree(&self) -> usize {
        self.theta.len()
    }

    pub fn bidegree(&self) -> (u32, usize) {
        (self.x_degree(), self.theta_degree())
    }

    /// Product with sign; sign 0 means the product vanishes.
    pub fn mul(&self, other: &SuperMonomial) -> (SuperMonomial, i32) {
        let mut x = self.x.clone();
        x.extend_from_slice(&other.x);
        let mut theta = self.theta.clone();
        theta.extend_from_slice(&other.theta);
        SuperMonomial::new(&x, &theta)
    }

    fn max_row(&self) -> usize {
        let a = self.x.iter().map(|t| t.0).max().unwrap_or(0);
        let b = self.theta.iter().map(|t| t.0).max().unwrap_or(0);
        a.max(b)
    }

    fn fits(&self, sig: AlgebraSignature) -> bool {
        self.x.iter().all(|&(r, c, _)| (1..=sig.n).contains(&r) && (1..=sig.r0).contains(&c))
            && self.theta.iter().all(|&(r, c)| (1..=sig.n).contains(&r) && (1..=sig.r1).contains(&c))
    }
}

impl fmt::Debug for SuperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.x.is_empty() && self.theta.is_empty() {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = self
            .x
            .iter()
            .map(|&(r, c, e)| if e == 1 { format!("x{r}{c}") } else { format!("x{r}{c}^{e}") })
            .collect();
        parts.extend(self.theta.iter().map(|&(r, c)| format!("θ{r}{c}")));
        write!(f, "{}", parts.join("·"))
    }
}

/// A finite rational combination of monomials over a fixed signature.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperPolynomial {
    sig: AlgebraSignature,
    terms: BTreeMap<SuperMonomial, Rational>,
}

impl SuperPolynomial {
    pub fn zero(sig: AlgebraSignature) -> Self {
        SuperPolynomial {
            sig,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(sig: AlgebraSignature) -> Self {
        Self::from_monomial(sig, SuperMonomial::one(), Rational::one())
    }

    pub fn from_monomial(sig: AlgebraSignature, m: SuperMonomial, c: Rational) -> Self {
        let mut p = Self::zero(sig);
        p.add_term(m, c);
        p
    }

    /// `c · Π x^e · θ...θ` with the θ factors in the order given.
    pub fn term(
        sig: AlgebraSignature,
        c: Rational,
        x: &[(usize, usize, u32)],
        theta: &[(usize, usize)],
    ) -> Result<Self> {
        let (m, sign) = SuperMonomial::new(x, theta);
        if !m.fits(sig) {
            return Err(Error::DimensionMismatch(format!("monomial {m:?} outside {sig:?}")));
        }
        Ok(Self::from_monomial(sig, m, c * int(sign as i64)))
    }

    pub fn x_var(sig: AlgebraSignature, row: usize, col: usize) -> Result<Self> {
        Self::term(sig, Rational::one(), &[(row, col, 1)], &[])
    }

    pub fn theta_var(sig: AlgebraSignature, row: usize, col: usize) -> Result<Self> {
        Self::term(sig, Rational::one(), &[], &[(row, col)])
    }

    pub fn signature(&self) -> AlgebraSignature {
        self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &SuperMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: SuperMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    fn check_sig(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch(format!("{:?} vs {:?}", self.sig, other.sig)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.sig);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    /// Product in the supercommutative algebra.
    pub fn super_mul(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.sig);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let (m, s) = m1.mul(m2);
                if s != 0 {
                    out.add_term(m, c1 * c2 * int(s as i64));
                }
            }
        }
        out
    }

    /// The θ-degree if every term has the same one.
    pub fn theta_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(SuperMonomial::theta_degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// The bidegree if every term has the same one.
    pub fn bidegree(&self) -> Option<(u32, usize)> {
        let mut degs = self.terms.keys().map(SuperMonomial::bidegree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Moves every variable in row `i` to row `sigma(i)`, renormalizing the
    /// θ order. This is an algebra automorphism and a left action:
    /// permuting by `σ∘τ` equals permuting by `τ` and then by `σ`.
    pub fn apply_row_permutation(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.degree() != self.sig.n {
            return Err(Error::DegreeMismatch {
                expected: self.sig.n,
                got: sigma.degree(),
            });
        }
        let row = |r: usize| sigma.apply0(r - 1) + 1;
        let mut out = Self::zero(self.sig);
        for (m, c) in &self.terms {
            let x: Vec<_> = m.x.iter().map(|&(r, col, e)| (row(r), col, e)).collect();
            let th: Vec<_> = m.theta.iter().map(|&(r, col)| (row(r), col)).collect();
            let (m2, s) = SuperMonomial::new(&x, &th);
            out.add_term(m2, c * int(s as i64));
        }
        Ok(out)
    }

    /// Acts by `g` on the variables of one row: `x_{row,c} ↦ Σ_{c'} g0[c', c]
    /// x_{row,c'}`, likewise `θ` through `g1`.
    pub fn apply_graded_element(&self, g: &GradedGroupElement, row: usize) -> Result<Self> {
        if g.dims() != (self.sig.r0, self.sig.r1) {
            return Err(Error::DimensionMismatch(format!(
                "element of dims {:?} on signature {:?}",
                g.dims(),
                self.sig
            )));
        }
        if row == 0 || row > self.sig.n {
            return Err(Error::InvalidInput(format!("row {row} outside 1..={}", self.sig.n)));
        }
        let id = GradedGroupElement::identity(self.sig.r0, self.sig.r1);
        let gs: Vec<&GradedGroupElement> = (1..=self.sig.n).map(|r| if r == row { g } else { &id }).collect();
        Ok(self.substitute(|r| r, &gs))
    }

    /// Acts by a wreath element: `g_i` on row `i`, then row `i` moves to
    /// row `sigma(i)`.
    pub fn apply_wreath(&self, w: &WreathElement) -> Result<Self> {
        if w.n() != self.sig.n {
            return Err(Error::DegreeMismatch {
                expected: self.sig.n,
                got: w.n(),
            });
        }
        if w.gs.iter().any(|g| g.dims() != (self.sig.r0, self.sig.r1)) {
            return Err(Error::DimensionMismatch("wreath component dims".into()));
        }
        let gs: Vec<&GradedGroupElement> = w.gs.iter().collect();
        Ok(self.substitute(|r| w.sigma.apply0(r - 1) + 1, &gs))
    }

    /// Linear substitution `x_{r,c} ↦ Σ g_r0[c', c] x_{dest(r),c'}` and the
    /// same for θ, expanded in θ order.
    fn substitute(&self, dest: impl Fn(usize) -> usize, gs: &[&GradedGroupElement]) -> Self {
        // Images of single variables as (monomial-free) sparse lists.
        let column = |m: &QMatrix, c: usize| -> Vec<(usize, Rational)> {
            (0..m.rows())
                .filter(|&i| !m[(i, c)].is_zero())
                .map(|i| (i + 1, m[(i, c)].clone()))
                .collect()
        };
        let mut out = Self::zero(self.sig);
        for (m, c) in &self.terms {
            let mut acc = Self::from_monomial(self.sig, SuperMonomial::one(), c.clone());
            for &(r, col, e) in &m.x {
                let img = column(&gs[r - 1].g0, col - 1);
                let d = dest(r);
                let mut factor = Self::zero(self.sig);
                for (c2, v) in img {
                    factor.add_term(
                        SuperMonomial {
                            x: vec![(d, c2, 1)],
                            theta: vec![],
                        },
                        v,
                    );
                }
                for _ in 0..e {
                    acc = acc.mul_unchecked(&factor);
                }
            }
            for &(r, col) in &m.theta {
                let img = column(&gs[r - 1].g1, col - 1);
                let d = dest(r);
                let mut factor = Self::zero(self.sig);
                for (c2, v) in img {
                    factor.add_term(
                        SuperMonomial {
                            x: vec![],
                            theta: vec![(d, c2)],
                        },
                        v,
                    );
                }
                acc = acc.mul_unchecked(&factor);
            }
            for (m2, v) in acc.terms {
                out.add_term(m2, v);
            }
        }
        out
    }

    /// Re-embeds into `new_n` rows, moving row `r` to row `r + k`.
    pub fn shift_rows(&self, k: usize, new_n: usize) -> Result<Self> {
        let sig = self.sig.with_rows(new_n);
        let mut out = Self::zero(sig);
        for (m, c) in &self.terms {
            let shifted = SuperMonomial {
                x: m.x.iter().map(|&(r, col, e)| (r + k, col, e)).collect(),
                theta: m.theta.iter().map(|&(r, col)| (r + k, col)).collect(),
            };
            if !shifted.fits(sig) {
                return Err(Error::DimensionMismatch(format!(
                    "cannot shift {m:?} by {k} into {new_n} rows"
                )));
            }
            out.add_term(shifted, c.clone());
        }
        Ok(out)
    }

    /// `{"sig": {...}, "terms": [{"x": [[row, col, exp], ...], "theta": [[row, col], ...], "c": "p/q"}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| {
                serde_json::json!({
                    "x": m.x.iter().map(|&(r, col, e)| [r, col, e as usize]).collect::<Vec<_>>(),
                    "theta": m.theta.iter().map(|&(r, col)| [r, col]).collect::<Vec<_>>(),
                    "c": format_rational(c),
                })
            })
            .collect();
        serde_json::json!({
            "sig": {"r0": self.sig.r0, "r1": self.sig.r1, "n": self.sig.n},
            "terms": terms,
        })
    }

    /// Parses the JSON form. θ lists are taken in the given order and
    /// normalized with sign.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct Sig {
            r0: usize,
            r1: usize,
            n: usize,
        }
        #[derive(Deserialize)]
        struct Term {
            #[serde(default)]
            x: Vec<(usize, usize, u32)>,
            #[serde(default)]
            theta: Vec<(usize, usize)>,
            c: String,
        }
        #[derive(Deserialize)]
        struct Wire {
            sig: Sig,
            terms: Vec<Term>,
        }
        let w: Wire = serde_json::from_value(v.clone())
            .map_err(|e| Error::InvalidInput(format!("superpolynomial JSON: {e}")))?;
        let sig = AlgebraSignature::new(w.sig.r0, w.sig.r1, w.sig.n);
        let mut out = Self::zero(sig);
        for t in w.terms {
            let p = Self::term(sig, parse_rational(&t.c)?, &t.x, &t.theta)?;
            out = out.add(&p)?;
        }
        Ok(out)
    }

    /// Largest row index that occurs, 0 for constants.
    pub fn max_row(&self) -> usize {
        self.terms.keys().map(SuperMonomial::max_row).max().unwrap_or(0)
    }
}

impl fmt::Debug for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("{}·{:?}", format_rational(c), m))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// All monomials of commuting degree `i` and θ-degree `j`. Commuting parts
/// come in lexicographically decreasing exponent order over the variables
/// `(row, col)` (so `x11^2, x11 x12, x12^2`), θ parts as increasing subsets.
pub fn bidegree_basis(sig: AlgebraSignature, i: u32, j: usize) -> Vec<SuperMonomial> {
    let xvars: Vec<(usize, usize)> = (1..=sig.n)
        .flat_map(|r| (1..=sig.r0).map(move |c| (r, c)))
        .collect();
    let tvars: Vec<(usize, usize)> = (1..=sig.n)
        .flat_map(|r| (1..=sig.r1).map(move |c| (r, c)))
        .collect();
    fn compositions(k: usize, total: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if k == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=total).rev() {
            prefix.push(e);
            compositions(k - 1, total - e, prefix, out);
            prefix.pop();
        }
    }
    let mut exps = Vec::new();
    compositions(xvars.len(), i, &mut Vec::new(), &mut exps);
    let thetas = combinations(&tvars, j);
    let mut out = Vec::with_capacity(exps.len() * thetas.len());
    for e in &exps {
        let x: Vec<(usize, usize, u32)> = xvars
            .iter()
            .zip(e)
            .filter(|(_, &e)| e > 0)
            .map(|(&(r, c), &e)| (r, c, e))
            .collect();
        for th in &thetas {
            out.push(SuperMonomial {
                x: x.clone(),
                theta: th.clone(),
            });
        }
    }
    out
}

/// Rank of a family of superpolynomials as vectors over the monomials.
pub fn span_rank(polys: &[SuperPolynomial]) -> usize {
    independent_subset(polys).len()
}

/// Indices of a maximal linearly independent subfamily, the first one in
/// list order.
pub fn independent_subset(polys: &[SuperPolynomial]) -> Vec<usize> {
    let mut cols: BTreeMap<&SuperMonomial, usize> = BTreeMap::new();
    for p in polys {
        for m in p.terms.keys() {
            let k = cols.len();
            cols.entry(m).or_insert(k);
        }
    }
    if cols.is_empty() {
        return Vec::new();
    }
    // One column per polynomial, so pivot columns pick the subfamily.
    let mut m = QMatrix::zeros(cols.len(), polys.len());
    for (j, p) in polys.iter().enumerate() {
        for (mono, c) in &p.terms {
            m[(cols[mono], j)] = c.clone();
        }
    }
    m.pivot_columns()
}

#[cfg(test)]
mod tests;
