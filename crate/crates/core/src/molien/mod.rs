//! Hilbert series of relative invariants by the super Molien formula, and a
//! brute-force Reynolds-rank oracle that never looks at the formula.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::arith::{format_rational, int, Caps, QMatrix, Rational, SeriesVar, TrigradedSeries};
use crate::error::{Error, Result};
use crate::group::{
    build_wreath, CharacterSpec, GradedGroupElement, LinearCharacter, MatrixGroup, PermGroup,
    WreathElement, DEFAULT_WREATH_CAP,
};
use crate::superalg::{bidegree_basis, AlgebraSignature, SuperMonomial, SuperPolynomial};

/// Default limit on the size of a bidegree basis handed to the oracle.
pub const DEFAULT_BASIS_LIMIT: usize = 5000;

#[derive(Clone, Debug)]
enum Elements {
    /// `n = 1`: a list of graded elements, possibly with repeats.
    Graded(Vec<GradedGroupElement>),
    Wreath(Vec<WreathElement>),
}

/// A finite group acting on `Sym±(V^n)` together with a linear character on
/// its element list.
#[derive(Clone, Debug)]
pub struct GroupAction {
    sig: AlgebraSignature,
    elements: Elements,
    character: LinearCharacter,
}

impl GroupAction {
    pub fn from_matrix_group(g: &MatrixGroup, spec: &CharacterSpec) -> Result<Self> {
        let character = LinearCharacter::for_matrix_group(g, spec)?;
        let (r0, r1) = g.dims();
        Ok(GroupAction {
            sig: AlgebraSignature::new(r0, r1, 1),
            elements: Elements::Graded(g.elements().to_vec()),
            character,
        })
    }

    /// `P[G]` on `V^n` weighted by the trivial character or by
    /// `sgn(σ, g) = sgn(σ)`.
    pub fn wreath(p: &PermGroup, g: &MatrixGroup, n: usize, signed: bool) -> Result<Self> {
        let els = build_wreath(p, g, n, DEFAULT_WREATH_CAP)?;
        let character = if signed {
            LinearCharacter::from_signs(els.iter().map(WreathElement::sign))
        } else {
            LinearCharacter::trivial(els.len())
        };
        let (r0, r1) = g.dims();
        Ok(GroupAction {
            sig: AlgebraSignature::new(r0, r1, n),
            elements: Elements::Wreath(els),
            character,
        })
    }

    /// The same element list acting on `V0` alone (`odd = false`) or `V1`
    /// alone, keeping the character. Only for `n = 1` actions.
    pub fn restrict(&self, odd: bool) -> Result<Self> {
        let Elements::Graded(els) = &self.elements else {
            return Err(Error::InvalidInput("restriction needs a single-row action".into()));
        };
        let els = els
            .iter()
            .map(|g| {
                if odd {
                    GradedGroupElement::new(QMatrix::identity(0), g.g1.clone())
                } else {
                    GradedGroupElement::new(g.g0.clone(), QMatrix::identity(0))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let sig = if odd {
            AlgebraSignature::new(0, self.sig.r1, 1)
        } else {
            AlgebraSignature::new(self.sig.r0, 0, 1)
        };
        Ok(GroupAction {
            sig,
            elements: Elements::Graded(els),
            character: self.character.clone(),
        })
    }

    pub fn signature(&self) -> AlgebraSignature {
        self.sig
    }

    pub fn order(&self) -> usize {
        self.character.len()
    }

    pub fn character(&self) -> &LinearCharacter {
        &self.character
    }

    /// Matrices of element `k` on `V0^n` and `V1^n`.
    pub fn blocks(&self, k: usize) -> (QMatrix, QMatrix) {
        match &self.elements {
            Elements::Graded(els) => (els[k].g0.clone(), els[k].g1.clone()),
            Elements::Wreath(els) => (els[k].block0(), els[k].block1()),
        }
    }

    /// Element `k` acting on a superpolynomial.
    pub fn act(&self, k: usize, f: &SuperPolynomial) -> Result<SuperPolynomial> {
        if f.signature() != self.sig {
            return Err(Error::SignatureMismatch(format!(
                "{:?} vs action on {:?}",
                f.signature(),
                self.sig
            )));
        }
        match &self.elements {
            Elements::Graded(els) => f.apply_graded_element(&els[k], 1),
            Elements::Wreath(els) => f.apply_wreath(&els[k]),
        }
    }

    /// The Reynolds operator `(1/|G|) Σ χ(g)^{-1} g · f`.
    pub fn reynolds(&self, f: &SuperPolynomial) -> Result<SuperPolynomial> {
        let order = int(self.order() as i64);
        let mut out = SuperPolynomial::zero(self.sig);
        for k in 0..self.order() {
            let w = self.character.value(k).recip() / &order;
            out = out.add(&self.act(k, f)?.scale(&w))?;
        }
        Ok(out)
    }

    /// Whether `g · f = χ(g) f` for every element.
    pub fn is_relative_invariant(&self, f: &SuperPolynomial) -> Result<bool> {
        for k in 0..self.order() {
            if self.act(k, f)? != f.scale(self.character.value(k)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `(1/|G|) Σ χ(g^{-1}) det(1 + u g1) / det(1 - q g0)`, with caps
/// `(0, dq, n·r1)`.
pub fn super_molien(action: &GroupAction, dq: u32) -> Result<TrigradedSeries> {
    let du = (action.sig.n * action.sig.r1) as u32;
    let caps = Caps::bigraded(dq, du);
    // Summands depend only on the two characteristic polynomials.
    let mut weights: BTreeMap<(Vec<Rational>, Vec<Rational>), Rational> = BTreeMap::new();
    for k in 0..action.order() {
        let (g0, g1) = action.blocks(k);
        let key = (g0.charpoly_det()?.coeffs().to_vec(), g1.charpoly_det()?.coeffs().to_vec());
        *weights.entry(key).or_insert_with(Rational::zero) += action.character.value(k).recip();
    }
    let order = int(action.order() as i64);
    let mut out = TrigradedSeries::zero(caps);
    for ((p0, p1), w) in weights {
        if w.is_zero() {
            continue;
        }
        let den = crate::arith::UniPoly::new(p0).to_series(SeriesVar::Q, caps).inv()?;
        let num = crate::arith::UniPoly::new(p1)
            .scale_var(&int(-1))
            .to_series(SeriesVar::U, caps);
        out = out.add(&den.mul(&num).scale(&(w / &order)));
    }
    Ok(out)
}

/// Dimension of the bidegree `(i, j)` relative invariants, as the rank of
/// the Reynolds operator on the monomial basis.
pub fn invariant_dimension_bruteforce(action: &GroupAction, i: u32, j: usize) -> Result<usize> {
    invariant_dimension_with_limit(action, i, j, DEFAULT_BASIS_LIMIT)
}

pub fn invariant_dimension_with_limit(
    action: &GroupAction,
    i: u32,
    j: usize,
    limit: usize,
) -> Result<usize> {
    let basis = bidegree_basis(action.sig, i, j);
    if basis.len() > limit {
        return Err(Error::BasisTooLarge {
            size: basis.len(),
            limit,
        });
    }
    if basis.is_empty() {
        return Ok(0);
    }
    let index: BTreeMap<&SuperMonomial, usize> = basis.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let mut matrix = QMatrix::zeros(basis.len(), basis.len());
    for (row, m) in basis.iter().enumerate() {
        let f = SuperPolynomial::from_monomial(action.sig, m.clone(), Rational::one());
        let image = action.reynolds(&f)?;
        for (mono, c) in image.terms() {
            let col = *index.get(mono).ok_or_else(|| {
                Error::DimensionMismatch("action left the bidegree component".into())
            })?;
            matrix[(row, col)] = c.clone();
        }
    }
    Ok(matrix.rank())
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mismatch {
    pub i: u32,
    pub j: u32,
    pub molien: Rational,
    pub oracle: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MolienReport {
    pub agreements: usize,
    pub mismatches: Vec<Mismatch>,
}

impl MolienReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "agreements": self.agreements,
            "mismatches": self.mismatches.iter().map(|m| serde_json::json!({
                "i": m.i,
                "j": m.j,
                "molien": format_rational(&m.molien),
                "oracle": m.oracle,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Compares every coefficient of [`super_molien`] with `i <= dq` against the
/// oracle.
pub fn molien_vs_oracle(action: &GroupAction, dq: u32) -> Result<MolienReport> {
    let series = super_molien(action, dq)?;
    let mut report = MolienReport::default();
    for i in 0..=dq {
        for j in 0..=series.caps().u {
            let molien = series.coeff(0, i, j);
            let oracle = invariant_dimension_bruteforce(action, i, j as usize)?;
            if molien == int(oracle as i64) {
                report.agreements += 1;
            } else {
                report.mismatches.push(Mismatch { i, j, molien, oracle });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests;
