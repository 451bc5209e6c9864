//! Hilbert series of wreath-product invariants by two independent routes,
//! their collation over all `n`, and the determinant identities behind them.

use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{int, Caps, QMatrix, Rational, SeriesVar, TrigradedSeries, UniPoly};
use crate::error::{Error, Result};
use crate::group::{CharacterSpec, GradedGroupElement, MatrixGroup, PermGroup, Permutation, WreathElement};
use crate::molien::{super_molien, GroupAction};
use crate::symfunc::{CycleIndexFlavor, SymFuncPoly};
use crate::Flavor;

/// `H((Sym± V)^G, q, u)` for the trivial character, with the u-cap raised to
/// `du` (coefficients past `r1` vanish).
pub fn invariant_series(g: &MatrixGroup, dq: u32, du: u32) -> Result<TrigradedSeries> {
    let h = super_molien(&GroupAction::from_matrix_group(g, &CharacterSpec::Trivial)?, dq)?;
    Ok(h.with_exact_caps(Caps::bigraded(dq, du)))
}

/// Molien average over every element of `P[G]`, each acting by its block
/// matrices on `V0^n` and `V1^n`.
pub fn wreath_hilbert_direct(
    p: &PermGroup,
    g: &MatrixGroup,
    n: usize,
    flavor: Flavor,
    dq: u32,
) -> Result<TrigradedSeries> {
    super_molien(&GroupAction::wreath(p, g, n, flavor.is_signed())?, dq)
}

/// `Z_P[H_G(q, -u)]` (or `Z_P^sgn`), reported at `(q, u)`.
pub fn wreath_hilbert_plethysm(
    p: &PermGroup,
    g: &MatrixGroup,
    n: usize,
    flavor: Flavor,
    dq: u32,
) -> Result<TrigradedSeries> {
    if p.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            got: p.degree(),
        });
    }
    let du = (n * g.dims().1) as u32;
    let h = invariant_series(g, dq, du)?;
    let z = SymFuncPoly::cycle_index(
        p,
        if flavor.is_signed() {
            CycleIndexFlavor::Sgn
        } else {
            CycleIndexFlavor::Plain
        },
    );
    Ok(z.plethystic_substitute(&h.flip_u()).flip_u())
}

/// Input to the collated generating functions.
#[derive(Clone, Debug)]
pub struct CollationSpec {
    pub group: MatrixGroup,
    /// Largest `n`, i.e. the t-cap.
    pub n_max: u32,
    pub dq: u32,
    pub du: u32,
    pub flavor: Flavor,
}

impl CollationSpec {
    pub fn caps(&self) -> Caps {
        Caps::new(self.n_max, self.dq, self.du)
    }
}

/// `Σ_{n <= N} t^n H((Sym± V^n)^{S_n[G], flavor})` by direct enumeration.
pub fn collated_sum_series(spec: &CollationSpec) -> Result<TrigradedSeries> {
    let caps = spec.caps();
    let mut out = TrigradedSeries::one(caps);
    for n in 1..=spec.n_max {
        let h = wreath_hilbert_direct(
            &PermGroup::symmetric(n as usize),
            &spec.group,
            n as usize,
            spec.flavor,
            spec.dq,
        )?;
        // H has no t-terms and no u-terms past n·r1, so relabelling is exact.
        out = out.add(&h.with_exact_caps(caps).shift_t(n));
    }
    Ok(out)
}

/// `Π (1 + t q^i u^j)^{a_ij} / Π (1 - t q^i u^j)^{a_ij}` with `j` odd on top
/// for invariants and `j` even on top for the sign flavor, where `a_ij` are
/// read off the Molien series of `G`.
pub fn collated_product_series(spec: &CollationSpec) -> Result<TrigradedSeries> {
    let h = invariant_series(&spec.group, spec.dq, spec.du)?;
    let mut a = Vec::new();
    for ((_, i, j), c) in h.terms() {
        let count = c
            .to_integer()
            .to_i64()
            .filter(|_| c.is_integer() && !c.is_zero())
            .ok_or_else(|| Error::InvalidInput(format!("non-integral Hilbert coefficient {c}")))?;
        a.push((i, j, count));
    }
    product_form(&a, spec.flavor, spec.caps())
}

/// The product side for explicit exponents `(i, j, a_ij)`.
pub fn product_form(a: &[(u32, u32, i64)], flavor: Flavor, caps: Caps) -> Result<TrigradedSeries> {
    let mut out = TrigradedSeries::one(caps);
    for &(i, j, count) in a {
        let numerator = (j % 2 == 1) != flavor.is_signed();
        let sign = if numerator { 1 } else { -1 };
        let mut factor = TrigradedSeries::one(caps);
        factor.add_term((1, i, j), int(sign));
        out = out.mul(&factor.pow_int(if numerator { count } else { -count })?);
    }
    Ok(out)
}

/// The `rm × rm` block-cycle matrix with `A_1` in the top-right block and
/// `A_{k+1}` below the diagonal in block column `k`.
pub fn block_cycle_matrix(blocks: &[QMatrix]) -> Result<QMatrix> {
    let m = blocks.len();
    let r = blocks.first().map_or(0, QMatrix::rows);
    if blocks.iter().any(|b| b.rows() != r || b.cols() != r) {
        return Err(Error::DimensionMismatch("blocks must be square of equal size".into()));
    }
    let mut out = QMatrix::zeros(r * m, r * m);
    for (k, b) in blocks.iter().enumerate() {
        // A_1 maps block 0 of the output from block m-1; A_{k+1} maps block k from k-1.
        let (row, col) = if k == 0 { (0, m - 1) } else { (k, k - 1) };
        out.set_block(row * r, col * r, b);
    }
    Ok(out)
}

/// `det(I - B) = det(I - A_m ⋯ A_1)` for the block-cycle matrix `B`, and the
/// polynomial form `det(I - zB) = det(I - z^m A_m ⋯ A_1)`.
pub fn verify_block_determinant_lemma(blocks: &[QMatrix]) -> Result<bool> {
    if blocks.is_empty() {
        return Ok(true);
    }
    let r = blocks[0].rows();
    let b = block_cycle_matrix(blocks)?;
    let mut prod = QMatrix::identity(r);
    for a in blocks {
        prod = a.checked_mul(&prod)?;
    }
    let lhs = QMatrix::identity(b.rows()).sub(&b)?.det()?;
    let rhs = QMatrix::identity(r).sub(&prod)?.det()?;
    let m = blocks.len();
    let poly_lhs = b.charpoly_det()?;
    let inner = prod.charpoly_det()?;
    let mut spread = vec![Rational::zero(); (inner.coeffs().len().max(1) - 1) * m + 1];
    for (k, c) in inner.coeffs().iter().enumerate() {
        spread[k * m] = c.clone();
    }
    Ok(lhs == rhs && poly_lhs == UniPoly::new(spread))
}

/// Every `(σ, g)` for a fixed `σ` and all `g ∈ G^m`.
fn elements_over(sigma: &Permutation, g: &MatrixGroup) -> Vec<WreathElement> {
    let m = sigma.degree();
    let mut out = Vec::new();
    let mut idx = vec![0usize; m];
    loop {
        let gs: Vec<GradedGroupElement> = idx.iter().map(|&k| g.elements()[k].clone()).collect();
        out.push(WreathElement {
            sigma: sigma.clone(),
            gs,
        });
        let mut k = m;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < g.order() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// The single-cycle identity: averaging the Molien summand of `(σ, g)` over
/// `g ∈ G^m`, for the m-cycle `σ`, gives `H_G(q^m, -u^m)` after `u ↦ -u`.
pub fn verify_m_cycle_identity(g: &MatrixGroup, m: usize, dq: u32) -> Result<bool> {
    let (lhs, rhs) = m_cycle_sides(g, m, dq)?;
    Ok(lhs == rhs)
}

/// Both sides of the single-cycle identity at `(q, u)`.
pub fn m_cycle_sides(g: &MatrixGroup, m: usize, dq: u32) -> Result<(TrigradedSeries, TrigradedSeries)> {
    if m == 0 {
        return Err(Error::InvalidInput("cycle length must be positive".into()));
    }
    let count = (g.order() as u128).checked_pow(m as u32);
    if count.is_none_or(|c| c > crate::group::DEFAULT_WREATH_CAP as u128) {
        return Err(Error::CapExceeded {
            what: "G^m enumeration",
            cap: crate::group::DEFAULT_WREATH_CAP,
        });
    }
    let du = (m * g.dims().1) as u32;
    let caps = Caps::bigraded(dq, du);
    let els = elements_over(&Permutation::long_cycle(m), g);
    let weight = Rational::one() / int(els.len() as i64);
    let mut lhs = TrigradedSeries::zero(caps);
    for w in &els {
        let den = w.block0().charpoly_det()?.to_series(SeriesVar::Q, caps).inv()?;
        let num = w
            .block1()
            .charpoly_det()?
            .scale_var(&int(-1))
            .to_series(SeriesVar::U, caps);
        lhs = lhs.add(&den.mul(&num).scale(&weight));
    }
    let h = invariant_series(g, dq, du)?;
    let rhs = h.flip_u().dilate(m as u32).flip_u();
    Ok((lhs, rhs))
}

/// `Π_{i <= dq} (1 + t u q^i) / (1 - t q^i)` (invariants) or
/// `Π (1 + t q^i) / (1 - t u q^i)` (sign).
pub fn superspace_product(flavor: Flavor, caps: Caps) -> Result<TrigradedSeries> {
    let mut out = TrigradedSeries::one(caps);
    for i in 0..=caps.q {
        let (top, bottom) = if flavor.is_signed() { ((1, i, 0), (1, i, 1)) } else { ((1, i, 1), (1, i, 0)) };
        let mut num = TrigradedSeries::one(caps);
        num.add_term(top, int(1));
        let mut den = TrigradedSeries::one(caps);
        den.add_term(bottom, int(-1));
        out = out.mul(&num).mul(&den.inv()?);
    }
    Ok(out)
}

/// `Σ_n t^n Π_{k=1}^{n} (1 + q^{k-1} u) / (1 - q^k)`, or with numerators
/// `u + q^{k-1}` for the sign flavor.
pub fn superspace_qbinomial_sum(flavor: Flavor, caps: Caps) -> Result<TrigradedSeries> {
    let mut out = TrigradedSeries::zero(caps);
    let mut term = TrigradedSeries::one(caps);
    for n in 0..=caps.t {
        if n > 0 {
            let k = n;
            let mut num = TrigradedSeries::zero(caps);
            if flavor.is_signed() {
                num.add_term((0, 0, 1), int(1));
                num.add_term((0, k - 1, 0), int(1));
            } else {
                num.add_term((0, 0, 0), int(1));
                num.add_term((0, k - 1, 1), int(1));
            }
            let mut den = TrigradedSeries::one(caps);
            den.add_term((0, k, 0), int(-1));
            term = term.mul(&num).mul(&den.inv()?);
        }
        out = out.add(&term.shift_t(n));
    }
    Ok(out)
}

/// Outcome of the superspace identities for one flavor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperspaceReport {
    pub flavor: Flavor,
    pub direct_equals_product: bool,
    pub direct_equals_qbinomial: bool,
}

/// Direct `S_n` series on `Sym±(x, θ)` for `n <= n_max` against the product
/// and q-binomial forms, both flavors.
pub fn superspace_identity_reports(n_max: u32, dq: u32) -> Result<Vec<SuperspaceReport>> {
    let caps = Caps::new(n_max, dq, n_max);
    Flavor::BOTH
        .iter()
        .map(|&flavor| {
            let direct = collated_sum_series(&CollationSpec {
                group: MatrixGroup::trivial(1, 1),
                n_max,
                dq,
                du: n_max,
                flavor,
            })?;
            Ok(SuperspaceReport {
                flavor,
                direct_equals_product: direct == superspace_product(flavor, caps)?,
                direct_equals_qbinomial: direct == superspace_qbinomial_sum(flavor, caps)?,
            })
        })
        .collect()
}

pub fn superspace_identity_check(n_max: u32, dq: u32) -> Result<bool> {
    Ok(superspace_identity_reports(n_max, dq)?
        .iter()
        .all(|r| r.direct_equals_product && r.direct_equals_qbinomial))
}

/// `Π_{j odd} (1 + t u^j)^{C(ℓ,j)} / Π_{j even} (1 - t u^j)^{C(ℓ,j)}`, the
/// closed form for a Young subgroup with `ℓ` blocks on an exterior algebra.
pub fn young_closed_form(ell: u32, caps: Caps) -> Result<TrigradedSeries> {
    let a: Vec<(u32, u32, i64)> = (0..=ell)
        .map(|j| {
            let c = crate::arith::binomial(ell as u64, j as u64);
            (0, j, c.to_i64().expect("small binomial"))
        })
        .collect();
    product_form(&a, Flavor::Invariant, caps)
}

/// `a_ij = multichoose(r0, i) · C(r1, j)` for the trivial group, giving the
/// diagonally symmetric product directly from the formula.
pub fn diagonal_exponents(r0: u32, r1: u32, dq: u32) -> Vec<(u32, u32, i64)> {
    let mut out = Vec::new();
    for i in 0..=dq {
        for j in 0..=r1 {
            let a = crate::arith::multichoose(r0 as u64, i as u64) * crate::arith::binomial(r1 as u64, j as u64);
            let a = a.to_i64().expect("small exponent");
            if a != 0 {
                out.push((i, j, a));
            }
        }
    }
    out
}
