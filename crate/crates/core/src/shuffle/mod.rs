//! Shuffle and signed shuffle products on the tower of wreath invariants.

use num_traits::One;

use crate::arith::{int, Rational};
use crate::error::{Error, Result};
use crate::group::{
    composition_shuffles, shuffle_reps, GradedGroupElement, MatrixGroup, PermGroup, Permutation,
    WreathElement,
};
use crate::molien::{invariant_dimension_bruteforce, GroupAction};
use crate::superalg::{bidegree_basis, independent_subset, span_rank, AlgebraSignature, SuperPolynomial};
use crate::wreath_series::{collated_product_series, collated_sum_series, CollationSpec};
use crate::Flavor;

/// `(1/|G|) Σ χ(g)^{-1} g · f`.
pub fn reynolds_project(f: &SuperPolynomial, action: &GroupAction) -> Result<SuperPolynomial> {
    action.reynolds(f)
}

/// The `S_n[G]` action with the trivial or sign character.
pub fn tower_action(g: &MatrixGroup, n: usize, flavor: Flavor) -> Result<GroupAction> {
    GroupAction::wreath(&PermGroup::symmetric(n), g, n, flavor.is_signed())
}

/// A basis of one bidegree component of the (anti)invariants.
#[derive(Clone, Debug)]
pub struct InvariantSpaceBasis {
    pub n: usize,
    pub i: u32,
    pub j: usize,
    pub basis: Vec<SuperPolynomial>,
}

/// Projects every monomial of bidegree `(i, j)` and keeps a maximal
/// independent subset. The size is cross-checked against the oracle.
pub fn invariant_basis(action: &GroupAction, i: u32, j: usize) -> Result<InvariantSpaceBasis> {
    let sig = action.signature();
    let monomials = bidegree_basis(sig, i, j);
    if monomials.len() > crate::molien::DEFAULT_BASIS_LIMIT {
        return Err(Error::BasisTooLarge {
            size: monomials.len(),
            limit: crate::molien::DEFAULT_BASIS_LIMIT,
        });
    }
    let mut projected = Vec::new();
    for m in monomials {
        let p = action.reynolds(&SuperPolynomial::from_monomial(sig, m, Rational::one()))?;
        if !p.is_zero() && !projected.contains(&p) {
            projected.push(p);
        }
    }
    let keep = independent_subset(&projected);
    let basis: Vec<SuperPolynomial> = keep.into_iter().map(|k| projected[k].clone()).collect();
    let oracle = invariant_dimension_bruteforce(action, i, j)?;
    if basis.len() != oracle {
        return Err(Error::DimensionMismatch(format!(
            "invariant basis has {} elements, oracle dimension {oracle}",
            basis.len()
        )));
    }
    Ok(InvariantSpaceBasis { n: sig.n, i, j, basis })
}

fn check_same_space(a: &SuperPolynomial, b: &SuperPolynomial) -> Result<()> {
    let (sa, sb) = (a.signature(), b.signature());
    if (sa.r0, sa.r1) != (sb.r0, sb.r1) {
        return Err(Error::SignatureMismatch(format!("{sa:?} vs {sb:?}")));
    }
    Ok(())
}

/// `A ⧢ B` (or `A ⧢^sgn B`): place `B` in rows `a+1..a+b`, multiply, then
/// sum the coset representatives of `S_a × S_b` (with signs if requested).
pub fn shuffle_product(a: &SuperPolynomial, b: &SuperPolynomial, signed: bool) -> Result<SuperPolynomial> {
    check_same_space(a, b)?;
    let (na, nb) = (a.signature().n, b.signature().n);
    let product = a.shift_rows(0, na + nb)?.super_mul(&b.shift_rows(na, na + nb)?)?;
    symmetrize(&product, &shuffle_reps(na, nb), signed)
}

/// The shuffle over several blocks at once, summing the shuffles of the
/// composition `(n_1, ..., n_k)` directly.
pub fn shuffle_product_multi(factors: &[SuperPolynomial], signed: bool) -> Result<SuperPolynomial> {
    let first = factors
        .first()
        .ok_or_else(|| Error::InvalidInput("empty shuffle product".into()))?;
    let parts: Vec<usize> = factors.iter().map(|f| f.signature().n).collect();
    let total: usize = parts.iter().sum();
    let mut product = SuperPolynomial::one(first.signature().with_rows(total));
    let mut offset = 0;
    for f in factors {
        check_same_space(first, f)?;
        product = product.super_mul(&f.shift_rows(offset, total)?)?;
        offset += f.signature().n;
    }
    symmetrize(&product, &composition_shuffles(&parts), signed)
}

/// `Σ w(σ) σ · f`, each representative word acting by relabelling row `i`
/// as `σ^{-1}(i)`.
fn symmetrize(f: &SuperPolynomial, reps: &[(Permutation, i32)], signed: bool) -> Result<SuperPolynomial> {
    let mut out = SuperPolynomial::zero(f.signature());
    for (w, s) in reps {
        let image = f.apply_row_permutation(&w.inverse())?;
        let weight = if signed { int(*s as i64) } else { Rational::one() };
        out = out.add(&image.scale(&weight))?;
    }
    Ok(out)
}

/// Generators of `S_n[G]`: the generators of `S_n` with identity components,
/// and each generator of `G` in the first slot.
pub fn tower_generators(g: &MatrixGroup, n: usize) -> Vec<WreathElement> {
    let (r0, r1) = g.dims();
    let id = GradedGroupElement::identity(r0, r1);
    let mut out: Vec<WreathElement> = PermGroup::symmetric(n)
        .generators()
        .iter()
        .map(|s| WreathElement {
            sigma: s.clone(),
            gs: vec![id.clone(); n],
        })
        .collect();
    if n > 0 {
        for h in g.generators() {
            let mut gs = vec![id.clone(); n];
            gs[0] = h.clone();
            out.push(WreathElement {
                sigma: Permutation::identity(n),
                gs,
            });
        }
    }
    out
}

/// Whether `f` is fixed (or multiplied by `sgn`) by every generator of
/// `S_n[G]`, `n` being the number of rows of `f`.
pub fn is_tower_invariant(f: &SuperPolynomial, g: &MatrixGroup, flavor: Flavor) -> Result<bool> {
    for w in tower_generators(g, f.signature().n) {
        let expected = if flavor.is_signed() { f.scale(&int(w.sign() as i64)) } else { f.clone() };
        if f.apply_wreath(&w)? != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks that `A ∈ R_a`, `B ∈ R_b` and that their (signed) shuffle lies in
/// `R_{a+b}`. Fails with `InvalidInput` if an input is not (anti)invariant.
pub fn verify_closure(a: &SuperPolynomial, b: &SuperPolynomial, g: &MatrixGroup, flavor: Flavor) -> Result<bool> {
    if !is_tower_invariant(a, g, flavor)? || !is_tower_invariant(b, g, flavor)? {
        return Err(Error::InvalidInput("closure inputs must be (anti)invariant".into()));
    }
    is_tower_invariant(&shuffle_product(a, b, flavor.is_signed())?, g, flavor)
}

/// `(A ⧢ B) ⧢ C = A ⧢ (B ⧢ C)`, both equal to the three-block shuffle.
pub fn verify_associativity(
    a: &SuperPolynomial,
    b: &SuperPolynomial,
    c: &SuperPolynomial,
    signed: bool,
) -> Result<bool> {
    let left = shuffle_product(&shuffle_product(a, b, signed)?, c, signed)?;
    let right = shuffle_product(a, &shuffle_product(b, c, signed)?, signed)?;
    let direct = shuffle_product_multi(&[a.clone(), b.clone(), c.clone()], signed)?;
    Ok(left == right && left == direct)
}

fn theta_parity(f: &SuperPolynomial) -> Result<usize> {
    let mut parities = f.terms().map(|(m, _)| m.theta_degree() % 2);
    let first = parities.next().unwrap_or(0);
    if parities.any(|p| p != first) {
        return Err(Error::NotHomogeneous);
    }
    Ok(first)
}

/// For one-row elements of θ-parities `j_A`, `j_B`:
/// `A ⧢ B = (-1)^{j_A j_B} B ⧢ A` and `A ⧢^sgn B = (-1)^{1 + j_A j_B} B ⧢^sgn A`.
pub fn verify_supercommutation(a: &SuperPolynomial, b: &SuperPolynomial, signed: bool) -> Result<bool> {
    if a.signature().n != 1 || b.signature().n != 1 {
        return Err(Error::InvalidInput("supercommutation is stated for one-row elements".into()));
    }
    let exponent = theta_parity(a)? * theta_parity(b)? + usize::from(signed);
    let sign = if exponent % 2 == 0 { int(1) } else { int(-1) };
    Ok(shuffle_product(a, b, signed)? == shuffle_product(b, a, signed)?.scale(&sign))
}

/// Degree-one invariants `(Sym± V)^G` in every bidegree `(i', j')` with
/// `i' <= i`, `j' <= j`, tagged with their bidegree.
fn degree_one_elements(g: &MatrixGroup, i: u32, j: usize) -> Result<Vec<((u32, usize), SuperPolynomial)>> {
    let action = GroupAction::from_matrix_group(g, &crate::group::CharacterSpec::Trivial)?;
    let mut out = Vec::new();
    for di in 0..=i {
        for dj in 0..=j.min(g.dims().1) {
            for f in invariant_basis(&action, di, dj)?.basis {
                out.push(((di, dj), f));
            }
        }
    }
    Ok(out)
}

/// Spans all `n`-fold shuffles of degree-one invariants with bidegrees
/// summing to `(i, j)` (one product per multiset of basis elements) and
/// returns `(rank of that span, oracle dimension)`.
pub fn degree_one_generation_rank(
    g: &MatrixGroup,
    flavor: Flavor,
    n: usize,
    i: u32,
    j: usize,
) -> Result<(usize, usize)> {
    let full = invariant_dimension_bruteforce(&tower_action(g, n, flavor)?, i, j)?;
    if n == 0 {
        let spanned = usize::from(i == 0 && j == 0);
        return Ok((spanned, full));
    }
    let walk = Walk {
        n,
        target: (i, j),
        ones: degree_one_elements(g, i, j)?,
        signed: flavor.is_signed(),
    };
    let mut products = Vec::new();
    walk.extend(0, 0, (0, 0), None, &mut products)?;
    Ok((span_rank(&products), full))
}

// Nondecreasing picks of degree-one elements, carrying the running product.
struct Walk {
    n: usize,
    target: (u32, usize),
    ones: Vec<((u32, usize), SuperPolynomial)>,
    signed: bool,
}

impl Walk {
    fn extend(
        &self,
        start: usize,
        depth: usize,
        acc: (u32, usize),
        partial: Option<&SuperPolynomial>,
        out: &mut Vec<SuperPolynomial>,
    ) -> Result<()> {
        if depth == self.n {
            if let Some(p) = partial.filter(|p| acc == self.target && !p.is_zero()) {
                out.push(p.clone());
            }
            return Ok(());
        }
        for (k, ((di, dj), f)) in self.ones.iter().enumerate().skip(start) {
            let next = (acc.0 + di, acc.1 + dj);
            if next.0 > self.target.0 || next.1 > self.target.1 {
                continue;
            }
            let p = match partial {
                Some(p) => shuffle_product(p, f, self.signed)?,
                None => f.clone(),
            };
            self.extend(k, depth + 1, next, Some(&p), out)?;
        }
        Ok(())
    }
}

/// One row of the generation table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationRow {
    pub n: usize,
    pub i: u32,
    pub j: usize,
    pub spanned: usize,
    pub full: usize,
}

/// The desk-scale content of the algebra isomorphism.
#[derive(Clone, Debug)]
pub struct IsomorphismReport {
    pub series_match: bool,
    pub generation: Vec<GenerationRow>,
    pub closure_pairs: usize,
    pub closure_ok: bool,
    pub associativity_triples: usize,
    pub associativity_ok: bool,
}

impl IsomorphismReport {
    pub fn passed(&self) -> bool {
        self.series_match
            && self.closure_ok
            && self.associativity_ok
            && self.generation.iter().all(|r| r.spanned == r.full)
    }
}

/// Invariant bases of `R_n` for `n <= n_max` in every bidegree with
/// `i <= dq`, keyed by `n`.
pub fn tower_bases(g: &MatrixGroup, flavor: Flavor, n_max: usize, dq: u32) -> Result<Vec<Vec<SuperPolynomial>>> {
    let mut out = vec![vec![SuperPolynomial::one(AlgebraSignature::new(g.dims().0, g.dims().1, 0))]];
    for n in 1..=n_max {
        let action = tower_action(g, n, flavor)?;
        let mut all = Vec::new();
        for i in 0..=dq {
            for j in 0..=n * g.dims().1 {
                all.extend(invariant_basis(&action, i, j)?.basis);
            }
        }
        out.push(all);
    }
    Ok(out)
}

fn x_degree(f: &SuperPolynomial) -> u32 {
    f.terms().map(|(m, _)| m.x_degree()).max().unwrap_or(0)
}

/// Series equality, generation ranks for `n <= n_max`, `i <= dq`, closure
/// on all basis pairs with `a + b <= n_max` and total `i <= dq`, and
/// associativity on basis triples with `a + b + c <= n_max`.
pub fn isomorphism_check(g: &MatrixGroup, flavor: Flavor, n_max: usize, dq: u32) -> Result<IsomorphismReport> {
    let r1 = g.dims().1;
    let spec = CollationSpec {
        group: g.clone(),
        n_max: n_max as u32,
        dq,
        du: (n_max * r1) as u32,
        flavor,
    };
    let series_match = collated_sum_series(&spec)? == collated_product_series(&spec)?;

    let mut generation = Vec::new();
    for n in 1..=n_max {
        for i in 0..=dq {
            for j in 0..=n * r1 {
                let (spanned, full) = degree_one_generation_rank(g, flavor, n, i, j)?;
                generation.push(GenerationRow { n, i, j, spanned, full });
            }
        }
    }

    let bases = tower_bases(g, flavor, n_max, dq)?;
    let signed = flavor.is_signed();
    let (mut closure_pairs, mut closure_ok) = (0, true);
    for a in 1..n_max {
        for b in 1..=n_max - a {
            for x in &bases[a] {
                for y in &bases[b] {
                    if x_degree(x) + x_degree(y) > dq {
                        continue;
                    }
                    closure_pairs += 1;
                    closure_ok &= verify_closure(x, y, g, flavor)?;
                }
            }
        }
    }
    let (mut associativity_triples, mut associativity_ok) = (0, true);
    for a in 1..n_max {
        for b in 1..n_max - a {
            for c in 1..=n_max - a - b {
                // First two basis elements of each level keep this sample small.
                for x in bases[a].iter().take(2) {
                    for y in bases[b].iter().take(2) {
                        for z in bases[c].iter().take(2) {
                            associativity_triples += 1;
                            associativity_ok &= verify_associativity(x, y, z, signed)?;
                        }
                    }
                }
            }
        }
    }
    Ok(IsomorphismReport {
        series_match,
        generation,
        closure_pairs,
        closure_ok,
        associativity_triples,
        associativity_ok,
    })
}

/// The two shuffle products displayed as worked examples, each paired with
/// the expected six-term sum built factor by factor.
pub fn displayed_examples() -> Result<Vec<(&'static str, SuperPolynomial, SuperPolynomial)>> {
    let mut out = Vec::new();

    // r0 = r1 = 1: x1^2 x2 θ2 ⧢^sgn x1^5 x2^7 θ1 θ2, and the unsigned version.
    let s2 = AlgebraSignature::new(1, 1, 2);
    let s4 = s2.with_rows(4);
    let a = SuperPolynomial::term(s2, int(1), &[(1, 1, 2), (2, 1, 1)], &[(2, 1)])?;
    let b = SuperPolynomial::term(s2, int(1), &[(1, 1, 5), (2, 1, 7)], &[(1, 1), (2, 1)])?;
    let rows: [(usize, usize, usize, usize, i64); 6] = [
        (1, 2, 3, 4, 1),
        (1, 3, 2, 4, -1),
        (1, 4, 2, 3, 1),
        (2, 3, 1, 4, 1),
        (2, 4, 1, 3, -1),
        (3, 4, 1, 2, 1),
    ];
    let mut signed_expected = SuperPolynomial::zero(s4);
    let mut unsigned_expected = SuperPolynomial::zero(s4);
    for (p, q, r, s, sign) in rows {
        let left = SuperPolynomial::term(s4, int(1), &[(p, 1, 2), (q, 1, 1)], &[(q, 1)])?;
        let right = SuperPolynomial::term(s4, int(1), &[(r, 1, 5), (s, 1, 7)], &[(r, 1), (s, 1)])?;
        let term = left.super_mul(&right)?;
        signed_expected = signed_expected.add(&term.scale(&int(sign)))?;
        unsigned_expected = unsigned_expected.add(&term)?;
    }
    out.push(("signed (2,2) shuffle", shuffle_product(&a, &b, true)?, signed_expected));
    out.push(("unsigned (2,2) shuffle", shuffle_product(&a, &b, false)?, unsigned_expected));

    // (r0, r1) = (3, 2) with x, y, z and α, β: (x^5 y^5 z^3 α) ⧢ (z1 β2 + z2 β1).
    let s1 = AlgebraSignature::new(3, 2, 1);
    let s2 = s1.with_rows(2);
    let s3 = s1.with_rows(3);
    let a = SuperPolynomial::term(s1, int(1), &[(1, 1, 5), (1, 2, 5), (1, 3, 3)], &[(1, 1)])?;
    let b = SuperPolynomial::term(s2, int(1), &[(1, 3, 1)], &[(2, 2)])?
        .add(&SuperPolynomial::term(s2, int(1), &[(2, 3, 1)], &[(1, 2)])?)?;
    // (row of x^5 y^5 z^3 α, extra z row, β row)
    let rows: [(usize, usize, usize); 6] = [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)];
    let mut expected = SuperPolynomial::zero(s3);
    for (k, z, beta) in rows {
        let t = SuperPolynomial::term(s3, int(1), &[(k, 1, 5), (k, 2, 5), (k, 3, 3), (z, 3, 1)], &[(k, 1), (beta, 2)])?;
        expected = expected.add(&t)?;
    }
    out.push(("unsigned (1,2) shuffle", shuffle_product(&a, &b, false)?, expected));
    Ok(out)
}

/// Elements `x^a θ^b` over one row with the given θ subset, for the sign
/// table.
pub fn one_row_monomial(r0: usize, r1: usize, x_exps: &[u32], thetas: &[usize]) -> Result<SuperPolynomial> {
    let sig = AlgebraSignature::new(r0, r1, 1);
    let x: Vec<(usize, usize, u32)> = x_exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(c, &e)| (1, c + 1, e))
        .collect();
    let th: Vec<(usize, usize)> = thetas.iter().map(|&c| (1, c)).collect();
    SuperPolynomial::term(sig, int(1), &x, &th)
}

#[cfg(test)]
mod tests;
