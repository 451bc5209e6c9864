//! Named groups used throughout the tests, the CLI fixtures and the
//! verification batteries.

use crate::arith::QMatrix;
use crate::error::Result;
use crate::group::{GradedGroupElement, MatrixGroup, PermGroup, Permutation};

/// The trivial group on `(r0, r1)`.
pub fn trivial(r0: usize, r1: usize) -> MatrixGroup {
    MatrixGroup::trivial(r0, r1)
}

/// `{±1}` acting by scalars on a single commuting variable.
pub fn plus_minus_one() -> MatrixGroup {
    let neg = GradedGroupElement::new(QMatrix::from_i64(&[&[-1]]), QMatrix::identity(0))
        .expect("square blocks");
    MatrixGroup::generate(1, 0, vec![neg], 2).expect("order 2")
}

fn symmetric_generators(r: usize) -> Vec<Permutation> {
    if r < 2 {
        return vec![];
    }
    vec![Permutation::transposition(r, 1, 2), Permutation::long_cycle(r)]
}

/// `S_r` permuting `r` commuting variables.
pub fn symmetric_on_even(r: usize) -> MatrixGroup {
    MatrixGroup::from_permutations(r, 0, &symmetric_generators(r), true, false).expect("S_r")
}

/// `S_r` permuting `r` anticommuting variables.
pub fn symmetric_on_odd(r: usize) -> MatrixGroup {
    MatrixGroup::from_permutations(0, r, &symmetric_generators(r), false, true).expect("S_r")
}

/// `S_r` permuting `x_1..x_r` and `θ_1..θ_r` simultaneously.
pub fn symmetric_diagonal(r: usize) -> MatrixGroup {
    MatrixGroup::from_permutations(r, r, &symmetric_generators(r), true, true).expect("S_r")
}

/// The Young subgroup `S_α` permuting `|α|` anticommuting variables within
/// consecutive blocks.
pub fn young_on_odd(alpha: &[usize]) -> Result<MatrixGroup> {
    let r: usize = alpha.iter().sum();
    let mut gens = Vec::new();
    let mut start = 1;
    for &a in alpha {
        for i in start..start + a.saturating_sub(1) {
            gens.push(Permutation::transposition(r, i, i + 1));
        }
        start += a;
    }
    MatrixGroup::from_permutations(0, r, &gens, false, true)
}

/// A named group: `trivial_R0_R1`, `pm1`, `s2_even`, `s3_odd`, `s2_diag`,
/// `young_2_1`, ...
pub fn named_group(name: &str) -> Option<MatrixGroup> {
    let parts: Vec<&str> = name.split('_').collect();
    let num = |s: &str| s.parse::<usize>().ok();
    match parts.as_slice() {
        ["trivial", a, b] => Some(trivial(num(a)?, num(b)?)),
        ["pm1"] => Some(plus_minus_one()),
        [s, kind] if s.starts_with('s') => {
            let r = num(&s[1..])?;
            match *kind {
                "even" => Some(symmetric_on_even(r)),
                "odd" => Some(symmetric_on_odd(r)),
                "diag" => Some(symmetric_diagonal(r)),
                _ => None,
            }
        }
        ["young", rest @ ..] => {
            let alpha = rest.iter().map(|s| num(s)).collect::<Option<Vec<_>>>()?;
            young_on_odd(&alpha).ok()
        }
        _ => None,
    }
}

/// A named permutation group: `s3`, `c3` (cyclic), `trivial4`.
pub fn named_perm_group(name: &str) -> Option<PermGroup> {
    if let Some(n) = name.strip_prefix("trivial") {
        return Some(PermGroup::trivial(n.parse().ok()?));
    }
    let n: usize = name.get(1..)?.parse().ok()?;
    match name.as_bytes().first()? {
        b's' => Some(PermGroup::symmetric(n)),
        b'c' => Some(PermGroup::cyclic(n)),
        _ => None,
    }
}
