use std::collections::HashMap;

use num_traits::Zero;
use serde::Deserialize;

use super::perm::{bfs_closure, PermGroup, Permutation};
use crate::arith::{format_rational, parse_rational, QMatrix, Rational};
use crate::error::{Error, Result};

/// An element `g = (g0, g1)` of `GL(V_even) × GL(V_odd)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GradedGroupElement {
    pub g0: QMatrix,
    pub g1: QMatrix,
}

impl GradedGroupElement {
    pub fn new(g0: QMatrix, g1: QMatrix) -> Result<Self> {
        if !g0.is_square() || !g1.is_square() {
            return Err(Error::DimensionMismatch(
                "graded group element blocks must be square".into(),
            ));
        }
        Ok(GradedGroupElement { g0, g1 })
    }

    pub fn identity(r0: usize, r1: usize) -> Self {
        GradedGroupElement {
            g0: QMatrix::identity(r0),
            g1: QMatrix::identity(r1),
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.g0.rows(), self.g1.rows())
    }

    pub fn is_identity(&self) -> bool {
        self.g0.is_identity() && self.g1.is_identity()
    }

    /// `self · other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        GradedGroupElement {
            g0: &self.g0 * &other.g0,
            g1: &self.g1 * &other.g1,
        }
    }

    pub fn is_invertible(&self) -> bool {
        let nonzero = |m: &QMatrix| m.det().map(|d| !d.is_zero()).unwrap_or(false);
        nonzero(&self.g0) && nonzero(&self.g1)
    }
}

/// A finite subgroup of `GL(V_even) × GL(V_odd)`, stored as its full list of
/// elements (identity first).
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    r0: usize,
    r1: usize,
    generators: Vec<GradedGroupElement>,
    elements: Vec<GradedGroupElement>,
    index: HashMap<GradedGroupElement, usize>,
}

impl MatrixGroup {
    /// Breadth-first closure of `generators` with deduplication by exact
    /// matrix equality. Fails with `CapExceeded` once the order would pass
    /// `cap`.
    pub fn generate(
        r0: usize,
        r1: usize,
        generators: Vec<GradedGroupElement>,
        cap: usize,
    ) -> Result<Self> {
        for g in &generators {
            if g.dims() != (r0, r1) {
                return Err(Error::DimensionMismatch(format!(
                    "generator of dims {:?} in a group on ({r0}, {r1})",
                    g.dims()
                )));
            }
            if !g.is_invertible() {
                return Err(Error::NotInvertible);
            }
        }
        let mut gens = generators;
        gens.sort();
        gens.dedup();
        let elements = bfs_closure(GradedGroupElement::identity(r0, r1), &gens, cap, |a, b| {
            a.compose(b)
        })?;
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        Ok(MatrixGroup {
            r0,
            r1,
            generators: gens,
            elements,
            index,
        })
    }

    pub fn trivial(r0: usize, r1: usize) -> Self {
        Self::generate(r0, r1, vec![], 1).expect("trivial group")
    }

    /// Permutation matrices of `perms` acting on the even part (`on_odd =
    /// false`) or the odd part.
    pub fn from_permutations(
        r0: usize,
        r1: usize,
        perms: &[Permutation],
        on_even: bool,
        on_odd: bool,
    ) -> Result<Self> {
        let gens = perms
            .iter()
            .map(|p| {
                let m = QMatrix::permutation(p.images0());
                let g0 = if on_even { m.clone() } else { QMatrix::identity(r0) };
                let g1 = if on_odd { m } else { QMatrix::identity(r1) };
                GradedGroupElement::new(g0, g1)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::generate(r0, r1, gens, crate::DEFAULT_GROUP_CAP)
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.r0, self.r1)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GradedGroupElement] {
        &self.elements
    }

    pub fn generators(&self) -> &[GradedGroupElement] {
        &self.generators
    }

    pub fn index_of(&self, g: &GradedGroupElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Index of `elements[i] · elements[j]`.
    pub fn mul_index(&self, i: usize, j: usize) -> usize {
        let p = self.elements[i].compose(&self.elements[j]);
        self.index[&p]
    }

    /// `det(g0)` when the even part is nonzero-dimensional, else `det(g1)`.
    /// For permutation actions this is the sign of the permutation.
    pub fn det_character_values(&self) -> Vec<Rational> {
        self.elements
            .iter()
            .map(|g| {
                let m = if self.r0 > 0 { &g.g0 } else { &g.g1 };
                m.det().expect("square")
            })
            .collect()
    }

    /// Views the group as permutations of the even (`odd = false`) or odd
    /// basis vectors.
    pub fn to_perm_group(&self, odd: bool) -> Result<PermGroup> {
        let n = if odd { self.r1 } else { self.r0 };
        let mut perms = Vec::new();
        for g in &self.generators {
            let m = if odd { &g.g1 } else { &g.g0 };
            let images = m.as_permutation().ok_or(Error::NotAPermutationGroup)?;
            perms.push(Permutation::from_images(images)?);
        }
        PermGroup::generate(n, perms, crate::DEFAULT_GROUP_CAP)
    }

    /// Matrix-group JSON:
    /// `{"r0": .., "r1": .., "generators": [{"g0": [["p/q", ..], ..], "g1": [[..]]}]}`.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        #[derive(Deserialize)]
        struct GenWire {
            #[serde(default)]
            g0: Vec<Vec<String>>,
            #[serde(default)]
            g1: Vec<Vec<String>>,
        }
        #[derive(Deserialize)]
        struct Wire {
            r0: usize,
            r1: usize,
            #[serde(default)]
            generators: Vec<GenWire>,
        }
        let w: Wire = serde_json::from_value(v.clone())
            .map_err(|e| Error::InvalidInput(format!("matrix group JSON: {e}")))?;
        let parse = |rows: &[Vec<String>], dim: usize| -> Result<QMatrix> {
            if rows.is_empty() && dim == 0 {
                return Ok(QMatrix::identity(0));
            }
            let m = QMatrix::from_rows(
                rows.iter()
                    .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?,
            )?;
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "expected a {dim}x{dim} block, got {}x{}",
                    m.rows(),
                    m.cols()
                )));
            }
            Ok(m)
        };
        let gens = w
            .generators
            .iter()
            .map(|g| GradedGroupElement::new(parse(&g.g0, w.r0)?, parse(&g.g1, w.r1)?))
            .collect::<Result<Vec<_>>>()?;
        Self::generate(w.r0, w.r1, gens, crate::DEFAULT_GROUP_CAP)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let m = |q: &QMatrix| -> Vec<Vec<String>> {
            q.to_rows()
                .iter()
                .map(|r| r.iter().map(format_rational).collect())
                .collect()
        };
        serde_json::json!({
            "r0": self.r0,
            "r1": self.r1,
            "generators": self.generators.iter().map(|g| serde_json::json!({
                "g0": m(&g.g0),
                "g1": m(&g.g1),
            })).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_examples() {
        let triv = MatrixGroup::generate(1, 1, vec![], 20000).unwrap();
        assert_eq!(triv.order(), 1);
        let neg = GradedGroupElement::new(QMatrix::from_i64(&[&[-1]]), QMatrix::identity(0)).unwrap();
        assert_eq!(MatrixGroup::generate(1, 0, vec![neg], 20000).unwrap().order(), 2);
        // Transpositions (1 2), (2 3) as 3x3 permutation matrices generate S_3.
        let t12 = Permutation::transposition(3, 1, 2);
        let t23 = Permutation::transposition(3, 2, 3);
        let g = MatrixGroup::from_permutations(0, 3, &[t12, t23], false, true).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn closure_is_closed() {
        let g = MatrixGroup::from_permutations(
            3,
            3,
            &[Permutation::transposition(3, 1, 2), Permutation::long_cycle(3)],
            true,
            true,
        )
        .unwrap();
        assert!(g.elements()[0].is_identity());
        for a in g.elements() {
            for b in g.elements() {
                assert!(g.index_of(&a.compose(b)).is_some());
            }
        }
        let signs = g.det_character_values();
        assert_eq!(signs.iter().filter(|s| s.is_integer() && s.numer() < &0.into()).count(), 3);
    }

    #[test]
    fn rejects_bad_generators() {
        let singular = GradedGroupElement::new(QMatrix::from_i64(&[&[0]]), QMatrix::identity(0)).unwrap();
        assert_eq!(
            MatrixGroup::generate(1, 0, vec![singular], 10).unwrap_err(),
            Error::NotInvertible
        );
        let two = GradedGroupElement::new(QMatrix::from_i64(&[&[2]]), QMatrix::identity(0)).unwrap();
        assert!(matches!(
            MatrixGroup::generate(1, 0, vec![two], 50),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let v = serde_json::json!({"r0": 1, "r1": 0, "generators": [{"g0": [["-1"]], "g1": []}]});
        let g = MatrixGroup::from_json(&v).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(MatrixGroup::from_json(&g.to_json()).unwrap().order(), 2);
        let bad = serde_json::json!({"r0": 2, "r1": 0, "generators": [{"g0": [["-1"]]}]});
        assert!(MatrixGroup::from_json(&bad).is_err());
    }

    #[test]
    fn permutation_view() {
        let g = MatrixGroup::from_permutations(0, 2, &[Permutation::transposition(2, 1, 2)], false, true)
            .unwrap();
        assert_eq!(g.to_perm_group(true).unwrap().order(), 2);
        let neg = GradedGroupElement::new(QMatrix::from_i64(&[&[-1]]), QMatrix::identity(0)).unwrap();
        let pm = MatrixGroup::generate(1, 0, vec![neg], 10).unwrap();
        assert_eq!(pm.to_perm_group(false).unwrap_err(), Error::NotAPermutationGroup);
    }
}
