use num_traits::{One, Zero};
use serde::Deserialize;

use super::matrix_group::MatrixGroup;
use crate::arith::{format_rational, int, parse_rational, Rational};
use crate::error::{Error, Result};

/// A homomorphism `G -> Q^×`, stored as its values in the group's element
/// order. Over the rationals the only possible values are `±1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearCharacter {
    values: Vec<Rational>,
}

impl LinearCharacter {
    pub fn trivial(order: usize) -> Self {
        LinearCharacter {
            values: vec![Rational::one(); order],
        }
    }

    /// Trusted constructor for characters known to be homomorphisms, such as
    /// `sgn` on a wreath product.
    pub fn from_signs(signs: impl IntoIterator<Item = i32>) -> Self {
        LinearCharacter {
            values: signs.into_iter().map(|s| int(s as i64)).collect(),
        }
    }

    /// Validates `values` against a group given by its order, the index of a
    /// product `mul(i, j)`, and the indices of a generating set. Checking
    /// `χ(x s) = χ(x) χ(s)` for every element `x` and generator `s` suffices.
    pub fn validated(
        values: Vec<Rational>,
        order: usize,
        generators: &[usize],
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        if values.len() != order {
            return Err(Error::InvalidCharacter(format!(
                "{} values for a group of order {order}",
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| v.is_zero()) {
            return Err(Error::InvalidCharacter(format!("value {v} is zero")));
        }
        if let Some(v) = values.iter().find(|v| !(v.is_one() || (-*v).is_one())) {
            return Err(Error::InvalidCharacter(format!(
                "value {} is not ±1",
                format_rational(v)
            )));
        }
        if !values[0].is_one() {
            return Err(Error::InvalidCharacter("identity value must be 1".into()));
        }
        for x in 0..order {
            for &s in generators {
                if values[mul(x, s)] != &values[x] * &values[s] {
                    return Err(Error::InvalidCharacter(format!(
                        "not multiplicative at elements {x} and {s}"
                    )));
                }
            }
        }
        Ok(LinearCharacter { values })
    }

    pub fn for_matrix_group(g: &MatrixGroup, spec: &CharacterSpec) -> Result<Self> {
        match spec {
            CharacterSpec::Trivial => Ok(Self::trivial(g.order())),
            CharacterSpec::Sgn => Ok(LinearCharacter {
                values: g.det_character_values(),
            }),
            CharacterSpec::Explicit(values) => {
                let gens: Vec<usize> = g
                    .generators()
                    .iter()
                    .filter_map(|x| g.index_of(x))
                    .collect();
                Self::validated(values.clone(), g.order(), &gens, |i, j| g.mul_index(i, j))
            }
        }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, i: usize) -> &Rational {
        &self.values[i]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v.is_one())
    }
}

/// `"trivial"`, `"sgn"`, or `{"values": ["1", "-1", ...]}` in element order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CharacterSpec {
    Trivial,
    Sgn,
    Explicit(Vec<Rational>),
}

impl CharacterSpec {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "trivial" => return Ok(CharacterSpec::Trivial),
            "sgn" => return Ok(CharacterSpec::Sgn),
            _ => {}
        }
        #[derive(Deserialize)]
        struct Wire {
            values: Vec<String>,
        }
        let w: Wire = serde_json::from_str(s)
            .map_err(|e| Error::InvalidCharacter(format!("character spec: {e}")))?;
        Ok(CharacterSpec::Explicit(
            w.values.iter().map(|v| parse_rational(v)).collect::<Result<_>>()?,
        ))
    }
}
