pub mod arith;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod molien;
pub mod shuffle;
pub mod superalg;
pub mod symfunc;
pub mod verify;
pub mod wreath_series;

/// Default order cap for matrix and permutation group closures.
pub const DEFAULT_GROUP_CAP: usize = 20_000;

/// Invariants (trivial character) or antiinvariants (the sign character).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Flavor {
    Invariant,
    Sgn,
}

impl Flavor {
    pub const BOTH: [Flavor; 2] = [Flavor::Invariant, Flavor::Sgn];

    pub fn is_signed(self) -> bool {
        self == Flavor::Sgn
    }

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Invariant => "invariant",
            Flavor::Sgn => "sgn",
        }
    }

    pub fn parse(s: &str) -> error::Result<Self> {
        match s {
            "invariant" | "trivial" => Ok(Flavor::Invariant),
            "sgn" | "antiinvariant" => Ok(Flavor::Sgn),
            _ => Err(error::Error::InvalidInput(format!("unknown flavor {s:?}"))),
        }
    }
}

// Book chapters, compiled and run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/series.md")]
    struct Series;
    #[doc = include_str!("../../../book/src/superpolynomials.md")]
    struct Superpolynomials;
    #[doc = include_str!("../../../book/src/groups.md")]
    struct Groups;
    #[doc = include_str!("../../../book/src/molien.md")]
    struct Molien;
    #[doc = include_str!("../../../book/src/cycle_index.md")]
    struct CycleIndex;
    #[doc = include_str!("../../../book/src/wreath.md")]
    struct Wreath;
    #[doc = include_str!("../../../book/src/collation.md")]
    struct Collation;
    #[doc = include_str!("../../../book/src/shuffle.md")]
    struct Shuffle;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
