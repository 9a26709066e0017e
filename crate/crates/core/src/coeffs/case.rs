//! The three certification cases and their symbolic colour counts.

use std::fmt;

use crate::algebra::BiPoly;

/// Whether a bound is a lower or an upper bound on the internal energy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

/// A certification case: which bound is being proved and how the number of
/// colours q is parametrised. The offset variable r >= 0 keeps every
/// admissible q in the non-negative orthant, which is what makes
/// coefficient-sign certificates possible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    /// Lower bound at exactly q = 5.
    MinQ5,
    /// Lower bound for q >= 6, with q = r + 6.
    MinQGe6,
    /// Upper bound for q >= 5, with q = r + 5.
    MaxQGe5,
}

impl Case {
    pub const ALL: [Case; 3] = [Case::MinQ5, Case::MinQGe6, Case::MaxQGe5];

    /// Short stable label used in file headers and cache keys.
    pub fn label(self) -> &'static str {
        match self {
            Case::MinQ5 => "q5",
            Case::MinQGe6 => "qge6",
            Case::MaxQGe5 => "max",
        }
    }

    pub fn from_label(label: &str) -> Option<Case> {
        match label {
            "q5" => Some(Case::MinQ5),
            "qge6" => Some(Case::MinQGe6),
            "max" => Some(Case::MaxQGe5),
            _ => None,
        }
    }

    /// The number of colours as a polynomial in r.
    pub fn q_poly(self) -> BiPoly {
        match self {
            Case::MinQ5 => BiPoly::constant(5),
            Case::MinQGe6 => &BiPoly::var_r() + &BiPoly::constant(6),
            Case::MaxQGe5 => &BiPoly::var_r() + &BiPoly::constant(5),
        }
    }

    /// The q at r = 0, the smallest colour count the case covers.
    pub fn base_q(self) -> i64 {
        match self {
            Case::MinQ5 => 5,
            Case::MinQGe6 => 6,
            Case::MaxQGe5 => 5,
        }
    }

    /// The r value representing a concrete q, if the case covers it.
    pub fn r_for_q(self, q: i64) -> Option<i64> {
        match self {
            Case::MinQ5 => (q == 5).then_some(0),
            _ => (q >= self.base_q()).then(|| q - self.base_q()),
        }
    }

    pub fn sense(self) -> Sense {
        match self {
            Case::MinQ5 | Case::MinQGe6 => Sense::Min,
            Case::MaxQGe5 => Sense::Max,
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}
