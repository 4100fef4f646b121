//! Numerical-positivity certification: a homogeneous symmetric polynomial
//! is numerically positive for ample bundles iff every Schur coefficient is
//! nonnegative and the coefficient sum is positive.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::basis::{expand_to_schur, SchurExpansion};
use crate::error::Error;
use crate::partition::Partition;
use crate::poly::{Coeff, Poly};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Witness {
    /// A partition whose coefficient is negative.
    NegativeCoefficient(Partition),
    /// All coefficients nonnegative but the sum is not positive.
    ZeroSum,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PositivityVerdict {
    Positive { coefficient_sum: Coeff },
    NotPositive { witness: Witness },
}

impl PositivityVerdict {
    pub fn is_positive(&self) -> bool {
        matches!(self, PositivityVerdict::Positive { .. })
    }
}

impl fmt::Display for PositivityVerdict {
    /// One-line machine format: `POSITIVE sum=<int>` or
    /// `NOT_POSITIVE witness=<partition|zero-sum>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PositivityVerdict::Positive { coefficient_sum } => {
                write!(f, "POSITIVE sum={coefficient_sum}")
            }
            PositivityVerdict::NotPositive { witness } => match witness {
                Witness::NegativeCoefficient(p) => write!(f, "NOT_POSITIVE witness={p}"),
                Witness::ZeroSum => write!(f, "NOT_POSITIVE witness=zero-sum"),
            },
        }
    }
}

/// Applies the coefficient criterion to an expansion. With a rank bound
/// `e`, partitions with more than `e` parts are excluded first (a symmetric
/// polynomial in `e` variables has no longer rows in its support).
pub fn certify_expansion(expansion: &SchurExpansion, rank_bound: Option<usize>) -> PositivityVerdict {
    let mut sum = Coeff::zero();
    let mut witness = None;
    for (part, coeff) in expansion.iter() {
        if let Some(e) = rank_bound {
            if part.len() > e {
                continue;
            }
        }
        if coeff.is_negative() && witness.is_none() {
            witness = Some(Witness::NegativeCoefficient(part.clone()));
        }
        sum += coeff;
    }
    if let Some(w) = witness {
        return PositivityVerdict::NotPositive { witness: w };
    }
    if sum.is_positive() {
        PositivityVerdict::Positive { coefficient_sum: sum }
    } else {
        PositivityVerdict::NotPositive { witness: Witness::ZeroSum }
    }
}

/// Certifies a polynomial given in Segre variables by expanding it first.
pub fn certify_seg_polynomial(p: &Poly, rank_bound: Option<usize>) -> Result<PositivityVerdict, Error> {
    let expansion = expand_to_schur(p, None)?;
    Ok(certify_expansion(&expansion, rank_bound))
}
