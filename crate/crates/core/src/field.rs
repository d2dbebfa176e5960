//! The coefficient-field abstraction.
//!
//! Polynomial arithmetic and the Gröbner engine are generic over an exact
//! field of coefficients. The two fields used in practice are the rationals
//! ([`Rat`], backed by arbitrary-precision `BigRational`) and the field of
//! rational functions in the action variables ([`crate::RatFunc`]).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Rational number with arbitrary-precision numerator and denominator.
pub type Rat = BigRational;

/// An exact field: all arithmetic is exact and equality is decidable.
///
/// Division by zero panics, mirroring integer division in the standard
/// library; callers guard with [`num_traits::Zero::is_zero`].
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Embeds a machine integer.
    fn from_i64(n: i64) -> Self;

    /// Embeds a rational constant.
    fn from_rat(r: &Rat) -> Self;

    /// True when `Display` renders this element with a leading minus sign.
    /// Used by polynomial rendering to fold signs into `+`/`-` separators.
    fn display_negative(&self) -> bool;

    /// True when the rendered form must be parenthesized inside a product.
    fn display_parenthesized(&self) -> bool {
        false
    }

    /// True when the rendered form must be parenthesized even standing
    /// alone after a sign (a top-level sum; quotients are unambiguous).
    fn display_parenthesized_standalone(&self) -> bool {
        self.display_parenthesized()
    }
}

impl Field for Rat {
    fn from_i64(n: i64) -> Self {
        Rat::from_integer(BigInt::from(n))
    }

    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }

    fn display_negative(&self) -> bool {
        self.is_negative()
    }
}

/// Parses a rational constant of the form `a` or `a/b` (used by tests and
/// point parsing; expression input goes through [`crate::parse`]).
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
        Some((a, b)) => {
            let num = a.trim().parse::<BigInt>().ok()?;
            let den = b.trim().parse::<BigInt>().ok()?;
            if den.is_zero() {
                None
            } else {
                Some(Rat::new(num, den))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_display_matches_canonical_form() {
        assert_eq!(Rat::from_i64(5).to_string(), "5");
        assert_eq!((Rat::from_i64(3) / Rat::from_i64(2)).to_string(), "3/2");
        assert_eq!((Rat::from_i64(-3) / Rat::from_i64(2)).to_string(), "-3/2");
        assert_eq!((Rat::from_i64(4) / Rat::from_i64(2)).to_string(), "2");
    }

    #[test]
    fn rat_from_str_parses_fractions() {
        assert_eq!(rat_from_str("-7/3"), Some(Rat::from_i64(-7) / Rat::from_i64(3)));
        assert_eq!(rat_from_str("12"), Some(Rat::from_i64(12)));
        assert_eq!(rat_from_str("1/0"), None);
    }
}
