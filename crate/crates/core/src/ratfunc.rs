//! Rational functions over the rationals in a shared variable context.
//!
//! Values are kept in canonical form — numerator and denominator coprime,
//! denominator monic under grevlex — so structural equality coincides with
//! equality of rational functions and `to_string` is a stable canonical
//! rendering.

use crate::error::{Error, Result};
use crate::field::{Field, Rat};
use crate::gcd;
use crate::mpoly::{field_pow, MPoly};
use crate::order::TermOrder;
use crate::vars::VarContext;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

type QPoly = MPoly<Rat>;

#[derive(Clone, PartialEq)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    /// Builds `num/den` in canonical form; fails on a zero denominator.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (num, den) = MPoly::unify(num, den)?;
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            let ctx = num.ctx().clone();
            return RatFunc {
                num: MPoly::zero_in(&ctx),
                den: MPoly::constant_in(&ctx, Rat::one()),
            };
        }
        let g = gcd::gcd(&num, &den);
        let mut num = gcd::div_exact(&num, &g).expect("gcd divides");
        let mut den = gcd::div_exact(&den, &g).expect("gcd divides");
        let lc = den.leading(&TermOrder::Grevlex).expect("non-zero denominator").1.clone();
        if !lc.is_one() {
            let inv = Rat::one() / lc;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: QPoly) -> Self {
        let one = MPoly::constant_in(p.ctx(), Rat::one());
        RatFunc { num: p, den: one }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_poly(MPoly::constant(c))
    }

    pub fn var(ctx: &VarContext, i: usize) -> Self {
        Self::from_poly(MPoly::var(ctx, i))
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn ctx(&self) -> &VarContext {
        if self.num.ctx().is_empty() {
            self.den.ctx()
        } else {
            self.num.ctx()
        }
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.num.constant_value()? / self.den.constant_value()?)
        } else {
            None
        }
    }

    pub fn try_div(self, other: Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(self.num * other.den, self.den * other.num)
    }

    pub fn inv(&self) -> Result<Self> {
        RatFunc::one().try_div(self.clone())
    }

    /// Flips the overall sign so the numerator's grevlex-leading coefficient
    /// is positive; used to canonicalize invariant generators up to sign.
    pub fn sign_normalized(&self) -> Self {
        if self.display_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Evaluates at a rational point; errors when the denominator vanishes.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        let vals: Vec<Option<Rat>> = point.iter().cloned().map(Some).collect();
        let d = self
            .den
            .substitute_consts(&vals)
            .constant_value()
            .ok_or_else(|| Error::Internal("incomplete evaluation point".into()))?;
        if d.is_zero() {
            return Err(Error::ExcludedLocus { denominator: self.den.to_string() });
        }
        let n = self
            .num
            .substitute_consts(&vals)
            .constant_value()
            .ok_or_else(|| Error::Internal("incomplete evaluation point".into()))?;
        Ok(n / d)
    }

    /// Substitutes a value for every variable of the context; errors when the
    /// denominator collapses to zero.
    pub fn substitute(&self, bindings: &[RatFunc]) -> Result<RatFunc> {
        let d = poly_eval_in::<RatFunc>(&self.den, bindings);
        if d.is_zero() {
            return Err(Error::ExcludedLocus { denominator: self.den.to_string() });
        }
        let n = poly_eval_in::<RatFunc>(&self.num, bindings);
        n.try_div(d)
    }

    /// Partial derivative.
    pub fn derivative(&self, v: usize) -> RatFunc {
        let p = self.num.derivative(v) * self.den.clone() - self.num.clone() * self.den.derivative(v);
        let q = self.den.clone() * self.den.clone();
        RatFunc::new(p, q).expect("non-zero denominator square")
    }
}

/// Evaluates a rational-coefficient polynomial with all variables bound to
/// elements of an arbitrary field.
pub fn poly_eval_in<F: Field>(p: &QPoly, bindings: &[F]) -> F {
    assert_eq!(bindings.len(), p.ctx().arity(), "binding arity mismatch");
    let mut acc = F::zero();
    for (m, c) in p.iter() {
        let mut t = F::from_rat(c);
        for v in m.support() {
            t = t * field_pow(&bindings[v], m.exp(v));
        }
        acc = acc + t;
    }
    acc
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, o: Self) -> Self {
        RatFunc::new(
            self.num.clone() * o.den.clone() + o.num.clone() * self.den.clone(),
            self.den * o.den,
        )
        .expect("non-zero denominator product")
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: Self) -> Self {
        RatFunc::new(self.num * o.num, self.den * o.den).expect("non-zero denominator product")
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, o: Self) -> Self {
        self.try_div(o).expect("division by zero rational function")
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> Self {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::constant(Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::constant(Rat::one())
    }
    fn is_one(&self) -> bool {
        self.num == self.den
    }
}

impl Field for RatFunc {
    fn from_i64(n: i64) -> Self {
        RatFunc::constant(Rat::from_i64(n))
    }

    fn from_rat(r: &Rat) -> Self {
        RatFunc::constant(r.clone())
    }

    fn display_negative(&self) -> bool {
        self.num
            .leading(&TermOrder::Grevlex)
            .map(|(_, c)| c.display_negative())
            .unwrap_or(false)
    }

    fn display_parenthesized(&self) -> bool {
        !self.den.is_one() || self.num.num_terms() > 1
    }

    fn display_parenthesized_standalone(&self) -> bool {
        self.den.is_one() && self.num.num_terms() > 1
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        write!(f, "/")?;
        // Denominators render bare only when unambiguous: a single power of a
        // single variable with unit coefficient.
        let bare = self.den.num_terms() == 1 && {
            let (m, c) = self.den.iter().next().unwrap();
            c.is_one() && m.support().count() == 1
        };
        if bare {
            write!(f, "{}", self.den)
        } else {
            write!(f, "({})", self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_poly, parse_ratfunc};

    fn ctx() -> VarContext {
        VarContext::new(vec!["z1", "z2"]).unwrap()
    }

    fn rf(s: &str) -> RatFunc {
        parse_ratfunc(s, &ctx()).unwrap()
    }

    #[test]
    fn normalization_cancels_and_makes_den_monic() {
        let c = ctx();
        let num = parse_poly("2*z1^2-2*z2^2", &c).unwrap();
        let den = parse_poly("4*z1+4*z2", &c).unwrap();
        let r = RatFunc::new(num, den).unwrap();
        assert_eq!(r.to_string(), "1/2*z1-1/2*z2");
        assert_eq!(rf("(2*z1^2-2*z2^2)/(4*z1+4*z2)"), r);
    }

    #[test]
    fn display_forms() {
        assert_eq!(rf("z2/z1").to_string(), "z2/z1");
        assert_eq!(rf("(z1^2+z2^2)/z1").to_string(), "(z1^2+z2^2)/z1");
        assert_eq!(rf("1/(2*z1)").to_string(), "1/2/z1");
        assert_eq!(rf("3/2").to_string(), "3/2");
        assert_eq!((-rf("z2/z1")).to_string(), "-z2/z1");
    }

    #[test]
    fn field_axioms_spot_checks() {
        let a = rf("z2/z1");
        let b = rf("(z1+z2)/(z1-z2)");
        assert_eq!(a.clone() * a.clone().inv().unwrap(), RatFunc::one());
        assert_eq!(a.clone() + (-a.clone()), RatFunc::zero());
        assert_eq!((a.clone() + b.clone()) - b, a);
    }

    #[test]
    fn substitution_detects_vanishing_denominator() {
        let r = rf("z2/z1");
        let zero = RatFunc::zero();
        let one = RatFunc::one();
        assert!(r.substitute(&[zero, one.clone()]).is_err());
        let c = ctx();
        let id: Vec<RatFunc> = (0..2).map(|i| RatFunc::var(&c, i)).collect();
        assert_eq!(r.substitute(&id).unwrap(), r);
    }

    #[test]
    fn sign_normalization() {
        let r = rf("(-z2)/z1");
        assert_eq!(r.sign_normalized().to_string(), "z2/z1");
        assert_eq!(rf("z2/z1").sign_normalized(), rf("z2/z1"));
    }

    #[test]
    fn derivative_quotient_rule() {
        let r = rf("z2/z1");
        assert_eq!(r.derivative(0), rf("(-z2)/(z1^2)"));
        assert_eq!(r.derivative(1), rf("1/z1"));
    }
}
