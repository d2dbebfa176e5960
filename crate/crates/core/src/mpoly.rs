//! Sparse multivariate polynomials over an exact coefficient field.
//!
//! Terms are stored in a map keyed by monomial under a fixed structural
//! order; term orders are supplied per operation. Canonical rendering lists
//! terms in descending grevlex over the declared variable order, which makes
//! `to_string` a stable textual form suitable for golden comparisons.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::vars::VarContext;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone)]
pub struct MPoly<F> {
    ctx: VarContext,
    terms: BTreeMap<Monomial, F>,
}

/// Exponentiation in the coefficient field by repeated multiplication; the
/// exponents arising here are small.
pub fn field_pow<F: Field>(base: &F, mut exp: u32) -> F {
    let mut acc = F::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * sq.clone();
        }
        exp >>= 1;
        if exp > 0 {
            sq = sq.clone() * sq;
        }
    }
    acc
}

impl<F: Field> MPoly<F> {
    pub fn zero_in(ctx: &VarContext) -> Self {
        MPoly { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    /// Context-free constant; embeds into any context on arithmetic.
    pub fn constant(c: F) -> Self {
        Self::constant_in(&VarContext::empty(), c)
    }

    pub fn constant_in(ctx: &VarContext, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ctx.arity()), c);
        }
        MPoly { ctx: ctx.clone(), terms }
    }

    pub fn var(ctx: &VarContext, i: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(ctx.arity(), i), F::one());
        MPoly { ctx: ctx.clone(), terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, F)>>(ctx: &VarContext, iter: I) -> Self {
        let mut p = Self::zero_in(ctx);
        for (m, c) in iter {
            debug_assert_eq!(m.arity(), ctx.arity());
            p.add_term(m, c);
        }
        p
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    /// The value when the polynomial is constant.
    pub fn constant_value(&self) -> Option<F> {
        if self.terms.is_empty() {
            Some(F::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True when the polynomial is the constant one.
    pub fn is_one(&self) -> bool {
        self.constant_value().map_or(false, |c| c.is_one())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&F> {
        self.terms.get(m)
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(i)).max().unwrap_or(0)
    }

    /// Variables occurring with positive exponent.
    pub fn support_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.ctx.arity()];
        for m in self.terms.keys() {
            for v in m.support() {
                mask[v] = true;
            }
        }
        mask
    }

    fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    /// Moves the polynomial into `ctx`: the identity when it already lives
    /// there, otherwise it must be a context-free constant.
    pub(crate) fn embed(&self, ctx: &VarContext) -> Self {
        if self.ctx.same(ctx) {
            return self.clone();
        }
        debug_assert!(self.is_constant() && self.ctx.is_empty());
        match self.constant_value() {
            Some(c) => Self::constant_in(ctx, c),
            None => Self::zero_in(ctx),
        }
    }

    pub(crate) fn unify(a: Self, b: Self) -> Result<(Self, Self)> {
        if a.ctx.same(&b.ctx) {
            Ok((a, b))
        } else if a.ctx.is_empty() && a.is_constant() {
            let ctx = b.ctx.clone();
            Ok((a.embed(&ctx), b))
        } else if b.ctx.is_empty() && b.is_constant() {
            let ctx = a.ctx.clone();
            Ok((a, b.embed(&ctx)))
        } else {
            Err(Error::ContextMismatch { left: a.ctx.to_string(), right: b.ctx.to_string() })
        }
    }

    pub fn try_add(self, other: Self) -> Result<Self> {
        let (mut a, b) = Self::unify(self, other)?;
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        Ok(a)
    }

    pub fn try_sub(self, other: Self) -> Result<Self> {
        self.try_add(-other)
    }

    pub fn try_mul(self, other: Self) -> Result<Self> {
        let (a, b) = Self::unify(self, other)?;
        let mut out = Self::zero_in(&a.ctx);
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero_in(&self.ctx);
        }
        MPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())).collect(),
        }
    }

    /// `self * c * x^m`.
    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero_in(&self.ctx);
        }
        MPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant_in(&self.ctx, F::one());
        for _ in 0..k {
            acc = acc * self.clone();
        }
        acc
    }

    pub fn leading(&self, order: &TermOrder) -> Option<(&Monomial, &F)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
            .map(|(m, c)| (m, c))
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: &TermOrder) -> Self {
        match self.leading(order) {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = F::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    pub fn map_coeffs<G: Field>(&self, mut f: impl FnMut(&F) -> G) -> MPoly<G> {
        MPoly::from_terms(&self.ctx, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Moves the polynomial into `new_ctx` via `map[i] = new index`.
    pub fn rename(&self, new_ctx: &VarContext, map: &[usize]) -> Self {
        debug_assert_eq!(map.len(), self.ctx.arity());
        MPoly::from_terms(
            new_ctx,
            self.terms.iter().map(|(m, c)| (m.rename(new_ctx.arity(), map), c.clone())),
        )
    }

    /// Moves the polynomial into a sub-context; fails if a dropped variable
    /// occurs in the support.
    pub fn restrict(&self, new_ctx: &VarContext, map: &[Option<usize>]) -> Result<Self> {
        let mut out = MPoly::zero_in(new_ctx);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; new_ctx.arity()];
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    match map[i] {
                        Some(j) => exps[j] = e,
                        None => {
                            return Err(Error::Internal(format!(
                                "cannot restrict: variable {} occurs in {}",
                                self.ctx.name(i),
                                self
                            )))
                        }
                    }
                }
            }
            out.add_term(Monomial::from_exps(exps), c.clone());
        }
        Ok(out)
    }

    /// Substitutes constants for the variables where `vals[i]` is set; the
    /// context is unchanged (substituted variables simply stop occurring).
    pub fn substitute_consts(&self, vals: &[Option<F>]) -> Self {
        debug_assert_eq!(vals.len(), self.ctx.arity());
        let mut out = Self::zero_in(&self.ctx);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = m.exps().to_vec();
            for (i, v) in vals.iter().enumerate() {
                if let Some(v) = v {
                    if exps[i] > 0 {
                        coeff = coeff * field_pow(v, exps[i]);
                        exps[i] = 0;
                    }
                }
            }
            out.add_term(Monomial::from_exps(exps), coeff);
        }
        out
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero_in(&self.ctx);
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e > 0 {
                let mut exps = m.exps().to_vec();
                exps[i] = e - 1;
                out.add_term(Monomial::from_exps(exps), c.clone() * F::from_i64(e as i64));
            }
        }
        out
    }

    /// Terms in descending order under `order`.
    pub fn sorted_terms(&self, order: &TermOrder) -> Vec<(Monomial, F)> {
        let mut v: Vec<(Monomial, F)> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        v
    }
}

impl<F: Field> PartialEq for MPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        if self.ctx.same(&other.ctx) {
            self.terms == other.terms
        } else if self.is_constant() && other.is_constant() {
            self.constant_value() == other.constant_value()
        } else {
            false
        }
    }
}

impl<F: Field> Add for MPoly<F> {
    type Output = MPoly<F>;
    fn add(self, other: Self) -> Self {
        self.try_add(other).expect("polynomial addition across contexts")
    }
}

impl<F: Field> Sub for MPoly<F> {
    type Output = MPoly<F>;
    fn sub(self, other: Self) -> Self {
        self.try_sub(other).expect("polynomial subtraction across contexts")
    }
}

impl<F: Field> Mul for MPoly<F> {
    type Output = MPoly<F>;
    fn mul(self, other: Self) -> Self {
        self.try_mul(other).expect("polynomial multiplication across contexts")
    }
}

impl<F: Field> Neg for MPoly<F> {
    type Output = MPoly<F>;
    fn neg(self) -> Self {
        MPoly {
            ctx: self.ctx,
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<F: Field> MPoly<F> {
    /// Renders the polynomial with its terms sorted under `order`; `Display`
    /// is this with graded reverse lexicographic order.
    pub fn to_string_with(&self, order: &TermOrder) -> String {
        let mut out = String::new();
        self.fmt_with(&mut out, order).expect("string formatting");
        out
    }

    fn fmt_with<W: fmt::Write>(&self, f: &mut W, order: &TermOrder) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms = self.sorted_terms(order);
        for (i, (m, c)) in terms.iter().enumerate() {
            let neg = c.display_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let mut wrote_factor = false;
            if !abs.is_one() || m.is_one() {
                let parens = if m.is_one() {
                    abs.display_parenthesized_standalone()
                } else {
                    abs.display_parenthesized()
                };
                if parens {
                    write!(f, "({abs})")?;
                } else {
                    write!(f, "{abs}")?;
                }
                wrote_factor = true;
            }
            for v in m.support() {
                if wrote_factor {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.ctx.name(v))?;
                if m.exp(v) > 1 {
                    write!(f, "^{}", m.exp(v))?;
                }
                wrote_factor = true;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Display for MPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, &TermOrder::Grevlex)
    }
}

impl<F: Field> fmt::Debug for MPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rat;

    fn ctx2() -> VarContext {
        VarContext::new(vec!["x", "y"]).unwrap()
    }

    fn q(n: i64) -> Rat {
        Rat::from_i64(n)
    }

    #[test]
    fn arithmetic_and_display() {
        let ctx = ctx2();
        let x = MPoly::var(&ctx, 0);
        let y = MPoly::var(&ctx, 1);
        let p = x.clone() * x.clone() + y.clone().scale(&q(4)) - MPoly::constant(q(3));
        assert_eq!(p.to_string(), "x^2+4*y-3");
        let sq = p.clone() * p.clone();
        assert_eq!(sq.total_degree(), 4);
        assert_eq!((p.clone() - p).to_string(), "0");
        let _ = y;
    }

    #[test]
    fn constants_unify_across_contexts() {
        let ctx = ctx2();
        let x = MPoly::var(&ctx, 0);
        let c = MPoly::constant(q(2));
        assert_eq!((x.clone() + c).to_string(), "x+2");
        let other = VarContext::new(vec!["u"]).unwrap();
        let u = MPoly::<Rat>::var(&other, 0);
        assert!(x.try_add(u).is_err());
    }

    #[test]
    fn display_signs_and_rationals() {
        let ctx = ctx2();
        let x = MPoly::var(&ctx, 0);
        let p = MPoly::constant(q(1)) - x.clone().scale(&(q(1) / q(2)));
        assert_eq!(p.to_string(), "-1/2*x+1");
        let m = -p;
        assert_eq!(m.to_string(), "1/2*x-1");
    }

    #[test]
    fn substitute_consts_evaluates() {
        let ctx = ctx2();
        let x = MPoly::var(&ctx, 0);
        let y = MPoly::var(&ctx, 1);
        let p = x.clone() * y.clone() + x.clone().scale(&q(3));
        let at = p.substitute_consts(&[Some(q(2)), None]);
        assert_eq!(at.to_string(), "2*y+6");
        let full = p.substitute_consts(&[Some(q(2)), Some(q(5))]);
        assert_eq!(full.constant_value(), Some(q(16)));
    }

    #[test]
    fn derivative_of_power() {
        let ctx = ctx2();
        let x = MPoly::var(&ctx, 0);
        let p = x.pow(3).scale(&q(2));
        assert_eq!(p.derivative(0).to_string(), "6*x^2");
        assert_eq!(p.derivative(1).to_string(), "0");
    }

    #[test]
    fn monic_normalization() {
        let ctx = ctx2();
        let x = MPoly::var(&ctx, 0);
        let y = MPoly::var(&ctx, 1);
        let p = x.scale(&q(-2)) + y.scale(&q(4));
        let m = p.monic(&TermOrder::Grevlex);
        // Grevlex lead of -2x + 4y is -2x (x before y at equal degree).
        assert_eq!(m.to_string(), "x-2*y");
    }
}
