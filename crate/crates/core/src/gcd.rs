//! Polynomial GCDs.
//!
//! Multivariate GCD over the rationals via recursion on a main variable:
//! contents and primitive parts are split off and the primitive parts run
//! through a primitive pseudo-remainder sequence. Results are normalized
//! monic under grevlex. A small dense univariate toolkit over an arbitrary
//! coefficient field supports minimal-polynomial and squarefree computations.

use crate::field::{Field, Rat};
use crate::monomial::Monomial;
use crate::mpoly::MPoly;
use crate::order::TermOrder;
use num_traits::One;

type QPoly = MPoly<Rat>;

/// Exact division: `Some(a / b)` when `b` divides `a`, else `None`.
pub fn div_exact<F: Field>(a: &MPoly<F>, b: &MPoly<F>) -> Option<MPoly<F>> {
    assert!(!b.is_zero(), "division by the zero polynomial");
    let order = TermOrder::Grevlex;
    let ctx = if a.ctx().is_empty() { b.ctx().clone() } else { a.ctx().clone() };
    let (bm, bc) = {
        let (m, c) = b.leading(&order)?;
        (m.clone(), c.clone())
    };
    let mut rem = a.clone();
    let mut quot = MPoly::zero_in(&ctx);
    while !rem.is_zero() {
        let (lm, lc) = {
            let (m, c) = rem.leading(&order).unwrap();
            (m.clone(), c.clone())
        };
        if !bm.divides(&lm) {
            return None;
        }
        let t = bm.div_into(&lm);
        let c = lc / bc.clone();
        quot = quot + MPoly::from_terms(&ctx, [(t.clone(), c.clone())]);
        rem = rem - b.mul_term(&t, &c);
    }
    Some(quot)
}

/// Coefficients of `p` viewed as a univariate polynomial in variable `v`;
/// the returned polynomials live in the same context with `v` zeroed out.
fn uni_coeffs(p: &QPoly, v: usize) -> Vec<(u32, QPoly)> {
    let mut by_deg: std::collections::BTreeMap<u32, QPoly> = std::collections::BTreeMap::new();
    for (m, c) in p.iter() {
        let d = m.exp(v);
        let mut exps = m.exps().to_vec();
        exps[v] = 0;
        let entry = by_deg.entry(d).or_insert_with(|| MPoly::zero_in(p.ctx()));
        *entry = entry.clone() + MPoly::from_terms(p.ctx(), [(Monomial::from_exps(exps), c.clone())]);
    }
    by_deg.into_iter().collect()
}

fn coeff_of_power(p: &QPoly, v: usize, d: u32) -> QPoly {
    let mut out = MPoly::zero_in(p.ctx());
    for (m, c) in p.iter() {
        if m.exp(v) == d {
            let mut exps = m.exps().to_vec();
            exps[v] = 0;
            out = out + MPoly::from_terms(p.ctx(), [(Monomial::from_exps(exps), c.clone())]);
        }
    }
    out
}

/// Content of `p` with respect to `v`: the gcd of its `v`-coefficients.
fn content_wrt(p: &QPoly, v: usize) -> QPoly {
    let mut c = MPoly::zero_in(p.ctx());
    for (_, coeff) in uni_coeffs(p, v) {
        c = gcd(&c, &coeff);
        if c.is_constant() && !c.is_zero() {
            break;
        }
    }
    c
}

fn primitive_part(p: &QPoly, v: usize) -> QPoly {
    let c = content_wrt(p, v);
    div_exact(p, &c).expect("content must divide")
}

/// Pseudo-remainder of `f` by `g` with respect to `v` (`deg_v g >= 1`).
fn prem(f: &QPoly, g: &QPoly, v: usize) -> QPoly {
    let dg = g.degree_in(v);
    let lcg = coeff_of_power(g, v, dg);
    let mut r = f.clone();
    while !r.is_zero() {
        let dr = r.degree_in(v);
        if dr < dg {
            break;
        }
        let lcr = coeff_of_power(&r, v, dr);
        let shift = Monomial::var(r.ctx().arity(), v).pow(dr - dg);
        r = r * lcg.clone() - g.mul_term(&shift, &Rat::one()) * lcr;
    }
    r
}

/// GCD of two rational-coefficient polynomials, monic under grevlex.
pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let order = TermOrder::Grevlex;
    if a.is_zero() {
        return b.monic(&order);
    }
    if b.is_zero() {
        return a.monic(&order);
    }
    if a.is_constant() || b.is_constant() {
        let ctx = if a.ctx().is_empty() { b.ctx() } else { a.ctx() };
        return MPoly::constant_in(ctx, Rat::one());
    }
    let mask_a = a.support_mask();
    let mask_b = b.support_mask();
    // Main variable: the first one occurring in either operand.
    let v = (0..mask_a.len()).find(|&i| mask_a[i] || mask_b[i]).unwrap();
    if !mask_b[v] {
        // `b` is v-free: every common divisor is v-free and divides cont_v(a).
        return gcd(&content_wrt(a, v), b);
    }
    if !mask_a[v] {
        return gcd(a, &content_wrt(b, v));
    }
    let ca = content_wrt(a, v);
    let cb = content_wrt(b, v);
    let c = gcd(&ca, &cb);
    let mut f = div_exact(a, &ca).expect("content divides");
    let mut g = div_exact(b, &cb).expect("content divides");
    if f.degree_in(v) < g.degree_in(v) {
        std::mem::swap(&mut f, &mut g);
    }
    // Primitive pseudo-remainder sequence on the primitive parts.
    let pp_gcd = loop {
        let r = prem(&f, &g, v);
        if r.is_zero() {
            break g;
        }
        if r.degree_in(v) == 0 {
            // Non-zero v-free remainder: the primitive parts are coprime.
            break MPoly::constant_in(a.ctx(), Rat::one());
        }
        f = g;
        g = primitive_part(&r, v);
    };
    (c * pp_gcd).monic(&order)
}

/// Least common multiple, monic under grevlex.
pub fn lcm(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_zero() || b.is_zero() {
        return MPoly::zero_in(a.ctx());
    }
    let g = gcd(a, b);
    let q = div_exact(a, &g).expect("gcd divides");
    (q * b.clone()).monic(&TermOrder::Grevlex)
}

/// Largest squarefree divisor, monic under grevlex (characteristic zero).
pub fn squarefree_part(p: &QPoly) -> QPoly {
    if p.is_constant() {
        return MPoly::constant_in(p.ctx(), Rat::one());
    }
    let mut d = p.clone();
    for v in 0..p.ctx().arity() {
        if p.degree_in(v) > 0 {
            d = gcd(&d, &p.derivative(v));
        }
    }
    div_exact(p, &d).expect("radical divisor divides").monic(&TermOrder::Grevlex)
}

/// Dense univariate polynomials over an arbitrary field, coefficients in
/// ascending degree order with no trailing zeros.
pub mod uni {
    use super::Field;
    use num_traits::Zero;

    pub fn trim<F: Field>(mut c: Vec<F>) -> Vec<F> {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        c
    }

    pub fn degree<F: Field>(c: &[F]) -> Option<usize> {
        if c.is_empty() {
            None
        } else {
            Some(c.len() - 1)
        }
    }

    pub fn monic<F: Field>(c: Vec<F>) -> Vec<F> {
        match c.last().cloned() {
            None => c,
            Some(lc) => c.into_iter().map(|a| a / lc.clone()).collect(),
        }
    }

    /// Remainder of `f` divided by non-zero `g`.
    pub fn rem<F: Field>(f: &[F], g: &[F]) -> Vec<F> {
        let dg = degree(g).expect("division by zero polynomial");
        let lc = g.last().unwrap().clone();
        let mut r: Vec<F> = f.to_vec();
        while degree(&r).is_some_and(|dr| dr >= dg) {
            let dr = r.len() - 1;
            let q = r.last().unwrap().clone() / lc.clone();
            let shift = dr - dg;
            for (i, gc) in g.iter().enumerate() {
                let idx = i + shift;
                r[idx] = r[idx].clone() - q.clone() * gc.clone();
            }
            r = trim(r);
        }
        r
    }

    pub fn gcd<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
        let mut f = trim(a.to_vec());
        let mut g = trim(b.to_vec());
        while !g.is_empty() {
            let r = rem(&f, &g);
            f = g;
            g = r;
        }
        monic(f)
    }

    pub fn derivative<F: Field>(c: &[F]) -> Vec<F> {
        let d: Vec<F> = c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| a.clone() * F::from_i64(i as i64))
            .collect();
        trim(d)
    }

    pub fn div_exact<F: Field>(f: &[F], g: &[F]) -> Option<Vec<F>> {
        let dg = degree(g)?;
        let lc = g.last().unwrap().clone();
        let mut r: Vec<F> = f.to_vec();
        let mut q = vec![F::zero(); f.len()];
        while let Some(dr) = degree(&r) {
            if dr < dg {
                return None;
            }
            let c = r.last().unwrap().clone() / lc.clone();
            let shift = dr - dg;
            q[shift] = c.clone();
            for (i, gc) in g.iter().enumerate() {
                r[i + shift] = r[i + shift].clone() - c.clone() * gc.clone();
            }
            r = trim(r);
        }
        Some(trim(q))
    }

    pub fn is_squarefree<F: Field>(c: &[F]) -> bool {
        let d = derivative(c);
        if d.is_empty() {
            return degree(c).map_or(true, |deg| deg == 0);
        }
        gcd(c, &d).len() == 1
    }

    /// `f / gcd(f, f')`, monic.
    pub fn squarefree_part<F: Field>(c: &[F]) -> Vec<F> {
        let d = derivative(c);
        if d.is_empty() {
            return monic(trim(c.to_vec()));
        }
        let g = gcd(c, &d);
        monic(div_exact(c, &g).expect("gcd divides"))
    }

    /// Evaluates at a point.
    pub fn eval<F: Field>(c: &[F], x: &F) -> F {
        let mut acc = F::zero();
        for a in c.iter().rev() {
            acc = acc * x.clone() + a.clone();
        }
        acc
    }

    /// Rational roots of a non-zero polynomial over the rationals, sorted
    /// ascending. Exact through degree two; for higher degrees the
    /// candidate search caps divisor enumeration, so very large leading or
    /// trailing coefficients may hide roots (the callers treat sampling as
    /// best-effort).
    pub fn rational_roots(c: &[super::Rat]) -> Vec<super::Rat> {
        use crate::field::Rat;
        use num_bigint::BigInt;
        use num_integer::Integer;

        let c = trim(c.to_vec());
        assert!(!c.is_empty(), "roots of the zero polynomial");
        let k = c.iter().position(|a| !a.is_zero()).unwrap();
        let mut roots = Vec::new();
        if k > 0 {
            roots.push(Rat::zero());
        }
        let c = &c[k..];
        match c.len() {
            1 => {}
            2 => roots.push(-c[0].clone() / c[1].clone()),
            3 => {
                // Exact quadratic formula: rational roots need a perfect
                // square discriminant after clearing denominators.
                let (a, b, cc) = (c[2].clone(), c[1].clone(), c[0].clone());
                let disc = b.clone() * b.clone() - Rat::from_i64(4) * a.clone() * cc;
                if disc >= Rat::zero() {
                    let (dn, dd) = (disc.numer().clone(), disc.denom().clone());
                    let sn = dn.sqrt();
                    let sd = dd.sqrt();
                    if &sn * &sn == dn && &sd * &sd == dd {
                        let s = Rat::new(sn, sd);
                        let two_a = Rat::from_i64(2) * a;
                        roots.push((-b.clone() + s.clone()) / two_a.clone());
                        roots.push((-b - s) / two_a);
                    }
                }
            }
            _ => {
                let mut den_lcm = BigInt::from(1);
                for a in c {
                    den_lcm = den_lcm.lcm(a.denom());
                }
                let ints: Vec<BigInt> =
                    c.iter().map(|a| (a * Rat::from_integer(den_lcm.clone())).to_integer()).collect();
                let p_divs = capped_divisors(&ints[0]);
                let q_divs = capped_divisors(ints.last().unwrap());
                for p in &p_divs {
                    for q in &q_divs {
                        for sign in [1i64, -1] {
                            let cand = Rat::new(p * BigInt::from(sign), q.clone());
                            if eval(c, &cand).is_zero() && !roots.contains(&cand) {
                                roots.push(cand);
                            }
                        }
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        roots
    }

    fn capped_divisors(n: &num_bigint::BigInt) -> Vec<num_bigint::BigInt> {
        use num_bigint::BigInt;
        use num_integer::Integer;
        let n = if n.sign() == num_bigint::Sign::Minus { -n } else { n.clone() };
        let mut out = vec![n.clone()];
        let mut d = BigInt::from(1);
        let cap = BigInt::from(100_000);
        while &d * &d <= n && d <= cap {
            if n.is_multiple_of(&d) {
                out.push(d.clone());
                out.push(&n / &d);
            }
            d += 1;
        }
        out.sort();
        out.dedup();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vars::VarContext;
    use crate::parse::parse_poly;

    fn ctx3() -> VarContext {
        VarContext::new(vec!["x", "y", "z"]).unwrap()
    }

    fn p(s: &str) -> QPoly {
        parse_poly(s, &ctx3()).unwrap()
    }

    #[test]
    fn exact_division() {
        let a = p("x^2-y^2");
        let b = p("x+y");
        assert_eq!(div_exact(&a, &b).unwrap(), p("x-y"));
        assert_eq!(div_exact(&a, &p("x+2*y")), None);
    }

    #[test]
    fn gcd_of_products() {
        let c = p("x+y+1");
        let a = p("x-y") * c.clone();
        let b = p("x^2+y") * c.clone();
        assert_eq!(gcd(&a, &b), c.monic(&TermOrder::Grevlex));
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        assert_eq!(gcd(&p("x+1"), &p("y+1")), p("1"));
        assert_eq!(gcd(&p("x*y"), &p("z")), p("1"));
    }

    #[test]
    fn gcd_with_contents() {
        // Common factor sits partly in the content w.r.t. x.
        let a = p("y*x^2+y^2*x");     // x*y*(x+y)
        let b = p("y^2*x+y^3");       // y^2*(x+y)
        assert_eq!(gcd(&a, &b), p("x*y+y^2"));
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        let sq = p("x+y").pow(3) * p("x-z");
        assert_eq!(squarefree_part(&sq), (p("x+y") * p("x-z")).monic(&TermOrder::Grevlex));
    }

    #[test]
    fn uni_gcd_and_squarefree() {
        use crate::field::Rat;
        let one = Rat::from_i64(1);
        // (x-1)^2 (x+2) = x^3 - 3x + 2
        let f = vec![Rat::from_i64(2), Rat::from_i64(-3), Rat::from_i64(0), one.clone()];
        assert!(!uni::is_squarefree(&f));
        let sf = uni::squarefree_part(&f);
        // (x-1)(x+2) = x^2 + x - 2
        assert_eq!(sf, vec![Rat::from_i64(-2), one.clone(), one]);
    }

    #[test]
    fn uni_rational_roots_of_cubic() {
        use crate::field::Rat;
        // (x-2)(x+3)(2x-1) = 2x^3 + x^2 - 13x + 6
        let f: Vec<Rat> = [6, -13, 1, 2].iter().map(|&n| Rat::from_i64(n)).collect();
        let roots = uni::rational_roots(&f);
        assert_eq!(
            roots,
            vec![Rat::from_i64(-3), Rat::new(1.into(), 2.into()), Rat::from_i64(2)]
        );
    }
}
