//! Buchberger engine and ideal-theoretic operations.
//!
//! The engine computes reduced Gröbner bases deterministically: pairs are
//! pruned with the Gebauer–Möller installation of the two Buchberger
//! criteria, selected by the normal strategy (smallest lcm in the term
//! order), and all tie-breaks are fixed. On top of the core sit elimination,
//! saturation, lifting to the parameter field, zero-dimensionality and
//! dimension tests, standard monomials, minimal polynomials and the
//! Seidenberg radical test.

use crate::error::{Error, Result};
use crate::field::{Field, Rat};
use crate::gcd::uni;
use crate::matrix::Mat;
use crate::monomial::Monomial;
use crate::mpoly::MPoly;
use crate::order::{BaseOrder, OrderBlock, TermOrder};
use crate::ratfunc::RatFunc;
use crate::vars::VarContext;
use num_traits::Zero;
use std::cmp::Ordering;

/// Term list sorted strictly descending under the active order.
type Terms<F> = Vec<(Monomial, F)>;

fn to_terms<F: Field>(p: &MPoly<F>, order: &TermOrder) -> Terms<F> {
    p.sorted_terms(order)
}

fn to_mpoly<F: Field>(ctx: &VarContext, t: Terms<F>) -> MPoly<F> {
    MPoly::from_terms(ctx, t)
}

/// `a - c * x^shift * b`, both inputs and the result sorted descending.
fn sub_mul<F: Field>(a: &Terms<F>, b: &Terms<F>, shift: &Monomial, c: &F, order: &TermOrder) -> Terms<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.len() && j < b.len() {
        let bm = b[j].0.mul(shift);
        match order.cmp(&a[i].0, &bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((bm, -(c.clone() * b[j].1.clone())));
                j += 1;
            }
            Ordering::Equal => {
                let s = a[i].1.clone() - c.clone() * b[j].1.clone();
                if !s.is_zero() {
                    out.push((bm, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for (m, v) in &b[j..] {
        out.push((m.mul(shift), -(c.clone() * v.clone())));
    }
    out
}

fn scale_terms<F: Field>(t: &mut Terms<F>, c: &F) {
    for (_, v) in t.iter_mut() {
        *v = v.clone() * c.clone();
    }
}

fn make_monic<F: Field>(t: &mut Terms<F>) {
    if let Some((_, lc)) = t.first() {
        if !lc.is_one() {
            let inv = F::one() / lc.clone();
            scale_terms(t, &inv);
        }
    }
}

/// Full normal form: rewrites the highest reducible term first, scanning the
/// divisors in basis order.
fn normal_form_terms<F: Field>(p: Terms<F>, basis: &[Terms<F>], order: &TermOrder) -> Terms<F> {
    let mut out: Terms<F> = Vec::new();
    let mut work = p;
    'outer: while let Some((lm, lc)) = work.first().cloned() {
        for g in basis {
            let (gm, gc) = g.first().expect("basis elements are non-zero");
            if gm.divides(&lm) {
                let shift = gm.div_into(&lm);
                let c = lc.clone() / gc.clone();
                work = sub_mul(&work, g, &shift, &c, order);
                continue 'outer;
            }
        }
        out.push(work.remove(0));
    }
    out
}

fn spoly<F: Field>(f: &Terms<F>, g: &Terms<F>, lcm: &Monomial, order: &TermOrder) -> Terms<F> {
    let (fm, fc) = f.first().expect("non-zero");
    let (gm, gc) = g.first().expect("non-zero");
    let uf = fm.div_into(lcm);
    let ug = gm.div_into(lcm);
    let mut a: Terms<F> = f.iter().map(|(m, c)| (m.mul(&uf), c.clone() / fc.clone())).collect();
    let inv = F::one() / gc.clone();
    a = sub_mul(&a, g, &ug, &inv, order);
    a
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Gebauer–Möller pair update on appending basis element `t`.
fn update_pairs<F: Field>(pairs: &mut Vec<Pair>, basis: &[Terms<F>], t: usize) {
    let lead = |k: usize| -> &Monomial { &basis[k].first().expect("non-zero").0 };
    let lt = lead(t).clone();

    let cand: Vec<Pair> = (0..t)
        .map(|i| Pair { i, j: t, lcm: lead(i).lcm(&lt) })
        .collect();
    // First Buchberger criterion flags plus lcm-divisibility pruning
    // (criterion M/F of the Gebauer–Möller installation).
    let mut kept: Vec<Pair> = Vec::new();
    let mut dropped = vec![false; cand.len()];
    for idx in 0..cand.len() {
        let coprime = lead(cand[idx].i).coprime(&lt);
        if coprime {
            continue; // handled below: never creates an S-polynomial
        }
        let mut redundant = false;
        for (other_idx, other) in cand.iter().enumerate() {
            if other_idx == idx || dropped[other_idx] {
                continue;
            }
            if other.lcm.divides(&cand[idx].lcm)
                && (other.lcm != cand[idx].lcm || other_idx < idx)
            {
                redundant = true;
                break;
            }
        }
        if redundant {
            dropped[idx] = true;
        } else {
            kept.push(cand[idx].clone());
        }
    }
    // Second criterion on the old pair set: (i,j) is obsolete when the new
    // lead divides its lcm strictly finer than both mixed lcms.
    pairs.retain(|p| {
        !lt.divides(&p.lcm)
            || lead(p.i).lcm(&lt) == p.lcm
            || lead(p.j).lcm(&lt) == p.lcm
    });
    pairs.extend(kept);
}

fn select_pair(pairs: &mut Vec<Pair>, order: &TermOrder) -> Pair {
    let mut best = 0;
    for k in 1..pairs.len() {
        let c = order.cmp(&pairs[k].lcm, &pairs[best].lcm);
        if c == Ordering::Less
            || (c == Ordering::Equal && (pairs[k].i, pairs[k].j) < (pairs[best].i, pairs[best].j))
        {
            best = k;
        }
    }
    pairs.swap_remove(best)
}

fn buchberger_terms<F: Field>(gens: Vec<Terms<F>>, order: &TermOrder) -> Vec<Terms<F>> {
    let mut basis: Vec<Terms<F>> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut inputs: Vec<Terms<F>> = gens.into_iter().filter(|t| !t.is_empty()).collect();
    inputs.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0).then(a.len().cmp(&b.len())));
    for mut g in inputs {
        make_monic(&mut g);
        let h = normal_form_terms(g, &basis, order);
        if h.is_empty() {
            continue;
        }
        let mut h = h;
        make_monic(&mut h);
        let t = basis.len();
        basis.push(h);
        update_pairs(&mut pairs, &basis, t);
    }
    while !pairs.is_empty() {
        let p = select_pair(&mut pairs, order);
        let s = spoly(&basis[p.i], &basis[p.j], &p.lcm, order);
        let mut h = normal_form_terms(s, &basis, order);
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h);
        let t = basis.len();
        basis.push(h);
        update_pairs(&mut pairs, &basis, t);
    }
    interreduce(basis, order)
}

/// Minimalizes and tail-reduces a Gröbner basis; output is monic and sorted
/// ascending by leading monomial.
fn interreduce<F: Field>(mut basis: Vec<Terms<F>>, order: &TermOrder) -> Vec<Terms<F>> {
    basis.retain(|t| !t.is_empty());
    for t in basis.iter_mut() {
        make_monic(t);
    }
    basis.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    let mut minimal: Vec<Terms<F>> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|k| k[0].0.divides(&g[0].0)) {
            minimal.push(g);
        }
    }
    let snapshot = minimal.clone();
    for i in 0..minimal.len() {
        let others: Vec<Terms<F>> = snapshot
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, t)| t.clone())
            .collect();
        let mut red = normal_form_terms(minimal[i].clone(), &others, order);
        make_monic(&mut red);
        minimal[i] = red;
    }
    minimal.retain(|t| !t.is_empty());
    minimal.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    minimal
}

/// A reduced Gröbner basis: monic elements, no term divisible by another
/// element's leading monomial, sorted ascending by leading monomial.
#[derive(Clone)]
pub struct GroebnerBasis<F> {
    ctx: VarContext,
    order: TermOrder,
    elements: Vec<MPoly<F>>,
}

impl<F: Field> std::fmt::Debug for GroebnerBasis<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroebnerBasis")
            .field("order", &self.order)
            .field("elements", &self.elements)
            .finish()
    }
}

impl<F: Field> GroebnerBasis<F> {
    /// Runs Buchberger's algorithm to a reduced basis. The zero ideal (no
    /// generators, or all zero) yields an empty basis.
    pub fn compute(ctx: &VarContext, gens: &[MPoly<F>], order: TermOrder) -> Self {
        order.assert_total(ctx.arity());
        let terms: Vec<Terms<F>> = gens
            .iter()
            .map(|g| {
                assert!(
                    g.ctx().same(ctx) || (g.ctx().is_empty() && g.is_constant()),
                    "generator context mismatch"
                );
                to_terms(g, &order)
            })
            .collect();
        let basis = buchberger_terms(terms, &order);
        GroebnerBasis {
            ctx: ctx.clone(),
            order: order.clone(),
            elements: basis.into_iter().map(|t| to_mpoly(ctx, t)).collect(),
        }
    }

    /// Re-normalizes a set already known to be a Gröbner basis for `order`
    /// (e.g. after lifting to the parameter field): minimalizes, tail-reduces
    /// and sorts without running Buchberger pairs.
    pub fn from_groebner_elements(ctx: &VarContext, elems: Vec<MPoly<F>>, order: TermOrder) -> Self {
        order.assert_total(ctx.arity());
        let terms: Vec<Terms<F>> = elems.iter().map(|g| to_terms(g, &order)).collect();
        let basis = interreduce(terms, &order);
        GroebnerBasis {
            ctx: ctx.clone(),
            order: order.clone(),
            elements: basis.into_iter().map(|t| to_mpoly(ctx, t)).collect(),
        }
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[MPoly<F>] {
        &self.elements
    }

    /// Renders each element with terms sorted under the basis's own order.
    pub fn to_strings(&self) -> Vec<String> {
        self.elements.iter().map(|e| e.to_string_with(&self.order)).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.iter().any(MPoly::is_constant) && !self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|e| e.leading(&self.order).expect("non-zero").0.clone())
            .collect()
    }

    /// Full normal form of `p` modulo the basis.
    pub fn normal_form(&self, p: &MPoly<F>) -> MPoly<F> {
        let terms: Vec<Terms<F>> = self.elements.iter().map(|g| to_terms(g, &self.order)).collect();
        let w = to_terms(p, &self.order);
        to_mpoly(&self.ctx, normal_form_terms(w, &terms, &self.order))
    }

    pub fn reduces_to_zero(&self, p: &MPoly<F>) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Audits the basis: every S-polynomial reduces to zero and the basis is
    /// reduced (monic, tails irreducible, leads pairwise indivisible).
    pub fn verify(&self) -> bool {
        let order = &self.order;
        let terms: Vec<Terms<F>> = self.elements.iter().map(|g| to_terms(g, order)).collect();
        for (i, g) in terms.iter().enumerate() {
            if g.is_empty() || !g[0].1.is_one() {
                return false;
            }
            for (j, h) in terms.iter().enumerate() {
                if i == j {
                    continue;
                }
                if g.iter().any(|(m, _)| h[0].0.divides(m)) {
                    return false;
                }
            }
        }
        for i in 0..terms.len() {
            for j in (i + 1)..terms.len() {
                let lcm = terms[i][0].0.lcm(&terms[j][0].0);
                let s = spoly(&terms[i], &terms[j], &lcm, order);
                if !normal_form_terms(s, &terms, order).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// True when every variable has a pure-power leading monomial (or the
    /// ideal is the whole ring).
    pub fn is_zero_dimensional(&self) -> bool {
        if self.is_trivial() {
            return true;
        }
        let n = self.ctx.arity();
        if self.elements.is_empty() {
            return n == 0;
        }
        let leads = self.leading_monomials();
        (0..n).all(|v| leads.iter().any(|m| m.pure_power() == Some(v)))
    }

    /// Combinatorial (Krull) dimension from the leading monomials; `-1` for
    /// the unit ideal.
    pub fn dimension(&self) -> isize {
        match self.independent_set() {
            Some(s) => s.len() as isize,
            None => -1,
        }
    }

    /// A maximum independent set of variables modulo the leading-term ideal
    /// (deterministic: smallest such set in bitmask order), or `None` for
    /// the unit ideal.
    pub fn independent_set(&self) -> Option<Vec<usize>> {
        let n = self.ctx.arity();
        assert!(n <= 24, "combinatorial dimension limited to 24 variables");
        let sups: Vec<u32> = self
            .leading_monomials()
            .iter()
            .map(|m| m.support().fold(0u32, |acc, v| acc | (1 << v)))
            .collect();
        let mut best: Option<u32> = None;
        for s in 0u32..(1u32 << n) {
            if sups.iter().any(|&sup| sup & !s == 0) {
                continue;
            }
            if best.map_or(true, |b| s.count_ones() > b.count_ones()) {
                best = Some(s);
            }
        }
        best.map(|b| (0..n).filter(|v| b & (1 << v) != 0).collect())
    }

    /// Monomials outside the leading-term ideal, sorted ascending.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        if !self.is_zero_dimensional() {
            return Err(Error::NotZeroDimensional);
        }
        if self.is_trivial() {
            return Ok(Vec::new());
        }
        let n = self.ctx.arity();
        let leads = self.leading_monomials();
        let caps: Vec<u32> = (0..n)
            .map(|v| {
                leads
                    .iter()
                    .filter(|m| m.pure_power() == Some(v))
                    .map(|m| m.exp(v))
                    .min()
                    .expect("zero-dimensional basis has pure powers")
            })
            .collect();
        let mut out = Vec::new();
        let mut exps = vec![0u32; n];
        loop {
            let m = Monomial::from_exps(exps.clone());
            if !leads.iter().any(|l| l.divides(&m)) {
                out.push(m);
            }
            // Odometer over the box bounded by the pure-power caps.
            let mut k = 0;
            loop {
                if k == n {
                    out.sort_by(|a, b| self.order.cmp(a, b));
                    return Ok(out);
                }
                exps[k] += 1;
                if exps[k] < caps[k] {
                    break;
                }
                exps[k] = 0;
                k += 1;
            }
        }
    }

    /// Dimension of the quotient as a vector space.
    pub fn quotient_degree(&self) -> Result<usize> {
        Ok(self.standard_monomials()?.len())
    }

    /// Minimal polynomial of variable `v` in the zero-dimensional quotient,
    /// as dense coefficients in ascending degree (monic).
    pub fn minimal_polynomial(&self, v: usize) -> Result<Vec<F>> {
        let std = self.standard_monomials()?;
        if std.is_empty() {
            return Err(Error::Internal("minimal polynomial over the unit ideal".into()));
        }
        let coord = |p: &MPoly<F>| -> Result<Vec<F>> {
            let mut out = vec![F::zero(); std.len()];
            for (m, c) in p.iter() {
                match std.iter().position(|s| s == m) {
                    Some(k) => out[k] = c.clone(),
                    None => {
                        return Err(Error::Internal(
                            "normal form left the standard-monomial span".into(),
                        ))
                    }
                }
            }
            Ok(out)
        };
        let var = MPoly::var(&self.ctx, v);
        let mut rows: Vec<Vec<F>> = Vec::new();
        let mut power = MPoly::constant_in(&self.ctx, F::one());
        loop {
            let k = rows.len();
            rows.push(coord(&power)?);
            // Solve sum_j c_j rows[j] = rows[k] over the earlier rows.
            if k > 0 {
                let dim = std.len();
                let mut data = Vec::with_capacity(dim * k);
                for d in 0..dim {
                    for row in rows.iter().take(k) {
                        data.push(row[d].clone());
                    }
                }
                let a = Mat::new(dim, k, data);
                if let Some(c) = a.solve(&rows[k]) {
                    let mut coeffs: Vec<F> = c.into_iter().map(|x| -x).collect();
                    coeffs.push(F::one());
                    return Ok(uni::trim(coeffs));
                }
            } else if rows[0].iter().all(Zero::is_zero) {
                return Err(Error::Internal("unit ideal in minimal polynomial".into()));
            }
            if rows.len() > std.len() + 1 {
                return Err(Error::Internal("minimal polynomial search exceeded the degree bound".into()));
            }
            power = self.normal_form(&(power * var.clone()));
        }
    }

    /// Seidenberg test: a zero-dimensional ideal is radical iff every
    /// variable's minimal polynomial is squarefree (characteristic zero).
    pub fn is_radical_zero_dim(&self) -> Result<bool> {
        if self.is_trivial() {
            return Ok(true);
        }
        for v in 0..self.ctx.arity() {
            if !uni::is_squarefree(&self.minimal_polynomial(v)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Converts a term order into explicit block form.
fn order_blocks(order: &TermOrder, arity: usize) -> Vec<OrderBlock> {
    match order {
        TermOrder::Lex => vec![OrderBlock { vars: (0..arity).collect(), order: BaseOrder::Lex }],
        TermOrder::Grevlex => vec![OrderBlock { vars: (0..arity).collect(), order: BaseOrder::Grevlex }],
        TermOrder::Block(blocks) => blocks.clone(),
    }
}

/// Restricts a Gröbner basis computed under an elimination order to the kept
/// variables, returning a reduced basis of the elimination ideal in
/// `new_ctx`. `keep[i]` marks kept variables; their relative order defines
/// the mapping into `new_ctx`.
pub fn eliminate<F: Field>(
    gb: &GroebnerBasis<F>,
    keep: &[bool],
    new_ctx: &VarContext,
) -> Result<GroebnerBasis<F>> {
    if !gb.order().eliminates_complement_of(keep) {
        return Err(Error::Internal("order does not eliminate the requested variables".into()));
    }
    let mut map: Vec<Option<usize>> = Vec::with_capacity(keep.len());
    let mut next = 0;
    for &k in keep {
        if k {
            map.push(Some(next));
            next += 1;
        } else {
            map.push(None);
        }
    }
    assert_eq!(next, new_ctx.arity());
    let mut elems = Vec::new();
    for e in gb.elements() {
        if e.support_mask().iter().zip(keep).all(|(&used, &k)| !used || k) {
            elems.push(e.restrict(new_ctx, &map)?);
        }
    }
    let order = gb.order().restrict(&map);
    Ok(GroebnerBasis {
        ctx: new_ctx.clone(),
        order,
        elements: elems,
    })
}

/// Saturation `(gens) : h^∞` via the Rabinowitsch trick: adjoins `t·h - 1`
/// for a fresh variable `t`, computes an elimination basis, and drops `t`.
/// The result is a reduced basis for `order`.
pub fn saturate<F: Field>(
    ctx: &VarContext,
    gens: &[MPoly<F>],
    h: &MPoly<F>,
    order: &TermOrder,
) -> Result<GroebnerBasis<F>> {
    assert!(!h.is_zero(), "saturation by zero");
    let n = ctx.arity();
    let mut names: Vec<String> = ctx.names().to_vec();
    names.push("~t".to_string());
    let ext_ctx = VarContext::new(names)?;
    let id: Vec<usize> = (0..n).collect();
    let mut ext_gens: Vec<MPoly<F>> = gens.iter().map(|g| g.rename(&ext_ctx, &id)).collect();
    let t = MPoly::var(&ext_ctx, n);
    let h_ext = h.rename(&ext_ctx, &id);
    ext_gens.push(t * h_ext - MPoly::constant_in(&ext_ctx, F::one()));
    let mut blocks = vec![OrderBlock { vars: vec![n], order: BaseOrder::Grevlex }];
    blocks.extend(order_blocks(order, n));
    let ext_order = TermOrder::Block(blocks);
    let gb = GroebnerBasis::compute(&ext_ctx, &ext_gens, ext_order);
    let mut keep = vec![true; n + 1];
    keep[n] = false;
    eliminate(&gb, &keep, ctx)
}

/// Drops generators that solve a variable slated for elimination: when a
/// variable outside `keep` occurs in exactly one generator, there in a
/// single term `c·v` with constant coefficient, that generator contributes
/// nothing to the elimination ideal of the others and is removed. (The
/// retraction `v -> -r/c` fixes every other variable and maps the ideal
/// onto the ideal of the remaining generators.) Repeats to a fixed point.
fn prune_solved_vars<F: Field>(gens: &mut Vec<MPoly<F>>, keep: &[bool]) {
    loop {
        let mut occurrences: Vec<Vec<usize>> = vec![Vec::new(); keep.len()];
        for (gi, g) in gens.iter().enumerate() {
            let mut seen = vec![false; keep.len()];
            for (m, _) in g.iter() {
                for v in m.support() {
                    if !seen[v] {
                        seen[v] = true;
                        occurrences[v].push(gi);
                    }
                }
            }
        }
        let mut removed: Option<usize> = None;
        'search: for v in 0..keep.len() {
            if keep[v] || occurrences[v].len() != 1 {
                continue;
            }
            let gi = occurrences[v][0];
            let mut pure_terms = 0;
            for (m, _) in gens[gi].iter() {
                if m.exp(v) > 0 {
                    if m.exp(v) != 1 || m.support().count() != 1 {
                        continue 'search;
                    }
                    pure_terms += 1;
                }
            }
            if pure_terms == 1 {
                removed = Some(gi);
                break;
            }
        }
        match removed {
            Some(gi) => {
                gens.remove(gi);
            }
            None => return,
        }
    }
}

/// Saturated elimination basis for a graph-style system: `relations`
/// together with `h_i Z_i - n_i` for each component `(Z-index, h_i, n_i)`,
/// saturated by `h` (pass the squarefree part of the full denominator;
/// every `h_i` must divide a power of it), intersected with the subring of
/// the variables marked in `keep`. Returns the reduced basis in `new_ctx`
/// under `kept_order` (given with `ctx` indices).
///
/// With `t·h = 1` adjoined, each component generator is normalized to
/// `Z_i - t^{k_i} s_i n_i` where `h_i s_i = h^{k_i}`; this keeps degrees
/// low when a component carries a high power of the denominator. The
/// saturation variable joins the dropped variables in a single graded
/// block, so the elimination runs once over the merged block.
pub fn saturate_graph<F: Field>(
    ctx: &VarContext,
    relations: &[MPoly<F>],
    components: &[(usize, MPoly<F>, MPoly<F>)],
    h: &MPoly<F>,
    keep: &[bool],
    kept_order: &TermOrder,
    new_ctx: &VarContext,
) -> Result<GroebnerBasis<F>> {
    assert!(!h.is_zero(), "saturation by zero");
    let n = ctx.arity();
    let dropped: Vec<usize> = (0..n).filter(|&v| !keep[v]).collect();
    let scaled = |zvar: usize, hi: &MPoly<F>, ni: &MPoly<F>| -> Option<MPoly<F>> {
        let c = hi.constant_value()?;
        Some(MPoly::var(ctx, zvar) - ni.clone().scale(&(F::one() / c)))
    };

    if h.is_constant() {
        let mut gens = relations.to_vec();
        for (zvar, hi, ni) in components {
            gens.push(scaled(*zvar, hi, ni).expect("components of a constant denominator"));
        }
        prune_solved_vars(&mut gens, keep);
        let mut blocks = vec![OrderBlock { vars: dropped, order: BaseOrder::Grevlex }];
        blocks.extend(order_blocks(kept_order, n));
        let gb = GroebnerBasis::compute(ctx, &gens, TermOrder::Block(blocks));
        return eliminate(&gb, keep, new_ctx);
    }

    let mut names: Vec<String> = ctx.names().to_vec();
    names.push("~t".to_string());
    let ext_ctx = VarContext::new(names)?;
    let id: Vec<usize> = (0..n).collect();
    let t = MPoly::var(&ext_ctx, n);
    let mut ext_gens: Vec<MPoly<F>> = relations.iter().map(|g| g.rename(&ext_ctx, &id)).collect();
    for (zvar, hi, ni) in components {
        if let Some(g) = scaled(*zvar, hi, ni) {
            ext_gens.push(g.rename(&ext_ctx, &id));
            continue;
        }
        let mut normalized = None;
        let mut power = MPoly::constant_in(ctx, F::one());
        for k in 1..=hi.total_degree() as u32 {
            power = power * h.clone();
            if let Some(s) = crate::gcd::div_exact(&power, hi) {
                let rhs = (s * ni.clone()).rename(&ext_ctx, &id) * t.pow(k);
                normalized = Some(MPoly::var(&ext_ctx, *zvar) - rhs);
                break;
            }
        }
        ext_gens.push(normalized.unwrap_or_else(|| {
            hi.rename(&ext_ctx, &id) * MPoly::var(&ext_ctx, *zvar) - ni.rename(&ext_ctx, &id)
        }));
    }
    ext_gens.push(t * h.rename(&ext_ctx, &id) - MPoly::constant_in(&ext_ctx, F::one()));
    let mut keep_ext = keep.to_vec();
    keep_ext.push(false);
    prune_solved_vars(&mut ext_gens, &keep_ext);

    let mut front = dropped;
    front.push(n);
    let mut blocks = vec![OrderBlock { vars: front, order: BaseOrder::Grevlex }];
    blocks.extend(order_blocks(kept_order, n));
    let ext_order = TermOrder::Block(blocks);
    let gb = GroebnerBasis::compute(&ext_ctx, &ext_gens, ext_order);
    eliminate(&gb, &keep_ext, new_ctx)
}

/// Reinterprets polynomials in a mixed context as polynomials in the kept
/// variables with rational-function coefficients in the parameter variables.
/// `param[i]` marks parameters; kept variables map into `main_ctx` and
/// parameters into `param_ctx`, each in relative order.
pub fn lift_to_param_field(
    elems: &[MPoly<Rat>],
    param: &[bool],
    main_ctx: &VarContext,
    param_ctx: &VarContext,
) -> Vec<MPoly<RatFunc>> {
    let mut main_map = vec![0usize; param.len()];
    let mut param_map = vec![0usize; param.len()];
    let mut mi = 0;
    let mut pi = 0;
    for (i, &is_param) in param.iter().enumerate() {
        if is_param {
            param_map[i] = pi;
            pi += 1;
        } else {
            main_map[i] = mi;
            mi += 1;
        }
    }
    assert_eq!(mi, main_ctx.arity());
    assert_eq!(pi, param_ctx.arity());
    elems
        .iter()
        .map(|e| {
            let mut acc: std::collections::BTreeMap<Monomial, MPoly<Rat>> = std::collections::BTreeMap::new();
            for (m, c) in e.iter() {
                let mut main_exps = vec![0u32; main_ctx.arity()];
                let mut param_exps = vec![0u32; param_ctx.arity()];
                for v in m.support() {
                    if param[v] {
                        param_exps[param_map[v]] = m.exp(v);
                    } else {
                        main_exps[main_map[v]] = m.exp(v);
                    }
                }
                let pm = MPoly::from_terms(param_ctx, [(Monomial::from_exps(param_exps), c.clone())]);
                let key = Monomial::from_exps(main_exps);
                let entry = acc.entry(key).or_insert_with(|| MPoly::zero_in(param_ctx));
                *entry = entry.clone() + pm;
            }
            MPoly::from_terms(
                main_ctx,
                acc.into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(m, c)| (m, RatFunc::from_poly(c))),
            )
        })
        .collect()
}

/// Enumerates the rational solutions of a zero-dimensional system by lex
/// triangularization: extract the univariate eliminant in the least
/// variable, take its rational roots, substitute back and recurse. Complete
/// over the rationals except where root extraction is capped (see
/// [`uni::rational_roots`]); results are sorted lexicographically.
pub fn rational_points(ctx: &VarContext, gens: &[MPoly<Rat>]) -> Result<Vec<Vec<Rat>>> {
    let n = ctx.arity();
    if n == 0 {
        return Ok(vec![Vec::new()]);
    }
    let gb = GroebnerBasis::compute(ctx, gens, TermOrder::Lex);
    if gb.is_trivial() {
        return Ok(Vec::new());
    }
    if !gb.is_zero_dimensional() {
        return Err(Error::NotZeroDimensional);
    }
    let last = n - 1;
    let eliminant = gb
        .elements()
        .iter()
        .find(|e| e.support_mask().iter().enumerate().all(|(v, &used)| !used || v == last))
        .expect("zero-dimensional lex basis contains a univariate eliminant");
    let coeffs: Vec<Rat> = (0..=eliminant.degree_in(last))
        .map(|d| {
            eliminant
                .iter()
                .find(|(m, _)| m.exp(last) == d)
                .map(|(_, c)| c.clone())
                .unwrap_or_else(Rat::zero)
        })
        .collect();
    let mut out = Vec::new();
    for root in uni::rational_roots(&coeffs) {
        if n == 1 {
            out.push(vec![root]);
            continue;
        }
        let mut vals: Vec<Option<Rat>> = vec![None; n];
        vals[last] = Some(root.clone());
        let sub_ctx = VarContext::new(ctx.names()[..last].to_vec())?;
        let map: Vec<Option<usize>> = (0..n).map(|v| if v < last { Some(v) } else { None }).collect();
        let reduced: Vec<MPoly<Rat>> = gb
            .elements()
            .iter()
            .map(|e| e.substitute_consts(&vals).restrict(&sub_ctx, &map))
            .collect::<Result<_>>()?;
        for mut point in rational_points(&sub_ctx, &reduced)? {
            point.push(root.clone());
            out.push(point);
        }
    }
    out.sort();
    Ok(out)
}

/// Evaluates the coefficients of a basis over K(z) at a rational point.
/// Fails with the offending denominator when the point lies on the excluded
/// locus.
pub fn specialize(gb: &GroebnerBasis<RatFunc>, point: &[Rat]) -> Result<Vec<MPoly<Rat>>> {
    for e in gb.elements() {
        for (_, c) in e.iter() {
            let vals: Vec<Option<Rat>> = point.iter().cloned().map(Some).collect();
            let d = c
                .den()
                .substitute_consts(&vals)
                .constant_value()
                .ok_or_else(|| Error::Input("specialization point has wrong arity".into()))?;
            if d.is_zero() {
                return Err(Error::ExcludedLocus { denominator: c.den().to_string() });
            }
        }
    }
    let mut out = Vec::new();
    for e in gb.elements() {
        let spec = e.map_coeffs(|c| c.eval(point).expect("denominators checked"));
        out.push(spec);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn ctx(names: &[&str]) -> VarContext {
        VarContext::new(names.to_vec()).unwrap()
    }

    fn polys(src: &[&str], c: &VarContext) -> Vec<MPoly<Rat>> {
        src.iter().map(|s| parse_poly(s, c).unwrap()).collect()
    }

    fn strings(gb: &GroebnerBasis<Rat>) -> Vec<String> {
        gb.to_strings()
    }

    #[test]
    fn lex_basis_of_twisted_cubic() {
        let c = ctx(&["x", "y", "z"]);
        let gens = polys(&["x^2-y", "x^3-z"], &c);
        let gb = GroebnerBasis::compute(&c, &gens, TermOrder::Lex);
        assert_eq!(
            strings(&gb),
            vec!["y^3-z^2", "x*z-y^2", "x*y-z", "x^2-y"],
        );
        assert!(gb.verify());
    }

    #[test]
    fn zero_ideal_and_unit_ideal() {
        let c = ctx(&["x", "y"]);
        let gb: GroebnerBasis<Rat> = GroebnerBasis::compute(&c, &[], TermOrder::Grevlex);
        assert!(gb.elements().is_empty());
        assert_eq!(gb.dimension(), 2);
        let unit = GroebnerBasis::compute(&c, &polys(&["x", "x-1"], &c), TermOrder::Grevlex);
        assert!(unit.is_trivial());
        assert_eq!(unit.dimension(), -1);
        assert!(unit.is_zero_dimensional());
        assert_eq!(unit.standard_monomials().unwrap().len(), 0);
    }

    #[test]
    fn elimination_of_a_parameter() {
        // Projection of the parabola parametrization (t, t^2).
        let c = ctx(&["t", "x", "y"]);
        let gens = polys(&["x-t", "y-t^2"], &c);
        let order = TermOrder::elimination(vec![0], vec![1, 2]);
        let gb = GroebnerBasis::compute(&c, &gens, order);
        let kept = eliminate(&gb, &[false, true, true], &ctx(&["x", "y"])).unwrap();
        assert_eq!(kept.elements().len(), 1);
        assert_eq!(kept.elements()[0].to_string(), "x^2-y");
    }

    #[test]
    fn saturation_removes_component() {
        // (x*y, x*z) : x^∞ = (y, z)
        let c = ctx(&["x", "y", "z"]);
        let gens = polys(&["x*y", "x*z"], &c);
        let h = parse_poly("x", &c).unwrap();
        let sat = saturate(&c, &gens, &h, &TermOrder::Grevlex).unwrap();
        assert_eq!(strings(&sat), vec!["z", "y"]);
    }

    #[test]
    fn zero_dimensional_invariants() {
        let c = ctx(&["x", "y"]);
        let gens = polys(&["x^2-1", "y^3-x"], &c);
        let gb = GroebnerBasis::compute(&c, &gens, TermOrder::Grevlex);
        assert!(gb.is_zero_dimensional());
        assert_eq!(gb.dimension(), 0);
        assert_eq!(gb.quotient_degree().unwrap(), 6);
        let mp = gb.minimal_polynomial(0).unwrap();
        // x^2 - 1
        assert_eq!(mp.len(), 3);
        assert!(gb.is_radical_zero_dim().unwrap());
        let non_radical = GroebnerBasis::compute(&c, &polys(&["x^2", "y-1"], &c), TermOrder::Grevlex);
        assert!(!non_radical.is_radical_zero_dim().unwrap());
    }

    #[test]
    fn minimal_polynomial_of_sqrt3() {
        let c = ctx(&["x"]);
        let gb = GroebnerBasis::compute(&c, &polys(&["x^2-3"], &c), TermOrder::Lex);
        let mp = gb.minimal_polynomial(0).unwrap();
        assert_eq!(
            mp,
            vec![Rat::from_i64(-3), Rat::from_i64(0), Rat::from_i64(1)]
        );
    }

    #[test]
    fn normal_form_is_canonical_remainder() {
        let c = ctx(&["x", "y"]);
        let gens = polys(&["x^2+y^2-1", "x-y"], &c);
        let gb = GroebnerBasis::compute(&c, &gens, TermOrder::Lex);
        let p = parse_poly("x^2", &c).unwrap();
        let nf = gb.normal_form(&p);
        // Modulo x = y, 2y^2 = 1: x^2 -> 1/2.
        assert_eq!(nf.to_string(), "1/2");
        assert!(gb.reduces_to_zero(&parse_poly("x^2+x*y+y^2-3/2", &c).unwrap()));
    }

    #[test]
    fn determinism_repeated_runs() {
        let c = ctx(&["x", "y", "z"]);
        let gens = polys(&["x*y-z^2", "y^2-x*z", "x^2*z-y*z^2"], &c);
        let a = GroebnerBasis::compute(&c, &gens, TermOrder::Grevlex);
        let b = GroebnerBasis::compute(&c, &gens, TermOrder::Grevlex);
        assert_eq!(strings(&a), strings(&b));
        assert!(a.verify());
    }

    #[test]
    fn rational_points_of_sliced_varieties() {
        let c = ctx(&["a", "b"]);
        let circle = polys(&["a^2+b^2-1", "a"], &c);
        let pts = rational_points(&c, &circle).unwrap();
        assert_eq!(
            pts,
            vec![
                vec![Rat::from_i64(0), Rat::from_i64(-1)],
                vec![Rat::from_i64(0), Rat::from_i64(1)],
            ]
        );
        let hyperbola = polys(&["1-a*b", "a-2"], &c);
        let pts = rational_points(&c, &hyperbola).unwrap();
        assert_eq!(pts, vec![vec![Rat::from_i64(2), Rat::new(1.into(), 2.into())]]);
        let empty = rational_points(&c, &polys(&["a^2+1", "b"], &c)).unwrap();
        assert!(empty.is_empty());
        assert!(rational_points(&c, &polys(&["a-b"], &c)).is_err());
    }

    #[test]
    fn lift_to_param_field_splits_coefficients() {
        // x*z1 + z2 over parameters {z1, z2} becomes (z1)*x + (z2).
        let joint = ctx(&["x", "z1", "z2"]);
        let main = ctx(&["x"]);
        let params = ctx(&["z1", "z2"]);
        let p = parse_poly("z1*x+z2", &joint).unwrap();
        let lifted = lift_to_param_field(&[p], &[false, true, true], &main, &params);
        assert_eq!(lifted.len(), 1);
        assert_eq!(lifted[0].to_string(), "z1*x+z2");
        let monic = lifted[0].monic(&TermOrder::Grevlex);
        assert_eq!(monic.to_string(), "x+z2/z1");
    }
}
