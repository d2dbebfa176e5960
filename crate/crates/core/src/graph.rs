//! The graph ideal of an action and everything derived from it: the
//! extension over the field of rational functions in the coordinates, the
//! generating set of rational invariants read off its reduced Gröbner
//! basis, exact invariance testing, and rewriting of invariants in terms of
//! the generators.
//!
//! Conventions: for coordinates `z1..zn` the graph variables are the
//! capitalized names `Z1..Zn`. The graph ideal `O` lives in `K[z, Z]` and is
//! displayed under a graded order in which every `Z` outweighs every `z`;
//! the extension `O^e` lives in `K(z)[Z]` under a graded order on `Z` whose
//! significance can be permuted per problem (`priority`).

use crate::action::GroupAction;
use crate::error::{Error, Result};
use crate::field::{Field, Rat};
use crate::gcd::{gcd, squarefree_part};
use crate::groebner::{lift_to_param_field, saturate, saturate_graph, specialize, GroebnerBasis};
use crate::monomial::Monomial;
use crate::mpoly::MPoly;
use crate::order::{BaseOrder, OrderBlock, TermOrder};
use crate::ratfunc::{poly_eval_in, RatFunc};
use crate::vars::VarContext;
use crate::{QPoly, QzPoly};
use num_traits::{One, Zero};
use std::sync::OnceLock;

/// Capitalizes the first letter of each coordinate name to produce the
/// graph-variable names.
pub fn graph_names(z_ctx: &VarContext) -> Vec<String> {
    z_ctx
        .names()
        .iter()
        .map(|n| {
            let mut chars = n.chars();
            match chars.next() {
                Some(c) => c.to_uppercase().collect::<String>() + chars.as_str(),
                None => String::new(),
            }
        })
        .collect()
}

/// A set of rational invariants in the coordinate variables, collected from
/// the coefficients of a Gröbner basis over `K(z)`. Entries are
/// sign-normalized, deduplicated and non-constant; each remembers the basis
/// element and monomial it first appeared at.
#[derive(Clone, Debug)]
pub struct InvariantSet {
    z_ctx: VarContext,
    entries: Vec<RatFunc>,
    provenance: Vec<(usize, Monomial)>,
}

impl InvariantSet {
    /// Collects the non-constant coefficients of `basis`, walking elements
    /// in basis order and terms in descending term order.
    pub fn from_basis(z_ctx: &VarContext, basis: &GroebnerBasis<RatFunc>) -> Self {
        let mut entries = Vec::new();
        let mut provenance = Vec::new();
        for (i, e) in basis.elements().iter().enumerate() {
            for (m, c) in e.sorted_terms(basis.order()) {
                if c.is_constant() {
                    continue;
                }
                let norm = c.sign_normalized();
                if !entries.contains(&norm) {
                    entries.push(norm);
                    provenance.push((i, m.clone()));
                }
            }
        }
        InvariantSet { z_ctx: z_ctx.clone(), entries, provenance }
    }

    pub fn z_ctx(&self) -> &VarContext {
        &self.z_ctx
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[RatFunc] {
        &self.entries
    }

    pub fn provenance(&self) -> &[(usize, Monomial)] {
        &self.provenance
    }

    /// Locates `c` in the set up to sign; returns the index and whether `c`
    /// is the negation of the stored entry.
    pub fn index_of(&self, c: &RatFunc) -> Option<(usize, bool)> {
        let norm = c.sign_normalized();
        let idx = self.entries.iter().position(|e| *e == norm)?;
        Some((idx, *c != self.entries[idx]))
    }

    /// The symbolic context `y1..yk` used when rewriting in terms of this
    /// set.
    pub fn symbol_ctx(&self) -> VarContext {
        let names: Vec<String> = (1..=self.entries.len()).map(|i| format!("y{i}")).collect();
        VarContext::new(names).expect("generated symbol names are distinct")
    }
}

/// An invariant rewritten as a rational expression in the symbols
/// `y1..yk` standing for the invariant set entries. Substituting the
/// entries back for the symbols recovers the input exactly; this is checked
/// before the result is returned.
#[derive(Clone, Debug)]
pub struct RewriteResult {
    /// Numerator in the symbol context.
    pub numerator: QPoly,
    /// Denominator in the symbol context.
    pub denominator: QPoly,
    /// The graph monomial whose coefficient pair was used.
    pub alpha: Monomial,
}

impl RewriteResult {
    pub fn to_display_string(&self) -> String {
        if self.denominator.is_one() {
            return self.numerator.to_string();
        }
        let num = self.numerator.to_string();
        let den = self.denominator.to_string();
        let num_wrapped = if self.numerator.num_terms() > 1 { format!("({num})") } else { num };
        let den_wrapped = if self.denominator.num_terms() > 1 || !self.denominator.is_constant() {
            format!("({den})")
        } else {
            den
        };
        format!("{num_wrapped}/{den_wrapped}")
    }
}

/// The graph construction for one action.
pub struct GraphIdeal {
    action: GroupAction,
    priority: Vec<usize>,
    zcap_ctx: VarContext,
    o_basis: GroebnerBasis<Rat>,
    oext: GroebnerBasis<RatFunc>,
    invariants: InvariantSet,
    sat_relations: OnceLock<GroebnerBasis<Rat>>,
}

impl GraphIdeal {
    /// Builds the graph ideal with the default significance (declaration
    /// order of the coordinates).
    pub fn new(action: GroupAction) -> Result<Self> {
        let n = action.z_arity();
        Self::with_priority(action, (0..n).collect())
    }

    /// Builds the graph ideal; `priority` lists coordinate indices from most
    /// to least significant for the order on the graph variables in `O^e`.
    pub fn with_priority(action: GroupAction, priority: Vec<usize>) -> Result<Self> {
        let n = action.z_arity();
        let l = action.lambda_arity();
        {
            let mut seen = vec![false; n];
            if priority.len() != n || priority.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true)) {
                return Err(Error::Input("priority must be a permutation of the coordinates".into()));
            }
        }
        let zcap_ctx = VarContext::new(graph_names(action.z_ctx()))?;
        let joint = VarContext::concat(&[action.group().lambda_ctx(), action.z_ctx(), &zcap_ctx])?;
        let o_ctx = VarContext::concat(&[action.z_ctx(), &zcap_ctx])?;

        // Generators of the graph: the group relations and h_i*Z_i - n_i,
        // with the denominator factor shared by the numerator cancelled.
        let act_map: Vec<usize> = (0..l + n).collect();
        let h = action.denominator().rename(&joint, &act_map);
        let relations: Vec<QPoly> =
            action.relations_in_ctx().iter().map(|r| r.rename(&joint, &act_map)).collect();
        let components: Vec<(usize, QPoly, QPoly)> = action
            .reduced_pairs()
            .into_iter()
            .enumerate()
            .map(|(i, (hi, ni))| {
                (l + n + i, hi.rename(&joint, &act_map), ni.rename(&joint, &act_map))
            })
            .collect();

        // Saturate by the squarefree part of h (same saturation, smaller
        // multiplier) and eliminate the parameters. The kept block mixes
        // graph variables above coordinates in one graded block; that is the
        // display order of O.
        let display_block = OrderBlock {
            vars: (l + n..l + 2 * n).chain(l..l + n).collect(),
            order: BaseOrder::Grevlex,
        };
        let kept_order = TermOrder::Block(vec![display_block]);
        let h_sqf = squarefree_part(&h);
        let keep: Vec<bool> = (0..l + 2 * n).map(|v| v >= l).collect();
        let o_basis =
            saturate_graph(&joint, &relations, &components, &h_sqf, &keep, &kept_order, &o_ctx)?;

        // Recompute a basis of O under a block order with the graph
        // variables (in priority significance) above the coordinates; its
        // elements, read with coefficients in K(z), form a basis of O^e.
        let lift_order = TermOrder::Block(vec![
            OrderBlock { vars: priority.iter().map(|&i| n + i).collect(), order: BaseOrder::Grevlex },
            OrderBlock { vars: (0..n).collect(), order: BaseOrder::Grevlex },
        ]);
        let lift_gb = GroebnerBasis::compute(&o_ctx, o_basis.elements(), lift_order);
        let param: Vec<bool> = (0..2 * n).map(|v| v < n).collect();
        let lifted = lift_to_param_field(lift_gb.elements(), &param, &zcap_ctx, action.z_ctx());
        let oext_order = TermOrder::Block(vec![OrderBlock { vars: priority.clone(), order: BaseOrder::Grevlex }]);
        let oext = GroebnerBasis::from_groebner_elements(&zcap_ctx, lifted, oext_order);

        let invariants = InvariantSet::from_basis(action.z_ctx(), &oext);
        Ok(GraphIdeal {
            action,
            priority,
            zcap_ctx,
            o_basis,
            oext,
            invariants,
            sat_relations: OnceLock::new(),
        })
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn zcap_ctx(&self) -> &VarContext {
        &self.zcap_ctx
    }

    /// Reduced basis of `O` in `K[z, Z]`.
    pub fn o_basis(&self) -> &GroebnerBasis<Rat> {
        &self.o_basis
    }

    /// Reduced basis of the extension `O^e` in `K(z)[Z]`.
    pub fn oext(&self) -> &GroebnerBasis<RatFunc> {
        &self.oext
    }

    /// Dimension of the generic orbit.
    pub fn orbit_dimension(&self) -> isize {
        self.oext.dimension()
    }

    /// The coefficients of the reduced basis of `O^e`: a generating set of
    /// the field of rational invariants.
    pub fn generating_invariants(&self) -> &InvariantSet {
        &self.invariants
    }

    /// Recomputes `O^e` directly by Buchberger over `K(z)`, without going
    /// through `O`. Slower; used to cross-check the lifted basis.
    pub fn oext_direct(&self) -> Result<GroebnerBasis<RatFunc>> {
        let l = self.action.lambda_arity();
        let n = self.action.z_arity();
        let lz_ctx = VarContext::concat(&[self.action.group().lambda_ctx(), &self.zcap_ctx])?;
        let param: Vec<bool> = (0..l + n).map(|v| v >= l).collect();
        let lambda_only = |p: &QPoly| -> QzPoly {
            let lifted = lift_to_param_field(
                &[p.clone()],
                &param,
                self.action.group().lambda_ctx(),
                self.action.z_ctx(),
            );
            let map: Vec<usize> = (0..l).collect();
            lifted[0].rename(&lz_ctx, &map)
        };
        let relations: Vec<QzPoly> = self
            .action
            .group()
            .relations()
            .iter()
            .map(|r| r.map_coeffs(|c| RatFunc::constant(c.clone())).rename(&lz_ctx, &(0..l).collect::<Vec<_>>()))
            .collect();
        let components: Vec<(usize, QzPoly, QzPoly)> = self
            .action
            .reduced_pairs()
            .iter()
            .enumerate()
            .map(|(i, (hi, ni))| (l + i, lambda_only(hi), lambda_only(ni)))
            .collect();
        let kept_order = TermOrder::Block(vec![OrderBlock {
            vars: self.priority.iter().map(|&i| l + i).collect(),
            order: BaseOrder::Grevlex,
        }]);
        let h_sat = lambda_only(&squarefree_part(self.action.denominator()));
        let keep: Vec<bool> = (0..l + n).map(|v| v >= l).collect();
        saturate_graph(&lz_ctx, &relations, &components, &h_sat, &keep, &kept_order, &self.zcap_ctx)
    }

    /// Gröbner basis of the relations saturated by the denominator, in the
    /// parameter-and-coordinate context; this cuts out the graph of the
    /// action over the group.
    fn saturated_relations(&self) -> &GroebnerBasis<Rat> {
        self.sat_relations.get_or_init(|| {
            let ctx = self.action.ctx();
            let rels = self.action.relations_in_ctx();
            let h_sqf = squarefree_part(self.action.denominator());
            saturate(ctx, &rels, &h_sqf, &TermOrder::Grevlex).expect("saturation in the action context")
        })
    }

    /// Substitutes the action for the coordinates of `p` and clears the
    /// denominator: returns `h^deg(p) * p(g(lambda, z))`.
    fn homogenized_substitution(&self, p: &QPoly) -> QPoly {
        let ctx = self.action.ctx();
        let d = p.total_degree() as u32;
        let h = self.action.denominator();
        let mut acc = MPoly::zero_in(ctx);
        for (m, c) in p.iter() {
            let mut term = MPoly::constant_in(ctx, c.clone());
            let mut deg = 0;
            for v in m.support() {
                let e = m.exp(v);
                deg += e;
                term = term * self.action.numerators()[v].pow(e);
            }
            term = term * h.pow(d - deg);
            acc = acc + term;
        }
        acc
    }

    /// Exact invariance test for a rational function of the coordinates:
    /// `f(g(lambda, z)) = f(z)` as functions on the graph of the action.
    pub fn verify_invariant(&self, f: &RatFunc) -> Result<bool> {
        if !f.ctx().same(self.action.z_ctx()) && !f.is_constant() {
            return Err(Error::Input("invariant candidate must be a function of the coordinates".into()));
        }
        if f.is_constant() {
            return Ok(true);
        }
        let ctx = self.action.ctx();
        let l = self.action.lambda_arity();
        let z_map: Vec<usize> = (l..ctx.arity()).collect();
        let p = f.num().rename(ctx, &z_map);
        let q = f.den().rename(ctx, &z_map);
        let h = self.action.denominator();
        let cap_p = self.homogenized_substitution(f.num());
        let cap_q = self.homogenized_substitution(f.den());
        let d_p = f.num().total_degree() as u32;
        let d_q = f.den().total_degree() as u32;
        let t = cap_p * q * h.pow(d_q) - cap_q * p * h.pow(d_p);
        Ok(self.saturated_relations().reduces_to_zero(&t))
    }

    /// Rewrites an invariant in terms of the generating invariants; errors
    /// with `NotInvariant` when the input fails the exact round-trip.
    pub fn rewrite_invariant(&self, f: &RatFunc) -> Result<RewriteResult> {
        rewrite_in_terms_of(f, &self.oext, &self.invariants)
    }

    /// The ideal of the orbit of a rational point: `O^e` specialized at the
    /// point, re-reduced.
    pub fn orbit_ideal_at(&self, point: &[Rat]) -> Result<GroebnerBasis<Rat>> {
        if point.len() != self.action.z_arity() {
            return Err(Error::Input("orbit point has wrong arity".into()));
        }
        let specialized = specialize(&self.oext, point)?;
        Ok(GroebnerBasis::compute(&self.zcap_ctx, &specialized, self.oext.order().clone()))
    }
}

/// Shared rewriting engine: divides the numerator and denominator of `f`
/// (with coordinates replaced by graph variables) by the basis elements
/// whose non-constant coefficients are masked by fresh symbols, then reads
/// off a coefficient pair at a graph monomial where the denominator does
/// not vanish.
pub(crate) fn rewrite_in_terms_of(
    f: &RatFunc,
    basis: &GroebnerBasis<RatFunc>,
    inv: &InvariantSet,
) -> Result<RewriteResult> {
    let z_ctx = inv.z_ctx();
    if !f.ctx().same(z_ctx) && !f.is_constant() {
        return Err(Error::Input("invariant must be a function of the coordinates".into()));
    }
    let zcap_ctx = basis.ctx();
    let n = zcap_ctx.arity();
    let k = inv.len();
    let y_ctx = inv.symbol_ctx();
    let q_ctx = VarContext::concat(&[&y_ctx, zcap_ctx])?;

    // The division order: graph variables (in the basis's significance)
    // above the symbols.
    let zcap_block = match basis.order() {
        TermOrder::Block(blocks) if blocks.len() == 1 => OrderBlock {
            vars: blocks[0].vars.iter().map(|&v| k + v).collect(),
            order: blocks[0].order,
        },
        _ => OrderBlock { vars: (k..k + n).collect(), order: BaseOrder::Grevlex },
    };
    let div_order = TermOrder::Block(vec![
        zcap_block,
        OrderBlock { vars: (0..k).collect(), order: BaseOrder::Grevlex },
    ]);

    // Mask: each non-constant coefficient of the basis becomes +-y_j.
    let zcap_map: Vec<usize> = (k..k + n).collect();
    let mut masked: Vec<QPoly> = Vec::with_capacity(basis.elements().len());
    for e in basis.elements() {
        let mut acc = MPoly::zero_in(&q_ctx);
        for (m, c) in e.iter() {
            let mm = m.rename(q_ctx.arity(), &zcap_map);
            if let Some(v) = c.constant_value() {
                acc = acc + MPoly::from_terms(&q_ctx, [(mm, v)]);
            } else {
                let (j, negated) = inv.index_of(c).expect("basis coefficient is a recorded invariant");
                let coeff = if negated { Rat::from_i64(-1) } else { Rat::from_i64(1) };
                acc = acc + MPoly::from_terms(&q_ctx, [(mm.mul(&Monomial::var(q_ctx.arity(), j)), coeff)]);
            }
        }
        masked.push(acc);
    }
    let divider = GroebnerBasis::from_groebner_elements(&q_ctx, masked, div_order);

    let into_q = |p: &QPoly| -> QPoly {
        let map: Vec<usize> = (k..k + n).collect();
        p.rename(&q_ctx, &map)
    };
    let a = divider.normal_form(&into_q(f.num()));
    let b = divider.normal_form(&into_q(f.den()));

    // Group the remainders by graph monomial, re-indexing each half into
    // its own context.
    let y_mask: Vec<bool> = (0..q_ctx.arity()).map(|v| v < k).collect();
    let y_map: Vec<usize> = (0..q_ctx.arity()).map(|v| if v < k { v } else { 0 }).collect();
    let zcap_back: Vec<usize> = (0..q_ctx.arity()).map(|v| v.saturating_sub(k)).collect();
    let split = |p: &QPoly| -> Vec<(Monomial, QPoly)> {
        let mut acc: std::collections::BTreeMap<Monomial, QPoly> = Default::default();
        for (m, c) in p.iter() {
            let (y_part, zcap_part) = m.split(&y_mask);
            let entry = acc
                .entry(zcap_part.rename(n, &zcap_back))
                .or_insert_with(|| MPoly::zero_in(&y_ctx));
            let y_m = y_part.rename(k, &y_map);
            *entry = entry.clone() + MPoly::from_terms(&y_ctx, [(y_m, c.clone())]);
        }
        acc.into_iter().collect()
    };
    let a_parts = split(&a);
    let b_parts = split(&b);

    // Pick the order-smallest graph monomial whose denominator coefficient
    // does not vanish at the invariants.
    let mut candidates: Vec<&Monomial> = b_parts.iter().map(|(m, _)| m).collect();
    candidates.sort_by(|x, y| basis.order().cmp(x, y));
    let mut chosen: Option<(Monomial, QPoly, QPoly)> = None;
    for alpha in candidates {
        let b_alpha = &b_parts.iter().find(|(m, _)| m == alpha).expect("candidate came from b").1;
        if !poly_eval_in::<RatFunc>(b_alpha, inv.entries()).is_zero() {
            let a_alpha = a_parts
                .iter()
                .find(|(m, _)| m == alpha)
                .map(|(_, p)| p.clone())
                .unwrap_or_else(|| MPoly::zero_in(&y_ctx));
            chosen = Some((alpha.clone(), a_alpha, b_alpha.clone()));
            break;
        }
    }
    let Some((alpha, a_alpha, b_alpha)) = chosen else {
        return Err(Error::NotInvariant(
            "denominator reduces to zero against the invariant basis".into(),
        ));
    };

    // Cancel common factors and normalize to coprime integer coefficients
    // with a positive leading numerator coefficient.
    let g = gcd(&a_alpha, &b_alpha);
    let mut num = crate::gcd::div_exact(&a_alpha, &g).expect("gcd divides");
    let mut den = crate::gcd::div_exact(&b_alpha, &g).expect("gcd divides");
    let scale = joint_content(&num, &den);
    num = num.map_coeffs(|c| c / &scale);
    den = den.map_coeffs(|c| c / &scale);
    if num
        .leading(&TermOrder::Grevlex)
        .map(|(_, c)| c < &Rat::zero())
        .unwrap_or(false)
    {
        num = -num;
        den = -den;
    }

    // Round trip: substituting the invariants for the symbols must recover
    // the input exactly.
    let num_val = poly_eval_in::<RatFunc>(&num, inv.entries());
    let den_val = poly_eval_in::<RatFunc>(&den, inv.entries());
    let back = num_val.try_div(den_val)?;
    if &back != f {
        return Err(Error::NotInvariant(format!(
            "rewriting round-trip failed; {f} is not invariant"
        )));
    }
    Ok(RewriteResult { numerator: num, denominator: den, alpha })
}

/// Common rational factor of all coefficients: gcd of the numerators over
/// lcm of the denominators, with the convention that the result is
/// positive.
fn joint_content(a: &QPoly, b: &QPoly) -> Rat {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let mut num_gcd = BigInt::from(0);
    let mut den_lcm = BigInt::from(1);
    for (_, c) in a.iter().chain(b.iter()) {
        num_gcd = num_gcd.gcd(c.numer());
        den_lcm = den_lcm.lcm(c.denom());
    }
    if num_gcd.is_zero() {
        return Rat::one();
    }
    Rat::new(num_gcd, den_lcm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::GroupSpec;
    use crate::parse::{parse_poly, parse_ratfunc};

    fn scaling_action() -> GroupAction {
        let lam = VarContext::new(vec!["l1", "l2"]).unwrap();
        let spec = GroupSpec::new(
            lam.clone(),
            vec![parse_poly("1-l1*l2", &lam).unwrap()],
            vec![Rat::from_i64(1), Rat::from_i64(1)],
        )
        .unwrap();
        let z = VarContext::new(vec!["z1", "z2"]).unwrap();
        let ctx = VarContext::concat(&[&lam, &z]).unwrap();
        GroupAction::new(
            spec,
            z,
            vec![parse_poly("l1*z1", &ctx).unwrap(), parse_poly("l1*z2", &ctx).unwrap()],
            parse_poly("1", &ctx).unwrap(),
        )
        .unwrap()
    }

    fn scaling_graph() -> GraphIdeal {
        GraphIdeal::with_priority(scaling_action(), vec![1, 0]).unwrap()
    }

    #[test]
    fn scaling_graph_ideal_display() {
        let g = scaling_graph();
        assert_eq!(g.o_basis().to_strings(), vec!["z1*Z2-z2*Z1"]);
    }

    #[test]
    fn scaling_extension_and_invariants() {
        let g = scaling_graph();
        assert_eq!(g.oext().to_strings(), vec!["Z2-(z2/z1)*Z1"]);
        assert_eq!(g.orbit_dimension(), 1);
        let inv = g.generating_invariants();
        assert_eq!(inv.len(), 1);
        assert_eq!(inv.entries()[0].to_string(), "z2/z1");
    }

    #[test]
    fn scaling_default_priority() {
        let g = GraphIdeal::new(scaling_action()).unwrap();
        assert_eq!(g.oext().to_strings(), vec!["Z1-(z1/z2)*Z2"]);
    }

    #[test]
    fn verify_invariant_distinguishes() {
        let g = scaling_graph();
        let z = g.action().z_ctx().clone();
        assert!(g.verify_invariant(&parse_ratfunc("z2/z1", &z).unwrap()).unwrap());
        assert!(g
            .verify_invariant(&parse_ratfunc("(z1^2+z2^2)/(z1*z2)", &z).unwrap())
            .unwrap());
        assert!(!g.verify_invariant(&parse_ratfunc("z1", &z).unwrap()).unwrap());
        assert!(!g.verify_invariant(&parse_ratfunc("z1+z2", &z).unwrap()).unwrap());
    }

    #[test]
    fn rewrite_scaling_example() {
        let g = scaling_graph();
        let z = g.action().z_ctx().clone();
        let f = parse_ratfunc("(z1^2+4*z1*z2+z2^2)/(z1^2-3*z2^2)", &z).unwrap();
        let r = g.rewrite_invariant(&f).unwrap();
        assert_eq!(r.numerator.to_string(), "y1^2+4*y1+1");
        assert_eq!(r.denominator.to_string(), "-3*y1^2+1");
        let not_inv = parse_ratfunc("z1+z2", &z).unwrap();
        assert!(matches!(g.rewrite_invariant(&not_inv), Err(Error::NotInvariant(_))));
    }

    #[test]
    fn orbit_ideal_specializes() {
        let g = scaling_graph();
        let orbit = g.orbit_ideal_at(&[Rat::from_i64(1), Rat::from_i64(2)]).unwrap();
        assert_eq!(orbit.to_strings(), vec!["Z2-2*Z1"]);
        let err = g.orbit_ideal_at(&[Rat::from_i64(0), Rat::from_i64(2)]).unwrap_err();
        assert!(matches!(err, Error::ExcludedLocus { .. }));
    }

    #[test]
    fn lift_agrees_with_direct_computation() {
        let g = scaling_graph();
        let direct = g.oext_direct().unwrap();
        assert_eq!(direct.to_strings(), g.oext().to_strings());
    }
}
