//! Rational group actions: specification, validation, and tangent data.
//!
//! A group is given by its defining relations in the parameter variables
//! together with the neutral element, optionally with explicit product and
//! inverse maps. An action on affine space is a tuple of rational maps with
//! a common denominator. Validation checks the axioms exactly — identity
//! always, composition and inverse modulo the group relations (saturated by
//! the denominators involved) whenever the maps are supplied — and
//! spot-checks the action at sampled rational group points.

use crate::error::{Error, Result};
use crate::field::{Field, Rat};
use crate::gcd::{div_exact, gcd, squarefree_part};
use crate::groebner::{rational_points, saturate, GroebnerBasis};
use crate::matrix::Mat;
use crate::mpoly::MPoly;
use crate::order::TermOrder;
use crate::ratfunc::RatFunc;
use crate::vars::VarContext;
use crate::QPoly;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// An algebraic group presented by relations on its parameters.
#[derive(Clone, Debug)]
pub struct GroupSpec {
    lambda_ctx: VarContext,
    relations: Vec<QPoly>,
    neutral: Vec<Rat>,
    coparam_ctx: Option<VarContext>,
    product: Option<Vec<RatFunc>>,
    inverse: Option<Vec<RatFunc>>,
}

impl GroupSpec {
    /// Group with parameters `lambda_ctx`, defining ideal generated by
    /// `relations` (empty for a full affine parameter space) and neutral
    /// element `neutral`.
    pub fn new(lambda_ctx: VarContext, relations: Vec<QPoly>, neutral: Vec<Rat>) -> Result<Self> {
        if neutral.len() != lambda_ctx.arity() {
            return Err(Error::Input(format!(
                "neutral element has {} coordinates for {} group parameters",
                neutral.len(),
                lambda_ctx.arity()
            )));
        }
        let relations = relations
            .into_iter()
            .map(|r| {
                if r.ctx().same(&lambda_ctx) || (r.ctx().is_empty() && r.is_constant()) {
                    Ok(r.embed(&lambda_ctx))
                } else {
                    Err(Error::Input("group relation uses variables outside the parameters".into()))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupSpec { lambda_ctx, relations, neutral, coparam_ctx: None, product: None, inverse: None })
    }

    /// Attaches the product map `m(lambda, mu)`, expressed in the joined
    /// context `lambda ++ mu`, with the convention that the action satisfies
    /// `g(m(lambda, mu), z) = g(lambda, g(mu, z))`.
    pub fn with_product(mut self, coparam_ctx: VarContext, product: Vec<RatFunc>) -> Result<Self> {
        if coparam_ctx.arity() != self.lambda_ctx.arity() {
            return Err(Error::Input("co-parameter count differs from parameter count".into()));
        }
        if product.len() != self.lambda_ctx.arity() {
            return Err(Error::Input("product map has wrong number of components".into()));
        }
        let joint = VarContext::concat(&[&self.lambda_ctx, &coparam_ctx])?;
        for c in &product {
            if !c.ctx().same(&joint) && !c.is_constant() {
                return Err(Error::Input("product map must live in the joined parameter context".into()));
            }
        }
        self.coparam_ctx = Some(coparam_ctx);
        self.product = Some(product);
        Ok(self)
    }

    /// Attaches the inverse map `i(lambda)` in the parameter context.
    pub fn with_inverse(mut self, inverse: Vec<RatFunc>) -> Result<Self> {
        if inverse.len() != self.lambda_ctx.arity() {
            return Err(Error::Input("inverse map has wrong number of components".into()));
        }
        for c in &inverse {
            if !c.ctx().same(&self.lambda_ctx) && !c.is_constant() {
                return Err(Error::Input("inverse map must live in the parameter context".into()));
            }
        }
        self.inverse = Some(inverse);
        Ok(self)
    }

    pub fn lambda_ctx(&self) -> &VarContext {
        &self.lambda_ctx
    }

    pub fn relations(&self) -> &[QPoly] {
        &self.relations
    }

    pub fn neutral(&self) -> &[Rat] {
        &self.neutral
    }

    pub fn product(&self) -> Option<&[RatFunc]> {
        self.product.as_deref()
    }

    pub fn inverse(&self) -> Option<&[RatFunc]> {
        self.inverse.as_deref()
    }

    pub fn coparam_ctx(&self) -> Option<&VarContext> {
        self.coparam_ctx.as_ref()
    }

    /// Dimension of the group variety (combinatorial, from a Gröbner basis
    /// of the relations).
    pub fn dimension(&self) -> isize {
        GroebnerBasis::compute(&self.lambda_ctx, &self.relations, TermOrder::Grevlex).dimension()
    }

    /// Samples rational points on the group, avoiding the neutral element:
    /// pins a maximal independent set of parameters to small rational
    /// values and solves the remaining zero-dimensional system exactly.
    /// Best-effort — returns what it finds within the attempt budget.
    pub fn sample_points(&self, want: usize, seed: u64) -> Vec<Vec<Rat>> {
        let gb = GroebnerBasis::compute(&self.lambda_ctx, &self.relations, TermOrder::Grevlex);
        let Some(indep) = gb.independent_set() else {
            return Vec::new();
        };
        let pool: Vec<Rat> = [
            (0, 1), (1, 1), (-1, 1), (2, 1), (-2, 1), (3, 1), (-3, 1), (1, 2), (-1, 2),
            (4, 1), (-4, 1), (5, 1), (-5, 1), (3, 5), (-3, 5), (4, 5), (-4, 5), (1, 3),
            (-1, 3), (2, 3), (-2, 3), (5, 13), (12, 13),
        ]
        .iter()
        .map(|&(p, q)| Rat::new(p.into(), q.into()))
        .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut found: Vec<Vec<Rat>> = Vec::new();
        for _ in 0..40 {
            if found.len() >= want {
                break;
            }
            let mut gens = self.relations.clone();
            for &v in &indep {
                let c = pool[rng.gen_range(0..pool.len())].clone();
                gens.push(MPoly::var(&self.lambda_ctx, v) - MPoly::constant_in(&self.lambda_ctx, c));
            }
            let Ok(points) = rational_points(&self.lambda_ctx, &gens) else {
                continue;
            };
            for p in points {
                if p != self.neutral && !found.contains(&p) {
                    found.push(p);
                    if found.len() >= want {
                        break;
                    }
                }
            }
        }
        found
    }
}

/// Options for [`GroupAction::validate`].
#[derive(Clone, Debug)]
pub struct ValidationOptions {
    /// Check the composition axiom when a product map is present.
    pub check_composition: bool,
    /// Check the inverse axiom when an inverse map is present.
    pub check_inverse: bool,
    /// Evaluate the action at sampled rational group points.
    pub spot_check: bool,
    /// Number of group points to sample for the spot check.
    pub samples: usize,
    pub seed: u64,
    /// Escalate spot-check findings from warnings to errors.
    pub strict: bool,
}

impl Default for ValidationOptions {
    fn default() -> Self {
        ValidationOptions {
            check_composition: true,
            check_inverse: true,
            spot_check: true,
            samples: 2,
            seed: 24601,
            strict: false,
        }
    }
}

/// Outcome of a successful validation.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub warnings: Vec<String>,
    pub group_dimension: isize,
    pub composition_checked: bool,
    pub inverse_checked: bool,
    pub points_sampled: usize,
}

/// A rational action of a group on affine space: components
/// `g_i = numerators[i] / denominator` in the joined context
/// `lambda ++ z`.
#[derive(Clone, Debug)]
pub struct GroupAction {
    group: GroupSpec,
    z_ctx: VarContext,
    ctx: VarContext,
    numerators: Vec<QPoly>,
    denominator: QPoly,
}

impl GroupAction {
    pub fn new(
        group: GroupSpec,
        z_ctx: VarContext,
        numerators: Vec<QPoly>,
        denominator: QPoly,
    ) -> Result<Self> {
        let ctx = VarContext::concat(&[&group.lambda_ctx, &z_ctx])?;
        if numerators.len() != z_ctx.arity() {
            return Err(Error::Input(format!(
                "{} action components for {} coordinates",
                numerators.len(),
                z_ctx.arity()
            )));
        }
        let embed_check = |p: &QPoly, what: &str| -> Result<QPoly> {
            if p.ctx().same(&ctx) || (p.ctx().is_empty() && p.is_constant()) {
                Ok(p.embed(&ctx))
            } else {
                Err(Error::Input(format!("{what} must live in the parameter-and-coordinate context")))
            }
        };
        let numerators = numerators
            .iter()
            .map(|p| embed_check(p, "action numerator"))
            .collect::<Result<Vec<_>>>()?;
        let denominator = embed_check(&denominator, "action denominator")?;
        if denominator.is_zero() {
            return Err(Error::Input("action denominator is zero".into()));
        }
        Ok(GroupAction { group, z_ctx, ctx, numerators, denominator })
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn z_ctx(&self) -> &VarContext {
        &self.z_ctx
    }

    /// The joined context `lambda ++ z`.
    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    pub fn lambda_arity(&self) -> usize {
        self.group.lambda_ctx.arity()
    }

    pub fn z_arity(&self) -> usize {
        self.z_ctx.arity()
    }

    pub fn numerators(&self) -> &[QPoly] {
        &self.numerators
    }

    pub fn denominator(&self) -> &QPoly {
        &self.denominator
    }

    /// The action components as rational functions in `lambda ++ z`.
    pub fn components(&self) -> Vec<RatFunc> {
        self.numerators
            .iter()
            .map(|n| RatFunc::new(n.clone(), self.denominator.clone()).expect("non-zero denominator"))
            .collect()
    }

    /// The components as pairs `(h_i, n_i)` with `g_i = n_i / h_i`, the
    /// factor shared between the numerator and the common denominator
    /// cancelled. Constructions of the form `h_i Z_i - n_i` stay small
    /// when single components carry only part of the denominator.
    pub fn reduced_pairs(&self) -> Vec<(QPoly, QPoly)> {
        self.numerators
            .iter()
            .map(|num| {
                let d = gcd(&self.denominator, num);
                if d.is_constant() {
                    (self.denominator.clone(), num.clone())
                } else {
                    let h = div_exact(&self.denominator, &d).expect("gcd divides");
                    let n = div_exact(num, &d).expect("gcd divides");
                    (h, n)
                }
            })
            .collect()
    }

    /// Group relations embedded into the joined context.
    pub fn relations_in_ctx(&self) -> Vec<QPoly> {
        let map: Vec<usize> = (0..self.lambda_arity()).collect();
        self.group.relations.iter().map(|r| r.rename(&self.ctx, &map)).collect()
    }

    /// Substitutes the neutral element for the parameters, leaving a
    /// polynomial supported on the coordinates.
    fn at_neutral(&self, p: &QPoly) -> QPoly {
        let mut vals: Vec<Option<Rat>> = self.group.neutral.iter().cloned().map(Some).collect();
        vals.extend(std::iter::repeat(None).take(self.z_arity()));
        p.substitute_consts(&vals)
    }

    /// The action components specialized at a group point, as rational
    /// functions of the coordinates.
    pub fn components_at(&self, point: &[Rat]) -> Result<Vec<RatFunc>> {
        if point.len() != self.lambda_arity() {
            return Err(Error::Input("group point has wrong arity".into()));
        }
        let mut vals: Vec<Option<Rat>> = point.iter().cloned().map(Some).collect();
        vals.extend(std::iter::repeat(None).take(self.z_arity()));
        let map: Vec<Option<usize>> = (0..self.ctx.arity())
            .map(|v| v.checked_sub(self.lambda_arity()))
            .collect();
        let den = self.denominator.substitute_consts(&vals).restrict(&self.z_ctx, &map)?;
        if den.is_zero() {
            return Err(Error::ExcludedLocus { denominator: self.denominator.to_string() });
        }
        self.numerators
            .iter()
            .map(|n| RatFunc::new(n.substitute_consts(&vals).restrict(&self.z_ctx, &map)?, den.clone()))
            .collect()
    }

    /// Validates the action axioms. Identity and neutral-element membership
    /// are hard errors; composition and inverse are checked exactly modulo
    /// the group relations when the maps are present, otherwise a warning
    /// notes the omission. Spot checks at sampled group points warn by
    /// default and fail under `strict`.
    pub fn validate(&self, opts: &ValidationOptions) -> Result<ValidationReport> {
        let mut warnings = Vec::new();

        for r in &self.group.relations {
            let vals: Vec<Option<Rat>> = self.group.neutral.iter().cloned().map(Some).collect();
            let v = r.substitute_consts(&vals);
            if !v.is_zero() {
                return Err(Error::InvalidAction(format!(
                    "the neutral element does not satisfy the group relation {r}"
                )));
            }
        }

        let h_e = self.at_neutral(&self.denominator);
        if h_e.is_zero() {
            return Err(Error::InvalidAction(
                "the action denominator vanishes at the neutral element".into(),
            ));
        }
        for (i, num) in self.numerators.iter().enumerate() {
            let lhs = self.at_neutral(num);
            let z_i = MPoly::var(&self.ctx, self.lambda_arity() + i);
            if lhs != h_e.clone() * z_i {
                return Err(Error::InvalidAction(format!(
                    "the neutral element does not act as the identity on coordinate {}",
                    self.z_ctx.name(i)
                )));
            }
        }

        let mut composition_checked = false;
        if opts.check_composition {
            if self.group.product.is_some() {
                self.check_composition()?;
                composition_checked = true;
            } else {
                warnings.push("no product map supplied; the composition axiom was not checked".into());
            }
        }

        let mut inverse_checked = false;
        if opts.check_inverse && self.group.inverse.is_some() {
            self.check_inverse()?;
            inverse_checked = true;
        }

        let mut points_sampled = 0;
        if opts.spot_check && opts.samples > 0 {
            let points = self.group.sample_points(opts.samples, opts.seed);
            points_sampled = points.len();
            if points.len() < opts.samples {
                warnings.push(format!(
                    "sampled only {} of {} requested group points",
                    points.len(),
                    opts.samples
                ));
            }
            for p in &points {
                if let Err(e) = self.spot_check_point(p, &points) {
                    let msg = format!("spot check at group point {:?} failed: {e}", point_strings(p));
                    if opts.strict {
                        return Err(Error::InvalidAction(msg));
                    }
                    warnings.push(msg);
                }
            }
        }

        Ok(ValidationReport {
            warnings,
            group_dimension: self.group.dimension(),
            composition_checked,
            inverse_checked,
            points_sampled,
        })
    }

    /// Exact composition check modulo the relations of both factors,
    /// saturated by every denominator in sight.
    fn check_composition(&self) -> Result<()> {
        let l = self.lambda_arity();
        let n = self.z_arity();
        let mu_ctx = self.group.coparam_ctx.as_ref().expect("product map carries co-parameters");
        let big = VarContext::concat(&[&self.group.lambda_ctx, mu_ctx, &self.z_ctx])?;
        let product = self.group.product.as_ref().expect("checked");

        let joint_map: Vec<usize> = (0..2 * l).collect();
        let m_big: Vec<RatFunc> = product.iter().map(|c| rf_rename(c, &big, &joint_map)).collect();

        let comps = self.components();
        let mut lhs_bind: Vec<RatFunc> = m_big.clone();
        lhs_bind.extend((0..n).map(|j| RatFunc::var(&big, 2 * l + j)));

        let mu_action_map: Vec<usize> = (l..2 * l).chain(2 * l..2 * l + n).collect();
        let g_mu: Vec<RatFunc> = comps.iter().map(|c| rf_rename(c, &big, &mu_action_map)).collect();
        let mut rhs_bind: Vec<RatFunc> = (0..l).map(|k| RatFunc::var(&big, k)).collect();
        rhs_bind.extend(g_mu.iter().cloned());

        let mut deltas = Vec::with_capacity(n);
        let mut dens: Vec<QPoly> = m_big.iter().map(|c| c.den().clone()).collect();
        for c in &comps {
            let lhs = c.substitute(&lhs_bind)?;
            let rhs = c.substitute(&rhs_bind)?;
            dens.push(lhs.den().clone());
            dens.push(rhs.den().clone());
            deltas.push(lhs - rhs);
        }
        if deltas.iter().all(Zero::is_zero) {
            return Ok(());
        }

        let lambda_map: Vec<usize> = (0..l).collect();
        let mu_map: Vec<usize> = (l..2 * l).collect();
        let mut rel_gens: Vec<QPoly> =
            self.group.relations.iter().map(|r| r.rename(&big, &lambda_map)).collect();
        rel_gens.extend(self.group.relations.iter().map(|r| r.rename(&big, &mu_map)));
        let sat = saturate(&big, &rel_gens, &squarefree_product(&big, &dens), &TermOrder::Grevlex)?;
        for (i, d) in deltas.iter().enumerate() {
            if !sat.reduces_to_zero(d.num()) {
                return Err(Error::InvalidAction(format!(
                    "composition axiom fails on coordinate {}",
                    self.z_ctx.name(i)
                )));
            }
        }
        Ok(())
    }

    /// Exact inverse check: `g(i(lambda), g(lambda, z)) = z` modulo the
    /// relations, saturated by the denominators.
    fn check_inverse(&self) -> Result<()> {
        let l = self.lambda_arity();
        let n = self.z_arity();
        let inverse = self.group.inverse.as_ref().expect("checked");
        let lambda_map: Vec<usize> = (0..l).collect();
        let comps = self.components();

        let mut bind: Vec<RatFunc> = inverse.iter().map(|c| rf_rename(c, &self.ctx, &lambda_map)).collect();
        bind.extend(comps.iter().cloned());

        let mut dens: Vec<QPoly> = bind.iter().map(|c| c.den().clone()).collect();
        let mut deltas = Vec::with_capacity(n);
        for (i, c) in comps.iter().enumerate() {
            let res = c.substitute(&bind)?;
            dens.push(res.den().clone());
            deltas.push(res - RatFunc::var(&self.ctx, l + i));
        }
        if deltas.iter().all(Zero::is_zero) {
            return Ok(());
        }
        let rel_gens = self.relations_in_ctx();
        let sat = saturate(&self.ctx, &rel_gens, &squarefree_product(&self.ctx, &dens), &TermOrder::Grevlex)?;
        for (i, d) in deltas.iter().enumerate() {
            if !sat.reduces_to_zero(d.num()) {
                return Err(Error::InvalidAction(format!(
                    "inverse axiom fails on coordinate {}",
                    self.z_ctx.name(i)
                )));
            }
        }
        Ok(())
    }

    /// Exact checks at a sampled group point: the action is defined there,
    /// and the product/inverse maps (when present) behave on the nose.
    fn spot_check_point(&self, point: &[Rat], all: &[Vec<Rat>]) -> Result<()> {
        let comps_p = self.components_at(point)?;
        if let Some(inverse) = &self.group.inverse {
            let inv_p: Vec<Rat> =
                inverse.iter().map(|c| c.eval(point)).collect::<Result<_>>()?;
            let comps_inv = self.components_at(&inv_p)?;
            for (i, outer) in comps_inv.iter().enumerate() {
                let roundtrip = outer.substitute(&comps_p)?;
                if roundtrip != RatFunc::var(&self.z_ctx, i) {
                    return Err(Error::InvalidAction(format!(
                        "inverse map does not undo the action on {}",
                        self.z_ctx.name(i)
                    )));
                }
            }
        }
        if let Some(product) = &self.group.product {
            for other in all.iter().take(2) {
                let mut joint: Vec<Rat> = point.to_vec();
                joint.extend(other.iter().cloned());
                let prod_pt: Vec<Rat> =
                    product.iter().map(|c| c.eval(&joint)).collect::<Result<_>>()?;
                let comps_prod = self.components_at(&prod_pt)?;
                let comps_other = self.components_at(other)?;
                for (i, outer) in comps_p.iter().enumerate() {
                    let composed = outer.substitute(&comps_other)?;
                    if composed != comps_prod[i] {
                        return Err(Error::InvalidAction(format!(
                            "composition at sampled points disagrees on {}",
                            self.z_ctx.name(i)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Infinitesimal generators of the action: the columns span the tangent
    /// directions `d/dt g(exp(t v), z)` at the neutral element, one column
    /// per basis vector of the tangent space of the group. Entries are
    /// rational functions of the coordinates.
    pub fn infinitesimal_matrix(&self) -> Result<Mat<RatFunc>> {
        let l = self.lambda_arity();
        let n = self.z_arity();
        let jac_rows: Vec<Vec<Rat>> = self
            .group
            .relations
            .iter()
            .map(|r| {
                (0..l)
                    .map(|j| {
                        let vals: Vec<Option<Rat>> =
                            self.group.neutral.iter().cloned().map(Some).collect();
                        r.derivative(j)
                            .substitute_consts(&vals)
                            .constant_value()
                            .expect("relation derivative at a point is constant")
                    })
                    .collect()
            })
            .collect();
        let jac = if jac_rows.is_empty() {
            Mat::new(0, l, Vec::new())
        } else {
            Mat::from_rows(jac_rows)
        };
        let tangent = jac.kernel_basis();
        let r = tangent.len();

        let map: Vec<Option<usize>> = (0..self.ctx.arity()).map(|v| v.checked_sub(l)).collect();
        let h_e = self.at_neutral(&self.denominator).restrict(&self.z_ctx, &map)?;
        let h_e_sq = h_e.clone() * h_e.clone();
        let mut entries: Vec<RatFunc> = Vec::with_capacity(n * r);
        for num in &self.numerators {
            let derivs: Vec<QPoly> = (0..l)
                .map(|j| {
                    let dn = num.derivative(j).clone() * self.denominator.clone()
                        - num.clone() * self.denominator.derivative(j);
                    self.at_neutral(&dn).restrict(&self.z_ctx, &map).expect("parameter-free after substitution")
                })
                .collect();
            for t in &tangent {
                let mut acc = MPoly::zero_in(&self.z_ctx);
                for (j, c) in t.iter().enumerate() {
                    acc = acc + derivs[j].clone().scale(c);
                }
                entries.push(RatFunc::new(acc, h_e_sq.clone())?);
            }
        }
        Ok(Mat::new(n, r, entries))
    }
}

fn rf_rename(f: &RatFunc, new_ctx: &VarContext, map: &[usize]) -> RatFunc {
    if f.is_constant() {
        return f.clone();
    }
    RatFunc::new(f.num().rename(new_ctx, map), f.den().rename(new_ctx, map))
        .expect("renaming preserves non-zero denominators")
}

fn squarefree_product(ctx: &VarContext, dens: &[QPoly]) -> QPoly {
    let mut seen: Vec<String> = Vec::new();
    let mut prod = MPoly::constant_in(ctx, Rat::from_i64(1));
    for d in dens {
        let key = d.to_string();
        if d.is_constant() || seen.contains(&key) {
            continue;
        }
        seen.push(key);
        prod = prod * d.embed(ctx);
    }
    squarefree_part(&prod)
}

fn point_strings(p: &[Rat]) -> Vec<String> {
    p.iter().map(Rat::to_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_poly, parse_ratfunc};

    fn scaling() -> GroupAction {
        let lam = VarContext::new(vec!["l1", "l2"]).unwrap();
        let mu = VarContext::new(vec!["m1", "m2"]).unwrap();
        let joint = VarContext::concat(&[&lam, &mu]).unwrap();
        let spec = GroupSpec::new(
            lam.clone(),
            vec![parse_poly("1-l1*l2", &lam).unwrap()],
            vec![Rat::from_i64(1), Rat::from_i64(1)],
        )
        .unwrap()
        .with_product(
            mu,
            vec![
                parse_ratfunc("l1*m1", &joint).unwrap(),
                parse_ratfunc("l2*m2", &joint).unwrap(),
            ],
        )
        .unwrap()
        .with_inverse(vec![
            parse_ratfunc("l2", &lam).unwrap(),
            parse_ratfunc("l1", &lam).unwrap(),
        ])
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

    fn rotation() -> GroupAction {
        let lam = VarContext::new(vec!["l1", "l2"]).unwrap();
        let spec = GroupSpec::new(
            lam.clone(),
            vec![parse_poly("l1^2+l2^2-1", &lam).unwrap()],
            vec![Rat::from_i64(1), Rat::from_i64(0)],
        )
        .unwrap()
        .with_inverse(vec![
            parse_ratfunc("l1", &lam).unwrap(),
            parse_ratfunc("-l2", &lam).unwrap(),
        ])
        .unwrap();
        let z = VarContext::new(vec!["z1", "z2"]).unwrap();
        let ctx = VarContext::concat(&[&lam, &z]).unwrap();
        GroupAction::new(
            spec,
            z,
            vec![
                parse_poly("l1*z1-l2*z2", &ctx).unwrap(),
                parse_poly("l2*z1+l1*z2", &ctx).unwrap(),
            ],
            parse_poly("1", &ctx).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn scaling_action_validates() {
        let a = scaling();
        let report = a.validate(&ValidationOptions::default()).unwrap();
        assert!(report.warnings.is_empty(), "{:?}", report.warnings);
        assert!(report.composition_checked);
        assert!(report.inverse_checked);
        assert_eq!(report.group_dimension, 1);
        assert!(report.points_sampled > 0);
    }

    #[test]
    fn rotation_inverse_needs_relations() {
        let a = rotation();
        let report = a.validate(&ValidationOptions::default()).unwrap();
        assert!(report.inverse_checked);
        assert!(!report.composition_checked);
        assert!(report.warnings.iter().any(|w| w.contains("no product map")));
    }

    #[test]
    fn wrong_neutral_element_is_rejected() {
        let lam = VarContext::new(vec!["l1", "l2"]).unwrap();
        let spec = GroupSpec::new(
            lam.clone(),
            vec![parse_poly("1-l1*l2", &lam).unwrap()],
            vec![Rat::from_i64(2), Rat::from_i64(1)],
        )
        .unwrap();
        let z = VarContext::new(vec!["z1"]).unwrap();
        let ctx = VarContext::concat(&[&lam, &z]).unwrap();
        let a = GroupAction::new(
            spec,
            z,
            vec![parse_poly("l1*z1", &ctx).unwrap()],
            parse_poly("1", &ctx).unwrap(),
        )
        .unwrap();
        let err = a.validate(&ValidationOptions::default()).unwrap_err();
        assert!(err.to_string().contains("neutral"));
    }

    #[test]
    fn broken_product_map_is_rejected() {
        let lam = VarContext::new(vec!["l1", "l2"]).unwrap();
        let mu = VarContext::new(vec!["m1", "m2"]).unwrap();
        let joint = VarContext::concat(&[&lam, &mu]).unwrap();
        let spec = GroupSpec::new(
            lam.clone(),
            vec![parse_poly("1-l1*l2", &lam).unwrap()],
            vec![Rat::from_i64(1), Rat::from_i64(1)],
        )
        .unwrap()
        .with_product(
            mu,
            vec![
                parse_ratfunc("l1+m1-1", &joint).unwrap(),
                parse_ratfunc("l2*m2", &joint).unwrap(),
            ],
        )
        .unwrap();
        let z = VarContext::new(vec!["z1"]).unwrap();
        let ctx = VarContext::concat(&[&lam, &z]).unwrap();
        let a = GroupAction::new(
            spec,
            z,
            vec![parse_poly("l1*z1", &ctx).unwrap()],
            parse_poly("1", &ctx).unwrap(),
        )
        .unwrap();
        let err = a.validate(&ValidationOptions::default()).unwrap_err();
        assert!(err.to_string().contains("composition"));
    }

    #[test]
    fn infinitesimal_generators() {
        let v = scaling().infinitesimal_matrix().unwrap();
        assert_eq!((v.rows(), v.cols()), (2, 1));
        assert_eq!(v.at(0, 0).to_string(), "z1");
        assert_eq!(v.at(1, 0).to_string(), "z2");
        let w = rotation().infinitesimal_matrix().unwrap();
        assert_eq!(w.at(0, 0).to_string(), "-z2");
        assert_eq!(w.at(1, 0).to_string(), "z1");
    }

    #[test]
    fn sampled_points_lie_on_the_group() {
        let a = scaling();
        let pts = a.group().sample_points(3, 7);
        assert!(!pts.is_empty());
        for p in &pts {
            assert_eq!(p[0].clone() * p[1].clone(), Rat::from_i64(1));
        }
    }
}
