//! Replacement invariants, invariantization, and the moving-frame ideal.
//!
//! A validated cross-section of degree `d` determines `d` tuples of
//! algebraic functions, the zeros of the section ideal; substituting any of
//! them for the coordinates fixes every rational invariant. For `d = 1` the
//! tuple is rational and can be read off the reduced basis directly. The
//! invariantization map sends a monic univariate polynomial over `K(z)` to
//! the squarefree monic generator of `(I^e + alpha(Z, zeta)) ∩ K(z)[zeta]`,
//! whose coefficients are rational invariants; it restricts to the identity
//! on polynomials that already have invariant coefficients.

use crate::error::{Error, Result};
use crate::field::Rat;
use crate::gcd::uni;
use crate::groebner::{lift_to_param_field, saturate_graph, GroebnerBasis};
use crate::mpoly::MPoly;
use crate::order::{BaseOrder, OrderBlock, TermOrder};
use crate::ratfunc::RatFunc;
use crate::section::SectionIdeal;
use crate::vars::VarContext;
use crate::{QPoly, QzPoly};
use num_traits::{One, Zero};
use std::fmt;

/// Name of the distinguished variable carrying univariate results; input
/// coordinate and parameter names must avoid it.
pub const ZETA: &str = "zeta";

/// A monic univariate polynomial in [`ZETA`] with coefficients in `K(z)`,
/// stored as dense coefficients in ascending degree.
#[derive(Clone, PartialEq)]
pub struct MonicUnivariate {
    coeffs: Vec<RatFunc>,
}

impl MonicUnivariate {
    pub(crate) fn new(coeffs: Vec<RatFunc>) -> Self {
        let coeffs = uni::monic(uni::trim(coeffs));
        assert!(!coeffs.is_empty(), "zero polynomial has no monic form");
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Dense coefficients in ascending degree; the last entry is `1`.
    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn is_squarefree(&self) -> bool {
        uni::is_squarefree(&self.coeffs)
    }

    /// The root when the polynomial is `zeta - r`.
    pub fn linear_root(&self) -> Option<RatFunc> {
        (self.degree() == 1).then(|| -self.coeffs[0].clone())
    }

    fn to_poly(&self) -> QzPoly {
        let ctx = VarContext::new(vec![ZETA]).expect("zeta context");
        MPoly::from_terms(
            &ctx,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (Monomial::from_exps(vec![k as u32]), c.clone())),
        )
    }
}

use crate::monomial::Monomial;

impl fmt::Display for MonicUnivariate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

impl fmt::Debug for MonicUnivariate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The degree of a cross-section together with the minimal polynomial of
/// each coordinate's class modulo the section ideal. When every class is
/// rational the replacement tuple is explicit.
pub struct ReplacementDescription {
    degree: usize,
    components: Vec<(String, MonicUnivariate)>,
}

impl ReplacementDescription {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Pairs `(variable name, minimal polynomial of its class)`.
    pub fn components(&self) -> &[(String, MonicUnivariate)] {
        &self.components
    }

    /// The replacement tuple when all components are rational.
    pub fn explicit(&self) -> Option<Vec<RatFunc>> {
        self.components.iter().map(|(_, m)| m.linear_root()).collect()
    }

    pub fn render(&self) -> String {
        let mut out = vec![format!("degree {}", self.degree)];
        for (name, m) in &self.components {
            match m.linear_root() {
                Some(r) => out.push(format!("{name} = {r}")),
                None => out.push(format!("{name}: {m} = 0")),
            }
        }
        out.join("\n")
    }
}

/// The ideal `(G + P + (Z - g(lambda, z))) ∩ K(z)[lambda]` cutting out the
/// group elements that move a generic point onto the cross-section. It is
/// zero-dimensional exactly when the action is locally free.
pub struct MovingFrameIdeal {
    basis: GroebnerBasis<RatFunc>,
    locally_free: bool,
    degree: Option<usize>,
}

impl MovingFrameIdeal {
    pub fn basis(&self) -> &GroebnerBasis<RatFunc> {
        &self.basis
    }

    pub fn locally_free(&self) -> bool {
        self.locally_free
    }

    /// Number of frames at a generic point, when finite.
    pub fn degree(&self) -> Option<usize> {
        self.degree
    }

    pub fn render(&self) -> String {
        let mut out: Vec<String> = self.basis.to_strings();
        match self.degree {
            Some(d) => out.push(format!("locally free: {} frame(s)", d)),
            None => out.push("not locally free".into()),
        }
        out.join("\n")
    }
}

impl SectionIdeal {
    /// The per-coordinate description of the replacement invariants.
    pub fn replacement(&self) -> Result<ReplacementDescription> {
        let basis = self.basis();
        let zcap = basis.ctx();
        let mut components = Vec::with_capacity(zcap.arity());
        for v in 0..zcap.arity() {
            let mp = basis.minimal_polynomial(v)?;
            components.push((zcap.name(v).to_string(), MonicUnivariate::new(mp)));
        }
        Ok(ReplacementDescription { degree: self.degree(), components })
    }

    /// Invariantization of the monic univariate polynomial with the given
    /// ascending coefficients in `K(z)`. Every coefficient must be defined
    /// along the cross-section (no denominator in the section ideal), and
    /// the leading coefficient must not vanish on it.
    pub fn invariantize(&self, coeffs: &[RatFunc]) -> Result<MonicUnivariate> {
        let z_ctx = self.graph().action().z_ctx().clone();
        let coeffs = uni::trim(coeffs.to_vec());
        if coeffs.len() < 2 {
            return Err(Error::Input(
                "invariantization expects a nonconstant polynomial in zeta".into(),
            ));
        }
        for c in &coeffs {
            if !c.is_constant() && !c.ctx().same(&z_ctx) {
                return Err(Error::ContextMismatch {
                    left: c.ctx().to_string(),
                    right: z_ctx.to_string(),
                });
            }
        }
        let section_z = self.section_in_z();
        let in_section = |p: &QPoly| -> bool {
            if p.is_constant() {
                p.is_zero()
            } else {
                section_z.reduces_to_zero(p)
            }
        };

        let lead = coeffs.last().expect("nonempty").clone();
        if in_section(lead.num()) {
            return Err(Error::NotDefinedOnSection(
                "leading coefficient vanishes on the cross-section".into(),
            ));
        }
        let monic: Vec<RatFunc> = coeffs.iter().map(|c| c.clone() / lead.clone()).collect();
        for c in &monic {
            if in_section(c.den()) {
                return Err(Error::NotDefinedOnSection(format!(
                    "denominator of coefficient {c} lies in the section ideal"
                )));
            }
        }

        // Clear denominators to a polynomial in K[z][zeta].
        let mut common = MPoly::constant_in(&z_ctx, Rat::one());
        for c in &monic {
            if !c.den().is_one() {
                common = crate::gcd::lcm(&common, c.den());
            }
        }
        let cleared: Vec<QPoly> = monic
            .iter()
            .map(|c| {
                let scaled = c.clone() * RatFunc::from_poly(common.clone());
                debug_assert!(scaled.den().is_one());
                scaled.num().clone()
            })
            .collect();
        if in_section(cleared.last().expect("nonempty")) {
            return Err(Error::NotDefinedOnSection(
                "cleared leading coefficient lies in the section ideal".into(),
            ));
        }

        // Adjoin alpha(Z, zeta) to I^e and eliminate the graph variables.
        let zcap = self.graph().zcap_ctx();
        let n = zcap.arity();
        let zeta_ctx = VarContext::new(vec![ZETA])?;
        let ext = VarContext::concat(&[zcap, &zeta_ctx])?;
        let id: Vec<usize> = (0..n).collect();
        let mut gens: Vec<QzPoly> = self
            .basis()
            .elements()
            .iter()
            .map(|e| e.rename(&ext, &id))
            .collect();
        let zeta = MPoly::var(&ext, n);
        let mut alpha = MPoly::zero_in(&ext);
        for (k, c) in cleared.iter().enumerate() {
            let lifted = c
                .rename(&ext, &id)
                .map_coeffs(|q| RatFunc::constant(q.clone()));
            alpha = alpha + lifted * zeta.pow(k as u32);
        }
        gens.push(alpha);
        let order = TermOrder::Block(vec![
            OrderBlock { vars: (0..n).collect(), order: BaseOrder::Grevlex },
            OrderBlock { vars: vec![n], order: BaseOrder::Grevlex },
        ]);
        let gb = GroebnerBasis::compute(&ext, &gens, order);
        let eliminant = gb
            .elements()
            .iter()
            .find(|e| e.support_mask()[..n].iter().all(|&used| !used))
            .ok_or_else(|| {
                Error::Internal("invariantization produced no univariate eliminant".into())
            })?;

        let mut dense = vec![RatFunc::zero(); eliminant.degree_in(n) as usize + 1];
        for (m, c) in eliminant.iter() {
            dense[m.exp(n) as usize] = c.clone();
        }
        let result = MonicUnivariate::new(squarefree_part_in_zeta(&dense, &z_ctx)?);
        for c in result.coeffs() {
            if !c.is_constant() && !self.graph().verify_invariant(c)? {
                return Err(Error::Internal(
                    "invariantization produced a non-invariant coefficient".into(),
                ));
            }
        }
        Ok(result)
    }

    /// Invariantization of a rational function: the minimal polynomial
    /// `iota(zeta - r)` of its class along the section.
    pub fn invariantize_function(&self, r: &RatFunc) -> Result<MonicUnivariate> {
        self.invariantize(&[-r.clone(), RatFunc::one()])
    }

    /// The moving-frame ideal of the section; computed over `K(z)` in the
    /// group parameters after eliminating the graph variables.
    pub fn moving_frame(&self) -> Result<MovingFrameIdeal> {
        let graph = self.graph();
        let action = graph.action();
        let l = action.lambda_arity();
        let n = action.z_arity();
        let lambda_ctx = action.group().lambda_ctx();
        let full_ctx = VarContext::concat(&[lambda_ctx, graph.zcap_ctx()])?;
        let param: Vec<bool> = (0..l + n).map(|v| v >= l).collect();
        let lambda_map: Vec<usize> = (0..l).collect();
        let lambda_only = |p: &QPoly| -> QzPoly {
            let lifted = lift_to_param_field(
                &[p.clone()],
                &param,
                lambda_ctx,
                action.z_ctx(),
            );
            lifted[0].rename(&full_ctx, &lambda_map)
        };
        let mut relations: Vec<QzPoly> = action
            .group()
            .relations()
            .iter()
            .map(|r| {
                r.map_coeffs(|c| RatFunc::constant(c.clone()))
                    .rename(&full_ctx, &lambda_map)
            })
            .collect();
        let zcap_map: Vec<usize> = (l..l + n).collect();
        for p in self.section().generators() {
            relations.push(
                p.map_coeffs(|c| RatFunc::constant(c.clone()))
                    .rename(&full_ctx, &zcap_map),
            );
        }
        let components: Vec<(usize, QzPoly, QzPoly)> = action
            .reduced_pairs()
            .iter()
            .enumerate()
            .map(|(i, (hi, ni))| (l + i, lambda_only(hi), lambda_only(ni)))
            .collect();
        let kept_order = TermOrder::Block(vec![OrderBlock {
            vars: (0..l).collect(),
            order: BaseOrder::Grevlex,
        }]);
        let h_sat = lambda_only(&crate::gcd::squarefree_part(action.denominator()));
        let keep: Vec<bool> = (0..l + n).map(|v| v < l).collect();
        let basis =
            saturate_graph(&full_ctx, &relations, &components, &h_sat, &keep, &kept_order, lambda_ctx)?;
        let locally_free = !basis.is_trivial() && basis.is_zero_dimensional();
        let degree = if locally_free { Some(basis.quotient_degree()?) } else { None };
        Ok(MovingFrameIdeal { basis, locally_free, degree })
    }

    /// The section ideal rebased to the coordinate ring `K[z]`, used for
    /// membership tests on coefficient denominators.
    fn section_in_z(&self) -> GroebnerBasis<Rat> {
        let z_ctx = self.graph().action().z_ctx();
        let id: Vec<usize> = (0..z_ctx.arity()).collect();
        let gens: Vec<QPoly> = self
            .section()
            .generators()
            .iter()
            .map(|g| g.rename(z_ctx, &id))
            .collect();
        GroebnerBasis::compute(z_ctx, &gens, TermOrder::Grevlex)
    }
}

/// Squarefree part of a univariate polynomial over `K(z)`, given as dense
/// ascending coefficients. Works on the denominator-cleared polynomial in
/// `K[z][zeta]`, where the gcd with the `zeta`-derivative stays in the fast
/// integral path; the `zeta`-free content drops out with it.
fn squarefree_part_in_zeta(dense: &[RatFunc], z_ctx: &VarContext) -> Result<Vec<RatFunc>> {
    let n = z_ctx.arity();
    let mut common = MPoly::constant_in(z_ctx, Rat::one());
    for c in dense {
        if !c.den().is_one() {
            common = crate::gcd::lcm(&common, c.den());
        }
    }
    let zeta_ctx = VarContext::new(vec![ZETA])?;
    let joint = VarContext::concat(&[z_ctx, &zeta_ctx])?;
    let id: Vec<usize> = (0..n).collect();
    let mut cleared = MPoly::zero_in(&joint);
    let zeta = MPoly::<Rat>::var(&joint, n);
    for (k, c) in dense.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let scaled = c.clone() * RatFunc::from_poly(common.clone());
        debug_assert!(scaled.den().is_one());
        cleared = cleared + scaled.num().rename(&joint, &id) * zeta.pow(k as u32);
    }
    let deriv = cleared.derivative(n);
    let part = if deriv.is_zero() {
        cleared
    } else {
        let d = crate::gcd::gcd(&cleared, &deriv);
        crate::gcd::div_exact(&cleared, &d)
            .ok_or_else(|| Error::Internal("squarefree divisor does not divide".into()))?
    };
    let mut out = vec![RatFunc::zero(); part.degree_in(n) as usize + 1];
    for (m, c) in part.iter() {
        let k = m.exp(n) as usize;
        let zm = Monomial::from_exps((0..n).map(|v| m.exp(v)).collect());
        let coeff = MPoly::from_terms(z_ctx, [(zm, c.clone())]);
        out[k] = out[k].clone() + RatFunc::from_poly(coeff);
    }
    Ok(uni::monic(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{GroupAction, GroupSpec};
    use crate::field::Field;
    use crate::graph::GraphIdeal;
    use crate::parse::{parse_poly, parse_ratfunc};
    use crate::section::{CrossSection, SectionIdeal};
    use std::sync::Arc;

    fn scaling_graph() -> Arc<GraphIdeal> {
        let lam = VarContext::new(vec!["l1", "l2"]).unwrap();
        let spec = GroupSpec::new(
            lam.clone(),
            vec![parse_poly("1-l1*l2", &lam).unwrap()],
            vec![Rat::from_i64(1), Rat::from_i64(1)],
        )
        .unwrap();
        let z = VarContext::new(vec!["z1", "z2"]).unwrap();
        let ctx = VarContext::concat(&[&lam, &z]).unwrap();
        let action = GroupAction::new(
            spec,
            z,
            vec![parse_poly("l1*z1", &ctx).unwrap(), parse_poly("l1*z2", &ctx).unwrap()],
            parse_poly("1", &ctx).unwrap(),
        )
        .unwrap();
        Arc::new(GraphIdeal::with_priority(action, vec![1, 0]).unwrap())
    }

    fn rotation_graph() -> Arc<GraphIdeal> {
        let lam = VarContext::new(vec!["l1", "l2"]).unwrap();
        let spec = GroupSpec::new(
            lam.clone(),
            vec![parse_poly("l1^2+l2^2-1", &lam).unwrap()],
            vec![Rat::from_i64(1), Rat::from_i64(0)],
        )
        .unwrap();
        let z = VarContext::new(vec!["z1", "z2"]).unwrap();
        let ctx = VarContext::concat(&[&lam, &z]).unwrap();
        let action = GroupAction::new(
            spec,
            z,
            vec![
                parse_poly("l1*z1-l2*z2", &ctx).unwrap(),
                parse_poly("l2*z1+l1*z2", &ctx).unwrap(),
            ],
            parse_poly("1", &ctx).unwrap(),
        )
        .unwrap();
        Arc::new(GraphIdeal::new(action).unwrap())
    }

    fn section(graph: &Arc<GraphIdeal>, srcs: &[&str]) -> SectionIdeal {
        let zcap = graph.zcap_ctx();
        let gens = srcs.iter().map(|s| parse_poly(s, zcap).unwrap()).collect();
        SectionIdeal::build(Arc::clone(graph), CrossSection::new(zcap, gens).unwrap()).unwrap()
    }

    #[test]
    fn replacement_for_coordinate_section() {
        let g = scaling_graph();
        let s = section(&g, &["Z1-1"]);
        let r = s.replacement().unwrap();
        assert_eq!(r.degree(), 1);
        let explicit = r.explicit().unwrap();
        assert_eq!(explicit[0].to_string(), "1");
        assert_eq!(explicit[1].to_string(), "z2/z1");
        assert!(r.render().contains("Z2 = z2/z1"));
    }

    #[test]
    fn replacement_for_rotation_section() {
        let g = rotation_graph();
        let s = section(&g, &["Z2"]);
        assert_eq!(s.basis().to_strings(), vec!["Z2", "Z1^2-(z1^2+z2^2)"]);
        let r = s.replacement().unwrap();
        assert_eq!(r.degree(), 2);
        assert!(r.explicit().is_none());
        assert_eq!(r.components()[0].1.to_string(), "zeta^2-(z1^2+z2^2)");
        assert_eq!(r.components()[1].1.to_string(), "zeta");
    }

    #[test]
    fn invariantize_linear_gives_algebraic_pair() {
        let g = scaling_graph();
        let s = section(&g, &["Z1^2+Z2^2-1"]);
        let z = g.action().z_ctx().clone();
        let alpha = [
            -parse_ratfunc("z1", &z).unwrap(),
            RatFunc::one(),
        ];
        let r = s.invariantize(&alpha).unwrap();
        assert_eq!(r.to_string(), "zeta^2-z1^2/(z1^2+z2^2)");
        assert!(r.is_squarefree());
    }

    #[test]
    fn invariantize_cubic_example() {
        let g = scaling_graph();
        let s = section(&g, &["Z1^2+Z2^2-1"]);
        let z = g.action().z_ctx().clone();
        let alpha = [
            RatFunc::one(),
            parse_ratfunc("z2", &z).unwrap(),
            RatFunc::one(),
            RatFunc::one(),
        ];
        let r = s.invariantize(&alpha).unwrap();
        assert_eq!(
            r.to_string(),
            "zeta^6+2*zeta^5+zeta^4+2*zeta^3+((2*z1^2+z2^2)/(z1^2+z2^2))*zeta^2+1"
        );
    }

    #[test]
    fn invariantize_collapses_double_root() {
        let g = scaling_graph();
        let s = section(&g, &["Z1^2+Z2^2-1"]);
        let z = g.action().z_ctx().clone();
        let r = s
            .invariantize_function(&parse_ratfunc("z1^2", &z).unwrap())
            .unwrap();
        assert_eq!(r.to_string(), "zeta-z1^2/(z1^2+z2^2)");
        assert_eq!(r.linear_root().unwrap().to_string(), "z1^2/(z1^2+z2^2)");
    }

    #[test]
    fn invariantize_splits_reducible_input() {
        let g = scaling_graph();
        let s = section(&g, &["Z1^2+Z2^2-1"]);
        let z = g.action().z_ctx().clone();
        let alpha = [
            parse_ratfunc("-z1^2/z2^2", &z).unwrap(),
            parse_ratfunc("-(z1^2+z2^2-1)/z2^2", &z).unwrap(),
            RatFunc::one(),
        ];
        let r = s.invariantize(&alpha).unwrap();
        assert_eq!(r.to_string(), "zeta^2-z1^2/z2^2");
    }

    #[test]
    fn invariant_coefficients_are_fixed() {
        let g = scaling_graph();
        let s = section(&g, &["Z1^2+Z2^2-1"]);
        let z = g.action().z_ctx().clone();
        let r = s
            .invariantize_function(&parse_ratfunc("z2/z1", &z).unwrap())
            .unwrap();
        assert_eq!(r.to_string(), "zeta-z2/z1");
    }

    #[test]
    fn rejects_denominator_on_the_section() {
        let g = scaling_graph();
        let s = section(&g, &["Z1^2+Z2^2-1"]);
        let z = g.action().z_ctx().clone();
        let r = s.invariantize_function(&parse_ratfunc("1/(z1^2+z2^2-1)", &z).unwrap());
        assert!(matches!(r, Err(Error::NotDefinedOnSection(_))));
    }

    #[test]
    fn moving_frame_for_the_scaling_section() {
        let g = scaling_graph();
        let s = section(&g, &["Z1-1"]);
        let m = s.moving_frame().unwrap();
        assert!(m.locally_free());
        assert_eq!(m.degree(), Some(1));
        assert_eq!(m.basis().to_strings(), vec!["l2-z1", "l1-1/z1"]);
    }

    #[test]
    fn moving_frame_for_the_rotation_section() {
        let g = rotation_graph();
        let s = section(&g, &["Z2"]);
        let m = s.moving_frame().unwrap();
        assert!(m.locally_free());
        assert_eq!(m.degree(), Some(2));
        assert_eq!(m.basis().elements().len(), 2);
    }

    #[test]
    fn moving_frame_detects_positive_dimensional_stabilizer() {
        let lam = VarContext::new(vec!["l1", "l2"]).unwrap();
        let spec = GroupSpec::new(lam.clone(), vec![], vec![Rat::from_i64(0), Rat::from_i64(0)])
            .unwrap();
        let z = VarContext::new(vec!["z1", "z2"]).unwrap();
        let ctx = VarContext::concat(&[&lam, &z]).unwrap();
        let action = GroupAction::new(
            spec,
            z,
            vec![parse_poly("z1+l1", &ctx).unwrap(), parse_poly("z2", &ctx).unwrap()],
            parse_poly("1", &ctx).unwrap(),
        )
        .unwrap();
        let g = Arc::new(GraphIdeal::new(action).unwrap());
        let s = section(&g, &["Z1"]);
        let m = s.moving_frame().unwrap();
        assert!(!m.locally_free());
        assert_eq!(m.degree(), None);
    }
}
