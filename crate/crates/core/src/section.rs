//! Cross-sections to the orbits: validation of section candidates,
//! construction of the section ideal over `K(z)`, and the invariants read
//! off its coefficients.
//!
//! A candidate section is a subvariety of the coordinate space given by
//! polynomials in the graph variables. It is accepted when its codimension
//! matches the generic orbit dimension, the section ideal is
//! zero-dimensional and radical over `K(z)`, and the section is transversal
//! to the orbits (the Jacobian of the section applied to the infinitesimal
//! generators has full rank modulo the section).

use crate::error::{Error, Result};
use crate::field::{Field, Rat};
use crate::graph::{rewrite_in_terms_of, GraphIdeal, InvariantSet, RewriteResult};
use crate::groebner::GroebnerBasis;
use crate::mpoly::MPoly;
use crate::order::TermOrder;
use crate::ratfunc::RatFunc;
use crate::vars::VarContext;
use crate::QPoly;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::sync::Arc;

/// A section candidate: polynomials in the graph variables cutting out a
/// subvariety of the coordinate space.
#[derive(Clone, Debug)]
pub struct CrossSection {
    zcap_ctx: VarContext,
    generators: Vec<QPoly>,
}

impl CrossSection {
    pub fn new(zcap_ctx: &VarContext, generators: Vec<QPoly>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Input("a cross-section needs at least one generator".into()));
        }
        for g in &generators {
            if !g.ctx().same(zcap_ctx) {
                return Err(Error::Input("section generators must use the graph variables".into()));
            }
            if g.is_constant() {
                return Err(Error::Input("section generators must be non-constant".into()));
            }
        }
        Ok(CrossSection { zcap_ctx: zcap_ctx.clone(), generators })
    }

    pub fn generators(&self) -> &[QPoly] {
        &self.generators
    }

    pub fn zcap_ctx(&self) -> &VarContext {
        &self.zcap_ctx
    }

    fn to_strings(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.to_string()).collect()
    }
}

/// Diagnostics gathered while checking a section candidate.
#[derive(Clone, Debug)]
pub struct SectionReport {
    pub orbit_dimension: isize,
    pub section_codimension: isize,
    pub zero_dimensional: bool,
    pub radical: bool,
    /// Number of intersection points of the generic orbit with the section.
    pub degree: Option<usize>,
    /// Rank of the section Jacobian applied to the infinitesimal
    /// generators, modulo the section.
    pub transversal_rank: Option<usize>,
}

impl SectionReport {
    fn render(&self) -> String {
        format!(
            "orbit dimension {}, section codimension {}, zero-dimensional: {}, radical: {}, degree: {}, transversal rank: {}",
            self.orbit_dimension,
            self.section_codimension,
            self.zero_dimensional,
            self.radical,
            self.degree.map_or_else(|| "-".into(), |d| d.to_string()),
            self.transversal_rank.map_or_else(|| "-".into(), |r| r.to_string()),
        )
    }
}

/// The section ideal `I^e = O^e + P` over `K(z)`, together with its
/// invariant coefficients.
pub struct SectionIdeal {
    graph: Arc<GraphIdeal>,
    section: CrossSection,
    basis: GroebnerBasis<RatFunc>,
    report: SectionReport,
    invariants: InvariantSet,
}

impl fmt::Debug for SectionIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SectionIdeal")
            .field("section", &self.section)
            .field("basis", &self.basis)
            .field("report", &self.report)
            .finish()
    }
}

impl SectionIdeal {
    /// Validates the candidate and builds the section ideal; rejections
    /// carry the diagnostic report.
    pub fn build(graph: Arc<GraphIdeal>, section: CrossSection) -> Result<Self> {
        if !section.zcap_ctx.same(graph.zcap_ctx()) {
            return Err(Error::ContextMismatch {
                left: section.zcap_ctx.to_string(),
                right: graph.zcap_ctx().to_string(),
            });
        }
        let zcap = graph.zcap_ctx();
        let n = zcap.arity();
        let d = graph.orbit_dimension();

        let section_gb = GroebnerBasis::compute(zcap, &section.generators, TermOrder::Grevlex);
        let codim = n as isize - section_gb.dimension();
        let mut report = SectionReport {
            orbit_dimension: d,
            section_codimension: codim,
            zero_dimensional: false,
            radical: false,
            degree: None,
            transversal_rank: None,
        };
        let reject = |reason: &str, report: &SectionReport| -> Error {
            Error::SectionRejected { reason: reason.into(), report: report.render() }
        };
        if codim != d {
            return Err(reject("section codimension does not match the orbit dimension", &report));
        }

        let mut gens: Vec<MPoly<RatFunc>> = graph.oext().elements().to_vec();
        gens.extend(section.generators.iter().map(|g| g.map_coeffs(|c| RatFunc::constant(c.clone()))));
        let basis = GroebnerBasis::compute(zcap, &gens, graph.oext().order().clone());

        report.zero_dimensional = basis.is_zero_dimensional() && !basis.is_trivial();
        if !report.zero_dimensional {
            return Err(reject(
                "section ideal is not zero-dimensional over the function field",
                &report,
            ));
        }
        report.degree = Some(basis.quotient_degree()?);
        report.radical = basis.is_radical_zero_dim()?;
        if !report.radical {
            return Err(reject("section ideal is not radical", &report));
        }

        let rank = transversal_rank(&graph, &section_gb)?;
        report.transversal_rank = Some(rank);
        if (rank as isize) < d {
            return Err(reject("section is not transversal to the orbits", &report));
        }

        let invariants = InvariantSet::from_basis(graph.action().z_ctx(), &basis);
        Ok(SectionIdeal { graph, section, basis, report, invariants })
    }

    pub fn graph(&self) -> &GraphIdeal {
        &self.graph
    }

    pub fn section(&self) -> &CrossSection {
        &self.section
    }

    /// Reduced basis of the section ideal in `K(z)[Z]`.
    pub fn basis(&self) -> &GroebnerBasis<RatFunc> {
        &self.basis
    }

    pub fn degree(&self) -> usize {
        self.report.degree.expect("accepted sections carry a degree")
    }

    pub fn report(&self) -> &SectionReport {
        &self.report
    }

    /// Non-constant coefficients of the section ideal basis: invariants that
    /// generate the invariant field when the section is rational (degree 1)
    /// and a generating set up to algebraic extension otherwise.
    pub fn invariants(&self) -> &InvariantSet {
        &self.invariants
    }

    /// Rewrites an invariant in terms of the section-ideal coefficients.
    pub fn rewrite(&self, f: &RatFunc) -> Result<RewriteResult> {
        rewrite_in_terms_of(f, &self.basis, &self.invariants)
    }
}

/// Rank of the section Jacobian applied to the infinitesimal generators,
/// computed modulo the section ideal in the graph variables: the largest
/// `k` such that some `k`-minor does not reduce to zero.
fn transversal_rank(graph: &GraphIdeal, section_gb: &GroebnerBasis<Rat>) -> Result<usize> {
    let zcap = graph.zcap_ctx();
    let n = zcap.arity();
    let v = graph.action().infinitesimal_matrix()?;
    let id: Vec<usize> = (0..n).collect();
    let v_zcap: Vec<Vec<RatFunc>> = (0..v.rows())
        .map(|i| {
            (0..v.cols())
                .map(|j| {
                    let e = v.at(i, j);
                    if e.is_constant() {
                        return Ok(RatFunc::constant(e.constant_value().expect("constant")));
                    }
                    let den = e.den().rename(zcap, &id);
                    if section_gb.reduces_to_zero(&den) {
                        return Err(Error::SectionRejected {
                            reason: "an infinitesimal generator is undefined on the section".into(),
                            report: format!("denominator {den} vanishes on the section"),
                        });
                    }
                    RatFunc::new(e.num().rename(zcap, &id), den)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    // M = J_section * V, evaluated in the graph variables.
    let jac: Vec<Vec<RatFunc>> = section_gb
        .elements()
        .iter()
        .map(|g| (0..n).map(|j| RatFunc::from_poly(g.derivative(j))).collect())
        .collect();
    let rows = jac.len();
    let cols = v.cols();
    let mut prod: Vec<Vec<RatFunc>> = vec![vec![RatFunc::zero(); cols]; rows];
    for (i, jac_row) in jac.iter().enumerate() {
        for c in 0..cols {
            let mut acc = RatFunc::zero();
            for (k0, jv) in jac_row.iter().enumerate() {
                acc = acc + jv.clone() * v_zcap[k0][c].clone();
            }
            prod[i][c] = acc;
        }
    }

    // Clear denominators row by row (the multipliers are non-zero modulo
    // the section by the check above) and rank by minors with normal-form
    // zero tests.
    let cleared: Vec<Vec<QPoly>> = prod
        .iter()
        .map(|row| {
            let mut mult = MPoly::constant_in(zcap, Rat::from_i64(1));
            for e in row {
                mult = mult * e.den().embed(zcap);
            }
            row.iter()
                .map(|e| {
                    let rest = crate::gcd::div_exact(&mult, &e.den().embed(zcap)).expect("den divides multiplier");
                    e.num().embed(zcap) * rest
                })
                .collect()
        })
        .collect();
    let max_k = rows.min(cols);
    let mut rank = 0;
    for k in (1..=max_k).rev() {
        if any_nonzero_minor(&cleared, k, section_gb) {
            rank = k;
            break;
        }
    }
    Ok(rank)
}

fn any_nonzero_minor(m: &[Vec<QPoly>], k: usize, gb: &GroebnerBasis<Rat>) -> bool {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let row_sets = subsets(rows, k);
    let col_sets = subsets(cols, k);
    for rs in &row_sets {
        for cs in &col_sets {
            let det = minor_det(m, rs, cs);
            if !gb.reduces_to_zero(&det) {
                return true;
            }
        }
    }
    false
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

fn minor_det(m: &[Vec<QPoly>], rs: &[usize], cs: &[usize]) -> QPoly {
    // Cofactor expansion; the minors here are at most the group dimension
    // on a side.
    if rs.len() == 1 {
        return m[rs[0]][cs[0]].clone();
    }
    let mut acc = MPoly::zero_in(m[rs[0]][cs[0]].ctx());
    for (i, &r) in rs.iter().enumerate() {
        let sub_rs: Vec<usize> = rs.iter().copied().filter(|&x| x != r).collect();
        let sub = minor_det(m, &sub_rs, &cs[1..]);
        let term = m[r][cs[0]].clone() * sub;
        if i % 2 == 0 {
            acc = acc + term;
        } else {
            acc = acc - term;
        }
    }
    acc
}

/// Draws random affine-linear sections of the right codimension until one
/// passes validation; coefficients are integers in `[-5, 5]`.
pub fn random_linear_section(
    graph: &Arc<GraphIdeal>,
    seed: u64,
    retries: usize,
) -> Result<SectionIdeal> {
    let zcap = graph.zcap_ctx();
    let n = zcap.arity();
    let d = graph.orbit_dimension();
    if d <= 0 {
        return Err(Error::Input("the generic orbit is finite; no section is needed".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rejections = Vec::new();
    for _ in 0..retries.max(1) {
        let mut gens = Vec::with_capacity(d as usize);
        for _ in 0..d {
            loop {
                let mut p = MPoly::constant_in(zcap, Rat::from_i64(rng.gen_range(-5..=5)));
                for v in 0..n {
                    let c = rng.gen_range(-5..=5);
                    if c != 0 {
                        p = p + MPoly::var(zcap, v).scale(&Rat::from_i64(c));
                    }
                }
                if !p.is_constant() {
                    gens.push(p);
                    break;
                }
            }
        }
        let candidate = CrossSection::new(zcap, gens)?;
        let shown = candidate.to_strings().join(", ");
        match SectionIdeal::build(Arc::clone(graph), candidate) {
            Ok(s) => return Ok(s),
            Err(Error::SectionRejected { reason, .. }) => {
                rejections.push(format!("[{shown}]: {reason}"));
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::RetriesExhausted { tried: rejections.len(), rejections })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{GroupAction, GroupSpec};
    use crate::parse::{parse_poly, parse_ratfunc};

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

    fn section(graph: &Arc<GraphIdeal>, srcs: &[&str]) -> Result<SectionIdeal> {
        let zcap = graph.zcap_ctx();
        let gens = srcs.iter().map(|s| parse_poly(s, zcap).unwrap()).collect();
        SectionIdeal::build(Arc::clone(graph), CrossSection::new(zcap, gens).unwrap())
    }

    #[test]
    fn coordinate_section_for_scaling() {
        let g = scaling_graph();
        let s = section(&g, &["Z1-1"]).unwrap();
        assert_eq!(s.degree(), 1);
        assert_eq!(s.basis().to_strings(), vec!["Z1-1", "Z2-z2/z1"]);
        assert_eq!(s.report().transversal_rank, Some(1));
        assert!(s.report().radical);
        let inv = s.invariants();
        assert_eq!(inv.len(), 1);
        assert_eq!(inv.entries()[0].to_string(), "z2/z1");
    }

    #[test]
    fn circle_section_has_degree_two() {
        let g = scaling_graph();
        let s = section(&g, &["Z1^2+Z2^2-1"]).unwrap();
        assert_eq!(s.degree(), 2);
        assert!(s.report().radical);
    }

    #[test]
    fn union_of_orbits_is_rejected() {
        let g = scaling_graph();
        let err = section(&g, &["Z2-2*Z1"]).unwrap_err();
        match err {
            Error::SectionRejected { reason, .. } => {
                assert!(reason.contains("transversal"), "{reason}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn wrong_codimension_is_rejected() {
        let g = scaling_graph();
        let err = section(&g, &["Z1-1", "Z2-1"]).unwrap_err();
        assert!(matches!(err, Error::SectionRejected { .. }));
    }

    #[test]
    fn random_sections_eventually_pass() {
        let g = scaling_graph();
        let s = random_linear_section(&g, 1, 25).unwrap();
        assert!(s.degree() >= 1);
        let f = parse_ratfunc("z2/z1", g.action().z_ctx()).unwrap();
        let r = s.rewrite(&f).unwrap();
        assert!(!r.numerator.is_zero());
    }

    #[test]
    fn rewrite_via_section_matches_direct() {
        let g = scaling_graph();
        let s = section(&g, &["Z1-1"]).unwrap();
        let f = parse_ratfunc("(z1^2+4*z1*z2+z2^2)/(z1^2-3*z2^2)", g.action().z_ctx()).unwrap();
        let r = s.rewrite(&f).unwrap();
        assert_eq!(r.numerator.to_string(), "y1^2+4*y1+1");
        assert_eq!(r.denominator.to_string(), "-3*y1^2+1");
    }
}
