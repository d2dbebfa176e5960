//! Problem-file loading.
//!
//! A problem file is sectioned key-value text describing the group, its
//! action, and optionally a cross-section and settings:
//!
//! ```text
//! [group]
//! params    = ["l1", "l2"]
//! relations = ["1 - l1*l2"]
//! neutral   = ["1", "1"]
//! coparams  = ["m1", "m2"]            # optional, required with `product`
//! product   = ["l1*m1", "l2*m2"]      # optional
//! inverse   = ["l2", "l1"]            # optional
//!
//! [action]
//! vars        = ["z1", "z2"]
//! numerators  = ["l1*z1", "l1*z2"]
//! denominator = "1"                   # optional, defaults to 1
//!
//! [cross_section]                     # optional
//! relations = ["Z1 - 1"]
//!
//! [settings]                          # optional
//! order    = "grevlex"                # or "lex"
//! priority = ["z2", "z1"]             # most significant first
//! seed     = 42
//! retries  = 8
//! ```
//!
//! Expressions are quoted strings over `+`, `-`, `*`, `^` and parentheses;
//! division inside them is restricted to rational constants. Parameter and
//! coordinate names must start with a lowercase letter; the capitalized
//! forms (`z1` ↦ `Z1`) are generated automatically and are the alphabet of
//! the `[cross_section]` relations. The name `zeta` is reserved.

use rinvar::graph::graph_names;
use rinvar::parse::{parse_poly, parse_ratfunc};
use rinvar::{Error, GroupAction, GroupSpec, QPoly, Rat, RatFunc, Result, VarContext};
use serde::Deserialize;

pub const ZETA: &str = rinvar::invariantize::ZETA;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    group: RawGroup,
    action: RawAction,
    cross_section: Option<RawSection>,
    settings: Option<RawSettings>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    params: Vec<String>,
    #[serde(default)]
    relations: Vec<String>,
    neutral: Vec<String>,
    coparams: Option<Vec<String>>,
    product: Option<Vec<String>>,
    inverse: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAction {
    vars: Vec<String>,
    numerators: Vec<String>,
    denominator: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSection {
    relations: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSettings {
    order: Option<String>,
    priority: Option<Vec<String>>,
    seed: Option<u64>,
    retries: Option<usize>,
}

/// Settings collected from the file's `[settings]` table; command-line
/// flags override them field by field.
#[derive(Clone, Debug, Default)]
pub struct Settings {
    pub order: Option<String>,
    pub seed: Option<u64>,
    pub retries: Option<usize>,
}

/// A validated problem: the action, the optional cross-section generators
/// (over the capitalized graph variables), the priority of the coordinate
/// variables, and file-level settings.
pub struct Problem {
    pub action: GroupAction,
    pub section: Option<Vec<QPoly>>,
    pub priority: Option<Vec<usize>>,
    pub settings: Settings,
}

fn check_name(name: &str, what: &str) -> Result<()> {
    let mut chars = name.chars();
    let ok = matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if !ok {
        return Err(Error::Input(format!(
            "{what} `{name}` must start with a lowercase letter and use only letters, digits and `_`"
        )));
    }
    if name == ZETA {
        return Err(Error::Input(format!("the name `{ZETA}` is reserved")));
    }
    Ok(())
}

fn constant(text: &str) -> Result<Rat> {
    let empty = VarContext::empty();
    let v = parse_ratfunc(text, &empty)?;
    v.constant_value()
        .ok_or_else(|| Error::Input(format!("`{text}` is not a rational constant")))
}

/// Parses and validates a problem file.
pub fn parse_problem(text: &str) -> Result<Problem> {
    let raw: RawProblem = toml::from_str(text)
        .map_err(|e| Error::Input(format!("problem file: {}", e.message())))?;

    for p in &raw.group.params {
        check_name(p, "group parameter")?;
    }
    for v in &raw.action.vars {
        check_name(v, "coordinate variable")?;
    }
    let lambda_ctx = VarContext::new(raw.group.params.clone())?;
    let z_ctx = VarContext::new(raw.action.vars.clone())?;
    let ctx = VarContext::concat(&[&lambda_ctx, &z_ctx])?;

    let relations = raw
        .group
        .relations
        .iter()
        .map(|r| parse_poly(r, &lambda_ctx))
        .collect::<Result<Vec<_>>>()?;
    if raw.group.neutral.len() != raw.group.params.len() {
        return Err(Error::Input(format!(
            "{} neutral entries for {} group parameters",
            raw.group.neutral.len(),
            raw.group.params.len()
        )));
    }
    let neutral = raw.group.neutral.iter().map(|e| constant(e)).collect::<Result<Vec<_>>>()?;
    let mut spec = GroupSpec::new(lambda_ctx.clone(), relations, neutral)?;

    match (&raw.group.coparams, &raw.group.product) {
        (Some(co), Some(product)) => {
            for m in co {
                check_name(m, "group co-parameter")?;
            }
            let co_ctx = VarContext::new(co.clone())?;
            let double = VarContext::concat(&[&lambda_ctx, &co_ctx])?;
            let product = product
                .iter()
                .map(|e| parse_ratfunc(e, &double))
                .collect::<Result<Vec<_>>>()?;
            spec = spec.with_product(co_ctx, product)?;
        }
        (None, None) => {}
        _ => {
            return Err(Error::Input(
                "`coparams` and `product` must be declared together".into(),
            ))
        }
    }
    if let Some(inverse) = &raw.group.inverse {
        let inverse = inverse
            .iter()
            .map(|e| parse_ratfunc(e, &lambda_ctx))
            .collect::<Result<Vec<_>>>()?;
        spec = spec.with_inverse(inverse)?;
    }

    let numerators = raw
        .action
        .numerators
        .iter()
        .map(|e| parse_poly(e, &ctx))
        .collect::<Result<Vec<_>>>()?;
    let denominator = match &raw.action.denominator {
        Some(e) => parse_poly(e, &ctx)?,
        None => parse_poly("1", &ctx)?,
    };
    let action = GroupAction::new(spec, z_ctx.clone(), numerators, denominator)?;

    let section = match &raw.cross_section {
        Some(s) => {
            let zcap = VarContext::new(graph_names(&z_ctx))?;
            let gens = s
                .relations
                .iter()
                .map(|e| parse_poly(e, &zcap))
                .collect::<Result<Vec<_>>>()?;
            Some(gens)
        }
        None => None,
    };

    let mut priority = None;
    let mut settings = Settings::default();
    if let Some(s) = &raw.settings {
        if let Some(order) = &s.order {
            if order != "lex" && order != "grevlex" {
                return Err(Error::Input(format!(
                    "unknown order `{order}` (expected `lex` or `grevlex`)"
                )));
            }
            settings.order = Some(order.clone());
        }
        if let Some(names) = &s.priority {
            let mut idx = Vec::with_capacity(names.len());
            for n in names {
                match z_ctx.index_of(n) {
                    Some(i) if !idx.contains(&i) => idx.push(i),
                    Some(_) => {
                        return Err(Error::Input(format!("priority lists `{n}` twice")))
                    }
                    None => {
                        return Err(Error::Input(format!(
                            "priority names unknown coordinate `{n}`"
                        )))
                    }
                }
            }
            if idx.len() != z_ctx.arity() {
                return Err(Error::Input(
                    "priority must list every coordinate variable exactly once".into(),
                ));
            }
            priority = Some(idx);
        }
        settings.seed = s.seed;
        if let Some(r) = s.retries {
            if r == 0 {
                return Err(Error::Input("retries must be at least 1".into()));
            }
            settings.retries = Some(r);
        }
    }

    Ok(Problem { action, section, priority, settings })
}

/// Parses a comma-separated list of rational constants.
pub fn parse_point(text: &str) -> Result<Vec<Rat>> {
    text.split(',').map(|part| constant(part.trim())).collect()
}

/// Parses a polynomial in `zeta` whose coefficients are rational functions
/// of the coordinate variables; returns dense ascending coefficients.
pub fn parse_zeta_poly(text: &str, z_ctx: &VarContext) -> Result<Vec<RatFunc>> {
    let zeta_ctx = VarContext::new(vec![ZETA])?;
    let joint = VarContext::concat(&[z_ctx, &zeta_ctx])?;
    let n = z_ctx.arity();
    let value = parse_ratfunc(text, &joint)?;
    if value.den().degree_in(n) > 0 {
        return Err(Error::Input(format!(
            "the denominator of `{text}` involves {ZETA}"
        )));
    }
    let mut down: Vec<Option<usize>> = (0..n).map(Some).collect();
    down.push(None);
    let den = RatFunc::from_poly(value.den().restrict(z_ctx, &down)?);
    let deg = value.num().degree_in(n) as usize;
    let mut dense = vec![RatFunc::from_poly(QPoly::zero_in(z_ctx)); deg + 1];
    for (m, c) in value.num().iter() {
        let k = m.exp(n) as usize;
        let zm = rinvar::Monomial::from_exps((0..n).map(|v| m.exp(v)).collect());
        let part = QPoly::from_terms(z_ctx, [(zm, c.clone())]);
        dense[k] = dense[k].clone() + RatFunc::from_poly(part) / den.clone();
    }
    Ok(dense)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rinvar::field::rat_from_str;
    use rinvar::Field;

    const SCALING: &str = r#"
[group]
params    = ["l1", "l2"]
relations = ["1 - l1*l2"]
neutral   = ["1", "1"]
coparams  = ["m1", "m2"]
product   = ["l1*m1", "l2*m2"]
inverse   = ["l2", "l1"]

[action]
vars       = ["z1", "z2"]
numerators = ["l1*z1", "l1*z2"]

[cross_section]
relations = ["Z1 - 1"]

[settings]
priority = ["z2", "z1"]
seed     = 11
"#;

    #[test]
    fn parses_the_scaling_file() {
        let p = parse_problem(SCALING).unwrap();
        assert_eq!(p.action.z_arity(), 2);
        assert_eq!(p.action.group().relations().len(), 1);
        assert!(p.action.group().product().is_some());
        assert_eq!(p.priority, Some(vec![1, 0]));
        assert_eq!(p.settings.seed, Some(11));
        let section = p.section.unwrap();
        assert_eq!(section.len(), 1);
        assert_eq!(section[0].to_string(), "Z1-1");
    }

    #[test]
    fn rejects_bad_names() {
        let bad = SCALING.replace("\"l1\", \"l2\"", "\"L1\", \"l2\"");
        assert!(parse_problem(&bad).is_err());
        let bad = SCALING.replace("vars       = [\"z1\", \"z2\"]", "vars       = [\"zeta\", \"z2\"]");
        assert!(parse_problem(&bad).is_err());
    }

    #[test]
    fn rejects_product_without_coparams() {
        let bad = SCALING.replace("coparams  = [\"m1\", \"m2\"]\n", "");
        match parse_problem(&bad) {
            Err(Error::Input(msg)) => assert!(msg.contains("together")),
            other => panic!("expected input error, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn cross_section_uses_graph_variables() {
        let bad = SCALING.replace("[\"Z1 - 1\"]", "[\"z1 - 1\"]");
        match parse_problem(&bad) {
            Err(Error::Parse { msg, .. }) => assert!(msg.contains("z1")),
            other => panic!("expected parse error, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn points_and_zeta_polynomials() {
        assert_eq!(
            parse_point("1/2, -3").unwrap(),
            vec![rat_from_str("1/2").unwrap(), Rat::from_i64(-3)]
        );
        assert!(parse_point("z1").is_err());

        let z = VarContext::new(vec!["z1", "z2"]).unwrap();
        let dense = parse_zeta_poly("zeta^3 + zeta^2 + z2*zeta + 1", &z).unwrap();
        assert_eq!(dense.len(), 4);
        assert_eq!(dense[1].to_string(), "z2");
        let dense = parse_zeta_poly("zeta^2 - z1^2/z2^2", &z).unwrap();
        assert_eq!(dense[0].to_string(), "-z1^2/z2^2");
        assert!(parse_zeta_poly("1/zeta", &z).is_err());
    }
}
