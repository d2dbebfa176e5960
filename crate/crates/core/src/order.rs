//! Term orders: lexicographic, graded reverse lexicographic, and block
//! (elimination) orders.
//!
//! A block order partitions the variables into blocks compared most
//! significant first; within a block the listed variable sequence defines the
//! significance for the inner order. Block orders with the eliminated
//! variables in the leading blocks yield elimination orders; a single block
//! with a permuted variable list yields lex/grevlex with custom significance.

use crate::monomial::Monomial;
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseOrder {
    Lex,
    Grevlex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderBlock {
    /// Variable indices of the block, most significant first.
    pub vars: Vec<usize>,
    pub order: BaseOrder,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermOrder {
    /// Lexicographic in declared variable order.
    Lex,
    /// Graded reverse lexicographic in declared variable order.
    Grevlex,
    /// Block order, blocks most significant first.
    Block(Vec<OrderBlock>),
}

fn cmp_base(order: BaseOrder, vars: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    match order {
        BaseOrder::Lex => {
            for &v in vars {
                match a.exp(v).cmp(&b.exp(v)) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
            }
            Ordering::Equal
        }
        BaseOrder::Grevlex => {
            let da: u64 = vars.iter().map(|&v| a.exp(v) as u64).sum();
            let db: u64 = vars.iter().map(|&v| b.exp(v) as u64).sum();
            match da.cmp(&db) {
                Ordering::Equal => {}
                ord => return ord,
            }
            // Ties: the monomial whose trailing difference is negative wins.
            for &v in vars.iter().rev() {
                match a.exp(v).cmp(&b.exp(v)) {
                    Ordering::Equal => {}
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        }
    }
}

impl TermOrder {
    /// Compares monomials; `Greater` means `a` is the more significant term.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), b.arity());
        match self {
            TermOrder::Lex => {
                let all: Vec<usize> = (0..a.arity()).collect();
                cmp_base(BaseOrder::Lex, &all, a, b)
            }
            TermOrder::Grevlex => {
                let all: Vec<usize> = (0..a.arity()).collect();
                cmp_base(BaseOrder::Grevlex, &all, a, b)
            }
            TermOrder::Block(blocks) => {
                for blk in blocks {
                    match cmp_base(blk.order, &blk.vars, a, b) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn max<'m>(&self, a: &'m Monomial, b: &'m Monomial) -> &'m Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }

    /// Grevlex with explicit significance (most significant first).
    pub fn grevlex_with_priority(priority: Vec<usize>) -> TermOrder {
        TermOrder::Block(vec![OrderBlock { vars: priority, order: BaseOrder::Grevlex }])
    }

    /// Elimination order: monomials containing `high` variables dominate.
    /// Both blocks use grevlex with the listed significance.
    pub fn elimination(high: Vec<usize>, low: Vec<usize>) -> TermOrder {
        TermOrder::Block(vec![
            OrderBlock { vars: high, order: BaseOrder::Grevlex },
            OrderBlock { vars: low, order: BaseOrder::Grevlex },
        ])
    }

    /// Checks that the order is total on monomials of the given arity:
    /// every variable must be covered (blocks may not omit variables).
    pub fn assert_total(&self, arity: usize) {
        if let TermOrder::Block(blocks) = self {
            let mut seen = vec![false; arity];
            for blk in blocks {
                for &v in &blk.vars {
                    assert!(v < arity, "order references variable {v} outside arity {arity}");
                    assert!(!seen[v], "order lists variable {v} twice");
                    seen[v] = true;
                }
            }
            assert!(seen.iter().all(|&s| s), "order does not cover all {arity} variables");
        }
    }

    /// True when monomials in `keep` compare below all monomials containing a
    /// variable outside `keep` — i.e. the order eliminates the complement.
    pub fn eliminates_complement_of(&self, keep: &[bool]) -> bool {
        match self {
            TermOrder::Block(blocks) => {
                // Once a block touches a kept variable, all later blocks must
                // stay inside `keep` and no earlier block may contain one.
                let mut in_tail = false;
                for blk in blocks {
                    let kept = blk.vars.iter().filter(|&&v| keep[v]).count();
                    if kept == blk.vars.len() {
                        in_tail = true;
                    } else if kept == 0 {
                        if in_tail {
                            return false;
                        }
                    } else {
                        return false;
                    }
                }
                true
            }
            _ => keep.iter().all(|&k| k),
        }
    }

    /// Rebuilds the order for a sub-context via `map[i] = Some(new index)`.
    /// Variables mapped to `None` are dropped from their blocks.
    pub fn restrict(&self, map: &[Option<usize>]) -> TermOrder {
        match self {
            TermOrder::Lex => TermOrder::Lex,
            TermOrder::Grevlex => TermOrder::Grevlex,
            TermOrder::Block(blocks) => {
                let blocks: Vec<OrderBlock> = blocks
                    .iter()
                    .map(|blk| OrderBlock {
                        vars: blk.vars.iter().filter_map(|&v| map[v]).collect(),
                        order: blk.order,
                    })
                    .filter(|blk| !blk.vars.is_empty())
                    .collect();
                TermOrder::Block(blocks)
            }
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::Lex => write!(f, "lex"),
            TermOrder::Grevlex => write!(f, "grevlex"),
            TermOrder::Block(blocks) => {
                write!(f, "block(")?;
                for (i, blk) in blocks.iter().enumerate() {
                    if i > 0 {
                        write!(f, " >> ")?;
                    }
                    let kind = match blk.order {
                        BaseOrder::Lex => "lex",
                        BaseOrder::Grevlex => "grevlex",
                    };
                    write!(f, "{kind}{:?}", blk.vars)?;
                }
                write!(f, ")")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    #[test]
    fn lex_order() {
        let ord = TermOrder::Lex;
        // x > y^5 under lex with x first.
        assert_eq!(ord.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 1]), &m(&[1, 0])), Ordering::Greater);
    }

    #[test]
    fn grevlex_order() {
        let ord = TermOrder::Grevlex;
        // Degree dominates.
        assert_eq!(ord.cmp(&m(&[0, 5]), &m(&[1, 0])), Ordering::Greater);
        // x^2 > xy > y^2 at equal degree.
        assert_eq!(ord.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
        // Classic grevlex-vs-grlex witness: x^1 y^1 z^1 vs x^2 z^0 ... use
        // x*y^2*z vs x^2*z^2: equal degree 4, trailing difference decides.
        assert_eq!(ord.cmp(&m(&[1, 2, 1]), &m(&[2, 0, 2])), Ordering::Greater);
    }

    #[test]
    fn block_elimination_dominates() {
        // Eliminate variable 0; keep 1, 2.
        let ord = TermOrder::elimination(vec![0], vec![1, 2]);
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert!(ord.eliminates_complement_of(&[false, true, true]));
        assert!(!ord.eliminates_complement_of(&[true, true, false]));
    }

    #[test]
    fn priority_permutes_significance() {
        // Grevlex with significance (z2, z1): ties resolve against z1.
        let ord = TermOrder::grevlex_with_priority(vec![1, 0]);
        assert_eq!(ord.cmp(&m(&[0, 1]), &m(&[1, 0])), Ordering::Greater);
    }

    #[test]
    fn restriction_drops_variables() {
        let ord = TermOrder::elimination(vec![0], vec![1, 2]);
        let r = ord.restrict(&[None, Some(0), Some(1)]);
        assert_eq!(r, TermOrder::Block(vec![OrderBlock { vars: vec![0, 1], order: BaseOrder::Grevlex }]));
    }
}
