//! Monomials as exponent vectors.
//!
//! A monomial stores one exponent per variable of its owning context; the
//! association with the context is maintained by the containing polynomial.
//! The derived `Ord` is a structural order used only for canonical storage —
//! semantic comparisons go through [`crate::order::TermOrder`].

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial { exps: vec![0; arity] }
    }

    pub fn var(arity: usize, i: usize) -> Self {
        assert!(i < arity, "variable index out of range");
        let mut exps = vec![0; arity];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// True when every variable in the support lies in `allowed`.
    pub fn supported_on(&self, allowed: &[bool]) -> bool {
        self.support().all(|i| allowed[i])
    }

    /// True when the monomial is a positive power of a single variable.
    pub fn pure_power(&self) -> Option<usize> {
        let mut sup = self.support();
        match (sup.next(), sup.next()) {
            (Some(i), None) => Some(i),
            _ => None,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.checked_add(b).expect("monomial exponent overflow"))
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other), "inexact monomial division");
        Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(&b, &a)| b - a).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .map(|&e| e.checked_mul(k).expect("monomial exponent overflow"))
                .collect(),
        }
    }

    /// Reindexes the exponents into a context of arity `new_arity` via
    /// `map[i] = new index of old variable i`.
    pub fn rename(&self, new_arity: usize, map: &[usize]) -> Monomial {
        let mut exps = vec![0; new_arity];
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                exps[map[i]] = e;
            }
        }
        Monomial { exps }
    }

    /// Splits into the part supported on `mask` and the part outside it.
    pub fn split(&self, mask: &[bool]) -> (Monomial, Monomial) {
        let mut inside = vec![0; self.arity()];
        let mut outside = vec![0; self.arity()];
        for (i, &e) in self.exps.iter().enumerate() {
            if mask[i] {
                inside[i] = e;
            } else {
                outside[i] = e;
            }
        }
        (Monomial { exps: inside }, Monomial { exps: outside })
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{:?}", self.exps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_lcm() {
        let a = Monomial::from_exps(vec![2, 0, 1]);
        let b = Monomial::from_exps(vec![1, 0, 0]);
        assert!(b.divides(&a));
        assert!(!a.divides(&b));
        assert_eq!(b.div_into(&a).exps(), &[1, 0, 1]);
        assert_eq!(a.lcm(&b).exps(), &[2, 0, 1]);
        assert!(!a.coprime(&b));
        assert!(a.coprime(&Monomial::from_exps(vec![0, 3, 0])));
    }

    #[test]
    fn pure_power_detection() {
        assert_eq!(Monomial::from_exps(vec![0, 4, 0]).pure_power(), Some(1));
        assert_eq!(Monomial::from_exps(vec![1, 1, 0]).pure_power(), None);
        assert_eq!(Monomial::from_exps(vec![0, 0, 0]).pure_power(), None);
    }

    #[test]
    fn rename_moves_exponents() {
        let a = Monomial::from_exps(vec![2, 3]);
        assert_eq!(a.rename(4, &[3, 1]).exps(), &[0, 3, 0, 2]);
    }
}
