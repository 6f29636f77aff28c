//! Laurent polynomials in one formal variable with integer coefficients.
//!
//! The same type carries the Hecke coefficients (variable `v`, `q = v^2`)
//! and the graded polynomials of `q_analog` (variable `q`, exponents >= 0).
//! Storage is canonical: no zero coefficients are ever kept.

use crate::ratio::Rat;
use crate::Int;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct Laurent {
    terms: BTreeMap<Int, Int>, // exponent -> nonzero coefficient
}

impl Laurent {
    pub fn zero() -> Laurent {
        Laurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Laurent {
        Laurent::monomial(0, 1)
    }

    pub fn monomial(exp: Int, coeff: Int) -> Laurent {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        Laurent { terms }
    }

    pub fn from_terms(terms: &[(Int, Int)]) -> Laurent {
        let mut p = Laurent::zero();
        for &(e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0) == 1
    }

    pub fn coeff(&self, exp: Int) -> Int {
        *self.terms.get(&exp).unwrap_or(&0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Int, Int)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn add_term(&mut self, exp: Int, coeff: Int) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry = entry.checked_add(coeff).expect("coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, -c);
        }
        out
    }

    pub fn neg(&self) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }

    pub fn scale(&self, k: Int) -> Laurent {
        if k == 0 {
            return Laurent::zero();
        }
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(&e, &c)| (e, c.checked_mul(k).expect("coefficient overflow")))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1.checked_mul(c2).expect("coefficient overflow"));
            }
        }
        out
    }

    /// Multiply by the monomial `var^k`.
    pub fn shift(&self, k: Int) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    /// Reinterpret exponents, e.g. `q -> v^2` is `map_exponents(|e| 2*e)`
    /// and `q -> q^{-1}` is `map_exponents(|e| -e)`.
    pub fn map_exponents(&self, f: impl Fn(Int) -> Int) -> Laurent {
        let mut out = Laurent::zero();
        for (e, c) in self.terms() {
            out.add_term(f(e), c);
        }
        out
    }

    pub fn min_exp(&self) -> Option<Int> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<Int> {
        self.terms.keys().next_back().copied()
    }

    /// Exact evaluation at a rational point (negative exponents welcome).
    pub fn eval_rat(&self, x: Rat) -> Rat {
        let mut acc = Rat::ZERO;
        for (e, c) in self.terms() {
            let mut pow = Rat::ONE;
            for _ in 0..e.unsigned_abs() {
                pow = pow.mul(x);
            }
            if e < 0 {
                pow = Rat::ONE.div(pow);
            }
            acc = acc.add(pow.mul(Rat::from_int(c)));
        }
        acc
    }

    /// Render with the given variable name, lowest exponent first.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let coeff_part = if mag != 1 || e == 0 { mag.to_string() } else { String::new() };
            let var_part = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            match (coeff_part.is_empty(), var_part.is_empty()) {
                (false, false) => {
                    out.push_str(&coeff_part);
                    out.push('*');
                    out.push_str(&var_part);
                }
                (false, true) => out.push_str(&coeff_part),
                (true, false) => out.push_str(&var_part),
                (true, true) => out.push('1'),
            }
        }
        out
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("v"))
    }
}

/// Graded polynomial in `q` (nonnegative exponents by construction where used).
pub type QPolynomial = Laurent;

/// `q^k` as a Laurent polynomial in `v` with `q = v^2`.
pub fn q_power_in_v(k: Int) -> Laurent {
    Laurent::monomial(2 * k, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_ops() {
        let p = Laurent::from_terms(&[(0, 1), (1, 1)]); // 1 + v
        let q = Laurent::from_terms(&[(0, -1), (1, 1)]); // v - 1
        assert_eq!(p.mul(&q), Laurent::from_terms(&[(2, 1), (0, -1)]));
        assert_eq!(p.sub(&p), Laurent::zero());
        assert_eq!(p.shift(-1), Laurent::from_terms(&[(-1, 1), (0, 1)]));
        assert!(Laurent::monomial(3, 0).is_zero());
    }

    #[test]
    fn eval_and_display() {
        let p = Laurent::from_terms(&[(-2, 3), (1, 1)]); // 3v^-2 + v
        assert_eq!(p.eval_rat(Rat::from_int(2)), Rat::new(3, 4).add(Rat::from_int(2)));
        assert_eq!(p.display("v"), "3*v^-2 + v");
        assert_eq!(Laurent::zero().display("q"), "0");
        assert_eq!(Laurent::from_terms(&[(0, 1), (2, 1)]).display("q"), "1 + q^2");
    }
}
