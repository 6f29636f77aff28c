//! The spherical Hecke ring: finitely supported functions on dominant
//! coweights with Laurent-polynomial values in `v` (`q = v^2`), the basis
//! `c_mu` of double-coset characteristic functions, the trace functions of
//! intersection motives, the Satake transform, and the ring structure
//! transported through it (kept honest by the lattice-counting oracle in
//! [`oracle`]).

pub mod oracle;

use crate::error::{Error, Result};
use crate::poly::Laurent;
use crate::q_analog::lusztig_q_analog;
use crate::rep_ring::{decompose_character, weyl_character, RepElement};
use crate::root_datum::{pair, BasedRootDatum, Coweight};
use crate::Int;
use std::collections::BTreeMap;
use std::fmt;

pub use oracle::{oracle_convolve, LatticeChainProblem};

/// Element of the spherical Hecke ring in the `c_mu` basis.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HeckeElement {
    terms: BTreeMap<Coweight, Laurent>,
}

/// Element of R(hatG) ⊗ Z[v^{±1}] written over the Weyl characters chi_mu.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SatakeElement {
    terms: BTreeMap<Coweight, Laurent>,
}

macro_rules! supported_map_impls {
    ($t:ident, $sym:literal) => {
        impl $t {
            pub fn zero() -> $t {
                $t::default()
            }

            pub fn basis(mu: Coweight) -> $t {
                let mut terms = BTreeMap::new();
                terms.insert(mu, Laurent::one());
                $t { terms }
            }

            pub fn is_zero(&self) -> bool {
                self.terms.is_empty()
            }

            pub fn coeff(&self, mu: &Coweight) -> Laurent {
                self.terms.get(mu).cloned().unwrap_or_else(Laurent::zero)
            }

            pub fn terms(&self) -> impl Iterator<Item = (&Coweight, &Laurent)> + '_ {
                self.terms.iter()
            }

            pub fn support(&self) -> impl Iterator<Item = &Coweight> + '_ {
                self.terms.keys()
            }

            pub fn add_term(&mut self, mu: Coweight, p: &Laurent) {
                if p.is_zero() {
                    return;
                }
                let entry = self.terms.entry(mu.clone()).or_insert_with(Laurent::zero);
                *entry = entry.add(p);
                if entry.is_zero() {
                    self.terms.remove(&mu);
                }
            }

            pub fn add(&self, other: &$t) -> $t {
                let mut out = self.clone();
                for (mu, p) in other.terms() {
                    out.add_term(mu.clone(), p);
                }
                out
            }

            pub fn sub(&self, other: &$t) -> $t {
                let mut out = self.clone();
                for (mu, p) in other.terms() {
                    out.add_term(mu.clone(), &p.neg());
                }
                out
            }

            pub fn scale(&self, p: &Laurent) -> $t {
                let mut out = $t::zero();
                for (mu, c) in self.terms() {
                    out.add_term(mu.clone(), &c.mul(p));
                }
                out
            }

            /// Support weight maximal in the `<2rho, .>`-graded order; ties
            /// broken lexicographically. Dominance-smaller weights always
            /// have strictly smaller grade.
            fn graded_max(&self, datum: &BasedRootDatum) -> Option<Coweight> {
                self.terms
                    .keys()
                    .max_by_key(|mu| (pair(datum.two_rho(), mu), (*mu).clone()))
                    .cloned()
            }
        }

        impl fmt::Debug for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.terms.is_empty() {
                    return write!(f, "0");
                }
                for (i, (mu, p)) in self.terms.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "({})*{}{}", p.display("v"), $sym, mu)?;
                }
                Ok(())
            }
        }
    };
}

supported_map_impls!(HeckeElement, "c");
supported_map_impls!(SatakeElement, "chi");

/// Trace function of the intersection motive: `f_{IC_mu} = sum over lambda
/// <= mu of q^{<rho, mu-lambda>} m^mu_lambda(q^{-1}) c_lambda`. The degree
/// bound on the q-analog makes every value a polynomial in q.
pub fn ic_function(datum: &BasedRootDatum, mu: &Coweight) -> Result<HeckeElement> {
    if !datum.is_dominant_coweight(mu) {
        return Err(Error::NotDominant(format!("{mu}")));
    }
    let mut out = HeckeElement::zero();
    for (lam, _) in crate::rep_ring::weight_multiplicities(datum, mu)? {
        if !datum.is_dominant_coweight(&lam) {
            continue;
        }
        let m = lusztig_q_analog(datum, mu, &lam)?;
        // q^{<rho, mu-lambda>} m(q^{-1}) in the variable v.
        let shift = pair(datum.two_rho(), &mu.sub(&lam));
        let val = m.map_exponents(|e| -2 * e).shift(shift);
        debug_assert!(val.min_exp().map_or(true, |e| e >= 0));
        out.add_term(lam, &val);
    }
    Ok(out)
}

/// Satake transform: `f_{IC_mu} -> q^{<rho, mu>} chi_mu`, extended to the
/// c-basis by triangular elimination.
pub fn satake_transform(datum: &BasedRootDatum, h: &HeckeElement) -> Result<SatakeElement> {
    let mut rem = h.clone();
    let mut out = SatakeElement::zero();
    while let Some(mu) = rem.graded_max(datum) {
        let coeff = rem.coeff(&mu);
        if !datum.is_dominant_coweight(&mu) {
            return Err(Error::NotDominant(format!("Hecke support at {mu}")));
        }
        out.add_term(mu.clone(), &coeff.shift(pair(datum.two_rho(), &mu)));
        rem = rem.sub(&ic_function(datum, &mu)?.scale(&coeff));
    }
    Ok(out)
}

/// Inverse transform, by triangular elimination against `Sat(c_mu)`.
pub fn satake_inverse(datum: &BasedRootDatum, s: &SatakeElement) -> Result<HeckeElement> {
    let mut rem = s.clone();
    let mut out = HeckeElement::zero();
    while let Some(mu) = rem.graded_max(datum) {
        let coeff = rem.coeff(&mu).shift(-pair(datum.two_rho(), &mu));
        if !datum.is_dominant_coweight(&mu) {
            return Err(Error::NotDominant(format!("character support at {mu}")));
        }
        out.add_term(mu.clone(), &coeff);
        let sat_c = satake_transform(datum, &HeckeElement::basis(mu.clone()))?;
        rem = rem.sub(&sat_c.scale(&coeff));
    }
    Ok(out)
}

/// Tensor multiplicities `N^nu_{mu lambda}` of hatG, via the character ring.
pub fn tensor_multiplicities(
    datum: &BasedRootDatum,
    mu: &Coweight,
    lam: &Coweight,
) -> Result<Vec<(Coweight, Int)>> {
    let prod = weyl_character(datum, mu, 0)?.mul(&weyl_character(datum, lam, 0)?);
    let dec: RepElement = decompose_character(datum, &prod)?;
    Ok(dec.terms().map(|((nu,_), c)| (nu.clone(), c)).collect())
}

/// Product of two Satake elements using `chi_mu chi_lambda = sum N chi_nu`.
pub fn satake_multiply(
    datum: &BasedRootDatum,
    a: &SatakeElement,
    b: &SatakeElement,
) -> Result<SatakeElement> {
    let mut out = SatakeElement::zero();
    for (mu, pa) in a.terms() {
        for (lam, pb) in b.terms() {
            let c = pa.mul(pb);
            for (nu, n) in tensor_multiplicities(datum, mu, lam)? {
                out.add_term(nu, &c.scale(n));
            }
        }
    }
    Ok(out)
}

/// Convolution product on the Hecke ring: transported through the Satake
/// transform (and cross-checked against the lattice oracle in the tests).
pub fn hecke_multiply(
    datum: &BasedRootDatum,
    h1: &HeckeElement,
    h2: &HeckeElement,
) -> Result<HeckeElement> {
    let s1 = satake_transform(datum, h1)?;
    let s2 = satake_transform(datum, h2)?;
    satake_inverse(datum, &satake_multiply(datum, &s1, &s2)?)
}

/// Rewrite a Laurent polynomial in `v` as a polynomial in `q = v^2`; `None`
/// if an odd power of `v` occurs.
pub fn v_poly_as_q(p: &Laurent) -> Option<Laurent> {
    let mut out = Laurent::zero();
    for (e, c) in p.terms() {
        if e % 2 != 0 {
            return None;
        }
        out.add_term(e / 2, c);
    }
    Some(out)
}
