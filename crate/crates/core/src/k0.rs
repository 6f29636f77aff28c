//! The Grothendieck ring of the Satake category with basis `[IC_mu(n)]`:
//! convolution transported through the Satake correspondence, Tate twists,
//! the trace of geometric Frobenius down to the spherical Hecke ring with
//! its kernel relation `[IC_0(-1)] = q [IC_0]`, and the graded fiber
//! dimensions.

use crate::error::{Error, Result};
use crate::hecke::{ic_function, HeckeElement};
use crate::poly::{Laurent, QPolynomial};
use crate::q_analog::lusztig_q_analog;
use crate::rep_ring::{tensor_decompose, RepElement};
use crate::root_datum::{BasedRootDatum, Coweight};
use crate::Int;
use std::collections::BTreeMap;
use std::fmt;

/// Finitely supported integer combination of the classes [IC_mu(n)].
#[derive(Clone, PartialEq, Eq, Default)]
pub struct K0Element {
    terms: BTreeMap<(Coweight, Int), Int>,
}

impl K0Element {
    pub fn zero() -> K0Element {
        K0Element::default()
    }

    pub fn unit(rank: usize) -> K0Element {
        K0Element::basis(Coweight::zero(rank), 0)
    }

    /// The class [IC_mu(n)].
    pub fn basis(mu: Coweight, n: Int) -> K0Element {
        let mut terms = BTreeMap::new();
        terms.insert((mu, n), 1);
        K0Element { terms }
    }

    pub fn add_term(&mut self, mu: Coweight, n: Int, coeff: Int) {
        if coeff == 0 {
            return;
        }
        let e = self.terms.entry((mu, n)).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn coeff(&self, mu: &Coweight, n: Int) -> Int {
        *self.terms.get(&(mu.clone(), n)).unwrap_or(&0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Coweight, Int), Int)> + '_ {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &K0Element) -> K0Element {
        let mut out = self.clone();
        for ((mu, n), c) in o.terms() {
            out.add_term(mu.clone(), *n, c);
        }
        out
    }

    pub fn sub(&self, o: &K0Element) -> K0Element {
        let mut out = self.clone();
        for ((mu, n), c) in o.terms() {
            out.add_term(mu.clone(), *n, -c);
        }
        out
    }

    pub fn scale(&self, k: Int) -> K0Element {
        let mut out = K0Element::zero();
        for ((mu, n), c) in self.terms() {
            out.add_term(mu.clone(), *n, c * k);
        }
        out
    }
}

impl fmt::Debug for K0Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((mu, n), c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*[IC{mu}({n})]")?;
        }
        Ok(())
    }
}

/// The basis bijection [IC_mu(n)] -> [V_mu(n)] (a ring isomorphism by
/// construction of the convolution).
pub fn satake_bridge(a: &K0Element) -> RepElement {
    let mut out = RepElement::zero();
    for ((mu, n), c) in a.terms() {
        out.add_term(mu.clone(), *n, c);
    }
    out
}

pub fn satake_bridge_inverse(r: &RepElement) -> K0Element {
    let mut out = K0Element::zero();
    for ((mu, n), c) in r.terms() {
        out.add_term(mu.clone(), *n, c);
    }
    out
}

/// Convolution, transported from the tensor product of hatG_1.
pub fn k0_convolve(datum: &BasedRootDatum, a: &K0Element, b: &K0Element) -> Result<K0Element> {
    let prod = tensor_decompose(datum, &satake_bridge(a), &satake_bridge(b))?;
    Ok(satake_bridge_inverse(&prod))
}

/// Shift every twist by k; equals convolution with [IC_0(k)].
pub fn tate_twist(a: &K0Element, k: Int) -> K0Element {
    let mut out = K0Element::zero();
    for ((mu, n), c) in a.terms() {
        out.add_term(mu.clone(), n + k, c);
    }
    out
}

/// Trace of geometric Frobenius: the ring homomorphism to the Hecke ring
/// with `[IC_mu(n)] -> q^{-n} f_{IC_mu}`; its kernel is generated by
/// `[IC_0(-1)] - q [IC_0]`.
pub fn trace_frobenius(datum: &BasedRootDatum, a: &K0Element) -> Result<HeckeElement> {
    let mut out = HeckeElement::zero();
    for ((mu, n), c) in a.terms() {
        let f = ic_function(datum, mu)?;
        out = out.add(&f.scale(&Laurent::monomial(-2 * n, c)));
    }
    Ok(out)
}

/// Substitute [d^{-1}] = [V_0(-1)] by q: the composition of the inverse
/// bridge with the trace, landing in the Hecke ring over Z[q^{-1}].
pub fn quotient_specialize(datum: &BasedRootDatum, r: &RepElement) -> Result<HeckeElement> {
    trace_frobenius(datum, &satake_bridge_inverse(r))
}

/// Graded dimension of the Satake fiber functor on IC_mu: the sum over
/// dominant lambda of `m^mu_lambda(q)` times the orbit size, together with
/// its value at q = 1 (the plain dimension of V_mu).
pub fn fiber_dimension(datum: &BasedRootDatum, mu: &Coweight) -> Result<(QPolynomial, Int)> {
    if !datum.is_dominant_coweight(mu) {
        return Err(Error::NotDominant(format!("{mu}")));
    }
    let mut graded = Laurent::zero();
    for (lam, _) in crate::rep_ring::weight_multiplicities(datum, mu)? {
        if !datum.is_dominant_coweight(&lam) {
            continue;
        }
        let orbit = datum.weyl_orbit_dominant(&lam)?.0.len() as Int;
        graded = graded.add(&lusztig_q_analog(datum, mu, &lam)?.scale(orbit));
    }
    let total = graded.eval_rat(crate::ratio::Rat::ONE).as_integer().unwrap() as Int;
    Ok((graded, total))
}
