//! The representation rings R(hatG) and R(hatG_1): weight multiplicities by
//! Freudenthal's recursion, characters of the simple objects V_mu(n), the
//! triangular inverse (character -> virtual sum of simples), tensor products
//! and the restriction check along the isogeny hatG x G_m -> hatG_1.
//!
//! Weights of hatG are coweights of the input datum; positive roots of hatG
//! are its positive coroots, so dominance on both sides is the one function
//! `dominance_leq`. The extended character of V_mu(n) is supported on
//! `(nu, n - <rho, mu - nu>)` in Tate-twist units.

use crate::dual_group::ext_weyl_act;
use crate::error::{Error, Result};
use crate::root_datum::{pair, BasedRootDatum, Coweight};
use crate::Int;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

/// Finitely supported integer map on Y ⊕ Z, the characters of the extended
/// torus. Invariant under the extended W0-action when it comes from an
/// actual (virtual) representation.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Character {
    terms: BTreeMap<(Coweight, Int), Int>,
}

impl Character {
    pub fn zero() -> Character {
        Character::default()
    }

    pub fn add_term(&mut self, nu: Coweight, twist: Int, coeff: Int) {
        if coeff == 0 {
            return;
        }
        let e = self.terms.entry((nu, twist)).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn coeff(&self, nu: &Coweight, twist: Int) -> Int {
        *self.terms.get(&(nu.clone(), twist)).unwrap_or(&0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Coweight, Int), Int)> + '_ {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &Character) -> Character {
        let mut out = self.clone();
        for ((nu, t), c) in other.terms() {
            out.add_term(nu.clone(), *t, c);
        }
        out
    }

    pub fn sub(&self, other: &Character) -> Character {
        let mut out = self.clone();
        for ((nu, t), c) in other.terms() {
            out.add_term(nu.clone(), *t, -c);
        }
        out
    }

    pub fn scale(&self, k: Int) -> Character {
        let mut out = Character::zero();
        for ((nu, t), c) in self.terms() {
            out.add_term(nu.clone(), *t, c * k);
        }
        out
    }

    /// Group-ring product (convolution of supports).
    pub fn mul(&self, other: &Character) -> Character {
        let mut out = Character::zero();
        for ((nu1, t1), c1) in self.terms() {
            for ((nu2, t2), c2) in other.terms() {
                out.add_term(nu1.add(nu2), t1 + t2, c1 * c2);
            }
        }
        out
    }

    /// Total of all coefficients (the dimension when this is a character).
    pub fn total(&self) -> Int {
        self.terms.values().sum()
    }

    /// Invariance under the extended Weyl action.
    pub fn is_invariant(&self, datum: &BasedRootDatum) -> bool {
        for pos in 0..datum.num_simple() {
            let s = datum.simple_reflection(pos);
            for ((nu, t), c) in self.terms() {
                let (wnu, wt) = ext_weyl_act(datum, &s, nu, *t);
                if self.coeff(&wnu, wt) != c {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((nu, t), c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*e[{nu};{t}]")?;
        }
        Ok(())
    }
}

/// Finitely supported integer map on pairs (dominant mu, twist n): a virtual
/// sum of the simple objects [V_mu(n)].
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RepElement {
    terms: BTreeMap<(Coweight, Int), Int>,
}

impl RepElement {
    pub fn zero() -> RepElement {
        RepElement::default()
    }

    pub fn unit(rank: usize) -> RepElement {
        RepElement::simple(Coweight::zero(rank), 0)
    }

    pub fn simple(mu: Coweight, n: Int) -> RepElement {
        let mut terms = BTreeMap::new();
        terms.insert((mu, n), 1);
        RepElement { terms }
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

    pub fn add(&self, other: &RepElement) -> RepElement {
        let mut out = self.clone();
        for ((mu, n), c) in other.terms() {
            out.add_term(mu.clone(), *n, c);
        }
        out
    }

    pub fn sub(&self, other: &RepElement) -> RepElement {
        let mut out = self.clone();
        for ((mu, n), c) in other.terms() {
            out.add_term(mu.clone(), *n, -c);
        }
        out
    }

    /// Shift every twist by k (tensoring with V_0(k)).
    pub fn twist(&self, k: Int) -> RepElement {
        let mut out = RepElement::zero();
        for ((mu, n), c) in self.terms() {
            out.add_term(mu.clone(), n + k, c);
        }
        out
    }
}

impl fmt::Debug for RepElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((mu, n), c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*[V{mu}({n})]")?;
        }
        Ok(())
    }
}

/// Weight multiplicities of the irreducible hatG-representation with highest
/// weight `mu`, by the Freudenthal recursion run over the full weight diagram.
pub fn weight_multiplicities(
    datum: &BasedRootDatum,
    mu: &Coweight,
) -> Result<BTreeMap<Coweight, Int>> {
    datum.require_valid()?;
    if !datum.is_dominant_coweight(mu) {
        return Err(Error::NotDominant(format!("{mu}")));
    }

    // Positive roots of hatG are the positive coroots of the datum.
    let pos_roots: Vec<Coweight> = datum
        .positive_root_indices()
        .map(|i| datum.coroots()[i].clone())
        .collect();
    let two_rho_hat = datum.two_rho_dual().clone();

    // W-invariant bilinear form on Y: B(x, y) = sum over roots <alpha, x><alpha, y>.
    let b_form = |x: &Coweight, y: &Coweight| -> Int {
        datum
            .roots()
            .iter()
            .map(|alpha| pair(alpha, x) * pair(alpha, y))
            .sum()
    };

    // The weight diagram: everything reachable from mu by subtracting simple
    // coroots whose dominant representative stays <= mu.
    let is_weight = |nu: &Coweight| -> Result<bool> {
        let rep = datum.dominant_representative(nu);
        datum.dominance_leq(&rep, mu)
    };
    let mut weights: BTreeSet<Coweight> = BTreeSet::new();
    let mut queue = VecDeque::new();
    weights.insert(mu.clone());
    queue.push_back(mu.clone());
    while let Some(nu) = queue.pop_front() {
        for pos in 0..datum.num_simple() {
            let cand = nu.sub(datum.simple_coroot(pos));
            if !weights.contains(&cand) && is_weight(&cand)? {
                weights.insert(cand.clone());
                queue.push_back(cand);
            }
        }
    }

    // Order by height of mu - nu; multiplicities fill strictly top-down.
    let mut by_height: BTreeMap<Int, Vec<Coweight>> = BTreeMap::new();
    for nu in &weights {
        let ht = datum.rho_height(&mu.sub(nu));
        by_height.entry(ht).or_default().push(nu.clone());
    }

    let mut mult: BTreeMap<Coweight, Int> = BTreeMap::new();
    for (ht, layer) in by_height {
        for nu in layer {
            if ht == 0 {
                mult.insert(nu, 1);
                continue;
            }
            if !datum.is_dominant_coweight(&nu) {
                let rep = datum.dominant_representative(&nu);
                let m = *mult.get(&rep).expect("dominant representative computed first");
                mult.insert(nu, m);
                continue;
            }
            // Freudenthal: (|mu+rho|^2 - |nu+rho|^2) m_nu
            //            = 2 sum_{beta>0} sum_{k>=1} m_{nu+k beta} (nu + k beta, beta).
            let mut rhs: Int = 0;
            for beta in &pos_roots {
                let mut k = 1;
                loop {
                    let up = nu.add(&beta.scale(k));
                    match mult.get(&up) {
                        Some(&m) => rhs += 2 * m * b_form(&up, beta),
                        None => break,
                    }
                    k += 1;
                }
            }
            let denom = b_form(&mu.sub(&nu), &mu.add(&nu).add(&two_rho_hat));
            assert!(denom > 0, "Freudenthal denominator must be positive");
            assert_eq!(rhs % denom, 0, "Freudenthal division must be exact");
            mult.insert(nu, rhs / denom);
        }
    }
    Ok(mult)
}

/// Character of V_mu(n) as a function on Y ⊕ Z: weight `nu` sits in twist
/// `n - <rho, mu - nu>`.
pub fn weyl_character(datum: &BasedRootDatum, mu: &Coweight, n: Int) -> Result<Character> {
    let mult = weight_multiplicities(datum, mu)?;
    let mut out = Character::zero();
    for (nu, m) in mult {
        let twist = n - datum.rho_height(&mu.sub(&nu));
        out.add_term(nu, twist, m);
    }
    Ok(out)
}

/// Weyl dimension formula, evaluated exactly: product over positive roots of
/// `<alpha, mu + rho-hat> / <alpha, rho-hat>` (computed with 2rho-hat).
pub fn weyl_dimension(datum: &BasedRootDatum, mu: &Coweight) -> Result<Int> {
    datum.require_valid()?;
    if !datum.is_dominant_coweight(mu) {
        return Err(Error::NotDominant(format!("{mu}")));
    }
    let two_rho_hat = datum.two_rho_dual();
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in datum.positive_root_indices() {
        let alpha = &datum.roots()[i];
        num *= (pair(alpha, &mu.scale(2)) + pair(alpha, two_rho_hat)) as i128;
        den *= pair(alpha, two_rho_hat) as i128;
        let g = gcd128(num.abs(), den.abs());
        num /= g;
        den /= g;
    }
    assert_eq!(den, 1, "Weyl dimension must be an integer");
    Ok(num as Int)
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}

/// The dominant coweights `lambda <= mu`: by saturation these are exactly
/// the dominant weights of V_mu.
pub fn dominant_weights_leq(datum: &BasedRootDatum, mu: &Coweight) -> Result<Vec<Coweight>> {
    Ok(weight_multiplicities(datum, mu)?
        .into_keys()
        .filter(|l| datum.is_dominant_coweight(l))
        .collect())
}

/// Character of a virtual sum of simples.
pub fn character_of(datum: &BasedRootDatum, rep: &RepElement) -> Result<Character> {
    let mut out = Character::zero();
    for ((mu, n), c) in rep.terms() {
        out = out.add(&weyl_character(datum, mu, *n)?.scale(c));
    }
    Ok(out)
}

/// Expand an extended-invariant character uniquely over the characters of
/// the V_mu(n) by repeated extraction of a dominance-maximal support weight.
pub fn decompose_character(datum: &BasedRootDatum, c: &Character) -> Result<RepElement> {
    if !c.is_invariant(datum) {
        return Err(Error::InvalidInput(
            "character is not invariant under the extended Weyl action".into(),
        ));
    }
    let mut rem = c.clone();
    let mut out = RepElement::zero();
    let mut guard = 0usize;
    while !rem.is_zero() {
        guard += 1;
        if guard > 100_000 {
            return Err(Error::InvalidInput("character decomposition does not terminate".into()));
        }
        // A support weight maximal in the graded order by <2rho, .>; any
        // dominance-maximal weight realizes the maximal grade in its twist.
        let ((nu, twist), coeff) = rem
            .terms()
            .max_by_key(|((nu, t), _)| (pair(datum.two_rho(), nu), nu.clone(), *t))
            .map(|(k, c)| (k.clone(), c))
            .expect("nonzero character has support");
        if !datum.is_dominant_coweight(&nu) {
            return Err(Error::InvalidInput(format!(
                "maximal support weight {nu} is not dominant; corrupt character"
            )));
        }
        out.add_term(nu.clone(), twist, coeff);
        rem = rem.sub(&weyl_character(datum, &nu, twist)?.scale(coeff));
    }
    Ok(out)
}

/// Product in R(hatG_1): multiply characters, then decompose. The twist of
/// each constituent [V_nu(m+n-<rho, mu+lambda-nu>)] is automatic from the
/// twist bookkeeping of the characters.
pub fn tensor_decompose(
    datum: &BasedRootDatum,
    a: &RepElement,
    b: &RepElement,
) -> Result<RepElement> {
    let mut out = RepElement::zero();
    for ((mu, m), ca) in a.terms() {
        let chi_a = weyl_character(datum, mu, *m)?;
        for ((lam, n), cb) in b.terms() {
            let chi_b = weyl_character(datum, lam, *n)?;
            let prod = chi_a.mul(&chi_b);
            let dec = decompose_character(datum, &prod)?;
            for ((nu, k), c) in dec.terms() {
                out.add_term(nu.clone(), *k, c * ca * cb);
            }
        }
    }
    Ok(out)
}

/// Verify that V_mu(n) restricted along hatG x G_m -> hatG_1 is V_mu tensored
/// with a single G_m-character (uniformity of the pullback weight), and that
/// forgetting twists gives exactly the character of V_mu. Returns failures.
pub fn restriction_check(datum: &BasedRootDatum, mu: &Coweight, n: Int) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let chi = weyl_character(datum, mu, n)?;
    let expected = 2 * n - pair(datum.two_rho(), mu);
    for ((nu, t), _) in chi.terms() {
        let w = 2 * t - pair(datum.two_rho(), nu);
        if w != expected {
            failures.push(format!(
                "weight {nu} of V_{mu}({n}) has G_m-weight {w}, expected uniform {expected}"
            ));
        }
    }
    // Forgetting the twist coordinate must give the character of V_mu.
    let mults = weight_multiplicities(datum, mu)?;
    let mut forgot: BTreeMap<Coweight, Int> = BTreeMap::new();
    for ((nu, _), c) in chi.terms() {
        *forgot.entry(nu.clone()).or_insert(0) += c;
    }
    if forgot != mults {
        failures.push(format!("restriction of V_{mu}({n}) does not have the character of V_{mu}"));
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::preset;

    fn gl2() -> BasedRootDatum {
        preset("GL2").unwrap()
    }

    #[test]
    fn characters_gl2() {
        let d = gl2();
        // chi_{(1,0)} = e^{(1,0)} + e^{(0,1)}, the second weight one twist down.
        let chi = weyl_character(&d, &Coweight(vec![1, 0]), 0).unwrap();
        assert_eq!(chi.coeff(&Coweight(vec![1, 0]), 0), 1);
        assert_eq!(chi.coeff(&Coweight(vec![0, 1]), -1), 1);
        assert_eq!(chi.support_len(), 2);

        // chi_{(2,0)}: interior multiplicity 1 by Freudenthal.
        let chi = weyl_character(&d, &Coweight(vec![2, 0]), 0).unwrap();
        assert_eq!(chi.coeff(&Coweight(vec![2, 0]), 0), 1);
        assert_eq!(chi.coeff(&Coweight(vec![1, 1]), -1), 1);
        assert_eq!(chi.coeff(&Coweight(vec![0, 2]), -2), 1);
        assert_eq!(chi.support_len(), 3);
        assert!(chi.is_invariant(&d));

        // mu = 0: the unit character.
        let chi = weyl_character(&d, &Coweight(vec![0, 0]), 0).unwrap();
        assert_eq!(chi.total(), 1);
    }

    #[test]
    fn freudenthal_interior_multiplicities() {
        // Adjoint representation of SL3-dual (= PGL3-side): V_{(1,1)} in GL3
        // coordinates is (2,1,0); the zero-ish weight (1,1,1) has mult 2.
        let d = preset("GL3").unwrap();
        let m = weight_multiplicities(&d, &Coweight(vec![2, 1, 0])).unwrap();
        assert_eq!(m[&Coweight(vec![1, 1, 1])], 2);
        assert_eq!(m.values().sum::<Int>(), 8);
        assert_eq!(weyl_dimension(&d, &Coweight(vec![2, 1, 0])).unwrap(), 8);
    }

    #[test]
    fn so5_adjoint_zero_weight() {
        // The dual side of Sp4 is SO5; its adjoint representation has
        // highest weight (1,1) and zero-weight multiplicity 2 (the rank).
        let d = preset("Sp4").unwrap();
        let m = weight_multiplicities(&d, &Coweight(vec![1, 1])).unwrap();
        assert_eq!(m[&Coweight(vec![0, 0])], 2);
        assert_eq!(m[&Coweight(vec![1, 0])], 1);
        assert_eq!(m.values().sum::<Int>(), 10);
    }

    #[test]
    fn dimensions() {
        let d = gl2();
        assert_eq!(weyl_dimension(&d, &Coweight(vec![0, 0])).unwrap(), 1);
        assert_eq!(weyl_dimension(&d, &Coweight(vec![2, 0])).unwrap(), 3);
        let d3 = preset("GL3").unwrap();
        assert_eq!(weyl_dimension(&d3, &Coweight(vec![1, 0, 0])).unwrap(), 3);
        // Dual of Sp4 is SO5 (not Spin5): (1,0) is the vector representation
        // and (1,1) the adjoint.
        let sp = preset("Sp4").unwrap();
        assert_eq!(weyl_dimension(&sp, &Coweight(vec![1, 0])).unwrap(), 5);
        assert_eq!(weyl_dimension(&sp, &Coweight(vec![1, 1])).unwrap(), 10);
    }

    #[test]
    fn dimension_equals_character_total_in_box() {
        for name in ["GL2", "GL3", "Sp4"] {
            let d = preset(name).unwrap();
            for mu in crate::flag_strata::dominant_coweights_box(&d, 6) {
                let chi = weyl_character(&d, &mu, 0).unwrap();
                assert_eq!(chi.total(), weyl_dimension(&d, &mu).unwrap(), "{name} {mu}");
            }
        }
    }

    #[test]
    fn decompose_round_trip() {
        let d = gl2();
        for (mu, n) in [(vec![2, 0], 0), (vec![1, 1], -1), (vec![3, 1], 2)] {
            let mu = Coweight(mu);
            let chi = weyl_character(&d, &mu, n).unwrap();
            let dec = decompose_character(&d, &chi).unwrap();
            assert_eq!(dec, RepElement::simple(mu, n));
        }
        assert_eq!(
            decompose_character(&d, &Character::zero()).unwrap(),
            RepElement::zero()
        );
    }

    #[test]
    fn decompose_virtual_difference() {
        let d = gl2();
        // e^{(2,0)} + e^{(0,2)} at the twists forced by invariance:
        // chi_{V(2,0)(0)} minus its interior weight.
        let mut c = Character::zero();
        c.add_term(Coweight(vec![2, 0]), 0, 1);
        c.add_term(Coweight(vec![0, 2]), -2, 1);
        let dec = decompose_character(&d, &c).unwrap();
        let mut expect = RepElement::simple(Coweight(vec![2, 0]), 0);
        expect.add_term(Coweight(vec![1, 1]), -1, -1);
        assert_eq!(dec, expect);
    }

    #[test]
    fn decompose_rejects_non_invariant() {
        let d = gl2();
        let mut c = Character::zero();
        c.add_term(Coweight(vec![1, 0]), 0, 1); // missing the (0,1) orbitmate
        assert!(decompose_character(&d, &c).is_err());
    }

    #[test]
    fn tensor_square_of_standard_gl2() {
        let d = gl2();
        let v = RepElement::simple(Coweight(vec![1, 0]), 0);
        let sq = tensor_decompose(&d, &v, &v).unwrap();
        let mut expect = RepElement::simple(Coweight(vec![2, 0]), 0);
        expect.add_term(Coweight(vec![1, 1]), -1, 1);
        assert_eq!(sq, expect);
    }

    #[test]
    fn tensor_unit_and_twist() {
        let d = gl2();
        let v = RepElement::simple(Coweight(vec![2, 1]), 3);
        let unit = RepElement::unit(2);
        assert_eq!(tensor_decompose(&d, &v, &unit).unwrap(), v);
        // V_mu(m) tensor V_0(k) = V_mu(m+k).
        let tw = RepElement::simple(Coweight::zero(2), -2);
        assert_eq!(tensor_decompose(&d, &v, &tw).unwrap(), v.twist(-2));
    }

    #[test]
    fn tensor_cartan_and_support() {
        let d = preset("Sp4").unwrap();
        let a = RepElement::simple(Coweight(vec![1, 0]), 0);
        let b = RepElement::simple(Coweight(vec![1, 1]), 0);
        let prod = tensor_decompose(&d, &a, &b).unwrap();
        let top = Coweight(vec![2, 1]);
        assert_eq!(prod.coeff(&top, 0), 1, "Cartan component has multiplicity 1");
        for ((nu, k), c) in prod.terms() {
            assert!(c != 0);
            assert!(d.dominance_leq(nu, &top).unwrap(), "support bound violated at {nu}");
            // Twist exponent <rho, mu+lambda-nu> is a nonnegative integer.
            assert!(*k <= 0);
            assert_eq!(-*k, d.rho_height(&top.sub(nu)));
        }
    }

    #[test]
    fn character_map_is_ring_hom() {
        let d = gl2();
        let pairs = [
            (RepElement::simple(Coweight(vec![1, 0]), 0), RepElement::simple(Coweight(vec![1, 0]), 0)),
            (RepElement::simple(Coweight(vec![2, 0]), 1), RepElement::simple(Coweight(vec![1, 1]), -1)),
            (RepElement::simple(Coweight(vec![2, 1]), 0), RepElement::simple(Coweight(vec![1, 0]), 2)),
        ];
        for (a, b) in pairs {
            let prod = tensor_decompose(&d, &a, &b).unwrap();
            let lhs = character_of(&d, &prod).unwrap();
            let rhs = character_of(&d, &a).unwrap().mul(&character_of(&d, &b).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn restriction_examples() {
        // mu = 0: pullback of V_0(n) is the 2n-th power character; always uniform.
        for name in ["PGL2", "SL2", "GL2"] {
            let d = preset(name).unwrap();
            let zero = Coweight::zero(d.rank());
            assert!(restriction_check(&d, &zero, 3).unwrap().is_empty());
            assert!(restriction_check(&d, &zero, 0).unwrap().is_empty());
        }
        let d = gl2();
        assert!(restriction_check(&d, &Coweight(vec![1, 0]), 0).unwrap().is_empty());
        assert!(restriction_check(&d, &Coweight(vec![3, 1]), -2).unwrap().is_empty());
    }

    #[test]
    fn non_dominant_rejected() {
        let d = gl2();
        assert!(weyl_character(&d, &Coweight(vec![0, 1]), 0).is_err());
        assert!(weyl_dimension(&d, &Coweight(vec![0, 1])).is_err());
    }
}
