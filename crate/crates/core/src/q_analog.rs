//! Lusztig q-analogs of weight multiplicities (Kostka–Foulkes polynomials),
//! built from the q-analog of Kostant's partition function on the coroot
//! side. These are the graded stalk data of the intersection motives on Gr
//! and specialize at q = 1 to the Freudenthal multiplicities.

use crate::error::{Error, Result};
use crate::poly::{Laurent, QPolynomial};
use crate::root_datum::{BasedRootDatum, Coweight};
use crate::Int;
use std::collections::HashMap;

/// q-Kostant partition function: the coefficient of `q^k` counts expressions
/// of `beta` as a sum of exactly `k` positive coroots (with multiplicity).
/// Zero if `beta` is not a nonnegative integral combination.
pub fn q_kostant_partition(datum: &BasedRootDatum, beta: &Coweight) -> QPolynomial {
    let pos: Vec<Coweight> = datum
        .positive_root_indices()
        .map(|i| datum.coroots()[i].clone())
        .collect();
    let mut memo: HashMap<(Vec<Int>, usize), Laurent> = HashMap::new();
    kostant_rec(datum, &pos, beta, 0, &mut memo)
}

fn kostant_rec(
    datum: &BasedRootDatum,
    pos: &[Coweight],
    beta: &Coweight,
    i: usize,
    memo: &mut HashMap<(Vec<Int>, usize), Laurent>,
) -> Laurent {
    if beta.is_zero() {
        return Laurent::one();
    }
    // Infeasible unless beta is a nonnegative integral combination of the
    // simple coroots (every positive coroot is one).
    if !datum.in_positive_coroot_cone(beta) {
        return Laurent::zero();
    }
    if i == pos.len() {
        return Laurent::zero();
    }
    let key = (beta.0.clone(), i);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let mut acc = Laurent::zero();
    let mut c: Int = 0;
    let mut rest = beta.clone();
    loop {
        let sub = kostant_rec(datum, pos, &rest, i + 1, memo);
        acc = acc.add(&sub.shift(c));
        rest = rest.sub(&pos[i]);
        c += 1;
        if !datum.in_positive_coroot_cone(&rest) {
            break;
        }
    }
    memo.insert(key, acc.clone());
    acc
}

/// Lusztig q-analog `m^mu_lambda(q)`: the alternating Weyl sum of q-Kostant
/// values at `w(mu + rho-hat) - (lambda + rho-hat)`, with the half-integral
/// rho-hat handled by doubling so all arithmetic stays integral.
pub fn lusztig_q_analog(
    datum: &BasedRootDatum,
    mu: &Coweight,
    lambda: &Coweight,
) -> Result<QPolynomial> {
    datum.require_valid()?;
    if !datum.is_dominant_coweight(mu) {
        return Err(Error::NotDominant(format!("{mu}")));
    }
    if !datum.is_dominant_coweight(lambda) {
        return Err(Error::NotDominant(format!("{lambda}")));
    }
    let two_rho_hat = datum.two_rho_dual();
    let doubled_mu = mu.scale(2).add(two_rho_hat);
    let doubled_lam = lambda.scale(2).add(two_rho_hat);
    let mut acc = Laurent::zero();
    for w in datum.weyl_elements() {
        let arg2 = datum.act_coweight(&w, &doubled_mu).sub(&doubled_lam);
        debug_assert!(arg2.0.iter().all(|c| c % 2 == 0));
        let arg = Coweight(arg2.0.iter().map(|c| c / 2).collect());
        let term = q_kostant_partition(datum, &arg);
        if w.length() % 2 == 0 {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flag_strata::dominant_coweights_box;
    use crate::ratio::Rat;
    use crate::rep_ring::weight_multiplicities;
    use crate::root_datum::{pair, preset};

    #[test]
    fn kostant_examples() {
        let d = preset("GL2").unwrap();
        assert_eq!(q_kostant_partition(&d, &Coweight(vec![0, 0])), Laurent::one());
        assert_eq!(
            q_kostant_partition(&d, &Coweight(vec![1, -1])),
            Laurent::monomial(1, 1)
        );
        assert_eq!(
            q_kostant_partition(&d, &Coweight(vec![2, -2])),
            Laurent::monomial(2, 1)
        );
        assert!(q_kostant_partition(&d, &Coweight(vec![1, 0])).is_zero());
        assert!(q_kostant_partition(&d, &Coweight(vec![-1, 1])).is_zero());
    }

    #[test]
    fn kostant_counts_multiset_decompositions() {
        // GL3: (1,0,-1) = (e1-e3) = one coroot, or (e1-e2)+(e2-e3).
        let d = preset("GL3").unwrap();
        let p = q_kostant_partition(&d, &Coweight(vec![1, 0, -1]));
        assert_eq!(p, Laurent::from_terms(&[(1, 1), (2, 1)]));
    }

    #[test]
    fn lusztig_examples() {
        let d2 = preset("GL2").unwrap();
        let top = lusztig_q_analog(&d2, &Coweight(vec![2, 0]), &Coweight(vec![2, 0])).unwrap();
        assert_eq!(top, Laurent::one());
        let m = lusztig_q_analog(&d2, &Coweight(vec![2, 0]), &Coweight(vec![1, 1])).unwrap();
        assert_eq!(m, Laurent::monomial(1, 1));

        let d3 = preset("GL3").unwrap();
        let m = lusztig_q_analog(&d3, &Coweight(vec![2, 0, 0]), &Coweight(vec![1, 1, 0])).unwrap();
        assert_eq!(m, Laurent::monomial(1, 1));
    }

    #[test]
    fn zero_weight_of_adjoint_gives_exponents() {
        // The q-analog of the zero weight in the adjoint representation is
        // the sum of q^{e} over the exponents of the Weyl group.
        // Dual of GL3 has type A2 (exponents 1, 2); the zero weight of the
        // adjoint appears as (1,1,1) inside the highest weight (2,1,0).
        let d3 = preset("GL3").unwrap();
        let m = lusztig_q_analog(&d3, &Coweight(vec![2, 1, 0]), &Coweight(vec![1, 1, 1])).unwrap();
        assert_eq!(m, Laurent::from_terms(&[(1, 1), (2, 1)]));
        // Dual of Sp4 is SO5 of type B2 (exponents 1, 3).
        let sp = preset("Sp4").unwrap();
        let m = lusztig_q_analog(&sp, &Coweight(vec![1, 1]), &Coweight(vec![0, 0])).unwrap();
        assert_eq!(m, Laurent::from_terms(&[(1, 1), (3, 1)]));
    }

    #[test]
    fn specialization_support_degree_in_boxes() {
        for name in ["GL2", "GL3", "Sp4"] {
            let d = preset(name).unwrap();
            for mu in dominant_coweights_box(&d, 6) {
                let mults = weight_multiplicities(&d, &mu).unwrap();
                // Comparable pairs come from saturation: lambda <= mu.
                for lam in crate::rep_ring::dominant_weights_leq(&d, &mu).unwrap() {
                    let m = lusztig_q_analog(&d, &mu, &lam).unwrap();
                    // q = 1 specialization is the weight multiplicity.
                    let at_one = m.eval_rat(Rat::ONE).as_integer().unwrap() as Int;
                    assert_eq!(at_one, *mults.get(&lam).unwrap_or(&0), "{name} {mu} {lam}");
                    // Observed Lusztig positivity.
                    for (_, c) in m.terms() {
                        assert!(c >= 0, "{name}: negative coefficient in m^{mu}_{lam}");
                    }
                    // Degree <rho, mu - lambda> with leading coefficient 1.
                    let deg = pair(d.two_rho(), &mu.sub(&lam)) / 2;
                    assert_eq!(m.max_exp(), Some(deg));
                    assert_eq!(m.coeff(deg), 1);
                    assert!(m.min_exp().unwrap() >= 0);
                }
                // Incomparable dominant weights have zero q-analog.
                for lam in dominant_coweights_box(&d, 6) {
                    if !d.dominance_leq(&lam, &mu).unwrap() {
                        let m = lusztig_q_analog(&d, &mu, &lam).unwrap();
                        assert!(m.is_zero(), "{name}: support violation {lam} !<= {mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn non_dominant_rejected() {
        let d = preset("GL2").unwrap();
        let bad = Coweight(vec![0, 1]);
        let ok = Coweight(vec![1, 0]);
        assert!(lusztig_q_analog(&d, &bad, &ok).is_err());
        assert!(lusztig_q_analog(&d, &ok, &bad).is_err());
    }
}
