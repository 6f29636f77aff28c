//! Combinatorial model of the stratified partial affine flag variety Fl_f
//! with orbit strata under a second parahoric: stratum poset, dimensions,
//! closures, projection fibers, convolution support and the parity table.
//!
//! Strata are pure labels (double cosets); dimensions come from the maximal
//! Iwahori-cell length refining a stratum, which in the Gr case reproduces
//! the closed formula `dim = <2rho, mu>`.

use crate::affine_weyl::{AffineWeyl, DoubleCoset, FacetType, IwElement};
use crate::error::{Error, Result};
use crate::root_datum::{pair, BasedRootDatum, Coweight};
use crate::Int;

/// A partial affine flag variety Fl_f stratified by P_{f'}-orbits.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FlagVariety {
    pub facet: FacetType,      // f: the parahoric we quotient by
    pub stratifier: FacetType, // f': whose orbits stratify
}

/// One orbit stratum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Stratum {
    pub coset: DoubleCoset,
    pub dimension: Int,
    /// Dominant-translation label in the Gr case, otherwise the minimal rep.
    pub label: String,
}

/// Strata of bounded length with their closure (Bruhat) order.
pub struct StrataPoset {
    pub strata: Vec<Stratum>,
    /// `leq[i][j]` iff stratum i lies in the closure of stratum j.
    pub leq: Vec<Vec<bool>>,
}

impl StrataPoset {
    /// Covering relations of the closure order (Hasse edges `i -> j`,
    /// i covered by j).
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.strata.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.leq[i][j] {
                    continue;
                }
                let intermediate =
                    (0..n).any(|k| k != i && k != j && self.leq[i][k] && self.leq[k][j]);
                if !intermediate {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Indices of the strata contained in the closure of stratum `j`.
    pub fn closure(&self, j: usize) -> Vec<usize> {
        (0..self.strata.len()).filter(|&i| self.leq[i][j]).collect()
    }
}

fn stratum_label(aw: &AffineWeyl, coset: &DoubleCoset) -> String {
    let k = aw.hyperspecial_facet();
    if coset.left == k && coset.right == k {
        if let Some(mu) = aw.dominant_translation_label(coset) {
            return format!("{mu}");
        }
    }
    format!("{}", coset.rep)
}

/// Dimension of a stratum: the maximum Iwahori–Matsumoto length over the
/// minimal representatives of `u . rep . W_f` for `u` in `W_{f'}`.
pub fn stratum_dimension(aw: &AffineWeyl, coset: &DoubleCoset) -> Int {
    let mut dim = 0;
    for u in aw.facet_subgroup(&coset.left) {
        let x = aw.multiply(&u, &coset.rep);
        let v = aw.coset_min_right(&coset.right, &x);
        dim = dim.max(aw.length(&v));
    }
    dim
}

pub fn make_stratum(aw: &AffineWeyl, coset: DoubleCoset) -> Stratum {
    let dimension = stratum_dimension(aw, &coset);
    let label = stratum_label(aw, &coset);
    Stratum { coset, dimension, label }
}

/// The stratum of Gr (both facets hyperspecial) labelled by a dominant mu.
pub fn gr_stratum(aw: &AffineWeyl, mu: &Coweight) -> Result<Stratum> {
    if !aw.datum.is_dominant_coweight(mu) {
        return Err(Error::NotDominant(format!("{mu}")));
    }
    let k = aw.hyperspecial_facet();
    let rep = aw.double_coset_min(&k, &k, &aw.translation(mu));
    Ok(make_stratum(aw, DoubleCoset { rep, left: k.clone(), right: k }))
}

/// All strata with representative length <= bound (translations enumerated in
/// the coordinate window `|.| <= box_bound`), with the closure order.
pub fn enumerate_strata_boxed(
    aw: &AffineWeyl,
    fl: &FlagVariety,
    bound: Int,
    box_bound: Int,
) -> StrataPoset {
    let cosets = aw.double_coset_reps_boxed(&fl.stratifier, &fl.facet, bound, box_bound);
    let strata: Vec<Stratum> = cosets.into_iter().map(|c| make_stratum(aw, c)).collect();
    let n = strata.len();
    let leq: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| aw.double_coset_leq(&strata[i].coset, &strata[j].coset))
                .collect()
        })
        .collect();
    StrataPoset { strata, leq }
}

pub fn enumerate_strata(aw: &AffineWeyl, fl: &FlagVariety, bound: Int) -> StrataPoset {
    enumerate_strata_boxed(aw, fl, bound, bound + 1)
}

/// Decomposition of the Iwahori fiber over a stratum of Fl_{f_s}: over the
/// cell of a minimal v the projection restricts to an isomorphism on Fl_v,
/// and Fl_{vs} is a (perfect) line bundle over it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiberDecomposition {
    pub iso_part: IwElement,
    pub bundle_part: IwElement,
    pub iso_dim: Int,
    pub bundle_dim: Int,
}

/// For `s` an affine simple reflection (index into S_aff) and `v` minimal in
/// `v W_{f_s}`, the Iwahori strata over the Fl_{f_s}-stratum of `v` are
/// exactly `{v, vs}`.
pub fn projection_fibers(aw: &AffineWeyl, v: &IwElement, s: usize) -> Result<FiberDecomposition> {
    if s >= aw.num_simple_affine() {
        return Err(Error::InvalidInput(format!("no affine simple reflection {s}")));
    }
    let vs = aw.multiply(v, aw.simple_affine_element(s));
    let lv = aw.length(v);
    if aw.length(&vs) != lv + 1 {
        return Err(Error::NonReduced(format!(
            "{v}*s{s} does not lengthen; v must be minimal in v W_(f_s)"
        )));
    }
    Ok(FiberDecomposition { iso_part: v.clone(), bundle_part: vs, iso_dim: lv, bundle_dim: lv + 1 })
}

/// Support of convolution: the stratum of the Demazure product. Representing
/// elements are the dominant translation labels in the Gr case and the
/// minimal representatives in the Iwahori case.
pub fn convolution_support(aw: &AffineWeyl, w: &DoubleCoset, w2: &DoubleCoset) -> Result<Stratum> {
    if w.left != w2.left || w.right != w2.right {
        return Err(Error::InvalidInput("cosets over different facet pairs".into()));
    }
    let iw = aw.iwahori_facet();
    let k = aw.hyperspecial_facet();
    let gr_case = w.left == k && w.right == k;
    let iw_case = w.left == iw && w.right == iw;
    if !gr_case && !iw_case {
        return Err(Error::InvalidInput(
            "convolution support is defined for the Iwahori and Gr cases".into(),
        ));
    }
    let (a, b) = if gr_case {
        let la = aw
            .dominant_translation_label(w)
            .ok_or_else(|| Error::InvalidInput("Gr coset without dominant label".into()))?;
        let lb = aw
            .dominant_translation_label(w2)
            .ok_or_else(|| Error::InvalidInput("Gr coset without dominant label".into()))?;
        (aw.translation(&la), aw.translation(&lb))
    } else {
        (w.rep.clone(), w2.rep.clone())
    };
    let dem = aw.demazure_product(&a, &b);
    let rep = aw.double_coset_min(&w.left, &w.right, &dem);
    Ok(make_stratum(aw, DoubleCoset { rep, left: w.left.clone(), right: w.right.clone() }))
}

/// Dominant coweights with `<2rho, mu> <= bound` and coordinates in
/// `[0, bound]`. When the all-ones vector is central (GL_n), only the
/// representatives with minimal coordinate 0 are kept: central translations
/// leave dimensions, parities and multiplicities unchanged, and without the
/// normalization the set would repeat each datum infinitely often. For the
/// shipped presets this exhausts the dominant cone modulo center.
pub fn dominant_coweights_box(datum: &BasedRootDatum, bound: Int) -> Vec<Coweight> {
    let rank = datum.rank();
    let ones = Coweight(vec![1; rank]);
    let ones_central = datum.roots().iter().all(|r| pair(r, &ones) == 0);
    let mut out = Vec::new();
    let mut cur = vec![0; rank];
    loop {
        let mu = Coweight(cur.clone());
        if datum.is_dominant_coweight(&mu)
            && pair(datum.two_rho(), &mu) <= bound
            && (!ones_central || rank == 0 || cur.iter().min() == Some(&0))
        {
            out.push(mu);
        }
        // Odometer over [0, bound]^rank.
        let mut i = 0;
        loop {
            if i == rank {
                out.sort();
                return out;
            }
            if cur[i] < bound {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// Rows `(mu, lambda, parities_agree)` for every comparable pair with mu in
/// the box and lambda <= mu (the dominant weights of V_mu, by saturation);
/// the parity property of the Gr stratification says the flag is true
/// everywhere.
pub fn parity_table(aw: &AffineWeyl, bound: Int) -> Result<Vec<(Coweight, Coweight, bool)>> {
    let doms = dominant_coweights_box(aw.datum, bound);
    let mut rows = Vec::new();
    for mu in &doms {
        let dim_mu = gr_stratum(aw, mu)?.dimension;
        for lam in crate::rep_ring::dominant_weights_leq(aw.datum, mu)? {
            let dim_lam = gr_stratum(aw, &lam)?.dimension;
            rows.push((mu.clone(), lam, (dim_mu - dim_lam) % 2 == 0));
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::preset;

    #[test]
    fn gr_gl2_strata_bound2() {
        let d = preset("GL2").unwrap();
        let aw = AffineWeyl::new(&d).unwrap();
        let fl =
            FlagVariety { facet: aw.hyperspecial_facet(), stratifier: aw.hyperspecial_facet() };
        let poset = enumerate_strata(&aw, &fl, 2);
        let find = |label: &str| poset.strata.iter().position(|s| s.label == label);
        let s11 = find("(1,1)").expect("stratum (1,1)");
        let s10 = find("(1,0)").expect("stratum (1,0)");
        let s20 = find("(2,0)").expect("stratum (2,0)");
        assert_eq!(poset.strata[s11].dimension, 0);
        assert_eq!(poset.strata[s10].dimension, 1);
        assert_eq!(poset.strata[s20].dimension, 2);
        // Closure of the (2,0)-stratum contains the (1,1)-stratum.
        assert!(poset.leq[s11][s20]);
        assert!(!poset.leq[s10][s20]); // different central character
        assert!(poset.closure(s20).contains(&s11));
    }

    #[test]
    fn bound_zero_gives_point_strata() {
        let d = preset("GL2").unwrap();
        let aw = AffineWeyl::new(&d).unwrap();
        let fl = FlagVariety { facet: aw.iwahori_facet(), stratifier: aw.iwahori_facet() };
        let poset = enumerate_strata(&aw, &fl, 0);
        assert!(!poset.strata.is_empty());
        for s in &poset.strata {
            assert_eq!(s.dimension, 0);
            assert_eq!(aw.length(&s.coset.rep), 0);
        }
    }

    #[test]
    fn gr_dimension_identity_small() {
        for name in ["SL2", "GL2", "Sp4"] {
            let d = preset(name).unwrap();
            let aw = AffineWeyl::new(&d).unwrap();
            for mu in dominant_coweights_box(&d, 6) {
                let s = gr_stratum(&aw, &mu).unwrap();
                assert_eq!(s.dimension, pair(d.two_rho(), &mu), "{name} mu={mu}");
            }
        }
    }

    #[test]
    fn gr_stratum_rejects_non_dominant() {
        let d = preset("GL2").unwrap();
        let aw = AffineWeyl::new(&d).unwrap();
        assert!(gr_stratum(&aw, &Coweight(vec![0, 1])).is_err());
    }

    #[test]
    fn central_stratum_is_zero_dimensional() {
        let d = preset("GL2").unwrap();
        let aw = AffineWeyl::new(&d).unwrap();
        let s = gr_stratum(&aw, &Coweight(vec![1, 1])).unwrap();
        assert_eq!(s.dimension, 0);
    }

    #[test]
    fn fibers_examples() {
        let d = preset("SL2").unwrap();
        let aw = AffineWeyl::new(&d).unwrap();
        let s0 = 0usize;
        let s1elt = aw.simple_affine_element(1).clone();
        // v = s1, s = s0: fibers {s1, s1 s0}.
        let dec = projection_fibers(&aw, &s1elt, s0).unwrap();
        assert_eq!(dec.iso_part, s1elt);
        assert_eq!(dec.bundle_part, aw.multiply(&s1elt, aw.simple_affine_element(s0)));
        assert_eq!(dec.bundle_dim, dec.iso_dim + 1);
        // v = e.
        let dec = projection_fibers(&aw, &aw.identity(), 1).unwrap();
        assert_eq!(dec.iso_dim, 0);
        assert_eq!(dec.bundle_part, aw.simple_affine_element(1).clone());
        // Non-reduced: v = s0, s = s0.
        let s0elt = aw.simple_affine_element(0).clone();
        assert!(projection_fibers(&aw, &s0elt, 0).is_err());
    }

    #[test]
    fn convolution_support_examples() {
        let d = preset("GL2").unwrap();
        let aw = AffineWeyl::new(&d).unwrap();
        let a = gr_stratum(&aw, &Coweight(vec![1, 0])).unwrap();
        let e = gr_stratum(&aw, &Coweight(vec![0, 0])).unwrap();
        // w' = identity leaves the stratum alone.
        let s = convolution_support(&aw, &a.coset, &e.coset).unwrap();
        assert_eq!(s.coset.rep, a.coset.rep);
        // supp((1,0), (1,0)) is the (2,0) stratum, whose closure holds (1,1).
        let s = convolution_support(&aw, &a.coset, &a.coset).unwrap();
        assert_eq!(s.label, "(2,0)");
        let c11 = gr_stratum(&aw, &Coweight(vec![1, 1])).unwrap();
        assert!(aw.double_coset_leq(&c11.coset, &s.coset));
        // Dominant translations are length-additive, so dims add.
        assert_eq!(s.dimension, 2 * a.dimension);
    }

    #[test]
    fn convolution_support_monotone() {
        let d = preset("SL2").unwrap();
        let aw = AffineWeyl::new(&d).unwrap();
        let fl = FlagVariety { facet: aw.iwahori_facet(), stratifier: aw.iwahori_facet() };
        let poset = enumerate_strata(&aw, &fl, 3);
        for a in &poset.strata {
            for b in &poset.strata {
                if !aw.double_coset_leq(&a.coset, &b.coset) {
                    continue;
                }
                for c in &poset.strata {
                    // Monotone in the left argument ...
                    let sa = convolution_support(&aw, &a.coset, &c.coset).unwrap();
                    let sb = convolution_support(&aw, &b.coset, &c.coset).unwrap();
                    assert!(aw.double_coset_leq(&sa.coset, &sb.coset));
                    // ... and in the right argument.
                    let sa = convolution_support(&aw, &c.coset, &a.coset).unwrap();
                    let sb = convolution_support(&aw, &c.coset, &b.coset).unwrap();
                    assert!(aw.double_coset_leq(&sa.coset, &sb.coset));
                }
            }
        }
    }

    #[test]
    fn sp4_parity_exhaustive_small_box() {
        // Every comparable pair of dominant coweights with entries <= 3.
        let d = preset("Sp4").unwrap();
        let aw = AffineWeyl::new(&d).unwrap();
        let mut doms = Vec::new();
        for a in 0..=3_i64 {
            for b in 0..=a {
                doms.push(Coweight(vec![a, b]));
            }
        }
        let mut pairs = 0;
        for mu in &doms {
            let dim_mu = gr_stratum(&aw, mu).unwrap().dimension;
            for lam in &doms {
                if d.dominance_leq(lam, mu).unwrap() {
                    let dim_lam = gr_stratum(&aw, lam).unwrap().dimension;
                    assert_eq!((dim_mu - dim_lam).rem_euclid(2), 0, "{lam} <= {mu}");
                    pairs += 1;
                }
            }
        }
        assert!(pairs > doms.len()); // nontrivial comparables exist
    }

    #[test]
    fn parity_small_boxes() {
        for name in ["GL2", "Sp4"] {
            let d = preset(name).unwrap();
            let aw = AffineWeyl::new(&d).unwrap();
            let rows = parity_table(&aw, 4).unwrap();
            assert!(!rows.is_empty());
            for (mu, lam, flag) in rows {
                assert!(flag, "{name}: parity fails for {lam} <= {mu}");
            }
        }
    }

    #[test]
    fn iwahori_closure_is_graded() {
        let d = preset("SL2").unwrap();
        let aw = AffineWeyl::new(&d).unwrap();
        let fl = FlagVariety { facet: aw.iwahori_facet(), stratifier: aw.iwahori_facet() };
        let poset = enumerate_strata(&aw, &fl, 4);
        for i in 0..poset.strata.len() {
            for j in 0..poset.strata.len() {
                if i != j && poset.leq[i][j] {
                    assert!(poset.strata[i].dimension < poset.strata[j].dimension);
                }
            }
        }
    }
}
