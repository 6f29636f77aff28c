//! The Langlands dual group and Deligne's extended dual group hatG_1, the
//! semidirect product of hatG with G_m twisted by conjugation along rho.
//!
//! Characters of the extended torus live on Y ⊕ Z. The Z-coordinate counts
//! Tate-twist units: the simple object V_mu(n) has extended highest weight
//! (mu, n) and [V_0(-1)] = [d^{-1}] holds on the nose, where d is the
//! character (0, ..., 0, 1). Each root of hatG_1 carries the G_m-component
//! `<rho, alpha^vee>`; this sign is the one pinned by the Hecke-oracle and
//! trace tests downstream. The "naive" G_m-weight along the isogeny
//! hatG x G_m -> hatG_1 is `2n - <2rho, nu>` and is derived, never stored.

use crate::error::Result;
use crate::root_datum::{pair, BasedRootDatum, Coweight, Weight, WeylElement};
use crate::Int;

/// The extended dual group as explicit lattice data.
#[derive(Clone, Debug)]
pub struct ExtendedDualDatum {
    /// Root datum of hatG (the plain dual).
    pub base: BasedRootDatum,
    /// Root datum of hatG_1 on the lattice Y ⊕ Z: roots `(alpha^vee, <rho,
    /// alpha^vee>)`, coroots `(alpha, 0)`.
    pub ext: BasedRootDatum,
    /// The character d: projection to G_m in the semidirect coordinates.
    pub d_character: Weight,
    /// Whether the extension splits as hatG x G_m on the lattice level,
    /// i.e. rho is integral (always true for simply connected input).
    pub splits: bool,
    /// The sheared product presentation when `splits` (G_m-components all 0).
    pub product_form: Option<BasedRootDatum>,
    input_name: String,
    input_two_rho: Weight,
}

fn extend_vec(v: &[Int], last: Int) -> Vec<Int> {
    let mut out = v.to_vec();
    out.push(last);
    out
}

/// Append a trivial G_m factor to a datum (used for the split presentation).
pub fn extend_by_torus(d: &BasedRootDatum) -> Result<BasedRootDatum> {
    BasedRootDatum::new(
        format!("{}xGm", d.name()),
        d.rank() + 1,
        d.roots().iter().map(|r| Weight(extend_vec(&r.0, 0))).collect(),
        d.coroots().iter().map(|c| Coweight(extend_vec(&c.0, 0))).collect(),
        d.simple_indices().to_vec(),
    )
}

/// Build hatG_1 from a (valid) input datum.
pub fn build_extended_dual(input: &BasedRootDatum) -> Result<ExtendedDualDatum> {
    input.require_valid()?;
    let base = input.dual()?;
    let rank = input.rank();

    let mut ext_roots = Vec::with_capacity(base.roots().len());
    let mut ext_coroots = Vec::with_capacity(base.roots().len());
    for i in 0..base.roots().len() {
        // Roots of hatG are coroots of the input; their rho-height is the
        // G_m-component of the corresponding hatG_1 root.
        let beta = Coweight(base.roots()[i].0.clone());
        let c = input.rho_height(&beta);
        ext_roots.push(Weight(extend_vec(&base.roots()[i].0, c)));
        ext_coroots.push(Coweight(extend_vec(&base.coroots()[i].0, 0)));
    }
    let ext = BasedRootDatum::new(
        format!("G1({})", input.name()),
        rank + 1,
        ext_roots,
        ext_coroots,
        base.simple_indices().to_vec(),
    )?;
    ext.require_valid()?;

    let mut d_vec = vec![0; rank + 1];
    d_vec[rank] = 1;

    // epsilon = (2rho)(-1) is trivial iff <2rho, .> is even on Y, i.e. all
    // coordinates of 2rho are even; exactly then the rho-shear is integral
    // and the extension splits on the lattice level.
    let splits = input.two_rho().0.iter().all(|c| c % 2 == 0);
    let product_form = if splits { Some(extend_by_torus(&base)?) } else { None };

    Ok(ExtendedDualDatum {
        base,
        ext,
        d_character: Weight(d_vec),
        splits,
        product_form,
        input_name: input.name().to_string(),
        input_two_rho: input.two_rho().clone(),
    })
}

impl ExtendedDualDatum {
    /// G_m-weight of the extended character `(nu, m)` pulled back along the
    /// isogeny hatG x G_m -> hatG_1 (the `2n plus rho-corrections` weight).
    pub fn pullback_gm_weight(&self, nu: &Coweight, m: Int) -> Int {
        2 * m - pair(&self.input_two_rho, nu)
    }

    /// Split an extended character vector into (Y-part, twist).
    pub fn split_char(&self, chi: &Weight) -> (Coweight, Int) {
        let r = chi.0.len() - 1;
        (Coweight(chi.0[..r].to_vec()), chi.0[r])
    }

    /// Lattice-level verification of the isogeny and of d; returns failure
    /// messages (empty = all good).
    pub fn check_isogeny_and_d(&self) -> Vec<String> {
        let mut failures = Vec::new();
        let rank = self.base.rank();

        for msg in self.ext.validate() {
            failures.push(format!("extended datum invalid: {msg}"));
        }

        // The kernel generator (epsilon, -1) must be killed by the pullback
        // of every character: epsilon acts by (-1)^{<2rho, nu>} and the
        // G_m-coordinate by (-1)^N.
        let mut test_chars: Vec<Weight> = self.ext.roots().to_vec();
        test_chars.push(self.d_character.clone());
        for i in 0..=rank {
            let mut v = vec![0; rank + 1];
            v[i] = 1;
            test_chars.push(Weight(v));
        }
        for chi in &test_chars {
            let (nu, m) = self.split_char(chi);
            let n_weight = self.pullback_gm_weight(&nu, m);
            if (pair(&self.input_two_rho, &nu) + n_weight) % 2 != 0 {
                failures.push(format!("kernel (epsilon,-1) not killed by pullback of {chi}"));
            }
        }

        // d pulls back to twice a generator of the G_m-characters.
        let (d_nu, d_m) = self.split_char(&self.d_character);
        if !d_nu.is_zero() || self.pullback_gm_weight(&d_nu, d_m) != 2 {
            failures.push(format!(
                "d does not pull back to the square character: got ({d_nu}, {})",
                self.pullback_gm_weight(&d_nu, d_m)
            ));
        }

        // G_m-components of the roots: <rho, alpha^vee>, so +-1 on simples.
        for i in 0..self.ext.roots().len() {
            let (nu, c) = self.split_char(&self.ext.roots()[i]);
            if c != pair(&self.input_two_rho, &nu) / 2 {
                failures.push(format!("root {} carries a wrong G_m-component", self.ext.roots()[i]));
            }
        }
        for pos in 0..self.ext.num_simple() {
            let (_, c) = self.split_char(self.ext.simple_root(pos));
            if c.abs() != 1 {
                failures.push(format!("simple root s{} has |G_m-component| != 1", pos + 1));
            }
        }

        // Split case: the rho-shear must carry the extended datum onto the
        // direct product.
        if self.splits != self.input_two_rho.0.iter().all(|c| c % 2 == 0) {
            failures.push("splitting flag inconsistent with epsilon".into());
        }
        if let Some(prod) = &self.product_form {
            let sheared: Vec<Weight> = self
                .ext
                .roots()
                .iter()
                .map(|r| {
                    let (nu, c) = self.split_char(r);
                    let shift = pair(&self.input_two_rho, &nu) / 2;
                    Weight(extend_vec(&nu.0, c - shift))
                })
                .collect();
            if sheared != prod.roots() {
                failures.push("rho-shear does not produce the product datum".into());
            }
        }

        // For PGL2 the extended dual is GL2 with d the determinant.
        if self.input_name == "PGL2" {
            let gl2 = crate::root_datum::preset("GL2").expect("preset");
            let det = Weight(vec![1, 1]);
            if self
                .ext
                .find_isomorphism(&gl2, &[(self.d_character.clone(), det)])
                .is_none()
            {
                failures.push("no isomorphism G1(PGL2) = GL2 matching d with det".into());
            }
        }
        failures
    }
}

/// Action of W0 on extended characters (nu, m): the finite Weyl group sits in
/// hatG_1 through hatG, and conjugation twists the G_m-coordinate by the
/// rho-height of `nu - w(nu)`. The pullback weight `2m - <2rho, nu>` is the
/// invariant of this action (the Z-summand fixed by W0 in product units).
pub fn ext_weyl_act(
    input: &BasedRootDatum,
    w: &WeylElement,
    nu: &Coweight,
    m: Int,
) -> (Coweight, Int) {
    let wnu = input.act_coweight(w, nu);
    let shift = input.rho_height(&nu.sub(&wnu));
    (wnu, m - shift)
}
