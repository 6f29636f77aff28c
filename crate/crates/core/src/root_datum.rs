//! Based root data of split reductive groups in explicit coordinates.
//!
//! Both the character lattice X and the cocharacter lattice Y are realized as
//! `Z^rank` with the standard dot product as the perfect pairing, so duality
//! is literally "swap the lists". Presets ship explicit root/coroot vectors;
//! for SL_n the basis of X is the fundamental weights (so Y is spanned by the
//! simple coroots), for PGL_n it is the simple roots (Y: fundamental
//! coweights), and GL_n, Sp_2g, SO_{2g+1} use the standard torus coordinates.

use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::ratio::Rat;
use crate::Int;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

/// Element of the character lattice X.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Int>);

/// Element of the cocharacter lattice Y.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coweight(pub Vec<Int>);

macro_rules! vector_impls {
    ($t:ident) => {
        impl $t {
            pub fn zero(rank: usize) -> $t {
                $t(vec![0; rank])
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn add(&self, o: &$t) -> $t {
                $t(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
            }

            pub fn sub(&self, o: &$t) -> $t {
                $t(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
            }

            pub fn neg(&self) -> $t {
                $t(self.0.iter().map(|a| -a).collect())
            }

            pub fn scale(&self, k: Int) -> $t {
                $t(self.0.iter().map(|a| a * k).collect())
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&a| a == 0)
            }
        }

        impl fmt::Debug for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, x) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Debug::fmt(self, f)
            }
        }
    };
}

vector_impls!(Weight);
vector_impls!(Coweight);

/// The perfect pairing X x Y -> Z (dot product in the chosen coordinates).
pub fn pair(x: &Weight, y: &Coweight) -> Int {
    assert_eq!(x.0.len(), y.0.len(), "pairing rank mismatch");
    x.0.iter().zip(&y.0).map(|(a, b)| a * b).sum()
}

/// Small integer matrix helpers (row major), used for Weyl actions.
pub type IMat = Vec<Vec<Int>>;

pub fn imat_identity(n: usize) -> IMat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1 } else { 0 }).collect())
        .collect()
}

pub fn imat_vec(m: &IMat, v: &[Int]) -> Vec<Int> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn imat_mul(a: &IMat, b: &IMat) -> IMat {
    let n = a.len();
    let p = if b.is_empty() { 0 } else { b[0].len() };
    (0..n)
        .map(|i| {
            (0..p)
                .map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Element of the finite Weyl group W0, stored as its lexicographically least
/// reduced word in the simple reflections (positions into `datum.simple`).
/// Canonical form makes equality and hashing structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    word: Vec<u8>,
}

impl WeylElement {
    pub fn identity() -> WeylElement {
        WeylElement { word: Vec::new() }
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        for (i, s) in self.word.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "s{}", s + 1)?;
        }
        Ok(())
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A based root datum (X, roots, Y, coroots, pairing, simple roots).
#[derive(Clone)]
pub struct BasedRootDatum {
    name: String,
    rank: usize,
    roots: Vec<Weight>,
    coroots: Vec<Coweight>,
    simple: Vec<usize>,
    // Derived data, populated by `analyze` (meaningful when the datum is valid).
    report: Vec<String>,
    positive: Vec<bool>,
    two_rho: Weight,
    two_rho_dual: Coweight,
    root_lookup: HashMap<Vec<Int>, usize>,
    components: Vec<Vec<usize>>, // partition of simple positions
    highest: Vec<usize>,         // root index of the highest root, per component
}

impl PartialEq for BasedRootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank
            && self.roots == other.roots
            && self.coroots == other.coroots
            && self.simple == other.simple
    }
}

impl Eq for BasedRootDatum {}

impl fmt::Debug for BasedRootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BasedRootDatum({}, rank {}, {} roots)", self.name, self.rank, self.roots.len())
    }
}

impl BasedRootDatum {
    /// Build a datum from raw lists. Only structural impossibilities are hard
    /// errors here; axiom violations show up in `validate()`.
    pub fn new(
        name: impl Into<String>,
        rank: usize,
        roots: Vec<Weight>,
        coroots: Vec<Coweight>,
        simple: Vec<usize>,
    ) -> Result<BasedRootDatum> {
        if roots.len() != coroots.len() {
            return Err(Error::InvalidInput(format!(
                "{} roots but {} coroots",
                roots.len(),
                coroots.len()
            )));
        }
        for v in roots.iter().map(|r| &r.0).chain(coroots.iter().map(|c| &c.0)) {
            if v.len() != rank {
                return Err(Error::RankMismatch { expected: rank, got: v.len() });
            }
        }
        let mut seen = BTreeSet::new();
        for &i in &simple {
            if i >= roots.len() {
                return Err(Error::InvalidInput(format!("simple index {i} out of range")));
            }
            if !seen.insert(i) {
                return Err(Error::InvalidInput(format!("duplicate simple index {i}")));
            }
        }
        let mut d = BasedRootDatum {
            name: name.into(),
            rank,
            roots,
            coroots,
            simple,
            report: Vec::new(),
            positive: Vec::new(),
            two_rho: Weight::zero(rank),
            two_rho_dual: Coweight::zero(rank),
            root_lookup: HashMap::new(),
            components: Vec::new(),
            highest: Vec::new(),
        };
        d.analyze();
        Ok(d)
    }

    /// Checks every axiom and records each violation; derived caches are only
    /// trusted when the report stays empty.
    fn analyze(&mut self) {
        let mut report = Vec::new();
        let n = self.roots.len();

        for (i, r) in self.roots.iter().enumerate() {
            if let Some(&j) = self.root_lookup.get(&r.0) {
                report.push(format!("duplicate root {r} at indices {j} and {i}"));
            } else {
                self.root_lookup.insert(r.0.clone(), i);
            }
        }

        // <alpha, alpha^vee> = 2 for every pair.
        for i in 0..n {
            let p = pair(&self.roots[i], &self.coroots[i]);
            if p != 2 {
                report.push(format!(
                    "pairing axiom violated: <{}, {}> = {p}, expected 2",
                    self.roots[i], self.coroots[i]
                ));
            }
        }

        // Closed under negation, with matching coroots.
        for i in 0..n {
            let neg = self.roots[i].neg();
            match self.root_lookup.get(&neg.0) {
                Some(&j) if self.coroots[j] == self.coroots[i].neg() => {}
                Some(_) => report.push(format!(
                    "coroot of -{} is not the negated coroot of {}",
                    self.roots[i], self.roots[i]
                )),
                None => report.push(format!("root set not closed under negation at {}", self.roots[i])),
            }
        }

        // Every root is an all-nonnegative or all-nonpositive integer
        // combination of the simple roots.
        let simple_mat: Mat = (0..self.rank)
            .map(|row| {
                self.simple
                    .iter()
                    .map(|&s| Rat::from_int(self.roots[s].0[row]))
                    .collect()
            })
            .collect();
        let mut positive = vec![false; n];
        for i in 0..n {
            let b: Vec<Rat> = self.roots[i].0.iter().map(|&x| Rat::from_int(x)).collect();
            match linalg::solve(&simple_mat, &b) {
                Some((c, rank)) if rank == self.simple.len() => {
                    let ints: Option<Vec<i128>> = c.iter().map(|x| x.as_integer()).collect();
                    match ints {
                        Some(cs) if cs.iter().all(|&x| x >= 0) => positive[i] = true,
                        Some(cs) if cs.iter().all(|&x| x <= 0) => positive[i] = false,
                        _ => report.push(format!(
                            "root {} is not a uniform-sign integer combination of simple roots",
                            self.roots[i]
                        )),
                    }
                }
                _ => report.push(format!(
                    "root {} is not in the integral span of the simple roots",
                    self.roots[i]
                )),
            }
        }
        self.positive = positive;

        // Simple reflections permute the (root, coroot) pairs compatibly.
        for (pos, &s) in self.simple.iter().enumerate() {
            for i in 0..n {
                let rx = self.reflect_weight_raw(s, &self.roots[i]);
                let ry = self.reflect_coweight_raw(s, &self.coroots[i]);
                match self.root_lookup.get(&rx.0) {
                    Some(&j) if self.coroots[j] == ry => {}
                    Some(_) => report.push(format!(
                        "simple reflection s{} maps the pair ({}, {}) incompatibly",
                        pos + 1,
                        self.roots[i],
                        self.coroots[i]
                    )),
                    None => report.push(format!(
                        "simple reflection s{} does not permute the roots (image of {})",
                        pos + 1,
                        self.roots[i]
                    )),
                }
            }
        }

        if report.is_empty() {
            let mut tr = Weight::zero(self.rank);
            let mut trd = Coweight::zero(self.rank);
            for i in 0..n {
                if self.positive[i] {
                    tr = tr.add(&self.roots[i]);
                    trd = trd.add(&self.coroots[i]);
                }
            }
            self.two_rho = tr;
            self.two_rho_dual = trd;
            self.compute_components();
        }
        self.report = report;
    }

    fn compute_components(&mut self) {
        let s = self.simple.len();
        let mut comp_of = vec![usize::MAX; s];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for start in 0..s {
            if comp_of[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp_of[start] = id;
            while let Some(i) = stack.pop() {
                members.push(i);
                for j in 0..s {
                    if comp_of[j] == usize::MAX
                        && pair(&self.roots[self.simple[i]], &self.coroots[self.simple[j]]) != 0
                    {
                        comp_of[j] = id;
                        stack.push(j);
                    }
                }
            }
            members.sort_unstable();
            comps.push(members);
        }

        // Highest root of a component: the unique dominant root lying in the
        // rational span of that component's simple roots.
        let mut highest = Vec::new();
        for comp in &comps {
            let span: Mat = (0..self.rank)
                .map(|row| {
                    comp.iter()
                        .map(|&p| Rat::from_int(self.roots[self.simple[p]].0[row]))
                        .collect()
                })
                .collect();
            let mut found = None;
            for (i, r) in self.roots.iter().enumerate() {
                if !self.positive[i] {
                    continue;
                }
                let b: Vec<Rat> = r.0.iter().map(|&x| Rat::from_int(x)).collect();
                if linalg::solve(&span, &b).is_none() {
                    continue;
                }
                let dominant = self
                    .simple
                    .iter()
                    .all(|&sj| pair(r, &self.coroots[sj]) >= 0);
                if dominant {
                    found = Some(i);
                }
            }
            highest.push(found.expect("component without highest root"));
        }
        self.components = comps;
        self.highest = highest;
    }

    fn reflect_weight_raw(&self, root_idx: usize, x: &Weight) -> Weight {
        let k = pair(x, &self.coroots[root_idx]);
        x.sub(&self.roots[root_idx].scale(k))
    }

    fn reflect_coweight_raw(&self, root_idx: usize, y: &Coweight) -> Coweight {
        let k = pair(&self.roots[root_idx], y);
        y.sub(&self.coroots[root_idx].scale(k))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn roots(&self) -> &[Weight] {
        &self.roots
    }

    pub fn coroots(&self) -> &[Coweight] {
        &self.coroots
    }

    pub fn simple_indices(&self) -> &[usize] {
        &self.simple
    }

    pub fn num_simple(&self) -> usize {
        self.simple.len()
    }

    pub fn simple_root(&self, pos: usize) -> &Weight {
        &self.roots[self.simple[pos]]
    }

    pub fn simple_coroot(&self, pos: usize) -> &Coweight {
        &self.coroots[self.simple[pos]]
    }

    pub fn is_positive_root(&self, idx: usize) -> bool {
        self.positive[idx]
    }

    pub fn positive_root_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.roots.len()).filter(|&i| self.positive[i])
    }

    pub fn root_index(&self, v: &Weight) -> Option<usize> {
        self.root_lookup.get(&v.0).copied()
    }

    /// Simple-position partition into Dynkin components.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Root index of the highest root of the given component.
    pub fn highest_root(&self, comp: usize) -> usize {
        self.highest[comp]
    }

    pub fn is_valid(&self) -> bool {
        self.report.is_empty()
    }

    pub fn require_valid(&self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidDatum(self.report.join("; ")))
        }
    }

    /// The validation report: empty iff all axioms hold.
    pub fn validate(&self) -> Vec<String> {
        self.report.clone()
    }

    /// Sum of the positive roots (the weight 2*rho).
    pub fn two_rho(&self) -> &Weight {
        &self.two_rho
    }

    /// Sum of the positive coroots (2*rho of the dual datum).
    pub fn two_rho_dual(&self) -> &Coweight {
        &self.two_rho_dual
    }

    /// `<rho, beta>` for `beta` in the coroot lattice (always an integer).
    pub fn rho_height(&self, beta: &Coweight) -> Int {
        let d = pair(&self.two_rho, beta);
        debug_assert!(d % 2 == 0, "coweight outside the coroot lattice");
        d / 2
    }

    /// The Langlands dual: swap characters/cocharacters and roots/coroots.
    pub fn dual(&self) -> Result<BasedRootDatum> {
        self.require_valid()?;
        let name = match dual_name(&self.name) {
            Some(n) => n,
            None => format!("dual({})", self.name),
        };
        BasedRootDatum::new(
            name,
            self.rank,
            self.coroots.iter().map(|c| Weight(c.0.clone())).collect(),
            self.roots.iter().map(|r| Coweight(r.0.clone())).collect(),
            self.simple.clone(),
        )
    }

    pub fn is_dominant_coweight(&self, y: &Coweight) -> bool {
        self.simple
            .iter()
            .all(|&s| pair(&self.roots[s], y) >= 0)
    }

    pub fn is_dominant_weight(&self, x: &Weight) -> bool {
        self.simple
            .iter()
            .all(|&s| pair(x, &self.coroots[s]) >= 0)
    }

    /// Expansion of `y` over the simple coroots: unique when it exists since
    /// the simple coroots are linearly independent.
    pub fn coweight_expansion_simple(&self, y: &Coweight) -> Option<Vec<Rat>> {
        let a: Mat = (0..self.rank)
            .map(|row| {
                self.simple
                    .iter()
                    .map(|&s| Rat::from_int(self.coroots[s].0[row]))
                    .collect()
            })
            .collect();
        let b: Vec<Rat> = y.0.iter().map(|&x| Rat::from_int(x)).collect();
        let (c, rank) = linalg::solve(&a, &b)?;
        (rank == self.simple.len()).then_some(c)
    }

    /// Dominance order on dominant coweights: `lam <= mu` iff `mu - lam` is a
    /// nonnegative integral combination of positive coroots. Positive coroots
    /// are nonnegative integral sums of simple coroots, and those are
    /// independent, so an exact solve over the simple coroots decides it.
    pub fn dominance_leq(&self, lam: &Coweight, mu: &Coweight) -> Result<bool> {
        self.require_valid()?;
        if lam.rank() != self.rank || mu.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, got: lam.rank().max(mu.rank()) });
        }
        if !self.is_dominant_coweight(lam) {
            return Err(Error::NotDominant(format!("{lam}")));
        }
        if !self.is_dominant_coweight(mu) {
            return Err(Error::NotDominant(format!("{mu}")));
        }
        Ok(self.in_positive_coroot_cone(&mu.sub(lam)))
    }

    /// Is `delta` a nonnegative integral combination of positive coroots?
    /// (No dominance requirement on the inputs that produced `delta`.)
    pub fn in_positive_coroot_cone(&self, delta: &Coweight) -> bool {
        match self.coweight_expansion_simple(delta) {
            Some(c) => c.iter().all(|x| x.is_integer() && x.is_nonneg()),
            None => false,
        }
    }

    /// Apply a canonical-word Weyl element to a weight.
    pub fn act_weight(&self, w: &WeylElement, x: &Weight) -> Weight {
        let mut v = x.clone();
        for &i in w.word.iter().rev() {
            v = self.reflect_weight_raw(self.simple[i as usize], &v);
        }
        v
    }

    /// Apply the inverse of `w` to a weight.
    pub fn act_weight_inv(&self, w: &WeylElement, x: &Weight) -> Weight {
        let mut v = x.clone();
        for &i in w.word.iter() {
            v = self.reflect_weight_raw(self.simple[i as usize], &v);
        }
        v
    }

    pub fn act_coweight(&self, w: &WeylElement, y: &Coweight) -> Coweight {
        let mut v = y.clone();
        for &i in w.word.iter().rev() {
            v = self.reflect_coweight_raw(self.simple[i as usize], &v);
        }
        v
    }

    pub fn act_coweight_inv(&self, w: &WeylElement, y: &Coweight) -> Coweight {
        let mut v = y.clone();
        for &i in w.word.iter() {
            v = self.reflect_coweight_raw(self.simple[i as usize], &v);
        }
        v
    }

    /// Simple reflection at simple position `pos` (0-based).
    pub fn simple_reflection(&self, pos: usize) -> WeylElement {
        assert!(pos < self.simple.len());
        WeylElement { word: vec![pos as u8] }
    }

    /// Canonicalize an arbitrary word: repeatedly peel the smallest left
    /// descent. Yields the lexicographically least reduced word.
    pub fn weyl_from_word(&self, raw: &[u8]) -> WeylElement {
        // Track w^{-1} as images of the X basis vectors.
        let mut minv = imat_identity(self.rank);
        for &i in raw.iter().rev() {
            minv = self.reflect_matrix_x_mul(self.simple[i as usize], &minv, true);
        }
        self.weyl_from_inverse_matrix(minv)
    }

    // Multiply a reflection matrix on the left (pre=false) or right (pre=true)
    // of m, acting on X coordinates. Reflection matrices are involutions.
    fn reflect_matrix_x_mul(&self, root_idx: usize, m: &IMat, right: bool) -> IMat {
        let r = self.rank;
        let mut refl = imat_identity(r);
        for col in 0..r {
            let mut e = vec![0; r];
            e[col] = 1;
            let img = self.reflect_weight_raw(root_idx, &Weight(e));
            for row in 0..r {
                refl[row][col] = img.0[row];
            }
        }
        if right {
            imat_mul(m, &refl)
        } else {
            imat_mul(&refl, m)
        }
    }

    fn weyl_from_inverse_matrix(&self, mut minv: IMat) -> WeylElement {
        let mut word = Vec::new();
        loop {
            let mut descent = None;
            for pos in 0..self.simple.len() {
                let a = &self.roots[self.simple[pos]];
                let img = Weight(imat_vec(&minv, &a.0));
                match self.root_index(&img) {
                    Some(idx) if !self.positive[idx] => {
                        descent = Some(pos);
                        break;
                    }
                    Some(_) => {}
                    None => panic!("Weyl action does not preserve roots; datum invalid"),
                }
            }
            match descent {
                Some(pos) => {
                    word.push(pos as u8);
                    // w <- s_pos * w, so w^{-1} <- w^{-1} * s_pos.
                    minv = self.reflect_matrix_x_mul(self.simple[pos], &minv, true);
                }
                None => break,
            }
        }
        debug_assert_eq!(minv, imat_identity(self.rank));
        WeylElement { word }
    }

    /// Build a Weyl element from an explicit action on X, given as the images
    /// of the standard basis vectors (columns). Panics if the matrix is not
    /// in the Weyl group of a valid datum.
    pub fn weyl_from_action(&self, action_on_x: &IMat) -> WeylElement {
        let ratmat: Mat = action_on_x
            .iter()
            .map(|row| row.iter().map(|&x| Rat::from_int(x)).collect())
            .collect();
        let inv = linalg::inverse(&ratmat).expect("Weyl action must be invertible");
        let minv: IMat = inv
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| x.as_integer().expect("Weyl inverse must be integral") as Int)
                    .collect()
            })
            .collect();
        self.weyl_from_inverse_matrix(minv)
    }

    /// The reflection in the given (not necessarily simple) root.
    pub fn reflection(&self, root_idx: usize) -> WeylElement {
        let r = self.rank;
        let mut m = imat_identity(r);
        for col in 0..r {
            let mut e = vec![0; r];
            e[col] = 1;
            let img = self.reflect_weight_raw(root_idx, &Weight(e));
            for row in 0..r {
                m[row][col] = img.0[row];
            }
        }
        self.weyl_from_action(&m)
    }

    pub fn weyl_multiply(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        let mut raw = a.word.clone();
        raw.extend_from_slice(&b.word);
        self.weyl_from_word(&raw)
    }

    pub fn weyl_inverse(&self, a: &WeylElement) -> WeylElement {
        let raw: Vec<u8> = a.word.iter().rev().copied().collect();
        self.weyl_from_word(&raw)
    }

    /// Enumerate W0, sorted by (length, word).
    pub fn weyl_elements(&self) -> Vec<WeylElement> {
        let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
        let mut queue = vec![WeylElement::identity()];
        seen.insert(Vec::new());
        while let Some(w) = queue.pop() {
            for pos in 0..self.simple.len() {
                let next = self.weyl_multiply(&self.simple_reflection(pos), &w);
                if seen.insert(next.word.clone()) {
                    queue.push(next);
                }
            }
        }
        let mut out: Vec<WeylElement> = seen.into_iter().map(|word| WeylElement { word }).collect();
        out.sort_by_key(|w| (w.word.len(), w.word.clone()));
        out
    }

    /// Full W0-orbit of a coweight together with its dominant representative.
    pub fn weyl_orbit_dominant(&self, y: &Coweight) -> Result<(Vec<Coweight>, Coweight)> {
        self.require_valid()?;
        if y.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, got: y.rank() });
        }
        let mut orbit: BTreeSet<Coweight> = BTreeSet::new();
        let mut stack = vec![y.clone()];
        orbit.insert(y.clone());
        while let Some(v) = stack.pop() {
            for pos in 0..self.simple.len() {
                let next = self.reflect_coweight_raw(self.simple[pos], &v);
                if orbit.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
        let dominant: Vec<&Coweight> = orbit.iter().filter(|v| self.is_dominant_coweight(v)).collect();
        if dominant.len() != 1 {
            return Err(Error::InvalidDatum(format!(
                "orbit of {y} contains {} dominant elements",
                dominant.len()
            )));
        }
        let rep = dominant[0].clone();
        Ok((orbit.into_iter().collect(), rep))
    }

    pub fn dominant_representative(&self, y: &Coweight) -> Coweight {
        let mut v = y.clone();
        'outer: loop {
            for pos in 0..self.simple.len() {
                if pair(&self.roots[self.simple[pos]], &v) < 0 {
                    v = self.reflect_coweight_raw(self.simple[pos], &v);
                    continue 'outer;
                }
            }
            return v;
        }
    }

    /// Same datum up to reordering the (root, coroot) pairs and the pinning.
    pub fn same_up_to_order(&self, other: &BasedRootDatum) -> bool {
        if self.rank != other.rank || self.roots.len() != other.roots.len() {
            return false;
        }
        let pairs = |d: &BasedRootDatum| -> Vec<(Vec<Int>, Vec<Int>)> {
            let mut v: Vec<_> = d
                .roots
                .iter()
                .zip(&d.coroots)
                .map(|(r, c)| (r.0.clone(), c.0.clone()))
                .collect();
            v.sort();
            v
        };
        let simples = |d: &BasedRootDatum| -> BTreeSet<(Vec<Int>, Vec<Int>)> {
            d.simple
                .iter()
                .map(|&i| (d.roots[i].0.clone(), d.coroots[i].0.clone()))
                .collect()
        };
        pairs(self) == pairs(other) && simples(self) == simples(other)
    }

    /// Search for a lattice isomorphism `M in GL(Z)` with `M . self = other`:
    /// roots map to roots (coroots via the inverse transpose), simples to
    /// simples, and each additional pair `(x, y)` satisfies `M x = y`.
    /// M is solved from a simple-root matching plus the extra characters, so
    /// those must span the lattice rationally.
    pub fn find_isomorphism(
        &self,
        other: &BasedRootDatum,
        char_pairs: &[(Weight, Weight)],
    ) -> Option<IMat> {
        if self.rank != other.rank
            || self.roots.len() != other.roots.len()
            || self.simple.len() != other.simple.len()
        {
            return None;
        }
        let r = self.rank;
        let s = self.simple.len();
        let perms = permutations(s);
        for perm in &perms {
            // Constraint vectors (v, u): require M v = u.
            let mut vs: Vec<Vec<Int>> = Vec::new();
            let mut us: Vec<Vec<Int>> = Vec::new();
            for i in 0..s {
                vs.push(self.simple_root(i).0.clone());
                us.push(other.simple_root(perm[i]).0.clone());
            }
            for (x, y) in char_pairs {
                vs.push(x.0.clone());
                us.push(y.0.clone());
            }
            // Solve row_k(M) from  <row_k, v_j> = (u_j)_k for all j.
            let a: Mat = vs
                .iter()
                .map(|v| v.iter().map(|&x| Rat::from_int(x)).collect())
                .collect();
            let mut m: IMat = Vec::new();
            let mut ok = true;
            for k in 0..r {
                let b: Vec<Rat> = us.iter().map(|u| Rat::from_int(u[k])).collect();
                match linalg::solve(&a, &b) {
                    Some((row, rank)) if rank == r => {
                        let ints: Option<Vec<Int>> =
                            row.iter().map(|x| x.as_integer().map(|v| v as Int)).collect();
                        match ints {
                            Some(ints) => m.push(ints),
                            None => {
                                ok = false;
                                break;
                            }
                        }
                    }
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            if let Some(m) = self.verify_isomorphism(other, &m) {
                return Some(m);
            }
        }
        None
    }

    fn verify_isomorphism(&self, other: &BasedRootDatum, m: &IMat) -> Option<IMat> {
        let ratmat: Mat = m
            .iter()
            .map(|row| row.iter().map(|&x| Rat::from_int(x)).collect())
            .collect();
        let d = linalg::det(&ratmat);
        if d != Rat::from_int(1) && d != Rat::from_int(-1) {
            return None;
        }
        let inv = linalg::inverse(&ratmat)?;
        // Inverse transpose acts on the cocharacter side.
        let invt: IMat = (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| inv[j][i].as_integer().unwrap() as Int)
                    .collect()
            })
            .collect();
        let mut mapped: Vec<(Vec<Int>, Vec<Int>)> = self
            .roots
            .iter()
            .zip(&self.coroots)
            .map(|(rt, ct)| (imat_vec(m, &rt.0), imat_vec(&invt, &ct.0)))
            .collect();
        mapped.sort();
        let mut target: Vec<(Vec<Int>, Vec<Int>)> = other
            .roots
            .iter()
            .zip(&other.coroots)
            .map(|(rt, ct)| (rt.0.clone(), ct.0.clone()))
            .collect();
        target.sort();
        if mapped != target {
            return None;
        }
        let mapped_simple: BTreeSet<Vec<Int>> = self
            .simple
            .iter()
            .map(|&i| imat_vec(m, &self.roots[i].0))
            .collect();
        let target_simple: BTreeSet<Vec<Int>> = other
            .simple
            .iter()
            .map(|&i| other.roots[i].0.clone())
            .collect();
        (mapped_simple == target_simple).then(|| m.clone())
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}

fn dual_name(name: &str) -> Option<String> {
    let tail = |prefix: &str| name.strip_prefix(prefix).and_then(|t| t.parse::<usize>().ok());
    if let Some(n) = tail("GL") {
        return Some(format!("GL{n}"));
    }
    if let Some(n) = tail("SL") {
        return Some(format!("PGL{n}"));
    }
    if let Some(n) = tail("PGL") {
        return Some(format!("SL{n}"));
    }
    if let Some(n) = tail("Sp") {
        return Some(format!("SO{}", n + 1));
    }
    if let Some(n) = tail("SO") {
        return Some(format!("Sp{}", n - 1));
    }
    if name.starts_with('T') {
        return Some(name.to_string());
    }
    None
}

fn unit(rank: usize, i: usize) -> Vec<Int> {
    let mut v = vec![0; rank];
    v[i] = 1;
    v
}

/// Construct one of the shipped presets: `GLn`, `SLn`, `PGLn` (n >= 1 resp. 2),
/// `Sp2g`, `SO2g+1`, or a split torus `Tr`.
pub fn preset(name: &str) -> Result<BasedRootDatum> {
    let parse_n = |prefix: &str| -> Option<usize> {
        name.strip_prefix(prefix).and_then(|t| t.parse().ok())
    };
    if let Some(r) = parse_n("T") {
        if r > 9 {
            return Err(Error::Parse(format!("torus rank {r} too large")));
        }
        return BasedRootDatum::new(name, r, Vec::new(), Vec::new(), Vec::new());
    }
    if let Some(n) = parse_n("GL") {
        if n == 0 || n > 9 {
            return Err(Error::Parse(format!("unsupported preset {name}")));
        }
        let mut roots = Vec::new();
        let mut coroots = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let mut v = vec![0; n];
                    v[i] = 1;
                    v[j] = -1;
                    roots.push(Weight(v.clone()));
                    coroots.push(Coweight(v));
                }
            }
        }
        let simple = (0..n.saturating_sub(1))
            .map(|k| {
                let mut v = vec![0; n];
                v[k] = 1;
                v[k + 1] = -1;
                roots.iter().position(|r| r.0 == v).unwrap()
            })
            .collect();
        return BasedRootDatum::new(name, n, roots, coroots, simple);
    }
    if let Some(n) = parse_n("SL").or_else(|| parse_n("PGL")) {
        if n < 2 || n > 9 {
            return Err(Error::Parse(format!("unsupported preset {name}")));
        }
        let m = n - 1;
        // Cartan columns of A_{n-1} and interval sums; SL stores Cartan
        // columns as roots (X = weight lattice), PGL stores unit sums
        // (X = root lattice). The other side is the mirror image, which makes
        // dual(SLn) literally equal to PGLn.
        let cartan_col = |j: usize| -> Vec<Int> {
            (0..m)
                .map(|i| {
                    if i == j {
                        2
                    } else if i + 1 == j || j + 1 == i {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        };
        let interval_sum = |i: usize, j: usize, f: &dyn Fn(usize) -> Vec<Int>| -> Vec<Int> {
            let mut acc = vec![0; m];
            for k in i..=j {
                for (a, b) in acc.iter_mut().zip(f(k)) {
                    *a += b;
                }
            }
            acc
        };
        let mut roots = Vec::new();
        let mut coroots = Vec::new();
        let is_sl = name.starts_with("SL");
        for i in 0..m {
            for j in i..m {
                let cart = interval_sum(i, j, &cartan_col);
                let unitv = interval_sum(i, j, &|k| unit(m, k));
                let (r, c) = if is_sl { (cart.clone(), unitv.clone()) } else { (unitv.clone(), cart.clone()) };
                roots.push(Weight(r.clone()));
                coroots.push(Coweight(c.clone()));
                roots.push(Weight(r.iter().map(|x| -x).collect()));
                coroots.push(Coweight(c.iter().map(|x| -x).collect()));
            }
        }
        // Interval [k, k] appears first for each k in enumeration order; find it.
        let simple = (0..m)
            .map(|k| {
                let target = if is_sl { cartan_col(k) } else { unit(m, k) };
                roots.iter().position(|r| r.0 == target).unwrap()
            })
            .collect();
        return BasedRootDatum::new(name, m, roots, coroots, simple);
    }
    if let Some(even) = parse_n("Sp") {
        if even < 2 || even % 2 != 0 || even > 8 {
            return Err(Error::Parse(format!("unsupported preset {name}")));
        }
        let g = even / 2;
        let (roots, coroots) = sp_so_pairs(g, true);
        let simple = sp_so_simple(g, &roots, true);
        return BasedRootDatum::new(name, g, roots, coroots, simple);
    }
    if let Some(odd) = parse_n("SO") {
        if odd < 3 || odd % 2 == 0 || odd > 9 {
            return Err(Error::Parse(format!("unsupported preset {name}")));
        }
        let g = (odd - 1) / 2;
        let (coroots_as_roots, roots_as_coroots) = sp_so_pairs(g, false);
        let simple = sp_so_simple(g, &coroots_as_roots, false);
        return BasedRootDatum::new(name, g, coroots_as_roots, roots_as_coroots, simple);
    }
    Err(Error::Parse(format!("unknown preset {name}")))
}

// Shared enumeration for the C_g / B_g pair so that dual(Sp2g) == SO(2g+1)
// holds on the nose. For `sp = true` returns (roots, coroots) of Sp_2g; for
// `sp = false` returns (roots, coroots) of SO_{2g+1}, which are the mirrored
// lists in the same order.
fn sp_so_pairs(g: usize, sp: bool) -> (Vec<Weight>, Vec<Coweight>) {
    let mut long_side = Vec::new(); // Sp side: roots
    let mut short_side = Vec::new(); // Sp side: coroots
    let mut push = |a: Vec<Int>, b: Vec<Int>| {
        long_side.push(a.clone());
        short_side.push(b.clone());
        long_side.push(a.iter().map(|x| -x).collect());
        short_side.push(b.iter().map(|x| -x).collect());
    };
    for i in 0..g {
        for j in i + 1..g {
            let mut v = vec![0; g];
            v[i] = 1;
            v[j] = -1;
            push(v.clone(), v.clone());
            let mut w = vec![0; g];
            w[i] = 1;
            w[j] = 1;
            push(w.clone(), w.clone());
        }
    }
    for i in 0..g {
        let mut two = vec![0; g];
        two[i] = 2;
        let mut one = vec![0; g];
        one[i] = 1;
        push(two, one);
    }
    if sp {
        (
            long_side.into_iter().map(Weight).collect(),
            short_side.into_iter().map(Coweight).collect(),
        )
    } else {
        (
            short_side.into_iter().map(Weight).collect(),
            long_side.into_iter().map(Coweight).collect(),
        )
    }
}

fn sp_so_simple(g: usize, roots: &[Weight], sp: bool) -> Vec<usize> {
    let mut simple = Vec::new();
    for k in 0..g.saturating_sub(1) {
        let mut v = vec![0; g];
        v[k] = 1;
        v[k + 1] = -1;
        simple.push(roots.iter().position(|r| r.0 == v).unwrap());
    }
    let mut last = vec![0; g];
    last[g - 1] = if sp { 2 } else { 1 };
    simple.push(roots.iter().position(|r| r.0 == last).unwrap());
    simple
}

/// Parse the root-datum file format:
/// ```text
/// name GL2        # optional
/// rank 2
/// roots (1,-1) (-1,1)
/// coroots (1,-1) (-1,1)
/// simple 0
/// ```
pub fn parse_datum_file(text: &str) -> Result<BasedRootDatum> {
    let mut name = String::from("custom");
    let mut rank: Option<usize> = None;
    let mut roots: Option<Vec<Weight>> = None;
    let mut coroots: Option<Vec<Coweight>> = None;
    let mut simple: Option<Vec<usize>> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        let ctx = |m: &str| Error::Parse(format!("line {}: {m}", lineno + 1));
        match key {
            "name" => name = rest.to_string(),
            "rank" => rank = Some(rest.parse().map_err(|_| ctx("bad rank"))?),
            "roots" => roots = Some(parse_vector_list(rest)?.into_iter().map(Weight).collect()),
            "coroots" => {
                coroots = Some(parse_vector_list(rest)?.into_iter().map(Coweight).collect())
            }
            "simple" => {
                let mut idx = Vec::new();
                for tok in rest.split_whitespace() {
                    idx.push(tok.parse().map_err(|_| ctx("bad simple index"))?);
                }
                simple = Some(idx);
            }
            other => return Err(ctx(&format!("unknown field `{other}`"))),
        }
    }
    let rank = rank.ok_or_else(|| Error::Parse("missing `rank`".into()))?;
    BasedRootDatum::new(
        name,
        rank,
        roots.unwrap_or_default(),
        coroots.unwrap_or_default(),
        simple.unwrap_or_default(),
    )
}

/// `(1,-1) (2,0)` -> vec of integer vectors. `()` is the rank-0 vector.
pub fn parse_vector_list(text: &str) -> Result<Vec<Vec<Int>>> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(Error::Parse(format!("expected `(` in vector list at `{rest}`")));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| Error::Parse("unterminated vector".into()))?;
        out.push(parse_vector(&rest[..=close])?);
        rest = rest[close + 1..].trim_start();
    }
    Ok(out)
}

/// `(2,0)` or `(2, 0)` -> integer vector.
pub fn parse_vector(text: &str) -> Result<Vec<Int>> {
    let t = text.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("expected parenthesized vector, got `{t}`")))?;
    let inner = inner.trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<Int>()
                .map_err(|_| Error::Parse(format!("bad integer `{tok}` in vector")))
        })
        .collect()
}

/// Serialize in the same file format.
pub fn datum_to_file(d: &BasedRootDatum) -> String {
    let vecs = |it: &mut dyn Iterator<Item = String>| it.collect::<Vec<_>>().join(" ");
    let mut out = String::new();
    out.push_str(&format!("name {}\n", d.name()));
    out.push_str(&format!("rank {}\n", d.rank()));
    out.push_str(&format!(
        "roots {}\n",
        vecs(&mut d.roots().iter().map(|r| r.to_string()))
    ));
    out.push_str(&format!(
        "coroots {}\n",
        vecs(&mut d.coroots().iter().map(|c| c.to_string()))
    ));
    out.push_str(&format!(
        "simple {}\n",
        vecs(&mut d.simple_indices().iter().map(|i| i.to_string()))
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl2() -> BasedRootDatum {
        preset("GL2").unwrap()
    }

    #[test]
    fn presets_are_valid() {
        for name in [
            "GL1", "GL2", "GL3", "GL4", "SL2", "SL3", "SL4", "PGL2", "PGL3", "PGL4", "Sp4",
            "Sp6", "SO5", "SO7", "T0", "T2",
        ] {
            let d = preset(name).unwrap();
            assert!(d.is_valid(), "{name}: {:?}", d.validate());
        }
    }

    #[test]
    fn sp4_has_eight_roots() {
        let d = preset("Sp4").unwrap();
        assert_eq!(d.roots().len(), 8);
        assert!(d.validate().is_empty());
    }

    #[test]
    fn pairing_violation_reported() {
        // <alpha, alpha^vee> = 3
        let d = BasedRootDatum::new(
            "bad",
            1,
            vec![Weight(vec![3]), Weight(vec![-3])],
            vec![Coweight(vec![1]), Coweight(vec![-1])],
            vec![0],
        )
        .unwrap();
        assert!(d.validate().iter().any(|m| m.contains("pairing axiom violated")));
    }

    #[test]
    fn duality_on_presets() {
        for n in 2..=4 {
            let gl = preset(&format!("GL{n}")).unwrap();
            assert!(gl.dual().unwrap().same_up_to_order(&gl));
            let sl = preset(&format!("SL{n}")).unwrap();
            let pgl = preset(&format!("PGL{n}")).unwrap();
            assert_eq!(sl.dual().unwrap(), pgl);
            assert_eq!(pgl.dual().unwrap(), sl);
        }
        let sp4 = preset("Sp4").unwrap();
        let so5 = preset("SO5").unwrap();
        assert_eq!(sp4.dual().unwrap(), so5);
        // dual(dual(d)) == d exactly.
        for name in ["GL3", "SL4", "PGL2", "Sp4", "SO5", "T1"] {
            let d = preset(name).unwrap();
            assert_eq!(d.dual().unwrap().dual().unwrap(), d);
        }
    }

    #[test]
    fn two_rho_examples() {
        assert!(preset("T0").unwrap().two_rho().is_zero());
        let sl2 = preset("SL2").unwrap();
        assert_eq!(sl2.two_rho(), &Weight(vec![2])); // the unique positive root
        assert_eq!(gl2().two_rho(), &Weight(vec![1, -1]));
    }

    #[test]
    fn two_rho_pairs_to_two_on_simple_coroots() {
        for name in ["GL2", "GL3", "GL4", "SL3", "PGL4", "Sp4", "SO5"] {
            let d = preset(name).unwrap();
            for pos in 0..d.num_simple() {
                assert_eq!(pair(d.two_rho(), d.simple_coroot(pos)), 2, "{name} s{pos}");
            }
        }
    }

    #[test]
    fn dominance_examples() {
        let d = gl2();
        let a = Coweight(vec![1, 1]);
        let b = Coweight(vec![2, 0]);
        assert!(d.dominance_leq(&a, &a).unwrap());
        assert!(d.dominance_leq(&a, &b).unwrap());
        assert!(!d.dominance_leq(&Coweight(vec![1, 0]), &a).unwrap());
        // Non-dominant input is an error, not `false`.
        assert!(d.dominance_leq(&Coweight(vec![-1, 0]), &a).is_err());
    }

    #[test]
    fn dominance_is_partial_order_in_box() {
        let d = preset("Sp4").unwrap();
        let mut doms = Vec::new();
        for a in -2..=2 {
            for b in -2..=2 {
                let y = Coweight(vec![a, b]);
                if d.is_dominant_coweight(&y) {
                    doms.push(y);
                }
            }
        }
        for x in &doms {
            for y in &doms {
                let xy = d.dominance_leq(x, y).unwrap();
                let yx = d.dominance_leq(y, x).unwrap();
                if xy && yx {
                    assert_eq!(x, y);
                }
                for z in &doms {
                    if xy && d.dominance_leq(y, z).unwrap() {
                        assert!(d.dominance_leq(x, z).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let d = gl2();
        let (orbit, rep) = d.weyl_orbit_dominant(&Coweight(vec![0, 1])).unwrap();
        assert_eq!(rep, Coweight(vec![1, 0]));
        assert_eq!(orbit.len(), 2);
        assert!(orbit.contains(&Coweight(vec![0, 1])) && orbit.contains(&Coweight(vec![1, 0])));

        let sl2 = preset("SL2").unwrap();
        let (_, rep) = sl2.weyl_orbit_dominant(&Coweight(vec![-1])).unwrap();
        assert_eq!(rep, Coweight(vec![1]));

        // Dominant elements are their own representatives.
        let (_, rep) = d.weyl_orbit_dominant(&Coweight(vec![3, -1])).unwrap();
        assert_eq!(rep, Coweight(vec![3, -1]));
    }

    #[test]
    fn orbits_have_unique_dominant_member_in_box() {
        for name in ["GL3", "Sp4"] {
            let d = preset(name).unwrap();
            for a in -2..=2_i64 {
                for b in -2..=2_i64 {
                    for c in -1..=1_i64 {
                        let y = if d.rank() == 3 {
                            Coweight(vec![a, b, c])
                        } else if c != 0 {
                            continue;
                        } else {
                            Coweight(vec![a, b])
                        };
                        let (orbit, rep) = d.weyl_orbit_dominant(&y).unwrap();
                        assert_eq!(
                            orbit.iter().filter(|v| d.is_dominant_coweight(v)).count(),
                            1
                        );
                        assert!(orbit.contains(&rep));
                    }
                }
            }
        }
    }

    #[test]
    fn weyl_canonical_words() {
        let d = preset("GL3").unwrap();
        let s0 = d.simple_reflection(0);
        let s1 = d.simple_reflection(1);
        // Braid relation: s0 s1 s0 == s1 s0 s1, canonical word is the lex-least.
        let a = d.weyl_multiply(&d.weyl_multiply(&s0, &s1), &s0);
        let b = d.weyl_multiply(&d.weyl_multiply(&s1, &s0), &s1);
        assert_eq!(a, b);
        assert_eq!(a.word(), &[0, 1, 0]);
        assert_eq!(d.weyl_multiply(&s0, &s0), WeylElement::identity());
        assert_eq!(d.weyl_elements().len(), 6);
        let w0 = d.weyl_elements().last().unwrap().clone();
        assert_eq!(w0.length(), 3);
        assert_eq!(d.weyl_inverse(&w0), w0);
    }

    #[test]
    fn weyl_group_sizes() {
        assert_eq!(preset("GL4").unwrap().weyl_elements().len(), 24);
        assert_eq!(preset("Sp4").unwrap().weyl_elements().len(), 8);
        assert_eq!(preset("SO5").unwrap().weyl_elements().len(), 8);
        assert_eq!(preset("T3").unwrap().weyl_elements().len(), 1);
    }

    #[test]
    fn reflection_in_highest_root() {
        let d = preset("Sp4").unwrap();
        let theta = d.highest_root(0);
        assert_eq!(d.roots()[theta], Weight(vec![2, 0]));
        let s = d.reflection(theta);
        let y = d.act_coweight(&s, &Coweight(vec![1, 0]));
        assert_eq!(y, Coweight(vec![-1, 0]));
    }

    #[test]
    fn file_roundtrip() {
        let d = gl2();
        let text = datum_to_file(&d);
        let back = parse_datum_file(&text).unwrap();
        assert_eq!(back, d);
        assert!(parse_datum_file("rank 1\nroots (2)\ncoroots (1)\nsimple 0").is_ok());
        assert!(parse_datum_file("roots (2)").is_err());
    }

    #[test]
    fn find_isomorphism_identity() {
        let d = preset("SL2").unwrap();
        let m = d.find_isomorphism(&d, &[]).unwrap();
        assert_eq!(m, imat_identity(1));
    }
}
