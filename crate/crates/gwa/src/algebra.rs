//! Generalized Weyl algebras D(a, sigma): validated presentations, normal
//! forms through a small rewriting engine, tensor products, the embedding
//! into the skew monoid ring, and a catalog of standard algebras.
//!
//! Elements are kept in normal form sum d_alpha v_alpha, where v_alpha is the
//! product over i of X_i^{alpha_i} (alpha_i >= 0) or Y_i^{-alpha_i}
//! (alpha_i < 0), and the coefficients stay on the left.

use crate::autos::{self, Automorphism};
use crate::error::{Error, Result};
use crate::lattice::LatticeElement;
use crate::poly::{Poly, PolyRing};
use crate::ratfun::RatFun;
use crate::scalars::{Scalar, ScalarField};
use crate::skew::{SkewContext, SkewElement};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Presentation data: defining ring D, central elements a_i and commuting
/// automorphisms sigma_i with sigma_i(a_j) = a_j for j != i.
#[derive(Debug)]
pub struct GwaPresentation {
    ring: Arc<PolyRing>,
    a: Vec<Poly>,
    sigma: Vec<Automorphism>,
    independence_asserted: bool,
}

impl GwaPresentation {
    pub fn new(ring: &Arc<PolyRing>, a: Vec<Poly>, sigma: Vec<Automorphism>) -> Result<Arc<Self>> {
        Self::build(ring, a, sigma, false)
    }

    /// As `new`, additionally asserting Z-linear independence of the sigma
    /// for presentations whose automorphisms fall outside the detector.
    pub fn new_asserted(
        ring: &Arc<PolyRing>,
        a: Vec<Poly>,
        sigma: Vec<Automorphism>,
    ) -> Result<Arc<Self>> {
        Self::build(ring, a, sigma, true)
    }

    fn build(
        ring: &Arc<PolyRing>,
        a: Vec<Poly>,
        sigma: Vec<Automorphism>,
        asserted: bool,
    ) -> Result<Arc<Self>> {
        assert_eq!(a.len(), sigma.len(), "one automorphism per defining element");
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                return Err(Error::ZeroDefiningElement(i));
            }
        }
        for i in 0..sigma.len() {
            for j in i + 1..sigma.len() {
                if !sigma[i].commutes_with(&sigma[j]) {
                    return Err(Error::NonCommutingGenerators(i, j));
                }
            }
        }
        for i in 0..sigma.len() {
            for j in 0..a.len() {
                if i == j {
                    continue;
                }
                let moved = sigma[i].apply_poly(&a[j])?;
                if moved != a[j] {
                    return Err(Error::SigmaMovesForeignA {
                        i: i + 1,
                        j: j + 1,
                        got: format!("{moved}"),
                        expected: format!("{}", a[j]),
                    });
                }
            }
        }
        Ok(Arc::new(GwaPresentation {
            ring: Arc::clone(ring),
            a,
            sigma,
            independence_asserted: asserted,
        }))
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[Poly] {
        &self.a
    }

    pub fn sigma(&self) -> &[Automorphism] {
        &self.sigma
    }

    pub fn compatible(&self, other: &Self) -> bool {
        self.ring.compatible(&other.ring) && self.a == other.a && self.sigma == other.sigma
    }

    /// The skew monoid ring the algebra embeds into.
    pub fn skew_context(&self) -> Arc<SkewContext> {
        SkewContext::new(&self.ring, self.sigma.clone()).expect("validated at construction")
    }

    /// a_{i,m} = a_i sigma_i^{-1}(a_i) ... sigma_i^{-(m-1)}(a_i).
    pub fn cyclic_twist(&self, i: usize, m: u32) -> Result<Poly> {
        let inv = self.sigma[i].inverse();
        let mut acc = Poly::one(&self.ring);
        let mut cur = self.a[i].clone();
        for _ in 0..m {
            acc = &acc * &cur;
            cur = inv.apply_poly(&cur)?;
        }
        Ok(acc)
    }

    /// Detect Z-linear independence of sigma for per-variable affine
    /// automorphisms h_i -> u h_i + c. Returns None if a sigma falls outside
    /// that shape (then `new_asserted` is required for embedding).
    pub fn sigma_independence(&self) -> Option<bool> {
        if self.rank() != self.ring.nvars() {
            return None;
        }
        for (i, s) in self.sigma.iter().enumerate() {
            for j in 0..self.ring.nvars() {
                if j != i && s.images()[j] != Poly::var(&self.ring, j) {
                    return None;
                }
            }
            let img = &s.images()[i];
            let mut u = Scalar::zero(self.ring.field());
            let mut c = Scalar::zero(self.ring.field());
            for (m, coeff) in img.terms() {
                let deg: i64 = m.0.iter().map(|e| e.abs()).sum();
                if deg == 0 {
                    c = coeff.clone();
                } else if m.0[i] == 1 && deg == 1 {
                    u = coeff.clone();
                } else {
                    return None;
                }
            }
            if u.is_zero() {
                return None;
            }
            let infinite_order = if u.is_one() {
                !c.is_zero()
            } else {
                !u.is_root_of_unity()
            };
            if !infinite_order {
                return Some(false);
            }
        }
        Some(true)
    }
}

/// Element in normal form: coefficient map over word exponents.
#[derive(Clone, Debug)]
pub struct GwaElement {
    pres: Arc<GwaPresentation>,
    terms: BTreeMap<LatticeElement, Poly>,
}

#[derive(Clone, Debug)]
pub(crate) enum Letter {
    Coef(Poly),
    X(usize),
    Y(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rule {
    MergeCoef,
    MoveCoef,
    Cancel,
    Swap,
}

fn letter_index(l: &Letter) -> Option<usize> {
    match l {
        Letter::X(i) | Letter::Y(i) => Some(*i),
        Letter::Coef(_) => None,
    }
}

fn find_redexes(word: &[Letter]) -> Vec<(usize, Rule)> {
    let mut out = Vec::new();
    for pos in 0..word.len().saturating_sub(1) {
        match (&word[pos], &word[pos + 1]) {
            (Letter::Coef(_), Letter::Coef(_)) => out.push((pos, Rule::MergeCoef)),
            (Letter::X(_), Letter::Coef(_)) | (Letter::Y(_), Letter::Coef(_)) => {
                out.push((pos, Rule::MoveCoef))
            }
            (Letter::X(i), Letter::Y(j)) if i == j => out.push((pos, Rule::Cancel)),
            (Letter::Y(i), Letter::X(j)) if i == j => out.push((pos, Rule::Cancel)),
            (a, b) => {
                if let (Some(i), Some(j)) = (letter_index(a), letter_index(b)) {
                    if i > j {
                        out.push((pos, Rule::Swap));
                    }
                }
            }
        }
    }
    out
}

fn apply_redex(pres: &GwaPresentation, word: &mut Vec<Letter>, pos: usize, rule: Rule) -> Result<()> {
    match rule {
        Rule::MergeCoef => {
            let (Letter::Coef(d), Letter::Coef(e)) = (word[pos].clone(), word[pos + 1].clone())
            else {
                unreachable!()
            };
            word.splice(pos..pos + 2, [Letter::Coef(&d * &e)]);
        }
        Rule::MoveCoef => {
            let Letter::Coef(d) = word[pos + 1].clone() else {
                unreachable!()
            };
            let moved = match &word[pos] {
                Letter::X(i) => pres.sigma[*i].apply_poly(&d)?,
                Letter::Y(i) => pres.sigma[*i].inverse().apply_poly(&d)?,
                Letter::Coef(_) => unreachable!(),
            };
            let gen = word[pos].clone();
            word.splice(pos..pos + 2, [Letter::Coef(moved), gen]);
        }
        Rule::Cancel => {
            let coeff = match (&word[pos], &word[pos + 1]) {
                (Letter::X(i), Letter::Y(_)) => pres.sigma[*i].apply_poly(&pres.a[*i])?,
                (Letter::Y(i), Letter::X(_)) => pres.a[*i].clone(),
                _ => unreachable!(),
            };
            word.splice(pos..pos + 2, [Letter::Coef(coeff)]);
        }
        Rule::Swap => {
            word.swap(pos, pos + 1);
        }
    }
    Ok(())
}

/// Rewrite a word to normal form, choosing the redex with `pick` at every
/// step. Any choice terminates; normal forms agree because the v_alpha are a
/// free basis over D.
pub(crate) fn normalize_word(
    pres: &GwaPresentation,
    mut word: Vec<Letter>,
    pick: &mut dyn FnMut(usize) -> usize,
) -> Result<(LatticeElement, Poly)> {
    loop {
        let redexes = find_redexes(&word);
        if redexes.is_empty() {
            break;
        }
        let (pos, rule) = redexes[pick(redexes.len()) % redexes.len()];
        apply_redex(pres, &mut word, pos, rule)?;
    }
    let mut alpha = vec![0i64; pres.rank()];
    let mut coeff = Poly::one(&pres.ring);
    let mut seen_generator = false;
    for l in &word {
        match l {
            Letter::Coef(d) => {
                debug_assert!(!seen_generator, "coefficient right of a generator");
                coeff = &coeff * d;
            }
            Letter::X(i) => {
                seen_generator = true;
                alpha[*i] += 1;
            }
            Letter::Y(i) => {
                seen_generator = true;
                alpha[*i] -= 1;
            }
        }
    }
    Ok((LatticeElement(alpha), coeff))
}

pub(crate) fn word_for(alpha: &LatticeElement) -> Vec<Letter> {
    let mut letters = Vec::new();
    for (i, &e) in alpha.0.iter().enumerate() {
        if e >= 0 {
            for _ in 0..e {
                letters.push(Letter::X(i));
            }
        } else {
            for _ in 0..-e {
                letters.push(Letter::Y(i));
            }
        }
    }
    letters
}

impl GwaElement {
    pub fn zero(pres: &Arc<GwaPresentation>) -> Self {
        GwaElement {
            pres: Arc::clone(pres),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(pres: &Arc<GwaPresentation>) -> Self {
        GwaElement::from_poly(pres, Poly::one(&pres.ring))
    }

    pub fn from_poly(pres: &Arc<GwaPresentation>, d: Poly) -> Self {
        GwaElement::monomial(pres, LatticeElement::zero(pres.rank()), d)
    }

    pub fn monomial(pres: &Arc<GwaPresentation>, alpha: LatticeElement, d: Poly) -> Self {
        assert_eq!(alpha.rank(), pres.rank());
        let mut terms = BTreeMap::new();
        if !d.is_zero() {
            terms.insert(alpha, d);
        }
        GwaElement {
            pres: Arc::clone(pres),
            terms,
        }
    }

    pub fn x(pres: &Arc<GwaPresentation>, i: usize) -> Self {
        GwaElement::monomial(
            pres,
            LatticeElement::basis(pres.rank(), i),
            Poly::one(&pres.ring),
        )
    }

    pub fn y(pres: &Arc<GwaPresentation>, i: usize) -> Self {
        GwaElement::monomial(
            pres,
            LatticeElement::basis(pres.rank(), i).neg(),
            Poly::one(&pres.ring),
        )
    }

    pub fn presentation(&self) -> &Arc<GwaPresentation> {
        &self.pres
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticeElement, &Poly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, alpha: &LatticeElement) -> Option<&Poly> {
        self.terms.get(alpha)
    }

    pub fn word_support(&self) -> Vec<LatticeElement> {
        self.terms.keys().cloned().collect()
    }

    fn same_pres(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.pres, &other.pres) || self.pres.compatible(&other.pres)
    }

    pub(crate) fn add_term(&mut self, alpha: LatticeElement, d: Poly) {
        if d.is_zero() {
            return;
        }
        match self.terms.get_mut(&alpha) {
            Some(existing) => {
                let sum = &*existing + &d;
                if sum.is_zero() {
                    self.terms.remove(&alpha);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(alpha, d);
            }
        }
    }

    pub fn scale(&self, c: &Poly) -> Self {
        let mut out = GwaElement::zero(&self.pres);
        for (alpha, d) in &self.terms {
            out.add_term(alpha.clone(), d * c);
        }
        out
    }

    pub fn scale_scalar(&self, c: &Scalar) -> Self {
        self.scale(&Poly::constant(&self.pres.ring, c.clone()))
    }

    /// Product in normal form using the deterministic (leftmost) strategy.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.try_mul_with_strategy(rhs, &mut |_| 0)
    }

    /// Product in normal form with an explicit redex-choice strategy; used to
    /// exercise confluence of the rewriting.
    pub fn try_mul_with_strategy(
        &self,
        rhs: &Self,
        pick: &mut dyn FnMut(usize) -> usize,
    ) -> Result<Self> {
        if !self.same_pres(rhs) {
            return Err(Error::PresentationMismatch);
        }
        let mut out = GwaElement::zero(&self.pres);
        for (alpha, d) in &self.terms {
            for (beta, e) in &rhs.terms {
                let mut word = Vec::new();
                word.push(Letter::Coef(d.clone()));
                word.extend(word_for(alpha));
                word.push(Letter::Coef(e.clone()));
                word.extend(word_for(beta));
                let (gamma, coeff) = normalize_word(&self.pres, word, pick)?;
                out.add_term(gamma, coeff);
            }
        }
        Ok(out)
    }

    pub fn try_pow(&self, k: u32) -> Result<Self> {
        let mut out = GwaElement::one(&self.pres);
        for _ in 0..k {
            out = out.try_mul(self)?;
        }
        Ok(out)
    }

    /// The embedding into the skew monoid ring: X_i -> e_i, Y_i -> a_i e_i^{-1},
    /// D mapping identically.
    pub fn embed(&self) -> Result<SkewElement> {
        match self.pres.sigma_independence() {
            Some(true) => {}
            Some(false) => return Err(Error::IndependenceUnknown),
            None => {
                if !self.pres.independence_asserted {
                    return Err(Error::IndependenceUnknown);
                }
            }
        }
        let ctx = self.pres.skew_context();
        self.embed_in(&ctx)
    }

    /// Embedding with a caller-supplied (compatible) context, so that images
    /// of different elements share one context value.
    pub fn embed_in(&self, ctx: &Arc<SkewContext>) -> Result<SkewElement> {
        let mut out = SkewElement::zero(ctx);
        for (alpha, d) in &self.terms {
            let mut img = SkewElement::from_ratfun(ctx, RatFun::from_poly(d.clone()));
            for (i, &e) in alpha.0.iter().enumerate() {
                if e > 0 {
                    let xi = SkewElement::generator(ctx, i);
                    for _ in 0..e {
                        img = img.try_mul(&xi)?;
                    }
                } else if e < 0 {
                    let yi = SkewElement::monomial(
                        ctx,
                        RatFun::from_poly(self.pres.a[i].clone()),
                        LatticeElement::basis(ctx.rank(), i).neg(),
                    );
                    for _ in 0..-e {
                        img = img.try_mul(&yi)?;
                    }
                }
            }
            out = &out + &img;
        }
        Ok(out)
    }
}

impl PartialEq for GwaElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_pres(other) && self.terms == other.terms
    }
}

impl std::ops::Add for &GwaElement {
    type Output = GwaElement;
    fn add(self, rhs: &GwaElement) -> GwaElement {
        assert!(self.same_pres(rhs), "presentation mismatch");
        let mut out = self.clone();
        for (alpha, d) in &rhs.terms {
            out.add_term(alpha.clone(), d.clone());
        }
        out
    }
}

impl std::ops::Neg for &GwaElement {
    type Output = GwaElement;
    fn neg(self) -> GwaElement {
        GwaElement {
            pres: Arc::clone(&self.pres),
            terms: self.terms.iter().map(|(a, d)| (a.clone(), -d)).collect(),
        }
    }
}

impl std::ops::Sub for &GwaElement {
    type Output = GwaElement;
    fn sub(self, rhs: &GwaElement) -> GwaElement {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &GwaElement {
    type Output = GwaElement;
    fn mul(self, rhs: &GwaElement) -> GwaElement {
        self.try_mul(rhs).expect("presentation mismatch")
    }
}

impl fmt::Display for GwaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        for (alpha, d) in self.terms.iter().rev() {
            let mut gens: Vec<String> = Vec::new();
            for (i, &e) in alpha.0.iter().enumerate() {
                if e > 0 {
                    gens.push(if e == 1 {
                        format!("X{}", i + 1)
                    } else {
                        format!("X{}^{}", i + 1, e)
                    });
                } else if e < 0 {
                    gens.push(if e == -1 {
                        format!("Y{}", i + 1)
                    } else {
                        format!("Y{}^{}", i + 1, -e)
                    });
                }
            }
            let ds = format!("{d}");
            let s = if gens.is_empty() {
                ds
            } else if d.is_one() {
                gens.join("*")
            } else if ds == "-1" {
                format!("-{}", gens.join("*"))
            } else if ds.contains(" + ") || ds.contains(" - ") {
                format!("({})*{}", ds, gens.join("*"))
            } else {
                format!("{}*{}", ds, gens.join("*"))
            };
            parts.push(s);
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if let Some(stripped) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        write!(f, "{out}")
    }
}

/// Tensor product of presentations over the same scalar field: ranks add,
/// the defining elements and automorphisms extend by the identity on the
/// other factor's variables.
pub fn gwa_tensor(
    p: &Arc<GwaPresentation>,
    q: &Arc<GwaPresentation>,
) -> Result<Arc<GwaPresentation>> {
    if *p.ring.field() != *q.ring.field() || p.ring.is_laurent() != q.ring.is_laurent() {
        return Err(Error::ContextMismatch(
            "tensor factors over different scalar fields".into(),
        ));
    }
    let np = p.ring.nvars();
    let nq = q.ring.nvars();
    let ring = PolyRing::new(p.ring.field(), np + nq, p.ring.is_laurent());
    let mut a = Vec::new();
    for ai in &p.a {
        a.push(ai.extend(&ring, 0));
    }
    for ai in &q.a {
        a.push(ai.extend(&ring, np));
    }
    let extend_auto = |auto: &Automorphism, offset: usize, own: usize| -> Result<Automorphism> {
        let mut images = Vec::new();
        let mut inverse_images = Vec::new();
        for j in 0..ring.nvars() {
            if j >= offset && j < offset + own {
                images.push(auto.images()[j - offset].extend(&ring, offset));
                inverse_images.push(auto.inverse_images()[j - offset].extend(&ring, offset));
            } else {
                images.push(Poly::var(&ring, j));
                inverse_images.push(Poly::var(&ring, j));
            }
        }
        Automorphism::new(&ring, images, inverse_images)
    };
    let mut sigma = Vec::new();
    for s in &p.sigma {
        sigma.push(extend_auto(s, 0, np)?);
    }
    for s in &q.sigma {
        sigma.push(extend_auto(s, np, nq)?);
    }
    if p.independence_asserted || q.independence_asserted {
        GwaPresentation::new_asserted(&ring, a, sigma)
    } else {
        GwaPresentation::new(&ring, a, sigma)
    }
}

// ---- catalog ----

#[derive(Clone, Debug)]
pub enum CatalogAlgebra {
    Gwa(Arc<GwaPresentation>),
    Skew(Arc<SkewContext>),
}

pub const CATALOG_NAMES: [&str; 4] = ["weyl", "quantum_plane", "quantum_weyl", "torus_diffops"];

/// Standard presentations: the rank-n Weyl algebra, the quantum plane, the
/// quantized Weyl algebra and the differential operators on the torus (the
/// latter as a pure skew-ring context).
pub fn catalog(name: &str, n: usize, field: &Arc<ScalarField>) -> Result<CatalogAlgebra> {
    assert!(n >= 1, "catalog algebras need rank >= 1");
    match name {
        "weyl" => {
            let ring = PolyRing::new(field, n, false);
            let a = (0..n).map(|i| Poly::var(&ring, i)).collect();
            let sigma = (0..n).map(|i| autos::shift(&ring, i)).collect();
            Ok(CatalogAlgebra::Gwa(GwaPresentation::new(&ring, a, sigma)?))
        }
        "quantum_plane" => {
            let ring = PolyRing::new(field, n, false);
            require_q(name, field)?;
            let a = (0..n).map(|i| Poly::var(&ring, i)).collect();
            let sigma = (0..n)
                .map(|i| autos::q_scale(&ring, i))
                .collect::<Result<Vec<_>>>()?;
            Ok(CatalogAlgebra::Gwa(GwaPresentation::new(&ring, a, sigma)?))
        }
        "quantum_weyl" => {
            let ring = PolyRing::new(field, n, false);
            require_q(name, field)?;
            let a = (0..n).map(|i| Poly::var(&ring, i)).collect();
            let sigma = (0..n)
                .map(|i| autos::q_weyl(&ring, i))
                .collect::<Result<Vec<_>>>()?;
            Ok(CatalogAlgebra::Gwa(GwaPresentation::new(&ring, a, sigma)?))
        }
        "torus_diffops" => {
            let ring = PolyRing::new(field, n, false);
            Ok(CatalogAlgebra::Skew(crate::skew::shift_context(&ring)))
        }
        other => Err(Error::UnknownCatalog(other.to_string())),
    }
}

fn require_q(name: &str, field: &Arc<ScalarField>) -> Result<()> {
    if field.parameter_index("q").is_none() {
        return Err(Error::MissingParameter(name.into(), "q".into()));
    }
    Ok(())
}

/// First violated defining relation over the given coefficient samples, if
/// any. Checks X_i d = sigma_i(d) X_i, Y_i d = sigma_i^{-1}(d) Y_i,
/// Y_i X_i = a_i, X_i Y_i = sigma_i(a_i) and the cross-index commutators.
pub fn check_defining_relations(
    pres: &Arc<GwaPresentation>,
    samples: &[Poly],
) -> Result<Option<String>> {
    let n = pres.rank();
    for i in 0..n {
        let xi = GwaElement::x(pres, i);
        let yi = GwaElement::y(pres, i);
        let yx = yi.try_mul(&xi)?;
        if yx != GwaElement::from_poly(pres, pres.a[i].clone()) {
            return Ok(Some(format!("Y{0} X{0} != a_{0}", i + 1)));
        }
        let xy = xi.try_mul(&yi)?;
        let sa = pres.sigma[i].apply_poly(&pres.a[i])?;
        if xy != GwaElement::from_poly(pres, sa) {
            return Ok(Some(format!("X{0} Y{0} != sigma_{0}(a_{0})", i + 1)));
        }
        for d in samples {
            let de = GwaElement::from_poly(pres, d.clone());
            let lhs = xi.try_mul(&de)?;
            let rhs = GwaElement::from_poly(pres, pres.sigma[i].apply_poly(d)?).try_mul(&xi)?;
            if lhs != rhs {
                return Ok(Some(format!("X{} d != sigma(d) X{} at d = {}", i + 1, i + 1, d)));
            }
            let lhs = yi.try_mul(&de)?;
            let rhs = GwaElement::from_poly(pres, pres.sigma[i].inverse().apply_poly(d)?)
                .try_mul(&yi)?;
            if lhs != rhs {
                return Ok(Some(format!(
                    "Y{} d != sigma^-1(d) Y{} at d = {}",
                    i + 1,
                    i + 1,
                    d
                )));
            }
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            let xj = GwaElement::x(pres, j);
            let yj = GwaElement::y(pres, j);
            if xi.try_mul(&xj)? != xj.try_mul(&xi)? {
                return Ok(Some(format!("[X{}, X{}] != 0", i + 1, j + 1)));
            }
            if yi.try_mul(&yj)? != yj.try_mul(&yi)? {
                return Ok(Some(format!("[Y{}, Y{}] != 0", i + 1, j + 1)));
            }
            if xi.try_mul(&yj)? != yj.try_mul(&xi)? {
                return Ok(Some(format!("[X{}, Y{}] != 0", i + 1, j + 1)));
            }
        }
    }
    Ok(None)
}

/// First pair violating gwa_embed(u v) = gwa_embed(u) gwa_embed(v), if any.
pub fn check_embedding_homomorphism(
    pres: &Arc<GwaPresentation>,
    pairs: &[(GwaElement, GwaElement)],
) -> Result<Option<String>> {
    let ctx = pres.skew_context();
    for (k, (u, v)) in pairs.iter().enumerate() {
        let lhs = u.try_mul(v)?.embed_in(&ctx)?;
        let rhs = u.embed_in(&ctx)?.try_mul(&v.embed_in(&ctx)?)?;
        if lhs != rhs {
            return Ok(Some(format!("pair {k}: embed(u v) != embed(u) embed(v)")));
        }
    }
    Ok(None)
}
