//! The skew monoid ring L*M: finite formal sums of lattice elements with
//! rational-function coefficients and multiplication twisted by the lattice
//! action on L. Also the evaluation action on L, reflection-group actions,
//! Reynolds averaging and monoid-generation checks.

use crate::autos::{lattice_to_auto_unchecked, Automorphism, ReflectionGroupElement};
use crate::error::{Error, Result};
use crate::lattice::{LatticeElement, LatticeSubmonoidSpec, Membership};
use crate::poly::PolyRing;
use crate::ratfun::RatFun;
use crate::scalars::Scalar;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Shared context: the coefficient ring and the commuting generators
/// sigma_1..sigma_n giving the lattice action.
#[derive(Debug)]
pub struct SkewContext {
    ring: Arc<PolyRing>,
    sigma: Vec<Automorphism>,
}

impl SkewContext {
    pub fn new(ring: &Arc<PolyRing>, sigma: Vec<Automorphism>) -> Result<Arc<Self>> {
        for i in 0..sigma.len() {
            for j in i + 1..sigma.len() {
                if !sigma[i].commutes_with(&sigma[j]) {
                    return Err(Error::NonCommutingGenerators(i, j));
                }
            }
        }
        Ok(Arc::new(SkewContext {
            ring: Arc::clone(ring),
            sigma,
        }))
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self) -> &[Automorphism] {
        &self.sigma
    }

    /// The automorphism sigma^v.
    pub fn auto_for(&self, v: &LatticeElement) -> Result<Automorphism> {
        lattice_to_auto_unchecked(v, &self.sigma)
    }

    pub fn compatible(&self, other: &Self) -> bool {
        self.ring.compatible(&other.ring) && self.sigma == other.sigma
    }
}

/// Element sum alpha_v . e(v) of the skew monoid ring.
#[derive(Clone, Debug)]
pub struct SkewElement {
    ctx: Arc<SkewContext>,
    terms: BTreeMap<LatticeElement, RatFun>,
}

impl SkewElement {
    pub fn zero(ctx: &Arc<SkewContext>) -> Self {
        SkewElement {
            ctx: Arc::clone(ctx),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Arc<SkewContext>) -> Self {
        SkewElement::monomial(ctx, RatFun::one(ctx.ring()), LatticeElement::zero(ctx.rank()))
    }

    pub fn from_ratfun(ctx: &Arc<SkewContext>, f: RatFun) -> Self {
        SkewElement::monomial(ctx, f, LatticeElement::zero(ctx.rank()))
    }

    pub fn monomial(ctx: &Arc<SkewContext>, coeff: RatFun, v: LatticeElement) -> Self {
        assert_eq!(v.rank(), ctx.rank(), "lattice rank mismatch");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(v, coeff);
        }
        SkewElement {
            ctx: Arc::clone(ctx),
            terms,
        }
    }

    /// The generator e_i.
    pub fn generator(ctx: &Arc<SkewContext>, i: usize) -> Self {
        SkewElement::monomial(
            ctx,
            RatFun::one(ctx.ring()),
            LatticeElement::basis(ctx.rank(), i),
        )
    }

    pub fn ctx(&self) -> &Arc<SkewContext> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticeElement, &RatFun)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, v: &LatticeElement) -> Option<&RatFun> {
        self.terms.get(v)
    }

    /// Lattice elements with nonzero coefficient.
    pub fn support(&self) -> Vec<LatticeElement> {
        self.terms.keys().cloned().collect()
    }

    fn same_ctx(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ctx, &other.ctx) || self.ctx.compatible(&other.ctx)
    }

    pub(crate) fn add_term(&mut self, v: LatticeElement, c: RatFun) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&v) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&v);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(v, c);
            }
        }
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        if c.is_zero() {
            return SkewElement::zero(&self.ctx);
        }
        SkewElement {
            ctx: Arc::clone(&self.ctx),
            terms: self
                .terms
                .iter()
                .map(|(v, f)| (v.clone(), f * c))
                .collect(),
        }
    }

    pub fn scale_scalar(&self, c: &Scalar) -> Self {
        let p = crate::poly::Poly::constant(self.ctx.ring(), c.clone());
        self.scale(&RatFun::from_poly(p))
    }

    /// Twisted product: (a e(u)) (b e(v)) = a sigma^u(b) e(u+v).
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if !self.same_ctx(rhs) {
            return Err(Error::ContextMismatch(
                "skew elements from different contexts".into(),
            ));
        }
        let mut out = SkewElement::zero(&self.ctx);
        for (u, a) in &self.terms {
            let twist = self.ctx.auto_for(u)?;
            for (v, b) in &rhs.terms {
                let coeff = a * &twist.apply_ratfun(b)?;
                out.add_term(u.add(v), coeff);
            }
        }
        Ok(out)
    }

    pub fn try_pow(&self, k: u32) -> Result<Self> {
        let mut out = SkewElement::one(&self.ctx);
        for _ in 0..k {
            out = out.try_mul(self)?;
        }
        Ok(out)
    }

    /// Inverse of a single-term element: (a e(v))^{-1} = sigma^{-v}(a^{-1}) e(-v).
    pub fn inv_unit(&self) -> Result<Self> {
        if self.terms.len() != 1 {
            return Err(Error::DivisionByZero);
        }
        let (v, a) = self.terms.iter().next().unwrap();
        let back = self.ctx.auto_for(&v.neg())?;
        let coeff = back.apply_ratfun(&a.inv()?)?;
        Ok(SkewElement::monomial(&self.ctx, coeff, v.neg()))
    }

    /// The evaluation action u(f) = sum alpha_v sigma^v(f).
    pub fn evaluate(&self, f: &RatFun) -> Result<RatFun> {
        if !self.ctx.ring.compatible(f.ring()) {
            return Err(Error::ContextMismatch(
                "evaluation argument lives in a different ring".into(),
            ));
        }
        let mut acc = RatFun::zero(self.ctx.ring());
        for (v, a) in &self.terms {
            let twist = self.ctx.auto_for(v)?;
            acc = &acc + &(a * &twist.apply_ratfun(f)?);
        }
        Ok(acc)
    }

    /// Reflection-group action: coefficients transform by the permutation
    /// part on L, lattice keys by conjugation; diagonal parts act trivially.
    pub fn group_act(&self, g: &ReflectionGroupElement) -> Self {
        let mut out = SkewElement::zero(&self.ctx);
        for (v, a) in &self.terms {
            out.add_term(g.act_on_lattice(v), g.act_on_ratfun(a));
        }
        out
    }

    pub fn is_invariant(&self, group: &[ReflectionGroupElement]) -> bool {
        group.iter().all(|g| self.group_act(g) == *self)
    }
}

/// Reynolds operator: average over the listed group elements.
pub fn reynolds(group: &[ReflectionGroupElement], u: &SkewElement) -> SkewElement {
    assert!(!group.is_empty());
    let mut acc = SkewElement::zero(u.ctx());
    for g in group {
        acc = &acc + &u.group_act(g);
    }
    let inv_order = Scalar::from_frac(u.ctx().ring().field(), 1, group.len() as i64);
    acc.scale_scalar(&inv_order)
}

impl PartialEq for SkewElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_ctx(other) && self.terms == other.terms
    }
}

impl std::ops::Add for &SkewElement {
    type Output = SkewElement;
    fn add(self, rhs: &SkewElement) -> SkewElement {
        assert!(self.same_ctx(rhs), "skew context mismatch");
        let mut out = self.clone();
        for (v, c) in &rhs.terms {
            out.add_term(v.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Neg for &SkewElement {
    type Output = SkewElement;
    fn neg(self) -> SkewElement {
        SkewElement {
            ctx: Arc::clone(&self.ctx),
            terms: self.terms.iter().map(|(v, c)| (v.clone(), -c)).collect(),
        }
    }
}

impl std::ops::Sub for &SkewElement {
    type Output = SkewElement;
    fn sub(self, rhs: &SkewElement) -> SkewElement {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &SkewElement {
    type Output = SkewElement;
    fn mul(self, rhs: &SkewElement) -> SkewElement {
        self.try_mul(rhs).expect("skew context mismatch")
    }
}

impl fmt::Display for SkewElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        for (v, c) in self.terms.iter().rev() {
            let cs = format!("{c}");
            let s = if c.is_one() {
                format!("{v}")
            } else if cs == "-1" {
                format!("-{v}")
            } else if cs.contains(" + ") || cs.contains(" - ") {
                format!("({cs})*{v}")
            } else {
                format!("{cs}*{v}")
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

/// Outcome of a generation check with a witness for the failing direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratesOutcome {
    Generates,
    SpecGeneratorUnreachable(LatticeElement),
    SupportOutsideSpec(LatticeElement),
    Inconclusive(LatticeElement),
}

impl GeneratesOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, GeneratesOutcome::Generates)
    }
}

/// Do the supports of `elements` generate the lattice object described by
/// `spec` (in the spec's mode)? Both inclusions are checked: every spec
/// generator must be reachable from the union of supports, and every support
/// vector must lie in the spec's object.
pub fn generates(
    elements: &[SkewElement],
    spec: &LatticeSubmonoidSpec,
    bound: i64,
) -> GeneratesOutcome {
    let mut support: Vec<LatticeElement> = Vec::new();
    for e in elements {
        for v in e.support() {
            if !support.contains(&v) {
                support.push(v);
            }
        }
    }
    let support_spec = LatticeSubmonoidSpec {
        generators: support.clone(),
        mode: spec.mode,
    };
    for g in &spec.generators {
        match support_spec.membership(g, bound) {
            Membership::Member(_) => {}
            Membership::NotMember => {
                return GeneratesOutcome::SpecGeneratorUnreachable(g.clone())
            }
            Membership::Inconclusive => return GeneratesOutcome::Inconclusive(g.clone()),
        }
    }
    for v in &support {
        match spec.membership(v, bound) {
            Membership::Member(_) => {}
            Membership::NotMember => return GeneratesOutcome::SupportOutsideSpec(v.clone()),
            Membership::Inconclusive => return GeneratesOutcome::Inconclusive(v.clone()),
        }
    }
    GeneratesOutcome::Generates
}

/// Standard shift context: k[h1..hn] with sigma_i the shift on h_i.
pub fn shift_context(ring: &Arc<PolyRing>) -> Arc<SkewContext> {
    let sigma = (0..ring.nvars())
        .map(|i| crate::autos::shift(ring, i))
        .collect();
    SkewContext::new(ring, sigma).expect("shifts commute")
}
