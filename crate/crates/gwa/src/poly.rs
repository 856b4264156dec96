//! Multivariate polynomial and Laurent arithmetic over the scalar tower.
//!
//! Terms are kept in a BTreeMap under graded-lexicographic order, so
//! serialization is deterministic. Negative exponents are allowed exactly
//! when the ring's `laurent` flag is set.

use crate::error::{Error, Result};
use crate::scalars::{Scalar, ScalarField};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Exponent tuple with graded-lexicographic order (total degree first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mono(pub Vec<i64>);

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let da: i64 = self.0.iter().sum();
        let db: i64 = other.0.iter().sum();
        da.cmp(&db).then_with(|| self.0.cmp(&other.0))
    }
}

impl Mono {
    pub fn zero(n: usize) -> Self {
        Mono(vec![0; n])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn add(&self, other: &Self) -> Self {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn sub(&self, other: &Self) -> Self {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

/// Context shared by all polynomials of one ring: variable names, the
/// Laurent flag and the scalar field.
#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: Arc<ScalarField>,
    vars: Vec<String>,
    laurent: bool,
}

impl PolyRing {
    /// Ring k[h1..hn] (or k[h1^pm..hn^pm] when `laurent`).
    pub fn new(field: &Arc<ScalarField>, nvars: usize, laurent: bool) -> Arc<Self> {
        let vars = (1..=nvars).map(|i| format!("h{i}")).collect();
        Arc::new(PolyRing {
            field: Arc::clone(field),
            vars,
            laurent,
        })
    }

    pub fn field(&self) -> &Arc<ScalarField> {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn compatible(&self, other: &Self) -> bool {
        self.vars == other.vars && self.laurent == other.laurent && *self.field == *other.field
    }
}

/// Polynomial (or Laurent polynomial) with nonzero scalar coefficients.
#[derive(Clone, Debug)]
pub struct Poly {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Mono, Scalar>,
}

impl Poly {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Poly {
            ring: Arc::clone(ring),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Poly::constant(ring, Scalar::one(ring.field()))
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::zero(ring.nvars()), c);
        }
        Poly {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn from_i64(ring: &Arc<PolyRing>, v: i64) -> Self {
        Poly::constant(ring, Scalar::from_i64(ring.field(), v))
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        assert!(i < ring.nvars());
        let mut exps = vec![0i64; ring.nvars()];
        exps[i] = 1;
        Poly::monomial(ring, Mono(exps), Scalar::one(ring.field()))
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Mono, c: Scalar) -> Self {
        assert_eq!(m.0.len(), ring.nvars());
        assert!(
            ring.laurent || m.0.iter().all(|&e| e >= 0),
            "negative exponent in a non-Laurent ring"
        );
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map_or(false, |(m, c)| m.is_zero() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_zero())
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero(self.ring.field()));
        }
        if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree of the graded-lex leading term (None for the zero poly).
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().map(|m| m.0.iter().sum())
    }

    pub fn leading(&self) -> Option<(&Mono, &Scalar)> {
        self.terms.iter().next_back()
    }

    fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring.compatible(&other.ring)
    }

    /// Add c * h^m into the polynomial, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Mono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x * c))
                .collect(),
        }
    }

    /// Multiply by a single monomial (exponent shift).
    fn shift(&self, by: &Mono) -> Self {
        Poly {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.add(by), c.clone()))
                .collect(),
        }
    }

    /// Componentwise minimum exponent across terms.
    fn min_exponents(&self) -> Option<Mono> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        let mut mins = first.0;
        for m in it {
            for (lo, x) in mins.iter_mut().zip(&m.0) {
                *lo = (*lo).min(*x);
            }
        }
        Some(Mono(mins))
    }

    /// Evaluate at a point; the ring homomorphism f -> f(p).
    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.ring.nvars() {
            return Err(Error::PointLength {
                got: point.len(),
                want: self.ring.nvars(),
            });
        }
        let field = self.ring.field();
        let mut acc = Scalar::zero(field);
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if e < 0 && point[i].is_zero() {
                    return Err(Error::ZeroCoordinate(self.ring.vars[i].clone()));
                }
                term = &term * &point[i].pow(e)?;
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Exact division: returns q with self * q = f, when it exists.
    pub fn divides(&self, f: &Poly) -> Option<Poly> {
        assert!(!self.is_zero(), "division by the zero polynomial");
        assert!(self.same_ring(f), "ring mismatch in divides");
        if f.is_zero() {
            return Some(Poly::zero(&self.ring));
        }
        let d_min = self.min_exponents().unwrap();
        let f_min = f.min_exponents().unwrap();
        let shift = f_min.sub(&d_min);
        if !self.ring.laurent && shift.0.iter().any(|&e| e < 0) {
            return None;
        }
        let d = self.shift(&Mono(d_min.0.iter().map(|e| -e).collect()));
        let mut r = f.shift(&Mono(f_min.0.iter().map(|e| -e).collect()));
        let (dm, dc) = d.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut q = Poly::zero(&self.ring);
        while let Some((rm, rc)) = r.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = rm.sub(&dm);
            if qm.0.iter().any(|&e| e < 0) {
                return None;
            }
            let qc = rc.div(&dc).expect("nonzero leading coefficient");
            q.add_term(qm.clone(), qc.clone());
            let sub = d.shift(&qm).scale(&qc);
            r = &r - &sub;
        }
        Some(q.shift(&shift))
    }

    /// Inverse when the polynomial is a unit of its ring (a nonzero constant,
    /// or a single scaled monomial in the Laurent case).
    pub fn inv_unit(&self) -> Result<Poly> {
        if self.terms.len() != 1 {
            return Err(Error::LaurentViolation(format!("{self}")));
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if !self.ring.laurent && !m.is_zero() {
            return Err(Error::LaurentViolation(format!("{self}")));
        }
        let inv_m = Mono(m.0.iter().map(|e| -e).collect());
        Ok(Poly::monomial(&self.ring, inv_m, c.inv()?))
    }

    pub fn try_pow(&self, k: i64) -> Result<Poly> {
        if k < 0 {
            return self.inv_unit()?.try_pow(-k);
        }
        let mut out = Poly::one(&self.ring);
        let mut base = self.clone();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(out)
    }

    /// Substitute `images[i]` for variable i. Fails with a Laurent violation
    /// when a negative power of a non-unit image is required.
    pub fn subst(&self, images: &[Poly]) -> Result<Poly> {
        assert_eq!(images.len(), self.ring.nvars());
        let target = if images.is_empty() {
            Arc::clone(&self.ring)
        } else {
            Arc::clone(images[0].ring())
        };
        let mut out = Poly::zero(&target);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                term = &term * &images[i].try_pow(e)?;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Relabel variables: exponent of variable i moves to variable perm[i].
    pub fn permute_vars(&self, perm: &[usize]) -> Poly {
        assert_eq!(perm.len(), self.ring.nvars());
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut e = vec![0i64; m.0.len()];
            for (i, &x) in m.0.iter().enumerate() {
                e[perm[i]] = x;
            }
            out.add_term(Mono(e), c.clone());
        }
        out
    }

    /// Block relabeling: variables are grouped in consecutive blocks of size
    /// `block`, and block i moves to block perm[i].
    pub fn permute_blocks(&self, perm: &[usize], block: usize) -> Poly {
        assert_eq!(perm.len() * block, self.ring.nvars());
        let mut full = vec![0usize; self.ring.nvars()];
        for (b, &pb) in perm.iter().enumerate() {
            for off in 0..block {
                full[b * block + off] = pb * block + off;
            }
        }
        self.permute_vars(&full)
    }

    /// Reinterpret in a wider ring, with this ring's variables starting at
    /// `offset`.
    pub fn extend(&self, target: &Arc<PolyRing>, offset: usize) -> Poly {
        assert!(offset + self.ring.nvars() <= target.nvars());
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0i64; target.nvars()];
            e[offset..offset + m.0.len()].copy_from_slice(&m.0);
            out.add_term(Mono(e), c.clone());
        }
        out
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert!(self.same_ring(rhs), "polynomial ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c))
                .collect(),
        }
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert!(self.same_ring(rhs), "polynomial ring mismatch");
        let mut out = Poly::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.add(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let vars = self.ring.vars();
        let mut parts: Vec<String> = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mono: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        vars[i].clone()
                    } else {
                        format!("{}^{}", vars[i], e)
                    }
                })
                .collect();
            let cs = format!("{c}");
            let s = if mono.is_empty() {
                cs
            } else if c.is_one() {
                mono.join("*")
            } else if cs == "-1" {
                format!("-{}", mono.join("*"))
            } else if cs.contains(" + ") || cs.contains(" - ") {
                format!("({})*{}", cs, mono.join("*"))
            } else {
                format!("{}*{}", cs, mono.join("*"))
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

/// Dense-univariate gcd of two polynomials that involve only variable `var`;
/// None when either involves another variable. Used for opportunistic
/// fraction reduction.
pub(crate) fn univariate_gcd(a: &Poly, b: &Poly, var: usize) -> Option<Poly> {
    let only = |p: &Poly| {
        p.terms
            .keys()
            .all(|m| m.0.iter().enumerate().all(|(i, &e)| i == var || e == 0))
    };
    if !only(a) || !only(b) || a.is_zero() || b.is_zero() {
        return None;
    }
    if a.terms.keys().any(|m| m.0[var] < 0) || b.terms.keys().any(|m| m.0[var] < 0) {
        return None;
    }
    let field = a.ring.field();
    let dense = |p: &Poly| {
        let deg = p.terms.keys().map(|m| m.0[var] as usize).max().unwrap();
        let mut v = vec![Scalar::zero(field); deg + 1];
        for (m, c) in &p.terms {
            v[m.0[var] as usize] = c.clone();
        }
        v
    };
    let trim = |v: &mut Vec<Scalar>| {
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
    };
    let mut r0 = dense(a);
    let mut r1 = dense(b);
    trim(&mut r0);
    trim(&mut r1);
    while !r1.is_empty() {
        // r0 mod r1
        let d1 = r1.len() - 1;
        let lead = r1[d1].clone();
        while r0.len() > d1 {
            let d0 = r0.len() - 1;
            let factor = r0[d0].div(&lead).unwrap();
            for k in 0..=d1 {
                let v = &r1[k] * &factor;
                r0[d0 - d1 + k] = &r0[d0 - d1 + k] - &v;
            }
            trim(&mut r0);
        }
        std::mem::swap(&mut r0, &mut r1);
    }
    if r0.is_empty() {
        return None;
    }
    let lead_inv = r0.last().unwrap().inv().unwrap();
    let mut g = Poly::zero(&a.ring);
    for (k, c) in r0.iter().enumerate() {
        let mut e = vec![0i64; a.ring.nvars()];
        e[var] = k as i64;
        g.add_term(Mono(e), c * &lead_inv);
    }
    Some(g)
}

/// The variables actually appearing in `p`.
pub(crate) fn support_vars(p: &Poly) -> Vec<usize> {
    let mut seen = vec![false; p.ring.nvars()];
    for m in p.terms.keys() {
        for (i, &e) in m.0.iter().enumerate() {
            if e != 0 {
                seen[i] = true;
            }
        }
    }
    seen.iter()
        .enumerate()
        .filter(|(_, &s)| s)
        .map(|(i, _)| i)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> Arc<PolyRing> {
        PolyRing::new(&ScalarField::rationals(), 2, false)
    }

    #[test]
    fn product_expansion() {
        let r = ring2();
        let h1 = Poly::var(&r, 0);
        let one = Poly::one(&r);
        let lhs = &(&h1 - &one) * &(&h1 + &one);
        let rhs = &(&h1 * &h1) - &one;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn eval_is_substitution() {
        let r = ring2();
        let h1 = Poly::var(&r, 0);
        let h2 = Poly::var(&r, 1);
        let f = &h1 * &h2;
        let field = r.field();
        let p = vec![Scalar::from_i64(field, 2), Scalar::from_i64(field, 3)];
        assert_eq!(f.eval(&p).unwrap(), Scalar::from_i64(field, 6));
        // constants evaluate to themselves
        assert_eq!(Poly::one(&r).eval(&p).unwrap(), Scalar::one(field));
        // h1 - p1 vanishes at p
        let g = &h1 - &Poly::from_i64(&r, 2);
        assert!(g.eval(&p).unwrap().is_zero());
    }

    #[test]
    fn laurent_eval_rejects_zero() {
        let f = ScalarField::rationals();
        let r = PolyRing::new(&f, 1, true);
        let hinv = Poly::monomial(&r, Mono(vec![-1]), Scalar::one(&f));
        let err = hinv.eval(&[Scalar::zero(&f)]);
        assert!(matches!(err, Err(Error::ZeroCoordinate(_))));
        assert_eq!(
            hinv.eval(&[Scalar::from_i64(&f, 2)]).unwrap(),
            Scalar::from_frac(&f, 1, 2)
        );
    }

    #[test]
    fn exact_division() {
        let r = ring2();
        let h1 = Poly::var(&r, 0);
        let h2 = Poly::var(&r, 1);
        let d = &h1 - &h2;
        let f = &(&h1 * &h1) - &(&h2 * &h2);
        let q = d.divides(&f).expect("divides");
        assert_eq!(q, &h1 + &h2);
        assert_eq!(&q * &d, f);
        assert!(h1.divides(&h2).is_none());
        assert_eq!(Poly::one(&r).divides(&f).unwrap(), f);
    }

    #[test]
    fn laurent_division_by_monomials() {
        let f = ScalarField::rationals();
        let r = PolyRing::new(&f, 2, true);
        let h1 = Poly::var(&r, 0);
        let h2 = Poly::var(&r, 1);
        // h1 divides h2 in the Laurent ring (h1 is a unit)
        let q = h1.divides(&h2).expect("unit divisor");
        assert_eq!(&q * &h1, h2);
    }

    #[test]
    fn substitution_shift() {
        let r = ring2();
        let h1 = Poly::var(&r, 0);
        let h2 = Poly::var(&r, 1);
        let one = Poly::one(&r);
        let images = vec![&h1 - &one, h2.clone()];
        let f = &h1 * &h1;
        let g = f.subst(&images).unwrap();
        let expected = &(&h1 - &one) * &(&h1 - &one);
        assert_eq!(g, expected);
    }

    #[test]
    fn display_round_shape() {
        let r = ring2();
        let h1 = Poly::var(&r, 0);
        let h2 = Poly::var(&r, 1);
        let p = &(&h1 * &h1) - &h2;
        assert_eq!(format!("{p}"), "h1^2 - h2");
    }
}
