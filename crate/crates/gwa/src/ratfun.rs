//! Rational functions: fractions of polynomials with cross-multiplication
//! equality. Fractions are reduced opportunistically (monomial content,
//! shared-univariate gcd, one exact-division attempt) but never require a
//! multivariate gcd engine.

use crate::error::{Error, Result};
use crate::poly::{self, Poly, PolyRing};
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut rf = RatFun { num, den };
        rf.normalize();
        Ok(rf)
    }

    pub fn from_poly(p: Poly) -> Self {
        let one = Poly::one(p.ring());
        RatFun { num: p, den: one }
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        RatFun::from_poly(Poly::zero(ring))
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        RatFun::from_poly(Poly::one(ring))
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.num.ring()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// Polynomial form via exact division, when the denominator divides the
    /// numerator.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.den.is_one() {
            return Some(self.num.clone());
        }
        self.den.divides(&self.num)
    }

    pub fn is_polynomial(&self) -> bool {
        self.to_poly().is_some()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one(self.num.ring());
            return;
        }
        // cancel the shared monomial content
        let ring = Arc::clone(self.num.ring());
        let nmin = min_exps(&self.num);
        let dmin = min_exps(&self.den);
        let common: Vec<i64> = nmin.iter().zip(&dmin).map(|(a, b)| *a.min(b)).collect();
        if common.iter().any(|&e| e != 0) {
            let shift = crate::poly::Mono(common.iter().map(|e| -e).collect());
            self.num = mono_shift(&self.num, &shift);
            self.den = mono_shift(&self.den, &shift);
        }
        if !self.den.is_constant() {
            // shared single variable: Euclid
            let mut vars = poly::support_vars(&self.num);
            for v in poly::support_vars(&self.den) {
                if !vars.contains(&v) {
                    vars.push(v);
                }
            }
            if vars.len() == 1 {
                if let Some(g) = poly::univariate_gcd(&self.num, &self.den, vars[0]) {
                    if g.degree().unwrap_or(0) > 0 {
                        let qn = g.divides(&self.num).expect("gcd divides numerator");
                        let qd = g.divides(&self.den).expect("gcd divides denominator");
                        self.num = qn;
                        self.den = qd;
                    }
                }
            }
            // one exact-division attempt
            if !self.den.is_constant() {
                if let Some(q) = self.den.divides(&self.num) {
                    self.num = q;
                    self.den = Poly::one(&ring);
                }
            }
        }
        // make the denominator's leading coefficient 1
        let lead = self.den.leading().map(|(_, c)| c.clone()).unwrap();
        if !lead.is_one() {
            let inv = lead.inv().unwrap();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &other.inv()?)
    }

    pub fn try_pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.try_pow(-k);
        }
        let mut out = RatFun::one(self.ring());
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

    pub fn scale_poly(&self, p: &Poly) -> Self {
        RatFun::new(&self.num * p, self.den.clone()).expect("denominator unchanged")
    }

    /// Relabel variables in numerator and denominator.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        RatFun::new(self.num.permute_vars(perm), self.den.permute_vars(perm))
            .expect("permutation preserves nonzero")
    }

    pub fn permute_blocks(&self, perm: &[usize], block: usize) -> Self {
        RatFun::new(
            self.num.permute_blocks(perm, block),
            self.den.permute_blocks(perm, block),
        )
        .expect("permutation preserves nonzero")
    }
}

fn min_exps(p: &Poly) -> Vec<i64> {
    let n = p.ring().nvars();
    let mut mins = vec![i64::MAX; n];
    for (m, _) in p.terms() {
        for (lo, &e) in mins.iter_mut().zip(&m.0) {
            *lo = (*lo).min(e);
        }
    }
    if mins.iter().any(|&e| e == i64::MAX) {
        return vec![0; n];
    }
    mins
}

fn mono_shift(p: &Poly, by: &crate::poly::Mono) -> Poly {
    let mut out = Poly::zero(p.ring());
    for (m, c) in p.terms() {
        let e: Vec<i64> = m.0.iter().zip(&by.0).map(|(a, b)| a + b).collect();
        out.add_term(crate::poly::Mono(e), c.clone());
    }
    out
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl std::ops::Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFun::new(num, den).expect("nonzero denominators")
    }
}

impl std::ops::Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl std::ops::Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let ns = format!("{}", self.num);
        let ds = format!("{}", self.den);
        let nw = if self.num.num_terms() > 1 || ns.contains('/') || ns.contains('*') {
            format!("({ns})")
        } else {
            ns
        };
        let dw = if self.den.num_terms() > 1 || ds.contains('/') || ds.contains('*') {
            format!("({ds})")
        } else {
            ds
        };
        write!(f, "{nw}/{dw}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ScalarField;

    fn ring2() -> Arc<PolyRing> {
        PolyRing::new(&ScalarField::rationals(), 2, false)
    }

    #[test]
    fn inverse_cancels() {
        let r = ring2();
        let h1 = Poly::var(&r, 0);
        let a = RatFun::from_poly(h1.clone());
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
    }

    #[test]
    fn antisymmetric_sum_is_zero() {
        let r = ring2();
        let h1 = Poly::var(&r, 0);
        let h2 = Poly::var(&r, 1);
        let a = RatFun::new(Poly::one(&r), &h1 - &h2).unwrap();
        let b = RatFun::new(Poly::one(&r), &h2 - &h1).unwrap();
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn cross_multiplication_equality() {
        let r = ring2();
        let h1 = Poly::var(&r, 0);
        let h2 = Poly::var(&r, 1);
        let one = Poly::one(&r);
        // (h1^2 - h2^2)/(h1 - h2) == h1 + h2
        let f = RatFun::new(&(&h1 * &h1) - &(&h2 * &h2), &h1 - &h2).unwrap();
        let g = RatFun::from_poly(&h1 + &h2);
        assert_eq!(f, g);
        let nonpoly = RatFun::new(one, &h1 - &h2).unwrap();
        assert!(!nonpoly.is_polynomial());
        assert!(f.is_polynomial());
    }

    #[test]
    fn division_by_zero_rejected() {
        let r = ring2();
        let z = RatFun::zero(&r);
        assert!(matches!(
            RatFun::one(&r).div(&z),
            Err(Error::DivisionByZero)
        ));
    }
}
