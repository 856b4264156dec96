//! Exact arithmetic in the cyclotomic field Q(zeta_m) = Q[x]/(Phi_m).
//!
//! Elements are dense coefficient vectors of length deg Phi_m, always fully
//! reduced. The modulus is computed once per scalar field.

use num::{BigRational, One, Zero};

pub(crate) type Rat = BigRational;

/// Dense univariate polynomial over Q, ascending degree, no trailing zeros.
pub(crate) type QPoly = Vec<Rat>;

pub(crate) fn qp_trim(p: &mut QPoly) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn qp_mul(a: &[Rat], b: &[Rat]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    qp_trim(&mut out);
    out
}

/// Remainder of `a` modulo monic-leading `m` (leading coefficient need not be 1).
pub(crate) fn qp_rem(a: &[Rat], m: &[Rat]) -> QPoly {
    let mut r: QPoly = a.to_vec();
    qp_trim(&mut r);
    let md = m.len() - 1;
    let lead = &m[md];
    while r.len() > md {
        let rd = r.len() - 1;
        let factor = &r[rd] / lead;
        for k in 0..=md {
            let v = &m[k] * &factor;
            r[rd - md + k] -= v;
        }
        qp_trim(&mut r);
    }
    r
}

/// Exact quotient a / b; panics if the division is not exact.
pub(crate) fn qp_div_exact(a: &[Rat], b: &[Rat]) -> QPoly {
    let mut r: QPoly = a.to_vec();
    qp_trim(&mut r);
    let bd = b.len() - 1;
    let lead = &b[bd];
    if r.is_empty() {
        return Vec::new();
    }
    let mut q = vec![Rat::zero(); r.len() - bd];
    while r.len() > bd {
        let rd = r.len() - 1;
        let factor = &r[rd] / lead;
        q[rd - bd] = factor.clone();
        for k in 0..=bd {
            let v = &b[k] * &factor;
            r[rd - bd + k] -= v;
        }
        qp_trim(&mut r);
    }
    assert!(r.is_empty(), "inexact univariate division");
    q
}

/// The m-th cyclotomic polynomial via Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d.
pub(crate) fn cyclotomic_polynomial(m: u32) -> QPoly {
    assert!(m >= 1);
    if m == 1 {
        return vec![-Rat::one(), Rat::one()];
    }
    let mut num = vec![Rat::zero(); m as usize + 1];
    num[0] = -Rat::one();
    num[m as usize] = Rat::one();
    let mut den = vec![Rat::one()];
    for d in 1..m {
        if m % d == 0 {
            den = qp_mul(&den, &cyclotomic_polynomial(d));
        }
    }
    qp_div_exact(&num, &den)
}

/// Residue class in Q[x]/(Phi_m): dense vector of length deg Phi_m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Cyc(pub Vec<Rat>);

/// Precomputed modulus data shared by all elements of a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct CycModulus {
    pub order: u32,
    pub phi: QPoly,
    pub degree: usize,
}

impl CycModulus {
    pub fn new(order: u32) -> Self {
        let phi = cyclotomic_polynomial(order);
        let degree = phi.len() - 1;
        CycModulus { order, phi, degree }
    }

    pub fn zero(&self) -> Cyc {
        Cyc(vec![Rat::zero(); self.degree])
    }

    pub fn from_rat(&self, r: Rat) -> Cyc {
        let mut v = vec![Rat::zero(); self.degree];
        v[0] = r;
        self.reduce_into(vec![v.remove(0)])
    }

    /// zeta as a residue; for m = 1 this is 1, for m = 2 it is -1.
    pub fn zeta(&self) -> Cyc {
        let x = vec![Rat::zero(), Rat::one()];
        self.reduce_into(x)
    }

    fn reduce_into(&self, p: QPoly) -> Cyc {
        let r = qp_rem(&p, &self.phi);
        let mut v = r;
        v.resize(self.degree, Rat::zero());
        Cyc(v)
    }

    pub fn add(&self, a: &Cyc, b: &Cyc) -> Cyc {
        Cyc(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, a: &Cyc, b: &Cyc) -> Cyc {
        Cyc(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
    }

    pub fn neg(&self, a: &Cyc) -> Cyc {
        Cyc(a.0.iter().map(|x| -x).collect())
    }

    pub fn mul(&self, a: &Cyc, b: &Cyc) -> Cyc {
        let mut pa = a.0.clone();
        qp_trim(&mut pa);
        let mut pb = b.0.clone();
        qp_trim(&mut pb);
        self.reduce_into(qp_mul(&pa, &pb))
    }

    /// Inverse via the extended Euclidean algorithm; Phi_m is irreducible over Q,
    /// so every nonzero residue is invertible.
    pub fn inv(&self, a: &Cyc) -> Option<Cyc> {
        if a.is_zero() {
            return None;
        }
        let mut r0 = self.phi.clone();
        let mut r1 = a.0.clone();
        qp_trim(&mut r1);
        let mut t0: QPoly = Vec::new();
        let mut t1: QPoly = vec![Rat::one()];
        while !r1.is_empty() {
            // r0 = q * r1 + r, with deg r < deg r1 (field coefficients).
            let (q, r) = qp_divmod(&r0, &r1);
            let t_next = qp_sub(&t0, &qp_mul(&q, &t1));
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t_next;
        }
        // r0 = gcd (a nonzero constant since Phi is irreducible and a != 0 mod Phi)
        assert_eq!(r0.len(), 1, "cyclotomic modulus not irreducible?");
        let c = r0[0].clone();
        let scaled: QPoly = t0.iter().map(|x| x / &c).collect();
        Some(self.reduce_into(scaled))
    }

    pub fn pow(&self, a: &Cyc, k: u64) -> Cyc {
        let mut result = self.from_rat(Rat::one());
        let mut base = a.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }
}

impl Cyc {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, c)| if i == 0 { c.is_one() } else { c.is_zero() })
    }

    /// Rational value when the residue is a constant.
    pub fn as_rat(&self) -> Option<&Rat> {
        if self.0[1..].iter().all(|c| c.is_zero()) {
            Some(&self.0[0])
        } else {
            None
        }
    }
}

fn qp_sub(a: &[Rat], b: &[Rat]) -> QPoly {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    qp_trim(&mut out);
    out
}

fn qp_divmod(a: &[Rat], b: &[Rat]) -> (QPoly, QPoly) {
    let mut r: QPoly = a.to_vec();
    qp_trim(&mut r);
    let bd = b.len() - 1;
    let lead = &b[bd];
    if r.len() <= bd {
        return (Vec::new(), r);
    }
    let mut q = vec![Rat::zero(); r.len() - bd];
    while r.len() > bd {
        let rd = r.len() - 1;
        let factor = &r[rd] / lead;
        q[rd - bd] = factor.clone();
        for k in 0..=bd {
            let v = &b[k] * &factor;
            r[rd - bd + k] -= v;
        }
        qp_trim(&mut r);
    }
    qp_trim(&mut q);
    (q, r)
}
