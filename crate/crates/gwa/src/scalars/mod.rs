//! Scalar tower: rationals, a cyclotomic extension and transcendental
//! parameters. A [`Scalar`] is a reduced-opportunistically fraction of
//! polynomials in the parameters with cyclotomic coefficients; equality is
//! decided by cross-multiplication, so unreduced representations still
//! compare correctly.

mod cyclotomic;

pub(crate) use cyclotomic::{Cyc, CycModulus, Rat};

use crate::error::{Error, Result};
use num::{BigInt, FromPrimitive, One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Exponent tuple for parameters, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ParamExp(pub Vec<u32>);

impl PartialOrd for ParamExp {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ParamExp {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let da: u64 = self.0.iter().map(|&e| e as u64).sum();
        let db: u64 = other.0.iter().map(|&e| e as u64).sum();
        da.cmp(&db).then_with(|| self.0.cmp(&other.0))
    }
}

/// Multivariate polynomial in the field parameters with cyclotomic coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ParamPoly {
    pub terms: BTreeMap<ParamExp, Cyc>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nparams: usize, c: Cyc) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ParamExp(vec![0; nparams]), c);
        }
        ParamPoly { terms }
    }

    pub fn parameter(nparams: usize, idx: usize, md: &CycModulus) -> Self {
        let mut exp = vec![0u32; nparams];
        exp[idx] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(ParamExp(exp), md.from_rat(Rat::one()));
        ParamPoly { terms }
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
                .map_or(false, |(e, c)| e.0.iter().all(|&x| x == 0) && c.is_one())
    }

    fn assert_keys(&self, nparams: usize) {
        debug_assert!(
            self.terms.keys().all(|e| e.0.len() == nparams),
            "parameter exponent tuple with wrong arity"
        );
    }

    pub fn add(&self, other: &Self, md: &CycModulus) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            match out.terms.get_mut(e) {
                Some(existing) => {
                    *existing = md.add(existing, c);
                    if existing.is_zero() {
                        out.terms.remove(e);
                    }
                }
                None => {
                    out.terms.insert(e.clone(), c.clone());
                }
            }
        }
        out
    }

    pub fn neg(&self, md: &CycModulus) -> Self {
        ParamPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), md.neg(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self, md: &CycModulus) -> Self {
        let mut out = ParamPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp = ParamExp(
                    ea.0.iter()
                        .zip(&eb.0)
                        .map(|(x, y)| x + y)
                        .collect::<Vec<_>>(),
                );
                let c = md.mul(ca, cb);
                match out.terms.get_mut(&exp) {
                    Some(existing) => {
                        *existing = md.add(existing, &c);
                        if existing.is_zero() {
                            out.terms.remove(&exp);
                        }
                    }
                    None => {
                        if !c.is_zero() {
                            out.terms.insert(exp, c);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &Cyc, md: &CycModulus) -> Self {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), md.mul(x, c)))
                .collect(),
        }
    }

    pub fn leading(&self) -> Option<(&ParamExp, &Cyc)> {
        self.terms.iter().next_back()
    }

    /// Per-parameter minimum exponent over all terms.
    fn min_exponents(&self) -> Option<Vec<u32>> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut mins = first.0.clone();
        for e in it {
            for (m, x) in mins.iter_mut().zip(&e.0) {
                *m = (*m).min(*x);
            }
        }
        Some(mins)
    }

    fn shift_down(&self, by: &[u32]) -> Self {
        ParamPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    (
                        ParamExp(e.0.iter().zip(by).map(|(x, b)| x - b).collect()),
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    /// Index of the single parameter this polynomial depends on, if any.
    fn single_variable(&self) -> Option<Option<usize>> {
        let mut var: Option<usize> = None;
        for e in self.terms.keys() {
            for (i, &x) in e.0.iter().enumerate() {
                if x > 0 {
                    match var {
                        None => var = Some(i),
                        Some(j) if j == i => {}
                        Some(_) => return None,
                    }
                }
            }
        }
        Some(var)
    }

    fn to_dense_univariate(&self, idx: usize) -> Vec<Cyc> {
        let deg = self
            .terms
            .keys()
            .map(|e| e.0[idx] as usize)
            .max()
            .unwrap_or(0);
        let zero = Cyc(vec![Rat::zero(); 1]);
        let mut out: Vec<Option<Cyc>> = vec![None; deg + 1];
        for (e, c) in &self.terms {
            out[e.0[idx] as usize] = Some(c.clone());
        }
        out.into_iter()
            .map(|c| c.unwrap_or_else(|| zero.clone()))
            .collect()
    }

    fn from_dense_univariate(coeffs: &[Cyc], idx: usize, nparams: usize) -> Self {
        let mut terms = BTreeMap::new();
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0u32; nparams];
                e[idx] = k as u32;
                terms.insert(ParamExp(e), c.clone());
            }
        }
        ParamPoly { terms }
    }
}

fn cyc_trim(v: &mut Vec<Cyc>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

/// Remainder of dense `a` modulo dense `b` over Q(zeta); `b` nonzero.
fn cyc_univariate_rem(a: &[Cyc], b: &[Cyc], md: &CycModulus) -> Vec<Cyc> {
    let mut r = a.to_vec();
    cyc_trim(&mut r);
    let bd = b.len() - 1;
    let lead_inv = md.inv(&b[bd]).expect("nonzero divisor lead");
    while r.len() > bd {
        let rd = r.len() - 1;
        let factor = md.mul(&r[rd], &lead_inv);
        for k in 0..=bd {
            let v = md.mul(&b[k], &factor);
            r[rd - bd + k] = md.sub(&r[rd - bd + k], &v);
        }
        cyc_trim(&mut r);
    }
    r
}

/// Dense univariate gcd over Q(zeta); used for opportunistic reduction only.
fn cyc_univariate_gcd(a: &[Cyc], b: &[Cyc], md: &CycModulus) -> Vec<Cyc> {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    cyc_trim(&mut r0);
    cyc_trim(&mut r1);
    while !r1.is_empty() {
        let r = cyc_univariate_rem(&r0, &r1, md);
        r0 = r1;
        r1 = r;
    }
    if r0.is_empty() {
        return Vec::new();
    }
    let inv = md.inv(r0.last().unwrap()).expect("nonzero gcd lead");
    r0.iter().map(|c| md.mul(c, &inv)).collect()
}

/// Exact univariate division (dense) over Q(zeta). Panics if not exact.
fn cyc_univariate_div_exact(a: &[Cyc], b: &[Cyc], md: &CycModulus) -> Vec<Cyc> {
    let trim = |v: &mut Vec<Cyc>| {
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
    };
    let mut r = a.to_vec();
    trim(&mut r);
    let mut bb = b.to_vec();
    trim(&mut bb);
    let bd = bb.len() - 1;
    if r.is_empty() {
        return Vec::new();
    }
    let lead_inv = md.inv(&bb[bd]).expect("nonzero divisor lead");
    let mut q = vec![md.zero(); r.len() - bd];
    while r.len() > bd {
        let rd = r.len() - 1;
        let factor = md.mul(&r[rd], &lead_inv);
        q[rd - bd] = factor.clone();
        for k in 0..=bd {
            let v = md.mul(&bb[k], &factor);
            r[rd - bd + k] = md.sub(&r[rd - bd + k], &v);
        }
        trim(&mut r);
    }
    assert!(r.is_empty(), "inexact parameter division");
    q
}

/// Descriptor of the scalar tower: cyclotomic order and parameter names.
#[derive(Debug)]
pub struct ScalarField {
    cyclotomic_order: u32,
    parameters: Vec<String>,
    modulus: CycModulus,
}

impl PartialEq for ScalarField {
    fn eq(&self, other: &Self) -> bool {
        self.cyclotomic_order == other.cyclotomic_order && self.parameters == other.parameters
    }
}
impl Eq for ScalarField {}

impl ScalarField {
    /// Build a scalar field Q(zeta_m)(p1, ..., ps).
    pub fn new(cyclotomic_order: u32, parameters: &[&str]) -> Result<Arc<Self>> {
        assert!(cyclotomic_order >= 1, "cyclotomic order must be positive");
        let mut seen = std::collections::BTreeSet::new();
        for p in parameters {
            if *p == "zeta" || *p == "e" {
                return Err(Error::ReservedName(p.to_string()));
            }
            if p.starts_with('h')
                && p.len() > 1
                && p[1..].chars().all(|c| c.is_ascii_digit())
            {
                return Err(Error::ReservedName(p.to_string()));
            }
            if !seen.insert(p.to_string()) {
                return Err(Error::DuplicateParameter(p.to_string()));
            }
        }
        Ok(Arc::new(ScalarField {
            cyclotomic_order,
            parameters: parameters.iter().map(|s| s.to_string()).collect(),
            modulus: CycModulus::new(cyclotomic_order),
        }))
    }

    pub fn rationals() -> Arc<Self> {
        Self::new(1, &[]).unwrap()
    }

    pub fn cyclotomic_order(&self) -> u32 {
        self.cyclotomic_order
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn parameter_index(&self, name: &str) -> Option<usize> {
        self.parameters.iter().position(|p| p == name)
    }

    pub(crate) fn modulus(&self) -> &CycModulus {
        &self.modulus
    }
}

/// Element of the scalar field: a fraction of parameter polynomials.
#[derive(Clone, Debug)]
pub struct Scalar {
    field: Arc<ScalarField>,
    num: ParamPoly,
    den: ParamPoly,
}

impl Scalar {
    fn make(field: Arc<ScalarField>, num: ParamPoly, den: ParamPoly) -> Self {
        let n = field.parameters.len();
        num.assert_keys(n);
        den.assert_keys(n);
        let mut s = Scalar { field, num, den };
        s.normalize();
        s
    }

    pub fn zero(field: &Arc<ScalarField>) -> Self {
        let md = field.modulus();
        let n = field.parameters.len();
        Scalar {
            field: Arc::clone(field),
            num: ParamPoly::zero(),
            den: ParamPoly::constant(n, md.from_rat(Rat::one())),
        }
    }

    pub fn one(field: &Arc<ScalarField>) -> Self {
        Scalar::from_rational(field, Rat::one())
    }

    pub fn from_rational(field: &Arc<ScalarField>, r: Rat) -> Self {
        let md = field.modulus();
        let n = field.parameters.len();
        Scalar {
            field: Arc::clone(field),
            num: ParamPoly::constant(n, md.from_rat(r)),
            den: ParamPoly::constant(n, md.from_rat(Rat::one())),
        }
    }

    pub fn from_i64(field: &Arc<ScalarField>, v: i64) -> Self {
        Scalar::from_rational(field, Rat::from_i64(v).unwrap())
    }

    pub fn from_frac(field: &Arc<ScalarField>, num: i64, den: i64) -> Self {
        assert!(den != 0);
        Scalar::from_rational(
            field,
            Rat::new(BigInt::from_i64(num).unwrap(), BigInt::from_i64(den).unwrap()),
        )
    }

    /// The primitive cyclotomic_order-th root of unity.
    pub fn zeta(field: &Arc<ScalarField>) -> Self {
        let md = field.modulus();
        let n = field.parameters.len();
        Scalar::make(
            Arc::clone(field),
            ParamPoly::constant(n, md.zeta()),
            ParamPoly::constant(n, md.from_rat(Rat::one())),
        )
    }

    /// zeta_m^k where m divides the field's cyclotomic order.
    pub fn root_of_unity(field: &Arc<ScalarField>, m: u32, k: i64) -> Result<Self> {
        if m == 0 || field.cyclotomic_order % m != 0 {
            return Err(Error::RootOfUnityUnavailable(m));
        }
        let step = (field.cyclotomic_order / m) as i64;
        let e = (k.rem_euclid(m as i64)) * step;
        let md = field.modulus();
        let n = field.parameters.len();
        let z = md.pow(&md.zeta(), e as u64);
        Ok(Scalar::make(
            Arc::clone(field),
            ParamPoly::constant(n, z),
            ParamPoly::constant(n, md.from_rat(Rat::one())),
        ))
    }

    pub fn parameter(field: &Arc<ScalarField>, name: &str) -> Option<Self> {
        let idx = field.parameter_index(name)?;
        let md = field.modulus();
        let n = field.parameters.len();
        Some(Scalar::make(
            Arc::clone(field),
            ParamPoly::parameter(n, idx, md),
            ParamPoly::constant(n, md.from_rat(Rat::one())),
        ))
    }

    pub fn field(&self) -> &Arc<ScalarField> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// Rational value if the scalar is a plain rational constant.
    pub fn as_rational(&self) -> Option<Rat> {
        if !self.den.is_one() {
            return None;
        }
        if self.num.is_zero() {
            return Some(Rat::zero());
        }
        if self.num.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.num.terms.iter().next().unwrap();
        if e.0.iter().any(|&x| x > 0) {
            return None;
        }
        c.as_rat().cloned()
    }

    fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field
    }

    fn normalize(&mut self) {
        let md = self.field.modulus().clone();
        let nparams = self.field.parameters.len();
        assert!(!self.den.is_zero(), "scalar denominator is zero");
        if self.num.is_zero() {
            self.den = ParamPoly::constant(nparams, md.from_rat(Rat::one()));
            return;
        }
        // cancel common parameter-monomial content
        let mn = self.num.min_exponents().unwrap();
        let dn = self.den.min_exponents().unwrap();
        let common: Vec<u32> = mn.iter().zip(&dn).map(|(a, b)| *a.min(b)).collect();
        if common.iter().any(|&x| x > 0) {
            self.num = self.num.shift_down(&common);
            self.den = self.den.shift_down(&common);
        }
        // univariate gcd when both sides live in one shared parameter
        if !self.den.is_one() {
            if let (Some(vn), Some(vd)) =
                (self.num.single_variable(), self.den.single_variable())
            {
                let var = match (vn, vd) {
                    (Some(i), Some(j)) if i == j => Some(i),
                    (Some(i), None) => Some(i),
                    (None, Some(j)) => Some(j),
                    (None, None) => None,
                    _ => None,
                };
                if let Some(idx) = var {
                    let a = self.num.to_dense_univariate(idx);
                    let b = self.den.to_dense_univariate(idx);
                    let g = cyc_univariate_gcd(&a, &b, &md);
                    if g.len() > 1 {
                        let qa = cyc_univariate_div_exact(&a, &g, &md);
                        let qb = cyc_univariate_div_exact(&b, &g, &md);
                        let n = self.field.parameters.len();
                        self.num = ParamPoly::from_dense_univariate(&qa, idx, n);
                        self.den = ParamPoly::from_dense_univariate(&qb, idx, n);
                    }
                }
            }
        }
        // scale so the denominator's leading coefficient is 1
        let lead = self.den.leading().map(|(_, c)| c.clone()).unwrap();
        if !lead.is_one() {
            let inv = md.inv(&lead).unwrap();
            self.num = self.num.scale(&inv, &md);
            self.den = self.den.scale(&inv, &md);
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::make(
            Arc::clone(&self.field),
            self.den.clone(),
            self.num.clone(),
        ))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut out = Scalar::one(&self.field);
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

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &other.inv()?)
    }

    /// True if this scalar is a root of unity (its multiplicative order divides
    /// 2 * cyclotomic order when it is a constant; parameter-dependent scalars
    /// have infinite order).
    pub fn is_root_of_unity(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if !self.den.is_one() || self.num.terms.keys().any(|e| e.0.iter().any(|&x| x > 0)) {
            return false;
        }
        let bound = 2 * self.field.cyclotomic_order as i64;
        let mut p = self.clone();
        for _ in 0..bound {
            if p.is_one() {
                return true;
            }
            p = &p * self;
        }
        false
    }

}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(self.same_field(other), "comparing scalars of distinct fields");
        let md = self.field.modulus();
        self.num.mul(&other.den, md) == other.num.mul(&self.den, md)
    }
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        assert!(self.same_field(rhs), "scalar field mismatch");
        let md = self.field.modulus();
        let num = self
            .num
            .mul(&rhs.den, md)
            .add(&rhs.num.mul(&self.den, md), md);
        let den = self.den.mul(&rhs.den, md);
        Scalar::make(Arc::clone(&self.field), num, den)
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let md = self.field.modulus();
        Scalar {
            field: Arc::clone(&self.field),
            num: self.num.neg(md),
            den: self.den.clone(),
        }
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        assert!(self.same_field(rhs), "scalar field mismatch");
        let md = self.field.modulus();
        Scalar::make(
            Arc::clone(&self.field),
            self.num.mul(&rhs.num, md),
            self.den.mul(&rhs.den, md),
        )
    }
}

// ---- display ----

fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn fmt_cyc(c: &Cyc) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (k, coeff) in c.0.iter().enumerate().rev() {
        if coeff.is_zero() {
            continue;
        }
        let base = if k == 0 {
            fmt_rat(coeff)
        } else {
            let z = if k == 1 {
                "zeta".to_string()
            } else {
                format!("zeta^{k}")
            };
            if coeff.is_one() {
                z
            } else if (-coeff).is_one() {
                format!("-{z}")
            } else {
                format!("{}*{}", fmt_rat(coeff), z)
            }
        };
        parts.push(base);
    }
    if parts.is_empty() {
        return "0".to_string();
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
    out
}

fn fmt_parampoly(p: &ParamPoly, params: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    for (e, c) in p.terms.iter().rev() {
        let mono: Vec<String> = e
            .0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(i, &x)| {
                if x == 1 {
                    params[i].clone()
                } else {
                    format!("{}^{}", params[i], x)
                }
            })
            .collect();
        let cyc_terms = c.0.iter().filter(|x| !x.is_zero()).count();
        let cs = fmt_cyc(c);
        let s = if mono.is_empty() {
            cs
        } else if c.is_one() {
            mono.join("*")
        } else if cyc_terms > 1 {
            format!("({})*{}", cs, mono.join("*"))
        } else if cs == "-1" {
            format!("-{}", mono.join("*"))
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
    out
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = &self.field.parameters;
        let ns = fmt_parampoly(&self.num, params);
        if self.den.is_one() {
            return write!(f, "{ns}");
        }
        let ds = fmt_parampoly(&self.den, params);
        let nw = if self.num.terms.len() > 1 {
            format!("({ns})")
        } else {
            ns
        };
        let dw = if self.den.terms.len() > 1 {
            format!("({ds})")
        } else {
            ds
        };
        write!(f, "{nw}/{dw}")
    }
}
