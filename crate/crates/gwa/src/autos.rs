//! Substitution automorphisms of the defining ring with explicit inverses,
//! words of commuting automorphisms indexed by lattice elements, and the
//! imprimitive complex reflection groups G(m,p,n).

use crate::error::{Error, Result};
use crate::lattice::LatticeElement;
use crate::poly::{Poly, PolyRing};
use crate::ratfun::RatFun;
use crate::scalars::Scalar;
use std::fmt;
use std::sync::Arc;

/// Ring automorphism given by per-variable substitution maps, with the
/// inverse supplied explicitly and validated at construction.
#[derive(Clone, Debug)]
pub struct Automorphism {
    ring: Arc<PolyRing>,
    images: Vec<Poly>,
    inverse_images: Vec<Poly>,
}

impl Automorphism {
    pub fn new(ring: &Arc<PolyRing>, images: Vec<Poly>, inverse_images: Vec<Poly>) -> Result<Self> {
        let n = ring.nvars();
        assert_eq!(images.len(), n, "one image per variable");
        assert_eq!(inverse_images.len(), n, "one inverse image per variable");
        let a = Automorphism {
            ring: Arc::clone(ring),
            images,
            inverse_images,
        };
        for j in 0..n {
            let var = Poly::var(ring, j);
            let fwd_then_inv = a.inverse_images[j].subst(&a.images)?;
            if fwd_then_inv != var {
                return Err(Error::InverseMismatch(ring.vars()[j].clone()));
            }
            let inv_then_fwd = a.images[j].subst(&a.inverse_images)?;
            if inv_then_fwd != var {
                return Err(Error::InverseMismatch(ring.vars()[j].clone()));
            }
        }
        Ok(a)
    }

    pub fn identity(ring: &Arc<PolyRing>) -> Self {
        let images: Vec<Poly> = (0..ring.nvars()).map(|j| Poly::var(ring, j)).collect();
        Automorphism {
            ring: Arc::clone(ring),
            images: images.clone(),
            inverse_images: images,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    pub fn inverse_images(&self) -> &[Poly] {
        &self.inverse_images
    }

    pub fn is_identity(&self) -> bool {
        (0..self.ring.nvars()).all(|j| self.images[j] == Poly::var(&self.ring, j))
    }

    pub fn apply_poly(&self, f: &Poly) -> Result<Poly> {
        f.subst(&self.images)
    }

    pub fn apply_ratfun(&self, f: &RatFun) -> Result<RatFun> {
        let num = f.num().subst(&self.images)?;
        let den = f.den().subst(&self.images)?;
        RatFun::new(num, den)
    }

    pub fn inverse(&self) -> Self {
        Automorphism {
            ring: Arc::clone(&self.ring),
            images: self.inverse_images.clone(),
            inverse_images: self.images.clone(),
        }
    }

    /// Composition: (self . other)(f) = self(other(f)).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        assert!(self.ring.compatible(&other.ring), "ring mismatch");
        let images = other
            .images
            .iter()
            .map(|p| self.apply_poly(p))
            .collect::<Result<Vec<_>>>()?;
        let inverse_images = self
            .inverse_images
            .iter()
            .map(|p| p.subst(&other.inverse_images))
            .collect::<Result<Vec<_>>>()?;
        Ok(Automorphism {
            ring: Arc::clone(&self.ring),
            images,
            inverse_images,
        })
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inverse().pow(-k);
        }
        let mut out = Automorphism::identity(&self.ring);
        for _ in 0..k {
            out = self.compose(&out)?;
        }
        Ok(out)
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        match (self.compose(other), other.compose(self)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }

    /// Image of a point of the maximal spectrum: the point of phi(m) has
    /// j-th coordinate (phi^{-1}(h_j))(p).
    pub fn act_on_point(&self, p: &[Scalar]) -> Result<Vec<Scalar>> {
        self.inverse_images.iter().map(|f| f.eval(p)).collect()
    }
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

/// The word prod_i sigma_i^{alpha_i} for commuting generators.
pub fn lattice_to_auto(alpha: &LatticeElement, generators: &[Automorphism]) -> Result<Automorphism> {
    assert_eq!(alpha.rank(), generators.len(), "rank mismatch");
    for i in 0..generators.len() {
        for j in i + 1..generators.len() {
            if !generators[i].commutes_with(&generators[j]) {
                return Err(Error::NonCommutingGenerators(i, j));
            }
        }
    }
    lattice_to_auto_unchecked(alpha, generators)
}

/// As `lattice_to_auto` but without re-checking commutation; used internally
/// by contexts that validated their generators at construction.
pub(crate) fn lattice_to_auto_unchecked(
    alpha: &LatticeElement,
    generators: &[Automorphism],
) -> Result<Automorphism> {
    let ring = generators
        .first()
        .map(|g| Arc::clone(g.ring()))
        .expect("at least one generator");
    let mut out = Automorphism::identity(&ring);
    for (i, g) in generators.iter().enumerate() {
        if alpha.0[i] != 0 {
            out = out.compose(&g.pow(alpha.0[i])?)?;
        }
    }
    Ok(out)
}

// ---- named automorphisms ----

/// sigma(h_i) = h_i - 1 on variable `i`, identity elsewhere.
pub fn shift(ring: &Arc<PolyRing>, i: usize) -> Automorphism {
    let one = Poly::one(ring);
    let mut images = Vec::new();
    let mut inverse_images = Vec::new();
    for j in 0..ring.nvars() {
        let v = Poly::var(ring, j);
        if j == i {
            images.push(&v - &one);
            inverse_images.push(&v + &one);
        } else {
            images.push(v.clone());
            inverse_images.push(v);
        }
    }
    Automorphism::new(ring, images, inverse_images).expect("shift is invertible")
}

/// sigma(h_i) = q h_i on variable `i`, identity elsewhere.
pub fn q_scale(ring: &Arc<PolyRing>, i: usize) -> Result<Automorphism> {
    let q = Scalar::parameter(ring.field(), "q")
        .ok_or_else(|| Error::MissingParameter("q_scale".into(), "q".into()))?;
    let qinv = q.inv()?;
    let mut images = Vec::new();
    let mut inverse_images = Vec::new();
    for j in 0..ring.nvars() {
        let v = Poly::var(ring, j);
        if j == i {
            images.push(v.scale(&q));
            inverse_images.push(v.scale(&qinv));
        } else {
            images.push(v.clone());
            inverse_images.push(v);
        }
    }
    Automorphism::new(ring, images, inverse_images)
}

/// sigma(h_i) = q^{-1}(h_i - 1); the inverse is h_i -> q h_i + 1.
pub fn q_weyl(ring: &Arc<PolyRing>, i: usize) -> Result<Automorphism> {
    let q = Scalar::parameter(ring.field(), "q")
        .ok_or_else(|| Error::MissingParameter("q_weyl".into(), "q".into()))?;
    let qinv = q.inv()?;
    let one = Poly::one(ring);
    let mut images = Vec::new();
    let mut inverse_images = Vec::new();
    for j in 0..ring.nvars() {
        let v = Poly::var(ring, j);
        if j == i {
            images.push((&v - &one).scale(&qinv));
            inverse_images.push(&v.scale(&q) + &one);
        } else {
            images.push(v.clone());
            inverse_images.push(v);
        }
    }
    Automorphism::new(ring, images, inverse_images)
}

/// The Nagata automorphism on a block of three polynomial variables starting
/// at `offset`, identity on the rest. With w = x z + y^2 it sends
/// x -> x - 2wy - w^2 z, y -> y + wz, z -> z and preserves w.
pub fn nagata(ring: &Arc<PolyRing>, offset: usize) -> Result<Automorphism> {
    assert!(offset + 3 <= ring.nvars(), "needs three variables");
    assert!(!ring.is_laurent(), "defined on a polynomial ring");
    let x = Poly::var(ring, offset);
    let y = Poly::var(ring, offset + 1);
    let z = Poly::var(ring, offset + 2);
    let w = &(&x * &z) + &(&y * &y);
    let two = Poly::from_i64(ring, 2);
    let fwd_x = &(&x - &(&(&two * &w) * &y)) - &(&(&w * &w) * &z);
    let fwd_y = &y + &(&w * &z);
    let inv_x = &(&x + &(&(&two * &w) * &y)) - &(&(&w * &w) * &z);
    let inv_y = &y - &(&w * &z);
    let mut images = Vec::new();
    let mut inverse_images = Vec::new();
    for j in 0..ring.nvars() {
        if j == offset {
            images.push(fwd_x.clone());
            inverse_images.push(inv_x.clone());
        } else if j == offset + 1 {
            images.push(fwd_y.clone());
            inverse_images.push(inv_y.clone());
        } else {
            images.push(Poly::var(ring, j));
            inverse_images.push(Poly::var(ring, j));
        }
    }
    Automorphism::new(ring, images, inverse_images)
}

// ---- reflection groups ----

/// Element of G(m,p,n): a diagonal part (powers of the primitive m-th root)
/// and a permutation, composed as diag . perm.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ReflectionGroupElement {
    pub m: u32,
    pub diag: Vec<u32>,
    pub perm: Vec<usize>,
}

impl ReflectionGroupElement {
    pub fn identity(m: u32, n: usize) -> Self {
        ReflectionGroupElement {
            m,
            diag: vec![0; n],
            perm: (0..n).collect(),
        }
    }

    pub fn diagonal(m: u32, diag: Vec<u32>) -> Self {
        let n = diag.len();
        ReflectionGroupElement {
            m,
            diag: diag.into_iter().map(|c| c % m.max(1)).collect(),
            perm: (0..n).collect(),
        }
    }

    pub fn permutation(m: u32, perm: Vec<usize>) -> Self {
        let n = perm.len();
        ReflectionGroupElement {
            m,
            diag: vec![0; n],
            perm,
        }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn is_identity(&self) -> bool {
        self.diag.iter().all(|&c| c == 0) && self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Wreath-product composition: (d1,p1)(d2,p2) = (d1 + p1(d2), p1 p2).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m);
        assert_eq!(self.n(), other.n());
        let n = self.n();
        let mut diag = vec![0u32; n];
        for j in 0..n {
            diag[self.perm[j]] = (self.diag[self.perm[j]] + other.diag[j]) % self.m;
        }
        // positions untouched by the permutation image set above
        let mut covered = vec![false; n];
        for j in 0..n {
            covered[self.perm[j]] = true;
        }
        debug_assert!(covered.iter().all(|&c| c));
        let perm = (0..n).map(|i| self.perm[other.perm[i]]).collect();
        ReflectionGroupElement {
            m: self.m,
            diag,
            perm,
        }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut perm = vec![0usize; n];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p] = i;
        }
        let mut diag = vec![0u32; n];
        for i in 0..n {
            // (d,p)^{-1} = (-p^{-1}(d), p^{-1})
            diag[perm[i]] = (self.m - self.diag[i]) % self.m;
        }
        ReflectionGroupElement {
            m: self.m,
            diag,
            perm,
        }
    }

    /// Conjugation action on the sigma-lattice: the permutation part permutes
    /// coordinates, the diagonal part acts trivially.
    pub fn act_on_lattice(&self, v: &LatticeElement) -> LatticeElement {
        v.permute(&self.perm)
    }

    /// Action on coefficients in L: permutation of variables (the diagonal
    /// part fixes the defining ring). Variables may come in blocks when the
    /// ring has a multiple of n variables.
    pub fn act_on_poly(&self, f: &Poly) -> Poly {
        let nv = f.ring().nvars();
        let n = self.n();
        assert!(nv % n == 0, "variable count must be a multiple of n");
        let block = nv / n;
        if block == 1 {
            f.permute_vars(&self.perm)
        } else {
            f.permute_blocks(&self.perm, block)
        }
    }

    pub fn act_on_ratfun(&self, f: &RatFun) -> RatFun {
        let nv = f.ring().nvars();
        let n = self.n();
        assert!(nv % n == 0, "variable count must be a multiple of n");
        let block = nv / n;
        if block == 1 {
            f.permute_vars(&self.perm)
        } else {
            f.permute_blocks(&self.perm, block)
        }
    }

    pub fn diag_sum(&self) -> u32 {
        let s: u64 = self.diag.iter().map(|&c| c as u64).sum();
        (s % self.m.max(1) as u64) as u32
    }
}

impl fmt::Display for ReflectionGroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.diag.iter().map(|c| c.to_string()).collect();
        let p: Vec<String> = self.perm.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "diag({}) perm({})", d.join(","), p.join(","))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    out.sort();
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

pub const DEFAULT_GROUP_LIMIT: u64 = 100_000;

/// All elements of G(m,p,n): diagonals with coordinate sum divisible by p,
/// extended by all permutations. The order is m^n n! / p.
pub fn group_elements(m: u32, p: u32, n: usize, limit: u64) -> Result<Vec<ReflectionGroupElement>> {
    if p == 0 || m % p != 0 {
        return Err(Error::PNotDividesM { m, p });
    }
    let factorial: u64 = (1..=n as u64).product();
    let size = (m as u64).pow(n as u32) * factorial / p as u64;
    if size > limit {
        return Err(Error::GroupTooLarge { size, limit });
    }
    let perms = permutations(n);
    let mut out = Vec::with_capacity(size as usize);
    let mut diag = vec![0u32; n];
    loop {
        let sum: u64 = diag.iter().map(|&c| c as u64).sum();
        if sum % p as u64 == 0 {
            for perm in &perms {
                out.push(ReflectionGroupElement {
                    m,
                    diag: diag.clone(),
                    perm: perm.clone(),
                });
            }
        }
        // odometer over (Z/m)^n
        let mut i = 0;
        loop {
            if i == n {
                debug_assert_eq!(out.len() as u64, size);
                out.sort();
                return Ok(out);
            }
            diag[i] += 1;
            if diag[i] < m {
                break;
            }
            diag[i] = 0;
            i += 1;
        }
    }
}

/// Generators of G(m,p,n): adjacent transpositions, the first p-th diagonal
/// power, and neighbor diagonal differences.
pub fn group_generators(m: u32, p: u32, n: usize) -> Result<Vec<ReflectionGroupElement>> {
    if p == 0 || m % p != 0 {
        return Err(Error::PNotDividesM { m, p });
    }
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, i + 1);
        gens.push(ReflectionGroupElement::permutation(m, perm));
    }
    if m > 1 {
        if p < m {
            let mut d = vec![0u32; n];
            d[0] = p % m;
            gens.push(ReflectionGroupElement::diagonal(m, d));
        }
        if n > 1 {
            let mut d = vec![0u32; n];
            d[0] = 1;
            d[1] = m - 1;
            gens.push(ReflectionGroupElement::diagonal(m, d));
        }
        if n == 1 && p == m {
            // trivial diagonal part only
        }
    }
    if gens.is_empty() {
        gens.push(ReflectionGroupElement::identity(m, n));
    }
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ScalarField;

    fn ring(n: usize) -> Arc<PolyRing> {
        PolyRing::new(&ScalarField::rationals(), n, false)
    }

    #[test]
    fn shift_applies_by_substitution() {
        let r = ring(2);
        let s1 = shift(&r, 0);
        let h1 = Poly::var(&r, 0);
        let one = Poly::one(&r);
        let f = &h1 * &h1;
        let img = s1.apply_poly(&f).unwrap();
        let expected = &(&h1 - &one) * &(&h1 - &one);
        assert_eq!(img, expected);
        // identity fixes everything
        let id = Automorphism::identity(&r);
        assert_eq!(id.apply_poly(&f).unwrap(), f);
    }

    #[test]
    fn quantum_weyl_formula() {
        let field = ScalarField::new(1, &["q"]).unwrap();
        let r = PolyRing::new(&field, 1, false);
        let s = q_weyl(&r, 0).unwrap();
        let h = Poly::var(&r, 0);
        let one = Poly::one(&r);
        let qinv = Scalar::parameter(&field, "q").unwrap().inv().unwrap();
        let expected = (&h - &one).scale(&qinv);
        assert_eq!(s.apply_poly(&h).unwrap(), expected);
    }

    #[test]
    fn lattice_words_compose() {
        let r = ring(2);
        let gens = vec![shift(&r, 0), shift(&r, 1)];
        let a = lattice_to_auto(&LatticeElement(vec![1, 0]), &gens).unwrap();
        let h1 = Poly::var(&r, 0);
        let h2 = Poly::var(&r, 1);
        let one = Poly::one(&r);
        assert_eq!(a.apply_poly(&h1).unwrap(), &h1 - &one);
        assert_eq!(a.apply_poly(&h2).unwrap(), h2);
        // zero word is the identity
        let id = lattice_to_auto(&LatticeElement(vec![0, 0]), &gens).unwrap();
        assert!(id.is_identity());
        // homomorphism on a sample pair
        let b = lattice_to_auto(&LatticeElement(vec![2, -1]), &gens).unwrap();
        let ab = a.compose(&b).unwrap();
        let sum = lattice_to_auto(&LatticeElement(vec![3, -1]), &gens).unwrap();
        assert_eq!(ab, sum);
    }

    #[test]
    fn quantum_scaling_word() {
        let field = ScalarField::new(1, &["q"]).unwrap();
        let r = PolyRing::new(&field, 1, false);
        let gens = vec![q_scale(&r, 0).unwrap()];
        let a = lattice_to_auto(&LatticeElement(vec![2]), &gens).unwrap();
        let h = Poly::var(&r, 0);
        let q2 = Scalar::parameter(&field, "q").unwrap().pow(2).unwrap();
        assert_eq!(a.apply_poly(&h).unwrap(), h.scale(&q2));
    }

    #[test]
    fn point_action_examples() {
        let r = ring(2);
        let s1 = shift(&r, 0);
        let f = r.field();
        let p = vec![Scalar::from_i64(f, 3), Scalar::from_i64(f, 5)];
        let q = s1.act_on_point(&p).unwrap();
        assert_eq!(q, vec![Scalar::from_i64(f, 4), Scalar::from_i64(f, 5)]);
        // identity
        let id = Automorphism::identity(&r);
        assert_eq!(id.act_on_point(&p).unwrap(), p);
    }

    #[test]
    fn quantum_point_action() {
        let field = ScalarField::new(1, &["q"]).unwrap();
        let r = PolyRing::new(&field, 1, false);
        let s = q_weyl(&r, 0).unwrap();
        let p1 = Scalar::from_i64(&field, 7);
        let q = Scalar::parameter(&field, "q").unwrap();
        let moved = s.act_on_point(&[p1.clone()]).unwrap();
        // sigma^{-1}(h) = q h + 1 evaluated at p
        let expected = &(&q * &p1) + &Scalar::one(&field);
        assert_eq!(moved[0], expected);
    }

    #[test]
    fn nagata_passes_inverse_check() {
        let r = ring(3);
        let a = nagata(&r, 0).unwrap();
        assert!(!a.is_identity());
        // w = x z + y^2 is preserved
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let z = Poly::var(&r, 2);
        let w = &(&x * &z) + &(&y * &y);
        assert_eq!(a.apply_poly(&w).unwrap(), w);
    }

    #[test]
    fn laurent_violation_surfaces() {
        let f = ScalarField::rationals();
        let r = PolyRing::new(&f, 1, true);
        let h = Poly::var(&r, 0);
        let one = Poly::one(&r);
        // h -> h + 1 composes correctly on the variable but is not an
        // automorphism of the Laurent ring: negative powers have no image
        let a = Automorphism::new(&r, vec![&h + &one], vec![&h - &one]).unwrap();
        let hinv = Poly::monomial(&r, crate::poly::Mono(vec![-1]), Scalar::one(&f));
        assert!(matches!(
            a.apply_poly(&hinv),
            Err(Error::LaurentViolation(_))
        ));
    }

    #[test]
    fn non_commuting_generators_rejected() {
        let r = ring(3);
        let gens = vec![shift(&r, 0), nagata(&r, 0).unwrap(), shift(&r, 2)];
        let err = lattice_to_auto(&LatticeElement(vec![1, 1, 0]), &gens);
        assert!(matches!(err, Err(Error::NonCommutingGenerators(0, 1))));
    }

    #[test]
    fn point_action_failure_under_laurent() {
        let f = ScalarField::rationals();
        let r = PolyRing::new(&f, 1, true);
        let h = Poly::var(&r, 0);
        let hinv = Poly::monomial(&r, crate::poly::Mono(vec![-1]), Scalar::one(&f));
        // the inversion h -> h^{-1} is a self-inverse automorphism
        let inv = Automorphism::new(&r, vec![hinv.clone()], vec![hinv]).unwrap();
        assert!(inv
            .act_on_point(&[Scalar::from_i64(&f, 2)])
            .is_ok());
        assert!(matches!(
            inv.act_on_point(&[Scalar::zero(&f)]),
            Err(Error::ZeroCoordinate(_))
        ));
        let _ = h;
    }

    #[test]
    fn group_orders() {
        assert_eq!(group_elements(1, 1, 3, 1000).unwrap().len(), 6);
        assert_eq!(group_elements(2, 2, 2, 1000).unwrap().len(), 4);
        assert_eq!(group_elements(2, 1, 2, 1000).unwrap().len(), 8);
        assert_eq!(group_elements(3, 3, 2, 1000).unwrap().len(), 6);
        assert_eq!(group_elements(4, 2, 2, 1000).unwrap().len(), 16);
        assert_eq!(group_elements(2, 2, 3, 1000).unwrap().len(), 24);
        assert!(matches!(
            group_elements(4, 3, 2, 1000),
            Err(Error::PNotDividesM { .. })
        ));
        assert!(matches!(
            group_elements(6, 1, 4, 10),
            Err(Error::GroupTooLarge { .. })
        ));
    }

    #[test]
    fn composition_is_associative_and_inverse_works() {
        let g = group_elements(2, 1, 2, 1000).unwrap();
        for a in &g {
            let inv = a.inverse();
            assert!(a.compose(&inv).is_identity());
            assert!(inv.compose(a).is_identity());
            for b in &g {
                for c in &g {
                    let left = a.compose(b).compose(c);
                    let right = a.compose(&b.compose(c));
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn generators_generate() {
        for (m, p, n) in [(2u32, 1u32, 2usize), (2, 2, 2), (3, 3, 2), (4, 2, 2)] {
            let gens = group_generators(m, p, n).unwrap();
            let all = group_elements(m, p, n, 10_000).unwrap();
            // closure of the generators
            let mut seen = vec![ReflectionGroupElement::identity(m, n)];
            loop {
                let mut grew = false;
                let snapshot = seen.clone();
                for a in &snapshot {
                    for g in &gens {
                        let c = g.compose(a);
                        if !seen.contains(&c) {
                            seen.push(c);
                            grew = true;
                        }
                    }
                }
                if !grew {
                    break;
                }
            }
            seen.sort();
            assert_eq!(seen, all, "generators fail for G({m},{p},{n})");
        }
    }
}
