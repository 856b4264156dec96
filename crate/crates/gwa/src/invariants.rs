//! Reflection-group actions on generalized Weyl algebras and the invariant
//! machinery built on them: the cyclic-invariant GWA, explicit invariant
//! generators with their skew-ring images, the eigenspace decomposition for
//! G(m,p,n) inside G(m,1,n), and principal / rational Galois-order checks.

use crate::algebra::{GwaElement, GwaPresentation};
use crate::autos::{group_elements, group_generators, ReflectionGroupElement, DEFAULT_GROUP_LIMIT};
use crate::error::{Error, Result};
use crate::lattice::{GenerationMode, LatticeElement, LatticeSubmonoidSpec};
use crate::poly::{Poly, PolyRing};
use crate::ratfun::RatFun;
use crate::scalars::Scalar;
use crate::skew::SkewElement;
use std::fmt;
use std::sync::Arc;

/// Action of a reflection-group element on a GWA element. The permutation
/// part relabels variables, generators and word exponents; a diagonal part
/// (c_1..c_n) scales the word v_alpha by zeta^{<c, alpha>} and fixes D.
pub fn gwa_act(g: &ReflectionGroupElement, u: &GwaElement) -> Result<GwaElement> {
    let pres = u.presentation();
    assert_eq!(g.n(), pres.rank(), "group degree must match the rank");
    let field = pres.ring().field();
    let mut out = GwaElement::zero(pres);
    for (alpha, d) in u.terms() {
        let moved = g.act_on_lattice(alpha);
        let phase: i64 = g
            .diag
            .iter()
            .zip(&moved.0)
            .map(|(&c, &a)| c as i64 * a)
            .sum();
        let scale = Scalar::root_of_unity(field, g.m, phase)?;
        let coeff = g.act_on_poly(d).scale(&scale);
        out.add_term(moved, coeff);
    }
    Ok(out)
}

/// Reynolds operator on the GWA: average the group action.
pub fn gwa_reynolds(group: &[ReflectionGroupElement], u: &GwaElement) -> Result<GwaElement> {
    assert!(!group.is_empty());
    let pres = u.presentation();
    let mut acc = GwaElement::zero(pres);
    for g in group {
        acc = &acc + &gwa_act(g, u)?;
    }
    let inv_order = Scalar::from_frac(pres.ring().field(), 1, group.len() as i64);
    Ok(acc.scale_scalar(&inv_order))
}

pub fn gwa_is_invariant(group: &[ReflectionGroupElement], u: &GwaElement) -> Result<bool> {
    for g in group {
        if gwa_act(g, u)? != *u {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The invariant subalgebra of a rank-1 GWA under the diagonal cyclic group
/// of order m, presented again as a GWA: D(a_m, sigma^m) with
/// a_m = a sigma^{-1}(a) ... sigma^{-(m-1)}(a), via X^m -> X', Y^m -> Y'.
#[derive(Debug)]
pub struct CyclicInvariants {
    pub child: Arc<GwaPresentation>,
    pub a_m: Poly,
    pub m: u32,
}

pub fn cyclic_invariant_gwa(pres: &Arc<GwaPresentation>, m: u32) -> Result<CyclicInvariants> {
    assert_eq!(pres.rank(), 1, "cyclic invariants start from rank one");
    assert!(m >= 1);
    let a_m = pres.cyclic_twist(0, m)?;
    let sigma_m = pres.sigma()[0].pow(m as i64)?;
    let child = GwaPresentation::new(pres.ring(), vec![a_m.clone()], vec![sigma_m])?;
    // the generator map X^m -> X', Y^m -> Y' respects the defining relations:
    // Y^m X^m in the parent must equal a_m, and X^m Y^m must equal sigma^m(a_m)
    let x = GwaElement::x(pres, 0).try_pow(m)?;
    let y = GwaElement::y(pres, 0).try_pow(m)?;
    let yx = y.try_mul(&x)?;
    if yx != GwaElement::from_poly(pres, a_m.clone()) {
        return Err(Error::Validation {
            field: "cyclic_invariant_gwa".into(),
            msg: format!("Y^{m} X^{m} = {yx} differs from a_m = {a_m}"),
        });
    }
    let xy = x.try_mul(&y)?;
    let sam = child.sigma()[0].apply_poly(&a_m)?;
    if xy != GwaElement::from_poly(pres, sam) {
        return Err(Error::Validation {
            field: "cyclic_invariant_gwa".into(),
            msg: "X^m Y^m differs from sigma^m(a_m)".into(),
        });
    }
    Ok(CyclicInvariants { child, a_m, m })
}

/// Elementary symmetric polynomial e_k(h_1..h_n).
pub fn elementary_symmetric(ring: &Arc<PolyRing>, k: usize) -> Poly {
    let n = ring.nvars();
    assert!(k >= 1 && k <= n);
    let mut acc = Poly::zero(ring);
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let mut term = Poly::one(ring);
        for &i in &subset {
            term = &term * &Poly::var(ring, i);
        }
        acc = &acc + &term;
        // next k-subset of {0..n-1}
        let mut i = k;
        loop {
            if i == 0 {
                return acc;
            }
            i -= 1;
            if subset[i] != i + n - k {
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Requires the presentation to be symmetric-group equivariant: relabeling
/// variables permutes the defining data.
pub fn check_sn_equivariance(pres: &Arc<GwaPresentation>) -> Result<()> {
    let n = pres.rank();
    if n != pres.ring().nvars() {
        return Err(Error::Validation {
            field: "algebra".into(),
            msg: "rank must equal the number of variables".into(),
        });
    }
    for t in 0..n.saturating_sub(1) {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(t, t + 1);
        for i in 0..n {
            let moved_a = pres.a()[i].permute_vars(&perm);
            if moved_a != pres.a()[perm[i]] {
                return Err(Error::Validation {
                    field: "algebra".into(),
                    msg: format!("a_{} does not relabel to a_{}", i + 1, perm[i] + 1),
                });
            }
            for j in 0..n {
                let img = pres.sigma()[i].images()[j].permute_vars(&perm);
                let expect = &pres.sigma()[perm[i]].images()[perm[j]];
                if img != *expect {
                    return Err(Error::Validation {
                        field: "algebra".into(),
                        msg: format!("sigma_{} does not relabel to sigma_{}", i + 1, perm[i] + 1),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Explicit generators of the G(m,p,n)-invariant subalgebra together with
/// their expected skew-ring images and the lattice object their supports
/// must generate.
#[derive(Debug)]
pub struct InvariantGenerators {
    pub gwa_side: Vec<(String, GwaElement)>,
    pub expected_images: Vec<SkewElement>,
    pub gamma: Vec<Poly>,
    pub lattice_spec: LatticeSubmonoidSpec,
    pub group: Vec<ReflectionGroupElement>,
}

/// Builds the symmetrized generators: orbit sums of X_i^m and Y_i^m, the
/// product word (X_1...X_n)^{m/p}, and the elementary symmetric generators
/// of the Harish-Chandra subalgebra. Every emitted element is verified to be
/// fixed by the group generators; the images follow
/// X_i^m -> e_i^m, Y_i^m -> a_{i,m} e_i^{-m}, (X_1..X_n)^{m/p} -> (e_1..e_n)^{m/p}.
pub fn invariant_generators(
    pres: &Arc<GwaPresentation>,
    m: u32,
    p_div: u32,
    mode: GenerationMode,
) -> Result<InvariantGenerators> {
    if p_div == 0 || m % p_div != 0 {
        return Err(Error::PNotDividesM { m, p: p_div });
    }
    check_sn_equivariance(pres)?;
    let n = pres.rank();
    let ring = pres.ring();
    let ctx = pres.skew_context();
    let mp = (m / p_div) as i64;
    let mut gwa_side: Vec<(String, GwaElement)> = Vec::new();
    let mut expected_images: Vec<SkewElement> = Vec::new();

    let mut sum_x = GwaElement::zero(pres);
    let mut sum_y = GwaElement::zero(pres);
    let mut img_x = SkewElement::zero(&ctx);
    let mut img_y = SkewElement::zero(&ctx);
    for i in 0..n {
        let mi = LatticeElement::basis(n, i).scale(m as i64);
        sum_x = &sum_x + &GwaElement::monomial(pres, mi.clone(), Poly::one(ring));
        img_x = &img_x + &SkewElement::monomial(&ctx, RatFun::one(ring), mi.clone());
        let a_im = pres.cyclic_twist(i, m)?;
        sum_y = &sum_y + &GwaElement::monomial(pres, mi.neg(), Poly::one(ring));
        img_y = &img_y + &SkewElement::monomial(&ctx, RatFun::from_poly(a_im), mi.neg());
    }
    gwa_side.push((format!("sum_i X_i^{m}"), sum_x));
    expected_images.push(img_x);
    gwa_side.push((format!("sum_i Y_i^{m}"), sum_y));
    expected_images.push(img_y);

    let diag_word = LatticeElement(vec![mp; n]);
    gwa_side.push((
        format!("(X_1...X_{n})^{mp}"),
        GwaElement::monomial(pres, diag_word.clone(), Poly::one(ring)),
    ));
    expected_images.push(SkewElement::monomial(
        &ctx,
        RatFun::one(ring),
        diag_word.clone(),
    ));

    let mut gamma = Vec::new();
    for k in 1..=n {
        let e_k = elementary_symmetric(ring, k);
        gamma.push(e_k.clone());
        gwa_side.push((format!("e_{k}(h)"), GwaElement::from_poly(pres, e_k.clone())));
        expected_images.push(SkewElement::from_ratfun(&ctx, RatFun::from_poly(e_k)));
    }
    if ring.is_laurent() {
        let inv = elementary_symmetric(ring, n).inv_unit()?;
        gamma.push(inv.clone());
        gwa_side.push((
            "e_n(h)^-1".to_string(),
            GwaElement::from_poly(pres, inv.clone()),
        ));
        expected_images.push(SkewElement::from_ratfun(&ctx, RatFun::from_poly(inv)));
    }

    let group = group_generators(m, p_div, n)?;
    for (idx, (name, u)) in gwa_side.iter().enumerate() {
        if !gwa_is_invariant(&group, u)? {
            return Err(Error::Validation {
                field: format!("invariant_generators[{idx}]"),
                msg: format!("{name} is not fixed by the group"),
            });
        }
    }

    let mut spec_gens: Vec<LatticeElement> = (0..n)
        .map(|i| LatticeElement::basis(n, i).scale(m as i64))
        .collect();
    spec_gens.push(diag_word);
    Ok(InvariantGenerators {
        gwa_side,
        expected_images,
        gamma,
        lattice_spec: LatticeSubmonoidSpec {
            generators: spec_gens,
            mode,
        },
        group,
    })
}

/// One eigencomponent of the G(m,p,n)-invariant decomposition. Inside the
/// skew monoid ring the diagonal word is a unit, so the component factors
/// exactly as (e_1..e_n)^{k m/p} times a cofactor supported on the
/// sigma^m-sublattice and fixed by the permutations.
#[derive(Debug)]
pub struct DecompositionComponent {
    pub k: u32,
    pub component: GwaElement,
    pub cofactor: SkewElement,
}

/// Split a G(m,p,n)-invariant element into eigencomponents of the coset
/// representative Xi = diag(1,0,..,0) and verify the factorization and the
/// reassembly. The component count never exceeds p.
pub fn decomposition_check(
    u: &GwaElement,
    m: u32,
    p_div: u32,
) -> Result<Vec<DecompositionComponent>> {
    if p_div == 0 || m % p_div != 0 {
        return Err(Error::PNotDividesM { m, p: p_div });
    }
    let pres = u.presentation();
    let n = pres.rank();
    let field = pres.ring().field();
    let group = group_elements(m, p_div, n, DEFAULT_GROUP_LIMIT)?;
    if !gwa_is_invariant(&group, u)? {
        return Err(Error::NotInvariant(0));
    }
    let mp = (m / p_div) as i64;
    // bucket the normal-form terms by the residue class of the exponents
    let mut buckets: Vec<GwaElement> = (0..p_div).map(|_| GwaElement::zero(pres)).collect();
    for (alpha, d) in u.terms() {
        let r0 = alpha.0[0].rem_euclid(m as i64);
        debug_assert!(
            alpha.0.iter().all(|&a| a.rem_euclid(m as i64) == r0),
            "invariant element with incoherent residues"
        );
        debug_assert_eq!(r0 % mp, 0, "residue not a multiple of m/p");
        let k = (r0 / mp) as usize % p_div as usize;
        buckets[k].add_term(alpha.clone(), d.clone());
    }
    let xi = reflection_xi(m, n);
    let omega_exp = mp; // Xi acts on component k with eigenvalue zeta^(k m/p)
    let ctx = pres.skew_context();
    let perms = group_elements(1, 1, n, DEFAULT_GROUP_LIMIT)?;
    let m_sublattice = LatticeSubmonoidSpec::group(
        (0..n)
            .map(|i| LatticeElement::basis(n, i).scale(m as i64))
            .collect(),
    );
    let mut out = Vec::new();
    let mut reassembled = GwaElement::zero(pres);
    for (k, component) in buckets.into_iter().enumerate() {
        if component.is_zero() {
            continue;
        }
        // eigenvalue check: Xi(component) = zeta^{k m/p} component
        let acted = gwa_act(&xi, &component)?;
        let eig = Scalar::root_of_unity(field, m, k as i64 * omega_exp)?;
        if acted != component.scale_scalar(&eig) {
            return Err(Error::Validation {
                field: "decomposition_check".into(),
                msg: format!("component {k} is not a Xi-eigenvector"),
            });
        }
        // factor through the diagonal word inside the skew ring, where
        // e((m/p)...) is a unit: cofactor = w^{-k} embed(component)
        let w = SkewElement::monomial(&ctx, RatFun::one(pres.ring()), LatticeElement(vec![mp; n]));
        let w_back = w.inv_unit()?.try_pow(k as u32)?;
        let cofactor = w_back.try_mul(&component.embed_in(&ctx)?)?;
        for v in cofactor.support() {
            if !m_sublattice.membership(&v, 1).is_member() {
                return Err(Error::Validation {
                    field: "decomposition_check".into(),
                    msg: format!(
                        "cofactor of component {k} leaves the sigma^m sublattice at {v}"
                    ),
                });
            }
        }
        if !cofactor.is_invariant(&perms) {
            return Err(Error::Validation {
                field: "decomposition_check".into(),
                msg: format!("cofactor of component {k} is not permutation-invariant"),
            });
        }
        reassembled = &reassembled + &component;
        out.push(DecompositionComponent {
            k: k as u32,
            component,
            cofactor,
        });
    }
    if reassembled != *u {
        return Err(Error::Validation {
            field: "decomposition_check".into(),
            msg: "components do not reassemble the input".into(),
        });
    }
    // the full operator identity: prod_i (Xi - zeta^{i m/p}) annihilates u
    let mut v = u.clone();
    for i in 0..p_div {
        let eig = Scalar::root_of_unity(field, m, i as i64 * omega_exp)?;
        v = &gwa_act(&xi, &v)? - &v.scale_scalar(&eig);
    }
    if !v.is_zero() {
        return Err(Error::Validation {
            field: "decomposition_check".into(),
            msg: "operator product does not annihilate the input".into(),
        });
    }
    Ok(out)
}

/// The coset representative used for the eigenspace split: the diagonal
/// element (1,0,...,0) with trivial permutation.
pub fn reflection_xi(m: u32, n: usize) -> ReflectionGroupElement {
    let mut d = vec![0u32; n];
    if !d.is_empty() {
        d[0] = 1 % m.max(1);
    }
    ReflectionGroupElement::diagonal(m, d)
}

// ---- principal and rational checks ----

#[derive(Clone, Debug, PartialEq)]
pub enum PrincipalOutcome {
    InGamma(Poly),
    NotPolynomial(RatFun),
    NotInvariant(Poly),
}

#[derive(Clone, Debug)]
pub struct PrincipalResult {
    pub generator: String,
    pub sample: String,
    pub outcome: PrincipalOutcome,
}

#[derive(Clone, Debug, Default)]
pub struct PrincipalReport {
    pub results: Vec<PrincipalResult>,
}

impl PrincipalReport {
    pub fn all_pass(&self) -> bool {
        self.results
            .iter()
            .all(|r| matches!(r.outcome, PrincipalOutcome::InGamma(_)))
    }

    pub fn failures(&self) -> impl Iterator<Item = &PrincipalResult> {
        self.results
            .iter()
            .filter(|r| !matches!(r.outcome, PrincipalOutcome::InGamma(_)))
    }
}

impl fmt::Display for PrincipalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            match &r.outcome {
                PrincipalOutcome::InGamma(p) => {
                    writeln!(f, "ok   {} on {} -> {}", r.generator, r.sample, p)?
                }
                PrincipalOutcome::NotPolynomial(rf) => writeln!(
                    f,
                    "FAIL {} on {} -> {} (not polynomial)",
                    r.generator, r.sample, rf
                )?,
                PrincipalOutcome::NotInvariant(p) => writeln!(
                    f,
                    "FAIL {} on {} -> {} (not invariant)",
                    r.generator, r.sample, p
                )?,
            }
        }
        Ok(())
    }
}

/// For every generator u and invariant sample gamma, evaluate(u, gamma) must
/// land back in the invariant polynomial subalgebra: the coefficients must
/// clear denominators and the result must be group-invariant.
pub fn principal_check(
    gens: &[(String, SkewElement)],
    gamma_samples: &[Poly],
    group: &[ReflectionGroupElement],
) -> Result<PrincipalReport> {
    let mut report = PrincipalReport::default();
    for (name, u) in gens {
        for gamma in gamma_samples {
            let value = u.evaluate(&RatFun::from_poly(gamma.clone()))?;
            let outcome = match value.to_poly() {
                None => PrincipalOutcome::NotPolynomial(value),
                Some(p) => {
                    let invariant = group.iter().all(|g| g.act_on_poly(&p) == p);
                    if invariant {
                        PrincipalOutcome::InGamma(p)
                    } else {
                        PrincipalOutcome::NotInvariant(p)
                    }
                }
            };
            report.results.push(PrincipalResult {
                generator: name.clone(),
                sample: format!("{gamma}"),
                outcome,
            });
        }
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct RationalWitness {
    pub invariant: bool,
    pub cleared: std::result::Result<Vec<Poly>, LatticeElement>,
}

impl RationalWitness {
    pub fn holds(&self) -> bool {
        self.invariant && self.cleared.is_ok()
    }
}

/// x passes with the character witness d_chi when x is group-invariant and
/// every coefficient of d_chi * x is polynomial.
pub fn rational_witness_check(
    x: &SkewElement,
    d_chi: &Poly,
    group: &[ReflectionGroupElement],
) -> RationalWitness {
    assert!(!d_chi.is_zero(), "d_chi must be nonzero");
    let invariant = x.is_invariant(group);
    let mut cleared = Vec::new();
    let mut failure: Option<LatticeElement> = None;
    for (v, coeff) in x.terms() {
        let scaled = coeff.scale_poly(d_chi);
        match scaled.to_poly() {
            Some(p) => cleared.push(p),
            None => {
                failure = Some(v.clone());
                break;
            }
        }
    }
    RationalWitness {
        invariant,
        cleared: match failure {
            None => Ok(cleared),
            Some(v) => Err(v),
        },
    }
}

/// The sign-character witness for S_n: prod_{i<j} (h_i - h_j). Each
/// transposition flips its sign.
pub fn dchi_sign_sn(ring: &Arc<PolyRing>) -> Poly {
    let n = ring.nvars();
    assert!(n >= 2);
    let mut acc = Poly::one(ring);
    for i in 0..n {
        for j in i + 1..n {
            acc = &acc * &(&Poly::var(ring, i) - &Poly::var(ring, j));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{catalog, CatalogAlgebra};
    use crate::scalars::ScalarField;

    fn weyl(n: usize, order: u32) -> Arc<GwaPresentation> {
        let field = ScalarField::new(order, &[]).unwrap();
        match catalog("weyl", n, &field).unwrap() {
            CatalogAlgebra::Gwa(p) => p,
            _ => unreachable!(),
        }
    }

    #[test]
    fn permutation_action_on_generators() {
        let p = weyl(2, 1);
        let swap = ReflectionGroupElement::permutation(1, vec![1, 0]);
        let x1 = GwaElement::x(&p, 0);
        let x2 = GwaElement::x(&p, 1);
        assert_eq!(gwa_act(&swap, &x1).unwrap(), x2);
        let id = ReflectionGroupElement::identity(1, 2);
        assert_eq!(gwa_act(&id, &x1).unwrap(), x1);
    }

    #[test]
    fn diagonal_action_scales_x() {
        let p = weyl(2, 2);
        let g = ReflectionGroupElement::diagonal(2, vec![1, 0]);
        let x1 = GwaElement::x(&p, 0);
        let minus = Scalar::from_i64(p.ring().field(), -1);
        assert_eq!(gwa_act(&g, &x1).unwrap(), x1.scale_scalar(&minus));
        // Y_1 picks up the inverse phase
        let y1 = GwaElement::y(&p, 0);
        assert_eq!(gwa_act(&g, &y1).unwrap(), y1.scale_scalar(&minus));
        // h is fixed
        let d = GwaElement::from_poly(&p, Poly::var(p.ring(), 0));
        assert_eq!(gwa_act(&g, &d).unwrap(), d);
    }

    #[test]
    fn action_is_algebra_automorphism() {
        let p = weyl(2, 2);
        let group = group_elements(2, 1, 2, 1000).unwrap();
        let x1 = GwaElement::x(&p, 0);
        let y2 = GwaElement::y(&p, 1);
        let h1 = GwaElement::from_poly(&p, Poly::var(p.ring(), 0));
        let u = &x1 + &h1;
        let v = y2.try_mul(&x1).unwrap();
        for g in &group {
            let lhs = gwa_act(g, &u.try_mul(&v).unwrap()).unwrap();
            let rhs = gwa_act(g, &u)
                .unwrap()
                .try_mul(&gwa_act(g, &v).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn action_composition_law() {
        let p = weyl(2, 4);
        let group = group_elements(4, 2, 2, 1000).unwrap();
        let x1 = GwaElement::x(&p, 0);
        let y2 = GwaElement::y(&p, 1);
        let h1 = GwaElement::from_poly(&p, Poly::var(p.ring(), 0));
        let u = &x1.try_mul(&y2).unwrap() + &h1;
        for g in &group {
            for h in &group {
                let lhs = gwa_act(&g.compose(h), &u).unwrap();
                let rhs = gwa_act(g, &gwa_act(h, &u).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "composition law fails at {g} . {h}");
            }
        }
    }

    #[test]
    fn cyclic_invariants_weyl_and_quantum() {
        let p = weyl(1, 2);
        let inv = cyclic_invariant_gwa(&p, 2).unwrap();
        let ring = p.ring();
        let h = Poly::var(ring, 0);
        let one = Poly::one(ring);
        assert_eq!(inv.a_m, &h * &(&h + &one));
        // sigma^2(h) = h - 2
        let two = Poly::from_i64(ring, 2);
        assert_eq!(inv.child.sigma()[0].apply_poly(&h).unwrap(), &h - &two);
        // m = 1 reproduces the parent data
        let triv = cyclic_invariant_gwa(&p, 1).unwrap();
        assert_eq!(triv.a_m, h);

        // quantum plane: a_2 = q^{-1} h^2, sigma^2(h) = q^2 h
        let qf = ScalarField::new(2, &["q"]).unwrap();
        let CatalogAlgebra::Gwa(qp) = catalog("quantum_plane", 1, &qf).unwrap() else {
            unreachable!()
        };
        let qinv = cyclic_invariant_gwa(&qp, 2).unwrap();
        let h = Poly::var(qp.ring(), 0);
        let qinv_scalar = Scalar::parameter(&qf, "q").unwrap().inv().unwrap();
        assert_eq!(qinv.a_m, (&h * &h).scale(&qinv_scalar));
        let q2 = Scalar::parameter(&qf, "q").unwrap().pow(2).unwrap();
        assert_eq!(qinv.child.sigma()[0].apply_poly(&h).unwrap(), h.scale(&q2));
    }

    #[test]
    fn invariant_generator_images_weyl_s2() {
        let p = weyl(2, 1);
        let gens = invariant_generators(&p, 1, 1, GenerationMode::Group).unwrap();
        let ctx = p.skew_context();
        // images: e1 + e2 and h1 e1^{-1} + h2 e2^{-1}
        let e1 = SkewElement::generator(&ctx, 0);
        let e2 = SkewElement::generator(&ctx, 1);
        assert_eq!(gens.expected_images[0], &e1 + &e2);
        let h1 = Poly::var(p.ring(), 0);
        let h2 = Poly::var(p.ring(), 1);
        let y_img = &SkewElement::monomial(
            &ctx,
            RatFun::from_poly(h1),
            LatticeElement(vec![-1, 0]),
        ) + &SkewElement::monomial(&ctx, RatFun::from_poly(h2), LatticeElement(vec![0, -1]));
        assert_eq!(gens.expected_images[1], y_img);
        // embedding matches the expected images exactly
        for ((name, u), img) in gens.gwa_side.iter().zip(&gens.expected_images) {
            assert_eq!(u.embed_in(&ctx).unwrap(), *img, "image mismatch for {name}");
        }
    }

    #[test]
    fn invariant_generators_g222() {
        let p = weyl(2, 2);
        let gens = invariant_generators(&p, 2, 2, GenerationMode::Group).unwrap();
        let ctx = p.skew_context();
        // includes (X1 X2)^1 with image e(1,1)
        let w = gens
            .gwa_side
            .iter()
            .position(|(name, _)| name.starts_with("(X_1"))
            .unwrap();
        assert_eq!(
            gens.expected_images[w],
            SkewElement::monomial(&ctx, RatFun::one(p.ring()), LatticeElement(vec![1, 1]))
        );
        // Y_i^2 image coefficients are h_i (h_i + 1)
        let h1 = Poly::var(p.ring(), 0);
        let one = Poly::one(p.ring());
        let a12 = &h1 * &(&h1 + &one);
        let y_img = &gens.expected_images[1];
        assert_eq!(
            y_img.coefficient(&LatticeElement(vec![-2, 0])),
            Some(&RatFun::from_poly(a12))
        );
        for ((name, u), img) in gens.gwa_side.iter().zip(&gens.expected_images) {
            assert_eq!(u.embed_in(&ctx).unwrap(), *img, "image mismatch for {name}");
        }
        // supports generate the configured lattice object
        let outcome = crate::skew::generates(&gens.expected_images, &gens.lattice_spec, 16);
        assert!(outcome.holds(), "{outcome:?}");
    }

    #[test]
    fn decomposition_examples() {
        let p = weyl(2, 2);
        // u = X1 X2 with (m,p) = (2,2): single component k = 1, cofactor 1
        let u = GwaElement::x(&p, 0).try_mul(&GwaElement::x(&p, 1)).unwrap();
        let comps = decomposition_check(&u, 2, 2).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].k, 1);
        let ctx = p.skew_context();
        assert_eq!(comps[0].cofactor, SkewElement::one(&ctx));
        // u = X1^2 + X2^2: single component k = 0
        let u = &GwaElement::x(&p, 0).try_pow(2).unwrap()
            + &GwaElement::x(&p, 1).try_pow(2).unwrap();
        let comps = decomposition_check(&u, 2, 2).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].k, 0);
        // zero decomposes into nothing
        let comps = decomposition_check(&GwaElement::zero(&p), 2, 2).unwrap();
        assert!(comps.is_empty());
        // non-invariant input is rejected
        let err = decomposition_check(&GwaElement::x(&p, 0), 2, 2);
        assert!(matches!(err, Err(Error::NotInvariant(_))));
    }

    #[test]
    fn principal_check_weyl_s2() {
        let p = weyl(2, 1);
        let gens = invariant_generators(&p, 1, 1, GenerationMode::Group).unwrap();
        let labeled: Vec<(String, SkewElement)> = gens
            .gwa_side
            .iter()
            .zip(&gens.expected_images)
            .map(|((n, _), img)| (n.clone(), img.clone()))
            .collect();
        let group = group_elements(1, 1, 2, 100).unwrap();
        let report = principal_check(&labeled, &gens.gamma, &group).unwrap();
        assert!(report.all_pass(), "{report}");
        // the identity generator returns gamma itself
        let ctx = p.skew_context();
        let one = vec![("1".to_string(), SkewElement::one(&ctx))];
        let h1 = Poly::var(p.ring(), 0);
        let h2 = Poly::var(p.ring(), 1);
        let gamma = vec![&h1 + &h2];
        let rep = principal_check(&one, &gamma, &group).unwrap();
        match &rep.results[0].outcome {
            PrincipalOutcome::InGamma(v) => assert_eq!(*v, &h1 + &h2),
            other => panic!("{other:?}"),
        }
        // a non-principal probe fails with a witness
        let coeff = RatFun::new(Poly::one(p.ring()), &h1 - &h2).unwrap();
        let probe = vec![(
            "(h1 - h2)^-1 e(0,0)".to_string(),
            SkewElement::from_ratfun(&ctx, coeff),
        )];
        let gamma1 = vec![Poly::one(p.ring())];
        let rep = principal_check(&probe, &gamma1, &group).unwrap();
        assert!(!rep.all_pass());
        assert!(matches!(
            rep.results[0].outcome,
            PrincipalOutcome::NotPolynomial(_)
        ));
    }

    #[test]
    fn rational_witness_examples() {
        let p = weyl(2, 1);
        let ctx = p.skew_context();
        let ring = p.ring();
        let h1 = Poly::var(ring, 0);
        let h2 = Poly::var(ring, 1);
        let group = group_elements(1, 1, 2, 100).unwrap();
        let coeff = RatFun::new(Poly::one(ring), &h1 - &h2).unwrap();
        let x = &SkewElement::monomial(&ctx, coeff.clone(), LatticeElement(vec![1, 0]))
            - &SkewElement::monomial(&ctx, coeff, LatticeElement(vec![0, 1]));
        let d = dchi_sign_sn(ring);
        assert_eq!(d, &h1 - &h2);
        assert!(rational_witness_check(&x, &d, &group).holds());
        // already-polynomial invariants pass with the trivial character
        let e_sum = &SkewElement::generator(&ctx, 0) + &SkewElement::generator(&ctx, 1);
        assert!(rational_witness_check(&e_sum, &Poly::one(ring), &group).holds());
        // non-invariant probe fails
        let bad =
            SkewElement::monomial(&ctx, RatFun::from_poly(h1.clone()), LatticeElement(vec![1, 0]));
        assert!(!rational_witness_check(&bad, &d, &group).holds());
    }

    #[test]
    fn sign_witness_n3() {
        let field = ScalarField::rationals();
        let ring = PolyRing::new(&field, 3, false);
        let d = dchi_sign_sn(&ring);
        let h: Vec<Poly> = (0..3).map(|i| Poly::var(&ring, i)).collect();
        let expected = &(&(&h[0] - &h[1]) * &(&h[0] - &h[2])) * &(&h[1] - &h[2]);
        assert_eq!(d, expected);
        // each transposition flips the sign
        for (i, j) in [(0usize, 1usize), (1, 2)] {
            let mut perm: Vec<usize> = (0..3).collect();
            perm.swap(i, j);
            assert_eq!(d.permute_vars(&perm), -&d);
        }
    }

    #[test]
    fn p_must_divide_m() {
        let p = weyl(2, 2);
        assert!(matches!(
            invariant_generators(&p, 2, 3, GenerationMode::Group),
            Err(Error::PNotDividesM { m: 2, p: 3 })
        ));
        let u = GwaElement::one(&p);
        assert!(matches!(
            decomposition_check(&u, 4, 3),
            Err(Error::PNotDividesM { .. })
        ));
    }

    #[test]
    fn elementary_symmetric_values() {
        let field = ScalarField::rationals();
        let ring = PolyRing::new(&field, 3, false);
        let e2 = elementary_symmetric(&ring, 2);
        let h: Vec<Poly> = (0..3).map(|i| Poly::var(&ring, i)).collect();
        let expected = &(&(&h[0] * &h[1]) + &(&h[0] * &h[2])) + &(&h[1] * &h[2]);
        assert_eq!(e2, expected);
    }
}
