//! Weight modules with generalized-tableaux bases. The module is usually
//! infinite dimensional; everything here works on a finite orbit window of
//! configurable radius, with boundary tableaux flagged so relation checks
//! stay exact in the interior.
//!
//! The three action rules on a basis symbol T(n) at the point of n:
//! z acts by the evaluation f_n(z), X_i moves to T(sigma_i n), and Y_i moves
//! to T(sigma_i^{-1} n) scaled by f_{sigma_i^{-1} n}(a_i).

use crate::algebra::GwaPresentation;
use crate::error::{Error, Result};
use crate::lattice::LatticeElement;
use crate::poly::Poly;
use crate::scalars::Scalar;
use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::sync::Arc;

/// A basis symbol: the point of its maximal ideal plus one witness word
/// reaching it from the seed.
#[derive(Clone, Debug)]
pub struct Tableau {
    pub point: Vec<Scalar>,
    pub provenance: LatticeElement,
}

/// Finite window on the sigma-orbit of a seed point: all words of sup-norm
/// at most `radius`, deduplicated on point equality.
#[derive(Debug)]
pub struct OrbitTruncation {
    pres: Arc<GwaPresentation>,
    seed: Vec<Scalar>,
    radius: u32,
    pub(crate) tableaux: Vec<Tableau>,
    by_theta: BTreeMap<LatticeElement, usize>,
    up: Vec<Vec<Option<usize>>>,
    down: Vec<Vec<Option<usize>>>,
}

impl OrbitTruncation {
    pub fn presentation(&self) -> &Arc<GwaPresentation> {
        &self.pres
    }

    pub fn seed(&self) -> &[Scalar] {
        &self.seed
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn seed_index(&self) -> usize {
        self.by_theta[&LatticeElement::zero(self.pres.rank())]
    }

    pub fn index_of_theta(&self, theta: &LatticeElement) -> Option<usize> {
        self.by_theta.get(theta).copied()
    }

    pub fn index_of_point(&self, point: &[Scalar]) -> Option<usize> {
        self.tableaux
            .iter()
            .position(|t| t.point.as_slice() == point)
    }

    /// True when every lattice move of length <= depth stays inside the
    /// window; relation checks run on depth-2 interior tableaux.
    pub fn is_interior(&self, idx: usize, depth: u32) -> bool {
        let mut current = vec![idx];
        for _ in 0..depth {
            let mut next = Vec::new();
            for &t in &current {
                for i in 0..self.pres.rank() {
                    match (self.up[t][i], self.down[t][i]) {
                        (Some(u), Some(d)) => {
                            if !next.contains(&u) {
                                next.push(u);
                            }
                            if !next.contains(&d) {
                                next.push(d);
                            }
                        }
                        _ => return false,
                    }
                }
            }
            current = next;
        }
        true
    }

    pub fn interior_indices(&self, depth: u32) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.is_interior(i, depth))
            .collect()
    }

    fn describe(&self, idx: usize) -> String {
        let coords: Vec<String> = self.tableaux[idx]
            .point
            .iter()
            .map(|s| format!("{s}"))
            .collect();
        format!("T({})", coords.join(","))
    }
}

/// Expand the orbit window: every point sigma^theta(seed) with
/// |theta|_inf <= radius. For shift actions with a generic seed this gives
/// exactly (2 radius + 1)^n tableaux.
pub fn orbit_expand(
    pres: &Arc<GwaPresentation>,
    seed: Vec<Scalar>,
    radius: u32,
) -> Result<OrbitTruncation> {
    let n = pres.rank();
    if seed.len() != pres.ring().nvars() {
        return Err(Error::PointLength {
            got: seed.len(),
            want: pres.ring().nvars(),
        });
    }
    let mut tableaux: Vec<Tableau> = Vec::new();
    let mut by_theta: BTreeMap<LatticeElement, usize> = BTreeMap::new();
    let mut point_of_theta: BTreeMap<LatticeElement, Vec<Scalar>> = BTreeMap::new();
    let zero = LatticeElement::zero(n);
    tableaux.push(Tableau {
        point: seed.clone(),
        provenance: zero.clone(),
    });
    by_theta.insert(zero.clone(), 0);
    point_of_theta.insert(zero.clone(), seed.clone());
    let mut queue = VecDeque::new();
    queue.push_back(zero);
    while let Some(theta) = queue.pop_front() {
        let here = point_of_theta[&theta].clone();
        for i in 0..n {
            for step in [1i64, -1] {
                let mut next = theta.clone();
                next.0[i] += step;
                if next.norm_inf() > radius as i64 || by_theta.contains_key(&next) {
                    continue;
                }
                let auto = if step == 1 {
                    pres.sigma()[i].clone()
                } else {
                    pres.sigma()[i].inverse()
                };
                let point = auto.act_on_point(&here)?;
                let idx = match tableaux.iter().position(|t| t.point == point) {
                    Some(existing) => existing,
                    None => {
                        tableaux.push(Tableau {
                            point: point.clone(),
                            provenance: next.clone(),
                        });
                        tableaux.len() - 1
                    }
                };
                by_theta.insert(next.clone(), idx);
                point_of_theta.insert(next.clone(), point);
                queue.push_back(next);
            }
        }
    }
    // neighbor tables via the theta map, unioned over provenances
    let mut up = vec![vec![None; n]; tableaux.len()];
    let mut down = vec![vec![None; n]; tableaux.len()];
    for (theta, &idx) in &by_theta {
        for i in 0..n {
            let mut u = theta.clone();
            u.0[i] += 1;
            if let Some(&j) = by_theta.get(&u) {
                up[idx][i] = Some(j);
            }
            let mut d = theta.clone();
            d.0[i] -= 1;
            if let Some(&j) = by_theta.get(&d) {
                down[idx][i] = Some(j);
            }
        }
    }
    Ok(OrbitTruncation {
        pres: Arc::clone(pres),
        seed,
        radius,
        tableaux,
        by_theta,
        up,
        down,
    })
}

/// Finite linear combination of tableaux.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightVector {
    pub coeffs: BTreeMap<usize, Scalar>,
}

impl WeightVector {
    pub fn zero() -> Self {
        WeightVector {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(idx: usize, one: Scalar) -> Self {
        let mut coeffs = BTreeMap::new();
        if !one.is_zero() {
            coeffs.insert(idx, one);
        }
        WeightVector { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, idx: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&idx) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.coeffs.remove(&idx);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.coeffs.insert(idx, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&i, c) in &other.coeffs {
            out.add_term(i, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return WeightVector::zero();
        }
        WeightVector {
            coeffs: self.coeffs.iter().map(|(&i, x)| (i, x * c)).collect(),
        }
    }
}

/// Generator acting on a weight vector: an element of D, or X_i, or Y_i.
#[derive(Clone, Debug)]
pub enum GwaGenerator {
    Z(Poly),
    X(usize),
    Y(usize),
}

/// Apply one generator by the three action rules, linearly extended. X and Y
/// moves that would leave the window report a boundary escape (the caller
/// enlarges the radius); Y moves with vanishing coefficient simply drop.
pub fn act(gen: &GwaGenerator, v: &WeightVector, orbit: &OrbitTruncation) -> Result<WeightVector> {
    let pres = &orbit.pres;
    let mut out = WeightVector::zero();
    for (&idx, c) in &v.coeffs {
        let t = &orbit.tableaux[idx];
        match gen {
            GwaGenerator::Z(z) => {
                let f = z.eval(&t.point)?;
                out.add_term(idx, c * &f);
            }
            GwaGenerator::X(i) => match orbit.up[idx][*i] {
                Some(j) => out.add_term(j, c.clone()),
                None => return Err(Error::BoundaryEscape(orbit.describe(idx))),
            },
            GwaGenerator::Y(i) => {
                let target_point = pres.sigma()[*i].inverse().act_on_point(&t.point)?;
                let f = pres.a()[*i].eval(&target_point)?;
                if f.is_zero() {
                    continue;
                }
                match orbit.down[idx][*i] {
                    Some(j) => out.add_term(j, c * &f),
                    None => return Err(Error::BoundaryEscape(orbit.describe(idx))),
                }
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Default)]
pub struct RelationReport {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl RelationReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass() {
            write!(f, "{} relation instances verified", self.checked)
        } else {
            writeln!(f, "{} violations:", self.violations.len())?;
            for v in &self.violations {
                writeln!(f, "  {v}")?;
            }
            Ok(())
        }
    }
}

/// Check every defining relation on every depth-2 interior tableau, with the
/// given D-samples for the twisted commutation rules.
pub fn verify_relations(orbit: &OrbitTruncation, samples: &[Poly]) -> Result<RelationReport> {
    let pres = &orbit.pres;
    let n = pres.rank();
    let mut report = RelationReport::default();
    let one = Scalar::one(pres.ring().field());
    for idx in orbit.interior_indices(2) {
        let t = WeightVector::basis(idx, one.clone());
        for i in 0..n {
            let xi = GwaGenerator::X(i);
            let yi = GwaGenerator::Y(i);
            // Y_i X_i = a_i .
            let lhs = act(&yi, &act(&xi, &t, orbit)?, orbit)?;
            let rhs = act(&GwaGenerator::Z(pres.a()[i].clone()), &t, orbit)?;
            report.checked += 1;
            if lhs != rhs {
                report
                    .violations
                    .push(format!("Y{0} X{0} != a_{0} at {1}", i + 1, orbit.describe(idx)));
            }
            // X_i Y_i = sigma_i(a_i) .
            let lhs = act(&xi, &act(&yi, &t, orbit)?, orbit)?;
            let sa = pres.sigma()[i].apply_poly(&pres.a()[i])?;
            let rhs = act(&GwaGenerator::Z(sa), &t, orbit)?;
            report.checked += 1;
            if lhs != rhs {
                report.violations.push(format!(
                    "X{0} Y{0} != sigma(a_{0}) at {1}",
                    i + 1,
                    orbit.describe(idx)
                ));
            }
            for z in samples {
                // X_i z = sigma_i(z) X_i
                let lhs = act(&xi, &act(&GwaGenerator::Z(z.clone()), &t, orbit)?, orbit)?;
                let sz = pres.sigma()[i].apply_poly(z)?;
                let rhs = act(&GwaGenerator::Z(sz), &act(&xi, &t, orbit)?, orbit)?;
                report.checked += 1;
                if lhs != rhs {
                    report.violations.push(format!(
                        "X{} z != sigma(z) X{} at {} with z = {}",
                        i + 1,
                        i + 1,
                        orbit.describe(idx),
                        z
                    ));
                }
                // Y_i z = sigma_i^{-1}(z) Y_i
                let lhs = act(&yi, &act(&GwaGenerator::Z(z.clone()), &t, orbit)?, orbit)?;
                let sz = pres.sigma()[i].inverse().apply_poly(z)?;
                let rhs = act(&GwaGenerator::Z(sz), &act(&yi, &t, orbit)?, orbit)?;
                report.checked += 1;
                if lhs != rhs {
                    report.violations.push(format!(
                        "Y{} z != sigma^-1(z) Y{} at {} with z = {}",
                        i + 1,
                        i + 1,
                        orbit.describe(idx),
                        z
                    ));
                }
            }
            for j in 0..i {
                for (name, a, b) in [
                    ("X,X", GwaGenerator::X(i), GwaGenerator::X(j)),
                    ("Y,Y", GwaGenerator::Y(i), GwaGenerator::Y(j)),
                    ("X,Y", GwaGenerator::X(i), GwaGenerator::Y(j)),
                    ("Y,X", GwaGenerator::Y(i), GwaGenerator::X(j)),
                ] {
                    let lhs = act(&a, &act(&b, &t, orbit)?, orbit)?;
                    let rhs = act(&b, &act(&a, &t, orbit)?, orbit)?;
                    report.checked += 1;
                    if lhs != rhs {
                        report.violations.push(format!(
                            "[{name}] generators {},{} do not commute at {}",
                            i + 1,
                            j + 1,
                            orbit.describe(idx)
                        ));
                    }
                }
            }
        }
    }
    Ok(report)
}

/// T(seed) must be a simultaneous eigenvector of the variables with
/// eigenvalues the seed coordinates: the seed weight space is nonzero.
pub fn weight_lift_check(orbit: &OrbitTruncation) -> Result<bool> {
    let pres = &orbit.pres;
    let idx = orbit.seed_index();
    let one = Scalar::one(pres.ring().field());
    let t = WeightVector::basis(idx, one);
    for j in 0..pres.ring().nvars() {
        let hj = Poly::var(pres.ring(), j);
        let acted = act(&GwaGenerator::Z(hj), &t, orbit)?;
        let expected = t.scale(&orbit.seed[j]);
        if acted != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The identity f_{sigma^theta n}(z) = f_n(sigma^{-theta} z), checked at the
/// seed tableau for a given z and theta inside the window.
pub fn dagger_check(orbit: &OrbitTruncation, z: &Poly, theta: &LatticeElement) -> Result<bool> {
    let idx = orbit
        .index_of_theta(theta)
        .ok_or_else(|| Error::BoundaryEscape(format!("{theta}")))?;
    let moved_point = &orbit.tableaux[idx].point;
    let lhs = z.eval(moved_point)?;
    let back = orbit.pres.skew_context().auto_for(&theta.neg())?;
    let rhs = back.apply_poly(z)?.eval(&orbit.seed)?;
    Ok(lhs == rhs)
}

/// Directed reachability edges of the truncation: T -> sigma_i T always,
/// and T -> sigma_i^{-1} T when the Y-coefficient is nonzero.
pub fn reachability_edges(orbit: &OrbitTruncation) -> Result<Vec<(usize, usize)>> {
    let n = orbit.pres.rank();
    let mut edges = Vec::new();
    for idx in 0..orbit.len() {
        for i in 0..n {
            if let Some(j) = orbit.up[idx][i] {
                if !edges.contains(&(idx, j)) {
                    edges.push((idx, j));
                }
            }
            if let Some(j) = orbit.down[idx][i] {
                let target_point = orbit.pres.sigma()[i]
                    .inverse()
                    .act_on_point(&orbit.tableaux[idx].point)?;
                let f = orbit.pres.a()[i].eval(&target_point)?;
                if !f.is_zero() && !edges.contains(&(idx, j)) {
                    edges.push((idx, j));
                }
            }
        }
    }
    Ok(edges)
}

/// Distinct forward closures of the strongly connected components of the
/// reachability graph; each is a candidate submodule support within the
/// window.
pub fn submodule_scan(orbit: &OrbitTruncation) -> Result<Vec<Vec<usize>>> {
    let len = orbit.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); len];
    for (a, b) in reachability_edges(orbit)? {
        adj[a].push(b);
    }
    // Kosaraju: order by finish time, then collect components on the reverse graph
    let mut visited = vec![false; len];
    let mut order = Vec::new();
    for s in 0..len {
        if visited[s] {
            continue;
        }
        // iterative DFS with explicit finish events
        let mut stack = vec![(s, 0usize)];
        visited[s] = true;
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next < adj[v].len() {
                let w = adj[v][*next];
                *next += 1;
                if !visited[w] {
                    visited[w] = true;
                    stack.push((w, 0));
                }
            } else {
                order.push(v);
                stack.pop();
            }
        }
    }
    let mut radj: Vec<Vec<usize>> = vec![Vec::new(); len];
    for (v, outs) in adj.iter().enumerate() {
        for &w in outs {
            radj[w].push(v);
        }
    }
    let mut comp = vec![usize::MAX; len];
    let mut ncomp = 0;
    for &v in order.iter().rev() {
        if comp[v] != usize::MAX {
            continue;
        }
        let mut stack = vec![v];
        comp[v] = ncomp;
        while let Some(x) = stack.pop() {
            for &w in &radj[x] {
                if comp[w] == usize::MAX {
                    comp[w] = ncomp;
                    stack.push(w);
                }
            }
        }
        ncomp += 1;
    }
    // forward closure of each component
    let mut closures: Vec<Vec<usize>> = Vec::new();
    for c in 0..ncomp {
        let mut set: Vec<usize> = (0..len).filter(|&v| comp[v] == c).collect();
        let mut queue: Vec<usize> = set.clone();
        while let Some(v) = queue.pop() {
            for &w in &adj[v] {
                if !set.contains(&w) {
                    set.push(w);
                    queue.push(w);
                }
            }
        }
        set.sort();
        if !closures.contains(&set) {
            closures.push(set);
        }
    }
    closures.sort_by_key(|s| (s.len(), s.clone()));
    Ok(closures)
}
