//! Integer lattice elements, sublattice/submonoid specifications and exact
//! membership tests. Group-mode membership runs integer row reduction with a
//! tracked transform, so every positive answer carries a verified
//! coefficient witness; monoid-mode membership is a bounded breadth-first
//! search that distinguishes "not found, search complete" from "bound
//! exceeded".

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

/// Element of the free abelian group Z^n indexing automorphism words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeElement(pub Vec<i64>);

impl LatticeElement {
    pub fn zero(n: usize) -> Self {
        LatticeElement(vec![0; n])
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        LatticeElement(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        LatticeElement(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        LatticeElement(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        LatticeElement(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        LatticeElement(self.0.iter().map(|a| a * k).collect())
    }

    pub fn norm_inf(&self) -> i64 {
        self.0.iter().map(|a| a.abs()).max().unwrap_or(0)
    }

    /// Permute coordinates: coordinate i moves to position perm[i].
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[perm[i]] = x;
        }
        LatticeElement(out)
    }
}

impl PartialOrd for LatticeElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LatticeElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let da: i64 = self.0.iter().sum();
        let db: i64 = other.0.iter().sum();
        da.cmp(&db).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for LatticeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "e({})", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenerationMode {
    Group,
    Monoid,
}

/// A sublattice (group mode) or submonoid (monoid mode) of Z^n given by
/// generators.
#[derive(Clone, Debug)]
pub struct LatticeSubmonoidSpec {
    pub generators: Vec<LatticeElement>,
    pub mode: GenerationMode,
}

/// Three-valued membership answer. `Member` carries generator coefficients
/// (integers in group mode, nonnegative usage counts in monoid mode).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Member(Vec<i64>),
    NotMember,
    Inconclusive,
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }
}

impl LatticeSubmonoidSpec {
    pub fn group(generators: Vec<LatticeElement>) -> Self {
        LatticeSubmonoidSpec {
            generators,
            mode: GenerationMode::Group,
        }
    }

    pub fn monoid(generators: Vec<LatticeElement>) -> Self {
        LatticeSubmonoidSpec {
            generators,
            mode: GenerationMode::Monoid,
        }
    }

    /// Decide membership of `v`. Group mode is exact and ignores the bound;
    /// monoid mode searches partial sums with coordinates within `bound`.
    pub fn membership(&self, v: &LatticeElement, bound: i64) -> Membership {
        match self.mode {
            GenerationMode::Group => match group_membership(&self.generators, v) {
                Some(w) => Membership::Member(w),
                None => Membership::NotMember,
            },
            GenerationMode::Monoid => monoid_membership(&self.generators, v, bound),
        }
    }
}

/// Solve x . G = v over the integers (rows of G are the generators).
/// Returns the coefficient vector when v lies in the row span.
pub fn group_membership(gens: &[LatticeElement], v: &LatticeElement) -> Option<Vec<i64>> {
    let n = v.rank();
    if v.is_zero() {
        return Some(vec![0; gens.len()]);
    }
    if gens.is_empty() {
        return None;
    }
    let k = gens.len();
    let mut a: Vec<Vec<i128>> = gens
        .iter()
        .map(|g| {
            assert_eq!(g.rank(), n, "generator rank mismatch");
            g.0.iter().map(|&x| x as i128).collect()
        })
        .collect();
    // transform: a = u . gens at every step
    let mut u: Vec<Vec<i128>> = (0..k)
        .map(|i| (0..k).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut pivot_row = 0usize;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for col in 0..n {
        if pivot_row == k {
            break;
        }
        loop {
            // smallest nonzero entry in this column at or below pivot_row
            let mut best: Option<usize> = None;
            for i in pivot_row..k {
                if a[i][col] != 0
                    && best.map_or(true, |b| a[i][col].abs() < a[b][col].abs())
                {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            a.swap(pivot_row, b);
            u.swap(pivot_row, b);
            let mut done = true;
            for i in pivot_row + 1..k {
                if a[i][col] != 0 {
                    let q = a[i][col].div_euclid(a[pivot_row][col]);
                    for c in 0..n {
                        a[i][c] -= q * a[pivot_row][c];
                    }
                    for c in 0..k {
                        u[i][c] -= q * u[pivot_row][c];
                    }
                    if a[i][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if a[pivot_row][col] != 0 {
            if a[pivot_row][col] < 0 {
                for c in 0..n {
                    a[pivot_row][c] = -a[pivot_row][c];
                }
                for c in 0..k {
                    u[pivot_row][c] = -u[pivot_row][c];
                }
            }
            pivots.push((pivot_row, col));
            pivot_row += 1;
        }
    }
    // forward substitution against the echelon rows
    let mut rem: Vec<i128> = v.0.iter().map(|&x| x as i128).collect();
    let mut y: Vec<i128> = vec![0; k];
    for &(r, c) in &pivots {
        if rem[c] % a[r][c] != 0 {
            return None;
        }
        let coef = rem[c] / a[r][c];
        y[r] = coef;
        for j in 0..n {
            rem[j] -= coef * a[r][j];
        }
    }
    if rem.iter().any(|&x| x != 0) {
        return None;
    }
    // x = y . u
    let mut x = vec![0i128; k];
    for (r, &yr) in y.iter().enumerate() {
        if yr != 0 {
            for j in 0..k {
                x[j] += yr * u[r][j];
            }
        }
    }
    // verify the witness by reconstruction
    let mut check = vec![0i128; n];
    for (j, g) in gens.iter().enumerate() {
        for (c, &gc) in g.0.iter().enumerate() {
            check[c] += x[j] * gc as i128;
        }
    }
    debug_assert!(check
        .iter()
        .zip(&v.0)
        .all(|(&got, &want)| got == want as i128));
    Some(x.into_iter().map(|c| c as i64).collect())
}

/// Bounded breadth-first search for a nonnegative combination reaching `v`.
/// Partial sums are confined to the box |coordinate| <= bound; if a path is
/// pruned at the box the search reports Inconclusive instead of NotMember.
fn monoid_membership(gens: &[LatticeElement], v: &LatticeElement, bound: i64) -> Membership {
    let n = v.rank();
    let zero = LatticeElement::zero(n);
    if *v == zero {
        return Membership::Member(vec![0; gens.len()]);
    }
    let mut visited: BTreeMap<LatticeElement, Vec<i64>> = BTreeMap::new();
    visited.insert(zero.clone(), vec![0; gens.len()]);
    let mut queue = VecDeque::new();
    queue.push_back(zero);
    let mut pruned = false;
    while let Some(p) = queue.pop_front() {
        let counts = visited.get(&p).unwrap().clone();
        for (j, g) in gens.iter().enumerate() {
            let q = p.add(g);
            let mut qc = counts.clone();
            qc[j] += 1;
            if q == *v {
                return Membership::Member(qc);
            }
            if q.norm_inf() > bound {
                pruned = true;
                continue;
            }
            if !visited.contains_key(&q) {
                visited.insert(q.clone(), qc);
                queue.push_back(q);
            }
        }
    }
    if pruned {
        Membership::Inconclusive
    } else {
        Membership::NotMember
    }
}
