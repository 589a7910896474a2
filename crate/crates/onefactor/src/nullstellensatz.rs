//! Exact-rational coefficient extraction by grid evaluation.
//!
//! For finite nonempty lists `L_1, …, L_n` of rationals with `d_j = |L_j| - 1`
//! and a polynomial `P` of total degree at most `d_1 + … + d_n`, the
//! coefficient of the monomial `x_1^{d_1} ··· x_n^{d_n}` equals
//!
//! ```text
//!     P_d = Σ_{x ∈ L_1 × … × L_n}  N_L(x)^{-1} P(x),
//!     N_L(x) = Π_j Π_{ξ ∈ L_j, ξ ≠ x_j} (x_j - ξ).
//! ```
//!
//! This is the quantitative sharpening of the combinatorial Nullstellensatz:
//! a polynomial of bounded degree is recovered from its values on any large
//! enough grid, so the top coefficient can be computed from evaluations alone
//! — no expansion. In particular the coefficient, and hence the grid sum, is
//! the same for every choice of lists of the given sizes, and a nonzero sum
//! forces a nonzero value of `P` on every such grid. Applied to the edge
//! distance polynomial `Π_{ij ∈ E} (x_i - x_j)` of a graph, a nonzero grid
//! sum over lists `L_j` certifies a proper coloring with colors from those
//! lists (and even on-line list colorability).
//!
//! Polynomials here are products of affine linear forms, evaluated factor by
//! factor; [`symbolic_coefficient`] is the independent expansion oracle used
//! to cross-check the grid route on small instances.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::{Edge, Graph};

/// Exact rational scalar used throughout this module.
pub type Rat = BigRational;

/// Convenience constructor for small rationals.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Convenience constructor for integers.
pub fn int(value: i64) -> Rat {
    Rat::from_integer(BigInt::from(value))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NullstellensatzError {
    #[error("factor has no variable term")]
    ConstantFactor,
    #[error("variable x{0} out of range for {1} variables")]
    VariableRange(usize, usize),
    #[error("list {0} is empty")]
    EmptyList(usize),
    #[error("list {0} repeats the value {1}")]
    DuplicateValue(usize, Rat),
    #[error("polynomial has {0} variables but the list system has {1}")]
    VariableCountMismatch(usize, usize),
    #[error("degree {degree} exceeds the grid bound {bound}")]
    DegreeTooHigh { degree: usize, bound: usize },
    #[error("coordinate {0} of the point is not in list {0}")]
    OffGrid(usize),
    #[error("list sizes differ at coordinate {0}: {1} vs {2}")]
    SizeMismatch(usize, usize, usize),
    #[error("expansion exceeds {0} terms")]
    GuardExceeded(usize),
    #[error("expected {expected} edge labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("degree vector has {got} entries for {expected} variables")]
    DegreeVectorLength { expected: usize, got: usize },
}

/// An affine linear form `Σ c_i x_i + c`, with at least one nonzero `c_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    /// Sorted by variable index; zero coefficients dropped.
    coeffs: Vec<(usize, Rat)>,
    constant: Rat,
}

impl LinearForm {
    pub fn new(
        terms: impl IntoIterator<Item = (usize, Rat)>,
        constant: Rat,
    ) -> Result<Self, NullstellensatzError> {
        let mut map: HashMap<usize, Rat> = HashMap::new();
        for (var, c) in terms {
            *map.entry(var).or_insert_with(Rat::zero) += c;
        }
        let mut coeffs: Vec<(usize, Rat)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        coeffs.sort_by_key(|&(v, _)| v);
        if coeffs.is_empty() {
            return Err(NullstellensatzError::ConstantFactor);
        }
        Ok(LinearForm { coeffs, constant })
    }

    /// The form `x_i - x_j - a`.
    pub fn difference(i: usize, j: usize, a: Rat) -> Result<Self, NullstellensatzError> {
        LinearForm::new([(i, Rat::one()), (j, -Rat::one())], -a)
    }

    pub fn coeffs(&self) -> &[(usize, Rat)] {
        &self.coeffs
    }

    pub fn constant(&self) -> &Rat {
        &self.constant
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut value = self.constant.clone();
        for (var, c) in &self.coeffs {
            value += c * &point[*var];
        }
        value
    }
}

/// A polynomial given as a product of affine linear forms; its total degree
/// is the number of factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredPolynomial {
    n_vars: usize,
    factors: Vec<LinearForm>,
}

impl FactoredPolynomial {
    pub fn new(n_vars: usize, factors: Vec<LinearForm>) -> Result<Self, NullstellensatzError> {
        for f in &factors {
            for &(var, _) in &f.coeffs {
                if var >= n_vars {
                    return Err(NullstellensatzError::VariableRange(var, n_vars));
                }
            }
        }
        Ok(FactoredPolynomial { n_vars, factors })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[LinearForm] {
        &self.factors
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut value = Rat::one();
        for f in &self.factors {
            value *= f.eval(point);
            if value.is_zero() {
                return value;
            }
        }
        value
    }
}

/// Finite nonempty value lists, one per variable, pairwise distinct within
/// each list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListSystem {
    lists: Vec<Vec<Rat>>,
}

impl ListSystem {
    pub fn new(lists: Vec<Vec<Rat>>) -> Result<Self, NullstellensatzError> {
        for (j, list) in lists.iter().enumerate() {
            if list.is_empty() {
                return Err(NullstellensatzError::EmptyList(j));
            }
            for (a, x) in list.iter().enumerate() {
                if list[..a].contains(x) {
                    return Err(NullstellensatzError::DuplicateValue(j, x.clone()));
                }
            }
        }
        Ok(ListSystem { lists })
    }

    /// All lists equal to `{1, …, k}`, one per variable.
    pub fn uniform_range(n_vars: usize, k: usize) -> Self {
        let list: Vec<Rat> = (1..=k as i64).map(int).collect();
        ListSystem { lists: vec![list; n_vars] }
    }

    pub fn from_ints(lists: &[&[i64]]) -> Result<Self, NullstellensatzError> {
        ListSystem::new(lists.iter().map(|l| l.iter().copied().map(int).collect()).collect())
    }

    pub fn lists(&self) -> &[Vec<Rat>] {
        &self.lists
    }

    pub fn n_vars(&self) -> usize {
        self.lists.len()
    }

    /// `d_j = |L_j| - 1` per coordinate.
    pub fn degrees(&self) -> Vec<usize> {
        self.lists.iter().map(|l| l.len() - 1).collect()
    }

    pub fn degree_bound(&self) -> usize {
        self.lists.iter().map(|l| l.len() - 1).sum()
    }
}

/// `N_L(x) = Π_j Π_{ξ ∈ L_j, ξ ≠ x_j} (x_j - ξ)`; nonzero for grid points.
pub fn n_weight(ls: &ListSystem, x: &[Rat]) -> Result<Rat, NullstellensatzError> {
    if x.len() != ls.n_vars() {
        return Err(NullstellensatzError::VariableCountMismatch(x.len(), ls.n_vars()));
    }
    let mut weight = Rat::one();
    for (j, list) in ls.lists.iter().enumerate() {
        if !list.contains(&x[j]) {
            return Err(NullstellensatzError::OffGrid(j));
        }
        for xi in list {
            if *xi != x[j] {
                weight *= &x[j] - xi;
            }
        }
    }
    Ok(weight)
}

/// Iterates the grid in lexicographic order of list indices.
fn for_each_grid_point(
    ls: &ListSystem,
    mut f: impl FnMut(&[Rat], &[usize]),
) {
    let n = ls.n_vars();
    let sizes: Vec<usize> = ls.lists.iter().map(Vec::len).collect();
    let mut idx = vec![0usize; n];
    let mut point: Vec<Rat> = ls.lists.iter().map(|l| l[0].clone()).collect();
    loop {
        f(&point, &idx);
        let mut j = n;
        loop {
            if j == 0 {
                return;
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < sizes[j] {
                point[j] = ls.lists[j][idx[j]].clone();
                break;
            }
            idx[j] = 0;
            point[j] = ls.lists[j][0].clone();
        }
    }
}

/// The coefficient of `x_1^{d_1} ··· x_n^{d_n}` in `p`, computed as the
/// weighted sum of values over the grid; exact.
pub fn grid_coefficient(p: &FactoredPolynomial, ls: &ListSystem) -> Result<Rat, NullstellensatzError> {
    if p.n_vars != ls.n_vars() {
        return Err(NullstellensatzError::VariableCountMismatch(p.n_vars, ls.n_vars()));
    }
    let bound = ls.degree_bound();
    if p.degree() > bound {
        return Err(NullstellensatzError::DegreeTooHigh { degree: p.degree(), bound });
    }
    // per-coordinate weights N_{L_j}(ξ), computed once
    let weights: Vec<Vec<Rat>> = ls
        .lists
        .iter()
        .map(|list| {
            list.iter()
                .map(|x| {
                    let mut w = Rat::one();
                    for xi in list {
                        if xi != x {
                            w *= x - xi;
                        }
                    }
                    w
                })
                .collect()
        })
        .collect();
    let mut sum = Rat::zero();
    for_each_grid_point(ls, |point, idx| {
        let value = p.eval(point);
        if !value.is_zero() {
            let mut n = Rat::one();
            for (j, &i) in idx.iter().enumerate() {
                n *= &weights[j][i];
            }
            sum += value / n;
        }
    });
    Ok(sum)
}

/// The coefficient of `x^d` by distributive expansion with term merging;
/// the independent cross-check for [`grid_coefficient`], guarded to a million
/// simultaneous terms.
pub fn symbolic_coefficient(
    p: &FactoredPolynomial,
    d: &[usize],
) -> Result<Rat, NullstellensatzError> {
    const GUARD: usize = 1_000_000;
    if d.len() != p.n_vars {
        return Err(NullstellensatzError::DegreeVectorLength { expected: p.n_vars, got: d.len() });
    }
    let mut terms: HashMap<Vec<u16>, Rat> = HashMap::new();
    terms.insert(vec![0u16; p.n_vars], Rat::one());
    for f in &p.factors {
        let mut next: HashMap<Vec<u16>, Rat> = HashMap::with_capacity(terms.len() * 2);
        for (mono, coef) in &terms {
            for (var, c) in &f.coeffs {
                let mut m = mono.clone();
                m[*var] += 1;
                let entry = next.entry(m).or_insert_with(Rat::zero);
                *entry += coef * c;
            }
            if !f.constant.is_zero() {
                let entry = next.entry(mono.clone()).or_insert_with(Rat::zero);
                *entry += coef * &f.constant;
            }
        }
        next.retain(|_, c| !c.is_zero());
        if next.len() > GUARD {
            return Err(NullstellensatzError::GuardExceeded(GUARD));
        }
        terms = next;
    }
    let target: Vec<u16> = d.iter().map(|&x| x as u16).collect();
    Ok(terms.remove(&target).unwrap_or_else(Rat::zero))
}

/// Evaluates both grid sums and reports whether they agree. When the two
/// polynomials share their top-degree homogeneous component (for products of
/// affine forms: the same multiset of variable parts) and the list sizes
/// match coordinatewise, the sums are equal — the coefficient can be read off
/// any grid of the right shape.
pub fn equal_leading_transfer(
    p: &FactoredPolynomial,
    ls: &ListSystem,
    p_tilde: &FactoredPolynomial,
    ls_tilde: &ListSystem,
) -> Result<(Rat, Rat, bool), NullstellensatzError> {
    if ls.n_vars() != ls_tilde.n_vars() {
        return Err(NullstellensatzError::VariableCountMismatch(ls.n_vars(), ls_tilde.n_vars()));
    }
    for (j, (a, b)) in ls.lists.iter().zip(&ls_tilde.lists).enumerate() {
        if a.len() != b.len() {
            return Err(NullstellensatzError::SizeMismatch(j, a.len(), b.len()));
        }
    }
    let s = grid_coefficient(p, ls)?;
    let s_tilde = grid_coefficient(p_tilde, ls_tilde)?;
    let equal = s == s_tilde;
    Ok((s, s_tilde, equal))
}

/// The edge distance polynomial `Π_{(i,j) ∈ E, i<j} (x_i - x_j - a_e)` of a
/// graph, with one label per edge in edge-index order.
pub fn edge_distance_polynomial(
    g: &Graph,
    labels: &[Rat],
) -> Result<FactoredPolynomial, NullstellensatzError> {
    if labels.len() != g.n_edges() {
        return Err(NullstellensatzError::LabelCount { expected: g.n_edges(), got: labels.len() });
    }
    multi_edge_distance_polynomial(g.n_vertices(), g.edges(), labels)
}

/// Zero-labeled edge distance polynomial.
pub fn graph_polynomial(g: &Graph) -> FactoredPolynomial {
    let labels = vec![Rat::zero(); g.n_edges()];
    edge_distance_polynomial(g, &labels).expect("label count matches")
}

/// Edge distance polynomial over an explicit edge list; repeated edges give
/// repeated factors, so multigraphs are representable here.
pub fn multi_edge_distance_polynomial(
    n_vars: usize,
    edges: &[Edge],
    labels: &[Rat],
) -> Result<FactoredPolynomial, NullstellensatzError> {
    if labels.len() != edges.len() {
        return Err(NullstellensatzError::LabelCount { expected: edges.len(), got: labels.len() });
    }
    let factors = edges
        .iter()
        .zip(labels)
        .map(|(&(i, j), a)| LinearForm::difference(i, j, a.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    FactoredPolynomial::new(n_vars, factors)
}

/// Searches for a proper vertex coloring of `g` with each color drawn from
/// its vertex's list; the witness promised by a nonzero grid sum of the edge
/// distance polynomial.
pub fn find_list_coloring(g: &Graph, ls: &ListSystem) -> Option<Vec<Rat>> {
    assert_eq!(g.n_vertices(), ls.n_vars());
    fn assign(g: &Graph, ls: &ListSystem, chosen: &mut Vec<Rat>) -> bool {
        let v = chosen.len();
        if v == g.n_vertices() {
            return true;
        }
        'candidate: for x in &ls.lists()[v] {
            for &w in g.neighbors(v) {
                if w < v && chosen[w] == *x {
                    continue 'candidate;
                }
            }
            chosen.push(x.clone());
            if assign(g, ls, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(g.n_vertices());
    assign(g, ls, &mut chosen).then_some(chosen)
}
