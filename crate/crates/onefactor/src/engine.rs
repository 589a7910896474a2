//! Exact signed enumeration of 1-factorizations.
//!
//! [`weighted_sum`] returns the number of 1-factorizations of a regular graph
//! of even order together with the signed sum `Σ_F Π_i sgn(F_i)`, where the
//! sign of a 1-factor is its chord-crossing parity (see [`crate::matching`]).
//! A nonzero sum certifies that the graph is list edge colorable, and edge
//! paintable, with `k` colors.
//!
//! The recursion builds one factor at a time, always extending at the least
//! unmatched vertex, so the crossing parity of each new edge is the parity of
//! the number of unmatched vertices bridged by it — one walk along the
//! [`UnmatchedList`]. When a factor completes, the next one is seeded with
//! vertex 0 matched to its first remaining neighbor only; of the `k!` ordered
//! versions of each factorization exactly one survives, so unordered
//! factorizations are counted once. Partial sums are accumulated bottom-up
//! and multiplied by the extending edge's sign at combination time, and
//! backtracking restores the splices instead of copying any state.
//!
//! Counts and sums are accumulated in 128-bit integers — enumerating anywhere
//! near `2^127` leaves is physically impossible, so this is exact — and
//! published as arbitrary-precision integers.

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;

use crate::graph::{Edge, Graph, GraphError};
use crate::matching::UnmatchedList;

/// Factorization count and signed sum; both exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignSumResult {
    pub factorization_count: BigUint,
    pub signed_sum: BigInt,
}

impl SignSumResult {
    /// True when the signed sum vanishes but factorizations exist.
    pub fn is_zero_sum(&self) -> bool {
        use num_traits::Zero;
        !self.factorization_count.is_zero() && self.signed_sum.is_zero()
    }
}

#[derive(Clone)]
struct Search {
    /// Remaining successor lists; edges are deleted while in use.
    succ: Vec<Vec<usize>>,
    /// One unmatched-list per factor under construction, indexed by factor.
    lists: Vec<UnmatchedList>,
    /// Factor currently being built.
    factor: usize,
    edges_left: usize,
}

impl Search {
    fn new(g: &Graph, k: usize) -> Self {
        Search {
            succ: g.to_successor().lists().to_vec(),
            lists: (0..=k).map(|_| UnmatchedList::new(g.n_vertices())).collect(),
            factor: 0,
            edges_left: g.n_edges(),
        }
    }

    /// Sum over all completions of the current state: `(count, signed sum)`.
    fn run(&mut self) -> (i128, i128) {
        let Some(to_match) = self.lists[self.factor].first_unmatched() else {
            return self.next_factor();
        };
        self.extend(to_match)
    }

    /// Current factor complete; seed the next one or finish.
    fn next_factor(&mut self) -> (i128, i128) {
        if self.edges_left == 0 {
            return (1, 1);
        }
        self.factor += 1;
        debug_assert!(self.factor < self.lists.len());
        self.lists[self.factor].reset_full();
        // force vertex 0's first remaining edge into this factor, so color
        // permutations of the same factorization are not revisited
        debug_assert!(!self.succ[0].is_empty());
        let nbr = self.succ[0][0];
        let sign = if nbr % 2 == 1 { 1 } else { -1 }; // nbr - 1 bridged vertices
        self.succ[0].remove(0);
        self.edges_left -= 1;
        self.lists[self.factor].detach(0);
        self.lists[self.factor].detach(nbr);
        let (count, sum) = self.run();
        self.lists[self.factor].attach(nbr);
        self.lists[self.factor].attach(0);
        self.edges_left += 1;
        self.succ[0].insert(0, nbr);
        self.factor -= 1;
        (count, sign * sum)
    }

    /// Try every remaining successor of the least unmatched vertex.
    fn extend(&mut self, to_match: usize) -> (i128, i128) {
        self.lists[self.factor].detach(to_match);
        let mut um = self.lists[self.factor].next_of(to_match);
        let mut sign: i128 = 1;
        let mut count: i128 = 0;
        let mut sum: i128 = 0;
        let mut idx = 0;
        while idx < self.succ[to_match].len() {
            let nbr = self.succ[to_match][idx];
            // walk to nbr; every unmatched vertex bridged flips the sign
            while um < nbr {
                sign = -sign;
                um = self.lists[self.factor].next_of(um);
            }
            if um == nbr {
                self.succ[to_match].remove(idx);
                self.edges_left -= 1;
                self.lists[self.factor].detach(nbr);
                let (c, s) = self.run();
                self.lists[self.factor].attach(nbr);
                self.edges_left += 1;
                self.succ[to_match].insert(idx, nbr);
                count += c;
                sum += sign * s;
            }
            idx += 1;
        }
        self.lists[self.factor].attach(to_match);
        (count, sum)
    }

    /// Like [`run`](Self::run) but stops at the first complete factorization.
    fn any_completion(&mut self) -> bool {
        let Some(to_match) = self.lists[self.factor].first_unmatched() else {
            if self.edges_left == 0 {
                return true;
            }
            self.factor += 1;
            self.lists[self.factor].reset_full();
            let nbr = self.succ[0][0];
            self.succ[0].remove(0);
            self.edges_left -= 1;
            self.lists[self.factor].detach(0);
            self.lists[self.factor].detach(nbr);
            let found = self.any_completion();
            self.lists[self.factor].attach(nbr);
            self.lists[self.factor].attach(0);
            self.edges_left += 1;
            self.succ[0].insert(0, nbr);
            self.factor -= 1;
            return found;
        };
        self.lists[self.factor].detach(to_match);
        let mut um = self.lists[self.factor].next_of(to_match);
        let mut found = false;
        let mut idx = 0;
        while !found && idx < self.succ[to_match].len() {
            let nbr = self.succ[to_match][idx];
            while um < nbr {
                um = self.lists[self.factor].next_of(um);
            }
            if um == nbr {
                self.succ[to_match].remove(idx);
                self.edges_left -= 1;
                self.lists[self.factor].detach(nbr);
                found = self.any_completion();
                self.lists[self.factor].attach(nbr);
                self.edges_left += 1;
                self.succ[to_match].insert(idx, nbr);
            }
            idx += 1;
        }
        self.lists[self.factor].attach(to_match);
        found
    }

    /// Expands the search frontier a few levels down, for parallel runs.
    /// Returns completed leaves folded into `(count, sum)` plus the open
    /// branches as `(branch sign, state)` snapshots.
    fn split(self, depth: usize) -> ((i128, i128), Vec<(i128, Search)>) {
        let mut base = (0i128, 0i128);
        let mut tasks = Vec::new();
        let mut queue = vec![(1i128, self)];
        for _ in 0..depth {
            let mut next = Vec::new();
            for (branch_sign, state) in queue {
                let Some(to_match) = state.lists[state.factor].first_unmatched() else {
                    if state.edges_left == 0 {
                        base.0 += 1;
                        base.1 += branch_sign;
                        continue;
                    }
                    let mut child = state.clone();
                    child.factor += 1;
                    child.lists[child.factor].reset_full();
                    let nbr = child.succ[0][0];
                    let sign = if nbr % 2 == 1 { 1 } else { -1 };
                    child.succ[0].remove(0);
                    child.edges_left -= 1;
                    child.lists[child.factor].detach(0);
                    child.lists[child.factor].detach(nbr);
                    next.push((branch_sign * sign, child));
                    continue;
                };
                let mut um_list = state.lists[state.factor].clone();
                um_list.detach(to_match);
                let mut um = um_list.next_of(to_match);
                let mut sign: i128 = 1;
                for idx in 0..state.succ[to_match].len() {
                    let nbr = state.succ[to_match][idx];
                    while um < nbr {
                        sign = -sign;
                        um = um_list.next_of(um);
                    }
                    if um == nbr {
                        let mut child = state.clone();
                        child.lists[child.factor] = um_list.clone();
                        child.succ[to_match].remove(idx);
                        child.edges_left -= 1;
                        child.lists[child.factor].detach(nbr);
                        next.push((branch_sign * sign, child));
                    }
                }
            }
            queue = next;
        }
        tasks.extend(queue);
        (base, tasks)
    }
}

fn result_from(count: i128, sum: i128) -> SignSumResult {
    SignSumResult {
        factorization_count: BigUint::from(count as u128),
        signed_sum: BigInt::from(sum),
    }
}

/// Signed sum and count over all 1-factorizations of a regular graph of even
/// order. The edgeless graph has exactly the empty factorization, sum `+1`.
pub fn weighted_sum(g: &Graph) -> Result<SignSumResult, GraphError> {
    let k = g.validate_regular_even()?;
    let mut search = Search::new(g, k);
    let (count, sum) = search.next_factor_entry();
    Ok(result_from(count, sum))
}

impl Search {
    /// Entry point: no factor is open yet.
    fn next_factor_entry(&mut self) -> (i128, i128) {
        if self.edges_left == 0 {
            return (1, 1);
        }
        // open factor 0 without the +1 offset of next_factor
        self.factor = 0;
        self.lists[0].reset_full();
        let nbr = self.succ[0][0];
        let sign = if nbr % 2 == 1 { 1 } else { -1 };
        self.succ[0].remove(0);
        self.edges_left -= 1;
        self.lists[0].detach(0);
        self.lists[0].detach(nbr);
        let (count, sum) = self.run();
        self.lists[0].attach(nbr);
        self.lists[0].attach(0);
        self.edges_left += 1;
        self.succ[0].insert(0, nbr);
        (count, sign * sum)
    }
}

/// [`weighted_sum`] with the search tree split across the current rayon
/// thread pool. Exact integer addition is associative, so any schedule
/// returns the identical result.
pub fn weighted_sum_parallel(g: &Graph) -> Result<SignSumResult, GraphError> {
    let k = g.validate_regular_even()?;
    if g.n_edges() == 0 {
        return Ok(result_from(1, 1));
    }
    let mut search = Search::new(g, k);
    // apply the forced seed of the first factor, then fan out
    search.factor = 0;
    let nbr = search.succ[0][0];
    let seed_sign: i128 = if nbr % 2 == 1 { 1 } else { -1 };
    search.succ[0].remove(0);
    search.edges_left -= 1;
    search.lists[0].detach(0);
    search.lists[0].detach(nbr);
    let depth = 4;
    let ((base_count, base_sum), tasks) = search.split(depth);
    let (count, sum) = tasks
        .into_par_iter()
        .map(|(sign, mut state)| {
            let (c, s) = state.run();
            (c, sign * s)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(result_from(base_count + count, seed_sign * (base_sum + sum)))
}

/// Picks the parallel path for graphs large enough to benefit.
pub fn weighted_sum_auto(g: &Graph) -> Result<SignSumResult, GraphError> {
    let k = g.validate_regular_even()?;
    if g.n_vertices() >= 10 && k >= 6 {
        weighted_sum_parallel(g)
    } else {
        weighted_sum(g)
    }
}

/// Factorization count alone (signs skipped in the report, not in the work;
/// the sign bookkeeping is a few percent here).
pub fn count_factorizations(g: &Graph) -> Result<BigUint, GraphError> {
    Ok(weighted_sum(g)?.factorization_count)
}

/// True when at least one 1-factorization exists; stops at the first.
pub fn is_factorable(g: &Graph) -> Result<bool, GraphError> {
    let k = g.validate_regular_even()?;
    if g.n_edges() == 0 {
        return Ok(true);
    }
    let mut search = Search::new(g, k);
    search.factor = 0;
    let nbr = search.succ[0][0];
    search.succ[0].remove(0);
    search.edges_left -= 1;
    search.lists[0].detach(0);
    search.lists[0].detach(nbr);
    Ok(search.any_completion())
}

/// Visits every unordered 1-factorization exactly once, as a list of factors
/// (each a sorted edge list) plus the factorization's sign. Folding the signs
/// reproduces [`weighted_sum`]; this exists for tests, the survey layer and
/// anything that wants the factors themselves.
pub fn enumerate_factorizations(
    g: &Graph,
    mut visit: impl FnMut(&[Vec<Edge>], i32),
) -> Result<(), GraphError> {
    let k = g.validate_regular_even()?;
    struct Enum<'a, F> {
        search: Search,
        factors: Vec<Vec<Edge>>,
        sign: i32,
        visit: &'a mut F,
    }
    impl<F: FnMut(&[Vec<Edge>], i32)> Enum<'_, F> {
        fn run(&mut self) {
            let Some(to_match) = self.search.lists[self.search.factor].first_unmatched() else {
                self.next_factor();
                return;
            };
            self.extend(to_match);
        }
        fn next_factor(&mut self) {
            if self.search.edges_left == 0 {
                (self.visit)(&self.factors, self.sign);
                return;
            }
            let s = &mut self.search;
            s.factor += 1;
            s.lists[s.factor].reset_full();
            let nbr = s.succ[0][0];
            let sign = if nbr % 2 == 1 { 1 } else { -1 };
            s.succ[0].remove(0);
            s.edges_left -= 1;
            s.lists[s.factor].detach(0);
            s.lists[s.factor].detach(nbr);
            self.factors.push(vec![(0, nbr)]);
            self.sign *= sign;
            self.run();
            self.sign *= sign;
            self.factors.pop();
            let s = &mut self.search;
            s.lists[s.factor].attach(nbr);
            s.lists[s.factor].attach(0);
            s.edges_left += 1;
            s.succ[0].insert(0, nbr);
            s.factor -= 1;
        }
        fn extend(&mut self, to_match: usize) {
            let factor_idx = self.search.factor;
            self.search.lists[factor_idx].detach(to_match);
            let mut um = self.search.lists[factor_idx].next_of(to_match);
            let mut sign = 1;
            let mut idx = 0;
            while idx < self.search.succ[to_match].len() {
                let nbr = self.search.succ[to_match][idx];
                while um < nbr {
                    sign = -sign;
                    um = self.search.lists[factor_idx].next_of(um);
                }
                if um == nbr {
                    let s = &mut self.search;
                    s.succ[to_match].remove(idx);
                    s.edges_left -= 1;
                    s.lists[factor_idx].detach(nbr);
                    self.factors.last_mut().unwrap().push((to_match, nbr));
                    self.sign *= sign;
                    self.run();
                    self.sign *= sign;
                    self.factors.last_mut().unwrap().pop();
                    let s = &mut self.search;
                    s.lists[factor_idx].attach(nbr);
                    s.edges_left += 1;
                    s.succ[to_match].insert(idx, nbr);
                }
                idx += 1;
            }
            self.search.lists[factor_idx].attach(to_match);
        }
    }
    if g.n_edges() == 0 {
        visit(&[], 1);
        return Ok(());
    }
    let mut search = Search::new(g, k);
    search.factor = 0;
    let nbr = search.succ[0][0];
    let seed_sign = if nbr % 2 == 1 { 1 } else { -1 };
    search.succ[0].remove(0);
    search.edges_left -= 1;
    search.lists[0].detach(0);
    search.lists[0].detach(nbr);
    let mut state = Enum { search, factors: vec![vec![(0, nbr)]], sign: seed_sign, visit: &mut visit };
    state.run();
    Ok(())
}
