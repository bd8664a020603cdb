//! Deterministic backtracking search for an orthogonal pair of Latin squares.
//!
//! Both squares are filled together as an exact-cover problem (dancing
//! links, most-constrained item first). The first square is kept in reduced
//! form (first row and first column are `1..=d`) and the second has first row
//! `1..=d`; every orthogonal pair can be brought into that shape by permuting
//! rows, columns and symbols, so an exhausted search is a proof of
//! nonexistence. Options are tried in lexicographic `(row, col, v, w)` order,
//! so the first pair found and the node count depend only on `(d, budget)`.

use std::fmt;

use super::{LatinSquare, MolsPair};

/// Default cap on branch nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchStats {
    pub order: usize,
    /// Options (cell assignments) tried.
    pub nodes: u64,
    pub budget: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(MolsPair),
    /// The reduced search space was exhausted: no orthogonal pair of this order exists.
    NoneExists,
    /// Stopped at the node budget. Says nothing about existence.
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    pub stats: SearchStats,
}

impl SearchResult {
    pub fn pair(&self) -> Option<&MolsPair> {
        match &self.outcome {
            SearchOutcome::Found(p) => Some(p),
            _ => None,
        }
    }

    pub fn into_pair(self) -> Option<MolsPair> {
        match self.outcome {
            SearchOutcome::Found(p) => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for SearchResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let SearchStats { order, nodes, budget } = self.stats;
        match self.outcome {
            SearchOutcome::Found(_) => {
                write!(f, "order {order}: found certified pair after {nodes} nodes")
            }
            SearchOutcome::NoneExists => write!(
                f,
                "order {order}: none exists (exhaustive, {nodes} nodes)"
            ),
            SearchOutcome::BudgetExhausted => write!(
                f,
                "order {order}: budget exhausted after {nodes} of {budget} nodes, none found \
                 (not a nonexistence proof)"
            ),
        }
    }
}

// Exact cover over six item families, each of size d²:
// cell (r,c), V-row (r,a), V-col (c,a), W-row (r,b), W-col (c,b), pair (a,b).
// An option (r,c,a,b) places v_rc = a, w_rc = b and covers one item of each.
const FAMILIES: usize = 6;

/// Array-based dancing links. Node 0 is the root; items are 1..=n_items.
struct Dlx {
    left: Vec<usize>,
    right: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
    item: Vec<usize>,
    size: Vec<usize>,
    option: Vec<usize>,
}

impl Dlx {
    fn new(n_items: usize) -> Self {
        let n = n_items + 1;
        let mut dlx = Self {
            left: (0..n).map(|i| if i == 0 { n_items } else { i - 1 }).collect(),
            right: (0..n).map(|i| if i == n_items { 0 } else { i + 1 }).collect(),
            up: (0..n).collect(),
            down: (0..n).collect(),
            item: (0..n).collect(),
            size: vec![0; n],
            option: vec![usize::MAX; n],
        };
        dlx.size[0] = usize::MAX;
        dlx
    }

    fn add_option(&mut self, id: usize, items: &[usize]) {
        let first = self.left.len();
        for (i, &it) in items.iter().enumerate() {
            let node = first + i;
            let above = self.up[it];
            self.up.push(above);
            self.down.push(it);
            self.down[above] = node;
            self.up[it] = node;
            self.item.push(it);
            self.option.push(id);
            self.size[it] += 1;
            let prev = if i == 0 { first + items.len() - 1 } else { node - 1 };
            let next = if i + 1 == items.len() { first } else { node + 1 };
            self.left.push(prev);
            self.right.push(next);
        }
    }

    fn cover(&mut self, c: usize) {
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = r;
        self.left[r] = l;
        let mut i = self.down[c];
        while i != c {
            let mut j = self.right[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = d;
                self.up[d] = u;
                self.size[self.item[j]] -= 1;
                j = self.right[j];
            }
            i = self.down[i];
        }
    }

    fn uncover(&mut self, c: usize) {
        let mut i = self.up[c];
        while i != c {
            let mut j = self.left[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = j;
                self.up[d] = j;
                self.size[self.item[j]] += 1;
                j = self.left[j];
            }
            i = self.up[i];
        }
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = c;
        self.left[r] = c;
    }

    /// Uncovered item with the fewest remaining options; lowest index on ties.
    fn choose(&self) -> Option<usize> {
        let mut best = None;
        let mut best_size = usize::MAX;
        let mut c = self.right[0];
        while c != 0 {
            if self.size[c] < best_size {
                best = Some(c);
                best_size = self.size[c];
            }
            c = self.right[c];
        }
        best
    }
}

enum Step {
    Solved,
    DeadEnd,
    OutOfBudget,
}

struct Searcher {
    d: usize,
    dlx: Dlx,
    budget: u64,
    nodes: u64,
    chosen: Vec<usize>,
}

impl Searcher {
    fn new(d: usize, budget: u64) -> Self {
        let dd = d * d;
        let mut dlx = Dlx::new(FAMILIES * dd);
        for r in 0..d {
            for c in 0..d {
                for a in 0..d {
                    // reduced form: first row and first column of V are 1..d,
                    // first row of W is 1..d
                    if (r == 0 && a != c) || (c == 0 && a != r) {
                        continue;
                    }
                    for b in 0..d {
                        if r == 0 && b != c {
                            continue;
                        }
                        let items = [
                            1 + r * d + c,
                            1 + dd + r * d + a,
                            1 + 2 * dd + c * d + a,
                            1 + 3 * dd + r * d + b,
                            1 + 4 * dd + c * d + b,
                            1 + 5 * dd + a * d + b,
                        ];
                        dlx.add_option(((r * d + c) * d + a) * d + b, &items);
                    }
                }
            }
        }
        Self {
            d,
            dlx,
            budget,
            nodes: 0,
            chosen: Vec::with_capacity(dd),
        }
    }

    fn solve(&mut self) -> Step {
        let Some(c) = self.dlx.choose() else {
            return Step::Solved;
        };
        if self.dlx.size[c] == 0 {
            return Step::DeadEnd;
        }
        self.dlx.cover(c);
        let mut r = self.dlx.down[c];
        while r != c {
            if self.nodes >= self.budget {
                return Step::OutOfBudget;
            }
            self.nodes += 1;
            self.chosen.push(self.dlx.option[r]);
            let mut j = self.dlx.right[r];
            while j != r {
                self.dlx.cover(self.dlx.item[j]);
                j = self.dlx.right[j];
            }
            match self.solve() {
                Step::DeadEnd => {}
                done => return done,
            }
            let mut j = self.dlx.left[r];
            while j != r {
                self.dlx.uncover(self.dlx.item[j]);
                j = self.dlx.left[j];
            }
            self.chosen.pop();
            r = self.dlx.down[r];
        }
        self.dlx.uncover(c);
        Step::DeadEnd
    }

    fn squares(&self) -> (LatinSquare, LatinSquare) {
        let d = self.d;
        let mut v = vec![0; d * d];
        let mut w = vec![0; d * d];
        for &id in &self.chosen {
            let b = id % d;
            let a = (id / d) % d;
            let cell = id / (d * d);
            v[cell] = a + 1;
            w[cell] = b + 1;
        }
        let build = |cells: &[usize]| {
            LatinSquare::from_fn(d, |j, k| cells[j * d + k]).expect("exact cover yields Latin squares")
        };
        (build(&v), build(&w))
    }
}

/// Searches for an orthogonal pair of order `d` within `node_budget` cell
/// assignments. Budget exhaustion is an outcome, not an error.
pub fn mols_search(d: usize, node_budget: u64) -> SearchResult {
    let stats = |nodes| SearchStats {
        order: d,
        nodes,
        budget: node_budget,
    };
    if d == 0 {
        return SearchResult {
            outcome: SearchOutcome::NoneExists,
            stats: stats(0),
        };
    }
    let mut s = Searcher::new(d, node_budget);
    let outcome = match s.solve() {
        Step::Solved => {
            let (v, w) = s.squares();
            let pair = MolsPair::certify(v, w).expect("search only produces orthogonal pairs");
            SearchOutcome::Found(pair)
        }
        Step::DeadEnd => SearchOutcome::NoneExists,
        Step::OutOfBudget => SearchOutcome::BudgetExhausted,
    };
    SearchResult {
        outcome,
        stats: stats(s.nodes),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::latin::{are_orthogonal, is_latin};

    #[test]
    fn order_two_has_no_pair() {
        let r = mols_search(2, DEFAULT_NODE_BUDGET);
        assert_eq!(r.outcome, SearchOutcome::NoneExists);
        assert!(r.to_string().contains("none exists (exhaustive"));
    }

    #[test]
    fn order_three_and_four_are_found() {
        for d in [3, 4] {
            let r = mols_search(d, DEFAULT_NODE_BUDGET);
            let p = r.pair().expect("pair");
            assert!(is_latin(&p.first().rows()).unwrap());
            assert!(is_latin(&p.second().rows()).unwrap());
            assert!(are_orthogonal(p.first(), p.second()).unwrap());
        }
    }

    #[test]
    fn tiny_budget_is_not_a_proof() {
        let r = mols_search(4, 3);
        assert_eq!(r.outcome, SearchOutcome::BudgetExhausted);
        assert_eq!(r.stats.nodes, 3);
        assert!(r.to_string().contains("not a nonexistence proof"));
    }

    #[test]
    fn search_is_deterministic() {
        assert_eq!(mols_search(5, DEFAULT_NODE_BUDGET), mols_search(5, DEFAULT_NODE_BUDGET));
    }
}
