/// Node budget for the exact search solvers.
///
/// A "node" is one branching decision in a backtracking search. Budgets make
/// exhaustion explicit: when a solver runs out it returns
/// [`Error::Undecided`](crate::Error::Undecided) with the bounds it proved,
/// never an unverified answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl SearchBudget {
    pub const fn new(max_nodes: u64) -> Self {
        Self { max_nodes }
    }

    /// Effectively unlimited; still finite so runaway searches terminate.
    pub const fn unlimited() -> Self {
        Self {
            max_nodes: u64::MAX,
        }
    }
}

impl Default for SearchBudget {
    /// Generous enough for every desk-scale instance in the test corpus while
    /// still bounding pathological inputs.
    fn default() -> Self {
        Self {
            max_nodes: 200_000_000,
        }
    }
}

/// Mutable counter threaded through a single search run.
#[derive(Debug)]
pub(crate) struct BudgetMeter {
    used: u64,
    max: u64,
}

impl BudgetMeter {
    pub(crate) fn new(budget: SearchBudget) -> Self {
        Self {
            used: 0,
            max: budget.max_nodes,
        }
    }

    /// Charge one node; false means the budget is spent.
    #[inline]
    pub(crate) fn charge(&mut self) -> bool {
        if self.used >= self.max {
            return false;
        }
        self.used += 1;
        true
    }

    pub(crate) fn used(&self) -> u64 {
        self.used
    }
}
