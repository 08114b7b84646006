//! Lazy enumeration of proper colorings of `G - e`.

use super::exact::{EdgeSearch, Step};
use super::{Color, ColoringError, PartialEdgeColoring, SearchBudget};
use crate::graph::{EdgeId, Graph};

/// Limits for one enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Stop after yielding this many colorings.
    pub max_colorings: u64,
    /// Stop after this many search nodes.
    pub max_nodes: u64,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_colorings: 1_000_000,
            max_nodes: u64::MAX,
        }
    }
}

/// Stream of total proper colorings of `G - e` with palette `1..=k`.
///
/// The order is deterministic. With `canonical`, exactly one coloring per
/// color-permutation class is produced: colors appear in first-use order
/// along the search's fixed edge order. Once the stream ends,
/// [`Colorings::is_complete`] tells whether it was exhausted or cut by the
/// budget.
pub struct Colorings<'g> {
    search: EdgeSearch<'g>,
    k: Color,
    yielded: u64,
    budget: EnumerationBudget,
    state: State,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Running,
    Complete,
    Truncated,
}

impl<'g> Colorings<'g> {
    /// `Some(true)` after full exhaustion, `Some(false)` after a budget cut,
    /// `None` while the stream may still produce colorings.
    pub fn is_complete(&self) -> Option<bool> {
        match self.state {
            State::Running => None,
            State::Complete => Some(true),
            State::Truncated => Some(false),
        }
    }

    pub fn yielded(&self) -> u64 {
        self.yielded
    }

    pub fn nodes(&self) -> u64 {
        self.search.nodes
    }
}

impl<'g> Iterator for Colorings<'g> {
    type Item = PartialEdgeColoring<'g>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.state != State::Running {
            return None;
        }
        if self.yielded >= self.budget.max_colorings {
            self.state = State::Truncated;
            return None;
        }
        match self.search.advance() {
            Step::Found => {
                self.yielded += 1;
                Some(self.search.coloring(self.k))
            }
            Step::Exhausted => {
                self.state = State::Complete;
                None
            }
            Step::OverBudget => {
                self.state = State::Truncated;
                None
            }
        }
    }
}

pub fn enumerate_colorings(
    g: &Graph,
    removed: EdgeId,
    k: Color,
    canonical: bool,
    budget: EnumerationBudget,
) -> Result<Colorings<'_>, ColoringError> {
    assert!(removed < g.m(), "edge id {removed} out of range");
    Ok(Colorings {
        search: EdgeSearch::new(g, Some(removed), k, canonical, SearchBudget(budget.max_nodes))?,
        k,
        yielded: 0,
        budget,
        state: State::Running,
    })
}

/// Number of colorings of `G - e`, or `None` if the budget cut it short.
pub fn count_colorings(
    g: &Graph,
    removed: EdgeId,
    k: Color,
    canonical: bool,
    budget: EnumerationBudget,
) -> Result<Option<u64>, ColoringError> {
    let mut it = enumerate_colorings(g, removed, k, canonical, budget)?;
    let n = it.by_ref().count() as u64;
    Ok(it.is_complete().unwrap_or(false).then_some(n))
}
