use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::{in_class, SearchBudget};

/// Knobs shared by the class algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub budget: SearchBudget,
    /// Run on arbitrary graphs without the membership test.
    pub skip_membership: bool,
    /// Minimum odd antihole length searched for in the join-partition case.
    pub min_antihole_len: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            budget: SearchBudget::default(),
            skip_membership: false,
            min_antihole_len: 7,
        }
    }
}

impl Options {
    pub fn with_budget(budget: u64) -> Self {
        Options {
            budget: SearchBudget(budget),
            ..Self::default()
        }
    }

    /// Fails with the forbidden witness unless membership is skipped.
    pub fn require_member(&self, g: &Graph) -> Result<()> {
        if self.skip_membership {
            return Ok(());
        }
        let report = in_class(g, self.budget)?;
        match report.obstruction() {
            Some(w) => Err(Error::NotInClass(w.clone())),
            None => Ok(()),
        }
    }
}
