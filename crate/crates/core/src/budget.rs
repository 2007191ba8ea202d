use crate::error::{Error, Result};

/// Cap on the number of search nodes a single exact solver call may expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 100_000_000;

    pub fn new(max_nodes: u64) -> Self {
        Budget { max_nodes }
    }

    pub fn unlimited() -> Self {
        Budget { max_nodes: u64::MAX }
    }

    pub(crate) fn meter(self, stage: &'static str) -> Meter {
        Meter { used: 0, limit: self.max_nodes, stage }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_NODES)
    }
}

/// Running node count for one solver invocation.
#[derive(Debug)]
pub(crate) struct Meter {
    used: u64,
    limit: u64,
    stage: &'static str,
}

impl Meter {
    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded { stage: self.stage, limit: self.limit })
        } else {
            Ok(())
        }
    }
}
