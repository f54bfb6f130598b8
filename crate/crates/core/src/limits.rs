/// Upper bounds for the exhaustive computations.
///
/// Every quantification over "all subsets" in this crate is exact; when a
/// carrier is larger than the matching bound the operation returns
/// [`Error::SizeGuardExceeded`](crate::Error::SizeGuardExceeded) instead of
/// sampling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Carrier bound for quantifying over all directed subsets.
    pub directed: usize,
    /// Carrier bound for the open-set criterion oracle, which enumerates
    /// every candidate open set and every directed/down-directed pair.
    pub open_set_oracle: usize,
    /// Carrier bound for materializing a topology as its family of opens.
    pub topology: usize,
    /// Largest size handled by exhaustive enumeration of effect algebras.
    pub enumeration: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        directed: 12,
        open_set_oracle: 8,
        topology: 14,
        enumeration: 6,
    };

    pub fn check_directed(&self, size: usize, what: &'static str) -> crate::Result<()> {
        guard(size, self.directed, what)
    }

    pub fn check_topology(&self, size: usize, what: &'static str) -> crate::Result<()> {
        guard(size, self.topology, what)
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}

pub(crate) fn guard(size: usize, limit: usize, what: &'static str) -> crate::Result<()> {
    if size > limit {
        Err(crate::Error::SizeGuardExceeded { what, size, limit })
    } else {
        Ok(())
    }
}
