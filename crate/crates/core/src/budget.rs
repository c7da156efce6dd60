use std::env;

/// Caps on enumeration sizes. Read from `KLCAP_MAX_ORBIT` by [`SearchBudget::from_env`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest orbit that may be enumerated.
    pub max_orbit: usize,
    /// Largest number of weights the reflection search may visit.
    pub max_states: usize,
}

impl SearchBudget {
    pub const DEFAULT_MAX_ORBIT: usize = 100_000;
    const STATES_PER_ORBIT: usize = 16;

    pub fn with_max_orbit(max_orbit: usize) -> Self {
        SearchBudget {
            max_orbit,
            max_states: max_orbit.saturating_mul(Self::STATES_PER_ORBIT),
        }
    }

    /// Uses `KLCAP_MAX_ORBIT` when set to a positive integer, the default otherwise.
    pub fn from_env() -> Self {
        let max_orbit = env::var("KLCAP_MAX_ORBIT")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .filter(|&v: &usize| v > 0)
            .unwrap_or(Self::DEFAULT_MAX_ORBIT);
        Self::with_max_orbit(max_orbit)
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::from_env()
    }
}
